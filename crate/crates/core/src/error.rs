use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by graph, coloring and reduction operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} appears twice in the ordering")]
    DuplicateInOrdering(usize),
    #[error("vertex {0} does not appear in the ordering")]
    NotInOrdering(usize),
    #[error("ordering covers {got} of {expected} vertices")]
    IncompleteOrdering { got: usize, expected: usize },
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },
    #[error("color {color} outside the palette 1..={palette}")]
    ColorOutOfRange { color: u32, palette: u32 },
    #[error("palette must contain at least one color")]
    EmptyPalette,
    #[error("a Kempe exchange needs two distinct colors, got {0} twice")]
    EqualColors(u32),
    #[error("vertex {vertex} has color {color}, which is neither {a} nor {b}")]
    AnchorColor { vertex: usize, color: u32, a: u32, b: u32 },
    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    Improper(usize, usize),
    #[error("color list of vertex {0} is empty")]
    EmptyList(usize),
    #[error("expected {expected} color lists, got {got}")]
    ListCount { got: usize, expected: usize },
    #[error("enumeration refused: {what} (limit {limit}, requested {requested}, search space about {estimate})")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
        estimate: u128,
    },
    #[error("{0}")]
    Precondition(String),
}

/// A malformed input file. `line` is 1-based for line-oriented formats; for
/// token streams it holds the 0-based token offset instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location} {position}: {message}")]
pub struct ParseError {
    pub location: Location,
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Line,
    Token,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Line => f.write_str("line"),
            Location::Token => f.write_str("token"),
        }
    }
}

impl ParseError {
    pub fn at_line(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            location: Location::Line,
            position: line,
            message: message.into(),
        }
    }

    pub fn at_token(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            location: Location::Token,
            position: offset,
            message: message.into(),
        }
    }
}
