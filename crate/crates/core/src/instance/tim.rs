//! Post-enrollment `.tim` readers.
//!
//! Both variants are whitespace-separated integers:
//! `events rooms features students`, one size per room, then the
//! student x event attendance matrix, the room x feature matrix and the
//! event x feature matrix. The ITC2007 variant appends an event x 45
//! availability matrix and an event x event precedence matrix.
//!
//! Two events conflict iff some student attends both. There are always 45
//! timeslots.

use crate::error::ParseError;
use crate::graph::{Color, Graph};
use crate::instance::{Event, UtpInstance};

pub const TIM_TIMESLOTS: usize = 45;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimVariant {
    /// ITC2007 post-enrollment track, with availability and precedence data.
    Itc2007,
    /// Metaheuristics Network format, no availability data.
    MetaheuristicsNetwork,
}

struct Tokens<'a> {
    iter: std::str::SplitAsciiWhitespace<'a>,
    offset: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens {
            iter: text.split_ascii_whitespace(),
            offset: 0,
        }
    }

    fn next_int(&mut self, what: &str) -> Result<i64, ParseError> {
        let at = self.offset;
        let token = self
            .iter
            .next()
            .ok_or_else(|| ParseError::at_token(at, format!("truncated input: expected {what}")))?;
        self.offset += 1;
        token
            .parse()
            .map_err(|_| ParseError::at_token(at, format!("{what}: `{token}` is not an integer")))
    }

    fn next_count(&mut self, what: &str) -> Result<usize, ParseError> {
        let at = self.offset;
        let v = self.next_int(what)?;
        usize::try_from(v).map_err(|_| ParseError::at_token(at, format!("{what} must be non-negative")))
    }

    fn next_bit(&mut self, what: &str) -> Result<bool, ParseError> {
        let at = self.offset;
        match self.next_int(what)? {
            0 => Ok(false),
            1 => Ok(true),
            other => Err(ParseError::at_token(at, format!("{what}: expected 0 or 1, got {other}"))),
        }
    }

    fn skip_bits(&mut self, count: usize, what: &str) -> Result<(), ParseError> {
        for _ in 0..count {
            self.next_bit(what)?;
        }
        Ok(())
    }
}

struct Header {
    events: usize,
    rooms: usize,
    features: usize,
    students: usize,
}

fn header(tokens: &mut Tokens<'_>) -> Result<Header, ParseError> {
    Ok(Header {
        events: tokens.next_count("event count")?,
        rooms: tokens.next_count("room count")?,
        features: tokens.next_count("feature count")?,
        students: tokens.next_count("student count")?,
    })
}

fn token_count(h: &Header, variant: TimVariant) -> usize {
    let base = 4 + h.rooms + h.students * h.events + h.rooms * h.features + h.events * h.features;
    match variant {
        TimVariant::MetaheuristicsNetwork => base,
        TimVariant::Itc2007 => base + h.events * TIM_TIMESLOTS + h.events * h.events,
    }
}

/// Picks the variant whose layout matches the number of tokens in `text`.
pub fn detect_tim_variant(text: &str) -> Option<TimVariant> {
    let h = header(&mut Tokens::new(text)).ok()?;
    let total = text.split_ascii_whitespace().count();
    [TimVariant::Itc2007, TimVariant::MetaheuristicsNetwork]
        .into_iter()
        .find(|&v| token_count(&h, v) == total)
}

pub fn parse_tim(text: &str, variant: TimVariant) -> Result<UtpInstance, ParseError> {
    let mut tokens = Tokens::new(text);
    let h = header(&mut tokens)?;
    for _ in 0..h.rooms {
        tokens.next_count("room size")?;
    }

    let mut edges = Vec::new();
    let mut attended = Vec::new();
    for _ in 0..h.students {
        attended.clear();
        for e in 0..h.events {
            if tokens.next_bit("attendance")? {
                attended.push(e);
            }
        }
        for (i, &u) in attended.iter().enumerate() {
            edges.extend(attended[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    tokens.skip_bits(h.rooms * h.features, "room feature")?;
    tokens.skip_bits(h.events * h.features, "event feature")?;

    let all: Vec<Color> = (1..=TIM_TIMESLOTS as Color).collect();
    let availability = match variant {
        TimVariant::MetaheuristicsNetwork => vec![all; h.events],
        TimVariant::Itc2007 => {
            let mut lists = Vec::with_capacity(h.events);
            for e in 0..h.events {
                let row = tokens.offset;
                let mut slots = Vec::new();
                for s in 0..TIM_TIMESLOTS {
                    if tokens.next_bit("availability")? {
                        slots.push((s + 1) as Color);
                    }
                }
                if slots.is_empty() {
                    return Err(ParseError::at_token(row, format!("event {} has no available timeslot", e + 1)));
                }
                lists.push(slots);
            }
            for _ in 0..h.events * h.events {
                let at = tokens.offset;
                let v = tokens.next_int("precedence")?;
                if !(-1..=1).contains(&v) {
                    return Err(ParseError::at_token(at, format!("precedence: expected -1, 0 or 1, got {v}")));
                }
            }
            lists
        }
    };
    if tokens.iter.next().is_some() {
        return Err(ParseError::at_token(tokens.offset, "unexpected trailing data"));
    }

    let events = (1..=h.events)
        .map(|i| Event {
            label: format!("e{i}"),
        })
        .collect();
    let graph = Graph::new(h.events, edges).expect("event ids are in range");
    let has_data = variant == TimVariant::Itc2007;
    UtpInstance::new(String::new(), events, TIM_TIMESLOTS, h.rooms, graph, availability, has_data)
        .map_err(|e| ParseError::at_token(0, e.to_string()))
}
