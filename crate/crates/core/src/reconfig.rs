//! Kempe reconfiguration: an explicit sequence of Kempe exchanges turning one
//! proper coloring into another, processed vertex by vertex along an ordering.
//!
//! Stage `i` works on `H_i`, the subgraph induced by the first `i` vertices of
//! the ordering. It resets the working coloring to the source, replays every
//! exchange collected so far on `H_i`, and, whenever the new vertex `v_i`
//! would glue together two Kempe components of `H_{i-1}`, first moves `v_i`
//! to a color unused around it. A final elementary recoloring gives `v_i` its
//! target color. After stage `i` the replay takes `H_i` from the source to the
//! target, so after the last stage it does so for the whole graph.
//!
//! With `k` colors, the recoloring always finds a free color as long as
//! `k > pred(v_i)` for every vertex that needs one.

use std::collections::BTreeSet;
use std::fmt::Write;

use thiserror::Error;

use crate::error::{Error, ParseError};
use crate::graph::{self, Color, Coloring, Graph, KempeExchange, Vertex, VertexOrdering, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// Moves a vertex out of the way right before an exchange that would
    /// otherwise merge components through it.
    Correction,
    /// Gives a vertex its target color at the end of its stage.
    Final,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangePlan {
    exchanges: Vec<KempeExchange>,
    kinds: Vec<StepKind>,
    source: Coloring,
    target: Coloring,
    ordering: VertexOrdering,
    palette: Color,
}

impl ExchangePlan {
    pub fn exchanges(&self) -> &[KempeExchange] {
        &self.exchanges
    }

    pub fn kinds(&self) -> &[StepKind] {
        &self.kinds
    }

    pub fn source(&self) -> &Coloring {
        &self.source
    }

    pub fn target(&self) -> &Coloring {
        &self.target
    }

    pub fn ordering(&self) -> &VertexOrdering {
        &self.ordering
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.exchanges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exchanges.is_empty()
    }

    /// Corrective exchanges as `(vertex, from, to)`.
    pub fn corrections(&self) -> impl Iterator<Item = (Vertex, Color, Color)> + '_ {
        self.exchanges
            .iter()
            .zip(&self.kinds)
            .filter(|(_, &k)| k == StepKind::Correction)
            .map(|(x, _)| (x.anchor(), x.color_a(), x.color_b()))
    }

    /// The exchanges with cancelling neighbours removed; see [`compact`].
    pub fn compacted(&self) -> Vec<KempeExchange> {
        compact(&self.exchanges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconfigError {
    #[error("no free color for vertex {vertex} at stage {stage}: palette {palette}, neighbours use {used:?}")]
    Stuck {
        vertex: Vertex,
        stage: usize,
        palette: Color,
        used: Vec<Color>,
    },
    #[error(transparent)]
    Invalid(#[from] Error),
}

pub fn kempe_reconfigure(
    graph: &Graph,
    ordering: &VertexOrdering,
    source: &Coloring,
    target: &Coloring,
    palette: Color,
) -> Result<ExchangePlan, ReconfigError> {
    ordering.require_total(graph)?;
    let source = source.with_palette(palette)?;
    let target = target.with_palette(palette)?;
    graph::require_proper(graph, &source)?;
    graph::require_proper(graph, &target)?;

    let n = graph.vertex_count();
    let mut plan: Vec<KempeExchange> = Vec::new();
    let mut kinds: Vec<StepKind> = Vec::new();
    let mut in_h = vec![false; n];
    let mut col = source.as_slice().to_vec();

    for (stage, vi) in ordering.iter().enumerate() {
        in_h[vi] = true;
        col.copy_from_slice(source.as_slice());
        let mut next = Vec::with_capacity(plan.len() + 2);
        let mut next_kinds = Vec::with_capacity(plan.len() + 2);

        for (exchange, kind) in plan.iter().zip(&kinds) {
            // name the pair so that `a` is not the current color of v_i
            let (a, b) = if exchange.color_a() == col[vi] {
                (exchange.color_b(), exchange.color_a())
            } else {
                (exchange.color_a(), exchange.color_b())
            };
            if col[vi] == b {
                let a_neighbors = graph
                    .neighbors(vi)
                    .iter()
                    .filter(|&&w| in_h[w] && col[w] == a)
                    .count();
                if a_neighbors >= 2 {
                    let used: BTreeSet<Color> = graph
                        .neighbors(vi)
                        .iter()
                        .filter(|&&w| in_h[w])
                        .map(|&w| col[w])
                        .collect();
                    let free = (1..=palette)
                        .find(|&c| c != b && !used.contains(&c))
                        .ok_or_else(|| ReconfigError::Stuck {
                            vertex: vi,
                            stage,
                            palette,
                            used: used.iter().copied().collect(),
                        })?;
                    let fix = KempeExchange::new(b, free, vi)?;
                    apply_within(graph, &in_h, &mut col, &fix)?;
                    next.push(fix);
                    next_kinds.push(StepKind::Correction);
                }
            }
            apply_within(graph, &in_h, &mut col, exchange)?;
            next.push(*exchange);
            next_kinds.push(*kind);
        }

        let want = target.color(vi);
        if col[vi] != want {
            let last = KempeExchange::new(want, col[vi], vi)?;
            apply_within(graph, &in_h, &mut col, &last)?;
            next.push(last);
            next_kinds.push(StepKind::Final);
        }
        debug_assert!(ordering.as_slice()[..=stage]
            .iter()
            .all(|&v| col[v] == target.color(v)));
        plan = next;
        kinds = next_kinds;
    }

    Ok(ExchangePlan {
        exchanges: plan,
        kinds,
        source,
        target,
        ordering: ordering.clone(),
        palette,
    })
}

fn apply_within(graph: &Graph, within: &[bool], colors: &mut [Color], x: &KempeExchange) -> Result<(), Error> {
    let component = graph::component_within(graph, colors, Some(within), x.color_a(), x.color_b(), x.anchor())?;
    graph::swap_on(colors, &component, x.color_a(), x.color_b());
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub final_coloring: Coloring,
    /// The start coloring followed by the coloring after each exchange.
    pub trace: Vec<Coloring>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("start coloring is invalid: {0}")]
    Start(Error),
    #[error("exchange {step} {exchange} cannot be applied: {source}")]
    Step {
        step: usize,
        exchange: KempeExchange,
        source: Error,
    },
}

/// Applies the exchanges in order on the whole graph.
pub fn replay(graph: &Graph, start: &Coloring, exchanges: &[KempeExchange]) -> Result<Replay, ReplayError> {
    graph::require_proper(graph, start).map_err(ReplayError::Start)?;
    let mut current = start.clone();
    let mut trace = Vec::with_capacity(exchanges.len() + 1);
    trace.push(current.clone());
    for (step, x) in exchanges.iter().enumerate() {
        graph::apply_exchange_in_place(graph, &mut current, x).map_err(|source| ReplayError::Step {
            step,
            exchange: *x,
            source,
        })?;
        trace.push(current.clone());
    }
    Ok(Replay {
        final_coloring: current,
        trace,
    })
}

/// Outcome of checking a plan against its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub reaches_target: bool,
    pub all_proper: bool,
    /// Whether no vertex of the given set ever changed color.
    pub fixed_untouched: Option<bool>,
    /// Distinct colors seen anywhere along the replay, endpoints included.
    pub colors_used: usize,
    /// Distinct colors seen on vertices outside the given set.
    pub free_colors_used: Option<usize>,
    /// First exchange that could not be applied.
    pub failed_step: Option<usize>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.reaches_target && self.all_proper && self.fixed_untouched != Some(false) && self.failed_step.is_none()
    }
}

pub fn verify_plan(
    graph: &Graph,
    source: &Coloring,
    target: &Coloring,
    exchanges: &[KempeExchange],
    fixed: Option<&VertexSet>,
) -> Verdict {
    let mut current = source.clone();
    let mut all_proper = graph::is_proper(graph, &current);
    let mut colors: BTreeSet<Color> = current.as_slice().iter().copied().collect();
    let mut free_colors: BTreeSet<Color> = BTreeSet::new();
    let note_free = |c: &Coloring, set: &mut BTreeSet<Color>| {
        if let Some(f) = fixed {
            set.extend(graph.vertices().filter(|&v| !f.contains(v)).map(|v| c.color(v)));
        }
    };
    note_free(&current, &mut free_colors);
    let mut untouched = true;
    let mut failed_step = None;
    for (step, x) in exchanges.iter().enumerate() {
        let before = current.clone();
        if graph::apply_exchange_in_place(graph, &mut current, x).is_err() {
            failed_step = Some(step);
            break;
        }
        all_proper &= graph::is_proper(graph, &current);
        colors.extend([x.color_a(), x.color_b()].into_iter().filter(|&c| current.as_slice().contains(&c)));
        note_free(&current, &mut free_colors);
        if let Some(f) = fixed {
            untouched &= f.members().iter().all(|&v| before.color(v) == current.color(v));
        }
    }
    Verdict {
        reaches_target: failed_step.is_none() && current.as_slice() == target.as_slice(),
        all_proper,
        fixed_untouched: fixed.map(|_| untouched),
        colors_used: colors.len(),
        free_colors_used: fixed.map(|_| free_colors.len()),
        failed_step,
    }
}

/// Drops pairs of identical consecutive exchanges, which cancel out, until
/// none remain.
pub fn compact(exchanges: &[KempeExchange]) -> Vec<KempeExchange> {
    let mut out: Vec<KempeExchange> = Vec::with_capacity(exchanges.len());
    for x in exchanges {
        if out.last() == Some(x) {
            out.pop();
        } else {
            out.push(*x);
        }
    }
    out
}

/// `k <palette>` followed by one `x <a> <b> <anchor>` line per exchange, with
/// 1-based anchors.
pub fn write_plan(palette: Color, exchanges: &[KempeExchange]) -> String {
    let mut out = format!("k {palette}\n");
    for x in exchanges {
        writeln!(out, "x {} {} {}", x.color_a(), x.color_b(), x.anchor() + 1).unwrap();
    }
    out
}

pub fn read_plan(text: &str) -> Result<(Color, Vec<KempeExchange>), ParseError> {
    let mut palette = None;
    let mut exchanges = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| ParseError::at_line(line_no, format!("`{s}` is not a non-negative integer")))
        };
        match fields.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["k", k] if palette.is_none() && exchanges.is_empty() => palette = Some(num(k)? as Color),
            ["x", a, b, u] => {
                let k = palette.ok_or_else(|| ParseError::at_line(line_no, "exchange before `k` line"))?;
                let (a, b, u) = (num(a)? as Color, num(b)? as Color, num(u)?);
                if a == 0 || b == 0 || a > k || b > k || u == 0 {
                    return Err(ParseError::at_line(line_no, "colors must be in 1..=k and anchors 1-based"));
                }
                let x = KempeExchange::new(a, b, u - 1).map_err(|e| ParseError::at_line(line_no, e.to_string()))?;
                exchanges.push(x);
            }
            _ => return Err(ParseError::at_line(line_no, "expected `k <palette>` or `x <a> <b> <anchor>`")),
        }
    }
    let palette = palette.ok_or_else(|| ParseError::at_line(0, "missing `k` line"))?;
    Ok((palette, exchanges))
}
