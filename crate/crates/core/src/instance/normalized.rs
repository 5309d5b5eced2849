//! Line-oriented dump of a [`UtpInstance`], stable byte for byte:
//!
//! ```text
//! instance <name>
//! timeslots <p>
//! rooms <r>
//! availability-data yes|no
//! events <n>
//! event <id> <label>        (one per event, ascending id)
//! edges <m>
//! e <u> <v>                 (u < v, ascending)
//! avail <id> <slot>...      (one per event, slots ascending)
//! end
//! ```
//!
//! Event ids are 1-based.

use std::fmt::Write;

use crate::error::ParseError;
use crate::graph::{Color, Graph};
use crate::instance::{Event, UtpInstance};

pub fn write_normalized(inst: &UtpInstance) -> String {
    let mut out = String::new();
    writeln!(out, "instance {}", inst.name()).unwrap();
    writeln!(out, "timeslots {}", inst.timeslots()).unwrap();
    writeln!(out, "rooms {}", inst.rooms()).unwrap();
    let flag = if inst.has_availability_data() { "yes" } else { "no" };
    writeln!(out, "availability-data {flag}").unwrap();
    writeln!(out, "events {}", inst.event_count()).unwrap();
    for (i, e) in inst.events().iter().enumerate() {
        writeln!(out, "event {} {}", i + 1, e.label).unwrap();
    }
    writeln!(out, "edges {}", inst.conflicts().edge_count()).unwrap();
    for (u, v) in inst.conflicts().edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    for (i, slots) in inst.availability().iter().enumerate() {
        write!(out, "avail {}", i + 1).unwrap();
        for s in slots {
            write!(out, " {s}").unwrap();
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
    line_no: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Result<&'a str, ParseError> {
        let (idx, line) = self
            .iter
            .next()
            .ok_or_else(|| ParseError::at_line(self.line_no + 1, "unexpected end of input"))?;
        self.line_no = idx + 1;
        Ok(line)
    }

    /// Returns the remainder after `keyword `.
    fn keyed(&mut self, keyword: &str) -> Result<&'a str, ParseError> {
        let line = self.next()?;
        if line == keyword {
            return Ok("");
        }
        line.strip_prefix(keyword)
            .and_then(|rest| rest.strip_prefix(' '))
            .ok_or_else(|| ParseError::at_line(self.line_no, format!("expected `{keyword}`")))
    }

    fn number(&self, text: &str) -> Result<usize, ParseError> {
        text.parse()
            .map_err(|_| ParseError::at_line(self.line_no, format!("`{text}` is not a non-negative integer")))
    }

    fn expect_id(&self, field: Option<&str>, expected: usize) -> Result<(), ParseError> {
        let id = self.number(field.unwrap_or(""))?;
        if id != expected {
            return Err(ParseError::at_line(self.line_no, format!("expected id {expected}, got {id}")));
        }
        Ok(())
    }
}

pub fn read_normalized(text: &str) -> Result<UtpInstance, ParseError> {
    let mut lines = Lines {
        iter: text.lines().enumerate(),
        line_no: 0,
    };
    let name = lines.keyed("instance")?.to_string();
    let timeslots = {
        let t = lines.keyed("timeslots")?;
        lines.number(t)?
    };
    let rooms = {
        let t = lines.keyed("rooms")?;
        lines.number(t)?
    };
    let has_data = match lines.keyed("availability-data")? {
        "yes" => true,
        "no" => false,
        other => return Err(ParseError::at_line(lines.line_no, format!("expected yes/no, got `{other}`"))),
    };
    let n = {
        let t = lines.keyed("events")?;
        lines.number(t)?
    };
    let mut events = Vec::with_capacity(n);
    for i in 1..=n {
        let rest = lines.keyed("event")?;
        let (id, label) = rest.split_once(' ').unwrap_or((rest, ""));
        lines.expect_id(Some(id), i)?;
        events.push(Event {
            label: label.to_string(),
        });
    }
    let m = {
        let t = lines.keyed("edges")?;
        lines.number(t)?
    };
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let rest = lines.keyed("e")?;
        let mut f = rest.split(' ');
        let u = lines.number(f.next().unwrap_or(""))?;
        let v = lines.number(f.next().unwrap_or(""))?;
        if u == 0 || v == 0 || u > n || v > n || u == v || f.next().is_some() {
            return Err(ParseError::at_line(lines.line_no, "malformed edge"));
        }
        edges.push((u - 1, v - 1));
    }
    let mut availability = Vec::with_capacity(n);
    for i in 1..=n {
        let rest = lines.keyed("avail")?;
        let mut f = rest.split(' ');
        lines.expect_id(f.next(), i)?;
        let slots = f
            .map(|s| lines.number(s).map(|s| s as Color))
            .collect::<Result<Vec<_>, _>>()?;
        availability.push(slots);
    }
    if lines.next()? != "end" {
        return Err(ParseError::at_line(lines.line_no, "expected `end`"));
    }
    let graph = Graph::new(n, edges).expect("edge endpoints validated");
    if graph.edge_count() != m {
        return Err(ParseError::at_line(lines.line_no, "duplicate edges"));
    }
    let line_no = lines.line_no;
    UtpInstance::new(name, events, timeslots, rooms, graph, availability, has_data)
        .map_err(|e| ParseError::at_line(line_no, e.to_string()))
}
