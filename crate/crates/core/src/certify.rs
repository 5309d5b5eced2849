//! Per-instance connectedness certificates and the tables that collect them.
//!
//! For an instance with `p` timeslots and conflict graph `G`, the clash-free
//! timetables are Kempe-connected when `p > deg(G)`. When events have
//! availability restrictions, the same holds when `p` exceeds the
//! subdegeneracy bound of the reduced graph with respect to its fixed set.

use std::fmt::Write;

use crate::error::{Error, ParseError};
use crate::graph::degeneracy;
use crate::instance::{detect_tim_variant, parse_cctt, parse_tim, read_normalized, TimVariant, UtpInstance};
use crate::reduction::{fixed_set, reduce_instance};
use crate::subdeg::subdeg_ub;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceFormat {
    Cctt,
    TimItc,
    TimMn,
    Normalized,
    Auto,
}

/// Parses instance text. `Auto` picks the format from the file extension
/// (`.ctt`, `.tim`, `.utp`) and, for `.tim`, from the amount of data.
pub fn parse_instance(text: &str, format: InstanceFormat, extension: Option<&str>) -> Result<UtpInstance, ParseError> {
    match format {
        InstanceFormat::Cctt => parse_cctt(text),
        InstanceFormat::TimItc => parse_tim(text, TimVariant::Itc2007),
        InstanceFormat::TimMn => parse_tim(text, TimVariant::MetaheuristicsNetwork),
        InstanceFormat::Normalized => read_normalized(text),
        InstanceFormat::Auto => match extension.map(str::to_ascii_lowercase).as_deref() {
            Some("ctt") => parse_cctt(text),
            Some("utp") => read_normalized(text),
            Some("tim") => {
                let variant = detect_tim_variant(text)
                    .ok_or_else(|| ParseError::at_token(0, "token count matches neither .tim layout"))?;
                parse_tim(text, variant)
            }
            _ => parse_cctt(text).or_else(|first| match detect_tim_variant(text) {
                Some(variant) => parse_tim(text, variant),
                None => Err(first),
            }),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertRecord {
    pub instance: String,
    pub timeslots: usize,
    pub degeneracy: usize,
    /// Absent when the instance carries no availability data.
    pub subdeg_ub: Option<usize>,
    pub connected_basic: bool,
    pub connected_availability: Option<bool>,
}

pub fn certify_instance(name: &str, instance: &UtpInstance) -> Result<CertRecord, Error> {
    let p = instance.timeslots();
    let (deg, _) = degeneracy(instance.conflicts());
    let subdeg = if instance.has_availability_data() {
        let reduced = reduce_instance(instance)?;
        let fixed = fixed_set(&reduced);
        Some(subdeg_ub(reduced.graph(), fixed.as_set()).value)
    } else {
        None
    };
    Ok(CertRecord {
        instance: name.to_string(),
        timeslots: p,
        degeneracy: deg,
        subdeg_ub: subdeg,
        connected_basic: p > deg,
        connected_availability: subdeg.map(|s| p > s),
    })
}


#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub source: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<CertRecord>,
    pub failures: Vec<Failure>,
    pub tool_version: String,
    pub timestamp: Option<String>,
}

fn or_na<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

impl Report {
    pub fn new(tool_version: impl Into<String>, timestamp: Option<String>) -> Self {
        Report {
            records: Vec::new(),
            failures: Vec::new(),
            tool_version: tool_version.into(),
            timestamp,
        }
    }

    fn header_comment(&self, prefix: &str) -> String {
        let mut out = format!("{prefix} kempe-recon {}", self.tool_version);
        if let Some(ts) = &self.timestamp {
            write!(out, " at {ts}").unwrap();
        }
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header_comment("#");
        out.push_str("instance,p,deg,subdeg_ub,connected_basic,connected_availability\n");
        for r in &self.records {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.instance,
                r.timeslots,
                r.degeneracy,
                or_na(r.subdeg_ub),
                r.connected_basic,
                or_na(r.connected_availability)
            )
            .unwrap();
        }
        for f in &self.failures {
            writeln!(out, "# failed {}: {}", f.source, f.message.replace('\n', " ")).unwrap();
        }
        out
    }

    /// Table with the connected verdicts in bold, as `**value**`.
    pub fn to_markdown(&self) -> String {
        let mut out = self.header_comment("<!--");
        out.insert_str(out.len() - 1, " -->");
        out.push_str("\n| instance | p | deg(G) | subdeg_ub |\n|---|---:|---:|---:|\n");
        let bold = |value: String, yes: bool| if yes { format!("**{value}**") } else { value };
        for r in &self.records {
            writeln!(
                out,
                "| {} | {} | {} | {} |",
                r.instance,
                r.timeslots,
                bold(r.degeneracy.to_string(), r.connected_basic),
                bold(or_na(r.subdeg_ub), r.connected_availability == Some(true))
            )
            .unwrap();
        }
        if !self.failures.is_empty() {
            out.push_str("\nFailed to read:\n\n");
            for f in &self.failures {
                writeln!(out, "- {}: {}", f.source, f.message.replace('\n', " ")).unwrap();
            }
        }
        out
    }
}
