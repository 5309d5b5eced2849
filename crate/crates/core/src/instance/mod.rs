//! Timetabling instances reduced to what certification needs: events, the
//! number of timeslots, the conflict graph and per-event available timeslots.

mod ctt;
mod normalized;
mod tim;

pub use ctt::parse_cctt;
pub use normalized::{read_normalized, write_normalized};
pub use tim::{detect_tim_variant, parse_tim, TimVariant};

use crate::error::{Error, Result};
use crate::graph::{Color, Graph};

/// One event (a lecture), labelled with the course it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    pub label: String,
}

/// A university timetabling instance.
///
/// Timeslots are numbered `1..=timeslots`; `availability[e]` lists the slots
/// event `e` may be placed in, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtpInstance {
    name: String,
    events: Vec<Event>,
    timeslots: usize,
    rooms: usize,
    conflicts: Graph,
    availability: Vec<Vec<Color>>,
    availability_data: bool,
}

impl UtpInstance {
    /// Validates that the conflict graph has one vertex per event and that
    /// every availability list is a non-empty subset of the timeslots.
    pub fn new(
        name: String,
        events: Vec<Event>,
        timeslots: usize,
        rooms: usize,
        conflicts: Graph,
        mut availability: Vec<Vec<Color>>,
        availability_data: bool,
    ) -> Result<Self> {
        if timeslots == 0 {
            return Err(Error::EmptyPalette);
        }
        if conflicts.vertex_count() != events.len() {
            return Err(Error::LengthMismatch {
                got: conflicts.vertex_count(),
                expected: events.len(),
            });
        }
        if availability.len() != events.len() {
            return Err(Error::ListCount {
                got: availability.len(),
                expected: events.len(),
            });
        }
        for (e, slots) in availability.iter_mut().enumerate() {
            slots.sort_unstable();
            slots.dedup();
            if slots.is_empty() {
                return Err(Error::EmptyList(e));
            }
            if let Some(&bad) = slots.iter().find(|&&s| s == 0 || s as usize > timeslots) {
                return Err(Error::ColorOutOfRange {
                    color: bad,
                    palette: timeslots as Color,
                });
            }
        }
        Ok(UtpInstance {
            name,
            events,
            timeslots,
            rooms,
            conflicts,
            availability,
            availability_data,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn event_count(&self) -> usize {
        self.events.len()
    }

    pub fn timeslots(&self) -> usize {
        self.timeslots
    }

    pub fn rooms(&self) -> usize {
        self.rooms
    }

    pub fn conflicts(&self) -> &Graph {
        &self.conflicts
    }

    pub fn availability(&self) -> &[Vec<Color>] {
        &self.availability
    }

    /// False when the source format carries no availability information
    /// (every slot is then available to every event).
    pub fn has_availability_data(&self) -> bool {
        self.availability_data
    }

    /// Events whose label equals `label`, ascending.
    pub fn events_of(&self, label: &str) -> Vec<usize> {
        self.events
            .iter()
            .enumerate()
            .filter_map(|(i, e)| (e.label == label).then_some(i))
            .collect()
    }
}
