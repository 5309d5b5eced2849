//! Curriculum-based course timetabling (`.ctt`) reader.
//!
//! One event is created per lecture. Two lectures conflict when they belong
//! to the same course, to courses with the same teacher, or to courses that
//! share a curriculum. Day `d`, period `q` maps to timeslot
//! `d * periods_per_day + q + 1`.

use std::collections::HashMap;

use crate::error::ParseError;
use crate::graph::{Color, Graph};
use crate::instance::{Event, UtpInstance};

struct Course {
    name: String,
    teacher: String,
    lectures: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Courses,
    Rooms,
    Curricula,
    Unavailability,
    RoomConstraints,
    End,
}

pub fn parse_cctt(text: &str) -> Result<UtpInstance, ParseError> {
    let mut name = String::new();
    let mut headers: HashMap<String, (usize, usize)> = HashMap::new();
    let mut section = Section::Header;
    let mut seen = [false; 4];
    let mut courses: Vec<Course> = Vec::new();
    let mut course_index: HashMap<String, usize> = HashMap::new();
    let mut rooms = 0usize;
    let mut curricula: Vec<Vec<usize>> = Vec::new();
    let mut unavailable: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let next = match line {
            "COURSES:" => Some((Section::Courses, 0)),
            "ROOMS:" => Some((Section::Rooms, 1)),
            "CURRICULA:" => Some((Section::Curricula, 2)),
            "UNAVAILABILITY_CONSTRAINTS:" => Some((Section::Unavailability, 3)),
            "ROOM_CONSTRAINTS:" => Some((Section::RoomConstraints, usize::MAX)),
            "END." => Some((Section::End, usize::MAX)),
            _ => None,
        };
        if let Some((s, slot)) = next {
            if slot != usize::MAX {
                if seen[slot] {
                    return Err(ParseError::at_line(line_no, format!("duplicate section `{line}`")));
                }
                seen[slot] = true;
            }
            section = s;
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match section {
            Section::Header => {
                let (key, value) = line
                    .split_once(':')
                    .ok_or_else(|| ParseError::at_line(line_no, "expected `Key: value` header line"))?;
                let key = key.trim().to_ascii_lowercase();
                let value = value.trim();
                if key == "name" {
                    name = value.to_string();
                } else {
                    let n = value
                        .parse()
                        .map_err(|_| ParseError::at_line(line_no, format!("header `{key}` is not an integer")))?;
                    headers.insert(key, (n, line_no));
                }
            }
            Section::Courses => {
                if fields.len() < 5 {
                    return Err(ParseError::at_line(
                        line_no,
                        "course line needs: id teacher lectures min_days students",
                    ));
                }
                let lectures = integer(fields[2], line_no, "lecture count")?;
                if course_index.insert(fields[0].to_string(), courses.len()).is_some() {
                    return Err(ParseError::at_line(line_no, format!("course `{}` declared twice", fields[0])));
                }
                courses.push(Course {
                    name: fields[0].to_string(),
                    teacher: fields[1].to_string(),
                    lectures,
                });
            }
            Section::Rooms => {
                if fields.len() < 2 {
                    return Err(ParseError::at_line(line_no, "room line needs: id capacity"));
                }
                integer(fields[1], line_no, "room capacity")?;
                rooms += 1;
            }
            Section::Curricula => {
                if fields.len() < 2 {
                    return Err(ParseError::at_line(line_no, "curriculum line needs: id count members..."));
                }
                let count = integer(fields[1], line_no, "curriculum size")?;
                let members = &fields[2..];
                if members.len() != count {
                    return Err(ParseError::at_line(
                        line_no,
                        format!("curriculum `{}` lists {} courses, announces {count}", fields[0], members.len()),
                    ));
                }
                let members = members
                    .iter()
                    .map(|c| {
                        course_index
                            .get(*c)
                            .copied()
                            .ok_or_else(|| ParseError::at_line(line_no, format!("unknown course `{c}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                curricula.push(members);
            }
            Section::Unavailability => {
                if fields.len() != 3 {
                    return Err(ParseError::at_line(line_no, "unavailability line needs: course day period"));
                }
                let course = *course_index
                    .get(fields[0])
                    .ok_or_else(|| ParseError::at_line(line_no, format!("unknown course `{}`", fields[0])))?;
                let day = integer(fields[1], line_no, "day")?;
                let period = integer(fields[2], line_no, "period")?;
                unavailable.push((course, day, period, line_no));
            }
            Section::RoomConstraints => {}
            Section::End => {
                return Err(ParseError::at_line(line_no, "content after `END.`"));
            }
        }
    }

    for (slot, title) in ["COURSES:", "ROOMS:", "CURRICULA:", "UNAVAILABILITY_CONSTRAINTS:"]
        .iter()
        .enumerate()
    {
        if !seen[slot] {
            return Err(ParseError::at_line(last_line, format!("missing section `{title}`")));
        }
    }
    let header = |key: &str| {
        headers
            .get(key)
            .copied()
            .ok_or_else(|| ParseError::at_line(last_line, format!("missing header `{key}`")))
    };
    let (days, _) = header("days")?;
    let (periods, _) = header("periods_per_day")?;
    for (key, found) in [("courses", courses.len()), ("rooms", rooms), ("curricula", curricula.len())] {
        let (announced, line_no) = header(key)?;
        if announced != found {
            return Err(ParseError::at_line(
                line_no,
                format!("header announces {announced} {key}, file lists {found}"),
            ));
        }
    }
    for key in ["constraints", "unavailabilityconstraints"] {
        if let Some(&(announced, line_no)) = headers.get(key) {
            if announced != unavailable.len() {
                return Err(ParseError::at_line(
                    line_no,
                    format!("header announces {announced} unavailability constraints, file lists {}", unavailable.len()),
                ));
            }
        }
    }
    let timeslots = days * periods;
    if timeslots == 0 {
        return Err(ParseError::at_line(last_line, "instance has no timeslots"));
    }

    let mut blocked = vec![vec![false; timeslots]; courses.len()];
    for &(course, day, period, line_no) in &unavailable {
        if day >= days || period >= periods {
            return Err(ParseError::at_line(
                line_no,
                format!("slot (day {day}, period {period}) outside {days}x{periods}"),
            ));
        }
        blocked[course][day * periods + period] = true;
    }

    let nc = courses.len();
    let mut conflict = vec![vec![false; nc]; nc];
    for i in 0..nc {
        for j in 0..nc {
            conflict[i][j] = i == j || courses[i].teacher == courses[j].teacher;
        }
    }
    for members in &curricula {
        for &i in members {
            for &j in members {
                conflict[i][j] = true;
            }
        }
    }

    let mut first_event = Vec::with_capacity(nc);
    let mut events = Vec::new();
    let mut availability = Vec::new();
    for (c, course) in courses.iter().enumerate() {
        first_event.push(events.len());
        let slots: Vec<Color> = (0..timeslots)
            .filter(|&s| !blocked[c][s])
            .map(|s| (s + 1) as Color)
            .collect();
        if course.lectures > 0 && slots.is_empty() {
            return Err(ParseError::at_line(
                last_line,
                format!("course `{}` has no available timeslot", course.name),
            ));
        }
        for _ in 0..course.lectures {
            events.push(Event {
                label: course.name.clone(),
            });
            availability.push(slots.clone());
        }
    }
    let mut edges = Vec::new();
    for i in 0..nc {
        for j in i..nc {
            if !conflict[i][j] {
                continue;
            }
            let ei = first_event[i]..first_event[i] + courses[i].lectures;
            for u in ei {
                let ej = first_event[j]..first_event[j] + courses[j].lectures;
                edges.extend(ej.filter(|&v| v != u).map(|v| (u, v)));
            }
        }
    }
    let graph = Graph::new(events.len(), edges).expect("event ids are in range");
    UtpInstance::new(name, events, timeslots, rooms, graph, availability, true)
        .map_err(|e| ParseError::at_line(last_line, e.to_string()))
}

fn integer(field: &str, line_no: usize, what: &str) -> Result<usize, ParseError> {
    field
        .parse()
        .map_err(|_| ParseError::at_line(line_no, format!("{what} `{field}` is not a non-negative integer")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SINGLE: &str = "Name: one\nCourses: 1\nRooms: 1\nDays: 1\nPeriods_per_day: 3\nCurricula: 0\nConstraints: 0\n\n\
        COURSES:\nc1 t1 1 1 10\n\nROOMS:\nr1 20\n\nCURRICULA:\n\nUNAVAILABILITY_CONSTRAINTS:\n\nEND.\n";

    #[test]
    fn single_lecture() {
        let inst = parse_cctt(SINGLE).unwrap();
        assert_eq!(inst.name(), "one");
        assert_eq!(inst.event_count(), 1);
        assert_eq!(inst.timeslots(), 3);
        assert_eq!(inst.availability()[0], vec![1, 2, 3]);
        assert_eq!(inst.conflicts().edge_count(), 0);
    }

    #[test]
    fn shared_teacher_conflicts() {
        let text = "Courses: 3\nRooms: 1\nDays: 1\nPeriods_per_day: 4\nCurricula: 0\n\
            COURSES:\na t1 2 1 1\nb t1 1 1 1\nc t2 1 1 1\nROOMS:\nr 1\nCURRICULA:\nUNAVAILABILITY_CONSTRAINTS:\nEND.\n";
        let inst = parse_cctt(text).unwrap();
        let g = inst.conflicts();
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn missing_section() {
        let text = SINGLE.replace("ROOMS:\nr1 20\n", "");
        let err = parse_cctt(&text).unwrap_err();
        assert!(err.message.contains("ROOMS:"), "{err}");
    }

    #[test]
    fn missing_unavailability_section() {
        let text = SINGLE.replace("UNAVAILABILITY_CONSTRAINTS:\n", "");
        let err = parse_cctt(&text).unwrap_err();
        assert!(err.message.contains("UNAVAILABILITY_CONSTRAINTS"), "{err}");
    }

    #[test]
    fn course_count_mismatch() {
        let text = SINGLE.replace("Courses: 1", "Courses: 2");
        let err = parse_cctt(&text).unwrap_err();
        assert_eq!(err.position, 2);
    }

    #[test]
    fn unknown_course_in_unavailability() {
        let text = SINGLE.replace("UNAVAILABILITY_CONSTRAINTS:\n", "UNAVAILABILITY_CONSTRAINTS:\nzz 0 0\n");
        let text = text.replace("Constraints: 0", "Constraints: 1");
        let err = parse_cctt(&text).unwrap_err();
        assert_eq!(err.position, 18);
        assert!(err.message.contains("zz"));
    }

    #[test]
    fn fully_blocked_course_rejected() {
        let text = SINGLE
            .replace("UNAVAILABILITY_CONSTRAINTS:\n", "UNAVAILABILITY_CONSTRAINTS:\nc1 0 0\nc1 0 1\nc1 0 2\n")
            .replace("Constraints: 0", "Constraints: 3");
        let err = parse_cctt(&text).unwrap_err();
        assert!(err.message.contains("no available timeslot"));
    }

    #[test]
    fn slot_out_of_range() {
        let text = SINGLE
            .replace("UNAVAILABILITY_CONSTRAINTS:\n", "UNAVAILABILITY_CONSTRAINTS:\nc1 0 3\n")
            .replace("Constraints: 0", "Constraints: 1");
        assert!(parse_cctt(&text).is_err());
    }
}
