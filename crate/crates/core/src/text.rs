//! Line-based text formats.
//!
//! Polygon format: one vertex per line as two base-10 integers separated by
//! whitespace. Blank lines are skipped and lines starting with `#` are
//! comments. Vertex order is the cycle order.
//!
//! Trace format: the sections `initial`, `steps`, and `final`, where the two
//! polygon sections hold vertex lines and each step line reads
//! `REMOVE <index> (<x>,<y>) m=<m> m*=<m*>` (or `INSERT ...`), carrying the
//! counts measured after the operation. Formatting and parsing round-trip
//! byte-exactly.
//!
//! Census format: a `<n> classes` summary line, then one record per class: a
//! `# class` comment line with the invariants followed by the
//! representative's vertices in polygon format.

use std::fmt::Write as _;

use crate::classify::EquivalenceClass;
use crate::point::LatticePoint;
use crate::reduction::{ElementaryOp, OpKind, ReductionTrace, TraceStep};
use crate::reflexive::ReflexivePolygon;

/// A parse failure, pointing at the 1-based input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn is_noise(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

fn parse_vertex(line_no: usize, line: &str) -> Result<LatticePoint, ParseError> {
    let mut it = line.split_whitespace();
    let x = it
        .next()
        .ok_or_else(|| err(line_no, "expected two integers"))?;
    let y = it
        .next()
        .ok_or_else(|| err(line_no, "expected two integers, found one"))?;
    if it.next().is_some() {
        return Err(err(line_no, "expected exactly two integers"));
    }
    let x: i64 = x
        .parse()
        .map_err(|_| err(line_no, format!("bad integer {x:?}")))?;
    let y: i64 = y
        .parse()
        .map_err(|_| err(line_no, format!("bad integer {y:?}")))?;
    Ok(LatticePoint::new(x, y))
}

/// Parses the polygon text format into the raw vertex list.
pub fn parse_polygon_text(input: &str) -> Result<Vec<LatticePoint>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        if is_noise(line) {
            continue;
        }
        out.push(parse_vertex(i + 1, line)?);
    }
    Ok(out)
}

/// One `x y` line per vertex.
pub fn format_polygon_text(vertices: &[LatticePoint]) -> String {
    let mut out = String::new();
    for v in vertices {
        let _ = writeln!(out, "{} {}", v.x, v.y);
    }
    out
}

/// Serializes a reduction trace; see the module docs for the grammar.
pub fn format_trace(trace: &ReductionTrace) -> String {
    let mut out = String::new();
    out.push_str("initial\n");
    out.push_str(&format_polygon_text(trace.initial.strict().vertices()));
    out.push_str("steps\n");
    for step in &trace.steps {
        let kind = match step.op.kind {
            OpKind::Remove => "REMOVE",
            OpKind::Insert => "INSERT",
        };
        let _ = writeln!(
            out,
            "{kind} {} ({},{}) m={} m*={}",
            step.op.index, step.op.point.x, step.op.point.y, step.m_after, step.m_star_after
        );
    }
    out.push_str("final\n");
    out.push_str(&format_polygon_text(trace.final_polygon.strict().vertices()));
    out
}

fn parse_step(line_no: usize, line: &str) -> Result<TraceStep, ParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let [kind, index, point, m, m_star] = tokens[..] else {
        return Err(err(line_no, "expected `KIND index (x,y) m=.. m*=..`"));
    };
    let kind = match kind {
        "REMOVE" => OpKind::Remove,
        "INSERT" => OpKind::Insert,
        other => return Err(err(line_no, format!("unknown operation {other:?}"))),
    };
    let index: usize = index
        .parse()
        .map_err(|_| err(line_no, format!("bad index {index:?}")))?;
    let inner = point
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err(line_no, format!("bad point {point:?}")))?;
    let (x, y) = inner
        .split_once(',')
        .ok_or_else(|| err(line_no, format!("bad point {point:?}")))?;
    let x: i64 = x
        .parse()
        .map_err(|_| err(line_no, format!("bad integer {x:?}")))?;
    let y: i64 = y
        .parse()
        .map_err(|_| err(line_no, format!("bad integer {y:?}")))?;
    let m = m
        .strip_prefix("m=")
        .and_then(|s| s.parse::<i64>().ok())
        .ok_or_else(|| err(line_no, format!("bad count {m:?}")))?;
    let m_star = m_star
        .strip_prefix("m*=")
        .and_then(|s| s.parse::<i64>().ok())
        .ok_or_else(|| err(line_no, format!("bad count {m_star:?}")))?;
    Ok(TraceStep {
        op: ElementaryOp {
            kind,
            index,
            point: LatticePoint::new(x, y),
        },
        m_after: m,
        m_star_after: m_star,
    })
}

/// Parses the trace format back into a [`ReductionTrace`]. The two polygon
/// sections are validated like any other polygon input.
pub fn parse_trace(input: &str) -> Result<ReductionTrace, ParseError> {
    #[derive(PartialEq)]
    enum Section {
        Preamble,
        Initial,
        Steps,
        Final,
    }
    let mut section = Section::Preamble;
    let mut initial: Vec<LatticePoint> = Vec::new();
    let mut final_: Vec<LatticePoint> = Vec::new();
    let mut steps: Vec<TraceStep> = Vec::new();
    let mut section_line = 0usize;

    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        if is_noise(line) {
            continue;
        }
        match line.trim() {
            "initial" => {
                section = Section::Initial;
                section_line = line_no;
                continue;
            }
            "steps" => {
                section = Section::Steps;
                section_line = line_no;
                continue;
            }
            "final" => {
                section = Section::Final;
                section_line = line_no;
                continue;
            }
            _ => {}
        }
        match section {
            Section::Preamble => return Err(err(line_no, "expected an `initial` section")),
            Section::Initial => initial.push(parse_vertex(line_no, line)?),
            Section::Steps => steps.push(parse_step(line_no, line)?),
            Section::Final => final_.push(parse_vertex(line_no, line)?),
        }
    }

    let build = |verts: Vec<LatticePoint>, at: usize| {
        ReflexivePolygon::from_vertices(verts)
            .map_err(|e| err(at, format!("invalid polygon section: {e}")))
    };
    if section != Section::Final {
        return Err(err(section_line.max(1), "missing `final` section"));
    }
    Ok(ReductionTrace {
        initial: build(initial, 1)?,
        steps,
        final_polygon: build(final_, section_line)?,
    })
}

/// Formats the census. Classes that share the whole invariant triple are
/// pointed out at the end; the normal form is what tells them apart.
pub fn format_census(classes: &[EquivalenceClass]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} classes", classes.len());
    for (i, class) in classes.iter().enumerate() {
        let _ = writeln!(
            out,
            "\n# class {}: m={} m*={} area2={}",
            i + 1,
            class.m,
            class.m_star,
            class.area2
        );
        out.push_str(&format_polygon_text(class.representative.strict().vertices()));
    }
    // Invariant collisions, resolved by normal-form comparison.
    let mut noted = vec![false; classes.len()];
    let mut notes = String::new();
    for i in 0..classes.len() {
        if noted[i] {
            continue;
        }
        let key = (classes[i].m, classes[i].m_star, classes[i].area2);
        let group: Vec<usize> = (i..classes.len())
            .filter(|&j| (classes[j].m, classes[j].m_star, classes[j].area2) == key)
            .collect();
        if group.len() > 1 {
            for &j in &group {
                noted[j] = true;
            }
            let ids: Vec<String> = group.iter().map(|j| (j + 1).to_string()).collect();
            let _ = writeln!(
                notes,
                "# classes {} share invariants m={} m*={} area2={}; distinguished by normal form",
                ids.join(", "),
                key.0,
                key.1,
                key.2
            );
        }
    }
    if !notes.is_empty() {
        out.push('\n');
        out.push_str(&notes);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::reduce_to_parallelogram;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn polygon_text_roundtrip_with_comments() {
        let input = "# a square\n1 1\n-1 1\n\n-1 -1\n1 -1\n";
        let verts = parse_polygon_text(input).unwrap();
        assert_eq!(verts, vec![p(1, 1), p(-1, 1), p(-1, -1), p(1, -1)]);
        let printed = format_polygon_text(&verts);
        assert_eq!(parse_polygon_text(&printed).unwrap(), verts);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let e = parse_polygon_text("1 2\n3").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_polygon_text("1 2\n# ok\nx y").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_polygon_text("1 2 3").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn trace_roundtrip_is_exact() {
        let square =
            ReflexivePolygon::from_vertices(vec![p(1, 1), p(-1, 1), p(-1, -1), p(1, -1)]).unwrap();
        let triangle = ReflexivePolygon::from_vertices(vec![p(-1, -1), p(1, 0), p(0, 1)]).unwrap();
        for m in [square, triangle] {
            let trace = reduce_to_parallelogram(&m).unwrap();
            let text = format_trace(&trace);
            let parsed = parse_trace(&text).unwrap();
            assert_eq!(parsed, trace);
            assert_eq!(format_trace(&parsed), text);
            parsed.replay().unwrap();
        }
    }

    #[test]
    fn trace_parser_rejects_garbage() {
        assert!(parse_trace("1 1\n").is_err());
        assert!(parse_trace("initial\n1 1\n-1 1\n-1 -1\n1 -1\nsteps\nHOP 0 (1,1) m=7 m*=5\nfinal\n").is_err());
        assert!(parse_trace("initial\n1 1\n-1 1\n-1 -1\n1 -1\nsteps\n").is_err());
    }

    #[test]
    fn census_format_mentions_collisions_only_when_present() {
        let classes = crate::classify::enumerate_reflexive(1).unwrap();
        let text = format_census(&classes);
        assert!(text.starts_with(&format!("{} classes", classes.len())));
        // Every vertex block re-parses.
        let reparsed = parse_polygon_text(&text.lines().skip(1).collect::<Vec<_>>().join("\n"));
        assert!(reparsed.is_ok());
    }
}
