//! Line-oriented space documents.
//!
//! A document describes either a soft space (`[universe]`, `[parameters]`,
//! `[carrier]`, `[basis]` or `[opens]`, optional `[covers]` and
//! `[subsets]`) or a plain ground space (no `[parameters]`/`[carrier]`,
//! `[base]` or `[opens]` with bare point sets). Assignments are written one
//! named set per line:
//!
//! ```text
//! S_A1: r1={b}; r2={b,c}
//! ```
//!
//! Parameters carrying the empty set are omitted. Parsing resolves every
//! name immediately, so typos fail with the offending line number, and
//! documents reserialize to a canonical form that reparses equal.

use std::fmt::Write as _;
use std::sync::Arc;

use softgt_core::{Frame, GtSpace, ParamSet, PointSet, SetFamily, SoftBasis, SoftSet, SoftSpace, Universe};

use crate::CliError;

/// Canonical per-parameter assignment: `(parameter index, point indices)`,
/// sorted, empty rows omitted.
pub type Assignment = Vec<(usize, Vec<usize>)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftDocument {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    pub carrier: Assignment,
    /// `[basis]` generates the union closure; `[opens]` asserts the family
    /// is already union-closed.
    pub explicit_opens: bool,
    pub sets: Vec<(String, Assignment)>,
    pub covers: Vec<(String, Vec<String>)>,
    pub subsets: Vec<(String, Assignment)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundDocument {
    pub universe: Vec<String>,
    pub explicit_opens: bool,
    pub sets: Vec<(String, Vec<usize>)>,
    pub covers: Vec<(String, Vec<String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceDocument {
    Soft(SoftDocument),
    Ground(GroundDocument),
}

/// A soft document compiled to a live space with its named sets resolved.
pub struct BuiltSoft {
    pub space: SoftSpace,
    pub named: Vec<(String, SoftSet)>,
    pub covers: Vec<(String, Vec<String>)>,
}

pub struct BuiltGround {
    pub space: GtSpace,
    pub named: Vec<(String, PointSet)>,
    pub covers: Vec<(String, Vec<String>)>,
}

pub enum BuiltSpace {
    Soft(BuiltSoft),
    Ground(BuiltGround),
}

impl BuiltSoft {
    pub fn lookup(&self, name: &str) -> Result<&SoftSet, CliError> {
        self.named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| CliError::Input(format!("no named set '{name}' in the document")))
    }

    /// Display a set by its document name when one matches, else by value.
    pub fn describe(&self, s: &SoftSet) -> String {
        for (name, named) in &self.named {
            if named == s {
                return format!("{name} = {s}");
            }
        }
        if s == self.space.carrier() {
            return format!("carrier = {s}");
        }
        s.to_string()
    }
}

impl BuiltGround {
    pub fn lookup(&self, name: &str) -> Result<&PointSet, CliError> {
        self.named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| CliError::Input(format!("no named set '{name}' in the document")))
    }
}

fn err(path: &str, line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        path: path.to_string(),
        line,
        msg: msg.into(),
    }
}

struct Section {
    name: String,
    line: usize,
    entries: Vec<(usize, String)>,
}

fn split_sections(text: &str, path: &str) -> Result<Vec<Section>, CliError> {
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| err(path, line_no, "unterminated section header"))?
                .trim()
                .to_string();
            sections.push(Section {
                name,
                line: line_no,
                entries: Vec::new(),
            });
        } else {
            let section = sections
                .last_mut()
                .ok_or_else(|| err(path, line_no, "content before any [section]"))?;
            section.entries.push((line_no, line.to_string()));
        }
    }
    Ok(sections)
}

/// `{a, b, c}` to point indices; empty braces allowed.
fn parse_point_set(
    body: &str,
    universe: &Universe,
    path: &str,
    line: usize,
) -> Result<Vec<usize>, CliError> {
    let inner = body
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| err(path, line, format!("expected {{...}}, found '{body}'")))?;
    let mut points = Vec::new();
    for token in inner.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let idx = universe
            .point_index(token)
            .map_err(|_| err(path, line, format!("unknown point '{token}'")))?;
        points.push(idx);
    }
    points.sort_unstable();
    points.dedup();
    Ok(points)
}

/// `r1={a,b}; r2={c}` to a canonical assignment.
fn parse_assignment(
    body: &str,
    universe: &Universe,
    params: &ParamSet,
    path: &str,
    line: usize,
) -> Result<Assignment, CliError> {
    let mut rows: Assignment = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for part in body.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (param, set) = part
            .split_once('=')
            .ok_or_else(|| err(path, line, format!("expected 'param={{...}}', found '{part}'")))?;
        let param = param.trim();
        let r = params
            .param_index(param)
            .map_err(|_| err(path, line, format!("unknown parameter '{param}'")))?;
        let points = parse_point_set(set, universe, path, line)?;
        if seen.contains(&r) {
            return Err(err(path, line, format!("parameter '{param}' assigned twice")));
        }
        seen.push(r);
        if !points.is_empty() {
            rows.push((r, points));
        }
    }
    rows.sort_by_key(|(r, _)| *r);
    Ok(rows)
}

fn parse_named_line(text: &str, path: &str, line: usize) -> Result<(String, String), CliError> {
    let (name, body) = text
        .split_once(':')
        .ok_or_else(|| err(path, line, "expected 'Name: ...'"))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(err(path, line, "empty set name"));
    }
    Ok((name.to_string(), body.trim().to_string()))
}

pub fn parse(text: &str, path: &str) -> Result<SpaceDocument, CliError> {
    let sections = split_sections(text, path)?;
    let has = |name: &str| sections.iter().any(|s| s.name == name);
    for s in &sections {
        match s.name.as_str() {
            "universe" | "parameters" | "carrier" | "basis" | "opens" | "base" | "covers"
            | "subsets" => {}
            other => return Err(err(path, s.line, format!("unknown section [{other}]"))),
        }
    }
    let soft = has("parameters") || has("carrier");
    let names = |section: &str| -> Vec<(usize, String)> {
        sections
            .iter()
            .filter(|s| s.name == section)
            .flat_map(|s| s.entries.clone())
            .collect()
    };

    let universe_tokens: Vec<String> = names("universe")
        .iter()
        .flat_map(|(_, l)| l.split_whitespace().map(str::to_string).collect::<Vec<_>>())
        .collect();
    let universe_line = sections
        .iter()
        .find(|s| s.name == "universe")
        .map(|s| s.line)
        .ok_or_else(|| err(path, 1, "missing [universe] section"))?;
    let universe = Universe::new(universe_tokens.clone())
        .map_err(|e| err(path, universe_line, e.to_string()))?;

    if soft {
        let param_tokens: Vec<String> = names("parameters")
            .iter()
            .flat_map(|(_, l)| l.split_whitespace().map(str::to_string).collect::<Vec<_>>())
            .collect();
        let param_line = sections
            .iter()
            .find(|s| s.name == "parameters")
            .map(|s| s.line)
            .ok_or_else(|| err(path, universe_line, "soft document missing [parameters]"))?;
        let params = ParamSet::new(param_tokens.clone())
            .map_err(|e| err(path, param_line, e.to_string()))?;

        let mut carrier: Assignment = Vec::new();
        for (line, text) in names("carrier") {
            let rows = parse_assignment(&text, &universe, &params, path, line)?;
            for (r, pts) in rows {
                if carrier.iter().any(|(seen, _)| *seen == r) {
                    return Err(err(
                        path,
                        line,
                        format!("carrier assigns parameter '{}' twice", params.param_name(r)),
                    ));
                }
                carrier.push((r, pts));
            }
        }
        carrier.sort_by_key(|(r, _)| *r);

        let explicit_opens = has("opens");
        if explicit_opens && has("basis") {
            let line = sections.iter().find(|s| s.name == "opens").unwrap().line;
            return Err(err(path, line, "document has both [basis] and [opens]"));
        }
        let mut sets = Vec::new();
        for (line, text) in names(if explicit_opens { "opens" } else { "basis" }) {
            let (name, body) = parse_named_line(&text, path, line)?;
            if sets.iter().any(|(n, _)| *n == name) {
                return Err(err(path, line, format!("duplicate set name '{name}'")));
            }
            sets.push((name, parse_assignment(&body, &universe, &params, path, line)?));
        }
        let mut subsets = Vec::new();
        for (line, text) in names("subsets") {
            let (name, body) = parse_named_line(&text, path, line)?;
            if subsets.iter().any(|(n, _)| *n == name) || sets.iter().any(|(n, _)| *n == name) {
                return Err(err(path, line, format!("duplicate set name '{name}'")));
            }
            subsets.push((name, parse_assignment(&body, &universe, &params, path, line)?));
        }
        let mut covers = Vec::new();
        for (line, text) in names("covers") {
            let (name, body) = parse_named_line(&text, path, line)?;
            let members: Vec<String> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect();
            for m in &members {
                if !sets.iter().any(|(n, _)| n == m) && !subsets.iter().any(|(n, _)| n == m) {
                    return Err(err(path, line, format!("cover references unknown set '{m}'")));
                }
            }
            covers.push((name, members));
        }
        Ok(SpaceDocument::Soft(SoftDocument {
            universe: universe_tokens,
            parameters: param_tokens,
            carrier,
            explicit_opens,
            sets,
            covers,
            subsets,
        }))
    } else {
        let explicit_opens = has("opens");
        let mut sets = Vec::new();
        for (line, text) in names(if explicit_opens { "opens" } else { "base" }) {
            let (name, body) = parse_named_line(&text, path, line)?;
            if sets.iter().any(|(n, _)| *n == name) {
                return Err(err(path, line, format!("duplicate set name '{name}'")));
            }
            sets.push((name, parse_point_set(&body, &universe, path, line)?));
        }
        let mut covers = Vec::new();
        for (line, text) in names("covers") {
            let (name, body) = parse_named_line(&text, path, line)?;
            let members: Vec<String> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect();
            for m in &members {
                if !sets.iter().any(|(n, _)| n == m) {
                    return Err(err(path, line, format!("cover references unknown set '{m}'")));
                }
            }
            covers.push((name, members));
        }
        Ok(SpaceDocument::Ground(GroundDocument {
            universe: universe_tokens,
            explicit_opens,
            sets,
            covers,
        }))
    }
}

fn write_assignment(out: &mut String, parameters: &[String], universe: &[String], a: &Assignment) {
    let parts: Vec<String> = a
        .iter()
        .map(|(r, pts)| {
            let names: Vec<&str> = pts.iter().map(|&x| universe[x].as_str()).collect();
            format!("{}={{{}}}", parameters[*r], names.join(","))
        })
        .collect();
    out.push_str(&parts.join("; "));
}

/// Canonical text form; `parse(serialize(d)) == d`.
pub fn serialize(doc: &SpaceDocument) -> String {
    let mut out = String::new();
    match doc {
        SpaceDocument::Soft(d) => {
            writeln!(out, "[universe]").unwrap();
            writeln!(out, "{}", d.universe.join(" ")).unwrap();
            writeln!(out, "\n[parameters]").unwrap();
            writeln!(out, "{}", d.parameters.join(" ")).unwrap();
            writeln!(out, "\n[carrier]").unwrap();
            if !d.carrier.is_empty() {
                write_assignment(&mut out, &d.parameters, &d.universe, &d.carrier);
                out.push('\n');
            }
            writeln!(out, "\n[{}]", if d.explicit_opens { "opens" } else { "basis" }).unwrap();
            for (name, a) in &d.sets {
                write!(out, "{name}:").unwrap();
                if !a.is_empty() {
                    out.push(' ');
                    write_assignment(&mut out, &d.parameters, &d.universe, a);
                }
                out.push('\n');
            }
            if !d.subsets.is_empty() {
                writeln!(out, "\n[subsets]").unwrap();
                for (name, a) in &d.subsets {
                    write!(out, "{name}:").unwrap();
                    if !a.is_empty() {
                        out.push(' ');
                        write_assignment(&mut out, &d.parameters, &d.universe, a);
                    }
                    out.push('\n');
                }
            }
            if !d.covers.is_empty() {
                writeln!(out, "\n[covers]").unwrap();
                for (name, members) in &d.covers {
                    writeln!(out, "{name}: {}", members.join(" ")).unwrap();
                }
            }
        }
        SpaceDocument::Ground(d) => {
            writeln!(out, "[universe]").unwrap();
            writeln!(out, "{}", d.universe.join(" ")).unwrap();
            writeln!(out, "\n[{}]", if d.explicit_opens { "opens" } else { "base" }).unwrap();
            for (name, pts) in &d.sets {
                let names: Vec<&str> = pts.iter().map(|&x| d.universe[x].as_str()).collect();
                writeln!(out, "{name}: {{{}}}", names.join(",")).unwrap();
            }
            if !d.covers.is_empty() {
                writeln!(out, "\n[covers]").unwrap();
                for (name, members) in &d.covers {
                    writeln!(out, "{name}: {}", members.join(" ")).unwrap();
                }
            }
        }
    }
    out
}

fn soft_set_from(frame: &Arc<Frame>, a: &Assignment) -> SoftSet {
    let n = frame.universe().len();
    let mut rows = vec![PointSet::empty(n); frame.params().len()];
    for (r, pts) in a {
        rows[*r] = PointSet::from_indices(n, pts.iter().copied());
    }
    SoftSet::from_rows(frame.clone(), rows)
}

/// Compile the document to a live space; construction errors (basis member
/// escaping the carrier, a non-union-closed explicit family) surface as
/// core errors.
pub fn build(doc: &SpaceDocument) -> Result<BuiltSpace, CliError> {
    match doc {
        SpaceDocument::Soft(d) => {
            let frame = Frame::new(
                Universe::new(d.universe.clone()).map_err(CliError::from)?,
                ParamSet::new(d.parameters.clone()).map_err(CliError::from)?,
            );
            let carrier = soft_set_from(&frame, &d.carrier);
            let mut named: Vec<(String, SoftSet)> = Vec::new();
            let mut members = Vec::new();
            for (name, a) in &d.sets {
                let s = soft_set_from(&frame, a);
                named.push((name.clone(), s.clone()));
                members.push(s);
            }
            let space = if d.explicit_opens {
                SoftSpace::from_opens(carrier, members)?
            } else {
                SoftSpace::generate(carrier, &SoftBasis::new(members))?
            };
            for (name, a) in &d.subsets {
                named.push((name.clone(), soft_set_from(&frame, a)));
            }
            Ok(BuiltSpace::Soft(BuiltSoft {
                space,
                named,
                covers: d.covers.clone(),
            }))
        }
        SpaceDocument::Ground(d) => {
            let universe = Arc::new(Universe::new(d.universe.clone()).map_err(CliError::from)?);
            let n = universe.len();
            let mut named: Vec<(String, PointSet)> = Vec::new();
            let mut members = Vec::new();
            for (name, pts) in &d.sets {
                let s = PointSet::from_indices(n, pts.iter().copied());
                named.push((name.clone(), s.clone()));
                members.push(s);
            }
            let space = if d.explicit_opens {
                GtSpace::from_opens(universe, members)?
            } else {
                GtSpace::generate(universe, &SetFamily::new(members))?
            };
            Ok(BuiltSpace::Ground(BuiltGround {
                space,
                named,
                covers: d.covers.clone(),
            }))
        }
    }
}

/// Bundled fixtures, by name.
pub fn fixture(name: &str) -> Option<&'static str> {
    match name {
        "example_3_2" => Some(include_str!("../fixtures/example_3_2.sgt")),
        "ones_n3" => Some(include_str!("../fixtures/ones_n3.sgt")),
        "pairs_m2" => Some(include_str!("../fixtures/pairs_m2.gt")),
        _ => None,
    }
}

pub const FIXTURE_NAMES: &[&str] = &["example_3_2", "ones_n3", "pairs_m2"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_build_and_round_trip() {
        for name in FIXTURE_NAMES {
            let text = fixture(name).unwrap();
            let doc = parse(text, name).unwrap();
            build(&doc).unwrap();
            let again = parse(&serialize(&doc), name).unwrap();
            assert_eq!(doc, again, "{name}");
        }
    }

    #[test]
    fn the_main_fixture_is_the_five_open_space() {
        let doc = parse(fixture("example_3_2").unwrap(), "example_3_2").unwrap();
        match build(&doc).unwrap() {
            BuiltSpace::Soft(built) => {
                assert_eq!(built.space.opens().len(), 5);
                assert!(built.space.is_strong());
                assert_eq!(built.space.regular_opens().len(), 2);
            }
            BuiltSpace::Ground(_) => panic!("soft fixture"),
        }
    }

    #[test]
    fn duplicate_parameter_in_one_assignment_is_rejected() {
        let text = "[universe]\na\n[parameters]\nr1\n[carrier]\nr1={a}\n[basis]\nU: r1={}; r1={a}\n";
        let e = parse(text, "t").unwrap_err();
        assert!(e.to_string().contains("assigned twice"), "{e}");
        assert!(e.to_string().contains("t:8"), "{e}");
    }

    #[test]
    fn basis_and_opens_together_are_rejected() {
        let text = "[universe]\na\n[parameters]\nr1\n[carrier]\nr1={a}\n[basis]\n[opens]\n";
        let e = parse(text, "t").unwrap_err();
        assert!(e.to_string().contains("both"), "{e}");
    }

    #[test]
    fn unknown_section_is_rejected_with_its_line() {
        let text = "[universe]\na\n\n[nonsense]\n";
        let e = parse(text, "t").unwrap_err();
        assert!(e.to_string().starts_with("t:4:"), "{e}");
    }

    #[test]
    fn cover_member_resolution_happens_at_parse_time() {
        let text = "[universe]\na\n[parameters]\nr1\n[carrier]\nr1={a}\n[basis]\nU: r1={a}\n[covers]\nC: U Missing\n";
        let e = parse(text, "t").unwrap_err();
        assert!(e.to_string().contains("unknown set 'Missing'"), "{e}");
    }

    #[test]
    fn ground_documents_parse_without_parameters() {
        let text = "[universe]\n1 2\n[base]\nP: {1,2}\n";
        match parse(text, "t").unwrap() {
            SpaceDocument::Ground(d) => {
                assert_eq!(d.sets.len(), 1);
                assert!(!d.explicit_opens);
            }
            SpaceDocument::Soft(_) => panic!("ground doc"),
        }
    }
}
