//! Textual names for graphs and families used on the command line.
//!
//! Graph specs (fields separated by `:`):
//!
//! * `P:s:k`, `Q:k`, `D:s`, `G1`, `G2`, `TT:m` (transitive tournament)
//! * `path:W` for the oriented path of a word
//! * `gadget:TREE:x:y:s:z` with the tree in parenthesis notation
//! * `usink(G)` adds a universal sink, `sinkext(G)` extends every sink
//! * anything else is read as a graph file
//!
//! Family specs: `P:s`, `Q:k`, `T1`, `T2`, `T:x,y,s,z`, `append(F)`,
//! `combine(F/F)`, `list:G,G,...`, or a single graph.

use std::fs;
use std::path::Path;

use crate::digraph::DiGraph;
use crate::error::{Error, Result};
use crate::families::{
    add_universal_sink, append_sinks, gadget_graph, gen_d, gen_g1, gen_g2, gen_p, gen_q, transitive_tournament,
    BinaryTree, FamilyDescriptor, TreeParams,
};
use crate::pathwords::Word;

fn unknown(spec: &str) -> Error {
    Error::UnknownSpec(spec.to_string())
}

fn number(spec: &str, field: &str) -> Result<usize> {
    field.trim().parse().map_err(|_| unknown(spec))
}

fn parse_word(spec: &str, field: &str) -> Result<Word> {
    field.trim().parse().map_err(|_| unknown(spec))
}

/// Strips `name(` ... `)` around an argument.
fn wrapped<'a>(spec: &'a str, name: &str) -> Option<&'a str> {
    spec.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')
}

/// Splits at `sep` outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

pub fn read_graph_file(path: &Path) -> Result<DiGraph> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })?;
    text.parse()
}

/// A named graph or, failing that, a graph file.
pub fn parse_graph_spec(spec: &str) -> Result<DiGraph> {
    let spec = spec.trim();
    if let Some(inner) = wrapped(spec, "usink") {
        return Ok(add_universal_sink(&parse_graph_spec(inner)?));
    }
    if let Some(inner) = wrapped(spec, "sinkext") {
        return Ok(append_sinks(&parse_graph_spec(inner)?));
    }
    let fields: Vec<&str> = spec.split(':').collect();
    let positive = |i: usize| -> Result<usize> {
        let v = number(spec, fields[i])?;
        if v == 0 {
            return Err(Error::InvalidFamily(format!("{spec}: parameter must be positive")));
        }
        Ok(v)
    };
    match (fields[0], fields.len()) {
        ("P", 3) => Ok(gen_p(positive(1)?, number(spec, fields[2])?)),
        ("Q", 2) => Ok(gen_q(positive(1)?)),
        ("D", 2) => Ok(gen_d(positive(1)?)),
        ("TT", 2) => Ok(transitive_tournament(number(spec, fields[1])?)),
        ("G1", 1) => Ok(gen_g1()),
        ("G2", 1) => Ok(gen_g2()),
        ("path", 2) => Ok(parse_word(spec, fields[1])?.path()),
        ("gadget", 6) => {
            let tree: BinaryTree = fields[1].parse()?;
            let params = TreeParams::new(
                parse_word(spec, fields[2])?,
                parse_word(spec, fields[3])?,
                parse_word(spec, fields[4])?,
                parse_word(spec, fields[5])?,
            )?;
            Ok(gadget_graph(&tree, &params))
        }
        _ if Path::new(spec).is_file() => read_graph_file(Path::new(spec)),
        _ => Err(unknown(spec)),
    }
}

pub fn parse_family_spec(spec: &str) -> Result<FamilyDescriptor> {
    let spec = spec.trim();
    if let Some(inner) = wrapped(spec, "append") {
        return Ok(FamilyDescriptor::append(parse_family_spec(inner)?));
    }
    if let Some(inner) = wrapped(spec, "combine") {
        return match split_top(inner, '/').as_slice() {
            [a, b] => Ok(FamilyDescriptor::combine(parse_family_spec(a)?, parse_family_spec(b)?)),
            _ => Err(unknown(spec)),
        };
    }
    if let Some(list) = spec.strip_prefix("list:") {
        let graphs = split_top(list, ',').into_iter().map(parse_graph_spec).collect::<Result<_>>()?;
        return Ok(FamilyDescriptor::ExplicitList(graphs));
    }
    match spec {
        "T1" => return Ok(FamilyDescriptor::t1()),
        "T2" => return Ok(FamilyDescriptor::t2()),
        _ => {}
    }
    if let Some(words) = spec.strip_prefix("T:") {
        let w: Vec<&str> = words.split(',').collect();
        if w.len() != 4 {
            return Err(unknown(spec));
        }
        let params = TreeParams::new(
            parse_word(spec, w[0])?,
            parse_word(spec, w[1])?,
            parse_word(spec, w[2])?,
            parse_word(spec, w[3])?,
        )?;
        return Ok(FamilyDescriptor::TreeFamily(params));
    }
    let fields: Vec<&str> = spec.split(':').collect();
    match (fields[0], fields.len()) {
        ("P", 2) | ("Q", 2) => {
            let v = number(spec, fields[1])?;
            if v == 0 {
                return Err(Error::InvalidFamily(format!("{spec}: parameter must be positive")));
            }
            Ok(if fields[0] == "P" { FamilyDescriptor::PathPower(v) } else { FamilyDescriptor::QFamily(v) })
        }
        _ => parse_graph_spec(spec).map(|g| FamilyDescriptor::ExplicitList(vec![g])),
    }
}
