//! Parsers for the presentation and configuration files.

use std::collections::BTreeMap;

use crate::crossed::CrossedElt;
use crate::error::{Error, Result};
use crate::group::{CayleyGraph, MaximalTree, Presentation, Relator};
use crate::syzygy::Tag;
use crate::words::parse_word;

/// Attaches a line number to an error raised while parsing that line.
fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { line: None, msg } => Error::Parse {
            line: Some(line),
            msg,
        },
        e @ Error::Parse { .. } => e,
        e => Error::Parse {
            line: Some(line),
            msg: e.to_string(),
        },
    }
}

/// Non-empty lines with `#` comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// `gens: x y` followed by `rel <name> = <word>` lines.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut gens: Option<Vec<String>> = None;
    let mut rels: Vec<(usize, String, String)> = Vec::new();
    for (n, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("gens:") {
            if gens.is_some() {
                return Err(Error::parse(Some(n), "second `gens:` line"));
            }
            gens = Some(rest.split_whitespace().map(String::from).collect());
        } else if let Some(rest) = line.strip_prefix("rel ") {
            if gens.is_none() {
                return Err(Error::parse(Some(n), "`rel` before `gens:`"));
            }
            let (name, word) = rest
                .split_once('=')
                .ok_or_else(|| Error::parse(Some(n), "expected `rel <name> = <word>`"))?;
            rels.push((n, name.trim().to_string(), word.trim().to_string()));
        } else {
            return Err(Error::parse(
                Some(n),
                format!("expected `gens:` or `rel`, found `{line}`"),
            ));
        }
    }
    let gens = gens.ok_or_else(|| Error::parse(None, "missing `gens:` line"))?;
    let mut relators = Vec::with_capacity(rels.len());
    for (n, name, word) in rels {
        if word.is_empty() {
            return Err(Error::parse(Some(n), format!("relator `{name}` is empty")));
        }
        let word = parse_word(&word, &gens).map_err(|e| at_line(n, e))?;
        relators.push(Relator { name, word });
    }
    Presentation::new(gens, relators)
}

/// Splits `<element-word...> <last>` into the element and the last token.
fn element_and_symbol<'a>(
    line: &'a str,
    pres: &Presentation,
    cayley: &CayleyGraph,
) -> Result<(usize, &'a str)> {
    let line = line.trim();
    let (elt, sym) = line
        .rsplit_once(char::is_whitespace)
        .ok_or_else(|| Error::parse(None, "expected `<element-word> <symbol>`"))?;
    Ok((cayley.parse_element(pres, elt)?, sym))
}

/// One edge `<element-word> <generator>` per line.
pub fn parse_tree(text: &str, pres: &Presentation, cayley: &CayleyGraph) -> Result<MaximalTree> {
    let mut edges = Vec::new();
    for (n, line) in content_lines(text) {
        let (g, x) = element_and_symbol(line, pres, cayley).map_err(|e| at_line(n, e))?;
        let x = pres.generator_index(x).map_err(|e| at_line(n, e))?;
        edges.push((g, x));
    }
    MaximalTree::from_edges(cayley, edges)
}

/// `<element-word> <generator> := <crossed element>` per non-tree edge.
pub fn parse_h1(
    text: &str,
    pres: &Presentation,
    cayley: &CayleyGraph,
) -> Result<Vec<((usize, usize), CrossedElt)>> {
    let mut out = Vec::new();
    for (n, line) in content_lines(text) {
        let (lhs, rhs) = line
            .split_once(":=")
            .ok_or_else(|| Error::parse(Some(n), "expected `<element> <generator> := <value>`"))?;
        let (g, x) = element_and_symbol(lhs, pres, cayley).map_err(|e| at_line(n, e))?;
        let x = pres.generator_index(x).map_err(|e| at_line(n, e))?;
        let c = CrossedElt::parse(rhs, pres).map_err(|e| at_line(n, e))?;
        out.push(((g, x), c));
    }
    Ok(out)
}

/// Index of a source symbol one level below `level`: a relator name for
/// level 3, `b{level-1}.{k}` above.
fn source_index(level: usize, sym: &str, pres: &Presentation) -> Result<usize> {
    if level == 3 {
        return pres.relator_index(sym);
    }
    let prefix = format!("b{}.", level - 1);
    sym.strip_prefix(&prefix)
        .and_then(|k| k.parse::<usize>().ok())
        .filter(|&k| k >= 1)
        .map(|k| k - 1)
        .ok_or_else(|| {
            Error::parse(
                None,
                format!("expected a level-{} basis symbol, found `{sym}`", level - 1),
            )
        })
}

fn parse_tag(
    head: &str,
    pres: &Presentation,
    cayley: &CayleyGraph,
) -> Result<(usize, Tag)> {
    let head = head.trim();
    let (level, rest) = head
        .split_once(char::is_whitespace)
        .ok_or_else(|| Error::parse(None, "expected `<level> <element-word> <source>`"))?;
    let level: usize = level
        .parse()
        .ok()
        .filter(|&l| l >= 3)
        .ok_or_else(|| Error::parse(None, format!("bad level `{level}`")))?;
    let (base, sym) = element_and_symbol(rest, pres, cayley)?;
    let source = source_index(level, sym, pres)?;
    Ok((level, Tag { base, source }))
}

/// `<level> <element-word> <source-symbol>` per line: candidates to offer
/// first, in this order, at each listed level.
pub fn parse_order(
    text: &str,
    pres: &Presentation,
    cayley: &CayleyGraph,
) -> Result<BTreeMap<usize, Vec<Tag>>> {
    let mut out: BTreeMap<usize, Vec<Tag>> = BTreeMap::new();
    for (n, line) in content_lines(text) {
        let (level, tag) = parse_tag(line, pres, cayley).map_err(|e| at_line(n, e))?;
        out.entry(level).or_default().push(tag);
    }
    Ok(out)
}

/// `<level> <element-word> <source-symbol> := <module text>` per line.
pub fn parse_retraction(
    text: &str,
    pres: &Presentation,
    cayley: &CayleyGraph,
) -> Result<BTreeMap<(usize, Tag), String>> {
    let mut out = BTreeMap::new();
    for (n, line) in content_lines(text) {
        let (lhs, rhs) = line
            .split_once(":=")
            .ok_or_else(|| Error::parse(Some(n), "expected `<level> <element> <source> := <value>`"))?;
        let key = parse_tag(lhs, pres, cayley).map_err(|e| at_line(n, e))?;
        if out.insert(key, rhs.trim().to_string()).is_some() {
            return Err(Error::parse(Some(n), "duplicate entry"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate;
    use crate::ring::FiniteGroup;

    #[test]
    fn presentations() {
        let p = parse_presentation("gens: x y\nrel r = x^3\nrel s = y^2\nrel t = x y x y\n").unwrap();
        assert_eq!(p.generators(), ["x", "y"]);
        assert_eq!(p.relator_names(), ["r", "s", "t"]);
        assert_eq!(enumerate(&p, 100).unwrap().order(), 6);

        let c4 = parse_presentation("# cyclic\ngens: x\n\nrel r = x^4   # comment\n").unwrap();
        assert_eq!(enumerate(&c4, 100).unwrap().order(), 4);
    }

    #[test]
    fn presentation_errors() {
        assert!(matches!(
            parse_presentation("gens: x\nrel r = x^3\nrel r = x^3\n"),
            Err(Error::Presentation(_))
        ));
        assert!(matches!(
            parse_presentation("gens: x\nrel r = x^\n"),
            Err(Error::Parse { line: Some(2), .. })
        ));
        assert!(matches!(
            parse_presentation("gens: x\nrel r =\n"),
            Err(Error::Parse { line: Some(2), .. })
        ));
        assert!(parse_presentation("gens: x x\n").is_err());
        assert!(parse_presentation("rel r = x\n").is_err());
        assert!(parse_presentation("gens: x\nrel r = z\n").is_err());
        assert!(parse_presentation("gens: x\nfoo\n").is_err());
        assert!(parse_presentation("gens: 1\n").is_err());
    }

    #[test]
    fn tags_and_certificates() {
        let p = parse_presentation("gens: x y\nrel r = x^3\nrel s = y^2\nrel t = x y x y\n").unwrap();
        let g = enumerate(&p, 100).unwrap();
        let order = parse_order("3 x^2 r\n3 1 t\n4 y b3.2\n", &p, &g).unwrap();
        let x2 = g.parse_element(&p, "x^2").unwrap();
        assert_eq!(order[&3], vec![Tag { base: x2, source: 0 }, Tag { base: 0, source: 2 }]);
        assert_eq!(order[&4], vec![Tag { base: g.parse_element(&p, "y").unwrap(), source: 1 }]);
        assert!(matches!(parse_order("3 x q\n", &p, &g), Err(Error::Parse { line: Some(1), .. })));
        assert!(parse_order("4 x b4.1\n", &p, &g).is_err());
        assert!(parse_order("2 x r\n", &p, &g).is_err());

        let ret = parse_retraction("3 x r := -b3.1@(x^2)\n", &p, &g).unwrap();
        assert_eq!(ret[&(3, Tag { base: g.parse_element(&p, "x").unwrap(), source: 0 })], "-b3.1@(x^2)");
        assert!(parse_retraction("3 x r := a\n3 x r := b\n", &p, &g).is_err());
        assert!(g.order() == 6);
    }
}
