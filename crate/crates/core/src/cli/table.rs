//! Plain-text tables in the layout of a worked example: generators with
//! their crossed and module forms, then the reduction with certificates.

use std::fmt::Write;

use crate::notation::{format_module, format_module_grouped};
use crate::ring::FiniteGroup;
use crate::syzygy::{ResolutionState, Status};

fn render_rows(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::from(" ");
        let last = cells.len() - 1;
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i == last {
                s.push_str(&format!(" {c}"));
            } else {
                s.push_str(&format!(" {c:<w$} "));
            }
        }
        s.trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(header.to_vec()));
    let _ = writeln!(out, "  {}", "-".repeat(widths.iter().sum::<usize>() + 2 * widths.len() - 1));
    for r in rows {
        let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
    }
}

pub fn render_tables(state: &ResolutionState) -> String {
    let pres = &state.presentation;
    let group = &state.group;
    let names = pres.generators();
    let elt = |g: usize| group.element_name(pres, g);
    let mut out = String::new();

    let rels: Vec<String> = pres
        .relators()
        .iter()
        .map(|r| format!("{} = {}", r.name, r.word.display(names)))
        .collect();
    let _ = writeln!(out, "presentation  < {} | {} >", names.join(" "), rels.join(", "));
    let _ = writeln!(out, "group order   {}", group.order());
    let elements: Vec<String> = group.elements().map(elt).collect();
    let _ = writeln!(out, "elements      {}", elements.join(", "));
    let edges: Vec<String> = state
        .tree
        .edges()
        .iter()
        .map(|&(g, x)| format!("({}, {})", elt(g), names[x]))
        .collect();
    let _ = writeln!(out, "maximal tree  {}", edges.join(" "));
    let _ = writeln!(out);

    let _ = writeln!(out, "h1 on non-tree edges");
    let rows: Vec<Vec<String>> = state
        .h1
        .entries()
        .filter(|((g, x), _)| !state.tree.contains(*g, *x))
        .map(|((g, x), c)| {
            vec![
                format!("({}, {})", elt(g), names[x]),
                c.display(pres).to_string(),
            ]
        })
        .collect();
    render_rows(&mut out, &["edge", "h1"], &rows);

    for level in &state.levels {
        let n = level.n;
        let below = state.symbols(n - 1);
        let here = level.symbols();
        let _ = writeln!(out);
        if level.candidates.is_empty() {
            let _ = writeln!(out, "level {n}: {} basis elements", level.basis.len());
            let rows: Vec<Vec<String>> = level
                .basis
                .iter()
                .zip(&level.boundary)
                .map(|(b, d)| {
                    vec![
                        b.symbol.clone(),
                        format_module_grouped(d, &below, pres, group),
                    ]
                })
                .collect();
            render_rows(&mut out, &["basis", "boundary"], &rows);
            continue;
        }
        let _ = writeln!(
            out,
            "level {n}: {} candidates, {} accepted",
            level.candidates.len(),
            level.basis.len()
        );
        let mut gen_rows = Vec::new();
        let mut red_rows = Vec::new();
        for (pos, &i) in level.order.iter().enumerate() {
            let c = &level.candidates[i];
            let label = format!("({}, {})", elt(c.tag.base), below[c.tag.source]);
            let mut row = vec![(pos + 1).to_string(), label.clone()];
            if let Some(x) = &c.crossed {
                row.push(x.display(pres).to_string());
            }
            row.push(format_module_grouped(&c.boundary, &below, pres, group));
            gen_rows.push(row);
            let result = match &c.status {
                Status::Accepted(k) => format!("accepted as {}", here[*k]),
                Status::Rejected(cert) => format_module(cert, &here, pres, group),
            };
            red_rows.push(vec![(pos + 1).to_string(), label, result]);
        }
        if n == 3 {
            render_rows(&mut out, &["#", "generator", "crossed form", "module form"], &gen_rows);
        } else {
            render_rows(&mut out, &["#", "generator", "boundary"], &gen_rows);
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "level {n} reduction");
        render_rows(&mut out, &["#", "generator", "retraction"], &red_rows);
    }
    out
}
