//! Text forms of group-ring and module elements.
//!
//! A module element is a signed sum of terms `k*sym@(word)`, e.g.
//! `b3.1 - b3.2@(y x) + 2*b3.4@x`. The `@` part is omitted for the identity
//! and the `k*` part for `k = 1`. Group elements are printed as their
//! shortlex normal forms.

use crate::error::{Error, Result};
use crate::group::{CayleyGraph, Presentation};
use crate::ring::{GroupRingElt, ModuleElt};
use crate::scalar::Scalar;
use crate::words::parse_word;
use crate::ring::WordAction;

fn element_suffix(pres: &Presentation, cayley: &CayleyGraph, g: usize) -> String {
    if g == 0 {
        String::new()
    } else {
        let w = cayley.element_name(pres, g);
        if w.contains(' ') {
            format!("@({w})")
        } else {
            format!("@{w}")
        }
    }
}

pub fn format_module<T: Scalar>(
    m: &ModuleElt<T>,
    symbols: &[String],
    pres: &Presentation,
    cayley: &CayleyGraph,
) -> String {
    if m.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (b, g, c)) in m.terms().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&symbols[b]);
        out.push_str(&element_suffix(pres, cayley, g));
    }
    out
}

/// Grouped form `sym.(1 + x - y x) + ...`, close to how such tables are
/// usually written by hand.
pub fn format_module_grouped<T: Scalar>(
    m: &ModuleElt<T>,
    symbols: &[String],
    pres: &Presentation,
    cayley: &CayleyGraph,
) -> String {
    if m.is_zero() {
        return "0".into();
    }
    m.coords()
        .map(|(b, a)| {
            let ring = format_ring(a, pres, cayley);
            if a.support_len() == 1 && a.terms().next().map(|(_, c)| c.is_one()) == Some(true) {
                if ring == "1" {
                    symbols[b].clone()
                } else {
                    format!("{}.{ring}", symbols[b])
                }
            } else {
                format!("{}.({ring})", symbols[b])
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn format_ring<T: Scalar>(a: &GroupRingElt<T>, pres: &Presentation, cayley: &CayleyGraph) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (g, c)) in a.terms().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let name = cayley.element_name(pres, g);
        if mag.is_one() {
            out.push_str(&name);
        } else if g == 0 {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    out
}

/// Parses the output of [`format_module`]; element words may be any words
/// in the generators.
pub fn parse_module<T: Scalar>(
    text: &str,
    symbols: &[String],
    pres: &Presentation,
    cayley: &CayleyGraph,
) -> Result<ModuleElt<T>> {
    let mut out = ModuleElt::zero();
    let text = text.trim();
    if text == "0" || text.is_empty() {
        return Ok(out);
    }
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(None, "unbalanced `)`"))?;
                cur.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    let mut negate = false;
    for tok in tokens {
        match tok.as_str() {
            "+" => continue,
            "-" => {
                negate = !negate;
                continue;
            }
            _ => {}
        }
        let mut body = tok.as_str();
        let mut sign = if negate { -T::one() } else { T::one() };
        negate = false;
        if let Some(rest) = body.strip_prefix('-') {
            sign = -sign;
            body = rest;
        } else if let Some(rest) = body.strip_prefix('+') {
            body = rest;
        }
        let (coef, body) = match body.split_once('*') {
            Some((k, rest)) => (
                k.parse::<T>()
                    .map_err(|_| Error::parse(None, format!("bad coefficient in `{tok}`")))?,
                rest,
            ),
            None => (T::one(), body),
        };
        let (sym, g) = match body.split_once('@') {
            Some((s, w)) => {
                let w = w.strip_prefix('(').and_then(|w| w.strip_suffix(')')).unwrap_or(w);
                (s, cayley.eval(&parse_word(w, pres.generators())?))
            }
            None => (body, 0),
        };
        let b = symbols
            .iter()
            .position(|s| s == sym)
            .ok_or_else(|| Error::parse(None, format!("unknown basis symbol `{sym}`")))?;
        out.add_term(b, g, sign * coef);
    }
    Ok(out)
}
