//! JSON export and import of a [`ResolutionState`].
//!
//! Integers are decimal strings, group elements are shortlex words and
//! module elements are maps `{basis symbol: {element word: coefficient}}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::crossed::CrossedElt;
use crate::error::{Error, Result};
use crate::group::{CayleyGraph, Contraction0, MaximalTree, Presentation, Relator};
use crate::rewriter::{H1Mode, H1Table};
use crate::syzygy::{BasisElt, Candidate, Level, ResolutionState, Status, Tag};
use crate::ring::FiniteGroup;
use crate::words::parse_word;
use crate::{Int, Module};

pub const SCHEMA: &str = "crossres/1";

type ModuleDto = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDto {
    schema: String,
    presentation: PresentationDto,
    group: GroupDto,
    tree: Vec<EdgeDto>,
    h1: Vec<H1Dto>,
    levels: Vec<LevelDto>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDto {
    generators: Vec<String>,
    relators: Vec<RelatorDto>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelatorDto {
    name: String,
    word: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDto {
    order: usize,
    elements: Vec<String>,
    /// `table[g][x]` is the index of `g . x`.
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDto {
    element: String,
    generator: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct H1Dto {
    element: String,
    generator: String,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TagDto {
    element: String,
    source: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisDto {
    symbol: String,
    tag: Option<TagDto>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomotopyDto {
    element: String,
    source: String,
    value: ModuleDto,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CandidateDto {
    element: String,
    source: String,
    boundary: ModuleDto,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    crossed: Option<String>,
    accepted: Option<String>,
    certificate: Option<ModuleDto>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LevelDto {
    n: usize,
    basis: Vec<BasisDto>,
    boundary: Vec<ModuleDto>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    crossed: Vec<String>,
    homotopy: Vec<HomotopyDto>,
    candidates: Vec<CandidateDto>,
    order: Vec<usize>,
}

fn module_dto(m: &Module, symbols: &[String], state: &ResolutionState) -> ModuleDto {
    let mut out = ModuleDto::new();
    for (b, g, c) in m.terms() {
        out.entry(symbols[b].clone())
            .or_default()
            .insert(state.group.element_name(&state.presentation, g), c.to_string());
    }
    out
}

/// Serialises the state as pretty-printed JSON with a trailing newline.
pub fn export_json(state: &ResolutionState) -> String {
    let pres = &state.presentation;
    let group = &state.group;
    let names = pres.generators();
    let elt = |g: usize| group.element_name(pres, g);
    let dto = StateDto {
        schema: SCHEMA.into(),
        presentation: PresentationDto {
            generators: names.to_vec(),
            relators: pres
                .relators()
                .iter()
                .map(|r| RelatorDto {
                    name: r.name.clone(),
                    word: r.word.display(names).to_string(),
                })
                .collect(),
        },
        group: GroupDto {
            order: group.order(),
            elements: group.elements().map(elt).collect(),
            table: group.rows(),
        },
        tree: state
            .tree
            .edges()
            .iter()
            .map(|&(g, x)| EdgeDto {
                element: elt(g),
                generator: names[x].clone(),
            })
            .collect(),
        h1: state
            .h1
            .entries()
            .filter(|((g, x), _)| !state.tree.contains(*g, *x))
            .map(|((g, x), c)| H1Dto {
                element: elt(g),
                generator: names[x].clone(),
                value: c.display(pres).to_string(),
            })
            .collect(),
        levels: state
            .levels
            .iter()
            .map(|level| {
                let n = level.n;
                let below = state.symbols(n - 1);
                let here = level.symbols();
                let prev_len = below.len();
                LevelDto {
                    n,
                    basis: level
                        .basis
                        .iter()
                        .map(|b| BasisDto {
                            symbol: b.symbol.clone(),
                            tag: b.tag.map(|t| TagDto {
                                element: elt(t.base),
                                source: below[t.source].clone(),
                            }),
                        })
                        .collect(),
                    boundary: level
                        .boundary
                        .iter()
                        .map(|m| module_dto(m, &below, state))
                        .collect(),
                    crossed: level
                        .crossed
                        .iter()
                        .map(|c| c.display(pres).to_string())
                        .collect(),
                    homotopy: level
                        .homotopy
                        .iter()
                        .enumerate()
                        .map(|(i, m)| HomotopyDto {
                            element: elt(i / prev_len),
                            source: below[i % prev_len].clone(),
                            value: module_dto(m, &here, state),
                        })
                        .collect(),
                    candidates: level
                        .candidates
                        .iter()
                        .map(|c| CandidateDto {
                            element: elt(c.tag.base),
                            source: below[c.tag.source].clone(),
                            boundary: module_dto(&c.boundary, &below, state),
                            crossed: c.crossed.as_ref().map(|x| x.display(pres).to_string()),
                            accepted: match &c.status {
                                Status::Accepted(k) => Some(here[*k].clone()),
                                Status::Rejected(_) => None,
                            },
                            certificate: match &c.status {
                                Status::Accepted(_) => None,
                                Status::Rejected(m) => Some(module_dto(m, &here, state)),
                            },
                        })
                        .collect(),
                    order: level.order.clone(),
                }
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&dto).expect("serialisable");
    s.push('\n');
    s
}

fn bad(msg: impl Into<String>) -> Error {
    Error::State(msg.into())
}

fn symbol_index(symbols: &[String], s: &str) -> Result<usize> {
    symbols
        .iter()
        .position(|x| x == s)
        .ok_or_else(|| bad(format!("unknown basis symbol `{s}`")))
}

fn parse_module_dto(
    dto: &ModuleDto,
    symbols: &[String],
    pres: &Presentation,
    group: &CayleyGraph,
) -> Result<Module> {
    let mut m = Module::zero();
    for (sym, coeffs) in dto {
        let b = symbol_index(symbols, sym)?;
        for (w, c) in coeffs {
            let g = group.parse_element(pres, w)?;
            let c: Int = c
                .parse()
                .map_err(|_| bad(format!("bad coefficient `{c}`")))?;
            m.add_term(b, g, c);
        }
    }
    Ok(m)
}

/// Rebuilds a state from [`export_json`] output, re-validating the group
/// table, tree and `h1` values on the way.
pub fn import_json(text: &str) -> Result<ResolutionState> {
    let dto: StateDto =
        serde_json::from_str(text).map_err(|e| Error::parse(Some(e.line()), e.to_string()))?;
    if dto.schema != SCHEMA {
        return Err(bad(format!("unsupported schema `{}`", dto.schema)));
    }
    let gens = dto.presentation.generators;
    let relators = dto
        .presentation
        .relators
        .into_iter()
        .map(|r| {
            Ok(Relator {
                word: parse_word(&r.word, &gens)?,
                name: r.name,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pres = Presentation::new(gens, relators)?;
    let group = CayleyGraph::from_table(&pres, &dto.group.table)?;
    if group.order() != dto.group.order {
        return Err(bad("group order does not match the table"));
    }
    for (i, w) in dto.group.elements.iter().enumerate() {
        if group.element_name(&pres, i) != *w {
            return Err(bad(format!("element {i} is not `{w}` in standard order")));
        }
    }
    let edges = dto
        .tree
        .iter()
        .map(|e| Ok((group.parse_element(&pres, &e.element)?, pres.generator_index(&e.generator)?)))
        .collect::<Result<Vec<_>>>()?;
    let tree = MaximalTree::from_edges(&group, edges)?;
    let contraction = Contraction0::from_tree(&group, &tree);
    let given = dto
        .h1
        .iter()
        .map(|h| {
            Ok((
                (
                    group.parse_element(&pres, &h.element)?,
                    pres.generator_index(&h.generator)?,
                ),
                CrossedElt::parse(&h.value, &pres)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let h1 = H1Table::build(&pres, &group, &tree, &contraction, H1Mode::Given(&given))?;
    let mut state = ResolutionState::new(pres, group, tree, contraction, h1);
    for (i, l) in dto.levels.into_iter().enumerate() {
        let n = i + 3;
        if l.n != n {
            return Err(bad(format!("expected level {n}, found {}", l.n)));
        }
        let pres = &state.presentation;
        let group = &state.group;
        let below = state.symbols(n - 1);
        let here: Vec<String> = l.basis.iter().map(|b| b.symbol.clone()).collect();
        let tag = |element: &str, source: &str| -> Result<Tag> {
            Ok(Tag {
                base: group.parse_element(pres, element)?,
                source: symbol_index(&below, source)?,
            })
        };
        let basis = l
            .basis
            .iter()
            .map(|b| {
                Ok(BasisElt {
                    symbol: b.symbol.clone(),
                    tag: b.tag.as_ref().map(|t| tag(&t.element, &t.source)).transpose()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let boundary = l
            .boundary
            .iter()
            .map(|m| parse_module_dto(m, &below, pres, group))
            .collect::<Result<Vec<_>>>()?;
        let crossed = l
            .crossed
            .iter()
            .map(|c| CrossedElt::parse(c, pres))
            .collect::<Result<Vec<_>>>()?;
        let mut homotopy = vec![None; group.order() * below.len()];
        for h in &l.homotopy {
            let t = tag(&h.element, &h.source)?;
            let slot = &mut homotopy[t.base * below.len() + t.source];
            if slot.is_some() {
                return Err(bad("duplicate homotopy entry"));
            }
            *slot = Some(parse_module_dto(&h.value, &here, pres, group)?);
        }
        let homotopy = homotopy
            .into_iter()
            .map(|h| h.ok_or_else(|| bad(format!("incomplete homotopy table at level {n}"))))
            .collect::<Result<Vec<_>>>()?;
        let candidates = l
            .candidates
            .iter()
            .map(|c| {
                let status = match (&c.accepted, &c.certificate) {
                    (Some(s), None) => Status::Accepted(symbol_index(&here, s)?),
                    (None, Some(m)) => Status::Rejected(parse_module_dto(m, &here, pres, group)?),
                    _ => return Err(bad("candidate must be either accepted or rejected")),
                };
                Ok(Candidate {
                    tag: tag(&c.element, &c.source)?,
                    boundary: parse_module_dto(&c.boundary, &below, pres, group)?,
                    crossed: c.crossed.as_ref().map(|x| CrossedElt::parse(x, pres)).transpose()?,
                    status,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if l.order.len() != candidates.len() || l.order.iter().any(|&i| i >= candidates.len()) {
            return Err(bad(format!("bad processing order at level {n}")));
        }
        state.levels.push(Level {
            n,
            basis,
            boundary,
            crossed,
            homotopy,
            candidates,
            order: l.order,
        });
    }
    Ok(state)
}
