use std::collections::{BTreeMap, BTreeSet};

use super::{BasisElt, Candidate, Level, ResolutionState, Status, Tag};
use crate::crossed::{CrossedElt, Factor};
use crate::error::{Error, Result};
use crate::lattice::OrbitLattice;
use crate::notation::parse_module;
use crate::ring::FiniteGroup;
use crate::Module;

/// Order in which candidates are offered to the greedy reduction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum OrderPolicy {
    /// `g`-major over group elements in standard order, then source basis order.
    #[default]
    Declared,
    /// Ascending support size, ties in declared order.
    Support,
    /// Per level, the listed tags first, then the rest in declared order.
    Explicit(BTreeMap<usize, Vec<Tag>>),
}

#[derive(Clone, Debug, Default)]
pub struct EngineConfig {
    pub order: OrderPolicy,
    /// Certificates to use for rejected candidates, keyed by `(level, tag)`,
    /// in module text over the new level's basis symbols. Each one is
    /// checked by replay.
    pub pinned: BTreeMap<(usize, Tag), String>,
}

/// A candidate before reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawCandidate {
    pub tag: Tag,
    pub boundary: Module,
    pub crossed: Option<CrossedElt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Candidate indices in acceptance order.
    pub accepted: Vec<usize>,
    /// Per candidate, in candidate index order.
    pub status: Vec<Status>,
}

/// `delta_3[g, r] = h1(g, omega r)^-1 . r^(sigma(g)^-1)` for all `(g, r)`, `g`-major.
pub fn compute_delta3(state: &ResolutionState) -> Vec<RawCandidate> {
    let pres = &state.presentation;
    let group = &state.group;
    let mut out = Vec::new();
    for g in group.elements() {
        let sigma_inv = state.contraction.sigma(g).inverse();
        for (r, rel) in pres.relators().iter().enumerate() {
            let crossed = state
                .h1
                .eval(group, g, &rel.word)
                .inv()
                .mult(&CrossedElt::factor(Factor::new(r, false, sigma_inv.clone())));
            out.push(RawCandidate {
                tag: Tag { base: g, source: r },
                boundary: crossed.abelianise(group),
                crossed: Some(crossed),
            });
        }
    }
    out
}

/// `delta_{m+1}[g, b] = -h_{m-1}(g, delta_m b) + b . g^-1` over the top level `m >= 3`.
pub fn compute_candidates(state: &ResolutionState) -> Result<Vec<RawCandidate>> {
    let m = state.max_level();
    if m < 3 {
        return Err(Error::State(
            "candidates above level 3 need a reduced level 3".into(),
        ));
    }
    let top = state.level(m).expect("top level");
    let group = &state.group;
    let mut out = Vec::new();
    for g in group.elements() {
        let g_inv = group.inv(g);
        for (b, boundary) in top.boundary.iter().enumerate() {
            let h = if m == 3 {
                state.eval_h2_crossed(g, &top.crossed[b])
            } else {
                state.eval_homotopy(m - 1, g, boundary)
            };
            let mut v = h.neg();
            v.add_term(b, g_inv, 1.into());
            out.push(RawCandidate {
                tag: Tag { base: g, source: b },
                boundary: v,
                crossed: None,
            });
        }
    }
    Ok(out)
}

/// The level-4 candidates, which use the crossed form of `delta_3`.
pub fn compute_delta4(state: &ResolutionState) -> Result<Vec<RawCandidate>> {
    if state.max_level() != 3 {
        return Err(Error::State("level 4 candidates need top level 3".into()));
    }
    compute_candidates(state)
}

fn processing_order(
    raw: &[RawCandidate],
    level: usize,
    policy: &OrderPolicy,
    state: &ResolutionState,
) -> Result<Vec<usize>> {
    let declared: Vec<usize> = (0..raw.len()).collect();
    match policy {
        OrderPolicy::Declared => Ok(declared),
        OrderPolicy::Support => {
            let mut v = declared;
            v.sort_by_key(|&i| raw[i].boundary.support_len());
            Ok(v)
        }
        OrderPolicy::Explicit(map) => {
            let Some(tags) = map.get(&level) else {
                return Ok(declared);
            };
            let index: BTreeMap<Tag, usize> =
                raw.iter().enumerate().map(|(i, c)| (c.tag, i)).collect();
            let mut seen = BTreeSet::new();
            let mut order = Vec::with_capacity(raw.len());
            for t in tags {
                let &i = index.get(t).ok_or_else(|| {
                    Error::Config(format!(
                        "order entry {} is not a level-{level} candidate",
                        state.based_name(level - 1, t.base, t.source)
                    ))
                })?;
                if !seen.insert(i) {
                    return Err(Error::Config(format!(
                        "order entry {} listed twice",
                        state.based_name(level - 1, t.base, t.source)
                    )));
                }
                order.push(i);
            }
            order.extend((0..raw.len()).filter(|i| !seen.contains(i)));
            Ok(order)
        }
    }
}

/// Greedy reduction: a candidate is accepted unless its boundary already lies
/// in the `Z G`-span of the accepted ones, in which case it gets a certificate.
pub fn reduce_level<G: FiniteGroup>(
    boundaries: &[Module],
    prev_basis_len: usize,
    order: &[usize],
    group: &G,
) -> Reduction {
    let mut accepted: Vec<usize> = Vec::new();
    let mut status: Vec<Option<Status>> = vec![None; boundaries.len()];
    let mut span = OrbitLattice::new(Vec::new(), prev_basis_len, group);
    for &i in order {
        let v = &boundaries[i];
        match span.member_solve(v, group) {
            Some(cert) => status[i] = Some(Status::Rejected(cert)),
            None => {
                status[i] = Some(Status::Accepted(accepted.len()));
                accepted.push(i);
                let gens: Vec<Module> = accepted.iter().map(|&j| boundaries[j].clone()).collect();
                span = OrbitLattice::new(gens, prev_basis_len, group);
            }
        }
    }
    Reduction {
        accepted,
        status: status
            .into_iter()
            .map(|s| s.expect("order covers every candidate"))
            .collect(),
    }
}

/// Reduces `raw` (the candidates of level `n = max_level + 1`) into a level.
pub fn build_level(
    state: &ResolutionState,
    raw: Vec<RawCandidate>,
    config: &EngineConfig,
) -> Result<Level> {
    let n = state.max_level() + 1;
    let group = &state.group;
    let prev_len = state.basis_len(n - 1);
    let order = processing_order(&raw, n, &config.order, state)?;
    let boundaries: Vec<Module> = raw.iter().map(|c| c.boundary.clone()).collect();
    let red = reduce_level(&boundaries, prev_len, &order, group);
    let basis: Vec<BasisElt> = red
        .accepted
        .iter()
        .enumerate()
        .map(|(k, &i)| BasisElt {
            symbol: format!("b{n}.{}", k + 1),
            tag: Some(raw[i].tag),
        })
        .collect();
    let boundary: Vec<Module> = red.accepted.iter().map(|&i| boundaries[i].clone()).collect();
    let crossed: Vec<CrossedElt> = if n == 3 {
        red.accepted
            .iter()
            .map(|&i| raw[i].crossed.clone().expect("level 3 candidates are crossed"))
            .collect()
    } else {
        Vec::new()
    };
    let symbols: Vec<String> = basis.iter().map(|b| b.symbol.clone()).collect();
    let mut candidates = Vec::with_capacity(raw.len());
    for (c, mut st) in raw.into_iter().zip(red.status) {
        if let (Status::Rejected(_), Some(text)) = (&st, config.pinned.get(&(n, c.tag))) {
            let cert = parse_module(text, &symbols, &state.presentation, group)?;
            if cert.max_basis_index().is_some_and(|b| b >= boundary.len()) {
                return Err(Error::Config("pinned certificate out of range".into()));
            }
            if cert.apply(&boundary, group) != c.boundary {
                return Err(Error::Config(format!(
                    "pinned certificate for level-{n} candidate {} does not replay",
                    state.based_name(n - 1, c.tag.base, c.tag.source)
                )));
            }
            st = Status::Rejected(cert);
        }
        candidates.push(Candidate {
            tag: c.tag,
            boundary: c.boundary,
            crossed: c.crossed,
            status: st,
        });
    }
    for ((level, tag), _) in config.pinned.range((n, Tag { base: 0, source: 0 })..) {
        if *level != n {
            break;
        }
        let ok = candidates
            .iter()
            .any(|c| c.tag == *tag && matches!(c.status, Status::Rejected(_)));
        if !ok {
            return Err(Error::Config(format!(
                "pinned certificate for level-{n} candidate {} does not match a rejected candidate",
                state.based_name(n - 1, tag.base, tag.source)
            )));
        }
    }
    let homotopy = candidates
        .iter()
        .map(|c| match &c.status {
            Status::Accepted(k) => Module::basis(*k),
            Status::Rejected(cert) => cert.clone(),
        })
        .collect();
    Ok(Level {
        n,
        basis,
        boundary,
        crossed,
        homotopy,
        candidates,
        order,
    })
}

/// Adds one level on top of the state.
pub fn extend(state: &mut ResolutionState, config: &EngineConfig) -> Result<()> {
    let raw = if state.max_level() == 2 {
        compute_delta3(state)
    } else {
        compute_candidates(state)?
    };
    let level = build_level(state, raw, config)?;
    state.levels.push(level);
    Ok(())
}

/// Extends the state until it reaches `max_level`.
pub fn resolve(state: &mut ResolutionState, max_level: usize, config: &EngineConfig) -> Result<()> {
    while state.max_level() < max_level {
        extend(state, config)?;
    }
    Ok(())
}

