//! Levels three and up: identities among relations, their reduction, and
//! the syzygies produced by extending the contracting homotopy.

mod engine;
mod verify;

pub use engine::{
    build_level, compute_candidates, compute_delta3, compute_delta4, extend, reduce_level,
    resolve, EngineConfig, OrderPolicy, RawCandidate, Reduction,
};
pub use verify::{verify_state, Check, Failure, Report};

use crate::crossed::CrossedElt;
use crate::group::{CayleyGraph, Contraction0, MaximalTree, Presentation};
use crate::rewriter::H1Table;
use crate::ring::{FiniteGroup, WordAction};
use crate::Module;

/// Label of a candidate `[g, b]`: base element and source basis index one
/// level down (a relator index for level 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tag {
    pub base: usize,
    pub source: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElt {
    pub symbol: String,
    /// The candidate this basis element was accepted from, if any.
    pub tag: Option<Tag>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// Became the basis element with this index.
    Accepted(usize),
    /// In the span of the accepted elements; the certificate is over the
    /// new basis and replays to the candidate's boundary.
    Rejected(Module),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub tag: Tag,
    pub boundary: Module,
    pub crossed: Option<CrossedElt>,
    pub status: Status,
}

/// Level `n >= 3` of the resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub n: usize,
    pub basis: Vec<BasisElt>,
    /// `delta_n` of each basis element, over the basis one level down
    /// (over the relators when `n = 3`).
    pub boundary: Vec<Module>,
    /// Crossed-module form of `delta_3`; empty above level 3.
    pub crossed: Vec<CrossedElt>,
    /// `h_{n-1}` on based generators `(g, b)` one level down, stored at
    /// `g * len + b`; values are over this level's basis.
    pub homotopy: Vec<Module>,
    /// Reduction log; empty for levels supplied directly.
    pub candidates: Vec<Candidate>,
    /// Processing order of `candidates`.
    pub order: Vec<usize>,
}

impl Level {
    pub fn symbols(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.symbol.clone()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ResolutionState {
    pub presentation: Presentation,
    pub group: CayleyGraph,
    pub tree: MaximalTree,
    pub contraction: Contraction0,
    pub h1: H1Table,
    /// `levels[i]` is level `i + 3`.
    pub levels: Vec<Level>,
}

impl ResolutionState {
    pub fn new(
        presentation: Presentation,
        group: CayleyGraph,
        tree: MaximalTree,
        contraction: Contraction0,
        h1: H1Table,
    ) -> Self {
        ResolutionState {
            presentation,
            group,
            tree,
            contraction,
            h1,
            levels: Vec::new(),
        }
    }

    /// Highest level with a boundary map; at least 2.
    pub fn max_level(&self) -> usize {
        2 + self.levels.len()
    }

    pub fn level(&self, n: usize) -> Option<&Level> {
        n.checked_sub(3).and_then(|i| self.levels.get(i))
    }

    /// Basis symbols at level `n >= 1`.
    pub fn symbols(&self, n: usize) -> Vec<String> {
        match n {
            1 => self.presentation.generators().to_vec(),
            2 => self.presentation.relator_names(),
            _ => self.level(n).map(Level::symbols).unwrap_or_default(),
        }
    }

    pub fn basis_len(&self, n: usize) -> usize {
        match n {
            0 => 1,
            1 => self.presentation.generators().len(),
            2 => self.presentation.relators().len(),
            _ => self.level(n).map_or(0, |l| l.basis.len()),
        }
    }

    /// `h_2(g, c) = sum_i e_i . H_2[g . phi(u_i)^-1, r_i]` for `c = prod (r_i^e_i)^(u_i)`.
    pub fn eval_h2_crossed(&self, g: usize, c: &CrossedElt) -> Module {
        let level = &self.levels[0];
        let nr = self.basis_len(2);
        let mut out = Module::zero();
        for f in c.factors() {
            let base = self.group.mul(g, self.group.inv(self.group.eval(&f.conj)));
            let v = &level.homotopy[base * nr + f.relator];
            if f.inverse {
                out = out.sub(v);
            } else {
                out.add_assign(v);
            }
        }
        out
    }

    /// `h_n(g, m) = sum n_{c,k} H_n[g . k^-1, c]` for `m = sum n_{c,k} c . k`
    /// over the level-`n` basis, `n >= 2`.
    pub fn eval_homotopy(&self, n: usize, g: usize, m: &Module) -> Module {
        let level = self.level(n + 1).expect("homotopy level exists");
        let len = self.basis_len(n);
        let mut out = Module::zero();
        for (b, k, c) in m.terms() {
            let base = self.group.mul(g, self.group.inv(k));
            out.add_assign(&level.homotopy[base * len + b].scale(c));
        }
        out
    }

    /// Short name `(g, sym)` of a based generator at level `n`.
    pub fn based_name(&self, n: usize, g: usize, b: usize) -> String {
        let syms = self.symbols(n);
        format!(
            "({}, {})",
            self.group.element_name(&self.presentation, g),
            syms.get(b).map(String::as_str).unwrap_or("?")
        )
    }
}
