//! Logged rewriting: expressing kernel words as consequences of the relators,
//! and the table `h1` built from such fillings.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::crossed::{CrossedElt, Factor};
use crate::error::{Error, Result};
use crate::group::{rho, CayleyGraph, Contraction0, MaximalTree, Presentation};
use crate::ring::{FiniteGroup, WordAction};
use crate::words::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximum number of logged relator moves.
    pub max_depth: usize,
    /// Maximum intermediate word length; `None` means four times the input
    /// length, but never less than twice the longest relator.
    pub max_length: Option<usize>,
    /// Maximum number of expanded words.
    pub max_nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_depth: 64,
            max_length: None,
            max_nodes: 200_000,
        }
    }
}

/// One cyclic rotation `b a` of `(omega r)^e = a b`, i.e. `a^-1 (omega r)^e a`.
struct Rotation {
    relator: usize,
    inverse: bool,
    letters: Vec<Letter>,
    prefix: Word,
}

fn rotations(pres: &Presentation) -> Vec<Rotation> {
    let mut out = Vec::new();
    for (ri, r) in pres.relators().iter().enumerate() {
        for inverse in [false, true] {
            let body = if inverse {
                r.word.inverse()
            } else {
                r.word.clone()
            };
            let l = body.letters();
            for k in 0..l.len() {
                let mut letters = l[k..].to_vec();
                letters.extend_from_slice(&l[..k]);
                out.push(Rotation {
                    relator: ri,
                    inverse,
                    letters,
                    prefix: Word::reduce(l[..k].iter().copied()),
                });
            }
        }
    }
    out
}

struct Node {
    word: Word,
    depth: usize,
    parent: Option<(usize, Factor)>,
}

/// Finds `c` with `boundary2(c) = w` by best-first search over logged relator
/// moves. A move replaces a subword `s` of `w = p s q` by `t^-1`, where `s t` is
/// a cyclic rotation of `(omega r)^e`, and logs the factor `(r^e)^(a p^-1)`.
/// Candidates are ordered by (resulting length, depth, leftmost position,
/// relator order), so the result is deterministic.
pub fn fill_loop(
    pres: &Presentation,
    cayley: &CayleyGraph,
    w: &Word,
    limits: &SearchLimits,
) -> Result<CrossedElt> {
    let names = pres.generators();
    if cayley.eval(w) != cayley.identity() {
        return Err(Error::NotInKernel(w.display(names).to_string()));
    }
    if w.is_empty() {
        return Ok(CrossedElt::identity());
    }
    let longest = pres
        .relators()
        .iter()
        .map(|r| r.word.len())
        .max()
        .unwrap_or(0);
    let max_length = limits
        .max_length
        .unwrap_or_else(|| (4 * w.len()).max(2 * longest));
    let rots = rotations(pres);

    let mut nodes = vec![Node {
        word: w.clone(),
        depth: 0,
        parent: None,
    }];
    let mut seen: HashSet<Word> = HashSet::from([w.clone()]);
    let mut heap = BinaryHeap::from([Reverse((w.len(), 0usize, 0usize))]);
    let mut expanded = 0usize;

    while let Some(Reverse((_, _, idx))) = heap.pop() {
        if nodes[idx].word.is_empty() {
            let mut factors = Vec::new();
            let mut cur = idx;
            while let Some((p, f)) = nodes[cur].parent.clone() {
                factors.push(f);
                cur = p;
            }
            factors.reverse();
            return Ok(CrossedElt::from_factors(factors));
        }
        expanded += 1;
        if expanded > limits.max_nodes || nodes[idx].depth >= limits.max_depth {
            if expanded > limits.max_nodes {
                break;
            }
            continue;
        }
        let cur = nodes[idx].word.clone();
        let depth = nodes[idx].depth;
        let l = cur.letters();
        for i in 0..l.len() {
            let prefix = Word::reduce(l[..i].iter().copied());
            for rot in &rots {
                let max_s = rot.letters.len().min(l.len() - i);
                for s_len in 1..=max_s {
                    if l[i + s_len - 1] != rot.letters[s_len - 1] {
                        break;
                    }
                    let t_inv = Word::reduce(rot.letters[s_len..].iter().copied()).inverse();
                    let next = Word::reduce(
                        l[..i]
                            .iter()
                            .chain(t_inv.letters())
                            .chain(&l[i + s_len..])
                            .copied(),
                    );
                    if next.len() > max_length || seen.contains(&next) {
                        continue;
                    }
                    seen.insert(next.clone());
                    let conj = rot.prefix.mul(&prefix.inverse());
                    let key = (next.len(), depth + 1, nodes.len());
                    nodes.push(Node {
                        word: next,
                        depth: depth + 1,
                        parent: Some((idx, Factor::new(rot.relator, rot.inverse, conj))),
                    });
                    heap.push(Reverse(key));
                }
            }
        }
    }
    Err(Error::FillingNotFound {
        word: w.display(names).to_string(),
        max_depth: limits.max_depth,
        max_length,
    })
}

/// `h1` on every Cayley edge `(g, x)`, with `boundary2(h1(g, x)) = rho(g, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Table {
    n_gens: usize,
    entries: Vec<CrossedElt>,
}

pub enum H1Mode<'a> {
    Search(SearchLimits),
    /// Values for the non-tree edges, keyed by `(g, x)`.
    Given(&'a [((usize, usize), CrossedElt)]),
}

fn edge_name(pres: &Presentation, cayley: &CayleyGraph, g: usize, x: usize) -> String {
    format!(
        "{}, {}",
        cayley.element_name(pres, g),
        pres.generators()[x]
    )
}

impl H1Table {
    pub fn build(
        pres: &Presentation,
        cayley: &CayleyGraph,
        tree: &MaximalTree,
        h0: &Contraction0,
        mode: H1Mode<'_>,
    ) -> Result<Self> {
        let k = cayley.num_generators();
        let n = cayley.order();
        let mut entries: Vec<Option<CrossedElt>> = vec![None; n * k];
        for &(g, x) in tree.edges() {
            entries[g * k + x] = Some(CrossedElt::identity());
        }
        match mode {
            H1Mode::Search(limits) => {
                for g in 0..n {
                    for x in 0..k {
                        if entries[g * k + x].is_none() {
                            let loop_word = rho(cayley, h0, g, &Word::gen(x));
                            let c = fill_loop(pres, cayley, &loop_word, &limits).map_err(|e| {
                                Error::H1 {
                                    edge: edge_name(pres, cayley, g, x),
                                    msg: e.to_string(),
                                }
                            })?;
                            entries[g * k + x] = Some(c);
                        }
                    }
                }
            }
            H1Mode::Given(given) => {
                for ((g, x), c) in given {
                    let (g, x) = (*g, *x);
                    if g >= n || x >= k {
                        return Err(Error::H1 {
                            edge: format!("{g}, {x}"),
                            msg: "edge out of range".into(),
                        });
                    }
                    let edge = edge_name(pres, cayley, g, x);
                    if tree.contains(g, x) {
                        if !c.is_identity() {
                            return Err(Error::H1 {
                                edge,
                                msg: "tree edges must have the identity value".into(),
                            });
                        }
                        continue;
                    }
                    if entries[g * k + x].is_some() {
                        return Err(Error::H1 {
                            edge,
                            msg: "duplicate entry".into(),
                        });
                    }
                    entries[g * k + x] = Some(c.clone());
                }
            }
        }
        let mut out = Vec::with_capacity(n * k);
        for (i, e) in entries.into_iter().enumerate() {
            let (g, x) = (i / k, i % k);
            let c = e.ok_or_else(|| Error::H1 {
                edge: edge_name(pres, cayley, g, x),
                msg: "missing value for non-tree edge".into(),
            })?;
            let want = rho(cayley, h0, g, &Word::gen(x));
            let got = c.boundary2(pres);
            if got != want {
                return Err(Error::H1 {
                    edge: edge_name(pres, cayley, g, x),
                    msg: format!(
                        "boundary {} differs from rho = {}",
                        got.display(pres.generators()),
                        want.display(pres.generators())
                    ),
                });
            }
            out.push(c);
        }
        Ok(H1Table {
            n_gens: k,
            entries: out,
        })
    }

    pub fn get(&self, g: usize, x: usize) -> &CrossedElt {
        &self.entries[g * self.n_gens + x]
    }

    /// All `((g, x), h1(g, x))` in edge order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &CrossedElt)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, c)| ((i / self.n_gens, i % self.n_gens), c))
    }

    /// The morphism extension: `h1(g, u)` along the edge path of `(g, u)`.
    pub fn eval(&self, cayley: &CayleyGraph, g: usize, u: &Word) -> CrossedElt {
        let mut out = CrossedElt::identity();
        let mut v = g;
        for &l in u.letters() {
            if l.inverse {
                let prev = cayley.step_back(v, l.gen);
                out = out.mult(&self.get(prev, l.gen).inv());
                v = prev;
            } else {
                out = out.mult(self.get(v, l.gen));
                v = cayley.step(v, l.gen);
            }
        }
        out
    }
}
