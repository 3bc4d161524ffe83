use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::ring::{FiniteGroup, WordAction};
use crate::words::{Letter, Word};

use super::CayleyGraph;

/// A spanning tree of the Cayley graph, as a set of edges `(g, x): g -> g.x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalTree {
    edges: Vec<(usize, usize)>,
}

impl MaximalTree {
    /// Breadth-first tree from the identity, generators in declaration order.
    pub fn bfs_shortlex(cayley: &CayleyGraph) -> Self {
        let n = cayley.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for x in 0..cayley.num_generators() {
                let h = cayley.step(g, x);
                if !seen[h] {
                    seen[h] = true;
                    edges.push((g, x));
                    queue.push_back(h);
                }
            }
        }
        MaximalTree { edges }
    }

    /// Validates an explicit edge list: `|G| - 1` distinct edges, no cycle.
    pub fn from_edges(cayley: &CayleyGraph, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = cayley.order();
        if edges.len() + 1 != n {
            return Err(Error::Tree(format!(
                "{} edges given, a spanning tree of {n} vertices needs {}",
                edges.len(),
                n - 1
            )));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        for &(g, x) in &edges {
            if g >= n || x >= cayley.num_generators() {
                return Err(Error::Tree(format!("edge ({g}, {x}) out of range")));
            }
            let a = find(&mut parent, g);
            let b = find(&mut parent, cayley.step(g, x));
            if a == b {
                return Err(Error::Tree(format!(
                    "edge ({}, generator {x}) closes a cycle",
                    g
                )));
            }
            parent[a] = b;
        }
        Ok(MaximalTree { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, g: usize, x: usize) -> bool {
        self.edges.contains(&(g, x))
    }
}

/// The section `sigma: G -> F(X)` with `sigma(1) = 1`; `h0(g) = (g, sigma(g)^-1)`
/// is the tree path `g -> 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction0 {
    sigma: Vec<Word>,
}

impl Contraction0 {
    pub fn from_tree(cayley: &CayleyGraph, tree: &MaximalTree) -> Self {
        let n = cayley.order();
        let mut adj: Vec<Vec<(usize, Letter)>> = vec![Vec::new(); n];
        for &(g, x) in tree.edges() {
            let h = cayley.step(g, x);
            adj[g].push((h, Letter::pos(x)));
            adj[h].push((g, Letter::neg(x)));
        }
        let mut sigma: Vec<Option<Word>> = vec![None; n];
        sigma[0] = Some(Word::empty());
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            let base = sigma[g].clone().expect("visited");
            for &(h, l) in &adj[g] {
                if sigma[h].is_none() {
                    sigma[h] = Some(base.mul(&Word::letter(l)));
                    queue.push_back(h);
                }
            }
        }
        Contraction0 {
            sigma: sigma
                .into_iter()
                .map(|s| s.expect("tree is spanning"))
                .collect(),
        }
    }

    /// An explicit section; checks `phi(sigma(g)) = g` and `sigma(1) = 1`.
    pub fn from_section(cayley: &CayleyGraph, sigma: Vec<Word>) -> Result<Self> {
        if sigma.len() != cayley.order() {
            return Err(Error::Tree("section has the wrong number of entries".into()));
        }
        if !sigma[0].is_empty() {
            return Err(Error::Tree("sigma(1) must be the empty word".into()));
        }
        for (g, w) in sigma.iter().enumerate() {
            if cayley.eval(w) != g {
                return Err(Error::Tree(format!("sigma({g}) does not evaluate to {g}")));
            }
        }
        Ok(Contraction0 { sigma })
    }

    pub fn sigma(&self, g: usize) -> &Word {
        &self.sigma[g]
    }

    /// `h0(g)` as the word of the path `g -> 1`.
    pub fn h0(&self, g: usize) -> Word {
        self.sigma[g].inverse()
    }
}

/// `rho(g, u) = sigma(g) u sigma(g.phi(u))^-1`, a loop at the identity.
pub fn rho(cayley: &CayleyGraph, h0: &Contraction0, g: usize, u: &Word) -> Word {
    let end = cayley.act(g, u);
    h0.sigma(g).mul(u).mul(&h0.sigma(end).inverse())
}
