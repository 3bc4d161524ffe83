use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::ring::{FiniteGroup, WordAction};
use crate::words::{parse_word, Letter, Word};

use super::Presentation;

/// The Cayley graph of `(G, X)` for a finite group `G`.
///
/// Elements are numbered in breadth-first discovery order from the identity
/// (generators in declaration order), so index 0 is the identity and
/// `word(g)` is the shortlex-least positive word for `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGraph {
    n_gens: usize,
    order: usize,
    /// `[g * n_gens + x] = g . phi(x)`
    table: Vec<usize>,
    /// `[g * n_gens + x] = g . phi(x)^-1`
    inv_table: Vec<usize>,
    mult: Vec<usize>,
    inverse: Vec<usize>,
    words: Vec<Word>,
}

impl CayleyGraph {
    /// Builds and validates a Cayley graph from a right-action table with
    /// `rows[v][x] = v . x`, where row 0 is the identity. The result is
    /// renumbered into breadth-first order.
    pub fn from_table(pres: &Presentation, rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let k = pres.generators().len();
        if n == 0 {
            return Err(Error::Table("empty table".into()));
        }
        for (v, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Table(format!(
                    "row {v} has {} entries, expected {k}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&e| e >= n) {
                return Err(Error::Table(format!("row {v} refers to element {bad}")));
            }
        }
        for x in 0..k {
            let mut seen = vec![false; n];
            for row in rows {
                if std::mem::replace(&mut seen[row[x]], true) {
                    return Err(Error::Table(format!(
                        "column `{}` is not a permutation",
                        pres.generators()[x]
                    )));
                }
            }
        }

        // breadth-first renumbering
        let mut new_index = vec![usize::MAX; n];
        let mut old_of = Vec::with_capacity(n);
        let mut words = Vec::with_capacity(n);
        new_index[0] = 0;
        old_of.push(0);
        words.push(Word::empty());
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for (x, &w) in rows[v].iter().enumerate() {
                if new_index[w] == usize::MAX {
                    new_index[w] = old_of.len();
                    old_of.push(w);
                    words.push(words[new_index[v]].mul(&Word::gen(x)));
                    queue.push_back(w);
                }
            }
        }
        if old_of.len() != n {
            return Err(Error::Table(format!(
                "only {} of {n} elements are reachable from the identity",
                old_of.len()
            )));
        }
        let mut table = vec![0; n * k];
        let mut inv_table = vec![0; n * k];
        for (new, &old) in old_of.iter().enumerate() {
            for x in 0..k {
                let target = new_index[rows[old][x]];
                table[new * k + x] = target;
                inv_table[target * k + x] = new;
            }
        }

        // Right-regular check: the permutation P_g = "walk word(g)" must satisfy
        // P_g then x == P_{g x}. Then {P_g} is a group of order n acting regularly.
        let walk = |start: usize, w: &Word| -> usize {
            w.letters().iter().fold(start, |v, l| {
                if l.inverse {
                    inv_table[v * k + l.gen]
                } else {
                    table[v * k + l.gen]
                }
            })
        };
        let perms: Vec<Vec<usize>> = words
            .iter()
            .map(|w| (0..n).map(|u| walk(u, w)).collect())
            .collect();
        for g in 0..n {
            for x in 0..k {
                let gx = table[g * k + x];
                for u in 0..n {
                    if table[perms[g][u] * k + x] != perms[gx][u] {
                        return Err(Error::Table(
                            "table is not the Cayley graph of a group (action is not regular)"
                                .into(),
                        ));
                    }
                }
            }
        }
        for r in pres.relators() {
            for (v, word) in words.iter().enumerate() {
                if walk(v, &r.word) != v {
                    return Err(Error::Table(format!(
                        "relator `{}` fails at element {}",
                        r.name,
                        word.display(pres.generators())
                    )));
                }
            }
        }
        let mut mult = vec![0; n * n];
        let mut inverse = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                let ab = perms[b][a];
                mult[a * n + b] = ab;
                if ab == 0 {
                    inverse[a] = b;
                }
            }
        }
        Ok(CayleyGraph {
            n_gens: k,
            order: n,
            table,
            inv_table,
            mult,
            inverse,
            words,
        })
    }

    /// Parses a table file: one row per element, whitespace-separated indices,
    /// one column per generator; row 0 is the identity. `#` starts a comment.
    pub fn load_table(pres: &Presentation, text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(Some(i + 1), format!("bad index `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_table(pres, &rows)
    }

    pub fn num_generators(&self) -> usize {
        self.n_gens
    }

    /// `g . phi(x)`
    pub fn step(&self, g: usize, x: usize) -> usize {
        self.table[g * self.n_gens + x]
    }

    /// `g . phi(x)^-1`
    pub fn step_back(&self, g: usize, x: usize) -> usize {
        self.inv_table[g * self.n_gens + x]
    }

    /// Shortlex normal form of `g`.
    pub fn word(&self, g: usize) -> &Word {
        &self.words[g]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Rows `g -> [g . x for x in X]` in the current numbering.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|g| (0..self.n_gens).map(|x| self.step(g, x)).collect())
            .collect()
    }

    /// Evaluates an element given as a word in the generators.
    pub fn parse_element(&self, pres: &Presentation, text: &str) -> Result<usize> {
        Ok(self.eval(&parse_word(text, pres.generators())?))
    }

    pub fn element_name(&self, pres: &Presentation, g: usize) -> String {
        self.words[g].display(pres.generators()).to_string()
    }
}

impl FiniteGroup for CayleyGraph {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

impl WordAction for CayleyGraph {
    fn letter_value(&self, l: Letter) -> usize {
        if l.inverse {
            self.step_back(0, l.gen)
        } else {
            self.step(0, l.gen)
        }
    }

    fn act(&self, g: usize, w: &Word) -> usize {
        w.letters().iter().fold(g, |v, l| {
            if l.inverse {
                self.step_back(v, l.gen)
            } else {
                self.step(v, l.gen)
            }
        })
    }
}
