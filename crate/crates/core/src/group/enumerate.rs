//! Coset enumeration over the trivial subgroup (HLT strategy with lookahead).

use crate::error::{Error, Result};

use super::{CayleyGraph, Presentation};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

const NONE: usize = usize::MAX;

struct CosetTable {
    ncols: usize,
    rows: Vec<Vec<usize>>,
    forward: Vec<usize>,
    live: usize,
    limit: usize,
}

fn col(l: crate::words::Letter) -> usize {
    2 * l.gen + usize::from(l.inverse)
}

impl CosetTable {
    fn new(ngens: usize, limit: usize) -> Self {
        CosetTable {
            ncols: 2 * ngens,
            rows: vec![vec![NONE; 2 * ngens]],
            forward: vec![0],
            live: 1,
            limit,
        }
    }

    fn is_live(&self, c: usize) -> bool {
        self.forward[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.forward[r] != r {
            r = self.forward[r];
        }
        let mut k = c;
        while self.forward[k] != r {
            let next = self.forward[k];
            self.forward[k] = r;
            k = next;
        }
        r
    }

    fn get(&self, c: usize, x: usize) -> usize {
        self.rows[c][x]
    }

    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.rows[c][x] = d;
        self.rows[d][x ^ 1] = c;
    }

    fn define(&mut self, c: usize, x: usize, relators: &[Vec<usize>]) -> Result<()> {
        if self.live >= self.limit {
            self.lookahead(relators);
            if self.live >= self.limit {
                return Err(Error::EnumerationOverflow { limit: self.limit });
            }
            if !self.is_live(c) {
                return Ok(());
            }
        }
        if self.rows.len() >= self.limit.saturating_mul(8) {
            return Err(Error::EnumerationOverflow { limit: self.limit });
        }
        if self.get(c, x) != NONE {
            return Ok(());
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.ncols]);
        self.forward.push(d);
        self.live += 1;
        self.set(c, x, d);
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.forward[drop] = keep;
        self.live -= 1;
        queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.rows[e][x];
                if f == NONE {
                    continue;
                }
                self.rows[f][x ^ 1] = NONE;
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.rows[e1][x];
                let fx = self.rows[f1][x ^ 1];
                if ex != NONE {
                    self.merge(f1, ex, &mut queue);
                } else if fx != NONE {
                    self.merge(e1, fx, &mut queue);
                } else {
                    self.set(e1, x, f1);
                }
            }
        }
    }

    /// Scans `w` at `c` in both directions. Returns the gap `(f, i, j)` when more
    /// than one entry is missing; closes single gaps and processes coincidences.
    fn scan(&mut self, c: usize, w: &[usize]) -> Option<(usize, usize)> {
        if w.is_empty() {
            return None;
        }
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = w.len() as isize - 1;
        while (i as isize) <= j && self.get(f, w[i]) != NONE {
            f = self.get(f, w[i]);
            i += 1;
        }
        if (i as isize) > j {
            if f != b {
                self.coincidence(f, b);
            }
            return None;
        }
        while j >= i as isize && self.get(b, w[j as usize] ^ 1) != NONE {
            b = self.get(b, w[j as usize] ^ 1);
            j -= 1;
        }
        if j < i as isize {
            self.coincidence(f, b);
            None
        } else if j == i as isize {
            self.set(f, w[i], b);
            None
        } else {
            Some((f, i))
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize], relators: &[Vec<usize>]) -> Result<()> {
        loop {
            match self.scan(c, w) {
                None => return Ok(()),
                Some((f, i)) => {
                    self.define(f, w[i], relators)?;
                    if !self.is_live(c) {
                        return Ok(());
                    }
                }
            }
        }
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        let mut c = 0;
        while c < self.rows.len() {
            if self.is_live(c) {
                for w in relators {
                    self.scan(c, w);
                    if !self.is_live(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
    }
}

/// Enumerates the group presented by `pres` and returns its Cayley graph.
pub fn enumerate(pres: &Presentation, max_cosets: usize) -> Result<CayleyGraph> {
    let ngens = pres.generators().len();
    if ngens == 0 {
        return CayleyGraph::from_table(pres, &[vec![]]);
    }
    let relators: Vec<Vec<usize>> = pres
        .relators()
        .iter()
        .map(|r| r.word.letters().iter().map(|&l| col(l)).collect())
        .collect();
    let mut t = CosetTable::new(ngens, max_cosets.max(1));
    let mut c = 0;
    while c < t.rows.len() {
        if t.is_live(c) {
            for w in &relators {
                t.scan_and_fill(c, w, &relators)?;
                if !t.is_live(c) {
                    break;
                }
            }
            if t.is_live(c) {
                for x in 0..t.ncols {
                    if t.is_live(c) && t.get(c, x) == NONE {
                        t.define(c, x, &relators)?;
                    }
                }
            }
        }
        c += 1;
    }

    let live: Vec<usize> = (0..t.rows.len()).filter(|&c| t.is_live(c)).collect();
    let mut index = vec![NONE; t.rows.len()];
    for (i, &c) in live.iter().enumerate() {
        index[c] = i;
    }
    let mut rows = Vec::with_capacity(live.len());
    for &c in &live {
        let mut row = Vec::with_capacity(ngens);
        for g in 0..ngens {
            let d = t.get(c, 2 * g);
            if d == NONE {
                return Err(Error::Table("coset table incomplete after enumeration".into()));
            }
            let d = t.rep(d);
            row.push(index[d]);
        }
        rows.push(row);
    }
    CayleyGraph::from_table(pres, &rows)
}

