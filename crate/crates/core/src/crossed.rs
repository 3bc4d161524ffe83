//! Formal consequences of relators: elements of the free crossed module `C(R)`.
//!
//! Elements are kept as raw factor lists `prod (r_i^e_i)^(u_i)`; no Peiffer
//! normalisation is applied, so equality here is syntactic. Equality of
//! identities among relations is decided through [`CrossedElt::abelianise`].

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{CayleyGraph, Presentation};
use crate::ring::{FiniteGroup, ModuleElt, WordAction};
use crate::scalar::Scalar;
use crate::words::{parse_word, Word};

/// `(r^e)^u` with `boundary = u^-1 (omega r)^e u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub relator: usize,
    pub inverse: bool,
    pub conj: Word,
}

impl Factor {
    pub fn new(relator: usize, inverse: bool, conj: Word) -> Self {
        Factor {
            relator,
            inverse,
            conj,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CrossedElt {
    factors: Vec<Factor>,
}

impl CrossedElt {
    pub fn identity() -> Self {
        CrossedElt::default()
    }

    /// The generator `r` itself.
    pub fn relator(r: usize) -> Self {
        Self::factor(Factor::new(r, false, Word::empty()))
    }

    pub fn factor(f: Factor) -> Self {
        CrossedElt { factors: vec![f] }
    }

    pub fn from_factors(factors: Vec<Factor>) -> Self {
        CrossedElt { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn boundary2(&self, pres: &Presentation) -> Word {
        let rels = pres.relators();
        let mut letters = Vec::new();
        for f in &self.factors {
            let body = if f.inverse {
                rels[f.relator].word.inverse()
            } else {
                rels[f.relator].word.clone()
            };
            letters.extend_from_slice(f.conj.inverse().letters());
            letters.extend_from_slice(body.letters());
            letters.extend_from_slice(f.conj.letters());
        }
        Word::reduce(letters)
    }

    /// `self^w`: every conjugator `u` becomes `u w`.
    pub fn act(&self, w: &Word) -> Self {
        CrossedElt {
            factors: self
                .factors
                .iter()
                .map(|f| Factor::new(f.relator, f.inverse, f.conj.mul(w)))
                .collect(),
        }
    }

    pub fn mult(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        CrossedElt { factors }
    }

    pub fn inv(&self) -> Self {
        CrossedElt {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| Factor::new(f.relator, !f.inverse, f.conj.clone()))
                .collect(),
        }
    }

    /// Image in `(Z G)^R`: `(r^e)^u -> e . e_r . phi(u)`.
    pub fn abelianise<T: Scalar, G: WordAction>(&self, group: &G) -> ModuleElt<T> {
        let mut out = ModuleElt::zero();
        for f in &self.factors {
            out.add_term(f.relator, group.eval(&f.conj), T::from_i64_exact(f.sign()));
        }
        out
    }

    pub fn display<'a>(&'a self, pres: &'a Presentation) -> CrossedDisplay<'a> {
        CrossedDisplay { elt: self, pres }
    }

    /// Parses `r^+1@(u) s^-1 t^+1@x ...`; `1` is the identity.
    pub fn parse(text: &str, pres: &Presentation) -> Result<Self> {
        let mut factors = Vec::new();
        for tok in tokenize(text)? {
            if tok == "1" {
                continue;
            }
            let (head, conj) = match tok.split_once('@') {
                Some((h, c)) => {
                    let c = c.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(c);
                    (h, parse_word(c, pres.generators())?)
                }
                None => (tok.as_str(), Word::empty()),
            };
            let (name, inverse) = match head.split_once('^') {
                Some((n, "+1")) | Some((n, "1")) => (n, false),
                Some((n, "-1")) => (n, true),
                Some(_) => {
                    return Err(Error::parse(None, format!("bad relator exponent in `{tok}`")))
                }
                None => (head, false),
            };
            factors.push(Factor::new(pres.relator_index(name)?, inverse, conj));
        }
        Ok(CrossedElt { factors })
    }
}

/// Splits on whitespace outside parentheses.
fn tokenize(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
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
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::parse(None, "unbalanced `(`"));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

pub struct CrossedDisplay<'a> {
    elt: &'a CrossedElt,
    pres: &'a Presentation,
}

impl fmt::Display for CrossedDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elt.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, fac) in self.elt.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let name = &self.pres.relators()[fac.relator].name;
            let sign = if fac.inverse { "-1" } else { "+1" };
            write!(f, "{name}^{sign}")?;
            if !fac.conj.is_empty() {
                write!(f, "@({})", fac.conj.display(self.pres.generators()))?;
            }
        }
        Ok(())
    }
}

/// An element `(g, c)` of the covering crossed module, based at `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedCrossedElt {
    pub base: usize,
    pub elt: CrossedElt,
}

impl BasedCrossedElt {
    pub fn new(base: usize, elt: CrossedElt) -> Self {
        BasedCrossedElt { base, elt }
    }

    /// Base points `g_i = g . phi(u_i)^-1` of the factors `((g_i, r_i)^e_i)^(g_i, u_i)`.
    pub fn factor_bases(&self, cayley: &CayleyGraph) -> Vec<usize> {
        self.elt
            .factors()
            .iter()
            .map(|f| cayley.mul(self.base, cayley.inv(cayley.eval(&f.conj))))
            .collect()
    }

    /// `(g, c)^(g, u) = (g . phi(u), c^u)`
    pub fn act(&self, cayley: &CayleyGraph, u: &Word) -> Self {
        BasedCrossedElt {
            base: cayley.act(self.base, u),
            elt: self.elt.act(u),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_presentation;
    use crate::group::enumerate;
    use crate::ring::ModuleElt;
    use crate::Int;

    fn s3() -> (Presentation, CayleyGraph) {
        let p = parse_presentation("gens: x y\nrel r = x^3\nrel s = y^2\nrel t = x y x y\n").unwrap();
        let g = enumerate(&p, 100).unwrap();
        (p, g)
    }

    fn w(p: &Presentation, text: &str) -> Word {
        parse_word(text, p.generators()).unwrap()
    }

    #[test]
    fn boundaries() {
        let (p, _) = s3();
        assert_eq!(CrossedElt::relator(0).boundary2(&p), w(&p, "x^3"));
        let f = Factor::new(0, false, w(&p, "x y"));
        let pair = CrossedElt::from_factors(vec![f.clone(), Factor::new(0, true, f.conj.clone())]);
        assert!(pair.boundary2(&p).is_empty());
        let c = CrossedElt::relator(0).act(&w(&p, "y^-1"));
        assert_eq!(c.boundary2(&p), w(&p, "y x^3 y^-1"));
        assert!(c.mult(&c.inv()).boundary2(&p).is_empty());
    }

    #[test]
    fn action_and_inverse() {
        let (p, _) = s3();
        let c = CrossedElt::parse("r^+1@x s^-1@(y x) t", &p).unwrap();
        assert_eq!(c.act(&Word::empty()), c);
        let (u, v) = (w(&p, "x y^-1"), w(&p, "y x^2"));
        assert_eq!(c.act(&u).act(&v), c.act(&u.mul(&v)));

        let rs = CrossedElt::from_factors(vec![
            Factor::new(0, false, w(&p, "x")),
            Factor::new(1, true, w(&p, "y")),
        ]);
        let expected = CrossedElt::from_factors(vec![
            Factor::new(1, false, w(&p, "y")),
            Factor::new(0, true, w(&p, "x")),
        ]);
        assert_eq!(rs.inv(), expected);
    }

    #[test]
    fn abelianisation() {
        let (p, g) = s3();
        let gamma1 = CrossedElt::relator(0).inv().mult(&CrossedElt::relator(0).act(&w(&p, "x")));
        assert_eq!(gamma1, CrossedElt::parse("r^-1 r@x", &p).unwrap());
        assert!(gamma1.boundary2(&p).is_empty());

        let e = |text: &str| g.parse_element(&p, text).unwrap();
        let gamma3 = CrossedElt::parse("t^-1@(y^-1) t@x", &p).unwrap();
        let mut want = ModuleElt::<Int>::term(2, e("x"), 1.into());
        want.add_term(2, e("y^-1"), (-1).into());
        assert_eq!(gamma3.abelianise::<Int, _>(&g), want);

        let pair = CrossedElt::parse("r@(x y) r^-1@(x y)", &p).unwrap();
        assert!(pair.abelianise::<Int, _>(&g).is_zero());
    }

    #[test]
    fn parse_display_round_trip() {
        let (p, _) = s3();
        for text in ["1", "r^+1", "s^-1@(x^-1) t^+1 r^-1@(y^-1 x)"] {
            let c = CrossedElt::parse(text, &p).unwrap();
            assert_eq!(c.display(&p).to_string(), text);
        }
        assert!(CrossedElt::parse("r^2", &p).is_err());
        assert!(CrossedElt::parse("q", &p).is_err());
        assert!(CrossedElt::parse("r@(x", &p).is_err());
    }
}
