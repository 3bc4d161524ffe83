//! The integral group ring `Z G` of a finite group and free right `Z G`-modules.
//!
//! Group elements are indices `0..order` with `0` the identity. Modules are
//! right modules throughout: `m . g` multiplies every coordinate on the right.

use std::collections::BTreeMap;

use crate::scalar::Scalar;
use crate::words::{Letter, Word};

/// Multiplication in a finite group on element indices.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    fn identity(&self) -> usize {
        0
    }
}

/// A finite group together with the evaluation `phi: F(X) -> G`.
pub trait WordAction: FiniteGroup {
    fn letter_value(&self, l: Letter) -> usize;

    /// `g . phi(w)`
    fn act(&self, g: usize, w: &Word) -> usize {
        w.letters()
            .iter()
            .fold(g, |acc, &l| self.mul(acc, self.letter_value(l)))
    }

    fn eval(&self, w: &Word) -> usize {
        self.act(self.identity(), w)
    }
}

/// Finitely supported integer function on `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElt<T> {
    coeffs: BTreeMap<usize, T>,
}

impl<T> Default for GroupRingElt<T> {
    fn default() -> Self {
        GroupRingElt {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<T: Scalar> GroupRingElt<T> {
    pub fn zero() -> Self {
        GroupRingElt {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(g: usize, c: T) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn element(g: usize) -> Self {
        Self::monomial(g, T::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, T)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: usize) -> T {
        self.coeffs.get(&g).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, g: usize, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(g).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (g, c) in other.terms() {
            self.add_term(g, c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_terms(self.terms().map(|(g, c)| (g, c.clone() * k.clone())))
    }

    /// `self . h`
    pub fn right_mul_elt<G: FiniteGroup>(&self, h: usize, group: &G) -> Self {
        Self::from_terms(self.terms().map(|(g, c)| (group.mul(g, h), c.clone())))
    }

    /// `h . self`
    pub fn left_mul_elt<G: FiniteGroup>(&self, h: usize, group: &G) -> Self {
        Self::from_terms(self.terms().map(|(g, c)| (group.mul(h, g), c.clone())))
    }

    pub fn mul<G: FiniteGroup>(&self, other: &Self, group: &G) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(group.mul(a, b), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> T {
        self.coeffs.values().fold(T::zero(), |acc, c| acc + c.clone())
    }
}

/// Element of a free right `Z G`-module, keyed by basis index.
///
/// The basis itself (its symbols) lives with whoever owns the module; zero
/// coordinates are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElt<T> {
    coords: BTreeMap<usize, GroupRingElt<T>>,
}

impl<T> Default for ModuleElt<T> {
    fn default() -> Self {
        ModuleElt {
            coords: BTreeMap::new(),
        }
    }
}

impl<T: Scalar> ModuleElt<T> {
    pub fn zero() -> Self {
        ModuleElt {
            coords: BTreeMap::new(),
        }
    }

    /// The basis element `e_b` itself.
    pub fn basis(b: usize) -> Self {
        Self::term(b, 0, T::one())
    }

    /// `c . e_b . g`
    pub fn term(b: usize, g: usize, c: T) -> Self {
        let mut out = Self::zero();
        out.add_term(b, g, c);
        out
    }

    pub fn from_coord(b: usize, a: GroupRingElt<T>) -> Self {
        let mut out = Self::zero();
        out.add_coord(b, &a);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, b: usize) -> GroupRingElt<T> {
        self.coords.get(&b).cloned().unwrap_or_default()
    }

    pub fn coords(&self) -> impl Iterator<Item = (usize, &GroupRingElt<T>)> + '_ {
        self.coords.iter().map(|(&b, a)| (b, a))
    }

    /// All nonzero `(basis, element, coefficient)` triples.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.coords
            .iter()
            .flat_map(|(&b, a)| a.terms().map(move |(g, c)| (b, g, c)))
    }

    pub fn support_len(&self) -> usize {
        self.coords.values().map(GroupRingElt::support_len).sum()
    }

    pub fn max_basis_index(&self) -> Option<usize> {
        self.coords.keys().next_back().copied()
    }

    pub fn add_term(&mut self, b: usize, g: usize, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.coords.entry(b).or_default();
        slot.add_term(g, c);
        if slot.is_zero() {
            self.coords.remove(&b);
        }
    }

    pub fn add_coord(&mut self, b: usize, a: &GroupRingElt<T>) {
        for (g, c) in a.terms() {
            self.add_term(b, g, c.clone());
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (b, g, c) in other.terms() {
            self.add_term(b, g, c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero();
        for (b, g, c) in self.terms() {
            out.add_term(b, g, c.clone() * k.clone());
        }
        out
    }

    /// `self . h`
    pub fn act<G: FiniteGroup>(&self, h: usize, group: &G) -> Self {
        let mut out = Self::zero();
        for (b, g, c) in self.terms() {
            out.add_term(b, group.mul(g, h), c.clone());
        }
        out
    }

    /// `self . a` for a group-ring element `a`.
    pub fn right_mul<G: FiniteGroup>(&self, a: &GroupRingElt<T>, group: &G) -> Self {
        let mut out = Self::zero();
        for (b, coord) in self.coords() {
            out.add_coord(b, &coord.mul(a, group));
        }
        out
    }

    /// Applies the module map sending `e_b` to `images[b]`.
    pub fn apply<G: FiniteGroup>(&self, images: &[ModuleElt<T>], group: &G) -> Self {
        let mut out = Self::zero();
        for (b, coord) in self.coords() {
            out.add_assign(&images[b].right_mul(coord, group));
        }
        out
    }

    /// Re-indexes the basis; `f` must be injective on the support.
    pub fn map_basis(&self, mut f: impl FnMut(usize) -> usize) -> Self {
        let mut out = Self::zero();
        for (b, a) in self.coords() {
            out.add_coord(f(b), a);
        }
        out
    }
}
