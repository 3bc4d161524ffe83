//! Exact linear algebra over `Z G` for finite `G`, by expansion to integer
//! lattices in `Z^(|B| |G|)`.
//!
//! A module element `m` over a basis `B` expands to the vector whose
//! coordinate `(b, g)` (at index `b * |G| + g`) is the coefficient of `g` in
//! `m[b]`. Lattices are stored in row Hermite normal form together with the
//! transformation expressing each HNF row in the original generating rows.

use crate::ring::{FiniteGroup, GroupRingElt, ModuleElt};
use crate::scalar::Scalar;

/// Coordinate layout of `(Z G)^B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layout {
    pub basis_len: usize,
    pub order: usize,
}

impl Layout {
    pub fn new(basis_len: usize, order: usize) -> Self {
        Layout { basis_len, order }
    }

    pub fn dim(&self) -> usize {
        self.basis_len * self.order
    }
}

pub fn expand<T: Scalar>(m: &ModuleElt<T>, layout: Layout) -> Vec<T> {
    let mut v = vec![T::zero(); layout.dim()];
    for (b, g, c) in m.terms() {
        assert!(b < layout.basis_len, "basis index {b} outside layout");
        v[b * layout.order + g] = c.clone();
    }
    v
}

pub fn collapse<T: Scalar>(v: &[T], layout: Layout) -> ModuleElt<T> {
    let mut m = ModuleElt::zero();
    for (i, c) in v.iter().enumerate() {
        m.add_term(i / layout.order, i % layout.order, c.clone());
    }
    m
}

/// Row HNF of `rows`, applying the same unimodular operations to `transforms`.
pub(crate) struct Hnf<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub row_transforms: Vec<Vec<T>>,
    /// Transforms of the rows that reduced to zero: a basis of the left kernel.
    pub kernel: Vec<Vec<T>>,
}

fn axpy<T: Scalar>(dst: &mut [T], k: &T, src: &[T]) {
    if k.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.clone() - k.clone() * s.clone();
        }
    }
}

pub(crate) fn hnf<T: Scalar>(mut rows: Vec<Vec<T>>, mut tr: Vec<Vec<T>>, ncols: usize) -> Hnf<T> {
    let m = rows.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            tr.swap(r, best);
            let mut done = true;
            for i in r + 1..m {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                axpy(&mut tail[0], &q, &head[r]);
                let (th, tt) = tr.split_at_mut(i);
                axpy(&mut tt[0], &q, &th[r]);
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for v in rows[r].iter_mut().chain(tr[r].iter_mut()) {
                *v = -v.clone();
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            let (head, tail) = rows.split_at_mut(r);
            axpy(&mut head[i], &q, &tail[0]);
            let (th, tt) = tr.split_at_mut(r);
            axpy(&mut th[i], &q, &tt[0]);
        }
        pivots.push(c);
        r += 1;
    }
    let kernel = tr.split_off(r);
    rows.truncate(r);
    Hnf {
        rows,
        pivots,
        row_transforms: tr,
        kernel,
    }
}

/// A sublattice of `Z^dim` in canonical row Hermite normal form, with the
/// expression of each HNF row in the generating rows it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice<T> {
    dim: usize,
    generators: Vec<Vec<T>>,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    transforms: Vec<Vec<T>>,
}

impl<T: Scalar> Lattice<T> {
    pub fn zero(dim: usize) -> Self {
        Self::from_rows(dim, Vec::new())
    }

    pub fn full(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut v = vec![T::zero(); dim];
                v[i] = T::one();
                v
            })
            .collect();
        Self::from_rows(dim, rows)
    }

    pub fn from_rows(dim: usize, generators: Vec<Vec<T>>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), dim, "generator length differs from ambient dimension");
        }
        let k = generators.len();
        let identity: Vec<Vec<T>> = (0..k)
            .map(|i| {
                let mut v = vec![T::zero(); k];
                v[i] = T::one();
                v
            })
            .collect();
        let h = hnf(generators.clone(), identity, dim);
        Lattice {
            dim,
            generators,
            rows: h.rows,
            pivots: h.pivots,
            transforms: h.row_transforms,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The HNF basis.
    pub fn basis(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn generators(&self) -> &[Vec<T>] {
        &self.generators
    }

    /// Integer coefficients `y` over the HNF rows with `sum y_i row_i = v`.
    fn reduce(&self, v: &[T]) -> Option<Vec<T>> {
        if v.len() != self.dim {
            return None;
        }
        let mut rest = v.to_vec();
        let mut y = Vec::with_capacity(self.rows.len());
        let mut next_pivot = 0;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if rest[next_pivot..p].iter().any(|c| !c.is_zero()) {
                return None;
            }
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut rest, &q, row);
            y.push(q);
            next_pivot = p + 1;
        }
        if rest.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(y)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).is_some()
    }

    /// Coefficients over the original generating rows reproducing `v`, if `v`
    /// lies in the lattice. Non-membership is exact, not a tolerance.
    pub fn solve(&self, v: &[T]) -> Option<Vec<T>> {
        let y = self.reduce(v)?;
        let mut x = vec![T::zero(); self.generators.len()];
        for (yi, t) in y.iter().zip(&self.transforms) {
            axpy(&mut x, &-yi.clone(), t);
        }
        Some(x)
    }

    pub fn contains_lattice(&self, other: &Lattice<T>) -> bool {
        self.dim == other.dim && other.rows.iter().all(|r| self.contains(r))
    }
}

/// Equality of lattices as identical HNF bases.
pub fn lattice_equal<T: Scalar>(a: &Lattice<T>, b: &Lattice<T>) -> bool {
    a.dim == b.dim && a.rows == b.rows
}

/// The `Z G`-span of module elements: the `Z`-span of all translates `m . g`.
#[derive(Clone, Debug)]
pub struct OrbitLattice<T> {
    layout: Layout,
    gens: Vec<ModuleElt<T>>,
    lattice: Lattice<T>,
}

impl<T: Scalar> OrbitLattice<T> {
    pub fn new<G: FiniteGroup>(gens: Vec<ModuleElt<T>>, basis_len: usize, group: &G) -> Self {
        let layout = Layout::new(basis_len, group.order());
        let mut rows = Vec::with_capacity(gens.len() * group.order());
        for m in &gens {
            for g in 0..group.order() {
                rows.push(expand(&m.act(g, group), layout));
            }
        }
        OrbitLattice {
            layout,
            gens,
            lattice: Lattice::from_rows(layout.dim(), rows),
        }
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn lattice(&self) -> &Lattice<T> {
        &self.lattice
    }

    pub fn generators(&self) -> &[ModuleElt<T>] {
        &self.gens
    }

    pub fn contains(&self, target: &ModuleElt<T>) -> bool {
        self.lattice.contains(&expand(target, self.layout))
    }

    /// A certificate `cert` over the generator indices with
    /// `sum_i gens[i] . cert[i] = target`, if the target is a member.
    ///
    /// Certificates with one or two `+-1` terms are tried first, in generator
    /// and group order, so simple dependencies come out in their simplest form.
    pub fn member_solve<G: FiniteGroup>(
        &self,
        target: &ModuleElt<T>,
        group: &G,
    ) -> Option<ModuleElt<T>> {
        if target.is_zero() {
            return Some(ModuleElt::zero());
        }
        let v = expand(target, self.layout);
        if !self.lattice.contains(&v) {
            return None;
        }
        if let Some(c) = self.sparse_certificate(target, group) {
            return Some(c);
        }
        let x = self.lattice.solve(&v)?;
        let n = self.layout.order;
        let mut cert = ModuleElt::zero();
        for (i, c) in x.into_iter().enumerate() {
            cert.add_term(i / n, i % n, c);
        }
        Some(cert)
    }

    fn sparse_certificate<G: FiniteGroup>(
        &self,
        target: &ModuleElt<T>,
        group: &G,
    ) -> Option<ModuleElt<T>> {
        let n = group.order();
        let translates: Vec<(usize, usize, ModuleElt<T>)> = self
            .gens
            .iter()
            .enumerate()
            .flat_map(|(i, m)| (0..n).map(move |g| (i, g, m.act(g, group))))
            .filter(|(_, _, m)| !m.is_zero())
            .collect();
        let signs = [T::one(), -T::one()];
        for (i, g, m) in &translates {
            for s in &signs {
                if &m.scale(s) == target {
                    return Some(ModuleElt::term(*i, *g, s.clone()));
                }
            }
        }
        for (a, (i, g, m)) in translates.iter().enumerate() {
            for s in &signs {
                let rest = target.sub(&m.scale(s));
                for (j, h, m2) in &translates[a + 1..] {
                    for s2 in &signs {
                        if m2.scale(s2) == rest {
                            let mut cert = ModuleElt::term(*i, *g, s.clone());
                            cert.add_term(*j, *h, s2.clone());
                            return Some(cert);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Replays a certificate: `sum_i gens[i] . cert[i]`.
pub fn replay<T: Scalar, G: FiniteGroup>(
    cert: &ModuleElt<T>,
    gens: &[ModuleElt<T>],
    group: &G,
) -> ModuleElt<T> {
    cert.apply(gens, group)
}

/// Integer kernel of the module map `(Z G)^B -> (Z G)^B'` sending `e_b` to
/// `images[b]`, as a lattice in the expansion of `(Z G)^B`.
pub fn kernel_lattice<T: Scalar, G: FiniteGroup>(
    images: &[ModuleElt<T>],
    target_basis_len: usize,
    group: &G,
) -> Lattice<T> {
    let n = group.order();
    let src = Layout::new(images.len(), n);
    let tgt = Layout::new(target_basis_len, n);
    let mut rows = Vec::with_capacity(src.dim());
    for m in images {
        for g in 0..n {
            rows.push(expand(&m.act(g, group), tgt));
        }
    }
    let k = rows.len();
    let identity: Vec<Vec<T>> = (0..k)
        .map(|i| {
            let mut v = vec![T::zero(); k];
            v[i] = T::one();
            v
        })
        .collect();
    let h = hnf(rows, identity, tgt.dim());
    Lattice::from_rows(src.dim(), h.kernel)
}

/// The image lattice of the same map: the orbit lattice of the images.
pub fn image_lattice<T: Scalar, G: FiniteGroup>(
    images: &[ModuleElt<T>],
    target_basis_len: usize,
    group: &G,
) -> Lattice<T> {
    OrbitLattice::new(images.to_vec(), target_basis_len, group).lattice
}

/// Convenience: the element `sum_g c_g g` of `Z G` as a length-`|G|` vector.
pub fn ring_vector<T: Scalar>(a: &GroupRingElt<T>, order: usize) -> Vec<T> {
    let mut v = vec![T::zero(); order];
    for (g, c) in a.terms() {
        v[g] = c.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_presentation;
    use crate::group::{enumerate, CayleyGraph};
    use crate::words::{fox_derivative, Word};
    use crate::Int;

    fn cyclic(r: usize) -> CayleyGraph {
        let p = parse_presentation(&format!("gens: x\nrel x2 = x^{r}\n")).unwrap();
        enumerate(&p, 100).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&k| Int::from(k)).collect()
    }

    #[test]
    fn expansion() {
        let layout = Layout::new(3, 6);
        assert!(expand(&ModuleElt::<Int>::zero(), layout).iter().all(|c| c == &Int::from(0)));
        let v = expand(&ModuleElt::<Int>::term(2, 4, 1.into()), layout);
        assert_eq!(v.iter().position(|c| c == &Int::from(1)), Some(2 * 6 + 4));
        let m = ModuleElt::<Int>::term(1, 3, 5.into());
        assert_eq!(collapse(&expand(&m, layout), layout), m);
    }

    #[test]
    fn orbit_lattices() {
        let c2 = cyclic(2);
        let empty = OrbitLattice::<Int>::new(Vec::new(), 1, &c2);
        assert_eq!(empty.lattice().rank(), 0);
        let one = OrbitLattice::new(vec![ModuleElt::<Int>::basis(0)], 1, &c2);
        assert_eq!(one.lattice().basis(), &[ints(&[1, 0]), ints(&[0, 1])]);

        let c3 = cyclic(3);
        let gens = vec![ModuleElt::<Int>::from_coord(
            0,
            GroupRingElt::from_terms([(0, Int::from(-1)), (1, Int::from(1))]),
        )];
        let span = OrbitLattice::new(gens, 1, &c3);
        let target = ModuleElt::<Int>::from_coord(
            0,
            GroupRingElt::from_terms([(1, Int::from(-1)), (2, Int::from(1))]),
        );
        assert_eq!(span.member_solve(&target, &c3), Some(ModuleElt::term(0, 1, 1.into())));
        assert_eq!(span.member_solve(&span.generators()[0].clone(), &c3), Some(ModuleElt::term(0, 0, 1.into())));
        assert_eq!(span.member_solve(&ModuleElt::basis(0), &c3), None);
        let sol = span.lattice().solve(&ints(&[2, -1, -1])).unwrap();
        let rebuilt: Vec<Int> = (0..3)
            .map(|j| {
                span.lattice()
                    .generators()
                    .iter()
                    .zip(&sol)
                    .map(|(g, k)| &g[j] * k)
                    .sum()
            })
            .collect();
        assert_eq!(rebuilt, ints(&[2, -1, -1]));
    }

    #[test]
    fn kernels_and_equality() {
        let c4 = cyclic(4);
        let zero = kernel_lattice::<Int, _>(&[ModuleElt::zero(), ModuleElt::zero()], 1, &c4);
        assert!(lattice_equal(&zero, &Lattice::full(8)));

        // Kernel of right multiplication by fox(x^4, x) = N is (t - 1) Z C4.
        let fox = fox_derivative::<Int, _>(&Word::gen(0).pow(4), 0, &c4);
        let ker = kernel_lattice(&[ModuleElt::from_coord(0, fox)], 1, &c4);
        let t_minus_1 = ModuleElt::<Int>::from_coord(
            0,
            GroupRingElt::from_terms([(0, Int::from(-1)), (1, Int::from(1))]),
        );
        let ideal = image_lattice(&[t_minus_1], 1, &c4);
        assert!(lattice_equal(&ker, &ideal));
        assert_eq!(ker.rank(), 3);

        let a = Lattice::from_rows(2, vec![ints(&[2, 4]), ints(&[0, 3])]);
        assert!(lattice_equal(&a, &a.clone()));
        assert!(!lattice_equal(&Lattice::zero(2), &Lattice::from_rows(2, vec![ints(&[1, 1])])));
        let b = Lattice::from_rows(2, vec![ints(&[2, 7]), ints(&[2, 4]), ints(&[4, 11])]);
        assert!(lattice_equal(&a, &b));
    }
}
