use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crossed::{CrossedElt, Factor};
use crate::group::{CayleyGraph, Presentation, Relator};
use crate::ring::{FiniteGroup, WordAction};
use crate::syzygy::{Check, Report};
use crate::words::{Letter, Word};
use crate::Module;

/// The standard crossed resolution of a finite group `G`: level 1 is free on
/// symbols `[a]`, level 2 on `[a, b]`, level `n` on `G^n`.
///
/// The section is `sigma(a) = [a]` for every `a`, including the identity;
/// with `sigma(1)` empty the equations fail at base point 1.
pub struct BarResolution<'a> {
    group: &'a CayleyGraph,
    presentation: Presentation,
    cover: CayleyGraph,
}

impl<'a> BarResolution<'a> {
    pub fn new(group: &'a CayleyGraph) -> Self {
        let n = group.order();
        let gens: Vec<String> = (0..n).map(|a| format!("g{a}")).collect();
        let relators = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| Relator {
                name: format!("g{a}_g{b}"),
                word: Word::reduce([
                    Letter::pos(a),
                    Letter::pos(b),
                    Letter::neg(group.mul(a, b)),
                ]),
            })
            .collect();
        let presentation = Presentation::new(gens, relators).expect("valid names");
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|g| (0..n).map(|a| group.mul(g, a)).collect())
            .collect();
        let cover = CayleyGraph::from_table(&presentation, &rows).expect("regular action");
        debug_assert!((0..n).all(|a| cover.eval(&Word::gen(a)) == a));
        BarResolution {
            group,
            presentation,
            cover,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Index of `[a, b]` among the level-2 generators.
    pub fn pair(&self, a: usize, b: usize) -> usize {
        a * self.order() + b
    }

    /// Index of a tuple among the generators of its level.
    pub fn tuple_index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &a| acc * self.order() + a)
    }

    pub fn sigma(&self, a: usize) -> Word {
        Word::gen(a)
    }

    /// `h0(a) = (a, [a]^-1)`
    pub fn h0(&self, a: usize) -> Word {
        self.sigma(a).inverse()
    }

    /// `delta_2[a, b] = [a][b][ab]^-1`
    pub fn delta2(&self, a: usize, b: usize) -> Word {
        self.presentation.relators()[self.pair(a, b)].word.clone()
    }

    /// `delta_3[a, b, c] = [a, bc] [ab, c]^-1 [a, b]^-1 [b, c]^([a]^-1)`
    pub fn delta3(&self, a: usize, b: usize, c: usize) -> CrossedElt {
        let g = self.group;
        CrossedElt::from_factors(vec![
            Factor::new(self.pair(a, g.mul(b, c)), false, Word::empty()),
            Factor::new(self.pair(g.mul(a, b), c), true, Word::empty()),
            Factor::new(self.pair(a, b), true, Word::empty()),
            Factor::new(self.pair(b, c), false, self.h0(a)),
        ])
    }

    /// `delta_n` for `n >= 4`, over the level `n - 1` tuples:
    /// `[a2..an] . a1^-1 + sum_i (-1)^i [.., a_i a_{i+1}, ..] + (-1)^n [a1..a_{n-1}]`.
    pub fn delta(&self, t: &[usize]) -> Module {
        let n = t.len();
        assert!(n >= 4, "module boundary needs n >= 4");
        let g = self.group;
        let mut out = Module::zero();
        out.add_term(self.tuple_index(&t[1..]), g.inv(t[0]), 1.into());
        for i in 0..n - 1 {
            let mut merged = t[..i].to_vec();
            merged.push(g.mul(t[i], t[i + 1]));
            merged.extend_from_slice(&t[i + 2..]);
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            out.add_term(self.tuple_index(&merged), 0, sign.into());
        }
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        out.add_term(self.tuple_index(&t[..n - 1]), 0, sign.into());
        out
    }

    /// `h1(a, [b]) = (1, [a, b])`
    pub fn h1(&self, a: usize, b: usize) -> CrossedElt {
        CrossedElt::relator(self.pair(a, b))
    }

    /// `h1` along an edge path from `a`, given letter by letter (not freely
    /// reduced, so cancelling pairs contribute cancelling factors).
    pub fn h1_path(&self, a: usize, path: &[Letter]) -> CrossedElt {
        let mut out = CrossedElt::identity();
        let mut v = a;
        for &l in path {
            if l.inverse {
                let prev = self.cover.step_back(v, l.gen);
                out = out.mult(&self.h1(prev, l.gen).inv());
                v = prev;
            } else {
                out = out.mult(&self.h1(v, l.gen));
                v = self.cover.step(v, l.gen);
            }
        }
        out
    }

    /// `h_n(a, [a1..an]) = (1, [a, a1..an])`, as a tuple index one level up.
    pub fn homotopy(&self, a: usize, t: &[usize]) -> usize {
        self.tuple_index(t) + a * self.order().pow(t.len() as u32)
    }

    /// `h_2` on a crossed element at base `a`, by the factor-base rule.
    pub fn h2_crossed(&self, a: usize, c: &CrossedElt) -> Module {
        let n = self.order();
        let mut out = Module::zero();
        for f in c.factors() {
            let base = self.group.mul(a, self.group.inv(self.cover.eval(&f.conj)));
            let (b, cc) = (f.relator / n, f.relator % n);
            out.add_term(self.homotopy(base, &[b, cc]), 0, f.sign().into());
        }
        out
    }

    /// `h_n` on a module element over level `n` tuples, at base `a`.
    pub fn h_module(&self, n: usize, a: usize, m: &Module) -> Module {
        let mut out = Module::zero();
        for (b, k, c) in m.terms() {
            let t = self.untuple(b, n);
            let base = self.group.mul(a, self.group.inv(k));
            out.add_term(self.homotopy(base, &t), 0, c.clone());
        }
        out
    }

    pub fn untuple(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let m = self.order();
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % m;
            idx /= m;
        }
        t
    }
}

fn tuples(order: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..order.pow(n as u32)).map(move |mut i| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = i % order;
            i /= order;
        }
        t
    })
}

/// Checks the bar resolution of `group`: boundaries compose to zero and the
/// homotopy satisfies the retraction equations, exhaustively up to
/// dimension 3 and on `samples` random based tuples in dimension 4.
pub fn check_bar(group: &CayleyGraph, samples: usize, seed: u64) -> Report {
    let bar = BarResolution::new(group);
    let n = group.order();
    let pres = bar.presentation();
    let names = pres.generators();
    let show = |t: &[usize]| {
        let parts: Vec<String> = t.iter().map(|a| format!("g{a}")).collect();
        format!("[{}]", parts.join(", "))
    };
    let mut report = Report::default();

    let mut c = Check::new("retr2", 0);
    for a in 0..n {
        c.record(bar.cover.eval(&bar.sigma(a)) == a, || {
            (show(&[a]), bar.sigma(a).display(names).to_string(), format!("g{a}"))
        });
    }
    report.checks.push(c);

    let mut c = Check::new("retr3", 1);
    for a in 0..n {
        for b in 0..n {
            let got = bar.h1(a, b).boundary2(pres);
            let want = bar
                .sigma(a)
                .mul(&Word::gen(b))
                .mul(&bar.sigma(group.mul(a, b)).inverse());
            c.record(got == want, || {
                (
                    format!("(g{a}, [g{b}])"),
                    got.display(names).to_string(),
                    want.display(names).to_string(),
                )
            });
        }
    }
    report.checks.push(c);

    let mut c = Check::new("delta2_delta3", 3);
    for t in tuples(n, 3) {
        let w = bar.delta3(t[0], t[1], t[2]).boundary2(pres);
        c.record(w.is_empty(), || (show(&t), w.display(names).to_string(), "1".into()));
    }
    report.checks.push(c);

    let d3: Vec<Module> = tuples(n, 3)
        .map(|t| bar.delta3(t[0], t[1], t[2]).abelianise(&bar.cover))
        .collect();
    let mut c = Check::new("delta3_delta4", 4);
    for t in tuples(n, 4) {
        let v = bar.delta(&t).apply(&d3, group);
        c.record(v.is_zero(), || (show(&t), format!("{v:?}"), "0".into()));
    }
    report.checks.push(c);

    let mut c = Check::new("retr32", 2);
    for t in tuples(n, 3) {
        let (a, b, cc) = (t[0], t[1], t[2]);
        let h2 = bar.homotopy(a, &[b, cc]);
        let got = bar.delta3(a, b, cc);
        debug_assert_eq!(bar.tuple_index(&t), h2);
        let want = bar
            .h1_path(a, &[Letter::pos(b), Letter::pos(cc), Letter::neg(group.mul(b, cc))])
            .inv()
            .mult(&CrossedElt::factor(Factor::new(bar.pair(b, cc), false, bar.h0(a))));
        c.record(got == want, || {
            (
                format!("(g{a}, [g{b}, g{cc}])"),
                got.display(pres).to_string(),
                want.display(pres).to_string(),
            )
        });
    }
    report.checks.push(c);

    // retr4 at level 3: delta_4 h_3(a, t) = -h_2(a, delta_3 t) + t . a^-1
    let mut c = Check::new("retr4", 3);
    for t in tuples(n, 4) {
        let (a, rest) = (t[0], &t[1..]);
        let lhs = bar.delta(&t);
        let mut rhs = bar.h2_crossed(a, &bar.delta3(rest[0], rest[1], rest[2])).neg();
        rhs.add_term(bar.tuple_index(rest), group.inv(a), 1.into());
        c.record(lhs == rhs, || (format!("(g{a}, {})", show(rest)), format!("{lhs:?}"), format!("{rhs:?}")));
    }
    report.checks.push(c);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Check::new("retr4", 4);
    for _ in 0..samples {
        let t: Vec<usize> = (0..5).map(|_| rng.random_range(0..n)).collect();
        let (a, rest) = (t[0], &t[1..]);
        let lhs = bar.delta(&t);
        let mut rhs = bar.h_module(3, a, &bar.delta(rest)).neg();
        rhs.add_term(bar.tuple_index(rest), group.inv(a), 1.into());
        c.record(lhs == rhs, || (format!("(g{a}, {})", show(rest)), format!("{lhs:?}"), format!("{rhs:?}")));
    }
    report.checks.push(c);

    // retr5: h_n((a, t) . k) = h_n(a, t)
    let mut c = Check::new("retr5", 2);
    for t in tuples(n, 4) {
        let (a, b, cc, k) = (t[0], t[1], t[2], t[3]);
        let moved = CrossedElt::factor(Factor::new(bar.pair(b, cc), false, bar.sigma(k)));
        let got = bar.h2_crossed(group.mul(a, k), &moved);
        let want = Module::basis(bar.homotopy(a, &[b, cc]));
        c.record(got == want, || (format!("(g{a}, [g{b}, g{cc}]) . g{k}"), format!("{got:?}"), format!("{want:?}")));
    }
    report.checks.push(c);
    for (dim, count) in [(3usize, None), (4, Some(samples))] {
        let mut c = Check::new("retr5", dim);
        let mut one = |a: usize, t: &[usize], k: usize| {
            let got = bar.h_module(dim, group.mul(a, k), &Module::term(bar.tuple_index(t), k, 1.into()));
            let want = Module::basis(bar.homotopy(a, t));
            c.record(got == want, || (format!("(g{a}, {}) . g{k}", show(t)), format!("{got:?}"), format!("{want:?}")));
        };
        match count {
            None => {
                for t in tuples(n, dim + 2) {
                    one(t[0], &t[1..=dim], t[dim + 1]);
                }
            }
            Some(s) => {
                for _ in 0..s {
                    let t: Vec<usize> = (0..dim + 2).map(|_| rng.random_range(0..n)).collect();
                    one(t[0], &t[1..=dim], t[dim + 1]);
                }
            }
        }
        report.checks.push(c);
    }
    report
}
