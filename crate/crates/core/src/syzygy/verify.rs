use std::fmt;

use super::{ResolutionState, Status};
use crate::crossed::{CrossedElt, Factor};
use crate::group::rho;
use crate::lattice::{image_lattice, kernel_lattice, lattice_equal};
use crate::notation::format_module;
use crate::ring::{FiniteGroup, WordAction};
use crate::words::{fox_derivative, Word};
use crate::Module;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub element: String,
    pub lhs: String,
    pub rhs: String,
}

/// One family of equations at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub level: usize,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Check {
    pub(crate) fn new(name: &'static str, level: usize) -> Self {
        Check {
            name,
            level,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, ok: bool, element: impl FnOnce() -> (String, String, String)) {
        self.checked += 1;
        if !ok {
            let (element, lhs, rhs) = element();
            self.failures.push(Failure { element, lhs, rhs });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&Check, &Failure)> + '_ {
        self.checks
            .iter()
            .flat_map(|c| c.failures.iter().map(move |f| (c, f)))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed() { "ok" } else { "FAILED" };
            writeln!(
                f,
                "{:<14} level {}  {:>6} checked  {}",
                c.name, c.level, c.checked, verdict
            )?;
            for fl in &c.failures {
                writeln!(f, "    at {}: {} != {}", fl.element, fl.lhs, fl.rhs)?;
            }
        }
        Ok(())
    }
}

/// Re-checks every equation the state is supposed to satisfy.
pub fn verify_state(state: &ResolutionState) -> Report {
    let mut report = Report::default();
    let pres = &state.presentation;
    let group = &state.group;
    let names = pres.generators();
    let word_text = |w: &Word| w.display(names).to_string();
    let module_text = |m: &Module, n: usize| format_module(m, &state.symbols(n), pres, group);

    let mut c = Check::new("retr2", 0);
    for g in group.elements() {
        let s = state.contraction.sigma(g);
        let ok = group.eval(s) == g && (g != 0 || s.is_empty());
        c.record(ok, || {
            (
                group.element_name(pres, g),
                word_text(s),
                "a word for the element".into(),
            )
        });
    }
    report.checks.push(c);

    let mut c = Check::new("retr3", 1);
    for ((g, x), v) in state.h1.entries() {
        let got = v.boundary2(pres);
        let want = rho(group, &state.contraction, g, &Word::gen(x));
        let tree_ok = !state.tree.contains(g, x) || v.is_identity();
        c.record(got == want && tree_ok, || {
            (state.based_name(1, g, x), word_text(&got), word_text(&want))
        });
    }
    report.checks.push(c);

    let m = state.max_level();
    if m >= 3 {
        check_level3(state, &mut report);
    }
    for n in 4..=m {
        let level = state.level(n).expect("level");
        let below = &state.level(n - 1).expect("level").boundary;
        let mut c = Check::new("delta_delta", n);
        for (b, d) in level.boundary.iter().enumerate() {
            let v = d.apply(below, group);
            c.record(v.is_zero(), || {
                (level.basis[b].symbol.clone(), module_text(&v, n - 2), "0".into())
            });
        }
        report.checks.push(c);
        check_retraction(state, n, &mut report);
    }
    for n in 3..m {
        check_retr4(state, n, &mut report);
    }
    for n in 2..m {
        check_retr5(state, n, &mut report);
    }
    for n in 3..m {
        let lower = &state.level(n).expect("level").boundary;
        let upper = &state.level(n + 1).expect("level").boundary;
        let ker = kernel_lattice(lower, state.basis_len(n - 1), group);
        let img = image_lattice(upper, state.basis_len(n), group);
        let mut c = Check::new("exactness", n);
        c.record(lattice_equal(&ker, &img), || {
            (
                format!("level {n}"),
                format!("image rank {}", img.rank()),
                format!("kernel rank {}", ker.rank()),
            )
        });
        report.checks.push(c);
    }
    report
}

fn check_level3(state: &ResolutionState, report: &mut Report) {
    let pres = &state.presentation;
    let group = &state.group;
    let names = pres.generators();
    let level = state.level(3).expect("level 3");
    let module_text = |m: &Module, n: usize| format_module(m, &state.symbols(n), pres, group);

    let mut c = Check::new("delta2_delta3", 3);
    for (b, x) in level.crossed.iter().enumerate() {
        let w = x.boundary2(pres);
        c.record(w.is_empty(), || {
            (
                level.basis[b].symbol.clone(),
                w.display(names).to_string(),
                "1".into(),
            )
        });
    }
    if level.crossed.len() != level.boundary.len() {
        c.record(false, || {
            (
                "level 3".into(),
                format!("{} crossed forms", level.crossed.len()),
                format!("{} basis elements", level.boundary.len()),
            )
        });
    }
    report.checks.push(c);

    let mut c = Check::new("abelian_form", 3);
    for (b, (d, x)) in level.boundary.iter().zip(&level.crossed).enumerate() {
        let ab: Module = x.abelianise(group);
        c.record(&ab == d, || {
            (level.basis[b].symbol.clone(), module_text(d, 2), module_text(&ab, 2))
        });
    }
    report.checks.push(c);

    let nr = pres.relators().len();
    let mut c = Check::new("retr32", 2);
    for g in group.elements() {
        let sigma_inv = state.contraction.sigma(g).inverse();
        for (r, rel) in pres.relators().iter().enumerate() {
            let want: Module = state
                .h1
                .eval(group, g, &rel.word)
                .inv()
                .mult(&CrossedElt::factor(Factor::new(r, false, sigma_inv.clone())))
                .abelianise(group);
            let got = level.homotopy[g * nr + r].apply(&level.boundary, group);
            c.record(got == want, || {
                (state.based_name(2, g, r), module_text(&got, 2), module_text(&want, 2))
            });
        }
    }
    report.checks.push(c);

    let fox: Vec<Module> = pres
        .relators()
        .iter()
        .map(|rel| {
            let mut v = Module::zero();
            for x in 0..names.len() {
                v.add_coord(x, &fox_derivative(&rel.word, x, group));
            }
            v
        })
        .collect();
    let ker = kernel_lattice(&fox, names.len(), group);
    let img = image_lattice(&level.boundary, nr, group);
    let mut c = Check::new("exactness", 2);
    c.record(lattice_equal(&ker, &img), || {
        (
            "level 2".into(),
            format!("image rank {}", img.rank()),
            format!("Fox kernel rank {}", ker.rank()),
        )
    });
    report.checks.push(c);

    check_retraction(state, 3, report);
}

/// The reduction log agrees with the basis, boundary and homotopy tables.
fn check_retraction(state: &ResolutionState, n: usize, report: &mut Report) {
    let level = state.level(n).expect("level");
    if level.candidates.is_empty() {
        return;
    }
    let pres = &state.presentation;
    let group = &state.group;
    let module_text = |m: &Module, k: usize| format_module(m, &state.symbols(k), pres, group);
    let mut c = Check::new("retraction", n);
    for (i, cand) in level.candidates.iter().enumerate() {
        let xi = match &cand.status {
            Status::Accepted(k) => Module::basis(*k),
            Status::Rejected(cert) => cert.clone(),
        };
        let replay = xi.apply(&level.boundary, group);
        let ok = replay == cand.boundary && level.homotopy.get(i) == Some(&xi);
        c.record(ok, || {
            (
                state.based_name(n - 1, cand.tag.base, cand.tag.source),
                module_text(&replay, n - 1),
                module_text(&cand.boundary, n - 1),
            )
        });
    }
    report.checks.push(c);
}

/// `delta_{n+1} h_n(g, b) = -h_{n-1}(g, delta_n b) + b . g^-1`.
fn check_retr4(state: &ResolutionState, n: usize, report: &mut Report) {
    let pres = &state.presentation;
    let group = &state.group;
    let level = state.level(n).expect("level");
    let upper = state.level(n + 1).expect("level");
    let len = level.basis.len();
    let mut c = Check::new("retr4", n);
    for g in group.elements() {
        for b in 0..len {
            let lhs = upper.homotopy[g * len + b].apply(&upper.boundary, group);
            let h = if n == 3 {
                state.eval_h2_crossed(g, &level.crossed[b])
            } else {
                state.eval_homotopy(n - 1, g, &level.boundary[b])
            };
            let mut rhs = h.neg();
            rhs.add_term(b, group.inv(g), 1.into());
            c.record(lhs == rhs, || {
                let syms = state.symbols(n);
                (
                    state.based_name(n, g, b),
                    format_module(&lhs, &syms, pres, group),
                    format_module(&rhs, &syms, pres, group),
                )
            });
        }
    }
    report.checks.push(c);
}

/// `h_n((g, b) . k) = h_n(g, b)`: the homotopy is defined on based
/// generators, so translating the base and the generator together must not
/// change it.
fn check_retr5(state: &ResolutionState, n: usize, report: &mut Report) {
    let group = &state.group;
    let len = state.basis_len(n);
    let upper = state.level(n + 1).expect("level");
    let mut c = Check::new("retr5", n);
    for g in group.elements() {
        for b in 0..len {
            let want = &upper.homotopy[g * len + b];
            for k in group.elements() {
                let gk = group.mul(g, k);
                let got = if n == 2 {
                    let u = state.contraction.sigma(k).clone();
                    state.eval_h2_crossed(gk, &CrossedElt::factor(Factor::new(b, false, u)))
                } else {
                    state.eval_homotopy(n, gk, &Module::term(b, k, 1.into()))
                };
                c.record(&got == want, || {
                    let syms = state.symbols(n + 1);
                    (
                        format!("{} . {}", state.based_name(n, g, b), group.element_name(&state.presentation, k)),
                        format_module(&got, &syms, &state.presentation, group),
                        format_module(want, &syms, &state.presentation, group),
                    )
                });
            }
        }
    }
    report.checks.push(c);
}
