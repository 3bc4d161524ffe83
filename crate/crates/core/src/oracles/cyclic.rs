use crate::crossed::{CrossedElt, Factor};
use crate::error::{Error, Result};
use crate::group::{enumerate, Contraction0, MaximalTree, Presentation, Relator};
use crate::rewriter::{H1Mode, H1Table};
use crate::syzygy::{BasisElt, Level, ResolutionState};
use crate::words::Word;
use crate::{Module, ZG};

/// `< x | x2 = x^r >`.
pub fn cyclic_presentation(r: usize) -> Result<Presentation> {
    if r < 2 {
        return Err(Error::Config(format!("cyclic order must be at least 2, got {r}")));
    }
    Presentation::new(
        vec!["x".into()],
        vec![Relator {
            name: "x2".into(),
            word: Word::gen(0).pow(r as i64),
        }],
    )
}

/// `N(i) = 1 + t + ... + t^(i-1)`; element `t^k` has index `k`.
fn norm(i: usize) -> ZG {
    ZG::from_terms((0..i).map(|k| (k, 1.into())))
}

/// The periodic resolution of `C_r` with one generator `x_n` per level,
/// through level `n_max`, with the homotopy given in closed form.
pub fn cyclic_resolution(r: usize, n_max: usize) -> Result<ResolutionState> {
    let pres = cyclic_presentation(r)?;
    let group = enumerate(&pres, r + 1)?;
    debug_assert!((0..r).all(|i| group.word(i).len() == i));
    let tree = MaximalTree::bfs_shortlex(&group);
    let contraction = Contraction0::from_tree(&group, &tree);
    let given = [((r - 1, 0), CrossedElt::relator(0))];
    let h1 = H1Table::build(&pres, &group, &tree, &contraction, H1Mode::Given(&given))?;
    let mut state = ResolutionState::new(pres, group, tree, contraction, h1);
    let t = ZG::element(1);
    let t_minus_1 = t.sub(&ZG::element(0));
    for n in 3..=n_max {
        let boundary = if n % 2 == 1 {
            Module::from_coord(0, t_minus_1.clone())
        } else {
            Module::from_coord(0, norm(r))
        };
        // h_{n-1}(t^i, x_{n-1})
        let homotopy = (0..r)
            .map(|i| {
                if (n - 1) % 2 == 0 {
                    if i == 0 {
                        Module::zero()
                    } else {
                        Module::from_coord(0, norm(r - i))
                    }
                } else if i == 1 {
                    Module::basis(0)
                } else {
                    Module::zero()
                }
            })
            .collect();
        let crossed = if n == 3 {
            vec![CrossedElt::from_factors(vec![
                Factor::new(0, true, Word::empty()),
                Factor::new(0, false, Word::gen(0)),
            ])]
        } else {
            Vec::new()
        };
        state.levels.push(Level {
            n,
            basis: vec![BasisElt {
                symbol: format!("x{n}"),
                tag: None,
            }],
            boundary: vec![boundary],
            crossed,
            homotopy,
            candidates: Vec::new(),
            order: Vec::new(),
        });
    }
    Ok(state)
}
