//! Finite groups from presentations: Cayley graph, maximal tree, the section
//! `sigma` with its contraction `h0`, and the loop retraction `rho`.

mod cayley;
mod enumerate;
mod tree;

pub use cayley::CayleyGraph;
pub use enumerate::{enumerate, DEFAULT_MAX_COSETS};
pub use tree::{rho, Contraction0, MaximalTree};

use crate::error::{Error, Result};
use crate::words::{validate_name, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub name: String,
    pub word: Word,
}

/// `< X | omega: R -> F(X) >` with named relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Relator>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Relator>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            validate_name(g)?;
            if generators[..i].contains(g) {
                return Err(Error::Presentation(format!("duplicate generator `{g}`")));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            validate_name(&r.name)?;
            if relators[..i].iter().any(|s| s.name == r.name) {
                return Err(Error::Presentation(format!(
                    "duplicate relator name `{}`",
                    r.name
                )));
            }
            if r.word.is_empty() {
                return Err(Error::Presentation(format!(
                    "relator `{}` is the empty word",
                    r.name
                )));
            }
            if r.word.letters().iter().any(|l| l.gen >= generators.len()) {
                return Err(Error::Presentation(format!(
                    "relator `{}` uses an undeclared generator",
                    r.name
                )));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn relator_names(&self) -> Vec<String> {
        self.relators.iter().map(|r| r.name.clone()).collect()
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn relator_index(&self, name: &str) -> Result<usize> {
        self.relators
            .iter()
            .position(|r| r.name == name)
            .ok_or_else(|| Error::UnknownRelator(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_presentation;
    use crate::ring::{FiniteGroup, WordAction};
    use crate::words::parse_word;

    fn s3() -> (Presentation, CayleyGraph) {
        let p = parse_presentation("gens: x y\nrel r = x^3\nrel s = y^2\nrel t = x y x y\n").unwrap();
        let g = enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        (p, g)
    }

    fn elt(p: &Presentation, g: &CayleyGraph, w: &str) -> usize {
        g.parse_element(p, w).unwrap()
    }

    #[test]
    fn enumerate_small_groups() {
        let (p, g) = s3();
        assert_eq!(g.order(), 6);
        for v in g.elements() {
            for r in p.relators() {
                assert_eq!(g.act(v, &r.word), v);
            }
            assert_eq!(g.eval(g.word(v)), v);
        }
        assert!(g.word(0).is_empty());

        let trivial = parse_presentation("gens: x\nrel r = x\n").unwrap();
        assert_eq!(enumerate(&trivial, 10).unwrap().order(), 1);

        let c4 = parse_presentation("gens: x\nrel r = x^4\n").unwrap();
        let g = enumerate(&c4, 10).unwrap();
        assert_eq!(g.rows(), vec![vec![1], vec![2], vec![3], vec![0]]);
    }

    #[test]
    fn enumerate_overflow_on_infinite_group() {
        let z2 = parse_presentation("gens: x y\nrel c = x y x^-1 y^-1\n").unwrap();
        assert_eq!(
            enumerate(&z2, 500).unwrap_err(),
            Error::EnumerationOverflow { limit: 500 }
        );
    }

    #[test]
    fn load_table_checks() {
        let (p, g) = s3();
        let text: String = g
            .rows()
            .iter()
            .map(|r| format!("{} {}\n", r[0], r[1]))
            .collect();
        let loaded = CayleyGraph::load_table(&p, &text).unwrap();
        assert_eq!(loaded.rows(), g.rows());

        let mut rows = g.rows();
        rows[1] = rows[0].clone();
        assert!(CayleyGraph::from_table(&p, &rows).is_err());

        let c3 = parse_presentation("gens: x\nrel r = x^3\n").unwrap();
        let c6: Vec<Vec<usize>> = (0..6).map(|i| vec![(i + 1) % 6]).collect();
        assert!(matches!(CayleyGraph::from_table(&c3, &c6), Err(Error::Table(_))));
        assert!(matches!(
            CayleyGraph::load_table(&c3, "1\n2\nz\n"),
            Err(Error::Parse { line: Some(3), .. })
        ));
    }

    #[test]
    fn trees_and_sections() {
        let (p, g) = s3();
        let x = 0;
        let y = 1;
        let edges = vec![
            (0, y),
            (0, x),
            (elt(&p, &g, "x^2"), x),
            (elt(&p, &g, "y"), x),
            (elt(&p, &g, "x y"), x),
        ];
        let tree = MaximalTree::from_edges(&g, edges).unwrap();
        assert_eq!(tree.edges().len(), 5);
        let h0 = Contraction0::from_tree(&g, &tree);
        assert_eq!(h0.sigma(elt(&p, &g, "x")), &parse_word("x", p.generators()).unwrap());
        assert!(h0.sigma(0).is_empty());
        for v in g.elements() {
            assert_eq!(g.eval(h0.sigma(v)), v);
        }

        // A cycle instead of a tree.
        let bad = vec![(0, x), (elt(&p, &g, "x"), x), (elt(&p, &g, "x^2"), x), (0, y), (elt(&p, &g, "y"), x)];
        assert!(MaximalTree::from_edges(&g, bad).is_err());

        assert!(rho(&g, &h0, 0, &parse_word("y", p.generators()).unwrap()).is_empty());
        let theta7 = rho(&g, &h0, elt(&p, &g, "x"), &parse_word("x", p.generators()).unwrap());
        assert_eq!(theta7, parse_word("x^3", p.generators()).unwrap());

        let one = parse_presentation("gens: x\nrel r = x\n").unwrap();
        let g1 = enumerate(&one, 10).unwrap();
        assert!(MaximalTree::bfs_shortlex(&g1).edges().is_empty());
    }

    #[test]
    fn cyclic_bfs_tree() {
        for r in 2..=6 {
            let p = parse_presentation(&format!("gens: x\nrel x2 = x^{r}\n")).unwrap();
            let g = enumerate(&p, 100).unwrap();
            let tree = MaximalTree::bfs_shortlex(&g);
            let mut edges = tree.edges().to_vec();
            edges.sort();
            assert_eq!(edges, (0..r - 1).map(|i| (i, 0)).collect::<Vec<_>>());
            let h0 = Contraction0::from_tree(&g, &tree);
            let xw = Word::gen(0);
            for i in 0..r {
                assert_eq!(h0.sigma(i), &xw.pow(i as i64));
            }
            assert_eq!(rho(&g, &h0, r - 1, &xw), xw.pow(r as i64));
        }
    }
}
