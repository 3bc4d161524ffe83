#![allow(dead_code)]

use std::path::PathBuf;

use crossres::cli::{parse_h1, parse_order, parse_presentation, parse_retraction, parse_tree};
use crossres::group::{enumerate, Contraction0, MaximalTree, Presentation, DEFAULT_MAX_COSETS};
use crossres::rewriter::{H1Mode, H1Table, SearchLimits};
use crossres::syzygy::{resolve, EngineConfig, OrderPolicy, ResolutionState};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

pub fn s3_presentation() -> Presentation {
    parse_presentation(&read_fixture("s3/presentation.txt")).unwrap()
}

pub fn quaternion_presentation() -> Presentation {
    parse_presentation("gens: x y\nrel a = x^4\nrel b = x^2 y^-2\nrel c = x y x y^-1\n").unwrap()
}

pub fn cyclic_text(r: usize) -> String {
    format!("gens: x\nrel x2 = x^{r}\n")
}

/// The S3 reference state: fixed tree, h1, order and retraction.
pub fn s3_fixture_state(max_level: usize) -> ResolutionState {
    let pres = s3_presentation();
    let group = enumerate(&pres, DEFAULT_MAX_COSETS).unwrap();
    let tree = parse_tree(&read_fixture("s3/tree.txt"), &pres, &group).unwrap();
    let h0 = Contraction0::from_tree(&group, &tree);
    let given = parse_h1(&read_fixture("s3/h1.txt"), &pres, &group).unwrap();
    let h1 = H1Table::build(&pres, &group, &tree, &h0, H1Mode::Given(&given)).unwrap();
    let config = EngineConfig {
        order: OrderPolicy::Explicit(parse_order(&read_fixture("s3/order.txt"), &pres, &group).unwrap()),
        pinned: parse_retraction(&read_fixture("s3/retraction.txt"), &pres, &group).unwrap(),
    };
    let mut state = ResolutionState::new(pres, group, tree, h0, h1);
    resolve(&mut state, max_level, &config).unwrap();
    state
}

/// Auto mode: BFS tree, searched h1, declared order.
pub fn auto_state(pres: Presentation, max_level: usize) -> ResolutionState {
    let group = enumerate(&pres, DEFAULT_MAX_COSETS).unwrap();
    let tree = MaximalTree::bfs_shortlex(&group);
    let h0 = Contraction0::from_tree(&group, &tree);
    let h1 = H1Table::build(&pres, &group, &tree, &h0, H1Mode::Search(SearchLimits::default())).unwrap();
    let mut state = ResolutionState::new(pres, group, tree, h0, h1);
    resolve(&mut state, max_level, &EngineConfig::default()).unwrap();
    state
}

use crossres::group::CayleyGraph;
use crossres::ring::{GroupRingElt, ModuleElt, WordAction};
use crossres::words::parse_word;
use crossres::{Int, Module};

/// Element of the group named by a word such as `y x` or `x^2 y`.
pub fn elt(pres: &Presentation, group: &CayleyGraph, text: &str) -> usize {
    group.parse_element(pres, text).unwrap()
}

/// Parses hand-written module notation such as `a1.(1+x+x^2)y - a4.(1-y)`.
///
/// Terms are `[+-] sym[.factor...]`; a factor is a parenthesised signed sum
/// of words or a single word. Words are letters with optional `^k` and no
/// spaces (`yx^2` is `y x^2`). `symbols[i]` names basis element `i`.
pub fn hand_module(text: &str, symbols: &[&str], pres: &Presentation, group: &CayleyGraph) -> Module {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s == ['0'] {
        return Module::zero();
    }
    let mut i = 0;
    let mut out = Module::zero();
    while i < s.len() {
        let mut sign = 1i64;
        while i < s.len() && (s[i] == '+' || s[i] == '-') {
            if s[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < s.len() && s[i] != '.' && s[i] != '+' && s[i] != '-' {
            i += 1;
        }
        let sym: String = s[start..i].iter().collect();
        let b = symbols
            .iter()
            .position(|x| *x == sym)
            .unwrap_or_else(|| panic!("unknown symbol `{sym}` in `{text}`"));
        let mut coef = GroupRingElt::<Int>::element(0);
        if i < s.len() && s[i] == '.' {
            i += 1;
            while i < s.len() && s[i] != '+' && s[i] != '-' {
                let factor = if s[i] == '(' {
                    let close = i + s[i..].iter().position(|&c| c == ')').expect("closing paren");
                    let f = ring_sum(&s[i + 1..close], pres, group);
                    i = close + 1;
                    f
                } else {
                    let start = i;
                    i += word_len(&s[i..]);
                    GroupRingElt::element(word_elt(&s[start..i], pres, group))
                };
                coef = coef.mul(&factor, group);
            }
        }
        out.add_assign(&ModuleElt::from_coord(b, coef.scale(&Int::from(sign))));
    }
    out
}

fn word_len(s: &[char]) -> usize {
    let mut i = 0;
    while i < s.len() && s[i].is_ascii_alphabetic() {
        i += 1;
        if i < s.len() && s[i] == '^' {
            i += 1;
            if s[i] == '-' {
                i += 1;
            }
            while i < s.len() && s[i].is_ascii_digit() {
                i += 1;
            }
        }
    }
    i
}

fn word_elt(s: &[char], pres: &Presentation, group: &CayleyGraph) -> usize {
    let mut spaced = String::new();
    for &c in s {
        if c.is_ascii_alphabetic() {
            spaced.push(' ');
        }
        spaced.push(c);
    }
    group.eval(&parse_word(spaced.trim(), pres.generators()).unwrap())
}

fn ring_sum(s: &[char], pres: &Presentation, group: &CayleyGraph) -> GroupRingElt<Int> {
    let mut out = GroupRingElt::zero();
    let mut i = 0;
    while i < s.len() {
        let mut sign = 1i64;
        if s[i] == '+' || s[i] == '-' {
            sign = if s[i] == '-' { -1 } else { 1 };
            i += 1;
        }
        let g = if s[i] == '1' {
            i += 1;
            0
        } else {
            let start = i;
            i += word_len(&s[i..]);
            word_elt(&s[start..i], pres, group)
        };
        out.add_term(g, Int::from(sign));
    }
    out
}

pub const ALPHA: [&str; 4] = ["a1", "a2", "a3", "a4"];
pub const RELATORS: [&str; 3] = ["r", "s", "t"];

/// Reference identities: tag `(element, relator)` and `gamma_i`, in the
/// crossed-element text format.
pub const S3_IDENTITIES: [(&str, &str, &str); 18] = [
    ("x^2", "r", "r^-1 r@x"),
    ("y", "s", "s^-1 s@(y^-1)"),
    ("x^2", "s", "t^-1@(y^-1) t@x"),
    ("x", "t", "s^-1@(x^-1) t s^-1 r^-1@(y^-1) t@x s^-1@x r^-1 t@(x^-1)"),
    ("1", "r", "1"),
    ("1", "s", "1"),
    ("1", "t", "1"),
    ("x", "s", "1"),
    ("y", "t", "1"),
    ("y", "r", "1"),
    ("x", "r", "r^-1 r@(x^-1)"),
    ("x y", "r", "r^-1@(y^-1) r@(x y^-1)"),
    ("y x", "r", "r^-1@(y^-1) r@(x^-1 y^-1)"),
    ("x y", "s", "s^-1@(y x y^-1) s@(x y^-1)"),
    ("x y", "t", "t^-1@(y^-2) t@(x y^-1)"),
    ("x^2", "t", "t^-1@(y^-1) t@x"),
    ("y x", "s", "t@x s^-1@x t^-1@(y^-1) s@(x^-1 y^-1)"),
    ("y x", "t", "t@x s^-1@x r^-1 s^-1@(x^-1) t s^-1 r^-1@(y^-1) t@(x^-1 y^-1)"),
];

/// Reference certificates for alpha_11 .. alpha_18.
pub const S3_CERTIFICATES: [&str; 8] = [
    "-a1.x^2",
    "a1.y",
    "-a1.yx",
    "a2.x^2",
    "a3.y",
    "a3",
    "a3 - a2.yx",
    "a4 + a3.xy",
];

/// Reference identities among identities: `(element, alpha index, mu_i)`.
pub const S3_RELATIONS: [(&str, usize, &str); 24] = [
    ("1", 1, "0"),
    ("1", 2, "0"),
    ("1", 3, "0"),
    ("1", 4, "0"),
    ("x", 1, "0"),
    ("x", 2, "0"),
    ("x", 3, "a3.(y+x^2)"),
    ("x", 4, "a1.(y-x^2)+a4.(x^2-1)"),
    ("x^2", 1, "a1.(1+x+x^2)"),
    ("x^2", 2, "a2.(1+y)x"),
    ("x^2", 3, "a3.(1+yx)x"),
    ("x^2", 4, "a1.(1-yx)+a4.(x-1)"),
    ("y", 1, "0"),
    ("y", 2, "a2.(1+y)"),
    ("y", 3, "0"),
    ("y", 4, "a2.(1+x^2-yx)+a3.(1-y-xy)-a4.(1-y)"),
    ("y x", 1, "0"),
    ("y x", 2, "0"),
    ("y x", 3, "a3.(1+yx)"),
    ("y x", 4, "a1.(1-yx)+a2.(1+x^2-yx)+a3.(1-y-xy)+a4.(-1+yx)"),
    ("y x^2", 1, "a1.(1+x+x^2)y"),
    ("y x^2", 2, "a2.(1+y)x^2"),
    ("y x^2", 3, "0"),
    ("y x^2", 4, "a1.(y-x^2)+a2.(1+x^2-yx)+a3.(1+x^2-xy)+a4.(-1+xy)"),
];

/// The reference minimal relations, as `mu` indices.
pub const S3_ACCEPTED_RELATIONS: [usize; 5] = [9, 14, 19, 12, 16];

/// The remaining `mu_i` in terms of the minimal ones `m9, m14, m19, m12, m16`.
pub const S3_DERIVED_RELATIONS: [(usize, &str); 8] = [
    (21, "m9.y"),
    (10, "m14.x"),
    (22, "m14.x^2"),
    (11, "m19.x"),
    (7, "m19.x^2"),
    (8, "m9.(-1+y)+m12.(x+1)"),
    (20, "m9.(1-y)+m12.(x+1)y+m16"),
    (24, "m12.y+m16+m19.x^2"),
];

pub const MU_SYMBOLS: [&str; 5] = ["m9", "m14", "m19", "m12", "m16"];

/// The level-4 candidate of the fixture state tagged `(element, alpha_k)`.
pub fn level4_candidate(state: &ResolutionState, element: &str, k: usize) -> Module {
    let g = elt(&state.presentation, &state.group, element);
    state
        .level(4)
        .unwrap()
        .candidates
        .iter()
        .find(|c| c.tag.base == g && c.tag.source == k - 1)
        .unwrap()
        .boundary
        .clone()
}
