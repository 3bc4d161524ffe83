//! Free-group words, free reduction and the Fox derivative.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{GroupRingElt, WordAction};
use crate::scalar::Scalar;

/// A generator or its formal inverse.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }

    /// Sort key: generators in declaration order, `x` before `x^-1`.
    fn rank(self) -> usize {
        2 * self.gen + usize::from(self.inverse)
    }
}

/// A freely reduced word in the free group on the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn gen(gen: usize) -> Self {
        Word(vec![Letter::pos(gen)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `self^-1 * other * self`
    pub fn conjugate(&self, other: &Word) -> Word {
        self.inverse().mul(other).mul(self)
    }

    /// Shortlex order: length first, then declaration order letter by letter.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let a = self.0.iter().map(|l| l.rank());
            let b = other.0.iter().map(|l| l.rank());
            a.cmp(b)
        })
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i + 1;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if l.inverse { -run } else { run };
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let name = self.names.get(l.gen).map(String::as_str).unwrap_or("?");
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Checks a generator or relator name: a nonempty token without whitespace,
/// `^`, `(`, `)`, `-`, `@`, `:`, `=`, `*`, `+`, and not the reserved identity `1`.
pub fn validate_name(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name == "1"
        || name.chars().any(|c| {
            c.is_whitespace() || c.is_control() || "^()-@:=*+,".contains(c)
        });
    if bad {
        Err(Error::Presentation(format!("invalid symbol name `{name}`")))
    } else {
        Ok(())
    }
}

/// Parses whitespace-separated tokens `x`, `x^3`, `x^-1`; `1` is the empty word.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e
                    .parse()
                    .map_err(|_| Error::parse(None, format!("bad exponent in `{tok}`")))?;
                (n, e)
            }
            None => (tok, 1),
        };
        let gen = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let l = if exp < 0 {
            Letter::neg(gen)
        } else {
            Letter::pos(gen)
        };
        for _ in 0..exp.unsigned_abs() {
            letters.push(l);
        }
    }
    Ok(Word::reduce(letters))
}

/// Right Fox derivative `dw/dx` evaluated in `Z G`:
/// `d(uv)/dx = (du/dx) phi(v) + dv/dx`, `dx/dx = 1`, `d(x^-1)/dx = -phi(x^-1)`.
pub fn fox_derivative<T, G>(w: &Word, x: usize, group: &G) -> GroupRingElt<T>
where
    T: Scalar,
    G: WordAction,
{
    let mut out = GroupRingElt::zero();
    // suffix = phi(l_{i+1} ... l_n), built right to left
    let mut suffix = group.identity();
    for &l in w.letters().iter().rev() {
        let lv = group.letter_value(l);
        if l.gen == x {
            if l.inverse {
                out.add_term(group.mul(lv, suffix), -T::one());
            } else {
                out.add_term(suffix, T::one());
            }
        }
        suffix = group.mul(lv, suffix);
    }
    out
}
