//! Reduced words in a finitely generated free group.

use std::fmt;

use super::GroupError;

/// One letter of a free-group word: a generator index and its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u16,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: u16, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn pos(generator: u16) -> Self {
        Letter::new(generator, false)
    }

    pub fn neg(generator: u16) -> Self {
        Letter::new(generator, true)
    }

    pub fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    /// `true` when `self` followed by `other` cancels.
    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        FreeWord { letters: out }
    }

    pub fn generator(g: u16) -> Self {
        FreeWord { letters: vec![Letter::pos(g)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<u16> {
        self.letters.iter().map(|l| l.generator).max()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        // Both operands are reduced, so cancellation only happens at the seam.
        let mut k = 0;
        let (a, b) = (&self.letters, &other.letters);
        while k < a.len() && k < b.len() && a[a.len() - 1 - k].cancels(b[k]) {
            k += 1;
        }
        let mut letters = Vec::with_capacity(a.len() + b.len() - 2 * k);
        letters.extend_from_slice(&a[..a.len() - k]);
        letters.extend_from_slice(&b[k..]);
        FreeWord { letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.mul(self).mul(&g.inverse())
    }

    /// Renders the word with the given generator names, `e` for the identity.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        NamedWord { word: self, names }
    }
}

struct NamedWord<'a> {
    word: &'a FreeWord,
    names: &'a [String],
}

impl fmt::Display for NamedWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("e");
        }
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let name = self
                .names
                .get(l.generator as usize)
                .map(String::as_str)
                .unwrap_or("?");
            f.write_str(name)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Reduces a sequence of `(generator name, exponent)` pairs over the declared
/// generators. Exponents must be `+1` or `-1`.
pub fn reduce<S: AsRef<str>>(
    generators: &[String],
    raw: &[(S, i8)],
) -> Result<FreeWord, GroupError> {
    let mut letters = Vec::with_capacity(raw.len());
    for (name, exp) in raw {
        let name = name.as_ref();
        let idx = generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
        let inverse = match exp {
            1 => false,
            -1 => true,
            other => {
                return Err(GroupError::Parse(format!(
                    "exponent {other} on `{name}` is not +1 or -1"
                )))
            }
        };
        letters.push(Letter::new(idx as u16, inverse));
    }
    Ok(FreeWord::from_letters(letters))
}

/// Parses `a b^-1 a` style text. `e` alone is the identity.
pub fn parse_word(generators: &[String], text: &str) -> Result<FreeWord, GroupError> {
    let text = text.trim();
    if text == "e" || text.is_empty() {
        return Ok(FreeWord::identity());
    }
    let mut raw = Vec::new();
    for tok in text.split_whitespace() {
        let (name, exp) = match tok.split_once('^') {
            Some((name, "-1")) => (name, -1),
            Some((name, "1")) => (name, 1),
            Some(_) => return Err(GroupError::Parse(format!("bad letter `{tok}`"))),
            None => (tok, 1),
        };
        if name == "e" {
            continue;
        }
        raw.push((name, exp));
    }
    reduce(generators, &raw)
}
