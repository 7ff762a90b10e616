//! Computable totally ordered groups.
//!
//! A [`GroupSpec`] names one group together with its bi-invariant total
//! order. Elements are plain values ([`Element`]) and every operation takes the
//! spec that gives them meaning; feeding an element of one spec to another is
//! reported as [`GroupError::SpecMismatch`].
//!
//! Supported groups:
//!
//! * `int`: the integers.
//! * `zlex(d)`: `Z^d` with the lexicographic order, leftmost coordinate dominant.
//! * `free(a,b,...)`: the free group on the listed generators, ordered through
//!   the Magnus expansion (see [`magnus`]). Generator order is the declaration
//!   order, and swapping it changes the order.
//! * `inv(G)`: the same group with the reversed order.
//! * `prod(G,H)`: the direct product with the lexicographic order, `G` dominant.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use thiserror::Error;

pub mod axioms;
pub mod free;
pub mod magnus;

pub use free::{FreeWord, Letter};
pub use magnus::{magnus_expand, Monomial, ScanOrder, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("element does not belong to group `{0}`")]
    SpecMismatch(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("no nonzero non-constant Magnus coefficient for a non-identity word")]
    FirstCoefficientMissing,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid group: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Int,
    LexVec(usize),
    Free(Vec<String>),
    Inverse(Box<GroupSpec>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

/// A group element. Elements of `inv(G)` are elements of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Int(i64),
    Vec(Vec<i64>),
    Free(FreeWord),
    Pair(Box<Element>, Box<Element>),
}

impl GroupSpec {
    pub fn free<S: Into<String>, I: IntoIterator<Item = S>>(generators: I) -> Self {
        GroupSpec::Free(generators.into_iter().map(Into::into).collect())
    }

    pub fn inverse(self) -> Self {
        GroupSpec::Inverse(Box::new(self))
    }

    pub fn product(self, right: GroupSpec) -> Self {
        GroupSpec::Product(Box::new(self), Box::new(right))
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        match self {
            GroupSpec::Int => Ok(()),
            GroupSpec::LexVec(0) => Err(GroupError::Invalid("zlex dimension must be at least 1".into())),
            GroupSpec::LexVec(_) => Ok(()),
            GroupSpec::Free(gens) => {
                if gens.is_empty() {
                    return Err(GroupError::Invalid("free group needs a generator".into()));
                }
                if gens.len() > u16::MAX as usize {
                    return Err(GroupError::Invalid("too many generators".into()));
                }
                for (i, g) in gens.iter().enumerate() {
                    if !is_symbol(g) || g == "e" {
                        return Err(GroupError::Invalid(format!("bad generator name `{g}`")));
                    }
                    if gens[..i].contains(g) {
                        return Err(GroupError::Invalid(format!("duplicate generator `{g}`")));
                    }
                }
                Ok(())
            }
            GroupSpec::Inverse(inner) => inner.validate(),
            GroupSpec::Product(l, r) => {
                l.validate()?;
                r.validate()
            }
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupSpec::Int => Element::Int(0),
            GroupSpec::LexVec(d) => Element::Vec(vec![0; *d]),
            GroupSpec::Free(_) => Element::Free(FreeWord::identity()),
            GroupSpec::Inverse(inner) => inner.identity(),
            GroupSpec::Product(l, r) => Element::Pair(Box::new(l.identity()), Box::new(r.identity())),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (GroupSpec::Int, Element::Int(_)) => true,
            (GroupSpec::LexVec(d), Element::Vec(v)) => v.len() == *d,
            (GroupSpec::Free(gens), Element::Free(w)) => {
                w.max_generator().is_none_or(|g| (g as usize) < gens.len())
            }
            (GroupSpec::Inverse(inner), x) => inner.contains(x),
            (GroupSpec::Product(l, r), Element::Pair(a, b)) => l.contains(a) && r.contains(b),
            _ => false,
        }
    }

    fn check(&self, x: &Element) -> Result<(), GroupError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(GroupError::SpecMismatch(self.to_string()))
        }
    }

    pub fn compose(&self, x: &Element, y: &Element) -> Result<Element, GroupError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.compose_unchecked(x, y))
    }

    fn compose_unchecked(&self, x: &Element, y: &Element) -> Element {
        match (self, x, y) {
            (GroupSpec::Inverse(inner), x, y) => inner.compose_unchecked(x, y),
            (_, Element::Int(a), Element::Int(b)) => Element::Int(a + b),
            (_, Element::Vec(a), Element::Vec(b)) => {
                Element::Vec(a.iter().zip(b).map(|(p, q)| p + q).collect())
            }
            (_, Element::Free(a), Element::Free(b)) => Element::Free(a.mul(b)),
            (GroupSpec::Product(l, r), Element::Pair(a1, b1), Element::Pair(a2, b2)) => Element::Pair(
                Box::new(l.compose_unchecked(a1, a2)),
                Box::new(r.compose_unchecked(b1, b2)),
            ),
            _ => unreachable!("operands checked against spec"),
        }
    }

    pub fn invert(&self, x: &Element) -> Result<Element, GroupError> {
        self.check(x)?;
        Ok(self.invert_unchecked(x))
    }

    fn invert_unchecked(&self, x: &Element) -> Element {
        match (self, x) {
            (GroupSpec::Inverse(inner), x) => inner.invert_unchecked(x),
            (_, Element::Int(a)) => Element::Int(-a),
            (_, Element::Vec(v)) => Element::Vec(v.iter().map(|c| -c).collect()),
            (_, Element::Free(w)) => Element::Free(w.inverse()),
            (GroupSpec::Product(l, r), Element::Pair(a, b)) => {
                Element::Pair(Box::new(l.invert_unchecked(a)), Box::new(r.invert_unchecked(b)))
            }
            _ => unreachable!("operand checked against spec"),
        }
    }

    pub fn compare(&self, x: &Element, y: &Element) -> Result<Ordering, GroupError> {
        self.compare_with(x, y, ScanOrder::DegLex)
    }

    /// Like [`compare`](Self::compare), with an explicit monomial scan order for
    /// free-group components.
    pub fn compare_with(&self, x: &Element, y: &Element, scan: ScanOrder) -> Result<Ordering, GroupError> {
        self.check(x)?;
        self.check(y)?;
        self.compare_unchecked(x, y, scan)
    }

    fn compare_unchecked(&self, x: &Element, y: &Element, scan: ScanOrder) -> Result<Ordering, GroupError> {
        match (self, x, y) {
            (GroupSpec::Inverse(inner), x, y) => Ok(inner.compare_unchecked(x, y, scan)?.reverse()),
            (_, Element::Int(a), Element::Int(b)) => Ok(a.cmp(b)),
            (_, Element::Vec(a), Element::Vec(b)) => Ok(a.cmp(b)),
            (_, Element::Free(a), Element::Free(b)) => magnus::sign(&a.mul(&b.inverse()), scan),
            (GroupSpec::Product(l, r), Element::Pair(a1, b1), Element::Pair(a2, b2)) => {
                match l.compare_unchecked(a1, a2, scan)? {
                    Ordering::Equal => r.compare_unchecked(b1, b2, scan),
                    ord => Ok(ord),
                }
            }
            _ => unreachable!("operands checked against spec"),
        }
    }

    /// Sign of `x` relative to the identity.
    pub fn sign(&self, x: &Element) -> Result<Ordering, GroupError> {
        self.compare(x, &self.identity())
    }

    pub fn is_negative(&self, x: &Element) -> Result<bool, GroupError> {
        Ok(self.sign(x)? == Ordering::Less)
    }

    /// Parses an element literal: `e`, an integer, `(1,0,-1)`, a word
    /// `a b^-1 a`, or `[x;y]` for products.
    pub fn parse_element(&self, text: &str) -> Result<Element, GroupError> {
        let text = text.trim();
        if text == "e" {
            return Ok(self.identity());
        }
        match self {
            GroupSpec::Int => text
                .parse::<i64>()
                .map(Element::Int)
                .map_err(|_| GroupError::Parse(format!("`{text}` is not an integer"))),
            GroupSpec::LexVec(d) => {
                let inner = text
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| GroupError::Parse(format!("`{text}` is not a vector literal")))?;
                let coords = inner
                    .split(',')
                    .map(|c| c.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| GroupError::Parse(format!("bad vector `{text}`")))?;
                if coords.len() != *d {
                    return Err(GroupError::Parse(format!(
                        "vector `{text}` has {} coordinates, expected {d}",
                        coords.len()
                    )));
                }
                Ok(Element::Vec(coords))
            }
            GroupSpec::Free(gens) => free::parse_word(gens, text).map(Element::Free),
            GroupSpec::Inverse(inner) => inner.parse_element(text),
            GroupSpec::Product(l, r) => {
                let inner = text
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(|| GroupError::Parse(format!("`{text}` is not a pair literal")))?;
                let cut = split_top_level(inner, ';')
                    .ok_or_else(|| GroupError::Parse(format!("`{text}` needs `;` between components")))?;
                let (a, b) = (&inner[..cut], &inner[cut + 1..]);
                Ok(Element::Pair(Box::new(l.parse_element(a)?), Box::new(r.parse_element(b)?)))
            }
        }
    }

    /// Renders an element as a literal that [`parse_element`](Self::parse_element) accepts.
    pub fn format(&self, x: &Element) -> String {
        match (self, x) {
            (GroupSpec::Inverse(inner), x) => inner.format(x),
            (_, Element::Int(a)) => a.to_string(),
            (_, Element::Vec(v)) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                format!("({})", parts.join(","))
            }
            (GroupSpec::Free(gens), Element::Free(w)) => w.display(gens).to_string(),
            (GroupSpec::Product(l, r), Element::Pair(a, b)) => format!("[{};{}]", l.format(a), r.format(b)),
            (_, x) => format!("{x:?}"),
        }
    }

    /// Random element. Integers and coordinates lie in `-size..=size`; free
    /// words are reduced words of length at most `size`.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, size: usize) -> Element {
        let bound = size as i64;
        match self {
            GroupSpec::Int => Element::Int(rng.gen_range(-bound..=bound)),
            GroupSpec::LexVec(d) => Element::Vec((0..*d).map(|_| rng.gen_range(-bound..=bound)).collect()),
            GroupSpec::Free(gens) => {
                let len = rng.gen_range(0..=size);
                Element::Free(random_reduced_word(rng, gens.len(), len))
            }
            GroupSpec::Inverse(inner) => inner.random_element(rng, size),
            GroupSpec::Product(l, r) => {
                Element::Pair(Box::new(l.random_element(rng, size)), Box::new(r.random_element(rng, size)))
            }
        }
    }
}

/// Uniform random reduced word of exactly `len` letters over `generators` generators.
pub fn random_reduced_word<R: Rng + ?Sized>(rng: &mut R, generators: usize, len: usize) -> FreeWord {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::new(rng.gen_range(0..generators) as u16, rng.gen_bool(0.5));
        if letters.last().is_none_or(|&last| last != l.inv()) {
            letters.push(l);
        }
    }
    FreeWord::from_letters(letters)
}

fn is_symbol(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Byte offset of the first `sep` outside any bracket nesting.
pub(crate) fn split_top_level(text: &str, sep: char) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Parses the argument list of `name(...)`, returning the text between the
/// outer parentheses.
pub(crate) fn call_args<'a>(text: &'a str, name: &str) -> Option<&'a str> {
    text.strip_prefix(name)?
        .trim_start()
        .strip_prefix('(')?
        .strip_suffix(')')
}

impl std::str::FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let spec = if text == "int" {
            GroupSpec::Int
        } else if let Some(arg) = call_args(text, "zlex") {
            let d = arg
                .trim()
                .parse::<usize>()
                .map_err(|_| GroupError::Parse(format!("bad dimension in `{text}`")))?;
            GroupSpec::LexVec(d)
        } else if let Some(arg) = call_args(text, "free") {
            GroupSpec::Free(arg.split(',').map(|g| g.trim().to_string()).collect())
        } else if let Some(arg) = call_args(text, "inv") {
            GroupSpec::Inverse(Box::new(arg.parse()?))
        } else if let Some(arg) = call_args(text, "prod") {
            let cut = split_top_level(arg, ',')
                .ok_or_else(|| GroupError::Parse(format!("`{text}` needs two components")))?;
            GroupSpec::Product(Box::new(arg[..cut].parse()?), Box::new(arg[cut + 1..].parse()?))
        } else {
            return Err(GroupError::Parse(format!("unknown group `{text}`")));
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Int => f.write_str("int"),
            GroupSpec::LexVec(d) => write!(f, "zlex({d})"),
            GroupSpec::Free(gens) => write!(f, "free({})", gens.join(",")),
            GroupSpec::Inverse(inner) => write!(f, "inv({inner})"),
            GroupSpec::Product(l, r) => write!(f, "prod({l},{r})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn el(g: &GroupSpec, s: &str) -> Element {
        g.parse_element(s).unwrap()
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(spec("int"), GroupSpec::Int);
        assert_eq!(spec("zlex(3)"), GroupSpec::LexVec(3));
        assert_eq!(spec("free(a,b)"), GroupSpec::free(["a", "b"]));
        assert_eq!(spec("inv(free(a,b))"), GroupSpec::free(["a", "b"]).inverse());
        assert_eq!(spec("prod(free(a,b),int)"), GroupSpec::free(["a", "b"]).product(GroupSpec::Int));
        assert_eq!(spec("prod(inv(int),zlex(2))").to_string(), "prod(inv(int),zlex(2))");
    }

    #[test]
    fn rejects_bad_specs() {
        assert!("zlex(0)".parse::<GroupSpec>().is_err());
        assert!("free(a,a)".parse::<GroupSpec>().is_err());
        assert!("free()".parse::<GroupSpec>().is_err());
        assert!("real".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn compose_examples() {
        let g = GroupSpec::Int;
        assert_eq!(g.compose(&el(&g, "2"), &el(&g, "3")).unwrap(), Element::Int(5));
        let f = spec("free(a,b)");
        assert_eq!(f.compose(&el(&f, "a b"), &el(&f, "b^-1 a")).unwrap(), el(&f, "a a"));
        let v = spec("zlex(2)");
        assert_eq!(v.compose(&el(&v, "(1,0)"), &el(&v, "(0,-1)")).unwrap(), el(&v, "(1,-1)"));
    }

    #[test]
    fn invert_examples() {
        let f = spec("free(a,b)");
        assert_eq!(f.invert(&el(&f, "a b a^-1")).unwrap(), el(&f, "a b^-1 a^-1"));
        assert_eq!(GroupSpec::Int.invert(&Element::Int(7)).unwrap(), Element::Int(-7));
        let v = spec("zlex(3)");
        assert_eq!(v.invert(&el(&v, "(1,-2,0)")).unwrap(), el(&v, "(-1,2,0)"));
    }

    #[test]
    fn compare_examples() {
        let f = spec("free(a,b)");
        let e = f.identity();
        assert_eq!(f.compare(&el(&f, "a"), &e).unwrap(), Ordering::Greater);
        assert_eq!(f.compare(&el(&f, "a b a^-1 b^-1"), &e).unwrap(), Ordering::Greater);
        assert_eq!(f.compare(&el(&f, "b a b^-1 a^-1"), &e).unwrap(), Ordering::Less);
        let r = spec("inv(int)");
        assert_eq!(r.compare(&el(&r, "3"), &el(&r, "5")).unwrap(), Ordering::Greater);
        let p = spec("prod(int,int)");
        assert_eq!(p.compare(&el(&p, "[0;1]"), &el(&p, "[1;-9]")).unwrap(), Ordering::Less);
    }

    #[test]
    fn mixing_specs_is_an_error() {
        let f = spec("free(a,b)");
        let err = f.compose(&Element::Int(1), &f.identity()).unwrap_err();
        assert!(matches!(err, GroupError::SpecMismatch(_)));
        let wide = spec("free(a,b,c)");
        let c = el(&wide, "c");
        assert!(f.compare(&c, &f.identity()).is_err());
        assert!(spec("zlex(2)").invert(&Element::Vec(vec![1, 2, 3])).is_err());
    }

    #[test]
    fn element_literals_round_trip() {
        let p = spec("prod(free(a,b),prod(int,zlex(2)))");
        let x = el(&p, "[a b^-1;[3;(1,-1)]]");
        assert_eq!(p.format(&x), "[a b^-1;[3;(1,-1)]]");
        assert_eq!(el(&p, "e"), p.identity());
        assert!(p.parse_element("[a;3]").is_err());
    }
}
