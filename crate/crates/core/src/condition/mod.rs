//! Valuations and winning conditions over totally ordered groups.
//!
//! An energy condition is defined by a [`Valuation`] `val: C -> G`: an infinite
//! word is winning when its sequence of prefix values has an infinite strictly
//! decreasing subsequence. Membership is decided here only for ultimately
//! periodic words `x y^ω`, where it reduces to the sign of `val(y)`: the
//! condition is prefix-independent, and a decrease between two prefixes is a
//! negative value of the infix between them.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::group::{call_args, split_top_level, Element, GroupError, GroupSpec};

pub mod laws;

/// Index of a color in its [`Alphabet`].
pub type ColorId = usize;

/// A finite word over an alphabet, as color indices.
pub type Word = Vec<ColorId>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("unknown color `{0}`")]
    UnknownColor(String),
    #[error("color index {0} out of range")]
    ColorOutOfRange(ColorId),
    #[error("duplicate color `{0}`")]
    DuplicateColor(String),
    #[error("empty color alphabet")]
    EmptyAlphabet,
    #[error("period of an ultimately periodic word must be non-empty")]
    EmptyPeriod,
    #[error("alphabets differ: {0}")]
    AlphabetMismatch(String),
    #[error("horizon {horizon} is shorter than two periods of length {period}")]
    HorizonTooShort { horizon: usize, period: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An ordered, duplicate-free set of color names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self, ConditionError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(ConditionError::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(ConditionError::DuplicateColor(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: ColorId) -> &str {
        &self.names[c]
    }

    pub fn index(&self, name: &str) -> Result<ColorId, ConditionError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ConditionError::UnknownColor(name.to_string()))
    }

    /// Parses whitespace-separated color names.
    pub fn parse_word(&self, text: &str) -> Result<Word, ConditionError> {
        text.split_whitespace().map(|t| self.index(t)).collect()
    }

    pub fn format_word(&self, w: &[ColorId]) -> String {
        if w.is_empty() {
            return "<empty>".into();
        }
        w.iter()
            .map(|&c| self.names.get(c).map(String::as_str).unwrap_or("?"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn check_word(&self, w: &[ColorId]) -> Result<(), ConditionError> {
        match w.iter().find(|&&c| c >= self.len()) {
            Some(&c) => Err(ConditionError::ColorOutOfRange(c)),
            None => Ok(()),
        }
    }
}

/// A map from colors into a totally ordered group, extended to words as a
/// homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    alphabet: Alphabet,
    spec: GroupSpec,
    images: Vec<Element>,
}

impl Valuation {
    pub fn new(alphabet: Alphabet, spec: GroupSpec, images: Vec<Element>) -> Result<Self, ConditionError> {
        spec.validate()?;
        if images.len() != alphabet.len() {
            return Err(ConditionError::AlphabetMismatch(format!(
                "{} colors but {} images",
                alphabet.len(),
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|x| !spec.contains(x)) {
            return Err(GroupError::SpecMismatch(format!("{spec} (image {bad:?})")).into());
        }
        Ok(Valuation { alphabet, spec, images })
    }

    /// Builds a valuation from `(color, element literal)` pairs.
    pub fn from_literals(spec: GroupSpec, pairs: &[(&str, &str)]) -> Result<Self, ConditionError> {
        let alphabet = Alphabet::new(pairs.iter().map(|(c, _)| *c))?;
        let images = pairs
            .iter()
            .map(|(_, lit)| spec.parse_element(lit))
            .collect::<Result<Vec<_>, _>>()?;
        Valuation::new(alphabet, spec, images)
    }

    /// Parses the line-based valuation format:
    ///
    /// ```text
    /// group free(a,b)
    /// val a = a
    /// val a^-1 = a^-1
    /// # comments and blank lines are ignored
    /// ```
    pub fn parse(text: &str) -> Result<Self, ConditionError> {
        let mut spec: Option<GroupSpec> = None;
        let mut names = Vec::new();
        let mut literals = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: String| ConditionError::Syntax { line: n + 1, message };
            if let Some(rest) = line.strip_prefix("group ") {
                if spec.is_some() {
                    return Err(syntax("second `group` line".into()));
                }
                spec = Some(rest.trim().parse().map_err(|e: GroupError| syntax(e.to_string()))?);
            } else if let Some(rest) = line.strip_prefix("val ") {
                let g = spec.as_ref().ok_or_else(|| syntax("`val` before `group`".into()))?;
                let (color, lit) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax("expected `val <color> = <element>`".into()))?;
                let color = color.trim();
                if color.is_empty() || color.contains(char::is_whitespace) {
                    return Err(syntax(format!("bad color name `{color}`")));
                }
                names.push(color.to_string());
                literals.push(g.parse_element(lit).map_err(|e| syntax(e.to_string()))?);
            } else {
                return Err(syntax(format!("unrecognized line `{line}`")));
            }
        }
        let spec = spec.ok_or(ConditionError::Syntax {
            line: 0,
            message: "missing `group` line".into(),
        })?;
        Valuation::new(Alphabet::new(names)?, spec, literals)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn image(&self, c: ColorId) -> &Element {
        &self.images[c]
    }

    /// `val(w)`; the empty word maps to the identity.
    pub fn value(&self, w: &[ColorId]) -> Result<Element, ConditionError> {
        self.alphabet.check_word(w)?;
        let mut acc = self.spec.identity();
        for &c in w {
            acc = self.spec.compose(&acc, &self.images[c])?;
        }
        Ok(acc)
    }

    /// `val` of each non-empty prefix of `w`, in order.
    pub fn prefix_sums(&self, w: &[ColorId]) -> Result<Vec<Element>, ConditionError> {
        self.alphabet.check_word(w)?;
        let mut acc = self.spec.identity();
        let mut out = Vec::with_capacity(w.len());
        for &c in w {
            acc = self.spec.compose(&acc, &self.images[c])?;
            out.push(acc.clone());
        }
        Ok(out)
    }

    pub fn is_negative(&self, w: &[ColorId]) -> Result<bool, ConditionError> {
        Ok(self.spec.is_negative(&self.value(w)?)?)
    }

    /// Same colors and images, reversed order.
    pub fn inverse_order(&self) -> Valuation {
        Valuation {
            alphabet: self.alphabet.clone(),
            spec: self.spec.clone().inverse(),
            images: self.images.clone(),
        }
    }

    /// `val'(c) = (val(c), 1)` in `G × Z` with the lexicographic order. Words
    /// keep their negative set and no non-empty word maps to the identity.
    pub fn strictify(&self) -> Valuation {
        Valuation {
            alphabet: self.alphabet.clone(),
            spec: self.spec.clone().product(GroupSpec::Int),
            images: self
                .images
                .iter()
                .map(|x| Element::Pair(Box::new(x.clone()), Box::new(Element::Int(1))))
                .collect(),
        }
    }

    /// Renders the valuation in the file format accepted by [`parse`](Self::parse).
    pub fn to_file(&self) -> String {
        let mut out = format!("group {}\n", self.spec);
        for (name, x) in self.alphabet.names.iter().zip(&self.images) {
            out.push_str(&format!("val {name} = {}\n", self.spec.format(x)));
        }
        out
    }
}

/// The ultimately periodic word `prefix · period^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpWord {
    pub prefix: Word,
    pub period: Word,
}

impl UpWord {
    pub fn new(prefix: Word, period: Word) -> Result<Self, ConditionError> {
        if period.is_empty() {
            return Err(ConditionError::EmptyPeriod);
        }
        Ok(UpWord { prefix, period })
    }

    /// `period^ω`.
    pub fn periodic(period: Word) -> Result<Self, ConditionError> {
        UpWord::new(Vec::new(), period)
    }

    /// `x · self`.
    pub fn prepend(&self, x: &[ColorId]) -> UpWord {
        let mut prefix = x.to_vec();
        prefix.extend_from_slice(&self.prefix);
        UpWord {
            prefix,
            period: self.period.clone(),
        }
    }

    /// Letter at position `i` (0-based) of the infinite word.
    pub fn letter(&self, i: usize) -> ColorId {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayUp { w: self, alphabet }
    }
}

struct DisplayUp<'a> {
    w: &'a UpWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayUp<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.w.prefix.is_empty() {
            write!(f, "{} ", self.alphabet.format_word(&self.w.prefix))?;
        }
        write!(f, "({})^w", self.alphabet.format_word(&self.w.period))
    }
}

/// A winning condition whose membership is decidable on ultimately periodic
/// words.
pub trait PeriodicCondition: Send + Sync {
    fn alphabet(&self) -> &Alphabet;

    fn contains(&self, w: &UpWord) -> Result<bool, ConditionError>;

    fn describe(&self) -> String;
}

/// Energy condition over a totally ordered group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtogCondition {
    valuation: Valuation,
}

impl EtogCondition {
    pub fn new(valuation: Valuation) -> Self {
        EtogCondition { valuation }
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    /// The condition defined by the same valuation under the reversed order.
    pub fn inverted(&self) -> EtogCondition {
        EtogCondition::new(self.valuation.inverse_order())
    }

    /// Membership of `prefix · period^ω`: `val(period) < 0`. The prefix only
    /// has to be a word over the alphabet.
    pub fn up_member(&self, w: &UpWord) -> Result<bool, ConditionError> {
        self.valuation.alphabet.check_word(&w.prefix)?;
        if w.period.is_empty() {
            return Err(ConditionError::EmptyPeriod);
        }
        self.valuation.is_negative(&w.period)
    }
}

impl PeriodicCondition for EtogCondition {
    fn alphabet(&self) -> &Alphabet {
        &self.valuation.alphabet
    }

    fn contains(&self, w: &UpWord) -> Result<bool, ConditionError> {
        self.up_member(w)
    }

    fn describe(&self) -> String {
        format!("etog({})", self.valuation.spec)
    }
}

/// Brute-force membership straight from the definition, used to test
/// [`EtogCondition::up_member`].
///
/// Walks `horizon` letters past the prefix and looks for positions `i < j`
/// with `j - i` a positive multiple of the period length and the prefix value
/// at `j` strictly below the one at `i`. A period-aligned descent repeats
/// forever and so yields an infinite decreasing subsequence. Conversely an
/// infinite decreasing subsequence has two members at the same offset modulo
/// the period, which is an aligned descent.
///
/// By transitivity an aligned descent from `i` to `i + kp` passes through a
/// descent between two consecutive aligned positions, so only pairs
/// `(i, i + p)` are compared. No group law is used beyond composing the
/// prefix values.
pub fn up_member_oracle(cond: &EtogCondition, w: &UpWord, horizon: usize) -> Result<bool, ConditionError> {
    let p = w.period.len();
    if p == 0 {
        return Err(ConditionError::EmptyPeriod);
    }
    if horizon < 2 * p {
        return Err(ConditionError::HorizonTooShort { horizon, period: p });
    }
    let v = &cond.valuation;
    let spec = v.spec();
    let mut sums = Vec::with_capacity(horizon + 1);
    sums.push(v.value(&w.prefix)?);
    v.alphabet.check_word(&w.period)?;
    for i in 0..horizon {
        let next = spec.compose(sums.last().unwrap(), v.image(w.period[i % p]))?;
        sums.push(next);
    }
    for j in p..=horizon {
        if spec.compare(&sums[j], &sums[j - p])? == Ordering::Less {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A finite union of energy conditions over one alphabet. Membership is the
/// disjunction of the members' memberships.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionCondition {
    members: Vec<EtogCondition>,
}

impl UnionCondition {
    pub fn new(members: Vec<EtogCondition>) -> Result<Self, ConditionError> {
        let first = members
            .first()
            .ok_or_else(|| ConditionError::AlphabetMismatch("empty union".into()))?;
        if let Some(m) = members.iter().find(|m| m.alphabet() != first.alphabet()) {
            return Err(ConditionError::AlphabetMismatch(format!(
                "{:?} vs {:?}",
                first.alphabet().names(),
                m.alphabet().names()
            )));
        }
        Ok(UnionCondition { members })
    }

    pub fn members(&self) -> &[EtogCondition] {
        &self.members
    }
}

impl PeriodicCondition for UnionCondition {
    fn alphabet(&self) -> &Alphabet {
        self.members[0].alphabet()
    }

    fn contains(&self, w: &UpWord) -> Result<bool, ConditionError> {
        for m in &self.members {
            if m.up_member(w)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn describe(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(|m| m.describe()).collect();
        format!("union({})", parts.join(","))
    }
}

/// Either kind of condition, as produced by [`parse_condition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    Etog(EtogCondition),
    Union(UnionCondition),
}

impl Condition {
    fn flatten(self) -> Vec<EtogCondition> {
        match self {
            Condition::Etog(c) => vec![c],
            Condition::Union(u) => u.members,
        }
    }
}

impl PeriodicCondition for Condition {
    fn alphabet(&self) -> &Alphabet {
        match self {
            Condition::Etog(c) => c.alphabet(),
            Condition::Union(u) => u.alphabet(),
        }
    }

    fn contains(&self, w: &UpWord) -> Result<bool, ConditionError> {
        match self {
            Condition::Etog(c) => c.contains(w),
            Condition::Union(u) => u.contains(w),
        }
    }

    fn describe(&self) -> String {
        match self {
            Condition::Etog(c) => c.describe(),
            Condition::Union(u) => u.describe(),
        }
    }
}

/// An arbitrary membership predicate on ultimately periodic words. Used for
/// negative controls that are not energy conditions.
pub struct PredicateCondition<F> {
    alphabet: Alphabet,
    name: String,
    predicate: F,
}

impl<F> PredicateCondition<F>
where
    F: Fn(&UpWord) -> bool + Send + Sync,
{
    pub fn new(alphabet: Alphabet, name: impl Into<String>, predicate: F) -> Self {
        PredicateCondition {
            alphabet,
            name: name.into(),
            predicate,
        }
    }
}

impl<F> PeriodicCondition for PredicateCondition<F>
where
    F: Fn(&UpWord) -> bool + Send + Sync,
{
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn contains(&self, w: &UpWord) -> Result<bool, ConditionError> {
        if w.period.is_empty() {
            return Err(ConditionError::EmptyPeriod);
        }
        self.alphabet.check_word(&w.prefix)?;
        self.alphabet.check_word(&w.period)?;
        Ok((self.predicate)(w))
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// The parity condition on priorities `1..=d` (win iff the highest priority
/// seen infinitely often is odd) as an energy condition over `zlex(d)`:
/// priority `k` maps to `(-1)^k` at coordinate `d - k` (0-based), so higher
/// priorities dominate the lexicographic order.
pub fn parity_as_etog(d: usize) -> Result<EtogCondition, ConditionError> {
    if d == 0 {
        return Err(GroupError::Invalid("parity needs at least one priority".into()).into());
    }
    let alphabet = Alphabet::new((1..=d).map(|k| k.to_string()))?;
    let images = (1..=d)
        .map(|k| {
            let mut v = vec![0i64; d];
            v[d - k] = if k % 2 == 0 { 1 } else { -1 };
            Element::Vec(v)
        })
        .collect();
    Ok(EtogCondition::new(Valuation::new(alphabet, GroupSpec::LexVec(d), images)?))
}

/// Parses a condition string:
///
/// * `etog(<valuation-file>)`
/// * `inv-etog(<valuation-file>)`: same valuation, reversed order
/// * `parity(<d>)`
/// * `union(<cond>,<cond>,...)`
///
/// `read` loads valuation files by path.
pub fn parse_condition<R>(text: &str, read: &R) -> Result<Condition, ConditionError>
where
    R: Fn(&str) -> Result<String, ConditionError>,
{
    let text = text.trim();
    let syntax = |message: String| ConditionError::Syntax { line: 0, message };
    if let Some(path) = call_args(text, "inv-etog") {
        let v = Valuation::parse(&read(path.trim())?)?;
        Ok(Condition::Etog(EtogCondition::new(v).inverted()))
    } else if let Some(path) = call_args(text, "etog") {
        let v = Valuation::parse(&read(path.trim())?)?;
        Ok(Condition::Etog(EtogCondition::new(v)))
    } else if let Some(arg) = call_args(text, "parity") {
        let d = arg
            .trim()
            .parse::<usize>()
            .map_err(|_| syntax(format!("bad priority count in `{text}`")))?;
        Ok(Condition::Etog(parity_as_etog(d)?))
    } else if let Some(mut rest) = call_args(text, "union") {
        let mut members = Vec::new();
        loop {
            match split_top_level(rest, ',') {
                Some(cut) => {
                    members.extend(parse_condition(&rest[..cut], read)?.flatten());
                    rest = &rest[cut + 1..];
                }
                None => {
                    members.extend(parse_condition(rest, read)?.flatten());
                    break;
                }
            }
        }
        Ok(Condition::Union(UnionCondition::new(members)?))
    } else {
        Err(syntax(format!("unknown condition `{text}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_xy() -> Valuation {
        Valuation::from_literals(GroupSpec::Int, &[("x", "-1"), ("y", "1")]).unwrap()
    }

    pub(crate) fn free_ab() -> Valuation {
        Valuation::from_literals(
            GroupSpec::free(["a", "b"]),
            &[("eps", "e"), ("a", "a"), ("a^-1", "a^-1"), ("b", "b"), ("b^-1", "b^-1")],
        )
        .unwrap()
    }

    fn word(v: &Valuation, s: &str) -> Word {
        v.alphabet().parse_word(s).unwrap()
    }

    #[test]
    fn val_word_examples() {
        let v = int_xy();
        assert_eq!(v.value(&word(&v, "x x y")).unwrap(), Element::Int(-1));
        assert_eq!(v.value(&[]).unwrap(), Element::Int(0));
        let f = free_ab();
        assert!(f.value(&word(&f, "eps a eps a^-1")).unwrap() == f.spec().identity());
    }

    #[test]
    fn prefix_sum_examples() {
        let f = free_ab();
        let g = f.spec();
        let sums = f.prefix_sums(&word(&f, "eps a eps a^-1")).unwrap();
        let expect: Vec<Element> = ["e", "a", "a", "e"].iter().map(|s| g.parse_element(s).unwrap()).collect();
        assert_eq!(sums, expect);
        let sums = f.prefix_sums(&word(&f, "eps a eps b")).unwrap();
        let expect: Vec<Element> = ["e", "a", "a", "a b"].iter().map(|s| g.parse_element(s).unwrap()).collect();
        assert_eq!(sums, expect);
        let v = int_xy();
        let sums = v.prefix_sums(&word(&v, "x x x")).unwrap();
        assert_eq!(sums, vec![Element::Int(-1), Element::Int(-2), Element::Int(-3)]);
    }

    #[test]
    fn unknown_color_is_rejected() {
        let v = int_xy();
        assert_eq!(v.alphabet().parse_word("x q"), Err(ConditionError::UnknownColor("q".into())));
        assert!(v.value(&[5]).is_err());
    }

    #[test]
    fn up_member_examples() {
        let f = free_ab();
        let w1 = EtogCondition::new(f.clone());
        let w2 = w1.inverted();
        let union = UnionCondition::new(vec![w1.clone(), w2.clone()]).unwrap();
        let a = f.alphabet();
        let loop_a = UpWord::new(a.parse_word("eps").unwrap(), a.parse_word("a eps a^-1 eps").unwrap()).unwrap();
        assert!(!w1.up_member(&loop_a).unwrap());
        assert!(!w2.up_member(&loop_a).unwrap());
        assert!(!union.contains(&loop_a).unwrap());
        let mixed = UpWord::periodic(a.parse_word("eps a eps b").unwrap()).unwrap();
        assert!(union.contains(&mixed).unwrap());
        assert_ne!(w1.up_member(&mixed).unwrap(), w2.up_member(&mixed).unwrap());

        let v = EtogCondition::new(int_xy());
        assert!(v.up_member(&UpWord::periodic(vec![0]).unwrap()).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let v = EtogCondition::new(int_xy());
        assert!(up_member_oracle(&v, &UpWord::periodic(vec![0]).unwrap(), 4).unwrap());
        let f = EtogCondition::new(free_ab());
        let w = UpWord::periodic(word(f.valuation(), "a eps a^-1 eps")).unwrap();
        assert!(!up_member_oracle(&f, &w, 8).unwrap());
        let lex = EtogCondition::new(
            Valuation::from_literals(GroupSpec::LexVec(2), &[("c", "(0,1)"), ("d", "(-1,0)")]).unwrap(),
        );
        assert!(up_member_oracle(&lex, &UpWord::periodic(vec![0, 1]).unwrap(), 6).unwrap());
        assert!(matches!(
            up_member_oracle(&lex, &UpWord::periodic(vec![0, 1]).unwrap(), 3),
            Err(ConditionError::HorizonTooShort { .. })
        ));
    }

    #[test]
    fn empty_period_is_rejected() {
        assert_eq!(UpWord::new(vec![0], vec![]), Err(ConditionError::EmptyPeriod));
    }

    #[test]
    fn parity_encoding() {
        let p = parity_as_etog(2).unwrap();
        let v = p.valuation();
        assert_eq!(v.image(1), &Element::Vec(vec![1, 0]));
        assert_eq!(v.image(0), &Element::Vec(vec![0, -1]));
        let a = v.alphabet();
        assert!(p.up_member(&UpWord::periodic(a.parse_word("1").unwrap()).unwrap()).unwrap());
        assert!(!p.up_member(&UpWord::periodic(a.parse_word("1 2").unwrap()).unwrap()).unwrap());
        assert!(parity_as_etog(0).is_err());
    }

    #[test]
    fn strictify_examples() {
        let zero = Valuation::from_literals(GroupSpec::Int, &[("x", "0")]).unwrap();
        assert!(!zero.is_negative(&[0]).unwrap());
        let s = zero.strictify();
        assert_eq!(s.spec().sign(&s.value(&[0]).unwrap()).unwrap(), Ordering::Greater);

        let neg = Valuation::from_literals(GroupSpec::Int, &[("x", "-1")]).unwrap().strictify();
        assert_eq!(neg.spec().format(&neg.value(&[0]).unwrap()), "[-1;1]");
        assert!(neg.is_negative(&[0]).unwrap());

        let f = free_ab().strictify();
        assert_eq!(f.spec().sign(&f.value(&[0]).unwrap()).unwrap(), Ordering::Greater);
    }

    #[test]
    fn valuation_file_round_trip() {
        let text = "# the free-group valuation\ngroup free(a,b)\nval eps = e\nval a = a\nval a^-1 = a^-1\n\nval b = b\nval b^-1 = b^-1\n";
        let v = Valuation::parse(text).unwrap();
        assert_eq!(v, free_ab());
        assert_eq!(Valuation::parse(&v.to_file()).unwrap(), v);
    }

    #[test]
    fn valuation_file_errors() {
        assert!(matches!(Valuation::parse("val x = 1"), Err(ConditionError::Syntax { line: 1, .. })));
        assert!(matches!(Valuation::parse("group int\nval x = (1,2)"), Err(ConditionError::Syntax { line: 2, .. })));
        assert!(matches!(
            Valuation::parse("group int\nval x = 1\nval x = 2"),
            Err(ConditionError::DuplicateColor(_))
        ));
        assert!(Valuation::parse("group int\n").is_err());
    }

    #[test]
    fn condition_strings() {
        let read = |path: &str| -> Result<String, ConditionError> {
            match path {
                "f.val" => Ok(free_ab().to_file()),
                "i.val" => Ok(int_xy().to_file()),
                _ => Err(ConditionError::Io {
                    path: path.into(),
                    message: "missing".into(),
                }),
            }
        };
        let c = parse_condition("union(etog(f.val),inv-etog(f.val))", &read).unwrap();
        match &c {
            Condition::Union(u) => {
                assert_eq!(u.members().len(), 2);
                assert_eq!(u.members()[1].valuation().spec(), &GroupSpec::free(["a", "b"]).inverse());
            }
            _ => panic!("expected union"),
        }
        assert!(matches!(parse_condition("parity(3)", &read), Ok(Condition::Etog(_))));
        assert!(matches!(
            parse_condition("union(etog(f.val),etog(i.val))", &read),
            Err(ConditionError::AlphabetMismatch(_))
        ));
        assert!(matches!(parse_condition("etog(nope.val)", &read), Err(ConditionError::Io { .. })));
        assert!(parse_condition("büchi(x)", &read).is_err());
    }
}
