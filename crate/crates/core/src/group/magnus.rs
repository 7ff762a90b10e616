//! Magnus expansion of free-group words into truncated non-commutative power
//! series with integer coefficients, and the sign test that orders the free
//! group.
//!
//! A generator `g` maps to `1 + g` and its inverse to the geometric series
//! `1 - g + g^2 - ...`. Monomials are words over generator indices; they are
//! ordered by degree first and then lexicographically by generator index.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::free::FreeWord;
use super::GroupError;

/// A word over generator indices, ordered degree-first then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Power series truncated above `max_degree`. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    max_degree: usize,
    coefficients: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn coefficient(&self, monomial: &[u16]) -> BigInt {
        self.coefficients
            .get(&Monomial(monomial.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in degree-then-lex order, constant term included.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.coefficients.iter()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// First nonzero coefficient on a non-constant monomial, in deg-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.coefficients.iter().find(|(m, _)| m.degree() > 0)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        NamedSeries { series: self, names }
    }
}

struct NamedSeries<'a> {
    series: &'a TruncatedSeries,
    names: &'a [String],
}

impl fmt::Display for NamedSeries<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (m, c)) in self.series.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if m.0.is_empty() {
                f.write_str("1")?;
            } else {
                for g in &m.0 {
                    let name = self.names.get(*g as usize).map(String::as_str).unwrap_or("?");
                    f.write_str(name)?;
                }
            }
            write!(f, ":{c}")?;
        }
        f.write_str("}")
    }
}

/// Dense coefficient table: `levels[d]` holds the `k^d` coefficients of the
/// degree-`d` monomials, indexed with the first letter most significant, so
/// index order within a level is lexicographic order.
struct Dense {
    k: usize,
    levels: Vec<Vec<BigInt>>,
}

impl Dense {
    fn expand(word: &FreeWord, k: usize, max_degree: usize) -> Dense {
        let mut levels: Vec<Vec<BigInt>> = (0..=max_degree)
            .map(|d| vec![BigInt::zero(); k.pow(d as u32)])
            .collect();
        levels[0][0] = BigInt::one();
        for letter in word.letters() {
            let g = letter.generator as usize;
            if letter.inverse {
                // S * (1+g)^-1 = T with T[m g] = S[m g] - T[m]; lower degrees first
                // so T[m] is already final when it is read.
                for d in 1..=max_degree {
                    let (lo, hi) = levels.split_at_mut(d);
                    let (prev, cur) = (&lo[d - 1], &mut hi[0]);
                    for (i, c) in prev.iter().enumerate() {
                        if !c.is_zero() {
                            cur[i * k + g] -= c;
                        }
                    }
                }
            } else {
                // S * (1+g): S[m g] += S[m]; higher degrees first so S[m] is the
                // old value when it is read.
                for d in (1..=max_degree).rev() {
                    let (lo, hi) = levels.split_at_mut(d);
                    let (prev, cur) = (&lo[d - 1], &mut hi[0]);
                    for (i, c) in prev.iter().enumerate() {
                        if !c.is_zero() {
                            cur[i * k + g] += c;
                        }
                    }
                }
            }
        }
        Dense { k, levels }
    }

    fn monomial(&self, degree: usize, mut index: usize) -> Vec<u16> {
        let mut m = vec![0u16; degree];
        for slot in m.iter_mut().rev() {
            *slot = (index % self.k) as u16;
            index /= self.k;
        }
        m
    }
}

fn alphabet_size(word: &FreeWord) -> usize {
    word.max_generator().map_or(1, |g| g as usize + 1)
}

/// Magnus expansion of `word` truncated above `max_degree`.
pub fn magnus_expand(word: &FreeWord, max_degree: usize) -> TruncatedSeries {
    let dense = Dense::expand(word, alphabet_size(word), max_degree);
    let mut coefficients = BTreeMap::new();
    for (d, level) in dense.levels.iter().enumerate() {
        for (i, c) in level.iter().enumerate() {
            if !c.is_zero() {
                coefficients.insert(Monomial(dense.monomial(d, i)), c.clone());
            }
        }
    }
    TruncatedSeries {
        max_degree,
        coefficients,
    }
}

/// Order in which monomials are scanned for the leading coefficient.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ScanOrder {
    /// Degree first, then lexicographic.
    #[default]
    DegLex,
    /// Deliberately broken: the degree-2 monomial `g0 g1` is scanned before the
    /// degree-1 monomial `g1`. Only used as a negative control for the order
    /// axiom checks.
    Faulty,
}

/// Sign of a reduced word in the Magnus order: `Greater` when the first
/// nonzero non-constant coefficient is positive, `Less` when negative, `Equal`
/// for the identity.
///
/// The expansion degree starts small and doubles up to `word.len()`;
/// coefficients up to the truncation degree are exact at every step, so the
/// answer equals a single expansion at degree `word.len()`.
pub fn sign(word: &FreeWord, scan: ScanOrder) -> Result<Ordering, GroupError> {
    if word.is_identity() {
        return Ok(Ordering::Equal);
    }
    let len = word.len();
    let k = alphabet_size(word);
    if scan == ScanOrder::DegLex {
        // Degree-one coefficients are the exponent sums; settle most words here.
        let mut sums = vec![0i64; k];
        for l in word.letters() {
            sums[l.generator as usize] += if l.inverse { -1 } else { 1 };
        }
        if let Some(&c) = sums.iter().find(|&&c| c != 0) {
            return Ok(c.cmp(&0));
        }
    }
    // Degree one is either settled above or, for the faulty scan, needs the
    // degree-two monomial `g0 g1` anyway.
    let mut degree = 2.min(len);
    loop {
        let dense = Dense::expand(word, k, degree);
        if let Some(c) = first_nonzero(&dense, scan) {
            return Ok(if c.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            });
        }
        if degree >= len {
            return Err(GroupError::FirstCoefficientMissing);
        }
        degree = (degree * 2).min(len);
    }
}

fn first_nonzero(dense: &Dense, scan: ScanOrder) -> Option<&BigInt> {
    let max = dense.levels.len() - 1;
    let swapped = scan == ScanOrder::Faulty && dense.k >= 2 && max >= 2;
    for d in 1..=max {
        for (i, c) in dense.levels[d].iter().enumerate() {
            if swapped {
                if d == 1 && i == 1 {
                    let early = &dense.levels[2][1];
                    if !early.is_zero() {
                        return Some(early);
                    }
                }
                if d == 2 && i == 1 {
                    continue;
                }
            }
            if !c.is_zero() {
                return Some(c);
            }
        }
    }
    None
}
