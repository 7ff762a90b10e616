//! Randomized checks of the group and bi-invariant total order axioms for a
//! [`GroupSpec`].

use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Element, GroupError, GroupSpec, ScanOrder};
use crate::report::CheckReport;

#[derive(Debug, Clone)]
pub struct AxiomConfig {
    pub samples: usize,
    /// Word length (free groups) or coordinate magnitude bound for samples.
    pub max_len: usize,
    pub seed: u64,
    pub scan: ScanOrder,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig {
            samples: 10_000,
            max_len: 6,
            seed: 0,
            scan: ScanOrder::DegLex,
        }
    }
}

struct Suite<'a> {
    spec: &'a GroupSpec,
    scan: ScanOrder,
    bound: String,
    cases: u64,
}

impl Suite<'_> {
    fn cmp(&self, x: &Element, y: &Element) -> Result<Ordering, GroupError> {
        self.spec.compare_with(x, y, self.scan)
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element, GroupError> {
        self.spec.compose(x, y)
    }

    fn show(&self, xs: &[(&str, &Element)]) -> String {
        xs.iter()
            .map(|(n, x)| format!("{n}={}", self.spec.format(x)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn report(&self, name: &str, failure: Option<String>) -> CheckReport {
        let name = format!("order.{name}[{}]", self.spec);
        match failure {
            None => CheckReport::pass(name, self.bound.clone(), self.cases),
            Some(cx) => CheckReport::fail(name, self.bound.clone(), self.cases, cx),
        }
    }
}

/// Samples `cfg.samples` random triples and checks, for each: group axioms,
/// totality and antisymmetry, transitivity, two-sided invariance and closure
/// of the positive cone under products and conjugation. One report per law;
/// each report carries the first counterexample found.
pub fn check_order_axioms(spec: &GroupSpec, cfg: &AxiomConfig) -> Result<Vec<CheckReport>, GroupError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let suite = Suite {
        spec,
        scan: cfg.scan,
        bound: format!("samples={},len<={},seed={}", cfg.samples, cfg.max_len, cfg.seed),
        cases: cfg.samples as u64,
    };
    let e = spec.identity();
    let mut group = None;
    let mut totality = None;
    let mut transitivity = None;
    let mut invariance = None;
    let mut cone = None;

    for _ in 0..cfg.samples {
        let x = spec.random_element(&mut rng, cfg.max_len);
        let y = spec.random_element(&mut rng, cfg.max_len);
        let z = spec.random_element(&mut rng, cfg.max_len);

        if group.is_none() {
            let assoc = suite.mul(&suite.mul(&x, &y)?, &z)? == suite.mul(&x, &suite.mul(&y, &z)?)?;
            let ident = suite.mul(&x, &e)? == x && suite.mul(&e, &x)? == x;
            let inv = suite.mul(&x, &spec.invert(&x)?)? == e;
            if !(assoc && ident && inv) {
                group = Some(suite.show(&[("x", &x), ("y", &y), ("z", &z)]));
            }
        }

        if totality.is_none() {
            let xy = suite.cmp(&x, &y)?;
            let yx = suite.cmp(&y, &x)?;
            let equal_iff_quotient_trivial = (xy == Ordering::Equal) == (suite.mul(&x, &spec.invert(&y)?)? == e);
            if xy != yx.reverse() || !equal_iff_quotient_trivial || suite.cmp(&x, &x)? != Ordering::Equal {
                totality = Some(suite.show(&[("x", &x), ("y", &y)]));
            }
        }

        if transitivity.is_none() {
            let t = [&x, &y, &z];
            for (p, q, r) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
                if suite.cmp(t[p], t[q])? != Ordering::Greater
                    && suite.cmp(t[q], t[r])? != Ordering::Greater
                    && suite.cmp(t[p], t[r])? == Ordering::Greater
                {
                    transitivity = Some(suite.show(&[("x", t[p]), ("y", t[q]), ("z", t[r])]));
                    break;
                }
            }
        }

        if invariance.is_none() {
            let a = spec.random_element(&mut rng, cfg.max_len);
            let b = spec.random_element(&mut rng, cfg.max_len);
            let (lo, hi) = if suite.cmp(&a, &b)? == Ordering::Greater { (b, a) } else { (a, b) };
            let left = suite.mul(&suite.mul(&x, &lo)?, &y)?;
            let right = suite.mul(&suite.mul(&x, &hi)?, &y)?;
            if suite.cmp(&left, &right)? == Ordering::Greater {
                invariance = Some(suite.show(&[("a", &lo), ("b", &hi), ("x", &x), ("y", &y)]));
            }
        }

        if cone.is_none() {
            let px = suite.cmp(&x, &e)? == Ordering::Greater;
            let py = suite.cmp(&y, &e)? == Ordering::Greater;
            if px && py && suite.cmp(&suite.mul(&x, &y)?, &e)? != Ordering::Greater {
                cone = Some(format!("product: {}", suite.show(&[("x", &x), ("y", &y)])));
            } else if px {
                let conj = suite.mul(&suite.mul(&z, &x)?, &spec.invert(&z)?)?;
                if suite.cmp(&conj, &e)? != Ordering::Greater {
                    cone = Some(format!("conjugation: {}", suite.show(&[("x", &x), ("g", &z)])));
                }
            }
        }
    }

    Ok(vec![
        suite.report("group-axioms", group),
        suite.report("totality", totality),
        suite.report("transitivity", transitivity),
        suite.report("bi-invariance", invariance),
        suite.report("positive-cone", cone),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(spec: &str, scan: ScanOrder, samples: usize) -> Vec<CheckReport> {
        let cfg = AxiomConfig {
            samples,
            max_len: 6,
            seed: 7,
            scan,
        };
        check_order_axioms(&spec.parse().unwrap(), &cfg).unwrap()
    }

    #[test]
    fn every_kind_passes() {
        for spec in ["int", "zlex(3)", "free(a,b)", "inv(free(a,b))", "prod(free(a,b),int)", "free(x,y,z)"] {
            for r in run(spec, ScanOrder::DegLex, 300) {
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn faulty_scan_breaks_invariance() {
        let reports = run("free(a,b)", ScanOrder::Faulty, 3000);
        let inv = reports.iter().find(|r| r.name.starts_with("order.bi-invariance")).unwrap();
        assert!(!inv.passed());
    }
}
