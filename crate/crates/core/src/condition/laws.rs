//! Bounded checkers for the laws energy conditions satisfy: closure of the
//! negative-word set under concatenation and cyclic shifts, factorization into
//! negative blocks, the fairly-mixing conditions restricted to ultimately
//! periodic words, and the invariant sub-semigroup `{g : val(g) >= 0}` of the
//! free group on the colors.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    up_member_oracle, Alphabet, ColorId, ConditionError, EtogCondition, PeriodicCondition, UpWord, Valuation, Word,
};
use crate::group::{Element, FreeWord, Letter};
use crate::report::CheckReport;

/// All non-empty words of length at most `max_len` over `k` letters, shortest
/// first, lexicographic within a length.
pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * k);
        for w in &layer {
            for c in 0..k {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Compares [`EtogCondition::up_member`] with [`up_member_oracle`] at
/// horizon `horizon_factor * |period|` on every period of length at most
/// `max_len`, with an empty prefix and with a one-letter prefix.
pub fn check_oracle_equivalence(
    cond: &EtogCondition,
    max_len: usize,
    horizon_factor: usize,
) -> Result<CheckReport, ConditionError> {
    let alphabet = cond.alphabet();
    let name = format!("oracle-equivalence[{}]", cond.describe());
    let bound = format!("|period|<={max_len},horizon={horizon_factor}*|period|");
    let mut cases = 0;
    for period in all_words(alphabet.len(), max_len) {
        for prefix in [vec![], vec![period[period.len() - 1]]] {
            cases += 1;
            let w = UpWord::new(prefix, period.clone())?;
            let fast = cond.up_member(&w)?;
            let slow = up_member_oracle(cond, &w, horizon_factor * period.len())?;
            if fast != slow {
                let cx = format!("{}: member={fast} oracle={slow}", w.display(alphabet));
                return Ok(CheckReport::fail(name, bound, cases, cx));
            }
        }
    }
    Ok(CheckReport::pass(name, bound, cases))
}

/// Exhaustively checks that `p` and its complement are closed under
/// concatenation (all `u, v` with `|u| + |v| <= max_len`) and that `p` is
/// invariant under cyclic shifts of every word up to `max_len`.
pub fn check_closure<P>(name: &str, alphabet: &Alphabet, max_len: usize, p: P) -> Result<CheckReport, ConditionError>
where
    P: Fn(&[ColorId]) -> Result<bool, ConditionError>,
{
    let bound = format!("|w|<={max_len}");
    let words = all_words(alphabet.len(), max_len);
    let mut table: HashMap<&[ColorId], bool> = HashMap::with_capacity(words.len());
    for w in &words {
        table.insert(w.as_slice(), p(w)?);
    }
    let fmt = |w: &[ColorId]| alphabet.format_word(w);
    let mut cases = 0u64;
    let mut joined = Vec::with_capacity(max_len);
    for u in &words {
        for v in &words {
            if u.len() + v.len() > max_len {
                // `words` is sorted by length, so every later v is too long as well.
                break;
            }
            cases += 1;
            joined.clear();
            joined.extend_from_slice(u);
            joined.extend_from_slice(v);
            let (pu, pv, puv) = (table[u.as_slice()], table[v.as_slice()], table[joined.as_slice()]);
            if pu == pv && puv != pu {
                let which = if pu { "P" } else { "complement of P" };
                return Ok(CheckReport::fail(
                    name,
                    bound,
                    cases,
                    format!("{which} not closed: u=[{}] v=[{}]", fmt(u), fmt(v)),
                ));
            }
        }
    }
    for w in &words {
        let pw = table[w.as_slice()];
        for s in 1..w.len() {
            cases += 1;
            let mut r = w[s..].to_vec();
            r.extend_from_slice(&w[..s]);
            if table[r.as_slice()] != pw {
                return Ok(CheckReport::fail(
                    name,
                    bound,
                    cases,
                    format!("cyclic shift changes membership: [{}] vs [{}]", fmt(w), fmt(&r)),
                ));
            }
        }
    }
    Ok(CheckReport::pass(name, bound, cases))
}

/// Splits `w` into one or more consecutive blocks each satisfying `p`, by
/// dynamic programming over cut positions. Returns the end offsets of the
/// blocks (the last one is `w.len()`), or `None` when no such split exists.
pub fn factorize_wp<P>(p: P, w: &[ColorId]) -> Result<Option<Vec<usize>>, ConditionError>
where
    P: Fn(&[ColorId]) -> Result<bool, ConditionError>,
{
    let n = w.len();
    if n == 0 {
        return Ok(None);
    }
    // back[j] = start of the last block of some factorization of w[..j].
    let mut back: Vec<Option<usize>> = vec![None; n + 1];
    for j in 1..=n {
        for i in 0..j {
            if (i == 0 || back[i].is_some()) && p(&w[i..j])? {
                back[j] = Some(i);
                break;
            }
        }
    }
    if back[n].is_none() {
        return Ok(None);
    }
    let mut cuts = Vec::new();
    let mut j = n;
    while j > 0 {
        cuts.push(j);
        j = back[j].expect("reachable prefix has a predecessor");
    }
    cuts.reverse();
    Ok(Some(cuts))
}

#[derive(Debug, Clone)]
pub struct MixingConfig {
    /// Random instances per condition.
    pub samples: usize,
    /// Maximum length of sampled prefixes, periods and blocks.
    pub max_len: usize,
    /// Tail pairs `(u, v)` with `|u|, |v| <= tail_len` are enumerated
    /// exhaustively for condition (C), on top of the random instances.
    pub tail_len: usize,
    pub seed: u64,
}

impl Default for MixingConfig {
    fn default() -> Self {
        MixingConfig {
            samples: 1000,
            max_len: 4,
            tail_len: 2,
            seed: 0,
        }
    }
}

fn random_word<R: Rng>(rng: &mut R, k: usize, min: usize, max: usize) -> Word {
    let len = rng.gen_range(min..=max);
    (0..len).map(|_| rng.gen_range(0..k)).collect()
}

fn random_up<R: Rng>(rng: &mut R, k: usize, max_len: usize) -> UpWord {
    UpWord {
        prefix: random_word(rng, k, 0, max_len),
        period: random_word(rng, k, 1, max_len),
    }
}

/// Checks the three fairly-mixing conditions on ultimately periodic instances.
///
/// * (A) `x α ∉ W ∧ x β ∈ W  ⇒  α ∉ W ∧ β ∈ W` for random `x, α, β`.
/// * (B) for `S ∈ {W, complement}`: `x^ω ∈ S ∧ α ∈ S ⇒ x α ∈ S`.
/// * (C) for `S ∈ {W, complement}` and block sequences
///   `x1 … x2n` followed by the repeating pair `u v`: if every block and both
///   tail words are in `per(S)` and the odd and even interleavings are in `S`,
///   then the full concatenation is in `S`.
///
/// The sequences in (C) are restricted so that all three words are ultimately
/// periodic; this is a bounded search, not a decision procedure.
pub fn check_fairly_mixing(cond: &dyn PeriodicCondition, cfg: &MixingConfig) -> Result<Vec<CheckReport>, ConditionError> {
    let alphabet = cond.alphabet();
    let k = alphabet.len();
    let name = cond.describe();
    let show = |w: &UpWord| w.display(alphabet).to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let bound = format!("samples={},len<={},seed={}", cfg.samples, cfg.max_len, cfg.seed);

    // (A)
    let mut a_fail = None;
    for _ in 0..cfg.samples {
        let x = random_word(&mut rng, k, 0, cfg.max_len);
        let alpha = random_up(&mut rng, k, cfg.max_len);
        let beta = random_up(&mut rng, k, cfg.max_len);
        let xa = cond.contains(&alpha.prepend(&x))?;
        let xb = cond.contains(&beta.prepend(&x))?;
        if !xa && xb && !(!cond.contains(&alpha)? && cond.contains(&beta)?) {
            a_fail = Some(format!(
                "x=[{}] alpha={} beta={}",
                alphabet.format_word(&x),
                show(&alpha),
                show(&beta)
            ));
            break;
        }
    }

    // (B)
    let mut b_fail = None;
    for _ in 0..cfg.samples {
        let x = random_word(&mut rng, k, 1, cfg.max_len);
        let alpha = random_up(&mut rng, k, cfg.max_len);
        let in_x = cond.contains(&UpWord::periodic(x.clone())?)?;
        let in_alpha = cond.contains(&alpha)?;
        if in_x == in_alpha && cond.contains(&alpha.prepend(&x))? != in_x {
            let s = if in_x { "W" } else { "complement" };
            b_fail = Some(format!(
                "S={s} x=[{}] alpha={}",
                alphabet.format_word(&x),
                show(&alpha)
            ));
            break;
        }
    }

    // (C): exhaustive short tails, then random block sequences.
    let mut c_fail = None;
    let mut c_cases = 0u64;
    let tails = all_words(k, cfg.tail_len);
    'tails: for u in &tails {
        for v in &tails {
            c_cases += 1;
            if let Some(cx) = interleaving_violation(cond, &[], u, v)? {
                c_fail = Some(cx);
                break 'tails;
            }
        }
    }
    if c_fail.is_none() {
        for i in 0..cfg.samples {
            let want = i % 2 == 0;
            let pairs = rng.gen_range(0..=2);
            let mut blocks = Vec::with_capacity(2 * pairs);
            let mut tail = Vec::with_capacity(2);
            for slot in 0..2 * pairs + 2 {
                let w = sample_period_in(cond, &mut rng, k, cfg.max_len, want)?;
                if slot < 2 * pairs {
                    blocks.push(w);
                } else {
                    tail.push(w);
                }
            }
            c_cases += 1;
            if let Some(cx) = interleaving_violation(cond, &blocks, &tail[0], &tail[1])? {
                c_fail = Some(cx);
                break;
            }
        }
    }

    let report = |law: &str, fail: Option<String>, cases: u64| {
        let label = format!("fairly-mixing.{law}[{name}]");
        match fail {
            None => CheckReport::pass(label, bound.clone(), cases),
            Some(cx) => CheckReport::fail(label, bound.clone(), cases, cx),
        }
    };
    Ok(vec![
        report("A", a_fail, cfg.samples as u64),
        report("B", b_fail, cfg.samples as u64),
        report("C", c_fail, c_cases),
    ])
}

/// Draws a random non-empty word `w` with `w^ω ∈ W` iff `want`, falling back to
/// an unconstrained word after a bounded number of attempts (the instance is
/// then vacuous or still informative).
fn sample_period_in<R: Rng>(
    cond: &dyn PeriodicCondition,
    rng: &mut R,
    k: usize,
    max_len: usize,
    want: bool,
) -> Result<Word, ConditionError> {
    let mut w = random_word(rng, k, 1, max_len);
    for _ in 0..64 {
        if cond.contains(&UpWord::periodic(w.clone())?)? == want {
            break;
        }
        w = random_word(rng, k, 1, max_len);
    }
    Ok(w)
}

fn interleaving_violation(
    cond: &dyn PeriodicCondition,
    blocks: &[Word],
    u: &[ColorId],
    v: &[ColorId],
) -> Result<Option<String>, ConditionError> {
    let mut periods: Vec<bool> = Vec::with_capacity(blocks.len() + 2);
    for b in blocks.iter().map(Vec::as_slice).chain([u, v]) {
        periods.push(cond.contains(&UpWord::periodic(b.to_vec())?)?);
    }
    let target = periods[0];
    if periods.iter().any(|&p| p != target) {
        return Ok(None);
    }
    let odd: Word = blocks.iter().step_by(2).flatten().copied().collect();
    let even: Word = blocks.iter().skip(1).step_by(2).flatten().copied().collect();
    let all: Word = blocks.iter().flatten().copied().collect();
    let odd_w = UpWord::new(odd, u.to_vec())?;
    let even_w = UpWord::new(even, v.to_vec())?;
    let mut uv = u.to_vec();
    uv.extend_from_slice(v);
    let full = UpWord::new(all, uv)?;
    if cond.contains(&odd_w)? == target && cond.contains(&even_w)? == target && cond.contains(&full)? != target {
        let a = cond.alphabet();
        let s = if target { "W" } else { "complement" };
        let bs: Vec<String> = blocks.iter().map(|b| format!("[{}]", a.format_word(b))).collect();
        return Ok(Some(format!(
            "S={s} blocks={} tail u=[{}] v=[{}]: odd={} even={} but full={}",
            if bs.is_empty() { "-".to_string() } else { bs.join(",") },
            a.format_word(u),
            a.format_word(v),
            odd_w.display(a),
            even_w.display(a),
            full.display(a)
        )));
    }
    Ok(None)
}

/// All reduced words of length at most `max_len` over `generators` generators
/// and their inverses, the identity included.
pub fn reduced_words(generators: usize, max_len: usize) -> Vec<FreeWord> {
    let letters: Vec<Letter> = (0..generators as u16)
        .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
        .collect();
    let mut out = vec![FreeWord::identity()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last().is_none_or(|&last| last != l.inv()) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned().map(FreeWord::from_letters));
        layer = next;
    }
    out
}

fn color_word(alphabet: &Alphabet, w: &FreeWord) -> String {
    w.display(alphabet.names()).to_string()
}

/// Checks that `S = {g ∈ F_C : val(g) >= 0}` is an invariant sub-semigroup of
/// the free group on the colors that contains `g` or `g^-1` for every `g`,
/// for all reduced color words up to `max_len`. `val` extends to inverse colors
/// by `val(c^-1) = val(c)^-1`.
///
/// Membership in `S` depends only on `val(g)`, so the pairwise checks run over
/// the distinct values, each represented by its first word in enumeration
/// order.
pub fn check_invariant_subsemigroup(v: &Valuation, max_len: usize) -> Result<CheckReport, ConditionError> {
    let spec = v.spec();
    let alphabet = v.alphabet();
    let words = reduced_words(alphabet.len(), max_len);
    let inverses: Vec<Element> = (0..alphabet.len())
        .map(|c| spec.invert(v.image(c)))
        .collect::<Result<_, _>>()?;

    let mut classes: Vec<(Element, &FreeWord)> = Vec::new();
    let mut seen: HashMap<Element, usize> = HashMap::new();
    for w in &words {
        let mut acc = spec.identity();
        for l in w.letters() {
            let c = l.generator as usize;
            let img = if l.inverse { &inverses[c] } else { v.image(c) };
            acc = spec.compose(&acc, img)?;
        }
        if !seen.contains_key(&acc) {
            seen.insert(acc.clone(), classes.len());
            classes.push((acc, w));
        }
    }
    let bound = format!(
        "|g|<={max_len} over C and C^-1 ({} words, {} values)",
        words.len(),
        classes.len()
    );
    let name = format!("invariant-subsemigroup[{spec}]");
    let e = spec.identity();
    let nonneg: Vec<bool> = classes
        .iter()
        .map(|(x, _)| Ok(spec.compare(x, &e)? != std::cmp::Ordering::Less))
        .collect::<Result<_, ConditionError>>()?;
    let members: Vec<usize> = (0..classes.len()).filter(|&i| nonneg[i]).collect();
    let mut cases = 0u64;

    for (i, (x, w)) in classes.iter().enumerate() {
        cases += 1;
        if !nonneg[i] && spec.compare(&spec.invert(x)?, &e)? == std::cmp::Ordering::Less {
            return Ok(CheckReport::fail(
                name,
                bound,
                cases,
                format!("neither g nor g^-1 in S: g={}", color_word(alphabet, w)),
            ));
        }
    }
    for &i in &members {
        for &j in &members {
            cases += 1;
            let xy = spec.compose(&classes[i].0, &classes[j].0)?;
            if spec.compare(&xy, &e)? == std::cmp::Ordering::Less {
                return Ok(CheckReport::fail(
                    name,
                    bound,
                    cases,
                    format!(
                        "product leaves S: x={} y={}",
                        color_word(alphabet, classes[i].1),
                        color_word(alphabet, classes[j].1)
                    ),
                ));
            }
        }
    }
    for (g, gw) in &classes {
        let g_inv = spec.invert(g)?;
        for &i in &members {
            cases += 1;
            let conj = spec.compose(&spec.compose(g, &classes[i].0)?, &g_inv)?;
            if spec.compare(&conj, &e)? == std::cmp::Ordering::Less {
                return Ok(CheckReport::fail(
                    name,
                    bound,
                    cases,
                    format!(
                        "conjugate leaves S: g={} x={}",
                        color_word(alphabet, gw),
                        color_word(alphabet, classes[i].1)
                    ),
                ));
            }
        }
    }
    Ok(CheckReport::pass(name, bound, cases))
}

/// The same three checks for an arbitrary set of free-group words given by a
/// membership predicate, enumerating word triples directly. Quadratic in the
/// number of words; keep `max_len` small.
pub fn check_word_set<F>(name: &str, alphabet: &Alphabet, max_len: usize, member: F) -> CheckReport
where
    F: Fn(&FreeWord) -> bool,
{
    let words = reduced_words(alphabet.len(), max_len);
    let bound = format!("|g|<={max_len} ({} words)", words.len());
    let inside: Vec<bool> = words.iter().map(&member).collect();
    let show = |w: &FreeWord| color_word(alphabet, w);
    let mut cases = 0u64;
    for (w, &m) in words.iter().zip(&inside) {
        cases += 1;
        if !m && !member(&w.inverse()) {
            return CheckReport::fail(name, bound, cases, format!("neither g nor g^-1 in S: g={}", show(w)));
        }
    }
    let members: Vec<&FreeWord> = words.iter().zip(&inside).filter(|(_, &m)| m).map(|(w, _)| w).collect();
    for x in &members {
        for y in &members {
            cases += 1;
            if !member(&x.mul(y)) {
                return CheckReport::fail(name, bound, cases, format!("product leaves S: x={} y={}", show(x), show(y)));
            }
        }
    }
    for g in &words {
        for x in &members {
            cases += 1;
            if !member(&x.conjugate_by(g)) {
                return CheckReport::fail(name, bound, cases, format!("conjugate leaves S: g={} x={}", show(g), show(x)));
            }
        }
    }
    CheckReport::pass(name, bound, cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_equivalence_on_free_valuation() {
        let cond = EtogCondition::new(crate::condition::tests::free_ab());
        let r = check_oracle_equivalence(&cond, 3, 50).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.cases, 2 * (5 + 25 + 125));
    }
    use crate::condition::{EtogCondition, PredicateCondition, UnionCondition};
    use crate::group::GroupSpec;

    fn int_xy() -> Valuation {
        Valuation::from_literals(GroupSpec::Int, &[("x", "-1"), ("y", "1")]).unwrap()
    }

    fn free_ab() -> Valuation {
        crate::condition::tests::free_ab()
    }

    #[test]
    fn all_words_counts() {
        assert_eq!(all_words(2, 3).len(), 2 + 4 + 8);
        assert_eq!(all_words(3, 0).len(), 0);
        assert_eq!(reduced_words(2, 2).len(), 1 + 4 + 12);
    }

    #[test]
    fn closure_passes_for_negative_words_over_int() {
        let v = int_xy();
        let r = check_closure("closure", v.alphabet(), 6, |w| v.is_negative(w)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn closure_fails_for_first_letter_predicate() {
        let v = int_xy();
        let r = check_closure("closure", v.alphabet(), 3, |w| Ok(w[0] == 0)).unwrap();
        assert!(!r.passed());
        let cx = r.counterexample.unwrap();
        assert!(cx.contains("cyclic shift"), "{cx}");
        assert!(cx.contains("[x y] vs [y x]"), "{cx}");
    }

    #[test]
    fn closure_passes_over_free_group() {
        let v = free_ab();
        let r = check_closure("closure", v.alphabet(), 5, |w| v.is_negative(w)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn factorize_examples() {
        let v = int_xy();
        let p = |w: &[ColorId]| v.is_negative(w);
        assert_eq!(factorize_wp(p, &[0, 1, 0]).unwrap(), Some(vec![3]));
        assert_eq!(factorize_wp(p, &[1]).unwrap(), None);
        assert_eq!(factorize_wp(p, &[0, 0]).unwrap(), Some(vec![2]));
        assert_eq!(factorize_wp(p, &[0, 1, 1]).unwrap(), None);
        // Blocks of exactly two letters.
        let q = |w: &[ColorId]| Ok(w.len() == 2);
        assert_eq!(factorize_wp(q, &[1, 0, 0, 1]).unwrap(), Some(vec![2, 4]));
        assert_eq!(factorize_wp(p, &[]).unwrap(), None);
    }

    #[test]
    fn fairly_mixing_passes_for_etog() {
        let cfg = MixingConfig {
            samples: 200,
            ..MixingConfig::default()
        };
        for r in check_fairly_mixing(&EtogCondition::new(int_xy()), &cfg).unwrap() {
            assert!(r.passed(), "{r}");
        }
        for r in check_fairly_mixing(&EtogCondition::new(free_ab()), &cfg).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn union_fails_interleaving() {
        let w1 = EtogCondition::new(free_ab());
        let u = UnionCondition::new(vec![w1.clone(), w1.inverted()]).unwrap();
        let cfg = MixingConfig {
            samples: 100,
            ..MixingConfig::default()
        };
        let reports = check_fairly_mixing(&u, &cfg).unwrap();
        assert!(reports[0].passed());
        assert!(reports[1].passed());
        assert!(!reports[2].passed(), "{}", reports[2]);
    }

    #[test]
    fn second_letter_control_fails_a() {
        let alphabet = int_xy().alphabet().clone();
        let c = PredicateCondition::new(alphabet, "second letter is x", |w: &UpWord| w.letter(1) == 0);
        let reports = check_fairly_mixing(&c, &MixingConfig::default()).unwrap();
        assert!(!reports[0].passed());
    }

    #[test]
    fn invariant_subsemigroup_for_free_valuation() {
        let r = check_invariant_subsemigroup(&free_ab(), 3).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn trivial_valuation_gives_everything() {
        let v = Valuation::from_literals(GroupSpec::free(["a", "b"]), &[("c", "e"), ("d", "e")]).unwrap();
        let r = check_invariant_subsemigroup(&v, 3).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.bound.contains("1 values"), "{}", r.bound);
    }

    #[test]
    fn even_length_set_fails_totality() {
        let alphabet = Alphabet::new(["a", "b"]).unwrap();
        let r = check_word_set("even", &alphabet, 3, |w| w.len() % 2 == 0);
        let cx = r.counterexample.expect("must fail");
        assert!(cx.starts_with("neither g nor g^-1"), "{cx}");
    }

    #[test]
    fn whole_group_is_invariant() {
        let alphabet = Alphabet::new(["a", "b"]).unwrap();
        assert!(check_word_set("all", &alphabet, 2, |_| true).passed());
    }
}
