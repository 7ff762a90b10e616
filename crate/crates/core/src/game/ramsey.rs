use std::collections::HashSet;

use crate::group::free::{FreeWord, Letter};
use crate::report::CheckReport;

/// For every sign choice `(e1, d1, ..., en, dn)` with `n = depth`, builds the
/// word `a^e1 b^d1 ... a^en b^dn` letter by letter and checks that its `2n`
/// prefix products are pairwise distinct and never the identity.
///
/// Against alternating Alice on the two-circle arena every Bob behavior
/// produces such a word, so distinct prefixes mean no segment of the play
/// has identity value.
pub fn ramsey_distinct_check(depth: usize) -> CheckReport {
    let name = "ramsey.distinct-prefixes";
    let paths = 1u64 << (2 * depth.min(31));
    let bound = format!("depth={depth},paths={paths}");
    if depth == 0 {
        return CheckReport::fail(name, bound, 0, "depth must be at least 1");
    }
    for code in 0..paths {
        let mut w = FreeWord::identity();
        let mut seen = HashSet::new();
        for i in 0..2 * depth {
            let inverse = code >> i & 1 == 1;
            let letter = Letter::new((i % 2) as u16, inverse);
            w = w.mul(&FreeWord::from_letters([letter]));
            if w.is_identity() || !seen.insert(w.clone()) {
                let names = ["a".to_string(), "b".to_string()];
                return CheckReport::fail(
                    name,
                    bound,
                    code + 1,
                    format!("prefix {} repeats or is trivial", w.display(&names)),
                );
            }
        }
    }
    CheckReport::pass(name, bound, paths)
}
