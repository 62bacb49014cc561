use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::word::OccurrenceWord;

/// Largest word length `2n + m` accepted by the generators.
pub const WORD_GUARD: usize = 16;

/// `(2n + m)! / (2^n n! m!)`: words with `n` matched and `m` unmatched
/// symbols, up to renaming.
pub fn word_count(n: usize, m: usize) -> BigUint {
    let fact = |k: usize| (1..=k).fold(BigUint::one(), |acc, i| acc * i);
    fact(2 * n + m) / (fact(n) * fact(m) * (BigUint::one() << n))
}

/// Calls `f` on every word with `n` matched and `m` unmatched symbols, with
/// symbols numbered in order of first occurrence.
pub fn for_each_word(n: usize, m: usize, mut f: impl FnMut(&OccurrenceWord)) -> Result<()> {
    let len = 2 * n + m;
    if len > WORD_GUARD {
        return Err(Error::Guard(format!(
            "word length {len} exceeds the enumeration limit of {WORD_GUARD}"
        )));
    }
    struct State {
        letters: Vec<usize>,
        open: Vec<usize>,
        matched_left: usize,
        unmatched_left: usize,
        next: usize,
    }
    fn rec(s: &mut State, f: &mut dyn FnMut(&OccurrenceWord)) {
        if s.matched_left == 0 && s.unmatched_left == 0 && s.open.is_empty() {
            f(&OccurrenceWord::new(s.letters.clone()).expect("valid by construction"));
            return;
        }
        for k in 0..s.open.len() {
            let sym = s.open.remove(k);
            s.letters.push(sym);
            rec(s, f);
            s.letters.pop();
            s.open.insert(k, sym);
        }
        if s.matched_left > 0 {
            let sym = s.next;
            s.next += 1;
            s.matched_left -= 1;
            s.open.push(sym);
            s.letters.push(sym);
            rec(s, f);
            s.letters.pop();
            s.open.pop();
            s.matched_left += 1;
            s.next -= 1;
        }
        if s.unmatched_left > 0 {
            let sym = s.next;
            s.next += 1;
            s.unmatched_left -= 1;
            s.letters.push(sym);
            rec(s, f);
            s.letters.pop();
            s.unmatched_left += 1;
            s.next -= 1;
        }
    }
    let mut state = State {
        letters: Vec::with_capacity(len),
        open: Vec::new(),
        matched_left: n,
        unmatched_left: m,
        next: 0,
    };
    rec(&mut state, &mut f);
    Ok(())
}

/// All words of [`for_each_word`], in generation order.
pub fn gen_words(n: usize, m: usize) -> Result<Vec<OccurrenceWord>> {
    let mut out = Vec::new();
    for_each_word(n, m, |w| out.push(w.clone()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(n: usize, m: usize) -> Vec<String> {
        let mut v: Vec<String> = gen_words(n, m)
            .unwrap()
            .iter()
            .map(|w| w.to_letters())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn small_lists() {
        assert_eq!(letters(1, 0), vec!["aa"]);
        assert_eq!(letters(2, 0), vec!["aabb", "abab", "abba"]);
        assert_eq!(letters(0, 2), vec!["ab"]);
        assert_eq!(letters(1, 1), vec!["aab", "aba", "abb"]);
        assert_eq!(letters(0, 0), vec![""]);
    }

    #[test]
    fn counts_match_closed_formula() {
        for n in 0..=5 {
            for m in 0..=(10 - 2 * n) {
                let mut count = 0u64;
                for_each_word(n, m, |w| {
                    assert_eq!(w.canonical(), *w);
                    count += 1;
                })
                .unwrap();
                assert_eq!(BigUint::from(count), word_count(n, m), "n={n} m={m}");
            }
        }
        assert_eq!(word_count(7, 0), BigUint::from(135135u32));
    }

    #[test]
    fn guard() {
        assert!(matches!(gen_words(9, 0), Err(Error::Guard(_))));
    }
}
