use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{OccurrenceWord, Symbol};
use crate::word_enum::properties::{has_n, has_nprime, has_p, has_q};

/// Decomposition of a word with property Q by its last symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QDecomposition {
    Empty,
    /// `w = rest · symbol` with `symbol` unmatched.
    Unmatched {
        rest: OccurrenceWord,
        symbol: Symbol,
    },
    /// `w = w1 · a · w2 · a`.
    Split {
        w1: OccurrenceWord,
        a: Symbol,
        w2: OccurrenceWord,
    },
}

impl QDecomposition {
    pub fn reassemble(&self) -> OccurrenceWord {
        match self {
            QDecomposition::Empty => OccurrenceWord::empty(),
            QDecomposition::Unmatched { rest, symbol } => {
                OccurrenceWord::concat(&[rest, &single(*symbol)])
            }
            QDecomposition::Split { w1, a, w2 } => {
                OccurrenceWord::concat(&[w1, &single(*a), w2, &single(*a)])
            }
        }
    }
}

/// Decomposition of a word with property N′ by its last symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NprimeDecomposition {
    Empty,
    Unmatched {
        rest: OccurrenceWord,
        symbol: Symbol,
    },
    /// `w = w_k u_k … w_1 u_1 · a · w0 · a`; `blocks[i − 1] = (w_i, u_i)`.
    Split {
        blocks: Vec<(OccurrenceWord, OccurrenceWord)>,
        a: Symbol,
        w0: OccurrenceWord,
    },
}

impl NprimeDecomposition {
    pub fn reassemble(&self) -> OccurrenceWord {
        match self {
            NprimeDecomposition::Empty => OccurrenceWord::empty(),
            NprimeDecomposition::Unmatched { rest, symbol } => {
                OccurrenceWord::concat(&[rest, &single(*symbol)])
            }
            NprimeDecomposition::Split { blocks, a, w0 } => {
                let mut parts: Vec<&OccurrenceWord> = Vec::new();
                for (w, u) in blocks.iter().rev() {
                    parts.push(w);
                    parts.push(u);
                }
                let a = single(*a);
                parts.extend([&a, w0, &a]);
                OccurrenceWord::concat(&parts)
            }
        }
    }
}

fn single(s: Symbol) -> OccurrenceWord {
    OccurrenceWord::new(vec![s]).expect("one letter")
}

/// `(prefix, a, middle)` with `w = prefix a middle a`, or `None` when the
/// last symbol is unmatched.
fn split_last(w: &OccurrenceWord) -> Option<(OccurrenceWord, Symbol, OccurrenceWord)> {
    let letters = w.letters();
    let &a = letters.last()?;
    let first = letters.iter().position(|&s| s == a).expect("present");
    if first == letters.len() - 1 {
        return None;
    }
    Some((w.slice(0, first), a, w.slice(first + 1, letters.len() - 1)))
}

fn broken(what: &str) -> Error {
    Error::Hypothesis(format!("decomposition part violates its property: {what}"))
}

/// Splits a word with property Q. The parts are checked: `w2` holds no
/// unmatched symbol of `w`, `w2°` has P and `w1` has Q.
pub fn decompose_q(w: &OccurrenceWord) -> Result<QDecomposition> {
    if !has_q(w) {
        return Err(Error::MissingProperty("Q"));
    }
    if w.is_empty() {
        return Ok(QDecomposition::Empty);
    }
    let Some((w1, a, w2)) = split_last(w) else {
        let n = w.len();
        return Ok(QDecomposition::Unmatched {
            rest: w.slice(0, n - 1),
            symbol: w.letters()[n - 1],
        });
    };
    let unmatched: BTreeSet<Symbol> = w.unmatched().into_iter().collect();
    if w2.letters().iter().any(|s| unmatched.contains(s)) {
        return Err(broken("w2 contains an unmatched symbol"));
    }
    if !has_p(&w2.matched_part())? {
        return Err(broken("w2° lacks P"));
    }
    if !has_q(&w1) {
        return Err(broken("w1 lacks Q"));
    }
    Ok(QDecomposition::Split { w1, a, w2 })
}

/// Splits a word with property N′. The u-blocks are the maximal runs, read
/// from the right of the prefix, of first occurrences of symbols whose second
/// occurrence lies in `w0`; `u_1` and `w_k` may be empty and `k = 0` iff the
/// prefix is empty. The conditions of the decomposition are checked.
pub fn decompose_nprime(w: &OccurrenceWord) -> Result<NprimeDecomposition> {
    if !has_nprime(w) {
        return Err(Error::MissingProperty("N'"));
    }
    if w.is_empty() {
        return Ok(NprimeDecomposition::Empty);
    }
    let Some((prefix, a, w0)) = split_last(w) else {
        let n = w.len();
        return Ok(NprimeDecomposition::Unmatched {
            rest: w.slice(0, n - 1),
            symbol: w.letters()[n - 1],
        });
    };
    let unmatched_w: BTreeSet<Symbol> = w.unmatched().into_iter().collect();
    let unmatched_w0: Vec<Symbol> = w0.unmatched();
    let z_set: BTreeSet<Symbol> = unmatched_w0
        .iter()
        .copied()
        .filter(|s| !unmatched_w.contains(s))
        .collect();

    let letters = prefix.letters();
    let in_z = |i: usize| z_set.contains(&letters[i]);
    let mut blocks = Vec::new();
    let mut end = letters.len();
    while end > 0 {
        let mut mid = end;
        while mid > 0 && in_z(mid - 1) {
            mid -= 1;
        }
        let mut start = mid;
        while start > 0 && !in_z(start - 1) {
            start -= 1;
        }
        blocks.push((prefix.slice(start, mid), prefix.slice(mid, end)));
        end = start;
    }

    let z = w0.pattern(&z_set);
    let u_concat: Vec<Symbol> = blocks
        .iter()
        .rev()
        .flat_map(|(_, u)| u.letters().iter().copied())
        .collect();
    if u_concat != z.reversal().letters() {
        return Err(broken("u_k … u_1 is not the reversal of z"));
    }
    let w0_letters = w0.letters();
    let last_z = w0_letters.iter().rposition(|s| z_set.contains(s));
    let first_free = w0_letters.iter().position(|s| unmatched_w.contains(s));
    if let (Some(lz), Some(ff)) = (last_z, first_free) {
        if lz > ff {
            return Err(broken("a symbol of z follows an unmatched symbol of w"));
        }
    }
    if !has_nprime(&w0) {
        return Err(broken("w0 lacks N'"));
    }
    let k = blocks.len();
    for (i, (wi, _)) in blocks.iter().enumerate() {
        let ok = if i + 1 == k {
            has_nprime(wi)
        } else {
            wi.is_double_occurrence() && has_n(wi)?
        };
        if !ok {
            return Err(broken("an inner block lacks N"));
        }
    }
    Ok(NprimeDecomposition::Split { blocks, a, w0 })
}
