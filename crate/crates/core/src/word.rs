//! Words in which every symbol occurs once or twice.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::interlace::{DirectedInterlacement, InterlacementGraph};

pub type Symbol = usize;

/// First and (for matched symbols) second position of a symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub first: usize,
    pub second: Option<usize>,
}

/// A 1-2 occurrence word. Double occurrence words are the special case
/// without unmatched symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccurrenceWord {
    letters: Vec<Symbol>,
}

impl OccurrenceWord {
    pub fn new(letters: Vec<Symbol>) -> Result<Self> {
        let mut count: HashMap<Symbol, usize> = HashMap::new();
        for &s in &letters {
            let c = count.entry(s).or_default();
            *c += 1;
            if *c > 2 {
                return Err(Error::InvalidWord(format!(
                    "symbol {s} occurs more than twice"
                )));
            }
        }
        Ok(OccurrenceWord { letters })
    }

    pub fn empty() -> Self {
        OccurrenceWord {
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated symbols (`a b a b`), or a single token read
    /// character by character (`abab`). Symbols are numbered in order of first
    /// occurrence; the returned names map numbers back to the input tokens.
    pub fn parse(text: &str) -> Result<(Self, Vec<String>)> {
        let tokens: Vec<String> = {
            let parts: Vec<&str> = text.split_whitespace().collect();
            if parts.len() == 1 {
                parts[0].chars().map(String::from).collect()
            } else {
                parts.into_iter().map(String::from).collect()
            }
        };
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, Symbol> = HashMap::new();
        let letters = tokens
            .into_iter()
            .map(|t| {
                *index.entry(t.clone()).or_insert_with(|| {
                    names.push(t);
                    names.len() - 1
                })
            })
            .collect();
        Ok((OccurrenceWord::new(letters)?, names))
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Occurrence positions of every symbol, keyed by symbol.
    pub fn occurrences(&self) -> HashMap<Symbol, Occurrence> {
        let mut occ: HashMap<Symbol, Occurrence> = HashMap::new();
        for (i, &s) in self.letters.iter().enumerate() {
            occ.entry(s)
                .and_modify(|o| o.second = Some(i))
                .or_insert(Occurrence {
                    first: i,
                    second: None,
                });
        }
        occ
    }

    /// Distinct symbols in order of first occurrence.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut seen = BTreeSet::new();
        self.letters
            .iter()
            .copied()
            .filter(|&s| seen.insert(s))
            .collect()
    }

    /// Matched symbols in order of first occurrence.
    pub fn matched(&self) -> Vec<Symbol> {
        let occ = self.occurrences();
        self.symbols()
            .into_iter()
            .filter(|s| occ[s].second.is_some())
            .collect()
    }

    /// `U(w)`: unmatched symbols in order of occurrence.
    pub fn unmatched(&self) -> Vec<Symbol> {
        let occ = self.occurrences();
        self.symbols()
            .into_iter()
            .filter(|s| occ[s].second.is_none())
            .collect()
    }

    pub fn is_double_occurrence(&self) -> bool {
        self.occurrences().values().all(|o| o.second.is_some())
    }

    pub(crate) fn require_double(&self) -> Result<()> {
        if self.is_double_occurrence() {
            Ok(())
        } else {
            Err(Error::InvalidWord(
                "expected a double occurrence word".into(),
            ))
        }
    }

    /// `w°`: the subword of matched symbols.
    pub fn matched_part(&self) -> OccurrenceWord {
        let occ = self.occurrences();
        OccurrenceWord {
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|s| occ[s].second.is_some())
                .collect(),
        }
    }

    /// The word read backwards.
    pub fn reversal(&self) -> OccurrenceWord {
        OccurrenceWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// The pattern (subword) formed by the given symbols.
    pub fn pattern(&self, keep: &BTreeSet<Symbol>) -> OccurrenceWord {
        OccurrenceWord {
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|s| keep.contains(s))
                .collect(),
        }
    }

    /// Symbols renamed `0, 1, 2, …` in order of first occurrence.
    pub fn canonical(&self) -> OccurrenceWord {
        let mut rename: HashMap<Symbol, Symbol> = HashMap::new();
        let letters = self
            .letters
            .iter()
            .map(|s| {
                let next = rename.len();
                *rename.entry(*s).or_insert(next)
            })
            .collect();
        OccurrenceWord { letters }
    }

    pub fn concat(parts: &[&OccurrenceWord]) -> OccurrenceWord {
        OccurrenceWord {
            letters: parts
                .iter()
                .flat_map(|w| w.letters.iter().copied())
                .collect(),
        }
    }

    pub fn slice(&self, start: usize, end: usize) -> OccurrenceWord {
        OccurrenceWord {
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// True iff `b` is matched, `a` unmatched and `b a b` is a pattern.
    pub fn covers(&self, b: Symbol, a: Symbol) -> bool {
        let occ = self.occurrences();
        match (occ.get(&b), occ.get(&a)) {
            (
                Some(Occurrence {
                    first: b1,
                    second: Some(b2),
                }),
                Some(Occurrence {
                    first: a1,
                    second: None,
                }),
            ) => b1 < a1 && a1 < b2,
            _ => false,
        }
    }

    /// Orientation of the circle graph of the matched symbols: `e → f` iff
    /// `e f e f` is a pattern (`e` is interlaced on the right by `f`).
    pub fn directed_interlacement(&self) -> DirectedInterlacement {
        let occ = self.occurrences();
        let matched: Vec<(Symbol, usize, usize)> = self
            .matched()
            .into_iter()
            .map(|s| (s, occ[&s].first, occ[&s].second.expect("matched")))
            .collect();
        let mut arcs = BTreeSet::new();
        for &(e, e1, e2) in &matched {
            for &(f, f1, f2) in &matched {
                if e1 < f1 && f1 < e2 && e2 < f2 {
                    arcs.insert((e, f));
                }
            }
        }
        DirectedInterlacement::new(matched.iter().map(|m| m.0).collect(), arcs)
    }

    /// Undirected circle graph of the matched symbols.
    pub fn interlacement_graph(&self) -> InterlacementGraph {
        self.directed_interlacement().shadow()
    }

    /// Letters `a`, `b`, … by symbol number; falls back to numbers when a
    /// symbol is 26 or more.
    pub fn to_letters(&self) -> String {
        if self.letters.iter().all(|&s| s < 26) {
            self.letters
                .iter()
                .map(|&s| char::from(b'a' + s as u8))
                .collect()
        } else {
            self.to_numbers()
        }
    }

    /// Space-separated symbol numbers.
    pub fn to_numbers(&self) -> String {
        self.letters
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Space-separated names taken from `names[symbol]`.
    pub fn render(&self, names: &[String]) -> String {
        self.letters
            .iter()
            .map(|&s| names[s].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for OccurrenceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_letters())
    }
}

impl fmt::Debug for OccurrenceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OccurrenceWord({})", self.to_letters())
    }
}
