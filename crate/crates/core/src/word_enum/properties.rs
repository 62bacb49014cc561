use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interlace::DirectedInterlacement;
use crate::word::{Occurrence, OccurrenceWord, Symbol};

/// The four word properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    /// Double occurrence word whose sinks dominate its oriented interlacement.
    P,
    /// `w°` has P and no unmatched symbol is covered by a sink.
    Q,
    /// Double occurrence word where every symbol is a source or a sink.
    N,
    /// `w°` has N and every symbol covering an unmatched symbol is a sink.
    Nprime,
}

impl Property {
    pub fn holds(self, w: &OccurrenceWord) -> Result<bool> {
        match self {
            Property::P => has_p(w),
            Property::Q => Ok(has_q(w)),
            Property::N => has_n(w),
            Property::Nprime => Ok(has_nprime(w)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Property::P => "P",
            Property::Q => "Q",
            Property::N => "N",
            Property::Nprime => "Nprime",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(Property::P),
            "Q" => Ok(Property::Q),
            "N" => Ok(Property::N),
            "Nprime" | "N'" => Ok(Property::Nprime),
            _ => Err(Error::Parse(format!("unknown property {s:?}"))),
        }
    }
}

fn dominated_by_sinks(d: &DirectedInterlacement) -> bool {
    d.vertices()
        .iter()
        .all(|&v| d.is_sink(v) || d.out_neighbors(v).any(|t| d.is_sink(t)))
}

fn source_or_sink(d: &DirectedInterlacement) -> bool {
    d.vertices().iter().all(|&v| d.is_sink(v) || d.is_source(v))
}

/// Pairs `(b, a)` where the matched symbol `b` covers the unmatched `a`.
fn covering_pairs(w: &OccurrenceWord) -> Vec<(Symbol, Symbol)> {
    let occ = w.occurrences();
    let mut out = Vec::new();
    for (&a, oa) in &occ {
        if oa.second.is_some() {
            continue;
        }
        for (&b, ob) in &occ {
            if let Occurrence {
                first,
                second: Some(second),
            } = *ob
            {
                if first < oa.first && oa.first < second {
                    out.push((b, a));
                }
            }
        }
    }
    out
}

/// Property P. Errors on words with unmatched symbols.
pub fn has_p(w: &OccurrenceWord) -> Result<bool> {
    w.require_double()?;
    Ok(dominated_by_sinks(&w.directed_interlacement()))
}

/// Property N. Errors on words with unmatched symbols.
pub fn has_n(w: &OccurrenceWord) -> Result<bool> {
    w.require_double()?;
    Ok(source_or_sink(&w.directed_interlacement()))
}

/// Property Q. On double occurrence words it coincides with P.
pub fn has_q(w: &OccurrenceWord) -> bool {
    let d = w.directed_interlacement();
    dominated_by_sinks(&d) && covering_pairs(w).iter().all(|&(b, _)| !d.is_sink(b))
}

/// Property N′. On double occurrence words it coincides with N.
pub fn has_nprime(w: &OccurrenceWord) -> bool {
    let d = w.directed_interlacement();
    source_or_sink(&d) && covering_pairs(w).iter().all(|&(b, _)| d.is_sink(b))
}
