//! The order on the quasi-trees of a rooted map generated by single pivots
//! that increase the first-occurrence binary key.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::diagram::BicoloredDiagram;
use crate::error::{Error, Result};
use crate::map::RootedMap;
use crate::quasi_tree::EdgeSubset;
use crate::word::{OccurrenceWord, Symbol};

/// Bits compared lexicographically, `0 < 1`, leftmost first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryKey(pub Vec<bool>);

impl fmt::Display for BinaryKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryKey({self})")
    }
}

/// The first occurrences of `w`, with symbols of `i` written 1 and others 0.
pub fn binary_key(w: &OccurrenceWord, i: &BTreeSet<Symbol>) -> BinaryKey {
    BinaryKey(w.symbols().into_iter().map(|s| i.contains(&s)).collect())
}

/// The key of quasi-tree `s`, read on its tour word from the root.
pub fn quasi_tree_key(m: &RootedMap, s: &EdgeSubset) -> Result<BinaryKey> {
    let word = BicoloredDiagram::of(m, s)?.double_occurrence_word();
    Ok(binary_key(&word, &s.iter().collect()))
}

#[derive(Clone, Debug)]
pub struct QtPoset {
    /// All quasi-trees, sorted.
    pub elements: Vec<EdgeSubset>,
    pub keys: Vec<BinaryKey>,
    /// Index pairs `(i, j)` with `|S_i △ S_j| = 2` and `key(S_i) < key(S_j)`.
    pub covers: Vec<(usize, usize)>,
    /// Pivot pairs whose keys are equal; these give no relation.
    pub equal_key_pairs: Vec<(usize, usize)>,
    /// `leq[i][j]` iff `S_i ≤ S_j`.
    leq: Vec<Vec<bool>>,
    /// Distinct pairs related both ways.
    pub antisymmetry_violations: Vec<(usize, usize)>,
}

/// Builds the poset of all quasi-trees of `m`.
pub fn build_poset(m: &RootedMap) -> Result<QtPoset> {
    let elements = m.map().list_quasi_trees()?;
    let keys = elements
        .iter()
        .map(|s| quasi_tree_key(m, s))
        .collect::<Result<Vec<_>>>()?;
    let n = elements.len();
    let mut covers = Vec::new();
    let mut equal_key_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if elements[i].symmetric_difference(&elements[j]).len() != 2 {
                continue;
            }
            match keys[i].cmp(&keys[j]) {
                std::cmp::Ordering::Less => covers.push((i, j)),
                std::cmp::Ordering::Greater => covers.push((j, i)),
                std::cmp::Ordering::Equal => equal_key_pairs.push((i, j)),
            }
        }
    }
    covers.sort();
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(i, j) in &covers {
        leq[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if i != k && leq[i][k] {
                let (row_i, row_k) = if i < k {
                    let (lo, hi) = leq.split_at_mut(k);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = leq.split_at_mut(i);
                    (&mut hi[0], &lo[k])
                };
                for (x, &y) in row_i.iter_mut().zip(row_k.iter()) {
                    *x |= y;
                }
            }
        }
    }
    let antisymmetry_violations = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| leq[i][j] && leq[j][i])
        .collect();
    Ok(QtPoset {
        elements,
        keys,
        covers,
        equal_key_pairs,
        leq,
        antisymmetry_violations,
    })
}

impl QtPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, s: &EdgeSubset) -> Option<usize> {
        self.elements.binary_search(s).ok()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// The element below every other, if any.
    pub fn minimum(&self) -> Option<&EdgeSubset> {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
            .map(|i| &self.elements[i])
    }

    /// The element above every other, if any.
    pub fn maximum(&self) -> Option<&EdgeSubset> {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.leq[j][i]))
            .map(|i| &self.elements[i])
    }

    /// True iff the pivot graph, ignoring direction and key ties, is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut uf = crate::map::UnionFind::new(n);
        let mut parts = n;
        for &(i, j) in self.covers.iter().chain(&self.equal_key_pairs) {
            if uf.union(i, j) {
                parts -= 1;
            }
        }
        parts == 1
    }
}

impl Serialize for QtPoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let covers: Vec<(&EdgeSubset, &EdgeSubset)> = self
            .covers
            .iter()
            .map(|&(i, j)| (&self.elements[i], &self.elements[j]))
            .collect();
        let mut st = s.serialize_struct("QtPoset", 2)?;
        st.serialize_field("elements", &self.elements)?;
        st.serialize_field("covers", &covers)?;
        st.end()
    }
}

fn no_extreme(which: &str) -> Error {
    Error::Hypothesis(format!("the quasi-tree order has no {which}"))
}

pub fn poset_minimum(m: &RootedMap) -> Result<EdgeSubset> {
    build_poset(m)?
        .minimum()
        .cloned()
        .ok_or_else(|| no_extreme("minimum"))
}

pub fn poset_maximum(m: &RootedMap) -> Result<EdgeSubset> {
    build_poset(m)?
        .maximum()
        .cloned()
        .ok_or_else(|| no_extreme("maximum"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfs::{dfs, DfsPolicy};
    use crate::map::GeneralMap;

    fn rooted(n: usize, sigma: &[&[usize]], alpha: &[&[usize]]) -> RootedMap {
        RootedMap::new(GeneralMap::from_cycles(n, sigma, alpha).unwrap(), 0).unwrap()
    }

    fn w(text: &str) -> OccurrenceWord {
        OccurrenceWord::parse(text).unwrap().0
    }

    fn set(ids: &[usize]) -> EdgeSubset {
        ids.iter().copied().collect()
    }

    #[test]
    fn binary_keys() {
        assert_eq!(binary_key(&w("abab"), &[0, 1].into()).to_string(), "11");
        assert_eq!(binary_key(&w("abab"), &[0].into()).to_string(), "10");
        assert_eq!(binary_key(&w("aabb"), &BTreeSet::new()).to_string(), "00");
    }

    #[test]
    fn small_posets() {
        let loop_o = rooted(2, &[&[0, 1]], &[&[0, 1]]);
        let p = build_poset(&loop_o).unwrap();
        assert_eq!(p.elements, vec![set(&[])]);
        assert_eq!(p.minimum(), Some(&set(&[])));

        let torus = rooted(4, &[&[0, 1, 2, 3]], &[&[0, 2], &[1, 3]]);
        let p = build_poset(&torus).unwrap();
        assert_eq!(p.elements, vec![set(&[]), set(&[0, 1])]);
        assert_eq!(p.keys[0].to_string(), "00");
        assert_eq!(p.keys[1].to_string(), "11");
        assert_eq!(p.covers, vec![(0, 1)]);
        assert!(p.antisymmetry_violations.is_empty());

        let digon = rooted(4, &[&[0, 2], &[1, 3]], &[&[0, 1], &[2, 3]]);
        let p = build_poset(&digon).unwrap();
        assert_eq!(p.elements, vec![set(&[0]), set(&[2])]);
        assert_eq!(p.minimum(), Some(&dfs(&digon, DfsPolicy::Late).tree));
        let dual_late = dfs(&digon.dual(), DfsPolicy::Late).tree;
        assert_eq!(p.maximum(), Some(&dual_late.complement_in(digon.map())));
    }
}
