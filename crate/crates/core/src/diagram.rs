//! Rooted bicolored chord diagrams and their correspondence with pairs
//! (rooted map, quasi-tree).
//!
//! A diagram is stored linearly: the flags in circle order starting at the
//! root, a matching of positions (the chords) and a colour per position.
//! Colour 1 (`true`) marks chords in the quasi-tree.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interlace::InterlacementGraph;
use crate::map::{GeneralMap, RootedMap};
use crate::perm::{Flag, Permutation};
use crate::quasi_tree::{EdgeId, EdgeSubset, LIST_GUARD};
use crate::word::OccurrenceWord;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BicoloredDiagram {
    word: Vec<Flag>,
    mate: Vec<usize>,
    in_tree: Vec<bool>,
}

/// Serialized form: the flags, the edge id at each position, the tree edges.
#[derive(Serialize)]
struct DiagramRecord<'a> {
    word: &'a [Flag],
    symbols: Vec<EdgeId>,
    tree: EdgeSubset,
}

impl Serialize for BicoloredDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRecord {
            word: &self.word,
            symbols: (0..self.word.len()).map(|p| self.edge_at(p)).collect(),
            tree: self.tree(),
        }
        .serialize(s)
    }
}

impl BicoloredDiagram {
    /// The diagram of quasi-tree `s`: flags read along its tour from the root.
    pub fn of(rooted: &RootedMap, s: &EdgeSubset) -> Result<Self> {
        let map = rooted.map();
        let tour = map.tour(s)?;
        let cycles = tour.cycle_count();
        if cycles > 1 {
            return Err(Error::NotQuasiTree { cycles });
        }
        let mut word = Vec::with_capacity(map.flag_count());
        let mut b = rooted.root();
        loop {
            word.push(b);
            b = tour.apply(b);
            if b == rooted.root() {
                break;
            }
        }
        let mut pos = vec![usize::MAX; map.capacity()];
        for (i, &b) in word.iter().enumerate() {
            pos[b] = i;
        }
        let mate = word.iter().map(|&b| pos[map.alpha().apply(b)]).collect();
        let in_tree = word.iter().map(|&b| s.contains(map.edge_of(b))).collect();
        Ok(BicoloredDiagram {
            word,
            mate,
            in_tree,
        })
    }

    /// A bicolored ordered matching on positions `0..2m`; flags are positions.
    pub fn from_matching(mate: Vec<usize>, in_tree: Vec<bool>) -> Result<Self> {
        let n = mate.len();
        if in_tree.len() != n {
            return Err(Error::InvalidWord(
                "colour count differs from point count".into(),
            ));
        }
        for (p, &q) in mate.iter().enumerate() {
            if q >= n || q == p || mate[q] != p {
                return Err(Error::InvalidWord(format!("position {p} is not matched")));
            }
            if in_tree[p] != in_tree[q] {
                return Err(Error::InvalidWord(format!("chord {p}-{q} has two colours")));
            }
        }
        Ok(BicoloredDiagram {
            word: (0..n).collect(),
            mate,
            in_tree,
        })
    }

    /// The diagram of a double occurrence word with the given symbols in colour 1.
    pub fn from_word(word: &OccurrenceWord, tree: &BTreeSet<usize>) -> Result<Self> {
        word.require_double()?;
        let occ = word.occurrences();
        let letters = word.letters();
        let mate = letters
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let o = occ[s];
                if o.first == i {
                    o.second.expect("double occurrence")
                } else {
                    o.first
                }
            })
            .collect();
        let in_tree = letters.iter().map(|s| tree.contains(s)).collect();
        BicoloredDiagram::from_matching(mate, in_tree)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn chord_count(&self) -> usize {
        self.word.len() / 2
    }

    /// Flags in circle order from the root.
    pub fn word(&self) -> &[Flag] {
        &self.word
    }

    pub fn mate(&self, p: usize) -> usize {
        self.mate[p]
    }

    pub fn in_tree_at(&self, p: usize) -> bool {
        self.in_tree[p]
    }

    /// Edge id (smaller flag) of the chord at position `p`.
    pub fn edge_at(&self, p: usize) -> EdgeId {
        self.word[p].min(self.word[self.mate[p]])
    }

    /// Chords as `(edge, first position, second position)`, by first position.
    pub fn chords(&self) -> Vec<(EdgeId, usize, usize)> {
        (0..self.len())
            .filter(|&p| p < self.mate[p])
            .map(|p| (self.edge_at(p), p, self.mate[p]))
            .collect()
    }

    fn chord_positions(&self, e: EdgeId) -> Result<(usize, usize)> {
        self.chords()
            .into_iter()
            .find(|c| c.0 == e)
            .map(|c| (c.1, c.2))
            .ok_or(Error::UnknownEdge(e))
    }

    /// Colour-1 chords.
    pub fn tree(&self) -> EdgeSubset {
        self.chords()
            .into_iter()
            .filter(|c| self.in_tree[c.1])
            .map(|c| c.0)
            .collect()
    }

    /// The rooted map and quasi-tree encoded by the diagram: `α` from the
    /// chords, the tour from the circle order, and `σ(b) = τ(α(b))` on tree
    /// flags, `σ(b) = τ(b)` elsewhere.
    pub fn reconstruct(&self) -> Result<(RootedMap, EdgeSubset)> {
        if self.is_empty() {
            return Err(Error::InvalidMap("the empty diagram has no root".into()));
        }
        let n = self.len();
        let capacity = self.word.iter().max().map_or(0, |&m| m + 1);
        let alpha_cycles: Vec<[Flag; 2]> = self
            .chords()
            .into_iter()
            .map(|(_, p, q)| [self.word[p], self.word[q]])
            .collect();
        let alpha = Permutation::on_cycles(capacity, &alpha_cycles)?;
        let mut tour = vec![0; capacity];
        for p in 0..n {
            tour[self.word[p]] = self.word[(p + 1) % n];
        }
        let sigma_cycles = {
            let mut images = vec![usize::MAX; capacity];
            for p in 0..n {
                let b = self.word[p];
                images[b] = if self.in_tree[p] {
                    tour[alpha.apply(b)]
                } else {
                    tour[b]
                };
            }
            let mut seen = vec![false; capacity];
            let mut cycles = Vec::new();
            for &b in &self.word {
                if seen[b] {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut x = b;
                while !seen[x] {
                    seen[x] = true;
                    cycle.push(x);
                    x = images[x];
                }
                cycles.push(cycle);
            }
            cycles
        };
        let sigma = Permutation::on_cycles(capacity, &sigma_cycles)?;
        let map = GeneralMap::new(sigma, alpha)?;
        let rooted = RootedMap::new(map, self.word[0])?;
        Ok((rooted, self.tree()))
    }

    /// The double occurrence word of edge ids.
    pub fn double_occurrence_word(&self) -> OccurrenceWord {
        OccurrenceWord::new((0..self.len()).map(|p| self.edge_at(p)).collect())
            .expect("every edge occurs twice")
    }

    pub fn interlaced(&self, e: EdgeId, f: EdgeId) -> Result<bool> {
        let (a1, a2) = self.chord_positions(e)?;
        let (b1, b2) = self.chord_positions(f)?;
        Ok((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2))
    }

    /// Circle graph on edge ids.
    pub fn interlacement_graph(&self) -> InterlacementGraph {
        self.double_occurrence_word().interlacement_graph()
    }

    /// Pivots the interlaced chords `e` and `f`: the diagram of `S △ {e, f}`
    /// with the same root. The new circle order follows `τ' = τ ∘ α` on the
    /// four endpoints and `τ` elsewhere.
    pub fn pivot(&self, e: EdgeId, f: EdgeId) -> Result<Self> {
        if e == f || !self.interlaced(e, f)? {
            return Err(Error::NotInterlaced(e, f));
        }
        let n = self.len();
        let (e1, e2) = self.chord_positions(e)?;
        let (f1, f2) = self.chord_positions(f)?;
        let flip = [e1, e2, f1, f2];
        let next = |p: usize| {
            let q = if flip.contains(&p) { self.mate[p] } else { p };
            (q + 1) % n
        };
        let mut order = Vec::with_capacity(n);
        let mut p = 0;
        loop {
            order.push(p);
            p = next(p);
            if p == 0 {
                break;
            }
        }
        debug_assert_eq!(order.len(), n, "pivoting interlaced chords keeps one cycle");
        let mut new_pos = vec![0; n];
        for (i, &p) in order.iter().enumerate() {
            new_pos[p] = i;
        }
        Ok(BicoloredDiagram {
            word: order.iter().map(|&p| self.word[p]).collect(),
            mate: order.iter().map(|&p| new_pos[self.mate[p]]).collect(),
            in_tree: order
                .iter()
                .map(|&p| self.in_tree[p] != flip.contains(&p))
                .collect(),
        })
    }

    /// All diagrams reachable by pivots, sorted.
    pub fn pivot_class(&self) -> Result<Vec<Self>> {
        if self.chord_count() > LIST_GUARD {
            return Err(Error::Guard(format!(
                "{} chords exceeds the enumeration limit of {LIST_GUARD}",
                self.chord_count()
            )));
        }
        let mut seen = BTreeSet::from([self.clone()]);
        let mut queue = VecDeque::from([self.clone()]);
        while let Some(d) = queue.pop_front() {
            let pairs = d.interlacement_graph().edges();
            for (e, f) in pairs {
                let next = d.pivot(e, f)?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Removes chord `e`. If the root is removed the next point becomes the root.
    pub fn minor(&self, e: EdgeId) -> Result<Self> {
        let (p, q) = self.chord_positions(e)?;
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != p && i != q).collect();
        let mut new_pos = vec![usize::MAX; self.len()];
        for (i, &k) in keep.iter().enumerate() {
            new_pos[k] = i;
        }
        Ok(BicoloredDiagram {
            word: keep.iter().map(|&k| self.word[k]).collect(),
            mate: keep.iter().map(|&k| new_pos[self.mate[k]]).collect(),
            in_tree: keep.iter().map(|&k| self.in_tree[k]).collect(),
        })
    }
}

/// Calls `f` on every perfect matching of `0..2m` (as a mate table).
pub fn for_each_matching(m: usize, mut f: impl FnMut(&[usize])) {
    fn rec(mate: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        let Some(p) = mate.iter().position(|&q| q == usize::MAX) else {
            f(mate);
            return;
        };
        for q in p + 1..mate.len() {
            if mate[q] == usize::MAX {
                mate[p] = q;
                mate[q] = p;
                rec(mate, f);
                mate[p] = usize::MAX;
                mate[q] = usize::MAX;
            }
        }
    }
    let mut mate = vec![usize::MAX; 2 * m];
    rec(&mut mate, &mut f);
}

/// Calls `f` on each of the `2^m (2m−1)!!` bicolored ordered matchings.
pub fn for_each_bicolored_matching(m: usize, mut f: impl FnMut(BicoloredDiagram)) {
    for_each_matching(m, |mate| {
        let chords: Vec<usize> = (0..mate.len()).filter(|&p| p < mate[p]).collect();
        for mask in 0u32..(1u32 << m) {
            let mut in_tree = vec![false; mate.len()];
            for (i, &p) in chords.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    in_tree[p] = true;
                    in_tree[mate[p]] = true;
                }
            }
            f(BicoloredDiagram {
                word: (0..mate.len()).collect(),
                mate: mate.to_vec(),
                in_tree,
            });
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rooted(n: usize, sigma: &[&[usize]], alpha: &[&[usize]]) -> RootedMap {
        RootedMap::new(GeneralMap::from_cycles(n, sigma, alpha).unwrap(), 0).unwrap()
    }

    fn loop_o() -> RootedMap {
        rooted(2, &[&[0, 1]], &[&[0, 1]])
    }

    fn link_l() -> RootedMap {
        rooted(2, &[], &[&[0, 1]])
    }

    fn torus() -> RootedMap {
        rooted(4, &[&[0, 1, 2, 3]], &[&[0, 2], &[1, 3]])
    }

    fn digon() -> RootedMap {
        rooted(4, &[&[0, 2], &[1, 3]], &[&[0, 1], &[2, 3]])
    }

    fn set(ids: &[EdgeId]) -> EdgeSubset {
        ids.iter().copied().collect()
    }

    #[test]
    fn diagram_of_examples() {
        let d = BicoloredDiagram::of(&loop_o(), &set(&[])).unwrap();
        assert_eq!((d.word(), d.tree()), (&[0, 1][..], set(&[])));
        let d = BicoloredDiagram::of(&link_l(), &set(&[0])).unwrap();
        assert_eq!((d.word(), d.tree()), (&[0, 1][..], set(&[0])));
        let d = BicoloredDiagram::of(&torus(), &set(&[0, 1])).unwrap();
        assert_eq!(d.word(), &[0, 3, 2, 1]);
        assert_eq!(d.chords(), vec![(0, 0, 2), (1, 1, 3)]);
        assert!(d.interlaced(0, 1).unwrap());
        assert_eq!(
            BicoloredDiagram::of(&torus(), &set(&[0])),
            Err(Error::NotQuasiTree { cycles: 2 })
        );
    }

    #[test]
    fn reconstruct_examples() {
        let one = |c| BicoloredDiagram::from_matching(vec![1, 0], vec![c, c]).unwrap();
        let (m, s) = one(false).reconstruct().unwrap();
        assert_eq!((m.map(), s), (loop_o().map(), set(&[])));
        let (m, s) = one(true).reconstruct().unwrap();
        assert_eq!((m.map(), s), (link_l().map(), set(&[0])));
        for (r, s) in [(torus(), set(&[0, 1])), (digon(), set(&[2]))] {
            let d = BicoloredDiagram::of(&r, &s).unwrap();
            let (back, tree) = d.reconstruct().unwrap();
            assert_eq!((&back, &tree), (&r, &s));
        }
    }

    #[test]
    fn double_occurrence_words() {
        let d = BicoloredDiagram::of(&torus(), &set(&[0, 1])).unwrap();
        assert_eq!(d.double_occurrence_word().to_numbers(), "0 1 0 1");
        let d = BicoloredDiagram::of(&loop_o(), &set(&[])).unwrap();
        assert_eq!(d.double_occurrence_word().to_numbers(), "0 0");
        let d = BicoloredDiagram::of(&digon(), &set(&[0])).unwrap();
        assert_eq!(d.double_occurrence_word().to_numbers(), "0 2 0 2");
        assert_eq!(d.tree(), set(&[0]));
    }

    #[test]
    fn pivot_examples() {
        let full = BicoloredDiagram::of(&torus(), &set(&[0, 1])).unwrap();
        let empty = BicoloredDiagram::of(&torus(), &set(&[])).unwrap();
        assert_eq!(full.pivot(0, 1).unwrap(), empty);
        assert_eq!(full.pivot(0, 1).unwrap().pivot(0, 1).unwrap(), full);
        let d = BicoloredDiagram::from_word(
            &OccurrenceWord::parse("aabb").unwrap().0,
            &BTreeSet::new(),
        )
        .unwrap();
        assert_eq!(d.pivot(0, 2), Err(Error::NotInterlaced(0, 2)));
    }

    #[test]
    fn pivot_class_sizes() {
        let d = BicoloredDiagram::of(&loop_o(), &set(&[])).unwrap();
        assert_eq!(d.pivot_class().unwrap().len(), 1);
        let d = BicoloredDiagram::of(&torus(), &set(&[])).unwrap();
        assert_eq!(d.pivot_class().unwrap().len(), 2);
    }

    #[test]
    fn minor_examples() {
        let d = BicoloredDiagram::from_matching(vec![1, 0], vec![true, true]).unwrap();
        assert!(d.minor(0).unwrap().is_empty());
        let t = BicoloredDiagram::of(&torus(), &set(&[0, 1])).unwrap();
        let link = BicoloredDiagram::of(&link_l(), &set(&[0])).unwrap();
        let m = t.minor(0).unwrap();
        assert_eq!(m.word(), &[3, 1]);
        assert_eq!(
            m.reconstruct().unwrap().0.canonical_code(),
            link_l().canonical_code()
        );
        assert_eq!(m.tree().len(), link.tree().len());
        let dg = BicoloredDiagram::of(&digon(), &set(&[0])).unwrap();
        let m = dg.minor(2).unwrap();
        assert_eq!(m.word(), &[0, 1]);
        assert_eq!(m, link);
    }

    #[test]
    fn matching_counts() {
        let mut count = 0;
        for_each_matching(3, |_| count += 1);
        assert_eq!(count, 15);
        let mut count = 0;
        for_each_bicolored_matching(2, |_| count += 1);
        assert_eq!(count, 12);
    }
}
