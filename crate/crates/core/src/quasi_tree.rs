//! Tours, quasi-trees, bridges and separating loops, minors, and the
//! deletion-contraction count of quasi-trees.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::map::{GeneralMap, UnionFind};
use crate::perm::{FlagSet, Permutation};

/// An edge is named by the smaller of its two flags.
pub type EdgeId = usize;

/// Largest edge count accepted by [`GeneralMap::list_quasi_trees`].
pub const LIST_GUARD: usize = 24;

/// A set of edges of some host map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSubset(BTreeSet<EdgeId>);

impl EdgeSubset {
    pub fn new() -> Self {
        EdgeSubset(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        self.0.remove(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    pub fn symmetric_difference(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset(self.0.symmetric_difference(&other.0).copied().collect())
    }

    /// `self △ {e, f}`.
    pub fn toggled(&self, e: EdgeId, f: EdgeId) -> EdgeSubset {
        let mut out = self.clone();
        for x in [e, f] {
            if !out.remove(x) {
                out.insert(x);
            }
        }
        out
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Edges of `map` not in `self`.
    pub fn complement_in(&self, map: &GeneralMap) -> EdgeSubset {
        map.edges()
            .into_iter()
            .filter(|&e| !self.contains(e))
            .collect()
    }
}

impl FromIterator<EdgeId> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSubset(iter.into_iter().collect())
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for EdgeSubset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// Accepts `0,4`, `[0, 4]` or an empty string.
impl FromStr for EdgeSubset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<EdgeId>()
                    .map_err(|_| Error::Parse(format!("bad edge id {t:?}")))
            })
            .collect()
    }
}

/// Pairs of edges whose flags alternate along the cyclic permutation `tour`.
pub(crate) fn interlaced_pairs(map: &GeneralMap, tour: &Permutation) -> Vec<(EdgeId, EdgeId)> {
    let Some(start) = map.flags().next() else {
        return Vec::new();
    };
    let mut pos = vec![usize::MAX; map.capacity()];
    let mut b = start;
    let mut i = 0;
    loop {
        pos[b] = i;
        i += 1;
        b = tour.apply(b);
        if b == start {
            break;
        }
    }
    let chords: Vec<(EdgeId, usize, usize)> = map
        .edges()
        .into_iter()
        .map(|e| {
            let (p, q) = (pos[e], pos[map.alpha().apply(e)]);
            (e, p.min(q), p.max(q))
        })
        .collect();
    let mut out = Vec::new();
    for (i, &(e, a1, a2)) in chords.iter().enumerate() {
        for &(f, b1, b2) in &chords[i + 1..] {
            if (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2) {
                out.push((e, f));
            }
        }
    }
    out
}

impl GeneralMap {
    pub(crate) fn check_subset(&self, s: &EdgeSubset) -> Result<()> {
        s.iter().try_for_each(|e| self.check_edge(e))
    }

    /// The flags of the edges in `s`.
    pub fn subset_flags(&self, s: &EdgeSubset) -> FlagSet {
        FlagSet::from_flags(self.capacity(), s.iter().flat_map(|e| self.edge_flags(e)))
    }

    /// `τ = σ ∘ α_F`: follows α across edges of `f`, then σ.
    pub fn tour(&self, f: &EdgeSubset) -> Result<Permutation> {
        self.check_subset(f)?;
        let cut = self.alpha().cut_out(&self.subset_flags(f));
        Ok(self.sigma().compose(&cut).expect("same domain"))
    }

    /// True iff the tour of `s` is a single cycle.
    pub fn is_quasi_tree(&self, s: &EdgeSubset) -> Result<bool> {
        Ok(self.tour(s)?.is_cyclic())
    }

    /// `(|S| − (n − 1)) / 2` for a quasi-tree `S` on `n` vertices.
    pub fn quasi_tree_genus(&self, s: &EdgeSubset) -> Result<usize> {
        let cycles = self.tour(s)?.cycle_count();
        if cycles > 1 {
            return Err(Error::NotQuasiTree { cycles });
        }
        let n = self.vertex_count();
        let twice = s.len() + 1 - n;
        assert!(
            twice.is_multiple_of(2),
            "quasi-tree size has the parity of n - 1"
        );
        Ok(twice / 2)
    }

    /// True iff removing `e` disconnects `G(M)`.
    pub fn is_bridge(&self, e: EdgeId) -> Result<bool> {
        self.check_edge(e)?;
        let g = self.underlying_graph();
        Ok(g.component_count_without(&[e]) > g.component_count_without(&[]))
    }

    /// True iff `e` is a bridge of the dual.
    pub fn is_separating_loop(&self, e: EdgeId) -> Result<bool> {
        self.dual().is_bridge(e)
    }

    fn bridge_flags(&self) -> Vec<bool> {
        let g = self.underlying_graph();
        let base = g.component_count_without(&[]);
        g.edges
            .iter()
            .map(|&e| g.component_count_without(&[e]) > base)
            .collect()
    }

    /// Removes `e` without the bridge check.
    pub(crate) fn delete_unchecked(&self, e: EdgeId) -> GeneralMap {
        let mut keep = self.flag_set();
        for b in self.edge_flags(e) {
            keep.remove(b);
        }
        GeneralMap::from_parts_unchecked(self.sigma().restrict(&keep), self.alpha().restrict(&keep))
    }

    /// `M ∖ e`. Flag labels are preserved.
    pub fn delete(&self, e: EdgeId) -> Result<GeneralMap> {
        if self.is_bridge(e)? {
            return Err(Error::Bridge(e));
        }
        Ok(self.delete_unchecked(e))
    }

    /// `M / e = (M* ∖ e)*`. Flag labels are preserved.
    pub fn contract(&self, e: EdgeId) -> Result<GeneralMap> {
        if self.is_separating_loop(e)? {
            return Err(Error::SeparatingLoop(e));
        }
        Ok(self.dual().delete_unchecked(e).dual())
    }

    /// Number of quasi-trees, by deletion and contraction.
    pub fn count_quasi_trees(&self) -> BigUint {
        let mut memo = HashMap::new();
        count_rec(self, &mut memo)
    }

    /// Every quasi-tree, by testing all `2^m` edge subsets. Sorted.
    pub fn list_quasi_trees(&self) -> Result<Vec<EdgeSubset>> {
        let edges = self.edges();
        if edges.len() > LIST_GUARD {
            return Err(Error::Guard(format!(
                "{} edges exceeds the enumeration limit of {LIST_GUARD}",
                edges.len()
            )));
        }
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << edges.len()) {
            let s: EdgeSubset = edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if self.is_quasi_tree(&s)? {
                out.push(s);
            }
        }
        out.sort_by_key(|s| s.to_vec());
        Ok(out)
    }

    /// A breadth-first spanning forest of `G(M)`, scanning edges by id.
    pub fn spanning_tree(&self) -> EdgeSubset {
        let g = self.underlying_graph();
        let mut uf = UnionFind::new(g.vertex_count());
        g.edges
            .iter()
            .zip(&g.ends)
            .filter(|&(_, &(u, v))| uf.union(u, v))
            .map(|(&e, _)| e)
            .collect()
    }

    /// True iff `s` is the edge set of a spanning tree of `G(M)`.
    pub fn is_spanning_tree(&self, s: &EdgeSubset) -> Result<bool> {
        self.check_subset(s)?;
        let g = self.underlying_graph();
        if s.len() + 1 != g.vertex_count() {
            return Ok(false);
        }
        let mut uf = UnionFind::new(g.vertex_count());
        for e in s.iter() {
            let (u, v) = g.ends[g.edge_index(e).expect("checked")];
            if !uf.union(u, v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Quasi-trees `S0 ⊆ S ⊆ S1` where `S0` is a spanning tree and `S1` is
    /// the complement of a spanning tree of the dual. Built by repeatedly
    /// dropping (resp. adding) pairs of interlaced chords.
    pub fn sandwich(&self, s: &EdgeSubset) -> Result<(EdgeSubset, EdgeSubset)> {
        let cycles = self.tour(s)?.cycle_count();
        if cycles > 1 {
            return Err(Error::NotQuasiTree { cycles });
        }
        let lower = self.shrink_to_tree(s.clone())?;
        let dual = self.dual();
        let upper = dual
            .shrink_to_tree(s.complement_in(self))?
            .complement_in(self);
        Ok((lower, upper))
    }

    fn shrink_to_tree(&self, mut s: EdgeSubset) -> Result<EdgeSubset> {
        loop {
            let tour = self.tour(&s)?;
            let pair = interlaced_pairs(self, &tour)
                .into_iter()
                .find(|&(e, f)| s.contains(e) && s.contains(f));
            match pair {
                Some((e, f)) => {
                    s.remove(e);
                    s.remove(f);
                }
                None => return Ok(s),
            }
        }
    }

    /// Edges of the unique cycle of `tree ∪ {f}`, including `f`.
    pub fn fundamental_cycle(&self, tree: &EdgeSubset, f: EdgeId) -> Result<EdgeSubset> {
        if !self.is_spanning_tree(tree)? {
            return Err(Error::NotSpanningTree);
        }
        self.check_edge(f)?;
        let g = self.underlying_graph();
        let (u, v) = g.ends[g.edge_index(f).expect("checked")];
        // parent pointers of the tree rooted at u
        let mut parent: Vec<Option<(usize, EdgeId)>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        let mut queue = VecDeque::from([u]);
        seen[u] = true;
        while let Some(x) = queue.pop_front() {
            for e in tree.iter() {
                let (a, b) = g.ends[g.edge_index(e).expect("checked")];
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        let mut out: EdgeSubset = std::iter::once(f).collect();
        let mut x = v;
        while let Some((p, e)) = parent[x] {
            out.insert(e);
            x = p;
        }
        Ok(out)
    }

    /// Edges crossing the cut obtained by removing `e` from `tree`,
    /// including `e`.
    pub fn fundamental_cocycle(&self, tree: &EdgeSubset, e: EdgeId) -> Result<EdgeSubset> {
        if !self.is_spanning_tree(tree)? {
            return Err(Error::NotSpanningTree);
        }
        if !tree.contains(e) {
            return Err(Error::UnknownEdge(e));
        }
        let g = self.underlying_graph();
        let mut uf = UnionFind::new(g.vertex_count());
        for t in tree.iter().filter(|&t| t != e) {
            let (a, b) = g.ends[g.edge_index(t).expect("checked")];
            uf.union(a, b);
        }
        Ok(g.edges
            .iter()
            .zip(&g.ends)
            .filter(|&(_, &(a, b))| uf.find(a) != uf.find(b))
            .map(|(&x, _)| x)
            .collect())
    }
}

fn count_rec(map: &GeneralMap, memo: &mut HashMap<Vec<u8>, BigUint>) -> BigUint {
    if !map.is_connected() {
        return BigUint::zero();
    }
    let edges = map.edges();
    if edges.is_empty() {
        return BigUint::one();
    }
    let key = map.unrooted_code();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let bridges = map.bridge_flags();
    let loops = map.dual().bridge_flags();
    let free = (0..edges.len()).find(|&i| !bridges[i] && !loops[i]);
    let value = match free {
        Some(i) => {
            let e = edges[i];
            let deleted = map.delete_unchecked(e);
            let contracted = map.dual().delete_unchecked(e).dual();
            count_rec(&deleted, memo) + count_rec(&contracted, memo)
        }
        None => {
            let e = edges[0];
            if bridges[0] {
                count_rec(&map.dual().delete_unchecked(e).dual(), memo)
            } else {
                count_rec(&map.delete_unchecked(e), memo)
            }
        }
    };
    memo.insert(key, value.clone());
    value
}
