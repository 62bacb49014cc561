//! General maps `(σ, α)`, rooted maps, duality, genus and canonical codes.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Flag, FlagSet, Permutation};
use crate::quasi_tree::EdgeId;

/// Outcome of [`GeneralMap::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    Ok,
    Violation(String),
}

impl Diagnostic {
    pub fn is_ok(&self) -> bool {
        matches!(self, Diagnostic::Ok)
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Ok => write!(f, "ok"),
            Diagnostic::Violation(msg) => write!(f, "{msg}"),
        }
    }
}

/// Vertex, edge and face counts together with the genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EulerCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
}

/// The graph `G(M)`: vertices are σ-cycles, edges are α-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlyingGraph {
    pub vertices: Vec<Vec<Flag>>,
    pub edges: Vec<EdgeId>,
    /// Vertex indices of the two ends of each edge, in `edges` order.
    pub ends: Vec<(usize, usize)>,
    pub loops: Vec<bool>,
}

impl UnderlyingGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Number of connected components when the edges in `skip` are ignored.
    pub fn component_count_without(&self, skip: &[EdgeId]) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        let mut count = self.vertices.len();
        for (i, &(u, v)) in self.ends.iter().enumerate() {
            if skip.contains(&self.edges[i]) {
                continue;
            }
            if uf.union(u, v) {
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count_without(&[]) <= 1
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different classes.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// A general map: a vertex permutation σ and a fixed-point-free involution α
/// acting on the same set of flags.
///
/// The map with no flags is the one-vertex map with no edges: it has one
/// vertex, one face, genus 0 and a single (empty) quasi-tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneralMap {
    sigma: Permutation,
    alpha: Permutation,
}

impl GeneralMap {
    /// Builds a map, rejecting pairs that fail [`validate`](Self::validate).
    pub fn new(sigma: Permutation, alpha: Permutation) -> Result<Self> {
        let map = GeneralMap { sigma, alpha };
        match map.validate() {
            Diagnostic::Ok => Ok(map),
            Diagnostic::Violation(msg) => Err(Error::InvalidMap(msg)),
        }
    }

    /// Builds a pair without checking it; pair with [`validate`](Self::validate).
    pub fn from_parts_unchecked(sigma: Permutation, alpha: Permutation) -> Self {
        GeneralMap { sigma, alpha }
    }

    /// Builds a map on flags `0..n` from cycle lists.
    pub fn from_cycles<S: AsRef<[Flag]>, A: AsRef<[Flag]>>(
        n: usize,
        sigma: &[S],
        alpha: &[A],
    ) -> Result<Self> {
        GeneralMap::new(
            Permutation::from_cycles(n, sigma)?,
            Permutation::from_cycles(n, alpha)?,
        )
    }

    /// The empty map (one vertex, no edges).
    pub fn empty() -> Self {
        GeneralMap {
            sigma: Permutation::empty(0),
            alpha: Permutation::empty(0),
        }
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    /// Size of the label range; flags are labels below this bound.
    pub fn capacity(&self) -> usize {
        self.sigma.capacity()
    }

    pub fn flag_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn flags(&self) -> impl Iterator<Item = Flag> + '_ {
        self.sigma.domain()
    }

    pub fn flag_set(&self) -> FlagSet {
        self.sigma.domain_set()
    }

    pub fn contains_flag(&self, b: Flag) -> bool {
        self.sigma.contains(b)
    }

    /// Reports the first violated invariant: matching domains, α an
    /// involution, α without fixed points, even flag count.
    pub fn validate(&self) -> Diagnostic {
        let (s, a) = (&self.sigma, &self.alpha);
        if s.capacity() != a.capacity() || s.domain().ne(a.domain()) {
            return Diagnostic::Violation("sigma and alpha act on different flag sets".into());
        }
        if let Some(b) = a.domain().find(|&b| a.apply(a.apply(b)) != b) {
            return Diagnostic::Violation(format!("alpha is not an involution at {b}"));
        }
        if let Some(b) = a.fixed_points().next() {
            return Diagnostic::Violation(format!("alpha has fixed point {b}"));
        }
        if s.len() % 2 == 1 {
            return Diagnostic::Violation(format!("odd flag count {}", s.len()));
        }
        Diagnostic::Ok
    }

    /// Edge id of the edge containing `b`: the smaller of its two flags.
    pub fn edge_of(&self, b: Flag) -> EdgeId {
        b.min(self.alpha.apply(b))
    }

    /// Edge ids in increasing order.
    pub fn edges(&self) -> Vec<EdgeId> {
        self.flags().filter(|&b| b < self.alpha.apply(b)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.flag_count() / 2
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.contains_flag(e) && e < self.alpha.apply(e)
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    /// The two flags of edge `e`.
    pub fn edge_flags(&self, e: EdgeId) -> [Flag; 2] {
        [e, self.alpha.apply(e)]
    }

    pub fn vertices(&self) -> Vec<Vec<Flag>> {
        self.sigma.cycles()
    }

    /// Faces are the cycles of σα.
    pub fn face_permutation(&self) -> Permutation {
        self.sigma
            .compose(&self.alpha)
            .expect("validated maps share one domain")
    }

    pub fn faces(&self) -> Vec<Vec<Flag>> {
        self.face_permutation().cycles()
    }

    /// Orbits of ⟨σ, α⟩, each sorted, ordered by least flag.
    pub fn components(&self) -> Vec<Vec<Flag>> {
        let mut seen = vec![false; self.capacity()];
        let mut out = Vec::new();
        for start in self.flags() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut block = vec![start];
            let mut stack = vec![start];
            while let Some(b) = stack.pop() {
                for c in [self.sigma.apply(b), self.alpha.apply(b)] {
                    if !seen[c] {
                        seen[c] = true;
                        block.push(c);
                        stack.push(c);
                    }
                }
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    /// True when ⟨σ, α⟩ is transitive. The empty map counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The general map induced on one block of flags (closed under σ and α).
    pub fn submap(&self, block: &FlagSet) -> GeneralMap {
        GeneralMap {
            sigma: self.sigma.restrict(block),
            alpha: self.alpha.restrict(block),
        }
    }

    pub fn component_maps(&self) -> Vec<GeneralMap> {
        self.components()
            .into_iter()
            .map(|c| self.submap(&FlagSet::from_flags(self.capacity(), c)))
            .collect()
    }

    /// `(σα, α)`.
    pub fn dual(&self) -> GeneralMap {
        GeneralMap {
            sigma: self.face_permutation(),
            alpha: self.alpha.clone(),
        }
    }

    /// `(σ⁻¹, α)`: the same map with reversed orientation.
    pub fn reversed(&self) -> GeneralMap {
        GeneralMap {
            sigma: self.sigma.inverse(),
            alpha: self.alpha.clone(),
        }
    }

    /// Vertex, edge and face counts and the genus of a connected map.
    pub fn euler(&self) -> Result<EulerCounts> {
        let components = self.components().len();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        if self.flag_count() == 0 {
            return Ok(EulerCounts {
                vertices: 1,
                edges: 0,
                faces: 1,
                genus: 0,
            });
        }
        let v = self.sigma.cycle_count();
        let e = self.edge_count();
        let f = self.face_permutation().cycle_count();
        let twice = 2 + e - v - f;
        debug_assert!(twice.is_multiple_of(2), "Euler characteristic parity");
        Ok(EulerCounts {
            vertices: v,
            edges: e,
            faces: f,
            genus: twice / 2,
        })
    }

    pub fn genus(&self) -> Result<usize> {
        self.euler().map(|c| c.genus)
    }

    pub fn vertex_count(&self) -> usize {
        if self.flag_count() == 0 {
            1
        } else {
            self.sigma.cycle_count()
        }
    }

    /// Index (into [`vertices`](Self::vertices)) of the vertex of each flag.
    pub fn vertex_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.capacity()];
        for (i, cycle) in self.vertices().iter().enumerate() {
            for &b in cycle {
                idx[b] = i;
            }
        }
        idx
    }

    pub fn underlying_graph(&self) -> UnderlyingGraph {
        let vertices = self.vertices();
        let idx = self.vertex_index();
        let edges = self.edges();
        let ends: Vec<(usize, usize)> = edges
            .iter()
            .map(|&e| (idx[e], idx[self.alpha.apply(e)]))
            .collect();
        let loops = ends.iter().map(|&(u, v)| u == v).collect();
        UnderlyingGraph {
            vertices,
            edges,
            ends,
            loops,
        }
    }

    /// Renames flags to `0..flag_count` preserving their order. Returns the
    /// compacted map and the renaming table (old label → new label).
    pub fn compact(&self) -> (GeneralMap, Vec<usize>) {
        let mut rename = vec![usize::MAX; self.capacity()];
        for (i, b) in self.flags().enumerate() {
            rename[b] = i;
        }
        let n = self.flag_count();
        (
            GeneralMap {
                sigma: self.sigma.relabel(&rename, n),
                alpha: self.alpha.relabel(&rename, n),
            },
            rename,
        )
    }

    /// Applies a flag renaming (old label → new label) into `0..capacity`.
    pub fn relabel(&self, rename: &[usize], capacity: usize) -> GeneralMap {
        GeneralMap {
            sigma: self.sigma.relabel(rename, capacity),
            alpha: self.alpha.relabel(rename, capacity),
        }
    }

    /// Canonical code of the rooted map obtained by rooting at `root`.
    pub fn rooted_code(&self, root: Flag) -> Vec<u8> {
        canonical_code_from(self, root).0
    }

    /// Canonical code up to unrooted isomorphism: the least rooted code over
    /// all roots of each component, components sorted. Empty for the empty map.
    pub fn unrooted_code(&self) -> Vec<u8> {
        let mut parts: Vec<Vec<u8>> = self
            .components()
            .into_iter()
            .map(|block| {
                block
                    .iter()
                    .map(|&r| self.rooted_code(r))
                    .min()
                    .unwrap_or_default()
            })
            .collect();
        parts.sort();
        parts.concat()
    }
}

impl fmt::Debug for GeneralMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GeneralMap {{ sigma: {}, alpha: {} }}",
            self.sigma, self.alpha
        )
    }
}

/// Breadth-first relabelling from `root`: flags are numbered in order of
/// discovery, exploring σ(x) before α(x) for each dequeued flag `x`. Only the
/// component of `root` is labelled.
fn canonical_code_from(map: &GeneralMap, root: Flag) -> (Vec<u8>, Vec<usize>) {
    let mut label = vec![usize::MAX; map.capacity()];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    label[root] = 0;
    order.push(root);
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        for y in [map.sigma.apply(x), map.alpha.apply(x)] {
            if label[y] == usize::MAX {
                label[y] = order.len();
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    let mut code = Vec::with_capacity(4 + 8 * order.len());
    code.extend_from_slice(&(order.len() as u32).to_le_bytes());
    for &b in &order {
        code.extend_from_slice(&(label[map.sigma.apply(b)] as u32).to_le_bytes());
        code.extend_from_slice(&(label[map.alpha.apply(b)] as u32).to_le_bytes());
    }
    (code, label)
}

/// A connected map with a distinguished root flag.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedMap {
    map: GeneralMap,
    root: Flag,
}

impl RootedMap {
    pub fn new(map: GeneralMap, root: Flag) -> Result<Self> {
        if !map.contains_flag(root) {
            return Err(Error::UnknownFlag(root));
        }
        let components = map.components().len();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(RootedMap { map, root })
    }

    /// Roots at the least flag.
    pub fn at_min_flag(map: GeneralMap) -> Result<Self> {
        let root = map
            .flags()
            .next()
            .ok_or_else(|| Error::InvalidMap("a rooted map needs at least one flag".into()))?;
        RootedMap::new(map, root)
    }

    pub fn map(&self) -> &GeneralMap {
        &self.map
    }

    pub fn root(&self) -> Flag {
        self.root
    }

    pub fn into_map(self) -> GeneralMap {
        self.map
    }

    /// The dual rooted at the same flag.
    pub fn dual(&self) -> RootedMap {
        RootedMap {
            map: self.map.dual(),
            root: self.root,
        }
    }

    pub fn with_root(&self, root: Flag) -> Result<RootedMap> {
        RootedMap::new(self.map.clone(), root)
    }

    /// Byte code equal for two rooted maps iff they are isomorphic.
    pub fn canonical_code(&self) -> Vec<u8> {
        self.map.rooted_code(self.root)
    }

    /// The canonical representative (root 0, flags in discovery order) and
    /// the renaming used (old label → new label).
    pub fn canonical_form(&self) -> (RootedMap, Vec<usize>) {
        let (_, label) = canonical_code_from(&self.map, self.root);
        let n = self.map.flag_count();
        (
            RootedMap {
                map: self.map.relabel(&label, n),
                root: 0,
            },
            label,
        )
    }

    /// Compacts labels to `0..flag_count`, keeping their order.
    pub fn compact(&self) -> (RootedMap, Vec<usize>) {
        let (map, rename) = self.map.compact();
        (
            RootedMap {
                map,
                root: rename[self.root],
            },
            rename,
        )
    }
}
