//! Circle graphs: local complementation, pivoting and the orientation read
//! from a linear word.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph on integer vertices.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct InterlacementGraph {
    adj: BTreeMap<usize, BTreeSet<usize>>,
}

impl InterlacementGraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Self
    where
        V: IntoIterator<Item = usize>,
        E: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = InterlacementGraph::default();
        for v in vertices {
            g.adj.entry(v).or_default();
        }
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj.entry(u).or_default().insert(v);
            self.adj.entry(v).or_default().insert(u);
        }
    }

    fn toggle_edge(&mut self, u: usize, v: usize) {
        let set = self.adj.get_mut(&u).expect("vertex present");
        if !set.remove(&v) {
            set.insert(v);
            self.adj.get_mut(&v).expect("vertex present").insert(u);
        } else {
            self.adj.get_mut(&v).expect("vertex present").remove(&u);
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn neighbors(&self, v: usize) -> Result<&BTreeSet<usize>> {
        self.adj.get(&v).ok_or(Error::UnknownVertex(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj.get(&v).is_some_and(|n| n.is_empty())
    }

    /// `G ∗ v`: complements the subgraph induced on the neighbours of `v`.
    pub fn local_complement(&self, v: usize) -> Result<InterlacementGraph> {
        let nbrs: Vec<usize> = self.neighbors(v)?.iter().copied().collect();
        let mut g = self.clone();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                g.toggle_edge(a, b);
            }
        }
        Ok(g)
    }

    /// `G ∧ uv = G ∗ u ∗ v ∗ u`; checked against `G ∗ v ∗ u ∗ v`.
    pub fn pivot(&self, u: usize, v: usize) -> Result<InterlacementGraph> {
        self.neighbors(u)?;
        self.neighbors(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
        let a = self
            .local_complement(u)?
            .local_complement(v)?
            .local_complement(u)?;
        let b = self
            .local_complement(v)?
            .local_complement(u)?
            .local_complement(v)?;
        assert_eq!(a, b, "pivot orders disagree");
        Ok(a)
    }

    /// The bipartite subgraph keeping only edges between `part` and the rest.
    pub fn bipartite_between(&self, part: &BTreeSet<usize>) -> InterlacementGraph {
        InterlacementGraph::new(
            self.vertices(),
            self.edges()
                .into_iter()
                .filter(|&(u, v)| part.contains(&u) != part.contains(&v)),
        )
    }

    /// True iff every vertex reaches every other.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.adj.keys().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &self.adj[&x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == self.adj.len()
    }
}

/// The oriented circle graph of a linear word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedInterlacement {
    vertices: Vec<usize>,
    arcs: BTreeSet<(usize, usize)>,
}

impl DirectedInterlacement {
    pub fn new(vertices: Vec<usize>, arcs: BTreeSet<(usize, usize)>) -> Self {
        DirectedInterlacement { vertices, arcs }
    }

    /// Vertices in order of first occurrence in the word.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.arcs.contains(&(from, to))
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs.range((v, 0)..=(v, usize::MAX)).map(|&(_, t)| t)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().filter(move |a| a.1 == v).map(|&(s, _)| s)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_neighbors(v).next().is_none()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_neighbors(v).next().is_none()
    }

    /// Vertices with no out-arc, in vertex order.
    pub fn sinks(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.is_sink(v))
            .collect()
    }

    /// Vertices with no in-arc, in vertex order.
    pub fn sources(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.is_source(v))
            .collect()
    }

    /// The underlying undirected graph.
    pub fn shadow(&self) -> InterlacementGraph {
        InterlacementGraph::new(self.vertices.iter().copied(), self.arcs.iter().copied())
    }
}
