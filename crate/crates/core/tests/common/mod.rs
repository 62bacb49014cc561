//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use mapwords::diagram::{for_each_bicolored_matching, BicoloredDiagram};
use mapwords::{EdgeSubset, GeneralMap, Permutation, RootedMap};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every rooted map with `m` edges, once each, in canonical labelling.
pub fn rooted_maps(m: usize) -> Vec<RootedMap> {
    let mut out = BTreeMap::new();
    for_each_bicolored_matching(m, |d| {
        let (r, _) = d.reconstruct().expect("valid diagram");
        out.entry(r.canonical_code())
            .or_insert_with(|| r.canonical_form().0);
    });
    out.into_values().collect()
}

/// A connected map on flags `0..2m` with `α = (0 1)(2 3)…` and a uniform
/// random rotation, rooted at a random flag.
pub fn random_map(rng: &mut impl Rng, m: usize) -> RootedMap {
    let alpha: Vec<usize> = (0..2 * m).map(|b| b ^ 1).collect();
    let alpha = Permutation::from_images(alpha).unwrap();
    loop {
        let mut images: Vec<usize> = (0..2 * m).collect();
        images.shuffle(rng);
        let sigma = Permutation::from_images(images).unwrap();
        let map = GeneralMap::from_parts_unchecked(sigma, alpha.clone());
        if map.is_connected() {
            let root = rng.gen_range(0..2 * m);
            return RootedMap::new(map, root).unwrap();
        }
    }
}

/// A uniform random bicolored ordered matching with `m` chords.
pub fn random_diagram(rng: &mut impl Rng, m: usize) -> BicoloredDiagram {
    let mut points: Vec<usize> = (0..2 * m).collect();
    points.shuffle(rng);
    let mut mate = vec![0; 2 * m];
    let mut in_tree = vec![false; 2 * m];
    for pair in points.chunks(2) {
        let colour = rng.gen_bool(0.5);
        mate[pair[0]] = pair[1];
        mate[pair[1]] = pair[0];
        in_tree[pair[0]] = colour;
        in_tree[pair[1]] = colour;
    }
    BicoloredDiagram::from_matching(mate, in_tree).unwrap()
}

/// A random rooted map with a quasi-tree, from a random diagram.
pub fn random_pair(rng: &mut impl Rng, m: usize) -> (RootedMap, EdgeSubset) {
    random_diagram(rng, m).reconstruct().unwrap()
}

/// A random non-crossing matching on `2k` consecutive slots.
fn non_crossing(rng: &mut impl Rng, k: usize) -> Vec<usize> {
    fn fill(rng: &mut impl Rng, lo: usize, hi: usize, mate: &mut [usize]) {
        if lo >= hi {
            return;
        }
        let q = lo + 1 + 2 * rng.gen_range(0..(hi - lo) / 2);
        mate[lo] = q;
        mate[q] = lo;
        fill(rng, lo + 1, q, mate);
        fill(rng, q + 1, hi, mate);
    }
    let mut mate = vec![0; 2 * k];
    fill(rng, 0, 2 * k, &mut mate);
    mate
}

/// A random planar map with `m` edges and one of its spanning trees:
/// two non-crossing chord families interleaved on one circle.
pub fn random_planar_pair(rng: &mut impl Rng, m: usize) -> (RootedMap, EdgeSubset) {
    let k = rng.gen_range(0..=m);
    let mut slots: Vec<usize> = (0..2 * m).collect();
    slots.shuffle(rng);
    let (mut tree_slots, mut other_slots) = (slots[..2 * k].to_vec(), slots[2 * k..].to_vec());
    tree_slots.sort_unstable();
    other_slots.sort_unstable();
    let mut mate = vec![0; 2 * m];
    let mut in_tree = vec![false; 2 * m];
    for (slots, colour) in [(&tree_slots, true), (&other_slots, false)] {
        let inner = non_crossing(rng, slots.len() / 2);
        for (i, &p) in slots.iter().enumerate() {
            mate[p] = slots[inner[i]];
            in_tree[p] = colour;
        }
    }
    BicoloredDiagram::from_matching(mate, in_tree)
        .unwrap()
        .reconstruct()
        .unwrap()
}

/// Vertex label of each flag and the number of vertices, from σ-orbits.
pub fn vertex_labels(map: &GeneralMap) -> (Vec<usize>, usize) {
    let sigma = map.sigma();
    let mut label = vec![usize::MAX; map.capacity()];
    let mut count = 0;
    for b in map.flags() {
        if label[b] != usize::MAX {
            continue;
        }
        let mut x = b;
        while label[x] == usize::MAX {
            label[x] = count;
            x = sigma.apply(x);
        }
        count += 1;
    }
    (label, count)
}

/// The two end vertices of each edge, keyed by edge id.
pub fn edge_ends(map: &GeneralMap) -> (BTreeMap<usize, (usize, usize)>, usize) {
    let (label, n) = vertex_labels(map);
    let ends = map
        .flags()
        .filter(|&b| b < map.alpha().apply(b))
        .map(|b| (b, (label[b], label[map.alpha().apply(b)])))
        .collect();
    (ends, n)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// True iff `s` is acyclic and spans all `n` vertices.
pub fn is_spanning_tree_oracle(
    ends: &BTreeMap<usize, (usize, usize)>,
    n: usize,
    s: &[usize],
) -> bool {
    if s.len() + 1 != n {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for e in s {
        let (u, v) = ends[e];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Spanning trees of the underlying graph, by testing every edge subset. Sorted.
pub fn spanning_trees_oracle(map: &GeneralMap) -> Vec<EdgeSubset> {
    let (ends, n) = edge_ends(map);
    let edges: Vec<usize> = ends.keys().copied().collect();
    let mut out: Vec<EdgeSubset> = (0u32..1 << edges.len())
        .filter(|mask| mask.count_ones() as usize + 1 == n)
        .map(|mask| {
            edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect::<Vec<_>>()
        })
        .filter(|s| is_spanning_tree_oracle(&ends, n, s))
        .map(|s| s.into_iter().collect())
        .collect();
    out.sort();
    out
}

/// True iff every non-tree edge joins a vertex to one of its ancestors in
/// `tree` rooted at the vertex of `root`.
pub fn tremaux_oracle(map: &GeneralMap, tree: &EdgeSubset, root: usize) -> bool {
    let (ends, n) = edge_ends(map);
    let (label, _) = vertex_labels(map);
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let r = label[root];
    depth[r] = 0;
    let mut stack = vec![r];
    while let Some(x) = stack.pop() {
        for e in tree.iter() {
            let (u, v) = ends[&e];
            let y = if u == x {
                v
            } else if v == x {
                u
            } else {
                continue;
            };
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let is_ancestor = |a: usize, mut b: usize| {
        while depth[b] > depth[a] {
            b = parent[b];
        }
        a == b
    };
    ends.iter()
        .filter(|(e, _)| !tree.contains(**e))
        .all(|(_, &(u, v))| is_ancestor(u, v) || is_ancestor(v, u))
}

/// Edge subsets as bitmasks over the sorted edge list of `map`.
pub fn to_mask(map: &GeneralMap, s: &EdgeSubset) -> u32 {
    map.edges()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| s.contains(e))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}
