//! Combinatorial data for drawing a map from one of its quasi-trees with
//! two fundamental polygons: the quasi-tree chords inside the circle, the
//! other chords outside, each side carrying its own handles.

use serde::Serialize;

use crate::diagram::BicoloredDiagram;
use crate::error::{Error, Result};
use crate::map::RootedMap;
use crate::perm::Flag;
use crate::quasi_tree::{EdgeId, EdgeSubset};

/// Counts of a one-vertex map formed by some chords of the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OneVertexMap {
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordPlacement {
    pub edge: EdgeId,
    /// Positions of the two ends on the circle.
    pub ends: (usize, usize),
    /// True for quasi-tree chords, drawn inside the circle.
    pub inside: bool,
    /// Pairs of identified polygon sides the chord passes through.
    pub sides: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonLayout {
    /// Flags in circle order from the root.
    pub circle: Vec<Flag>,
    pub genus: usize,
    pub quasi_tree_genus: usize,
    pub inner_sides: usize,
    pub outer_sides: usize,
    /// Identified sides of the inner polygon, `a b a⁻¹ b⁻¹` per handle.
    pub inner_side_pairs: Vec<(usize, usize)>,
    pub outer_side_pairs: Vec<(usize, usize)>,
    pub chords: Vec<ChordPlacement>,
    pub interior_map: OneVertexMap,
    pub exterior_map: OneVertexMap,
    /// Faces of the interior one-vertex map.
    pub interior_dual_vertices: usize,
}

/// The one-vertex map whose rotation is the circle order of the chord ends.
fn one_vertex_map(n: usize, chords: &[(EdgeId, usize, usize)]) -> OneVertexMap {
    let mut mate = vec![usize::MAX; n];
    for &(_, p, q) in chords {
        mate[p] = q;
        mate[q] = p;
    }
    let ends: Vec<usize> = (0..n).filter(|&p| mate[p] != usize::MAX).collect();
    let mut next = vec![usize::MAX; n];
    for (i, &p) in ends.iter().enumerate() {
        next[p] = ends[(i + 1) % ends.len()];
    }
    let mut seen = vec![false; n];
    let mut faces = 0;
    for &p in &ends {
        if seen[p] {
            continue;
        }
        faces += 1;
        let mut x = p;
        while !seen[x] {
            seen[x] = true;
            x = next[mate[x]];
        }
    }
    let edges = chords.len();
    let faces = faces.max(1);
    OneVertexMap {
        edges,
        faces,
        genus: (1 + edges - faces) / 2,
    }
}

fn crosses(a: &(EdgeId, usize, usize), b: &(EdgeId, usize, usize)) -> bool {
    (a.1 < b.1 && b.1 < a.2 && a.2 < b.2) || (b.1 < a.1 && a.1 < b.2 && b.2 < a.2)
}

/// Side pairs crossed by each chord, from a symplectic basis of the crossing
/// form over GF(2).
///
/// Handle `h` is opened on the smallest pair of chords (by edge ids) whose
/// residual classes cross: the first gets sides `(4h, 4h+2)`, the second
/// `(4h+1, 4h+3)`. Every other chord records the sides of the basis classes
/// it pairs with, and its class is reduced accordingly. The number of
/// handles is the genus of the one-vertex map.
fn assign_handles(chords: &[(EdgeId, usize, usize)]) -> (usize, Vec<Vec<(usize, usize)>>) {
    let k = chords.len();
    let form: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| crosses(&chords[i], &chords[j])).collect())
        .collect();
    let pair = |x: &[bool], y: &[bool]| {
        let mut acc = false;
        for i in (0..k).filter(|&i| x[i]) {
            for j in (0..k).filter(|&j| y[j]) {
                acc ^= form[i][j];
            }
        }
        acc
    };
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| chords[i].0);
    let mut residual: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| i == j).collect()).collect();
    let mut sides: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    let mut handles = 0;
    loop {
        let found = order.iter().enumerate().find_map(|(a, &i)| {
            order[a + 1..]
                .iter()
                .find(|&&j| pair(&residual[i], &residual[j]))
                .map(|&j| (i, j))
        });
        let Some((u, v)) = found else { break };
        let (a_side, b_side) = (
            (4 * handles, 4 * handles + 2),
            (4 * handles + 1, 4 * handles + 3),
        );
        let (a, b) = (residual[u].clone(), residual[v].clone());
        for x in 0..k {
            let along_a = pair(&residual[x], &b);
            let along_b = pair(&residual[x], &a);
            if along_a {
                sides[x].push(a_side);
                for (r, &t) in residual[x].iter_mut().zip(&a) {
                    *r ^= t;
                }
            }
            if along_b {
                sides[x].push(b_side);
                for (r, &t) in residual[x].iter_mut().zip(&b) {
                    *r ^= t;
                }
            }
        }
        handles += 1;
    }
    (handles, sides)
}

fn side_pairs(handles: usize) -> Vec<(usize, usize)> {
    (0..handles)
        .flat_map(|h| [(4 * h, 4 * h + 2), (4 * h + 1, 4 * h + 3)])
        .collect()
}

/// Layout of the map `m` drawn from its quasi-tree `s`.
pub fn layout(m: &RootedMap, s: &EdgeSubset) -> Result<PolygonLayout> {
    let d = BicoloredDiagram::of(m, s)?;
    let n = d.len();
    let genus = m.map().genus()?;
    let quasi_tree_genus = m.map().quasi_tree_genus(s)?;
    let (inner, outer): (Vec<_>, Vec<_>) = d.chords().into_iter().partition(|c| s.contains(c.0));
    let interior_map = one_vertex_map(n, &inner);
    let exterior_map = one_vertex_map(n, &outer);
    let mut chords = Vec::with_capacity(inner.len() + outer.len());
    for (side, inside, map) in [
        (&inner, true, &interior_map),
        (&outer, false, &exterior_map),
    ] {
        let (handles, sides) = assign_handles(side);
        if handles != map.genus {
            return Err(Error::Hypothesis(format!(
                "{handles} handles found for a one-vertex map of genus {}",
                map.genus
            )));
        }
        chords.extend(
            side.iter()
                .zip(sides)
                .map(|(&(edge, p, q), sides)| ChordPlacement {
                    edge,
                    ends: (p, q),
                    inside,
                    sides,
                }),
        );
    }
    chords.sort_by_key(|c| c.ends.0);
    Ok(PolygonLayout {
        circle: d.word().to_vec(),
        genus,
        quasi_tree_genus,
        inner_sides: 4 * interior_map.genus,
        outer_sides: 4 * exterior_map.genus,
        inner_side_pairs: side_pairs(interior_map.genus),
        outer_side_pairs: side_pairs(exterior_map.genus),
        chords,
        interior_map,
        exterior_map,
        interior_dual_vertices: interior_map.faces,
    })
}
