//! Depth-first search on rooted maps and the pattern characterizations of
//! DFS-trees on the tour word.

use serde::Serialize;

use crate::diagram::BicoloredDiagram;
use crate::error::{Error, Result};
use crate::interlace::DirectedInterlacement;
use crate::map::{GeneralMap, RootedMap};
use crate::perm::Flag;
use crate::quasi_tree::EdgeSubset;

/// Which unvisited flag is taken when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DfsPolicy {
    /// The first unvisited flag met when turning around the vertex.
    Early,
    /// The last one.
    Late,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DfsResult {
    pub tree: EdgeSubset,
    /// Discovery flags of the non-root vertices, in order of discovery.
    pub discovery: Vec<Flag>,
    /// Flags in the order they became the current flag (first time only).
    pub visit_order: Vec<Flag>,
}

/// Runs the search from the root vertex.
///
/// A dummy flag sits just before the root, so the root vertex is scanned as
/// `b0, σ(b0), …`. From a current flag `c` the scan is `σ(c), σ²(c), …`
/// stopping before `c`. Backtracking from `v` moves to the partner of the
/// discovery flag of `v`, at the parent vertex.
pub fn dfs(m: &RootedMap, policy: DfsPolicy) -> DfsResult {
    let map = m.map();
    let sigma = map.sigma();
    let alpha = map.alpha();
    let vertex = map.vertex_index();
    let mut flag_seen = vec![false; map.capacity()];
    let mut vertex_seen = vec![false; map.vertex_count()];
    let mut parent_flag: Vec<Option<Flag>> = vec![None; map.vertex_count()];
    let root = m.root();
    vertex_seen[vertex[root]] = true;

    let mut tree = EdgeSubset::new();
    let mut discovery = Vec::new();
    let mut visit_order = Vec::new();

    // `None` is the dummy flag before the root.
    let mut current: Option<Flag> = None;
    loop {
        let scan: Vec<Flag> = match current {
            None => {
                let mut v = vec![root];
                let mut x = sigma.apply(root);
                while x != root {
                    v.push(x);
                    x = sigma.apply(x);
                }
                v
            }
            Some(c) => {
                let mut v = Vec::new();
                let mut x = sigma.apply(c);
                while x != c {
                    v.push(x);
                    x = sigma.apply(x);
                }
                v
            }
        };
        let mut open = scan.into_iter().filter(|&b| !flag_seen[b]);
        let pick = match policy {
            DfsPolicy::Early => open.next(),
            DfsPolicy::Late => open.next_back(),
        };
        let b = match pick {
            Some(b) => b,
            None => {
                let v = vertex[current.unwrap_or(root)];
                match parent_flag[v] {
                    Some(d) => {
                        current = Some(alpha.apply(d));
                        continue;
                    }
                    None => break,
                }
            }
        };
        flag_seen[b] = true;
        visit_order.push(b);
        current = Some(b);
        let opposite = alpha.apply(b);
        let w = vertex[opposite];
        if !vertex_seen[w] {
            vertex_seen[w] = true;
            parent_flag[w] = Some(opposite);
            flag_seen[opposite] = true;
            visit_order.push(opposite);
            discovery.push(opposite);
            tree.insert(map.edge_of(b));
            current = Some(opposite);
        }
    }
    DfsResult {
        tree,
        discovery,
        visit_order,
    }
}

fn spanning_word(m: &RootedMap, s: &EdgeSubset) -> Result<DirectedInterlacement> {
    if !m.map().is_spanning_tree(s)? {
        return Err(Error::NotSpanningTree);
    }
    let d = BicoloredDiagram::of(m, s)?;
    Ok(d.double_occurrence_word().directed_interlacement())
}

/// True iff no edge outside `s` has both an in- and an out-neighbour in `s`
/// in the oriented interlacement of the tour word of `s`.
pub fn is_tremaux(m: &RootedMap, s: &EdgeSubset) -> Result<bool> {
    let d = spanning_word(m, s)?;
    Ok(d.vertices().iter().filter(|&&f| !s.contains(f)).all(|&f| {
        let has_in = d.in_neighbors(f).any(|e| s.contains(e));
        let has_out = d.out_neighbors(f).any(|e| s.contains(e));
        !(has_in && has_out)
    }))
}

/// True iff every edge of `s` is a source of the oriented interlacement.
pub fn is_early(m: &RootedMap, s: &EdgeSubset) -> Result<bool> {
    let d = spanning_word(m, s)?;
    Ok(s.iter().all(|e| d.is_source(e)))
}

/// True iff every edge of `s` is a sink of the oriented interlacement.
pub fn is_late(m: &RootedMap, s: &EdgeSubset) -> Result<bool> {
    let d = spanning_word(m, s)?;
    Ok(s.iter().all(|e| d.is_sink(e)))
}

/// Connected, loopless, at least two vertices and no cut vertex.
pub fn is_two_connected(map: &GeneralMap) -> bool {
    let g = map.underlying_graph();
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() || g.loops.iter().any(|&l| l) {
        return false;
    }
    (0..n).all(|cut| {
        let mut uf = crate::map::UnionFind::new(n);
        let mut parts = n - 1;
        for &(u, v) in &g.ends {
            if u != cut && v != cut && uf.union(u, v) {
                parts -= 1;
            }
        }
        parts <= 1
    })
}

/// Outcome of comparing a DFS-tree with its complement in the dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub complement_is_dfs_tree: bool,
    pub is_early: bool,
    pub is_late: bool,
    pub complement_is_dual_early: bool,
    pub complement_is_dual_late: bool,
    /// The complement is a dual DFS-tree iff (Early, dual Late) or
    /// (Late, dual Early).
    pub dichotomy_holds: bool,
}

/// Checks the Early/Late pairing between a DFS-tree `s` of a planar
/// 2-connected rooted map and its complement in the dual rooted at the same
/// flag.
pub fn check_planar_dfs_duality(m: &RootedMap, s: &EdgeSubset) -> Result<DualityReport> {
    if m.map().genus()? != 0 {
        return Err(Error::Hypothesis("the map is not planar".into()));
    }
    if !is_two_connected(m.map()) {
        return Err(Error::Hypothesis("the map is not 2-connected".into()));
    }
    if !is_tremaux(m, s)? {
        return Err(Error::Hypothesis("the edge set is not a DFS-tree".into()));
    }
    let dual = m.dual();
    let c = s.complement_in(m.map());
    let complement_is_dfs_tree = is_tremaux(&dual, &c)?;
    let report = DualityReport {
        complement_is_dfs_tree,
        is_early: is_early(m, s)?,
        is_late: is_late(m, s)?,
        complement_is_dual_early: is_early(&dual, &c)?,
        complement_is_dual_late: is_late(&dual, &c)?,
        dichotomy_holds: false,
    };
    let paired = (report.is_early && report.complement_is_dual_late)
        || (report.is_late && report.complement_is_dual_early);
    Ok(DualityReport {
        dichotomy_holds: complement_is_dfs_tree == paired,
        ..report
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rooted(n: usize, sigma: &[&[usize]], alpha: &[&[usize]]) -> RootedMap {
        RootedMap::new(GeneralMap::from_cycles(n, sigma, alpha).unwrap(), 0).unwrap()
    }

    fn link_l() -> RootedMap {
        rooted(2, &[], &[&[0, 1]])
    }

    fn digon() -> RootedMap {
        rooted(4, &[&[0, 2], &[1, 3]], &[&[0, 1], &[2, 3]])
    }

    fn theta() -> RootedMap {
        rooted(6, &[&[0, 2, 4], &[1, 5, 3]], &[&[0, 1], &[2, 3], &[4, 5]])
    }

    fn set(ids: &[usize]) -> EdgeSubset {
        ids.iter().copied().collect()
    }

    #[test]
    fn link_has_one_tree() {
        for p in [DfsPolicy::Early, DfsPolicy::Late] {
            let r = dfs(&link_l(), p);
            assert_eq!(r.tree, set(&[0]));
            assert_eq!(r.discovery, vec![1]);
            assert_eq!(r.visit_order, vec![0, 1]);
        }
        assert!(is_early(&link_l(), &set(&[0])).unwrap());
        assert!(is_late(&link_l(), &set(&[0])).unwrap());
    }

    #[test]
    fn digon_trees_differ() {
        let early = dfs(&digon(), DfsPolicy::Early).tree;
        let late = dfs(&digon(), DfsPolicy::Late).tree;
        assert_eq!((early.clone(), late.clone()), (set(&[0]), set(&[2])));
        assert!(is_early(&digon(), &early).unwrap());
        assert!(!is_late(&digon(), &early).unwrap());
        assert!(is_late(&digon(), &late).unwrap());
        assert!(!is_early(&digon(), &late).unwrap());
    }

    #[test]
    fn tremaux_checks() {
        for p in [DfsPolicy::Early, DfsPolicy::Late] {
            let t = dfs(&theta(), p).tree;
            assert!(is_tremaux(&theta(), &t).unwrap());
        }
        assert_eq!(is_tremaux(&digon(), &set(&[])), Err(Error::NotSpanningTree));
        assert!(is_tremaux(&link_l(), &set(&[0])).unwrap());
    }

    #[test]
    fn tremaux_pattern_example() {
        // a f a b f b with a, b in the tree: the path a-b with f closing it.
        let d = BicoloredDiagram::from_word(
            &crate::word::OccurrenceWord::parse("afabfb").unwrap().0,
            &[0, 2].into_iter().collect(),
        )
        .unwrap();
        let (m, s) = d.reconstruct().unwrap();
        assert!(m.map().is_spanning_tree(&s).unwrap());
        assert!(!is_tremaux(&m, &s).unwrap());
    }

    #[test]
    fn duality_on_digon_and_theta() {
        let r = check_planar_dfs_duality(&digon(), &set(&[0])).unwrap();
        assert!(r.is_early && r.complement_is_dual_late && r.complement_is_dfs_tree);
        assert!(r.dichotomy_holds);
        let t = dfs(&theta(), DfsPolicy::Early).tree;
        let r = check_planar_dfs_duality(&theta(), &t).unwrap();
        assert!(r.dichotomy_holds && r.complement_is_dfs_tree);
        let torus = rooted(4, &[&[0, 1, 2, 3]], &[&[0, 2], &[1, 3]]);
        assert!(matches!(
            check_planar_dfs_duality(&torus, &set(&[])),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn two_connectivity() {
        assert!(is_two_connected(link_l().map()));
        assert!(is_two_connected(digon().map()));
        assert!(!is_two_connected(rooted(2, &[&[0, 1]], &[&[0, 1]]).map()));
        let path = rooted(4, &[&[1, 2]], &[&[0, 1], &[2, 3]]);
        assert!(!is_two_connected(path.map()));
    }
}
