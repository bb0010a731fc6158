//! The score-vector polytope of a multigraph: the points `a >= 0` with
//! `a(S) <= kappa_S` for every nonempty `S`. Vertices are generated from
//! ordered vertex subsets, counted against the factorial-sum bounds, and
//! cross-checked against two independent extreme-point characterizations.

use std::collections::HashSet;

use crate::counting::{is_basis_monomial, ExponentVector};
use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::oracle::bucket_by_score;

const MAX_POLYTOPE_VERTICES_N: usize = 8;

/// Validate an ordered subset: distinct, in-range vertices.
pub fn validate_ordered_subset(g: &MultiGraph, j: &[usize]) -> Result<()> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in j {
        if v >= n || seen[v] {
            return Err(Error::InvalidOrderedSubset);
        }
        seen[v] = true;
    }
    Ok(())
}

/// The polytope vertex attached to an ordered subset `J = (v_1, ..., v_r)`:
/// `v_i` gets the number of edges from `v_i` to vertices outside
/// `{v_1, ..., v_{i-1}}` (loops count), everything off `J` gets zero.
pub fn vertex_from_ordered_subset(g: &MultiGraph, j: &[usize]) -> Result<ExponentVector> {
    validate_ordered_subset(g, j)?;
    let n = g.vertex_count();
    let mut earlier = vec![false; n];
    let mut a = vec![0u32; n];
    for &v in j {
        a[v] = g
            .edges()
            .iter()
            .map(|&(p, q)| {
                ((p == v && !earlier[q]) || (q == v && p != v && !earlier[p])) as u32
            })
            .sum();
        earlier[v] = true;
    }
    Ok(a)
}

/// All vertices of the polytope: the distinct `a^J` over every ordered
/// subset `J`, including the empty one.
pub fn all_vertices(g: &MultiGraph) -> Result<HashSet<ExponentVector>> {
    let n = g.vertex_count();
    if n > MAX_POLYTOPE_VERTICES_N {
        return Err(Error::BudgetExceeded(format!(
            "ordered-subset enumeration limited to {MAX_POLYTOPE_VERTICES_N} vertices, got {n}"
        )));
    }
    let mut out = HashSet::new();
    let mut j = Vec::new();
    let mut used = vec![false; n];
    collect_vertices(g, &mut j, &mut used, &mut out)?;
    Ok(out)
}

fn collect_vertices(
    g: &MultiGraph,
    j: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut HashSet<ExponentVector>,
) -> Result<()> {
    out.insert(vertex_from_ordered_subset(g, j)?);
    for v in 0..g.vertex_count() {
        if !used[v] {
            used[v] = true;
            j.push(v);
            collect_vertices(g, j, used, out)?;
            j.pop();
            used[v] = false;
        }
    }
    Ok(())
}

/// Lattice points of the polytope, i.e. the nonnegative integer vectors
/// satisfying every subset inequality (equivalently the degree basis of the
/// external algebra).
pub fn lattice_points(g: &MultiGraph) -> Result<HashSet<ExponentVector>> {
    let n = g.vertex_count();
    let bounds: Vec<u32> = (0..n).map(|v| g.kappa_vertex(v) as u32).collect();
    let mut size: u128 = 1;
    for &b in &bounds {
        size = size.saturating_mul(b as u128 + 1);
    }
    if size > 50_000_000 {
        return Err(Error::BudgetExceeded(format!(
            "lattice-point box has {size} points"
        )));
    }
    let mut out = HashSet::new();
    let mut a = vec![0u32; n];
    loop {
        if is_basis_monomial(g, 1, &a)? {
            out.insert(a.clone());
        }
        let mut v = 0;
        while v < n && a[v] == bounds[v] {
            a[v] = 0;
            v += 1;
        }
        if v == n {
            return Ok(out);
        }
        a[v] += 1;
    }
}

/// Cross-check three descriptions of the vertex set: the ordered-subset
/// construction, the lattice points realized by exactly one partial
/// orientation, and the lattice points that are not midpoints of two
/// distinct lattice points.
pub fn verify_vertex_characterizations(g: &MultiGraph) -> Result<bool> {
    let from_subsets = all_vertices(g)?;
    let lattice = lattice_points(g)?;

    let buckets = bucket_by_score(g)?;
    let unique_orientation: HashSet<ExponentVector> = lattice
        .iter()
        .filter(|a| buckets.get(*a).map(|b| b.orientations) == Some(1))
        .cloned()
        .collect();

    let extreme: HashSet<ExponentVector> = lattice
        .iter()
        .filter(|a| !is_lattice_midpoint(a, &lattice))
        .cloned()
        .collect();

    Ok(from_subsets == unique_orientation && from_subsets == extreme)
}

fn is_lattice_midpoint(a: &[u32], lattice: &HashSet<ExponentVector>) -> bool {
    for b in lattice {
        if b == a {
            continue;
        }
        // c = 2a - b must be a nonnegative lattice point distinct from b
        let mut c = Vec::with_capacity(a.len());
        let mut ok = true;
        for (&av, &bv) in a.iter().zip(b) {
            match (2 * av).checked_sub(bv) {
                Some(cv) => c.push(cv),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && c != *b && lattice.contains(&c) {
            return true;
        }
    }
    false
}

/// Vertex count against the closed-form bound: `sum_{i=1}^{n} n!/i!`
/// (that is, `floor((e-1) n!)`) for simple graphs, `sum_{i=0}^{n} n!/i!`
/// (`floor(e n!)`) in general. Tight only for complete graphs.
pub fn vertex_count_bounds(g: &MultiGraph) -> Result<(u128, u128, bool)> {
    let count = all_vertices(g)?.len() as u128;
    let n = g.vertex_count();
    let factorial: u128 = (1..=n as u128).product();
    let start = if g.is_simple() { 1 } else { 0 };
    let mut bound: u128 = 0;
    let mut i_fact: u128 = 1;
    for i in 0..=n {
        if i >= 1 {
            i_fact *= i as u128;
        }
        if i >= start {
            bound += factorial / i_fact;
        }
    }
    Ok((count, bound, count == bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> MultiGraph {
        MultiGraph::family("complete", n).unwrap()
    }

    #[test]
    fn vertex_from_subset_examples() {
        for n in 2..=5 {
            let g = k(n);
            for m in 0..=n {
                let j: Vec<usize> = (0..m).collect();
                let expect: Vec<u32> = (0..n)
                    .map(|i| if i < m { (n - 1 - i) as u32 } else { 0 })
                    .collect();
                assert_eq!(vertex_from_ordered_subset(&g, &j).unwrap(), expect);
            }
        }
        let g3 = MultiGraph::new(2, vec![(0, 1), (1, 1)]).unwrap();
        assert_eq!(vertex_from_ordered_subset(&g3, &[1]).unwrap(), vec![0, 2]);
        assert_eq!(vertex_from_ordered_subset(&g3, &[]).unwrap(), vec![0, 0]);
        assert!(matches!(
            vertex_from_ordered_subset(&g3, &[0, 0]),
            Err(Error::InvalidOrderedSubset)
        ));
    }

    #[test]
    fn complete_graph_vertex_counts() {
        // sum_{i=1}^{n} n!/i! = floor((e-1) n!)
        assert_eq!(all_vertices(&k(3)).unwrap().len(), 10);
        assert_eq!(all_vertices(&k(4)).unwrap().len(), 41);
        assert_eq!(all_vertices(&k(5)).unwrap().len(), 206);
    }

    #[test]
    fn loop_graph_is_a_segment() {
        for l in 1..=4usize {
            let g = MultiGraph::new(1, vec![(0, 0); l]).unwrap();
            let vs = all_vertices(&g).unwrap();
            assert_eq!(vs, HashSet::from([vec![0], vec![l as u32]]));
        }
    }

    #[test]
    fn every_generated_vertex_is_a_lattice_point() {
        for g in [
            k(4),
            MultiGraph::new(3, vec![(0, 1), (1, 2), (1, 1), (0, 1)]).unwrap(),
            MultiGraph::family("cycle", 4).unwrap(),
        ] {
            let lattice = lattice_points(&g).unwrap();
            for v in all_vertices(&g).unwrap() {
                assert!(lattice.contains(&v), "g={g} v={v:?}");
            }
        }
    }

    #[test]
    fn lattice_points_are_partial_score_vectors() {
        for g in [
            k(3),
            MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap(),
            MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 2)]).unwrap(),
        ] {
            let lattice = lattice_points(&g).unwrap();
            let scores: HashSet<ExponentVector> =
                bucket_by_score(&g).unwrap().into_keys().collect();
            assert_eq!(lattice, scores, "g={g}");
        }
    }

    #[test]
    fn characterizations_small() {
        let graphs = [
            k(3),
            MultiGraph::new(2, vec![(0, 1)]).unwrap(),
            MultiGraph::new(2, vec![(1, 1)]).unwrap(),
            MultiGraph::new(2, vec![(0, 1), (1, 1)]).unwrap(),
            MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap(),
        ];
        for g in graphs {
            assert!(verify_vertex_characterizations(&g).unwrap(), "g={g}");
        }
    }

    #[test]
    fn bounds_examples() {
        let (count, bound, tight) = vertex_count_bounds(&k(5)).unwrap();
        assert_eq!((count, bound, tight), (206, 206, true));

        let path3 = MultiGraph::family("path", 3).unwrap();
        let (count, bound, tight) = vertex_count_bounds(&path3).unwrap();
        assert_eq!(bound, 10);
        assert!(count < bound && !tight);

        let l2 = MultiGraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let (count, bound, _) = vertex_count_bounds(&l2).unwrap();
        assert_eq!((count, bound), (2, 2));
    }

    #[test]
    fn simple_noncomplete_bound_is_strict() {
        for g in [
            MultiGraph::family("path", 4).unwrap(),
            MultiGraph::family("cycle", 5).unwrap(),
        ] {
            let (count, bound, tight) = vertex_count_bounds(&g).unwrap();
            assert!(count < bound && !tight, "g={g}");
        }
    }
}
