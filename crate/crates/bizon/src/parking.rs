//! Weak parking functions of a multigraph: the burning membership test,
//! box enumeration, the maximal functions attached to vertex orderings,
//! the delooped-cone equivalence, and the bridge to acyclic orientations.

use std::collections::HashSet;

use crate::counting::ExponentVector;
use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, VertexSubset};
use crate::oracle::bucket_by_score;

const MAX_PARKING_BOX: u128 = 10_000_000;

/// `dh_S(v)`: edges with one end at `v` and the other in `(V - S) u {v}`,
/// i.e. edges from `v` leaving `S` plus loops at `v`. Requires `v` in `s`.
pub fn dhat(g: &MultiGraph, s: VertexSubset, v: usize) -> Result<u32> {
    if v >= g.vertex_count() {
        return Err(Error::InvalidVertex(v));
    }
    if !s.contains(v) {
        return Err(Error::VertexNotInSubset(v));
    }
    let mut count = 0;
    for &(p, q) in g.edges() {
        if p == v && q == v {
            count += 1; // loop
        } else if p == v && !s.contains(q) {
            count += 1;
        } else if q == v && !s.contains(p) {
            count += 1;
        }
    }
    Ok(count)
}

/// Membership by burning: starting from `S = V`, repeatedly remove any
/// `v` with `f(v) <= dh_S(v)`; `f` is a weak parking function iff `S`
/// burns down to nothing. Order-independence is covered by tests against
/// the all-subsets definition.
pub fn is_weak_parking(g: &MultiGraph, f: &[u32]) -> bool {
    let n = g.vertex_count();
    assert_eq!(f.len(), n);
    let mut s = VertexSubset::full(n);
    let mut progress = true;
    while progress && !s.is_empty() {
        progress = false;
        for v in 0..n {
            if s.contains(v) && f[v] <= dhat(g, s, v).unwrap() {
                s = s.remove(v);
                progress = true;
            }
        }
    }
    s.is_empty()
}

/// The definition verbatim: every nonempty `S` contains a vertex with
/// `f(v) <= dh_S(v)`. Exponential in `n`; used to certify the burning test.
pub fn is_weak_parking_all_subsets(g: &MultiGraph, f: &[u32]) -> bool {
    let n = g.vertex_count();
    for mask in 1u32..1 << n {
        let s = VertexSubset(mask);
        if !s.iter().any(|v| f[v] <= dhat(g, s, v).unwrap()) {
            return false;
        }
    }
    true
}

/// All weak parking functions, enumerated over the box with
/// `f(v) <= kappa_v` per vertex.
pub fn enumerate_weak_parking(g: &MultiGraph) -> Result<HashSet<ExponentVector>> {
    let n = g.vertex_count();
    let bounds: Vec<u32> = (0..n).map(|v| g.kappa_vertex(v) as u32).collect();
    check_box_budget(&bounds)?;
    let mut out = HashSet::new();
    let mut f = vec![0u32; n];
    loop {
        if is_weak_parking(g, &f) {
            out.insert(f.clone());
        }
        if !advance(&mut f, &bounds) {
            return Ok(out);
        }
    }
}

fn check_box_budget(bounds: &[u32]) -> Result<()> {
    let mut size: u128 = 1;
    for &b in bounds {
        size = size.saturating_mul(b as u128 + 1);
    }
    if size > MAX_PARKING_BOX {
        return Err(Error::BudgetExceeded(format!(
            "parking enumeration box has {size} points (limit {MAX_PARKING_BOX})"
        )));
    }
    Ok(())
}

fn advance(f: &mut [u32], bounds: &[u32]) -> bool {
    for v in 0..f.len() {
        if f[v] < bounds[v] {
            f[v] += 1;
            return true;
        }
        f[v] = 0;
    }
    false
}

/// The maximal weak parking function of an ordering: vertex `v_i` gets
/// `dh_S(v_i)` for the suffix `S = {v_i, ..., v_n}`, i.e. its edges to
/// earlier vertices plus its loops. Total weight is always `|E|`.
pub fn f_pi(g: &MultiGraph, ordering: &[usize]) -> Result<ExponentVector> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation);
        }
        seen[v] = true;
    }
    if ordering.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut f = vec![0u32; n];
    let mut suffix = VertexSubset::full(n);
    for &v in ordering {
        f[v] = dhat(g, suffix, v)?;
        suffix = suffix.remove(v);
    }
    Ok(f)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// The maximal weak parking functions: exactly the `f_pi` over all
/// orderings, equivalently the weak parking functions of full weight `|E|`.
pub fn maximal_weak_parking(g: &MultiGraph) -> Result<HashSet<ExponentVector>> {
    let mut out = HashSet::new();
    for pi in permutations(g.vertex_count()) {
        out.insert(f_pi(g, &pi)?);
    }
    Ok(out)
}

/// Parking functions of the cone `C_G` relative to its apex, by the classic
/// strict condition: for every nonempty `S` of original vertices some `v`
/// in `S` has `f(v) < d_S(v)`, degrees taken in the cone.
pub fn cone_parking_functions(g: &MultiGraph) -> Result<HashSet<ExponentVector>> {
    let n = g.vertex_count();
    let cone = g.delooped_cone();
    let bounds: Vec<u32> = (0..n).map(|v| g.kappa_vertex(v) as u32).collect();
    check_box_budget(&bounds)?;
    let mut out = HashSet::new();
    let mut f = vec![0u32; n];
    loop {
        if cone_is_parking(&cone, n, &f) {
            out.insert(f.clone());
        }
        if !advance(&mut f, &bounds) {
            return Ok(out);
        }
    }
}

fn cone_is_parking(cone: &MultiGraph, n: usize, f: &[u32]) -> bool {
    for mask in 1u32..1 << n {
        let s = VertexSubset(mask);
        let ok = s.iter().any(|v| {
            let d_s: u32 = cone
                .edges()
                .iter()
                .map(|&(p, q)| {
                    // edges from v leaving S; the apex (index n) is outside S
                    let leaves = |a: usize, b: usize| a == v && (b >= n || !s.contains(b));
                    (leaves(p, q) || leaves(q, p)) as u32
                })
                .sum();
            f[v] < d_s
        });
        if !ok {
            return false;
        }
    }
    true
}

/// Weak parking functions of `g` coincide with the cone's relative parking
/// functions.
pub fn cone_equivalence_check(g: &MultiGraph) -> Result<bool> {
    Ok(enumerate_weak_parking(g)? == cone_parking_functions(g)?)
}

/// Orientation bridge: weak parking functions are exactly the score vectors
/// of acyclic partial orientations, and the maximal ones are exactly the
/// score vectors of acyclic total orientations.
pub fn parking_vs_acyclic(g: &MultiGraph) -> Result<bool> {
    let buckets = bucket_by_score(g)?;
    let mut acyclic_partial = HashSet::new();
    let mut acyclic_total = HashSet::new();
    let m = g.edge_count() as u32;
    for (score, bucket) in &buckets {
        if bucket.acyclic > 0 {
            acyclic_partial.insert(score.clone());
        }
        // an acyclic orientation of full weight |E| orients every edge
        if bucket.acyclic > 0 && score.iter().sum::<u32>() == m {
            acyclic_total.insert(score.clone());
        }
    }
    let parking = enumerate_weak_parking(g)?;
    let maximal = maximal_weak_parking(g)?;
    Ok(parking == acyclic_partial && maximal == acyclic_total)
}
