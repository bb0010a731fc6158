//! Loopy deletion-contraction engine for the Hilbert functions at r = 0, 1:
//! `h_G = h_{G/e} + t * h_{G-e}`, multiplicative over components, with the
//! one-vertex loop graphs as base cases. Memoized on canonical forms.

use std::collections::HashMap;
use std::sync::Mutex;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::counting::{hilbert_direct, HilbertPolynomial};
use crate::error::{Error, Result};
use crate::multigraph::{CanonicalForm, MultiGraph};

/// Shared memo table mapping `(canonical form, r)` to a Hilbert polynomial.
/// Entries are deterministic, so concurrent insert races are benign.
#[derive(Default)]
pub struct MemoTable {
    inner: Mutex<HashMap<(CanonicalForm, i64), HilbertPolynomial>>,
}

impl MemoTable {
    pub fn new() -> MemoTable {
        MemoTable::default()
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &(CanonicalForm, i64)) -> Option<HilbertPolynomial> {
        self.inner.lock().unwrap().get(key).cloned()
    }

    fn insert(&self, key: (CanonicalForm, i64), value: HilbertPolynomial) {
        self.inner.lock().unwrap().insert(key, value);
    }
}

/// Pivot selection for the recursion. The result is pivot-independent;
/// `Seeded` exists to test exactly that.
#[derive(Clone, Copy, Debug)]
pub enum PivotRule {
    FirstNonLoop,
    Seeded(u64),
}

/// Hilbert function of `B^(r)_G` for `r` in {0, 1} by loopy
/// deletion-contraction.
pub fn hilbert_delcon(g: &MultiGraph, r: i64, memo: &MemoTable) -> Result<HilbertPolynomial> {
    hilbert_delcon_with_pivot(g, r, memo, PivotRule::FirstNonLoop)
}

pub fn hilbert_delcon_with_pivot(
    g: &MultiGraph,
    r: i64,
    memo: &MemoTable,
    pivot: PivotRule,
) -> Result<HilbertPolynomial> {
    if r != 0 && r != 1 {
        return Err(Error::InvalidGraph(format!(
            "deletion-contraction computes r in {{0,1}}, got r={r}"
        )));
    }
    let mut rng = match pivot {
        PivotRule::FirstNonLoop => None,
        PivotRule::Seeded(seed) => Some(StdRng::seed_from_u64(seed)),
    };
    recurse(g, r, memo, &mut rng)
}

fn recurse(
    g: &MultiGraph,
    r: i64,
    memo: &MemoTable,
    rng: &mut Option<StdRng>,
) -> Result<HilbertPolynomial> {
    let comps = g.components();
    if comps.len() != 1 {
        let mut acc = HilbertPolynomial::one();
        for c in comps {
            acc = acc.mul(&component(&c, r, memo, rng)?);
            if acc.is_zero() {
                return Ok(acc);
            }
        }
        return Ok(acc);
    }
    component(&comps.into_iter().next().unwrap(), r, memo, rng)
}

fn component(
    g: &MultiGraph,
    r: i64,
    memo: &MemoTable,
    rng: &mut Option<StdRng>,
) -> Result<HilbertPolynomial> {
    let nonloops: Vec<usize> = (0..g.edge_count())
        .filter(|&i| !g.is_loop(i).unwrap())
        .collect();
    if nonloops.is_empty() {
        // a connected loops-only component is L_k on one vertex
        debug_assert_eq!(g.vertex_count(), 1);
        let k = g.edge_count();
        return Ok(match r {
            1 => HilbertPolynomial::truncated_geometric(k),
            0 if k >= 1 => HilbertPolynomial::truncated_geometric(k - 1),
            _ => HilbertPolynomial::zero(), // isolated vertex, r = 0
        });
    }
    let key = (g.canonical_form()?, r);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit);
    }
    let e = match rng {
        Some(rng) => nonloops[rng.gen_range(0..nonloops.len())],
        None => nonloops[0],
    };
    let contracted = recurse(&g.loopy_contract(e)?, r, memo, rng)?;
    let deleted = recurse(&g.delete_edge(e)?, r, memo, rng)?;
    let h = contracted.add(&deleted.shifted(1));
    memo.insert(key, h.clone());
    Ok(h)
}

/// Check `h_G^r = h_{G/e}^r + t * h_{G-e}^r` with all three sides computed
/// directly. Holds for every r >= 0; fails for some graphs at r = -1.
pub fn verify_delcon_relation(g: &MultiGraph, r: i64, edge: usize) -> Result<bool> {
    if g.is_loop(edge)? {
        return Err(Error::LoopEdge(edge));
    }
    let lhs = hilbert_direct(g, r)?;
    let contracted = hilbert_direct(&g.loopy_contract(edge)?, r)?;
    let deleted = hilbert_direct(&g.delete_edge(edge)?, r)?;
    Ok(lhs == contracted.add(&deleted.shifted(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> MultiGraph {
        MultiGraph::family("complete", n).unwrap()
    }

    #[test]
    fn base_cases_and_small_graphs() {
        let memo = MemoTable::new();
        assert_eq!(
            hilbert_delcon(&k(2), 1, &memo).unwrap(),
            HilbertPolynomial::from_u64(&[1, 2])
        );
        assert_eq!(
            hilbert_delcon(&k(3), 0, &memo).unwrap(),
            HilbertPolynomial::from_u64(&[1, 3, 3])
        );
        // L5 + L2 disjoint union: product of truncated geometric series
        let u = MultiGraph::family("loops", 5)
            .unwrap()
            .disjoint_union(&MultiGraph::family("loops", 2).unwrap());
        assert_eq!(
            hilbert_delcon(&u, 1, &memo).unwrap(),
            HilbertPolynomial::truncated_geometric(5)
                .mul(&HilbertPolynomial::truncated_geometric(2))
        );
    }

    #[test]
    fn rejects_other_r() {
        let memo = MemoTable::new();
        assert!(hilbert_delcon(&k(3), 2, &memo).is_err());
        assert!(hilbert_delcon(&k(3), -1, &memo).is_err());
    }

    #[test]
    fn matches_direct_on_mixed_graphs() {
        let memo = MemoTable::new();
        let gs = [
            k(5),
            MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 2), (0, 1), (2, 3)]).unwrap(),
            MultiGraph::new(5, vec![(0, 1), (1, 2), (3, 4), (0, 0)]).unwrap(),
            MultiGraph::new(3, vec![]).unwrap(),
        ];
        for g in gs {
            for r in [0, 1] {
                assert_eq!(
                    hilbert_delcon(&g, r, &memo).unwrap(),
                    hilbert_direct(&g, r).unwrap(),
                    "g={g} r={r}"
                );
            }
        }
    }

    #[test]
    fn pivot_independence() {
        let g = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (1, 3), (1, 1)]).unwrap();
        let reference = hilbert_delcon(&g, 1, &MemoTable::new()).unwrap();
        for seed in 0..5 {
            let memo = MemoTable::new();
            assert_eq!(
                hilbert_delcon_with_pivot(&g, 1, &memo, PivotRule::Seeded(seed)).unwrap(),
                reference
            );
        }
    }

    #[test]
    fn warm_table_reuse() {
        let memo = MemoTable::new();
        let cold = hilbert_delcon(&k(5), 1, &memo).unwrap();
        assert!(!memo.is_empty());
        let warm = hilbert_delcon(&k(5), 1, &memo).unwrap();
        assert_eq!(cold, warm);
    }

    #[test]
    fn relation_examples() {
        assert!(verify_delcon_relation(&k(4), 2, 0).unwrap());
        assert!(verify_delcon_relation(&k(3), 0, 1).unwrap());
        let tri_dbl = MultiGraph::new(3, vec![(0, 1), (1, 2), (0, 2), (0, 1)]).unwrap();
        for e in 0..4 {
            assert!(verify_delcon_relation(&tri_dbl, 1, e).unwrap());
        }
        let l1 = MultiGraph::new(1, vec![(0, 0)]).unwrap();
        assert!(matches!(verify_delcon_relation(&l1, 1, 0), Err(Error::LoopEdge(0))));
    }
}
