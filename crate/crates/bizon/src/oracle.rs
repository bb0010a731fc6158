//! Brute-force ground truth: the partial orientation algebra, its central and
//! internal quotients, expansion of generator monomials, the edge derivation
//! with its exact-sequence dimension check, and orientation bucketing by
//! score vector. Exists to certify the fast counting paths, not to scale.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::{ExponentVector, HilbertPolynomial};
use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, VertexSubset};

const MAX_ORACLE_EDGES: usize = 14;

/// One oriented edge. `from_second` picks which stored endpoint is the
/// source; loops have a single orientation (`from_second = false`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Arc {
    pub edge: usize,
    pub from_second: bool,
}

impl Arc {
    /// Source vertex (the vertex the arrow exits).
    pub fn source(self, g: &MultiGraph) -> usize {
        let (u, v) = g.edge(self.edge).unwrap();
        if self.from_second {
            v
        } else {
            u
        }
    }

    pub fn target(self, g: &MultiGraph) -> usize {
        let (u, v) = g.edge(self.edge).unwrap();
        if self.from_second {
            u
        } else {
            v
        }
    }

    /// Orientation reversal; loops are the fixed points.
    pub fn reversed(self, g: &MultiGraph) -> Arc {
        let (u, v) = g.edge(self.edge).unwrap();
        if u == v {
            self
        } else {
            Arc { edge: self.edge, from_second: !self.from_second }
        }
    }
}

/// Per-edge orientation state of a partial orientation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeDir {
    Unoriented,
    FromFirst,
    FromSecond,
}

/// A set of arcs with at most one orientation per underlying edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialOrientation {
    dirs: Vec<EdgeDir>,
}

impl PartialOrientation {
    pub fn empty(edge_count: usize) -> PartialOrientation {
        PartialOrientation { dirs: vec![EdgeDir::Unoriented; edge_count] }
    }

    pub fn dirs(&self) -> &[EdgeDir] {
        &self.dirs
    }

    pub fn dir(&self, edge: usize) -> EdgeDir {
        self.dirs[edge]
    }

    /// Number of oriented edges.
    pub fn arc_count(&self) -> usize {
        self.dirs.iter().filter(|d| **d != EdgeDir::Unoriented).count()
    }

    pub fn is_total(&self) -> bool {
        self.arc_count() == self.dirs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.dirs.iter().enumerate().filter_map(|(edge, d)| match d {
            EdgeDir::Unoriented => None,
            EdgeDir::FromFirst => Some(Arc { edge, from_second: false }),
            EdgeDir::FromSecond => Some(Arc { edge, from_second: true }),
        })
    }

    /// Extend by one arc; `None` when the underlying edge is already used.
    pub fn with_arc(&self, arc: Arc) -> Option<PartialOrientation> {
        if self.dirs[arc.edge] != EdgeDir::Unoriented {
            return None;
        }
        let mut dirs = self.dirs.clone();
        dirs[arc.edge] = if arc.from_second {
            EdgeDir::FromSecond
        } else {
            EdgeDir::FromFirst
        };
        Some(PartialOrientation { dirs })
    }

    pub fn without_arc(&self, arc: Arc) -> PartialOrientation {
        let mut dirs = self.dirs.clone();
        dirs[arc.edge] = EdgeDir::Unoriented;
        PartialOrientation { dirs }
    }

    /// Per-vertex counts of outgoing arcs.
    pub fn score(&self, g: &MultiGraph) -> ExponentVector {
        let mut score = vec![0u32; g.vertex_count()];
        for arc in self.arcs() {
            score[arc.source(g)] += 1;
        }
        score
    }

    /// No directed cycle among non-loop arcs; loop arcs are permitted.
    pub fn is_acyclic(&self, g: &MultiGraph) -> bool {
        let n = g.vertex_count();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for arc in self.arcs() {
            let (s, t) = (arc.source(g), arc.target(g));
            if s == t {
                continue;
            }
            out[s].push(t);
            indeg[t] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &t in &out[v] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push(t);
                }
            }
        }
        seen == n
    }
}

/// All partial orientations of `g`: each non-loop edge independently
/// unoriented or oriented either way, each loop unoriented or oriented.
pub fn enumerate_partial_orientations(g: &MultiGraph) -> Result<Vec<PartialOrientation>> {
    let m = g.edge_count();
    if m > MAX_ORACLE_EDGES {
        return Err(Error::BudgetExceeded(format!(
            "orientation enumeration limited to {MAX_ORACLE_EDGES} edges, got {m}"
        )));
    }
    let mut out = Vec::new();
    let mut dirs = vec![EdgeDir::Unoriented; m];
    enumerate_rec(g, 0, &mut dirs, &mut out);
    Ok(out)
}

fn enumerate_rec(
    g: &MultiGraph,
    edge: usize,
    dirs: &mut Vec<EdgeDir>,
    out: &mut Vec<PartialOrientation>,
) {
    if edge == g.edge_count() {
        out.push(PartialOrientation { dirs: dirs.clone() });
        return;
    }
    let is_loop = g.is_loop(edge).unwrap();
    let options: &[EdgeDir] = if is_loop {
        &[EdgeDir::Unoriented, EdgeDir::FromFirst]
    } else {
        &[EdgeDir::Unoriented, EdgeDir::FromFirst, EdgeDir::FromSecond]
    };
    for &d in options {
        dirs[edge] = d;
        enumerate_rec(g, edge + 1, dirs, out);
    }
    dirs[edge] = EdgeDir::Unoriented;
}

/// Formal integer combination of basis monomials `x_Sigma` of the partial
/// orientation algebra. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OracleElement {
    terms: HashMap<PartialOrientation, i64>,
}

impl OracleElement {
    pub fn zero() -> OracleElement {
        OracleElement::default()
    }

    /// The identity: the empty monomial with coefficient 1.
    pub fn identity(edge_count: usize) -> OracleElement {
        OracleElement::monomial(PartialOrientation::empty(edge_count), 1)
    }

    pub fn monomial(po: PartialOrientation, coeff: i64) -> OracleElement {
        let mut e = OracleElement::zero();
        e.add_term(po, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartialOrientation, i64)> {
        self.terms.iter().map(|(po, &c)| (po, c))
    }

    pub fn coeff(&self, po: &PartialOrientation) -> i64 {
        self.terms.get(po).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, po: PartialOrientation, coeff: i64) {
        use std::collections::hash_map::Entry;
        if coeff == 0 {
            return;
        }
        match self.terms.entry(po) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().checked_add(coeff).expect("coefficient overflow");
                if sum == 0 {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, other: &OracleElement) -> OracleElement {
        let mut out = self.clone();
        for (po, c) in other.terms() {
            out.add_term(po.clone(), c);
        }
        out
    }
}

/// Product in the partial orientation algebra: on basis monomials,
/// `x_A * x_B` is `x_{A u B}` when `A` and `B` touch disjoint edge sets,
/// and zero otherwise (this covers both `x_e^2` and `x_e x_e'`).
pub fn multiply(a: &OracleElement, b: &OracleElement) -> OracleElement {
    let mut out = OracleElement::zero();
    for (pa, ca) in a.terms() {
        'b: for (pb, cb) in b.terms() {
            let mut dirs = Vec::with_capacity(pa.dirs.len());
            for (&da, &db) in pa.dirs.iter().zip(&pb.dirs) {
                match (da, db) {
                    (EdgeDir::Unoriented, d) | (d, EdgeDir::Unoriented) => dirs.push(d),
                    _ => continue 'b,
                }
            }
            out.add_term(
                PartialOrientation { dirs },
                ca.checked_mul(cb).expect("coefficient overflow"),
            );
        }
    }
    out
}

/// Expansion of the generator monomial `prod_v y_v^{a_v}`. Nonzero exactly
/// when `a` is a partial score vector; all coefficients are then positive
/// multinomial counts of arc assignments.
pub fn y_power(g: &MultiGraph, a: &[u32]) -> Result<OracleElement> {
    let m = g.edge_count();
    if m > MAX_ORACLE_EDGES {
        return Err(Error::BudgetExceeded(format!(
            "y_power limited to {MAX_ORACLE_EDGES} edges, got {m}"
        )));
    }
    assert_eq!(a.len(), g.vertex_count());
    let mut acc = OracleElement::identity(m);
    for (v, &av) in a.iter().enumerate() {
        if av == 0 {
            continue;
        }
        let out_arcs: Vec<Arc> = (0..m)
            .filter_map(|edge| {
                let (p, q) = g.edge(edge).unwrap();
                if p == v {
                    Some(Arc { edge, from_second: false })
                } else if q == v {
                    Some(Arc { edge, from_second: true })
                } else {
                    None
                }
            })
            .collect();
        // out-arcs of v use pairwise distinct edges, so y_v^k expands to
        // k! times the sum over k-subsets
        let mut power = OracleElement::zero();
        let factorial: i64 = (1..=av as i64).product();
        for subset in combinations(out_arcs.len(), av as usize) {
            let mut po = PartialOrientation::empty(m);
            for &i in &subset {
                po = po.with_arc(out_arcs[i]).expect("distinct edges");
            }
            power.add_term(po, factorial);
        }
        acc = multiply(&acc, &power);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next k-combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Quotient variant for [`vanishes_in_quotient`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuotientVariant {
    Central,
    Internal,
}

/// Whether the basis monomial `po` vanishes in the central or internal
/// quotient: some divisor lies in the generating set for some nonempty `S`.
/// A generator for `S` orients every edge incident to `S`, with boundary
/// edges pointing out of `S`; the internal generators drop one arc.
pub fn vanishes_in_quotient(
    g: &MultiGraph,
    variant: QuotientVariant,
    po: &PartialOrientation,
) -> bool {
    let n = g.vertex_count();
    for mask in 1u32..1 << n {
        let s = VertexSubset(mask);
        let mut bad = 0usize;
        for (edge, &(u, v)) in g.edges().iter().enumerate() {
            if !s.contains(u) && !s.contains(v) {
                continue;
            }
            let ok = match po.dir(edge) {
                EdgeDir::Unoriented => false,
                _ if s.contains(u) && s.contains(v) => true, // interior, any way
                EdgeDir::FromFirst => s.contains(u),
                EdgeDir::FromSecond => s.contains(v),
            };
            if !ok {
                bad += 1;
                if bad > 1 {
                    break;
                }
            }
        }
        let vanishes = match variant {
            QuotientVariant::Central => bad == 0,
            QuotientVariant::Internal => bad <= 1,
        };
        if vanishes {
            return true;
        }
    }
    false
}

/// Hilbert function of the bizonotopal algebra through the orientation
/// model: count, per weight, the score vectors realized by a surviving
/// partial orientation. `r` must be 1 (external), 0 (central), or -1
/// (internal).
pub fn subalgebra_hilbert_via_oracle(g: &MultiGraph, r: i64) -> Result<HilbertPolynomial> {
    let variant = match r {
        1 => None,
        0 => Some(QuotientVariant::Central),
        -1 => Some(QuotientVariant::Internal),
        _ => {
            return Err(Error::InvalidGraph(format!(
                "oracle realizations exist for r in {{1,0,-1}}, got {r}"
            )))
        }
    };
    let mut surviving: std::collections::HashSet<ExponentVector> =
        std::collections::HashSet::new();
    for po in enumerate_partial_orientations(g)? {
        let survives = match variant {
            None => true,
            Some(v) => !vanishes_in_quotient(g, v, &po),
        };
        if survives {
            surviving.insert(po.score(g));
        }
    }
    let max_weight = g.edge_count();
    let mut coeffs = vec![0u64; max_weight + 1];
    for a in surviving {
        coeffs[a.iter().sum::<u32>() as usize] += 1;
    }
    Ok(HilbertPolynomial::from_u64(&coeffs))
}

/// The degree -1 derivation toward `G - e`: on a basis monomial, the arc of
/// `e` out of the first endpoint contributes with sign +, the reversed arc
/// with sign -, and monomials not using `e` map to zero. The result lives
/// over the edge list of `G - e`.
pub fn delta_derivation(
    g: &MultiGraph,
    edge: usize,
    x: &OracleElement,
) -> Result<OracleElement> {
    if g.is_loop(edge)? {
        return Err(Error::LoopEdge(edge));
    }
    let mut out = OracleElement::zero();
    for (po, c) in x.terms() {
        let sign = match po.dir(edge) {
            EdgeDir::Unoriented => continue,
            EdgeDir::FromFirst => 1,
            EdgeDir::FromSecond => -1,
        };
        let mut dirs = po.dirs.clone();
        dirs.remove(edge);
        out.add_term(PartialOrientation { dirs }, sign * c);
    }
    Ok(out)
}

/// Exhaustive orientation census for one score vector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ScoreBucket {
    /// Partial orientations realizing the score.
    pub orientations: u64,
    /// Those without directed cycles among non-loop arcs.
    pub acyclic: u64,
    /// Those orienting every edge.
    pub total: u64,
}

/// Bucket every partial orientation by its score vector.
pub fn bucket_by_score(g: &MultiGraph) -> Result<HashMap<ExponentVector, ScoreBucket>> {
    let mut buckets: HashMap<ExponentVector, ScoreBucket> = HashMap::new();
    for po in enumerate_partial_orientations(g)? {
        let bucket = buckets.entry(po.score(g)).or_default();
        bucket.orientations += 1;
        if po.is_acyclic(g) {
            bucket.acyclic += 1;
        }
        if po.is_total() {
            bucket.total += 1;
        }
    }
    Ok(buckets)
}

/// Verify the short exact sequence at a non-loop edge `e`: per degree `k`,
/// `dim(B_G)_k = dim(B_{G/e})_k + dim(B_{G-e})_{k-1}`, and the derivation
/// maps the degree-`k` basis onto a spanning set of `(B_{G-e})_{k-1}` whose
/// kernel has dimension `dim(B_{G/e})_k`.
pub fn verify_ses(g: &MultiGraph, edge: usize) -> Result<bool> {
    if g.is_loop(edge)? {
        return Err(Error::LoopEdge(edge));
    }
    let contracted = g.loopy_contract(edge)?;
    let deleted = g.delete_edge(edge)?;
    let h_g = subalgebra_hilbert_via_oracle(g, 1)?;
    let h_con = subalgebra_hilbert_via_oracle(&contracted, 1)?;
    let h_del = subalgebra_hilbert_via_oracle(&deleted, 1)?;
    if h_g != h_con.add(&h_del.shifted(1)) {
        return Ok(false);
    }

    // rank check of the derivation, degree by degree
    let basis: Vec<ExponentVector> = bucket_by_score(g)?.into_keys().collect();
    let deleted_pos = enumerate_partial_orientations(&deleted)?;
    let index: HashMap<&PartialOrientation, usize> =
        deleted_pos.iter().enumerate().map(|(i, po)| (po, i)).collect();
    let max_deg = h_g.top_degree().unwrap_or(0);
    for k in 0..=max_deg {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for a in basis.iter().filter(|a| a.iter().sum::<u32>() as usize == k) {
            let image = delta_derivation(g, edge, &y_power(g, a)?)?;
            let mut row = vec![BigInt::zero(); deleted_pos.len()];
            for (po, c) in image.terms() {
                row[index[po]] = BigInt::from(c);
            }
            rows.push(row);
        }
        let rank = integer_matrix_rank(rows.clone());
        let expect_rank = if k == 0 {
            0
        } else {
            biguint_to_usize(&h_del.coeff(k - 1))
        };
        let nullity = rows.len() - rank;
        if rank != expect_rank || nullity != biguint_to_usize(&h_con.coeff(k)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn biguint_to_usize(x: &num_bigint::BigUint) -> usize {
    use num_traits::ToPrimitive;
    x.to_usize().expect("dimension fits usize")
}

/// Rank of an integer matrix by exact fraction-free elimination.
fn integer_matrix_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let p = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            let scale = p[col].clone();
            for j in col..cols {
                row[j] = &row[j] * &scale - &p[j] * &factor;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn k(n: usize) -> MultiGraph {
        MultiGraph::family("complete", n).unwrap()
    }

    #[test]
    fn orientation_counts() {
        assert_eq!(enumerate_partial_orientations(&k(2)).unwrap().len(), 3);
        let l1 = MultiGraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(enumerate_partial_orientations(&l1).unwrap().len(), 2);
        assert_eq!(enumerate_partial_orientations(&k(3)).unwrap().len(), 27);
        // 2^loops * 3^(m - loops) in general
        let g = MultiGraph::new(3, vec![(0, 1), (1, 1), (2, 2), (0, 2)]).unwrap();
        assert_eq!(enumerate_partial_orientations(&g).unwrap().len(), 4 * 9);
    }

    #[test]
    fn multiply_relations() {
        let k2 = k(2);
        let m = k2.edge_count();
        let fwd = OracleElement::monomial(
            PartialOrientation::empty(m)
                .with_arc(Arc { edge: 0, from_second: false })
                .unwrap(),
            1,
        );
        let bwd = OracleElement::monomial(
            PartialOrientation::empty(m)
                .with_arc(Arc { edge: 0, from_second: true })
                .unwrap(),
            1,
        );
        assert!(multiply(&fwd, &bwd).is_zero());
        assert!(multiply(&fwd, &fwd).is_zero());
        let id = OracleElement::identity(m);
        assert_eq!(multiply(&id, &fwd), fwd);

        // disjoint single arcs multiply to their union
        let g = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let a = OracleElement::monomial(
            PartialOrientation::empty(2)
                .with_arc(Arc { edge: 0, from_second: false })
                .unwrap(),
            1,
        );
        let b = OracleElement::monomial(
            PartialOrientation::empty(2)
                .with_arc(Arc { edge: 1, from_second: true })
                .unwrap(),
            1,
        );
        let prod = multiply(&a, &b);
        assert_eq!(prod.terms().count(), 1);
        let (po, c) = prod.terms().next().unwrap();
        assert_eq!(c, 1);
        assert_eq!(po.arc_count(), 2);
        assert_eq!(po.score(&g), vec![1, 0, 0, 1]);
    }

    #[test]
    fn y_power_basics() {
        let k2 = k(2);
        let single = y_power(&k2, &[1, 0]).unwrap();
        assert_eq!(single.terms().count(), 1);
        assert_eq!(single.terms().next().unwrap().1, 1);
        assert!(y_power(&k2, &[1, 1]).unwrap().is_zero());
        assert!(!y_power(&k(3), &[2, 1, 0]).unwrap().is_zero());
    }

    #[test]
    fn y_power_nonzero_iff_basis_monomial() {
        let gs = [
            k(3),
            MultiGraph::new(3, vec![(0, 1), (1, 2), (1, 1)]).unwrap(),
            MultiGraph::new(2, vec![(0, 1), (0, 1), (0, 0)]).unwrap(),
        ];
        for g in gs {
            let n = g.vertex_count();
            let bounds: Vec<u32> = (0..n).map(|v| g.kappa_vertex(v) as u32 + 1).collect();
            let mut a = vec![0u32; n];
            loop {
                assert_eq!(
                    !y_power(&g, &a).unwrap().is_zero(),
                    crate::counting::is_basis_monomial(&g, 1, &a).unwrap(),
                    "g={g} a={a:?}"
                );
                let mut v = 0;
                while v < n && a[v] == bounds[v] {
                    a[v] = 0;
                    v += 1;
                }
                if v == n {
                    break;
                }
                a[v] += 1;
            }
        }
    }

    #[test]
    fn distinct_y_powers_have_disjoint_supports() {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (0, 2), (1, 1)]).unwrap();
        let buckets = bucket_by_score(&g).unwrap();
        let mut seen: HashMap<PartialOrientation, ExponentVector> = HashMap::new();
        for a in buckets.keys() {
            let e = y_power(&g, a).unwrap();
            for (po, c) in e.terms() {
                assert!(c > 0);
                assert!(seen.insert(po.clone(), a.clone()).is_none());
            }
        }
    }

    #[test]
    fn quotient_vanishing_examples() {
        let l1 = MultiGraph::new(1, vec![(0, 0)]).unwrap();
        let oriented_loop = PartialOrientation::empty(1)
            .with_arc(Arc { edge: 0, from_second: false })
            .unwrap();
        assert!(vanishes_in_quotient(&l1, QuotientVariant::Central, &oriented_loop));

        let k2 = k(2);
        let unit = PartialOrientation::empty(1);
        assert!(!vanishes_in_quotient(&k2, QuotientVariant::Central, &unit));
        // internal at r = -delta: every monomial dies, including 1
        assert!(vanishes_in_quotient(&k2, QuotientVariant::Internal, &unit));
    }

    #[test]
    fn oracle_hilbert_matches_tables() {
        assert_eq!(
            subalgebra_hilbert_via_oracle(&k(3), 1).unwrap(),
            HilbertPolynomial::from_u64(&[1, 3, 6, 7])
        );
        assert_eq!(
            subalgebra_hilbert_via_oracle(&k(3), 0).unwrap(),
            HilbertPolynomial::from_u64(&[1, 3, 3])
        );
        assert_eq!(
            subalgebra_hilbert_via_oracle(&k(4), -1).unwrap(),
            HilbertPolynomial::from_u64(&[1, 4, 6, 4, 1])
        );
    }

    #[test]
    fn derivation_is_a_derivation() {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let a = y_power(&g, &[1, 0, 0]).unwrap();
        let b = y_power(&g, &[0, 1, 1]).unwrap();
        for edge in 0..3 {
            let lhs = delta_derivation(&g, edge, &multiply(&a, &b)).unwrap();
            let rhs = multiply_shifted_pair(&g, edge, &a, &b);
            assert_eq!(lhs, rhs, "edge {edge}");
        }
        // delta of an unoriented-e monomial is zero
        let unit = OracleElement::identity(3);
        assert!(delta_derivation(&g, 0, &unit).unwrap().is_zero());
    }

    /// `delta(a) * rho(b) + rho(a) * delta(b)` computed in `G - e`.
    fn multiply_shifted_pair(
        g: &MultiGraph,
        edge: usize,
        a: &OracleElement,
        b: &OracleElement,
    ) -> OracleElement {
        let rho = |x: &OracleElement| {
            let mut out = OracleElement::zero();
            for (po, c) in x.terms() {
                if po.dir(edge) == EdgeDir::Unoriented {
                    let mut dirs = po.dirs().to_vec();
                    dirs.remove(edge);
                    out.add_term(PartialOrientation { dirs }, c);
                }
            }
            out
        };
        let da = delta_derivation(g, edge, a).unwrap();
        let db = delta_derivation(g, edge, b).unwrap();
        multiply(&da, &rho(b)).add(&multiply(&rho(a), &db))
    }

    #[test]
    fn ses_small_graphs() {
        assert!(verify_ses(&k(2), 0).unwrap());
        assert!(verify_ses(&k(3), 1).unwrap());
        let dbl = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(verify_ses(&dbl, 0).unwrap());
        assert!(verify_ses(&dbl, 1).unwrap());
    }

    #[test]
    fn buckets_k2_and_forest_counts() {
        let buckets = bucket_by_score(&k(2)).unwrap();
        assert_eq!(buckets.len(), 3);
        assert_eq!(buckets[&vec![0, 0]].orientations, 1);
        assert_eq!(buckets[&vec![1, 0]].orientations, 1);
        assert_eq!(buckets[&vec![0, 1]].orientations, 1);

        for g in [k(3), k(4)] {
            let buckets = bucket_by_score(&g).unwrap();
            let total_scores = buckets.values().filter(|b| b.total > 0).count();
            assert_eq!(
                total_scores as u64,
                g.spanning_forest_total().unwrap().to_u64().unwrap()
            );
        }
    }
}
