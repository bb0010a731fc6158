//! Hilbert functions of the r-bizonotopal algebras by direct enumeration of
//! the monomial basis: exponent vectors `a` with `a(S) <= kappa_S + r - 1`
//! for every nonempty subset `S` of the support of `a`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

/// Exponent vector `a` in `Z_{>=0}^V`: monomial exponents, candidate partial
/// score vectors, parking vectors.
pub type ExponentVector = Vec<u32>;

/// Exact nonnegative-integer coefficient list of a graded algebra's Hilbert
/// function; index is degree. The empty list is the zero algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigUint>,
}

impl HilbertPolynomial {
    pub fn zero() -> HilbertPolynomial {
        HilbertPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> HilbertPolynomial {
        HilbertPolynomial { coeffs: vec![BigUint::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> HilbertPolynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn from_u64(coeffs: &[u64]) -> HilbertPolynomial {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Sum of all coefficients: the dimension of the algebra.
    pub fn dimension(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Index of the last nonzero coefficient; `None` for the zero algebra.
    pub fn top_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigUint> {
        self.coeffs.last()
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: usize) -> HilbertPolynomial {
        if self.is_zero() {
            return HilbertPolynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        HilbertPolynomial { coeffs }
    }

    pub fn add(&self, other: &HilbertPolynomial) -> HilbertPolynomial {
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        HilbertPolynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &HilbertPolynomial) -> HilbertPolynomial {
        if self.is_zero() || other.is_zero() {
            return HilbertPolynomial::zero();
        }
        let mut coeffs =
            vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HilbertPolynomial { coeffs }
    }

    /// `1 + t + ... + t^d`.
    pub fn truncated_geometric(d: usize) -> HilbertPolynomial {
        HilbertPolynomial { coeffs: vec![BigUint::one(); d + 1] }
    }

    /// `(base)^n` for a given base polynomial.
    pub fn pow(base: &HilbertPolynomial, n: usize) -> HilbertPolynomial {
        let mut acc = HilbertPolynomial::one();
        for _ in 0..n {
            acc = acc.mul(base);
        }
        acc
    }
}

/// Smallest admissible `r` for `g`: `-delta_G`. The empty graph admits any `r`.
pub fn min_r(g: &MultiGraph) -> i64 {
    match g.delta() {
        Some(d) => -(d as i64),
        None => i64::MIN,
    }
}

fn check_r(g: &MultiGraph, r: i64) -> Result<()> {
    let min = min_r(g);
    if r < min {
        return Err(Error::RBelowMinusDelta { r, min_r: min });
    }
    Ok(())
}

/// Whether the algebra is zero: some nonempty `S` has `kappa_S + r = 0`,
/// which by monotonicity of `kappa` happens exactly at `r = -delta_G`.
fn is_zero_algebra(g: &MultiGraph, r: i64) -> bool {
    g.vertex_count() > 0 && r == min_r(g)
}

/// Membership of `a` in the monomial basis of `B^(r)_G`: every nonempty
/// subset `S` of the support of `a` satisfies `a(S) <= kappa_S + r - 1`.
/// Subsets meeting zero coordinates are implied by kappa-monotonicity.
pub fn is_basis_monomial(g: &MultiGraph, r: i64, a: &[u32]) -> Result<bool> {
    check_r(g, r)?;
    assert_eq!(a.len(), g.vertex_count());
    if is_zero_algebra(g, r) {
        // the ideal contains the monomial 1; nothing survives
        return Ok(false);
    }
    let support: u32 = a
        .iter()
        .enumerate()
        .filter(|(_, &av)| av > 0)
        .fold(0, |m, (v, _)| m | 1 << v);
    let kap = g.kappa_table();
    // iterate nonempty submasks of the support
    let mut s = support;
    while s != 0 {
        let total: i64 = (0..g.vertex_count())
            .filter(|&v| s >> v & 1 != 0)
            .map(|v| a[v] as i64)
            .sum();
        if total > kap[s as usize] as i64 + r - 1 {
            return Ok(false);
        }
        s = (s - 1) & support;
    }
    Ok(true)
}

/// Direct Hilbert function of `B^(r)_G`: `coeffs[k]` counts basis exponent
/// vectors of weight `k`. DFS over vertices in order with an incremental
/// prefix-sum table; the per-vertex upper bound is exact because unassigned
/// coordinates are still zero.
pub fn hilbert_direct(g: &MultiGraph, r: i64) -> Result<HilbertPolynomial> {
    check_r(g, r)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(HilbertPolynomial::one());
    }
    if is_zero_algebra(g, r) {
        return Ok(HilbertPolynomial::zero());
    }

    // box estimate: product of per-vertex ranges bounds the basis size
    let mut estimate: u128 = 1;
    for v in 0..n {
        let range = (g.kappa_vertex(v) as i64 + r) as u128; // kappa_v + r >= 1 here
        estimate = estimate.saturating_mul(range);
        if estimate > 2_000_000_000 {
            return Err(Error::BudgetExceeded(format!(
                "estimated basis box exceeds 2e9 for n={n}, r={r}"
            )));
        }
    }

    let kap: Vec<i64> = g.kappa_table().into_iter().map(|k| k as i64).collect();
    let full = (1usize << n) - 1;
    let max_degree = (kap[full] + r - 1) as usize;

    // split the enumeration on the first one or two coordinates
    let split = if n >= 4 { 2 } else { n - 1 };
    let mut prefixes: Vec<Vec<i64>> = Vec::new();
    collect_prefixes(&kap, r, split, &mut vec![], &mut prefixes);

    let merged: Vec<u64> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut asum = vec![0i64; 1 << n];
            for (v, &x) in prefix.iter().enumerate() {
                let bit = 1usize << v;
                for m in 0..bit {
                    asum[m | bit] = asum[m] + x;
                }
            }
            let weight: i64 = prefix.iter().sum();
            let mut coeffs = vec![0u64; max_degree + 1];
            if split == n {
                // fully enumerated by the prefix walk (tiny graphs)
                coeffs[weight as usize] += 1;
            } else {
                count_from(split, n, &kap, r, &mut asum, weight as usize, &mut coeffs);
            }
            coeffs
        })
        .reduce(
            || vec![0u64; max_degree + 1],
            |mut acc, c| {
                for (a, b) in acc.iter_mut().zip(c) {
                    *a += b;
                }
                acc
            },
        );

    Ok(HilbertPolynomial::from_coeffs(
        merged.into_iter().map(BigUint::from).collect(),
    ))
}

/// Enumerate admissible assignments of the first `depth` coordinates.
fn collect_prefixes(
    kap: &[i64],
    r: i64,
    depth: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let v = current.len();
    if v == depth {
        out.push(current.clone());
        return;
    }
    let bit = 1usize << v;
    let mut bound = i64::MAX;
    for m in 0..bit {
        let asum: i64 = current
            .iter()
            .enumerate()
            .filter(|(u, _)| m >> u & 1 != 0)
            .map(|(_, &x)| x)
            .sum();
        bound = bound.min(kap[m | bit] + r - 1 - asum);
    }
    for x in 0..=bound.max(-1) {
        current.push(x);
        collect_prefixes(kap, r, depth, current, out);
        current.pop();
    }
}

fn count_from(
    v: usize,
    n: usize,
    kap: &[i64],
    r: i64,
    asum: &mut [i64],
    weight: usize,
    coeffs: &mut [u64],
) {
    let bit = 1usize << v;
    let mut bound = i64::MAX;
    for m in 0..bit {
        let b = kap[m | bit] + r - 1 - asum[m];
        if b < bound {
            bound = b;
        }
    }
    if bound < 0 {
        return;
    }
    if v == n - 1 {
        for x in 0..=bound as usize {
            coeffs[weight + x] += 1;
        }
        return;
    }
    for x in 0..=bound {
        for m in 0..bit {
            asum[m | bit] = asum[m] + x;
        }
        count_from(v + 1, n, kap, r, asum, weight + x as usize, coeffs);
    }
}

/// Top graded component `(degree, dimension)` of `hilbert_direct`.
pub fn top_component(g: &MultiGraph, r: i64) -> Result<(usize, BigUint)> {
    let h = hilbert_direct(g, r)?;
    match h.top_degree() {
        Some(d) => Ok((d, h.coeff(d))),
        None => Err(Error::ZeroAlgebra),
    }
}

/// Closed-form internal Hilbert function for simple regular graphs:
/// `(1+t)^n` when 3-regular, `(1+t+t^2)^n - n t^(2n-1) - t^(2n)` when
/// 4-regular and 4-edge-connected. `None` when no hypothesis matches.
pub fn closed_form_internal_regular(g: &MultiGraph) -> Option<HilbertPolynomial> {
    if !g.is_simple() {
        return None;
    }
    let n = g.vertex_count();
    if g.is_regular(3) && n >= 4 {
        let base = HilbertPolynomial::from_u64(&[1, 1]);
        return Some(HilbertPolynomial::pow(&base, n));
    }
    if g.is_regular(4) && n >= 5 && g.edge_connectivity() >= Some(4) {
        let base = HilbertPolynomial::from_u64(&[1, 1, 1]);
        let mut coeffs: Vec<BigUint> = HilbertPolynomial::pow(&base, n).coeffs().to_vec();
        coeffs[2 * n - 1] -= BigUint::from(n);
        coeffs[2 * n] -= BigUint::one();
        return Some(HilbertPolynomial::from_coeffs(coeffs));
    }
    None
}
