//! Undirected multigraphs with loops, the subset-degree function `kappa`,
//! graph surgeries, canonical forms, and spanning-structure counts.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A subset of the vertex range `0..n`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct VertexSubset(pub u32);

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    pub fn singleton(v: usize) -> VertexSubset {
        VertexSubset(1 << v)
    }

    pub fn full(n: usize) -> VertexSubset {
        VertexSubset(((1u64 << n) - 1) as u32)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSubset {
        let mut mask = 0u32;
        for v in vs {
            mask |= 1 << v;
        }
        VertexSubset(mask)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 != 0
    }

    pub fn insert(self, v: usize) -> VertexSubset {
        VertexSubset(self.0 | 1 << v)
    }

    pub fn remove(self, v: usize) -> VertexSubset {
        VertexSubset(self.0 & !(1 << v))
    }

    pub fn union(self, other: VertexSubset) -> VertexSubset {
        VertexSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSubset) -> VertexSubset {
        VertexSubset(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: VertexSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let v = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(v)
            }
        })
    }
}

/// Isomorphism-class key for a [`MultiGraph`]: a canonical serialization of
/// the adjacency matrix with loop counts on the diagonal. Two graphs have
/// equal forms iff they are isomorphic as multigraphs with loops.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

/// A finite undirected multigraph. Vertices are `0..n`; edges are unordered
/// pairs stored as a flat list, with `u == v` for loops and repetition for
/// multiplicity. All derived quantities are invariant under permuting the
/// edge list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={} [", self.n, self.edges.len())?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<MultiGraph> {
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
        }
        Ok(MultiGraph { n, edges })
    }

    pub fn empty(n: usize) -> MultiGraph {
        MultiGraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<(usize, usize)> {
        self.edges.get(i).copied().ok_or(Error::InvalidEdge(i))
    }

    pub fn is_loop(&self, i: usize) -> Result<bool> {
        let (u, v) = self.edge(i)?;
        Ok(u == v)
    }

    /// Number of loops at `v`.
    pub fn loops_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    /// Total number of loops.
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == b).count()
    }

    /// Number of non-loop edges incident to `v`.
    pub fn nonloop_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a != b && (a == v || b == v))
            .count()
    }

    /// `kappa_v = d(v) + l(v)`: edges incident to `v`, loops counted once.
    pub fn kappa_vertex(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Subset degree `kappa_S`: the number of edges with at least one
    /// endpoint in `s`, each loop counted once.
    pub fn kappa(&self, s: VertexSubset) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| s.contains(a) || s.contains(b))
            .count()
    }

    /// `kappa` for every subset of the vertex range, indexed by bitmask.
    pub fn kappa_table(&self) -> Vec<u32> {
        let mut table = vec![0u32; 1 << self.n];
        for &(u, v) in &self.edges {
            let inc = (1u32 << u) | (1u32 << v);
            // each edge contributes to exactly the masks meeting its endpoints
            for (mask, entry) in table.iter_mut().enumerate() {
                if mask as u32 & inc != 0 {
                    *entry += 1;
                }
            }
        }
        table
    }

    /// `delta_G = min_v kappa_v`; `None` for the empty graph.
    pub fn delta(&self) -> Option<usize> {
        (0..self.n).map(|v| self.kappa_vertex(v)).min()
    }

    /// Multiplicity of non-loop edges between `u` and `v`, or loops if `u == v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .count()
    }

    pub fn delete_edge(&self, i: usize) -> Result<MultiGraph> {
        self.edge(i)?;
        let mut edges = self.edges.clone();
        edges.remove(i);
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Identify the endpoints of a non-loop edge without deleting anything:
    /// the edge and all its parallel copies become loops at the merged vertex.
    pub fn loopy_contract(&self, i: usize) -> Result<MultiGraph> {
        let (p, q) = self.edge(i)?;
        if p == q {
            return Err(Error::LoopEdge(i));
        }
        let (keep, drop) = (p.min(q), p.max(q));
        let map = |v: usize| {
            if v == drop {
                keep
            } else if v > drop {
                v - 1
            } else {
                v
            }
        };
        let edges = self.edges.iter().map(|&(u, v)| (map(u), map(v))).collect();
        Ok(MultiGraph { n: self.n - 1, edges })
    }

    /// Add an apex joined to every vertex and replace each loop by an extra
    /// apex edge. The apex is the new vertex `n`; the result is loopless.
    pub fn delooped_cone(&self) -> MultiGraph {
        let apex = self.n;
        let mut edges = Vec::with_capacity(self.edges.len() + self.n);
        for &(u, v) in &self.edges {
            if u == v {
                edges.push((u, apex));
            } else {
                edges.push((u, v));
            }
        }
        for v in 0..self.n {
            edges.push((v, apex));
        }
        MultiGraph { n: self.n + 1, edges }
    }

    pub fn permute(&self, perm: &[usize]) -> Result<MultiGraph> {
        if perm.len() != self.n {
            return Err(Error::NotAPermutation);
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::NotAPermutation);
            }
            seen[p] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Ok(MultiGraph { n: self.n, edges })
    }

    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        MultiGraph { n: self.n + other.n, edges }
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        self.component_vertex_sets().len() <= 1
    }

    /// Vertex sets of connected components (isolated vertices are their own
    /// components), each as a sorted list.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        comps.sort();
        comps
    }

    /// Subgraph induced by `vertices` (which must be closed under edges for
    /// the edge set to be preserved meaningfully); vertices are relabeled in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> MultiGraph {
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
            .map(|&(u, v)| (map[u], map[v]))
            .collect();
        MultiGraph { n: vertices.len(), edges }
    }

    /// Connected components as standalone graphs.
    pub fn components(&self) -> Vec<MultiGraph> {
        self.component_vertex_sets()
            .iter()
            .map(|vs| self.induced(vs))
            .collect()
    }

    /// Minimum edge cut size over nonempty proper vertex subsets
    /// (0 for disconnected graphs; `None` when `n < 2`).
    pub fn edge_connectivity(&self) -> Option<usize> {
        if self.n < 2 {
            return None;
        }
        let mut best = usize::MAX;
        for mask in 1..(1u32 << self.n) - 1 {
            let s = VertexSubset(mask);
            let cut = self
                .edges
                .iter()
                .filter(|&&(u, v)| s.contains(u) != s.contains(v))
                .count();
            best = best.min(cut);
        }
        Some(best)
    }

    /// True if the graph is loopless and every vertex has non-loop degree `k`.
    pub fn is_regular(&self, k: usize) -> bool {
        self.loop_count() == 0 && (0..self.n).all(|v| self.nonloop_degree(v) == k)
    }

    /// Exact number of spanning trees via an integer-preserving determinant
    /// of the reduced Laplacian. Loops are ignored; multiplicities count.
    pub fn spanning_tree_count(&self) -> BigUint {
        if self.n <= 1 {
            return BigUint::one();
        }
        let m = self.n - 1;
        let mut lap = vec![vec![BigInt::zero(); m]; m];
        for &(u, v) in &self.edges {
            if u == v {
                continue;
            }
            if u < m {
                lap[u][u] += 1;
            }
            if v < m {
                lap[v][v] += 1;
            }
            if u < m && v < m {
                lap[u][v] -= 1;
                lap[v][u] -= 1;
            }
        }
        let det = bareiss_determinant(&mut lap);
        if det.is_negative() {
            // the Laplacian minor determinant is nonnegative by Matrix-Tree
            unreachable!("negative spanning tree determinant");
        }
        det.to_biguint().unwrap()
    }

    /// Spanning-forest counts by number of components: entry `k` is the
    /// number of spanning forests with exactly `k` components. Computed by
    /// deletion-contraction on the edge set.
    pub fn spanning_forest_counts(&self) -> Result<Vec<BigUint>> {
        if self.edges.len() > 25 {
            return Err(Error::BudgetExceeded(format!(
                "spanning_forest_counts limited to 25 edges, got {}",
                self.edges.len()
            )));
        }
        let by_size = forest_size_poly(self);
        // a forest with j edges spans n - j components
        let mut out = vec![BigUint::zero(); self.n + 1];
        for (j, c) in by_size.into_iter().enumerate() {
            if self.n == 0 {
                out[0] = c;
            } else {
                out[self.n - j] = c;
            }
        }
        Ok(out)
    }

    /// Total number of spanning forests.
    pub fn spanning_forest_total(&self) -> Result<BigUint> {
        Ok(self.spanning_forest_counts()?.into_iter().sum())
    }

    /// Named graph families. `petersen` ignores `n`.
    pub fn family(name: &str, n: usize) -> Result<MultiGraph> {
        match name {
            "complete" => {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Ok(MultiGraph { n, edges })
            }
            "loops" => Ok(MultiGraph { n: 1, edges: vec![(0, 0); n] }),
            "cycle" => {
                if n == 0 {
                    return Err(Error::InvalidGraph("cycle needs n >= 1".into()));
                }
                let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Ok(MultiGraph { n, edges })
            }
            "path" => {
                if n == 0 {
                    return Err(Error::InvalidGraph("path needs n >= 1".into()));
                }
                let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                Ok(MultiGraph { n, edges })
            }
            "petersen" => {
                let mut edges: Vec<(usize, usize)> =
                    (0..5).map(|i| (i, (i + 1) % 5)).collect();
                edges.extend((0..5).map(|i| (i, i + 5)));
                edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
                Ok(MultiGraph { n: 10, edges })
            }
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    /// Canonical form: vertex-class refinement followed by a pruned search
    /// over class-compatible orderings, taking the lexicographically minimal
    /// adjacency-plus-loops serialization.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        if self.n > 12 {
            return Err(Error::BudgetExceeded(format!(
                "canonical_form limited to 12 vertices, got {}",
                self.n
            )));
        }
        if self.n == 0 {
            return Ok(CanonicalForm(vec![0]));
        }
        let classes = self.refine_classes();
        let mut search = CanonSearch {
            g: self,
            classes: &classes,
            placed: Vec::with_capacity(self.n),
            used: vec![false; self.n],
            current: Vec::new(),
            best: None,
        };
        search.run();
        let mut bytes = vec![self.n as u8];
        bytes.extend(search.best.expect("canonical search found no ordering"));
        Ok(CanonicalForm(bytes))
    }

    /// Iterated neighborhood refinement; returns a class index per vertex,
    /// with class indices ordered by an isomorphism-invariant key.
    fn refine_classes(&self) -> Vec<usize> {
        // initial key: (loop count, non-loop degree)
        let mut class: Vec<usize> = {
            let keys: Vec<(usize, usize)> = (0..self.n)
                .map(|v| (self.loops_at(v), self.nonloop_degree(v)))
                .collect();
            rank_by_key(&keys)
        };
        loop {
            let keys: Vec<(usize, Vec<(usize, usize)>)> = (0..self.n)
                .map(|v| {
                    let mut nbrs: Vec<(usize, usize)> = Vec::new();
                    for &(a, b) in &self.edges {
                        if a == b {
                            continue;
                        }
                        if a == v {
                            nbrs.push((class[b], 1));
                        } else if b == v {
                            nbrs.push((class[a], 1));
                        }
                    }
                    nbrs.sort();
                    (class[v], nbrs)
                })
                .collect();
            let next = rank_by_key(&keys);
            if next == class {
                return class;
            }
            class = next;
        }
    }
}

/// Dense ranks of a key vector: equal keys share a rank, ranks ordered by key.
fn rank_by_key<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap())
        .collect()
}

struct CanonSearch<'a> {
    g: &'a MultiGraph,
    classes: &'a [usize],
    placed: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl CanonSearch<'_> {
    fn run(&mut self) {
        self.step();
    }

    fn step(&mut self) {
        let n = self.g.vertex_count();
        if self.placed.len() == n {
            match &self.best {
                Some(b) if *b <= self.current => {}
                _ => self.best = Some(self.current.clone()),
            }
            return;
        }
        // orderings must list classes in their canonical order
        let min_class = (0..n)
            .filter(|&v| !self.used[v])
            .map(|v| self.classes[v])
            .min()
            .unwrap();
        let mut tried_rows: Vec<(Vec<u8>, usize)> = Vec::new();
        'cand: for v in 0..n {
            if self.used[v] || self.classes[v] != min_class {
                continue;
            }
            let mut row: Vec<u8> = Vec::with_capacity(self.placed.len() + 1);
            row.push(self.g.loops_at(v) as u8);
            for &u in &self.placed {
                row.push(self.g.multiplicity(v, u) as u8);
            }
            // skip vertices interchangeable with one already tried here
            for (r, w) in &tried_rows {
                if *r == row && self.twins(v, *w) {
                    continue 'cand;
                }
            }
            tried_rows.push((row.clone(), v));
            let len_before = self.current.len();
            self.current.extend_from_slice(&row);
            let prune = match &self.best {
                Some(b) => self.current.as_slice() > &b[..self.current.len().min(b.len())],
                None => false,
            };
            if !prune {
                self.used[v] = true;
                self.placed.push(v);
                self.step();
                self.placed.pop();
                self.used[v] = false;
            }
            self.current.truncate(len_before);
        }
    }

    /// Swapping `a` and `b` is an automorphism.
    fn twins(&self, a: usize, b: usize) -> bool {
        if self.g.loops_at(a) != self.g.loops_at(b) {
            return false;
        }
        (0..self.g.vertex_count())
            .filter(|&x| x != a && x != b)
            .all(|x| self.g.multiplicity(a, x) == self.g.multiplicity(b, x))
    }
}

/// Fraction-free (Bareiss) determinant; consumes the matrix.
fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Number of acyclic edge subsets (forests) by size: coefficient `j` counts
/// forests with `j` edges. Deletion-contraction with loops dropped on
/// contraction.
fn forest_size_poly(g: &MultiGraph) -> Vec<BigUint> {
    match (0..g.edge_count()).find(|&i| !g.is_loop(i).unwrap()) {
        None => vec![BigUint::one()],
        Some(i) => {
            let del = forest_size_poly(&g.delete_edge(i).unwrap());
            // contract = loopy contract, then drop the resulting loop copy of e
            let con_graph = g
                .loopy_contract(i)
                .unwrap()
                .delete_edge(i)
                .unwrap();
            let con = forest_size_poly(&con_graph);
            let mut out = vec![BigUint::zero(); del.len().max(con.len() + 1)];
            for (j, c) in del.into_iter().enumerate() {
                out[j] += c;
            }
            for (j, c) in con.into_iter().enumerate() {
                out[j + 1] += c;
            }
            while out.len() > 1 && out.last().unwrap().is_zero() {
                out.pop();
            }
            out
        }
    }
}
