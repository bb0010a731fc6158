//! Deterministic test corpora: seeded random multigraphs plus the standard
//! families, shared by the verification suites and the acceptance tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::multigraph::MultiGraph;

/// Seed of the shared random corpus; printed by the verification suites so
/// failures are reproducible.
pub const CORPUS_SEED: u64 = 0x5eed_b120;

/// `count` random multigraphs with up to `max_n` vertices and `max_m`
/// edges, loops and parallel edges included.
pub fn random_corpus(seed: u64, count: usize, max_n: usize, max_m: usize) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(0..=max_m);
            let edges = (0..m)
                .map(|_| {
                    let u = rng.gen_range(0..n);
                    let v = rng.gen_range(0..n);
                    (u.min(v), u.max(v))
                })
                .collect();
            MultiGraph::new(n, edges).unwrap()
        })
        .collect()
}

/// The full corpus: 50 seeded random multigraphs (n <= 6, |E| <= 10),
/// complete graphs up to K_6 and loop graphs up to L_5.
pub fn standard_corpus() -> Vec<MultiGraph> {
    let mut out = random_corpus(CORPUS_SEED, 50, 6, 10);
    for n in 2..=6 {
        out.push(MultiGraph::family("complete", n).unwrap());
    }
    for n in 1..=5 {
        out.push(MultiGraph::family("loops", n).unwrap());
    }
    out
}

/// The corpus restricted to oracle scale (n <= 4, |E| <= 6), with the four
/// worked parking examples appended so they are always covered.
pub fn oracle_corpus() -> Vec<MultiGraph> {
    let mut out: Vec<MultiGraph> = standard_corpus()
        .into_iter()
        .filter(|g| g.vertex_count() <= 4 && g.edge_count() <= 6)
        .collect();
    out.push(MultiGraph::new(2, vec![(0, 1)]).unwrap());
    out.push(MultiGraph::new(2, vec![(1, 1)]).unwrap());
    out.push(MultiGraph::new(2, vec![(0, 1), (1, 1)]).unwrap());
    out.push(MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic() {
        let a = standard_corpus();
        let b = standard_corpus();
        assert_eq!(a.len(), 50 + 5 + 5);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.vertex_count(), y.vertex_count());
            assert_eq!(x.edges(), y.edges());
        }
    }

    #[test]
    fn corpus_respects_size_bounds_and_has_variety() {
        let random = random_corpus(CORPUS_SEED, 50, 6, 10);
        assert!(random.iter().all(|g| g.vertex_count() <= 6 && g.edge_count() <= 10));
        assert!(random.iter().any(|g| g.loop_count() > 0));
        assert!(random
            .iter()
            .any(|g| g.edges().iter().any(|&(u, v)| u != v && g.multiplicity(u, v) > 1)));
        assert!(random.iter().any(|g| !g.is_connected()));
    }

    #[test]
    fn oracle_corpus_fits_budgets() {
        for g in oracle_corpus() {
            assert!(g.vertex_count() <= 4 && g.edge_count() <= 6, "g={g}");
        }
    }
}
