//! Deterministic graph collections: every named family up to a size bound
//! and seeded Erdős–Rényi graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{Family, HubPlacement, LabeledGraph};

/// A corpus entry: a readable name and the graph with `r = 0`.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: LabeledGraph,
}

/// Random graph on `n` vertices; each edge present with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    LabeledGraph::from_edges(n, &edges, 0).expect("generated edges are valid")
}

/// The `index`-th seeded random graph: order in `min_n..=max_n`, density in `[0.2, 0.8]`.
pub fn seeded_random_graph(index: u64, min_n: usize, max_n: usize) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + index);
    let n = rng.gen_range(min_n..=max_n);
    let p = rng.gen_range(0.2..=0.8);
    random_graph(n, p, rng.gen())
}

/// Sparse seeded graph with order in `1..=10` and density in `[0.05, 0.35]`,
/// so isolated vertices are common.
pub fn sparse_random_graph(index: u64) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a5e_0000 + index);
    let n = rng.gen_range(1..=10);
    let p = rng.gen_range(0.05..=0.35);
    random_graph(n, p, rng.gen())
}

/// Random recursive tree: vertex `i >= 2` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (2..=n).map(|i| (rng.gen_range(1..i), i)).collect();
    LabeledGraph::from_edges(n, &edges, 0).expect("tree edges are valid")
}

/// Every family instance of order at most `max_order`, in a fixed order.
pub fn family_instances(max_order: usize) -> Vec<Family> {
    let mut out = Vec::new();
    let m = max_order;
    for n in 1..=m {
        out.push(Family::Path(n));
        out.push(Family::Complete(n));
        out.push(Family::Star(n, HubPlacement::First));
        out.push(Family::Star(n, HubPlacement::Last));
        out.push(Family::ComplementPath(n));
        if n >= 3 {
            out.push(Family::Cycle(n));
            out.push(Family::ComplementCycle(n));
        }
        if n >= 4 {
            out.push(Family::Wheel(n - 1, HubPlacement::First));
            out.push(Family::Wheel(n - 1, HubPlacement::Last));
        }
        if n >= 2 {
            out.push(Family::Fan(n - 1, HubPlacement::First));
            out.push(Family::Fan(n - 1, HubPlacement::Last));
        }
        if n % 2 == 0 {
            out.push(Family::Barbell(n / 2));
        }
        for a in 1..n {
            let b = n - a;
            if a >= b {
                out.push(Family::DoubleStar(a, b));
            }
            out.push(Family::Lollipop(a, b));
            if a >= 3 {
                out.push(Family::Tadpole(a, b));
            }
            if a <= b {
                out.push(Family::CompleteBipartite(a, b));
            }
        }
    }
    out.push(Family::Empty(0));
    out
}

/// Families of order at most `max_family_order` followed by `random_count`
/// seeded random graphs of order at most `max_random_order`.
pub fn default_corpus(max_family_order: usize, random_count: u64, max_random_order: usize) -> Result<Vec<CorpusGraph>> {
    let mut out = Vec::new();
    for f in family_instances(max_family_order) {
        out.push(CorpusGraph { name: f.to_string(), graph: f.build()? });
    }
    for i in 0..random_count {
        out.push(CorpusGraph { name: format!("random:{i}"), graph: seeded_random_graph(i, 1, max_random_order) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_reproducible() {
        for i in 0..20 {
            let a = seeded_random_graph(i, 1, 8);
            assert_eq!(a, seeded_random_graph(i, 1, 8));
            assert!((1..=8).contains(&a.n()));
        }
        let distinct: std::collections::HashSet<_> = (0..20).map(|i| seeded_random_graph(i, 5, 8).to_json()).collect();
        assert!(distinct.len() > 15);
    }

    #[test]
    fn family_orders_are_bounded() {
        let fams = family_instances(9);
        assert!(fams.iter().all(|f| f.order() <= 9));
        for f in &fams {
            assert_eq!(f.build().unwrap().n(), f.order(), "{f}");
        }
        assert!(fams.contains(&Family::Wheel(4, HubPlacement::First)));
        assert!(fams.contains(&Family::Tadpole(3, 6)));
    }

    #[test]
    fn trees_have_n_minus_one_edges() {
        for seed in 0..20 {
            let t = random_tree(1 + seed as usize % 9, seed);
            assert_eq!(t.edge_count() + 1, t.n());
            assert!(t.is_connected_subset(t.all_mask()));
        }
        assert!((0..50).any(|i| !sparse_random_graph(i).isolated_vertices().is_empty()));
    }

    #[test]
    fn corpus_size() {
        let c = default_corpus(9, 50, 8).unwrap();
        assert_eq!(c.len(), family_instances(9).len() + 50);
    }
}
