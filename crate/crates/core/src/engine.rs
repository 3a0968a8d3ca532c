//! Subset dynamic programming for cycle polynomials.
//!
//! Two stages: a table of block weights over every vertex subset
//! (Held-Karp path counting anchored at the subset minimum), then a memoized
//! recursion on the set of uncovered vertices that always covers the lowest
//! uncovered vertex next.

use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, ones, LabeledGraph};
use crate::oracle::env_max_n;
use crate::poly::CyclePolynomial;

pub const DEFAULT_ENGINE_MAX_N: usize = 22;

/// Hard ceiling independent of configuration: subset masks are `u32`
/// indices and every coefficient is at most `n!`, which fits `u128` here.
pub const ENGINE_HARD_MAX_N: usize = 30;

/// Largest order for which path counts fit in `u64` (at most `20!`).
const U64_PATH_MAX_N: usize = 22;

/// Above this order anchors are processed one at a time to bound memory.
const PARALLEL_ANCHOR_MAX_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub max_n: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { max_n: DEFAULT_ENGINE_MAX_N }
    }
}

impl EngineConfig {
    /// Default guard, overridden by `CYCLECOUNT_MAX_N` when set.
    pub fn from_env() -> Self {
        EngineConfig { max_n: env_max_n().unwrap_or(DEFAULT_ENGINE_MAX_N) }
    }

    fn check(&self, n: usize) -> Result<()> {
        let limit = self.max_n.min(ENGINE_HARD_MAX_N);
        if n > limit {
            return Err(Error::ResourceGuard { what: "subset-DP engine", n, limit });
        }
        Ok(())
    }
}

/// Block weight of every vertex subset, indexed by bit mask.
///
/// Closure convention: for `S` with minimum `a` and `|S| >= 2`, `weight(S)`
/// is the number of directed paths that start at `a`, visit `S` exactly
/// once and end at a neighbour of `a`. For `|S| = 2` that is 1 per edge;
/// for `|S| >= 3` each directed Hamiltonian cycle of `G[S]` is counted once.
#[derive(Clone, Debug)]
pub struct BlockWeightTable {
    n: usize,
    weights: Vec<u128>,
}

impl BlockWeightTable {
    pub fn build(g: &LabeledGraph) -> Result<Self> {
        Self::build_with(g, &EngineConfig::from_env())
    }

    pub fn build_with(g: &LabeledGraph, config: &EngineConfig) -> Result<Self> {
        let n = g.n();
        config.check(n)?;
        let mut weights = vec![0u128; 1usize << n];
        let per_anchor = |a: usize| -> Vec<(usize, u128)> {
            if n <= U64_PATH_MAX_N {
                anchor_weights::<u64>(g, a)
            } else {
                anchor_weights::<u128>(g, a)
            }
        };
        let results: Vec<Vec<(usize, u128)>> = if n <= PARALLEL_ANCHOR_MAX_N {
            (0..n).into_par_iter().map(per_anchor).collect()
        } else {
            (0..n).map(per_anchor).collect()
        };
        for (a, list) in results.into_iter().enumerate() {
            weights[1usize << a] = 1;
            for (mask, w) in list {
                weights[mask] = w;
            }
        }
        Ok(BlockWeightTable { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight of `mask` (bit `i` = vertex `i + 1`); zero for the empty set.
    pub fn weight(&self, mask: u64) -> u128 {
        self.weights[mask as usize]
    }

    pub fn weight_big(&self, mask: u64) -> BigUint {
        BigUint::from(self.weight(mask))
    }

    /// Number of subsets with nonzero weight.
    pub fn support_size(&self) -> usize {
        self.weights.iter().filter(|w| **w != 0).count()
    }
}

/// Path counters: `u64` suffices up to `U64_PATH_MAX_N` vertices.
trait Counter: Copy + Zero + AddAssign + Into<u128> + Send {
    fn one() -> Self;
}

impl Counter for u64 {
    fn one() -> Self {
        1
    }
}

impl Counter for u128 {
    fn one() -> Self {
        1
    }
}

/// Weights of all subsets with minimum `a` and size at least 2.
fn anchor_weights<T: Counter>(g: &LabeledGraph, a: usize) -> Vec<(usize, u128)> {
    let n = g.n();
    let above: Vec<usize> = (a + 1..n).collect();
    let m = above.len();
    if m == 0 {
        return Vec::new();
    }
    // local index i <-> vertex a + 1 + i
    let adj: Vec<u32> = above.iter().map(|&v| (g.adjacency(v) >> (a + 1)) as u32 & low_mask(m) as u32).collect();
    let anchor_adj = (g.adjacency(a) >> (a + 1)) as u32 & low_mask(m) as u32;
    // dp[mask * m + j]: directed paths from the anchor through exactly `mask`, ending at j
    let mut dp = vec![T::zero(); (1usize << m) * m];
    for j in ones(u64::from(anchor_adj)) {
        dp[(1usize << j) * m + j] = T::one();
    }
    let mut out = Vec::new();
    for mask in 1usize..(1usize << m) {
        let mut closed = 0u128;
        let mut any = false;
        for j in ones(mask as u64) {
            let cur = dp[mask * m + j];
            if cur.is_zero() {
                continue;
            }
            any = true;
            if anchor_adj & (1 << j) != 0 {
                closed += cur.into();
            }
            let ext = adj[j] & !(mask as u32);
            for k in ones(u64::from(ext)) {
                let next = mask | (1usize << k);
                dp[next * m + k] += cur;
            }
        }
        if any && closed != 0 {
            out.push(((mask << (a + 1)) | (1usize << a), closed));
        }
    }
    out
}

/// Exact cycle polynomial of `g` with its restricted prefix.
pub fn cycle_polynomial(g: &LabeledGraph) -> Result<CyclePolynomial> {
    cycle_polynomial_with(g, &EngineConfig::from_env())
}

pub fn cycle_polynomial_with(g: &LabeledGraph, config: &EngineConfig) -> Result<CyclePolynomial> {
    let table = BlockWeightTable::build_with(g, config)?;
    Ok(polynomial_from_table(g, &table))
}

/// `C_r(G, 1)`.
pub fn total_partitions(g: &LabeledGraph) -> Result<BigUint> {
    Ok(cycle_polynomial(g)?.total())
}

/// Memoized recursion over uncovered sets; see the module docs.
pub fn polynomial_from_table(g: &LabeledGraph, table: &BlockWeightTable) -> CyclePolynomial {
    assert_eq!(g.n(), table.n(), "table built for a different graph");
    let n = g.n();
    let restricted = g.restricted_mask();
    // admissible blocks grouped by their minimum vertex
    let mut blocks: Vec<Vec<(u64, u128)>> = vec![Vec::new(); n];
    for (mask, &w) in table.weights.iter().enumerate() {
        let mask = mask as u64;
        if w != 0 && (mask & restricted).count_ones() <= 1 {
            blocks[mask.trailing_zeros() as usize].push((mask, w));
        }
    }
    let mut memo = Memo { table, restricted, blocks, entries: vec![None; 1usize << n] };
    let coeffs = memo.solve(g.all_mask()).to_vec();
    CyclePolynomial::from_u128s(&coeffs)
}

struct Memo<'a> {
    table: &'a BlockWeightTable,
    restricted: u64,
    blocks: Vec<Vec<(u64, u128)>>,
    /// `entries[U][k]`: weighted covers of `U` by `k` blocks, `k <= |U|`.
    entries: Vec<Option<Box<[u128]>>>,
}

impl Memo<'_> {
    fn solve(&mut self, uncovered: u64) -> &[u128] {
        let idx = uncovered as usize;
        if self.entries[idx].is_none() {
            let value = self.compute(uncovered);
            self.entries[idx] = Some(value);
        }
        self.entries[idx].as_deref().unwrap()
    }

    fn compute(&mut self, uncovered: u64) -> Box<[u128]> {
        let size = uncovered.count_ones() as usize;
        let mut out = vec![0u128; size + 1];
        if uncovered == 0 {
            out[0] = 1;
            return out.into_boxed_slice();
        }
        let v = uncovered.trailing_zeros() as usize;
        let rest = uncovered & !bit(v);
        let candidates: Vec<(u64, u128)> = if self.blocks[v].len() <= 1usize << rest.count_ones() {
            self.blocks[v].iter().copied().filter(|&(b, _)| b & !uncovered == 0).collect()
        } else {
            let mut list = Vec::new();
            let mut sub = rest;
            loop {
                let b = sub | bit(v);
                let w = self.table.weight(b);
                if w != 0 && (b & self.restricted).count_ones() <= 1 {
                    list.push((b, w));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            list
        };
        for (b, w) in candidates {
            let sub = self.solve(uncovered & !b);
            for (k, &c) in sub.iter().enumerate() {
                if c != 0 {
                    out[k + 1] += w * c;
                }
            }
        }
        out.into_boxed_slice()
    }
}
