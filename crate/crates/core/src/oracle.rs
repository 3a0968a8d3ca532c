//! Brute-force ground truth: every set partition of the vertex set, each
//! block weighted by its number of directed Hamiltonian cycles.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{bit, ones, LabeledGraph};
use crate::poly::CyclePolynomial;

pub const DEFAULT_ORACLE_MAX_N: usize = 11;

/// Environment variable that overrides the default vertex guards.
pub const MAX_N_ENV: &str = "CYCLECOUNT_MAX_N";

pub(crate) fn env_max_n() -> Option<usize> {
    std::env::var(MAX_N_ENV).ok()?.trim().parse().ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: DEFAULT_ORACLE_MAX_N }
    }
}

impl OracleConfig {
    /// Default guard, overridden by `CYCLECOUNT_MAX_N` when set.
    pub fn from_env() -> Self {
        OracleConfig { max_n: env_max_n().unwrap_or(DEFAULT_ORACLE_MAX_N) }
    }
}

/// Block weight of the vertex set `subset` (bit `i` = vertex `i + 1`):
/// 1 for a singleton, 1 or 0 for a pair depending on adjacency, and the
/// number of directed Hamiltonian cycles of the induced subgraph otherwise.
pub fn count_directed_ham_cycles(g: &LabeledGraph, subset: u64) -> Result<BigUint> {
    if subset == 0 {
        return Err(Error::param("block weight of the empty set is undefined"));
    }
    if subset & !g.all_mask() != 0 {
        return Err(Error::param(format!(
            "subset mask {subset:#x} is not contained in the vertex set of a graph on {} vertices",
            g.n()
        )));
    }
    Ok(BigUint::from(ham_weight(g, subset)))
}

fn ham_weight(g: &LabeledGraph, subset: u64) -> u128 {
    let size = subset.count_ones();
    let anchor = subset.trailing_zeros() as usize;
    match size {
        1 => 1,
        2 => u128::from(g.adjacency(anchor) & subset != 0),
        _ => {
            // fixed start at the smallest vertex; each directed cycle is
            // one path from the anchor plus the closing edge
            let mut count = 0u128;
            extend(g, anchor, anchor, subset & !bit(anchor), &mut count);
            count
        }
    }
}

fn extend(g: &LabeledGraph, anchor: usize, at: usize, left: u64, count: &mut u128) {
    if left == 0 {
        if g.adjacency(at) & bit(anchor) != 0 {
            *count += 1;
        }
        return;
    }
    for next in ones(g.adjacency(at) & left) {
        extend(g, anchor, next, left & !bit(next), count);
    }
}

/// Cycle polynomial by enumeration of restricted growth strings.
pub fn brute_force_polynomial(g: &LabeledGraph) -> Result<CyclePolynomial> {
    brute_force_polynomial_with(g, &OracleConfig::from_env())
}

pub fn brute_force_polynomial_with(g: &LabeledGraph, config: &OracleConfig) -> Result<CyclePolynomial> {
    let n = g.n();
    if n > config.max_n {
        return Err(Error::ResourceGuard { what: "brute-force oracle", n, limit: config.max_n });
    }
    let mut state = Enumeration {
        g,
        restricted: g.restricted_mask(),
        blocks: Vec::with_capacity(n),
        coeffs: vec![0u128; n + 1],
        weights: HashMap::new(),
        overflow: false,
    };
    state.place(0);
    if state.overflow {
        return Err(Error::Arithmetic(format!("coefficient overflow in the oracle at n = {n}")));
    }
    Ok(CyclePolynomial::from_u128s(&state.coeffs))
}

struct Enumeration<'a> {
    g: &'a LabeledGraph,
    restricted: u64,
    blocks: Vec<u64>,
    coeffs: Vec<u128>,
    weights: HashMap<u64, u128>,
    overflow: bool,
}

impl Enumeration<'_> {
    fn place(&mut self, v: usize) {
        let n = self.g.n();
        if v == n {
            self.leaf();
            return;
        }
        let vb = bit(v);
        let unassigned = self.g.all_mask() & !((vb << 1) - 1);
        for i in 0..=self.blocks.len() {
            if i == self.blocks.len() {
                self.blocks.push(vb);
            } else {
                if vb & self.restricted != 0 && self.blocks[i] & self.restricted != 0 {
                    continue;
                }
                self.blocks[i] |= vb;
            }
            if self.feasible(unassigned) {
                self.place(v + 1);
            }
            if i == self.blocks.len() - 1 && self.blocks[i] == vb {
                self.blocks.pop();
            } else {
                self.blocks[i] &= !vb;
            }
        }
    }

    /// Necessary degree condition: in a final block of size 2 every member
    /// has a neighbour inside it, in a block of size at least 3 two.
    fn feasible(&self, unassigned: u64) -> bool {
        self.blocks.iter().all(|&b| {
            let size = b.count_ones();
            if size < 2 {
                return true;
            }
            let need = if size >= 3 { 2 } else { 1 };
            ones(b).all(|u| (self.g.adjacency(u) & (b | unassigned)).count_ones() >= need)
        })
    }

    fn leaf(&mut self) {
        let mut product = 1u128;
        for i in 0..self.blocks.len() {
            let b = self.blocks[i];
            let g = self.g;
            let w = *self.weights.entry(b).or_insert_with(|| ham_weight(g, b));
            if w == 0 {
                return;
            }
            match product.checked_mul(w) {
                Some(p) => product = p,
                None => {
                    self.overflow = true;
                    return;
                }
            }
        }
        let k = self.blocks.len();
        match self.coeffs[k].checked_add(product) {
            Some(c) => self.coeffs[k] = c,
            None => self.overflow = true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, FamilySpec, HubPlacement};

    fn fam(f: Family, r: usize) -> LabeledGraph {
        crate::graph::make_family(FamilySpec::new(f, r)).unwrap()
    }

    fn coeffs(g: &LabeledGraph) -> Vec<u64> {
        brute_force_polynomial_with(g, &OracleConfig::default())
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn hamiltonian_weights() {
        let k3 = fam(Family::Complete(3), 0);
        let k4 = fam(Family::Complete(4), 0);
        let p4 = fam(Family::Path(4), 0);
        assert_eq!(count_directed_ham_cycles(&k3, 0b111).unwrap(), BigUint::from(2u32));
        assert_eq!(count_directed_ham_cycles(&k4, 0b1111).unwrap(), BigUint::from(6u32));
        assert_eq!(count_directed_ham_cycles(&p4, 0b0101).unwrap(), BigUint::from(0u32));
        assert_eq!(count_directed_ham_cycles(&p4, 0b0011).unwrap(), BigUint::from(1u32));
        assert_eq!(count_directed_ham_cycles(&p4, 0b1000).unwrap(), BigUint::from(1u32));
        assert!(matches!(count_directed_ham_cycles(&p4, 0), Err(Error::Parameter(_))));
        assert!(count_directed_ham_cycles(&p4, 0b10000).is_err());
        let w4 = fam(Family::Wheel(4, HubPlacement::First), 0);
        assert_eq!(count_directed_ham_cycles(&w4, 0b11111).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(coeffs(&fam(Family::Complete(4), 1)), [0, 6, 11, 6, 1]);
        assert_eq!(coeffs(&fam(Family::Star(4, HubPlacement::First), 1)), [0, 0, 0, 3, 1]);
        assert_eq!(coeffs(&fam(Family::Path(5), 2)), [0, 0, 0, 1, 3, 1]);
        assert_eq!(coeffs(&fam(Family::Wheel(4, HubPlacement::First), 1)), [0, 8, 18, 18, 8, 1]);
        assert_eq!(coeffs(&fam(Family::Cycle(4), 1)), [0, 2, 2, 4, 1]);
        assert_eq!(coeffs(&fam(Family::Empty(0), 0)), [1]);
        assert_eq!(coeffs(&fam(Family::Empty(3), 3)), [0, 0, 0, 1]);
    }

    #[test]
    fn r_zero_equals_r_one() {
        for f in [Family::Cycle(6), Family::Complete(5), Family::Wheel(5, HubPlacement::First)] {
            assert_eq!(coeffs(&fam(f, 0)), coeffs(&fam(f, 1)));
        }
    }

    #[test]
    fn resource_guard() {
        let g = fam(Family::Path(12), 0);
        let err = brute_force_polynomial_with(&g, &OracleConfig::default()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(brute_force_polynomial_with(&g, &OracleConfig { max_n: 12 }).is_ok());
    }

    #[test]
    fn total_equals_permutations_for_complete() {
        let mut fact = 1u64;
        for n in 1..=8u64 {
            fact *= n;
            let total: u64 = coeffs(&fam(Family::Complete(n as usize), 0)).iter().sum();
            assert_eq!(total, fact);
        }
    }
}
