//! Direct enumeration of surface-group representations into a finite group.
//!
//! Counts tuples `(a_1, b_1, …, a_g, b_g, c_1, …, c_s)` with
//! `[a_1, b_1] ⋯ [a_g, b_g] · c_1 ⋯ c_s = 1` and `c_j ∈ λ_j`. The last
//! puncture element is forced by the partial product, so it is checked by
//! membership instead of enumerated; without punctures the partial product
//! must itself be the identity.

use rayon::prelude::*;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Default cap on `n^{2g} · Π|λ_j|`.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// Work estimate `n^{2g} · Π|λ_j|`, saturating.
pub fn count_operations(order: usize, genus: u32, puncture_sizes: &[usize]) -> u128 {
    let mut ops = (order as u128).saturating_pow(2 * genus);
    for &s in puncture_sizes {
        ops = ops.saturating_mul(s as u128);
    }
    ops
}

struct Search<'a> {
    g: &'a FiniteGroup,
    genus: u32,
    punctures: &'a [Vec<usize>],
    last: Option<Vec<bool>>,
}

impl Search<'_> {
    fn count(&self, pair: u32, prefix: usize) -> u64 {
        let g = self.g;
        if pair < self.genus {
            let n = g.order();
            let mut total = 0;
            for a in 0..n {
                for b in 0..n {
                    total += self.count(pair + 1, g.mul(prefix, g.commutator(a, b)));
                }
            }
            return total;
        }
        self.count_punctures(0, prefix)
    }

    fn count_punctures(&self, j: usize, prefix: usize) -> u64 {
        let g = self.g;
        match &self.last {
            None => u64::from(prefix == g.identity()),
            Some(last) if j + 1 == self.punctures.len() => u64::from(last[g.inv(prefix)]),
            Some(_) => self.punctures[j].iter().map(|&c| self.count_punctures(j + 1, g.mul(prefix, c))).sum(),
        }
    }
}

/// Number of representations of the decorated genus `genus` surface group.
/// `punctures` are conjugation-closed subsets in internal numbering.
pub fn brute_force_count(g: &FiniteGroup, genus: u32, punctures: &[Vec<usize>], budget: u128) -> Result<u64> {
    let n = g.order();
    let mut sets = Vec::with_capacity(punctures.len());
    for p in punctures {
        sets.push(g.checked_class_union(p)?);
    }
    let sizes: Vec<usize> = sets.iter().map(Vec::len).collect();
    let needed = count_operations(n, genus, &sizes);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let last = sets.last().map(|s| {
        let mut member = vec![false; n];
        for &x in s {
            member[x] = true;
        }
        member
    });
    let search = Search { g, genus, punctures: &sets, last };
    if genus == 0 {
        return Ok(search.count_punctures(0, g.identity()));
    }
    // split on the first handle
    Ok((0..n).into_par_iter().map(|a| (0..n).map(|b| search.count(1, g.commutator(a, b))).sum::<u64>()).sum())
}
