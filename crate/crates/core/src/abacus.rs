//! n-abacus summaries of cores.
//!
//! An abacus is never materialized. Runner `i` holds the integers `q*n + i`;
//! the bead set of a partition is its beta numbers together with every
//! negative integer. For a core the beads on each runner are flush, so a
//! runner is fully described by the level of its lowest bead. Two
//! normalizations are used:
//!
//! * the *original* abacus, beads at the beta numbers and the negatives,
//!   which defines the level vector `(b_0, ..., b_{n-1})` (first-gap levels);
//! * the *balanced* abacus, the unique shift of the original whose balance
//!   number is zero, which defines the balanced vector `(a_1, ..., a_n)`
//!   (lowest-bead levels, runner `i - 1` in position `i`).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{check_rank, Error, Result};
use crate::partitions::Partition;

/// First-gap levels of the original abacus of an n-core.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelVector {
    pub n: usize,
    pub b: Vec<usize>,
}

/// Lowest-bead levels of the balanced abacus; the entries sum to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BalancedVector {
    pub n: usize,
    pub a: Vec<i64>,
}

impl LevelVector {
    pub fn new(n: usize, b: Vec<usize>) -> Result<Self> {
        check_rank(n)?;
        if b.len() != n {
            return Err(Error::LevelVectorLength {
                expected: n,
                got: b.len(),
            });
        }
        if b[0] != 0 {
            return Err(Error::LevelVectorOffset(b));
        }
        Ok(LevelVector { n, b })
    }

    /// Entry of the first gap on each runner: `b_{i-1} * n + i - 1`.
    pub fn first_gaps(&self) -> Vec<usize> {
        self.b
            .iter()
            .enumerate()
            .map(|(i, &level)| level * self.n + i)
            .collect()
    }
}

/// True when every bead `j >= n` of the abacus with beads at `beta` and at
/// all negative integers has a bead at `j - n` as well.
pub fn is_flush(beta: &[usize], n: usize) -> bool {
    let beads: BTreeSet<usize> = beta.iter().copied().collect();
    beads.iter().all(|&j| j < n || beads.contains(&(j - n)))
}

/// Lowest-bead level of each runner for a flush abacus, with entries shifted
/// by a constant relative to the original placement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreAbacus {
    n: usize,
    levels: Vec<i64>,
}

impl CoreAbacus {
    /// The original abacus: beads at the beta numbers and the negatives.
    pub fn original(lambda: &Partition, n: usize) -> Result<Self> {
        check_rank(n)?;
        let beta = lambda.beta_numbers();
        if !is_flush(&beta, n) {
            return Err(Error::NotACore {
                partition: lambda.to_string(),
                n,
            });
        }
        let mut counts = vec![0i64; n];
        for b in beta {
            counts[b % n] += 1;
        }
        Ok(CoreAbacus {
            n,
            levels: counts.into_iter().map(|c| c - 1).collect(),
        })
    }

    /// Adds `shift` to every entry of the abacus.
    pub fn shifted(&self, shift: i64) -> Self {
        let n = self.n as i64;
        let mut levels = vec![0; self.n];
        for (runner, &level) in self.levels.iter().enumerate() {
            let top = level * n + runner as i64 + shift;
            levels[top.rem_euclid(n) as usize] = top.div_euclid(n);
        }
        CoreAbacus { n: self.n, levels }
    }

    pub fn runner_levels(&self) -> &[i64] {
        &self.levels
    }

    pub fn balance_number(&self) -> i64 {
        balance_number(&self.levels)
    }

    /// The shift of this abacus with balance number zero.
    pub fn balanced(&self) -> Self {
        // Shifting every entry by +1 raises the balance number by exactly 1.
        self.shifted(-self.balance_number())
    }
}

/// Sum over runners of the largest bead level.
pub fn balance_number(runner_levels: &[i64]) -> i64 {
    runner_levels.iter().sum()
}

pub fn level_vector(lambda: &Partition, n: usize) -> Result<LevelVector> {
    let abacus = CoreAbacus::original(lambda, n)?;
    let b = abacus
        .runner_levels()
        .iter()
        .map(|&l| (l + 1) as usize)
        .collect();
    Ok(LevelVector { n, b })
}

pub fn core_from_level_vector(v: &LevelVector) -> Result<Partition> {
    check_rank(v.n)?;
    if v.b.len() != v.n {
        return Err(Error::LevelVectorLength {
            expected: v.n,
            got: v.b.len(),
        });
    }
    if v.b[0] != 0 {
        return Err(Error::LevelVectorOffset(v.b.clone()));
    }
    let mut beta: Vec<usize> = v
        .b
        .iter()
        .enumerate()
        .flat_map(|(runner, &level)| (0..level).map(move |q| q * v.n + runner))
        .collect();
    beta.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_beta_numbers(&beta)
}

pub fn balanced_vector(lambda: &Partition, n: usize) -> Result<BalancedVector> {
    let balanced = CoreAbacus::original(lambda, n)?.balanced();
    debug_assert_eq!(balanced.balance_number(), 0);
    Ok(BalancedVector {
        n,
        a: balanced.runner_levels().to_vec(),
    })
}
