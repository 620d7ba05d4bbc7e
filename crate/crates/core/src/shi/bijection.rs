//! The combinatorial bijection between n-cores and dominant alcoves, routed
//! through the first gaps of the abacus.

use crate::abacus::{core_from_level_vector, level_vector, LevelVector};
use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::{AlcoveCoords, Tableau};

/// Shi coordinates `k_ij = floor((p_{j+1} - p_i) / n)` where `p_1 < ... < p_n`
/// are the first-gap entries of the runners of the abacus of `lambda`.
pub fn psi(lambda: &Partition, n: usize) -> Result<AlcoveCoords> {
    let mut gaps = level_vector(lambda, n)?.first_gaps();
    gaps.sort_unstable();
    let k = Tableau::from_fn(n, |i, j| ((gaps[j] - gaps[i - 1]) / n) as i64);
    Ok(AlcoveCoords::new_unchecked(k))
}

/// Recovers the core from dominant alcove coordinates.
///
/// Writing `p_i = n q_i + r_i`, the quotients are read off the first row
/// (`q_i = k_{1,i-1}`) and the residues come from their inversion table:
/// `r_i > r_{j+1}` exactly when `k_1j = k_{1,i-1} + k_ij + 1`.
pub fn psi_inverse(k: &AlcoveCoords) -> Result<Partition> {
    let n = k.n();
    let q: Vec<usize> = std::iter::once(0)
        .chain((1..n).map(|j| k.get(1, j) as usize))
        .collect();

    // inversions[p] for positions p = 2..=n (index p - 1).
    let mut inversions = vec![0usize; n];
    for j in 1..n {
        inversions[j] = (2..=j)
            .filter(|&i| k.get(1, j) == k.get(1, i - 1) + k.get(i, j) + 1)
            .count();
    }

    let mut available: Vec<usize> = (1..n).collect();
    let mut residues = vec![0usize; n];
    for pos in (1..n).rev() {
        let inv = inversions[pos];
        if inv >= available.len() {
            return Err(Error::InvalidAlcoveCoords(format!(
                "inversion count {inv} at position {} exceeds {}",
                pos + 1,
                available.len() - 1
            )));
        }
        residues[pos] = available.remove(available.len() - 1 - inv);
    }

    let mut b = vec![0usize; n];
    for (qi, ri) in q.iter().zip(&residues) {
        b[*ri] = *qi;
    }
    core_from_level_vector(&LevelVector::new(n, b)?)
}
