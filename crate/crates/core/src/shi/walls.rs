//! Separating walls, the statistics `r` and `c`, column removal, conjugation
//! and the column-sum parametrization of dominant regions.

use crate::error::{check_rank, Error, Result};
use crate::partitions::Partition;

use super::enumerate::region_columns;
use super::{is_valid_region_tableau, RegionTableau, Root, Tableau};

/// Crosses `H_{root, m}` by lowering `e_uv` from `m` to `m - 1` and asks
/// whether the neighbor is still a dominant region.
pub fn neighbor_wall_oracle(e: &RegionTableau, root: Root) -> bool {
    let m = e.m() as i64;
    if !root.fits(e.n()) || e.get(root.u, root.v) != m {
        return false;
    }
    let mut neighbor = e.tableau().clone();
    neighbor.set(root.u, root.v, m - 1);
    is_valid_region_tableau(&neighbor, e.m())
}

/// Sum of the first diagram row, `e_11 + ... + e_{1,n-1}`.
pub fn stat_r(e: &RegionTableau) -> u64 {
    (1..e.n()).map(|j| e.get(1, j) as u64).sum()
}

/// Sum of the first diagram column, `e_{1,n-1} + ... + e_{n-1,n-1}`.
pub fn stat_c(e: &RegionTableau) -> u64 {
    let n = e.n();
    (1..n).map(|i| e.get(i, n - 1) as u64).sum()
}

/// Drops the first diagram column, the entries for roots ending at `n - 1`.
pub fn remove_first_column(e: &RegionTableau) -> Result<RegionTableau> {
    if e.n() <= 2 {
        return Err(Error::ColumnRemovalBase);
    }
    Ok(RegionTableau::new_unchecked(
        e.tableau().without_last_root_column(),
        e.m(),
    ))
}

/// Reflects the diagram in its anti-diagonal: `e'_ij = e_{n-j,n-i}`.
pub fn conjugate_tableau(e: &RegionTableau) -> RegionTableau {
    let n = e.n();
    let t = Tableau::from_fn(n, |i, j| e.get(n - j, n - i));
    RegionTableau::new_unchecked(t, e.m())
}

/// Column sums `mu_j = e_{1,n-j} + ... + e_{n-j,n-j}` for `j = 1..n-1`.
pub fn column_sums(e: &RegionTableau) -> Partition {
    let n = e.n();
    let mu = (1..n)
        .map(|j| {
            let v = n - j;
            (1..=v).map(|i| e.get(i, v) as usize).sum()
        })
        .collect();
    Partition::from_parts_unchecked(mu)
}

/// The unique region whose column sums are `mu`. Trailing zeros of `mu` may
/// be omitted; `mu_n`, if given, must be zero.
pub fn region_from_column_sums(mu: &[usize], n: usize, m: usize) -> Result<RegionTableau> {
    check_rank(n)?;
    if m < 1 {
        return Err(Error::LevelTooSmall);
    }
    let out_of_range = |reason: String| Error::ColumnSumsOutOfRange {
        mu: mu.to_vec(),
        reason,
    };
    if mu.len() > n {
        return Err(out_of_range(format!("more than {n} entries")));
    }
    let mut padded = mu.to_vec();
    padded.resize(n, 0);
    if padded[n - 1] != 0 {
        return Err(out_of_range(format!("mu_{n} must be 0")));
    }
    if padded.windows(2).any(|w| w[0] < w[1]) {
        return Err(out_of_range("entries must be weakly decreasing".into()));
    }
    for (j, &x) in padded.iter().enumerate().take(n - 1) {
        let bound = (n - 1 - j) * m;
        if x > bound {
            return Err(out_of_range(format!("mu_{} = {x} exceeds {bound}", j + 1)));
        }
    }

    // Root column v sums to mu_{n-v}.
    let target = |v: usize| padded[n - v - 1] as i64;
    let mut layer = vec![Tableau::zeros(1)];
    for v in 1..n {
        layer = layer
            .iter()
            .flat_map(|t| {
                region_columns(t, m)
                    .into_iter()
                    .filter(|c| c.iter().sum::<i64>() == target(v))
                    .map(move |c| t.with_column(&c))
            })
            .collect();
    }
    match layer.len() {
        1 => Ok(RegionTableau::new_unchecked(layer.pop().unwrap(), m)),
        found => Err(Error::ColumnSumsNotUnique {
            mu: mu.to_vec(),
            found,
        }),
    }
}
