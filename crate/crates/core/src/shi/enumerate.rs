//! Enumeration of dominant regions and bounded dominant alcoves by appending
//! one root column at a time.

use crate::error::{check_rank, Error, Result};

use super::{AlcoveCoords, RegionTableau, Tableau};

/// Largest number of regions `enumerate_regions` produces unless told otherwise.
pub const DEFAULT_REGION_CAP: usize = 2_000_000;

/// The number `C((m+1)n, n) / (mn+1)` of dominant regions of the m-Shi
/// arrangement, or `None` on overflow.
pub fn fuss_catalan(n: usize, m: usize) -> Option<u128> {
    let total = (m as u128 + 1).checked_mul(n as u128)?;
    let mut binom: u128 = 1;
    for i in 0..n as u128 {
        binom = binom.checked_mul(total - i)? / (i + 1);
    }
    Some(binom / (m as u128 * n as u128 + 1))
}

/// Every column `x_u = e_{u,n}` (for `u = 1..=n`) that extends the region
/// tableau `e` of rank `n` to a region tableau of rank `n + 1`.
pub(crate) fn region_columns(e: &Tableau, m: usize) -> Vec<Vec<i64>> {
    let m = m as i64;
    extend_columns(e, |prev, u, column| {
        let v = prev.n();
        let mut lo = 0;
        let mut hi = m;
        for t in u..v {
            let sum = prev.get(u, t) + column[t];
            let (a, b) = if sum < m { (sum, sum + 1) } else { (m, m) };
            lo = lo.max(a);
            hi = hi.min(b);
        }
        (lo, hi)
    })
}

/// Every column extending the dominant alcove coordinates `k` with entries
/// bounded by `max_entry`.
fn alcove_columns(k: &Tableau, max_entry: i64) -> Vec<Vec<i64>> {
    extend_columns(k, |prev, u, column| {
        let v = prev.n();
        let mut lo = 0;
        let mut hi = max_entry;
        for t in u..v {
            let sum = prev.get(u, t) + column[t];
            lo = lo.max(sum);
            hi = hi.min(sum + 1);
        }
        (lo, hi)
    })
}

/// Fills a new column bottom-up. The bounds for `x_u` only depend on the old
/// tableau and on `x_{t+1}` for `t >= u`, which are already chosen.
/// `column` is indexed from 0, so `column[t]` holds `x_{t+1}`.
fn extend_columns<F>(prev: &Tableau, bounds: F) -> Vec<Vec<i64>>
where
    F: Fn(&Tableau, usize, &[i64]) -> (i64, i64),
{
    fn go<F>(prev: &Tableau, bounds: &F, u: usize, column: &mut Vec<i64>, out: &mut Vec<Vec<i64>>)
    where
        F: Fn(&Tableau, usize, &[i64]) -> (i64, i64),
    {
        if u == 0 {
            out.push(column.clone());
            return;
        }
        let (lo, hi) = bounds(prev, u, column);
        for x in lo..=hi {
            column[u - 1] = x;
            go(prev, bounds, u - 1, column, out);
        }
    }

    let mut column = vec![0; prev.n()];
    let mut out = Vec::new();
    go(prev, &bounds, prev.n(), &mut column, &mut out);
    out
}

fn grow(
    n: usize,
    columns: impl Fn(&Tableau) -> Vec<Vec<i64>>,
) -> Vec<Tableau> {
    let mut layer = vec![Tableau::zeros(1)];
    for _ in 1..n {
        layer = layer
            .iter()
            .flat_map(|t| columns(t).into_iter().map(move |c| t.with_column(&c)))
            .collect();
    }
    layer.sort_by_cached_key(Tableau::reading_word);
    layer
}

/// All region tableaux of the dominant m-Shi regions for rank `n`, ordered
/// lexicographically by reading word.
pub fn enumerate_regions(n: usize, m: usize, cap: usize) -> Result<Vec<RegionTableau>> {
    check_rank(n)?;
    if m < 1 {
        return Err(Error::LevelTooSmall);
    }
    let needed = fuss_catalan(n, m).unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(grow(n, |t| region_columns(t, m))
        .into_iter()
        .map(|t| RegionTableau::new_unchecked(t, m))
        .collect())
}

/// All dominant alcoves whose coordinates are at most `max_entry`, ordered
/// lexicographically by reading word.
pub fn enumerate_dominant_alcoves(n: usize, max_entry: usize) -> Result<Vec<AlcoveCoords>> {
    check_rank(n)?;
    let max_entry = max_entry as i64;
    Ok(grow(n, |t| alcove_columns(t, max_entry))
        .into_iter()
        .map(AlcoveCoords::new_unchecked)
        .collect())
}
