//! Integer partitions, Young-diagram cells, hooks and the n-core predicate.
//!
//! Rows and columns are 1-based throughout, so the cell `(1, 1)` is the
//! top-left box of the diagram.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_rank, Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are trimmed on construction, so two partitions are equal
/// exactly when their part sequences are equal.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, addressed by 1-based row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `(col - row) mod n`, in `[0, n)`.
    pub fn residue(&self, n: usize) -> usize {
        residue(*self, n)
    }
}

/// `(col - row) mod n`, in `[0, n)`.
pub fn residue(c: Cell, n: usize) -> usize {
    (c.col as i64 - c.row as i64).rem_euclid(n as i64) as usize
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Rebuilds a partition from its beta numbers (first-column hook lengths).
    pub fn from_beta_numbers(beta: &[usize]) -> Result<Self> {
        let strictly_decreasing = beta.windows(2).all(|w| w[0] > w[1]);
        if !strictly_decreasing || beta.last() == Some(&0) {
            return Err(Error::InvalidBetaNumbers(beta.to_vec()));
        }
        let len = beta.len();
        // beta_k = lambda_k + len - k
        let parts = beta
            .iter()
            .enumerate()
            .map(|(i, &b)| b + i + 1 - len)
            .collect();
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts, written ℓ(λ).
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The largest part λ₁, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `row`-th part (1-based), zero past the end.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of parts that are at least `col`, i.e. the length of column `col`.
    pub fn column_length(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first_part())
            .map(|j| self.column_length(j))
            .collect();
        Partition { parts }
    }

    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        if !self.contains(c) {
            return Err(Error::CellOutsideDiagram {
                row: c.row,
                col: c.col,
            });
        }
        Ok(self.hook_unchecked(c))
    }

    fn hook_unchecked(&self, c: Cell) -> usize {
        (self.part(c.row) - c.col) + (self.column_length(c.col) - c.row) + 1
    }

    /// Hook length of the corner box, `λ₁ + ℓ(λ) - 1`; `-1` for the empty
    /// partition.
    pub fn first_hook(&self) -> i64 {
        if self.is_empty() {
            -1
        } else {
            (self.first_part() + self.length()) as i64 - 1
        }
    }

    /// Hook lengths of the first column, strictly decreasing.
    pub fn beta_numbers(&self) -> Vec<usize> {
        let len = self.length();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - (i + 1))
            .collect()
    }

    pub fn is_core(&self, n: usize) -> Result<bool> {
        check_rank(n)?;
        Ok(self.cells().all(|c| !self.hook_unchecked(c).is_multiple_of(n)))
    }

    /// Boxes that can be added while keeping a partition, top row first.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.length() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    /// Boxes that can be removed while keeping a partition, top row first.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.length())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// All partitions of `size`, in reverse lexicographic order.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out
}

/// Every n-core with at most `max_size` boxes, ordered by size.
pub fn cores_up_to(n: usize, max_size: usize) -> Result<Vec<Partition>> {
    check_rank(n)?;
    let mut cores = Vec::new();
    for size in 0..=max_size {
        for p in partitions_of(size) {
            if p.is_core(n)? {
                cores.push(p);
            }
        }
    }
    Ok(cores)
}

/// Every partition whose corner hook `λ₁ + ℓ(λ) - 1` equals `hook`.
pub fn partitions_with_first_hook(hook: usize) -> Vec<Partition> {
    // Rows 2..=len each hold between 1 and `first` boxes, weakly decreasing.
    fn fill(rows: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rows == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max_part).rev() {
            prefix.push(p);
            fill(rows - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if hook == 0 {
        return out;
    }
    for first in 1..=hook {
        let len = hook + 1 - first;
        let mut prefix = vec![first];
        fill(len - 1, first, &mut prefix, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 2, 1, 1, 1]).conjugate(), p(&[5, 2, 1, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[2, 1, 0]).length(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn hooks_of_the_running_example() {
        let lam = p(&[5, 2, 1, 1, 1]);
        assert_eq!(lam.hook_length(Cell::new(1, 1)).unwrap(), 9);
        assert_eq!(lam.hook_length(Cell::new(1, 2)).unwrap(), 5);
        let row1: Vec<_> = (1..=5)
            .map(|c| lam.hook_length(Cell::new(1, c)).unwrap())
            .collect();
        assert_eq!(row1, vec![9, 5, 3, 2, 1]);
        assert_eq!(lam.hook_length(Cell::new(2, 2)).unwrap(), 1);
        assert_eq!(p(&[1]).hook_length(Cell::new(1, 1)).unwrap(), 1);
    }

    #[test]
    fn hook_outside_diagram_is_an_error() {
        let lam = p(&[2, 1]);
        assert_eq!(
            lam.hook_length(Cell::new(2, 2)),
            Err(Error::CellOutsideDiagram { row: 2, col: 2 })
        );
        assert!(lam.hook_length(Cell::new(0, 1)).is_err());
    }

    #[test]
    fn first_hook_convention() {
        assert_eq!(p(&[5, 2, 1, 1, 1]).first_hook(), 9);
        assert_eq!(p(&[]).first_hook(), -1);
        assert_eq!(p(&[1]).first_hook(), 1);
    }

    #[test]
    fn beta_numbers_examples() {
        assert_eq!(p(&[5, 2, 1, 1, 1]).beta_numbers(), vec![9, 5, 3, 2, 1]);
        assert!(p(&[]).beta_numbers().is_empty());
        assert_eq!(p(&[3]).beta_numbers(), vec![3]);
        assert_eq!(
            Partition::from_beta_numbers(&[9, 5, 3, 2, 1]).unwrap(),
            p(&[5, 2, 1, 1, 1])
        );
        assert!(Partition::from_beta_numbers(&[3, 3]).is_err());
        assert!(Partition::from_beta_numbers(&[2, 0]).is_err());
    }

    #[test]
    fn core_examples() {
        assert!(p(&[5, 2, 1, 1, 1]).is_core(4).unwrap());
        assert!(p(&[]).is_core(7).unwrap());
        assert!(!p(&[2, 1]).is_core(3).unwrap());
        assert_eq!(p(&[1]).is_core(1), Err(Error::RankTooSmall(1)));
    }

    #[test]
    fn residues() {
        assert_eq!(residue(Cell::new(1, 1), 4), 0);
        assert_eq!(residue(Cell::new(1, 2), 4), 1);
        assert_eq!(residue(Cell::new(2, 1), 4), 3);
    }

    #[test]
    fn addable_and_removable() {
        let lam = p(&[3, 1, 1]);
        assert_eq!(
            lam.addable_cells(),
            vec![Cell::new(1, 4), Cell::new(2, 2), Cell::new(4, 1)]
        );
        assert_eq!(lam.removable_cells(), vec![Cell::new(1, 3), Cell::new(3, 1)]);
        assert_eq!(p(&[]).addable_cells(), vec![Cell::new(1, 1)]);
        assert!(p(&[]).removable_cells().is_empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<_> = (0..=10).map(|k| partitions_of(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn first_hook_generator_matches_filter() {
        for hook in 1..=9 {
            let mut direct: Vec<_> = partitions_with_first_hook(hook);
            let max = (hook + 1) * (hook + 1) / 4;
            let mut filtered: Vec<_> = (0..=max)
                .flat_map(partitions_of)
                .filter(|q| q.first_hook() == hook as i64)
                .collect();
            direct.sort();
            filtered.sort();
            assert_eq!(direct, filtered, "hook {hook}");
        }
    }

    #[test]
    fn json_shape() {
        let lam = p(&[5, 2, 1, 1, 1]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[5,2,1,1,1]");
        let back: Partition = serde_json::from_str("[5,2,1,1,1,0]").unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn conjugation_preserves_cores_exhaustively() {
        for size in 0..=20 {
            for lam in partitions_of(size) {
                let conj = lam.conjugate();
                assert_eq!(conj.conjugate(), lam);
                for n in 2..=6 {
                    assert_eq!(lam.is_core(n).unwrap(), conj.is_core(n).unwrap());
                }
            }
        }
    }
}
