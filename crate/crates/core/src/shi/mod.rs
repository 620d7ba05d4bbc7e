//! Shi coordinates of dominant alcoves and Shi tableaux of dominant regions
//! of the m-Shi arrangement in type A.
//!
//! Both kinds of coordinates live on a staircase indexed by positive roots
//! `alpha_uv = e_u - e_{v+1}`, `1 <= u <= v <= n-1`. Storage is by root
//! (column `v` after column `v-1`), so dropping the last stored column is
//! exactly the "remove the first diagram column" operation. Display follows
//! the usual diagram: row `i` lists the entries for `alpha_{i,n-1}` down to
//! `alpha_{ii}`.

mod bijection;
mod enumerate;
mod walls;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_rank, Error, Result};

pub use bijection::{psi, psi_inverse};
pub use enumerate::{
    enumerate_dominant_alcoves, enumerate_regions, fuss_catalan, DEFAULT_REGION_CAP,
};
pub use walls::{
    column_sums, conjugate_tableau, neighbor_wall_oracle, region_from_column_sums,
    remove_first_column, stat_c, stat_r,
};

/// The positive root `alpha_u + ... + alpha_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub u: usize,
    pub v: usize,
}

impl Root {
    pub fn new(u: usize, v: usize, n: usize) -> Result<Self> {
        if u < 1 || u > v || v + 1 > n {
            return Err(Error::RootOutOfRange { u, v, n });
        }
        Ok(Root { u, v })
    }

    /// The highest root `theta = alpha_{1,n-1}`.
    pub fn highest(n: usize) -> Self {
        Root { u: 1, v: n - 1 }
    }

    /// All positive roots for rank `n`, in storage order.
    pub fn all(n: usize) -> impl Iterator<Item = Root> {
        (1..n).flat_map(|v| (1..=v).map(move |u| Root { u, v }))
    }

    pub fn fits(&self, n: usize) -> bool {
        self.u >= 1 && self.u <= self.v && self.v < n
    }

    /// `e_u - e_{v+1}` as an integer vector of length `n`.
    pub fn vector(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0; n];
        out[self.u - 1] = 1;
        out[self.v] = -1;
        out
    }

    /// The root swapped with this one by tableau conjugation, `alpha_{n-v,n-u}`.
    pub fn conjugate(&self, n: usize) -> Root {
        Root {
            u: n - self.v,
            v: n - self.u,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha_{},{}", self.u, self.v)
    }
}

/// Serialized as `[u, v]`.
impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

pub(crate) fn slot(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u - 1
}

pub(crate) fn staircase_len(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Integers indexed by the positive roots of rank `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    n: usize,
    entries: Vec<i64>,
}

impl Tableau {
    pub fn zeros(n: usize) -> Self {
        Tableau {
            n,
            entries: vec![0; staircase_len(n)],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let entries = Root::all(n).map(|r| f(r.u, r.v)).collect();
        Tableau { n, entries }
    }

    /// Entries listed root by root: `(1,1), (1,2), (2,2), (1,3), ...`.
    pub fn from_storage(n: usize, entries: Vec<i64>) -> Result<Self> {
        let expected = staircase_len(n);
        if entries.len() != expected {
            return Err(Error::TableauShape {
                n,
                expected,
                got: entries.len(),
            });
        }
        Ok(Tableau { n, entries })
    }

    /// Diagram rows: row `i` holds the entries for `alpha_{i,n-1}, ..., alpha_{ii}`.
    pub fn from_rows(n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let shape_ok = rows.len() + 1 == n
            && rows.iter().enumerate().all(|(i, row)| row.len() == n - 1 - i);
        if !shape_ok {
            return Err(Error::TableauShape {
                n,
                expected: staircase_len(n),
                got: rows.iter().map(Vec::len).sum(),
            });
        }
        Ok(Tableau::from_fn(n, |u, v| rows[u - 1][n - 1 - v]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> i64 {
        self.entries[slot(u, v)]
    }

    pub fn set(&mut self, u: usize, v: usize, value: i64) {
        self.entries[slot(u, v)] = value;
    }

    pub fn at(&self, root: Root) -> i64 {
        self.get(root.u, root.v)
    }

    pub fn storage(&self) -> &[i64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..self.n)
            .map(|i| (i..self.n).rev().map(|v| self.get(i, v)).collect())
            .collect()
    }

    /// Diagram entries read row by row, left to right.
    pub fn reading_word(&self) -> Vec<i64> {
        self.rows().into_iter().flatten().collect()
    }

    /// Drops the entries for roots ending at `n-1`.
    pub fn without_last_root_column(&self) -> Tableau {
        let n = self.n - 1;
        Tableau {
            n,
            entries: self.entries[..staircase_len(n)].to_vec(),
        }
    }

    pub(crate) fn with_column(&self, column: &[i64]) -> Tableau {
        debug_assert_eq!(column.len(), self.n);
        let mut entries = Vec::with_capacity(staircase_len(self.n + 1));
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(column);
        Tableau {
            n: self.n + 1,
            entries,
        }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau(n={}, {:?})", self.n, self.rows())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// First violated alcove condition, if any.
pub fn alcove_violation(k: &Tableau) -> Option<String> {
    for root in Root::all(k.n) {
        let (u, v) = (root.u, root.v);
        let value = k.get(u, v);
        for t in u..v {
            let (a, b) = (k.get(u, t), k.get(t + 1, v));
            let sum = a + b;
            if value < sum || value > sum + 1 {
                return Some(format!(
                    "k_{u}{v} = {value} violates k_{u}{t} + k_{}{v} <= k_{u}{v} <= k_{u}{t} + k_{}{v} + 1 \
                     (k_{u}{t} = {a}, k_{}{v} = {b})",
                    t + 1,
                    t + 1,
                    t + 1
                ));
            }
        }
    }
    None
}

/// Shi's characterization of alcove coordinates in type A.
pub fn is_valid_alcove_coords(k: &Tableau) -> bool {
    alcove_violation(k).is_none()
}

/// Alcove coordinates of an alcove inside the dominant chamber.
pub fn is_dominant_alcove_coords(k: &Tableau) -> bool {
    k.entries.iter().all(|&x| x >= 0) && is_valid_alcove_coords(k)
}

/// First violated region-tableau condition, if any.
pub fn region_violation(e: &Tableau, m: usize) -> Option<String> {
    let m = m as i64;
    for root in Root::all(e.n) {
        let (u, v) = (root.u, root.v);
        let value = e.get(u, v);
        if value < 0 || value > m {
            return Some(format!("e_{u}{v} = {value} is outside 0..={m}"));
        }
        for t in u..v {
            let sum = e.get(u, t) + e.get(t + 1, v);
            if sum < m {
                if value != sum && value != sum + 1 {
                    return Some(format!(
                        "e_{u}{v} = {value} but e_{u}{t} + e_{}{v} = {sum} <= m - 1 requires e_{u}{v} in {{{sum}, {}}}",
                        t + 1,
                        sum + 1
                    ));
                }
            } else if value != m {
                return Some(format!(
                    "e_{u}{v} = {value} but e_{u}{t} + e_{}{v} = {sum} > m - 1 forces e_{u}{v} = {m}",
                    t + 1
                ));
            }
        }
    }
    None
}

/// The characterization of Shi tableaux of dominant m-Shi regions.
pub fn is_valid_region_tableau(e: &Tableau, m: usize) -> bool {
    region_violation(e, m).is_none()
}

/// Shi coordinates of a dominant alcove.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AlcoveCoords {
    tableau: Tableau,
}

impl AlcoveCoords {
    pub fn new(tableau: Tableau) -> Result<Self> {
        check_rank(tableau.n)?;
        if let Some(neg) = tableau.entries.iter().find(|&&x| x < 0) {
            return Err(Error::InvalidAlcoveCoords(format!(
                "entry {neg} is negative, so the alcove is not dominant"
            )));
        }
        if let Some(reason) = alcove_violation(&tableau) {
            return Err(Error::InvalidAlcoveCoords(reason));
        }
        Ok(AlcoveCoords { tableau })
    }

    pub(crate) fn new_unchecked(tableau: Tableau) -> Self {
        debug_assert!(is_dominant_alcove_coords(&tableau), "{tableau:?}");
        AlcoveCoords { tableau }
    }

    pub fn zero(n: usize) -> Self {
        AlcoveCoords {
            tableau: Tableau::zeros(n),
        }
    }

    pub fn n(&self) -> usize {
        self.tableau.n
    }

    pub fn get(&self, u: usize, v: usize) -> i64 {
        self.tableau.get(u, v)
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn into_tableau(self) -> Tableau {
        self.tableau
    }
}

impl fmt::Display for AlcoveCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tableau.fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
struct AlcoveRepr {
    n: usize,
    k: Vec<Vec<i64>>,
}

impl Serialize for AlcoveCoords {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlcoveRepr {
            n: self.n(),
            k: self.tableau.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlcoveCoords {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = AlcoveRepr::deserialize(d)?;
        let tableau = Tableau::from_rows(repr.n, &repr.k).map_err(serde::de::Error::custom)?;
        AlcoveCoords::new(tableau).map_err(serde::de::Error::custom)
    }
}

/// Shi tableau of a dominant region of the m-Shi arrangement.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RegionTableau {
    m: usize,
    tableau: Tableau,
}

impl RegionTableau {
    pub fn new(tableau: Tableau, m: usize) -> Result<Self> {
        check_rank(tableau.n)?;
        if m < 1 {
            return Err(Error::LevelTooSmall);
        }
        if let Some(reason) = region_violation(&tableau, m) {
            return Err(Error::InvalidRegionTableau(reason));
        }
        Ok(RegionTableau { m, tableau })
    }

    pub fn from_rows(n: usize, m: usize, rows: &[Vec<i64>]) -> Result<Self> {
        RegionTableau::new(Tableau::from_rows(n, rows)?, m)
    }

    pub(crate) fn new_unchecked(tableau: Tableau, m: usize) -> Self {
        debug_assert!(is_valid_region_tableau(&tableau, m), "{tableau:?}");
        RegionTableau { m, tableau }
    }

    pub fn n(&self) -> usize {
        self.tableau.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, u: usize, v: usize) -> i64 {
        self.tableau.get(u, v)
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    /// Tests whether `H_{root, m}` is a separating wall of the region: the
    /// entry for `root` is `m` and it splits as `(m - 1)` across every
    /// intermediate index.
    pub fn is_separating_wall(&self, root: Root) -> bool {
        if !root.fits(self.n()) {
            return false;
        }
        let m = self.m as i64;
        let (u, v) = (root.u, root.v);
        self.get(u, v) == m && (u..v).all(|t| self.get(u, t) + self.get(t + 1, v) == m - 1)
    }
}

impl fmt::Display for RegionTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tableau.fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
struct RegionRepr {
    n: usize,
    m: usize,
    e: Vec<Vec<i64>>,
}

impl Serialize for RegionTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RegionRepr {
            n: self.n(),
            m: self.m,
            e: self.tableau.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RegionTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RegionRepr::deserialize(d)?;
        RegionTableau::from_rows(repr.n, repr.m, &repr.e).map_err(serde::de::Error::custom)
    }
}

/// Caps every coordinate of an m-minimal alcove at `m`.
pub fn region_from_alcove(k: &AlcoveCoords, m: usize) -> Result<RegionTableau> {
    if m < 1 {
        return Err(Error::LevelTooSmall);
    }
    let cap = m as i64;
    let e = Tableau::from_fn(k.n(), |u, v| k.get(u, v).min(cap));
    match region_violation(&e, m) {
        None => Ok(RegionTableau::new_unchecked(e, m)),
        Some(reason) => Err(Error::NotMinimalAlcove(reason)),
    }
}
