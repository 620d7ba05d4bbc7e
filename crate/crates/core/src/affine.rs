//! The affine symmetric group acting on n-cores and on the hyperplane
//! `V = { x in R^n : x_1 + ... + x_n = 0 }`.
//!
//! A word `l_1 l_2 ... l_k` stands for `w = s_{l_k} ... s_{l_1}`: letters are
//! applied left to right, so `w(x)` applies `l_1` first and `w^{-1}(x)`
//! applies `l_k` first.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::abacus::balanced_vector;
use crate::error::{check_rank, Error, Result};
use crate::partitions::Partition;
use crate::shi::{AlcoveCoords, Root, Tableau};

fn check_core(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.is_core(n)? {
        Ok(())
    } else {
        Err(Error::NotACore {
            partition: lambda.to_string(),
            n,
        })
    }
}

fn check_generator(index: usize, n: usize) -> Result<()> {
    if index >= n {
        Err(Error::GeneratorOutOfRange { index, n })
    } else {
        Ok(())
    }
}

/// A word in the generators `s_0, ..., s_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWord {
    n: usize,
    letters: Vec<usize>,
}

impl AffineWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        check_rank(n)?;
        for &l in &letters {
            check_generator(l, n)?;
        }
        Ok(AffineWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn act_on_core(&self, lambda: &Partition) -> Result<Partition> {
        self.letters
            .iter()
            .try_fold(lambda.clone(), |acc, &l| apply_generator_core(l, &acc, self.n))
    }

    /// `w(x)`.
    pub fn act(&self, x: &Point) -> Point {
        self.letters
            .iter()
            .fold(x.clone(), |acc, &l| apply_generator_point_unchecked(l, &acc))
    }

    /// `w^{-1}(x)`.
    pub fn act_inverse(&self, x: &Point) -> Point {
        self.letters
            .iter()
            .rev()
            .fold(x.clone(), |acc, &l| apply_generator_point_unchecked(l, &acc))
    }
}

impl fmt::Display for AffineWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("s{l}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for AffineWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

/// A point of `V` stored as `coords / denom` with integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    denom: i64,
    coords: Vec<i64>,
}

impl Point {
    pub fn new(denom: i64, coords: Vec<i64>) -> Result<Self> {
        check_rank(coords.len())?;
        if denom <= 0 || coords.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidAlcoveCoords(format!(
                "point {coords:?}/{denom} is not in V"
            )));
        }
        Ok(Point { denom, coords })
    }

    pub fn origin(n: usize) -> Self {
        Point {
            denom: 1,
            coords: vec![0; n],
        }
    }

    /// `rho / n` with `rho = ((n-1)/2, (n-3)/2, ..., (1-n)/2)`.
    pub fn rho_over_n(n: usize) -> Self {
        let n = n as i64;
        Point {
            denom: 2 * n,
            coords: (1..=n).map(|i| n + 1 - 2 * i).collect(),
        }
    }

    /// The fundamental weight `Lambda_j`, with `Lambda_0 = 0`.
    pub fn fundamental_weight(n: usize, j: usize) -> Self {
        let (n, j) = (n as i64, j as i64);
        Point {
            denom: n,
            coords: (1..=n).map(|i| if i <= j { n - j } else { -j }).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coordinate(&self, i: usize) -> Ratio<i64> {
        Ratio::new(self.coords[i], self.denom)
    }

    /// Standard inner product with an integer vector.
    pub fn inner(&self, v: &[i64]) -> Ratio<i64> {
        let dot: i64 = self.coords.iter().zip(v).map(|(a, b)| a * b).sum();
        Ratio::new(dot, self.denom)
    }

    /// `x + beta` for an integer vector `beta`.
    pub fn translate(&self, beta: &[i64]) -> Point {
        Point {
            denom: self.denom,
            coords: self
                .coords
                .iter()
                .zip(beta)
                .map(|(a, b)| a + b * self.denom)
                .collect(),
        }
    }

    /// Same point over the denominator `denom`, which must be a multiple of
    /// the current one.
    fn over(&self, denom: i64) -> Point {
        let k = denom / self.denom;
        Point {
            denom,
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }
}

/// Same point up to the choice of denominator.
pub fn same_point(x: &Point, y: &Point) -> bool {
    let d = x.denom * y.denom;
    x.over(d) == y.over(d)
}

/// `s_r` acting on an n-core: add every addable box of residue `r`, or else
/// remove every removable one.
pub fn apply_generator_core(r: usize, lambda: &Partition, n: usize) -> Result<Partition> {
    check_generator(r, n)?;
    check_core(lambda, n)?;
    let addable: Vec<_> = lambda
        .addable_cells()
        .into_iter()
        .filter(|c| c.residue(n) == r)
        .collect();
    let mut parts = lambda.parts().to_vec();
    if !addable.is_empty() {
        for c in addable {
            if c.row > parts.len() {
                parts.push(0);
            }
            parts[c.row - 1] += 1;
        }
    } else {
        for c in lambda.removable_cells() {
            if c.residue(n) == r {
                parts[c.row - 1] -= 1;
            }
        }
    }
    Partition::new(parts)
}

fn apply_generator_point_unchecked(i: usize, x: &Point) -> Point {
    let n = x.n();
    let mut coords = x.coords.clone();
    if i == 0 {
        coords.swap(0, n - 1);
        coords[0] += x.denom;
        coords[n - 1] -= x.denom;
    } else {
        coords.swap(i - 1, i);
    }
    Point {
        denom: x.denom,
        coords,
    }
}

/// `s_i` acting on `V`: `s_i` for `i > 0` swaps coordinates `i` and `i + 1`,
/// and `s_0 (a_1, ..., a_n) = (a_n + 1, a_2, ..., a_{n-1}, a_1 - 1)`.
pub fn apply_generator_point(i: usize, x: &Point) -> Result<Point> {
    check_generator(i, x.n())?;
    Ok(apply_generator_point_unchecked(i, x))
}

/// The minimal length word building `lambda` from the empty core. Peels
/// `lambda` by always removing the removable boxes of the smallest residue.
pub fn minimal_word(lambda: &Partition, n: usize) -> Result<AffineWord> {
    check_rank(n)?;
    check_core(lambda, n)?;
    let mut letters = Vec::new();
    let mut current = lambda.clone();
    while !current.is_empty() {
        let r = current
            .removable_cells()
            .iter()
            .map(|c| c.residue(n))
            .min()
            .expect("non-empty partitions have removable boxes");
        current = apply_generator_core(r, &current, n)?;
        letters.push(r);
    }
    letters.reverse();
    Ok(AffineWord { n, letters })
}

/// `w = t_beta u` with `beta` in the root lattice and `u` a finite permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslationDecomposition {
    pub beta: Vec<i64>,
    /// One-line notation, 1-based: `u(i) = u[i - 1]`, and `u` sends `e_i` to `e_{u(i)}`.
    pub u: Vec<usize>,
}

impl TranslationDecomposition {
    /// `w(x) = beta + u(x)`, where `u(x)_{u(i)} = x_i`.
    pub fn act(&self, x: &Point) -> Point {
        let mut coords = vec![0; x.n()];
        for (i, &ui) in self.u.iter().enumerate() {
            coords[ui - 1] = x.coords[i];
        }
        Point {
            denom: x.denom,
            coords,
        }
        .translate(&self.beta)
    }

    /// `w^{-1}(x) = u^{-1}(x - beta)`.
    pub fn act_inverse(&self, x: &Point) -> Point {
        let neg: Vec<i64> = self.beta.iter().map(|b| -b).collect();
        let y = x.translate(&neg);
        Point {
            denom: x.denom,
            coords: self.u.iter().map(|&ui| y.coords[ui - 1]).collect(),
        }
    }
}

/// `beta` is the balanced vector of `lambda`; `u` is the shortest permutation
/// for which `u^{-1}(-beta)` is weakly decreasing.
pub fn translation_decomposition(lambda: &Partition, n: usize) -> Result<TranslationDecomposition> {
    let beta = balanced_vector(lambda, n)?.a;
    let mut u: Vec<usize> = (1..=n).collect();
    // Stable: equal entries keep increasing index order.
    u.sort_by_key(|&i| beta[i - 1]);
    Ok(TranslationDecomposition { beta, u })
}

/// `gamma = (1, ..., 1, 1 - n)`.
pub fn gamma(n: usize) -> Vec<i64> {
    let mut v = vec![1; n];
    v[n - 1] = 1 - n as i64;
    v
}

/// `Gamma = (n - 1, -1, ..., -1)`.
pub fn big_gamma(n: usize) -> Vec<i64> {
    let mut v = vec![-1; n];
    v[0] = n as i64 - 1;
    v
}

/// The highest root `e_1 - e_n`.
pub fn theta(n: usize) -> Vec<i64> {
    Root::highest(n).vector(n)
}

/// `w^{-1}(rho / n)` for the minimal length `w` with `w(empty) = lambda`.
pub fn inverse_image_of_rho(lambda: &Partition, n: usize) -> Result<Point> {
    Ok(minimal_word(lambda, n)?.act_inverse(&Point::rho_over_n(n)))
}

/// Coordinates `k_ij = floor(<w^{-1}(rho / n), alpha_ij>)` of the alcove
/// `w^{-1} A_0`.
pub fn phi_map(lambda: &Partition, n: usize) -> Result<AlcoveCoords> {
    let y = inverse_image_of_rho(lambda, n)?;
    let k = Tableau::from_fn(n, |i, j| {
        (y.coords[i - 1] - y.coords[j]).div_euclid(y.denom)
    });
    AlcoveCoords::new(k)
}

/// `w^{-1}(Lambda_j)`, a vertex of the alcove `w^{-1} A_0`.
pub fn vertex_image(lambda: &Partition, n: usize, j: usize) -> Result<Point> {
    check_generator(j, n)?;
    Ok(minimal_word(lambda, n)?.act_inverse(&Point::fundamental_weight(n, j)))
}

/// Checks `n <w^{-1}(rho / n), theta> = lambda_1 + l(lambda) + n - 1`.
pub fn hook_identity_check(lambda: &Partition, n: usize) -> Result<bool> {
    let lhs = inverse_image_of_rho(lambda, n)?.inner(&theta(n)) * n as i64;
    let rhs = (lambda.first_part() + lambda.length() + n - 1) as i64;
    Ok(lhs == Ratio::from_integer(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::cores_up_to;
    use crate::shi::{is_dominant_alcove_coords, psi};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn half(n: usize) -> Ratio<i64> {
        Ratio::new(n as i64 - 1, 2)
    }

    /// A few generic points of V with assorted denominators.
    fn samples(n: usize) -> Vec<Point> {
        let mut out = vec![Point::origin(n), Point::rho_over_n(n)];
        for j in 1..n {
            out.push(Point::fundamental_weight(n, j));
        }
        for seed in 1..=5i64 {
            let mut coords: Vec<i64> = (0..n as i64).map(|i| (seed * 7 + i * i * 3) % 11 - 5).collect();
            let s: i64 = coords.iter().sum();
            coords[n - 1] -= s;
            out.push(Point::new(seed + 1, coords).unwrap());
        }
        out
    }

    #[test]
    fn generators_on_cores() {
        assert_eq!(apply_generator_core(0, &p(&[]), 3).unwrap(), p(&[1]));
        assert_eq!(apply_generator_core(1, &p(&[]), 3).unwrap(), p(&[]));
        // s_1 s_2 s_0 applied to the empty core: s_0 acts first.
        let w = AffineWord::new(3, vec![0, 2, 1]).unwrap();
        let built = w.act_on_core(&p(&[])).unwrap();
        assert_eq!(built, p(&[2, 1, 1]));
        assert!(built.is_core(3).unwrap());
        assert!(apply_generator_core(3, &p(&[]), 3).is_err());
        assert!(apply_generator_core(0, &p(&[2, 1]), 3).is_err());
    }

    #[test]
    fn generators_are_involutions_on_cores() {
        for n in 2..=6 {
            for lam in cores_up_to(n, 20).unwrap() {
                for r in 0..n {
                    let once = apply_generator_core(r, &lam, n).unwrap();
                    assert!(once.is_core(n).unwrap());
                    assert_eq!(apply_generator_core(r, &once, n).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn generators_on_points() {
        let o = Point::new(3, vec![0, 0, 0]).unwrap();
        assert_eq!(apply_generator_point(0, &o).unwrap().coords(), &[3, 0, -3]);
        assert_eq!(apply_generator_point(1, &o).unwrap(), o);
        for n in 2..=5 {
            for x in samples(n) {
                for i in 0..n {
                    let y = apply_generator_point(i, &x).unwrap();
                    assert_eq!(apply_generator_point(i, &y).unwrap(), x);
                }
            }
        }
        assert!(apply_generator_point(3, &o).is_err());
        assert!(Point::new(1, vec![1, 0, 0]).is_err());
    }

    #[test]
    fn minimal_words() {
        assert!(minimal_word(&p(&[]), 4).unwrap().is_empty());
        assert_eq!(minimal_word(&p(&[1]), 3).unwrap().letters(), &[0]);
        assert_eq!(minimal_word(&p(&[2]), 3).unwrap().letters(), &[0, 1]);
        let w = minimal_word(&p(&[5, 2, 1, 1, 1]), 4).unwrap();
        assert_eq!(w.act_on_core(&p(&[])).unwrap(), p(&[5, 2, 1, 1, 1]));
        assert_eq!(serde_json::to_string(&minimal_word(&p(&[2]), 3).unwrap()).unwrap(), "[0,1]");
    }

    #[test]
    fn minimal_words_grow_strictly() {
        for n in 2..=6 {
            for lam in cores_up_to(n, 25).unwrap() {
                let w = minimal_word(&lam, n).unwrap();
                let mut current = p(&[]);
                for &l in w.letters() {
                    let next = apply_generator_core(l, &current, n).unwrap();
                    assert!(next.size() > current.size(), "{lam} n={n}");
                    current = next;
                }
                assert_eq!(current, lam);
                assert_eq!(w, minimal_word(&lam, n).unwrap());
            }
        }
    }

    #[test]
    fn translation_decomposition_examples() {
        let d = translation_decomposition(&p(&[]), 4).unwrap();
        assert_eq!(d.beta, vec![0; 4]);
        assert_eq!(d.u, vec![1, 2, 3, 4]);

        let lam = p(&[5, 2, 1, 1, 1]);
        let d = translation_decomposition(&lam, 4).unwrap();
        assert_eq!(d.beta, vec![2, 0, 0, -2]);
        // u sends e_n to e_r with r = lambda_1 mod n.
        assert_eq!(d.u[3], 1);
    }

    #[test]
    fn translation_decomposition_matches_the_word() {
        for n in 2..=6 {
            for lam in cores_up_to(n, 20).unwrap() {
                let w = minimal_word(&lam, n).unwrap();
                let d = translation_decomposition(&lam, n).unwrap();
                assert!(same_point(&w.act(&Point::origin(n)), &Point::new(1, d.beta.clone()).unwrap()));
                for x in samples(n) {
                    assert_eq!(d.act(&x), w.act(&x), "{lam} n={n}");
                    assert_eq!(d.act_inverse(&x), w.act_inverse(&x), "{lam} n={n}");
                }
                // u(n) = r with r = lambda_1 mod n in 1..=n, and u(1) = s with
                // 1 - s = l(lambda) mod n.
                let r = (lam.first_part() + n - 1) % n + 1;
                assert_eq!(d.u[n - 1], r);
                let s = (n + 1 - lam.length() % n - 1) % n + 1;
                assert_eq!(d.u[0], s);
            }
        }
    }

    #[test]
    fn phi_examples() {
        for n in 2..=5 {
            assert_eq!(phi_map(&p(&[]), n).unwrap(), AlcoveCoords::zero(n));
        }
        let lam = p(&[5, 2, 1, 1, 1]);
        assert_eq!(phi_map(&lam, 4).unwrap(), psi(&lam, 4).unwrap());
    }

    #[test]
    fn phi_agrees_with_psi_on_small_cores() {
        for n in 2..=6 {
            for lam in cores_up_to(n, 30).unwrap() {
                assert_eq!(phi_map(&lam, n).unwrap(), psi(&lam, n).unwrap(), "{lam} n={n}");
            }
        }
    }

    #[test]
    fn phi_row_and_column_sums() {
        for n in 2..=6 {
            for lam in cores_up_to(n, 25).unwrap() {
                let k = phi_map(&lam, n).unwrap();
                assert!(is_dominant_alcove_coords(k.tableau()));
                let col: i64 = (1..n).map(|i| k.get(i, n - 1)).sum();
                let row: i64 = (1..n).map(|j| k.get(1, j)).sum();
                assert_eq!(col, lam.first_part() as i64);
                assert_eq!(row, lam.length() as i64);
            }
        }
    }

    #[test]
    fn hyperplane_evaluations() {
        for n in 2..=6 {
            for lam in cores_up_to(n, 25).unwrap() {
                let y = inverse_image_of_rho(&lam, n).unwrap();
                let l1 = lam.first_part() as i64;
                let len = lam.length() as i64;
                assert_eq!(y.inner(&gamma(n)), half(n) + l1);
                assert_eq!(y.inner(&big_gamma(n)), half(n) + len);

                let r = lam.first_part() % n;
                let vr = vertex_image(&lam, n, r).unwrap();
                assert_eq!(vr.inner(&gamma(n)), Ratio::from_integer(l1));
                let s_minus_1 = (n - lam.length() % n) % n;
                let vs = vertex_image(&lam, n, s_minus_1).unwrap();
                assert_eq!(vs.inner(&big_gamma(n)), Ratio::from_integer(len));

                assert!(hook_identity_check(&lam, n).unwrap());
            }
        }
    }

    #[test]
    fn hook_identity_examples() {
        assert!(hook_identity_check(&p(&[]), 3).unwrap());
        let lam = p(&[5, 2, 1, 1, 1]);
        assert!(hook_identity_check(&lam, 4).unwrap());
        assert_eq!(lam.first_hook() + 4, 13);
    }
}
