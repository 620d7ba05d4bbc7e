//! Property batteries over bounded families of cores, alcoves and regions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::Serialize;

use crate::affine::{
    big_gamma, gamma, hook_identity_check, inverse_image_of_rho, minimal_word, phi_map,
    translation_decomposition, vertex_image, Point,
};
use crate::error::Result;
use crate::genfunc::{base_theta, brute, recursion, rho_op, WallQuery};
use crate::partitions::{cores_up_to, partitions_with_first_hook, Partition};
use crate::shi::{
    conjugate_tableau, enumerate_dominant_alcoves, enumerate_regions, fuss_catalan,
    neighbor_wall_oracle, psi, psi_inverse, region_from_alcove, remove_first_column, stat_c,
    stat_r, RegionTableau, Root,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Bijection,
    Walls,
    Geometry,
    Genfunc,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "bijection" => Ok(Suite::Bijection),
            "walls" => Ok(Suite::Walls),
            "geometry" => Ok(Suite::Geometry),
            "genfunc" => Ok(Suite::Genfunc),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Bijection => "bijection",
            Suite::Walls => "walls",
            Suite::Geometry => "geometry",
            Suite::Genfunc => "genfunc",
        };
        f.write_str(name)
    }
}

/// Ranges swept by the checks. Ranks run over `2..=max_n` and levels over
/// `1..=max_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_n: usize,
    pub max_m: usize,
    pub max_core_size: usize,
    pub max_entry: usize,
    pub cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 5,
            max_m: 3,
            max_core_size: 20,
            max_entry: 3,
            cap: crate::shi::DEFAULT_REGION_CAP,
        }
    }
}

const MAX_REPORTED_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    /// The first few failing cases.
    pub examples: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_REPORTED_FAILURES {
                self.examples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub bounds: Bounds,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

fn ranks(b: &Bounds) -> std::ops::RangeInclusive<usize> {
    2..=b.max_n
}

fn levels(b: &Bounds) -> std::ops::RangeInclusive<usize> {
    1..=b.max_m
}

fn cores(b: &Bounds) -> Result<Vec<(usize, Partition)>> {
    let mut out = Vec::new();
    for n in ranks(b) {
        out.extend(cores_up_to(n, b.max_core_size)?.into_iter().map(|c| (n, c)));
    }
    Ok(out)
}

fn regions(b: &Bounds) -> Result<Vec<(usize, usize, Vec<RegionTableau>)>> {
    let mut out = Vec::new();
    for n in ranks(b) {
        for m in levels(b) {
            out.push((n, m, enumerate_regions(n, m, b.cap)?));
        }
    }
    Ok(out)
}

pub fn bijection_checks(b: &Bounds) -> Result<Vec<CheckResult>> {
    let mut forward = CheckResult::new("psi_inverse(psi(core)) = core");
    let mut agreement = CheckResult::new("phi_map(core) = psi(core)");
    for (n, lam) in cores(b)? {
        let k = psi(&lam, n)?;
        forward.record(psi_inverse(&k)? == lam, || format!("{lam} n={n}"));
        agreement.record(phi_map(&lam, n)? == k, || format!("{lam} n={n}"));
    }

    let mut backward = CheckResult::new("psi(psi_inverse(k)) = k");
    for n in ranks(b) {
        for k in enumerate_dominant_alcoves(n, b.max_entry)? {
            let lam = psi_inverse(&k)?;
            backward.record(psi(&lam, n)? == k, || format!("{k} n={n}"));
        }
    }
    Ok(vec![forward, backward, agreement])
}

pub fn wall_checks(b: &Bounds) -> Result<Vec<CheckResult>> {
    let mut count = CheckResult::new("region count = Fuss-Catalan number");
    let mut oracle = CheckResult::new("separating wall <=> neighbor oracle");
    let mut theta = CheckResult::new("theta-wall count = m^(n-2)");
    let mut stability = CheckResult::new("column removal keeps inner walls");
    let mut conjugation = CheckResult::new("conjugation swaps walls and statistics");
    let mut characterization = CheckResult::new("theta walls <=> cores with h_11 = n(m-1)+1");

    for (n, m, all) in regions(b)? {
        count.record(
            fuss_catalan(n, m) == Some(all.len() as u128),
            || format!("n={n} m={m}: {} regions", all.len()),
        );
        let mut with_theta = BTreeSet::new();
        for e in &all {
            for root in Root::all(n) {
                let wall = e.is_separating_wall(root);
                oracle.record(wall == neighbor_wall_oracle(e, root), || format!("{e} {root}"));
                let c = conjugate_tableau(e);
                conjugation.record(wall == c.is_separating_wall(root.conjugate(n)), || {
                    format!("{e} {root}")
                });
            }
            let c = conjugate_tableau(e);
            conjugation.record(
                (stat_r(&c), stat_c(&c)) == (stat_c(e), stat_r(e)),
                || format!("{e} statistics"),
            );
            if n >= 3 {
                let smaller = remove_first_column(e)?;
                for root in Root::all(n - 1) {
                    stability.record(
                        e.is_separating_wall(root) == smaller.is_separating_wall(root),
                        || format!("{e} {root}"),
                    );
                }
            }
            if e.is_separating_wall(Root::highest(n)) {
                with_theta.insert(e.clone());
            }
        }
        theta.record(
            with_theta.len() as u128 == (m as u128).pow(n as u32 - 2),
            || format!("n={n} m={m}: {}", with_theta.len()),
        );
        theta_characterization(n, m, &with_theta, &mut characterization)?;
    }
    Ok(vec![count, oracle, theta, stability, conjugation, characterization])
}

/// Maps each core with `h_11 = n(m-1)+1` to a region through `psi` and through
/// `phi_map`, and compares the images with the regions having a theta wall.
pub(crate) fn theta_characterization(
    n: usize,
    m: usize,
    with_theta: &BTreeSet<RegionTableau>,
    check: &mut CheckResult,
) -> Result<()> {
    let hook = n * (m - 1) + 1;
    let mut via_psi = BTreeSet::new();
    let mut via_phi = BTreeSet::new();
    for lam in partitions_with_first_hook(hook) {
        if !lam.is_core(n)? {
            continue;
        }
        let k = psi(&lam, n)?;
        let e = region_from_alcove(&k, m)?;
        // Only the theta entry of the alcove may exceed the region's entry.
        let same_below_theta = Root::all(n)
            .filter(|r| *r != Root::highest(n))
            .all(|r| k.tableau().at(r) == e.tableau().at(r));
        check.record(same_below_theta, || format!("{lam} n={n} m={m}: {k} vs {e}"));
        check.record(
            (stat_r(&e), stat_c(&e)) == (lam.length() as u64, lam.first_part() as u64),
            || format!("{lam} n={n} m={m}: statistics of {e}"),
        );
        via_psi.insert(e);
        via_phi.insert(region_from_alcove(&phi_map(&lam, n)?, m)?);
    }
    check.record(&via_psi == with_theta, || {
        format!("n={n} m={m}: psi image has {} regions, expected {}", via_psi.len(), with_theta.len())
    });
    check.record(&via_phi == with_theta, || {
        format!("n={n} m={m}: phi image has {} regions, expected {}", via_phi.len(), with_theta.len())
    });
    Ok(())
}

pub fn geometry_checks(b: &Bounds) -> Result<Vec<CheckResult>> {
    let mut first_part = CheckResult::new("<w^-1(rho/n), gamma> = lambda_1 + (n-1)/2");
    let mut first_part_vertex = CheckResult::new("<w^-1(Lambda_r), gamma> = lambda_1");
    let mut length = CheckResult::new("<w^-1(rho/n), Gamma> = l(lambda) + (n-1)/2");
    let mut length_vertex = CheckResult::new("<w^-1(Lambda_(s-1)), Gamma> = l(lambda)");
    let mut hook = CheckResult::new("n<w^-1(rho/n), theta> = lambda_1 + l(lambda) + n - 1");
    let mut sums = CheckResult::new("alcove column/row sums = lambda_1, l(lambda)");
    let mut decomposition = CheckResult::new("t_beta u acts like the minimal word");

    for (n, lam) in cores(b)? {
        let half = Ratio::new(n as i64 - 1, 2);
        let l1 = lam.first_part() as i64;
        let len = lam.length() as i64;
        let y = inverse_image_of_rho(&lam, n)?;
        first_part.record(y.inner(&gamma(n)) == half + l1, || format!("{lam} n={n}"));
        length.record(y.inner(&big_gamma(n)) == half + len, || format!("{lam} n={n}"));

        let r = lam.first_part() % n;
        let vr = vertex_image(&lam, n, r)?;
        first_part_vertex.record(vr.inner(&gamma(n)) == Ratio::from_integer(l1), || {
            format!("{lam} n={n}")
        });
        let s_minus_1 = (n - lam.length() % n) % n;
        let vs = vertex_image(&lam, n, s_minus_1)?;
        length_vertex.record(vs.inner(&big_gamma(n)) == Ratio::from_integer(len), || {
            format!("{lam} n={n}")
        });
        hook.record(hook_identity_check(&lam, n)?, || format!("{lam} n={n}"));

        let k = phi_map(&lam, n)?;
        let col: i64 = (1..n).map(|i| k.get(i, n - 1)).sum();
        let row: i64 = (1..n).map(|j| k.get(1, j)).sum();
        sums.record((col, row) == (l1, len), || format!("{lam} n={n}: {k}"));

        let w = minimal_word(&lam, n)?;
        let d = translation_decomposition(&lam, n)?;
        let mut samples = vec![Point::origin(n), Point::rho_over_n(n)];
        samples.extend((0..n).map(|j| Point::fundamental_weight(n, j)));
        let agree = samples
            .iter()
            .all(|x| d.act(x) == w.act(x) && d.act_inverse(x) == w.act_inverse(x));
        decomposition.record(agree, || format!("{lam} n={n}"));
    }
    Ok(vec![
        first_part,
        first_part_vertex,
        length,
        length_vertex,
        hook,
        sums,
        decomposition,
    ])
}

pub fn genfunc_checks(b: &Bounds) -> Result<Vec<CheckResult>> {
    let mut closed_form = CheckResult::new("brute(theta) = p^m q^m [m]^(n-2)");
    let mut rec = CheckResult::new("recursion = brute for every root");
    let mut symmetry = CheckResult::new("F(alpha_uv)(p,q) = F(alpha_(n-v,n-u))(q,p)");
    let mut sizes = CheckResult::new("sum of coefficients = number of regions with the wall");

    for n in ranks(b) {
        for m in levels(b) {
            let all = enumerate_regions(n, m, b.cap)?;
            let mut polys = Vec::new();
            for root in Root::all(n) {
                let q = WallQuery::new(n, m, root.u, root.v)?;
                let bf = brute(&q, b.cap)?;
                let rc = recursion(&q)?;
                rec.record(bf == rc, || format!("n={n} m={m} {root}: brute {bf}, recursion {rc}"));
                let count = all.iter().filter(|e| e.is_separating_wall(root)).count();
                sizes.record(bf.eval_at_one() == BigInt::from(count), || {
                    format!("n={n} m={m} {root}")
                });
                if root == Root::highest(n) {
                    let base = base_theta(n, m)?;
                    closed_form.record(bf == base, || format!("n={n} m={m}: {bf} vs {base}"));
                }
                polys.push((root, bf));
            }
            for (root, f) in &polys {
                let c = root.conjugate(n);
                let g = &polys.iter().find(|(r, _)| *r == c).expect("conjugate root").1;
                symmetry.record(*f == rho_op(g), || format!("n={n} m={m} {root}"));
            }
        }
    }
    Ok(vec![closed_form, rec, symmetry, sizes])
}

pub fn run_suite(suite: Suite, bounds: &Bounds) -> Result<Report> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::All | Suite::Bijection) {
        checks.extend(bijection_checks(bounds)?);
    }
    if matches!(suite, Suite::All | Suite::Walls) {
        checks.extend(wall_checks(bounds)?);
    }
    if matches!(suite, Suite::All | Suite::Geometry) {
        checks.extend(geometry_checks(bounds)?);
    }
    if matches!(suite, Suite::All | Suite::Genfunc) {
        checks.extend(genfunc_checks(bounds)?);
    }
    Ok(Report {
        suite,
        bounds: *bounds,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            max_n: 4,
            max_m: 2,
            max_core_size: 12,
            max_entry: 2,
            ..Bounds::default()
        }
    }

    #[test]
    fn every_suite_passes_on_small_bounds() {
        for suite in [Suite::Bijection, Suite::Walls, Suite::Geometry, Suite::Genfunc] {
            let report = run_suite(suite, &small()).unwrap();
            assert!(report.passed(), "{report:?}");
            assert!(report.checks.iter().all(|c| c.cases > 0), "{report:?}");
        }
    }

    #[test]
    fn empty_bounds_pass_vacuously() {
        let bounds = Bounds {
            max_n: 1,
            ..Bounds::default()
        };
        let report = run_suite(Suite::All, &bounds).unwrap();
        assert!(report.passed());
        assert!(report.checks.iter().all(|c| c.cases == 0));
    }

    #[test]
    fn failures_are_counted_and_sampled() {
        let mut c = CheckResult::new("x");
        for i in 0..10 {
            c.record(i % 2 == 0, || i.to_string());
        }
        assert_eq!((c.cases, c.failures), (10, 5));
        assert_eq!(c.examples, vec!["1", "3", "5", "7", "9"]);
        assert!(!c.passed());
    }

    #[test]
    fn suite_names() {
        assert_eq!("genfunc".parse::<Suite>().unwrap(), Suite::Genfunc);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(Suite::Walls.to_string(), "walls");
    }
}
