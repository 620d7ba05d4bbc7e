//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::Ratio;

use shi_core::abacus::level_vector;
use shi_core::affine::{
    big_gamma, gamma, hook_identity_check, inverse_image_of_rho, phi_map, vertex_image,
};
use shi_core::genfunc::{base_theta, brute, recursion, WallQuery};
use shi_core::partitions::{cores_up_to, partitions_with_first_hook, Partition};
use shi_core::shi::{
    enumerate_dominant_alcoves, enumerate_regions, fuss_catalan, neighbor_wall_oracle, psi,
    psi_inverse, region_from_alcove, AlcoveCoords, RegionTableau, Root, Tableau,
    DEFAULT_REGION_CAP,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn regions(n: usize, m: usize) -> Result<Vec<RegionTableau>, String> {
    enumerate_regions(n, m, DEFAULT_REGION_CAP).map_err(|e| e.to_string())
}

fn query(n: usize, m: usize, root: Root) -> WallQuery {
    WallQuery::new(n, m, root.u, root.v).expect("root in range")
}

fn region_count() -> Outcome {
    let start = Instant::now();
    let found = regions(3, 2)?.len();
    ensure(found == 12, || format!("n=3 m=2 gave {found} regions"))?;
    let mut total = 0;
    for n in 2..=7 {
        for m in 1..=3 {
            let found = regions(n, m)?.len() as u128;
            let expected = fuss_catalan(n, m).unwrap();
            ensure(found == expected, || format!("n={n} m={m}: {found} != {expected}"))?;
            total += found;
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{total} regions over n<=7, m<=3"))
}

fn theta_count() -> Outcome {
    let start = Instant::now();
    for n in 2..=7 {
        for m in 1..=4 {
            let theta = Root::highest(n);
            let found = regions(n, m)?
                .iter()
                .filter(|e| e.is_separating_wall(theta))
                .count() as u64;
            let expected = (m as u64).pow(n as u32 - 2);
            ensure(found == expected, || format!("n={n} m={m}: {found} != {expected}"))?;
        }
    }
    within(Duration::from_secs(120), start)?;
    Ok("n<=7, m<=4".into())
}

fn closed_form() -> Outcome {
    for n in 2..=6 {
        for m in 1..=3 {
            let q = query(n, m, Root::highest(n));
            let bf = brute(&q, DEFAULT_REGION_CAP).map_err(|e| e.to_string())?;
            let base = base_theta(n, m).map_err(|e| e.to_string())?;
            ensure(bf == base, || format!("n={n} m={m}: {bf} != {base}"))?;
        }
    }
    Ok("n<=6, m<=3".into())
}

fn headline_example() -> Outcome {
    let q = query(7, 2, Root { u: 2, v: 4 });
    let rec = recursion(&q).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let bf = brute(&q, DEFAULT_REGION_CAP).map_err(|e| e.to_string())?;
    within(Duration::from_secs(60), start)?;
    ensure(rec == bf, || format!("recursion {rec} != brute {bf}"))?;
    let value = rec.eval_at_one();
    ensure(value == BigInt::from(781), || format!("F(1,1) = {value}"))?;
    let all = regions(7, 2)?.len();
    ensure(all == 7752, || format!("{all} regions in total"))?;
    Ok(format!("F(1,1) = {value} among {all} regions"))
}

fn full_recursion() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for n in 2..=6 {
        for m in 1..=3 {
            for root in Root::all(n) {
                let q = query(n, m, root);
                let rec = recursion(&q).map_err(|e| e.to_string())?;
                let bf = brute(&q, DEFAULT_REGION_CAP).map_err(|e| e.to_string())?;
                ensure(rec == bf, || format!("n={n} m={m} {root}: {rec} != {bf}"))?;
                cases += 1;
            }
        }
    }
    within(Duration::from_secs(600), start)?;
    Ok(format!("{cases} wall queries"))
}

fn bijection_round_trips() -> Outcome {
    let mut cores = 0;
    for n in 2..=6 {
        for lam in cores_up_to(n, 30).map_err(|e| e.to_string())? {
            let k = psi(&lam, n).map_err(|e| e.to_string())?;
            let back = psi_inverse(&k).map_err(|e| e.to_string())?;
            ensure(back == lam, || format!("{lam} n={n} came back as {back}"))?;
            cores += 1;
        }
    }
    let mut alcoves = 0;
    for n in 2..=5 {
        for k in enumerate_dominant_alcoves(n, 4).map_err(|e| e.to_string())? {
            let lam = psi_inverse(&k).map_err(|e| e.to_string())?;
            let again = psi(&lam, n).map_err(|e| e.to_string())?;
            ensure(again == k, || format!("{k} came back as {again}"))?;
            alcoves += 1;
        }
    }

    let lam = Partition::new(vec![5, 2, 1, 1, 1]).unwrap();
    let b = level_vector(&lam, 4).map_err(|e| e.to_string())?.b;
    ensure(b == vec![0, 3, 1, 1], || format!("level vector {b:?}"))?;
    let expected = Tableau::from_rows(4, &[vec![3, 1, 1], vec![1, 0], vec![1]]).unwrap();
    let k = psi(&lam, 4).map_err(|e| e.to_string())?;
    ensure(k.tableau() == &expected, || format!("psi gave {k}"))?;
    let back = psi_inverse(&AlcoveCoords::new(expected).unwrap()).map_err(|e| e.to_string())?;
    ensure(back == lam, || format!("psi_inverse gave {back}"))?;
    Ok(format!("{cores} cores, {alcoves} alcoves, worked example"))
}

fn theta_characterization() -> Outcome {
    for n in 2..=5 {
        for m in 1..=3 {
            let theta = Root::highest(n);
            let with_wall: BTreeSet<RegionTableau> = regions(n, m)?
                .into_iter()
                .filter(|e| e.is_separating_wall(theta))
                .collect();
            let mut via_psi = BTreeSet::new();
            let mut via_phi = BTreeSet::new();
            for lam in partitions_with_first_hook(n * (m - 1) + 1) {
                if !lam.is_core(n).unwrap() {
                    continue;
                }
                let k = psi(&lam, n).map_err(|e| e.to_string())?;
                via_psi.insert(region_from_alcove(&k, m).map_err(|e| e.to_string())?);
                let k = phi_map(&lam, n).map_err(|e| e.to_string())?;
                via_phi.insert(region_from_alcove(&k, m).map_err(|e| e.to_string())?);
            }
            ensure(via_psi == with_wall, || {
                format!("n={n} m={m}: psi gives {} regions, expected {}", via_psi.len(), with_wall.len())
            })?;
            ensure(via_phi == with_wall, || {
                format!("n={n} m={m}: phi gives {} regions, expected {}", via_phi.len(), with_wall.len())
            })?;
        }
    }
    Ok("n<=5, m<=3, through psi and phi".into())
}

fn geometry() -> Outcome {
    let mut cores = 0;
    for n in 2..=6 {
        let half = Ratio::new(n as i64 - 1, 2);
        for lam in cores_up_to(n, 25).map_err(|e| e.to_string())? {
            let l1 = lam.first_part() as i64;
            let len = lam.length() as i64;
            let y = inverse_image_of_rho(&lam, n).map_err(|e| e.to_string())?;
            ensure(y.inner(&gamma(n)) == half + l1, || format!("gamma: {lam} n={n}"))?;
            ensure(y.inner(&big_gamma(n)) == half + len, || format!("Gamma: {lam} n={n}"))?;

            let vr = vertex_image(&lam, n, lam.first_part() % n).map_err(|e| e.to_string())?;
            ensure(vr.inner(&gamma(n)) == Ratio::from_integer(l1), || {
                format!("vertex gamma: {lam} n={n}")
            })?;
            let s_minus_1 = (n - lam.length() % n) % n;
            let vs = vertex_image(&lam, n, s_minus_1).map_err(|e| e.to_string())?;
            ensure(vs.inner(&big_gamma(n)) == Ratio::from_integer(len), || {
                format!("vertex Gamma: {lam} n={n}")
            })?;

            let hook = hook_identity_check(&lam, n).map_err(|e| e.to_string())?;
            ensure(hook, || format!("hook identity: {lam} n={n}"))?;

            let k = phi_map(&lam, n).map_err(|e| e.to_string())?;
            let col: i64 = (1..n).map(|i| k.get(i, n - 1)).sum();
            let row: i64 = (1..n).map(|j| k.get(1, j)).sum();
            ensure((col, row) == (l1, len), || format!("sums of {k}: {lam} n={n}"))?;
            cores += 1;
        }
    }
    Ok(format!("{cores} cores"))
}

fn wall_oracle() -> Outcome {
    let mut pairs = 0;
    for n in 2..=6 {
        for m in 1..=3 {
            for e in regions(n, m)? {
                for root in Root::all(n) {
                    let (a, b) = (e.is_separating_wall(root), neighbor_wall_oracle(&e, root));
                    ensure(a == b, || format!("{e} {root}: criterion {a}, oracle {b}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} region/root pairs"))
}

fn psi_phi_agreement() -> Outcome {
    let mut cores = 0;
    let mut mismatches = Vec::new();
    for n in 2..=6 {
        for lam in cores_up_to(n, 25).map_err(|e| e.to_string())? {
            let a = psi(&lam, n).map_err(|e| e.to_string())?;
            let b = phi_map(&lam, n).map_err(|e| e.to_string())?;
            if a != b {
                mismatches.push(format!("{lam} n={n}: psi {a}, phi {b}"));
            }
            cores += 1;
        }
    }
    ensure(mismatches.is_empty(), || {
        format!("{} counterexamples, first: {}", mismatches.len(), mismatches[0])
    })?;
    Ok(format!("{cores} cores"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("region count", region_count),
        ("theta wall count", theta_count),
        ("closed form for theta", closed_form),
        ("781 example", headline_example),
        ("recursion = brute force", full_recursion),
        ("bijection round trips", bijection_round_trips),
        ("theta walls and first hooks", theta_characterization),
        ("geometry identities", geometry),
        ("wall oracle equivalence", wall_oracle),
        ("psi = phi", psi_phi_agreement),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}; {took:.2?})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {reason}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
