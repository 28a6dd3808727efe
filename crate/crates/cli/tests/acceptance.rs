//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the PASS/FAIL lines are always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fano_chern::catalog::{Catalog, Classification, ExceptionalCase, PolarizedPair, Positivity};
use fano_chern::families::{chk_verdict, enumerate, enumerate_ci, product_nonexample, FamilyKind, FamilySpec, Status};
use fano_chern::minimalfamily::{
    ch_hx, ci_character_direct, ci_family_dimension, ci_t_images, hx_ring, verify_character_formula_symbolic,
    verify_todd_identity, verify_universal_family_identities,
};
use fano_chern::numeric::{int, inv_factorial, pow_int, rat};
use fano_chern::rings::GradedClass;
use fano_chern::schubert::sigma;
use fano_chern::Rational;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn status(pos: bool, nef: bool) -> Status {
    if pos {
        Status::Positive
    } else if nef {
        Status::NefOnly
    } else {
        Status::Neither
    }
}

fn grassmannian_ch2() -> Outcome {
    let mut count = 0;
    for n in 4..=12u32 {
        for k in 2..=n / 2 {
            let spec = FamilySpec::Grassmannian { k, n };
            let class = chk_verdict(&spec, 2).map_err(|e| e.to_string())?.class.unwrap();
            let g = class.ring().clone();
            let (n, k) = (n as i64, k as i64);
            let expected = &sigma(&g, &[2]).unwrap().scale(&rat(n + 2 - 2 * k, 2))
                - &sigma(&g, &[1, 1]).unwrap().scale(&rat(n - 2 - 2 * k, 2));
            ensure(class == expected, || format!("G({k},{n}): {class} != {expected}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} Grassmannians"))
}

fn thresholds() -> Outcome {
    let mut count = 0;
    let mut expect = |spec: &FamilySpec, k: u32, want: Status| -> Result<(), String> {
        let got = chk_verdict(spec, k).map_err(|e| e.to_string())?.status;
        count += 1;
        ensure(got == want, || format!("{spec} k={k}: ring says {got}, threshold says {want}"))
    };
    for kind in [
        FamilyKind::Grassmannian,
        FamilyKind::Orthogonal,
        FamilyKind::Symplectic,
        FamilyKind::GrassmannianHyperplane,
        FamilyKind::SymplecticDegenerate,
    ] {
        for spec in enumerate(kind, 1..=14, 1..=14) {
            let (k, n) = spec.k_n().unwrap();
            let want = match kind {
                FamilyKind::Grassmannian => status(2 * k <= n && n <= 2 * k + 1, 2 * k <= n && n <= 2 * k + 2),
                FamilyKind::Orthogonal => status(n == 3 * k + 2, 3 * k < n && n <= 3 * k + 3),
                FamilyKind::Symplectic => status(n == 2 * k || n + 2 == 3 * k, n == 2 * k || (3 * k <= n + 3 && n < 3 * k)),
                FamilyKind::GrassmannianHyperplane => status(n == 2 * k, 2 * k <= n && n <= 2 * k + 1),
                _ => status(n + 2 == 3 * k, 3 * k <= n + 3 && n < 3 * k),
            };
            expect(&spec, 2, want)?;
        }
    }
    for n in 1..=12u32 {
        for spec in enumerate_ci(n, 3) {
            let FamilySpec::CompleteIntersection { degrees, .. } = &spec else { unreachable!() };
            for k in 1..=5 {
                let s: Rational = degrees.iter().map(|&d| pow_int(d as i64, k)).sum();
                expect(&spec, k, status(s <= int(n as i64), s <= int(n as i64 + 1)))?;
            }
        }
    }
    Ok(format!("{count} verdicts"))
}

fn ci_cross_validation() -> Outcome {
    let mut count = 0;
    for n in 1..=12u32 {
        for spec in enumerate_ci(n, 3) {
            let FamilySpec::CompleteIntersection { degrees, .. } = &spec else { unreachable!() };
            if ci_family_dimension(n, degrees) < 0 {
                continue;
            }
            let input = ci_t_images(n, degrees, 5).map_err(|e| e.to_string())?;
            for k in 1..=5 {
                let formula = ch_hx(&input, k).map_err(|e| e.to_string())?;
                let direct = ci_character_direct(n, degrees, k, input.ell()).map_err(|e| e.to_string())?;
                ensure(formula == direct, || format!("{spec} k={k}: {formula} != {direct}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (family, k) pairs"))
}

fn derivation_suite() -> Outcome {
    let mut checks = 0;
    for n in 1..=10i64 {
        for d in 0..n {
            for report in [verify_universal_family_identities(n, d, 5), verify_character_formula_symbolic(n, d, 5)] {
                let report = report.map_err(|e| e.to_string())?;
                if let Some(f) = report.failures().next() {
                    return Err(format!("{} at {}: {} != {}", f.name, f.at, f.lhs, f.rhs));
                }
                checks += report.len();
            }
        }
    }
    let todd = verify_todd_identity(20);
    ensure(todd.all_hold() && todd.len() == 20, || "Todd identity".into())?;
    Ok(format!("{} identities", checks + todd.len()))
}

fn catalog_suite() -> Outcome {
    for m in 1..=6 {
        for case in [ExceptionalCase::A, ExceptionalCase::B, ExceptionalCase::C, ExceptionalCase::D, ExceptionalCase::E] {
            let pair = PolarizedPair::case(case, m).map_err(|e| e.to_string())?;
            ensure(pair.positivity_of_twist() == Positivity::Ample, || format!("{}: twist not ample", pair.label))?;
            let got = pair.classify().map_err(|e| e.to_string())?;
            ensure(got == Classification { case, m }, || format!("{}: classified as {got}", pair.label))?;
        }
    }
    let catalog = Catalog::standard(6, 8).map_err(|e| e.to_string())?;
    let mut exempt = 0;
    for pair in &catalog.pairs {
        if Catalog::is_lr_exception(pair) {
            exempt += 1;
            continue;
        }
        ensure(pair.extremal_l_degrees().iter().all(|x| *x == int(1)), || format!("{}: L.R != 1", pair.label))?;
    }
    let p1o3 = PolarizedPair::projective_space(1, 3).unwrap();
    ensure(p1o3.twist_class() == vec![1], || "(P^1,O(3)) twist".into())?;
    for d in 1..=8 {
        ensure(PolarizedPair::projective_space(d, 2).unwrap().twist_class() == vec![2], || format!("(P^{d},O(2)) twist"))?;
    }
    let report = catalog.validate();
    ensure(report.all_hold(), || format!("{:?}", report.failures().next()))?;
    Ok(format!("{} pairs, {exempt} exempt from L.R = 1", catalog.pairs.len()))
}

fn specializations() -> Outcome {
    let input = ci_t_images(9, &[3], 2).map_err(|e| e.to_string())?;
    let ell = GradedClass::generator(&hx_ring(2)).unwrap();
    let c1 = ch_hx(&input, 1).map_err(|e| e.to_string())?;
    ensure(c1 == ell.scale(&int(3)), || format!("cubic in P^9: c_1 = {c1}"))?;
    ensure(ci_character_direct(9, &[3], 1, &ell).unwrap() == c1, || "cubic direct".into())?;
    for n in 1..=10u32 {
        let input = ci_t_images(n, &[], n).map_err(|e| e.to_string())?;
        for k in 1..=n {
            let got = ch_hx(&input, k).map_err(|e| e.to_string())?;
            let want = input.ell().pow(k).scale(&(int(n as i64) * inv_factorial(k)));
            ensure(got == want, || format!("P^{n} k={k}: {got} != {want}"))?;
        }
    }
    Ok("cubic ninefold and P^1..P^10".into())
}

fn product_nonexamples() -> Outcome {
    for a in 1..=6 {
        for b in 1..=6 {
            let v = product_nonexample(a, b).map_err(|e| e.to_string())?;
            ensure(v == int(0), || format!("P^{a}xP^{b}: {v}"))?;
        }
    }
    Ok("36 products".into())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fano-chern"))
            .args(["census", "G", "--k-range", "2..4", "--n-range", "4..12", "--format", "csv"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.success() && second.status.success(), || format!("exit {:?}", first.status.code()))?;
    ensure(first.stdout == second.stdout, || "outputs differ".into())?;
    ensure(!first.stdout.is_empty(), || "empty output".into())?;
    Ok(format!("{} identical bytes", first.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("1 Grassmannian ch2 formula", grassmannian_ch2, Duration::from_secs(5)),
        ("2 positivity thresholds by ring computation", thresholds, Duration::from_secs(30)),
        ("3 CI cross-validation of the H_x formula", ci_cross_validation, Duration::from_secs(10)),
        ("4 universal-family derivation suite", derivation_suite, Duration::from_secs(10)),
        ("5 catalog suite", catalog_suite, Duration::from_secs(1)),
        ("6 cubic ninefold and projective spaces", specializations, Duration::from_secs(1)),
        ("7 product non-example", product_nonexamples, Duration::from_secs(1)),
        ("8 deterministic census output", determinism, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail}; {elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
