//! The eight acceptance criteria. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

#![allow(clippy::needless_range_loop)]

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lumbral_core::algebra::{int, rat, Rational};
use lumbral_core::families::{
    bell_classical_upto, degenerate_bernoulli, degenerate_dowling_gf, degenerate_dowling_upto, dobinski_eval,
    dowling_classical_upto, fully_degenerate_bell, fully_degenerate_bell_gf, fully_degenerate_bell_upto,
    fully_degenerate_dowling_gf, fully_degenerate_dowling_upto, partial_degenerate_bell_gf,
    partial_degenerate_bell_upto, relative_error,
};
use lumbral_core::kernels::Lambda;
use lumbral_core::partitions::{bell_number, count_partitions, enumerate_colored_partitions};
use lumbral_core::triangles::{r_whitney2, stirling2, TableKind};
use lumbral_core::umbral::{sheffer_generate, ShefferPair};
use lumbral_core::verify::{
    default_lambda_samples, verify_with, FaultInjection, IdentityId, SuiteConfig, VerificationReport,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn grid_lambdas() -> Vec<Rational> {
    vec![rat(1, 2), rat(-1, 3), rat(2, 5), rat(3, 4)]
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_report(r: &VerificationReport, need_certified: bool) -> Outcome {
    ensure(r.passed(), || format!("{} failed at {:?}", r.identity, r.witness.as_ref().map(|w| &w.point)))?;
    ensure(!need_certified || r.certified_polynomial_in_lambda, || {
        format!(
            "{} not certified: {} samples for bound {}",
            r.identity, r.passing_lambda_samples, r.lambda_degree_bound
        )
    })
}

fn run_ids(ids: &[IdentityId], n_max: usize, config: &SuiteConfig, need_certified: bool) -> Outcome {
    for &id in ids {
        let report = verify_with(id, n_max, config).map_err(|e| format!("{id}: {e}"))?;
        check_report(&report, need_certified)?;
    }
    Ok(())
}

fn dual_path() -> Outcome {
    let config =
        SuiteConfig { lambda_samples: Some(grid_lambdas()), m_values: vec![1, 2, 3], ..SuiteConfig::default() };
    run_ids(
        &[IdentityId::BellTriangleSum, IdentityId::FamilyDualPath, IdentityId::DowlingGeneratingFunction],
        12,
        &config,
        false,
    )?;
    for l in grid_lambdas() {
        let lambda = Lambda::new(l.clone()).unwrap();
        ensure(fully_degenerate_bell_upto(12, &lambda) == fully_degenerate_bell_gf(12, &lambda), || {
            format!("fully degenerate Bell, lambda = {l}")
        })?;
        ensure(partial_degenerate_bell_upto(12, &lambda) == partial_degenerate_bell_gf(12, &lambda), || {
            format!("partially degenerate Bell, lambda = {l}")
        })?;
        for m in 1..=3 {
            ensure(
                fully_degenerate_dowling_upto(12, m, &lambda) == fully_degenerate_dowling_gf(12, m, &lambda),
                || format!("fully degenerate Dowling, m = {m}, lambda = {l}"),
            )?;
            ensure(degenerate_dowling_upto(12, m, &lambda) == degenerate_dowling_gf(12, m, &lambda), || {
                format!("degenerate Dowling, m = {m}, lambda = {l}")
            })?;
        }
    }
    Ok(())
}

fn orthogonality() -> Outcome {
    let config = SuiteConfig {
        lambda_samples: Some(grid_lambdas()),
        m_values: vec![1, 2, 3],
        r_values: vec![0, 1, 2],
        ..SuiteConfig::default()
    };
    run_ids(
        &[
            IdentityId::StirlingOrthogonality,
            IdentityId::DegenerateStirlingOrthogonality,
            IdentityId::WhitneyOrthogonality,
            IdentityId::RWhitneyOrthogonality,
        ],
        12,
        &config,
        false,
    )
}

fn partition_oracle() -> Outcome {
    let config =
        SuiteConfig { m_values: vec![1, 2, 3], r_values: vec![0, 1, 2], oracle_size: 8, ..SuiteConfig::default() };
    run_ids(&[IdentityId::WhitneyPartitionOracle], 8, &config, false)?;
    for m in 1..=3u32 {
        for r in 0..=2usize {
            let table = r_whitney2(8, m, r as u32);
            for n in 0..=8 - r {
                for k in 0..=n {
                    let count = enumerate_colored_partitions(n, k, m, r, 8).map_err(|e| e.to_string())?;
                    ensure(Rational::from_integer(count.into()) == *table.entry(n, k), || {
                        format!("r-Whitney m={m} r={r} ({n},{k})")
                    })?;
                }
            }
        }
    }
    let s2 = stirling2(9);
    for n in 0..=7 {
        for k in 0..=n {
            let count = enumerate_colored_partitions(n, k, 1, 1, 8).map_err(|e| e.to_string())?;
            let brute = count_partitions(n + 1, k + 1);
            ensure(count == BigUint::from(brute), || format!("coloured count vs brute force at ({n},{k})"))?;
            ensure(Rational::from_integer(brute.into()) == *s2.entry(n + 1, k + 1), || {
                format!("S2({}, {})", n + 1, k + 1)
            })?;
        }
    }
    Ok(())
}

fn basis_expansions() -> Outcome {
    let config = &SuiteConfig { m_values: vec![1, 2, 3], k_values: vec![1, 2, 3], ..SuiteConfig::default() };
    let ids = [
        IdentityId::BellBasisRoundTrip,
        IdentityId::BernoulliInBell,
        IdentityId::FallingInBell,
        IdentityId::PolyBellInBell,
        IdentityId::BellInBernoulli2,
        IdentityId::DowlingBasisRoundTrip,
        IdentityId::BernoulliInDowling,
        IdentityId::FallingInDowling,
        IdentityId::DowlingInBell,
        IdentityId::BellAddition,
        IdentityId::ScaledBellInDowling,
    ];
    let reports: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = ids.iter().map(|&id| s.spawn(move || verify_with(id, 8, config))).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for report in reports {
        check_report(&report.map_err(|e| e.to_string())?, true)?;
    }
    Ok(())
}

fn dobinski() -> Outcome {
    let (lambda, x) = (rat(1, 10), int(1));
    for n in 0..=6 {
        let (approx, exact) = dobinski_eval(n, &lambda, &x, 200).map_err(|e| e.to_string())?;
        let err = relative_error(approx, exact);
        ensure(err < 1e-8, || format!("n = {n}: relative error {err:e}"))?;
    }
    Ok(())
}

fn classical_limits() -> Outcome {
    let expected = [1u64, 1, 2, 5, 15, 52, 203];
    for (n, &b) in expected.iter().enumerate() {
        ensure(bell_number(n) == b, || format!("brute-force Bell({n})"))?;
        let phi = fully_degenerate_bell(n, &Lambda::classical());
        ensure(phi.eval(&int(1)) == int(b as i64), || format!("phi_(n,0)(1) at n = {n}"))?;
    }
    let d1 = dowling_classical_upto(8, 1);
    let full = fully_degenerate_dowling_upto(8, 1, &Lambda::classical());
    for n in 0..=8 {
        let bell = int(bell_number(n + 1) as i64);
        ensure(d1[n].eval(&int(1)) == bell && full[n].eval(&int(1)) == bell, || format!("D_1({n},1)"))?;
    }
    ensure(bell_classical_upto(8) == fully_degenerate_bell_upto(8, &Lambda::classical()), || {
        "Bell polynomials at lambda = 0".into()
    })?;
    ensure(degenerate_bernoulli(1, &Lambda::classical()).eval(&int(0)) == rat(-1, 2), || "beta_(1,0)".into())?;
    run_ids(&[IdentityId::ClassicalLimit], 8, &SuiteConfig::default(), false)
}

fn biorthogonality() -> Outcome {
    let n_max = 10;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let samples = default_lambda_samples(4);
    let mut pairs = Vec::new();
    for l in &samples {
        let lambda = Lambda::new(l.clone()).unwrap();
        pairs.push(("bell".to_string(), ShefferPair::bell(&lambda, n_max)));
        for m in 1..=3 {
            pairs.push((format!("dowling m={m}"), ShefferPair::dowling(m, &lambda, n_max).unwrap()));
        }
    }
    for i in 0..20 {
        let lambda = Lambda::new(samples[i % samples.len()].clone()).unwrap();
        pairs.push((format!("random #{i}"), ShefferPair::random(&mut rng, &lambda, n_max)));
    }
    for (name, pair) in pairs {
        let seq = sheffer_generate(&pair, n_max).map_err(|e| format!("{name}: {e}"))?;
        if let Some((n, k)) = seq.biorthogonality_failure() {
            return Err(format!("{name} at lambda = {}: (n, k) = ({n}, {k})", pair.lambda().value()));
        }
    }
    Ok(())
}

fn fault_detection() -> Outcome {
    let faulty = |table, n, k| SuiteConfig {
        fault: Some(FaultInjection { table, n, k, delta: int(1) }),
        ..SuiteConfig::default()
    };
    let report = verify_with(IdentityId::BellTriangleSum, 6, &faulty(TableKind::DegStirling2, 4, 2))
        .map_err(|e| e.to_string())?;
    ensure(!report.passed(), || "corrupted degenerate Stirling entry went unnoticed".into())?;
    let witness = report.witness.ok_or("no witness")?;
    ensure(witness.point.n == 4 && witness.lhs != witness.rhs, || format!("bad witness {witness:?}"))?;

    let report =
        verify_with(IdentityId::DowlingInBell, 6, &faulty(TableKind::DegWhitney2, 3, 1)).map_err(|e| e.to_string())?;
    ensure(!report.passed(), || "corrupted degenerate Whitney entry went unnoticed".into())?;
    let witness = report.witness.ok_or("no witness")?;
    ensure(witness.point.n == 3 && witness.lhs != witness.rhs, || format!("bad witness {witness:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("dual-path equality", Duration::from_secs(10), dual_path),
        ("orthogonality suites", Duration::from_secs(10), orthogonality),
        ("combinatorial oracle", Duration::from_secs(30), partition_oracle),
        ("basis expansions certified in lambda", Duration::from_secs(60), basis_expansions),
        ("Dobinski partial sums", Duration::from_secs(1), dobinski),
        ("classical limits", Duration::from_secs(5), classical_limits),
        ("engine biorthogonality", Duration::from_secs(10), biorthogonality),
        ("fault detection", Duration::from_secs(5), fault_detection),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        let over = if elapsed > budget { format!(" (over the {budget:?} budget)") } else { String::new() };
        println!("criterion {}: {status} {name} [{:.2?}]{over}", i + 1, elapsed);
        if let Err(msg) = outcome {
            println!("    {msg}");
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
