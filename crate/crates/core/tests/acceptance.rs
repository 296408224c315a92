//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use xlorentz::algebra::{
    bar_symmetry_check, casimir_check, check_commutator_tables, commutator_rules, expected_group_metric, group_metric,
    ladder_relations,
};
use xlorentz::dispersion::{
    covariance_deviation, plane_wave_current, spectral_deviation, spectrum, FloatRepresentation, FourMomentum,
    Tolerances, TransformKind, Transformation,
};
use xlorentz::reference::{compare_spin_half, compare_spin_one_matrices, compare_spin_one_states};
use xlorentz::rep::{state_count_evaluations, verify_action_table, verify_representation};
use xlorentz::report::VerificationReport;
use xlorentz::{ComplexScalar, HalfInteger, Representation};

type Outcome = Result<String, String>;

fn lambdas_to_two() -> impl Iterator<Item = HalfInteger> {
    (0..=4).map(HalfInteger::from_twice)
}

fn require(report: &VerificationReport, what: &str) -> Result<(), String> {
    let failures: Vec<String> = report.hard_failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(format!("{what}: {}", failures.join("; ")))
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn spin_half_golden() -> Outcome {
    let start = Instant::now();
    let rep = Representation::build(HalfInteger::HALF).map_err(|e| e.to_string())?;
    let report = compare_spin_half(&rep);
    let elapsed = start.elapsed();
    require(&report, "Λ = 1/2")?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{} matrices equal entry-for-entry in {elapsed:.2?}", report.checks.len()))
}

fn spin_one_states() -> Outcome {
    let rep = Representation::build(HalfInteger::ONE).map_err(|e| e.to_string())?;
    let report = compare_spin_one_states(rep.basis());
    require(&report, "Λ = 1 states")?;
    Ok(format!("{} states equal", rep.dim()))
}

fn spin_one_matrices() -> Outcome {
    let rep = Representation::build(HalfInteger::ONE).map_err(|e| e.to_string())?;
    let comparison = compare_spin_one_matrices(&rep);
    require(&comparison.report, "Λ = 1 displays")?;
    require(&check_commutator_tables(&rep), "Λ = 1 commutators")?;
    let off = comparison.ratios.iter().filter(|r| r.ratio != ComplexScalar::one()).count();
    Ok(format!(
        "Γ⁰, g, Jz, J± exact; Δ sparsity exact; {} of {} Δ entries differ from the display (soft)",
        off,
        comparison.ratios.len()
    ))
}

fn commutator_suite() -> Outcome {
    let start = Instant::now();
    let pairs = commutator_rules().len();
    let ladders = ladder_relations().len();
    if pairs != 45 {
        return Err(format!("{pairs} basis pairs, expected 45"));
    }
    for lambda in lambdas_to_two() {
        let rep = Representation::build(lambda).map_err(|e| e.to_string())?;
        require(&check_commutator_tables(&rep), &format!("Λ = {lambda}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("45 pairs and {ladders} ladder instances hold for Λ ≤ 2 in {elapsed:.2?}"))
}

fn casimir() -> Outcome {
    let mut values = Vec::new();
    for lambda in lambdas_to_two() {
        let rep = Representation::build(lambda).map_err(|e| e.to_string())?;
        require(&casimir_check(&rep), &format!("Λ = {lambda}"))?;
        // 2Λ(Λ+2) from the label alone
        let t = lambda.twice();
        let expected = ComplexScalar::from_fraction(t * (t + 4), 2);
        let c = xlorentz::algebra::casimir_matrix(&rep);
        if (0..rep.dim()).any(|i| c.get(i, i) != &expected) || !c.is_diagonal() {
            return Err(format!("Λ = {lambda}: C ≠ ({expected})·I"));
        }
        values.push(format!("{expected}"));
    }
    Ok(format!("C = {}·I and [C, G] = 0", values.join(", ")))
}

fn counting() -> Outcome {
    let published = [1, 4, 10, 20];
    for (twice, n) in published.iter().enumerate() {
        let c = state_count_evaluations(HalfInteger::from_twice(twice as i64));
        if c.formula != *n {
            return Err(format!("N_{} = {}, expected {n}", HalfInteger::from_twice(twice as i64), c.formula));
        }
    }
    for twice in 0..=12 {
        let c = state_count_evaluations(HalfInteger::from_twice(twice));
        let binomial = (twice as u64 + 3) * (twice as u64 + 2) * (twice as u64 + 1) / 6;
        if !c.consistent() || c.binomial != binomial {
            return Err(format!("Λ = {}: {c:?}", HalfInteger::from_twice(twice)));
        }
    }
    Ok("N = 1, 4, 10, 20; three evaluations agree for Λ ≤ 6".into())
}

fn group_metric_values() -> Outcome {
    let eta = group_metric();
    let target = expected_group_metric();
    if eta == target {
        return Ok("η = diag(−6,−6,−6, 6,6,6, 6,−6,−6,−6)".into());
    }
    let diag: Vec<String> = (0..10).map(|i| eta.get(i, i).to_string()).collect();
    let mismatched: Vec<usize> = (0..10).filter(|&i| eta.get(i, i) != target.get(i, i)).collect();
    Err(format!("computed diag({}); differs at indices {mismatched:?}", diag.join(", ")))
}

fn metric_relations() -> Outcome {
    for lambda in lambdas_to_two() {
        let rep = Representation::build(lambda).map_err(|e| e.to_string())?;
        let report = verify_representation(&rep).map_err(|e| e.to_string())?;
        let relevant = report.checks.iter().filter(|c| c.name.starts_with("metric."));
        for c in relevant {
            if !c.passed() {
                return Err(format!("Λ = {lambda}: {}", c.name));
            }
        }
        for name in ["metric.anticommutes.DeltaJ+", "metric.anticommutes.DeltaJ-", "metric.commutes.Gamma0"] {
            if report.find(name).is_none() {
                return Err(format!("missing check {name}"));
            }
        }
        let g = rep.metric();
        for (label, entry) in rep.basis().labels().zip(&g.diagonal) {
            let steps = (lambda.twice() - label.gamma.twice()) / 2;
            let expected = ComplexScalar::from_integer(if steps % 2 == 0 { 1 } else { -1 });
            if *entry != expected {
                return Err(format!("Λ = {lambda}: g at {label} is {entry}"));
            }
        }
    }
    Ok("[g, Γ⁰] = [g, J] = 0, {g, Γ} = {g, K} = {g, Δ_J} = 0, g = (−1)^(Λ−γ) for Λ ≤ 2".into())
}

fn bar_symmetry() -> Outcome {
    for lambda in lambdas_to_two() {
        let rep = Representation::build(lambda).map_err(|e| e.to_string())?;
        require(&bar_symmetry_check(&rep), &format!("Λ = {lambda}"))?;
    }
    Ok("P² = 1, PΓP = −Γ, PJP = J, PKP = K for Λ ≤ 2".into())
}

fn dispersion() -> Outcome {
    let start = Instant::now();
    let tol = Tolerances::default();
    let p = FourMomentum::new(2.0, 0.5, -0.3, 0.1);
    let rotation = Transformation::new(TransformKind::Rotation, [1.0, 2.0, 3.0], std::f64::consts::FRAC_PI_2).unwrap();
    let boost = Transformation::new(TransformKind::Boost, [1.0, -1.0, 0.5], 1.0).unwrap();
    let mut worst = [0f64; 4];
    for twice in [1, 2] {
        let exact = Representation::build(HalfInteger::from_twice(twice)).map_err(|e| e.to_string())?;
        let rep = FloatRepresentation::new(&exact);
        let s = spectrum(&rep, &p, &tol).map_err(|e| e.to_string())?;
        worst[0] = worst[0].max(spectral_deviation(&rep, &p, &s));

        let p_prime = FourMomentum::new(0.0, -0.4, 0.7, 0.2);
        let p_prime = FourMomentum::new((p.mass_squared() + 0.69).sqrt(), p_prime.p1, p_prime.p2, p_prime.p3);
        let s_prime = spectrum(&rep, &p_prime, &tol).map_err(|e| e.to_string())?;
        for k in 0..rep.dim() {
            let lambda = s.eigenvalues[k];
            let Some(&k2) = s_prime.modes_near(lambda, 1e-6).first() else {
                return Err(format!("no mode with eigenvalue {lambda} at p′"));
            };
            let j = plane_wave_current(&rep, &p, &s.eigenvector(k), &p_prime, &s_prime.eigenvector(k2), &tol)
                .map_err(|e| e.to_string())?;
            worst[1] = worst[1].max(j.conservation_residual(&p, &p_prime));
        }
        worst[2] = worst[2].max(covariance_deviation(&rep, &rotation));
        worst[3] = worst[3].max(covariance_deviation(&rep, &boost));
    }
    let elapsed = start.elapsed();
    let limits = [tol.spectral, tol.current, tol.covariance, tol.covariance];
    let names = ["spectrum", "current", "rotation", "boost"];
    for i in 0..4 {
        if !(worst[i] < limits[i]) {
            return Err(format!("{} deviation {:.3e} exceeds {:.0e}", names[i], worst[i], limits[i]));
        }
    }
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "spectrum {:.1e}, current {:.1e}, rotation {:.1e}, boost {:.1e} in {elapsed:.2?}",
        worst[0], worst[1], worst[2], worst[3]
    ))
}

fn action_table() -> Outcome {
    let mut discrepancies = 0;
    let mut records = 0;
    for lambda in lambdas_to_two() {
        let rep = Representation::build(lambda).map_err(|e| e.to_string())?;
        let audit = verify_action_table(rep.basis()).map_err(|e| format!("Λ = {lambda}: {e}"))?;
        require(&audit.report, &format!("Λ = {lambda}"))?;
        let json = serde_json::to_value(&audit.records).map_err(|e| e.to_string())?;
        if json.as_array().map(Vec::len) != Some(audit.records.len()) {
            return Err("records are not machine-readable".into());
        }
        for r in &audit.records {
            if r.target.is_none() && !r.measured.is_zero() {
                return Err(format!("{} on {} leaves the basis", r.operator, r.source));
            }
        }
        records += audit.records.len();
        discrepancies += audit.records.iter().filter(|r| !r.agrees).count();
    }
    Ok(format!("J², Jz, Γ⁰, J± exact; Δ_J ladder intact; {discrepancies} of {records} Δ_J coefficients differ from the closed form"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Λ=1/2 golden matrices", spin_half_golden),
        ("Λ=1 state table", spin_one_states),
        ("Λ=1 matrices", spin_one_matrices),
        ("commutator suite", commutator_suite),
        ("Casimir", casimir),
        ("counting", counting),
        ("group metric", group_metric_values),
        ("metric relations", metric_relations),
        ("bar symmetry", bar_symmetry),
        ("dispersion", dispersion),
        ("action-table audit", action_table),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
