//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use herglotz::analytic::{
    blaschke_eval, solve_special_system, NodeSet, SchurParameter, SpecialSystem,
};
use herglotz::measure::{build_measure, total_mass, GeneratedMeasure, MeasureKind};
use herglotz::verify::{
    check_phi_conditions, gram_compute, gram_target, kernel_identity_check, mass_bounds,
    verify_membership,
};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{c, point_in_disc, random_contractive, random_inner, random_nodes};

const GRID: usize = 4096;

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.detail = format!("{}; {:.3} s (limit {} s)", out.detail, elapsed.as_secs_f64(), limit.as_secs());
    out.passed &= elapsed < limit;
    out
}

/// The 50 (nodes, strictly contractive parameter) pairs of criteria 3, 4 and 8.
fn contractive_suite() -> Vec<(NodeSet, SchurParameter)> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    (0..50)
        .map(|i| {
            let nodes = random_nodes(&mut rng, 6, 0.8);
            (nodes, random_contractive(&mut rng, i))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(1), || {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let zero = SchurParameter::constant(c(0.0, 0.0)).unwrap();
        let mut worst_gram = 0.0_f64;
        let mut worst_mass = 0.0_f64;
        let mut density_ok = true;
        for _ in 0..20 {
            let nodes = random_nodes(&mut rng, 6, 0.8);
            let m = build_measure(&nodes, &zero, GRID).unwrap();
            density_ok &= m.kind() == MeasureKind::AbsolutelyContinuous
                && m.density().iter().all(|&v| v == 1.0);
            worst_mass = worst_mass.max((total_mass(&m).unwrap() - 1.0).abs());
            worst_gram = worst_gram.max(verify_membership(&m, 1e-12).max_abs_error);
        }
        outcome(
            density_ok && worst_mass <= 1e-12 && worst_gram <= 1e-12,
            format!("Lebesgue recovery: max |mass - 1| {worst_mass:.2e}, max Gram error {worst_gram:.2e}"),
        )
    })
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(2), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let plus = SchurParameter::constant(c(1.0, 0.0)).unwrap();
        let minus = SchurParameter::constant(c(-1.0, 0.0)).unwrap();
        let mut worst_mass = 0.0_f64;
        let mut all_pass = true;
        for _ in 0..20 {
            let nodes = random_nodes(&mut rng, 6, 0.8);
            let b0 = nodes.blaschke_at_origin();
            let max = build_measure(&nodes, &plus, GRID).unwrap();
            let min = build_measure(&nodes, &minus, GRID).unwrap();
            worst_mass = worst_mass
                .max((max.quadrature_mass() - (1.0 + b0) / (1.0 - b0)).abs())
                .max((min.quadrature_mass() - (1.0 - b0) / (1.0 + b0)).abs());
            all_pass &= verify_membership(&max, 1e-10).passed && verify_membership(&min, 1e-10).passed;
        }
        outcome(
            worst_mass <= 1e-10 && all_pass,
            format!("extremal masses: max deviation {worst_mass:.2e}, membership at 1e-10 {all_pass}"),
        )
    })
}

fn criterion_3(suite: &[(NodeSet, SchurParameter)]) -> Outcome {
    timed(Duration::from_secs(30), || {
        let mut failures = 0;
        let mut worst = 0.0_f64;
        for (nodes, param) in suite {
            let m = build_measure(nodes, param, GRID).unwrap();
            let report = verify_membership(&m, 1e-8);
            worst = worst.max(report.max_abs_error);
            failures += usize::from(!report.passed);
        }
        outcome(
            failures == 0,
            format!("forward direction: {failures}/50 failures, max Gram error {worst:.2e}"),
        )
    })
}

fn perturb_first_atom(m: &GeneratedMeasure, factor: f64) -> GeneratedMeasure {
    let mut atoms = m.atoms().to_vec();
    atoms[0] = herglotz::measure::Atom::new(atoms[0].angle(), atoms[0].weight() * factor).unwrap();
    GeneratedMeasure::from_parts(
        m.nodes().clone(),
        None,
        m.grid().clone(),
        m.density().to_vec(),
        atoms,
    )
    .unwrap()
}

fn criterion_4(suite: &[(NodeSet, SchurParameter)]) -> Outcome {
    let mut measures: Vec<(GeneratedMeasure, bool)> = suite
        .iter()
        .map(|(n, p)| (build_measure(n, p, GRID).unwrap(), true))
        .collect();
    let zero = SchurParameter::constant(c(0.0, 0.0)).unwrap();
    let lebesgue = build_measure(&suite[0].0, &zero, GRID).unwrap();
    for factor in [0.5, 2.0] {
        measures.push((lebesgue.scaled(factor).unwrap(), false));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..4 {
        let nodes = random_nodes(&mut rng, 6, 0.8);
        let inner = random_inner(&mut rng, i % 3);
        let atomic = build_measure(&nodes, &inner, GRID).unwrap();
        for factor in [0.9, 1.1] {
            measures.push((perturb_first_atom(&atomic, factor), false));
        }
    }

    let mut disagreements = 0;
    let mut wrong_verdicts = 0;
    for (m, expected) in &measures {
        let gram = verify_membership(m, 1e-8).passed;
        let phi = check_phi_conditions(m, 1e-8).is_solved();
        disagreements += usize::from(gram != phi);
        wrong_verdicts += usize::from(gram != *expected);
    }
    outcome(
        disagreements == 0 && wrong_verdicts == 0 && measures.len() == 60,
        format!(
            "Gram/phi equivalence over {} measures: {disagreements} disagreements, {wrong_verdicts} unexpected verdicts",
            measures.len()
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    for beta in [-3.0, 0.0, 7.25] {
        for n in [1, 4, 9] {
            ok &= solve_special_system(&vec![c(1.0, -beta); n]) == SpecialSystem::Solved { beta };
        }
    }
    let rejected = solve_special_system(&[c(1.0, 0.0), c(2.0, 0.0)]);
    ok &= rejected == SpecialSystem::NotSolvable { residual: 1.0 };
    outcome(ok, format!("special system: exact β recovery, [1, 2] -> {rejected:?}"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let atomic: Vec<GeneratedMeasure> = (0..5)
        .map(|i| {
            let nodes = random_nodes(&mut rng, 6, 0.8);
            let inner = random_inner(&mut rng, i % 3);
            build_measure(&nodes, &inner, GRID).unwrap()
        })
        .collect();
    let continuous: Vec<GeneratedMeasure> = (0..5)
        .map(|i| {
            let nodes = random_nodes(&mut rng, 6, 0.8);
            build_measure(&nodes, &random_contractive(&mut rng, i), GRID).unwrap()
        })
        .collect();
    let mut worst_atomic = 0.0_f64;
    let mut worst_continuous = 0.0_f64;
    for i in 0..100 {
        let z1 = point_in_disc(&mut rng, 0.9);
        let z2 = point_in_disc(&mut rng, 0.9);
        worst_atomic = worst_atomic.max(kernel_identity_check(&atomic[i % 5], z1, z2));
        worst_continuous = worst_continuous.max(kernel_identity_check(&continuous[i % 5], z1, z2));
    }
    outcome(
        worst_atomic <= 1e-12 && worst_continuous <= 1e-8,
        format!("kernel identity: atomic {worst_atomic:.2e}, continuous {worst_continuous:.2e}"),
    )
}

/// `s'(t)` by the product rule over the normalized factors, independent of
/// the log-derivative used by the atom finder.
fn s_derivative(gamma: Complex64, zeros: &[Complex64], t: Complex64) -> Complex64 {
    let factor = |a: Complex64, z: Complex64| {
        if a == c(0.0, 0.0) {
            z
        } else {
            (a - z) / (1.0 - a.conj() * z) * (a.norm() / a)
        }
    };
    let factor_prime = |a: Complex64, z: Complex64| {
        if a == c(0.0, 0.0) {
            c(1.0, 0.0)
        } else {
            (a.norm() / a) * (a.norm_sqr() - 1.0) / (1.0 - a.conj() * z).powi(2)
        }
    };
    let mut total = c(0.0, 0.0);
    for (i, &a) in zeros.iter().enumerate() {
        let mut term = factor_prime(a, t);
        for (j, &b) in zeros.iter().enumerate() {
            if i != j {
                term *= factor(b, t);
            }
        }
        total += term;
    }
    gamma * total
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ok = true;
    let mut worst_imag = 0.0_f64;
    let mut worst_gram = 0.0_f64;
    let mut cases = 0;
    for n in 1..=6 {
        for extra in 0..=(10 - n).min(4) {
            let nodes =
                NodeSet::new((0..n).map(|_| point_in_disc(&mut rng, 0.8)).collect()).unwrap();
            let param = random_inner(&mut rng, extra);
            let (gamma, extra_zeros) = param.inner_factors().unwrap();
            let mut zeros = nodes.points().to_vec();
            zeros.extend_from_slice(extra_zeros);
            let degree = zeros.len();

            let m = build_measure(&nodes, &param, GRID).unwrap();
            ok &= m.kind() == MeasureKind::PurelyAtomic && m.atoms().len() == degree;
            for atom in m.atoms() {
                let t = atom.location();
                let s = blaschke_eval(&nodes, t).unwrap() * param_value(&param, t);
                ok &= (s - 1.0).norm() <= 1e-12 && atom.weight() > 0.0;
                let mu = 1.0 / (t * s_derivative(gamma, &zeros, t));
                worst_imag = worst_imag.max(mu.im.abs());
                ok &= (mu.re - atom.weight()).abs() <= 1e-10 * atom.weight().max(1.0);
            }
            let report = verify_membership(&m, 1e-10);
            worst_gram = worst_gram.max(report.max_abs_error);
            ok &= report.passed;
            cases += 1;
        }
    }
    outcome(
        ok && worst_imag <= 1e-10,
        format!(
            "atom counting over {cases} inner cases (d <= 10): max |Im μ| {worst_imag:.2e}, max Gram error {worst_gram:.2e}"
        ),
    )
}

fn param_value(param: &SchurParameter, t: Complex64) -> Complex64 {
    herglotz::analytic::schur_eval(param, t).unwrap()
}

fn criterion_8(suite: &[(NodeSet, SchurParameter)]) -> Outcome {
    let mut worst = 0.0_f64;
    for (nodes, param) in suite {
        let coarse = gram_compute(&build_measure(nodes, param, 2048).unwrap());
        let fine = gram_compute(&build_measure(nodes, param, 4096).unwrap());
        worst = worst.max(coarse.max_abs_difference(&fine));
    }
    outcome(
        worst <= 1e-10,
        format!("quadrature convergence 2048 -> 4096: max Gram change {worst:.2e}"),
    )
}

fn run_cli(args: &[&str], dir: &Path) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_herglotz"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let mut notes = Vec::new();
    let mut ok = true;

    std::fs::write(
        d.join("ac.toml"),
        "nodes = [[0.5, 0.0], [0.1, -0.3]]\n[parameter]\nkind = \"constant\"\ngamma = [0.3, 0.2]\n",
    )
    .unwrap();
    let (g1, _) = run_cli(&["generate", "--config", "ac.toml", "--output", "a.json"], d);
    let (g2, _) = run_cli(&["generate", "--config", "ac.toml", "--output", "b.json"], d);
    let identical = std::fs::read(d.join("a.json")).unwrap() == std::fs::read(d.join("b.json")).unwrap();
    let (v, _) = run_cli(&["verify", "--measure", "a.json", "--output", "va.json"], d);
    let (v2, _) = run_cli(&["verify", "--measure", "a.json", "--output", "vb.json"], d);
    let identical_reports =
        std::fs::read(d.join("va.json")).unwrap() == std::fs::read(d.join("vb.json")).unwrap();
    ok &= g1 == 0 && g2 == 0 && identical && v == 0 && v2 == 0 && identical_reports;
    notes.push(format!("round trip exits ({g1}, {g2}, {v}), byte-identical {identical}/{identical_reports}"));

    std::fs::write(
        d.join("atom.toml"),
        "nodes = [[0.5, 0.0]]\n[parameter]\nkind = \"constant\"\ngamma = [1.0, 0.0]\n",
    )
    .unwrap();
    let (g, _) = run_cli(&["generate", "--config", "atom.toml", "--output", "atom.json"], d);
    let text = std::fs::read_to_string(d.join("atom.json")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let weight = doc["atoms"][0][1].as_f64().unwrap();
    doc["atoms"][0][1] = serde_json::json!(1.0);
    std::fs::write(d.join("edited.json"), serde_json::to_string(&doc).unwrap()).unwrap();
    let (e, _) = run_cli(&["verify", "--measure", "edited.json", "--output", "edited_report.json"], d);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("edited_report.json")).unwrap()).unwrap();
    let error = report["gram_report"]["max_abs_error"].as_f64().unwrap();
    let predicted = 4.0 / 3.0 - 1.0 / 2.25;
    ok &= g == 0 && (weight - 3.0).abs() < 1e-12 && e == 1 && (error - predicted).abs() < 1e-12;
    notes.push(format!("edited weight 3 -> 1: exit {e}, error {error:.12} (predicted 8/9)"));

    outcome(ok, format!("CLI: {}", notes.join("; ")))
}

fn main() {
    let suite = contractive_suite();
    // Sanity on the suite itself: every member's mass sits inside the sharp bounds.
    for (nodes, param) in &suite {
        let b = mass_bounds(nodes);
        let m = build_measure(nodes, param, GRID).unwrap();
        let mass = total_mass(&m).unwrap();
        assert!(mass >= b.lower - 1e-9 && mass <= b.upper + 1e-9);
        assert_eq!(gram_target(nodes).size(), nodes.len());
    }

    let criteria: Vec<(&str, Criterion)> = vec![
        ("1", Box::new(criterion_1)),
        ("2", Box::new(criterion_2)),
        ("3", Box::new(|| criterion_3(&suite))),
        ("4", Box::new(|| criterion_4(&suite))),
        ("5", Box::new(criterion_5)),
        ("6", Box::new(criterion_6)),
        ("7", Box::new(criterion_7)),
        ("8", Box::new(|| criterion_8(&suite))),
        ("9", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (id, run) in &criteria {
        let out = run();
        println!(
            "[{}] criterion {id}: {}",
            if out.passed { "PASS" } else { "FAIL" },
            out.detail
        );
        failed += usize::from(!out.passed);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
