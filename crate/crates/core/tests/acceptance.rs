//! Acceptance criteria 1-9. Prints one `PASS` or `FAIL` line per criterion
//! and exits non-zero if any fails. All comparisons are exact; the runtime
//! budgets are part of the pass condition.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use fmethod::algebra::{BigRat, RatFunc};
use fmethod::cli::execute;
use fmethod::lie::builtin_setting;
use fmethod::solver::{
    solve_singular_vectors, Candidate, FSetting, Prepared, SingularVector, Target,
};
use fmethod::verify::{
    compare_juhl, compare_rankin_cohen, emit_operator, perturb, perturbation_is_rescale,
    verify_samples, DiffOperator,
};
use fmethod::weyl::{Space, WeylElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

const TEST_DEGREE: u32 = 6;
const SAMPLES: usize = 3;
const SEED: u64 = 2024;
const ORACLE_POINTS: usize = 20;
const FOURIER_PAIRS: usize = 120;

/// The builtin settings exercised: Rankin–Cohen and the conformal family in
/// dimensions 2, 3, 4.
const SETTINGS: [(&str, Option<usize>); 4] = [
    ("rankin_cohen", None),
    ("juhl", Some(2)),
    ("juhl", Some(3)),
    ("juhl", Some(4)),
];

fn setting(name: &str, n: Option<usize>, target: Target, degree_max: u32) -> FSetting {
    let b = builtin_setting(name, n).unwrap();
    FSetting::from_builtin(&b, &BTreeMap::new(), target, degree_max).unwrap()
}

fn slot(s: &FSetting, name: &str) -> RatFunc {
    s.lambda
        .value(s.lie.index_of(name).unwrap())
        .unwrap()
        .get(0, 0)
        .clone()
}

fn unique_vector(s: FSetting, degree: u32) -> Result<SingularVector, String> {
    let label = s.label.clone();
    let out = solve_singular_vectors(s).map_err(|e| e.to_string())?;
    let found: Vec<_> = out
        .vectors
        .into_iter()
        .filter(|v| v.degree == degree)
        .collect();
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap()),
        k => Err(format!("{label} degree {degree}: {k} singular vectors")),
    }
}

fn rankin_cohen_recovery() -> Result<String, String> {
    for n in 0..=6 {
        let s = setting("rankin_cohen", None, Target::Degree(n), n);
        let (k1, k2) = (slot(&s, "h1"), slot(&s, "h2"));
        let sv = unique_vector(s, n)?;
        let c = compare_rankin_cohen(n, &k1, &k2, &sv.psi).map_err(|e| e.to_string())?;
        if !c.proportional {
            return Err(format!(
                "order {n}: expected {} found {}",
                c.expected, c.found
            ));
        }
    }
    Ok("orders 0..6 proportional".into())
}

fn juhl_recovery() -> Result<String, String> {
    for n in [2, 3, 4] {
        for delta in [0, 2, 4] {
            let s = setting("juhl", Some(n), Target::Degree(delta), delta);
            let lambda = slot(&s, "D");
            let sv = unique_vector(s, delta)?;
            let c = compare_juhl(n, delta, &lambda, &sv.psi).map_err(|e| e.to_string())?;
            if !c.proportional {
                return Err(format!(
                    "n={n} delta={delta}: expected {} found {}",
                    c.expected, c.found
                ));
            }
        }
    }
    Ok("n in {2,3,4}, delta in {0,2,4} proportional".into())
}

fn multiplicity_one() -> Result<String, String> {
    let mut checked = 0;
    for (name, n) in SETTINGS {
        let prep =
            Prepared::new(setting(name, n, Target::Discover, 6)).map_err(|e| e.to_string())?;
        let cands = prep.candidate_degrees();
        for d in 0..=6 {
            let here: Vec<&Candidate> = cands.iter().filter(|c| c.degree == d).collect();
            if here.len() != 1 {
                return Err(format!(
                    "{name} {n:?} degree {d}: {} weight classes",
                    here.len()
                ));
            }
            let (_, report) = prep
                .solve_candidate(here[0], true)
                .map_err(|e| e.to_string())?;
            if report.kernel_dim != 1 {
                return Err(format!(
                    "{name} {n:?} degree {d}: kernel dimension {}",
                    report.kernel_dim
                ));
            }
            checked += 1;
        }
        // Targeting one degree leaves every other degree without solutions.
        for d in 0..=6 {
            let out = solve_singular_vectors(setting(name, n, Target::Degree(d), 6))
                .map_err(|e| e.to_string())?;
            let degrees: Vec<u32> = out.vectors.iter().map(|v| v.degree).collect();
            if degrees != vec![d] {
                return Err(format!(
                    "{name} {n:?}: target degree {d} gives solutions at {degrees:?}"
                ));
            }
        }
    }
    Ok(format!(
        "{checked} candidate degrees with kernel 1, none off target"
    ))
}

fn equivariance() -> Result<String, String> {
    let mut ops: Vec<(Prepared, DiffOperator)> = Vec::new();
    let mut jobs: Vec<(&str, Option<usize>, u32)> =
        (0..=6).map(|d| ("rankin_cohen", None, d)).collect();
    for n in [2, 3, 4] {
        jobs.extend((0..=4).map(|d| ("juhl", Some(n), d)));
    }
    for (name, n, d) in jobs {
        let s = setting(name, n, Target::Degree(d), d);
        let prep = Prepared::new(s.clone()).map_err(|e| e.to_string())?;
        let sv = unique_vector(s, d)?;
        let op = emit_operator(&prep, &sv);
        ops.push((prep, op));
    }
    let (mut passed, mut perturbed) = (0, 0);
    for (prep, op) in &ops {
        let reports =
            verify_samples(prep, op, SAMPLES, SEED, TEST_DEGREE).map_err(|e| e.to_string())?;
        if let Some(bad) = reports.iter().find(|r| !r.pass) {
            return Err(format!(
                "{} degree {} fails:\n{}",
                op.setting,
                op.degree,
                bad.to_text()
            ));
        }
        passed += 1;
        if perturbation_is_rescale(op) {
            continue;
        }
        for i in 0..op.operator.len() {
            let bad = perturb(op, i);
            let r = verify_samples(prep, &bad, SAMPLES, SEED, TEST_DEGREE)
                .map_err(|e| e.to_string())?;
            if r.iter().all(|r| r.pass) {
                return Err(format!(
                    "{} degree {}: perturbing term {i} still passes",
                    op.setting, op.degree
                ));
            }
            perturbed += 1;
        }
    }
    Ok(format!("{passed} operators x {SAMPLES} samples at test degree {TEST_DEGREE}; {perturbed} perturbations fail"))
}

fn fourier_properties() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..FOURIER_PAIRS {
        let nvars = 1 + i % 3;
        let a = random_weyl(&mut rng, nvars, 4, 4);
        let b = random_weyl(&mut rng, nvars, 4, 4);
        let lhs = a.checked_mul(&b).unwrap().fourier_hat();
        let rhs = a.fourier_hat().checked_mul(&b.fourier_hat()).unwrap();
        if lhs != rhs {
            return Err(format!("hat(ab) != hat(a)hat(b) for a = {a}, b = {b}"));
        }
        if a.fourier_hat().fourier_hat() != negate_generators(&a) {
            return Err(format!(
                "double transform of {a} is not the generator negation"
            ));
        }
    }
    let space = Space::standard(4);
    for j in 0..4 {
        for k in 0..4 {
            let d = WeylElement::<BigRat>::deriv(space.clone(), j);
            let z = WeylElement::<BigRat>::coord(space.clone(), k);
            let before = d.commutator(&z).unwrap();
            let after = d.fourier_hat().commutator(&z.fourier_hat()).unwrap();
            let want = if j == k { rat(1, 1) } else { rat(0, 1) };
            let one = WeylElement::scalar(space.dual_space(), want.clone());
            if before != WeylElement::scalar(space.clone(), want) || after != one {
                return Err(format!("[d{}, z{}] not preserved", j + 1, k + 1));
            }
        }
    }
    Ok(format!(
        "{FOURIER_PAIRS} random pairs, commutation relations for n = 4"
    ))
}

fn lie_homomorphism() -> Result<String, String> {
    let mut pairs = 0;
    for (name, n) in SETTINGS {
        let prep =
            Prepared::new(setting(name, n, Target::Discover, 0)).map_err(|e| e.to_string())?;
        let lie = &prep.setting.lie;
        let dpi: Vec<_> = (0..lie.dim())
            .map(|i| lie.dpi(&lie.basis_vector(i), &prep.mu).unwrap())
            .collect();
        let hat: Vec<_> = (0..lie.dim())
            .map(|i| lie.dpi_hat(&lie.basis_vector(i), &prep.mu).unwrap())
            .collect();
        for a in 0..lie.dim() {
            for b in 0..lie.dim() {
                let br = lie
                    .bracket(&lie.basis_vector(a), &lie.basis_vector(b))
                    .unwrap();
                if lie.dpi(&br, &prep.mu).unwrap() != dpi[a].commutator(&dpi[b]).unwrap() {
                    return Err(format!("{name} {n:?}: dpi fails on ({a}, {b})"));
                }
                if lie.dpi_hat(&br, &prep.mu).unwrap() != hat[a].commutator(&hat[b]).unwrap() {
                    return Err(format!("{name} {n:?}: dpi_hat fails on ({a}, {b})"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} basis pairs"))
}

fn second_order() -> Result<String, String> {
    let mut count = 0;
    for (name, n) in SETTINGS {
        let prep =
            Prepared::new(setting(name, n, Target::Discover, 0)).map_err(|e| e.to_string())?;
        let lie = &prep.setting.lie;
        for i in lie.indices(1) {
            let op = lie.dpi_hat(&lie.basis_vector(i), &prep.mu).unwrap();
            if op.order().unwrap_or(0) > 2 {
                return Err(format!(
                    "{name} {n:?}: {} has order {:?}",
                    lie.basis()[i].name,
                    op.order()
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} nilradical generators of order <= 2"))
}

fn oracle_agreement() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (name, n) in SETTINGS {
        let b = builtin_setting(name, n).unwrap();
        let lie = &b.lie;
        let m = lie.indices(-1).len();
        for _ in 0..ORACLE_POINTS {
            let z: Vec<BigRat> = (0..m).map(|_| random_rat(&mut rng)).collect();
            let y: Vec<BigRat> = (0..lie.dim()).map(|_| random_rat(&mut rng)).collect();
            let oracle = oracle_alpha_beta(lie, &y, &z)
                .ok_or_else(|| format!("{name} {n:?}: no factorization"))?;
            if oracle != closed_alpha_beta(lie, &y, &z) {
                return Err(format!("{name} {n:?}: mismatch at z = {z:?}"));
            }
        }
    }
    Ok(format!("{ORACLE_POINTS} random (Y, X) per setting"))
}

fn determinism() -> Result<String, String> {
    let runs: [&[&str]; 3] = [
        &["solve", "rankin_cohen", "--degree-max", "6"],
        &["solve", "juhl", "--n", "4", "--degree-max", "5"],
        &[
            "solve",
            "juhl",
            "--n",
            "3",
            "--degree-max",
            "4",
            "--weights",
            "lambda=7/3",
        ],
    ];
    for args in runs {
        let mut seen: Option<String> = None;
        for threads in ["1", "2", "4", "1", "3"] {
            let mut argv = vec!["fmethod"];
            argv.extend_from_slice(args);
            argv.extend_from_slice(&["--threads", threads]);
            let out = execute(argv);
            if out.status.code() != 0 {
                return Err(format!(
                    "{args:?}: exit {}: {}",
                    out.status.code(),
                    out.stderr
                ));
            }
            match &seen {
                None => seen = Some(out.stdout),
                Some(s) if *s == out.stdout => {}
                Some(_) => return Err(format!("{args:?} differs with {threads} threads")),
            }
        }
    }
    Ok("3 configurations x 5 runs byte-identical".into())
}

type Check = fn() -> Result<String, String>;

fn main() {
    let criteria: [(u32, &str, &str, Option<u64>, Check); 9] = [
        (
            1,
            "Rankin-Cohen recovery",
            "exact proportionality",
            Some(10),
            rankin_cohen_recovery,
        ),
        (
            2,
            "conformal family recovery",
            "exact proportionality",
            Some(60),
            juhl_recovery,
        ),
        (
            3,
            "multiplicity one",
            "exact kernel dimension",
            None,
            multiplicity_one,
        ),
        (
            4,
            "equivariance and negative controls",
            "zero residual",
            Some(120),
            equivariance,
        ),
        (
            5,
            "Fourier transform properties",
            "exact equality",
            None,
            fourier_properties,
        ),
        (
            6,
            "Lie homomorphism",
            "exact equality",
            None,
            lie_homomorphism,
        ),
        (7, "second-order bound", "order <= 2", None, second_order),
        (
            8,
            "alpha/beta oracle agreement",
            "exact equality",
            None,
            oracle_agreement,
        ),
        (9, "determinism", "byte-identical", None, determinism),
    ];
    let mut failed = 0;
    for (n, name, tol, budget, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let took = start.elapsed();
        let over = budget.is_some_and(|b| took > Duration::from_secs(b));
        let budget_text = budget.map(|b| format!(", budget {b}s")).unwrap_or_default();
        let (ok, detail) = match result {
            Ok(d) if !over => (true, d),
            Ok(d) => (false, format!("{d}; over the runtime budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {n}: {name} [tolerance: {tol}{budget_text}] ({detail}; {:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
