use super::*;
use crate::algebra::Ring;
use crate::lie::builtin_setting;
use crate::solver::{solve_singular_vectors, FSetting, Target};

fn prepared(name: &str, n: Option<usize>, degree: u32) -> Prepared {
    let b = builtin_setting(name, n).unwrap();
    Prepared::new(
        FSetting::from_builtin(&b, &BTreeMap::new(), Target::Degree(degree), degree).unwrap(),
    )
    .unwrap()
}

fn operator(prep: &Prepared) -> DiffOperator {
    let out = solve_singular_vectors(prep.setting.clone()).unwrap();
    assert_eq!(out.vectors.len(), 1);
    emit_operator(prep, &out.vectors[0])
}

fn at(pairs: &[(&str, i64)]) -> BTreeMap<String, BigRat> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), BigRat::from_integer((*v).into())))
        .collect()
}

#[test]
fn first_rankin_cohen_bracket_is_equivariant() {
    let prep = prepared("rankin_cohen", None, 1);
    let op = operator(&prep);
    assert_eq!(op.render(false), "(k2*dx - k1*dy) restricted to y=x");
    let r = verify_equivariance(&prep, &op, &at(&[("k1", 4), ("k2", 6)]), 6).unwrap();
    assert!(r.pass, "{}", r.to_text());
    assert_eq!(r.generators.len(), 3);
    assert_eq!(r.target_weight.get("h").map(String::as_str), Some("12/1"));
}

#[test]
fn untwisted_derivative_fails() {
    let prep = prepared("rankin_cohen", None, 1);
    let mut op = operator(&prep);
    op.operator = WeylElement::deriv(op.source_space().clone(), 0);
    let r = verify_equivariance(&prep, &op, &at(&[("k1", 4), ("k2", 6)]), 6).unwrap();
    assert!(!r.pass);
    assert!(r.failing().contains(&"e"));
}

#[test]
fn restriction_alone_at_degree_zero() {
    let prep = prepared("juhl", Some(3), 0);
    let op = operator(&prep);
    assert_eq!(op.render(false), "(1) restricted to z3=0");
    let r = verify_equivariance(&prep, &op, &at(&[("lambda", 5)]), 4).unwrap();
    assert!(r.pass, "{}", r.to_text());
}

#[test]
fn sampled_verification_and_perturbations() {
    let prep = prepared("juhl", Some(2), 2);
    let op = operator(&prep);
    let reports = verify_samples(&prep, &op, 3, 7, 5).unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| r.pass));
    assert!(!perturbation_is_rescale(&op));
    for i in 0..op.operator.len() {
        let bad = perturb(&op, i);
        let r = verify_samples(&prep, &bad, 1, 7, 5).unwrap();
        assert!(!r[0].pass, "perturbing term {i} went unnoticed");
    }
}

#[test]
fn operator_json_round_trip() {
    let prep = prepared("rankin_cohen", None, 2);
    let op = operator(&prep);
    let text = serde_json::to_string(&op.to_json()).unwrap();
    let back: OperatorJson = serde_json::from_str(&text).unwrap();
    assert_eq!(DiffOperator::from_json(&back).unwrap(), op);
    let mut broken = back.clone();
    broken.kind = "other".into();
    assert!(DiffOperator::from_json(&broken).is_err());
}

#[test]
fn mismatched_setting_is_rejected() {
    let rc = prepared("rankin_cohen", None, 1);
    let j = prepared("juhl", Some(2), 1);
    let op = operator(&rc);
    assert!(matches!(
        verify_equivariance(&j, &op, &at(&[("lambda", 1)]), 2),
        Err(VerifyError::Mismatch(_))
    ));
}

#[test]
fn closed_formulas() {
    let params: Vars = vec!["k1".to_string(), "k2".to_string()].into();
    let k1 = RatFunc::param(params.clone(), 0);
    let k2 = RatFunc::param(params.clone(), 1);
    assert_eq!(
        rankin_cohen_coefficients(1, &k1, &k2),
        vec![k2.clone(), k1.neg_ref()]
    );
    assert_eq!(
        rankin_cohen_coefficients(0, &k1, &k2),
        vec![RatFunc::from_int(1)]
    );
    let at = |c: &RatFunc| {
        c.specialize(
            &[
                ("k1".to_string(), BigRat::from_integer(4.into())),
                ("k2".to_string(), BigRat::from_integer(6.into())),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap()
    };
    let two: Vec<BigRat> = rankin_cohen_coefficients(2, &k1, &k2)
        .iter()
        .map(at)
        .collect();
    // (k2)(k2+1), -2(k1+1)(k2+1), (k1)(k1+1) at (4, 6)
    assert_eq!(
        two,
        vec![
            BigRat::from_integer(42.into()),
            BigRat::from_integer((-70).into()),
            BigRat::from_integer(20.into())
        ]
    );

    let lp: Vars = vec!["lambda".to_string()].into();
    let l = RatFunc::param(lp, 0);
    let half = RatFunc::constant(BigRat::new(1.into(), 2.into()));
    let c = juhl_coefficients(3, 2, &l).unwrap();
    assert_eq!(c[1], half);
    assert_eq!(
        c[0],
        l.mul_ref(&RatFunc::from_int(2))
            .add_ref(&RatFunc::from_int(-3 + 3))
            .mul_ref(&half)
    );
    assert_eq!(
        juhl_coefficients(4, 0, &l).unwrap(),
        vec![RatFunc::from_int(1)]
    );
    assert!(matches!(
        juhl_coefficients(3, 3, &l),
        Err(VerifyError::Unsupported(_))
    ));
}

#[test]
fn comparators_accept_solver_output() {
    let prep = prepared("rankin_cohen", None, 3);
    let out = solve_singular_vectors(prep.setting.clone()).unwrap();
    let lam = &prep.setting.lambda;
    let k1 = lam.value(2).unwrap().get(0, 0).clone();
    let k2 = lam.value(3).unwrap().get(0, 0).clone();
    let c = compare_rankin_cohen(3, &k1, &k2, &out.vectors[0].psi).unwrap();
    assert!(c.proportional, "{c:?}");
    assert!(c.scalar.is_some());
    assert!(compare_rankin_cohen(2, &k1, &k2, &out.vectors[0].psi).is_err());
    let wrong = compare_rankin_cohen(3, &k2, &k1, &out.vectors[0].psi).unwrap();
    assert!(!wrong.proportional);

    let prep = prepared("juhl", Some(4), 4);
    let out = solve_singular_vectors(prep.setting.clone()).unwrap();
    let l = prep
        .setting
        .lambda
        .values()
        .values()
        .next()
        .unwrap()
        .get(0, 0)
        .clone();
    let c = compare_juhl(4, 4, &l, &out.vectors[0].psi).unwrap();
    assert!(c.proportional, "{c:?}");
}
