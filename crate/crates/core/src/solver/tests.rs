use super::*;
use crate::lie::builtin_setting;

fn setting(name: &str, n: Option<usize>, target: Target, degree_max: u32) -> FSetting {
    let b = builtin_setting(name, n).unwrap();
    FSetting::from_builtin(&b, &BTreeMap::new(), target, degree_max).unwrap()
}

fn p(params: &Vars, i: usize) -> RatFunc {
    RatFunc::param(params.clone(), i)
}

fn c(i: i64) -> RatFunc {
    RatFunc::from_int(i)
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

#[test]
fn rankin_cohen_first_order() {
    let s = setting("rankin_cohen", None, Target::Degree(1), 3);
    let params = s.params.clone();
    let out = solve_singular_vectors(s).unwrap();
    assert_eq!(out.vectors.len(), 1);
    let psi = &out.vectors[0].psi;
    assert_eq!(psi.coeff(&mono(&[1, 0])), p(&params, 1));
    assert_eq!(psi.coeff(&mono(&[0, 1])), p(&params, 0).neg_ref());
    assert_eq!(out.vectors[0].degree, 1);
    assert_eq!(out.reports.len(), 1);
}

#[test]
fn candidate_degrees_track_the_target() {
    let prep = Prepared::new(setting("rankin_cohen", None, Target::Discover, 4)).unwrap();
    let cands = prep.candidate_degrees();
    assert_eq!(
        cands.iter().map(|c| c.degree).collect::<Vec<_>>(),
        vec![0, 1, 2, 3, 4]
    );
    assert!(cands
        .iter()
        .all(|c| c.monomials.len() == c.degree as usize + 1));
    let params = prep.setting.params.clone();
    let w = &cands[3].weight[0].1;
    assert_eq!(w, &p(&params, 0).add_ref(&p(&params, 1)).add_ref(&c(6)));

    let prep = Prepared::new(setting("rankin_cohen", None, Target::Degree(2), 4)).unwrap();
    assert_eq!(
        prep.candidate_degrees()
            .iter()
            .map(|c| c.degree)
            .collect::<Vec<_>>(),
        vec![2]
    );
    let prep = Prepared::new(setting("rankin_cohen", None, Target::Degree(2), 0)).unwrap();
    assert!(prep.candidate_degrees().is_empty());

    let prep = Prepared::new(setting("juhl", Some(3), Target::Degree(2), 4)).unwrap();
    let cands = prep.candidate_degrees();
    assert_eq!(cands.len(), 1);
    assert_eq!(cands[0].degree, 2);
    let lambda = p(&prep.setting.params, 0);
    let d = cands[0].weight.iter().find(|(_, v)| !v.is_zero()).unwrap();
    assert_eq!(d.1, lambda.add_ref(&c(2)));
}

#[test]
fn degree_zero_is_the_constant() {
    let out = solve_singular_vectors(setting("juhl", Some(2), Target::Degree(0), 0)).unwrap();
    assert_eq!(out.vectors.len(), 1);
    assert!(out.vectors[0].psi.is_constant());
    assert_eq!(out.vectors[0].psi.constant_term(), c(1));
}

#[test]
fn juhl_second_order() {
    let s = setting("juhl", Some(3), Target::Degree(2), 2);
    let lambda = p(&s.params, 0);
    let out = solve_singular_vectors(s).unwrap();
    assert_eq!(out.vectors.len(), 1);
    let psi = &out.vectors[0].psi;
    assert_eq!(psi.coeff(&mono(&[2, 0, 0])), c(1));
    assert_eq!(psi.coeff(&mono(&[0, 2, 0])), c(1));
    assert_eq!(psi.coeff(&mono(&[0, 0, 2])), lambda.mul_ref(&c(2)));
    assert_eq!(psi.len(), 3);
}

#[test]
fn parity_filter() {
    let mut s = setting("juhl", Some(3), Target::Discover, 2);
    s.parity = Parity::Even;
    let out = solve_singular_vectors(s).unwrap();
    assert_eq!(
        out.vectors.iter().map(|v| v.degree).collect::<Vec<_>>(),
        vec![0, 2]
    );
}

#[test]
fn reduction_preserves_the_kernel() {
    for (name, n) in [("rankin_cohen", None), ("juhl", Some(2)), ("juhl", Some(3))] {
        let prep = Prepared::new(setting(name, n, Target::Discover, 4)).unwrap();
        for cand in prep.candidate_degrees() {
            let (a, ra) = prep.solve_candidate(&cand, true).unwrap();
            let (b, rb) = prep.solve_candidate(&cand, false).unwrap();
            assert_eq!(ra.kernel_dim, rb.kernel_dim, "{name} {:?}", n);
            let pa: Vec<_> = a.iter().map(|v| v.psi.clone()).collect();
            let pb: Vec<_> = b.iter().map(|v| v.psi.clone()).collect();
            assert_eq!(pa, pb, "{name} {n:?} degree {}", cand.degree);
        }
    }
}

#[test]
fn reduced_dimension_count() {
    let prep = Prepared::new(setting("juhl", Some(4), Target::Discover, 5)).unwrap();
    for cand in prep.candidate_degrees() {
        let space = prep.step4_reduce(&cand, true);
        assert_eq!(space.basis.len() as u32, cand.degree / 2 + 1);
    }
    let prep = Prepared::new(setting("rankin_cohen", None, Target::Discover, 3)).unwrap();
    for cand in prep.candidate_degrees() {
        assert_eq!(
            prep.step4_reduce(&cand, true).basis.len() as u32,
            cand.degree + 1
        );
    }
}

#[test]
fn juhl_system_is_affine_in_lambda() {
    let prep = Prepared::new(setting("juhl", Some(2), Target::Degree(2), 2)).unwrap();
    let cand = &prep.candidate_degrees()[0];
    let sys = prep.build_system(cand, &prep.step4_reduce(cand, false));
    for i in 0..sys.matrix.rows() {
        for e in sys.matrix.row(i) {
            assert!(e.is_polynomial());
            assert!(e.numer().total_degree().unwrap_or(0) <= 1);
        }
    }
}

#[test]
fn reverify_rejects_a_wrong_vector() {
    let prep = Prepared::new(setting("rankin_cohen", None, Target::Degree(1), 1)).unwrap();
    let cand = &prep.candidate_degrees()[0];
    let dual = prep.setting.dual_space().coords().clone();
    let bad = Poly::from_terms(dual, [(mono(&[1, 0]), c(1))]);
    assert!(matches!(
        prep.reverify(cand, &bad),
        Err(SolverError::Verification { .. })
    ));
}

#[test]
fn numeric_weights_and_unknown_slots() {
    let b = builtin_setting("rankin_cohen", None).unwrap();
    let mut w = BTreeMap::new();
    w.insert(
        "k1".to_string(),
        WeightValue::Value(BigRat::from_integer(4.into())),
    );
    let s = FSetting::from_builtin(&b, &w, Target::Degree(1), 1).unwrap();
    assert_eq!(s.params.len(), 1);
    let out = solve_singular_vectors(s).unwrap();
    assert_eq!(out.vectors[0].psi.coeff(&mono(&[0, 1])), c(-4));
    w.insert("lambda".to_string(), WeightValue::Symbolic);
    assert!(matches!(
        FSetting::from_builtin(&b, &w, Target::Degree(1), 1),
        Err(SolverError::UnknownWeight(_))
    ));
}
