use proptest::prelude::*;

use super::parse::{parse_weyl, parse_weyl_in};
use super::*;
use crate::algebra::rational::{int, rat};

fn w(s: &str) -> WeylElement<BigRat> {
    parse_weyl(s).unwrap()
}

fn win(s: &str, n: usize) -> WeylElement<BigRat> {
    parse_weyl_in(s, Space::standard(n)).unwrap()
}

fn p(n: usize, terms: &[(&[u32], i64)]) -> Poly<BigRat> {
    let coords = Space::standard(n).coords().clone();
    Poly::from_terms(
        coords,
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.to_vec()), int(*c))),
    )
}

/// `z ↦ -z`, `∂ ↦ -∂`.
fn parity_flip(a: &WeylElement<BigRat>) -> WeylElement<BigRat> {
    WeylElement::from_terms(
        a.space().clone(),
        1,
        a.terms().map(|(k, f)| {
            let f = if (k.z.degree() + k.d.degree()) % 2 == 1 {
                f.neg()
            } else {
                f.clone()
            };
            (k.clone(), f)
        }),
    )
}

#[test]
fn canonical_commutation() {
    assert_eq!(w("d1*z1"), w("z1*d1 + 1"));
    let x = win("z1*d2", 2);
    assert_eq!(x.commutator(&win("z2", 2)).unwrap(), win("z1", 2));
}

#[test]
fn euler_square() {
    let e = w("z1*d1");
    assert_eq!(e.checked_mul(&e).unwrap(), w("z1^2*d1^2 + z1*d1"));
}

#[test]
fn text_rendering() {
    assert_eq!(w("d1").fourier_hat().to_text(), "-zeta1");
    assert_eq!(w("z1*d1").fourier_hat().to_text(), "-zeta1*dzeta1 - 1");
    assert_eq!(w("3/2*z1^2*d1 - d2").to_text(), "3/2*z1^2*d1 - d2");
    assert_eq!(w("0").to_text(), "0");
}

#[test]
fn latex_rendering() {
    let s = w("z1*d1").fourier_hat().to_latex();
    assert!(s.contains("\\zeta_{1}"), "{s}");
    assert!(s.contains("\\partial_{\\zeta_{1}}"), "{s}");
}

#[test]
fn hat_of_coordinate_and_double_hat() {
    let z = win("z2", 2).fourier_hat();
    assert_eq!(z.space().side(), Side::Dual);
    assert_eq!(z.to_text(), "dzeta2");
    let a = w("z1^2*d1^3 + 5*z1 - 2/3*d1");
    assert_eq!(a.fourier_hat().fourier_hat(), parity_flip(&a));
    assert_eq!(a.fourier_hat().fourier_hat().space(), a.space());
}

#[test]
fn symbol_round_trip() {
    let a = win("d1^2 + 3*d1*d2 - 4", 2);
    let s = a.symb().unwrap();
    assert_eq!(s.total_degree(), Some(2));
    assert_eq!(symb_inv(&s), a);
    assert!(matches!(
        win("z1*d1", 2).symb(),
        Err(WeylError::NonConstant(_))
    ));
}

#[test]
fn apply_examples() {
    let f = p(1, &[(&[3], 1)]);
    assert_eq!(w("d1").apply_scalar(&f).unwrap(), p(1, &[(&[2], 3)]));
    let g = p(1, &[(&[4], 1)]);
    assert_eq!(
        w("z1^2*d1^2 + z1*d1").apply_scalar(&g).unwrap(),
        p(1, &[(&[4], 16)])
    );
}

#[test]
fn matrix_fiber_apply() {
    let space = Space::standard(1);
    let swap = Fiber::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
    let op = WeylElement::term(space, Monomial::one(), Monomial::var(0, 1), swap);
    let out = op.apply(&[p(1, &[(&[2], 1)]), p(1, &[(&[1], 1)])]).unwrap();
    assert_eq!(out, vec![p(1, &[(&[0], 1)]), p(1, &[(&[1], 2)])]);
}

#[test]
fn mismatches_are_errors() {
    assert!(matches!(
        w("z1").checked_add(&win("z1", 2)),
        Err(WeylError::SpaceMismatch { .. })
    ));
    let dual = w("z1").fourier_hat();
    assert!(w("z1").checked_mul(&dual).is_err());
}

#[test]
fn parse_errors_report_position() {
    let e = parse_weyl("z1 + q2").unwrap_err();
    assert_eq!(e.pos, 5);
    let e = parse_weyl("(z1 + d1").unwrap_err();
    assert_eq!(e.pos, 8);
    assert!(parse_weyl("z1 / z1").is_err());
    assert!(parse_weyl_in("z3", Space::standard(2)).is_err());
    assert!(parse_weyl("").is_err());
}

#[test]
fn parse_precedence() {
    assert_eq!(w("-z1^2"), w("-(z1*z1)"));
    assert_eq!(w("2 z1 d1"), w("2*z1*d1"));
    assert_eq!(w("1/2*d1 + 1/2*d1"), w("d1"));
    assert_eq!(w("(z1 + d1)^2"), w("z1^2 + 2*z1*d1 + d1^2 + 1"));
    assert_eq!(w("3/4"), WeylElement::scalar(Space::standard(1), rat(3, 4)));
}

fn arb_elem(n: usize) -> impl Strategy<Value = WeylElement<BigRat>> {
    let term = (
        prop::collection::vec(0u32..3, n),
        prop::collection::vec(0u32..3, n),
        -4i64..5,
    );
    prop::collection::vec(term, 0..4).prop_map(move |ts| {
        WeylElement::from_terms(
            Space::standard(n),
            1,
            ts.into_iter().map(|(z, d, c)| {
                (
                    WeylKey {
                        z: Monomial::new(z),
                        d: Monomial::new(d),
                    },
                    Fiber::scalar(int(c)),
                )
            }),
        )
    })
}

fn arb_poly(n: usize) -> impl Strategy<Value = Poly<BigRat>> {
    prop::collection::vec((prop::collection::vec(0u32..4, n), -3i64..4), 0..4).prop_map(move |ts| {
        Poly::from_terms(
            Space::standard(n).coords().clone(),
            ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(a in arb_elem(2), b in arb_elem(2), c in arb_elem(2)) {
        let l = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let r = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn hat_is_a_homomorphism(a in arb_elem(2), b in arb_elem(2)) {
        let l = a.checked_mul(&b).unwrap().fourier_hat();
        let r = a.fourier_hat().checked_mul(&b.fourier_hat()).unwrap();
        prop_assert_eq!(l, r);
        prop_assert_eq!(a.fourier_hat().fourier_hat(), parity_flip(&a));
    }

    #[test]
    fn apply_respects_composition(a in arb_elem(2), b in arb_elem(2), f in arb_poly(2)) {
        let ab = a.checked_mul(&b).unwrap();
        let lhs = ab.apply_scalar(&f).unwrap();
        let rhs = a.apply_scalar(&b.apply_scalar(&f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hat_preserves_commutators(a in arb_elem(2), b in arb_elem(2)) {
        let l = a.commutator(&b).unwrap().fourier_hat();
        let r = a.fourier_hat().commutator(&b.fourier_hat()).unwrap();
        prop_assert_eq!(l, r);
    }
}
