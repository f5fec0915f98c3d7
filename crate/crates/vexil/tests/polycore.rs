use proptest::prelude::*;
use vexil::polycore::{prod_one_plus, t, x, y, Dyadic, Monomial, Polynomial, Var};

fn v(var: Var) -> Polynomial {
    Polynomial::var(var)
}

#[test]
fn arithmetic_examples() {
    let (x1, y1) = (v(x(1)), v(y(1)));
    assert_eq!(&(&x1 + &y1) * &(&x1 - &y1), &x1.pow(2) - &y1.pow(2));
    assert_eq!(&x1 * &Polynomial::one(), x1);
    let expect = &(&(&Polynomial::one() + &v(t(1))) + &v(t(2))) + &(&v(t(1)) * &v(t(2)));
    assert_eq!(prod_one_plus([t(1), t(2)]), expect);
}

#[test]
fn substitution_examples() {
    let sub = |p: &Polynomial, from: Var, to: Polynomial| p.substitute(|w| (w == from).then(|| to.clone()));
    assert_eq!(sub(&prod_one_plus([t(1)]), t(1), v(x(1))), prod_one_plus([x(1)]));
    assert_eq!(sub(&v(x(1)).pow(2), x(1), -&v(x(1))), v(x(1)).pow(2));
    let e2 = &v(t(1)) * &v(t(2));
    let both = e2.substitute(|w| match w {
        w if w == t(1) => Some(v(x(1))),
        w if w == t(2) => Some(v(y(1))),
        _ => None,
    });
    assert_eq!(both, &v(x(1)) * &v(y(1)));
}

#[test]
fn star_examples() {
    let one = Polynomial::one();
    assert_eq!((&one + &v(x(1))).star(), &one - &v(x(1)));
    let p = &(&one + &v(t(1))) + &(&v(t(1)) * &v(t(2)));
    let q = &(&one - &v(t(1))) + &(&v(t(1)) * &v(t(2)));
    assert_eq!(p.star(), q);
}

#[test]
fn division_examples() {
    let (x1, x2, y1) = (v(x(1)), v(x(2)), v(y(1)));
    assert_eq!((&x1.pow(2) - &x2.pow(2)).exact_divide(&(&x1 - &x2)).unwrap(), &x1 + &x2);
    assert!(Polynomial::zero().exact_divide(&x1).unwrap().is_zero());
    let num = (&x1 * &y1).scale(&2.into());
    assert_eq!(num.exact_divide(&x1.scale(&Dyadic::from(-2))).unwrap(), -&y1);
    assert!(x1.exact_divide(&x2).is_err());
}

#[test]
fn dyadic_canonical_form() {
    assert_eq!(Dyadic::new(6, 2), Dyadic::new(3, 1));
    assert_eq!(&Dyadic::new(1, 1) + &Dyadic::new(1, 1), Dyadic::one());
    assert_eq!(Dyadic::pow2(-3).log2den(), 3);
    assert_eq!(Dyadic::from(5).half().to_string(), "5/2");
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let vars = [x(1), x(2), y(1), t(1)];
    let mono = proptest::collection::vec((0usize..4, 0i32..3), 0..3)
        .prop_map(move |ps| Monomial::from_pairs(ps.into_iter().map(|(i, e)| (vars[i], e))));
    let coeff = (-5i64..6, 0u32..3).prop_map(|(n, k)| Dyadic::new(n, k));
    proptest::collection::vec((mono, coeff), 0..5).prop_map(Polynomial::from_terms)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn star_is_a_ring_involution(a in poly(), b in poly()) {
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!((&a * &b).star(), &a.star() * &b.star());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }
}
