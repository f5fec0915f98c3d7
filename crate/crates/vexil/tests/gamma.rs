use proptest::prelude::*;
use vexil::gamma::{
    apply_symmetry, q_lambda, q_pair, qq_lambda, qq_pair, specialize_oracle, straighten_product, Basis, GammaElement,
    GeneratorSeries, OracleMode, Side, StrictPartition, Symmetry,
};
use vexil::polycore::{prod_one_plus, t, x, z, Polynomial};

fn lam(p: &[u32]) -> StrictPartition {
    StrictPartition::new(p.to_vec()).unwrap()
}

fn q(p: &[u32]) -> GammaElement {
    q_lambda(&lam(p))
}

fn c(e: &GammaElement, k: i64) -> GammaElement {
    e.scale(&Polynomial::constant(k))
}

#[test]
fn straightening_examples() {
    assert_eq!(straighten_product(&[1, 1]), c(&q(&[2]), 2));
    assert_eq!(straighten_product(&[2, 1]), &q(&[2, 1]) + &c(&q(&[3]), 2));
    assert_eq!(straighten_product(&[5]), q(&[5]));
}

#[test]
fn pair_examples() {
    let s = GeneratorSeries::q();
    assert!(q_pair(3, 3, &s, &s).is_zero());
    let a = GeneratorSeries::q_times(prod_one_plus([t(1)]));
    let b = GeneratorSeries::q_times(prod_one_plus([t(2), t(3)]));
    assert_eq!(q_pair(3, 1, &a, &b), -&q_pair(1, 3, &b, &a));
    assert_eq!(q_pair(2, 1, &s, &s), q(&[2, 1]));
}

#[test]
fn pfaffian_examples() {
    assert_eq!(qq_lambda(&StrictPartition::empty()), GammaElement::one());
    assert_eq!(q_lambda(&lam(&[4])), GammaElement::basis(lam(&[4])));
    assert_eq!(&straighten_product(&[2, 1]) - &c(&q(&[3]), 2), q(&[2, 1]));
}

#[test]
fn coefficient_examples() {
    assert_eq!(GeneratorSeries::q().coefficient(3), q(&[3]));
    let s = GeneratorSeries::q_times(prod_one_plus([t(1)]));
    assert_eq!(s.coefficient(2), &q(&[2]) + &q(&[1]).scale(&Polynomial::var(t(1))));
    let plain = GeneratorSeries::new(vexil::SeriesUnit::One, prod_one_plus([t(1), t(2)]));
    assert_eq!(plain.coefficient(2), GammaElement::from_polynomial(&Polynomial::var(t(1)) * &Polynomial::var(t(2))));
}

#[test]
fn symmetry_examples() {
    let x1 = Polynomial::var(x(1));
    let s0 = apply_symmetry(Symmetry::S0, Side::X, &q(&[1]));
    assert_eq!(s0, &q(&[1]) + &GammaElement::from_polynomial(x1.scale(&2.into())));
    let e = q(&[2]).scale(&x1);
    assert_eq!(apply_symmetry(Symmetry::S(1), Side::X, &e), q(&[2]).scale(&Polynomial::var(x(2))));
    let twice = apply_symmetry(Symmetry::S0, Side::X, &apply_symmetry(Symmetry::S0, Side::X, &q(&[2])));
    assert_eq!(twice, q(&[2]));
}

#[test]
fn oracle_examples() {
    let negt = OracleMode::NegT { nu: lam(&[1]) };
    assert!(specialize_oracle(&qq_pair(2, 1), &negt).unwrap().is_zero());
    let sym = OracleMode::Symfun { n: 2, d: 1 };
    let expect = (&Polynomial::var(z(1)) + &Polynomial::var(z(2))).scale(&2.into());
    assert_eq!(specialize_oracle(&q(&[1]), &sym).unwrap(), expect);
    assert_eq!(specialize_oracle(&GammaElement::one(), &sym).unwrap(), Polynomial::one());
}

#[test]
fn p_basis_rescaling() {
    let e = q(&[3, 1]);
    let p = e.coefficients(Basis::P);
    assert_eq!(p[&lam(&[3, 1])], Polynomial::constant(4));
}

fn parts() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..5, 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    /// Products of generators straighten to the same value in both orders
    /// and agree with the symmetric-function specialisation.
    #[test]
    fn straightening_is_a_ring_map(a in parts(), b in parts()) {
        let ab: Vec<u32> = a.iter().chain(&b).copied().collect();
        let ba: Vec<u32> = b.iter().chain(&a).copied().collect();
        prop_assert_eq!(straighten_product(&ab), straighten_product(&ba));
        let mode = OracleMode::Symfun { n: 4, d: ab.iter().sum::<u32>() };
        let lhs = specialize_oracle(&straighten_product(&ab), &mode).unwrap();
        let rhs = &specialize_oracle(&straighten_product(&a), &mode).unwrap() * &specialize_oracle(&straighten_product(&b), &mode).unwrap();
        prop_assert_eq!(lhs, rhs.truncate(ab.iter().sum::<u32>() as i64));
    }
}
