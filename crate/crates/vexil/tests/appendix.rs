use vexil::appendix::{
    default_window, degenerate_pushforward, epsilon, lemma_a1_check, prop_a1_check, prop_a1_sides, prop_a2_check, sgn,
    AppendixError, LaurentElement, PushforwardData,
};
use vexil::gamma::GammaElement;
use vexil::multischur::multischur_pf;
use vexil::polycore::{h, u, Monomial, Polynomial};
use vexil::schubert::{row_series_bc, vexillary_polynomial};
use vexil::Triple;

fn hpow(k: u32, e: i32) -> Polynomial {
    Polynomial::term(Monomial::from_pairs([(h(k), e)]), 1)
}

fn upow(k: u32, e: i32) -> Polynomial {
    Polynomial::term(Monomial::from_pairs([(u(k), e)]), 1)
}

#[test]
fn signs() {
    assert_eq!(sgn(&[1, 2, 3], &[]), 1);
    assert_eq!(epsilon(1, &[1, 2, 3]), -1);
    assert_eq!(epsilon(2, &[1, 2, 3]), 1);
    for s in 0..=6u32 {
        assert!(lemma_a1_check(&(1..=s).collect::<Vec<_>>()), "|K| = {s}");
    }
    assert!(lemma_a1_check(&[2, 5, 6]));
}

#[test]
fn operator_identity() {
    let one = Monomial::one();
    let (lhs, _) = prop_a1_sides(&[2], &[1], 4);
    let x = LaurentElement::one();
    assert_eq!(lhs.apply(&x).poly, &hpow(1, 2) + &upow(1, 2));
    assert!(prop_a1_check(&[2, 1], &[1, 2], std::slice::from_ref(&one), 6).unwrap());
    let monos = [
        one,
        Monomial::var(h(1)),
        Monomial::from_pairs([(h(1), 1), (h(2), 1), (u(3), 1)]),
    ];
    let w = default_window(&[3, 2, 1], &monos);
    assert!(prop_a1_check(&[3, 2, 1], &[1, 2, 3], &monos, w).unwrap());
}

#[test]
fn pushforward_identity() {
    for lambda in [vec![2], vec![2, 1], vec![2, 0], vec![3, 1, 0]] {
        let data = PushforwardData::symbolic(&lambda).unwrap();
        assert!(prop_a2_check(&data).unwrap(), "{lambda:?}");
    }
}

#[test]
fn degenerate_case_matches_type_c() {
    let t: Triple = "k=1,2;p=2,1;q=2,1;type=C".parse().unwrap();
    let lambda: Vec<u32> = t.lambda().unwrap().parts();
    let rows = row_series_bc(&t);
    let max = 2 * lambda[0] as i64 + 4;
    let c: Vec<Vec<GammaElement>> = rows.iter().map(|s| (0..=max).map(|n| s.coefficient(n)).collect()).collect();
    let got = degenerate_pushforward(&lambda, c.clone(), &[0, 0]);
    assert_eq!(got, vexillary_polynomial(&t).unwrap().value);
    for m in [[1u32, 0], [0, 2], [1, 1]] {
        let idx: Vec<i64> = lambda.iter().zip(m).map(|(&l, e)| (l + e) as i64).collect();
        let got = degenerate_pushforward(&lambda, c.clone(), &m);
        assert_eq!(got, multischur_pf(&idx, &rows).unwrap(), "{m:?}");
    }
}

#[test]
fn broken_relations_are_reported() {
    let mut data = PushforwardData::symbolic(&[2, 1]).unwrap();
    data.d[0][1] = &data.d[0][1] + &GammaElement::one();
    assert!(matches!(prop_a2_check(&data), Err(AppendixError::RelationViolated(..))));
}
