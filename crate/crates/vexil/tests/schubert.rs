use rand::SeedableRng;
use vexil::gamma::{p_lambda, q_lambda, GammaElement, Side, StrictPartition};
use vexil::polycore::{x, y, Polynomial};
use vexil::schubert::{
    divided_difference, group_elements, random_descent_word, schubert, schubert_table, schubert_via_word, top_class, top_triple,
    vexillary_polynomial,
};
use vexil::{Generator, SignedPermutation, Triple, WeylType};

fn px(i: u32) -> Polynomial {
    Polynomial::var(x(i))
}

fn sp(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

fn lam(p: &[u32]) -> StrictPartition {
    StrictPartition::new(p.to_vec()).unwrap()
}

#[test]
fn divided_difference_examples() {
    let x1 = GammaElement::from_polynomial(px(1));
    assert_eq!(divided_difference(Generator::S(1), &x1, WeylType::A, Side::X).unwrap(), GammaElement::one());
    let d = divided_difference(Generator::S0, &q_lambda(&lam(&[2])), WeylType::C, Side::X).unwrap();
    assert_eq!(d, &q_lambda(&lam(&[1])) + &GammaElement::from_polynomial(px(1)));
    // ∂_0(Q_k) = Σ_{j=1}^k x_1^{j-1} Q_{k-j}
    for k in 1..=4u32 {
        let mut expect = GammaElement::zero();
        for j in 1..=k {
            let basis = if j == k { GammaElement::one() } else { q_lambda(&lam(&[k - j])) };
            expect = &expect + &basis.scale(&px(1).pow(j - 1));
        }
        assert_eq!(divided_difference(Generator::S0, &q_lambda(&lam(&[k])), WeylType::C, Side::X).unwrap(), expect);
    }
    // ∂_1̂(P_k) = 2 Σ_{j=1}^{k-1} v_{j-1} P_{k-j} + v_{k-1}, v_j = Σ_{a+b=j} x_1^a x_2^b
    let v = |j: u32| -> Polynomial {
        let mut s = Polynomial::zero();
        for a in 0..=j {
            s = &s + &(&px(1).pow(a) * &px(2).pow(j - a));
        }
        s
    };
    for k in 1..=4u32 {
        let mut expect = GammaElement::from_polynomial(v(k - 1));
        for j in 1..k {
            expect = &expect + &p_lambda(&lam(&[k - j])).scale(&v(j - 1).scale(&2.into()));
        }
        let got = divided_difference(Generator::S1Hat, &p_lambda(&lam(&[k])), WeylType::D, Side::X).unwrap();
        assert_eq!(got, expect, "k = {k}");
    }
    // ∂_i² = 0
    let e = &q_lambda(&lam(&[3, 1])).scale(&px(1)) + &q_lambda(&lam(&[2])).scale(&px(2).pow(2));
    for g in [Generator::S0, Generator::S(1), Generator::S(2)] {
        let once = divided_difference(g, &e, WeylType::C, Side::X).unwrap();
        assert!(divided_difference(g, &once, WeylType::C, Side::X).unwrap().is_zero());
    }
    assert!(divided_difference(Generator::S1Hat, &e, WeylType::C, Side::X).is_err());
}

#[test]
fn top_classes() {
    let a = top_class(2, WeylType::A, false).unwrap();
    assert_eq!(a.as_polynomial().unwrap(), &px(1) - &Polynomial::var(y(1)));
    let c = top_class(1, WeylType::C, false).unwrap();
    assert_eq!(c.value, q_lambda(&lam(&[1])));
    let d = top_class(2, WeylType::D, true).unwrap();
    assert_eq!(d.w, sp("-1 -2"));
    assert_eq!(top_triple(2, WeylType::D, true).lambda().unwrap().parts(), vec![2, 0]);
}

#[test]
fn small_schubert_values() {
    let e = schubert(&SignedPermutation::identity(1), WeylType::C, 1).unwrap();
    assert_eq!(e.value, GammaElement::one());
    let s0 = schubert(&sp("-1"), WeylType::C, 2).unwrap();
    assert_eq!(s0.value, q_lambda(&lam(&[1])));
    let b = schubert(&sp("-1"), WeylType::B, 2).unwrap();
    assert_eq!(b.value, p_lambda(&lam(&[1])));
    let a = schubert(&sp("2 1"), WeylType::A, 3).unwrap();
    assert_eq!(a.as_polynomial().unwrap(), &px(1) - &Polynomial::var(y(1)));
    let a = schubert(&sp("1 3 2"), WeylType::A, 3).unwrap();
    assert_eq!(a.as_polynomial().unwrap(), &(&px(1) + &px(2)) - &(&Polynomial::var(y(1)) + &Polynomial::var(y(2))));
}

#[test]
fn routes_agree_in_rank_two() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for ty in [WeylType::A, WeylType::B, WeylType::C, WeylType::D] {
        let table = schubert_table(2, ty).unwrap();
        for w in group_elements(2, ty) {
            let s = schubert(&w, ty, 2).unwrap();
            assert_eq!(s.value, table[&w.trimmed()], "{ty} {w}");
            let word = random_descent_word(&w, ty, &mut rng);
            assert_eq!(schubert_via_word(&w, ty, 2, &word).unwrap().value, s.value);
            assert!(s.value.is_homogeneous());
            assert_eq!(s.value.degree().unwrap_or(0), w.length(ty) as i64, "{ty} {w}");
        }
    }
}

#[test]
fn vexillary_examples() {
    let a = Triple::new(vec![1], vec![1], vec![1], WeylType::A).unwrap();
    let v = vexillary_polynomial(&a).unwrap();
    assert_eq!(v.as_polynomial().unwrap(), &px(1) - &Polynomial::var(y(1)));
    let c = Triple::new(vec![1], vec![1], vec![1], WeylType::C).unwrap();
    let vc = vexillary_polynomial(&c).unwrap();
    assert_eq!(vc.value, schubert(&sp("-1"), WeylType::C, 2).unwrap().value);
}

#[test]
fn type_b_scaling_in_rank_two() {
    let b = schubert_table(2, WeylType::B).unwrap();
    for (w, c) in schubert_table(2, WeylType::C).unwrap() {
        assert_eq!(b[&w], c.scale_dyadic(&vexil::Dyadic::pow2(-(w.barred_count() as i64))), "{w}");
    }
}

#[test]
fn inverse_symmetry_in_rank_two() {
    let table = schubert_table(2, WeylType::C).unwrap();
    let s = schubert(&sp("-1"), WeylType::C, 2).unwrap();
    assert_eq!(s.swap_xy(), s);
    for (w, value) in &table {
        assert_eq!(value.swap_xy().swap_xy(), *value);
        assert_eq!(table[&w.inverse().trimmed()], value.swap_xy(), "{w}");
    }
}

#[test]
fn identity_three_on_a_small_triple() {
    use vexil::gamma::Basis;
    let d: Triple = "k=1;p=1;q=0;type=D".parse().unwrap();
    let mut c = d.plus_map().unwrap();
    assert_eq!(c, "k=1;p=2;q=1;type=C".parse().unwrap());
    c.ty = WeylType::B;
    let r = vexillary_polynomial(&d).unwrap().value.coefficients(Basis::P);
    let p = vexillary_polynomial(&c).unwrap().value.coefficients(Basis::P);
    let shifted: std::collections::BTreeMap<_, _> = p
        .into_iter()
        .filter(|(nu, _)| nu.len() % 2 == 1)
        .map(|(nu, v)| (StrictPartition::from_unsorted(nu.parts().iter().map(|x| x - 1).filter(|&x| x > 0).collect()).unwrap(), v))
        .collect();
    assert_eq!(r, shifted);
}

#[test]
fn leading_coefficient_of_qq() {
    let e = vexil::gamma::qq_lambda(&lam(&[2, 1]));
    let at_zero = e.substitute(|_| Some(Polynomial::zero()));
    assert_eq!(at_zero.coefficient(&lam(&[2, 1])), Polynomial::one());
}

#[test]
fn product_coefficients_in_rank_two() {
    use vexil::schubert::product_coefficients;
    let s0 = sp("-1");
    let coeffs = product_coefficients(&s0, &s0, WeylType::C, 2).unwrap();
    let lhs = {
        let a = schubert(&s0, WeylType::C, 2).unwrap().value;
        vexil::gamma::straighten_free(&(&a.to_free() * &a.to_free()))
    };
    let mut rhs = GammaElement::zero();
    for (w, c) in &coeffs {
        rhs = &rhs + &schubert(w, WeylType::C, 2).unwrap().value.scale(c);
    }
    assert_eq!(lhs, rhs);
}

mod invariants {
    use proptest::prelude::*;
    use vexil::gamma::{q_lambda, GammaElement, Side, StrictPartition};
    use vexil::polycore::{x, y, Polynomial};
    use vexil::schubert::divided_difference;
    use vexil::{Generator, WeylType};

    fn element() -> impl Strategy<Value = GammaElement> {
        let term = (proptest::collection::btree_set(1u32..5, 0..3), 0u32..3, 0u32..3, 0u32..2, -3i64..4);
        proptest::collection::vec(term, 1..4).prop_map(|terms| {
            let mut e = GammaElement::zero();
            for (parts, a, b, c, k) in terms {
                let lambda = StrictPartition::from_unsorted(parts.into_iter().collect()).unwrap();
                let coeff = &(&Polynomial::var(x(1)).pow(a) * &Polynomial::var(x(2)).pow(b)) * &Polynomial::var(y(1)).pow(c);
                e = &e + &q_lambda(&lambda).scale(&coeff.scale(&k.into()));
            }
            e
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn divided_differences_square_to_zero(e in element(), g in 0usize..3) {
            let (g, ty) = [(Generator::S0, WeylType::C), (Generator::S(1), WeylType::C), (Generator::S1Hat, WeylType::D)][g];
            let once = divided_difference(g, &e, ty, Side::X).unwrap();
            prop_assert!(divided_difference(g, &once, ty, Side::X).unwrap().is_zero());
        }
    }
}
