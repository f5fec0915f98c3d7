use vexil::multischur::{multischur_det, pfaffian, MultiSchurError, SkewOddMatrix};
use vexil::polycore::{t, Polynomial, Var};

fn v(i: u32) -> Polynomial {
    Polynomial::var(Var::new(vexil::polycore::Family::Z, i))
}

#[test]
fn small_pfaffians() {
    let a = pfaffian(2, |_, _| v(1), |_| Polynomial::zero());
    assert_eq!(a, v(1));
    let b = pfaffian(1, |_, _| Polynomial::zero(), |_| v(7));
    assert_eq!(b, v(7));
    let idx = |i: usize, j: usize| 10 * (i as u32 + 1) + (j as u32 + 1);
    let m = pfaffian(4, |i, j| v(idx(i, j)), |_| Polynomial::zero());
    let expect = &(&(&v(12) * &v(34)) - &(&v(13) * &v(24))) + &(&v(14) * &v(23));
    assert_eq!(m, expect);
}

#[test]
fn odd_pfaffian_expands_along_border() {
    let idx = |i: usize, j: usize| 10 * (i as u32 + 1) + (j as u32 + 1);
    let p = pfaffian(3, |i, j| v(idx(i, j)), |k| v(k as u32 + 1));
    // m_1 m_23 - m_2 m_13 + m_3 m_12
    let expect = &(&(&v(1) * &v(23)) - &(&v(2) * &v(13))) + &(&v(3) * &v(12));
    assert_eq!(p, expect);
}

#[test]
fn missing_border() {
    let m = SkewOddMatrix::from_fn(3, |_, _| Polynomial::one());
    assert_eq!(m.pfaffian(), Err(MultiSchurError::MissingBorder(3)));
    assert!(m.with_border(vec![Polynomial::one(); 3]).pfaffian().is_ok());
}

#[test]
fn determinants() {
    // c_k of degree k
    let c = |k: usize| match k {
        0 => Polynomial::one(),
        1 => Polynomial::var(t(1)),
        _ => &Polynomial::var(t(2)) * &Polynomial::var(t(3)),
    };
    // one row
    let s = vec![&(&Polynomial::one() + &c(1)) + &c(2)];
    assert_eq!(multischur_det(&[2], &s).unwrap(), c(2));
    // (1,1): c1^2 - c2
    let s2 = vec![s[0].clone(), s[0].clone()];
    assert_eq!(multischur_det(&[1, 1], &s2).unwrap(), &(&c(1) * &c(1)) - &c(2));
    assert_eq!(multischur_det(&[0, 0, 0], &[s[0].clone(), s[0].clone(), s[0].clone()]).unwrap(), Polynomial::one());
}

fn elementary(i: u32, k: u32) -> Polynomial {
    vexil::polycore::prod_one_plus((1..=k).map(t)).homogeneous_component(i as i64)
}

fn rr(parts: &[u32]) -> vexil::GammaElement {
    use vexil::gamma::TypeDPartition;
    use vexil::multischur::{multischur_pf_d_normalized, DPairedSeries};
    let lambda = TypeDPartition::new(parts.to_vec()).unwrap();
    let pairs: Vec<DPairedSeries> =
        parts.iter().map(|&p| DPairedSeries::with_q(vexil::polycore::prod_one_plus((1..=p).map(t)))).collect();
    multischur_pf_d_normalized(&lambda, &pairs).unwrap()
}

#[test]
fn type_d_pfaffian_examples() {
    use vexil::gamma::{p_lambda, StrictPartition};
    use vexil::GammaElement;
    let pk = |j: u32| p_lambda(&StrictPartition::new(vec![j]).unwrap());
    assert_eq!(rr(&[0]), GammaElement::one());
    for k in 1..=4u32 {
        let mut r_k0 = GammaElement::zero();
        for i in 0..k {
            r_k0 = &r_k0 + &pk(k - i).scale(&elementary(i, k));
        }
        let r_k = &r_k0 + &GammaElement::from_polynomial(elementary(k, k));
        assert_eq!(rr(&[k]), r_k, "k = {k}");
        assert_eq!(rr(&[k, 0]), r_k0, "k = {k}");
        assert_ne!(r_k, r_k0);
    }
}

#[test]
fn multischur_examples() {
    use vexil::gamma::{q_lambda, GeneratorSeries, StrictPartition};
    use vexil::multischur::multischur_pf;
    for k in 1..=4i64 {
        let expect = q_lambda(&StrictPartition::new(vec![k as u32]).unwrap());
        assert_eq!(multischur_pf(&[k], &[GeneratorSeries::q()]).unwrap(), expect);
    }
    let q = GeneratorSeries::q();
    let expect = q_lambda(&StrictPartition::new(vec![2, 1]).unwrap());
    assert_eq!(multischur_pf(&[2, 1], &[q.clone(), q]).unwrap(), expect);
    assert_eq!(multischur_pf(&[], &[]).unwrap(), vexil::GammaElement::one());
    let one_row = vec![vexil::polycore::prod_one_plus((1..=4).map(t))];
    assert_eq!(multischur_det(&[3], &one_row).unwrap(), elementary(3, 4));
}

mod alternation {
    use proptest::prelude::*;
    use vexil::multischur::{determinant, pfaffian};
    use vexil::Dyadic;

    fn skew(n: usize) -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<i64>)> {
        (proptest::collection::vec(proptest::collection::vec(-3i64..4, n), n), proptest::collection::vec(-3i64..4, n))
    }

    fn entry(m: &[Vec<i64>], i: usize, j: usize) -> Dyadic {
        if i < j {
            Dyadic::from(m[i][j])
        } else if i > j {
            -Dyadic::from(m[j][i])
        } else {
            Dyadic::zero()
        }
    }

    proptest! {
        /// Swapping two indices negates the Pfaffian.
        #[test]
        fn swap_negates((m, b) in skew(5), i in 0usize..5, j in 0usize..5) {
            prop_assume!(i != j);
            let sigma = |a: usize| if a == i { j } else if a == j { i } else { a };
            let pf = pfaffian(5, |a, c| entry(&m, a, c), |a| Dyadic::from(b[a]));
            let swapped = pfaffian(5, |a, c| entry(&m, sigma(a), sigma(c)), |a| Dyadic::from(b[sigma(a)]));
            prop_assert_eq!(swapped, -pf);
        }

        /// `Pf(M)² = det(M)` for even size.
        #[test]
        fn square_is_determinant((m, _) in skew(4)) {
            let pf = pfaffian(4, |a, c| entry(&m, a, c), |_| Dyadic::zero());
            prop_assert_eq!(&pf * &pf, determinant(4, |a, c| entry(&m, a, c)));
        }
    }
}
