//! Specialisations `Q ↦ F` of `Γ` into ordinary power series, computed
//! directly from the Pfaffian definition of `Q_λ` (independent of the
//! straightening tables).

use super::{GammaElement, GammaError, StrictPartition};
use crate::multischur::pfaffian;
use crate::polycore::{t, z, Polynomial};

/// Which specialisation to apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// `Q ↦ ∏_{i=1}^N (1+z_i)/(1−z_i)` truncated at degree `D`.
    Symfun { n: u32, d: u32 },
    /// `Q ↦ ∏_i (1−t_{ν_i})/(1+t_{ν_i})`; the result is truncated at the
    /// degree of the input.
    NegT { nu: StrictPartition },
}

fn one_plus(p: Polynomial) -> Polynomial {
    &Polynomial::one() + &p
}

/// `∏ (1 + s·v)/(1 − s·v)` over the given variables, truncated.
fn cayley(vars: &[Polynomial], max: i64) -> Polynomial {
    let mut acc = Polynomial::one();
    for v in vars {
        let den = one_plus(-v).series_inverse(max).expect("unit constant term");
        acc = acc.mul_truncated(&one_plus(v.clone()).mul_truncated(&den, max), max);
    }
    acc
}

/// Image of `Q_λ` when `Q` is sent to the series `f` (given with all
/// components up to at least `|λ|`).
pub fn basis_image(lambda: &StrictPartition, f: &[Polynomial]) -> Polynomial {
    let comp = |k: i64| -> Polynomial {
        if k < 0 || k as usize >= f.len() {
            Polynomial::zero()
        } else {
            f[k as usize].clone()
        }
    };
    let parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    pfaffian(
        parts.len(),
        |i, j| {
            let (a, b) = (parts[i], parts[j]);
            let mut out = &comp(a) * &comp(b);
            for jj in 1..=b {
                let tt = (&comp(a + jj) * &comp(b - jj)).scale(&(if jj % 2 == 0 { 2 } else { -2 }).into());
                out = &out + &tt;
            }
            out
        },
        |k| comp(parts[k]),
    )
}

/// Applies `Q ↦ series` to `e`, where `series` has constant term 1 and is
/// known up to degree `max`.
pub fn specialize_with(e: &GammaElement, series: &Polynomial, max: i64) -> Polynomial {
    let comps = series.graded_components(max.max(0) as usize);
    let mut out = Polynomial::zero();
    for (l, c) in e.terms() {
        out = &out + &(c * &basis_image(l, &comps));
    }
    out
}

/// The specialisation oracle.
pub fn specialize_oracle(e: &GammaElement, mode: &OracleMode) -> Result<Polynomial, GammaError> {
    match mode {
        OracleMode::Symfun { n, d } => {
            let need = e.terms().map(|(l, _)| l.size()).max().unwrap_or(0);
            if need > *d {
                return Err(GammaError::TruncationTooSmall { needed: need, got: *d });
            }
            let vars: Vec<Polynomial> = (1..=*n).map(|i| Polynomial::var(z(i))).collect();
            let f = cayley(&vars, *d as i64);
            Ok(specialize_with(e, &f, *d as i64))
        }
        OracleMode::NegT { nu } => {
            let max = e.degree().unwrap_or(0).max(0);
            let vars: Vec<Polynomial> = nu.parts().iter().map(|&i| -&Polynomial::var(t(i))).collect();
            let f = cayley(&vars, max);
            Ok(specialize_with(e, &f, max).truncate(max))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q1_symfun() {
        let e = GammaElement::basis(StrictPartition::new(vec![1]).unwrap());
        let img = specialize_oracle(&e, &OracleMode::Symfun { n: 2, d: 1 }).unwrap();
        let expect = (&Polynomial::var(z(1)) + &Polynomial::var(z(2))).scale(&2.into());
        assert_eq!(img, expect);
        let one = specialize_oracle(&GammaElement::one(), &OracleMode::Symfun { n: 2, d: 1 }).unwrap();
        assert_eq!(one, Polynomial::one());
        let big = GammaElement::basis(StrictPartition::new(vec![2]).unwrap());
        assert!(matches!(
            specialize_oracle(&big, &OracleMode::Symfun { n: 2, d: 1 }),
            Err(GammaError::TruncationTooSmall { .. })
        ));
    }
}
