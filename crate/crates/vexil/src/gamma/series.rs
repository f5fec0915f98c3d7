use super::free::FreeGamma;
use super::{straighten_free, GammaElement};
use crate::multischur::DPairedSeries;
use crate::polycore::{Dyadic, Polynomial};

/// The formal unit a series is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesUnit {
    /// No generator factor: the series is its (finite) multiplier.
    One,
    /// `Q = 1 + Q_1 + Q_2 + ⋯`.
    Q,
    /// `P = 1 + P_1 + P_2 + ⋯` with `P_k = Q_k / 2`.
    P,
}

/// A series `unit · g` with `g` a polynomial multiplier with constant term 1.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSeries {
    unit: SeriesUnit,
    multiplier: Polynomial,
    components: Vec<Polynomial>,
}

impl GeneratorSeries {
    pub fn new(unit: SeriesUnit, multiplier: Polynomial) -> Self {
        assert!(multiplier.constant_term().is_one(), "multiplier must have constant term 1");
        let deg = multiplier.degree().unwrap_or(0).max(0) as usize;
        let components = multiplier.graded_components(deg);
        GeneratorSeries { unit, multiplier, components }
    }

    pub fn q() -> Self {
        GeneratorSeries::new(SeriesUnit::Q, Polynomial::one())
    }

    pub fn p() -> Self {
        GeneratorSeries::new(SeriesUnit::P, Polynomial::one())
    }

    pub fn q_times(multiplier: Polynomial) -> Self {
        GeneratorSeries::new(SeriesUnit::Q, multiplier)
    }

    pub fn unit(&self) -> SeriesUnit {
        self.unit
    }

    pub fn multiplier(&self) -> &Polynomial {
        &self.multiplier
    }

    fn multiplier_component(&self, i: i64) -> Option<&Polynomial> {
        if i < 0 {
            None
        } else {
            self.components.get(i as usize)
        }
    }

    /// The degree-`m` coefficient as an element of the free generator ring.
    pub fn coefficient_free(&self, m: i64) -> FreeGamma<Polynomial> {
        if m < 0 {
            return FreeGamma::<Polynomial>::zero();
        }
        match self.unit {
            SeriesUnit::One => match self.multiplier_component(m) {
                Some(p) => FreeGamma::scalar(p.clone()),
                None => FreeGamma::<Polynomial>::zero(),
            },
            SeriesUnit::Q | SeriesUnit::P => {
                let mut out = FreeGamma::<Polynomial>::zero();
                for i in 0..=m.min(self.components.len() as i64 - 1) {
                    let g = &self.components[i as usize];
                    if g.is_zero() {
                        continue;
                    }
                    let k = m - i;
                    let c = if self.unit == SeriesUnit::P && k > 0 { g.scale(&Dyadic::pow2(-1)) } else { g.clone() };
                    out = &out + &FreeGamma::generator(k).scale(&c);
                }
                out
            }
        }
    }

    /// The degree-`m` coefficient in the `Q_λ` basis.
    pub fn coefficient(&self, m: i64) -> GammaElement {
        straighten_free(&self.coefficient_free(m))
    }
}

/// Returns the first degree `m ≤ max` at which `d(i) d(j)* ≠ c(i) c(j)*`.
pub fn star_relation_holds(pi: &DPairedSeries, pj: &DPairedSeries, max: usize) -> Option<usize> {
    for m in 0..=max as i64 {
        let mut diff = FreeGamma::<Polynomial>::zero();
        for a in 0..=m {
            let sign = Polynomial::constant(if (m - a) % 2 == 0 { 1 } else { -1 });
            let dd = &pi.d.coefficient_free(a) * &pj.d.coefficient_free(m - a);
            let cc = &pi.c.coefficient_free(a) * &pj.c.coefficient_free(m - a);
            diff = &diff + &(&dd - &cc).scale(&sign);
        }
        if !straighten_free(&diff).is_zero() {
            return Some(m as usize);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::StrictPartition;
    use crate::polycore::{prod_one_plus, t};

    #[test]
    fn coefficients() {
        let q = GeneratorSeries::q();
        assert_eq!(q.coefficient(3), GammaElement::basis(StrictPartition::new(vec![3]).unwrap()));
        let s = GeneratorSeries::q_times(prod_one_plus([t(1)]));
        let expect = &GammaElement::basis(StrictPartition::new(vec![2]).unwrap())
            + &GammaElement::basis(StrictPartition::new(vec![1]).unwrap()).scale(&Polynomial::var(t(1)));
        assert_eq!(s.coefficient(2), expect);
        let e = GeneratorSeries::new(SeriesUnit::One, prod_one_plus([t(1), t(2)]));
        assert_eq!(e.coefficient(2), GammaElement::from_polynomial(&Polynomial::var(t(1)) * &Polynomial::var(t(2))));
        assert!(e.coefficient(3).is_zero());
        assert_eq!(q.coefficient(0), GammaElement::one());
    }
}
