//! Degeneracy-locus formulas: the vexillary Pfaffians and determinants with
//! `Q` replaced by a formal Chern series.
//!
//! Series here are graded by an explicit index (`c_i` sits in slot `i`), so
//! formal Chern classes can be single variables of polynomial degree 1.

use super::SchubertError;
use crate::multischur::{determinant, pfaffian};
use crate::polycore::{Dyadic, Polynomial, Var};
use crate::triples::{Triple, TripleLambda};
use crate::weyl::WeylType;

/// A truncated series `c_0 + c_1 + c_2 + ⋯` given by its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernSeries(pub Vec<Polynomial>);

impl ChernSeries {
    pub fn one() -> Self {
        ChernSeries(vec![Polynomial::one()])
    }

    /// `1 + v_1 + v_2 + ⋯ + v_m`: formal Chern classes named by variables.
    pub fn formal(classes: impl IntoIterator<Item = Var>) -> Self {
        let mut c = vec![Polynomial::one()];
        c.extend(classes.into_iter().map(Polynomial::var));
        ChernSeries(c)
    }

    /// Total-degree components of a polynomial, up to `max`.
    pub fn graded(p: &Polynomial, max: usize) -> Self {
        ChernSeries(p.graded_components(max))
    }

    pub fn component(&self, i: i64) -> Polynomial {
        if i < 0 {
            return Polynomial::zero();
        }
        self.0.get(i as usize).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn mul(&self, other: &ChernSeries, max: usize) -> ChernSeries {
        let mut out = vec![Polynomial::zero(); max + 1];
        for (i, a) in self.0.iter().enumerate().take(max + 1) {
            for (j, b) in other.0.iter().enumerate().take(max + 1 - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ChernSeries(out)
    }
}

/// Chern data for [`degeneracy_formula`].
///
/// * `base` replaces `Q`;
/// * `e(m)` and `f(m)` are the factors attached to `p_i` and `q_i`: the
///   row series is `base · e(p_i − 1) · f(q_i − 1)` for B/C (B then
///   carries `2^{-r}`, `base` still standing for `c(V − E_0 − F_1)`),
///   `c = e(p_i) · f(q_i)`, `d = base · c` for D, and
///   `base · e(p_i) · f(q_i)` for A.
pub struct DegeneracyData<'a> {
    pub base: ChernSeries,
    pub e: &'a dyn Fn(u32) -> ChernSeries,
    pub f: &'a dyn Fn(u32) -> ChernSeries,
}

fn pair(ck: &ChernSeries, a: i64, cl: &ChernSeries, b: i64) -> Polynomial {
    let mut out = &ck.component(a) * &cl.component(b);
    for j in 1..=b {
        let c = Dyadic::from(if j % 2 == 0 { 2 } else { -2 });
        out = &out + &(&ck.component(a + j) * &cl.component(b - j)).scale(&c);
    }
    out
}

/// The class of the degeneracy locus of a triple under the given Chern
/// data.
pub fn degeneracy_formula(t: &Triple, data: &DegeneracyData<'_>) -> Result<Polynomial, SchubertError> {
    let lambda = t.lambda()?;
    let idx: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let r = idx.len();
    let max = (2 * idx.first().copied().unwrap_or(0) + r as i64).max(0) as usize;
    let rows: Vec<usize> = (1..=t.rank()).map(|k| t.governing_index(k)).collect();
    Ok(match lambda {
        TripleLambda::Ordinary(_) => {
            let a: Vec<ChernSeries> = rows
                .iter()
                .map(|&i| data.base.mul(&(data.e)(t.p[i]), max).mul(&(data.f)(t.q[i]), max))
                .collect();
            determinant(r, |i, j| a[i].component(idx[i] + j as i64 - i as i64))
        }
        TripleLambda::Strict(_) => {
            let c: Vec<ChernSeries> = rows
                .iter()
                .map(|&i| data.base.mul(&(data.e)(t.p[i] - 1), max).mul(&(data.f)(t.q[i] - 1), max))
                .collect();
            let pf = pfaffian(r, |k, l| pair(&c[k], idx[k], &c[l], idx[l]), |k| c[k].component(idx[k]));
            if t.ty == WeylType::B {
                let len = idx.iter().filter(|&&p| p > 0).count() as i64;
                pf.scale(&Dyadic::pow2(-len))
            } else {
                pf
            }
        }
        TripleLambda::TypeD(_) => {
            let c: Vec<ChernSeries> = rows.iter().map(|&i| (data.e)(t.p[i]).mul(&(data.f)(t.q[i]), max)).collect();
            let d: Vec<ChernSeries> = c.iter().map(|ci| data.base.mul(ci, max)).collect();
            let pf = pfaffian(
                r,
                |k, l| {
                    let (a, b) = (idx[k], idx[l]);
                    let left = &d[k].component(a) - &c[k].component(a);
                    let right = &d[l].component(b) + &c[l].component(b);
                    let mut out = &left * &right;
                    for j in 1..=b {
                        let s = Dyadic::from(if j % 2 == 0 { 2 } else { -2 });
                        out = &out + &(&d[k].component(a + j) * &d[l].component(b - j)).scale(&s);
                    }
                    out
                },
                |k| &d[k].component(idx[k]) + &c[k].component(idx[k]),
            );
            pf.scale(&Dyadic::pow2(-(r as i64)))
        }
    })
}
