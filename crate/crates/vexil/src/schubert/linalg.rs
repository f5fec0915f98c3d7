//! Exact linear solves over the rationals for coefficient extraction.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gamma::{GammaElement, StrictPartition};
use crate::polycore::Monomial;

type Key = (StrictPartition, Monomial);

fn flatten(e: &GammaElement) -> BTreeMap<Key, BigRational> {
    let mut out = BTreeMap::new();
    for (l, c) in e.terms() {
        for (m, d) in c.terms() {
            out.insert((l.clone(), m.clone()), d.to_rational());
        }
    }
    out
}

/// Finds rationals `a_i` with `target = Σ a_i basis[i]`, or `None` when the
/// target lies outside the span. Free directions are set to zero.
pub fn solve_in_span(target: &GammaElement, basis: &[GammaElement]) -> Option<Vec<BigRational>> {
    let cols: Vec<_> = basis.iter().map(flatten).collect();
    let rhs = flatten(target);
    let keys: BTreeSet<Key> = cols.iter().flat_map(|c| c.keys().cloned()).chain(rhs.keys().cloned()).collect();
    let n = basis.len();
    let zero = BigRational::zero();
    // rows: [coefficients of the basis…, rhs]
    let mut rows: Vec<Vec<BigRational>> = keys
        .iter()
        .map(|k| {
            let mut r: Vec<BigRational> = cols.iter().map(|c| c.get(k).cloned().unwrap_or_else(BigRational::zero)).collect();
            r.push(rhs.get(k).cloned().unwrap_or_else(BigRational::zero));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..rows.len()).find(|&i| rows[i][col] != zero) else { continue };
        rows.swap(row, p);
        let inv = BigRational::one() / rows[row][col].clone();
        for v in rows[row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[row].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != row && r[col] != zero {
                let f = r[col].clone();
                for (v, pv) in r.iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if rows[row..].iter().any(|r| r[n] != zero) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][n].clone();
    }
    Some(sol)
}
