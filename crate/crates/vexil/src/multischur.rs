//! Pfaffians with the odd-size convention, multi-Schur Pfaffians of types
//! B/C and D, and the multi-Schur determinant of type A.

use std::collections::HashMap;

use crate::gamma::{
    straighten_free, star_relation_holds, FreeGamma, GammaElement, GeneratorSeries, SeriesUnit,
    TypeDPartition,
};
use crate::polycore::{Dyadic, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultiSchurError {
    #[error("odd Pfaffian of size {0} needs border entries")]
    MissingBorder(usize),
    #[error("{0} series supplied for a partition of length {1}")]
    LengthMismatch(usize, usize),
    #[error("entry matrix is not skew-symmetric at ({0}, {1})")]
    SkewCheckFailed(usize, usize),
    #[error("d({0}) d({1})* differs from c({0}) c({1})* in degree {2}")]
    StarRelationFailed(usize, usize, usize),
    #[error("c({0}) does not divide {1}")]
    DivisibilityFailed(usize, String),
}

/// Pfaffian of the skew matrix with entries `entry(i, j)` for `i < j`
/// (0-based, size `r`). For odd `r` the matrix is bordered by an extra
/// first row with entries `border(k)`, which gives the expansion
/// `Pf(M) = Σ_k (-1)^{k-1} m_k Pf(M_k)`.
pub fn pfaffian<R>(r: usize, entry: impl Fn(usize, usize) -> R, border: impl Fn(usize) -> R) -> R
where
    R: Ring,
{
    if r == 0 {
        return R::one();
    }
    let odd = r % 2 == 1;
    let n = if odd { r + 1 } else { r };
    assert!(n <= 62, "Pfaffian too large");
    // index 0 is the border when r is odd
    let mut m: Vec<Vec<R>> = vec![vec![R::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate().skip(i + 1) {
            *cell = if odd {
                if i == 0 {
                    border(j - 1)
                } else {
                    entry(i - 1, j - 1)
                }
            } else {
                entry(i, j)
            };
        }
    }
    let mut memo: HashMap<u64, R> = HashMap::new();
    pf_rec(&m, (1u64 << n) - 1, &mut memo)
}

fn pf_rec<R>(m: &[Vec<R>], set: u64, memo: &mut HashMap<u64, R>) -> R
where
    R: Ring,
{
    if set == 0 {
        return R::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = R::zero();
    let mut pos = 0;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        pos += 1;
        if m[i][j].is_zero() {
            continue;
        }
        let sub = pf_rec(m, rest & !(1u64 << j), memo);
        if sub.is_zero() {
            continue;
        }
        let t = m[i][j].times(&sub);
        acc = if pos % 2 == 1 { acc.plus(&t) } else { acc.minus(&t) };
    }
    memo.insert(set, acc.clone());
    acc
}

/// Determinant by Laplace expansion along rows, memoised over column sets.
pub fn determinant<R>(r: usize, entry: impl Fn(usize, usize) -> R) -> R
where
    R: Ring,
{
    let m: Vec<Vec<R>> = (0..r).map(|i| (0..r).map(|j| entry(i, j)).collect()).collect();
    let mut memo = HashMap::new();
    det_rec(&m, 0, (1u64 << r) - 1, &mut memo)
}

fn det_rec<R>(m: &[Vec<R>], row: usize, cols: u64, memo: &mut HashMap<u64, R>) -> R
where
    R: Ring,
{
    if row == m.len() {
        return R::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = R::zero();
    let mut pos = 0;
    let mut bits = cols;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let sign_even = pos % 2 == 0;
        pos += 1;
        if m[row][j].is_zero() {
            continue;
        }
        let sub = det_rec(m, row + 1, cols & !(1u64 << j), memo);
        let t = m[row][j].times(&sub);
        acc = if sign_even { acc.plus(&t) } else { acc.minus(&t) };
    }
    memo.insert(cols, acc.clone());
    acc
}

/// A skew matrix given by its upper triangle, with optional border for the
/// odd case.
#[derive(Clone, Debug)]
pub struct SkewOddMatrix<R> {
    pub size: usize,
    /// `upper[i][j - i - 1]` is the entry at `(i, j)`, `i < j`.
    pub upper: Vec<Vec<R>>,
    pub border: Option<Vec<R>>,
}

impl<R> SkewOddMatrix<R>
where
    R: Ring,
{
    pub fn from_fn(size: usize, entry: impl Fn(usize, usize) -> R) -> Self {
        let upper = (0..size).map(|i| ((i + 1)..size).map(|j| entry(i, j)).collect()).collect();
        SkewOddMatrix { size, upper, border: None }
    }

    pub fn with_border(mut self, border: Vec<R>) -> Self {
        self.border = Some(border);
        self
    }

    pub fn entry(&self, i: usize, j: usize) -> R {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[i][j - i - 1].clone(),
            Equal => R::zero(),
            Greater => self.upper[j][i - j - 1].negated(),
        }
    }

    pub fn pfaffian(&self) -> Result<R, MultiSchurError> {
        if self.size % 2 == 1 && self.border.is_none() {
            return Err(MultiSchurError::MissingBorder(self.size));
        }
        let border = self.border.clone().unwrap_or_default();
        Ok(pfaffian(self.size, |i, j| self.entry(i, j), |k| border[k].clone()))
    }
}

/// Entry `c(k)_a c(l)_b + 2 Σ_{j=1}^{b} (-1)^j c(k)_{a+j} c(l)_{b-j}` in the
/// free generator ring. For `P` series the `j = b` term has weight 1.
pub fn pair_entry(ck: &GeneratorSeries, a: i64, cl: &GeneratorSeries, b: i64) -> FreeGamma<Polynomial> {
    let mut out = &ck.coefficient_free(a) * &cl.coefficient_free(b);
    for j in 1..=b {
        let t = &ck.coefficient_free(a + j) * &cl.coefficient_free(b - j);
        // with P_0 = 1 the last term carries weight 1 instead of 2
        let w = if j == b && cl.unit() == SeriesUnit::P { 1 } else { 2 };
        let c = Polynomial::constant(if j % 2 == 0 { w } else { -w });
        out = &out + &t.scale(&c);
    }
    out
}

/// `Pf_λ(c(1), …, c(r))` in the free generator ring, for an arbitrary
/// integer index sequence `λ`.
pub fn multischur_pf_free(lambda: &[i64], c: &[GeneratorSeries]) -> Result<FreeGamma<Polynomial>, MultiSchurError> {
    if lambda.len() != c.len() {
        return Err(MultiSchurError::LengthMismatch(c.len(), lambda.len()));
    }
    let r = lambda.len();
    Ok(pfaffian(
        r,
        |k, l| pair_entry(&c[k], lambda[k], &c[l], lambda[l]),
        |k| c[k].coefficient_free(lambda[k]),
    ))
}

/// Whether the hypothesis of the skew-symmetry lemma holds: every
/// multiplier has degree below its index.
pub fn skew_hypothesis_holds(lambda: &[i64], c: &[GeneratorSeries]) -> bool {
    lambda.iter().zip(c).all(|(&l, s)| s.multiplier().degree().unwrap_or(0) < l.max(1))
}

/// Exact skew-symmetry check of the entry matrix after straightening.
pub fn check_skew(lambda: &[i64], c: &[GeneratorSeries]) -> Result<(), MultiSchurError> {
    let r = lambda.len();
    for k in 0..r {
        for l in k..r {
            let a = pair_entry(&c[k], lambda[k], &c[l], lambda[l]);
            let b = pair_entry(&c[l], lambda[l], &c[k], lambda[k]);
            if !straighten_free(&(&a + &b)).is_zero() {
                return Err(MultiSchurError::SkewCheckFailed(k, l));
            }
        }
    }
    Ok(())
}

/// `Pf_λ(c(1), …, c(r))`, straightened. Outside the skew-symmetry
/// hypothesis the entry matrix is checked exactly before use.
pub fn multischur_pf(lambda: &[i64], c: &[GeneratorSeries]) -> Result<GammaElement, MultiSchurError> {
    if lambda.len() != c.len() {
        return Err(MultiSchurError::LengthMismatch(c.len(), lambda.len()));
    }
    if !skew_hypothesis_holds(lambda, c) {
        check_skew(lambda, c)?;
    }
    Ok(straighten_free(&multischur_pf_free(lambda, c)?))
}

/// Data `c(k) | d(k)` of one row of a type-D multi-Schur Pfaffian.
#[derive(Clone, Debug)]
pub struct DPairedSeries {
    pub c: GeneratorSeries,
    pub d: GeneratorSeries,
}

impl DPairedSeries {
    /// The usual shape `d = Q·c`.
    pub fn with_q(c: Polynomial) -> Self {
        DPairedSeries { c: GeneratorSeries::new(SeriesUnit::One, c.clone()), d: GeneratorSeries::new(SeriesUnit::Q, c) }
    }
}

/// The entry `(d(k)_a − c(k)_a)(d(l)_b + c(l)_b) + 2 Σ_{j=1}^b (-1)^j d(k)_{a+j} d(l)_{b-j}`.
pub fn d_pair_entry(pk: &DPairedSeries, a: i64, pl: &DPairedSeries, b: i64) -> FreeGamma<Polynomial> {
    let left = &pk.d.coefficient_free(a) - &pk.c.coefficient_free(a);
    let right = &pl.d.coefficient_free(b) + &pl.c.coefficient_free(b);
    let mut out = &left * &right;
    for j in 1..=b {
        let t = &pk.d.coefficient_free(a + j) * &pl.d.coefficient_free(b - j);
        let c = Polynomial::constant(if j % 2 == 0 { 2 } else { -2 });
        out = &out + &t.scale(&c);
    }
    out
}

/// `Pf_λ(c(1)|d(1), …, c(r)|d(r))` in the free ring (no `2^{-r}` factor).
pub fn multischur_pf_d_free(lambda: &[i64], pairs: &[DPairedSeries]) -> Result<FreeGamma<Polynomial>, MultiSchurError> {
    if lambda.len() != pairs.len() {
        return Err(MultiSchurError::LengthMismatch(pairs.len(), lambda.len()));
    }
    Ok(pfaffian(
        lambda.len(),
        |k, l| d_pair_entry(&pairs[k], lambda[k], &pairs[l], lambda[l]),
        |k| &pairs[k].d.coefficient_free(lambda[k]) + &pairs[k].c.coefficient_free(lambda[k]),
    ))
}

/// Checks the hypotheses on type-D data: `c(i)` divides `d(i)` and every
/// earlier `c(j)`, and `d(i) d(j)* = c(i) c(j)*` up to degree `λ_i + λ_j`.
pub fn check_d_pairs(lambda: &[i64], pairs: &[DPairedSeries]) -> Result<(), MultiSchurError> {
    for (i, p) in pairs.iter().enumerate() {
        let ci = p.c.multiplier();
        if p.d.multiplier().exact_divide(ci).is_err() {
            return Err(MultiSchurError::DivisibilityFailed(i + 1, format!("d({})", i + 1)));
        }
        for (j, q) in pairs.iter().enumerate().take(i) {
            if q.c.multiplier().exact_divide(ci).is_err() {
                return Err(MultiSchurError::DivisibilityFailed(i + 1, format!("c({})", j + 1)));
            }
        }
    }
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            let max = (lambda[i] + lambda[j]).max(0) as usize;
            if let Some(deg) = star_relation_holds(&pairs[i], &pairs[j], max) {
                return Err(MultiSchurError::StarRelationFailed(i + 1, j + 1, deg));
            }
        }
    }
    Ok(())
}

/// `Pf_λ(c(1)|d(1), …, c(r)|d(r))`, straightened (no `2^{-r}` factor).
pub fn multischur_pf_d(lambda: &TypeDPartition, pairs: &[DPairedSeries]) -> Result<GammaElement, MultiSchurError> {
    let idx: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    check_d_pairs(&idx, pairs)?;
    Ok(straighten_free(&multischur_pf_d_free(&idx, pairs)?))
}

/// `ℝ_λ`-style normalisation: `2^{-r} Pf_λ(c|d)`.
pub fn multischur_pf_d_normalized(lambda: &TypeDPartition, pairs: &[DPairedSeries]) -> Result<GammaElement, MultiSchurError> {
    let pf = multischur_pf_d(lambda, pairs)?;
    Ok(pf.scale_dyadic(&Dyadic::pow2(-(lambda.len() as i64))))
}

/// The multi-Schur determinant `det(a(i)_{λ_i + j − i})` (indices 0-based
/// here, so the entry is `a(i)_{λ_i + j − i}` with `i, j` from 0).
pub fn multischur_det(lambda: &[i64], a: &[Polynomial]) -> Result<Polynomial, MultiSchurError> {
    if lambda.len() != a.len() {
        return Err(MultiSchurError::LengthMismatch(a.len(), lambda.len()));
    }
    let r = lambda.len();
    let max = lambda.iter().map(|&l| l + r as i64).max().unwrap_or(0).max(0) as usize;
    let comps: Vec<Vec<Polynomial>> = a.iter().map(|s| s.graded_components(max)).collect();
    Ok(determinant(r, |i, j| {
        let idx = lambda[i] + j as i64 - i as i64;
        if idx < 0 || idx as usize > max {
            Polynomial::zero()
        } else {
            comps[i][idx as usize].clone()
        }
    }))
}
