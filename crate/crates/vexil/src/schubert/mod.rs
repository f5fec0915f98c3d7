//! Divided differences and double Schubert polynomials of types A, B, C, D.
//!
//! Every Schubert polynomial is stored as a [`GammaElement`]; type A values
//! have no `Q_λ` part. For `w` in `W_n` the polynomial is obtained from the
//! top class of `W_n` by the divided differences of a reduced word of
//! `w_∘^{-1} w`.

mod degeneracy;
mod linalg;
mod product;

pub use degeneracy::{degeneracy_formula, ChernSeries, DegeneracyData};
pub use linalg::solve_in_span;
pub use product::product_coefficients;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gamma::{apply_symmetry, Basis, GammaElement, GeneratorSeries, SeriesUnit, Side, StrictPartition, Symmetry};
use crate::multischur::{multischur_det, multischur_pf, multischur_pf_d_normalized, DPairedSeries, MultiSchurError};
use crate::polycore::{prod_one_plus, x, y, PolyError, Polynomial};
use crate::triples::{Triple, TripleError, TripleLambda};
use crate::weyl::{enumerate, enumerate_with_odd_coset, longest_element, top_element_d, Generator, SignedPermutation, WeylType};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchubertError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    MultiSchur(#[from] MultiSchurError),
    #[error(transparent)]
    Triple(#[from] TripleError),
    #[error("generator {0} does not belong to type {1}")]
    BadGenerator(Generator, WeylType),
    #[error("{0} is not an element of W_{1} of type {2}")]
    NotInGroup(SignedPermutation, usize, WeylType),
    #[error("type D needs rank at least 2")]
    RankTooSmall,
    #[error("product has no expansion over the Schubert basis of the ambient group")]
    NotInSpan,
}

/// A double Schubert polynomial together with its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertPolynomial {
    pub value: GammaElement,
    pub ty: WeylType,
    pub w: SignedPermutation,
}

impl SchubertPolynomial {
    /// The value as an ordinary polynomial (type A, or a scalar).
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        self.value.as_polynomial()
    }

    /// The basis natural for the type: `Q_λ` for C, `P_λ` for B and D.
    pub fn basis(&self) -> Basis {
        natural_basis(self.ty)
    }

    /// `x ↔ y`; indexes the inverse element.
    pub fn swap_xy(&self) -> SchubertPolynomial {
        SchubertPolynomial { value: self.value.swap_xy(), ty: self.ty, w: self.w.inverse() }
    }

    /// Coefficients in the natural basis.
    pub fn coefficients(&self) -> BTreeMap<StrictPartition, Polynomial> {
        expand_coeffs(&self.value, self.basis())
    }

    pub fn render(&self, latex: bool) -> String {
        self.value.render(self.basis(), latex)
    }
}

pub fn natural_basis(ty: WeylType) -> Basis {
    match ty {
        WeylType::B | WeylType::D => Basis::P,
        WeylType::A | WeylType::C => Basis::Q,
    }
}

/// Coefficients of `e` in the `Q_λ` or `P_λ` basis.
pub fn expand_coeffs(e: &GammaElement, basis: Basis) -> BTreeMap<StrictPartition, Polynomial> {
    e.coefficients(basis)
}

fn px(i: u32) -> Polynomial {
    Polynomial::var(x(i))
}

/// `∂_g` on the `x` (or, by conjugating with `x ↔ y`, the `y`) variables.
pub fn divided_difference(g: Generator, e: &GammaElement, ty: WeylType, side: Side) -> Result<GammaElement, SchubertError> {
    if side == Side::Y {
        return Ok(divided_difference(g, &e.swap_xy(), ty, Side::X)?.swap_xy());
    }
    let (op, denom) = match (g, ty) {
        (Generator::S(i), _) => (Symmetry::S(i), &px(i) - &px(i + 1)),
        (Generator::S0, WeylType::C) => (Symmetry::S0, px(1).scale(&(-2).into())),
        (Generator::S0, WeylType::B) => (Symmetry::S0, -&px(1)),
        (Generator::S1Hat, WeylType::D) => (Symmetry::S1Hat, -&(&px(1) + &px(2))),
        _ => return Err(SchubertError::BadGenerator(g, ty)),
    };
    let diff = e - &apply_symmetry(op, Side::X, e);
    Ok(diff.exact_divide(&denom)?)
}

/// `∂_g` on ordinary polynomials (type A).
pub fn divided_difference_poly(i: u32, p: &Polynomial) -> Result<Polynomial, SchubertError> {
    let swapped = p.substitute(|v| {
        if v == x(i) {
            Some(px(i + 1))
        } else if v == x(i + 1) {
            Some(px(i))
        } else {
            None
        }
    });
    Ok((p - &swapped).exact_divide(&(&px(i) - &px(i + 1)))?)
}

/// The triple whose polynomial is the top class (types B, C, D).
pub fn top_triple(n: usize, ty: WeylType, all_barred: bool) -> Triple {
    let n = n as u32;
    match ty {
        WeylType::D if !all_barred => {
            Triple::new((1..n).collect(), (1..n).rev().collect(), (1..n).rev().collect(), WeylType::D)
        }
        WeylType::D => Triple::new((1..=n).collect(), (0..n).rev().collect(), (0..n).rev().collect(), WeylType::D),
        _ => Triple::new((1..=n).collect(), (1..=n).rev().collect(), (1..=n).rev().collect(), ty),
    }
    .expect("lengths agree")
}

/// The top class of `W_n`. For type D, `all_barred` selects between the
/// tops `1̄ 2̄ … n̄` and `1 2̄ … n̄`.
pub fn top_class(n: usize, ty: WeylType, all_barred: bool) -> Result<SchubertPolynomial, SchubertError> {
    match ty {
        WeylType::A => {
            let mut value = Polynomial::one();
            for i in 1..=n as u32 {
                for j in 1..=(n as u32).saturating_sub(i) {
                    value = &value * &(&px(i) - &Polynomial::var(y(j)));
                }
            }
            Ok(SchubertPolynomial { value: GammaElement::from_polynomial(value), ty, w: longest_element(n, ty) })
        }
        WeylType::D if n < 2 => Err(SchubertError::RankTooSmall),
        _ => {
            let mut s = vexillary_polynomial(&top_triple(n, ty, all_barred))?;
            s.w = match ty {
                WeylType::D => top_element_d(n, all_barred),
                _ => longest_element(n, ty),
            };
            Ok(s)
        }
    }
}

/// The top element of `W_n` lying in the same coset as `w` (only type D
/// has two).
fn top_for(w: &SignedPermutation, ty: WeylType) -> SignedPermutation {
    let n = w.n();
    match ty {
        WeylType::D => {
            let parity = w.barred_count() % 2;
            let all = top_element_d(n, true);
            if all.barred_count() % 2 == parity {
                all
            } else {
                top_element_d(n, false)
            }
        }
        _ => longest_element(n, ty),
    }
}

fn top_class_for(top: &SignedPermutation, ty: WeylType) -> Result<SchubertPolynomial, SchubertError> {
    top_class(top.n(), ty, ty == WeylType::D && top.values()[0] < 0)
}

fn check_rank(w: &SignedPermutation, n: usize, ty: WeylType) -> Result<SignedPermutation, SchubertError> {
    if w.min_rank() > n || (ty == WeylType::A && !w.is_unsigned()) || (ty == WeylType::D && n < 2) {
        return Err(SchubertError::NotInGroup(w.clone(), n, ty));
    }
    Ok(w.trimmed().embed(n))
}

/// The reduced word `[g_1, …, g_ℓ]` of `w_∘^{-1} w` used by [`schubert`].
pub fn descent_word(w: &SignedPermutation, ty: WeylType) -> Vec<Generator> {
    let top = top_for(w, ty);
    let v = top.inverse().compose(w).expect("same rank");
    v.reduced_word(ty)
}

/// A uniformly random path down the weak order from the top to `w`.
pub fn random_descent_word(w: &SignedPermutation, ty: WeylType, rng: &mut impl Rng) -> Vec<Generator> {
    let top = top_for(w, ty);
    let mut v = top.inverse().compose(w).expect("same rank");
    let mut word = Vec::new();
    loop {
        let vinv = v.inverse();
        let choices = vinv.right_descents(ty);
        let Some(&g) = choices.choose(rng) else { break };
        word.push(g);
        v = vinv.times_generator(g).inverse();
    }
    word
}

/// Applies `∂_{g_ℓ} ∘ ⋯ ∘ ∂_{g_1}` to the top class.
pub fn schubert_via_word(w: &SignedPermutation, ty: WeylType, n: usize, word: &[Generator]) -> Result<SchubertPolynomial, SchubertError> {
    let w = check_rank(w, n, ty)?;
    let top = top_for(&w, ty);
    let mut value = top_class_for(&top, ty)?.value;
    let mut cur = top;
    for &g in word {
        value = divided_difference(g, &value, ty, Side::X)?;
        cur = cur.times_generator(g);
    }
    if cur != w {
        return Err(SchubertError::NotInGroup(w, n, ty));
    }
    Ok(SchubertPolynomial { value, ty, w: w.trimmed() })
}

/// `𝔖_w`, `𝔅_w`, `ℭ_w` or `𝔇_w` computed inside `W_n`.
pub fn schubert(w: &SignedPermutation, ty: WeylType, n: usize) -> Result<SchubertPolynomial, SchubertError> {
    let we = check_rank(w, n, ty)?;
    let word = descent_word(&we, ty);
    schubert_via_word(&we, ty, n, &word)
}

/// All Schubert polynomials of `W_n`, computed top-down: each `ws` with
/// `ℓ(ws) < ℓ(w)` is `∂_s` of the first computed `w` above it. Type D
/// includes the odd coset.
pub fn schubert_table(n: usize, ty: WeylType) -> Result<BTreeMap<SignedPermutation, GammaElement>, SchubertError> {
    let mut table = BTreeMap::new();
    let tops: Vec<SignedPermutation> = match ty {
        WeylType::D => vec![top_element_d(n, true), top_element_d(n, false)],
        _ => vec![longest_element(n, ty)],
    };
    let gens = crate::weyl::generators(n, ty);
    for top in tops {
        let mut level = vec![(top.clone(), top_class_for(&top, ty)?.value)];
        while !level.is_empty() {
            let mut next: BTreeMap<SignedPermutation, (SignedPermutation, Generator)> = BTreeMap::new();
            for (w, _) in &level {
                for &g in &gens {
                    if w.has_right_descent(g) {
                        let v = w.times_generator(g);
                        if !table.contains_key(&v) {
                            next.entry(v).or_insert((w.clone(), g));
                        }
                    }
                }
            }
            let values: BTreeMap<SignedPermutation, GammaElement> = level.into_iter().collect();
            let jobs: Vec<(SignedPermutation, GammaElement, Generator)> =
                next.into_iter().map(|(v, (w, g))| (v, values[&w].clone(), g)).collect();
            let computed = map_jobs(jobs, |(v, val, g)| divided_difference(g, &val, ty, Side::X).map(|r| (v, r)))?;
            table.extend(values);
            level = computed;
        }
    }
    let expected = enumerate_with_odd_coset(n, ty).len();
    debug_assert_eq!(table.len(), expected);
    Ok(table.into_iter().map(|(w, v)| (w.trimmed(), v)).collect())
}

#[cfg(feature = "parallel")]
fn map_jobs<T: Send, U: Send, E: Send>(jobs: Vec<T>, f: impl Fn(T) -> Result<U, E> + Sync + Send) -> Result<Vec<U>, E> {
    use rayon::prelude::*;
    jobs.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_jobs<T, U, E>(jobs: Vec<T>, f: impl Fn(T) -> Result<U, E>) -> Result<Vec<U>, E> {
    jobs.into_iter().map(f).collect()
}

/// Elements of `W_n` of the given type; type D includes the odd coset.
pub fn group_elements(n: usize, ty: WeylType) -> Vec<SignedPermutation> {
    match ty {
        WeylType::D => enumerate_with_odd_coset(n, ty),
        _ => enumerate(n, ty),
    }
}

/// `∏_{j ≤ a}(1 + x_j) · ∏_{j ≤ b}(1 + y_j)`.
pub fn xy_factor(a: u32, b: u32) -> Polynomial {
    &prod_one_plus((1..=a).map(x)) * &prod_one_plus((1..=b).map(y))
}

/// The row series `c(1), …, c(r)` of a B/C triple.
pub fn row_series_bc(t: &Triple) -> Vec<GeneratorSeries> {
    let unit = if t.ty == WeylType::B { SeriesUnit::P } else { SeriesUnit::Q };
    (1..=t.rank())
        .map(|k| {
            let i = t.governing_index(k);
            GeneratorSeries::new(unit, xy_factor(t.p[i] - 1, t.q[i] - 1))
        })
        .collect()
}

/// The row data `c(k) | d(k)` of a type-D triple.
pub fn row_pairs_d(t: &Triple) -> Vec<DPairedSeries> {
    (1..=t.rank())
        .map(|k| {
            let i = t.governing_index(k);
            DPairedSeries::with_q(xy_factor(t.p[i], t.q[i]))
        })
        .collect()
}

/// The row series `a(1), …, a(r)` of a type-A triple, truncated at `max`.
pub fn row_series_a(t: &Triple, max: i64) -> Result<Vec<Polynomial>, SchubertError> {
    (1..=t.rank())
        .map(|k| {
            let i = t.governing_index(k);
            let den = prod_one_plus((1..=t.q[i]).map(y)).series_inverse(max)?;
            Ok(prod_one_plus((1..=t.p[i]).map(x)).mul_truncated(&den, max))
        })
        .collect()
}

/// `𝐐_τ`, `𝐏_τ`, `𝐑_τ` or the type-A determinant of a (possibly
/// redundant) triple.
pub fn vexillary_polynomial(t: &Triple) -> Result<SchubertPolynomial, SchubertError> {
    let w = t.w()?;
    let lambda = t.lambda()?;
    let idx: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let value = match (&lambda, t.ty) {
        (TripleLambda::Ordinary(_), _) => {
            let max = idx.first().copied().unwrap_or(0) + idx.len() as i64;
            GammaElement::from_polynomial(multischur_det(&idx, &row_series_a(t, max)?)?)
        }
        (TripleLambda::Strict(_), WeylType::B) => {
            // 𝐏_τ = 2^{-r} 𝐐_τ; the P-series Pfaffian agrees only for trivial multipliers
            let mut c = t.clone();
            c.ty = WeylType::C;
            let r = idx.iter().filter(|&&p| p > 0).count() as i64;
            multischur_pf(&idx, &row_series_bc(&c))?.scale_dyadic(&crate::polycore::Dyadic::pow2(-r))
        }
        (TripleLambda::Strict(_), _) => multischur_pf(&idx, &row_series_bc(t))?,
        (TripleLambda::TypeD(l), _) => multischur_pf_d_normalized(l, &row_pairs_d(t))?,
    };
    Ok(SchubertPolynomial { value, ty: t.ty, w })
}
