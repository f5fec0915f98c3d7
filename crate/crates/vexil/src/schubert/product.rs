//! Structure constants `ℭ_u ℭ_v = Σ c_{uv}^w ℭ_w` by exact peeling.

use std::collections::BTreeMap;

use num_rational::BigRational;

use super::{group_elements, schubert_table, solve_in_span, SchubertError};
use crate::gamma::GammaElement;
use crate::polycore::{Dyadic, Family, Monomial, Polynomial};
use crate::weyl::{SignedPermutation, WeylType};

fn split_y(m: &Monomial) -> (Monomial, Monomial) {
    let (ys, rest): (Vec<_>, Vec<_>) = m.pairs().iter().copied().partition(|(v, _)| v.family() == Family::Y);
    (Monomial::from_pairs(ys), Monomial::from_pairs(rest))
}

/// Part of `e` with `y`-degree exactly `d`, grouped by the `y`-monomial.
fn y_slices(e: &GammaElement, d: i64) -> BTreeMap<Monomial, GammaElement> {
    let mut out: BTreeMap<Monomial, GammaElement> = BTreeMap::new();
    for (l, c) in e.terms() {
        for (m, k) in c.terms() {
            let (ym, rest) = split_y(m);
            if ym.degree() == d {
                out.entry(ym).or_default().add_term(l.clone(), &Polynomial::term(rest, k.clone()));
            }
        }
    }
    out
}

fn at_y_zero(e: &GammaElement) -> GammaElement {
    e.substitute(|v| (v.family() == Family::Y).then(Polynomial::zero))
}

/// Coefficients `c_{uv}^w(y)` of `ℭ_u ℭ_v` over the Schubert basis of
/// `W_n` (any type). Errors if the product is not in their span or a
/// coefficient is not dyadic.
pub fn product_coefficients(
    u: &SignedPermutation,
    v: &SignedPermutation,
    ty: WeylType,
    n: usize,
) -> Result<BTreeMap<SignedPermutation, Polynomial>, SchubertError> {
    let table = schubert_table(n, ty)?;
    let get = |w: &SignedPermutation| table.get(&w.trimmed()).cloned().ok_or_else(|| SchubertError::NotInGroup(w.clone(), n, ty));
    let mut rest = &get(u)? * &get(v)?;
    let d = (u.length(ty) + v.length(ty)) as i64;
    let mut coeffs: BTreeMap<SignedPermutation, Polynomial> = BTreeMap::new();
    let elements = group_elements(n, ty);
    for e in (0..=d).rev() {
        let ws: Vec<SignedPermutation> = elements.iter().filter(|w| w.length(ty) as i64 == e).map(|w| w.trimmed()).collect();
        if ws.is_empty() {
            continue;
        }
        let basis: Vec<GammaElement> = ws.iter().map(|w| at_y_zero(&table[w])).collect();
        let mut found: BTreeMap<SignedPermutation, Polynomial> = BTreeMap::new();
        for (ym, g) in y_slices(&rest, d - e) {
            let sol = solve_in_span(&g, &basis).ok_or(SchubertError::NotInSpan)?;
            for (w, a) in ws.iter().zip(sol) {
                if a == BigRational::from_integer(0.into()) {
                    continue;
                }
                let a = Dyadic::from_rational(&a).ok_or(SchubertError::NotInSpan)?;
                let c = found.entry(w.clone()).or_default();
                *c = &*c + &Polynomial::term(ym.clone(), a);
            }
        }
        for (w, c) in found {
            rest = &rest - &table[&w].scale(&c);
            coeffs.insert(w, c);
        }
    }
    if !rest.is_zero() {
        return Err(SchubertError::NotInSpan);
    }
    Ok(coeffs)
}
