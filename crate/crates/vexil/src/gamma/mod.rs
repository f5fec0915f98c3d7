//! The ring `Γ` generated by `Q_1, Q_2, …` subject to `Q·Q* = 1`, with
//! polynomial coefficients, and its rescaled `P_λ` view.

mod element;
mod free;
mod oracle;
mod partition;
mod series;
mod straighten;
mod symmetry;

pub use element::{straighten_free, straighten_product, Basis, GammaElement};
pub use free::{FreeGamma, GenMonomial, Int};
pub use oracle::{basis_image, specialize_oracle, specialize_with, OracleMode};
pub use partition::{StrictPartition, TypeDPartition};
pub use series::{star_relation_holds, GeneratorSeries, SeriesUnit};
pub use straighten::{basis_product, free_expansion, free_pair, straighten_monomial, Expansion};
pub use symmetry::{apply_symmetry, Side, Symmetry};

use crate::polycore::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GammaError {
    #[error("parts {0:?} are not strictly decreasing")]
    NotStrict(Vec<u32>),
    #[error("truncation degree {got} is below the degree {needed} of the element")]
    TruncationTooSmall { needed: u32, got: u32 },
}

/// `Q_λ` for a strict partition.
pub fn q_lambda(lambda: &StrictPartition) -> GammaElement {
    GammaElement::basis(lambda.clone())
}

/// `P_λ = 2^{-len λ} Q_λ`.
pub fn p_lambda(lambda: &StrictPartition) -> GammaElement {
    GammaElement::p_basis(lambda.clone())
}

/// `c_k c_l + 2 Σ_{j=1}^l (-1)^j (c_k)_{k+j} (c_l)_{l-j}`, straightened.
pub fn q_pair(k: u32, l: u32, c_k: &GeneratorSeries, c_l: &GeneratorSeries) -> GammaElement {
    straighten_free(&crate::multischur::pair_entry(c_k, k as i64, c_l, l as i64))
}

/// `q(k) = Q · ∏_{j<k} (1 + t_j)`.
pub fn q_series_t(k: u32) -> GeneratorSeries {
    GeneratorSeries::q_times(crate::polycore::prod_one_plus((1..k).map(crate::polycore::t)))
}

/// `ℚ_{k l}` with `q(k) = Q·∏_{j<k}(1+t_j)`.
pub fn qq_pair(k: u32, l: u32) -> GammaElement {
    q_pair(k, l, &q_series_t(k), &q_series_t(l))
}

/// `ℚ_λ(t) = Pf_λ(q(λ_1), …, q(λ_r))`.
pub fn qq_lambda(lambda: &StrictPartition) -> GammaElement {
    let idx: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let series: Vec<GeneratorSeries> = lambda.parts().iter().map(|&p| q_series_t(p)).collect();
    crate::multischur::multischur_pf(&idx, &series).expect("skew hypothesis holds")
}

/// `ℙ_λ(t) = 2^{-len λ} ℚ_λ(t)`.
pub fn pp_lambda(lambda: &StrictPartition) -> GammaElement {
    qq_lambda(lambda).scale_dyadic(&crate::polycore::Dyadic::pow2(-(lambda.parts().len() as i64)))
}

/// The trivial polynomial view of a scalar.
pub fn scalar(p: Polynomial) -> GammaElement {
    GammaElement::from_polynomial(p)
}
