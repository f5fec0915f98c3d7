use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::{GammaElement, GeneratorSeries, StrictPartition};
use crate::multischur::multischur_pf_free;
use crate::polycore::{x, Polynomial};

use super::straighten_free;

/// Which set of variables a symmetry acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

/// The ring automorphisms used by divided differences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `s_i`, `i ≥ 1`: swaps the `i`-th and `(i+1)`-st variables.
    S(u32),
    /// `s_0`: negates the first variable and sends `Q` to `Q·(1+x_1)/(1−x_1)`.
    S0,
    /// `s_1̂`: sends `x_1 ↦ −x_2`, `x_2 ↦ −x_1` and `Q` to
    /// `Q·∏_{i=1,2}(1+x_i)/(1−x_i)`.
    S1Hat,
}

type ImageCache = OnceLock<RwLock<HashMap<(Symmetry, StrictPartition), GammaElement>>>;
static IMAGES: ImageCache = OnceLock::new();

fn px(i: u32) -> Polynomial {
    Polynomial::var(x(i))
}

/// `∏_{v}(1+v)/(1−v)` truncated at degree `max`.
fn cayley_series(vars: &[u32], max: i64) -> Polynomial {
    let mut acc = Polynomial::one();
    for &i in vars {
        let num = &Polynomial::one() + &px(i);
        let den = (&Polynomial::one() - &px(i)).series_inverse(max).expect("unit constant term");
        acc = acc.mul_truncated(&num.mul_truncated(&den, max), max);
    }
    acc
}

/// Image of `Q_λ` under the x-side symmetry (`S0` or `S1Hat`).
fn basis_image(op: Symmetry, lambda: &StrictPartition) -> GammaElement {
    let key = (op, lambda.clone());
    let cache = IMAGES.get_or_init(Default::default);
    if let Some(e) = cache.read().unwrap().get(&key) {
        return e.clone();
    }
    let max = lambda.size() as i64;
    let mult = match op {
        Symmetry::S0 => cayley_series(&[1], max),
        Symmetry::S1Hat => cayley_series(&[1, 2], max),
        Symmetry::S(_) => unreachable!(),
    };
    let series = GeneratorSeries::q_times(mult);
    let idx: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let c = vec![series; idx.len()];
    let img = straighten_free(&multischur_pf_free(&idx, &c).expect("lengths match"));
    cache.write().unwrap().entry(key).or_insert(img).clone()
}

fn act_on_coefficient(op: Symmetry, p: &Polynomial) -> Polynomial {
    match op {
        Symmetry::S(i) => p.substitute(|v| {
            if v == x(i) {
                Some(px(i + 1))
            } else if v == x(i + 1) {
                Some(px(i))
            } else {
                None
            }
        }),
        Symmetry::S0 => p.substitute(|v| (v == x(1)).then(|| -&px(1))),
        Symmetry::S1Hat => p.substitute(|v| {
            if v == x(1) {
                Some(-&px(2))
            } else if v == x(2) {
                Some(-&px(1))
            } else {
                None
            }
        }),
    }
}

/// Applies a symmetry of `Γ[x, y]`.
pub fn apply_symmetry(op: Symmetry, side: Side, e: &GammaElement) -> GammaElement {
    if side == Side::Y {
        return apply_symmetry(op, Side::X, &e.swap_xy()).swap_xy();
    }
    if let Symmetry::S(i) = op {
        assert!(i >= 1, "s_i needs i ≥ 1");
        return e.map_coefficients(|c| act_on_coefficient(op, c));
    }
    let mut out = GammaElement::zero();
    for (l, c) in e.terms() {
        let c2 = act_on_coefficient(op, c);
        if l.is_empty() {
            out = &out + &GammaElement::from_polynomial(c2);
        } else {
            out = &out + &basis_image(op, l).scale(&c2);
        }
    }
    out
}
