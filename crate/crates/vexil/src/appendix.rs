//! The operator calculus behind the type-D Pfaffian pushforward, checked
//! extensionally.
//!
//! Laurent series in `h_1, …, h_r` are truncated by a weight: `h_i` has
//! weight `-i`, so every ratio `h_i / h_j` with `i < j` has positive weight
//! `j - i`. Each [`LaurentElement`] records the weight up to which its
//! terms are exact, and arithmetic propagates that bound, so comparisons
//! never look at a coefficient that truncation could have changed.

use std::collections::BTreeMap;

use crate::gamma::GammaElement;
use crate::multischur::pfaffian;
use crate::polycore::{h, u, Dyadic, Family, Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AppendixError {
    #[error("window too small: exact to weight {exact}, but the compared terms start at weight {needed}")]
    WindowTooSmall { exact: i64, needed: i64 },
    #[error("relation d({0}) d({1})* = g({0}) g({1})* fails in degree {2}")]
    RelationViolated(usize, usize, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
}

const EXACT: i64 = i64::MAX / 4;

/// Truncation weight of a monomial: `-Σ i · (exponent of h_i)`.
pub fn weight(m: &Monomial) -> i64 {
    m.pairs().iter().filter(|(v, _)| v.family() == Family::H).map(|(v, e)| -(v.index() as i64) * *e as i64).sum()
}

/// A truncated Laurent series in the `h_i`, polynomial in everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentElement {
    pub poly: Polynomial,
    /// All terms of weight `≤ exact_to` are exact.
    pub exact_to: i64,
}

impl LaurentElement {
    pub fn exact(poly: Polynomial) -> Self {
        LaurentElement { poly, exact_to: EXACT }
    }

    pub fn zero() -> Self {
        Self::exact(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::exact(Polynomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_exact(&self) -> bool {
        self.exact_to >= EXACT
    }

    pub fn min_weight(&self) -> i64 {
        self.poly.terms().map(|(m, _)| weight(m)).min().unwrap_or(EXACT)
    }

    fn clip(poly: Polynomial, exact_to: i64) -> Self {
        let exact_to = exact_to.min(EXACT);
        if exact_to >= EXACT {
            return Self::exact(poly);
        }
        LaurentElement { poly: poly.filter(|m| weight(m) <= exact_to), exact_to }
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        let c = LaurentElement::exact(c.clone());
        &c * self
    }

    /// `ζ_J`: sets `h_i = 0` for `i ∈ J`.
    ///
    /// # Panics
    /// If some `h_i`, `i ∈ J`, occurs with a negative exponent; `ζ_J` is
    /// only defined where those exponents are nonnegative.
    pub fn zeta(&self, j: u64) -> Self {
        if j == 0 {
            return self.clone();
        }
        let poly = self.poly.filter(|m| {
            m.pairs().iter().all(|(v, e)| {
                if v.family() != Family::H || j & (1 << v.index()) == 0 {
                    return true;
                }
                assert!(*e >= 0, "ζ applied to a negative power of {v}");
                *e == 0
            })
        });
        LaurentElement { poly, exact_to: self.exact_to }
    }

    /// The weight up to which `self` and `other` can both be trusted.
    pub fn common_level(&self, other: &Self) -> i64 {
        self.exact_to.min(other.exact_to)
    }

    /// Equality of all coefficients both sides know exactly; fails if
    /// that excludes the lowest-weight term of either side.
    pub fn agrees_with(&self, other: &Self) -> Result<bool, AppendixError> {
        let level = self.common_level(other);
        let needed = self.min_weight().min(other.min_weight());
        if needed < EXACT && level < needed {
            return Err(AppendixError::WindowTooSmall { exact: level, needed });
        }
        let a = self.poly.filter(|m| weight(m) <= level);
        let b = other.poly.filter(|m| weight(m) <= level);
        Ok(a == b)
    }
}

impl std::ops::Add for &LaurentElement {
    type Output = LaurentElement;
    fn add(self, rhs: &LaurentElement) -> LaurentElement {
        LaurentElement::clip(&self.poly + &rhs.poly, self.exact_to.min(rhs.exact_to))
    }
}

impl std::ops::Sub for &LaurentElement {
    type Output = LaurentElement;
    fn sub(self, rhs: &LaurentElement) -> LaurentElement {
        LaurentElement::clip(&self.poly - &rhs.poly, self.exact_to.min(rhs.exact_to))
    }
}

impl std::ops::Mul for &LaurentElement {
    type Output = LaurentElement;
    fn mul(self, rhs: &LaurentElement) -> LaurentElement {
        let a = self.exact_to.saturating_add(rhs.min_weight());
        let b = rhs.exact_to.saturating_add(self.min_weight());
        LaurentElement::clip(&self.poly * &rhs.poly, a.min(b))
    }
}

impl std::ops::Neg for &LaurentElement {
    type Output = LaurentElement;
    fn neg(self) -> LaurentElement {
        LaurentElement { poly: -&self.poly, exact_to: self.exact_to }
    }
}

crate::impl_ring_via_ops!(LaurentElement);

/// `f[i, j] = (1 - h_i/h_j) / (1 + h_i/h_j)`, expanded in the ratio of the
/// smaller index over the larger and kept exact up to weight `window`.
/// `f[j, i] = -f[i, j]`, and `f[k, k]` is the border value 1.
pub fn f_pair(i: u32, j: u32, window: i64) -> LaurentElement {
    if i == j {
        return LaurentElement::one();
    }
    if i > j {
        return -&f_pair(j, i, window);
    }
    let step = (j - i) as i64;
    let mut poly = Polynomial::one();
    let mut k = 1;
    while k * step <= window {
        let m = Monomial::from_pairs([(h(i), k as i32), (h(j), -(k as i32))]);
        debug_assert_eq!(weight(&m), k * step);
        poly.add_term(m, &Dyadic::from(if k % 2 == 0 { 2 } else { -2 }));
        k += 1;
    }
    LaurentElement { poly, exact_to: window }
}

/// `f[I]`: the Pfaffian of `(f[i, j])` bordered by 1.
pub fn f_index(set: &[u32], window: i64) -> LaurentElement {
    pfaffian(set.len(), |a, b| f_pair(set[a], set[b], window), |_| LaurentElement::one())
}

/// Whether `f[I] = ∏_{i<j} f[i, j]` on the exactly known coefficients.
pub fn f_index_identity(set: &[u32], window: i64) -> Result<bool, AppendixError> {
    let lhs = f_index(set, window);
    let mut rhs = LaurentElement::one();
    for (a, &i) in set.iter().enumerate() {
        for &j in &set[a + 1..] {
            rhs = &rhs * &f_pair(i, j, window);
        }
    }
    lhs.agrees_with(&rhs)
}

fn position(k: u32, set: &[u32]) -> Option<usize> {
    set.iter().position(|&x| x == k).map(|p| p + 1)
}

/// `ε(k, K)`: `1` if `k` sits at an even position of `K`, `-1` if odd.
pub fn epsilon(k: u32, set: &[u32]) -> i64 {
    match position(k, set) {
        Some(p) if p % 2 == 0 => 1,
        Some(_) => -1,
        None => panic!("{k} is not an element of {set:?}"),
    }
}

/// `sgn(K, J) = (-1)^{|J|·|K|} (-1)^{#odd elements of J}`.
pub fn sgn(set: &[u32], sub: &[u32]) -> i64 {
    let odd = sub.iter().filter(|&&j| position(j, set).is_some_and(|p| p % 2 == 1)).count();
    if (sub.len() * set.len() + odd).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn subset(set: &[u32], mask: u64) -> Vec<u32> {
    set.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &k)| k).collect()
}

fn without(set: &[u32], k: u32) -> Vec<u32> {
    set.iter().copied().filter(|&x| x != k).collect()
}

/// Both parts of the sign lemma for every `J ⊆ K`.
pub fn lemma_a1_check(set: &[u32]) -> bool {
    let s = set.len();
    let flip = if (s / 2).is_multiple_of(2) { 1 } else { -1 };
    for mask in 0..(1u64 << s) {
        let j = subset(set, mask);
        let rest = subset(set, !mask);
        if sgn(set, &j) != flip * sgn(set, &rest) {
            return false;
        }
        if s % 2 == 1 {
            let mut total = 0;
            for (p, &jp) in j.iter().enumerate() {
                let term = -epsilon(jp, set) * sgn(&without(set, jp), &without(&j, jp));
                if term != if p % 2 == 0 { sgn(set, &j) } else { -sgn(set, &j) } {
                    return false;
                }
                total += term;
            }
            let expect = if j.len() % 2 == 1 { sgn(set, &j) } else { 0 };
            if total != expect {
                return false;
            }
        }
    }
    true
}

/// An operator `x ↦ Σ_J a_J · ζ_J(x)`, keyed by the bitmask of `J`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IndexedOperator {
    pub terms: BTreeMap<u64, LaurentElement>,
}

impl IndexedOperator {
    pub fn zero() -> Self {
        IndexedOperator::default()
    }

    pub fn one() -> Self {
        Self::term(0, LaurentElement::one())
    }

    pub fn term(j: u64, a: LaurentElement) -> Self {
        let mut terms = BTreeMap::new();
        if !a.is_zero() {
            terms.insert(j, a);
        }
        IndexedOperator { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, j: u64, a: LaurentElement) {
        let slot = self.terms.entry(j).or_insert_with(LaurentElement::zero);
        *slot = &*slot + &a;
        if slot.is_zero() {
            self.terms.remove(&j);
        }
    }

    pub fn apply(&self, x: &LaurentElement) -> LaurentElement {
        let mut out = LaurentElement::zero();
        for (&j, a) in &self.terms {
            out = &out + &(a * &x.zeta(j));
        }
        out
    }
}

impl std::ops::Add for &IndexedOperator {
    type Output = IndexedOperator;
    fn add(self, rhs: &IndexedOperator) -> IndexedOperator {
        let mut out = self.clone();
        for (&j, a) in &rhs.terms {
            out.push(j, a.clone());
        }
        out
    }
}

impl std::ops::Sub for &IndexedOperator {
    type Output = IndexedOperator;
    fn sub(self, rhs: &IndexedOperator) -> IndexedOperator {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &IndexedOperator {
    type Output = IndexedOperator;
    fn neg(self) -> IndexedOperator {
        IndexedOperator { terms: self.terms.iter().map(|(&j, a)| (j, -a)).collect() }
    }
}

/// Composition: `(a ζ_J) ∘ (b ζ_K) = a ζ_J(b) ζ_{J ∪ K}`.
impl std::ops::Mul for &IndexedOperator {
    type Output = IndexedOperator;
    fn mul(self, rhs: &IndexedOperator) -> IndexedOperator {
        let mut out = IndexedOperator::zero();
        for (&j, a) in &self.terms {
            for (&k, b) in &rhs.terms {
                out.push(j | k, a * &b.zeta(j));
            }
        }
        out
    }
}

crate::impl_ring_via_ops!(IndexedOperator);

fn hpow(i: u32, e: u32) -> Polynomial {
    Polynomial::term(Monomial::from_pairs([(h(i), e as i32)]), 1)
}

fn upow(i: u32, e: u32) -> Polynomial {
    Polynomial::term(Monomial::from_pairs([(u(i), e as i32)]), 1)
}

fn bit(i: u32) -> u64 {
    1 << i
}

/// `f̃[i, j]` for the partition `lambda` (indices are 1-based).
pub fn f_tilde_pair(lambda: &[u32], i: u32, j: u32, window: i64) -> IndexedOperator {
    if i > j {
        return -&f_tilde_pair(lambda, j, i, window);
    }
    let (li, lj) = (lambda[i as usize - 1], lambda[j as usize - 1]);
    let ex = |p: Polynomial| LaurentElement::exact(p);
    let mut op = IndexedOperator::term(0, f_pair(i, j, window).scale(&(&hpow(i, li) * &hpow(j, lj))));
    op.push(bit(j), ex(&hpow(i, li) * &upow(j, lj)));
    op.push(bit(i), ex(-&(&upow(i, li) * &hpow(j, lj))));
    op.push(bit(i) | bit(j), ex(-&(&upow(i, li) * &upow(j, lj))));
    op
}

/// `f̃[k] = h_k^{λ_k} + u_k^{λ_k} ζ_k`.
pub fn f_tilde_single(lambda: &[u32], k: u32) -> IndexedOperator {
    let l = lambda[k as usize - 1];
    let mut op = IndexedOperator::term(0, LaurentElement::exact(hpow(k, l)));
    op.push(bit(k), LaurentElement::exact(upow(k, l)));
    op
}

/// Both sides of the operator identity on `K`: the Pfaffian of the
/// `f̃` entries, and `Σ_{I ⊔ J = K} sgn(K, J) h^I u^J f[I] ζ_J`.
pub fn prop_a1_sides(lambda: &[u32], set: &[u32], window: i64) -> (IndexedOperator, IndexedOperator) {
    let lhs = pfaffian(set.len(), |a, b| f_tilde_pair(lambda, set[a], set[b], window), |a| f_tilde_single(lambda, set[a]));
    let mut rhs = IndexedOperator::zero();
    for mask in 0..(1u64 << set.len()) {
        let j = subset(set, mask);
        let i = subset(set, !mask);
        let mut coef = Polynomial::constant(sgn(set, &j));
        for &k in &i {
            coef = &coef * &hpow(k, lambda[k as usize - 1]);
        }
        for &k in &j {
            coef = &coef * &upow(k, lambda[k as usize - 1]);
        }
        let zmask = j.iter().fold(0, |acc, &k| acc | bit(k));
        rhs.push(zmask, f_index(&i, window).scale(&coef));
    }
    (lhs, rhs)
}

/// Checks the operator identity by applying both sides to each monomial.
pub fn prop_a1_check(lambda: &[u32], set: &[u32], monomials: &[Monomial], window: i64) -> Result<bool, AppendixError> {
    if set.iter().any(|&k| k == 0 || k as usize > lambda.len()) {
        return Err(AppendixError::Invalid(format!("index set {set:?} outside 1..={}", lambda.len())));
    }
    let (lhs, rhs) = prop_a1_sides(lambda, set, window);
    for m in monomials {
        if m.pairs().iter().any(|(_, e)| *e < 0) {
            return Err(AppendixError::Invalid(format!("test monomial {m:?} has a negative exponent")));
        }
        let x = LaurentElement::exact(Polynomial::term(m.clone(), 1));
        if !lhs.apply(&x).agrees_with(&rhs.apply(&x))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A window that keeps a few weights beyond the leading terms for `λ` and
/// the given test monomials.
pub fn default_window(lambda: &[u32], monomials: &[Monomial]) -> i64 {
    let base: i64 = lambda.iter().enumerate().map(|(i, &l)| (i as i64 + 1) * l as i64).sum();
    let extra = monomials.iter().map(|m| -weight(m)).max().unwrap_or(0).max(0);
    base + extra + 2 * lambda.len() as i64 + 2
}

/// The data `g(k) | d(k)` of the pushforward: graded components, with
/// `g = None` for the degenerate setting (no halves, no `g` term, `u = 0`).
#[derive(Clone, Debug)]
pub struct PushforwardData {
    pub lambda: Vec<u32>,
    pub d: Vec<Vec<GammaElement>>,
    pub g: Option<Vec<Vec<GammaElement>>>,
}

impl PushforwardData {
    fn d(&self, k: usize, n: i64) -> GammaElement {
        component(&self.d[k], n)
    }

    fn g(&self, k: usize, n: i64) -> GammaElement {
        match &self.g {
            Some(g) => component(&g[k], n),
            None => if n == 0 { GammaElement::one() } else { GammaElement::zero() },
        }
    }

    /// The test family `g(k) = ∏_{j ∈ S(k)} (1 + t_j)`, `d(k) = F · g(k)`
    /// with `F = ∏_{i ≤ 2} (1 + z_i)/(1 - z_i)`, so `F F* = 1` and the
    /// relations `d(k) d(l)* = g(k) g(l)*` hold by construction.
    pub fn symbolic(lambda: &[u32]) -> Result<Self, AppendixError> {
        let max = 2 * lambda.iter().copied().max().unwrap_or(0) as i64 + lambda.len() as i64 + 2;
        let mut f = Polynomial::one();
        for i in 1..=2 {
            let zi = Polynomial::var(crate::polycore::z(i));
            let inv = (&Polynomial::one() - &zi).series_inverse(max).map_err(|e| AppendixError::Invalid(e.to_string()))?;
            f = f.mul_truncated(&(&Polynomial::one() + &zi).mul_truncated(&inv, max), max);
        }
        let mut d = Vec::new();
        let mut g = Vec::new();
        for (k, &l) in lambda.iter().enumerate() {
            let size = l.min(2);
            let gk = crate::polycore::prod_one_plus((0..size).map(|s| crate::polycore::t(k as u32 + 1 + s)));
            let dk = f.mul_truncated(&gk, max);
            g.push(graded(&gk, max));
            d.push(graded(&dk, max));
        }
        Ok(PushforwardData { lambda: lambda.to_vec(), d, g: Some(g) })
    }

    /// Checks `d(k) d(l)* = g(k) g(l)*` through degree `max`.
    pub fn check_relations(&self, max: usize) -> Result<(), AppendixError> {
        let r = self.lambda.len();
        for k in 0..r {
            for l in 0..r {
                for n in 0..=max as i64 {
                    let mut lhs = GammaElement::zero();
                    let mut rhs = GammaElement::zero();
                    for a in 0..=n {
                        let sign = Dyadic::from(if (n - a) % 2 == 0 { 1 } else { -1 });
                        lhs = &lhs + &(&self.d(k, a) * &self.d(l, n - a)).scale_dyadic(&sign);
                        rhs = &rhs + &(&self.g(k, a) * &self.g(l, n - a)).scale_dyadic(&sign);
                    }
                    if lhs != rhs {
                        return Err(AppendixError::RelationViolated(k + 1, l + 1, n as usize));
                    }
                }
            }
        }
        Ok(())
    }
}

fn component(v: &[GammaElement], n: i64) -> GammaElement {
    if n < 0 {
        return GammaElement::zero();
    }
    v.get(n as usize).cloned().unwrap_or_else(GammaElement::zero)
}

fn graded(p: &Polynomial, max: i64) -> Vec<GammaElement> {
    p.graded_components(max as usize).into_iter().map(GammaElement::from_polynomial).collect()
}

/// Graded components of `H^{(k)} = ∏_{i<k} (1 - h_i)/(1 + h_i)` through
/// degree `max`.
pub fn h_series(k: u32, max: i64) -> Vec<Polynomial> {
    let mut acc = Polynomial::one();
    for i in 1..k {
        let hi = Polynomial::var(h(i));
        let inv = (&Polynomial::one() + &hi).series_inverse(max).expect("unit constant term");
        acc = acc.mul_truncated(&(&Polynomial::one() - &hi).mul_truncated(&inv, max), max);
    }
    acc.graded_components(max.max(0) as usize)
}

/// `(φ_k)_*` applied to an element of `A_k`, stored as a [`GammaElement`]
/// whose coefficients may involve `h_1, …, h_k`.
///
/// `h_k^m ↦ ½ Σ_j H^{(k)}_j d(k)_{λ_k+m-j} + ½ (-1)^{r-k} δ_{m,0} g(k)_{λ_k}`.
/// The sum carries no `(-1)^j`: with it the composite does not reproduce
/// the Pfaffian, while without it `φ_k` is multiplication by
/// `h_k^{λ_k} ∏_{i<k} f[i, k]` as the operator calculus requires.
pub fn pushforward_step(data: &PushforwardData, k: usize, elem: &GammaElement) -> GammaElement {
    let r = data.lambda.len();
    let lk = data.lambda[k - 1] as i64;
    let half = Dyadic::pow2(-1);
    let mut cache: BTreeMap<i64, GammaElement> = BTreeMap::new();
    let mut out = GammaElement::zero();
    for (lam, coef) in elem.terms() {
        for (mono, c) in coef.terms() {
            let m = mono.exponent(h(k as u32)) as i64;
            let rest = mono.map_vars(|v| v);
            let rest = Monomial::from_pairs(rest.pairs().iter().copied().filter(|(v, _)| *v != h(k as u32)));
            let image = cache.entry(m).or_insert_with(|| {
                let hs = h_series(k as u32, lk + m);
                let mut acc = GammaElement::zero();
                for (j, hj) in hs.iter().enumerate() {
                    acc = &acc + &data.d(k - 1, lk + m - j as i64).scale(hj);
                }
                if data.g.is_some() {
                    acc = acc.scale_dyadic(&half);
                    if m == 0 {
                        let sign = if (r - k).is_multiple_of(2) { half.clone() } else { -&half };
                        acc = &acc + &data.g(k - 1, lk).scale_dyadic(&sign);
                    }
                }
                acc
            });
            let front = GammaElement::term(lam.clone(), Polynomial::term(rest, c.clone()));
            out = &out + &(&front * image);
        }
    }
    out
}

/// `(φ_1)_* ⋯ (φ_r)_*(start)`.
pub fn pushforward_compose(data: &PushforwardData, start: &GammaElement) -> GammaElement {
    let mut cur = start.clone();
    for k in (1..=data.lambda.len()).rev() {
        cur = pushforward_step(data, k, &cur);
    }
    cur
}

/// `Pf_λ(g(1)|d(1), …, g(r)|d(r))` (without the `2^{-r}`).
pub fn pf_gd(data: &PushforwardData) -> GammaElement {
    let l: Vec<i64> = data.lambda.iter().map(|&x| x as i64).collect();
    pfaffian(
        l.len(),
        |k, m| {
            let (a, b) = (l[k], l[m]);
            let mut out = &(&data.d(k, a) - &data.g(k, a)) * &(&data.d(m, b) + &data.g(m, b));
            for j in 1..=b {
                let s = Dyadic::from(if j % 2 == 0 { 2 } else { -2 });
                out = &out + &(&data.d(k, a + j) * &data.d(m, b - j)).scale_dyadic(&s);
            }
            out
        },
        |k| &data.d(k, l[k]) + &data.g(k, l[k]),
    )
}

/// Whether `(φ_1)_* ⋯ (φ_r)_*(1) = 2^{-r} Pf_λ(g|d)`.
pub fn prop_a2_check(data: &PushforwardData) -> Result<bool, AppendixError> {
    if data.g.is_none() {
        return Err(AppendixError::Invalid("the pushforward identity needs g data".into()));
    }
    if data.d.len() != data.lambda.len() {
        return Err(AppendixError::Invalid("one d series per part".into()));
    }
    for (k, &l) in data.lambda.iter().enumerate() {
        if (l as i64 + 1..=l as i64 + 8).any(|n| !data.g(k, n).is_zero()) {
            return Err(AppendixError::Invalid(format!("g({}) has terms above degree λ_{}", k + 1, k + 1)));
        }
    }
    let max = 2 * data.lambda.iter().copied().max().unwrap_or(0) as usize;
    data.check_relations(max)?;
    let lhs = pushforward_compose(data, &GammaElement::one());
    let rhs = pf_gd(data).scale_dyadic(&Dyadic::pow2(-(data.lambda.len() as i64)));
    Ok(lhs == rhs)
}

/// The degenerate pushforward `φ_*(h_1^{m_1} ⋯ h_s^{m_s})` for row series
/// `c(1), …, c(s)` given by their graded components.
pub fn degenerate_pushforward(lambda: &[u32], c: Vec<Vec<GammaElement>>, exps: &[u32]) -> GammaElement {
    let data = PushforwardData { lambda: lambda.to_vec(), d: c, g: None };
    let start = Monomial::from_pairs(exps.iter().enumerate().map(|(i, &e)| (h(i as u32 + 1), e as i32)));
    pushforward_compose(&data, &GammaElement::from_polynomial(Polynomial::term(start, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_pair_basics() {
        let f = f_pair(1, 2, 1);
        let expect = Polynomial::one() - Polynomial::term(Monomial::from_pairs([(h(1), 1), (h(2), -1)]), 2);
        assert_eq!(f.poly, expect);
        assert!((&f_pair(1, 3, 6) + &f_pair(3, 1, 6)).is_zero());
        assert_eq!(f_pair(2, 2, 4), LaurentElement::one());
    }

    #[test]
    fn product_identity() {
        assert!(f_index_identity(&[1], 6).unwrap());
        assert!(f_index_identity(&[1, 2], 6).unwrap());
        assert!(f_index_identity(&[1, 2, 3], 6).unwrap());
        assert!(f_index_identity(&[1, 2, 3, 4], 6).unwrap());
        assert!(f_index_identity(&[1, 3, 4], 8).unwrap());
    }

    #[test]
    fn truncation_is_tracked() {
        let a = f_pair(1, 2, 3);
        let b = LaurentElement::exact(hpow(2, 5));
        let p = &a * &b;
        assert_eq!(p.exact_to, 3 - 10);
        assert!(matches!(
            LaurentElement { poly: Polynomial::one(), exact_to: -1 }.agrees_with(&LaurentElement::one()),
            Err(AppendixError::WindowTooSmall { .. })
        ));
    }
}
