use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::free::{FreeGamma, GenMonomial};
use super::straighten::{basis_product, free_expansion, straighten_monomial};
use super::StrictPartition;
use crate::polycore::{Dyadic, Polynomial, Var};

/// Which basis a rendering or coefficient extraction refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `Q_λ`.
    Q,
    /// `P_λ = 2^{-len λ} Q_λ`.
    P,
}

/// An element of `Γ[x, y, …]`: a finite combination of `Q_λ` with
/// polynomial coefficients.
///
/// Elements of the `Γ′` world (types B and D) live here too, with dyadic
/// coefficients; use [`Basis::P`] to read them in the `P_λ` basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GammaElement {
    terms: BTreeMap<StrictPartition, Polynomial>,
}

impl GammaElement {
    pub fn zero() -> Self {
        GammaElement::default()
    }

    pub fn one() -> Self {
        GammaElement::from_polynomial(Polynomial::one())
    }

    /// The basis symbol `Q_λ`.
    pub fn basis(lambda: StrictPartition) -> Self {
        GammaElement::term(lambda, Polynomial::one())
    }

    /// `P_λ = 2^{-len λ} Q_λ`.
    pub fn p_basis(lambda: StrictPartition) -> Self {
        let c = Dyadic::pow2(-(lambda.len() as i64));
        GammaElement::term(lambda, Polynomial::constant(c))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        GammaElement::term(StrictPartition::empty(), p)
    }

    pub fn term(lambda: StrictPartition, c: Polynomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        GammaElement { terms }
    }

    pub fn add_term(&mut self, lambda: StrictPartition, c: &Polynomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&StrictPartition, &Polynomial)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `Q_λ`.
    pub fn coefficient(&self, lambda: &StrictPartition) -> Polynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Coefficients in the requested basis.
    pub fn coefficients(&self, basis: Basis) -> BTreeMap<StrictPartition, Polynomial> {
        self.terms
            .iter()
            .map(|(l, c)| {
                let c = match basis {
                    Basis::Q => c.clone(),
                    Basis::P => c.scale(&Dyadic::pow2(l.len() as i64)),
                };
                (l.clone(), c)
            })
            .collect()
    }

    /// The element as a plain polynomial, if no `Q_λ` with `λ ≠ ∅` occurs.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        match self.terms.len() {
            0 => Some(Polynomial::zero()),
            1 => self.terms.get(&StrictPartition::empty()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        if c.is_zero() {
            return GammaElement::zero();
        }
        self.map_coefficients(|p| p * c)
    }

    pub fn scale_dyadic(&self, c: &Dyadic) -> Self {
        self.map_coefficients(|p| p.scale(c))
    }

    pub fn map_coefficients(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        let mut out = GammaElement::zero();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coefficients<E>(&self, f: impl Fn(&Polynomial) -> Result<Polynomial, E>) -> Result<Self, E> {
        let mut out = GammaElement::zero();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Substitutes variables in the coefficients only.
    pub fn substitute(&self, map: impl Fn(Var) -> Option<Polynomial>) -> Self {
        self.map_coefficients(|p| p.substitute(&map))
    }

    pub fn swap_xy(&self) -> Self {
        self.map_coefficients(Polynomial::swap_xy)
    }

    /// Total degree, counting `Q_λ` with degree `|λ|`.
    pub fn degree(&self) -> Option<i64> {
        self.terms.iter().filter_map(|(l, c)| c.degree().map(|d| d + l.size() as i64)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().flat_map(|(l, c)| c.terms().map(move |(m, _)| m.degree() + l.size() as i64));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The part of total degree `d`.
    pub fn homogeneous_component(&self, d: i64) -> Self {
        let mut out = GammaElement::zero();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &c.homogeneous_component(d - l.size() as i64));
        }
        out
    }

    /// Sum of the basis terms with `|λ|` equal to the total degree.
    pub fn top_term(&self) -> Self {
        match self.degree() {
            None => GammaElement::zero(),
            Some(d) => {
                let mut out = GammaElement::zero();
                for (l, c) in &self.terms {
                    if l.size() as i64 == d {
                        out.add_term(l.clone(), &c.homogeneous_component(0));
                    }
                }
                out
            }
        }
    }

    /// Whether every coefficient is integral in the given basis.
    pub fn is_integral(&self, basis: Basis) -> bool {
        self.coefficients(basis).values().all(Polynomial::has_integer_coefficients)
    }

    /// The free-ring element obtained by expanding each `Q_λ` as its
    /// Pfaffian.
    pub fn to_free(&self) -> FreeGamma<Polynomial> {
        let mut out = FreeGamma::<Polynomial>::zero();
        for (l, c) in &self.terms {
            let exp = free_expansion(l);
            for (m, k) in exp.terms() {
                out.add_term(m.clone(), &c.scale(&Dyadic::from(k.0.clone())));
            }
        }
        out
    }

    /// Divides every coefficient exactly by `d`.
    pub fn exact_divide(&self, d: &Polynomial) -> Result<Self, crate::polycore::PolyError> {
        self.try_map_coefficients(|c| c.exact_divide(d))
    }

    /// Human-readable rendering in the given basis, e.g. `Q_(2,1) + 2*x1*Q_(2)`.
    pub fn render(&self, basis: Basis, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sym = match basis {
            Basis::Q => "Q",
            Basis::P => "P",
        };
        let coeffs = self.coefficients(basis);
        let mut pieces = Vec::new();
        for (l, c) in coeffs.iter().rev() {
            let basis_sym = if l.is_empty() {
                String::new()
            } else if latex {
                format!("{}_{{{}}}", sym, l.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            } else {
                format!("{}_{}", sym, l)
            };
            let cs = c.render(latex);
            let piece = if basis_sym.is_empty() {
                if c.len() > 1 {
                    format!("({})", cs)
                } else {
                    cs
                }
            } else if c.is_one() {
                basis_sym
            } else if c.len() == 1 && (c.is_constant() || !cs.starts_with('-')) {
                format!("{}{}{}", cs, if latex { " " } else { "*" }, basis_sym)
            } else {
                format!("({}){}{}", cs, if latex { " " } else { "*" }, basis_sym)
            };
            pieces.push(piece);
        }
        let mut s = String::new();
        for (i, p) in pieces.into_iter().enumerate() {
            if i == 0 {
                s.push_str(&p);
            } else if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(&p);
            }
        }
        s
    }
}

/// Straightens a free-ring element into the `Q_λ` basis.
pub fn straighten_free(f: &FreeGamma<Polynomial>) -> GammaElement {
    let mut acc: BTreeMap<StrictPartition, Polynomial> = BTreeMap::new();
    for (m, c) in f.terms() {
        for (l, k) in straighten_monomial(m).iter() {
            let e = acc.entry(l.clone()).or_default();
            *e = &*e + &c.scale(&Dyadic::from(k.clone()));
        }
    }
    GammaElement { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
}

/// Straightens a single product `Q_{a_1} ⋯ Q_{a_m}` (indices in any order;
/// zeros are dropped).
pub fn straighten_product(parts: &[u32]) -> GammaElement {
    let mut m: GenMonomial = parts.iter().copied().filter(|&p| p > 0).collect();
    m.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = GammaElement::zero();
    for (l, k) in straighten_monomial(&m).iter() {
        out.add_term(l.clone(), &Polynomial::constant(Dyadic::from(k.clone())));
    }
    out
}

crate::impl_ring_via_ops!(GammaElement);

impl Add for &GammaElement {
    type Output = GammaElement;
    fn add(self, rhs: &GammaElement) -> GammaElement {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c);
        }
        out
    }
}

impl Sub for &GammaElement {
    type Output = GammaElement;
    fn sub(self, rhs: &GammaElement) -> GammaElement {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), &-c);
        }
        out
    }
}

impl Mul for &GammaElement {
    type Output = GammaElement;
    fn mul(self, rhs: &GammaElement) -> GammaElement {
        let mut acc: BTreeMap<StrictPartition, Polynomial> = BTreeMap::new();
        for (l, a) in &self.terms {
            for (m, b) in &rhs.terms {
                let ab = a * b;
                if l.is_empty() || m.is_empty() {
                    let key = if l.is_empty() { m } else { l };
                    let e = acc.entry(key.clone()).or_default();
                    *e = &*e + &ab;
                    continue;
                }
                for (n, k) in basis_product(l, m).iter() {
                    let e = acc.entry(n.clone()).or_default();
                    *e = &*e + &ab.scale(&Dyadic::from(k.clone()));
                }
            }
        }
        GammaElement { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &GammaElement {
    type Output = GammaElement;
    fn neg(self) -> GammaElement {
        self.map_coefficients(|c| -c)
    }
}

impl From<Polynomial> for GammaElement {
    fn from(p: Polynomial) -> Self {
        GammaElement::from_polynomial(p)
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Basis::Q, false))
    }
}

impl fmt::Debug for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Basis::Q, false))
    }
}
