use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::dyadic::Dyadic;
use super::PolyError;

/// Variable families, in printing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
    T,
    Z,
    H,
    U,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::X, Family::Y, Family::T, Family::Z, Family::H, Family::U];

    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::T => 't',
            Family::Z => 'z',
            Family::H => 'h',
            Family::U => 'u',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.letter() == c)
    }
}

/// An indexed variable such as `x_3`. Packed so that the derived order is
/// (family, index).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    pub fn new(family: Family, index: u32) -> Var {
        assert!((1..(1 << 24)).contains(&index), "variable index out of range");
        Var(((family as u32) << 24) | index)
    }

    pub fn family(self) -> Family {
        Family::ALL[(self.0 >> 24) as usize]
    }

    pub fn index(self) -> u32 {
        self.0 & 0x00ff_ffff
    }

    pub fn with_family(self, family: Family) -> Var {
        Var::new(family, self.index())
    }
}

pub fn x(i: u32) -> Var {
    Var::new(Family::X, i)
}
pub fn y(i: u32) -> Var {
    Var::new(Family::Y, i)
}
pub fn t(i: u32) -> Var {
    Var::new(Family::T, i)
}
pub fn z(i: u32) -> Var {
    Var::new(Family::Z, i)
}
pub fn h(i: u32) -> Var {
    Var::new(Family::H, i)
}
pub fn u(i: u32) -> Var {
    Var::new(Family::U, i)
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family().letter(), self.index())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family().letter(), self.index())
    }
}

/// A monomial: variables with nonzero exponents, sorted by variable.
///
/// Exponents are signed so that the appendix can work with Laurent
/// monomials in the `h` variables; everything else keeps them nonnegative.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, i32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::from_pairs([(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Monomial {
        let mut acc: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&(_, e)| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when the result has nonnegative exponents.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let inv = Monomial(other.0.iter().map(|&(v, e)| (v, -e)).collect());
        let q = self.mul(&inv);
        q.is_polynomial().then_some(q)
    }

    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order with `x1` the most significant variable.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_monomial(self, false))
    }
}

/// A sparse polynomial with dyadic coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Dyadic>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Dyadic::one())
    }

    pub fn constant(c: impl Into<Dyadic>) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<Dyadic>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Dyadic)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Dyadic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Dyadic)> + ExactSizeIterator {
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> Dyadic {
        self.coefficient(&Monomial::one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Dyadic {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Dyadic)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree of a term.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: i64) -> Polynomial {
        self.filter(|m| m.degree() == d)
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: i64) -> Polynomial {
        self.filter(|m| m.degree() <= max_degree)
    }

    /// Homogeneous components of degrees `0..=max_degree`.
    pub fn graded_components(&self, max_degree: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); max_degree + 1];
        for (m, c) in &self.terms {
            let d = m.degree();
            if d >= 0 && (d as usize) <= max_degree {
                out[d as usize].terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.pairs().iter().map(|&(v, _)| v)).collect()
    }

    pub fn scale(&self, c: &Dyadic) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Dyadic) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Product with every term of degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Polynomial, max_degree: i64) -> Polynomial {
        let mut acc: HashMap<Monomial, Dyadic> = HashMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &other.terms {
                if da + mb.degree() > max_degree {
                    continue;
                }
                let c = ca * cb;
                let e = acc.entry(ma.mul(mb)).or_default();
                *e += &c;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Multiplies the degree-`d` component by `(-1)^d`.
    pub fn star(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), if m.degree() % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Simultaneous substitution; variables for which `map` returns `None`
    /// are left alone.
    pub fn substitute(&self, map: impl Fn(Var) -> Option<Polynomial>) -> Polynomial {
        let mut images: HashMap<Var, Option<Polynomial>> = HashMap::new();
        let mut powers: HashMap<(Var, i32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut prod = Polynomial::constant(c.clone());
            for &(v, e) in m.pairs() {
                let img = images.entry(v).or_insert_with(|| map(v));
                match img {
                    None => kept.push((v, e)),
                    Some(p) => {
                        assert!(e > 0, "cannot substitute into a negative power");
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e as u32));
                        prod = &prod * pw;
                    }
                }
            }
            let rest = Monomial::from_pairs(kept);
            out = &out + &prod.mul_term(&rest, &Dyadic::one());
        }
        out
    }

    pub fn substitute_map(&self, map: &BTreeMap<Var, Polynomial>) -> Polynomial {
        self.substitute(|v| map.get(&v).cloned())
    }

    /// Renames variables (the renaming need not be injective).
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Exchanges `x_i` and `y_i` for every `i`.
    pub fn swap_xy(&self) -> Polynomial {
        self.map_vars(|v| match v.family() {
            Family::X => v.with_family(Family::Y),
            Family::Y => v.with_family(Family::X),
            _ => v,
        })
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    pub fn exact_divide(&self, d: &Polynomial) -> Result<Polynomial, PolyError> {
        let (lm, lc) = d.leading_term().ok_or(PolyError::DivisionByZero)?;
        if d.len() == 1 {
            let mut q = Polynomial::zero();
            for (m, c) in &self.terms {
                let qm = m.div(lm).ok_or(PolyError::NotDivisible)?;
                let qc = c.checked_div(lc).ok_or(PolyError::NotDivisible)?;
                q.terms.insert(qm, qc);
            }
            return Ok(q);
        }
        let mut r = self.clone();
        let mut q = Polynomial::zero();
        while let Some((rm, rc)) = r.leading_term() {
            let qm = rm.div(lm).ok_or(PolyError::NotDivisible)?;
            let qc = rc.checked_div(lc).ok_or(PolyError::NotDivisible)?;
            r = &r - &d.mul_term(&qm, &qc);
            q.add_term(qm, &qc);
        }
        Ok(q)
    }

    /// Inverse of a power series with invertible constant term, up to and
    /// including `max_degree`.
    pub fn series_inverse(&self, max_degree: i64) -> Result<Polynomial, PolyError> {
        let c0 = self.constant_term();
        let inv0 = Dyadic::one().checked_div(&c0).ok_or(PolyError::NotInvertible)?;
        // 1/(c0 (1 + r)) = inv0 * sum (-r)^k
        let r = (self - &Polynomial::constant(c0.clone())).scale(&inv0);
        if r.terms.keys().any(|m| m.degree() <= 0) {
            return Err(PolyError::NotInvertible);
        }
        let neg_r = -&r;
        let mut acc = Polynomial::one();
        let mut pw = Polynomial::one();
        for _ in 0..max_degree.max(0) {
            pw = pw.mul_truncated(&neg_r, max_degree);
            if pw.is_zero() {
                break;
            }
            acc = &acc + &pw;
        }
        Ok(acc.scale(&inv0))
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(Dyadic::is_integer)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Dyadic> for Polynomial {
    fn from(c: Dyadic) -> Self {
        Polynomial::constant(c)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.len() == 1 {
            let (m, c) = self.leading_term().unwrap();
            return rhs.mul_term(m, c);
        }
        if rhs.len() == 1 {
            let (m, c) = rhs.leading_term().unwrap();
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Dyadic> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                let e = acc.entry(ma.mul(mb)).or_default();
                *e += &c;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn render_monomial(m: &Monomial, latex: bool) -> String {
    let mut s = String::new();
    for &(v, e) in m.pairs() {
        if latex {
            s.push_str(&format!("{}_{{{}}}", v.family().letter(), v.index()));
            if e != 1 {
                s.push_str(&format!("^{{{}}}", e));
            }
        } else {
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&v.to_string());
            if e != 1 {
                s.push_str(&format!("^{}", e));
            }
        }
    }
    s
}

pub(crate) fn render_coefficient(c: &Dyadic, latex: bool) -> String {
    if latex && !c.is_integer() {
        format!("\\frac{{{}}}{{{}}}", c.num(), num_bigint::BigInt::from(1) << (c.log2den() as usize))
    } else {
        c.to_string()
    }
}

impl Polynomial {
    /// Text rendering, leading term first, e.g. `x1^2 - y1^2`.
    pub fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(m, latex);
            if mono.is_empty() {
                s.push_str(&render_coefficient(&abs, latex));
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&render_coefficient(&abs, latex));
                s.push(if latex { ' ' } else { '*' });
                s.push_str(&mono);
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// `∏_{i ∈ vars} (1 + v_i)`.
pub fn prod_one_plus(vars: impl IntoIterator<Item = Var>) -> Polynomial {
    let mut acc = Polynomial::one();
    for v in vars {
        acc = &acc * &(&Polynomial::one() + &Polynomial::var(v));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: Var) -> Polynomial {
        Polynomial::var(v)
    }

    #[test]
    fn difference_of_squares() {
        let a = &p(x(1)) + &p(y(1));
        let b = &p(x(1)) - &p(y(1));
        let prod = &a * &b;
        assert_eq!(prod, &p(x(1)).pow(2) - &p(y(1)).pow(2));
        assert_eq!(prod.to_string(), "x1^2 - y1^2");
        assert_eq!(&prod * &Polynomial::one(), prod);
    }

    #[test]
    fn expansion_and_star() {
        let e = prod_one_plus([t(1), t(2)]);
        assert_eq!(e.len(), 4);
        let f = &(&Polynomial::one() + &p(t(1))) + &(&p(t(1)) * &p(t(2)));
        assert_eq!(f.star(), &(&Polynomial::one() - &p(t(1))) + &(&p(t(1)) * &p(t(2))));
        assert_eq!(f.star().star(), f);
    }

    #[test]
    fn substitution() {
        let e2 = &p(t(1)) * &p(t(2));
        let s = e2.substitute(|v| match v {
            v if v == t(1) => Some(p(x(1))),
            v if v == t(2) => Some(p(y(1))),
            _ => None,
        });
        assert_eq!(s, &p(x(1)) * &p(y(1)));
        let sq = p(x(1)).pow(2).substitute(|v| (v == x(1)).then(|| -&p(x(1))));
        assert_eq!(sq, p(x(1)).pow(2));
        // simultaneous: swapping two variables
        let q = &p(x(1)) + &p(x(2)).pow(2);
        let sw = q.substitute(|v| match v.index() {
            1 => Some(p(x(2))),
            2 => Some(p(x(1))),
            _ => None,
        });
        assert_eq!(sw, &p(x(2)) + &p(x(1)).pow(2));
    }

    #[test]
    fn division() {
        let num = &p(x(1)).pow(2) - &p(x(2)).pow(2);
        let den = &p(x(1)) - &p(x(2));
        assert_eq!(num.exact_divide(&den).unwrap(), &p(x(1)) + &p(x(2)));
        assert_eq!(Polynomial::zero().exact_divide(&den).unwrap(), Polynomial::zero());
        let a = Polynomial::term(Monomial::from_pairs([(x(1), 1), (y(1), 1)]), 2);
        let b = Polynomial::term(Monomial::var(x(1)), -2);
        assert_eq!(a.exact_divide(&b).unwrap(), -&p(y(1)));
        assert_eq!(p(x(1)).exact_divide(&p(x(2))), Err(PolyError::NotDivisible));
        assert_eq!((&p(x(1)) + &Polynomial::one()).exact_divide(&den), Err(PolyError::NotDivisible));
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_pairs([(x(1), 1)]);
        let b = Monomial::from_pairs([(y(1), 1)]);
        let c = Monomial::from_pairs([(x(2), 2)]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::from_pairs([(x(1), 1), (y(2), 1)]) > Monomial::from_pairs([(x(2), 2)]));
    }

    #[test]
    fn inverse_series() {
        let f = &Polynomial::one() - &p(z(1));
        let inv = f.series_inverse(4).unwrap();
        assert_eq!(inv.len(), 5);
        assert_eq!(f.mul_truncated(&inv, 4), Polynomial::one());
    }
}
