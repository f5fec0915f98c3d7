use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::polycore::{Dyadic, Polynomial, Ring};

/// A product `Q_{a_1} ⋯ Q_{a_m}` of generators, parts weakly decreasing and
/// positive (`Q_0 = 1` is dropped).
pub type GenMonomial = SmallVec<[u32; 8]>;

pub(crate) fn gen_mul(a: &GenMonomial, b: &GenMonomial) -> GenMonomial {
    let mut out = GenMonomial::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// An element of the free polynomial ring `C[Q_1, Q_2, …]`, before the
/// relations `Q·Q* = 1` are imposed.
///
/// Any substitution of the generators is a ring homomorphism out of this
/// ring, so products and Pfaffians can be formed here and straightened once.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeGamma<C> {
    terms: BTreeMap<GenMonomial, C>,
}

impl<C> FreeGamma<C>
where
    C: Ring,
{
    pub fn zero() -> Self {
        FreeGamma { terms: BTreeMap::new() }
    }

    pub fn scalar(c: C) -> Self {
        Self::term(GenMonomial::new(), c)
    }

    /// The generator `Q_k` (`Q_0 = 1`, negative indices give zero).
    pub fn generator(k: i64) -> Self {
        if k < 0 {
            return Self::zero();
        }
        let mut m = GenMonomial::new();
        if k > 0 {
            m.push(k as u32);
        }
        Self::term(m, C::one())
    }

    pub fn term(m: GenMonomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        FreeGamma { terms }
    }

    pub fn add_term(&mut self, m: GenMonomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().plus(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenMonomial, &C)> {
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

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(m.clone(), &d.times(c));
        }
        out
    }

    pub fn map_coefficients<D>(&self, f: impl Fn(&C) -> D) -> FreeGamma<D>
    where
        D: Ring,
    {
        let mut out = FreeGamma::<D>::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }
}

impl FreeGamma<Polynomial> {
    pub fn scale_dyadic(&self, c: &Dyadic) -> Self {
        self.map_coefficients::<Polynomial>(|p| p.scale(c))
    }

    /// Replaces every generator `Q_k` by `images[k]` (index 0 unused).
    pub fn evaluate(&self, images: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for &k in m {
                prod = &prod * &images[k as usize];
            }
            out = &out + &prod;
        }
        out
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum::<u32>()).max().unwrap_or(0)
    }
}

impl<C> Ring for FreeGamma<C>
where
    C: Ring,
{
    fn zero() -> Self {
        FreeGamma { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::scalar(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl<C> Add for &FreeGamma<C>
where
    C: Ring,
{
    type Output = FreeGamma<C>;
    fn add(self, rhs: &FreeGamma<C>) -> FreeGamma<C> {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<C> Sub for &FreeGamma<C>
where
    C: Ring,
{
    type Output = FreeGamma<C>;
    fn sub(self, rhs: &FreeGamma<C>) -> FreeGamma<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &c.negated());
        }
        out
    }
}

impl<C> Mul for &FreeGamma<C>
where
    C: Ring,
{
    type Output = FreeGamma<C>;
    fn mul(self, rhs: &FreeGamma<C>) -> FreeGamma<C> {
        let mut acc: std::collections::HashMap<GenMonomial, C> = std::collections::HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca.times(cb);
                match acc.entry(gen_mul(ma, mb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().plus(&c);
                        *e.get_mut() = s;
                    }
                }
            }
        }
        FreeGamma { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl<C> Neg for &FreeGamma<C>
where
    C: Ring,
{
    type Output = FreeGamma<C>;
    fn neg(self) -> FreeGamma<C> {
        FreeGamma { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect() }
    }
}

/// Integer coefficients for the straightening tables.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Int(pub num_bigint::BigInt);

impl Int {
    pub fn zero() -> Self {
        Int(0.into())
    }
    pub fn one() -> Self {
        Int(1.into())
    }
    pub fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(&self.0)
    }
}

impl Add for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        Int(&self.0 + &rhs.0)
    }
}

impl Sub for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        Int(&self.0 - &rhs.0)
    }
}

impl Mul for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        Int(&self.0 * &rhs.0)
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        Int(-&self.0)
    }
}

crate::impl_ring_via_ops!(Int);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_products_merge_sorted() {
        let a: GenMonomial = [5, 2].into_iter().collect();
        let b: GenMonomial = [3, 2, 1].into_iter().collect();
        assert_eq!(gen_mul(&a, &b).as_slice(), &[5, 3, 2, 2, 1]);
        let q1 = FreeGamma::<Int>::generator(1);
        let sq = &q1 * &q1;
        assert_eq!(sq.len(), 1);
        assert!(FreeGamma::<Int>::generator(-1).is_zero());
        assert_eq!(FreeGamma::<Int>::generator(0), <FreeGamma<Int> as Ring>::one());
    }
}
