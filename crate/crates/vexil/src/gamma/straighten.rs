//! Normal form in the `Q_λ` basis.
//!
//! A generator monomial with a repeated factor `Q_k²` is rewritten with
//! `Q_k² = -2 Σ_{j=1}^k (-1)^j Q_{k+j} Q_{k-j}`; a strictly decreasing one
//! equals `Q_λ` minus the non-leading terms of the Pfaffian expansion of
//! `Q_λ`. Every rewrite moves weight towards larger parts, so the recursion
//! terminates. Results are integer tables cached process-wide.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::free::{gen_mul, FreeGamma, GenMonomial, Int};
use super::StrictPartition;
use crate::multischur::pfaffian;

/// Integer expansion in the `Q_λ` basis.
pub type Expansion = Arc<Vec<(StrictPartition, BigInt)>>;

type Cache<K, V> = OnceLock<RwLock<HashMap<K, V>>>;

static STRAIGHTENED: Cache<GenMonomial, Expansion> = OnceLock::new();
static FREE_EXPANSIONS: Cache<StrictPartition, Arc<FreeGamma<Int>>> = OnceLock::new();
static PRODUCTS: Cache<(StrictPartition, StrictPartition), Expansion> = OnceLock::new();

fn lookup<K: std::hash::Hash + Eq + Clone, V: Clone>(cache: &Cache<K, V>, k: &K) -> Option<V> {
    cache.get_or_init(Default::default).read().unwrap().get(k).cloned()
}

fn store<K: std::hash::Hash + Eq + Clone, V: Clone>(cache: &Cache<K, V>, k: K, v: V) -> V {
    cache.get_or_init(Default::default).write().unwrap().entry(k).or_insert(v).clone()
}

/// `Q_{k l} = Q_k Q_l + 2 Σ_{j=1}^l (-1)^j Q_{k+j} Q_{l-j}` in the free ring.
pub fn free_pair(k: u32, l: u32) -> FreeGamma<Int> {
    let mut out = &FreeGamma::generator(k as i64) * &FreeGamma::generator(l as i64);
    for j in 1..=l {
        let c = Int(BigInt::from(if j % 2 == 0 { 2 } else { -2 }));
        let t = &FreeGamma::generator((k + j) as i64) * &FreeGamma::generator((l - j) as i64);
        out = &out + &t.scale(&c);
    }
    out
}

/// The Pfaffian expansion of `Q_λ` as a polynomial in the generators.
pub fn free_expansion(lambda: &StrictPartition) -> Arc<FreeGamma<Int>> {
    if let Some(e) = lookup(&FREE_EXPANSIONS, lambda) {
        return e;
    }
    let parts = lambda.parts();
    let e = pfaffian(
        parts.len(),
        |i, j| free_pair(parts[i], parts[j]),
        |k| FreeGamma::generator(parts[k] as i64),
    );
    store(&FREE_EXPANSIONS, lambda.clone(), Arc::new(e))
}

fn accumulate(acc: &mut BTreeMap<StrictPartition, BigInt>, exp: &Expansion, c: &BigInt) {
    for (lam, d) in exp.iter() {
        let e = acc.entry(lam.clone()).or_insert_with(BigInt::zero);
        *e += d * c;
        if e.is_zero() {
            acc.remove(lam);
        }
    }
}

/// Expansion of the generator monomial `Q_{m_1} ⋯ Q_{m_s}` in the basis.
pub fn straighten_monomial(m: &GenMonomial) -> Expansion {
    if let Some(e) = lookup(&STRAIGHTENED, m) {
        return e;
    }
    let mut acc: BTreeMap<StrictPartition, BigInt> = BTreeMap::new();
    if let Some(i) = (1..m.len()).find(|&i| m[i - 1] == m[i]) {
        let k = m[i];
        let mut rest = m.clone();
        rest.remove(i);
        rest.remove(i - 1);
        for j in 1..=k {
            let mut pair = GenMonomial::new();
            pair.push(k + j);
            if k > j {
                pair.push(k - j);
            }
            let c = BigInt::from(if j % 2 == 1 { 2 } else { -2 });
            accumulate(&mut acc, &straighten_monomial(&gen_mul(&rest, &pair)), &c);
        }
    } else {
        let lambda = StrictPartition::new(m.to_vec()).expect("strictly decreasing");
        acc.insert(lambda.clone(), BigInt::one());
        if m.len() >= 2 {
            let exp = free_expansion(&lambda);
            for (mono, c) in exp.terms() {
                if mono == m {
                    debug_assert!(c.0.is_one());
                    continue;
                }
                accumulate(&mut acc, &straighten_monomial(mono), &-&c.0);
            }
        }
    }
    let v: Expansion = Arc::new(acc.into_iter().collect());
    store(&STRAIGHTENED, m.clone(), v)
}

/// Expansion of `Q_λ · Q_μ` in the basis.
pub fn basis_product(lambda: &StrictPartition, mu: &StrictPartition) -> Expansion {
    let key = if lambda <= mu { (lambda.clone(), mu.clone()) } else { (mu.clone(), lambda.clone()) };
    if let Some(e) = lookup(&PRODUCTS, &key) {
        return e;
    }
    let prod = &*free_expansion(lambda) * &*free_expansion(mu);
    let mut acc = BTreeMap::new();
    for (mono, c) in prod.terms() {
        accumulate(&mut acc, &straighten_monomial(mono), &c.0);
    }
    store(&PRODUCTS, key, Arc::new(acc.into_iter().collect()))
}
