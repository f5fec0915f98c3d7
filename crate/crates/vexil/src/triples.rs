//! Triples `(k, p, q)` indexing vexillary elements of types A, B/C and D.
//!
//! Conventions: for B/C/D the sequences `p` and `q` weakly decrease and the
//! strictness condition is `(p_i - p_{i+1}) + (q_i - q_{i+1}) > k_{i+1} - k_i`.
//! For type A, `q` weakly increases and validity is phrased through
//! `l_i = p_i - q_i + k_i`, which must strictly decrease and stay positive.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::gamma::{StrictPartition, TypeDPartition};
use crate::weyl::{SignedPermutation, WeylType};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripleError {
    #[error("invalid triple: {0}")]
    Invalid(String),
    #[error("operation needs a type {expected} triple, got type {got}")]
    WrongType { expected: &'static str, got: WeylType },
    #[error("cannot parse triple: {0}")]
    Parse(String),
}

/// Outcome of [`Triple::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TripleClass {
    Strict,
    Redundant,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub k: Vec<u32>,
    pub p: Vec<u32>,
    pub q: Vec<u32>,
    #[serde(rename = "type")]
    pub ty: WeylType,
}

/// `λ(τ)`: a strict partition (B/C), a type-D partition, or an ordinary
/// partition (A).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleLambda {
    Strict(StrictPartition),
    TypeD(TypeDPartition),
    Ordinary(Vec<u32>),
}

impl TripleLambda {
    pub fn parts(&self) -> Vec<u32> {
        match self {
            TripleLambda::Strict(l) => l.parts().to_vec(),
            TripleLambda::TypeD(l) => l.parts().to_vec(),
            TripleLambda::Ordinary(l) => l.clone(),
        }
    }
}

impl Triple {
    pub fn new(k: Vec<u32>, p: Vec<u32>, q: Vec<u32>, ty: WeylType) -> Result<Self, TripleError> {
        if k.len() != p.len() || k.len() != q.len() {
            return Err(TripleError::Invalid(format!("lengths {} {} {} differ", k.len(), p.len(), q.len())));
        }
        Ok(Triple { k, p, q, ty })
    }

    pub fn empty(ty: WeylType) -> Self {
        Triple { k: vec![], p: vec![], q: vec![], ty }
    }

    /// Number of terms `s`.
    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    /// `r = k_s`, the length of `λ(τ)`.
    pub fn rank(&self) -> u32 {
        self.k.last().copied().unwrap_or(0)
    }

    /// `l_i = p_i - q_i + k_i` (type A).
    pub fn l_values(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.p[i] as i64 - self.q[i] as i64 + self.k[i] as i64).collect()
    }

    /// Index `i` of the smallest `k_i ≥ k` (rows are 1-based).
    pub fn governing_index(&self, k: u32) -> usize {
        self.k.iter().position(|&ki| ki >= k).expect("row within rank")
    }

    /// Slack of the validity inequality `Δp + Δq > Δk` (type A: `l_i > l_{i+1}`)
    /// between terms `i` and `i+1`; the triple is strict when every slack is
    /// positive.
    fn slack(&self, i: usize) -> i64 {
        let dk = self.k[i + 1] as i64 - self.k[i] as i64;
        match self.ty {
            WeylType::A => self.l_values()[i] - self.l_values()[i + 1] - 1,
            _ => {
                let dp = self.p[i] as i64 - self.p[i + 1] as i64;
                let dq = self.q[i] as i64 - self.q[i + 1] as i64;
                dp + dq - dk - 1
            }
        }
    }

    pub fn validate(&self) -> TripleClass {
        if self.k.len() != self.p.len() || self.k.len() != self.q.len() {
            return TripleClass::Invalid;
        }
        let s = self.len();
        if self.k.first().is_some_and(|&k| k == 0) || self.k.windows(2).any(|w| w[0] >= w[1]) {
            return TripleClass::Invalid;
        }
        if self.p.windows(2).any(|w| w[0] < w[1]) {
            return TripleClass::Invalid;
        }
        match self.ty {
            WeylType::A => {
                if self.q.windows(2).any(|w| w[0] > w[1]) {
                    return TripleClass::Invalid;
                }
                if (0..s).any(|i| self.p[i] == 0 || self.k[i] > self.q[i]) {
                    return TripleClass::Invalid;
                }
                if self.l_values().last().is_some_and(|&l| l <= 0) {
                    return TripleClass::Invalid;
                }
            }
            WeylType::B | WeylType::C | WeylType::D => {
                if self.q.windows(2).any(|w| w[0] < w[1]) {
                    return TripleClass::Invalid;
                }
                if self.ty != WeylType::D && (0..s).any(|i| self.p[i] == 0 || self.q[i] == 0) {
                    return TripleClass::Invalid;
                }
            }
        }
        let mut class = TripleClass::Strict;
        for i in 0..s.saturating_sub(1) {
            match self.slack(i) {
                d if d >= 0 => {}
                -1 => class = TripleClass::Redundant,
                _ => return TripleClass::Invalid,
            }
        }
        class
    }

    fn require_valid(&self) -> Result<(), TripleError> {
        if self.validate() == TripleClass::Invalid {
            Err(TripleError::Invalid(self.to_string()))
        } else {
            Ok(())
        }
    }

    fn remove(&mut self, i: usize) {
        self.k.remove(i);
        self.p.remove(i);
        self.q.remove(i);
    }

    /// Drops every term at which the validity inequality is an equality.
    pub fn reduce_redundant(&self) -> Result<Triple, TripleError> {
        self.require_valid()?;
        let mut t = self.clone();
        while let Some(i) = (0..t.len().saturating_sub(1)).find(|&i| t.slack(i) == -1) {
            t.remove(i);
        }
        Ok(t)
    }

    pub fn lambda(&self) -> Result<TripleLambda, TripleError> {
        self.require_valid()?;
        let r = self.rank();
        let mut parts = Vec::with_capacity(r as usize);
        for k in 1..=r {
            let i = self.governing_index(k);
            let (ki, pi, qi) = (self.k[i] as i64, self.p[i] as i64, self.q[i] as i64);
            let v = match self.ty {
                WeylType::A => self.l_values()[i],
                WeylType::B | WeylType::C => pi + qi - 1 + ki - k as i64,
                WeylType::D => pi + qi + ki - k as i64,
            };
            parts.push(v as u32);
        }
        let bad = |e| TripleError::Invalid(format!("{self}: {e}"));
        Ok(match self.ty {
            WeylType::A => TripleLambda::Ordinary(parts),
            WeylType::B | WeylType::C => TripleLambda::Strict(StrictPartition::new(parts).map_err(bad)?),
            WeylType::D => TripleLambda::TypeD(TypeDPartition::new(parts).map_err(bad)?),
        })
    }

    /// `τ(+)`: a type-D triple with every `p_i` and `q_i` raised by one,
    /// read as a type-C triple.
    pub fn plus_map(&self) -> Result<Triple, TripleError> {
        if self.ty != WeylType::D {
            return Err(TripleError::WrongType { expected: "D", got: self.ty });
        }
        Ok(Triple {
            k: self.k.clone(),
            p: self.p.iter().map(|p| p + 1).collect(),
            q: self.q.iter().map(|q| q + 1).collect(),
            ty: WeylType::C,
        })
    }

    /// Inverse of [`Triple::plus_map`] on triples with positive `p`, `q`.
    pub fn minus_map(&self) -> Triple {
        Triple {
            k: self.k.clone(),
            p: self.p.iter().map(|p| p - 1).collect(),
            q: self.q.iter().map(|q| q - 1).collect(),
            ty: WeylType::D,
        }
    }

    /// Type-A dual `(l_s < … < l_1, q_s ≥ … ≥ q_1, p_s ≤ … ≤ p_1)`.
    pub fn dual(&self) -> Result<Triple, TripleError> {
        if self.ty != WeylType::A {
            return Err(TripleError::WrongType { expected: "A", got: self.ty });
        }
        self.require_valid()?;
        Ok(Triple {
            k: self.l_values().iter().rev().map(|&l| l as u32).collect(),
            p: self.q.iter().rev().copied().collect(),
            q: self.p.iter().rev().copied().collect(),
            ty: WeylType::A,
        })
    }

    /// `w(τ)`, trimmed of trailing fixed points.
    pub fn w(&self) -> Result<SignedPermutation, TripleError> {
        self.require_valid()?;
        let w = match self.ty {
            WeylType::A => insert_a(self),
            WeylType::B | WeylType::C => insert_c(self),
            WeylType::D => insert_c(&self.plus_map()?),
        };
        Ok(w.trimmed())
    }

    /// Whether `w` satisfies the rank conditions of this triple.
    pub fn rank_conditions_hold(&self, w: &SignedPermutation) -> bool {
        (0..self.len()).all(|i| {
            let (k, p, q) = (self.k[i] as usize, self.p[i] as i64, self.q[i] as i64);
            match self.ty {
                WeylType::A => w.rank_function_a(p, q) == k,
                WeylType::B | WeylType::C => w.rank_function(p, q, false) == k,
                WeylType::D => w.rank_function(p, q, true) == k,
            }
        })
    }
}

fn ambient_size(t: &Triple) -> usize {
    let r = t.rank() as usize;
    let p1 = t.p.iter().copied().max().unwrap_or(0) as usize;
    let q1 = t.q.iter().copied().max().unwrap_or(0) as usize;
    (p1 + r).max(q1 + r).max(1)
}

/// Fills the free slots of `slots` with the unused positive values, in
/// increasing order.
fn fill_rest(mut slots: Vec<i32>, used: &[bool]) -> SignedPermutation {
    let mut rest = (1..used.len()).filter(|&v| !used[v]).map(|v| v as i32);
    for s in slots.iter_mut() {
        if *s == 0 {
            *s = rest.next().expect("as many values as free slots");
        }
    }
    SignedPermutation::new(slots).expect("insertion yields a permutation")
}

/// Barred insertion: for each term, the smallest unused integers `≥ q_i`
/// go in barred, largest first, at the leftmost free positions `≥ p_i`.
fn insert_c(t: &Triple) -> SignedPermutation {
    let n = ambient_size(t);
    let mut slots = vec![0i32; n];
    let mut used = vec![false; n + 1];
    let mut prev = 0;
    for i in 0..t.len() {
        let m = (t.k[i] - prev) as usize;
        prev = t.k[i];
        let mut vals: Vec<usize> = (t.q[i] as usize..=n).filter(|&v| !used[v]).take(m).collect();
        vals.reverse();
        let pos: Vec<usize> = (t.p[i] as usize..=n).filter(|&a| slots[a - 1] == 0).take(m).collect();
        for (&a, &v) in pos.iter().zip(&vals) {
            slots[a - 1] = -(v as i32);
            used[v] = true;
        }
    }
    fill_rest(slots, &used)
}

/// Type-A insertion: the largest unused integers `≤ q_i`, in increasing
/// order, at the leftmost free positions `> p_i`.
fn insert_a(t: &Triple) -> SignedPermutation {
    let n = ambient_size(t);
    let mut slots = vec![0i32; n];
    let mut used = vec![false; n + 1];
    let mut prev = 0;
    for i in 0..t.len() {
        let m = (t.k[i] - prev) as usize;
        prev = t.k[i];
        let mut vals: Vec<usize> = (1..=t.q[i] as usize).rev().filter(|&v| !used[v]).take(m).collect();
        vals.reverse();
        let pos: Vec<usize> = (t.p[i] as usize + 1..=n).filter(|&a| slots[a - 1] == 0).take(m).collect();
        for (&a, &v) in pos.iter().zip(&vals) {
            slots[a - 1] = v as i32;
            used[v] = true;
        }
    }
    fill_rest(slots, &used)
}

/// Recovers the triple of a vexillary element, or `None`.
///
/// Types B/C/D first try a direct reading of the one-line notation; any
/// answer is confirmed by re-inserting. Otherwise (and always for type A) a
/// search over triples consistent with the partial insertion decides.
pub fn triple_of_w(w: &SignedPermutation, ty: WeylType) -> Option<Triple> {
    let w = w.trimmed();
    match ty {
        WeylType::A => {
            if !w.is_unsigned() {
                return None;
            }
            search_triples(&w, WeylType::A).into_iter().next()
        }
        WeylType::B | WeylType::C | WeylType::D => {
            let c = read_triple_c(&w).or_else(|| search_triples(&w, WeylType::C).into_iter().next())?;
            Some(if ty == WeylType::D {
                c.minus_map()
            } else {
                Triple { ty, ..c }
            })
        }
    }
}

/// Direct reading of a type-C triple: `p_1` is the position after the last
/// descent, followed by a run of barred values consecutive up to values
/// already consumed; repeat on what remains.
pub fn read_triple_c(w: &SignedPermutation) -> Option<Triple> {
    let vals = w.values();
    let n = vals.len();
    let mut pos_done = vec![false; n + 1];
    let mut val_done = vec![false; n + 1];
    let mut t = Triple::empty(WeylType::C);
    let (mut prev_p, mut prev_q, mut k) = (u32::MAX, u32::MAX, 0u32);
    while (1..=n).any(|a| !pos_done[a] && vals[a - 1] < 0) {
        let seq: Vec<usize> = (1..=n).filter(|&a| !pos_done[a]).collect();
        let start_idx = (0..seq.len().saturating_sub(1))
            .rev()
            .find(|&j| vals[seq[j] - 1] > vals[seq[j + 1] - 1])
            .map_or(0, |j| j + 1);
        let start = seq[start_idx];
        let mut p = start;
        while p > 1 && pos_done[p - 1] {
            p -= 1;
        }
        let p = (p as u32).min(prev_p);
        let mut run = Vec::new();
        for &a in &seq[start_idx..] {
            let v = vals[a - 1];
            if v > 0 {
                break;
            }
            let b = v.unsigned_abs() as usize;
            if let Some(&(_, last)) = run.last() {
                let last: usize = last;
                if b >= last || (b + 1..last).any(|c| !val_done[c]) {
                    break;
                }
            }
            run.push((a, b));
        }
        if run.is_empty() {
            return None;
        }
        for &(a, b) in &run {
            pos_done[a] = true;
            val_done[b] = true;
        }
        k += run.len() as u32;
        let q = (run.last().unwrap().1 as u32).min(prev_q);
        t.k.push(k);
        t.p.push(p);
        t.q.push(q);
        prev_p = p;
        prev_q = q;
    }
    (t.validate() == TripleClass::Strict && t.w().ok()? == *w).then_some(t)
}

/// All strict triples `τ` (type A or C) with `w(τ) = w`, found by extending
/// triples term by term while the partial insertion agrees with `w`.
pub fn search_triples(w: &SignedPermutation, ty: WeylType) -> Vec<Triple> {
    let w = w.trimmed();
    let n = w.n();
    let mut out = Vec::new();
    if w.is_identity() {
        out.push(Triple::empty(ty));
        if ty != WeylType::A {
            return out;
        }
    }
    let mut st = SearchState {
        w: w.values().to_vec(),
        n,
        ty,
        slots: vec![0; n],
        used: vec![false; n + 1],
        t: Triple::empty(ty),
        out: &mut out,
    };
    st.extend();
    out
}

struct SearchState<'a> {
    w: Vec<i32>,
    n: usize,
    ty: WeylType,
    slots: Vec<i32>,
    used: Vec<bool>,
    t: Triple,
    out: &'a mut Vec<Triple>,
}

impl SearchState<'_> {
    fn complete(&self) -> bool {
        let mut rest = (1..=self.n).filter(|&v| !self.used[v]);
        self.slots.iter().zip(&self.w).all(|(&s, &v)| if s == 0 { rest.next() == Some(v as usize) } else { s == v })
    }

    /// Places the values of a new term; returns the touched positions if the
    /// placement agrees with `w`.
    fn place(&mut self, m: usize, p: u32, q: u32) -> Option<Vec<(usize, usize)>> {
        let n = self.n;
        let (vals, pos): (Vec<usize>, Vec<usize>) = match self.ty {
            WeylType::A => {
                let mut v: Vec<usize> = (1..=q as usize).rev().filter(|&v| !self.used[v]).take(m).collect();
                v.reverse();
                (v, (p as usize + 1..=n).filter(|&a| self.slots[a - 1] == 0).take(m).collect())
            }
            _ => {
                let mut v: Vec<usize> = (q as usize..=n).filter(|&v| !self.used[v]).take(m).collect();
                v.reverse();
                (v, (p as usize..=n).filter(|&a| self.slots[a - 1] == 0).take(m).collect())
            }
        };
        if vals.len() < m || pos.len() < m {
            return None;
        }
        let sign = if self.ty == WeylType::A { 1 } else { -1 };
        if pos.iter().zip(&vals).any(|(&a, &v)| self.w[a - 1] != sign * v as i32) {
            return None;
        }
        for (&a, &v) in pos.iter().zip(&vals) {
            self.slots[a - 1] = sign * v as i32;
            self.used[v] = true;
        }
        Some(pos.into_iter().zip(vals).collect())
    }

    fn unplace(&mut self, placed: &[(usize, usize)]) {
        for &(a, v) in placed {
            self.slots[a - 1] = 0;
            self.used[v] = false;
        }
    }

    fn extend(&mut self) {
        let n = self.n as u32;
        let k0 = self.t.k.last().copied().unwrap_or(0);
        let (p_hi, q_range): (u32, Vec<u32>) = match self.ty {
            WeylType::A => {
                let p_hi = self.t.p.last().copied().unwrap_or(n.saturating_sub(1));
                let q_lo = self.t.q.last().copied().unwrap_or(1);
                (p_hi, (q_lo..=n).collect())
            }
            _ => {
                let p_hi = self.t.p.last().copied().unwrap_or(n);
                let q_hi = self.t.q.last().copied().unwrap_or(n);
                (p_hi, (1..=q_hi).collect())
            }
        };
        for k in k0 + 1..=n {
            for p in 1..=p_hi {
                for &q in &q_range {
                    self.t.k.push(k);
                    self.t.p.push(p);
                    self.t.q.push(q);
                    if self.t.validate() == TripleClass::Strict {
                        if let Some(placed) = self.place((k - k0) as usize, p, q) {
                            if self.complete() {
                                self.out.push(self.t.clone());
                            }
                            self.extend();
                            self.unplace(&placed);
                        }
                    }
                    self.t.k.pop();
                    self.t.p.pop();
                    self.t.q.pop();
                }
            }
        }
    }
}

/// Every strict triple with `k_s ≤ kmax` and all `p_i, q_i ≤ pmax` (types
/// B/C/D use `p, q ≥ 1` resp. `≥ 0`; type A uses `q ≤ pmax + kmax`).
pub fn all_strict_triples(ty: WeylType, kmax: u32, pmax: u32) -> Vec<Triple> {
    let mut out = vec![Triple::empty(ty)];
    let (lo, qmax) = match ty {
        WeylType::D => (0, pmax),
        WeylType::A => (1, pmax + kmax),
        _ => (1, pmax),
    };
    let mut frontier = vec![Triple::empty(ty)];
    while let Some(t) = frontier.pop() {
        let k0 = t.k.last().copied().unwrap_or(0);
        for k in k0 + 1..=kmax {
            for p in lo..=pmax {
                for q in lo..=qmax {
                    let mut u = t.clone();
                    u.k.push(k);
                    u.p.push(p);
                    u.q.push(q);
                    if u.validate() == TripleClass::Strict {
                        out.push(u.clone());
                        frontier.push(u);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={};p={};q={};type={}", join(&self.k), join(&self.p), join(&self.q), self.ty)
    }
}

impl FromStr for Triple {
    type Err = TripleError;
    fn from_str(s: &str) -> Result<Self, TripleError> {
        let (mut k, mut p, mut q, mut ty) = (None, None, None, WeylType::C);
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, val) = field.split_once('=').ok_or_else(|| TripleError::Parse(field.to_string()))?;
            let list = || -> Result<Vec<u32>, TripleError> {
                val.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse().map_err(|_| TripleError::Parse(x.to_string())))
                    .collect()
            };
            match key.trim() {
                "k" => k = Some(list()?),
                "p" => p = Some(list()?),
                "q" => q = Some(list()?),
                "type" => ty = val.parse().map_err(|_| TripleError::Parse(val.to_string()))?,
                other => return Err(TripleError::Parse(format!("unknown field {other}"))),
            }
        }
        let missing = |n: &str| TripleError::Parse(format!("missing {n}"));
        Triple::new(k.ok_or_else(|| missing("k"))?, p.ok_or_else(|| missing("p"))?, q.ok_or_else(|| missing("q"))?, ty)
    }
}
