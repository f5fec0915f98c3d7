//! Signed permutations and the Coxeter combinatorics of types A, B/C, D.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("permutations have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("cannot parse one-line notation: {0}")]
    Parse(String),
    #[error("{0} is not a signed permutation")]
    NotAPermutation(String),
}

/// Root system type. B and C share the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylType {
    A,
    B,
    C,
    D,
}

impl WeylType {
    pub fn is_signed(self) -> bool {
        self != WeylType::A
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WeylType::A => "A",
            WeylType::B => "B",
            WeylType::C => "C",
            WeylType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for WeylType {
    type Err = WeylError;
    fn from_str(s: &str) -> Result<Self, WeylError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(WeylType::A),
            "B" => Ok(WeylType::B),
            "C" | "BC" => Ok(WeylType::C),
            "D" => Ok(WeylType::D),
            other => Err(WeylError::Parse(format!("unknown type {other}"))),
        }
    }
}

/// Simple reflections acting on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    /// `s_0`: negates the first entry (types B/C).
    S0,
    /// `s_1̂`: replaces the first two entries `a b` by `b̄ ā` (type D).
    S1Hat,
    /// `s_i`, `i ≥ 1`: swaps entries `i` and `i + 1`.
    S(u32),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S0 => f.write_str("s0"),
            Generator::S1Hat => f.write_str("s1^"),
            Generator::S(i) => write!(f, "s{i}"),
        }
    }
}

/// The simple generators of the rank-`n` group of the given type, in the
/// order used for leftmost-descent words.
pub fn generators(n: usize, ty: WeylType) -> Vec<Generator> {
    let mut g = match ty {
        WeylType::A => vec![],
        WeylType::B | WeylType::C => vec![Generator::S0],
        WeylType::D => {
            if n >= 2 {
                vec![Generator::S1Hat]
            } else {
                vec![]
            }
        }
    };
    g.extend((1..n as u32).map(Generator::S));
    g
}

/// A signed permutation in one-line notation: `values[i-1] = w(i)`, with a
/// negative value `-b` standing for `b̄`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    values: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(values: Vec<i32>) -> Result<Self, WeylError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(WeylError::NotAPermutation(format!("{values:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { values })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { values: (1..=n as i32).collect() }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// `w(i)` for `1 ≤ |i| ≤ n`, extended by `w(-i) = -w(i)` and by fixed
    /// points beyond `n`.
    pub fn apply(&self, i: i32) -> i32 {
        let a = i.unsigned_abs() as usize;
        let v = if a == 0 {
            0
        } else if a <= self.n() {
            self.values[a - 1]
        } else {
            a as i32
        };
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn barred_count(&self) -> usize {
        self.values.iter().filter(|&&v| v < 0).count()
    }

    pub fn is_unsigned(&self) -> bool {
        self.barred_count() == 0
    }

    /// Embeds into `W_m`, `m ≥ n`, by fixing `n+1, …, m`.
    pub fn embed(&self, m: usize) -> Self {
        let mut values = self.values.clone();
        values.extend((self.n() as i32 + 1)..=(m as i32));
        SignedPermutation { values }
    }

    /// Drops trailing fixed points.
    pub fn trimmed(&self) -> Self {
        let mut values = self.values.clone();
        while let Some(&v) = values.last() {
            if v == values.len() as i32 {
                values.pop();
            } else {
                break;
            }
        }
        SignedPermutation { values }
    }

    /// Smallest `m` with `w ∈ W_m`.
    pub fn min_rank(&self) -> usize {
        self.trimmed().n()
    }

    /// `(w ∘ v)(i) = w(v(i))`.
    pub fn compose(&self, v: &SignedPermutation) -> Result<Self, WeylError> {
        if self.n() != v.n() {
            return Err(WeylError::SizeMismatch(self.n(), v.n()));
        }
        Ok(SignedPermutation { values: v.values.iter().map(|&i| self.apply(i)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            values[a - 1] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPermutation { values }
    }

    /// `w · s` (acting on positions).
    pub fn times_generator(&self, g: Generator) -> Self {
        let mut v = self.values.clone();
        match g {
            Generator::S0 => v[0] = -v[0],
            Generator::S1Hat => {
                let (a, b) = (v[0], v[1]);
                v[0] = -b;
                v[1] = -a;
            }
            Generator::S(i) => v.swap(i as usize - 1, i as usize),
        }
        SignedPermutation { values: v }
    }

    /// `s · w` (acting on values).
    pub fn generator_times(&self, g: Generator) -> Self {
        self.inverse().times_generator(g).inverse()
    }

    fn inversions(&self) -> usize {
        let v = &self.values;
        let mut c = 0;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if v[i] > v[j] {
                    c += 1;
                }
            }
        }
        c
    }

    fn negative_sum_pairs(&self) -> usize {
        let v = &self.values;
        let mut c = 0;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if v[i] + v[j] < 0 {
                    c += 1;
                }
            }
        }
        c
    }

    /// Coxeter length.
    pub fn length(&self, ty: WeylType) -> usize {
        match ty {
            WeylType::A => self.inversions(),
            WeylType::B | WeylType::C => self.inversions() + self.negative_sum_pairs() + self.barred_count(),
            WeylType::D => self.inversions() + self.negative_sum_pairs(),
        }
    }

    /// Whether `ℓ(w·s) < ℓ(w)`.
    pub fn has_right_descent(&self, g: Generator) -> bool {
        let v = &self.values;
        match g {
            Generator::S0 => v[0] < 0,
            Generator::S1Hat => v[0] + v[1] < 0,
            Generator::S(i) => v[i as usize - 1] > v[i as usize],
        }
    }

    pub fn right_descents(&self, ty: WeylType) -> Vec<Generator> {
        generators(self.n(), ty).into_iter().filter(|&g| self.has_right_descent(g)).collect()
    }

    /// A reduced word `[g_1, …, g_ℓ]` with `w = g_1 ⋯ g_ℓ`, found by
    /// repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self, ty: WeylType) -> Vec<Generator> {
        let gens = generators(self.n(), ty);
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(&g) = gens.iter().find(|&&g| w.has_right_descent(g)) {
            rev.push(g);
            w = w.times_generator(g);
        }
        assert!(w.is_identity(), "descent stripping must reach the identity");
        rev.reverse();
        rev
    }

    /// Product of a word of generators, starting from the identity of `W_n`.
    pub fn from_word(n: usize, word: &[Generator]) -> Self {
        word.iter().fold(SignedPermutation::identity(n), |w, &g| w.times_generator(g))
    }

    /// `#{a ≥ p : w(a) = b̄, b ≥ q}` (weak) or `#{a > p : w(a) = b̄, b > q}`
    /// (strict).
    pub fn rank_function(&self, p: i64, q: i64, strict: bool) -> usize {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| {
                let a = i as i64 + 1;
                let b = -(v as i64);
                if strict {
                    a > p && v < 0 && b > q
                } else {
                    a >= p && v < 0 && b >= q
                }
            })
            .count()
    }

    /// Type-A rank `#{a > p : w(a) ≤ q}`.
    pub fn rank_function_a(&self, p: i64, q: i64) -> usize {
        self.values.iter().enumerate().filter(|&(i, &v)| i as i64 + 1 > p && (v as i64) <= q).count()
    }

    pub fn to_one_line(&self) -> String {
        self.values.iter().map(i32::to_string).collect::<Vec<_>>().join(" ")
    }
}

/// The longest element of `W_n`: `n … 1` (A), `1̄ … n̄` (B/C, and D for
/// even `n`), `1 2̄ … n̄` (D, odd `n`).
pub fn longest_element(n: usize, ty: WeylType) -> SignedPermutation {
    let values = match ty {
        WeylType::A => (1..=n as i32).rev().collect(),
        WeylType::B | WeylType::C => (1..=n as i32).map(|i| -i).collect(),
        WeylType::D => top_element_d(n, n.is_multiple_of(2)).values,
    };
    SignedPermutation { values }
}

/// The two maximal elements used by type D: `1̄ 2̄ … n̄` when `all_barred`,
/// otherwise `1 2̄ … n̄`. They lie in different cosets of `W(D_n)`.
pub fn top_element_d(n: usize, all_barred: bool) -> SignedPermutation {
    let values = (1..=n as i32).map(|i| if i == 1 && !all_barred { 1 } else { -i }).collect();
    SignedPermutation { values }
}

/// Every element of the group of the given type and rank, sorted.
///
/// For type D this is `W(D_n)`: an even number of barred entries.
pub fn enumerate(n: usize, ty: WeylType) -> Vec<SignedPermutation> {
    let mut perms: Vec<Vec<i32>> = vec![vec![]];
    for k in 1..=n as i32 {
        let mut next = Vec::new();
        for p in &perms {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        perms = next;
    }
    let mut out = Vec::new();
    for p in perms {
        if ty == WeylType::A {
            out.push(SignedPermutation { values: p });
            continue;
        }
        for mask in 0u32..(1 << n) {
            if ty == WeylType::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            let values = p.iter().enumerate().map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v }).collect();
            out.push(SignedPermutation { values });
        }
    }
    out.sort();
    out
}

/// Both cosets for type D (all signed permutations), other types as
/// [`enumerate`].
pub fn enumerate_with_odd_coset(n: usize, ty: WeylType) -> Vec<SignedPermutation> {
    if ty == WeylType::D {
        enumerate(n, WeylType::C)
    } else {
        enumerate(n, ty)
    }
}

impl FromStr for SignedPermutation {
    type Err = WeylError;
    fn from_str(s: &str) -> Result<Self, WeylError> {
        let values: Result<Vec<i32>, _> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| WeylError::Parse(t.to_string())))
            .collect();
        SignedPermutation::new(values?)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_one_line())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_one_line())
    }
}
