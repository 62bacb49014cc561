use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::word_enum::generate::for_each_word;
use crate::word_enum::properties::has_nprime;

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `a! / b!` for `b ≤ a`.
fn falling(a: usize, b: usize) -> BigUint {
    (b + 1..=a).fold(BigUint::one(), |acc, i| acc * i)
}

/// Memoized exact values of the G, M and N recurrences.
#[derive(Default)]
pub struct CountTable {
    g: HashMap<(usize, usize), BigUint>,
    m: HashMap<(usize, usize), BigUint>,
    n: HashMap<(usize, usize), BigUint>,
}

impl CountTable {
    pub fn new() -> Self {
        CountTable::default()
    }

    /// Words with `n` matched and `m` unmatched symbols having property Q.
    pub fn g(&mut self, n: usize, m: usize) -> BigUint {
        if n == 0 {
            return BigUint::one();
        }
        if let Some(v) = self.g.get(&(n, m)) {
            return v.clone();
        }
        let mut total = if m > 0 {
            self.g(n, m - 1)
        } else {
            BigUint::zero()
        };
        for i in 0..n {
            let gi = self.g(i, 0);
            for j in 0..n - i {
                let rest = self.g(n - 1 - i - j, m + j);
                total += falling(2 * i + j, 2 * i) * binomial(m + j, j) * &gi * rest;
            }
        }
        self.g.insert((n, m), total.clone());
        total
    }

    /// `m! · G(n, m)`, by its own recurrence.
    pub fn m(&mut self, n: usize, m: usize) -> BigUint {
        if n == 0 {
            return falling(m, 0);
        }
        if let Some(v) = self.m.get(&(n, m)) {
            return v.clone();
        }
        let mut total = if m > 0 {
            self.m(n, m - 1) * m
        } else {
            BigUint::zero()
        };
        for i in 0..n {
            let mi = self.m(i, 0);
            for j in 0..n - i {
                let rest = self.m(n - 1 - i - j, m + j);
                total += binomial(2 * i + j, j) * &mi * rest;
            }
        }
        self.m.insert((n, m), total.clone());
        total
    }

    /// `M(s − t, 2t − s)`, zero outside `t ≤ s ≤ 2t`, by the recurrence in
    /// the indices `s = 2n + m`, `t = n + m`.
    pub fn n(&mut self, s: usize, t: usize) -> BigUint {
        if s < t || s > 2 * t {
            return BigUint::zero();
        }
        if s == t {
            return falling(t, 0);
        }
        if let Some(v) = self.n.get(&(s, t)) {
            return v.clone();
        }
        let mut total = if 2 * t > s {
            self.n(s - 1, t - 1) * (2 * t - s)
        } else {
            BigUint::zero()
        };
        for k in 0..s - t {
            for l in k..=2 * k {
                let i = l - k;
                if s < 2 + l || t < 1 + i {
                    continue;
                }
                let inner = self.n(2 * i, i);
                let rest = self.n(s - 2 - l, t - 1 - i);
                total += binomial(l, 2 * k - l) * inner * rest;
            }
        }
        self.n.insert((s, t), total.clone());
        total
    }
}

pub fn count_g(n: usize, m: usize) -> BigUint {
    CountTable::new().g(n, m)
}

pub fn count_m(n: usize, m: usize) -> BigUint {
    CountTable::new().m(n, m)
}

pub fn count_n(s: usize, t: usize) -> BigUint {
    CountTable::new().n(s, t)
}

/// `2 (4n+1)! / ((n+1)! (3n+2)!)`.
pub fn count_planar_loopless(n: usize) -> BigUint {
    BigUint::from(2u32) * falling(4 * n + 1, 0) / (falling(n + 1, 0) * falling(3 * n + 2, 0))
}

/// Words with `n` matched and `m` unmatched symbols having property N′,
/// by enumeration.
pub fn count_t(n: usize, m: usize) -> Result<BigUint> {
    let mut count = 0u64;
    for_each_word(n, m, |w| {
        if has_nprime(w) {
            count += 1;
        }
    })?;
    Ok(BigUint::from(count))
}
