//! The Bernoulli cache: numbers `b_n` and monic polynomials `B_n(X)`.
//!
//! The canonical producer is the recurrence
//! `b_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) b_k`; polynomials come from
//! `B_n(X) = sum_k C(n,k) b_{n-k} X^k`. Every other formula in this crate that
//! yields a Bernoulli number is a verification path, not a producer.

use std::sync::RwLock;

use rug::ops::Pow;
use rug::Rational;

use crate::poly::RatPoly;
use crate::rational::binomial;

#[derive(Debug, Default)]
pub struct BernoulliCache {
    numbers: Vec<Rational>,
    polys: Vec<RatPoly>,
}

impl BernoulliCache {
    fn grow_numbers(&mut self, n: usize) {
        if self.numbers.is_empty() {
            self.numbers.push(Rational::from(1));
        }
        while self.numbers.len() <= n {
            let m = self.numbers.len(); // computing b_m
            let mut sum = Rational::new();
            for (k, b) in self.numbers.iter().enumerate() {
                if *b != 0 {
                    sum += b * Rational::from(binomial(m as u32 + 1, k as u32));
                }
            }
            let b_m = -sum / Rational::from(m as u64 + 1);
            self.numbers.push(b_m);
        }
    }

    fn grow_polys(&mut self, n: usize) {
        self.grow_numbers(n);
        while self.polys.len() <= n {
            let m = self.polys.len();
            let coeffs = (0..=m)
                .map(|k| {
                    Rational::from(
                        &self.numbers[m - k] * Rational::from(binomial(m as u32, k as u32)),
                    )
                })
                .collect();
            self.polys.push(RatPoly::from_coeffs(coeffs));
        }
    }
}

static CACHE: RwLock<BernoulliCache> = RwLock::new(BernoulliCache {
    numbers: Vec::new(),
    polys: Vec::new(),
});

/// `b_n = B_n(0)`, memoized. Odd `n >= 3` is exactly zero.
pub fn bernoulli_number(n: usize) -> Rational {
    if let Ok(cache) = CACHE.read() {
        if let Some(b) = cache.numbers.get(n) {
            return b.clone();
        }
    }
    let mut cache = CACHE.write().expect("bernoulli cache poisoned");
    cache.grow_numbers(n);
    cache.numbers[n].clone()
}

/// The degree-`n` monic Bernoulli polynomial `B_n(X)`, memoized.
pub fn bernoulli_polynomial(n: usize) -> RatPoly {
    if let Ok(cache) = CACHE.read() {
        if let Some(p) = cache.polys.get(n) {
            return p.clone();
        }
    }
    let mut cache = CACHE.write().expect("bernoulli cache poisoned");
    cache.grow_polys(n);
    cache.polys[n].clone()
}

/// `B_n(1/2) = (2^{1-n} - 1) b_n` (closed form, not an evaluation).
pub fn bernoulli_at_half(n: usize) -> Rational {
    let half_power = Rational::from(2).pow(1 - n as i32);
    (half_power - Rational::from(1)) * bernoulli_number(n)
}
