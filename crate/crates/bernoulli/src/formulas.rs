//! Alternative closed forms and number-theoretic facts for Bernoulli numbers:
//! the Gould and binomial-sum formulas, the quadratic (convolution) recurrence,
//! tangent-number integrality, and the von Staudt-Clausen theorem.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::bernoulli::bernoulli_number;
use crate::rational::{binomial, is_integer};
use crate::{Error, Result};

/// Gould's double sum:
/// `b_m = sum_{n=0}^m 1/(n+1) sum_{k=0}^n C(n,k) (-1)^k k^m`.
pub fn gould_formula(m: usize) -> Rational {
    assert!(m >= 1);
    let mut total = Rational::new();
    for n in 0..=m {
        let mut inner = Integer::new();
        for k in 1..=n {
            let term = Integer::from(k).pow(m as u32) * binomial(n as u32, k as u32);
            if k % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rational::from((inner, Integer::from(n + 1)));
    }
    total
}

/// `b_m = sum_{n=1}^m C(m,n) (-1)^n / n * sum_{k=1}^{n-1} k^m`.
pub fn binomial_sum_formula(m: usize) -> Rational {
    assert!(m >= 1);
    let mut total = Rational::new();
    for n in 1..=m {
        let mut inner = Integer::new();
        for k in 1..n {
            inner += Integer::from(k).pow(m as u32);
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        total += Rational::from((inner * binomial(m as u32, n as u32) * sign, Integer::from(n)));
    }
    total
}

/// Quadratic recurrence
/// `b_{2n} = -1/(2n+1) sum_{k=1}^{n-1} C(2n,2k) b_{2k} b_{2n-2k}` for `n >= 2`.
pub fn quadratic_recurrence_check(n: usize) -> bool {
    assert!(n >= 2);
    let mut sum = Rational::new();
    for k in 1..n {
        sum += Rational::from(binomial(2 * n as u32, 2 * k as u32))
            * bernoulli_number(2 * k)
            * bernoulli_number(2 * n - 2 * k);
    }
    bernoulli_number(2 * n) == -sum / Rational::from(2 * n as u64 + 1)
}

/// Tangent numbers `a_{2n-1} = tan^{(2n-1)}(0)` from the recurrence
/// `a_{2n+1} = sum_{k=0}^{n-1} C(2n,2k+1) a_{2k+1} a_{2(n-k)-1}`, `a_1 = 1`.
/// Returns `a_1, a_3, ..., a_{2*count-1}`.
pub fn tangent_numbers(count: usize) -> Vec<Integer> {
    let mut a = Vec::with_capacity(count);
    if count == 0 {
        return a;
    }
    a.push(Integer::from(1)); // a_1
    for n in 1..count {
        // a_{2n+1}
        let mut sum = Integer::new();
        for k in 0..n {
            sum += binomial(2 * n as u32, 2 * k as u32 + 1) * Integer::from(&a[k] * &a[n - 1 - k]);
        }
        a.push(sum);
    }
    a
}

/// Checks `2^n (2^n - 1) b_n / n` is an integer; for even `n = 2nu` also
/// cross-checks the tangent number `a_{2nu-1}` from the recurrence against
/// `2^{2nu} (2^{2nu} - 1) (-1)^{nu+1} b_{2nu} / (2nu)`.
pub fn tangent_integrality(n: usize) -> bool {
    assert!(n >= 1);
    let two_n = Rational::from(2).pow(n as i32);
    let value = two_n.clone() * (two_n - Rational::from(1)) * bernoulli_number(n)
        / Rational::from(n as u64);
    if !is_integer(&value) {
        return false;
    }
    if n % 2 == 0 {
        let nu = n / 2;
        let from_recurrence = tangent_numbers(nu).pop().expect("nu >= 1");
        let sign = if nu % 2 == 0 { -1 } else { 1 };
        let from_bernoulli = Rational::from(2).pow(n as i32)
            * (Rational::from(2).pow(n as i32) - Rational::from(1))
            * Rational::from(sign)
            * bernoulli_number(n)
            / Rational::from(n as u64);
        if Rational::from(from_recurrence) != from_bernoulli {
            return false;
        }
    }
    true
}

fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The von Staudt-Clausen prime set `p_n = { p prime : (p-1) | 2n }`,
/// found by trial division over the divisors of `2n`, sorted ascending.
pub fn von_staudt_primes(n: usize) -> Vec<u64> {
    let two_n = 2 * n as u64;
    let mut primes: Vec<u64> = (1..=two_n)
        .filter(|d| two_n % d == 0)
        .map(|d| d + 1)
        .filter(|&c| is_prime_trial(c))
        .collect();
    primes.sort_unstable();
    primes
}

/// `b_{2n} + sum_{p in p_n} 1/p`, asserted to be an integer.
pub fn von_staudt_clausen(n: usize) -> Result<(Vec<u64>, Integer)> {
    assert!(n >= 1);
    let primes = von_staudt_primes(n);
    let mut sum = bernoulli_number(2 * n);
    for &p in &primes {
        sum += Rational::from((1u64, p));
    }
    if !is_integer(&sum) {
        return Err(Error::NotInteger {
            n,
            value: sum.to_string(),
        });
    }
    Ok((primes, sum.into_numer_denom().0))
}

/// Corollary: `m (m^k - 1) b_k` is an integer for `m >= 1`, `k >= 0`.
pub fn integrality_von5(m: u64, k: usize) -> bool {
    let m_rat = Rational::from(m);
    let value = m_rat.clone() * (m_rat.pow(k as i32) - Rational::from(1)) * bernoulli_number(k);
    is_integer(&value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn gould_matches_recurrence() {
        assert_eq!(gould_formula(1), rat(-1, 2));
        assert_eq!(gould_formula(2), rat(1, 6));
        assert_eq!(gould_formula(8), rat(-1, 30));
        for m in 1..=20 {
            assert_eq!(gould_formula(m), bernoulli_number(m), "gould m={m}");
        }
    }

    #[test]
    fn binomial_sum_matches_recurrence() {
        assert_eq!(binomial_sum_formula(1), rat(-1, 2));
        assert_eq!(binomial_sum_formula(4), rat(-1, 30));
        assert_eq!(binomial_sum_formula(6), rat(1, 42));
        for m in 1..=20 {
            assert_eq!(binomial_sum_formula(m), bernoulli_number(m), "m={m}");
        }
    }

    #[test]
    fn quadratic_recurrence_cases() {
        assert!(quadratic_recurrence_check(2));
        assert!(quadratic_recurrence_check(3));
        assert!(quadratic_recurrence_check(10));
    }

    #[test]
    fn tangent_numbers_start() {
        // a_1, a_3, a_5, a_7 = 1, 2, 16, 272
        assert_eq!(tangent_numbers(4), vec![1, 2, 16, 272]);
    }

    #[test]
    fn tangent_integrality_cases() {
        assert!(tangent_integrality(2));
        assert!(tangent_integrality(4));
        assert!(tangent_integrality(12));
        for n in 1..=24 {
            assert!(tangent_integrality(n), "n={n}");
        }
    }

    #[test]
    fn von_staudt_small_cases() {
        let (p1, i1) = von_staudt_clausen(1).unwrap();
        assert_eq!(p1, vec![2, 3]);
        assert_eq!(i1, 1);
        let (p2, i2) = von_staudt_clausen(2).unwrap();
        assert_eq!(p2, vec![2, 3, 5]);
        assert_eq!(i2, 1);
        let (p6, _) = von_staudt_clausen(6).unwrap();
        assert_eq!(p6, vec![2, 3, 5, 7, 13]);
    }

    #[test]
    fn von_staudt_denominators() {
        for n in 1..=30 {
            let (primes, _) = von_staudt_clausen(n).unwrap();
            let prod: Integer = primes.iter().map(|&p| Integer::from(p)).product();
            assert_eq!(
                bernoulli_number(2 * n).denom(),
                &prod,
                "denominator of b_{}",
                2 * n
            );
        }
    }

    #[test]
    fn von5_cases() {
        assert!(integrality_von5(2, 2));
        assert!(integrality_von5(1, 9));
        assert!(integrality_von5(10, 12));
        for m in 1..=10 {
            for k in 0..=20 {
                assert!(integrality_von5(m, k), "m={m} k={k}");
            }
        }
    }
}
