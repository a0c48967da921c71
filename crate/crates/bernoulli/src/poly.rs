//! Dense univariate polynomials over arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Float, Rational};

/// Polynomial in one indeterminate with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `X^k`. The zero polynomial is the empty
/// coefficient list; otherwise the leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1))
    }

    /// `c * X^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::new(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// Builds a polynomial, stripping trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| *c == 0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `X^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Horner evaluation in floating point at the precision of `x`.
    pub fn eval_float(&self, x: &Float) -> Float {
        let prec = x.prec();
        let mut acc = Float::new(prec);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += Float::with_val(prec, c);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if *c == 0 {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| Rational::from(a * c)).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| Rational::from(c * Rational::from(k as u64)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Antiderivative with constant term 0.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::new()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(Rational::from(c / Rational::from((k + 1) as u64)));
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact `\int_0^1` of the polynomial.
    pub fn integral_01(&self) -> Rational {
        self.antiderivative().eval(&Rational::from(1))
    }

    /// Composition `self(g(X))` by Horner over polynomials.
    pub fn compose(&self, g: &RatPoly) -> Self {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * g;
            acc = &acc + &RatPoly::constant(c.clone());
        }
        acc
    }

    /// `self(X + y)` for a rational shift `y`.
    pub fn shift(&self, y: &Rational) -> Self {
        self.compose(&RatPoly::from_coeffs(vec![y.clone(), Rational::from(1)]))
    }

    /// Coefficients converted once to floats of precision `prec`, for
    /// repeated grid evaluation.
    pub fn float_coeffs(&self, prec: u32) -> Vec<Float> {
        self.coeffs.iter().map(|c| Float::with_val(prec, c)).collect()
    }
}

/// Horner evaluation over pre-converted float coefficients.
pub fn horner(coeffs: &[Float], x: &Float) -> Float {
    let prec = x.prec();
    let mut acc = Float::new(prec);
    for c in coeffs.iter().rev() {
        acc *= x;
        acc += c;
    }
    acc
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(Rational::from(self.coeff(k) + rhs.coeff(k)));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(Rational::from(self.coeff(k) - rhs.coeff(k)));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| Rational::from(-c.clone())).collect(),
        }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += Rational::from(a * b);
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for RatPoly {
    /// Descending powers, e.g. `X^2 - X + 1/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let mag = Rational::from(c.clone().abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag == 1;
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{mag} X")?,
                (_, true) => write!(f, "X^{k}")?,
                (_, false) => write!(f, "{mag} X^{k}")?,
            }
        }
        Ok(())
    }
}

/// `(X + a)^n` expanded exactly; handy for brute-force oracles.
pub fn binomial_power(a: &Rational, n: u32) -> RatPoly {
    let base = RatPoly::from_coeffs(vec![a.clone(), Rational::from(1)]);
    let mut acc = RatPoly::one();
    for _ in 0..n {
        acc = &acc * &base;
    }
    acc
}

/// `q^k` helper for nonnegative exponents used in expansions.
pub fn rat_pow_u(q: &Rational, k: u32) -> Rational {
    q.clone().pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    fn poly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn zero_representation() {
        let p = RatPoly::from_coeffs(vec![rat_i(0), rat_i(0)]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p.eval(&rat_i(5)), 0);
    }

    #[test]
    fn arithmetic_and_eval() {
        // (X - 1/2)(X + 2) = X^2 + 3/2 X - 1
        let a = poly(&[(-1, 2), (1, 1)]);
        let b = poly(&[(2, 1), (1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod, poly(&[(-1, 1), (3, 2), (1, 1)]));
        assert_eq!(prod.eval(&rat(1, 2)), 0); // 1/2 is a root
        assert_eq!(prod.eval(&rat_i(2)), rat_i(6));
    }

    #[test]
    fn compose_against_direct_expansion() {
        // p(X) = X^2 - X, p(X+1) = X^2 + X
        let p = poly(&[(0, 1), (-1, 1), (1, 1)]);
        let shifted = p.shift(&rat_i(1));
        assert_eq!(shifted, poly(&[(0, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn calculus_round_trip() {
        let p = poly(&[(1, 3), (0, 1), (5, 2)]);
        assert_eq!(p.antiderivative().derivative(), p);
        // \int_0^1 (1/3 + 5/2 X^2) = 1/3 + 5/6 = 7/6
        assert_eq!(p.integral_01(), rat(7, 6));
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(&[(1, 6), (-1, 1), (1, 1)]).to_string(), "X^2 - X + 1/6");
        assert_eq!(RatPoly::one().to_string(), "1");
        assert_eq!(
            poly(&[(0, 1), (1, 2), (-3, 2), (1, 1)]).to_string(),
            "X^3 - 3/2 X^2 + 1/2 X"
        );
    }
}
