//! Exact polynomial identities satisfied by the Bernoulli family: defining
//! conditions, reflection/derivative/Raabe, the addition formula, the
//! monomial-to-Bernoulli basis change, power sums, the convolution identity,
//! the multiplication formula, and L^2 inner products.

use rug::ops::Pow;
use rug::Rational;

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial};
use crate::poly::RatPoly;
use crate::rational::binomial;

/// Condition (2): `B_n(X+1) - B_n(X) = n X^{n-1}` as exact polynomials.
pub fn forward_difference_check(n: usize) -> bool {
    assert!(n >= 1);
    let b = bernoulli_polynomial(n);
    let lhs = &b.shift(&Rational::from(1)) - &b;
    let rhs = RatPoly::monomial(Rational::from(n as u64), n - 1);
    lhs == rhs
}

/// `B_n(1-X) = (-1)^n B_n(X)`.
pub fn reflection_check(n: usize) -> bool {
    assert!(n >= 1);
    let b = bernoulli_polynomial(n);
    let one_minus_x = RatPoly::from_coeffs(vec![Rational::from(1), Rational::from(-1)]);
    let lhs = b.compose(&one_minus_x);
    let rhs = if n % 2 == 0 { b } else { -&b };
    lhs == rhs
}

/// `B_n'(X) = n B_{n-1}(X)`.
pub fn derivative_check(n: usize) -> bool {
    assert!(n >= 1);
    bernoulli_polynomial(n).derivative()
        == bernoulli_polynomial(n - 1).scale(&Rational::from(n as u64))
}

/// Raabe's multiplication theorem:
/// `(1/p) sum_{k<p} B_n((X+k)/p) = p^{-n} B_n(X)`.
pub fn raabe_check(n: usize, p: u32) -> bool {
    assert!(n >= 1 && p >= 1);
    let b = bernoulli_polynomial(n);
    let mut sum = RatPoly::zero();
    for k in 0..p {
        let inner = RatPoly::from_coeffs(vec![
            Rational::from((k, p)),
            Rational::from((1u32, p)),
        ]);
        sum = &sum + &b.compose(&inner);
    }
    let lhs = sum.scale(&Rational::from((1u32, p)));
    let rhs = b.scale(&Rational::from(p).pow(-(n as i32)));
    lhs == rhs
}

/// Addition formula: returns `sum_k C(n,k) B_{n-k}(X) y^k`, which must equal
/// `B_n(X + y)` exactly.
pub fn addition_formula(n: usize, y: &Rational) -> RatPoly {
    let mut sum = RatPoly::zero();
    let mut y_pow = Rational::from(1);
    for k in 0..=n {
        let c = Rational::from(binomial(n as u32, k as u32)) * &y_pow;
        sum = &sum + &bernoulli_polynomial(n - k).scale(&c);
        y_pow *= y;
    }
    sum
}

/// Coefficients `c_k = C(n+1,k)/(n+1)` with `X^n = sum_k c_k B_k(X)`.
pub fn monomial_in_bernoulli_basis(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|k| {
            Rational::from((
                binomial(n as u32 + 1, k as u32),
                rug::Integer::from(n as u32 + 1),
            ))
        })
        .collect()
}

/// Reconstructs `sum_k c_k B_k(X)` from the basis coefficients (test oracle).
pub fn reconstruct_from_bernoulli_basis(coeffs: &[Rational]) -> RatPoly {
    let mut sum = RatPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        sum = &sum + &bernoulli_polynomial(k).scale(c);
    }
    sum
}

/// `S_n(m) = 1^n + ... + m^n` via the telescoped closed form
/// `(B_{n+1}(m+1) - B_{n+1}(1)) / (n+1)`.
///
/// For `n >= 1` this agrees with the `B_{n+1}(0)` form since
/// `B_{n+1}(1) = B_{n+1}(0)`; at `n = 0` the telescoping starts at `k = 1`,
/// so `B_1(1) = 1/2` is the correct subtrahend (giving `S_0(m) = m`).
pub fn power_sum(n: usize, m: u64) -> Rational {
    assert!(m >= 1);
    let b = bernoulli_polynomial(n + 1);
    let val = b.eval(&Rational::from(m + 1)) - b.eval(&Rational::from(1));
    val / Rational::from(n as u64 + 1)
}

/// `S_n` as a polynomial in the upper limit: `(B_{n+1}(X+1) - B_{n+1}(1))/(n+1)`.
pub fn power_sum_poly(n: usize) -> RatPoly {
    let b = bernoulli_polynomial(n + 1);
    let shifted = b.shift(&Rational::from(1));
    let at_one = b.eval(&Rational::from(1));
    (&shifted - &RatPoly::constant(at_one)).scale(&Rational::from((1u64, n as u64 + 1)))
}

/// Convolution identity
/// `(1/(n+1)) sum_k B_k B_{n-k} = sum_{2k<=n} C(n,2k) b_{2k}/((k+1)(2k+1)) B_{n-2k}`
/// as exact polynomials; for even `n = 2m >= 4` additionally the scalar form
/// `sum b_{2k} b_{2m-2k} = (1/(m+1)) sum C(2m+2,2k+2) b_{2k} b_{2m-2k}`.
pub fn convolution_identity_check(n: usize) -> bool {
    let mut lhs = RatPoly::zero();
    for k in 0..=n {
        lhs = &lhs + &(&bernoulli_polynomial(k) * &bernoulli_polynomial(n - k));
    }
    let lhs = lhs.scale(&Rational::from((1u64, n as u64 + 1)));

    let mut rhs = RatPoly::zero();
    for k in 0..=n / 2 {
        let c = Rational::from(binomial(n as u32, 2 * k as u32)) * bernoulli_number(2 * k)
            / Rational::from((k as u64 + 1) * (2 * k as u64 + 1));
        rhs = &rhs + &bernoulli_polynomial(n - 2 * k).scale(&c);
    }
    if lhs != rhs {
        return false;
    }

    if n >= 4 && n % 2 == 0 {
        let m = n / 2;
        let mut plain = Rational::new();
        let mut weighted = Rational::new();
        for k in 0..=m {
            let prod = bernoulli_number(2 * k) * bernoulli_number(2 * m - 2 * k);
            weighted += Rational::from(binomial(2 * m as u32 + 2, 2 * k as u32 + 2)) * &prod;
            plain += prod;
        }
        if plain != weighted / Rational::from(m as u64 + 1) {
            return false;
        }
    }
    true
}

/// Multiplication formula at rational `w != 0`, `z`:
/// `B_n(zw) = w^n B_n(z)
///    + (1/(n+1)) sum_{j<n} C(n+1,j) B_j(z) w^{j-1} (B_{n+1-j}(w) - b_{n+1-j})`,
/// together with the derived recurrence
/// `b_n = 1/(2(1-2^n)) sum_{j<n} 2^j C(n,j) b_j`.
pub fn multiplication_formula_check(n: usize, w: &Rational, z: &Rational) -> bool {
    assert!(n >= 1);
    assert!(*w != 0, "multiplication formula needs w != 0");
    let zw = Rational::from(z * w);
    let lhs = bernoulli_polynomial(n).eval(&zw);

    let mut sum = Rational::new();
    for j in 0..n {
        let bj_z = bernoulli_polynomial(j).eval(z);
        if bj_z == 0 {
            continue;
        }
        let w_pow = w.clone().pow(j as i32 - 1);
        let tail = bernoulli_polynomial(n + 1 - j).eval(w) - bernoulli_number(n + 1 - j);
        sum += Rational::from(binomial(n as u32 + 1, j as u32)) * bj_z * w_pow * tail;
    }
    let rhs = w.clone().pow(n as i32) * bernoulli_polynomial(n).eval(z)
        + sum / Rational::from(n as u64 + 1);
    if lhs != rhs {
        return false;
    }

    // Derived recurrence (w = 2, z = 0 instance of the formula).
    let mut rec = Rational::new();
    for j in 0..n {
        rec += Rational::from(2).pow(j as i32)
            * Rational::from(binomial(n as u32, j as u32))
            * bernoulli_number(j);
    }
    let denom = Rational::from(2) * (Rational::from(1) - Rational::from(2).pow(n as i32));
    bernoulli_number(n) == rec / denom
}

/// Exact `\int_0^1 B_n B_m` by polynomial multiplication and antiderivative;
/// asserts the closed form `(-1)^{m-1} b_{n+m} / C(n+m, n)`.
pub fn l2_inner_product(n: usize, m: usize) -> Rational {
    assert!(n >= 1 && m >= 1);
    let prod = &bernoulli_polynomial(n) * &bernoulli_polynomial(m);
    let exact = prod.integral_01();
    let sign = if m % 2 == 1 { 1 } else { -1 };
    let closed = Rational::from(sign) * bernoulli_number(n + m)
        / Rational::from(binomial((n + m) as u32, n as u32));
    assert_eq!(exact, closed, "cor32 closed form for (n,m)=({n},{m})");
    exact
}

/// Coefficient `c` (exact rational) with `zeta(2n) = c * pi^{2n}`:
/// `c = (-1)^{n-1} 2^{2n-1} b_{2n} / (2n)!`.
pub fn zeta_even_coeff(n: usize) -> Rational {
    assert!(n >= 1);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    Rational::from(sign) * Rational::from(2).pow(2 * n as i32 - 1) * bernoulli_number(2 * n)
        / Rational::from(crate::rational::factorial(2 * n as u32))
}

/// Coefficient `c` with `eta(2n) = c * pi^{2n}`:
/// `c = (-1)^{n-1} (2^{2n} - 2) b_{2n} / (2 (2n)!)`.
pub fn eta_even_coeff(n: usize) -> Rational {
    assert!(n >= 1);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    Rational::from(sign)
        * (Rational::from(2).pow(2 * n as i32) - Rational::from(2))
        * bernoulli_number(2 * n)
        / (Rational::from(2) * Rational::from(crate::rational::factorial(2 * n as u32)))
}
