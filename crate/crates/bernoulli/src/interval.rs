//! Directed-rounding interval arithmetic over `rug::Float`.
//!
//! Every operation rounds the lower endpoint down and the upper endpoint up,
//! so an `Interval` built from certified inputs always contains the exact
//! result. Only the operations the enclosure layer actually needs are
//! implemented.

use std::fmt;

use rug::float::Round;
use rug::ops::{AddAssignRound, DivAssignRound, MulAssignRound, SubAssignRound};
use rug::{Float, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

impl Interval {
    pub fn new(lo: Float, hi: Float) -> Self {
        assert!(lo <= hi, "inverted interval: [{}, {}]", lo, hi);
        Self { lo, hi }
    }

    pub fn point(x: Float) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn zero(prec: u32) -> Self {
        Self::point(Float::new(prec))
    }

    /// Tightest representable enclosure of an exact rational.
    pub fn from_rational(prec: u32, q: &Rational) -> Self {
        let (lo, _) = Float::with_val_round(prec, q, Round::Down);
        let (hi, _) = Float::with_val_round(prec, q, Round::Up);
        Self { lo, hi }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    /// Upper bound on the diameter (rounded up).
    pub fn width(&self) -> Float {
        let mut w = self.hi.clone();
        w.sub_assign_round(&self.lo, Round::Up);
        w
    }

    pub fn midpoint(&self) -> Float {
        let mut m = Float::with_val(self.prec(), &self.lo + &self.hi);
        m /= 2;
        m
    }

    pub fn contains(&self, x: &Float) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        // exact comparisons: Float cmp Rational is exact in rug
        self.lo <= *q && *q <= self.hi
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        let mut lo = self.lo.clone();
        lo.add_assign_round(&rhs.lo, Round::Down);
        let mut hi = self.hi.clone();
        hi.add_assign_round(&rhs.hi, Round::Up);
        Interval { lo, hi }
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        let mut lo = self.lo.clone();
        lo.sub_assign_round(&rhs.hi, Round::Down);
        let mut hi = self.hi.clone();
        hi.sub_assign_round(&rhs.lo, Round::Up);
        Interval { lo, hi }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let prec = self.prec().max(rhs.prec());
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let mut down = Float::with_val(prec, a);
            down.mul_assign_round(b, Round::Down);
            let mut up = Float::with_val(prec, a);
            up.mul_assign_round(b, Round::Up);
            lo = Some(match lo {
                Some(l) if l <= down => l,
                _ => down,
            });
            hi = Some(match hi {
                Some(h) if h >= up => h,
                _ => up,
            });
        }
        Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        }
    }

    /// Division by an interval that does not contain zero.
    pub fn div(&self, rhs: &Interval) -> Interval {
        assert!(
            rhs.lo.is_sign_positive() && !rhs.lo.is_zero()
                || rhs.hi.is_sign_negative() && !rhs.hi.is_zero(),
            "interval division by an interval containing zero"
        );
        let prec = self.prec().max(rhs.prec());
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let mut down = Float::with_val(prec, a);
            down.div_assign_round(b, Round::Down);
            let mut up = Float::with_val(prec, a);
            up.div_assign_round(b, Round::Up);
            lo = Some(match lo {
                Some(l) if l <= down => l,
                _ => down,
            });
            hi = Some(match hi {
                Some(h) if h >= up => h,
                _ => up,
            });
        }
        Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        }
    }

    pub fn add_rational(&self, q: &Rational) -> Interval {
        self.add(&Interval::from_rational(self.prec(), q))
    }

    pub fn mul_rational(&self, q: &Rational) -> Interval {
        self.mul(&Interval::from_rational(self.prec(), q))
    }

    pub fn abs(&self) -> Interval {
        if self.lo.is_sign_negative() && self.hi.is_sign_positive() {
            let mag_lo = self.lo.clone().abs();
            let mag_hi = self.hi.clone().abs();
            Interval {
                lo: Float::new(self.prec()),
                hi: if mag_lo > mag_hi { mag_lo } else { mag_hi },
            }
        } else if self.hi.is_sign_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Natural log of a strictly positive interval (monotone, directed).
    pub fn ln(&self) -> Interval {
        assert!(self.lo.is_sign_positive() && !self.lo.is_zero(), "ln of nonpositive interval");
        let mut lo = self.lo.clone();
        lo.ln_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.ln_round(Round::Up);
        Interval { lo, hi }
    }

    /// Pads both ends outward by a nonnegative `eps`.
    pub fn widen(&self, eps: &Float) -> Interval {
        assert!(!eps.is_sign_negative());
        let mut lo = self.lo.clone();
        lo.sub_assign_round(eps, Round::Down);
        let mut hi = self.hi.clone();
        hi.add_assign_round(eps, Round::Up);
        Interval { lo, hi }
    }

    /// `x +/- r` enclosure.
    pub fn from_mid_rad(mid: &Float, rad: &Float) -> Interval {
        assert!(!rad.is_sign_negative());
        let mut lo = mid.clone();
        lo.sub_assign_round(rad, Round::Down);
        let mut hi = mid.clone();
        hi.add_assign_round(rad, Round::Up);
        Interval { lo, hi }
    }
}

/// Enclosure of `ln(q)` for a positive rational at `prec` bits.
pub fn ln_rational(prec: u32, q: &Rational) -> Interval {
    Interval::from_rational(prec, q).ln()
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn iv(prec: u32, a: &Rational, b: &Rational) -> Interval {
        Interval::new(
            Float::with_val_round(prec, a, Round::Down).0,
            Float::with_val_round(prec, b, Round::Up).0,
        )
    }

    #[test]
    fn rational_enclosure_is_tight_and_sound() {
        let q = rat(1, 3);
        let i = Interval::from_rational(64, &q);
        assert!(i.contains_rational(&q));
        assert!(i.width() <= crate::real::pow2(64, -64));
    }

    #[test]
    fn arithmetic_soundness_spot() {
        let a = rat(1, 3);
        let b = rat(-22, 7);
        let ia = Interval::from_rational(64, &a);
        let ib = Interval::from_rational(64, &b);
        let exact_sum = Rational::from(&a + &b);
        let exact_prod = Rational::from(&a * &b);
        let exact_quot = Rational::from(&a / &b);
        assert!(ia.add(&ib).contains_rational(&exact_sum));
        assert!(ia.sub(&ib).contains_rational(&Rational::from(&a - &b)));
        assert!(ia.mul(&ib).contains_rational(&exact_prod));
        assert!(ia.div(&ib).contains_rational(&exact_quot));
        assert!(ia.abs().contains_rational(&a));
    }

    #[test]
    fn mixed_sign_multiplication() {
        let i = iv(64, &rat(-2, 1), &rat(3, 1));
        let j = iv(64, &rat(-5, 1), &rat(1, 2));
        let p = i.mul(&j);
        // extremes: -2*-5=10 (hi), 3*-5=-15 (lo)
        assert!(p.contains_rational(&rat(10, 1)));
        assert!(p.contains_rational(&rat(-15, 1)));
        assert!(!p.contains_rational(&rat(11, 1)));
    }

    #[test]
    fn ln_monotone() {
        let i = ln_rational(128, &rat(2, 1));
        let true_ln2 = crate::real::ln2(256);
        assert!(i.lo() < &true_ln2 && &true_ln2 < i.hi());
    }
}
