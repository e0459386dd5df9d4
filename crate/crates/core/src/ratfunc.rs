//! Rational functions in one variable.
//!
//! A [`RatFunc`] is a quotient of two [`Poly`] values in the same variable.
//! It is deliberately *not* reduced to lowest terms: equality is decided by
//! cross-multiplication ([`RatFunc::equivalent`]), which needs no polynomial
//! gcd and is exact.

use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::{Poly, Var};
use crate::rat::Rat;
use crate::{Error, Result};

/// Quotient of polynomials; denominator is never the zero polynomial.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.var() != den.var() {
            return Err(Error::VariableMismatch {
                left: num.var(),
                right: den.var(),
            });
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::constant(p.var(), Rat::from_integer(1.into()));
        RatFunc { num: p, den }
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(var, c))
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cross-multiplied equality: `f == g` iff `f.num*g.den - g.num*f.den = 0`.
    pub fn equivalent(&self, other: &RatFunc) -> Result<bool> {
        if self.var() != other.var() {
            return Err(Error::VariableMismatch {
                left: self.var(),
                right: other.var(),
            });
        }
        let diff = &(&self.num * &other.den) - &(&other.num * &self.den);
        Ok(diff.is_zero())
    }

    /// Evaluate at `x`. `None` when `x` is a pole of this representation
    /// (the stored denominator vanishes there, whether or not the reduced
    /// function would be finite).
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    fn assert_same_var(&self, other: &RatFunc) {
        assert_eq!(
            self.var(),
            other.var(),
            "rational-function arithmetic across variables ({} vs {})",
            self.var(),
            other.var()
        );
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.assert_same_var(rhs);
        RatFunc {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.assert_same_var(rhs);
        RatFunc {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.assert_same_var(rhs);
        RatFunc {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Poly {
    /// Substitute a rational function for the variable of `self`.
    ///
    /// For `p` of degree `k` and `f = n/d`, this is Horner's rule over
    /// rational functions and yields `sum_i c_i n^i d^(k-i) / d^k` without
    /// any reduction.
    pub fn eval_at_ratfunc(&self, f: &RatFunc) -> RatFunc {
        let var = f.var();
        let mut acc = RatFunc::constant(var, Rat::from_integer(0.into()));
        for c in self.coeffs().iter().rev() {
            acc = &(&acc * f) + &RatFunc::constant(var, c.clone());
        }
        acc
    }
}
