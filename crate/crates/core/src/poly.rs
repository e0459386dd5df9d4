//! Dense univariate polynomials over the rationals, tagged by variable.
//!
//! The two variables that occur in this crate are the Hilbert-point degree
//! `m` and the log-canonical parameter `alpha`. Tagging polynomials by
//! variable catches accidental cross-variable arithmetic at the boundary
//! between the wall bookkeeping (alpha) and the stability engine (m).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rat::Rat;

/// Variable tag for [`Poly`] and [`crate::ratfunc::RatFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    M,
    Alpha,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::M => "m",
            Var::Alpha => "alpha",
        })
    }
}

/// Univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of degree `i`. Trailing zero coefficients
/// are always trimmed, so the zero polynomial has an empty coefficient list
/// and equality is plain coefficient-wise (derived) equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Poly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Poly::new(var, vec![c])
    }

    /// The polynomial `x` itself.
    pub fn variable(var: Var) -> Self {
        Poly::new(var, vec![Rat::zero(), Rat::from_integer(1.into())])
    }

    /// `c0 + c1*x`.
    pub fn linear(var: Var, c0: Rat, c1: Rat) -> Self {
        Poly::new(var, vec![c0, c1])
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of degree `i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Root of a degree-1 polynomial, `None` otherwise.
    pub fn linear_root(&self) -> Option<Rat> {
        if self.degree() == Some(1) {
            Some(-self.coeff(0) / self.coeff(1))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    fn assert_same_var(&self, other: &Poly) {
        assert_eq!(
            self.var, other.var,
            "polynomial arithmetic across variables ({} vs {})",
            self.var, other.var
        );
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.assert_same_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            self.var,
            (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_same_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            self.var,
            (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        )
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_same_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.var, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{i}", self.var)?,
            }
        }
        Ok(())
    }
}
