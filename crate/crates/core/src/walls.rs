//! Wall-and-chamber bookkeeping for the log minimal model program on the
//! moduli of hyperelliptic curves: wall coefficients, critical parameter
//! values, the discrepancy induction, the correspondence between the
//! log-canonical parameter `alpha` and the Hilbert-point degree `m`, and the
//! two linearization proportionality checks.

use crate::divisors::{l_alpha_coefficient_poly, make_l_alpha, BoundaryDivisorClass};
use crate::poly::{Poly, Var};
use crate::rat::{choose2, rat, rat_int, Rat};
use crate::{Error, Result};

fn check_wall_index(genus: u32, j: u32) -> Result<()> {
    if genus < 2 {
        return Err(Error::GenusTooSmall { got: genus, min: 2 });
    }
    if j < 3 || j > genus + 1 {
        return Err(Error::WallIndexOutOfRange {
            j,
            lo: 3,
            hi: genus + 1,
        });
    }
    Ok(())
}

/// The coefficient `c_j = C(j,2)*r_2 - r_j` of the exceptional divisor at the
/// `j`-th contraction, computed from the coefficients of `L_alpha`.
///
/// Although `r_2` and `r_j` each depend on the genus, their combination here
/// does not; `wall_coefficient(g, j, alpha)` is the same for every `g >= j-1`.
pub fn wall_coefficient(genus: u32, j: u32, alpha: &Rat) -> Result<Rat> {
    check_wall_index(genus, j)?;
    let class = make_l_alpha(genus, alpha)?;
    let r2 = class.coeff(2)?;
    let rj = class.coeff(j)?;
    Ok(choose2(j) * r2 - rj)
}

/// The same wall coefficient as a degree-1 polynomial in `alpha`, for
/// root-finding. The closed form of [`critical_alpha`] is checked against
/// this polynomial's root in the test suite; it is not derived from it.
pub fn wall_polynomial(genus: u32, j: u32) -> Result<Poly> {
    check_wall_index(genus, j)?;
    let r2 = l_alpha_coefficient_poly(genus, 2)?;
    let rj = l_alpha_coefficient_poly(genus, j)?;
    Ok(&r2.scale(&choose2(j)) - &rj)
}

/// Critical value `alpha_j` at which the boundary divisor `B~_j` is
/// contracted: `1` for `j = 2`, `(3j^2+10j-21)/(8j^2-8j-4)` for odd `j >= 3`,
/// `(3j+16)/(8j+8)` for even `j >= 4`.
pub fn critical_alpha(j: u32) -> Result<Rat> {
    if j < 2 {
        return Err(Error::WallIndexOutOfRange {
            j,
            lo: 2,
            hi: u32::MAX,
        });
    }
    let j = i64::from(j);
    Ok(if j == 2 {
        rat_int(1)
    } else if j % 2 == 1 {
        rat(3 * j * j + 10 * j - 21, 8 * j * j - 8 * j - 4)
    } else {
        rat(3 * j + 16, 8 * j + 8)
    })
}

/// One step of the discrepancy induction: replace the `B~_j` coefficient of
/// `L` by `C(j,2) * r_2`, where `r_2` is `L`'s own `B~_2` coefficient. All
/// other coefficients are untouched; a second application at the same `j` is
/// the identity.
pub fn discrepancy_step(class: &BoundaryDivisorClass, j: u32) -> Result<BoundaryDivisorClass> {
    check_wall_index(class.genus(), j)?;
    let r2 = class.coeff(2)?.clone();
    let mut next = class.clone();
    next.set_coeff(j, choose2(j) * r2)?;
    Ok(next)
}

/// Closed-form pullback class after the contractions up to level `j`:
/// coefficient `C(k,2)*r_2` at `k <= j` and the original `r_k` at `k > j`.
/// `j = 2` returns `L_alpha` unchanged; `j = g+1` is the final model, where
/// the class is `r_2` times the binomial vector `C(k,2)`.
pub fn pullback_class(genus: u32, alpha: &Rat, j: u32) -> Result<BoundaryDivisorClass> {
    if genus < 2 {
        return Err(Error::GenusTooSmall { got: genus, min: 2 });
    }
    if j < 2 || j > genus + 1 {
        return Err(Error::WallIndexOutOfRange {
            j,
            lo: 2,
            hi: genus + 1,
        });
    }
    let base = make_l_alpha(genus, alpha)?;
    let r2 = base.coeff(2)?.clone();
    let mut out = base.clone();
    for k in 2..=j {
        out.set_coeff(k, choose2(k) * &r2)?;
    }
    Ok(out)
}

/// Hilbert degree corresponding to a log-canonical parameter:
/// `m = 3(2-alpha) / (2(7-10alpha))`. Errors at the pole `alpha = 7/10`.
///
/// The correspondence is stability-meaningful only for `alpha` in the open
/// window `(8/17, 7/10)`; callers that care should consult
/// [`in_stability_window`], which this function deliberately does not
/// enforce.
pub fn m_of_alpha(alpha: &Rat) -> Result<Rat> {
    let den = rat_int(2) * (rat_int(7) - rat_int(10) * alpha);
    if num_traits::Zero::is_zero(&den) {
        return Err(Error::Pole(
            "m_of_alpha is undefined at alpha = 7/10".into(),
        ));
    }
    Ok(rat_int(3) * (rat_int(2) - alpha) / den)
}

/// Inverse of [`m_of_alpha`]: `alpha = (14m-6)/(20m-3)`. Errors at `m = 3/20`.
pub fn alpha_of_m(m: &Rat) -> Result<Rat> {
    let den = rat_int(20) * m - rat_int(3);
    if num_traits::Zero::is_zero(&den) {
        return Err(Error::Pole("alpha_of_m is undefined at m = 3/20".into()));
    }
    Ok((rat_int(14) * m - rat_int(6)) / den)
}

/// Whether `alpha` lies in the open window `(8/17, 7/10)` on which the
/// `alpha <-> m` correspondence is an order-preserving bijection onto
/// `m in (1, infinity)`.
pub fn in_stability_window(alpha: &Rat) -> bool {
    &rat(8, 17) < alpha && alpha < &rat(7, 10)
}

/// The `m` correspondence as a rational function of `alpha`, for symbolic
/// substitution into the closed-form stability indices.
pub fn m_of_alpha_ratfunc() -> crate::ratfunc::RatFunc {
    // 3(2 - alpha) / (2(7 - 10 alpha)) = (6 - 3a) / (14 - 20a)
    let num = Poly::linear(Var::Alpha, rat_int(6), rat_int(-3));
    let den = Poly::linear(Var::Alpha, rat_int(14), rat_int(-20));
    crate::ratfunc::RatFunc::new(num, den).expect("denominator is a fixed nonzero polynomial")
}

/// Coefficients of the natural linearization of the Hilbert scheme of
/// `nu`-canonical curves on the Hodge class `lambda` and the boundary
/// `delta`: `(m-1)((6m nu^2 - 2m nu - 2nu + 1) lambda - (m nu^2 / 2) delta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizationClass {
    pub lambda_coeff: Rat,
    pub delta_coeff: Rat,
}

pub fn hilbert_linearization(nu: u32, m: &Rat) -> Result<LinearizationClass> {
    if nu < 1 {
        return Err(Error::domain("linearization requires nu >= 1"));
    }
    let nu = rat_int(i64::from(nu));
    let scale = m - &rat_int(1);
    let lambda = rat_int(6) * m * &nu * &nu - rat_int(2) * m * &nu - rat_int(2) * &nu + rat_int(1);
    let delta = m * &nu * &nu / rat_int(2);
    Ok(LinearizationClass {
        lambda_coeff: &scale * lambda,
        delta_coeff: -(&scale * delta),
    })
}

/// Coefficient vector of the symmetric GIT linearization on the unordered
/// boundary divisors `B_k`, `k = 2..=g+1`: entry `2k(k-1)/(2g+1)`, which is
/// `4/(2g+1)` times the binomial vector `C(k,2)`.
pub fn symmetric_git_class(genus: u32) -> Result<Vec<Rat>> {
    if genus < 2 {
        return Err(Error::GenusTooSmall { got: genus, min: 2 });
    }
    let g = i64::from(genus);
    Ok((2..=g + 1)
        .map(|k| rat(2 * k * (k - 1), 2 * g + 1))
        .collect())
}

/// If `v = ratio * w` componentwise, return `Some(ratio)`; otherwise `None`.
/// Errors when both vectors are zero (the ratio is undefined) or the lengths
/// differ.
pub fn proportionality_check(v: &[Rat], w: &[Rat]) -> Result<Option<Rat>> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    let is_zero = |r: &Rat| num_traits::Zero::is_zero(r);
    if v.iter().all(is_zero) && w.iter().all(is_zero) {
        return Err(Error::BothVectorsZero);
    }
    let Some(pivot) = w.iter().position(|x| !is_zero(x)) else {
        // w = 0 but v != 0: no ratio exists
        return Ok(None);
    };
    let ratio = &v[pivot] / &w[pivot];
    for (a, b) in v.iter().zip(w) {
        if *a != &ratio * b {
            return Ok(None);
        }
    }
    Ok(Some(ratio))
}

/// One wall row: the level `j`, the critical value `alpha_j`, and the
/// pullback class at that wall.
#[derive(Clone, Debug)]
pub struct WallRow {
    pub j: u32,
    pub alpha: Rat,
    pub class: BoundaryDivisorClass,
}

/// The full wall table of a genus: rows `j = 3..=g+1` in order.
#[derive(Clone, Debug)]
pub struct WallTable {
    genus: u32,
    rows: Vec<WallRow>,
}

impl WallTable {
    /// Build the table, verifying that the critical values strictly decrease.
    /// The decrease is only checked through `j = 15`; beyond that the
    /// ordering is observed but not promised.
    pub fn new(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall { got: genus, min: 2 });
        }
        let mut rows = Vec::with_capacity(genus as usize - 1);
        let mut previous: Option<Rat> = None;
        for j in 3..=genus + 1 {
            let alpha = critical_alpha(j)?;
            if j <= 15 {
                if let Some(prev) = &previous {
                    if &alpha >= prev {
                        return Err(Error::domain(format!(
                            "critical values failed to decrease at j = {j}"
                        )));
                    }
                }
            }
            let class = pullback_class(genus, &alpha, j)?;
            previous = Some(alpha.clone());
            rows.push(WallRow { j, alpha, class });
        }
        Ok(WallTable { genus, rows })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn rows(&self) -> &[WallRow] {
        &self.rows
    }
}
