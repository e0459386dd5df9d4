//! GIT stability engine for bicanonical curves with cuspidal tails and nodal
//! bridges.
//!
//! Each test family is given by a monomial parametrization chart for the
//! singular subcurve `R` together with a diagonal one-parameter subgroup
//! acting with the chart's t-exponents as weights. The total weight of the
//! degree-`m` monomials outside the initial ideal of `R` is computed two
//! independent ways:
//!
//! * [`standard_monomial_weights`] — a brute-force oracle that enumerates all
//!   degree-`m` monomials in weighted graded-lex order and decides membership
//!   in the initial ideal by rank elimination on restriction vectors;
//! * [`tail_weight_closed_form`] / [`bridge_weight_closed_form`] — the exact
//!   quadratic formulas the oracle must reproduce.
//!
//! On top of these sit the assembled Hilbert–Mumford indices, their closed
//! forms, and the same indices rewritten as rational functions of the
//! log-canonical parameter `alpha`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::poly::{Poly, Var};
use crate::rat::{rat, rat_int, sign, Rat};
use crate::ratfunc::RatFunc;
use crate::walls::{critical_alpha, m_of_alpha_ratfunc};
use crate::{Error, Result};

/// One component of a monomially parametrized curve: its embedding degree
/// and, per ambient chart coordinate, either the t-exponent of the restricted
/// monomial or `None` when the coordinate vanishes on the component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartComponent {
    degree: u32,
    restriction: Vec<Option<u32>>,
}

impl ChartComponent {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn restriction(&self) -> &[Option<u32>] {
        &self.restriction
    }
}

/// Monomial parametrization chart of the singular subcurve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialChart {
    num_coords: usize,
    components: Vec<ChartComponent>,
}

impl MonomialChart {
    fn new(num_coords: usize, components: Vec<ChartComponent>) -> Result<Self> {
        for comp in &components {
            if comp.restriction.len() != num_coords {
                return Err(Error::domain("component restriction length mismatch"));
            }
            let mut seen = std::collections::BTreeSet::new();
            for exp in comp.restriction.iter().flatten() {
                if *exp > comp.degree {
                    return Err(Error::domain("t-exponent exceeds component degree"));
                }
                if !seen.insert(*exp) {
                    return Err(Error::domain(
                        "restriction map is not injective on a component",
                    ));
                }
            }
        }
        for k in 0..num_coords {
            if components.iter().all(|c| c.restriction[k].is_none()) {
                return Err(Error::domain(format!(
                    "coordinate {k} vanishes on every component"
                )));
            }
        }
        Ok(MonomialChart {
            num_coords,
            components,
        })
    }

    pub fn num_coords(&self) -> usize {
        self.num_coords
    }

    pub fn components(&self) -> &[ChartComponent] {
        &self.components
    }
}

/// Diagonal one-parameter subgroup: one weight per chart coordinate plus a
/// constant weight on every external coordinate (the coordinates spanning the
/// complementary curve `D`, whose number depends on the genus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePS {
    chart_weights: Vec<u32>,
    external_weight: u32,
}

impl OnePS {
    pub fn chart_weights(&self) -> &[u32] {
        &self.chart_weights
    }

    pub fn external_weight(&self) -> u32 {
        self.external_weight
    }
}

/// Which of the two test families a chart belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Tail,
    Bridge,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Tail => "tail",
            Family::Bridge => "bridge",
        })
    }
}

/// A parametrized subcurve together with its destabilizing one-parameter
/// subgroup. Constructed by [`tail_chart`] and [`bridge_chart`].
#[derive(Clone, Debug)]
pub struct CurveChart {
    family: Family,
    b: u32,
    chart: MonomialChart,
    rho: OnePS,
}

impl CurveChart {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn chart(&self) -> &MonomialChart {
        &self.chart
    }

    pub fn rho(&self) -> &OnePS {
        &self.rho
    }

    /// Smallest genus for which the complementary curve `D` is nonempty and
    /// of positive genus.
    pub fn min_genus(&self) -> u32 {
        match self.family {
            Family::Tail => self.b + 1,
            Family::Bridge => self.b + 2,
        }
    }

    /// Number of ambient coordinates not in the chart, at genus `g`.
    /// The ambient projective space of a bicanonical genus-`g` curve has
    /// `3g-3` coordinates.
    pub fn external_coord_count(&self, genus: u32) -> Result<u32> {
        if genus < self.min_genus() {
            return Err(Error::GenusTooSmall {
                got: genus,
                min: self.min_genus(),
            });
        }
        Ok(3 * genus - 3 - self.chart.num_coords() as u32)
    }

    /// Total weight of the one-parameter subgroup at genus `g`: the sum of
    /// the chart weights plus the constant external weight on each external
    /// coordinate.
    pub fn total_weight(&self, genus: u32) -> Result<Rat> {
        let external = self.external_coord_count(genus)?;
        let chart_sum: u64 = self.rho.chart_weights.iter().map(|&w| u64::from(w)).sum();
        let total = chart_sum + u64::from(self.rho.external_weight) * u64::from(external);
        Ok(rat_int(total as i64))
    }
}

fn check_b(b: u32) -> Result<()> {
    if b < 2 {
        return Err(Error::domain(format!(
            "family parameter b must be >= 2, got {b}"
        )));
    }
    Ok(())
}

/// Check the structural property shared by both families: on every component
/// where a chart coordinate does not vanish, its weight equals its
/// t-exponent there.
fn check_weights_match_exponents(chart: &MonomialChart, rho: &OnePS) -> Result<()> {
    for comp in chart.components() {
        for (k, exp) in comp.restriction().iter().enumerate() {
            if let Some(exp) = exp {
                if rho.chart_weights[k] != *exp {
                    return Err(Error::domain(format!(
                        "weight of coordinate {k} differs from its t-exponent"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Chart and one-parameter subgroup for the genus-`b` cuspidal tail:
/// a single rational component of degree `4b-2` on `3b-1` coordinates with
/// t-exponents `0, 2, 4, ..., 2b, 2b+1, ..., 4b-2`; external weight `4b-2`.
pub fn tail_chart(b: u32) -> Result<CurveChart> {
    check_b(b)?;
    let mut exponents: Vec<u32> = (0..=b).map(|i| 2 * i).collect();
    exponents.extend(2 * b + 1..=4 * b - 2);
    let chart = MonomialChart::new(
        exponents.len(),
        vec![ChartComponent {
            degree: 4 * b - 2,
            restriction: exponents.iter().map(|&e| Some(e)).collect(),
        }],
    )?;
    let rho = OnePS {
        chart_weights: exponents,
        external_weight: 4 * b - 2,
    };
    check_weights_match_exponents(&chart, &rho)?;
    Ok(CurveChart {
        family: Family::Tail,
        b,
        chart,
        rho,
    })
}

/// Chart and one-parameter subgroup for the genus-`b` nodal bridge:
/// two rational components of degree `2b` on `3b+1` coordinates. Coordinates
/// `0..=b` live on both components with t-exponent equal to the index;
/// `b+1..=2b-1` on the first component only; `2b..=3b-2` on the second only
/// with t-exponents `b+1..=2b-1`; the last two coordinates carry `t^{2b}` on
/// the first and second component respectively. External weight `2b`.
pub fn bridge_chart(b: u32) -> Result<CurveChart> {
    check_b(b)?;
    let n = (3 * b + 1) as usize;
    let mut first = vec![None; n];
    let mut second = vec![None; n];
    let mut weights = vec![0u32; n];
    for k in 0..=b {
        first[k as usize] = Some(k);
        second[k as usize] = Some(k);
        weights[k as usize] = k;
    }
    for k in b + 1..=2 * b - 1 {
        first[k as usize] = Some(k);
        weights[k as usize] = k;
    }
    for k in 2 * b..=3 * b - 2 {
        second[k as usize] = Some(k - b + 1);
        weights[k as usize] = k - b + 1;
    }
    first[(3 * b - 1) as usize] = Some(2 * b);
    weights[(3 * b - 1) as usize] = 2 * b;
    second[(3 * b) as usize] = Some(2 * b);
    weights[(3 * b) as usize] = 2 * b;

    let chart = MonomialChart::new(
        n,
        vec![
            ChartComponent {
                degree: 2 * b,
                restriction: first,
            },
            ChartComponent {
                degree: 2 * b,
                restriction: second,
            },
        ],
    )?;
    let rho = OnePS {
        chart_weights: weights,
        external_weight: 2 * b,
    };
    check_weights_match_exponents(&chart, &rho)?;
    Ok(CurveChart {
        family: Family::Bridge,
        b,
        chart,
        rho,
    })
}

/// How equal-weight monomials are ordered when refining the weight order.
/// Any refinement yields the same standard-monomial count and weight sum;
/// offering two lets the tests demonstrate that.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Lexicographic on exponent vectors, lower-indexed coordinates more
    /// significant.
    #[default]
    Lex,
    /// Lexicographic with higher-indexed coordinates more significant.
    RevLex,
}

/// Count and total weight of the degree-`m` standard monomials (those not in
/// the initial ideal of the chart's curve under the weighted graded-lex
/// order).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardMonomialSummary {
    pub count: u64,
    pub weight_sum: u64,
}

/// Brute-force standard-monomial oracle.
///
/// Every degree-`m` monomial in the chart coordinates restricts, on each
/// component, to either zero or a single monomial `s^(me-i) t^i`; its
/// restriction vector over the basis of per-component t-exponents therefore
/// has at most one entry per component. Monomials are processed in increasing
/// weighted graded-lex order, and a monomial is standard exactly when its
/// restriction vector is linearly independent of the span of all strictly
/// smaller monomials' vectors.
pub fn standard_monomial_weights(
    chart: &MonomialChart,
    rho: &OnePS,
    m: u32,
) -> Result<StandardMonomialSummary> {
    standard_monomial_weights_with_tie_break(chart, rho, m, TieBreak::Lex)
}

/// [`standard_monomial_weights`] with an explicit tie-break order.
pub fn standard_monomial_weights_with_tie_break(
    chart: &MonomialChart,
    rho: &OnePS,
    m: u32,
    tie_break: TieBreak,
) -> Result<StandardMonomialSummary> {
    if m < 1 {
        return Err(Error::domain("oracle degree m must be >= 1"));
    }
    if rho.chart_weights.len() != chart.num_coords() {
        return Err(Error::LengthMismatch {
            left: rho.chart_weights.len(),
            right: chart.num_coords(),
        });
    }

    let mut raw = Vec::new();
    enumerate_exponents(chart.num_coords(), m, &mut Vec::new(), &mut raw);
    let mut monomials: Vec<(u64, Vec<u32>)> = raw
        .into_iter()
        .map(|exps| (monomial_weight(&exps, rho), exps))
        .collect();
    monomials.sort_by(|(wa, a), (wb, b)| {
        wa.cmp(wb).then_with(|| match tie_break {
            TieBreak::Lex => a.cmp(b),
            TieBreak::RevLex => a.iter().rev().cmp(b.iter().rev()),
        })
    });

    // basis offsets: component c occupies indices offset[c] ..= offset[c] + m*deg
    let mut offsets = Vec::with_capacity(chart.components().len());
    let mut next = 0usize;
    for comp in chart.components() {
        offsets.push(next);
        next += (u64::from(m) * u64::from(comp.degree())) as usize + 1;
    }

    let mut elim = Elimination::new();
    let mut count = 0u64;
    let mut weight_sum = 0u64;
    for (weight, exps) in &monomials {
        let row = restriction_vector(chart, exps, &offsets);
        if elim.insert_if_independent(row) {
            count += 1;
            weight_sum += weight;
        }
    }
    Ok(StandardMonomialSummary { count, weight_sum })
}

fn monomial_weight(exps: &[u32], rho: &OnePS) -> u64 {
    exps.iter()
        .zip(&rho.chart_weights)
        .map(|(&e, &w)| u64::from(e) * u64::from(w))
        .sum()
}

fn enumerate_exponents(n: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() + 1 == n {
        let mut full = prefix.clone();
        full.push(remaining);
        out.push(full);
        return;
    }
    for e in 0..=remaining {
        prefix.push(e);
        enumerate_exponents(n, remaining - e, prefix, out);
        prefix.pop();
    }
}

/// Sparse restriction vector of a monomial: for each component, either
/// nothing (the monomial vanishes there) or the basis index of the single
/// restricted t-exponent.
fn restriction_vector(chart: &MonomialChart, exps: &[u32], offsets: &[usize]) -> Vec<(usize, Rat)> {
    let mut row = Vec::new();
    'components: for (c, comp) in chart.components().iter().enumerate() {
        let mut exponent = 0u64;
        for (k, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match comp.restriction()[k] {
                None => continue 'components,
                Some(t) => exponent += u64::from(e) * u64::from(t),
            }
        }
        row.push((offsets[c] + exponent as usize, rat_int(1)));
    }
    row.sort_by_key(|&(i, _)| i);
    row
}

/// Incremental exact Gaussian elimination over sparse rational rows.
/// Restriction vectors have at most one entry per component, and reduction
/// against such pivots keeps every row that sparse, so the work per row is
/// effectively constant.
struct Elimination {
    pivots: BTreeMap<usize, Vec<(usize, Rat)>>,
}

impl Elimination {
    fn new() -> Self {
        Elimination {
            pivots: BTreeMap::new(),
        }
    }

    /// Reduce `row` against the current pivots; if a nonzero remainder is
    /// left, record it as a new pivot and report independence.
    fn insert_if_independent(&mut self, mut row: Vec<(usize, Rat)>) -> bool {
        while let Some((lead, lead_coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = subtract_scaled(&row, &lead_coeff, pivot),
                None => {
                    let inv = rat_int(1) / lead_coeff;
                    let normalized = row.iter().map(|(i, c)| (*i, c * &inv)).collect();
                    self.pivots.insert(lead, normalized);
                    return true;
                }
            }
        }
        false
    }
}

/// `row - scale * pivot`, dropping exact zeros. Both inputs are sorted by
/// index; the pivot has leading coefficient 1 at `row`'s leading index.
fn subtract_scaled(row: &[(usize, Rat)], scale: &Rat, pivot: &[(usize, Rat)]) -> Vec<(usize, Rat)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (idx, value) = if take_row {
            let v = row[i].1.clone();
            let idx = row[i].0;
            i += 1;
            (idx, v)
        } else if take_pivot {
            let v = -(scale * &pivot[j].1);
            let idx = pivot[j].0;
            j += 1;
            (idx, v)
        } else {
            let v = &row[i].1 - &(scale * &pivot[j].1);
            let idx = row[i].0;
            i += 1;
            j += 1;
            (idx, v)
        };
        if !value.is_zero() {
            out.push((idx, value));
        }
    }
    out
}

/// `w_R` for tails: `(8b^2-8b+2)m^2 + (2b-1)m - b^2`.
pub fn tail_weight_closed_form(b: u32, m: &Rat) -> Result<Rat> {
    check_b(b)?;
    let b = i64::from(b);
    Ok(Poly::new(
        Var::M,
        vec![
            rat_int(-b * b),
            rat_int(2 * b - 1),
            rat_int(8 * b * b - 8 * b + 2),
        ],
    )
    .eval(m))
}

/// `w_R` for bridges: `4b^2 m^2 + 2bm - b(b+1)/2`.
pub fn bridge_weight_closed_form(b: u32, m: &Rat) -> Result<Rat> {
    check_b(b)?;
    let b = i64::from(b);
    Ok(Poly::new(
        Var::M,
        vec![rat(-b * (b + 1), 2), rat_int(2 * b), rat_int(4 * b * b)],
    )
    .eval(m))
}

/// Number of standard monomials of the tail chart: `(4b-2)m + 1 - b`.
pub fn tail_standard_count(b: u32, m: u32) -> Result<i64> {
    check_b(b)?;
    Ok((4 * i64::from(b) - 2) * i64::from(m) + 1 - i64::from(b))
}

/// Number of standard monomials of the bridge chart: `4bm + 1 - b`.
pub fn bridge_standard_count(b: u32, m: u32) -> Result<i64> {
    check_b(b)?;
    Ok(4 * i64::from(b) * i64::from(m) + 1 - i64::from(b))
}

/// Weight contribution of the complementary curve `D` for tails:
/// `(4b-2) m ((4m-1)(g-b-1) + 2m - 1)`. Requires `g > b`.
pub fn external_weight_tail(genus: u32, b: u32, m: &Rat) -> Result<Rat> {
    check_b(b)?;
    if genus < b + 1 {
        return Err(Error::GenusTooSmall {
            got: genus,
            min: b + 1,
        });
    }
    let (g, b) = (i64::from(genus), i64::from(b));
    let sections = (rat_int(4) * m - rat_int(1)) * rat_int(g - b - 1) + rat_int(2) * m - rat_int(1);
    Ok(rat_int(4 * b - 2) * m * sections)
}

/// Weight contribution of `D` for bridges: `2bm ((4m-1)(g-b-1) - 1)`.
/// Requires `g >= b+2`.
pub fn external_weight_bridge(genus: u32, b: u32, m: &Rat) -> Result<Rat> {
    check_b(b)?;
    if genus < b + 2 {
        return Err(Error::GenusTooSmall {
            got: genus,
            min: b + 2,
        });
    }
    let (g, b) = (i64::from(genus), i64::from(b));
    let sections = (rat_int(4) * m - rat_int(1)) * rat_int(g - b - 1) - rat_int(1);
    Ok(rat_int(2 * b) * m * sections)
}

fn check_m_at_least_one(m: &Rat) -> Result<()> {
    if m < &rat_int(1) {
        return Err(Error::domain(format!(
            "Hilbert degree m must be >= 1, got {m}"
        )));
    }
    Ok(())
}

/// Average-weight term of the normalized index: `m P(m) / (N+1) * r` with
/// `P(m) = (4m-1)(g-1)` (bicanonical) and `N+1 = 3g-3`.
fn average_weight_term(genus: u32, m: &Rat, total_weight: &Rat) -> Rat {
    let g = i64::from(genus);
    let hilbert = (rat_int(4) * m - rat_int(1)) * rat_int(g - 1);
    m * hilbert / rat_int(3 * g - 3) * total_weight
}

/// Assembled Hilbert–Mumford index of a genus-`b` cuspidal tail inside a
/// genus-`g` bicanonical curve, at Hilbert degree `m`. The value is
/// independent of `g`.
pub fn mu_tail(genus: u32, b: u32, m: &Rat) -> Result<Rat> {
    check_m_at_least_one(m)?;
    let chart = tail_chart(b)?;
    let r = chart.total_weight(genus)?;
    Ok(average_weight_term(genus, m, &r)
        - tail_weight_closed_form(b, m)?
        - external_weight_tail(genus, b, m)?)
}

/// Assembled Hilbert–Mumford index of a genus-`b` nodal bridge.
pub fn mu_bridge(genus: u32, b: u32, m: &Rat) -> Result<Rat> {
    check_m_at_least_one(m)?;
    let chart = bridge_chart(b)?;
    let r = chart.total_weight(genus)?;
    Ok(average_weight_term(genus, m, &r)
        - bridge_weight_closed_form(b, m)?
        - external_weight_bridge(genus, b, m)?)
}

/// Closed form of the tail index as a polynomial in `m`:
/// `(1/3)(m-1)((4b^2-8b+2)m - 3b^2)`.
pub fn mu_tail_poly(b: u32) -> Result<Poly> {
    check_b(b)?;
    let b = i64::from(b);
    let m_minus_one = Poly::linear(Var::M, rat_int(-1), rat_int(1));
    let inner = Poly::linear(Var::M, rat_int(-3 * b * b), rat_int(4 * b * b - 8 * b + 2));
    Ok((&m_minus_one * &inner).scale(&rat(1, 3)))
}

/// Closed form of the bridge index as a polynomial in `m`:
/// `(1/6)(m-1)(4b(b-1)m - 3b(b+1))`.
pub fn mu_bridge_poly(b: u32) -> Result<Poly> {
    check_b(b)?;
    let b = i64::from(b);
    let m_minus_one = Poly::linear(Var::M, rat_int(-1), rat_int(1));
    let inner = Poly::linear(Var::M, rat_int(-3 * b * (b + 1)), rat_int(4 * b * (b - 1)));
    Ok((&m_minus_one * &inner).scale(&rat(1, 6)))
}

pub fn mu_tail_closed_form(b: u32, m: &Rat) -> Result<Rat> {
    Ok(mu_tail_poly(b)?.eval(m))
}

pub fn mu_bridge_closed_form(b: u32, m: &Rat) -> Result<Rat> {
    Ok(mu_bridge_poly(b)?.eval(m))
}

fn check_tail_level(j: u32) -> Result<u32> {
    if j < 5 || j.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "tail level must be odd and >= 5 (j = 2b+1 with b >= 2), got {j}"
        )));
    }
    Ok((j - 1) / 2)
}

fn check_bridge_level(j: u32) -> Result<u32> {
    if j < 6 || j % 2 == 1 {
        return Err(Error::domain(format!(
            "bridge level must be even and >= 6 (j = 2b+2 with b >= 2), got {j}"
        )));
    }
    Ok((j - 2) / 2)
}

/// Tail index as a rational function of `alpha`, in the factored form
/// `(8j^2-8j-4)(17a-8) / (8(7-10a)^2) * (a - alpha_j)` with `j = 2b+1`.
pub fn mu_alpha_tail(j: u32) -> Result<RatFunc> {
    check_tail_level(j)?;
    let jj = i64::from(j);
    let lead = Poly::constant(Var::Alpha, rat_int(8 * jj * jj - 8 * jj - 4));
    mu_alpha_factored(lead, j, rat_int(8))
}

/// Bridge index as a rational function of `alpha`:
/// `(j^2-j-2)(17a-8) / (2(7-10a)^2) * (a - alpha_j)` with `j = 2b+2`.
pub fn mu_alpha_bridge(j: u32) -> Result<RatFunc> {
    check_bridge_level(j)?;
    let jj = i64::from(j);
    let lead = Poly::constant(Var::Alpha, rat_int(jj * jj - jj - 2));
    mu_alpha_factored(lead, j, rat_int(2))
}

fn mu_alpha_factored(lead: Poly, j: u32, den_scale: Rat) -> Result<RatFunc> {
    let seventeen_alpha = Poly::linear(Var::Alpha, rat_int(-8), rat_int(17));
    let root_factor = Poly::linear(Var::Alpha, -critical_alpha(j)?, rat_int(1));
    let num = &(&lead * &seventeen_alpha) * &root_factor;
    let pole = Poly::linear(Var::Alpha, rat_int(7), rat_int(-10));
    let den = (&pole * &pole).scale(&den_scale);
    RatFunc::new(num, den)
}

/// Independent route to the tail `alpha`-form: substitute the symbolic
/// `m(alpha)` correspondence into the closed `m`-form.
pub fn mu_alpha_tail_by_substitution(j: u32) -> Result<RatFunc> {
    let b = check_tail_level(j)?;
    Ok(mu_tail_poly(b)?.eval_at_ratfunc(&m_of_alpha_ratfunc()))
}

/// Independent route to the bridge `alpha`-form.
pub fn mu_alpha_bridge_by_substitution(j: u32) -> Result<RatFunc> {
    let b = check_bridge_level(j)?;
    Ok(mu_bridge_poly(b)?.eval_at_ratfunc(&m_of_alpha_ratfunc()))
}

/// Sign classification of a Hilbert–Mumford index: positive means the tested
/// one-parameter subgroup does not destabilize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Stability {
    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::StrictlySemistable => "strictly_semistable",
            Stability::Unstable => "unstable",
        }
    }
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An index value together with its sign classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub mu: Rat,
    pub classification: Stability,
}

pub fn classify(mu: Rat) -> StabilityVerdict {
    let classification = match sign(&mu) {
        1 => Stability::Stable,
        0 => Stability::StrictlySemistable,
        _ => Stability::Unstable,
    };
    StabilityVerdict { mu, classification }
}

/// Index of the curve on the other side of the basin of attraction: the
/// curve with the subcurve replaced by the corresponding singularity has the
/// negated index.
pub fn mirror_mu(mu: &Rat) -> Rat {
    -mu
}

/// Weights of the one-parameter subgroup on the coefficients of the local
/// versal deformation of the tail's cusp: `4b+2-2i` for `i = 0..=2b-1`.
/// All weights are strictly positive, so the basin of attraction contains
/// every smoothing of the cusp.
pub fn versal_weights_tail(b: u32) -> Result<Vec<u32>> {
    check_b(b)?;
    Ok((0..2 * b).map(|i| 4 * b + 2 - 2 * i).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walls::alpha_of_m;

    #[test]
    fn tail_chart_b2() {
        let tail = tail_chart(2).unwrap();
        assert_eq!(tail.chart().num_coords(), 5);
        let comp = &tail.chart().components()[0];
        assert_eq!(comp.degree(), 6);
        let exps: Vec<u32> = comp.restriction().iter().map(|e| e.unwrap()).collect();
        assert_eq!(exps, vec![0, 2, 4, 5, 6]);
        assert_eq!(tail.rho().chart_weights(), &[0, 2, 4, 5, 6]);
        assert_eq!(tail.rho().external_weight(), 6);
        // r = 21 - 4 + 6*(3g - 8) at g = 3
        assert_eq!(tail.total_weight(3).unwrap(), rat_int(23));
        assert!(tail.total_weight(2).is_err());
        assert!(tail_chart(1).is_err());
    }

    #[test]
    fn tail_total_weight_matches_displayed_formula() {
        for b in 2..=6u32 {
            let tail = tail_chart(b).unwrap();
            for g in b + 1..=b + 6 {
                let (bb, gg) = (i64::from(b), i64::from(g));
                let expected = rat_int(
                    (4 * bb - 1) * (4 * bb - 2) / 2 - bb * bb
                        + (4 * bb - 2) * (3 * gg - 3 * bb - 2),
                );
                assert_eq!(tail.total_weight(g).unwrap(), expected, "b={b} g={g}");
            }
        }
    }

    #[test]
    fn tail_weight_list_sum_identity() {
        // b(b+1) + C(4b-1,2) - C(2b+1,2) = C(4b-1,2) - b^2
        for b in 2..=8i64 {
            let lhs = b * (b + 1) + (4 * b - 1) * (4 * b - 2) / 2 - (2 * b + 1) * (2 * b) / 2;
            let rhs = (4 * b - 1) * (4 * b - 2) / 2 - b * b;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bridge_chart_b2() {
        let bridge = bridge_chart(2).unwrap();
        assert_eq!(bridge.chart().num_coords(), 7);
        assert_eq!(bridge.rho().chart_weights(), &[0, 1, 2, 3, 3, 4, 4]);
        assert_eq!(bridge.rho().external_weight(), 4);
        // r = 10 + 3 + 4 + 4*(3g - 10) at g = 4
        assert_eq!(bridge.total_weight(4).unwrap(), rat_int(25));
        assert!(bridge.total_weight(3).is_err());
        assert!(bridge_chart(1).is_err());
        // per-component support straight off the coordinate table
        let nonvanishing: Vec<usize> = bridge
            .chart()
            .components()
            .iter()
            .map(|c| c.restriction().iter().flatten().count())
            .collect();
        assert_eq!(nonvanishing, vec![5, 5]);
    }

    #[test]
    fn bridge_total_weight_matches_displayed_formula() {
        for b in 2..=6u32 {
            let bridge = bridge_chart(b).unwrap();
            for g in b + 2..=b + 6 {
                let (bb, gg) = (i64::from(b), i64::from(g));
                let expected = rat_int(
                    (2 * bb + 1) * (2 * bb) / 2
                        + (bb + 1) * bb / 2
                        + bb * bb
                        + 2 * bb * (3 * gg - 3 * bb - 4),
                );
                assert_eq!(bridge.total_weight(g).unwrap(), expected, "b={b} g={g}");
            }
        }
    }

    #[test]
    fn oracle_tail_b2_small_degrees() {
        let tail = tail_chart(2).unwrap();
        let m1 = standard_monomial_weights(tail.chart(), tail.rho(), 1).unwrap();
        assert_eq!(
            m1,
            StandardMonomialSummary {
                count: 5,
                weight_sum: 17
            }
        );
        let m2 = standard_monomial_weights(tail.chart(), tail.rho(), 2).unwrap();
        assert_eq!(
            m2,
            StandardMonomialSummary {
                count: 11,
                weight_sum: 74
            }
        );
    }

    #[test]
    fn oracle_bridge_b2_small_degrees() {
        let bridge = bridge_chart(2).unwrap();
        let m1 = standard_monomial_weights(bridge.chart(), bridge.rho(), 1).unwrap();
        assert_eq!(
            m1,
            StandardMonomialSummary {
                count: 7,
                weight_sum: 17
            }
        );
        let m2 = standard_monomial_weights(bridge.chart(), bridge.rho(), 2).unwrap();
        assert_eq!(
            m2,
            StandardMonomialSummary {
                count: 15,
                weight_sum: 69
            }
        );
    }

    #[test]
    fn oracle_rejects_degree_zero() {
        let tail = tail_chart(2).unwrap();
        assert!(standard_monomial_weights(tail.chart(), tail.rho(), 0).is_err());
    }

    #[test]
    fn closed_forms_match_spot_values() {
        assert_eq!(
            tail_weight_closed_form(2, &rat_int(2)).unwrap(),
            rat_int(74)
        );
        assert_eq!(
            tail_weight_closed_form(2, &rat_int(1)).unwrap(),
            rat_int(17)
        );
        assert_eq!(
            bridge_weight_closed_form(2, &rat_int(2)).unwrap(),
            rat_int(69)
        );
        assert_eq!(
            bridge_weight_closed_form(2, &rat_int(3)).unwrap(),
            rat_int(153)
        );
    }

    #[test]
    fn oracle_agrees_with_closed_forms() {
        for b in 2..=4u32 {
            let tail = tail_chart(b).unwrap();
            let bridge = bridge_chart(b).unwrap();
            for m in 1..=4u32 {
                let t = standard_monomial_weights(tail.chart(), tail.rho(), m).unwrap();
                assert_eq!(
                    t.count as i64,
                    tail_standard_count(b, m).unwrap(),
                    "tail b={b} m={m}"
                );
                assert_eq!(
                    rat_int(t.weight_sum as i64),
                    tail_weight_closed_form(b, &rat_int(i64::from(m))).unwrap(),
                    "tail b={b} m={m}"
                );
                let s = standard_monomial_weights(bridge.chart(), bridge.rho(), m).unwrap();
                assert_eq!(
                    s.count as i64,
                    bridge_standard_count(b, m).unwrap(),
                    "bridge b={b} m={m}"
                );
                assert_eq!(
                    rat_int(s.weight_sum as i64),
                    bridge_weight_closed_form(b, &rat_int(i64::from(m))).unwrap(),
                    "bridge b={b} m={m}"
                );
            }
        }
    }

    #[test]
    fn oracle_is_tie_break_independent() {
        for b in 2..=3u32 {
            for m in 1..=3u32 {
                for chart in [tail_chart(b).unwrap(), bridge_chart(b).unwrap()] {
                    let lex = standard_monomial_weights_with_tie_break(
                        chart.chart(),
                        chart.rho(),
                        m,
                        TieBreak::Lex,
                    )
                    .unwrap();
                    let rev = standard_monomial_weights_with_tie_break(
                        chart.chart(),
                        chart.rho(),
                        m,
                        TieBreak::RevLex,
                    )
                    .unwrap();
                    assert_eq!(lex, rev, "b={b} m={m} {:?}", chart.family());
                }
            }
        }
    }

    #[test]
    fn monomial_weight_equals_restriction_exponent() {
        // exhaustive for small b, m: wherever a monomial does not vanish,
        // its weight equals the exponent of its restriction
        for chart in [
            tail_chart(2).unwrap(),
            bridge_chart(2).unwrap(),
            bridge_chart(3).unwrap(),
        ] {
            for m in 1..=3u32 {
                let mut monomials = Vec::new();
                enumerate_exponents(
                    chart.chart().num_coords(),
                    m,
                    &mut Vec::new(),
                    &mut monomials,
                );
                for exps in &monomials {
                    let w = monomial_weight(exps, chart.rho());
                    for comp in chart.chart().components() {
                        let mut vanishes = false;
                        let mut exponent = 0u64;
                        for (k, &e) in exps.iter().enumerate() {
                            if e == 0 {
                                continue;
                            }
                            match comp.restriction()[k] {
                                None => vanishes = true,
                                Some(t) => exponent += u64::from(e) * u64::from(t),
                            }
                        }
                        if !vanishes {
                            assert_eq!(w, exponent);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn external_weight_examples() {
        assert_eq!(
            external_weight_tail(3, 2, &rat_int(2)).unwrap(),
            rat_int(36)
        );
        assert_eq!(
            external_weight_bridge(4, 2, &rat_int(3)).unwrap(),
            rat_int(120)
        );
        assert!(external_weight_tail(2, 2, &rat_int(2)).is_err());
        assert!(external_weight_bridge(3, 2, &rat_int(2)).is_err());
    }

    #[test]
    fn section_counts_telescope_to_ambient_hilbert_polynomial() {
        // standard count + external section count = (4m-1)(g-1)
        for b in 2..=5i64 {
            for m in 2..=5i64 {
                for g in (b + 2)..=(b + 6) {
                    let tail = tail_standard_count(b as u32, m as u32).unwrap()
                        + ((4 * m - 1) * (g - b - 1) + 2 * m - 1);
                    assert_eq!(tail, (4 * m - 1) * (g - 1));
                    let bridge = bridge_standard_count(b as u32, m as u32).unwrap()
                        + ((4 * m - 1) * (g - b - 1) - 1);
                    assert_eq!(bridge, (4 * m - 1) * (g - 1));
                }
            }
        }
    }

    #[test]
    fn mu_tail_examples() {
        // full assembly at g=3, b=2, m=2: 322/3 - 74 - 36 = -8/3
        assert_eq!(mu_tail(3, 2, &rat_int(2)).unwrap(), rat(-8, 3));
        // the alpha = 2/3 wall: m = 6 gives exactly 0 for every admissible genus
        for g in 3..=9 {
            assert_eq!(mu_tail(g, 2, &rat_int(6)).unwrap(), rat_int(0), "g={g}");
        }
    }

    #[test]
    fn mu_bridge_examples() {
        // 275 - 153 - 120 = 2
        assert_eq!(mu_bridge(4, 2, &rat_int(3)).unwrap(), rat_int(2));
        // the alpha = 17/28 wall: m = 9/4
        assert_eq!(mu_bridge(4, 2, &rat(9, 4)).unwrap(), rat_int(0));
    }

    #[test]
    fn assembled_index_matches_closed_form_and_is_genus_independent() {
        for b in 2..=4u32 {
            for m_int in 2..=5i64 {
                let m = rat_int(m_int);
                let tail_expected = mu_tail_closed_form(b, &m).unwrap();
                for g in b + 1..=b + 6 {
                    assert_eq!(
                        mu_tail(g, b, &m).unwrap(),
                        tail_expected,
                        "tail b={b} m={m} g={g}"
                    );
                }
                let bridge_expected = mu_bridge_closed_form(b, &m).unwrap();
                for g in b + 2..=b + 6 {
                    assert_eq!(
                        mu_bridge(g, b, &m).unwrap(),
                        bridge_expected,
                        "bridge b={b} m={m} g={g}"
                    );
                }
            }
        }
    }

    #[test]
    fn mu_domain_errors() {
        assert!(mu_tail(2, 1, &rat_int(2)).is_err());
        assert!(mu_tail(2, 2, &rat_int(2)).is_err());
        assert!(mu_bridge(3, 2, &rat_int(2)).is_err());
        assert!(mu_tail(3, 2, &rat(1, 2)).is_err());
    }

    #[test]
    fn alpha_form_matches_substitution_route() {
        for j in (5..=15u32).step_by(2) {
            let factored = mu_alpha_tail(j).unwrap();
            let substituted = mu_alpha_tail_by_substitution(j).unwrap();
            assert!(factored.equivalent(&substituted).unwrap(), "tail j={j}");
        }
        for j in (6..=14u32).step_by(2) {
            let factored = mu_alpha_bridge(j).unwrap();
            let substituted = mu_alpha_bridge_by_substitution(j).unwrap();
            assert!(factored.equivalent(&substituted).unwrap(), "bridge j={j}");
        }
    }

    #[test]
    fn alpha_form_values() {
        let tail5 = mu_alpha_tail(5).unwrap();
        assert_eq!(tail5.eval(&rat(2, 3)).unwrap(), rat_int(0));
        // alpha_of_m(2) = 22/37, and mu_tail(.,2,2) = -8/3
        assert_eq!(alpha_of_m(&rat_int(2)).unwrap(), rat(22, 37));
        assert_eq!(tail5.eval(&rat(22, 37)).unwrap(), rat(-8, 3));

        let bridge6 = mu_alpha_bridge(6).unwrap();
        assert_eq!(bridge6.eval(&rat(17, 28)).unwrap(), rat_int(0));
    }

    #[test]
    fn alpha_form_parity_errors() {
        assert!(mu_alpha_tail(4).is_err());
        assert!(mu_alpha_tail(3).is_err());
        assert!(mu_alpha_bridge(5).is_err());
        assert!(mu_alpha_bridge(4).is_err());
    }

    #[test]
    fn classification_trichotomy() {
        assert_eq!(classify(rat_int(2)).classification, Stability::Stable);
        assert_eq!(
            classify(rat_int(0)).classification,
            Stability::StrictlySemistable
        );
        assert_eq!(classify(rat(-8, 3)).classification, Stability::Unstable);
    }

    #[test]
    fn mirror_negates() {
        assert_eq!(mirror_mu(&rat_int(0)), rat_int(0));
        assert_eq!(mirror_mu(&rat(-8, 3)), rat(8, 3));
        let verdict = classify(mirror_mu(&mu_bridge(4, 2, &rat_int(3)).unwrap()));
        assert_eq!(verdict.classification, Stability::Unstable);
    }

    #[test]
    fn sign_schedule_around_each_wall() {
        // just above a wall the index is positive, just below it is negative,
        // and the mirrored curve gets the opposite verdict; only sample
        // points inside the stability window are asserted
        let epsilon = rat(1, 1000);
        let mut forms = Vec::new();
        for j in (5..=15u32).step_by(2) {
            forms.push((j, mu_alpha_tail(j).unwrap()));
        }
        for j in (6..=14u32).step_by(2) {
            forms.push((j, mu_alpha_bridge(j).unwrap()));
        }
        for (j, mu_alpha) in forms {
            let alpha_j = critical_alpha(j).unwrap();
            let above = &alpha_j + &epsilon;
            let below = &alpha_j - &epsilon;
            if !(crate::walls::in_stability_window(&above)
                && crate::walls::in_stability_window(&below))
            {
                continue;
            }
            let mu_above = mu_alpha.eval(&above).unwrap();
            let mu_below = mu_alpha.eval(&below).unwrap();
            assert_eq!(
                classify(mu_above.clone()).classification,
                Stability::Stable,
                "j={j}"
            );
            assert_eq!(
                classify(mu_below.clone()).classification,
                Stability::Unstable,
                "j={j}"
            );
            assert_eq!(
                classify(mirror_mu(&mu_above)).classification,
                Stability::Unstable,
                "mirror j={j}"
            );
            assert_eq!(
                classify(mirror_mu(&mu_below)).classification,
                Stability::Stable,
                "mirror j={j}"
            );
            assert_eq!(
                classify(mu_alpha.eval(&alpha_j).unwrap()).classification,
                Stability::StrictlySemistable,
                "wall j={j}"
            );
        }
    }

    #[test]
    fn versal_weights() {
        assert_eq!(versal_weights_tail(2).unwrap(), vec![10, 8, 6, 4]);
        for b in 2..=10u32 {
            let weights = versal_weights_tail(b).unwrap();
            assert_eq!(weights.len(), (2 * b) as usize);
            assert_eq!(*weights.last().unwrap(), 4);
            assert!(weights.iter().all(|&w| w > 0));
        }
        assert!(versal_weights_tail(1).is_err());
    }
}
