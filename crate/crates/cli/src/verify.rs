//! Self-check battery behind `hywall verify`: every cross-module identity the
//! library promises, run at desk scale. `--deep` widens the parameter ranges.
//!
//! Each group reports one PASS/FAIL line; any failure makes the command exit
//! with status 1 naming the failing group.

use hywall::divisors::{enumerate_vital_curves, fold_index, intersect, make_l_alpha, VitalCurve};
use hywall::hilbert::{
    bridge_chart, bridge_standard_count, bridge_weight_closed_form, classify, mirror_mu,
    mu_alpha_bridge, mu_alpha_bridge_by_substitution, mu_alpha_tail, mu_alpha_tail_by_substitution,
    mu_bridge, mu_bridge_closed_form, mu_tail, mu_tail_closed_form, standard_monomial_weights,
    standard_monomial_weights_with_tie_break, tail_chart, tail_standard_count,
    tail_weight_closed_form, versal_weights_tail, Stability, TieBreak,
};
use hywall::poly::{Poly, Var};
use hywall::rat::{choose2, rat, rat_int, Rat};
use hywall::walls::{
    alpha_of_m, critical_alpha, discrepancy_step, hilbert_linearization, in_stability_window,
    m_of_alpha, proportionality_check, pullback_class, symmetric_git_class, wall_coefficient,
    wall_polynomial,
};

pub struct VerifyConfig {
    pub deep: bool,
    /// Negative-control hook: offsets the tail closed form by 1 so the
    /// oracle comparison must fail.
    pub perturb_tail_closed_form: bool,
}

struct Ranges {
    genus_hi: u32,
    wall_j_hi: u32,
    b_hi: u32,
    m_hi: u32,
    random_iterations: u64,
}

impl Ranges {
    fn for_config(config: &VerifyConfig) -> Self {
        if config.deep {
            Ranges {
                genus_hi: 16,
                wall_j_hi: 15,
                b_hi: 6,
                m_hi: 7,
                random_iterations: 500,
            }
        } else {
            Ranges {
                genus_hi: 10,
                wall_j_hi: 11,
                b_hi: 4,
                m_hi: 4,
                random_iterations: 200,
            }
        }
    }
}

/// Minimal deterministic PRNG (splitmix64) so repeated runs are byte-identical.
struct Rng(u64);

impl Rng {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn rat(&mut self) -> Rat {
        let num = (self.next_u64() % 2001) as i64 - 1000;
        let den = (self.next_u64() % 199) as i64 + 1;
        rat(num, den)
    }

    fn nonzero_rat(&mut self) -> Rat {
        loop {
            let r = self.rat();
            if hywall::rat::sign(&r) != 0 {
                return r;
            }
        }
    }

    fn poly(&mut self, var: Var, max_len: usize) -> Poly {
        let len = (self.next_u64() as usize) % (max_len + 1);
        Poly::new(var, (0..len).map(|_| self.rat()).collect())
    }
}

type CheckOutcome = Result<(), String>;

pub struct CheckReport {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn eq_or_err<T: PartialEq + std::fmt::Display>(got: T, expected: T, what: &str) -> CheckOutcome {
    ensure!(got == expected, "{what}: got {got}, expected {expected}");
    Ok(())
}

fn rat_field_axioms(ranges: &Ranges) -> CheckOutcome {
    let mut rng = Rng(0x517c_c1b7_2722_0a95);
    for _ in 0..ranges.random_iterations {
        let (a, b, c) = (rng.rat(), rng.rat(), rng.rat());
        ensure!(
            &a + &b == &b + &a,
            "addition is not commutative at {a}, {b}"
        );
        ensure!(
            (&a + &b) + &c == &a + &(&b + &c),
            "addition is not associative"
        );
        ensure!(
            (&a * &b) * &c == &a * &(&b * &c),
            "multiplication is not associative"
        );
        ensure!(&a * &(&b + &c) == &a * &b + &a * &c, "distributivity fails");
        let neg = -&a;
        ensure!(&a + &neg == rat_int(0), "additive inverse fails at {a}");
        let n = rng.nonzero_rat();
        ensure!(
            &n * &(rat_int(1) / &n) == rat_int(1),
            "multiplicative inverse fails at {n}"
        );
    }
    Ok(())
}

fn poly_eval_homomorphism(ranges: &Ranges) -> CheckOutcome {
    let mut rng = Rng(0x2545_f491_4f6c_dd1d);
    for _ in 0..ranges.random_iterations / 2 {
        let p = rng.poly(Var::M, 5);
        let q = rng.poly(Var::M, 5);
        let x = rng.rat();
        ensure!(
            (&p * &q).eval(&x) == p.eval(&x) * q.eval(&x),
            "poly_eval(p*q) != poly_eval(p)*poly_eval(q) at x = {x}"
        );
        ensure!(
            (&p + &q).eval(&x) == p.eval(&x) + q.eval(&x),
            "poly_eval is not additive"
        );
    }
    Ok(())
}

fn critical_values_vs_wall_roots(ranges: &Ranges) -> CheckOutcome {
    for g in 2..=ranges.genus_hi {
        for j in 3..=g + 1 {
            let poly = wall_polynomial(g, j).map_err(|e| e.to_string())?;
            let root = poly.linear_root().ok_or("wall polynomial is not linear")?;
            let closed = critical_alpha(j).map_err(|e| e.to_string())?;
            ensure!(
                root == closed,
                "root {root} != closed form {closed} at g={g} j={j}"
            );
        }
    }
    Ok(())
}

fn wall_coefficient_g_independence(ranges: &Ranges) -> CheckOutcome {
    let alpha = rat(5, 7);
    for j in 3..=ranges.wall_j_hi {
        let g0 = (j - 1).max(2);
        let reference = wall_coefficient(g0, j, &alpha).map_err(|e| e.to_string())?;
        for g in g0..=j + 5 {
            let value = wall_coefficient(g, j, &alpha).map_err(|e| e.to_string())?;
            ensure!(
                value == reference,
                "c_{j} depends on genus: {value} at g={g}"
            );
        }
    }
    Ok(())
}

fn bracket_identity(ranges: &Ranges) -> CheckOutcome {
    let c2 = |n: i64| n * (n - 1) / 2;
    let hi = if ranges.genus_hi > 10 { 25 } else { 20 };
    for j in 3..=hi {
        for a in 1..j {
            for b in 1..(j - a) {
                let lhs = c2(a + b) + c2(j - a) + c2(j - b) - c2(a) - c2(b) - c2(j - a - b);
                ensure!(lhs == c2(j), "bracket identity fails at j={j} a={a} b={b}");
            }
        }
    }
    Ok(())
}

fn extremal_ray_vanishing(ranges: &Ranges) -> CheckOutcome {
    for g in 2..=ranges.genus_hi.min(10) {
        for j in 3..=g + 1 {
            let alpha = critical_alpha(j).map_err(|e| e.to_string())?;
            let class = pullback_class(g, &alpha, j - 1).map_err(|e| e.to_string())?;
            for a in 1..j {
                for b in a..(j - a) {
                    let curve = VitalCurve::new(g, [a, b, j - a - b, 2 * g + 2 - j])
                        .map_err(|e| e.to_string())?;
                    let pairing = intersect(&class, &curve).map_err(|e| e.to_string())?;
                    ensure!(
                        pairing == rat_int(0),
                        "wall curve pairing {pairing} != 0 at g={g} j={j} a={a} b={b}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn pullback_vs_discrepancy_iteration(ranges: &Ranges) -> CheckOutcome {
    for g in 2..=ranges.genus_hi.min(10) {
        for alpha in [rat(9, 11), rat(1, 2), rat_int(3)] {
            let mut iterated = make_l_alpha(g, &alpha).map_err(|e| e.to_string())?;
            for j in 2..=g + 1 {
                if j >= 3 {
                    iterated = discrepancy_step(&iterated, j).map_err(|e| e.to_string())?;
                }
                let closed = pullback_class(g, &alpha, j).map_err(|e| e.to_string())?;
                ensure!(
                    closed == iterated,
                    "pullback mismatch at g={g} j={j} alpha={alpha}"
                );
            }
        }
    }
    Ok(())
}

fn tail_weight_closed_form_vs_oracle(ranges: &Ranges, perturb: bool) -> CheckOutcome {
    for b in 2..=ranges.b_hi {
        let tail = tail_chart(b).map_err(|e| e.to_string())?;
        for m in 1..=ranges.m_hi {
            let oracle = standard_monomial_weights(tail.chart(), tail.rho(), m)
                .map_err(|e| e.to_string())?;
            eq_or_err(
                oracle.count as i64,
                tail_standard_count(b, m).map_err(|e| e.to_string())?,
                &format!("tail standard-monomial count at b={b} m={m}"),
            )?;
            let mut closed =
                tail_weight_closed_form(b, &rat_int(i64::from(m))).map_err(|e| e.to_string())?;
            if perturb {
                closed += rat_int(1);
            }
            eq_or_err(
                rat_int(oracle.weight_sum as i64),
                closed,
                &format!("tail_weight_closed_form vs oracle weight sum at b={b} m={m}"),
            )?;
        }
    }
    Ok(())
}

fn bridge_weight_closed_form_vs_oracle(ranges: &Ranges) -> CheckOutcome {
    for b in 2..=ranges.b_hi {
        let bridge = bridge_chart(b).map_err(|e| e.to_string())?;
        for m in 1..=ranges.m_hi {
            let oracle = standard_monomial_weights(bridge.chart(), bridge.rho(), m)
                .map_err(|e| e.to_string())?;
            eq_or_err(
                oracle.count as i64,
                bridge_standard_count(b, m).map_err(|e| e.to_string())?,
                &format!("bridge standard-monomial count at b={b} m={m}"),
            )?;
            eq_or_err(
                rat_int(oracle.weight_sum as i64),
                bridge_weight_closed_form(b, &rat_int(i64::from(m))).map_err(|e| e.to_string())?,
                &format!("bridge_weight_closed_form vs oracle weight sum at b={b} m={m}"),
            )?;
        }
    }
    Ok(())
}

fn oracle_tie_break_independence(ranges: &Ranges) -> CheckOutcome {
    let m_hi = ranges.m_hi.min(4);
    for b in 2..=ranges.b_hi.min(4) {
        for m in 1..=m_hi {
            for chart in [tail_chart(b), bridge_chart(b)] {
                let chart = chart.map_err(|e| e.to_string())?;
                let lex = standard_monomial_weights_with_tie_break(
                    chart.chart(),
                    chart.rho(),
                    m,
                    TieBreak::Lex,
                )
                .map_err(|e| e.to_string())?;
                let rev = standard_monomial_weights_with_tie_break(
                    chart.chart(),
                    chart.rho(),
                    m,
                    TieBreak::RevLex,
                )
                .map_err(|e| e.to_string())?;
                ensure!(
                    lex == rev,
                    "tie-break changed the oracle output at b={b} m={m} ({:?})",
                    chart.family()
                );
            }
        }
    }
    Ok(())
}

fn mu_assembled_vs_closed_form(ranges: &Ranges) -> CheckOutcome {
    for b in 2..=ranges.b_hi {
        for m_int in 2..=i64::from(ranges.m_hi.max(5)) {
            let m = rat_int(m_int);
            let tail_closed = mu_tail_closed_form(b, &m).map_err(|e| e.to_string())?;
            for g in b + 1..=b + 6 {
                let assembled = mu_tail(g, b, &m).map_err(|e| e.to_string())?;
                ensure!(
                    assembled == tail_closed,
                    "assembled tail index {assembled} != closed form {tail_closed} at g={g} b={b} m={m}"
                );
            }
            let bridge_closed = mu_bridge_closed_form(b, &m).map_err(|e| e.to_string())?;
            for g in b + 2..=b + 7 {
                let assembled = mu_bridge(g, b, &m).map_err(|e| e.to_string())?;
                ensure!(
                    assembled == bridge_closed,
                    "assembled bridge index {assembled} != closed form {bridge_closed} at g={g} b={b} m={m}"
                );
            }
        }
    }
    Ok(())
}

fn mu_alpha_identities(ranges: &Ranges) -> CheckOutcome {
    let j_hi = if ranges.genus_hi > 10 { 15 } else { 11 };
    for j in (5..=j_hi).step_by(2) {
        let factored = mu_alpha_tail(j).map_err(|e| e.to_string())?;
        let substituted = mu_alpha_tail_by_substitution(j).map_err(|e| e.to_string())?;
        ensure!(
            factored
                .equivalent(&substituted)
                .map_err(|e| e.to_string())?,
            "tail alpha-forms disagree at j={j}"
        );
        let alpha_j = critical_alpha(j).map_err(|e| e.to_string())?;
        let at_wall = factored.eval(&alpha_j).ok_or("evaluated at pole")?;
        ensure!(at_wall == rat_int(0), "tail GIT wall is not alpha_{j}");
    }
    for j in (6..=j_hi + 1).step_by(2) {
        let factored = mu_alpha_bridge(j).map_err(|e| e.to_string())?;
        let substituted = mu_alpha_bridge_by_substitution(j).map_err(|e| e.to_string())?;
        ensure!(
            factored
                .equivalent(&substituted)
                .map_err(|e| e.to_string())?,
            "bridge alpha-forms disagree at j={j}"
        );
        let alpha_j = critical_alpha(j).map_err(|e| e.to_string())?;
        let at_wall = factored.eval(&alpha_j).ok_or("evaluated at pole")?;
        ensure!(at_wall == rat_int(0), "bridge GIT wall is not alpha_{j}");
    }
    Ok(())
}

fn wall_semistability_and_sign_schedule(ranges: &Ranges) -> CheckOutcome {
    eq_or_err(
        mu_tail(3, 2, &rat_int(6)).map_err(|e| e.to_string())?,
        rat_int(0),
        "mu_tail at m=6",
    )?;
    eq_or_err(
        mu_bridge(4, 2, &rat(9, 4)).map_err(|e| e.to_string())?,
        rat_int(0),
        "mu_bridge at m=9/4",
    )?;
    let j_hi = if ranges.genus_hi > 10 { 15 } else { 11 };
    let epsilon = rat(1, 1000);
    let mut schedule: Vec<(u32, hywall::ratfunc::RatFunc)> = Vec::new();
    for j in (5..=j_hi).step_by(2) {
        schedule.push((j, mu_alpha_tail(j).map_err(|e| e.to_string())?));
    }
    for j in (6..=j_hi + 1).step_by(2) {
        schedule.push((j, mu_alpha_bridge(j).map_err(|e| e.to_string())?));
    }
    for (j, mu_alpha) in &schedule {
        let alpha_j = critical_alpha(*j).map_err(|e| e.to_string())?;
        let above = &alpha_j + &epsilon;
        let below = &alpha_j - &epsilon;
        if !(in_stability_window(&above) && in_stability_window(&below)) {
            continue;
        }
        let mu_above = mu_alpha.eval(&above).ok_or("evaluated at pole")?;
        let mu_below = mu_alpha.eval(&below).ok_or("evaluated at pole")?;
        ensure!(
            classify(mu_above.clone()).classification == Stability::Stable,
            "not stable just above the wall at j={j}"
        );
        ensure!(
            classify(mu_below.clone()).classification == Stability::Unstable,
            "not unstable just below the wall at j={j}"
        );
        ensure!(
            classify(mirror_mu(&mu_above)).classification == Stability::Unstable,
            "mirror verdict above the wall is wrong at j={j}"
        );
        ensure!(
            classify(mirror_mu(&mu_below)).classification == Stability::Stable,
            "mirror verdict below the wall is wrong at j={j}"
        );
    }
    Ok(())
}

fn alpha_m_round_trip(ranges: &Ranges) -> CheckOutcome {
    let mut rng = Rng(0xd3c0_ffee_0000_0001);
    for _ in 0..ranges.random_iterations {
        let alpha = rng.rat();
        if alpha == rat(7, 10) {
            continue;
        }
        let m = m_of_alpha(&alpha).map_err(|e| e.to_string())?;
        if m == rat(3, 20) {
            continue;
        }
        let back = alpha_of_m(&m).map_err(|e| e.to_string())?;
        ensure!(back == alpha, "round trip broke at alpha = {alpha}");
    }
    // order preservation across the window
    let samples = [
        rat(9, 19),
        rat(1, 2),
        rat(5, 9),
        rat(3, 5),
        rat(2, 3),
        rat(69, 100),
    ];
    for pair in samples.windows(2) {
        let m0 = m_of_alpha(&pair[0]).map_err(|e| e.to_string())?;
        let m1 = m_of_alpha(&pair[1]).map_err(|e| e.to_string())?;
        ensure!(
            m0 < m1,
            "correspondence is not order preserving at {} < {}",
            pair[0],
            pair[1]
        );
        ensure!(
            m0 > rat_int(1),
            "window image left the interval (1, infinity)"
        );
    }
    Ok(())
}

fn linearization_proportionality(_: &Ranges) -> CheckOutcome {
    for m in [rat_int(2), rat_int(6), rat(9, 4), rat(100, 7), rat(7, 2)] {
        let class = hilbert_linearization(2, &m).map_err(|e| e.to_string())?;
        let alpha = alpha_of_m(&m).map_err(|e| e.to_string())?;
        // cross-multiplied form of "proportional to 13 lambda - (2 - alpha) delta"
        ensure!(
            &class.lambda_coeff * &(rat_int(2) - &alpha) == rat_int(-13) * &class.delta_coeff,
            "linearization is not proportional to the log-canonical class at m = {m}"
        );
        ensure!(
            class.lambda_coeff > rat_int(0),
            "multiple is not positive at m = {m}"
        );
    }
    Ok(())
}

fn symmetric_git_proportionality(ranges: &Ranges) -> CheckOutcome {
    for g in 2..=ranges.genus_hi {
        let sym = symmetric_git_class(g).map_err(|e| e.to_string())?;
        let binomials: Vec<Rat> = (2..=g + 1).map(choose2).collect();
        let ratio = proportionality_check(&sym, &binomials).map_err(|e| e.to_string())?;
        let expected = rat(4, 2 * i64::from(g) + 1);
        ensure!(
            ratio == Some(expected.clone()),
            "symmetric class ratio is not 4/(2g+1) at g={g}"
        );
    }
    Ok(())
}

fn vital_curve_battery(ranges: &Ranges) -> CheckOutcome {
    for g in 2..=ranges.genus_hi.min(8) {
        // enumeration vs brute-force generate-and-filter
        let n = 2 * g + 2;
        let mut expected = std::collections::BTreeSet::new();
        for a in 1..n {
            for b in a..n {
                for c in b..n {
                    if a + b + c < n && n - a - b - c >= c {
                        expected.insert([a, b, c, n - a - b - c]);
                    }
                }
            }
        }
        let got: std::collections::BTreeSet<[u32; 4]> = enumerate_vital_curves(g)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|c| c.parts())
            .collect();
        ensure!(
            got == expected,
            "vital curve enumeration disagrees with filter at g={g}"
        );

        // label independence of the pairing on the full enumeration
        let class = make_l_alpha(g, &rat(3, 5)).map_err(|e| e.to_string())?;
        for curve in enumerate_vital_curves(g).map_err(|e| e.to_string())? {
            let reference = intersect(&class, &curve).map_err(|e| e.to_string())?;
            let parts = curve.parts();
            for d_index in 0..4 {
                let others: Vec<u32> = (0..4).filter(|&i| i != d_index).map(|i| parts[i]).collect();
                let mut value = rat_int(0);
                for s in [
                    others[0] + others[1],
                    others[1] + others[2],
                    others[0] + others[2],
                ] {
                    value += class.folded_coeff(s).map_err(|e| e.to_string())?;
                }
                for p in parts {
                    value -= class.folded_coeff(p).map_err(|e| e.to_string())?;
                }
                ensure!(
                    value == reference,
                    "pairing depends on labeling at g={g} {parts:?}"
                );
            }
        }
    }
    // fold every index once per genus
    for g in 2..=ranges.genus_hi {
        for k in 0..=2 * g + 2 {
            let folded = fold_index(g, k).map_err(|e| e.to_string())?;
            ensure!(folded <= g + 1, "folded index out of range at g={g} k={k}");
        }
    }
    Ok(())
}

fn versal_weights_positive(ranges: &Ranges) -> CheckOutcome {
    for b in 2..=ranges.genus_hi {
        let weights = versal_weights_tail(b).map_err(|e| e.to_string())?;
        ensure!(
            weights.len() == 2 * b as usize,
            "versal weight count is not 2b at b={b}"
        );
        ensure!(
            weights.iter().all(|&w| w > 0),
            "non-positive versal weight at b={b}"
        );
        ensure!(
            *weights.last().unwrap() == 4,
            "smallest versal weight is not 4 at b={b}"
        );
    }
    Ok(())
}

fn final_model_proportionality(ranges: &Ranges) -> CheckOutcome {
    for g in 2..=ranges.genus_hi {
        let binomials: Vec<Rat> = (2..=g + 1).map(choose2).collect();
        for alpha in [rat(9, 11), rat(1, 2), rat_int(1)] {
            let class = pullback_class(g, &alpha, g + 1).map_err(|e| e.to_string())?;
            let ratio =
                proportionality_check(class.coeffs(), &binomials).map_err(|e| e.to_string())?;
            let r2 = class.coeff(2).map_err(|e| e.to_string())?.clone();
            ensure!(
                ratio == Some(r2),
                "final model is not a binomial multiple at g={g} alpha={alpha}"
            );
        }
    }
    Ok(())
}

pub fn run_battery(config: &VerifyConfig) -> Vec<CheckReport> {
    let ranges = Ranges::for_config(config);
    let mut reports = Vec::new();
    let mut run = |name: &'static str, outcome: CheckOutcome| {
        reports.push(CheckReport { name, outcome });
    };

    run("rat_field_axioms", rat_field_axioms(&ranges));
    run("poly_eval_homomorphism", poly_eval_homomorphism(&ranges));
    run(
        "critical_values_vs_wall_roots",
        critical_values_vs_wall_roots(&ranges),
    );
    run(
        "wall_coefficient_g_independence",
        wall_coefficient_g_independence(&ranges),
    );
    run("bracket_identity", bracket_identity(&ranges));
    run("extremal_ray_vanishing", extremal_ray_vanishing(&ranges));
    run(
        "pullback_vs_discrepancy_iteration",
        pullback_vs_discrepancy_iteration(&ranges),
    );
    run(
        "tail_weight_closed_form_vs_oracle",
        tail_weight_closed_form_vs_oracle(&ranges, config.perturb_tail_closed_form),
    );
    run(
        "bridge_weight_closed_form_vs_oracle",
        bridge_weight_closed_form_vs_oracle(&ranges),
    );
    run(
        "oracle_tie_break_independence",
        oracle_tie_break_independence(&ranges),
    );
    run(
        "mu_assembled_vs_closed_form",
        mu_assembled_vs_closed_form(&ranges),
    );
    run("mu_alpha_identities", mu_alpha_identities(&ranges));
    run(
        "wall_semistability_and_sign_schedule",
        wall_semistability_and_sign_schedule(&ranges),
    );
    run("alpha_m_round_trip", alpha_m_round_trip(&ranges));
    run(
        "linearization_proportionality",
        linearization_proportionality(&ranges),
    );
    run(
        "symmetric_git_proportionality",
        symmetric_git_proportionality(&ranges),
    );
    run("vital_curve_battery", vital_curve_battery(&ranges));
    run("versal_weights_positive", versal_weights_positive(&ranges));
    run(
        "final_model_proportionality",
        final_model_proportionality(&ranges),
    );
    reports
}
