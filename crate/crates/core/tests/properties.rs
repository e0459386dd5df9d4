//! Property tests for the algebraic invariants: rational field axioms,
//! polynomial evaluation as a ring homomorphism, cross-multiplied equality as
//! an equivalence relation, and the symmetry/linearity of the intersection
//! pairing.

use hywall::divisors::{
    enumerate_vital_curves, fold_index, intersect, BoundaryDivisorClass, VitalCurve,
};
use hywall::poly::{Poly, Var};
use hywall::rat::{rat, rat_int, Rat};
use hywall::ratfunc::RatFunc;
use num_traits::Zero;
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-1000i64..1000, 1i64..200).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    arb_rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn arb_poly(var: Var) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(arb_rat(), 0..6).prop_map(move |cs| Poly::new(var, cs))
}

fn nonzero_poly(var: Var) -> impl Strategy<Value = Poly> {
    arb_poly(var).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn rat_field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &Rat::zero(), a.clone());
        prop_assert_eq!(&a - &a, Rat::zero());
    }

    #[test]
    fn rat_multiplicative_inverse(a in nonzero_rat()) {
        prop_assert_eq!(&a * &(rat_int(1) / &a), rat_int(1));
    }

    #[test]
    fn poly_eval_is_multiplicative(p in arb_poly(Var::M), q in arb_poly(Var::M), x in arb_rat()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn ratfunc_equivalence_relation(
        n in arb_poly(Var::Alpha),
        d in nonzero_poly(Var::Alpha),
        s in nonzero_poly(Var::Alpha),
        other_n in arb_poly(Var::Alpha),
    ) {
        let f = RatFunc::new(n.clone(), d.clone()).unwrap();
        // reflexive
        prop_assert!(f.equivalent(&f).unwrap());
        // scaling numerator and denominator by a common polynomial is invisible
        let g = RatFunc::new(&n * &s, &d * &s).unwrap();
        prop_assert!(f.equivalent(&g).unwrap());
        prop_assert!(g.equivalent(&f).unwrap());
        // transitivity through a third equal representative
        let h = RatFunc::new(&(&n * &s) * &s, &(&d * &s) * &s).unwrap();
        prop_assert!(g.equivalent(&h).unwrap());
        prop_assert!(f.equivalent(&h).unwrap());
        // and a genuinely different function compares unequal unless it matches
        let other = RatFunc::new(other_n.clone(), d.clone()).unwrap();
        let same = f.equivalent(&other).unwrap();
        prop_assert_eq!(same, other_n == n);
    }
}

fn arb_parts(genus: u32) -> impl Strategy<Value = [u32; 4]> {
    let n = 2 * genus + 2;
    (1u32..8, 1u32..8, 1u32..8).prop_map(move |(a, b, c)| {
        // clamp the three free parts so a positive fourth remains
        let a = a.min(n - 3);
        let b = b.min(n - a - 2);
        let c = c.min(n - a - b - 1);
        [a, b, c, n - a - b - c]
    })
}

fn arb_vital_curve() -> impl Strategy<Value = (u32, [u32; 4])> {
    (2u32..9).prop_flat_map(|g| (Just(g), arb_parts(g)))
}

fn arb_class(genus: u32) -> impl Strategy<Value = BoundaryDivisorClass> {
    proptest::collection::vec(arb_rat(), genus as usize..=genus as usize)
        .prop_map(move |cs| BoundaryDivisorClass::new(genus, cs).unwrap())
}

/// The pairing formula with an explicit choice of which part plays `d`.
fn pairing_with_label(class: &BoundaryDivisorClass, parts: [u32; 4], d_index: usize) -> Rat {
    let others: Vec<u32> = (0..4).filter(|&i| i != d_index).map(|i| parts[i]).collect();
    let (a, b, c) = (others[0], others[1], others[2]);
    let mut total = Rat::zero();
    for s in [a + b, b + c, a + c] {
        total += class.folded_coeff(s).unwrap();
    }
    for p in parts {
        total -= class.folded_coeff(p).unwrap();
    }
    total
}

proptest! {
    #[test]
    fn intersection_is_label_independent((g, parts) in arb_vital_curve(), seed in proptest::array::uniform4(-50i64..50)) {
        let coeffs: Vec<Rat> = (0..g).map(|i| rat(seed[(i % 4) as usize], 7)).collect();
        let class = BoundaryDivisorClass::new(g, coeffs).unwrap();
        let curve = VitalCurve::new(g, parts).unwrap();
        let reference = intersect(&class, &curve).unwrap();
        for d_index in 0..4 {
            prop_assert_eq!(pairing_with_label(&class, parts, d_index), reference.clone());
        }
    }

    #[test]
    fn intersection_is_linear(
        (g, parts, d1, d2) in (2u32..9)
            .prop_flat_map(|g| (Just(g), arb_parts(g), arb_class(g), arb_class(g))),
        scale in arb_rat(),
    ) {
        let curve = VitalCurve::new(g, parts).unwrap();
        let pair = |class: &BoundaryDivisorClass| intersect(class, &curve).unwrap();
        prop_assert_eq!(pair(&(&d1 + &d2)), pair(&d1) + pair(&d2));
        prop_assert_eq!(pair(&d1.scale(&scale)), scale * pair(&d1));
    }

    #[test]
    fn fold_index_is_idempotent_and_bounded(g in 2u32..12, k in 0u32..40) {
        let n = 2 * g + 2;
        if k > n {
            prop_assert!(fold_index(g, k).is_err());
        } else {
            let folded = fold_index(g, k).unwrap();
            prop_assert!(folded <= g + 1);
            prop_assert_eq!(fold_index(g, folded).unwrap(), folded);
            prop_assert_eq!(fold_index(g, n - k).unwrap(), folded);
        }
    }
}

#[test]
fn generic_minus_one_pairing() {
    // pure B~_j against {a, b, j-a-b, 2g+2-j} pairs to -1 whenever none of
    // the seven lookups folds to j itself
    for g in 2..=8u32 {
        for j in 3..=g + 1 {
            let pure = BoundaryDivisorClass::pure(g, j).unwrap();
            for a in 1..j {
                for b in a..j {
                    if a + b >= j {
                        continue;
                    }
                    let parts = [a, b, j - a - b, 2 * g + 2 - j];
                    let folds_to_j = [a + b, j - a, j - b, a, b, j - a - b]
                        .iter()
                        .any(|&k| fold_index(g, k).unwrap() == j);
                    if folds_to_j {
                        continue;
                    }
                    let curve = VitalCurve::new(g, parts).unwrap();
                    assert_eq!(
                        intersect(&pure, &curve).unwrap(),
                        rat_int(-1),
                        "g={g} j={j} a={a} b={b}"
                    );
                }
            }
        }
    }
}

#[test]
fn vital_curve_counts_match_partition_counts() {
    // number of vital curves = number of partitions of 2g+2 into exactly
    // four positive parts, counted independently by recursion
    fn partitions_into(parts: u32, total: u32, min: u32) -> u64 {
        if parts == 1 {
            return u64::from(total >= min);
        }
        (min..=total / parts)
            .map(|first| partitions_into(parts - 1, total - first, first))
            .sum()
    }
    for g in 2..=12u32 {
        let expected = partitions_into(4, 2 * g + 2, 1);
        assert_eq!(
            enumerate_vital_curves(g).unwrap().len() as u64,
            expected,
            "g={g}"
        );
    }
}
