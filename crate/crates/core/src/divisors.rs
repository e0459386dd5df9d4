//! Boundary divisor classes on the moduli of stable hyperelliptic curves of
//! genus `g` (equivalently, the quotient of the moduli of `2g+2`-pointed
//! rational curves by the full symmetric group), vital curves, and their
//! intersection pairing.
//!
//! A divisor class is a rational coefficient vector on the boundary divisors
//! `B~_2, ..., B~_{g+1}`; boundary indices are canonical, i.e. folded to
//! `min(k, 2g+2-k)`, and there is no boundary divisor at index 0 or 1.

use std::collections::BTreeMap;
use std::ops::Add;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::poly::{Poly, Var};
use crate::rat::{parse_rat, rat, rat_int, sign, Rat};
use crate::{Error, Result};

/// Canonical boundary index of a split with `k` markings on one side:
/// `min(k, 2g+2-k)`. Errors if `k > 2g+2`.
pub fn fold_index(genus: u32, k: u32) -> Result<u32> {
    let n = 2 * genus + 2;
    if k > n {
        return Err(Error::IndexOutOfRange {
            genus,
            index: k,
            max: n,
        });
    }
    Ok(k.min(n - k))
}

/// Exact coefficient vector on the boundary divisors `B~_2, ..., B~_{g+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryDivisorClass {
    genus: u32,
    /// `coeffs[i]` is the coefficient of `B~_{i+2}`; length is exactly `g`.
    coeffs: Vec<Rat>,
}

impl BoundaryDivisorClass {
    /// Build from the coefficients of `B~_2, ..., B~_{g+1}` in order.
    pub fn new(genus: u32, coeffs: Vec<Rat>) -> Result<Self> {
        check_genus(genus)?;
        if coeffs.len() != genus as usize {
            return Err(Error::domain(format!(
                "genus {genus} needs {genus} coefficients (indices 2..={}), got {}",
                genus + 1,
                coeffs.len()
            )));
        }
        Ok(BoundaryDivisorClass { genus, coeffs })
    }

    pub fn zero(genus: u32) -> Result<Self> {
        check_genus(genus)?;
        Ok(BoundaryDivisorClass {
            genus,
            coeffs: vec![Rat::zero(); genus as usize],
        })
    }

    /// The class of a single boundary divisor `B~_k`.
    pub fn pure(genus: u32, k: u32) -> Result<Self> {
        let mut class = BoundaryDivisorClass::zero(genus)?;
        class.set_coeff(k, rat_int(1))?;
        Ok(class)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Boundary indices carrying a coefficient: `2..=g+1`.
    pub fn indices(&self) -> impl Iterator<Item = u32> {
        2..=self.genus + 1
    }

    /// Coefficient at a canonical index `2 <= k <= g+1`.
    pub fn coeff(&self, k: u32) -> Result<&Rat> {
        if k < 2 || k > self.genus + 1 {
            return Err(Error::IndexOutOfRange {
                genus: self.genus,
                index: k,
                max: self.genus + 1,
            });
        }
        Ok(&self.coeffs[(k - 2) as usize])
    }

    pub fn set_coeff(&mut self, k: u32, value: Rat) -> Result<()> {
        if k < 2 || k > self.genus + 1 {
            return Err(Error::IndexOutOfRange {
                genus: self.genus,
                index: k,
                max: self.genus + 1,
            });
        }
        self.coeffs[(k - 2) as usize] = value;
        Ok(())
    }

    /// Coefficient lookup through index folding: any `0 <= k <= 2g+2` is
    /// folded to `min(k, 2g+2-k)`, and canonical indices 0 and 1 carry no
    /// boundary divisor, so they look up as zero.
    pub fn folded_coeff(&self, k: u32) -> Result<Rat> {
        let folded = fold_index(self.genus, k)?;
        if folded < 2 {
            return Ok(Rat::zero());
        }
        Ok(self.coeffs[(folded - 2) as usize].clone())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BoundaryDivisorClass {
            genus: self.genus,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

impl Add for &BoundaryDivisorClass {
    type Output = BoundaryDivisorClass;
    fn add(self, rhs: &BoundaryDivisorClass) -> BoundaryDivisorClass {
        assert_eq!(
            self.genus, rhs.genus,
            "divisor class addition across genera"
        );
        BoundaryDivisorClass {
            genus: self.genus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

fn check_genus(genus: u32) -> Result<()> {
    if genus < 2 {
        return Err(Error::GenusTooSmall { got: genus, min: 2 });
    }
    Ok(())
}

/// Coefficient of `B~_k` in the log-canonical class `L_alpha`:
/// `13/(4g+2) * s(g+1-s) + 2(alpha-2)` at even `k = 2s`, and
/// `13/(4g+2) * s(g-s) + (alpha-2)/2` at odd `k = 2s+1`.
pub fn l_alpha_coefficient(genus: u32, k: u32, alpha: &Rat) -> Result<Rat> {
    let p = l_alpha_coefficient_poly(genus, k)?;
    Ok(p.eval(alpha))
}

/// The same coefficient as a degree-1 polynomial in `alpha`.
pub fn l_alpha_coefficient_poly(genus: u32, k: u32) -> Result<Poly> {
    check_genus(genus)?;
    if k < 2 || k > genus + 1 {
        return Err(Error::IndexOutOfRange {
            genus,
            index: k,
            max: genus + 1,
        });
    }
    let even = k.is_multiple_of(2);
    let g = i64::from(genus);
    let k = i64::from(k);
    let scale = rat(13, 4 * g + 2);
    // constant and alpha-coefficient of the affine form const + slope*alpha
    let (geom, slope, shift) = if even {
        let s = k / 2;
        (scale * rat_int(s * (g + 1 - s)), rat_int(2), rat_int(-4))
    } else {
        let s = (k - 1) / 2;
        (scale * rat_int(s * (g - s)), rat(1, 2), rat_int(-1))
    };
    Ok(Poly::linear(Var::Alpha, geom + shift, slope))
}

/// The full class `L_alpha` on `B~_2, ..., B~_{g+1}`.
pub fn make_l_alpha(genus: u32, alpha: &Rat) -> Result<BoundaryDivisorClass> {
    check_genus(genus)?;
    let coeffs = (2..=genus + 1)
        .map(|k| l_alpha_coefficient(genus, k, alpha))
        .collect::<Result<Vec<_>>>()?;
    BoundaryDivisorClass::new(genus, coeffs)
}

/// A one-dimensional boundary stratum, encoded by an unordered partition
/// `{a, b, c, d}` of `2g+2` into four positive parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VitalCurve {
    genus: u32,
    /// Sorted ascending.
    parts: [u32; 4],
}

impl VitalCurve {
    pub fn new(genus: u32, mut parts: [u32; 4]) -> Result<Self> {
        check_genus(genus)?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "vital curve parts must be positive, got {parts:?}"
            )));
        }
        let sum: u32 = parts.iter().sum();
        if sum != 2 * genus + 2 {
            return Err(Error::InvalidPartition(format!(
                "vital curve parts {parts:?} sum to {sum}, expected {} for genus {genus}",
                2 * genus + 2
            )));
        }
        parts.sort_unstable();
        Ok(VitalCurve { genus, parts })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Parts in ascending order.
    pub fn parts(&self) -> [u32; 4] {
        self.parts
    }
}

/// All vital curves of genus `g`: multisets of four positive integers
/// summing to `2g+2`, each exactly once.
pub fn enumerate_vital_curves(genus: u32) -> Result<Vec<VitalCurve>> {
    check_genus(genus)?;
    let n = 2 * genus + 2;
    let mut out = Vec::new();
    for a in 1..=n / 4 {
        for b in a..=(n - a) / 3 {
            for c in b..=(n - a - b) / 2 {
                let d = n - a - b - c;
                if d >= c {
                    out.push(VitalCurve {
                        genus,
                        parts: [a, b, c, d],
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Intersection pairing of a boundary class with a vital curve:
/// `r_{a+b} + r_{b+c} + r_{a+c} - r_a - r_b - r_c - r_d`, with every lookup
/// folded. Because `a+b+c+d = 2g+2`, opposite pair sums fold to the same
/// index, so the value does not depend on which part plays the role of `d`.
pub fn intersect(class: &BoundaryDivisorClass, curve: &VitalCurve) -> Result<Rat> {
    if class.genus() != curve.genus() {
        return Err(Error::GenusMismatch {
            divisor: class.genus(),
            curve: curve.genus(),
        });
    }
    let [a, b, c, d] = curve.parts();
    let mut total = Rat::zero();
    for pair_sum in [a + b, b + c, a + c] {
        total += class.folded_coeff(pair_sum)?;
    }
    for part in [a, b, c, d] {
        total -= class.folded_coeff(part)?;
    }
    Ok(total)
}

/// Result of pairing a divisor class against every vital curve.
#[derive(Clone, Debug)]
pub struct NefScan {
    /// Minimum pairing value over all vital curves.
    pub min_pairing: Rat,
    /// Curves with strictly negative pairing, with their values.
    pub negative: Vec<(VitalCurve, Rat)>,
    /// Curves with zero pairing — the candidate extremal rays.
    pub zero: Vec<VitalCurve>,
}

/// Exhaustive pairing scan of `class` against every vital curve of its genus.
pub fn nef_scan(class: &BoundaryDivisorClass) -> Result<NefScan> {
    let curves = enumerate_vital_curves(class.genus())?;
    let mut min_pairing: Option<Rat> = None;
    let mut negative = Vec::new();
    let mut zero = Vec::new();
    for curve in curves {
        let value = intersect(class, &curve)?;
        match sign(&value) {
            -1 => negative.push((curve, value.clone())),
            0 => zero.push(curve),
            _ => {}
        }
        min_pairing = Some(match min_pairing {
            Some(current) if current <= value => current,
            _ => value,
        });
    }
    Ok(NefScan {
        // every genus >= 2 has at least one vital curve
        min_pairing: min_pairing.expect("vital curve enumeration is never empty"),
        negative,
        zero,
    })
}

// ---- serde: wire formats ----
//
// BoundaryDivisorClass <-> {"genus": g, "coeffs": {"2": "p/q", ...}}
// VitalCurve           <-> sorted 4-array [a, b, c, d]

#[derive(Serialize, Deserialize)]
struct ClassWire {
    genus: u32,
    coeffs: BTreeMap<u32, String>,
}

impl Serialize for BoundaryDivisorClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .indices()
            .map(|k| (k, self.coeffs[(k - 2) as usize].to_string()))
            .collect();
        ClassWire {
            genus: self.genus,
            coeffs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoundaryDivisorClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = ClassWire::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(wire.genus as usize);
        for k in 2..=wire.genus + 1 {
            let text = wire
                .coeffs
                .get(&k)
                .ok_or_else(|| D::Error::custom(format!("missing coefficient for index {k}")))?;
            coeffs.push(parse_rat(text).map_err(D::Error::custom)?);
        }
        if wire.coeffs.keys().any(|&k| k < 2 || k > wire.genus + 1) {
            return Err(D::Error::custom("coefficient index outside 2..=g+1"));
        }
        BoundaryDivisorClass::new(wire.genus, coeffs).map_err(D::Error::custom)
    }
}

impl Serialize for VitalCurve {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VitalCurve {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = <[u32; 4]>::deserialize(deserializer)?;
        let sum: u32 = parts.iter().sum();
        if sum < 6 || !sum.is_multiple_of(2) {
            return Err(D::Error::custom(format!(
                "parts sum {sum} is not 2g+2 for any g >= 2"
            )));
        }
        VitalCurve::new((sum - 2) / 2, parts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fold_index_examples() {
        assert_eq!(fold_index(3, 5).unwrap(), 3);
        assert_eq!(fold_index(3, 4).unwrap(), 4); // self-complementary middle index
        assert_eq!(fold_index(3, 1).unwrap(), 1);
        assert_eq!(fold_index(3, 8).unwrap(), 0);
        assert!(matches!(
            fold_index(3, 9),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn folded_lookup_vanishes_below_two() {
        let class = BoundaryDivisorClass::pure(3, 2).unwrap();
        assert_eq!(class.folded_coeff(1).unwrap(), rat_int(0));
        assert_eq!(class.folded_coeff(7).unwrap(), rat_int(0)); // folds to 1
        assert_eq!(class.folded_coeff(0).unwrap(), rat_int(0));
        assert_eq!(class.folded_coeff(6).unwrap(), rat_int(1)); // folds to 2
    }

    #[test]
    fn l_alpha_genus_two() {
        let class = make_l_alpha(2, &rat_int(1)).unwrap();
        assert_eq!(class.coeff(2).unwrap(), &rat(3, 5));
        assert_eq!(class.coeff(3).unwrap(), &rat(4, 5));

        // alpha = 2 kills the (alpha - 2) terms
        let class = make_l_alpha(2, &rat_int(2)).unwrap();
        assert_eq!(class.coeff(2).unwrap(), &rat(13, 5));
        assert_eq!(class.coeff(3).unwrap(), &rat(13, 10));
    }

    #[test]
    fn l_alpha_genus_three_at_seven_tenths() {
        let class = make_l_alpha(3, &rat(7, 10)).unwrap();
        assert_eq!(class.coeff(2).unwrap(), &rat(13, 70));
    }

    #[test]
    fn l_alpha_rejects_small_genus() {
        assert!(matches!(
            make_l_alpha(1, &rat_int(1)),
            Err(Error::GenusTooSmall { .. })
        ));
    }

    #[test]
    fn vital_curve_enumeration_genus_two() {
        let curves = enumerate_vital_curves(2).unwrap();
        let parts: Vec<[u32; 4]> = curves.iter().map(|c| c.parts()).collect();
        assert!(parts.contains(&[1, 1, 1, 3]));
        assert!(parts.contains(&[1, 1, 2, 2]));
        // the only multisets of four positive parts summing to 6
        assert_eq!(parts.len(), 2);
        // {1,1,1,4} sums to 7, not 6
        assert!(VitalCurve::new(2, [1, 1, 1, 4]).is_err());
    }

    #[test]
    fn enumeration_matches_generate_and_filter() {
        for g in 2..=8 {
            let n = 2 * g + 2;
            let mut expected = std::collections::BTreeSet::new();
            for a in 1..n {
                for b in 1..n {
                    for c in 1..n {
                        for d in 1..n {
                            if a + b + c + d == n {
                                let mut m = [a, b, c, d];
                                m.sort_unstable();
                                expected.insert(m);
                            }
                        }
                    }
                }
            }
            let got: std::collections::BTreeSet<[u32; 4]> = enumerate_vital_curves(g)
                .unwrap()
                .iter()
                .map(|c| c.parts())
                .collect();
            assert_eq!(got, expected, "genus {g}");
        }
    }

    #[test]
    fn pairing_examples() {
        // pure B~_4 against {1,1,2,4} at genus 3: positives fold to r2+r3+r3 = 0,
        // negatives r1+r1+r2+r4 = 1
        let b4 = BoundaryDivisorClass::pure(3, 4).unwrap();
        let v = VitalCurve::new(3, [1, 1, 2, 4]).unwrap();
        assert_eq!(intersect(&b4, &v).unwrap(), rat_int(-1));

        let b2 = BoundaryDivisorClass::pure(3, 2).unwrap();
        let v = VitalCurve::new(3, [1, 1, 1, 5]).unwrap();
        assert_eq!(intersect(&b2, &v).unwrap(), rat_int(3));

        let zero = BoundaryDivisorClass::zero(3).unwrap();
        assert_eq!(intersect(&zero, &v).unwrap(), rat_int(0));
    }

    #[test]
    fn pairing_requires_matching_genus() {
        let b2 = BoundaryDivisorClass::pure(3, 2).unwrap();
        let v = VitalCurve::new(2, [1, 1, 2, 2]).unwrap();
        assert!(matches!(
            intersect(&b2, &v),
            Err(Error::GenusMismatch { .. })
        ));
    }

    #[test]
    fn nef_scan_wall_curve_is_in_zero_list() {
        // {1,1,1,3} is the j = 3 wall curve; its pairing with L_{9/11} vanishes
        let class = make_l_alpha(2, &rat(9, 11)).unwrap();
        let scan = nef_scan(&class).unwrap();
        let wall = VitalCurve::new(2, [1, 1, 1, 3]).unwrap();
        assert!(scan.zero.contains(&wall));
    }

    #[test]
    fn nef_scan_pure_b3_min() {
        let b3 = BoundaryDivisorClass::pure(2, 3).unwrap();
        let scan = nef_scan(&b3).unwrap();
        assert_eq!(scan.min_pairing, rat_int(-1));
    }

    #[test]
    fn nef_scan_zero_class() {
        for g in [2, 3, 5] {
            let scan = nef_scan(&BoundaryDivisorClass::zero(g).unwrap()).unwrap();
            assert_eq!(scan.min_pairing, rat_int(0));
            assert!(scan.negative.is_empty());
            assert_eq!(scan.zero.len(), enumerate_vital_curves(g).unwrap().len());
        }
    }

    #[test]
    fn class_serde_round_trip() {
        let class = make_l_alpha(3, &rat(9, 11)).unwrap();
        let json = serde_json::to_string(&class).unwrap();
        assert!(json.contains("\"genus\":3"));
        assert!(json.contains("\"2\":\"65/154\""));
        let back: BoundaryDivisorClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, class);
    }

    #[test]
    fn curve_serde_round_trip() {
        let v = VitalCurve::new(3, [4, 1, 2, 1]).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "[1,1,2,4]");
        let back: VitalCurve = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert_eq!(back.genus(), 3);
    }
}
