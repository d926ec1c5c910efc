//! Label transformations `g: N -> N` and checks on whether they keep
//! adjacent labels coprime.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::labeling::Labeling;
use crate::number_theory::{
    carmichael_lambda, factorize, in_cyclic_subgroup, is_prime_u64, nth_prime,
};

/// Default cap on the size of an exactly materialized label.
pub const DEFAULT_EXACT_BITS_CAP: u64 = 1 << 22;

/// A parameterized map applied to every label at each time step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", try_from = "RawSpec")]
pub enum TransformSpec {
    /// `x -> x^k`
    Power { k: u32 },
    /// `x -> p_x`, the `x`-th prime.
    PrimeIndex,
    /// `x -> x^k mod m`
    ModularPower { k: u32, m: u64 },
    /// `x -> p x + 1` for a prime `p`.
    Affine { p: u64 },
    /// `x -> x + c`
    AdditiveShift { c: u64 },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RawSpec {
    Power { k: u32 },
    PrimeIndex,
    ModularPower { k: u32, m: u64 },
    Affine { p: u64 },
    AdditiveShift { c: u64 },
}

impl TryFrom<RawSpec> for TransformSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let spec = match raw {
            RawSpec::Power { k } => TransformSpec::Power { k },
            RawSpec::PrimeIndex => TransformSpec::PrimeIndex,
            RawSpec::ModularPower { k, m } => TransformSpec::ModularPower { k, m },
            RawSpec::Affine { p } => TransformSpec::Affine { p },
            RawSpec::AdditiveShift { c } => TransformSpec::AdditiveShift { c },
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// How far a map is known to preserve coprimality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preservation {
    /// For all coprime `a, b`.
    Unconditional,
    /// Only as a statement about residues of units modulo `m`.
    UnitsOnly,
    /// No general guarantee; must be checked per instance.
    NotGuaranteed,
}

impl TransformSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        match *self {
            TransformSpec::Power { k } | TransformSpec::ModularPower { k, .. } if k < 1 => {
                bad(format!("exponent k must be >= 1, got {k}"))
            }
            TransformSpec::ModularPower { m, .. } if m < 2 => {
                bad(format!("modulus m must be >= 2, got {m}"))
            }
            TransformSpec::Affine { p } if !is_prime_u64(p) => {
                bad(format!("affine multiplier p must be prime, got {p}"))
            }
            TransformSpec::AdditiveShift { c } if c < 1 => bad("shift c must be >= 1".into()),
            _ => Ok(()),
        }
    }

    pub fn preservation(&self) -> Preservation {
        match self {
            TransformSpec::Power { .. } | TransformSpec::PrimeIndex => Preservation::Unconditional,
            TransformSpec::ModularPower { .. } => Preservation::UnitsOnly,
            TransformSpec::Affine { .. } | TransformSpec::AdditiveShift { .. } => {
                Preservation::NotGuaranteed
            }
        }
    }

    pub fn declared_coprime_preserving(&self) -> bool {
        self.preservation() == Preservation::Unconditional
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            TransformSpec::Power { .. } => "power",
            TransformSpec::PrimeIndex => "prime_index",
            TransformSpec::ModularPower { .. } => "modular_power",
            TransformSpec::Affine { .. } => "affine",
            TransformSpec::AdditiveShift { .. } => "additive_shift",
        }
    }

    /// One application of the map. Only `modular_power` accepts 0, the
    /// residue it can itself produce from non-units.
    pub fn apply(&self, x: &BigUint) -> Result<BigUint> {
        if x.is_zero() && !matches!(self, TransformSpec::ModularPower { .. }) {
            return Err(Error::InvalidParameter("maps act on positive integers".into()));
        }
        Ok(match *self {
            TransformSpec::Power { k } => x.pow(k),
            TransformSpec::PrimeIndex => {
                let index = x.to_u64().ok_or(Error::SieveBudget {
                    index: u64::MAX,
                    budget: crate::number_theory::DEFAULT_SIEVE_BUDGET,
                })?;
                BigUint::from(nth_prime(index)?)
            }
            TransformSpec::ModularPower { k, m } => x.modpow(&BigUint::from(k), &BigUint::from(m)),
            TransformSpec::Affine { p } => x * p + 1u32,
            TransformSpec::AdditiveShift { c } => x + c,
        })
    }

    /// `t`-fold application, computed directly where a closed form exists.
    ///
    /// Power and affine results larger than `bits_cap` bits are refused with
    /// [`Error::ExactSizeExceeded`]. Prime-index evolution has no closed form.
    pub fn iterate_closed_form(&self, x0: &BigUint, t: u64, bits_cap: u64) -> Result<BigUint> {
        if x0.is_zero() && !matches!(self, TransformSpec::ModularPower { .. }) {
            return Err(Error::InvalidParameter("maps act on positive integers".into()));
        }
        if t == 0 {
            return Ok(x0.clone());
        }
        match *self {
            TransformSpec::Power { k } => {
                if x0.is_one() || k == 1 {
                    return Ok(x0.clone());
                }
                let exponent = BigUint::from(k).pow(t.min(u32::MAX as u64) as u32);
                let bits = exponent
                    .to_u64()
                    .and_then(|e| e.checked_mul(x0.bits()))
                    .unwrap_or(u64::MAX);
                if bits > bits_cap || t > u32::MAX as u64 {
                    return Err(Error::ExactSizeExceeded { bits, cap: bits_cap });
                }
                Ok(x0.pow(exponent.to_u32().expect("bounded by the cap")))
            }
            TransformSpec::Affine { p } => {
                let bits = (p as f64).log2().ceil() as u64 * t + x0.bits();
                if bits > bits_cap || t > u32::MAX as u64 {
                    return Err(Error::ExactSizeExceeded { bits, cap: bits_cap });
                }
                let pt = BigUint::from(p).pow(t as u32);
                let offset = (&pt - 1u32) / (p - 1);
                Ok(pt * x0 + offset)
            }
            TransformSpec::AdditiveShift { c } => Ok(x0 + BigUint::from(c) * t),
            TransformSpec::ModularPower { k, m } => {
                let m_big = BigUint::from(m);
                if x0.gcd(&m_big).is_one() {
                    // Units: x^(k^t) depends only on k^t mod lambda(m).
                    let lambda = carmichael_lambda(&m_big)?;
                    let e = BigUint::from(k).modpow(&BigUint::from(t), &lambda);
                    Ok(x0.modpow(&e, &m_big))
                } else {
                    modular_orbit_at(x0, k, m, t)
                }
            }
            TransformSpec::PrimeIndex => Err(Error::Representation(
                "prime_index has no closed form; apply it step by step".into(),
            )),
        }
    }
}

/// Position `t` on the orbit of `x0` under `x -> x^k mod m`, using the
/// eventual cycle to skip ahead.
fn modular_orbit_at(x0: &BigUint, k: u32, m: u64, t: u64) -> Result<BigUint> {
    let m_big = BigUint::from(m);
    let k_big = BigUint::from(k);
    let mut orbit: Vec<BigUint> = vec![x0.clone()];
    let mut seen: HashMap<BigUint, u64> = HashMap::new();
    let mut x = x0.modpow(&k_big, &m_big);
    let mut step = 1u64;
    loop {
        if step == t {
            return Ok(x);
        }
        if let Some(&first) = seen.get(&x) {
            let cycle = step - first;
            let idx = first + (t - first) % cycle;
            return Ok(orbit[idx as usize].clone());
        }
        seen.insert(x.clone(), step);
        orbit.push(x.clone());
        x = x.modpow(&k_big, &m_big);
        step += 1;
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformSpec::Power { k } => write!(f, "power:{k}"),
            TransformSpec::PrimeIndex => write!(f, "prime-index"),
            TransformSpec::ModularPower { k, m } => write!(f, "modpow:{k}:{m}"),
            TransformSpec::Affine { p } => write!(f, "affine:{p}"),
            TransformSpec::AdditiveShift { c } => write!(f, "shift:{c}"),
        }
    }
}

impl FromStr for TransformSpec {
    type Err = Error;

    /// Parses `power:K`, `prime-index`, `modpow:K:M`, `affine:P`, `shift:C`
    /// (snake_case kind names are accepted too).
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<u64> {
            parts
                .get(i)
                .ok_or_else(|| Error::InvalidParameter(format!("{s:?}: missing parameter")))?
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{s:?}: bad number")))
        };
        let small = |v: u64| -> Result<u32> {
            u32::try_from(v).map_err(|_| Error::InvalidParameter(format!("{s:?}: exponent too large")))
        };
        let spec = match (parts[0].to_ascii_lowercase().replace('-', "_").as_str(), parts.len()) {
            ("power" | "pow", 2) => TransformSpec::Power { k: small(num(1)?)? },
            ("prime_index", 1) => TransformSpec::PrimeIndex,
            ("modpow" | "modular_power", 3) => TransformSpec::ModularPower {
                k: small(num(1)?)?,
                m: num(2)?,
            },
            ("affine", 2) => TransformSpec::Affine { p: num(1)? },
            ("shift" | "additive_shift", 2) => TransformSpec::AdditiveShift { c: num(1)? },
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown map {s:?}; expected power:K, prime-index, modpow:K:M, affine:P or shift:C"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub a: u64,
    pub b: u64,
    #[serde(with = "crate::serde_util::decimal")]
    pub image_a: BigUint,
    #[serde(with = "crate::serde_util::decimal")]
    pub image_b: BigUint,
    #[serde(with = "crate::serde_util::decimal")]
    pub gcd: BigUint,
}

/// Outcome of testing a map on a finite box of coprime pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapVerdict {
    /// True when no counterexample exists in the box; says nothing beyond it.
    pub preserved: bool,
    pub counterexample: Option<Counterexample>,
    pub trials: u64,
}

/// Tests every coprime pair `1 <= a < b <= bound`.
///
/// Pairs are visited by increasing gap `b - a`, then by `a`, with pairs
/// containing 1 checked last, so the first counterexample reported is the
/// tightest one between labels greater than 1.
pub fn sample_coprime_preservation(spec: &TransformSpec, bound: u64) -> Result<MapVerdict> {
    if bound < 2 {
        return Err(Error::InvalidParameter(format!("bound must be >= 2, got {bound}")));
    }
    let images: Vec<BigUint> = (0..=bound)
        .map(|x| if x == 0 { Ok(BigUint::zero()) } else { spec.apply(&x.into()) })
        .collect::<Result<_>>()?;
    let pairs = (1..bound)
        .flat_map(|gap| (2..=bound - gap).map(move |a| (a, a + gap)))
        .chain((2..=bound).map(|b| (1, b)));
    let mut trials = 0;
    for (a, b) in pairs {
        if a.gcd(&b) != 1 {
            continue;
        }
        trials += 1;
        let d = images[a as usize].gcd(&images[b as usize]);
        if !d.is_one() {
            return Ok(MapVerdict {
                preserved: false,
                counterexample: Some(Counterexample {
                    a,
                    b,
                    image_a: images[a as usize].clone(),
                    image_b: images[b as usize].clone(),
                    gcd: d,
                }),
                trials,
            });
        }
    }
    Ok(MapVerdict {
        preserved: true,
        counterexample: None,
        trials,
    })
}

/// One prime divisor `q` of an edge's label difference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCheck {
    #[serde(with = "crate::serde_util::decimal")]
    pub q: BigUint,
    /// `(p - 1) a + 1 mod q`.
    #[serde(with = "crate::serde_util::decimal")]
    pub residue: BigUint,
    /// `None` when `q = p` or `q | p - 1`, where the membership test does
    /// not decide anything.
    pub member_of_subgroup: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeHypothesis {
    pub edge: (VertexId, VertexId),
    /// The smaller of the two labels.
    #[serde(with = "crate::serde_util::decimal")]
    pub low: BigUint,
    #[serde(with = "crate::serde_util::decimal")]
    pub difference: BigUint,
    pub primes: Vec<PrimeCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineHypothesisReport {
    pub p: u64,
    pub edges: Vec<EdgeHypothesis>,
    /// No prime divisor of any difference has its residue in `<p>`.
    pub overall: bool,
    /// Edges with at least one undecided prime.
    pub indeterminate_edges: Vec<(VertexId, VertexId)>,
    /// `overall` with nothing undecided: coprimality then holds for all `t`.
    pub guaranteed: bool,
}

/// Checks, edge by edge, the sufficient condition for `x -> p x + 1` to keep
/// a coprime labeling coprime forever: for every prime `q` dividing the label
/// difference, `(p - 1) a + 1` (with `a` the smaller label) lies outside the
/// subgroup generated by `p` modulo `q`.
pub fn affine_edge_hypothesis(g: &Graph, f0: &Labeling, p: u64) -> Result<AffineHypothesisReport> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidParameter(format!("p must be prime, got {p}")));
    }
    f0.check_total(g)?;
    if let Some((u, v)) = f0.duplicate() {
        return Err(Error::InvalidParameter(format!(
            "labeling is not injective: vertices {u} and {v} share a label"
        )));
    }
    let p_big = BigUint::from(p);
    let mut edges = Vec::with_capacity(g.edge_count());
    let mut overall = true;
    let mut indeterminate_edges = Vec::new();
    for &(u, v) in g.edges() {
        let (a, b) = {
            let (x, y) = (f0.label(u), f0.label(v));
            if x < y { (x, y) } else { (y, x) }
        };
        let difference = b - a;
        let shifted = a * (p - 1) + 1u32;
        let mut primes = Vec::new();
        let mut undecided = false;
        for q in factorize(&difference)?.primes() {
            let residue = &shifted % q;
            let member = if q == &p_big || ((p - 1) % q).is_zero() {
                undecided = true;
                None
            } else {
                Some(in_cyclic_subgroup(&p_big, &residue, q)?)
            };
            overall &= member != Some(true);
            primes.push(PrimeCheck {
                q: q.clone(),
                residue,
                member_of_subgroup: member,
            });
        }
        if undecided {
            indeterminate_edges.push((u, v));
        }
        edges.push(EdgeHypothesis {
            edge: (u, v),
            low: a.clone(),
            difference,
            primes,
        });
    }
    Ok(AffineHypothesisReport {
        p,
        guaranteed: overall && indeterminate_edges.is_empty(),
        edges,
        overall,
        indeterminate_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn big(x: u64) -> BigUint {
        x.into()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(TransformSpec::Power { k: 2 }.apply(&big(13)).unwrap(), big(169));
        assert_eq!(TransformSpec::PrimeIndex.apply(&big(5)).unwrap(), big(11));
        assert_eq!(TransformSpec::Affine { p: 2 }.apply(&big(3)).unwrap(), big(7));
        assert_eq!(TransformSpec::AdditiveShift { c: 4 }.apply(&big(3)).unwrap(), big(7));
        assert_eq!(TransformSpec::ModularPower { k: 2, m: 7 }.apply(&big(3)).unwrap(), big(2));
        assert!(TransformSpec::Power { k: 2 }.apply(&big(0)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let cap = DEFAULT_EXACT_BITS_CAP;
        assert_eq!(TransformSpec::Power { k: 2 }.iterate_closed_form(&big(3), 2, cap).unwrap(), big(81));
        assert_eq!(TransformSpec::Affine { p: 2 }.iterate_closed_form(&big(3), 2, cap).unwrap(), big(15));
        assert_eq!(TransformSpec::Power { k: 5 }.iterate_closed_form(&big(9), 0, cap).unwrap(), big(9));
        assert!(matches!(
            TransformSpec::Power { k: 3 }.iterate_closed_form(&big(2), 40, cap),
            Err(Error::ExactSizeExceeded { .. })
        ));
        assert_eq!(TransformSpec::Power { k: 3 }.iterate_closed_form(&big(1), 1000, cap).unwrap(), big(1));
    }

    #[test]
    fn closed_forms_match_iteration() {
        let cap = DEFAULT_EXACT_BITS_CAP;
        for k in 1..=3 {
            let spec = TransformSpec::Power { k };
            for x in 1..=20u64 {
                let mut y = big(x);
                for t in 0..=3 {
                    assert_eq!(spec.iterate_closed_form(&big(x), t, cap).unwrap(), y);
                    y = spec.apply(&y).unwrap();
                }
            }
        }
        for p in [2, 3, 5] {
            let spec = TransformSpec::Affine { p };
            for x in 1..=100u64 {
                let mut y = big(x);
                for t in 0..=10 {
                    assert_eq!(spec.iterate_closed_form(&big(x), t, cap).unwrap(), y);
                    y = spec.apply(&y).unwrap();
                }
            }
        }
        for (k, m) in [(2, 7), (2, 15), (3, 561), (2, 12), (5, 100)] {
            let spec = TransformSpec::ModularPower { k, m };
            for x in 1..m.min(60) {
                let mut y = big(x);
                for t in 0..=40 {
                    assert_eq!(spec.iterate_closed_form(&big(x), t, cap).unwrap(), y, "x={x} k={k} m={m} t={t}");
                    y = spec.apply(&y).unwrap();
                }
            }
        }
    }

    #[test]
    fn affine_offset_is_never_divisible_by_p() {
        for p in [2u64, 3, 5, 7] {
            let pb = big(p);
            for t in 0..=30u32 {
                let c = (pb.pow(t) - 1u32) / (p - 1);
                if t > 0 {
                    assert!(!(&c % p).is_zero(), "p={p} t={t}");
                }
            }
        }
    }

    #[test]
    fn preservation_samples() {
        let v = sample_coprime_preservation(&TransformSpec::Power { k: 3 }, 50).unwrap();
        assert!(v.preserved && v.counterexample.is_none());
        let v = sample_coprime_preservation(&TransformSpec::AdditiveShift { c: 1 }, 10).unwrap();
        let c = v.counterexample.unwrap();
        assert_eq!((c.a, c.b), (3, 5));
        assert_eq!((c.image_a, c.image_b, c.gcd), (big(4), big(6), big(2)));
        assert!(sample_coprime_preservation(&TransformSpec::PrimeIndex, 30).unwrap().preserved);
        for k in 1..=5 {
            assert!(sample_coprime_preservation(&TransformSpec::Power { k }, 200).unwrap().preserved);
        }
        assert!(sample_coprime_preservation(&TransformSpec::PrimeIndex, 1).is_err());
    }

    #[test]
    fn box_covers_every_coprime_pair() {
        let v = sample_coprime_preservation(&TransformSpec::Power { k: 2 }, 30).unwrap();
        let expected = (1..=30u64)
            .flat_map(|a| (a + 1..=30).map(move |b| (a, b)))
            .filter(|(a, b)| a.gcd(b) == 1)
            .count() as u64;
        assert_eq!(v.trials, expected);
    }

    #[test]
    fn counterexamples_recheck() {
        for spec in [
            TransformSpec::AdditiveShift { c: 1 },
            TransformSpec::AdditiveShift { c: 2 },
            TransformSpec::Affine { p: 2 },
            TransformSpec::Affine { p: 3 },
            TransformSpec::ModularPower { k: 2, m: 7 },
        ] {
            let v = sample_coprime_preservation(&spec, 60).unwrap();
            let c = v.counterexample.expect("should be falsified");
            assert_eq!(c.a.gcd(&c.b), 1);
            let d = spec.apply(&big(c.a)).unwrap().gcd(&spec.apply(&big(c.b)).unwrap());
            assert!(d > BigUint::one());
            assert_eq!(d, c.gcd);
        }
    }

    #[test]
    fn affine_hypothesis_examples() {
        let k2 = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        let r = affine_edge_hypothesis(&k2, &Labeling::from_values([1u32, 2]).unwrap(), 2).unwrap();
        assert!(r.overall && r.guaranteed);
        assert!(r.edges[0].primes.is_empty());

        let r = affine_edge_hypothesis(&k2, &Labeling::from_values([3u32, 8]).unwrap(), 2).unwrap();
        assert!(!r.overall);
        let check = &r.edges[0].primes[0];
        assert_eq!((check.q.clone(), check.residue.clone()), (big(5), big(4)));
        assert_eq!(check.member_of_subgroup, Some(true));

        let p3 = Graph::family(Family::Path, 3).unwrap();
        let r = affine_edge_hypothesis(&p3, &Labeling::from_values([1u32, 2, 3]).unwrap(), 2).unwrap();
        assert!(r.overall && r.guaranteed);
    }

    #[test]
    fn affine_hypothesis_indeterminate_primes() {
        let k2 = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        // d = 2 = p
        let r = affine_edge_hypothesis(&k2, &Labeling::from_values([1u32, 3]).unwrap(), 2).unwrap();
        assert!(r.overall && !r.guaranteed);
        assert_eq!(r.indeterminate_edges, vec![(0, 1)]);
        // q = 2 divides p - 1 = 2 for p = 3
        let r = affine_edge_hypothesis(&k2, &Labeling::from_values([1u32, 3]).unwrap(), 3).unwrap();
        assert_eq!(r.edges[0].primes[0].member_of_subgroup, None);
        assert!(affine_edge_hypothesis(&k2, &Labeling::from_values([1u32, 3]).unwrap(), 4).is_err());
        assert!(affine_edge_hypothesis(&k2, &Labeling::from_values([3u32, 3]).unwrap(), 2).is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in ["power:2", "prime-index", "modpow:2:561", "affine:3", "shift:1"] {
            let spec: TransformSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("power:0".parse::<TransformSpec>().is_err());
        assert!("affine:4".parse::<TransformSpec>().is_err());
        assert!("modpow:2:1".parse::<TransformSpec>().is_err());
        assert!("cube".parse::<TransformSpec>().is_err());
    }

    #[test]
    fn json_shape() {
        let spec = TransformSpec::ModularPower { k: 2, m: 561 };
        let s = serde_json::to_string(&spec).unwrap();
        assert_eq!(s, r#"{"kind":"modular_power","k":2,"m":561}"#);
        assert_eq!(serde_json::from_str::<TransformSpec>(&s).unwrap(), spec);
        assert_eq!(
            serde_json::to_string(&TransformSpec::PrimeIndex).unwrap(),
            r#"{"kind":"prime_index"}"#
        );
        assert!(serde_json::from_str::<TransformSpec>(r#"{"kind":"affine","p":9}"#).is_err());
    }

    #[test]
    fn preservation_declarations() {
        assert!(TransformSpec::Power { k: 2 }.declared_coprime_preserving());
        assert!(TransformSpec::PrimeIndex.declared_coprime_preserving());
        assert_eq!(TransformSpec::ModularPower { k: 2, m: 7 }.preservation(), Preservation::UnitsOnly);
        assert!(!TransformSpec::Affine { p: 2 }.declared_coprime_preserving());
        assert!(!TransformSpec::AdditiveShift { c: 1 }.declared_coprime_preserving());
    }
}
