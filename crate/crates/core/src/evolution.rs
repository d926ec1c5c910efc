//! Time evolution `f_{t+1} = g(f_t)` of a labeling, run verification, the
//! bounded/unbounded classification, and vertex orders modulo `n`.
//!
//! Labels under power maps grow doubly exponentially, so frames come in
//! several representations:
//!
//! * `Exact`: materialized integers, capped by [`EvolveOptions::exact_bits_cap`].
//! * `PowerForm`: `base^exponent` with the time-zero label as base. Since
//!   `gcd(a^e, b^e) = gcd(a, b)^e`, coprimality and injectivity are decided
//!   on the bases.
//! * `PrimeTower`: the `t`-fold prime-index image of a seed. For `t >= 1`
//!   every label is a prime, and two of them coincide exactly when their
//!   seeds do.
//! * `Modular(n)`: residues, reduced after every step.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::labeling::Labeling;
use crate::number_theory::{generates_full_group, ModulusContext};
use crate::transforms::{affine_edge_hypothesis, TransformSpec, DEFAULT_EXACT_BITS_CAP};

/// Default horizon for maps without a structural guarantee.
pub const DEFAULT_HORIZON: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Exact,
    PowerForm,
    PrimeTower,
    Modular(u64),
}

impl Representation {
    /// The representation a run uses by default for `spec`.
    pub fn natural_for(spec: &TransformSpec) -> Self {
        match *spec {
            TransformSpec::Power { .. } => Representation::PowerForm,
            TransformSpec::PrimeIndex => Representation::PrimeTower,
            TransformSpec::ModularPower { m, .. } => Representation::Modular(m),
            TransformSpec::Affine { .. } | TransformSpec::AdditiveShift { .. } => {
                Representation::Exact
            }
        }
    }

    fn check_compatible(self, spec: &TransformSpec) -> Result<()> {
        let reject = |why: &str| Err(Error::Representation(format!("{self} with {spec}: {why}")));
        match (self, spec) {
            (Representation::PowerForm, TransformSpec::Power { .. }) => Ok(()),
            (Representation::PowerForm, _) => reject("power form needs a power map"),
            (Representation::PrimeTower, TransformSpec::PrimeIndex) => Ok(()),
            (Representation::PrimeTower, _) => reject("prime towers need the prime-index map"),
            (Representation::Modular(_), TransformSpec::PrimeIndex) => {
                reject("prime indexing does not commute with reduction")
            }
            (Representation::Modular(n), TransformSpec::ModularPower { m, .. }) if m % n != 0 => {
                reject("the frame modulus must divide the map modulus")
            }
            (Representation::Modular(n), _) if n < 2 => reject("modulus must be >= 2"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Representation::Exact => f.write_str("exact"),
            Representation::PowerForm => f.write_str("power-form"),
            Representation::PrimeTower => f.write_str("prime-tower"),
            Representation::Modular(n) => write!(f, "modular:{n}"),
        }
    }
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        match norm.as_str() {
            "exact" => Ok(Representation::Exact),
            "power-form" | "power" => Ok(Representation::PowerForm),
            "prime-tower" | "tower" => Ok(Representation::PrimeTower),
            other => other
                .strip_prefix("modular:")
                .and_then(|n| n.parse().ok())
                .map(Representation::Modular)
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "unknown representation {s:?}; expected exact, power-form, prime-tower or modular:N"
                    ))
                }),
        }
    }
}

/// A label at some time step, in one of the frame representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Exact(#[serde(with = "crate::serde_util::decimal")] BigUint),
    Power {
        #[serde(with = "crate::serde_util::decimal")]
        base: BigUint,
        #[serde(with = "crate::serde_util::decimal")]
        exponent: BigUint,
    },
    Tower {
        #[serde(with = "crate::serde_util::decimal")]
        seed: BigUint,
        depth: u64,
    },
    Residue {
        #[serde(with = "crate::serde_util::decimal")]
        residue: BigUint,
        modulus: u64,
    },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Exact(x) => write!(f, "{x}"),
            Label::Power { base, exponent } if exponent.is_one() || base.is_one() => write!(f, "{base}"),
            Label::Power { base, exponent } => write!(f, "{base}^{exponent}"),
            Label::Tower { seed, depth: 0 } => write!(f, "{seed}"),
            Label::Tower { seed, depth } => write!(f, "p^{depth}({seed})"),
            Label::Residue { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl Label {
    /// The integer value, if materialized (residues give their representative).
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            Label::Exact(x) => Some(x),
            Label::Residue { residue, .. } => Some(residue),
            Label::Power { base, exponent } if exponent.is_one() || base.is_one() => Some(base),
            Label::Tower { seed, depth: 0 } => Some(seed),
            _ => None,
        }
    }
}

/// The labeling at time `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    pub t: u64,
    pub representation: Representation,
    pub labels: BTreeMap<VertexId, Label>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolveOptions {
    pub exact_bits_cap: u64,
    /// Report residue collisions in modular frames as warnings instead of
    /// injectivity violations.
    pub allow_modular_collisions: bool,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        EvolveOptions {
            exact_bits_cap: DEFAULT_EXACT_BITS_CAP,
            allow_modular_collisions: false,
        }
    }
}

/// The frame at time `t`.
pub fn evolve(
    g: &Graph,
    f0: &Labeling,
    spec: &TransformSpec,
    t: u64,
    representation: Representation,
    opts: &EvolveOptions,
) -> Result<Frame> {
    f0.check_total(g)?;
    representation.check_compatible(spec)?;
    let mut labels = BTreeMap::new();
    for (v, x) in f0.iter() {
        labels.insert(v, evolve_label(x, spec, t, representation, opts)?);
    }
    Ok(Frame { t, representation, labels })
}

fn evolve_label(
    x0: &BigUint,
    spec: &TransformSpec,
    t: u64,
    representation: Representation,
    opts: &EvolveOptions,
) -> Result<Label> {
    Ok(match representation {
        Representation::Exact => Label::Exact(match spec {
            TransformSpec::PrimeIndex => {
                let mut x = x0.clone();
                for _ in 0..t {
                    x = spec.apply(&x)?;
                }
                x
            }
            _ => spec.iterate_closed_form(x0, t, opts.exact_bits_cap)?,
        }),
        Representation::PowerForm => {
            let TransformSpec::Power { k } = *spec else { unreachable!() };
            let t = u32::try_from(t)
                .map_err(|_| Error::Representation(format!("time {t} too large for power form")))?;
            Label::Power {
                base: x0.clone(),
                exponent: BigUint::from(k).pow(t),
            }
        }
        Representation::PrimeTower => Label::Tower { seed: x0.clone(), depth: t },
        Representation::Modular(n) => Label::Residue {
            residue: modular_label(x0, spec, t, n)?,
            modulus: n,
        },
    })
}

/// `g^t(x0) mod n` for maps that commute with reduction mod `n`.
fn modular_label(x0: &BigUint, spec: &TransformSpec, t: u64, n: u64) -> Result<BigUint> {
    let n_big = BigUint::from(n);
    let start = x0 % &n_big;
    if t == 0 {
        return Ok(start);
    }
    if let TransformSpec::Power { k } | TransformSpec::ModularPower { k, .. } = *spec {
        if start.gcd(&n_big).is_one() {
            let ctx = ModulusContext::new(&n_big)?;
            let e = BigUint::from(k).modpow(&BigUint::from(t), &ctx.lambda);
            return Ok(start.modpow(&e, &n_big));
        }
    }
    // Walk the orbit of the reduced value; it is eventually periodic.
    let step = |x: &BigUint| -> Result<BigUint> {
        if x.is_zero() {
            // Maps act on positive integers; 0 stands for the class of n.
            Ok(spec.apply(&n_big)? % &n_big)
        } else {
            Ok(spec.apply(x)? % &n_big)
        }
    };
    let mut orbit = vec![start.clone()];
    let mut seen: HashMap<BigUint, u64> = HashMap::from([(start, 0)]);
    let mut x = orbit[0].clone();
    for s in 1..=t {
        x = step(&x)?;
        if s == t {
            return Ok(x);
        }
        if let Some(&first) = seen.get(&x) {
            let cycle = s - first;
            return Ok(orbit[(first + (t - first) % cycle) as usize].clone());
        }
        seen.insert(x.clone(), s);
        orbit.push(x.clone());
    }
    Ok(x)
}

/// Frames at several times, e.g. for multi-graph DOT output.
pub fn evolve_snapshots(
    g: &Graph,
    f0: &Labeling,
    spec: &TransformSpec,
    times: &[u64],
    representation: Representation,
    opts: &EvolveOptions,
) -> Result<Vec<Frame>> {
    times
        .iter()
        .map(|&t| evolve(g, f0, spec, t, representation, opts))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunViolation {
    pub t: u64,
    pub edge: (VertexId, VertexId),
    pub gcd: Label,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityViolation {
    pub t: u64,
    pub u: VertexId,
    pub v: VertexId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RunStatus {
    Verified,
    Violation { t: u64, edge: (VertexId, VertexId) },
    InjectivityViolation { t: u64, u: VertexId, v: VertexId },
}

/// How far a verified run extends beyond its horizon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "scope", rename_all = "snake_case")]
pub enum Guarantee {
    /// Every later frame is valid too.
    AllTime { reason: String },
    /// Only frames `0..=horizon` were checked.
    HorizonOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub t: u64,
    pub edge_violations: usize,
    pub injective: bool,
}

/// A verified (or refuted) run of a labeling under a map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DclRun {
    pub graph: Graph,
    pub transform: TransformSpec,
    pub f0: Labeling,
    pub horizon: u64,
    pub representation: Representation,
    pub status: RunStatus,
    pub guarantee: Guarantee,
    pub violations: Vec<RunViolation>,
    pub injectivity_violations: Vec<InjectivityViolation>,
    pub steps: Vec<StepReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period_report: Option<PeriodReport>,
}

impl DclRun {
    pub fn verified(&self) -> bool {
        self.status == RunStatus::Verified
    }
}

/// Checks every frame `0..=horizon` for edge coprimality and injectivity,
/// in the representation natural for `spec`.
pub fn verify_run(
    g: &Graph,
    f0: &Labeling,
    spec: &TransformSpec,
    horizon: u64,
    opts: &EvolveOptions,
) -> Result<DclRun> {
    verify_run_in(g, f0, spec, horizon, Representation::natural_for(spec), opts)
}

pub fn verify_run_in(
    g: &Graph,
    f0: &Labeling,
    spec: &TransformSpec,
    horizon: u64,
    representation: Representation,
    opts: &EvolveOptions,
) -> Result<DclRun> {
    f0.check_total(g)?;
    representation.check_compatible(spec)?;
    let mut violations = Vec::new();
    let mut injectivity_violations = Vec::new();
    let mut warnings = Vec::new();
    let mut steps = Vec::with_capacity(horizon as usize + 1);

    // Only the current frame is kept.
    let mut current: Vec<(VertexId, BigUint)> = f0.iter().map(|(v, x)| (v, x.clone())).collect();
    if let Representation::Modular(n) = representation {
        for (_, x) in &mut current {
            *x %= n;
        }
    }
    let n_big = match representation {
        Representation::Modular(n) => Some(BigUint::from(n)),
        _ => None,
    };
    let position: HashMap<VertexId, usize> =
        current.iter().enumerate().map(|(i, (v, _))| (*v, i)).collect();

    for t in 0..=horizon {
        // In power form and for prime towers the frame at `t` is decided by
        // the time-zero labels; gcds are lifted back for the report.
        let symbolic = t > 0
            && matches!(representation, Representation::PowerForm | Representation::PrimeTower);
        let mut edge_count = 0;
        for &(u, v) in g.edges() {
            let (a, b) = (&current[position[&u]].1, &current[position[&v]].1);
            let d = if symbolic && representation == Representation::PrimeTower {
                if a == b { a.clone() } else { BigUint::one() }
            } else {
                a.gcd(b)
            };
            if !d.is_one() {
                edge_count += 1;
                violations.push(RunViolation {
                    t,
                    edge: (u, v),
                    gcd: lift(&d, spec, t, representation)?,
                });
            }
        }
        let mut injective = true;
        let mut seen: HashMap<&BigUint, VertexId> = HashMap::new();
        for (v, x) in &current {
            if let Some(&u) = seen.get(x) {
                if matches!(representation, Representation::Modular(_)) && opts.allow_modular_collisions {
                    warnings.push(format!("t={t}: vertices {u} and {v} collide modulo the frame modulus"));
                } else {
                    injective = false;
                    injectivity_violations.push(InjectivityViolation { t, u, v: *v });
                }
            } else {
                seen.insert(x, *v);
            }
        }
        steps.push(StepReport { t, edge_violations: edge_count, injective });

        if t < horizon && !matches!(representation, Representation::PowerForm | Representation::PrimeTower) {
            for (_, x) in &mut current {
                let next = match &n_big {
                    Some(n) if x.is_zero() => spec.apply(n)? % n,
                    Some(n) => spec.apply(x)? % n,
                    None => spec.apply(x)?,
                };
                if next.bits() > opts.exact_bits_cap {
                    return Err(Error::ExactSizeExceeded { bits: next.bits(), cap: opts.exact_bits_cap });
                }
                *x = next;
            }
        }
    }

    let first_edge = violations.first().map(|v| (v.t, v.edge));
    let first_dup = injectivity_violations.first().copied();
    let status = match (first_edge, first_dup) {
        (None, None) => RunStatus::Verified,
        (Some((t, _)), Some(d)) if d.t <= t => RunStatus::InjectivityViolation { t: d.t, u: d.u, v: d.v },
        (Some((t, edge)), _) => RunStatus::Violation { t, edge },
        (None, Some(d)) => RunStatus::InjectivityViolation { t: d.t, u: d.u, v: d.v },
    };

    let guarantee = if status != RunStatus::Verified {
        Guarantee::HorizonOnly
    } else if spec.declared_coprime_preserving() {
        Guarantee::AllTime {
            reason: "injective coprime-preserving map applied to a coprime labeling".into(),
        }
    } else if let TransformSpec::Affine { p } = *spec {
        if affine_edge_hypothesis(g, f0, p)?.guaranteed {
            Guarantee::AllTime { reason: "affine edge hypothesis holds on every edge".into() }
        } else {
            Guarantee::HorizonOnly
        }
    } else {
        Guarantee::HorizonOnly
    };

    Ok(DclRun {
        graph: g.clone(),
        transform: spec.clone(),
        f0: f0.clone(),
        horizon,
        representation,
        status,
        guarantee,
        violations,
        injectivity_violations,
        steps,
        warnings,
        period_report: None,
    })
}

/// Turns a gcd computed on time-zero data into the gcd at time `t`.
fn lift(d: &BigUint, spec: &TransformSpec, t: u64, representation: Representation) -> Result<Label> {
    Ok(match representation {
        Representation::PowerForm if t > 0 => {
            let TransformSpec::Power { k } = *spec else { unreachable!() };
            Label::Power { base: d.clone(), exponent: BigUint::from(k).pow(t as u32) }
        }
        Representation::PrimeTower if t > 0 => Label::Tower { seed: d.clone(), depth: t },
        Representation::Modular(n) => Label::Residue { residue: d.clone(), modulus: n },
        _ => Label::Exact(d.clone()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trajectory {
    pub vertex: VertexId,
    #[serde(with = "crate::serde_util::decimal_vec")]
    pub labels: Vec<BigUint>,
}

/// Whether the set of all labels ever produced is finite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Boundedness {
    /// From step `preperiod` on, every frame repeats with period `period`;
    /// `label_set` is the union of all trajectories.
    Bounded {
        period: u64,
        preperiod: u64,
        #[serde(with = "crate::serde_util::decimal_vec")]
        label_set: Vec<BigUint>,
    },
    /// A strictly increasing trajectory.
    Unbounded { witness: Trajectory },
    Inconclusive { probe: u64 },
}

/// Classifies the orbit of `f0` under `spec`. `probe` bounds the number of
/// steps spent looking for residue cycles and the length of growth witnesses.
pub fn classify_boundedness(f0: &Labeling, spec: &TransformSpec, probe: u64) -> Result<Boundedness> {
    if probe < 1 {
        return Err(Error::InvalidParameter("probe must be >= 1".into()));
    }
    if f0.is_empty() {
        return Err(Error::InvalidParameter("empty labeling".into()));
    }
    let witness = |growth_steps: u64| -> Result<Boundedness> {
        // Smallest label that actually grows keeps the witness short.
        let (vertex, start) = f0
            .iter()
            .filter(|(_, x)| spec.apply(x).map(|y| &y > *x).unwrap_or(false))
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(v, x)| (v, x.clone()))
            .expect("caller checked that some label grows");
        let mut labels = vec![start];
        for _ in 0..growth_steps.min(probe) {
            let next = spec.apply(labels.last().unwrap())?;
            labels.push(next);
        }
        Ok(Boundedness::Unbounded { witness: Trajectory { vertex, labels } })
    };
    match *spec {
        TransformSpec::Power { k: 1 } => Ok(Boundedness::Bounded {
            period: 1,
            preperiod: 0,
            label_set: f0.values().cloned().collect::<BTreeSet<_>>().into_iter().collect(),
        }),
        TransformSpec::Power { .. } if f0.values().all(|x| x.is_one()) => Ok(Boundedness::Bounded {
            period: 1,
            preperiod: 0,
            label_set: vec![BigUint::one()],
        }),
        TransformSpec::Power { .. } => witness(3),
        TransformSpec::PrimeIndex => witness(3),
        TransformSpec::Affine { .. } | TransformSpec::AdditiveShift { .. } => witness(5),
        TransformSpec::ModularPower { .. } => {
            let mut period = 1u64;
            let mut preperiod = 0u64;
            let mut all = BTreeSet::new();
            for (_, x0) in f0.iter() {
                let mut seen: HashMap<BigUint, u64> = HashMap::from([(x0.clone(), 0)]);
                all.insert(x0.clone());
                let mut x = x0.clone();
                let mut found = None;
                for s in 1..=probe {
                    x = spec.apply(&x)?;
                    if let Some(&first) = seen.get(&x) {
                        found = Some((first, s - first));
                        break;
                    }
                    seen.insert(x.clone(), s);
                    all.insert(x.clone());
                }
                let Some((mu, cycle)) = found else {
                    return Ok(Boundedness::Inconclusive { probe });
                };
                period = period.lcm(&cycle);
                preperiod = preperiod.max(mu);
            }
            Ok(Boundedness::Bounded { period, preperiod, label_set: all.into_iter().collect() })
        }
    }
}

/// Multiplicative order of every label modulo `n`.
pub fn vertex_order_profile(f0: &Labeling, n: u64) -> Result<BTreeMap<VertexId, u64>> {
    let ctx = ModulusContext::new(&BigUint::from(n))?;
    orders_in(&ctx, f0)
}

fn orders_in(ctx: &ModulusContext, f0: &Labeling) -> Result<BTreeMap<VertexId, u64>> {
    f0.iter()
        .map(|(v, x)| {
            let order = ctx.order(x).map_err(|e| match e {
                Error::NotAUnit { modulus, .. } => Error::NotAUnit {
                    value: x.clone(),
                    modulus,
                    vertex: Some(v),
                },
                other => other,
            })?;
            Ok((v, order.to_u64().expect("order below a u64 modulus")))
        })
        .collect()
}

/// Vertex orders, the graph period (their lcm) and how it relates to
/// Carmichael's function of the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodReport {
    pub modulus: u64,
    pub vertex_orders: BTreeMap<VertexId, u64>,
    pub lambda_g: u64,
    pub lambda: u64,
    /// `lambda_g | lambda`.
    pub divides: bool,
    /// Whether the labels generate the full unit group; `None` if the group
    /// was too large to close.
    pub generates: Option<bool>,
    /// `lambda_g == lambda`.
    pub equality: bool,
    /// `f0(v)^lambda_g = 1 (mod n)` checked directly for every vertex.
    pub certified: bool,
}

pub fn graph_period(f0: &Labeling, n: u64) -> Result<PeriodReport> {
    let n_big = BigUint::from(n);
    let ctx = ModulusContext::new(&n_big)?;
    let vertex_orders = orders_in(&ctx, f0)?;
    let lambda_g = vertex_orders.values().fold(1u64, |acc, &o| acc.lcm(&o));
    let lambda = ctx.lambda.to_u64().expect("lambda below a u64 modulus");
    let labels: Vec<BigUint> = f0.values().cloned().collect();
    let generates = match generates_full_group(&labels, &n_big) {
        Ok(b) => Some(b),
        Err(Error::ClosureBudget { .. }) => None,
        Err(e) => return Err(e),
    };
    let exponent = BigUint::from(lambda_g);
    let certified = labels.iter().all(|x| x.modpow(&exponent, &n_big).is_one());
    Ok(PeriodReport {
        modulus: n,
        vertex_orders,
        lambda_g,
        lambda,
        divides: lambda % lambda_g == 0,
        generates,
        equality: lambda_g == lambda,
        certified,
    })
}

/// Whether every label returns to its start after `period` steps of
/// multiplication by itself, i.e. `f0(v)^period = 1 (mod n)` for all `v`.
pub fn verify_modular_period(g: &Graph, f0: &Labeling, n: u64, period: u64) -> Result<bool> {
    f0.check_total(g)?;
    let n_big = BigUint::from(n);
    let exponent = BigUint::from(period);
    let mut all = true;
    for (v, x) in f0.iter() {
        if !x.gcd(&n_big).is_one() {
            return Err(Error::NotAUnit { value: x.clone(), modulus: n_big, vertex: Some(v) });
        }
        all &= x.modpow(&exponent, &n_big).is_one();
    }
    Ok(all)
}

/// Labels (distinct primes) generating the unit group mod `n`.
pub fn find_generating_labels(n: u64) -> Result<Labeling> {
    Labeling::from_values(crate::number_theory::generating_primes(&BigUint::from(n))?)
}
