//! Vertex labelings: canonical constructions for the standard families and
//! verification of prime and coprime labelings.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph, VertexId};
use crate::number_theory::nth_prime;

/// An assignment of positive integers to vertices.
///
/// Serializes as `{"labels": {"0": "1", "1": "2", ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "RawLabeling", into = "RawLabeling")]
pub struct Labeling {
    labels: BTreeMap<VertexId, BigUint>,
}

#[derive(Serialize, Deserialize)]
struct RawLabeling {
    #[serde(with = "crate::serde_util::decimal_map")]
    labels: BTreeMap<VertexId, BigUint>,
}

impl TryFrom<RawLabeling> for Labeling {
    type Error = Error;

    fn try_from(raw: RawLabeling) -> Result<Self> {
        Labeling::from_map(raw.labels)
    }
}

impl From<Labeling> for RawLabeling {
    fn from(l: Labeling) -> Self {
        RawLabeling { labels: l.labels }
    }
}

impl Labeling {
    /// Labels vertices `0, 1, 2, ...` in order.
    pub fn from_values<I, T>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        Labeling::from_map(values.into_iter().map(Into::into).enumerate().collect())
    }

    pub fn from_map(labels: BTreeMap<VertexId, BigUint>) -> Result<Self> {
        if let Some((&v, _)) = labels.iter().find(|(_, x)| x.is_zero()) {
            return Err(Error::NonPositiveLabel(v));
        }
        Ok(Labeling { labels })
    }

    pub fn get(&self, v: VertexId) -> Option<&BigUint> {
        self.labels.get(&v)
    }

    /// Label of `v`; panics if absent. Use after [`Labeling::check_total`].
    pub fn label(&self, v: VertexId) -> &BigUint {
        &self.labels[&v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &BigUint)> {
        self.labels.iter().map(|(&v, x)| (v, x))
    }

    pub fn values(&self) -> impl Iterator<Item = &BigUint> {
        self.labels.values()
    }

    pub fn as_map(&self) -> &BTreeMap<VertexId, BigUint> {
        &self.labels
    }

    /// Errors unless the labeling covers exactly the vertices of `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if let Some(v) = g.vertices().find(|v| !self.labels.contains_key(v)) {
            return Err(Error::PartialLabeling(v));
        }
        if let Some(&v) = self.labels.keys().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::ExtraneousVertex(v));
        }
        Ok(())
    }

    /// First pair `u < v` (in vertex order) sharing a label.
    pub fn duplicate(&self) -> Option<(VertexId, VertexId)> {
        let mut seen: HashMap<&BigUint, VertexId> = HashMap::new();
        for (&v, x) in &self.labels {
            if let Some(&u) = seen.get(x) {
                return Some((u, v));
            }
            seen.insert(x, v);
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeViolation {
    pub edge: (VertexId, VertexId),
    #[serde(with = "crate::serde_util::decimal")]
    pub gcd: BigUint,
}

/// Result of checking a labeling against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub violations: Vec<EdgeViolation>,
    pub injective: bool,
    pub duplicate: Option<(VertexId, VertexId)>,
}

/// Checks injectivity and every edge; all violating edges are listed.
pub fn verify_coprime(g: &Graph, f: &Labeling) -> Result<VerifyReport> {
    f.check_total(g)?;
    let duplicate = f.duplicate();
    let violations: Vec<_> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let d = f.label(u).gcd(f.label(v));
            (!d.is_one()).then_some(EdgeViolation { edge: (u, v), gcd: d })
        })
        .collect();
    Ok(VerifyReport {
        ok: violations.is_empty() && duplicate.is_none(),
        violations,
        injective: duplicate.is_none(),
        duplicate,
    })
}

/// A prime labeling is a coprime labeling that is a bijection onto `1..=|V|`.
pub fn verify_prime_labeling(g: &Graph, f: &Labeling) -> bool {
    let n = g.vertex_count();
    let onto = f.values().all(|x| x.to_usize().is_some_and(|x| (1..=n).contains(&x)));
    onto && matches!(verify_coprime(g, f), Ok(report) if report.ok)
}

/// Canonical time-zero labeling of a family member.
///
/// * path, cycle: `f(v_i) = i + 1` (labels `1..=n`)
/// * wheel: hub `1`, rim vertex `i` gets the `i`-th prime
/// * hypercube: the even-weight part (containing vertex 0) gets the first
///   `2^(n-1)` primes and the odd-weight part the next `2^(n-1)`, each in
///   ascending vertex-id order
/// * complete: `1` followed by the first `n - 1` primes
pub fn canonical_initial_labeling(family: Family, n: usize) -> Result<Labeling> {
    let g = Graph::family(family, n)?;
    let prime = |i: usize| nth_prime(i as u64).map(BigUint::from);
    let labels: Vec<BigUint> = match family {
        Family::Path | Family::Cycle => (1..=n).map(BigUint::from).collect(),
        Family::Wheel | Family::Complete => {
            let rim = if family == Family::Wheel { n } else { n - 1 };
            std::iter::once(Ok(BigUint::one()))
                .chain((1..=rim).map(prime))
                .collect::<Result<_>>()?
        }
        Family::Hypercube => {
            let parts = g.bipartition().expect("hypercubes are bipartite");
            let mut labels = vec![BigUint::zero(); g.vertex_count()];
            for (i, v) in parts.part0.iter().chain(&parts.part1).enumerate() {
                labels[*v] = prime(i + 1)?;
            }
            labels
        }
    };
    Labeling::from_values(labels)
}

/// Caveat attached to canonical labelings that lie outside the family's
/// usual construction, though they still verify.
pub fn canonical_scope_note(family: Family, n: usize) -> Option<&'static str> {
    (family == Family::Cycle && n.is_multiple_of(2))
        .then_some("even cycle: valid though outside the odd-cycle construction's stated scope")
}

/// Labels the two sides of a bipartite graph with disjoint sets of primes:
/// `part0` takes `p_1, p_3, p_5, ...` and `part1` takes `p_2, p_4, ...`,
/// each in ascending vertex-id order.
pub fn bipartite_prime_labeling(g: &Graph) -> Result<Labeling> {
    let parts = g.two_colouring().map_err(Error::NotBipartite)?;
    let mut labels = BTreeMap::new();
    for (offset, part) in [(1, &parts.part0), (2, &parts.part1)] {
        for (i, &v) in part.iter().enumerate() {
            labels.insert(v, BigUint::from(nth_prime((2 * i + offset) as u64)?));
        }
    }
    Labeling::from_map(labels)
}
