use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::factor::{factorize, Factorization};
use crate::error::{Error, Result};

/// A modulus together with the data needed for order computations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulusContext {
    pub n: BigUint,
    pub factorization: Factorization,
    pub lambda: BigUint,
    pub square_free: bool,
    /// Factorization of `lambda`, assembled from the prime-power parts of `n`.
    lambda_factorization: Factorization,
}

impl ModulusContext {
    pub fn new(n: &BigUint) -> Result<Self> {
        if n < &BigUint::from(2u32) {
            return Err(Error::InvalidParameter(format!("modulus must be >= 2, got {n}")));
        }
        let factorization = factorize(n)?;
        let (lambda, lambda_factorization) = lambda_parts(&factorization)?;
        Ok(ModulusContext {
            n: n.clone(),
            square_free: factorization.is_square_free(),
            factorization,
            lambda,
            lambda_factorization,
        })
    }

    pub fn euler_phi(&self) -> BigUint {
        euler_phi(&self.factorization)
    }

    pub fn is_unit(&self, a: &BigUint) -> bool {
        a.gcd(&self.n).is_one()
    }

    /// Least `T > 0` with `a^T = 1 (mod n)`, found by stripping prime
    /// factors from `lambda(n)` while the power stays 1.
    pub fn order(&self, a: &BigUint) -> Result<BigUint> {
        let a = a % &self.n;
        if !self.is_unit(&a) {
            return Err(Error::NotAUnit {
                value: a,
                modulus: self.n.clone(),
                vertex: None,
            });
        }
        let mut order = self.lambda.clone();
        for (q, e) in &self.lambda_factorization.factors {
            for _ in 0..*e {
                let candidate = &order / q;
                if a.modpow(&candidate, &self.n).is_one() {
                    order = candidate;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }
}

pub fn euler_phi(f: &Factorization) -> BigUint {
    f.factors.iter().fold(BigUint::one(), |acc, (p, e)| {
        acc * p.pow(e - 1) * (p - 1u32)
    })
}

/// lambda(p^e): phi(p^e) for odd p and for 2, 4; 2^(e-2) for 2^e with e >= 3.
fn prime_power_lambda(p: &BigUint, e: u32) -> BigUint {
    if p == &BigUint::from(2u32) && e >= 3 {
        BigUint::one() << (e - 2)
    } else {
        p.pow(e - 1) * (p - 1u32)
    }
}

fn lambda_parts(f: &Factorization) -> Result<(BigUint, Factorization)> {
    let mut lambda = BigUint::one();
    let mut exps: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut certified = f.certified;
    let two = BigUint::from(2u32);
    for (p, e) in &f.factors {
        lambda = lambda.lcm(&prime_power_lambda(p, *e));
        // Prime factors of p^(e-1) (p - 1), or of 2^(e-2).
        let mut local: BTreeMap<BigUint, u32> = BTreeMap::new();
        if p == &two {
            let k = if *e >= 3 { e - 2 } else { e - 1 };
            if k > 0 {
                local.insert(two.clone(), k);
            }
        } else {
            if *e > 1 {
                local.insert(p.clone(), e - 1);
            }
            let pm1 = factorize(&(p - 1u32))?;
            certified &= pm1.certified;
            for (q, k) in pm1.factors {
                *local.entry(q).or_default() += k;
            }
        }
        for (q, k) in local {
            let slot = exps.entry(q).or_default();
            *slot = (*slot).max(k);
        }
    }
    let lf = Factorization::from_map(exps, certified);
    debug_assert_eq!(lf.value(), lambda);
    Ok((lambda, lf))
}

/// Carmichael's function: the exponent of the unit group mod `n`.
pub fn carmichael_lambda(n: &BigUint) -> Result<BigUint> {
    if n.is_zero() {
        return Err(Error::InvalidParameter("lambda(0) is undefined".into()));
    }
    if n.is_one() {
        return Ok(BigUint::one());
    }
    Ok(ModulusContext::new(n)?.lambda)
}

pub fn multiplicative_order(a: &BigUint, n: &BigUint) -> Result<BigUint> {
    ModulusContext::new(n)?.order(a)
}

/// Convenience wrapper for machine-sized arguments.
pub fn multiplicative_order_u64(a: u64, n: u64) -> Result<u64> {
    multiplicative_order(&a.into(), &n.into()).map(|o| o.to_u64().expect("order < n"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityCheck {
    #[serde(with = "crate::serde_util::decimal")]
    pub p: BigUint,
    /// Whether `p - 1` divides `n - 1`.
    pub divides: bool,
}

/// Evidence for or against Korselt's criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KorseltCertificate {
    #[serde(with = "crate::serde_util::decimal")]
    pub n: BigUint,
    pub is_carmichael: bool,
    pub composite: bool,
    pub square_free: bool,
    pub divisibility: Vec<DivisibilityCheck>,
    /// First failing condition, when `is_carmichael` is false.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

pub fn korselt_check(n: &BigUint) -> Result<KorseltCertificate> {
    if n < &BigUint::from(2u32) {
        return Err(Error::InvalidParameter(format!("Korselt check needs n >= 2, got {n}")));
    }
    let f = factorize(n)?;
    let n_minus_one = n - 1u32;
    let composite = !f.is_prime();
    let square_free = f.is_square_free();
    let divisibility: Vec<_> = f
        .primes()
        .map(|p| DivisibilityCheck {
            p: p.clone(),
            divides: (&n_minus_one % (p - 1u32)).is_zero(),
        })
        .collect();
    let all_divide = divisibility.iter().all(|d| d.divides);
    let reason = if !composite {
        Some("prime".to_string())
    } else if !square_free {
        Some("not square-free".to_string())
    } else if !all_divide {
        let p = &divisibility.iter().find(|d| !d.divides).unwrap().p;
        Some(format!("{} does not divide {}", p - 1u32, n_minus_one))
    } else {
        None
    };
    Ok(KorseltCertificate {
        n: n.clone(),
        is_carmichael: composite && square_free && all_divide,
        composite,
        square_free,
        divisibility,
        reason,
    })
}

/// Carmichael numbers `<= limit`, ascending.
pub fn carmichael_numbers_up_to(limit: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    // Carmichael numbers are odd with at least three prime factors.
    let mut n = 3u64;
    while n <= limit {
        if korselt_check(&n.into())?.is_carmichael {
            out.push(n);
        }
        n += 2;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(a: u64, n: u64) -> u64 {
        let mut x = a % n;
        let mut t = 1;
        while x != 1 {
            x = x * a % n;
            t += 1;
        }
        t
    }

    fn brute_lambda(n: u64) -> u64 {
        (1..n)
            .filter(|a| a.gcd(&n) == 1)
            .map(|a| brute_order(a, n))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(carmichael_lambda(&561u32.into()).unwrap(), 80u32.into());
        assert_eq!(carmichael_lambda(&8u32.into()).unwrap(), 2u32.into());
        assert_eq!(carmichael_lambda(&1u32.into()).unwrap(), 1u32.into());
        assert_eq!(carmichael_lambda(&101u32.into()).unwrap(), 100u32.into());
        assert_eq!(carmichael_lambda(&2u32.into()).unwrap(), 1u32.into());
        assert_eq!(carmichael_lambda(&4u32.into()).unwrap(), 2u32.into());
    }

    #[test]
    fn lambda_matches_brute_force() {
        for n in 2..600u64 {
            assert_eq!(carmichael_lambda(&n.into()).unwrap(), brute_lambda(n).into(), "n={n}");
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order_u64(1, 13).unwrap(), 1);
        assert_eq!(multiplicative_order_u64(2, 561).unwrap(), 40);
        assert_eq!(multiplicative_order_u64(3, 7).unwrap(), 6);
        assert!(matches!(multiplicative_order_u64(3, 561), Err(Error::NotAUnit { .. })));
    }

    #[test]
    fn order_matches_brute_force() {
        for n in 2..400u64 {
            let ctx = ModulusContext::new(&n.into()).unwrap();
            for a in (1..n).filter(|a| a.gcd(&n) == 1) {
                assert_eq!(ctx.order(&a.into()).unwrap(), brute_order(a, n).into(), "a={a} n={n}");
            }
        }
    }

    #[test]
    fn order_for_large_modulus() {
        // a^ord = 1, and dropping any prime factor of ord breaks that.
        let n = BigUint::from(1_000_000_007u64) * BigUint::from(998_244_353u64);
        let ctx = ModulusContext::new(&n).unwrap();
        let a = BigUint::from(5u32);
        let ord = ctx.order(&a).unwrap();
        assert!(a.modpow(&ord, &n).is_one());
        for (q, _) in &ctx.lambda_factorization.factors {
            if (&ord % q).is_zero() {
                assert!(!a.modpow(&(&ord / q), &n).is_one());
            }
        }
    }

    #[test]
    fn korselt_examples() {
        let c = korselt_check(&561u32.into()).unwrap();
        assert!(c.is_carmichael && c.composite && c.square_free);
        assert!(c.divisibility.iter().all(|d| d.divides));
        assert_eq!(c.divisibility.len(), 3);

        let c = korselt_check(&341u32.into()).unwrap();
        assert!(!c.is_carmichael && c.square_free);
        assert_eq!(c.divisibility[0], DivisibilityCheck { p: 11u32.into(), divides: true });
        assert_eq!(c.divisibility[1], DivisibilityCheck { p: 31u32.into(), divides: false });

        let c = korselt_check(&7u32.into()).unwrap();
        assert!(!c.is_carmichael && !c.composite);
        assert_eq!(c.reason.as_deref(), Some("prime"));
    }

    #[test]
    fn context_metadata() {
        let ctx = ModulusContext::new(&BigUint::from(561u32)).unwrap();
        assert!(ctx.square_free);
        assert_eq!(ctx.euler_phi(), 320u32.into());
        let ctx = ModulusContext::new(&BigUint::from(576u32)).unwrap();
        assert!(!ctx.square_free);
        assert_eq!(ctx.lambda, 48u32.into());
    }
}
