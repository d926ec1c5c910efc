//! Integer factorization: trial division for small factors, Pollard-Brent
//! rho for the rest.
//!
//! Below 2^64 the result is always complete and every prime is certified by
//! the deterministic Miller-Rabin test. Above that, cofactors are split with
//! a bounded number of rho iterations; a cofactor that resists yields
//! [`Error::FactorizationIncomplete`].

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::primality::{is_prime_u64, mul_mod, primality, Primality};
use crate::error::{Error, Result};

const TRIAL_BOUND: u64 = 1 << 10;
const BIG_TRIAL_BOUND: u64 = 1 << 16;
/// Rho steps for the first seed; later seeds only retry degenerate cycles.
const RHO_FIRST: u64 = 1 << 20;
const RHO_RETRY: u64 = 1 << 16;

/// Prime-power factorization, sorted by prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub factors: Vec<(BigUint, u32)>,
    /// False when some factor above 2^64 is only a probable prime.
    pub certified: bool,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization {
            factors: Vec::new(),
            certified: true,
        }
    }

    pub fn from_map(map: BTreeMap<BigUint, u32>, certified: bool) -> Self {
        Factorization {
            factors: map.into_iter().filter(|(_, e)| *e > 0).collect(),
            certified,
        }
    }

    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factors `n >= 1`. `factorize(1)` is the empty factorization.
pub fn factorize(n: &BigUint) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidParameter("cannot factor 0".into()));
    }
    if let Some(small) = n.to_u64() {
        let map = factorize_u64(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect();
        return Ok(Factorization::from_map(map, true));
    }

    let mut map: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();
    let mut d = 2u64;
    while d < BIG_TRIAL_BOUND {
        let dd = BigUint::from(d);
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            *map.entry(dd.clone()).or_default() += 1;
        }
        d += if d == 2 { 1 } else { 2 };
    }

    let mut certified = true;
    let mut stack = vec![rest];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if let Some(small) = c.to_u64() {
            for (p, e) in factorize_u64(small) {
                *map.entry(BigUint::from(p)).or_default() += e;
            }
            continue;
        }
        match primality(&c) {
            Primality::Prime => {
                *map.entry(c).or_default() += 1;
            }
            Primality::ProbablePrime => {
                certified = false;
                *map.entry(c).or_default() += 1;
            }
            Primality::Composite => {
                let split = (1u64..=8)
                    .find_map(|seed| rho_big(&c, seed, if seed == 1 { RHO_FIRST } else { RHO_RETRY }));
                match split {
                    Some(f) => {
                        let other = &c / &f;
                        stack.push(f);
                        stack.push(other);
                    }
                    None => {
                        return Err(Error::FactorizationIncomplete {
                            n: n.clone(),
                            cofactor: c,
                        })
                    }
                }
            }
        }
    }
    Ok(Factorization::from_map(map, certified))
}

/// Complete factorization of a machine word, ascending by prime.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: BTreeMap<u64, u32> = BTreeMap::new();
    if n <= 1 {
        return Vec::new();
    }
    let mut d = 2u64;
    while d < TRIAL_BOUND && d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            *out.entry(d).or_default() += 1;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let mut stack = vec![n];
        while let Some(c) = stack.pop() {
            if c == 1 {
                continue;
            }
            if c < TRIAL_BOUND * TRIAL_BOUND || is_prime_u64(c) {
                // Everything below TRIAL_BOUND^2 left after trial division is prime.
                *out.entry(c).or_default() += 1;
                continue;
            }
            let f = (1u64..).find_map(|seed| rho_u64(c, seed)).unwrap();
            stack.push(f);
            stack.push(c / f);
        }
    }
    out.into_iter().collect()
}

/// One Pollard-Brent attempt on an odd composite; returns a nontrivial factor.
fn rho_u64(n: u64, seed: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let c = seed;
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let mut y = seed + 1;
    let mut g = 1u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut x = y;
    let mut ys = y;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint, seed: u64, budget: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let c = BigUint::from(seed);
    let f = |x: &BigUint| (x * x + &c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut y = BigUint::from(seed + 1);
    let mut g = BigUint::one();
    let mut q = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut r = 1u64;
    let mut spent = 0u64;
    const BATCH: u64 = 128;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                q = (&q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        spent += r;
        if spent > budget {
            return None;
        }
        r *= 2;
    }
    if &g == n {
        for _ in 0..budget {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (!g.is_one() && &g != n).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn pairs(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors.iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(pairs(&factorize(&big(561)).unwrap()), vec![(3, 1), (11, 1), (17, 1)]);
        assert!(factorize(&big(1)).unwrap().factors.is_empty());
        assert_eq!(pairs(&factorize(&big(576)).unwrap()), vec![(2, 6), (3, 2)]);
        assert!(factorize(&big(0)).is_err());
    }

    #[test]
    fn semiprimes_near_word_size() {
        let (p, q) = (4294967291u64, 4294967279u64);
        assert_eq!(factorize_u64(p * q), vec![(q, 1), (p, 1)]);
        let n = 999999999989u64 * 1000003;
        assert_eq!(factorize_u64(n), vec![(1000003, 1), (999999999989, 1)]);
    }

    #[test]
    fn beyond_64_bits() {
        let m61 = (1u64 << 61) - 1;
        let n = big(1_000_003) * big(m61) * big(4_294_967_311);
        let f = factorize(&n).unwrap();
        assert_eq!(f.value(), n);
        assert_eq!(pairs(&f), vec![(1_000_003, 1), (4_294_967_311, 1), (m61, 1)]);
        assert!(f.certified);
    }

    #[test]
    fn probable_prime_factor_is_flagged() {
        let m89 = (BigUint::one() << 89u32) - 1u32;
        let f = factorize(&(&m89 * 3u32)).unwrap();
        assert_eq!(f.factors, vec![(big(3), 1), (m89, 1)]);
        assert!(!f.certified);
    }

    #[test]
    fn prime_powers_beyond_64_bits() {
        let p = big(4294967311);
        let n = p.pow(3) * 12u32;
        let f = factorize(&n).unwrap();
        assert_eq!(f.value(), n);
        assert_eq!(f.factors.last().unwrap(), &(p, 3));
        assert!(f.certified);
    }
}
