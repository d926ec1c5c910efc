use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::order::ModulusContext;
use super::primality::{is_prime_u64, mul_mod};
use crate::error::{Error, Result};

/// Default cap on the size of the unit group explored by closure.
pub const DEFAULT_CLOSURE_BUDGET: u64 = 1_000_000;

/// The cyclic subgroup `<p>` of the units mod the prime `q`, by iterating
/// powers of `p` until 1 recurs.
pub fn cyclic_subgroup(p: u64, q: u64) -> Result<BTreeSet<u64>> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("modulus must be a prime, got {q}")));
    }
    let g = p % q;
    if g == 0 {
        return Err(Error::DegenerateModulus { p: p.into(), q: q.into() });
    }
    let mut out = BTreeSet::from([1u64]);
    let mut x = g;
    while x != 1 {
        out.insert(x);
        x = mul_mod(x, g, q);
    }
    Ok(out)
}

/// Membership of `x` in `<generator>` modulo the prime `q`, without
/// enumerating the subgroup: in a cyclic group, `x` lies in the unique
/// subgroup of order `m` iff `x^m = 1`.
pub fn in_cyclic_subgroup(generator: &BigUint, x: &BigUint, q: &BigUint) -> Result<bool> {
    let g = generator % q;
    if g.is_zero() {
        return Err(Error::DegenerateModulus { p: generator.clone(), q: q.clone() });
    }
    let x = x % q;
    if x.is_zero() {
        return Ok(false);
    }
    let ctx = ModulusContext::new(q)?;
    let m = ctx.order(&g)?;
    Ok(x.modpow(&m, q).is_one())
}

/// Whether `generators` generate the whole unit group mod `n`, by literal
/// multiplicative closure compared against `phi(n)`.
pub fn generates_full_group(generators: &[BigUint], n: &BigUint) -> Result<bool> {
    generates_full_group_with_budget(generators, n, DEFAULT_CLOSURE_BUDGET)
}

pub fn generates_full_group_with_budget(
    generators: &[BigUint],
    n: &BigUint,
    budget: u64,
) -> Result<bool> {
    let ctx = ModulusContext::new(n)?;
    let phi = ctx.euler_phi();
    let over = || Error::ClosureBudget { modulus: n.clone(), budget };
    let phi = phi.to_u64().filter(|&p| p <= budget).ok_or_else(over)?;
    let modulus = n.to_u64().ok_or_else(over)?;
    let mut gens = Vec::with_capacity(generators.len());
    for s in generators {
        if !s.gcd(n).is_one() {
            return Err(Error::NotAUnit { value: s.clone(), modulus: n.clone(), vertex: None });
        }
        gens.push((s % n).to_u64().unwrap());
    }
    gens.sort_unstable();
    gens.dedup();
    let mut seen: HashSet<u64> = HashSet::from([1 % modulus]);
    let mut frontier = vec![1 % modulus];
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            let y = mul_mod(x, g, modulus);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    Ok(seen.len() as u64 == phi)
}

/// Primes coprime to `n`, chosen greedily in ascending order, each one
/// enlarging the subgroup generated so far, until the whole unit group is
/// reached. Primes are pairwise coprime, so the result is a valid coprime
/// labeling on any graph.
pub fn generating_primes(n: &BigUint) -> Result<Vec<BigUint>> {
    let ctx = ModulusContext::new(n)?;
    let over = || Error::ClosureBudget { modulus: n.clone(), budget: DEFAULT_CLOSURE_BUDGET };
    let phi = ctx.euler_phi().to_u64().filter(|&p| p <= DEFAULT_CLOSURE_BUDGET).ok_or_else(over)?;
    let modulus = n.to_u64().ok_or_else(over)?;
    let mut subgroup: HashSet<u64> = HashSet::from([1 % modulus]);
    let mut chosen: Vec<u64> = Vec::new();
    let mut candidate = 2u64;
    while (subgroup.len() as u64) < phi {
        if is_prime_u64(candidate) && modulus % candidate != 0 && !subgroup.contains(&(candidate % modulus)) {
            chosen.push(candidate);
            let gens: Vec<u64> = chosen.iter().map(|c| c % modulus).collect();
            let mut frontier: Vec<u64> = subgroup.iter().copied().collect();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = mul_mod(x, g, modulus);
                    if subgroup.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        candidate += 1;
    }
    Ok(chosen.into_iter().map(BigUint::from).collect())
}
