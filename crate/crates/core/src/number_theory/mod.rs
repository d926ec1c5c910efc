//! Exact integer arithmetic: gcd, factorization, primes, multiplicative
//! orders, Carmichael's function and unit-group computations.

mod factor;
mod group;
mod order;
mod primality;
mod sieve;

use num_bigint::BigUint;
use num_integer::Integer;

pub use factor::{factorize, factorize_u64, Factorization};
pub use group::{
    cyclic_subgroup, generates_full_group, generating_primes, generates_full_group_with_budget, in_cyclic_subgroup,
    DEFAULT_CLOSURE_BUDGET,
};
pub use order::{
    carmichael_lambda, carmichael_numbers_up_to, euler_phi, korselt_check, multiplicative_order,
    multiplicative_order_u64, DivisibilityCheck, KorseltCertificate, ModulusContext,
};
pub use primality::{is_prime, is_prime_u64, primality, Primality};
pub use sieve::{nth_prime, primes_up_to, PrimeSieve, DEFAULT_SIEVE_BUDGET};

/// `gcd(0, 0) = 0`, which callers never treat as coprime.
pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

pub fn lcm(a: &BigUint, b: &BigUint) -> BigUint {
    a.lcm(b)
}
