//! Incremental segmented sieve backing `nth_prime`.

use std::sync::Mutex;

use crate::error::{Error, Result};

/// Largest prime index served by the process-wide sieve (p_1e7 = 179424673).
pub const DEFAULT_SIEVE_BUDGET: u64 = 10_000_000;

// p_(2e8) still fits in a u32.
const MAX_BUDGET: u64 = 200_000_000;
const SEGMENT: u64 = 1 << 18;

/// Cache of the primes found so far, extended one segment at a time.
#[derive(Debug)]
pub struct PrimeSieve {
    budget: u64,
    state: Mutex<SieveState>,
}

#[derive(Debug)]
struct SieveState {
    primes: Vec<u32>,
    /// Every prime below `limit` is in `primes`.
    limit: u64,
}

static GLOBAL: PrimeSieve = PrimeSieve::new(DEFAULT_SIEVE_BUDGET);

/// The `i`-th prime, `p_1 = 2`, from the process-wide sieve.
pub fn nth_prime(i: u64) -> Result<u64> {
    GLOBAL.nth(i)
}

impl PrimeSieve {
    pub const fn new(budget: u64) -> Self {
        let budget = if budget > MAX_BUDGET { MAX_BUDGET } else { budget };
        PrimeSieve {
            budget,
            state: Mutex::new(SieveState {
                primes: Vec::new(),
                limit: 2,
            }),
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn nth(&self, i: u64) -> Result<u64> {
        if i == 0 {
            return Err(Error::InvalidParameter("prime indices start at 1".into()));
        }
        if i > self.budget {
            return Err(Error::SieveBudget {
                index: i,
                budget: self.budget,
            });
        }
        let mut state = self.state.lock().unwrap_or_else(|e| e.into_inner());
        while (state.primes.len() as u64) < i {
            state.extend();
        }
        Ok(state.primes[i as usize - 1] as u64)
    }

    /// Number of primes cached so far.
    pub fn cached(&self) -> usize {
        self.state.lock().unwrap_or_else(|e| e.into_inner()).primes.len()
    }
}

impl SieveState {
    fn extend(&mut self) {
        let lo = self.limit;
        let hi = lo + SEGMENT;
        if self.primes.is_empty() || (*self.primes.last().unwrap() as u64).pow(2) < hi {
            // Base primes up to sqrt(hi) must be known before sieving [lo, hi).
            let base_limit = (hi as f64).sqrt() as u64 + 1;
            if base_limit > lo {
                self.primes = simple_sieve(hi);
                self.limit = hi;
                return;
            }
        }
        let mut composite = vec![false; (hi - lo) as usize];
        for &p in &self.primes {
            let p = p as u64;
            if p * p >= hi {
                break;
            }
            let start = (p * p).max(lo.div_ceil(p) * p);
            let mut m = start;
            while m < hi {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        self.primes.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(off, _)| (lo + off as u64) as u32),
        );
        self.limit = hi;
    }
}

fn simple_sieve(limit: u64) -> Vec<u32> {
    let limit = limit as usize;
    let mut composite = vec![false; limit];
    let mut out = Vec::new();
    for i in 2..limit {
        if !composite[i] {
            out.push(i as u32);
            let mut m = i * i;
            while m < limit {
                composite[m] = true;
                m += i;
            }
        }
    }
    out
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    simple_sieve(limit + 1).into_iter().map(u64::from).collect()
}
