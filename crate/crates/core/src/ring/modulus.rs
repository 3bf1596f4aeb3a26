use std::fmt;

use crate::error::{usage, Result};

/// Largest supported modulus. Coordinates stay below `2^15`, so the sum of
/// four coordinate products fits a `u64` without intermediate reduction.
pub const MAX_MODULUS: u32 = 1 << 15;

/// A modulus `n >= 2` together with its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    n: u32,
    factors: Vec<(u32, u32)>,
}

impl Modulus {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(usage(format!("modulus must be at least 2, got {n}")));
        }
        if n > MAX_MODULUS {
            return Err(usage(format!(
                "modulus {n} exceeds the supported maximum {MAX_MODULUS}"
            )));
        }
        Ok(Modulus {
            n,
            factors: factorize(n),
        })
    }

    /// Accepts only odd primes.
    pub fn odd_prime(p: u32) -> Result<Self> {
        let m = Modulus::new(p)?;
        if !m.is_odd_prime() {
            return Err(usage(format!("{p} is not an odd prime")));
        }
        Ok(m)
    }

    pub fn value(&self) -> u32 {
        self.n
    }

    /// Prime factorization as ascending `(prime, exponent)` pairs.
    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn is_odd_prime(&self) -> bool {
        self.is_prime() && self.n != 2
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    /// The exponent `t` when `n = 2^t`.
    pub fn two_power_exponent(&self) -> Option<u32> {
        match self.factors.as_slice() {
            [(2, t)] => Some(*t),
            _ => None,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)
    }
}

fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
