use std::fmt;
use std::ops::{Add, Mul};

use super::{gcd, Modulus};
use crate::error::{usage, Result};

/// An element `a + bi + cj + dk` of `L_n`, stored as canonical residues in `0..n`.
///
/// Equality and ordering are coordinate-wise on `(a, b, c, d)`; values taken
/// modulo different `n` never compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LipschitzQuaternion {
    n: u32,
    coords: [u32; 4],
}

impl LipschitzQuaternion {
    /// Builds `a + bi + cj + dk` reduced modulo `n`. Negative inputs are reduced too.
    pub fn new(n: &Modulus, a: i64, b: i64, c: i64, d: i64) -> Self {
        let m = n.value() as i64;
        let r = |x: i64| x.rem_euclid(m) as u32;
        LipschitzQuaternion {
            n: n.value(),
            coords: [r(a), r(b), r(c), r(d)],
        }
    }

    pub(crate) fn from_raw(n: u32, coords: [u32; 4]) -> Self {
        debug_assert!(coords.iter().all(|&x| x < n));
        LipschitzQuaternion { n, coords }
    }

    pub fn zero(n: &Modulus) -> Self {
        Self::from_raw(n.value(), [0; 4])
    }

    pub fn one(n: &Modulus) -> Self {
        Self::from_raw(n.value(), [1, 0, 0, 0])
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// The coordinates `[a, b, c, d]`.
    pub fn coords(&self) -> [u32; 4] {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0; 4]
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let n = self.n;
        let mut out = [0; 4];
        for (o, (x, y)) in out.iter_mut().zip(self.coords.iter().zip(other.coords)) {
            *o = (x + y) % n;
        }
        Ok(Self::from_raw(n, out))
    }

    /// Hamilton product reduced modulo `n`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::from_raw(
            self.n,
            hamilton(&self.coords, &other.coords, self.n),
        ))
    }

    /// Multiplies every coordinate by an integer scalar.
    pub fn scale(&self, s: u32) -> Self {
        let n = self.n as u64;
        let mut out = self.coords;
        for x in &mut out {
            *x = ((*x as u64 * s as u64) % n) as u32;
        }
        Self::from_raw(self.n, out)
    }

    pub fn conj(&self) -> Self {
        let n = self.n;
        let neg = |x: u32| (n - x) % n;
        let [a, b, c, d] = self.coords;
        Self::from_raw(n, [a, neg(b), neg(c), neg(d)])
    }

    /// The norm `a^2 + b^2 + c^2 + d^2` modulo `n`.
    pub fn norm(&self) -> u32 {
        let s: u64 = self.coords.iter().map(|&x| x as u64 * x as u64).sum();
        (s % self.n as u64) as u32
    }

    /// `x` is invertible iff its norm is a unit of `Z_n`, because
    /// `x * conj(x) = N(x)` is central and the norm is multiplicative.
    pub fn is_unit(&self) -> bool {
        gcd(self.norm() as u64, self.n as u64) == 1
    }

    /// Nonzero zero divisors are the vertices of the zero-divisor graph.
    pub fn is_vertex(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(usage(format!(
                "quaternions over different moduli ({} and {})",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

impl Add for LipschitzQuaternion {
    type Output = LipschitzQuaternion;

    /// Panics on mismatched moduli; use [`LipschitzQuaternion::checked_add`] otherwise.
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("modulus mismatch")
    }
}

impl Mul for LipschitzQuaternion {
    type Output = LipschitzQuaternion;

    /// Panics on mismatched moduli; use [`LipschitzQuaternion::checked_mul`] otherwise.
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("modulus mismatch")
    }
}

impl fmt::Display for LipschitzQuaternion {
    /// Formats as `2+3i+k`, omitting zero terms and unit coefficients; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (x, unit) in self.coords.iter().zip(["", "i", "j", "k"]) {
            if *x == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if *x != 1 || unit.is_empty() {
                write!(f, "{x}")?;
            }
            f.write_str(unit)?;
        }
        Ok(())
    }
}

/// Hamilton product of raw coordinate arrays modulo `n`.
#[inline]
pub(crate) fn hamilton(x: &[u32; 4], y: &[u32; 4], n: u32) -> [u32; 4] {
    let [a1, b1, c1, d1] = x.map(u64::from);
    let [a2, b2, c2, d2] = y.map(u64::from);
    let n = n as u64;
    let sub = |pos: u64, neg: u64| ((pos % n + n - neg % n) % n) as u32;
    [
        sub(a1 * a2, b1 * b2 + c1 * c2 + d1 * d2),
        sub(a1 * b2 + b1 * a2 + c1 * d2, d1 * c2),
        sub(a1 * c2 + c1 * a2 + d1 * b2, b1 * d2),
        sub(a1 * d2 + b1 * c2 + d1 * a2, c1 * b2),
    ]
}

/// Whether the Hamilton product `xy` vanishes modulo `n`; exits on the first nonzero coordinate.
#[inline]
pub(crate) fn product_is_zero(x: &[u32; 4], y: &[u32; 4], n: u32) -> bool {
    let [a1, b1, c1, d1] = x.map(u64::from);
    let [a2, b2, c2, d2] = y.map(u64::from);
    let n = n as u64;
    let eq = |pos: u64, neg: u64| pos % n == neg % n;
    eq(a1 * a2, b1 * b2 + c1 * c2 + d1 * d2)
        && eq(a1 * b2 + b1 * a2 + c1 * d2, d1 * c2)
        && eq(a1 * c2 + c1 * a2 + d1 * b2, b1 * d2)
        && eq(a1 * d2 + b1 * c2 + d1 * a2, c1 * b2)
}

fn all_elements(n: u32) -> impl Iterator<Item = [u32; 4]> {
    (0..n).flat_map(move |a| {
        (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |d| [a, b, c, d])))
    })
}

/// All nonzero zero divisors of `L_n` in lexicographic `(a, b, c, d)` order.
pub fn enumerate_vertices(n: &Modulus) -> Vec<LipschitzQuaternion> {
    let m = n.value();
    all_elements(m)
        .map(|c| LipschitzQuaternion::from_raw(m, c))
        .filter(LipschitzQuaternion::is_vertex)
        .collect()
}

/// Number of nonzero zero divisors of `L_n`, counted without materializing them.
pub fn count_vertices(n: &Modulus) -> u64 {
    let m = n.value();
    all_elements(m)
        .filter(|c| LipschitzQuaternion::from_raw(m, *c).is_vertex())
        .count() as u64
}
