use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;
use crate::error::{Error, Result};
use crate::graph::build_reduced;
use crate::linalg::IntMatrix;

/// Largest matrix order accepted by [`charpoly_exact`]; covers `(p+1)^2` for `p <= 13`.
pub const MAX_CHARPOLY_ORDER: usize = 200;

/// `det(λI - M)` with exact integer coefficients, by Berkowitz's division-free
/// recurrence over growing leading principal submatrices.
pub fn charpoly_exact(m: &IntMatrix) -> Result<IntPoly> {
    let n = m.order();
    if n > MAX_CHARPOLY_ORDER {
        return Err(Error::Resource {
            what: "exact characteristic polynomial".into(),
            needed: n as u64,
            limit: MAX_CHARPOLY_ORDER as u64,
            hint: "a smaller matrix",
        });
    }
    // coefficients of the characteristic polynomial of the leading k x k block
    let mut c: Vec<BigInt> = vec![BigInt::from(1)];
    for k in 0..n {
        let a = m[(k, k)];
        // w[i] = R A_k^i C with R = row k and C = column k restricted to the block
        let mut v: Vec<BigInt> = (0..k).map(|r| BigInt::from(m[(r, k)])).collect();
        let mut w = Vec::with_capacity(k);
        for i in 0..k {
            w.push(dot(m.row(k), &v));
            if i + 1 < k {
                v = (0..k).map(|r| dot(&m.row(r)[..k], &v)).collect();
            }
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (j, cj) in c.iter().enumerate() {
            next[j + 1] += cj;
            next[j] -= cj * a;
        }
        // subtract R adj(λI - A_k) C
        for j in 0..k {
            let mut qj = BigInt::zero();
            for (i, wi) in w.iter().enumerate().take(k - j) {
                qj += &c[j + 1 + i] * wi;
            }
            next[j] -= qj;
        }
        c = next;
    }
    Ok(IntPoly::new(c))
}

fn dot(row: &[i64], v: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (&x, y) in row.iter().zip(v) {
        if x != 0 {
            acc += y * x;
        }
    }
    acc
}

/// `χ_{A_p} = λ^z (λ+1)^m χ_{B_p}`, with `z = p(p+1)(p-2)` and `m = (p+1)(p-2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyFactorization {
    pub p: u32,
    pub zero_multiplicity: usize,
    pub minus_one_multiplicity: usize,
    pub reduced_charpoly: IntPoly,
}

impl CharPolyFactorization {
    /// Degree of the full product, equal to `|V(G_p)|`.
    pub fn total_degree(&self) -> usize {
        self.zero_multiplicity + self.minus_one_multiplicity + self.reduced_charpoly.degree()
    }

    /// The expanded product `λ^z (λ+1)^m χ_{B_p}`.
    pub fn full_polynomial(&self) -> IntPoly {
        let forced = &IntPoly::linear(0).pow(self.zero_multiplicity)
            * &IntPoly::linear(-1).pow(self.minus_one_multiplicity);
        &forced * &self.reduced_charpoly
    }

    /// Exact nullity of `A_p`: the forced zeros plus the zero roots of `χ_{B_p}`.
    pub fn observed_nullity(&self) -> usize {
        self.zero_multiplicity + self.reduced_charpoly.root_multiplicity(0)
    }

    /// Exact multiplicity of `-1` in the spectrum of `A_p`.
    pub fn observed_minus_one_multiplicity(&self) -> usize {
        self.minus_one_multiplicity + self.reduced_charpoly.root_multiplicity(-1)
    }
}

pub fn charpoly_factorization(p: u32) -> Result<CharPolyFactorization> {
    let model = build_reduced(p)?;
    let pu = p as usize;
    Ok(CharPolyFactorization {
        p,
        zero_multiplicity: pu * (pu + 1) * (pu - 2),
        minus_one_multiplicity: (pu + 1) * (pu - 2),
        reduced_charpoly: charpoly_exact(&model.b)?,
    })
}
