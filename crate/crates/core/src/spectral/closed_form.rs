use serde::Serialize;

use crate::error::{usage, Result};
use crate::linalg::IntMatrix;
use crate::ring::Modulus;

fn odd_prime(p: u32) -> Result<u64> {
    Modulus::odd_prime(p)?;
    Ok(p as u64)
}

/// Two-cell equitable quotient over diagonal-type (`D`) and off-diagonal-type (`O`) vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix {
    pub p: u32,
    pub entries: [[i64; 2]; 2],
    pub cell_sizes: (u64, u64),
}

impl QuotientMatrix {
    pub fn trace(&self) -> i64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn det(&self) -> i64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    pub fn row_sums(&self) -> (i64, i64) {
        (
            self.entries[0][0] + self.entries[0][1],
            self.entries[1][0] + self.entries[1][1],
        )
    }

    /// Both roots of `λ^2 - tr λ + det`, larger first.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let tr = self.trace() as f64;
        let disc = (self.trace() as i128).pow(2) - 4 * self.det() as i128;
        let s = (disc as f64).sqrt();
        ((tr + s) / 2.0, (tr - s) / 2.0)
    }

    pub fn larger_root(&self) -> f64 {
        self.eigenvalues().0
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&[self.entries[0].to_vec(), self.entries[1].to_vec()])
    }
}

pub fn quotient_matrix(p: u32) -> Result<QuotientMatrix> {
    let q = odd_prime(p)? as i64;
    Ok(QuotientMatrix {
        p,
        entries: [
            [q - 2, 2 * q * (q - 1)],
            [2 * (q - 1), (2 * q - 1) * (q - 1)],
        ],
        cell_sizes: (((q + 1) * (q - 1)) as u64, (q * (q + 1) * (q - 1)) as u64),
    })
}

/// `4p^4 - 4p^2 - 8p + 9`, the discriminant of the quotient's characteristic polynomial.
pub fn radius_discriminant(p: u32) -> Result<i128> {
    let q = odd_prime(p)? as i128;
    Ok(4 * q.pow(4) - 4 * q * q - 8 * q + 9)
}

/// `p^2 - p - 1/2 + sqrt(4p^4 - 4p^2 - 8p + 9)/2`.
pub fn spectral_radius_closed(p: u32) -> Result<f64> {
    let disc = radius_discriminant(p)? as f64;
    let q = p as f64;
    Ok(q * q - q - 0.5 + 0.5 * disc.sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NullityRankBounds {
    pub nullity_lb: u64,
    pub minus_one_mult_lb: u64,
    pub rank_ub: u64,
}

pub fn nullity_rank_bounds(p: u32) -> Result<NullityRankBounds> {
    let q = odd_prime(p)?;
    Ok(NullityRankBounds {
        nullity_lb: q * (q + 1) * (q - 2),
        minus_one_mult_lb: (q + 1) * (q - 2),
        rank_ub: (q + 1) * (2 * q - 1),
    })
}

/// Bounds forced by the clique `2^s L_{2^t} \ {0}` of order `c_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwoAdicBounds {
    pub t: u32,
    pub clique_size: u64,
    pub rho_lb: u64,
    pub edge_lb: u64,
}

pub fn two_adic_bounds(t: u32) -> Result<TwoAdicBounds> {
    let c = crate::graph::clique_size(t)?;
    Ok(TwoAdicBounds {
        t,
        clique_size: c,
        rho_lb: c - 1,
        edge_lb: c * (c - 1) / 2,
    })
}

/// `2^(4 floor(t/2) + 1) - 4`.
pub fn two_adic_energy_bound(t: u32) -> Result<f64> {
    if t < 2 {
        return Err(usage(format!(
            "two-adic energy bound needs t >= 2, got {t}"
        )));
    }
    let c = crate::graph::clique_size(t)?;
    Ok(2.0 * (c as f64 - 1.0))
}

/// `(p+1)(2p^4 - p^3 - 3p^2 - p + 4)`.
pub fn trace_b_squared(p: u32) -> Result<i128> {
    let q = odd_prime(p)? as i128;
    Ok((q + 1) * (2 * q.pow(4) - q.pow(3) - 3 * q * q - q + 4))
}

/// `tr(M^2) = sum_ij M_ij M_ji`, without forming the product.
pub fn trace_of_square(m: &IntMatrix) -> i128 {
    let n = m.order();
    let mut acc = 0i128;
    for i in 0..n {
        for j in 0..n {
            acc += m[(i, j)] as i128 * m[(j, i)] as i128;
        }
    }
    acc
}
