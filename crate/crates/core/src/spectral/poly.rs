use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial in `λ` with exact integer coefficients, stored in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Trailing zero coefficients are dropped.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `λ - root`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[-root, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Coefficients `c_0, c_1, ..., c_d` of `c_0 + c_1 λ + ... + c_d λ^d`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Division by `λ - root`: quotient and remainder (the value at `root`).
    pub fn div_linear(&self, root: i64) -> (IntPoly, BigInt) {
        if self.coeffs.is_empty() {
            return (self.clone(), BigInt::zero());
        }
        let r = BigInt::from(root);
        let d = self.coeffs.len();
        let mut q = vec![BigInt::zero(); d - 1];
        let mut acc = BigInt::zero();
        for k in (0..d).rev() {
            acc = &acc * &r + &self.coeffs[k];
            if k > 0 {
                q[k - 1] = acc.clone();
            }
        }
        (IntPoly::new(q), acc)
    }

    /// Exact multiplicity of an integer root.
    pub fn root_multiplicity(&self, root: i64) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, rem) = p.div_linear(root);
            if !rem.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers, e.g. `λ^2 - 11λ - 38`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(
            IntPoly::from_i64(&[-38, -11, 1]).to_string(),
            "λ^2 - 11λ - 38"
        );
        assert_eq!(IntPoly::from_i64(&[0, 0, 0, 1]).to_string(), "λ^3");
        assert_eq!(IntPoly::from_i64(&[]).to_string(), "0");
    }

    #[test]
    fn multiplicity_and_division() {
        // (λ+1)^3 λ^2 (λ-3)
        let p = &(&IntPoly::linear(-1).pow(3) * &IntPoly::linear(0).pow(2)) * &IntPoly::linear(3);
        assert_eq!(p.degree(), 6);
        assert!(p.is_monic());
        assert_eq!(p.root_multiplicity(-1), 3);
        assert_eq!(p.root_multiplicity(0), 2);
        assert_eq!(p.root_multiplicity(3), 1);
        assert_eq!(p.root_multiplicity(2), 0);
        let (q, r) = p.div_linear(3);
        assert!(r.is_zero());
        assert_eq!(&q * &IntPoly::linear(3), p);
        assert_eq!(p.eval_f64(1.0), 8.0 * 1.0 * -2.0);
    }
}
