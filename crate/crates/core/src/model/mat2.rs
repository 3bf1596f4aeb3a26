use std::fmt;
use std::ops::{Add, Mul};

/// A 2x2 matrix over `F_p`, entries row-major in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    p: u32,
    e: [u32; 4],
}

impl Mat2 {
    /// Entries are reduced modulo `p`.
    pub fn new(p: u32, entries: [i64; 4]) -> Self {
        Mat2 {
            p,
            e: entries.map(|x| x.rem_euclid(p as i64) as u32),
        }
    }

    pub fn identity(p: u32) -> Self {
        Mat2::new(p, [1, 0, 0, 1])
    }

    pub fn zero(p: u32) -> Self {
        Mat2 { p, e: [0; 4] }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    /// Entries `[m00, m01, m10, m11]`.
    pub fn entries(&self) -> [u32; 4] {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.e == [0; 4]
    }

    pub fn det(&self) -> u32 {
        let p = self.p as u64;
        let [a, b, c, d] = self.e.map(u64::from);
        ((a * d % p + p - b * c % p) % p) as u32
    }

    pub fn rank(&self) -> u8 {
        if self.is_zero() {
            0
        } else if self.det() != 0 {
            2
        } else {
            1
        }
    }

    pub fn scale(&self, s: u32) -> Self {
        let p = self.p as u64;
        Mat2 {
            p: self.p,
            e: self.e.map(|x| (x as u64 * s as u64 % p) as u32),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(self.p - 1)
    }
}

impl Add for Mat2 {
    type Output = Mat2;

    fn add(self, rhs: Mat2) -> Mat2 {
        assert_eq!(self.p, rhs.p, "matrices over different fields");
        let mut e = self.e;
        for (x, y) in e.iter_mut().zip(rhs.e) {
            *x = (*x + y) % self.p;
        }
        Mat2 { p: self.p, e }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        assert_eq!(self.p, rhs.p, "matrices over different fields");
        let p = self.p as u64;
        let [a, b, c, d] = self.e.map(u64::from);
        let [w, x, y, z] = rhs.e.map(u64::from);
        Mat2 {
            p: self.p,
            e: [
                ((a * w + b * y) % p) as u32,
                ((a * x + b * z) % p) as u32,
                ((c * w + d * y) % p) as u32,
                ((c * x + d * z) % p) as u32,
            ],
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}
