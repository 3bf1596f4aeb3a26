use std::fmt;

use super::{inv_mod, Mat2};
use crate::error::{usage, Error, Result};

/// A point of `P^1(F_p)`: a 1-dimensional subspace of `F_p^2`.
///
/// The generator is canonical (first nonzero coordinate equal to 1). Lines
/// `(1, m)` get index `m` and the line `(0, 1)` gets index `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    p: u32,
    index: u32,
}

impl ProjLine {
    /// The line spanned by a nonzero vector.
    pub fn spanned_by(p: u32, v: (u32, u32)) -> Result<Self> {
        let (x, y) = (v.0 % p, v.1 % p);
        match (x, y) {
            (0, 0) => Err(Error::Domain("the zero vector spans no line".into())),
            (0, _) => Ok(ProjLine { p, index: p }),
            _ => {
                let m = (y as u64 * inv_mod(x, p) as u64 % p as u64) as u32;
                Ok(ProjLine { p, index: m })
            }
        }
    }

    pub fn from_index(p: u32, index: u32) -> Result<Self> {
        if index > p {
            return Err(usage(format!("line index {index} out of range 0..={p}")));
        }
        Ok(ProjLine { p, index })
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    /// Canonical generator with first nonzero coordinate 1.
    pub fn generator(&self) -> (u32, u32) {
        if self.index == self.p {
            (0, 1)
        } else {
            (1, self.index)
        }
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.generator();
        write!(f, "<{x},{y}>")
    }
}

/// All `p + 1` lines of `P^1(F_p)` in index order.
pub fn proj_lines(p: u32) -> Vec<ProjLine> {
    (0..=p).map(|index| ProjLine { p, index }).collect()
}

/// The type `(Ker A, Im A)` of a rank-one matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeClass {
    pub kernel: ProjLine,
    pub image: ProjLine,
}

impl TypeClass {
    pub fn new(kernel: ProjLine, image: ProjLine) -> Self {
        assert_eq!(kernel.p, image.p, "lines over different fields");
        TypeClass { kernel, image }
    }

    pub fn prime(&self) -> u32 {
        self.kernel.p
    }

    pub fn is_diagonal(&self) -> bool {
        self.kernel == self.image
    }

    /// Position in the lexicographic (kernel index, image index) order of all `(p+1)^2` types.
    pub fn index(&self) -> usize {
        (self.kernel.index * (self.kernel.p + 1) + self.image.index) as usize
    }

    pub fn from_index(p: u32, index: usize) -> Self {
        let q = (p + 1) as usize;
        TypeClass {
            kernel: ProjLine {
                p,
                index: (index / q) as u32,
            },
            image: ProjLine {
                p,
                index: (index % q) as u32,
            },
        }
    }

    /// All types in index order.
    pub fn all(p: u32) -> impl Iterator<Item = TypeClass> {
        let n = ((p + 1) * (p + 1)) as usize;
        (0..n).map(move |i| TypeClass::from_index(p, i))
    }

    /// Whether vertices of these two types are adjacent: `M = L'` or `M' = L`.
    pub fn incident(&self, other: &TypeClass) -> bool {
        self.image == other.kernel || other.image == self.kernel
    }
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.kernel.index, self.image.index)
    }
}

/// Kernel and image lines of a nonzero singular matrix.
pub fn classify(a: &Mat2) -> Result<TypeClass> {
    let p = a.prime();
    match a.rank() {
        0 => return Err(Error::Domain("the zero matrix has no type".into())),
        2 => return Err(Error::Domain(format!("{a} is invertible and has no type"))),
        _ => {}
    }
    let [m00, m01, m10, m11] = a.entries();
    let neg = |x: u32| (p - x) % p;
    let kernel_vec = if (m00, m01) != (0, 0) {
        (neg(m01), m00)
    } else {
        (neg(m11), m10)
    };
    let image_vec = if (m00, m10) != (0, 0) {
        (m00, m10)
    } else {
        (m01, m11)
    };
    Ok(TypeClass::new(
        ProjLine::spanned_by(p, kernel_vec)?,
        ProjLine::spanned_by(p, image_vec)?,
    ))
}

/// Covector `(l2, -l1)` vanishing on the canonical generator `(l1, l2)` of the kernel line.
fn annihilator(line: &ProjLine) -> (u32, u32) {
    let (l1, l2) = line.generator();
    (l2, (line.p - l1) % line.p)
}

/// The member `c * m f^T` of a type class, `m` the image generator and `f` the kernel annihilator.
pub fn class_member(t: &TypeClass, c: u32) -> Result<Mat2> {
    let p = t.prime();
    if c == 0 || c >= p {
        return Err(usage(format!("class scalar {c} out of range 1..{p}")));
    }
    let (m1, m2) = t.image.generator();
    let (f1, f2) = annihilator(&t.kernel);
    let outer = Mat2::new(
        p,
        [
            (m1 * f1) as i64,
            (m1 * f2) as i64,
            (m2 * f1) as i64,
            (m2 * f2) as i64,
        ],
    );
    Ok(outer.scale(c))
}

/// Inverse of [`class_member`]: the type of `a` and the scalar `c` with `class_member(t, c) = a`.
pub fn type_label(a: &Mat2) -> Result<(TypeClass, u32)> {
    let t = classify(a)?;
    let base = class_member(&t, 1)?;
    let (i, &b) = base
        .entries()
        .iter()
        .enumerate()
        .find(|(_, &x)| x != 0)
        .expect("class members are nonzero");
    let p = a.prime() as u64;
    let c = (a.entries()[i] as u64 * inv_mod(b, a.prime()) as u64 % p) as u32;
    Ok((t, c))
}
