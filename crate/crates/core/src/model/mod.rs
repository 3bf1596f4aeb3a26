//! The odd-prime model: `L_p` is isomorphic to `M_2(F_p)`, and a nonzero
//! singular matrix is described by its kernel and image lines in `P^1(F_p)`.

mod iso;
mod mat2;
mod projective;

pub use iso::{find_iso_params, phi, IsoParams};
pub use mat2::Mat2;
pub use projective::{class_member, classify, proj_lines, type_label, ProjLine, TypeClass};

pub(crate) fn inv_mod(x: u32, p: u32) -> u32 {
    debug_assert!(!x.is_multiple_of(p));
    pow_mod(x, p - 2, p)
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut b = base as u64 % p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u32
}
