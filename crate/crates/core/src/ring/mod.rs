//! Arithmetic in the Lipschitz quaternion ring `L_n = Z_n[i, j, k]`.

mod modulus;
mod quaternion;

pub use modulus::{Modulus, MAX_MODULUS};
pub(crate) use quaternion::product_is_zero;
pub use quaternion::{count_vertices, enumerate_vertices, LipschitzQuaternion};

/// Greatest common divisor of two machine integers.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
