use super::Mat2;
use crate::error::{usage, Result};
use crate::ring::{LipschitzQuaternion, Modulus};

/// A witness `(a, b)` with `a^2 + b^2 = -1` in `F_p`, fixing one explicit
/// isomorphism `L_p -> M_2(F_p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoParams {
    p: u32,
    a: u32,
    b: u32,
}

impl IsoParams {
    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn pair(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    /// Images of `1, i, j, k`.
    pub fn basis_images(&self) -> [Mat2; 4] {
        let (p, a, b) = (self.p, self.a as i64, self.b as i64);
        [
            Mat2::identity(p),
            Mat2::new(p, [a, b, b, -a]),
            Mat2::new(p, [b, -a, -a, -b]),
            Mat2::new(p, [0, 1, -1, 0]),
        ]
    }
}

/// Lexicographically least `(a, b)` with `a^2 + b^2 + 1 = 0 (mod p)`.
pub fn find_iso_params(p: u32) -> Result<IsoParams> {
    if !Modulus::new(p).is_ok_and(|m| m.is_odd_prime()) {
        return Err(usage(format!("{p} is not an odd prime")));
    }
    let p64 = p as u64;
    for a in 0..p {
        for b in 0..p {
            if (a as u64 * a as u64 + b as u64 * b as u64 + 1).is_multiple_of(p64) {
                return Ok(IsoParams { p, a, b });
            }
        }
    }
    unreachable!("every odd prime admits a sum of two squares equal to -1")
}

/// The ring isomorphism `x0 + x1 i + x2 j + x3 k -> x0 I + x1 phi(i) + x2 phi(j) + x3 phi(k)`.
pub fn phi(x: &LipschitzQuaternion, params: &IsoParams) -> Result<Mat2> {
    if x.modulus() != params.p {
        return Err(usage(format!(
            "quaternion modulo {} mapped with parameters for p = {}",
            x.modulus(),
            params.p
        )));
    }
    Ok(x.coords()
        .iter()
        .zip(params.basis_images())
        .fold(Mat2::zero(params.p), |acc, (&c, m)| acc + m.scale(c)))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::model::{classify, Mat2};
    use crate::ring::enumerate_vertices;

    fn brute_params(p: u32) -> (u32, u32) {
        (0..p)
            .flat_map(|a| (0..p).map(move |b| (a, b)))
            .find(|(a, b)| (a * a + b * b + 1) % p == 0)
            .unwrap()
    }

    fn rand_q(rng: &mut impl Rng, n: &Modulus) -> LipschitzQuaternion {
        let m = n.value() as i64;
        LipschitzQuaternion::new(
            n,
            rng.gen_range(0..m),
            rng.gen_range(0..m),
            rng.gen_range(0..m),
            rng.gen_range(0..m),
        )
    }

    #[test]
    fn params_match_exhaustive_search() {
        assert_eq!(find_iso_params(3).unwrap().pair(), (1, 1));
        assert_eq!(find_iso_params(5).unwrap().pair(), (0, 2));
        for p in [7u32, 11, 13, 17, 19, 23] {
            let params = find_iso_params(p).unwrap();
            let (a, b) = params.pair();
            assert_eq!((a, b), brute_params(p));
            assert_eq!((a * a + b * b + 1) % p, 0);
        }
        assert!(find_iso_params(2).is_err());
        assert!(find_iso_params(9).is_err());
    }

    #[test]
    fn unital_and_i_squared() {
        let n = Modulus::new(3).unwrap();
        let params = find_iso_params(3).unwrap();
        assert_eq!(
            phi(&LipschitzQuaternion::one(&n), &params).unwrap(),
            Mat2::identity(3)
        );
        let pi = phi(&LipschitzQuaternion::new(&n, 0, 1, 0, 0), &params).unwrap();
        assert_eq!(pi * pi, Mat2::identity(3).neg());
    }

    #[test]
    fn generators_satisfy_quaternion_relations() {
        for p in [3u32, 5, 7, 11] {
            let [one, i, j, k] = find_iso_params(p).unwrap().basis_images();
            let minus = one.neg();
            assert_eq!(i * i, minus);
            assert_eq!(j * j, minus);
            assert_eq!(k * k, minus);
            assert_eq!(i * j, k);
            assert_eq!(j * k, i);
            assert_eq!(k * i, j);
            assert_eq!(j * i, k.neg());
        }
    }

    #[test]
    fn bijective_for_p3() {
        let n = Modulus::new(3).unwrap();
        let params = find_iso_params(3).unwrap();
        let mut images = HashSet::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        let x = LipschitzQuaternion::new(&n, a, b, c, d);
                        images.insert(phi(&x, &params).unwrap());
                    }
                }
            }
        }
        assert_eq!(images.len(), 81);
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [3u32, 5, 7] {
            let n = Modulus::new(p).unwrap();
            let params = find_iso_params(p).unwrap();
            for _ in 0..100_000 {
                let x = rand_q(&mut rng, &n);
                let y = rand_q(&mut rng, &n);
                let (px, py) = (phi(&x, &params).unwrap(), phi(&y, &params).unwrap());
                assert_eq!(phi(&(x * y), &params).unwrap(), px * py);
                assert_eq!(phi(&(x + y), &params).unwrap(), px + py);
                assert_eq!(x == y, px == py);
            }
        }
    }

    #[test]
    fn vertices_map_to_rank_one() {
        let n = Modulus::new(3).unwrap();
        let params = find_iso_params(3).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        let x = LipschitzQuaternion::new(&n, a, b, c, d);
                        let m = phi(&x, &params).unwrap();
                        assert_eq!(x.is_vertex(), m.rank() == 1);
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [5u32, 7] {
            let n = Modulus::new(p).unwrap();
            let params = find_iso_params(p).unwrap();
            for _ in 0..20_000 {
                let x = rand_q(&mut rng, &n);
                assert_eq!(x.is_vertex(), phi(&x, &params).unwrap().rank() == 1);
            }
            for x in enumerate_vertices(&n) {
                assert_eq!(phi(&x, &params).unwrap().rank(), 1);
            }
        }
    }

    #[test]
    fn rank_one_product_criterion() {
        // AB = 0 iff Im(B) = Ker(A), on random nonzero singular pairs
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in [3u32, 5, 7] {
            let mut hits = 0;
            for _ in 0..10_000 {
                let rand_singular = |rng: &mut ChaCha8Rng| loop {
                    let m = Mat2::new(p, std::array::from_fn(|_| rng.gen_range(0..p as i64)));
                    if m.rank() == 1 {
                        break m;
                    }
                };
                let a = rand_singular(&mut rng);
                let b = rand_singular(&mut rng);
                let (ta, tb) = (classify(&a).unwrap(), classify(&b).unwrap());
                let zero = (a * b).is_zero();
                hits += zero as usize;
                assert_eq!(zero, tb.image == ta.kernel);
            }
            assert!(hits > 0);
        }
    }

    #[test]
    fn modulus_mismatch() {
        let params = find_iso_params(5).unwrap();
        let x = LipschitzQuaternion::one(&Modulus::new(3).unwrap());
        assert!(phi(&x, &params).is_err());
    }
}
