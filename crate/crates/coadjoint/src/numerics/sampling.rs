//! Distribution-exact random samples: Haar-random unitary and special
//! unitary matrices, built from complex Gaussian matrices by orthonormalizing
//! with a positive-diagonal triangular factor.

use ndarray::Array2;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::linalg::{mgs_unitarize, CMat, C64};

/// Standard complex Gaussian matrix (independent entries, unit variance).
pub fn ginibre<R: Rng>(rng: &mut R, n: usize) -> CMat {
    let mut m: CMat = Array2::zeros((n, n));
    for r in 0..n {
        for c in 0..n {
            // Box–Muller; each of re/im has variance 1/2.
            let u: f64 = rng.gen_range(f64::EPSILON..1.0);
            let v: f64 = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
            let radius = (-u.ln()).sqrt();
            m[(r, c)] = C64::from_polar(radius, v);
        }
    }
    m
}

/// Haar-distributed element of `U(n)`. The QR factor of a Ginibre matrix is
/// Haar exactly when the triangular factor has positive diagonal, which is
/// the convention `mgs_unitarize` enforces.
pub fn haar_unitary<R: Rng>(rng: &mut R, n: usize) -> CMat {
    loop {
        // A Gaussian matrix is singular with probability zero; resample on
        // the measure-zero failure rather than propagating an error.
        if let Ok(q) = mgs_unitarize(&ginibre(rng, n)) {
            return q;
        }
    }
}

/// Haar-distributed element of `SU(n)`: a Haar `U(n)` sample with the
/// determinant phase divided out evenly across the matrix.
pub fn haar_special<R: Rng>(rng: &mut R, n: usize) -> CMat {
    let q = haar_unitary(rng, n);
    let phase = det(&q).arg();
    let fix = C64::from_polar(1.0, -phase / n as f64);
    q.mapv(|z| z * fix)
}

/// Deterministic RNG used everywhere a seed appears in an interface.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det(m: &CMat) -> C64 {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "determinant of a non-square matrix");
    let mut a = m.clone();
    let mut sign = C64::new(1.0, 0.0);
    for k in 0..n {
        let mut pivot = k;
        for r in k + 1..n {
            if a[(r, k)].norm() > a[(pivot, k)].norm() {
                pivot = r;
            }
        }
        if a[(pivot, k)].norm() == 0.0 {
            return C64::new(0.0, 0.0);
        }
        if pivot != k {
            for c in 0..n {
                let t = a[(k, c)];
                a[(k, c)] = a[(pivot, c)];
                a[(pivot, c)] = t;
            }
            sign = -sign;
        }
        for r in k + 1..n {
            let factor = a[(r, k)] / a[(k, k)];
            for c in k..n {
                let sub = factor * a[(k, c)];
                a[(r, c)] -= sub;
            }
        }
    }
    let mut out = sign;
    for k in 0..n {
        out *= a[(k, k)];
    }
    out
}
