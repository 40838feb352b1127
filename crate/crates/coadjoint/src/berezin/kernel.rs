//! Coherent kernels: the two- and three-point functions built from coherent
//! projectors, their factorized forms, and the local expansion of the
//! three-point kernel around a base point.

use crate::berezin::orbit::OrbitPoint;
use crate::berezin::tower::Tower;
use crate::error::{Error, Result};
use crate::linalg::C64;

/// Three-point kernel `K_n(p,q,r) = d_n² ⟨v_p|v_q⟩⟨v_q|v_r⟩⟨v_r|v_p⟩`,
/// computed from the level-`n` coherent vectors. The cyclic product is
/// invariant under rephasing any of the three vectors.
pub fn three_point(tower: &Tower, n: usize, p: &OrbitPoint, q: &OrbitPoint, r: &OrbitPoint) -> Result<C64> {
    let d = tower.dim(n) as f64;
    let pq = tower.coherent_overlap(p, q, n)?;
    let qr = tower.coherent_overlap(q, r, n)?;
    let rp = tower.coherent_overlap(r, p, n)?;
    Ok(pq * qr * rp * (d * d))
}

/// The same kernel through the factorization of coherent overlaps over
/// levels: `⟨v_p|v_q⟩ = ⟨u_p|u_q⟩^{k·n}` in the defining space. An
/// independent path to the same number for towers with coherent support.
pub fn three_point_factorized(
    tower: &Tower,
    n: usize,
    p: &OrbitPoint,
    q: &OrbitPoint,
    r: &OrbitPoint,
) -> Result<C64> {
    let k = tower.defining_multiple().ok_or_else(|| {
        Error::Unsupported("factorized kernels need a tower with coherent support".into())
    })?;
    let d = tower.dim(n) as f64;
    let base = p.overlap(q) * q.overlap(r) * r.overlap(p);
    Ok(base.powu((k * n) as u32) * (d * d))
}

/// Two-point kernel `d_n |⟨v_p|v_q⟩|²`: the reproducing density, equal to
/// `d_n` at coincidence and decaying with separation.
pub fn two_point(tower: &Tower, n: usize, p: &OrbitPoint, q: &OrbitPoint) -> Result<f64> {
    let d = tower.dim(n) as f64;
    Ok(tower.coherent_overlap(p, q, n)?.norm_sqr() * d)
}

/// Defect of the second-order local expansion of the normalized three-point
/// kernel. For points `q, r` at complex coordinates `υ, ζ` in the normal
/// chart around `p`, `(K_n/d_n²)^{1/(k·n)}` equals
/// `1 − |υ|² − |ζ|² + ῡζ` up to third order; the returned value is the
/// absolute deviation from that truncation.
pub fn local_expansion_defect(
    tower: &Tower,
    n: usize,
    p: &OrbitPoint,
    q: &OrbitPoint,
    upsilon: C64,
    r: &OrbitPoint,
    zeta: C64,
) -> Result<f64> {
    let k = tower.defining_multiple().ok_or_else(|| {
        Error::Unsupported("the local expansion needs a tower with coherent support".into())
    })?;
    let kn = (k * n) as f64;
    let kernel = three_point(tower, n, p, q, r)?;
    let d = tower.dim(n) as f64;
    let normalized = kernel / (d * d);
    // Principal branch is safe: the kernel stays near the positive real axis
    // for the small separations this expansion is about.
    let root = normalized.powf(1.0 / kn);
    let truncation =
        C64::new(1.0 - upsilon.norm_sqr() - zeta.norm_sqr(), 0.0) + upsilon.conj() * zeta;
    Ok((root - truncation).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berezin::sphere;
    use crate::lie::{Algebra, Weight};
    use crate::numerics::sampling::seeded_rng;

    fn a1_tower(n_max: usize) -> Tower {
        let alg = Algebra::from_name("A1").unwrap();
        Tower::new(&alg, Weight(vec![1]), n_max).unwrap()
    }

    #[test]
    fn direct_and_factorized_kernels_agree() {
        let t = a1_tower(6);
        let mut rng = seeded_rng(13);
        let p = OrbitPoint::random(&mut rng, 2);
        let q = OrbitPoint::random(&mut rng, 2);
        let r = OrbitPoint::random(&mut rng, 2);
        for n in [1usize, 4, 6] {
            let direct = three_point(&t, n, &p, &q, &r).unwrap();
            let fact = three_point_factorized(&t, n, &p, &q, &r).unwrap();
            assert!(
                (direct - fact).norm() <= 1e-10 * fact.norm().max(1.0),
                "level {n}: {direct} vs {fact}"
            );
        }
    }

    #[test]
    fn kernel_modulus_matches_the_overlap_distances() {
        let t = a1_tower(5);
        let n = 5usize;
        let p = OrbitPoint::from_angles(0.3, 0.0);
        let q = OrbitPoint::from_angles(1.1, 2.0);
        let r = OrbitPoint::from_angles(2.0, 4.5);
        let k = three_point(&t, n, &p, &q, &r).unwrap();
        let expect = ((n + 1) * (n + 1)) as f64
            * (sphere::fs_distance(&p, &q) / 2.0).cos().powi(n as i32)
            * (sphere::fs_distance(&q, &r) / 2.0).cos().powi(n as i32)
            * (sphere::fs_distance(&r, &p) / 2.0).cos().powi(n as i32);
        assert!((k.norm() - expect).abs() < 1e-10 * expect);
    }

    #[test]
    fn two_point_kernel_peaks_at_coincidence() {
        let t = a1_tower(4);
        let p = OrbitPoint::from_angles(0.7, 0.3);
        let same = two_point(&t, 4, &p, &p).unwrap();
        assert!((same - 5.0).abs() < 1e-12);
        for (dt, dp) in [(0.2, 0.0), (0.5, 1.0), (1.5, 3.0)] {
            let q = OrbitPoint::from_angles(0.7 + dt, 0.3 + dp);
            assert!(two_point(&t, 4, &p, &q).unwrap() < same);
        }
    }

    #[test]
    fn local_expansion_error_is_third_order() {
        let t = a1_tower(10);
        let n = 10usize;
        let p = OrbitPoint::from_angles(0.0, 0.0);
        let mut defects = Vec::new();
        for &r in &[0.08_f64, 0.04, 0.02] {
            let ups = C64::from_polar(r, 0.9);
            let zet = C64::from_polar(r, 2.4);
            let q = sphere::stereographic(ups);
            let s = sphere::stereographic(zet);
            let defect = local_expansion_defect(&t, n, &p, &q, ups, &s, zet).unwrap();
            defects.push(defect);
        }
        for w in defects.windows(2) {
            let order = (w[0] / w[1]).log2();
            assert!(order > 2.5, "observed order {order} in {defects:?}");
        }
    }
}
