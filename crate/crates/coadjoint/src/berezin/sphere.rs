//! Geometry of the sphere orbit: Bloch vectors, the invariant distance, the
//! oriented area of geodesic triangles, and the stereographic chart used for
//! local expansions.

use crate::berezin::orbit::OrbitPoint;
use crate::linalg::C64;

/// Unit Bloch vector `(n_x, n_y, n_z)` of a point with a two-dimensional
/// defining vector. Note the Cartesian order differs from the generator
/// order, which puts the Cartan direction first.
pub fn bloch(p: &OrbitPoint) -> [f64; 3] {
    let u = p.defining();
    assert_eq!(u.len(), 2, "Bloch vectors exist for two-dimensional defining spaces");
    let cross = u[0].conj() * u[1];
    [2.0 * cross.re, 2.0 * cross.im, u[0].norm_sqr() - u[1].norm_sqr()]
}

/// Geodesic angle between two points: `2·arccos|⟨u_p|u_q⟩|`, the great-circle
/// distance of the Bloch vectors on the unit sphere.
pub fn fs_distance(p: &OrbitPoint, q: &OrbitPoint) -> f64 {
    let overlap = p.overlap(q).norm().min(1.0);
    2.0 * overlap.acos()
}

/// Oriented solid angle of the geodesic triangle with the given Bloch
/// vectors, via the half-angle formula
/// `tan(Ω/2) = n₁·(n₂×n₃) / (1 + n₁·n₂ + n₂·n₃ + n₃·n₁)`.
/// Positive for triangles that are counterclockwise seen from outside.
pub fn signed_solid_angle(n1: [f64; 3], n2: [f64; 3], n3: [f64; 3]) -> f64 {
    let cross = [
        n2[1] * n3[2] - n2[2] * n3[1],
        n2[2] * n3[0] - n2[0] * n3[2],
        n2[0] * n3[1] - n2[1] * n3[0],
    ];
    let triple: f64 = n1.iter().zip(cross.iter()).map(|(a, b)| a * b).sum();
    let dot = |a: [f64; 3], b: [f64; 3]| -> f64 { a.iter().zip(b.iter()).map(|(x, y)| x * y).sum() };
    let denom = 1.0 + dot(n1, n2) + dot(n2, n3) + dot(n3, n1);
    2.0 * triple.atan2(denom)
}

/// Oriented area of the geodesic triangle on the orbit sphere of radius ½
/// (the sphere the classical coordinates of the unit tower live on):
/// a quarter of the solid angle.
pub fn triangle_area(p: &OrbitPoint, q: &OrbitPoint, r: &OrbitPoint) -> f64 {
    signed_solid_angle(bloch(p), bloch(q), bloch(r)) / 4.0
}

/// Point of the stereographic chart around the highest weight direction:
/// `ζ ↦ (1, ζ)/√(1+|ζ|²)`, so `ζ = tan(θ/2)·e^{iφ}`.
pub fn stereographic(zeta: C64) -> OrbitPoint {
    let theta = 2.0 * zeta.norm().atan();
    OrbitPoint::from_angles(theta, zeta.arg())
}
