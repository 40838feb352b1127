//! Maps between neighbouring matrix algebras of a tower: the injection
//! `A_n → A_{n+1}`, the projection `A_n → A_{n−1}` in its two equivalent
//! forms, and the partial-trace helper they share.

use ndarray::Array2;

use crate::berezin::tower::Tower;
use crate::error::{Error, Result};
use crate::linalg::{dagger, CMat};

/// `E†(1 ⊗ a)E` without forming the Kronecker factor: each embedding column
/// is reshaped to `d_first × d_second` and multiplied by `aᵀ` on the right.
pub fn sandwich_second(e: &CMat, a: &CMat, d_first: usize) -> CMat {
    let d_second = e.nrows() / d_first;
    assert_eq!(d_first * d_second, e.nrows(), "embedding rows must factor");
    assert_eq!(a.nrows(), d_second, "operator must act on the second factor");
    let d_tgt = e.ncols();
    let mut y: CMat = Array2::zeros((e.nrows(), d_tgt));
    for t in 0..d_tgt {
        let col = e.column(t).to_owned();
        let xm = col.view().into_shape_with_order((d_first, d_second)).expect("shape");
        let img = xm.dot(&a.t());
        let flat = img.into_shape_with_order(e.nrows()).expect("reshape");
        for r in 0..e.nrows() {
            y[(r, t)] = flat[r];
        }
    }
    dagger(e).dot(&y)
}

/// Partial trace over the first tensor factor of an operator on a
/// `d_first · d_second` dimensional space.
pub fn ptrace_first(m: &CMat, d_first: usize, d_second: usize) -> CMat {
    assert_eq!(m.nrows(), d_first * d_second);
    assert_eq!(m.ncols(), d_first * d_second);
    let mut out: CMat = Array2::zeros((d_second, d_second));
    for r in 0..d_first {
        for c in 0..d_second {
            for c2 in 0..d_second {
                out[(c, c2)] += m[(r * d_second + c, r * d_second + c2)];
            }
        }
    }
    out
}

fn check_operator(tower: &Tower, n: usize, a: &CMat) -> Result<()> {
    let d = tower.dim(n);
    if a.nrows() != d || a.ncols() != d {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, level {n} has dimension {d}",
            a.nrows(),
            a.ncols()
        )));
    }
    Ok(())
}

/// Injection `A_n → A_{n+1}`: `a ↦ Π₊ (1 ⊗ a) Π₊†` through the isometry
/// `V((n+1)Λ) ↪ V(Λ) ⊗ V(nΛ)`. Unital and completely positive.
pub fn inject(tower: &Tower, n: usize, a: &CMat) -> Result<CMat> {
    check_operator(tower, n, a)?;
    if n >= tower.n_max {
        return Err(Error::LevelMismatch { expected: tower.n_max - 1, got: n });
    }
    Ok(sandwich_second(tower.plus(n), a, tower.reference().dim))
}

/// Projection `A_n → A_{n−1}`: `a ↦ Π₋ (1 ⊗ a) Π₋†` through the isometry
/// `V((n−1)Λ) ↪ V(Λ*) ⊗ V(nΛ)`. Unital and completely positive.
pub fn project(tower: &Tower, n: usize, a: &CMat) -> Result<CMat> {
    check_operator(tower, n, a)?;
    if n == 0 || n > tower.n_max {
        return Err(Error::LevelMismatch { expected: 1, got: n });
    }
    Ok(sandwich_second(tower.minus(n - 1), a, tower.dual_reference().dim))
}

/// The projection computed through the other ladder: push `a` into
/// `V(Λ) ⊗ V((n−1)Λ)` along `plus(n−1)`, trace out the reference factor, and
/// normalize by the dimension ratio so the identity maps to the identity.
/// Agrees with [`project`] — the two forms are one map written two ways.
pub fn project_trace(tower: &Tower, n: usize, a: &CMat) -> Result<CMat> {
    check_operator(tower, n, a)?;
    if n == 0 || n > tower.n_max {
        return Err(Error::LevelMismatch { expected: 1, got: n });
    }
    let e = tower.plus(n - 1);
    let big = e.dot(a).dot(&dagger(e));
    let d_ref = tower.reference().dim;
    let scale = tower.dim(n - 1) as f64 / tower.dim(n) as f64;
    Ok(ptrace_first(&big, d_ref, tower.dim(n - 1)).mapv(|z| z * scale))
}

/// Normalized Hilbert–Schmidt pairing `tr(a† b) / d` under which injection
/// and projection are mutually adjoint.
pub fn hs_pairing(a: &CMat, b: &CMat) -> crate::linalg::C64 {
    let d = a.nrows() as f64;
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum::<crate::linalg::C64>() / d
}
