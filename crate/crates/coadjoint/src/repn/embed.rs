//! Isometric embeddings of an irreducible component into a tensor product.
//!
//! `component_embedding(a, b, target)` locates the copy of `target` inside
//! `a ⊗ b` whose highest-weight vector carries weight `target.hw`, requires it
//! to be unique (multiplicity one), and then *replays* the abstract
//! construction records of `target` on concrete tensor vectors. Because the
//! replay uses the very coefficients that built `target`, the resulting
//! columns are the images of the abstract basis vectors: the returned matrix
//! `E` satisfies `E†E = 1` and intertwines the actions,
//! `(f ⊗ 1 + 1 ⊗ f) E = E f_target`.
//!
//! For the Cartan component (`target.hw = a.hw + b.hw`) the seed is exactly
//! `Ψ_a ⊗ Ψ_b`, which fixes the product convention `Ψ_{a+b} = Ψ_a ⊗ Ψ_b`.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::linalg::{frobenius_norm, hermitian_eig, CMat, CVec, C64};
use crate::repn::irrep::Irrep;
use crate::repn::tensor::pair_apply;

/// Relative eigenvalue cutoff for "this vector is annihilated by all raising
/// operators", with a guard band that errors out rather than guessing.
const KERNEL_CUT: f64 = 1e-9;
const KERNEL_GUARD: f64 = 1e-5;

/// Embedding of `target` into `a ⊗ b` (index convention `r·dim_b + c`).
/// Columns are orthonormal and intertwine the representations.
pub fn component_embedding(a: &Irrep, b: &Irrep, target: &Irrep) -> Result<CMat> {
    let (da, db) = (a.dim, b.dim);
    let rank = target.algebra.rank();

    // Highest-weight space of the tensor at weight target.hw.
    let mut slots: Vec<usize> = Vec::new();
    for (r, wr) in a.weights.iter().enumerate() {
        for (c, wc) in b.weights.iter().enumerate() {
            if wr.add(wc) == target.hw {
                slots.push(r * db + c);
            }
        }
    }
    if slots.is_empty() {
        return Err(Error::Multiplicity { weight: target.hw.0.clone(), found: 0 });
    }

    // Joint raising kernel on that space: M = Σ_i Y_i† Y_i with
    // Y_i[:, k] = (e_i ⊗ 1 + 1 ⊗ e_i) v_k.
    let m = slots.len();
    let mut gram: CMat = Array2::zeros((m, m));
    for i in 0..rank {
        let (ea, eb) = (a.e(i), b.e(i));
        let images: Vec<CVec> = slots
            .iter()
            .map(|&s| {
                let mut v: CVec = Array1::zeros(da * db);
                v[s] = C64::new(1.0, 0.0);
                pair_apply(ea, eb, &v)
            })
            .collect();
        for p in 0..m {
            for q in 0..m {
                let dot: C64 =
                    images[p].iter().zip(images[q].iter()).map(|(x, y)| x.conj() * y).sum();
                gram[(p, q)] += dot;
            }
        }
    }
    let (vals, vecs) = hermitian_eig(&gram);
    let scale = vals.last().copied().unwrap_or(0.0).max(1.0);
    let mut kernel = 0usize;
    for &v in &vals {
        if v <= KERNEL_CUT * scale {
            kernel += 1;
        } else if v <= KERNEL_GUARD * scale {
            return Err(Error::DegenerateSpectrum(format!(
                "raising-kernel eigenvalue {v:.3e} inside guard band at weight {}",
                target.hw
            )));
        }
    }
    if kernel != 1 {
        return Err(Error::Multiplicity { weight: target.hw.0.clone(), found: kernel });
    }

    // Seed: the kernel vector, phase-rotated so its dominant entry is real
    // positive (deterministic; for a Cartan component this gives Ψ_a ⊗ Ψ_b
    // exactly).
    let mut seed: CVec = Array1::zeros(da * db);
    for (k, &s) in slots.iter().enumerate() {
        seed[s] = vecs[(k, 0)];
    }
    let max_mod = seed.iter().map(|z| z.norm()).fold(0.0_f64, f64::max);
    let anchor = seed
        .iter()
        .find(|z| z.norm() >= 0.5 * max_mod)
        .copied()
        .expect("kernel vector is nonzero");
    let phase = anchor / anchor.norm();
    let norm: f64 = seed.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let seed = seed.mapv(|z| z * phase.conj() / norm);

    // Replay the target's construction on concrete vectors.
    let mut vectors: Vec<CVec> = Vec::with_capacity(target.dim);
    vectors.push(seed);
    for lvl in target.levels() {
        let cand_vecs: Vec<CVec> = lvl
            .cands
            .iter()
            .map(|&(parent, i)| pair_apply(a.f(i), b.f(i), &vectors[parent]))
            .collect();
        for row in &lvl.rows {
            let mut u: CVec = Array1::zeros(da * db);
            for (c, coef) in row.iter().enumerate() {
                if coef.norm_sqr() > 0.0 {
                    u = u + cand_vecs[c].mapv(|z| z * *coef);
                }
            }
            let norm: f64 = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if !(norm.is_finite() && norm > 0.5) {
                return Err(Error::DegenerateSpectrum(format!(
                    "replay produced a degenerate vector (norm {norm:.3e}) embedding {}",
                    target.hw
                )));
            }
            vectors.push(u.mapv(|z| z / norm));
        }
    }

    let mut e: CMat = Array2::zeros((da * db, target.dim));
    for (t, u) in vectors.iter().enumerate() {
        for x in 0..da * db {
            e[(x, t)] = u[x];
        }
    }
    Ok(e)
}

/// Maximum relative intertwining residual
/// `‖(f_i ⊗ 1 + 1 ⊗ f_i) E − E f_i^{target}‖ / ‖f_i^{target}‖` over simple
/// indices, plus the isometry defect `‖E†E − 1‖`. Cheap enough to run in
/// tests and diagnostics at desk scale.
pub fn embedding_residual(a: &Irrep, b: &Irrep, target: &Irrep, e: &CMat) -> f64 {
    let rank = target.algebra.rank();
    let mut worst = 0.0_f64;
    for i in 0..rank {
        let mut lhs: CMat = Array2::zeros((a.dim * b.dim, target.dim));
        for t in 0..target.dim {
            let col = e.column(t).to_owned();
            let img = pair_apply(a.f(i), b.f(i), &col);
            for x in 0..a.dim * b.dim {
                lhs[(x, t)] = img[x];
            }
        }
        let rhs = e.dot(target.f(i));
        let denom = frobenius_norm(target.f(i)).max(1.0);
        worst = worst.max(frobenius_norm(&(&lhs - &rhs)) / denom);
    }
    let gram = crate::linalg::dagger(e).dot(e);
    let iso = frobenius_norm(&(&gram - &crate::linalg::identity(target.dim)));
    worst.max(iso)
}
