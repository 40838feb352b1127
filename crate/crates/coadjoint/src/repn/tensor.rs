//! Generic finite-dimensional representations with exact integer weights:
//! tensor products, Hom-modules, and structured application of
//! tensor-product operators without forming Kronecker matrices.

use ndarray::linalg::kron;
use ndarray::{Array1, Array2};
use std::sync::Arc;

use crate::lie::{Algebra, Weight};
use crate::linalg::{dagger, identity, CMat, CVec, C64};
use crate::repn::irrep::Irrep;

/// A (not necessarily irreducible) representation given by its lowering
/// operators and the exact weight of each basis vector.
#[derive(Clone)]
pub struct GenRep {
    pub algebra: Arc<Algebra>,
    pub dim: usize,
    pub weights: Vec<Weight>,
    pub f: Vec<CMat>,
}

impl GenRep {
    pub fn from_irrep(rep: &Irrep) -> Self {
        GenRep {
            algebra: rep.algebra.clone(),
            dim: rep.dim,
            weights: rep.weights.clone(),
            f: (0..rep.algebra.rank()).map(|i| rep.f(i).clone()).collect(),
        }
    }

    pub fn e(&self, i: usize) -> CMat {
        dagger(&self.f[i])
    }

    pub fn h(&self, i: usize) -> CMat {
        let mut h: CMat = Array2::zeros((self.dim, self.dim));
        for (v, w) in self.weights.iter().enumerate() {
            h[(v, v)] = C64::new(w.0[i] as f64, 0.0);
        }
        h
    }

    /// Tensor product `a ⊗ b`, index convention `r·dim_b + c` (left factor
    /// slow). Lowering operators act as `f ⊗ 1 + 1 ⊗ f`.
    pub fn tensor(a: &GenRep, b: &GenRep) -> Self {
        let rank = a.algebra.rank();
        let f = (0..rank)
            .map(|i| kron(&a.f[i], &identity(b.dim)) + kron(&identity(a.dim), &b.f[i]))
            .collect();
        let mut weights = Vec::with_capacity(a.dim * b.dim);
        for wa in &a.weights {
            for wb in &b.weights {
                weights.push(wa.add(wb));
            }
        }
        GenRep { algebra: a.algebra.clone(), dim: a.dim * b.dim, weights, f }
    }

    /// The representation on `Hom(V_src, V_tgt)` (matrices `ψ` of shape
    /// `dim_tgt × dim_src`, flattened row-major): `ξ·ψ = ξ_tgt ψ − ψ ξ_src`,
    /// so basis element `E_{rc}` has weight `w_r − w_c`.
    pub fn hom(tgt: &Irrep, src: &Irrep) -> Self {
        let rank = tgt.algebra.rank();
        let f = (0..rank)
            .map(|i| {
                kron(tgt.f(i), &identity(src.dim))
                    - kron(&identity(tgt.dim), &src.f(i).t().to_owned())
            })
            .collect();
        let mut weights = Vec::with_capacity(tgt.dim * src.dim);
        for wr in &tgt.weights {
            for wc in &src.weights {
                weights.push(wr.sub(wc));
            }
        }
        GenRep { algebra: tgt.algebra.clone(), dim: tgt.dim * src.dim, weights, f }
    }
}

/// Apply `A ⊗ 1 + 1 ⊗ B` to a vector of length `nrows(A)·nrows(B)` without
/// forming the Kronecker product: reshape to a matrix `X` and compute
/// `A X + X Bᵀ`.
pub fn pair_apply(a: &CMat, b: &CMat, x: &CVec) -> CVec {
    let (da, db) = (a.nrows(), b.nrows());
    let xm = x.view().into_shape_with_order((da, db)).expect("length mismatch in pair_apply");
    let y = a.dot(&xm) + xm.dot(&b.t());
    y.into_shape_with_order(da * db).expect("reshape").to_owned()
}

/// Apply `A ⊗ B` to a vector without forming the Kronecker product:
/// `vec(A X Bᵀ)` for the reshaped `X`.
pub fn kron_apply(a: &CMat, b: &CMat, x: &CVec) -> CVec {
    let (da, db) = (a.ncols(), b.ncols());
    let xm = x.view().into_shape_with_order((da, db)).expect("length mismatch in kron_apply");
    let y = a.dot(&xm).dot(&b.t());
    y.into_shape_with_order(a.nrows() * b.nrows()).expect("reshape").to_owned()
}

/// Tensor product of two vectors in the row-major convention used
/// throughout: entry `r·len(v) + c` is `u[r]·v[c]`.
pub fn outer(u: &CVec, v: &CVec) -> CVec {
    let mut out = Array1::zeros(u.len() * v.len());
    for (r, x) in u.iter().enumerate() {
        for (c, y) in v.iter().enumerate() {
            out[r * v.len() + c] = x * y;
        }
    }
    out
}
