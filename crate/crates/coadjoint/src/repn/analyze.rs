//! Diagnostics on constructed representations: defining-relation residuals,
//! Serre-relation and nilpotency checks, decomposition into irreducibles,
//! and structure constants of the orthonormal generator basis.

use ndarray::Array2;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::Weight;
use crate::linalg::{frobenius_norm, hermitian_eig, spectral_norm, CMat, C64};
use crate::repn::irrep::Irrep;
use crate::repn::tensor::GenRep;

/// Residual summary for the defining relations of a representation.
#[derive(Clone, Debug)]
pub struct RelationReport {
    /// Max relative Frobenius residual over `[h_i, f_j] = −A_{ji} f_j` and
    /// `[e_i, f_j] = δ_ij h_i`.
    pub commutation: f64,
    /// Max relative residual of the Serre relations
    /// `(ad e_i)^{1−A_{ji}} e_j = 0` (0 when the rank is 1).
    pub serre: f64,
    /// Per simple index: nilpotency degree `m_i = 1 + max_μ μ_i` and the
    /// spectral-norm ratio `‖e_i^{m_i}‖ / ‖e_i‖^{m_i}`.
    pub nilpotency: Vec<(usize, f64)>,
}

impl RelationReport {
    pub fn worst(&self) -> f64 {
        let nil = self.nilpotency.iter().map(|(_, r)| *r).fold(0.0_f64, f64::max);
        self.commutation.max(self.serre).max(nil)
    }
}

/// Check the defining relations for a representation given by lowering
/// operators and exact weights.
pub fn check_relations(rep: &GenRep) -> RelationReport {
    let rank = rep.algebra.rank();
    let a = rep.algebra.diagram.cartan();
    let dim = rep.dim;
    let es: Vec<CMat> = (0..rank).map(|i| rep.e(i)).collect();
    let hs: Vec<CMat> = (0..rank).map(|i| rep.h(i)).collect();

    let mut commutation = 0.0_f64;
    for i in 0..rank {
        for j in 0..rank {
            let scale = frobenius_norm(&rep.f[j]).max(1.0);
            let lhs = hs[i].dot(&rep.f[j]) - rep.f[j].dot(&hs[i]);
            let rhs = rep.f[j].mapv(|z| z * -(a[j][i] as f64));
            commutation = commutation.max(frobenius_norm(&(&lhs - &rhs)) / scale);
            let scale2 = (frobenius_norm(&es[i]) * frobenius_norm(&rep.f[j])).max(1.0);
            let lhs = es[i].dot(&rep.f[j]) - rep.f[j].dot(&es[i]);
            let rhs: CMat =
                if i == j { hs[i].clone() } else { Array2::zeros((dim, dim)) };
            commutation = commutation.max(frobenius_norm(&(&lhs - &rhs)) / scale2);
        }
    }

    let mut serre = 0.0_f64;
    for i in 0..rank {
        for j in 0..rank {
            if i == j {
                continue;
            }
            let power = (1 - a[j][i]) as usize;
            let mut x = es[j].clone();
            for _ in 0..power {
                x = es[i].dot(&x) - x.dot(&es[i]);
            }
            let denom = frobenius_norm(&es[i]).powi(power as i32) * frobenius_norm(&es[j]);
            serre = serre.max(frobenius_norm(&x) / denom.max(1.0));
        }
    }

    let mut nilpotency = Vec::with_capacity(rank);
    for i in 0..rank {
        let m = 1 + rep.weights.iter().map(|w| w.0[i]).max().unwrap_or(0).max(0) as usize;
        let base = spectral_norm(&es[i]);
        if base == 0.0 {
            nilpotency.push((m, 0.0));
            continue;
        }
        let mut x = es[i].clone();
        for _ in 1..m {
            x = x.dot(&es[i]);
        }
        nilpotency.push((m, spectral_norm(&x) / base.powi(m as i32)));
    }

    RelationReport { commutation, serre, nilpotency }
}

/// Decompose a representation into irreducibles by counting, for every
/// dominant weight, the joint null space of the raising operators on its
/// weight space. The multiplicities are cross-checked against the total
/// dimension through the Weyl formula.
pub fn decompose(rep: &GenRep) -> Result<Vec<(Weight, usize)>> {
    let rank = rep.algebra.rank();
    let es: Vec<CMat> = (0..rank).map(|i| rep.e(i)).collect();
    let mut by_weight: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (v, w) in rep.weights.iter().enumerate() {
        by_weight.entry(w.0.clone()).or_default().push(v);
    }

    let mut out: Vec<(Weight, usize)> = Vec::new();
    for (coords, slots) in by_weight.iter().rev() {
        let w = Weight(coords.clone());
        if !w.is_dominant() {
            continue;
        }
        let m = slots.len();
        let mut gram: CMat = Array2::zeros((m, m));
        for e in &es {
            for (p, &vp) in slots.iter().enumerate() {
                for (q, &vq) in slots.iter().enumerate() {
                    let mut acc = C64::new(0.0, 0.0);
                    for r in 0..rep.dim {
                        acc += e[(r, vp)].conj() * e[(r, vq)];
                    }
                    gram[(p, q)] += acc;
                }
            }
        }
        let (vals, _) = hermitian_eig(&gram);
        let scale = vals.last().copied().unwrap_or(0.0).max(1.0);
        let mut mult = 0usize;
        for &v in &vals {
            if v <= 1e-9 * scale {
                mult += 1;
            } else if v <= 1e-5 * scale {
                return Err(Error::DegenerateSpectrum(format!(
                    "raising-kernel eigenvalue {v:.3e} in guard band at weight {w}"
                )));
            }
        }
        if mult > 0 {
            out.push((w, mult));
        }
    }

    let total: usize = out
        .iter()
        .map(|(w, m)| rep.algebra.roots.weyl_dim(w).map(|d| d * m))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .sum();
    if total != rep.dim {
        return Err(Error::DegenerateSpectrum(format!(
            "decomposition accounts for dimension {total}, representation has {}",
            rep.dim
        )));
    }
    Ok(out)
}

/// Structure constants of the orthonormal generator basis:
/// `[J_a, J_b] = i Σ_k C_{abk} J_k`. Returns the constants and the largest
/// residual of reality/closure.
pub fn structure_constants(rep: &Irrep) -> (Vec<Array2<f64>>, f64) {
    let js = rep.j_ops();
    let n = js.len();
    let t = rep.rep_index();
    let mut c: Vec<Array2<f64>> = vec![Array2::zeros((n, n)); n];
    let mut residual = 0.0_f64;
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let comm = js[a].dot(&js[b]) - js[b].dot(&js[a]);
            // Project back on the basis and measure what is left over.
            let mut remainder = comm.clone();
            for (k, jk) in js.iter().enumerate() {
                let tr: C64 = comm.dot(jk).diag().iter().copied().sum();
                let coef = tr / t;
                residual = residual.max(coef.re.abs()); // tr([J,J]J) is imaginary
                c[a][(b, k)] = coef.im;
                remainder = remainder - jk.mapv(|z| z * C64::new(0.0, coef.im));
            }
            residual = residual.max(frobenius_norm(&remainder));
        }
    }
    (c, residual)
}

/// Adjoint representation matrices built from structure constants:
/// `(ad_a)[k, b] = i C_{abk}`. They are Hermitian and satisfy the same
/// commutation relations, which makes them an independent oracle for the
/// Casimir eigenvalue of the adjoint weight.
pub fn adjoint_rep(c: &[Array2<f64>]) -> Vec<CMat> {
    let n = c.len();
    (0..n)
        .map(|a| {
            let mut m: CMat = Array2::zeros((n, n));
            for b in 0..n {
                for k in 0..n {
                    m[(k, b)] = C64::new(0.0, c[a][(b, k)]);
                }
            }
            m
        })
        .collect()
}
