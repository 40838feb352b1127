//! Integrable highest-weight representations, built level by level.
//!
//! The construction walks downward from the highest-weight vector. At level
//! `k` (number of lowering steps applied) the candidate vectors for the next
//! level are `f_i u` for every current basis vector `u` and simple index `i`.
//! Their Gram matrix is computable without ever materializing vectors:
//!
//! ```text
//! ⟨f_i u_s, f_j u_t⟩ = (F_j F_i†)[s,t] + δ_ij δ_st ⟨w(u_t), α_i∨⟩
//! ```
//!
//! where `F_i` is the block of `f_i` mapping the previous level into the
//! current one. A Gram-driven Gram-Schmidt pass selects an orthonormal basis
//! for the next level, and the pivot pattern plus expansion coefficients are
//! retained so the construction can later be *replayed* on any concrete
//! realization (e.g. inside a tensor product) to produce a matching embedding.

use ndarray::Array2;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::lie::{Algebra, Weight};
use crate::linalg::{
    cholesky_spd, dagger, frobenius_norm, gram_gs, lower_inverse, CMat, C64,
};

/// Hard cap on representation dimensions; keeps dense matrix work at desk
/// scale (a `dim × dim` complex matrix at the cap is ~17 MB).
pub const MAX_DIM: usize = 1024;

/// Construction record for one level: which candidates fed it and how the
/// accepted orthonormal vectors expand over those candidates.
#[derive(Clone, Debug)]
pub struct Level {
    /// Global index of the first basis vector of this level.
    pub start: usize,
    /// `(global parent index, simple index i)` for each candidate `f_i u_parent`.
    pub cands: Vec<(usize, usize)>,
    /// Row `t`: coefficients of the `t`-th accepted vector over `cands`.
    pub rows: Vec<Vec<C64>>,
}

/// An irreducible unitary representation in an orthonormal weight basis.
///
/// Basis order is level-major (height of `hw − μ`), with ties broken by the
/// deterministic candidate order `(parent, i)`; basis vector 0 is the highest
/// weight vector.
pub struct Irrep {
    pub algebra: Arc<Algebra>,
    pub hw: Weight,
    pub dim: usize,
    /// Weight of each basis vector (exact integers).
    pub weights: Vec<Weight>,
    f: Vec<CMat>,
    e: Vec<CMat>,
    levels: Vec<Level>,
    j: OnceLock<Vec<CMat>>,
}

impl Irrep {
    /// Build the irrep with the given dominant highest weight.
    pub fn new(algebra: &Arc<Algebra>, hw: Weight) -> Result<Self> {
        algebra.check_dominant(&hw)?;
        let target_dim = algebra.roots.weyl_dim(&hw)?;
        if target_dim > MAX_DIM {
            return Err(Error::SizeCap(format!(
                "irrep {hw} has dimension {target_dim}, beyond the cap {MAX_DIM}"
            )));
        }
        let rank = algebra.rank();
        let cartan = algebra.diagram.cartan().clone();

        let mut weights: Vec<Weight> = vec![hw.clone()];
        let mut levels: Vec<Level> = Vec::new();
        let mut f: Vec<CMat> = (0..rank).map(|_| Array2::zeros((target_dim, target_dim))).collect();

        // Current level: global indices [start, start + m). `fblocks[i]` maps
        // the previous level into the current one (m × m_prev).
        let mut start = 0usize;
        let mut m = 1usize;
        let mut fblocks: Vec<CMat> = (0..rank).map(|_| Array2::zeros((1, 0))).collect();

        for _ in 0..(4 * target_dim + 8) {
            if weights.len() == target_dim {
                break;
            }
            let ncand = m * rank;
            let cands: Vec<(usize, usize)> = (0..m)
                .flat_map(|s| (0..rank).map(move |i| (start + s, i)))
                .collect();
            // Gram of the candidates.
            let mut gram: CMat = Array2::zeros((ncand, ncand));
            let products: Vec<Vec<CMat>> = (0..rank)
                .map(|j| (0..rank).map(|i| fblocks[j].dot(&dagger(&fblocks[i]))).collect())
                .collect();
            for (c1, &(gs, i)) in cands.iter().enumerate() {
                for (c2, &(gt, jj)) in cands.iter().enumerate() {
                    let (s, t) = (gs - start, gt - start);
                    let mut v = products[jj][i][(s, t)];
                    if i == jj && s == t {
                        v += C64::new(weights[gt].0[i] as f64, 0.0);
                    }
                    gram[(c1, c2)] = v;
                }
            }
            let gs = gram_gs(&gram)?;
            if gs.rows.is_empty() {
                break;
            }
            let new_start = start + m;
            let new_m = gs.rows.len();
            if new_start + new_m > target_dim {
                return Err(Error::DegenerateSpectrum(format!(
                    "construction of {hw} overshot the Weyl dimension {target_dim}"
                )));
            }
            for row_pivot in &gs.pivots {
                let (parent, i) = cands[*row_pivot];
                let w = Weight(
                    (0..rank).map(|j| weights[parent].0[j] - cartan[i][j]).collect(),
                );
                weights.push(w);
            }
            // New lowering blocks current → next: F_i[t, s] = Σ_c r̄[t][c] G[c, (s,i)].
            let mut newblocks: Vec<CMat> = Vec::with_capacity(rank);
            for i in 0..rank {
                let mut blk: CMat = Array2::zeros((new_m, m));
                for (t, row) in gs.rows.iter().enumerate() {
                    for s in 0..m {
                        let cidx = s * rank + i;
                        let mut acc = C64::new(0.0, 0.0);
                        for (c, coef) in row.iter().enumerate() {
                            if coef.norm_sqr() > 0.0 {
                                acc += coef.conj() * gram[(c, cidx)];
                            }
                        }
                        blk[(t, s)] = acc;
                        f[i][(new_start + t, start + s)] = acc;
                    }
                }
                newblocks.push(blk);
            }
            levels.push(Level { start: new_start, cands, rows: gs.rows });
            start = new_start;
            m = new_m;
            fblocks = newblocks;
        }

        if weights.len() != target_dim {
            return Err(Error::DegenerateSpectrum(format!(
                "construction of {hw} produced dimension {} instead of {target_dim}",
                weights.len()
            )));
        }
        let e: Vec<CMat> = f.iter().map(dagger).collect();
        Ok(Irrep {
            algebra: algebra.clone(),
            hw,
            dim: target_dim,
            weights,
            f,
            e,
            levels,
            j: OnceLock::new(),
        })
    }

    /// Lowering operator for the `i`-th simple root.
    pub fn f(&self, i: usize) -> &CMat {
        &self.f[i]
    }

    /// Raising operator for the `i`-th simple root (adjoint of `f`).
    pub fn e(&self, i: usize) -> &CMat {
        &self.e[i]
    }

    /// Cartan generator `h_i` (diagonal, integer entries).
    pub fn h(&self, i: usize) -> CMat {
        let mut h: CMat = Array2::zeros((self.dim, self.dim));
        for (v, w) in self.weights.iter().enumerate() {
            h[(v, v)] = C64::new(w.0[i] as f64, 0.0);
        }
        h
    }

    /// Level-by-level construction records (for replay embeddings).
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Dynkin-style index `T` of the representation: the invariant form is
    /// `Q(x, y) = tr(ρ(x)ρ(y)) / T` in the long-1 normalization.
    pub fn rep_index(&self) -> f64 {
        let tr_h0: f64 = self.weights.iter().map(|w| (w.0[0] as f64).powi(2)).sum();
        self.algebra.roots.simple_len2(0) * tr_h0 / 8.0
    }

    /// Representatives `(e_β, f_β)` for every positive root, normalized so
    /// `Q(e_β, f_β) = 4 / q_β`. Simple roots use the construction operators;
    /// composite roots are built along the decomposition chain.
    pub fn root_vectors(&self) -> Vec<(CMat, CMat)> {
        let roots = &self.algebra.roots;
        let t = self.rep_index();
        let mut out: Vec<(CMat, CMat)> = Vec::with_capacity(roots.num_positive());
        for k in 0..roots.num_positive() {
            match roots.chain(k) {
                None => {
                    let i = roots.positive[k].iter().position(|&c| c == 1).unwrap();
                    out.push((self.e[i].clone(), self.f[i].clone()));
                }
                Some((i, parent)) => {
                    let ehat = self.e[i].dot(&out[parent].0) - out[parent].0.dot(&self.e[i]);
                    let n2 = frobenius_norm(&ehat).powi(2);
                    if t <= 0.0 || n2 <= 1e-24 {
                        let z: CMat = Array2::zeros((self.dim, self.dim));
                        out.push((z.clone(), z));
                        continue;
                    }
                    let s = (roots.root_len2(k) * n2 / (4.0 * t)).sqrt();
                    let eb = ehat.mapv(|z| z / s);
                    let fb = dagger(&eb);
                    out.push((eb, fb));
                }
            }
        }
        out
    }

    /// Orthonormal Hermitian generator basis `{J_a}`: `Q(J_a, J_b) = δ_ab`
    /// in the long-1 normalization, so for A1 these are the spin matrices
    /// with `[J_1, J_2] = i J_3` and Casimir `j(j+1)`.
    ///
    /// Order: `rank` Cartan combinations first, then `(J^x_β, J^y_β)` per
    /// positive root in root order.
    pub fn j_ops(&self) -> &[CMat] {
        self.j.get_or_init(|| self.build_j())
    }

    fn build_j(&self) -> Vec<CMat> {
        let r = self.algebra.rank();
        let roots = &self.algebra.roots;
        let cartan = self.algebra.diagram.cartan();
        let mut out: Vec<CMat> = Vec::with_capacity(self.algebra.dim());
        // Cartan sector: Gram Q(h_a, h_b) = 4 A_ab / q_a; orthonormalize by
        // the inverse Cholesky factor.
        let mut mq = Array2::<f64>::zeros((r, r));
        for a in 0..r {
            for b in 0..r {
                mq[(a, b)] = 4.0 * cartan[a][b] as f64 / roots.simple_len2(a);
            }
        }
        let l = cholesky_spd(&mq).expect("Cartan form is positive definite");
        let linv = lower_inverse(&l);
        for b in 0..r {
            let mut hb: CMat = Array2::zeros((self.dim, self.dim));
            for (v, w) in self.weights.iter().enumerate() {
                let s: f64 = (0..r).map(|i| linv[(b, i)] * w.0[i] as f64).sum();
                hb[(v, v)] = C64::new(s, 0.0);
            }
            out.push(hb);
        }
        for (k, (eb, fb)) in self.root_vectors().into_iter().enumerate() {
            let s = (roots.root_len2(k) / 8.0).sqrt();
            let jx = (&eb + &fb).mapv(|z| z * s);
            let jy = (&fb - &eb).mapv(|z| z * C64::new(0.0, s));
            out.push(jx);
            out.push(jy);
        }
        out
    }

    /// The quadratic Casimir `Σ_a J_a²` as a matrix.
    pub fn casimir(&self) -> CMat {
        let mut c: CMat = Array2::zeros((self.dim, self.dim));
        for j in self.j_ops() {
            c = c + j.dot(j);
        }
        c
    }

    /// Closed-form Casimir eigenvalue for this highest weight.
    pub fn casimir_value(&self) -> f64 {
        self.algebra.roots.casimir_eigenvalue(&self.hw)
    }
}
