//! The level-indexed family of quantized-bundle modules over one orbit tower.
//!
//! At level `N` the module is realized concretely as the space of
//! `dim(NΛ) × dim(NΛ+λ*)` matrices: maps `V(NΛ+λ*) → V(NΛ)` on which the
//! level-`N` matrix algebra acts by left multiplication. The bridge to the
//! projection picture is the Cartan-component isometry
//! `E_N : V(NΛ+λ*) ↪ V(NΛ) ⊗ V(μ̃)`, where `V(μ̃)` is the fixed auxiliary
//! irrep whose extreme weight is `λ*`; the invariant projection is
//! `Q_N = E_N E_N†`, and a stored matrix `ψ` corresponds to the full-space
//! element `ψ E_N†`, which is right-invariant under `Q_N`.
//!
//! The ladder maps are
//! `ι_N(ψ) = Π₊ (1 ⊗ ψ) Π_{λ+}†` (two component isometries, one for the main
//! tower and one for the shifted family) and `π_N` = the literal restriction
//! of the algebra projection tensored with the identity on the auxiliary
//! factor. For dominant `λ` the two available forms of `ι_N` agree exactly;
//! otherwise they differ by a level-dependent scalar, which is measured, not
//! hidden (see the unit tests).

use ndarray::linalg::kron;
use ndarray::Array2;
use std::sync::Arc;

use crate::berezin::Tower;
use crate::bundles::weights::transition_level;
use crate::error::{Error, Result};
use crate::lie::Weight;
use crate::linalg::{dagger, frobenius_norm, hermitian_eig, identity, CMat, C64};
use crate::repn::{component_embedding, Irrep};

/// One level of the family: dimensions and the invariant projection whose
/// column space realizes the module inside `V(NΛ) ⊗ V(μ̃)`.
pub struct QuantModule {
    pub n: usize,
    pub lambda: Weight,
    /// `(dim(NΛ), dim(NΛ*+λ))` — rows and columns of a stored element.
    pub dims: (usize, usize),
    /// Projection on `V(NΛ) ⊗ V(μ̃)` with rank `dims.1`.
    pub q: CMat,
}

/// Numerical health of one projection: all quantities should sit at rounding
/// level for a correctly built module.
#[derive(Clone, Debug)]
pub struct QInvariants {
    /// `‖Q² − Q‖`
    pub idempotency: f64,
    /// `‖Q − Q†‖`
    pub self_adjointness: f64,
    /// worst `‖[J_a ⊗ 1 + 1 ⊗ J_a, Q]‖` over the orthonormal generator basis
    pub equivariance: f64,
    /// `|tr Q − expected_rank|`
    pub trace_defect: f64,
    pub rank: usize,
    pub expected_rank: usize,
}

impl QInvariants {
    pub fn worst(&self) -> f64 {
        self.idempotency
            .max(self.self_adjointness)
            .max(self.equivariance)
            .max(self.trace_defect)
    }
}

/// Outcome of one projection-recursion step, up or down one level.
#[derive(Clone, Debug)]
pub struct RecursionCheck {
    pub from: usize,
    pub to: usize,
    /// Frobenius distance between the transported and the freshly built
    /// projection.
    pub residual: f64,
    /// True exactly when the step crosses zero-to-nonzero going up, where the
    /// upward recursion is expected to fail.
    pub transition: bool,
}

/// Recorded spectrum of the down-up composite `π ∘ ι` on one level.
#[derive(Clone, Debug)]
pub struct RoundTripSpectrum {
    pub n: usize,
    /// Eigenvalues of the Hermitian part, ascending.
    pub eigenvalues: Vec<f64>,
    /// `‖M − M†‖ / max(‖M‖, 1)` of the composite — how far it is from the
    /// self-adjoint map the adjointness of the two ladders predicts.
    pub hermiticity_defect: f64,
}

/// All level data for one bundle family `λ` over a fixed orbit tower.
pub struct BundleFamily {
    tower: Arc<Tower>,
    pub lambda: Weight,
    transition: usize,
    /// Auxiliary irrep `V(μ̃)`, `μ̃` the dominant representative of `λ*`.
    aux_rep: Arc<Irrep>,
    /// Shifted levels `V(NΛ + λ*)` for `N = transition ..= n_max`.
    aux_levels: Vec<Arc<Irrep>>,
    /// `E_N : V(NΛ+λ*) ↪ V(NΛ) ⊗ V(μ̃)`, same index range as `aux_levels`.
    cartan_embed: Vec<CMat>,
    /// `V((N+1)Λ+λ*) ↪ V(Λ) ⊗ V(NΛ+λ*)` for `N = transition .. n_max`.
    aux_plus: Vec<CMat>,
}

impl BundleFamily {
    /// Build every shifted level and embedding up to the tower's top. Errors
    /// if the family is empty for all levels (inadmissible `λ`), if it is
    /// zero throughout the tower's range, or if a required component fails
    /// the multiplicity-one check.
    pub fn new(tower: &Arc<Tower>, lambda: Weight) -> Result<Self> {
        let algebra = &tower.algebra;
        if lambda.rank() != algebra.rank() {
            return Err(Error::RankMismatch { expected: algebra.rank(), got: lambda.rank() });
        }
        let transition = transition_level(algebra, &tower.lambda, &lambda)?;
        if transition > tower.n_max {
            return Err(Error::Inadmissible(format!(
                "family {lambda} first becomes nonzero at level {transition}, beyond the \
                 tower top {}",
                tower.n_max
            )));
        }
        let lam_star = algebra.dual_weight(&lambda);
        let aux_hw = algebra.roots.dominant_representative(&lam_star, &vec![true; algebra.rank()]);
        let aux_rep = Arc::new(Irrep::new(algebra, aux_hw)?);

        let mut aux_levels = Vec::with_capacity(tower.n_max - transition + 1);
        for n in transition..=tower.n_max {
            let hw = tower.lambda.scale(n as i64).add(&lam_star);
            aux_levels.push(Arc::new(Irrep::new(algebra, hw)?));
        }
        let cartan_embed: Vec<CMat> = (transition..=tower.n_max)
            .map(|n| {
                component_embedding(tower.level(n), &aux_rep, &aux_levels[n - transition])
            })
            .collect::<Result<_>>()?;
        let aux_plus: Vec<CMat> = (transition..tower.n_max)
            .map(|n| {
                component_embedding(
                    tower.reference(),
                    &aux_levels[n - transition],
                    &aux_levels[n + 1 - transition],
                )
            })
            .collect::<Result<_>>()?;

        Ok(BundleFamily { tower: tower.clone(), lambda, transition, aux_rep, aux_levels, cartan_embed, aux_plus })
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    /// First level with a nonzero module.
    pub fn transition(&self) -> usize {
        self.transition
    }

    pub fn n_max(&self) -> usize {
        self.tower.n_max
    }

    /// The fixed auxiliary factor `V(μ̃)`.
    pub fn aux_rep(&self) -> &Arc<Irrep> {
        &self.aux_rep
    }

    /// The shifted level `V(NΛ + λ*)`; `n` must be at or above the transition.
    pub fn aux_level(&self, n: usize) -> &Arc<Irrep> {
        &self.aux_levels[n - self.transition]
    }

    /// Component isometry `V(NΛ+λ*) ↪ V(NΛ) ⊗ V(μ̃)`.
    pub fn cartan_embedding(&self, n: usize) -> &CMat {
        &self.cartan_embed[n - self.transition]
    }

    /// Shifted-ladder isometry `V((N+1)Λ+λ*) ↪ V(Λ) ⊗ V(NΛ+λ*)`.
    pub fn aux_step(&self, n: usize) -> &CMat {
        &self.aux_plus[n - self.transition]
    }

    /// `(rows, cols)` of a stored element at level `n`, `None` for the zero
    /// module below the transition.
    pub fn dims(&self, n: usize) -> Option<(usize, usize)> {
        if n < self.transition {
            None
        } else {
            Some((self.tower.dim(n), self.aux_levels[n - self.transition].dim))
        }
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if n > self.tower.n_max {
            return Err(Error::LevelMismatch { expected: self.tower.n_max, got: n });
        }
        Ok(())
    }

    fn check_element(&self, n: usize, psi: &CMat) -> Result<()> {
        self.check_level(n)?;
        let Some(dims) = self.dims(n) else {
            return Err(Error::ZeroModule);
        };
        if psi.dim() != dims {
            return Err(Error::DimensionMismatch(format!(
                "module element at level {n} must be {}×{}, got {}×{}",
                dims.0,
                dims.1,
                psi.nrows(),
                psi.ncols()
            )));
        }
        Ok(())
    }

    /// The invariant projection at level `n` — the zero matrix below the
    /// transition, `E_N E_N†` above it. Total within the tower range so the
    /// recursion checks can cross the transition.
    pub fn q_projection(&self, n: usize) -> Result<CMat> {
        self.check_level(n)?;
        let side = self.tower.dim(n) * self.aux_rep.dim;
        if n < self.transition {
            return Ok(Array2::zeros((side, side)));
        }
        let e = self.cartan_embedding(n);
        Ok(e.dot(&dagger(e)))
    }

    /// The level-`n` module with its projection; errors below the transition.
    pub fn module(&self, n: usize) -> Result<QuantModule> {
        self.check_level(n)?;
        let Some(dims) = self.dims(n) else {
            return Err(Error::ZeroModule);
        };
        Ok(QuantModule { n, lambda: self.lambda.clone(), dims, q: self.q_projection(n)? })
    }

    /// Idempotency, self-adjointness, equivariance and rank of the level-`n`
    /// projection.
    pub fn q_invariants(&self, n: usize) -> Result<QInvariants> {
        let module = self.module(n)?;
        let q = &module.q;
        let q2 = q.dot(q);
        let idempotency = frobenius_norm(&(&q2 - q));
        let self_adjointness = frobenius_norm(&(q - &dagger(q)));

        let level = self.tower.level(n);
        let mut equivariance = 0.0_f64;
        for (ja, jb) in level.j_ops().iter().zip(self.aux_rep.j_ops().iter()) {
            let diag = kron(ja, &identity(self.aux_rep.dim)) + kron(&identity(level.dim), jb);
            let comm = diag.dot(q) - q.dot(&diag);
            equivariance = equivariance.max(frobenius_norm(&comm));
        }

        let expected_rank = module.dims.1;
        let trace: C64 = (0..q.nrows()).map(|i| q[(i, i)]).sum();
        let rank = trace.re.round().max(0.0) as usize;
        let trace_defect = (trace - C64::new(expected_rank as f64, 0.0)).norm();
        Ok(QInvariants {
            idempotency,
            self_adjointness,
            equivariance,
            trace_defect,
            rank,
            expected_rank,
        })
    }

    /// Transport the level-`n` projection up one level through the algebra
    /// injection (acting on the first tensor factor only) and compare with
    /// the projection built directly at `n+1`. Exact for the trivial family;
    /// otherwise the residual is a computable fraction that decays
    /// polynomially with the level and is largest at the zero-to-nonzero
    /// transition, which is flagged.
    pub fn recursion_step_i(&self, n: usize) -> Result<RecursionCheck> {
        if n >= self.tower.n_max {
            return Err(Error::LevelMismatch { expected: self.tower.n_max - 1, got: n });
        }
        let q_here = self.q_projection(n)?;
        let q_up = self.q_projection(n + 1)?;
        let step = kron(self.tower.plus(n), &identity(self.aux_rep.dim));
        let lifted = dagger(&step)
            .dot(&kron(&identity(self.tower.reference().dim), &q_here))
            .dot(&step);
        Ok(RecursionCheck {
            from: n,
            to: n + 1,
            residual: frobenius_norm(&(&lifted - &q_up)),
            transition: n + 1 == self.transition,
        })
    }

    /// Transport the level-`n` projection down one level through the algebra
    /// projection and compare with the projection built directly at `n−1`.
    /// Exact for the trivial family; otherwise the residual is a computable
    /// decaying fraction, nonzero even at the step onto the zero module.
    pub fn recursion_step_p(&self, n: usize) -> Result<RecursionCheck> {
        self.check_level(n)?;
        if n == 0 {
            return Err(Error::LevelMismatch { expected: 1, got: n });
        }
        let q_here = self.q_projection(n)?;
        let q_down = self.q_projection(n - 1)?;
        let step = kron(self.tower.minus(n - 1), &identity(self.aux_rep.dim));
        let lowered = dagger(&step)
            .dot(&kron(&identity(self.tower.dual_reference().dim), &q_here))
            .dot(&step);
        Ok(RecursionCheck {
            from: n,
            to: n - 1,
            residual: frobenius_norm(&(&lowered - &q_down)),
            transition: false,
        })
    }

    /// Module injection `ι_N : V^λ_N → V^λ_{N+1}` in the two-isometry form
    /// `Π₊ (1 ⊗ ψ) Π_{λ+}†`, which depends only on the orbit weight, `λ`,
    /// and the level.
    pub fn iota(&self, n: usize, psi: &CMat) -> Result<CMat> {
        self.check_element(n, psi)?;
        if n >= self.tower.n_max {
            return Err(Error::LevelMismatch { expected: self.tower.n_max - 1, got: n });
        }
        let d_ref = self.tower.reference().dim;
        Ok(dagger(self.tower.plus(n)).dot(&kron(&identity(d_ref), psi)).dot(self.aux_step(n)))
    }

    /// Module surjection `π_N : V^λ_N → V^λ_{N−1}`, the literal restriction
    /// of the algebra projection tensored with the identity on the auxiliary
    /// factor. At the transition level the target is the zero module and the
    /// result has zero columns.
    pub fn pi(&self, n: usize, psi: &CMat) -> Result<CMat> {
        self.check_element(n, psi)?;
        if n == 0 {
            return Err(Error::LevelMismatch { expected: 1, got: n });
        }
        if n == self.transition {
            return Ok(Array2::zeros((self.tower.dim(n - 1), 0)));
        }
        let full = psi.dot(&dagger(self.cartan_embedding(n)));
        let d_dual = self.tower.dual_reference().dim;
        let step = kron(self.tower.minus(n - 1), &identity(self.aux_rep.dim));
        let lowered = dagger(self.tower.minus(n - 1))
            .dot(&kron(&identity(d_dual), &full))
            .dot(&step);
        Ok(lowered.dot(self.cartan_embedding(n - 1)))
    }

    /// Spectrum of the composite `π_{n+1} ∘ ι_n` on the level-`n` module,
    /// recorded (not asserted): the two ladders are mutually adjoint, so the
    /// composite should be self-adjoint and positive, but its scale is not
    /// normalized to 1.
    pub fn round_trip_spectrum(&self, n: usize) -> Result<RoundTripSpectrum> {
        let Some((rows, cols)) = self.dims(n) else {
            return Err(Error::ZeroModule);
        };
        if n >= self.tower.n_max {
            return Err(Error::LevelMismatch { expected: self.tower.n_max - 1, got: n });
        }
        let dim = rows * cols;
        let mut composite: CMat = Array2::zeros((dim, dim));
        for r in 0..rows {
            for c in 0..cols {
                let mut unit: CMat = Array2::zeros((rows, cols));
                unit[(r, c)] = C64::new(1.0, 0.0);
                let back = self.pi(n + 1, &self.iota(n, &unit)?)?;
                for (k, v) in back.iter().enumerate() {
                    composite[(k, r * cols + c)] = *v;
                }
            }
        }
        let anti = frobenius_norm(&(&composite - &dagger(&composite)));
        let scale = frobenius_norm(&composite).max(1.0);
        let herm = (&composite + &dagger(&composite)).mapv(|z| z * 0.5);
        let (eigenvalues, _) = hermitian_eig(&herm);
        Ok(RoundTripSpectrum { n, eigenvalues, hermiticity_defect: anti / scale })
    }

    /// Iterate `π` for `steps` levels, reporting the dimension ratio
    /// `dim V_m / dim V_{m−1}` at each step. Stepping past the transition —
    /// into the zero module — is rejected.
    pub fn coarse_grain(&self, n: usize, psi: &CMat, steps: usize) -> Result<(CMat, Vec<f64>)> {
        self.check_element(n, psi)?;
        if steps > n - self.transition {
            return Err(Error::InvalidInput(format!(
                "{steps} coarse-graining steps from level {n} would step past the zero \
                 module at level {}",
                self.transition
            )));
        }
        let mut field = psi.clone();
        let mut ratios = Vec::with_capacity(steps);
        for m in (n - steps + 1..=n).rev() {
            let (hi, lo) = (self.dims(m).unwrap(), self.dims(m - 1).unwrap());
            ratios.push((hi.0 * hi.1) as f64 / (lo.0 * lo.1) as f64);
            field = self.pi(m, &field)?;
        }
        Ok((field, ratios))
    }
}
