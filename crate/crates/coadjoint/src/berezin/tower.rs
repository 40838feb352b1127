//! The tower of matrix algebras over one orbit: the irreps `V(NΛ)` for
//! `N = 0..n_max` together with the two families of intertwining isometries
//! that connect neighbouring levels,
//!
//! * `plus(n)`: `V((n+1)Λ) ↪ V(Λ) ⊗ V(nΛ)`,
//! * `minus(n)`: `V(nΛ) ↪ V(Λ*) ⊗ V((n+1)Λ)`,
//!
//! plus the coherent-vector machinery that turns orbit points into unit
//! vectors at every level.

use ndarray::{Array1, Array2};
use std::sync::Arc;

use crate::berezin::orbit::OrbitPoint;
use crate::error::{Error, Result};
use crate::lie::{Algebra, Series, Weight};
use crate::linalg::{dagger, expm_antihermitian, CMat, CVec, C64};
use crate::repn::{component_embedding, outer, Irrep};

/// Auxiliary ladder in the first fundamental weight used to climb from the
/// defining representation to `V(Λ)` when `Λ = k·π₁` of an A-series algebra.
struct DefiningLadder {
    k: usize,
    defining_dim: usize,
    /// `steps[m]`: `V((m+1)π₁) ↪ V(π₁) ⊗ V(mπ₁)` for `m = 1..k−1`.
    steps: Vec<Arc<CMat>>,
}

/// The quantization tower over the orbit of `Λ`.
pub struct Tower {
    pub algebra: Arc<Algebra>,
    pub lambda: Weight,
    pub n_max: usize,
    levels: Vec<Arc<Irrep>>,
    plus: Vec<Arc<CMat>>,
    minus: Vec<Arc<CMat>>,
    dual_reference: Arc<Irrep>,
    ladder: Option<DefiningLadder>,
}

impl Tower {
    /// Build all levels and ladder isometries eagerly.
    pub fn new(algebra: &Arc<Algebra>, lambda: Weight, n_max: usize) -> Result<Tower> {
        algebra.check_dominant(&lambda)?;
        if lambda.is_zero() {
            return Err(Error::InvalidInput(
                "the orbit base weight must be nonzero".into(),
            ));
        }
        if n_max == 0 {
            return Err(Error::InvalidInput("a tower needs at least one level".into()));
        }
        let mut levels = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            levels.push(Arc::new(Irrep::new(algebra, lambda.scale(n as i64))?));
        }
        let dual_reference = Arc::new(Irrep::new(algebra, algebra.dual_weight(&lambda))?);
        let reference = levels[1].clone();
        let mut plus = Vec::with_capacity(n_max);
        let mut minus = Vec::with_capacity(n_max);
        for n in 0..n_max {
            plus.push(Arc::new(component_embedding(&reference, &levels[n], &levels[n + 1])?));
            minus.push(Arc::new(component_embedding(
                &dual_reference,
                &levels[n + 1],
                &levels[n],
            )?));
        }
        let ladder = Self::build_ladder(algebra, &lambda, &reference)?;
        Ok(Tower {
            algebra: algebra.clone(),
            lambda,
            n_max,
            levels,
            plus,
            minus,
            dual_reference,
            ladder,
        })
    }

    /// Coherent sampling is available when the base weight is a multiple of
    /// the first fundamental weight of an A-series algebra, where Haar
    /// samples of the group act directly on the defining space.
    fn build_ladder(
        algebra: &Arc<Algebra>,
        lambda: &Weight,
        reference: &Arc<Irrep>,
    ) -> Result<Option<DefiningLadder>> {
        if algebra.diagram.series != Series::A {
            return Ok(None);
        }
        let k = lambda.0[0];
        if k < 1 || lambda.0.iter().skip(1).any(|&c| c != 0) {
            return Ok(None);
        }
        let k = k as usize;
        let defining_dim = algebra.rank() + 1;
        let mut steps = Vec::new();
        if k > 1 {
            let unit = Weight(lambda.0.iter().map(|&c| c.min(1)).collect());
            let mut lower = Arc::new(Irrep::new(algebra, unit.clone())?);
            let one = lower.clone();
            for m in 1..k {
                let upper = if m + 1 == k {
                    reference.clone()
                } else {
                    Arc::new(Irrep::new(algebra, unit.scale(m as i64 + 1))?)
                };
                steps.push(Arc::new(component_embedding(&one, &lower, &upper)?));
                lower = upper;
            }
        }
        Ok(Some(DefiningLadder { k, defining_dim, steps }))
    }

    pub fn level(&self, n: usize) -> &Arc<Irrep> {
        &self.levels[n]
    }

    pub fn dim(&self, n: usize) -> usize {
        self.levels[n].dim
    }

    /// `V(Λ)`.
    pub fn reference(&self) -> &Arc<Irrep> {
        &self.levels[1]
    }

    /// `V(Λ*)`.
    pub fn dual_reference(&self) -> &Arc<Irrep> {
        &self.dual_reference
    }

    /// Isometric embedding `V((n+1)Λ) ↪ V(Λ) ⊗ V(nΛ)`, `0 ≤ n < n_max`.
    pub fn plus(&self, n: usize) -> &CMat {
        &self.plus[n]
    }

    /// Isometric embedding `V(nΛ) ↪ V(Λ*) ⊗ V((n+1)Λ)`, `0 ≤ n < n_max`.
    pub fn minus(&self, n: usize) -> &CMat {
        &self.minus[n]
    }

    /// Dimension of the defining space that orbit points live in, when
    /// coherent sampling is supported.
    pub fn sampling_dim(&self) -> Option<usize> {
        self.ladder.as_ref().map(|l| l.defining_dim)
    }

    /// The multiple `k` in `Λ = k·π₁` when coherent sampling is supported.
    /// Components of a level-`n` coherent vector are degree-`k·n` polynomials
    /// in the defining vector, which bounds the quadrature degree integrands
    /// need.
    pub fn defining_multiple(&self) -> Option<usize> {
        self.ladder.as_ref().map(|l| l.k)
    }

    fn ladder(&self) -> Result<&DefiningLadder> {
        self.ladder.as_ref().ok_or_else(|| {
            Error::Unsupported(format!(
                "coherent sampling needs an A-series base weight k·π1, got {} over {}",
                self.lambda,
                self.algebra.name()
            ))
        })
    }

    /// Coherent unit vector at level `n` for an orbit point, computed by
    /// climbing the ladder isometries and cached on the point.
    pub fn coherent(&self, pt: &OrbitPoint, n: usize) -> Result<CVec> {
        assert!(n <= self.n_max, "level {n} beyond tower top {}", self.n_max);
        let ladder = self.ladder()?;
        if pt.defining().len() != ladder.defining_dim {
            return Err(Error::DimensionMismatch(format!(
                "orbit point lives in dimension {}, tower defines {}",
                pt.defining().len(),
                ladder.defining_dim
            )));
        }
        {
            let mut tag = pt.chain_tag.borrow_mut();
            let want = (self.algebra.name(), self.lambda.0.clone());
            if tag.as_ref() != Some(&want) {
                pt.chain.borrow_mut().clear();
                *tag = Some(want);
            }
        }
        let mut chain = pt.chain.borrow_mut();
        if chain.is_empty() {
            chain.push(Array1::from(vec![C64::new(1.0, 0.0)]));
            let mut v = pt.defining().clone();
            for step in &ladder.steps {
                v = normalized_descent(step, pt.defining(), &v)?;
            }
            chain.push(v);
        }
        while chain.len() <= n {
            let m = chain.len() - 1;
            let reference = chain[1].clone();
            let v = normalized_descent(&self.plus[m], &reference, &chain[m])?;
            chain.push(v);
        }
        Ok(chain[n].clone())
    }

    /// Overlap `⟨v_n(p), v_n(q)⟩` of level-`n` coherent vectors.
    pub fn coherent_overlap(&self, p: &OrbitPoint, q: &OrbitPoint, n: usize) -> Result<C64> {
        let vp = self.coherent(p, n)?;
        let vq = self.coherent(q, n)?;
        Ok(vp.iter().zip(vq.iter()).map(|(a, b)| a.conj() * b).sum())
    }

    /// The normalized generators `X_a = J_a / n` at level `n ≥ 1`.
    pub fn x_ops(&self, n: usize) -> Vec<CMat> {
        assert!(n >= 1, "level-0 algebra is trivial");
        let scale = 1.0 / n as f64;
        self.levels[n].j_ops().iter().map(|j| j.mapv(|z| z * scale)).collect()
    }

    /// Classical coordinates of an orbit point: `x_a(p) = ⟨v_1|J_a|v_1⟩` in
    /// the reference representation. Coherent expectation values of the
    /// generators scale exactly linearly with the level, so this equals
    /// `⟨v_n|J_a|v_n⟩ / n` for every `n`.
    pub fn classical_x(&self, pt: &OrbitPoint) -> Result<Vec<f64>> {
        let v = self.coherent(pt, 1)?;
        Ok(self
            .reference()
            .j_ops()
            .iter()
            .map(|j| {
                let jv = j.dot(&v);
                v.iter().zip(jv.iter()).map(|(a, b)| (a.conj() * b).re).sum()
            })
            .collect())
    }

    /// Unitary representing `exp(i Σ_a c_a J_a)` at level `n`. The same
    /// coefficient vector denotes the same group element at every level and
    /// on every bundle, which is what makes equivariance checks meaningful.
    pub fn level_exp(&self, n: usize, coeffs: &[f64]) -> Result<CMat> {
        let js = self.levels[n].j_ops();
        if coeffs.len() != js.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                js.len()
            )));
        }
        let d = self.levels[n].dim;
        let mut xi: CMat = Array2::zeros((d, d));
        for (c, j) in coeffs.iter().zip(js.iter()) {
            xi = xi + j.mapv(|z| z * C64::new(0.0, *c));
        }
        expm_antihermitian(&xi)
    }

    /// Representation matrix at level `n` of a group element given in the
    /// defining space (A-series towers with coherent support only).
    pub fn level_action(&self, n: usize, g: &CMat) -> Result<CMat> {
        let ladder = self.ladder()?;
        if g.nrows() != ladder.defining_dim || g.ncols() != ladder.defining_dim {
            return Err(Error::DimensionMismatch(format!(
                "group element is {}x{}, defining dimension is {}",
                g.nrows(),
                g.ncols(),
                ladder.defining_dim
            )));
        }
        let mut g_ref = g.clone();
        for step in &ladder.steps {
            g_ref = conjugate_action(step, g, &g_ref);
        }
        if n == 0 {
            return Ok(Array2::from_diag_elem(1, C64::new(1.0, 0.0)));
        }
        let mut rho = g_ref.clone();
        for m in 1..n {
            rho = conjugate_action(&self.plus[m], &g_ref, &rho);
        }
        Ok(rho)
    }
}

/// `E†(u ⊗ v)` renormalized. The product of two coherent vectors at the same
/// point lies entirely inside the top component, so the norm is 1 up to
/// rounding; a significant drop signals a broken embedding.
fn normalized_descent(e: &CMat, u: &CVec, v: &CVec) -> Result<CVec> {
    let t = outer(u, v);
    let w = dagger(e).dot(&t);
    let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm < 0.99 {
        return Err(Error::DegenerateSpectrum(format!(
            "coherent vector leaked out of the top component (norm {norm:.6})"
        )));
    }
    Ok(w.mapv(|z| z / norm))
}

/// `E†(a ⊗ b)E` computed column-by-column through the reshaped embedding.
fn conjugate_action(e: &CMat, a: &CMat, b: &CMat) -> CMat {
    let (da, db) = (a.nrows(), b.nrows());
    let d_tgt = e.ncols();
    let mut y: CMat = Array2::zeros((da * db, d_tgt));
    for t in 0..d_tgt {
        let col = e.column(t).to_owned();
        let xm = col.view().into_shape_with_order((da, db)).expect("embedding shape");
        let img = a.dot(&xm).dot(&b.t());
        let flat = img.into_shape_with_order(da * db).expect("reshape");
        for r in 0..da * db {
            y[(r, t)] = flat[r];
        }
    }
    dagger(e).dot(&y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frobenius_norm, identity};
    use crate::numerics::sampling::{haar_special, seeded_rng};
    use crate::repn::embedding_residual;

    fn a1_tower(n_max: usize) -> Tower {
        let alg = Algebra::from_name("A1").unwrap();
        Tower::new(&alg, Weight(vec![1]), n_max).unwrap()
    }

    #[test]
    fn embeddings_are_isometric_intertwiners() {
        let t = a1_tower(5);
        for n in 0..5 {
            let up = embedding_residual(t.reference(), t.level(n), t.level(n + 1), t.plus(n));
            let down =
                embedding_residual(t.dual_reference(), t.level(n + 1), t.level(n), t.minus(n));
            assert!(up < 1e-12, "plus({n}) residual {up}");
            assert!(down < 1e-12, "minus({n}) residual {down}");
        }
        assert_eq!(t.dim(5), 6);
        assert_eq!(t.sampling_dim(), Some(2));
    }

    #[test]
    fn coherent_chain_agrees_with_exponentiated_action() {
        let t = a1_tower(4);
        let (theta, phi) = (0.9_f64, 1.7_f64);
        let pt = OrbitPoint::from_angles(theta, phi);
        // exp(iθ(sinφ·J_x − cosφ·J_y)) sends the highest weight direction to
        // the point (θ, φ) with the same phase convention as `from_angles`.
        let coeffs = [0.0, theta * phi.sin(), -theta * phi.cos()];
        let u1 = t.level_exp(1, &coeffs).unwrap();
        let diff: f64 = u1
            .column(0)
            .iter()
            .zip(pt.defining().iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        assert!(diff.sqrt() < 1e-12);
        for n in [2usize, 4] {
            let un = t.level_exp(n, &coeffs).unwrap();
            let chain = t.coherent(&pt, n).unwrap();
            let diff: f64 = un
                .column(0)
                .iter()
                .zip(chain.iter())
                .map(|(a, b)| (a - b).norm_sqr())
                .sum();
            assert!(diff.sqrt() < 1e-10, "level {n}: {}", diff.sqrt());
        }
    }

    #[test]
    fn group_action_moves_coherent_vectors_covariantly() {
        let t = a1_tower(3);
        let mut rng = seeded_rng(17);
        let g = haar_special(&mut rng, 2);
        let p = OrbitPoint::random(&mut rng, 2);
        let moved = OrbitPoint::from_defining(g.dot(p.defining())).unwrap();
        for n in [1usize, 3] {
            let rho = t.level_action(n, &g).unwrap();
            let defect = frobenius_norm(&(&dagger(&rho).dot(&rho) - &identity(t.dim(n))));
            assert!(defect < 1e-12, "level {n} not unitary: {defect}");
            let lhs = rho.dot(&t.coherent(&p, n).unwrap());
            let rhs = t.coherent(&moved, n).unwrap();
            let diff: f64 =
                lhs.iter().zip(rhs.iter()).map(|(a, b)| (a - b).norm_sqr()).sum();
            assert!(diff.sqrt() < 1e-11, "level {n}: {}", diff.sqrt());
        }
    }

    #[test]
    fn classical_coordinates_are_the_bloch_vector_halved() {
        let t = a1_tower(3);
        let (theta, phi) = (2.2_f64, 0.6_f64);
        let pt = OrbitPoint::from_angles(theta, phi);
        let x = t.classical_x(&pt).unwrap();
        let want = [
            theta.cos() / 2.0,
            theta.sin() * phi.cos() / 2.0,
            theta.sin() * phi.sin() / 2.0,
        ];
        for (a, (got, want)) in x.iter().zip(want.iter()).enumerate() {
            assert!((got - want).abs() < 1e-13, "x[{a}] = {got}, want {want}");
        }
        // The same values divided out of level 3 expectations.
        let v = t.coherent(&pt, 3).unwrap();
        for (a, j) in t.level(3).j_ops().iter().enumerate() {
            let jv = j.dot(&v);
            let ev: f64 = v.iter().zip(jv.iter()).map(|(p, q)| (p.conj() * q).re).sum();
            assert!((ev / 3.0 - want[a]).abs() < 1e-12);
        }
    }

    #[test]
    fn overlaps_factorize_over_levels() {
        let alg = Algebra::from_name("A2").unwrap();
        let t = Tower::new(&alg, Weight(vec![1, 0]), 3).unwrap();
        assert_eq!(t.dim(3), 10);
        assert_eq!(t.dual_reference().hw, Weight(vec![0, 1]));
        let mut rng = seeded_rng(29);
        let p = OrbitPoint::random(&mut rng, 3);
        let q = OrbitPoint::random(&mut rng, 3);
        let base = p.overlap(&q);
        for n in 1..=3 {
            let got = t.coherent_overlap(&p, &q, n).unwrap();
            let want = base.powu(n as u32);
            assert!((got - want).norm() < 1e-12, "level {n}");
        }
    }

    #[test]
    fn squared_base_weight_tower_subsamples_the_unit_tower() {
        let alg = Algebra::from_name("A1").unwrap();
        let t = Tower::new(&alg, Weight(vec![2]), 3).unwrap();
        assert_eq!([t.dim(0), t.dim(1), t.dim(2), t.dim(3)], [1, 3, 5, 7]);
        let pt = OrbitPoint::from_angles(1.3, -0.4);
        let x = t.classical_x(&pt).unwrap();
        let r: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((r - 1.0).abs() < 1e-12, "orbit radius {r}");
        // Overlap of level-n vectors is the defining overlap to the power 2n.
        let q = OrbitPoint::from_angles(0.2, 1.0);
        let got = t.coherent_overlap(&pt, &q, 2).unwrap();
        let want = pt.overlap(&q).powu(4);
        assert!((got - want).norm() < 1e-12);
    }

    #[test]
    fn towers_without_defining_sampling_still_build() {
        let alg = Algebra::from_name("B2").unwrap();
        let t = Tower::new(&alg, Weight(vec![1, 0]), 2).unwrap();
        assert_eq!(t.sampling_dim(), None);
        assert_eq!(t.dim(2), 14);
        let pt = OrbitPoint::from_angles(0.3, 0.3);
        assert!(matches!(t.coherent(&pt, 1), Err(Error::Unsupported(_))));
        for n in 0..2 {
            let up = embedding_residual(t.reference(), t.level(n), t.level(n + 1), t.plus(n));
            let down =
                embedding_residual(t.dual_reference(), t.level(n + 1), t.level(n), t.minus(n));
            assert!(up < 1e-12 && down < 1e-12, "level {n}: {up} {down}");
        }
    }

    #[test]
    fn zero_or_empty_towers_are_rejected() {
        let alg = Algebra::from_name("A1").unwrap();
        assert!(Tower::new(&alg, Weight(vec![0]), 3).is_err());
        assert!(Tower::new(&alg, Weight(vec![1]), 0).is_err());
    }
}
