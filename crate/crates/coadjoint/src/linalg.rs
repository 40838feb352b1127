//! Dense complex linear algebra used throughout the crate.
//!
//! Everything operates on `ndarray` arrays of `Complex64`. The sizes that
//! appear in practice are modest (a few hundred at most), so the kernels
//! favour determinism and simplicity over asymptotics: a cyclic Jacobi
//! eigensolver for Hermitian matrices, modified Gram-Schmidt, and compensated
//! (Neumaier) summation for reproducible reductions.

use ndarray::{Array1, Array2};
pub use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Dense complex matrix.
pub type CMat = Array2<C64>;
/// Dense complex vector.
pub type CVec = Array1<C64>;

/// `n × n` identity matrix.
pub fn identity(n: usize) -> CMat {
    Array2::from_diag_elem(n, C64::new(1.0, 0.0))
}

/// Conjugate transpose.
pub fn dagger(a: &CMat) -> CMat {
    a.t().mapv(|z| z.conj())
}

/// `a b − b a`.
pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    a.dot(b) - b.dot(a)
}

/// Frobenius norm.
pub fn frobenius_norm(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Operator (spectral) norm, i.e. the largest singular value.
pub fn spectral_norm(a: &CMat) -> f64 {
    if a.is_empty() || frobenius_norm(a) == 0.0 {
        return 0.0;
    }
    let gram = dagger(a).dot(a);
    let (vals, _) = hermitian_eig(&gram);
    vals.iter().fold(0.0_f64, |m, &v| m.max(v)).max(0.0).sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns the eigenvalues in ascending order together with a unitary matrix
/// whose columns are the matching eigenvectors. The input is required to be
/// Hermitian to within roundoff; only the Hermitian part participates in the
/// rotations (the algorithm reads entries above the diagonal).
pub fn hermitian_eig(a: &CMat) -> (Vec<f64>, CMat) {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "hermitian_eig: matrix must be square");
    let mut m = a.clone();
    let mut v = identity(n);
    if n <= 1 {
        let vals = if n == 1 { vec![m[(0, 0)].re] } else { vec![] };
        return (vals, v);
    }

    let scale = frobenius_norm(&m).max(f64::MIN_POSITIVE);
    let target = 1e-15 * scale;
    // Quadratic convergence makes ~10 sweeps ample for n in the hundreds; the
    // cap only guards against a non-Hermitian input sneaking through. Rotation
    // roundoff puts a floor of order n·ε·‖A‖ under the off-diagonal norm, so
    // also stop once a sweep makes no real progress.
    let mut prev_off = f64::INFINITY;
    for _sweep in 0..60 {
        let mut off = 0.0_f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[(p, q)].norm_sqr();
            }
        }
        let off = (2.0 * off).sqrt();
        if off <= target || (off >= 0.5 * prev_off && off <= 1e-12 * scale) {
            break;
        }
        prev_off = off;
        for p in 0..n {
            for q in (p + 1)..n {
                let w = m[(p, q)];
                let b = w.norm();
                if b <= 1e-300 {
                    continue;
                }
                let phase = w / b; // e^{iφ}
                let aa = m[(p, p)].re;
                let dd = m[(q, q)].re;
                let tau = (aa - dd) / (2.0 * b);
                // Smaller-magnitude root of t² − 2τt − 1 = 0, in the
                // rationalized form that stays accurate for large |τ|.
                let t = -tau.signum() / (tau.abs() + (tau * tau + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // Unitary U: U[p,p]=c, U[p,q]=s, U[q,p]=−s·conj(phase),
                // U[q,q]=c·conj(phase); apply A ← U† A U, V ← V U.
                let (cc, ss) = (C64::new(c, 0.0), C64::new(s, 0.0));
                let ph = phase.conj();
                for r in 0..n {
                    let xp = m[(r, p)];
                    let xq = m[(r, q)];
                    m[(r, p)] = cc * xp - ss * ph * xq;
                    m[(r, q)] = ss * xp + cc * ph * xq;
                }
                for r in 0..n {
                    let xp = m[(p, r)];
                    let xq = m[(q, r)];
                    m[(p, r)] = cc * xp - ss * ph.conj() * xq;
                    m[(q, r)] = ss * xp + cc * ph.conj() * xq;
                }
                for r in 0..n {
                    let xp = v[(r, p)];
                    let xq = v[(r, q)];
                    v[(r, p)] = cc * xp - ss * ph * xq;
                    v[(r, q)] = ss * xp + cc * ph * xq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vecs = Array2::zeros((n, n));
    for (new, &old) in order.iter().enumerate() {
        for r in 0..n {
            vecs[(r, new)] = v[(r, old)];
        }
    }
    (vals, vecs)
}

/// Exponential of an anti-Hermitian matrix (so the result is unitary).
pub fn expm_antihermitian(x: &CMat) -> Result<CMat> {
    let n = x.nrows();
    let herm_defect = frobenius_norm(&(x + &dagger(x)));
    if herm_defect > 1e-10 * (1.0 + frobenius_norm(x)) {
        return Err(Error::InvalidInput(format!(
            "expm_antihermitian: input is not anti-Hermitian (defect {herm_defect:.3e})"
        )));
    }
    // iX is Hermitian; exp(X) = V e^{−iθ} V†.
    let h = x.mapv(|z| z * C64::new(0.0, 1.0));
    let (vals, vecs) = hermitian_eig(&h);
    let mut out: CMat = Array2::zeros((n, n));
    for (k, &th) in vals.iter().enumerate() {
        let e = C64::from_polar(1.0, -th);
        let col = vecs.column(k);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] += e * col[r] * col[c].conj();
            }
        }
    }
    Ok(out)
}

/// Orthonormalize the columns of a square matrix by modified Gram-Schmidt.
/// The result has positive-real diagonal in the implicit R factor, which is
/// the convention that turns Gaussian matrices into Haar-distributed unitaries.
pub fn mgs_unitarize(a: &CMat) -> Result<CMat> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(Error::DimensionMismatch("mgs_unitarize needs a square matrix".into()));
    }
    let mut q = a.clone();
    for j in 0..n {
        for k in 0..j {
            let proj: C64 = (0..n).map(|r| q[(r, k)].conj() * q[(r, j)]).sum();
            for r in 0..n {
                let sub = proj * q[(r, k)];
                q[(r, j)] -= sub;
            }
        }
        let norm: f64 = (0..n).map(|r| q[(r, j)].norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::DegenerateSpectrum("rank-deficient matrix in unitarization".into()));
        }
        for r in 0..n {
            q[(r, j)] /= norm;
        }
    }
    Ok(q)
}

/// Neumaier compensated accumulator for `f64`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated accumulator for complex values.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanC {
    re: Kahan,
    im: Kahan,
}

impl KahanC {
    pub fn add(&mut self, z: C64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> C64 {
        C64::new(self.re.value(), self.im.value())
    }
}

/// Result of a Gram-matrix-driven orthonormalization: which candidates were
/// accepted as pivots, and the expansion of each orthonormal vector in the
/// candidate basis (row `t` holds the coefficients of the `t`-th vector).
#[derive(Clone, Debug)]
pub struct GramGs {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<C64>>,
}

/// Relative amplitude cutoff used to separate genuine null candidates from
/// independent ones. Null residuals are pure cancellation noise and scale
/// like `m · ε` (observed up to ~1e-13 for desk-scale Grams with repeated
/// weights), while genuine independent candidates stay above ~1e-4, so the
/// cutoff sits between with a guard band; `DegenerateSpectrum` fires if
/// anything lands near it rather than silently guessing.
pub const RANK_CUTOFF: f64 = 1e-4;

/// Deterministic Gram-Schmidt performed purely on a Gram matrix.
///
/// Candidates are processed in index order; candidate `c` is accepted when
/// the squared norm of its residual against the span of the accepted set
/// exceeds `RANK_CUTOFF²` of its own squared norm. Because only the Gram data
/// enters, running this on the abstract Shapovalov form and on concrete
/// vectors with equal Grams yields identical pivots and coefficients.
pub fn gram_gs(gram: &CMat) -> Result<GramGs> {
    let m = gram.nrows();
    let max_diag = (0..m).map(|c| gram[(c, c)].re).fold(0.0_f64, f64::max);
    let mut pivots = Vec::new();
    let mut rows: Vec<Vec<C64>> = Vec::new();
    let cut2 = RANK_CUTOFF * RANK_CUTOFF;
    for c in 0..m {
        let norm2 = gram[(c, c)].re;
        if norm2 <= 1e-14 * max_diag.max(1e-300) {
            continue; // candidate is the zero vector
        }
        // Overlaps of the accepted orthonormal vectors with candidate c.
        let overlaps: Vec<C64> = rows
            .iter()
            .map(|row| {
                let mut acc = C64::new(0.0, 0.0);
                for (cp, coef) in row.iter().enumerate() {
                    if coef.norm_sqr() > 0.0 {
                        acc += coef.conj() * gram[(cp, c)];
                    }
                }
                acc
            })
            .collect();
        let resid2 = (norm2 - overlaps.iter().map(|o| o.norm_sqr()).sum::<f64>()).max(0.0);
        let ratio = resid2 / norm2;
        if ratio > cut2 * 1e-2 && ratio < cut2 * 1e2 {
            return Err(Error::DegenerateSpectrum(format!(
                "residual ratio {ratio:.3e} inside the guard band around {cut2:.1e}"
            )));
        }
        if ratio <= cut2 {
            continue;
        }
        let inv = 1.0 / resid2.sqrt();
        let mut row = vec![C64::new(0.0, 0.0); m];
        row[c] = C64::new(inv, 0.0);
        for (t, o) in overlaps.iter().enumerate() {
            for cp in 0..m {
                let sub = *o * rows[t][cp] * inv;
                row[cp] -= sub;
            }
        }
        pivots.push(c);
        rows.push(row);
    }
    Ok(GramGs { pivots, rows })
}

/// Cholesky factor (lower-triangular `L` with `A = L Lᵀ`) of a small real
/// symmetric positive-definite matrix.
pub fn cholesky_spd(a: &Array2<f64>) -> Result<Array2<f64>> {
    let n = a.nrows();
    let mut l: Array2<f64> = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            if i == j {
                if s <= 0.0 {
                    return Err(Error::DegenerateSpectrum(
                        "matrix not positive definite in Cholesky".into(),
                    ));
                }
                l[(i, j)] = s.sqrt();
            } else {
                l[(i, j)] = s / l[(j, j)];
            }
        }
    }
    Ok(l)
}

/// Inverse of a lower-triangular real matrix by forward substitution.
pub fn lower_inverse(l: &Array2<f64>) -> Array2<f64> {
    let n = l.nrows();
    let mut inv: Array2<f64> = Array2::zeros((n, n));
    for col in 0..n {
        inv[(col, col)] = 1.0 / l[(col, col)];
        for i in (col + 1)..n {
            let mut s = 0.0;
            for k in col..i {
                s -= l[(i, k)] * inv[(k, col)];
            }
            inv[(i, col)] = s / l[(i, i)];
        }
    }
    inv
}
