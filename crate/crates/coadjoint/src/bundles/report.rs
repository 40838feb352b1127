//! Machine-readable level reports and the classical-limit section check.

use serde::Serialize;

use crate::bundles::family::BundleFamily;
use crate::bundles::weights::classical_fiber;
use crate::error::{Error, Result};
use crate::repn::{decompose, GenRep};

/// Residuals of the two projection-transport steps touching one level.
#[derive(Clone, Debug, Serialize)]
pub struct RecursionResiduals {
    /// upward step `N → N+1`; `None` at the top of the tower
    pub i: Option<f64>,
    /// whether the upward step lands exactly on the transition level
    pub i_transition: bool,
    /// downward step `N → N−1`; `None` at `N = 0`
    pub p: Option<f64>,
}

/// One level of a family, shaped for JSON output.
#[derive(Clone, Debug, Serialize)]
pub struct BundleReport {
    pub lambda: Vec<i64>,
    #[serde(rename = "N")]
    pub n: usize,
    /// rows and columns of a stored module element
    pub dims: [usize; 2],
    #[serde(rename = "rank_Q")]
    pub rank_q: usize,
    pub recursion_residuals: RecursionResiduals,
    pub transition_level: usize,
    /// classical fiber weight in fundamental-weight coordinates
    pub fiber: Vec<i64>,
    /// worst projection-invariant defect at this level (0 for a zero module)
    pub q_defect: f64,
}

/// Assemble the report for one level, including both neighbouring recursion
/// residuals when the tower extends that far.
pub fn bundle_report(family: &BundleFamily, n: usize) -> Result<BundleReport> {
    let tower = family.tower();
    if n > tower.n_max {
        return Err(Error::LevelMismatch { expected: tower.n_max, got: n });
    }
    let fiber = classical_fiber(&tower.algebra, &tower.lambda, &family.lambda)?;
    let dims = family.dims(n).unwrap_or((tower.dim(n), 0));
    let (rank_q, q_defect) = if n < family.transition() {
        (0, 0.0)
    } else {
        let inv = family.q_invariants(n)?;
        (inv.rank, inv.worst())
    };
    let i = if n < tower.n_max {
        Some(family.recursion_step_i(n)?.residual)
    } else {
        None
    };
    let p = if n > 0 { Some(family.recursion_step_p(n)?.residual) } else { None };
    Ok(BundleReport {
        lambda: family.lambda.0.clone(),
        n,
        dims: [dims.0, dims.1],
        rank_q,
        recursion_residuals: RecursionResiduals {
            i,
            i_transition: n + 1 == family.transition(),
            p,
        },
        transition_level: family.transition(),
        fiber: fiber.0,
        q_defect,
    })
}

/// Comparison of the level-`N` module against the polynomial sections of the
/// classical bundle it quantizes (rank-one case).
#[derive(Clone, Debug, Serialize)]
pub struct SectionReport {
    pub lambda: Vec<i64>,
    #[serde(rename = "N")]
    pub n: usize,
    /// fundamental-weight labels (twice the spin) of the module's
    /// irreducible pieces, ascending, with multiplicity
    pub quantum: Vec<i64>,
    /// the same number of leading labels from the classical section series
    pub classical_prefix: Vec<i64>,
    /// first position where the two lists disagree
    pub first_mismatch: Option<usize>,
}

/// Decompose the level-`N` module as a representation and compare it with
/// the classical series `|λ|, |λ|+2, |λ|+4, …` of section labels. The module
/// is always an initial segment of the series; the report records the
/// comparison rather than assuming it.
pub fn verify_section_limit(family: &BundleFamily, n: usize) -> Result<SectionReport> {
    let tower = family.tower();
    if tower.algebra.rank() != 1 {
        return Err(Error::Unsupported(
            "section-series comparison is defined for the rank-one orbit".into(),
        ));
    }
    let lambda = family.lambda.0.clone();
    let mut quantum = Vec::new();
    if n >= family.transition() {
        let hom = GenRep::hom(tower.level(n), family.aux_level(n));
        for (w, mult) in decompose(&hom)? {
            for _ in 0..mult {
                quantum.push(w.0[0]);
            }
        }
        quantum.sort_unstable();
    }
    let base = lambda[0].abs();
    let classical_prefix: Vec<i64> =
        (0..quantum.len() as i64).map(|k| base + 2 * k).collect();
    let first_mismatch = quantum
        .iter()
        .zip(classical_prefix.iter())
        .position(|(q, c)| q != c);
    Ok(SectionReport { lambda, n, quantum, classical_prefix, first_mismatch })
}
