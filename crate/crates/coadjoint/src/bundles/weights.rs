//! Exact integer bookkeeping for the quantized-bundle families: which levels
//! carry a nonzero module, what its dimensions are, and which representation
//! of the stabilizer subgroup the family quantizes.
//!
//! A family is labeled by an integral weight `λ` (dominance not required). At
//! level `N` the module is `(NΛ) ⊗ (NΛ* + λ)`, with the convention that a
//! non-dominant second factor means the zero module. All admissibility and
//! transition questions are settled by integer arithmetic on fundamental
//! coordinates, never by numerical rank decisions.

use crate::error::{Error, Result};
use crate::lie::{Algebra, Weight};

/// Smallest level `N ≥ 0` at which `NΛ* + λ` is dominant, i.e. the first
/// nonzero module of the family. Coordinates where `Λ*` vanishes must already
/// be nonnegative in `λ`; otherwise no level works and the family is empty.
pub fn transition_level(algebra: &Algebra, orbit: &Weight, lambda: &Weight) -> Result<usize> {
    if orbit.rank() != algebra.rank() || lambda.rank() != algebra.rank() {
        return Err(Error::RankMismatch { expected: algebra.rank(), got: lambda.rank() });
    }
    algebra.check_dominant(orbit)?;
    if orbit.is_zero() {
        return Err(Error::InvalidInput("orbit weight must be nonzero".into()));
    }
    let orbit_dual = algebra.dual_weight(orbit);
    let mut level = 0_i64;
    for i in 0..algebra.rank() {
        let (q, l) = (orbit_dual.0[i], lambda.0[i]);
        if q == 0 {
            if l < 0 {
                return Err(Error::Inadmissible(format!(
                    "no level makes {lambda} dominant against the orbit weight {orbit}: \
                     coordinate {i} stays {l}"
                )));
            }
        } else if l < 0 {
            // smallest N with N·q + l ≥ 0, all quantities positive
            level = level.max((-l + q - 1) / q);
        }
    }
    Ok(level as usize)
}

/// Dimensions `(dim(NΛ), dim(NΛ* + λ))` of the level-`N` module, or `None`
/// when the second factor is non-dominant and the module is zero.
pub fn module_dims(
    algebra: &Algebra,
    orbit: &Weight,
    lambda: &Weight,
    n: usize,
) -> Result<Option<(usize, usize)>> {
    let t = transition_level(algebra, orbit, lambda)?;
    if n < t {
        return Ok(None);
    }
    let first = algebra.roots.weyl_dim(&orbit.scale(n as i64))?;
    let second_hw = algebra.dual_weight(orbit).scale(n as i64).add(lambda);
    let second = algebra.roots.weyl_dim(&second_hw)?;
    Ok(Some((first, second)))
}

/// Highest weight of the classical fiber: the stabilizer representation
/// `[λ*]*` whose equivariant bundle the family `λ` quantizes.
///
/// The stabilizer of the orbit's base point is generated by the torus and the
/// root subgroups at nodes where the orbit weight vanishes, so its dominance
/// notion uses only those nodes. `[μ]` denotes the stabilizer irrep whose
/// highest weight is the node-restricted dominant representative of `μ`, and
/// duality is `[μ]* = [−w₀ᴴ μ]` — a second restricted descent of the negated
/// weight. When the stabilizer is the bare torus (all nodes active in the
/// orbit weight) this reduces to `λ ↦ −λ*`.
pub fn classical_fiber(algebra: &Algebra, orbit: &Weight, lambda: &Weight) -> Result<Weight> {
    // Admissibility gate: an empty family quantizes nothing.
    transition_level(algebra, orbit, lambda)?;
    let unmarked: Vec<bool> = orbit.0.iter().map(|&c| c == 0).collect();
    let lam_star = algebra.dual_weight(lambda);
    let hw = algebra.roots.dominant_representative(&lam_star, &unmarked);
    let negated = Weight(hw.0.iter().map(|&c| -c).collect());
    Ok(algebra.roots.dominant_representative(&negated, &unmarked))
}
