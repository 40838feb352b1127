//! The [`Algebra`] handle: a diagram together with its root system, shared
//! (`Arc`) by representations, towers and bundles built over it.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::diagram::{parse_diagram, DynkinDiagram, Series};
use crate::lie::roots::RootSystem;
use crate::lie::weight::Weight;

/// A compact simple algebra: canonical diagram plus derived root data.
#[derive(Debug)]
pub struct Algebra {
    pub diagram: DynkinDiagram,
    pub roots: RootSystem,
}

impl Algebra {
    pub fn new(diagram: DynkinDiagram) -> Arc<Self> {
        let roots = RootSystem::new(&diagram);
        Arc::new(Algebra { diagram, roots })
    }

    /// Build from a series name such as `"A2"`.
    pub fn from_name(name: &str) -> Result<Arc<Self>> {
        let parsed = parse_diagram(name)?;
        if !parsed.marks.is_empty() {
            return Err(Error::InvalidInput("algebra name must not carry marks".into()));
        }
        Ok(Self::new(parsed.diagram))
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank
    }

    pub fn dim(&self) -> usize {
        self.roots.dim()
    }

    pub fn name(&self) -> String {
        self.diagram.name()
    }

    /// Validate that a weight has this algebra's rank and is dominant.
    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: w.rank() });
        }
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.0.clone()));
        }
        Ok(())
    }

    /// Highest weight of the dual of the irrep with highest weight `w`.
    pub fn dual_weight(&self, w: &Weight) -> Weight {
        let perm = self.diagram.dual_permutation();
        Weight(perm.iter().map(|&s| w.0[s]).collect())
    }

    /// Highest weight of the defining representation, when the series has a
    /// distinguished one suitable for sampling the group (A series: the
    /// `(n+1)`-dimensional vector representation of SU(n+1)).
    pub fn defining_weight(&self) -> Option<Weight> {
        match self.diagram.series {
            Series::A => {
                let mut w = Weight::zero(self.rank());
                w.0[0] = 1;
                Some(w)
            }
            _ => None,
        }
    }
}
