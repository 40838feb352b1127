//! Points of the orbit, represented by the coherent vector they induce in the
//! defining representation. Higher-level coherent vectors are derived from
//! this one through the ladder isometries and cached per point.

use ndarray::Array1;
use rand::Rng;
use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::linalg::{CVec, C64};
use crate::numerics::sampling::haar_special;

/// A point of the orbit, held as a unit coherent vector in the defining
/// representation together with a cache of the coherent vectors it induces at
/// higher levels. The cache is an implementation detail: two points with the
/// same defining vector behave identically.
#[derive(Clone, Debug)]
pub struct OrbitPoint {
    defining: CVec,
    pub(crate) chain: RefCell<Vec<CVec>>,
    /// `(algebra name, base weight)` the cache was filled for; a point used
    /// with a different tower silently rebuilds its chain.
    pub(crate) chain_tag: RefCell<Option<(String, Vec<i64>)>>,
}

impl OrbitPoint {
    /// Wrap a nonzero vector in the defining representation, normalizing it.
    pub fn from_defining(v: CVec) -> Result<Self> {
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::InvalidInput("orbit point from a zero vector".into()));
        }
        Ok(OrbitPoint {
            defining: v.mapv(|z| z / norm),
            chain: RefCell::new(Vec::new()),
            chain_tag: RefCell::new(None),
        })
    }

    /// Spherical-coordinate point for a two-dimensional defining space:
    /// `(cos θ/2, e^{iφ} sin θ/2)`, so `θ = 0` is the highest weight vector.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let v = Array1::from(vec![
            C64::new((theta / 2.0).cos(), 0.0),
            C64::from_polar((theta / 2.0).sin(), phi),
        ]);
        OrbitPoint {
            defining: v,
            chain: RefCell::new(Vec::new()),
            chain_tag: RefCell::new(None),
        }
    }

    /// Invariantly distributed random point: the image of the highest weight
    /// direction under a Haar-random special unitary.
    pub fn random<R: Rng>(rng: &mut R, dim: usize) -> Self {
        let g = haar_special(rng, dim);
        OrbitPoint {
            defining: g.column(0).to_owned(),
            chain: RefCell::new(Vec::new()),
            chain_tag: RefCell::new(None),
        }
    }

    pub fn defining(&self) -> &CVec {
        &self.defining
    }

    /// Overlap of the defining coherent vectors of two points.
    pub fn overlap(&self, other: &OrbitPoint) -> C64 {
        self.defining
            .iter()
            .zip(other.defining.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}
