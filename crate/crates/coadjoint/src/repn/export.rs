//! JSON serialization of representation data. Lowering operators are stored
//! as base64-encoded column-major arrays of little-endian `f64` pairs
//! `(re, im)`; weights and dimensions stay human-readable so exported files
//! can be inspected and diffed.

use base64::engine::general_purpose::STANDARD as B64;
use base64::Engine;
use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{Algebra, Weight};
use crate::linalg::{CMat, C64};
use crate::repn::tensor::GenRep;

/// Bump when the on-disk layout changes incompatibly.
pub const SCHEMA_VERSION: u32 = 1;

/// Serializable form of a representation. The raising operators are the
/// conjugate transposes of the lowering ones and the Cartan action is fixed
/// by the weights, so only the lowering matrices are stored.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepExport {
    pub schema_version: u32,
    pub algebra: String,
    pub dim: usize,
    /// Weight of each basis vector, in fundamental-weight coordinates.
    pub weights: Vec<Vec<i64>>,
    /// One base64 blob per simple root, column-major complex doubles.
    pub lowering: Vec<String>,
}

/// Encode a complex matrix as base64 of column-major `(re, im)` doubles.
pub fn encode_matrix(m: &CMat) -> String {
    let (rows, cols) = m.dim();
    let mut bytes = Vec::with_capacity(rows * cols * 16);
    for c in 0..cols {
        for r in 0..rows {
            bytes.extend_from_slice(&m[(r, c)].re.to_le_bytes());
            bytes.extend_from_slice(&m[(r, c)].im.to_le_bytes());
        }
    }
    B64.encode(bytes)
}

/// Decode a square complex matrix from the layout written by
/// [`encode_matrix`].
pub fn decode_matrix(s: &str, dim: usize) -> Result<CMat> {
    let bytes = B64
        .decode(s)
        .map_err(|e| Error::InvalidInput(format!("matrix blob is not valid base64: {e}")))?;
    if bytes.len() != dim * dim * 16 {
        return Err(Error::InvalidInput(format!(
            "matrix blob holds {} bytes, expected {} for dimension {dim}",
            bytes.len(),
            dim * dim * 16
        )));
    }
    let mut m: CMat = Array2::zeros((dim, dim));
    let mut at = 0usize;
    for c in 0..dim {
        for r in 0..dim {
            let re = f64::from_le_bytes(bytes[at..at + 8].try_into().unwrap());
            let im = f64::from_le_bytes(bytes[at + 8..at + 16].try_into().unwrap());
            m[(r, c)] = C64::new(re, im);
            at += 16;
        }
    }
    Ok(m)
}

impl RepExport {
    pub fn from_rep(rep: &GenRep) -> Self {
        RepExport {
            schema_version: SCHEMA_VERSION,
            algebra: rep.algebra.name(),
            dim: rep.dim,
            weights: rep.weights.iter().map(|w| w.0.clone()).collect(),
            lowering: rep.f.iter().map(encode_matrix).collect(),
        }
    }

    pub fn into_rep(self) -> Result<GenRep> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidInput(format!(
                "schema version {} not supported (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let algebra = Algebra::from_name(&self.algebra)?;
        let rank = algebra.rank();
        if self.lowering.len() != rank {
            return Err(Error::InvalidInput(format!(
                "{} lowering matrices for rank-{rank} algebra",
                self.lowering.len()
            )));
        }
        if self.weights.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "{} weights for dimension {}",
                self.weights.len(),
                self.dim
            )));
        }
        let weights = self
            .weights
            .into_iter()
            .map(|w| {
                if w.len() == rank {
                    Ok(Weight(w))
                } else {
                    Err(Error::RankMismatch { expected: rank, got: w.len() })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let f = self
            .lowering
            .iter()
            .map(|blob| decode_matrix(blob, self.dim))
            .collect::<Result<Vec<_>>>()?;
        Ok(GenRep { algebra, dim: self.dim, weights, f })
    }
}

/// Serialize a representation to a JSON string.
pub fn export_rep(rep: &GenRep) -> String {
    serde_json::to_string_pretty(&RepExport::from_rep(rep)).expect("serialization cannot fail")
}

/// Parse a representation from a JSON string produced by [`export_rep`].
pub fn import_rep(s: &str) -> Result<GenRep> {
    let parsed: RepExport = serde_json::from_str(s)
        .map_err(|e| Error::InvalidInput(format!("representation JSON: {e}")))?;
    parsed.into_rep()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frobenius_norm;
    use crate::repn::irrep::Irrep;

    #[test]
    fn matrix_roundtrip_is_exact() {
        let mut m: CMat = Array2::zeros((3, 3));
        for r in 0..3 {
            for c in 0..3 {
                m[(r, c)] = C64::new(
                    (r as f64 + 0.25) * (c as f64 - 1.5),
                    1.0 / (1.0 + r as f64 + 3.0 * c as f64),
                );
            }
        }
        let back = decode_matrix(&encode_matrix(&m), 3).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn rep_roundtrip_preserves_everything() {
        let alg = Algebra::from_name("B2").unwrap();
        let rep = GenRep::from_irrep(&Irrep::new(&alg, Weight(vec![1, 1])).unwrap());
        let json = export_rep(&rep);
        let back = import_rep(&json).unwrap();
        assert_eq!(back.dim, rep.dim);
        assert_eq!(back.weights, rep.weights);
        assert_eq!(back.algebra.name(), "B2");
        for i in 0..2 {
            assert_eq!(frobenius_norm(&(&back.f[i] - &rep.f[i])), 0.0);
        }
    }

    #[test]
    fn import_rejects_corrupt_input() {
        let alg = Algebra::from_name("A1").unwrap();
        let rep = GenRep::from_irrep(&Irrep::new(&alg, Weight(vec![2])).unwrap());
        let json = export_rep(&rep);
        assert!(import_rep(&json.replace("\"dim\": 3", "\"dim\": 4")).is_err());
        assert!(import_rep("{\"schema_version\": 99}").is_err());
        assert!(import_rep("not json").is_err());
    }
}
