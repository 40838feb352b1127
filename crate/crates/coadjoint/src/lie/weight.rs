use serde::{Deserialize, Serialize};
use std::fmt;

/// Integral weight in fundamental-weight coordinates: `w.0[i] = ⟨w, αᵢ∨⟩`.
///
/// All weight bookkeeping is exact integer arithmetic in this basis; any
/// half-integer "spin" presentation is display-only.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_and_arithmetic() {
        let a = Weight(vec![1, 0, 2]);
        let b = Weight(vec![0, 1, -3]);
        assert!(a.is_dominant());
        assert!(!b.is_dominant());
        assert_eq!(a.add(&b), Weight(vec![1, 1, -1]));
        assert_eq!(a.scale(3), Weight(vec![3, 0, 6]));
        assert_eq!(a.sub(&a), Weight::zero(3));
    }
}
