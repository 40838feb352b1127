//! Root-system data derived from a Cartan matrix: positive-root enumeration,
//! invariant bilinear form, Weyl dimension formula, quadratic Casimir values.
//!
//! Two normalizations of the invariant form appear:
//! * the "long-2" form, where long roots have squared length 2 — used for all
//!   integer weight bookkeeping (it is the convention the Cartan matrix is
//!   written in);
//! * the "long-1" form (half of it), which is the one that makes the
//!   orthonormal generator basis reproduce the familiar angular-momentum
//!   normalization (`[J₁,J₂] = iJ₃`, Casimir `j(j+1)` for A1). Quadratic
//!   Casimir eigenvalues are reported in that normalization.

use num_rational::Ratio;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lie::diagram::DynkinDiagram;
use crate::lie::weight::Weight;

type Q = Ratio<i128>;

fn q_from(n: i64) -> Q {
    Ratio::from_integer(n as i128)
}

/// Positive roots and metric data for a simple algebra.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots, long roots normalized to 2.
    simple_len2: Vec<Q>,
    /// Positive roots in simple-root coordinates, sorted by (height, coords).
    pub positive: Vec<Vec<i64>>,
    /// Squared length of each positive root.
    root_len2: Vec<Q>,
    /// For each positive root of height ≥ 2: `(i, k)` such that the root is
    /// `α_i + positive[k]`, with `i` the smallest such simple index.
    chain: Vec<Option<(usize, usize)>>,
    /// Gram matrix of the fundamental weights in the long-2 form.
    fw_gram: Vec<Vec<Q>>,
}

impl RootSystem {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let n = diagram.rank;
        let a = diagram.cartan().clone();

        // Simple-root squared lengths from the Cartan matrix symmetry
        // A_ij (α_j,α_j) = A_ji (α_i,α_i), normalized so the longest is 2.
        let mut len2: Vec<Option<Q>> = vec![None; n];
        len2[0] = Some(q_from(1));
        let mut again = true;
        while again {
            again = false;
            for i in 0..n {
                for j in 0..n {
                    if i != j && a[i][j] != 0 {
                        if let (Some(qi), None) = (len2[i], len2[j]) {
                            len2[j] = Some(qi * q_from(a[j][i]) / q_from(a[i][j]));
                            again = true;
                        }
                    }
                }
            }
        }
        let mut simple_len2: Vec<Q> = len2.into_iter().map(|q| q.unwrap()).collect();
        let max = simple_len2.iter().copied().fold(q_from(0), |m, v| if v > m { v } else { m });
        for q in &mut simple_len2 {
            *q = *q * q_from(2) / max;
        }

        // Enumerate positive roots by height with the string property:
        // β + αᵢ is a root iff p − ⟨β, αᵢ∨⟩ > 0 where p counts how far the
        // string β, β−αᵢ, β−2αᵢ, … stays inside the root set.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..n {
            let mut c = vec![0_i64; n];
            c[i] = 1;
            index.insert(c.clone(), roots.len());
            roots.push(c);
        }
        let mut frontier: Vec<usize> = (0..roots.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &bi in &frontier {
                for i in 0..n {
                    let beta = roots[bi].clone();
                    // ⟨β, αᵢ∨⟩ = Σ_j m_j A_{ji}
                    let pairing: i64 = (0..n).map(|j| beta[j] * a[j][i]).sum();
                    let mut p = 0_i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if probe[i] >= 0 && index.contains_key(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !index.contains_key(&up) {
                            index.insert(up.clone(), roots.len());
                            next.push(roots.len());
                            roots.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));

        // Squared lengths: (β,β) = Σ m_i m_j A_ij q_j / 2… via B_ij = A_ij q_j / 2.
        let b = |i: usize, j: usize, simple_len2: &Vec<Q>| -> Q {
            q_from(a[i][j]) * simple_len2[j] / q_from(2)
        };
        let root_len2: Vec<Q> = roots
            .iter()
            .map(|m| {
                let mut acc = q_from(0);
                for i in 0..n {
                    for j in 0..n {
                        if m[i] != 0 && m[j] != 0 {
                            acc += q_from(m[i]) * q_from(m[j]) * b(i, j, &simple_len2);
                        }
                    }
                }
                acc
            })
            .collect();

        let root_index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let chain: Vec<Option<(usize, usize)>> = roots
            .iter()
            .map(|r| {
                if r.iter().sum::<i64>() == 1 {
                    return None;
                }
                for i in 0..n {
                    if r[i] > 0 {
                        let mut down = r.clone();
                        down[i] -= 1;
                        if let Some(&k) = root_index.get(&down) {
                            return Some((i, k));
                        }
                    }
                }
                unreachable!("every non-simple positive root descends through a simple root")
            })
            .collect();

        // Fundamental-weight Gram in the long-2 form: with B the simple-root
        // Gram, G = D B⁻¹ D where D = diag(qᵢ/2).
        let bmat: Vec<Vec<Q>> =
            (0..n).map(|i| (0..n).map(|j| b(i, j, &simple_len2)).collect()).collect();
        let binv = invert_rational(&bmat);
        let mut fw_gram = vec![vec![q_from(0); n]; n];
        for i in 0..n {
            for j in 0..n {
                fw_gram[i][j] = simple_len2[i] / q_from(2) * binv[i][j] * (simple_len2[j] / q_from(2));
            }
        }

        RootSystem { rank: n, cartan: a, simple_len2, positive: roots, root_len2, chain, fw_gram }
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positive.len()
    }

    /// Squared length (long-2 form) of the `k`-th positive root.
    pub fn root_len2(&self, k: usize) -> f64 {
        ratio_to_f64(self.root_len2[k])
    }

    /// Squared length (long-2 form) of the `i`-th simple root.
    pub fn simple_len2(&self, i: usize) -> f64 {
        ratio_to_f64(self.simple_len2[i])
    }

    /// Decomposition `positive[k] = α_i + positive[parent]` for composite roots.
    pub fn chain(&self, k: usize) -> Option<(usize, usize)> {
        self.chain[k]
    }

    /// Fundamental-weight coordinates of the `k`-th positive root.
    pub fn root_weight(&self, k: usize) -> Weight {
        let m = &self.positive[k];
        Weight(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|i| m[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    /// `⟨μ, β∨⟩` for a weight (fundamental coordinates) and positive root index.
    pub fn coroot_pairing(&self, mu: &Weight, k: usize) -> f64 {
        let m = &self.positive[k];
        let mut num = q_from(0);
        for (i, &mi) in m.iter().enumerate() {
            num += q_from(mu.0[i]) * q_from(mi) * self.simple_len2[i];
        }
        ratio_to_f64(num / self.root_len2[k])
    }

    /// Weyl dimension of the irreducible representation with highest weight `hw`.
    pub fn weyl_dim(&self, hw: &Weight) -> Result<usize> {
        if hw.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: hw.rank() });
        }
        if !hw.is_dominant() {
            return Err(Error::NotDominant(hw.0.clone()));
        }
        let mut dim = Ratio::from_integer(1_i128);
        for m in &self.positive {
            let mut num = q_from(0);
            let mut den = q_from(0);
            for (i, &mi) in m.iter().enumerate() {
                num += q_from(hw.0[i] + 1) * q_from(mi) * self.simple_len2[i];
                den += q_from(mi) * self.simple_len2[i];
            }
            dim *= num / den;
        }
        if !dim.is_integer() {
            return Err(Error::InvalidInput(format!("non-integral Weyl dimension for {hw}")));
        }
        let v = dim.to_integer();
        if v <= 0 || v > 100_000_000 {
            return Err(Error::SizeCap(format!("representation dimension {v} out of range")));
        }
        Ok(v as usize)
    }

    /// Pairing of two weights in the long-2 form, as an exact rational.
    pub fn weight_pairing(&self, mu: &Weight, nu: &Weight) -> Q {
        let mut acc = q_from(0);
        for i in 0..self.rank {
            for j in 0..self.rank {
                if mu.0[i] != 0 && nu.0[j] != 0 {
                    acc += q_from(mu.0[i]) * q_from(nu.0[j]) * self.fw_gram[i][j];
                }
            }
        }
        acc
    }

    /// Quadratic Casimir eigenvalue on the irrep with highest weight `hw`, in
    /// the normalization where A1 level N gives `(N/2)(N/2 + 1)`:
    /// `c(λ) = ½ ⟨λ, λ + 2ρ⟩_{long-2}`.
    pub fn casimir_eigenvalue(&self, hw: &Weight) -> f64 {
        let rho = Weight(vec![1; self.rank]);
        let shifted = hw.add(&rho.scale(2));
        ratio_to_f64(self.weight_pairing(hw, &shifted) / q_from(2))
    }

    /// Image of `mu` under the simple reflection `s_i`, exactly:
    /// `s_i(μ) = μ − ⟨μ, αᵢ∨⟩ αᵢ` with `αᵢ` written in fundamental-weight
    /// coordinates (the `i`-th Cartan row).
    pub fn simple_reflection(&self, i: usize, mu: &Weight) -> Weight {
        let c = mu.0[i];
        Weight((0..self.rank).map(|j| mu.0[j] - c * self.cartan[i][j]).collect())
    }

    /// Representative of `mu` in the Weyl orbit of the subgroup generated by
    /// the reflections at the `active` nodes, with all active coordinates
    /// nonnegative. With every node active this is the usual dominant
    /// representative; restricting the active set implements dominance for a
    /// Levi subalgebra. Inactive coordinates of the result may be negative.
    pub fn dominant_representative(&self, mu: &Weight, active: &[bool]) -> Weight {
        assert_eq!(active.len(), self.rank, "active mask must cover every node");
        let mut w = mu.clone();
        // Each reflection at a negative coordinate strictly increases
        // ⟨w, ρ∨⟩ within a finite orbit, so this terminates.
        let mut guard = 0usize;
        loop {
            let Some(i) = (0..self.rank).find(|&i| active[i] && w.0[i] < 0) else {
                return w;
            };
            w = self.simple_reflection(i, &w);
            guard += 1;
            assert!(guard < 1_000_000, "Weyl descent failed to terminate");
        }
    }
}

fn ratio_to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Exact inverse of a small rational matrix by Gauss-Jordan elimination.
fn invert_rational(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let zero = Ratio::from_integer(0_i128);
    let one = Ratio::from_integer(1_i128);
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { one } else { zero }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != zero).expect("Cartan Gram is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != zero {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::diagram::Series;

    fn rs(series: Series, rank: usize) -> RootSystem {
        RootSystem::new(&DynkinDiagram::new(series, rank).unwrap())
    }

    #[test]
    fn positive_root_counts_and_dims() {
        // (series, rank, #positive roots, dim) — dims are the classical values
        // n(n+2), n(2n+1), n(2n−1), 14, 52, 78, 133, 248.
        let cases = [
            (Series::A, 1, 1, 3),
            (Series::A, 2, 3, 8),
            (Series::A, 3, 6, 15),
            (Series::A, 4, 10, 24),
            (Series::B, 2, 4, 10),
            (Series::B, 3, 9, 21),
            (Series::B, 5, 25, 55),
            (Series::C, 3, 9, 21),
            (Series::C, 4, 16, 36),
            (Series::D, 4, 12, 28),
            (Series::D, 5, 20, 45),
            (Series::G, 2, 6, 14),
            (Series::F, 4, 24, 52),
            (Series::E, 6, 36, 78),
            (Series::E, 7, 63, 133),
            (Series::E, 8, 120, 248),
        ];
        for (s, n, pos, dim) in cases {
            let r = rs(s, n);
            assert_eq!(r.num_positive(), pos, "{s}{n} positive roots");
            assert_eq!(r.dim(), dim, "{s}{n} dimension");
        }
    }

    #[test]
    fn weyl_dims_match_classical_values() {
        let a1 = rs(Series::A, 1);
        for n in 0..=50 {
            assert_eq!(a1.weyl_dim(&Weight(vec![n])).unwrap(), (n + 1) as usize);
        }
        let a2 = rs(Series::A, 2);
        assert_eq!(a2.weyl_dim(&Weight(vec![1, 0])).unwrap(), 3);
        assert_eq!(a2.weyl_dim(&Weight(vec![0, 1])).unwrap(), 3);
        assert_eq!(a2.weyl_dim(&Weight(vec![1, 1])).unwrap(), 8);
        for n in 0..=8_i64 {
            assert_eq!(
                a2.weyl_dim(&Weight(vec![n, 0])).unwrap(),
                ((n + 1) * (n + 2) / 2) as usize
            );
        }
        let b2 = rs(Series::B, 2);
        assert_eq!(b2.weyl_dim(&Weight(vec![1, 0])).unwrap(), 5);
        assert_eq!(b2.weyl_dim(&Weight(vec![0, 1])).unwrap(), 4);
        let c2 = rs(Series::C, 2);
        assert_eq!(c2.weyl_dim(&Weight(vec![1, 0])).unwrap(), 4);
        assert_eq!(c2.weyl_dim(&Weight(vec![0, 1])).unwrap(), 5);
        let g2 = rs(Series::G, 2);
        assert_eq!(g2.weyl_dim(&Weight(vec![1, 0])).unwrap(), 7);
        assert_eq!(g2.weyl_dim(&Weight(vec![0, 1])).unwrap(), 14);
        assert!(a2.weyl_dim(&Weight(vec![-1, 0])).is_err());
        assert!(a2.weyl_dim(&Weight(vec![1])).is_err());
    }

    #[test]
    fn casimir_closed_form() {
        let a1 = rs(Series::A, 1);
        for n in 1..=20 {
            let j = n as f64 / 2.0;
            let c = a1.casimir_eigenvalue(&Weight(vec![n]));
            assert!((c - j * (j + 1.0)).abs() < 1e-12, "A1 level {n}");
        }
        let a2 = rs(Series::A, 2);
        assert!((a2.casimir_eigenvalue(&Weight(vec![1, 0])) - 4.0 / 3.0).abs() < 1e-12);
        assert!((a2.casimir_eigenvalue(&Weight(vec![1, 1])) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn root_lengths_and_chains() {
        let b2 = rs(Series::B, 2);
        // B2 positive roots: α1, α2, α1+α2, α1+2α2 with lengths 2,1,1,2.
        let lens: Vec<f64> = (0..4).map(|k| b2.root_len2(k)).collect();
        assert_eq!(b2.positive.len(), 4);
        let mut sorted = lens.clone();
        sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert_eq!(sorted, vec![1.0, 1.0, 2.0, 2.0]);
        // Every composite root decomposes through an earlier one.
        for k in 0..b2.num_positive() {
            if b2.positive[k].iter().sum::<i64>() > 1 {
                let (i, parent) = b2.chain(k).unwrap();
                let mut reconstructed = b2.positive[parent].clone();
                reconstructed[i] += 1;
                assert_eq!(reconstructed, b2.positive[k]);
                assert!(parent < k);
            }
        }
    }

    #[test]
    fn reflections_are_involutive_isometries() {
        for (s, n) in [(Series::A, 2), (Series::B, 3), (Series::G, 2)] {
            let r = rs(s, n);
            for seed in 0..12_i64 {
                let mu = Weight((0..n).map(|i| (seed * 5 + i as i64 * 3) % 7 - 3).collect());
                for i in 0..n {
                    let refl = r.simple_reflection(i, &mu);
                    // involution
                    assert_eq!(r.simple_reflection(i, &refl), mu);
                    // preserves the invariant form
                    assert_eq!(r.weight_pairing(&mu, &mu), r.weight_pairing(&refl, &refl));
                    // fixes the wall: the i-th coordinate flips sign
                    assert_eq!(refl.0[i], -mu.0[i]);
                }
            }
        }
    }

    #[test]
    fn dominant_representative_full_and_levi() {
        let a1 = rs(Series::A, 1);
        assert_eq!(
            a1.dominant_representative(&Weight(vec![-7]), &[true]),
            Weight(vec![7])
        );
        let a2 = rs(Series::A, 2);
        let all = [true, true];
        for seed in 0..20_i64 {
            let mu = Weight(vec![(seed * 3) % 9 - 4, (seed * 5) % 7 - 3]);
            let dom = a2.dominant_representative(&mu, &all);
            assert!(dom.is_dominant(), "{mu} -> {dom}");
            // same Weyl orbit means same length
            assert_eq!(a2.weight_pairing(&mu, &mu), a2.weight_pairing(&dom, &dom));
            // idempotent on the result
            assert_eq!(a2.dominant_representative(&dom, &all), dom);
        }
        // Levi descent at node 1 only: s_1(1,−1) = (0,1), hand-computed from
        // the Cartan row (−1, 2).
        let levi = [false, true];
        assert_eq!(
            a2.dominant_representative(&Weight(vec![1, -1]), &levi),
            Weight(vec![0, 1])
        );
        // Already Levi-dominant weights pass through even when the inactive
        // coordinate is negative.
        assert_eq!(
            a2.dominant_representative(&Weight(vec![-2, 0]), &levi),
            Weight(vec![-2, 0])
        );
    }

    #[test]
    fn coroot_pairing_is_cartan_on_simples() {
        for (s, n) in [(Series::A, 3), (Series::B, 3), (Series::G, 2), (Series::F, 4)] {
            let r = rs(s, n);
            let d = DynkinDiagram::new(s, n).unwrap();
            for i in 0..n {
                // positive roots are sorted by height, so 0..n are the simples
                let k = r.positive.iter().position(|m| {
                    m.iter().sum::<i64>() == 1 && m[i] == 1
                }).unwrap();
                for j in 0..n {
                    let mut mu = Weight::zero(n);
                    mu.0[j] = 1;
                    let got = r.coroot_pairing(&mu, k);
                    assert!((got - if i == j { 1.0 } else { 0.0 }).abs() < 1e-12);
                    // and the root's fundamental coordinates are a Cartan row
                    assert_eq!(r.root_weight(k).0[j], d.cartan()[i][j]);
                }
            }
        }
    }
}
