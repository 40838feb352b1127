//! Quadrature on the two-sphere: Gauss–Legendre nodes in the polar direction
//! crossed with a uniform azimuthal grid. A rule of degree `D` integrates
//! every spherical harmonic through degree `D` exactly, which is what makes
//! the dequantize-then-quantize identities hold to machine precision on
//! polynomial integrands.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Kahan, KahanC, C64};

/// Gauss–Legendre nodes and weights on `[-1, 1]`. Nodes are ascending and the
/// weights sum to 2. Exact for polynomials of degree `2n − 1`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "need at least one node");
    let mut nodes = vec![0.0_f64; n];
    let mut weights = vec![0.0_f64; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess for the i-th root from the top.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and P_{n-1} by the three-term recurrence.
            let mut p0 = 1.0_f64;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let (pn, pnm1) = if n == 1 { (x, 1.0) } else { (p1, p0) };
            dp = n as f64 * (pnm1 - x * pn) / (1.0 - x * x);
            let step = pn / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// A finite quadrature rule on the unit sphere with weights normalized so the
/// rule integrates against the rotation-invariant probability measure.
#[derive(Clone, Debug)]
pub struct S2Rule {
    /// `(theta, phi)` polar coordinates of each node.
    pub nodes: Vec<(f64, f64)>,
    /// Nonnegative weights summing to 1.
    pub weights: Vec<f64>,
    /// Largest harmonic degree integrated exactly; 0 for sampling rules.
    pub exact_degree: usize,
    /// Human-readable description recorded in output provenance.
    pub label: String,
}

impl S2Rule {
    /// Product Gauss rule exact for all spherical harmonics through `degree`.
    pub fn gauss(degree: usize) -> S2Rule {
        let n_polar = (degree + 1).div_ceil(2).max(1);
        let n_az = (degree + 1).max(1);
        let (cs, ws) = gauss_legendre(n_polar);
        let mut nodes = Vec::with_capacity(n_polar * n_az);
        let mut weights = Vec::with_capacity(n_polar * n_az);
        for (c, w) in cs.iter().zip(ws.iter()) {
            let theta = c.acos();
            for a in 0..n_az {
                let phi = 2.0 * std::f64::consts::PI * a as f64 / n_az as f64;
                nodes.push((theta, phi));
                // GL weights sum to 2 over cos θ; divide by 2 to normalize the
                // polar average and by n_az for the azimuthal average.
                weights.push(w / (2.0 * n_az as f64));
            }
        }
        S2Rule {
            nodes,
            weights,
            exact_degree: degree,
            label: format!("gauss-s2 degree {degree} ({n_polar}x{n_az} nodes)"),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Fails unless the rule is exact through `degree`.
    pub fn require_exactness(&self, degree: usize) -> Result<()> {
        if self.exact_degree >= degree {
            Ok(())
        } else {
            Err(Error::QuadratureInsufficient(format!(
                "rule '{}' is exact through degree {}, integrand needs {degree}",
                self.label, self.exact_degree
            )))
        }
    }

    /// Compensated weighted sum of a complex-valued function over the nodes.
    pub fn integrate<F: FnMut(f64, f64) -> C64>(&self, mut f: F) -> C64 {
        let mut acc = KahanC::default();
        for ((theta, phi), w) in self.nodes.iter().zip(self.weights.iter()) {
            acc.add(f(*theta, *phi) * *w);
        }
        acc.value()
    }

    /// Compensated weighted sum of a real-valued function over the nodes.
    pub fn integrate_real<F: FnMut(f64, f64) -> f64>(&self, mut f: F) -> f64 {
        let mut acc = Kahan::default();
        for ((theta, phi), w) in self.nodes.iter().zip(self.weights.iter()) {
            acc.add(f(*theta, *phi) * w);
        }
        acc.value()
    }
}

/// Declarative description of an integration rule, as accepted on the command
/// line and recorded in output files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RuleSpec {
    /// Product Gauss rule on the sphere, exact through `degree`.
    #[serde(rename = "gauss-s2")]
    GaussS2 { degree: usize },
    /// Monte Carlo over group-invariant samples.
    #[serde(rename = "haar-mc")]
    HaarMc { samples: usize, seed: u64 },
}

impl RuleSpec {
    pub fn parse(s: &str) -> Result<RuleSpec> {
        serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("quadrature spec: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_small_rules_match_closed_forms() {
        let (x, w) = gauss_legendre(1);
        assert!(x[0].abs() < 1e-15 && (w[0] - 2.0).abs() < 1e-15);
        let (x, w) = gauss_legendre(2);
        let r = 1.0 / 3.0_f64.sqrt();
        assert!((x[0] + r).abs() < 1e-15 && (x[1] - r).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-15 && (w[1] - 1.0).abs() < 1e-15);
        let (x, w) = gauss_legendre(3);
        let r = (3.0_f64 / 5.0).sqrt();
        assert!((x[0] + r).abs() < 1e-14 && x[1].abs() < 1e-15 && (x[2] - r).abs() < 1e-14);
        assert!((w[1] - 8.0 / 9.0).abs() < 1e-14);
        assert!((w[0] - 5.0 / 9.0).abs() < 1e-14 && (w[2] - 5.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn gauss_legendre_integrates_monomials_exactly() {
        for n in [1usize, 2, 3, 5, 8, 13, 40] {
            let (x, w) = gauss_legendre(n);
            for k in 0..2 * n {
                let got: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(k as i32)).sum();
                let want = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
                assert!((got - want).abs() < 1e-13, "n={n} k={k}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn sphere_rule_is_normalized_and_exact_on_harmonics() {
        let rule = S2Rule::gauss(11);
        let total: f64 = rule.weights.iter().sum();
        assert!((total - 1.0).abs() < 1e-14);
        // Averages of Cartesian monomials over the unit sphere.
        let nz2 = rule.integrate_real(|t, _| t.cos().powi(2));
        assert!((nz2 - 1.0 / 3.0).abs() < 1e-14);
        let nz4 = rule.integrate_real(|t, _| t.cos().powi(4));
        assert!((nz4 - 1.0 / 5.0).abs() < 1e-14);
        let nx2 = rule.integrate_real(|t, p| (t.sin() * p.cos()).powi(2));
        assert!((nx2 - 1.0 / 3.0).abs() < 1e-14);
        let nx2ny2z2 = rule.integrate_real(|t, p| {
            (t.sin() * p.cos()).powi(2) * (t.sin() * p.sin()).powi(2) * t.cos().powi(2)
        });
        assert!((nx2ny2z2 - 1.0 / 105.0).abs() < 1e-14);
        // Odd and phase-carrying harmonics vanish.
        for k in 1..=11usize {
            let m = rule.integrate(|t, p| {
                C64::from_polar(t.sin().powi(k as i32), k as f64 * p)
            });
            assert!(m.norm() < 1e-13, "degree {k} phase moment {m}");
        }
    }

    #[test]
    fn exactness_gate_reports_insufficient_rules() {
        let rule = S2Rule::gauss(8);
        assert!(rule.require_exactness(8).is_ok());
        assert!(matches!(
            rule.require_exactness(9),
            Err(Error::QuadratureInsufficient(_))
        ));
    }

    #[test]
    fn rule_spec_round_trips_through_json() {
        let spec = RuleSpec::parse(r#"{"kind": "gauss-s2", "degree": 17}"#).unwrap();
        assert_eq!(spec, RuleSpec::GaussS2 { degree: 17 });
        let spec = RuleSpec::parse(r#"{"kind": "haar-mc", "samples": 500, "seed": 9}"#).unwrap();
        assert_eq!(spec, RuleSpec::HaarMc { samples: 500, seed: 9 });
        assert!(RuleSpec::parse("{\"kind\": \"unknown\"}").is_err());
    }
}
