//! Symbols: the dequantization map (coherent expectation values), the
//! quantization map (weighted integrals of coherent projectors), polynomials
//! in the classical coordinate functions, and star-product defects.

use ndarray::Array2;
use std::collections::BTreeMap;

use crate::berezin::orbit::OrbitPoint;
use crate::berezin::tower::Tower;
use crate::error::{Error, Result};
use crate::linalg::{CMat, CVec, C64, KahanC};
use crate::numerics::quadrature::{RuleSpec, S2Rule};
use crate::numerics::sampling::seeded_rng;
use crate::repn::structure_constants;

/// Sparse real polynomial in the coordinate functions `x_0 … x_{nvars−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    /// `(coefficient, exponent of each variable)`, kept deduplicated.
    pub terms: Vec<(f64, Vec<u32>)>,
    pub nvars: usize,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { terms: Vec::new(), nvars }
    }

    pub fn constant(c: f64, nvars: usize) -> Self {
        Polynomial { terms: vec![(c, vec![0; nvars])], nvars }.normalized()
    }

    pub fn coordinate(a: usize, nvars: usize) -> Self {
        assert!(a < nvars, "coordinate index out of range");
        let mut e = vec![0u32; nvars];
        e[a] = 1;
        Polynomial { terms: vec![(1.0, e)], nvars }
    }

    /// Total degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms
            .iter()
            .map(|(_, e)| e.iter().map(|&p| p as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, xs: &[f64]) -> f64 {
        assert_eq!(xs.len(), self.nvars, "wrong number of coordinates");
        self.terms
            .iter()
            .map(|(c, e)| {
                c * e
                    .iter()
                    .zip(xs.iter())
                    .map(|(&p, &x)| x.powi(p as i32))
                    .product::<f64>()
            })
            .sum()
    }

    pub fn scale(&self, s: f64) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(c, e)| (c * s, e.clone())).collect(),
            nvars: self.nvars,
        }
        .normalized()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Polynomial { terms, nvars: self.nvars }.normalized()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, e1) in &self.terms {
            for (c2, e2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                terms.push((c1 * c2, e));
            }
        }
        Polynomial { terms, nvars: self.nvars }.normalized()
    }

    /// Partial derivative with respect to `x_a`.
    pub fn diff(&self, a: usize) -> Polynomial {
        let mut terms = Vec::new();
        for (c, e) in &self.terms {
            if e[a] > 0 {
                let mut ne = e.clone();
                ne[a] -= 1;
                terms.push((c * e[a] as f64, ne));
            }
        }
        Polynomial { terms, nvars: self.nvars }.normalized()
    }

    fn normalized(self) -> Polynomial {
        let mut map: BTreeMap<Vec<u32>, f64> = BTreeMap::new();
        for (c, e) in self.terms {
            *map.entry(e).or_insert(0.0) += c;
        }
        let terms = map.into_iter().filter(|(_, c)| *c != 0.0).map(|(e, c)| (c, e)).collect();
        Polynomial { terms, nvars: self.nvars }
    }

    /// Parse expressions such as `x0^2*x1 - 0.5*x2 + 1`. Supported syntax:
    /// float literals, variables `x<k>`, `*`, integer powers `^`, and the
    /// additive operators `+`/`-`.
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        let toks = lex(s)?;
        let mut terms: Vec<(f64, Vec<u32>)> = Vec::new();
        let mut at = 0usize;
        let mut sign = 1.0_f64;
        // leading sign
        loop {
            match toks.get(at) {
                Some(Tok::Minus) => {
                    sign = -sign;
                    at += 1;
                }
                Some(Tok::Plus) => at += 1,
                _ => break,
            }
        }
        loop {
            let (coeff, exps, next) = parse_term(&toks, at, nvars)?;
            terms.push((sign * coeff, exps));
            at = next;
            match toks.get(at) {
                None => break,
                Some(Tok::Plus) => {
                    sign = 1.0;
                    at += 1;
                }
                Some(Tok::Minus) => {
                    sign = -1.0;
                    at += 1;
                }
                Some(t) => {
                    return Err(Error::InvalidInput(format!(
                        "expected '+' or '-' between terms, found {t:?}"
                    )))
                }
            }
        }
        Ok(Polynomial { terms, nvars }.normalized())
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, e)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *c < 0.0 { "-" } else { "+" })?;
            } else if *c < 0.0 {
                write!(f, "-")?;
            }
            let mags = c.abs();
            let mut wrote = false;
            if (mags - 1.0).abs() > 1e-15 || e.iter().all(|&p| p == 0) {
                write!(f, "{mags}")?;
                wrote = true;
            }
            for (a, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "x{a}")?;
                if p > 1 {
                    write!(f, "^{p}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Var(usize),
    Pow,
    Mul,
    Plus,
    Minus,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let bytes: Vec<char> = s.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Mul);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Pow);
                i += 1;
            }
            'x' => {
                let start = i + 1;
                let mut j = start;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == start {
                    return Err(Error::InvalidInput(
                        "variable must be written x<index>".into(),
                    ));
                }
                let idx: usize = bytes[start..j]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::InvalidInput("bad variable index".into()))?;
                toks.push(Tok::Var(idx));
                i = j;
            }
            d if d.is_ascii_digit() || d == '.' => {
                let start = i;
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_digit() || bytes[j] == '.') {
                    j += 1;
                }
                if j < bytes.len() && (bytes[j] == 'e' || bytes[j] == 'E') {
                    j += 1;
                    if j < bytes.len() && (bytes[j] == '+' || bytes[j] == '-') {
                        j += 1;
                    }
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                }
                let lit: String = bytes[start..j].iter().collect();
                let v: f64 = lit
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad number '{lit}'")))?;
                toks.push(Tok::Num(v));
                i = j;
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "unexpected character '{other}' in polynomial"
                )))
            }
        }
    }
    Ok(toks)
}

/// Parse one product of factors; returns `(coefficient, exponents, next)`.
fn parse_term(toks: &[Tok], mut at: usize, nvars: usize) -> Result<(f64, Vec<u32>, usize)> {
    let mut coeff = 1.0_f64;
    let mut exps = vec![0u32; nvars];
    let mut first = true;
    loop {
        match toks.get(at) {
            Some(Tok::Num(v)) => {
                coeff *= v;
                at += 1;
            }
            Some(Tok::Var(idx)) => {
                if *idx >= nvars {
                    return Err(Error::InvalidInput(format!(
                        "variable x{idx} out of range (have {nvars} coordinates)"
                    )));
                }
                let mut p = 1u32;
                if let Some(Tok::Pow) = toks.get(at + 1) {
                    match toks.get(at + 2) {
                        Some(Tok::Num(v)) if *v >= 0.0 && v.fract() == 0.0 => {
                            p = *v as u32;
                            at += 2;
                        }
                        _ => {
                            return Err(Error::InvalidInput(
                                "power must be a nonnegative integer".into(),
                            ))
                        }
                    }
                }
                exps[*idx] += p;
                at += 1;
            }
            _ if first => {
                return Err(Error::InvalidInput("empty term in polynomial".into()));
            }
            _ => break,
        }
        first = false;
        if let Some(Tok::Mul) = toks.get(at) {
            at += 1;
        } else {
            break;
        }
    }
    Ok((coeff, exps, at))
}

/// A weighted set of orbit points against which quantization integrates.
pub struct OrbitSet {
    pub points: Vec<OrbitPoint>,
    pub weights: Vec<f64>,
    /// Largest harmonic degree integrated exactly; `None` for Monte Carlo.
    pub exact_degree: Option<usize>,
    pub label: String,
}

impl OrbitSet {
    /// Exact product rule on a two-sphere orbit.
    pub fn sphere(rule: &S2Rule) -> OrbitSet {
        OrbitSet {
            points: rule
                .nodes
                .iter()
                .map(|&(theta, phi)| OrbitPoint::from_angles(theta, phi))
                .collect(),
            weights: rule.weights.clone(),
            exact_degree: Some(rule.exact_degree),
            label: rule.label.clone(),
        }
    }

    /// Invariantly distributed Monte Carlo samples.
    pub fn monte_carlo(tower: &Tower, samples: usize, seed: u64) -> Result<OrbitSet> {
        let dim = tower.sampling_dim().ok_or_else(|| {
            Error::Unsupported("Monte Carlo sampling needs a tower with coherent support".into())
        })?;
        if samples == 0 {
            return Err(Error::InvalidInput("need at least one sample".into()));
        }
        let mut rng = seeded_rng(seed);
        let points = (0..samples).map(|_| OrbitPoint::random(&mut rng, dim)).collect();
        Ok(OrbitSet {
            points,
            weights: vec![1.0 / samples as f64; samples],
            exact_degree: None,
            label: format!("haar-mc {samples} samples, seed {seed}"),
        })
    }

    /// Materialize a declarative rule against a tower.
    pub fn from_spec(tower: &Tower, spec: &RuleSpec) -> Result<OrbitSet> {
        match spec {
            RuleSpec::GaussS2 { degree } => {
                if tower.sampling_dim() != Some(2) {
                    return Err(Error::Unsupported(
                        "the sphere product rule applies to two-dimensional defining spaces"
                            .into(),
                    ));
                }
                Ok(OrbitSet::sphere(&S2Rule::gauss(*degree)))
            }
            RuleSpec::HaarMc { samples, seed } => OrbitSet::monte_carlo(tower, *samples, *seed),
        }
    }
}

/// Dequantization: the coherent expectation `v† a v`.
pub fn covariant_symbol(a: &CMat, v: &CVec) -> C64 {
    let av = a.dot(v);
    v.iter().zip(av.iter()).map(|(p, q)| p.conj() * q).sum()
}

/// Dequantize at a point of the orbit: `I_n(a)(p)`.
pub fn symbol_at(tower: &Tower, n: usize, a: &CMat, pt: &OrbitPoint) -> Result<C64> {
    Ok(covariant_symbol(a, &tower.coherent(pt, n)?))
}

/// Quantization: `P_n(f) = dim · Σ_s w_s f(x(p_s)) |v_s⟩⟨v_s|`. For exact
/// rules the rule degree must cover both the coherent projector (degree
/// `k·n`) and the polynomial.
pub fn quantize(tower: &Tower, n: usize, set: &OrbitSet, f: &Polynomial) -> Result<CMat> {
    let d = tower.dim(n);
    if f.nvars != tower.algebra.dim() {
        return Err(Error::DimensionMismatch(format!(
            "polynomial in {} variables, algebra has {} coordinates",
            f.nvars,
            tower.algebra.dim()
        )));
    }
    if let (Some(rule_degree), Some(k)) = (set.exact_degree, tower.defining_multiple()) {
        let need = k * n + f.degree();
        if rule_degree < need {
            return Err(Error::QuadratureInsufficient(format!(
                "rule '{}' is exact through degree {rule_degree}, integrand needs {need}",
                set.label
            )));
        }
    }
    let mut acc = vec![KahanC::default(); d * d];
    for (pt, w) in set.points.iter().zip(set.weights.iter()) {
        let xs = tower.classical_x(pt)?;
        let fv = f.eval(&xs) * w * d as f64;
        if fv == 0.0 {
            continue;
        }
        let v = tower.coherent(pt, n)?;
        for r in 0..d {
            let vr = v[r] * fv;
            for c in 0..d {
                acc[r * d + c].add(vr * v[c].conj());
            }
        }
    }
    Ok(Array2::from_shape_fn((d, d), |(r, c)| acc[r * d + c].value()))
}

/// Poisson bracket of two polynomials in the coordinate functions, computed
/// from the structure constants: `{f, g} = Σ ∂_a f ∂_b g C_{abk} x_k`.
pub fn poisson_bracket(f: &Polynomial, g: &Polynomial, c: &[ndarray::Array2<f64>]) -> Polynomial {
    let n = f.nvars;
    assert_eq!(g.nvars, n);
    assert_eq!(c.len(), n, "structure constants for {n} generators");
    let mut out = Polynomial::zero(n);
    for a in 0..n {
        let da = f.diff(a);
        if da.terms.is_empty() {
            continue;
        }
        for b in 0..n {
            let db = g.diff(b);
            if db.terms.is_empty() {
                continue;
            }
            let prod = da.mul(&db);
            for k in 0..n {
                let coef = c[a][(b, k)];
                if coef.abs() > 1e-12 {
                    out = out.add(&prod.mul(&Polynomial::coordinate(k, n)).scale(coef));
                }
            }
        }
    }
    out
}

/// Pointwise defects of the induced star product at one level: the largest
/// deviation of `I_n(P_n(f) P_n(g))` from the pointwise product, and of the
/// scaled commutator symbol from the Poisson bracket, over a test set.
#[derive(Clone, Debug)]
pub struct StarDefect {
    pub n: usize,
    pub product_sup: f64,
    pub poisson_sup: f64,
}

pub fn star_defects(
    tower: &Tower,
    n: usize,
    set: &OrbitSet,
    f: &Polynomial,
    g: &Polynomial,
    test_points: &[OrbitPoint],
) -> Result<StarDefect> {
    let qf = quantize(tower, n, set, f)?;
    let qg = quantize(tower, n, set, g)?;
    let fg = qf.dot(&qg);
    let gf = qg.dot(&qf);
    let (c, _) = structure_constants(tower.reference());
    let bracket = poisson_bracket(f, g, &c);
    let mut product_sup = 0.0_f64;
    let mut poisson_sup = 0.0_f64;
    for pt in test_points {
        let v = tower.coherent(pt, n)?;
        let xs = tower.classical_x(pt)?;
        let star_fg = covariant_symbol(&fg, &v);
        let star_gf = covariant_symbol(&gf, &v);
        let classical = f.eval(&xs) * g.eval(&xs);
        product_sup = product_sup.max((star_fg - classical).norm());
        let commutator_symbol = (star_fg - star_gf) * C64::new(0.0, -(n as f64));
        poisson_sup = poisson_sup.max((commutator_symbol - bracket.eval(&xs)).norm());
    }
    Ok(StarDefect { n, product_sup, poisson_sup })
}
