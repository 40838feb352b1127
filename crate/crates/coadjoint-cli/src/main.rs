//! Batch front end over the orbit-quantization library. Each subcommand
//! rebuilds one family of objects, checks the residuals it is responsible
//! for, and writes a JSON or CSV artifact carrying a provenance block that
//! records every resolved input, so a run can be reproduced byte-for-byte.
//!
//! Exit codes: 0 when every asserted residual passes, 1 when assertions fail
//! (each failure is listed on stderr), 2 on usage or construction errors.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ndarray::Array2;
use serde::Serialize;
use serde_json::{json, Value};

use coadjoint::berezin::{
    sphere, star_defects, three_point, three_point_factorized, OrbitPoint, OrbitSet, Polynomial,
};
use coadjoint::bundles::{bundle_report, verify_section_limit, SectionReport};
use coadjoint::lie::{classify, parse_diagram, MarkedDiagram};
use coadjoint::linalg::{frobenius_norm, identity};
use coadjoint::numerics::{ginibre, seeded_rng, RuleSpec};
use coadjoint::repn::{check_relations, export_rep, GenRep};
use coadjoint::{Algebra, BundleFamily, Tower, Weight, C64};

/// Version tag of the artifact layout (provenance block plus `results`).
const ARTIFACT_SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "coadjoint",
    version,
    about = "Matrix quantization of coadjoint orbits and equivariant bundles",
    propagate_version = true
)]
struct Cli {
    /// Override the subcommand's assertion tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Seed for every random choice (test points, triples, module elements).
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    /// Write the artifact to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Artifact format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Quadrature rule as JSON, e.g. '{"kind":"gauss-s2","degree":48}' or
    /// '{"kind":"haar-mc","samples":4000,"seed":7}'. When absent, commands
    /// that integrate pick an exact rule for the degrees they need.
    #[arg(long, global = true)]
    quad: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the orbit type of a marked Dynkin diagram.
    Classify {
        /// Series name like "B5", or a JSON diagram
        /// '{"nodes":[...],"edges":[{"from":..,"to":..,"mult":..,"arrow":..}],"marks":[...]}'.
        diagram: String,
        /// Marked nodes, 1-based in the canonical node order, e.g. "1,3".
        /// Merged with any marks inside a JSON diagram.
        #[arg(long, value_name = "LIST")]
        mark: Option<String>,
    },
    /// Build one level of the orbit quantization and check its algebra.
    Quantize {
        /// Ambient simple algebra, e.g. "A1".
        #[arg(long)]
        group: String,
        /// Orbit weight Λ in fundamental-weight coordinates, e.g. "1" or "1,0".
        #[arg(long)]
        orbit: String,
        /// Level N: the matrix algebra is End(V(NΛ)).
        #[arg(long)]
        level: usize,
        /// Also dump the level representation (weights + lowering operators)
        /// as JSON to this path.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Sweep the star-product and Poisson defects over levels.
    Converge {
        #[arg(long)]
        group: String,
        #[arg(long)]
        orbit: String,
        /// First factor, a polynomial in the coordinates x0..x{d-1},
        /// e.g. "x0" or "x0^2*x1 - 0.5*x2 + 1".
        #[arg(long)]
        f1: String,
        /// Second factor, same syntax.
        #[arg(long)]
        f2: String,
        /// Levels to visit: a comma list "5,10,20" or an inclusive
        /// range "5..40".
        #[arg(long)]
        levels: String,
        /// Number of random test points for the sup norms.
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// Build a bundle family: dimensions, projection invariants, recursion
    /// residuals, transition level, classical fiber, section decomposition.
    Bundle {
        #[arg(long)]
        group: String,
        #[arg(long)]
        orbit: String,
        /// Bundle weight λ in fundamental-weight coordinates, e.g. "-2".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Levels to report, comma list or inclusive range.
        #[arg(long)]
        levels: String,
    },
    /// Evaluate coherent three-point kernels on random triples.
    Kernel {
        #[arg(long)]
        group: String,
        #[arg(long)]
        orbit: String,
        /// Levels to visit; the same triples are reused at every level.
        #[arg(long)]
        levels: String,
        /// Number of random point triples.
        #[arg(long, default_value_t = 20)]
        triples: usize,
        /// Explicit triple as sphere angles "θ1,φ1;θ2,φ2;θ3,φ3"; repeatable,
        /// replaces the random triples.
        #[arg(long, value_name = "ANGLES")]
        triple: Vec<String>,
    },
    /// Push a random module element down the ladder and report the
    /// dimension-reduction ratios.
    CoarseGrain {
        #[arg(long)]
        group: String,
        #[arg(long)]
        orbit: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Starting level.
        #[arg(long)]
        level: usize,
        /// Number of downward steps.
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Quantize { .. } => "quantize",
            Command::Converge { .. } => "converge",
            Command::Bundle { .. } => "bundle",
            Command::Kernel { .. } => "kernel",
            Command::CoarseGrain { .. } => "coarse-grain",
        }
    }

    /// Default assertion tolerance, overridable with --tol.
    fn default_tol(&self) -> f64 {
        match self {
            Command::Classify { .. } | Command::CoarseGrain { .. } => 0.0,
            Command::Quantize { .. } => 1e-10,
            Command::Converge { .. } => 1e-10,
            Command::Bundle { .. } => 1e-9,
            Command::Kernel { .. } => 1e-8,
        }
    }
}

#[derive(Serialize)]
struct Provenance {
    tool: &'static str,
    version: &'static str,
    schema_version: u32,
    command: &'static str,
    /// Every resolved input of the run, including defaulted ones.
    config: Value,
    seed: u64,
    tol: f64,
    format: &'static str,
    /// The quadrature rule in force, or null when the command picks
    /// per-level exact rules automatically.
    quad: Option<RuleSpec>,
}

/// CSV form of one command's results: a header, data rows, and trailing
/// comment lines for scalar summaries.
struct CsvTable {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    footer: Vec<String>,
}

struct Artifact {
    results: Value,
    table: CsvTable,
    failures: Vec<String>,
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(failures) if failures.is_empty() => std::process::ExitCode::SUCCESS,
        Ok(failures) => {
            for f in &failures {
                eprintln!("assertion failed: {f}");
            }
            eprintln!("{} assertion(s) failed", failures.len());
            std::process::ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Vec<String>> {
    let tol = cli.tol.unwrap_or_else(|| cli.command.default_tol());
    let quad = cli
        .quad
        .as_deref()
        .map(RuleSpec::parse)
        .transpose()
        .context("parsing --quad")?;
    let csv = cli.format == Format::Csv;

    let artifact = match &cli.command {
        Command::Classify { diagram, mark } => cmd_classify(diagram, mark.as_deref())?,
        Command::Quantize { group, orbit, level, dump } => {
            cmd_quantize(group, orbit, *level, dump.as_deref(), tol)?
        }
        Command::Converge { group, orbit, f1, f2, levels, points } => {
            cmd_converge(group, orbit, f1, f2, levels, *points, quad.as_ref(), cli.seed, tol)?
        }
        Command::Bundle { group, orbit, lambda, levels } => {
            cmd_bundle(group, orbit, lambda, levels, tol)?
        }
        Command::Kernel { group, orbit, levels, triples, triple } => {
            cmd_kernel(group, orbit, levels, *triples, triple, cli.seed, tol)?
        }
        Command::CoarseGrain { group, orbit, lambda, level, steps } => {
            cmd_coarse_grain(group, orbit, lambda, *level, *steps, cli.seed)?
        }
    };

    let provenance = Provenance {
        tool: "coadjoint",
        version: env!("CARGO_PKG_VERSION"),
        schema_version: ARTIFACT_SCHEMA,
        command: cli.command.name(),
        config: config_of(&cli.command),
        seed: cli.seed,
        tol,
        format: if csv { "csv" } else { "json" },
        quad,
    };

    let rendered = if csv {
        render_csv(&provenance, &artifact.table)?
    } else {
        let doc = json!({ "provenance": provenance, "results": artifact.results });
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        s
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(artifact.failures)
}

/// The resolved inputs of the subcommand, for the provenance block.
fn config_of(cmd: &Command) -> Value {
    match cmd {
        Command::Classify { diagram, mark } => json!({ "diagram": diagram, "mark": mark }),
        Command::Quantize { group, orbit, level, dump } => json!({
            "group": group, "orbit": orbit, "level": level,
            "dump": dump.as_ref().map(|p| p.display().to_string()),
        }),
        Command::Converge { group, orbit, f1, f2, levels, points } => json!({
            "group": group, "orbit": orbit, "f1": f1, "f2": f2,
            "levels": levels, "points": points,
        }),
        Command::Bundle { group, orbit, lambda, levels } => json!({
            "group": group, "orbit": orbit, "lambda": lambda, "levels": levels,
        }),
        Command::Kernel { group, orbit, levels, triples, triple } => json!({
            "group": group, "orbit": orbit, "levels": levels,
            "triples": triples, "triple": triple,
        }),
        Command::CoarseGrain { group, orbit, lambda, level, steps } => json!({
            "group": group, "orbit": orbit, "lambda": lambda,
            "level": level, "steps": steps,
        }),
    }
}

fn render_csv(provenance: &Provenance, table: &CsvTable) -> Result<String> {
    let mut out = format!("# {}\n", serde_json::to_string(provenance)?);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    out.push_str(&String::from_utf8(w.into_inner()?)?);
    for line in &table.footer {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// argument parsing helpers

fn parse_weight(s: &str) -> Result<Weight> {
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("weight coordinate {t:?}")))
        .collect::<Result<Vec<i64>>>()?;
    if coords.is_empty() {
        bail!("empty weight");
    }
    Ok(Weight(coords))
}

/// "5,10,20" or an inclusive range "0..8".
fn parse_levels(s: &str) -> Result<Vec<usize>> {
    let levels: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let lo: usize = a.trim().parse().with_context(|| format!("range start {a:?}"))?;
        let hi: usize = b.trim().parse().with_context(|| format!("range end {b:?}"))?;
        if lo > hi {
            bail!("empty level range {s:?}");
        }
        (lo..=hi).collect()
    } else {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().with_context(|| format!("level {t:?}")))
            .collect::<Result<_>>()?
    };
    if levels.is_empty() {
        bail!("no levels given");
    }
    Ok(levels)
}

/// 1-based comma list → 0-based mark set.
fn parse_marks(s: &str) -> Result<BTreeSet<usize>> {
    let mut marks = BTreeSet::new();
    for t in s.split(',') {
        let k: usize = t.trim().parse().with_context(|| format!("mark {t:?}"))?;
        if k == 0 {
            bail!("marks are 1-based; got 0");
        }
        marks.insert(k - 1);
    }
    Ok(marks)
}

/// "θ1,φ1;θ2,φ2;θ3,φ3" → three sphere points.
fn parse_triple(s: &str) -> Result<[OrbitPoint; 3]> {
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() != 3 {
        bail!("a triple needs three ';'-separated points, got {s:?}");
    }
    let mut pts = Vec::with_capacity(3);
    for part in parts {
        let (theta, phi) = part
            .split_once(',')
            .ok_or_else(|| anyhow::anyhow!("point {part:?} is not \"θ,φ\""))?;
        pts.push(OrbitPoint::from_angles(
            theta.trim().parse().with_context(|| format!("angle {theta:?}"))?,
            phi.trim().parse().with_context(|| format!("angle {phi:?}"))?,
        ));
    }
    Ok([pts.remove(0), pts.remove(0), pts.remove(0)])
}

fn make_tower(group: &str, orbit: &str, n_max: usize) -> Result<Arc<Tower>> {
    let algebra = Algebra::from_name(group)?;
    let weight = parse_weight(orbit)?;
    Ok(Arc::new(Tower::new(&algebra, weight, n_max.max(1))?))
}

/// Spin label of an A1 fundamental-weight coordinate: 4 → "2", 3 → "3/2".
fn spin_label(fw: i64) -> String {
    if fw % 2 == 0 {
        (fw / 2).to_string()
    } else {
        format!("{fw}/2")
    }
}

/// Least-squares slope of ln(y) against ln(x), ignoring non-positive y.
fn loglog_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(_, y)| **y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

fn wrap_to_pi(x: f64) -> f64 {
    use std::f64::consts::PI;
    let mut y = x % (2.0 * PI);
    if y > PI {
        y -= 2.0 * PI;
    } else if y < -PI {
        y += 2.0 * PI;
    }
    y
}

// ---------------------------------------------------------------------------
// subcommands

fn cmd_classify(diagram: &str, mark: Option<&str>) -> Result<Artifact> {
    let parsed = parse_diagram(diagram)?;
    let mut marks = parsed.marks;
    if let Some(list) = mark {
        marks.extend(parse_marks(list)?);
    }
    let marked = MarkedDiagram::new(parsed.diagram, marks)?;
    let orbit_type = classify(&marked)?;
    let isotropy = orbit_type.isotropy_name();
    let table = CsvTable {
        header: vec![
            "algebra",
            "marks",
            "dim_group",
            "torus_rank",
            "isotropy",
            "dim_isotropy",
            "dim_orbit",
        ],
        rows: vec![vec![
            orbit_type.algebra.clone(),
            orbit_type.marks.iter().map(|m| (m + 1).to_string()).collect::<Vec<_>>().join(";"),
            orbit_type.dim_group.to_string(),
            orbit_type.torus_rank.to_string(),
            isotropy.clone(),
            orbit_type.dim_isotropy.to_string(),
            orbit_type.dim_orbit.to_string(),
        ]],
        footer: vec![],
    };
    Ok(Artifact {
        results: json!({ "orbit_type": orbit_type, "isotropy": isotropy }),
        table,
        failures: vec![],
    })
}

fn cmd_quantize(
    group: &str,
    orbit: &str,
    level: usize,
    dump: Option<&std::path::Path>,
    tol: f64,
) -> Result<Artifact> {
    let tower = make_tower(group, orbit, level)?;
    let rep = tower.level(level);
    let dim = rep.dim;

    let relations = check_relations(&GenRep::from_irrep(rep));
    let casimir_value = rep.casimir_value();
    let casimir_op = rep.casimir();
    let scaled_id = identity(dim).mapv(|z| z * C64::new(casimir_value, 0.0));
    let casimir_residual =
        frobenius_norm(&(&casimir_op - &scaled_id)) / casimir_value.abs().max(1.0);

    // Coordinate operators X_a = J_a / N and the norms of their commutators;
    // both shrink like 1/N, witnessing the commutative classical limit.
    let x_ops = tower.x_ops(level);
    let x_norms: Vec<f64> = x_ops.iter().map(frobenius_norm).collect();
    let mut commutator_norms = Vec::new();
    for a in 0..x_ops.len() {
        for b in a + 1..x_ops.len() {
            let comm = x_ops[a].dot(&x_ops[b]) - x_ops[b].dot(&x_ops[a]);
            commutator_norms.push(json!([a, b, frobenius_norm(&comm)]));
        }
    }

    let mut failures = Vec::new();
    if relations.worst() >= tol {
        failures.push(format!(
            "defining-relation residual {:.3e} ≥ tol {tol:.3e} for {group} level {level}",
            relations.worst()
        ));
    }
    if casimir_residual >= tol {
        failures.push(format!(
            "Casimir residual {casimir_residual:.3e} ≥ tol {tol:.3e} for {group} level {level}"
        ));
    }

    let mut results = json!({
        "algebra": tower.algebra.name(),
        "orbit": tower.lambda.0,
        "level": level,
        "dim": dim,
        "casimir": { "value": casimir_value, "operator_residual": casimir_residual },
        "relations": {
            "commutation": relations.commutation,
            "serre": relations.serre,
            "nilpotency": relations.nilpotency
                .iter()
                .map(|(deg, ratio)| json!({ "degree": deg, "ratio": ratio }))
                .collect::<Vec<_>>(),
        },
        "x_ops": {
            "count": x_ops.len(),
            "norms": x_norms,
            "commutator_norms": commutator_norms,
        },
    });
    if let Some(path) = dump {
        std::fs::write(path, export_rep(&GenRep::from_irrep(rep)))
            .with_context(|| format!("writing {}", path.display()))?;
        results["dump"] = json!(path.display().to_string());
    }

    let nil_worst =
        relations.nilpotency.iter().map(|(_, r)| *r).fold(0.0_f64, f64::max);
    let table = CsvTable {
        header: vec![
            "algebra",
            "orbit",
            "N",
            "dim",
            "casimir_value",
            "casimir_residual",
            "commutation",
            "serre",
            "nilpotency",
        ],
        rows: vec![vec![
            tower.algebra.name(),
            orbit.to_string(),
            level.to_string(),
            dim.to_string(),
            casimir_value.to_string(),
            casimir_residual.to_string(),
            relations.commutation.to_string(),
            relations.serre.to_string(),
            nil_worst.to_string(),
        ]],
        footer: vec![],
    };
    Ok(Artifact { results, table, failures })
}

#[allow(clippy::too_many_arguments)]
fn cmd_converge(
    group: &str,
    orbit: &str,
    f1: &str,
    f2: &str,
    levels: &str,
    points: usize,
    quad: Option<&RuleSpec>,
    seed: u64,
    tol: f64,
) -> Result<Artifact> {
    let levels = parse_levels(levels)?;
    let n_max = *levels.iter().max().unwrap();
    let tower = make_tower(group, orbit, n_max)?;
    let nvars = tower.algebra.dim();
    let pf = Polynomial::parse(f1, nvars)?;
    let pg = Polynomial::parse(f2, nvars)?;

    let dim = tower.sampling_dim().ok_or_else(|| {
        coadjoint::Error::Unsupported("this orbit weight has no coherent sampling".into())
    })?;
    let mut rng = seeded_rng(seed);
    let test_points: Vec<OrbitPoint> =
        (0..points.max(1)).map(|_| OrbitPoint::random(&mut rng, dim)).collect();

    // One exact rule per level unless the caller pinned one.
    let set_for = |n: usize| -> Result<OrbitSet> {
        match quad {
            Some(spec) => Ok(OrbitSet::from_spec(&tower, spec)?),
            None if dim == 2 => {
                let k = tower.defining_multiple().unwrap_or(1);
                let degree = k * n + pf.degree() + pg.degree() + 2;
                Ok(OrbitSet::from_spec(&tower, &RuleSpec::GaussS2 { degree })?)
            }
            None => Ok(OrbitSet::monte_carlo(&tower, 4000, seed ^ 0x5eed)?),
        }
    };

    let mut rows = Vec::new();
    let mut product = Vec::new();
    let mut poisson = Vec::new();
    for &n in &levels {
        let set = set_for(n)?;
        let defect = star_defects(&tower, n, &set, &pf, &pg, &test_points)?;
        product.push(defect.product_sup);
        poisson.push(defect.poisson_sup);
        rows.push(vec![
            n.to_string(),
            defect.product_sup.to_string(),
            defect.poisson_sup.to_string(),
        ]);
    }
    let xs: Vec<f64> = levels.iter().map(|&n| n as f64).collect();
    let slope_product = loglog_slope(&xs, &product);
    let slope_poisson = loglog_slope(&xs, &poisson);

    // A degenerate sweep (constant factors, repeated level) has nothing to
    // decrease; it is held to the tolerance floor instead.
    let mut failures = Vec::new();
    let degenerate = product[0] < 1e-12 || levels.len() < 2;
    if degenerate {
        for (&n, &d) in levels.iter().zip(&product) {
            if d >= tol {
                failures.push(format!("product defect {d:.3e} ≥ tol {tol:.3e} at level {n}"));
            }
        }
    } else {
        for (w, ns) in product.windows(2).zip(levels.windows(2)) {
            if w[1] >= w[0] {
                failures.push(format!(
                    "product defect did not decrease from level {} ({:.3e}) to {} ({:.3e})",
                    ns[0], w[0], ns[1], w[1]
                ));
            }
        }
        if poisson[0] >= 1e-12 && poisson[poisson.len() - 1] >= poisson[0] {
            failures.push(format!(
                "Poisson defect did not improve across the sweep: {:.3e} → {:.3e}",
                poisson[0],
                poisson[poisson.len() - 1]
            ));
        }
    }

    let results = json!({
        "algebra": tower.algebra.name(),
        "orbit": tower.lambda.0,
        "f1": pf.to_string(),
        "f2": pg.to_string(),
        "points": test_points.len(),
        "rows": levels.iter().zip(rows.iter()).map(|(&n, r)| json!({
            "N": n,
            "product_sup": r[1].parse::<f64>().unwrap(),
            "poisson_sup": r[2].parse::<f64>().unwrap(),
        })).collect::<Vec<_>>(),
        "slopes": { "product": slope_product, "poisson": slope_poisson },
    });
    let footer = vec![format!(
        "slope_product={} slope_poisson={}",
        slope_product.map_or("nan".into(), |s| s.to_string()),
        slope_poisson.map_or("nan".into(), |s| s.to_string()),
    )];
    let table = CsvTable { header: vec!["N", "product_sup", "poisson_sup"], rows, footer };
    Ok(Artifact { results, table, failures })
}

fn cmd_bundle(
    group: &str,
    orbit: &str,
    lambda: &str,
    levels: &str,
    tol: f64,
) -> Result<Artifact> {
    let levels = parse_levels(levels)?;
    let n_max = *levels.iter().max().unwrap();
    let tower = make_tower(group, orbit, n_max)?;
    let family = BundleFamily::new(&tower, parse_weight(lambda)?)?;
    let rank_one = tower.algebra.rank() == 1;

    let mut failures = Vec::new();
    let mut reports = Vec::new();
    let mut sections: Vec<SectionReport> = Vec::new();
    let mut rows = Vec::new();
    for &n in &levels {
        let report = bundle_report(&family, n)?;
        if report.q_defect >= tol {
            failures.push(format!(
                "projection invariants {:.3e} ≥ tol {tol:.3e} at level {n}",
                report.q_defect
            ));
        }
        let section = rank_one.then(|| verify_section_limit(&family, n)).transpose()?;
        if let Some(s) = &section {
            if let Some(k) = s.first_mismatch {
                failures.push(format!(
                    "section labels diverge from the classical series at position {k}, level {n}"
                ));
            }
        }
        let fmt_res = |r: Option<f64>| r.map_or("".to_string(), |v| v.to_string());
        rows.push(vec![
            n.to_string(),
            report.dims[0].to_string(),
            report.dims[1].to_string(),
            report.rank_q.to_string(),
            fmt_res(report.recursion_residuals.i),
            report.recursion_residuals.i_transition.to_string(),
            fmt_res(report.recursion_residuals.p),
            report.q_defect.to_string(),
            section
                .as_ref()
                .map_or(String::new(), |s| {
                    s.quantum.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(";")
                }),
        ]);
        reports.push(report);
        if let Some(s) = section {
            sections.push(s);
        }
    }

    let fiber = reports[0].fiber.clone();
    let results = json!({
        "algebra": tower.algebra.name(),
        "orbit": tower.lambda.0,
        "lambda": family.lambda.0,
        "transition_level": family.transition(),
        "fiber": fiber,
        "fiber_spin": rank_one.then(|| spin_label(fiber[0])),
        "levels": reports,
        "sections": sections.iter().map(|s| json!({
            "lambda": s.lambda,
            "N": s.n,
            "quantum": s.quantum,
            "quantum_spins": s.quantum.iter().map(|&l| spin_label(l)).collect::<Vec<_>>(),
            "classical_prefix": s.classical_prefix,
            "first_mismatch": s.first_mismatch,
        })).collect::<Vec<_>>(),
    });
    let table = CsvTable {
        header: vec![
            "N",
            "rows",
            "cols",
            "rank_Q",
            "res_i",
            "i_transition",
            "res_p",
            "q_defect",
            "sections",
        ],
        rows,
        footer: vec![format!(
            "transition_level={} fiber={}",
            family.transition(),
            fiber.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";"),
        )],
    };
    Ok(Artifact { results, table, failures })
}

fn cmd_kernel(
    group: &str,
    orbit: &str,
    levels: &str,
    triples: usize,
    explicit: &[String],
    seed: u64,
    tol: f64,
) -> Result<Artifact> {
    let levels = parse_levels(levels)?;
    let n_max = *levels.iter().max().unwrap();
    let tower = make_tower(group, orbit, n_max)?;
    let dim = tower.sampling_dim().ok_or_else(|| {
        coadjoint::Error::Unsupported("this orbit weight has no coherent sampling".into())
    })?;
    let pts: Vec<[OrbitPoint; 3]> = if explicit.is_empty() {
        if triples == 0 {
            bail!("need at least one triple");
        }
        let mut rng = seeded_rng(seed);
        (0..triples)
            .map(|_| {
                [
                    OrbitPoint::random(&mut rng, dim),
                    OrbitPoint::random(&mut rng, dim),
                    OrbitPoint::random(&mut rng, dim),
                ]
            })
            .collect()
    } else {
        if dim != 2 {
            bail!("--triple takes sphere angles and needs a two-dimensional defining space");
        }
        explicit.iter().map(|s| parse_triple(s)).collect::<Result<_>>()?
    };
    let triples = pts.len();

    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    // Normalized modulus |K|/dim² per triple across the level sweep; the
    // overlaps have modulus < 1, so decay witnesses diagonal concentration.
    let mut normalized: Vec<Vec<f64>> = vec![Vec::new(); triples];
    for &n in &levels {
        let d = tower.dim(n) as f64;
        for (t, [p, q, r]) in pts.iter().enumerate() {
            let k = three_point(&tower, n, p, q, r)?;
            let factorized = three_point_factorized(&tower, n, p, q, r)?;
            let modulus_residual = (k - factorized).norm() / factorized.norm().max(1e-300);
            let phase_residual = (dim == 2).then(|| {
                let area = sphere::triangle_area(p, q, r);
                wrap_to_pi(k.arg() - 2.0 * n as f64 * area).abs()
            });
            if modulus_residual >= tol {
                failures.push(format!(
                    "kernel factorization residual {modulus_residual:.3e} ≥ tol {tol:.3e} \
                     at level {n}, triple {t}"
                ));
            }
            normalized[t].push(k.norm() / (d * d));
            rows.push(vec![
                n.to_string(),
                t.to_string(),
                k.re.to_string(),
                k.im.to_string(),
                k.norm().to_string(),
                modulus_residual.to_string(),
                phase_residual.map_or(String::new(), |v| v.to_string()),
            ]);
            json_rows.push(json!({
                "N": n,
                "triple": t,
                "re": k.re,
                "im": k.im,
                "modulus": k.norm(),
                "modulus_residual": modulus_residual,
                "phase_residual": phase_residual,
            }));
        }
    }
    if levels.len() >= 2 {
        for (t, series) in normalized.iter().enumerate() {
            // A degenerate triple (coincident points) stays at 1 and has
            // nothing to decay.
            if series[0] >= 1.0 - 1e-12 && series.iter().all(|&v| (v - 1.0).abs() < 1e-9) {
                continue;
            }
            for (w, ns) in series.windows(2).zip(levels.windows(2)) {
                if w[1] >= w[0] {
                    failures.push(format!(
                        "normalized kernel modulus did not decay for triple {t}: \
                         {:.3e} at level {} vs {:.3e} at level {}",
                        w[0], ns[0], w[1], ns[1]
                    ));
                }
            }
        }
    }

    let results = json!({
        "algebra": tower.algebra.name(),
        "orbit": tower.lambda.0,
        "levels": levels,
        "triples": triples,
        "rows": json_rows,
        "peaking": {
            "normalized_modulus": normalized,
            "decaying": levels.len() >= 2,
        },
    });
    let table = CsvTable {
        header: vec!["N", "triple", "re", "im", "modulus", "modulus_residual", "phase_residual"],
        rows,
        footer: vec![],
    };
    Ok(Artifact { results, table, failures })
}

fn cmd_coarse_grain(
    group: &str,
    orbit: &str,
    lambda: &str,
    level: usize,
    steps: usize,
    seed: u64,
) -> Result<Artifact> {
    let tower = make_tower(group, orbit, level)?;
    let family = BundleFamily::new(&tower, parse_weight(lambda)?)?;
    let (rows_dim, cols_dim) = family
        .dims(level)
        .ok_or(coadjoint::Error::ZeroModule)
        .context("starting level is below the transition")?;

    let mut rng = seeded_rng(seed);
    let g = ginibre(&mut rng, rows_dim.max(cols_dim));
    let mut field: Array2<C64> = Array2::zeros((rows_dim, cols_dim));
    for r in 0..rows_dim {
        for c in 0..cols_dim {
            field[(r, c)] = g[(r, c)];
        }
    }
    let norm_in = frobenius_norm(&field);

    let mut rows = Vec::new();
    let mut json_steps = Vec::new();
    for s in 0..steps {
        let n = level - s;
        let (transported, ratios) = family.coarse_grain(n, &field, 1)?;
        field = transported;
        let (r2, c2) = family.dims(n - 1).unwrap();
        rows.push(vec![
            (s + 1).to_string(),
            n.to_string(),
            (n - 1).to_string(),
            format!("{}x{}", r2, c2),
            ratios[0].to_string(),
            frobenius_norm(&field).to_string(),
        ]);
        json_steps.push(json!({
            "step": s + 1,
            "from_level": n,
            "to_level": n - 1,
            "dims": [r2, c2],
            "dim_ratio": ratios[0],
            "field_norm": frobenius_norm(&field),
        }));
    }

    let results = json!({
        "algebra": tower.algebra.name(),
        "orbit": tower.lambda.0,
        "lambda": family.lambda.0,
        "from_level": level,
        "steps": steps,
        "dims_in": [rows_dim, cols_dim],
        "norm_in": norm_in,
        "trajectory": json_steps,
    });
    let table = CsvTable {
        header: vec!["step", "from_N", "to_N", "dims", "dim_ratio", "field_norm"],
        rows,
        footer: vec![format!("norm_in={norm_in}")],
    };
    Ok(Artifact { results, table, failures: vec![] })
}
