//! The release gate: one test per published verification criterion, each
//! printing a single `[Axx][PASS]`/`[Axx][FAIL]` line (run with
//! `--nocapture` to see them). Tolerances are asserted exactly as stated;
//! where a stated bound is unreachable in double precision the test is kept
//! literal and fails, with the analysis in the failure message.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use ndarray::Array2;
use rand::Rng;

use coadjoint::berezin::{
    inject, local_expansion_defect, project, project_trace, sphere, star_defects, symbol_at,
    three_point, OrbitPoint, OrbitSet, Polynomial,
};
use coadjoint::berezin::ladder::hs_pairing;
use coadjoint::bundles::{classical_fiber, verify_section_limit};
use coadjoint::lie::{classify, DynkinDiagram, MarkedDiagram, Series};
use coadjoint::linalg::{dagger, frobenius_norm, hermitian_eig, identity};
use coadjoint::numerics::{ginibre, seeded_rng, RuleSpec};
use coadjoint::repn::{check_relations, embedding_residual, GenRep};
use coadjoint::{Algebra, BundleFamily, CMat, Tower, Weight, C64};

/// Shared sphere tower, tall enough for every criterion that sweeps levels.
fn a1_tower() -> &'static Arc<Tower> {
    static TOWER: OnceLock<Arc<Tower>> = OnceLock::new();
    TOWER.get_or_init(|| {
        let alg = Algebra::from_name("A1").unwrap();
        Arc::new(Tower::new(&alg, Weight(vec![1]), 50).unwrap())
    })
}

fn random_operator<R: rand::Rng>(rng: &mut R, d: usize) -> CMat {
    let g = ginibre(rng, d);
    let scale = 1.0 / frobenius_norm(&g);
    g.mapv(|z| z * scale)
}

/// Print the verdict line and panic on failures.
fn conclude(id: &str, label: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("[{id}][PASS] {label}");
    } else {
        println!("[{id}][FAIL] {label} — {} violation(s)", failures.len());
        for f in failures.iter().take(12) {
            println!("         {f}");
        }
        if failures.len() > 12 {
            println!("         … and {} more", failures.len() - 12);
        }
        panic!("[{id}] {label}: {} violation(s), first: {}", failures.len(), failures[0]);
    }
}

#[test]
fn a01_casimir_law() {
    let tower = a1_tower();
    let mut failures = Vec::new();
    for n in 1..=50usize {
        let rep = tower.level(n);
        let want = (n as f64 / 2.0) * (n as f64 / 2.0 + 1.0);
        let closed = rep.casimir_value();
        if (closed - want).abs() > 1e-12 * want {
            failures.push(format!("closed form at N={n}: {closed} vs {want}"));
        }
        let scaled = identity(rep.dim).mapv(|z| z * C64::new(want, 0.0));
        let op_residual = frobenius_norm(&(&rep.casimir() - &scaled)) / want;
        if op_residual > 1e-12 {
            failures.push(format!("operator residual {op_residual:.3e} at N={n}"));
        }
    }
    conclude("A01", "Casimir eigenvalue (N/2)(N/2+1) for N = 1..50, rel 1e-12", &failures);
}

#[test]
fn a02_raising_operator_nilpotency() {
    let tower = a1_tower();
    let mut failures = Vec::new();
    for n in 1..=30usize {
        let report = check_relations(&GenRep::from_irrep(tower.level(n)));
        let (degree, ratio) = report.nilpotency[0];
        if degree != n + 1 {
            failures.push(format!("nilpotency degree {degree} ≠ N+1 at N={n}"));
        }
        if ratio >= 1e-10 {
            failures.push(format!("‖J₊^{}‖/‖J₊‖^{} = {ratio:.3e} at N={n}", n + 1, n + 1));
        }
    }
    conclude("A02", "raising-operator nilpotency ratio < 1e-10 for N = 1..30", &failures);
}

#[test]
fn a03_sphere_relation_flow() {
    let tower = a1_tower();
    let mut failures = Vec::new();
    for n in 1..=50usize {
        let x = tower.x_ops(n);
        let mut c1: CMat = Array2::zeros((x[0].nrows(), x[0].ncols()));
        for xa in &x {
            c1 = c1 + xa.dot(xa);
        }
        let want = 0.25 + 1.0 / (2.0 * n as f64);
        let (eigenvalues, _) = hermitian_eig(&c1);
        for ev in eigenvalues {
            if (ev - want).abs() > 1e-12 * want {
                failures.push(format!("eigenvalue {ev} vs {want} at N={n}"));
            }
        }
    }
    conclude("A03", "spectrum of Σ X_a² equals 1/4 + 1/(2N), rel 1e-12", &failures);
}

#[test]
fn a04_kernel_modulus_formula() {
    let tower = a1_tower();
    let mut rng = seeded_rng(401);
    let triples: Vec<[OrbitPoint; 3]> = (0..100)
        .map(|_| {
            [
                OrbitPoint::random(&mut rng, 2),
                OrbitPoint::random(&mut rng, 2),
                OrbitPoint::random(&mut rng, 2),
            ]
        })
        .collect();
    let mut failures = Vec::new();
    for &n in &[1usize, 5, 10, 25] {
        let mut worst = 0.0_f64;
        let mut bad = 0usize;
        let mut min_pred_of_bad = f64::INFINITY;
        for [p, q, r] in &triples {
            let k = three_point(tower, n, p, q, r).unwrap().norm();
            let pred = ((n + 1) * (n + 1)) as f64
                * (sphere::fs_distance(p, q) / 2.0).cos().powi(n as i32)
                * (sphere::fs_distance(q, r) / 2.0).cos().powi(n as i32)
                * (sphere::fs_distance(r, p) / 2.0).cos().powi(n as i32);
            let rel = (k - pred).abs() / pred;
            if rel > 1e-8 {
                bad += 1;
                worst = worst.max(rel);
                min_pred_of_bad = min_pred_of_bad.min(pred);
            }
        }
        if bad > 0 {
            failures.push(format!(
                "N={n}: {bad}/100 triples above rel 1e-8 (worst {worst:.3e}); every \
                 violation has predicted |K| ≤ {min_pred_of_bad:.3e}, beneath the \
                 f64 cancellation floor of the level-{n} overlap sums"
            ));
        }
    }
    conclude(
        "A04",
        "|K_N| = (N+1)²·cos^N·cos^N·cos^N at rel 1e-8, 100 uniform triples, N ∈ {1,5,10,25}",
        &failures,
    );
}

#[test]
fn a05_kernel_phase_equals_twice_level_times_area() {
    let tower = a1_tower();
    let mut rng = seeded_rng(405);
    let mut failures = Vec::new();
    let mut triangles = Vec::new();
    while triangles.len() < 20 {
        // A small geodesic triangle inside a cap of radius 0.05 around a
        // generic center, so the diameter stays ≤ 0.1.
        let theta0 = 0.5 + 2.0 * rng.gen::<f64>();
        let phi0 = std::f64::consts::TAU * rng.gen::<f64>();
        let mut corner = || {
            let dt = 0.05 * (2.0 * rng.gen::<f64>() - 1.0);
            let dp = 0.05 * (2.0 * rng.gen::<f64>() - 1.0) / theta0.sin();
            OrbitPoint::from_angles(theta0 + dt, phi0 + dp)
        };
        let (p, q, r) = (corner(), corner(), corner());
        let diameter = sphere::fs_distance(&p, &q)
            .max(sphere::fs_distance(&q, &r))
            .max(sphere::fs_distance(&r, &p));
        if diameter <= 0.1 {
            triangles.push([p, q, r]);
        }
    }
    for &n in &[5usize, 20] {
        for (t, [p, q, r]) in triangles.iter().enumerate() {
            let phase = three_point(tower, n, p, q, r).unwrap().arg();
            let area = sphere::triangle_area(p, q, r);
            let defect = (phase - 2.0 * n as f64 * area).abs();
            if defect > 1e-3 {
                failures.push(format!("triangle {t} at N={n}: |Δ| = {defect:.3e}"));
            }
        }
    }
    conclude(
        "A05",
        "arg K_N = 2N × triangle area within 1e-3, 20 triangles of diameter ≤ 0.1, N ∈ {5,20}",
        &failures,
    );
}

#[test]
fn a06_unitality_and_ladder_consistency() {
    let tower = a1_tower();
    let mut rng = seeded_rng(406);
    let points: Vec<OrbitPoint> = (0..200).map(|_| OrbitPoint::random(&mut rng, 2)).collect();
    let one = Polynomial::parse("1", 3).unwrap();
    let mut failures = Vec::new();

    for &n in &[1usize, 5, 10, 20] {
        // Dequantizing the identity gives the constant one function.
        let id = identity(tower.dim(n));
        for pt in points.iter().take(50) {
            let v = symbol_at(tower, n, &id, pt).unwrap();
            if (v - C64::new(1.0, 0.0)).norm() > 1e-14 {
                failures.push(format!("I_N(1) off by {:.3e} at N={n}", (v - 1.0).norm()));
                break;
            }
        }
        // Quantizing the constant one on an exact grid gives the identity.
        let rule = RuleSpec::GaussS2 { degree: n + 2 };
        let set = OrbitSet::from_spec(tower, &rule).unwrap();
        let q = coadjoint::berezin::quantize(tower, n, &set, &one).unwrap();
        let defect = frobenius_norm(&(&q - &id));
        if defect > 1e-12 {
            failures.push(format!("P_N(1) misses the identity by {defect:.3e} at N={n}"));
        }
    }

    // Dequantization is consistent along the ladder: the symbol of the
    // injected operator is the symbol of the original.
    for n in 1..=20usize {
        let a = random_operator(&mut rng, tower.dim(n));
        let lifted = inject(tower, n, &a).unwrap();
        let mut worst = 0.0_f64;
        for pt in &points {
            let low = symbol_at(tower, n, &a, pt).unwrap();
            let high = symbol_at(tower, n + 1, &lifted, pt).unwrap();
            worst = worst.max((low - high).norm());
        }
        if worst > 1e-10 {
            failures.push(format!("symbol consistency defect {worst:.3e} at N={n}"));
        }
    }

    // The two ladder directions are Hilbert–Schmidt adjoints.
    for n in 1..=20usize {
        for _ in 0..3 {
            let b = random_operator(&mut rng, tower.dim(n - 1));
            let a = random_operator(&mut rng, tower.dim(n));
            let up = hs_pairing(&inject(tower, n - 1, &b).unwrap(), &a);
            let down = hs_pairing(&b, &project(tower, n, &a).unwrap());
            if (up - down).norm() > 1e-10 {
                failures.push(format!("adjointness defect {:.3e} at N={n}", (up - down).norm()));
            }
        }
    }
    conclude(
        "A06",
        "I_N(1)=1, P_N(1)=1 (1e-12, exact grid), I_{N+1}∘i_N = I_N (1e-10), ladder adjointness",
        &failures,
    );
}

#[test]
fn a07_two_forms_of_the_downward_ladder_agree() {
    let tower = a1_tower();
    let mut rng = seeded_rng(407);
    let mut failures = Vec::new();
    for n in 1..=20usize {
        for _ in 0..3 {
            let a = random_operator(&mut rng, tower.dim(n));
            let sandwich = project(tower, n, &a).unwrap();
            let traced = project_trace(tower, n, &a).unwrap();
            let defect = frobenius_norm(&(&sandwich - &traced));
            if defect > 1e-10 {
                failures.push(format!("defect {defect:.3e} at N={n}"));
            }
        }
    }
    conclude("A07", "partial-trace and sandwich forms of p_N agree to 1e-10, N ≤ 20", &failures);
}

#[test]
fn a08_star_product_convergence() {
    let tower = a1_tower();
    let mut rng = seeded_rng(408);
    let points: Vec<OrbitPoint> = (0..200).map(|_| OrbitPoint::random(&mut rng, 2)).collect();
    let f = Polynomial::parse("x0", 3).unwrap();
    let g = Polynomial::parse("x1", 3).unwrap();
    let levels = [5usize, 10, 20, 40];
    let mut product = Vec::new();
    let mut poisson = Vec::new();
    for &n in &levels {
        let set =
            OrbitSet::from_spec(tower, &RuleSpec::GaussS2 { degree: n + 4 }).unwrap();
        let defect = star_defects(tower, n, &set, &f, &g, &points).unwrap();
        product.push(defect.product_sup);
        poisson.push(defect.poisson_sup);
    }
    let mut failures = Vec::new();
    for w in product.windows(2) {
        if w[1] >= w[0] {
            failures.push(format!("product defects not decreasing: {product:?}"));
            break;
        }
    }
    for w in poisson.windows(2) {
        if w[1] >= w[0] {
            failures.push(format!("Poisson defects not decreasing: {poisson:?}"));
            break;
        }
    }
    let xs: Vec<f64> = levels.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = product.iter().map(|d| d.ln()).collect();
    let mx = xs.iter().sum::<f64>() / 4.0;
    let my = ys.iter().sum::<f64>() / 4.0;
    let slope = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum::<f64>()
        / xs.iter().map(|x| (x - mx) * (x - mx)).sum::<f64>();
    if !(-1.3..=-0.7).contains(&slope) {
        failures.push(format!("log-log slope {slope:.3} outside [-1.3, -0.7]"));
    }
    conclude(
        "A08",
        &format!(
            "star-product sup defect decreasing on N ∈ {{5,10,20,40}}, slope {slope:.2}; \
             Poisson estimate same trend"
        ),
        &failures,
    );
}

#[test]
fn a09_local_kernel_expansion_is_high_order() {
    let tower = a1_tower();
    let p = OrbitPoint::from_angles(0.0, 0.0);
    let radii = [0.04_f64, 0.02, 0.01];
    let mut maxima = Vec::new();
    for &r in &radii {
        let mut worst = 0.0_f64;
        for k in 0..12 {
            let ups = C64::from_polar(r, 0.53 * k as f64);
            let zet = C64::from_polar(r, 1.71 * k as f64 + 0.4);
            let q = sphere::stereographic(ups);
            let s = sphere::stereographic(zet);
            let defect = local_expansion_defect(tower, 1, &p, &q, ups, &s, zet).unwrap();
            worst = worst.max(defect);
        }
        maxima.push(worst);
    }
    let mut failures = Vec::new();
    for w in maxima.windows(2) {
        let order = (w[0] / w[1]).log2();
        if order < 2.7 {
            failures.push(format!("halving order {order:.3} < 2.7 in {maxima:?}"));
        }
    }
    conclude(
        "A09",
        "second-order kernel expansion defect drops with exponent ≥ 2.7 at r ∈ {0.04,0.02,0.01}",
        &failures,
    );
}

#[test]
fn a10_bundle_identities() {
    let tower = a1_tower();
    let capped = Arc::new(Tower::new(&tower.algebra, Weight(vec![1]), 12).unwrap());
    let lambdas: [i64; 6] = [0, 1, -1, 2, -2, -4];

    let mut invariant_failures = Vec::new();
    let mut upward_failures = Vec::new();
    let mut transition_failures = Vec::new();
    let mut downward_failures = Vec::new();
    let mut decomposition_failures = Vec::new();
    let mut fiber_failures = Vec::new();

    for &l in &lambdas {
        let family = BundleFamily::new(&capped, Weight(vec![l])).unwrap();
        let t = family.transition();
        for n in 0..=12usize {
            if n >= t {
                let inv = family.q_invariants(n).unwrap();
                if inv.worst() >= 1e-9 {
                    invariant_failures
                        .push(format!("λ={l} N={n}: invariant defect {:.3e}", inv.worst()));
                }
            }
            if n < 12 {
                let step = family.recursion_step_i(n).unwrap();
                if step.transition {
                    if step.residual < 0.5 {
                        transition_failures.push(format!(
                            "λ={l}: transition step {n}→{} unexpectedly small: {:.3e}",
                            n + 1,
                            step.residual
                        ));
                    }
                } else if step.residual >= 1e-9 {
                    upward_failures.push(format!(
                        "λ={l} step {n}→{}: residual {:.3e}",
                        n + 1,
                        step.residual
                    ));
                }
            }
            if n > 0 {
                let step = family.recursion_step_p(n).unwrap();
                if step.residual >= 1e-9 {
                    downward_failures.push(format!(
                        "λ={l} step {}→{}: residual {:.3e}",
                        n,
                        n - 1,
                        step.residual
                    ));
                }
            }
            let section = verify_section_limit(&family, n).unwrap();
            let expected = family.dims(n).map_or(0, |(r, c)| r.min(c));
            if section.first_mismatch.is_some() || section.quantum.len() != expected {
                decomposition_failures.push(format!(
                    "λ={l} N={n}: labels {:?} vs arithmetic series start {}",
                    section.quantum,
                    l.abs()
                ));
            }
        }
        // The stabilizer is the bare torus, so the fiber is the character
        // −λ* = −λ; for λ = −2m that is the weight of the spin-m module.
        let fiber = classical_fiber(&capped.algebra, &capped.lambda, &family.lambda).unwrap();
        if fiber.0 != vec![-l] {
            fiber_failures.push(format!("λ={l}: fiber {:?} ≠ [{}]", fiber.0, -l));
        }
    }

    let subs: [(&str, &str, &Vec<String>); 6] = [
        ("A10.1", "projection invariants < 1e-9 at every level", &invariant_failures),
        ("A10.2", "upward recursion residual < 1e-9 away from the transition", &upward_failures),
        ("A10.3", "upward recursion breaks at the zero-to-nonzero transition", &transition_failures),
        ("A10.4", "downward recursion residual < 1e-9 everywhere", &downward_failures),
        ("A10.5", "module decomposition is the ascending label multiset", &decomposition_failures),
        ("A10.6", "classical fiber of λ = -2m is the spin-m module", &fiber_failures),
    ];
    let mut failing = Vec::new();
    for (id, label, failures) in &subs {
        if failures.is_empty() {
            println!("  [{id}][PASS] {label}");
        } else {
            println!("  [{id}][FAIL] {label} — {} violation(s), e.g. {}", failures.len(), failures[0]);
            failing.push(format!(
                "{id} {label}: {} violation(s), worst family behavior is a decaying \
                 O(N^-3/2) defect, exact only for λ = 0",
                failures.len()
            ));
        }
    }
    conclude(
        "A10",
        "bundle family identities for λ ∈ {0, ±1, ±2, -4}, N ≤ 12",
        &failing,
    );
}

#[test]
fn a11_orbit_classification() {
    let mut failures = Vec::new();
    let orbit = |series: Series, rank: usize, marks: &[usize]| {
        let d = DynkinDiagram::new(series, rank).unwrap();
        classify(&MarkedDiagram::new(d, marks.iter().copied().collect::<BTreeSet<_>>()).unwrap())
            .unwrap()
    };

    // The low-dimensional orbit table: dimension, torus rank, and the simple
    // factors of the isotropy group.
    let table: [(Series, usize, &[usize], usize, usize, &[&str]); 6] = [
        (Series::A, 1, &[0], 2, 1, &[]),
        (Series::A, 2, &[0], 4, 1, &["A1"]),
        (Series::A, 3, &[0], 6, 1, &["A2"]),
        (Series::C, 2, &[0], 6, 1, &["A1"]),
        (Series::B, 2, &[0], 6, 1, &["A1"]),
        (Series::A, 2, &[0, 1], 6, 2, &[]),
    ];
    for (series, rank, marks, dim, torus, factors) in table {
        let o = orbit(series, rank, marks);
        if o.dim_orbit != dim || o.torus_rank != torus || o.isotropy_factors != factors {
            failures.push(format!(
                "{series:?}{rank} marked {marks:?}: got dim {}, torus {}, factors {:?}",
                o.dim_orbit, o.torus_rank, o.isotropy_factors
            ));
        }
    }

    // The two-mark worked example on B5.
    let o = orbit(Series::B, 5, &[0, 2]);
    if o.dim_group != 55 || o.dim_isotropy != 15 || o.dim_orbit != 40 {
        failures.push(format!(
            "B5 marked {{1,3}}: got group {}, isotropy {}, orbit {}",
            o.dim_group, o.dim_isotropy, o.dim_orbit
        ));
    }
    if o.isotropy_name() != "U(1)^2 × A1 × B2" {
        failures.push(format!("B5 isotropy rendered as {}", o.isotropy_name()));
    }

    // Exhaustive even-dimension check over every marked diagram of rank ≤ 4.
    let diagrams: Vec<(Series, usize)> = vec![
        (Series::A, 1),
        (Series::A, 2),
        (Series::A, 3),
        (Series::A, 4),
        (Series::B, 2),
        (Series::B, 3),
        (Series::B, 4),
        (Series::C, 2),
        (Series::C, 3),
        (Series::C, 4),
        (Series::D, 4),
        (Series::F, 4),
        (Series::G, 2),
    ];
    let mut checked = 0usize;
    for (series, rank) in diagrams {
        for mask in 1u32..(1 << rank) {
            let marks: BTreeSet<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).collect();
            let d = DynkinDiagram::new(series, rank).unwrap();
            let o = classify(&MarkedDiagram::new(d, marks.clone()).unwrap()).unwrap();
            checked += 1;
            if o.dim_orbit % 2 != 0 {
                failures.push(format!(
                    "{series:?}{rank} marked {marks:?}: odd orbit dimension {}",
                    o.dim_orbit
                ));
            }
        }
    }
    assert!(checked > 100, "exhaustive sweep actually enumerated something");
    conclude(
        "A11",
        "orbit table rows, the 40-dimensional worked example, and even dimensions (rank ≤ 4)",
        &failures,
    );
}

#[test]
fn a12_a2_smoke_suite() {
    let alg = Algebra::from_name("A2").unwrap();
    let tower = Arc::new(Tower::new(&alg, Weight(vec![1, 0]), 6).unwrap());
    let mut failures = Vec::new();

    // Defining relations across the tower and on the adjoint-type weight.
    for n in 0..=6usize {
        let worst = check_relations(&GenRep::from_irrep(tower.level(n))).worst();
        if worst >= 1e-10 {
            failures.push(format!("relation residual {worst:.3e} on (N,0), N={n}"));
        }
    }
    let adjoint = coadjoint::Irrep::new(&alg, Weight(vec![1, 1])).unwrap();
    if adjoint.dim != 8 {
        failures.push(format!("(1,1) has dimension {}", adjoint.dim));
    }
    let worst = check_relations(&GenRep::from_irrep(&adjoint)).worst();
    if worst >= 1e-10 {
        failures.push(format!("relation residual {worst:.3e} on (1,1)"));
    }

    // Both ladder embeddings are intertwiners.
    for n in 0..6usize {
        let up = embedding_residual(
            tower.reference(),
            tower.level(n),
            tower.level(n + 1),
            tower.plus(n),
        );
        let down = embedding_residual(
            tower.dual_reference(),
            tower.level(n + 1),
            tower.level(n),
            tower.minus(n),
        );
        if up >= 1e-10 || down >= 1e-10 {
            failures.push(format!("intertwiner residuals ({up:.3e}, {down:.3e}) at N={n}"));
        }
    }

    // Ladder unitality in both directions.
    for n in 1..6usize {
        let lifted = inject(&tower, n, &identity(tower.dim(n))).unwrap();
        let up = frobenius_norm(&(&lifted - &identity(tower.dim(n + 1))));
        let lowered = project(&tower, n, &identity(tower.dim(n))).unwrap();
        let down = frobenius_norm(&(&lowered - &identity(tower.dim(n - 1))));
        if up >= 1e-10 || down >= 1e-10 {
            failures.push(format!("unitality defects ({up:.3e}, {down:.3e}) at N={n}"));
        }
    }

    // Coherent overlaps decay geometrically: |⟨p,q⟩_N| = |⟨p,q⟩_1|^N.
    let mut rng = seeded_rng(412);
    for pair in 0..10 {
        let p = OrbitPoint::random(&mut rng, 3);
        let q = OrbitPoint::random(&mut rng, 3);
        let base = tower.coherent_overlap(&p, &q, 1).unwrap().norm();
        let mut prev = base;
        for n in 2..=6usize {
            let ov = tower.coherent_overlap(&p, &q, n).unwrap().norm();
            if ov >= prev {
                failures.push(format!("pair {pair}: no decay at N={n} ({prev:.3e} → {ov:.3e})"));
            }
            if (ov - base.powi(n as i32)).abs() > 1e-8 * base.powi(n as i32) + 1e-12 {
                failures.push(format!(
                    "pair {pair}: |overlap|_{n} = {ov:.6e} vs power law {:.6e}",
                    base.powi(n as i32)
                ));
            }
            prev = ov;
        }
    }
    conclude(
        "A12",
        "A2 tower (N,0) for N ≤ 6 and (1,1): relations, intertwiners, unitality, overlap decay",
        &failures,
    );
}

// Keep the hermiticity of random symbols on the table: quantize/dequantize
// round trips underpin several criteria, so a quick cross-check that the
// dequantized symbol of a Hermitian operator is real guards the harness
// itself.
#[test]
fn harness_sanity_hermitian_symbols_are_real() {
    let tower = a1_tower();
    let mut rng = seeded_rng(999);
    let g = ginibre(&mut rng, tower.dim(6));
    let h = (&g + &dagger(&g)).mapv(|z| z * 0.5);
    for _ in 0..20 {
        let pt = OrbitPoint::random(&mut rng, 2);
        let s = symbol_at(tower, 6, &h, &pt).unwrap();
        assert!(s.im.abs() < 1e-12, "symbol of a Hermitian operator must be real");
    }
}
