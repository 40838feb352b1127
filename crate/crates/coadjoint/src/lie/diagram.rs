//! Dynkin diagrams: canonical construction by series, recognition of
//! arbitrary node/edge descriptions, duality permutations, and marked
//! diagrams (orbit selectors).
//!
//! Node labels follow the Bourbaki plates, 0-based internally:
//! * A/B/C: a path `0 − 1 − … − (n−1)`; B has its double bond arrow pointing
//!   at the last node (short), C away from it (last node long).
//! * D: path `0 … n−3` with both `n−2` and `n−1` attached to `n−3`.
//! * E6/E7/E8: chain `0−2−3−4−5(−6)(−7)` with node `1` attached to node `3`.
//! * F4: path with the double bond between nodes 1 and 2 (node 1 long).
//! * G2: triple bond, node 1 long.
//!
//! For multiple bonds the "arrow" points from the long-root node to the
//! short-root node, i.e. `A[long][short] = −mult`, `A[short][long] = −1`.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Cap on the rank accepted from user input; everything in scope is far
/// smaller, and the cap keeps root enumeration trivially cheap.
pub const MAX_RANK: usize = 24;

/// Simple-series label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        write!(f, "{s}")
    }
}

/// A connected Dynkin diagram in canonical (Bourbaki) labelling.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DynkinDiagram {
    pub series: Series,
    pub rank: usize,
    cartan: Vec<Vec<i64>>,
}

/// One bond of a diagram: `(a, b, multiplicity, long_end)`. For a single bond
/// `long_end` is `None`; otherwise it names the node on the long-root side.
pub type Bond = (usize, usize, u8, Option<usize>);

impl DynkinDiagram {
    /// Build the canonical diagram for a series and rank.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::MalformedDiagram("rank must be positive".into()));
        }
        if rank > MAX_RANK {
            return Err(Error::SizeCap(format!("rank {rank} exceeds cap {MAX_RANK}")));
        }
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::MalformedDiagram(format!("invalid rank {rank} for series {series}")));
        }
        let n = rank;
        let mut a = vec![vec![0_i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let single = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        let double = |a: &mut Vec<Vec<i64>>, long: usize, short: usize| {
            a[long][short] = -2;
            a[short][long] = -1;
        };
        match series {
            Series::A => {
                for i in 0..n - 1 {
                    single(&mut a, i, i + 1);
                }
            }
            Series::B => {
                for i in 0..n.saturating_sub(2) {
                    single(&mut a, i, i + 1);
                }
                double(&mut a, n - 2, n - 1);
            }
            Series::C => {
                for i in 0..n.saturating_sub(2) {
                    single(&mut a, i, i + 1);
                }
                double(&mut a, n - 1, n - 2);
            }
            Series::D => {
                for i in 0..n - 3 {
                    single(&mut a, i, i + 1);
                }
                single(&mut a, n - 3, n - 2);
                single(&mut a, n - 3, n - 1);
            }
            Series::E => {
                // chain 0−2−3−4−5(−6)(−7), node 1 attached to node 3
                single(&mut a, 0, 2);
                single(&mut a, 2, 3);
                single(&mut a, 3, 4);
                single(&mut a, 4, 5);
                if n >= 7 {
                    single(&mut a, 5, 6);
                }
                if n == 8 {
                    single(&mut a, 6, 7);
                }
                single(&mut a, 1, 3);
            }
            Series::F => {
                single(&mut a, 0, 1);
                double(&mut a, 1, 2);
                single(&mut a, 2, 3);
            }
            Series::G => {
                // A[1][0] = −3: node 1 long, node 0 short
                a[1][0] = -3;
                a[0][1] = -1;
            }
        }
        Ok(DynkinDiagram { series, rank, cartan: a })
    }

    /// Cartan matrix `A[i][j] = ⟨αᵢ, αⱼ∨⟩`.
    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    /// Canonical name, e.g. `"B5"`.
    pub fn name(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    /// Bonds with multiplicity and (for multiple bonds) the long-root end.
    pub fn bonds(&self) -> Vec<Bond> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                if self.cartan[i][j] != 0 {
                    let m = self.cartan[i][j].abs().max(self.cartan[j][i].abs()) as u8;
                    let long = if m >= 2 {
                        Some(if self.cartan[i][j] == -(m as i64) { i } else { j })
                    } else {
                        None
                    };
                    out.push((i, j, m, long));
                }
            }
        }
        out
    }

    /// Permutation `σ` with `(λ*)ᵢ = λ_{σ(i)}`: the diagram automorphism that
    /// sends a representation to its dual. Identity except for A (reversal),
    /// odd-rank D (swap of the fork), and E6.
    pub fn dual_permutation(&self) -> Vec<usize> {
        let n = self.rank;
        match self.series {
            Series::A => (0..n).rev().collect(),
            Series::D if n % 2 == 1 => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                p
            }
            Series::E if n == 6 => vec![5, 1, 4, 3, 2, 0],
            _ => (0..n).collect(),
        }
    }
}

/// An edge as supplied by recognition callers (arbitrary 0-based node ids).
#[derive(Clone, Debug)]
pub struct RawEdge {
    pub a: usize,
    pub b: usize,
    pub mult: u8,
    /// Node on the long-root side; required when `mult ≥ 2`.
    pub long: Option<usize>,
}

/// Recognize an arbitrary connected node/edge description as a canonical
/// diagram. Returns the diagram together with `perm`, where
/// `perm[canonical index] = input index`.
pub fn recognize(n: usize, edges: &[RawEdge]) -> Result<(DynkinDiagram, Vec<usize>)> {
    if n == 0 {
        return Err(Error::MalformedDiagram("empty diagram".into()));
    }
    if n > MAX_RANK {
        return Err(Error::SizeCap(format!("rank {n} exceeds cap {MAX_RANK}")));
    }
    if n == 1 {
        if !edges.is_empty() {
            return Err(Error::MalformedDiagram("rank-1 diagram with edges".into()));
        }
        return Ok((DynkinDiagram::new(Series::A, 1)?, vec![0]));
    }
    if edges.len() != n - 1 {
        return Err(Error::MalformedDiagram(format!(
            "a connected simple diagram on {n} nodes needs exactly {} edges, got {}",
            n - 1,
            edges.len()
        )));
    }
    let mut adj: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n];
    let mut doubles = Vec::new();
    let mut triples = Vec::new();
    for e in edges {
        if e.a >= n || e.b >= n || e.a == e.b {
            return Err(Error::MalformedDiagram(format!("bad edge ({}, {})", e.a, e.b)));
        }
        match e.mult {
            1 => {}
            2 => doubles.push(e.clone()),
            3 => triples.push(e.clone()),
            m => return Err(Error::MalformedDiagram(format!("bond multiplicity {m} is not in 1..=3"))),
        }
        if e.mult >= 2 {
            match e.long {
                Some(l) if l == e.a || l == e.b => {}
                _ => {
                    return Err(Error::MalformedDiagram(
                        "a multiple bond needs an arrow (long end must be one of its nodes)".into(),
                    ))
                }
            }
        }
        adj[e.a].push((e.b, e.mult));
        adj[e.b].push((e.a, e.mult));
    }
    // Connectivity (a tree with n−1 edges is connected iff all nodes reached).
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(w, _) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Disconnected);
    }
    let deg = |v: usize| adj[v].len();
    if (0..n).any(|v| deg(v) > 3) {
        return Err(Error::MalformedDiagram("node of degree > 3".into()));
    }
    let branch_nodes: Vec<usize> = (0..n).filter(|&v| deg(v) == 3).collect();

    // Walk a simple path starting at `start` away from `prev`.
    let walk = |start: usize, prev: Option<usize>| -> Vec<usize> {
        let mut path = vec![start];
        let mut prev = prev;
        let mut cur = start;
        loop {
            let next: Vec<usize> =
                adj[cur].iter().map(|&(w, _)| w).filter(|&w| Some(w) != prev).collect();
            match next.len() {
                0 => break,
                1 => {
                    prev = Some(cur);
                    cur = next[0];
                    path.push(cur);
                }
                _ => break, // hit a branch node; caller handles
            }
        }
        path
    };

    if !triples.is_empty() {
        if n != 2 || triples.len() != 1 || !doubles.is_empty() {
            return Err(Error::MalformedDiagram("triple bond only occurs in G2".into()));
        }
        let long = triples[0].long.unwrap();
        let short = if triples[0].a == long { triples[0].b } else { triples[0].a };
        let d = DynkinDiagram::new(Series::G, 2)?;
        return Ok((d, vec![short, long]));
    }

    if doubles.len() > 1 {
        return Err(Error::MalformedDiagram("more than one double bond".into()));
    }

    if let Some(e) = doubles.first() {
        if !branch_nodes.is_empty() {
            return Err(Error::MalformedDiagram("double bond together with a branch node".into()));
        }
        let long = e.long.unwrap();
        let short = if e.a == long { e.b } else { e.a };
        if deg(short) == 1 {
            // B_n: path must end at the short node.
            let mut path = walk(short, None);
            path.reverse();
            if path.len() != n || path[n - 2] != long {
                return Err(Error::MalformedDiagram("double bond not at the end of a path".into()));
            }
            let d = DynkinDiagram::new(Series::B, n)?;
            return Ok((d, path));
        }
        if deg(long) == 1 {
            // C_n: path ends at the long node.
            let mut path = walk(long, None);
            path.reverse();
            if path.len() != n || path[n - 2] != short {
                return Err(Error::MalformedDiagram("double bond not at the end of a path".into()));
            }
            let d = DynkinDiagram::new(Series::C, n)?;
            return Ok((d, path));
        }
        // Interior double bond: F4, with the long pair first.
        if n != 4 {
            return Err(Error::MalformedDiagram("interior double bond only occurs in F4".into()));
        }
        let tail_long = walk(long, Some(short));
        let tail_short = walk(short, Some(long));
        if tail_long.len() != 2 || tail_short.len() != 2 {
            return Err(Error::MalformedDiagram("F4 shape requires a path of length 4".into()));
        }
        let perm = vec![tail_long[1], long, short, tail_short[1]];
        let d = DynkinDiagram::new(Series::F, 4)?;
        return Ok((d, perm));
    }

    match branch_nodes.len() {
        0 => {
            // A_n. Deterministic orientation: start from the smaller leaf id.
            let leaves: Vec<usize> = (0..n).filter(|&v| deg(v) == 1).collect();
            let start = *leaves.iter().min().unwrap();
            let path = walk(start, None);
            if path.len() != n {
                return Err(Error::MalformedDiagram("not a simple path".into()));
            }
            let d = DynkinDiagram::new(Series::A, n)?;
            Ok((d, path))
        }
        1 => {
            let b = branch_nodes[0];
            let mut legs: Vec<Vec<usize>> =
                adj[b].iter().map(|&(w, _)| walk(w, Some(b))).collect();
            if legs.iter().any(|l| l.len() + 1 + 1 > n + 1) || legs.iter().map(|l| l.len()).sum::<usize>() + 1 != n {
                return Err(Error::MalformedDiagram("multiple branch points".into()));
            }
            // Deterministic: sort by (length, first node id).
            legs.sort_by_key(|l| (l.len(), l[0]));
            let lens: Vec<usize> = legs.iter().map(|l| l.len()).collect();
            match lens.as_slice() {
                [1, 1, k] => {
                    // D_n, n = k + 3: long leg reversed is α1..α_{n−3}.
                    let nn = k + 3;
                    let mut perm: Vec<usize> = legs[2].iter().rev().copied().collect();
                    perm.push(b);
                    perm.push(legs[0][0]);
                    perm.push(legs[1][0]);
                    let d = DynkinDiagram::new(Series::D, nn)?;
                    Ok((d, perm))
                }
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
                    let nn = 4 + lens[2];
                    // Bourbaki: chain (leg3 reversed) − branch − leg2 − …, node 1 on the branch.
                    // canonical indices: 0, 2 from the 2-leg; 1 = short leg; 3 = branch; 4.. = long leg.
                    let two_leg = &legs[1];
                    let long_leg = &legs[2];
                    let mut perm = vec![0usize; nn];
                    perm[0] = two_leg[1];
                    perm[2] = two_leg[0];
                    perm[1] = legs[0][0];
                    perm[3] = b;
                    for (k, &v) in long_leg.iter().enumerate() {
                        perm[4 + k] = v;
                    }
                    let d = DynkinDiagram::new(Series::E, nn)?;
                    Ok((d, perm))
                }
                _ => Err(Error::MalformedDiagram(format!("branch with leg lengths {lens:?} is not simple"))),
            }
        }
        _ => Err(Error::MalformedDiagram("more than one branch node".into())),
    }
}

/// A diagram together with a non-empty set of marked (crossed) nodes.
/// The marks select a coadjoint orbit type: the isotropy group is read off
/// the diagram by deleting the marked nodes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MarkedDiagram {
    pub diagram: DynkinDiagram,
    pub marks: BTreeSet<usize>,
}

impl MarkedDiagram {
    pub fn new(diagram: DynkinDiagram, marks: BTreeSet<usize>) -> Result<Self> {
        if marks.is_empty() {
            return Err(Error::MalformedDiagram("at least one node must be marked".into()));
        }
        if let Some(&m) = marks.iter().find(|&&m| m >= diagram.rank) {
            return Err(Error::MalformedDiagram(format!(
                "mark {m} out of range for rank {}",
                diagram.rank
            )));
        }
        Ok(MarkedDiagram { diagram, marks })
    }

    /// Marks for the orbit through (the coadjoint image of) a dominant weight:
    /// the support of the weight.
    pub fn for_weight(diagram: DynkinDiagram, hw: &crate::lie::Weight) -> Result<Self> {
        let marks: BTreeSet<usize> =
            hw.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect();
        Self::new(diagram, marks)
    }
}

#[derive(Deserialize)]
struct DiagramSpec {
    nodes: Vec<serde_json::Value>,
    #[serde(default)]
    edges: Vec<EdgeSpec>,
    #[serde(default)]
    marks: Vec<serde_json::Value>,
}

#[derive(Deserialize)]
struct EdgeSpec {
    from: serde_json::Value,
    to: serde_json::Value,
    #[serde(default = "one")]
    mult: u8,
    /// For `mult ≥ 2`: `true` means the arrow points `from → to`
    /// (i.e. `from` is the long-root side).
    #[serde(default)]
    arrow: bool,
}

fn one() -> u8 {
    1
}

fn value_key(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Result of parsing a diagram description.
#[derive(Clone, Debug)]
pub struct ParsedDiagram {
    pub diagram: DynkinDiagram,
    /// Marked nodes, as canonical indices.
    pub marks: BTreeSet<usize>,
}

/// Parse either a series name (`"B5"`) or a JSON object
/// `{"nodes": [...], "edges": [{"from", "to", "mult", "arrow"}], "marks": [...]}`.
pub fn parse_diagram(input: &str) -> Result<ParsedDiagram> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        let spec: DiagramSpec = serde_json::from_str(trimmed)
            .map_err(|e| Error::MalformedDiagram(format!("bad diagram JSON: {e}")))?;
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        for (i, v) in spec.nodes.iter().enumerate() {
            if index.insert(value_key(v), i).is_some() {
                return Err(Error::MalformedDiagram(format!("duplicate node id {v}")));
            }
        }
        let resolve = |v: &serde_json::Value| -> Result<usize> {
            index
                .get(&value_key(v))
                .copied()
                .ok_or_else(|| Error::MalformedDiagram(format!("unknown node id {v}")))
        };
        let mut edges = Vec::new();
        for e in &spec.edges {
            let a = resolve(&e.from)?;
            let b = resolve(&e.to)?;
            let long = if e.mult >= 2 {
                if !e.arrow {
                    return Err(Error::MalformedDiagram(
                        "multiple bond needs \"arrow\": true (from = long side)".into(),
                    ));
                }
                Some(a)
            } else {
                None
            };
            edges.push(RawEdge { a, b, mult: e.mult, long });
        }
        let (diagram, perm) = recognize(spec.nodes.len(), &edges)?;
        // perm[canonical] = input; invert to translate marks.
        let mut inv = vec![0usize; perm.len()];
        for (canon, &orig) in perm.iter().enumerate() {
            inv[orig] = canon;
        }
        let mut marks = BTreeSet::new();
        for v in &spec.marks {
            marks.insert(inv[resolve(v)?]);
        }
        Ok(ParsedDiagram { diagram, marks })
    } else {
        let series = match trimmed.chars().next() {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::MalformedDiagram(format!("unrecognized diagram '{trimmed}'"))),
        };
        let rank: usize = trimmed[1..]
            .parse()
            .map_err(|_| Error::MalformedDiagram(format!("bad rank in '{trimmed}'")))?;
        Ok(ParsedDiagram { diagram: DynkinDiagram::new(series, rank)?, marks: BTreeSet::new() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_cartans() {
        let a2 = DynkinDiagram::new(Series::A, 2).unwrap();
        assert_eq!(*a2.cartan(), vec![vec![2, -1], vec![-1, 2]]);
        let b2 = DynkinDiagram::new(Series::B, 2).unwrap();
        assert_eq!(*b2.cartan(), vec![vec![2, -2], vec![-1, 2]]);
        let c2 = DynkinDiagram::new(Series::C, 2).unwrap();
        assert_eq!(*c2.cartan(), vec![vec![2, -1], vec![-2, 2]]);
        let g2 = DynkinDiagram::new(Series::G, 2).unwrap();
        assert_eq!(*g2.cartan(), vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn rank_validation() {
        assert!(DynkinDiagram::new(Series::D, 3).is_err());
        assert!(DynkinDiagram::new(Series::E, 9).is_err());
        assert!(DynkinDiagram::new(Series::F, 3).is_err());
        assert!(DynkinDiagram::new(Series::A, 0).is_err());
        assert!(DynkinDiagram::new(Series::A, MAX_RANK + 1).is_err());
    }

    #[test]
    fn duality_permutations() {
        let a3 = DynkinDiagram::new(Series::A, 3).unwrap();
        assert_eq!(a3.dual_permutation(), vec![2, 1, 0]);
        let d5 = DynkinDiagram::new(Series::D, 5).unwrap();
        assert_eq!(d5.dual_permutation(), vec![0, 1, 2, 4, 3]);
        let d4 = DynkinDiagram::new(Series::D, 4).unwrap();
        assert_eq!(d4.dual_permutation(), vec![0, 1, 2, 3]);
        let e6 = DynkinDiagram::new(Series::E, 6).unwrap();
        assert_eq!(e6.dual_permutation(), vec![5, 1, 4, 3, 2, 0]);
        let b4 = DynkinDiagram::new(Series::B, 4).unwrap();
        assert_eq!(b4.dual_permutation(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn recognize_scrambled_b3() {
        // Path 2 − 0 = 1 (double bond 0→1, node 1 short).
        let edges = vec![
            RawEdge { a: 2, b: 0, mult: 1, long: None },
            RawEdge { a: 0, b: 1, mult: 2, long: Some(0) },
        ];
        let (d, perm) = recognize(3, &edges).unwrap();
        assert_eq!(d.name(), "B3");
        assert_eq!(perm, vec![2, 0, 1]);
    }

    #[test]
    fn recognize_c_series_by_arrow() {
        // Same path but the long node is terminal → C3.
        let edges = vec![
            RawEdge { a: 2, b: 0, mult: 1, long: None },
            RawEdge { a: 0, b: 1, mult: 2, long: Some(1) },
        ];
        let (d, _) = recognize(3, &edges).unwrap();
        assert_eq!(d.name(), "C3");
    }

    #[test]
    fn recognize_d_and_e() {
        // Star on node 9 with legs {1}, {2}, {3} → D4.
        let edges = vec![
            RawEdge { a: 9 % 4, b: 0, mult: 1, long: None }, // 1−0
            RawEdge { a: 1, b: 2, mult: 1, long: None },
            RawEdge { a: 1, b: 3, mult: 1, long: None },
        ];
        let (d, _) = recognize(4, &edges).unwrap();
        assert_eq!(d.name(), "D4");

        // E6: branch with legs (1, 2, 2).
        let edges = vec![
            RawEdge { a: 0, b: 1, mult: 1, long: None },
            RawEdge { a: 1, b: 2, mult: 1, long: None },
            RawEdge { a: 2, b: 3, mult: 1, long: None },
            RawEdge { a: 3, b: 4, mult: 1, long: None },
            RawEdge { a: 2, b: 5, mult: 1, long: None },
        ];
        let (d, _) = recognize(6, &edges).unwrap();
        assert_eq!(d.name(), "E6");
    }

    #[test]
    fn recognize_rejects_cycles_and_forests() {
        let edges = vec![
            RawEdge { a: 0, b: 1, mult: 1, long: None },
            RawEdge { a: 1, b: 2, mult: 1, long: None },
            RawEdge { a: 2, b: 0, mult: 1, long: None },
        ];
        assert!(recognize(3, &edges).is_err());
        let edges = vec![RawEdge { a: 0, b: 1, mult: 1, long: None }];
        assert!(matches!(recognize(3, &edges), Err(Error::MalformedDiagram(_))));
    }

    #[test]
    fn parse_series_and_json() {
        let p = parse_diagram("B5").unwrap();
        assert_eq!(p.diagram.name(), "B5");
        assert!(p.marks.is_empty());

        let json = r#"{
            "nodes": ["u", "v", "w"],
            "edges": [
                {"from": "u", "to": "v"},
                {"from": "v", "to": "w", "mult": 2, "arrow": true}
            ],
            "marks": ["u"]
        }"#;
        let p = parse_diagram(json).unwrap();
        assert_eq!(p.diagram.name(), "B3");
        assert_eq!(p.marks.into_iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn marked_diagram_validation() {
        let a2 = DynkinDiagram::new(Series::A, 2).unwrap();
        assert!(MarkedDiagram::new(a2.clone(), BTreeSet::new()).is_err());
        assert!(MarkedDiagram::new(a2.clone(), [5].into_iter().collect()).is_err());
        let m = MarkedDiagram::new(a2, [0].into_iter().collect()).unwrap();
        assert_eq!(m.marks.len(), 1);
    }
}
