//! Orbit-type classification. Marking nodes of a Dynkin diagram selects a
//! coadjoint orbit; the isotropy subgroup of a point on the orbit is read off
//! the diagram by deleting the marked nodes: a central torus `U(1)^m` (one
//! factor per mark) times the semisimple subgroup generated by the surviving
//! nodes. The orbit is the quotient, of dimension `dim G − dim H`.

use serde::Serialize;

use crate::error::Result;
use crate::lie::diagram::{recognize, MarkedDiagram, RawEdge};
use crate::lie::roots::RootSystem;

/// The classification of one marked diagram.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitType {
    /// Canonical name of the ambient simple algebra, e.g. `"B5"`.
    pub algebra: String,
    pub marks: Vec<usize>,
    pub dim_group: usize,
    /// Rank of the central torus of the isotropy group (= number of marks).
    pub torus_rank: usize,
    /// Canonical names of the simple factors of the isotropy group, ordered
    /// by their smallest node in the ambient diagram.
    pub isotropy_factors: Vec<String>,
    pub dim_isotropy: usize,
    pub dim_orbit: usize,
}

impl OrbitType {
    /// Render the isotropy group, e.g. `"U(1)^2 × A1 × B2"`.
    pub fn isotropy_name(&self) -> String {
        let mut parts = Vec::new();
        match self.torus_rank {
            0 => {}
            1 => parts.push("U(1)".to_string()),
            m => parts.push(format!("U(1)^{m}")),
        }
        parts.extend(self.isotropy_factors.iter().cloned());
        if parts.is_empty() {
            "trivial".to_string()
        } else {
            parts.join(" × ")
        }
    }
}

/// Classify the orbit selected by a marked diagram.
pub fn classify(marked: &MarkedDiagram) -> Result<OrbitType> {
    let diagram = &marked.diagram;
    let n = diagram.rank;
    let dim_group = RootSystem::new(diagram).dim();

    let survivors: Vec<usize> = (0..n).filter(|i| !marked.marks.contains(i)).collect();
    let local: Vec<Option<usize>> = {
        let mut l = vec![None; n];
        for (k, &v) in survivors.iter().enumerate() {
            l[v] = Some(k);
        }
        l
    };
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); survivors.len()];
    let mut surviving_bonds = Vec::new();
    for (a, b, mult, long) in diagram.bonds() {
        if let (Some(la), Some(lb)) = (local[a], local[b]) {
            adj[la].push(lb);
            adj[lb].push(la);
            surviving_bonds.push((la, lb, mult, long.map(|l| local[l].unwrap())));
        }
    }

    // Connected components of the surviving sub-diagram, by BFS from the
    // smallest unvisited node (deterministic order).
    let mut comp_of = vec![usize::MAX; survivors.len()];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..survivors.len() {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        comp_of[start] = id;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &w in &adj[v] {
                if comp_of[w] == usize::MAX {
                    comp_of[w] = id;
                    members.push(w);
                    queue.push(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }

    let mut isotropy_factors = Vec::new();
    let mut dim_semisimple = 0;
    for members in &components {
        let pos: Vec<Option<usize>> = {
            let mut p = vec![None; survivors.len()];
            for (k, &v) in members.iter().enumerate() {
                p[v] = Some(k);
            }
            p
        };
        let edges: Vec<RawEdge> = surviving_bonds
            .iter()
            .filter(|(a, _, _, _)| comp_of[*a] == comp_of[members[0]])
            .map(|&(a, b, mult, long)| RawEdge {
                a: pos[a].unwrap(),
                b: pos[b].unwrap(),
                mult,
                long: long.map(|l| pos[l].unwrap()),
            })
            .collect();
        let (d, _) = recognize(members.len(), &edges)?;
        dim_semisimple += RootSystem::new(&d).dim();
        isotropy_factors.push(d.name());
    }

    let torus_rank = marked.marks.len();
    let dim_isotropy = torus_rank + dim_semisimple;
    Ok(OrbitType {
        algebra: diagram.name(),
        marks: marked.marks.iter().copied().collect(),
        dim_group,
        torus_rank,
        isotropy_factors,
        dim_isotropy,
        dim_orbit: dim_group - dim_isotropy,
    })
}
