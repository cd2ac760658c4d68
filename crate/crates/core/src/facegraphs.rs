//! Skeleton and ridge graphs of the cones: node adjacency by exact rank
//! tests with a combinatorial prefilter, orbit-wise representation
//! matrices, diameters, and clique/domination reports. Small graphs are
//! materialized in full; an orbit-row path covers the large skeletons.

use num_traits::Signed;
use rayon::prelude::*;

use crate::bits::BitRow;
use crate::dualdesc::{incidence, IncidenceSet};
use crate::error::{Error, Result};
use crate::exact::{pair_count, ConeVector, IntRankBasis};
use crate::generators::ConeDescription;
use crate::symmetry::{OrbitRecord, SymmetryGroup};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphKind {
    /// Nodes are extreme rays, partner vectors are the facet normals.
    Skeleton,
    /// Nodes are facets, partner vectors are the extreme rays.
    Ridge,
}

/// A fully materialized face graph with its orbit partition.
pub struct FaceGraph {
    pub kind: GraphKind,
    pub n: usize,
    pub nodes: Vec<ConeVector>,
    pub incidence: Vec<IncidenceSet>,
    pub orbit_of: Vec<usize>,
    pub orbits: Vec<OrbitRecord>,
    adj: Vec<BitRow>,
}

/// Adjacency of two nodes given their incidence sets over the partner
/// family: exact rank test on the commonly incident partner vectors, with
/// the cardinality bound and the third-node witness scan as prefilters.
fn adjacent_by_rank(
    inc_a: &BitRow,
    inc_b: &BitRow,
    partner_rows: &[Vec<i64>],
    dim: usize,
) -> bool {
    if BitRow::and_count(inc_a, inc_b) + 2 < dim {
        return false;
    }
    let common = BitRow::and(inc_a, inc_b);
    let mut basis = IntRankBasis::new(dim);
    for i in common.iter_ones() {
        if basis.insert_i64(&partner_rows[i]) && basis.rank() + 2 == dim {
            return true;
        }
    }
    false
}

/// The witness form of the adjacency test: a third node whose incidence
/// contains the intersection rules the pair out. Exact when `all_inc`
/// covers every extreme ray (or facet) of the cone.
fn witness_rejects(all_inc: &[IncidenceSet], a: usize, b: usize) -> bool {
    let (ia, ib) = (all_inc[a].bits(), all_inc[b].bits());
    all_inc
        .iter()
        .enumerate()
        .any(|(k, inc)| k != a && k != b && inc.bits().contains_and(ia, ib))
}

/// Two extreme rays span a two-dimensional face: the normals incident to
/// both have rank `dim - 2`.
pub fn rays_adjacent(r1: &ConeVector, r2: &ConeVector, h: &ConeDescription) -> Result<bool> {
    let hrep = h.hrep()?;
    let rows = crate::dualdesc::primitive_rows(hrep)?;
    let inc1 = incidence(r1, hrep)?;
    let inc2 = incidence(r2, hrep)?;
    if r1.primitive_normalized()? == r2.primitive_normalized()? {
        return Ok(false);
    }
    Ok(adjacent_by_rank(inc1.bits(), inc2.bits(), &rows, h.dim()))
}

/// Two facets intersect in codimension 2: the rays incident to both have
/// rank `dim - 2`.
pub fn facets_adjacent(f1: &ConeVector, f2: &ConeVector, v: &ConeDescription) -> Result<bool> {
    let vrep = v.vrep()?;
    let rows = crate::dualdesc::primitive_rows(vrep)?;
    let inc1 = incidence(f1, vrep)?;
    let inc2 = incidence(f2, vrep)?;
    if f1.primitive_normalized()? == f2.primitive_normalized()? {
        return Ok(false);
    }
    Ok(adjacent_by_rank(inc1.bits(), inc2.bits(), &rows, v.dim()))
}

/// Build the full graph on `nodes` against the partner family. Every node
/// must be extreme (skeleton) or facet-defining (ridge) for the partner
/// description; a node failing its rank test is reported as an error.
pub fn build_graph(
    kind: GraphKind,
    nodes: &[ConeVector],
    partner: &[ConeVector],
    n: usize,
) -> Result<FaceGraph> {
    let dim = pair_count(n);
    let partner_rows = crate::dualdesc::primitive_rows(partner)?;

    let mut incidences = Vec::with_capacity(nodes.len());
    for (idx, node) in nodes.iter().enumerate() {
        let inc = incidence(node, partner)?;
        // extremality / facethood of the node w.r.t. the partner family
        let mut basis = IntRankBasis::new(dim);
        let mut extreme = false;
        for i in inc.iter() {
            if basis.insert_i64(&partner_rows[i]) && basis.rank() == dim - 1 {
                extreme = true;
                break;
            }
        }
        if !extreme {
            return Err(Error::Violated {
                vector: format!("{kind:?} node"),
                constraint: "rank dim-1 incidence".into(),
                index: idx,
            });
        }
        for (i, p) in partner.iter().enumerate() {
            if node.dot(p)?.is_negative() {
                return Err(Error::Violated {
                    vector: format!("{kind:?} node"),
                    constraint: "partner sign".into(),
                    index: i,
                });
            }
        }
        incidences.push(inc);
    }

    let m = nodes.len();
    let adj_pairs: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut row = Vec::new();
            for b in a + 1..m {
                if witness_rejects(&incidences, a, b) {
                    continue;
                }
                if adjacent_by_rank(
                    incidences[a].bits(),
                    incidences[b].bits(),
                    &partner_rows,
                    dim,
                ) {
                    row.push(b);
                }
            }
            row
        })
        .collect();
    let mut adj = vec![BitRow::zeros(m); m];
    for (a, row) in adj_pairs.iter().enumerate() {
        for &b in row {
            adj[a].set(b);
            adj[b].set(a);
        }
    }

    let group = SymmetryGroup::new(n);
    let dec = group.orbit_decompose(nodes);
    let mut orbits = dec.records;
    // attach the representative's adjacency and incidence counts
    for rec in &mut orbits {
        let rep_idx = dec
            .orbit_of
            .iter()
            .position(|&o| o == rec.orbit_id)
            .expect("orbit has a member");
        rec.adjacency = Some(adj[rep_idx].count_ones());
        rec.incidence = Some(incidences[rep_idx].cardinality());
    }

    Ok(FaceGraph {
        kind,
        n,
        nodes: nodes.to_vec(),
        incidence: incidences,
        orbit_of: dec.orbit_of,
        orbits,
        adj,
    })
}

impl FaceGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].get(b)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].count_ones()
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[a].iter_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitRow::count_ones).sum::<usize>() / 2
    }

    fn rep_index(&self, orbit: usize) -> usize {
        self.orbit_of
            .iter()
            .position(|&o| o == orbit)
            .expect("orbit has a member")
    }

    /// Eccentricity of one node by breadth-first search.
    fn eccentricity(&self, start: usize) -> Result<usize> {
        let m = self.node_count();
        let mut dist = vec![usize::MAX; m];
        dist[start] = 0;
        let mut frontier = vec![start];
        let mut ecc = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.adj[u].iter_ones() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        ecc = dist[v];
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        if dist.iter().any(|&d| d == usize::MAX) {
            return Err(Error::Disconnected);
        }
        Ok(ecc)
    }

    /// Graph diameter as the maximum eccentricity over one representative
    /// per orbit (exact by vertex-transitivity within orbits).
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for orbit in 0..self.orbits.len() {
            best = best.max(self.eccentricity(self.rep_index(orbit))?);
        }
        Ok(best)
    }
}

/// Orbit-indexed adjacency counts from a fixed representative per orbit,
/// with the Adj / Inc / Size columns of the published tables.
#[derive(Clone, Debug)]
pub struct RepresentationMatrix {
    pub entries: Vec<Vec<usize>>,
    pub adjacency: Vec<usize>,
    pub incidence: Vec<usize>,
    pub size: Vec<usize>,
    pub representatives: Vec<ConeVector>,
}

impl RepresentationMatrix {
    pub fn orbit_count(&self) -> usize {
        self.entries.len()
    }

    /// The double-counting identity `size_i * M[i][j] == size_j * M[j][i]`.
    pub fn double_counting_holds(&self) -> bool {
        let k = self.orbit_count();
        (0..k).all(|i| {
            (0..k).all(|j| self.size[i] * self.entries[i][j] == self.size[j] * self.entries[j][i])
        })
    }
}

pub fn representation_matrix(g: &FaceGraph) -> RepresentationMatrix {
    let k = g.orbits.len();
    let mut entries = vec![vec![0usize; k]; k];
    let mut adjacency = vec![0usize; k];
    let mut incidence_col = vec![0usize; k];
    for orbit in 0..k {
        let rep = g.rep_index(orbit);
        for nb in g.adj[rep].iter_ones() {
            entries[orbit][g.orbit_of[nb]] += 1;
        }
        adjacency[orbit] = g.degree(rep);
        incidence_col[orbit] = g.incidence[rep].cardinality();
    }
    RepresentationMatrix {
        entries,
        adjacency,
        incidence: incidence_col,
        size: g.orbits.iter().map(|o| o.size).collect(),
        representatives: g.orbits.iter().map(|o| o.representative.clone()).collect(),
    }
}

/// Clique and domination report for a candidate node set.
#[derive(Debug)]
pub struct DominationReport {
    pub is_clique: bool,
    pub is_dominating: bool,
    pub non_clique_pairs: Vec<(usize, usize)>,
    pub non_dominated: Vec<usize>,
}

pub fn dominating_clique_check(g: &FaceGraph, candidate: &[usize]) -> DominationReport {
    let mut non_clique_pairs = Vec::new();
    for (k, &a) in candidate.iter().enumerate() {
        for &b in &candidate[k + 1..] {
            if !g.are_adjacent(a, b) {
                non_clique_pairs.push((a, b));
            }
        }
    }
    let in_candidate: std::collections::HashSet<usize> = candidate.iter().copied().collect();
    let mut non_dominated = Vec::new();
    for u in 0..g.node_count() {
        if in_candidate.contains(&u) {
            continue;
        }
        if !candidate.iter().any(|&c| g.are_adjacent(u, c)) {
            non_dominated.push(u);
        }
    }
    DominationReport {
        is_clique: non_clique_pairs.is_empty(),
        is_dominating: !candidate.is_empty() && non_dominated.is_empty(),
        non_clique_pairs,
        non_dominated,
    }
}

/// The skeleton of OMCUT_n (nodes in ordered-partition enumeration order)
/// against its full facet list: direct facet enumeration up to n = 4, the
/// adjacency decomposition expanded over the symmetry group beyond that.
pub fn omcut_skeleton(
    n: usize,
) -> Result<(FaceGraph, Vec<crate::generators::OrderedPartition>)> {
    let parts = crate::generators::ordered_partitions(n)?;
    let nodes: Vec<ConeVector> = parts
        .iter()
        .map(crate::generators::multicut_vector)
        .collect();
    let v = ConeDescription::from_vrep(n, nodes.clone())?;
    let facets = if n <= 4 {
        crate::dualdesc::facet_enumeration(&v)?.facets
    } else {
        let seed = crate::generators::nn_inequality(n, 1, 2)?;
        let ad = crate::dualdesc::adjacency_decomposition(
            &v,
            &seed,
            &crate::dualdesc::AdjDecompOptions::default(),
        )?;
        let group = SymmetryGroup::new(n);
        let mut all = Vec::new();
        for o in &ad.orbits {
            for img in group.expand_orbit_i64(&o.representative.primitive_i64s()?) {
                all.push(ConeVector::from_integers(n, &img)?);
            }
        }
        all
    };
    let skel = build_graph(GraphKind::Skeleton, &nodes, &facets, n)?;
    Ok((skel, parts))
}

/// Rank-test adjacency of two nodes from precomputed incidences; exposed
/// so the two adjacency routes can be cross-validated.
pub fn pair_adjacent_rank(
    incs: &[IncidenceSet],
    partner: &[ConeVector],
    dim: usize,
    a: usize,
    b: usize,
) -> Result<bool> {
    let rows = crate::dualdesc::primitive_rows(partner)?;
    Ok(adjacent_by_rank(incs[a].bits(), incs[b].bits(), &rows, dim))
}

/// Combinatorial adjacency: no third node's incidence contains the pair's
/// common incidence. Exact when `incs` covers every node of the cone.
pub fn pair_adjacent_combinatorial(incs: &[IncidenceSet], a: usize, b: usize) -> bool {
    !witness_rejects(incs, a, b)
}

/// Skeleton analysis for node counts too large to materialize the full
/// graph object: per-orbit representative rows (enough for every published
/// table column) and, on request, the diameter from adjacency lists built
/// in one parallel sweep.
pub struct LargeSkeleton {
    pub orbits: Vec<OrbitRecord>,
    pub orbit_of: Vec<usize>,
    pub rep_rows: Vec<Vec<usize>>,
    pub diameter: Option<usize>,
}

pub fn analyze_large_skeleton(
    nodes: &[ConeVector],
    partner: &[ConeVector],
    n: usize,
    want_diameter: bool,
) -> Result<LargeSkeleton> {
    let dim = pair_count(n);
    let node_rows = crate::dualdesc::primitive_rows(nodes)?;
    let partner_rows = crate::dualdesc::primitive_rows(partner)?;

    let incs: Vec<BitRow> = node_rows
        .par_iter()
        .map(|node| {
            let mut bits = BitRow::zeros(partner_rows.len());
            for (i, p) in partner_rows.iter().enumerate() {
                let dot: i128 = node
                    .iter()
                    .zip(p)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum();
                if dot == 0 {
                    bits.set(i);
                }
            }
            bits
        })
        .collect();

    let group = SymmetryGroup::new(n);
    let dec = group.orbit_decompose(nodes);
    let k = dec.records.len();

    let rep_indices: Vec<usize> = (0..k)
        .map(|orbit| {
            dec.orbit_of
                .iter()
                .position(|&o| o == orbit)
                .expect("orbit has a member")
        })
        .collect();

    let rep_rows: Vec<Vec<usize>> = rep_indices
        .par_iter()
        .map(|&rep| {
            let mut row = vec![0usize; k];
            for b in 0..nodes.len() {
                if b == rep {
                    continue;
                }
                if adjacent_by_rank(&incs[rep], &incs[b], &partner_rows, dim) {
                    row[dec.orbit_of[b]] += 1;
                }
            }
            row
        })
        .collect();

    let mut orbits = dec.records;
    for (orbit, rec) in orbits.iter_mut().enumerate() {
        rec.adjacency = Some(rep_rows[orbit].iter().sum());
        rec.incidence = Some(incs[rep_indices[orbit]].count_ones());
    }

    let diameter = if want_diameter {
        Some(large_diameter(
            &incs,
            &partner_rows,
            dim,
            &rep_indices,
        )?)
    } else {
        None
    };

    Ok(LargeSkeleton {
        orbits,
        orbit_of: dec.orbit_of,
        rep_rows,
        diameter,
    })
}

/// Diameter of a large skeleton: adjacency lists from one parallel
/// all-pairs sweep, then one breadth-first search per orbit representative.
fn large_diameter(
    incs: &[BitRow],
    partner_rows: &[Vec<i64>],
    dim: usize,
    rep_indices: &[usize],
) -> Result<usize> {
    let m = incs.len();
    let lists: Vec<Vec<u32>> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut row = Vec::new();
            for b in a + 1..m {
                if adjacent_by_rank(&incs[a], &incs[b], partner_rows, dim) {
                    row.push(b as u32);
                }
            }
            row
        })
        .collect();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); m];
    for (a, row) in lists.into_iter().enumerate() {
        for b in row {
            adj[a].push(b);
            adj[b as usize].push(a as u32);
        }
    }
    let mut best = 0;
    for &start in rep_indices {
        let mut dist = vec![u32::MAX; m];
        dist[start] = 0;
        let mut frontier = vec![start as u32];
        let mut ecc = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                for &v in &adj[u as usize] {
                    if dist[v as usize] == u32::MAX {
                        dist[v as usize] = dist[u as usize] + 1;
                        ecc = dist[v as usize];
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        if dist.iter().any(|&d| d == u32::MAX) {
            return Err(Error::Disconnected);
        }
        best = best.max(ecc as usize);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualdesc::{double_description, facet_enumeration};
    use crate::generators::{nn_inequality, omcut_vrep, ot_inequality, qmet_hrep};

    #[test]
    fn omcut3_graphs_match_reference_counts() {
        let h = qmet_hrep(3).unwrap();
        let rays = double_description(&h).unwrap();
        let skel = build_graph(
            GraphKind::Skeleton,
            &rays.rays,
            h.hrep().unwrap(),
            3,
        )
        .unwrap();
        assert_eq!(skel.node_count(), 12);
        assert_eq!(skel.orbits.len(), 2);
        assert_eq!(skel.diameter().unwrap(), 2);
        let m = representation_matrix(&skel);
        assert!(m.double_counting_holds());

        let ridge = build_graph(
            GraphKind::Ridge,
            h.hrep().unwrap(),
            &rays.rays,
            3,
        )
        .unwrap();
        assert_eq!(ridge.diameter().unwrap(), 2);
        // OT_{12,3} and NN_{12} conflict at coordinate (1,2): non-adjacent
        let v = rays.description();
        let ot = ot_inequality(3, 1, 2, 3).unwrap();
        let nn = nn_inequality(3, 1, 2).unwrap();
        assert!(!facets_adjacent(&ot, &nn, &v).unwrap());
        let nn21 = nn_inequality(3, 2, 1).unwrap();
        assert!(facets_adjacent(&ot, &nn21, &v).unwrap());
    }

    #[test]
    fn a_node_is_not_adjacent_to_itself() {
        let h = qmet_hrep(3).unwrap();
        let rays = double_description(&h).unwrap();
        let r = &rays.rays[0];
        assert!(!rays_adjacent(r, r, &rays.description()).unwrap());
    }

    #[test]
    fn large_path_agrees_with_full_graph_on_omcut4() {
        let v = omcut_vrep(4).unwrap();
        let facets = facet_enumeration(&v).unwrap();
        let skel = build_graph(
            GraphKind::Skeleton,
            v.vrep().unwrap(),
            &facets.facets,
            4,
        )
        .unwrap();
        let large =
            analyze_large_skeleton(v.vrep().unwrap(), &facets.facets, 4, true).unwrap();
        assert_eq!(large.diameter, Some(skel.diameter().unwrap()));
        let m = representation_matrix(&skel);
        // identical orbit stats on both paths
        let mut full: Vec<(usize, usize, usize)> = (0..m.orbit_count())
            .map(|i| (m.adjacency[i], m.incidence[i], m.size[i]))
            .collect();
        let mut large_stats: Vec<(usize, usize, usize)> = large
            .orbits
            .iter()
            .map(|o| (o.adjacency.unwrap(), o.incidence.unwrap(), o.size))
            .collect();
        full.sort();
        large_stats.sort();
        assert_eq!(full, large_stats);
    }
}
