//! The group Z2 x Sym(n) acting on pair-indexed vectors: relabelling of
//! points composed with an optional reversal (matrix transposition).
//! Canonical forms are lexicographic minima over all `2 * n!` images.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::{pair_index, pairs, ConeVector};

/// A permutation of `{1..n}` together with a reversal bit. `perm[i-1]` is
/// the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    perm: Vec<usize>,
    reversed: bool,
}

impl GroupElement {
    pub fn new(perm: Vec<usize>, reversed: bool) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &p in &perm {
            if p == 0 || p > n || seen[p] {
                return Err(Error::InvalidIndices(format!(
                    "{perm:?} is not a permutation of 1..={n}"
                )));
            }
            seen[p] = true;
        }
        Ok(GroupElement { perm, reversed })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            perm: (1..=n).collect(),
            reversed: false,
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn reversed(&self) -> bool {
        self.reversed
    }

    pub fn image(&self, point: usize) -> usize {
        self.perm[point - 1]
    }

    /// `self` after `other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            perm: (1..=other.n()).map(|i| self.image(other.image(i))).collect(),
            reversed: self.reversed ^ other.reversed,
        }
    }

    /// Move coordinates: the result places `v(i, j)` at `(image(i), image(j))`,
    /// then transposes when the reversal bit is set.
    pub fn apply(&self, v: &ConeVector) -> ConeVector {
        let n = v.n();
        debug_assert_eq!(n, self.n());
        let mut out = ConeVector::zero(n);
        for (i, j) in pairs(n) {
            let (a, b) = if self.reversed {
                (self.image(j), self.image(i))
            } else {
                (self.image(i), self.image(j))
            };
            out.set(a, b, v.get(i, j).clone());
        }
        out
    }
}

/// Representative data for one orbit: the canonical (lex-min) form, the
/// orbit size, and optionally the adjacency and incidence numbers of a
/// member, matching the appendix record layout `(id, adj, inc, size)`.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    pub orbit_id: usize,
    pub representative: ConeVector,
    pub size: usize,
    pub adjacency: Option<usize>,
    pub incidence: Option<usize>,
}

/// All elements of Z2 x Sym(n) with precomputed coordinate-permutation
/// tables: `tables[e][src] = dst` means image coordinate `dst` takes the
/// value at `src`.
pub struct SymmetryGroup {
    n: usize,
    dim: usize,
    elements: Vec<GroupElement>,
    tables: Vec<Vec<u32>>,
}

impl SymmetryGroup {
    pub fn new(n: usize) -> Self {
        let dim = crate::exact::pair_count(n);
        let mut elements = Vec::new();
        let mut perm: Vec<usize> = (1..=n).collect();
        loop {
            for reversed in [false, true] {
                elements.push(GroupElement {
                    perm: perm.clone(),
                    reversed,
                });
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let tables = elements
            .iter()
            .map(|e| {
                let mut table = vec![0u32; dim];
                for (i, j) in pairs(n) {
                    let (a, b) = if e.reversed {
                        (e.image(j), e.image(i))
                    } else {
                        (e.image(i), e.image(j))
                    };
                    table[pair_index(n, i, j)] = pair_index(n, a, b) as u32;
                }
                table
            })
            .collect();
        SymmetryGroup {
            n,
            dim,
            elements,
            tables,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn apply_table(&self, elem: usize, row: &[i64], out: &mut [i64]) {
        for (src, &dst) in self.tables[elem].iter().enumerate() {
            out[dst as usize] = row[src];
        }
    }

    /// Lexicographically least image over the whole group, with a witness
    /// element mapping `v` onto it.
    pub fn canonical_form(&self, v: &ConeVector) -> (ConeVector, GroupElement) {
        if let Some(row) = v.as_i64s() {
            let (min, elem) = self.canonical_i64(&row);
            return (
                ConeVector::from_integers(self.n, &min).unwrap(),
                self.elements[elem].clone(),
            );
        }
        let mut best: Option<(ConeVector, usize)> = None;
        for (k, e) in self.elements.iter().enumerate() {
            let img = e.apply(v);
            if best.as_ref().is_none_or(|(b, _)| img < *b) {
                best = Some((img, k));
            }
        }
        let (vec, k) = best.unwrap();
        (vec, self.elements[k].clone())
    }

    /// Integer fast path for canonicalization.
    pub fn canonical_i64(&self, row: &[i64]) -> (Vec<i64>, usize) {
        debug_assert_eq!(row.len(), self.dim);
        let mut best = row.to_vec();
        let mut best_elem = 0;
        let mut buf = vec![0i64; self.dim];
        for (k, table) in self.tables.iter().enumerate() {
            for (src, &dst) in table.iter().enumerate() {
                buf[dst as usize] = row[src];
            }
            if buf < best {
                best.copy_from_slice(&buf);
                best_elem = k;
            }
        }
        (best, best_elem)
    }

    /// Number of distinct images of `v` under the group.
    pub fn orbit_size(&self, v: &ConeVector) -> usize {
        if let Some(row) = v.as_i64s() {
            return self.orbit_size_i64(&row);
        }
        let mut images: Vec<ConeVector> = self.elements.iter().map(|e| e.apply(v)).collect();
        images.sort();
        images.dedup();
        images.len()
    }

    pub fn orbit_size_i64(&self, row: &[i64]) -> usize {
        let mut images: Vec<Vec<i64>> = self
            .tables
            .iter()
            .map(|table| {
                let mut buf = vec![0i64; self.dim];
                for (src, &dst) in table.iter().enumerate() {
                    buf[dst as usize] = row[src];
                }
                buf
            })
            .collect();
        images.sort();
        images.dedup();
        images.len()
    }

    /// All distinct images of an integer row.
    pub fn expand_orbit_i64(&self, row: &[i64]) -> Vec<Vec<i64>> {
        let mut images: Vec<Vec<i64>> = self
            .tables
            .iter()
            .map(|table| {
                let mut buf = vec![0i64; self.dim];
                for (src, &dst) in table.iter().enumerate() {
                    buf[dst as usize] = row[src];
                }
                buf
            })
            .collect();
        images.sort();
        images.dedup();
        images
    }

    /// Partition vectors into orbits. Orbit ids follow first appearance.
    pub fn orbit_decompose(&self, vs: &[ConeVector]) -> OrbitDecomposition {
        let rows: Option<Vec<Vec<i64>>> = vs.iter().map(|v| v.as_i64s()).collect();
        match rows {
            Some(rows) => self.orbit_decompose_rows(&rows),
            None => {
                // rational fallback, same structure
                let mut registry: HashMap<ConeVector, usize> = HashMap::new();
                let mut records: Vec<OrbitRecord> = Vec::new();
                let mut orbit_of = Vec::with_capacity(vs.len());
                for v in vs {
                    let (canon, _) = self.canonical_form(v);
                    let id = *registry.entry(canon.clone()).or_insert_with(|| {
                        records.push(OrbitRecord {
                            orbit_id: records.len(),
                            representative: canon,
                            size: 0,
                            adjacency: None,
                            incidence: None,
                        });
                        records.len() - 1
                    });
                    records[id].size += 1;
                    orbit_of.push(id);
                }
                OrbitDecomposition { records, orbit_of }
            }
        }
    }

    pub fn orbit_decompose_rows(&self, rows: &[Vec<i64>]) -> OrbitDecomposition {
        let mut registry: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut records: Vec<OrbitRecord> = Vec::new();
        let mut orbit_of = Vec::with_capacity(rows.len());
        for row in rows {
            let (canon, _) = self.canonical_i64(row);
            let id = match registry.get(&canon) {
                Some(&id) => id,
                None => {
                    let id = records.len();
                    records.push(OrbitRecord {
                        orbit_id: id,
                        representative: ConeVector::from_integers(self.n, &canon).unwrap(),
                        size: 0,
                        adjacency: None,
                        incidence: None,
                    });
                    registry.insert(canon, id);
                    id
                }
            };
            records[id].size += 1;
            orbit_of.push(id);
        }
        OrbitDecomposition { records, orbit_of }
    }
}

pub struct OrbitDecomposition {
    pub records: Vec<OrbitRecord>,
    pub orbit_of: Vec<usize>,
}

impl OrbitDecomposition {
    pub fn orbit_count(&self) -> usize {
        self.records.len()
    }

    pub fn total(&self) -> usize {
        self.records.iter().map(|r| r.size).sum()
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ConeVector;

    fn conevec(n: usize, coords: &[i64]) -> ConeVector {
        ConeVector::from_integers(n, coords).unwrap()
    }

    #[test]
    fn group_order_and_identity() {
        let g3 = SymmetryGroup::new(3);
        assert_eq!(g3.order(), 12);
        let id = GroupElement::identity(3);
        let v = conevec(3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(id.apply(&v), v);
    }

    #[test]
    fn reversal_of_cut_is_complement_cut() {
        // delta'({1}) reversed = delta'({2,3})
        let rev = GroupElement::new(vec![1, 2, 3], true).unwrap();
        let cut1 = conevec(3, &[1, 1, 0, 0, 0, 0]);
        assert_eq!(rev.apply(&cut1), conevec(3, &[0, 0, 1, 0, 1, 0]));
    }

    #[test]
    fn action_composition_law() {
        let g = GroupElement::new(vec![2, 3, 1], true).unwrap();
        let h = GroupElement::new(vec![3, 2, 1], false).unwrap();
        let v = conevec(3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(g.apply(&h.apply(&v)), g.compose(&h).apply(&v));
    }

    #[test]
    fn canonical_form_constant_on_orbits() {
        let group = SymmetryGroup::new(3);
        let cut2 = conevec(3, &[0, 0, 1, 1, 0, 0]); // delta'({2})
        let cut3 = conevec(3, &[0, 0, 0, 0, 1, 1]); // delta'({3})
        let (c2, _) = group.canonical_form(&cut2);
        let (c3, _) = group.canonical_form(&cut3);
        assert_eq!(c2, c3);
        // reversal image shares the canonical form
        let cut1 = conevec(3, &[1, 1, 0, 0, 0, 0]);
        let (a, _) = group.canonical_form(&cut1);
        let (b, _) = group.canonical_form(&cut1.transposed());
        assert_eq!(a, b);
        // idempotence, and the witness really maps onto the canonical form
        let (canon, witness) = group.canonical_form(&cut1);
        assert_eq!(group.canonical_form(&canon).0, canon);
        assert_eq!(witness.apply(&cut1), canon);
    }

    #[test]
    fn orbit_sizes_multiply_with_stabilizer() {
        let group = SymmetryGroup::new(3);
        let cut1 = conevec(3, &[1, 1, 0, 0, 0, 0]);
        let size = group.orbit_size(&cut1);
        assert_eq!(size, 6);
        let stab = group
            .elements()
            .iter()
            .filter(|e| e.apply(&cut1) == cut1)
            .count();
        assert_eq!(size * stab, group.order());
    }
}
