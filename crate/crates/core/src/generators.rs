//! Generator and inequality families: ordered partitions and their oriented
//! multicuts, oriented cuts, the OT/NN systems, the cycle families A_n and
//! B_n, hypermetric inequalities H(b), zero-extensions and symmetric lifts,
//! plus the assembled cone descriptions QMET_n / OMCUT_n / OCUT_n / QHYP_n.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{pair_count, pairs, sym_pairs, ConeVector, Rational, SymVector};

/// An ordered partition of `{1..n}` into disjoint nonempty blocks. Block
/// order is significant; elements inside a block are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrderedPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidIndices("empty block".into()));
            }
            for &p in block {
                if p == 0 || p > n || seen[p] {
                    return Err(Error::InvalidIndices(format!(
                        "blocks {blocks:?} do not partition 1..={n}"
                    )));
                }
                seen[p] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidIndices(format!(
                "blocks {blocks:?} do not cover 1..={n}"
            )));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(OrderedPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing `point`.
    pub fn block_of(&self, point: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&point).is_ok())
            .expect("point covered by partition")
    }

    /// Reversed block order; the multicut of the result is the transpose.
    pub fn reversed(&self) -> OrderedPartition {
        let mut blocks = self.blocks.clone();
        blocks.reverse();
        OrderedPartition { n: self.n, blocks }
    }

    /// Proper refinement respecting block order: `other` is obtained by
    /// merging consecutive runs of `self`'s blocks, and `self != other`.
    pub fn properly_refines(&self, other: &OrderedPartition) -> bool {
        if self.n != other.n || self.q() <= other.q() {
            return false;
        }
        let mut mine = self.blocks.iter();
        for target in &other.blocks {
            let mut acc: Vec<usize> = Vec::with_capacity(target.len());
            while acc.len() < target.len() {
                match mine.next() {
                    Some(b) => acc.extend(b.iter().copied()),
                    None => return false,
                }
            }
            acc.sort_unstable();
            if acc != *target {
                return false;
            }
        }
        mine.next().is_none()
    }

    /// Refinement where additionally every block of `self` is a proper
    /// subset of a block of `other`.
    pub fn dotted_refines(&self, other: &OrderedPartition) -> bool {
        if !self.properly_refines(other) {
            return false;
        }
        self.blocks.iter().all(|b| {
            let host = &other.blocks[other.block_of(b[0])];
            b.len() < host.len()
        })
    }

    pub fn cyclic_shifts(&self) -> Vec<OrderedPartition> {
        let q = self.q();
        (0..q)
            .map(|s| {
                let blocks = (0..q).map(|k| self.blocks[(k + s) % q].clone()).collect();
                OrderedPartition { n: self.n, blocks }
            })
            .collect()
    }
}

/// All ordered partitions of `{1..n}` with at least two blocks, i.e. the
/// partitions whose multicuts are nonzero. There are `p'(n) - 1` of them.
pub fn ordered_partitions(n: usize) -> Result<Vec<OrderedPartition>> {
    if !(2..=8).contains(&n) {
        return Err(Error::OutOfRange { n, min: 2, max: 8 });
    }
    let full: u32 = (1 << n) - 1;
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(n: usize, remaining: u32, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedPartition>) {
        if remaining == 0 {
            if blocks.len() >= 2 {
                out.push(OrderedPartition {
                    n,
                    blocks: blocks.clone(),
                });
            }
            return;
        }
        // nonempty submasks of `remaining`, in increasing numeric order
        let mut sub = remaining;
        let mut subs = Vec::new();
        loop {
            subs.push(sub);
            sub = (sub - 1) & remaining;
            if sub == 0 {
                break;
            }
        }
        for &mask in subs.iter().rev() {
            blocks.push((1..=n).filter(|&p| mask >> (p - 1) & 1 == 1).collect());
            rec(n, remaining & !mask, blocks, out);
            blocks.pop();
        }
    }
    rec(n, full, &mut blocks, &mut out);
    Ok(out)
}

/// The oriented multicut `delta'(S_1, .., S_q)`: 1 from an earlier block to
/// a later one, 0 otherwise.
pub fn multicut_vector(p: &OrderedPartition) -> ConeVector {
    let n = p.n();
    let mut rank = vec![0usize; n + 1];
    for (k, block) in p.blocks().iter().enumerate() {
        for &point in block {
            rank[point] = k;
        }
    }
    let mut out = ConeVector::zero(n);
    for (i, j) in pairs(n) {
        if rank[i] < rank[j] {
            out.add_at(i, j, 1);
        }
    }
    out
}

/// The oriented cut `delta'(S)` on `n` points.
pub fn oriented_cut_vector(n: usize, s: &[usize]) -> Result<ConeVector> {
    let mut in_s = vec![false; n + 1];
    for &p in s {
        if p == 0 || p > n || in_s[p] {
            return Err(Error::InvalidIndices(format!("bad subset {s:?}")));
        }
        in_s[p] = true;
    }
    let complement: Vec<usize> = (1..=n).filter(|&p| !in_s[p]).collect();
    if s.is_empty() || complement.is_empty() {
        return Err(Error::ZeroVector);
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    Ok(multicut_vector(&OrderedPartition::new(
        n,
        vec![sorted, complement],
    )?))
}

/// The oriented triangle inequality `OT_{ij,k}: d_ik + d_kj - d_ij >= 0`.
pub fn ot_inequality(n: usize, i: usize, j: usize, k: usize) -> Result<ConeVector> {
    if i == j || i == k || j == k {
        return Err(Error::InvalidIndices(format!("OT indices {i},{j},{k}")));
    }
    for &p in &[i, j, k] {
        if p == 0 || p > n {
            return Err(Error::InvalidIndices(format!("point {p} not in 1..={n}")));
        }
    }
    let mut f = ConeVector::zero(n);
    f.add_at(i, k, 1);
    f.add_at(k, j, 1);
    f.add_at(i, j, -1);
    Ok(f)
}

/// The non-negativity inequality `NN_{ij}: d_ij >= 0`.
pub fn nn_inequality(n: usize, i: usize, j: usize) -> Result<ConeVector> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidIndices(format!("NN indices {i},{j}")));
    }
    let mut f = ConeVector::zero(n);
    f.add_at(i, j, 1);
    Ok(f)
}

fn check_cycle_cover(n: usize, cycle: &[usize], a: usize, b: usize) -> Result<()> {
    if cycle.len() + 2 != n {
        return Err(Error::InvalidIndices(format!(
            "cycle {cycle:?} with endpoints {a},{b} must cover 1..={n}"
        )));
    }
    let mut seen = vec![false; n + 1];
    for &p in cycle.iter().chain([a, b].iter()) {
        if p == 0 || p > n || seen[p] {
            return Err(Error::InvalidIndices(format!(
                "cycle {cycle:?} with endpoints {a},{b} must cover 1..={n}"
            )));
        }
        seen[p] = true;
    }
    Ok(())
}

fn subtract_cycle_edges(f: &mut ConeVector, cycle: &[usize]) {
    // sum of distances along the oriented cycle c_1 -> c_2 -> .. -> c_1;
    // a single vertex contributes nothing, two vertices give both arcs
    let len = cycle.len();
    if len < 2 {
        return;
    }
    for idx in 0..len {
        f.add_at(cycle[idx], cycle[(idx + 1) % len], -1);
    }
}

/// The cycle inequality `A_n(c_1..c_{n-2}; a, b)`, stored as the normal of
/// `LHS - RHS >= 0` with every `d_ba` term of the sum kept inside it, so the
/// `(b, a)` coordinate ends up with coefficient `n - 3`.
pub fn a_inequality(n: usize, cycle: &[usize], a: usize, b: usize) -> Result<ConeVector> {
    check_cycle_cover(n, cycle, a, b)?;
    let mut f = ConeVector::zero(n);
    for &c in cycle {
        f.add_at(a, c, 1);
        f.add_at(c, b, 1);
    }
    f.add_at(b, a, (n as i64) - 2);
    // right-hand side: the two-cycle sum S_ab plus the cycle sum
    f.add_at(a, b, -1);
    f.add_at(b, a, -1);
    subtract_cycle_edges(&mut f, cycle);
    Ok(f)
}

/// The cycle inequality `B_n(c_1..c_{n-2}; a, b)`.
pub fn b_inequality(n: usize, cycle: &[usize], a: usize, b: usize) -> Result<ConeVector> {
    check_cycle_cover(n, cycle, a, b)?;
    let mut f = ConeVector::zero(n);
    for &c in cycle {
        f.add_at(c, a, 1);
        f.add_at(a, c, 1);
        f.add_at(c, b, 1);
    }
    f.add_at(a, b, -1);
    subtract_cycle_edges(&mut f, cycle);
    Ok(f)
}

/// The hypermetric inequality `H(b): sum b_i b_j d_ij <= 0`, stored negated
/// so the usual `dot >= 0` convention applies. Requires `sum b_i = 1`.
pub fn hypermetric_inequality(n: usize, b: &[i64]) -> Result<ConeVector> {
    if b.len() != n {
        return Err(Error::DimensionMismatch(b.len(), n));
    }
    if b.iter().sum::<i64>() != 1 {
        return Err(Error::InvalidIndices(format!(
            "hypermetric parameter {b:?} must sum to 1"
        )));
    }
    let mut f = ConeVector::zero(n);
    for (i, j) in pairs(n) {
        f.add_at(i, j, -b[i - 1] * b[j - 1]);
    }
    Ok(f)
}

/// Embed an inequality on `n` points into `n + 1` points with zero
/// coefficients on every pair touching the new point.
pub fn zero_extension(f: &ConeVector) -> ConeVector {
    let n = f.n();
    let mut out = ConeVector::zero(n + 1);
    for (i, j) in pairs(n) {
        out.set(i, j, f.get(i, j).clone());
    }
    out
}

/// Lift a vector indexed by unordered pairs to the transpose-invariant
/// vector with the same coefficient on both orders.
pub fn symmetric_lift(sym: &SymVector) -> ConeVector {
    let n = sym.n();
    let mut out = ConeVector::zero(n);
    for (i, j) in sym_pairs(n) {
        out.set(i, j, sym.get(i, j).clone());
        out.set(j, i, sym.get(i, j).clone());
    }
    out
}

/// The cut semimetric `delta(S)` over unordered pairs.
pub fn cut_semimetric(n: usize, s: &[usize]) -> Result<SymVector> {
    let mut in_s = vec![false; n + 1];
    for &p in s {
        if p == 0 || p > n || in_s[p] {
            return Err(Error::InvalidIndices(format!("bad subset {s:?}")));
        }
        in_s[p] = true;
    }
    let mut out = SymVector::zero(n);
    for (i, j) in sym_pairs(n) {
        if in_s[i] != in_s[j] {
            out.set(i, j, Rational::from_integer(BigInt::from(1)));
        }
    }
    Ok(out)
}

/// All nonzero cut semimetrics on `n` points (one per unordered split),
/// `2^{n-1} - 1` of them; the side containing point 1 identifies the cut.
pub fn cut_semimetrics(n: usize) -> Vec<SymVector> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let s: Vec<usize> = std::iter::once(1)
            .chain((2..=n).filter(|&p| mask >> (p - 2) & 1 == 1))
            .collect();
        if s.len() < n {
            out.push(cut_semimetric(n, &s).unwrap());
        }
    }
    out
}

/// An H-representation (inequalities, meaning `dot(f, x) >= 0`) and/or a
/// V-representation (extreme-ray generators) of a cone in `R^{n(n-1)}`.
/// All stored vectors are primitive-normalized.
#[derive(Clone, Debug)]
pub struct ConeDescription {
    n: usize,
    hrep: Option<Vec<ConeVector>>,
    vrep: Option<Vec<ConeVector>>,
}

impl ConeDescription {
    pub fn new(
        n: usize,
        hrep: Option<Vec<ConeVector>>,
        vrep: Option<Vec<ConeVector>>,
    ) -> Result<Self> {
        let normalize = |vs: Vec<ConeVector>| -> Result<Vec<ConeVector>> {
            vs.into_iter()
                .map(|v| {
                    if v.n() != n {
                        return Err(Error::DimensionMismatch(v.n(), n));
                    }
                    v.primitive_normalized()
                })
                .collect()
        };
        Ok(ConeDescription {
            n,
            hrep: hrep.map(normalize).transpose()?,
            vrep: vrep.map(normalize).transpose()?,
        })
    }

    pub fn from_hrep(n: usize, hrep: Vec<ConeVector>) -> Result<Self> {
        Self::new(n, Some(hrep), None)
    }

    pub fn from_vrep(n: usize, vrep: Vec<ConeVector>) -> Result<Self> {
        Self::new(n, None, Some(vrep))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        pair_count(self.n)
    }

    pub fn hrep(&self) -> Result<&[ConeVector]> {
        self.hrep.as_deref().ok_or(Error::MissingHrep)
    }

    pub fn vrep(&self) -> Result<&[ConeVector]> {
        self.vrep.as_deref().ok_or(Error::MissingVrep)
    }

    pub fn hrep_opt(&self) -> Option<&[ConeVector]> {
        self.hrep.as_deref()
    }

    pub fn vrep_opt(&self) -> Option<&[ConeVector]> {
        self.vrep.as_deref()
    }

    pub fn with_vrep(mut self, vrep: Vec<ConeVector>) -> Self {
        self.vrep = Some(vrep);
        self
    }

    pub fn with_hrep(mut self, hrep: Vec<ConeVector>) -> Self {
        self.hrep = Some(hrep);
        self
    }
}

fn check_range(n: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange { n, min, max })
    }
}

/// All OT inequalities: pairs `(i, j)` in index order, third point ascending.
pub fn all_ot(n: usize) -> Vec<ConeVector> {
    let mut out = Vec::with_capacity(n * (n - 1) * (n - 2));
    for (i, j) in pairs(n) {
        for k in 1..=n {
            if k != i && k != j {
                out.push(ot_inequality(n, i, j, k).unwrap());
            }
        }
    }
    out
}

/// All NN inequalities in pair index order.
pub fn all_nn(n: usize) -> Vec<ConeVector> {
    pairs(n).map(|(i, j)| nn_inequality(n, i, j).unwrap()).collect()
}

/// H-representation of QMET_n: the OT family followed by the NN family.
pub fn qmet_hrep(n: usize) -> Result<ConeDescription> {
    check_range(n, 3, 7)?;
    let mut rows = all_ot(n);
    rows.extend(all_nn(n));
    ConeDescription::from_hrep(n, rows)
}

/// V-representation of OMCUT_n: the `p'(n) - 1` nonzero oriented multicuts.
pub fn omcut_vrep(n: usize) -> Result<ConeDescription> {
    check_range(n, 3, 7)?;
    let rays = ordered_partitions(n)?
        .iter()
        .map(multicut_vector)
        .collect();
    ConeDescription::from_vrep(n, rays)
}

/// V-representation of OCUT_n: the `2^n - 2` oriented cuts, by subset mask.
pub fn ocut_vrep(n: usize) -> Result<ConeDescription> {
    check_range(n, 3, 7)?;
    let mut rays = Vec::with_capacity((1 << n) - 2);
    for mask in 1u32..((1 << n) - 1) {
        let s: Vec<usize> = (1..=n).filter(|&p| mask >> (p - 1) & 1 == 1).collect();
        rays.push(oriented_cut_vector(n, &s)?);
    }
    ConeDescription::from_vrep(n, rays)
}

/// The hypermetric generating set used for QHYP_n: all H(b) with b a
/// permutation of the base patterns for that n.
pub fn qhyp_hypermetric_family(n: usize) -> Result<Vec<ConeVector>> {
    check_range(n, 3, 6)?;
    let bases: Vec<Vec<i64>> = match n {
        3 => vec![vec![1, 1, -1]],
        4 => vec![vec![1, 1, -1, 0]],
        5 => vec![vec![1, 1, -1, 0, 0], vec![1, 1, 1, -1, -1]],
        _ => vec![
            vec![1, 1, -1, 0, 0, 0],
            vec![1, 1, 1, -1, -1, 0],
            vec![2, 1, 1, -1, -1, -1],
            vec![1, 1, 1, 1, -1, -2],
        ],
    };
    let mut out = Vec::new();
    for base in bases {
        for b in multiset_permutations(&base) {
            out.push(hypermetric_inequality(n, &b)?);
        }
    }
    Ok(out)
}

/// H-representation of QHYP_n: the QMET_n inequalities followed by the
/// hypermetric generating set.
pub fn qhyp_hrep(n: usize) -> Result<ConeDescription> {
    check_range(n, 3, 6)?;
    let mut rows = all_ot(n);
    rows.extend(all_nn(n));
    rows.extend(qhyp_hypermetric_family(n)?);
    ConeDescription::from_hrep(n, rows)
}

/// Distinct permutations of a multiset, in lexicographic order.
pub fn multiset_permutations(base: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted = base.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    while next_perm_i64(&mut sorted) {
        out.push(sorted.clone());
    }
    out
}

fn next_perm_i64(perm: &mut [i64]) -> bool {
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

/// Parameter list for the A_n / B_n families: ordered endpoint pairs with
/// the complement arranged as a directed cycle, rotations identified by
/// fixing the smallest element first.
pub fn cycle_family_params(n: usize) -> Vec<(Vec<usize>, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            let rest: Vec<usize> = (1..=n).filter(|&p| p != a && p != b).collect();
            if rest.len() <= 1 {
                out.push((rest, a, b));
                continue;
            }
            let first = rest[0];
            let mut tail: Vec<usize> = rest[1..].to_vec();
            loop {
                let mut cycle = vec![first];
                cycle.extend(tail.iter().copied());
                out.push((cycle, a, b));
                if !next_permutation_usize(&mut tail) {
                    break;
                }
            }
        }
    }
    out
}

fn next_permutation_usize(perm: &mut [usize]) -> bool {
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

/// All hypermetric parameter vectors with entries bounded by `max_abs`,
/// summing to 1 and giving a nonzero inequality.
pub fn hypermetric_params(n: usize, max_abs: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut b = vec![-max_abs; n];
    loop {
        if b.iter().sum::<i64>() == 1 {
            let nonzero = b.iter().filter(|&&x| x != 0).count();
            if nonzero >= 2 {
                out.push(b.clone());
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if b[k] < max_abs {
                b[k] += 1;
                for v in &mut b[k + 1..] {
                    *v = -max_abs;
                }
                break;
            }
        }
    }
}

/// Labels for the inequality families used in reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InequalityFamily {
    Ot { i: usize, j: usize, k: usize },
    Nn { i: usize, j: usize },
    A { cycle: Vec<usize>, a: usize, b: usize },
    B { cycle: Vec<usize>, a: usize, b: usize },
    Hyp { b: Vec<i64> },
    ZeroExt { inner: String },
    SymLift { label: String },
}

impl InequalityFamily {
    pub fn vector(&self, n: usize) -> Result<ConeVector> {
        match self {
            InequalityFamily::Ot { i, j, k } => ot_inequality(n, *i, *j, *k),
            InequalityFamily::Nn { i, j } => nn_inequality(n, *i, *j),
            InequalityFamily::A { cycle, a, b } => a_inequality(n, cycle, *a, *b),
            InequalityFamily::B { cycle, a, b } => b_inequality(n, cycle, *a, *b),
            InequalityFamily::Hyp { b } => hypermetric_inequality(n, b),
            _ => Err(Error::Unsupported(
                "derived families carry no rebuild parameters".into(),
            )),
        }
    }
}

impl std::fmt::Display for InequalityFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InequalityFamily::Ot { i, j, k } => write!(f, "OT_{i}{j},{k}"),
            InequalityFamily::Nn { i, j } => write!(f, "NN_{i}{j}"),
            InequalityFamily::A { cycle, a, b } => {
                write!(f, "A({cycle:?};{a},{b})")
            }
            InequalityFamily::B { cycle, a, b } => {
                write!(f, "B({cycle:?};{a},{b})")
            }
            InequalityFamily::Hyp { b } => write!(f, "H({b:?})"),
            InequalityFamily::ZeroExt { inner } => write!(f, "0ext[{inner}]"),
            InequalityFamily::SymLift { label } => write!(f, "lift[{label}]"),
        }
    }
}

/// Decide whether a vector satisfies `d_ii = 0` semantics of a
/// quasi-semi-metric: nonnegative coordinates and all OT inequalities.
pub fn is_quasi_semi_metric(d: &ConeVector) -> bool {
    let n = d.n();
    if d.coords().iter().any(|c| c < &Rational::zero()) {
        return false;
    }
    for (i, j) in pairs(n) {
        for k in 1..=n {
            if k != i && k != j {
                let slack = d.get(i, k) + d.get(k, j) - d.get(i, j);
                if slack < Rational::zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conevec(n: usize, coords: &[i64]) -> ConeVector {
        ConeVector::from_integers(n, coords).unwrap()
    }

    #[test]
    fn partition_counts_match_ordered_bell_numbers() {
        // p'(n) - 1 for n = 2..6
        for (n, want) in [(2, 2), (3, 12), (4, 74), (5, 540), (6, 4682)] {
            assert_eq!(ordered_partitions(n).unwrap().len(), want, "n={n}");
        }
        assert!(ordered_partitions(9).is_err());
    }

    #[test]
    fn multicut_vectors_match_reference_rows() {
        let p = OrderedPartition::new(3, vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(multicut_vector(&p), conevec(3, &[1, 1, 0, 1, 0, 0]));
        let p = OrderedPartition::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(multicut_vector(&p), conevec(3, &[0, 1, 0, 1, 0, 0]));
        // n = 5 row for delta'({1},{2},{3,4,5})
        let p = OrderedPartition::new(5, vec![vec![1], vec![2], vec![3, 4, 5]]).unwrap();
        let v = multicut_vector(&p);
        let want = conevec(
            5,
            &[1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        );
        assert_eq!(v, want);
    }

    #[test]
    fn oriented_cut_rows() {
        assert_eq!(
            oriented_cut_vector(3, &[1]).unwrap(),
            conevec(3, &[1, 1, 0, 0, 0, 0])
        );
        let v = oriented_cut_vector(5, &[1, 5]).unwrap();
        let want = conevec(
            5,
            &[1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
        );
        assert_eq!(v, want);
        // appendix orbit-1 representative: d_{i5} = 1 for i <= 4
        let v = oriented_cut_vector(5, &[1, 2, 3, 4]).unwrap();
        let want = conevec(
            5,
            &[0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0],
        );
        assert_eq!(v, want);
        assert!(oriented_cut_vector(3, &[]).is_err());
        assert!(oriented_cut_vector(3, &[1, 2, 3]).is_err());
    }

    #[test]
    fn ot_nn_rows() {
        assert_eq!(
            ot_inequality(3, 1, 2, 3).unwrap(),
            conevec(3, &[-1, 1, 0, 0, 0, 1])
        );
        assert_eq!(
            ot_inequality(4, 1, 2, 3).unwrap(),
            conevec(4, &[-1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0])
        );
        let nn = nn_inequality(5, 1, 2).unwrap();
        let mut want = vec![0i64; 20];
        want[0] = 1;
        assert_eq!(nn, conevec(5, &want));
        assert!(ot_inequality(4, 1, 1, 3).is_err());
    }

    #[test]
    fn a_and_b_match_reference_rows() {
        assert_eq!(
            a_inequality(4, &[1, 2], 3, 4).unwrap(),
            conevec(4, &[-1, 0, 1, -1, 0, 1, 1, 1, -1, 0, 0, 1])
        );
        assert_eq!(
            b_inequality(4, &[1, 2], 3, 4).unwrap(),
            conevec(4, &[-1, 1, 1, -1, 1, 1, 1, 1, -1, 0, 0, 0])
        );
        // A_3 degenerates to an oriented triangle inequality
        assert_eq!(
            a_inequality(3, &[3], 1, 2).unwrap(),
            ot_inequality(3, 1, 2, 3).unwrap()
        );
        assert!(a_inequality(4, &[1, 2], 3, 3).is_err());
        assert!(a_inequality(4, &[1], 3, 4).is_err());
    }

    #[test]
    fn hypermetric_rows() {
        // b = (1,1,-1): the symmetrized triangle inequality
        let h = hypermetric_inequality(3, &[1, 1, -1]).unwrap();
        assert_eq!(h, conevec(3, &[-1, 1, -1, 1, 1, 1]));
        assert!(h.is_transpose_invariant());
        assert!(hypermetric_inequality(3, &[1, 1, 1]).is_err());
        // pentagonal lift agrees with the direct hypermetric expansion
        let b = [1i64, 1, 1, -1, -1];
        let h5 = hypermetric_inequality(5, &b).unwrap();
        let mut sym = SymVector::zero(5);
        for (i, j) in sym_pairs(5) {
            sym.set(
                i,
                j,
                Rational::from_integer(BigInt::from(-b[i - 1] * b[j - 1])),
            );
        }
        assert_eq!(symmetric_lift(&sym), h5);
    }

    #[test]
    fn zero_extension_rows() {
        let nn3 = nn_inequality(3, 1, 2).unwrap();
        assert_eq!(zero_extension(&nn3), nn_inequality(4, 1, 2).unwrap());
        let ot4 = ot_inequality(4, 1, 2, 3).unwrap();
        assert_eq!(zero_extension(&ot4), ot_inequality(5, 1, 2, 3).unwrap());
    }

    #[test]
    fn cone_description_counts() {
        let q3 = qmet_hrep(3).unwrap();
        assert_eq!(q3.hrep().unwrap().len(), 12);
        let q4 = qmet_hrep(4).unwrap();
        assert_eq!(q4.hrep().unwrap().len(), 36);
        assert_eq!(omcut_vrep(5).unwrap().vrep().unwrap().len(), 540);
        assert_eq!(ocut_vrep(4).unwrap().vrep().unwrap().len(), 14);
        let qh5 = qhyp_hrep(5).unwrap();
        assert_eq!(qh5.hrep().unwrap().len(), 80 + 30 + 10);
        assert!(qmet_hrep(8).is_err());
    }

    #[test]
    fn cycle_param_counts() {
        assert_eq!(cycle_family_params(4).len(), 12);
        assert_eq!(cycle_family_params(5).len(), 40);
    }

    #[test]
    fn refinement_relation() {
        let coarse = OrderedPartition::new(4, vec![vec![2, 3, 4], vec![1]]).unwrap();
        let fine = OrderedPartition::new(4, vec![vec![2], vec![3, 4], vec![1]]).unwrap();
        assert!(fine.properly_refines(&coarse));
        assert!(!coarse.properly_refines(&fine));
        assert!(!coarse.properly_refines(&coarse));
        // order must be respected
        let wrong = OrderedPartition::new(4, vec![vec![1], vec![2], vec![3, 4]]).unwrap();
        assert!(!wrong.properly_refines(&coarse));
        // refinements of ({2,3,4},{1}) number p'(3) - 1
        let all = ordered_partitions(4).unwrap();
        let refs = all
            .iter()
            .filter(|p| p.properly_refines(&coarse))
            .count();
        assert_eq!(refs, 12);
    }

    #[test]
    fn multiset_permutation_counts() {
        assert_eq!(multiset_permutations(&[1, 1, -1, 0, 0]).len(), 30);
        assert_eq!(multiset_permutations(&[1, 1, 1, -1, -1]).len(), 10);
    }

    #[test]
    fn quasi_semi_metric_predicate() {
        let p = OrderedPartition::new(4, vec![vec![1], vec![2], vec![3, 4]]).unwrap();
        assert!(is_quasi_semi_metric(&multicut_vector(&p)));
        let mut bad = ConeVector::zero(3);
        bad.add_at(1, 2, 5); // violates OT_{12,3}
        assert!(!is_quasi_semi_metric(&bad));
    }
}
