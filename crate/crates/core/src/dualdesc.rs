//! Representation conversion for pointed polyhedral cones: the double
//! description method (H to V, and V to H by duality), extremality and
//! facethood rank tests, incidence sets, ridge rotation, and the
//! symmetry-exploiting adjacency decomposition for large facet runs.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Condvar, Mutex};

use num_traits::{Signed, Zero};

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::exact::{format_rational, pair_count, ConeVector, IntRankBasis, Rational};
use crate::generators::ConeDescription;
use crate::linalg;
use crate::symmetry::{OrbitRecord, SymmetryGroup};

/// Zero-set of one object against an indexed family (which inequalities a
/// ray lies on, or which rays a facet contains).
#[derive(Clone, Debug)]
pub struct IncidenceSet {
    bits: BitRow,
    count: usize,
}

impl IncidenceSet {
    pub fn from_bits(bits: BitRow) -> Self {
        let count = bits.count_ones();
        IncidenceSet { bits, count }
    }

    pub fn cardinality(&self) -> usize {
        self.count
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.bits.get(idx)
    }

    pub fn bits(&self) -> &BitRow {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }
}

/// Extreme rays computed from an H-representation, with per-ray incidence
/// over the input inequalities.
pub struct RayEnumeration {
    pub n: usize,
    pub hrep: Vec<ConeVector>,
    pub rays: Vec<ConeVector>,
    pub incidence: Vec<IncidenceSet>,
}

impl RayEnumeration {
    pub fn description(&self) -> ConeDescription {
        ConeDescription::new(self.n, Some(self.hrep.clone()), Some(self.rays.clone())).unwrap()
    }
}

/// Facets computed from a V-representation, with per-facet incidence over
/// the input rays.
pub struct FacetEnumeration {
    pub n: usize,
    pub vrep: Vec<ConeVector>,
    pub facets: Vec<ConeVector>,
    pub incidence: Vec<IncidenceSet>,
}

impl FacetEnumeration {
    pub fn description(&self) -> ConeDescription {
        ConeDescription::new(self.n, Some(self.facets.clone()), Some(self.vrep.clone())).unwrap()
    }
}

pub(crate) fn primitive_rows(vectors: &[ConeVector]) -> Result<Vec<Vec<i64>>> {
    vectors.iter().map(|v| v.primitive_i64s()).collect()
}

fn rows_to_vectors(n: usize, rows: &[Vec<i64>]) -> Vec<ConeVector> {
    rows.iter()
        .map(|r| ConeVector::from_integers(n, r).unwrap())
        .collect()
}

/// One ray of the double description state.
#[derive(Clone)]
struct DdRay {
    coords: Vec<i64>,
    inc: BitRow,
}

#[inline]
fn dot_i128(a: &[i64], b: &[i64]) -> Result<i128> {
    let mut acc: i128 = 0;
    for (&x, &y) in a.iter().zip(b) {
        let prod = (x as i128).checked_mul(y as i128).ok_or(Error::Overflow)?;
        acc = acc.checked_add(prod).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Positive combination `dp * neg - dn * pos` landing on the hyperplane,
/// gcd-reduced back into `i64`.
fn combine(dp: i128, pos: &[i64], dn: i128, neg: &[i64]) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(pos.len());
    let mut g: i128 = 0;
    for (&p, &m) in pos.iter().zip(neg) {
        let a = dp.checked_mul(m as i128).ok_or(Error::Overflow)?;
        let b = dn.checked_mul(p as i128).ok_or(Error::Overflow)?;
        let v = a.checked_sub(b).ok_or(Error::Overflow)?;
        g = gcd_i128(g, v);
        out.push(v);
    }
    debug_assert!(g != 0);
    out.iter()
        .map(|&v| i64::try_from(v / g).map_err(|_| Error::Overflow))
        .collect()
}

/// Greedy maximal independent subset of `rows`, in input order.
fn greedy_basis(rows: &[Vec<i64>], cols: usize) -> (Vec<usize>, usize) {
    let mut basis = IntRankBasis::new(cols);
    let mut picked = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if basis.insert_i64(r) {
            picked.push(i);
            if basis.rank() == cols {
                break;
            }
        }
    }
    let rank = basis.rank();
    (picked, rank)
}

/// A nonzero rational vector orthogonal to all `rows`.
fn lineality_witness(rows: &[Vec<i64>], picked: &[usize]) -> Vec<Rational> {
    let sub: Vec<Vec<Rational>> = picked.iter().map(|&i| linalg::rat_row(&rows[i])).collect();
    let ns = linalg::nullspace(&sub);
    ns.into_iter().next().expect("rank deficit implies nullspace")
}

/// Core double description run over primitive integer inequality rows.
/// Requires `rank(rows) == dim` (pointed cone). Returns the extreme rays
/// with incidence bitsets over all input rows.
fn dd_rows(rows: &[Vec<i64>], dim: usize) -> Result<Vec<DdRay>> {
    let m = rows.len();
    let (picked, rank) = greedy_basis(rows, dim);
    if rank < dim {
        let witness = lineality_witness(rows, &picked);
        return Err(Error::NotPointed {
            witness: witness
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(" "),
        });
    }

    // initial simplicial cone: dual basis of the picked rows
    let basis_rows: Vec<Vec<Rational>> =
        picked.iter().map(|&i| linalg::rat_row(&rows[i])).collect();
    let mut rays: Vec<DdRay> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[j] = linalg::rat(1);
        let x = linalg::solve(&basis_rows, &e).expect("basis is invertible");
        let coords = linalg::primitive_int_vec(&x)?;
        let mut inc = BitRow::zeros(m);
        for (k, &row_idx) in picked.iter().enumerate() {
            if k != j {
                inc.set(row_idx);
            }
        }
        rays.push(DdRay { coords, inc });
    }

    let verbose = std::env::var_os("ORICONE_VERBOSE").is_some();
    let in_basis: Vec<bool> = {
        let mut v = vec![false; m];
        for &i in &picked {
            v[i] = true;
        }
        v
    };

    for h in 0..m {
        if in_basis[h] {
            continue;
        }
        let row = &rows[h];
        let dots: Vec<i128> = rays
            .iter()
            .map(|r| dot_i128(row, &r.coords))
            .collect::<Result<_>>()?;
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (i, &d) in dots.iter().enumerate() {
            if d > 0 {
                pos.push(i);
            } else if d < 0 {
                neg.push(i);
            }
        }
        if neg.is_empty() {
            for (i, &d) in dots.iter().enumerate() {
                if d == 0 {
                    rays[i].inc.set(h);
                }
            }
            continue;
        }

        let mut next: Vec<DdRay> = Vec::with_capacity(rays.len());
        for (i, &d) in dots.iter().enumerate() {
            if d > 0 {
                next.push(rays[i].clone());
            } else if d == 0 {
                let mut r = rays[i].clone();
                r.inc.set(h);
                next.push(r);
            }
        }

        if !pos.is_empty() {
            let use_rank_test = rays.len() <= 32;
            // transposed incidence: processed row -> rays on it, so witness
            // scans only walk the least-popular common constraint
            let mut row_lists: Vec<Vec<u32>> = vec![Vec::new(); m];
            if !use_rank_test {
                for (i, r) in rays.iter().enumerate() {
                    for bit in r.inc.iter_ones() {
                        row_lists[bit].push(i as u32);
                    }
                }
            }
            let rays_ref = &rays;
            let lists_ref = &row_lists;
            let adjacent_pairs: Vec<(usize, usize)> = if pos.len() * neg.len() >= 1 << 14 {
                use rayon::prelude::*;
                pos.par_iter()
                    .flat_map_iter(|&p| {
                        neg.iter()
                            .filter(move |&&q| {
                                dd_adjacent(rays_ref, lists_ref, p, q, rows, dim, use_rank_test)
                            })
                            .map(move |&q| (p, q))
                    })
                    .collect()
            } else {
                pos.iter()
                    .flat_map(|&p| {
                        neg.iter()
                            .filter(move |&&q| {
                                dd_adjacent(rays_ref, lists_ref, p, q, rows, dim, use_rank_test)
                            })
                            .map(move |&q| (p, q))
                    })
                    .collect()
            };
            for (p, q) in adjacent_pairs {
                let coords = combine(dots[p], &rays[p].coords, dots[q], &rays[q].coords)?;
                let mut inc = BitRow::and(&rays[p].inc, &rays[q].inc);
                inc.set(h);
                next.push(DdRay { coords, inc });
            }
        }
        rays = next;
        if verbose {
            eprintln!("dd: row {}/{} -> {} rays", h + 1, m, rays.len());
        }
    }

    rays.sort_by(|a, b| a.coords.cmp(&b.coords));
    Ok(rays)
}

/// Adjacency of two extreme rays of the intermediate cone. The
/// combinatorial witness test is the fast path; the algebraic rank test is
/// the ground truth and is used directly while the ray list is small.
fn dd_adjacent(
    rays: &[DdRay],
    row_lists: &[Vec<u32>],
    p: usize,
    q: usize,
    rows: &[Vec<i64>],
    dim: usize,
    use_rank_test: bool,
) -> bool {
    let (rp, rq) = (&rays[p], &rays[q]);
    if BitRow::and_count(&rp.inc, &rq.inc) + 2 < dim {
        return false;
    }
    if use_rank_test {
        let common = BitRow::and(&rp.inc, &rq.inc);
        let mut basis = IntRankBasis::new(dim);
        for i in common.iter_ones() {
            if basis.insert_i64(&rows[i]) && basis.rank() + 2 == dim {
                return true;
            }
        }
        false
    } else {
        let common = BitRow::and(&rp.inc, &rq.inc);
        let narrow = common
            .iter_ones()
            .min_by_key(|&i| row_lists[i].len())
            .expect("common incidence nonempty");
        !row_lists[narrow].iter().any(|&k| {
            let k = k as usize;
            k != p && k != q && rays[k].inc.is_superset_of(&common)
        })
    }
}

/// All extreme rays of the pointed cone `{x : f.x >= 0 for f in hrep}`,
/// primitive-normalized and sorted, each with its incidence set.
pub fn double_description(h: &ConeDescription) -> Result<RayEnumeration> {
    let n = h.n();
    let hrep = h.hrep()?;
    let rows = primitive_rows(hrep)?;
    let rays = dd_rows(&rows, pair_count(n))?;
    Ok(RayEnumeration {
        n,
        hrep: hrep.to_vec(),
        rays: rows_to_vectors(n, &rays.iter().map(|r| r.coords.clone()).collect::<Vec<_>>()),
        incidence: rays
            .into_iter()
            .map(|r| IncidenceSet::from_bits(r.inc))
            .collect(),
    })
}

/// All facets of the full-dimensional cone generated by `v.vrep`, by a dual
/// double description run on the rays as inequalities.
pub fn facet_enumeration(v: &ConeDescription) -> Result<FacetEnumeration> {
    let n = v.n();
    let dim = pair_count(n);
    let vrep = v.vrep()?;
    let rows = primitive_rows(vrep)?;
    let rank = crate::exact::rank_rows(&rows, dim);
    if rank < dim {
        return Err(Error::NotFullDimensional { rank, dim });
    }
    let facets = dd_rows(&rows, dim)?;
    Ok(FacetEnumeration {
        n,
        vrep: vrep.to_vec(),
        facets: rows_to_vectors(
            n,
            &facets.iter().map(|r| r.coords.clone()).collect::<Vec<_>>(),
        ),
        incidence: facets
            .into_iter()
            .map(|r| IncidenceSet::from_bits(r.inc))
            .collect(),
    })
}

/// Indices of `against` on which `x` evaluates to zero.
pub fn incidence(x: &ConeVector, against: &[ConeVector]) -> Result<IncidenceSet> {
    let mut bits = BitRow::zeros(against.len());
    for (i, f) in against.iter().enumerate() {
        if x.dot(f)?.is_zero() {
            bits.set(i);
        }
    }
    Ok(IncidenceSet::from_bits(bits))
}

/// Extremality of a ray against an H-representation: the ray must satisfy
/// every inequality, and the incident normals must have rank `dim - 1`.
pub fn is_extreme(r: &ConeVector, h: &ConeDescription) -> Result<bool> {
    let hrep = h.hrep()?;
    let dim = h.dim();
    let mut basis = IntRankBasis::new(dim);
    let mut incident_rows: Vec<Vec<i64>> = Vec::new();
    for (i, f) in hrep.iter().enumerate() {
        let d = r.dot(f)?;
        if d.is_negative() {
            return Err(Error::Violated {
                vector: "ray".into(),
                constraint: "inequality".into(),
                index: i,
            });
        }
        if d.is_zero() {
            incident_rows.push(f.primitive_i64s()?);
        }
    }
    for row in &incident_rows {
        if basis.insert_i64(row) && basis.rank() == dim - 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Facethood of a valid inequality against a V-representation: the normal
/// must be nonnegative on every ray, and the incident rays must have rank
/// `dim - 1`.
pub fn is_facet(f: &ConeVector, v: &ConeDescription) -> Result<bool> {
    let vrep = v.vrep()?;
    let dim = v.dim();
    let mut basis = IntRankBasis::new(dim);
    let mut incident_rows: Vec<Vec<i64>> = Vec::new();
    for (i, r) in vrep.iter().enumerate() {
        let d = f.dot(r)?;
        if d.is_negative() {
            return Err(Error::Violated {
                vector: "inequality".into(),
                constraint: "ray".into(),
                index: i,
            });
        }
        if d.is_zero() {
            incident_rows.push(r.primitive_i64s()?);
        }
    }
    for row in &incident_rows {
        if basis.insert_i64(row) && basis.rank() == dim - 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Rotate the facet `f` around a ridge: returns the unique other facet of
/// the cone containing all of `ridge_rays`, found by an exact ratio test
/// over the rays strictly off `f`.
pub fn ridge_rotate(
    f: &ConeVector,
    ridge_rays: &[ConeVector],
    v: &ConeDescription,
) -> Result<ConeVector> {
    let n = v.n();
    let dim = pair_count(n);
    let vrep = v.vrep()?;
    let f_row = f.primitive_i64s()?;

    let ridge_rows = primitive_rows(ridge_rays)?;
    for (i, r) in ridge_rows.iter().enumerate() {
        if dot_i128(&f_row, r)? != 0 {
            return Err(Error::Violated {
                vector: "ridge ray".into(),
                constraint: "facet hyperplane".into(),
                index: i,
            });
        }
    }
    if crate::exact::rank_rows(&ridge_rows, dim) != dim - 2 {
        return Err(Error::Unsupported(
            "ridge rays must span a codimension-2 subspace".into(),
        ));
    }

    // the pencil of functionals vanishing on the ridge span
    let rat_rows: Vec<Vec<Rational>> = ridge_rows.iter().map(|r| linalg::rat_row(r)).collect();
    let pencil = linalg::nullspace(&rat_rows);
    debug_assert_eq!(pencil.len(), 2);
    let candidates: Vec<Vec<i64>> = pencil
        .iter()
        .map(|p| linalg::primitive_int_vec(p))
        .collect::<Result<_>>()?;
    // pick a pencil member independent of f
    let mut psi = None;
    for c in &candidates {
        let mut probe = IntRankBasis::new(dim);
        probe.insert_i64(&f_row);
        if probe.insert_i64(c) {
            psi = Some(c.clone());
            break;
        }
    }
    let mut psi = psi.ok_or(Error::NoSecondFacet)?;

    let ray_rows = primitive_rows(vrep)?;
    // orient psi nonnegative on the rays of f off the ridge
    let mut oriented = false;
    for r in &ray_rows {
        if dot_i128(&f_row, r)? == 0 {
            let s = dot_i128(&psi, r)?;
            if s != 0 {
                if s < 0 {
                    for v in &mut psi {
                        *v = -*v;
                    }
                }
                oriented = true;
                break;
            }
        }
    }
    if !oriented {
        return Err(Error::NoSecondFacet);
    }

    let g = rotate_ratio_test(&f_row, &psi, &ray_rows)?;
    // the result must be valid and distinct from f
    for (i, r) in ray_rows.iter().enumerate() {
        if dot_i128(&g, r)? < 0 {
            return Err(Error::Violated {
                vector: "rotated facet".into(),
                constraint: "ray".into(),
                index: i,
            });
        }
    }
    if g == f_row {
        return Err(Error::NoSecondFacet);
    }
    Ok(ConeVector::from_integers(n, &g)?)
}

/// `g = psi + t* f` with `t* = max over {f.r > 0} of (-psi.r / f.r)`,
/// cleared to a primitive integer row.
fn rotate_ratio_test(f_row: &[i64], psi: &[i64], ray_rows: &[Vec<i64>]) -> Result<Vec<i64>> {
    let mut best: Option<(i128, i128)> = None; // t* as (num, den), den > 0
    for r in ray_rows {
        let fr = dot_i128(f_row, r)?;
        if fr <= 0 {
            continue;
        }
        let num = -dot_i128(psi, r)?;
        match best {
            None => best = Some((num, fr)),
            Some((bn, bd)) => {
                // num/fr > bn/bd  <=>  num*bd > bn*fr (positive denominators)
                let lhs = num.checked_mul(bd).ok_or(Error::Overflow)?;
                let rhs = bn.checked_mul(fr).ok_or(Error::Overflow)?;
                if lhs > rhs {
                    best = Some((num, fr));
                }
            }
        }
    }
    let (num, den) = best.ok_or(Error::NoSecondFacet)?;
    let mut out = Vec::with_capacity(f_row.len());
    let mut g: i128 = 0;
    for (&pv, &fv) in psi.iter().zip(f_row) {
        let v = (pv as i128)
            .checked_mul(den)
            .and_then(|a| (fv as i128).checked_mul(num).map(|b| (a, b)))
            .and_then(|(a, b)| a.checked_add(b))
            .ok_or(Error::Overflow)?;
        g = gcd_i128(g, v);
        out.push(v);
    }
    if g == 0 {
        return Err(Error::NoSecondFacet);
    }
    out.iter()
        .map(|&v| i64::try_from(v / g).map_err(|_| Error::Overflow))
        .collect()
}

/// An H-description of the cone generated by `v.vrep` that also works when
/// the cone is not full-dimensional: each span equation contributes a `+/-`
/// pair of inequality rows, followed by one lifted inequality per facet of
/// the cone within its span. A vector lies in the cone iff it satisfies
/// every returned inequality.
pub fn cone_hrep(v: &ConeDescription) -> Result<Vec<ConeVector>> {
    let n = v.n();
    let dim = pair_count(n);
    let vrep = v.vrep()?;
    let rows = primitive_rows(vrep)?;

    let mut basis = IntRankBasis::new(dim);
    let mut basis_idx = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if basis.insert_i64(r) {
            basis_idx.push(i);
        }
    }
    let rank = basis_idx.len();
    if rank == dim {
        return Ok(facet_enumeration(v)?.facets);
    }

    let mut out = Vec::new();
    // span equations as +/- inequality pairs
    let basis_rat: Vec<Vec<Rational>> =
        basis_idx.iter().map(|&i| linalg::rat_row(&rows[i])).collect();
    for z in linalg::nullspace(&basis_rat) {
        let z = linalg::primitive_int_vec(&z)?;
        out.push(ConeVector::from_integers(n, &z)?);
        out.push(ConeVector::from_integers(n, &z.iter().map(|&v| -v).collect::<Vec<_>>())?);
    }

    // facets of the cone inside its span, lifted to ambient functionals
    let basis_mat: Vec<Vec<Rational>> = (0..dim)
        .map(|c| basis_idx.iter().map(|&i| linalg::rat(rows[i][c])).collect())
        .collect();
    let mut coord_rows: Vec<Vec<i64>> = Vec::with_capacity(rows.len());
    for r in &rows {
        let rhs: Vec<Rational> = r.iter().map(|&v| linalg::rat(v)).collect();
        let y = linalg::solve(&basis_mat, &rhs).expect("ray lies in the span");
        coord_rows.push(linalg::primitive_int_vec(&y)?);
    }
    let sub_facets = dd_rows(&coord_rows, rank)?;
    for sf in &sub_facets {
        let values: Vec<Rational> = (0..rank)
            .map(|k| {
                let d = coord_rows[basis_idx[k]]
                    .iter()
                    .zip(&sf.coords)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum::<i128>();
                Rational::from_integer(d.into())
            })
            .collect();
        let psi = linalg::solve(&basis_rat, &values).expect("extension exists");
        out.push(ConeVector::from_integers(n, &linalg::primitive_int_vec(&psi)?)?);
    }
    Ok(out)
}

/// Options for `adjacency_decomposition`.
#[derive(Clone, Default)]
pub struct AdjDecompOptions {
    /// Resumable state file: one canonical facet per line, `P` (processed)
    /// or `Q` (queued) prefix, tab, then the coordinate row.
    pub checkpoint: Option<PathBuf>,
    /// Worker threads; 0 or 1 means single-threaded.
    pub jobs: usize,
    /// Stop after this many orbits have been processed (testing hook).
    pub stop_after: Option<usize>,
}

/// Result of an adjacency decomposition run.
pub struct AdjacencyDecomposition {
    pub orbits: Vec<OrbitRecord>,
    pub complete: bool,
}

impl AdjacencyDecomposition {
    pub fn total_facets(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }
}

struct OrbitState {
    canon: Vec<i64>,
    processed: bool,
    in_flight: bool,
    adjacency: Option<usize>,
    incidence: Option<usize>,
}

struct DecompShared {
    states: Vec<OrbitState>,
    registry: HashMap<Vec<i64>, usize>,
    processed_count: usize,
    stopped: bool,
    error: Option<Error>,
}

/// Enumerate all facet orbits of the cone generated by `v.vrep` by a
/// breadth-first search over orbit representatives: each representative's
/// ridges are enumerated by a dual description of its incident-ray subcone,
/// every ridge is rotated to the neighbouring facet, and new canonical
/// forms are enqueued.
pub fn adjacency_decomposition(
    v: &ConeDescription,
    seed: &ConeVector,
    opts: &AdjDecompOptions,
) -> Result<AdjacencyDecomposition> {
    let n = v.n();
    let dim = pair_count(n);
    let vrep = v.vrep()?;
    let ray_rows = primitive_rows(vrep)?;
    let rank = crate::exact::rank_rows(&ray_rows, dim);
    if rank < dim {
        return Err(Error::NotFullDimensional { rank, dim });
    }
    if !is_facet(seed, v).map_err(|_| Error::SeedNotFacet)? {
        return Err(Error::SeedNotFacet);
    }
    let group = SymmetryGroup::new(n);

    let mut shared = DecompShared {
        states: Vec::new(),
        registry: HashMap::new(),
        processed_count: 0,
        stopped: false,
        error: None,
    };

    let register = |shared: &mut DecompShared, canon: Vec<i64>, processed: bool| {
        if let Some(&id) = shared.registry.get(&canon) {
            return id;
        }
        let id = shared.states.len();
        shared.registry.insert(canon.clone(), id);
        shared.states.push(OrbitState {
            canon,
            processed,
            in_flight: false,
            adjacency: None,
            incidence: None,
        });
        if processed {
            shared.processed_count += 1;
        }
        id
    };

    let mut resumed = false;
    if let Some(path) = &opts.checkpoint {
        if path.exists() {
            for (status, row) in read_checkpoint(path, dim)? {
                let (canon, _) = group.canonical_i64(&row);
                register(&mut shared, canon, status == CheckpointStatus::Processed);
            }
            resumed = !shared.states.is_empty();
        }
    }
    if !resumed {
        let seed_row = seed.primitive_i64s()?;
        let (canon, _) = group.canonical_i64(&seed_row);
        register(&mut shared, canon, false);
    }

    let jobs = opts.jobs.max(1);
    let shared = Mutex::new(shared);
    let condvar = Condvar::new();

    let worker = || -> () {
        loop {
            let (id, canon) = {
                let mut guard = shared.lock().unwrap();
                loop {
                    if guard.error.is_some() || guard.stopped {
                        return;
                    }
                    if let Some(id) = guard
                        .states
                        .iter()
                        .position(|s| !s.processed && !s.in_flight)
                    {
                        guard.states[id].in_flight = true;
                        break (id, guard.states[id].canon.clone());
                    }
                    if guard.states.iter().all(|s| !s.in_flight) {
                        return; // queue drained
                    }
                    guard = condvar.wait(guard).unwrap();
                }
            };

            let outcome = process_facet(&canon, &ray_rows, dim, &group);
            let mut guard = shared.lock().unwrap();
            match outcome {
                Err(e) => {
                    guard.error = Some(e);
                    condvar.notify_all();
                    return;
                }
                Ok(job) => {
                    for neighbor in job.neighbors {
                        if !guard.registry.contains_key(&neighbor) {
                            let nid = guard.states.len();
                            guard.registry.insert(neighbor.clone(), nid);
                            guard.states.push(OrbitState {
                                canon: neighbor,
                                processed: false,
                                in_flight: false,
                                adjacency: None,
                                incidence: None,
                            });
                        }
                    }
                    let st = &mut guard.states[id];
                    st.processed = true;
                    st.in_flight = false;
                    st.adjacency = Some(job.adjacency);
                    st.incidence = Some(job.incidence);
                    guard.processed_count += 1;
                    if let Some(path) = &opts.checkpoint {
                        let entries: Vec<(CheckpointStatus, Vec<i64>)> = guard
                            .states
                            .iter()
                            .map(|s| {
                                let status = if s.processed {
                                    CheckpointStatus::Processed
                                } else {
                                    CheckpointStatus::Queued
                                };
                                (status, s.canon.clone())
                            })
                            .collect();
                        if let Err(e) = write_checkpoint(path, &entries) {
                            guard.error = Some(e);
                        }
                    }
                    if let Some(limit) = opts.stop_after {
                        if guard.processed_count >= limit {
                            guard.stopped = true;
                        }
                    }
                    condvar.notify_all();
                }
            }
        }
    };

    if jobs == 1 {
        worker();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(worker);
            }
        });
    }

    let mut shared = shared.into_inner().unwrap();
    if let Some(e) = shared.error.take() {
        return Err(e);
    }
    let complete = shared.states.iter().all(|s| s.processed);

    // stats for orbits restored from a checkpoint without them
    for st in &mut shared.states {
        if st.processed && st.adjacency.is_none() {
            let job = process_facet(&st.canon, &ray_rows, dim, &group)?;
            st.adjacency = Some(job.adjacency);
            st.incidence = Some(job.incidence);
        }
    }

    let mut orbits: Vec<OrbitRecord> = shared
        .states
        .iter()
        .map(|s| OrbitRecord {
            orbit_id: 0,
            representative: ConeVector::from_integers(n, &s.canon).unwrap(),
            size: group.orbit_size_i64(&s.canon),
            adjacency: s.adjacency,
            incidence: s.incidence,
        })
        .collect();
    sort_orbit_records(&mut orbits);
    for (k, o) in orbits.iter_mut().enumerate() {
        o.orbit_id = k + 1;
    }
    Ok(AdjacencyDecomposition { orbits, complete })
}

/// Order orbit records the way the published tables do: adjacency
/// descending, then incidence descending, then size descending, then the
/// representative itself as a deterministic tiebreak.
pub fn sort_orbit_records(orbits: &mut [OrbitRecord]) {
    orbits.sort_by(|a, b| {
        b.adjacency
            .cmp(&a.adjacency)
            .then(b.incidence.cmp(&a.incidence))
            .then(b.size.cmp(&a.size))
            .then(a.representative.cmp(&b.representative))
    });
}

struct FacetJob {
    adjacency: usize,
    incidence: usize,
    neighbors: Vec<Vec<i64>>,
}

/// Enumerate the ridges on one facet by a dual description of the subcone
/// of incident rays (expressed in a basis of the facet hyperplane), then
/// rotate each ridge to its neighbouring facet.
fn process_facet(
    facet: &[i64],
    ray_rows: &[Vec<i64>],
    dim: usize,
    group: &SymmetryGroup,
) -> Result<FacetJob> {
    let mut on_idx = Vec::new();
    for (i, r) in ray_rows.iter().enumerate() {
        let d = dot_i128(facet, r)?;
        if d == 0 {
            on_idx.push(i);
        } else if d < 0 {
            return Err(Error::Violated {
                vector: "facet".into(),
                constraint: "ray".into(),
                index: i,
            });
        }
    }
    let incidence = on_idx.len();
    let on_rows: Vec<&Vec<i64>> = on_idx.iter().map(|&i| &ray_rows[i]).collect();

    // basis of the facet hyperplane from the incident rays
    let mut basis = IntRankBasis::new(dim);
    let mut basis_idx = Vec::new();
    for (k, r) in on_rows.iter().enumerate() {
        if basis.insert_i64(r) {
            basis_idx.push(k);
        }
    }
    let sub_dim = basis_idx.len();
    debug_assert_eq!(sub_dim, dim - 1);

    // coordinates of every incident ray in that basis
    let basis_mat: Vec<Vec<Rational>> = (0..dim)
        .map(|c| {
            basis_idx
                .iter()
                .map(|&k| linalg::rat(on_rows[k][c]))
                .collect()
        })
        .collect();
    let mut coord_rows: Vec<Vec<i64>> = Vec::with_capacity(on_rows.len());
    for r in &on_rows {
        let rhs: Vec<Rational> = r.iter().map(|&v| linalg::rat(v)).collect();
        let y = linalg::solve(&basis_mat, &rhs).expect("incident ray lies in the span");
        coord_rows.push(linalg::primitive_int_vec(&y)?);
    }

    // insertion order strongly affects intermediate sizes here; sorting the
    // subcone rows keeps them in check (the output is order-invariant)
    let mut order: Vec<usize> = (0..coord_rows.len()).collect();
    order.sort_by(|&a, &b| coord_rows[a].cmp(&coord_rows[b]));
    let sorted_rows: Vec<Vec<i64>> = order.iter().map(|&i| coord_rows[i].clone()).collect();
    let sub_facets_sorted = dd_rows(&sorted_rows, sub_dim)?;
    // map incidence bitsets back to the unsorted row indexing
    let sub_facets: Vec<DdRay> = sub_facets_sorted
        .into_iter()
        .map(|r| {
            let mut inc = BitRow::zeros(coord_rows.len());
            for k in r.inc.iter_ones() {
                inc.set(order[k]);
            }
            DdRay {
                coords: r.coords,
                inc,
            }
        })
        .collect();
    let adjacency = sub_facets.len();

    // lift each subcone facet back to a functional on the ambient space
    let lift_mat: Vec<Vec<Rational>> = basis_idx
        .iter()
        .map(|&k| linalg::rat_row(on_rows[k]))
        .collect();
    let mut neighbors = Vec::with_capacity(adjacency);
    for sf in &sub_facets {
        let values: Vec<Rational> = basis_idx
            .iter()
            .map(|&k| {
                let d = coord_rows[k]
                    .iter()
                    .zip(&sf.coords)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum::<i128>();
                Rational::from_integer(d.into())
            })
            .collect();
        let psi = linalg::solve(&lift_mat, &values).expect("extension exists");
        let psi = linalg::primitive_int_vec(&psi)?;
        let g = rotate_ratio_test(facet, &psi, ray_rows)?;
        let (canon, _) = group.canonical_i64(&g);
        neighbors.push(canon);
    }
    neighbors.sort();
    neighbors.dedup();

    Ok(FacetJob {
        adjacency,
        incidence,
        neighbors,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum CheckpointStatus {
    Processed,
    Queued,
}

/// Write the adjacency-decomposition state file: one canonical facet per
/// line, `P|Q` status prefix, tab, whitespace-separated coordinate row.
pub fn write_checkpoint(path: &Path, entries: &[(CheckpointStatus, Vec<i64>)]) -> Result<()> {
    let mut text = String::new();
    for (status, row) in entries {
        text.push(match status {
            CheckpointStatus::Processed => 'P',
            CheckpointStatus::Queued => 'Q',
        });
        text.push('\t');
        text.push_str(
            &row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        text.push('\n');
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_checkpoint(path: &Path, dim: usize) -> Result<Vec<(CheckpointStatus, Vec<i64>)>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let (status, rest) = line.split_once('\t').ok_or(Error::Parse {
            line: lineno + 1,
            msg: "expected status prefix and tab".into(),
        })?;
        let status = match status {
            "P" => CheckpointStatus::Processed,
            "Q" => CheckpointStatus::Queued,
            other => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("unknown status {other:?}"),
                })
            }
        };
        let row: Vec<i64> = rest
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad integer {t:?}"),
                })
            })
            .collect::<Result<_>>()?;
        if row.len() != dim {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("expected {dim} coordinates, got {}", row.len()),
            });
        }
        out.push((status, row));
    }
    Ok(out)
}
