//! Exact rational vectors over ordered point pairs, plus integer rank
//! machinery. This is the arithmetic substrate for every cone computation.
//!
//! Vectors live in `R^{n(n-1)}` indexed by ordered pairs `(i, j)`, `i != j`,
//! in the fixed lexicographic order `12, 13, .., 1n, 21, 23, .., n n-1`.
//! The same representation serves extreme rays and inequality normals, an
//! inequality `f` always meaning `dot(f, x) >= 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Number of ordered pairs on `n` points, i.e. the ambient dimension.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1)
}

/// Index of the ordered pair `(i, j)` (1-based points) in the fixed order.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && (1..=n).contains(&i) && (1..=n).contains(&j));
    (i - 1) * (n - 1) + if j < i { j - 1 } else { j - 2 }
}

/// Ordered pairs `(i, j)` in index order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
}

/// Recover `n` from an ambient dimension `d = n(n-1)`, requiring `n >= 3`.
pub fn points_from_dim(d: usize) -> Option<usize> {
    let mut n = 3;
    while pair_count(n) < d {
        n += 1;
    }
    (pair_count(n) == d).then_some(n)
}


/// Dense vector of exact rationals over the ordered pairs of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeVector {
    n: usize,
    coords: Vec<Rational>,
}

impl ConeVector {
    pub fn zero(n: usize) -> Self {
        ConeVector {
            n,
            coords: vec![Rational::zero(); pair_count(n)],
        }
    }

    pub fn from_rationals(n: usize, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != pair_count(n) {
            return Err(Error::DimensionMismatch(coords.len(), pair_count(n)));
        }
        Ok(ConeVector { n, coords })
    }

    pub fn from_integers(n: usize, coords: &[i64]) -> Result<Self> {
        if coords.len() != pair_count(n) {
            return Err(Error::DimensionMismatch(coords.len(), pair_count(n)));
        }
        Ok(ConeVector {
            n,
            coords: coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.coords[pair_index(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        let idx = pair_index(self.n, i, j);
        self.coords[idx] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, delta: i64) {
        let idx = pair_index(self.n, i, j);
        self.coords[idx] += Rational::from_integer(BigInt::from(delta));
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn zero_count(&self) -> usize {
        self.coords.iter().filter(|c| c.is_zero()).count()
    }

    /// Exact inner product over all `n(n-1)` coordinates.
    pub fn dot(&self, other: &ConeVector) -> Result<Rational> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut acc = Rational::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        Ok(acc)
    }

    pub fn add(&self, other: &ConeVector) -> Result<ConeVector> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(ConeVector {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scaled(&self, factor: &Rational) -> ConeVector {
        ConeVector {
            n: self.n,
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    /// The reversal image `d^r` with `d^r_ij = d_ji`.
    pub fn transposed(&self) -> ConeVector {
        let mut out = ConeVector::zero(self.n);
        for (i, j) in pairs(self.n) {
            out.set(j, i, self.get(i, j).clone());
        }
        out
    }

    pub fn is_transpose_invariant(&self) -> bool {
        pairs(self.n).all(|(i, j)| i < j || self.get(i, j) == self.get(j, i))
    }

    /// The unique integer vector with coordinate gcd 1 that is a positive
    /// multiple of `self`. Errors on the zero vector.
    pub fn primitive_normalized(&self) -> Result<ConeVector> {
        let ints = self.integer_row()?;
        Ok(ConeVector {
            n: self.n,
            coords: ints.into_iter().map(Rational::from_integer).collect(),
        })
    }

    /// Scale to integers with gcd 1, preserving direction.
    pub fn integer_row(&self) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(integer_row_of(&self.coords))
    }

    /// Coordinates as `i64` when every coordinate is an integer that fits.
    pub fn as_i64s(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    i64::try_from(c.numer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Primitive integer coordinates, via the `i64` fast path.
    pub fn primitive_i64s(&self) -> Result<Vec<i64>> {
        let prim = self.primitive_normalized()?;
        prim.as_i64s().ok_or(Error::Overflow)
    }

    /// Render as the n-by-n matrix with zero diagonal, one row per line.
    pub fn matrix_string(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n)
                .map(|j| {
                    if i == j {
                        "0".to_string()
                    } else {
                        format_rational(self.get(i, j))
                    }
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for ConeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ConeVector(n={}, [{}])",
            self.n,
            self.coords
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Clear denominators and divide by the gcd, preserving direction.
/// Errors on the zero row.
pub(crate) fn integer_row_checked(coords: &[Rational]) -> Result<Vec<BigInt>> {
    if coords.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(integer_row_of(coords))
}

fn integer_row_of(coords: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coords {
        if !c.is_zero() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let mut ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for v in &mut ints {
            *v /= &gcd;
        }
    }
    ints
}

/// Vector indexed by unordered pairs `{i, j}`, `i < j`, in lexicographic
/// order; used for the symmetrized (semi-metric) side.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SymVector {
    n: usize,
    coords: Vec<Rational>,
}

pub fn sym_pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

pub fn sym_pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= n);
    (i - 1) * n - i * (i - 1) / 2 + (j - i - 1)
}

pub fn sym_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

impl SymVector {
    pub fn zero(n: usize) -> Self {
        SymVector {
            n,
            coords: vec![Rational::zero(); sym_pair_count(n)],
        }
    }

    pub fn from_rationals(n: usize, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != sym_pair_count(n) {
            return Err(Error::DimensionMismatch(coords.len(), sym_pair_count(n)));
        }
        Ok(SymVector { n, coords })
    }

    pub fn from_integers(n: usize, coords: &[i64]) -> Result<Self> {
        Self::from_rationals(
            n,
            coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        &self.coords[sym_pair_index(self.n, a, b)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let idx = sym_pair_index(self.n, a, b);
        self.coords[idx] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &SymVector) -> Result<Rational> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut acc = Rational::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc += a * b;
        }
        Ok(acc)
    }
}

fn i128_row(row: &[BigInt]) -> Option<Vec<i128>> {
    row.iter().map(i128::try_from).map(|r| r.ok()).collect()
}

/// Incremental exact rank over integer rows: fraction-free elimination with
/// gcd reduction after every step. Rows are reduced against an echelon basis
/// kept in `i128`; on overflow the whole basis escalates to `BigInt`.
pub struct IntRankBasis {
    cols: usize,
    small: Vec<(usize, Vec<i128>)>,
    big: Vec<(usize, Vec<BigInt>)>,
    escalated: bool,
}

impl IntRankBasis {
    pub fn new(cols: usize) -> Self {
        IntRankBasis {
            cols,
            small: Vec::new(),
            big: Vec::new(),
            escalated: false,
        }
    }

    pub fn rank(&self) -> usize {
        if self.escalated {
            self.big.len()
        } else {
            self.small.len()
        }
    }

    /// Insert a row; returns true when it enlarges the span.
    pub fn insert_i64(&mut self, row: &[i64]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        if !self.escalated {
            let r: Vec<i128> = row.iter().map(|&v| v as i128).collect();
            match self.try_insert_small(r) {
                Some(grew) => return grew,
                None => self.escalate(),
            }
        }
        self.insert_big_row(row.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn insert_big(&mut self, row: &[BigInt]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        if !self.escalated {
            if let Some(r) = i128_row(row) {
                match self.try_insert_small(r) {
                    Some(grew) => return grew,
                    None => self.escalate(),
                }
            } else {
                self.escalate();
            }
        }
        self.insert_big_row(row.to_vec())
    }

    fn try_insert_small(&mut self, mut row: Vec<i128>) -> Option<bool> {
        for (pivot, basis) in &self.small {
            let f = row[*pivot];
            if f == 0 {
                continue;
            }
            let lead = basis[*pivot];
            for (r, b) in row.iter_mut().zip(basis) {
                *r = lead.checked_mul(*r)?.checked_sub(f.checked_mul(*b)?)?;
            }
            reduce_i128(&mut row);
        }
        match row.iter().position(|&v| v != 0) {
            None => Some(false),
            Some(pivot) => {
                reduce_i128(&mut row);
                let pos = self
                    .small
                    .binary_search_by_key(&pivot, |(p, _)| *p)
                    .unwrap_err();
                self.small.insert(pos, (pivot, row));
                Some(true)
            }
        }
    }

    fn escalate(&mut self) {
        self.big = self
            .small
            .iter()
            .map(|(p, r)| (*p, r.iter().map(|&v| BigInt::from(v)).collect()))
            .collect();
        self.small.clear();
        self.escalated = true;
    }

    fn insert_big_row(&mut self, mut row: Vec<BigInt>) -> bool {
        for (pivot, basis) in &self.big {
            if row[*pivot].is_zero() {
                continue;
            }
            let f = row[*pivot].clone();
            let lead = basis[*pivot].clone();
            for (r, b) in row.iter_mut().zip(basis) {
                *r = &*r * &lead - &f * b;
            }
            reduce_big(&mut row);
        }
        match row.iter().position(|v| !v.is_zero()) {
            None => false,
            Some(pivot) => {
                reduce_big(&mut row);
                let pos = self
                    .big
                    .binary_search_by_key(&pivot, |(p, _)| *p)
                    .unwrap_err();
                self.big.insert(pos, (pivot, row));
                true
            }
        }
    }
}

fn reduce_i128(row: &mut [i128]) {
    let mut g: i128 = 0;
    for &v in row.iter() {
        g = gcd_i128(g, v);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn reduce_big(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Exact rank of a set of vectors (0 for an empty list).
pub fn rank(vectors: &[ConeVector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let mut basis = IntRankBasis::new(first.dim());
    for v in vectors {
        if v.n() != first.n() {
            return Err(Error::DimensionMismatch(v.n(), first.n()));
        }
        if v.is_zero() {
            continue;
        }
        basis.insert_big(&v.integer_row()?);
    }
    Ok(basis.rank())
}

/// Rank of integer rows.
pub fn rank_rows(rows: &[Vec<i64>], cols: usize) -> usize {
    let mut basis = IntRankBasis::new(cols);
    for r in rows {
        basis.insert_i64(r);
    }
    basis.rank()
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Divide an integer row by its gcd, preserving direction. Errors on zero.
pub fn primitive_i64_row(row: &mut Vec<i64>) -> Result<()> {
    let mut g: i64 = 0;
    for &v in row.iter() {
        g = gcd_i64(g, v);
    }
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
    Ok(())
}
