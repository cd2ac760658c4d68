//! Small dense exact-rational elimination helpers: reduced row echelon,
//! linear solves and nullspaces. Sizes here are at most a few dozen columns.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::Rational;

pub(crate) fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub(crate) fn rat_row(row: &[i64]) -> Vec<Rational> {
    row.iter().map(|&v| rat(v)).collect()
}

/// In-place reduced row echelon form; returns the pivot columns.
pub(crate) fn rref(mat: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for v in &mut mat[r] {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for k in 0..cols {
                    let delta = &f * &mat[r][k];
                    mat[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Particular solution of `A x = b`, if consistent.
pub(crate) fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    debug_assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

/// Basis of `{x : A x = 0}` from the free columns of the RREF.
pub(crate) fn nullspace(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut mat = a.to_vec();
    let pivots = rref(&mut mat);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = rat(1);
        for (row, &pc) in mat.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scale a rational vector to a primitive integer row, requiring it to fit.
pub(crate) fn primitive_int_vec(v: &[Rational]) -> crate::Result<Vec<i64>> {
    let cone = crate::exact::integer_row_checked(v)?;
    cone.iter()
        .map(|b| i64::try_from(b).map_err(|_| crate::Error::Overflow))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_nullspace() {
        let a = vec![rat_row(&[1, 2, 3]), rat_row(&[0, 1, 1])];
        let x = solve(&a, &[rat(6), rat(2)]).unwrap();
        // check A x = b
        assert_eq!(&x[0] + &x[1] * rat(2) + &x[2] * rat(3), rat(6));
        assert_eq!(&x[1] + &x[2], rat(2));
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        let z = &ns[0];
        assert!((&z[0] + &z[1] * rat(2) + &z[2] * rat(3)).is_zero());
        assert!(solve(&a[..1].to_vec(), &[rat(1)]).is_some());
        let inconsistent = vec![rat_row(&[1, 0, 0]), rat_row(&[1, 0, 0])];
        assert!(solve(&inconsistent, &[rat(1), rat(2)]).is_none());
    }
}
