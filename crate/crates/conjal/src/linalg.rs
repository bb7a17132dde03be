//! Exact dense linear algebra over field scalars, shared by the conjugation
//! solver and the ideal membership deciders. Pivoting order is fixed
//! (first nonzero entry, scanning rows top to bottom) so solutions are
//! deterministic.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarRing};

/// Solves `A x = b` over a field. Returns a particular solution with every
/// free variable set to zero, or `None` when the system is inconsistent.
#[allow(clippy::needless_range_loop)] // elimination touches two rows at once
pub(crate) fn solve(
    ring: ScalarRing,
    rows: &[Vec<Scalar>],
    rhs: &[Scalar],
) -> Result<Option<Vec<Scalar>>> {
    if !ring.is_field() {
        return Err(Error::NotAField(ring));
    }
    let m = rows.len();
    debug_assert_eq!(m, rhs.len());
    let n = rows.first().map_or(0, Vec::len);

    // augmented matrix
    let mut a: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..n {
        let Some(found) = (pivot_row..m).find(|r| !a[*r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, found);
        let inv = a[pivot_row][col].inv()?;
        for v in a[pivot_row].iter_mut() {
            *v = v.mul_raw(&inv);
        }
        for r in 0..m {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=n {
                    let delta = factor.mul_raw(&a[pivot_row][c]);
                    a[r][c] = a[r][c].sub_raw(&delta);
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }

    // inconsistent when a zero row has nonzero rhs
    for r in pivot_row..m {
        if !a[r][n].is_zero() {
            return Ok(None);
        }
    }

    let mut x: Vec<Scalar> = (0..n).map(|_| ring.zero()).collect();
    for (r, col) in pivot_cols.iter().enumerate() {
        x[*col] = a[r][n].clone();
    }
    Ok(Some(x))
}
