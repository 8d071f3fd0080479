//! Tiny dense complex linear solver used for the 16x16 systems that come up
//! in multivector inversion and the reciprocal gamma basis.

use num_complex::Complex64;

/// Solves `A x = b` in place by Gaussian elimination with partial pivoting.
/// Returns `None` when a pivot falls below `rel_tol` times the largest
/// original entry (rank deficiency at working precision).
pub fn solve(a: &mut [Vec<Complex64>], b: &mut [Complex64], rel_tol: f64) -> Option<Vec<Complex64>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);

    let scale = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|c| c.norm())
        .fold(0.0_f64, f64::max)
        .max(1.0);

    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, a[r][col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if pivot_mag <= rel_tol * scale {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);

        let pivot = a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / pivot;
            if factor == Complex64::ZERO {
                continue;
            }
            for k in col..n {
                let t = a[col][k];
                a[row][k] -= factor * t;
            }
            let t = b[col];
            b[row] -= factor * t;
        }
    }

    let mut x = vec![Complex64::ZERO; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}
