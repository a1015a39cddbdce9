//! Exact rank of small sparse integer matrices over a chosen field.

use crate::scalar::Field;

/// A sparse row: `(column, coefficient)` pairs, columns strictly increasing.
pub type SparseRow = Vec<(usize, i64)>;

/// Rank over `F` of the matrix whose rows are given sparsely.
///
/// Rows are densified over `F` and reduced by Gaussian elimination with
/// the first nonzero entry as pivot.
pub fn rank<F: Field>(rows: &[SparseRow], ncols: usize) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    let mut dense: Vec<Vec<F>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![F::zero(); ncols];
            for &(c, x) in r {
                v[c] = F::from_i64(x);
            }
            v
        })
        .collect();
    let nrows = dense.len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !dense[r][col].is_zero()) else {
            continue;
        };
        dense.swap(rank, p);
        let inv = dense[rank][col].inv().expect("nonzero pivot");
        for x in dense[rank][col..ncols].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = dense[rank].clone();
        for row in dense.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    let v = row[c].clone() - factor.clone() * pivot_row[c].clone();
                    row[c] = v;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
