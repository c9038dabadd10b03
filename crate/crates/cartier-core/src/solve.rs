//! Exact sparse linear solving over Q(i).
//!
//! Used to invert the degree-0 part of tensor elements: the left
//! multiplication matrix is assembled column by column and `M·x = b` is
//! solved by Gauss-Jordan elimination with a sparsity-first pivot choice.

use std::collections::BTreeMap;

use crate::scalar::GaussRat;

/// Solves `M·x = b` where column `j` of `M` is `cols[j]` as (row, value)
/// pairs. Returns `None` when `M` is singular (no unique solution).
pub fn solve_sparse(
    dim: usize,
    cols: &[Vec<(usize, GaussRat)>],
    b: &[(usize, GaussRat)],
) -> Option<Vec<(usize, GaussRat)>> {
    assert_eq!(cols.len(), dim, "column count must match dimension");

    let mut rows: Vec<BTreeMap<usize, GaussRat>> = vec![BTreeMap::new(); dim];
    for (j, col) in cols.iter().enumerate() {
        for (r, v) in col {
            if !v.is_zero() {
                rows[*r].insert(j, v.clone());
            }
        }
    }
    let mut rhs = vec![GaussRat::zero(); dim];
    for (r, v) in b {
        rhs[*r] = v.clone();
    }

    let mut used = vec![false; dim];
    let mut pivot_row_of_col = vec![usize::MAX; dim];

    for col in 0..dim {
        // Pivot on the sparsest available row to limit fill-in.
        let pivot = (0..dim)
            .filter(|&r| !used[r] && rows[r].contains_key(&col))
            .min_by_key(|&r| rows[r].len())?;
        used[pivot] = true;
        pivot_row_of_col[col] = pivot;

        let pv_inv = rows[pivot][&col].inv().ok()?;
        // Normalize the pivot row so the pivot entry becomes 1.
        let prow: Vec<(usize, GaussRat)> = rows[pivot]
            .iter()
            .map(|(c, v)| (*c, v * &pv_inv))
            .collect();
        rows[pivot] = prow.iter().cloned().collect();
        let scaled = &rhs[pivot] * &pv_inv;
        rhs[pivot] = scaled;

        let prhs = rhs[pivot].clone();
        for r in 0..dim {
            if r == pivot {
                continue;
            }
            let factor = match rows[r].get(&col) {
                Some(f) => f.clone(),
                None => continue,
            };
            for (c, v) in &prow {
                let delta = &factor * v;
                match rows[r].get_mut(c) {
                    Some(slot) => {
                        *slot = &*slot - &delta;
                        if slot.is_zero() {
                            rows[r].remove(c);
                        }
                    }
                    None => {
                        if !delta.is_zero() {
                            rows[r].insert(*c, -&delta);
                        }
                    }
                }
            }
            let reduced = &rhs[r] - &(&factor * &prhs);
            rhs[r] = reduced;
        }
    }

    let mut solution = Vec::new();
    for col in 0..dim {
        let r = pivot_row_of_col[col];
        if !rhs[r].is_zero() {
            solution.push((col, rhs[r].clone()));
        }
    }
    Some(solution)
}
