//! Dense linear algebra: a multiprecision null-space extractor for the
//! Hermite-Pade linear systems and a small `f64` LU solver for the
//! equilibrium collocation systems.

use rug::{Complex, Float};

use crate::precision::{cnorm2, cone, czero};
use crate::{Error, Result};

/// Null vector of an under-determined homogeneous system.
#[derive(Debug, Clone)]
pub struct NullVector {
    pub vector: Vec<Complex>,
    pub rank: usize,
    pub nullity: usize,
}

/// Extract one null vector of the `rows x cols` matrix by Gaussian
/// elimination with full pivoting.
///
/// Rows are equilibrated first so that the rank decision is relative to the
/// row scale. The Hermite-Pade systems are exponentially ill-conditioned:
/// their trailing pivots are genuinely tiny but meaningful, so elimination
/// must not stop at a mid-precision threshold (that would silently solve a
/// truncated system). Only pivots at the rounding floor `2^{-(bits-64)}`,
/// which full pivoting can no longer distinguish from cancellation noise,
/// terminate the sweep. The returned vector is deterministic: the first free
/// column (in original column order among the non-pivot columns) is set to 1
/// and the rest to 0.
pub fn null_vector(mut m: Vec<Vec<Complex>>, cols: usize, bits: u32) -> Result<NullVector> {
    let rows = m.len();
    for row in &m {
        assert_eq!(row.len(), cols);
    }
    // row equilibration
    for row in m.iter_mut() {
        let mut max2 = Float::with_val(bits, 0);
        for e in row.iter() {
            let n2 = cnorm2(e);
            if n2 > max2 {
                max2 = n2;
            }
        }
        if max2 != 0 {
            let scale = Float::with_val(bits, max2.sqrt_ref()).recip();
            for e in row.iter_mut() {
                *e *= &scale;
            }
        }
    }
    let thresh2 = {
        let mut t = Float::with_val(bits, 1u32);
        t >>= 2 * bits.saturating_sub(64);
        t
    };

    let mut col_perm: Vec<usize> = (0..cols).collect();
    let mut rank = 0usize;
    let max_rank = rows.min(cols);
    while rank < max_rank {
        // full pivot search over the trailing block
        let mut best2 = Float::with_val(bits, 0);
        let mut best = (rank, rank);
        for (i, row) in m.iter().enumerate().skip(rank) {
            for j in rank..cols {
                let n2 = cnorm2(&row[col_perm[j]]);
                if n2 > best2 {
                    best2 = n2;
                    best = (i, j);
                }
            }
        }
        if best2 <= thresh2 {
            break;
        }
        m.swap(rank, best.0);
        col_perm.swap(rank, best.1);
        let pivot = m[rank][col_perm[rank]].clone();
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let factor = Complex::with_val(bits, &row[col_perm[rank]] / &pivot);
            if *factor.real() == 0 && *factor.imag() == 0 {
                continue;
            }
            for &cj in col_perm.iter().skip(rank) {
                let delta = Complex::with_val(bits, &factor * &prow[cj]);
                row[cj] -= delta;
            }
        }
        rank += 1;
    }

    let nullity = cols - rank;
    if nullity == 0 {
        return Err(Error::IllConditioned(
            "homogeneous system has full column rank; no null vector".into(),
        ));
    }
    // free columns in original order; pick the first as the normalisation
    let mut free: Vec<usize> = col_perm[rank..].to_vec();
    free.sort_unstable();
    let free_col = free[0];

    let mut x = vec![czero(bits); cols];
    x[free_col] = cone(bits);
    for i in (0..rank).rev() {
        let mut acc = czero(bits);
        for &cj in col_perm.iter().take(cols).skip(i + 1) {
            acc += Complex::with_val(bits, &m[i][cj] * &x[cj]);
        }
        let pivot = &m[i][col_perm[i]];
        x[col_perm[i]] = Complex::with_val(bits, Complex::with_val(bits, -acc) / pivot);
    }
    Ok(NullVector {
        vector: x,
        rank,
        nullity,
    })
}

/// Solve the square `f64` system `a x = b` in place by partial-pivot LU.
pub fn solve_f64(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|r| r.len() == n));
    for k in 0..n {
        let (pivot_row, pivot_abs) = (k..n)
            .map(|i| (i, a[i][k].abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pivot_abs < 1e-300 {
            return Err(Error::IllConditioned(format!(
                "LU pivot {pivot_abs:e} at column {k}"
            )));
        }
        a.swap(k, pivot_row);
        b.swap(k, pivot_row);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = b[i];
        for j in i + 1..n {
            acc -= a[i][j] * x[j];
        }
        x[i] = acc / a[i][i];
    }
    Ok(x)
}
