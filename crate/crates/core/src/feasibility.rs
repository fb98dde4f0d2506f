//! Exact Fourier-Motzkin elimination for homogeneous strict systems.
//!
//! Everything here decides feasibility of `A x > 0` (every row strictly
//! positive) over the rationals. Rows with all-zero coefficients read
//! `0 > 0` and kill the system. Exponential in the worst case, which is
//! acceptable at the ranks this crate targets.

use crate::exact::{Covector, Rational};
use num_traits::Signed;
use num_traits::Zero;

/// Is there a point with `row . x > 0` for every row?
pub fn strictly_feasible(rows: &[Vec<Rational>]) -> bool {
    let mut rows: Vec<Vec<Rational>> = rows.to_vec();
    loop {
        if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return false;
        }
        if rows.is_empty() {
            return true;
        }
        let width = rows[0].len();
        if width == 0 {
            // only reachable when a zero-width row survived, caught above
            return false;
        }
        let k = width - 1;
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut zero = Vec::new();
        for row in rows {
            if row[k].is_positive() {
                pos.push(row);
            } else if row[k].is_negative() {
                neg.push(row);
            } else {
                let mut r = row;
                r.truncate(k);
                zero.push(r);
            }
        }
        let mut next = zero;
        for p in &pos {
            for n in &neg {
                // positive multipliers cancel coordinate k and preserve strictness
                let a = -n[k].clone(); // > 0
                let b = p[k].clone(); // > 0
                let combined: Vec<Rational> = (0..k)
                    .map(|j| &a * &p[j] + &b * &n[j])
                    .collect();
                next.push(combined);
            }
        }
        rows = next;
    }
}

/// Restrict linear forms to the hyperplane `alpha = 0` by eliminating one
/// coordinate. The result has one coordinate fewer per row.
pub fn restrict_to_hyperplane(alpha: &Covector, rows: &[Covector]) -> Vec<Vec<Rational>> {
    let k = alpha
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("hyperplane normal must be nonzero");
    let ak = &alpha.coords()[k];
    rows.iter()
        .map(|row| {
            let bk = &row.coords()[k];
            row.coords()
                .iter()
                .zip(alpha.coords())
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, (bj, aj))| bj - &(bk * aj / ak))
                .collect()
        })
        .collect()
}
