//! Exact phase-one simplex over the rationals.
//!
//! Only feasibility is needed: is a lattice point inside the Newton
//! polyhedron `conv(G) + R^n_{>=0}` of a finite set `G` of exponent vectors?

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Decides `∃ λ >= 0, Σ λ_g = 1, Σ λ_g g <= point` exactly.
pub fn in_newton_polyhedron(point: &[u32], vertices: &[&[u32]]) -> bool {
    let n = point.len();
    let m = vertices.len();
    if m == 0 {
        return false;
    }
    // Dominated by a single vertex: no pivoting needed.
    if vertices
        .iter()
        .any(|v| v.iter().zip(point).all(|(a, b)| a <= b))
    {
        return true;
    }
    // Columns: λ_0..λ_{m-1}, slack s_0..s_{n-1}, artificial r. Rows: one per
    // coordinate (Σ λ g_i + s_i = p_i) and the convexity row (Σ λ + r = 1).
    let cols = m + n + 1;
    let rows = n + 1;
    let int = |x: u32| BigRational::from_integer(BigInt::from(x));
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(rows);
    for i in 0..n {
        let mut row = vec![BigRational::zero(); cols];
        for (g, v) in vertices.iter().enumerate() {
            row[g] = int(v[i]);
        }
        row[m + i] = BigRational::one();
        t.push(row);
        rhs.push(int(point[i]));
    }
    let mut conv = vec![BigRational::zero(); cols];
    for c in conv.iter_mut().take(m) {
        *c = BigRational::one();
    }
    conv[m + n] = BigRational::one();
    t.push(conv);
    rhs.push(BigRational::one());

    let mut basis: Vec<usize> = (0..n).map(|i| m + i).chain([m + n]).collect();

    // Minimize r. Reduced costs relative to the current basis: r is basic in
    // the last row, so cost_j = -t[n][j] for nonbasic j.
    let mut cost: Vec<BigRational> = (0..cols).map(|j| -t[n][j].clone()).collect();
    cost[m + n] = BigRational::zero();
    let mut obj = -rhs[n].clone();

    // Bland's rule: smallest index with negative reduced cost.
    while let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let ratio = &rhs[r] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        let piv = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x /= &piv;
        }
        rhs[pr] /= &piv;
        let prow = t[pr].clone();
        let prhs = rhs[pr].clone();
        for r in 0..rows {
            if r == pr || t[r][enter].is_zero() {
                continue;
            }
            let f = t[r][enter].clone();
            for (x, p) in t[r].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            rhs[r] -= &f * &prhs;
        }
        let f = cost[enter].clone();
        for (c, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *c -= &f * p;
            }
        }
        obj -= &f * &prhs;
        basis[pr] = enter;
    }
    // obj holds -(value of r) at the optimum.
    obj.is_zero()
}
