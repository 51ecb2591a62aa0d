//! Exact linear algebra over the integers and rationals.
//!
//! Matrices are small, dense, row-major `Vec<Vec<_>>`. The Hermite normal
//! form is the row-style one (row operations only, positive pivots, entries
//! above each pivot reduced into `[0, pivot)`); that form is unique, which
//! is what makes it usable as a canonical lattice basis elsewhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMat = Vec<Vec<BigInt>>;
pub type RatMat = Vec<Vec<BigRational>>;

pub fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Transpose; `cols` must be passed explicitly so a 0-row matrix still
/// transposes to the right shape.
pub fn transpose(a: &IntMat, cols: usize) -> IntMat {
    let mut t = vec![Vec::with_capacity(a.len()); cols];
    for row in a {
        debug_assert_eq!(row.len(), cols);
        for (j, x) in row.iter().enumerate() {
            t[j].push(x.clone());
        }
    }
    t
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b.iter()).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

/// `rows[target] -= q * rows[source]`, applied to `m`.
fn row_axpy(m: &mut IntMat, target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(src.iter()) {
        *t -= q * s;
    }
}

fn negate_row(m: &mut IntMat, r: usize) {
    for x in &mut m[r] {
        *x = -x.clone();
    }
}

/// Row Hermite normal form. Returns `(h, u)` with `u * a = h`, `u` unimodular,
/// and `h` in the unique echelon form described in the module docs.
pub fn row_hnf(a: &IntMat) -> (IntMat, IntMat) {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut h = a.clone();
    let mut u = identity(m);
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == m {
            break;
        }
        // Gcd-reduce the column at and below pivot_row. Each pass strictly
        // shrinks the minimal nonzero entry, so this terminates.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..m {
                if !h[r][col].is_zero() && best.is_none_or(|b| h[r][col].abs() < h[b][col].abs()) {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            h.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut cleared = true;
            for r in pivot_row + 1..m {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                row_axpy(&mut h, r, pivot_row, &q);
                row_axpy(&mut u, r, pivot_row, &q);
                if !h[r][col].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if !h[pivot_row][col].is_zero() {
            if h[pivot_row][col].is_negative() {
                negate_row(&mut h, pivot_row);
                negate_row(&mut u, pivot_row);
            }
            for r in 0..pivot_row {
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                row_axpy(&mut h, r, pivot_row, &q);
                row_axpy(&mut u, r, pivot_row, &q);
            }
            pivot_row += 1;
        }
    }
    (h, u)
}

pub fn rank(a: &IntMat) -> usize {
    let (h, _) = row_hnf(a);
    h.iter().filter(|r| r.iter().any(|x| !x.is_zero())).count()
}

/// Nonzero elementary divisors `d1 | d2 | ...` of `a`.
pub fn snf_divisors(a: &IntMat) -> Vec<BigInt> {
    let mut w = a.clone();
    let m = w.len();
    let n = if m == 0 { 0 } else { w[0].len() };
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < m && t < n {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !w[i][j].is_zero() && best.is_none_or(|(bi, bj)| w[i][j].abs() < w[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        w.swap(t, bi);
        for row in &mut w {
            row.swap(t, bj);
        }
        let mut dirty = false;
        for i in t + 1..m {
            if w[i][t].is_zero() {
                continue;
            }
            let q = w[i][t].div_floor(&w[t][t]);
            row_axpy(&mut w, i, t, &q);
            if !w[i][t].is_zero() {
                dirty = true;
            }
        }
        for j in t + 1..n {
            if w[t][j].is_zero() {
                continue;
            }
            let q = w[t][j].div_floor(&w[t][t]);
            for row in w.iter_mut() {
                let sub = &q * &row[t];
                row[j] -= sub;
            }
            if !w[t][j].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        let p = w[t][t].clone();
        let mut folded = false;
        'scan: for i in t + 1..m {
            for j in t + 1..n {
                if !(&w[i][j] % &p).is_zero() {
                    // Fold row i into row t so the non-divisible entry takes
                    // part in the next reduction round.
                    let addend = w[i].clone();
                    for (x, y) in w[t].iter_mut().zip(addend.iter()) {
                        *x += y;
                    }
                    folded = true;
                    break 'scan;
                }
            }
        }
        if folded {
            continue;
        }
        divisors.push(p.abs());
        t += 1;
    }
    divisors
}

/// HNF-reduced basis, as rows, of the right kernel `{ x in Z^cols : a x = 0 }`.
pub fn kernel_basis(a: &IntMat, cols: usize) -> IntMat {
    if a.is_empty() {
        return identity(cols);
    }
    let at = transpose(a, cols);
    let (h, u) = row_hnf(&at);
    let mut rows: IntMat = Vec::new();
    for i in 0..at.len() {
        if h[i].iter().all(|x| x.is_zero()) {
            rows.push(u[i].clone());
        }
    }
    if rows.is_empty() {
        return Vec::new();
    }
    let (hk, _) = row_hnf(&rows);
    hk.into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Exact determinant by the Bareiss fraction-free elimination.
pub fn det(a: &IntMat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

pub fn to_rational(a: &IntMat) -> RatMat {
    a.iter()
        .map(|row| {
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// One solution of `a x = b` (free variables set to zero), or None if the
/// system is inconsistent.
pub fn solve_rational(a: &RatMat, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    debug_assert_eq!(b.len(), m);
    let mut aug: RatMat = (0..m)
        .map(|i| {
            let mut r = a[i].clone();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prow = 0;
    for col in 0..n {
        if prow == m {
            break;
        }
        let Some(p) = (prow..m).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(prow, p);
        let pv = aug[prow][col].clone();
        for x in &mut aug[prow] {
            *x = &*x / &pv;
        }
        let prow_vals = aug[prow].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != prow && !row[col].is_zero() {
                let f = row[col].clone();
                for j in col..=n {
                    row[j] = &row[j] - &f * &prow_vals[j];
                }
            }
        }
        pivots.push((prow, col));
        prow += 1;
    }
    if aug[prow..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for &(r, c) in &pivots {
        x[c] = aug[r][n].clone();
    }
    Some(x)
}

/// Basis rows of the right kernel of `a` over the rationals.
pub fn rational_kernel(a: &RatMat, cols: usize) -> RatMat {
    let m = a.len();
    let mut w: RatMat = a.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == m {
            break;
        }
        let Some(p) = (prow..m).find(|&r| !w[r][col].is_zero()) else {
            continue;
        };
        w.swap(prow, p);
        let pv = w[prow][col].clone();
        for x in &mut w[prow] {
            *x = &*x / &pv;
        }
        let prow_vals = w[prow].clone();
        for (r, row) in w.iter_mut().enumerate() {
            if r != prow && !row[col].is_zero() {
                let f = row[col].clone();
                for j in 0..cols {
                    row[j] = &row[j] - &f * &prow_vals[j];
                }
            }
        }
        pivots.push((prow, col));
        prow += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for &(r, c) in &pivots {
            v[c] = -w[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Gauss-Jordan inverse; None when singular.
pub fn invert_rational(a: &RatMat) -> Option<RatMat> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut w: RatMat = (0..n)
        .map(|i| {
            let mut r = a[i].clone();
            for j in 0..n {
                r.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !w[r][col].is_zero())?;
        w.swap(col, p);
        let pv = w[col][col].clone();
        for x in &mut w[col] {
            *x = &*x / &pv;
        }
        let pivot_vals = w[col].clone();
        for (r, row) in w.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for j in 0..2 * n {
                    row[j] = &row[j] - &f * &pivot_vals[j];
                }
            }
        }
    }
    Some(w.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Integer inverse of a matrix with determinant +-1; None otherwise.
pub fn invert_unimodular(a: &IntMat) -> Option<IntMat> {
    let inv = invert_rational(&to_rational(a))?;
    let mut out = Vec::with_capacity(inv.len());
    for row in inv {
        let mut irow = Vec::with_capacity(row.len());
        for x in row {
            if !x.is_integer() {
                return None;
            }
            irow.push(x.to_integer());
        }
        out.push(irow);
    }
    Some(out)
}
