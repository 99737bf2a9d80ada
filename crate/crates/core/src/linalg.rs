//! Exact Gaussian elimination over Q(ω_N): ranks of spans and coordinates of
//! a vector in a span.

use crate::coefficients::Cyclotomic;

/// Rank of the span of `vectors` (all of the same length and order).
pub fn rank(vectors: &[Vec<Cyclotomic>]) -> usize {
    let mut pivots: Vec<(usize, Vec<Cyclotomic>)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (p, row) in &pivots {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].inv().expect("nonzero pivot");
            let row: Vec<Cyclotomic> = v.iter().map(|x| x * &inv).collect();
            pivots.push((p, row));
        }
    }
    pivots.len()
}

/// Coordinates c with Σ c_k basis[k] = target, or `None` when target is
/// outside the span. Free coordinates are set to zero.
pub fn solve_in_span(basis: &[Vec<Cyclotomic>], target: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let k = basis.len();
    let len = target.len();
    let order = target.first().map(|c| c.order()).or_else(|| basis.first().and_then(|b| b.first()).map(|c| c.order()))?;
    // Augmented system: rows are vector coordinates, columns the basis vectors plus target.
    let mut rows: Vec<Vec<Cyclotomic>> = (0..len)
        .map(|r| {
            let mut row: Vec<Cyclotomic> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..len).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == len {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut coords = vec![Cyclotomic::zero(order); k];
    for (i, &c) in pivot_cols.iter().enumerate() {
        coords[c] = rows[i][k].clone();
    }
    Some(coords)
}
