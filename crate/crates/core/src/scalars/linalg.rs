use super::field::Field;

/// Solve `A x = b` by Gaussian elimination with first-available pivots.
///
/// Returns one solution (free variables set to zero) or `None` when the
/// system is inconsistent. The solution is checked by back-substitution
/// before it is returned.
pub fn rf_solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "row count mismatch");
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            assert_eq!(r.len(), cols, "ragged matrix");
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse();
        for x in m[row].iter_mut() {
            *x = x.times(&inv);
        }
        let prow = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r == row || line[col].is_zero() {
                continue;
            }
            let f = line[col].clone();
            for (x, px) in line.iter_mut().zip(&prow).skip(col) {
                if !px.is_zero() {
                    *x = x.minus(&f.times(px));
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if m[row..].iter().any(|line| !line[cols].is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    for (line, bi) in a.iter().zip(b) {
        let mut acc = F::zero();
        for (aij, xj) in line.iter().zip(&x) {
            if !aij.is_zero() && !xj.is_zero() {
                acc.fma(aij, xj);
            }
        }
        if acc != *bi {
            return None;
        }
    }
    Some(x)
}

/// Rank of a matrix over a field.
pub fn rank<F: Field>(a: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse();
        let prow: Vec<F> = m[row].iter().map(|x| x.times(&inv)).collect();
        for line in m.iter_mut().skip(row + 1) {
            if line[col].is_zero() {
                continue;
            }
            let f = line[col].clone();
            for (x, px) in line.iter_mut().zip(&prow).skip(col) {
                if !px.is_zero() {
                    *x = x.minus(&f.times(px));
                }
            }
        }
        row += 1;
        if row == rows {
            break;
        }
    }
    row
}
