//! Gaussian elimination over an exact field.

use super::Domain;

/// Reduces `rows` to row echelon form in place and returns the rank.
pub fn row_reduce<D: Domain>(d: &D, rows: &mut [Vec<D::Elem>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !d.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = d.inv(&rows[rank][col]).expect("nonzero pivot");
        let pivot_row: Vec<D::Elem> = rows[rank].iter().map(|x| d.mul(x, &inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || d.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = d.sub(x, &d.mul(&factor, pv));
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank<D: Domain>(d: &D, rows: &[Vec<D::Elem>]) -> usize {
    let mut work = rows.to_vec();
    row_reduce(d, &mut work)
}

pub fn determinant<D: Domain>(d: &D, matrix: &[Vec<D::Elem>]) -> D::Elem {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut det = d.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !d.is_zero(&a[r][col])) else {
            return d.zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = d.neg(&det);
        }
        det = d.mul(&det, &a[col][col]);
        let inv = d.inv(&a[col][col]).expect("nonzero pivot");
        for r in col + 1..n {
            if d.is_zero(&a[r][col]) {
                continue;
            }
            let factor = d.mul(&a[r][col], &inv);
            for c in col..n {
                let t = d.mul(&factor, &a[col][c]);
                a[r][c] = d.sub(&a[r][c], &t);
            }
        }
    }
    det
}

/// `M · v`.
pub fn mat_vec<D: Domain>(d: &D, m: &[Vec<D::Elem>], v: &[D::Elem]) -> Vec<D::Elem> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(d.zero(), |acc, (a, b)| d.add(&acc, &d.mul(a, b))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{FiniteField, Rationals};

    #[test]
    fn rank_and_det_over_q() {
        let k = Rationals;
        let m: Vec<Vec<_>> = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| k.from_int(x)).collect())
            .collect();
        assert_eq!(rank(&k, &m), 2);
        assert_eq!(determinant(&k, &m), k.zero());
        let id: Vec<Vec<_>> = (0..3)
            .map(|i| (0..3).map(|j| k.from_int((i == j) as i64 * 2)).collect())
            .collect();
        assert_eq!(determinant(&k, &id), k.from_int(8));
    }

    #[test]
    fn rank_over_prime_field() {
        let f = FiniteField::prime(5).unwrap();
        let m = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(rank(&f, &m), 1);
    }
}
