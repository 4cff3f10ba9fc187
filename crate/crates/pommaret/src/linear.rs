//! Invertible linear changes of variables and small dense exact linear
//! algebra (row reduction, kernels, inverses) over a coefficient field.

use crate::field::CoefficientField;

/// An invertible n×n matrix; row i describes the image of variable x_{i+1}
/// as a linear form in x₁,…,x_n.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearChange<C> {
    matrix: Vec<Vec<C>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square")]
    NotSquare,
}

impl<C: Clone + PartialEq> LinearChange<C> {
    pub fn new<F>(matrix: Vec<Vec<C>>, field: &F) -> Result<Self, LinearError>
    where
        F: CoefficientField<Elem = C>,
    {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(LinearError::NotSquare);
        }
        if invert(&matrix, field).is_none() {
            return Err(LinearError::Singular);
        }
        Ok(LinearChange { matrix })
    }

    pub fn identity<F>(n: usize, field: &F) -> Self
    where
        F: CoefficientField<Elem = C>,
    {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearChange { matrix }
    }

    /// Elementary move x_i ↦ x_i + c·x_j (1-based indices).
    pub fn elementary<F>(n: usize, i: usize, j: usize, c: C, field: &F) -> Self
    where
        F: CoefficientField<Elem = C>,
    {
        assert!(i != j && i >= 1 && j >= 1 && i <= n && j <= n);
        let mut change = Self::identity(n, field);
        change.matrix[i - 1][j - 1] = c;
        change
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<C>] {
        &self.matrix
    }

    pub fn is_identity<F>(&self, field: &F) -> bool
    where
        F: CoefficientField<Elem = C>,
    {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, c)| {
                if i == j {
                    field.is_one(c)
                } else {
                    field.is_zero(c)
                }
            })
        })
    }

    /// Matrix product: applying `self` after `first` equals applying
    /// `first.then(self)` once.
    pub fn then<F>(&self, first: &LinearChange<C>, field: &F) -> LinearChange<C>
    where
        F: CoefficientField<Elem = C>,
    {
        // Substituting with A, then with B, composes to the substitution
        // with A·B, so "first A then B" carries the product matrix A·B.
        let n = self.dim();
        let a = &first.matrix;
        let b = &self.matrix;
        let mut out = vec![vec![field.zero(); n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let mut acc = field.zero();
                for (k, a_ik) in a[i].iter().enumerate() {
                    acc = field.add(&acc, &field.mul(a_ik, &b[k][j]));
                }
                *entry = acc;
            }
        }
        LinearChange { matrix: out }
    }

    pub fn inverse<F>(&self, field: &F) -> LinearChange<C>
    where
        F: CoefficientField<Elem = C>,
    {
        let inv = invert(&self.matrix, field).expect("stored matrix must be invertible");
        LinearChange { matrix: inv }
    }
}

/// Gauss–Jordan inverse; `None` when singular.
pub fn invert<F: CoefficientField>(
    matrix: &[Vec<F::Elem>],
    field: &F,
) -> Option<Vec<Vec<F::Elem>>> {
    let n = matrix.len();
    let mut work: Vec<Vec<F::Elem>> = matrix.to_vec();
    let mut inv: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !field.is_zero(&work[r][col]))?;
        work.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot_inv = field.inv(&work[col][col]);
        for j in 0..n {
            work[col][j] = field.mul(&work[col][j], &pivot_inv);
            inv[col][j] = field.mul(&inv[col][j], &pivot_inv);
        }
        for r in 0..n {
            if r != col && !field.is_zero(&work[r][col]) {
                let factor = work[r][col].clone();
                for j in 0..n {
                    let w = field.mul(&factor, &work[col][j]);
                    work[r][j] = field.sub(&work[r][j], &w);
                    let v = field.mul(&factor, &inv[col][j]);
                    inv[r][j] = field.sub(&inv[r][j], &v);
                }
            }
        }
    }
    Some(inv)
}

/// In-place reduction to row echelon form; returns the rank. Rows may be
/// longer than the column count implied by the pivot search (ragged input
/// is a bug, asserted).
pub fn row_reduce<F: CoefficientField>(rows: &mut Vec<Vec<F::Elem>>, field: &F) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let mut rank = 0;
    for col in 0..cols {
        let pivot = match (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][col]);
        for j in col..cols {
            rows[rank][j] = field.mul(&rows[rank][j], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for j in col..cols {
                    let v = field.mul(&factor, &rows[rank][j]);
                    rows[r][j] = field.sub(&rows[r][j], &v);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rank
}

/// Basis of the kernel of the matrix (rows = equations, columns = unknowns).
pub fn kernel_basis<F: CoefficientField>(
    rows: &[Vec<F::Elem>],
    cols: usize,
    field: &F,
) -> Vec<Vec<F::Elem>> {
    let mut work: Vec<Vec<F::Elem>> = rows.to_vec();
    row_reduce(&mut work, field);
    let mut pivot_of_row: Vec<usize> = Vec::new();
    for row in &work {
        let p = row
            .iter()
            .position(|c| !field.is_zero(c))
            .expect("echelon rows are nonzero");
        pivot_of_row.push(p);
    }
    let pivots: std::collections::HashSet<usize> = pivot_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut vec = vec![field.zero(); cols];
        vec[free] = field.one();
        for (r, &p) in pivot_of_row.iter().enumerate() {
            // pivot columns solve to minus the free column entry
            vec[p] = field.neg(&work[r][free]);
        }
        basis.push(vec);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q(v: i64) -> num_rational::BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn singular_rejected() {
        let f = Rationals;
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(LinearChange::new(m, &f).unwrap_err(), LinearError::Singular);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Rationals;
        let a = LinearChange::new(vec![vec![q(1), q(3)], vec![q(0), q(1)]], &f).unwrap();
        let id = a.inverse(&f).then(&a, &f);
        assert!(id.is_identity(&f));
    }

    #[test]
    fn rank_and_kernel() {
        let f = Rationals;
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let mut w = rows.clone();
        assert_eq!(row_reduce(&mut w, &f), 1);
        let kernel = kernel_basis(&rows, 3, &f);
        assert_eq!(kernel.len(), 2);
        for v in kernel {
            let dot = v
                .iter()
                .zip(&rows[0])
                .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            assert!(f.is_zero(&dot));
        }
    }
}
