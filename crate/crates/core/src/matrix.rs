//! Dense exact matrices and Gaussian elimination.

use crate::field::Field;

/// A dense row-major matrix over `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: Vec<Vec<F::Elem>>,
    ncols: usize,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, nrows: usize, ncols: usize) -> Self {
        let rows = vec![vec![field.zero(); ncols]; nrows];
        Matrix { field, rows, ncols }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.rows[i][i] = m.field.one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(field: F, ncols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix { field, rows, ncols }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.rows[i][j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.rows[i][j] = v;
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r[..i.min(self.ncols)].iter().all(|x| self.field.is_zero(x)))
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                row.iter().zip(v).fold(self.field.zero(), |acc, (a, b)| {
                    self.field.add(&acc, &self.field.mul(a, b))
                })
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        row_reduce(&self.field, &mut rows, self.ncols).len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        nullspace(&self.field, &self.rows, self.ncols)
    }
}

/// Brings `rows` into reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn row_reduce<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if field.is_zero(&other[c]) {
                continue;
            }
            let factor = other[c].clone();
            for (x, p) in other.iter_mut().zip(pivot_row.iter()).skip(c) {
                *x = field.sub_mul(x, &factor, p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    let mut rows = rows.to_vec();
    row_reduce(field, &mut rows, ncols).len()
}

/// A basis of `{x : rows * x = 0}`.
pub fn nullspace<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut reduced = rows.to_vec();
    let pivots = row_reduce(field, &mut reduced, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![field.zero(); ncols];
            x[free] = field.one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                x[p] = field.neg(&row[free]);
            }
            x
        })
        .collect()
}

/// Coefficients `c` with `sum c_i * vectors[i] = target`, if any exist.
pub fn solve_combination<F: Field>(
    field: &F,
    vectors: &[Vec<F::Elem>],
    target: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let m = vectors.len();
    let n = target.len();
    // Augmented system: rows are coordinates, columns are the vectors then the target.
    let mut rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            vectors
                .iter()
                .map(|v| v[i].clone())
                .chain(std::iter::once(target[i].clone()))
                .collect()
        })
        .collect();
    let pivots = row_reduce(field, &mut rows, m + 1);
    if pivots.last() == Some(&m) {
        return None;
    }
    let mut coeffs = vec![field.zero(); m];
    for (row, &p) in rows.iter().zip(&pivots) {
        coeffs[p] = row[m].clone();
    }
    Some(coeffs)
}
