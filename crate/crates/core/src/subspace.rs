//! Subspaces of `F^n` in coordinates adapted to the standard flag.
//!
//! `V_i` is the span of the first `i` coordinate vectors. A subspace is stored
//! by its unique reduced basis in which every basis vector ends in a 1 at its
//! *last* nonzero coordinate (its pivot) and all other basis vectors vanish
//! there. The pivots are then exactly the positions where `dim(U ∩ V_i)`
//! jumps, and two subspaces are equal iff their reduced bases are equal.

use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::field::Field;
use crate::matrix::{self, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("column {column} is linearly dependent on the preceding columns")]
    DependentColumn { column: usize },
}

#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    field: F,
    n: usize,
    basis: Vec<Vec<F::Elem>>,
    // 0-based, ascending
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field == other.field && self.basis == other.basis
    }
}

impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Hash for Subspace<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.basis.hash(state);
    }
}

impl<F: Field> Subspace<F> {
    /// The span of arbitrary vectors of length `n`.
    pub fn span(field: F, n: usize, vectors: &[Vec<F::Elem>]) -> Result<Self, LinAlgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(LinAlgError::DimensionMismatch { expected: n, found: v.len() });
        }
        // Reverse coordinates so that ordinary RREF pivots on the last nonzero entry.
        let mut rows: Vec<Vec<F::Elem>> = vectors
            .iter()
            .map(|v| v.iter().rev().cloned().collect())
            .collect();
        let rev_pivots = matrix::row_reduce(&field, &mut rows, n);
        let mut basis: Vec<Vec<F::Elem>> = rows
            .into_iter()
            .map(|r| r.into_iter().rev().collect())
            .collect();
        basis.reverse();
        let pivots = rev_pivots.iter().rev().map(|&p| n - 1 - p).collect();
        Ok(Subspace { field, n, basis, pivots })
    }

    /// The span of `columns`, which must be linearly independent.
    pub fn from_columns(field: F, n: usize, columns: &[Vec<F::Elem>]) -> Result<Self, LinAlgError> {
        let mut acc = Subspace::zero(field, n);
        for (i, c) in columns.iter().enumerate() {
            if c.len() != n {
                return Err(LinAlgError::DimensionMismatch { expected: n, found: c.len() });
            }
            if acc.contains(c) {
                return Err(LinAlgError::DependentColumn { column: i + 1 });
            }
            acc = Subspace::span(acc.field.clone(), n, &[acc.basis.clone(), vec![c.clone()]].concat())?;
        }
        Ok(acc)
    }

    pub fn zero(field: F, n: usize) -> Self {
        Subspace { field, n, basis: Vec::new(), pivots: Vec::new() }
    }

    /// The flag subspace `V_i`.
    pub fn flag(field: F, n: usize, i: usize) -> Self {
        assert!(i <= n);
        let positions: Vec<usize> = (1..=i).collect();
        Self::coordinate(field, n, &positions)
    }

    /// Span of the coordinate vectors at the given 1-based positions.
    pub fn coordinate(field: F, n: usize, positions: &[usize]) -> Self {
        let vectors: Vec<_> = positions.iter().map(|&p| unit_vector(&field, n, p)).collect();
        Subspace::span(field, n, &vectors).expect("unit vectors have length n")
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient(&self) -> usize {
        self.n
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    /// 1-based positions `i` where `dim(self ∩ V_i) > dim(self ∩ V_{i-1})`.
    pub fn jumps(&self) -> Vec<usize> {
        self.pivots.iter().map(|p| p + 1).collect()
    }

    fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if self.field.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(b).take(p + 1) {
                *x = self.field.sub_mul(x, &c, y);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.n, "vector length");
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    fn check_compatible(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch {
                left: self.field.describe(),
                right: other.field.describe(),
            });
        }
        if self.n != other.n {
            return Err(LinAlgError::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, LinAlgError> {
        self.check_compatible(other)?;
        Ok(self.basis.iter().all(|b| other.contains(b)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_compatible(other)?;
        let all = [self.basis.clone(), other.basis.clone()].concat();
        Subspace::span(self.field.clone(), self.n, &all)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_compatible(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field.clone(), self.n));
        }
        // Kernel of [A | -B]: each (x, y) with A x = B y gives A x in both.
        let f = &self.field;
        let (a, b) = (self.dim(), other.dim());
        let rows: Vec<Vec<F::Elem>> = (0..self.n)
            .map(|i| {
                self.basis
                    .iter()
                    .map(|v| v[i].clone())
                    .chain(other.basis.iter().map(|v| f.neg(&v[i])))
                    .collect()
            })
            .collect();
        let kernel = matrix::nullspace(f, &rows, a + b);
        let vectors: Vec<Vec<F::Elem>> = kernel
            .iter()
            .map(|x| {
                let mut acc = vec![f.zero(); self.n];
                for (c, v) in x[..a].iter().zip(&self.basis) {
                    for (s, e) in acc.iter_mut().zip(v) {
                        *s = f.add(s, &f.mul(c, e));
                    }
                }
                acc
            })
            .collect();
        Subspace::span(f.clone(), self.n, &vectors)
    }

    /// The image under a linear map of `F^n`.
    pub fn image(&self, map: &Matrix<F>) -> Result<Self, LinAlgError> {
        if map.ncols() != self.n || map.nrows() != self.n {
            return Err(LinAlgError::DimensionMismatch { expected: self.n, found: map.ncols() });
        }
        let vectors: Vec<_> = self.basis.iter().map(|b| map.mul_vec(b)).collect();
        Subspace::span(self.field.clone(), self.n, &vectors)
    }

    /// The projection `F^n -> F^n / self`, in coordinates compatible with the
    /// induced flag.
    pub fn quotient_map(&self) -> QuotientMap<'_, F> {
        let retained = (0..self.n).filter(|i| !self.pivots.contains(i)).collect();
        QuotientMap { kernel: self, retained }
    }
}

/// Projection onto `F^n / S`: reduce modulo `S`, then drop the pivot
/// coordinates of `S`. The images of the flag subspaces `V_i` are again
/// coordinate flag subspaces of the quotient.
#[derive(Debug)]
pub struct QuotientMap<'a, F: Field> {
    kernel: &'a Subspace<F>,
    retained: Vec<usize>,
}

impl<F: Field> QuotientMap<'_, F> {
    /// The 0-based coordinates of `F^n` that survive, in order.
    pub fn retained(&self) -> &[usize] {
        &self.retained
    }

    pub fn target_dim(&self) -> usize {
        self.retained.len()
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let reduced = self.kernel.reduce(v);
        self.retained.iter().map(|&i| reduced[i].clone()).collect()
    }

    pub fn image_of(&self, s: &Subspace<F>) -> Subspace<F> {
        let vectors: Vec<_> = s.basis.iter().map(|b| self.apply(b)).collect();
        Subspace::span(s.field.clone(), self.retained.len(), &vectors).expect("lengths agree")
    }
}

/// The 1-based coordinate vector `e_position` of length `n`.
pub fn unit_vector<F: Field>(field: &F, n: usize, position: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); n];
    v[position - 1] = field.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn vecs(field: &PrimeField, vs: &[&[i64]]) -> Vec<Vec<u64>> {
        vs.iter().map(|v| v.iter().map(|&x| field.from_i64(x)).collect()).collect()
    }

    #[test]
    fn line_and_skew_line_in_plane() {
        let f = PrimeField::new(7).unwrap();
        let u = Subspace::span(f, 2, &vecs(&f, &[&[0, 1]])).unwrap();
        let w = Subspace::span(f, 2, &vecs(&f, &[&[1, 1]])).unwrap();
        assert_eq!(u.intersection(&w).unwrap().dim(), 0);
        assert_eq!(u.sum(&w).unwrap().dim(), 2);
        assert_eq!(u.intersection(&u).unwrap(), u);
        assert_eq!(u.jumps(), vec![2]);
        assert_eq!(w.jumps(), vec![2]);
    }

    #[test]
    fn reduced_form_is_canonical() {
        let q = Rationals;
        let a = Subspace::span(
            q,
            3,
            &[vec![q.from_i64(1), q.from_i64(2), q.from_i64(0)], vec![q.from_i64(0), q.from_i64(1), q.from_i64(1)]],
        )
        .unwrap();
        let b = Subspace::span(
            q,
            3,
            &[vec![q.from_i64(1), q.from_i64(3), q.from_i64(1)], vec![q.from_i64(2), q.from_i64(4), q.from_i64(0)]],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.jumps(), vec![2, 3]);
    }

    #[test]
    fn dependent_column_is_named() {
        let f = PrimeField::new(5).unwrap();
        let cols = vecs(&f, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert_eq!(
            Subspace::from_columns(f, 3, &cols),
            Err(LinAlgError::DependentColumn { column: 3 })
        );
    }

    #[test]
    fn mismatches_are_errors() {
        let f5 = PrimeField::new(5).unwrap();
        let f7 = PrimeField::new(7).unwrap();
        let a = Subspace::flag(f5, 3, 1);
        let b = Subspace::flag(f7, 3, 1);
        assert!(matches!(a.sum(&b), Err(LinAlgError::FieldMismatch { .. })));
        let c = Subspace::flag(f5, 4, 1);
        assert!(matches!(a.intersection(&c), Err(LinAlgError::DimensionMismatch { .. })));
    }

    #[test]
    fn quotient_respects_flag() {
        let f = PrimeField::new(5).unwrap();
        // S = <e1, e1 + 2 e2 + e3>, pivots at 1 and 3
        let s = Subspace::span(f, 4, &vecs(&f, &[&[1, 0, 0, 0], &[1, 2, 1, 0]])).unwrap();
        let q = s.quotient_map();
        assert_eq!(q.retained(), &[1, 3]);
        for i in 0..=4 {
            let vi = Subspace::flag(f, 4, i);
            let img = q.image_of(&vi);
            let expected = Subspace::flag(f, 2, img.dim());
            assert_eq!(img, expected, "image of V_{i}");
        }
        assert!(q.apply(&vecs(&f, &[&[1, 2, 1, 0]])[0]).iter().all(|x| *x == 0));
    }
}
