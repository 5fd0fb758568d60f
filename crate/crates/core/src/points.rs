//! Finite-field points of Grassmannians and random elements of the Borel
//! subgroup.

use itertools::Itertools;
use rand::Rng;

use crate::field::{Field, PrimeField};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Every `k`-dimensional subspace of `GF(q)^n`, one per reduced row-echelon
/// form.
pub fn grassmannian_points(field: &PrimeField, n: usize, k: usize) -> Vec<Subspace<PrimeField>> {
    let q = field.modulus();
    let mut out = Vec::new();
    for pivots in (0..n).combinations(k) {
        // Free entries sit right of each pivot in non-pivot columns.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = (q as usize).pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0u64; n]; k];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            let mut c = code;
            for &(r, col) in &free {
                rows[r][col] = (c % q as usize) as u64;
                c /= q as usize;
            }
            out.push(Subspace::span(*field, n, &rows).expect("rows have length n"));
        }
    }
    out
}

/// `#Gr(k, n)(F_q)`, the Gaussian binomial coefficient at `q`.
pub fn grassmannian_count(q: u64, n: usize, k: usize) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// A uniformly random element of `GF(p)`.
pub fn random_elem<R: Rng>(field: &PrimeField, rng: &mut R) -> u64 {
    rng.gen_range(0..field.modulus())
}

/// A random invertible upper-triangular matrix.
pub fn random_borel<R: Rng>(field: &PrimeField, n: usize, rng: &mut R) -> Matrix<PrimeField> {
    let mut b = Matrix::zeros(*field, n, n);
    for r in 0..n {
        b.set(r, r, rng.gen_range(1..field.modulus()));
        for c in r + 1..n {
            b.set(r, c, random_elem(field, rng));
        }
    }
    b
}

/// A random `k`-dimensional subspace (rejection sampling on full rank).
pub fn random_subspace<R: Rng>(field: &PrimeField, n: usize, k: usize, rng: &mut R) -> Subspace<PrimeField> {
    loop {
        let vectors: Vec<Vec<u64>> =
            (0..k).map(|_| (0..n).map(|_| random_elem(field, rng)).collect()).collect();
        let s = Subspace::span(*field, n, &vectors).expect("vectors have length n");
        if s.dim() == k {
            return s;
        }
    }
}

/// `s_i · u_i(t)`: add `t` times coordinate `i+1` to coordinate `i`, then
/// swap the two coordinates.
pub fn simple_reflection_times_root<F: Field>(field: &F, n: usize, i: usize, t: F::Elem) -> Matrix<F> {
    let mut u = Matrix::identity(field.clone(), n);
    u.set(i - 1, i, t);
    let mut swapped = u.rows().to_vec();
    swapped.swap(i - 1, i);
    Matrix::from_rows(field.clone(), n, swapped)
}
