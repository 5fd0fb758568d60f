//! From a pair of subspaces to its orbit datum, and back.
//!
//! [`canonical_datum`] walks the standard flag from `V_1` upward. At each
//! step the first basis vector of the current quotient is classified against
//! `U` and `W`; the quotient then drops either that vector or, in the mixed
//! case, that vector together with a vector `v_j` of `U` paired with it in
//! `W`. An index map carries quotient positions back to global positions.

use thiserror::Error;

use crate::field::Field;
use crate::matrix::{self, Matrix};
use crate::subspace::{unit_vector, LinAlgError, Subspace};
use crate::young::{InvalidDatum, OrbitDatum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Invalid(#[from] InvalidDatum),
    #[error("subspace dimensions k = {k}, l = {l} must lie strictly between 0 and n = {n}")]
    Dimensions { n: usize, k: usize, l: usize },
}

/// The orbit datum of `(U, W)` with respect to the standard flag.
pub fn canonical_datum<F: Field>(u: &Subspace<F>, w: &Subspace<F>) -> Result<OrbitDatum, CanonicalError> {
    let n = u.ambient();
    // Forces matching field and ambient dimension.
    u.sum(w)?;
    let (k, l) = (u.dim(), w.dim());
    if k == 0 || k >= n || l == 0 || l >= n {
        return Err(CanonicalError::Dimensions { n, k, l });
    }
    let field = u.field().clone();
    let mut alpha = Vec::with_capacity(k);
    let mut beta = Vec::new();
    let mut pairs = Vec::new();

    let mut positions: Vec<usize> = (1..=n).collect();
    let mut u = u.clone();
    let mut w = w.clone();
    while !positions.is_empty() {
        let m = positions.len();
        let e1 = unit_vector(&field, m, 1);
        let in_u = u.contains(&e1);
        let in_w = w.contains(&e1);
        if in_u {
            alpha.push(positions[0]);
        }
        if in_w {
            beta.push(positions[0]);
        }
        let mut kernel = vec![e1.clone()];
        if !in_u && !in_w && u.sum(&w)?.contains(&e1) {
            let (j, v) = pairing_vector(&u, &w, &e1)?;
            alpha.push(positions[j - 1]);
            pairs.push((positions[0], positions[j - 1]));
            kernel.push(v);
        }
        let kernel = Subspace::span(field.clone(), m, &kernel)?;
        let q = kernel.quotient_map();
        u = q.image_of(&u);
        w = q.image_of(&w);
        positions = q.retained().iter().map(|&i| positions[i]).collect();
    }
    let datum = OrbitDatum::new(n, k, l, alpha, beta, pairs)?;
    Ok(datum)
}

/// For `e1 ∈ (U + W) \ (U ∪ W)`: the least `j` with `e1 ∈ W + (U ∩ V_j)` and a
/// vector `v ∈ U ∩ V_j` with `e1 + v ∈ W`. Such `v` has its last nonzero
/// coordinate at `j`.
fn pairing_vector<F: Field>(
    u: &Subspace<F>,
    w: &Subspace<F>,
    e1: &[F::Elem],
) -> Result<(usize, Vec<F::Elem>), CanonicalError> {
    let field = u.field();
    let m = u.ambient();
    for j in 2..=m {
        let uj = u.intersection(&Subspace::flag(field.clone(), m, j))?;
        let vectors: Vec<Vec<F::Elem>> = uj.basis().iter().chain(w.basis()).cloned().collect();
        if let Some(c) = matrix::solve_combination(field, &vectors, e1) {
            // e1 = sum c_i u_i + (w part), so v = -sum c_i u_i.
            let mut v = vec![field.zero(); m];
            for (ci, ui) in c.iter().zip(uj.basis()) {
                for (x, y) in v.iter_mut().zip(ui) {
                    *x = field.sub_mul(x, ci, y);
                }
            }
            return Ok((j, v));
        }
    }
    unreachable!("e1 lies in U + W, so j = n succeeds")
}

/// `(alpha, beta ∪ gamma)` read off the dimension jumps of `U ∩ V_i` and
/// `W ∩ V_i`.
pub fn jump_sets<F: Field>(u: &Subspace<F>, w: &Subspace<F>) -> Result<(Vec<usize>, Vec<usize>), LinAlgError> {
    let n = u.ambient();
    let field = u.field().clone();
    let jumps = |s: &Subspace<F>| -> Result<Vec<usize>, LinAlgError> {
        let mut out = Vec::new();
        let mut prev = 0;
        for i in 1..=n {
            let d = s.intersection(&Subspace::flag(field.clone(), n, i))?.dim();
            if d > prev {
                out.push(i);
            }
            prev = d;
        }
        Ok(out)
    };
    Ok((jumps(u)?, jumps(w)?))
}

/// For each pair `(i, j) = (delta, gamma)`, compares
/// `dim(((U ∩ V_j) + V_{i-1}) ∩ W)` with the number of `r ∈ beta ∪ gamma`
/// such that `r` and `sigma(r)` both lie in `[1, i-1] ∪ (alpha ∩ [i, j])`.
pub fn verify_sigma_invariant<F: Field>(
    u: &Subspace<F>,
    w: &Subspace<F>,
    datum: &OrbitDatum,
) -> Result<bool, LinAlgError> {
    Ok(sigma_invariant_sides(u, w, datum)?.iter().all(|(a, b)| a == b))
}

/// Both sides of the invariant for each pair, in pair order.
pub fn sigma_invariant_sides<F: Field>(
    u: &Subspace<F>,
    w: &Subspace<F>,
    datum: &OrbitDatum,
) -> Result<Vec<(usize, usize)>, LinAlgError> {
    let n = u.ambient();
    let field = u.field().clone();
    let support = datum.w_jumps();
    datum
        .sigma_pairs
        .iter()
        .map(|&(i, j)| {
            let tilde = u
                .intersection(&Subspace::flag(field.clone(), n, j))?
                .sum(&Subspace::flag(field.clone(), n, i - 1))?;
            let lhs = tilde.intersection(w)?.dim();
            let inside = |x: usize| x < i || (x <= j && datum.alpha.contains(&x));
            let rhs = support.iter().filter(|&&r| inside(r) && inside(datum.sigma(r))).count();
            Ok((lhs, rhs))
        })
        .collect()
}

/// The representative `U = <e_a : a ∈ alpha>`,
/// `W = <e_b : b ∈ beta> + <e_delta + e_gamma>`.
pub fn canonical_point<F: Field>(datum: &OrbitDatum, field: F) -> Result<(Subspace<F>, Subspace<F>), InvalidDatum> {
    datum.check()?;
    let n = datum.n;
    let u = Subspace::coordinate(field.clone(), n, &datum.alpha);
    let mut w_vectors: Vec<Vec<F::Elem>> = datum.beta.iter().map(|&b| unit_vector(&field, n, b)).collect();
    for &(d, g) in &datum.sigma_pairs {
        let mut v = unit_vector(&field, n, d);
        v[g - 1] = field.one();
        w_vectors.push(v);
    }
    let w = Subspace::span(field, n, &w_vectors).expect("vectors have length n");
    Ok((u, w))
}

/// Applies `b` to both subspaces.
pub fn act<F: Field>(
    b: &Matrix<F>,
    u: &Subspace<F>,
    w: &Subspace<F>,
) -> Result<(Subspace<F>, Subspace<F>), LinAlgError> {
    Ok((u.image(b)?, w.image(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q_span(n: usize, vs: &[&[i64]]) -> Subspace<Rationals> {
        let vs: Vec<_> = vs.iter().map(|v| v.iter().map(|&x| Rationals.from_i64(x)).collect()).collect();
        Subspace::span(Rationals, n, &vs).unwrap()
    }

    #[test]
    fn open_orbit_in_plane() {
        let u = q_span(2, &[&[0, 1]]);
        let w = q_span(2, &[&[1, 1]]);
        let d = canonical_datum(&u, &w).unwrap();
        assert_eq!(d, OrbitDatum::new(2, 1, 1, vec![2], vec![], vec![(1, 2)]).unwrap());
        assert_eq!(jump_sets(&u, &w).unwrap(), (vec![2], vec![2]));
        assert!(verify_sigma_invariant(&u, &w, &d).unwrap());
        assert_eq!(sigma_invariant_sides(&u, &w, &d).unwrap(), vec![(0, 0)]);
    }

    #[test]
    fn coinciding_lines() {
        let u = q_span(2, &[&[1, 0]]);
        let d = canonical_datum(&u, &u).unwrap();
        assert_eq!(d, OrbitDatum::new(2, 1, 1, vec![1], vec![1], vec![]).unwrap());
    }

    #[test]
    fn forged_datum_is_vacuously_consistent() {
        let u = q_span(2, &[&[0, 1]]);
        let w = q_span(2, &[&[1, 1]]);
        let forged = OrbitDatum::new(2, 1, 1, vec![2], vec![2], vec![]).unwrap();
        assert!(verify_sigma_invariant(&u, &w, &forged).unwrap());
        assert_ne!(canonical_datum(&u, &w).unwrap(), forged);
    }

    #[test]
    fn flag_subspaces() {
        let f = PrimeField::new(3).unwrap();
        let u = Subspace::flag(f, 5, 2);
        let w = Subspace::flag(f, 5, 3);
        assert_eq!(jump_sets(&u, &w).unwrap(), (vec![1, 2], vec![1, 2, 3]));
        let d = canonical_datum(&u, &w).unwrap();
        assert_eq!((d.alpha.clone(), d.beta.clone()), (vec![1, 2], vec![1, 2, 3]));
    }

    #[test]
    fn nine_example_round_trip() {
        let d = OrbitDatum::new(9, 4, 3, vec![3, 5, 6, 9], vec![2, 5], vec![(7, 9)]).unwrap();
        let (u, w) = canonical_point(&d, Rationals).unwrap();
        assert_eq!(u, Subspace::coordinate(Rationals, 9, &[3, 5, 6, 9]));
        let mut w79 = vec![Rationals.zero(); 9];
        w79[6] = Rationals.one();
        w79[8] = Rationals.one();
        let expected_w = Subspace::span(
            Rationals,
            9,
            &[unit_vector(&Rationals, 9, 2), unit_vector(&Rationals, 9, 5), w79],
        )
        .unwrap();
        assert_eq!(w, expected_w);
        assert_eq!(canonical_datum(&u, &w).unwrap(), d);
    }

    #[test]
    fn mixed_case_pairs_with_later_vector() {
        // U = <e2 + e3>, W = <e1 + e2 + e3>: e1 = w - u, and U ∩ V_2 = 0, so j = 3.
        let u = q_span(3, &[&[0, 1, 1]]);
        let w = q_span(3, &[&[1, 1, 1]]);
        let d = canonical_datum(&u, &w).unwrap();
        assert_eq!(d, OrbitDatum::new(3, 1, 1, vec![3], vec![], vec![(1, 3)]).unwrap());
        assert!(verify_sigma_invariant(&u, &w, &d).unwrap());
    }

    #[test]
    fn agrees_with_jump_sets_on_a_skew_pair() {
        let f = PrimeField::new(7).unwrap();
        let vs = |v: &[i64]| v.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let u = Subspace::span(f, 4, &[vs(&[0, 1, 1, 0]), vs(&[1, 0, 1, 1])]).unwrap();
        let w = Subspace::span(f, 4, &[vs(&[1, 1, 0, 0])]).unwrap();
        let d = canonical_datum(&u, &w).unwrap();
        let (a, bw) = jump_sets(&u, &w).unwrap();
        assert_eq!(a, d.alpha);
        assert_eq!(bw, d.w_jumps());
        assert!(verify_sigma_invariant(&u, &w, &d).unwrap());
    }

    #[test]
    fn rejects_mismatched_inputs() {
        let f5 = PrimeField::new(5).unwrap();
        let u = Subspace::flag(f5, 3, 1);
        let w = Subspace::flag(f5, 4, 1);
        assert!(matches!(canonical_datum(&u, &w), Err(CanonicalError::LinAlg(_))));
        let z = Subspace::zero(f5, 3);
        assert!(matches!(canonical_datum(&u, &z), Err(CanonicalError::Dimensions { .. })));
    }
}
