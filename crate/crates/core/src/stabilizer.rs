//! Stabilizers of canonical points in the upper-triangular matrices.
//!
//! Two independent routes to the same number: the structured system of
//! equations on the entries `a_ij` read off from the orbit datum
//! ([`stabilizer_system`]), and the generic condition `A·U ⊆ U, A·W ⊆ W`
//! imposed on the canonical point ([`stabilizer_dim_oracle`]). The orbit
//! dimension is `n(n+1)/2` minus either nullity.

use std::collections::BTreeSet;
use std::fmt;

use crate::canonical::canonical_point;
use crate::field::{Field, Rationals};
use crate::matrix;
use crate::young::{InvalidDatum, OrbitDatum};

/// The entry `a_{row,col}` of an upper-triangular matrix, `row <= col`,
/// 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
}

impl Entry {
    /// `None` below the diagonal, where entries vanish identically.
    pub fn upper(row: usize, col: usize) -> Option<Entry> {
        (row <= col).then_some(Entry { row, col })
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{},{}", self.row, self.col)
    }
}

/// Which family of conditions produced an equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `a_γγ = a_σ(γ)σ(γ)`.
    DiagonalPair,
    /// `a_iα = 0` for `α ∈ alpha`, `i ∉ alpha`.
    AlphaColumn,
    /// `a_jβ = 0` for `β ∈ beta`, `j` outside `beta ∪ gamma ∪ delta`.
    BetaColumn,
    /// `a_δβ = 0` when `δ < β < γ` for a pair `(δ, γ)`.
    BetaStraddled,
    /// `a_γβ = a_δβ` for `γ < β`.
    BetaPaired,
    /// `a_jγ = -a_jδ` for `j` outside `beta ∪ gamma ∪ delta`.
    PairColumn,
    /// Two pairs nested: `δ2 < δ1 < γ1 < γ2`.
    PairsNested,
    /// Two pairs crossing: `δ1 < δ2 < γ1 < γ2`.
    PairsCrossing,
    /// Two pairs disjoint: `δ1 < γ1 < δ2 < γ2`.
    PairsDisjoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    /// Integer coefficients; they embed in any field.
    pub terms: Vec<(Entry, i64)>,
    pub condition: Condition,
}

/// Linear equations on the upper-triangular entries of an `n × n` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    n: usize,
    equations: Vec<Equation>,
}

impl LinearSystem {
    pub fn new(n: usize) -> Self {
        LinearSystem { n, equations: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn variable_count(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    /// Adds `sum coeff * a_{row,col} = 0`. Entries below the diagonal are
    /// dropped; an equation left with no terms is not recorded.
    pub fn push(&mut self, condition: Condition, terms: &[((usize, usize), i64)]) {
        let terms: Vec<(Entry, i64)> = terms
            .iter()
            .filter_map(|&((r, c), coef)| Entry::upper(r, c).map(|e| (e, coef)))
            .collect();
        if !terms.is_empty() {
            self.equations.push(Equation { terms, condition });
        }
    }

    fn rows<F: Field>(&self, field: &F, keep: impl Fn(&Entry) -> bool) -> (Vec<Vec<F::Elem>>, usize) {
        let vars: Vec<Entry> = (1..=self.n)
            .flat_map(|r| (r..=self.n).map(move |c| Entry { row: r, col: c }))
            .filter(|e| keep(e))
            .collect();
        let rows = self
            .equations
            .iter()
            .map(|eq| {
                let mut row = vec![field.zero(); vars.len()];
                for (e, coef) in &eq.terms {
                    if let Some(i) = vars.iter().position(|v| v == e) {
                        row[i] = field.add(&row[i], &field.from_i64(*coef));
                    }
                }
                row
            })
            .collect();
        (rows, vars.len())
    }

    pub fn rank<F: Field>(&self, field: &F) -> usize {
        let (rows, ncols) = self.rows(field, |_| true);
        matrix::rank(field, &rows, ncols)
    }

    /// Dimension of the solution space.
    pub fn nullity<F: Field>(&self, field: &F) -> usize {
        self.variable_count() - self.rank(field)
    }

    /// Dimension of the diagonal solutions (all off-diagonal entries zero).
    pub fn diagonal_nullity<F: Field>(&self, field: &F) -> usize {
        let (rows, ncols) = self.rows(field, Entry::is_diagonal);
        ncols - matrix::rank(field, &rows, ncols)
    }
}

/// The stabilizer equations read off from the datum.
///
/// Equations referring to entries below the diagonal lose those terms. In the
/// nested two-pair configuration the vanishing entry between the two deltas is
/// the upper-triangular `a_{δ2,δ1}`.
pub fn stabilizer_system(datum: &OrbitDatum) -> Result<LinearSystem, InvalidDatum> {
    datum.check()?;
    let n = datum.n;
    let alpha: BTreeSet<usize> = datum.alpha.iter().copied().collect();
    let w_support: BTreeSet<usize> = datum
        .beta
        .iter()
        .copied()
        .chain(datum.sigma_pairs.iter().flat_map(|&(d, g)| [d, g]))
        .collect();
    let mut sys = LinearSystem::new(n);

    for &(d, g) in &datum.sigma_pairs {
        sys.push(Condition::DiagonalPair, &[((g, g), 1), ((d, d), -1)]);
    }
    for &a in &alpha {
        for i in (1..a).filter(|i| !alpha.contains(i)) {
            sys.push(Condition::AlphaColumn, &[((i, a), 1)]);
        }
    }
    for &b in &datum.beta {
        for j in (1..b).filter(|j| !w_support.contains(j)) {
            sys.push(Condition::BetaColumn, &[((j, b), 1)]);
        }
        for &(d, g) in &datum.sigma_pairs {
            if d < b && b < g {
                sys.push(Condition::BetaStraddled, &[((d, b), 1)]);
            }
            if g < b {
                sys.push(Condition::BetaPaired, &[((g, b), 1), ((d, b), -1)]);
            }
        }
    }
    for &(d, g) in &datum.sigma_pairs {
        for j in (1..g).filter(|j| !w_support.contains(j)) {
            sys.push(Condition::PairColumn, &[((j, g), 1), ((j, d), 1)]);
        }
    }
    for &(d1, g1) in &datum.sigma_pairs {
        for &(d2, g2) in &datum.sigma_pairs {
            if g1 >= g2 {
                continue;
            }
            if d2 < d1 {
                sys.push(Condition::PairsNested, &[((g1, g2), 1)]);
                sys.push(Condition::PairsNested, &[((d1, g2), 1)]);
                sys.push(Condition::PairsNested, &[((d2, g1), 1)]);
                sys.push(Condition::PairsNested, &[((d2, d1), 1)]);
            } else if d2 < g1 {
                sys.push(Condition::PairsCrossing, &[((d2, g1), 1)]);
                sys.push(Condition::PairsCrossing, &[((d1, g2), 1)]);
                sys.push(Condition::PairsCrossing, &[((g1, g2), 1), ((d1, d2), -1)]);
            } else {
                sys.push(Condition::PairsDisjoint, &[((d1, g2), 1)]);
                sys.push(
                    Condition::PairsDisjoint,
                    &[((g1, g2), 1), ((g1, d2), 1), ((d1, d2), -1)],
                );
            }
        }
    }
    Ok(sys)
}

/// The same system read off literally, without the straddled-beta condition
/// and with `a_{σ(γ1),σ(γ2)}` (identically zero) in the nested case. Kept to
/// document why [`stabilizer_system`] needs both amendments.
pub fn stabilizer_system_literal(datum: &OrbitDatum) -> Result<LinearSystem, InvalidDatum> {
    let full = stabilizer_system(datum)?;
    let mut sys = LinearSystem::new(full.n);
    sys.equations = full
        .equations
        .into_iter()
        .filter(|eq| {
            let nested_delta = eq.condition == Condition::PairsNested
                && eq.terms.len() == 1
                && datum.deltas().contains(&eq.terms[0].0.row)
                && datum.deltas().contains(&eq.terms[0].0.col);
            eq.condition != Condition::BetaStraddled && !nested_delta
        })
        .collect();
    Ok(sys)
}

/// The Lie-algebra stabilizer `{A upper-triangular : A·U ⊆ U, A·W ⊆ W}` of
/// the canonical point, over `F`.
pub fn stabilizer_dim_in<F: Field>(datum: &OrbitDatum, field: F) -> Result<usize, InvalidDatum> {
    let n = datum.n;
    let (u, w) = canonical_point(datum, field.clone())?;
    let vars: Vec<(usize, usize)> = (0..n).flat_map(|r| (r..n).map(move |c| (r, c))).collect();
    let mut rows = Vec::new();
    for s in [&u, &w] {
        // f · (A x) = sum_{r<=c} f_r x_c a_rc for each annihilating functional f.
        let annihilator = matrix::nullspace(&field, s.basis(), n);
        for f in &annihilator {
            for x in s.basis() {
                rows.push(
                    vars.iter()
                        .map(|&(r, c)| field.mul(&f[r], &x[c]))
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    Ok(vars.len() - matrix::rank(&field, &rows, vars.len()))
}

/// [`stabilizer_dim_in`] over the rationals.
pub fn stabilizer_dim_oracle(datum: &OrbitDatum) -> Result<usize, InvalidDatum> {
    stabilizer_dim_in(datum, Rationals)
}

/// `n(n+1)/2 - nullity`.
pub fn orbit_dim_from_stabilizer(n: usize, stabilizer_dim: usize) -> usize {
    n * (n + 1) / 2 - stabilizer_dim
}
