//! B-orbits in the product of two Grassmannians `Gr(k, n) × Gr(l, n)`.
//!
//! * [`young`]: orbit data, marked pairs of Young diagrams, common diagrams
//!   and the hook-union dimension formula.
//! * [`words`]: reduced words for Grassmannian permutations.
//! * [`field`], [`matrix`], [`subspace`]: exact linear algebra over the
//!   rationals and GF(p).
//! * [`canonical`]: the orbit datum of a pair of subspaces and the canonical
//!   representative of a datum.
//! * [`stabilizer`]: stabilizer dimensions, by a structured system and by a
//!   generic oracle.
//! * [`poset`]: enumeration, the weak-order graph of minimal parabolic
//!   raisings, minimal orbits and desingularization words.
//! * [`points`]: all points of `Gr(k, n)` over a finite field.
//! * [`formats`], [`verify`], [`commands`]: serialization, the cross-check
//!   harness and the command-line surface.

pub mod canonical;
pub mod commands;
pub mod field;
pub mod formats;
pub mod matrix;
pub mod points;
pub mod poset;
pub mod stabilizer;
pub mod subspace;
pub mod verify;
pub mod words;
pub mod young;

pub use canonical::{canonical_datum, canonical_point, jump_sets, verify_sigma_invariant};
pub use field::{Field, FieldKind, PrimeField, Rationals};
pub use subspace::Subspace;
pub use words::{grassmannian_word, GrassPermutationWord};
pub use young::{common_diagram, marked_pair, CommonDiagram, MarkedPair, OrbitDatum, YoungDiagram};
