//! Reduced words for Grassmannian permutations (Bott–Samelson words of
//! Schubert varieties in a single Grassmannian).

use serde::{Deserialize, Serialize};

use crate::young::YoungDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassPermutationWord {
    pub n: usize,
    /// Simple indices in `1..n`.
    pub word: Vec<usize>,
    /// Number of boxes of the diagram the word was built from.
    pub boxes: usize,
}

impl GrassPermutationWord {
    /// One-line notation of `s_{i_1} s_{i_2} ... s_{i_r}`, obtained from the
    /// identity by swapping positions `i_1`, then `i_2`, and so on.
    pub fn permutation(&self) -> Vec<usize> {
        evaluate_word(self.n, &self.word)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Reduced iff the permutation has exactly `len()` inversions.
    pub fn is_reduced(&self) -> bool {
        inversions(&self.permutation()) == self.word.len()
    }
}

pub fn evaluate_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    for &i in word {
        assert!((1..n).contains(&i), "simple index {i} out of range for n = {n}");
        perm.swap(i - 1, i);
    }
    perm
}

pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// The Grassmannian permutation of a jump set: the jump set in increasing
/// order, followed by its complement in increasing order.
pub fn grassmannian_permutation(n: usize, vertical: &[usize]) -> Vec<usize> {
    let mut v = vertical.to_vec();
    v.sort_unstable();
    let rest = (1..=n).filter(|j| !v.contains(j));
    v.iter().copied().chain(rest).collect()
}

/// A reduced word for the Schubert cell whose diagram has vertical steps at
/// `vertical`.
///
/// Rows are read bottom row first and each row right to left; the box in row
/// `r` (from the top) and column `c` gets the simple index `height - r + c`.
/// Bottom-up, each row moves the next jump value into place with adjacent
/// position swaps, so the word evaluates to
/// [`grassmannian_permutation`].
pub fn grassmannian_word(n: usize, height: usize, vertical: &[usize]) -> GrassPermutationWord {
    assert_eq!(vertical.len(), height, "vertical set must have `height` elements");
    let diagram = YoungDiagram::from_vertical_set(n, vertical);
    let mut word = Vec::with_capacity(diagram.box_count());
    for (r0, &len) in diagram.rows().iter().enumerate().rev() {
        let r = r0 + 1;
        for c in (1..=len).rev() {
            word.push(height - r + c);
        }
    }
    GrassPermutationWord { n, word, boxes: diagram.box_count() }
}
