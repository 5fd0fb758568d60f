//! Orbit data and their Young-diagram combinatorics.
//!
//! A B-orbit in `Gr(k, n) × Gr(l, n)` is classified by an [`OrbitDatum`]:
//! the jump set `alpha` of `U`, the pure jumps `beta` of `W`, and pairs
//! `(delta, gamma)` recording basis vectors `e_delta + e_gamma` of `W`. All
//! positions are 1-based indices into the standard flag.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitDatum {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    /// `(delta, gamma)` with `delta < gamma`.
    pub sigma_pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    AmbientTooSmall { n: usize },
    KOutOfRange { k: usize, n: usize },
    LOutOfRange { l: usize, n: usize },
    OutOfRange { set: &'static str, value: usize },
    Duplicate { set: &'static str, value: usize },
    AlphaSize { k: usize, found: usize },
    WSize { l: usize, found: usize },
    PairOrder { delta: usize, gamma: usize },
    GammaNotInAlpha { gamma: usize },
    DeltaInAlpha { delta: usize },
    NotDistinct { value: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AmbientTooSmall { n } => write!(f, "n = {n} leaves no room for 0 < k, l < n"),
            Violation::KOutOfRange { k, n } => write!(f, "k = {k} not in 1..{n}"),
            Violation::LOutOfRange { l, n } => write!(f, "l = {l} not in 1..{n}"),
            Violation::OutOfRange { set, value } => write!(f, "{set} entry {value} outside 1..=n"),
            Violation::Duplicate { set, value } => write!(f, "{set} repeats {value}"),
            Violation::AlphaSize { k, found } => write!(f, "|alpha| = {found}, expected k = {k}"),
            Violation::WSize { l, found } => {
                write!(f, "|beta| + #pairs = {found}, expected l = {l}")
            }
            Violation::PairOrder { delta, gamma } => {
                write!(f, "pair ({delta}, {gamma}) violates delta < gamma")
            }
            Violation::GammaNotInAlpha { gamma } => write!(f, "gamma {gamma} is not in alpha"),
            Violation::DeltaInAlpha { delta } => write!(f, "delta {delta} lies in alpha"),
            Violation::NotDistinct { value } => {
                write!(f, "{value} occurs more than once among beta, gammas and deltas")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid orbit datum: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidDatum(pub Vec<Violation>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumError {
    #[error(transparent)]
    Invalid(#[from] InvalidDatum),
    #[error("dim(U ∩ W) = {d} outside [{lo}, {hi}]")]
    StratumOutOfBounds { d: usize, lo: usize, hi: usize },
    #[error("dot at ({gamma}, {delta}) is not a box of the common diagram")]
    DotOutsideCommonDiagram { gamma: usize, delta: usize },
}

impl OrbitDatum {
    /// Builds a datum, sorting every component, and checks it.
    pub fn new(
        n: usize,
        k: usize,
        l: usize,
        alpha: Vec<usize>,
        beta: Vec<usize>,
        sigma_pairs: Vec<(usize, usize)>,
    ) -> Result<Self, InvalidDatum> {
        let d = Self::unchecked(n, k, l, alpha, beta, sigma_pairs);
        d.check()?;
        Ok(d)
    }

    /// Like [`OrbitDatum::new`] with `k` and `l` read off the components.
    pub fn from_parts(
        n: usize,
        alpha: Vec<usize>,
        beta: Vec<usize>,
        sigma_pairs: Vec<(usize, usize)>,
    ) -> Result<Self, InvalidDatum> {
        let (k, l) = (alpha.len(), beta.len() + sigma_pairs.len());
        Self::new(n, k, l, alpha, beta, sigma_pairs)
    }

    /// Sorts the components but performs no checks.
    pub fn unchecked(
        n: usize,
        k: usize,
        l: usize,
        mut alpha: Vec<usize>,
        mut beta: Vec<usize>,
        mut sigma_pairs: Vec<(usize, usize)>,
    ) -> Self {
        alpha.sort_unstable();
        beta.sort_unstable();
        sigma_pairs.sort_unstable();
        OrbitDatum { n, k, l, alpha, beta, sigma_pairs }
    }

    /// Every violated invariant; empty iff the datum classifies an orbit.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.n;
        if n < 2 {
            out.push(Violation::AmbientTooSmall { n });
        }
        if self.k == 0 || self.k >= n {
            out.push(Violation::KOutOfRange { k: self.k, n });
        }
        if self.l == 0 || self.l >= n {
            out.push(Violation::LOutOfRange { l: self.l, n });
        }
        let in_range = |v: usize| (1..=n).contains(&v);
        let mut check_set = |name: &'static str, values: &mut dyn Iterator<Item = usize>| {
            let mut seen = BTreeSet::new();
            for v in values {
                if !in_range(v) {
                    out.push(Violation::OutOfRange { set: name, value: v });
                }
                if !seen.insert(v) {
                    out.push(Violation::Duplicate { set: name, value: v });
                }
            }
        };
        check_set("alpha", &mut self.alpha.iter().copied());
        check_set("beta", &mut self.beta.iter().copied());
        for &(d, g) in &self.sigma_pairs {
            for (name, v) in [("delta", d), ("gamma", g)] {
                if !in_range(v) {
                    out.push(Violation::OutOfRange { set: name, value: v });
                }
            }
        }
        if self.alpha.len() != self.k {
            out.push(Violation::AlphaSize { k: self.k, found: self.alpha.len() });
        }
        let w = self.beta.len() + self.sigma_pairs.len();
        if w != self.l {
            out.push(Violation::WSize { l: self.l, found: w });
        }
        let alpha: BTreeSet<usize> = self.alpha.iter().copied().collect();
        for &(delta, gamma) in &self.sigma_pairs {
            if delta >= gamma {
                out.push(Violation::PairOrder { delta, gamma });
            }
            if !alpha.contains(&gamma) {
                out.push(Violation::GammaNotInAlpha { gamma });
            }
            if alpha.contains(&delta) {
                out.push(Violation::DeltaInAlpha { delta });
            }
        }
        // Distinctness of beta, gammas and deltas. A pair with delta == gamma
        // is already reported as an order violation.
        let mut seen = BTreeSet::new();
        let mut repeated = BTreeSet::new();
        let deltas = self
            .sigma_pairs
            .iter()
            .filter(|(d, g)| d != g)
            .map(|&(d, _)| d);
        let gammas = self.sigma_pairs.iter().map(|&(_, g)| g);
        let mut beta_seen = BTreeSet::new();
        for v in self.beta.iter().copied().filter(|v| beta_seen.insert(*v)).chain(gammas).chain(deltas) {
            if !seen.insert(v) {
                repeated.insert(v);
            }
        }
        out.extend(repeated.into_iter().map(|value| Violation::NotDistinct { value }));
        out
    }

    pub fn check(&self) -> Result<(), InvalidDatum> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(InvalidDatum(v))
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn gammas(&self) -> Vec<usize> {
        let mut g: Vec<_> = self.sigma_pairs.iter().map(|p| p.1).collect();
        g.sort_unstable();
        g
    }

    pub fn deltas(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.sigma_pairs.iter().map(|p| p.0).collect();
        d.sort_unstable();
        d
    }

    /// The involution swapping each `delta` with its `gamma`.
    pub fn sigma(&self, x: usize) -> usize {
        for &(d, g) in &self.sigma_pairs {
            if x == d {
                return g;
            }
            if x == g {
                return d;
            }
        }
        x
    }

    /// `beta ∪ gamma`: the jump set of `W`.
    pub fn w_jumps(&self) -> Vec<usize> {
        let mut s: Vec<_> = self.beta.iter().copied().chain(self.gammas()).collect();
        s.sort_unstable();
        s
    }

    /// `rk = #gamma`.
    pub fn rank(&self) -> usize {
        self.sigma_pairs.len()
    }

    /// Bounds for `d = dim(U ∩ W)` at these `(n, k, l)`.
    pub fn stratum_bounds(n: usize, k: usize, l: usize) -> (usize, usize) {
        ((k + l).saturating_sub(n), k.min(l))
    }

    /// `d = #(alpha ∩ beta)`.
    pub fn stratum(&self) -> Result<usize, DatumError> {
        self.check()?;
        let d = self.alpha.iter().filter(|a| self.beta.contains(a)).count();
        let (lo, hi) = Self::stratum_bounds(self.n, self.k, self.l);
        if d < lo || d > hi {
            return Err(DatumError::StratumOutOfBounds { d, lo, hi });
        }
        Ok(d)
    }

    /// Orbit dimension from the hook formula.
    pub fn dimension(&self) -> Result<usize, DatumError> {
        hook_dimension(self, HookDirection::Inward)
    }

    pub fn marked_pair(&self) -> Result<MarkedPair, InvalidDatum> {
        marked_pair(self)
    }
}

impl fmt::Display for OrbitDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "(n={}, k={}, l={}; alpha={{{}}}, beta={{{}}}, sigma=[",
            self.n,
            self.k,
            self.l,
            list(&self.alpha),
            list(&self.beta)
        )?;
        let pairs: Vec<_> = self.sigma_pairs.iter().map(|(d, g)| format!("({d},{g})")).collect();
        write!(f, "{}])", pairs.join(""))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Vertical,
    Horizontal,
}

/// A Young diagram inside a `height × width` box, together with the
/// bounding lattice path read from bottom-left to top-right. Rows are listed
/// top-down.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    height: usize,
    width: usize,
    rows: Vec<usize>,
    path: Vec<Step>,
}

impl YoungDiagram {
    pub fn from_path(path: Vec<Step>) -> Self {
        let height = path.iter().filter(|s| **s == Step::Vertical).count();
        let width = path.len() - height;
        let mut horizontal = 0;
        let mut rows = Vec::with_capacity(height);
        for s in &path {
            match s {
                Step::Horizontal => horizontal += 1,
                Step::Vertical => rows.push(horizontal),
            }
        }
        rows.reverse();
        YoungDiagram { height, width, rows, path }
    }

    /// The path of length `n` with vertical steps exactly at the 1-based
    /// positions in `vertical`.
    pub fn from_vertical_set(n: usize, vertical: &[usize]) -> Self {
        let path = (1..=n)
            .map(|j| if vertical.contains(&j) { Step::Vertical } else { Step::Horizontal })
            .collect();
        Self::from_path(path)
    }

    /// `None` if `rows` is not weakly decreasing or does not fit in the box.
    pub fn from_rows(height: usize, width: usize, rows: &[usize]) -> Option<Self> {
        if rows.len() > height
            || rows.windows(2).any(|w| w[0] < w[1])
            || rows.first().is_some_and(|&r| r > width)
        {
            return None;
        }
        let mut padded = rows.to_vec();
        padded.resize(height, 0);
        let mut path = Vec::with_capacity(height + width);
        let mut horizontal = 0;
        for &r in padded.iter().rev() {
            while horizontal < r {
                path.push(Step::Horizontal);
                horizontal += 1;
            }
            path.push(Step::Vertical);
        }
        while horizontal < width {
            path.push(Step::Horizontal);
            horizontal += 1;
        }
        Some(Self::from_path(path))
    }

    pub fn height(&self) -> usize {
        self.height
    }
    pub fn width(&self) -> usize {
        self.width
    }
    /// Nonzero rows are meaningful; trailing zero rows are kept so that
    /// `rows().len() == height`.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }
    pub fn path(&self) -> &[Step] {
        &self.path
    }

    /// The partition with trailing zeros removed.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().copied().filter(|&r| r > 0).collect()
    }

    pub fn box_count(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn vertical_steps(&self) -> Vec<usize> {
        self.steps_of(Step::Vertical)
    }

    pub fn horizontal_steps(&self) -> Vec<usize> {
        self.steps_of(Step::Horizontal)
    }

    fn steps_of(&self, kind: Step) -> Vec<usize> {
        self.path
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == kind)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The box above horizontal step `h` and left of vertical step `v`, as a
    /// 1-based `(row from top, column from left)`.
    pub fn cell_of(&self, v: usize, h: usize) -> Option<(usize, usize)> {
        if h >= v || v > self.path.len() {
            return None;
        }
        if self.path[v - 1] != Step::Vertical || self.path[h - 1] != Step::Horizontal {
            return None;
        }
        let vrank = self.path[..v].iter().filter(|s| **s == Step::Vertical).count();
        let col = self.path[..h].iter().filter(|s| **s == Step::Horizontal).count();
        Some((self.height - vrank + 1, col))
    }

    /// Renders the diagram, marking the given cells.
    pub fn render(&self, marked: &[(usize, usize)]) -> String {
        let mut out = String::new();
        for (r, &len) in self.rows.iter().enumerate() {
            if len == 0 {
                continue;
            }
            for c in 1..=len {
                out.push(if marked.contains(&(r + 1, c)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// Two diagrams, in `k × (n-k)` and `l × (n-l)`, with a dot for each pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedPair {
    pub first: YoungDiagram,
    pub second: YoungDiagram,
    /// `(gamma, delta)` step indices.
    pub dots: Vec<(usize, usize)>,
}

impl MarkedPair {
    /// Dotted cells of the first diagram, `(row, col)`.
    pub fn first_dot_cells(&self) -> Vec<(usize, usize)> {
        self.dots.iter().filter_map(|&(g, d)| self.first.cell_of(g, d)).collect()
    }

    pub fn second_dot_cells(&self) -> Vec<(usize, usize)> {
        self.dots.iter().filter_map(|&(g, d)| self.second.cell_of(g, d)).collect()
    }

    /// Reads the datum back off the two paths and the dots.
    pub fn to_datum(&self) -> Result<OrbitDatum, InvalidDatum> {
        let n = self.first.path.len();
        let alpha = self.first.vertical_steps();
        let gammas: Vec<usize> = self.dots.iter().map(|d| d.0).collect();
        let beta = self
            .second
            .vertical_steps()
            .into_iter()
            .filter(|j| !gammas.contains(j))
            .collect();
        let pairs = self.dots.iter().map(|&(g, d)| (d, g)).collect();
        OrbitDatum::new(n, self.first.height, self.second.height, alpha, beta, pairs)
    }
}

impl fmt::Display for MarkedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Y1:")?;
        f.write_str(&self.first.render(&self.first_dot_cells()))?;
        writeln!(f, "Y2:")?;
        f.write_str(&self.second.render(&self.second_dot_cells()))
    }
}

pub fn marked_pair(datum: &OrbitDatum) -> Result<MarkedPair, InvalidDatum> {
    datum.check()?;
    let first = YoungDiagram::from_vertical_set(datum.n, &datum.alpha);
    let second = YoungDiagram::from_vertical_set(datum.n, &datum.w_jumps());
    let dots = datum.sigma_pairs.iter().map(|&(d, g)| (g, d)).collect();
    Ok(MarkedPair { first, second, dots })
}

/// Rows are keyed by steps vertical in both paths (descending), columns by
/// steps horizontal in both paths (ascending); box `(v, h)` exists iff `h < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonDiagram {
    v_steps: Vec<usize>,
    h_steps: Vec<usize>,
    /// `(v, h)` = `(gamma, delta)`.
    dots: Vec<(usize, usize)>,
}

/// Orientation of the hooks whose union enters the dimension formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HookDirection {
    /// The box, the boxes above it in its column and left of it in its row.
    #[default]
    Inward,
    /// The box, the boxes below it and right of it. Gives wrong dimensions;
    /// used for fault injection.
    Outward,
}

impl CommonDiagram {
    pub fn v_steps(&self) -> &[usize] {
        &self.v_steps
    }
    pub fn h_steps(&self) -> &[usize] {
        &self.h_steps
    }
    pub fn dots(&self) -> &[(usize, usize)] {
        &self.dots
    }

    /// Builds a common diagram of the given shape with step labels chosen
    /// from a lattice path; dots are given as 1-based `(row, col)` cells.
    pub fn from_shape(rows: &[usize], dot_cells: &[(usize, usize)]) -> Option<Self> {
        let height = rows.len();
        let width = rows.first().copied().unwrap_or(0);
        let y = YoungDiagram::from_rows(height, width, rows)?;
        let mut v_steps = y.vertical_steps();
        v_steps.reverse();
        let h_steps = y.horizontal_steps();
        let mut dots = Vec::new();
        for &(r, c) in dot_cells {
            if r == 0 || c == 0 || r > height || c > rows[r - 1] {
                return None;
            }
            dots.push((v_steps[r - 1], h_steps[c - 1]));
        }
        Some(CommonDiagram { v_steps, h_steps, dots })
    }

    /// Row lengths, top-down, zero rows dropped.
    pub fn shape(&self) -> Vec<usize> {
        self.v_steps
            .iter()
            .map(|&v| self.h_steps.iter().filter(|&&h| h < v).count())
            .filter(|&len| len > 0)
            .collect()
    }

    pub fn box_count(&self) -> usize {
        self.shape().iter().sum()
    }

    pub fn contains(&self, v: usize, h: usize) -> bool {
        h < v && self.v_steps.contains(&v) && self.h_steps.contains(&h)
    }

    /// 1-based `(row, col)` of the box `(v, h)`.
    pub fn cell(&self, v: usize, h: usize) -> Option<(usize, usize)> {
        if !self.contains(v, h) {
            return None;
        }
        let r = self.v_steps.iter().position(|&x| x == v)? + 1;
        let c = self.h_steps.iter().position(|&x| x == h)? + 1;
        Some((r, c))
    }

    pub fn dot_cells(&self) -> Vec<(usize, usize)> {
        self.dots.iter().filter_map(|&(v, h)| self.cell(v, h)).collect()
    }

    /// Union of the hooks at the dotted boxes, as `(row, col)` cells.
    pub fn hook_union_cells(&self, direction: HookDirection) -> BTreeSet<(usize, usize)> {
        let shape = self.shape();
        let row_len = |r: usize| shape.get(r - 1).copied().unwrap_or(0);
        let mut cells = BTreeSet::new();
        for (r, c) in self.dot_cells() {
            cells.insert((r, c));
            match direction {
                HookDirection::Inward => {
                    cells.extend((1..r).map(|rr| (rr, c)));
                    cells.extend((1..c).map(|cc| (r, cc)));
                }
                HookDirection::Outward => {
                    cells.extend((r + 1..=shape.len()).filter(|&rr| row_len(rr) >= c).map(|rr| (rr, c)));
                    cells.extend((c + 1..=row_len(r)).map(|cc| (r, cc)));
                }
            }
        }
        cells
    }

    /// The hook union `H` as `(v, h)` step-index boxes.
    pub fn hook_union(&self) -> BTreeSet<(usize, usize)> {
        self.hook_union_cells(HookDirection::Inward)
            .into_iter()
            .map(|(r, c)| (self.v_steps[r - 1], self.h_steps[c - 1]))
            .collect()
    }

    pub fn render(&self) -> String {
        let marked = self.dot_cells();
        let hook = self.hook_union_cells(HookDirection::Inward);
        let mut out = String::new();
        for (r, &len) in self.shape().iter().enumerate() {
            for c in 1..=len {
                let cell = (r + 1, c);
                out.push(if marked.contains(&cell) {
                    '#'
                } else if hook.contains(&cell) {
                    '*'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

pub fn common_diagram(mp: &MarkedPair) -> Result<CommonDiagram, DatumError> {
    let v1 = mp.first.vertical_steps();
    let v2 = mp.second.vertical_steps();
    let mut v_steps: Vec<usize> = v1.iter().copied().filter(|v| v2.contains(v)).collect();
    v_steps.reverse();
    let h2 = mp.second.horizontal_steps();
    let h_steps: Vec<usize> = mp
        .first
        .horizontal_steps()
        .into_iter()
        .filter(|h| h2.contains(h))
        .collect();
    let cd = CommonDiagram { v_steps, h_steps, dots: mp.dots.clone() };
    if let Some(&(gamma, delta)) = mp.dots.iter().find(|&&(g, d)| !cd.contains(g, d)) {
        return Err(DatumError::DotOutsideCommonDiagram { gamma, delta });
    }
    Ok(cd)
}

/// `#Y1 + #Y2 - #Ycom + #H`, with a selectable hook orientation.
pub fn hook_dimension(datum: &OrbitDatum, direction: HookDirection) -> Result<usize, DatumError> {
    datum.stratum()?;
    let mp = marked_pair(datum)?;
    let cd = common_diagram(&mp)?;
    let h = cd.hook_union_cells(direction).len();
    Ok(mp.first.box_count() + mp.second.box_count() - cd.box_count() + h)
}

/// Dimension of `Gr(k, n) × Gr(l, n)`.
pub fn total_dimension(n: usize, k: usize, l: usize) -> usize {
    k * (n - k) + l * (n - l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example9() -> OrbitDatum {
        OrbitDatum::new(9, 4, 3, vec![3, 5, 6, 9], vec![2, 5], vec![(7, 9)]).unwrap()
    }

    fn example7() -> OrbitDatum {
        OrbitDatum::new(7, 3, 4, vec![2, 5, 7], vec![3, 4, 6], vec![(1, 7)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(example9().validate().is_empty());
        assert!(example7().validate().is_empty());
        let bad = OrbitDatum::unchecked(2, 1, 1, vec![1], vec![], vec![(1, 1)]);
        assert_eq!(
            bad.validate(),
            vec![
                Violation::PairOrder { delta: 1, gamma: 1 },
                Violation::DeltaInAlpha { delta: 1 }
            ]
        );
    }

    #[test]
    fn validate_reports_sizes_and_collisions() {
        let d = OrbitDatum::unchecked(4, 2, 2, vec![2, 4], vec![1, 3], vec![(1, 4)]);
        let v = d.validate();
        assert!(v.contains(&Violation::WSize { l: 2, found: 3 }));
        assert!(v.contains(&Violation::NotDistinct { value: 1 }));
        let d = OrbitDatum::unchecked(3, 3, 1, vec![1, 2, 5], vec![1], vec![]);
        let v = d.validate();
        assert!(v.contains(&Violation::KOutOfRange { k: 3, n: 3 }));
        assert!(v.contains(&Violation::OutOfRange { set: "alpha", value: 5 }));
    }

    #[test]
    fn marked_pair_of_nine_example() {
        let mp = example9().marked_pair().unwrap();
        assert_eq!(mp.first.shape(), vec![5, 3, 3, 2]);
        assert_eq!(mp.second.shape(), vec![6, 3, 1]);
        assert_eq!(mp.first_dot_cells(), vec![(1, 4)]);
        assert_eq!(mp.second_dot_cells(), vec![(1, 5)]);
        assert_eq!(mp.to_datum().unwrap(), example9());
    }

    #[test]
    fn marked_pair_of_point_orbit() {
        let d = OrbitDatum::new(2, 1, 1, vec![1], vec![1], vec![]).unwrap();
        let mp = d.marked_pair().unwrap();
        assert_eq!(mp.first.box_count(), 0);
        assert_eq!(mp.second.box_count(), 0);
        assert!(mp.dots.is_empty());
    }

    #[test]
    fn marked_pair_of_seven_example() {
        let mp = example7().marked_pair().unwrap();
        assert_eq!(mp.first.shape(), vec![4, 3, 1]);
        assert_eq!(mp.second.shape(), vec![3, 3, 2, 2]);
        assert_eq!(mp.first_dot_cells(), vec![(1, 1)]);
        assert_eq!(mp.second_dot_cells(), vec![(1, 1)]);
    }

    #[test]
    fn marked_pair_rejects_invalid() {
        let bad = OrbitDatum::unchecked(2, 1, 1, vec![1], vec![], vec![(1, 1)]);
        assert!(marked_pair(&bad).is_err());
    }

    #[test]
    fn common_diagrams() {
        let cd = common_diagram(&example9().marked_pair().unwrap()).unwrap();
        assert_eq!(cd.shape(), vec![4, 2]);
        assert_eq!(cd.v_steps(), &[9, 5]);
        assert_eq!(cd.h_steps(), &[1, 4, 7, 8]);

        let cd = common_diagram(&example7().marked_pair().unwrap()).unwrap();
        assert_eq!(cd.shape(), vec![1]);
        assert_eq!(cd.dot_cells(), vec![(1, 1)]);

        let raised = OrbitDatum::new(7, 3, 4, vec![3, 5, 7], vec![4, 6], vec![(1, 7), (2, 3)]).unwrap();
        let cd = common_diagram(&raised.marked_pair().unwrap()).unwrap();
        assert_eq!(cd.shape(), vec![2, 2]);
        let mut cells = cd.dot_cells();
        cells.sort();
        assert_eq!(cells, vec![(1, 1), (2, 2)]);
    }

    #[test]
    fn empty_common_diagram() {
        let d = OrbitDatum::new(2, 1, 1, vec![1], vec![1], vec![]).unwrap();
        let cd = common_diagram(&d.marked_pair().unwrap()).unwrap();
        assert_eq!(cd.box_count(), 0);
        assert!(cd.hook_union().is_empty());
    }

    #[test]
    fn corrupted_marked_pair_is_detected() {
        let mut mp = example9().marked_pair().unwrap();
        mp.dots = vec![(9, 2)];
        assert_eq!(
            common_diagram(&mp),
            Err(DatumError::DotOutsideCommonDiagram { gamma: 9, delta: 2 })
        );
    }

    #[test]
    fn hook_union_of_rectangle_with_diagonal_dots() {
        let cd = CommonDiagram::from_shape(&[4, 4, 4], &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(cd.hook_union().len(), 12);
        let none = CommonDiagram::from_shape(&[4, 4, 4], &[]).unwrap();
        assert!(none.hook_union().is_empty());
    }

    #[test]
    fn dimensions_of_examples() {
        let d = example9();
        assert_eq!(d.rank(), 1);
        assert_eq!(d.stratum().unwrap(), 1);
        assert_eq!(d.dimension().unwrap(), 20);

        let open = OrbitDatum::new(2, 1, 1, vec![2], vec![], vec![(1, 2)]).unwrap();
        assert_eq!((open.rank(), open.stratum().unwrap(), open.dimension().unwrap()), (1, 0, 2));

        let max = OrbitDatum::new(8, 3, 4, vec![6, 7, 8], vec![5], vec![(2, 8), (3, 7), (4, 6)]).unwrap();
        assert_eq!(max.dimension().unwrap(), 31);
        assert_eq!(total_dimension(8, 3, 4), 31);
    }

    #[test]
    fn stratum_requires_valid_datum() {
        let bad = OrbitDatum::unchecked(3, 2, 2, vec![2, 3], vec![1], vec![(1, 2)]);
        assert!(matches!(bad.stratum(), Err(DatumError::Invalid(_))));
        let d = OrbitDatum::new(3, 2, 2, vec![1, 2], vec![1, 2], vec![]).unwrap();
        assert_eq!(d.stratum().unwrap(), 2);
    }

    #[test]
    fn rows_from_path_and_back() {
        let y = YoungDiagram::from_vertical_set(9, &[3, 5, 6, 9]);
        let z = YoungDiagram::from_rows(4, 5, y.rows()).unwrap();
        assert_eq!(y, z);
        assert!(YoungDiagram::from_rows(2, 3, &[1, 2]).is_none());
        assert!(YoungDiagram::from_rows(2, 3, &[4]).is_none());
    }

    #[test]
    fn starred_hook_example() {
        let cd = CommonDiagram::from_shape(&[8, 7, 5, 4, 2], &[(2, 6), (3, 1), (4, 4)]).unwrap();
        assert_eq!(cd.box_count(), 26);
        assert_eq!(cd.hook_union().len(), 15);
        assert_eq!(cd.render(), "*..*.*..\n*****#.\n#..*.\n***#\n..\n");
        let d = OrbitDatum::from_parts(13, vec![3, 6, 8, 11, 13], vec![3, 13], vec![(9, 11), (1, 8), (5, 6)]).unwrap();
        let real = common_diagram(&d.marked_pair().unwrap()).unwrap();
        assert_eq!(real.render(), cd.render());
        // Both diagrams coincide with the common one.
        assert_eq!(d.dimension().unwrap(), 26 + 26 - 26 + 15);
    }
}
