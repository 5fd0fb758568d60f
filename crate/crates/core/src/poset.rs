//! Enumeration of orbit data, the weak-order graph of minimal parabolic
//! raisings, minimal orbits, and desingularization words.

use std::collections::{BTreeSet, HashMap, VecDeque};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{grassmannian_word, GrassPermutationWord};
use crate::young::{DatumError, InvalidDatum, OrbitDatum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("need 0 < k, l < n; got n = {n}, k = {k}, l = {l}")]
    Bounds { n: usize, k: usize, l: usize },
    #[error("stratum d = {d} outside [{lo}, {hi}]")]
    StratumBounds { d: usize, lo: usize, hi: usize },
    #[error(transparent)]
    Datum(#[from] DatumError),
    #[error(transparent)]
    Invalid(#[from] InvalidDatum),
    #[error("datum {0} is not a vertex of this graph")]
    UnknownVertex(String),
    #[error("graph invariant violated: {0}")]
    Invariant(String),
}

fn check_bounds(n: usize, k: usize, l: usize) -> Result<(), PosetError> {
    if k == 0 || l == 0 || k >= n || l >= n {
        return Err(PosetError::Bounds { n, k, l });
    }
    Ok(())
}

/// Every orbit datum for `(n, k, l)`, sorted.
pub fn enumerate_orbits(n: usize, k: usize, l: usize) -> Result<Vec<OrbitDatum>, PosetError> {
    check_bounds(n, k, l)?;
    let mut out: Vec<OrbitDatum> = (1..=n)
        .combinations(k)
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|alpha| data_with_alpha(n, l, alpha))
        .collect();
    out.par_sort_unstable();
    Ok(out)
}

fn data_with_alpha(n: usize, l: usize, alpha: Vec<usize>) -> Vec<OrbitDatum> {
    let k = alpha.len();
    let mut out = Vec::new();
    let outside: Vec<usize> = (1..=n).filter(|j| !alpha.contains(j)).collect();
    for r in 0..=k.min(l) {
        for gammas in alpha.iter().copied().combinations(r) {
            let mut matchings = Vec::new();
            match_deltas(&gammas, &outside, &mut Vec::new(), &mut matchings);
            for pairs in matchings {
                let used: BTreeSet<usize> = pairs.iter().flat_map(|&(d, g)| [d, g]).collect();
                let free: Vec<usize> = (1..=n).filter(|j| !used.contains(j)).collect();
                for beta in free.into_iter().combinations(l - r) {
                    out.push(OrbitDatum::unchecked(n, k, l, alpha.clone(), beta, pairs.clone()));
                }
            }
        }
    }
    out
}

/// Injective assignments `gamma -> delta < gamma` with deltas from `outside`.
fn match_deltas(
    gammas: &[usize],
    outside: &[usize],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    let Some((&g, rest)) = gammas.split_first() else {
        out.push(current.clone());
        return;
    };
    for &d in outside.iter().filter(|&&d| d < g) {
        if current.iter().any(|&(d2, _)| d2 == d) {
            continue;
        }
        current.push((d, g));
        match_deltas(rest, outside, current, out);
        current.pop();
    }
}

/// Combinatorial shadow of the two raising types: a rank-raising step adds
/// one pair, a plain step conjugates by the simple transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EdgeKind {
    RankRaising,
    Plain,
}

fn swap_index(x: usize, i: usize) -> usize {
    if x == i {
        i + 1
    } else if x == i + 1 {
        i
    } else {
        x
    }
}

/// The orbit that `P_i` raises `datum` to, if any.
///
/// When `i` and `i+1` form an indentation in one path and a spike in the
/// other (and neither is a gamma), the raise adds the pair `(i, i+1)`.
/// Otherwise every index is conjugated by `(i, i+1)`. The candidate counts
/// only if it is a valid datum one dimension higher.
pub fn raise_candidate(datum: &OrbitDatum, i: usize) -> Option<(OrbitDatum, EdgeKind)> {
    if i == 0 || i >= datum.n {
        return None;
    }
    let dim = datum.dimension().ok()?;
    let in_alpha = |x| datum.alpha.contains(&x);
    let in_beta = |x| datum.beta.contains(&x);
    let gammas = datum.gammas();
    let pattern = (in_alpha(i) && !in_beta(i) && !in_alpha(i + 1) && in_beta(i + 1))
        || (!in_alpha(i) && in_beta(i) && in_alpha(i + 1) && !in_beta(i + 1));
    let guarded = !gammas.contains(&i) && !gammas.contains(&(i + 1));

    let (candidate, kind) = if pattern && guarded {
        let alpha = datum
            .alpha
            .iter()
            .copied()
            .filter(|&a| a != i)
            .chain(std::iter::once(i + 1))
            .unique()
            .collect();
        let beta = datum.beta.iter().copied().filter(|&b| b != i && b != i + 1).collect();
        let mut pairs = datum.sigma_pairs.clone();
        pairs.push((i, i + 1));
        (
            OrbitDatum::unchecked(datum.n, datum.k, datum.l, alpha, beta, pairs),
            EdgeKind::RankRaising,
        )
    } else {
        let t = |x| swap_index(x, i);
        let alpha = datum.alpha.iter().map(|&a| t(a)).collect();
        let beta = datum.beta.iter().map(|&b| t(b)).collect();
        let pairs = datum.sigma_pairs.iter().map(|&(d, g)| (t(d), t(g))).collect();
        (
            OrbitDatum::unchecked(datum.n, datum.k, datum.l, alpha, beta, pairs),
            EdgeKind::Plain,
        )
    };
    if !candidate.is_valid() {
        return None;
    }
    (candidate.dimension().ok()? == dim + 1).then_some((candidate, kind))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RaisingEdge {
    pub source: usize,
    pub target: usize,
    pub simple_index: usize,
    pub kind: EdgeKind,
}

/// Vertices are all orbit data for `(n, k, l)`; an edge `O -> O'` labelled
/// `i` records that `P_i` raises `O` to `O'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakOrderGraph {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    vertices: Vec<OrbitDatum>,
    dims: Vec<usize>,
    strata: Vec<usize>,
    edges: Vec<RaisingEdge>,
    index: HashMap<OrbitDatum, usize>,
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
}

impl WeakOrderGraph {
    /// Assembles a graph from explicit parts and checks its invariants.
    pub fn from_parts(
        n: usize,
        k: usize,
        l: usize,
        vertices: Vec<OrbitDatum>,
        mut edges: Vec<RaisingEdge>,
    ) -> Result<Self, PosetError> {
        check_bounds(n, k, l)?;
        let measured: Vec<Result<(usize, usize), DatumError>> = vertices
            .par_iter()
            .map(|v| Ok((v.dimension()?, v.stratum()?)))
            .collect();
        let mut dims = Vec::with_capacity(vertices.len());
        let mut strata = Vec::with_capacity(vertices.len());
        for m in measured {
            let (d, s) = m?;
            dims.push(d);
            strata.push(s);
        }
        edges.sort_unstable();
        edges.dedup();
        let index: HashMap<OrbitDatum, usize> =
            vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        if index.len() != vertices.len() {
            return Err(PosetError::Invariant("duplicate vertices".into()));
        }
        let mut incoming = vec![Vec::new(); vertices.len()];
        let mut outgoing = vec![Vec::new(); vertices.len()];
        for (e_id, e) in edges.iter().enumerate() {
            if e.source >= vertices.len() || e.target >= vertices.len() {
                return Err(PosetError::Invariant(format!("edge {e:?} leaves the vertex set")));
            }
            outgoing[e.source].push(e_id);
            incoming[e.target].push(e_id);
        }
        let g = WeakOrderGraph { n, k, l, vertices, dims, strata, edges, index, incoming, outgoing };
        g.check_invariants()?;
        Ok(g)
    }

    fn check_invariants(&self) -> Result<(), PosetError> {
        for e in &self.edges {
            let (s, t) = (e.source, e.target);
            if self.dims[t] != self.dims[s] + 1 {
                return Err(PosetError::Invariant(format!(
                    "edge {} -> {} does not raise dimension by one",
                    self.vertices[s], self.vertices[t]
                )));
            }
            if self.strata[t] != self.strata[s] {
                return Err(PosetError::Invariant(format!(
                    "edge {} -> {} leaves its stratum",
                    self.vertices[s], self.vertices[t]
                )));
            }
            let (rs, rt) = (self.vertices[s].rank(), self.vertices[t].rank());
            let expected = match e.kind {
                EdgeKind::RankRaising => rs + 1,
                EdgeKind::Plain => rs,
            };
            if rt != expected {
                return Err(PosetError::Invariant(format!(
                    "{:?} edge {} -> {} changes rank {rs} -> {rt}",
                    e.kind, self.vertices[s], self.vertices[t]
                )));
            }
        }
        // Acyclic because every edge raises dimension.
        for d in self.strata_range() {
            let sinks = self.sinks_in_stratum(d);
            if sinks.len() != 1 {
                return Err(PosetError::Invariant(format!(
                    "stratum d = {d} has {} sinks",
                    sinks.len()
                )));
            }
            let top = self.stratum_vertices(d).iter().map(|&v| self.dims[v]).max();
            if top != Some(self.dims[sinks[0]]) {
                return Err(PosetError::Invariant(format!(
                    "sink of stratum d = {d} is not of maximal dimension"
                )));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[OrbitDatum] {
        &self.vertices
    }
    pub fn edges(&self) -> &[RaisingEdge] {
        &self.edges
    }
    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn stratum(&self, v: usize) -> usize {
        self.strata[v]
    }
    pub fn id_of(&self, datum: &OrbitDatum) -> Option<usize> {
        self.index.get(datum).copied()
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = &RaisingEdge> {
        self.incoming[v].iter().map(|&e| &self.edges[e])
    }
    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = &RaisingEdge> {
        self.outgoing[v].iter().map(|&e| &self.edges[e])
    }

    pub fn strata_range(&self) -> std::ops::RangeInclusive<usize> {
        let (lo, hi) = OrbitDatum::stratum_bounds(self.n, self.k, self.l);
        lo..=hi
    }

    pub fn stratum_vertices(&self, d: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.strata[v] == d).collect()
    }

    /// Vertices with no incoming edge.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.incoming[v].is_empty()).collect()
    }

    pub fn sinks_in_stratum(&self, d: usize) -> Vec<usize> {
        self.stratum_vertices(d)
            .into_iter()
            .filter(|&v| self.outgoing[v].is_empty())
            .collect()
    }
}

/// All orbits for `(n, k, l)` with every minimal parabolic raising.
pub fn build_graph(n: usize, k: usize, l: usize) -> Result<WeakOrderGraph, PosetError> {
    let vertices = enumerate_orbits(n, k, l)?;
    let index: HashMap<&OrbitDatum, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let edges: Vec<RaisingEdge> = vertices
        .par_iter()
        .enumerate()
        .flat_map_iter(|(s, v)| {
            let index = &index;
            (1..n).filter_map(move |i| {
                let (t, kind) = raise_candidate(v, i)?;
                let target = *index.get(&t).expect("raised datum is enumerated");
                Some(RaisingEdge { source: s, target, simple_index: i, kind })
            })
        })
        .collect();
    WeakOrderGraph::from_parts(n, k, l, vertices, edges)
}

/// The data with `alpha ∪ beta = {1..k+l-d}`, `alpha ∩ beta = {1..d}` and no
/// pairs.
pub fn minimal_orbits(n: usize, k: usize, l: usize, d: usize) -> Result<Vec<OrbitDatum>, PosetError> {
    check_bounds(n, k, l)?;
    let (lo, hi) = OrbitDatum::stratum_bounds(n, k, l);
    if d < lo || d > hi {
        return Err(PosetError::StratumBounds { d, lo, hi });
    }
    let common: Vec<usize> = (1..=d).collect();
    let top = k + l - d;
    let mut out: Vec<OrbitDatum> = (d + 1..=top)
        .combinations(k - d)
        .map(|only_u| {
            let only_w = (d + 1..=top).filter(|j| !only_u.contains(j));
            let alpha = common.iter().copied().chain(only_u.iter().copied()).collect();
            let beta = common.iter().copied().chain(only_w).collect();
            OrbitDatum::unchecked(n, k, l, alpha, beta, vec![])
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

pub fn is_minimal(datum: &OrbitDatum) -> bool {
    if !datum.is_valid() || !datum.sigma_pairs.is_empty() {
        return false;
    }
    let a: BTreeSet<usize> = datum.alpha.iter().copied().collect();
    let b: BTreeSet<usize> = datum.beta.iter().copied().collect();
    let d = a.intersection(&b).count();
    let top = datum.k + datum.l - d;
    a.intersection(&b).copied().eq(1..=d) && a.union(&b).copied().eq(1..=top)
}

pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesingularizationData {
    pub target: OrbitDatum,
    pub minimal: OrbitDatum,
    /// Simple indices in the order they are applied to `minimal`.
    pub word: Vec<usize>,
    pub bs_first: GrassPermutationWord,
    pub bs_second: GrassPermutationWord,
}

impl DesingularizationData {
    /// Replays the word and checks length, shape and both Schubert words.
    pub fn check(&self) -> Result<(), String> {
        if !is_minimal(&self.minimal) {
            return Err(format!("{} is not of minimal shape", self.minimal));
        }
        let gap = self.target.dimension().map_err(|e| e.to_string())?
            - self.minimal.dimension().map_err(|e| e.to_string())?;
        if self.word.len() != gap {
            return Err(format!("word length {} != dimension gap {gap}", self.word.len()));
        }
        match replay(&self.minimal, &self.word) {
            Some(end) if end == self.target => {}
            other => return Err(format!("replay reached {other:?}, expected {}", self.target)),
        }
        for (name, bs, vertical) in [
            ("first", &self.bs_first, self.minimal.alpha.clone()),
            ("second", &self.bs_second, self.minimal.w_jumps()),
        ] {
            if !bs.is_reduced() || bs.len() != bs.boxes {
                return Err(format!("{name} Bott-Samelson word is not reduced"));
            }
            if bs.permutation() != crate::words::grassmannian_permutation(self.minimal.n, &vertical) {
                return Err(format!("{name} Bott-Samelson word has the wrong product"));
            }
        }
        Ok(())
    }
}

/// Applies the raisings in order; `None` as soon as one does not raise.
pub fn replay(start: &OrbitDatum, word: &[usize]) -> Option<OrbitDatum> {
    word.iter()
        .try_fold(start.clone(), |cur, &i| raise_candidate(&cur, i).map(|(next, _)| next))
}

/// A minimal orbit below `datum` and the lexicographically least raising word
/// from it, ties broken by the smaller minimal-orbit id.
pub fn desingularization(graph: &WeakOrderGraph, datum: &OrbitDatum) -> Result<DesingularizationData, PosetError> {
    datum.check()?;
    let target = graph
        .id_of(datum)
        .ok_or_else(|| PosetError::UnknownVertex(datum.to_string()))?;

    // Reverse BFS collects everything weakly below the target.
    let mut below = BTreeSet::from([target]);
    let mut queue = VecDeque::from([target]);
    while let Some(v) = queue.pop_front() {
        for e in graph.incoming(v) {
            if below.insert(e.source) {
                queue.push_back(e.source);
            }
        }
    }
    let mut order: Vec<usize> = below.iter().copied().collect();
    order.sort_by_key(|&v| (graph.dim(v), v));

    // Every path from a source has length equal to the dimension gap, so a
    // per-vertex best (word, origin) extends to the optimum.
    let mut best: HashMap<usize, (Vec<usize>, usize)> = HashMap::new();
    for &v in &order {
        let candidate = graph
            .incoming(v)
            .filter_map(|e| {
                best.get(&e.source).map(|(w, origin)| {
                    let mut w = w.clone();
                    w.push(e.simple_index);
                    (w, *origin)
                })
            })
            .min();
        let entry = match candidate {
            Some(c) => c,
            None => {
                if !is_minimal(&graph.vertices()[v]) {
                    return Err(PosetError::Invariant(format!(
                        "source {} is not a minimal orbit",
                        graph.vertices()[v]
                    )));
                }
                (Vec::new(), v)
            }
        };
        best.insert(v, entry);
    }
    let (word, origin) = best.remove(&target).expect("target was processed");
    let minimal = graph.vertices()[origin].clone();
    let bs_first = grassmannian_word(minimal.n, minimal.k, &minimal.alpha);
    let bs_second = grassmannian_word(minimal.n, minimal.l, &minimal.w_jumps());
    Ok(DesingularizationData { target: datum.clone(), minimal, word, bs_first, bs_second })
}
