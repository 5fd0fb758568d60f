//! JSON records, DOT export and the matrix text format.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::{canonical_datum, CanonicalError};
use crate::field::{Field, FieldError, FieldKind};
use crate::poset::{EdgeKind, PosetError, RaisingEdge, WeakOrderGraph};
use crate::subspace::{LinAlgError, Subspace};
use crate::young::{DatumError, InvalidDatum, OrbitDatum};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{space}: column {column} is a combination of the earlier columns")]
    DependentColumn { space: char, column: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] InvalidDatum),
    #[error(transparent)]
    Datum(#[from] DatumError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("derived block {found:?} does not match recomputed {expected:?}")]
    DerivedMismatch { found: Derived, expected: Derived },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub dim: usize,
    pub rank: usize,
    pub stratum: usize,
}

impl Derived {
    pub fn of(datum: &OrbitDatum) -> Result<Self, DatumError> {
        Ok(Derived { dim: datum.dimension()?, rank: datum.rank(), stratum: datum.stratum()? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDatumJson {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub sigma_pairs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived: Option<Derived>,
}

impl OrbitDatumJson {
    pub fn bare(d: &OrbitDatum) -> Self {
        OrbitDatumJson {
            n: d.n,
            k: d.k,
            l: d.l,
            alpha: d.alpha.clone(),
            beta: d.beta.clone(),
            sigma_pairs: d.sigma_pairs.iter().map(|&(a, b)| [a, b]).collect(),
            derived: None,
        }
    }

    pub fn with_derived(d: &OrbitDatum) -> Result<Self, DatumError> {
        Ok(OrbitDatumJson { derived: Some(Derived::of(d)?), ..Self::bare(d) })
    }

    /// Validates the datum and, when present, the derived block.
    pub fn to_datum(&self) -> Result<OrbitDatum, FormatError> {
        let d = OrbitDatum::new(
            self.n,
            self.k,
            self.l,
            self.alpha.clone(),
            self.beta.clone(),
            self.sigma_pairs.iter().map(|&[a, b]| (a, b)).collect(),
        )?;
        if let Some(found) = self.derived {
            let expected = Derived::of(&d)?;
            if found != expected {
                return Err(FormatError::DerivedMismatch { found, expected });
            }
        }
        Ok(d)
    }

    pub fn parse(text: &str) -> Result<OrbitDatum, FormatError> {
        serde_json::from_str::<OrbitDatumJson>(text)?.to_datum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub datum: OrbitDatumJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub source: usize,
    pub target: usize,
    pub simple_index: usize,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<EdgeJson>,
}

impl GraphJson {
    pub fn from_graph(g: &WeakOrderGraph) -> Result<Self, DatumError> {
        let nodes = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, v)| Ok(NodeJson { id, datum: OrbitDatumJson::with_derived(v)? }))
            .collect::<Result<_, DatumError>>()?;
        let edges = g
            .edges()
            .iter()
            .map(|e| EdgeJson { source: e.source, target: e.target, simple_index: e.simple_index, kind: e.kind })
            .collect();
        Ok(GraphJson { n: g.n, k: g.k, l: g.l, nodes, edges })
    }

    /// Rebuilds the graph; ids must be `0..nodes.len()` in order.
    pub fn to_graph(&self) -> Result<WeakOrderGraph, FormatError> {
        let mut vertices = Vec::with_capacity(self.nodes.len());
        for (i, node) in self.nodes.iter().enumerate() {
            if node.id != i {
                return Err(FormatError::Parse { line: 0, message: format!("node {i} has id {}", node.id) });
            }
            vertices.push(node.datum.to_datum()?);
        }
        let edges = self
            .edges
            .iter()
            .map(|e| RaisingEdge { source: e.source, target: e.target, simple_index: e.simple_index, kind: e.kind })
            .collect();
        Ok(WeakOrderGraph::from_parts(self.n, self.k, self.l, vertices, edges)?)
    }
}

/// Graphviz text: one node per orbit, labelled by its datum and dimension.
pub fn graph_to_dot(g: &WeakOrderGraph) -> String {
    let mut out = format!("digraph weak_order_{}_{}_{} {{\n  rankdir=BT;\n", g.n, g.k, g.l);
    for (id, v) in g.vertices().iter().enumerate() {
        let label = format!("{v}\\ndim {}", g.dim(id));
        let _ = writeln!(
            out,
            "  n{id} [label=\"{}\", dim={}, rank={}, stratum={}];",
            label.replace('"', "\\\""),
            g.dim(id),
            v.rank(),
            g.stratum(id)
        );
    }
    for e in g.edges() {
        let kind = match e.kind {
            EdgeKind::RankRaising => "RANK_RAISING",
            EdgeKind::Plain => "PLAIN",
        };
        let style = if e.kind == EdgeKind::RankRaising { "bold" } else { "solid" };
        let _ = writeln!(
            out,
            "  n{} -> n{} [label=\"{}\", kind={kind}, style={style}];",
            e.source, e.target, e.simple_index
        );
    }
    out.push_str("}\n");
    out
}

/// A pair of subspaces read from the matrix text format, before the field is
/// fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixInput {
    pub field: FieldKind,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    /// `k` columns of `n` tokens each.
    pub u_columns: Vec<Vec<String>>,
    /// `l` columns of `n` tokens each.
    pub w_columns: Vec<Vec<String>>,
}

/// ```text
/// field Q
/// 2 1 1
/// 0 1
///
/// 1 1
/// ```
/// Line 1 names the field (`Q` or a prime), line 2 gives `n k l`. Two
/// blocks follow, separated by a blank line: the columns of `U`, then the
/// columns of `W`, entries listed column after column. Line breaks inside a
/// block are free; one column per line reads best. `#` starts a comment.
pub fn parse_matrix_text(text: &str) -> Result<MatrixInput, FormatError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .collect();
    let mut it = lines.iter().copied().skip_while(|(_, l)| l.is_empty());
    let err = |line: usize, message: &str| FormatError::Parse { line, message: message.to_string() };

    let (fl, field_line) = it.next().ok_or_else(|| err(1, "empty input"))?;
    let field = match field_line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["field", f] => FieldKind::parse(f)?,
        _ => return Err(err(fl, "expected `field Q` or `field <prime>`")),
    };
    let (sl, size_line) = it.next().ok_or_else(|| err(fl + 1, "missing `n k l` line"))?;
    let sizes: Vec<usize> = size_line
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| err(sl, "expected three non-negative integers `n k l`"))?;
    let [n, k, l] = sizes[..] else {
        return Err(err(sl, "expected three non-negative integers `n k l`"));
    };

    let mut blocks: Vec<Vec<(usize, String)>> = Vec::new();
    let mut current: Vec<(usize, String)> = Vec::new();
    for (ln, line) in it {
        if line.is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
            continue;
        }
        current.extend(line.split_whitespace().map(|t| (ln, t.to_string())));
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    if blocks.len() != 2 {
        return Err(err(sl, &format!("expected 2 blocks (U and W) after line {sl}, found {}", blocks.len())));
    }
    let columns = |block: &[(usize, String)], count: usize, name: char| -> Result<Vec<Vec<String>>, FormatError> {
        if block.len() != n * count {
            let at = block.first().map_or(sl, |t| t.0);
            return Err(err(at, &format!("block {name} has {} entries, expected n·{} = {}", block.len(), count, n * count)));
        }
        for (ln, tok) in block {
            field.check_token(tok).map_err(|e| err(*ln, &e.to_string()))?;
        }
        Ok(block.chunks(n.max(1)).take(count).map(|c| c.iter().map(|t| t.1.clone()).collect()).collect())
    };
    let u_columns = columns(&blocks[0], k, 'U')?;
    let w_columns = columns(&blocks[1], l, 'W')?;
    Ok(MatrixInput { field, n, k, l, u_columns, w_columns })
}

impl MatrixInput {
    pub fn subspaces<F: Field>(&self, field: F) -> Result<(Subspace<F>, Subspace<F>), FormatError> {
        let build = |cols: &[Vec<String>], space: char| -> Result<Subspace<F>, FormatError> {
            let parsed: Vec<Vec<F::Elem>> = cols
                .iter()
                .map(|c| c.iter().map(|t| field.parse_elem(t)).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?;
            Subspace::from_columns(field.clone(), self.n, &parsed).map_err(|e| match e {
                LinAlgError::DependentColumn { column } => FormatError::DependentColumn { space, column },
                other => FormatError::Canonical(other.into()),
            })
        };
        Ok((build(&self.u_columns, 'U')?, build(&self.w_columns, 'W')?))
    }

    /// Classifies the pair over the field named in the file.
    pub fn classify(&self) -> Result<OrbitDatum, FormatError> {
        fn go<F: Field>(m: &MatrixInput, f: F) -> Result<OrbitDatum, FormatError> {
            let (u, w) = m.subspaces(f)?;
            Ok(canonical_datum(&u, &w)?)
        }
        match &self.field {
            FieldKind::Rational => go(self, crate::field::Rationals),
            FieldKind::Prime(p) => go(self, *p),
        }
    }
}

/// Writes a pair of subspaces in the matrix text format, one basis vector
/// per line.
pub fn write_matrix_text<F: Field>(u: &Subspace<F>, w: &Subspace<F>) -> String {
    let field = u.field();
    let mut out = format!("field {}\n{} {} {}\n", field_token(field), u.ambient(), u.dim(), w.dim());
    for (i, s) in [u, w].into_iter().enumerate() {
        if i == 1 {
            out.push('\n');
        }
        for v in s.basis() {
            out.push_str(&v.iter().map(|x| field.format_elem(x)).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
    }
    out
}

fn field_token<F: Field>(field: &F) -> String {
    match field.characteristic() {
        0 => "Q".to_string(),
        p => p.to_string(),
    }
}
