//! The command-line operations, writing to any `io::Write`.
//!
//! Each returns `Ok(true)` on success, `Ok(false)` when a check failed, and
//! [`CommandError::Usage`] for bad arguments or unreadable input.

use std::io::{self, Write};

use thiserror::Error;

use crate::formats::{graph_to_dot, parse_matrix_text, Derived, FormatError, GraphJson, OrbitDatumJson};
use crate::poset::{binomial, build_graph, desingularization, enumerate_orbits, minimal_orbits, PosetError};
use crate::stabilizer::{orbit_dim_from_stabilizer, stabilizer_dim_oracle, stabilizer_system};
use crate::verify::{run_all, VerifyConfig};
use crate::young::OrbitDatum;
use crate::field::Rationals;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Io(_) => 1,
        }
    }
}

impl From<FormatError> for CommandError {
    fn from(e: FormatError) -> Self {
        CommandError::Usage(e.to_string())
    }
}

impl From<PosetError> for CommandError {
    fn from(e: PosetError) -> Self {
        CommandError::Usage(e.to_string())
    }
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), CommandError> {
    serde_json::to_writer(&mut *out, value).map_err(|e| CommandError::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn with_derived(d: &OrbitDatum) -> Result<OrbitDatumJson, CommandError> {
    OrbitDatumJson::with_derived(d).map_err(|e| CommandError::Usage(e.to_string()))
}

/// One JSON line per datum, in lexicographic order.
pub fn enumerate(out: &mut dyn Write, n: usize, k: usize, l: usize, d: Option<usize>) -> Result<bool, CommandError> {
    for datum in enumerate_orbits(n, k, l)? {
        let j = with_derived(&datum)?;
        if d.is_none_or(|d| j.derived.is_some_and(|x| x.stratum == d)) {
            json_line(out, &j)?;
        }
    }
    Ok(true)
}

/// Classifies the pair in a matrix text file.
pub fn canonical(out: &mut dyn Write, text: &str) -> Result<bool, CommandError> {
    let datum = parse_matrix_text(text)?.classify()?;
    json_line(out, &with_derived(&datum)?)?;
    Ok(true)
}

#[derive(serde::Serialize)]
struct DimReport {
    datum: OrbitDatumJson,
    hook: usize,
    stabilizer_system: usize,
    stabilizer_oracle: usize,
}

/// The dimension of a datum by the hook formula and both stabilizer
/// computations; fails if they disagree. `render` prints the diagrams
/// instead of JSON.
pub fn dim(out: &mut dyn Write, datum_json: &str, render: bool) -> Result<bool, CommandError> {
    let datum = OrbitDatumJson::parse(datum_json)?;
    let derived = Derived::of(&datum).map_err(|e| CommandError::Usage(e.to_string()))?;
    let system = stabilizer_system(&datum).map_err(|e| CommandError::Usage(e.to_string()))?;
    let sys_dim = orbit_dim_from_stabilizer(datum.n, system.nullity(&Rationals));
    let oracle = stabilizer_dim_oracle(&datum).map_err(|e| CommandError::Usage(e.to_string()))?;
    let oracle_dim = orbit_dim_from_stabilizer(datum.n, oracle);
    if render {
        let mp = datum.marked_pair().map_err(|e| CommandError::Usage(e.to_string()))?;
        let common = crate::young::common_diagram(&mp).map_err(|e| CommandError::Usage(e.to_string()))?;
        writeln!(out, "{mp}")?;
        writeln!(out, "common diagram {:?}:", common.shape())?;
        write!(out, "{}", common.render())?;
        writeln!(out, "dim {} (system {sys_dim}, oracle {oracle_dim})", derived.dim)?;
    } else {
        let datum = OrbitDatumJson { derived: Some(derived), ..OrbitDatumJson::bare(&datum) };
        json_line(out, &DimReport { datum, hook: derived.dim, stabilizer_system: sys_dim, stabilizer_oracle: oracle_dim })?;
    }
    Ok(derived.dim == sys_dim && derived.dim == oracle_dim)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

pub fn graph(out: &mut dyn Write, n: usize, k: usize, l: usize, format: GraphFormat) -> Result<bool, CommandError> {
    let g = build_graph(n, k, l)?;
    match format {
        GraphFormat::Dot => write!(out, "{}", graph_to_dot(&g))?,
        GraphFormat::Json => {
            json_line(out, &GraphJson::from_graph(&g).map_err(|e| CommandError::Usage(e.to_string()))?)?
        }
    }
    Ok(true)
}

#[derive(serde::Serialize)]
struct StratumRecord {
    d: usize,
    count: usize,
    expected: usize,
    dim: usize,
    orbits: Vec<OrbitDatumJson>,
}

/// One line per stratum with its minimal orbits; fails if a count is off.
pub fn minimal(out: &mut dyn Write, n: usize, k: usize, l: usize, d: Option<usize>) -> Result<bool, CommandError> {
    let (lo, hi) = OrbitDatum::stratum_bounds(n, k, l);
    let strata: Vec<usize> = match d {
        Some(d) => vec![d],
        None => (lo..=hi).collect(),
    };
    let mut ok = true;
    for d in strata {
        let mins = minimal_orbits(n, k, l, d)?;
        let expected = binomial(k + l - 2 * d, k - d);
        ok &= mins.len() == expected;
        let orbits = mins.iter().map(with_derived).collect::<Result<_, _>>()?;
        json_line(out, &StratumRecord { d, count: mins.len(), expected, dim: (k - d) * (l - d), orbits })?;
    }
    Ok(ok)
}

#[derive(serde::Serialize)]
struct DesingRecord {
    target: OrbitDatumJson,
    minimal: OrbitDatumJson,
    word: Vec<usize>,
    bs_first: crate::words::GrassPermutationWord,
    bs_second: crate::words::GrassPermutationWord,
}

pub fn desing(out: &mut dyn Write, datum_json: &str) -> Result<bool, CommandError> {
    let datum = OrbitDatumJson::parse(datum_json)?;
    let g = build_graph(datum.n, datum.k, datum.l)?;
    let data = desingularization(&g, &datum)?;
    let ok = data.check().is_ok();
    json_line(
        out,
        &DesingRecord {
            target: with_derived(&data.target)?,
            minimal: with_derived(&data.minimal)?,
            word: data.word,
            bs_first: data.bs_first,
            bs_second: data.bs_second,
        },
    )?;
    Ok(ok)
}

/// One JSON line per suite; on failure the first counterexample also goes
/// to `err`.
pub fn verify(out: &mut dyn Write, err: &mut dyn Write, cfg: &VerifyConfig) -> Result<bool, CommandError> {
    enumerate_orbits(cfg.n, cfg.k, cfg.l)?;
    let reports = run_all(cfg).map_err(CommandError::Usage)?;
    let mut ok = true;
    for r in &reports {
        json_line(out, r)?;
        if !r.passed {
            if ok {
                writeln!(err, "{} failed: {}", r.suite, r.counterexample.as_deref().unwrap_or("no detail"))?;
            }
            ok = false;
        }
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: impl FnOnce(&mut Vec<u8>) -> Result<bool, CommandError>) -> (Result<bool, CommandError>, String) {
        let mut buf = Vec::new();
        let r = f(&mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    const OPEN: &str = r#"{"n":2,"k":1,"l":1,"alpha":[2],"beta":[],"sigma_pairs":[[1,2]]}"#;

    #[test]
    fn enumerate_counts() {
        let (r, s) = run(|o| enumerate(o, 2, 1, 1, None));
        assert!(r.unwrap());
        assert_eq!(s.lines().count(), 5);
        let (_, s) = run(|o| enumerate(o, 2, 1, 1, Some(1)));
        assert_eq!(s.lines().count(), 2);
        let (r, _) = run(|o| enumerate(o, 1, 1, 1, None));
        assert_eq!(r.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn canonical_open_orbit() {
        let (r, s) = run(|o| canonical(o, "field Q\n2 1 1\n0 1\n\n1 1\n"));
        assert!(r.unwrap());
        assert!(s.contains(r#""derived":{"dim":2,"rank":1,"stratum":0}"#), "{s}");
    }

    #[test]
    fn dim_of_open_orbit() {
        let (r, s) = run(|o| dim(o, OPEN, false));
        assert!(r.unwrap());
        assert!(s.contains(r#""hook":2,"stabilizer_system":2,"stabilizer_oracle":2"#), "{s}");
        let (r, s) = run(|o| dim(o, OPEN, true));
        assert!(r.unwrap());
        assert!(s.contains("dim 2"));
    }

    #[test]
    fn minimal_strata_lines() {
        let (r, s) = run(|o| minimal(o, 9, 4, 3, None));
        assert!(r.unwrap());
        assert_eq!(s.lines().count(), 4);
        assert!(s.contains(r#""d":1,"count":10,"expected":10,"dim":6"#));
        assert!(s.contains(r#""d":0,"count":35,"expected":35,"dim":12"#));
    }

    #[test]
    fn desing_open_orbit() {
        let (r, s) = run(|o| desing(o, OPEN));
        assert!(r.unwrap());
        assert!(s.contains(r#""word":[1]"#), "{s}");
    }

    #[test]
    fn verify_plane() {
        let mut err = Vec::new();
        let (r, s) = run(|o| verify(o, &mut err, &VerifyConfig::new(2, 1, 1)));
        assert!(r.unwrap());
        assert!(s.lines().all(|l| l.contains(r#""passed":true"#)));
    }
}
