//! Resumable snapshots of the frontier between phases.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::stats::SearchStats;
use super::{Algorithm, Pair, SearchConfig};
use crate::containment::Mode;
use crate::decomposition::{validate, Validity};
use crate::graph::{decode_graph6, encode_graph6, Label, VertexSet};

pub const CHECKPOINT_SCHEMA: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckpointError {
    #[error("checkpoint is not valid JSON: {0}")]
    Json(String),
    #[error("unsupported checkpoint schema {0}")]
    Schema(u32),
    #[error("checkpoint digest does not match its contents")]
    Digest,
    #[error("checkpoint was written for a different configuration")]
    ConfigMismatch,
    #[error("bad frontier pair {index}: {reason}")]
    BadPair { index: usize, reason: String },
}

/// The parts of a configuration that determine the search tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub k: usize,
    pub class: String,
    pub mode: Mode,
    /// Patterns in graph6, in the pattern set's order.
    pub patterns: Vec<String>,
    pub max_order: usize,
    pub algorithm: Algorithm,
    pub hdf_shortcut: bool,
}

impl ConfigEcho {
    pub fn of(cfg: &SearchConfig) -> Self {
        ConfigEcho {
            k: cfg.k,
            class: cfg.class.name().to_string(),
            mode: cfg.patterns.mode(),
            patterns: cfg.patterns.patterns().iter().map(encode_graph6).collect(),
            max_order: cfg.max_order,
            algorithm: cfg.algorithm,
            hdf_shortcut: cfg.hdf_shortcut,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramePair {
    pub graph6: String,
    /// Bag vertices by label, ascending by index.
    pub bag: Vec<String>,
    /// Index of the vertex that left at each step.
    pub trace: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub schema: u32,
    pub config: ConfigEcho,
    pub phase: usize,
    pub frontier: Vec<FramePair>,
    pub stats: SearchStats,
    /// Hex SHA-256 over the JSON of `config`, `phase` and `frontier`.
    pub digest: String,
}

fn digest(config: &ConfigEcho, phase: usize, frontier: &[FramePair]) -> String {
    let body = serde_json::to_vec(&(config, phase, frontier)).expect("serialisable");
    hex::encode(Sha256::digest(&body))
}

impl Checkpoint {
    pub(crate) fn capture(cfg: &SearchConfig, phase: usize, frontier: &[Pair], stats: &SearchStats) -> Self {
        let config = ConfigEcho::of(cfg);
        let frontier: Vec<FramePair> = frontier
            .iter()
            .map(|p| FramePair {
                graph6: encode_graph6(p.graph()),
                bag: p.bag_labels(),
                trace: p.trace().to_vec(),
            })
            .collect();
        Checkpoint {
            schema: CHECKPOINT_SCHEMA,
            digest: digest(&config, phase, &frontier),
            config,
            phase,
            frontier,
            stats: stats.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    /// Parses and checks schema and digest.
    pub fn from_json(text: &str) -> Result<Self, CheckpointError> {
        let cp: Checkpoint = serde_json::from_str(text).map_err(|e| CheckpointError::Json(e.to_string()))?;
        if cp.schema != CHECKPOINT_SCHEMA {
            return Err(CheckpointError::Schema(cp.schema));
        }
        if digest(&cp.config, cp.phase, &cp.frontier) != cp.digest {
            return Err(CheckpointError::Digest);
        }
        Ok(cp)
    }

    /// Rebuilds the frontier, checking every pair against its trace.
    pub(crate) fn frontier_pairs(&self, k: usize) -> Result<Vec<Pair>, CheckpointError> {
        self.frontier
            .iter()
            .enumerate()
            .map(|(index, f)| {
                let bad = |reason: String| CheckpointError::BadPair { index, reason };
                let graph = decode_graph6(&f.graph6)
                    .map_err(|e| bad(e.to_string()))?
                    .relabel_universe(k);
                if graph.order() != k + self.phase || f.trace.len() + 1 != self.phase {
                    return Err(bad("order does not match the phase".into()));
                }
                let mut bag = VertexSet::default();
                for s in &f.bag {
                    let label: Label = s
                        .parse()
                        .map_err(|e: crate::graph::GraphError| bad(e.to_string()))?;
                    match label.index(k) {
                        Some(i) if i < graph.order() => bag.insert(i),
                        _ => return Err(bad(format!("unknown bag vertex {s}"))),
                    }
                }
                let pair = Pair::from_parts(graph, bag, f.trace.clone());
                let d = pair.decomposition();
                if d.bags.last() != Some(&bag) || validate_partial(&pair, &d) {
                    return Err(bad("trace does not replay to the bag".into()));
                }
                Ok(pair)
            })
            .collect()
    }
}

/// True when the trace is not a smooth decomposition of the graph.
fn validate_partial(pair: &Pair, d: &crate::decomposition::PathDecomposition) -> bool {
    let k = pair.k();
    if pair
        .trace()
        .iter()
        .enumerate()
        .any(|(t, &u)| !d.bags[t].contains(u as usize))
    {
        return true;
    }
    validate(pair.graph(), d, k) != Validity::ValidSmooth
}
