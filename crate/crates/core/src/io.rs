//! Graph files: `{"n": 4, "edges": [[0, 1], [1, 2]], "labels": ["a", ...]}`.
//!
//! Written files are canonical: every edge has `u < v` and edges are sorted.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("reading {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("writing {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let file = GraphFile {
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&file).expect("graph serialises")
}

pub fn graph_from_json(text: &str) -> Result<Graph, IoError> {
    let file: GraphFile = serde_json::from_str(text)?;
    let edges: Vec<(usize, usize)> = file.edges.iter().map(|&[u, v]| (u, v)).collect();
    let g = Graph::new(file.n, &edges)?;
    Ok(match file.labels {
        Some(labels) => g.with_labels(labels)?,
        None => g,
    })
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    graph_from_json(&text)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<(), IoError> {
    let path = path.as_ref();
    let mut text = graph_to_json(g);
    text.push('\n');
    std::fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}
