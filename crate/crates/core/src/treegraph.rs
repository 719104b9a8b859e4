//! Materializes the enumeration event stream as a rooted tree with
//! per-node path metrics, and exports it as DOT or JSON.
//!
//! Two path metrics are kept side by side: `path_length` counts edges
//! from the root, `turn_count` counts adjacent edge-kind alternations on
//! the root path. Neither is called "depth" in the exported formats.
//! Layout is deliberately not encoded; the exports carry pure adjacency
//! plus edge kinds.

use crate::enumerator::enumerate;
use crate::error::Error;
use crate::event::{EdgeKind, EnumerationEvent};
use crate::spec::ShuffleSpec;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Widest instance whose full tree is allowed in memory.
pub const TREE_WIDTH_LIMIT: u32 = 24;

/// One permutation with its place in the traversal tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalNode {
    pub event: EnumerationEvent,
    /// Child node ids in emission order.
    pub children: Vec<usize>,
    /// Edges between the root and this node.
    pub path_length: u32,
    /// Adjacent edge-kind alternations on the root path.
    pub turn_count: u32,
}

/// The complete rooted traversal tree of one instance. Node ids are
/// emission ordinals; the root is node 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalTree {
    spec: ShuffleSpec,
    nodes: Vec<TraversalNode>,
}

/// Aggregate statistics over one traversal tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub node_count: u64,
    pub max_path_length: u32,
    pub max_turn_count: u32,
    /// Non-root nodes reached by a shift edge.
    pub shift_edges: u64,
    /// Non-root nodes reached by a subtract edge.
    pub subtract_edges: u64,
    /// Child count mapped to the number of nodes with that many children.
    pub branching_histogram: BTreeMap<usize, u64>,
}

impl TraversalTree {
    /// Runs the enumeration and records every event as a tree node with
    /// its path metrics.
    pub fn build(spec: ShuffleSpec) -> Result<Self, Error> {
        if spec.width() > TREE_WIDTH_LIMIT {
            return Err(Error::InstanceTooLarge {
                width: u64::from(spec.width()),
                limit: TREE_WIDTH_LIMIT,
            });
        }
        let mut nodes: Vec<TraversalNode> = Vec::new();
        enumerate(spec, |event| {
            let id = nodes.len();
            let (path_length, turn_count) = match event.parent_index {
                None => (0, 0),
                Some(parent_index) => {
                    let parent = &mut nodes[parent_index as usize];
                    parent.children.push(id);
                    let turned =
                        parent.event.edge != EdgeKind::Root && parent.event.edge != event.edge;
                    (
                        parent.path_length + 1,
                        parent.turn_count + u32::from(turned),
                    )
                }
            };
            nodes.push(TraversalNode {
                event: *event,
                children: Vec::new(),
                path_length,
                turn_count,
            });
        });
        Ok(Self { spec, nodes })
    }

    pub fn spec(&self) -> ShuffleSpec {
        self.spec
    }

    /// All nodes in emission order; index in the slice equals node id.
    pub fn nodes(&self) -> &[TraversalNode] {
        &self.nodes
    }

    pub fn stats(&self) -> TreeStats {
        let mut stats = TreeStats {
            node_count: self.nodes.len() as u64,
            max_path_length: 0,
            max_turn_count: 0,
            shift_edges: 0,
            subtract_edges: 0,
            branching_histogram: BTreeMap::new(),
        };
        for node in &self.nodes {
            stats.max_path_length = stats.max_path_length.max(node.path_length);
            stats.max_turn_count = stats.max_turn_count.max(node.turn_count);
            match node.event.edge {
                EdgeKind::Root => {}
                EdgeKind::Shift => stats.shift_edges += 1,
                EdgeKind::Subtract => stats.subtract_edges += 1,
            }
            *stats
                .branching_histogram
                .entry(node.children.len())
                .or_insert(0) += 1;
        }
        stats
    }

    /// DOT rendering of the tree: node identifier is the decimal value,
    /// node label the zero-padded binary string; edges carry their kind
    /// and subtract edges are labeled with the subtrahend in binary.
    pub fn to_dot(&self) -> String {
        let width = self.spec.width();
        let mut out = String::from("digraph shuffle {\n");
        for node in &self.nodes {
            let value = node.event.value;
            writeln!(out, "    {} [label=\"{}\"];", value, value.to_binary(width)).unwrap();
        }
        for node in &self.nodes {
            let Some(parent_index) = node.event.parent_index else {
                continue;
            };
            let from = self.nodes[parent_index as usize].event.value;
            let to = node.event.value;
            match node.event.edge {
                EdgeKind::Shift => writeln!(out, "    {from} -> {to} [kind=shift];").unwrap(),
                EdgeKind::Subtract => {
                    let subtrahend = node
                        .event
                        .subtrahend_used
                        .expect("subtract edges carry a subtrahend");
                    writeln!(
                        out,
                        "    {from} -> {to} [kind=subtract, label=\"{}\"];",
                        subtrahend.to_binary()
                    )
                    .unwrap();
                }
                EdgeKind::Root => unreachable!("root has no parent"),
            }
        }
        out.push_str("}\n");
        out
    }

    /// The serializable form of the tree, nodes in emission order.
    pub fn to_document(&self) -> TreeDocument {
        let width = self.spec.width();
        TreeDocument {
            spec: SpecRecord {
                zeros: self.spec.zeros(),
                ones: self.spec.ones(),
            },
            nodes: self
                .nodes
                .iter()
                .map(|node| NodeRecord {
                    index: node.event.index,
                    value: node.event.value.value(),
                    binary: node.event.value.to_binary(width),
                    parent_index: node.event.parent_index,
                    edge: node.event.edge,
                    subtrahend: node.event.subtrahend_used.map(|v| v.value()),
                    shift_count: node.event.shift_count,
                    subtract_count: node.event.subtract_count,
                    path_length: node.path_length,
                    turn_count: node.turn_count,
                })
                .collect(),
        }
    }

    /// Pretty-printed JSON of [`TreeDocument`]: the stable machine
    /// interface for the tree.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("tree serialization cannot fail")
    }
}

/// JSON document for one traversal tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDocument {
    pub spec: SpecRecord,
    pub nodes: Vec<NodeRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecRecord {
    pub zeros: u32,
    pub ones: u32,
}

/// One tree node on the wire. The root carries no `parent_index`; only
/// subtract nodes carry a `subtrahend`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub index: u64,
    pub value: u64,
    pub binary: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent_index: Option<u64>,
    pub edge: EdgeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subtrahend: Option<u64>,
    pub shift_count: u32,
    pub subtract_count: u32,
    pub path_length: u32,
    pub turn_count: u32,
}
