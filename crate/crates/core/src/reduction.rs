//! The four-layer capacitated network built from a graph, and the
//! interdiction budget formula.
//!
//! Layout: a single source, one node per graph edge, one node per graph
//! vertex, a single sink. The source feeds each edge node at capacity 2;
//! each edge node feeds its edge's two endpoint vertex nodes at capacity 1;
//! each vertex node feeds the sink at capacity 1. Source arc `i`
//! corresponds to graph edge `i`, so "interdict source arc i" and "delete
//! graph edge i" are the same statement everywhere in this crate.

use crate::graph::Graph;
use serde::Serialize;

/// One capacitated arc between consecutive layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub from: u32,
    pub to: u32,
    pub cap: u32,
}

/// The layered network. Node ids: source = 0, edge node `i` = `1 + i`,
/// vertex node `v` = `1 + m + (v - 1)`, sink = `1 + m + n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredNetwork {
    source: u32,
    sink: u32,
    edge_nodes: Vec<u32>,
    vertex_nodes: Vec<u32>,
    source_arcs: Vec<Arc>,
    middle_arcs: Vec<Arc>,
    sink_arcs: Vec<Arc>,
}

/// Serializable dump of a network: layer membership plus the full arc list.
#[derive(Debug, Clone, Serialize)]
pub struct NetworkDump {
    pub layers: LayerDump,
    pub arcs: Vec<Arc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LayerDump {
    pub source: u32,
    pub edge_nodes: Vec<u32>,
    pub vertex_nodes: Vec<u32>,
    pub sink: u32,
}

impl LayeredNetwork {
    pub fn source(&self) -> u32 {
        self.source
    }

    pub fn sink(&self) -> u32 {
        self.sink
    }

    /// Total node count: `2 + |E| + |V|`.
    pub fn node_count(&self) -> usize {
        2 + self.edge_nodes.len() + self.vertex_nodes.len()
    }

    /// One node per graph edge, in edge order.
    pub fn edge_nodes(&self) -> &[u32] {
        &self.edge_nodes
    }

    /// One node per graph vertex, in vertex order.
    pub fn vertex_nodes(&self) -> &[u32] {
        &self.vertex_nodes
    }

    /// Source-to-edge-node arcs, capacity 2, indexed like graph edges.
    pub fn source_arcs(&self) -> &[Arc] {
        &self.source_arcs
    }

    /// Edge-node-to-vertex-node arcs, capacity 1; arcs `2i` and `2i + 1`
    /// belong to edge `i`.
    pub fn middle_arcs(&self) -> &[Arc] {
        &self.middle_arcs
    }

    /// Vertex-node-to-sink arcs, capacity 1, in vertex order.
    pub fn sink_arcs(&self) -> &[Arc] {
        &self.sink_arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_nodes.len()
    }

    /// Recovers the originating graph from the middle-arc endpoints.
    pub fn to_graph(&self) -> Graph {
        let m = self.edge_nodes.len() as u32;
        let n = self.vertex_nodes.len() as u32;
        let mut pairs = Vec::with_capacity(m as usize);
        for chunk in self.middle_arcs.chunks_exact(2) {
            let u = chunk[0].to - m;
            let v = chunk[1].to - m;
            pairs.push((u, v));
        }
        Graph::from_edge_list(n, pairs).expect("network middle arcs encode a simple graph")
    }

    pub fn dump(&self) -> NetworkDump {
        let mut arcs =
            Vec::with_capacity(self.source_arcs.len() + self.middle_arcs.len() + self.sink_arcs.len());
        arcs.extend_from_slice(&self.source_arcs);
        arcs.extend_from_slice(&self.middle_arcs);
        arcs.extend_from_slice(&self.sink_arcs);
        NetworkDump {
            layers: LayerDump {
                source: self.source,
                edge_nodes: self.edge_nodes.clone(),
                vertex_nodes: self.vertex_nodes.clone(),
                sink: self.sink,
            },
            arcs,
        }
    }
}

/// Builds the layered network for a graph.
pub fn build_network(g: &Graph) -> LayeredNetwork {
    let n = g.n();
    let m = g.edge_count() as u32;
    let source = 0u32;
    let sink = 1 + m + n;
    let edge_nodes: Vec<u32> = (0..m).map(|i| 1 + i).collect();
    let vertex_nodes: Vec<u32> = (0..n).map(|v| 1 + m + v).collect();

    let source_arcs = edge_nodes
        .iter()
        .map(|&en| Arc {
            from: source,
            to: en,
            cap: 2,
        })
        .collect();
    let mut middle_arcs = Vec::with_capacity(2 * m as usize);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let en = edge_nodes[i];
        middle_arcs.push(Arc {
            from: en,
            to: vertex_nodes[(u - 1) as usize],
            cap: 1,
        });
        middle_arcs.push(Arc {
            from: en,
            to: vertex_nodes[(v - 1) as usize],
            cap: 1,
        });
    }
    let sink_arcs = vertex_nodes
        .iter()
        .map(|&vn| Arc {
            from: vn,
            to: sink,
            cap: 1,
        })
        .collect();

    LayeredNetwork {
        source,
        sink,
        edge_nodes,
        vertex_nodes,
        source_arcs,
        middle_arcs,
        sink_arcs,
    }
}

/// Interdiction budget for hunting a k-clique: `|E| - k(k-1)/2`.
///
/// Total over all k; a negative result means a k-clique needs more edges
/// than the graph has, and is interpreted by callers, not here.
pub fn interdiction_budget(edge_count: usize, k: u32) -> i64 {
    edge_count as i64 - (k as i64) * (k as i64 - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::k4_minus_edge;

    #[test]
    fn triangle_network_counts() {
        let g = Graph::from_edge_list(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let net = build_network(&g);
        assert_eq!(net.node_count(), 8);
        assert_eq!(net.source_arcs().len(), 3);
        assert_eq!(net.middle_arcs().len(), 6);
        assert_eq!(net.sink_arcs().len(), 3);
        assert!(net.source_arcs().iter().all(|a| a.cap == 2));
        assert!(net.middle_arcs().iter().all(|a| a.cap == 1));
        assert!(net.sink_arcs().iter().all(|a| a.cap == 1));
    }

    #[test]
    fn single_edge_network() {
        let g = Graph::from_edge_list(2, [(1, 2)]).unwrap();
        let net = build_network(&g);
        assert_eq!(net.node_count(), 5);
        let total_arcs =
            net.source_arcs().len() + net.middle_arcs().len() + net.sink_arcs().len();
        assert_eq!(total_arcs, 5);
    }

    #[test]
    fn edge_node_feeds_both_endpoints() {
        let net = build_network(&k4_minus_edge());
        // edge 0 is (1,2): its two middle arcs land on vertex nodes 1 and 2
        let m = net.edge_nodes().len() as u32;
        assert_eq!(net.middle_arcs()[0].from, net.edge_nodes()[0]);
        assert_eq!(net.middle_arcs()[0].to, 1 + m);
        assert_eq!(net.middle_arcs()[1].to, 1 + m + 1);
    }

    #[test]
    fn arcs_connect_consecutive_layers_only() {
        let net = build_network(&k4_minus_edge());
        for a in net.source_arcs() {
            assert_eq!(a.from, net.source());
            assert!(net.edge_nodes().contains(&a.to));
        }
        for a in net.middle_arcs() {
            assert!(net.edge_nodes().contains(&a.from));
            assert!(net.vertex_nodes().contains(&a.to));
        }
        for a in net.sink_arcs() {
            assert!(net.vertex_nodes().contains(&a.from));
            assert_eq!(a.to, net.sink());
        }
    }

    #[test]
    fn graph_recoverable_from_middle_arcs() {
        let g = k4_minus_edge();
        assert_eq!(build_network(&g).to_graph(), g);
    }

    #[test]
    fn budget_formula() {
        assert_eq!(interdiction_budget(5, 3), 2);
        assert_eq!(interdiction_budget(3, 3), 0);
        assert_eq!(interdiction_budget(4, 4), -2);
        assert_eq!(interdiction_budget(0, 0), 0);
    }
}
