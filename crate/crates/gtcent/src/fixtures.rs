//! Small named networks used across tests, examples and the docs.

use crate::graph::{CommunityStructure, Graph};

/// Path with nodes labeled `1..=n` in order.
pub fn path_graph(n: usize) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges: Vec<(&str, &str)> = (0..n - 1)
        .map(|i| (labels[i].as_str(), labels[i + 1].as_str()))
        .collect();
    Graph::from_edges(&edges, false).unwrap()
}

/// Star with a center (index 0) and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Graph {
    let leaf_labels: Vec<String> = (1..=leaves).map(|i| format!("l{i}")).collect();
    let edges: Vec<(&str, &str)> = leaf_labels.iter().map(|l| ("c", l.as_str())).collect();
    Graph::from_edges(&edges, false).unwrap()
}

/// Cycle with nodes labeled `1..=n`.
pub fn cycle_graph(n: usize) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut edges: Vec<(&str, &str)> = (0..n - 1)
        .map(|i| (labels[i].as_str(), labels[i + 1].as_str()))
        .collect();
    edges.push((labels[n - 1].as_str(), labels[0].as_str()));
    Graph::from_edges(&edges, false).unwrap()
}

/// Complete graph with nodes labeled `1..=n`.
pub fn complete_graph(n: usize) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((labels[u].as_str(), labels[v].as_str()));
        }
    }
    Graph::from_edges(&edges, false).unwrap()
}

/// Copy of a graph with every edge weight set to 1 and the weighted flag
/// on; useful for checking weighted solvers against unweighted ones.
pub fn with_unit_weights(g: &Graph) -> Graph {
    let mut b = Graph::builder(g.is_directed());
    for v in 0..g.node_count() {
        b.node(g.label(v));
    }
    for (u, v, _) in g.edges() {
        b.edge_line(g.label(u), g.label(v), Some(1.0), 0).unwrap();
    }
    b.build().unwrap()
}

/// The 13-node sample network: two 5-degree hubs `v1`, `v2` joined
/// through `v6`/`v7`/`v8`, a far node `v3`, and a pendant branch
/// `v11`-`v12`/`v13` hanging off `v8`.
pub fn sample_network_13() -> Graph {
    Graph::from_edges(
        &[
            ("v1", "v7"),
            ("v7", "v2"),
            ("v4", "v1"),
            ("v5", "v1"),
            ("v1", "v6"),
            ("v6", "v2"),
            ("v2", "v9"),
            ("v9", "v3"),
            ("v1", "v8"),
            ("v8", "v2"),
            ("v2", "v10"),
            ("v10", "v3"),
            ("v8", "v11"),
            ("v11", "v12"),
            ("v11", "v13"),
        ],
        false,
    )
    .unwrap()
}

/// The 19-node two-hub network: `v1` with eight leaves, `v2` with four
/// leaves plus the neighbor hub `v3` (four leaves of its own), and a
/// single bridge between leaf `l4` of `v1` and leaf `m1` of `v2`. Both
/// hubs control 98 geodesics, yet `v2` shares most of its load with `v3`.
pub fn two_hub_network_19() -> Graph {
    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 1..=8 {
        edges.push(("v1".into(), format!("l{i}")));
    }
    for i in 1..=4 {
        edges.push(("v2".into(), format!("m{i}")));
    }
    edges.push(("v2".into(), "v3".into()));
    for i in 1..=4 {
        edges.push(("v3".into(), format!("r{i}")));
    }
    edges.push(("l4".into(), "m1".into()));
    let e: Vec<(&str, &str)> = edges
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    Graph::from_edges(&e, false).unwrap()
}

/// Two linked 4-leaf stars with centers `v2` and `v3`; the pair
/// `{v2, v3}` controls all 28 outside geodesics.
pub fn double_star_10() -> Graph {
    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 1..=4 {
        edges.push(("v2".into(), format!("a{i}")));
    }
    edges.push(("v2".into(), "v3".into()));
    for i in 1..=4 {
        edges.push(("v3".into(), format!("b{i}")));
    }
    let e: Vec<(&str, &str)> = edges
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    Graph::from_edges(&e, false).unwrap()
}

/// Zachary's karate club: 34 members, 78 ties, and the two factions that
/// formed around the instructor (node 1) and the administrator (node 34)
/// after the split. Labels are the customary 1-based member numbers.
///
/// The faction assignment is the standard one: nodes
/// 1-9, 11-14, 17, 18, 20, 22 sided with the instructor, the rest with
/// the administrator.
pub fn zachary_karate_club() -> (Graph, CommunityStructure) {
    const EDGES: &[(u32, u32)] = &[
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
        (1, 8),
        (1, 9),
        (1, 11),
        (1, 12),
        (1, 13),
        (1, 14),
        (1, 18),
        (1, 20),
        (1, 22),
        (1, 32),
        (2, 3),
        (2, 4),
        (2, 8),
        (2, 14),
        (2, 18),
        (2, 20),
        (2, 22),
        (2, 31),
        (3, 4),
        (3, 8),
        (3, 9),
        (3, 10),
        (3, 14),
        (3, 28),
        (3, 29),
        (3, 33),
        (4, 8),
        (4, 13),
        (4, 14),
        (5, 7),
        (5, 11),
        (6, 7),
        (6, 11),
        (6, 17),
        (7, 17),
        (9, 31),
        (9, 33),
        (9, 34),
        (10, 34),
        (14, 34),
        (15, 33),
        (15, 34),
        (16, 33),
        (16, 34),
        (19, 33),
        (19, 34),
        (20, 34),
        (21, 33),
        (21, 34),
        (23, 33),
        (23, 34),
        (24, 26),
        (24, 28),
        (24, 30),
        (24, 33),
        (24, 34),
        (25, 26),
        (25, 28),
        (25, 32),
        (26, 32),
        (27, 30),
        (27, 34),
        (28, 34),
        (29, 32),
        (29, 34),
        (30, 33),
        (30, 34),
        (31, 33),
        (31, 34),
        (32, 33),
        (32, 34),
        (33, 34),
    ];
    const INSTRUCTOR_FACTION: &[u32] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22];
    let mut b = Graph::builder(false);
    for i in 1..=34u32 {
        b.node(&i.to_string());
    }
    for &(u, v) in EDGES {
        b.edge_line(&u.to_string(), &v.to_string(), None, 0)
            .unwrap();
    }
    let g = b.build().unwrap();
    let assignment: Vec<usize> = (1..=34u32)
        .map(|i| usize::from(!INSTRUCTOR_FACTION.contains(&i)))
        .collect();
    let cs = CommunityStructure::new(assignment).unwrap();
    (g, cs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        let f1 = sample_network_13();
        assert_eq!(f1.node_count(), 13);
        assert_eq!(f1.edge_count(), 15);
        let f2 = two_hub_network_19();
        assert_eq!(f2.node_count(), 19);
        assert_eq!(f2.edge_count(), 18);
        let f3 = double_star_10();
        assert_eq!(f3.node_count(), 10);
        assert_eq!(f3.edge_count(), 9);
    }

    #[test]
    fn shipped_data_files_match_the_embedded_fixtures() {
        let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
        let read = |name: &str| std::fs::read_to_string(root.join(name)).unwrap();
        let (karate, cs) = zachary_karate_club();
        let from_file = Graph::parse_edge_list(&read("karate.edges"), false).unwrap();
        assert_eq!(from_file.node_count(), karate.node_count());
        assert_eq!(from_file.edge_count(), karate.edge_count());
        for (u, v, _) in karate.edges() {
            let fu = from_file.node_id(karate.label(u)).unwrap();
            let fv = from_file.node_id(karate.label(v)).unwrap();
            assert!(from_file.has_edge(fu, fv));
        }
        let file_cs =
            crate::graph::CommunityStructure::parse(&from_file, &read("karate.communities"))
                .unwrap();
        for v in 0..34 {
            let fv = from_file.node_id(karate.label(v)).unwrap();
            assert_eq!(file_cs.community_of(fv), cs.community_of(v));
        }
        let sample = Graph::parse_edge_list(&read("sample13.edges"), false).unwrap();
        assert_eq!(sample.edge_count(), sample_network_13().edge_count());
        let twohub = Graph::parse_edge_list(&read("twohub19.edges"), false).unwrap();
        assert_eq!(twohub.node_count(), two_hub_network_19().node_count());
    }

    #[test]
    fn karate_club_shape_and_split() {
        let (g, cs) = zachary_karate_club();
        assert_eq!(g.node_count(), 34);
        assert_eq!(g.edge_count(), 78);
        assert_eq!(cs.community_count(), 2);
        assert_eq!(cs.members(0).len(), 17);
        assert_eq!(cs.members(1).len(), 17);
        assert_eq!(g.degree(g.node_id("34").unwrap()), 17);
        assert_eq!(g.degree(g.node_id("1").unwrap()), 16);
    }
}
