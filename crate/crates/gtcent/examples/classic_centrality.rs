//! Classic centralities and their group extensions.
//!
//! ```bash
//! cargo run --example classic_centrality
//! ```
//!
//! Degree, closeness and betweenness each crown a different node of the
//! same 13-node network, and a well-chosen pair of nodes is worth more
//! than the sum of its parts.

use gtcent::fixtures::sample_network_13;
use gtcent::graph::{classic_centrality, group_centrality, CentralityKind};

fn main() {
    let g = sample_network_13();
    println!("13-node sample network ({} edges)\n", g.edge_count());

    let degree = classic_centrality(&g, CentralityKind::Degree);
    let closeness = classic_centrality(&g, CentralityKind::Closeness);
    let betweenness = classic_centrality(&g, CentralityKind::Betweenness);

    println!(
        "{:>5} {:>8} {:>10} {:>12}",
        "node", "degree", "closeness", "betweenness"
    );
    for v in 0..g.node_count() {
        println!(
            "{:>5} {:>8} {:>10} {:>12.2}",
            g.label(v),
            degree[v],
            closeness[v],
            betweenness[v]
        );
    }

    let best = |scores: &[f64], invert: bool| {
        let pick = (0..g.node_count())
            .min_by(|&a, &b| {
                let (x, y) = if invert {
                    (scores[a], scores[b])
                } else {
                    (scores[b], scores[a])
                };
                x.partial_cmp(&y).unwrap()
            })
            .unwrap();
        g.label(pick).to_string()
    };
    println!("\ntop by degree:      {}", best(&degree, false));
    println!(
        "top by closeness:   {} (smallest distance sum)",
        best(&closeness, true)
    );
    println!("top by betweenness: {}", best(&betweenness, false));

    // Group centrality: the two hubs jointly reach 7 distinct neighbors.
    let hubs = [g.node_id("v1").unwrap(), g.node_id("v2").unwrap()];
    let joint = group_centrality(&g, CentralityKind::Degree, &hubs).unwrap();
    println!(
        "\ngroup degree of {{v1, v2}} = {} (individually {} and {})",
        joint, degree[hubs[0]], degree[hubs[1]]
    );
}
