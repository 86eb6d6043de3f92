//! Every fast solver against its exhaustive oracle.
//!
//! ```bash
//! cargo run --example oracle_crosscheck
//! ```
//!
//! The oracles evaluate the defining sums directly — slow but
//! unarguable. On desk-sized random graphs every polynomial algorithm in
//! the crate must reproduce them to within accumulated rounding.

use gtcent::betweenness::{semivalue_betweenness, svb, SizeDistribution};
use gtcent::community::{owen_degree, weighted_group_degree};
use gtcent::connectivity::{faster_svcg, ConnectivityGame};
use gtcent::degree::{nu_degree_game, sv_g1, DegreeGameSpec};
use gtcent::games::{coalition_game, owen_oracle, semivalue_oracle, shapley_oracle, Coalition};
use gtcent::graph::random::connected_gnm;
use gtcent::graph::{group_centrality, CentralityKind, CommunityStructure};

fn gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn main() {
    let n = 8;
    let g = connected_gnm(n, 6, 12);
    println!(
        "random connected graph: {n} nodes, {} edges\n",
        g.edge_count()
    );

    let influence = coalition_game(n, |c: Coalition| {
        nu_degree_game(&g, &DegreeGameSpec::G1, &c.to_vec()).unwrap()
    });
    println!(
        "sphere-of-influence solver vs Shapley oracle: gap {:.2e}",
        gap(&sv_g1(&g), &shapley_oracle(&influence).unwrap())
    );

    let group_bet = coalition_game(n, |c: Coalition| {
        group_centrality(&g, CentralityKind::Betweenness, &c.to_vec()).unwrap()
    });
    println!(
        "shapley betweenness vs oracle:                gap {:.2e}",
        gap(&svb(&g).unwrap(), &shapley_oracle(&group_bet).unwrap())
    );

    let pd = SizeDistribution::concentrated(3, n);
    println!(
        "semivalue betweenness (size 3) vs oracle:     gap {:.2e}",
        gap(
            &semivalue_betweenness(&g, &pd).unwrap(),
            &semivalue_oracle(&group_bet, &pd.to_semivalue_weights()).unwrap()
        )
    );

    let cs = CommunityStructure::new(vec![0, 0, 0, 1, 1, 1, 1, 0]).unwrap();
    let f = vec![1.0; n];
    let partition: Vec<Vec<usize>> = (0..2).map(|c| cs.members(c).to_vec()).collect();
    let wd = coalition_game(n, |c: Coalition| weighted_group_degree(&g, &f, &c.to_vec()));
    println!(
        "community-aware degree vs two-level oracle:   gap {:.2e}",
        gap(
            &owen_degree(&g, &cs, &f).unwrap(),
            &owen_oracle(&wd, &partition).unwrap()
        )
    );

    let game = ConnectivityGame::unit(&g).unwrap();
    let defining = shapley_oracle(&coalition_game(n, |c: Coalition| {
        game.coalition_value(&c.to_vec())
    }))
    .unwrap();
    println!(
        "connectivity enumerator vs defining sum:      gap {:.2e}",
        gap(&faster_svcg(&game), &defining)
    );
}
