//! Community-aware centrality on the karate club.
//!
//! ```bash
//! cargo run --example community_owen
//! ```
//!
//! The two-level solution evaluates each member inside the faction they
//! belong to: power flows from brokering between the factions, not from
//! raw popularity.

use gtcent::community::{
    coalitional_semivalue_degree, owen_degree, preset_weights, quotient_game_value, WeightPreset,
};
use gtcent::fixtures::zachary_karate_club;
use gtcent::games::{coalition_game, shapley_oracle, Coalition};

fn main() {
    let (g, cs) = zachary_karate_club();
    let n = g.node_count();
    let f = vec![1.0; n];

    let owen = owen_degree(&g, &cs, &f).unwrap();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| owen[b].partial_cmp(&owen[a]).unwrap());
    println!("karate club, two factions, uniform member weight\n");
    println!(
        "{:>8} {:>8} {:>9} {:>8}",
        "member", "degree", "faction", "value"
    );
    for &v in order.iter().take(6) {
        println!(
            "{:>8} {:>8} {:>9} {:>8.3}",
            g.label(v),
            g.degree(v),
            cs.community_of(v),
            owen[v]
        );
    }

    // Faction totals recover the game played between whole factions.
    let quotient = coalition_game(2, |c: Coalition| {
        quotient_game_value(&g, &cs, &f, &c.to_vec())
    });
    let faction_sv = shapley_oracle(&quotient).unwrap();
    for j in 0..2 {
        let total: f64 = cs.members(j).iter().map(|&v| owen[v]).sum();
        println!(
            "\nfaction {j}: members total {:.4}, faction-level Shapley value {:.4}",
            total, faction_sv[j]
        );
    }

    // Other two-level weightings change the picture.
    let sizes = [cs.members(0).len(), cs.members(1).len()];
    for (name, preset) in [
        ("owen", WeightPreset::Owen),
        ("owen-banzhaf", WeightPreset::OwenBanzhaf),
        ("p-binomial(0.25)", WeightPreset::PBinomial(0.25)),
    ] {
        let weights = preset_weights(preset, 2, &sizes).unwrap();
        let scores = coalitional_semivalue_degree(&g, &cs, &weights, &f).unwrap();
        let top = order[0];
        println!(
            "{name:>18}: member {} scores {:.3}",
            g.label(top),
            scores[top]
        );
    }
}
