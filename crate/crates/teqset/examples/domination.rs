//! Domination digraphs: captains, structure verdicts, tri-captains,
//! brooms, and sibling queries.
//!
//! Run with: cargo run --release --example domination

use teqset::{tri_captain, DominationGraph, StructureVerdict, Tournament};

fn describe(name: &str, t: &Tournament) {
    let g = DominationGraph::of(t);
    println!("{name} (code {:?}):", t.code());
    let arcs: Vec<String> = g.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect();
    println!("  captain arcs: {}", if arcs.is_empty() { "none".into() } else { arcs.join(" ") });
    match g.classify().unwrap() {
        StructureVerdict::Empty => println!("  shape: empty"),
        StructureVerdict::SpikedOddCycle { cycle } => {
            println!("  shape: spiked odd cycle through {cycle:?}")
        }
        StructureVerdict::CaterpillarForest { spines } => {
            println!("  shape: caterpillar forest, spines {spines:?}")
        }
    }
    for v in t.vertices() {
        if let Some(tri) = tri_captain(t, v) {
            println!("  tri-captain of {v}: {tri}");
        }
    }
    for order in 1..t.size() {
        for broom in g.brooms(order) {
            println!(
                "  broom of order {order}: head {} -> center {} -> leaves {}",
                broom.head, broom.center, broom.leaves
            );
        }
    }
    println!();
}

fn main() {
    describe("directed triangle", &Tournament::parse("010").unwrap());
    describe("transitive on 4", &Tournament::transitive(4));
    describe("rotational on 5", &Tournament::rotational(5));
    // Quadratic-residue tournament on 7: every in-neighborhood is a
    // triangle, so no vertex has a captain.
    let qr7 = Tournament::from_fn(7, |i, j| [1, 2, 4].contains(&((j - i) % 7)));
    describe("quadratic residues mod 7", &qr7);

    // Sibling queries live on forests; build a path 0-1-2-3 by hand.
    let path = DominationGraph::from_captains(vec![None, Some(0), Some(1), Some(2)]);
    println!("path 0-1-2-3 sibling queries:");
    for (v, u) in [(0, 2), (1, 3), (0, 1), (0, 3)] {
        println!("  siblings({v},{u}) = {}", path.are_siblings(v, u).unwrap());
    }
}
