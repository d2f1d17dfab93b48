//! Minimal retentive sets and the tournament equilibrium set.
//!
//! Walks a few landmark tournaments through the exact solver: the
//! requirement digraph (each vertex points at the equilibrium set of its
//! in-neighborhood), its sink components (the minimal retentive sets),
//! and their union (the equilibrium set).
//!
//! Run with: cargo run --release --example analyze

use teqset::{Solver, Tournament};

fn show(solver: &Solver, name: &str, t: &Tournament) {
    let analysis = solver.analyze(t);
    println!("{name} (code {:?}):", t.code());
    let reqs = solver.requirement_digraph(t);
    for v in t.vertices() {
        println!("  vertex {v}: in-neighborhood equilibrium set {}", reqs.requirement_of(v));
    }
    let sets: Vec<String> = analysis.minimal_sets.iter().map(|s| s.to_string()).collect();
    println!("  minimal retentive sets: {}", sets.join(", "));
    println!("  equilibrium set: {}", analysis.teq);
    println!("  unique minimal set: {}", analysis.schwartz_ok);
    println!();
}

fn main() {
    let solver = Solver::new();
    show(&solver, "single vertex", &Tournament::single());
    show(&solver, "transitive on 4", &Tournament::transitive(4));
    show(&solver, "directed triangle", &Tournament::parse("010").unwrap());
    show(&solver, "rotational on 5", &Tournament::rotational(5));
    // A triangle where each corner also beats a private follower.
    let t = Tournament::from_fn(6, |i, j| match (i, j) {
        (0, 1) | (1, 2) => true,
        (0, 2) => false,
        (0, 3) | (1, 4) | (2, 5) => true,
        (i, j) if i >= 3 && j >= 3 => true,
        _ => false,
    });
    show(&solver, "triangle with followers", &t);
}
