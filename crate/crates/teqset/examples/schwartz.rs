//! Exhaustive uniqueness check: does every tournament of size n have a
//! single minimal retentive set? Any counterexample would be printed
//! with full certificates; none exist at these sizes.
//!
//! Run with: cargo run --release --example schwartz

use teqset::{schwartz_exhaustive, Solver};

fn main() {
    let solver = Solver::new();
    for n in 1..=8 {
        let records = schwartz_exhaustive(&solver, n).unwrap();
        println!("n={n}: {} tournaments with several minimal retentive sets", records.len());
        for record in records {
            println!("  {record}");
        }
    }
}
