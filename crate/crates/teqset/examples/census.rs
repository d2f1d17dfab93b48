//! The retentive-tournament census: structural filters plus full
//! verification.
//!
//! Counts, for each size, the irreducible classes whose unique minimal
//! retentive set is the whole vertex set. The filters eliminate any
//! tournament whose domination digraph has a non-spanning directed
//! cycle, and any with a proper 3-locally-bounded retentive subset of
//! low-in-degree vertices; full mode verifies the survivors. Sizes 8+
//! run the filters only, giving upper bounds.
//!
//! Run with: cargo run --release --example census

use teqset::{beta_census, CensusMode, CensusOptions, Solver};

fn main() {
    let solver = Solver::new();
    for n in 4..=7 {
        let report = beta_census(&solver, n, CensusOptions::default()).unwrap();
        println!(
            "n={n}: {} irreducible classes, {} retain all vertices",
            report.total,
            report.survivors.len()
        );
    }

    let filtered = beta_census(
        &solver,
        8,
        CensusOptions {
            mode: CensusMode::FilterOnly,
            allow_long_run: false,
        },
    )
    .unwrap();
    println!(
        "n=8: {} irreducible classes, {} pass the filters (upper bound)",
        filtered.total,
        filtered.survivors.len()
    );

    println!();
    println!("full report for n=6:");
    print!("{}", beta_census(&solver, 6, CensusOptions::default()).unwrap());
}
