//! Counterexample hunts for three open uniqueness claims:
//!
//! 1. a minimal retentive set of size 3 is the only minimal set;
//! 2. a directed cycle in the domination digraph is the unique minimal
//!    retentive set;
//! 3. every captain vertex belongs to the equilibrium set.
//!
//! Nothing is assumed: every isomorphism class up to the size bound is
//! checked and any hit would be printed with a certificate.
//!
//! Run with: cargo run --release --example conjectures

use teqset::{check_conjectures, Solver};

fn main() {
    let solver = Solver::new();
    let sweep = check_conjectures(&solver, 7).unwrap();
    println!("examined {} isomorphism classes of sizes 1..=7", sweep.examined);
    let claims = [
        ("size-3 minimal set is unique", &sweep.size3_unique),
        ("domination cycle is the unique minimal set", &sweep.cycle_unique),
        ("captains lie in the equilibrium set", &sweep.captains_in_teq),
    ];
    for (claim, hits) in claims {
        println!("{claim}: {} counterexamples", hits.len());
        for violation in hits {
            println!("  {violation}");
        }
    }
}
