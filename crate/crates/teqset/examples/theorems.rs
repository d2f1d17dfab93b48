//! Theorem verifiers over generated and enumerated families.
//!
//! Locally transitive tournaments (every in- and out-neighborhood
//! transitive) and tournaments whose domination digraph has a spanning
//! directed cycle are both known to have a unique minimal retentive set;
//! this example runs both verifiers and prints their verdicts.
//!
//! Run with: cargo run --release --example theorems

use teqset::{verify_hamiltonian_domcycle, verify_locally_transitive, Solver};

fn main() {
    let solver = Solver::new();

    let lt = verify_locally_transitive(&solver, 1000, 12, 42).unwrap();
    println!(
        "locally transitive: {} random tournaments (sizes <= 12), {} violations",
        lt.examined,
        lt.violations.len()
    );
    for violation in &lt.violations {
        println!("  {violation}");
    }

    let ham = verify_hamiltonian_domcycle(&solver, 7).unwrap();
    println!(
        "spanning domination cycle: {} qualifying tournaments (sizes <= 7), {} violations",
        ham.examined,
        ham.violations.len()
    );
    for violation in &ham.violations {
        println!("  {violation}");
    }
}
