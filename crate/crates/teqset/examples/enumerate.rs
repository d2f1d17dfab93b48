//! Isomorph-free enumeration: one canonical representative per class.
//!
//! Run with: cargo run --release --example enumerate

use teqset::{enumerate, enumerate_irreducible};

fn main() {
    println!("classes of tournaments by size (all / irreducible):");
    for n in 1..=8 {
        let all = enumerate(n).unwrap();
        let irr = enumerate_irreducible(n).unwrap();
        println!("  n={n}: {:>5} classes, {:>5} irreducible", all.len(), irr.len());
    }

    println!();
    println!("the 4 classes of size 4, as upper-triangle codes:");
    for t in enumerate(4).unwrap() {
        let kind = if t.is_transitive() {
            "transitive"
        } else if t.is_irreducible() {
            "irreducible"
        } else {
            "reducible"
        };
        println!("  {}  ({kind})", t.code());
    }
}
