//! Bushes: the partition of nilpotent orbits into families sharing a
//! reducing subalgebra, projection, depth and rank. Each bush holds one
//! semisimple-type head; everything else in it is mixed.
//!
//!     cargo run --example bushes

use cyclotype::classical::{admissible_partitions, bush, classify, CyclicKind, Flavor};

fn main() {
    let flavor = Flavor::So;
    let n = 10;
    println!("bushes of so_{n}:\n");
    for head in admissible_partitions(flavor, n) {
        let rec = classify(&head).unwrap();
        if rec.cyclic_type.kind != CyclicKind::Semisimple {
            continue;
        }
        let members = bush(&head).unwrap();
        let names: Vec<String> = members
            .iter()
            .map(|m| format!("{:?}", m.parts()))
            .collect();
        println!(
            "d = {:>2}, r = {}: head {:?} -> {}",
            rec.depth,
            rec.rank,
            head.parts(),
            names.join(", ")
        );
    }

    // nilpotent-type orbits live outside every bush
    println!("\nnilpotent-type orbits of so_{n}:");
    for p in admissible_partitions(flavor, n) {
        let rec = classify(&p).unwrap();
        if rec.cyclic_type.kind == CyclicKind::Nilpotent {
            println!(
                "  {:?} (depth {}, cyclic image {:?})",
                p.parts(),
                rec.depth,
                rec.cyclic_jordan_type.unwrap()
            );
        }
    }
}
