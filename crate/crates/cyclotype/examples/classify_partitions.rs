//! Classify classical nilpotent orbits by the behaviour of their cyclic
//! elements, straight from the Jordan partition.
//!
//!     cargo run --example classify_partitions

use cyclotype::classical::{classify, Flavor, Partition};

fn show(flavor: Flavor, parts: &[usize]) {
    let p = Partition::new(flavor, parts.to_vec()).unwrap();
    let r = classify(&p).unwrap();
    print!(
        "{p}: depth {}, {}{}, rank {}",
        r.depth,
        r.cyclic_type,
        if r.even { ", even" } else { "" },
        r.rank
    );
    if !r.gs.is_empty() {
        let gs: Vec<String> = r.gs.iter().map(|s| s.to_string()).collect();
        print!(", g^s = {}", gs.join(" + "));
    }
    if let Some(jt) = &r.cyclic_jordan_type {
        print!(", generic cyclic element has Jordan type {jt:?}");
    }
    println!();
}

fn main() {
    // the four types, one example each
    show(Flavor::So, &[5, 4, 4, 1]); // nilpotent type (odd depth)
    show(Flavor::Sl, &[3, 3, 1]); // regular semisimple type
    show(Flavor::So, &[3, 1, 1, 1, 1]); // semisimple but not regular
    show(Flavor::Sp, &[4, 2]); // mixed

    println!();
    // the two so exceptions to depth = 2 n_1 - 2
    show(Flavor::So, &[5, 3]); // gap 2: depth 6
    show(Flavor::So, &[7, 1, 1, 1]); // gap > 2: depth 10

    println!();
    // every orbit of sp_6
    for p in cyclotype::classical::admissible_partitions(Flavor::Sp, 6) {
        show(Flavor::Sp, p.parts());
    }
}
