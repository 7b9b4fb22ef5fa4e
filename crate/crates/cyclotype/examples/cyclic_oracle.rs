//! The exact-matrix oracle: realize a nilpotent as rational matrices,
//! sample cyclic elements e + F from the lowest graded piece, and decide
//! nilpotent / semisimple / regular with no floating point.
//!
//!     cargo run --example cyclic_oracle

use cyclotype::classical::{classify, depth, Flavor, Partition};
use cyclotype::oracle::{
    cyclic_jordan_type, is_nilpotent_matrix, is_regular_element, is_semisimple_element,
    lowest_space, oracle_type, realize, sample_cyclic,
};

fn main() {
    let p = Partition::new(Flavor::So, vec![5, 3]).unwrap();
    let r = realize(&p).unwrap();
    println!(
        "{p} realized in so_{}: dim g = {}, sl2 relations hold: {}",
        p.n(),
        r.algebra_dim(),
        r.sl2_relations_hold()
    );

    let d = depth(&p).unwrap();
    let basis = lowest_space(&r, d).unwrap();
    println!("depth {d}, dim g_-d = {}", basis.len());

    for seed in 0..3 {
        let f = sample_cyclic(&basis, seed);
        let m = r.e.add(&f.f_matrix);
        println!(
            "seed {seed}: e+F nilpotent {}, semisimple {}, regular {}",
            is_nilpotent_matrix(&m),
            is_semisimple_element(&m),
            is_regular_element(&r, &m),
        );
    }

    // verdict against the partition rules, over a few orbits
    println!();
    for (fl, parts) in [
        (Flavor::Sl, vec![2, 1]),
        (Flavor::Sp, vec![4, 2]),
        (Flavor::So, vec![3, 2, 2]),
        (Flavor::So, vec![7, 3]),
    ] {
        let p = Partition::new(fl, parts).unwrap();
        let verdict = oracle_type(&p, 3, 0).unwrap();
        let rules = classify(&p).unwrap().cyclic_type;
        print!("{p}: oracle {verdict}, rules {rules}");
        if verdict == rules {
            print!("  [agree]");
        }
        if verdict.kind == cyclotype::classical::CyclicKind::Nilpotent {
            print!(
                ", cyclic Jordan type {:?}",
                cyclic_jordan_type(&p, 0).unwrap()
            );
        }
        println!();
    }
}
