//! From a partition to its weighted Dynkin diagram, the Z-grading it
//! defines, and the finite-order automorphism attached to the orbit.
//!
//!     cargo run --example gradings

use cyclotype::classical::{Flavor, Partition};
use cyclotype::gradecalc::{
    characteristic_from_partition, depth_from_characteristic, lemma51_check, sigma_data,
    z_grading,
};
use cyclotype::rootsys::build_root_system;

fn main() {
    let p = Partition::new(Flavor::So, vec![5, 3]).unwrap();
    let pc = characteristic_from_partition(&p).unwrap();
    let c = pc.characteristic;
    let rs = build_root_system(c.simple_type).unwrap();

    println!("{p} has characteristic {c}");
    println!("depth {}", depth_from_characteristic(&rs, &c).unwrap());

    let g = z_grading(&rs, &c).unwrap();
    print!("graded dimensions:");
    for (j, dim) in &g.dims {
        print!(" g_{j}={dim}");
    }
    println!();

    let s = sigma_data(&rs, &c).unwrap();
    println!(
        "sigma: m = {}, order {}, fixed subalgebra {} (dim {})",
        s.m,
        s.order,
        s.fixed_set,
        s.fixed_set.dim()
    );
    println!(
        "root-count identity |roots| = m dim g^sigma: {}",
        lemma51_check(&rs, &c).unwrap()
    );

    // a very even partition labels two orbits
    println!();
    let p = Partition::new(Flavor::So, vec![4, 4]).unwrap();
    let pc = characteristic_from_partition(&p).unwrap();
    println!(
        "{p} is very even: diagrams {} and {}",
        pc.characteristic,
        pc.very_even_alternate.unwrap()
    );
}
