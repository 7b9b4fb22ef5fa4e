//! Finite-order automorphisms from labeled affine diagrams: orders, fixed
//! subalgebras, and the fixed space of the induced Weyl element.
//!
//!     cargo run --example kac_diagrams

use cyclotype::kaccalc::{regular_numbers, KacLabeling};
use cyclotype::rootsys::{build_root_system, extended_diagram, twisted_diagram, SimpleType};

fn main() {
    // the Coxeter labeling: all ones
    let rs = build_root_system(SimpleType::E8).unwrap();
    let aff = extended_diagram(&rs);
    let coxeter = KacLabeling::new(aff.clone(), vec![1; 9]).unwrap();
    println!(
        "E8^(1) all ones: order {}, fixed {}, dim h^w = {}",
        coxeter.order(),
        coxeter.fixed_point_set().unwrap(),
        coxeter.dim_hw(&rs).unwrap()
    );

    // one zero label opens up a semisimple fixed subalgebra
    let lab = KacLabeling::new(aff, vec![0, 1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
    println!(
        "E8^(1) labels {:?}: order {}, fixed {}",
        lab.labels,
        lab.order(),
        lab.fixed_point_set().unwrap()
    );

    // twisted diagrams encode outer automorphisms
    let e6 = build_root_system(SimpleType::E6).unwrap();
    let tw = twisted_diagram(SimpleType::E6, 2).unwrap();
    for labels in [vec![0, 0, 0, 0, 1], vec![1, 0, 0, 1, 1], vec![1, 1, 1, 1, 1]] {
        let lab = KacLabeling::new(tw.clone(), labels).unwrap();
        println!(
            "E6^(2) labels {:?}: order {}, fixed {}, dim h^w = {}",
            lab.labels,
            lab.order(),
            lab.fixed_point_set().unwrap(),
            lab.dim_hw(&e6).unwrap()
        );
    }

    println!();
    for t in [SimpleType::E6, SimpleType::E7, SimpleType::E8, SimpleType::F4, SimpleType::G2] {
        println!("regular numbers of {t}: {:?}", regular_numbers(t).unwrap());
    }
}
