//! Build root systems from Cartan matrices and inspect their affine
//! extensions.
//!
//!     cargo run --example root_systems

use cyclotype::rootsys::{build_root_system, extended_diagram, SimpleType};

fn main() {
    for t in [
        SimpleType::A(2),
        SimpleType::D(4),
        SimpleType::F4,
        SimpleType::G2,
        SimpleType::E8,
    ] {
        let rs = build_root_system(t).unwrap();
        let aff = extended_diagram(&rs);
        let coxeter: i64 = aff.marks.iter().sum();
        println!(
            "{t}: {} roots, dim {}, highest root {:?}, Coxeter number {}",
            rs.root_count(),
            rs.dim(),
            rs.highest_root_coeffs,
            coxeter,
        );
    }

    // every root pairs integrally with every coroot
    let rs = build_root_system(SimpleType::G2).unwrap();
    println!("\nG_2 root poset by height:");
    let mut roots = rs.roots.clone();
    roots.sort_by_key(|r| r.iter().sum::<i64>());
    for r in roots {
        let h: i64 = r.iter().sum();
        if h > 0 {
            println!("  height {h}: {r:?}  (len^2 {})", rs.root_len2(&r));
        }
    }
}
