//! Enumerate every nilpotent orbit of an exceptional algebra with its
//! weighted Dynkin diagram, derived from Levi subalgebras and
//! distinguished parabolic gradings; no lookup tables involved.
//!
//!     cargo run --example exceptional_orbits [TYPE]

use cyclotype::catalog::exceptional_orbits;
use cyclotype::rootsys::{build_root_system, SimpleType};

fn main() {
    let t = std::env::args()
        .nth(1)
        .and_then(|s| SimpleType::parse(&s))
        .unwrap_or(SimpleType::F4);
    let rs = build_root_system(t).unwrap();
    let orbits = exceptional_orbits(&rs);
    println!("{} non-zero nilpotent orbits of {t}:\n", orbits.len());
    println!("{:>16}  {:>3} {:>5}  diagram", "label", "d", "dim");
    for o in &orbits {
        println!(
            "{:>16}  {:>3} {:>5}  {:?}{}",
            o.label,
            o.depth,
            o.orbit_dim(&rs),
            o.characteristic,
            if o.distinguished { "  (distinguished)" } else { "" }
        );
    }
}
