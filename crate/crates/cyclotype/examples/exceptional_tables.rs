//! Query the bundled exceptional-algebra tables and run the verification
//! suite over them.
//!
//!     cargo run --example exceptional_tables

use cyclotype::catalog::{verify, Catalog};
use cyclotype::rootsys::SimpleType;

fn main() {
    let cat = Catalog::load().unwrap();

    println!("class counts (non-zero / nilpotent / semisimple / regular-ss):");
    for t in cyclotype::catalog::EXCEPTIONAL {
        let (total, nilp, ss, reg) = cat.counts(t).unwrap();
        println!("  {t}: {total} / {nilp} / {ss} / {reg}");
    }

    println!("\nthe bush of A_2 in E_6:");
    for o in &cat.algebra(SimpleType::E6).unwrap().orbits {
        if o.bush.as_deref() == Some("A_2") {
            println!(
                "  {:<10} kind {:<10} e^n = {:<10} Z(s)|g_-d = {}",
                o.label,
                o.kind,
                o.en.as_deref().unwrap_or("-"),
                o.zrep.as_deref().unwrap_or("-")
            );
        }
    }

    let rec = cat.query(SimpleType::E8, "E_8(b_6)").unwrap();
    println!(
        "\nE_8(b_6): d = {}, kind {}, characteristic {:?}",
        rec.d, rec.kind, rec.characteristic
    );

    println!("\nverification suite:");
    let report = verify(&cat).unwrap();
    print!("{report}");
    std::process::exit(if report.all_passed() { 0 } else { 2 });
}
