//! The classifier-versus-oracle sweeps and table reproductions that gate a
//! release. Each criterion reports one pass/fail line; `run_all` is what
//! both the acceptance suite and `cyclotype verify-all` execute.

use crate::catalog::{self, Catalog};
use crate::classical::{
    admissible_partitions, bush, classify, depth, nilpotent_cyclic_jordan_type, CyclicKind,
    Flavor, Partition,
};
use crate::gradecalc::{characteristic_from_partition, depth_from_characteristic, z_grading};
use crate::oracle::{cyclic_jordan_type, lowest_space, oracle_type, realize};
use crate::rootsys::{build_root_system, SimpleType};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(name: &str, failures: Vec<String>, context: String) -> Self {
        CriterionResult {
            passed: failures.is_empty(),
            detail: if failures.is_empty() {
                context
            } else {
                failures.join("; ")
            },
            name: name.to_string(),
        }
    }
}

/// The classical sweep of the acceptance gate: sl and sp up to n = 8,
/// so from 7 to 10.
pub fn sweep_partitions() -> Vec<Partition> {
    let mut out = Vec::new();
    for flavor in [Flavor::Sl, Flavor::Sp] {
        for n in 2..=8 {
            out.extend(admissible_partitions(flavor, n));
        }
    }
    for n in 7..=10 {
        out.extend(admissible_partitions(Flavor::So, n));
    }
    out
}

/// Criteria 1 and 2: the matrix oracle agrees with the partition
/// classification on every sweep orbit, and nilpotent type occurs exactly
/// at odd depth.
pub fn oracle_classifier_equivalence(trials: u64, seed: u64) -> Vec<CriterionResult> {
    let mut type_fails = Vec::new();
    let mut parity_fails = Vec::new();
    let sweep = sweep_partitions();
    for p in &sweep {
        let rec = match classify(p) {
            Ok(r) => r,
            Err(e) => {
                type_fails.push(format!("{p}: {e}"));
                continue;
            }
        };
        match oracle_type(p, trials, seed) {
            Ok(t) => {
                if t != rec.cyclic_type {
                    type_fails.push(format!(
                        "{p}: oracle says {t}, classification says {}",
                        rec.cyclic_type
                    ));
                }
            }
            Err(e) => type_fails.push(format!("{p}: {e}")),
        }
        if (rec.cyclic_type.kind == CyclicKind::Nilpotent) != (rec.depth % 2 == 1) {
            parity_fails.push(format!("{p}: {} at depth {}", rec.cyclic_type, rec.depth));
        }
    }
    vec![
        CriterionResult::new(
            "1 oracle-classifier equivalence",
            type_fails,
            format!("{} partitions, {trials} trials each", sweep.len()),
        ),
        CriterionResult::new(
            "2 parity law (nilpotent type <=> odd depth)",
            parity_fails,
            format!("{} partitions", sweep.len()),
        ),
    ]
}

/// Criterion 3: the Jordan type of generic nilpotent cyclic elements
/// matches the closed-form image for every so partition with n <= 12,
/// n_1 odd, n_1 - n_2 = 1.
pub fn nilpotent_jordan_images(seeds: &[u64]) -> CriterionResult {
    let mut fails = Vec::new();
    let mut count = 0;
    for n in 7..=12 {
        for p in admissible_partitions(Flavor::So, n) {
            let Some(n2) = p.n2() else { continue };
            if p.n1() % 2 == 0 || p.n1() - n2 != 1 {
                continue;
            }
            count += 1;
            let expected = match nilpotent_cyclic_jordan_type(&p) {
                Ok(e) => e,
                Err(e) => {
                    fails.push(format!("{p}: {e}"));
                    continue;
                }
            };
            for &seed in seeds {
                match cyclic_jordan_type(&p, seed) {
                    Ok(jt) => {
                        if jt != expected {
                            fails.push(format!(
                                "{p} seed {seed}: sampled {jt:?}, rule gives {expected:?}"
                            ));
                        }
                    }
                    Err(e) => fails.push(format!("{p} seed {seed}: {e}")),
                }
            }
        }
    }
    CriterionResult::new(
        "3 nilpotent-type cyclic Jordan images",
        fails,
        format!("{count} partitions, {} seeds each", seeds.len()),
    )
}

/// Criterion 4: dim g_{-d} computed from matrices equals the root count
/// from the characteristic, and both depth routes agree, across the sweep.
pub fn grading_consistency() -> CriterionResult {
    let mut fails = Vec::new();
    let sweep = sweep_partitions();
    for p in &sweep {
        let d = match depth(p) {
            Ok(d) => d,
            Err(e) => {
                fails.push(format!("{p}: {e}"));
                continue;
            }
        };
        let pc = match characteristic_from_partition(p) {
            Ok(c) => c,
            Err(e) => {
                fails.push(format!("{p}: {e}"));
                continue;
            }
        };
        let rs = match build_root_system(pc.characteristic.simple_type) {
            Ok(rs) => rs,
            Err(e) => {
                fails.push(format!("{p}: {e}"));
                continue;
            }
        };
        match depth_from_characteristic(&rs, &pc.characteristic) {
            Ok(dc) if dc == d => {}
            Ok(dc) => fails.push(format!("{p}: characteristic depth {dc}, partition depth {d}")),
            Err(e) => fails.push(format!("{p}: {e}")),
        }
        let dims = match z_grading(&rs, &pc.characteristic) {
            Ok(g) => g.dim(-d),
            Err(e) => {
                fails.push(format!("{p}: {e}"));
                continue;
            }
        };
        let matrix_dim = realize(p)
            .and_then(|r| lowest_space(&r, d).map(|b| b.len()))
            .unwrap_or(usize::MAX);
        if dims != matrix_dim {
            fails.push(format!(
                "{p}: dim g_-d is {matrix_dim} from matrices, {dims} from roots"
            ));
        }
    }
    CriterionResult::new(
        "4 grading consistency (matrices vs roots)",
        fails,
        format!("{} partitions", sweep.len()),
    )
}

/// Criterion 5: class counts of the five exceptional algebras.
pub fn table01_counts(cat: &Catalog) -> CriterionResult {
    let expected = [
        (SimpleType::E6, (20, 2, 13, 5)),
        (SimpleType::E7, (44, 3, 21, 5)),
        (SimpleType::E8, (69, 7, 27, 7)),
        (SimpleType::F4, (15, 2, 11, 4)),
        (SimpleType::G2, (4, 1, 3, 2)),
    ];
    let mut fails = Vec::new();
    for (t, want) in expected {
        match cat.counts(t) {
            Some(got) if got == want => {}
            Some(got) => fails.push(format!("{t}: counts {got:?}, expected {want:?}")),
            None => fails.push(format!("{t}: missing from catalog")),
        }
    }
    CriterionResult::new("5 class-count table", fails, "5 algebras".to_string())
}

/// Criteria 6 and 7: the catalog verification suite (orbit tables) and the
/// diagram tables.
pub fn catalog_checks(cat: &Catalog) -> Vec<CriterionResult> {
    match catalog::verify(cat) {
        Ok(report) => {
            let mut table_fails = Vec::new();
            let mut orbit_fails = Vec::new();
            for c in &report.checks {
                let target = if c.id.starts_with('9') {
                    &mut table_fails
                } else {
                    &mut orbit_fails
                };
                if !c.passed {
                    target.push(format!("check {}: {}", c.id, c.failures.join("; ")));
                }
            }
            vec![
                CriterionResult::new(
                    "6 orbit-table verification",
                    orbit_fails,
                    format!("{} checks", report.checks.len() - 1),
                ),
                CriterionResult::new(
                    "7 regular-element diagram tables",
                    table_fails,
                    "7 diagrams".to_string(),
                ),
            ]
        }
        Err(e) => vec![CriterionResult::new(
            "6 orbit-table verification",
            vec![format!("{e}")],
            String::new(),
        )],
    }
}

/// Criterion 8: bush coherence over the classical sweep. Every
/// semisimple-type head generates a bush whose members share depth and
/// rank with exactly one semisimple member; every mixed partition in range
/// lies in exactly one bush.
pub fn bush_coherence() -> CriterionResult {
    let mut fails = Vec::new();
    let mut bushes_checked = 0;
    for flavor in [Flavor::Sl, Flavor::So, Flavor::Sp] {
        let range = if flavor == Flavor::So { 7..=10usize } else { 2..=10usize };
        for n in range {
            let all = admissible_partitions(flavor, n);
            let mut bushes = Vec::new();
            for p in &all {
                let Ok(rec) = classify(p) else { continue };
                if rec.cyclic_type.kind != CyclicKind::Semisimple || rec.small_rank {
                    continue;
                }
                match bush(p) {
                    Ok(members) => {
                        bushes_checked += 1;
                        let mut heads = 0;
                        for m in &members {
                            let mr = classify(m).unwrap();
                            if (mr.depth, mr.rank) != (rec.depth, rec.rank) {
                                fails.push(format!("{m}: depth/rank differ within bush of {p}"));
                            }
                            if mr.cyclic_type.kind == CyclicKind::Semisimple {
                                heads += 1;
                            }
                        }
                        if heads != 1 {
                            fails.push(format!("bush of {p} has {heads} semisimple members"));
                        }
                        bushes.push(members);
                    }
                    Err(e) => fails.push(format!("{p}: {e}")),
                }
            }
            for p in &all {
                let Ok(rec) = classify(p) else { continue };
                if rec.cyclic_type.kind != CyclicKind::Mixed || rec.small_rank {
                    continue;
                }
                let containing = bushes.iter().filter(|b| b.contains(p)).count();
                if containing != 1 {
                    fails.push(format!("{p}: lies in {containing} bushes"));
                }
            }
        }
    }
    CriterionResult::new(
        "8 bush coherence",
        fails,
        format!("{bushes_checked} bushes"),
    )
}

/// Every acceptance criterion, in order.
pub fn run_all(cat: &Catalog, trials: u64, seed: u64) -> Vec<CriterionResult> {
    let mut out = oracle_classifier_equivalence(trials, seed);
    out.push(nilpotent_jordan_images(&[seed, seed + 1, seed + 2]));
    out.push(grading_consistency());
    out.push(table01_counts(cat));
    out.extend(catalog_checks(cat));
    out.push(bush_coherence());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_is_the_documented_size() {
        // ~100 partitions: small enough for exact arithmetic in minutes
        let sweep = sweep_partitions();
        assert!(sweep.len() > 80 && sweep.len() < 300, "sweep size {}", sweep.len());
    }
}
