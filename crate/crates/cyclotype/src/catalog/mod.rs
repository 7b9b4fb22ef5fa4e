//! Bundled machine-readable data for the exceptional-algebra orbit tables
//! and the regular-Weyl-element diagram tables, plus the verification suite
//! that recomputes every entry that can be recomputed.
//!
//! The data ships as four JSON documents under `data/` (see
//! `docs/data-schema.md`). Depths, ranks, reducing subalgebras and the bush
//! layout are transcription; the weighted Dynkin diagrams are pinned to the
//! Levi enumeration of [`balacarter`], and `verify` cross-checks depth,
//! parity, lowest-space dimensions, bush coherence, the root-count identity
//! for distinguished orbits, the diagram tables and the mixed-orbit
//! centralizer dimensions.

pub mod balacarter;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classical::{CyclicKind, Flavor};
use crate::gradecalc::{
    depth_from_characteristic, lemma51_check, z_grading, Characteristic, GradeError,
};
use crate::kaccalc::{regular_numbers, FixedPointSet, KacError, KacLabeling};
use crate::rootsys::{
    build_root_system, extended_diagram, twisted_diagram, RootSysError, RootSystem, SimpleType,
};

pub use balacarter::{exceptional_orbits, ExceptionalOrbit};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum CatalogError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Schema(String),
    RootSys(RootSysError),
    Grade(GradeError),
    Kac(KacError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::Io(e) => write!(f, "io: {e}"),
            CatalogError::Json(e) => write!(f, "json: {e}"),
            CatalogError::Schema(msg) => write!(f, "schema: {msg}"),
            CatalogError::RootSys(e) => write!(f, "{e}"),
            CatalogError::Grade(e) => write!(f, "{e}"),
            CatalogError::Kac(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<std::io::Error> for CatalogError {
    fn from(e: std::io::Error) -> Self {
        CatalogError::Io(e)
    }
}
impl From<serde_json::Error> for CatalogError {
    fn from(e: serde_json::Error) -> Self {
        CatalogError::Json(e)
    }
}
impl From<RootSysError> for CatalogError {
    fn from(e: RootSysError) -> Self {
        CatalogError::RootSys(e)
    }
}
impl From<GradeError> for CatalogError {
    fn from(e: GradeError) -> Self {
        CatalogError::Grade(e)
    }
}
impl From<KacError> for CatalogError {
    fn from(e: KacError) -> Self {
        CatalogError::Kac(e)
    }
}

/// One row of the orbit tables: a nilpotent conjugacy class of an
/// exceptional algebra with its cyclic-element data.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OrbitRecord {
    pub label: String,
    /// weighted Dynkin diagram, Bourbaki node order
    pub characteristic: Vec<i64>,
    pub d: i64,
    pub r: usize,
    /// "nilpotent" | "semisimple" | "mixed"
    pub kind: String,
    pub regular: bool,
    pub distinguished: bool,
    /// derived subalgebra of the centralizer of the semisimple part of a
    /// generic cyclic element; "0" when trivial
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub es: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gn: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub en: Option<String>,
    /// unity component of the image of Z(s) acting on the lowest graded
    /// piece, verbatim; a bare number denotes the trivial group on a space
    /// of that dimension
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zrep: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zrep_dim: Option<usize>,
    /// label of the bush head (the unique semisimple-type member)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bush: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl OrbitRecord {
    pub fn cyclic_kind(&self) -> CyclicKind {
        match self.kind.as_str() {
            "nilpotent" => CyclicKind::Nilpotent,
            "semisimple" => CyclicKind::Semisimple,
            _ => CyclicKind::Mixed,
        }
    }

    /// For a semisimple-type record, the centralizer dimension of a generic
    /// cyclic element: dim a + rank g - rank a. A Cartan subalgebra (rank g)
    /// exactly when the record is of regular type.
    pub fn derived_cyclic_centralizer_dim(&self, ambient: SimpleType) -> Option<usize> {
        if self.cyclic_kind() != CyclicKind::Semisimple {
            return None;
        }
        let factors = parse_factors(self.a.as_deref()?)?;
        Some(factors_dim(&factors) + ambient.rank() - factors_rank(&factors))
    }
}

/// One mixed-type row: centralizer dimension of a generic cyclic element
/// and its nilpotent part inside a. Echo data; the dimension is verified
/// against the Levi formula.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MixedRecord {
    pub algebra: String,
    pub label: String,
    pub dim_z: usize,
    pub a: String,
    pub nilpart: String,
}

/// One nilpotent-type row: the Jordan class of the generic (nilpotent)
/// cyclic element, named by the minimal subalgebra carrying it.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NilpotentTypeRow {
    pub algebra: String,
    pub label: String,
    pub d: i64,
    pub image: String,
}

/// One row of a regular-element diagram table.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DiagramRow {
    pub m: i64,
    /// labels in the canonical node order of `docs/numbering.md`
    pub labels: Vec<i64>,
    pub fixed: Vec<String>,
    pub torus: usize,
    pub dim_hw: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DiagramTable {
    /// "E6^(1)", ..., "E6^(2)", "D4^(3)"
    pub id: String,
    pub base: String,
    pub twist: usize,
    pub rows: Vec<DiagramRow>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraOrbits {
    pub algebra: String,
    pub orbits: Vec<OrbitRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OrbitsFile {
    pub schema_version: u32,
    pub algebras: Vec<AlgebraOrbits>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Tables6File {
    pub schema_version: u32,
    pub diagrams: Vec<DiagramTable>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Table11File {
    pub schema_version: u32,
    pub rows: Vec<NilpotentTypeRow>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MixedFile {
    pub schema_version: u32,
    pub rows: Vec<MixedRecord>,
}

/// The loaded, cross-linked catalog.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub orbits: OrbitsFile,
    pub tables6: Tables6File,
    pub table11: Table11File,
    pub mixed: MixedFile,
}

pub const EXCEPTIONAL: [SimpleType; 5] = [
    SimpleType::E6,
    SimpleType::E7,
    SimpleType::E8,
    SimpleType::F4,
    SimpleType::G2,
];

const ORBITS_JSON: &str = include_str!("../../data/orbits_exceptional.json");
const TABLES6_JSON: &str = include_str!("../../data/tables6.json");
const TABLE11_JSON: &str = include_str!("../../data/table11.json");
const TABLES5556_JSON: &str = include_str!("../../data/tables55_56.json");

impl Catalog {
    /// Parse and validate the bundled data, honouring CYCLOTYPE_DATA_DIR.
    pub fn load() -> Result<Catalog, CatalogError> {
        match std::env::var_os("CYCLOTYPE_DATA_DIR") {
            Some(dir) => {
                let dir = std::path::PathBuf::from(dir);
                let read = |name: &str| std::fs::read_to_string(dir.join(name));
                Catalog::from_json(
                    &read("orbits_exceptional.json")?,
                    &read("tables6.json")?,
                    &read("table11.json")?,
                    &read("tables55_56.json")?,
                )
            }
            None => Catalog::from_json(ORBITS_JSON, TABLES6_JSON, TABLE11_JSON, TABLES5556_JSON),
        }
    }

    pub fn from_json(
        orbits: &str,
        tables6: &str,
        table11: &str,
        mixed: &str,
    ) -> Result<Catalog, CatalogError> {
        let cat = Catalog {
            orbits: serde_json::from_str(orbits)?,
            tables6: serde_json::from_str(tables6)?,
            table11: serde_json::from_str(table11)?,
            mixed: serde_json::from_str(mixed)?,
        };
        cat.validate()?;
        Ok(cat)
    }

    fn validate(&self) -> Result<(), CatalogError> {
        for v in [
            self.orbits.schema_version,
            self.tables6.schema_version,
            self.table11.schema_version,
            self.mixed.schema_version,
        ] {
            if v != SCHEMA_VERSION {
                return Err(CatalogError::Schema(format!(
                    "schema version {v}, expected {SCHEMA_VERSION}"
                )));
            }
        }
        for alg in &self.orbits.algebras {
            let t = SimpleType::parse(&alg.algebra)
                .ok_or_else(|| CatalogError::Schema(format!("bad algebra {}", alg.algebra)))?;
            let mut seen = BTreeSet::new();
            let labels: BTreeSet<&str> = alg.orbits.iter().map(|o| o.label.as_str()).collect();
            for o in &alg.orbits {
                if !seen.insert(&o.label) {
                    return Err(CatalogError::Schema(format!(
                        "duplicate label {} in {}",
                        o.label, alg.algebra
                    )));
                }
                if o.characteristic.len() != t.rank() {
                    return Err(CatalogError::Schema(format!(
                        "characteristic length for {}/{}",
                        alg.algebra, o.label
                    )));
                }
                if let Some(bush) = &o.bush {
                    if !labels.contains(bush.as_str()) {
                        return Err(CatalogError::Schema(format!(
                            "dangling bush reference {} -> {bush}",
                            o.label
                        )));
                    }
                }
                if let (Some(zrep), Some(dim)) = (&o.zrep, o.zrep_dim) {
                    if let Some(parsed) = zrep_dimension(zrep) {
                        if parsed != dim {
                            return Err(CatalogError::Schema(format!(
                                "zrep {zrep} parses to dimension {parsed}, record says {dim}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self, t: SimpleType) -> Option<&AlgebraOrbits> {
        self.orbits
            .algebras
            .iter()
            .find(|a| SimpleType::parse(&a.algebra) == Some(t))
    }

    pub fn query(&self, t: SimpleType, label: &str) -> Option<&OrbitRecord> {
        self.algebra(t)?.orbits.iter().find(|o| o.label == label)
    }

    /// (non-zero, nilpotent type, semisimple type, regular semisimple type)
    /// class counts; the semisimple count includes the regular ones.
    pub fn counts(&self, t: SimpleType) -> Option<(usize, usize, usize, usize)> {
        let alg = self.algebra(t)?;
        let mut nilp = 0;
        let mut ss = 0;
        let mut reg = 0;
        for o in &alg.orbits {
            match o.cyclic_kind() {
                CyclicKind::Nilpotent => nilp += 1,
                CyclicKind::Semisimple => {
                    ss += 1;
                    if o.regular {
                        reg += 1;
                    }
                }
                CyclicKind::Mixed => {}
            }
        }
        Some((alg.orbits.len(), nilp, ss, reg))
    }
}

/// Dimension of the representation space named by a zrep descriptor.
/// Bare numbers denote trivial groups on spaces of that dimension.
pub fn zrep_dimension(zrep: &str) -> Option<usize> {
    match zrep {
        "T_1⊂SO_3" => return Some(3),
        "S^2SO_3/1" => return Some(5),
        "Ad(SL_3)" => return Some(8),
        _ => {}
    }
    let mut total = 0usize;
    for piece in zrep.split('⊕') {
        if let Ok(n) = piece.parse::<usize>() {
            total += n;
        } else if let Some(k) = piece.strip_prefix("SO_") {
            total += k.parse::<usize>().ok()?;
        } else if piece == "G_2" {
            total += 7;
        } else if piece == "F_4" {
            total += 26;
        } else {
            return None;
        }
    }
    Some(total)
}

/// A parsed simple factor list of an a/gs/gn descriptor: primes and tildes
/// do not change dimensions or ranks.
pub fn parse_factors(desc: &str) -> Option<Vec<SimpleType>> {
    if desc == "0" {
        return Some(vec![]);
    }
    let mut out = Vec::new();
    for tok in desc.split('+') {
        let tok = tok.trim_matches(|c| c == '[' || c == ']' || c == '\'');
        let (mult, rest) = match tok.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            Some((0, _)) => (1usize, tok),
            Some((i, _)) => (tok[..i].parse().ok()?, &tok[i..]),
            None => return None,
        };
        let rest = rest.trim_matches(|c| c == '[' || c == ']' || c == '\'');
        let name = rest
            .strip_prefix('Ã')
            .map(|r| format!("A{r}"))
            .unwrap_or_else(|| rest.to_string());
        let t = SimpleType::parse(&name)?;
        for _ in 0..mult {
            out.push(t);
        }
    }
    Some(out)
}

pub fn factors_dim(factors: &[SimpleType]) -> usize {
    factors.iter().map(|t| t.dim()).sum()
}

pub fn factors_rank(factors: &[SimpleType]) -> usize {
    factors.iter().map(|t| t.rank()).sum()
}

/// dim z_g(e) for a nilpotent of a classical simple algebra given by a
/// partition: sum of squares of the dual partition, adjusted per flavor.
pub fn classical_centralizer_dim(flavor: Flavor, parts: &[usize]) -> usize {
    let n1 = parts.first().copied().unwrap_or(0);
    let mut dual_sq = 0usize;
    for j in 1..=n1 {
        let col = parts.iter().filter(|&&p| p >= j).count();
        dual_sq += col * col;
    }
    let odd = parts.iter().filter(|&&p| p % 2 == 1).count();
    match flavor {
        Flavor::Sl => dual_sq - 1,
        Flavor::So => (dual_sq - odd) / 2,
        Flavor::Sp => (dual_sq + odd) / 2,
    }
}

/// Expand `"(3,2^2,1)"` to `[3,2,2,1]`; one segment per factor, `;`-separated.
pub fn parse_nilpart_partitions(s: &str) -> Option<Vec<Vec<usize>>> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let mut out = Vec::new();
    for seg in inner.split(';') {
        let mut parts = Vec::new();
        for piece in seg.split(',') {
            let piece = piece.trim();
            if let Some((base, exp)) = piece.split_once('^') {
                let b: usize = base.parse().ok()?;
                let e: usize = exp.parse().ok()?;
                parts.extend(std::iter::repeat_n(b, e));
            } else {
                parts.push(piece.parse().ok()?);
            }
        }
        out.push(parts);
    }
    Some(out)
}

/// Normalize an orbit-label string to the catalog convention: factors
/// sorted by descending rank (e.g. "2A_1+A_2" becomes "A_2+2A_1").
pub fn normalize_orbit_label(label: &str) -> String {
    let mut toks: Vec<&str> = label.split('+').collect();
    // rank of the underlying simple factor, ignoring a multiplicity prefix
    let rank_of = |tok: &str| -> usize {
        let bare = tok.trim_start_matches(|c: char| c.is_ascii_digit());
        parse_factors(bare)
            .and_then(|f| f.first().map(|t| t.rank()))
            .unwrap_or(0)
    };
    toks.sort_by(|a, b| rank_of(b).cmp(&rank_of(a)).then(a.cmp(b)));
    toks.join("+")
}

/// Result of one verification check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}", if c.passed { "pass" } else { "FAIL" }, c.id)?;
            for msg in &c.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        Ok(())
    }
}

struct Checker {
    checks: Vec<CheckResult>,
}

impl Checker {
    fn new() -> Self {
        Checker { checks: Vec::new() }
    }

    fn run(&mut self, id: &str, failures: Vec<String>) {
        self.checks.push(CheckResult {
            id: id.to_string(),
            passed: failures.is_empty(),
            failures,
        });
    }
}

/// Run every cross-check against the bundled data.
pub fn verify(cat: &Catalog) -> Result<VerifyReport, CatalogError> {
    let mut systems: BTreeMap<SimpleType, RootSystem> = BTreeMap::new();
    for t in EXCEPTIONAL {
        systems.insert(t, build_root_system(t)?);
    }
    let mut ck = Checker::new();

    // (0) characteristics match the Levi enumeration, label by label
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        let rs = &systems[&t];
        let derived: BTreeMap<String, Vec<i64>> = exceptional_orbits(rs)
            .into_iter()
            .map(|o| (o.label, o.characteristic))
            .collect();
        let Some(alg) = cat.algebra(t) else {
            fails.push(format!("{t}: missing algebra"));
            continue;
        };
        if alg.orbits.len() != derived.len() {
            fails.push(format!(
                "{t}: {} records vs {} derived orbits",
                alg.orbits.len(),
                derived.len()
            ));
        }
        for o in &alg.orbits {
            match derived.get(&o.label) {
                None => fails.push(format!("{t}/{}: no derived orbit with this label", o.label)),
                Some(w) if *w != o.characteristic => fails.push(format!(
                    "{t}/{}: characteristic {:?} differs from derived {:?}",
                    o.label, o.characteristic, w
                )),
                _ => {}
            }
        }
    }
    ck.run("0 characteristics vs Levi enumeration", fails);

    // (1) depth of every characteristic equals the tabulated d
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        let rs = &systems[&t];
        for o in cat.algebra(t).into_iter().flat_map(|a| &a.orbits) {
            let c = Characteristic::new(t, o.characteristic.clone())?;
            let d = depth_from_characteristic(rs, &c)?;
            if d != o.d {
                fails.push(format!("{t}/{}: depth {d} != tabulated {}", o.label, o.d));
            }
        }
    }
    ck.run("1 depth", fails);

    // (2) nilpotent type <=> odd depth
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        for o in cat.algebra(t).into_iter().flat_map(|a| &a.orbits) {
            let is_nilp = o.cyclic_kind() == CyclicKind::Nilpotent;
            if is_nilp != (o.d % 2 == 1) {
                fails.push(format!("{t}/{}: kind {} with d = {}", o.label, o.kind, o.d));
            }
        }
    }
    ck.run("2 parity law", fails);

    // per-record lowest-space dimensions, used by (3) and (4)
    let mut lowdim: BTreeMap<(SimpleType, String), usize> = BTreeMap::new();
    for t in EXCEPTIONAL {
        let rs = &systems[&t];
        for o in cat.algebra(t).into_iter().flat_map(|a| &a.orbits) {
            let c = Characteristic::new(t, o.characteristic.clone())?;
            let g = z_grading(rs, &c)?;
            lowdim.insert((t, o.label.clone()), g.dim(-g.depth));
        }
    }

    // (3) r = dim g_{-d} for trivial zrep or distinguished orbits
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        for o in cat.algebra(t).into_iter().flat_map(|a| &a.orbits) {
            if o.cyclic_kind() == CyclicKind::Nilpotent {
                continue;
            }
            let trivial = o
                .zrep
                .as_deref()
                .map(|z| z.parse::<usize>().is_ok())
                .unwrap_or(false);
            if trivial || o.distinguished {
                let dim = lowdim[&(t, o.label.clone())];
                if o.r != dim {
                    fails.push(format!("{t}/{}: r = {} but dim g_-d = {dim}", o.label, o.r));
                }
            }
        }
    }
    ck.run("3 rank vs lowest space", fails);

    // (4) the space zrep acts on has dimension dim g_{-d}
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        for o in cat.algebra(t).into_iter().flat_map(|a| &a.orbits) {
            let Some(dim) = o.zrep_dim else { continue };
            let low = lowdim[&(t, o.label.clone())];
            if dim != low {
                fails.push(format!("{t}/{}: zrep dim {dim} but dim g_-d = {low}", o.label));
            }
        }
    }
    ck.run("4 zrep dimension", fails);

    // (5) bush coherence
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        let Some(alg) = cat.algebra(t) else { continue };
        let mut bush_first: BTreeMap<&String, &OrbitRecord> = BTreeMap::new();
        let mut heads: BTreeMap<&String, usize> = BTreeMap::new();
        for o in &alg.orbits {
            match (&o.bush, o.cyclic_kind()) {
                (None, CyclicKind::Nilpotent) => {}
                (None, _) => {
                    fails.push(format!("{t}/{}: even-depth record without a bush", o.label))
                }
                (Some(_), CyclicKind::Nilpotent) => {
                    fails.push(format!("{t}/{}: nilpotent-type record inside a bush", o.label))
                }
                (Some(b), kind) => {
                    let first = *bush_first.entry(b).or_insert(o);
                    if kind == CyclicKind::Semisimple {
                        *heads.entry(b).or_insert(0) += 1;
                        if o.label != **b {
                            fails.push(format!("{t}/{}: head label != bush id {b}", o.label));
                        }
                    }
                    if (first.d, first.r, &first.a, &first.gs, &first.es)
                        != (o.d, o.r, &o.a, &o.gs, &o.es)
                    {
                        fails.push(format!(
                            "{t}/{}: d/r/a/gs/es differ from the bush head {b}",
                            o.label
                        ));
                    }
                }
            }
        }
        for (b, first) in &bush_first {
            if first.cyclic_kind() != CyclicKind::Semisimple {
                fails.push(format!("{t}: bush {b} does not open with its semisimple head"));
            }
            if heads.get(b) != Some(&1) {
                fails.push(format!("{t}: bush {b} has {:?} semisimple members", heads.get(b)));
            }
        }
        // the e^n column must conform to g^n: partition segments fill the
        // factors, label entries name orbits of the factor algebra
        for o in &alg.orbits {
            let (Some(gn), Some(en)) = (&o.gn, &o.en) else { continue };
            if let Err(msg) = check_projection_string(cat, gn, en) {
                fails.push(format!("{t}/{}: e^n {en} against g^n {gn}: {msg}", o.label));
            }
        }
    }
    ck.run("5 bush coherence", fails);

    // (6) root-count identity for distinguished semisimple records
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        let rs = &systems[&t];
        for o in cat.algebra(t).into_iter().flat_map(|a| &a.orbits) {
            if !(o.distinguished && o.cyclic_kind() == CyclicKind::Semisimple) {
                continue;
            }
            let c = Characteristic::new(t, o.characteristic.clone())?;
            let m = o.d / 2 + 1;
            match lemma51_check(rs, &c) {
                Ok(true) => {}
                Ok(false) => fails.push(format!("{t}/{}: |roots| != m dim g^sigma", o.label)),
                Err(e) => fails.push(format!("{t}/{}: {e}", o.label)),
            }
            if !regular_numbers(t)?.contains(&m) {
                fails.push(format!("{t}/{}: m = {m} is not a regular number", o.label));
            }
        }
    }
    ck.run("6 root-count identity (distinguished semisimple)", fails);

    // (7) regular flag iff a = 0
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        for o in cat.algebra(t).into_iter().flat_map(|a| &a.orbits) {
            if o.cyclic_kind() != CyclicKind::Semisimple {
                if o.regular {
                    fails.push(format!("{t}/{}: non-semisimple record marked regular", o.label));
                }
                continue;
            }
            let a_zero = o.a.as_deref() == Some("0");
            if o.regular != a_zero {
                fails.push(format!(
                    "{t}/{}: regular = {} but a = {:?}",
                    o.label, o.regular, o.a
                ));
            }
        }
    }
    ck.run("7 regular flag vs a = 0", fails);

    // (8) distinguished census
    let mut fails = Vec::new();
    for (t, want_reg, want_mixed) in [
        (SimpleType::E8, 7, 4),
        (SimpleType::E7, 3, 3),
        (SimpleType::E6, 3, 0),
        (SimpleType::F4, 4, 0),
        (SimpleType::G2, 2, 0),
    ] {
        let mut reg = 0;
        let mut mixed = 0;
        for o in cat.algebra(t).into_iter().flat_map(|a| &a.orbits) {
            if !o.distinguished {
                continue;
            }
            match o.cyclic_kind() {
                CyclicKind::Semisimple if o.regular => reg += 1,
                CyclicKind::Semisimple => fails.push(format!(
                    "{t}/{}: distinguished semisimple must be regular",
                    o.label
                )),
                CyclicKind::Mixed => mixed += 1,
                CyclicKind::Nilpotent => fails.push(format!(
                    "{t}/{}: distinguished orbit of nilpotent type",
                    o.label
                )),
            }
        }
        if (reg, mixed) != (want_reg, want_mixed) {
            fails.push(format!(
                "{t}: distinguished census (regular-ss, mixed) = ({reg}, {mixed}), want ({want_reg}, {want_mixed})"
            ));
        }
    }
    ck.run("8 distinguished census", fails);

    // (9) diagram tables: order, fixed point set, dim h^w per row
    ck.run("9 regular-element diagram tables", verify_table6(cat)?);

    // (10) mixed rows match mixed orbit records and the centralizer formula
    let mut fails = Vec::new();
    for t in EXCEPTIONAL {
        let Some(alg) = cat.algebra(t) else { continue };
        let mixed_orbits: BTreeSet<&str> = alg
            .orbits
            .iter()
            .filter(|o| o.cyclic_kind() == CyclicKind::Mixed)
            .map(|o| o.label.as_str())
            .collect();
        let rows: Vec<&MixedRecord> = cat
            .mixed
            .rows
            .iter()
            .filter(|r| SimpleType::parse(&r.algebra) == Some(t))
            .collect();
        let row_labels: BTreeSet<&str> = rows.iter().map(|r| r.label.as_str()).collect();
        if row_labels.len() != rows.len() {
            fails.push(format!("{t}: duplicate mixed rows"));
        }
        if row_labels != mixed_orbits {
            fails.push(format!(
                "{t}: mixed rows {row_labels:?} do not match mixed orbits {mixed_orbits:?}"
            ));
        }
        for row in rows {
            match mixed_dim_z(cat, t, row) {
                Ok(dim) => {
                    if dim != row.dim_z {
                        fails.push(format!(
                            "{t}/{}: dim z(e+F) = {} tabulated, {dim} computed",
                            row.label, row.dim_z
                        ));
                    }
                }
                Err(e) => fails.push(format!("{t}/{}: {e}", row.label)),
            }
        }
    }
    ck.run("10 mixed-orbit centralizers", fails);

    Ok(VerifyReport { checks: ck.checks })
}

/// A projection string ("0", a partition list, or an orbit label) must fit
/// the factor decomposition of its target subalgebra.
fn check_projection_string(cat: &Catalog, target: &str, proj: &str) -> Result<(), String> {
    if proj == "0" {
        return Ok(());
    }
    let factors = parse_factors(target).ok_or_else(|| format!("unparsable target {target}"))?;
    if let Some(partitions) = parse_nilpart_partitions(proj) {
        if partitions.len() != factors.len() {
            return Err(format!(
                "{} segments for {} factors",
                partitions.len(),
                factors.len()
            ));
        }
        for (f, parts) in factors.iter().zip(&partitions) {
            let (flavor, n) = match f {
                SimpleType::A(k) => (Flavor::Sl, k + 1),
                SimpleType::B(k) => (Flavor::So, 2 * k + 1),
                SimpleType::C(k) => (Flavor::Sp, 2 * k),
                SimpleType::D(k) => (Flavor::So, 2 * k),
                other => return Err(format!("partition inside exceptional factor {other}")),
            };
            if parts.iter().sum::<usize>() != n {
                return Err(format!("{parts:?} does not fill {f}"));
            }
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if crate::classical::Partition::new(flavor, sorted).is_err() {
                return Err(format!("{parts:?} is not admissible for {f}"));
            }
        }
        Ok(())
    } else {
        // an orbit label inside a single exceptional factor
        if factors.len() != 1 {
            return Err(format!("label projection into composite {target}"));
        }
        let label = normalize_orbit_label(proj);
        if cat.query(factors[0], &label).is_none() {
            return Err(format!("no orbit {label} in {}", factors[0]));
        }
        Ok(())
    }
}

/// dim z(e+F) = dim z_a(nilpart) + rank g - rank a for a mixed orbit.
fn mixed_dim_z(cat: &Catalog, t: SimpleType, row: &MixedRecord) -> Result<usize, CatalogError> {
    let factors = parse_factors(&row.a)
        .ok_or_else(|| CatalogError::Schema(format!("unparsable a: {}", row.a)))?;
    let ambient_rank = t.rank();
    let a_rank = factors_rank(&factors);
    let dim_za = if let Some(partitions) = parse_nilpart_partitions(&row.nilpart) {
        if partitions.len() != factors.len() {
            return Err(CatalogError::Schema(format!(
                "nilpart {} has {} segments for {} factors",
                row.nilpart,
                partitions.len(),
                factors.len()
            )));
        }
        let mut total = 0usize;
        for (f, parts) in factors.iter().zip(&partitions) {
            let (flavor, n) = match f {
                SimpleType::A(k) => (Flavor::Sl, k + 1),
                SimpleType::B(k) => (Flavor::So, 2 * k + 1),
                SimpleType::C(k) => (Flavor::Sp, 2 * k),
                SimpleType::D(k) => (Flavor::So, 2 * k),
                other => {
                    return Err(CatalogError::Schema(format!(
                        "partition nilpart inside exceptional factor {other}"
                    )))
                }
            };
            if parts.iter().sum::<usize>() != n {
                return Err(CatalogError::Schema(format!(
                    "nilpart {parts:?} does not fill {f}"
                )));
            }
            total += classical_centralizer_dim(flavor, parts);
        }
        total
    } else {
        // the nilpotent part is an orbit label inside a single exceptional
        // factor of a; its centralizer dimension comes from the grading
        if factors.len() != 1 {
            return Err(CatalogError::Schema(format!(
                "label nilpart {} with several factors {}",
                row.nilpart, row.a
            )));
        }
        let inner = factors[0];
        let label = normalize_orbit_label(&row.nilpart);
        let rec = cat
            .query(inner, &label)
            .ok_or_else(|| CatalogError::Schema(format!("no orbit {label} in {inner}")))?;
        let rs = build_root_system(inner)?;
        let c = Characteristic::new(inner, rec.characteristic.clone())?;
        let g = z_grading(&rs, &c)?;
        g.dim(0) + g.dim(1)
    };
    Ok(dim_za + ambient_rank - a_rank)
}

/// Recompute order, fixed point set and dim h^w for every bundled diagram
/// row; one failure message per mismatch.
pub fn verify_table6(cat: &Catalog) -> Result<Vec<String>, CatalogError> {
    let mut fails = Vec::new();
    for table in &cat.tables6.diagrams {
        let base = SimpleType::parse(&table.base)
            .ok_or_else(|| CatalogError::Schema(format!("bad base {}", table.base)))?;
        let rs = build_root_system(base)?;
        let diagram = if table.twist == 1 {
            extended_diagram(&rs)
        } else {
            twisted_diagram(base, table.twist)?
        };
        for row in &table.rows {
            let lab = match KacLabeling::new(diagram.clone(), row.labels.clone()) {
                Ok(l) => l,
                Err(e) => {
                    fails.push(format!("{} m={}: {e}", table.id, row.m));
                    continue;
                }
            };
            let order = lab.order();
            if order != row.m {
                fails.push(format!("{} row m={}: recomputed order {order}", table.id, row.m));
            }
            let fixed = lab.fixed_point_set()?;
            let want = FixedPointSet {
                summands: row
                    .fixed
                    .iter()
                    .map(|s| {
                        SimpleType::parse(s)
                            .ok_or_else(|| CatalogError::Schema(format!("bad summand {s}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                torus_rank: row.torus,
            };
            if fixed != want {
                fails.push(format!(
                    "{} m={} {:?}: fixed set {fixed} != table {want}",
                    table.id, row.m, row.labels
                ));
            }
            match lab.dim_hw(&rs) {
                Ok(dim) => {
                    if dim != row.dim_hw {
                        fails.push(format!(
                            "{} m={} {:?}: dim h^w {dim} != table {}",
                            table.id, row.m, row.labels, row.dim_hw
                        ));
                    }
                }
                Err(e) => fails.push(format!("{} m={}: {e}", table.id, row.m)),
            }
        }
    }
    Ok(fails)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zrep_dimensions() {
        assert_eq!(zrep_dimension("1"), Some(1));
        assert_eq!(zrep_dimension("SO_7⊕1"), Some(8));
        assert_eq!(zrep_dimension("G_2⊕G_2"), Some(14));
        assert_eq!(zrep_dimension("T_1⊂SO_3"), Some(3));
        assert_eq!(zrep_dimension("S^2SO_3/1"), Some(5));
        assert_eq!(zrep_dimension("Ad(SL_3)"), Some(8));
        assert_eq!(zrep_dimension("F_4⊕1"), Some(27));
    }

    #[test]
    fn factor_parsing() {
        assert_eq!(parse_factors("0"), Some(vec![]));
        assert_eq!(
            parse_factors("2A_2"),
            Some(vec![SimpleType::A(2), SimpleType::A(2)])
        );
        assert_eq!(
            parse_factors("D_4+A_1"),
            Some(vec![SimpleType::D(4), SimpleType::A(1)])
        );
        assert_eq!(parse_factors("[A_5]''"), Some(vec![SimpleType::A(5)]));
        assert_eq!(parse_factors("Ã_2"), Some(vec![SimpleType::A(2)]));
        assert_eq!(
            parse_factors("A_2+3A_1"),
            Some(vec![
                SimpleType::A(2),
                SimpleType::A(1),
                SimpleType::A(1),
                SimpleType::A(1)
            ])
        );
    }

    #[test]
    fn centralizer_dims() {
        // sl: (2,1) in sl_3 has z of dimension 4
        assert_eq!(classical_centralizer_dim(Flavor::Sl, &[2, 1]), 4);
        // so_8 zero orbit: the whole algebra
        assert_eq!(classical_centralizer_dim(Flavor::So, &[1; 8]), 28);
        // sp_6 principal: rank
        assert_eq!(classical_centralizer_dim(Flavor::Sp, &[6]), 3);
        assert_eq!(classical_centralizer_dim(Flavor::So, &[2, 2, 1, 1, 1, 1]), 18);
    }

    #[test]
    fn nilpart_parsing() {
        assert_eq!(
            parse_nilpart_partitions("(3,2^2,1)"),
            Some(vec![vec![3, 2, 2, 1]])
        );
        assert_eq!(
            parse_nilpart_partitions("(1^2;2;2)"),
            Some(vec![vec![1, 1], vec![2], vec![2]])
        );
        assert_eq!(parse_nilpart_partitions("A_1"), None);
    }

    #[test]
    fn label_normalization() {
        assert_eq!(normalize_orbit_label("2A_1+A_2"), "A_2+2A_1");
        assert_eq!(normalize_orbit_label("3A_1"), "3A_1");
        assert_eq!(normalize_orbit_label("A_2"), "A_2");
    }
}
