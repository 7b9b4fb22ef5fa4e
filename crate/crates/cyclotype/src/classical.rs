//! Nilpotent orbits of the classical Lie algebras sl(V), so(V), sp(V),
//! classified by the Jordan-block partition of a representative.
//!
//! Everything here is combinatorial: depth, evenness, cyclic-element type,
//! rank, the reducing subalgebra g^s with the projections e^s and e^n, the
//! bush of a semisimple-type orbit, and the Jordan type of generic cyclic
//! elements in the nilpotent-type case. The `oracle` module provides the
//! independent matrix-level ground truth these rules are tested against.

use std::collections::BTreeSet;
use std::fmt;

/// Which classical family the partition lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Flavor {
    Sl,
    So,
    Sp,
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Sl => "sl",
            Flavor::So => "so",
            Flavor::Sp => "sp",
        }
    }

    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "sl" => Some(Flavor::Sl),
            "so" => Some(Flavor::So),
            "sp" => Some(Flavor::Sp),
            _ => None,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicalError {
    EmptyPartition,
    NotSorted(Vec<usize>),
    ZeroPart,
    Inadmissible { flavor: Flavor, parts: Vec<usize>, bad_part: usize },
    ZeroElement,
    OddDepth(&'static str),
    NotSemisimpleType(Vec<usize>),
    NotNilpotentType(Vec<usize>),
    Oracle(String),
}

impl fmt::Display for ClassicalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalError::EmptyPartition => write!(f, "empty partition"),
            ClassicalError::NotSorted(p) => {
                write!(f, "partition {p:?} is not non-increasing; refusing to re-sort")
            }
            ClassicalError::ZeroPart => write!(f, "partition parts must be positive"),
            ClassicalError::Inadmissible { flavor, parts, bad_part } => write!(
                f,
                "partition {parts:?} is not admissible for {flavor}: part {bad_part} has odd multiplicity"
            ),
            ClassicalError::ZeroElement => {
                write!(f, "the all-ones partition is the zero element; no cyclic data")
            }
            ClassicalError::OddDepth(op) => {
                write!(f, "{op} is defined only for even depth (nilpotent type has none)")
            }
            ClassicalError::NotSemisimpleType(p) => {
                write!(f, "partition {p:?} is not of semisimple type; it heads no bush")
            }
            ClassicalError::NotNilpotentType(p) => {
                write!(f, "partition {p:?} is not of nilpotent type")
            }
            ClassicalError::Oracle(e) => write!(f, "oracle failure: {e}"),
        }
    }
}

impl std::error::Error for ClassicalError {}

/// A Jordan-block partition with its flavor. Parts are non-increasing and
/// positive; admissibility (even parts of so resp. odd parts of sp occur
/// with even multiplicity) is checked at construction. Input that is not
/// already sorted is rejected rather than silently re-sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    flavor: Flavor,
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(flavor: Flavor, parts: Vec<usize>) -> Result<Self, ClassicalError> {
        if parts.is_empty() {
            return Err(ClassicalError::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(ClassicalError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ClassicalError::NotSorted(parts));
        }
        let p = Partition { flavor, parts };
        if let Some(bad) = p.admissibility_violation() {
            return Err(ClassicalError::Inadmissible {
                flavor: p.flavor,
                parts: p.parts,
                bad_part: bad,
            });
        }
        Ok(p)
    }

    fn admissibility_violation(&self) -> Option<usize> {
        let check_parity = match self.flavor {
            Flavor::Sl => return None,
            Flavor::So => 0, // even parts need even multiplicity
            Flavor::Sp => 1, // odd parts need even multiplicity
        };
        self.parts.iter().collect::<BTreeSet<_>>().into_iter().find(|&&v| v % 2 == check_parity && self.multiplicity(v) % 2 == 1).copied()
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&q| q == part).count()
    }

    pub fn n1(&self) -> usize {
        self.parts[0]
    }

    pub fn n2(&self) -> Option<usize> {
        self.parts.get(1).copied()
    }

    /// The zero nilpotent: every Jordan block trivial.
    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    fn require_nonzero(&self) -> Result<(), ClassicalError> {
        if self.is_zero() {
            Err(ClassicalError::ZeroElement)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.flavor)?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Behaviour of generic cyclic elements e + F attached to a nilpotent orbit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CyclicKind {
    Nilpotent,
    Semisimple,
    Mixed,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CyclicType {
    pub kind: CyclicKind,
    /// meaningful only for `Semisimple`: generic cyclic elements are regular
    pub regular: bool,
}

impl CyclicType {
    pub fn nilpotent() -> Self {
        CyclicType { kind: CyclicKind::Nilpotent, regular: false }
    }

    pub fn semisimple(regular: bool) -> Self {
        CyclicType { kind: CyclicKind::Semisimple, regular }
    }

    pub fn mixed() -> Self {
        CyclicType { kind: CyclicKind::Mixed, regular: false }
    }

    pub fn as_str(&self) -> &'static str {
        match (self.kind, self.regular) {
            (CyclicKind::Nilpotent, _) => "nilpotent",
            (CyclicKind::Semisimple, false) => "semisimple",
            (CyclicKind::Semisimple, true) => "regular-semisimple",
            (CyclicKind::Mixed, _) => "mixed",
        }
    }
}

impl fmt::Display for CyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One simple summand of a reducing subalgebra, in its defining
/// representation: e.g. (Sl, 3) is sl_3.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ReducingSummand {
    pub flavor: Flavor,
    pub defining_dim: usize,
}

impl fmt::Display for ReducingSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.flavor, self.defining_dim)
    }
}

/// Everything the classification knows about one orbit.
#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    pub partition: Partition,
    pub depth: i64,
    pub even: bool,
    pub cyclic_type: CyclicType,
    /// 0 exactly for nilpotent type
    pub rank: usize,
    /// reducing subalgebra summands; empty for nilpotent type
    pub gs: Vec<ReducingSummand>,
    /// projection of e to g^s, as the deleted parts; None for nilpotent type
    pub es: Option<Vec<usize>>,
    /// projection of e to g^n (may be empty = zero); None for nilpotent type
    pub en: Option<Vec<usize>>,
    /// the semisimple-type representative of the bush
    pub bush_head: Option<Partition>,
    /// Jordan type of a generic cyclic element, for nilpotent type only
    pub cyclic_jordan_type: Option<Vec<usize>>,
    /// so with n < 7: type was decided by the matrix oracle, not the
    /// partition rules (the algebra is not simple of type B/D there)
    pub small_rank: bool,
}

/// Depth of the Z-grading attached to the orbit.
///
/// 2 n_1 - 2 in general; for so with n_1 odd the gap n_1 - n_2 lowers it:
/// gap 1 gives 2 n_1 - 3, gap >= 2 (or a single part) gives 2 n_1 - 4.
pub fn depth(p: &Partition) -> Result<i64, ClassicalError> {
    p.require_nonzero()?;
    let n1 = p.n1() as i64;
    if p.flavor() == Flavor::So && n1 % 2 == 1 {
        match p.n2() {
            None => return Ok(2 * n1 - 4),
            Some(n2) => match n1 - n2 as i64 {
                0 => return Ok(2 * n1 - 2),
                1 => return Ok(2 * n1 - 3),
                _ => return Ok(2 * n1 - 4),
            },
        }
    }
    Ok(2 * n1 - 2)
}

/// An orbit is even iff all parts share one parity.
pub fn is_even(p: &Partition) -> bool {
    p.parts().iter().all(|&q| q % 2 == p.n1() % 2)
}

/// Rank of the orbit: dim g_{-d} / Z(s). Zero exactly in the odd-depth
/// (nilpotent type) case; otherwise the number of simple factors of g^s,
/// except so with n_1 odd and gap 2 where it is 2.
pub fn rank(p: &Partition) -> Result<usize, ClassicalError> {
    p.require_nonzero()?;
    if depth(p)? % 2 == 1 {
        return Ok(0);
    }
    let n1 = p.n1();
    let mult = p.multiplicity(n1);
    Ok(match p.flavor() {
        Flavor::Sl => mult,
        Flavor::Sp => {
            if n1.is_multiple_of(2) {
                mult
            } else {
                mult / 2
            }
        }
        Flavor::So => {
            if n1.is_multiple_of(2) || mult >= 2 {
                // odd n1 of odd multiplicity leaves one block unused
                mult / 2
            } else {
                match p.n2() {
                    Some(n2) if n1 - n2 == 2 => 2,
                    _ => 1,
                }
            }
        }
    })
}

/// The minimal reducing subalgebra g^s, as a list of simple summands in
/// their defining representations.
pub fn reducing_subalgebra(p: &Partition) -> Result<Vec<ReducingSummand>, ClassicalError> {
    p.require_nonzero()?;
    if depth(p)? % 2 == 1 {
        return Err(ClassicalError::OddDepth("reducing_subalgebra"));
    }
    let n1 = p.n1();
    let mult = p.multiplicity(n1);
    let s = |flavor, dim, count| vec![ReducingSummand { flavor, defining_dim: dim }; count];
    Ok(match p.flavor() {
        Flavor::Sl => s(Flavor::Sl, n1, mult),
        Flavor::Sp => {
            if n1.is_multiple_of(2) {
                s(Flavor::Sp, n1, mult)
            } else {
                // odd blocks pair into dual isotropic subspaces
                s(Flavor::Sl, n1, mult / 2)
            }
        }
        Flavor::So => {
            if n1.is_multiple_of(2) || mult >= 2 {
                s(Flavor::Sl, n1, mult / 2)
            } else {
                match p.n2() {
                    Some(n2) if n1 - n2 == 2 => s(Flavor::So, n1 + n2, 1),
                    _ => s(Flavor::So, n1, 1),
                }
            }
        }
    })
}

/// Split the partition into the parts carried by g^s and the rest.
///
/// Deletes all maximal parts, except: so with n_1 odd of multiplicity
/// 2r + 1 deletes only 2r of them, and so with n_1 odd, gap 2 deletes one
/// n_1 and one n_2.
pub fn projections(p: &Partition) -> Result<(Vec<usize>, Vec<usize>), ClassicalError> {
    p.require_nonzero()?;
    if depth(p)? % 2 == 1 {
        return Err(ClassicalError::OddDepth("projections"));
    }
    let n1 = p.n1();
    let mult = p.multiplicity(n1);
    let so_odd = p.flavor() == Flavor::So && n1 % 2 == 1;
    if so_odd && mult == 1 {
        if let Some(n2) = p.n2() {
            if n1 - n2 == 2 {
                let en: Vec<usize> = p.parts()[2..].to_vec();
                return Ok((vec![n1, n2], en));
            }
        }
    }
    let deleted = if so_odd && mult % 2 == 1 && mult > 1 {
        mult - 1
    } else {
        mult
    };
    let es = vec![n1; deleted];
    let en = p.parts()[deleted..].to_vec();
    Ok((es, en))
}

/// The semisimple-type head of the bush containing p: the g^s parts padded
/// back up with ones.
pub fn bush_head(p: &Partition) -> Result<Partition, ClassicalError> {
    let (es, _) = projections(p)?;
    let pad = p.n() - es.iter().sum::<usize>();
    let mut parts = es;
    parts.extend(std::iter::repeat_n(1, pad));
    Partition::new(p.flavor(), parts)
}

/// Jordan type of the generic (nilpotent) cyclic element for an orbit of
/// nilpotent type: first part 3 n_1 - 2, the multiplicity of n_2 drops by
/// two, everything else unchanged.
pub fn nilpotent_cyclic_jordan_type(p: &Partition) -> Result<Vec<usize>, ClassicalError> {
    if !is_nilpotent_shape(p) {
        return Err(ClassicalError::NotNilpotentType(p.parts().to_vec()));
    }
    let n1 = p.n1();
    let n2 = n1 - 1;
    let mut rest: Vec<usize> = p.parts()[1..].to_vec();
    for _ in 0..2 {
        let pos = rest.iter().position(|&q| q == n2).expect("two copies of n2");
        rest.remove(pos);
    }
    let mut out = vec![3 * n1 - 2];
    out.extend(rest);
    debug_assert_eq!(out.iter().sum::<usize>(), p.n());
    Ok(out)
}

/// so, n >= 7, n_1 odd, n_1 - n_2 = 1: the one nilpotent-type shape.
fn is_nilpotent_shape(p: &Partition) -> bool {
    p.flavor() == Flavor::So
        && p.n() >= 7
        && p.n1() % 2 == 1
        && p.n2().map(|n2| p.n1() - n2 == 1).unwrap_or(false)
}

/// Full classification of one orbit.
///
/// so with n < 7 is not simple of type B/D in the intended range, so the
/// type there is decided by the matrix oracle and flagged `small_rank`.
pub fn classify(p: &Partition) -> Result<ClassificationRecord, ClassicalError> {
    p.require_nonzero()?;
    let d = depth(p)?;
    let even = is_even(p);
    let n1 = p.n1();
    let mult = p.multiplicity(n1);
    let ones = p.multiplicity(1);

    let mut small_rank = false;
    let cyclic_type = if is_nilpotent_shape(p) {
        CyclicType::nilpotent()
    } else if p.flavor() == Flavor::So && p.n() < 7 {
        small_rank = true;
        crate::oracle::oracle_type(p, 3, 0).map_err(|e| ClassicalError::Oracle(e.to_string()))?
    } else {
        classify_by_shape(p, n1, mult, ones)
    };

    let odd_type = cyclic_type.kind == CyclicKind::Nilpotent;
    let (es, en) = if odd_type || small_rank {
        (None, None)
    } else {
        let (es, en) = projections(p)?;
        (Some(es), Some(en))
    };
    Ok(ClassificationRecord {
        partition: p.clone(),
        depth: d,
        even,
        cyclic_type,
        rank: if odd_type { 0 } else { rank(p)? },
        gs: if odd_type || small_rank { vec![] } else { reducing_subalgebra(p)? },
        es,
        en,
        bush_head: if odd_type || small_rank { None } else { Some(bush_head(p)?) },
        cyclic_jordan_type: if odd_type {
            Some(nilpotent_cyclic_jordan_type(p)?)
        } else {
            None
        },
        small_rank,
    })
}

/// The semisimple-type shapes and their regularity clauses.
fn classify_by_shape(p: &Partition, n1: usize, mult: usize, ones: usize) -> CyclicType {
    match p.flavor() {
        Flavor::Sl | Flavor::Sp => {
            // (n1, ..., n1, 1, ..., 1)
            if mult + ones == p.num_parts() || n1 == 1 {
                CyclicType::semisimple(ones <= 1)
            } else {
                CyclicType::mixed()
            }
        }
        Flavor::So => {
            let tail_ones = p.num_parts() - mult == ones && n1 > 1;
            // (a) n1 of even multiplicity, all other parts 1
            if tail_ones && mult.is_multiple_of(2) {
                return CyclicType::semisimple(n1 % 2 == 1 && ones <= 2);
            }
            // (b) (2m+1, 2m-1, 1, ..., 1)
            if n1 % 2 == 1 && mult == 1 {
                if let Some(n2) = p.n2() {
                    if n1 - n2 == 2 && p.parts()[2..].iter().all(|&q| q == 1) {
                        return CyclicType::semisimple(p.num_parts() <= 4);
                    }
                }
            }
            // (c) n1 >= 5 (odd by admissibility), all other parts 1
            if tail_ones && mult == 1 && n1 >= 5 {
                return CyclicType::semisimple(p.num_parts() <= 2);
            }
            CyclicType::mixed()
        }
    }
}

/// The bush of a semisimple-type orbit: every admissible partition obtained
/// by replacing its 1-blocks with parts smaller than n_1 (one replacement
/// part may equal n_1 for so when n_1 is odd and the head holds it with
/// multiplicity >= 2), filtered to the members that genuinely share depth,
/// rank and g^s-projection with the head.
pub fn bush(p: &Partition) -> Result<Vec<Partition>, ClassicalError> {
    let rec = classify(p)?;
    if rec.cyclic_type.kind != CyclicKind::Semisimple || rec.small_rank {
        return Err(ClassicalError::NotSemisimpleType(p.parts().to_vec()));
    }
    let head_d = rec.depth;
    let head_r = rec.rank;
    let head_es = rec.es.clone().expect("semisimple head has a projection");

    let n1 = p.n1();
    let core: Vec<usize> = p.parts().iter().copied().filter(|&q| q > 1).collect();
    let t = p.multiplicity(1);
    let allow_one_n1 = p.flavor() == Flavor::So && n1 % 2 == 1 && p.multiplicity(n1) >= 2;

    let mut out: BTreeSet<Partition> = BTreeSet::new();
    for q in partitions_of(t, n1) {
        let n1_copies = q.iter().filter(|&&x| x == n1).count();
        if n1_copies > usize::from(allow_one_n1) {
            continue;
        }
        let mut parts = core.clone();
        parts.extend(q);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let Ok(member) = Partition::new(p.flavor(), parts) else {
            continue;
        };
        if member.is_zero() {
            continue;
        }
        if depth(&member)? != head_d || rank(&member)? != head_r {
            continue;
        }
        if projections(&member)?.0 != head_es {
            continue;
        }
        out.insert(member);
    }
    debug_assert!(out.contains(p));
    Ok(out.into_iter().collect())
}

/// All partitions of `total` with parts at most `max_part`, non-increasing.
pub fn partitions_of(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for next in (1..=max.min(total)).rev() {
            prefix.push(next);
            rec(total - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if total == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(total, max_part, &mut Vec::new(), &mut out);
    out
}

/// All admissible non-zero partitions of n for a flavor.
pub fn admissible_partitions(flavor: Flavor, n: usize) -> Vec<Partition> {
    partitions_of(n, n)
        .into_iter()
        .filter_map(|parts| Partition::new(flavor, parts).ok())
        .filter(|p| !p.is_zero())
        .collect()
}
