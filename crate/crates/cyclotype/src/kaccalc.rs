//! Finite-order automorphisms via labeled (twisted) affine diagrams.
//!
//! A labeling s_0..s_n of an affine diagram with non-negative integers, not
//! all zero, encodes an inner (twist 1) or outer (twist 2, 3) automorphism
//! of order m = twist * sum a_i s_i. Its fixed subalgebra is read off the
//! diagram: the semisimple part is the zero-labeled subdiagram and the rest
//! is a central torus.

use std::collections::BTreeSet;
use std::fmt;

use crate::rootsys::{
    classify_subdiagram, AffineDiagram, RootSysError, RootSystem, SimpleType,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KacError {
    AllLabelsZero,
    LabelCount { expected: usize, got: usize },
    BadSubdiagram(RootSysError),
    /// |roots| / m is not an integer: the labeling cannot come from a
    /// quasiregular Weyl element.
    NonIntegralRootShare { roots: usize, order: i64 },
    NegativeFixedSpace,
    ClassicalUnsupported(SimpleType),
}

impl fmt::Display for KacError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KacError::AllLabelsZero => write!(f, "labels must not all be zero"),
            KacError::LabelCount { expected, got } => {
                write!(f, "expected {expected} labels, got {got}")
            }
            KacError::BadSubdiagram(e) => write!(f, "{e}"),
            KacError::NonIntegralRootShare { roots, order } => {
                write!(f, "|roots| = {roots} is not divisible by the order {order}")
            }
            KacError::NegativeFixedSpace => write!(f, "dim h^w would be negative"),
            KacError::ClassicalUnsupported(t) => {
                write!(f, "regular numbers are bundled for exceptional types only, not {t}")
            }
        }
    }
}

impl std::error::Error for KacError {}

impl From<RootSysError> for KacError {
    fn from(e: RootSysError) -> Self {
        KacError::BadSubdiagram(e)
    }
}

/// Non-negative labels on an affine diagram, not all zero.
#[derive(Debug, Clone)]
pub struct KacLabeling {
    pub diagram: AffineDiagram,
    pub labels: Vec<i64>,
}

/// Fixed subalgebra of the encoded automorphism: simple summands plus a
/// central torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointSet {
    pub summands: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl FixedPointSet {
    pub fn dim(&self) -> usize {
        self.summands.iter().map(|t| t.dim()).sum::<usize>() + self.torus_rank
    }

    pub fn rank(&self) -> usize {
        self.summands.iter().map(|t| t.rank()).sum::<usize>() + self.torus_rank
    }
}

impl fmt::Display for FixedPointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.summands {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{}", compact(s))?;
            first = false;
        }
        if self.torus_rank > 0 || self.summands.is_empty() {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "T{}", self.torus_rank)?;
        }
        Ok(())
    }
}

fn compact(t: &SimpleType) -> String {
    t.to_string().replace('_', "")
}

impl KacLabeling {
    pub fn new(diagram: AffineDiagram, labels: Vec<i64>) -> Result<Self, KacError> {
        if labels.len() != diagram.num_nodes() {
            return Err(KacError::LabelCount {
                expected: diagram.num_nodes(),
                got: labels.len(),
            });
        }
        if labels.iter().all(|&s| s == 0) {
            return Err(KacError::AllLabelsZero);
        }
        Ok(KacLabeling { diagram, labels })
    }

    /// Order of the automorphism: twist * sum over nodes of a_i s_i.
    pub fn order(&self) -> i64 {
        let s: i64 = self
            .diagram
            .marks
            .iter()
            .zip(&self.labels)
            .map(|(a, s)| a * s)
            .sum();
        self.diagram.twist as i64 * s
    }

    /// Fixed subalgebra: classify the zero-labeled subdiagram; the torus rank
    /// makes the total rank up to (number of nodes) - 1.
    pub fn fixed_point_set(&self) -> Result<FixedPointSet, KacError> {
        let zero_nodes: BTreeSet<usize> = self
            .diagram
            .graph
            .nodes
            .iter()
            .enumerate()
            .filter_map(|(idx, &node)| (self.labels[idx] == 0).then_some(node))
            .collect();
        let sub = self.diagram.graph.induced(&zero_nodes);
        let summands = classify_subdiagram(&sub)?;
        let torus_rank = (self.diagram.num_nodes() - 1) - zero_nodes.len();
        Ok(FixedPointSet {
            summands,
            torus_rank,
        })
    }

    pub fn dim_fixed(&self) -> Result<usize, KacError> {
        Ok(self.fixed_point_set()?.dim())
    }

    /// dim h^w by the root-count identity: dim g^sigma - |roots| / m.
    ///
    /// `rs` is the ambient root system (the base algebra for twisted
    /// diagrams). A non-integral |roots|/m is reported, not rounded.
    pub fn dim_hw(&self, rs: &RootSystem) -> Result<i64, KacError> {
        let m = self.order();
        let roots = rs.root_count();
        if m <= 0 || roots as i64 % m != 0 {
            return Err(KacError::NonIntegralRootShare { roots, order: m });
        }
        let dim = self.dim_fixed()? as i64 - roots as i64 / m;
        if dim < 0 {
            return Err(KacError::NegativeFixedSpace);
        }
        Ok(dim)
    }
}

/// Orders of regular Weyl-group elements for the exceptional types, as they
/// appear in the bundled diagram tables.
pub fn regular_numbers(t: SimpleType) -> Result<Vec<i64>, KacError> {
    match t {
        SimpleType::E6 => Ok(vec![2, 3, 4, 6, 8, 9, 12]),
        SimpleType::E7 => Ok(vec![2, 3, 6, 7, 9, 14, 18]),
        SimpleType::E8 => Ok(vec![2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30]),
        SimpleType::F4 => Ok(vec![2, 3, 4, 6, 8, 12]),
        SimpleType::G2 => Ok(vec![2, 3, 6]),
        other => Err(KacError::ClassicalUnsupported(other)),
    }
}
