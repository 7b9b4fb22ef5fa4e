//! Weighted Dynkin diagrams of all nilpotent orbits of the exceptional
//! algebras, derived from root-system combinatorics alone.
//!
//! Orbits correspond to pairs (standard Levi subalgebra, distinguished
//! parabolic grading of its semisimple part). A {0,2}-labeling of a simple
//! diagram is a distinguished grading exactly when dim l_0 = dim l_2; the
//! grading element h of such a pair, pushed to the dominant chamber, is the
//! weighted Dynkin diagram of the saturated orbit. Enumerating subsets of
//! simple roots and deduplicating by dominant diagram therefore produces
//! every orbit exactly once, with its minimal-Levi label attached.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use num_traits::Zero;

use crate::rootsys::{classify_components, dynkin_graph, RootSystem, SimpleType};

type R64 = Ratio<i64>;

/// One nilpotent orbit of an exceptional algebra.
#[derive(Debug, Clone)]
pub struct ExceptionalOrbit {
    /// minimal-Levi label, e.g. `"D_4(a_1)+A_2"` or `"[A_5]'"`
    pub label: String,
    /// dominant weighted Dynkin diagram, Bourbaki node order
    pub characteristic: Vec<i64>,
    /// depth of the attached Z-grading
    pub depth: i64,
    /// dim g_0 + dim g_1 = dim of the centralizer of e
    pub centralizer_dim: usize,
    /// the orbit meets no proper Levi subalgebra
    pub distinguished: bool,
    /// representative simple-root subsets generating the minimal Levi
    pub levi_reps: Vec<BTreeSet<usize>>,
}

impl ExceptionalOrbit {
    pub fn orbit_dim(&self, rs: &RootSystem) -> usize {
        rs.dim() - self.centralizer_dim
    }
}

/// All {0,2}-labelings of a simple type that define a distinguished
/// parabolic: dim g_0 = dim g_2. Returned in the type's own node order.
pub fn distinguished_labelings(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let t: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { 2 } else { 0 }).collect();
        if is_distinguished_on(&rs.roots, &t, n) {
            out.push(t);
        }
    }
    out
}

fn is_distinguished_on(roots: &[Vec<i64>], t: &[i64], rank_contrib: usize) -> bool {
    let mut dim0 = rank_contrib;
    let mut dim2 = 0usize;
    for r in roots {
        let w: i64 = r.iter().zip(t).map(|(c, s)| c * s).sum();
        if w == 0 {
            dim0 += 1;
        } else if w == 2 {
            dim2 += 1;
        }
    }
    dim0 == dim2
}

/// Distinguished orbits of one simple type, ordered by descending orbit
/// dimension, paired with their conventional name suffixes.
fn distinguished_suffixes(t: SimpleType, rs: &RootSystem) -> Vec<(Vec<i64>, &'static str)> {
    let names: &[&'static str] = match t {
        SimpleType::A(_) => &[""],
        SimpleType::B(2) | SimpleType::B(3) => &[""],
        SimpleType::C(3) => &["", "(a_1)"],
        SimpleType::D(4) | SimpleType::D(5) => &["", "(a_1)"],
        SimpleType::D(6) | SimpleType::D(7) => &["", "(a_1)", "(a_2)"],
        SimpleType::E6 => &["", "(a_1)", "(a_3)"],
        SimpleType::E7 => &["", "(a_1)", "(a_2)", "(a_3)", "(a_4)", "(a_5)"],
        SimpleType::E8 => &[
            "",
            "(a_1)",
            "(a_2)",
            "(a_3)",
            "(a_4)",
            "(b_4)",
            "(a_5)",
            "(b_5)",
            "(a_6)",
            "(b_6)",
            "(a_7)",
        ],
        SimpleType::F4 => &["", "(a_1)", "(a_2)", "(a_3)"],
        SimpleType::G2 => &["", "(a_1)"],
        other => panic!("no distinguished-orbit name table for {other}"),
    };
    let mut found = distinguished_labelings(rs);
    // order by descending orbit dimension = ascending dim g_0
    let dim0 = |lab: &Vec<i64>| -> usize {
        let mut d = rs.rank();
        for r in &rs.roots {
            let w: i64 = r.iter().zip(lab).map(|(c, s)| c * s).sum();
            if w == 0 {
                d += 1;
            }
        }
        d
    };
    found.sort_by_key(|lab| (dim0(lab), lab.clone()));
    assert_eq!(
        found.len(),
        names.len(),
        "distinguished count mismatch for {t}: found {}",
        found.len()
    );
    let dims: Vec<usize> = found.iter().map(dim0).collect();
    for w in dims.windows(2) {
        assert!(w[0] < w[1], "distinguished orbits of {t} not separated by dimension");
    }
    found
        .into_iter()
        .map(|lab| canonical_under_automorphisms(t, lab))
        .zip(names.iter().copied())
        .collect()
}

/// Minimum over diagram automorphism images, so that labelings can be
/// compared independently of arm choices.
fn canonical_under_automorphisms(t: SimpleType, labels: Vec<i64>) -> Vec<i64> {
    let mut images = vec![labels.clone()];
    match t {
        SimpleType::A(n) if n > 1 => {
            let rev: Vec<i64> = labels.iter().rev().copied().collect();
            images.push(rev);
        }
        SimpleType::D(4) => {
            // permute the outer nodes 1, 3, 4 (indices 0, 2, 3)
            let perms: [[usize; 3]; 6] = [
                [0, 2, 3],
                [0, 3, 2],
                [2, 0, 3],
                [2, 3, 0],
                [3, 0, 2],
                [3, 2, 0],
            ];
            for p in perms {
                let mut im = labels.clone();
                im[0] = labels[p[0]];
                im[2] = labels[p[1]];
                im[3] = labels[p[2]];
                images.push(im);
            }
        }
        SimpleType::D(_) => {
            let mut im = labels.clone();
            let n = im.len();
            im.swap(n - 2, n - 1);
            images.push(im);
        }
        SimpleType::E6 => {
            // the reversal symmetry 1<->6, 3<->5
            let mut im = labels.clone();
            im.swap(0, 5);
            im.swap(2, 4);
            images.push(im);
        }
        _ => {}
    }
    images.into_iter().min().expect("non-empty")
}

/// Enumerate every non-zero nilpotent orbit of an exceptional algebra.
pub fn exceptional_orbits(rs: &RootSystem) -> Vec<ExceptionalOrbit> {
    let ty = rs.simple_type;
    assert!(
        matches!(ty, SimpleType::E6 | SimpleType::E7 | SimpleType::E8 | SimpleType::F4 | SimpleType::G2),
        "orbit enumeration is for the exceptional types"
    );
    let n = rs.rank();
    let graph = dynkin_graph(ty);
    let two_lengths = rs.len2.iter().collect::<BTreeSet<_>>().len() > 1;

    // abstract distinguished data per component type, built on demand
    let mut per_type: BTreeMap<SimpleType, Vec<(Vec<i64>, &'static str)>> = BTreeMap::new();

    // dominant characteristic -> (label, minimal subset, all representative subsets)
    type Found = (String, BTreeSet<usize>, Vec<BTreeSet<usize>>);
    let mut orbits: BTreeMap<Vec<i64>, Found> = BTreeMap::new();

    for mask in 1u32..(1 << n) {
        let subset: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let node_set: BTreeSet<usize> = subset.iter().map(|i| i + 1).collect();
        let sub = graph.induced(&node_set);
        let comps = classify_components(&sub).expect("Levi subdiagrams are Dynkin");

        // roots supported on the subset, bucketed per component
        let comp_of_node: BTreeMap<usize, usize> = comps
            .iter()
            .enumerate()
            .flat_map(|(ci, c)| c.nodes_in_order.iter().map(move |&v| (v - 1, ci)))
            .collect();
        let mut comp_roots: Vec<Vec<&Vec<i64>>> = vec![Vec::new(); comps.len()];
        'root: for r in &rs.roots {
            let mut comp = None;
            for (i, &c) in r.iter().enumerate() {
                if c != 0 {
                    if !subset.contains(&i) {
                        continue 'root;
                    }
                    let ci = comp_of_node[&i];
                    if *comp.get_or_insert(ci) != ci {
                        continue 'root; // cannot happen: components are orthogonal
                    }
                }
            }
            if let Some(ci) = comp {
                comp_roots[ci].push(r);
            }
        }

        // distinguished labelings per component, in ambient coordinates
        let mut per_comp: Vec<Vec<Vec<(usize, i64)>>> = Vec::with_capacity(comps.len());
        for (ci, comp) in comps.iter().enumerate() {
            let k = comp.nodes_in_order.len();
            let mut found = Vec::new();
            for m in 1u32..(1 << k) {
                let assignment: Vec<(usize, i64)> = comp
                    .nodes_in_order
                    .iter()
                    .enumerate()
                    .map(|(pos, &v)| (v - 1, if m >> pos & 1 == 1 { 2 } else { 0 }))
                    .collect();
                let mut t = vec![0i64; n];
                for &(i, s) in &assignment {
                    t[i] = s;
                }
                let mut dim0 = k;
                let mut dim2 = 0usize;
                for r in &comp_roots[ci] {
                    let w: i64 = r.iter().zip(&t).map(|(c, s)| c * s).sum();
                    if w == 0 {
                        dim0 += 1;
                    } else if w == 2 {
                        dim2 += 1;
                    }
                }
                if dim0 == dim2 {
                    found.push(assignment);
                }
            }
            per_comp.push(found);
        }
        if per_comp.iter().any(|v| v.is_empty()) {
            continue;
        }

        // cartesian product of the per-component choices
        let mut stack: Vec<Vec<(usize, i64)>> = vec![Vec::new()];
        for choices in &per_comp {
            let mut next = Vec::with_capacity(stack.len() * choices.len());
            for partial in &stack {
                for choice in choices {
                    let mut row = partial.clone();
                    row.extend(choice.iter().copied());
                    next.push(row);
                }
            }
            stack = next;
        }

        for assignment in stack {
            let t: BTreeMap<usize, i64> = assignment.iter().copied().collect();
            let w = dominant_diagram(rs, &subset, &t);
            let label = orbit_label(rs, &comps, &assignment, two_lengths, &mut per_type);
            match orbits.get_mut(&w) {
                None => {
                    orbits.insert(w, (label, subset.clone(), vec![subset.clone()]));
                }
                Some((existing, min_subset, reps)) => {
                    // minimal Levis of one orbit are conjugate; keep every
                    // representative subset but a single label
                    if subset.len() < min_subset.len() {
                        *existing = label;
                        *min_subset = subset.clone();
                    }
                    reps.push(subset.clone());
                }
            }
        }
    }

    let full: BTreeSet<usize> = (0..n).collect();
    let mut out: Vec<ExceptionalOrbit> = orbits
        .into_iter()
        .map(|(w, (label, _, reps))| {
            let depth: i64 = w.iter().zip(&rs.highest_root_coeffs).map(|(s, a)| s * a).sum();
            let mut centralizer = rs.rank();
            for r in &rs.roots {
                let wt: i64 = r.iter().zip(&w).map(|(c, s)| c * s).sum();
                if wt == 0 || wt == 1 {
                    centralizer += 1;
                }
            }
            ExceptionalOrbit {
                label,
                characteristic: w,
                depth,
                centralizer_dim: centralizer,
                distinguished: reps.contains(&full),
                levi_reps: reps,
            }
        })
        .collect();

    assign_primes(ty, &mut out);
    out.sort_by(|a, b| (a.depth, &a.characteristic).cmp(&(b.depth, &b.characteristic)));
    out
}

/// Solve for the grading element of (subset, labeling) and push it into the
/// dominant chamber; returns the full label vector alpha_i(h).
fn dominant_diagram(rs: &RootSystem, subset: &BTreeSet<usize>, t: &BTreeMap<usize, i64>) -> Vec<i64> {
    let idx: Vec<usize> = subset.iter().copied().collect();
    let k = idx.len();
    // solve sum_j x_j cartan[i][j] = t_i over the subset
    let mut aug: Vec<Vec<R64>> = vec![vec![R64::zero(); k + 1]; k];
    for (r, &i) in idx.iter().enumerate() {
        for (c, &j) in idx.iter().enumerate() {
            aug[r][c] = R64::from_integer(rs.cartan[i][j]);
        }
        aug[r][k] = R64::from_integer(t[&i]);
    }
    solve_in_place(&mut aug);
    let x: Vec<R64> = (0..k).map(|r| aug[r][k]).collect();

    let n = rs.rank();
    let mut w: Vec<R64> = (0..n)
        .map(|i| {
            idx.iter()
                .enumerate()
                .map(|(c, &j)| x[c] * R64::from_integer(rs.cartan[i][j]))
                .sum()
        })
        .collect();
    // reflect until dominant; each step raises the coroot height
    while let Some(i) = (0..n).find(|&i| w[i] < R64::zero()) {
        let wi = w[i];
        for (j, wj) in w.iter_mut().enumerate() {
            *wj -= wi * R64::from_integer(rs.cartan[j][i]);
        }
    }
    w.into_iter()
        .map(|v| {
            assert!(v.is_integer(), "grading element must be integral on roots");
            v.to_integer()
        })
        .collect()
}

fn solve_in_place(aug: &mut [Vec<R64>]) {
    let k = aug.len();
    for col in 0..k {
        let p = (col..k)
            .find(|&r| !aug[r][col].is_zero())
            .expect("Cartan submatrix is invertible");
        aug.swap(col, p);
        let pivot = aug[col][col];
        for cell in &mut aug[col][col..=k] {
            *cell /= pivot;
        }
        for r in 0..k {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col];
                for c in col..=k {
                    let v = aug[r][c] - f * aug[col][c];
                    aug[r][c] = v;
                }
            }
        }
    }
}

/// Compose the orbit label from the classified Levi components and their
/// within-component distinguished labelings.
fn orbit_label(
    rs: &RootSystem,
    comps: &[crate::rootsys::ClassifiedComponent],
    assignment: &[(usize, i64)],
    two_lengths: bool,
    per_type: &mut BTreeMap<SimpleType, Vec<(Vec<i64>, &'static str)>>,
) -> String {
    let t: BTreeMap<usize, i64> = assignment.iter().copied().collect();
    let mut factor_names: Vec<(usize, u8, String)> = Vec::new();
    for comp in comps {
        let cty = comp.simple_type;
        let suffixes = per_type.entry(cty).or_insert_with(|| {
            let sub_rs = crate::rootsys::build_root_system(cty).expect("valid component type");
            distinguished_suffixes(cty, &sub_rs)
        });
        let local: Vec<i64> = comp.nodes_in_order.iter().map(|&v| t[&(v - 1)]).collect();
        let canon = canonical_under_automorphisms(cty, local);
        let suffix = suffixes
            .iter()
            .find(|(lab, _)| *lab == canon)
            .map(|(_, s)| *s)
            .unwrap_or_else(|| panic!("unnamed distinguished labeling {canon:?} of {cty}"));
        // short-root factors get a tilde in F4 and G2
        let short = two_lengths
            && comp
                .nodes_in_order
                .iter()
                .all(|&v| rs.len2[v - 1] < *rs.len2.iter().max().unwrap());
        let base = cty.to_string();
        let name = if short {
            let mut chars = base.chars();
            chars.next();
            format!("Ã{}{suffix}", chars.as_str())
        } else {
            format!("{base}{suffix}")
        };
        factor_names.push((cty.rank(), u8::from(short), name));
    }
    // larger factors first, plain before tilde at equal rank
    factor_names.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    // group multiplicities
    let mut pieces: Vec<String> = Vec::new();
    let mut i = 0;
    let names: Vec<String> = factor_names.into_iter().map(|(_, _, s)| s).collect();
    while i < names.len() {
        let mut j = i;
        while j < names.len() && names[j] == names[i] {
            j += 1;
        }
        let mult = j - i;
        if mult == 1 {
            pieces.push(names[i].clone());
        } else {
            pieces.push(format!("{mult}{}", names[i]));
        }
        i = j;
    }
    pieces.join("+")
}

/// E7 has pairs of non-conjugate Levi subalgebras of equal type; the primed
/// variant is the one conjugate into the A7 subsystem (generated inside the
/// even-coefficient sublattice at node 2), the double-primed one is not.
fn assign_primes(ty: SimpleType, orbits: &mut [ExceptionalOrbit]) {
    let mut by_label: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, o) in orbits.iter().enumerate() {
        by_label.entry(o.label.clone()).or_default().push(i);
    }
    for (label, ids) in by_label {
        if ids.len() == 1 {
            continue;
        }
        assert_eq!(ty, SimpleType::E7, "duplicate label {label} outside E7");
        assert_eq!(ids.len(), 2, "more than two orbits share {label}");
        // node 2 is index 1; a subset avoiding it sits inside A7 literally
        let avoids = |o: &ExceptionalOrbit| o.levi_reps.iter().any(|s| !s.contains(&1));
        let (a, b) = (ids[0], ids[1]);
        let a_in = avoids(&orbits[a]);
        let b_in = avoids(&orbits[b]);
        assert_ne!(a_in, b_in, "exactly one of the {label} classes lies in A_7");
        let (primed, doubled) = if a_in { (a, b) } else { (b, a) };
        orbits[primed].label = format!("[{label}]'");
        orbits[doubled].label = format!("[{label}]''");
    }
}
