//! Finite root systems from Cartan matrices, with exact integer arithmetic.
//!
//! Roots are stored as integer coefficient vectors over the simple roots
//! (never as Euclidean vectors), so every pairing is computed through the
//! Cartan matrix and stays exact. Node numbering follows Bourbaki throughout;
//! see `docs/numbering.md` at the repository root.

use std::collections::BTreeSet;
use std::fmt;

/// Classification families of finite simple root systems.
///
/// `A(n)` requires n >= 1, `B(n)` n >= 2, `C(n)` n >= 2, `D(n)` n >= 3.
/// B2 and C2 are both accepted as input; classification output prefers B2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSysError {
    InvalidRank(SimpleType),
    UnsupportedTwist { base: SimpleType, twist: usize },
    NotADynkinDiagram(String),
}

impl fmt::Display for RootSysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSysError::InvalidRank(t) => write!(f, "invalid rank for family: {t}"),
            RootSysError::UnsupportedTwist { base, twist } => {
                write!(f, "no twisted diagram of order {twist} over {base}")
            }
            RootSysError::NotADynkinDiagram(msg) => write!(f, "not a Dynkin diagram: {msg}"),
        }
    }
}

impl std::error::Error for RootSysError {}

impl SimpleType {
    pub fn validate(&self) -> Result<(), RootSysError> {
        let ok = match *self {
            SimpleType::A(n) => n >= 1,
            SimpleType::B(n) => n >= 2,
            SimpleType::C(n) => n >= 2,
            SimpleType::D(n) => n >= 3,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(RootSysError::InvalidRank(*self))
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            SimpleType::A(n) | SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => n,
            SimpleType::E6 => 6,
            SimpleType::E7 => 7,
            SimpleType::E8 => 8,
            SimpleType::F4 => 4,
            SimpleType::G2 => 2,
        }
    }

    /// Number of roots, by the classical closed forms.
    pub fn num_roots(&self) -> usize {
        match *self {
            SimpleType::A(n) => n * (n + 1),
            SimpleType::B(n) | SimpleType::C(n) => 2 * n * n,
            SimpleType::D(n) => 2 * n * (n - 1),
            SimpleType::E6 => 72,
            SimpleType::E7 => 126,
            SimpleType::E8 => 240,
            SimpleType::F4 => 48,
            SimpleType::G2 => 12,
        }
    }

    /// dim g = rank + |roots|.
    pub fn dim(&self) -> usize {
        self.rank() + self.num_roots()
    }

    /// Cartan matrix in the convention `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let bond = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, ij: i64, ji: i64| {
            a[i][j] = ij;
            a[j][i] = ji;
        };
        match *self {
            SimpleType::A(n) => {
                for i in 0..n.saturating_sub(1) {
                    bond(&mut a, i, i + 1, -1, -1);
                }
            }
            SimpleType::B(n) => {
                for i in 0..n - 2 {
                    bond(&mut a, i, i + 1, -1, -1);
                }
                // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
                bond(&mut a, n - 2, n - 1, -2, -1);
            }
            SimpleType::C(n) => {
                for i in 0..n - 2 {
                    bond(&mut a, i, i + 1, -1, -1);
                }
                // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
                bond(&mut a, n - 2, n - 1, -1, -2);
            }
            SimpleType::D(n) => {
                for i in 0..n - 2 {
                    bond(&mut a, i, i + 1, -1, -1);
                }
                bond(&mut a, n - 3, n - 1, -1, -1);
            }
            SimpleType::E6 | SimpleType::E7 | SimpleType::E8 => {
                // chain 1-3-4-5-..., node 2 attached to node 4 (Bourbaki)
                bond(&mut a, 0, 2, -1, -1);
                for i in 2..n - 1 {
                    bond(&mut a, i, i + 1, -1, -1);
                }
                bond(&mut a, 1, 3, -1, -1);
            }
            SimpleType::F4 => {
                bond(&mut a, 0, 1, -1, -1);
                // alpha_2 long, alpha_3 short
                bond(&mut a, 1, 2, -2, -1);
                bond(&mut a, 2, 3, -1, -1);
            }
            SimpleType::G2 => {
                // alpha_1 short, alpha_2 long
                bond(&mut a, 0, 1, -1, -3);
            }
        }
        a
    }

    /// Squared lengths of the simple roots, on a per-system integer scale.
    pub fn root_len2(&self) -> Vec<i64> {
        let n = self.rank();
        match *self {
            SimpleType::B(_) => {
                let mut v = vec![4; n];
                v[n - 1] = 2;
                v
            }
            SimpleType::C(_) => {
                let mut v = vec![2; n];
                v[n - 1] = 4;
                v
            }
            SimpleType::F4 => vec![4, 4, 2, 2],
            SimpleType::G2 => vec![2, 6],
            _ => vec![2; n],
        }
    }

    /// Parse "E6", "E_6", "B4", "A_1" and the like.
    pub fn parse(s: &str) -> Option<SimpleType> {
        let s = s.replace('_', "");
        let (fam, rank) = s.split_at(1);
        let t = match (fam, rank) {
            ("E", "6") => SimpleType::E6,
            ("E", "7") => SimpleType::E7,
            ("E", "8") => SimpleType::E8,
            ("F", "4") => SimpleType::F4,
            ("G", "2") => SimpleType::G2,
            _ => {
                let n: usize = rank.parse().ok()?;
                match fam {
                    "A" => SimpleType::A(n),
                    "B" => SimpleType::B(n),
                    "C" => SimpleType::C(n),
                    "D" => SimpleType::D(n),
                    _ => return None,
                }
            }
        };
        t.validate().ok()?;
        Some(t)
    }

    fn family_order(&self) -> u8 {
        match self {
            SimpleType::A(_) => 0,
            SimpleType::B(_) => 1,
            SimpleType::C(_) => 2,
            SimpleType::D(_) => 3,
            SimpleType::E6 => 4,
            SimpleType::E7 => 5,
            SimpleType::E8 => 6,
            SimpleType::F4 => 7,
            SimpleType::G2 => 8,
        }
    }

    /// Canonical sort key: rank first, then family. Matches the print order
    /// of direct sums such as `A_1 + A_5` or `A_3 + D_5`.
    pub fn sort_key(&self) -> (usize, u8) {
        (self.rank(), self.family_order())
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimpleType::A(n) => write!(f, "A_{n}"),
            SimpleType::B(n) => write!(f, "B_{n}"),
            SimpleType::C(n) => write!(f, "C_{n}"),
            SimpleType::D(n) => write!(f, "D_{n}"),
            SimpleType::E6 => write!(f, "E_6"),
            SimpleType::E7 => write!(f, "E_7"),
            SimpleType::E8 => write!(f, "E_8"),
            SimpleType::F4 => write!(f, "F_4"),
            SimpleType::G2 => write!(f, "G_2"),
        }
    }
}

/// A full finite root system in simple-root coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`
    pub cartan: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots (relative integer scale).
    pub len2: Vec<i64>,
    /// Every root as a coefficient vector over the simple roots; sorted.
    pub roots: Vec<Vec<i64>>,
    /// Coefficients a_1..a_r of the highest root.
    pub highest_root_coeffs: Vec<i64>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.root_count()
    }

    /// `<alpha, alpha_j^vee>` for a root (or weight) in simple-root coordinates.
    pub fn pairing(&self, coeffs: &[i64], j: usize) -> i64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * self.cartan[i][j])
            .sum()
    }

    /// Squared length of a root, on the same scale as `len2`.
    pub fn root_len2(&self, coeffs: &[i64]) -> i64 {
        // (alpha, alpha) with (alpha_i, alpha_j) = cartan[i][j] * len2[j] / 2
        let n = self.rank();
        let mut acc = 0i64;
        for i in 0..n {
            for j in 0..n {
                acc += coeffs[i] * coeffs[j] * self.cartan[i][j] * self.len2[j];
            }
        }
        debug_assert!(acc % 2 == 0);
        acc / 2
    }

    /// Simple reflection s_j applied to a coefficient vector.
    pub fn reflect(&self, coeffs: &[i64], j: usize) -> Vec<i64> {
        let k = self.pairing(coeffs, j);
        let mut out = coeffs.to_vec();
        out[j] -= k;
        out
    }
}

/// Generate the full root set by closing the simple roots under all simple
/// reflections. Deterministic and exact.
pub fn build_root_system(t: SimpleType) -> Result<RootSystem, RootSysError> {
    t.validate()?;
    let n = t.rank();
    let cartan = t.cartan_matrix();
    let len2 = t.root_len2();

    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut alpha = vec![0i64; n];
        alpha[i] = 1;
        set.insert(alpha.clone());
        queue.push(alpha);
    }
    while let Some(alpha) = queue.pop() {
        for j in 0..n {
            let k: i64 = (0..n).map(|i| alpha[i] * cartan[i][j]).sum();
            let mut beta = alpha.clone();
            beta[j] -= k;
            if set.insert(beta.clone()) {
                queue.push(beta);
            }
        }
    }

    let roots: Vec<Vec<i64>> = set.into_iter().collect();
    // The highest root is the unique root of maximal height.
    let highest = roots
        .iter()
        .max_by_key(|r| r.iter().sum::<i64>())
        .expect("non-empty root set")
        .clone();

    let rs = RootSystem {
        simple_type: t,
        cartan,
        len2,
        roots,
        highest_root_coeffs: highest,
    };
    debug_assert_eq!(rs.root_count(), t.num_roots());
    Ok(rs)
}

/// An edge of a Dynkin graph. For bond multiplicity > 1 the arrow is recorded
/// as the node on the short-root side; a bare multiple bond is rejected by
/// classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub mult: usize,
    pub short_side: Option<usize>,
}

/// A finite graph in Dynkin-diagram form: nodes carry an optional relative
/// squared length, edges a bond multiplicity and arrow.
#[derive(Debug, Clone, Default)]
pub struct DynkinGraph {
    pub nodes: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl DynkinGraph {
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.a == v {
                out.push(e.b);
            } else if e.b == v {
                out.push(e.a);
            }
        }
        out
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| (e.a == u && e.b == v) || (e.a == v && e.b == u))
    }

    /// Induced subgraph on the given node set.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> DynkinGraph {
        DynkinGraph {
            nodes: self.nodes.iter().copied().filter(|v| keep.contains(v)).collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| keep.contains(&e.a) && keep.contains(&e.b))
                .cloned()
                .collect(),
        }
    }

    /// Connected components, as sorted node lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.nodes {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort();
        out
    }
}

/// The Dynkin graph of a simple type, nodes numbered 1..=rank (Bourbaki).
pub fn dynkin_graph(t: SimpleType) -> DynkinGraph {
    let n = t.rank();
    let cartan = t.cartan_matrix();
    let len2 = t.root_len2();
    let mut g = DynkinGraph {
        nodes: (1..=n).collect(),
        edges: Vec::new(),
    };
    for i in 0..n {
        for j in i + 1..n {
            if cartan[i][j] != 0 {
                let mult = (cartan[i][j] * cartan[j][i]) as usize;
                let short_side = if mult > 1 {
                    Some(if len2[i] < len2[j] { i + 1 } else { j + 1 })
                } else {
                    None
                };
                g.edges.push(Edge {
                    a: i + 1,
                    b: j + 1,
                    mult,
                    short_side,
                });
            }
        }
    }
    g
}

/// One classified connected component: its type and its nodes listed in the
/// canonical (Bourbaki) order of that type.
#[derive(Debug, Clone)]
pub struct ClassifiedComponent {
    pub simple_type: SimpleType,
    /// component nodes ordered so that position i corresponds to node i+1 of
    /// the Bourbaki diagram of `simple_type`
    pub nodes_in_order: Vec<usize>,
}

/// Identify the Dynkin type of every connected component.
///
/// D3 is reported as A3 and a two-node double bond as B2; a multiple bond
/// without arrow is an error.
pub fn classify_subdiagram(g: &DynkinGraph) -> Result<Vec<SimpleType>, RootSysError> {
    Ok(classify_components(g)?
        .into_iter()
        .map(|c| c.simple_type)
        .collect())
}

/// As `classify_subdiagram`, but keeps the node correspondence. Output is
/// sorted by `SimpleType::sort_key`.
pub fn classify_components(g: &DynkinGraph) -> Result<Vec<ClassifiedComponent>, RootSysError> {
    let mut out = Vec::new();
    for comp in g.components() {
        out.push(classify_one(g, &comp)?);
    }
    out.sort_by_key(|c| (c.simple_type.sort_key(), c.nodes_in_order.clone()));
    Ok(out)
}

fn classify_one(g: &DynkinGraph, comp: &[usize]) -> Result<ClassifiedComponent, RootSysError> {
    let n = comp.len();
    let err = |msg: String| RootSysError::NotADynkinDiagram(msg);
    if n == 1 {
        return Ok(ClassifiedComponent {
            simple_type: SimpleType::A(1),
            nodes_in_order: comp.to_vec(),
        });
    }
    let in_comp = |v: usize| comp.contains(&v);
    let edges: Vec<&Edge> = g
        .edges
        .iter()
        .filter(|e| in_comp(e.a) && in_comp(e.b))
        .collect();
    for e in &edges {
        if e.mult > 1 && e.short_side.is_none() {
            return Err(err(format!("multiple bond {}-{} without arrow", e.a, e.b)));
        }
    }
    if edges.len() != n - 1 {
        return Err(err(format!("component with {n} nodes has {} edges", edges.len())));
    }
    let deg = |v: usize| -> usize { g.neighbors(v).iter().filter(|w| in_comp(**w)).count() };
    let multi: Vec<&&Edge> = edges.iter().filter(|e| e.mult > 1).collect();

    if multi.len() > 1 {
        return Err(err("more than one multiple bond in a component".into()));
    }

    if let Some(e) = multi.first() {
        if comp.iter().any(|&v| deg(v) > 2) {
            return Err(err("multiple bond in a branched component".into()));
        }
        // The component is a path; orient it end-to-end.
        let path = path_order(g, comp).ok_or_else(|| err("not a path".into()))?;
        if e.mult == 3 {
            if n != 2 {
                return Err(err("triple bond in a component of size != 2".into()));
            }
            // G2 canonical order: short root first.
            let short = e.short_side.unwrap();
            let long = if e.a == short { e.b } else { e.a };
            return Ok(ClassifiedComponent {
                simple_type: SimpleType::G2,
                nodes_in_order: vec![short, long],
            });
        }
        // Double bond: B, C (bond at an end) or F4 (bond in the middle of 4).
        let pos = (0..n - 1)
            .find(|&i| {
                (path[i] == e.a && path[i + 1] == e.b) || (path[i] == e.b && path[i + 1] == e.a)
            })
            .expect("bond is on the path");
        let short = e.short_side.unwrap();
        if n == 2 {
            // B2 = C2; canonical order long, short.
            let long = if path[0] == short { path[1] } else { path[0] };
            return Ok(ClassifiedComponent {
                simple_type: SimpleType::B(2),
                nodes_in_order: vec![long, short],
            });
        }
        if pos == 0 || pos == n - 2 {
            // Orient the path so the double bond sits at the far end.
            let p: Vec<usize> = if pos == 0 { path.iter().rev().copied().collect() } else { path };
            // p[n-2] -- p[n-1] is the double bond.
            if short == p[n - 1] {
                // one short terminal node: B_n
                Ok(ClassifiedComponent {
                    simple_type: SimpleType::B(n),
                    nodes_in_order: p,
                })
            } else {
                // short tail, one long terminal node: C_n
                Ok(ClassifiedComponent {
                    simple_type: SimpleType::C(n),
                    nodes_in_order: p,
                })
            }
        } else if n == 4 && pos == 1 {
            // F4 canonical order: long, long, short, short.
            let p: Vec<usize> = if short == path[1] {
                path.iter().rev().copied().collect()
            } else {
                path
            };
            Ok(ClassifiedComponent {
                simple_type: SimpleType::F4,
                nodes_in_order: p,
            })
        } else {
            Err(err("double bond at an unsupported position".into()))
        }
    } else {
        // Simply laced: A, D, or E by branch structure.
        let forks: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) >= 3).collect();
        match forks.len() {
            0 => {
                let path = path_order(g, comp).ok_or_else(|| err("not a path".into()))?;
                Ok(ClassifiedComponent {
                    simple_type: SimpleType::A(n),
                    nodes_in_order: path,
                })
            }
            1 => {
                let c = forks[0];
                if deg(c) != 3 {
                    return Err(err("node of degree > 3".into()));
                }
                let mut arms: Vec<Vec<usize>> = Vec::new();
                for w in g.neighbors(c).into_iter().filter(|w| in_comp(*w)) {
                    let mut arm = vec![w];
                    let mut prev = c;
                    let mut cur = w;
                    loop {
                        let next: Vec<usize> = g
                            .neighbors(cur)
                            .into_iter()
                            .filter(|&x| in_comp(x) && x != prev)
                            .collect();
                        match next.len() {
                            0 => break,
                            1 => {
                                prev = cur;
                                cur = next[0];
                                arm.push(cur);
                            }
                            _ => return Err(err("two branch nodes".into())),
                        }
                    }
                    arms.push(arm);
                }
                arms.sort_by_key(|a| a.len());
                let (l1, l2, l3) = (arms[0].len(), arms[1].len(), arms[2].len());
                match (l1, l2, l3) {
                    (1, 1, k) => {
                        // D_{k+3}: chain alpha_1..alpha_{n-2} = long arm reversed
                        // then the fork node, then the two short arms.
                        let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                        order.push(c);
                        order.push(arms[0][0]);
                        order.push(arms[1][0]);
                        debug_assert_eq!(order.len(), k + 3);
                        Ok(ClassifiedComponent {
                            simple_type: SimpleType::D(k + 3),
                            nodes_in_order: order,
                        })
                    }
                    (1, 2, k) if (2..=4).contains(&k) => {
                        let ty = match k {
                            2 => SimpleType::E6,
                            3 => SimpleType::E7,
                            _ => SimpleType::E8,
                        };
                        // Bourbaki E_n: nodes 1,3 on the 2-arm (outer first),
                        // node 2 the 1-arm, node 4 the fork, 5.. the long arm.
                        let mut order = vec![arms[1][1], arms[0][0], arms[1][0], c];
                        order.extend(arms[2].iter().copied());
                        Ok(ClassifiedComponent {
                            simple_type: ty,
                            nodes_in_order: order,
                        })
                    }
                    _ => Err(err(format!("fork with arm lengths ({l1},{l2},{l3})"))),
                }
            }
            _ => Err(err("more than one branch node".into())),
        }
    }
}

/// Nodes of a path component from one end to the other.
fn path_order(g: &DynkinGraph, comp: &[usize]) -> Option<Vec<usize>> {
    if comp.len() == 1 {
        return Some(comp.to_vec());
    }
    let in_comp = |v: usize| comp.contains(&v);
    let degree = |v: usize| g.neighbors(v).iter().filter(|w| in_comp(**w)).count();
    let ends: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    let start = *ends.iter().min().unwrap();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < comp.len() {
        let next: Vec<usize> = g
            .neighbors(cur)
            .into_iter()
            .filter(|&x| in_comp(x) && x != prev)
            .collect();
        if next.len() != 1 {
            return None;
        }
        prev = cur;
        cur = next[0];
        order.push(cur);
    }
    Some(order)
}

/// An affine (possibly twisted) Dynkin diagram with its marks.
///
/// Node 0 is the extra node for twist 1; for the twisted diagrams E6^(2) and
/// D4^(3) the nodes are numbered 0.. in the printed left-to-right order of
/// `docs/numbering.md`.
#[derive(Debug, Clone)]
pub struct AffineDiagram {
    pub base: SimpleType,
    pub twist: usize,
    /// marks a_0..a_n, aligned with node ids 0..=n
    pub marks: Vec<i64>,
    pub graph: DynkinGraph,
    /// relative squared length per node, aligned with node ids
    pub len2: Vec<i64>,
}

impl AffineDiagram {
    pub fn num_nodes(&self) -> usize {
        self.marks.len()
    }
}

/// The untwisted extended diagram: node 0 attached according to the negative
/// of the highest root, affine marks (1, a_1..a_r).
pub fn extended_diagram(rs: &RootSystem) -> AffineDiagram {
    let n = rs.rank();
    let theta = &rs.highest_root_coeffs;
    let theta_len2 = rs.root_len2(theta);
    let mut graph = dynkin_graph(rs.simple_type);
    // renumber: simple node i+1 stays i+1, affine node is 0
    graph.nodes.insert(0, 0);
    for i in 0..n {
        let t_i = rs.pairing(theta, i); // <theta, alpha_i^vee>
        if t_i != 0 {
            // <alpha_i, theta^vee> rescales by the length ratio
            debug_assert_eq!(t_i * rs.len2[i] % theta_len2, 0);
            let i_pair = t_i * rs.len2[i] / theta_len2;
            let mult = (t_i * i_pair) as usize;
            let short_side = if mult > 1 && mult < 4 {
                Some(if rs.len2[i] < theta_len2 { i + 1 } else { 0 })
            } else {
                None
            };
            graph.edges.push(Edge {
                a: 0,
                b: i + 1,
                mult,
                short_side,
            });
        }
    }
    let mut marks = vec![1i64];
    marks.extend(theta.iter().copied());
    let mut len2 = vec![theta_len2];
    len2.extend(rs.len2.iter().copied());
    AffineDiagram {
        base: rs.simple_type,
        twist: 1,
        marks,
        graph,
        len2,
    }
}

/// The twisted affine diagrams used here: E6^(2) (5 nodes, marks 1,2,3,2,1)
/// and D4^(3) (3 nodes, marks 1,2,1).
pub fn twisted_diagram(base: SimpleType, twist: usize) -> Result<AffineDiagram, RootSysError> {
    match (base, twist) {
        (SimpleType::E6, 2) => {
            // o - o - o <= o - o   (nodes 0..4; 0,1,2 short, 3,4 long)
            let graph = DynkinGraph {
                nodes: (0..5).collect(),
                edges: vec![
                    Edge { a: 0, b: 1, mult: 1, short_side: None },
                    Edge { a: 1, b: 2, mult: 1, short_side: None },
                    Edge { a: 2, b: 3, mult: 2, short_side: Some(2) },
                    Edge { a: 3, b: 4, mult: 1, short_side: None },
                ],
            };
            Ok(AffineDiagram {
                base,
                twist,
                marks: vec![1, 2, 3, 2, 1],
                graph,
                len2: vec![2, 2, 2, 4, 4],
            })
        }
        (SimpleType::D(4), 3) => {
            // o - o <<= o   (nodes 0,1 short, 2 long)
            let graph = DynkinGraph {
                nodes: (0..3).collect(),
                edges: vec![
                    Edge { a: 0, b: 1, mult: 1, short_side: None },
                    Edge { a: 1, b: 2, mult: 3, short_side: Some(1) },
                ],
            };
            Ok(AffineDiagram {
                base,
                twist,
                marks: vec![1, 2, 1],
                graph,
                len2: vec![2, 2, 6],
            })
        }
        _ => Err(RootSysError::UnsupportedTwist { base, twist }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_counts_up_to_rank_12() {
        let mut types = vec![
            SimpleType::E6,
            SimpleType::E7,
            SimpleType::E8,
            SimpleType::F4,
            SimpleType::G2,
        ];
        for n in 1..=12 {
            types.push(SimpleType::A(n));
            if n >= 2 {
                types.push(SimpleType::B(n));
                types.push(SimpleType::C(n));
            }
            if n >= 3 {
                types.push(SimpleType::D(n));
            }
        }
        for t in types {
            let rs = build_root_system(t).unwrap();
            assert_eq!(rs.root_count(), t.num_roots(), "bad |roots| for {t}");
            assert_eq!(rs.dim(), t.dim());
        }
    }

    #[test]
    fn a2_is_hexagonal() {
        let rs = build_root_system(SimpleType::A(2)).unwrap();
        assert_eq!(rs.root_count(), 6);
    }

    #[test]
    fn e8_has_240_roots_dim_248() {
        let rs = build_root_system(SimpleType::E8).unwrap();
        assert_eq!(rs.root_count(), 240);
        assert_eq!(rs.dim(), 248);
        assert_eq!(rs.highest_root_coeffs, vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn g2_highest_root() {
        let rs = build_root_system(SimpleType::G2).unwrap();
        assert_eq!(rs.root_count(), 12);
        assert_eq!(rs.highest_root_coeffs, vec![3, 2]);
    }

    #[test]
    fn negation_closure() {
        for t in [SimpleType::F4, SimpleType::E6, SimpleType::B(4), SimpleType::C(3)] {
            let rs = build_root_system(t).unwrap();
            for r in &rs.roots {
                let neg: Vec<i64> = r.iter().map(|c| -c).collect();
                assert!(rs.roots.contains(&neg));
            }
            assert_eq!(rs.root_count() % 2, 0);
        }
    }

    #[test]
    fn extended_marks_sum_to_coxeter_number() {
        let coxeter = [
            (SimpleType::A(5), 6),
            (SimpleType::B(4), 8),
            (SimpleType::C(3), 6),
            (SimpleType::D(5), 8),
            (SimpleType::E6, 12),
            (SimpleType::E7, 18),
            (SimpleType::E8, 30),
            (SimpleType::F4, 12),
            (SimpleType::G2, 6),
        ];
        for (t, h) in coxeter {
            let rs = build_root_system(t).unwrap();
            let aff = extended_diagram(&rs);
            assert_eq!(aff.marks.iter().sum::<i64>(), h, "bad Coxeter number for {t}");
            assert_eq!(aff.num_nodes(), t.rank() + 1);
        }
    }

    #[test]
    fn affine_a1_is_a_double_bond() {
        let rs = build_root_system(SimpleType::A(1)).unwrap();
        let aff = extended_diagram(&rs);
        assert_eq!(aff.marks, vec![1, 1]);
        assert_eq!(aff.graph.edges.len(), 1);
        assert_eq!(aff.graph.edges[0].mult, 4); // the A1~ bond, drawn as <=>
    }

    #[test]
    fn deleting_node_zero_recovers_base() {
        for t in [
            SimpleType::A(4),
            SimpleType::B(3),
            SimpleType::C(4),
            SimpleType::D(5),
            SimpleType::E7,
            SimpleType::F4,
            SimpleType::G2,
        ] {
            let rs = build_root_system(t).unwrap();
            let aff = extended_diagram(&rs);
            let keep: BTreeSet<usize> = (1..=t.rank()).collect();
            let sub = aff.graph.induced(&keep);
            let types = classify_subdiagram(&sub).unwrap();
            assert_eq!(types, vec![t], "extended-minus-node-0 for {t}");
        }
    }

    #[test]
    fn twisted_diagram_shapes() {
        let e62 = twisted_diagram(SimpleType::E6, 2).unwrap();
        assert_eq!(e62.num_nodes(), 5);
        assert_eq!(e62.marks.iter().sum::<i64>(), 9);
        let d43 = twisted_diagram(SimpleType::D(4), 3).unwrap();
        assert_eq!(d43.num_nodes(), 3);
        assert_eq!(d43.marks.iter().sum::<i64>(), 4);
        assert!(twisted_diagram(SimpleType::F4, 2).is_err());
    }

    #[test]
    fn classify_empty_and_disjoint_nodes() {
        let g = DynkinGraph::default();
        assert_eq!(classify_subdiagram(&g).unwrap(), vec![]);
        let g = DynkinGraph {
            nodes: vec![3, 7],
            edges: vec![],
        };
        assert_eq!(
            classify_subdiagram(&g).unwrap(),
            vec![SimpleType::A(1), SimpleType::A(1)]
        );
    }

    #[test]
    fn classify_d3_as_a3_and_bc() {
        // D3 drawn as a chain is just A3.
        let g = DynkinGraph {
            nodes: vec![1, 2, 3],
            edges: vec![
                Edge { a: 1, b: 2, mult: 1, short_side: None },
                Edge { a: 2, b: 3, mult: 1, short_side: None },
            ],
        };
        assert_eq!(classify_subdiagram(&g).unwrap(), vec![SimpleType::A(3)]);

        // long-long-short chain with the arrow onto the terminal: B3
        let b3 = DynkinGraph {
            nodes: vec![1, 2, 3],
            edges: vec![
                Edge { a: 1, b: 2, mult: 1, short_side: None },
                Edge { a: 2, b: 3, mult: 2, short_side: Some(3) },
            ],
        };
        assert_eq!(classify_subdiagram(&b3).unwrap(), vec![SimpleType::B(3)]);

        // short-short-long: C3
        let c3 = DynkinGraph {
            nodes: vec![1, 2, 3],
            edges: vec![
                Edge { a: 1, b: 2, mult: 1, short_side: None },
                Edge { a: 2, b: 3, mult: 2, short_side: Some(2) },
            ],
        };
        assert_eq!(classify_subdiagram(&c3).unwrap(), vec![SimpleType::C(3)]);

        // bare double bond is rejected
        let bare = DynkinGraph {
            nodes: vec![1, 2],
            edges: vec![Edge { a: 1, b: 2, mult: 2, short_side: None }],
        };
        assert!(classify_subdiagram(&bare).is_err());
    }

    #[test]
    fn zero_labeled_nodes_of_f4_affine_row() {
        // deleting the mark-2 node of the affine F4 diagram leaves A1 + C3
        let rs = build_root_system(SimpleType::F4).unwrap();
        let aff = extended_diagram(&rs);
        let keep: BTreeSet<usize> = [0usize, 2, 3, 4].into_iter().collect();
        let sub = aff.graph.induced(&keep);
        let types = classify_subdiagram(&sub).unwrap();
        assert_eq!(types, vec![SimpleType::A(1), SimpleType::C(3)]);
    }
}
