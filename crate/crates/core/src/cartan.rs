//! Cartan matrices: validation, Dynkin diagrams, classification into the
//! types A–G and fundamental groups.
//!
//! Node labels follow the usual tables: B_n has its short simple root at node
//! 1, C_n its long one; D_n attaches nodes 1 and 2 to node 3 followed by the
//! chain 3–4–…–n; E_n is the chain 1–3–4–5–6(–7–8) with node 2 attached to 4.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, NotCartanReason, Result};
use crate::exact_linalg::{smith_normal_form, IntMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn rank_ok(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

/// Type of one indecomposable component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
    /// `nodes[k]` is the node of the matrix carrying canonical label k+1.
    pub nodes: Vec<usize>,
}

impl TypeLabel {
    /// Label with the identity node map.
    pub fn standard(family: Family, rank: usize) -> Self {
        Self { family, rank, nodes: (0..rank).collect() }
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A validated Cartan matrix of finite type, nodes labelled 0..r.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: IntMat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinEdge {
    pub s: usize,
    pub t: usize,
    /// Number of lines, in {1, 2, 3}.
    pub bond: u32,
    /// The short end of a multiple bond.
    pub arrow_toward: Option<usize>,
    /// Order of w_s·w_t.
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub nodes: usize,
    pub edges: Vec<DynkinEdge>,
}

fn small(x: &BigInt) -> i64 {
    x.to_i64().unwrap_or(i64::MIN)
}

/// Checks (C1), finite type, and that every component is a known shape.
pub fn validate_cartan(m: &IntMat) -> Result<CartanMatrix> {
    let bad = |r: NotCartanReason| Err(Error::NotCartan(r));
    if !m.is_square() {
        return bad(NotCartanReason::Shape(format!("{}x{}", m.rows(), m.cols())));
    }
    let n = m.rows();
    for s in 0..n {
        if small(m.get(s, s)) != 2 {
            return bad(NotCartanReason::C1(format!("c_{{{s}{s}}} != 2")));
        }
        for t in 0..n {
            if s == t {
                continue;
            }
            if m.get(s, t).is_positive() {
                return bad(NotCartanReason::C1(format!("c_{{{s}{t}}} > 0")));
            }
            if m.get(s, t).is_zero() != m.get(t, s).is_zero() {
                return bad(NotCartanReason::C1(format!("c_{{{s}{t}}} = 0 but c_{{{t}{s}}} != 0")));
            }
            if m.get(s, t) * m.get(t, s) > BigInt::from(3) {
                return bad(NotCartanReason::NotFiniteType(format!("c_{{{s}{t}}}c_{{{t}{s}}} > 3")));
            }
        }
    }
    for k in 1..=n {
        let idx: Vec<usize> = (0..k).collect();
        if !m.select(&idx, &idx).det().is_positive() {
            return bad(NotCartanReason::NotFiniteType(format!("leading minor of size {k} is not positive")));
        }
    }
    let c = CartanMatrix { entries: m.clone() };
    for comp in c.components() {
        identify(&c, &comp).map_err(|e| Error::NotCartan(NotCartanReason::NotFiniteType(e)))?;
    }
    Ok(c)
}

impl CartanMatrix {
    pub fn entries(&self) -> &IntMat {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn c(&self, s: usize, t: usize) -> i64 {
        small(self.entries.get(s, t))
    }

    /// The empty Cartan matrix of a torus.
    pub fn empty() -> Self {
        Self { entries: IntMat::zeros(0, 0) }
    }

    /// Node sets of the connected components, each sorted, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let s = comp[i];
                for t in 0..n {
                    if !seen[t] && self.c(s, t) != 0 {
                        seen[t] = true;
                        comp.push(t);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// One label per component, ordered by (family, rank, smallest node).
    pub fn classify(&self) -> Vec<TypeLabel> {
        let mut labels: Vec<TypeLabel> =
            self.components().iter().map(|c| identify(self, c).expect("validated matrix")).collect();
        labels.sort_by_key(|l| (l.family, l.rank, *l.nodes.iter().min().unwrap()));
        labels
    }

    /// Order m_st of w_s·w_t.
    pub fn coxeter_m(&self, s: usize, t: usize) -> u32 {
        if s == t {
            return 1;
        }
        match self.c(s, t) * self.c(t, s) {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        }
    }

    pub fn dynkin_diagram(&self) -> DynkinDiagram {
        let n = self.size();
        let mut edges = Vec::new();
        for s in 0..n {
            for t in s + 1..n {
                if self.c(s, t) == 0 {
                    continue;
                }
                let (cst, cts) = (self.c(s, t).abs(), self.c(t, s).abs());
                let bond = cst.max(cts) as u32;
                // |c_st| > |c_ts| means α_s is the shorter root
                let arrow = match cst.cmp(&cts) {
                    std::cmp::Ordering::Greater => Some(s),
                    std::cmp::Ordering::Less => Some(t),
                    std::cmp::Ordering::Equal => None,
                };
                edges.push(DynkinEdge { s, t, bond, arrow_toward: arrow, m: self.coxeter_m(s, t) });
            }
        }
        DynkinDiagram { nodes: n, edges }
    }

    pub fn transpose(&self) -> CartanMatrix {
        CartanMatrix { entries: self.entries.transpose() }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &CartanMatrix) -> CartanMatrix {
        CartanMatrix { entries: IntMat::block_diag(&self.entries, &o.entries) }
    }

    /// The matrix with rows and columns reordered: new node k is old node `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> CartanMatrix {
        CartanMatrix { entries: self.entries.select(order, order) }
    }
}

fn neighbors(c: &CartanMatrix, comp: &[usize], s: usize) -> Vec<usize> {
    comp.iter().copied().filter(|&t| t != s && c.c(s, t) != 0).collect()
}

/// Walks a path starting at an end node.
fn walk(c: &CartanMatrix, comp: &[usize], start: usize, avoid: Option<usize>) -> Vec<usize> {
    let mut out = vec![start];
    let mut prev = avoid;
    let mut cur = start;
    loop {
        let next: Vec<usize> =
            neighbors(c, comp, cur).into_iter().filter(|&t| Some(t) != prev && !out.contains(&t)).collect();
        match next.as_slice() {
            [t] => {
                prev = Some(cur);
                cur = *t;
                out.push(cur);
            }
            _ => return out,
        }
    }
}

fn shorter(c: &CartanMatrix, s: usize, t: usize) -> bool {
    c.c(s, t).abs() > c.c(t, s).abs()
}

fn identify(c: &CartanMatrix, comp: &[usize]) -> std::result::Result<TypeLabel, String> {
    let k = comp.len();
    let mut edges = Vec::new();
    for (i, &s) in comp.iter().enumerate() {
        for &t in &comp[i + 1..] {
            if c.c(s, t) != 0 {
                edges.push((s, t, (c.c(s, t) * c.c(t, s)) as u32));
            }
        }
    }
    if edges.len() + 1 != k {
        return Err("diagram component is not a tree".into());
    }
    let deg = |s: usize| neighbors(c, comp, s).len();
    let ends: Vec<usize> = comp.iter().copied().filter(|&s| deg(s) <= 1).collect();
    let is_path = comp.iter().all(|&s| deg(s) <= 2);
    let multi: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 > 1).collect();
    let label = if k == 1 {
        TypeLabel { family: Family::A, rank: 1, nodes: comp.to_vec() }
    } else if multi.len() > 1 {
        return Err("more than one multiple bond".into());
    } else if let Some(&&(s, t, prod)) = multi.first() {
        if !is_path {
            return Err("branched diagram with a multiple bond".into());
        }
        let (long, short) = if shorter(c, s, t) { (t, s) } else { (s, t) };
        if prod == 3 {
            if k != 2 {
                return Err("triple bond outside G2".into());
            }
            TypeLabel { family: Family::G, rank: 2, nodes: vec![long, short] }
        } else if k == 2 {
            TypeLabel { family: Family::C, rank: 2, nodes: vec![long, short] }
        } else if deg(s) == 1 || deg(t) == 1 {
            let (end, other) = if deg(s) == 1 { (s, t) } else { (t, s) };
            let nodes = walk(c, comp, end, None);
            debug_assert_eq!(nodes[1], other);
            let family = if end == short { Family::B } else { Family::C };
            TypeLabel { family, rank: k, nodes }
        } else if k == 4 {
            // 1 – 2 ⇒ 3 – 4 with nodes 1, 2 long
            let before = neighbors(c, comp, long).into_iter().find(|&x| x != short).unwrap();
            let after = neighbors(c, comp, short).into_iter().find(|&x| x != long).unwrap();
            TypeLabel { family: Family::F, rank: 4, nodes: vec![before, long, short, after] }
        } else {
            return Err("double bond in an unsupported position".into());
        }
    } else if is_path {
        let start = *ends.iter().min().unwrap();
        TypeLabel { family: Family::A, rank: k, nodes: walk(c, comp, start, None) }
    } else {
        let branch: Vec<usize> = comp.iter().copied().filter(|&s| deg(s) >= 3).collect();
        if branch.len() != 1 || deg(branch[0]) != 3 {
            return Err("unsupported branching".into());
        }
        let b = branch[0];
        let mut arms: Vec<Vec<usize>> = neighbors(c, comp, b).into_iter().map(|t| walk(c, comp, t, Some(b))).collect();
        arms.sort_by_key(|a| (a.len(), *a.iter().min().unwrap()));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        match lens.as_slice() {
            [1, 1, _] => {
                let mut nodes = vec![arms[0][0], arms[1][0], b];
                nodes.extend(&arms[2]);
                TypeLabel { family: Family::D, rank: k, nodes }
            }
            [1, 2, l] if (2..=4).contains(l) => {
                let mut nodes = vec![arms[1][1], arms[0][0], arms[1][0], b];
                nodes.extend(&arms[2]);
                TypeLabel { family: Family::E, rank: k, nodes }
            }
            _ => return Err("branched diagram of unknown shape".into()),
        }
    };
    let std = standard_matrix(label.family, label.rank);
    for i in 0..k {
        for j in 0..k {
            if std.get(i, j) != c.entries.get(label.nodes[i], label.nodes[j]) {
                return Err(format!("component does not match {}", label.name()));
            }
        }
    }
    Ok(label)
}

fn standard_matrix(family: Family, n: usize) -> IntMat {
    let mut m = IntMat::identity(n).scale(&BigInt::from(2));
    let mut link = |s: usize, t: usize, cst: i64, cts: i64| {
        m.set(s, t, BigInt::from(cst));
        m.set(t, s, BigInt::from(cts));
    };
    match family {
        Family::A | Family::B | Family::C => {
            for s in 0..n.saturating_sub(1) {
                link(s, s + 1, -1, -1);
            }
            if family == Family::B {
                link(0, 1, -2, -1);
            } else if family == Family::C {
                link(0, 1, -1, -2);
            }
        }
        Family::D => {
            link(0, 2, -1, -1);
            link(1, 2, -1, -1);
            for s in 2..n - 1 {
                link(s, s + 1, -1, -1);
            }
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for s in 2..n - 1 {
                link(s, s + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -1, -3),
    }
    m
}

/// The standard Cartan matrix of the given type.
pub fn standard_cartan(family: Family, rank: usize) -> Result<CartanMatrix> {
    if !family.rank_ok(rank) {
        return Err(Error::BadRank { family: family.letter(), rank });
    }
    Ok(CartanMatrix { entries: standard_matrix(family, rank) })
}

/// Parses "A3", "E6", "G2" and the like.
pub fn parse_type(s: &str) -> Result<(Family, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let fam = chars.next().and_then(Family::from_letter).ok_or_else(|| Error::Parse(format!("bad type {s:?}")))?;
    let rank: usize = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
    Ok((fam, rank))
}

/// Block-diagonal Cartan matrix of a product of types, e.g. "A1xB3".
pub fn cartan_of_types(types: &[(Family, usize)]) -> Result<CartanMatrix> {
    let mut c = CartanMatrix::empty();
    for &(f, n) in types {
        c = c.direct_sum(&standard_cartan(f, n)?);
    }
    Ok(c)
}

/// Torsion invariants of Ω/ℤC.
pub fn fundamental_group(c: &CartanMatrix) -> Vec<BigInt> {
    smith_normal_form(&c.entries).torsion()
}

/// All bijections π (from the nodes of `c` to those of `c2`) with
/// c_st = c2_{π(s)π(t)}, in lexicographic order.
pub fn cartan_isomorphisms(c: &CartanMatrix, c2: &CartanMatrix) -> Vec<Vec<usize>> {
    let n = c.size();
    let mut out = Vec::new();
    if c2.size() != n {
        return out;
    }
    let mut assign = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        c: &CartanMatrix,
        c2: &CartanMatrix,
        assign: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let s = assign.len();
        if s == c.size() {
            out.push(assign.clone());
            return;
        }
        for cand in 0..c.size() {
            if used[cand] {
                continue;
            }
            let ok = (0..s).all(|t| c.c(s, t) == c2.c(cand, assign[t]) && c.c(t, s) == c2.c(assign[t], cand));
            if ok {
                used[cand] = true;
                assign.push(cand);
                rec(c, c2, assign, used, out);
                assign.pop();
                used[cand] = false;
            }
        }
    }
    rec(c, c2, &mut assign, &mut used, &mut out);
    out
}

/// Node permutations π with c_{π(s)π(t)} = c_st.
pub fn diagram_automorphisms(c: &CartanMatrix) -> Vec<Vec<usize>> {
    cartan_isomorphisms(c, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMat {
        IntMat::from_i64(rows)
    }

    #[test]
    fn g2_valid() {
        let c = validate_cartan(&m(&[vec![2, -1], vec![-3, 2]])).unwrap();
        let l = c.classify();
        assert_eq!(l.len(), 1);
        assert_eq!((l[0].family, l[0].rank), (Family::G, 2));
        assert_eq!(c.coxeter_m(0, 1), 6);
    }

    #[test]
    fn affine_rejected() {
        let e = validate_cartan(&m(&[vec![2, -2], vec![-2, 2]])).unwrap_err();
        assert!(matches!(e, Error::NotCartan(NotCartanReason::NotFiniteType(_))));
        let e = validate_cartan(&m(&[vec![2, -1], vec![0, 2]])).unwrap_err();
        assert!(matches!(e, Error::NotCartan(NotCartanReason::C1(_))));
        let affine_a2 = m(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert!(validate_cartan(&affine_a2).is_err());
    }

    #[test]
    fn a1_trivial() {
        let c = validate_cartan(&m(&[vec![2]])).unwrap();
        assert_eq!(c.classify()[0].name(), "A1");
    }

    #[test]
    fn normalizations() {
        let b2 = standard_cartan(Family::B, 2).unwrap();
        assert_eq!(b2.entries(), &standard_cartan(Family::C, 2).unwrap().entries().transpose());
        let l = b2.classify();
        assert_eq!(l[0].name(), "C2");
        assert_eq!(l[0].nodes, vec![1, 0]);
        assert_eq!(standard_cartan(Family::D, 3).unwrap().classify()[0].name(), "A3");
    }

    #[test]
    fn product_components() {
        let c = validate_cartan(&m(&[vec![2, 0], vec![0, 2]])).unwrap();
        let names: Vec<String> = c.classify().iter().map(|l| l.name()).collect();
        assert_eq!(names, vec!["A1", "A1"]);
    }

    #[test]
    fn b3_and_f4() {
        let b3 = m(&[vec![2, -2, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(validate_cartan(&b3).unwrap().classify()[0].name(), "B3");
        let f4 = m(&[vec![2, -1, 0, 0], vec![-1, 2, -1, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]]);
        let l = validate_cartan(&f4).unwrap().classify();
        assert_eq!(l[0].name(), "F4");
        assert_eq!(l[0].nodes, vec![0, 1, 2, 3]);
    }

    #[test]
    fn fundamental_groups() {
        let fg = |f, n| fundamental_group(&standard_cartan(f, n).unwrap());
        assert_eq!(fg(Family::E, 6), vec![BigInt::from(3)]);
        assert!(fg(Family::G, 2).is_empty());
        assert_eq!(fg(Family::D, 5), vec![BigInt::from(4)]);
    }

    #[test]
    fn automorphisms() {
        assert_eq!(diagram_automorphisms(&standard_cartan(Family::A, 3).unwrap()).len(), 2);
        assert_eq!(diagram_automorphisms(&standard_cartan(Family::D, 4).unwrap()).len(), 6);
        assert_eq!(diagram_automorphisms(&standard_cartan(Family::G, 2).unwrap()).len(), 1);
    }

    #[test]
    fn dynkin_arrows() {
        let d = standard_cartan(Family::B, 3).unwrap().dynkin_diagram();
        let e = d.edges.iter().find(|e| e.bond == 2).unwrap();
        assert_eq!(e.arrow_toward, Some(0));
    }
}
