//! The symmetric trilinear intersection form, first on boundary labels and
//! then on N¹ as a 12×12×12 tensor.

use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;

use super::petersen::{solve_petersen, PetersenData};
use super::picard::{
    basis_symbol, label_relations, lattice, DivisorClass, DivisorExpression, PLANE_ROWS, RANK, SUBSTITUTION_ROW,
};
use super::rules::{on_surface, Adjacency, CUBES};
use super::DivcalcError;
use crate::tilegroup::{act_on_label, all_labels, group_elements, BoundaryLabel};

const N: usize = 20;

fn kind_index(l: BoundaryLabel) -> usize {
    match l {
        BoundaryLabel::A(_) => 0,
        BoundaryLabel::B(_) => 1,
        BoundaryLabel::C(..) => 2,
        BoundaryLabel::D(..) => 3,
    }
}

/// E·F·G for every ordered triple of boundary labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelTable {
    values: Vec<i64>,
}

impl LabelTable {
    /// Evaluates each triple: a cube by kind, a repeated label on the surface of
    /// the other one, distinct labels on all three surfaces, which must agree.
    pub fn build(adj: &Adjacency) -> Result<LabelTable, DivcalcError> {
        let labels = all_labels();
        let mut values = vec![0; N * N * N];
        for a in 0..N {
            for b in 0..N {
                for c in 0..N {
                    let (e, f, g) = (labels[a], labels[b], labels[c]);
                    let v = if a == b && b == c {
                        CUBES[kind_index(e)]
                    } else if a == b {
                        on_surface(g, e, e, adj)
                    } else if a == c {
                        on_surface(f, e, e, adj)
                    } else if b == c {
                        on_surface(e, f, f, adj)
                    } else {
                        let v = on_surface(e, f, g, adj);
                        if on_surface(f, e, g, adj) != v || on_surface(g, e, f, adj) != v {
                            return Err(DivcalcError::Inconsistent(e, f, g));
                        }
                        v
                    };
                    values[(a * N + b) * N + c] = v;
                }
            }
        }
        Ok(LabelTable { values })
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> i64 {
        self.values[(a * N + b) * N + c]
    }

    pub fn value(&self, e: BoundaryLabel, f: BoundaryLabel, g: BoundaryLabel) -> i64 {
        self.get(e.index(), f.index(), g.index())
    }

    /// Trilinear extension to label coordinate vectors.
    pub fn triple(&self, u: &[i64; N], v: &[i64; N], w: &[i64; N]) -> i64 {
        let mut s = 0;
        for a in (0..N).filter(|&a| u[a] != 0) {
            for b in (0..N).filter(|&b| v[b] != 0) {
                for c in (0..N).filter(|&c| w[c] != 0) {
                    s += u[a] * v[b] * w[c] * self.get(a, b, c);
                }
            }
        }
        s
    }

    pub fn is_symmetric(&self) -> bool {
        (0..N).all(|a| {
            (0..N).all(|b| {
                (0..N).all(|c| {
                    let v = self.get(a, b, c);
                    [self.get(a, c, b), self.get(b, a, c), self.get(b, c, a), self.get(c, a, b), self.get(c, b, a)]
                        .iter()
                        .all(|&x| x == v)
                })
            })
        })
    }

    /// Triples (g, E, F, G) breaking invariance, over all 48 elements.
    pub fn equivariance_failures(&self) -> usize {
        let labels = all_labels();
        group_elements()
            .iter()
            .map(|g| {
                let img: Vec<usize> = labels.iter().map(|&l| act_on_label(g, l).index()).collect();
                (0..N)
                    .flat_map(|a| (0..N).flat_map(move |b| (0..N).map(move |c| (a, b, c))))
                    .filter(|&(a, b, c)| self.get(img[a], img[b], img[c]) != self.get(a, b, c))
                    .count()
            })
            .sum()
    }

    /// Pairs (r, E, F) with r·E·F ≠ 0 for a label relation r.
    pub fn descent_failures(&self) -> usize {
        let rels = label_relations();
        let mut bad = 0;
        for r in &rels {
            for b in 0..N {
                for c in 0..N {
                    if (0..N).map(|a| r[a] * self.get(a, b, c)).sum::<i64>() != 0 {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }
}

/// A curve class as its pairings with the canonical basis of N¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass(pub [i64; RANK]);

impl CurveClass {
    pub fn zero() -> Self {
        CurveClass([0; RANK])
    }

    pub fn pair(&self, d: &DivisorClass) -> i64 {
        self.0.iter().zip(d.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        CurveClass(self.0.map(|c| c * k))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.0.iter().map(|&c| BigInt::from(c)).collect()
    }
}

impl Add for CurveClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        CurveClass(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for CurveClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        CurveClass(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for CurveClass {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

/// Label coordinates of each canonical basis class, expanding q*H by a plane row.
pub fn basis_label_vectors(row: usize) -> [[i64; N]; RANK] {
    std::array::from_fn(|k| DivisorExpression::symbol(basis_symbol(k)).substitute_pullback(row))
}

/// Precomputed intersection form on N¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrilinearForm {
    pub labels: LabelTable,
    tensor: Vec<i64>,
}

impl TrilinearForm {
    pub fn new(labels: LabelTable, row: usize) -> Self {
        let basis = basis_label_vectors(row);
        let mut tensor = vec![0; RANK * RANK * RANK];
        for i in 0..RANK {
            for j in 0..RANK {
                for k in 0..RANK {
                    tensor[(i * RANK + j) * RANK + k] = labels.triple(&basis[i], &basis[j], &basis[k]);
                }
            }
        }
        TrilinearForm { labels, tensor }
    }

    pub fn tensor(&self) -> &[i64] {
        &self.tensor
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> i64 {
        self.tensor[(i * RANK + j) * RANK + k]
    }

    pub fn triple(&self, a: &DivisorClass, b: &DivisorClass, c: &DivisorClass) -> i64 {
        let mut s = 0;
        for i in (0..RANK).filter(|&i| a.0[i] != 0) {
            for j in (0..RANK).filter(|&j| b.0[j] != 0) {
                for k in (0..RANK).filter(|&k| c.0[k] != 0) {
                    s += a.0[i] * b.0[j] * c.0[k] * self.entry(i, j, k);
                }
            }
        }
        s
    }

    pub fn cube(&self, a: &DivisorClass) -> i64 {
        self.triple(a, a, a)
    }

    /// The functional g ↦ a·b·g.
    pub fn curve_of(&self, a: &DivisorClass, b: &DivisorClass) -> CurveClass {
        CurveClass(std::array::from_fn(|k| self.triple(a, b, &DivisorClass::basis(k))))
    }

    pub fn curve_class(&self, e: BoundaryLabel, f: BoundaryLabel) -> CurveClass {
        let p = lattice();
        self.curve_of(&p.label_class(e), &p.label_class(f))
    }

    /// Whether a·a·g = 0 for every basis class g.
    pub fn square_is_numerically_trivial(&self, a: &DivisorClass) -> bool {
        self.curve_of(a, a).is_zero()
    }
}

/// Solved adjacency and the form built from it, computed once.
pub fn intersection_data() -> &'static (PetersenData, TrilinearForm) {
    static CELL: OnceLock<(PetersenData, TrilinearForm)> = OnceLock::new();
    CELL.get_or_init(|| {
        let pet = solve_petersen().expect("Petersen adjacency");
        let labels = LabelTable::build(&pet.adjacency).expect("consistent label table");
        let form = TrilinearForm::new(labels, SUBSTITUTION_ROW);
        (pet, form)
    })
}

pub fn form() -> &'static TrilinearForm {
    &intersection_data().1
}

pub fn triple(a: &DivisorClass, b: &DivisorClass, c: &DivisorClass) -> i64 {
    form().triple(a, b, c)
}

pub fn curve_class(e: BoundaryLabel, f: BoundaryLabel) -> CurveClass {
    form().curve_class(e, f)
}

/// Parses a sum of products such as "A0*B0 + C01*C23 - C03*C12".
pub fn curve_expression(s: &str) -> Result<CurveClass, DivcalcError> {
    let bad = || DivcalcError::Parse(s.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = CurveClass::zero();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ if first => (1, rest),
            _ => return Err(bad()),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (e, f) = body[..end].split_once('*').ok_or_else(bad)?;
        let e: BoundaryLabel = e.parse().map_err(|_| bad())?;
        let f: BoundaryLabel = f.parse().map_err(|_| bad())?;
        out = out + curve_class(e, f).scale(sign);
        rest = &body[end..];
        first = false;
    }
    if first {
        return Err(bad());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub symmetric: bool,
    pub equivariance_failures: usize,
    pub descent_failures: usize,
    /// The 12³ tensor is the same whichever plane row stands in for q*H.
    pub row_independent: bool,
    /// Named entries as (description, expected, computed).
    pub entries: Vec<(String, i64, i64)>,
}

impl FormReport {
    pub fn passed(&self) -> bool {
        self.symmetric
            && self.equivariance_failures == 0
            && self.descent_failures == 0
            && self.row_independent
            && self.entries.iter().all(|(_, e, c)| e == c)
    }
}

/// Label triples with known intersection numbers.
pub const KNOWN_ENTRIES: [(&str, &str, &str, i64); 12] = [
    ("A1", "A1", "A1", 0),
    ("B2", "B2", "B2", 0),
    ("C01", "C01", "C01", 1),
    ("C23", "C23", "C23", 1),
    ("D01", "D01", "D01", 2),
    ("D12", "D12", "D12", 2),
    ("A0", "B2", "C23", 1),
    ("A0", "C23", "C23", -1),
    ("A0", "B0", "D01", 1),
    ("C01", "C01", "C23", -1),
    ("C01", "C23", "D01", 1),
    ("A0", "D01", "D01", -1),
];

pub fn verify_form() -> FormReport {
    let f = form();
    let t = &f.labels;
    let l = |s: &str| s.parse::<BoundaryLabel>().expect("label literal");
    let entries =
        KNOWN_ENTRIES.iter().map(|&(a, b, c, v)| (format!("{a}·{b}·{c}"), v, t.value(l(a), l(b), l(c)))).collect();
    let row_independent = (0..PLANE_ROWS.len()).all(|r| TrilinearForm::new(t.clone(), r).tensor == f.tensor);
    FormReport {
        symmetric: t.is_symmetric(),
        equivariance_failures: t.equivariance_failures(),
        descent_failures: t.descent_failures(),
        row_independent,
        entries,
    }
}

/// Value of the form on a triple of expressions, expanding q*H by `row`.
pub fn expression_triple(a: &DivisorExpression, b: &DivisorExpression, c: &DivisorExpression, row: usize) -> i64 {
    form().labels.triple(&a.substitute_pullback(row), &b.substitute_pullback(row), &c.substitute_pullback(row))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divcalc::picard::{class, expr, relation_vectors};

    #[test]
    fn form_passes_all_checks() {
        let r = verify_form();
        assert!(r.symmetric);
        assert_eq!(r.equivariance_failures, 0);
        assert_eq!(r.descent_failures, 0);
        assert!(r.row_independent);
        for (name, e, c) in &r.entries {
            assert_eq!(e, c, "{name}");
        }
    }

    #[test]
    fn cube_of_a1_through_its_rewriting() {
        // A₁ ≡ A₃ + C₁₂ − C₂₃ − D₀₁ + D₀₃, so A₁³ is a sum of products each with A₁²
        assert_eq!(class("A1"), class("A3+C12-C23-D01+D03"));
        let a1 = class("A1");
        let alt = class("A3+C12-C23-D01+D03");
        assert_eq!(triple(&alt, &a1, &a1), 0);
        assert_eq!(triple(&a1, &a1, &a1), 0);
    }

    #[test]
    fn a0_c23_c23_via_quadric_expansion() {
        // independent route: expand one C₂₃ by the quadric relation and the other
        // label-level values, instead of reading the entry directly
        let c23 = expr("2qH-A0-A1-B2-B3-C01-D01-D02-D03-D12-D13-D23");
        let v = expression_triple(&expr("A0"), &expr("C23"), &c23, SUBSTITUTION_ROW);
        assert_eq!(v, -1);
    }

    #[test]
    fn relations_vanish_at_class_level() {
        for r in relation_vectors() {
            for row in 0..PLANE_ROWS.len() {
                for b in all_labels() {
                    let v = expression_triple(&r, &DivisorExpression::label(b), &expr("A0+C12"), row);
                    assert_eq!(v, 0);
                }
            }
        }
    }

    #[test]
    fn documented_curve_classes() {
        let p = lattice();
        let c = curve_class(BoundaryLabel::A(0), BoundaryLabel::D(0, 1));
        assert_eq!(c.pair(&p.label_class(BoundaryLabel::D(0, 1))), -1);
        assert_eq!(c, curve_class(BoundaryLabel::A(1), BoundaryLabel::D(0, 1)));
        assert_eq!(curve_expression("A0*D01").unwrap(), c);
        assert_eq!(curve_expression("A0*D01 - A1*D01").unwrap(), CurveClass::zero());
        assert!(curve_expression("A0*").is_err());
        assert!(curve_expression("").is_err());
    }

    #[test]
    fn curve_classes_pair_like_the_label_table() {
        let p = lattice();
        let t = &form().labels;
        for e in all_labels() {
            for f in all_labels() {
                let c = curve_class(e, f);
                for g in all_labels() {
                    assert_eq!(c.pair(&p.label_class(g)), t.value(e, f, g));
                }
            }
        }
    }
}
