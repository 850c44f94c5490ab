//! Divisor expressions over q*H and the 20 boundary labels, and the rank-12
//! Picard lattice they present.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
#[cfg(test)]
use num_traits::Signed;
use num_traits::{One, ToPrimitive};

use super::DivcalcError;
use crate::exactlat::{invariant_factors, rank_int, IntegerMatrix};
use crate::tilegroup::{act_on_label, all_labels, BoundaryLabel, GroupElement};

/// Number of symbols: q*H followed by the labels in `all_labels()` order.
pub const SYMBOLS: usize = 21;
pub const RANK: usize = 12;

/// Canonical basis after q*H: A₀, A₁, B₂, B₃, C₀₁, D₀₁, D₀₂, D₀₃, D₁₂, D₁₃, D₂₃.
pub const BASIS_LABELS: [&str; 11] = ["A0", "A1", "B2", "B3", "C01", "D01", "D02", "D03", "D12", "D13", "D23"];

/// Planes whose total transform is q*H, as (plane, boundary expression).
pub const PLANE_ROWS: [(&str, &str); 8] = [
    ("A2", "A2+B2+C01+D02+D12+D23"),
    ("A3", "A3+B3+C01+D03+D13+D23"),
    ("B0", "A0+B0+C01+D01+D02+D03"),
    ("B1", "A1+B1+C01+D01+D12+D13"),
    ("C02", "A1+B2+C02+D02+D12+D13"),
    ("C12", "A0+B2+C12+D02+D12+D03"),
    ("C13", "A0+B3+C13+D02+D03+D13"),
    ("C03", "A1+B3+C03+D03+D12+D13"),
];

/// Total transform of the quadric, linearly equivalent to 2q*H.
pub const QUADRIC_ROW: &str = "A0+A1+B2+B3+C01+C23+D01+D02+D03+D12+D13+D23";

/// The row used to expand q*H into boundary labels.
pub const SUBSTITUTION_ROW: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    PullbackH,
    Label(BoundaryLabel),
}

impl Symbol {
    pub fn index(&self) -> usize {
        match self {
            Symbol::PullbackH => 0,
            Symbol::Label(l) => 1 + l.index(),
        }
    }

    pub fn from_index(i: usize) -> Symbol {
        if i == 0 {
            Symbol::PullbackH
        } else {
            Symbol::Label(all_labels()[i - 1])
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::PullbackH => f.write_str("qH"),
            Symbol::Label(l) => l.fmt(f),
        }
    }
}

impl FromStr for Symbol {
    type Err = DivcalcError;

    fn from_str(s: &str) -> Result<Symbol, DivcalcError> {
        if s == "qH" {
            return Ok(Symbol::PullbackH);
        }
        s.parse::<BoundaryLabel>().map(Symbol::Label).map_err(|_| DivcalcError::Parse(s.to_string()))
    }
}

/// Integer combination of the 21 symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorExpression {
    coeffs: [i64; SYMBOLS],
}

impl Default for DivisorExpression {
    fn default() -> Self {
        DivisorExpression { coeffs: [0; SYMBOLS] }
    }
}

impl DivisorExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut e = Self::zero();
        e.coeffs[s.index()] = 1;
        e
    }

    pub fn label(l: BoundaryLabel) -> Self {
        Self::symbol(Symbol::Label(l))
    }

    pub fn pullback_h() -> Self {
        Self::symbol(Symbol::PullbackH)
    }

    pub fn from_coeffs(coeffs: [i64; SYMBOLS]) -> Self {
        DivisorExpression { coeffs }
    }

    pub fn coeffs(&self) -> &[i64; SYMBOLS] {
        &self.coeffs
    }

    pub fn coeff(&self, s: Symbol) -> i64 {
        self.coeffs[s.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Label coordinates, or None when q*H occurs.
    pub fn label_coords(&self) -> Option<[i64; 20]> {
        (self.coeffs[0] == 0).then(|| std::array::from_fn(|i| self.coeffs[i + 1]))
    }

    /// Replaces q*H by the boundary expression of a plane row.
    pub fn substitute_pullback(&self, row: usize) -> [i64; 20] {
        let plane = plane_expression(row);
        std::array::from_fn(|i| self.coeffs[i + 1] + self.coeffs[0] * plane.coeffs[i + 1])
    }

    /// Image under a group element; q*H is sent to the image of its substitution row.
    pub fn act(&self, g: &GroupElement) -> DivisorExpression {
        let labels = all_labels();
        let mut out = DivisorExpression::zero();
        let src = self.substitute_pullback(SUBSTITUTION_ROW);
        for (i, &c) in src.iter().enumerate() {
            out.coeffs[1 + act_on_label(g, labels[i]).index()] += c;
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        DivisorExpression { coeffs: self.coeffs.map(|c| c * k) }
    }
}

impl Add for DivisorExpression {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        DivisorExpression { coeffs: std::array::from_fn(|i| self.coeffs[i] + rhs.coeffs[i]) }
    }
}

impl Sub for DivisorExpression {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DivisorExpression {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Mul<DivisorExpression> for i64 {
    type Output = DivisorExpression;
    fn mul(self, rhs: DivisorExpression) -> DivisorExpression {
        rhs.scale(self)
    }
}

impl fmt::Display for DivisorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.coeffs.iter().enumerate().map(|(i, &c)| (Symbol::from_index(i).to_string(), c)))
    }
}

pub(crate) fn write_combination(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, i64)>) -> fmt::Result {
    let mut first = true;
    for (name, c) in terms.filter(|(_, c)| *c != 0) {
        let sign = if c < 0 {
            "-"
        } else if first {
            ""
        } else {
            "+"
        };
        let mag = c.abs();
        if mag == 1 {
            write!(f, "{sign}{name}")?;
        } else {
            write!(f, "{sign}{mag}{name}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Parses sums such as "4qH - A0 + 2C01"; whitespace is ignored.
impl FromStr for DivisorExpression {
    type Err = DivcalcError;

    fn from_str(s: &str) -> Result<Self, DivcalcError> {
        let bad = || DivcalcError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = DivisorExpression::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ if rest.len() == compact.len() => (1, rest),
                _ => return Err(bad()),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
            let k: i64 = if digits == 0 { 1 } else { term[..digits].parse().map_err(|_| bad())? };
            let sym: Symbol = term[digits..].trim_start_matches('*').parse().map_err(|_| bad())?;
            out.coeffs[sym.index()] += sign * k;
            rest = &body[end..];
        }
        Ok(out)
    }
}

/// Shorthand for trusted literals.
pub fn expr(s: &str) -> DivisorExpression {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

pub fn plane_expression(row: usize) -> DivisorExpression {
    expr(PLANE_ROWS[row].1)
}

/// The 9 relations in Z²¹: q*H − row for each plane row, then 2q*H − quadric.
pub fn relation_vectors() -> Vec<DivisorExpression> {
    let mut out: Vec<DivisorExpression> =
        PLANE_ROWS.iter().map(|(_, r)| DivisorExpression::pullback_h() - expr(r)).collect();
    out.push(2 * DivisorExpression::pullback_h() - expr(QUADRIC_ROW));
    out
}

/// The 8 relations among boundary labels alone: differences of plane rows
/// from the substitution row, and twice that row minus the quadric.
pub fn label_relations() -> Vec<[i64; 20]> {
    relation_vectors()
        .iter()
        .filter(|r| r.coeff(Symbol::PullbackH) != 0)
        .filter_map(|r| {
            let v = r.substitute_pullback(SUBSTITUTION_ROW);
            v.iter().any(|&c| c != 0).then_some(v)
        })
        .collect()
}

/// Element of N¹ in the canonical basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass(pub [i64; RANK]);

impl DivisorClass {
    pub fn zero() -> Self {
        DivisorClass([0; RANK])
    }

    pub fn basis(k: usize) -> Self {
        let mut v = [0; RANK];
        v[k] = 1;
        DivisorClass(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.0.iter().map(|&c| BigInt::from(c)).collect()
    }

    pub fn from_bigint(v: &[BigInt]) -> Result<Self, DivcalcError> {
        if v.len() != RANK {
            return Err(DivcalcError::Length { expected: RANK, found: v.len() });
        }
        let mut out = [0; RANK];
        for (o, x) in out.iter_mut().zip(v) {
            *o = x.to_i64().ok_or(DivcalcError::Overflow)?;
        }
        Ok(DivisorClass(out))
    }

    /// The expression Σ c_k · (basis symbol k).
    pub fn to_expression(&self) -> DivisorExpression {
        let mut out = DivisorExpression::zero();
        for (k, &c) in self.0.iter().enumerate() {
            out.coeffs[basis_symbol(k).index()] += c;
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        DivisorClass(self.0.map(|c| c * k))
    }
}

impl Add for DivisorClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        DivisorClass(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for DivisorClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        DivisorClass(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for DivisorClass {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.0.iter().enumerate().map(|(k, &c)| (basis_symbol(k).to_string(), c)))
    }
}

pub fn basis_symbol(k: usize) -> Symbol {
    if k == 0 {
        Symbol::PullbackH
    } else {
        BASIS_LABELS[k - 1].parse().expect("basis label")
    }
}

/// Z²¹ modulo the relation lattice, presented in the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardLattice {
    pub relations: Vec<DivisorExpression>,
    pub relation_rank: usize,
    pub invariant_factors: Vec<BigInt>,
    /// Image of each of the 21 symbols.
    symbol_classes: Vec<DivisorClass>,
}

impl PicardLattice {
    pub fn rank(&self) -> usize {
        SYMBOLS - self.relation_rank
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.iter().all(One::is_one)
    }

    pub fn class_of(&self, e: &DivisorExpression) -> DivisorClass {
        let mut out = [0; RANK];
        for (i, &c) in e.coeffs.iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(self.symbol_classes[i].0) {
                    *o += c * x;
                }
            }
        }
        DivisorClass(out)
    }

    pub fn label_class(&self, l: BoundaryLabel) -> DivisorClass {
        self.symbol_classes[1 + l.index()]
    }

    /// Matrix of the induced action on N¹; column k is the image of basis class k.
    pub fn action_matrix(&self, g: &GroupElement) -> [[i64; RANK]; RANK] {
        let cols: Vec<DivisorClass> =
            (0..RANK).map(|k| self.class_of(&DivisorClass::basis(k).to_expression().act(g))).collect();
        std::array::from_fn(|i| std::array::from_fn(|j| cols[j].0[i]))
    }

    pub fn act(&self, g: &GroupElement, d: &DivisorClass) -> DivisorClass {
        self.class_of(&d.to_expression().act(g))
    }

    /// Whether g maps every label relation into the relation lattice.
    pub fn action_preserves_relations(&self, g: &GroupElement) -> bool {
        label_relations().iter().all(|r| {
            let mut e = [0; SYMBOLS];
            e[1..].copy_from_slice(r);
            self.class_of(&DivisorExpression::from_coeffs(e).act(g)).is_zero()
        })
    }
}

/// Builds the lattice: each relation contains exactly one non-basis symbol with
/// coefficient ±1, so the non-basis symbols are eliminated by substitution.
pub fn picard_lattice() -> Result<PicardLattice, DivcalcError> {
    let relations = relation_vectors();
    let rows: Vec<Vec<BigInt>> =
        relations.iter().map(|r| r.coeffs.iter().map(|&c| BigInt::from(c)).collect()).collect();
    let relation_rank = rank_int(&rows);
    let invariant_factors = invariant_factors(&IntegerMatrix::from_rows(SYMBOLS, &rows)?);
    if relation_rank != SYMBOLS - RANK {
        return Err(DivcalcError::PicardRank(SYMBOLS - relation_rank));
    }
    if !invariant_factors.iter().all(One::is_one) {
        return Err(DivcalcError::Torsion);
    }
    let basis_index: Vec<usize> = (0..RANK).map(|k| basis_symbol(k).index()).collect();
    let mut symbol_classes = vec![None; SYMBOLS];
    for (k, &i) in basis_index.iter().enumerate() {
        symbol_classes[i] = Some(DivisorClass::basis(k));
    }
    let mut pending: Vec<&DivisorExpression> = relations.iter().collect();
    while !pending.is_empty() {
        let before = pending.len();
        pending.retain(|r| {
            let unknown: Vec<usize> =
                (0..SYMBOLS).filter(|&i| r.coeffs[i] != 0 && symbol_classes[i].is_none()).collect();
            let &[u] = unknown.as_slice() else { return true };
            let cu = r.coeffs[u];
            if cu.abs() != 1 {
                return true;
            }
            // cu·u + Σ c_i·s_i = 0
            let mut v = [0; RANK];
            for (i, &c) in r.coeffs.iter().enumerate() {
                if i != u && c != 0 {
                    let s = symbol_classes[i].expect("known symbol");
                    for (o, x) in v.iter_mut().zip(s.0) {
                        *o -= cu * c * x;
                    }
                }
            }
            symbol_classes[u] = Some(DivisorClass(v));
            false
        });
        if pending.len() == before {
            return Err(DivcalcError::Elimination);
        }
    }
    let symbol_classes =
        symbol_classes.into_iter().map(|c| c.ok_or(DivcalcError::Elimination)).collect::<Result<_, _>>()?;
    Ok(PicardLattice { relations, relation_rank, invariant_factors, symbol_classes })
}

/// The lattice, built once.
pub fn lattice() -> &'static PicardLattice {
    static CELL: OnceLock<PicardLattice> = OnceLock::new();
    CELL.get_or_init(|| picard_lattice().expect("Picard lattice presentation"))
}

pub fn class_of(e: &DivisorExpression) -> DivisorClass {
    lattice().class_of(e)
}

/// Class of a literal expression.
pub fn class(s: &str) -> DivisorClass {
    class_of(&expr(s))
}
