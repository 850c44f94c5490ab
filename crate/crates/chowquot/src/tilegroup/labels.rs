//! The 20 boundary labels A_i, B_i, C_ij, D_ij and the group action on them.

use std::fmt;
use std::str::FromStr;

use super::group::{GroupElement, W0};
use super::TileError;

/// C and D indices are stored with i < j; D_ij = D_ji.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryLabel {
    A(u8),
    B(u8),
    C(u8, u8),
    D(u8, u8),
}

fn pair(i: usize, j: usize) -> (u8, u8) {
    (i.min(j) as u8, i.max(j) as u8)
}

impl BoundaryLabel {
    pub fn c(i: u8, j: u8) -> Self {
        let (a, b) = pair(i as usize, j as usize);
        BoundaryLabel::C(a, b)
    }

    pub fn d(i: u8, j: u8) -> Self {
        let (a, b) = pair(i as usize, j as usize);
        BoundaryLabel::D(a, b)
    }

    pub fn kind(&self) -> char {
        match self {
            BoundaryLabel::A(_) => 'A',
            BoundaryLabel::B(_) => 'B',
            BoundaryLabel::C(..) => 'C',
            BoundaryLabel::D(..) => 'D',
        }
    }

    /// Position in `all_labels()`.
    pub fn index(&self) -> usize {
        // offsets of (i, j), i < j, in lexicographic order
        const PAIR: [[usize; 4]; 4] = [[0, 0, 1, 2], [0, 0, 3, 4], [0, 0, 0, 5], [0; 4]];
        match *self {
            BoundaryLabel::A(i) => i as usize,
            BoundaryLabel::B(i) => 4 + i as usize,
            BoundaryLabel::C(i, j) => 8 + PAIR[i as usize][j as usize],
            BoundaryLabel::D(i, j) => 14 + PAIR[i as usize][j as usize],
        }
    }
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryLabel::A(i) => write!(f, "A{i}"),
            BoundaryLabel::B(i) => write!(f, "B{i}"),
            BoundaryLabel::C(i, j) => write!(f, "C{i}{j}"),
            BoundaryLabel::D(i, j) => write!(f, "D{i}{j}"),
        }
    }
}

impl FromStr for BoundaryLabel {
    type Err = TileError;

    fn from_str(s: &str) -> Result<Self, TileError> {
        let bad = || TileError::BadLabel(s.to_string());
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let idx: Vec<u8> = chars
            .map(|c| c.to_digit(10).filter(|&d| d < 4).map(|d| d as u8).ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        match (kind, idx.as_slice()) {
            ('A', &[i]) => Ok(BoundaryLabel::A(i)),
            ('B', &[i]) => Ok(BoundaryLabel::B(i)),
            ('C', &[i, j]) if i != j => Ok(BoundaryLabel::c(i, j)),
            ('D', &[i, j]) if i != j => Ok(BoundaryLabel::d(i, j)),
            _ => Err(bad()),
        }
    }
}

/// A₀..A₃, B₀..B₃, C_ij, D_ij (i<j lexicographic).
pub fn all_labels() -> Vec<BoundaryLabel> {
    let mut out: Vec<BoundaryLabel> = (0..4).map(BoundaryLabel::A).collect();
    out.extend((0..4).map(BoundaryLabel::B));
    for i in 0..4 {
        for j in i + 1..4 {
            out.push(BoundaryLabel::C(i, j));
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            out.push(BoundaryLabel::D(i, j));
        }
    }
    out
}

fn act_perm(p: &[usize; 4], d: BoundaryLabel) -> BoundaryLabel {
    let m = |i: u8| p[i as usize] as u8;
    match d {
        BoundaryLabel::A(i) => BoundaryLabel::A(m(i)),
        BoundaryLabel::B(i) => BoundaryLabel::B(m(i)),
        BoundaryLabel::C(i, j) => BoundaryLabel::c(m(i), m(j)),
        BoundaryLabel::D(i, j) => BoundaryLabel::d(m(i), m(j)),
    }
}

fn act_tau(d: BoundaryLabel) -> BoundaryLabel {
    let w = |i: u8| W0[i as usize] as u8;
    match d {
        BoundaryLabel::A(i) => BoundaryLabel::B(w(i)),
        BoundaryLabel::B(i) => BoundaryLabel::A(w(i)),
        BoundaryLabel::D(i, j) => BoundaryLabel::d(w(j), w(i)),
        BoundaryLabel::C(1, 2) => BoundaryLabel::C(0, 3),
        BoundaryLabel::C(0, 3) => BoundaryLabel::C(1, 2),
        c => c,
    }
}

pub fn act_on_label(g: &GroupElement, d: BoundaryLabel) -> BoundaryLabel {
    let d = if g.flip { act_tau(d) } else { d };
    act_perm(&g.perm, d)
}

/// Image of every label, as indices into `all_labels()`.
pub fn label_permutation(g: &GroupElement) -> Vec<usize> {
    all_labels().into_iter().map(|l| act_on_label(g, l).index()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilegroup::group::{group_elements, Generator};

    #[test]
    fn twenty_labels_parse_back() {
        let ls = all_labels();
        assert_eq!(ls.len(), 20);
        for (k, l) in ls.iter().enumerate() {
            assert_eq!(l.index(), k);
            assert_eq!(l.to_string().parse::<BoundaryLabel>().unwrap(), *l);
        }
        assert_eq!("D21".parse::<BoundaryLabel>().unwrap(), BoundaryLabel::D(1, 2));
        assert!("C11".parse::<BoundaryLabel>().is_err());
        assert!("A4".parse::<BoundaryLabel>().is_err());
    }

    #[test]
    fn documented_images() {
        let r1 = Generator::R1.element();
        let tau = Generator::Tau.element();
        assert_eq!(act_on_label(&r1, BoundaryLabel::A(0)), BoundaryLabel::A(1));
        assert_eq!(act_on_label(&tau, BoundaryLabel::A(0)), BoundaryLabel::B(3));
        assert_eq!(act_on_label(&tau, BoundaryLabel::C(0, 2)), BoundaryLabel::C(0, 2));
        assert_eq!(act_on_label(&tau, BoundaryLabel::D(0, 1)), BoundaryLabel::D(2, 3));
    }

    #[test]
    fn action_is_faithful_homomorphism() {
        let g = group_elements();
        for a in &g {
            for b in &g {
                for l in all_labels() {
                    assert_eq!(act_on_label(&a.compose(b), l), act_on_label(a, act_on_label(b, l)));
                }
            }
        }
        let fixers = g.iter().filter(|x| all_labels().into_iter().all(|l| act_on_label(x, l) == l)).count();
        assert_eq!(fixers, 1);
    }

    #[test]
    fn action_preserves_kind_up_to_swapping_a_and_b() {
        for g in group_elements() {
            for l in all_labels() {
                let k = act_on_label(&g, l).kind();
                match l.kind() {
                    'A' | 'B' => assert!(k == 'A' || k == 'B'),
                    c => assert_eq!(k, c),
                }
            }
        }
    }
}
