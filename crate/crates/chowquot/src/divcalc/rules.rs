//! Label-level intersection rules on three base surfaces, transported to every
//! boundary divisor by the group action.

use std::sync::OnceLock;

use crate::tilegroup::{act_on_label, all_labels, group_elements, BoundaryLabel, GroupElement};

/// Nonzero products E·F on C₂₃ (E ≠ F).
pub const C_RULE_PAIRS: [(&str, &str); 10] = [
    ("A0", "B2"),
    ("A0", "B3"),
    ("A1", "B2"),
    ("A1", "B3"),
    ("A0", "D01"),
    ("A1", "D01"),
    ("B2", "D23"),
    ("B3", "D23"),
    ("D01", "C01"),
    ("D23", "C01"),
];

/// Curves E with E²·C₂₃ = −1.
pub const C_RULE_SQUARES: [&str; 3] = ["C01", "D01", "D23"];

/// Nonzero products E·F on D₀₁ (E ≠ F); no squares are nonzero there.
pub const D_RULE_PAIRS: [(&str, &str); 9] = [
    ("A0", "B0"),
    ("A0", "B1"),
    ("A1", "B0"),
    ("A1", "B1"),
    ("A0", "C23"),
    ("A1", "C23"),
    ("B0", "C01"),
    ("B1", "C01"),
    ("C01", "C23"),
];

/// Divisors meeting A₀ in a (−1)-curve.
pub const A_NODES: [&str; 10] = ["B0", "B1", "B2", "B3", "C12", "C13", "C23", "D01", "D02", "D03"];

/// Top self-intersections by kind A, B, C, D.
pub const CUBES: [i64; 4] = [0, 0, 1, 2];

pub fn label(s: &str) -> BoundaryLabel {
    s.parse().expect("label literal")
}

/// The surface whose rule governs divisors of the given kind.
pub fn base_surface(l: BoundaryLabel) -> BoundaryLabel {
    match l {
        BoundaryLabel::A(_) | BoundaryLabel::B(_) => BoundaryLabel::A(0),
        BoundaryLabel::C(..) => BoundaryLabel::C(2, 3),
        BoundaryLabel::D(..) => BoundaryLabel::D(0, 1),
    }
}

/// For each label S, the smallest group element carrying S to its base surface.
pub fn transporters() -> &'static [GroupElement; 20] {
    static CELL: OnceLock<[GroupElement; 20]> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = group_elements();
        let labels = all_labels();
        std::array::from_fn(|i| {
            *g.iter().find(|x| act_on_label(x, labels[i]) == base_surface(labels[i])).expect("transitive on kinds")
        })
    })
}

pub fn stabilizer(l: BoundaryLabel) -> Vec<GroupElement> {
    group_elements().into_iter().filter(|g| act_on_label(g, l) == l).collect()
}

/// Pairs {i<j} of node positions (0..10), in lexicographic order.
pub fn node_pairs() -> Vec<(usize, usize)> {
    (0..10).flat_map(|i| (i + 1..10).map(move |j| (i, j))).collect()
}

/// Symmetric 10×10 adjacency of the (−1)-curves on A₀, in `A_NODES` order.
pub type Adjacency = [[bool; 10]; 10];

/// E·F on C₂₃ and on D₀₁ for all label pairs, and each label's node position on A₀.
struct RuleTables {
    c: [[i64; 20]; 20],
    d: [[i64; 20]; 20],
    node: [Option<usize>; 20],
}

fn tables() -> &'static RuleTables {
    static CELL: OnceLock<RuleTables> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut c = [[0; 20]; 20];
        let mut d = [[0; 20]; 20];
        for (x, y) in C_RULE_PAIRS {
            let (i, j) = (label(x).index(), label(y).index());
            c[i][j] = 1;
            c[j][i] = 1;
        }
        for s in C_RULE_SQUARES {
            let i = label(s).index();
            c[i][i] = -1;
        }
        for (x, y) in D_RULE_PAIRS {
            let (i, j) = (label(x).index(), label(y).index());
            d[i][j] = 1;
            d[j][i] = 1;
        }
        let mut node = [None; 20];
        for (k, s) in A_NODES.iter().enumerate() {
            node[label(s).index()] = Some(k);
        }
        RuleTables { c, d, node }
    })
}

/// E·F on the base surface `base` (E, F already transported).
pub fn base_value(base: BoundaryLabel, e: BoundaryLabel, f: BoundaryLabel, adj: &Adjacency) -> i64 {
    let t = tables();
    let (i, j) = (e.index(), f.index());
    match base {
        BoundaryLabel::C(..) => t.c[i][j],
        BoundaryLabel::D(..) => t.d[i][j],
        _ => match (t.node[i], t.node[j]) {
            (Some(a), Some(b)) if a == b => -1,
            (Some(a), Some(b)) => adj[a][b] as i64,
            _ => 0,
        },
    }
}

/// E·F·S computed on the surface S.
pub fn on_surface(s: BoundaryLabel, e: BoundaryLabel, f: BoundaryLabel, adj: &Adjacency) -> i64 {
    let g = &transporters()[s.index()];
    base_value(base_surface(s), act_on_label(g, e), act_on_label(g, f), adj)
}

/// Whether each rule is invariant under the stabilizer of its base surface.
pub fn rules_are_stabilizer_invariant(adj: &Adjacency) -> bool {
    let labels = all_labels();
    [BoundaryLabel::A(0), BoundaryLabel::C(2, 3), BoundaryLabel::D(0, 1)].into_iter().all(|b| {
        stabilizer(b).iter().all(|g| {
            labels.iter().all(|&e| {
                labels
                    .iter()
                    .all(|&f| base_value(b, act_on_label(g, e), act_on_label(g, f), adj) == base_value(b, e, f, adj))
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stabilizers_have_expected_orders() {
        assert_eq!(stabilizer(BoundaryLabel::A(0)).len(), 6);
        assert_eq!(stabilizer(BoundaryLabel::C(2, 3)).len(), 8);
        assert_eq!(stabilizer(BoundaryLabel::D(0, 1)).len(), 8);
        for (i, l) in all_labels().into_iter().enumerate() {
            assert_eq!(act_on_label(&transporters()[i], l), base_surface(l));
        }
    }

    #[test]
    fn exception_tables_are_symmetric_under_stabilizers() {
        let empty = [[false; 10]; 10];
        assert!(rules_are_stabilizer_invariant(&empty));
    }
}
