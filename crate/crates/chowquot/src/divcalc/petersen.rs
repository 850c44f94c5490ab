//! Recovers the incidence graph of the (−1)-curves on A₀ by exhaustive
//! constraint solving over the unknown node pairs.

use std::collections::BTreeMap;

use super::form::LabelTable;
use super::picard::label_relations;
use super::rules::{label, node_pairs, on_surface, stabilizer, transporters, Adjacency, A_NODES};
use super::DivcalcError;
use crate::tilegroup::{act_on_label, BoundaryLabel};

/// Cap on the brute-force search after forcing.
const MAX_FREE_PAIRS: usize = 24;

/// Edges that the C- and D-rules force on A₀.
pub const FORCED_EDGES: [(&str, &str); 5] =
    [("B2", "C23"), ("B3", "C23"), ("D01", "C23"), ("B0", "D01"), ("B1", "D01")];

pub type LabelPair = (BoundaryLabel, BoundaryLabel);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PetersenData {
    pub nodes: [BoundaryLabel; 10],
    pub adjacency: Adjacency,
    /// Node pairs whose value the C- and D-rules determine, with that value.
    pub forced: Vec<(LabelPair, bool)>,
    pub free_pairs: usize,
    pub candidates: usize,
    /// Candidates rejected, keyed by the first constraint they violate.
    pub rejections: BTreeMap<String, usize>,
}

impl PetersenData {
    pub fn edges(&self) -> Vec<LabelPair> {
        edge_list(&self.adjacency).into_iter().map(|(i, j)| (self.nodes[i], self.nodes[j])).collect()
    }

    pub fn has_edge(&self, a: BoundaryLabel, b: BoundaryLabel) -> bool {
        let pos = |l| self.nodes.iter().position(|&n| n == l);
        matches!((pos(a), pos(b)), (Some(i), Some(j)) if self.adjacency[i][j])
    }

    /// Nodes and edges on an arbitrary A- or B-surface, carried over from A₀.
    pub fn transported(&self, surface: BoundaryLabel) -> Option<(Vec<BoundaryLabel>, Vec<LabelPair>)> {
        if !matches!(surface, BoundaryLabel::A(_) | BoundaryLabel::B(_)) {
            return None;
        }
        let back = transporters()[surface.index()].inverse();
        let nodes = self.nodes.iter().map(|&n| act_on_label(&back, n)).collect();
        let edges = self.edges().into_iter().map(|(a, b)| (act_on_label(&back, a), act_on_label(&back, b))).collect();
        Some((nodes, edges))
    }
}

pub fn edge_list(adj: &Adjacency) -> Vec<(usize, usize)> {
    node_pairs().into_iter().filter(|&(i, j)| adj[i][j]).collect()
}

pub fn a_nodes() -> [BoundaryLabel; 10] {
    A_NODES.map(label)
}

/// 3-regular with 15 edges and girth 5: on 10 vertices this characterizes the Petersen graph.
pub fn is_petersen(adj: &Adjacency) -> bool {
    let regular = (0..10).all(|i| !adj[i][i] && (0..10).filter(|&j| adj[i][j]).count() == 3);
    let symmetric = (0..10).all(|i| (0..10).all(|j| adj[i][j] == adj[j][i]));
    let no_triangle = (0..10).all(|i| (0..10).all(|j| (0..10).all(|k| !(adj[i][j] && adj[j][k] && adj[k][i]))));
    // two distinct vertices share at most one neighbour iff there is no 4-cycle
    let no_square = node_pairs().into_iter().all(|(i, j)| (0..10).filter(|&k| adj[i][k] && adj[j][k]).count() <= 1);
    regular && symmetric && no_triangle && no_square && edge_list(adj).len() == 15
}

/// Value of each node pair fixed by a C- or D-rule through triple consistency.
pub fn forced_values() -> Result<BTreeMap<(usize, usize), bool>, DivcalcError> {
    let nodes = a_nodes();
    let a0 = BoundaryLabel::A(0);
    let empty = [[false; 10]; 10];
    let mut out = BTreeMap::new();
    for (i, j) in node_pairs() {
        let mut values = Vec::new();
        for (s, other) in [(nodes[i], nodes[j]), (nodes[j], nodes[i])] {
            if matches!(s, BoundaryLabel::C(..) | BoundaryLabel::D(..)) {
                values.push(on_surface(s, a0, other, &empty));
            }
        }
        values.dedup();
        match values.as_slice() {
            [] => {}
            [v @ (0 | 1)] => {
                out.insert((i, j), *v == 1);
            }
            _ => {
                return Err(DivcalcError::Petersen(format!(
                    "rules disagree on {}·{}·A0: {values:?}",
                    nodes[i], nodes[j]
                )))
            }
        }
    }
    Ok(out)
}

fn stabilizer_invariant(adj: &Adjacency) -> bool {
    let nodes = a_nodes();
    let pos = |l: BoundaryLabel| nodes.iter().position(|&n| n == l).expect("stabilizer permutes nodes");
    stabilizer(BoundaryLabel::A(0)).iter().all(|g| {
        edge_list(adj).into_iter().all(|(i, j)| adj[pos(act_on_label(g, nodes[i]))][pos(act_on_label(g, nodes[j]))])
    })
}

fn three_regular(adj: &Adjacency) -> bool {
    (0..10).all(|i| adj[i].iter().filter(|&&b| b).count() == 3)
}

/// Σ_L r_L · (L·A₀·X) = 0 for every label relation r and every label X.
fn descends_with_a0(table: &LabelTable) -> bool {
    let a0 = BoundaryLabel::A(0).index();
    label_relations().iter().all(|r| (0..20).all(|x| (0..20).map(|l| r[l] * table.get(l, a0, x)).sum::<i64>() == 0))
}

/// Name of the first violated constraint, if any.
pub fn violated_constraint(adj: &Adjacency) -> Option<&'static str> {
    if !stabilizer_invariant(adj) {
        return Some("stabilizer equivariance");
    }
    if !three_regular(adj) {
        return Some("3-regularity");
    }
    match LabelTable::build(adj) {
        Err(_) => Some("triple consistency"),
        Ok(t) if !descends_with_a0(&t) => Some("linear relations with A0"),
        Ok(_) => None,
    }
}

pub fn solve_petersen() -> Result<PetersenData, DivcalcError> {
    let forced = forced_values()?;
    let free: Vec<(usize, usize)> = node_pairs().into_iter().filter(|p| !forced.contains_key(p)).collect();
    if free.len() > MAX_FREE_PAIRS {
        return Err(DivcalcError::Petersen(format!("{} unforced pairs", free.len())));
    }
    let mut base = [[false; 10]; 10];
    for (&(i, j), &v) in &forced {
        base[i][j] = v;
        base[j][i] = v;
    }
    let mut solutions = Vec::new();
    let mut rejections = BTreeMap::new();
    let candidates = 1usize << free.len();
    for mask in 0..candidates {
        let mut adj = base;
        for (bit, &(i, j)) in free.iter().enumerate() {
            let v = mask >> bit & 1 == 1;
            adj[i][j] = v;
            adj[j][i] = v;
        }
        match violated_constraint(&adj) {
            Some(c) => *rejections.entry(c.to_string()).or_insert(0) += 1,
            None => solutions.push(adj),
        }
    }
    let [adjacency] = solutions.as_slice() else {
        return Err(DivcalcError::Petersen(format!("{} solutions; rejections {rejections:?}", solutions.len())));
    };
    if !is_petersen(adjacency) {
        return Err(DivcalcError::Petersen("solution is not the Petersen graph".into()));
    }
    let nodes = a_nodes();
    Ok(PetersenData {
        nodes,
        adjacency: *adjacency,
        forced: forced.into_iter().map(|((i, j), v)| ((nodes[i], nodes[j]), v)).collect(),
        free_pairs: free.len(),
        candidates,
        rejections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilegroup::all_labels;
    use std::collections::HashSet;

    /// The Petersen graph as the Kneser graph K(5,2).
    fn kneser() -> Vec<(usize, usize)> {
        let sets: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let mut out = Vec::new();
        for i in 0..10 {
            for j in i + 1..10 {
                let (a, b) = sets[i];
                let (c, d) = sets[j];
                if a != c && a != d && b != c && b != d {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else { return false };
        let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        true
    }

    #[test]
    fn solution_is_unique_and_petersen() {
        let p = solve_petersen().unwrap();
        assert!(is_petersen(&p.adjacency));
        assert_eq!(p.edges().len(), 15);
        for (a, b) in FORCED_EDGES {
            assert!(p.has_edge(label(a), label(b)), "{a}-{b}");
        }
        assert_eq!(p.rejections.values().sum::<usize>() + 1, p.candidates);
    }

    #[test]
    fn brute_force_over_petersen_labelings_agrees() {
        // every labeling of the abstract Petersen graph by the 10 nodes, deduplicated
        let edges = kneser();
        let pairs = node_pairs();
        let mut seen = HashSet::new();
        let mut perm: Vec<usize> = (0..10).collect();
        loop {
            let mut mask = 0u64;
            for &(i, j) in &edges {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                mask |= 1 << pairs.iter().position(|&q| q == (a, b)).unwrap();
            }
            seen.insert(mask);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(seen.len(), 3_628_800 / 120);
        let forced = forced_values().unwrap();
        let survivors: Vec<Adjacency> = seen
            .into_iter()
            .map(|mask| {
                let mut adj = [[false; 10]; 10];
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    adj[i][j] = mask >> k & 1 == 1;
                    adj[j][i] = adj[i][j];
                }
                adj
            })
            .filter(|adj| forced.iter().all(|(&(i, j), &v)| adj[i][j] == v))
            .filter(|adj| violated_constraint(adj).is_none())
            .collect();
        assert_eq!(survivors.len(), 1);
        assert_eq!(survivors[0], solve_petersen().unwrap().adjacency);
    }

    #[test]
    fn petersen_recognizer() {
        let mut adj = [[false; 10]; 10];
        for (i, j) in kneser() {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        assert!(is_petersen(&adj));
        // a 3-regular graph with triangles: two copies of K4 minus... use the prism plus a swap
        adj[0][7] = !adj[0][7];
        adj[7][0] = adj[0][7];
        assert!(!is_petersen(&adj));
    }

    #[test]
    fn transported_copies_stay_on_the_surface() {
        let p = solve_petersen().unwrap();
        for s in all_labels().into_iter().filter(|l| matches!(l, BoundaryLabel::A(_) | BoundaryLabel::B(_))) {
            let (nodes, edges) = p.transported(s).unwrap();
            assert_eq!(nodes.len(), 10);
            assert_eq!(edges.len(), 15);
            assert!(!nodes.contains(&s));
        }
        assert!(p.transported(BoundaryLabel::C(0, 1)).is_none());
    }
}
