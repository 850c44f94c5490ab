//! S₄ ⋊ Z/2, with τ acting on S₄ by conjugation with w₀.

use std::collections::BTreeSet;
use std::fmt;

pub const W0: [usize; 4] = [3, 2, 1, 0];

/// The element σ∘τ^flip: apply τ first (if present), then σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub perm: [usize; 4],
    pub flip: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    R1,
    R2,
    R3,
    Tau,
}

pub const GENERATORS: [Generator; 4] = [Generator::R1, Generator::R2, Generator::R3, Generator::Tau];

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::R1 => "r1",
            Generator::R2 => "r2",
            Generator::R3 => "r3",
            Generator::Tau => "tau",
        })
    }
}

impl Generator {
    pub fn element(self) -> GroupElement {
        match self {
            Generator::R1 => GroupElement::transposition(0),
            Generator::R2 => GroupElement::transposition(1),
            Generator::R3 => GroupElement::transposition(2),
            Generator::Tau => GroupElement { perm: [0, 1, 2, 3], flip: true },
        }
    }

    pub fn from_name(s: &str) -> Option<Generator> {
        GENERATORS.into_iter().find(|g| g.to_string() == s)
    }
}

fn compose_perm(p: &[usize; 4], q: &[usize; 4]) -> [usize; 4] {
    [p[q[0]], p[q[1]], p[q[2]], p[q[3]]]
}

/// w₀ q w₀, the action of τ on S₄.
fn conjugate_by_w0(q: &[usize; 4]) -> [usize; 4] {
    compose_perm(&W0, &compose_perm(q, &W0))
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { perm: [0, 1, 2, 3], flip: false };

    /// Transposition (i, i+1).
    pub fn transposition(i: usize) -> GroupElement {
        let mut perm = [0, 1, 2, 3];
        perm.swap(i, i + 1);
        GroupElement { perm, flip: false }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// self ∘ other.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let q = if self.flip { conjugate_by_w0(&other.perm) } else { other.perm };
        GroupElement { perm: compose_perm(&self.perm, &q), flip: self.flip != other.flip }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = [0; 4];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        let p = GroupElement { perm: inv, flip: false };
        if self.flip {
            Generator::Tau.element().compose(&p)
        } else {
            p
        }
    }

    /// Word g₁g₂…g_k over the generators with self = g₁∘g₂∘…∘g_k.
    pub fn word(&self) -> Vec<Generator> {
        // bubble-sort the permutation into adjacent transpositions
        let mut p = self.perm;
        let mut rev = Vec::new();
        while let Some(i) = (0..3).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            rev.push(i);
        }
        // p∘s_{i1}∘…∘s_{ik} = id, so p = s_{ik}∘…∘s_{i1}
        let gens = [Generator::R1, Generator::R2, Generator::R3];
        let mut w: Vec<Generator> = rev.iter().rev().map(|&i| gens[i]).collect();
        if self.flip {
            w.push(Generator::Tau);
        }
        w
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.perm;
        write!(f, "{}{}{}{}", p[0], p[1], p[2], p[3])?;
        if self.flip {
            f.write_str("t")?;
        }
        Ok(())
    }
}

pub fn compose(g: &GroupElement, h: &GroupElement) -> GroupElement {
    g.compose(h)
}

/// Closure of the generators under composition, sorted.
pub fn group_elements() -> Vec<GroupElement> {
    let mut seen: BTreeSet<GroupElement> = BTreeSet::from([GroupElement::IDENTITY]);
    let mut frontier = vec![GroupElement::IDENTITY];
    while let Some(g) = frontier.pop() {
        for s in GENERATORS {
            let h = g.compose(&s.element());
            if seen.insert(h) {
                frontier.push(h);
            }
        }
    }
    seen.into_iter().collect()
}

/// Evaluates a word as a group element.
pub fn word_element(word: &[Generator]) -> GroupElement {
    word.iter().fold(GroupElement::IDENTITY, |acc, g| acc.compose(&g.element()))
}

/// Defining relations of the presentation, each a word equal to the identity.
pub fn defining_relations() -> Vec<(&'static str, Vec<Generator>)> {
    use Generator::*;
    vec![
        ("r1^2", vec![R1, R1]),
        ("r2^2", vec![R2, R2]),
        ("r3^2", vec![R3, R3]),
        ("tau^2", vec![Tau, Tau]),
        ("(r1 r2)^3", vec![R1, R2, R1, R2, R1, R2]),
        ("(r2 r3)^3", vec![R2, R3, R2, R3, R2, R3]),
        ("(r1 r3)^2", vec![R1, R3, R1, R3]),
        ("tau r1 tau r3", vec![Tau, R1, Tau, R3]),
        ("tau r2 tau r2", vec![Tau, R2, Tau, R2]),
    ]
}
