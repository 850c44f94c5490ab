use std::fmt;

use num_bigint::BigInt;

use super::QuotientError;
use crate::exactlat::ivec;
use crate::polyhedra::Cone;

/// Type tag of an ordered partition of {0,1,2,3}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionType {
    A(u8),
    B(u8),
    C(u8, u8),
    D(u8, u8),
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionType::A(i) => write!(f, "A{i}"),
            PartitionType::B(i) => write!(f, "B{i}"),
            PartitionType::C(i, j) => write!(f, "C{i}{j}"),
            PartitionType::D(i, j) => write!(f, "D{i}{j}"),
        }
    }
}

/// Ordered list of disjoint nonempty blocks covering {0,1,2,3}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    blocks: Vec<Vec<u8>>,
}

impl OrderedPartition {
    pub fn new(blocks: Vec<Vec<u8>>) -> Result<Self, QuotientError> {
        let mut seen = [false; 4];
        let mut blocks = blocks;
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(QuotientError::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x > 3 || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(QuotientError::InvalidPartition(format!("index {x} repeated or out of range")));
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(QuotientError::InvalidPartition("blocks do not cover {0,1,2,3}".into()));
        }
        Ok(OrderedPartition { blocks })
    }

    /// Canonical partition of the given type.
    pub fn of_type(t: PartitionType) -> Self {
        let rest = |skip: &[u8]| -> Vec<u8> { (0..4).filter(|x| !skip.contains(x)).collect() };
        let blocks = match t {
            PartitionType::A(i) => vec![vec![i], rest(&[i])],
            PartitionType::B(i) => vec![rest(&[i]), vec![i]],
            PartitionType::C(i, j) => vec![vec![i, j], rest(&[i, j])],
            PartitionType::D(i, j) => vec![vec![i], rest(&[i, j]), vec![j]],
        };
        OrderedPartition::new(blocks).expect("well-formed type")
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn partition_type(&self) -> Option<PartitionType> {
        let b = &self.blocks;
        match b.len() {
            2 if b[0].len() == 1 => Some(PartitionType::A(b[0][0])),
            2 if b[1].len() == 1 => Some(PartitionType::B(b[1][0])),
            2 if b[0].len() == 2 => Some(PartitionType::C(b[0][0], b[0][1])),
            3 if b[0].len() == 1 && b[2].len() == 1 => Some(PartitionType::D(b[0][0], b[2][0])),
            _ => None,
        }
    }
}

/// Orthant faces attached to partitions in the identity chart, as E-indices.
const FACE_DICTIONARY: [(PartitionType, &[usize]); 9] = [
    (PartitionType::A(1), &[1, 4]),
    (PartitionType::B(1), &[0]),
    (PartitionType::B(2), &[1, 3]),
    (PartitionType::A(2), &[2]),
    (PartitionType::C(0, 2), &[0, 2, 5]),
    (PartitionType::C(1, 3), &[1]),
    (PartitionType::D(1, 2), &[1, 3, 4]),
    (PartitionType::C(1, 2), &[2, 4]),
    (PartitionType::C(0, 3), &[0, 3]),
];

/// E-indices of the orthant face attached to a partition.
pub fn partition_face(phi: &OrderedPartition) -> Result<Vec<usize>, QuotientError> {
    let t = phi.partition_type().ok_or_else(|| QuotientError::OutsideDictionary(format!("{:?}", phi.blocks())))?;
    FACE_DICTIONARY
        .iter()
        .find(|(k, _)| *k == t)
        .map(|(_, f)| f.to_vec())
        .ok_or_else(|| QuotientError::OutsideDictionary(t.to_string()))
}

/// The orthant face δ(φ) as a cone in Z⁶.
pub fn partition_cone(phi: &OrderedPartition) -> Result<Cone, QuotientError> {
    let face = partition_face(phi)?;
    let gens: Vec<Vec<BigInt>> = face
        .iter()
        .map(|&k| {
            let mut v = vec![0i64; 6];
            v[k] = 1;
            ivec(&v)
        })
        .collect();
    Ok(Cone::from_generators(6, &gens)?)
}

/// Partition types covered by the face dictionary.
pub fn dictionary_types() -> Vec<PartitionType> {
    FACE_DICTIONARY.iter().map(|(t, _)| *t).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_detection_roundtrip() {
        for i in 0..4u8 {
            for t in [PartitionType::A(i), PartitionType::B(i)] {
                assert_eq!(OrderedPartition::of_type(t).partition_type(), Some(t));
            }
            for j in 0..4u8 {
                if i < j {
                    let t = PartitionType::C(i, j);
                    assert_eq!(OrderedPartition::of_type(t).partition_type(), Some(t));
                }
                if i != j {
                    let t = PartitionType::D(i, j);
                    assert_eq!(OrderedPartition::of_type(t).partition_type(), Some(t));
                }
            }
        }
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(OrderedPartition::new(vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(OrderedPartition::new(vec![vec![0, 1], vec![2]]).is_err());
        assert!(OrderedPartition::new(vec![vec![], vec![0, 1, 2, 3]]).is_err());
    }

    #[test]
    fn dictionary_lookup() {
        let a1 = OrderedPartition::of_type(PartitionType::A(1));
        assert_eq!(partition_face(&a1).unwrap(), vec![1, 4]);
        let d21 = OrderedPartition::of_type(PartitionType::D(2, 1));
        assert!(matches!(partition_cone(&d21), Err(QuotientError::OutsideDictionary(_))));
        let two_two = OrderedPartition::new(vec![vec![0], vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(two_two.partition_type(), None);
    }
}
