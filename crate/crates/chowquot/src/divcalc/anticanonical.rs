//! The anticanonical class, its boundary expressions, and named divisor and
//! curve classes used by the cone analysis.

use super::form::{curve_expression, form, CurveClass};
use super::picard::{class, lattice, DivisorClass};
use crate::tilegroup::group_elements;

/// −K from the blowup presentation.
pub const ANTICANONICAL: &str = "4qH-A0-A1-B2-B3-D01-D23-2D02-2D03-2D12-2D13-2C01";

/// Twelve effective boundary expressions of −K, six of each shape.
pub const ANTICANONICAL_EXPRESSIONS: [&str; 12] = [
    "A2+A3+B0+B1+2C01+D01+D23",
    "A1+A3+B0+B2+2C02+D02+D13",
    "A0+A1+B2+B3+2C23+D01+D23",
    "A1+A2+B0+B3+2C03+D03+D12",
    "A0+A3+B1+B2+2C12+D03+D12",
    "A0+A2+B1+B3+2C13+D02+D13",
    "A2+A3+B2+B3+C01+C23+2D23",
    "A1+A3+B1+B3+C02+C13+2D13",
    "A0+A2+B0+B2+C02+C13+2D02",
    "A0+A3+B0+B3+C03+C12+2D03",
    "A0+A1+B0+B1+C01+C23+2D01",
    "A1+A2+B1+B2+C03+C12+2D12",
];

/// The special divisor, and a second expression of it through q*H.
pub const S_CLASS: &str = "A1+B2+C02+C23-D03";
pub const S_CLASS_CUBIC: &str = "3qH-A0-A1-C01-B2-B3-D01-D23-2D02-2D03-2D13-2D12";

/// Strict transforms of the three quadric cones through pairs of points, keyed by the pairing.
pub const H_CLASSES: [(&str, &str); 3] =
    [("H{01}{23}", "A2+B2-D01+D02+D12"), ("H{02}{13}", "A1+B1+D01-D02+D12"), ("H{03}{12}", "A0+B0+D01+D02-D12")];
pub const H_01_23_ALT: &str = "qH-C01-D01-D23";

/// Pullback from the Grassmannian side: its square is numerically trivial.
pub const L1: &str = "C01+C23+D01+D23";
pub const L2: &str = "A2+A3+2C01+C23+D01+2D23";
pub const L2_PRIME: &str = "B0+B1+2C01+C23+2D01+D23";

pub const GAMMA1: &str = "A0*B0 + A1*B1 + C01*C23 + A0*D01 + B0*D01";
pub const GAMMA2: &str = "A0*B1 + A3*B2 + A0*C12 + B1*C12 - C03*C12";

pub fn anticanonical_class() -> DivisorClass {
    class(ANTICANONICAL)
}

pub fn gamma1() -> CurveClass {
    curve_expression(GAMMA1).expect("curve literal")
}

pub fn gamma2() -> CurveClass {
    curve_expression(GAMMA2).expect("curve literal")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticanonicalReport {
    pub class: DivisorClass,
    /// Each boundary expression with whether it reduces to −K.
    pub expressions: Vec<(String, bool)>,
    pub group_invariant: bool,
    pub cube: i64,
}

impl AnticanonicalReport {
    pub fn passed(&self) -> bool {
        self.cube == 12 && self.group_invariant && self.expressions.iter().all(|(_, ok)| *ok)
    }
}

pub fn anticanonical() -> AnticanonicalReport {
    let k = anticanonical_class();
    let p = lattice();
    AnticanonicalReport {
        class: k,
        expressions: ANTICANONICAL_EXPRESSIONS.iter().map(|e| (e.to_string(), class(e) == k)).collect(),
        group_invariant: group_elements().iter().all(|g| p.act(g, &k) == k),
        cube: form().cube(&k),
    }
}
