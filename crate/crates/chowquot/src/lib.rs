//! Exact computations for the Chow quotient of the complete flag variety of
//! PGL(4) by its maximal torus: lattices, cones and fans, the quotient fan of
//! the nilpotent chart, the order-48 tile group of birational maps of P³, the
//! Picard lattice with its intersection form, and the Mori, nef and effective
//! cones.

pub mod conelab;
pub mod divcalc;
pub mod exactlat;
pub mod polyhedra;
pub mod quotientfan;
pub mod tilegroup;
