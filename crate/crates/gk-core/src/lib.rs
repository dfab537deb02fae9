//! Grassmann/Clifford algebra kernel.
//!
//! The crate is split along the algebraic constructions it provides:
//!
//! - [`exterior`]: basis-blade bitmask arithmetic and the graded wedge
//!   algebra on up to 30 anticommuting generators.
//! - [`clifford`]: the geometric product over an arbitrary signature
//!   `Cl(p,q)`, left/right contractions and (anti)commutators.
//! - [`matrix`]: dense complex matrices with Kronecker products and a
//!   Taylor-series exponential, the carrier of all representations.
//! - [`fermion`]: the tensor-product (Jordan-Wigner style) construction
//!   of fermionic creation/annihilation matrices and the Clifford
//!   generators built from them.
//! - [`qcalc`]: k-nilpotent generalized Grassmann variables, q-numbers
//!   at roots of unity and the q-deformed derivative.
//! - [`projector`]: kets, outer products, idempotent projectors and the
//!   4x4 two-generator Grassmann matrices.
//! - [`spin`]: the so(3) basis, bivector Lie brackets, rotors, rotation
//!   extraction and the quaternion realization.
//!
//! Everything is a pure function on immutable values; the crate is
//! `no_std`-compatible (with `alloc`) when the default `std` feature is
//! disabled.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod clifford;
pub mod error;
pub mod exterior;
pub mod fermion;
pub mod matrix;
pub mod projector;
pub mod qcalc;
pub mod spin;

pub use clifford::{bracket, contract_left, contract_right, BracketKind, CliffordElement, Signature};
pub use error::Error;
pub use exterior::{blade_canonicalize, BladeMask, Multivector, MAX_GENERATORS};
pub use fermion::{
    base_generators, build_clifford_generators, build_fermion_rep, car_check, rep_map, CarReport,
    FermionRep, MAX_MODES,
};
pub use matrix::DenseMatrix;
pub use num_complex::Complex64;
pub use projector::{
    orthogonal_complement, outer, state_tensor, two_generator_construction, KetVector, Projector,
};
pub use qcalc::{
    q_derivative, q_difference_quotient, q_number, qvar_matrices, QContext, QPolynomial,
    MAX_NILPOTENCY,
};
pub use spin::{
    bivector, quaternion_basis, rotor, rotor_to_rotation, sandwich, so3_basis, Rotor, So3Basis,
};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
