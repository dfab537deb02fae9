//! so(3) basis, bivector Lie brackets, rotor exponentials, rotation
//! extraction and the quaternion realization.
//!
//! Half-angle bivector exponentials close over the even subalgebra:
//! for a Euclidean plane (e_i e_j)² = -1, so
//!
//! ```text
//! exp(θ·½e_ie_j) = cos(θ/2) + e_ie_j sin(θ/2)
//! ```
//!
//! and sandwiching v ↦ R v R̃ rotates grade-1 elements. With this
//! convention the extracted rotation turns by -θ in the oriented
//! (e_i, e_j) plane; R and -R produce the same rotation (the familiar
//! 2-to-1 double cover).
//!
//! Bracket convention: with B_ab = ½e_ae_b and [A,B] = AB - BA the
//! bivector brackets close as
//!
//! ```text
//! [B_ij, B_kl] = δ_ik B_lj + δ_jk B_il - δ_il B_kj - δ_jl B_ik
//! ```
//!
//! (some references print this identity with the opposite sign).

use num_complex::Complex64;
// f64 float intrinsics come from the Float trait when built without std
#[allow(unused_imports)]
use num_traits::Float;

use crate::clifford::{CliffordElement, Signature};
use crate::matrix::DenseMatrix;
use crate::projector::two_generator_construction;
use crate::{Error, Result};

/// Tolerance for the unit-rotor and grade-1 sandwich checks.
pub const ROTOR_TOL: f64 = 1e-12;

/// The antisymmetric 3×3 generators of so(3), satisfying
/// [L_X, L_Y] = L_Z, [L_Z, L_X] = L_Y, [L_Y, L_Z] = L_X.
#[derive(Debug, Clone, PartialEq)]
pub struct So3Basis {
    pub l_x: DenseMatrix,
    pub l_y: DenseMatrix,
    pub l_z: DenseMatrix,
}

pub fn so3_basis() -> So3Basis {
    So3Basis {
        l_x: DenseMatrix::from_real_rows(&[
            &[0.0, 0.0, 0.0],
            &[0.0, 0.0, -1.0],
            &[0.0, 1.0, 0.0],
        ]),
        l_y: DenseMatrix::from_real_rows(&[
            &[0.0, 0.0, 1.0],
            &[0.0, 0.0, 0.0],
            &[-1.0, 0.0, 0.0],
        ]),
        l_z: DenseMatrix::from_real_rows(&[
            &[0.0, -1.0, 0.0],
            &[1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0],
        ]),
    }
}

/// The quadratic Lie generator ½·e_i·e_j (geometric product), i ≠ j.
pub fn bivector(i: usize, j: usize, sig: Signature) -> Result<CliffordElement> {
    if i == j {
        return Err(Error::DegeneratePlane { index: i });
    }
    let ei = CliffordElement::basis_vector(sig, i)?;
    let ej = CliffordElement::basis_vector(sig, j)?;
    Ok(ei.geometric_product(&ej)?.scale(Complex64::new(0.5, 0.0)))
}

/// An even-graded element with R·R̃ = 1 (within [`ROTOR_TOL`]).
#[derive(Debug, Clone, PartialEq)]
pub struct Rotor {
    elem: CliffordElement,
}

impl Rotor {
    /// Validate even grading and unit normalization.
    pub fn try_new(elem: CliffordElement) -> Result<Self> {
        let odd: f64 = elem
            .mv()
            .iter_terms()
            .filter(|(m, _)| m.count_ones() % 2 == 1)
            .map(|(_, c)| c.norm())
            .fold(0.0, f64::max);
        if odd > ROTOR_TOL {
            return Err(Error::RotorInvariant { residual: odd });
        }
        let unit = elem.geometric_product(&elem.reverse())?;
        let one = CliffordElement::scalar(elem.sig(), Complex64::new(1.0, 0.0))?;
        let residual = unit.max_abs_diff(&one)?;
        if residual > ROTOR_TOL {
            return Err(Error::RotorInvariant { residual });
        }
        Ok(Self { elem })
    }

    pub fn element(&self) -> &CliffordElement {
        &self.elem
    }

    pub fn sig(&self) -> Signature {
        self.elem.sig()
    }

    /// The reversed rotor R̃, which is also the inverse.
    pub fn reversed(&self) -> Self {
        Self {
            elem: self.elem.reverse(),
        }
    }

    /// The antipodal rotor -R (same rotation).
    pub fn negated(&self) -> Self {
        Self {
            elem: self.elem.neg(),
        }
    }

    /// Rotor composition (geometric product).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Self::try_new(self.elem.geometric_product(&other.elem)?)
    }
}

/// cos(θ/2) + e_ie_j sin(θ/2) in the plane (i, j); both generators must
/// square to +1 (hyperbolic planes are unsupported).
pub fn rotor(i: usize, j: usize, angle: f64, sig: Signature) -> Result<Rotor> {
    if i == j {
        return Err(Error::DegeneratePlane { index: i });
    }
    for index in [i, j] {
        if sig.metric(index)? < 0.0 {
            return Err(Error::NonEuclideanPlane { index });
        }
    }
    let half = angle / 2.0;
    let plane = CliffordElement::basis_vector(sig, i)?
        .geometric_product(&CliffordElement::basis_vector(sig, j)?)?;
    let elem = CliffordElement::scalar(sig, Complex64::new(half.cos(), 0.0))?
        .add(&plane.scale(Complex64::new(half.sin(), 0.0)))?;
    Rotor::try_new(elem)
}

/// The rotor action R v R̃ on a grade-1 element; preserves grade and
/// norm.
pub fn sandwich(r: &Rotor, v: &CliffordElement) -> Result<CliffordElement> {
    if !v.mv().is_grade(1) {
        return Err(Error::NotAVector);
    }
    r.elem
        .geometric_product(v)?
        .geometric_product(&r.reversed().elem)
}

/// Assemble the rotation matrix whose column a holds the coordinates of
/// R e_a R̃. Requires the Euclidean signature Cl(n,0); the output is
/// orthogonal with determinant +1 within [`ROTOR_TOL`].
pub fn rotor_to_rotation(r: &Rotor, n: usize) -> Result<DenseMatrix> {
    let sig = r.sig();
    if !sig.is_euclidean() {
        return Err(Error::NonEuclideanPlane { index: sig.p() + 1 });
    }
    if sig.n() != n {
        return Err(Error::SignatureSize {
            expected: n,
            found: sig.n(),
        });
    }
    let mut out = DenseMatrix::zeros(n, n);
    for a in 1..=n {
        let image = sandwich(r, &CliffordElement::basis_vector(sig, a)?)?;
        // anything outside grade 1 signals a broken rotor invariant
        let stray = image
            .mv()
            .iter_terms()
            .filter(|(m, _)| m.count_ones() != 1)
            .map(|(_, c)| c.norm())
            .fold(0.0, f64::max);
        if stray > ROTOR_TOL {
            return Err(Error::RotorInvariant { residual: stray });
        }
        for b in 1..=n {
            let coeff = image.coeff(1 << (b - 1));
            if coeff.im.abs() > ROTOR_TOL {
                return Err(Error::RotorInvariant {
                    residual: coeff.im.abs(),
                });
            }
            out.set(b - 1, a - 1, Complex64::new(coeff.re, 0.0));
        }
    }
    Ok(out)
}

/// The 4×4 quaternion units built from the two-generator Grassmann
/// matrices θ, ∂ (bars denote transposes):
///
/// ```text
/// I = θ̄θ + θθ̄,   î = θ - θ̄,   ĵ = ∂ - ∂̄,   k̂ = îĵ,
/// ```
///
/// satisfying î² = ĵ² = k̂² = îĵk̂ = -I with exact integer entries.
pub fn quaternion_basis() -> (DenseMatrix, DenseMatrix, DenseMatrix, DenseMatrix) {
    let (theta, del) = two_generator_construction();
    let theta_bar = theta.transpose();
    let del_bar = del.transpose();
    let unit = theta_bar
        .matmul(&theta)
        .expect("same dims")
        .add(&theta.matmul(&theta_bar).expect("same dims"))
        .expect("same dims");
    let i_hat = theta.sub(&theta_bar).expect("same dims");
    let j_hat = del.sub(&del_bar).expect("same dims");
    let k_hat = i_hat.matmul(&j_hat).expect("same dims");
    (unit, i_hat, j_hat, k_hat)
}
