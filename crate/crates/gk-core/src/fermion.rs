//! Tensor-product construction of fermionic creation/annihilation
//! matrices and the Clifford generators built from them.
//!
//! The one-mode generators are
//!
//! ```text
//! θ̂ = [0 0]    ∂̂ = [0 1]    ω̂ = [∂̂, θ̂] = [1  0]
//!     [1 0]        [0 0]                 [0 -1]
//! ```
//!
//! and for N modes the i-th pair is embedded Jordan-Wigner style,
//!
//! ```text
//! θ_i = ω̂^⊗(i-1) ⊗ θ̂ ⊗ 𝕀^⊗(N-i),    ∂_i = ω̂^⊗(i-1) ⊗ ∂̂ ⊗ 𝕀^⊗(N-i),
//! ```
//!
//! which satisfies {θ_i,θ_j} = {∂_i,∂_j} = 0 and {∂_i,θ_j} = δ_ij with
//! exactly integer entries. Basis index b ∈ 0..2^N reads as the
//! occupation bitstring of modes 1..N with mode 1 in the most
//! significant position.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::clifford::{CliffordElement, Signature};
use crate::matrix::DenseMatrix;
use crate::{Error, Result};

/// Mode-count cap: 2^N × 2^N dense matrices get out of hand beyond this.
pub const MAX_MODES: usize = 12;

/// The one-mode generators (θ̂, ∂̂, ω̂), exactly as integer matrices.
pub fn base_generators() -> (DenseMatrix, DenseMatrix, DenseMatrix) {
    let theta = DenseMatrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]);
    let del = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
    let omega = DenseMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
    (theta, del, omega)
}

/// The 2N matrices θ_1..θ_N, ∂_1..∂_N of size 2^N × 2^N.
///
/// Fields are public so a representation can be inspected (or corrupted
/// in tests); [`car_check`] verifies the anticommutation relations.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionRep {
    pub modes: usize,
    pub theta: Vec<DenseMatrix>,
    pub del: Vec<DenseMatrix>,
}

impl FermionRep {
    /// Matrix dimension 2^N.
    pub fn dim(&self) -> usize {
        1 << self.modes
    }
}

fn weyl_embed(
    omega: &DenseMatrix,
    slot: &DenseMatrix,
    id2: &DenseMatrix,
    i: usize,
    modes: usize,
) -> DenseMatrix {
    // ω factors to the left of the occupied slot, identities to the right
    let mut m = DenseMatrix::identity(1);
    for _ in 1..i {
        m = m.kron(omega);
    }
    m = m.kron(slot);
    for _ in i..modes {
        m = m.kron(id2);
    }
    m
}

/// Build the N-mode representation; `modes` in `1..=MAX_MODES`.
pub fn build_fermion_rep(modes: usize) -> Result<FermionRep> {
    if modes == 0 || modes > MAX_MODES {
        return Err(Error::ModeCount { modes });
    }
    let (theta_hat, del_hat, omega_hat) = base_generators();
    let id2 = DenseMatrix::identity(2);
    let mut theta = Vec::with_capacity(modes);
    let mut del = Vec::with_capacity(modes);
    for i in 1..=modes {
        theta.push(weyl_embed(&omega_hat, &theta_hat, &id2, i, modes));
        del.push(weyl_embed(&omega_hat, &del_hat, &id2, i, modes));
    }
    Ok(FermionRep { modes, theta, del })
}

/// Max-abs residuals of the anticommutation relations, split by family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarReport {
    /// max over i,j of ‖{θ_i, θ_j}‖
    pub theta_theta: f64,
    /// max over i,j of ‖{∂_i, ∂_j}‖
    pub del_del: f64,
    /// max over i,j of ‖{∂_i, θ_j} - δ_ij·I‖
    pub del_theta: f64,
}

impl CarReport {
    pub fn max(&self) -> f64 {
        self.theta_theta.max(self.del_del).max(self.del_theta)
    }
}

/// Exhaustively verify {θ_i,θ_j} = 0, {∂_i,∂_j} = 0, {∂_i,θ_j} = δ_ij·I
/// over all mode pairs; the report is deterministic in the pair order.
pub fn car_check(rep: &FermionRep) -> CarReport {
    let id = DenseMatrix::identity(rep.dim());
    let mut report = CarReport {
        theta_theta: 0.0,
        del_del: 0.0,
        del_theta: 0.0,
    };
    for i in 0..rep.modes {
        for j in 0..rep.modes {
            let tt = rep.theta[i]
                .anticommutator(&rep.theta[j])
                .expect("same dims")
                .max_abs();
            report.theta_theta = report.theta_theta.max(tt);

            let dd = rep.del[i]
                .anticommutator(&rep.del[j])
                .expect("same dims")
                .max_abs();
            report.del_del = report.del_del.max(dd);

            let mut dt = rep.del[i].anticommutator(&rep.theta[j]).expect("same dims");
            if i == j {
                dt = dt.sub(&id).expect("same dims");
            }
            report.del_theta = report.del_theta.max(dt.max_abs());
        }
    }
    report
}

/// Clifford generator images over `sig` with p + q = 2N.
///
/// The Euclidean combinations are g_i = ∂_i + θ_i and
/// g_{N+i} = i(∂_i - θ_i), which satisfy {g_a, g_b} = 2δ_ab·I; for a
/// mixed signature the generators that must square to -1 are scaled by
/// the imaginary unit so that e_a² = η_aa·I throughout.
pub fn build_clifford_generators(rep: &FermionRep, sig: Signature) -> Result<Vec<DenseMatrix>> {
    let expected = 2 * rep.modes;
    if sig.n() != expected {
        return Err(Error::SignatureSize {
            expected,
            found: sig.n(),
        });
    }
    let i_unit = Complex64::new(0.0, 1.0);
    let mut gens = Vec::with_capacity(expected);
    for k in 0..rep.modes {
        gens.push(rep.del[k].add(&rep.theta[k]).expect("same dims"));
    }
    for k in 0..rep.modes {
        gens.push(rep.del[k].sub(&rep.theta[k]).expect("same dims").scale(i_unit));
    }
    for (a, g) in gens.iter_mut().enumerate() {
        if sig.metric(a + 1).expect("index in range") < 0.0 {
            *g = g.scale(i_unit);
        }
    }
    Ok(gens)
}

/// Extend generator images to the whole algebra: each basis blade maps
/// to the ordered product of its generator images, scalars map to
/// multiples of the identity. This is an algebra homomorphism whenever
/// the images satisfy the Clifford relations of the element's signature.
pub fn rep_map(elem: &CliffordElement, gens: &[DenseMatrix]) -> Result<DenseMatrix> {
    if gens.len() != elem.sig().n() {
        return Err(Error::GeneratorListLength {
            expected: elem.sig().n(),
            found: gens.len(),
        });
    }
    let dim = gens.first().map_or(1, DenseMatrix::rows);
    for g in gens {
        if g.rows() != dim || g.cols() != dim {
            return Err(Error::ShapeMismatch {
                left: (dim, dim),
                right: (g.rows(), g.cols()),
            });
        }
    }
    let mut out = DenseMatrix::zeros(dim, dim);
    for (mask, c) in elem.mv().iter_terms() {
        let mut blade = DenseMatrix::identity(dim);
        let mut rest = mask;
        while rest != 0 {
            blade = blade.matmul(&gens[rest.trailing_zeros() as usize])?;
            rest &= rest - 1;
        }
        out = out.add(&blade.scale(c))?;
    }
    Ok(out)
}
