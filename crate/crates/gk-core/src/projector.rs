//! Kets, outer products, idempotent projectors, tensor products of
//! states and the 4×4 two-generator Grassmann matrices.

use alloc::vec::Vec;

use num_complex::Complex64;
// f64 float intrinsics come from the Float trait when built without std
#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::DenseMatrix;
use crate::{Error, Result};

/// Tolerance for the idempotence check P² = P at construction.
pub const IDEMPOTENCE_TOL: f64 = 1e-12;

/// Column vector of complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct KetVector {
    amps: Vec<Complex64>,
}

impl KetVector {
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyKet);
        }
        if amps.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { amps })
    }

    /// Standard basis vector |index⟩ in the given dimension.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::BasisIndex { index, dim });
        }
        let mut amps = alloc::vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Self::new(amps)
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Outer product |u⟩⟨v|: M[r][c] = u[r]·conj(v[c]).
pub fn outer(u: &KetVector, v: &KetVector) -> DenseMatrix {
    DenseMatrix::from_fn(u.dim(), v.dim(), |r, c| u.amps[r] * v.amps[c].conj())
}

/// Tensor product of states: amplitude (i·dim_v + j) is u[i]·v[j].
pub fn state_tensor(u: &KetVector, v: &KetVector) -> KetVector {
    let mut amps = Vec::with_capacity(u.dim() * v.dim());
    for a in &u.amps {
        for b in &v.amps {
            amps.push(a * b);
        }
    }
    KetVector { amps }
}

/// A square matrix verified idempotent (P² = P) at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector {
    mat: DenseMatrix,
}

impl Projector {
    pub fn try_new(mat: DenseMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::NotSquare {
                rows: mat.rows(),
                cols: mat.cols(),
            });
        }
        let residual = mat.matmul(&mat)?.max_abs_diff(&mat)?;
        if residual > IDEMPOTENCE_TOL {
            return Err(Error::NotIdempotent { residual });
        }
        Ok(Self { mat })
    }

    /// Rank-1 projector u u†/‖u‖² onto the span of `u`.
    pub fn onto(u: &KetVector) -> Result<Self> {
        let norm_sqr = u.norm() * u.norm();
        if norm_sqr == 0.0 {
            return Err(Error::NotIdempotent { residual: 1.0 });
        }
        let mat = outer(u, u).scale(Complex64::new(1.0 / norm_sqr, 0.0));
        Self::try_new(mat)
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }
}

/// The complementary projector I - P onto the perpendicular subspace;
/// P(I-P) = (I-P)P = 0 up to the idempotence residual of P.
pub fn orthogonal_complement(p: &Projector) -> Projector {
    let id = DenseMatrix::identity(p.dim());
    Projector {
        mat: id.sub(p.matrix()).expect("same dims"),
    }
}

/// The 4×4 matrices of the Grassmann algebra on two generators θ, ∂.
///
/// They factor through the one-mode pair as θ = 𝕀₂ ⊗ θ̂ and ∂ = θ̂ ⊗ ω̂,
/// and satisfy θ² = ∂² = 0 and {θ, ∂} = 0. In bra-ket terms the factor
/// θ̂ is the outer product |1⟩⟨0| (its transpose is |0⟩⟨1|), so both
/// generators are tensor products of basis outer products with the
/// parity matrix ω̂ keeping the cross anticommutator at zero.
pub fn two_generator_construction() -> (DenseMatrix, DenseMatrix) {
    let theta = DenseMatrix::from_real_rows(&[
        &[0.0, 0.0, 0.0, 0.0],
        &[1.0, 0.0, 0.0, 0.0],
        &[0.0, 0.0, 0.0, 0.0],
        &[0.0, 0.0, 1.0, 0.0],
    ]);
    let del = DenseMatrix::from_real_rows(&[
        &[0.0, 0.0, 0.0, 0.0],
        &[0.0, 0.0, 0.0, 0.0],
        &[1.0, 0.0, 0.0, 0.0],
        &[0.0, -1.0, 0.0, 0.0],
    ]);
    (theta, del)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn outer_products_of_basis_kets() {
        let k0 = KetVector::basis(2, 0).unwrap();
        let k1 = KetVector::basis(2, 1).unwrap();
        assert_eq!(
            outer(&k0, &k0),
            DenseMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]])
        );
        assert_eq!(
            outer(&k1, &k1),
            DenseMatrix::from_real_rows(&[&[0.0, 0.0], &[0.0, 1.0]])
        );
        assert_eq!(
            outer(&k0, &k1),
            DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]])
        );
    }

    #[test]
    fn outer_conjugates_the_bra() {
        let u = KetVector::new(alloc::vec![c(0.0, 1.0)]).unwrap();
        let m = outer(&u, &u);
        assert_eq!(m.get(0, 0), c(1.0, 0.0));
    }

    #[test]
    fn complement_of_basis_projector() {
        let p_plus = Projector::try_new(outer(
            &KetVector::basis(2, 0).unwrap(),
            &KetVector::basis(2, 0).unwrap(),
        ))
        .unwrap();
        let p_minus = orthogonal_complement(&p_plus);
        assert_eq!(
            *p_minus.matrix(),
            DenseMatrix::from_real_rows(&[&[0.0, 0.0], &[0.0, 1.0]])
        );
        // orthogonal pair, exactly
        assert_eq!(
            p_plus.matrix().matmul(p_minus.matrix()).unwrap().max_abs(),
            0.0
        );
        assert_eq!(
            p_minus.matrix().matmul(p_plus.matrix()).unwrap().max_abs(),
            0.0
        );
        assert_eq!(
            p_plus.matrix().add(p_minus.matrix()).unwrap(),
            DenseMatrix::identity(2)
        );
    }

    #[test]
    fn complement_of_identity_is_zero() {
        let p = Projector::try_new(DenseMatrix::identity(3)).unwrap();
        assert_eq!(orthogonal_complement(&p).matrix().max_abs(), 0.0);
    }

    #[test]
    fn random_rank_one_projector_annihilates_its_complement() {
        let u = KetVector::new(alloc::vec![c(0.3, -0.4), c(1.2, 0.5), c(-0.7, 0.1)]).unwrap();
        let p = Projector::onto(&u).unwrap();
        let q = orthogonal_complement(&p);
        assert!(p.matrix().matmul(q.matrix()).unwrap().max_abs() < 1e-12);
        assert!(q.matrix().matmul(p.matrix()).unwrap().max_abs() < 1e-12);
        // eigenvalues in {0,1}: P(P - I) ≈ 0
        let shifted = p.matrix().sub(&DenseMatrix::identity(3)).unwrap();
        assert!(p.matrix().matmul(&shifted).unwrap().max_abs() < 1e-9);
    }

    #[test]
    fn non_idempotent_input_rejected() {
        let m = DenseMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert!(matches!(
            Projector::try_new(m),
            Err(Error::NotIdempotent { .. })
        ));
    }

    #[test]
    fn ket_construction_errors() {
        assert!(matches!(KetVector::new(alloc::vec![]), Err(Error::EmptyKet)));
        assert!(matches!(
            KetVector::basis(2, 2),
            Err(Error::BasisIndex { index: 2, dim: 2 })
        ));
        assert!(KetVector::new(alloc::vec![c(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn tensor_of_states() {
        let alpha = c(0.6, 0.0);
        let beta = c(0.0, 0.8);
        let u = KetVector::new(alloc::vec![alpha, beta]).unwrap();
        let v = KetVector::basis(2, 0).unwrap();
        let t = state_tensor(&u, &v);
        assert_eq!(t.amps(), &[alpha, c(0.0, 0.0), beta, c(0.0, 0.0)]);

        let t01 = state_tensor(&KetVector::basis(2, 0).unwrap(), &KetVector::basis(2, 1).unwrap());
        assert_eq!(t01, KetVector::basis(4, 1).unwrap());
    }

    #[test]
    fn tensor_multiplies_norms() {
        let u = KetVector::new(alloc::vec![c(1.0, 2.0), c(-0.5, 0.3)]).unwrap();
        let v = KetVector::new(alloc::vec![c(0.2, 0.0), c(0.0, -1.1), c(0.4, 0.4)]).unwrap();
        let t = state_tensor(&u, &v);
        assert!((t.norm() - u.norm() * v.norm()).abs() < 1e-12);
    }

    #[test]
    fn two_generator_matrices_are_grassmann() {
        let (theta, del) = two_generator_construction();
        assert_eq!(theta.matmul(&theta).unwrap().max_abs(), 0.0);
        assert_eq!(del.matmul(&del).unwrap().max_abs(), 0.0);
        assert_eq!(theta.anticommutator(&del).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn two_generator_matrices_factor_as_kroneckers() {
        let (theta, del) = two_generator_construction();
        let (theta_hat, _, omega_hat) = crate::fermion::base_generators();
        assert_eq!(theta, DenseMatrix::identity(2).kron(&theta_hat));
        assert_eq!(del, theta_hat.kron(&omega_hat));
    }

    #[test]
    fn two_generator_algebra_is_four_dimensional() {
        let (theta, del) = two_generator_construction();
        let theta_del = theta.matmul(&del).unwrap();
        assert!(theta_del.max_abs() > 0.0);
        // I, θ, ∂, θ∂ are linearly independent: each has a nonzero entry
        // in a position where the others vanish
        let id = DenseMatrix::identity(4);
        let probes = [(0usize, 0usize), (1, 0), (2, 0), (3, 0)];
        let basis = [&id, &theta, &del, &theta_del];
        for (bi, b) in basis.iter().enumerate() {
            let (r, c) = probes[bi];
            assert!(b.get(r, c).norm() > 0.0);
            for (oi, o) in basis.iter().enumerate() {
                if oi != bi {
                    assert_eq!(o.get(r, c).norm(), 0.0, "probe ({r},{c})");
                }
            }
        }
    }
}
