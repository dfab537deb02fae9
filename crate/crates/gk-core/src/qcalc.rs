//! Generalized (k-nilpotent) Grassmann variables, q-numbers and the
//! q-deformed derivative.
//!
//! A nilpotency order k ≥ 2 fixes the deformation parameter
//! q = exp(2πi/k). Functions of a k-nilpotent variable θ (θ^k = 0) are
//! polynomials of degree < k, and the derivative acts coefficientwise as
//! ∂_θ θ^n = [n]_q θ^(n-1) with the q-number
//!
//! ```text
//! [X]_q = (1 - q^X) / (1 - q),    [n]_q = 1 + q + … + q^(n-1).
//! ```
//!
//! k = 2 gives q = -1 and recovers ordinary Grassmann calculus.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::matrix::DenseMatrix;
use crate::{Error, Result};

/// Nilpotency cap; roots of unity lose precision well beyond this.
pub const MAX_NILPOTENCY: usize = 64;

/// Deformation context: nilpotency order k and q = exp(2πi/k).
///
/// Powers q^X are taken on the principal branch, q^X = exp(X·2πi/k).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QContext {
    k: usize,
    /// argument of q; negated for the conjugate-variable calculus
    angle: f64,
}

impl QContext {
    pub fn new(k: usize) -> Result<Self> {
        if !(2..=MAX_NILPOTENCY).contains(&k) {
            return Err(Error::NilpotencyOrder { k });
        }
        Ok(Self {
            k,
            angle: core::f64::consts::TAU / k as f64,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.angle)
    }

    /// Complex conjugate of q.
    pub fn qbar(&self) -> Complex64 {
        Complex64::from_polar(1.0, -self.angle)
    }

    /// The calculus of the conjugate variable: same k, q replaced by q̄.
    pub fn conjugate(&self) -> Self {
        Self {
            k: self.k,
            angle: -self.angle,
        }
    }

    fn q_pow(&self, x: f64) -> Complex64 {
        Complex64::from_polar(1.0, self.angle * x)
    }
}

/// The q-number [X]_q = (1 - q^X)/(1 - q); for integer n this equals the
/// geometric sum 1 + q + … + q^(n-1).
pub fn q_number(x: f64, ctx: &QContext) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    (one - ctx.q_pow(x)) / (one - ctx.q())
}

/// Polynomial of degree < k over a k-nilpotent variable: exactly k
/// coefficients, f(θ) = Σ_{n<k} coeffs[n] θ^n.
#[derive(Debug, Clone, PartialEq)]
pub struct QPolynomial {
    ctx: QContext,
    coeffs: Vec<Complex64>,
}

impl QPolynomial {
    /// `coeffs` must have exactly `ctx.k()` entries, all finite.
    pub fn new(ctx: QContext, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != ctx.k() {
            return Err(Error::NilpotencyOrder { k: coeffs.len() });
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { ctx, coeffs })
    }

    /// The monomial θ^n, `n < k`.
    pub fn monomial(ctx: QContext, n: usize) -> Result<Self> {
        if n >= ctx.k() {
            return Err(Error::GradeOutOfRange {
                grade: n,
                n: ctx.k() - 1,
            });
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); ctx.k()];
        coeffs[n] = Complex64::new(1.0, 0.0);
        Ok(Self { ctx, coeffs })
    }

    pub fn ctx(&self) -> QContext {
        self.ctx
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Evaluate as an ordinary complex polynomial (Horner).
    pub fn eval_numeric(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }
}

/// Coefficient-space q-derivative: out[n-1] = [n]_q in[n], top
/// coefficient zero. Exact in the coefficients; linear.
pub fn q_derivative(f: &QPolynomial) -> QPolynomial {
    let k = f.ctx.k();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); k];
    for n in 1..k {
        coeffs[n - 1] = q_number(n as f64, &f.ctx) * f.coeffs[n];
    }
    QPolynomial {
        ctx: f.ctx,
        coeffs,
    }
}

/// Numeric oracle for the derivative: (f(qθ₀) - f(θ₀)) / ((q - 1)θ₀),
/// treating f as the complex polynomial with the same coefficients.
pub fn q_difference_quotient(f: &QPolynomial, theta0: Complex64) -> Result<Complex64> {
    if theta0.re == 0.0 && theta0.im == 0.0 {
        return Err(Error::ZeroSamplePoint);
    }
    let q = f.ctx.q();
    let num = f.eval_numeric(q * theta0) - f.eval_numeric(theta0);
    Ok(num / ((q - Complex64::new(1.0, 0.0)) * theta0))
}

/// Minimal faithful shift-matrix model of the k-nilpotent variable:
/// Θ|n⟩ = |n+1⟩ (with |k-1⟩ killed) and D|n⟩ = [n]_q |n-1⟩, so that
/// Θ^k = D^k = 0 and D acts as the q-derivative on the basis. k = 2
/// returns the 2×2 pair from [`crate::fermion::base_generators`].
pub fn qvar_matrices(ctx: &QContext) -> (DenseMatrix, DenseMatrix) {
    let k = ctx.k();
    let mut theta = DenseMatrix::zeros(k, k);
    let mut del = DenseMatrix::zeros(k, k);
    for n in 0..k - 1 {
        theta.set(n + 1, n, Complex64::new(1.0, 0.0));
    }
    for n in 1..k {
        del.set(n - 1, n, q_number(n as f64, ctx));
    }
    (theta, del)
}
