//! Evaluate expressions against a blade-algebra or matrix-representation
//! backend, and compare two sides of an identity.

use gk_core::{
    bracket, build_clifford_generators, build_fermion_rep, contract_left, BracketKind,
    CliffordElement, Complex64, DenseMatrix, FermionRep, Signature,
};
use thiserror::Error;

use crate::expr::{BinOp, Expr, GenKind};

/// Tolerance for the matrix-backend exponential series.
const EXP_SERIES_TOL: f64 = 1e-13;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Core(#[from] gk_core::Error),
    #[error("'{name}{index}' is an operator; use the matrix backend")]
    OperatorNeedsMatrix { name: &'static str, index: usize },
    #[error("'{op}' is not defined on the matrix backend")]
    MatrixUnsupportedOp { op: char },
    #[error("unsupported exponent: {0}")]
    UnsupportedExponent(String),
    #[error("cannot compare an algebra element with a matrix")]
    KindMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Blades,
    Matrix,
}

enum BackendData {
    Blades,
    Matrix {
        rep: FermionRep,
        gens: Vec<DenseMatrix>,
    },
}

/// Evaluation context: a signature plus the backend that interprets
/// generators. On the matrix backend `e<k>` maps to the Clifford
/// generator images, `theta<k>`/`d<k>` to the fermionic pair.
pub struct EvalContext {
    sig: Signature,
    backend: BackendData,
}

impl EvalContext {
    pub fn blades(sig: Signature) -> Self {
        Self {
            sig,
            backend: BackendData::Blades,
        }
    }

    /// Matrix backend over N modes; `sig` defaults to Cl(2N,0) and must
    /// satisfy p + q = 2N.
    pub fn matrix(modes: usize, sig: Option<Signature>) -> Result<Self, EvalError> {
        let rep = build_fermion_rep(modes)?;
        let sig = match sig {
            Some(sig) => sig,
            None => Signature::euclidean(2 * modes)?,
        };
        let gens = build_clifford_generators(&rep, sig)?;
        Ok(Self {
            sig,
            backend: BackendData::Matrix { rep, gens },
        })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn backend(&self) -> Backend {
        match self.backend {
            BackendData::Blades => Backend::Blades,
            BackendData::Matrix { .. } => Backend::Matrix,
        }
    }

    fn dim(&self) -> usize {
        match &self.backend {
            BackendData::Blades => 0,
            BackendData::Matrix { rep, .. } => rep.dim(),
        }
    }
}

/// Result of evaluating an expression: an algebra element on the blade
/// backend, a matrix on the matrix backend.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Element(CliffordElement),
    Matrix(DenseMatrix),
}

impl Value {
    pub fn max_abs_diff(&self, other: &Value) -> Result<f64, EvalError> {
        match (self, other) {
            (Value::Element(a), Value::Element(b)) => Ok(a.max_abs_diff(b)?),
            (Value::Matrix(a), Value::Matrix(b)) => Ok(a.max_abs_diff(b)?),
            _ => Err(EvalError::KindMismatch),
        }
    }
}

pub fn eval(ast: &Expr, ctx: &EvalContext) -> Result<Value, EvalError> {
    match &ctx.backend {
        BackendData::Blades => Ok(Value::Element(eval_blades(ast, ctx.sig)?)),
        BackendData::Matrix { rep, gens } => {
            Ok(Value::Matrix(eval_matrix(ast, ctx, rep, gens)?))
        }
    }
}

fn eval_blades(ast: &Expr, sig: Signature) -> Result<CliffordElement, EvalError> {
    match ast {
        Expr::Number { value, imaginary } => {
            let c = if *imaginary {
                Complex64::new(0.0, *value)
            } else {
                Complex64::new(*value, 0.0)
            };
            Ok(CliffordElement::scalar(sig, c)?)
        }
        Expr::ImaginaryUnit => Ok(CliffordElement::scalar(sig, Complex64::new(0.0, 1.0))?),
        Expr::Gen { kind: GenKind::E, index } => {
            Ok(CliffordElement::basis_vector(sig, *index)?)
        }
        Expr::Gen { kind, index } => Err(EvalError::OperatorNeedsMatrix {
            name: kind.name(),
            index: *index,
        }),
        Expr::Neg(inner) => Ok(eval_blades(inner, sig)?.neg()),
        Expr::Binary { op, lhs, rhs } => {
            let a = eval_blades(lhs, sig)?;
            let b = eval_blades(rhs, sig)?;
            Ok(match op {
                BinOp::Add => a.add(&b)?,
                BinOp::Sub => a.sub(&b)?,
                BinOp::Geometric => a.geometric_product(&b)?,
                BinOp::Wedge => a.wedge(&b)?,
                BinOp::ContractLeft => contract_left(&a, &b)?,
            })
        }
        Expr::Commutator { lhs, rhs } => {
            let a = eval_blades(lhs, sig)?;
            let b = eval_blades(rhs, sig)?;
            Ok(bracket(&a, &b, BracketKind::Commutator)?)
        }
        Expr::Anticommutator { lhs, rhs } => {
            let a = eval_blades(lhs, sig)?;
            let b = eval_blades(rhs, sig)?;
            Ok(bracket(&a, &b, BracketKind::Anticommutator)?)
        }
        Expr::Exp(inner) => blade_exp(&eval_blades(inner, sig)?),
        Expr::Group(inner) => eval_blades(inner, sig),
    }
}

/// Closed-form exponential on the blade backend: the argument must be a
/// scaled 2-blade B with B² = -s² ≤ 0, giving cos(s) + B·sin(s)/s.
fn blade_exp(arg: &CliffordElement) -> Result<CliffordElement, EvalError> {
    let sig = arg.sig();
    if arg.is_zero() {
        return Ok(CliffordElement::scalar(sig, Complex64::new(1.0, 0.0))?);
    }
    if !arg.mv().is_grade(2) || arg.mv().num_terms() != 1 {
        return Err(EvalError::UnsupportedExponent(
            "argument must be a scaled 2-blade".into(),
        ));
    }
    let square = arg.geometric_product(arg)?.coeff(0);
    if square.im.abs() > 1e-12 || square.re > 0.0 {
        return Err(EvalError::UnsupportedExponent(format!(
            "2-blade squares to {square}, not a nonpositive real scalar"
        )));
    }
    let s = (-square.re).sqrt();
    let (cos, sinc) = if s == 0.0 {
        (1.0, 1.0)
    } else {
        (s.cos(), s.sin() / s)
    };
    let unit = CliffordElement::scalar(sig, Complex64::new(cos, 0.0))?;
    Ok(unit.add(&arg.scale(Complex64::new(sinc, 0.0)))?)
}

fn eval_matrix(
    ast: &Expr,
    ctx: &EvalContext,
    rep: &FermionRep,
    gens: &[DenseMatrix],
) -> Result<DenseMatrix, EvalError> {
    let dim = ctx.dim();
    let scalar = |c: Complex64| DenseMatrix::identity(dim).scale(c);
    match ast {
        Expr::Number { value, imaginary } => Ok(scalar(if *imaginary {
            Complex64::new(0.0, *value)
        } else {
            Complex64::new(*value, 0.0)
        })),
        Expr::ImaginaryUnit => Ok(scalar(Complex64::new(0.0, 1.0))),
        Expr::Gen { kind, index } => {
            let i = *index;
            match kind {
                GenKind::E => {
                    if i == 0 || i > gens.len() {
                        return Err(gk_core::Error::GeneratorIndex {
                            index: i,
                            n: gens.len(),
                        }
                        .into());
                    }
                    Ok(gens[i - 1].clone())
                }
                GenKind::Theta | GenKind::D => {
                    if i == 0 || i > rep.modes {
                        return Err(gk_core::Error::GeneratorIndex {
                            index: i,
                            n: rep.modes,
                        }
                        .into());
                    }
                    Ok(match kind {
                        GenKind::Theta => rep.theta[i - 1].clone(),
                        _ => rep.del[i - 1].clone(),
                    })
                }
            }
        }
        Expr::Neg(inner) => Ok(eval_matrix(inner, ctx, rep, gens)?.neg()),
        Expr::Binary { op, lhs, rhs } => {
            let a = eval_matrix(lhs, ctx, rep, gens)?;
            let b = eval_matrix(rhs, ctx, rep, gens)?;
            Ok(match op {
                BinOp::Add => a.add(&b)?,
                BinOp::Sub => a.sub(&b)?,
                BinOp::Geometric => a.matmul(&b)?,
                BinOp::Wedge => return Err(EvalError::MatrixUnsupportedOp { op: '^' }),
                BinOp::ContractLeft => {
                    return Err(EvalError::MatrixUnsupportedOp { op: '|' })
                }
            })
        }
        Expr::Commutator { lhs, rhs } => {
            let a = eval_matrix(lhs, ctx, rep, gens)?;
            let b = eval_matrix(rhs, ctx, rep, gens)?;
            Ok(a.commutator(&b)?)
        }
        Expr::Anticommutator { lhs, rhs } => {
            let a = eval_matrix(lhs, ctx, rep, gens)?;
            let b = eval_matrix(rhs, ctx, rep, gens)?;
            Ok(a.anticommutator(&b)?)
        }
        Expr::Exp(inner) => {
            let a = eval_matrix(inner, ctx, rep, gens)?;
            Ok(a.exp_series(EXP_SERIES_TOL)?)
        }
        Expr::Group(inner) => eval_matrix(inner, ctx, rep, gens),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    pub pass: bool,
    pub residual: f64,
}

/// Evaluate both sides and compare coefficientwise/entrywise.
pub fn check(lhs: &Expr, rhs: &Expr, ctx: &EvalContext, tol: f64) -> Result<Verdict, EvalError> {
    let a = eval(lhs, ctx)?;
    let b = eval(rhs, ctx)?;
    let residual = a.max_abs_diff(&b)?;
    Ok(Verdict {
        pass: residual <= tol,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn blades(p: usize, q: usize) -> EvalContext {
        EvalContext::blades(Signature::new(p, q).unwrap())
    }

    fn element(v: Value) -> CliffordElement {
        match v {
            Value::Element(e) => e,
            _ => panic!("expected element"),
        }
    }

    fn matrix(v: Value) -> DenseMatrix {
        match v {
            Value::Matrix(m) => m,
            _ => panic!("expected matrix"),
        }
    }

    #[test]
    fn generator_square_on_blades() {
        let ctx = blades(2, 0);
        let out = element(eval(&parse("e1*e1").unwrap(), &ctx).unwrap());
        assert_eq!(out.coeff(0), Complex64::new(1.0, 0.0));
        assert_eq!(out.mv().num_terms(), 1);
    }

    #[test]
    fn operator_anticommutator_on_matrices() {
        let ctx = EvalContext::matrix(2, None).unwrap();
        let out = matrix(eval(&parse("{theta1, d1}").unwrap(), &ctx).unwrap());
        assert_eq!(out, DenseMatrix::identity(4));
    }

    #[test]
    fn operator_commutator_gives_the_parity_matrix() {
        let ctx = EvalContext::matrix(1, None).unwrap();
        let out = matrix(eval(&parse("[d1, theta1]").unwrap(), &ctx).unwrap());
        let expected = DenseMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
        assert_eq!(out, expected);
    }

    #[test]
    fn operators_rejected_on_blades() {
        let ctx = blades(2, 0);
        assert!(matches!(
            eval(&parse("theta1").unwrap(), &ctx),
            Err(EvalError::OperatorNeedsMatrix { name: "theta", index: 1 })
        ));
    }

    #[test]
    fn wedge_rejected_on_matrices() {
        let ctx = EvalContext::matrix(1, None).unwrap();
        assert!(matches!(
            eval(&parse("e1^e2").unwrap(), &ctx),
            Err(EvalError::MatrixUnsupportedOp { op: '^' })
        ));
    }

    #[test]
    fn index_out_of_range_is_reported() {
        let ctx = blades(2, 0);
        assert!(eval(&parse("e3").unwrap(), &ctx).is_err());
        let ctx = EvalContext::matrix(1, None).unwrap();
        assert!(eval(&parse("theta2").unwrap(), &ctx).is_err());
        assert!(eval(&parse("e3").unwrap(), &ctx).is_err());
    }

    #[test]
    fn blade_exponential_closed_form() {
        let ctx = blades(3, 0);
        let theta = std::f64::consts::FRAC_PI_2;
        let src = format!("exp({theta}*(0.5*e1*e2))");
        let out = element(eval(&parse(&src).unwrap(), &ctx).unwrap());
        let quarter = std::f64::consts::FRAC_PI_4;
        assert!((out.coeff(0) - Complex64::new(quarter.cos(), 0.0)).norm() < 1e-14);
        assert!((out.coeff(0b11) - Complex64::new(quarter.sin(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn blade_exponential_of_zero() {
        let ctx = blades(2, 0);
        let out = element(eval(&parse("exp(0*e1*e2)").unwrap(), &ctx).unwrap());
        assert_eq!(out.coeff(0), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn blade_exponential_rejects_non_blades() {
        let ctx = blades(3, 0);
        assert!(matches!(
            eval(&parse("exp(e1)").unwrap(), &ctx),
            Err(EvalError::UnsupportedExponent(_))
        ));
        assert!(matches!(
            eval(&parse("exp(e1^e2 + e2^e3)").unwrap(), &ctx),
            Err(EvalError::UnsupportedExponent(_))
        ));
        // imaginary scaling squares to a positive scalar
        assert!(matches!(
            eval(&parse("exp(i*e1^e2)").unwrap(), &ctx),
            Err(EvalError::UnsupportedExponent(_))
        ));
    }

    #[test]
    fn check_verdicts() {
        let ctx = blades(3, 0);
        let v = check(
            &parse("e1*e2 + e2*e1").unwrap(),
            &parse("0").unwrap(),
            &ctx,
            1e-9,
        )
        .unwrap();
        assert!(v.pass);
        assert_eq!(v.residual, 0.0);

        let ctx = blades(1, 0);
        let v = check(&parse("e1*e1").unwrap(), &parse("0").unwrap(), &ctx, 1e-9).unwrap();
        assert!(!v.pass);
        assert_eq!(v.residual, 1.0);

        let ctx = EvalContext::matrix(3, None).unwrap();
        let v = check(
            &parse("theta1*theta1").unwrap(),
            &parse("0").unwrap(),
            &ctx,
            1e-9,
        )
        .unwrap();
        assert!(v.pass);
    }

    #[test]
    fn matrix_signature_must_match_mode_count() {
        assert!(EvalContext::matrix(2, Some(Signature::new(3, 0).unwrap())).is_err());
        assert!(EvalContext::matrix(2, Some(Signature::new(2, 2).unwrap())).is_ok());
    }
}
