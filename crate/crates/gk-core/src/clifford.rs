//! Geometric (Clifford) product, interior products and (anti)commutators
//! over an arbitrary signature Cl(p,q).
//!
//! Generators are ordered so that e_1..e_p square to +1 and
//! e_{p+1}..e_{p+q} square to -1. For grade-1 a, b the geometric product
//! decomposes as ab = a·b + a∧b with a·b the metric inner product.

use num_complex::Complex64;

use crate::exterior::{reorder_sign, BladeMask, Multivector};
use crate::{Error, Result};

/// Metric descriptor for Cl(p,q): `p` generators square to +1, `q` to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > crate::MAX_GENERATORS {
            return Err(Error::TooManyGenerators { n: p + q });
        }
        Ok(Self { p, q })
    }

    /// Euclidean signature Cl(n,0).
    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Total generator count p + q.
    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn is_euclidean(&self) -> bool {
        self.q == 0
    }

    /// e_index², i.e. the diagonal metric entry, for `index` in `1..=n`.
    pub fn metric(&self, index: usize) -> Result<f64> {
        if index == 0 || index > self.n() {
            return Err(Error::GeneratorIndex {
                index,
                n: self.n(),
            });
        }
        Ok(if index <= self.p { 1.0 } else { -1.0 })
    }

    /// Mask of the generators squaring to -1.
    fn negative_mask(&self) -> BladeMask {
        if self.q == 0 {
            0
        } else {
            (((1u64 << self.q) - 1) as BladeMask) << self.p
        }
    }
}

/// A multivector attached to a metric signature.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordElement {
    sig: Signature,
    mv: Multivector,
}

impl CliffordElement {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            mv: Multivector::zero(sig.n()).expect("signature already capped"),
        }
    }

    pub fn scalar(sig: Signature, c: Complex64) -> Result<Self> {
        Ok(Self {
            sig,
            mv: Multivector::scalar(sig.n(), c)?,
        })
    }

    pub fn basis_vector(sig: Signature, index: usize) -> Result<Self> {
        Ok(Self {
            sig,
            mv: Multivector::basis_vector(sig.n(), index)?,
        })
    }

    pub fn basis_blade(sig: Signature, mask: BladeMask) -> Result<Self> {
        Ok(Self {
            sig,
            mv: Multivector::basis_blade(sig.n(), mask)?,
        })
    }

    /// Attach a signature to a multivector of matching generator count.
    pub fn from_multivector(sig: Signature, mv: Multivector) -> Result<Self> {
        if mv.n() != sig.n() {
            return Err(Error::GeneratorCount {
                left: sig.n(),
                right: mv.n(),
            });
        }
        Ok(Self { sig, mv })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn mv(&self) -> &Multivector {
        &self.mv
    }

    pub fn into_multivector(self) -> Multivector {
        self.mv
    }

    pub fn coeff(&self, mask: BladeMask) -> Complex64 {
        self.mv.coeff(mask)
    }

    pub fn is_zero(&self) -> bool {
        self.mv.is_zero()
    }

    fn check_same_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    fn wrap(&self, mv: Multivector) -> Self {
        Self { sig: self.sig, mv }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_sig(other)?;
        Ok(self.wrap(self.mv.add(&other.mv)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_sig(other)?;
        Ok(self.wrap(self.mv.sub(&other.mv)?))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.mv.neg())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.wrap(self.mv.scale(c))
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_same_sig(other)?;
        Ok(self.wrap(self.mv.wedge(&other.mv)?))
    }

    pub fn grade_project(&self, k: usize) -> Result<Self> {
        Ok(self.wrap(self.mv.grade_project(k)?))
    }

    pub fn reverse(&self) -> Self {
        self.wrap(self.mv.reverse())
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_sig(other)?;
        self.mv.max_abs_diff(&other.mv)
    }

    /// Geometric product. Associative; generators obey e_i e_i = ±1 per
    /// the signature and e_i e_j = -e_j e_i for i ≠ j.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_same_sig(other)?;
        let neg_mask = self.sig.negative_mask();
        let mut out = Multivector::zero(self.sig.n()).expect("capped");
        for (ma, ca) in self.mv.iter_terms() {
            for (mb, cb) in other.mv.iter_terms() {
                let mut sign = reorder_sign(ma, mb);
                // each repeated generator contributes its square
                if ((ma & mb) & neg_mask).count_ones() & 1 == 1 {
                    sign = -sign;
                }
                out.accumulate(ma ^ mb, ca * cb * sign);
            }
        }
        Ok(self.wrap(out))
    }
}

/// Left interior product v⌋W of a grade-1 element into a multivector.
///
/// On a k-blade W = w_1∧…∧w_k this is Σ_i (-1)^(i-1) (v·w_i) w_1∧…ŵ_i…∧w_k,
/// lowering the grade by one; it extends bilinearly.
pub fn contract_left(v: &CliffordElement, w: &CliffordElement) -> Result<CliffordElement> {
    if v.sig != w.sig {
        return Err(Error::SignatureMismatch);
    }
    if !v.mv.is_grade(1) {
        return Err(Error::NotAVector);
    }
    let sig = v.sig;
    let mut out = CliffordElement::zero(sig);
    for (vm, cv) in v.mv.iter_terms() {
        let index = vm.trailing_zeros() as usize + 1;
        let metric = sig.metric(index).expect("stored mask in range");
        for (wm, cw) in w.mv.iter_terms() {
            if wm & vm == 0 {
                continue;
            }
            // factors of W below the removed generator each cost a sign
            let below = (wm & (vm - 1)).count_ones();
            let sign = if below & 1 == 0 { metric } else { -metric };
            out.mv.accumulate(wm & !vm, cv * cw * sign);
        }
    }
    Ok(out)
}

/// Right interior product W⌊v; on a grade-k part it equals
/// (-1)^(k-1) (v⌋W), commuting for odd k and anticommuting for even k.
pub fn contract_right(w: &CliffordElement, v: &CliffordElement) -> Result<CliffordElement> {
    if v.sig != w.sig {
        return Err(Error::SignatureMismatch);
    }
    if !v.mv.is_grade(1) {
        return Err(Error::NotAVector);
    }
    let sig = v.sig;
    let mut out = CliffordElement::zero(sig);
    for (vm, cv) in v.mv.iter_terms() {
        let index = vm.trailing_zeros() as usize + 1;
        let metric = sig.metric(index).expect("stored mask in range");
        for (wm, cw) in w.mv.iter_terms() {
            if wm & vm == 0 {
                continue;
            }
            // removing the m-th of k factors from the right costs k - m swaps
            let k = wm.count_ones();
            let m = (wm & (vm - 1)).count_ones() + 1;
            let sign = if (k - m) & 1 == 0 { metric } else { -metric };
            out.mv.accumulate(wm & !vm, cv * cw * sign);
        }
    }
    Ok(out)
}

/// Commutator AB - BA or anticommutator AB + BA under the geometric
/// product. The same forms exist on [`crate::DenseMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

pub fn bracket(
    a: &CliffordElement,
    b: &CliffordElement,
    kind: BracketKind,
) -> Result<CliffordElement> {
    let ab = a.geometric_product(b)?;
    let ba = b.geometric_product(a)?;
    match kind {
        BracketKind::Commutator => ab.sub(&ba),
        BracketKind::Anticommutator => ab.add(&ba),
    }
}

impl core::fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        self.mv.fmt(f)
    }
}
