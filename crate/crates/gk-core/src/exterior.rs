//! Basis-blade arithmetic and the graded exterior (wedge) algebra.
//!
//! A basis blade e_{i1} ∧ … ∧ e_{ik} with ascending indices is stored as a
//! bitmask: bit `i - 1` set means generator `e_i` is present. A
//! [`Multivector`] is a sparse map from blade mask to complex coefficient
//! over a fixed generator count `n`. The wedge product is computed blade
//! pair by blade pair; reordering signs come from counting the index
//! inversions between the two masks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

/// Generator cap so blade masks fit comfortably in a machine word (the
/// term count 2^n bounds memory well before that anyway).
pub const MAX_GENERATORS: usize = 30;

/// Bitmask of basis generators: bit `i - 1` set iff `e_i` is present.
pub type BladeMask = u32;

/// Sign picked up when concatenating two ascending blades and resorting:
/// parity of pairs (a, b) with a set in `ma`, b set in `mb`, a > b.
pub(crate) fn reorder_sign(ma: BladeMask, mb: BladeMask) -> f64 {
    let mut a = ma >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & mb).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn check_generator_count(n: usize) -> Result<()> {
    if n > MAX_GENERATORS {
        return Err(Error::TooManyGenerators { n });
    }
    Ok(())
}

/// Sort a list of generator indices into canonical (ascending) order.
///
/// Returns `None` when an index repeats, since e_i ∧ e_i = 0; otherwise
/// the blade mask together with (-1)^inversions.
pub fn blade_canonicalize(n: usize, indices: &[usize]) -> Result<Option<(BladeMask, i32)>> {
    check_generator_count(n)?;
    let mut mask: BladeMask = 0;
    let mut sign = 1i32;
    for &index in indices {
        if index == 0 || index > n {
            return Err(Error::GeneratorIndex { index, n });
        }
        let bit = 1u32 << (index - 1);
        if mask & bit != 0 {
            return Ok(None);
        }
        // each already-placed generator above this one costs a transposition
        if (mask >> index).count_ones() & 1 == 1 {
            sign = -sign;
        }
        mask |= bit;
    }
    Ok(Some((mask, sign)))
}

/// Sparse element of the exterior algebra on `n` generators.
///
/// Invariants: every stored mask is below 2^n and no stored coefficient
/// is exactly zero. Only exact zeros are pruned; [`Multivector::prune`]
/// exists for explicit thresholding but is never applied implicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    n: usize,
    terms: BTreeMap<BladeMask, Complex64>,
}

impl Multivector {
    /// The zero element on `n` generators.
    pub fn zero(n: usize) -> Result<Self> {
        check_generator_count(n)?;
        Ok(Self {
            n,
            terms: BTreeMap::new(),
        })
    }

    /// The scalar `c` as a multivector.
    pub fn scalar(n: usize, c: Complex64) -> Result<Self> {
        let mut mv = Self::zero(n)?;
        mv.insert(0, c)?;
        Ok(mv)
    }

    /// The grade-1 generator `e_index`, `index` in `1..=n`.
    pub fn basis_vector(n: usize, index: usize) -> Result<Self> {
        let mut mv = Self::zero(n)?;
        if index == 0 || index > n {
            return Err(Error::GeneratorIndex { index, n });
        }
        mv.insert(1 << (index - 1), Complex64::new(1.0, 0.0))?;
        Ok(mv)
    }

    /// The basis blade for `mask` with coefficient 1.
    pub fn basis_blade(n: usize, mask: BladeMask) -> Result<Self> {
        let mut mv = Self::zero(n)?;
        mv.insert(mask, Complex64::new(1.0, 0.0))?;
        Ok(mv)
    }

    /// Build from (mask, coefficient) pairs; duplicate masks accumulate.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BladeMask, Complex64)>,
    {
        let mut mv = Self::zero(n)?;
        for (mask, c) in terms {
            mv.insert(mask, c)?;
        }
        Ok(mv)
    }

    fn insert(&mut self, mask: BladeMask, c: Complex64) -> Result<()> {
        if u64::from(mask) >= (1u64 << self.n) {
            return Err(Error::GeneratorIndex {
                index: 32 - mask.leading_zeros() as usize,
                n: self.n,
            });
        }
        if !c.is_finite() {
            return Err(Error::NonFinite);
        }
        self.accumulate(mask, c);
        Ok(())
    }

    /// Add `c` to the coefficient at `mask`, dropping exact zeros. The
    /// caller guarantees the mask is in range.
    pub(crate) fn accumulate(&mut self, mask: BladeMask, c: Complex64) {
        let entry = self.terms.entry(mask).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if entry.re == 0.0 && entry.im == 0.0 {
            self.terms.remove(&mask);
        }
    }

    /// Generator count of the algebra this element lives in.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient at `mask`, zero when absent.
    pub fn coeff(&self, mask: BladeMask) -> Complex64 {
        self.terms
            .get(&mask)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Iterate stored (mask, coefficient) pairs in ascending mask order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (BladeMask, Complex64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GeneratorCount {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (mask, c) in other.iter_terms() {
            out.accumulate(mask, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (mask, c) in other.iter_terms() {
            out.accumulate(mask, -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -*c;
        }
        out
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: Complex64) -> Self {
        debug_assert!(c.is_finite());
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (mask, old) in self.iter_terms() {
            out.accumulate(mask, old * c);
        }
        out
    }

    /// Exterior product. Bilinear, associative, graded-anticommutative;
    /// blade pairs sharing a generator vanish.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (ma, ca) in self.iter_terms() {
            for (mb, cb) in other.iter_terms() {
                if ma & mb != 0 {
                    continue;
                }
                out.accumulate(ma | mb, ca * cb * reorder_sign(ma, mb));
            }
        }
        Ok(out)
    }

    /// Keep exactly the terms whose mask has popcount `k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.n {
            return Err(Error::GradeOutOfRange { grade: k, n: self.n });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.count_ones() as usize == k)
            .map(|(&m, &c)| (m, c))
            .collect();
        Ok(Self { n: self.n, terms })
    }

    /// True when every stored term has grade `k` (vacuously for zero).
    pub fn is_grade(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.count_ones() as usize == k)
    }

    /// Grades present, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut gs: Vec<usize> = self.terms.keys().map(|m| m.count_ones() as usize).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Reversion: grade-k terms pick up (-1)^(k(k-1)/2).
    pub fn reverse(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&m, &c)| {
                // k(k-1)/2 is odd exactly when floor(k/2) is odd
                let k = m.count_ones() as usize;
                let flip = (k / 2) % 2 == 1;
                (m, if flip { -c } else { c })
            })
            .collect();
        Self { n: self.n, terms }
    }

    /// Drop terms with |coefficient| <= `threshold`. Never called
    /// implicitly; arithmetic only removes exact zeros.
    pub fn prune(&self, threshold: f64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(_, c)| c.norm() > threshold)
            .map(|(&m, &c)| (m, c))
            .collect();
        Self { n: self.n, terms }
    }

    /// Largest |difference| over the union of both term sets.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_n(other)?;
        let mut max = 0.0f64;
        for (mask, c) in self.iter_terms() {
            let d = (c - other.coeff(mask)).norm();
            if d > max {
                max = d;
            }
        }
        for (mask, c) in other.iter_terms() {
            if !self.terms.contains_key(&mask) {
                let d = c.norm();
                if d > max {
                    max = d;
                }
            }
        }
        Ok(max)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

fn write_blade(f: &mut fmt::Formatter<'_>, mask: BladeMask) -> fmt::Result {
    let mut first = true;
    for i in 0..32 {
        if mask & (1 << i) != 0 {
            if !first {
                f.write_str("^")?;
            }
            write!(f, "e{}", i + 1)?;
            first = false;
        }
    }
    Ok(())
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: Complex64) -> fmt::Result {
    if c.im == 0.0 {
        write!(f, "{}", c.re)
    } else if c.re == 0.0 {
        if c.im == 1.0 {
            f.write_str("i")
        } else {
            write!(f, "{}i", c.im)
        }
    } else if c.im < 0.0 {
        write!(f, "({}-{}i)", c.re, -c.im)
    } else {
        write!(f, "({}+{}i)", c.re, c.im)
    }
}

fn split_sign(c: Complex64) -> (bool, Complex64) {
    if (c.im == 0.0 && c.re < 0.0) || (c.re == 0.0 && c.im < 0.0) {
        (true, -c)
    } else {
        (false, c)
    }
}

/// Text form: terms joined by `+`/`-`, blades as `e1^e2^e5`, the scalar
/// term bare, complex coefficients as `(a+bi)`. The output re-parses
/// under the expression grammar used by the CLI.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut masks: Vec<BladeMask> = self.terms.keys().copied().collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for (pos, &mask) in masks.iter().enumerate() {
            let (neg, mag) = split_sign(self.terms[&mask]);
            if pos == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if mask == 0 {
                write_coeff(f, mag)?;
            } else if mag == Complex64::new(1.0, 0.0) {
                write_blade(f, mask)?;
            } else {
                write_coeff(f, mag)?;
                f.write_str("*")?;
                write_blade(f, mask)?;
            }
        }
        Ok(())
    }
}
