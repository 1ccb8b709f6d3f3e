//! Sparse multivariate Laurent polynomials over exact rationals.
//!
//! Monomials may carry negative exponents, coefficients are
//! arbitrary-precision rationals, and terms are kept in a `BTreeMap` so every
//! iteration order (and hence every rendering) is deterministic.  The module
//! also provides the two nonstandard operations the multiplicity engines
//! rely on:
//!
//! * [`LaurentPoly::exact_div`] - division that must leave no remainder,
//!   with failure reported as [`Error::NonExactDivision`].  Every monomial
//!   is a unit in the Laurent ring, so the usual leading-term argument does
//!   not terminate by itself; termination is forced by confining candidate
//!   quotient terms to the exponent box that an exact quotient must occupy.
//! * [`ct_with_inverse_factors`] - the constant term of
//!   `f * prod (1 + m_s)^(-mult_s)` where each `m_s` has strictly positive
//!   weight under a [`RegionOrder`].  Positivity makes the geometric
//!   expansions finite once truncated at the weight needed to cancel the
//!   most negative weight occurring in `f`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::util::binomial;

/// A short inline variable name ("x1", "u12", ...), at most 8 bytes.
///
/// Ordering is byte-lexicographic on the padded array, which agrees with
/// string lexicographic order for ASCII names.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarName([u8; 8]);

impl VarName {
    /// # Panics
    /// When `name` is empty or longer than 8 bytes.
    pub fn new(name: &str) -> Self {
        let bytes = name.as_bytes();
        assert!(
            !bytes.is_empty() && bytes.len() <= 8 && !bytes.contains(&0),
            "variable name must be 1..=8 non-NUL bytes, got {name:?}"
        );
        let mut buf = [0u8; 8];
        buf[..bytes.len()].copy_from_slice(bytes);
        VarName(buf)
    }

    pub fn as_str(&self) -> &str {
        let end = self.0.iter().position(|&b| b == 0).unwrap_or(8);
        std::str::from_utf8(&self.0[..end]).expect("variable names are ASCII")
    }

    /// Convenience constructor for indexed families like `x1, x2, ...`.
    pub fn indexed(prefix: &str, i: usize) -> Self {
        VarName::new(&format!("{prefix}{i}"))
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl fmt::Debug for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// A Laurent monomial: the map variable -> nonzero signed exponent, kept as
/// a list sorted by variable name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExponentVector(SmallVec<[(VarName, i32); 4]>);

impl ExponentVector {
    /// The empty exponent vector, i.e. the monomial `1`.
    pub fn unit() -> Self {
        ExponentVector(SmallVec::new())
    }

    pub fn var(v: VarName) -> Self {
        ExponentVector::var_pow(v, 1)
    }

    pub fn var_pow(v: VarName, e: i32) -> Self {
        if e == 0 {
            return ExponentVector::unit();
        }
        let mut sv = SmallVec::new();
        sv.push((v, e));
        ExponentVector(sv)
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarName, i32)>) -> Self {
        let mut v: Vec<(VarName, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|&(name, _)| name);
        let mut sv: SmallVec<[(VarName, i32); 4]> = SmallVec::new();
        for (name, e) in v {
            match sv.last_mut() {
                Some((last, acc)) if *last == name => *acc += e,
                _ => sv.push((name, e)),
            }
        }
        sv.retain(|&mut (_, e)| e != 0);
        ExponentVector(sv)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: VarName) -> i32 {
        match self.0.binary_search_by_key(&v, |&(name, _)| name) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarName, i32)> + '_ {
        self.0.iter().copied()
    }

    /// Product of monomials: exponentwise sum, merging the sorted lists.
    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        let (a, b) = (&self.0, &other.0);
        let mut out: SmallVec<[(VarName, i32); 4]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ExponentVector(out)
    }

    /// The reciprocal monomial: all exponents negated.
    pub fn inverse(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, n: u32) -> ExponentVector {
        if n == 0 {
            return ExponentVector::unit();
        }
        ExponentVector(
            self.0
                .iter()
                .map(|&(v, e)| (v, e * n as i32))
                .collect(),
        )
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    /// Graded-lexicographic comparison: total degree first, then the first
    /// variable (in name order) with differing exponent decides.  This order
    /// is translation invariant, which is what exact division needs.
    pub fn cmp_grlex(&self, other: &ExponentVector) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (ea, eb) = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => (ea, 0),
                    Ordering::Greater => (0, eb),
                    Ordering::Equal => (ea, eb),
                },
                (Some(&(_, ea)), None) => (ea, 0),
                (None, Some(&(_, eb))) => (0, eb),
                (None, None) => unreachable!(),
            };
            match ea.cmp(&eb) {
                Ordering::Equal => {
                    // Advance whichever side supplied the shared variable.
                    match (a.get(i), b.get(j)) {
                        (Some(&(va, _)), Some(&(vb, _))) => match va.cmp(&vb) {
                            Ordering::Less => i += 1,
                            Ordering::Greater => j += 1,
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                        },
                        (Some(_), None) => i += 1,
                        (None, Some(_)) => j += 1,
                        (None, None) => unreachable!(),
                    }
                }
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let s: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| format!("{}^{}", v, e))
            .collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Weight assignment on variables used to orient region expansions.
/// Variables absent from the map weigh `0`.
#[derive(Clone, Debug, Default)]
pub struct RegionOrder {
    weights: BTreeMap<VarName, i64>,
}

impl RegionOrder {
    pub fn from_weights(pairs: impl IntoIterator<Item = (VarName, i64)>) -> Self {
        RegionOrder {
            weights: pairs.into_iter().collect(),
        }
    }

    pub fn weight(&self, ev: &ExponentVector) -> i64 {
        ev.iter()
            .map(|(v, e)| self.weights.get(&v).copied().unwrap_or(0) * e as i64)
            .sum()
    }
}

/// One factor `(1 + monomial)^(-multiplicity)` of a region expansion.
#[derive(Clone, Debug)]
pub struct InverseFactor {
    pub monomial: ExponentVector,
    pub multiplicity: u32,
}

/// A sparse Laurent polynomial with exact rational coefficients.
///
/// The zero polynomial has no terms; stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(ExponentVector::unit(), c);
        p
    }

    pub fn constant_i64(c: i64) -> Self {
        LaurentPoly::constant(BigRational::from(BigInt::from(c)))
    }

    pub fn monomial(ev: ExponentVector, c: BigRational) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(ev, c);
        p
    }

    /// The single-variable monomial `v^e` with coefficient `1`.
    pub fn var_pow(v: VarName, e: i32) -> Self {
        LaurentPoly::monomial(ExponentVector::var_pow(v, e), BigRational::one())
    }

    pub fn var(v: VarName) -> Self {
        LaurentPoly::var_pow(v, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    /// Adds `c * ev`, removing the term if the sum cancels.
    pub fn add_term(&mut self, ev: ExponentVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ev) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of the given monomial (`0` when absent).
    pub fn coeff(&self, ev: &ExponentVector) -> BigRational {
        self.terms.get(ev).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(&ExponentVector::unit())
    }

    /// Substitutes `v -> 1/v` for every variable.
    pub fn invert_vars(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ev, c) in &self.terms {
            out.add_term(ev.inverse(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(ev, q)| (ev.clone(), q * c))
                .collect(),
        }
    }

    pub fn mul_by_monomial(&self, ev: &ExponentVector, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, q)| (e.mul(ev), q * c))
                .collect(),
        }
    }

    /// All variables appearing in the support.
    pub fn vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        for ev in self.terms.keys() {
            for (v, _) in ev.iter() {
                out.insert(v);
            }
        }
        out
    }

    /// Minimum and maximum exponent of `v` over the support, counting `0`
    /// for terms not mentioning `v`.  Returns `(0, 0)` for the zero
    /// polynomial.
    pub fn var_range(&self, v: VarName) -> (i32, i32) {
        let (mut lo, mut hi) = (i32::MAX, i32::MIN);
        for ev in self.terms.keys() {
            let e = ev.get(v);
            lo = lo.min(e);
            hi = hi.max(e);
        }
        if self.terms.is_empty() {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    fn leading_grlex(&self) -> Option<(&ExponentVector, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.cmp_grlex(b))
    }

    /// Exact quotient `self / g`.
    ///
    /// # Errors
    /// [`Error::NonExactDivision`] when no exact Laurent quotient exists.
    ///
    /// # Panics
    /// When `g` is zero (the caller contract requires a nonzero divisor).
    pub fn exact_div(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Every variable range of an exact quotient is pinned by
        // range(f) = range(q) + range(g), which both bounds the search and
        // rejects impossible divisions up front.
        let mut union: BTreeSet<VarName> = self.vars();
        union.extend(g.vars());
        let mut boxes: Vec<(VarName, i32, i32)> = Vec::new();
        for &v in &union {
            let (flo, fhi) = self.var_range(v);
            let (glo, ghi) = g.var_range(v);
            let (lo, hi) = (flo - glo, fhi - ghi);
            if lo > hi {
                return Err(Error::NonExactDivision(format!(
                    "variable {v} has range {} in the dividend but {} in the divisor",
                    (fhi - flo),
                    (ghi - glo)
                )));
            }
            boxes.push((v, lo, hi));
        }
        let (g_lead, g_lead_coef) = g.leading_grlex().expect("nonzero divisor");
        let g_lead = g_lead.clone();
        let g_lead_coef = g_lead_coef.clone();

        let mut r = self.clone();
        let mut q = LaurentPoly::zero();
        while let Some((r_lead, r_coef)) = r.leading_grlex() {
            let t = r_lead.mul(&g_lead.inverse());
            for &(v, lo, hi) in &boxes {
                let e = t.get(v);
                if e < lo || e > hi {
                    return Err(Error::NonExactDivision(format!(
                        "quotient term {t} leaves the feasible exponent box at {v}"
                    )));
                }
            }
            let c = r_coef / &g_lead_coef;
            r -= &g.mul_by_monomial(&t, &c);
            q.add_term(t, c);
        }
        Ok(q)
    }

    /// Multiplies, keeping only terms of nonpositive weight.  Used by the
    /// region expansion, where positive-weight terms can never contribute to
    /// the constant term again.
    fn mul_prune_positive(&self, other: &LaurentPoly, region: &RegionOrder) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let ev = ea.mul(eb);
                if region.weight(&ev) > 0 {
                    continue;
                }
                out.add_term(ev, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(ev, c)| {
                if ev.is_unit() {
                    format!("{c}")
                } else {
                    format!("{c} * {ev}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (ev, c) in &rhs.terms {
            self.add_term(ev.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (ev, c) in &rhs.terms {
            self.add_term(ev.clone(), -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(ev, c)| (ev.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        // Iterate the smaller operand on the outside: fewer passes over the
        // accumulating tree.
        let (small, big) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (ea, ca) in &small.terms {
            for (eb, cb) in &big.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

/// Constant term of `f * prod_s (1 + m_s)^(-mult_s)` under the region
/// orientation `region`.
///
/// Every `m_s` must have strictly positive weight; each inverse factor is
/// then expanded as the finite sum
/// `sum_n (-1)^n C(mult + n - 1, n) m^n` up to the weight that the most
/// negative-weight term of `f` can still cancel.  Terms of positive weight
/// are pruned eagerly since later factors only add nonnegative weight.
///
/// # Errors
/// [`Error::BadRegion`] when some factor monomial has nonpositive weight.
pub fn ct_with_inverse_factors(
    f: &LaurentPoly,
    factors: &[InverseFactor],
    region: &RegionOrder,
) -> Result<BigRational> {
    for fac in factors {
        let w = region.weight(&fac.monomial);
        if w <= 0 {
            return Err(Error::BadRegion(format!(
                "factor monomial {} has weight {w}, expected positive",
                fac.monomial
            )));
        }
        assert!(fac.multiplicity >= 1, "factor multiplicity must be >= 1");
    }
    // Terms of positive weight in f can never reach weight zero again.
    let mut r = LaurentPoly::zero();
    for (ev, c) in &f.terms {
        if region.weight(ev) <= 0 {
            r.add_term(ev.clone(), c.clone());
        }
    }
    for fac in factors {
        if r.is_zero() {
            break;
        }
        let w = region.weight(&fac.monomial);
        let min_weight = r
            .terms
            .keys()
            .map(|ev| region.weight(ev))
            .min()
            .unwrap_or(0);
        let budget = (-min_weight).max(0);
        let n_max = (budget / w) as u64;
        let mut series = LaurentPoly::zero();
        for n in 0..=n_max {
            let mut c = BigRational::from(binomial(fac.multiplicity as u64 + n - 1, n));
            if n % 2 == 1 {
                c = -c;
            }
            series.add_term(fac.monomial.pow(n as u32), c);
        }
        r = r.mul_prune_positive(&series, region);
    }
    Ok(r.constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> VarName {
        VarName::new(name)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    /// `x^ex y^ey` with integer coefficient, for terse test construction.
    fn term(c: i64, pairs: &[(&str, i32)]) -> LaurentPoly {
        LaurentPoly::monomial(
            ExponentVector::from_pairs(pairs.iter().map(|&(n, e)| (v(n), e))),
            q(c),
        )
    }

    #[test]
    fn varname_ordering_is_lexicographic() {
        assert!(v("t1") < v("t2"));
        assert!(v("t2") < v("u1"));
        assert!(v("u2") < v("x1"));
        assert!(v("x1") < v("x10"));
        assert!(v("x10") < v("x2"));
        assert_eq!(v("y1").as_str(), "y1");
    }

    #[test]
    fn exponent_vector_algebra() {
        let xy = ExponentVector::from_pairs([(v("x"), 1), (v("y"), -1)]);
        assert_eq!(xy.mul(&xy.inverse()), ExponentVector::unit());
        assert_eq!(xy.pow(3).get(v("y")), -3);
        assert_eq!(xy.total_degree(), 0);
        let collapsed = ExponentVector::from_pairs([(v("x"), 2), (v("x"), -2), (v("y"), 1)]);
        assert_eq!(collapsed, ExponentVector::var(v("y")));
    }

    #[test]
    fn addition_cancels() {
        let f = &term(1, &[("x", 1)]) + &term(-1, &[("x", 1)]);
        assert!(f.is_zero());
        assert_eq!(format!("{f}"), "0");
    }

    #[test]
    fn product_of_conjugate_binomials() {
        // (1 + x/y)(1 + y/x) = 2 + x/y + y/x
        let f = &(&LaurentPoly::one() + &term(1, &[("x", 1), ("y", -1)]))
            * &(&LaurentPoly::one() + &term(1, &[("x", -1), ("y", 1)]));
        let mut expect = LaurentPoly::constant_i64(2);
        expect += &term(1, &[("x", 1), ("y", -1)]);
        expect += &term(1, &[("x", -1), ("y", 1)]);
        assert_eq!(f, expect);
        assert_eq!(f.constant_term(), q(2));
    }

    #[test]
    fn invert_vars_and_constant_term() {
        let f = &term(1, &[("x", 1)]) + &term(1, &[("y", 1)]);
        let g = f.invert_vars();
        assert_eq!(g, &term(1, &[("x", -1)]) + &term(1, &[("y", -1)]));
        assert_eq!((&f * &g).constant_term(), q(2));
        assert_eq!(f.constant_term(), q(0));
    }

    #[test]
    fn display_is_deterministic() {
        let f = &(&term(2, &[]) + &term(1, &[("x", 1), ("y", -1)])) + &term(-3, &[("a", 2)]);
        assert_eq!(format!("{f}"), "2 + -3 * a^2 + 1 * x^1 y^-1");
    }

    #[test]
    fn exact_division_succeeds() {
        // (2 + x/y + y/x) / (1 + x/y) = 1 + y/x
        let f = &(&term(2, &[]) + &term(1, &[("x", 1), ("y", -1)])) + &term(1, &[("x", -1), ("y", 1)]);
        let g = &LaurentPoly::one() + &term(1, &[("x", 1), ("y", -1)]);
        let quotient = f.exact_div(&g).unwrap();
        assert_eq!(quotient, &LaurentPoly::one() + &term(1, &[("x", -1), ("y", 1)]));

        // (x^2 - y^2) / (x + y) = x - y
        let f = &term(1, &[("x", 2)]) - &term(1, &[("y", 2)]);
        let g = &term(1, &[("x", 1)]) + &term(1, &[("y", 1)]);
        assert_eq!(f.exact_div(&g).unwrap(), &term(1, &[("x", 1)]) - &term(1, &[("y", 1)]));
    }

    #[test]
    fn exact_division_rejects_non_multiples() {
        let f = &LaurentPoly::one() + &term(1, &[("x", 1)]);
        let g = &LaurentPoly::one() + &term(1, &[("y", 1)]);
        assert!(matches!(f.exact_div(&g), Err(Error::NonExactDivision(_))));

        let f = &LaurentPoly::one() + &term(1, &[("x", 1)]);
        let g = &LaurentPoly::one() + &term(1, &[("x", 2)]);
        assert!(matches!(f.exact_div(&g), Err(Error::NonExactDivision(_))));
    }

    #[test]
    fn exact_division_with_rational_coefficients() {
        let f = term(3, &[("x", 1), ("y", -2)]);
        let g = LaurentPoly::monomial(ExponentVector::var(v("y")), q(3) / q(2));
        let quotient = f.exact_div(&g).unwrap();
        assert_eq!(quotient, term(2, &[("x", 1), ("y", -3)]));
    }

    #[test]
    fn region_weights() {
        let region = RegionOrder::from_weights([(v("y"), 1)]);
        let w = ExponentVector::from_pairs([(v("x"), -1), (v("y"), 1)]);
        assert_eq!(region.weight(&w), 1);
        assert_eq!(region.weight(&w.inverse()), -1);
        assert_eq!(region.weight(&ExponentVector::var_pow(v("x"), 5)), 0);
    }

    #[test]
    fn ct_expansion_of_pure_positive_weight_is_zero() {
        // CT[ w * (1 + w)^-2 ] = 0 for w of weight 1.
        let w = ExponentVector::from_pairs([(v("x"), -1), (v("y"), 1)]);
        let region = RegionOrder::from_weights([(v("y"), 1)]);
        let f = LaurentPoly::monomial(w.clone(), q(1));
        let ct = ct_with_inverse_factors(
            &f,
            &[InverseFactor {
                monomial: w,
                multiplicity: 2,
            }],
            &region,
        )
        .unwrap();
        assert_eq!(ct, q(0));
    }

    #[test]
    fn ct_expansion_recovers_exact_quotient() {
        // (1 + w)^2 * (1 + w)^-2 has constant term 1.
        let w = ExponentVector::from_pairs([(v("x"), -1), (v("y"), 1)]);
        let region = RegionOrder::from_weights([(v("y"), 1)]);
        let mut f = LaurentPoly::one();
        f += &term(2, &[("x", -1), ("y", 1)]);
        f += &term(1, &[("x", -2), ("y", 2)]);
        let ct = ct_with_inverse_factors(
            &f,
            &[InverseFactor {
                monomial: w,
                multiplicity: 2,
            }],
            &region,
        )
        .unwrap();
        assert_eq!(ct, q(1));
    }

    #[test]
    fn ct_expansion_matches_division_on_balanced_input() {
        // f = (2 + w + w^-1) * (1 + w): dividing by (1 + w) and expanding
        // (1 + w)^-1 must agree.
        let w_ev = ExponentVector::from_pairs([(v("x"), -1), (v("y"), 1)]);
        let region = RegionOrder::from_weights([(v("y"), 1)]);
        let wpoly = LaurentPoly::monomial(w_ev.clone(), q(1));
        let base = &(&term(2, &[]) + &wpoly) + &wpoly.invert_vars();
        let one_plus_w = &LaurentPoly::one() + &wpoly;
        let f = &base * &one_plus_w;
        let via_division = f.exact_div(&one_plus_w).unwrap().constant_term();
        let via_region = ct_with_inverse_factors(
            &f,
            &[InverseFactor {
                monomial: w_ev,
                multiplicity: 1,
            }],
            &region,
        )
        .unwrap();
        assert_eq!(via_division, q(2));
        assert_eq!(via_region, q(2));
    }

    #[test]
    fn ct_rejects_nonpositive_weight() {
        let region = RegionOrder::from_weights([(v("y"), 1)]);
        let bad = InverseFactor {
            monomial: ExponentVector::var(v("x")),
            multiplicity: 1,
        };
        let r = ct_with_inverse_factors(&LaurentPoly::one(), &[bad], &region);
        assert!(matches!(r, Err(Error::BadRegion(_))));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
            let names = ["x", "y", "z"];
            proptest::collection::vec(
                (
                    proptest::sample::select(names.to_vec()),
                    -3i32..=3,
                    -3i32..=3,
                    -4i64..=4,
                ),
                0..max_terms,
            )
            .prop_map(move |raw| {
                let mut p = LaurentPoly::zero();
                for (name, ex, ey, c) in raw {
                    let ev = ExponentVector::from_pairs([
                        (VarName::new(name), ex),
                        (VarName::new("w"), ey),
                    ]);
                    p.add_term(ev, BigRational::from(BigInt::from(c)));
                }
                p
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn multiplication_commutes(f in arb_poly(6), g in arb_poly(6)) {
                prop_assert_eq!(&f * &g, &g * &f);
            }

            #[test]
            fn multiplication_distributes(f in arb_poly(5), g in arb_poly(5), h in arb_poly(5)) {
                let lhs = &f * &(&g + &h);
                let rhs = &(&f * &g) + &(&f * &h);
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn multiplication_associates(f in arb_poly(4), g in arb_poly(4), h in arb_poly(4)) {
                prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            }

            #[test]
            fn division_inverts_multiplication(f in arb_poly(5), g in arb_poly(5)) {
                prop_assume!(!g.is_zero());
                let product = &f * &g;
                let quotient = product.exact_div(&g).unwrap();
                prop_assert_eq!(quotient, f);
            }

            #[test]
            fn inversion_preserves_constant_term(f in arb_poly(6)) {
                prop_assert_eq!(f.invert_vars().constant_term(), f.constant_term());
                prop_assert_eq!(f.invert_vars().invert_vars(), f);
            }
        }
    }
}
