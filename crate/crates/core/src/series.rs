//! Truncated Poincare series and rational-form utilities.
//!
//! A [`SeriesTruncation`] stores every coefficient of a multivariate power
//! series up to a fixed total degree, over a declared split variable set
//! (`t`-variables grading the even letters, `u`-variables grading the odd
//! ones).  Zero coefficients are not stored, and two truncations compare
//! equal only when the variable sets and the truncation degree agree.
//!
//! A [`RationalForm`] is a closed-form answer `numerator / prod (1 - m)^e`;
//! [`rational_expand`] turns one into a `SeriesTruncation` so that closed
//! forms can be compared coefficient-by-coefficient against series built
//! from raw multiplicity data.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::characters::Characters;
use crate::error::Result;
use crate::laurent::{ExponentVector, LaurentPoly, VarName};
use crate::multiplicity::{m_large, m_prime, mbar_large, mbar_prime};
use crate::par;
use crate::partitions::{
    enumerate_hook, is_in_hook, is_large, join_typical, HookParams, Partition,
};
use crate::symfunc::{hook_schur_eval, schur_eval, Alphabet};

/// A power series in split variables, truncated at a total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncation {
    tvars: Vec<VarName>,
    uvars: Vec<VarName>,
    max_deg: u32,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl SeriesTruncation {
    pub fn new(tvars: &[VarName], uvars: &[VarName], max_deg: u32) -> Self {
        SeriesTruncation {
            tvars: tvars.to_vec(),
            uvars: uvars.to_vec(),
            max_deg,
            terms: BTreeMap::new(),
        }
    }

    pub fn tvars(&self) -> &[VarName] {
        &self.tvars
    }

    pub fn uvars(&self) -> &[VarName] {
        &self.uvars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_deg
    }

    fn check_exponent(&self, ev: &ExponentVector) {
        for (var, exp) in ev.iter() {
            assert!(exp > 0, "series terms cannot carry negative exponents");
            assert!(
                self.tvars.contains(&var) || self.uvars.contains(&var),
                "series term uses undeclared variable {var}"
            );
        }
    }

    /// Adds `coeff * ev`, dropping the term if it exceeds the truncation
    /// degree and cancelling stored zeros.
    pub fn add_term(&mut self, ev: ExponentVector, coeff: BigRational) {
        if coeff.is_zero() || ev.total_degree() > self.max_deg as i64 {
            return;
        }
        self.check_exponent(&ev);
        let entry = self.terms.entry(ev).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key: Vec<ExponentVector> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(e, _)| e.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    /// Adds every term of `poly`, truncating as it goes.
    pub fn add_poly(&mut self, poly: &LaurentPoly) {
        for (ev, c) in poly.iter() {
            self.add_term(ev.clone(), c.clone());
        }
    }

    /// Builds a truncation from a polynomial, discarding terms beyond
    /// `max_deg`.
    pub fn from_poly(
        poly: &LaurentPoly,
        tvars: &[VarName],
        uvars: &[VarName],
        max_deg: u32,
    ) -> Self {
        let mut out = SeriesTruncation::new(tvars, uvars, max_deg);
        out.add_poly(poly);
        out
    }

    pub fn coeff(&self, ev: &ExponentVector) -> BigRational {
        self.terms.get(ev).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&ExponentVector::unit())
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

    /// Terms sorted by total degree, then by exponent vector; this is the
    /// order used for display and serialization.
    pub fn sorted_terms(&self) -> Vec<(ExponentVector, BigRational)> {
        let mut out: Vec<(ExponentVector, BigRational)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        out.sort_by(|(a, _), (b, _)| a.total_degree().cmp(&b.total_degree()).then(a.cmp(b)));
        out
    }

    /// The sub-series of terms with total degree exactly `d`.
    pub fn degree_slice(&self, d: u32) -> Vec<(ExponentVector, BigRational)> {
        self.sorted_terms()
            .into_iter()
            .filter(|(e, _)| e.total_degree() == d as i64)
            .collect()
    }
}

impl fmt::Display for SeriesTruncation {
    /// One line per term: `coefficient  t-monomial | u-monomial`, in the
    /// order of [`SeriesTruncation::sorted_terms`].  The constant term is
    /// always printed, even when zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |ev: &ExponentVector, vars: &[VarName]| -> String {
            let pieces: Vec<String> = vars
                .iter()
                .filter_map(|&v| {
                    let e = ev.get(v);
                    if e == 0 {
                        None
                    } else if e == 1 {
                        Some(v.to_string())
                    } else {
                        Some(format!("{v}^{e}"))
                    }
                })
                .collect();
            if pieces.is_empty() {
                "1".to_string()
            } else {
                pieces.join(" ")
            }
        };
        let mut terms = self.sorted_terms();
        if self.coeff(&ExponentVector::unit()).is_zero() {
            terms.insert(0, (ExponentVector::unit(), BigRational::zero()));
        }
        for (i, (ev, c)) in terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c}  {} | {}", part(ev, &self.tvars), part(ev, &self.uvars))?;
        }
        Ok(())
    }
}

/// A closed form `numerator / prod_i (1 - m_i)^{e_i}`.
#[derive(Clone, Debug)]
pub struct RationalForm {
    pub numerator: LaurentPoly,
    /// Denominator factors as (monomial, multiplicity) pairs.
    pub denominator: Vec<(ExponentVector, u32)>,
}

impl RationalForm {
    pub fn new(numerator: LaurentPoly, denominator: Vec<(ExponentVector, u32)>) -> Self {
        for (m, _) in &denominator {
            assert!(
                m.total_degree() > 0,
                "denominator monomials must have positive total degree"
            );
        }
        RationalForm {
            numerator,
            denominator,
        }
    }
}

/// Expands a rational form as a series truncated at `max_deg`: each factor
/// `(1 - m)^-e` becomes `sum_j binomial(e + j - 1, j) m^j`.
pub fn rational_expand(
    form: &RationalForm,
    tvars: &[VarName],
    uvars: &[VarName],
    max_deg: u32,
) -> SeriesTruncation {
    let mut acc = form.numerator.clone();
    for (m, e) in &form.denominator {
        let deg = m.total_degree() as u32;
        let mut geom = LaurentPoly::zero();
        let mut j = 0u32;
        while j * deg <= max_deg {
            let c = BigRational::from(crate::util::binomial((*e as u64) + (j as u64) - 1, j as u64));
            geom.add_term(m.pow(j), c);
            j += 1;
        }
        let product = &acc * &geom;
        let mut truncated = LaurentPoly::zero();
        for (ev, c) in product.iter() {
            if ev.total_degree() <= max_deg as i64 {
                truncated.add_term(ev.clone(), c.clone());
            }
        }
        acc = truncated;
    }
    SeriesTruncation::from_poly(&acc, tvars, uvars, max_deg)
}

/// The conventional variable names for an `a x b` display grid: `t1..ta`
/// for the first block and `u1..ub` for the second.
pub fn standard_vars(a: usize, b: usize) -> (Vec<VarName>, Vec<VarName>) {
    let tvars = (1..=a).map(|i| VarName::indexed("t", i)).collect();
    let uvars = (1..=b).map(|j| VarName::indexed("u", j)).collect();
    (tvars, uvars)
}

/// Partitions of `n` with at most `rows` rows.
fn bounded_row_partitions(rows: usize, n: u64) -> Vec<Partition> {
    enumerate_hook(HookParams::new(rows as u32, 0), n)
}

fn t_series_impl(
    h: HookParams,
    a: usize,
    b: usize,
    max_deg: u32,
    chars: &Characters,
    bar: bool,
) -> Result<SeriesTruncation> {
    let (tvars, uvars) = standard_vars(a, b);
    let talpha = Alphabet::from_vars(&tvars);
    let ualpha = Alphabet::from_vars(&uvars);
    let rows = h.big_hook_rows();
    let cols = h.big_hook_cols();
    // alpha(lam) has at most `rows` rows and grades the t's; beyond `a`
    // rows the Schur factor dies, so both bounds apply.
    let arows = (a as u32).min(rows) as usize;
    let brows = (b as u32).min(cols) as usize;
    let mut items = Vec::new();
    for da in 0..=max_deg as u64 {
        for db in 0..=(max_deg as u64 - da) {
            for alpha in bounded_row_partitions(arows, da) {
                for beta in bounded_row_partitions(brows, db) {
                    let lam = join_typical(&alpha, &beta, rows, cols)?;
                    items.push((alpha.clone(), beta, lam));
                }
            }
        }
    }
    let contributions = par::map_vec(items, |(alpha, beta, lam)| -> Result<LaurentPoly> {
        let m: BigInt = if is_large(&lam, h) {
            if bar {
                mbar_large(&lam, h)?
            } else {
                m_large(&lam, h)?
            }
        } else if bar {
            // Degenerate corners (one block empty) produce typical shapes
            // that are not large; fall back to the character sum.
            chars.mbar_oracle(h.k, h.ell, &lam)?
        } else {
            chars.m_oracle(h.k, h.ell, &lam)?
        };
        if m.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let product = &schur_eval(&alpha, &talpha) * &schur_eval(&beta, &ualpha);
        Ok(product.scale(&BigRational::from(m)))
    });
    let mut out = SeriesTruncation::new(&tvars, &uvars, max_deg);
    for c in contributions {
        out.add_poly(&c?);
    }
    Ok(out)
}

/// The typical-shape series `T`: the sum over typical `lam`, split as
/// rectangle + `alpha` + `beta'`, of `m_lam * S_alpha(t's) * S_beta(u's)`,
/// graded by `|alpha| + |beta|` and truncated at `max_deg`.
///
/// `chars` backs the rare shapes (degenerate block sizes only) where the
/// division formula does not apply.
pub fn t_series(
    h: HookParams,
    a: usize,
    b: usize,
    max_deg: u32,
    chars: &Characters,
) -> Result<SeriesTruncation> {
    t_series_impl(h, a, b, max_deg, chars, false)
}

/// The one-box-enlarged variant of [`t_series`].
pub fn tbar_series(
    h: HookParams,
    a: usize,
    b: usize,
    max_deg: u32,
    chars: &Characters,
) -> Result<SeriesTruncation> {
    t_series_impl(h, a, b, max_deg, chars, true)
}

fn p_series_impl<F>(
    h: HookParams,
    a: usize,
    b: usize,
    max_deg: u32,
    skip_outside_big_hook: bool,
    eval: F,
) -> Result<SeriesTruncation>
where
    F: Fn(&Partition) -> Result<BigInt> + Sync + Send,
{
    let (tvars, uvars) = standard_vars(a, b);
    let talpha = Alphabet::from_vars(&tvars);
    let ualpha = Alphabet::from_vars(&uvars);
    let big = h.big_hook();
    let mut items = Vec::new();
    for n in 0..=max_deg as u64 {
        items.extend(enumerate_hook(HookParams::new(a as u32, b as u32), n));
    }
    let contributions = par::map_vec(items, |lam| -> Result<LaurentPoly> {
        if skip_outside_big_hook && !is_in_hook(&lam, big) {
            return Ok(LaurentPoly::zero());
        }
        let m = eval(&lam)?;
        if m.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        Ok(hook_schur_eval(&lam, &talpha, &ualpha).scale(&BigRational::from(m)))
    });
    let mut out = SeriesTruncation::new(&tvars, &uvars, max_deg);
    for c in contributions {
        out.add_poly(&c?);
    }
    Ok(out)
}

/// The primed series `P'`: the sum over `lam` in the display hook
/// `H(a, b)` with `|lam| <= max_deg` of `m'_lam * HS_lam(t's; u's)`.
pub fn pprime_series(h: HookParams, a: usize, b: usize, max_deg: u32) -> Result<SeriesTruncation> {
    // Outside the big hook the hook Schur value at (Z0; Z1) vanishes
    // identically, so the primed coefficient is zero by definition.
    p_series_impl(h, a, b, max_deg, true, |lam| m_prime(lam, h))
}

/// The one-box-enlarged variant of [`pprime_series`].
pub fn pbarprime_series(
    h: HookParams,
    a: usize,
    b: usize,
    max_deg: u32,
) -> Result<SeriesTruncation> {
    p_series_impl(h, a, b, max_deg, true, |lam| mbar_prime(lam, h))
}

/// The reference series `P` built from character-sum multiplicities; no
/// support shortcut is taken, every coefficient is a full character sum.
pub fn p_oracle_series(
    h: HookParams,
    a: usize,
    b: usize,
    max_deg: u32,
    chars: &Characters,
) -> Result<SeriesTruncation> {
    p_series_impl(h, a, b, max_deg, false, |lam| {
        chars.m_oracle(h.k, h.ell, lam)
    })
}

/// Outcome of the numerator symmetry test for a rational form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalEquation {
    pub holds: bool,
    /// The sign `(-1)^((a-1)(k+l)+1)` the transform is expected to carry.
    pub sign: i8,
}

/// Tests whether the numerator `n` of a rational form over the standard
/// denominator `prod (1 - m_i)^{e_i}` satisfies the palindromic functional
/// equation of the full invariant series for parameters `(k, l)` and
/// variable counts `(a, b)`.
///
/// Substituting reciprocal variables into `n / prod (1 - m_i)^{e_i}` and
/// clearing denominators multiplies the numerator by
/// `prod m_i^{e_i} * (-1)^{sum e_i}`; the equation holds when that equals
/// `sign * (prod t)^(k^2 + l^2) * (prod u)^(2kl) * n`.
pub fn functional_equation_check(
    numerator: &LaurentPoly,
    denominator: &[(ExponentVector, u32)],
    k: u32,
    l: u32,
    tvars: &[VarName],
    uvars: &[VarName],
) -> FunctionalEquation {
    let a = tvars.len() as i64;
    let kl = (k + l) as i64;
    let exponent = (a - 1) * kl + 1;
    let sign: i8 = if exponent.rem_euclid(2) == 0 { 1 } else { -1 };

    let mut lhs = numerator.invert_vars();
    let mut total_mult = 0u64;
    for (m, e) in denominator {
        lhs = lhs.mul_by_monomial(&m.pow(*e), &BigRational::one());
        total_mult += *e as u64;
    }
    if total_mult % 2 == 1 {
        lhs = -&lhs;
    }

    let mut shift = ExponentVector::unit();
    let rows = (k * k + l * l) as i32;
    let cols = (2 * k * l) as i32;
    for &t in tvars {
        shift = shift.mul(&ExponentVector::var_pow(t, rows));
    }
    for &u in uvars {
        shift = shift.mul(&ExponentVector::var_pow(u, cols));
    }
    let mut rhs = numerator.mul_by_monomial(&shift, &BigRational::one());
    if sign < 0 {
        rhs = -&rhs;
    }

    FunctionalEquation {
        holds: lhs == rhs,
        sign,
    }
}
