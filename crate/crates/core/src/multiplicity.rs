//! The torus constant-term route to invariant multiplicities.
//!
//! For block sizes `(k, l)` the even and odd root alphabets are
//!
//! ```text
//! Z0 = { x_i / x_j : i, j <= k } ∪ { y_i / y_j : i, j <= l }   (k^2 + l^2)
//! Z1 = { x_i / y_j } ∪ { y_j / x_i }                            (2 k l)
//! ```
//!
//! and the multiplicity of `S_lam` in the invariant ring is a constant term
//! of `HS_lam(Z0; Z1)` against the Weyl factor, divided by `k! l!`.  Two
//! evaluation strategies are provided:
//!
//! * **exact division** ([`m_large`], [`mbar_large`]): divide the hook
//!   Schur value by `prod_{z in Z1} (1 + z)` as Laurent polynomials, then
//!   read off the constant term.  The division is exact precisely on the
//!   shapes the theory guarantees (the *large* ones), and the guard is
//!   strict: non-large input is refused rather than silently mis-evaluated.
//! * **region expansion** ([`m_prime`], [`mbar_prime`]): expand the same
//!   inverse factors as geometric series in the region where every `y` is
//!   small against every `x`, using the pairwise rewrite
//!   `(1 + x/y)^-1 (1 + y/x)^-1 = (y/x) (1 + y/x)^-2` so that every series
//!   monomial has positive weight.  This evaluates the primed
//!   multiplicities, defined for every hook shape; on large shapes they
//!   agree with the unprimed ones.
//!
//! The `bar` variants insert the extra factor `sum of Z0 ∪ Z1`, which
//! implements adding one box to `lam` before extracting multiplicities.
//!
//! [`m_ct`] is the dispatcher the command line uses: division when the
//! shape is large, region expansion for other shapes in the big hook, and
//! an immediate zero for shapes outside it, where the support theorem rules
//! out invariants.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;

use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, InverseFactor, LaurentPoly, RegionOrder, VarName};
use crate::partitions::{is_in_hook, is_large, HookParams, Partition};
use crate::symfunc::{hook_schur_eval, weyl_delta, Alphabet};
use crate::util::{factorial, rational_to_integer, rational_to_nonneg_integer};

/// The evaluation alphabets and fixed factors for one choice of `(k, l)`.
pub struct SuperAlphabets {
    h: HookParams,
    xvars: Vec<VarName>,
    yvars: Vec<VarName>,
    z0: Alphabet,
    z1: Alphabet,
    weyl: LaurentPoly,
    z1_one_plus: LaurentPoly,
}

impl SuperAlphabets {
    pub fn new(h: HookParams) -> Self {
        let xvars: Vec<VarName> = (1..=h.k as usize).map(|i| VarName::indexed("x", i)).collect();
        let yvars: Vec<VarName> = (1..=h.ell as usize).map(|j| VarName::indexed("y", j)).collect();
        let ratio = |num: VarName, den: VarName| ExponentVector::from_pairs([(num, 1), (den, -1)]);

        let mut z0 = Vec::new();
        for &xi in &xvars {
            for &xj in &xvars {
                z0.push(ratio(xi, xj));
            }
        }
        for &yi in &yvars {
            for &yj in &yvars {
                z0.push(ratio(yi, yj));
            }
        }
        let mut z1 = Vec::new();
        for &xi in &xvars {
            for &yj in &yvars {
                z1.push(ratio(xi, yj));
            }
        }
        for &yj in &yvars {
            for &xi in &xvars {
                z1.push(ratio(yj, xi));
            }
        }

        let weyl = &weyl_delta(&xvars) * &weyl_delta(&yvars);
        let mut z1_one_plus = LaurentPoly::one();
        for z in &z1 {
            let factor = &LaurentPoly::one() + &LaurentPoly::monomial(z.clone(), BigRational::one());
            z1_one_plus = &z1_one_plus * &factor;
        }

        SuperAlphabets {
            h,
            xvars,
            yvars,
            z0: Alphabet::new(z0),
            z1: Alphabet::new(z1),
            weyl,
            z1_one_plus,
        }
    }

    pub fn hook_params(&self) -> HookParams {
        self.h
    }

    pub fn z0(&self) -> &Alphabet {
        &self.z0
    }

    pub fn z1(&self) -> &Alphabet {
        &self.z1
    }

    /// The torus variables `x1..xk`.
    pub fn xvars(&self) -> &[VarName] {
        &self.xvars
    }

    /// The torus variables `y1..yl`.
    pub fn yvars(&self) -> &[VarName] {
        &self.yvars
    }

    /// `1 / (k! l!)`, the torus normalization.
    fn norm(&self) -> BigRational {
        BigRational::new(
            BigInt::one(),
            factorial(self.h.k as u64) * factorial(self.h.ell as u64),
        )
    }

    /// The inner product of Laurent polynomials supported on the torus:
    /// `(1/(k! l!)) CT[ weyl * f * conj(g) ]`, where conjugation inverts
    /// every variable.
    pub fn inner_product(&self, f: &LaurentPoly, g: &LaurentPoly) -> BigRational {
        let prod = &(&self.weyl * f) * &g.invert_vars();
        prod.constant_term() * self.norm()
    }

    /// `sum of Z0 + sum of Z1`, the one-box enlargement factor.
    fn box_sum(&self) -> LaurentPoly {
        &self.z0.sum() + &self.z1.sum()
    }

    /// Region for the geometric expansions: every `y` infinitesimal
    /// against every `x`.
    fn region(&self) -> RegionOrder {
        RegionOrder::from_weights(self.yvars.iter().map(|&y| (y, 1i64)))
    }

    /// The combined prefactor `prod_{i,j} x_i^-1 y_j` of the pairwise
    /// rewrite, as a single monomial.
    fn prime_prefactor(&self) -> ExponentVector {
        let mut pairs = Vec::new();
        for &x in &self.xvars {
            pairs.push((x, -(self.h.ell as i32)));
        }
        for &y in &self.yvars {
            pairs.push((y, self.h.k as i32));
        }
        ExponentVector::from_pairs(pairs)
    }

    /// One inverse factor `(1 + x_i^-1 y_j)^-2` per variable pair.
    fn prime_factors(&self) -> Vec<InverseFactor> {
        let mut out = Vec::new();
        for &x in &self.xvars {
            for &y in &self.yvars {
                out.push(InverseFactor {
                    monomial: ExponentVector::from_pairs([(x, -1), (y, 1)]),
                    multiplicity: 2,
                });
            }
        }
        out
    }

    fn division_value(&self, lam: &Partition, with_box_sum: bool) -> Result<BigInt> {
        if !is_large(lam, self.h) {
            return Err(Error::NotLarge {
                lam: lam.to_string(),
                k: self.h.k,
                l: self.h.ell,
            });
        }
        let mut hs = hook_schur_eval(lam, &self.z0, &self.z1);
        if with_box_sum {
            hs = &hs * &self.box_sum();
        }
        let quotient = hs.exact_div(&self.z1_one_plus)?;
        let ct = self.inner_product(&quotient, &LaurentPoly::one());
        rational_to_nonneg_integer(&ct, &format!("constant term for lam={lam}"))
    }

    fn region_value(&self, lam: &Partition, with_box_sum: bool) -> Result<BigInt> {
        let mut integrand = &self.weyl * &hook_schur_eval(lam, &self.z0, &self.z1);
        if with_box_sum {
            integrand = &integrand * &self.box_sum();
        }
        integrand = integrand.mul_by_monomial(&self.prime_prefactor(), &BigRational::one());
        let ct = crate::laurent::ct_with_inverse_factors(
            &integrand,
            &self.prime_factors(),
            &self.region(),
        )?;
        rational_to_integer(&(ct * self.norm()), &format!("region constant term for lam={lam}"))
    }
}

/// Multiplicity of `S_lam` in the invariant ring, by exact division.
///
/// # Errors
/// `NotLarge` when the shape is outside the guaranteed range of the
/// division formula; `NonExactDivision` would signal a broken invariant.
pub fn m_large(lam: &Partition, h: HookParams) -> Result<BigInt> {
    SuperAlphabets::new(h).division_value(lam, false)
}

/// The primed multiplicity of `S_lam`, by region expansion; defined for
/// every shape (it vanishes outside the big hook) and equal to
/// [`m_large`] on large shapes.
pub fn m_prime(lam: &Partition, h: HookParams) -> Result<BigInt> {
    SuperAlphabets::new(h).region_value(lam, false)
}

/// One-box-enlarged multiplicity, by exact division; same largeness guard
/// as [`m_large`].
pub fn mbar_large(lam: &Partition, h: HookParams) -> Result<BigInt> {
    SuperAlphabets::new(h).division_value(lam, true)
}

/// One-box-enlarged primed multiplicity, by region expansion.
pub fn mbar_prime(lam: &Partition, h: HookParams) -> Result<BigInt> {
    SuperAlphabets::new(h).region_value(lam, true)
}

/// How [`m_ct`] arrived at its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CtRoute {
    /// Large shape: exact division then constant term.
    Division,
    /// Hook shape that is not large: region expansion (primed value).
    Region,
    /// Outside the big hook: zero by the support theorem.
    OutsideSupport,
}

impl CtRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            CtRoute::Division => "division",
            CtRoute::Region => "region",
            CtRoute::OutsideSupport => "outside-support",
        }
    }
}

/// Constant-term dispatcher: division on large shapes, region expansion on
/// other hook shapes, zero outside the big hook.  With `bar` the one-box
/// variants are used throughout.
pub fn m_ct(lam: &Partition, h: HookParams, bar: bool) -> Result<(BigInt, CtRoute)> {
    if !is_in_hook(lam, h.big_hook()) {
        return Ok((BigInt::ZERO, CtRoute::OutsideSupport));
    }
    let sa = SuperAlphabets::new(h);
    if is_large(lam, h) {
        Ok((sa.division_value(lam, bar)?, CtRoute::Division))
    } else {
        Ok((sa.region_value(lam, bar)?, CtRoute::Region))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::Characters;
    use crate::partitions::partitions;
    use crate::symfunc::schur_eval;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn alphabets_have_the_right_shapes() {
        let sa = SuperAlphabets::new(HookParams::new(1, 1));
        assert_eq!(sa.z0().size(), 2);
        assert_eq!(sa.z1().size(), 2);
        // x/x and y/y are both the unit monomial.
        assert!(sa.z0().monomials().iter().all(|m| m.is_unit()));

        let sa21 = SuperAlphabets::new(HookParams::new(2, 1));
        assert_eq!(sa21.z0().size(), 5);
        assert_eq!(sa21.z1().size(), 4);
        let sa22 = SuperAlphabets::new(HookParams::new(2, 2));
        assert_eq!(sa22.z0().size(), 8);
        assert_eq!(sa22.z1().size(), 8);
        // Each z in Z1 appears together with its inverse.
        for z in sa22.z1().monomials() {
            assert!(sa22.z1().monomials().contains(&z.inverse()));
        }
    }

    #[test]
    fn schur_polynomials_are_orthonormal() {
        // Def-style inner product over a torus with k plain variables.
        let sa = SuperAlphabets::new(HookParams::new(1, 0));
        let x1 = Alphabet::from_vars(&[VarName::indexed("x", 1)]);
        let s1 = schur_eval(&pt("1"), &x1);
        assert_eq!(sa.inner_product(&s1, &s1), q(1));

        let sa2 = SuperAlphabets::new(HookParams::new(2, 0));
        let x2 = Alphabet::from_vars(&[VarName::indexed("x", 1), VarName::indexed("x", 2)]);
        let s2 = schur_eval(&pt("2"), &x2);
        let s11 = schur_eval(&pt("1,1"), &x2);
        let s21 = schur_eval(&pt("2,1"), &x2);
        assert_eq!(sa2.inner_product(&s2, &s11), q(0));
        assert_eq!(sa2.inner_product(&s21, &s21), q(1));
        for n in 0..=3u64 {
            for m in 0..=3u64 {
                for a in partitions(n) {
                    for b in partitions(m) {
                        if a.len() > 2 || b.len() > 2 {
                            continue;
                        }
                        let expect = q((a == b) as i64);
                        let got = sa2.inner_product(&schur_eval(&a, &x2), &schur_eval(&b, &x2));
                        assert_eq!(got, expect, "a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn m_large_frozen_values() {
        let h = HookParams::new(1, 1);
        assert_eq!(m_large(&pt("2,2"), h).unwrap(), bi(2));
        assert_eq!(m_large(&pt("3,1"), h).unwrap(), bi(2));
        assert_eq!(m_large(&pt("2,1"), h).unwrap(), bi(1));
        assert_eq!(m_large(&pt("3,3"), h).unwrap(), bi(2));
        assert_eq!(m_large(&pt("2,2,2"), h).unwrap(), bi(2));
        assert_eq!(m_large(&pt("1,1"), h).unwrap(), bi(0));
        assert!(matches!(m_large(&pt("3"), h), Err(Error::NotLarge { .. })));
        assert!(matches!(
            m_large(&Partition::empty(), h),
            Err(Error::NotLarge { .. })
        ));
    }

    #[test]
    fn m_large_matches_hook_column_formula() {
        // m for (a+1, 1^b) is a+1 when b is even, a when b is odd.
        let h = HookParams::new(1, 1);
        for a in 0..=3u32 {
            for b in 1..=3usize {
                let mut parts = vec![a + 1];
                parts.extend(std::iter::repeat_n(1, b));
                let lam = Partition::new(parts).unwrap();
                let expect = if b % 2 == 0 { a + 1 } else { a };
                assert_eq!(m_large(&lam, h).unwrap(), bi(expect as i64), "lam={lam}");
            }
        }
    }

    #[test]
    fn m_prime_frozen_values() {
        let h = HookParams::new(1, 1);
        assert_eq!(m_prime(&Partition::empty(), h).unwrap(), bi(0));
        assert_eq!(m_prime(&pt("1"), h).unwrap(), bi(1));
        assert_eq!(m_prime(&pt("2,2"), h).unwrap(), bi(2));
    }

    #[test]
    fn mbar_frozen_values() {
        let h = HookParams::new(1, 1);
        assert_eq!(mbar_large(&pt("2,1"), h).unwrap(), bi(6));
        assert_eq!(mbar_large(&pt("2,2"), h).unwrap(), bi(6));
        // A single row is not large, so the division route refuses it even
        // though its primed value exists.
        assert!(matches!(mbar_large(&pt("2"), h), Err(Error::NotLarge { .. })));
        assert_eq!(mbar_prime(&pt("2"), h).unwrap(), bi(4));
        assert_eq!(mbar_prime(&Partition::empty(), h).unwrap(), bi(1));
        assert_eq!(mbar_prime(&pt("1"), h).unwrap(), bi(2));
        assert_eq!(mbar_prime(&pt("2,1"), h).unwrap(), bi(6));
    }

    #[test]
    fn region_and_division_agree_on_large_shapes() {
        let h = HookParams::new(1, 1);
        for n in 0..=8u64 {
            for lam in partitions(n) {
                if !is_large(&lam, h) {
                    continue;
                }
                assert_eq!(
                    m_prime(&lam, h).unwrap(),
                    m_large(&lam, h).unwrap(),
                    "lam={lam}"
                );
            }
        }
        for n in 0..=6u64 {
            for lam in partitions(n) {
                if !is_large(&lam, h) {
                    continue;
                }
                assert_eq!(
                    mbar_prime(&lam, h).unwrap(),
                    mbar_large(&lam, h).unwrap(),
                    "lam={lam}"
                );
            }
        }
    }

    #[test]
    fn ct_matches_character_oracle_on_large_shapes() {
        let chars = Characters::in_memory();
        let h = HookParams::new(1, 1);
        for n in 0..=6u64 {
            for lam in partitions(n) {
                if !is_large(&lam, h) {
                    continue;
                }
                assert_eq!(
                    m_large(&lam, h).unwrap(),
                    chars.m_oracle(1, 1, &lam).unwrap(),
                    "lam={lam}"
                );
            }
        }
        assert_eq!(
            mbar_large(&pt("2,1"), h).unwrap(),
            chars.mbar_oracle(1, 1, &pt("2,1")).unwrap()
        );
        assert_eq!(mbar_prime(&pt("2"), h).unwrap(), chars.mbar_oracle(1, 1, &pt("2")).unwrap());
    }

    #[test]
    fn dispatcher_routes_by_shape() {
        let h = HookParams::new(1, 1);
        assert_eq!(m_ct(&pt("2,2"), h, false).unwrap(), (bi(2), CtRoute::Division));
        assert_eq!(m_ct(&Partition::empty(), h, false).unwrap(), (bi(0), CtRoute::Region));
        assert_eq!(m_ct(&pt("3"), h, false).unwrap(), (bi(3), CtRoute::Region));
        // lam_3 = 3 > 2 leaves the big hook H(2; 2).
        assert_eq!(
            m_ct(&pt("3,3,3"), h, false).unwrap(),
            (bi(0), CtRoute::OutsideSupport)
        );
        assert_eq!(m_ct(&pt("2,1"), h, true).unwrap(), (bi(6), CtRoute::Division));
    }

    #[test]
    fn degenerate_one_block_case() {
        // At (1, 0) the invariants are the classical one-matrix traces:
        // one copy of every symmetric power.
        let h = HookParams::new(1, 0);
        for n in 1..=6u32 {
            let row = Partition::new(vec![n]).unwrap();
            assert_eq!(m_large(&row, h).unwrap(), bi(1));
            assert_eq!(m_ct(&row, h, false).unwrap(), (bi(1), CtRoute::Division));
        }
        for lam in [pt("2,1"), pt("1,1"), pt("3,2,1")] {
            assert_eq!(
                m_ct(&lam, h, false).unwrap(),
                (bi(0), CtRoute::OutsideSupport),
                "lam={lam}"
            );
        }
    }
}
