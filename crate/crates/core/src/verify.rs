//! Cross-checks of the whole pipeline against independently known values.
//!
//! Every check compares engine output with something external to the code
//! path under test: counting identities, closed-form series expansions,
//! classical symmetric-function identities, or agreement between the
//! character-sum and constant-term multiplicity routes.  Results are
//! reported uniformly as [`CheckResult`]s so the test harness and the
//! command line can both print one line per check.
//!
//! Three suites of increasing cost are provided.  [`quick_suite`] covers
//! the `(1,1)` block sizes and the structural identities; [`paper_suite`]
//! adds the published `(2,1)` table values, which need character sums at
//! `n = 20..21`; [`full_suite`] adds truncations of the four `(2,1)`
//! series against their closed forms.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num::{BigInt, BigRational, One, Zero};

use crate::characters::Characters;
use crate::laurent::{ExponentVector, LaurentPoly, VarName};
use crate::multiplicity::{m_ct, m_large, m_prime, CtRoute, SuperAlphabets};
use crate::partitions::{
    enumerate_hook, is_in_hook, is_large, is_typical, partitions, split_typical, HookParams,
    Partition,
};
use crate::series::{
    functional_equation_check, p_oracle_series, pbarprime_series, pprime_series, rational_expand,
    standard_vars, t_series, tbar_series, RationalForm, SeriesTruncation,
};
use crate::symfunc::{hook_schur_eval, schur_eval, truncated_kernel, Alphabet, KernelFactor};

/// Outcome of a single verification check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    /// Short stable name of the check.
    pub name: String,
    /// Whether the comparison succeeded.
    pub passed: bool,
    /// What was compared, or where the first disagreement was found.
    pub detail: String,
    /// Wall-clock time spent in the check.
    pub millis: u128,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {} ({} ms): {}",
            self.name, self.millis, self.detail
        )
    }
}

fn run_check(
    name: &str,
    body: impl FnOnce() -> std::result::Result<String, String>,
) -> CheckResult {
    let start = Instant::now();
    let outcome = body();
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok(detail) => CheckResult {
            name: name.to_string(),
            passed: true,
            detail,
            millis,
        },
        Err(detail) => CheckResult {
            name: name.to_string(),
            passed: false,
            detail,
            millis,
        },
    }
}

fn pt(s: &str) -> Partition {
    if s.is_empty() {
        Partition::empty()
    } else {
        s.parse().expect("valid partition literal")
    }
}

/// The hook shape `(a+1, 1^b)`.
fn hook_shape(a: u32, b: u32) -> Partition {
    let mut parts = vec![a + 1];
    parts.extend(std::iter::repeat(1).take(b as usize));
    Partition::new(parts).expect("hook shape")
}

fn ev(v: VarName) -> ExponentVector {
    ExponentVector::var(v)
}

fn pair(a: VarName, b: VarName) -> ExponentVector {
    ExponentVector::from_pairs([(a, 1), (b, 1)])
}

/// The polynomial `coeffs[0] + coeffs[1] v + coeffs[2] v^2 + ...`.
fn poly_in(v: VarName, coeffs: &[i64]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            out.add_term(
                ExponentVector::var_pow(v, i as i32),
                BigRational::from(BigInt::from(c)),
            );
        }
    }
    out
}

fn expect_value(label: &str, got: &BigInt, want: i64) -> std::result::Result<(), String> {
    if *got == BigInt::from(want) {
        Ok(())
    } else {
        Err(format!("{label}: got {got}, expected {want}"))
    }
}

/// Term-by-term comparison with a useful first-difference report.
fn compare_series(
    label: &str,
    got: &SeriesTruncation,
    want: &SeriesTruncation,
) -> std::result::Result<String, String> {
    if got == want {
        return Ok(format!(
            "{label}: {} coefficients agree up to degree {}",
            want.num_terms(),
            want.max_degree()
        ));
    }
    for (ev, c) in want.sorted_terms() {
        let g = got.coeff(&ev);
        if g != c {
            return Err(format!(
                "{label}: coefficient of {ev} is {g}, expected {c}"
            ));
        }
    }
    for (ev, c) in got.sorted_terms() {
        if want.coeff(&ev) != c {
            return Err(format!("{label}: unexpected term {c} * {ev}"));
        }
    }
    Err(format!("{label}: truncation contexts differ"))
}

fn err_str(e: crate::error::Error) -> String {
    e.to_string()
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

/// Single-row multiplicities count hook partitions; single-column
/// multiplicities count the self-conjugate ones.
pub fn check_counting_multiplicities(chars: &Characters) -> CheckResult {
    run_check("row and column shapes count hook partitions", || {
        let mut checked = 0u32;
        for (k, l) in [(1u32, 1u32), (2, 1), (2, 2)] {
            let h = HookParams::new(k, l);
            for n in 0..=10u64 {
                let shapes = enumerate_hook(h, n);
                let rows = BigInt::from(shapes.len());
                let cols = BigInt::from(
                    shapes.iter().filter(|p| p.is_self_conjugate()).count(),
                );
                let row_shape = if n == 0 {
                    Partition::empty()
                } else {
                    pt(&n.to_string())
                };
                let col_shape = if n == 0 {
                    Partition::empty()
                } else {
                    Partition::new(vec![1; n as usize]).unwrap()
                };
                let got = chars.m_oracle(k, l, &row_shape).map_err(err_str)?;
                if got != rows {
                    return Err(format!(
                        "m(row {n}) at ({k},{l}): got {got}, expected {rows}"
                    ));
                }
                let got = chars.m_oracle(k, l, &col_shape).map_err(err_str)?;
                if got != cols {
                    return Err(format!(
                        "m(column {n}) at ({k},{l}): got {got}, expected {cols}"
                    ));
                }
                checked += 2;
            }
        }
        Ok(format!(
            "{checked} counts agree for block sizes (1,1), (2,1), (2,2) with n <= 10"
        ))
    })
}

/// The single-column reference closed form at `(1,1)`:
/// `(1 + u - u^2) / (1 - u^2)`.
fn column_reference_form(u: VarName) -> RationalForm {
    let mut num = LaurentPoly::one();
    num.add_term(ev(u), BigRational::one());
    num.add_term(ExponentVector::var_pow(u, 2), -BigRational::one());
    RationalForm::new(num, vec![(ExponentVector::var_pow(u, 2), 1)])
}

/// The single-row reference closed form at `(2,2)`, assembled from its
/// three-part derivation `1 + t/(1-t)^2 + t^4/((1-t)^2 (1-t^2)^2)` over
/// the common denominator `(1-t)^2 (1-t^2)^2`.
fn row_reference_form(t: VarName) -> RationalForm {
    let one = LaurentPoly::one();
    let f1 = &one - &LaurentPoly::var(t);
    let f2 = &one - &LaurentPoly::var_pow(t, 2);
    let f2sq = &f2 * &f2;
    let den_poly = &(&f1 * &f1) * &f2sq;
    let mid = &LaurentPoly::var(t) * &f2sq;
    let num = &(&den_poly + &mid) + &LaurentPoly::var_pow(t, 4);
    RationalForm::new(
        num,
        vec![(ev(t), 2), (ExponentVector::var_pow(t, 2), 2)],
    )
}

/// The reference series over single rows or single columns match their
/// closed forms.
pub fn check_reference_series_closed_forms(chars: &Characters) -> CheckResult {
    run_check("reference series match closed forms", || {
        let (tv, uv) = standard_vars(0, 1);
        let form = column_reference_form(uv[0]);
        let want = rational_expand(&form, &tv, &uv, 12);
        let got = p_oracle_series(HookParams::new(1, 1), 0, 1, 12, chars).map_err(err_str)?;
        let first = compare_series("columns at (1,1)", &got, &want)?;

        let (tv, uv) = standard_vars(1, 0);
        let form = row_reference_form(tv[0]);
        let want = rational_expand(&form, &tv, &uv, 10);
        let got = p_oracle_series(HookParams::new(2, 2), 1, 0, 10, chars).map_err(err_str)?;
        let second = compare_series("rows at (2,2)", &got, &want)?;
        Ok(format!("{first}; {second}"))
    })
}

/// The exact-division route reproduces the character-sum route on every
/// large shape of size at most ten.
pub fn check_division_matches_oracle(chars: &Characters) -> CheckResult {
    run_check("division route agrees with character sums", || {
        let h = HookParams::new(1, 1);
        let mut count = 0u32;
        for n in 0..=10u64 {
            for lam in partitions(n) {
                if !is_large(&lam, h) {
                    continue;
                }
                let div = m_large(&lam, h).map_err(err_str)?;
                let orc = chars.m_oracle(1, 1, &lam).map_err(err_str)?;
                if div != orc {
                    return Err(format!(
                        "shape {lam}: division gives {div}, character sum gives {orc}"
                    ));
                }
                count += 1;
            }
        }
        Ok(format!(
            "{count} large shapes with size <= 10 agree across both routes"
        ))
    })
}

/// The closed form of the typical series at `(1,1)` in a `2 x 2` variable
/// grid: `2 / ((1-t1)^2 (1-t2)^2 (1-u1)(1-u2)(1-u1u2))`.
fn typical_2x2_form(tv: &[VarName], uv: &[VarName]) -> RationalForm {
    RationalForm::new(
        LaurentPoly::constant_i64(2),
        vec![
            (ev(tv[0]), 2),
            (ev(tv[1]), 2),
            (ev(uv[0]), 1),
            (ev(uv[1]), 1),
            (pair(uv[0], uv[1]), 1),
        ],
    )
}

/// The typical series at `(1,1)` matches its closed form to degree six.
pub fn check_typical_series_closed_form(chars: &Characters) -> CheckResult {
    run_check("typical series matches closed form", || {
        let (tv, uv) = standard_vars(2, 2);
        let want = rational_expand(&typical_2x2_form(&tv, &uv), &tv, &uv, 6);
        let got = t_series(HookParams::new(1, 1), 2, 2, 6, chars).map_err(err_str)?;
        compare_series("typical series at (1,1)", &got, &want)
    })
}

/// The primed series at `(1,1)` matches `(1+tu)(t+u)/((1-t)^2 (1-u^2))`,
/// the empty shape separates the primed and true multiplicities, and the
/// hook multiplicities follow the alternating closed formula.
pub fn check_primed_series_one_variable(chars: &Characters) -> CheckResult {
    run_check("primed series and hook multiplicities", || {
        let h = HookParams::new(1, 1);
        let (tv, uv) = standard_vars(1, 1);
        let (t, u) = (tv[0], uv[0]);
        // (1 + tu)(t + u) = t + u + t^2 u + t u^2.
        let mut num = LaurentPoly::zero();
        num.add_term(ev(t), BigRational::one());
        num.add_term(ev(u), BigRational::one());
        num.add_term(ExponentVector::from_pairs([(t, 2), (u, 1)]), BigRational::one());
        num.add_term(ExponentVector::from_pairs([(t, 1), (u, 2)]), BigRational::one());
        let form = RationalForm::new(
            num,
            vec![(ev(t), 2), (ExponentVector::var_pow(u, 2), 1)],
        );
        let want = rational_expand(&form, &tv, &uv, 8);
        let got = pprime_series(h, 1, 1, 8).map_err(err_str)?;
        let series_msg = compare_series("primed series at (1,1)", &got, &want)?;

        let empty = Partition::empty();
        let primed = m_prime(&empty, h).map_err(err_str)?;
        expect_value("primed multiplicity of the empty shape", &primed, 0)?;
        let truev = chars.m_oracle(1, 1, &empty).map_err(err_str)?;
        expect_value("true multiplicity of the empty shape", &truev, 1)?;

        let mut hooks = 0u32;
        for n in 1..=9u32 {
            for b in 0..n {
                let a = n - 1 - b;
                let lam = hook_shape(a, b);
                let want = if b % 2 == 0 { a + 1 } else { a };
                let got = chars.m_oracle(1, 1, &lam).map_err(err_str)?;
                expect_value(&format!("m({lam})"), &got, want as i64)?;
                hooks += 1;
            }
        }
        Ok(format!(
            "{series_msg}; empty shape splits 0 (primed) vs 1 (true); {hooks} hook values match"
        ))
    })
}

/// The barred primed series at `(1,1)` matches
/// `1 + 2(t+u)(1+tu)/((1-t)^2 (1-u))` and the barred hook multiplicities
/// follow their closed formulas.
pub fn check_bar_primed_series_one_variable(chars: &Characters) -> CheckResult {
    run_check("barred primed series and hook multiplicities", || {
        let h = HookParams::new(1, 1);
        let (tv, uv) = standard_vars(1, 1);
        let (t, u) = (tv[0], uv[0]);
        // 2 (t + u)(1 + tu) = 2t + 2u + 2 t^2 u + 2 t u^2.
        let mut num = LaurentPoly::zero();
        let two = BigRational::from(BigInt::from(2));
        num.add_term(ev(t), two.clone());
        num.add_term(ev(u), two.clone());
        num.add_term(ExponentVector::from_pairs([(t, 2), (u, 1)]), two.clone());
        num.add_term(ExponentVector::from_pairs([(t, 1), (u, 2)]), two);
        let form = RationalForm::new(num, vec![(ev(t), 2), (ev(u), 1)]);
        let mut want = rational_expand(&form, &tv, &uv, 8);
        want.add_term(ExponentVector::unit(), BigRational::one());
        let got = pbarprime_series(h, 1, 1, 8).map_err(err_str)?;
        let series_msg = compare_series("barred primed series at (1,1)", &got, &want)?;

        let mut hooks = 0u32;
        for n in 1..=8u32 {
            for b in 0..n {
                let a = n - 1 - b;
                let lam = hook_shape(a, b);
                let want = if b > 0 { 4 * a + 2 } else { 2 * a + 2 };
                let got = chars.mbar_oracle(1, 1, &lam).map_err(err_str)?;
                expect_value(&format!("mbar({lam})"), &got, want as i64)?;
                hooks += 1;
            }
        }
        Ok(format!("{series_msg}; {hooks} barred hook values match"))
    })
}

/// The barred typical series at `(1,1)` in a `2 x 2` grid matches
/// `2(3 + u1 + u2 - u1u2)` over the same denominator as the unbarred
/// series, and five typical spot values follow the `8 vs 6` rule.
pub fn check_bar_typical_series_two_by_two(chars: &Characters) -> CheckResult {
    run_check("barred typical series and spot values", || {
        let h = HookParams::new(1, 1);
        let (tv, uv) = standard_vars(2, 2);
        let two = BigRational::from(BigInt::from(2));
        let mut num = LaurentPoly::constant_i64(6);
        num.add_term(ev(uv[0]), two.clone());
        num.add_term(ev(uv[1]), two.clone());
        num.add_term(pair(uv[0], uv[1]), -two);
        let form = RationalForm::new(
            num,
            vec![
                (ev(tv[0]), 2),
                (ev(tv[1]), 2),
                (ev(uv[0]), 1),
                (ev(uv[1]), 1),
                (pair(uv[0], uv[1]), 1),
            ],
        );
        let want = rational_expand(&form, &tv, &uv, 4);
        let got = tbar_series(h, 2, 2, 4, chars).map_err(err_str)?;
        let series_msg = compare_series("barred typical series at (1,1)", &got, &want)?;

        // mbar = 8 (alpha1 - alpha2 + 1), dropping to 6 (alpha1 - alpha2 + 1)
        // when beta has two equal parts.
        let spots: [(&str, i64); 5] = [
            ("2,2", 6),
            ("3,2", 12),
            ("3,3", 6),
            ("2,2,1", 8),
            ("3,2,1", 16),
        ];
        for (s, want) in spots {
            let lam = pt(s);
            let (alpha, beta) = split_typical(&lam, 2, 2).map_err(err_str)?;
            let factor: i64 = if beta.part(1) == beta.part(2) { 6 } else { 8 };
            let rule = factor * (i64::from(alpha.part(1)) - i64::from(alpha.part(2)) + 1);
            if rule != want {
                return Err(format!(
                    "spot rule for {lam} gives {rule}, table says {want}"
                ));
            }
            let got = chars.mbar_oracle(1, 1, &lam).map_err(err_str)?;
            expect_value(&format!("mbar({lam})"), &got, want)?;
        }
        Ok(format!("{series_msg}; 5 typical spot values match the 8-vs-6 rule"))
    })
}

/// The published `(2,1)` table values at `n = 20..21` via character sums,
/// together with the one-box sum identity.
pub fn check_character_table_values(chars: &Characters) -> CheckResult {
    run_check("block (2,1) character sums at n = 20..21", || {
        let table: [(&str, i64); 3] = [
            ("4,4,4,4,4", 372),
            ("5,4,4,4,4", 1545),
            ("4,4,4,4,4,1", 1152),
        ];
        for (s, want) in table {
            let got = chars.m_oracle(2, 1, &pt(s)).map_err(err_str)?;
            expect_value(&format!("m({s})"), &got, want)?;
        }
        let mbar = chars.mbar_oracle(2, 1, &pt("4,4,4,4,4")).map_err(err_str)?;
        expect_value("mbar(4,4,4,4,4)", &mbar, 2697)?;
        if 2697 != 1545 + 1152 {
            return Err("one-box sum identity arithmetic is wrong".into());
        }
        Ok("372 / 1545 / 1152 / 2697 reproduced; 2697 = 1545 + 1152".into())
    })
}

/// The constant-term route at scale: the `5 x 4` rectangle at `(2,1)` runs
/// through exact division and yields the published constant.
pub fn check_division_at_scale() -> CheckResult {
    run_check("division route at n = 20", || {
        let lam = pt("4,4,4,4,4");
        let (value, route) = m_ct(&lam, HookParams::new(2, 1), false).map_err(err_str)?;
        if route != CtRoute::Division {
            return Err(format!(
                "expected the division route, dispatcher chose {}",
                route.as_str()
            ));
        }
        expect_value("m(4,4,4,4,4) at (2,1)", &value, 372)?;
        Ok("m(4,4,4,4,4) = 372 via exact division and constant term".into())
    })
}

/// The functional-equation checker accepts the typical closed form with
/// sign `-1` and rejects both reference closed forms.
pub fn check_functional_equation() -> CheckResult {
    run_check("functional equation of the closed forms", || {
        let (tv, uv) = standard_vars(2, 2);
        let form = typical_2x2_form(&tv, &uv);
        let fe = functional_equation_check(&form.numerator, &form.denominator, 1, 1, &tv, &uv);
        if !fe.holds || fe.sign != -1 {
            return Err(format!(
                "typical closed form: holds={}, sign={}, expected true with -1",
                fe.holds, fe.sign
            ));
        }

        // (1 + u - u^2) / (1 - u^2) must fail.
        let (tv, uv) = standard_vars(0, 1);
        let form = column_reference_form(uv[0]);
        let fe = functional_equation_check(&form.numerator, &form.denominator, 1, 1, &tv, &uv);
        if fe.holds {
            return Err("column reference form unexpectedly satisfies the equation".into());
        }

        // The single-row reference form at (2,2) must fail as well.
        let (tv, uv) = standard_vars(1, 0);
        let form = row_reference_form(tv[0]);
        let fe = functional_equation_check(&form.numerator, &form.denominator, 2, 2, &tv, &uv);
        if fe.holds {
            return Err("row reference form unexpectedly satisfies the equation".into());
        }
        Ok("typical form transforms with sign -1; both reference forms are rejected".into())
    })
}

// ---------------------------------------------------------------------------
// Structural property checks
// ---------------------------------------------------------------------------

/// Typical hook Schur values factor as the rectangle product times a pair
/// of ordinary Schur polynomials.
fn property_typical_factorization() -> CheckResult {
    run_check("typical factorization", || {
        let mut count = 0u32;
        let sizes: [(usize, usize); 9] = [
            (1, 1),
            (1, 2),
            (2, 1),
            (1, 3),
            (3, 1),
            (2, 2),
            (3, 2),
            (2, 3),
            (3, 3),
        ];
        for (na, nb) in sizes {
            let xv: Vec<VarName> = (1..=na).map(|i| VarName::indexed("x", i)).collect();
            let yv: Vec<VarName> = (1..=nb).map(|j| VarName::indexed("y", j)).collect();
            let xa = Alphabet::from_vars(&xv);
            let ya = Alphabet::from_vars(&yv);
            let mut rect = LaurentPoly::one();
            for &x in &xv {
                for &y in &yv {
                    rect = &rect * &(&LaurentPoly::var(x) + &LaurentPoly::var(y));
                }
            }
            for n in ((na * nb) as u64)..=10 {
                for lam in enumerate_hook(HookParams::new(na as u32, nb as u32), n) {
                    if !is_typical(&lam, na as u32, nb as u32) {
                        continue;
                    }
                    let (alpha, beta) =
                        split_typical(&lam, na as u32, nb as u32).map_err(err_str)?;
                    let lhs = hook_schur_eval(&lam, &xa, &ya);
                    let rhs =
                        &(&rect * &schur_eval(&alpha, &xa)) * &schur_eval(&beta, &ya);
                    if lhs != rhs {
                        return Err(format!(
                            "factorization fails at {lam} with |A| = {na}, |B| = {nb}"
                        ));
                    }
                    count += 1;
                }
            }
        }
        Ok(format!(
            "{count} typical shapes factor as rectangle times Schur pair"
        ))
    })
}

/// Hook Schur values at product alphabets expand through Kronecker
/// coefficients.
fn property_product_alphabet_expansion(chars: &Characters) -> CheckResult {
    run_check("product-alphabet expansion", || {
        let x = VarName::new("x");
        let y = VarName::new("y");
        let t = VarName::new("t");
        let u = VarName::new("u");
        let big_a = Alphabet::new(vec![pair(x, t), pair(y, u)]);
        let big_b = Alphabet::new(vec![pair(x, u), pair(y, t)]);
        let xa = Alphabet::from_vars(&[x]);
        let ya = Alphabet::from_vars(&[y]);
        let ta = Alphabet::from_vars(&[t]);
        let ua = Alphabet::from_vars(&[u]);
        let mut count = 0u32;
        for n in 0..=5u64 {
            let shapes = partitions(n);
            for lam in &shapes {
                let lhs = hook_schur_eval(lam, &big_a, &big_b);
                let mut rhs = LaurentPoly::zero();
                for mu in &shapes {
                    let hs_mu = hook_schur_eval(mu, &xa, &ya);
                    if hs_mu.is_zero() {
                        continue;
                    }
                    for nu in &shapes {
                        let g = chars.kronecker(lam, mu, nu).map_err(err_str)?;
                        if g.is_zero() {
                            continue;
                        }
                        let hs_nu = hook_schur_eval(nu, &ta, &ua);
                        rhs = &rhs + &(&hs_mu * &hs_nu).scale(&BigRational::from(g));
                    }
                }
                if lhs != rhs {
                    return Err(format!("expansion fails at shape {lam}"));
                }
                count += 1;
            }
        }
        Ok(format!(
            "{count} shapes of size <= 5 expand through Kronecker coefficients"
        ))
    })
}

/// The diagonal sum of products of hook Schur values over two singleton
/// alphabet pairs equals its four-factor product kernel.
fn property_four_alphabet_kernel() -> CheckResult {
    run_check("four-alphabet summation kernel", || {
        let a = VarName::new("a");
        let b = VarName::new("b");
        let c = VarName::new("c");
        let d = VarName::new("d");
        let factors = [
            KernelFactor::new(pair(a, d), 1, false),
            KernelFactor::new(pair(b, c), 1, false),
            KernelFactor::new(pair(a, c), -1, true),
            KernelFactor::new(pair(b, d), -1, true),
        ];
        let tv = [a, b];
        let uv = [c, d];
        let want = truncated_kernel(&factors, &tv, &uv, 8);
        let mut got = SeriesTruncation::new(&tv, &uv, 8);
        let aa = Alphabet::from_vars(&[a]);
        let ba = Alphabet::from_vars(&[b]);
        let ca = Alphabet::from_vars(&[c]);
        let da = Alphabet::from_vars(&[d]);
        for n in 0..=4u64 {
            for lam in partitions(n) {
                let left = hook_schur_eval(&lam, &aa, &ba);
                if left.is_zero() {
                    continue;
                }
                let right = hook_schur_eval(&lam, &ca, &da);
                got.add_poly(&(&left * &right));
            }
        }
        compare_series("four-alphabet kernel", &got, &want)
    })
}

/// The typical-shape sum weighted by split Schur factors equals the mixed
/// kernel `(x+y) / ((1-xc)(1-yd))`.
fn property_typical_summation_kernel() -> CheckResult {
    run_check("typical summation kernel", || {
        let x = VarName::new("x");
        let y = VarName::new("y");
        let c = VarName::new("c");
        let d = VarName::new("d");
        let xa = Alphabet::from_vars(&[x]);
        let ya = Alphabet::from_vars(&[y]);
        let ca = Alphabet::from_vars(&[c]);
        let da = Alphabet::from_vars(&[d]);
        let tv = [x, y];
        let uv = [c, d];
        let mut got = SeriesTruncation::new(&tv, &uv, 7);
        for n in 1..=4u64 {
            for lam in enumerate_hook(HookParams::new(1, 1), n) {
                if !is_typical(&lam, 1, 1) {
                    continue;
                }
                let (alpha, beta) = split_typical(&lam, 1, 1).map_err(err_str)?;
                let term = &(&hook_schur_eval(&lam, &xa, &ya) * &schur_eval(&alpha, &ca))
                    * &schur_eval(&beta, &da);
                got.add_poly(&term);
            }
        }
        let num = &LaurentPoly::var(x) + &LaurentPoly::var(y);
        let form = RationalForm::new(num, vec![(pair(x, c), 1), (pair(y, d), 1)]);
        let want = rational_expand(&form, &tv, &uv, 7);
        compare_series("typical kernel", &got, &want)
    })
}

/// The two-alphabet Cauchy kernel: the diagonal Schur sum equals the
/// product of inverted factors.
fn property_cauchy_kernel() -> CheckResult {
    run_check("Cauchy kernel for two pairs of variables", || {
        let xv = [VarName::indexed("x", 1), VarName::indexed("x", 2)];
        let yv = [VarName::indexed("y", 1), VarName::indexed("y", 2)];
        let mut factors = Vec::new();
        for &xi in &xv {
            for &yj in &yv {
                factors.push(KernelFactor::new(pair(xi, yj), -1, true));
            }
        }
        let want = truncated_kernel(&factors, &xv, &yv, 8);
        let xa = Alphabet::from_vars(&xv);
        let ya = Alphabet::from_vars(&yv);
        let mut got = SeriesTruncation::new(&xv, &yv, 8);
        for n in 0..=4u64 {
            for lam in partitions(n) {
                if lam.len() > 2 {
                    continue;
                }
                got.add_poly(&(&schur_eval(&lam, &xa) * &schur_eval(&lam, &ya)));
            }
        }
        compare_series("Cauchy kernel", &got, &want)
    })
}

/// Kronecker coefficients of the row shape are diagonal and of the column
/// shape are anti-diagonal (conjugating one argument).
fn property_kronecker_deltas(chars: &Characters) -> CheckResult {
    run_check("Kronecker deltas for row and column shapes", || {
        let row = pt("5");
        let col = pt("1,1,1,1,1");
        let shapes = partitions(5);
        let mut count = 0u32;
        for mu in &shapes {
            for nu in &shapes {
                let g = chars.kronecker(&row, mu, nu).map_err(err_str)?;
                let want = i64::from(mu == nu);
                expect_value(&format!("row delta at ({mu}, {nu})"), &g, want)?;
                let g = chars.kronecker(&col, mu, nu).map_err(err_str)?;
                let want = i64::from(*mu == nu.conjugate());
                expect_value(&format!("column delta at ({mu}, {nu})"), &g, want)?;
                count += 2;
            }
        }
        Ok(format!("{count} coefficients at n = 5 match their deltas"))
    })
}

/// Kronecker coefficients and multiplicities vanish outside their hooks:
/// two-row factors force at most four rows, and at `(1,1)` every shape
/// outside the big hook has multiplicity zero.
fn property_support_bound(chars: &Characters) -> CheckResult {
    run_check("multiplicity support bound", || {
        let mut coeffs = 0u32;
        for n in 2..=8u64 {
            let two_rows = enumerate_hook(HookParams::new(2, 0), n);
            for lam in partitions(n) {
                if lam.len() <= 4 {
                    continue;
                }
                for mu in &two_rows {
                    for nu in &two_rows {
                        let g = chars.kronecker(&lam, mu, nu).map_err(err_str)?;
                        if !g.is_zero() {
                            return Err(format!(
                                "coefficient at ({lam}; {mu}, {nu}) is {g}, expected 0"
                            ));
                        }
                        coeffs += 1;
                    }
                }
            }
        }

        // The smallest shapes outside the big hook of (1,1) have size 9.
        let h = HookParams::new(1, 1);
        let big = h.big_hook();
        let mut shapes = 0u32;
        for n in 9..=10u64 {
            for lam in partitions(n) {
                if is_in_hook(&lam, big) {
                    continue;
                }
                let got = chars.m_oracle(1, 1, &lam).map_err(err_str)?;
                if !got.is_zero() {
                    return Err(format!(
                        "shape {lam} outside the big hook has multiplicity {got}"
                    ));
                }
                shapes += 1;
            }
        }
        Ok(format!(
            "{coeffs} coefficients with two-row factors vanish beyond four rows; \
             {shapes} shapes outside the big hook have zero multiplicity"
        ))
    })
}

/// Typical multiplicities at `(1,1)` are constant along rectangle
/// translations of the split pair.
fn property_rectangle_stability() -> CheckResult {
    run_check("rectangle stability of typical multiplicities", || {
        let h = HookParams::new(1, 1);
        let mut groups: BTreeMap<(u32, u32), Vec<(Partition, BigInt)>> = BTreeMap::new();
        for n in 4..=12u64 {
            for lam in enumerate_hook(HookParams::new(2, 2), n) {
                if !is_typical(&lam, 2, 2) {
                    continue;
                }
                let (alpha, beta) = split_typical(&lam, 2, 2).map_err(err_str)?;
                let key = (
                    alpha.part(1) - alpha.part(2),
                    beta.part(1) - beta.part(2),
                );
                let m = m_large(&lam, h).map_err(err_str)?;
                groups.entry(key).or_default().push((lam, m));
            }
        }
        let mut shapes = 0usize;
        for items in groups.values() {
            let (first_lam, first) = &items[0];
            for (lam, m) in items {
                if m != first {
                    return Err(format!(
                        "stability broken: m({lam}) = {m} but m({first_lam}) = {first}"
                    ));
                }
            }
            shapes += items.len();
        }
        Ok(format!(
            "{} translation orbits constant across {shapes} typical shapes of size <= 12",
            groups.len()
        ))
    })
}

/// Products of Schur polynomials in the two variable blocks are
/// orthonormal under the torus inner product.
fn property_schur_orthonormality() -> CheckResult {
    run_check("Schur orthonormality on the torus", || {
        let sa = SuperAlphabets::new(HookParams::new(2, 2));
        let xa = Alphabet::from_vars(sa.xvars());
        let ya = Alphabet::from_vars(sa.yvars());
        let mut basis = Vec::new();
        for total in 0..=4u64 {
            for nl in 0..=total {
                for lam in enumerate_hook(HookParams::new(2, 0), nl) {
                    for mu in enumerate_hook(HookParams::new(2, 0), total - nl) {
                        let f = &schur_eval(&lam, &xa) * &schur_eval(&mu, &ya);
                        basis.push((lam.clone(), mu.clone(), f));
                    }
                }
            }
        }
        let mut count = 0u32;
        for (la, ma, f) in &basis {
            for (lb, mb, g) in &basis {
                let ip = sa.inner_product(f, g);
                let want = if la == lb && ma == mb {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                if ip != want {
                    return Err(format!(
                        "<S[{la}] S[{ma}], S[{lb}] S[{mb}]> = {ip}, expected {want}"
                    ));
                }
                count += 1;
            }
        }
        Ok(format!(
            "{count} inner products of Schur pairs up to size 4 are orthonormal"
        ))
    })
}

/// The character-sum multiplicity never exceeds the plain inner product of
/// the hook Schur value against one.
fn property_character_sum_upper_bound(chars: &Characters) -> CheckResult {
    run_check("character sums respect the inner-product bound", || {
        let sa = SuperAlphabets::new(HookParams::new(1, 1));
        let one = LaurentPoly::one();
        let mut count = 0u32;
        for n in 0..=8u64 {
            for lam in partitions(n) {
                let m = chars.m_oracle(1, 1, &lam).map_err(err_str)?;
                let hs = hook_schur_eval(&lam, sa.z0(), sa.z1());
                let bound = sa.inner_product(&hs, &one);
                if BigRational::from(m.clone()) > bound {
                    return Err(format!(
                        "shape {lam}: multiplicity {m} exceeds bound {bound}"
                    ));
                }
                count += 1;
            }
        }
        Ok(format!("{count} shapes of size <= 8 respect the bound"))
    })
}

/// All structural property checks, in a stable order.
pub fn property_checks(chars: &Characters) -> Vec<CheckResult> {
    vec![
        property_typical_factorization(),
        property_product_alphabet_expansion(chars),
        property_four_alphabet_kernel(),
        property_typical_summation_kernel(),
        property_cauchy_kernel(),
        property_kronecker_deltas(chars),
        property_support_bound(chars),
        property_rectangle_stability(),
        property_schur_orthonormality(),
        property_character_sum_upper_bound(chars),
    ]
}

// ---------------------------------------------------------------------------
// Extended (2,1) series checks
// ---------------------------------------------------------------------------

fn extended_series_check(
    name: &'static str,
    chars: &Characters,
    bar: bool,
    a: usize,
    b: usize,
    coeffs: &[i64],
    row_denominator: bool,
) -> CheckResult {
    run_check(name, || {
        let h = HookParams::new(2, 1);
        let (tv, uv) = standard_vars(a, b);
        let v = if a == 1 { tv[0] } else { uv[0] };
        let num = poly_in(v, coeffs);
        let den = if row_denominator {
            // (1 - t)^2 (1 - t^2)
            vec![(ev(v), 2), (ExponentVector::var_pow(v, 2), 1)]
        } else {
            // 1 - u
            vec![(ev(v), 1)]
        };
        let want = rational_expand(&RationalForm::new(num, den), &tv, &uv, 6);
        let got = if bar {
            tbar_series(h, a, b, 6, chars).map_err(err_str)?
        } else {
            t_series(h, a, b, 6, chars).map_err(err_str)?
        };
        compare_series(name, &got, &want)
    })
}

/// Truncations of the four `(2,1)` series against their closed forms, to
/// degree six.  These run the exact-division route at sizes `20..=27`.
pub fn extended_series_checks(chars: &Characters) -> Vec<CheckResult> {
    vec![
        extended_series_check(
            "extended row series at (2,1)",
            chars,
            false,
            1,
            0,
            &[372, 801, 835, 515, 213, 35, 1],
            true,
        ),
        extended_series_check(
            "extended column series at (2,1)",
            chars,
            false,
            0,
            1,
            &[372, 780, 1083, 1193, 1034, 754, 513, 319, 158, 54, 11, 1],
            false,
        ),
        extended_series_check(
            "extended barred row series at (2,1)",
            chars,
            true,
            1,
            0,
            &[2697, 6346, 6641, 4449, 1981, 503, 50, 1],
            true,
        ),
        extended_series_check(
            "extended barred column series at (2,1)",
            chars,
            true,
            0,
            1,
            &[
                2697, 6249, 8817, 9587, 8706, 6890, 4877, 3107, 1744, 820, 301, 79, 13, 1,
            ],
            false,
        ),
    ]
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// The `(1,1)`-scale checks plus all structural property checks.
pub fn quick_suite(chars: &Characters) -> Vec<CheckResult> {
    let mut out = vec![
        check_counting_multiplicities(chars),
        check_reference_series_closed_forms(chars),
        check_division_matches_oracle(chars),
        check_typical_series_closed_form(chars),
        check_primed_series_one_variable(chars),
        check_bar_primed_series_one_variable(chars),
        check_bar_typical_series_two_by_two(chars),
    ];
    out.extend(property_checks(chars));
    out.push(check_functional_equation());
    out
}

/// [`quick_suite`] plus the published `(2,1)` table values.
pub fn paper_suite(chars: &Characters) -> Vec<CheckResult> {
    let mut out = quick_suite(chars);
    out.push(check_character_table_values(chars));
    out.push(check_division_at_scale());
    out
}

/// [`paper_suite`] plus the extended `(2,1)` series truncations.
pub fn full_suite(chars: &Characters) -> Vec<CheckResult> {
    let mut out = paper_suite(chars);
    out.extend(extended_series_checks(chars));
    out
}
