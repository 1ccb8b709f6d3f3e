//! Integer partitions, hook sets, typical decompositions and largeness.
//!
//! A partition is stored as its weakly decreasing list of positive parts.
//! The hook set `H(k, l)` consists of the partitions whose diagram fits in
//! the union of `k` infinite rows and `l` infinite columns, i.e. those with
//! `lambda_{k+1} <= l`.  Shapes that additionally contain the full `a x b`
//! rectangle decompose as rectangle + right arm `alpha` + lower leg `beta`
//! (stored conjugated); those are the "typical" shapes for `(a, b)`.
//!
//! Functions provided here:
//! ```text
//! is_in_hook       membership in H(k, l)
//! enumerate_hook   all of H(k, l; n), lexicographically decreasing
//! partitions       all partitions of n
//! is_typical       rectangle containment test
//! split_typical    lambda -> (alpha, beta)
//! join_typical     (alpha, beta) -> lambda
//! is_large         minimal-hook test for matrix sizes (k, l)
//! add_one_box      all one-box extensions of a shape
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition after validating that `parts` is weakly decreasing
    /// and strictly positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing: {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// The empty partition of `0`.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts that may contain trailing zeros (still
    /// required to be weakly decreasing otherwise).
    pub fn from_padded(parts: Vec<u32>) -> Result<Self> {
        let trimmed: Vec<u32> = parts.into_iter().take_while(|&p| p > 0).collect();
        Partition::new(trimmed)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of boxes `|lambda|`.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts (rows).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part with 1-based indexing; `0` beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut conj = Vec::with_capacity(cols);
        for j in 1..=cols {
            conj.push(self.0.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition(conj)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Containment of diagrams: every row of `other` fits inside this shape.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// All partitions obtained by adding a single box, ordered by the row
    /// receiving the box.  There are always `(number of distinct part
    /// sizes) + 1` of them.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            if i == 0 || self.0[i] < self.0[i - 1] {
                let mut parts = self.0.clone();
                parts[i] += 1;
                out.push(Partition(parts));
            }
        }
        let mut parts = self.0.clone();
        parts.push(1);
        out.push(Partition(parts));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated encoding; the empty string and `-` both
    /// denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {piece:?} in {s:?}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// Super matrix block sizes `(k, l)`, also used as hook parameters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HookParams {
    pub k: u32,
    pub ell: u32,
}

impl HookParams {
    pub fn new(k: u32, ell: u32) -> Self {
        HookParams { k, ell }
    }

    /// Row count `k^2 + l^2` of the hook supporting nonzero multiplicities.
    pub fn big_hook_rows(&self) -> u32 {
        self.k * self.k + self.ell * self.ell
    }

    /// Column count `2kl` of that hook.
    pub fn big_hook_cols(&self) -> u32 {
        2 * self.k * self.ell
    }

    /// The hook `H(k^2 + l^2, 2kl)` itself.
    pub fn big_hook(&self) -> HookParams {
        HookParams::new(self.big_hook_rows(), self.big_hook_cols())
    }
}

impl fmt::Display for HookParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.ell)
    }
}

/// Membership in the hook `H(k, l)`: true iff `lambda_{k+1} <= l`.
pub fn is_in_hook(lam: &Partition, h: HookParams) -> bool {
    lam.part(h.k as usize + 1) <= h.ell
}

/// All partitions of `n` lying in `H(k, l)`, in lexicographically decreasing
/// order.  The generator walks the first `k` unconstrained rows and then a
/// tail whose parts are capped at `l`, so nothing outside the hook is ever
/// touched.
pub fn enumerate_hook(h: HookParams, n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        remaining: u64,
        row: usize,
        max_part: u32,
        h: HookParams,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let cap = if row > h.k as usize {
            max_part.min(h.ell)
        } else {
            max_part
        };
        let hi = (remaining.min(cap as u64)) as u32;
        for part in (1..=hi).rev() {
            current.push(part);
            rec(remaining - part as u64, row + 1, part, h, current, out);
            current.pop();
        }
    }
    rec(n, 1, u32::MAX, h, &mut current, &mut out);
    out
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions(n: u64) -> Vec<Partition> {
    enumerate_hook(HookParams::new(n as u32, 1), n)
}

/// True iff `lam` lies in `H(a, b)` and its diagram contains the full
/// `a x b` rectangle (`lambda_a >= b`, vacuous for `a = 0`).
pub fn is_typical(lam: &Partition, a: u32, b: u32) -> bool {
    if !is_in_hook(lam, HookParams::new(a, b)) {
        return false;
    }
    a == 0 || lam.part(a as usize) >= b
}

/// Splits a typical shape into its arm `alpha` (rows 1..=a minus the
/// rectangle width `b`) and leg `beta` (conjugate of the rows below the
/// rectangle).
///
/// # Errors
/// `NotTypical` when the rectangle is not contained or the shape leaves the
/// hook.
pub fn split_typical(lam: &Partition, a: u32, b: u32) -> Result<(Partition, Partition)> {
    if !is_typical(lam, a, b) {
        return Err(Error::NotTypical {
            lam: lam.to_string(),
            a,
            b,
        });
    }
    let alpha_parts: Vec<u32> = (1..=a as usize).map(|i| lam.part(i) - b).collect();
    let alpha = Partition::from_padded(alpha_parts)?;
    let tail: Vec<u32> = lam.parts().iter().skip(a as usize).copied().collect();
    let beta = Partition(tail).conjugate();
    Ok((alpha, beta))
}

/// Inverse of [`split_typical`]: rebuilds the typical shape with arm
/// `alpha`, leg `beta` and rectangle `a x b`.
///
/// # Errors
/// `InvalidPartition` when `alpha` has more than `a` parts or `beta` more
/// than `b` parts.
pub fn join_typical(alpha: &Partition, beta: &Partition, a: u32, b: u32) -> Result<Partition> {
    if alpha.len() > a as usize {
        return Err(Error::InvalidPartition(format!(
            "alpha {alpha} has more than {a} parts"
        )));
    }
    if beta.len() > b as usize {
        return Err(Error::InvalidPartition(format!(
            "beta {beta} has more than {b} parts"
        )));
    }
    let mut parts: Vec<u32> = (1..=a as usize).map(|i| alpha.part(i) + b).collect();
    parts.extend(beta.conjugate().parts());
    Partition::from_padded(parts)
}

/// Largeness for matrix sizes `(k, l)`: the shape lies in
/// `H(k^2 + l^2, 2kl)` but in none of the hooks `H(a^2 + b^2, 2ab)` for
/// `a <= k`, `b <= l` with `(a, b) != (k, l)` (including `a` or `b` zero, so
/// in particular the empty partition is never large when `(k, l) != (0, 0)`).
pub fn is_large(lam: &Partition, h: HookParams) -> bool {
    if !is_in_hook(lam, h.big_hook()) {
        return false;
    }
    for a in 0..=h.k {
        for b in 0..=h.ell {
            if (a, b) == (h.k, h.ell) {
                continue;
            }
            if is_in_hook(lam, HookParams::new(a * a + b * b, 2 * a * b)) {
                return false;
            }
        }
    }
    true
}
