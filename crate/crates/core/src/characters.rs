//! Symmetric group characters and the character-sum route to invariant
//! multiplicities.
//!
//! [`Characters`] evaluates irreducible characters `chi^lam(rho)` by the
//! Murnaghan-Nakayama rule on beta-sets, memoizing every node of the
//! recursion in memory and optionally persisting top-level values to a
//! plain-text cache file so that expensive tables (the interesting examples
//! live at `n = 20` and beyond) survive across runs.
//!
//! On top of the character table sit [`Characters::kronecker`], the
//! multiplicity of one irreducible in the tensor square pairing of two
//! others, and [`Characters::m_oracle`] / [`Characters::mbar_oracle`]: the
//! multiplicity of `S_lam` in the invariants of a super matrix with block
//! sizes `(k, l)`, obtained as the sum of Kronecker coefficients
//! `g(lam, mu, mu)` over all `mu` of the same size inside the hook
//! `H(k, l)`, and its one-box-up variant for invariants of the enlarged
//! algebra.
//!
//! Cache format: one record per line,
//! `chi n=<size> lam=<parts> rho=<parts> val=<integer>`, with parts
//! comma-separated and empty partitions written as nothing.  Records are
//! append-only; re-loading validates that duplicates agree.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use dashmap::DashMap;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::partitions::{enumerate_hook, partitions, HookParams, Partition};
use crate::util::{factorial, rational_to_nonneg_integer};

/// The order `z_rho = prod_i i^(m_i) m_i!` of the centralizer of a
/// permutation of cycle type `rho`.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    let mut run = 0u64;
    let parts = rho.parts();
    for (i, &p) in parts.iter().enumerate() {
        run += 1;
        let last = i + 1 == parts.len() || parts[i + 1] != p;
        if last {
            for _ in 0..run {
                acc *= BigInt::from(p);
            }
            acc *= factorial(run);
            run = 0;
        }
    }
    acc
}

/// The size `n! / z_rho` of the conjugacy class of cycle type `rho`.
pub fn class_size(rho: &Partition) -> BigInt {
    factorial(rho.size()) / centralizer_order(rho)
}

/// The dimension of the irreducible indexed by `lam`, by the hook length
/// formula.
pub fn dimension(lam: &Partition) -> BigInt {
    let conj = lam.conjugate();
    let mut hooks = BigInt::one();
    for i in 1..=lam.len() {
        for j in 1..=lam.part(i) as usize {
            let arm = lam.part(i) as u64 - j as u64;
            let leg = conj.part(j) as u64 - i as u64;
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(lam.size()) / hooks
}

struct Store {
    path: PathBuf,
    persisted: Mutex<HashSet<(Partition, Partition)>>,
    writer: Mutex<BufWriter<File>>,
}

/// Character engine with in-memory memoization and an optional disk cache.
pub struct Characters {
    memo: DashMap<(Partition, Partition), BigInt>,
    store: Option<Store>,
}

fn format_record(lam: &Partition, rho: &Partition, val: &BigInt) -> String {
    format!("chi n={} lam={} rho={} val={}", lam.size(), lam, rho, val)
}

fn parse_record(line: &str) -> Result<(Partition, Partition, BigInt)> {
    let bad = |msg: &str| Error::Cache(format!("{msg} in record {line:?}"));
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("chi") {
        return Err(bad("missing chi tag"));
    }
    let mut field = |prefix: &str| -> Result<String> {
        tokens
            .next()
            .and_then(|t| t.strip_prefix(prefix))
            .map(str::to_owned)
            .ok_or_else(|| bad(&format!("missing {prefix} field")))
    };
    let n: u64 = field("n=")?
        .parse()
        .map_err(|_| bad("unreadable size"))?;
    let lam: Partition = field("lam=")?
        .parse()
        .map_err(|_| bad("unreadable lam"))?;
    let rho: Partition = field("rho=")?
        .parse()
        .map_err(|_| bad("unreadable rho"))?;
    let val: BigInt = field("val=")?
        .parse()
        .map_err(|_| bad("unreadable value"))?;
    if lam.size() != n || rho.size() != n {
        return Err(bad("size field disagrees with partitions"));
    }
    Ok((lam, rho, val))
}

impl Characters {
    /// Engine with no disk persistence; everything lives in the memo.
    pub fn in_memory() -> Self {
        Characters {
            memo: DashMap::new(),
            store: None,
        }
    }

    /// Engine backed by `<dir>/characters.txt`, created on demand.  Existing
    /// records are loaded into the memo; conflicting duplicates are an
    /// error.
    pub fn with_cache_dir(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("characters.txt");
        let memo = DashMap::new();
        let mut persisted = HashSet::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let (lam, rho, val) = parse_record(&line)?;
                let key = (lam, rho);
                if let Some(old) = memo.get(&key) {
                    if *old != val {
                        return Err(Error::Cache(format!(
                            "conflicting cached values for lam={} rho={}: {} vs {}",
                            key.0, key.1, *old, val
                        )));
                    }
                } else {
                    memo.insert(key.clone(), val);
                }
                persisted.insert(key);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Characters {
            memo,
            store: Some(Store {
                path,
                persisted: Mutex::new(persisted),
                writer: Mutex::new(BufWriter::new(file)),
            }),
        })
    }

    /// The irreducible character `chi^lam` at cycle type `rho`.
    ///
    /// # Errors
    /// `SizeMismatch` when `|lam| != |rho|`.
    pub fn mn_character(&self, lam: &Partition, rho: &Partition) -> Result<BigInt> {
        if lam.size() != rho.size() {
            return Err(Error::SizeMismatch(format!(
                "character needs |lam| = |rho|, got {} and {}",
                lam.size(),
                rho.size()
            )));
        }
        let val = self.mn_rec(lam, rho.parts());
        self.persist(lam, rho, &val)?;
        Ok(val)
    }

    /// Murnaghan-Nakayama on beta-sets: strip a border strip of length
    /// `rho_1` in every possible way and recurse on the rest of `rho`.
    fn mn_rec(&self, lam: &Partition, rho: &[u32]) -> BigInt {
        if rho.is_empty() {
            return BigInt::one();
        }
        let key = (
            lam.clone(),
            Partition::new(rho.to_vec()).expect("cycle type stays sorted"),
        );
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let r = rho[0];
        let l = lam.len();
        // Strictly decreasing beta numbers lam_i + (l - i).
        let betas: Vec<u32> = (1..=l).map(|i| lam.part(i) + (l - i) as u32).collect();
        let mut total = BigInt::zero();
        for (pos, &b) in betas.iter().enumerate() {
            if b < r {
                break;
            }
            let nb = b - r;
            if betas.contains(&nb) {
                continue;
            }
            // Strip height parity: betas passed over when nb is re-sorted in.
            let between = betas[pos + 1..].iter().filter(|&&x| x > nb).count();
            let mut nbetas = betas.clone();
            nbetas[pos] = nb;
            nbetas.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<u32> = nbetas
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (l - 1 - i) as u32)
                .collect();
            let sub = Partition::from_padded(parts).expect("beta numbers stay decreasing");
            let term = self.mn_rec(&sub, &rho[1..]);
            if between % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    fn persist(&self, lam: &Partition, rho: &Partition, val: &BigInt) -> Result<()> {
        let Some(store) = &self.store else {
            return Ok(());
        };
        let key = (lam.clone(), rho.clone());
        let mut persisted = store.persisted.lock().expect("cache lock");
        if persisted.insert(key) {
            let mut writer = store.writer.lock().expect("cache lock");
            writeln!(writer, "{}", format_record(lam, rho, val))?;
            writer.flush()?;
        }
        Ok(())
    }

    /// The Kronecker coefficient `g(lam, mu, nu)`: the multiplicity of
    /// `chi^lam` in `chi^mu * chi^nu`, computed as the class-weighted
    /// character sum divided by `n!`.
    pub fn kronecker(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
        let n = lam.size();
        if mu.size() != n || nu.size() != n {
            return Err(Error::SizeMismatch(format!(
                "kronecker needs equal sizes, got {}, {}, {}",
                n,
                mu.size(),
                nu.size()
            )));
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        let nfact = factorial(n);
        let mut acc = BigInt::zero();
        for rho in partitions(n) {
            let xl = self.mn_character(lam, &rho)?;
            if xl.is_zero() {
                continue;
            }
            let xm = self.mn_character(mu, &rho)?;
            if xm.is_zero() {
                continue;
            }
            let xn = self.mn_character(nu, &rho)?;
            if xn.is_zero() {
                continue;
            }
            acc += (&nfact / centralizer_order(&rho)) * xl * xm * xn;
        }
        rational_to_nonneg_integer(
            &BigRational::new(acc, nfact),
            &format!("kronecker({lam}; {mu}; {nu})"),
        )
    }

    /// Multiplicity of `S_lam` in the invariants of the `(k, l)` super
    /// matrix algebra, by the character sum
    /// `sum over mu in H(k, l) of |mu| = |lam| of g(lam, mu, mu)`.
    pub fn m_oracle(&self, k: u32, l: u32, lam: &Partition) -> Result<BigInt> {
        let mus = enumerate_hook(HookParams::new(k, l), lam.size());
        let terms = par::map_vec(mus, |mu| self.kronecker(lam, &mu, &mu));
        let mut acc = BigInt::zero();
        for t in terms {
            acc += t?;
        }
        Ok(acc)
    }

    /// Multiplicity of `S_lam` for the enlarged algebra: the sum of
    /// [`Characters::m_oracle`] over all ways of adding one box to `lam`.
    pub fn mbar_oracle(&self, k: u32, l: u32, lam: &Partition) -> Result<BigInt> {
        let ups = lam.add_one_box();
        let terms = par::map_vec(ups, |up| self.m_oracle(k, l, &up));
        let mut acc = BigInt::zero();
        for t in terms {
            acc += t?;
        }
        Ok(acc)
    }

    /// Number of cached records per partition size, for the persisted
    /// store only.
    pub fn cache_stats(&self) -> std::collections::BTreeMap<u64, u64> {
        let mut out = std::collections::BTreeMap::new();
        if let Some(store) = &self.store {
            let persisted = store.persisted.lock().expect("cache lock");
            for (lam, _) in persisted.iter() {
                *out.entry(lam.size()).or_insert(0) += 1;
            }
        }
        out
    }

    /// Drops every persisted record and truncates the backing file.  The
    /// in-memory memo is cleared as well.
    pub fn clear_cache(&self) -> Result<()> {
        self.memo.clear();
        if let Some(store) = &self.store {
            let mut persisted = store.persisted.lock().expect("cache lock");
            persisted.clear();
            let mut writer = store.writer.lock().expect("cache lock");
            writer.flush()?;
            let file = OpenOptions::new().write(true).truncate(true).open(&store.path)?;
            drop(file);
        }
        Ok(())
    }

    /// Path of the backing cache file, when persistence is enabled.
    pub fn cache_path(&self) -> Option<&Path> {
        self.store.as_ref().map(|s| s.path.as_path())
    }
}
