//! Scanners for five conjectured identities between total Betti numbers of
//! Sally semigroups at a fixed multiplicity `e`.
//!
//! Write `beta_j(m)` for `beta_j(S_e<m>)` and `beta_j(m,n)` for
//! `beta_j(S_e<m,n>)`. Every scan enumerates the instances the conjecture
//! quantifies over at this `e`, for `j >= 1`:
//!
//! 1. For `2 <= m <= e-1`: `beta_j(m) = beta_j(1)` when `j <= m-2`, and
//!    `beta_j(m) = beta_j(1) + C(e-m, j+1-m)` for `max(1, m-1) <= j <= e-2`.
//! 2. For `6 <= n <= e-1`: `beta_j(2,n) = beta_j(2,3)` when `j <= n-5`, and
//!    one more at `j = n-4`. For `n = e-1` the increments `+1, +3, +2` at
//!    `j = e-5, e-4, e-3` are also checked, together with
//!    `beta_{e-3}(2,e-1) = 3`.
//! 3. For `n` in `{4, 5}`: `beta_j(2,n) = j C(e-2, j+1)`, `1 <= j <= e-3`.
//! 4. For `4 <= m <= n <= e-2`: `beta_j(n,n+1) = beta_j(m,m+1)`,
//!    `1 <= j <= m-3`.
//! 5. `beta_j(1,e-1) = j C(e-3,j+1) + (e-4-j) C(e-3,e-2-j)` for
//!    `1 <= j <= e-5`, then `2e-7` at `j = e-4` and `2` at `j = e-3`; and for
//!    `3 <= m <= e-2`, `beta_j(m,e-1) = beta_j(1,e-1)` for `j <= m-2`.
//!
//! For the last two indices of conjecture 5 the original statement mixes the
//! index into an otherwise constant expression; the scanner compares against
//! the constants `2e-7` and `2`.
//!
//! Indices past the end of a Betti sequence read as zero. A report with no
//! instances at all is marked inapplicable.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{out_of_range, Result};
use crate::hochster::betti_table;
use crate::semigroup::SallyParams;
use crate::util::binomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        }
    }
}

/// One instance of a conjectured identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub params: String,
    pub j: u32,
    pub relation: &'static str,
    pub lhs: u64,
    pub rhs: u64,
}

impl Case {
    pub fn verdict(&self) -> Verdict {
        if self.lhs == self.rhs {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub id: u32,
    pub e: u32,
    pub cases: Vec<Case>,
}

impl ConjectureReport {
    pub fn holds(&self) -> usize {
        self.cases.iter().filter(|c| c.verdict() == Verdict::Holds).count()
    }

    pub fn fails(&self) -> usize {
        self.cases.len() - self.holds()
    }

    pub fn inapplicable(&self) -> bool {
        self.cases.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.verdict() == Verdict::Fails)
    }
}

/// Tab-separated report with a header and a summary line.
impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# conjecture {} e={}", self.id, self.e)?;
        writeln!(f, "params\tj\trelation\tlhs\trhs\tverdict")?;
        for c in &self.cases {
            writeln!(f, "{}\t{}\t{}\t{}\t{}\t{}", c.params, c.j, c.relation, c.lhs, c.rhs, c.verdict().as_str())?;
        }
        writeln!(
            f,
            "# summary holds={} fails={} inapplicable={}",
            self.holds(),
            self.fails(),
            u8::from(self.inapplicable())
        )
    }
}

fn validate(id: u32, e: u32) -> Result<()> {
    if !(1..=5).contains(&id) {
        return Err(out_of_range(format!("conjecture id must be in 1..=5, got {id}")));
    }
    if e < 6 {
        return Err(out_of_range(format!("conjecture scans need e >= 6, got {e}")));
    }
    Ok(())
}

/// Semigroups whose Betti sequences the scan of conjecture `id` reads, in
/// first-use order without repeats.
pub fn required_semigroups(id: u32, e: u32) -> Result<Vec<SallyParams>> {
    validate(id, e)?;
    let mut out: Vec<SallyParams> = Vec::new();
    scan_with(id, e, |p| {
        if !out.contains(p) {
            out.push(*p);
        }
        Vec::new()
    })?;
    Ok(out)
}

fn at(seq: &[u64], j: u32) -> u64 {
    seq.get(j as usize).copied().unwrap_or(0)
}

fn c(n: u32, k: u32) -> u64 {
    binomial(u64::from(n), u64::from(k)) as u64
}

/// Runs the scan with Betti sequences supplied by `totals`.
pub fn scan_with<F>(id: u32, e: u32, mut totals: F) -> Result<ConjectureReport>
where
    F: FnMut(&SallyParams) -> Vec<u64>,
{
    validate(id, e)?;
    let mut beta = |p: Result<SallyParams>| -> Result<Vec<u64>> { Ok(totals(&p?)) };
    let mut cases = Vec::new();
    let mut add = |params: String, j: u32, relation: &'static str, lhs: u64, rhs: u64| {
        cases.push(Case { params, j, relation, lhs, rhs });
    };
    match id {
        1 => {
            let one = beta(SallyParams::one(e, 1))?;
            for m in 2..e {
                let bm = beta(SallyParams::one(e, m))?;
                for j in 1..m.saturating_sub(1) {
                    add(format!("m={m}"), j, "beta_j(m) = beta_j(1)", at(&bm, j), at(&one, j));
                }
                for j in (m - 1).max(1)..e - 1 {
                    let rhs = at(&one, j) + c(e - m, j + 1 - m);
                    add(format!("m={m}"), j, "beta_j(m) = beta_j(1) + C(e-m, j+1-m)", at(&bm, j), rhs);
                }
            }
        }
        2 => {
            let base = beta(SallyParams::two(e, 2, 3))?;
            for n in 6..e {
                let bn = beta(SallyParams::two(e, 2, n))?;
                for j in 1..n - 4 {
                    add(format!("n={n}"), j, "beta_j(2,n) = beta_j(2,3)", at(&bn, j), at(&base, j));
                }
                add(format!("n={n}"), n - 4, "beta_j(2,n) = beta_j(2,3) + 1", at(&bn, n - 4), at(&base, n - 4) + 1);
            }
            let top = beta(SallyParams::two(e, 2, e - 1))?;
            let p = format!("n={},observation", e - 1);
            for j in 1..e - 5 {
                add(p.clone(), j, "beta_j(2,e-1) = beta_j(2,3)", at(&top, j), at(&base, j));
            }
            add(p.clone(), e - 5, "beta_j(2,e-1) = beta_j(2,3) + 1", at(&top, e - 5), at(&base, e - 5) + 1);
            add(p.clone(), e - 4, "beta_j(2,e-1) = beta_j(2,3) + 3", at(&top, e - 4), at(&base, e - 4) + 3);
            add(p.clone(), e - 3, "beta_j(2,e-1) = beta_j(2,3) + 2", at(&top, e - 3), at(&base, e - 3) + 2);
            add(p, e - 3, "beta_j(2,e-1) = 3", at(&top, e - 3), 3);
        }
        3 => {
            for n in [4, 5] {
                if n > e - 1 {
                    continue;
                }
                let bn = beta(SallyParams::two(e, 2, n))?;
                for j in 1..e - 2 {
                    add(format!("n={n}"), j, "beta_j(2,n) = j*C(e-2, j+1)", at(&bn, j), u64::from(j) * c(e - 2, j + 1));
                }
            }
        }
        4 => {
            for m in 4..e - 1 {
                let bm = beta(SallyParams::two(e, m, m + 1))?;
                for n in m..e - 1 {
                    let bn = beta(SallyParams::two(e, n, n + 1))?;
                    for j in 1..m - 2 {
                        add(format!("m={m},n={n}"), j, "beta_j(n,n+1) = beta_j(m,m+1)", at(&bn, j), at(&bm, j));
                    }
                }
            }
        }
        5 => {
            let b1 = beta(SallyParams::two(e, 1, e - 1))?;
            let p = format!("n={}", e - 1);
            for j in 1..e - 4 {
                let rhs = u64::from(j) * c(e - 3, j + 1) + u64::from(e - 4 - j) * c(e - 3, e - 2 - j);
                add(p.clone(), j, "beta_j(1,e-1) = j*C(e-3,j+1) + (e-4-j)*C(e-3,e-2-j)", at(&b1, j), rhs);
            }
            add(p.clone(), e - 4, "beta_j(1,e-1) = 2e-7", at(&b1, e - 4), u64::from(2 * e - 7));
            add(p, e - 3, "beta_j(1,e-1) = 2", at(&b1, e - 3), 2);
            for m in 3..e - 1 {
                let bm = beta(SallyParams::two(e, m, e - 1))?;
                for j in 1..m - 1 {
                    add(format!("m={m}"), j, "beta_j(m,e-1) = beta_j(1,e-1)", at(&bm, j), at(&b1, j));
                }
            }
        }
        _ => unreachable!("validated above"),
    }
    Ok(ConjectureReport { id, e, cases })
}

/// Runs the scan with Betti sequences from the Hochster engine.
pub fn scan(id: u32, e: u32) -> Result<ConjectureReport> {
    let mut cache: Vec<(SallyParams, Vec<u64>)> = Vec::new();
    scan_with(id, e, |p| {
        if let Some((_, t)) = cache.iter().find(|(q, _)| q == p) {
            return t.clone();
        }
        let t = betti_table(&p.semigroup(), None).totals().to_vec();
        cache.push((*p, t.clone()));
        t
    })
}
