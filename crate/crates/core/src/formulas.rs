//! Closed forms for the invariants and Betti sequences of Sally semigroups.
//!
//! Everything is evaluated in exact integer arithmetic. Rational prefactors
//! are checked for exact division instead of being truncated.

use alloc::vec::Vec;

use crate::error::{out_of_range, Error, Result};
use crate::semigroup::{Dropped, SallyParams};
use crate::util::binomial;

/// A closed-form value together with the branch of the formula that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub value: u64,
    pub case: &'static str,
}

impl ClosedFormResult {
    fn new(value: u64, case: &'static str) -> Self {
        ClosedFormResult { value, case }
    }
}

fn check_one(e: u32, m: u32) -> Result<()> {
    SallyParams::one(e, m).map(|_| ())
}

fn check_two(e: u32, m: u32, n: u32) -> Result<()> {
    SallyParams::two(e, m, n).map(|_| ())
}

pub fn frobenius_m(e: u32, m: u32) -> Result<ClosedFormResult> {
    check_one(e, m)?;
    let e = u64::from(e);
    Ok(if m == 1 {
        ClosedFormResult::new(2 * e + 1, "m=1")
    } else {
        ClosedFormResult::new(e + u64::from(m), "otherwise")
    })
}

pub fn type_m(e: u32, m: u32) -> Result<ClosedFormResult> {
    check_one(e, m)?;
    Ok(if m == 1 || m == e - 1 {
        ClosedFormResult::new(1, "m in {1,e-1}")
    } else {
        ClosedFormResult::new(u64::from(e - m), "otherwise")
    })
}

pub fn frobenius_mn(e: u32, m: u32, n: u32) -> Result<ClosedFormResult> {
    check_two(e, m, n)?;
    let (e, n64) = (u64::from(e), u64::from(n));
    Ok(match (m, n) {
        (2, 3) => ClosedFormResult::new(2 * e + 3, "(m,n)=(2,3)"),
        (1, 2 | 3) => ClosedFormResult::new(2 * e + n64, "m=1, n in {2,3}"),
        (1, _) => ClosedFormResult::new(2 * e + 1, "m=1, n>=4"),
        _ => ClosedFormResult::new(e + n64, "otherwise"),
    })
}

/// The `m = 1` branch compares `n` with the half-integers `(e+1)/2` and
/// `(e+2)/2` exactly, so for odd `e` the exceptional value never occurs.
pub fn type_mn(e: u32, m: u32, n: u32) -> Result<ClosedFormResult> {
    check_two(e, m, n)?;
    let e64 = u64::from(e);
    Ok(if m == 1 {
        if n == 2 || n == 3 {
            ClosedFormResult::new(2, "m=1, n in {2,3}")
        } else if 2 * n == e + 2 {
            ClosedFormResult::new(3, "m=1, n=(e+2)/2")
        } else if 2 * n > e {
            ClosedFormResult::new(2, "m=1, n>=(e+1)/2")
        } else {
            ClosedFormResult::new(3, "m=1, 4<=n<(e+1)/2")
        }
    } else if (m, n) == (2, 3) {
        ClosedFormResult::new(1, "(m,n)=(2,3)")
    } else if n <= 2 * m {
        ClosedFormResult::new(e64 - u64::from(n) + 1, "n<=2m")
    } else {
        ClosedFormResult::new(e64 - u64::from(n) + 2, "n>2m")
    })
}

/// Minimal number of generators of the defining ideal of `S_e<m>`.
pub fn mu_m(e: u32, m: u32) -> Result<u64> {
    check_one(e, m)?;
    let c = binomial(u64::from(e) - 1, 2) as u64;
    Ok(if m == 2 { c } else { c - 1 })
}

/// Pseudo-Frobenius numbers of `S_e<m>` read off the gap structure.
pub fn pseudo_frobenius_m(e: u32, m: u32) -> Result<Vec<u64>> {
    check_one(e, m)?;
    let (e, m) = (u64::from(e), u64::from(m));
    Ok(if m == 1 {
        alloc::vec![2 * e + 1]
    } else if m == e - 1 {
        alloc::vec![2 * e - 1]
    } else {
        let mut pf: Vec<u64> = (m + 1..e).collect();
        pf.push(e + m);
        pf
    })
}

/// Pseudo-Frobenius numbers of `S_e<m,n>`, sorted.
pub fn pseudo_frobenius_mn(e: u32, m: u32, n: u32) -> Result<Vec<u64>> {
    check_two(e, m, n)?;
    let (e, m, n) = (u64::from(e), u64::from(m), u64::from(n));
    let mut pf = if (m, n) == (2, 3) {
        alloc::vec![2 * e + 3]
    } else if m == 1 && (n == 2 || n == 3) {
        alloc::vec![2 * e + 1, 2 * e + n]
    } else if m == 1 {
        let mut pf = alloc::vec![e + n, 2 * e + 1];
        if 2 * n < e + 1 || 2 * n == e + 2 {
            pf.push(e - n + 1);
        }
        pf
    } else {
        // gaps above n: [n+1, e-1] together with e+m and e+n
        let mut pf: Vec<u64> = (n + 1..e).collect();
        pf.extend([e + m, e + n]);
        if n > 2 * m {
            pf.push(n - m);
        }
        pf
    };
    pf.sort_unstable();
    Ok(pf)
}

pub fn is_symmetric_closed(p: &SallyParams) -> bool {
    match p.dropped() {
        Dropped::One(m) => m == 1 || m == p.e() - 1,
        Dropped::Two(m, n) => (m, n) == (2, 3),
    }
}

/// Symmetric semigroups count as almost symmetric, so `(2,3)` is included.
pub fn is_almost_symmetric_closed(p: &SallyParams) -> bool {
    match p.dropped() {
        Dropped::One(_) => true,
        Dropped::Two(m, n) => is_symmetric_closed(p) || (m >= 2 && n > 2 * m),
    }
}

/// Families whose Betti sequences are known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    S1,
    S2,
    S23,
    S34,
    SeMinus1,
}

impl Family {
    pub fn of(p: &SallyParams) -> Option<Family> {
        match p.dropped() {
            Dropped::One(1) => Some(Family::S1),
            Dropped::One(2) => Some(Family::S2),
            Dropped::One(m) if m == p.e() - 1 => Some(Family::SeMinus1),
            Dropped::Two(2, 3) => Some(Family::S23),
            Dropped::Two(3, 4) => Some(Family::S34),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::S1 => "S1",
            Family::S2 => "S2",
            Family::S23 => "S23",
            Family::S34 => "S34",
            Family::SeMinus1 => "Se-1",
        }
    }

    fn min_e(self) -> u32 {
        match self {
            Family::S23 | Family::S34 => 6,
            _ => 4,
        }
    }

    /// Projective dimension: the last index of the Betti sequence.
    pub fn top_index(self, e: u32) -> u32 {
        match self {
            Family::S1 | Family::S2 | Family::SeMinus1 => e - 2,
            Family::S23 | Family::S34 => e - 3,
        }
    }
}

fn exact_div(num: u128, den: u128) -> Result<u64> {
    if den == 0 || num % den != 0 {
        return Err(Error::NonIntegerFormulaValue { numerator: num, denominator: den });
    }
    u64::try_from(num / den).map_err(|_| Error::Overflow)
}

/// `beta_t` of the family at multiplicity `e`, `0 <= t <= top_index(e)`.
pub fn betti_closed(family: Family, e: u32, t: u32) -> Result<u64> {
    if e < family.min_e() {
        return Err(out_of_range(alloc::format!("{} needs e >= {}", family.name(), family.min_e())));
    }
    let top = family.top_index(e);
    if t > top {
        return Err(out_of_range(alloc::format!("t = {t} exceeds {top} for {} at e = {e}", family.name())));
    }
    if t == 0 {
        return Ok(1);
    }
    let (e, t) = (u64::from(e), u64::from(t));
    match family {
        Family::S1 | Family::SeMinus1 => {
            if t == e - 2 {
                return Ok(1);
            }
            exact_div(u128::from(e * t) * binomial(e - 2, t + 1), u128::from(e - t - 1))
        }
        Family::S2 => exact_div(u128::from(t) * binomial(e - 1, t + 1), 1),
        Family::S23 => {
            if t == e - 3 {
                return Ok(1);
            }
            exact_div(u128::from(t * (e - 1)) * binomial(e - 3, t + 1), u128::from(e - t - 2))
        }
        Family::S34 => exact_div(u128::from(t) * binomial(e - 2, t + 1), 1),
    }
}

/// `[beta_0, ..., beta_top]` for the family.
pub fn betti_closed_sequence(family: Family, e: u32) -> Result<Vec<u64>> {
    if e < family.min_e() {
        return Err(out_of_range(alloc::format!("{} needs e >= {}", family.name(), family.min_e())));
    }
    (0..=family.top_index(e)).map(|t| betti_closed(family, e, t)).collect()
}

/// `t * C(width + 1, t + 1)`, meaningful for `t >= 1`.
pub fn cms_bound(width: u64, t: u64) -> u128 {
    u128::from(t) * binomial(width + 1, t + 1)
}
