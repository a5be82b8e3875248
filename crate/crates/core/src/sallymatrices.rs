//! Two-row monomial matrices whose 2x2 minors generate the defining ideals
//! of `S_e<m>`, `S_e<2,3>` and `S_e<3,4>`.
//!
//! Entries are written with indices up to `e + 4`. An index `i < e` is the
//! variable `X_i`; larger indices are shorthand for quadrics, and the meaning
//! of the shorthand depends on the construction:
//!
//! | index   | `A_m`, `B_m`, `A_{2,3}`, `B_{2,3}` | `A_{3,4}`, `B_{3,4}`, `A'` |
//! |---------|-----------------------------------|----------------------------|
//! | `e`     | `X_0^2`                           | `X_0^2`                    |
//! | `e + 1` | `X_0 X_1`                         | `X_0 X_1`                  |
//! | `e + 2` | `X_1^2`                           | `X_0 X_2`                  |
//! | `e + 3` |                                   | `X_1 X_2`                  |
//! | `e + 4` |                                   | `X_2^2`                    |
//!
//! A run such as `X_{m+1} ... X_{e-1}` in a row means every index in between.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{out_of_range, Result};
use crate::fibers::{Binomial, Monomial};
use crate::semigroup::SallyParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shorthand {
    /// `X_0^2, X_0 X_1, X_1^2`.
    TwoVariables,
    /// `X_0^2, X_0 X_1, X_0 X_2, X_1 X_2, X_2^2`.
    ThreeVariables,
}

fn expand(index: u32, e: u32, table: Shorthand) -> Monomial {
    if index < e {
        return Monomial::var(index as usize);
    }
    let pair = match (table, index - e) {
        (_, 0) => (0, 0),
        (_, 1) => (0, 1),
        (Shorthand::TwoVariables, 2) => (1, 1),
        (Shorthand::ThreeVariables, 2) => (0, 2),
        (Shorthand::ThreeVariables, 3) => (1, 2),
        (Shorthand::ThreeVariables, 4) => (2, 2),
        _ => panic!("index e + {} has no expansion", index - e),
    };
    Monomial::var(pair.0).mul(&Monomial::var(pair.1))
}

/// A 2-row matrix of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    name: String,
    top: Vec<Monomial>,
    bottom: Vec<Monomial>,
    /// The column whose minors enter the generating set, when the matrix
    /// only contributes some of its minors.
    special_column: Option<usize>,
}

impl MonomialMatrix {
    /// Builds a matrix from its top-row indices; the bottom row is the top
    /// row shifted by `offset`.
    fn shifted(name: String, e: u32, top: &[u32], offset: u32, table: Shorthand) -> Self {
        MonomialMatrix {
            name,
            top: top.iter().map(|&i| expand(i, e, table)).collect(),
            bottom: top.iter().map(|&i| expand(i + offset, e, table)).collect(),
            special_column: None,
        }
    }

    pub fn from_rows(name: impl Into<String>, top: Vec<Monomial>, bottom: Vec<Monomial>) -> Self {
        assert_eq!(top.len(), bottom.len(), "rows must have equal length");
        MonomialMatrix { name: name.into(), top, bottom, special_column: None }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cols(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[Monomial] {
        &self.top
    }

    pub fn bottom(&self) -> &[Monomial] {
        &self.bottom
    }

    pub fn special_column(&self) -> Option<usize> {
        self.special_column
    }

    /// Column `c` as `(top, bottom)`.
    pub fn column(&self, c: usize) -> (&Monomial, &Monomial) {
        (&self.top[c], &self.bottom[c])
    }

    /// True when `deg(bottom) - deg(top)` is the same in every column, which
    /// makes every 2x2 minor homogeneous.
    pub fn is_homogeneous(&self, base: u64) -> bool {
        let diff = |c: usize| self.bottom[c].weighted_degree(base) as i128 - self.top[c].weighted_degree(base) as i128;
        (1..self.cols()).all(|c| diff(c) == diff(0))
    }

    /// 2x2 minors `top[j] bottom[k] - top[k] bottom[j]` for `j < k`, skipping
    /// those that vanish identically. With `column`, only minors using that
    /// column are returned.
    pub fn minors2(&self, column: Option<usize>) -> Vec<Binomial> {
        let mut out = Vec::new();
        for j in 0..self.cols() {
            for k in j + 1..self.cols() {
                if column.is_some_and(|c| c != j && c != k) {
                    continue;
                }
                let lhs = self.top[j].mul(&self.bottom[k]);
                let rhs = self.top[k].mul(&self.bottom[j]);
                if lhs != rhs {
                    out.push(Binomial::new(lhs, rhs));
                }
            }
        }
        out
    }
}

impl core::fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (k, row) in [&self.top, &self.bottom].into_iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

fn range(a: u32, b: u32) -> impl Iterator<Item = u32> {
    a..=b
}

/// `A_m`: columns `X_i` over `X_{i+1}` for `i` in `[0, m-2] ∪ [m+1, e-1]`.
pub fn matrix_a(e: u32, m: u32) -> Result<MonomialMatrix> {
    SallyParams::one(e, m)?;
    let top: Vec<u32> = (0..m - 1).chain(range(m + 1, e - 1)).collect();
    Ok(MonomialMatrix::shifted(alloc::format!("A_{m}"), e, &top, 1, Shorthand::TwoVariables))
}

/// `B_m`: columns `X_i` over `X_{i+2}`; the column `[X_{m-1}; X_{m+1}]` is
/// marked special.
pub fn matrix_b(e: u32, m: u32) -> Result<MonomialMatrix> {
    SallyParams::one(e, m)?;
    let top: Vec<u32> = if m == 1 {
        core::iter::once(0).chain(range(2, e - 2)).collect()
    } else if m == 2 {
        core::iter::once(1).chain(range(3, e)).collect()
    } else if m == e - 1 {
        range(0, e - 4).chain(core::iter::once(e - 2)).collect()
    } else {
        (0..m - 2).chain(core::iter::once(m - 1)).chain(range(m + 1, e - 1)).collect()
    };
    let special = top.iter().position(|&i| i == m - 1);
    let mut b = MonomialMatrix::shifted(alloc::format!("B_{m}"), e, &top, 2, Shorthand::TwoVariables);
    b.special_column = special;
    Ok(b)
}

/// `A_{m,m+1}`: columns `X_i` over `X_{i+1}` for `i` in
/// `[0, m-2] ∪ [m+2, e-1]`.
pub fn matrix_a_mm1(e: u32, m: u32) -> Result<MonomialMatrix> {
    if m < 2 {
        return Err(out_of_range("A_{m,m+1} needs m >= 2"));
    }
    SallyParams::two(e, m, m + 1)?;
    let top: Vec<u32> = range(0, m - 2).chain(range(m + 2, e - 1)).collect();
    Ok(MonomialMatrix::shifted(alloc::format!("A_{{{m},{}}}", m + 1), e, &top, 1, Shorthand::TwoVariables))
}

/// `(A_{2,3}, B_{2,3})`; the first column of `B_{2,3}` is special.
pub fn matrix_pair_23(e: u32) -> Result<(MonomialMatrix, MonomialMatrix)> {
    SallyParams::two(e, 2, 3)?;
    let a_top: Vec<u32> = core::iter::once(0).chain(range(4, e - 1)).collect();
    let b_top: Vec<u32> = core::iter::once(1).chain(range(4, e - 1)).collect();
    let a = MonomialMatrix::shifted("A_{2,3}".into(), e, &a_top, 1, Shorthand::TwoVariables);
    let mut b = MonomialMatrix::shifted("B_{2,3}".into(), e, &b_top, 3, Shorthand::TwoVariables);
    b.special_column = Some(0);
    Ok((a, b))
}

/// `(A_{3,4}, B_{3,4})`; the first column of `B_{3,4}` is special.
pub fn matrix_pair_34(e: u32) -> Result<(MonomialMatrix, MonomialMatrix)> {
    SallyParams::two(e, 3, 4)?;
    let a_top: Vec<u32> = [0, 1].into_iter().chain(range(5, e - 1)).collect();
    let b_top: Vec<u32> = core::iter::once(2).chain(range(5, e + 1)).collect();
    let a = MonomialMatrix::shifted("A_{3,4}".into(), e, &a_top, 1, Shorthand::ThreeVariables);
    let mut b = MonomialMatrix::shifted("B_{3,4}".into(), e, &b_top, 3, Shorthand::ThreeVariables);
    b.special_column = Some(0);
    Ok((a, b))
}

/// `A' = [X_e X_{e+1} X_5 ... X_{e-1}; X_{e+1} X_{e+2} X_6 ... X_e]` with the
/// three-variable shorthand.
pub fn matrix_a_prime_34(e: u32) -> Result<MonomialMatrix> {
    SallyParams::two(e, 3, 4)?;
    let t = Shorthand::ThreeVariables;
    let top_idx: Vec<u32> = [e, e + 1].into_iter().chain(range(5, e - 1)).collect();
    let bottom_idx: Vec<u32> = [e + 1, e + 2].into_iter().chain(range(6, e)).collect();
    Ok(MonomialMatrix::from_rows(
        "A'",
        top_idx.iter().map(|&i| expand(i, e, t)).collect(),
        bottom_idx.iter().map(|&i| expand(i, e, t)).collect(),
    ))
}

/// All minors of `A_m` plus the minors of `B_m` through its special column.
pub fn claimed_generators(e: u32, m: u32) -> Result<Vec<Binomial>> {
    let a = matrix_a(e, m)?;
    let b = matrix_b(e, m)?;
    let mut out = a.minors2(None);
    out.extend(b.minors2(b.special_column));
    Ok(out)
}

/// All minors of `A_{2,3}` plus the minors of `B_{2,3}` through its first
/// column.
pub fn claimed_generators_23(e: u32) -> Result<Vec<Binomial>> {
    let (a, b) = matrix_pair_23(e)?;
    let mut out = a.minors2(None);
    out.extend(b.minors2(b.special_column));
    Ok(out)
}

/// All minors of `A_{3,4}` plus the minors of `B_{3,4}` through its first
/// column.
pub fn claimed_generators_34(e: u32) -> Result<Vec<Binomial>> {
    let (a, b) = matrix_pair_34(e)?;
    let mut out = a.minors2(None);
    out.extend(b.minors2(b.special_column));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::mu_m;
    use crate::util::binomial;

    fn x(i: usize) -> Monomial {
        Monomial::var(i)
    }

    fn sq(i: usize) -> Monomial {
        Monomial::var_pow(i, 2)
    }

    #[test]
    fn a_m_example() {
        let a = matrix_a(6, 3).unwrap();
        assert_eq!(a.top(), [x(0), x(1), x(4), x(5)]);
        assert_eq!(a.bottom(), [x(1), x(2), x(5), sq(0)]);
        assert_eq!(a.to_string(), "X_0 X_1 X_4 X_5; X_1 X_2 X_5 X_0^2");
    }

    #[test]
    fn b_m_cases() {
        let b = matrix_b(6, 3).unwrap();
        assert_eq!(b.top(), [x(0), x(2), x(4), x(5)]);
        assert_eq!(b.bottom(), [x(2), x(4), sq(0), x(0).mul(&x(1))]);
        assert_eq!(b.special_column(), Some(1));

        let b1 = matrix_b(6, 1).unwrap();
        assert_eq!(b1.top(), [x(0), x(2), x(3), x(4)]);
        assert_eq!(b1.bottom(), [x(2), x(4), x(5), sq(0)]);
        assert_eq!(b1.special_column(), Some(0));

        let b2 = matrix_b(6, 2).unwrap();
        assert_eq!(b2.top(), [x(1), x(3), x(4), x(5), sq(0)]);
        assert_eq!(b2.bottom(), [x(3), x(5), sq(0), x(0).mul(&x(1)), sq(1)]);
        assert_eq!(b2.special_column(), Some(0));

        let b5 = matrix_b(6, 5).unwrap();
        assert_eq!(b5.top(), [x(0), x(1), x(2), x(4)]);
        assert_eq!(b5.bottom(), [x(2), x(3), x(4), sq(0)]);
        assert_eq!(b5.special_column(), Some(3));
    }

    #[test]
    fn special_column_is_x_m_minus_1_over_x_m_plus_1() {
        for e in 4..=12 {
            for m in 1..e {
                let b = matrix_b(e, m).unwrap();
                let c = b.special_column().expect("special column exists");
                let (t, d) = b.column(c);
                assert_eq!(*t, x(m as usize - 1));
                assert_eq!(*d, if m + 1 < e { x(m as usize + 1) } else { sq(0) });
            }
        }
    }

    #[test]
    fn family_matrices() {
        let (a, b) = matrix_pair_23(7).unwrap();
        assert_eq!(a.cols(), 4);
        assert_eq!(b.cols(), 4);
        let (a, _) = matrix_pair_23(6).unwrap();
        assert_eq!(a.top(), [x(0), x(4), x(5)]);
        assert_eq!(a.bottom(), [x(1), x(5), sq(0)]);
        let (a, b) = matrix_pair_34(7).unwrap();
        assert_eq!(a.cols(), 4);
        assert_eq!(b.cols(), 5);
        assert_eq!(b.column(4), (&x(0).mul(&x(1)), &sq(2)));
        assert_eq!(matrix_a_mm1(7, 2).unwrap().top(), matrix_pair_23(7).unwrap().0.top());
        assert_eq!(matrix_a_mm1(7, 3).unwrap().bottom(), matrix_pair_34(7).unwrap().0.bottom());
        assert!(matrix_a_mm1(7, 1).is_err());
        assert!(matrix_a_mm1(7, 6).is_err());
    }

    #[test]
    fn minors_counts() {
        assert_eq!(matrix_a(6, 3).unwrap().minors2(None).len(), 6);
        let b = matrix_b(6, 3).unwrap();
        assert_eq!(b.minors2(b.special_column()).len(), 3);
        let thin = MonomialMatrix::from_rows("thin", vec![x(0)], vec![x(1)]);
        assert!(thin.minors2(None).is_empty());
        assert_eq!(claimed_generators(7, 2).unwrap().len(), 15);
        assert_eq!(claimed_generators_23(7).unwrap().len(), 9);
        assert_eq!(claimed_generators_34(7).unwrap().len(), 10);
        assert_eq!(claimed_generators_23(8).unwrap().len(), 14);
    }

    #[test]
    fn claimed_counts_match_mu() {
        for e in 6..=12u32 {
            for m in 1..e {
                assert_eq!(claimed_generators(e, m).unwrap().len() as u64, mu_m(e, m).unwrap(), "e={e} m={m}");
            }
            let c3 = binomial(u64::from(e) - 3, 2) as usize;
            assert_eq!(claimed_generators_23(e).unwrap().len(), c3 + e as usize - 4);
            assert_eq!(claimed_generators_34(e).unwrap().len(), c3 + e as usize - 3);
        }
    }

    #[test]
    fn every_matrix_is_homogeneous() {
        for e in 6..=12u32 {
            let base = u64::from(e);
            for m in 1..e {
                assert!(matrix_a(e, m).unwrap().is_homogeneous(base));
                assert!(matrix_b(e, m).unwrap().is_homogeneous(base));
            }
            for m in 2..e - 1 {
                assert!(matrix_a_mm1(e, m).unwrap().is_homogeneous(base));
            }
            let (a, b) = matrix_pair_23(e).unwrap();
            assert!(a.is_homogeneous(base) && b.is_homogeneous(base));
            let (a, b) = matrix_pair_34(e).unwrap();
            assert!(a.is_homogeneous(base) && b.is_homogeneous(base));
            assert!(matrix_a_prime_34(e).unwrap().is_homogeneous(base));
            for g in claimed_generators_34(e).unwrap() {
                assert!(g.is_homogeneous(base));
            }
        }
    }
}
