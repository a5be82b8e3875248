//! Dense exact matrices over the rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination on an integer
//! matrix obtained by clearing denominators row by row. Elimination first runs
//! in checked `i128` arithmetic and restarts over big integers on overflow.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Prime used by the finite-field cross-check.
pub const CROSS_CHECK_PRIME: u64 = 32003;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Row-major integer entries. Panics if `entries.len() != rows * cols`.
    pub fn from_integers(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        ExactMatrix {
            rows,
            cols,
            entries: entries.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect(),
        }
    }

    /// Row-major rational entries. Panics if `entries.len() != rows * cols`.
    pub fn from_rationals(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        ExactMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Each row scaled by the lcm of its denominators; rank is unchanged.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = &self.entries[r * self.cols..(r + 1) * self.cols];
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect()
    }

    /// Rank over Q.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let rows = self.integer_rows();
        let small: Option<Vec<Vec<i128>>> = rows
            .iter()
            .map(|row| row.iter().map(|x| x.to_i128()).collect::<Option<Vec<i128>>>())
            .collect();
        if let Some(mut small) = small {
            if let Some(r) = bareiss_rank_i128(&mut small) {
                return r;
            }
        }
        bareiss_rank_big(rows)
    }
}

/// Fraction-free elimination in place; `None` on overflow.
#[allow(clippy::needless_range_loop)]
fn bareiss_rank_i128(a: &mut [Vec<i128>]) -> Option<usize> {
    let rows = a.len();
    let cols = a[0].len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c];
        for i in rank + 1..rows {
            let factor = a[i][c];
            for j in c + 1..cols {
                let x = pivot.checked_mul(a[i][j])?.checked_sub(factor.checked_mul(a[rank][j])?)?;
                a[i][j] = x / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let x = pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&x % &prev).is_zero());
                row[j] = x / &prev;
            }
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.abs().to_u64().expect("residue fits")
}

/// Rank over GF(p) for a prime `p < 2^32`; `None` when some denominator
/// vanishes mod `p`. Never exceeds the rank over Q.
#[allow(clippy::needless_range_loop)]
pub fn rank_mod_prime(m: &ExactMatrix, p: u64) -> Option<usize> {
    assert!(p > 1 && p < (1 << 32), "prime must fit in 32 bits");
    let mut a: Vec<Vec<u64>> = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut row = Vec::with_capacity(m.cols);
        for c in 0..m.cols {
            let x = m.get(r, c);
            let den = reduce_mod(x.denom(), p);
            if den == 0 {
                return None;
            }
            row.push(reduce_mod(x.numer(), p) * mod_pow(den, p - 2, p) % p);
        }
        a.push(row);
    }
    let mut rank = 0;
    for c in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(piv) = (rank..m.rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_pow(a[rank][c], p - 2, p);
        for j in c..m.cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for i in rank + 1..m.rows {
            let f = a[i][c];
            if f == 0 {
                continue;
            }
            for j in c..m.cols {
                a[i][j] = (a[i][j] + p - f * a[rank][j] % p) % p;
            }
        }
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn trivial_ranks() {
        assert_eq!(ExactMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(ExactMatrix::zeros(0, 4).rank(), 0);
        assert_eq!(ExactMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn single_edge_boundary() {
        // delta_1 of {∅, {e}, {e+1}, {e, e+1}}: vertices x edges
        let m = ExactMatrix::from_integers(2, 1, &[-1, 1]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rational_entries() {
        let m = ExactMatrix::from_rationals(2, 2, vec![q(1, 2), q(1, 3), q(3, 2), q(1, 1)]);
        assert_eq!(m.rank(), 1);
        let m = ExactMatrix::from_rationals(2, 2, vec![q(1, 2), q(1, 3), q(3, 2), q(2, 3)]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn big_integer_fallback() {
        // entries near i64::MAX force products past i128 during elimination
        let big = i64::MAX;
        let m = ExactMatrix::from_integers(
            3,
            3,
            &[big, big - 1, 3, big - 2, big, 5, 7, big - 3, big],
        );
        let mut rows: Vec<Vec<i128>> = (0..3)
            .map(|r| (0..3).map(|c| m.get(r, c).to_integer().to_i128().unwrap()).collect())
            .collect();
        assert_eq!(bareiss_rank_i128(&mut rows), None);
        assert_eq!(m.rank(), 3);
        let dependent = ExactMatrix::from_integers(
            3,
            3,
            &[big, big - 1, 3, big - 2, big, 5, 2 * (big / 2), 2 * ((big - 1) / 2), 6],
        );
        assert_eq!(dependent.rank(), dependent.transpose().rank());
    }

    #[test]
    fn mod_prime_detects_characteristic() {
        // det = 2, so the rank drops over GF(2) only
        let m = ExactMatrix::from_integers(2, 2, &[1, 1, -1, 1]);
        assert_eq!(m.rank(), 2);
        assert_eq!(rank_mod_prime(&m, 2), Some(1));
        assert_eq!(rank_mod_prime(&m, CROSS_CHECK_PRIME), Some(2));
        let half = ExactMatrix::from_rationals(1, 1, vec![q(1, 2)]);
        assert_eq!(rank_mod_prime(&half, 2), None);
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (0usize..7, 0usize..7).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(-3i64..=3, r * c))
        })
    }

    proptest! {
        #[test]
        fn rank_matches_transpose_and_prime_field((r, c, v) in small_matrix()) {
            let m = ExactMatrix::from_integers(r, c, &v);
            let rank = m.rank();
            prop_assert!(rank <= r.min(c));
            prop_assert_eq!(rank, m.transpose().rank());
            prop_assert_eq!(Some(rank), rank_mod_prime(&m, CROSS_CHECK_PRIME));
        }

        #[test]
        fn rank_invariant_under_permutation_and_scaling(
            (r, c, v) in small_matrix(),
            seed in any::<u64>(),
            scale in prop_oneof![(-5i64..=-1), (1i64..=5)],
            den in 1i64..=7,
        ) {
            let m = ExactMatrix::from_integers(r, c, &v);
            let rank = m.rank();
            if r == 0 || c == 0 {
                return Ok(());
            }
            let rp = (seed as usize) % r;
            let cp = (seed as usize / 7) % c;
            let mut t = ExactMatrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    let mut x = m.get(i, j).clone();
                    if i == rp {
                        x *= q(scale, den);
                    }
                    t.set((i + rp) % r, (j + cp) % c, x);
                }
            }
            prop_assert_eq!(t.rank(), rank);
        }
    }
}
