//! Numerical semigroups given by generators.
//!
//! Every query is answered from the Apery table with respect to the
//! multiplicity: `apery[r]` is the least element of `S` congruent to `r`
//! modulo `s_1`, so `x` is in `S` iff `x >= apery[x mod s_1]`.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{out_of_range, Error, Result};
use crate::util::gcd;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
}

/// Shortest-path table over residues mod `modulus`, where each generator is an
/// edge of weight equal to its value. Unreachable residues are `None`.
fn apery_table(modulus: u64, generators: &[u64]) -> Result<Vec<Option<u64>>> {
    let len = usize::try_from(modulus).map_err(|_| Error::Overflow)?;
    let mut dist: Vec<Option<u64>> = vec![None; len];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &g in generators {
            let nd = d.checked_add(g).ok_or(Error::Overflow)?;
            let nr = (nd % modulus) as usize;
            if dist[nr].map_or(true, |old| nd < old) {
                dist[nr] = Some(nd);
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok(dist)
}

fn in_table(table: &[Option<u64>], x: u64) -> bool {
    let r = (x % table.len() as u64) as usize;
    table[r].is_some_and(|a| x >= a)
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, keeping only a minimal
    /// generating subset. Zeros and duplicates are dropped.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        let mut sorted: Vec<u64> = gens.iter().copied().filter(|&x| x > 0).collect();
        sorted.sort_unstable();
        sorted.dedup();

        let multiplicity = sorted[0];
        let mut minimal = vec![multiplicity];
        let mut table = apery_table(multiplicity, &minimal)?;
        for &candidate in &sorted[1..] {
            // only smaller generators can sum to `candidate`
            if in_table(&table, candidate) {
                continue;
            }
            minimal.push(candidate);
            table = apery_table(multiplicity, &minimal)?;
        }
        let apery = table
            .into_iter()
            .map(|a| a.expect("gcd 1 reaches every residue"))
            .collect();
        Ok(NumericalSemigroup { generators: minimal, apery })
    }

    /// The semigroup `N = <1>`.
    pub fn naturals() -> Self {
        NumericalSemigroup { generators: vec![1], apery: vec![0] }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn width(&self) -> u64 {
        self.generators[self.generators.len() - 1] - self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.apery[(x % self.multiplicity()) as usize]
    }

    pub fn contains_u64(&self, x: u64) -> bool {
        x >= self.apery[(x % self.multiplicity()) as usize]
    }

    /// Number of gaps, read off the Apery table: `sum_r (apery[r] - r) / s_1`.
    pub fn genus(&self) -> u64 {
        let e = self.multiplicity();
        self.apery.iter().enumerate().map(|(r, &a)| (a - r as u64) / e).sum()
    }

    /// Largest gap, or `None` for `N`.
    fn frobenius_opt(&self) -> Option<u64> {
        let max = *self.apery.iter().max().expect("apery table is nonempty");
        max.checked_sub(self.multiplicity())
    }

    pub fn gaps(&self) -> Vec<u64> {
        match self.frobenius_opt() {
            None => Vec::new(),
            Some(f) => (1..=f).filter(|&x| !self.contains_u64(x)).collect(),
        }
    }

    pub fn frobenius(&self) -> Result<u64> {
        self.frobenius_opt().ok_or(Error::NoGaps)
    }

    /// Gaps `x` with `x + s` in `S` for every nonzero `s` in `S`. Closure under
    /// the minimal generators is enough, since every nonzero element is a
    /// generator plus an element of `S`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>> {
        self.frobenius()?;
        Ok(self
            .gaps()
            .into_iter()
            .filter(|&x| self.generators.iter().all(|&s| self.contains_u64(x + s)))
            .collect())
    }

    /// Cohen-Macaulay type, the number of pseudo-Frobenius numbers.
    pub fn cm_type(&self) -> Result<usize> {
        Ok(self.pseudo_frobenius()?.len())
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        let f = self.frobenius()?;
        Ok((0..=f).all(|x| self.contains_u64(x) != self.contains_u64(f - x)))
    }

    pub fn is_almost_symmetric(&self) -> Result<bool> {
        let f = self.frobenius()?;
        let t = self.cm_type()? as u64;
        Ok(2 * self.genus() == f + t)
    }
}

/// Which elements of `[e, 2e-1]` are removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dropped {
    One(u32),
    Two(u32, u32),
}

/// Parameters of `S_e<m>` or `S_e<m,n>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SallyParams {
    e: u32,
    dropped: Dropped,
}

impl SallyParams {
    pub fn one(e: u32, m: u32) -> Result<Self> {
        if e < 4 {
            return Err(out_of_range(format!("e = {e}, need e >= 4")));
        }
        if m < 1 || m > e - 1 {
            return Err(out_of_range(format!("m = {m}, need 1 <= m <= {}", e - 1)));
        }
        Ok(SallyParams { e, dropped: Dropped::One(m) })
    }

    /// Two dropped generators need `e >= 6`; for `e = 4, 5` the semigroup is
    /// symmetric or a space monomial curve and is not treated as a family here.
    pub fn two(e: u32, m: u32, n: u32) -> Result<Self> {
        if e < 6 {
            return Err(out_of_range(format!("e = {e}, need e >= 6 when two generators are dropped")));
        }
        if !(1 <= m && m < n && n < e) {
            return Err(out_of_range(format!("(m, n) = ({m}, {n}), need 1 <= m < n <= {}", e - 1)));
        }
        Ok(SallyParams { e, dropped: Dropped::Two(m, n) })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn dropped(&self) -> Dropped {
        self.dropped
    }

    pub fn m(&self) -> u32 {
        match self.dropped {
            Dropped::One(m) | Dropped::Two(m, _) => m,
        }
    }

    pub fn n(&self) -> Option<u32> {
        match self.dropped {
            Dropped::One(_) => None,
            Dropped::Two(_, n) => Some(n),
        }
    }

    fn is_dropped(&self, i: u32) -> bool {
        match self.dropped {
            Dropped::One(m) => i == m,
            Dropped::Two(m, n) => i == m || i == n,
        }
    }

    /// Generators `e + i`, `i` in `[0, e-1]` minus the dropped offsets.
    pub fn generators(&self) -> Vec<u64> {
        (0..self.e)
            .filter(|&i| !self.is_dropped(i))
            .map(|i| u64::from(self.e + i))
            .collect()
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        // every element of [e, 2e-1] is minimal since sums of two are >= 2e
        NumericalSemigroup::from_generators(&self.generators())
            .expect("e and e+1 or e and e+2 are coprime partners")
    }
}

impl core::fmt::Display for SallyParams {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self.dropped {
            Dropped::One(m) => write!(f, "S_{}<{}>", self.e, m),
            Dropped::Two(m, n) => write!(f, "S_{}<{},{}>", self.e, m, n),
        }
    }
}

pub fn sally_one(e: u32, m: u32) -> Result<NumericalSemigroup> {
    Ok(SallyParams::one(e, m)?.semigroup())
}

pub fn sally_two(e: u32, m: u32, n: u32) -> Result<NumericalSemigroup> {
    Ok(SallyParams::two(e, m, n)?.semigroup())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Membership by exhaustive knapsack, independent of the Apery table.
    fn knapsack(gens: &[u64], bound: u64) -> Vec<bool> {
        let mut reach = vec![false; bound as usize + 1];
        reach[0] = true;
        for x in 1..=bound as usize {
            reach[x] = gens.iter().any(|&g| x as u64 >= g && reach[x - g as usize]);
        }
        reach
    }

    #[test]
    fn from_generators_examples() {
        let s = NumericalSemigroup::from_generators(&[6, 8, 9, 10, 11]).unwrap();
        assert_eq!(s.multiplicity(), 6);
        assert_eq!(s.embedding_dimension(), 5);

        let n = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(n.apery(), &[0]);
        assert_eq!(n, NumericalSemigroup::naturals());

        let r = NumericalSemigroup::from_generators(&[6, 8, 9, 10, 11, 14]).unwrap();
        assert_eq!(r.generators(), &[6, 8, 9, 10, 11]);
    }

    #[test]
    fn from_generators_errors() {
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyInput));
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6, 10]),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        assert_eq!(NumericalSemigroup::from_generators(&[0]), Err(Error::GcdNotOne { gcd: 0 }));
        // unsorted, duplicated and zero entries are normalized away
        let s = NumericalSemigroup::from_generators(&[5, 0, 3, 3, 8]).unwrap();
        assert_eq!(s.generators(), &[3, 5]);
    }

    #[test]
    fn sally_constructors() {
        assert_eq!(sally_one(6, 1).unwrap().generators(), &[6, 8, 9, 10, 11]);
        let last = sally_one(6, 5).unwrap();
        assert_eq!(last.generators(), &[6, 7, 8, 9, 10]);
        assert_eq!(last.width(), 4);
        assert_eq!(sally_one(6, 3).unwrap().generators(), &[6, 7, 8, 10, 11]);
        assert_eq!(sally_one(6, 3).unwrap().width(), 5);

        assert_eq!(sally_two(7, 2, 3).unwrap().generators(), &[7, 8, 11, 12, 13]);
        assert_eq!(sally_two(8, 2, 6).unwrap().generators(), &[8, 9, 11, 12, 13, 15]);
        assert_eq!(sally_two(6, 2, 3).unwrap().generators(), &[6, 7, 10, 11]);

        assert!(matches!(sally_one(3, 1), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(sally_one(6, 0), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(sally_one(6, 6), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(sally_two(5, 1, 2), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(sally_two(7, 3, 3), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(sally_two(7, 2, 7), Err(Error::ParamOutOfRange(_))));
    }

    #[test]
    fn membership_examples() {
        let s1 = sally_one(6, 1).unwrap();
        assert!(!s1.contains(13));
        assert!(s1.contains(0));
        assert!(!s1.contains(-1));
        // 17 = 6 + 11
        assert!(sally_one(6, 3).unwrap().contains(17));
    }

    #[test]
    fn gap_examples() {
        assert_eq!(sally_one(6, 1).unwrap().gaps(), vec![1, 2, 3, 4, 5, 7, 13]);
        assert_eq!(sally_one(6, 3).unwrap().gaps(), vec![1, 2, 3, 4, 5, 9]);
        assert!(NumericalSemigroup::naturals().gaps().is_empty());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(sally_one(6, 1).unwrap().frobenius(), Ok(13));
        assert_eq!(sally_two(7, 2, 3).unwrap().frobenius(), Ok(17));
        assert_eq!(sally_two(8, 3, 5).unwrap().frobenius(), Ok(13));
        assert_eq!(NumericalSemigroup::naturals().frobenius(), Err(Error::NoGaps));
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(sally_one(6, 3).unwrap().pseudo_frobenius(), Ok(vec![4, 5, 9]));
        assert_eq!(sally_two(10, 1, 6).unwrap().pseudo_frobenius(), Ok(vec![5, 16, 21]));
        assert_eq!(sally_two(8, 2, 6).unwrap().pseudo_frobenius(), Ok(vec![4, 7, 10, 14]));
        assert_eq!(NumericalSemigroup::naturals().pseudo_frobenius(), Err(Error::NoGaps));
    }

    #[test]
    fn type_and_symmetry_examples() {
        assert_eq!(sally_one(6, 3).unwrap().cm_type(), Ok(3));
        assert_eq!(sally_one(6, 5).unwrap().cm_type(), Ok(1));
        assert_eq!(sally_two(8, 2, 6).unwrap().cm_type(), Ok(4));

        assert_eq!(sally_one(6, 1).unwrap().is_symmetric(), Ok(true));
        assert_eq!(sally_two(7, 2, 3).unwrap().is_symmetric(), Ok(true));
        assert_eq!(sally_one(6, 3).unwrap().is_symmetric(), Ok(false));

        assert_eq!(sally_one(6, 3).unwrap().is_almost_symmetric(), Ok(true));
        assert_eq!(sally_one(6, 1).unwrap().is_almost_symmetric(), Ok(true));
        assert_eq!(sally_two(8, 3, 5).unwrap().is_almost_symmetric(), Ok(false));

        let n = NumericalSemigroup::naturals();
        assert_eq!(n.is_symmetric(), Err(Error::NoGaps));
        assert_eq!(n.is_almost_symmetric(), Err(Error::NoGaps));
        assert_eq!(n.cm_type(), Err(Error::NoGaps));
    }

    fn arbitrary_generators() -> impl Strategy<Value = Vec<u64>> {
        proptest::collection::vec(2u64..40, 1..6).prop_filter_map("gcd must be 1", |mut v| {
            v.push(41); // prime, so gcd is 1 unless every entry is a multiple of 41
            let g = v.iter().fold(0, |a, &x| gcd(a, x));
            (g == 1).then_some(v)
        })
    }

    proptest! {
        #[test]
        fn apery_membership_matches_knapsack(gens in arbitrary_generators()) {
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            let f = s.frobenius().unwrap();
            let bound = f + 2 * s.multiplicity() + 50;
            let reach = knapsack(&gens, bound);
            for x in 0..=bound {
                prop_assert_eq!(s.contains_u64(x), reach[x as usize], "x = {}", x);
            }
            let e = s.multiplicity();
            for (r, &a) in s.apery().iter().enumerate() {
                prop_assert_eq!(a % e, r as u64);
                prop_assert!(r == 0 || !s.contains_u64(a - e));
            }
            prop_assert_eq!(s.apery()[0], 0);
        }

        #[test]
        fn generators_are_minimal(gens in arbitrary_generators()) {
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            for (i, &g) in s.generators().iter().enumerate() {
                let others: Vec<u64> = s.generators().iter().enumerate()
                    .filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
                let reach = knapsack(&others, g);
                prop_assert!(!reach[g as usize], "{} is redundant", g);
            }
            // and every input generator is still in S
            for &g in &gens {
                prop_assert!(s.contains_u64(g));
            }
        }

        #[test]
        fn gap_invariants(gens in arbitrary_generators()) {
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            let gaps = s.gaps();
            prop_assert_eq!(gaps.len() as u64, s.genus());
            let f = s.frobenius().unwrap();
            prop_assert_eq!(gaps.last().copied(), Some(f));
            let pf = s.pseudo_frobenius().unwrap();
            prop_assert!(pf.contains(&f));
            // definition of PF against all nonzero elements up to F + max generator
            let bound = f + s.generators().last().unwrap();
            let elems: Vec<u64> = (1..=bound).filter(|&x| s.contains_u64(x)).collect();
            let by_definition: Vec<u64> = gaps.iter().copied()
                .filter(|&x| elems.iter().all(|&y| s.contains_u64(x + y))).collect();
            prop_assert_eq!(&pf, &by_definition);
            if s.is_symmetric().unwrap() {
                prop_assert_eq!(pf.len(), 1);
                prop_assert_eq!(2 * s.genus(), f + 1);
                prop_assert!(s.is_almost_symmetric().unwrap());
            } else {
                prop_assert!(2 * s.genus() != f + 1);
            }
        }
    }
}
