//! Monomial fibers of the toric ideal `I_S`.
//!
//! Variable `X_i` stands for the generator `s_1 + i`, so for a Sally
//! semigroup of multiplicity `e` it has degree `e + i`. A set of binomials
//! generates `I_S` exactly when every fiber up to the top degree of a minimal
//! generator is connected under the moves the binomials define.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::hochster::{default_lambda_max, first_betti_graded};
use crate::semigroup::NumericalSemigroup;
use crate::util::DisjointSets;

/// Exponent vector `[a_0, a_1, ...]` of `X_0^a_0 X_1^a_1 ...`, without
/// trailing zeros.
///
/// The derived order is lexicographic with `X_0 > X_1 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial { exponents }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, k: u32) -> Self {
        let mut exponents = vec![0; i + 1];
        exponents[i] = k;
        Monomial::new(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents.get(i).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// `sum_i a_i * (base + i)`; `base` is the multiplicity.
    pub fn weighted_degree(&self, base: u64) -> u64 {
        self.exponents.iter().enumerate().map(|(i, &a)| u64::from(a) * (base + i as u64)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exponents.len().max(other.exponents.len());
        Monomial::new((0..len).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().enumerate().all(|(i, &a)| a <= other.exponent(i))
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::new(
            other.exponents.iter().enumerate().map(|(i, &a)| a - self.exponent(i)).collect(),
        ))
    }

    pub fn shares_variable(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).any(|(&a, &b)| a > 0 && b > 0)
    }

    fn support_within(&self, allowed: &[bool]) -> bool {
        self.exponents.iter().enumerate().all(|(i, &a)| a == 0 || allowed.get(i).copied().unwrap_or(false))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, &a) in self.exponents.iter().enumerate() {
            match a {
                0 => {}
                1 => write!(f, "X_{i}")?,
                _ => write!(f, "X_{i}^{a}")?,
            }
        }
        Ok(())
    }
}

/// `lhs - rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    pub lhs: Monomial,
    pub rhs: Monomial,
}

impl Binomial {
    pub fn new(lhs: Monomial, rhs: Monomial) -> Self {
        Binomial { lhs, rhs }
    }

    pub fn is_homogeneous(&self, base: u64) -> bool {
        self.lhs.weighted_degree(base) == self.rhs.weighted_degree(base)
    }

    pub fn degree(&self, base: u64) -> u64 {
        self.lhs.weighted_degree(base)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lhs, self.rhs)
    }
}

/// Variable indices of the minimal generators.
fn variable_indices(s: &NumericalSemigroup) -> Vec<usize> {
    let base = s.multiplicity();
    s.generators().iter().map(|&g| (g - base) as usize).collect()
}

/// Monomials of degree `lambda`, in descending lexicographic order.
pub fn fiber(s: &NumericalSemigroup, lambda: u64) -> Vec<Monomial> {
    let vars = variable_indices(s);
    let gens = s.generators();
    let width = vars.last().map_or(0, |&v| v + 1);
    let mut out = Vec::new();
    let mut exps = vec![0u32; width];
    fn go(
        k: usize,
        rest: u64,
        vars: &[usize],
        gens: &[u64],
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if k == vars.len() {
            if rest == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let g = gens[k];
        for a in (0..=rest / g).rev() {
            exps[vars[k]] = a as u32;
            go(k + 1, rest - a * g, vars, gens, exps, out);
        }
        exps[vars[k]] = 0;
    }
    go(0, lambda, &vars, gens, &mut exps, &mut out);
    out
}

/// Minimal binomial generators in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeGenerators {
    pub degree: u64,
    pub binomials: Vec<Binomial>,
}

/// Outcome of a generation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generation {
    Generates,
    /// The first degree whose fiber splits, with one monomial from each side.
    Disconnected { degree: u64, pair: (Monomial, Monomial) },
}

impl Generation {
    pub fn generates(&self) -> bool {
        matches!(self, Generation::Generates)
    }
}

/// Claimed versus actual number of minimal generators in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeCount {
    pub degree: u64,
    pub claimed: u64,
    pub betti: u64,
}

/// Fiber computations for one semigroup, with the graded first Betti
/// numbers computed once up front.
#[derive(Debug, Clone)]
pub struct FiberChecker<'a> {
    s: &'a NumericalSemigroup,
    /// Nonzero `beta_{1,lambda}`, keyed by degree.
    first_betti: BTreeMap<u64, u64>,
}

impl<'a> FiberChecker<'a> {
    pub fn new(s: &'a NumericalSemigroup) -> Self {
        let first_betti = (0..=default_lambda_max(s))
            .filter(|&l| s.contains_u64(l))
            .map(|l| (l, first_betti_graded(s, l)))
            .filter(|&(_, b)| b > 0)
            .collect();
        FiberChecker { s, first_betti }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        self.s
    }

    /// Nonzero graded first Betti numbers.
    pub fn first_betti(&self) -> &BTreeMap<u64, u64> {
        &self.first_betti
    }

    /// Top degree of a minimal generator of `I_S`, or 0 when `I_S = 0`.
    pub fn generator_degree_bound(&self) -> u64 {
        self.first_betti.keys().next_back().copied().unwrap_or(0)
    }

    /// Components of the graph on the fiber joining monomials with a common
    /// variable, each listed in fiber order; components are ordered by
    /// their first member.
    pub fn gcd_components(&self, lambda: u64) -> Vec<Vec<Monomial>> {
        let f = fiber(self.s, lambda);
        let mut sets = DisjointSets::new(f.len());
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                if f[i].shares_variable(&f[j]) {
                    sets.union(i, j);
                }
            }
        }
        let mut slot: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comps: Vec<Vec<Monomial>> = Vec::new();
        for (i, m) in f.into_iter().enumerate() {
            let root = sets.find(i);
            let k = *slot.entry(root).or_insert_with(|| {
                comps.push(Vec::new());
                comps.len() - 1
            });
            comps[k].push(m);
        }
        comps
    }

    /// One binomial per extra component in each degree carrying minimal
    /// generators: the leading monomial of the first component minus the
    /// leading monomial of each later one.
    pub fn minimal_generators(&self) -> Vec<DegreeGenerators> {
        let mut out = Vec::new();
        for lambda in 0..=self.generator_degree_bound() {
            if !self.s.contains_u64(lambda) {
                continue;
            }
            let comps = self.gcd_components(lambda);
            if comps.len() < 2 {
                continue;
            }
            let lead = &comps[0][0];
            let binomials = comps[1..].iter().map(|c| Binomial::new(lead.clone(), c[0].clone())).collect();
            out.push(DegreeGenerators { degree: lambda, binomials });
        }
        out
    }

    fn check_homogeneous(&self, b: &[Binomial]) -> Result<()> {
        let base = self.s.multiplicity();
        let mut allowed = vec![false; self.s.width() as usize + 1];
        for v in variable_indices(self.s) {
            allowed[v] = true;
        }
        for (index, x) in b.iter().enumerate() {
            let ok = x.is_homogeneous(base) && x.lhs.support_within(&allowed) && x.rhs.support_within(&allowed);
            if !ok {
                return Err(Error::InhomogeneousBinomial { index });
            }
        }
        Ok(())
    }

    /// The fiber of `lambda` with its components under the moves of `b`.
    fn move_components(&self, lambda: u64, b: &[Binomial]) -> (Vec<Monomial>, DisjointSets) {
        let f = fiber(self.s, lambda);
        let mut sets = DisjointSets::new(f.len());
        for (i, mono) in f.iter().enumerate() {
            for x in b {
                for (from, to) in [(&x.lhs, &x.rhs), (&x.rhs, &x.lhs)] {
                    if let Some(w) = from.quotient_of(mono) {
                        let target = to.mul(&w);
                        // fibers are sorted descending
                        let j = f.binary_search_by(|probe| target.cmp(probe)).expect("moves stay inside the fiber");
                        sets.union(i, j);
                    }
                }
            }
        }
        (f, sets)
    }

    /// Checks that every fiber up to [`Self::generator_degree_bound`] is
    /// connected under the moves `u*w <-> v*w` for `u - v` in `b`.
    pub fn verify_generating_set(&self, b: &[Binomial]) -> Result<Generation> {
        self.check_homogeneous(b)?;
        for lambda in 0..=self.generator_degree_bound() {
            if !self.s.contains_u64(lambda) {
                continue;
            }
            let (f, mut sets) = self.move_components(lambda, b);
            if sets.components() > 1 {
                let root = sets.find(0);
                let other = (1..f.len()).find(|&j| sets.find(j) != root).expect("more than one component");
                return Ok(Generation::Disconnected { degree: lambda, pair: (f[0].clone(), f[other].clone()) });
            }
        }
        Ok(Generation::Generates)
    }

    /// Whether the homogeneous binomial `target` lies in the ideal generated
    /// by `b`, decided by connectivity of its own fiber.
    pub fn in_ideal(&self, b: &[Binomial], target: &Binomial) -> Result<bool> {
        self.check_homogeneous(b)?;
        self.check_homogeneous(core::slice::from_ref(target)).map_err(|_| Error::InhomogeneousBinomial { index: b.len() })?;
        let (f, mut sets) = self.move_components(target.degree(self.s.multiplicity()), b);
        let find = |m: &Monomial| f.binary_search_by(|probe| m.cmp(probe)).expect("monomial lies in its fiber");
        let (i, j) = (find(&target.lhs), find(&target.rhs));
        Ok(sets.find(i) == sets.find(j))
    }

    /// Per-degree counts of `b` against `beta_{1,lambda}`, over every degree
    /// where either is nonzero.
    pub fn degree_comparison(&self, b: &[Binomial]) -> Vec<DegreeCount> {
        let base = self.s.multiplicity();
        let mut claimed: BTreeMap<u64, u64> = BTreeMap::new();
        for x in b {
            *claimed.entry(x.degree(base)).or_insert(0) += 1;
        }
        let mut degrees: Vec<u64> = claimed.keys().chain(self.first_betti.keys()).copied().collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .map(|degree| DegreeCount {
                degree,
                claimed: claimed.get(&degree).copied().unwrap_or(0),
                betti: self.first_betti.get(&degree).copied().unwrap_or(0),
            })
            .collect()
    }

    /// True when `b` generates and has exactly `beta_{1,lambda}` members in
    /// every degree.
    pub fn verify_minimality(&self, b: &[Binomial]) -> Result<bool> {
        if let Generation::Disconnected { degree, .. } = self.verify_generating_set(b)? {
            return Err(Error::NotGenerating { degree });
        }
        Ok(self.degree_comparison(b).iter().all(|c| c.claimed == c.betti))
    }
}

pub fn minimal_generators(s: &NumericalSemigroup) -> Vec<DegreeGenerators> {
    FiberChecker::new(s).minimal_generators()
}

pub fn verify_generating_set(s: &NumericalSemigroup, b: &[Binomial]) -> Result<Generation> {
    FiberChecker::new(s).verify_generating_set(b)
}

pub fn verify_minimality(s: &NumericalSemigroup, b: &[Binomial]) -> Result<bool> {
    FiberChecker::new(s).verify_minimality(b)
}
