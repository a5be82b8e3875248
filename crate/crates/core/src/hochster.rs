//! Graded Betti numbers of `k[S]` through Hochster's formula
//! `beta_{i,lambda} = dim H~_{i-1}(Delta_lambda; Q)`, where `Delta_lambda` is
//! the squarefree divisor complex of `lambda`.
//!
//! Homology is computed on the chain complex that includes the empty face as
//! a cell of dimension -1. Before any rank is taken the complex is shrunk by
//! coreductions (a cell with exactly one remaining face) and collapses (a cell
//! with exactly one remaining coface). Both moves pair cells with a unit
//! incidence and leave the homology unchanged, and the boundary of what is left
//! is the restriction of the original one. Divisor complexes of Sally
//! semigroups are mostly cones, so the residue is usually empty.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{out_of_range, Error, Result};
use crate::linalg::ExactMatrix;
use crate::semigroup::NumericalSemigroup;

/// A simplicial complex on labelled vertices, faces stored as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeComplex {
    labels: Vec<u64>,
    /// Sorted by cardinality, then by mask.
    faces: Vec<u64>,
}

fn face_key(mask: u64) -> (u32, u64) {
    (mask.count_ones(), mask)
}

impl SquarefreeComplex {
    /// Builds a complex from an explicit face list. Fails unless every face
    /// uses existing vertices and the list is closed under taking subsets.
    pub fn from_faces(labels: Vec<u64>, faces: &[u64]) -> Result<Self> {
        if labels.len() > 63 {
            return Err(out_of_range("at most 63 vertices are supported"));
        }
        let all = (1u64 << labels.len()) - 1;
        let mut faces: Vec<u64> = faces.to_vec();
        faces.sort_by_key(|&f| face_key(f));
        faces.dedup();
        let c = SquarefreeComplex { labels, faces };
        for &f in &c.faces {
            if f & !all != 0 {
                return Err(out_of_range("face uses a vertex outside the label list"));
            }
            let mut bits = f;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                if !c.contains_face(f & !low) {
                    return Err(out_of_range("face set is not closed under subsets"));
                }
                bits &= bits - 1;
            }
        }
        Ok(c)
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    /// True when the complex has no faces at all, not even the empty one.
    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains_face(&self, mask: u64) -> bool {
        self.index_of(mask).is_some()
    }

    fn index_of(&self, mask: u64) -> Option<usize> {
        self.faces.binary_search_by_key(&face_key(mask), |&f| face_key(f)).ok()
    }

    /// Faces as sorted lists of vertex labels.
    pub fn labelled_faces(&self) -> Vec<Vec<u64>> {
        self.faces
            .iter()
            .map(|&f| (0..self.labels.len()).filter(|&v| f >> v & 1 == 1).map(|v| self.labels[v]).collect())
            .collect()
    }

    fn full_simplex(&self) -> bool {
        let all = if self.labels.is_empty() { 0 } else { (1u64 << self.labels.len()) - 1 };
        !self.labels.is_empty() && self.faces.last() == Some(&all)
    }
}

/// `Delta_lambda = { F subset of generators : lambda - sum F in S }`.
pub fn divisor_complex(s: &NumericalSemigroup, lambda: u64) -> SquarefreeComplex {
    let labels = s.generators().to_vec();
    let mut faces = Vec::new();
    if s.contains_u64(lambda) {
        // every face is reached by adding vertices in increasing order
        let mut stack = vec![(0u64, lambda, 0usize)];
        while let Some((mask, rest, next)) = stack.pop() {
            faces.push(mask);
            for (v, &g) in labels.iter().enumerate().skip(next) {
                if g <= rest && s.contains_u64(rest - g) {
                    stack.push((mask | 1 << v, rest - g, v + 1));
                }
            }
        }
    }
    faces.sort_by_key(|&f| face_key(f));
    SquarefreeComplex { labels, faces }
}

/// Coefficient of `face` in the boundary of `face | 1 << v`.
fn incidence_sign(face: u64, v: usize) -> i64 {
    if (face & ((1u64 << v) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn boundary_matrix(c: &SquarefreeComplex, rows: &[usize], cols: &[usize]) -> ExactMatrix {
    let mut entries = vec![0i64; rows.len() * cols.len()];
    let row_pos: BTreeMap<u64, usize> = rows.iter().enumerate().map(|(i, &r)| (c.faces[r], i)).collect();
    for (j, &col) in cols.iter().enumerate() {
        let f = c.faces[col];
        for v in 0..c.labels.len() {
            if f >> v & 1 == 1 {
                let g = f & !(1 << v);
                if let Some(&i) = row_pos.get(&g) {
                    entries[i * cols.len() + j] = incidence_sign(g, v);
                }
            }
        }
    }
    ExactMatrix::from_integers(rows.len(), cols.len(), &entries)
}

/// Reduced Betti numbers from the cells in `cells`, which must be a subset
/// on which the restricted boundary squares to zero.
fn homology_of(c: &SquarefreeComplex, cells: &[usize]) -> Vec<u64> {
    let n = c.labels.len();
    // level k holds cells of dimension k - 1
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &i in cells {
        levels[c.faces[i].count_ones() as usize].push(i);
    }
    // ranks[k] = rank of the boundary from level k to level k - 1
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        if !levels[k].is_empty() && !levels[k - 1].is_empty() {
            ranks[k] = boundary_matrix(c, &levels[k - 1], &levels[k]).rank();
        }
    }
    (0..=n).map(|k| (levels[k].len() - ranks[k] - ranks[k + 1]) as u64).collect()
}

/// `[dim H~_{-1}, dim H~_0, ..., dim H~_{n-1}]` over Q for a complex on `n`
/// vertices.
pub fn reduced_betti(c: &SquarefreeComplex) -> Result<Vec<u64>> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = c.labels.len();
    if c.full_simplex() {
        return Ok(vec![0; n + 1]);
    }
    let total = c.faces.len();
    let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut cofaces_of: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (i, &f) in c.faces.iter().enumerate() {
        let mut bits = f;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            let j = c.index_of(f & !low).expect("complex is closed under subsets");
            faces_of[i].push(j);
            cofaces_of[j].push(i);
            bits &= bits - 1;
        }
    }
    let mut alive = vec![true; total];
    let mut face_count: Vec<usize> = faces_of.iter().map(Vec::len).collect();
    let mut coface_count: Vec<usize> = cofaces_of.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..total).collect();
    while let Some(cell) = queue.pop_front() {
        if !alive[cell] {
            continue;
        }
        let partner = if face_count[cell] == 1 {
            faces_of[cell].iter().copied().find(|&j| alive[j])
        } else if coface_count[cell] == 1 {
            cofaces_of[cell].iter().copied().find(|&j| alive[j])
        } else {
            None
        };
        let Some(partner) = partner else {
            continue;
        };
        alive[cell] = false;
        alive[partner] = false;
        for x in [cell, partner] {
            for &f in &faces_of[x] {
                coface_count[f] -= 1;
                if alive[f] {
                    queue.push_back(f);
                }
            }
            for &g in &cofaces_of[x] {
                face_count[g] -= 1;
                if alive[g] {
                    queue.push_back(g);
                }
            }
        }
    }
    let critical: Vec<usize> = (0..total).filter(|&i| alive[i]).collect();
    Ok(homology_of(c, &critical))
}

/// Same as [`reduced_betti`] but takes ranks of the full boundary matrices.
pub fn reduced_betti_direct(c: &SquarefreeComplex) -> Result<Vec<u64>> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let cells: Vec<usize> = (0..c.faces.len()).collect();
    Ok(homology_of(c, &cells))
}

/// `[beta_{0,lambda}, ..., beta_{g-1,lambda}]`, all zero when `lambda` is not
/// in `S`.
pub fn graded_betti(s: &NumericalSemigroup, lambda: u64) -> Vec<u64> {
    let g = s.embedding_dimension();
    let c = divisor_complex(s, lambda);
    match reduced_betti(&c) {
        Ok(mut h) => {
            h.truncate(g);
            h
        }
        Err(_) => vec![0; g],
    }
}

/// `beta_{1,lambda}` as (number of vertices) - rank(delta_1) - 1, the
/// vertex/edge boundary rank taken over Q.
pub fn first_betti_graded(s: &NumericalSemigroup, lambda: u64) -> u64 {
    let c = divisor_complex(s, lambda);
    let vertices: Vec<usize> = (0..c.faces.len()).filter(|&i| c.faces[i].count_ones() == 1).collect();
    if vertices.is_empty() {
        return 0;
    }
    let edges: Vec<usize> = (0..c.faces.len()).filter(|&i| c.faces[i].count_ones() == 2).collect();
    let rank = if edges.is_empty() { 0 } else { boundary_matrix(&c, &vertices, &edges).rank() };
    (vertices.len() - rank - 1) as u64
}

/// `F(S) + sum of generators`, or `sum of generators - 1` for `S = N`.
pub fn default_lambda_max(s: &NumericalSemigroup) -> u64 {
    let sum: u64 = s.generators().iter().sum();
    match s.frobenius() {
        Ok(f) => f + sum,
        Err(_) => sum - 1,
    }
}

/// Graded Betti numbers of `k[S]` up to a degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// Nonzero entries keyed by `(i, lambda)`.
    graded: BTreeMap<(usize, u64), u64>,
    totals: Vec<u64>,
    lambda_max: u64,
}

impl BettiTable {
    /// Assembles a table from per-degree columns `(lambda, [beta_{0,lambda}, ..])`.
    /// Columns may arrive in any order; each must have `width` entries.
    pub fn from_columns<I>(width: usize, lambda_max: u64, columns: I) -> Self
    where
        I: IntoIterator<Item = (u64, Vec<u64>)>,
    {
        let mut graded = BTreeMap::new();
        let mut totals = vec![0; width];
        for (lambda, column) in columns {
            assert_eq!(column.len(), width, "column width mismatch at degree {lambda}");
            for (i, &b) in column.iter().enumerate() {
                if b != 0 {
                    *graded.entry((i, lambda)).or_insert(0) += b;
                    totals[i] += b;
                }
            }
        }
        BettiTable { graded, totals, lambda_max }
    }

    pub fn get(&self, i: usize, lambda: u64) -> u64 {
        self.graded.get(&(i, lambda)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, lambda), beta)`, ordered by `i` then `lambda`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u64), u64)> + '_ {
        self.graded.iter().map(|(&k, &v)| (k, v))
    }

    /// Degrees carrying a nonzero entry, ascending.
    pub fn degrees(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.graded.keys().map(|&(_, l)| l).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn totals(&self) -> &[u64] {
        &self.totals
    }

    pub fn lambda_max(&self) -> u64 {
        self.lambda_max
    }

    pub fn is_palindromic(&self) -> bool {
        self.totals.iter().eq(self.totals.iter().rev())
    }

    /// Largest degree with a nonzero `beta_1`, if any.
    pub fn max_first_syzygy_degree(&self) -> Option<u64> {
        self.graded.range((1, 0)..(2, 0)).map(|(&(_, l), _)| l).next_back()
    }

    /// Checks `sum_i (-1)^i beta_{i,d} = [t^d] prod_j (1 - t^{s_j}) * sum_{x in S} t^x`
    /// for every `d <= lambda_max`; returns the first degree that disagrees.
    pub fn k_polynomial_mismatch(&self, s: &NumericalSemigroup) -> Option<u64> {
        let top = self.lambda_max as usize;
        let mut poly = vec![0i128; top + 1];
        poly[0] = 1;
        for &g in s.generators() {
            let g = g as usize;
            for d in (g..=top).rev() {
                poly[d] -= poly[d - g];
            }
        }
        let mut lhs = vec![0i128; top + 1];
        for (&(i, l), &b) in &self.graded {
            if l as usize <= top {
                let b = b as i128;
                lhs[l as usize] += if i % 2 == 0 { b } else { -b };
            }
        }
        (0..=top).find(|&d| {
            let rhs: i128 = (0..=d).filter(|&x| s.contains_u64(x as u64)).map(|x| poly[d - x]).sum();
            rhs != lhs[d]
        }).map(|d| d as u64)
    }
}

/// Full table over `S` intersected with `[0, lambda_max]`; the default bound
/// is [`default_lambda_max`].
pub fn betti_table(s: &NumericalSemigroup, lambda_max: Option<u64>) -> BettiTable {
    let lambda_max = lambda_max.unwrap_or_else(|| default_lambda_max(s));
    let columns = (0..=lambda_max).filter(|&l| s.contains_u64(l)).map(|l| (l, graded_betti(s, l)));
    BettiTable::from_columns(s.embedding_dimension(), lambda_max, columns)
}

/// First degree in `(lambda_max, lambda_max + 2 * multiplicity]` carrying a
/// nonzero Betti number.
pub fn tail_violation(s: &NumericalSemigroup, lambda_max: u64) -> Option<(u64, Vec<u64>)> {
    let end = lambda_max + 2 * s.multiplicity();
    (lambda_max + 1..=end).map(|l| (l, graded_betti(s, l))).find(|(_, col)| col.iter().any(|&b| b != 0))
}

/// Formats a face list like `{∅,{6},{7},{6,7}}`.
pub fn describe_faces(c: &SquarefreeComplex) -> String {
    use core::fmt::Write;
    let mut out = String::from("{");
    for (k, face) in c.labelled_faces().iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        if face.is_empty() {
            out.push('∅');
            continue;
        }
        out.push('{');
        for (j, v) in face.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "{v}");
        }
        out.push('}');
    }
    out.push('}');
    out
}
