//! Truncated matrix model of the Weyl algebra.
//!
//! Each mode acts on polynomials of degree `< N` in the monomial basis
//! `e_0..e_{N−1}`: `b e_n = e_{n+1}` (with `e_{N−1} ↦ 0`) and
//! `a e_n = n e_{n−1}`. Entries stay in ℚ(i); the price is that matrix
//! transposes do not represent operator adjoints. Truncation breaks
//! `[a, b] = I` only on the top level, so products of bounded raising degree
//! are exact on low enough basis vectors.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::weyl::{Monomial, Realization, WeylElement};

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairSpec {
    Bosonic,
    /// `(a, b) ↦ (a + αI, b + βI)`.
    Shifted {
        alpha: Scalar,
        beta: Scalar,
    },
}

#[derive(Debug, Clone)]
pub struct FockRep {
    modes: usize,
    levels: usize,
    specs: Vec<PairSpec>,
    warnings: Vec<String>,
}

/// Column-sparse square operator.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SparseOp {
    dim: usize,
    cols: Vec<BTreeMap<usize, Scalar>>,
}

impl SparseOp {
    fn zero(dim: usize) -> Self {
        SparseOp {
            dim,
            cols: vec![BTreeMap::new(); dim],
        }
    }

    fn identity(dim: usize) -> Self {
        let mut op = SparseOp::zero(dim);
        for (c, col) in op.cols.iter_mut().enumerate() {
            col.insert(c, Scalar::one());
        }
        op
    }

    fn add_entry(col: &mut BTreeMap<usize, Scalar>, r: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let e = col.entry(r).or_default();
        *e += v;
        if e.is_zero() {
            col.remove(&r);
        }
    }

    fn apply(&self, v: &BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
        let mut out = BTreeMap::new();
        for (c, x) in v {
            for (r, m) in &self.cols[*c] {
                SparseOp::add_entry(&mut out, *r, &(m * x));
            }
        }
        out
    }

    fn compose(&self, right: &SparseOp) -> SparseOp {
        SparseOp {
            dim: self.dim,
            cols: right.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    fn add_scaled(&mut self, other: &SparseOp, s: &Scalar) {
        for (mine, theirs) in self.cols.iter_mut().zip(&other.cols) {
            for (r, v) in theirs {
                SparseOp::add_entry(mine, *r, &(v * s));
            }
        }
    }

    /// `self ⊗ other`, with `self` on the more significant index.
    fn kron(&self, other: &SparseOp) -> SparseOp {
        let d = other.dim;
        let mut out = SparseOp::zero(self.dim * d);
        for (c1, col1) in self.cols.iter().enumerate() {
            for (c2, col2) in other.cols.iter().enumerate() {
                let col = &mut out.cols[c1 * d + c2];
                for (r1, v1) in col1 {
                    for (r2, v2) in col2 {
                        col.insert(r1 * d + r2, v1 * v2);
                    }
                }
            }
        }
        out
    }

    fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m[(*r, c)] = v.clone();
            }
        }
        m
    }
}

impl FockRep {
    pub fn new(modes: usize, levels: usize, specs: Vec<PairSpec>) -> Result<Self> {
        if levels < 2 {
            return Err(Error::Domain(format!(
                "need at least 2 levels, got {levels}"
            )));
        }
        if specs.len() != modes {
            return Err(Error::DimensionMismatch {
                expected: modes,
                found: specs.len(),
            });
        }
        let warnings = specs
            .iter()
            .enumerate()
            .filter_map(|(j, s)| match s {
                PairSpec::Shifted { alpha, beta } if *alpha == beta.conj() => {
                    Some(format!("mode {}: alpha = conj(beta) = {alpha}", j + 1))
                }
                _ => None,
            })
            .collect();
        Ok(FockRep {
            modes,
            levels,
            specs,
            warnings,
        })
    }

    pub fn bosonic(modes: usize, levels: usize) -> Result<Self> {
        FockRep::new(modes, levels, vec![PairSpec::Bosonic; modes])
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Side length `N^m` of the matrices.
    pub fn size(&self) -> usize {
        self.levels.pow(self.modes as u32)
    }

    fn raw_lower(&self) -> SparseOp {
        let mut op = SparseOp::zero(self.levels);
        for n in 1..self.levels {
            op.cols[n].insert(n - 1, Scalar::from_int(n as i64));
        }
        op
    }

    fn raw_raise(&self) -> SparseOp {
        let mut op = SparseOp::zero(self.levels);
        for n in 0..self.levels - 1 {
            op.cols[n].insert(n + 1, Scalar::one());
        }
        op
    }

    /// Single-mode `(a, b)` after the pair's shift.
    fn mode_pair(&self, j: usize) -> (SparseOp, SparseOp) {
        let (mut a, mut b) = (self.raw_lower(), self.raw_raise());
        if let PairSpec::Shifted { alpha, beta } = &self.specs[j] {
            let id = SparseOp::identity(self.levels);
            a.add_scaled(&id, alpha);
            b.add_scaled(&id, beta);
        }
        (a, b)
    }

    fn monomial_op(&self, m: &Monomial, pairs: &[(SparseOp, SparseOp)]) -> SparseOp {
        let mut out = SparseOp::identity(1);
        for (j, (a, b)) in pairs.iter().enumerate() {
            let mut factor = SparseOp::identity(self.levels);
            for _ in 0..m.b[j] {
                factor = factor.compose(b);
            }
            for _ in 0..m.a[j] {
                factor = factor.compose(a);
            }
            out = out.kron(&factor);
        }
        out
    }

    fn sparse(&self, x: &WeylElement) -> Result<SparseOp> {
        if x.modes() != self.modes {
            return Err(Error::ModeMismatch(self.modes, x.modes()));
        }
        let pairs: Vec<(SparseOp, SparseOp)> = (0..self.modes).map(|j| self.mode_pair(j)).collect();
        let mut out = SparseOp::zero(self.size());
        for (m, c) in x.terms() {
            out.add_scaled(&self.monomial_op(m, &pairs), c);
        }
        Ok(out)
    }

    /// Matrix of `a_j` (1-based mode) on the full tensor space.
    pub fn lower_matrix(&self, j: usize) -> Result<Matrix> {
        self.to_matrix(&WeylElement::lower(self.modes, j))
    }

    pub fn raise_matrix(&self, j: usize) -> Result<Matrix> {
        self.to_matrix(&WeylElement::raise(self.modes, j))
    }

    pub fn to_matrix(&self, x: &WeylElement) -> Result<Matrix> {
        Ok(self.sparse(x)?.to_dense())
    }

    /// Basis index of the tuple `(n_1, …, n_m)`; mode 1 is most significant.
    pub fn index_of(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &n| acc * self.levels + n)
    }

    pub fn tuple_of(&self, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; self.modes];
        for slot in t.iter_mut().rev() {
            *slot = index % self.levels;
            index /= self.levels;
        }
        t
    }

    /// Compares `[X, Y]` with the matrix of `expected` on the columns whose
    /// every level is at most `N − 1 − D`, `D = deg x + deg y`.
    pub fn safe_commutator_check(
        &self,
        x: &WeylElement,
        y: &WeylElement,
        expected: &WeylElement,
    ) -> Result<SafeCheck> {
        let budget = (x.degree().unwrap_or(0) + y.degree().unwrap_or(0)) as usize;
        if budget >= self.levels {
            return Err(Error::Domain(format!(
                "no safe columns: degree budget {budget} needs more than {} levels",
                self.levels
            )));
        }
        let top = self.levels - 1 - budget;
        let (xs, ys, es) = (self.sparse(x)?, self.sparse(y)?, self.sparse(expected)?);
        let mut safe_columns = 0;
        let mut mismatched = Vec::new();
        for c in 0..self.size() {
            let tuple = self.tuple_of(c);
            if tuple.iter().any(|&n| n > top) {
                continue;
            }
            safe_columns += 1;
            let mut e = BTreeMap::new();
            e.insert(c, Scalar::one());
            let mut comm = xs.apply(&ys.apply(&e));
            for (r, v) in ys.apply(&xs.apply(&e)) {
                SparseOp::add_entry(&mut comm, r, &-&v);
            }
            if comm != es.apply(&e) {
                mismatched.push(tuple);
            }
        }
        Ok(SafeCheck {
            budget,
            safe_columns,
            mismatched_columns: mismatched,
        })
    }

    /// Runs [`FockRep::safe_commutator_check`] on every generator pair of a
    /// realization, against both the symbolic commutator and the image of
    /// the structure constants.
    pub fn check_realization(&self, r: &Realization) -> Result<Vec<PairCheck>> {
        let v = &r.assignment;
        let mut out = Vec::new();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let symbolic = v[i].commutator(&v[j])?;
                let mut image = WeylElement::zero(r.modes);
                for (k, c) in r.algebra.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        image = &image + &v[k].scale(c);
                    }
                }
                out.push(PairCheck {
                    i: i + 1,
                    j: j + 1,
                    against_symbolic: self.safe_commutator_check(&v[i], &v[j], &symbolic)?,
                    against_structure: self.safe_commutator_check(&v[i], &v[j], &image)?,
                });
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SafeCheck {
    /// `D = deg x + deg y`.
    pub budget: usize,
    pub safe_columns: usize,
    /// Level tuples of safe columns where the two sides differ.
    pub mismatched_columns: Vec<Vec<usize>>,
}

impl SafeCheck {
    pub fn agrees(&self) -> bool {
        self.safe_columns > 0 && self.mismatched_columns.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub against_symbolic: SafeCheck,
    pub against_structure: SafeCheck,
}

impl PairCheck {
    pub fn agrees(&self) -> bool {
        self.against_symbolic.agrees() && self.against_structure.agrees()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn single_mode_matrices() {
        let rep = FockRep::bosonic(1, 3).unwrap();
        assert_eq!(
            rep.lower_matrix(1).unwrap(),
            Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 2], &[0, 0, 0]])
        );
        assert_eq!(
            rep.raise_matrix(1).unwrap(),
            Matrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])
        );
        assert!(FockRep::bosonic(1, 1).is_err());
    }

    #[test]
    fn truncated_canonical_commutator() {
        for n in [2, 3, 6] {
            let rep = FockRep::bosonic(1, n).unwrap();
            let a = rep.lower_matrix(1).unwrap();
            let b = rep.raise_matrix(1).unwrap();
            let comm = a.mul(&b).unwrap().sub(&b.mul(&a).unwrap()).unwrap();
            let mut expected = Matrix::identity(n);
            expected[(n - 1, n - 1)] = s(-(n as i64 - 1));
            assert_eq!(comm, expected);
            assert_eq!(comm.mul_vec(&unit(n, 0)).unwrap(), unit(n, 0));
        }
    }

    #[test]
    fn half_b_squared_band() {
        let rep = FockRep::bosonic(1, 4).unwrap();
        let x = WeylElement::raise(1, 1).pow(2).scale(&Scalar::ratio(1, 2));
        let m = rep.to_matrix(&x).unwrap();
        let mut expected = Matrix::zeros(4, 4);
        expected[(2, 0)] = Scalar::ratio(1, 2);
        expected[(3, 1)] = Scalar::ratio(1, 2);
        assert_eq!(m, expected);
        assert_eq!(
            rep.to_matrix(&WeylElement::identity(1)).unwrap(),
            Matrix::identity(4)
        );
    }

    #[test]
    fn two_modes_factor_as_kronecker() {
        let n = 3;
        let one = FockRep::bosonic(1, n).unwrap();
        let a = one.lower_matrix(1).unwrap();
        let b = one.raise_matrix(1).unwrap();
        let two = FockRep::bosonic(2, n).unwrap();
        let x = &WeylElement::lower(2, 1) * &WeylElement::raise(2, 2);
        let m = two.to_matrix(&x).unwrap();
        for r in 0..n * n {
            for c in 0..n * n {
                let k = &a[(r / n, c / n)] * &b[(r % n, c % n)];
                assert_eq!(m[(r, c)], k);
            }
        }
    }

    #[test]
    fn safe_columns_for_a_and_half_b_squared() {
        let rep = FockRep::bosonic(1, 6).unwrap();
        let a = WeylElement::lower(1, 1);
        let b = WeylElement::raise(1, 1);
        let half_b2 = b.pow(2).scale(&Scalar::ratio(1, 2));
        let check = rep.safe_commutator_check(&a, &half_b2, &b).unwrap();
        assert_eq!((check.budget, check.safe_columns), (3, 3));
        assert!(check.agrees());

        let check = rep
            .safe_commutator_check(&a, &a, &WeylElement::zero(1))
            .unwrap();
        assert!(check.agrees());

        let tiny = FockRep::bosonic(1, 3).unwrap();
        assert!(tiny.safe_commutator_check(&a, &half_b2, &b).is_err());
    }

    #[test]
    fn mode_mismatch_is_an_error() {
        let rep = FockRep::bosonic(2, 4).unwrap();
        assert_eq!(
            rep.to_matrix(&WeylElement::identity(1)),
            Err(Error::ModeMismatch(2, 1))
        );
    }

    #[test]
    fn shifted_pairs_warn() {
        let rep = FockRep::new(
            1,
            4,
            vec![PairSpec::Shifted {
                alpha: Scalar::gaussian(0, 1),
                beta: Scalar::gaussian(0, -1),
            }],
        )
        .unwrap();
        assert_eq!(rep.warnings().len(), 1);
    }
}
