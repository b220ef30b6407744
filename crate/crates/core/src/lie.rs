//! Finite-dimensional Lie algebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, kernel_basis, span, unit, Matrix, Subspace};
use crate::scalar::Scalar;

/// A Lie algebra on the basis `e_1..e_n` with `[e_i, e_j] = Σ_k c_ij^k e_k`.
///
/// The full antisymmetric tensor is stored; every constructor checks the
/// Jacobi identity on all basis triples. Equality compares structure
/// constants only, not labels.
#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    // consts[(i * dim + j) * dim + k] = c_ij^k
    consts: Vec<Scalar>,
    label: Option<String>,
}

/// One bracket relation `[e_i, e_j] = Σ coef·e_k`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(Scalar, usize)>,
}

impl Relation {
    pub fn new(i: usize, j: usize, terms: Vec<(Scalar, usize)>) -> Self {
        Relation { i, j, terms }
    }

    /// `[e_i, e_j] = e_k` with unit coefficient.
    pub fn unit(i: usize, j: usize, k: usize) -> Self {
        Relation::new(i, j, vec![(Scalar::one(), k)])
    }
}

/// Result of [`LieAlgebra::is_semidirect`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SemidirectReport {
    pub is_ideal_a: bool,
    pub spans: bool,
    pub trivial_intersection: bool,
    pub is_central_a: bool,
}

impl SemidirectReport {
    pub fn is_semidirect(&self) -> bool {
        self.is_ideal_a && self.spans && self.trivial_intersection
    }
}

impl LieAlgebra {
    /// Builds an algebra from bracket relations with `1 ≤ i < j ≤ n`.
    /// Unlisted brackets are zero.
    pub fn from_brackets(n: usize, relations: &[Relation]) -> Result<Self> {
        let mut consts = vec![Scalar::zero(); n * n * n];
        let mut seen = vec![false; n * n];
        for rel in relations {
            for idx in [rel.i, rel.j] {
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            if rel.i >= rel.j {
                return Err(Error::BadBracketOrder { i: rel.i, j: rel.j });
            }
            let (i, j) = (rel.i - 1, rel.j - 1);
            if std::mem::replace(&mut seen[i * n + j], true) {
                return Err(Error::DuplicateBracket { i: rel.i, j: rel.j });
            }
            for (coef, k) in &rel.terms {
                if *k == 0 || *k > n {
                    return Err(Error::IndexOutOfRange { index: *k, dim: n });
                }
                let k = k - 1;
                consts[(i * n + j) * n + k] += coef;
                consts[(j * n + i) * n + k] -= coef;
            }
        }
        LieAlgebra::from_consts(n, consts)
    }

    /// Builds from a function giving `[e_i, e_j]` for `i < j` (0-based).
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Result<Self> {
        let mut consts = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: v.len(),
                    });
                }
                for (k, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        consts[(j * n + i) * n + k] = -&c;
                        consts[(i * n + j) * n + k] = c;
                    }
                }
            }
        }
        LieAlgebra::from_consts(n, consts)
    }

    fn from_consts(dim: usize, consts: Vec<Scalar>) -> Result<Self> {
        let l = LieAlgebra {
            dim,
            consts,
            label: None,
        };
        l.check_jacobi()?;
        Ok(l)
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            dim: n,
            consts: vec![Scalar::zero(); n * n * n],
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_ij^k`, 0-based.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.consts[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` as a coordinate slice, 0-based.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim;
        &self.consts[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`, 1-based.
    pub fn relations(&self) -> Vec<Relation> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(Scalar, usize)> = self
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (c.clone(), k + 1))
                    .collect();
                if !terms.is_empty() {
                    out.push(Relation::new(i + 1, j + 1, terms));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(Scalar::is_zero)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() || a == b {
                    continue;
                }
                let w = xa * yb;
                for (acc, c) in out.iter_mut().zip(self.basis_bracket(a, b)) {
                    if !c.is_zero() {
                        *acc += &(&w * c);
                    }
                }
            }
        }
        out
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`, 0-based.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let e = |t| unit(self.dim, t);
        let mut r = self.bracket_unchecked(self.basis_bracket(i, j), &e(k));
        for (x, y) in [
            (self.basis_bracket(j, k), e(i)),
            (self.basis_bracket(k, i), e(j)),
        ] {
            for (acc, v) in r.iter_mut().zip(self.bracket_unchecked(x, &y)) {
                *acc += &v;
            }
        }
        r
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let residual = self.jacobi_residual(i, j, k);
                    if !is_zero_vec(&residual) {
                        return Err(Error::JacobiViolation {
                            triple: (i + 1, j + 1, k + 1),
                            residual,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `y ↦ [x, y]` in the standard basis.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for c in 0..n {
            let col = self.bracket(x, &unit(n, c))?;
            for (r, v) in col.into_iter().enumerate() {
                m[(r, c)] = v;
            }
        }
        Ok(m)
    }

    /// `span{[a, b] : a ∈ s, b ∈ t}` over basis vectors of both.
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for a in s.basis_vectors() {
            for b in t.basis_vectors() {
                let v = self.bracket_unchecked(&a, &b);
                if !is_zero_vec(&v) {
                    vecs.push(v);
                }
            }
        }
        span(&vecs, self.dim).expect("bracket vectors have length n")
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        self.bracket_span(&self.whole(), &self.whole())
    }

    /// `{x : [x, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        // Rows: for each basis vector b of s and output coordinate r,
        // the functional x ↦ [x, b]_r.
        let n = self.dim;
        let mut rows = Vec::new();
        for b in s.basis_vectors() {
            let mut block = vec![vec![Scalar::zero(); n]; n];
            for (a, col) in (0..n).map(|a| (a, self.bracket_unchecked(&unit(n, a), &b))) {
                for (r, v) in col.into_iter().enumerate() {
                    block[r][a] = v;
                }
            }
            rows.extend(block);
        }
        let m = Matrix::from_rows(rows, n).expect("rows of length n");
        Subspace::row_space(&kernel_basis(&m))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.whole())
    }

    /// `{x : [x, l] ⊆ s}`, the preimage of the center of `l/s` when `s` is an ideal.
    pub fn center_modulo(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        let ann = s.annihilator();
        let mut rows = Vec::new();
        for b in 0..n {
            let adb: Vec<Vec<Scalar>> = (0..n)
                .map(|a| self.bracket_unchecked(&unit(n, a), &unit(n, b)))
                .collect();
            for w in ann.row_vectors() {
                rows.push((0..n).map(|a| crate::linalg::dot(&w, &adb[a])).collect());
            }
        }
        let m = Matrix::from_rows(rows, n).expect("rows of length n");
        Subspace::row_space(&kernel_basis(&m))
    }

    /// `γ_1 = l ⊇ γ_2 = [l,l] ⊇ …`, ending at 0 or at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.whole()];
        for _ in 0..=self.dim {
            let last = series.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = self.bracket_span(last, &self.whole());
            if next == *last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `Z_0 = 0 ⊆ Z_1 = Z(l) ⊆ …`, ending at `l` or at the first repeated term.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::zero(self.dim)];
        for _ in 0..=self.dim {
            let last = series.last().unwrap();
            if last.is_full() {
                break;
            }
            let next = self.center_modulo(last);
            if next == *last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Class `c` with `Z_c(l) = l`; `None` when not nilpotent.
    /// Abelian algebras have class 1, the zero algebra class 0.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let ucs = self.upper_central_series();
        ucs.last().unwrap().is_full().then(|| ucs.len() - 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && s.contains_subspace(&self.bracket_span(s, &self.whole()))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && s.contains_subspace(&self.bracket_span(s, s))
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut consts = vec![Scalar::zero(); n * n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    consts[(i * n + j) * n + k] = self.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    consts[((i + n1) * n + j + n1) * n + k + n1] =
                        other.structure_constant(i, j, k).clone();
                }
            }
        }
        LieAlgebra {
            dim: n,
            consts,
            label: None,
        }
    }

    /// `l / ideal` on the standard basis vectors outside the ideal's pivot
    /// columns, in increasing order.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let keep: Vec<usize> = (0..self.dim)
            .filter(|c| !ideal.pivots().contains(c))
            .collect();
        let q = keep.len();
        let mut consts = vec![Scalar::zero(); q * q * q];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let w = ideal.reduce(self.basis_bracket(i, j));
                for (c, &k) in keep.iter().enumerate() {
                    consts[(a * q + b) * q + c] = w[k].clone();
                }
            }
        }
        Ok(LieAlgebra {
            dim: q,
            consts,
            label: None,
        })
    }

    /// Re-expresses the algebra in the basis `f_i = Σ_j p[j][i] e_j`
    /// (columns of `p` are the new basis vectors).
    pub fn change_of_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.rows().max(p.cols()),
            });
        }
        let inv = p.inverse()?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|c| p.column(c)).collect();
        let mut consts = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                let w = inv.mul_vec(&self.bracket_unchecked(&cols[i], &cols[j]))?;
                for (k, c) in w.into_iter().enumerate() {
                    consts[(j * n + i) * n + k] = -&c;
                    consts[(i * n + j) * n + k] = c;
                }
            }
        }
        Ok(LieAlgebra {
            dim: n,
            consts,
            label: self.label.clone(),
        })
    }

    pub fn is_semidirect(&self, a: &Subspace, b: &Subspace) -> Result<SemidirectReport> {
        let spans = a.sum(b)?.is_full() && a.ambient_dim() == self.dim;
        let trivial_intersection = a.intersect(b)?.is_zero();
        Ok(SemidirectReport {
            is_ideal_a: self.is_ideal(a),
            spans,
            trivial_intersection,
            is_central_a: self.center().contains_subspace(a),
        })
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.consts == other.consts
    }
}

impl Eq for LieAlgebra {}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}", self.label.as_deref().unwrap_or("?"))?;
        write!(f, ", dim {}", self.dim)?;
        for r in self.relations() {
            write!(f, ", [{},{}] =", r.i, r.j)?;
            for (c, k) in r.terms {
                write!(f, " {c:?}·e{k}")?;
            }
        }
        write!(f, ")")
    }
}
