//! Chevalley–Eilenberg cochains with trivial coefficients, the Schur
//! multiplier, 2-cocycles and central extensions.
//!
//! `C^p` has basis `φ_S` for `p`-subsets `S ⊆ {1..n}` listed in
//! lexicographic order; `φ_S` takes the value 1 on `(e_s1, …, e_sp)` with
//! `s1 < … < sp` and is extended alternatingly.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::invariants::Fingerprint;
use crate::lie::LieAlgebra;
use crate::linalg::{kernel_basis, rref, Matrix, Subspace};
use crate::scalar::Scalar;

/// All `p`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < p - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        go(0, n, p, &mut Vec::with_capacity(p), &mut out);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The matrix of `d^p : C^p → C^{p+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainMatrix {
    pub degree: usize,
    pub matrix: Matrix,
}

/// `d^p` from `(dφ)(x_0,…,x_p) = Σ_{i<j} (−1)^{i+j} φ([x_i,x_j], x_0,…,x̂_i,…,x̂_j,…,x_p)`.
pub fn ce_differential(l: &LieAlgebra, p: usize) -> CochainMatrix {
    let n = l.dim();
    let domain = subsets(n, p);
    let codomain = subsets(n, p + 1);
    let index: HashMap<&[usize], usize> = domain
        .iter()
        .enumerate()
        .map(|(k, s)| (s.as_slice(), k))
        .collect();
    let mut m = Matrix::zeros(codomain.len(), domain.len());
    for (row, s) in codomain.iter().enumerate() {
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                let rest: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &x)| x)
                    .collect();
                let outer = if (i + j) % 2 == 0 { 1 } else { -1 };
                for (k, c) in l.basis_bracket(s[i], s[j]).iter().enumerate() {
                    if c.is_zero() || rest.contains(&k) {
                        continue;
                    }
                    // Moving e_k past the smaller entries of `rest` costs a sign each.
                    let pos = rest.iter().filter(|&&x| x < k).count();
                    let sign = if pos % 2 == 0 { outer } else { -outer };
                    let mut key = rest.clone();
                    key.insert(pos, k);
                    let col = index[key.as_slice()];
                    let term = c * &Scalar::from_int(sign);
                    m[(row, col)] += &term;
                }
            }
        }
    }
    CochainMatrix {
        degree: p,
        matrix: m,
    }
}

/// Ranks of the low differentials and the derived invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CohomologyReport {
    pub n: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub multiplier_dim: usize,
    pub corank: usize,
}

pub fn cohomology_report(l: &LieAlgebra) -> CohomologyReport {
    let n = l.dim();
    let rank_d1 = ce_differential(l, 1).matrix.rank();
    let rank_d2 = ce_differential(l, 2).matrix.rank();
    let pairs = binomial(n, 2);
    let multiplier_dim = pairs - rank_d2 - rank_d1;
    CohomologyReport {
        n,
        rank_d1,
        rank_d2,
        multiplier_dim,
        corank: pairs - multiplier_dim,
    }
}

/// `dim M(l) = dim H²(l)`.
pub fn schur_multiplier_dim(l: &LieAlgebra) -> usize {
    cohomology_report(l).multiplier_dim
}

/// `n(n−1)/2 − dim M(l)`.
pub fn corank(l: &LieAlgebra) -> usize {
    cohomology_report(l).corank
}

/// An antisymmetric bilinear form with `theta[(i, j)] = θ(e_i, e_j)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoCocycle {
    theta: Matrix,
}

impl TwoCocycle {
    /// Wraps an antisymmetric matrix; the cocycle condition is checked by
    /// [`is_cocycle`] or [`central_extension`], not here.
    pub fn new(theta: Matrix) -> Result<Self> {
        let n = theta.rows();
        if theta.cols() != n {
            return Err(Error::NotAntisymmetric);
        }
        for i in 0..n {
            for j in 0..n {
                if theta[(i, j)] != -&theta[(j, i)] {
                    return Err(Error::NotAntisymmetric);
                }
            }
        }
        Ok(TwoCocycle { theta })
    }

    pub fn zero(n: usize) -> Self {
        TwoCocycle {
            theta: Matrix::zeros(n, n),
        }
    }

    /// From `(i, j, value)` entries with 1-based `i < j`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut theta = Matrix::zeros(n, n);
        for (i, j, v) in entries {
            for idx in [*i, *j] {
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            if i == j {
                if v.is_zero() {
                    continue;
                }
                return Err(Error::NotAntisymmetric);
            }
            theta[(i - 1, j - 1)] += v;
            theta[(j - 1, i - 1)] -= v;
        }
        Ok(TwoCocycle { theta })
    }

    /// From coordinates on the lexicographic pair basis of `C²`.
    fn from_pair_coords(n: usize, coords: &[Scalar]) -> Self {
        let mut theta = Matrix::zeros(n, n);
        for (c, s) in coords.iter().zip(subsets(n, 2)) {
            theta[(s[0], s[1])] = c.clone();
            theta[(s[1], s[0])] = -c;
        }
        TwoCocycle { theta }
    }

    fn pair_coords(&self) -> Vec<Scalar> {
        subsets(self.dim(), 2)
            .iter()
            .map(|s| self.theta[(s[0], s[1])].clone())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.theta.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.theta
    }

    /// `θ(x, y)` for coordinate vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let ty = self.theta.mul_vec(y).expect("length checked by caller");
        crate::linalg::dot(x, &ty)
    }

    /// Nonzero `θ(e_i, e_j)` with `i < j`, 1-based.
    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        subsets(self.dim(), 2)
            .into_iter()
            .filter(|s| !self.theta[(s[0], s[1])].is_zero())
            .map(|s| (s[0] + 1, s[1] + 1, self.theta[(s[0], s[1])].clone()))
            .collect()
    }

    fn combine(basis: &[TwoCocycle], coeffs: &[i64], n: usize) -> TwoCocycle {
        let mut theta = Matrix::zeros(n, n);
        for (b, &c) in basis.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            let c = Scalar::from_int(c);
            for i in 0..n {
                for j in 0..n {
                    let v = &b.theta[(i, j)];
                    if !v.is_zero() {
                        theta[(i, j)] += &(&c * v);
                    }
                }
            }
        }
        TwoCocycle { theta }
    }
}

impl std::fmt::Debug for TwoCocycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.entries()).finish()
    }
}

/// Basis of `Z² = ker d²`.
pub fn cocycle_space(l: &LieAlgebra) -> Vec<TwoCocycle> {
    let d2 = ce_differential(l, 2).matrix;
    let ker = kernel_basis(&d2);
    (0..ker.rows())
        .map(|r| TwoCocycle::from_pair_coords(l.dim(), ker.row(r)))
        .collect()
}

/// Basis of the coboundaries `B² = im d¹`.
pub fn coboundary_space(l: &LieAlgebra) -> Subspace {
    let d1 = ce_differential(l, 1).matrix;
    Subspace::row_space(&d1.transpose())
}

/// Checks `θ([x,y],z) + θ([y,z],x) + θ([z,x],y) = 0` on all basis triples.
pub fn is_cocycle(l: &LieAlgebra, theta: &TwoCocycle) -> Result<bool> {
    let n = l.dim();
    if theta.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: theta.dim(),
        });
    }
    let e = |k| crate::linalg::unit(n, k);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let total = theta.eval(l.basis_bracket(i, j), &e(k))
                    + theta.eval(l.basis_bracket(j, k), &e(i))
                    + theta.eval(l.basis_bracket(k, i), &e(j));
                if !total.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `l ⊕_θ ⟨z⟩` with `[x,y]' = [x,y] + θ(x,y)·z` and `z = e_{n+1}` central.
pub fn central_extension(l: &LieAlgebra, theta: &TwoCocycle) -> Result<LieAlgebra> {
    if !is_cocycle(l, theta)? {
        return Err(Error::NotACocycle);
    }
    Ok(naive_extension(l, theta).expect("cocycle extensions satisfy Jacobi"))
}

/// The same construction without the cocycle check; fails with a Jacobi
/// violation when `θ` is not a cocycle.
pub fn naive_extension(l: &LieAlgebra, theta: &TwoCocycle) -> Result<LieAlgebra> {
    let n = l.dim();
    if theta.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: theta.dim(),
        });
    }
    LieAlgebra::from_fn(n + 1, |i, j| {
        let mut v = vec![Scalar::zero(); n + 1];
        if j < n {
            v[..n].clone_from_slice(l.basis_bracket(i, j));
            v[n] = theta.matrix()[(i, j)].clone();
        }
        v
    })
}

/// Searches integer combinations of the [`cocycle_space`] basis with
/// coefficients in `[−bound, bound]` for one whose central extension has the
/// `target` fingerprint.
///
/// Candidates are visited by increasing largest coefficient, and
/// lexicographically within each shell, so the witness returned has the
/// smallest possible coefficients.
pub fn find_extension_to(l: &LieAlgebra, target: &Fingerprint, bound: u32) -> Option<TwoCocycle> {
    if target.dim != l.dim() + 1 || bound == 0 {
        return None;
    }
    let basis = cocycle_space(l);
    let k = basis.len();
    let n = l.dim();
    let bound = bound as i64;
    for shell in 1..=bound {
        let mut coeffs = vec![-shell; k];
        loop {
            if coeffs.iter().any(|c| c.abs() == shell) {
                let theta = TwoCocycle::combine(&basis, &coeffs, n);
                let ext = naive_extension(l, &theta).expect("kernel elements are cocycles");
                if target.matches(&ext) {
                    return Some(theta);
                }
            }
            if !advance(&mut coeffs, shell) {
                break;
            }
        }
    }
    // θ = 0 gives l ⊕ i; it is outside every shell above.
    let zero = TwoCocycle::zero(n);
    target
        .matches(&naive_extension(l, &zero).expect("zero form"))
        .then_some(zero)
}

/// Odometer step over `[−bound, bound]^k`; false once every tuple was visited.
fn advance(coeffs: &mut [i64], bound: i64) -> bool {
    for pos in (0..coeffs.len()).rev() {
        if coeffs[pos] < bound {
            coeffs[pos] += 1;
            for c in &mut coeffs[pos + 1..] {
                *c = -bound;
            }
            return true;
        }
    }
    false
}

/// Cohomology class representative check: `θ ∈ B²`.
pub fn is_coboundary(l: &LieAlgebra, theta: &TwoCocycle) -> bool {
    coboundary_space(l).contains(&theta.pair_coords())
}

/// Rank of `d^p` for every `p`; mostly useful for diagnostics.
pub fn differential_ranks(l: &LieAlgebra) -> Vec<usize> {
    (0..=l.dim())
        .map(|p| rref(&ce_differential(l, p).matrix).rank)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Relation;

    fn h1() -> LieAlgebra {
        LieAlgebra::from_brackets(3, &[Relation::unit(1, 2, 3)]).unwrap()
    }

    fn l43() -> LieAlgebra {
        LieAlgebra::from_brackets(4, &[Relation::unit(1, 2, 3), Relation::unit(1, 3, 4)]).unwrap()
    }

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn subset_order_is_lexicographic() {
        assert_eq!(
            subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
        assert_eq!(binomial(8, 3), 56);
    }

    #[test]
    fn differential_shapes_and_examples() {
        let a = LieAlgebra::abelian(4);
        for p in 0..=4 {
            let d = ce_differential(&a, p);
            assert_eq!(d.matrix.rows(), binomial(4, p + 1));
            assert_eq!(d.matrix.cols(), binomial(4, p));
            assert!(d.matrix.is_zero());
        }
        assert!(ce_differential(&h1(), 2).matrix.is_zero());
        assert_eq!(ce_differential(&l43(), 2).matrix.rank(), 2);
    }

    #[test]
    fn l43_d2_rows_by_hand() {
        // Triple (1,2,3): the (1,3) term gives +φ(e4, e2) = −φ_24.
        // Triple (1,2,4): the (1,2) term gives −φ(e3, e4) = −φ_34.
        let d = ce_differential(&l43(), 2).matrix;
        let pairs = subsets(4, 2);
        let col = |a: usize, b: usize| pairs.iter().position(|p| p == &vec![a, b]).unwrap();
        let mut row123 = vec![s(0); 6];
        row123[col(1, 3)] = s(-1);
        let mut row124 = vec![s(0); 6];
        row124[col(2, 3)] = s(-1);
        assert_eq!(d.row(0), row123.as_slice());
        assert_eq!(d.row(1), row124.as_slice());
        assert!(crate::linalg::is_zero_vec(d.row(2)));
        assert!(crate::linalg::is_zero_vec(d.row(3)));
    }

    #[test]
    fn multiplier_examples() {
        assert_eq!((schur_multiplier_dim(&h1()), corank(&h1())), (2, 1));
        let l58 = LieAlgebra::from_brackets(5, &[Relation::unit(1, 2, 4), Relation::unit(1, 3, 5)])
            .unwrap();
        let r = cohomology_report(&l58);
        assert_eq!((r.rank_d2, r.multiplier_dim, r.corank), (2, 6, 4));
    }

    #[test]
    fn cocycle_space_sizes() {
        assert_eq!(cocycle_space(&LieAlgebra::abelian(3)).len(), 3);
        assert_eq!(cocycle_space(&h1()).len(), 3);
        assert_eq!(cocycle_space(&l43()).len(), 4);
        for theta in cocycle_space(&l43()) {
            assert!(is_cocycle(&l43(), &theta).unwrap());
        }
    }

    #[test]
    fn cocycle_checks() {
        assert!(is_cocycle(&l43(), &TwoCocycle::zero(4)).unwrap());
        let t = TwoCocycle::from_entries(3, &[(1, 3, s(1))]).unwrap();
        assert!(is_cocycle(&h1(), &t).unwrap());

        // Brute force over the four triples of l4,3 for θ(e2,e3) = 1:
        // (1,2,3): θ(e3,e3) + θ(0,e1) + θ(−e4,e2) = 0
        // (1,2,4): θ(e3,e4) + 0 + 0 = 0
        // (1,3,4): θ(e4,e4) + 0 + 0 = 0
        // (2,3,4): 0
        let t = TwoCocycle::from_entries(4, &[(2, 3, s(1))]).unwrap();
        assert!(is_cocycle(&l43(), &t).unwrap());
        // θ(e3,e4) = 1 fails on (1,2,4).
        let t = TwoCocycle::from_entries(4, &[(3, 4, s(1))]).unwrap();
        assert!(!is_cocycle(&l43(), &t).unwrap());

        let asym = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(TwoCocycle::new(asym), Err(Error::NotAntisymmetric));
    }

    #[test]
    fn extensions() {
        let t = TwoCocycle::from_entries(3, &[(1, 3, s(1))]).unwrap();
        let ext = central_extension(&h1(), &t).unwrap();
        assert_eq!(ext, l43());

        let trivial = central_extension(&h1(), &TwoCocycle::zero(3)).unwrap();
        assert_eq!(trivial, h1().direct_sum(&LieAlgebra::abelian(1)));

        let bad = TwoCocycle::from_entries(4, &[(3, 4, s(1))]).unwrap();
        assert_eq!(central_extension(&l43(), &bad), Err(Error::NotACocycle));
        assert!(matches!(
            naive_extension(&l43(), &bad),
            Err(Error::JacobiViolation { .. })
        ));
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let b = coboundary_space(&l43());
        assert_eq!(b.dim(), 2);
        for v in b.basis_vectors() {
            let t = TwoCocycle::from_pair_coords(4, &v);
            assert!(is_cocycle(&l43(), &t).unwrap());
            assert!(is_coboundary(&l43(), &t));
        }
    }
}
