//! Lie algebra realizations by ladder operators, and the Hamiltonians
//! built from them.

use serde::Serialize;

use super::{Monomial, WeylElement};
use crate::catalog::{get, heisenberg, heisenberg_plus_abelian};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Whether `b_j` is read as `a_j†` (bosons) or as an independent partner
/// (pseudo-bosons). Symbolically both obey `[a_j, b_j] = I`; the tag only
/// matters for adjointness claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Bosonic,
    Pseudo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// 1-based generator indices.
    pub i: usize,
    pub j: usize,
    /// `[X_i, X_j] − Σ_k c_ij^k X_k`.
    pub difference: WeylElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationReport {
    pub is_homomorphism: bool,
    pub mismatches: Vec<Mismatch>,
    /// The images are linearly independent.
    pub is_faithful: bool,
}

/// Checks that `v_k ↦ X_k` preserves every bracket and whether the images
/// are linearly independent.
pub fn verify_realization(l: &LieAlgebra, assignment: &[WeylElement]) -> Result<RealizationReport> {
    let n = l.dim();
    if assignment.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: assignment.len(),
        });
    }
    let modes = assignment.first().map_or(0, WeylElement::modes);
    if let Some(x) = assignment.iter().find(|x| x.modes() != modes) {
        return Err(Error::ModeMismatch(modes, x.modes()));
    }
    let mut mismatches = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = assignment[i].commutator(&assignment[j])?;
            let mut rhs = WeylElement::zero(modes);
            for (k, c) in l.basis_bracket(i, j).iter().enumerate() {
                if !c.is_zero() {
                    rhs = &rhs + &assignment[k].scale(c);
                }
            }
            let difference = &lhs - &rhs;
            if !difference.is_zero() {
                mismatches.push(Mismatch {
                    i: i + 1,
                    j: j + 1,
                    difference,
                });
            }
        }
    }
    Ok(RealizationReport {
        is_homomorphism: mismatches.is_empty(),
        mismatches,
        is_faithful: images_independent(assignment),
    })
}

fn images_independent(xs: &[WeylElement]) -> bool {
    let mut support: Vec<&Monomial> = xs.iter().flat_map(|x| x.terms().map(|(m, _)| m)).collect();
    support.sort();
    support.dedup();
    let rows: Vec<Vec<Scalar>> = xs
        .iter()
        .map(|x| support.iter().map(|m| x.coefficient(m)).collect())
        .collect();
    let m = Matrix::from_rows(rows, support.len()).expect("rows share the support length");
    Subspace::row_space(&m).dim() == xs.len()
}

/// A named operator assignment together with the algebra it targets.
#[derive(Debug, Clone)]
pub struct Realization {
    pub name: String,
    pub algebra: LieAlgebra,
    pub modes: usize,
    pub flavor: Flavor,
    pub assignment: Vec<WeylElement>,
    /// Non-fatal notes, e.g. a shift pair with `α = β̄`.
    pub warnings: Vec<String>,
}

impl Realization {
    pub fn verify(&self) -> Result<RealizationReport> {
        verify_realization(&self.algebra, &self.assignment)
    }
}

fn half() -> Scalar {
    Scalar::ratio(1, 2)
}

/// `(a, b²/2, b, I)` for `L4_3`.
fn l43_assignment() -> Vec<WeylElement> {
    let a = WeylElement::lower(1, 1);
    let b = WeylElement::raise(1, 1);
    vec![a, b.pow(2).scale(&half()), b, WeylElement::identity(1)]
}

/// `(a1, b1, b1·a2, I, a2)` for `L5_8`.
fn l58_assignment() -> Vec<WeylElement> {
    let a = |j| WeylElement::lower(2, j);
    let b = |j| WeylElement::raise(2, j);
    vec![a(1), b(1), &b(1) * &a(2), WeylElement::identity(2), a(2)]
}

/// `(a1, a2 + b1²/2, b1, b2, I)` for `L5_5`.
fn l55_assignment() -> Vec<WeylElement> {
    let a = |j| WeylElement::lower(2, j);
    let b = |j| WeylElement::raise(2, j);
    vec![
        a(1),
        &a(2) + &b(1).pow(2).scale(&half()),
        b(1),
        b(2),
        WeylElement::identity(2),
    ]
}

fn fixed(name: &str, target: &str, flavor: Flavor, assignment: Vec<WeylElement>) -> Realization {
    Realization {
        name: name.to_string(),
        algebra: get(target).expect("built-in target").algebra,
        modes: assignment[0].modes(),
        flavor,
        assignment,
        warnings: Vec::new(),
    }
}

/// `h(m) ⊕ i^k` by `v_{2j−1} = a_j`, `v_{2j} = b_j` and every remaining
/// generator sent to `I`. Only `k = 0` gives linearly independent images.
pub fn heisenberg_ladder(m: usize, k: usize) -> Result<Realization> {
    let algebra = heisenberg_plus_abelian(m, k)?;
    let mut assignment = Vec::with_capacity(algebra.dim());
    for j in 1..=m {
        assignment.push(WeylElement::lower(m, j));
        assignment.push(WeylElement::raise(m, j));
    }
    while assignment.len() < algebra.dim() {
        assignment.push(WeylElement::identity(m));
    }
    Ok(Realization {
        name: format!("H({m})+A({k})"),
        algebra,
        modes: m,
        flavor: Flavor::Bosonic,
        assignment,
        warnings: Vec::new(),
    })
}

/// `h(m)` by `w_{2j−1} = a_j + α_j I`, `w_{2j} = b_j + β_j I`, `w_{2m+1} = I`.
/// Pairs with `α_j = β̄_j` are accepted but reported in `warnings`.
pub fn heisenberg_shifted(m: usize, alpha: &[Scalar], beta: &[Scalar]) -> Result<Realization> {
    if alpha.len() != m || beta.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: alpha.len().min(beta.len()),
        });
    }
    let algebra = heisenberg(m)?;
    let mut assignment = Vec::with_capacity(2 * m + 1);
    let mut warnings = Vec::new();
    let id = WeylElement::identity(m);
    for j in 1..=m {
        let (al, be) = (&alpha[j - 1], &beta[j - 1]);
        if *al == be.conj() {
            warnings.push(format!("mode {j}: alpha = conj(beta) = {al}"));
        }
        assignment.push(&WeylElement::lower(m, j) + &id.scale(al));
        assignment.push(&WeylElement::raise(m, j) + &id.scale(be));
    }
    assignment.push(id);
    Ok(Realization {
        name: format!("H({m})-shifted"),
        algebra,
        modes: m,
        flavor: Flavor::Pseudo,
        assignment,
        warnings,
    })
}

/// The built-in constructions by name:
/// `L4_3-bosonic`, `L4_3-pseudo`, `L5_8-bosonic`, `L5_8-pseudo`,
/// `L5_5-bosonic`, `L5_5-pseudo`, `H(m)-shifted` (shifts `α_j = i`,
/// `β_j = 1`) and `H(m)+A(k)`.
pub fn builtin_realization(name: &str) -> Result<Realization> {
    let unknown = || Error::UnknownName(name.to_string());
    let key = name.trim();
    let r = match key {
        "L4_3-bosonic" => fixed(key, "L4_3", Flavor::Bosonic, l43_assignment()),
        "L4_3-pseudo" => fixed(key, "L4_3", Flavor::Pseudo, l43_assignment()),
        "L5_8-bosonic" => fixed(key, "L5_8", Flavor::Bosonic, l58_assignment()),
        "L5_8-pseudo" => fixed(key, "L5_8", Flavor::Pseudo, l58_assignment()),
        "L5_5-bosonic" => fixed(key, "L5_5", Flavor::Bosonic, l55_assignment()),
        "L5_5-pseudo" => fixed(key, "L5_5", Flavor::Pseudo, l55_assignment()),
        _ => {
            let rest = key.strip_prefix("H(").ok_or_else(unknown)?;
            let (m, tail) = rest.split_once(')').ok_or_else(unknown)?;
            let m: usize = m.trim().parse().map_err(|_| unknown())?;
            if tail == "-shifted" {
                heisenberg_shifted(m, &vec![Scalar::i(); m], &vec![Scalar::one(); m])?
            } else {
                let k = tail
                    .strip_prefix("+A(")
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(unknown)?;
                heisenberg_ladder(m, k.trim().parse().map_err(|_| unknown())?)?
            }
        }
    };
    Ok(r)
}

/// Hamiltonians written in the generators of a realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hamiltonian {
    /// `ω v3 v1 + i(2g v2 − ḡ v1²)` on `L4_3`, i.e. `ω b a + i(g b² − ḡ a²)`;
    /// `ω` real.
    Squeezing { omega: Scalar, g: Scalar },
    /// `λ(v3 + v2 v5)` on `L5_8`; `λ` real.
    L58 { lambda: Scalar },
    /// `ω v3 v1 + λ v4 v2` on `L5_5`; `ω, λ` real.
    L55 { omega: Scalar, lambda: Scalar },
}

fn require_real(name: &str, x: &Scalar) -> Result<()> {
    if x.is_real() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be real, got {x}")))
    }
}

pub fn hamiltonian(h: &Hamiltonian, flavor: Flavor) -> Result<WeylElement> {
    let target = match h {
        Hamiltonian::Squeezing { .. } => "L4_3",
        Hamiltonian::L58 { .. } => "L5_8",
        Hamiltonian::L55 { .. } => "L5_5",
    };
    let suffix = match flavor {
        Flavor::Bosonic => "bosonic",
        Flavor::Pseudo => "pseudo",
    };
    let v = builtin_realization(&format!("{target}-{suffix}"))?.assignment;
    Ok(match h {
        Hamiltonian::Squeezing { omega, g } => {
            require_real("omega", omega)?;
            let squeeze =
                &v[1].scale(&(g * &Scalar::from_int(2))) - &(&v[0] * &v[0]).scale(&g.conj());
            &(&v[2] * &v[0]).scale(omega) + &squeeze.scale(&Scalar::i())
        }
        Hamiltonian::L58 { lambda } => {
            require_real("lambda", lambda)?;
            (&v[2] + &(&v[1] * &v[4])).scale(lambda)
        }
        Hamiltonian::L55 { omega, lambda } => {
            require_real("omega", omega)?;
            require_real("lambda", lambda)?;
            &(&v[2] * &v[0]).scale(omega) + &(&v[3] * &v[1]).scale(lambda)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn l43_realizations() {
        let r = builtin_realization("L4_3-pseudo").unwrap();
        let v = &r.assignment;
        assert_eq!(v[1], WeylElement::raise(1, 1).pow(2).scale(&half()));
        let rep = r.verify().unwrap();
        assert!(rep.is_homomorphism && rep.is_faithful);
    }

    #[test]
    fn l55_and_l58_realizations() {
        for name in ["L5_5-bosonic", "L5_5-pseudo", "L5_8-bosonic", "L5_8-pseudo"] {
            let rep = builtin_realization(name).unwrap().verify().unwrap();
            assert!(rep.is_homomorphism && rep.is_faithful, "{name}");
        }
        let v = builtin_realization("L5_8-pseudo").unwrap().assignment;
        assert_eq!(v[2], &WeylElement::raise(2, 1) * &WeylElement::lower(2, 2));
    }

    #[test]
    fn abelian_summands_collapse_to_identity() {
        let rep = heisenberg_ladder(1, 2).unwrap().verify().unwrap();
        assert!(rep.is_homomorphism);
        assert!(!rep.is_faithful);
        let rep = heisenberg_ladder(2, 0).unwrap().verify().unwrap();
        assert!(rep.is_homomorphism && rep.is_faithful);
    }

    #[test]
    fn shifted_pairs() {
        let r = builtin_realization("H(1)-shifted").unwrap();
        assert!(r.warnings.is_empty());
        let w = &r.assignment;
        assert_eq!(w[0].commutator(&w[1]).unwrap(), WeylElement::identity(1));
        assert!(r.verify().unwrap().is_homomorphism);

        let r =
            heisenberg_shifted(1, &[Scalar::gaussian(1, 1)], &[Scalar::gaussian(1, -1)]).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!(r.verify().unwrap().is_homomorphism);
    }

    #[test]
    fn wrong_assignment_is_reported() {
        let l = get("L4_3").unwrap().algebra;
        let mut v = l43_assignment();
        v.swap(2, 3);
        let rep = verify_realization(&l, &v).unwrap();
        assert!(!rep.is_homomorphism);
        assert_eq!((rep.mismatches[0].i, rep.mismatches[0].j), (1, 2));
        assert!(verify_realization(&l, &v[..3]).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(builtin_realization("H(2)+A(3)").unwrap().algebra.dim(), 8);
        assert!(matches!(
            builtin_realization("L5_9-bosonic"),
            Err(Error::UnknownName(_))
        ));
        assert!(matches!(
            builtin_realization("H(x)-shifted"),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn hamiltonian_values() {
        // ω = 1, g = i: b a + i(i b² + i a²) = b a − b² − a².
        let h0 = hamiltonian(
            &Hamiltonian::Squeezing {
                omega: s(1),
                g: Scalar::i(),
            },
            Flavor::Bosonic,
        )
        .unwrap();
        let a = WeylElement::lower(1, 1);
        let b = WeylElement::raise(1, 1);
        assert_eq!(h0, &(&(&b * &a) - &b.pow(2)) - &a.pow(2));

        let zero = hamiltonian(&Hamiltonian::L58 { lambda: s(0) }, Flavor::Pseudo).unwrap();
        assert!(zero.is_zero());

        let h55 = hamiltonian(
            &Hamiltonian::L55 {
                omega: s(2),
                lambda: s(3),
            },
            Flavor::Pseudo,
        )
        .unwrap();
        let a = |j| WeylElement::lower(2, j);
        let b = |j| WeylElement::raise(2, j);
        let expected = &(&b(1) * &a(1)).scale(&s(2))
            + &(&b(2) * &(&a(2) + &b(1).pow(2).scale(&half()))).scale(&s(3));
        assert_eq!(h55, expected);

        assert!(hamiltonian(
            &Hamiltonian::L58 {
                lambda: Scalar::i()
            },
            Flavor::Bosonic
        )
        .is_err());
    }
}
