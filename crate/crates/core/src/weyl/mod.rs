//! The multi-mode Weyl algebra generated by `a_j, b_j` with
//! `[a_j, b_k] = δ_jk·I` and all other generator pairs commuting.
//!
//! Elements are kept in normal order (every `b` left of every `a`), which
//! makes the representation unique.

mod realize;

pub use realize::{
    builtin_realization, hamiltonian, heisenberg_ladder, heisenberg_shifted, verify_realization,
    Flavor, Hamiltonian, Mismatch, Realization, RealizationReport,
};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `b_1^{p_1}…b_m^{p_m} a_1^{q_1}…a_m^{q_m}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub b: Vec<u32>,
    pub a: Vec<u32>,
}

impl Monomial {
    pub fn identity(modes: usize) -> Self {
        Monomial {
            b: vec![0; modes],
            a: vec![0; modes],
        }
    }

    pub fn degree(&self) -> u32 {
        self.b.iter().chain(&self.a).sum()
    }

    /// Total number of raising operators.
    pub fn raising(&self) -> u32 {
        self.b.iter().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.degree() == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (sym, exps) in [('b', &self.b), ('a', &self.a)] {
            for (j, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{sym}{}", j + 1)),
                    _ => factors.push(format!("{sym}{}^{e}", j + 1)),
                }
            }
        }
        if factors.is_empty() {
            f.write_str("I")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// A finite linear combination of normal-ordered monomials with nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    modes: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binom(n: u32, k: u32) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `a^q b^r = Σ_k k!·C(q,k)·C(r,k)·b^{r−k} a^{q−k}` as `(k, weight)` pairs.
fn reorder_weights(q: u32, r: u32) -> Vec<(u32, BigInt)> {
    (0..=q.min(r))
        .map(|k| (k, factorial(k) * binom(q, k) * binom(r, k)))
        .collect()
}

impl WeylElement {
    pub fn zero(modes: usize) -> Self {
        WeylElement {
            modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(modes: usize) -> Self {
        WeylElement::constant(modes, Scalar::one())
    }

    pub fn constant(modes: usize, c: Scalar) -> Self {
        WeylElement::monomial(Monomial::identity(modes), c)
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        assert_eq!(
            m.a.len(),
            m.b.len(),
            "monomial exponent vectors differ in length"
        );
        let modes = m.a.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WeylElement { modes, terms }
    }

    /// Lowering operator `a_j`, `j` 1-based.
    pub fn lower(modes: usize, j: usize) -> Self {
        assert!(
            j >= 1 && j <= modes,
            "mode index {j} out of range 1..={modes}"
        );
        let mut m = Monomial::identity(modes);
        m.a[j - 1] = 1;
        WeylElement::monomial(m, Scalar::one())
    }

    /// Raising operator `b_j`, `j` 1-based.
    pub fn raise(modes: usize, j: usize) -> Self {
        assert!(
            j >= 1 && j <= modes,
            "mode index {j} out of range 1..={modes}"
        );
        let mut m = Monomial::identity(modes);
        m.b[j - 1] = 1;
        WeylElement::monomial(m, Scalar::one())
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest total degree of a term; `None` stands for the degree of zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest number of raising operators in a term.
    pub fn raising_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::raising).max()
    }

    /// Same element with `extra` commuting modes appended.
    pub fn extend_modes(&self, modes: usize) -> Self {
        assert!(modes >= self.modes);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.a.resize(modes, 0);
                m.b.resize(modes, 0);
                (m, c.clone())
            })
            .collect();
        WeylElement { modes, terms }
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_modes(&self, other: &WeylElement) -> Result<()> {
        if self.modes != other.modes {
            return Err(Error::ModeMismatch(self.modes, other.modes));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return WeylElement::zero(self.modes);
        }
        WeylElement {
            modes: self.modes,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &WeylElement) -> Result<Self> {
        self.check_modes(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &WeylElement) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Normal-ordered product.
    pub fn multiply(&self, other: &WeylElement) -> Result<Self> {
        self.check_modes(other)?;
        let mut out = WeylElement::zero(self.modes);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let coef = c1 * c2;
                for (m, w) in monomial_product(m1, m2) {
                    out.add_term(
                        m,
                        &(&coef * &Scalar::from(num_rational::BigRational::from_integer(w))),
                    );
                }
            }
        }
        Ok(out)
    }

    /// `xy − yx`.
    pub fn commutator(&self, other: &WeylElement) -> Result<Self> {
        self.multiply(other)?.try_sub(&other.multiply(self)?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = WeylElement::identity(self.modes);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal adjoint in the bosonic reading `b_j = a_j†`: antilinear,
    /// reverses products, `(b^p a^q)† = b^q a^p`.
    pub fn adjoint(&self) -> Self {
        WeylElement {
            modes: self.modes,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial {
                            b: m.a.clone(),
                            a: m.b.clone(),
                        },
                        c.conj(),
                    )
                })
                .collect(),
        }
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.adjoint() == *self
    }
}

/// Product of two normal-ordered monomials, reordering `a^q b^r` per mode;
/// distinct modes commute so the sum factorizes.
fn monomial_product(left: &Monomial, right: &Monomial) -> Vec<(Monomial, BigInt)> {
    let modes = left.a.len();
    let mut acc: Vec<(Monomial, BigInt)> = vec![(Monomial::identity(modes), BigInt::one())];
    for j in 0..modes {
        let weights = reorder_weights(left.a[j], right.b[j]);
        let mut next = Vec::with_capacity(acc.len() * weights.len());
        for (m, w) in &acc {
            for (k, wk) in &weights {
                let mut m = m.clone();
                m.b[j] = left.b[j] + right.b[j] - k;
                m.a[j] = left.a[j] + right.a[j] - k;
                next.push((m, w * wk));
            }
        }
        acc = next;
    }
    acc
}

impl Add for &WeylElement {
    type Output = WeylElement;
    /// Panics if the mode counts differ; see [`WeylElement::try_add`].
    fn add(self, rhs: &WeylElement) -> WeylElement {
        self.try_add(rhs).expect("mode count mismatch")
    }
}

impl Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self.try_sub(rhs).expect("mode count mismatch")
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.multiply(rhs).expect("mode count mismatch")
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Add for WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: WeylElement) -> WeylElement {
        &self + &rhs
    }
}

impl Sub for WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: WeylElement) -> WeylElement {
        &self - &rhs
    }
}

impl Mul for WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: WeylElement) -> WeylElement {
        &self * &rhs
    }
}

/// Renders in the expression syntax, e.g. `2*b1*a1 - 1/2*a1^2 + (1+i)*I`.
impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative_real =
                c.is_real() && c.re() < &num_rational::BigRational::from_integer(0.into());
            let (sign, mag) = if negative_real {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if k == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{m}")?;
            } else if mag.is_real() {
                write!(f, "{mag}*{m}")?;
            } else {
                write!(f, "({mag})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement[{}]({self})", self.modes)
    }
}
