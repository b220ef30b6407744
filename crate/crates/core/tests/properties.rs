use lienil::catalog;
use lienil::linalg::{kernel_basis, rref, span};
use lienil::weyl::Monomial;
use lienil::{fingerprint, Matrix, Scalar, WeylElement};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i64..=3, 1i64..=3).prop_map(|(re, im, den)| {
        Scalar::new(
            BigRational::new(re.into(), den.into()),
            BigRational::from_integer(im.into()),
        )
    })
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(scalar(), c), r)
            .prop_map(move |rows| Matrix::from_rows(rows, c).unwrap())
    })
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r)
    })
}

/// Plain fraction elimination over ℚ, independent of the library.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn element(modes: usize) -> impl Strategy<Value = WeylElement> {
    let term = (
        proptest::collection::vec(0u32..=2, modes),
        proptest::collection::vec(0u32..=2, modes),
        scalar(),
    );
    proptest::collection::vec(term, 0..=3).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(WeylElement::zero(modes), |acc, (b, a, c)| {
                &acc + &WeylElement::monomial(Monomial { b, a }, c)
            })
    })
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), n)
        .prop_map(move |rows| {
            let rows: Vec<Vec<Scalar>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(Scalar::from_int).collect())
                .collect();
            Matrix::from_rows(rows, n).unwrap()
        })
        .prop_filter("singular", move |p| p.rank() == n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix(4, 5)) {
        let once = rref(&m);
        let twice = rref(&once.reduced);
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.pivot_cols, twice.pivot_cols);
    }

    #[test]
    fn rank_nullity(m in matrix(4, 6)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.rows(), m.cols());
        for r in 0..k.rows() {
            prop_assert!(m.mul_vec(k.row(r)).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rank_agrees_with_rational_elimination(rows in int_matrix(5)) {
        let cols = rows[0].len();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Matrix::from_ints(&refs);
        prop_assert_eq!(m.cols(), cols);
        prop_assert_eq!(m.rank(), rational_rank(&rows));
    }

    #[test]
    fn span_ignores_order(m in matrix(4, 4)) {
        let mut rows = m.row_vectors();
        let a = span(&rows, m.cols()).unwrap();
        rows.reverse();
        let b = span(&rows, m.cols()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn weyl_associative(x in element(2), y in element(2), z in element(2)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn commutator_jacobi(x in element(2), y in element(2), z in element(2)) {
        let c = |u: &WeylElement, v: &WeylElement| u.commutator(v).unwrap();
        let total = &(&c(&x, &c(&y, &z)) + &c(&y, &c(&z, &x))) + &c(&z, &c(&x, &y));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn adjoint_involution_and_antihomomorphism(x in element(2), y in element(2)) {
        prop_assert_eq!(x.adjoint().adjoint(), x.clone());
        prop_assert_eq!((&x * &y).adjoint(), &y.adjoint() * &x.adjoint());
    }

    #[test]
    fn degree_bounds(x in element(2), y in element(2)) {
        if let (Some(dx), Some(dy)) = (x.degree(), y.degree()) {
            if let Some(d) = (&x * &y).degree() {
                prop_assert!(d <= dx + dy);
            }
            if let Some(d) = x.commutator(&y).unwrap().degree() {
                prop_assert!(d + 2 <= dx + dy);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn fingerprint_survives_change_of_basis(k in 0usize..17, p in invertible(5)) {
        let entries: Vec<_> = catalog::list().iter().filter(|e| e.algebra.dim() == 5).collect();
        let e = entries[k % entries.len()];
        let scrambled = e.algebra.change_of_basis(&p).unwrap();
        prop_assert_eq!(fingerprint(&scrambled), fingerprint(&e.algebra));
    }
}

#[test]
fn identity_commutes_with_everything() {
    let one = WeylElement::identity(2);
    let b = WeylElement::raise(2, 1);
    assert!(one.commutator(&b).unwrap().is_zero());
    assert!(Scalar::one().is_one());
}
