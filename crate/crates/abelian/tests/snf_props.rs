use abelian::{det_bareiss, smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |data| {
            IntMatrix::from_fn(r, c, |i, j| BigInt::from(data[i * c + j]))
        })
    })
}

proptest! {
    #[test]
    fn snf_decomposition_properties(m in matrix_strategy()) {
        let s = smith_normal_form(&m);
        // exact factorization
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        // unimodularity via an independent determinant
        prop_assert_eq!(det_bareiss(&s.u).abs(), BigInt::one());
        prop_assert_eq!(det_bareiss(&s.v).abs(), BigInt::one());
        // tracked inverses really invert
        prop_assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
        prop_assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(m.cols()));
        // diagonal with a positive divisibility chain
        for r in 0..s.d.rows() {
            for c in 0..s.d.cols() {
                if r != c {
                    prop_assert!(s.d.get(r, c).is_zero());
                }
            }
        }
        let div = s.divisors();
        for d in &div {
            prop_assert!(d.is_positive());
        }
        for w in div.windows(2) {
            prop_assert!(w[1].mod_floor(&w[0]).is_zero());
        }
    }

    #[test]
    fn kernel_is_annihilated(m in matrix_strategy()) {
        let k = abelian::kernel_basis(&m);
        prop_assert!((&m * &k).is_zero());
        // kernel basis columns are linearly independent over Q:
        // rank of k equals its column count
        let s = smith_normal_form(&k);
        prop_assert_eq!(s.rank, k.cols());
    }
}
