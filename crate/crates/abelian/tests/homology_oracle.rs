//! Randomized cross-check of chain-complex homology against a
//! rank-nullity oracle: free rank from rational row reduction, torsion
//! from the elementary divisors of the incoming boundary.

use std::collections::BTreeMap;

use abelian::{smith_normal_form, ChainComplexZ, IntMatrix, NormalForm};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rank over Q by fraction-free Gaussian elimination; no SNF involved.
fn rank_q(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !a.get(r, col).is_zero()) else { continue };
        a.swap_rows(row, p);
        for r in row + 1..rows {
            if a.get(r, col).is_zero() {
                continue;
            }
            // r <- pivot * r - entry * pivot_row, kills the column entry
            let pr = a.get(row, col).clone();
            let er = a.get(r, col).clone();
            for c in 0..cols {
                let v = &pr * a.get(r, c) - &er * a.get(row, c);
                a.set(r, c, v);
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

#[test]
fn homology_matches_rank_nullity_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..60 {
        let m = rng.gen_range(1..=8);
        let n = rng.gen_range(1..=8);
        let d1 = random_matrix(&mut rng, m, n, 5);
        // boundaries must be cycles: span d2 inside ker d1
        let k = abelian::kernel_basis(&d1);
        let r = rng.gen_range(0..=4usize);
        let coeff = random_matrix(&mut rng, k.cols(), r, 2);
        let d2 = &k * &coeff;

        let complex = ChainComplexZ::new(
            BTreeMap::from([(0, m), (1, n), (2, r)]),
            BTreeMap::from([(1, d1.clone()), (2, d2.clone())]),
        )
        .unwrap();
        let h1 = complex.homology(1);

        let free_rank = (n - rank_q(&d1)) - rank_q(&d2);
        let mut divisors: Vec<BigInt> = smith_normal_form(&d2)
            .divisors()
            .into_iter()
            .filter(|d| d.abs() > BigInt::one())
            .collect();
        divisors.sort();
        let expected = NormalForm { rank: free_rank, divisors };

        assert_eq!(
            h1.normal_form(),
            &expected,
            "homology mismatch for d1={:?} d2={:?}",
            d1,
            d2
        );
    }
}
