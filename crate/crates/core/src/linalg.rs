//! Exact matrix rank: fraction-free (Bareiss) elimination over the integers,
//! and Gaussian elimination over a prime field.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank over `Q` of an integer matrix given as rows.
///
/// Runs Bareiss elimination in `i128`; on overflow the computation restarts
/// with arbitrary-precision integers.
pub(crate) fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(wide) {
        Some(r) => r,
        None => {
            let big = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_big(big)
        }
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).filter(|&r| m[r][col] != 0).min_by_key(|&r| m[r][col].unsigned_abs()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = prow[col];
        for row in tail.iter_mut() {
            let f = row[col];
            for c in col + 1..ncols {
                let num = p.checked_mul(row[c])?.checked_sub(f.checked_mul(prow[c])?)?;
                row[c] = num / prev;
            }
            row[col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).filter(|&r| !m[r][col].is_zero()).min_by_key(|&r| m[r][col].abs()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = prow[col].clone();
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for c in col + 1..ncols {
                row[c] = (&p * &row[c] - &f * &prow[c]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Rank over `GF(p)`.
pub(crate) fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col], p - 2, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let f = mul_mod(row[col], inv, p);
            for c in col..ncols {
                row[c] = (row[c] + p - mul_mod(f, prow[c], p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    /// Independent oracle: textbook Gaussian elimination over exact rationals.
    fn rank_by_rationals(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(rank, p);
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let f = &row[col] / &pivot[col];
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_rational(&[]), 0);
        assert_eq!(rank_rational(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_rational(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_rational(&[vec![1, 2], vec![3, 4]]), 2);
        // 2 * I has full rank over Q but rank 0 over GF(2)
        let two = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank_rational(&two), 2);
        assert_eq!(rank_mod_p(&two, 2), 0);
        assert_eq!(rank_mod_p(&two, 3), 2);
    }

    #[test]
    fn boundary_of_square_has_rank_three() {
        // 4-cycle on vertices a,b,c,d with edges ab, bc, cd, ad (columns)
        let d1 = vec![vec![-1, 0, 0, -1], vec![1, -1, 0, 0], vec![0, 1, -1, 0], vec![0, 0, 1, 1]];
        assert_eq!(rank_rational(&d1), 3);
        assert_eq!(rank_mod_p(&d1, 2), 3);
    }

    #[test]
    fn big_integer_fallback() {
        // Entries large enough that Bareiss minors overflow i128.
        let big = i64::MAX / 3;
        let rows = vec![
            vec![big, big - 1, 7, 1],
            vec![big - 5, big, 3, big],
            vec![1, big, big - 2, 9],
            vec![big, 2, big, big - 11],
        ];
        let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        assert_eq!(bareiss_i128(wide), None);
        assert_eq!(rank_rational(&rows), rank_by_rationals(&rows));
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_oracle(m in arb_matrix()) {
            prop_assert_eq!(rank_rational(&m), rank_by_rationals(&m));
        }

        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix()) {
            let t: Vec<Vec<i64>> = (0..m[0].len()).map(|c| m.iter().map(|r| r[c]).collect()).collect();
            prop_assert_eq!(rank_rational(&m), rank_rational(&t));
            prop_assert_eq!(rank_mod_p(&m, 32003), rank_mod_p(&t, 32003));
            prop_assert!(rank_mod_p(&m, 2) <= rank_rational(&m));
        }
    }
}
