//! Column Hermite normal form over the integers and integral solving of
//! `A y = b`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// `H = A U` with `U` unimodular and `H` in column Hermite normal form:
/// pivots move strictly right as rows go down, are positive, and the
/// entries left of each pivot are reduced modulo it.
#[derive(Debug, Clone)]
pub struct Hermite {
    pub h: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot.
    pub pivots: Vec<(usize, usize)>,
}

fn col_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, factor: &BigInt) {
    for row in m.iter_mut() {
        let add = &row[src] * factor;
        row[dst] -= add;
    }
}

fn col_swap(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn col_negate(m: &mut [Vec<BigInt>], c: usize) {
    for row in m.iter_mut() {
        row[c] = -&row[c];
    }
}

pub fn hermite(a: &[Vec<i64>], cols: usize) -> Hermite {
    let mut h: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut p = 0;
    for i in 0..h.len() {
        if p == cols {
            break;
        }
        // Euclid on the columns p.. of row i until one nonzero entry remains
        while let Some(best) = (p..cols)
            .filter(|&j| !h[i][j].is_zero())
            .min_by(|&x, &y| h[i][x].abs().cmp(&h[i][y].abs()).then(x.cmp(&y)))
        {
            col_swap(&mut h, p, best);
            col_swap(&mut u, p, best);
            let mut done = true;
            for j in p + 1..cols {
                if h[i][j].is_zero() {
                    continue;
                }
                let q = h[i][j].div_floor(&h[i][p]);
                col_axpy(&mut h, j, p, &q);
                col_axpy(&mut u, j, p, &q);
                if !h[i][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[i][p].is_zero() {
            continue;
        }
        if h[i][p].is_negative() {
            col_negate(&mut h, p);
            col_negate(&mut u, p);
        }
        for j in 0..p {
            let q = h[i][j].div_floor(&h[i][p]);
            if !q.is_zero() {
                col_axpy(&mut h, j, p, &q);
                col_axpy(&mut u, j, p, &q);
            }
        }
        pivots.push((i, p));
        p += 1;
    }
    Hermite { h, u, pivots }
}

/// An integer `y` with `A y = b`, or `None` when no integral solution exists.
/// Among all solutions the one with zero free Hermite coordinates is returned.
pub fn solve_integral(a: &[Vec<i64>], cols: usize, b: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(a.len(), b.len(), "one right-hand side per equation");
    let herm = hermite(a, cols);
    let mut z = vec![BigInt::zero(); cols];
    let mut next = 0;
    for (i, row) in herm.h.iter().enumerate() {
        // undetermined coordinates are still zero, so this sums the known part
        let partial: BigInt = row.iter().zip(&z).map(|(h, z)| h * z).sum();
        let rest = BigInt::from(b[i]) - partial;
        if next < herm.pivots.len() && herm.pivots[next].0 == i {
            let c = herm.pivots[next].1;
            let (q, r) = rest.div_rem(&row[c]);
            if !r.is_zero() {
                return None;
            }
            z[c] = q;
            next += 1;
        } else if !rest.is_zero() {
            return None;
        }
    }
    (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| &herm.u[i][j] * &z[j])
                .sum::<BigInt>()
                .to_i64()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mul(a: &[Vec<i64>], y: &[i64]) -> Vec<i64> {
        a.iter()
            .map(|r| r.iter().zip(y).map(|(x, y)| x * y).sum())
            .collect()
    }

    #[test]
    fn small_systems() {
        assert_eq!(solve_integral(&[vec![2, 4]], 2, &[6]), Some(vec![3, 0]));
        assert_eq!(solve_integral(&[vec![2, 4]], 2, &[5]), None);
        assert_eq!(solve_integral(&[vec![1, 0], vec![1, 0]], 2, &[1, 2]), None);
        assert_eq!(solve_integral(&[], 3, &[]), Some(vec![0, 0, 0]));
        let y = solve_integral(&[vec![3, 5]], 2, &[1]).unwrap();
        assert_eq!(mul(&[vec![3, 5]], &y), vec![1]);
    }

    #[test]
    fn hermite_shape() {
        let a = vec![vec![4, 6, 2], vec![1, 1, 1]];
        let h = hermite(&a, 3);
        for &(i, c) in &h.pivots {
            assert!(h.h[i][c] > BigInt::zero());
            for j in c + 1..3 {
                assert!(h.h[i][j].is_zero());
            }
            for j in 0..c {
                assert!(h.h[i][j] >= BigInt::zero() && h.h[i][j] < h.h[i][c]);
            }
        }
    }

    proptest! {
        #[test]
        fn finds_planted_solutions(
            rows in 0usize..4,
            cols in 1usize..4,
            entries in prop::collection::vec(-6i64..=6, 16),
            planted in prop::collection::vec(-5i64..=5, 4),
        ) {
            let a: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * 4..i * 4 + cols].to_vec()).collect();
            let b = mul(&a, &planted[..cols]);
            let y = solve_integral(&a, cols, &b);
            prop_assert!(y.is_some());
            prop_assert_eq!(mul(&a, &y.unwrap()), b);
        }

        #[test]
        fn infeasible_parity(cols in 1usize..4, entries in prop::collection::vec(-5i64..=5, 4)) {
            // even coefficients cannot produce an odd value
            let row: Vec<i64> = entries[..cols].iter().map(|x| 2 * x).collect();
            prop_assert_eq!(solve_integral(&[row], cols, &[1]), None);
        }
    }
}
