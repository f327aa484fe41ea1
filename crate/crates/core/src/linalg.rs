//! Fraction-free elimination over ℚ[α] and nullspaces over ℚ(α).

use crate::algebra::{AlphaPoly, RatFunc};

/// Row-echelon form by Bareiss elimination. Every division is exact, so
/// entries stay in ℚ[α]. Returns the pivot columns; rows past
/// `pivots.len()` are zero.
pub fn bareiss(m: &mut [Vec<AlphaPoly>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = AlphaPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // lowest-degree pivot keeps intermediate entries small
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].degree()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = std::mem::replace(&mut row[c], AlphaPoly::zero());
            for j in c + 1..cols {
                let t = &(&pivot_row[c] * &row[j]) - &(&lead * &pivot_row[j]);
                row[j] = t.exact_div(&prev).expect("Bareiss quotient is exact");
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of the right nullspace of a polynomial matrix with `cols`
/// columns, one vector per free column (that coordinate set to 1).
pub fn nullspace_poly(mut m: Vec<Vec<AlphaPoly>>, cols: usize) -> Vec<Vec<RatFunc>> {
    let pivots = bareiss(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![RatFunc::zero(); cols];
            x[f] = RatFunc::one();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = RatFunc::zero();
                for j in pc + 1..cols {
                    if !x[j].is_zero() && !m[r][j].is_zero() {
                        acc += &x[j].mul_poly(&m[r][j]);
                    }
                }
                let pivot = RatFunc::from(m[r][pc].clone());
                x[pc] = -acc.checked_div(&pivot).expect("pivot is nonzero");
            }
            for c in free.iter().filter(|&&c| c != f) {
                debug_assert!(x[*c].is_zero());
            }
            x
        })
        .collect()
}

/// Nullspace of a matrix over ℚ(α): each row is multiplied by the lcm of its
/// denominators and the result is eliminated fraction-free.
pub fn nullspace(m: &[Vec<RatFunc>], cols: usize) -> Vec<Vec<RatFunc>> {
    let cleared = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(AlphaPoly::one(), |acc, e| lcm(&acc, e.den()));
            row.iter()
                .map(|e| e.mul_poly(&l).into_polynomial().expect("denominators cleared"))
                .collect()
        })
        .collect();
    nullspace_poly(cleared, cols)
}

fn lcm(a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
    if b.is_one() {
        return a.clone();
    }
    let g = AlphaPoly::gcd(a, b);
    (a * b).exact_div(&g).expect("gcd divides the product")
}
