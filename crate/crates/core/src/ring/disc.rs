use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;

/// Exact integer discriminant of a monic polynomial of degree >= 1,
/// with the sign convention `(-1)^(d(d-1)/2) * Res(f, f')`.
///
/// The resultant is the determinant of the Sylvester matrix of `f` and
/// `f'`, evaluated by fraction-free elimination so everything stays in
/// exact integers.
pub fn discriminant(f: &IntPoly) -> BigInt {
    assert!(f.is_monic(), "discriminant requires a monic polynomial");
    let d = f.degree().expect("nonzero polynomial");
    assert!(d >= 1, "discriminant requires degree >= 1");
    let res = resultant(f, &f.derivative());
    if (d * (d - 1) / 2) % 2 == 0 {
        res
    } else {
        -res
    }
}

/// Resultant of two nonzero polynomials as a Sylvester determinant.
fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let m = f.degree().expect("f nonzero");
    let k = g.degree().expect("g nonzero");
    if m == 0 && k == 0 {
        return BigInt::one();
    }
    let mat = sylvester(f, g);
    bareiss_determinant(mat)
}

/// Sylvester matrix of `f` (degree m) and `g` (degree k): `k` rows of
/// shifted `f` coefficients over `m` rows of shifted `g`, descending powers.
fn sylvester(f: &IntPoly, g: &IntPoly) -> Vec<Vec<BigInt>> {
    let m = f.degree().unwrap();
    let k = g.degree().unwrap();
    let size = m + k;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    let fc = f.coeffs();
    let gc = g.coeffs();
    for row in 0..k {
        for (j, c) in fc.iter().rev().enumerate() {
            mat[row][row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in gc.iter().rev().enumerate() {
            mat[k + row][row + j] = c.clone();
        }
    }
    mat
}

/// Fraction-free (Bareiss) determinant: every interior division is exact
/// over the integers.
fn bareiss_determinant(mut mat: Vec<Vec<BigInt>>) -> BigInt {
    let size = mat.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                return BigInt::zero();
            };
            mat.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &mat[k][k] * &mat[i][j] - &mat[i][k] * &mat[k][j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                mat[i][j] = q;
            }
            mat[i][k] = BigInt::zero();
        }
        prev = mat[k][k].clone();
    }
    sign * std::mem::take(&mut mat[size - 1][size - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_example() {
        let f = IntPoly::from_coeffs(&[1, 12, 0, 0, 1]); // x^4 + 12x + 1
        assert_eq!(discriminant(&f), BigInt::from(-559616_i64));
    }

    #[test]
    fn linear_is_one() {
        for a in [-7i64, 0, 3, 100] {
            let f = IntPoly::from_coeffs(&[-a, 1]);
            assert_eq!(discriminant(&f), BigInt::one());
        }
    }

    #[test]
    fn quadratic_matches_p2_minus_4q() {
        // x^2 - Px + Q has discriminant P^2 - 4Q
        let fib = IntPoly::from_coeffs(&[-1, -1, 1]);
        assert_eq!(discriminant(&fib), BigInt::from(5));
        for (p, q) in [(0i64, -7i64), (3, 2), (-5, 13), (1185, 56437)] {
            let f = IntPoly::from_coeffs(&[q, -p, 1]);
            assert_eq!(discriminant(&f), BigInt::from(p * p - 4 * q));
        }
    }

    #[test]
    fn known_cubics() {
        // x^3 - x - 1 (third-order recurrence with (r,s) = (0,-1))
        assert_eq!(
            discriminant(&IntPoly::from_coeffs(&[-1, -1, 0, 1])),
            BigInt::from(-23)
        );
        // x^3 - x^2 - 1
        assert_eq!(
            discriminant(&IntPoly::from_coeffs(&[-1, 0, -1, 1])),
            BigInt::from(-31)
        );
    }

    /// Naive cofactor-expansion determinant, an independent slow path.
    fn naive_det(mat: &[Vec<BigInt>]) -> BigInt {
        let n = mat.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return mat[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for col in 0..n {
            if mat[0][col].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = mat[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter_map(|(j, v)| (j != col).then(|| v.clone()))
                        .collect()
                })
                .collect();
            let term = &mat[0][col] * naive_det(&minor);
            if col % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn bareiss_agrees_with_naive_sylvester_expansion() {
        // second, independent code path for small degrees
        let polys = [
            IntPoly::from_coeffs(&[1, 12, 0, 0, 1]),
            IntPoly::from_coeffs(&[-1, -1, 1]),
            IntPoly::from_coeffs(&[5, 5, 1]),
            IntPoly::from_coeffs(&[-1, -1, 0, 1]),
            IntPoly::from_coeffs(&[7, -3, 2, 1]),
            IntPoly::from_coeffs(&[-6, 0, 2, 0, 1]),
        ];
        for f in &polys {
            let mat = sylvester(f, &f.derivative());
            assert_eq!(bareiss_determinant(mat.clone()), naive_det(&mat), "f = {f}");
        }
    }

    #[test]
    fn random_quadratics_and_cubics_cross_checked() {
        // deterministic LCG so the 100 samples are reproducible
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 200) - 100
        };
        for _ in 0..100 {
            let p = next();
            let q = next();
            let f = IntPoly::from_coeffs(&[q, -p, 1]);
            assert_eq!(discriminant(&f), BigInt::from(p * p - 4 * q));

            let r = next();
            let s = next();
            let g = IntPoly::from_coeffs(&[-1, s, -r, 1]);
            let mat = sylvester(&g, &g.derivative());
            let sign = BigInt::from(-1); // (-1)^(3*2/2)
            assert_eq!(discriminant(&g), sign * naive_det(&mat));
        }
    }
}
