//! Exact dense oracles: determinant, inverse, rank and characteristic
//! polynomial. Every closed form in the crate is checked against these.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::poly::CharPoly;
use crate::rational::Rational;

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators so the
/// elimination runs over integers; the product of those scales is divided
/// back out at the end. Pivot is the first nonzero entry in the column.
pub fn det_exact(m: &RationalMatrix) -> Result<Rational> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(Rational::ONE);
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
        a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        scale *= lcm;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&p| !a[p][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Ok(Rational::ZERO),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                // exact by Sylvester's identity
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    Ok(Rational::from_bigints(det, scale))
}

/// Rank by row reduction over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<Rational>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&p| !a[p][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip().unwrap();
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
        r += 1;
    }
    r
}

/// Inverse by Gauss–Jordan elimination on `[m | I]`.
pub fn inverse_exact(m: &RationalMatrix) -> Result<RationalMatrix> {
    let n = m.require_square()?;
    let w = 2 * n;
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.resize(w, Rational::ZERO);
            row[n + i] = Rational::ONE;
            row
        })
        .collect();

    for c in 0..n {
        let Some(p) = (c..n).find(|&p| !a[p][c].is_zero()) else {
            return Err(Error::Singular {
                rank: rank(m),
                order: n,
            });
        };
        a.swap(c, p);
        let inv = a[c][c].recip().unwrap();
        if !inv.is_one() {
            for x in a[c].iter_mut().skip(c) {
                *x *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut a[c]);
        for (i, row) in a.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..w {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
        a[c] = pivot_row;
    }

    let data = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
    RationalMatrix::from_vec(n, n, data)
}

/// `det(xI - m)` by the Faddeev–LeVerrier recursion
/// `M_1 = I`, `c_{n-k} = -tr(A M_k) / k`, `M_{k+1} = A M_k + c_{n-k} I`.
///
/// Runs over integers: with `s` the lcm of all denominators, `B = sA` is
/// integral, every `M_k` of `B` is integral, the divisions by `k` are exact,
/// and `p_A(x) = s^{-n} p_B(sx)`.
pub fn char_poly_exact(m: &RationalMatrix) -> Result<CharPoly> {
    let n = m.require_square()?;
    let s = m.entries().iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
    let b: Vec<BigInt> = m.entries().iter().map(|x| x.numer() * (&s / x.denom())).collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk: Vec<BigInt> = (0..n * n)
        .map(|i| {
            if i % (n + 1) == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    for k in 1..=n {
        let mut amk = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let bil = &b[i * n + l];
                if bil.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let mlj = &mk[l * n + j];
                    if !mlj.is_zero() {
                        amk[i * n + j] += bil * mlj;
                    }
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| &amk[i * (n + 1)]).sum();
        let c = -(trace / BigInt::from(k));
        if k < n {
            for i in 0..n {
                amk[i * (n + 1)] += &c;
            }
            mk = amk;
        }
        coeffs[n - k] = c;
    }

    let mut scale = BigInt::one();
    let mut out = vec![Rational::ZERO; n + 1];
    for j in (0..=n).rev() {
        out[j] = Rational::from_bigints(coeffs[j].clone(), scale.clone());
        scale *= &s;
    }
    Ok(CharPoly::new(out))
}
