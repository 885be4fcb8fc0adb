//! Small exact-rational vector and matrix helpers.
//!
//! Everything here works on `Ratio<i64>`; the matrices involved never exceed
//! 3x3 so dense `Vec<Vec<_>>` storage is plenty.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

pub type RatMatrix = Vec<Vec<Rational>>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn int_matrix(rows: &[&[i64]]) -> RatMatrix {
    rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
}

pub fn scaled_matrix(scale: Rational, rows: &[&[i64]]) -> RatMatrix {
    rows.iter().map(|r| r.iter().map(|&v| scale * rat(v)).collect()).collect()
}

pub fn identity(n: usize) -> RatMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> RatMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + row[k] * b[k][j])).collect())
        .collect()
}

pub fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    a.iter().map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| acc + x * y)).collect()
}

pub fn transpose(a: &[Vec<Rational>]) -> RatMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// `xᵀ · m · y`.
pub fn bilinear(m: &[Vec<Rational>], x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(mat_vec(m, y)).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Gauss–Jordan inverse. Returns `None` for singular input.
pub fn inverse(a: &[Vec<Rational>]) -> Option<RatMatrix> {
    let n = a.len();
    let mut work: Vec<Vec<Rational>> =
        a.iter().zip(identity(n)).map(|(row, id)| row.iter().copied().chain(id).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        let p = work[col][col];
        for v in work[col].iter_mut() {
            *v /= p;
        }
        let pivot_row = work[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by cofactor expansion (fine for the ranks used here).
pub fn determinant(a: &[Vec<Rational>]) -> Rational {
    match a.len() {
        0 => Rational::one(),
        1 => a[0][0],
        n => (0..n).fold(Rational::zero(), |acc, j| {
            let minor: RatMatrix = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| *v).collect())
                .collect();
            let term = a[0][j] * determinant(&minor);
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        }),
    }
}

pub fn is_symmetric(a: &[Vec<Rational>]) -> bool {
    a.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, v)| *v == a[j][i]))
}

/// Sylvester's criterion: every leading principal minor is strictly positive.
pub fn is_positive_definite(a: &[Vec<Rational>]) -> bool {
    (1..=a.len()).all(|k| {
        let lead: RatMatrix = a[..k].iter().map(|row| row[..k].to_vec()).collect();
        determinant(&lead).is_positive()
    })
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::Malformed(format!("not a rational: {s:?}")))
}

/// Parses a comma separated list of rationals, e.g. `"0,1"` or `"1/2,-1"`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

pub fn fmt_coords(coords: &[Rational]) -> String {
    let parts: Vec<String> = coords.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Smallest integer `n` with `n * n >= x`, for `x >= 0`.
pub fn ceil_sqrt(x: Rational) -> i64 {
    let mut n = 0i64;
    while rat(n * n) < x {
        n += 1;
    }
    n
}
