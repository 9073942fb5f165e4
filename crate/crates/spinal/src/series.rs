//! Bivariate power-series expansion of the marked-tree generating
//! function and its differential-equation check.
//!
//! The exponential generating function S(x, z) of labeled marked trees
//! satisfies dS/dz = x / (1 - x - S) with S(x, 0) = 0, which solves to
//! S = 1 - x - sqrt((1-x)^2 - 2xz). The expansion is taken term by term
//! over exact rationals, so its coefficients can be compared against the
//! closed form without tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::counting::factorial;
use crate::error::{Error, Result};

/// A truncated bivariate power series: coefficient of x^n z^k at `[n][k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    /// Largest x-exponent stored.
    pub x_degree: usize,
    /// Largest z-exponent stored.
    pub z_degree: usize,
    /// Coefficients, indexed as `coeffs[n][k]`.
    pub coeffs: Vec<Vec<BigRational>>,
}

impl SeriesTable {
    fn zeros(x_degree: usize, z_degree: usize) -> Self {
        SeriesTable {
            x_degree,
            z_degree,
            coeffs: vec![vec![BigRational::zero(); z_degree + 1]; x_degree + 1],
        }
    }

    /// The coefficient of x^n z^k.
    pub fn coeff(&self, n: usize, k: usize) -> &BigRational {
        &self.coeffs[n][k]
    }

    fn mul(&self, other: &SeriesTable) -> SeriesTable {
        let mut out = SeriesTable::zeros(self.x_degree, self.z_degree);
        for n in 0..=self.x_degree {
            for k in 0..=self.z_degree {
                for i in 0..=n {
                    for j in 0..=k {
                        if !self.coeffs[i][j].is_zero() {
                            let term = &self.coeffs[i][j] * &other.coeffs[n - i][k - j];
                            out.coeffs[n][k] += term;
                        }
                    }
                }
            }
        }
        out
    }

    fn sub(&self, other: &SeriesTable) -> SeriesTable {
        let mut out = self.clone();
        for n in 0..=self.x_degree {
            for k in 0..=self.z_degree {
                out.coeffs[n][k] -= &other.coeffs[n][k];
            }
        }
        out
    }

    /// Derivative with respect to z; the top z-row of the result is
    /// unreliable and must not be inspected.
    fn d_dz(&self) -> SeriesTable {
        let mut out = SeriesTable::zeros(self.x_degree, self.z_degree);
        for n in 0..=self.x_degree {
            for k in 1..=self.z_degree {
                out.coeffs[n][k - 1] =
                    &self.coeffs[n][k] * BigRational::from(BigInt::from(k as u64));
            }
        }
        out
    }

    /// Coefficient-wise square root with constant term one.
    fn sqrt(&self) -> SeriesTable {
        assert!(self.coeffs[0][0].is_one(), "square root needs constant term one");
        let mut y = SeriesTable::zeros(self.x_degree, self.z_degree);
        y.coeffs[0][0] = BigRational::one();
        let two = BigRational::from(BigInt::from(2));
        for n in 0..=self.x_degree {
            for k in 0..=self.z_degree {
                if n == 0 && k == 0 {
                    continue;
                }
                let mut cross = BigRational::zero();
                for i in 0..=n {
                    for j in 0..=k {
                        if (i, j) == (0, 0) || (i, j) == (n, k) {
                            continue;
                        }
                        if !y.coeffs[i][j].is_zero() {
                            cross += &y.coeffs[i][j] * &y.coeffs[n - i][k - j];
                        }
                    }
                }
                y.coeffs[n][k] = (&self.coeffs[n][k] - cross) / &two;
            }
        }
        y
    }
}

fn rational(value: i64) -> BigRational {
    BigRational::from(BigInt::from(value))
}

fn one_minus_x(x_degree: usize, z_degree: usize) -> SeriesTable {
    let mut s = SeriesTable::zeros(x_degree, z_degree);
    s.coeffs[0][0] = rational(1);
    if x_degree >= 1 {
        s.coeffs[1][0] = rational(-1);
    }
    s
}

/// Expands S(x, z) = 1 - x - sqrt((1-x)^2 - 2xz) to the given degrees.
///
/// The coefficient at `[n][k]` equals the labeled marked-tree count
/// s(n, k) divided by n! k!.
pub fn series_expand_s(x_degree: usize, z_degree: usize) -> Result<SeriesTable> {
    if x_degree > 200 || z_degree > 200 {
        return Err(Error::ParameterRange(format!(
            "series degrees ({x_degree}, {z_degree}) exceed the supported 200"
        )));
    }
    let mut radicand = SeriesTable::zeros(x_degree, z_degree);
    radicand.coeffs[0][0] = rational(1);
    if x_degree >= 1 {
        radicand.coeffs[1][0] = rational(-2);
        if z_degree >= 1 {
            radicand.coeffs[1][1] = rational(-2);
        }
    }
    if x_degree >= 2 {
        radicand.coeffs[2][0] = rational(1);
    }
    let root = radicand.sqrt();
    let mut s = one_minus_x(x_degree, z_degree).sub(&root);
    s.coeffs[0][0] = rational(0);
    Ok(s)
}

/// Checks that the expansion satisfies dS/dz (1 - x - S) = x in the
/// region where truncation cannot interfere (all n, and k below the top
/// stored z-degree).
///
/// Returns the first violating (n, k) or `None` when the residual
/// vanishes.
pub fn check_ode_residual(table: &SeriesTable) -> Option<(usize, usize)> {
    let ds = table.d_dz();
    let shifted = one_minus_x(table.x_degree, table.z_degree).sub(table);
    let product = ds.mul(&shifted);
    for n in 0..=table.x_degree {
        for k in 0..table.z_degree {
            let expected = if n == 1 && k == 0 { rational(1) } else { rational(0) };
            if product.coeffs[n][k] != expected {
                return Some((n, k));
            }
        }
    }
    None
}

/// The exact rational s(n, k) / (n! k!) from the closed form, for
/// comparison with [`series_expand_s`].
pub fn expected_series_coeff(n: u32, k: u32) -> BigRational {
    let s = crate::counting::labeled_marked_tree_count(n, k).value;
    let denominator = factorial(n) * factorial(k);
    BigRational::new(BigInt::from(s), BigInt::from(denominator))
}
