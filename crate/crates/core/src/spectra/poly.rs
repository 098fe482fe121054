use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SpectrumError;
use crate::matrix::SymMatrix;

/// A polynomial in `x` with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    /// Trailing zero coefficients are dropped; the zero polynomial has no coefficients.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `x - root`.
    pub fn linear(root: BigRational) -> Self {
        Self::new(vec![-root, BigRational::one()])
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Multiplicity of `x` as a factor.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn mul(&self, other: &RationalPoly) -> RationalPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return RationalPoly::new(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }

    pub fn pow(&self, k: usize) -> RationalPoly {
        (0..k).fold(RationalPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for RationalPoly {
    /// Highest degree first: `x^4 - 25/4*x^2 - 4*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

/// `det(xI - M)` by the Faddeev-LeVerrier trace recursion.
///
/// The recursion runs on the integer matrix `B = 4M`, where every division
/// is exact, and rescales: the coefficient of `x^k` is `b_k / 4^(n-k)`.
pub fn char_poly(m: &SymMatrix) -> RationalPoly {
    let n = m.dim();
    let b: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|q| BigInt::from(q.quarters()))
                .collect()
        })
        .collect();

    // coeffs[k] is the coefficient of x^k in det(xI - B).
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = B M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if b[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !mk[l][j].is_zero() {
                        next[i][j] += &b[i][l] * &mk[l][j];
                    }
                }
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &b[i][l] * &mk[l][i];
            }
        }
        let k_big = BigInt::from(k);
        debug_assert!((&trace % &k_big).is_zero());
        coeffs[n - k] = -(trace / k_big);
    }

    let four = BigInt::from(4);
    RationalPoly::new(
        coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| BigRational::new(c, num_traits::pow(four.clone(), n - k)))
            .collect(),
    )
}

fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

/// `x^(n-1) (x + 2) (x^3 - 2x^2 - ((n+8)/4) x + n/2)`.
pub fn star1_charpoly(n: usize) -> Result<RationalPoly, SpectrumError> {
    if n == 0 {
        return Err(SpectrumError::InvalidStarOrder { n });
    }
    let ni = n as i64;
    let cubic = RationalPoly::new(vec![rat(ni, 2), -rat(ni + 8, 4), rat(-2, 1), rat(1, 1)]);
    let x = RationalPoly::from_i64(&[0, 1]);
    Ok(x.pow(n - 1)
        .mul(&RationalPoly::from_i64(&[2, 1]))
        .mul(&cubic))
}

/// `(x + 2) (x^2 - 4)^(n-1) (x^2 - 2x - 2n)`.
pub fn star2_charpoly(n: usize) -> Result<RationalPoly, SpectrumError> {
    if n == 0 {
        return Err(SpectrumError::InvalidStarOrder { n });
    }
    let ni = n as i64;
    Ok(RationalPoly::from_i64(&[2, 1])
        .mul(&RationalPoly::from_i64(&[-4, 0, 1]).pow(n - 1))
        .mul(&RationalPoly::from_i64(&[-2 * ni, -2, 1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::adjacency;
    use crate::semigraph::{star_type1, star_type2};

    #[test]
    fn two_by_two() {
        let m = SymMatrix::from_quarters(&[vec![0, 8], vec![8, 0]]).unwrap();
        assert_eq!(char_poly(&m), RationalPoly::from_i64(&[-4, 0, 1]));
    }

    #[test]
    fn single_three_vertex_edge() {
        let p = char_poly(&adjacency(&star_type1(0)));
        assert_eq!(p, RationalPoly::from_i64(&[-4, -6, 0, 1]));
        assert_eq!(p.to_string(), "x^3 - 6*x - 4");
    }

    #[test]
    fn star1_order_one() {
        let expected = RationalPoly::new(vec![
            rat(1, 1),
            rat(-4, 1),
            rat(-25, 4),
            rat(0, 1),
            rat(1, 1),
        ]);
        assert_eq!(star1_charpoly(1).unwrap(), expected);
        assert_eq!(char_poly(&adjacency(&star_type1(1))), expected);
        assert_eq!(expected.to_string(), "x^4 - 25/4*x^2 - 4*x + 1");
    }

    #[test]
    fn star_closed_forms_small() {
        for n in 1..=4 {
            assert_eq!(
                char_poly(&adjacency(&star_type1(n))),
                star1_charpoly(n).unwrap()
            );
            assert_eq!(
                char_poly(&adjacency(&star_type2(n))),
                star2_charpoly(n).unwrap()
            );
        }
        assert_eq!(
            star2_charpoly(1).unwrap(),
            RationalPoly::from_i64(&[-4, -6, 0, 1])
        );
    }

    #[test]
    fn zero_factor_multiplicity() {
        let p = star1_charpoly(8).unwrap();
        assert_eq!(p.zero_root_multiplicity(), 7);
        assert_eq!(p.degree(), Some(11));
        assert!(p.is_monic());
    }

    #[test]
    fn order_zero_rejected() {
        assert_eq!(
            star1_charpoly(0),
            Err(SpectrumError::InvalidStarOrder { n: 0 })
        );
        assert_eq!(
            star2_charpoly(0),
            Err(SpectrumError::InvalidStarOrder { n: 0 })
        );
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(char_poly(&SymMatrix::zeros(0)), RationalPoly::one());
    }
}
