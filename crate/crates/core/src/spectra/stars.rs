use std::f64::consts::PI;

use super::{Spectrum, SpectrumError, StarFamily};

/// The three real roots of `x^3 + a x^2 + b x + c`, descending.
///
/// Trigonometric solution of the depressed cubic followed by Newton steps.
/// Fails when the discriminant is not positive.
pub fn cubic_real_roots(a: f64, b: f64, c: f64) -> Result<[f64; 3], SpectrumError> {
    let discriminant =
        18.0 * a * b * c - 4.0 * a.powi(3) * c + a * a * b * b - 4.0 * b.powi(3) - 27.0 * c * c;
    if discriminant <= 0.0 {
        return Err(SpectrumError::ComplexCubicRoots { discriminant });
    }
    // x = t - a/3 gives t^3 + p t + q with p < 0.
    let p = b - a * a / 3.0;
    let q = 2.0 * a.powi(3) / 27.0 - a * b / 3.0 + c;
    let m = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    let f = |x: f64| ((x + a) * x + b) * x + c;
    let df = |x: f64| (3.0 * x + 2.0 * a) * x + b;
    let mut roots = [0.0; 3];
    for (k, root) in roots.iter_mut().enumerate() {
        let mut x = m * (phi - 2.0 * PI * k as f64 / 3.0).cos() - a / 3.0;
        for _ in 0..50 {
            let d = df(x);
            if d == 0.0 {
                break;
            }
            let step = f(x) / d;
            x -= step;
            if step.abs() <= 1e-15 * x.abs().max(1.0) {
                break;
            }
        }
        *root = x;
    }
    roots.sort_by(|x, y| y.total_cmp(x));
    Ok(roots)
}

/// Closed-form spectrum of a star family member.
///
/// Type I: `0` with multiplicity `n - 1`, `-2`, and the three roots of
/// `x^3 - 2x^2 - ((n+8)/4) x + n/2`. Type II: `-2` with multiplicity `n`,
/// `2` with multiplicity `n - 1`, and `1 ± sqrt(2n + 1)`.
pub fn star_spectra(family: StarFamily, n: usize) -> Result<Spectrum, SpectrumError> {
    if n == 0 {
        return Err(SpectrumError::InvalidStarOrder { n });
    }
    let nf = n as f64;
    let mut values = Vec::new();
    match family {
        StarFamily::TypeI => {
            values.extend(std::iter::repeat_n(0.0, n - 1));
            values.push(-2.0);
            values.extend(cubic_real_roots(-2.0, -(nf + 8.0) / 4.0, nf / 2.0)?);
        }
        StarFamily::TypeII => {
            let r = (2.0 * nf + 1.0).sqrt();
            values.extend(std::iter::repeat_n(-2.0, n));
            values.extend(std::iter::repeat_n(2.0, n - 1));
            values.push(1.0 + r);
            values.push(1.0 - r);
        }
    }
    Ok(Spectrum::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_with_known_roots() {
        // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
        let r = cubic_real_roots(0.0, -7.0, 6.0).unwrap();
        for (got, want) in r.iter().zip([2.0, 1.0, -3.0]) {
            assert!((got - want).abs() < 1e-14, "{r:?}");
        }
    }

    #[test]
    fn cubic_with_complex_roots() {
        assert!(matches!(
            cubic_real_roots(0.0, 1.0, 0.0),
            Err(SpectrumError::ComplexCubicRoots { .. })
        ));
    }

    #[test]
    fn type2_order_four_merges() {
        let s = star_spectra(StarFamily::TypeII, 4).unwrap();
        assert_eq!(s.len(), 9);
        let c = s.clusters();
        assert_eq!(c.len(), 3);
        assert!((c[0].0 - 4.0).abs() < 1e-12 && c[0].1 == 1);
        assert!((c[1].0 - 2.0).abs() < 1e-12 && c[1].1 == 3);
        assert!((c[2].0 + 2.0).abs() < 1e-12 && c[2].1 == 5);
    }

    #[test]
    fn type1_order_one() {
        let s = star_spectra(StarFamily::TypeI, 1).unwrap();
        assert_eq!(s.len(), 4);
        let cubic = |x: f64| x.powi(3) - 2.0 * x * x - 2.25 * x + 0.5;
        let roots: Vec<f64> = s
            .values()
            .iter()
            .copied()
            .filter(|&v| (v + 2.0).abs() > 1e-9)
            .collect();
        assert_eq!(roots.len(), 3);
        for r in roots {
            assert!(cubic(r).abs() < 1e-12);
        }
    }

    #[test]
    fn order_zero_rejected() {
        assert!(star_spectra(StarFamily::TypeI, 0).is_err());
    }
}
