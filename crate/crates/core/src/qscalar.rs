use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::Rational64;

/// An exact rational number counted in quarter units: the value is `q / 4`.
///
/// Every adjacency entry, skeleton entry, excess entry and vertex degree of a
/// semigraph is a multiple of one quarter, so addition, subtraction and
/// comparison stay exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QScalar(i64);

impl QScalar {
    pub const ZERO: QScalar = QScalar(0);
    pub const QUARTER: QScalar = QScalar(1);
    pub const HALF: QScalar = QScalar(2);
    pub const ONE: QScalar = QScalar(4);

    pub const fn from_quarters(q: i64) -> Self {
        QScalar(q)
    }

    pub const fn from_int(v: i64) -> Self {
        QScalar(4 * v)
    }

    pub const fn quarters(self) -> i64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 4 == 0
    }

    /// The integer value, if this scalar is a whole number.
    pub const fn as_integer(self) -> Option<i64> {
        if self.0 % 4 == 0 {
            Some(self.0 / 4)
        } else {
            None
        }
    }

    /// Whether the value belongs to the adjacency alphabet
    /// `{0, 1/4, 1/2} ∪ {1, 2, 3, ...}`. The upper bound `n - 1` depends on
    /// the matrix dimension and is checked by the caller.
    pub const fn is_adjacency_value(self) -> bool {
        self.0 == 0 || self.0 == 1 || self.0 == 2 || (self.0 > 0 && self.0 % 4 == 0)
    }

    /// Entries that mark consecutively adjacent vertices: `1/4`, `1/2` or `1`.
    pub const fn is_consecutive_value(self) -> bool {
        self.0 == 1 || self.0 == 2 || self.0 == 4
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 4.0
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.0, 4)
    }

    /// Exact square, as a rational (squares leave quarter units).
    pub fn square(self) -> Rational64 {
        Rational64::new(self.0 * self.0, 16)
    }
}

impl fmt::Display for QScalar {
    /// Integers print plainly, other values as a reduced fraction (`1/2`, `-3/4`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.to_rational();
        if *r.denom() == 1 {
            write!(f, "{}", r.numer())
        } else {
            write!(f, "{}/{}", r.numer(), r.denom())
        }
    }
}

impl Add for QScalar {
    type Output = QScalar;
    fn add(self, rhs: QScalar) -> QScalar {
        QScalar(self.0 + rhs.0)
    }
}

impl Sub for QScalar {
    type Output = QScalar;
    fn sub(self, rhs: QScalar) -> QScalar {
        QScalar(self.0 - rhs.0)
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar(-self.0)
    }
}

impl AddAssign for QScalar {
    fn add_assign(&mut self, rhs: QScalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign for QScalar {
    fn sub_assign(&mut self, rhs: QScalar) {
        self.0 -= rhs.0;
    }
}

impl Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> QScalar {
        QScalar(iter.map(|q| q.0).sum())
    }
}

impl From<i64> for QScalar {
    fn from(v: i64) -> Self {
        QScalar::from_int(v)
    }
}
