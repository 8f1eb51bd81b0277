use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// An exact rational with fixed denominator 15.
///
/// Every cost, profit and potential the construction manipulates is a
/// multiple of 1/15, so integer arithmetic on the numerator is exact.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Fifteenths(pub i64);

impl Fifteenths {
    pub const ZERO: Fifteenths = Fifteenths(0);
    pub const ONE_FIFTH: Fifteenths = Fifteenths(3);
    pub const TWO_FIFTHS: Fifteenths = Fifteenths(6);
    /// The floor every non-exclusion graph reaches.
    pub const TWO: Fifteenths = Fifteenths(30);
    /// The floor every graph reaches, exclusions included.
    pub const EIGHT_FIFTHS: Fifteenths = Fifteenths(24);

    pub const fn new(num: i64) -> Self {
        Fifteenths(num)
    }

    pub const fn from_int(n: i64) -> Self {
        Fifteenths(15 * n)
    }

    pub const fn num(self) -> i64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 15.0
    }
}

/// Always `p/15`, never reduced, so 8/5 prints as `24/15`.
impl fmt::Display for Fifteenths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/15", self.0)
    }
}

impl From<Fifteenths> for String {
    fn from(x: Fifteenths) -> String {
        x.to_string()
    }
}

impl TryFrom<String> for Fifteenths {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl std::str::FromStr for Fifteenths {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = match s.split_once('/') {
            Some((p, "15")) => p,
            Some(_) => return Err(format!("expected denominator 15 in {s:?}")),
            None => return s.parse::<i64>().map(Fifteenths::from_int).map_err(|e| e.to_string()),
        };
        num.trim().parse::<i64>().map(Fifteenths).map_err(|e| e.to_string())
    }
}

impl Add for Fifteenths {
    type Output = Fifteenths;
    fn add(self, rhs: Self) -> Self {
        Fifteenths(self.0 + rhs.0)
    }
}

impl AddAssign for Fifteenths {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl Sub for Fifteenths {
    type Output = Fifteenths;
    fn sub(self, rhs: Self) -> Self {
        Fifteenths(self.0 - rhs.0)
    }
}

impl SubAssign for Fifteenths {
    fn sub_assign(&mut self, rhs: Self) {
        self.0 -= rhs.0;
    }
}

impl Neg for Fifteenths {
    type Output = Fifteenths;
    fn neg(self) -> Self {
        Fifteenths(-self.0)
    }
}

impl Mul<i64> for Fifteenths {
    type Output = Fifteenths;
    fn mul(self, rhs: i64) -> Self {
        Fifteenths(self.0 * rhs)
    }
}

impl Sum for Fifteenths {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        Fifteenths(iter.map(|f| f.0).sum())
    }
}

impl<'a> Sum<&'a Fifteenths> for Fifteenths {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        Fifteenths(iter.map(|f| f.0).sum())
    }
}
