// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{format_rational, parse_rational, rational_to_f64, Rational, Scalar};
use crate::error::Error;

/// An element `a + b√2` of the field `Q(√2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: Rational,
    b: Rational,
}

impl QuadSurd {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadSurd { a, b }
    }

    /// The number `√2`.
    pub fn sqrt2() -> Self {
        QuadSurd::new(Rational::zero(), Rational::one())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Sign of `a + b√2`, computed exactly.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // Opposite signs: the term with larger magnitude wins, comparing
            // a² with 2b².
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * Rational::from_integer(2.into());
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    // a² = 2b² forces a = b = 0 for rationals.
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    /// Conjugate `a − b√2`.
    pub fn conjugate(&self) -> Self {
        QuadSurd::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(2.into())
    }

    /// Text form `p/q + r/s√2`, with the rational part alone when `b = 0`.
    fn exact_text(&self) -> String {
        if self.b.is_zero() {
            format_rational(&self.a)
        } else {
            format!("{} + {}√2", format_rational(&self.a), format_rational(&self.b))
        }
    }

    /// Parses `p/q` or `p/q + r/s√2` (also accepting the ASCII suffix `r2`).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s.split_once('+') {
            None => Ok(QuadSurd::new(parse_rational(s)?, Rational::zero())),
            Some((a, b)) => {
                let b = b.trim();
                let b = b
                    .strip_suffix("√2")
                    .or_else(|| b.strip_suffix("r2"))
                    .ok_or_else(|| Error::Parse {
                        line: 0,
                        msg: format!("missing √2 suffix in `{s}`"),
                    })?;
                Ok(QuadSurd::new(parse_rational(a)?, parse_rational(b)?))
            }
        }
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exact_text())
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exact_text())
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for QuadSurd {
    type Output = QuadSurd;
    fn add(self, rhs: Self) -> Self {
        QuadSurd::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QuadSurd {
    type Output = QuadSurd;
    fn sub(self, rhs: Self) -> Self {
        QuadSurd::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, rhs: Self) -> Self {
        let two = Rational::from_integer(2.into());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * two;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadSurd::new(a, b)
    }
}

impl Div for QuadSurd {
    type Output = QuadSurd;
    fn div(self, rhs: Self) -> Self {
        let norm = rhs.norm();
        assert!(!norm.is_zero(), "division by zero in Q(√2)");
        let num = self * rhs.conjugate();
        QuadSurd::new(num.a / &norm, num.b / norm)
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> Self {
        QuadSurd::new(-self.a, -self.b)
    }
}

impl<'a> AddAssign<&'a QuadSurd> for QuadSurd {
    fn add_assign(&mut self, rhs: &'a QuadSurd) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> SubAssign<&'a QuadSurd> for QuadSurd {
    fn sub_assign(&mut self, rhs: &'a QuadSurd) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Zero for QuadSurd {
    fn zero() -> Self {
        QuadSurd::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadSurd {
    fn one() -> Self {
        QuadSurd::new(Rational::one(), Rational::zero())
    }
}

impl Scalar for QuadSurd {
    fn from_rational(r: &Rational) -> Self {
        QuadSurd::new(r.clone(), Rational::zero())
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * std::f64::consts::SQRT_2
    }

    fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    fn to_exact_string(&self) -> String {
        self.exact_text()
    }
}

impl From<Rational> for QuadSurd {
    fn from(r: Rational) -> Self {
        QuadSurd::new(r, Rational::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, ratio};
    use proptest::prelude::*;

    fn qs(a: (i64, i64), b: (i64, i64)) -> QuadSurd {
        QuadSurd::new(ratio(a.0, a.1), ratio(b.0, b.1))
    }

    #[test]
    fn sqrt2_sits_between_rational_bounds() {
        let r2 = QuadSurd::sqrt2();
        assert!(QuadSurd::from(ratio(141, 100)) < r2);
        assert!(r2 < QuadSurd::from(ratio(142, 100)));
        assert!(QuadSurd::from(ratio(1_414_213, 1_000_000)) < r2);
        assert!(r2 < QuadSurd::from(ratio(1_414_214, 1_000_000)));
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let r2 = QuadSurd::sqrt2();
        assert_eq!(r2.clone() * r2, QuadSurd::from(int(2)));
    }

    #[test]
    fn division_inverts_multiplication() {
        let x = qs((3, 2), (-1, 5));
        let y = qs((7, 1), (2, 3));
        assert_eq!((x.clone() * y.clone()) / y, x);
    }

    #[test]
    fn text_round_trip() {
        for x in [qs((0, 1), (1, 1)), qs((2, 1), (0, 1)), qs((-3, 4), (5, 7))] {
            assert_eq!(QuadSurd::parse(&x.to_exact_string()).unwrap(), x);
        }
        assert_eq!(QuadSurd::parse("0/1 + 1/1r2").unwrap(), QuadSurd::sqrt2());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn sign_agrees_with_float_evaluation(
            a in -10_000i64..10_000, ad in 1i64..100,
            b in -10_000i64..10_000, bd in 1i64..100,
        ) {
            let x = qs((a, ad), (b, bd));
            let approx = a as f64 / ad as f64 + b as f64 / bd as f64 * std::f64::consts::SQRT_2;
            // Values this close to zero are beyond what f64 can adjudicate.
            prop_assume!(approx.abs() > 1e-9);
            let expected = if approx > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(x.signum(), expected);
        }

        #[test]
        fn ordering_is_consistent_with_subtraction(
            a in -500i64..500, b in -500i64..500, c in -500i64..500, d in -500i64..500,
        ) {
            let x = qs((a, 7), (b, 3));
            let y = qs((c, 5), (d, 11));
            prop_assert_eq!(x.cmp(&y), (x.clone() - y.clone()).signum());
            prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
        }
    }
}
