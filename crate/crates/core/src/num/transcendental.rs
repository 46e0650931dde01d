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

//! Certified rational enclosures of `ln`, `exp` and `√`.
//!
//! Every function returns an [`Interval`] whose endpoints are exact
//! rationals guaranteed to bracket the true real value. Thresholds compare
//! against whichever endpoint is conservative for the caller.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rational_to_f64, round_down, round_up, Rational};

/// Binary digits kept after each rounding step. Errors stay far below
/// `2^-PRECISION_BITS` times a small constant.
const PRECISION_BITS: usize = 160;

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        (rational_to_f64(&self.lo) + rational_to_f64(&self.hi)) / 2.0
    }

    fn tighten(self) -> Self {
        Interval {
            lo: round_down(&self.lo, PRECISION_BITS),
            hi: round_up(&self.hi, PRECISION_BITS),
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        assert!(!c.is_negative());
        Interval {
            lo: &self.lo * c,
            hi: &self.hi * c,
        }
    }

    fn add(&self, other: &Interval) -> Self {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }
}

/// `2·atanh(z) = ln((1+z)/(1−z))` for `0 <= z <= 1/2`.
fn two_atanh(z: &Rational) -> Interval {
    assert!(!z.is_negative() && *z <= Rational::new(1.into(), 2.into()));
    if z.is_zero() {
        return Interval::point(Rational::zero());
    }
    let z2 = z * z;
    let mut term = z.clone();
    let mut sum = Rational::zero();
    let mut i: u64 = 0;
    // Terms shrink by at least a factor 4 each step.
    loop {
        let denom = Rational::from_integer(BigInt::from(2 * i + 1));
        sum += &term / &denom;
        term = round_up(&(&term * &z2), PRECISION_BITS + 16);
        i += 1;
        if term < Rational::new(BigInt::one(), BigInt::one() << (PRECISION_BITS + 8)) {
            break;
        }
    }
    // Tail: sum_{j>=i} z^(2j+1)/(2j+1) <= term / ((2i+1)(1 − z²)).
    let tail = &term / (Rational::from_integer(BigInt::from(2 * i + 1)) * (Rational::one() - &z2));
    let two = Rational::from_integer(2.into());
    Interval {
        lo: &sum * &two,
        hi: (sum + tail) * two,
    }
    .tighten()
}

fn ln2() -> Interval {
    // ln 2 = 2·atanh(1/3).
    two_atanh(&Rational::new(1.into(), 3.into()))
}

/// Enclosure of `ln x` for rational `x > 0`.
pub fn ln(x: &Rational) -> Interval {
    assert!(x.is_positive(), "ln of a non-positive number");
    if *x < Rational::one() {
        let inv = ln(&x.recip());
        return Interval {
            lo: -inv.hi,
            hi: -inv.lo,
        };
    }
    // x = 2^m · y with y in [1, 2).
    let mut m: u64 = (x.numer().bits().saturating_sub(x.denom().bits())).saturating_sub(1);
    let two = Rational::from_integer(2.into());
    let mut y = x / Rational::from_integer(BigInt::one() << m as usize);
    while y >= two {
        y /= &two;
        m += 1;
    }
    debug_assert!(y >= Rational::one() && y < two);
    // ln y = 2·atanh((y−1)/(y+1)), with (y−1)/(y+1) < 1/3.
    let z = (&y - Rational::one()) / (&y + Rational::one());
    let ln_y = two_atanh(&z);
    ln2()
        .scale(&Rational::from_integer(BigInt::from(m)))
        .add(&ln_y)
        .tighten()
}

/// Enclosure of `exp(r)` for `0 <= r <= 1/2` via the Taylor series.
fn exp_small(r: &Rational) -> Interval {
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    let mut i: u64 = 0;
    loop {
        sum += &term;
        i += 1;
        term = round_up(&(&term * r / Rational::from_integer(BigInt::from(i))), PRECISION_BITS + 16);
        if term < Rational::new(BigInt::one(), BigInt::one() << (PRECISION_BITS + 8)) {
            break;
        }
    }
    // Remainder is at most term · 1/(1 − r) <= 2·term.
    let tail = term * Rational::from_integer(2.into());
    Interval {
        lo: sum.clone(),
        hi: sum + tail,
    }
    .tighten()
}

/// Enclosure of `exp(x)` for rational `x`.
pub fn exp(x: &Rational) -> Interval {
    if x.is_negative() {
        let pos = exp(&-x);
        return Interval {
            lo: round_down(&pos.hi.recip(), PRECISION_BITS),
            hi: round_up(&pos.lo.recip(), PRECISION_BITS),
        };
    }
    // exp(x) = exp(x / 2^s)^(2^s) with x / 2^s <= 1/2.
    let half = Rational::new(1.into(), 2.into());
    let mut s = 0usize;
    let mut r = x.clone();
    while r > half {
        r /= Rational::from_integer(2.into());
        s += 1;
    }
    let mut iv = exp_small(&r);
    for _ in 0..s {
        iv = Interval {
            lo: &iv.lo * &iv.lo,
            hi: &iv.hi * &iv.hi,
        }
        .tighten();
    }
    iv
}

/// Enclosure of `√x` for rational `x >= 0`.
pub fn sqrt(x: &Rational) -> Interval {
    assert!(!x.is_negative());
    if x.is_zero() {
        return Interval::point(Rational::zero());
    }
    // √(p/q) = √(p·q·4^b) / (q·2^b), integer square roots bracket the numerator.
    let scale = BigInt::one() << (2 * PRECISION_BITS);
    let radicand = x.numer() * x.denom() * &scale;
    let root = radicand.sqrt();
    let den = x.denom() * (BigInt::one() << PRECISION_BITS);
    let lo = Rational::new(root.clone(), den.clone());
    let hi = if &root * &root == radicand {
        lo.clone()
    } else {
        Rational::new(root + 1, den)
    };
    Interval { lo, hi }
}
