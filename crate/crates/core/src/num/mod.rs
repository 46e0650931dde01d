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

//! Exact scalar types used for vertex weights.
//!
//! Every algorithm in the crate is generic over [`Scalar`], an exactly
//! ordered field. Two implementations ship: arbitrary-precision rationals
//! ([`Rational`]) and the quadratic field `Q(√2)` ([`QuadSurd`]).
//! Floating point is deliberately not a `Scalar`: the guarantees are checked
//! with exact comparisons.

mod surd;
pub mod transcendental;

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use surd::QuadSurd;

use crate::error::Error;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// An exactly ordered field usable as a vertex weight.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Ord
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// Lossless embedding of a rational.
    fn from_rational(r: &Rational) -> Self;

    fn from_integer(i: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(i)))
    }

    /// Nearest `f64`; for reporting only.
    fn to_f64(&self) -> f64;

    /// Lossless text form, parseable by the instance readers.
    fn to_exact_string(&self) -> String;

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn to_exact_string(&self) -> String {
        format_rational(self)
    }
}

/// Builds `num/den`, reducing to lowest terms. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(i: i64) -> Rational {
    Rational::from_integer(BigInt::from(i))
}

/// Formats as `p/q` in lowest terms, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("malformed rational `{s}`"),
    };
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse {
            line: 0,
            msg: format!("zero denominator in `{s}`"),
        });
    }
    Ok(Rational::new(p, q))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // Shift large operands down before converting so huge numerators and
    // denominators still produce a finite quotient.
    let (n, d) = (r.numer().clone(), r.denom().clone());
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    if nb < 1000 && db < 1000 {
        return n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN);
    }
    let shift_n = (nb - 900).max(0);
    let shift_d = (db - 900).max(0);
    let nf = (&n >> shift_n as usize).to_f64().unwrap_or(f64::NAN);
    let df = (&d >> shift_d as usize).to_f64().unwrap_or(f64::NAN);
    nf / df * 2f64.powi((shift_n - shift_d) as i32)
}

/// Smallest integer `>= r`.
pub fn ceil_to_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

pub fn floor_to_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// `base^exp` for a nonnegative exponent.
pub fn pow<W: Scalar>(base: &W, exp: u64) -> W {
    let mut result = W::one();
    let mut acc = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * acc.clone();
        }
        e >>= 1;
        if e > 0 {
            acc = acc.clone() * acc;
        }
    }
    result
}

/// Rounds `r` down to a multiple of `2^-bits`.
pub(crate) fn round_down(r: &Rational, bits: usize) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = (r * Rational::from_integer(scale.clone())).floor().to_integer();
    Rational::new(scaled, scale)
}

/// Rounds `r` up to a multiple of `2^-bits`.
pub(crate) fn round_up(r: &Rational, bits: usize) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = (r * Rational::from_integer(scale.clone())).ceil().to_integer();
    Rational::new(scaled, scale)
}

/// Integer square root floor, exact.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// `k | n`, false for `k == 0`.
pub fn divides(k: usize, n: usize) -> bool {
    k != 0 && n.is_multiple_of(k)
}
