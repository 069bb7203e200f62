//! Integer scalar abstraction for the bound formulas.
//!
//! Every closed form in this crate is evaluated in exact integer arithmetic
//! with overflow detection. The formulas are written once against [`Int`] and
//! instantiated for `i64` (the default) or `i128` (wide sweeps).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, NumCast, PrimInt, Signed};

use crate::error::{Error, Result};

/// Signed primitive integer usable by the bound formulas.
pub trait Int:
    PrimInt + Signed + Integer + Roots + NumCast + FromPrimitive + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Int for T where
    T: PrimInt
        + Signed
        + Integer
        + Roots
        + NumCast
        + FromPrimitive
        + Hash
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// Literal constant in `T`. Only used for small constants that fit every `Int`.
#[inline]
pub fn lit<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("small literal fits in scalar type")
}

/// Converts a grid dimension into `T`, failing with [`Error::Overflow`].
pub fn cast<T: Int>(v: i64) -> Result<T> {
    T::from_i64(v).ok_or(Error::Overflow)
}

/// Converts back to `i64` for reporting.
pub fn to_i64<T: Int>(v: T) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow)
}

/// Overflow-tracking integer. Arithmetic saturates into a poisoned state that
/// surfaces as [`Error::Overflow`] on [`Checked::get`].
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Checked<T>(Option<T>);

impl<T: Int> Checked<T> {
    #[inline]
    pub fn new(v: T) -> Self {
        Checked(Some(v))
    }

    #[inline]
    pub fn lit(v: i64) -> Self {
        Checked(T::from_i64(v))
    }

    pub fn get(self) -> Result<T> {
        self.0.ok_or(Error::Overflow)
    }

    pub fn pow(self, exp: u32) -> Self {
        Checked(self.0.and_then(|v| num_traits::checked_pow(v, exp as usize)))
    }

    /// Exact division; a non-zero remainder is reported as an error because
    /// every division in the formulas is algebraically guaranteed to be exact.
    pub fn div_exact(self, rhs: T, what: &'static str) -> Result<T> {
        let v = self.get()?;
        if rhs.is_zero() {
            return Err(Error::Arithmetic(format!("{what}: division by zero")));
        }
        let (q, r) = v.div_rem(&rhs);
        if !r.is_zero() {
            return Err(Error::Arithmetic(format!("{what}: {v} is not divisible by {rhs}")));
        }
        Ok(q)
    }

    /// Ceiling division for a positive divisor.
    pub fn div_ceil(self, rhs: T) -> Result<T> {
        let v = self.get()?;
        if rhs <= T::zero() {
            return Err(Error::Arithmetic(format!("ceil division by non-positive {rhs}")));
        }
        Ok(Integer::div_ceil(&v, &rhs))
    }

    /// Floor division for a positive divisor.
    pub fn div_floor(self, rhs: T) -> Result<T> {
        let v = self.get()?;
        if rhs <= T::zero() {
            return Err(Error::Arithmetic(format!("floor division by non-positive {rhs}")));
        }
        Ok(Integer::div_floor(&v, &rhs))
    }
}

impl<T: fmt::Debug> fmt::Debug for Checked<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(v) => write!(f, "Checked({v:?})"),
            None => f.write_str("Checked(overflow)"),
        }
    }
}

impl<T: Int> From<T> for Checked<T> {
    fn from(v: T) -> Self {
        Checked::new(v)
    }
}

macro_rules! checked_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<T: Int> $tr for Checked<T> {
            type Output = Checked<T>;
            #[inline]
            fn $method(self, rhs: Checked<T>) -> Checked<T> {
                Checked(match (self.0, rhs.0) {
                    (Some(a), Some(b)) => a.$checked(&b),
                    _ => None,
                })
            }
        }

        impl<T: Int> $tr<T> for Checked<T> {
            type Output = Checked<T>;
            #[inline]
            fn $method(self, rhs: T) -> Checked<T> {
                Checked(self.0.and_then(|a| a.$checked(&rhs)))
            }
        }
    };
}

checked_binop!(Add, add, checked_add);
checked_binop!(Sub, sub, checked_sub);
checked_binop!(Mul, mul, checked_mul);

impl<T: Int> Neg for Checked<T> {
    type Output = Checked<T>;
    fn neg(self) -> Checked<T> {
        Checked(self.0.and_then(|a| T::zero().checked_sub(&a)))
    }
}

/// Shorthand for wrapping a value.
#[inline]
pub fn ck<T: Int>(v: T) -> Checked<T> {
    Checked::new(v)
}
