use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Integer scalar with overflow-aware arithmetic.
///
/// `i64` reports overflow by returning `None`; `BigInt` never does. The
/// echelon routines are written once against this trait so the orbit search
/// can run on machine words and retry on `BigInt` when a value escapes.
pub trait Zint: Clone + Ord + fmt::Debug + Send + Sync {
    fn zzero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn zis_zero(&self) -> bool;
    fn zis_negative(&self) -> bool;
    fn zabs(&self) -> Option<Self>;
    fn zadd(&self, o: &Self) -> Option<Self>;
    fn zsub(&self, o: &Self) -> Option<Self>;
    fn zmul(&self, o: &Self) -> Option<Self>;
    fn zneg(&self) -> Option<Self>;
    /// Quotient rounded toward zero.
    fn zdiv_trunc(&self, o: &Self) -> Option<Self>;
    /// Quotient rounded toward negative infinity.
    fn zdiv_floor(&self, o: &Self) -> Option<Self>;
    fn zgcd(&self, o: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl Zint for i64 {
    fn zzero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn zis_zero(&self) -> bool {
        *self == 0
    }
    fn zis_negative(&self) -> bool {
        *self < 0
    }
    fn zabs(&self) -> Option<Self> {
        self.checked_abs()
    }
    fn zadd(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn zsub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn zmul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn zneg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn zdiv_trunc(&self, o: &Self) -> Option<Self> {
        self.checked_div(*o)
    }
    fn zdiv_floor(&self, o: &Self) -> Option<Self> {
        if *o == 0 || (*self == i64::MIN && *o == -1) {
            return None;
        }
        Some(Integer::div_floor(self, o))
    }
    fn zgcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Zint for BigInt {
    fn zzero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn zis_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zis_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn zabs(&self) -> Option<Self> {
        Some(self.abs())
    }
    fn zadd(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn zsub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn zmul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn zneg(&self) -> Option<Self> {
        Some(-self)
    }
    fn zdiv_trunc(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
    fn zdiv_floor(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(Integer::div_floor(self, o))
        }
    }
    fn zgcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Narrows a `BigInt` to `i64` when it fits.
pub fn narrow(v: &BigInt) -> Option<i64> {
    v.to_i64()
}
