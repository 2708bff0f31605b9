//! Scalar abstraction: the whole crate is generic over the real field.
//!
//! Everything numeric is written against [`Scalar`], a bundle of the
//! `num-traits` capabilities the algorithms need. `f32` and `f64` implement
//! it; `f64` is what the CLI and the concrete aliases at the crate root use.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar type underlying all matrix and quadrature work.
pub trait Scalar:
    Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Sum<Self>
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + NumAssign
        + FromPrimitive
        + ToPrimitive
        + Sum<Self>
        + Debug
        + Display
        + LowerExp
        + Send
        + Sync
        + 'static
{
}

/// Shorthand for tolerance and schedule literals written as `f64`.
pub fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal must be representable in the scalar type")
}

/// Complex number over the crate scalar.
pub type Cplx<T> = Complex<T>;

/// `re + i*im` from scalar parts.
pub fn cplx<T: Scalar>(re: T, im: T) -> Cplx<T> {
    Complex::new(re, im)
}

/// Purely real complex value.
pub fn creal<T: Scalar>(re: T) -> Cplx<T> {
    Complex::new(re, T::zero())
}

/// The imaginary unit.
pub fn imag_unit<T: Scalar>() -> Cplx<T> {
    Complex::new(T::zero(), T::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_round_trip_in_both_widths() {
        assert_eq!(lit::<f64>(0.25), 0.25);
        assert_eq!(lit::<f32>(0.25), 0.25f32);
    }

    #[test]
    fn complex_helpers() {
        let z = cplx(1.0f64, -2.0);
        assert_eq!(z * imag_unit(), cplx(2.0, 1.0));
        assert_eq!(creal(3.0f64), cplx(3.0, 0.0));
    }
}
