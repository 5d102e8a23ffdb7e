//! Exact linear algebra over the integers: lattice kernels, ranks,
//! one-dimensional nullspaces and the double description method.

mod dd;
mod lattice;

pub use dd::{cone_rays, ConeRays};
pub use lattice::{integer_kernel, nullspace_if_one_dimensional, rank};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub(crate) fn to_big(row: &[i64]) -> Vec<BigInt> {
    row.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn to_i64(v: &[BigInt], context: &'static str) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow(context))).collect()
}

/// Divides by the gcd of the entries; the zero vector is left alone.
pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Flips the sign so that the first nonzero entry is positive.
pub(crate) fn make_leading_positive(v: &mut [BigInt]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
