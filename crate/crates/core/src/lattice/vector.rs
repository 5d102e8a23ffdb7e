use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;

/// An integer vector, used both for fiber points and for moves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> IntVector {
        IntVector(entries)
    }

    pub fn zeros(n: usize) -> IntVector {
        IntVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> IntVector {
        let mut v = vec![0; n];
        v[i] = 1;
        IntVector(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// `u⁺`: the componentwise maximum with zero.
    pub fn positive_part(&self) -> IntVector {
        IntVector(self.0.iter().map(|&x| x.max(0)).collect())
    }

    /// `u⁻`: the componentwise maximum of `-u` with zero, so `u = u⁺ − u⁻`.
    pub fn negative_part(&self) -> IntVector {
        IntVector(self.0.iter().map(|&x| (-x).max(0)).collect())
    }

    /// The 1-norm.
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &IntVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Gcd of the entries (zero for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x))
    }

    /// Splits into content and primitive part, keeping the sign.
    pub fn primitive(&self) -> (i64, IntVector) {
        let g = self.content();
        if g <= 1 {
            return (g, self.clone());
        }
        (g, IntVector(self.0.iter().map(|x| x / g).collect()))
    }

    /// True when the first nonzero entry is positive (or the vector is zero).
    pub fn is_canonical(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_none_or(|&x| x > 0)
    }

    /// The representative of `±self` whose first nonzero entry is positive.
    pub fn canonical(&self) -> IntVector {
        if self.is_canonical() {
            self.clone()
        } else {
            -self
        }
    }

    pub fn scale(&self, k: i64) -> IntVector {
        IntVector(self.0.iter().map(|&x| x.checked_mul(k).expect("integer overflow in scale")).collect())
    }

    pub fn dot(&self, other: &[i64]) -> i64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    /// Bit masks of the positive and negative supports (first 64 coordinates).
    pub(crate) fn sign_masks(&self) -> (u64, u64) {
        let mut pos = 0u64;
        let mut neg = 0u64;
        for (i, &x) in self.0.iter().enumerate().take(64) {
            if x > 0 {
                pos |= 1 << i;
            } else if x < 0 {
                neg |= 1 << i;
            }
        }
        (pos, neg)
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector(v.to_vec())
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.len(), rhs.len(), "length mismatch");
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.checked_add(*b).expect("integer overflow in add")).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.len(), rhs.len(), "length mismatch");
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.checked_sub(*b).expect("integer overflow in sub")).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Add for IntVector {
    type Output = IntVector;
    fn add(self, rhs: IntVector) -> IntVector {
        &self + &rhs
    }
}

impl Sub for IntVector {
    type Output = IntVector;
    fn sub(self, rhs: IntVector) -> IntVector {
        &self - &rhs
    }
}

impl Neg for IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        -&self
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
