//! Arithmetic in GF(2^m) for a caller-chosen irreducible polynomial.
//!
//! Elements are encoded as integers whose bit `i` is the coefficient of
//! `x^i`, so `x^2 + x + 1` is `7`. Polynomials use the same encoding with
//! the leading bit included, e.g. `x^4 + x^3 + 1` is `0x19`.

use std::fmt;

use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// A validated GF(2^m) instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    m: u32,
    poly: u32,
}

/// An element of some GF(2^m). Which field it belongs to is tracked by the
/// caller; [`FieldSpec::element`] is the checked constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

/// Remainder of `a` divided by `b` over GF(2)[x]. `b` must be nonzero.
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=m/2.
fn is_irreducible(poly: u32, m: u32) -> bool {
    if poly & 1 == 0 {
        return false;
    }
    let max_div_degree = m / 2;
    (2u32..(1 << (max_div_degree + 1))).all(|d| poly_rem(poly, d) != 0)
}

impl FieldSpec {
    /// Validates `poly` as an irreducible polynomial of degree exactly `m`.
    pub fn new(m: u32, poly: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        if poly == 0 || degree(poly) != m as i32 {
            return Err(Error::DegreeMismatch { m, poly });
        }
        if !is_irreducible(poly, m) {
            return Err(Error::ReduciblePolynomial(poly));
        }
        Ok(FieldSpec { m, poly })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// Number of elements, 2^m.
    pub fn order(&self) -> u32 {
        1 << self.m
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        u32::from(x.0) < self.order()
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.order() {
            Ok(FieldElement(value as u16))
        } else {
            Err(Error::NotAnElement { value, m: self.m })
        }
    }

    /// All elements in increasing integer order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(|v| FieldElement(v as u16))
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(x.0 ^ y.0)
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let (a, b) = (u32::from(x.0), u32::from(y.0));
        let mut product = 0u32;
        for i in 0..self.m {
            if (b >> i) & 1 == 1 {
                product ^= a << i;
            }
        }
        FieldElement(poly_rem(product, self.poly) as u16)
    }

    pub fn square(&self, x: FieldElement) -> FieldElement {
        // Squaring spreads the bits: coefficient i moves to 2i.
        let a = u32::from(x.0);
        let spread = (0..self.m).fold(0u32, |acc, i| acc | (((a >> i) & 1) << (2 * i)));
        FieldElement(poly_rem(spread, self.poly) as u16)
    }

    pub fn pow(&self, x: FieldElement, mut e: u32) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm over GF(2)[x].
    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Invariant: r0 = s0 * x (mod poly), r1 = s1 * x (mod poly).
        let (mut r0, mut r1) = (self.poly, u32::from(x.0));
        let (mut s0, mut s1) = (0u32, 1u32);
        while r1 != 1 {
            let shift = degree(r0) - degree(r1);
            if shift < 0 {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
                continue;
            }
            r0 ^= r1 << shift;
            s0 ^= s1 << shift;
            if degree(r0) < degree(r1) {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
            }
        }
        Ok(FieldElement(poly_rem(s1, self.poly) as u16))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})/{:#x}", self.m, self.poly)
    }
}
