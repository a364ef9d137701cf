//! Lattice points and exact integer vector arithmetic.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A point of the integer grid Z², also used as an integer vector.
///
/// Coordinates are exact `i64` values. All arithmetic that could leave the
/// 64-bit range is checked and reports [`Error::Overflow`]; cross products go
/// through 128-bit intermediates so they are exact for any pair of points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

/// The origin, written `O` throughout the crate docs.
pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        Ok(Self {
            x: self.x.checked_add(other.x).ok_or(Error::Overflow)?,
            y: self.y.checked_add(other.y).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        Ok(Self {
            x: self.x.checked_sub(other.x).ok_or(Error::Overflow)?,
            y: self.y.checked_sub(other.y).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Self {
            x: self.x.checked_neg().ok_or(Error::Overflow)?,
            y: self.y.checked_neg().ok_or(Error::Overflow)?,
        })
    }

    /// gcd of the absolute coordinate values; 0 only for the zero vector.
    pub fn coord_gcd(self) -> u64 {
        self.x.unsigned_abs().gcd(&self.y.unsigned_abs())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Exact cross product `a × b` as a 128-bit integer.
///
/// `i64 × i64` fits in `i128` and the subtraction of two such products cannot
/// overflow `i128`, so this is total.
pub fn cross(a: LatticePoint, b: LatticePoint) -> i128 {
    i128::from(a.x) * i128::from(b.y) - i128::from(a.y) * i128::from(b.x)
}

/// Exact cross product of `b - a` and `c - a` (the orientation of the triple).
///
/// Differences of `i64` fit in `i128`; the products may not fit, so they are
/// checked and `None` means the magnitude left the representable range (which
/// in particular means it is nowhere near ±1).
pub fn orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Option<i128> {
    let ux = i128::from(b.x) - i128::from(a.x);
    let uy = i128::from(b.y) - i128::from(a.y);
    let vx = i128::from(c.x) - i128::from(a.x);
    let vy = i128::from(c.y) - i128::from(a.y);
    let p = ux.checked_mul(vy)?;
    let q = uy.checked_mul(vx)?;
    p.checked_sub(q)
}

/// Dot product of `b - a` and `c - b`, used to tell straight angles (same
/// direction) from reversals (opposite direction) when the cross is zero.
pub fn dot_turn(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Option<i128> {
    let ux = i128::from(b.x) - i128::from(a.x);
    let uy = i128::from(b.y) - i128::from(a.y);
    let vx = i128::from(c.x) - i128::from(b.x);
    let vy = i128::from(c.y) - i128::from(b.y);
    let p = ux.checked_mul(vx)?;
    let q = uy.checked_mul(vy)?;
    p.checked_add(q)
}

/// Counterclockwise angular order of nonzero vectors, starting at the
/// positive x-axis. Vectors on the same ray compare equal.
pub fn cmp_by_angle(a: LatticePoint, b: LatticePoint) -> Ordering {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let ca = angle_class(a);
    let cb = angle_class(b);
    ca.cmp(&cb).then_with(|| 0i128.cmp(&cross(a, b)))
}

/// 0..8 sector index in counterclockwise order from the positive x-axis.
fn angle_class(v: LatticePoint) -> u8 {
    match (v.x.cmp(&0), v.y.cmp(&0)) {
        (Ordering::Greater, Ordering::Equal) => 0,
        (Ordering::Greater, Ordering::Greater) => 1,
        (Ordering::Equal, Ordering::Greater) => 2,
        (Ordering::Less, Ordering::Greater) => 3,
        (Ordering::Less, Ordering::Equal) => 4,
        (Ordering::Less, Ordering::Less) => 5,
        (Ordering::Equal, Ordering::Less) => 6,
        (Ordering::Greater, Ordering::Less) => 7,
        (Ordering::Equal, Ordering::Equal) => unreachable!("zero vector has no angle"),
    }
}
