//! Reflexive polygons: convex lattice polygons with exactly one interior
//! lattice point, normalized so that point is the origin.

use crate::error::{Error, Result};
use crate::point::{LatticePoint, ORIGIN};
use crate::polygon::{cycles_equal, Polygon};

/// A validated reflexive polygon.
///
/// The unique interior lattice point is translated to `(0, 0)` on
/// construction, the STRICT vertex form is stored, and the SUBDIVIDED form
/// and boundary count are cached because the elementary-operation calculus
/// consults them constantly.
///
/// Equality is equality of vertex cycles: two values compare equal when
/// their strict vertex lists agree up to rotation of the starting vertex.
#[derive(Debug, Clone)]
pub struct ReflexivePolygon {
    strict: Polygon,
    subdivided: Polygon,
    boundary: i64,
}

impl PartialEq for ReflexivePolygon {
    fn eq(&self, other: &Self) -> bool {
        cycles_equal(self.strict.vertices(), other.strict.vertices())
    }
}

impl Eq for ReflexivePolygon {}

impl ReflexivePolygon {
    /// Validates reflexivity and normalizes.
    ///
    /// Accepts a polygon in any vertex form. Fails with
    /// [`Error::NotReflexive`] (reporting the count found) when the interior
    /// holds anything but exactly one lattice point.
    pub fn from_polygon(polygon: Polygon) -> Result<Self> {
        let interior = polygon.interior_count()?;
        if interior != 1 {
            return Err(Error::NotReflexive {
                interior_points: interior,
            });
        }
        let center = if polygon.contains_interior(ORIGIN) {
            ORIGIN
        } else {
            find_interior_lattice_point(&polygon)?
        };
        let centered = if center == ORIGIN {
            polygon
        } else {
            polygon.translate(center.checked_neg()?)?
        };
        let strict = centered.strict_form()?;
        let subdivided = strict.subdivide()?;
        let boundary = strict.boundary_count()?;
        debug_assert_eq!(boundary, subdivided.len() as i64);
        Ok(Self {
            strict,
            subdivided,
            boundary,
        })
    }

    pub fn from_vertices(vertices: Vec<LatticePoint>) -> Result<Self> {
        Self::from_polygon(Polygon::new(vertices)?)
    }

    /// STRICT form: corners only.
    pub fn strict(&self) -> &Polygon {
        &self.strict
    }

    /// SUBDIVIDED form: every boundary lattice point is a vertex.
    pub fn subdivided(&self) -> &Polygon {
        &self.subdivided
    }

    /// The count of boundary lattice points, written `m`.
    pub fn boundary_count(&self) -> i64 {
        self.boundary
    }

    pub fn area2(&self) -> i64 {
        self.strict.area2()
    }

    /// The image under `v -> -v`, itself reflexive.
    pub fn reflect_through_origin(&self) -> Result<Self> {
        let vertices = self
            .strict
            .vertices()
            .iter()
            .map(|v| v.checked_neg())
            .collect::<Result<Vec<_>>>()?;
        Self::from_vertices(vertices)
    }
}

/// Locates one strictly interior lattice point of a convex polygon by an
/// exact row sweep: for each lattice row crossing the interior, the open
/// x-interval is intersected from the edge half-planes with rational
/// arithmetic and the first integer inside is returned.
fn find_interior_lattice_point(polygon: &Polygon) -> Result<LatticePoint> {
    let (lo, hi) = polygon.bounding_box();
    let verts = polygon.vertices();
    let n = verts.len();
    for row in lo.y + 1..hi.y {
        // x must satisfy, for every edge a->b with d = b - a:
        //   d.x * (row - a.y) - d.y * (x - a.x) > 0
        let mut lower: Option<(i128, i128)> = None; // x > num/den, den > 0
        let mut upper: Option<(i128, i128)> = None; // x < num/den, den > 0
        let mut feasible = true;
        for i in 0..n {
            let a = verts[i];
            let b = verts[(i + 1) % n];
            let dx = i128::from(b.x) - i128::from(a.x);
            let dy = i128::from(b.y) - i128::from(a.y);
            let rhs = dx * (i128::from(row) - i128::from(a.y)) + dy * i128::from(a.x);
            match dy.signum() {
                0 => {
                    if dx * (i128::from(row) - i128::from(a.y)) <= 0 {
                        feasible = false;
                        break;
                    }
                }
                1 => tighten(&mut upper, rhs, dy, true),
                _ => tighten(&mut lower, -rhs, -dy, false),
            }
        }
        if !feasible {
            continue;
        }
        let (Some((ln, ld)), Some((un, ud))) = (lower, upper) else {
            continue;
        };
        let first = ln.div_euclid(ld) + 1; // smallest integer strictly above
        let last = -((-un).div_euclid(ud)) - 1; // largest integer strictly below
        if first <= last {
            let x = i64::try_from(first).map_err(|_| Error::Overflow)?;
            return Ok(LatticePoint::new(x, row));
        }
    }
    Err(Error::ContractViolation(
        "interior lattice point reported by Pick's formula was not found".into(),
    ))
}

/// Keep the tightest bound; `want_min` keeps the smaller rational (for upper
/// bounds), otherwise the larger (for lower bounds). Denominators positive.
fn tighten(slot: &mut Option<(i128, i128)>, num: i128, den: i128, want_min: bool) {
    debug_assert!(den > 0);
    match slot {
        None => *slot = Some((num, den)),
        Some((n0, d0)) => {
            let lhs = num * *d0;
            let rhs = *n0 * den;
            let replace = if want_min { lhs < rhs } else { lhs > rhs };
            if replace {
                *slot = Some((num, den));
            }
        }
    }
}
