//! Convex lattice polygons with exact integer predicates.
//!
//! A [`Polygon`] is an ordered cycle of lattice vertices, normalized to
//! counterclockwise orientation on construction. Two canonical vertex
//! representations are used throughout the crate and are interconvertible:
//!
//! * STRICT form: every vertex is a proper corner (every consecutive cross
//!   product is positive);
//! * SUBDIVIDED form: every lattice point of the boundary is listed as a
//!   vertex, so straight (180°) vertices are allowed.
//!
//! Counting is exact: the doubled area comes from the shoelace sum, boundary
//! lattice points from the per-edge gcd formula, and interior lattice points
//! from Pick's formula. Each count has an independent brute-force companion
//! (`*_scan`) that enumerates the bounding box; those are meant as
//! cross-checks and cost time proportional to the bounding-box area.

use crate::error::{Error, Result};
use crate::point::{cmp_by_angle, cross, dot_turn, orient, LatticePoint};

/// Where a point sits relative to a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// A weakly convex lattice polygon, counterclockwise, with nonzero area.
///
/// Invariants established by [`Polygon::new`]:
/// * at least 3 vertices, consecutive vertices distinct (cyclically);
/// * every turn is left or straight, straight turns keep the edge direction
///   (no reversal spikes), and the edge directions wind around exactly once;
/// * orientation is counterclockwise (input is reversed if it came clockwise;
///   vertices are never reordered beyond that).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<LatticePoint>,
    area2: i64,
}

impl Polygon {
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::RepeatedVertex(i));
            }
        }

        let turns: Vec<i128> = (0..n)
            .map(|i| {
                let a = vertices[(i + n - 1) % n];
                let b = vertices[i];
                let c = vertices[(i + 1) % n];
                orient(a, b, c).ok_or(Error::Overflow)
            })
            .collect::<Result<_>>()?;
        if turns.iter().all(|&t| t == 0) {
            return Err(Error::CollinearVertices);
        }

        // The turns decide the orientation sign; mixed strict signs mean the
        // input is not convex in either direction, and a zero turn must keep
        // the edge direction (straight is fine, reversal is not).
        let mut sign = 0i32;
        for i in 0..n {
            if turns[i] == 0 {
                let a = vertices[(i + n - 1) % n];
                let b = vertices[i];
                let c = vertices[(i + 1) % n];
                let d = dot_turn(a, b, c).ok_or(Error::Overflow)?;
                if d < 0 {
                    return Err(Error::NotConvex { index: i });
                }
            } else {
                let s = if turns[i] > 0 { 1 } else { -1 };
                if sign == 0 {
                    sign = s;
                } else if sign != s {
                    return Err(Error::NotConvex { index: i });
                }
            }
        }
        debug_assert_ne!(sign, 0);

        let mut vertices = vertices;
        if sign < 0 {
            vertices.reverse();
        }

        // All turns are now left or straight. A convex boundary walks through
        // the full angular range exactly once; star-like cycles that turn
        // left everywhere but wind twice are rejected here.
        let dirs: Vec<LatticePoint> = (0..n)
            .map(|i| vertices[(i + 1) % n].checked_sub(vertices[i]))
            .collect::<Result<_>>()?;
        let wraps = (0..n)
            .filter(|&i| cmp_by_angle(dirs[i], dirs[(i + 1) % n]) == std::cmp::Ordering::Greater)
            .count();
        if wraps != 1 {
            return Err(Error::SelfWrapping);
        }

        let area2 = shoelace2(&vertices)?;
        debug_assert!(area2 > 0);
        Ok(Self { vertices, area2 })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Twice the (positive) area.
    pub fn area2(&self) -> i64 {
        self.area2
    }

    /// Number of lattice points on the boundary: the sum over edges of
    /// `gcd(|dx|, |dy|)`.
    pub fn boundary_count(&self) -> Result<i64> {
        let mut total: i128 = 0;
        let n = self.vertices.len();
        for i in 0..n {
            let d = self.vertices[(i + 1) % n].checked_sub(self.vertices[i])?;
            total += i128::from(d.coord_gcd());
        }
        i64::try_from(total).map_err(|_| Error::Overflow)
    }

    /// Number of lattice points strictly inside, by Pick's formula
    /// `I = (2A - B + 2) / 2`. The division is exact for every valid lattice
    /// polygon; a remainder indicates inconsistent data.
    pub fn interior_count(&self) -> Result<i64> {
        let b = i128::from(self.boundary_count()?);
        let num = i128::from(self.area2) - b + 2;
        if num.rem_euclid(2) != 0 {
            return Err(Error::PickMismatch);
        }
        i64::try_from(num / 2).map_err(|_| Error::Overflow)
    }

    /// Brute-force companion of [`Polygon::boundary_count`]: walks the
    /// bounding box and tests membership on each edge segment.
    pub fn boundary_count_scan(&self) -> Result<i64> {
        let (lo, hi) = self.bounding_box();
        let mut count = 0i64;
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                let p = LatticePoint::new(x, y);
                let on_edge = self.edges().any(|(a, b)| on_segment(a, b, p));
                if on_edge {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Brute-force companion of [`Polygon::interior_count`]: walks the
    /// bounding box and tests strict containment by half-plane signs.
    pub fn interior_count_scan(&self) -> Result<i64> {
        let (lo, hi) = self.bounding_box();
        let mut count = 0i64;
        for x in lo.x + 1..hi.x {
            for y in lo.y + 1..hi.y {
                let p = LatticePoint::new(x, y);
                let inside = self
                    .edges()
                    .all(|(a, b)| orient(a, b, p).is_some_and(|t| t > 0));
                if inside {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// SUBDIVIDED form: every boundary lattice point becomes a vertex, so the
    /// vertex count equals [`Polygon::boundary_count`]. Order and orientation
    /// are preserved.
    pub fn subdivide(&self) -> Result<Polygon> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            let a = self.vertices[i];
            let d = self.vertices[(i + 1) % n].checked_sub(a)?;
            let g = d.coord_gcd() as i64;
            let step = LatticePoint::new(d.x / g, d.y / g);
            let mut p = a;
            for _ in 0..g {
                out.push(p);
                p = p.checked_add(step)?;
            }
        }
        Polygon::new(out)
    }

    /// STRICT form: every straight (180°) vertex is dropped.
    pub fn strict_form(&self) -> Result<Polygon> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            let a = self.vertices[(i + n - 1) % n];
            let b = self.vertices[i];
            let c = self.vertices[(i + 1) % n];
            if orient(a, b, c).ok_or(Error::Overflow)? != 0 {
                out.push(b);
            }
        }
        if out.len() < 3 {
            return Err(Error::TooFewVertices(out.len()));
        }
        Polygon::new(out)
    }

    /// True when no vertex has a straight angle (the polygon is its own
    /// STRICT form).
    pub fn is_strict(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[(i + n - 1) % n];
            let b = self.vertices[i];
            let c = self.vertices[(i + 1) % n];
            orient(a, b, c) != Some(0)
        })
    }

    /// Exact point classification against the closed polygon.
    pub fn location(&self, p: LatticePoint) -> Location {
        let mut on_line = false;
        for (a, b) in self.edges() {
            match orient(a, b, p) {
                // Cross product beyond the 128-bit range: only reachable
                // when the query point is astronomically far from the edge.
                None => return Location::Exterior,
                Some(t) if t < 0 => return Location::Exterior,
                Some(0) => {
                    if on_segment(a, b, p) {
                        return Location::Boundary;
                    }
                    on_line = true;
                }
                _ => {}
            }
        }
        // On an edge line but outside its segment: the line supports the
        // polygon, so such a point is outside it.
        if on_line {
            Location::Exterior
        } else {
            Location::Interior
        }
    }

    pub fn contains_interior(&self, p: LatticePoint) -> bool {
        self.location(p) == Location::Interior
    }

    pub fn translate(&self, by: LatticePoint) -> Result<Polygon> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.checked_add(by))
            .collect::<Result<Vec<_>>>()?;
        Polygon::new(vertices)
    }

    /// Edge vectors `V_{i+1} - V_i` in cycle order.
    pub fn edge_vectors(&self) -> Result<Vec<LatticePoint>> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| self.vertices[(i + 1) % n].checked_sub(self.vertices[i]))
            .collect()
    }

    /// Inclusive bounding box as (min corner, max corner).
    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        (
            LatticePoint::new(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            LatticePoint::new(xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

/// Shoelace sum; positive for counterclockwise cycles.
fn shoelace2(vertices: &[LatticePoint]) -> Result<i64> {
    let n = vertices.len();
    let mut sum: i128 = 0;
    for i in 0..n {
        sum = sum
            .checked_add(cross(vertices[i], vertices[(i + 1) % n]))
            .ok_or(Error::Overflow)?;
    }
    i64::try_from(sum).map_err(|_| Error::Overflow)
}

/// Exact closed-segment membership.
pub fn on_segment(a: LatticePoint, b: LatticePoint, p: LatticePoint) -> bool {
    orient(a, b, p) == Some(0)
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// True iff the vertex list, as given, is a counterclockwise strictly convex
/// cycle: every consecutive cross product positive and a single winding.
/// Clockwise input, straight angles, reflex angles and self-wrapping cycles
/// all return false.
pub fn is_strictly_convex(vertices: &[LatticePoint]) -> bool {
    let n = vertices.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        let a = vertices[(i + n - 1) % n];
        let b = vertices[i];
        let c = vertices[(i + 1) % n];
        if b == c {
            return false;
        }
        match orient(a, b, c) {
            Some(t) if t > 0 => {}
            _ => return false,
        }
    }
    let Ok(dirs) = (0..n)
        .map(|i| vertices[(i + 1) % n].checked_sub(vertices[i]))
        .collect::<crate::error::Result<Vec<LatticePoint>>>()
    else {
        return false;
    };
    let wraps = (0..n)
        .filter(|&i| cmp_by_angle(dirs[i], dirs[(i + 1) % n]) == std::cmp::Ordering::Greater)
        .count();
    wraps == 1
}

/// The cycle rotated to start at its lexicographically smallest vertex.
pub fn rotate_to_lex_min(cycle: &[LatticePoint]) -> Vec<LatticePoint> {
    let k = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut out = Vec::with_capacity(cycle.len());
    out.extend_from_slice(&cycle[k..]);
    out.extend_from_slice(&cycle[..k]);
    out
}

/// True iff the two cycles are equal up to rotation of the starting vertex.
pub fn cycles_equal(a: &[LatticePoint], b: &[LatticePoint]) -> bool {
    a.len() == b.len() && rotate_to_lex_min(a) == rotate_to_lex_min(b)
}
