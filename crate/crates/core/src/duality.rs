//! The dual polygon and the twelve-point identity.
//!
//! For a reflexive polygon `M`, lay every edge vector of `M` out from the
//! origin and mark the lattice point on it nearest to the origin (the
//! primitive vector of the edge). Joining the marked points in edge order
//! gives the dual polygon `M*`. Writing `m` and `m*` for the numbers of
//! boundary lattice points of `M` and `M*`, the twelve-point theorem states
//! `m + m* = 12`.

use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::polygon::Polygon;
use crate::reflexive::ReflexivePolygon;

/// Outcome of the dual construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualResult {
    /// The dual polygon, STRICT form, vertices being the primitive edge
    /// vectors of the source placed at the origin.
    pub dual: Polygon,
    /// Boundary lattice points of the source.
    pub m: i64,
    /// Boundary lattice points of the dual.
    pub m_star: i64,
}

/// The `m + m*` report of [`verify_twelve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwelveReport {
    pub m: i64,
    pub m_star: i64,
    pub sum: i64,
    pub ok: bool,
}

/// The lattice point on the ray of `v` nearest to the origin: `v` divided by
/// the gcd of its coordinates.
pub fn primitive_vector(v: LatticePoint) -> Result<LatticePoint> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = v.coord_gcd() as i64;
    Ok(LatticePoint::new(v.x / g, v.y / g))
}

/// Dual of a polygon given in either vertex form.
///
/// Consecutive equal primitive vectors (which arise exactly from the extra
/// straight vertices of the SUBDIVIDED form) are merged, so subdividing the
/// input does not change the dual.
pub fn dual_of_polygon(polygon: &Polygon) -> Result<Polygon> {
    let mut marks: Vec<LatticePoint> = Vec::with_capacity(polygon.len());
    for edge in polygon.edge_vectors()? {
        let m = primitive_vector(edge)?;
        if marks.last() == Some(&m) {
            continue;
        }
        marks.push(m);
    }
    if marks.len() > 1 && marks.first() == marks.last() {
        marks.pop();
    }
    Polygon::new(marks)
}

/// The dual polygon together with both boundary counts.
pub fn dual_polygon(m: &ReflexivePolygon) -> Result<DualResult> {
    let dual = dual_of_polygon(m.strict())?;
    let m_star = dual.boundary_count()?;
    Ok(DualResult {
        dual,
        m: m.boundary_count(),
        m_star,
    })
}

/// Evaluates `m + m* = 12` for a reflexive polygon.
pub fn verify_twelve(m: &ReflexivePolygon) -> Result<TwelveReport> {
    let d = dual_polygon(m)?;
    let sum = d.m.checked_add(d.m_star).ok_or(Error::Overflow)?;
    Ok(TwelveReport {
        m: d.m,
        m_star: d.m_star,
        sum,
        ok: sum == 12,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::cycles_equal;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn refl(pts: &[(i64, i64)]) -> ReflexivePolygon {
        ReflexivePolygon::from_vertices(pts.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
    }

    #[test]
    fn primitive_vector_examples() {
        assert_eq!(primitive_vector(p(2, 0)).unwrap(), p(1, 0));
        assert_eq!(primitive_vector(p(-3, 3)).unwrap(), p(-1, 1));
        assert_eq!(primitive_vector(p(2, 1)).unwrap(), p(2, 1));
        assert_eq!(primitive_vector(p(0, 0)), Err(Error::ZeroVector));
    }

    #[test]
    fn square_dualizes_to_diamond() {
        let d = dual_polygon(&refl(&[(1, 1), (-1, 1), (-1, -1), (1, -1)])).unwrap();
        assert_eq!(d.m, 8);
        assert_eq!(d.m_star, 4);
        assert!(cycles_equal(
            d.dual.vertices(),
            &[p(-1, 0), p(0, -1), p(1, 0), p(0, 1)]
        ));
        // The gcd count agrees with the brute-force scan on the dual.
        assert_eq!(d.m_star, d.dual.boundary_count_scan().unwrap());
    }

    #[test]
    fn diamond_dualizes_to_square() {
        let d = dual_polygon(&refl(&[(1, 0), (0, 1), (-1, 0), (0, -1)])).unwrap();
        assert_eq!(d.m, 4);
        assert_eq!(d.m_star, 8);
        assert!(cycles_equal(
            d.dual.vertices(),
            &[p(-1, 1), p(-1, -1), p(1, -1), p(1, 1)]
        ));
    }

    #[test]
    fn small_triangle_dualizes_to_wide_triangle() {
        let d = dual_polygon(&refl(&[(-1, -1), (1, 0), (0, 1)])).unwrap();
        assert_eq!(d.m, 3);
        assert_eq!(d.m_star, 9);
        assert!(cycles_equal(
            d.dual.vertices(),
            &[p(2, 1), p(-1, 1), p(-1, -2)]
        ));
        assert_eq!(d.m_star, d.dual.boundary_count_scan().unwrap());
    }

    #[test]
    fn verify_twelve_examples() {
        let check = |pts: &[(i64, i64)], m: i64, m_star: i64| {
            let rep = verify_twelve(&refl(pts)).unwrap();
            assert_eq!((rep.m, rep.m_star, rep.sum, rep.ok), (m, m_star, 12, true));
        };
        check(&[(1, 1), (-1, 1), (-1, -1), (1, -1)], 8, 4);
        check(&[(-1, -1), (2, -1), (-1, 2)], 9, 3);
        check(&[(-1, -1), (1, 0), (0, 1)], 3, 9);
    }

    #[test]
    fn dual_unchanged_by_subdividing() {
        for pts in [
            vec![(1, 1), (-1, 1), (-1, -1), (1, -1)],
            vec![(-1, -1), (2, -1), (-1, 2)],
            vec![(1, 0), (0, 1), (-1, 0), (0, -1)],
        ] {
            let m = refl(&pts);
            let from_strict = dual_of_polygon(m.strict()).unwrap();
            let from_subdivided = dual_of_polygon(m.subdivided()).unwrap();
            assert_eq!(from_strict, from_subdivided);
        }
    }

    #[test]
    fn dual_contains_origin_and_is_reflexive() {
        for pts in [
            vec![(1, 1), (-1, 1), (-1, -1), (1, -1)],
            vec![(-1, -1), (2, -1), (-1, 2)],
            vec![(-1, -1), (1, 0), (0, 1)],
        ] {
            let d = dual_polygon(&refl(&pts)).unwrap();
            assert!(d.dual.contains_interior(LatticePoint::new(0, 0)));
            assert_eq!(d.dual.interior_count().unwrap(), 1);
            assert!(crate::polygon::is_strictly_convex(d.dual.vertices()));
        }
    }
}
