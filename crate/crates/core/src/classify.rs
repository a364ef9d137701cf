//! Unimodular equivalence, canonical forms, and the census of reflexive
//! polygons.
//!
//! Two reflexive polygons are equivalent when an affine map of the lattice
//! with matrix determinant ±1 carries one vertex cycle onto the other. Both
//! sides being origin-normalized, the translation part is always zero here.
//!
//! [`normal_form`] picks a canonical representative by anchoring a frame to
//! each ordered boundary edge: the map that sends the edge direction to
//! `(1, 0)`, in both determinant signs, sheared so the first endpoint's
//! x-coordinate is reduced modulo its (nonzero) height. The frame depends
//! only on the edge geometry relative to the origin, so equivalent polygons
//! generate the same candidate image set and the lexicographically smallest
//! image is a true class invariant.
//!
//! [`enumerate_polygons`] walks every strictly convex vertex cycle in a
//! coordinate box whose unique interior lattice point is the origin, by
//! depth-first search over lattice points in angular order with doubled-area
//! and convexity pruning. Grouping by normal form yields the 16 equivalence
//! classes.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::duality::dual_polygon;
use crate::error::{Error, Result};
use crate::point::{cmp_by_angle, cross, orient, LatticePoint, ORIGIN};
use crate::polygon::rotate_to_lex_min;
use crate::reflexive::ReflexivePolygon;

/// An affine lattice symmetry: `p -> M p + t` with `det M = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnimodularMap {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub t: LatticePoint,
}

impl UnimodularMap {
    pub fn new(a: i64, b: i64, c: i64, d: i64, t: LatticePoint) -> Result<Self> {
        let det = i128::from(a) * i128::from(d) - i128::from(b) * i128::from(c);
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular {
                det: i64::try_from(det).unwrap_or(i64::MAX),
            });
        }
        Ok(Self { a, b, c, d, t })
    }

    /// Linear part only (`t = 0`).
    pub fn linear(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a, b, c, d, ORIGIN)
    }

    pub fn identity() -> Self {
        Self {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
            t: ORIGIN,
        }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply_point(&self, p: LatticePoint) -> Result<LatticePoint> {
        let x = i128::from(self.a) * i128::from(p.x)
            + i128::from(self.b) * i128::from(p.y)
            + i128::from(self.t.x);
        let y = i128::from(self.c) * i128::from(p.x)
            + i128::from(self.d) * i128::from(p.y)
            + i128::from(self.t.y);
        Ok(LatticePoint::new(
            i64::try_from(x).map_err(|_| Error::Overflow)?,
            i64::try_from(y).map_err(|_| Error::Overflow)?,
        ))
    }
}

/// One equivalence class of the census: the canonical representative plus
/// its invariant triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub representative: ReflexivePolygon,
    pub m: i64,
    pub m_star: i64,
    pub area2: i64,
}

/// Maps every vertex and revalidates; the interior point moves back to the
/// origin and the orientation back to counterclockwise.
pub fn apply_unimodular(u: &UnimodularMap, m: &ReflexivePolygon) -> Result<ReflexivePolygon> {
    let vertices = m
        .strict()
        .vertices()
        .iter()
        .map(|&v| u.apply_point(v))
        .collect::<Result<Vec<_>>>()?;
    ReflexivePolygon::from_vertices(vertices)
}

/// Candidate matrices that can witness an equivalence `m1 -> m2`: the
/// linear map is pinned down by where the first strict edge of `m1` goes,
/// and any witness must send it to some ordered pair of adjacent strict
/// vertices of `m2`.
fn candidate_maps(m1: &ReflexivePolygon, m2: &ReflexivePolygon) -> Result<Vec<UnimodularMap>> {
    let v = m1.strict().vertices();
    let w = m2.strict().vertices();
    let (v0, v1) = (v[0], v[1]);
    let den = cross(v0, v1);
    debug_assert!(den > 0);
    let mut out = Vec::new();
    let n = w.len();
    for j in 0..n {
        for (p, q) in [(w[j], w[(j + 1) % n]), (w[(j + 1) % n], w[j])] {
            // Solve M v0 = p, M v1 = q by Cramer's rule; keep exact integer
            // solutions with determinant ±1.
            let a_num = i128::from(p.x) * i128::from(v1.y) - i128::from(q.x) * i128::from(v0.y);
            let b_num = i128::from(v0.x) * i128::from(q.x) - i128::from(v1.x) * i128::from(p.x);
            let c_num = i128::from(p.y) * i128::from(v1.y) - i128::from(q.y) * i128::from(v0.y);
            let d_num = i128::from(v0.x) * i128::from(q.y) - i128::from(v1.x) * i128::from(p.y);
            if [a_num, b_num, c_num, d_num]
                .iter()
                .any(|n| n.rem_euclid(den) != 0)
            {
                continue;
            }
            let entry = |n: i128| i64::try_from(n / den).map_err(|_| Error::Overflow);
            match UnimodularMap::linear(entry(a_num)?, entry(b_num)?, entry(c_num)?, entry(d_num)?)
            {
                Ok(u) => out.push(u),
                Err(Error::NotUnimodular { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// True iff some unimodular map carries one vertex cycle onto the other.
pub fn are_equivalent(m1: &ReflexivePolygon, m2: &ReflexivePolygon) -> Result<bool> {
    if m1.boundary_count() != m2.boundary_count()
        || m1.area2() != m2.area2()
        || m1.strict().len() != m2.strict().len()
    {
        return Ok(false);
    }
    for u in candidate_maps(m1, m2)? {
        let image = apply_unimodular(&u, m1)?;
        if image == *m2 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The canonical image of `m` anchored at one ordered edge `(p, q)` with the
/// requested determinant sign. See the module docs for why this anchoring
/// makes the candidate set a class invariant.
fn edge_frame(p: LatticePoint, q: LatticePoint, flip: bool) -> Result<UnimodularMap> {
    let d = q.checked_sub(p)?;
    let g = d.coord_gcd() as i64;
    let (dx, dy) = (d.x / g, d.y / g);
    // Bezout coefficients: u*dx + v*dy = 1.
    let (mut u, mut v) = bezout(dx, dy);
    debug_assert_eq!(u * dx + v * dy, 1);
    // Rows: (u, v) on top sends dhat to (1, _); the second row kills it.
    let (r2x, r2y) = if flip { (dy, -dx) } else { (-dy, dx) };
    // Shear the top row so the image of p has x in [0, |y|).
    let y0 = i128::from(r2x) * i128::from(p.x) + i128::from(r2y) * i128::from(p.y);
    debug_assert_ne!(y0, 0, "edge line through the origin");
    let x0 = i128::from(u) * i128::from(p.x) + i128::from(v) * i128::from(p.y);
    let s = (x0.rem_euclid(y0.abs()) - x0) / y0;
    u = i64::try_from(i128::from(u) + s * i128::from(r2x)).map_err(|_| Error::Overflow)?;
    v = i64::try_from(i128::from(v) + s * i128::from(r2y)).map_err(|_| Error::Overflow)?;
    UnimodularMap::linear(u, v, r2x, r2y)
}

/// Canonical representative of the equivalence class of `m`.
///
/// Among the images of `m` under all edge frames (every ordered strict edge,
/// both determinant signs), returns the one whose vertex list, rotated to
/// start at the lexicographically smallest vertex, is smallest. Idempotent,
/// and equal for equivalent inputs.
pub fn normal_form(m: &ReflexivePolygon) -> Result<ReflexivePolygon> {
    let verts = m.strict().vertices();
    let n = verts.len();
    let mut best: Option<Vec<LatticePoint>> = None;
    for i in 0..n {
        for (p, q) in [
            (verts[i], verts[(i + 1) % n]),
            (verts[(i + 1) % n], verts[i]),
        ] {
            for flip in [false, true] {
                let u = edge_frame(p, q, flip)?;
                let image = apply_unimodular(&u, m)?;
                let cycle = rotate_to_lex_min(image.strict().vertices());
                if best.as_ref().is_none_or(|b| cycle < *b) {
                    best = Some(cycle);
                }
            }
        }
    }
    let cycle = best.expect("strict polygon has at least three edges");
    ReflexivePolygon::from_vertices(cycle)
}

/// Extended gcd for coprime inputs: returns `(u, v)` with `u*a + v*b = 1`.
fn bezout(a: i64, b: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    // gcd(a, b) = ±1 for primitive directions; normalize the sign.
    if r0 < 0 {
        (-s0, -t0)
    } else {
        (s0, t0)
    }
}

/// Largest doubled area of any reflexive polygon; everything bigger is
/// pruned during enumeration and re-confirmed by the census itself.
const MAX_AREA2: i64 = 9;

/// Every strictly convex lattice polygon with vertices in `[-bound, bound]²`
/// whose unique interior lattice point is the origin, each exactly once
/// (vertex cycles are discovered in angular order from their angularly
/// smallest vertex).
pub fn enumerate_polygons(bound: i64) -> Result<Vec<ReflexivePolygon>> {
    let mut points = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if x != 0 || y != 0 {
                points.push(LatticePoint::new(x, y));
            }
        }
    }
    // Angular order; same-ray points by distance. No polygon uses two points
    // of one ray, so the tie-break only fixes the iteration order.
    points.sort_by(|a, b| {
        cmp_by_angle(*a, *b).then_with(|| (a.x.abs() + a.y.abs()).cmp(&(b.x.abs() + b.y.abs())))
    });

    let mut found = Vec::new();
    let mut chain: Vec<usize> = Vec::new();
    for start in 0..points.len() {
        chain.push(start);
        extend_chain(&points, &mut chain, 0, &mut found)?;
        chain.pop();
    }
    Ok(found)
}

fn extend_chain(
    points: &[LatticePoint],
    chain: &mut Vec<usize>,
    fan: i64,
    found: &mut Vec<ReflexivePolygon>,
) -> Result<()> {
    let last = points[*chain.last().unwrap()];
    let first = points[chain[0]];
    for next in chain.last().unwrap() + 1..points.len() {
        let p = points[next];
        let c1 = cross(last, p);
        if c1 <= 0 {
            continue;
        }
        // Closing still needs a positive fan triangle, so keep one unit.
        let c1 = i64::try_from(c1).map_err(|_| Error::Overflow)?;
        if fan + c1 + 1 > MAX_AREA2 {
            continue;
        }
        if chain.len() >= 2 {
            let before = points[chain[chain.len() - 2]];
            if orient(before, last, p) <= Some(0) {
                continue;
            }
        }
        chain.push(next);
        // Try closing the cycle at p.
        if chain.len() >= 3 {
            let c2 = cross(p, first);
            if c2 > 0 {
                let total = fan + c1 + i64::try_from(c2).map_err(|_| Error::Overflow)?;
                if total <= MAX_AREA2
                    && orient(last, p, first) > Some(0)
                    && orient(p, first, points[chain[1]]) > Some(0)
                {
                    try_collect(points, chain, total, found)?;
                }
            }
        }
        extend_chain(points, chain, fan + c1, found)?;
        chain.pop();
    }
    Ok(())
}

fn try_collect(
    points: &[LatticePoint],
    chain: &[usize],
    area2: i64,
    found: &mut Vec<ReflexivePolygon>,
) -> Result<()> {
    let vertices: Vec<LatticePoint> = chain.iter().map(|&i| points[i]).collect();
    // Reflexive means boundary count equals doubled area (Pick with I = 1).
    let mut boundary = 0i64;
    let n = vertices.len();
    for i in 0..n {
        boundary += vertices[(i + 1) % n].checked_sub(vertices[i])?.coord_gcd() as i64;
    }
    if boundary != area2 {
        return Ok(());
    }
    match ReflexivePolygon::from_vertices(vertices) {
        Ok(p) => {
            found.push(p);
            Ok(())
        }
        Err(Error::NotReflexive { .. }) => Ok(()),
        Err(e) => Err(e),
    }
}

/// The census: enumerated polygons grouped by normal form, sorted by
/// `(m, doubled area, representative vertices)`.
pub fn enumerate_reflexive(bound: i64) -> Result<Vec<EquivalenceClass>> {
    let mut by_rep: BTreeMap<Vec<LatticePoint>, ReflexivePolygon> = BTreeMap::new();
    for poly in enumerate_polygons(bound)? {
        let rep = normal_form(&poly)?;
        by_rep
            .entry(rep.strict().vertices().to_vec())
            .or_insert(rep);
    }
    let mut classes = Vec::with_capacity(by_rep.len());
    for (_, representative) in by_rep {
        let dual = dual_polygon(&representative)?;
        classes.push(EquivalenceClass {
            m: representative.boundary_count(),
            m_star: dual.m_star,
            area2: representative.area2(),
            representative,
        });
    }
    classes.sort_by(|a, b| {
        (a.m, a.area2, a.representative.strict().vertices())
            .cmp(&(b.m, b.area2, b.representative.strict().vertices()))
    });
    Ok(classes)
}

/// SplitMix64 stream; fixed here so seeded corpora are reproducible.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

fn census_representatives() -> Result<&'static [ReflexivePolygon]> {
    static CACHE: OnceLock<std::result::Result<Vec<ReflexivePolygon>, Error>> = OnceLock::new();
    let cached = CACHE.get_or_init(|| {
        enumerate_reflexive(4).map(|cs| cs.into_iter().map(|c| c.representative).collect())
    });
    match cached {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}

/// A seeded random reflexive polygon: one census representative pushed
/// through `steps` random unit shears and sign flips. The same seed always
/// produces the same polygon (the stream is SplitMix64).
pub fn random_reflexive(seed: u64, steps: u32) -> Result<ReflexivePolygon> {
    let reps = census_representatives()?;
    let mut rng = SplitMix64::new(seed);
    let mut poly = reps[(rng.next() % reps.len() as u64) as usize].clone();
    for _ in 0..steps {
        let u = match rng.next() % 6 {
            0 => UnimodularMap::linear(1, 1, 0, 1),
            1 => UnimodularMap::linear(1, -1, 0, 1),
            2 => UnimodularMap::linear(1, 0, 1, 1),
            3 => UnimodularMap::linear(1, 0, -1, 1),
            4 => UnimodularMap::linear(-1, 0, 0, -1),
            _ => UnimodularMap::linear(-1, 0, 0, 1),
        }
        .expect("fixed generators are unimodular");
        poly = apply_unimodular(&u, &poly)?;
    }
    Ok(poly)
}
