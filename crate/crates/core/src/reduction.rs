//! The elementary-operation calculus on reflexive polygons.
//!
//! Work happens on the SUBDIVIDED vertex cycle. A triangle is *simple* when
//! it contains no lattice points besides its vertices, which by Pick's
//! formula is exactly doubled area 1. An *elementary operation* removes a
//! vertex whose neighbor triangle is simple (an ear), or inverts that by
//! inserting such a vertex. Either direction changes the boundary count by
//! exactly one while the dual's boundary count moves the opposite way, so
//! `m + m*` is conserved.
//!
//! [`reduce_to_parallelogram`] drives any reflexive polygon down to a
//! parallelogram with `m = 4` whose diagonals meet at the origin: it removes
//! ears while possible, then finishes the three terminal shapes (the
//! parallelogram itself, the one-straight-angle quadrilateral, and the
//! three-point triangle) with short fixed series of insertions and removals.
//! Every step is recorded in a replayable [`ReductionTrace`].

use crate::duality::dual_polygon;
use crate::error::{Error, OpViolation, Result};
use crate::point::{orient, LatticePoint, ORIGIN};
use crate::polygon::{on_segment, Polygon};
use crate::reflexive::ReflexivePolygon;

/// Direction of an elementary operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Remove,
    Insert,
}

/// One elementary operation: the vertex removed at `index` of the SUBDIVIDED
/// cycle, or the vertex inserted into the slot between `index` and
/// `index + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementaryOp {
    pub kind: OpKind,
    pub index: usize,
    pub point: LatticePoint,
}

/// An applied operation together with the counts it left behind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    pub op: ElementaryOp,
    pub m_after: i64,
    pub m_star_after: i64,
}

/// A replayable certificate: the full initial and final polygons plus the
/// operation list. Intermediate polygons are recomputed on replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: ReflexivePolygon,
    pub steps: Vec<TraceStep>,
    pub final_polygon: ReflexivePolygon,
}

/// What removing one ear does to the dual.
///
/// Removing the simple triangle `A1 A2 A3` from the polygon glues the simple
/// triangle `A12 A13 A23` onto the dual, where `A_kl` is the vector from
/// `A_k` to `A_l` placed at the origin. The two displaced dual boundary
/// points land on the new dual boundary: `A12` on the segment from `An1` to
/// `A13`, and `A23` on the segment from `A13` to `A34`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualTransitionReport {
    pub m_before: i64,
    pub m_after: i64,
    pub m_star_before: i64,
    pub m_star_after: i64,
    /// `(A12, A13, A23)`.
    pub added_dual_triangle: (LatticePoint, LatticePoint, LatticePoint),
    pub collinearity_ok: bool,
    pub simple_ok: bool,
}

impl DualTransitionReport {
    /// The conserved-sum bookkeeping: `m` drops by one, `m*` rises by one.
    pub fn deltas_ok(&self) -> bool {
        self.m_after == self.m_before - 1 && self.m_star_after == self.m_star_before + 1
    }

    pub fn all_ok(&self) -> bool {
        self.deltas_ok() && self.collinearity_ok && self.simple_ok
    }
}

/// True iff the triangle contains no lattice points other than its vertices,
/// i.e. its doubled area is exactly 1. Degenerate triples are not simple.
pub fn is_simple_triangle(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> bool {
    // An out-of-range doubled area is enormous, hence not 1.
    matches!(orient(a, b, c), Some(1) | Some(-1))
}

/// Outcome of attempting an operation: hard errors propagate, precondition
/// failures carry the violated clause.
type Attempt = Result<std::result::Result<ReflexivePolygon, OpViolation>>;

fn try_remove(m: &ReflexivePolygon, index: usize) -> Attempt {
    let sub = m.subdivided().vertices();
    let n = sub.len();
    if index >= n {
        return Err(Error::IndexOutOfRange { index, len: n });
    }
    let prev = sub[(index + n - 1) % n];
    let vertex = sub[index];
    let next = sub[(index + 1) % n];
    if !is_simple_triangle(prev, vertex, next) {
        return Ok(Err(OpViolation::EarNotSimple));
    }
    let mut rest = sub.to_vec();
    rest.remove(index);
    let polygon = match Polygon::new(rest) {
        Ok(p) => p,
        Err(Error::TooFewVertices(_)) | Err(Error::CollinearVertices) => {
            return Ok(Err(OpViolation::ResultDegenerate))
        }
        Err(Error::NotConvex { .. })
        | Err(Error::SelfWrapping)
        | Err(Error::RepeatedVertex(_)) => return Ok(Err(OpViolation::ResultNotConvex)),
        Err(e) => return Err(e),
    };
    if !polygon.contains_interior(ORIGIN) {
        return Ok(Err(OpViolation::OriginNotInterior));
    }
    let out = match ReflexivePolygon::from_polygon(polygon) {
        Ok(p) => p,
        Err(Error::NotReflexive { .. }) => return Ok(Err(OpViolation::OriginNotInterior)),
        Err(e) => return Err(e),
    };
    if out.boundary_count() != m.boundary_count() - 1 {
        return Err(Error::ContractViolation(format!(
            "ear removal changed the boundary count from {} to {}",
            m.boundary_count(),
            out.boundary_count()
        )));
    }
    Ok(Ok(out))
}

fn try_insert(m: &ReflexivePolygon, index: usize, point: LatticePoint) -> Attempt {
    let sub = m.subdivided().vertices();
    let n = sub.len();
    if index >= n {
        return Err(Error::IndexOutOfRange { index, len: n });
    }
    if m.subdivided().location(point) == crate::polygon::Location::Boundary {
        return Ok(Err(OpViolation::PointOnBoundary));
    }
    let a = sub[index];
    let b = sub[(index + 1) % n];
    if !is_simple_triangle(a, point, b) {
        return Ok(Err(OpViolation::EarNotSimple));
    }
    let mut grown = sub.to_vec();
    grown.insert(index + 1, point);
    let polygon = match Polygon::new(grown) {
        Ok(p) => p,
        Err(Error::TooFewVertices(_)) | Err(Error::CollinearVertices) => {
            return Ok(Err(OpViolation::ResultDegenerate))
        }
        Err(Error::NotConvex { .. })
        | Err(Error::SelfWrapping)
        | Err(Error::RepeatedVertex(_)) => return Ok(Err(OpViolation::ResultNotConvex)),
        Err(e) => return Err(e),
    };
    if !polygon.contains_interior(ORIGIN) {
        return Ok(Err(OpViolation::OriginNotInterior));
    }
    let out = match ReflexivePolygon::from_polygon(polygon) {
        Ok(p) => p,
        Err(Error::NotReflexive { .. }) => return Ok(Err(OpViolation::OriginNotInterior)),
        Err(e) => return Err(e),
    };
    if out.boundary_count() != m.boundary_count() + 1 {
        return Err(Error::ContractViolation(format!(
            "vertex insertion changed the boundary count from {} to {}",
            m.boundary_count(),
            out.boundary_count()
        )));
    }
    Ok(Ok(out))
}

/// True iff removing vertex `index` of the SUBDIVIDED cycle is a legal
/// elementary operation: the neighbor triangle is simple, the remainder is a
/// valid convex polygon, and the origin stays strictly interior.
pub fn ear_removable(m: &ReflexivePolygon, index: usize) -> Result<bool> {
    Ok(try_remove(m, index)?.is_ok())
}

/// Removes the ear at `index`, reporting the violated clause on failure.
pub fn remove_ear(m: &ReflexivePolygon, index: usize) -> Result<ReflexivePolygon> {
    try_remove(m, index)?.map_err(Error::InvalidOperation)
}

/// Inserts `point` between vertices `index` and `index + 1` of the
/// SUBDIVIDED cycle; the inverse of [`remove_ear`].
pub fn insert_vertex(
    m: &ReflexivePolygon,
    index: usize,
    point: LatticePoint,
) -> Result<ReflexivePolygon> {
    try_insert(m, index, point)?.map_err(Error::InvalidOperation)
}

/// Smallest SUBDIVIDED index whose ear is removable, if any.
pub fn find_removable_ear(m: &ReflexivePolygon) -> Result<Option<usize>> {
    for index in 0..m.subdivided().len() {
        if ear_removable(m, index)? {
            return Ok(Some(index));
        }
    }
    Ok(None)
}

/// Removes the ear at `index` and checks what that does to the dual: both
/// counts move by exactly one in opposite directions, the dual gains the
/// simple triangle `A12 A13 A23`, and the displaced dual boundary points lie
/// on the new dual boundary segments.
pub fn check_dual_transition(m: &ReflexivePolygon, index: usize) -> Result<DualTransitionReport> {
    let removed = try_remove(m, index)?.map_err(Error::InvalidOperation)?;
    let before = dual_polygon(m)?;
    let after = dual_polygon(&removed)?;

    let sub = m.subdivided().vertices();
    let n = sub.len();
    let a_n = sub[(index + n - 2) % n];
    let a1 = sub[(index + n - 1) % n];
    let a2 = sub[index];
    let a3 = sub[(index + 1) % n];
    let a4 = sub[(index + 2) % n];

    let a12 = a2.checked_sub(a1)?;
    let a23 = a3.checked_sub(a2)?;
    let a13 = a3.checked_sub(a1)?;
    let an1 = a1.checked_sub(a_n)?;
    let a34 = a4.checked_sub(a3)?;

    let simple_ok = is_simple_triangle(a12, a13, a23);
    let collinearity_ok = on_segment(an1, a13, a12) && on_segment(a13, a34, a23);

    Ok(DualTransitionReport {
        m_before: before.m,
        m_after: after.m,
        m_star_before: before.m_star,
        m_star_after: after.m_star,
        added_dual_triangle: (a12, a13, a23),
        collinearity_ok,
        simple_ok,
    })
}

/// True iff the polygon is a strict quadrilateral with `m = 4` whose
/// diagonals meet at the origin, i.e. opposite vertices are negatives.
pub fn is_centered_parallelogram(m: &ReflexivePolygon) -> bool {
    let sub = m.subdivided().vertices();
    sub.len() == 4
        && m.subdivided().is_strict()
        && sub[2].checked_neg() == Ok(sub[0])
        && sub[3].checked_neg() == Ok(sub[1])
}

fn require_parallelogram(m: &ReflexivePolygon) -> Result<()> {
    if is_centered_parallelogram(m) {
        Ok(())
    } else {
        Err(Error::ContractViolation(format!(
            "terminal polygon {:?} is not a parallelogram centered on the origin",
            m.strict().vertices()
        )))
    }
}

/// Reduces a reflexive polygon to a centered parallelogram by elementary
/// operations and returns the replayable trace.
///
/// Ears are removed at the smallest removable SUBDIVIDED index until none is
/// left; the terminal shape is then finished by the fixed series for the
/// straight-angle quadrilateral or the triangle, when it is not already the
/// parallelogram. Every recorded step re-checks `m + m* = 12`; any failure
/// of the underlying guarantees surfaces as [`Error::ContractViolation`].
pub fn reduce_to_parallelogram(m: &ReflexivePolygon) -> Result<ReductionTrace> {
    let initial = m.clone();
    let mut current = m.clone();
    let mut steps: Vec<TraceStep> = Vec::new();

    while let Some(index) = find_removable_ear(&current)? {
        let point = current.subdivided().vertices()[index];
        current = remove_ear(&current, index)?;
        record_step(&mut steps, OpKind::Remove, index, point, &current)?;
    }

    let sub = current.subdivided().clone();
    match sub.len() {
        4 if sub.is_strict() => {}
        4 => current = finish_straight_angle_case(current, &mut steps)?,
        3 => current = finish_triangle_case(current, &mut steps)?,
        other => {
            return Err(Error::ContractViolation(format!(
                "no removable ear but boundary count is {other}"
            )))
        }
    }
    require_parallelogram(&current)?;

    Ok(ReductionTrace {
        initial,
        steps,
        final_polygon: current,
    })
}

fn record_step(
    steps: &mut Vec<TraceStep>,
    kind: OpKind,
    index: usize,
    point: LatticePoint,
    after: &ReflexivePolygon,
) -> Result<()> {
    let d = dual_polygon(after)?;
    if d.m + d.m_star != 12 {
        return Err(Error::ContractViolation(format!(
            "m + m* = {} + {} after {:?} of {} at index {}",
            d.m, d.m_star, kind, point, index
        )));
    }
    steps.push(TraceStep {
        op: ElementaryOp { kind, index, point },
        m_after: d.m,
        m_star_after: d.m_star,
    });
    Ok(())
}

/// Index of the edge slot holding `x` and `y` as consecutive vertices, in
/// either order.
fn slot_between(m: &ReflexivePolygon, x: LatticePoint, y: LatticePoint) -> Option<usize> {
    let sub = m.subdivided().vertices();
    let n = sub.len();
    (0..n).find(|&i| {
        let (a, b) = (sub[i], sub[(i + 1) % n]);
        (a == x && b == y) || (a == y && b == x)
    })
}

fn index_of(m: &ReflexivePolygon, x: LatticePoint) -> Option<usize> {
    m.subdivided().vertices().iter().position(|&v| v == x)
}

/// One labeled attempt at a terminal series. `None` means a precondition of
/// some step failed and the caller should try another labeling.
struct SeriesRun {
    current: ReflexivePolygon,
    steps: Vec<TraceStep>,
}

impl SeriesRun {
    fn new(start: &ReflexivePolygon) -> Self {
        Self {
            current: start.clone(),
            steps: Vec::new(),
        }
    }

    fn insert_between(
        &mut self,
        x: LatticePoint,
        y: LatticePoint,
        p: LatticePoint,
    ) -> Result<bool> {
        let Some(slot) = slot_between(&self.current, x, y) else {
            return Ok(false);
        };
        match try_insert(&self.current, slot, p)? {
            Ok(next) => {
                self.current = next;
                record_step(&mut self.steps, OpKind::Insert, slot, p, &self.current)?;
                Ok(true)
            }
            Err(_) => Ok(false),
        }
    }

    fn remove_vertex(&mut self, x: LatticePoint) -> Result<bool> {
        let Some(index) = index_of(&self.current, x) else {
            return Ok(false);
        };
        match try_remove(&self.current, index)? {
            Ok(next) => {
                self.current = next;
                record_step(&mut self.steps, OpKind::Remove, index, x, &self.current)?;
                Ok(true)
            }
            Err(_) => Ok(false),
        }
    }
}

/// Terminal shape with `m = 4` and one straight angle: vertices `A B C D` in
/// cycle order with the straight angle at `C`. With `D' = -D` and `E` the
/// midpoint of `D'B`, the series
/// `ABCD -> AEBCD -> AD'EBCD -> AD'ECD -> AD'CD`
/// (two insertions, two removals) lands in the parallelogram case. Which
/// neighbor of `C` plays `B` is settled by trying both labelings.
fn finish_straight_angle_case(
    start: ReflexivePolygon,
    steps: &mut Vec<TraceStep>,
) -> Result<ReflexivePolygon> {
    let sub = start.subdivided().vertices().to_vec();
    let n = sub.len();
    debug_assert_eq!(n, 4);
    let straight: Vec<usize> = (0..n)
        .filter(|&i| {
            orient(sub[(i + n - 1) % n], sub[i], sub[(i + 1) % n]) == Some(0)
        })
        .collect();
    let [c_idx] = straight[..] else {
        return Err(Error::ContractViolation(format!(
            "expected exactly one straight vertex, found {}",
            straight.len()
        )));
    };

    // C stays in place throughout the series; only A, B, D are handled.
    let a = sub[(c_idx + 2) % 4];
    for (b, d) in [
        (sub[(c_idx + 3) % 4], sub[(c_idx + 1) % 4]),
        (sub[(c_idx + 1) % 4], sub[(c_idx + 3) % 4]),
    ] {
        let d_refl = d.checked_neg()?;
        let Some(e) = lattice_midpoint(d_refl, b)? else {
            continue;
        };
        let mut run = SeriesRun::new(&start);
        let done = run.insert_between(a, b, e)?
            && run.insert_between(a, e, d_refl)?
            && run.remove_vertex(b)?
            && run.remove_vertex(e)?
            && is_centered_parallelogram(&run.current);
        if done {
            steps.extend(run.steps);
            return Ok(run.current);
        }
    }
    Err(Error::ContractViolation(
        "straight-angle case: no labeling admits the insertion series \
         (or the midpoint of D'B is not a lattice point)"
            .into(),
    ))
}

/// Terminal triangle `A B C` with `m = 3`: with `A' = -A` and `C' = -C`, the
/// series `ABC -> AC'BC -> AC'BA'C -> AC'A'C` (two insertions, one removal)
/// produces the parallelogram directly.
fn finish_triangle_case(
    start: ReflexivePolygon,
    steps: &mut Vec<TraceStep>,
) -> Result<ReflexivePolygon> {
    let sub = start.subdivided().vertices().to_vec();
    debug_assert_eq!(sub.len(), 3);
    for rot in 0..3 {
        let a = sub[rot];
        let b = sub[(rot + 1) % 3];
        let c = sub[(rot + 2) % 3];
        let a_refl = a.checked_neg()?;
        let c_refl = c.checked_neg()?;
        let mut run = SeriesRun::new(&start);
        let done = run.insert_between(a, b, c_refl)?
            && run.insert_between(b, c, a_refl)?
            && run.remove_vertex(b)?
            && is_centered_parallelogram(&run.current);
        if done {
            steps.extend(run.steps);
            return Ok(run.current);
        }
    }
    Err(Error::ContractViolation(
        "triangle case: no labeling admits the insertion series".into(),
    ))
}

fn lattice_midpoint(a: LatticePoint, b: LatticePoint) -> Result<Option<LatticePoint>> {
    let sx = i128::from(a.x) + i128::from(b.x);
    let sy = i128::from(a.y) + i128::from(b.y);
    if sx.rem_euclid(2) != 0 || sy.rem_euclid(2) != 0 {
        return Ok(None);
    }
    let x = i64::try_from(sx / 2).map_err(|_| Error::Overflow)?;
    let y = i64::try_from(sy / 2).map_err(|_| Error::Overflow)?;
    Ok(Some(LatticePoint::new(x, y)))
}

impl ReductionTrace {
    /// Re-verifies the trace from scratch: replays each operation through
    /// the ordinary precondition checks, re-derives `m` and `m*` after each
    /// step, and confirms the recorded counts, the conserved sum, the final
    /// polygon, and the parallelogram shape.
    pub fn replay(&self) -> Result<()> {
        let mut current = self.initial.clone();
        for (k, step) in self.steps.iter().enumerate() {
            match step.op.kind {
                OpKind::Remove => {
                    let sub = current.subdivided().vertices();
                    if sub.get(step.op.index) != Some(&step.op.point) {
                        return Err(Error::ContractViolation(format!(
                            "step {k}: recorded removal of {} at index {} does not match the cycle",
                            step.op.point, step.op.index
                        )));
                    }
                    current = remove_ear(&current, step.op.index)?;
                }
                OpKind::Insert => {
                    current = insert_vertex(&current, step.op.index, step.op.point)?;
                }
            }
            let d = dual_polygon(&current)?;
            if d.m != step.m_after || d.m_star != step.m_star_after {
                return Err(Error::ContractViolation(format!(
                    "step {k}: recorded counts ({}, {}) but replay found ({}, {})",
                    step.m_after, step.m_star_after, d.m, d.m_star
                )));
            }
            if d.m + d.m_star != 12 {
                return Err(Error::ContractViolation(format!(
                    "step {k}: m + m* = {}",
                    d.m + d.m_star
                )));
            }
        }
        if current != self.final_polygon {
            return Err(Error::ContractViolation(
                "replay did not reproduce the recorded final polygon".into(),
            ));
        }
        require_parallelogram(&self.final_polygon)
    }
}
