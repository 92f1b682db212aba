//! The eight-variable rate polytope behind the partial decode-and-forward
//! secrecy region, its weighted-sum linear programs, and two-dimensional
//! convex hulls of achievable `(R1, R2)` points.
//!
//! The variables, in index order, are the four message rates
//! `R10, R20, R12, R21` and the four sacrificed (binning) rates
//! `Rb10, Rb20, Rb12, Rb21` spent on confusing the eavesdropper. The
//! projection onto `(R1, R2) = (R10 + R12, R20 + R21)` is traced by
//! maximizing weighted sums over a fan of directions.

use crate::error::{Error, Result};
use crate::simplex::{self, LpOutcome, Rel};

/// Number of rate variables in the constraint system.
pub const NUM_VARS: usize = 8;

/// Display names of the eight rate variables, in index order.
pub const VAR_NAMES: [&str; NUM_VARS] = [
    "R10", "R20", "R12", "R21", "Rb10", "Rb20", "Rb12", "Rb21",
];

const R10: usize = 0;
const R20: usize = 1;
const R12: usize = 2;
const R21: usize = 3;
const RB10: usize = 4;
const RB20: usize = 5;
const RB12: usize = 6;
const RB21: usize = 7;

/// Area tolerance below which three hull points count as collinear.
const COLLINEAR_EPS: f64 = 1e-10;
/// Support-value improvement below which boundary refinement stops.
const REFINE_EPS: f64 = 1e-9;

/// Constraint relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

/// One linear constraint over the eight rate variables.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: [f64; NUM_VARS],
    pub relation: Relation,
    pub rhs: f64,
}

/// A linear constraint system over the eight rate variables, with implicit
/// non-negativity bounds on every variable.
#[derive(Debug, Clone)]
pub struct RatePolytope {
    constraints: Vec<Constraint>,
}

impl RatePolytope {
    pub fn new(constraints: Vec<Constraint>) -> Self {
        Self { constraints }
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }
}

/// The ten mutual-information constants parameterizing the constraint system.
///
/// `a1..a5` bound message+binning rates through the main receiver and the
/// inter-user links, `a6` is the secrecy sum-rate margin (and may be
/// negative), `b1..b4` are the eavesdropper-side binning bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MutualInfoBundle {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
    pub a6: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub b4: f64,
}

impl MutualInfoBundle {
    pub fn validate(&self) -> Result<()> {
        let named = [
            ("a1", self.a1),
            ("a2", self.a2),
            ("a3", self.a3),
            ("a4", self.a4),
            ("a5", self.a5),
            ("b1", self.b1),
            ("b2", self.b2),
            ("b3", self.b3),
            ("b4", self.b4),
        ];
        for (name, v) in named {
            if !v.is_finite() || v < -1e-12 {
                return Err(Error::Validation(format!(
                    "bundle constant {name} = {v} must be finite and non-negative"
                )));
            }
        }
        if !self.a6.is_finite() {
            return Err(Error::Validation("bundle constant a6 must be finite".into()));
        }
        if self.b1 > self.b3 + 1e-9 || self.b2 > self.b3 + 1e-9 {
            return Err(Error::Validation(format!(
                "conditioning structure violated: b1 = {}, b2 = {} must not exceed b3 = {}",
                self.b1, self.b2, self.b3
            )));
        }
        Ok(())
    }
}

/// How the total binning rate is tied to the eavesdropper sum constant `b4`.
///
/// The achievable region uses the exact equality; the `AtMost` variant is a
/// diagnostic for comparing against the relaxed system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BinningRelation {
    #[default]
    Equality,
    AtMost,
}

/// Builds the constraint system of the partial decode-and-forward region from
/// a bundle of mutual-information constants.
pub fn build_polytope(m: &MutualInfoBundle) -> Result<RatePolytope> {
    build_polytope_with(m, BinningRelation::Equality)
}

/// [`build_polytope`] with an explicit choice of binning-sum relation.
pub fn build_polytope_with(
    m: &MutualInfoBundle,
    binning: BinningRelation,
) -> Result<RatePolytope> {
    m.validate()?;
    let nn = |v: f64| v.max(0.0);
    let row = |vars: &[usize], relation: Relation, rhs: f64| {
        let mut coeffs = [0.0; NUM_VARS];
        for &v in vars {
            coeffs[v] = 1.0;
        }
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    };
    let binning_rel = match binning {
        BinningRelation::Equality => Relation::Eq,
        BinningRelation::AtMost => Relation::Le,
    };
    Ok(RatePolytope::new(vec![
        row(&[R10, RB10], Relation::Le, nn(m.a1)),
        row(&[R20, RB20], Relation::Le, nn(m.a2)),
        row(&[R10, R20, RB10, RB20], Relation::Le, nn(m.a3)),
        row(&[R12, RB12], Relation::Le, nn(m.a4)),
        row(&[R21, RB21], Relation::Le, nn(m.a5)),
        row(&[R10, R20, R12, R21], Relation::Le, m.a6),
        row(&[RB10], Relation::Le, nn(m.b1)),
        row(&[RB20], Relation::Le, nn(m.b2)),
        row(&[RB10, RB20], Relation::Le, nn(m.b3)),
        row(&[RB10, RB20, RB12, RB21], binning_rel, nn(m.b4)),
    ]))
}

/// An achievable rate pair in bits per channel use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePoint {
    pub r1: f64,
    pub r2: f64,
}

impl RatePoint {
    pub fn new(r1: f64, r2: f64) -> Self {
        Self {
            r1: r1.max(0.0),
            r2: r2.max(0.0),
        }
    }

    pub const ORIGIN: RatePoint = RatePoint { r1: 0.0, r2: 0.0 };
}

/// Maximizes `w1*R1 + w2*R2` over the polytope.
///
/// Returns `None` when the constraint system is infeasible (the binning
/// equality cannot be met, or a right-hand side is negative).
pub fn max_weighted_rate(
    p: &RatePolytope,
    w1: f64,
    w2: f64,
) -> Result<Option<(f64, RatePoint)>> {
    if !(w1 >= 0.0) || !(w2 >= 0.0) || w1 + w2 <= 0.0 {
        return Err(Error::Usage(format!(
            "weights must be non-negative and not both zero, got ({w1}, {w2})"
        )));
    }
    let mut objective = [0.0; NUM_VARS];
    objective[R10] = w1;
    objective[R12] = w1;
    objective[R20] = w2;
    objective[R21] = w2;

    let rows: Vec<(Vec<f64>, Rel, f64)> = p
        .constraints
        .iter()
        .map(|c| {
            let rel = match c.relation {
                Relation::Le => Rel::Le,
                Relation::Eq => Rel::Eq,
            };
            (c.coeffs.to_vec(), rel, c.rhs)
        })
        .collect();

    match simplex::maximize(&objective, &rows)? {
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Optimal { value, x } => {
            let point = RatePoint::new(x[R10] + x[R12], x[R20] + x[R21]);
            Ok(Some((value, point)))
        }
    }
}

/// Extreme points of the upper-right boundary of the polytope's `(R1, R2)`
/// projection, found by adaptive support-function refinement. `None` when the
/// polytope is infeasible.
fn projection_boundary(p: &RatePolytope) -> Result<Option<Vec<RatePoint>>> {
    let Some((_, right)) = max_weighted_rate(p, 1.0, 0.0)? else {
        return Ok(None);
    };
    let Some((_, top)) = max_weighted_rate(p, 0.0, 1.0)? else {
        return Ok(None);
    };

    let mut found = vec![top, right];
    // Pairs (left, right) of already-found boundary points, left having the
    // larger r2. Probe the outward normal of the chord between them.
    let mut stack = vec![(top, right, 0usize)];
    while let Some((left, right, depth)) = stack.pop() {
        if depth > 64 {
            continue;
        }
        let w1 = left.r2 - right.r2;
        let w2 = right.r1 - left.r1;
        if w1 <= 1e-12 && w2 <= 1e-12 {
            continue;
        }
        let (value, mid) = max_weighted_rate(p, w1.max(0.0), w2.max(0.0))?
            .expect("a feasible polytope stays feasible across directions");
        let chord = w1.max(0.0) * left.r1 + w2.max(0.0) * left.r2;
        if value > chord + REFINE_EPS {
            let near_left =
                (mid.r1 - left.r1).abs() < 1e-12 && (mid.r2 - left.r2).abs() < 1e-12;
            let near_right =
                (mid.r1 - right.r1).abs() < 1e-12 && (mid.r2 - right.r2).abs() < 1e-12;
            if !near_left && !near_right {
                found.push(mid);
                stack.push((left, mid, depth + 1));
                stack.push((mid, right, depth + 1));
            }
        }
    }

    found.sort_by(|a, b| (a.r1, a.r2).partial_cmp(&(b.r1, b.r2)).unwrap());
    found.dedup_by(|a, b| (a.r1 - b.r1).abs() < 1e-12 && (a.r2 - b.r2).abs() < 1e-12);
    Ok(Some(found))
}

/// Traces the polytope's `(R1, R2)` projection by maximizing the weighted sum
/// along `angles` directions uniform on `[0, pi/2]` (plus the axis-aligned
/// extremes), then hulls the support points together with the origin and the
/// axis feet. An infeasible polytope yields the origin-only region.
pub fn trace_region(p: &RatePolytope, angles: usize) -> Result<Region2D> {
    if angles < 2 {
        return Err(Error::Usage(format!(
            "trace_region needs at least 2 angles, got {angles}"
        )));
    }
    let Some(boundary) = projection_boundary(p)? else {
        return Ok(Region2D::origin());
    };

    let mut points = Vec::with_capacity(angles + 2);
    let support_point = |w1: f64, w2: f64| -> RatePoint {
        let mut best = boundary[0];
        let mut best_v = f64::NEG_INFINITY;
        for &pt in &boundary {
            let v = w1 * pt.r1 + w2 * pt.r2;
            if v > best_v {
                best_v = v;
                best = pt;
            }
        }
        best
    };
    for k in 0..angles {
        let theta = std::f64::consts::FRAC_PI_2 * k as f64 / (angles - 1) as f64;
        points.push(support_point(theta.cos(), theta.sin()));
    }
    points.push(support_point(1.0, 0.0));
    points.push(support_point(0.0, 1.0));
    hull2d(&points)
}

/// The upper-right boundary of a convex, downward-closed region of achievable
/// rate pairs. Vertices are in increasing `r1` order with non-increasing `r2`;
/// the region always contains the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Region2D {
    hull: Vec<RatePoint>,
}

impl Region2D {
    /// The degenerate region containing only the origin.
    pub fn origin() -> Self {
        Self {
            hull: vec![RatePoint::ORIGIN],
        }
    }

    pub fn vertices(&self) -> &[RatePoint] {
        &self.hull
    }

    pub fn is_origin_only(&self) -> bool {
        self.hull.len() == 1 && self.hull[0].r1 == 0.0 && self.hull[0].r2 == 0.0
    }

    pub fn r1_max(&self) -> f64 {
        self.hull.iter().map(|p| p.r1).fold(0.0, f64::max)
    }

    pub fn r2_max(&self) -> f64 {
        self.hull.iter().map(|p| p.r2).fold(0.0, f64::max)
    }

    /// Support value `max w1*r1 + w2*r2` over the region.
    pub fn support(&self, w1: f64, w2: f64) -> f64 {
        self.hull
            .iter()
            .map(|p| w1 * p.r1 + w2 * p.r2)
            .fold(0.0, f64::max)
    }

    /// Whether `pt` lies within per-coordinate slack `tol` of the region.
    pub fn contains(&self, pt: RatePoint, tol: f64) -> bool {
        let x = (pt.r1 - tol).max(0.0);
        let y = (pt.r2 - tol).max(0.0);
        if self.hull.len() == 1 {
            let v = self.hull[0];
            return x <= v.r1 && y <= v.r2;
        }
        if x > self.r1_max() {
            return false;
        }
        // Boundary height at abscissa x: piecewise-linear between vertices.
        let first = self.hull[0];
        if x <= first.r1 {
            return y <= first.r2;
        }
        for w in self.hull.windows(2) {
            let (u, v) = (w[0], w[1]);
            if x <= v.r1 {
                if v.r1 - u.r1 <= 1e-300 {
                    return y <= u.r2.max(v.r2);
                }
                let t = (x - u.r1) / (v.r1 - u.r1);
                return y <= u.r2 + t * (v.r2 - u.r2);
            }
        }
        false
    }

    /// Hull of the union of two regions.
    pub fn union(&self, other: &Region2D) -> Result<Region2D> {
        let pts: Vec<RatePoint> = self
            .hull
            .iter()
            .chain(other.hull.iter())
            .copied()
            .collect();
        hull2d(&pts)
    }
}

/// Hull of the union of many regions; the empty union is origin-only.
pub fn union_regions<'a>(regions: impl IntoIterator<Item = &'a Region2D>) -> Result<Region2D> {
    let pts: Vec<RatePoint> = regions
        .into_iter()
        .flat_map(|r| r.vertices().iter().copied())
        .collect();
    if pts.is_empty() {
        return Ok(Region2D::origin());
    }
    hull2d(&pts)
}

/// Extreme points of `{(R1, R2) >= 0 : R1 <= r1b, R2 <= r2b, R1 + R2 <= sum}`,
/// the pentagon shape shared by the full-cooperation and no-feedback regions.
/// A non-positive sum bound collapses the set to the origin.
pub(crate) fn pentagon_points(r1b: f64, r2b: f64, sum: f64) -> Vec<RatePoint> {
    let r1b = r1b.max(0.0);
    let r2b = r2b.max(0.0);
    if sum <= 0.0 {
        return vec![RatePoint::ORIGIN];
    }
    let x1 = r1b.min(sum);
    let y1 = r2b.min(sum - x1).max(0.0);
    let y2 = r2b.min(sum);
    let x2 = r1b.min(sum - y2).max(0.0);
    vec![RatePoint::new(x1, y1), RatePoint::new(x2, y2)]
}

/// Upper-right convex hull of a point set together with the origin and the
/// axis feet `(r1_max, 0)` and `(0, r2_max)`. Collinear boundary points are
/// dropped, so the stored vertex list is canonical; the operation is
/// idempotent.
pub fn hull2d(points: &[RatePoint]) -> Result<Region2D> {
    if points.is_empty() {
        return Err(Error::Usage("hull2d requires a non-empty point set".into()));
    }
    let mut pts: Vec<(f64, f64)> = Vec::with_capacity(points.len() + 2);
    for p in points {
        if !p.r1.is_finite() || !p.r2.is_finite() || p.r1 < -1e-12 || p.r2 < -1e-12 {
            return Err(Error::Usage(format!(
                "hull2d points must be finite and non-negative, got ({}, {})",
                p.r1, p.r2
            )));
        }
        pts.push((p.r1.max(0.0), p.r2.max(0.0)));
    }
    let r1_max = pts.iter().map(|p| p.0).fold(0.0, f64::max);
    let r2_max = pts.iter().map(|p| p.1).fold(0.0, f64::max);
    if r1_max == 0.0 && r2_max == 0.0 {
        return Ok(Region2D::origin());
    }
    pts.push((0.0, r2_max));
    pts.push((r1_max, 0.0));
    pts.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap()
            .then(b.1.partial_cmp(&a.1).unwrap())
    });
    pts.dedup();

    let mut chain: Vec<(f64, f64)> = Vec::with_capacity(pts.len().min(16));
    for p in pts {
        while chain.len() >= 2 {
            let a = chain[chain.len() - 2];
            let b = chain[chain.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross >= -COLLINEAR_EPS {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }

    Ok(Region2D {
        hull: chain
            .into_iter()
            .map(|(r1, r2)| RatePoint { r1, r2 })
            .collect(),
    })
}
