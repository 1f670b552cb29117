//! Reachable sets for the free and unstable bang-bang cases, represented as
//! arc-polygons: closed chains of directed circular arcs in the closed disk.
//!
//! Free case: evolving `z0` under a free `H0` sweeps the horocycle arc from
//! `z0` clockwise toward `ξ0`; a second free `H1` extends that to an
//! arc-triangle with vertices `{third, ξ0, ξ1}`, where the third vertex is
//! the tangency point of the `ξ1`-horocycle touching the `H0` horocycle if
//! that point is reachable, and `z0` itself otherwise. Three alternations
//! reach the whole disk.
//!
//! Unstable case: when the chords joining each Hamiltonian's boundary fixed
//! points cross inside the disk, the pairs interleave and the whole disk is
//! reachable with `H0, H1, H0`; otherwise the set is the arc-polygon with
//! vertices `{z0, ξ₊⁰, ξ₊¹}` bounded by the two hypercycles through `z0` and
//! a boundary arc.

use num_complex::Complex64;

use crate::dynamics::{evolve, trajectory_curve, QuadraticHamiltonian, SpectralClass};
use crate::geometry::{circle_circle_intersections, DiskPoint, GeneralizedCircle, EPS_GEO};
use crate::json::JsonValue;

use super::{points_json, ControlError};

/// Directed arc on a carrier circle or line; `ccw` is the traversal sense
/// from `from` to `to` (ignored in rendering for line carriers, where the
/// chord direction is already determined by the endpoints).
#[derive(Debug, Clone, PartialEq)]
pub struct ArcEdge {
    pub carrier: GeneralizedCircle,
    pub from: Complex64,
    pub to: Complex64,
    pub ccw: bool,
}

impl ArcEdge {
    pub fn to_json(&self) -> JsonValue {
        let mut doc = JsonValue::object();
        doc.push("carrier", self.carrier.to_json())
            .push("from", JsonValue::complex(self.from))
            .push("to", JsonValue::complex(self.to))
            .push("ccw", self.ccw);
        doc
    }

    /// Unit tangent at an endpoint, pointing along the traversal direction.
    fn tangent_at(&self, p: Complex64) -> Complex64 {
        match self.carrier {
            GeneralizedCircle::Circle { center, .. } => {
                let radial = p - center;
                let t = Complex64::new(0.0, 1.0) * radial / radial.norm();
                if self.ccw {
                    t
                } else {
                    -t
                }
            }
            GeneralizedCircle::Line { direction, .. } => {
                let step = self.to - self.from;
                if (step * direction.conj()).re >= 0.0 {
                    direction
                } else {
                    -direction
                }
            }
        }
    }
}

/// Closed chain of directed arcs; degenerate (one-dimensional) reachable
/// sets are stored as an arc together with its reversal.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcPolygon {
    pub vertices: Vec<Complex64>,
    pub edges: Vec<ArcEdge>,
}

impl ArcPolygon {
    /// Arc running both ways between two points (a one-dimensional set).
    fn doubled_arc(carrier: GeneralizedCircle, from: Complex64, to: Complex64, ccw: bool) -> Self {
        ArcPolygon {
            vertices: vec![from, to],
            edges: vec![
                ArcEdge {
                    carrier,
                    from,
                    to,
                    ccw,
                },
                ArcEdge {
                    carrier,
                    from: to,
                    to: from,
                    ccw: !ccw,
                },
            ],
        }
    }

    /// Largest gap in the edge chain; zero for a properly closed polygon.
    pub fn closure_defect(&self) -> f64 {
        self.edges
            .iter()
            .zip(self.edges.iter().cycle().skip(1))
            .map(|(e, next)| (e.to - next.from).norm())
            .fold(0.0, f64::max)
    }

    /// Internal angle at a vertex, read from the tangents of the incoming
    /// and outgoing arcs: 0 at cusps, π where the arcs continue smoothly.
    pub fn internal_angle_at(&self, vertex: usize) -> f64 {
        let v = self.vertices[vertex];
        let incoming = self
            .edges
            .iter()
            .find(|e| (e.to - v).norm() <= 1e-9)
            .expect("vertex terminates an edge");
        let outgoing = self
            .edges
            .iter()
            .find(|e| (e.from - v).norm() <= 1e-9)
            .expect("vertex starts an edge");
        let d_in = incoming.tangent_at(v);
        let d_out = outgoing.tangent_at(v);
        ((-d_in) / d_out).arg().abs()
    }

    pub fn to_json(&self) -> JsonValue {
        let mut doc = JsonValue::object();
        doc.push("vertices", points_json(&self.vertices)).push(
            "edges",
            JsonValue::Array(self.edges.iter().map(|e| e.to_json()).collect()),
        );
        doc
    }
}

/// Result of a reachability computation: either a bounded arc-polygon or the
/// entire open disk (an exact statement, never an approximation).
#[derive(Debug, Clone, PartialEq)]
pub enum ReachableSet {
    EntireDisk,
    Region(ArcPolygon),
}

impl ReachableSet {
    pub fn to_json(&self) -> JsonValue {
        let mut doc = JsonValue::object();
        match self {
            ReachableSet::EntireDisk => {
                doc.push("result", "entire_disk");
                doc.push(
                    "witness_sequence",
                    JsonValue::Array(vec!["H0".into(), "H1".into(), "H0".into()]),
                );
            }
            ReachableSet::Region(polygon) => {
                doc.push("result", "arc_polygon");
                doc.push("polygon", polygon.to_json());
            }
        }
        doc
    }
}

fn free_fixed_point(h: &QuadraticHamiltonian) -> Result<Complex64, ControlError> {
    if h.classify() != SpectralClass::Free || h.alpha() == Complex64::new(0.0, 0.0) {
        return Err(ControlError::NotFree);
    }
    Ok(Complex64::new(h.omega(), 0.0) / h.alpha())
}

/// Euclidean circle of the horocycle through `z` tangent to the unit circle
/// at `xi`: center `(1-s)ξ`, radius `s = |z-ξ|²/(2(1 - Re(ξ̄z)))`.
fn horocycle_through(z: Complex64, xi: Complex64) -> (Complex64, f64) {
    let s = (z - xi).norm_sqr() / (2.0 * (1.0 - (xi.conj() * z).re));
    ((1.0 - s) * xi, s)
}

/// Clockwise angular offset of `x` from `start` around `center`, in [0, 2π).
fn clockwise_offset(center: Complex64, start: Complex64, x: Complex64) -> f64 {
    ((start - center).arg() - (x - center).arg()).rem_euclid(2.0 * std::f64::consts::PI)
}

/// Reachable set after `steps` alternating free pulses starting with `H0`.
pub fn free_reachable_set(
    z0: DiskPoint,
    h0: &QuadraticHamiltonian,
    h1: &QuadraticHamiltonian,
    steps: u8,
) -> Result<ReachableSet, ControlError> {
    assert!((1..=3).contains(&steps), "steps must be 1, 2 or 3");
    let xi0 = free_fixed_point(h0)?;
    let xi1 = free_fixed_point(h1)?;
    if (xi0 - xi1).norm() <= EPS_GEO {
        return Err(ControlError::DegeneratePair);
    }
    if steps == 3 {
        return Ok(ReachableSet::EntireDisk);
    }
    let z = z0.value();
    let (c_a, r_a) = horocycle_through(z, xi0);
    let carrier_a = GeneralizedCircle::circle(c_a, r_a)
        .expect("horocycles have positive radius");
    if steps == 1 {
        // Forward orbit: the clockwise arc from z0 to ξ0.
        return Ok(ReachableSet::Region(ArcPolygon::doubled_arc(
            carrier_a, z, xi0, false,
        )));
    }

    // ξ1-horocycle externally tangent to the H0 horocycle.
    let g = (xi1.conj() * c_a).re;
    let s_b = (1.0 - 2.0 * g + c_a.norm_sqr() - r_a * r_a) / (2.0 * (1.0 - g + r_a));
    let c_b = (1.0 - s_b) * xi1;
    let tangency = c_a + (c_b - c_a) / (c_b - c_a).norm() * r_a;

    // Reachable along H0 iff the tangency point sits on the clockwise arc
    // from z0 to ξ0.
    let reachable = clockwise_offset(c_a, z, tangency)
        <= clockwise_offset(c_a, z, xi0) + 1e-12;
    let (third, exit_circle) = if reachable {
        (tangency, (c_b, s_b))
    } else {
        (z, horocycle_through(z, xi1))
    };
    let carrier_exit = GeneralizedCircle::circle(exit_circle.0, exit_circle.1)
        .expect("horocycles have positive radius");
    let unit = GeneralizedCircle::circle(Complex64::new(0.0, 0.0), 1.0)
        .expect("the unit circle");

    Ok(ReachableSet::Region(ArcPolygon {
        vertices: vec![third, xi0, xi1],
        edges: vec![
            ArcEdge {
                carrier: carrier_a,
                from: third,
                to: xi0,
                ccw: false,
            },
            ArcEdge {
                carrier: unit,
                from: xi0,
                to: xi1,
                ccw: false,
            },
            ArcEdge {
                carrier: carrier_exit,
                from: xi1,
                to: third,
                ccw: true,
            },
        ],
    }))
}

/// Membership in the two-step free reachable set, decided by the
/// construction itself: `w` is reachable iff its `ξ1`-horocycle meets the
/// `H0` horocycle at a point `p` on the forward arc from `z0`, with `w` on
/// the clockwise arc from `p` to `ξ1`.
pub fn free_two_step_contains(
    z0: DiskPoint,
    h0: &QuadraticHamiltonian,
    h1: &QuadraticHamiltonian,
    w: DiskPoint,
) -> Result<bool, ControlError> {
    let xi0 = free_fixed_point(h0)?;
    let xi1 = free_fixed_point(h1)?;
    let z = z0.value();
    let w = w.value();
    let (c_a, r_a) = horocycle_through(z, xi0);
    let (c_w, s_w) = horocycle_through(w, xi1);
    let max_offset = clockwise_offset(c_a, z, xi0);
    for p in circle_circle_intersections(c_a, r_a, c_w, s_w) {
        let on_forward_arc = clockwise_offset(c_a, z, p) <= max_offset + 1e-12;
        let w_after_p =
            clockwise_offset(c_w, p, w) <= clockwise_offset(c_w, p, xi1) + 1e-12;
        if on_forward_arc && w_after_p {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Pulse durations `(t0, t1)` steering `z0` to `w` with one `H0` pulse and
/// one `H1` pulse, if such nonnegative durations exist. Durations are read
/// from the translation charts `1/(z - ξᵢ)`, where the free flow shifts by
/// `-iαᵢt`.
pub fn free_two_step_durations(
    z0: DiskPoint,
    h0: &QuadraticHamiltonian,
    h1: &QuadraticHamiltonian,
    w: DiskPoint,
) -> Result<Option<(f64, f64)>, ControlError> {
    let xi0 = free_fixed_point(h0)?;
    let xi1 = free_fixed_point(h1)?;
    let z = z0.value();
    let w = w.value();
    let (c_a, r_a) = horocycle_through(z, xi0);
    let (c_w, s_w) = horocycle_through(w, xi1);
    let duration = |xi: Complex64, alpha: Complex64, from: Complex64, to: Complex64| {
        let chart = |p: Complex64| (p - xi).inv();
        let t = (chart(from) - chart(to)) / (Complex64::new(0.0, 1.0) * alpha);
        (t.im.abs() <= 1e-9 * t.re.abs().max(1.0) && t.re >= -1e-12).then_some(t.re.max(0.0))
    };
    for p in circle_circle_intersections(c_a, r_a, c_w, s_w) {
        let Some(t0) = duration(xi0, h0.alpha(), z, p) else {
            continue;
        };
        let Some(t1) = duration(xi1, h1.alpha(), p, w) else {
            continue;
        };
        return Ok(Some((t0, t1)));
    }
    Ok(None)
}

fn unstable_fixed_points(
    h: &QuadraticHamiltonian,
) -> Result<(Complex64, Complex64), ControlError> {
    match h.classify() {
        SpectralClass::Unstable { gamma } => {
            let xi_minus = Complex64::new(h.omega(), -gamma) / h.alpha();
            let xi_plus = Complex64::new(h.omega(), gamma) / h.alpha();
            Ok((xi_minus, xi_plus))
        }
        _ => Err(ControlError::NotUnstable),
    }
}

/// Whether `x` lies on the counterclockwise arc from `a` to `b`.
fn on_ccw_arc(a: Complex64, b: Complex64, x: Complex64) -> bool {
    let span = (b.arg() - a.arg()).rem_euclid(2.0 * std::f64::consts::PI);
    let off = (x.arg() - a.arg()).rem_euclid(2.0 * std::f64::consts::PI);
    off <= span
}

/// Traversal sense of the forward flow of `h` along its invariant curve
/// through `z0`, probed with a short time step.
fn forward_orientation(h: &QuadraticHamiltonian, z0: DiskPoint, carrier: &GeneralizedCircle) -> bool {
    let w = evolve(h, z0, 1e-4 / h.alpha().norm().max(h.omega()).max(1.0)).value();
    match carrier {
        GeneralizedCircle::Circle { center, .. } => {
            ((z0.value() - center).conj() * (w - center)).im > 0.0
        }
        GeneralizedCircle::Line { direction, .. } => {
            ((w - z0.value()) * direction.conj()).re > 0.0
        }
    }
}

/// Reachable set for two unstable Hamiltonians under unlimited alternation.
pub fn unstable_reachable_set(
    z0: DiskPoint,
    h0: &QuadraticHamiltonian,
    h1: &QuadraticHamiltonian,
) -> Result<ReachableSet, ControlError> {
    let (m0, p0) = unstable_fixed_points(h0)?;
    let (m1, p1) = unstable_fixed_points(h1)?;

    let same_pair = (m0 - m1).norm() <= EPS_GEO && (p0 - p1).norm() <= EPS_GEO;
    if same_pair {
        // One hypercycle family only: the forward orbit through z0.
        let (carrier, _) = trajectory_curve(h0, z0)
            .expect("interior points are not fixed by unstable flows");
        let ccw = forward_orientation(h0, z0, &carrier);
        return Ok(ReachableSet::Region(ArcPolygon::doubled_arc(
            carrier,
            z0.value(),
            p0,
            ccw,
        )));
    }

    // Non-overlapping pairs = the chords (ξ₋⁰ξ₊⁰) and (ξ₋¹ξ₊¹) cross inside
    // the disk, i.e. the pairs interleave on the circle.
    let interleaved = on_ccw_arc(m0, p0, m1) != on_ccw_arc(m0, p0, p1);
    if interleaved {
        return Ok(ReachableSet::EntireDisk);
    }

    let (carrier0, _) = trajectory_curve(h0, z0)
        .expect("interior points are not fixed by unstable flows");
    let (carrier1, _) = trajectory_curve(h1, z0)
        .expect("interior points are not fixed by unstable flows");
    let ccw0 = forward_orientation(h0, z0, &carrier0);
    let ccw1 = forward_orientation(h1, z0, &carrier1);
    // Boundary arc between the attracting points avoiding ξ₋⁰.
    let boundary_ccw = !on_ccw_arc(p0, p1, m0);
    let unit = GeneralizedCircle::circle(Complex64::new(0.0, 0.0), 1.0)
        .expect("the unit circle");

    Ok(ReachableSet::Region(ArcPolygon {
        vertices: vec![z0.value(), p0, p1],
        edges: vec![
            ArcEdge {
                carrier: carrier0,
                from: z0.value(),
                to: p0,
                ccw: ccw0,
            },
            ArcEdge {
                carrier: unit,
                from: p0,
                to: p1,
                ccw: boundary_ccw,
            },
            ArcEdge {
                carrier: carrier1,
                from: p1,
                to: z0.value(),
                ccw: !ccw1,
            },
        ],
    }))
}
