//! Euclidean circles and lines as carriers of hyperbolic curves.
//!
//! In the Poincaré disk a Euclidean circle is a hyperbolic circle when
//! contained in `D`, a horocycle when tangent to the unit circle, a
//! hypercycle when it crosses the unit circle at non-right angles, and a
//! hyperbolic line when the crossing is orthogonal. Euclidean lines can only
//! be chords; diameters are the orthogonal (hyperbolic-line) case.

use num_complex::Complex64;

use super::{GeometryError, EPS_GEO};
use crate::json::JsonValue;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneralizedCircle {
    Circle { center: Complex64, radius: f64 },
    Line { point: Complex64, direction: Complex64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveClass {
    HyperbolicCircle,
    Horocycle,
    Hypercycle,
    HyperbolicLine,
    NotInDisk,
}

impl CurveClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CurveClass::HyperbolicCircle => "hyperbolic_circle",
            CurveClass::Horocycle => "horocycle",
            CurveClass::Hypercycle => "hypercycle",
            CurveClass::HyperbolicLine => "hyperbolic_line",
            CurveClass::NotInDisk => "not_in_disk",
        }
    }
}

impl GeneralizedCircle {
    pub fn circle(center: Complex64, radius: f64) -> Result<Self, GeometryError> {
        if !(radius > 0.0) {
            return Err(GeometryError::DegenerateCircle);
        }
        Ok(GeneralizedCircle::Circle { center, radius })
    }

    /// Line through `point` along `direction` (normalized here).
    pub fn line(point: Complex64, direction: Complex64) -> Result<Self, GeometryError> {
        let n = direction.norm();
        if n <= EPS_GEO {
            return Err(GeometryError::DegenerateCircle);
        }
        Ok(GeneralizedCircle::Line {
            point,
            direction: direction / n,
        })
    }

    /// Hyperbolic classification per the position relative to the unit circle.
    pub fn classify(&self) -> Result<CurveClass, GeometryError> {
        match *self {
            GeneralizedCircle::Circle { center, radius } => {
                if radius <= EPS_GEO {
                    return Err(GeometryError::DegenerateCircle);
                }
                let rho = center.norm();
                if (rho + radius - 1.0).abs() <= EPS_GEO {
                    // Tangent from inside: horocycle.
                    return Ok(CurveClass::Horocycle);
                }
                if rho + radius < 1.0 {
                    return Ok(CurveClass::HyperbolicCircle);
                }
                let crosses =
                    rho > (radius - 1.0).abs() + EPS_GEO && rho < radius + 1.0 - EPS_GEO;
                if crosses {
                    // cos(angle) ∝ ρ² - (1 + r²); orthogonal iff it vanishes.
                    let orth = rho * rho - (1.0 + radius * radius);
                    if orth.abs() <= EPS_GEO * (1.0 + radius * radius).max(rho * rho) {
                        Ok(CurveClass::HyperbolicLine)
                    } else {
                        Ok(CurveClass::Hypercycle)
                    }
                } else {
                    Ok(CurveClass::NotInDisk)
                }
            }
            GeneralizedCircle::Line { .. } => Ok(classify_line_through(self)),
        }
    }

    /// Euclidean distance from a point to the carrier.
    pub fn distance_to(&self, z: Complex64) -> f64 {
        match *self {
            GeneralizedCircle::Circle { center, radius } => ((z - center).norm() - radius).abs(),
            GeneralizedCircle::Line { point, direction } => {
                ((z - point) * direction.conj()).im.abs()
            }
        }
    }

    /// Canonical JSON rendering used by the CLI.
    pub fn to_json(&self) -> JsonValue {
        let mut doc = JsonValue::object();
        match *self {
            GeneralizedCircle::Circle { center, radius } => {
                doc.push("kind", "circle")
                    .push("center", JsonValue::complex(center))
                    .push("radius", radius);
            }
            GeneralizedCircle::Line { point, direction } => {
                doc.push("kind", "line")
                    .push("point", JsonValue::complex(point))
                    .push("direction", JsonValue::complex(direction));
            }
        }
        doc
    }
}

/// Classification of a Euclidean line: only diameters meet the unit circle
/// orthogonally; other chords are hypercycles and lines missing the open
/// disk carry no hyperbolic curve.
pub(super) fn classify_line_through(line: &GeneralizedCircle) -> CurveClass {
    let GeneralizedCircle::Line { point, direction } = line else {
        unreachable!("classify_line_through expects the line variant");
    };
    let dist_from_origin = ((point) * direction.conj()).im.abs();
    if dist_from_origin >= 1.0 - EPS_GEO {
        CurveClass::NotInDisk
    } else if dist_from_origin <= EPS_GEO {
        CurveClass::HyperbolicLine
    } else {
        CurveClass::Hypercycle
    }
}

/// Circle (or line, when collinear within tolerance) through three points.
pub fn circumcircle_through(
    p1: Complex64,
    p2: Complex64,
    p3: Complex64,
) -> Result<GeneralizedCircle, GeometryError> {
    let d12 = (p2 - p1).norm();
    let d13 = (p3 - p1).norm();
    let d23 = (p3 - p2).norm();
    let scale = d12.max(d13).max(d23);
    if d12 <= EPS_GEO || d13 <= EPS_GEO || d23 <= EPS_GEO {
        return Err(GeometryError::CoincidentPoints);
    }
    // Twice the signed triangle area.
    let cross = ((p2 - p1).conj() * (p3 - p1)).im;
    if cross.abs() <= EPS_GEO * scale * scale {
        // Use the farthest pair for a stable direction.
        let dir = if d23 >= d12 && d23 >= d13 {
            p3 - p2
        } else if d13 >= d12 {
            p3 - p1
        } else {
            p2 - p1
        };
        return GeneralizedCircle::line(p1, dir);
    }
    let (x1, y1) = (p1.re, p1.im);
    let (x2, y2) = (p2.re, p2.im);
    let (x3, y3) = (p3.re, p3.im);
    let den = 2.0 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2));
    let s1 = p1.norm_sqr();
    let s2 = p2.norm_sqr();
    let s3 = p3.norm_sqr();
    let cx = (s1 * (y2 - y3) + s2 * (y3 - y1) + s3 * (y1 - y2)) / den;
    let cy = (s1 * (x3 - x2) + s2 * (x1 - x3) + s3 * (x2 - x1)) / den;
    let center = Complex64::new(cx, cy);
    GeneralizedCircle::circle(center, (p1 - center).norm())
}

/// Intersection points of two Euclidean circles. Tangency is declared when
/// the discriminant lies within the tolerance band and yields one point.
pub fn circle_circle_intersections(
    c1: Complex64,
    r1: f64,
    c2: Complex64,
    r2: f64,
) -> Vec<Complex64> {
    let sep = c2 - c1;
    let d = sep.norm();
    if d <= EPS_GEO {
        return Vec::new();
    }
    let along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let disc = r1 * r1 - along * along;
    let tol = EPS_GEO * (r1 * r1).max(r2 * r2).max(d * d);
    let axis = sep / d;
    let foot = c1 + axis * along;
    if disc < -tol {
        Vec::new()
    } else if disc <= tol {
        vec![foot]
    } else {
        let h = disc.sqrt();
        let normal = Complex64::new(-axis.im, axis.re);
        vec![foot + normal * h, foot - normal * h]
    }
}
