//! Möbius transformations `z ↦ (az + b)/(cz + d)` and their disk-automorphism
//! structure: fixed points, elliptic/parabolic/hyperbolic classification and
//! the normal form `M = S⁻¹ ∘ T ∘ S`.

use num_complex::Complex64;

use super::circle::{circumcircle_through, classify_line_through, CurveClass, GeneralizedCircle};
use super::{DiskPoint, ExtendedComplex, GeometryError, EPS_GEO};

/// Coefficient matrix `[[a, b], [c, d]]` of a Möbius transformation,
/// stored unnormalized; equality of maps is projective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

/// Classification of a disk automorphism by its fixed-point configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomorphismClass {
    /// Two fixed points related by circle inversion, exactly one inside `D`.
    Elliptic,
    /// A single (double) fixed point on the unit circle.
    Parabolic,
    /// Two distinct fixed points on the unit circle.
    Hyperbolic,
    Identity,
}

/// The conjugated map `T` in the decomposition `S ∘ M = T ∘ S`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormalFormKind {
    /// `w ↦ e^{iθ} w` (elliptic).
    Rotation(f64),
    /// `w ↦ w + β` (parabolic).
    Translation(Complex64),
    /// `w ↦ r w` with `r > 1`, the repelling fixed point sent to 0 (hyperbolic).
    Dilation(f64),
}

#[derive(Debug, Clone, Copy)]
pub struct NormalForm {
    pub conjugator: MoebiusMap,
    pub kind: NormalFormKind,
}

impl NormalForm {
    /// The normal-form map `T` as a Möbius matrix.
    pub fn t_map(&self) -> MoebiusMap {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        match self.kind {
            NormalFormKind::Rotation(theta) => MoebiusMap {
                a: Complex64::from_polar(1.0, theta),
                b: zero,
                c: zero,
                d: one,
            },
            NormalFormKind::Translation(beta) => MoebiusMap {
                a: one,
                b: beta,
                c: zero,
                d: one,
            },
            NormalFormKind::Dilation(r) => MoebiusMap {
                a: Complex64::new(r, 0.0),
                b: zero,
                c: zero,
                d: one,
            },
        }
    }
}

impl MoebiusMap {
    /// Rejects degenerate coefficient matrices (`ad - bc = 0` relative to
    /// the coefficient scale).
    pub fn new(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    ) -> Result<Self, GeometryError> {
        let m = MoebiusMap { a, b, c, d };
        let scale = m.coefficient_scale();
        if m.determinant().norm() <= 1e-14 * scale * scale {
            return Err(GeometryError::DegenerateMap);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        MoebiusMap {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    /// Rotation about the origin, `z ↦ e^{iθ} z`, in automorphism form.
    pub fn rotation(theta: f64) -> Self {
        MoebiusMap {
            a: Complex64::from_polar(1.0, theta / 2.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::from_polar(1.0, -theta / 2.0),
        }
    }

    /// The automorphism `z ↦ (z - q)/(1 - q̄ z)` moving `q` to the origin.
    pub fn blaschke(q: DiskPoint) -> Self {
        let q = q.value();
        MoebiusMap {
            a: Complex64::new(1.0, 0.0),
            b: -q,
            c: -q.conj(),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    fn coefficient_scale(&self) -> f64 {
        self.a
            .norm()
            .max(self.b.norm())
            .max(self.c.norm())
            .max(self.d.norm())
    }

    /// Extended-plane evaluation: `∞ ↦ a/c` and the pole `-d/c ↦ ∞`.
    pub fn apply(&self, z: ExtendedComplex) -> ExtendedComplex {
        match z {
            ExtendedComplex::Infinity => {
                if self.c == Complex64::new(0.0, 0.0) {
                    ExtendedComplex::Infinity
                } else {
                    ExtendedComplex::Finite(self.a / self.c)
                }
            }
            ExtendedComplex::Finite(z) => {
                let den = self.c * z + self.d;
                if den == Complex64::new(0.0, 0.0) {
                    ExtendedComplex::Infinity
                } else {
                    ExtendedComplex::Finite((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// Evaluation at a finite point known to have a finite image.
    ///
    /// Panics on the pole; intended for disk automorphisms applied inside `D`.
    pub fn apply_finite(&self, z: Complex64) -> Complex64 {
        match self.apply(ExtendedComplex::Finite(z)) {
            ExtendedComplex::Finite(w) => w,
            ExtendedComplex::Infinity => panic!("Möbius map evaluated at its pole"),
        }
    }

    /// Matrix product: `apply(compose(M1, M2), z) = M1(M2(z))`.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    /// Projective inverse `[[d, -b], [-c, a]]`.
    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Projective identity test (coefficients proportional to the identity).
    pub fn is_identity(&self) -> bool {
        let scale = self.coefficient_scale();
        self.b.norm() <= EPS_GEO * scale
            && self.c.norm() <= EPS_GEO * scale
            && (self.a - self.d).norm() <= EPS_GEO * scale
    }

    /// Projective equality, tested through the images of `0, 1, ∞, i`.
    pub fn projectively_equal(&self, other: &MoebiusMap, tol: f64) -> bool {
        let probes = [
            ExtendedComplex::Finite(Complex64::new(0.0, 0.0)),
            ExtendedComplex::Finite(Complex64::new(1.0, 0.0)),
            ExtendedComplex::Infinity,
            ExtendedComplex::Finite(Complex64::new(0.0, 1.0)),
        ];
        probes
            .iter()
            .all(|p| self.apply(*p).approx_eq(&other.apply(*p), tol))
    }

    /// Whether the map preserves the open unit disk: the matrix must be a
    /// projective multiple of `[[a, b], [b̄, ā]]` with `|a| > |b|`.
    pub fn is_disk_automorphism(&self) -> bool {
        let scale = self.coefficient_scale();
        if self.determinant().norm() <= 1e-14 * scale * scale {
            return false;
        }
        let tol = EPS_GEO * scale;
        (self.a.norm() - self.d.norm()).abs() <= tol
            && (self.b.norm() - self.c.norm()).abs() <= tol
            && (self.b.conj() * self.d - self.a.conj() * self.c).norm() <= tol * scale
            && self.a.norm() > self.b.norm()
    }

    /// Rescale a disk automorphism to the canonical `[[a, b], [b̄, ā]]` form.
    fn canonical_disk_form(&self) -> Result<MoebiusMap, GeometryError> {
        if !self.is_disk_automorphism() {
            return Err(GeometryError::NotAutomorphism);
        }
        // d ≠ 0 for automorphisms: |d| = |a| > |b| ≥ 0.
        let phi = (self.a.conj() / self.d).arg() / 2.0;
        let mu = Complex64::from_polar(1.0, phi);
        Ok(MoebiusMap {
            a: mu * self.a,
            b: mu * self.b,
            c: mu * self.c,
            d: mu * self.d,
        })
    }

    /// Both fixed points, counted with multiplicity, ordered as the
    /// `((a-d) ∓ √((a-d)² + 4bc)) / (2c)` branches.
    pub fn fixed_points(&self) -> Result<(ExtendedComplex, ExtendedComplex), GeometryError> {
        if self.is_identity() {
            return Err(GeometryError::IdentityMap);
        }
        let scale = self.coefficient_scale();
        if self.c.norm() <= 1e-15 * scale {
            // Affine map: ∞ is fixed; the finite fixed point solves az + b = dz.
            return if (self.a - self.d).norm() <= EPS_GEO * scale {
                Ok((ExtendedComplex::Infinity, ExtendedComplex::Infinity))
            } else {
                Ok((
                    ExtendedComplex::Finite(self.b / (self.d - self.a)),
                    ExtendedComplex::Infinity,
                ))
            };
        }
        let t = self.a - self.d;
        let sq = (t * t + 4.0 * self.b * self.c).sqrt();
        let plus = t + sq;
        let minus = t - sq;
        // Evaluate the larger root directly and recover the other from the
        // product ξ₋ξ₊ = -b/c to avoid cancellation.
        let (xi_minus, xi_plus) = if plus.norm() >= minus.norm() {
            let xp = plus / (2.0 * self.c);
            let xm = if xp.norm() == 0.0 {
                xp
            } else {
                -self.b / (self.c * xp)
            };
            (xm, xp)
        } else {
            let xm = minus / (2.0 * self.c);
            let xp = if xm.norm() == 0.0 {
                xm
            } else {
                -self.b / (self.c * xm)
            };
            (xm, xp)
        };
        Ok((
            ExtendedComplex::Finite(xi_minus),
            ExtendedComplex::Finite(xi_plus),
        ))
    }

    /// Elliptic / parabolic / hyperbolic classification of a disk
    /// automorphism by the positions of its fixed points.
    pub fn classify(&self) -> Result<AutomorphismClass, GeometryError> {
        let m = self.canonical_disk_form()?;
        if m.is_identity() {
            return Ok(AutomorphismClass::Identity);
        }
        let scale = m.coefficient_scale().max(1.0);
        let tol = EPS_GEO * scale;
        let (xi_minus, xi_plus) = m.fixed_points()?;
        match (xi_minus, xi_plus) {
            (ExtendedComplex::Finite(p), ExtendedComplex::Finite(q)) => {
                if (p - q).norm() <= tol {
                    Ok(AutomorphismClass::Parabolic)
                } else if (p.norm() - 1.0).abs() <= tol && (q.norm() - 1.0).abs() <= tol {
                    Ok(AutomorphismClass::Hyperbolic)
                } else {
                    Ok(AutomorphismClass::Elliptic)
                }
            }
            // ∞ can only be fixed together with a point inside D (rotations
            // about an interior point with the inverse at ∞).
            _ => Ok(AutomorphismClass::Elliptic),
        }
    }

    /// Normal form `S ∘ M = T ∘ S` of a non-identity disk automorphism.
    ///
    /// `S = (z - ξ₋)/(z - ξ₊)` in the elliptic and hyperbolic cases and
    /// `S = 1/(z - ξ)` in the parabolic case; when a fixed point is `∞` the
    /// translation chart `S = z - ξ_finite` is used instead.
    pub fn normal_form(&self) -> Result<NormalForm, GeometryError> {
        let class = self.classify()?;
        let m = self.canonical_disk_form()?;
        let (xi_minus, xi_plus) = m.fixed_points()?;
        match class {
            AutomorphismClass::Identity => Err(GeometryError::IdentityMap),
            AutomorphismClass::Parabolic => {
                let xi = xi_minus
                    .as_finite()
                    .expect("parabolic fixed point lies on the unit circle");
                // S = 1/(z - ξ)
                let s = MoebiusMap {
                    a: Complex64::new(0.0, 0.0),
                    b: Complex64::new(1.0, 0.0),
                    c: Complex64::new(1.0, 0.0),
                    d: -xi,
                };
                let p = m.pick_probe(&[xi]);
                let beta = s.apply_finite(m.apply_finite(p)) - s.apply_finite(p);
                Ok(NormalForm {
                    conjugator: s,
                    kind: NormalFormKind::Translation(beta),
                })
            }
            AutomorphismClass::Elliptic => {
                // The in-disk fixed point goes to 0.
                let (inner, outer) = order_elliptic(xi_minus, xi_plus);
                let s = chart_sending(inner, outer);
                let avoid: Vec<Complex64> =
                    [inner, outer].iter().filter_map(|x| x.as_finite()).collect();
                let p = m.pick_probe(&avoid);
                let kappa =
                    s.apply_finite(m.apply_finite(p)) / s.apply_finite(p);
                Ok(NormalForm {
                    conjugator: s,
                    kind: NormalFormKind::Rotation(kappa.arg()),
                })
            }
            AutomorphismClass::Hyperbolic => {
                let p0 = xi_minus.as_finite().expect("hyperbolic fixed points are finite");
                let q0 = xi_plus.as_finite().expect("hyperbolic fixed points are finite");
                // ξ₋ is the repelling point: |M'(ξ)| > 1 there.
                let (rep, att) = if m.derivative_norm(p0) > m.derivative_norm(q0) {
                    (p0, q0)
                } else {
                    (q0, p0)
                };
                let s = chart_sending(ExtendedComplex::Finite(rep), ExtendedComplex::Finite(att));
                let p = m.pick_probe(&[rep, att]);
                let kappa = s.apply_finite(m.apply_finite(p)) / s.apply_finite(p);
                Ok(NormalForm {
                    conjugator: s,
                    kind: NormalFormKind::Dilation(kappa.re),
                })
            }
        }
    }

    /// `|M'(z)| = |ad - bc| / |cz + d|²`.
    fn derivative_norm(&self, z: Complex64) -> f64 {
        self.determinant().norm() / (self.c * z + self.d).norm_sqr()
    }

    /// A sample point inside the disk that keeps a safe margin from the given
    /// points and from the map's pole; used to read off normal-form data.
    fn pick_probe(&self, avoid: &[Complex64]) -> Complex64 {
        let candidates = [
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(0.0, 0.5),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.3, -0.4),
            Complex64::new(-0.2, 0.6),
        ];
        let pole = if self.c.norm() > 0.0 {
            Some(-self.d / self.c)
        } else {
            None
        };
        *candidates
            .iter()
            .max_by(|x, y| {
                let margin = |p: &Complex64| {
                    let mut m = avoid.iter().map(|q| (p - q).norm()).fold(f64::MAX, f64::min);
                    if let Some(pl) = pole {
                        m = m.min((p - pl).norm());
                    }
                    m
                };
                margin(x).total_cmp(&margin(y))
            })
            .expect("candidate list is nonempty")
    }
}

fn order_elliptic(
    xi_minus: ExtendedComplex,
    xi_plus: ExtendedComplex,
) -> (ExtendedComplex, ExtendedComplex) {
    let inside = |x: &ExtendedComplex| match x {
        ExtendedComplex::Finite(z) => z.norm() < 1.0,
        ExtendedComplex::Infinity => false,
    };
    if inside(&xi_minus) {
        (xi_minus, xi_plus)
    } else {
        (xi_plus, xi_minus)
    }
}

/// The chart sending `from ↦ 0` and `to ↦ ∞`; degenerates to the translation
/// chart `z - from` when `to = ∞`.
fn chart_sending(from: ExtendedComplex, to: ExtendedComplex) -> MoebiusMap {
    let from = from
        .as_finite()
        .expect("the fixed point sent to 0 is always finite for disk automorphisms");
    match to {
        ExtendedComplex::Infinity => MoebiusMap {
            a: Complex64::new(1.0, 0.0),
            b: -from,
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        },
        ExtendedComplex::Finite(to) => MoebiusMap {
            a: Complex64::new(1.0, 0.0),
            b: -from,
            c: Complex64::new(1.0, 0.0),
            d: -to,
        },
    }
}

/// The unique Euclidean circle (or line) carrying the orbit `{Mⁿ(z₀)}` of a
/// non-identity disk automorphism, with its hyperbolic classification.
///
/// Built as the circumcircle of `z₀, M(z₀), M²(z₀)`; collinear orbits yield
/// the line variant (diameters arise for half-turns and hyperbolic maps whose
/// axis passes through `z₀`).
pub fn invariant_curve(
    m: &MoebiusMap,
    z0: DiskPoint,
) -> Result<(GeneralizedCircle, CurveClass), GeometryError> {
    if !m.is_disk_automorphism() {
        return Err(GeometryError::NotAutomorphism);
    }
    if m.is_identity() {
        return Err(GeometryError::IdentityMap);
    }
    let p0 = z0.value();
    let p1 = m.apply_finite(p0);
    if (p1 - p0).norm() <= EPS_GEO {
        return Err(GeometryError::DegenerateOrbit);
    }
    let p2 = m.apply_finite(p1);
    if (p2 - p0).norm() <= EPS_GEO {
        // Half-turn: the two-point orbit lies on the chord through them.
        let dir = (p1 - p0) / (p1 - p0).norm();
        let line = GeneralizedCircle::line(p0, dir)?;
        let class = classify_line_through(&line);
        return Ok((line, class));
    }
    let curve = circumcircle_through(p0, p1, p2)?;
    let class = curve.classify()?;
    Ok((curve, class))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn symmetric_example() -> MoebiusMap {
        // [[2, 1], [1, 2]]: hyperbolic automorphism with fixed points ±1.
        MoebiusMap::new(c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)).unwrap()
    }

    fn parabolic_example() -> MoebiusMap {
        // [[1+i, -i], [i, 1-i]]: (a-d)² + 4bc = 0, double fixed point at 1.
        MoebiusMap::new(c(1.0, 1.0), c(0.0, -1.0), c(0.0, 1.0), c(1.0, -1.0)).unwrap()
    }

    #[test]
    fn identity_fixes_sample_point() {
        let m = MoebiusMap::identity();
        let z = ExtendedComplex::Finite(c(0.3, 0.1));
        assert!(m.apply(z).approx_eq(&z, 1e-15));
    }

    #[test]
    fn apply_matches_hand_computation() {
        let m = symmetric_example();
        // (2·1 + 1)/(1 + 2) = 1
        let w = m.apply(ExtendedComplex::Finite(c(1.0, 0.0)));
        assert!(w.approx_eq(&ExtendedComplex::Finite(c(1.0, 0.0)), 1e-15));
        // the pole -d/c = -2 maps to ∞
        assert!(m.apply(ExtendedComplex::Finite(c(-2.0, 0.0))).is_infinity());
        // ∞ maps to a/c = 2
        assert!(m
            .apply(ExtendedComplex::Infinity)
            .approx_eq(&ExtendedComplex::Finite(c(2.0, 0.0)), 1e-15));
    }

    #[test]
    fn degenerate_matrix_rejected() {
        assert_eq!(
            MoebiusMap::new(c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)),
            Err(GeometryError::DegenerateMap)
        );
    }

    #[test]
    fn composition_is_matrix_product() {
        let m = symmetric_example();
        let sq = m.compose(&m);
        assert!((sq.a - c(5.0, 0.0)).norm() < 1e-15);
        assert!((sq.b - c(4.0, 0.0)).norm() < 1e-15);
        assert!((sq.c - c(4.0, 0.0)).norm() < 1e-15);
        assert!((sq.d - c(5.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn rotations_compose_additively() {
        let r1 = MoebiusMap::rotation(0.7);
        let r2 = MoebiusMap::rotation(1.1);
        assert!(r1
            .compose(&r2)
            .projectively_equal(&MoebiusMap::rotation(1.8), 1e-12));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let m = symmetric_example();
        assert!(m
            .compose(&m.inverse())
            .projectively_equal(&MoebiusMap::identity(), 1e-12));
    }

    #[test]
    fn fixed_points_of_symmetric_example() {
        let (xm, xp) = symmetric_example().fixed_points().unwrap();
        assert!(xm.approx_eq(&ExtendedComplex::Finite(c(-1.0, 0.0)), 1e-12));
        assert!(xp.approx_eq(&ExtendedComplex::Finite(c(1.0, 0.0)), 1e-12));
    }

    #[test]
    fn fixed_points_of_rotation() {
        let (f1, f2) = MoebiusMap::rotation(1.0).fixed_points().unwrap();
        assert!(f1.approx_eq(&ExtendedComplex::Finite(c(0.0, 0.0)), 1e-12));
        assert!(f2.is_infinity());
    }

    #[test]
    fn identity_has_no_fixed_point_pair() {
        assert_eq!(
            MoebiusMap::identity().fixed_points(),
            Err(GeometryError::IdentityMap)
        );
    }

    #[test]
    fn classification_of_the_three_examples() {
        let rot = MoebiusMap::rotation(std::f64::consts::PI / 3.0);
        assert_eq!(rot.classify().unwrap(), AutomorphismClass::Elliptic);
        assert_eq!(
            symmetric_example().classify().unwrap(),
            AutomorphismClass::Hyperbolic
        );
        assert_eq!(
            parabolic_example().classify().unwrap(),
            AutomorphismClass::Parabolic
        );
    }

    #[test]
    fn classify_rejects_non_automorphisms() {
        // z ↦ 2z doubles the disk.
        let m = MoebiusMap::new(c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(m.classify(), Err(GeometryError::NotAutomorphism));
    }

    #[test]
    fn normal_form_of_rotation_is_rotation() {
        let theta = 0.9;
        let nf = MoebiusMap::rotation(theta).normal_form().unwrap();
        match nf.kind {
            NormalFormKind::Rotation(t) => assert!((t - theta).abs() < 1e-12, "θ = {t}"),
            other => panic!("expected rotation, got {other:?}"),
        }
    }

    #[test]
    fn normal_form_of_symmetric_example_is_dilation_by_3() {
        let nf = symmetric_example().normal_form().unwrap();
        match nf.kind {
            NormalFormKind::Dilation(r) => assert!((r - 3.0).abs() < 1e-12, "r = {r}"),
            other => panic!("expected dilation, got {other:?}"),
        }
    }

    #[test]
    fn normal_form_of_parabolic_example_is_translation() {
        let nf = parabolic_example().normal_form().unwrap();
        match nf.kind {
            NormalFormKind::Translation(beta) => {
                assert!((beta - c(0.0, 1.0)).norm() < 1e-12, "β = {beta}")
            }
            other => panic!("expected translation, got {other:?}"),
        }
    }

    #[test]
    fn normal_form_conjugacy_holds_pointwise() {
        for m in [
            symmetric_example(),
            parabolic_example(),
            MoebiusMap::rotation(0.61),
            MoebiusMap::rotation(1.4).compose(&MoebiusMap::blaschke(
                DiskPoint::from_re_im(0.4, -0.2).unwrap(),
            )),
        ] {
            let nf = m.normal_form().unwrap();
            let t = nf.t_map();
            let lhs = nf.conjugator.compose(&m);
            let rhs = t.compose(&nf.conjugator);
            assert!(
                lhs.projectively_equal(&rhs, 1e-10),
                "S∘M ≠ T∘S for {m:?}"
            );
        }
    }

    #[test]
    fn invariant_curve_of_rotation_is_centered_circle() {
        let m = MoebiusMap::rotation(0.37);
        let (curve, class) = invariant_curve(&m, DiskPoint::from_re_im(0.5, 0.0).unwrap()).unwrap();
        match curve {
            GeneralizedCircle::Circle { center, radius } => {
                assert!(center.norm() < 1e-12);
                assert!((radius - 0.5).abs() < 1e-12);
            }
            other => panic!("expected circle, got {other:?}"),
        }
        assert_eq!(class, CurveClass::HyperbolicCircle);
    }

    #[test]
    fn invariant_curve_of_symmetric_example_is_real_diameter() {
        let m = symmetric_example();
        let (curve, class) = invariant_curve(&m, DiskPoint::origin()).unwrap();
        match curve {
            GeneralizedCircle::Line { point, direction } => {
                assert!(point.im.abs() < 1e-12);
                assert!(direction.im.abs() < 1e-12);
            }
            other => panic!("expected line, got {other:?}"),
        }
        assert_eq!(class, CurveClass::HyperbolicLine);
    }

    #[test]
    fn invariant_curve_rejects_fixed_starting_point() {
        let m = MoebiusMap::rotation(0.5);
        assert!(matches!(
            invariant_curve(&m, DiskPoint::origin()),
            Err(GeometryError::DegenerateOrbit)
        ));
    }
}
