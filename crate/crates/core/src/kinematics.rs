//! Special-relativistic kinematics for the Wigner rotation of a massive
//! spin-½ particle. Units have c = 1.

use crate::error::{check_range, Error, Result};

/// Muon-to-electron mass ratio used when a caller needs a concrete value.
pub const MUON_ELECTRON_MASS_RATIO: f64 = 206.768_283_0;

const UNIT_TOL: f64 = 1e-12;

/// A unit 3-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector([f64; 3]);

impl UnitVector {
    pub const X: UnitVector = UnitVector([1.0, 0.0, 0.0]);
    pub const Y: UnitVector = UnitVector([0.0, 1.0, 0.0]);
    pub const Z: UnitVector = UnitVector([0.0, 0.0, 1.0]);

    /// Accepts a vector that is already unit length within 1e-12.
    pub fn new(v: [f64; 3]) -> Result<Self> {
        let n = norm(v);
        if !n.is_finite() || (n - 1.0).abs() > UNIT_TOL {
            return Err(Error::InvalidInput(format!(
                "axis {v:?} has length {n}, expected 1"
            )));
        }
        Ok(Self(v))
    }

    /// Normalizes any nonzero vector.
    pub fn normalize(v: [f64; 3]) -> Result<Self> {
        let n = norm(v);
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::InvalidInput(format!("cannot normalize {v:?}")));
        }
        Ok(Self([v[0] / n, v[1] / n, v[2] / n]))
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.0
    }

    pub fn dot(&self, other: &UnitVector) -> f64 {
        dot(self.0, other.0)
    }

    pub fn cross(&self, other: &UnitVector) -> [f64; 3] {
        cross(self.0, other.0)
    }
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(v: [f64; 3]) -> f64 {
    dot(v, v).sqrt()
}

fn check_speed(name: &'static str, v: f64) -> Result<f64> {
    check_range(name, v, "[0, 1)", (0.0..1.0).contains(&v))
}

/// Boost velocity and particle velocity, both as speed + direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostConfig {
    beta_boost: f64,
    boost_axis: UnitVector,
    particle_speed: f64,
    particle_axis: UnitVector,
}

impl BoostConfig {
    pub fn new(
        beta_boost: f64,
        boost_axis: UnitVector,
        particle_speed: f64,
        particle_axis: UnitVector,
    ) -> Result<Self> {
        check_speed("beta_boost", beta_boost)?;
        check_speed("particle_speed", particle_speed)?;
        Ok(Self {
            beta_boost,
            boost_axis,
            particle_speed,
            particle_axis,
        })
    }

    /// Boost along ŷ acting on a particle moving along x̂.
    pub fn perpendicular(beta_boost: f64, particle_speed: f64) -> Result<Self> {
        Self::new(beta_boost, UnitVector::Y, particle_speed, UnitVector::X)
    }

    pub fn beta_boost(&self) -> f64 {
        self.beta_boost
    }

    pub fn particle_speed(&self) -> f64 {
        self.particle_speed
    }

    pub fn boost_axis(&self) -> UnitVector {
        self.boost_axis
    }

    pub fn particle_axis(&self) -> UnitVector {
        self.particle_axis
    }
}

/// Boost rapidity `alpha` and particle rapidity `delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rapidities {
    pub alpha: f64,
    pub delta: f64,
}

/// Rapidity of a speed in `[0, 1)`: `atanh(v)`, so `cosh` is the Lorentz factor.
pub fn rapidity(speed: f64) -> Result<f64> {
    Ok(check_speed("speed", speed)?.atanh())
}

pub fn rapidities_from(config: &BoostConfig) -> Rapidities {
    Rapidities {
        alpha: config.beta_boost.atanh(),
        delta: config.particle_speed.atanh(),
    }
}

/// Rotation angle in `(-π, π]` and unit axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerRotation {
    pub angle: f64,
    pub axis: UnitVector,
}

/// Wigner rotation of a spin-½ particle under an arbitrary pure boost.
///
/// Evaluates the half-angle expressions
///
/// ```text
/// cos(Ω/2)   = [ch(α/2)ch(δ/2) + sh(α/2)sh(δ/2)(ê·p̂)] / N
/// n sin(Ω/2) =  sh(α/2)sh(δ/2)(ê×p̂) / N
/// N = sqrt(½ + ½ chα chδ + ½ (ê·p̂) shα shδ)
/// ```
///
/// and recovers Ω with `atan2`. A collinear boost gives no rotation; the axis
/// is then reported as ẑ.
pub fn wigner_rotation_general(config: &BoostConfig) -> WignerRotation {
    let Rapidities { alpha, delta } = rapidities_from(config);
    let e_dot_p = config.boost_axis.dot(&config.particle_axis);
    let e_cross_p = config.boost_axis.cross(&config.particle_axis);

    let norm_sq =
        0.5 + 0.5 * alpha.cosh() * delta.cosh() + 0.5 * e_dot_p * alpha.sinh() * delta.sinh();
    let n = norm_sq.sqrt();
    let (ha, hd) = (0.5 * alpha, 0.5 * delta);
    let cos_half = (ha.cosh() * hd.cosh() + ha.sinh() * hd.sinh() * e_dot_p) / n;
    let sin_vec = e_cross_p.map(|c| ha.sinh() * hd.sinh() * c / n);
    let sin_half = norm(sin_vec);

    if sin_half == 0.0 {
        return WignerRotation {
            angle: 0.0,
            axis: UnitVector::Z,
        };
    }
    let angle = 2.0 * sin_half.atan2(cos_half);
    let axis = UnitVector::normalize(sin_vec).expect("nonzero sine part");
    WignerRotation { angle, axis }
}

/// Wigner angle for a boost perpendicular to the particle momentum:
/// `tan φ = sinh α sinh δ / (cosh α + cosh δ)`.
pub fn wigner_angle_perpendicular(beta_boost: f64, particle_speed: f64) -> Result<f64> {
    let alpha = rapidity(check_speed("beta_boost", beta_boost)?)?;
    let delta = rapidity(check_speed("particle_speed", particle_speed)?)?;
    Ok((alpha.sinh() * delta.sinh()).atan2(alpha.cosh() + delta.cosh()))
}

/// Electron/muon masses and the momentum-matching coefficient `a = m_e/m_μ`
/// that makes both particles see the same Wigner angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumMatching {
    pub m_e: f64,
    pub m_mu: f64,
    pub a: f64,
}

impl MomentumMatching {
    pub fn new(m_e: f64, m_mu: f64) -> Result<Self> {
        check_range("m_e", m_e, "(0, inf)", m_e > 0.0)?;
        check_range("m_mu", m_mu, "(0, inf)", m_mu > 0.0)?;
        Ok(Self {
            m_e,
            m_mu,
            a: m_e / m_mu,
        })
    }

    /// Standard electron/muon pair in units of the electron mass.
    pub fn electron_muon() -> Self {
        Self::new(1.0, MUON_ELECTRON_MASS_RATIO).expect("positive masses")
    }

    /// Electron speed matched to a given muon speed under this coefficient.
    pub fn electron_speed(&self, v_muon: f64) -> Result<f64> {
        matched_speed(self.a, self.m_e, self.m_mu, v_muon)
    }
}

/// Speed of particle A whose relativistic momentum equals `a` times that of
/// particle B moving at `v_b2`:
/// `v_A1 = a(m_μ/m_e) v_B2 / sqrt(1 + ((a²m_μ² − m_e²)/m_e²) v_B2²)`.
pub fn matched_speed(a: f64, m_e: f64, m_mu: f64, v_b2: f64) -> Result<f64> {
    check_range("m_e", m_e, "(0, inf)", m_e > 0.0)?;
    check_range("m_mu", m_mu, "(0, inf)", m_mu > 0.0)?;
    check_range("a", a, "finite", true)?;
    check_speed("v_b2", v_b2)?;
    let k = (a * a * m_mu * m_mu - m_e * m_e) / (m_e * m_e);
    Ok(a * (m_mu / m_e) * v_b2 / (1.0 + k * v_b2 * v_b2).sqrt())
}
