//! Default numerical tolerances.
//!
//! All defaults are relative to the characteristic scales declared by the
//! mechanical system (position, time, force); the raw constants below are for
//! unit-scaled systems.

/// Linear-algebra identity tolerance (block-inverse residuals, reset residuals).
pub const TOL_LIN: f64 = 1e-10;

/// Constraint residual tolerance defining mode domains, times position scale.
pub const TOL_DOMAIN: f64 = 1e-7;

/// Touchdown approach-velocity threshold, times (position scale / time scale).
pub const TOL_VEL: f64 = 1e-8;

/// Trending: a Lie derivative counts as nonzero above this, after scaling.
pub const TOL_TREND: f64 = 1e-9;

/// Relative singular-value cutoff declaring a matrix singular.
pub const SING_RATIO: f64 = 1e-12;

/// Slack on the impact energy-nonincrease check.
pub const TOL_ENERGY: f64 = 1e-9;

/// Highest Lie-derivative order the jet arithmetic can produce.
pub const MAX_JET_ORDER: usize = 7;

/// Default maximum order examined by trending classification.
pub const DEFAULT_TREND_ORDER: usize = 4;

/// Characteristic magnitudes used to normalize tolerances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scales {
    pub position: f64,
    pub time: f64,
    pub force: f64,
}

impl Default for Scales {
    fn default() -> Self {
        Scales { position: 1.0, time: 1.0, force: 1.0 }
    }
}

impl Scales {
    pub fn velocity(&self) -> f64 {
        self.position / self.time
    }
}

/// Tolerance bundle threaded through the executor and mode selection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub lin: f64,
    pub domain: f64,
    pub vel: f64,
    pub trend: f64,
    pub energy: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            lin: TOL_LIN,
            domain: TOL_DOMAIN,
            vel: TOL_VEL,
            trend: TOL_TREND,
            energy: TOL_ENERGY,
        }
    }
}

impl Tolerances {
    /// Tolerances in physical units for a system with the given scales.
    pub fn scaled(&self, s: &Scales) -> Tolerances {
        Tolerances {
            lin: self.lin,
            domain: self.domain * s.position,
            vel: self.vel * s.velocity(),
            trend: self.trend,
            energy: self.energy,
        }
    }
}
