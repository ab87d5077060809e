//! Placement of a connected graph's energy into one of four subclasses
//! along the chain `pi* <= LEL <= IE <= pi`.
//!
//! Class `G1` holds `E <= pi*`; `G2` holds `pi* < E <= LEL`; `G3` holds
//! `LEL < E <= IE`; `G4` holds `IE < E <= pi`. Comparisons use a tolerance
//! `eps = max(eps_abs, eps_rel * max(1, |E|))`, and a value within `eps` of a
//! threshold counts as equal to it, so it falls into the earlier class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::energy::EnergyProfile;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Subclass {
    G1,
    G2,
    G3,
    G4,
}

impl Subclass {
    pub const ALL: [Subclass; 4] = [Subclass::G1, Subclass::G2, Subclass::G3, Subclass::G4];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Subclass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.index() + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    #[serde(rename = "abs")]
    pub eps_abs: f64,
    #[serde(rename = "rel")]
    pub eps_rel: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            eps_abs: 1e-9,
            eps_rel: 1e-12,
        }
    }
}

impl ToleranceConfig {
    pub fn new(eps_abs: f64, eps_rel: f64) -> Result<Self> {
        for eps in [eps_abs, eps_rel] {
            if !(eps.is_finite() && eps > 0.0) {
                return Err(Error::InvalidTolerance(eps));
            }
        }
        Ok(ToleranceConfig { eps_abs, eps_rel })
    }

    /// Effective tolerance for comparisons against a value of size `scale`.
    pub fn eps(&self, scale: f64) -> f64 {
        self.eps_abs.max(self.eps_rel * scale.abs().max(1.0))
    }
}

/// The four invariants the energy is compared against, in chain order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Threshold {
    PiStar,
    Lel,
    Ie,
    Pi,
}

impl Threshold {
    pub const ALL: [Threshold; 4] = [Threshold::PiStar, Threshold::Lel, Threshold::Ie, Threshold::Pi];

    pub fn value(self, p: &EnergyProfile) -> f64 {
        match self {
            Threshold::PiStar => p.pi_star,
            Threshold::Lel => p.lel,
            Threshold::Ie => p.incidence_energy,
            Threshold::Pi => p.pi,
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Threshold::PiStar => "pi*",
            Threshold::Lel => "LEL",
            Threshold::Ie => "IE",
            Threshold::Pi => "pi",
        })
    }
}

/// `E` agreed with a threshold within tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryFlag {
    pub threshold: Threshold,
    /// `E - threshold`.
    pub margin: f64,
}

impl fmt::Display for BoundaryFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E={} (margin {:+.3e})", self.threshold, self.margin)
    }
}

/// How far either side of `eps_abs`, in factors of ten, a gap must lie
/// before it is considered unambiguous.
pub const BORDERLINE_DECADES: i32 = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub subclass: Subclass,
    pub flags: Vec<BoundaryFlag>,
    /// Some gap `|E - T|` lies within [`BORDERLINE_DECADES`] decades of the
    /// tolerance, so a different tolerance could move the graph.
    pub borderline: bool,
}

impl Classification {
    pub fn has_flag(&self, t: Threshold) -> bool {
        self.flags.iter().any(|f| f.threshold == t)
    }
}

/// One of the four proven inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainLink {
    PiStarLeLel,
    LelLeIe,
    IeLePi,
    EnergyLePi,
}

impl ChainLink {
    pub const ALL: [ChainLink; 4] = [
        ChainLink::PiStarLeLel,
        ChainLink::LelLeIe,
        ChainLink::IeLePi,
        ChainLink::EnergyLePi,
    ];

    fn sides(self, p: &EnergyProfile) -> (f64, f64) {
        match self {
            ChainLink::PiStarLeLel => (p.pi_star, p.lel),
            ChainLink::LelLeIe => (p.lel, p.incidence_energy),
            ChainLink::IeLePi => (p.incidence_energy, p.pi),
            ChainLink::EnergyLePi => (p.energy, p.pi),
        }
    }
}

impl fmt::Display for ChainLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainLink::PiStarLeLel => "pi*<=LEL",
            ChainLink::LelLeIe => "LEL<=IE",
            ChainLink::IeLePi => "IE<=pi",
            ChainLink::EnergyLePi => "E<=pi",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainViolation {
    pub link: ChainLink,
    /// `right - left`; negative beyond tolerance.
    pub slack: f64,
}

/// Checks `pi* <= LEL <= IE <= pi` and `E <= pi`, returning every
/// inequality that fails by more than tolerance.
pub fn verify_chain(p: &EnergyProfile, tol: &ToleranceConfig) -> Vec<ChainViolation> {
    ChainLink::ALL
        .into_iter()
        .filter_map(|link| {
            let (left, right) = link.sides(p);
            let slack = right - left;
            (slack < -tol.eps(left.abs().max(right.abs()))).then_some(ChainViolation { link, slack })
        })
        .collect()
}

fn describe(violations: &[ChainViolation]) -> String {
    violations
        .iter()
        .map(|v| format!("{} (slack {:.3e})", v.link, v.slack))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn classify(p: &EnergyProfile, tol: &ToleranceConfig) -> Result<Classification> {
    let violations = verify_chain(p, tol);
    if !violations.is_empty() {
        return Err(Error::ChainViolation(describe(&violations)));
    }
    let e = p.energy;
    let eps = tol.eps(e);

    let subclass = Threshold::ALL
        .into_iter()
        .zip(Subclass::ALL)
        .find(|&(t, _)| e <= t.value(p) + eps)
        .map(|(_, class)| class)
        // E <= pi holds by the chain check, so this is only reached through
        // round-off at the last comparison.
        .unwrap_or(Subclass::G4);

    let flags = Threshold::ALL
        .into_iter()
        .filter_map(|t| {
            let margin = e - t.value(p);
            (margin.abs() <= eps).then_some(BoundaryFlag { threshold: t, margin })
        })
        .collect();

    let low = tol.eps_abs * 10f64.powi(-BORDERLINE_DECADES);
    let high = tol.eps_abs * 10f64.powi(BORDERLINE_DECADES);
    let borderline = Threshold::ALL.into_iter().any(|t| {
        let gap = (e - t.value(p)).abs();
        gap > low && gap <= high
    });

    Ok(Classification {
        subclass,
        flags,
        borderline,
    })
}
