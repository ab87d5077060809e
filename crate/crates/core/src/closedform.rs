//! Closed forms for paths, cycles and complete graphs, the arithmetic
//! progression trig sums they rest on, and the subclass each family falls in.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, Classification, Subclass, Threshold, ToleranceConfig};
use crate::energy::{pi_sum, profile, EnergyProfile};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};

/// Agreement required between a closed form and the eigensolver.
pub const CLOSED_FORM_TOL: f64 = 1e-8;
/// `|E - IE|` allowed for odd cycles.
pub const ODD_CYCLE_EQUALITY_TOL: f64 = 1e-9;
const DEGENERATE_SIN: f64 = 1e-12;

fn half_angle_denominator(alpha: f64) -> Result<f64> {
    let s = (alpha / 2.0).sin();
    if s.abs() <= DEGENERATE_SIN {
        Err(Error::DegenerateDenominator(s))
    } else {
        Ok(s)
    }
}

/// `sum_{j=0}^{n} cos(theta + alpha j)` in closed form.
pub fn trig_sum_cos(theta: f64, alpha: f64, n: usize) -> Result<f64> {
    let s = half_angle_denominator(alpha)?;
    let nf = n as f64;
    Ok(((nf + 1.0) * alpha / 2.0).sin() * (theta + nf * alpha / 2.0).cos() / s)
}

/// `sum_{j=0}^{n} sin(theta + alpha j)` in closed form.
pub fn trig_sum_sin(theta: f64, alpha: f64, n: usize) -> Result<f64> {
    let s = half_angle_denominator(alpha)?;
    let nf = n as f64;
    Ok(((nf + 1.0) * alpha / 2.0).sin() * (theta + nf * alpha / 2.0).sin() / s)
}

/// Term-by-term summation, the reference for [`trig_sum_cos`].
pub fn direct_cos_sum(theta: f64, alpha: f64, n: usize) -> f64 {
    (0..=n).map(|j| (theta + alpha * j as f64).cos()).sum()
}

pub fn direct_sin_sum(theta: f64, alpha: f64, n: usize) -> f64 {
    (0..=n).map(|j| (theta + alpha * j as f64).sin()).sum()
}

fn cot(x: f64) -> f64 {
    x.cos() / x.sin()
}

fn csc(x: f64) -> f64 {
    1.0 / x.sin()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Path,
    Cycle,
    Complete,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Path, Family::Cycle, Family::Complete];

    pub fn graph(self, n: usize) -> Result<Graph> {
        match self {
            Family::Path => Graph::path(n),
            Family::Cycle => Graph::cycle(n),
            Family::Complete => Graph::complete(n),
        }
    }

    /// Smallest order the family's subclass statement covers.
    pub fn min_order(self) -> usize {
        match self {
            Family::Path => 2,
            Family::Cycle => 3,
            Family::Complete => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathClosed {
    pub energy: f64,
    pub incidence_energy: f64,
    pub pi: f64,
}

/// Closed forms for `P_n`, `n >= 2`. The energy takes the csc form for even
/// `n` and the cot form for odd `n`.
pub fn path_closed(n: usize) -> Result<PathClosed> {
    if n < 2 {
        return Err(Error::InvalidOrder {
            what: "path closed form",
            n,
        });
    }
    let nf = n as f64;
    let x = PI / (2.0 * (nf + 1.0));
    let energy = if n.is_multiple_of(2) {
        -2.0 + 2.0 * csc(x)
    } else {
        -2.0 + 2.0 * cot(x)
    };
    Ok(PathClosed {
        energy,
        incidence_energy: -1.0 + cot(PI / (4.0 * nf)),
        pi: 2.0 + (nf - 2.0) * SQRT_2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleClosed {
    pub energy: f64,
    pub lel: f64,
    pub incidence_energy: f64,
    pub pi: f64,
    pub pi_star: f64,
}

/// Closed forms for `C_n`, `n >= 3`, split by `n mod 4`.
pub fn cycle_closed(n: usize) -> Result<CycleClosed> {
    if n < 3 {
        return Err(Error::InvalidOrder {
            what: "cycle closed form",
            n,
        });
    }
    let nf = n as f64;
    let half = PI / (2.0 * nf);
    let (energy, incidence_energy) = match n % 4 {
        0 => (4.0 * cot(PI / nf), 2.0 * cot(half)),
        2 => (4.0 * csc(PI / nf), 2.0 * cot(half)),
        _ => (2.0 * csc(half), 2.0 * csc(half)),
    };
    let degrees = DegreeSequence::new(vec![2; n])?;
    Ok(CycleClosed {
        energy,
        lel: 2.0 * cot(half),
        incidence_energy,
        pi: pi_sum(&degrees),
        pi_star: 2.0 * nf.sqrt(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompleteClosed {
    pub energy: f64,
    pub pi_star: f64,
}

pub fn complete_closed(n: usize) -> Result<CompleteClosed> {
    if n == 0 {
        return Err(Error::InvalidOrder {
            what: "complete closed form",
            n,
        });
    }
    let nf = n as f64;
    Ok(CompleteClosed {
        energy: if n == 1 { 0.0 } else { 2.0 * nf - 2.0 },
        pi_star: (nf - 1.0) * nf.sqrt(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyPrediction {
    pub family: Family,
    pub n: usize,
    pub predicted: Subclass,
    /// A threshold `E` is expected to equal exactly.
    pub equality: Option<Threshold>,
}

/// Subclass of a family member: paths are `G4`; cycles are `G2`, `G3`, `G4`
/// for `n = 4k`, odd `n`, `n = 4k+2`; complete graphs satisfy `E <= pi*`.
///
/// `C_4` and `K_4` sit exactly on `E = pi* = 4` (resp. 6) and so belong to
/// `G1`. `P_2` sits on `E = pi = 2`.
pub fn predicted_subclass(family: Family, n: usize) -> Result<FamilyPrediction> {
    if n < family.min_order() {
        return Err(Error::InvalidOrder {
            what: "family prediction",
            n,
        });
    }
    let (predicted, equality) = match family {
        Family::Path if n == 2 => (Subclass::G4, Some(Threshold::Pi)),
        Family::Path => (Subclass::G4, None),
        Family::Cycle if n == 4 => (Subclass::G1, Some(Threshold::PiStar)),
        Family::Cycle if n.is_multiple_of(4) => (Subclass::G2, None),
        Family::Cycle if n % 2 == 1 => (Subclass::G3, Some(Threshold::Ie)),
        Family::Cycle => (Subclass::G4, None),
        Family::Complete if n == 4 => (Subclass::G1, Some(Threshold::PiStar)),
        Family::Complete => (Subclass::G1, None),
    };
    Ok(FamilyPrediction {
        family,
        n,
        predicted,
        equality,
    })
}

/// A named closed-form value and the profile field it predicts.
pub type ClosedFormValue = (&'static str, f64, fn(&EnergyProfile) -> f64);

pub fn closed_form_values(family: Family, n: usize) -> Result<Vec<ClosedFormValue>> {
    Ok(match family {
        Family::Path => {
            let c = path_closed(n)?;
            vec![
                ("E", c.energy, |p| p.energy),
                ("IE", c.incidence_energy, |p| p.incidence_energy),
                ("pi", c.pi, |p| p.pi),
            ]
        }
        Family::Cycle => {
            let c = cycle_closed(n)?;
            vec![
                ("E", c.energy, |p| p.energy),
                ("LEL", c.lel, |p| p.lel),
                ("IE", c.incidence_energy, |p| p.incidence_energy),
                ("pi", c.pi, |p| p.pi),
                ("pi*", c.pi_star, |p| p.pi_star),
            ]
        }
        Family::Complete => {
            let c = complete_closed(n)?;
            vec![("E", c.energy, |p| p.energy), ("pi*", c.pi_star, |p| p.pi_star)]
        }
    })
}

/// Outcome of checking one family member against its closed forms and
/// predicted subclass.
#[derive(Debug, Clone)]
pub struct FamilyCheck {
    pub prediction: FamilyPrediction,
    pub profile: EnergyProfile,
    pub classification: Classification,
    pub failures: Vec<String>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_family(family: Family, n: usize, tol: &ToleranceConfig) -> Result<FamilyCheck> {
    let prediction = predicted_subclass(family, n)?;
    let p = profile(&family.graph(n)?)?;
    let classification = classify(&p, tol)?;
    let mut failures = Vec::new();

    for (name, closed, numeric) in closed_form_values(family, n)? {
        let diff = (closed - numeric(&p)).abs();
        if diff > CLOSED_FORM_TOL {
            failures.push(format!(
                "{name}: closed form {closed:.12} vs eigensolve {:.12}",
                numeric(&p)
            ));
        }
    }
    if classification.subclass != prediction.predicted {
        failures.push(format!(
            "classified {} but predicted {}",
            classification.subclass, prediction.predicted
        ));
    }
    if let Some(t) = prediction.equality {
        if !classification.has_flag(t) {
            failures.push(format!("expected E={t}, margin {:.3e}", p.energy - t.value(&p)));
        }
    }
    if family == Family::Cycle && n % 2 == 1 && (p.energy - p.incidence_energy).abs() > ODD_CYCLE_EQUALITY_TOL {
        failures.push(format!("|E - IE| = {:.3e}", (p.energy - p.incidence_energy).abs()));
    }
    Ok(FamilyCheck {
        prediction,
        profile: p,
        classification,
        failures,
    })
}
