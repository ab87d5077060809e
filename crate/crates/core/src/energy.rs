//! The six invariants: energy, Laplacian energy, LEL, incidence energy,
//! and the degree sums pi and pi*.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{ConjugateDegreeSequence, DegreeSequence, Graph};
use crate::spectral::{spectrum, sqrt_clamped, Spectrum, SpectrumKind};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyProfile {
    pub n: usize,
    pub m: usize,
    /// Sum of absolute adjacency eigenvalues.
    pub energy: f64,
    pub laplacian_energy: f64,
    pub lel: f64,
    pub incidence_energy: f64,
    pub pi: f64,
    pub pi_star: f64,
}

/// Sum of `|lambda_i|` over an adjacency spectrum.
pub fn energy(spec: &Spectrum) -> Result<f64> {
    spec.expect_kind(SpectrumKind::Adjacency)?;
    Ok(spec.values.iter().map(|x| x.abs()).sum())
}

/// Sum of `|mu_i - 2m/n|` over a Laplacian spectrum.
pub fn laplacian_energy(spec: &Spectrum, n: usize, m: usize) -> Result<f64> {
    spec.expect_kind(SpectrumKind::Laplacian)?;
    let mean = 2.0 * m as f64 / n as f64;
    Ok(spec.values.iter().map(|mu| (mu - mean).abs()).sum())
}

pub fn lel(spec: &Spectrum) -> Result<f64> {
    spec.expect_kind(SpectrumKind::Laplacian)?;
    Ok(spec.values.iter().copied().map(sqrt_clamped).sum())
}

/// Sum of square roots of the signless Laplacian eigenvalues.
pub fn incidence_energy(spec: &Spectrum) -> Result<f64> {
    spec.expect_kind(SpectrumKind::SignlessLaplacian)?;
    Ok(spec.values.iter().copied().map(sqrt_clamped).sum())
}

pub fn pi_sum(d: &DegreeSequence) -> f64 {
    d.as_slice().iter().map(|&x| (x as f64).sqrt()).sum()
}

pub fn pi_star_sum(dstar: &ConjugateDegreeSequence) -> f64 {
    dstar.as_slice().iter().map(|&x| (x as f64).sqrt()).sum()
}

pub fn profile(g: &Graph) -> Result<EnergyProfile> {
    let n = g.order();
    let m = g.edge_count();
    let a = spectrum(g, SpectrumKind::Adjacency)?;
    let l = spectrum(g, SpectrumKind::Laplacian)?;
    let q = spectrum(g, SpectrumKind::SignlessLaplacian)?;
    let d = g.degree_sequence();
    Ok(EnergyProfile {
        n,
        m,
        energy: energy(&a)?,
        laplacian_energy: laplacian_energy(&l, n, m)?,
        lel: lel(&l)?,
        incidence_energy: incidence_energy(&q)?,
        pi: pi_sum(&d),
        pi_star: pi_star_sum(&d.conjugate()),
    })
}
