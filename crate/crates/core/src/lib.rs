//! Graph energies, subclass classification and isomorph-free census of
//! connected simple graphs.
//!
//! For a graph `G` the crate computes the energy `E`, the Laplacian energy
//! `LE`, the Laplacian-energy-like invariant `LEL`, the incidence energy
//! `IE`, and the degree sums `pi = sum sqrt(d_i)` and
//! `pi* = sum sqrt(d*_i)` over the conjugate degree sequence. Connected
//! graphs are sorted into four classes by where `E` falls in the chain
//! `pi* <= LEL <= IE <= pi`.
//!
//! ```
//! use genergy::{classify, profile, Graph, Subclass, ToleranceConfig};
//!
//! let c5 = Graph::cycle(5).unwrap();
//! let p = profile(&c5).unwrap();
//! let c = classify(&p, &ToleranceConfig::default()).unwrap();
//! assert_eq!(c.subclass, Subclass::G3);
//! ```

pub mod canon;
pub mod census;
pub mod classify;
pub mod closedform;
pub mod energy;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod par;
pub mod spectral;

pub use canon::{canonical_form, CanonicalForm};
pub use census::{run_census, CensusInput, CensusRow, RatioRow};
pub use classify::{classify, verify_chain, Classification, Subclass, Threshold, ToleranceConfig};
pub use closedform::{predicted_subclass, Family};
pub use energy::{profile, EnergyProfile};
pub use enumerate::{connected_graphs, CanonicalGraph};
pub use error::{Error, Result};
pub use graph::{ConjugateDegreeSequence, DegreeSequence, Graph};
pub use graph6::{parse_graph6, to_graph6};
pub use par::Workers;
pub use spectral::{Spectrum, SpectrumKind};
