//! Exact weighted chromatic polynomials and external-field Potts partition
//! functions, with transfer-matrix family formulas, strip eigenvalue
//! structure, accumulation-locus numerics, and zero tracking.

pub mod cli;
pub mod error;
pub mod family;
pub mod strip;
pub mod graph;
pub mod partition;
pub mod poly;
pub mod spectra;
pub mod zeros;

pub use error::{Result, WchromError};
pub use graph::{build_family, FamilySpec, Graph, SubgraphSummary};
pub use partition::{
    brute_force_z, check_zt, chromatic, delta_ph, list_coloring_ph, ph, potts_z, potts_z_capped,
    potts_z_general, tutte, u_eval, CouplingSpec, FieldSpec,
};
pub use poly::{MPoly, UniSlice};
