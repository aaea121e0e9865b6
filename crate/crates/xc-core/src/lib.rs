//! Exact invariants of the elliptic modular surfaces `X_c`.
//!
//! For `c >= 2` the surface `X_c` is the minimal resolution of the quotient
//! of `C_g x C_g` by a cyclic group of order `3^c` acting anti-diagonally,
//! where `C_g` is the hyperelliptic curve `y^2 = x^{2g+1} + 1` of genus
//! `g = (3^c - 1)/2`. This crate mechanises the finite computations that
//! pin down its geometry:
//!
//! - [`singularities`]: quotient-singularity weights, Hirzebruch-Jung
//!   expansions, resolution chains, and the nine fixed points.
//! - [`fibers`]: the Kodaira fiber catalogue (components, Euler numbers,
//!   component groups, monodromy classes, j-values, dual graphs).
//! - [`invariants`]: fiber configurations and the global invariants (Euler
//!   number, Hodge numbers, Shioda-Tate, extremality).
//! - [`tower`]: the vanishing-sequence calculus through the blow-up and
//!   quotient tower, plurigenera, Kodaira dimension, and the Iitaka-base
//!   exponent check.
//! - [`j_profile`]: degree and ramification profile of the j-map, with the
//!   modularity certificate.
//! - [`monodromy`]: 2x2 integer matrices, the monodromy-group presentation,
//!   cusp signatures, and congruence-table lookups.
//! - [`mordell_weil`]: section counting and the torsion group by injection
//!   search into the fiber component groups.
//!
//! Everything is exact: integers and rationals only, generic over the
//! integer scalar through [`num::Scalar`] with the concrete aliases
//! [`Int`] and [`Rat`] used throughout the higher-level modules.

/// Largest `c` for which routes that materialise `3^c`-sized data (fiber
/// lists, generator lists, resolution chains) will run; closed-form routes
/// are bounded only by the scalar width.
pub const MAX_MATERIALISED_C: u32 = 12;

/// Guard for routes that materialise `3^c`-sized data.
pub fn require_materialisable(c: u32) -> error::Result<()> {
    if c > MAX_MATERIALISED_C {
        return Err(error::Error::InvalidArgument(format!(
            "c = {c} would materialise 3^{c} records; the closed-form routes handle large c"
        )));
    }
    Ok(())
}

pub mod abelian;
pub mod error;
pub mod fibers;
pub mod invariants;
pub mod j_profile;
pub mod monodromy;
pub mod mordell_weil;
pub mod num;
pub mod singularities;
pub mod tower;

pub use abelian::AbelianGroup;
pub use error::{Error, Result};
pub use fibers::{JValue, KodairaFiber};
pub use invariants::{schreieder_config, InvariantReport, PlacedFiber, SurfaceConfig};
pub use j_profile::{
    j_degree, j_nonconstant, modularity_certificate, nori_profile, NoriProfile, RamificationProfile,
};
pub use monodromy::{
    abelianization_check, cusp_signature, gamma_presentation, CongruenceTable, CuspSignature, Mat2,
    Presentation,
};
pub use mordell_weil::{mw_torsion_group, section_count, section_genus_bound};
pub use num::{Int, Rat, Scalar};
pub use singularities::{
    hj_expansion, normalize_weights, resolve, schreieder_fixed_points, FixedPoint, FixedPointKind,
    HJChain, QuotientSingularity, Resolution,
};
pub use tower::{
    curve_genus, iitaka_base_check, kock_tait_basis, kodaira_dimension, plurigenus,
    plurigenus_formula, tower_pushforward, BasisForm, KodairaDimension, ProductForm, VanishSeq,
};
