//! Fiber configurations and global invariants of an elliptic surface:
//! Euler number, Hodge numbers, Picard number via the Shioda-Tate formula,
//! Mordell-Weil rank, extremality, and the section self-intersection.

use serde::Serialize;

use crate::error::{require_c, Error, Result};
use crate::fibers::KodairaFiber;
use crate::num::{pow3, Int};

/// A fiber placed at a labeled point of the base curve. Labels are opaque;
/// only identity matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacedFiber {
    /// Base-point label, e.g. `"0"`, `"inf"`, `"zeta^3"`.
    pub location: String,
    /// Fiber type over that point.
    pub fiber: KodairaFiber,
}

/// Base-curve genus plus a placed list of fibers; the input to all the
/// invariant computations. Smooth fibers may be listed but contribute
/// nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceConfig {
    base_genus: Int,
    fibers: Vec<PlacedFiber>,
    has_section: bool,
}

impl SurfaceConfig {
    /// Build a configuration, validating every fiber tag.
    pub fn new(base_genus: Int, fibers: Vec<PlacedFiber>, has_section: bool) -> Result<Self> {
        if base_genus < 0 {
            return Err(Error::InvalidArgument(format!(
                "base genus must be nonnegative, got {base_genus}"
            )));
        }
        for f in &fibers {
            f.fiber.validate()?;
        }
        Ok(Self {
            base_genus,
            fibers,
            has_section,
        })
    }

    /// A configuration over the projective line with a section.
    pub fn over_p1(fibers: Vec<PlacedFiber>) -> Result<Self> {
        Self::new(0, fibers, true)
    }

    /// Base-curve genus `q`.
    pub fn base_genus(&self) -> Int {
        self.base_genus
    }

    /// The placed fibers.
    pub fn fibers(&self) -> &[PlacedFiber] {
        &self.fibers
    }

    /// Whether the fibration has a section.
    pub fn has_section(&self) -> bool {
        self.has_section
    }

    /// Number of singular fibers.
    pub fn singular_count(&self) -> usize {
        self.fibers.iter().filter(|f| !f.fiber.is_smooth()).count()
    }

    /// Topological Euler number: the sum of the local fiber Euler numbers.
    pub fn euler_total(&self) -> Int {
        self.fibers
            .iter()
            .map(|f| f.fiber.euler_number().expect("validated in constructor"))
            .sum()
    }

    /// Holomorphic Euler characteristic and the Hodge numbers `p_g`,
    /// `h^{1,1} = 10 p_g - 8q + 10`. Fails when the Euler number is not
    /// divisible by 12.
    pub fn hodge_numbers(&self) -> Result<HodgeNumbers> {
        let chi_top = self.euler_total();
        if chi_top % 12 != 0 {
            return Err(Error::InconsistentConfig(format!(
                "Euler number {chi_top} is not divisible by 12"
            )));
        }
        let chi_holo = chi_top / 12;
        let q = self.base_genus;
        let p_g = chi_holo - 1 + q;
        if p_g < 0 {
            return Err(Error::InconsistentConfig(format!(
                "geometric genus would be negative ({p_g})"
            )));
        }
        let h11 = 10 * p_g - 8 * q + 10;
        Ok(HodgeNumbers { chi_holo, p_g, h11 })
    }

    /// `sum (m_v - 1)` over the reducible fibers.
    pub fn reducible_excess(&self) -> Int {
        self.fibers
            .iter()
            .map(|f| f.fiber.components().expect("validated in constructor") - 1)
            .sum()
    }

    /// Shioda-Tate: `picard = 2 + sum (m_v - 1) + mw_rank`.
    pub fn shioda_tate(&self, mw_rank: Int) -> Result<Int> {
        if mw_rank < 0 {
            return Err(Error::InvalidArgument(format!(
                "Mordell-Weil rank must be nonnegative, got {mw_rank}"
            )));
        }
        Ok(2 + self.reducible_excess() + mw_rank)
    }

    /// Mordell-Weil rank under maximal Picard number,
    /// `h^{1,1} - 2 - sum (m_v - 1)`, plus whether the surface is extremal
    /// (rank zero). Fails when the rank would be negative.
    pub fn mw_rank_and_extremality(&self) -> Result<(Int, bool)> {
        let hodge = self.hodge_numbers()?;
        let rank = hodge.h11 - 2 - self.reducible_excess();
        if rank < 0 {
            return Err(Error::InconsistentConfig(format!(
                "Shioda-Tate exceeds h^{{1,1}}: rank would be {rank}"
            )));
        }
        Ok((rank, rank == 0))
    }

    /// Self-intersection of any section, `-chi_holo`.
    pub fn section_self_intersection(&self) -> Result<Int> {
        Ok(-self.hodge_numbers()?.chi_holo)
    }

    /// The full invariant report.
    pub fn invariant_report(&self) -> Result<InvariantReport> {
        let chi_top = self.euler_total();
        let hodge = self.hodge_numbers()?;
        let (mw_rank, extremal) = self.mw_rank_and_extremality()?;
        let picard = self.shioda_tate(mw_rank)?;
        debug_assert!(picard <= hodge.h11);
        Ok(InvariantReport {
            chi_top,
            chi_holo: hodge.chi_holo,
            p_g: hodge.p_g,
            h11: hodge.h11,
            picard,
            mw_rank,
            extremal,
            section_self_intersection: -hodge.chi_holo,
        })
    }
}

/// Hodge data derived from the Euler number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HodgeNumbers {
    /// Holomorphic Euler characteristic `chi(O)`.
    pub chi_holo: Int,
    /// Geometric genus.
    pub p_g: Int,
    /// `h^{1,1}`.
    pub h11: Int,
}

/// Global invariants of a configured elliptic surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    /// Topological Euler number.
    #[serde(rename = "chiTop")]
    pub chi_top: Int,
    /// Holomorphic Euler characteristic.
    #[serde(rename = "chiHolo")]
    pub chi_holo: Int,
    /// Geometric genus.
    #[serde(rename = "p_g")]
    pub p_g: Int,
    /// `h^{1,1}`.
    pub h11: Int,
    /// Picard number from Shioda-Tate at the computed rank.
    pub picard: Int,
    /// Mordell-Weil rank.
    #[serde(rename = "mwRank")]
    pub mw_rank: Int,
    /// Whether Picard number is maximal with rank zero.
    pub extremal: bool,
    /// Self-intersection of a section.
    #[serde(rename = "sectionSelfIntersection")]
    pub section_self_intersection: Int,
}

/// The fiber configuration of `X_c`: one `I_{4*3^c}` at `0`, one `I_{3^c}*`
/// at `inf`, and `3^c` fibers of type `I_1` at the roots of unity. The
/// fiber list is materialised, so `c` is capped at
/// [`crate::MAX_MATERIALISED_C`]; use [`schreieder_invariant_report`]
/// beyond that.
pub fn schreieder_config(c: u32) -> Result<SurfaceConfig> {
    require_c(c)?;
    crate::require_materialisable(c)?;
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    let four_n = n.checked_mul(4).ok_or(Error::Overflow("4*3^c"))?;
    let mut fibers = Vec::with_capacity(usize::try_from(n).unwrap_or(0) + 2);
    fibers.push(PlacedFiber {
        location: "0".into(),
        fiber: KodairaFiber::I(four_n),
    });
    fibers.push(PlacedFiber {
        location: "inf".into(),
        fiber: KodairaFiber::IStar(n),
    });
    for i in 1..=n {
        fibers.push(PlacedFiber {
            location: format!("zeta^{i}"),
            fiber: KodairaFiber::I(1),
        });
    }
    SurfaceConfig::over_p1(fibers)
}

/// The invariant report of `X_c` by closed forms, never materialising the
/// fiber list: `chi_top = 6*3^c + 6`, `h^{1,1} = 5*3^c + 5`, reducible
/// excess `5*3^c + 3`, rank 0. Agrees with the configuration route
/// wherever both run; `c` is bounded only by the scalar width.
pub fn schreieder_invariant_report(c: u32) -> Result<InvariantReport> {
    require_c(c)?;
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    let chi_top = n
        .checked_mul(6)
        .and_then(|x| x.checked_add(6))
        .ok_or(Error::Overflow("6*3^c + 6"))?;
    let chi_holo = chi_top / 12;
    let p_g = chi_holo - 1;
    let h11 = 5 * n + 5;
    let excess = (4 * n - 1) + (n + 5 - 1);
    let mw_rank = h11 - 2 - excess;
    debug_assert_eq!(mw_rank, 0);
    Ok(InvariantReport {
        chi_top,
        chi_holo,
        p_g,
        h11,
        picard: 2 + excess + mw_rank,
        mw_rank,
        extremal: mw_rank == 0,
        section_self_intersection: -chi_holo,
    })
}
