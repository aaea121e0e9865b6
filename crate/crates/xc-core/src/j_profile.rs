//! Degree and ramification profile of the j-invariant map of an extremal
//! elliptic fibration, from the fiber configuration alone, together with
//! the non-constancy and modularity certificates.
//!
//! For an extremal fibration with non-constant j whose singular fibers are
//! all of type `I_b` or `I_b*` with `b > 0`, the branch data over `0`,
//! `1728` and `infinity` is forced: the branch-weight identity
//! `R_0 + R_1728 = 7 deg / 6` meets the lower bounds `R_0 >= 2 deg / 3`
//! and `R_1728 >= deg / 2` with equality, pinning every ramification index
//! to 3 over `0` and 2 over `1728`, while j has a pole of order `b` under
//! each `I_b` / `I_b*`. The profile is then re-checked against
//! Riemann-Hurwitz rather than assumed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibers::{JValue, KodairaFiber};
use crate::invariants::SurfaceConfig;
use crate::num::{rat_serde, Int, Rat};

/// A batch of branch points sharing one ramification index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RamificationClass {
    /// Number of branch points in the batch.
    pub count: Int,
    /// Common ramification index.
    pub index: Int,
}

/// A pole of j at a named base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolePoint {
    /// Base-point label.
    pub location: String,
    /// Pole order.
    pub order: Int,
}

/// The complete ramification profile of the j-map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationProfile {
    /// Degree of j.
    pub degree: Int,
    /// Branch points over 0.
    #[serde(rename = "over0")]
    pub over_zero: Vec<RamificationClass>,
    /// Branch points over 1728.
    #[serde(rename = "over1728")]
    pub over_1728: Vec<RamificationClass>,
    /// Poles, one per singular fiber.
    #[serde(rename = "overInf")]
    pub over_infinity: Vec<PolePoint>,
}

impl RamificationProfile {
    /// `sum (e_v - 1)` over every point of the three fibers of j.
    pub fn riemann_hurwitz_sum(&self) -> Int {
        let finite: Int = self
            .over_zero
            .iter()
            .chain(&self.over_1728)
            .map(|c| c.count * (c.index - 1))
            .sum();
        let poles: Int = self.over_infinity.iter().map(|p| p.order - 1).sum();
        finite + poles
    }

    /// Check that each of the three fibers of j sums to the degree and that
    /// the Riemann-Hurwitz count closes at `2 deg - 2`.
    pub fn check(&self) -> Result<()> {
        let over_zero: Int = self.over_zero.iter().map(|c| c.count * c.index).sum();
        let over_1728: Int = self.over_1728.iter().map(|c| c.count * c.index).sum();
        let over_inf: Int = self.over_infinity.iter().map(|p| p.order).sum();
        for (name, total) in [
            ("0", over_zero),
            ("1728", over_1728),
            ("infinity", over_inf),
        ] {
            if total != self.degree {
                return Err(Error::InconsistentConfig(format!(
                    "fiber of j over {name} sums to {total}, degree is {}",
                    self.degree
                )));
            }
        }
        let rh = self.riemann_hurwitz_sum();
        if rh != 2 * self.degree - 2 {
            return Err(Error::InconsistentConfig(format!(
                "Riemann-Hurwitz sum {rh} != 2*{} - 2",
                self.degree
            )));
        }
        Ok(())
    }
}

/// Profile outcome: fully forced, or bounds only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum NoriProfile {
    /// The equality case: every index pinned.
    Forced {
        /// The resolved profile.
        profile: RamificationProfile,
    },
    /// Some hypothesis fails (fiber types beyond `I_b`/`I_b*` with b > 0);
    /// only the branch-weight identities are available.
    Indeterminate {
        /// Degree of j.
        degree: Int,
        /// Exact value of `R_0 + R_1728`.
        #[serde(with = "rat_serde", rename = "branchWeightTotal")]
        branch_weight_total: Rat,
        /// Lower bound on `R_0`.
        #[serde(with = "rat_serde", rename = "over0Min")]
        over_zero_min: Rat,
        /// Lower bound on `R_1728`.
        #[serde(with = "rat_serde", rename = "over1728Min")]
        over_1728_min: Rat,
    },
}

/// True iff some singular fiber forces a pole of j, so j cannot be the
/// constant finite value it takes at a general point.
pub fn j_nonconstant(cfg: &SurfaceConfig) -> bool {
    cfg.fibers()
        .iter()
        .any(|f| f.fiber.j_value() == JValue::Infinity)
}

/// Degree of j: the total pole order `sum b` over the `I_b` and `I_b*`
/// fibers.
///
/// Requires non-constant j, and rejects configurations that are decidably
/// non-extremal; configurations whose Hodge data is undefined are accepted
/// as bare formula evaluations.
pub fn j_degree(cfg: &SurfaceConfig) -> Result<Int> {
    if !j_nonconstant(cfg) {
        return Err(Error::InconsistentConfig(
            "j-invariant is not forced non-constant (no pole)".into(),
        ));
    }
    if let Ok((rank, extremal)) = cfg.mw_rank_and_extremality() {
        if !extremal {
            return Err(Error::NotExtremal { rank });
        }
    }
    Ok(cfg
        .fibers()
        .iter()
        .map(|f| f.fiber.pole_order().expect("validated in constructor"))
        .sum())
}

/// The ramification profile of j, forced when the hypotheses hold.
pub fn nori_profile(cfg: &SurfaceConfig) -> Result<NoriProfile> {
    let degree = j_degree(cfg)?;
    let forced_types_only = cfg.fibers().iter().all(|f| match f.fiber {
        KodairaFiber::I(0) => true, // smooth fibers are harmless
        KodairaFiber::I(b) | KodairaFiber::IStar(b) => b > 0,
        _ => false,
    });
    let branch_weight_total = Rat::new(7 * degree, 6);
    let over_zero_min = Rat::new(2 * degree, 3);
    let over_1728_min = Rat::new(degree, 2);
    if !forced_types_only {
        return Ok(NoriProfile::Indeterminate {
            degree,
            branch_weight_total,
            over_zero_min,
            over_1728_min,
        });
    }
    if degree % 6 != 0 {
        return Err(Error::InconsistentConfig(format!(
            "degree {degree} is not divisible by 6, equality in the branch bounds is impossible"
        )));
    }
    let profile = RamificationProfile {
        degree,
        over_zero: vec![RamificationClass {
            count: degree / 3,
            index: 3,
        }],
        over_1728: vec![RamificationClass {
            count: degree / 2,
            index: 2,
        }],
        over_infinity: cfg
            .fibers()
            .iter()
            .filter(|f| !f.fiber.is_smooth())
            .map(|f| PolePoint {
                location: f.location.clone(),
                order: f.fiber.pole_order().expect("validated in constructor"),
            })
            .collect(),
    };
    profile.check()?;
    Ok(NoriProfile::Forced { profile })
}

/// Certificate that the fibration is elliptic modular: extremal, with a
/// section, non-constant j, and no `II*` or `III*` fibers.
pub fn modularity_certificate(cfg: &SurfaceConfig) -> bool {
    let extremal = matches!(cfg.mw_rank_and_extremality(), Ok((_, true)));
    let no_star_exceptions = cfg
        .fibers()
        .iter()
        .all(|f| !matches!(f.fiber, KodairaFiber::IIStar | KodairaFiber::IIIStar));
    extremal && cfg.has_section() && j_nonconstant(cfg) && no_star_exceptions
}
