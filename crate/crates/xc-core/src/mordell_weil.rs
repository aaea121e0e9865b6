//! Section counting and the Mordell-Weil torsion group, by brute force
//! over injections into the product of the fiber component groups.
//!
//! A candidate section that is not an exceptional curve of the nine
//! resolutions would descend from a curve whose normalisation has genus at
//! most 1 by Riemann-Hurwitz, yet dominates the genus-`g` factor curve
//! (`g >= 4`), so no such section exists. Among the exceptional curves,
//! exactly the four `-(g+1)`-curves have the self-intersection a section
//! must have, and each carries exactly one.
//!
//! The sections meet pairwise-distinct components in the cycle fiber over 0
//! and pairwise-distinct extremal components in the star fiber over
//! infinity; those incidence constraints pin the torsion group.

use num_integer::Integer;

use crate::abelian::AbelianGroup;
use crate::error::{require_c, Error, Result};
use crate::fibers::KodairaFiber;
use crate::invariants::schreieder_config;
use crate::num::{pow3, Int, Rat};
use crate::singularities::{resolve, schreieder_fixed_points};
use crate::tower::curve_genus;

/// Genus of the normalisation of a candidate section curve that meets `l`
/// of the fixed points, from Riemann-Hurwitz:
/// `(2 - 2*3^c + (3^c - 1) l) / 2`. Negative values mean no such curve
/// exists; the result never exceeds 1.
pub fn section_genus_bound(c: u32, marked_points: Int) -> Result<Rat> {
    require_c(c)?;
    if !(0..=2).contains(&marked_points) {
        return Err(Error::InvalidArgument(format!(
            "a section meets the two special fibers in at most 2 points, got {marked_points}"
        )));
    }
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    let genus = Rat::new(2 - 2 * n + (n - 1) * marked_points, 2);
    debug_assert!(genus <= Rat::from_integer(1));
    Ok(genus)
}

/// Outcome of the section count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectionCount {
    /// Number of sections.
    pub count: Int,
    /// Their common self-intersection, `-(g+1)`.
    pub self_intersection: Int,
}

/// Count the sections of the fibration: the genus bound rules out
/// everything except resolution curves, and among those exactly the
/// curves of self-intersection `-(g+1) = -chi` qualify.
pub fn section_count(c: u32) -> Result<SectionCount> {
    require_c(c)?;
    let g = curve_genus(c)?;
    for l in 0..=2 {
        let bound = section_genus_bound(c, l)?;
        // a candidate off the resolution locus would dominate the genus-g
        // factor with genus <= 1 < g
        if bound > Rat::from_integer(1) {
            return Err(Error::InconsistentConfig(format!(
                "genus bound {bound} exceeds 1 at l = {l}"
            )));
        }
    }
    let required = -schreieder_config(c)?.section_self_intersection()?;
    debug_assert_eq!(required, g + 1);
    let mut count = 0;
    for point in schreieder_fixed_points::<Int>(c)? {
        let resolution = resolve(&point.singularity()?);
        for b in resolution.chain().coefficients() {
            if *b == required {
                count += 1;
            } else if *b != 2 {
                return Err(Error::InconsistentConfig(format!(
                    "unexpected exceptional curve of self-intersection -{b}"
                )));
            }
        }
    }
    Ok(SectionCount {
        count,
        self_intersection: -required,
    })
}

/// An injective homomorphism into a product of cyclic groups, recorded by
/// the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Injection {
    /// One coordinate vector per source generator.
    pub generator_images: Vec<Vec<Int>>,
}

/// Distinctness constraints on the image points, mirroring how sections
/// meet fiber components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceFilter {
    /// Image points must have pairwise-distinct first coordinates.
    pub distinct_first: bool,
    /// Image points must have pairwise-distinct projections onto the
    /// remaining coordinates.
    pub distinct_rest: bool,
}

impl IncidenceFilter {
    /// No constraints beyond injectivity.
    pub fn none() -> Self {
        Self {
            distinct_first: false,
            distinct_rest: false,
        }
    }

    /// Both constraints, as the section geometry imposes.
    pub fn both() -> Self {
        Self {
            distinct_first: true,
            distinct_rest: true,
        }
    }
}

/// Enumerate every injective homomorphism `source -> target` passing the
/// filter. Generator images are restricted to elements whose order divides
/// the corresponding cyclic factor of the source; each candidate map is
/// then checked for injectivity over the full element table.
pub fn injection_search(
    source: &AbelianGroup,
    target: &AbelianGroup,
    filter: IncidenceFilter,
) -> Vec<Injection> {
    let generator_orders: Vec<Int> = source.factors().to_vec();
    let mut found = Vec::new();
    let mut images: Vec<Vec<Int>> = Vec::with_capacity(generator_orders.len());
    search(
        source,
        target,
        filter,
        &generator_orders,
        &mut images,
        &mut found,
    );
    found
}

fn search(
    source: &AbelianGroup,
    target: &AbelianGroup,
    filter: IncidenceFilter,
    generator_orders: &[Int],
    images: &mut Vec<Vec<Int>>,
    found: &mut Vec<Injection>,
) {
    if images.len() == generator_orders.len() {
        if is_valid_injection(source, target, filter, images) {
            found.push(Injection {
                generator_images: images.clone(),
            });
        }
        return;
    }
    let order = generator_orders[images.len()];
    for candidate in target.elements() {
        if order.is_multiple_of(&target.element_order(&candidate)) {
            images.push(candidate);
            search(source, target, filter, generator_orders, images, found);
            images.pop();
        }
    }
}

fn is_valid_injection(
    source: &AbelianGroup,
    target: &AbelianGroup,
    filter: IncidenceFilter,
    images: &[Vec<Int>],
) -> bool {
    let mut table: Vec<Vec<Int>> = Vec::new();
    for coords in source.elements() {
        let mut img = target.zero();
        for (k, gen_img) in coords.iter().zip(images) {
            img = target.add(&img, &target.scale(*k, gen_img));
        }
        table.push(img);
    }
    let all_distinct = |points: Vec<Vec<Int>>| {
        let mut sorted = points;
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    };
    if !all_distinct(table.clone()) {
        return false;
    }
    if filter.distinct_first && !all_distinct(table.iter().map(|p| vec![p[0]]).collect()) {
        return false;
    }
    if filter.distinct_rest && !all_distinct(table.iter().map(|p| p[1..].to_vec()).collect()) {
        return false;
    }
    true
}

/// The two isomorphism classes of order-4 groups.
pub fn order_four_candidates() -> Vec<AbelianGroup> {
    vec![
        AbelianGroup::cyclic(4).expect("4 >= 1"),
        AbelianGroup::product(vec![2, 2]).expect("positive factors"),
    ]
}

/// Which order-4 groups admit a plain injection (no incidence constraints)
/// into the target. With targets like `Z/m x (Z/2)^2` both candidates
/// inject, so a bare injectivity test is ambiguous; the length of the
/// returned list flags that.
pub fn torsion_candidates(target: &AbelianGroup) -> Vec<AbelianGroup> {
    order_four_candidates()
        .into_iter()
        .filter(|g| !injection_search(g, target, IncidenceFilter::none()).is_empty())
        .collect()
}

/// The Mordell-Weil torsion group: the unique order-4 group admitting an
/// injection into `G(I_{4*3^c}) x G(I_{3^c}*)` whose four image points meet
/// pairwise-distinct components on both sides.
pub fn mw_torsion_group(c: u32) -> Result<AbelianGroup> {
    let target = mw_injection_target(c)?;
    let survivors: Vec<AbelianGroup> = order_four_candidates()
        .into_iter()
        .filter(|g| !injection_search(g, &target, IncidenceFilter::both()).is_empty())
        .collect();
    match survivors.as_slice() {
        [unique] => Ok(unique.clone()),
        [] => Err(Error::InconsistentConfig(
            "no order-4 group admits a constrained injection".into(),
        )),
        _ => Err(Error::InconsistentConfig(
            "constrained injection does not determine the group".into(),
        )),
    }
}

/// The product of the component groups of the two reducible fibers,
/// `Z/(4*3^c) x Z/4`.
pub fn mw_injection_target(c: u32) -> Result<AbelianGroup> {
    require_c(c)?;
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    let four_n = n.checked_mul(4).ok_or(Error::Overflow("4*3^c"))?;
    let cycle = KodairaFiber::I(four_n).component_group()?;
    let star = KodairaFiber::IStar(n).component_group()?;
    let mut factors = cycle.factors().to_vec();
    factors.extend_from_slice(star.factors());
    AbelianGroup::product(factors)
}

/// Which fiber components each of the four sections meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectionIncidence {
    /// Section number, 1 through 4.
    pub section: usize,
    /// Component index in the cycle fiber over 0.
    pub component_at_zero: Int,
    /// Element of the component group of the star fiber over infinity.
    pub component_at_infinity: Int,
}

/// The canonical incidence witness: the four sections sit at cycle
/// positions `k * 3^c` (the strict transforms interleave the four
/// resolution chains of length `3^c - 1`) and exhaust the four extremal
/// star components.
pub fn schreieder_section_incidence(c: u32) -> Result<[SectionIncidence; 4]> {
    require_c(c)?;
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    Ok([0, 1, 2, 3].map(|k| SectionIncidence {
        section: k as usize + 1,
        component_at_zero: k * n,
        component_at_infinity: k,
    }))
}
