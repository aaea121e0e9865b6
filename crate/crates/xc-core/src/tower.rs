//! The vanishing-sequence calculus on the blow-up/quotient tower:
//! pluricanonical bases on the hyperelliptic curve, vanishing orders at the
//! fixed points, the transforms through the tower, survival constraints,
//! plurigenus counting, Kodaira dimension, and the Iitaka-base exponent
//! check.
//!
//! # Conventions
//!
//! - `g = (3^c - 1)/2` is the curve genus; `m` the pluricanonical weight.
//! - The reference form `w = dx^m / y^m` has vanishing order `2m(g-1)` at
//!   the branch point over infinity, so `x^a w` vanishes there to order
//!   `2m(g-1) - 2a` and `x^a y w` to order `2m(g-1) - 2a - 3^c`.
//! - Mid-tower vanishing orders are exact rationals; integrality only holds
//!   for surviving sections at the top of the tower.

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{require_c, Error, Result};
use crate::num::{pow3, small, Int, Scalar};

/// One basis element of the pluricanonical sections of the curve:
/// `x^a w` or `x^a y w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisForm {
    x_power: Int,
    with_y: bool,
    weight: Int,
    genus: Int,
}

impl BasisForm {
    /// Build a basis form, enforcing the exponent ranges: without `y`,
    /// `0 <= a <= m(g-1)` (`a <= g-1` when `m = 1`); with `y`,
    /// `0 <= a <= (m-1)(g-1) - 2`.
    pub fn new(x_power: Int, with_y: bool, weight: Int, genus: Int) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidArgument(format!(
                "genus must be at least 2, got {genus}"
            )));
        }
        if weight < 1 {
            return Err(Error::InvalidArgument(format!(
                "pluricanonical weight must be at least 1, got {weight}"
            )));
        }
        let max = if with_y {
            if weight == 1 {
                return Err(Error::InvalidArgument(
                    "weight-1 sections never carry a factor of y".into(),
                ));
            }
            (weight - 1) * (genus - 1) - 2
        } else if weight == 1 {
            genus - 1
        } else {
            weight * (genus - 1)
        };
        if x_power < 0 || x_power > max {
            return Err(Error::InvalidArgument(format!(
                "exponent {x_power} outside [0, {max}] for weight {weight}, genus {genus}, with_y {with_y}"
            )));
        }
        Ok(Self {
            x_power,
            with_y,
            weight,
            genus,
        })
    }

    /// Exponent of `x`.
    pub fn x_power(&self) -> Int {
        self.x_power
    }

    /// Whether the form carries a factor of `y`.
    pub fn with_y(&self) -> bool {
        self.with_y
    }

    /// Pluricanonical weight `m`.
    pub fn weight(&self) -> Int {
        self.weight
    }

    /// Curve genus `g`.
    pub fn genus(&self) -> Int {
        self.genus
    }
}

/// The explicit basis of the weight-`m` pluricanonical sections of a
/// hyperelliptic curve of genus `g >= 2`:
/// `w, xw, ..., x^{g-1} w` for `m = 1`, and otherwise
/// `w, xw, ..., x^{m(g-1)} w` together with
/// `yw, xyw, ..., x^{(m-1)(g-1)-2} yw` (empty when the bound is negative,
/// which happens exactly for `m = 2, g = 2`).
pub fn kock_tait_basis(genus: Int, weight: Int) -> Result<Vec<BasisForm>> {
    if genus < 2 {
        return Err(Error::InvalidArgument(format!(
            "genus must be at least 2, got {genus}"
        )));
    }
    if weight < 1 {
        return Err(Error::InvalidArgument(format!(
            "pluricanonical weight must be at least 1, got {weight}"
        )));
    }
    let mut basis = Vec::new();
    let plain_max = if weight == 1 {
        genus - 1
    } else {
        weight * (genus - 1)
    };
    for a in 0..=plain_max {
        basis.push(BasisForm::new(a, false, weight, genus)?);
    }
    if weight >= 2 {
        let y_max = (weight - 1) * (genus - 1) - 2;
        for a in 0..=y_max {
            basis.push(BasisForm::new(a, true, weight, genus)?);
        }
    }
    Ok(basis)
}

/// Curve genus attached to the family parameter: `g = (3^c - 1)/2`.
pub fn curve_genus(c: u32) -> Result<Int> {
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    Ok((n - 1) / 2)
}

/// Vanishing orders of a basis form at the two kinds of curve fixed points:
/// `(order at the x = 0 points, order at the point over infinity)`.
/// The second order may be negative (the form does not vanish there);
/// constraint handling happens downstream.
pub fn vanishing_orders(form: &BasisForm, c: u32) -> Result<(Int, Int)> {
    require_c(c)?;
    let g = curve_genus(c)?;
    if form.genus != g {
        return Err(Error::InvalidArgument(format!(
            "form has genus {} but c = {c} requires genus {g}",
            form.genus
        )));
    }
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    let a = form.x_power;
    let m = form.weight;
    let at_infinity = 2 * m * (g - 1) - 2 * a - if form.with_y { n } else { 0 };
    Ok((a, at_infinity))
}

/// A vanishing sequence along the two local hypersurface directions,
/// carried as exact rationals so mid-tower values stay meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishSeq<T: Scalar = Int> {
    /// Order along the first direction.
    pub first: Ratio<T>,
    /// Order along the second direction.
    pub second: Ratio<T>,
}

impl<T: Scalar> VanishSeq<T> {
    /// A sequence with integer entries.
    pub fn integral(first: T, second: T) -> Self {
        Self {
            first: Ratio::from_integer(first),
            second: Ratio::from_integer(second),
        }
    }

    /// Both orders are integers.
    pub fn is_integral(&self) -> bool {
        self.first.is_integer() && self.second.is_integer()
    }
}

/// Pull a vanishing sequence through one point blow-up:
/// `(a1, a2) -> (a1 + a2 + m, a2)`.
pub fn blowup_transform<T: Scalar>(v: &VanishSeq<T>, weight: &T) -> VanishSeq<T> {
    VanishSeq {
        first: v.first.clone() + v.second.clone() + Ratio::from_integer(weight.clone()),
        second: v.second.clone(),
    }
}

/// Push a vanishing sequence through one degree-3 quotient at a fixed
/// divisor: `(a1, a2) -> ((a1 - 2m)/3, a2)`.
pub fn quotient_transform_point<T: Scalar>(v: &VanishSeq<T>, weight: &T) -> VanishSeq<T> {
    let two_m = Ratio::from_integer(small::<T>(2) * weight.clone());
    VanishSeq {
        first: (v.first.clone() - two_m) / Ratio::from_integer(small::<T>(3)),
        second: v.second.clone(),
    }
}

/// The stepwise record of a vanishing sequence through the tower, one entry
/// per level `0..=c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerTrace<T: Scalar = Int> {
    /// `(level, sequence at that level)`.
    pub levels: Vec<(u32, VanishSeq<T>)>,
}

/// Push a vanishing sequence through the whole tower.
///
/// Returns the closed form
/// `((a1 + 2 a2 - 3m(3^{c-1} - 1)) / 3^c, a2)` together with the stepwise
/// trace: round 1 is two blow-ups followed by a quotient (net effect
/// `(a1 + 2 a2)/3` on the first coordinate), and each later round divides
/// out one more quotient along the fixed divisor, `x -> (x - 2m)/3`.
pub fn tower_pushforward<T: Scalar>(
    v: &VanishSeq<T>,
    c: u32,
    weight: &T,
) -> Result<(VanishSeq<T>, TowerTrace<T>)> {
    require_c(c)?;
    let three_c: T = pow3(c).ok_or(Error::Overflow("3^c"))?;
    let three_c1: T = pow3(c - 1).ok_or(Error::Overflow("3^{c-1}"))?;

    // closed form
    let drop = small::<T>(3) * weight.clone() * (three_c1 - T::one());
    let closed = VanishSeq {
        first: (v.first.clone() + v.second.clone() * small::<T>(2) - Ratio::from_integer(drop))
            / Ratio::from_integer(three_c),
        second: v.second.clone(),
    };

    // stepwise trace
    let mut levels = vec![(0, v.clone())];
    let mut cur = blowup_transform(v, weight);
    cur = blowup_transform(&cur, weight);
    cur = quotient_transform_point(&cur, weight);
    levels.push((1, cur.clone()));
    for level in 2..=c {
        cur = quotient_transform_point(&cur, weight);
        levels.push((level, cur.clone()));
    }
    debug_assert_eq!(levels.last().map(|(_, s)| s), Some(&closed));
    Ok((closed, TowerTrace { levels }))
}

/// Shape of a product form, by where the `y` factors sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductShape {
    /// `x1^{a1} w1 x x2^{a2} w2`.
    NeitherY,
    /// Exactly one factor carries `y`.
    OneY,
    /// Both factors carry `y`.
    BothY,
}

/// A pluricanonical product form on the self-product of the curve: one
/// basis form per factor, with matching weight and genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductForm {
    /// First-factor form.
    pub left: BasisForm,
    /// Second-factor form.
    pub right: BasisForm,
}

impl ProductForm {
    /// Pair two basis forms of the same weight and genus.
    pub fn new(left: BasisForm, right: BasisForm) -> Result<Self> {
        if left.weight != right.weight || left.genus != right.genus {
            return Err(Error::InvalidArgument(format!(
                "mismatched factors: weight {} vs {}, genus {} vs {}",
                left.weight, right.weight, left.genus, right.genus
            )));
        }
        Ok(Self { left, right })
    }

    /// Which of the three shapes this product has.
    pub fn shape(&self) -> ProductShape {
        match (self.left.with_y, self.right.with_y) {
            (false, false) => ProductShape::NeitherY,
            (true, true) => ProductShape::BothY,
            _ => ProductShape::OneY,
        }
    }

    /// Pluricanonical weight of the product.
    pub fn weight(&self) -> Int {
        self.left.weight
    }
}

/// Whether the product form survives to a global section at the top of the
/// tower: with `(a1, a2)` the vanishing pair at the mixed fixed point on the
/// infinity side and `(b1, b2)` at its mirror, the constraints are
/// `a1 + 2 a2 >= 3m(3^{c-1} - 1)`, `a2 >= 0`, `b1 >= 0`, and
/// `2 b1 + b2 >= 3m(3^{c-1} - 1)`.
pub fn section_survives(p: &ProductForm, c: u32) -> Result<bool> {
    let m = p.weight();
    let g = curve_genus(c)?;
    let threshold = 3 * m * ((pow3::<Int>(c - 1).ok_or(Error::Overflow("3^{c-1}"))?) - 1);
    debug_assert_eq!(threshold, 2 * m * (g - 1));

    let (left_at_p, left_at_q) = vanishing_orders(&p.left, c)?;
    let (right_at_p, right_at_q) = vanishing_orders(&p.right, c)?;

    // at (Q, P): first factor evaluated at infinity, second at x = 0
    let (alpha1, alpha2) = (left_at_q, right_at_p);
    // at (P, Q): the mirror
    let (beta1, beta2) = (left_at_p, right_at_q);

    Ok(alpha1 + 2 * alpha2 >= threshold
        && alpha2 >= 0
        && beta1 >= 0
        && 2 * beta1 + beta2 >= threshold)
}

/// Whether the product form is invariant under the quotient group: the
/// factor weights `-(a1 + m)` and `a2 + m` must cancel mod `3^c` (the `y`
/// coordinate is weightless, so only the exponents matter).
pub fn gc_invariant(p: &ProductForm, c: u32) -> Result<bool> {
    require_c(c)?;
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    Ok((p.right.x_power - p.left.x_power) % n == 0)
}

/// All product forms that survive both the constraint pairs and the
/// invariance filter, by exhaustive enumeration over basis pairs.
pub fn surviving_sections(c: u32, weight: Int) -> Result<Vec<ProductForm>> {
    require_c(c)?;
    if weight < 2 {
        return Err(Error::InvalidArgument(format!(
            "plurigenus enumeration needs weight at least 2, got {weight}"
        )));
    }
    let g = curve_genus(c)?;
    let basis = kock_tait_basis(g, weight)?;
    let mut out = Vec::new();
    for left in &basis {
        for right in &basis {
            let p = ProductForm::new(*left, *right)?;
            if section_survives(&p, c)? && gc_invariant(&p, c)? {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// The `m`-th plurigenus of the resolved quotient surface, by brute-force
/// enumeration.
pub fn plurigenus(c: u32, weight: Int) -> Result<Int> {
    Ok(surviving_sections(c, weight)?.len() as Int)
}

/// The closed-form plurigenus `m(g-1) + 1`; the enumeration's independent
/// partner.
pub fn plurigenus_formula(c: u32, weight: Int) -> Result<Int> {
    require_c(c)?;
    if weight < 2 {
        return Err(Error::InvalidArgument(format!(
            "plurigenus formula stated for weight at least 2, got {weight}"
        )));
    }
    Ok(weight * (curve_genus(c)? - 1) + 1)
}

/// Kodaira dimension, as the growth class of the plurigenera.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KodairaDimension {
    /// Every plurigenus vanishes.
    MinusInfinity,
    /// Bounded nonzero plurigenera.
    Zero,
    /// Linear growth.
    One,
    /// Quadratic growth.
    Two,
}

impl std::fmt::Display for KodairaDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KodairaDimension::MinusInfinity => write!(f, "-infinity"),
            KodairaDimension::Zero => write!(f, "0"),
            KodairaDimension::One => write!(f, "1"),
            KodairaDimension::Two => write!(f, "2"),
        }
    }
}

/// Outcome of the Kodaira-dimension fit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KodairaDimensionReport {
    /// The growth class.
    pub dimension: KodairaDimension,
    /// `P_1 = h^0(K) = g`, from the Hodge side rather than enumeration.
    pub first_plurigenus: Int,
    /// The fitted `(m, P_m)` samples.
    pub plurigenera: Vec<(Int, Int)>,
}

/// Weight range used for the growth fit; linear growth is unambiguous well
/// before the upper end.
pub const KODAIRA_FIT_WEIGHTS: std::ops::RangeInclusive<Int> = 2..=12;

/// Classify the growth of the plurigenera over [`KODAIRA_FIT_WEIGHTS`].
pub fn kodaira_dimension(c: u32) -> Result<KodairaDimensionReport> {
    kodaira_dimension_with_weights(c, KODAIRA_FIT_WEIGHTS)
}

/// Growth fit over a caller-chosen weight range (at least three samples).
pub fn kodaira_dimension_with_weights(
    c: u32,
    weights: std::ops::RangeInclusive<Int>,
) -> Result<KodairaDimensionReport> {
    require_c(c)?;
    let samples: Vec<Int> = weights.clone().collect();
    if samples.len() < 3 {
        return Err(Error::InvalidArgument(
            "growth fit needs at least three weights".into(),
        ));
    }
    let mut plurigenera = Vec::with_capacity(samples.len());
    for m in samples {
        plurigenera.push((m, plurigenus(c, m)?));
    }
    let values: Vec<Int> = plurigenera.iter().map(|(_, p)| *p).collect();
    let dimension = classify_growth(&values)?;
    Ok(KodairaDimensionReport {
        dimension,
        first_plurigenus: curve_genus(c)?,
        plurigenera,
    })
}

fn classify_growth(values: &[Int]) -> Result<KodairaDimension> {
    if values.iter().all(|v| v.is_zero()) {
        return Ok(KodairaDimension::MinusInfinity);
    }
    let diffs: Vec<Int> = values.windows(2).map(|w| w[1] - w[0]).collect();
    if diffs.iter().all(|d| *d == 0) {
        return Ok(KodairaDimension::Zero);
    }
    if diffs.windows(2).all(|w| w[0] == w[1]) && diffs[0] > 0 {
        return Ok(KodairaDimension::One);
    }
    let second: Vec<Int> = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    if second.windows(2).all(|w| w[0] == w[1]) && second[0] > 0 {
        return Ok(KodairaDimension::Two);
    }
    Err(Error::InconsistentGrowth(format!(
        "samples {values:?} fit no recognised class"
    )))
}

/// Verify by exponent bookkeeping that the surviving sections trace a
/// rational normal curve: sorted by exponent they are `s_0 t^a` with
/// `t = x1 x2`, the exponent list is exactly `0..=m(g-1)`, and every
/// exponent vector differs from the first by `a * (1, 1)`.
pub fn iitaka_base_check(c: u32, weight: Int) -> Result<bool> {
    let mut survivors = surviving_sections(c, weight)?;
    if survivors.len() < 2 {
        // a single section defines a point, not a curve
        return Ok(false);
    }
    survivors.sort_by_key(|p| p.left.x_power());
    let base = &survivors[0];
    if base.left.x_power() != 0 || base.right.x_power() != 0 {
        return Ok(false);
    }
    for (a, p) in survivors.iter().enumerate() {
        let a = a as Int;
        if p.shape() != ProductShape::NeitherY {
            return Ok(false);
        }
        let delta = (
            p.left.x_power() - base.left.x_power(),
            p.right.x_power() - base.right.x_power(),
        );
        if delta != (a, a) {
            return Ok(false);
        }
    }
    let top = survivors.last().expect("nonempty");
    Ok(top.left.x_power() == weight * (curve_genus(c)? - 1))
}
