//! Exact 2x2 integer matrices, the presentation of the monodromy group
//! `Gamma_c`, cusp signatures, and congruence-table lookups.
//!
//! # Conventions
//!
//! - Conjugacy classes are stored by canonical upper-triangular
//!   representatives `[[1,b],[0,1]]` (trace 2) and `[[-1,-b],[0,-1]]`
//!   (trace -2); class equality is trace plus parabolic width.
//! - `index` is the cusp-width sum. This equals the index of the image in
//!   the projective modular group; the SL/PSL bookkeeping is flagged as
//!   [`INDEX_CONVENTION`] rather than silently picking a side.
//! - `level` is the least common multiple of the cusp widths (the
//!   Wohlfahrt level).
//! - The genus formula used is the torsion-free one,
//!   `g = 1 + index/12 - cusps/2`, with no elliptic-point terms.

use std::fmt;
use std::path::Path;

use num_integer::Integer;
use num_traits::One;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{require_c, Error, Result};
use crate::num::{pow3, Int, Rat, Scalar};

/// How the reported `index` is computed; see the module docs.
pub const INDEX_CONVENTION: &str =
    "cusp-width sum (index of the image in the projective modular group)";

/// A 2x2 integer matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2<T = Int> {
    entries: [T; 4],
}

impl<T: Scalar> Mat2<T> {
    /// Build a matrix from row-major entries, without a determinant check.
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self {
            entries: [a, b, c, d],
        }
    }

    /// Build a matrix and require determinant 1.
    pub fn sl2(a: T, b: T, c: T, d: T) -> Result<Self> {
        let m = Self::new(a, b, c, d);
        if !m.det().is_one() {
            return Err(Error::InvalidArgument(format!(
                "matrix {m} is not unimodular (det {})",
                m.det()
            )));
        }
        Ok(m)
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    /// The translation `[[1, b], [0, 1]]`.
    pub fn translation(b: T) -> Self {
        Self::new(T::one(), b, T::zero(), T::one())
    }

    /// Row-major entries `[a, b, c, d]`.
    pub fn entries(&self) -> &[T; 4] {
        &self.entries
    }

    /// Determinant `ad - bc`.
    pub fn det(&self) -> T {
        let [a, b, c, d] = &self.entries;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    /// Trace `a + d`.
    pub fn trace(&self) -> T {
        let [a, _, _, d] = &self.entries;
        a.clone() + d.clone()
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        Self::new(
            a.clone() * e.clone() + b.clone() * g.clone(),
            a.clone() * f.clone() + b.clone() * h.clone(),
            c.clone() * e.clone() + d.clone() * g.clone(),
            c.clone() * f.clone() + d.clone() * h.clone(),
        )
    }

    /// Inverse of a unimodular matrix.
    pub fn inv(&self) -> Result<Self> {
        if !self.det().is_one() {
            return Err(Error::InvalidArgument(format!(
                "cannot invert {self}: det {} != 1",
                self.det()
            )));
        }
        let [a, b, c, d] = &self.entries;
        Ok(Self::new(d.clone(), -b.clone(), -c.clone(), a.clone()))
    }

    /// Conjugate: `h * self * h^{-1}`.
    pub fn conj(&self, h: &Self) -> Result<Self> {
        Ok(h.mul(self).mul(&h.inv()?))
    }

    /// Negated matrix (multiplication by the central `-Id`).
    pub fn neg(&self) -> Self {
        let [a, b, c, d] = &self.entries;
        Self::new(-a.clone(), -b.clone(), -c.clone(), -d.clone())
    }
}

impl<T: Scalar> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl<T: Scalar + Serialize> Serialize for Mat2<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d] = &self.entries;
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&[a, b])?;
        seq.serialize_element(&[c, d])?;
        seq.end()
    }
}

/// A named conjugacy class, stored by its canonical upper-triangular
/// representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRep {
    /// Generator name, `A_0`, `A_1`, ..., `A_inf`.
    pub name: String,
    /// Canonical representative.
    pub representative: Mat2,
}

impl ClassRep {
    /// Parabolic width of the representative: `|b|` for `[[1,b],[0,1]]` or
    /// `[[-1,-b],[0,-1]]`.
    pub fn width(&self) -> Result<Int> {
        let [a, b, c, d] = self.representative.entries();
        if *c == 0 && ((*a == 1 && *d == 1) || (*a == -1 && *d == -1)) {
            Ok(b.abs())
        } else {
            Err(Error::InvalidArgument(format!(
                "representative {} is not a canonical (+/-)-parabolic",
                self.representative
            )))
        }
    }
}

/// The generator/relation presentation of a subgroup of the modular group:
/// one conjugacy-class-constrained parabolic generator per cusp, subject to
/// the single relation that the ordered product is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    generators: Vec<ClassRep>,
}

impl Presentation {
    /// Build a presentation from ordered class representatives.
    pub fn new(generators: Vec<ClassRep>) -> Self {
        Self { generators }
    }

    /// The ordered generators.
    pub fn generators(&self) -> &[ClassRep] {
        &self.generators
    }

    /// The single relation, as a readable word.
    pub fn relation(&self) -> String {
        let word: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        format!("{} = Id", word.join(" "))
    }
}

/// Presentation of `Gamma_c`: generators `A_0` in the class of
/// `[[1, 4*3^c], [0, 1]]`, `A_1 ... A_{3^c}` in the class of `[[1,1],[0,1]]`,
/// and `A_inf` in the class of `[[-1, -3^c], [0, -1]]`.
pub fn gamma_presentation(c: u32) -> Result<Presentation> {
    require_c(c)?;
    crate::require_materialisable(c)?;
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    let four_n = n.checked_mul(4).ok_or(Error::Overflow("4*3^c"))?;
    let mut generators = Vec::with_capacity(usize::try_from(n).unwrap_or(usize::MAX) + 2);
    generators.push(ClassRep {
        name: "A_0".to_string(),
        representative: Mat2::translation(four_n),
    });
    for i in 1..=n {
        generators.push(ClassRep {
            name: format!("A_{i}"),
            representative: Mat2::translation(1),
        });
    }
    generators.push(ClassRep {
        name: "A_inf".to_string(),
        representative: Mat2::translation(n).neg(),
    });
    Ok(Presentation::new(generators))
}

/// Image of a canonical class representative in the abelianization of the
/// modular group (cyclic of order 12, generated by the image `tau` of the
/// translation): `[[1,b],[0,1]] -> b tau`, and since the central `-Id` maps
/// to `6 tau`, `[[-1,-b],[0,-1]] -> (6 + b) tau`.
pub fn abelianization_image(m: &Mat2) -> Result<Int> {
    let [a, b, c, d] = m.entries();
    if *c == 0 && *a == 1 && *d == 1 {
        Ok(b.mod_floor(&12))
    } else if *c == 0 && *a == -1 && *d == -1 {
        Ok((6 - b).mod_floor(&12))
    } else {
        Err(Error::InvalidArgument(format!(
            "representative {m} is not a canonical (+/-)-parabolic"
        )))
    }
}

/// Necessary condition for the product relation to be realizable: the
/// generator images must sum to zero in the abelianization.
pub fn abelianization_check(p: &Presentation) -> Result<bool> {
    let mut total: Int = 0;
    for g in p.generators() {
        total += abelianization_image(&g.representative)?;
    }
    Ok(total.mod_floor(&12) == 0)
}

/// Cusp-width data of a finite-index subgroup of the modular group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspSignature {
    /// Sorted multiset of cusp widths.
    #[serde(rename = "cuspWidths")]
    pub cusp_widths: Vec<Int>,
    /// Number of cusps.
    #[serde(rename = "cuspCount")]
    pub cusp_count: Int,
    /// Width sum; see [`INDEX_CONVENTION`].
    pub index: Int,
    /// Genus from the torsion-free formula `1 + index/12 - cusps/2`.
    pub genus: Int,
    /// Wohlfahrt level: lcm of the cusp widths.
    pub level: Int,
}

/// Assemble a signature from a width multiset, computing index, genus and
/// level. Fails if the genus formula gives a non-integer or negative value.
pub fn signature_from_widths(mut widths: Vec<Int>) -> Result<CuspSignature> {
    if widths.is_empty() {
        return Err(Error::InvalidArgument("width multiset is empty".into()));
    }
    if let Some(bad) = widths.iter().find(|w| **w < 1) {
        return Err(Error::InvalidArgument(format!(
            "cusp widths must be positive, got {bad}"
        )));
    }
    widths.sort_unstable();
    let mut index: Int = 0;
    let mut level: Int = 1;
    for w in &widths {
        index = index
            .checked_add(*w)
            .ok_or(Error::Overflow("cusp width sum"))?;
        let g = level.gcd(w);
        level = (level / g)
            .checked_mul(*w)
            .ok_or(Error::Overflow("lcm of cusp widths"))?;
    }
    let cusp_count = widths.len() as Int;
    let genus = Rat::one() + Rat::new(index, 12) - Rat::new(cusp_count, 2);
    if !genus.is_integer() {
        return Err(Error::InconsistentConfig(format!(
            "genus formula gives non-integer {genus} for widths {widths:?}"
        )));
    }
    let genus = genus.to_integer();
    if genus < 0 {
        return Err(Error::InconsistentConfig(format!(
            "genus formula gives negative {genus} for widths {widths:?}"
        )));
    }
    Ok(CuspSignature {
        cusp_widths: widths,
        cusp_count,
        index,
        genus,
        level,
    })
}

/// Cusp signature of `Gamma_c`: one width-`4*3^c` cusp, `3^c` width-1 cusps,
/// and one width-`3^c` cusp.
pub fn cusp_signature(c: u32) -> Result<CuspSignature> {
    require_c(c)?;
    crate::require_materialisable(c)?;
    let n: Int = pow3(c).ok_or(Error::Overflow("3^c"))?;
    let four_n = n.checked_mul(4).ok_or(Error::Overflow("4*3^c"))?;
    let mut widths = vec![1; usize::try_from(n).map_err(|_| Error::Overflow("3^c cusps"))?];
    widths.push(four_n);
    widths.push(n);
    signature_from_widths(widths)
}

/// One record of an ingested congruence-subgroup signature table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRecord {
    /// Subgroup label.
    pub name: String,
    /// Congruence level.
    pub level: Int,
    /// Projective index.
    pub index: Int,
    /// Genus.
    pub genus: Int,
    /// Number of cusps.
    pub cusp_count: Int,
    /// Sorted cusp-width multiset.
    pub cusp_widths: Vec<Int>,
}

/// An ingested signature table of congruence subgroups.
///
/// File format, line oriented: `name level index genus cuspCount
/// width1,width2,...` with whitespace-separated fields; `#` starts a
/// comment line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceTable {
    records: Vec<TableRecord>,
}

impl CongruenceTable {
    /// Parse a table from text.
    pub fn parse(src: &str) -> Result<Self> {
        let mut records = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let line = i + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = text.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(Error::TableParse {
                    line,
                    reason: format!("expected 6 fields, found {}", fields.len()),
                });
            }
            let parse_int = |s: &str, what: &str| -> Result<Int> {
                s.parse().map_err(|_| Error::TableParse {
                    line,
                    reason: format!("bad {what} field {s:?}"),
                })
            };
            let name = fields[0].to_string();
            let level = parse_int(fields[1], "level")?;
            let index = parse_int(fields[2], "index")?;
            let genus = parse_int(fields[3], "genus")?;
            let cusp_count = parse_int(fields[4], "cusp count")?;
            let mut cusp_widths = Vec::new();
            for w in fields[5].split(',') {
                cusp_widths.push(parse_int(w, "cusp width")?);
            }
            cusp_widths.sort_unstable();
            if cusp_widths.len() as Int != cusp_count {
                return Err(Error::TableParse {
                    line,
                    reason: format!(
                        "cusp count {cusp_count} does not match {} listed widths",
                        cusp_widths.len()
                    ),
                });
            }
            if cusp_widths.iter().sum::<Int>() != index {
                return Err(Error::TableParse {
                    line,
                    reason: format!("cusp widths of {name} do not sum to the index {index}"),
                });
            }
            records.push(TableRecord {
                name,
                level,
                index,
                genus,
                cusp_count,
                cusp_widths,
            });
        }
        Ok(Self { records })
    }

    /// Read and parse a table file.
    pub fn from_path(path: &Path) -> Result<Self> {
        let src = std::fs::read_to_string(path).map_err(|e| Error::TableUnavailable {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::parse(&src)
    }

    /// The parsed records.
    pub fn records(&self) -> &[TableRecord] {
        &self.records
    }

    /// Number of records.
    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// True when the table holds no records.
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// True iff some record matches the signature on level or index and on
    /// the cusp-width multiset.
    pub fn contains_signature(&self, sig: &CuspSignature) -> bool {
        self.records.iter().any(|r| {
            (r.level == sig.level || r.index == sig.index) && r.cusp_widths == sig.cusp_widths
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(b: Int) -> Mat2 {
        Mat2::translation(b)
    }

    #[test]
    fn matrix_arithmetic() {
        assert_eq!(t(1).mul(&t(1)), t(2));
        assert_eq!(t(5).inv().unwrap(), t(-5));
        let s = Mat2::sl2(0, -1, 1, 0).unwrap();
        assert_eq!(t(1).conj(&s).unwrap(), Mat2::new(1, 0, -1, 1));
        assert!(Mat2::sl2(1, 1, 1, 1).is_err());
        assert_eq!(t(3).det(), 1);
        assert_eq!(t(3).neg().trace(), -2);
    }

    #[test]
    fn conjugation_preserves_trace_and_det() {
        let s = Mat2::sl2(2, 1, 1, 1).unwrap();
        let m = t(7).neg();
        let c = m.conj(&s).unwrap();
        assert_eq!(c.trace(), m.trace());
        assert_eq!(c.det(), 1);
    }

    #[test]
    fn presentation_c2() {
        let p = gamma_presentation(2).unwrap();
        assert_eq!(p.generators().len(), 11);
        assert_eq!(p.generators()[0].representative, t(36));
        for g in &p.generators()[1..=9] {
            assert_eq!(g.representative, t(1));
        }
        assert_eq!(p.generators()[10].representative, Mat2::new(-1, -9, 0, -1));
        for g in p.generators() {
            assert_eq!(g.representative.det(), 1);
            assert_eq!(g.representative.trace().abs(), 2);
        }
        assert_eq!(
            p.relation(),
            "A_0 A_1 A_2 A_3 A_4 A_5 A_6 A_7 A_8 A_9 A_inf = Id"
        );
    }

    #[test]
    fn presentation_c3() {
        let p = gamma_presentation(3).unwrap();
        assert_eq!(p.generators().len(), 29);
        assert_eq!(p.generators()[0].representative, t(108));
        assert_eq!(p.generators()[28].representative, Mat2::new(-1, -27, 0, -1));
    }

    #[test]
    fn parabolic_shift_is_nilpotent() {
        // (A - Id) nilpotent for trace 2, (A + Id) nilpotent for trace -2
        let p = gamma_presentation(2).unwrap();
        for g in p.generators() {
            let m = &g.representative;
            let sign: Int = if m.trace() == 2 { -1 } else { 1 };
            let id: Mat2 = Mat2::identity();
            let e: Vec<Int> = m
                .entries()
                .iter()
                .zip(id.entries())
                .map(|(x, u)| x + sign * u)
                .collect();
            let n = Mat2::new(e[0], e[1], e[2], e[3]);
            assert_eq!(n.mul(&n), Mat2::new(0, 0, 0, 0));
        }
    }

    #[test]
    fn abelianization_examples() {
        assert!(abelianization_check(&gamma_presentation(2).unwrap()).unwrap());
        assert!(abelianization_check(&gamma_presentation(3).unwrap()).unwrap());
        let single = Presentation::new(vec![ClassRep {
            name: "A_0".into(),
            representative: t(1),
        }]);
        assert!(!abelianization_check(&single).unwrap());
        // image values behind the c=2 sum: 36 + 9*1 + (6+9) = 60 = 0 mod 12
        assert_eq!(abelianization_image(&t(36)).unwrap(), 0);
        assert_eq!(abelianization_image(&t(1)).unwrap(), 1);
        assert_eq!(abelianization_image(&t(9).neg()).unwrap(), 3);
    }

    #[test]
    fn abelianization_rejects_generic_matrix() {
        assert!(abelianization_image(&Mat2::sl2(2, 1, 1, 1).unwrap()).is_err());
    }

    #[test]
    fn signature_c2() {
        let sig = cusp_signature(2).unwrap();
        let mut expected = vec![1; 9];
        expected.extend([9, 36]);
        assert_eq!(sig.cusp_widths, expected);
        assert_eq!(sig.cusp_count, 11);
        assert_eq!(sig.index, 54);
        assert_eq!(sig.genus, 0);
        assert_eq!(sig.level, 36);
    }

    #[test]
    fn signature_c3() {
        let sig = cusp_signature(3).unwrap();
        assert_eq!(sig.cusp_count, 29);
        assert_eq!(sig.index, 162);
        assert_eq!(sig.genus, 0);
        assert_eq!(sig.level, 108);
    }

    #[test]
    fn signature_degenerate_single_cusp() {
        // the commutator subgroup of the modular group: index 6, one cusp
        // of width 6, genus 1 + 6/12 - 1/2 = 1
        let sig = signature_from_widths(vec![6]).unwrap();
        assert_eq!(sig.index, 6);
        assert_eq!(sig.genus, 1);
        assert_eq!(sig.level, 6);
    }

    #[test]
    fn materialising_routes_are_capped() {
        assert!(matches!(
            gamma_presentation(crate::MAX_MATERIALISED_C + 1),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            cusp_signature(crate::MAX_MATERIALISED_C + 1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn signature_rejects_inconsistent_widths() {
        // 1 + 5/12 - 1/2 is not an integer
        assert!(matches!(
            signature_from_widths(vec![5]),
            Err(Error::InconsistentConfig(_))
        ));
        assert!(signature_from_widths(vec![]).is_err());
        assert!(signature_from_widths(vec![0]).is_err());
    }

    const SAMPLE: &str = "\
# comment line
Gamma(2) 2 6 0 3 2,2,2
Gamma0(4) 4 6 0 3 1,1,4
";

    #[test]
    fn table_parse_and_lookup() {
        let table = CongruenceTable::parse(SAMPLE).unwrap();
        assert_eq!(table.len(), 2);
        let principal2 = signature_from_widths(vec![2, 2, 2]).unwrap();
        assert!(table.contains_signature(&principal2));
        assert!(!table.contains_signature(&cusp_signature(2).unwrap()));
    }

    #[test]
    fn table_parse_errors() {
        assert!(matches!(
            CongruenceTable::parse("G 2 6 0 3"),
            Err(Error::TableParse { line: 1, .. })
        ));
        assert!(matches!(
            CongruenceTable::parse("G 2 6 0 3 2,2"),
            Err(Error::TableParse { .. })
        ));
        assert!(matches!(
            CongruenceTable::parse("G 2 7 0 3 2,2,2"),
            Err(Error::TableParse { .. })
        ));
    }

    #[test]
    fn missing_table_is_an_explicit_error() {
        assert!(matches!(
            CongruenceTable::from_path(Path::new("/nonexistent/table.txt")),
            Err(Error::TableUnavailable { .. })
        ));
    }
}
