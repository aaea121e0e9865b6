//! Catalogue of Kodaira singular-fiber types with their combinatorial,
//! group-theoretic, and monodromy data.
//!
//! All eight types (plus the smooth fiber `I_0`) are covered even though
//! the surfaces built here only use `I_b` and `I_b*`: the modularity
//! certificate has to test for the absence of `II*`/`III*`, and the j-value
//! table spans every type. Multiple fibers are excluded (the fibrations
//! handled here have a section).

use std::fmt;
use std::fmt::Write as _;

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::monodromy::Mat2;
use crate::num::Int;

/// A Kodaira singular-fiber type tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaFiber {
    /// `I_b`: `b = 0` is the smooth fiber, `b >= 1` a cycle of `b` rational
    /// curves (dual graph the affine Dynkin diagram `A~_{b-1}`).
    I(Int),
    /// `I_b*`: `b + 5` rational curves with dual graph `D~_{b+4}`.
    IStar(Int),
    /// Cuspidal rational curve.
    II,
    /// Two curves meeting at one point with multiplicity two.
    III,
    /// Three concurrent curves.
    IV,
    /// Dual graph `E~_6`.
    IVStar,
    /// Dual graph `E~_7`.
    IIIStar,
    /// Dual graph `E~_8`.
    IIStar,
}

/// Forced behaviour of the j-invariant at the base point under a fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JValue {
    /// j = 0.
    Zero,
    /// j = 1728.
    J1728,
    /// j has a pole.
    Infinity,
    /// j is finite but otherwise unconstrained.
    Finite,
}

impl fmt::Display for JValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JValue::Zero => write!(f, "0"),
            JValue::J1728 => write!(f, "1728"),
            JValue::Infinity => write!(f, "inf"),
            JValue::Finite => write!(f, "!=inf"),
        }
    }
}

impl fmt::Display for KodairaFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaFiber::I(b) => write!(f, "I_{b}"),
            KodairaFiber::IStar(b) => write!(f, "I_{b}*"),
            KodairaFiber::II => write!(f, "II"),
            KodairaFiber::III => write!(f, "III"),
            KodairaFiber::IV => write!(f, "IV"),
            KodairaFiber::IVStar => write!(f, "IV*"),
            KodairaFiber::IIIStar => write!(f, "III*"),
            KodairaFiber::IIStar => write!(f, "II*"),
        }
    }
}

impl KodairaFiber {
    /// Reject negative cycle parameters.
    pub fn validate(&self) -> Result<()> {
        match self {
            KodairaFiber::I(b) | KodairaFiber::IStar(b) if *b < 0 => Err(Error::InvalidArgument(
                format!("fiber parameter must be nonnegative, got {self}"),
            )),
            _ => Ok(()),
        }
    }

    /// True for the smooth fiber `I_0`.
    pub fn is_smooth(&self) -> bool {
        matches!(self, KodairaFiber::I(0))
    }

    /// Number of irreducible components `m_v`. The smooth fiber counts as
    /// one (irreducible) component.
    pub fn components(&self) -> Result<Int> {
        self.validate()?;
        Ok(match self {
            KodairaFiber::I(0) => 1,
            KodairaFiber::I(b) => *b,
            KodairaFiber::IStar(b) => b + 5,
            KodairaFiber::II => 1,
            KodairaFiber::III => 2,
            KodairaFiber::IV => 3,
            KodairaFiber::IVStar => 7,
            KodairaFiber::IIIStar => 8,
            KodairaFiber::IIStar => 9,
        })
    }

    /// True when the fiber has more than one component.
    pub fn is_reducible(&self) -> Result<bool> {
        Ok(self.components()? > 1)
    }

    /// Local Euler number `e(F_v)`: 0 for a smooth fiber, `m_v` for `I_b`,
    /// `m_v + 1` otherwise.
    pub fn euler_number(&self) -> Result<Int> {
        self.validate()?;
        Ok(match self {
            KodairaFiber::I(b) => *b,
            other => other.components()? + 1,
        })
    }

    /// The group on the multiplicity-1 components: `Z/b` for `I_b`, and for
    /// `I_b*` either `(Z/2)^2` (`b` even) or `Z/4` (`b` odd). Not defined
    /// for the remaining types here.
    pub fn component_group(&self) -> Result<AbelianGroup> {
        self.validate()?;
        match self {
            KodairaFiber::I(b) if *b >= 1 => AbelianGroup::cyclic(*b),
            KodairaFiber::IStar(b) => {
                if b % 2 == 0 {
                    AbelianGroup::product(vec![2, 2])
                } else {
                    AbelianGroup::cyclic(4)
                }
            }
            other => Err(Error::UnsupportedFiber {
                op: "component_group",
                fiber: other.to_string(),
            }),
        }
    }

    /// Conjugacy-class representative of the local monodromy:
    /// `[[1, b], [0, 1]]` for `I_b`, `[[-1, -b], [0, -1]]` for `I_b*`.
    pub fn monodromy_class(&self) -> Result<Mat2> {
        self.validate()?;
        match self {
            KodairaFiber::I(b) if *b >= 1 => Ok(Mat2::translation(*b)),
            KodairaFiber::IStar(b) => Ok(Mat2::translation(*b).neg()),
            other => Err(Error::UnsupportedFiber {
                op: "monodromy_class",
                fiber: other.to_string(),
            }),
        }
    }

    /// Value forced on the j-invariant at the base point.
    pub fn j_value(&self) -> JValue {
        match self {
            KodairaFiber::I(0) | KodairaFiber::IStar(0) => JValue::Finite,
            KodairaFiber::I(_) | KodairaFiber::IStar(_) => JValue::Infinity,
            KodairaFiber::II | KodairaFiber::IV | KodairaFiber::IVStar | KodairaFiber::IIStar => {
                JValue::Zero
            }
            KodairaFiber::III | KodairaFiber::IIIStar => JValue::J1728,
        }
    }

    /// Order `b` of the j-pole under this fiber (0 when j stays finite).
    pub fn pole_order(&self) -> Result<Int> {
        self.validate()?;
        Ok(match self {
            KodairaFiber::I(b) | KodairaFiber::IStar(b) => *b,
            _ => 0,
        })
    }

    /// Graphviz rendering of the dual graph: the affine Dynkin diagram
    /// `A~_{b-1}` for `I_b` (a `b`-cycle) and `D~_{b+4}` for `I_b*`.
    pub fn dual_graph_dot(&self) -> Result<String> {
        self.validate()?;
        let mut out = String::new();
        match self {
            KodairaFiber::I(b) if *b >= 1 => {
                let b = *b as usize;
                let _ = writeln!(out, "graph fiber {{ // {self}: cycle A~_{}", b - 1);
                for i in 0..b {
                    let _ = writeln!(out, "  c{i};");
                }
                if b == 1 {
                    out.push_str("  c0 -- c0;\n");
                } else {
                    for i in 0..b {
                        let _ = writeln!(out, "  c{} -- c{};", i, (i + 1) % b);
                    }
                }
                out.push_str("}\n");
                Ok(out)
            }
            KodairaFiber::IStar(b) => {
                let b = *b as usize;
                let _ = writeln!(out, "graph fiber {{ // {self}: D~_{}", b + 4);
                // central chain of b+1 multiplicity-two components,
                // two multiplicity-one forks at each end
                for i in 0..=b {
                    let _ = writeln!(out, "  m{i};");
                }
                for leaf in ["f0", "f1", "f2", "f3"] {
                    let _ = writeln!(out, "  {leaf};");
                }
                for i in 1..=b {
                    let _ = writeln!(out, "  m{} -- m{};", i - 1, i);
                }
                let _ = writeln!(out, "  f0 -- m0;");
                let _ = writeln!(out, "  f1 -- m0;");
                let _ = writeln!(out, "  f2 -- m{b};");
                let _ = writeln!(out, "  f3 -- m{b};");
                out.push_str("}\n");
                Ok(out)
            }
            other => Err(Error::UnsupportedFiber {
                op: "dual_graph_dot",
                fiber: other.to_string(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_counts() {
        assert_eq!(KodairaFiber::I(36).components().unwrap(), 36);
        assert_eq!(KodairaFiber::IStar(9).components().unwrap(), 14);
        assert_eq!(KodairaFiber::I(1).components().unwrap(), 1);
        assert_eq!(KodairaFiber::I(0).components().unwrap(), 1);
        assert!(KodairaFiber::I(0).is_smooth());
        assert_eq!(KodairaFiber::IIStar.components().unwrap(), 9);
        assert!(KodairaFiber::I(-1).components().is_err());
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(KodairaFiber::I(36).euler_number().unwrap(), 36);
        assert_eq!(KodairaFiber::IStar(9).euler_number().unwrap(), 15);
        assert_eq!(KodairaFiber::I(0).euler_number().unwrap(), 0);
        assert_eq!(KodairaFiber::II.euler_number().unwrap(), 2);
        assert_eq!(KodairaFiber::IIStar.euler_number().unwrap(), 10);
    }

    #[test]
    fn component_groups() {
        assert!(KodairaFiber::I(36)
            .component_group()
            .unwrap()
            .is_isomorphic_to(&AbelianGroup::cyclic(36).unwrap()));
        assert!(KodairaFiber::IStar(9)
            .component_group()
            .unwrap()
            .is_isomorphic_to(&AbelianGroup::cyclic(4).unwrap()));
        assert!(KodairaFiber::IStar(2)
            .component_group()
            .unwrap()
            .is_isomorphic_to(&AbelianGroup::product(vec![2, 2]).unwrap()));
        assert!(matches!(
            KodairaFiber::III.component_group(),
            Err(Error::UnsupportedFiber { .. })
        ));
        assert!(KodairaFiber::I(0).component_group().is_err());
    }

    #[test]
    fn monodromy_classes() {
        assert_eq!(
            KodairaFiber::I(36).monodromy_class().unwrap(),
            Mat2::translation(36)
        );
        assert_eq!(
            KodairaFiber::IStar(9).monodromy_class().unwrap(),
            Mat2::new(-1, -9, 0, -1)
        );
        assert_eq!(
            KodairaFiber::I(1).monodromy_class().unwrap(),
            Mat2::translation(1)
        );
        assert!(KodairaFiber::IV.monodromy_class().is_err());
        assert!(KodairaFiber::I(0).monodromy_class().is_err());
    }

    #[test]
    fn j_values() {
        assert_eq!(KodairaFiber::I(1).j_value(), JValue::Infinity);
        assert_eq!(KodairaFiber::III.j_value(), JValue::J1728);
        assert_eq!(KodairaFiber::IIStar.j_value(), JValue::Zero);
        assert_eq!(KodairaFiber::IStar(0).j_value(), JValue::Finite);
        assert_eq!(KodairaFiber::I(0).j_value(), JValue::Finite);
        assert_eq!(KodairaFiber::IStar(3).j_value(), JValue::Infinity);
    }

    #[test]
    fn euler_component_relations() {
        for b in 1..=100 {
            let i = KodairaFiber::I(b);
            assert_eq!(i.euler_number().unwrap(), i.components().unwrap());
            let istar = KodairaFiber::IStar(b);
            assert_eq!(
                istar.euler_number().unwrap() - istar.components().unwrap(),
                1
            );
            assert_eq!(i.component_group().unwrap().order(), b);
            assert_eq!(istar.component_group().unwrap().order(), 4);
            let m = i.monodromy_class().unwrap();
            assert_eq!((m.det(), m.trace()), (1, 2));
            let m = istar.monodromy_class().unwrap();
            assert_eq!((m.det(), m.trace()), (1, -2));
        }
    }

    #[test]
    fn dual_graphs() {
        let dot = KodairaFiber::I(3).dual_graph_dot().unwrap();
        assert_eq!(dot.matches(" -- ").count(), 3);
        let dot = KodairaFiber::I(1).dual_graph_dot().unwrap();
        assert!(dot.contains("c0 -- c0"));
        // I_9*: 14 nodes, 13 edges (a tree)
        let dot = KodairaFiber::IStar(9).dual_graph_dot().unwrap();
        assert_eq!(dot.matches(';').count() - dot.matches(" -- ").count(), 14);
        assert_eq!(dot.matches(" -- ").count(), 13);
        assert!(KodairaFiber::II.dual_graph_dot().is_err());
    }
}
