//! Finite abelian groups as explicit products of cyclic factors.
//!
//! Groups stay small here (fiber component groups and Mordell-Weil torsion),
//! so elements are materialised as coordinate vectors and structural
//! questions are settled by brute force rather than by matrix normal forms.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::num::Int;

/// A finite abelian group `Z/f_1 x ... x Z/f_k`, kept in the factor shape
/// it was built with. Use [`AbelianGroup::invariant_factors`] to compare up
/// to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<Int>,
}

impl AbelianGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        Self {
            factors: Vec::new(),
        }
    }

    /// The cyclic group of order `n >= 1`.
    pub fn cyclic(n: Int) -> Result<Self> {
        Self::product(vec![n])
    }

    /// A direct product of cyclic groups of the given orders.
    pub fn product(factors: Vec<Int>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|f| **f < 1) {
            return Err(Error::InvalidArgument(format!(
                "cyclic factor orders must be positive, got {bad}"
            )));
        }
        Ok(Self { factors })
    }

    /// The cyclic factor orders, as constructed.
    pub fn factors(&self) -> &[Int] {
        &self.factors
    }

    /// Group order (product of the factor orders).
    pub fn order(&self) -> Int {
        self.factors.iter().product()
    }

    /// Invariant factor decomposition `d_1 | d_2 | ... | d_r` with every
    /// `d_i > 1` (empty for the trivial group).
    pub fn invariant_factors(&self) -> Vec<Int> {
        let mut d: Vec<Int> = self.factors.iter().copied().filter(|f| *f > 1).collect();
        // Pairwise replace (a, b) by (gcd, lcm) until the divisibility chain
        // stabilises; lcm never exceeds the group order.
        loop {
            let mut changed = false;
            for i in 0..d.len() {
                for j in i + 1..d.len() {
                    if !d[j].is_multiple_of(&d[i]) {
                        let g = d[i].gcd(&d[j]);
                        let l = d[i] / g * d[j];
                        d[i] = g;
                        d[j] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        d.retain(|f| *f > 1);
        d.sort_unstable();
        d
    }

    /// Whether two groups are isomorphic.
    pub fn is_isomorphic_to(&self, other: &Self) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    /// The zero element.
    pub fn zero(&self) -> Vec<Int> {
        vec![0; self.factors.len()]
    }

    /// Componentwise sum of two elements.
    pub fn add(&self, x: &[Int], y: &[Int]) -> Vec<Int> {
        self.factors
            .iter()
            .zip(x.iter().zip(y))
            .map(|(f, (a, b))| (a + b).mod_floor(f))
            .collect()
    }

    /// `k . x` for an integer k.
    pub fn scale(&self, k: Int, x: &[Int]) -> Vec<Int> {
        self.factors
            .iter()
            .zip(x)
            .map(|(f, a)| (k * a).mod_floor(f))
            .collect()
    }

    /// Order of an element (lcm of the coordinate orders).
    pub fn element_order(&self, x: &[Int]) -> Int {
        self.factors
            .iter()
            .zip(x)
            .map(|(f, a)| f / f.gcd(a))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// All elements as coordinate vectors, in odometer order.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            group: self,
            next: Some(self.zero()),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = self.invariant_factors();
        if inv.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = inv.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Iterator over the elements of an [`AbelianGroup`].
pub struct Elements<'a> {
    group: &'a AbelianGroup,
    next: Option<Vec<Int>>,
}

impl Iterator for Elements<'_> {
    type Item = Vec<Int>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let mut bump = current.clone();
        let mut carried = true;
        for (i, f) in self.group.factors.iter().enumerate() {
            if !carried {
                break;
            }
            bump[i] += 1;
            if bump[i] < *f {
                carried = false;
            } else {
                bump[i] = 0;
            }
        }
        if !carried {
            self.next = Some(bump);
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factors_normalise() {
        let g = AbelianGroup::product(vec![4, 6]).unwrap();
        assert_eq!(g.invariant_factors(), vec![2, 12]);
        let h = AbelianGroup::product(vec![2, 12]).unwrap();
        assert!(g.is_isomorphic_to(&h));
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let klein = AbelianGroup::product(vec![2, 2]).unwrap();
        assert!(!z4.is_isomorphic_to(&klein));
        assert_eq!(z4.to_string(), "Z/4");
        assert_eq!(klein.to_string(), "Z/2 x Z/2");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
    }

    #[test]
    fn element_enumeration_and_orders() {
        let g = AbelianGroup::product(vec![2, 3]).unwrap();
        let elems: Vec<_> = g.elements().collect();
        assert_eq!(elems.len(), 6);
        assert_eq!(g.element_order(&[1, 0]), 2);
        assert_eq!(g.element_order(&[1, 1]), 6);
        assert_eq!(g.element_order(&g.zero()), 1);
        assert_eq!(g.add(&[1, 2], &[1, 2]), vec![0, 1]);
        assert_eq!(g.scale(4, &[1, 1]), vec![0, 1]);
    }

    #[test]
    fn trivial_group_has_one_element() {
        let g = AbelianGroup::trivial();
        assert_eq!(g.elements().count(), 1);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn rejects_nonpositive_factor() {
        assert!(AbelianGroup::cyclic(0).is_err());
        assert!(AbelianGroup::product(vec![4, -2]).is_err());
    }
}
