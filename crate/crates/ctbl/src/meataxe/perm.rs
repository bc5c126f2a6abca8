//! Permutations of a finite point set.
//!
//! Points are `0..degree` internally; the conventional 1-based numbering
//! appears only in cycle notation (construction and display) and in the
//! text serialization.  Products act on the right, `(a·b)(i) = b(a(i))`,
//! matching the usual convention for permutation groups acting on points.

use std::fmt;

use crate::error::{Error, Result};
use crate::slp::{GroupElement, OrderedElement};

/// A bijection of `{0, …, degree−1}`, stored as the image list.
///
/// The derived ordering is lexicographic on the image list, which gives a
/// deterministic total order on the permutations of a fixed degree (used
/// for canonical class representatives and sorted enumerations).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Permutation {
        Permutation { images: (0..degree).collect() }
    }

    /// Builds a permutation from 0-based images; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &j in &images {
            if j >= images.len() || seen[j] {
                return Err(Error::Validation(format!(
                    "image list of length {} is not a bijection",
                    images.len()
                )));
            }
            seen[j] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images (the text-format convention).
    pub fn from_images_one_based(images: &[usize]) -> Result<Permutation> {
        let shifted: Vec<usize> = images
            .iter()
            .map(|&j| {
                if j == 0 || j > images.len() {
                    Err(Error::Validation(format!(
                        "1-based image {} out of range for degree {}",
                        j,
                        images.len()
                    )))
                } else {
                    Ok(j - 1)
                }
            })
            .collect::<Result<_>>()?;
        Permutation::from_images(shifted)
    }

    /// Builds a permutation on `degree` points from disjoint cycles of
    /// 1-based points, e.g. `from_cycles(4, &[vec![1, 2, 3]])`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (idx, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::Validation(format!(
                        "cycle point {pt} out of range for degree {degree}"
                    )));
                }
                if moved[pt - 1] {
                    return Err(Error::Validation(format!(
                        "point {pt} appears in more than one cycle"
                    )));
                }
                moved[pt - 1] = true;
                let next = cycle[(idx + 1) % cycle.len()];
                images[pt - 1] = next - 1;
            }
        }
        // Ranges were checked pointwise; disjointness makes this a bijection,
        // but check the `next` points too (they may be out of range).
        Permutation::from_images(images)
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The 0-based image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The 1-based image list (text-format convention).
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&j| j + 1).collect()
    }

    /// Image of the 0-based point `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.images[i]
    }

    /// True iff every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &j)| i == j).count()
    }

    /// Product acting on the right: `(a·b)(i) = b(a(i))`.
    pub fn multiply(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.degree() != rhs.degree() {
            return Err(Error::Shape(format!(
                "cannot multiply permutations of degrees {} and {}",
                self.degree(),
                rhs.degree()
            )));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&j| rhs.images[j]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn invert(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `x⁻¹ · self · x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Result<Permutation> {
        x.invert().multiply(self)?.multiply(x)
    }

    /// `self^e` (binary powering; negative exponents invert).
    pub fn pow(&self, e: i64) -> Permutation {
        crate::slp::element_power(self, e).expect("permutation powering cannot fail")
    }

    /// The same permutation on a larger point set, new points fixed.
    pub fn padded_to(&self, degree: usize) -> Result<Permutation> {
        if degree < self.degree() {
            return Err(Error::Validation(format!(
                "cannot pad a degree-{} permutation down to {degree} points",
                self.degree()
            )));
        }
        let mut images = self.images.clone();
        images.extend(self.degree()..degree);
        Ok(Permutation { images })
    }

    /// Multiplicative order: the least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            order = num::integer::lcm(order, len);
        }
        order
    }

    /// The nontrivial cycles as 0-based point lists, each starting at its
    /// minimal point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation on 1-based points; the identity prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (idx, pt) in cycle.iter().enumerate() {
                if idx > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl GroupElement for Permutation {
    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn mul(&self, rhs: &Self) -> Result<Self> {
        self.multiply(rhs)
    }

    fn inverse(&self) -> Result<Self> {
        Ok(self.invert())
    }
}

impl OrderedElement for Permutation {
    fn order(&self) -> Result<u64> {
        Ok(Permutation::order(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        let t = p(4, &[&[1, 2]]);
        assert_eq!(t.images(), &[1, 0, 2, 3]);
        assert_eq!(t.to_string(), "(1,2)");
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images_one_based(&[1, 2, 4]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]).is_err());
        assert_eq!(Permutation::identity(5).to_string(), "()");
    }

    #[test]
    fn right_action_products() {
        // (1,2) then (2,3): point 1 → 2 → 3, so the product is (1,3,2).
        let a = p(3, &[&[1, 2]]);
        let b = p(3, &[&[2, 3]]);
        let ab = a.multiply(&b).unwrap();
        assert_eq!(ab, p(3, &[&[1, 3, 2]]));
        let ba = b.multiply(&a).unwrap();
        assert_eq!(ba, p(3, &[&[1, 2, 3]]));
        assert!(a.multiply(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn inverse_order_power() {
        let c = p(6, &[&[1, 2, 3, 4], &[5, 6]]);
        assert_eq!(c.order(), 4);
        assert!(c.multiply(&c.invert()).unwrap().is_identity());
        assert_eq!(c.pow(2), p(6, &[&[1, 3], &[2, 4]]));
        assert_eq!(c.pow(-1), c.invert());
        assert_eq!(c.pow(0), Permutation::identity(6));
        assert_eq!(c.pow(4), Permutation::identity(6));
        assert_eq!(Permutation::identity(3).order(), 1);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let a = p(4, &[&[1, 2, 3]]);
        let x = p(4, &[&[3, 4]]);
        // Conjugating relabels the cycle points by x: (1,2,3) ↦ (1,2,4).
        assert_eq!(a.conjugate_by(&x).unwrap(), p(4, &[&[1, 2, 4]]));
    }

    #[test]
    fn display_and_fixed_points() {
        let a = p(5, &[&[2, 4], &[3, 5, 1]]);
        assert_eq!(a.to_string(), "(1,3,5)(2,4)");
        assert_eq!(a.fixed_points(), 0);
        assert_eq!(p(5, &[&[1, 2]]).fixed_points(), 3);
    }
}
