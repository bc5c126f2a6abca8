//! Brute-force permutation-group engine providing independent ground truth
//! at desk scale: element enumeration, conjugacy classes, centralizer
//! orders, power maps, and subgroup fusions — everything computed by
//! exhaustive closure, with no group-theoretic shortcuts to trust.

pub mod groups;

pub use groups::{
    alternating, cyclic, dihedral_8, fixture_zoo, from_matrix_group, klein_four, quaternion,
    special_linear_2_3, symmetric,
};

use std::cell::OnceCell;
use std::collections::HashMap;

use num::BigInt;

use crate::chartab::{ClassMap, TableHead};
use crate::error::{Error, Result};
use crate::meataxe::Permutation;

/// Hard ceiling on element enumeration; every bundled fixture group stays
/// far below it.
pub const ENUMERATION_CAP: usize = 100_000;

/// The conjugacy-class partition of an enumerated group, classes sorted by
/// (element order, class size, minimal element).
struct ClassData {
    /// Canonical representative (the minimal element) per sorted class.
    reps: Vec<Permutation>,
    /// Element order per sorted class.
    orders: Vec<u64>,
    /// Centralizer order per sorted class, by direct counting.
    centralizers: Vec<usize>,
    /// Sorted class index of every group element.
    class_of: HashMap<Permutation, usize>,
}

/// A finite permutation group given by generators, with cached exhaustive
/// enumeration and class data.  Instances are not shared across threads;
/// all query results are plain values.
#[derive(Clone)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceCell<Vec<Permutation>>,
    classes: OnceCell<std::rc::Rc<ClassData>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup({}, degree {}, {} generators)",
            self.name,
            self.degree,
            self.generators.len()
        )
    }
}

impl PermGroup {
    /// Builds a group from generators on `degree` points.  An empty
    /// generator list gives the trivial group.
    pub fn new(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
    ) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Validation(format!(
                    "generator of degree {} in a group on {} points",
                    g.degree(),
                    degree
                )));
            }
        }
        Ok(PermGroup {
            name: name.into(),
            degree,
            generators,
            elements: OnceCell::new(),
            classes: OnceCell::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Exhaustively enumerates the group by breadth-first closure under
    /// right multiplication by the generators, in deterministic insertion
    /// order starting from the identity.  The result is cached; `cap`
    /// fails the call (it never truncates).
    pub fn enumerate(&self, cap: usize) -> Result<&[Permutation]> {
        let cap = cap.min(ENUMERATION_CAP);
        if let Some(els) = self.elements.get() {
            if els.len() > cap {
                return Err(Error::CapExceeded(format!(
                    "group {} has {} elements, over the cap {}",
                    self.name,
                    els.len(),
                    cap
                )));
            }
            return Ok(els);
        }
        let mut els = vec![Permutation::identity(self.degree)];
        let mut seen: HashMap<Permutation, usize> = HashMap::new();
        seen.insert(els[0].clone(), 0);
        let mut next = 0;
        while next < els.len() {
            let current = els[next].clone();
            next += 1;
            for g in &self.generators {
                let product = current.multiply(g)?;
                if !seen.contains_key(&product) {
                    if els.len() >= cap {
                        return Err(Error::CapExceeded(format!(
                            "group {} exceeds the enumeration cap {}",
                            self.name, cap
                        )));
                    }
                    seen.insert(product.clone(), els.len());
                    els.push(product);
                }
            }
        }
        Ok(self.elements.get_or_init(|| els))
    }

    /// The group order (enumerates if needed).
    pub fn order(&self) -> Result<usize> {
        Ok(self.enumerate(ENUMERATION_CAP)?.len())
    }

    /// The same group acting on a larger point set (new points fixed) —
    /// the usual way to realize a subgroup inside a bigger group's degree.
    pub fn padded_to(&self, degree: usize) -> Result<PermGroup> {
        let generators: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.padded_to(degree))
            .collect::<Result<_>>()?;
        PermGroup::new(self.name.clone(), degree, generators)
    }

    /// Membership by exhaustive enumeration.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.enumerate(ENUMERATION_CAP)?.contains(p))
    }

    fn class_data(&self) -> Result<std::rc::Rc<ClassData>> {
        if let Some(data) = self.classes.get() {
            return Ok(data.clone());
        }
        let els = self.enumerate(ENUMERATION_CAP)?.to_vec();
        let index: HashMap<Permutation, usize> =
            els.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

        // Conjugacy classes by orbit closure under conjugation by generators.
        let mut class_id = vec![usize::MAX; els.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..els.len() {
            if class_id[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_id[start] = id;
            let mut next = 0;
            while next < members.len() {
                let current = els[members[next]].clone();
                next += 1;
                for g in &self.generators {
                    let conj = current.conjugate_by(g)?;
                    let j = index[&conj];
                    if class_id[j] == usize::MAX {
                        class_id[j] = id;
                        members.push(j);
                    }
                }
            }
            classes.push(members);
        }

        // Canonical data per class, then the deterministic sort.
        let mut infos: Vec<(u64, usize, Permutation, usize, usize)> = classes
            .iter()
            .enumerate()
            .map(|(id, members)| {
                let rep = members.iter().map(|&i| &els[i]).min().unwrap().clone();
                let order = rep.order();
                let centralizer = els
                    .iter()
                    .filter(|x| {
                        x.multiply(&rep).expect("same degree")
                            == rep.multiply(x).expect("same degree")
                    })
                    .count();
                (order, members.len(), rep, centralizer, id)
            })
            .collect();
        infos.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));

        let mut sorted_of_original = vec![0usize; infos.len()];
        for (sorted_idx, info) in infos.iter().enumerate() {
            sorted_of_original[info.4] = sorted_idx;
        }
        let class_of: HashMap<Permutation, usize> = els
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), sorted_of_original[class_id[i]]))
            .collect();

        let data = ClassData {
            reps: infos.iter().map(|i| i.2.clone()).collect(),
            orders: infos.iter().map(|i| i.0).collect(),
            centralizers: infos.iter().map(|i| i.3).collect(),
            class_of,
        };
        let rc = std::rc::Rc::new(data);
        Ok(self.classes.get_or_init(|| rc).clone())
    }

    /// The conjugacy-class index (in sorted class order) of an element.
    pub fn class_of(&self, p: &Permutation) -> Result<usize> {
        let data = self.class_data()?;
        data.class_of.get(p).copied().ok_or_else(|| {
            Error::Membership(format!("element {p} is not in group {}", self.name))
        })
    }

    /// Canonical class representatives (minimal elements) in sorted order.
    pub fn class_representatives(&self) -> Result<Vec<Permutation>> {
        Ok(self.class_data()?.reps.clone())
    }

    /// Builds the table head by brute force: classes by conjugation orbits,
    /// centralizer orders by counting, power maps by powering the class
    /// representatives, classes sorted by (order, class size, minimal
    /// element), plus conventional class names.  Also returns the class
    /// representatives.
    pub fn table_head_of(&self) -> Result<(TableHead, Vec<Permutation>)> {
        let data = self.class_data()?;
        let size = BigInt::from(self.order()?);
        let centralizers: Vec<BigInt> =
            data.centralizers.iter().map(|&c| BigInt::from(c)).collect();
        let mut head = TableHead::new(
            self.name.clone(),
            size,
            data.orders.clone(),
            centralizers,
        )?;
        for p in head.required_primes() {
            let map: Vec<usize> = data
                .reps
                .iter()
                .map(|rep| {
                    let powered = rep.pow(p as i64);
                    data.class_of[&powered]
                })
                .collect();
            head = head.with_powermap(p, map)?;
        }
        let names = head.standard_names();
        head = head.with_names(names)?;
        Ok((head, data.reps.clone()))
    }

    /// The determined class fusion of a subgroup into this group: each
    /// subgroup class representative is located in its class here.
    pub fn subgroup_fusion(sub: &PermGroup, big: &PermGroup) -> Result<ClassMap> {
        if sub.degree != big.degree {
            return Err(Error::Membership(format!(
                "subgroup degree {} differs from group degree {}",
                sub.degree, big.degree
            )));
        }
        for g in &sub.generators {
            if !big.contains(g)? {
                return Err(Error::Membership(format!(
                    "generator {g} of {} is not an element of {}",
                    sub.name, big.name
                )));
            }
        }
        let sub_data = sub.class_data()?;
        let big_data = big.class_data()?;
        let images: Vec<usize> = sub_data
            .reps
            .iter()
            .map(|rep| big_data.class_of[rep])
            .collect();
        ClassMap::from_images(&images, big_data.reps.len())
    }

    /// Exhaustive conjugacy test: true iff some group element conjugates
    /// `a` to `b`.
    pub fn is_conjugate(&self, a: &Permutation, b: &Permutation) -> Result<bool> {
        let els = self.enumerate(ENUMERATION_CAP)?;
        if !els.contains(a) || !els.contains(b) {
            return Err(Error::Membership(format!(
                "conjugacy test arguments must lie in {}",
                self.name
            )));
        }
        for x in els {
            if a.conjugate_by(x)? == *b {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::groups;
    use super::*;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn enumeration_counts_and_cap() {
        assert_eq!(groups::cyclic(3).order().unwrap(), 3);
        let s4 = groups::symmetric(4);
        assert_eq!(s4.order().unwrap(), 24);
        match groups::symmetric(4).enumerate(10) {
            Err(Error::CapExceeded(_)) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
        // A cached enumeration still honors a smaller cap.
        s4.enumerate(30).unwrap();
        assert!(matches!(s4.enumerate(10), Err(Error::CapExceeded(_))));
        assert_eq!(groups::cyclic(1).order().unwrap(), 1);
    }

    #[test]
    fn c2_table_head() {
        let (head, reps) = groups::cyclic(2).table_head_of().unwrap();
        assert_eq!(head.ncls(), 2);
        assert_eq!(head.orders(), &[1, 2]);
        assert_eq!(
            head.centralizers(),
            &[BigInt::from(2), BigInt::from(2)]
        );
        assert_eq!(reps[1].to_string(), "(1,2)");
        assert_eq!(head.names().unwrap(), &["1a".to_string(), "2a".to_string()]);
    }

    #[test]
    fn a5_table_head() {
        let (head, _) = groups::alternating(5).table_head_of().unwrap();
        assert_eq!(head.ncls(), 5);
        assert_eq!(head.orders(), &[1, 2, 3, 5, 5]);
        let cents: Vec<i64> = vec![60, 4, 3, 5, 5];
        assert_eq!(
            head.centralizers(),
            &cents.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()
        );
        assert!(head.has_complete_powermaps());
    }

    #[test]
    fn sl23_and_q8_class_structure() {
        let (head, _) = groups::special_linear_2_3().table_head_of().unwrap();
        assert_eq!(head.size(), &BigInt::from(24));
        assert_eq!(head.orders(), &[1, 2, 3, 3, 4, 6, 6]);
        let cents: Vec<BigInt> = [24i64, 24, 6, 6, 4, 6, 6].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(head.centralizers(), &cents);

        let (head, _) = groups::quaternion().table_head_of().unwrap();
        assert_eq!(head.size(), &BigInt::from(8));
        assert_eq!(head.orders(), &[1, 2, 4, 4, 4]);
        let cents: Vec<BigInt> = [8i64, 8, 4, 4, 4].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(head.centralizers(), &cents);
    }

    #[test]
    fn class_partition_and_counting_invariants() {
        // Disjoint-exhaustive partition and the size–centralizer identity
        // across the whole fixture zoo.
        for group in groups::fixture_zoo() {
            let n = group.order().unwrap();
            let (head, reps) = group.table_head_of().unwrap();
            let sizes = head.class_sizes();
            let total: BigInt = sizes.iter().sum();
            assert_eq!(total, BigInt::from(n), "partition of {}", group.name());
            for (i, rep) in reps.iter().enumerate() {
                assert_eq!(
                    head.centralizer_of(i) * &sizes[i],
                    BigInt::from(n),
                    "class {} of {}",
                    i + 1,
                    group.name()
                );
                assert_eq!(rep.order(), head.order_of(i), "rep order in {}", group.name());
                assert_eq!(group.class_of(rep).unwrap(), i);
            }
        }
    }

    #[test]
    fn power_maps_match_brute_force() {
        for group in groups::fixture_zoo() {
            let (head, reps) = group.table_head_of().unwrap();
            for p in head.required_primes() {
                let map = head.powermap(p).unwrap();
                for (i, rep) in reps.iter().enumerate() {
                    let expected = group.class_of(&rep.pow(p as i64)).unwrap();
                    assert_eq!(map[i], expected, "p={p} class {} of {}", i + 1, group.name());
                }
            }
        }
    }

    #[test]
    fn fusion_examples() {
        // A group fuses into itself by the identity map.
        let a4 = groups::alternating(4);
        let self_fusion = PermGroup::subgroup_fusion(&a4, &a4).unwrap();
        let ncls = a4.table_head_of().unwrap().0.ncls();
        assert_eq!(self_fusion.determined(), Some((0..ncls).collect()));

        // A4 < A5 (A4 embedded as the stabilizer of point 5): verify the
        // fusion elementwise.
        let a4_in_a5 = a4.padded_to(5).unwrap();
        let a5 = groups::alternating(5);
        let fusion = PermGroup::subgroup_fusion(&a4_in_a5, &a5).unwrap();
        let images = fusion.determined().unwrap();
        let a4_reps = a4_in_a5.class_representatives().unwrap();
        for (i, rep) in a4_reps.iter().enumerate() {
            assert_eq!(a5.class_of(rep).unwrap(), images[i]);
        }
        // Every element of every A4 class lands in the mapped A5 class.
        for el in a4_in_a5.enumerate(ENUMERATION_CAP).unwrap() {
            let sub_class = a4_in_a5.class_of(el).unwrap();
            assert_eq!(a5.class_of(el).unwrap(), images[sub_class]);
        }

        // V4 < S4: all three involution classes fuse to the
        // double-transposition class.
        let v4 = groups::klein_four();
        let s4 = groups::symmetric(4);
        let fusion = PermGroup::subgroup_fusion(&v4, &s4).unwrap();
        let images = fusion.determined().unwrap();
        assert_eq!(images.len(), 4);
        assert_eq!(images[0], 0);
        assert_eq!(images[1], images[2]);
        assert_eq!(images[2], images[3]);
        let (s4_head, s4_reps) = s4.table_head_of().unwrap();
        assert_eq!(s4_head.order_of(images[1]), 2);
        assert_eq!(s4_reps[images[1]].cycles().len(), 2, "double transposition");

        // Non-subgroups are rejected: degree mismatch, and same-degree
        // generators that are not elements.
        let c5 = groups::cyclic(5);
        assert!(matches!(
            PermGroup::subgroup_fusion(&c5, &s4),
            Err(Error::Membership(_))
        ));
        let c3 = PermGroup::new("C3", 4, vec![perm(4, &[&[1, 2, 3]])]).unwrap();
        assert!(matches!(
            PermGroup::subgroup_fusion(&c3, &v4),
            Err(Error::Membership(_))
        ));
    }

    #[test]
    fn fusion_commutes_with_power_maps() {
        // C6 inside S5 as an order-6 element (a 3-cycle times a transposition).
        let c6_in_s5 = PermGroup::new(
            "C6",
            5,
            vec![perm(5, &[&[1, 2, 3], &[4, 5]])],
        )
        .unwrap();
        let pairs = [
            (groups::alternating(4).padded_to(5).unwrap(), groups::alternating(5)),
            (groups::klein_four(), groups::symmetric(4)),
            (c6_in_s5, groups::symmetric(5)),
            (groups::symmetric(3).padded_to(4).unwrap(), groups::symmetric(4)),
        ];
        for (sub, big) in pairs {
            let map = PermGroup::subgroup_fusion(&sub, &big).unwrap().determined().unwrap();
            let (sub_head, _) = sub.table_head_of().unwrap();
            let (big_head, _) = big.table_head_of().unwrap();
            for p in sub_head.required_primes() {
                let sub_map = sub_head.powermap(p).unwrap();
                let big_map = big_head.powermap(p).unwrap();
                for i in 0..sub_head.ncls() {
                    assert_eq!(
                        big_map[map[i]],
                        map[sub_map[i]],
                        "p={p}, class {} of {} in {}",
                        i + 1,
                        sub.name(),
                        big.name()
                    );
                }
            }
        }
    }

    #[test]
    fn conjugacy_tests() {
        let a4 = groups::alternating(4);
        let s4 = groups::symmetric(4);
        let a = perm(4, &[&[1, 2, 3]]);
        let b = perm(4, &[&[1, 3, 2]]);
        assert!(a4.is_conjugate(&a, &a).unwrap());
        // The two 3-cycle classes are split in A4 but fused in S4.
        assert!(!a4.is_conjugate(&a, &b).unwrap());
        assert!(s4.is_conjugate(&a, &b).unwrap());
        let outside = perm(4, &[&[1, 2]]);
        assert!(matches!(a4.is_conjugate(&a, &outside), Err(Error::Membership(_))));
    }

    #[test]
    fn cyclic_group_heads_are_cyclic() {
        for n in 2..=15 {
            let (head, _) = groups::cyclic(n).table_head_of().unwrap();
            assert_eq!(head.ncls(), n as usize);
            assert_eq!(head.size(), &BigInt::from(n));
            // Every centralizer is the whole group.
            assert!(head.centralizers().iter().all(|c| c == &BigInt::from(n)));
            // Class orders are the divisor pattern of element orders in Cn:
            // for each class, order divides n.
            assert!(head.orders().iter().all(|&o| n % o == 0));
        }
    }
}
