//! Class-fusion inference: which classes of a subgroup's table can fuse
//! into which classes of an overgroup's table.  Candidates are seeded
//! from element orders and centralizer divisibility, refined against the
//! power maps both heads share, and enumerated exhaustively with
//! character-theoretic pruning at the leaves.

use std::collections::BTreeSet;

use num::{Signed, Zero};

use super::func::{scalar_product, ClassFunction};
use super::head::TableHead;
use super::induce::induced_by_fusion;
use super::map::ClassMap;
use super::table::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};

/// Initial fusion candidates: a subgroup class can only fuse into an
/// overgroup class of the same element order whose centralizer order is
/// a multiple of the subgroup class's centralizer order.  A class with
/// no candidate at all proves the fusion impossible.
pub fn init_fusion(sub_head: &TableHead, big_head: &TableHead) -> Result<ClassMap> {
    let mut entries = Vec::with_capacity(sub_head.ncls());
    for i in 0..sub_head.ncls() {
        let candidates: BTreeSet<usize> = (0..big_head.ncls())
            .filter(|&j| {
                big_head.order_of(j) == sub_head.order_of(i)
                    && (big_head.centralizer_of(j) % sub_head.centralizer_of(i)).is_zero()
            })
            .collect();
        if candidates.is_empty() {
            return Err(Error::ImpossibleFusion(format!(
                "class {} (element order {}, centralizer order {}) has no candidate image",
                i + 1,
                sub_head.order_of(i),
                sub_head.centralizer_of(i)
            )));
        }
        entries.push(candidates);
    }
    ClassMap::new(entries, big_head.ncls())
}

/// Refines a candidate fusion map in place against every power map the
/// two heads share: any fusion f must satisfy f(i^p) = f(i)^p, so the
/// candidates for f(i^p) are met with the p-th powers of the candidates
/// for f(i), and the candidates for f(i) are cut back to those powering
/// into what is left.  Runs to a fixpoint.  Returns `false` as soon as
/// some class runs out of candidates (leaving the map partially
/// refined), `true` once the map is stable.
pub fn consistency_refine(
    sub_head: &TableHead,
    map: &mut ClassMap,
    big_head: &TableHead,
) -> Result<bool> {
    if map.len() != sub_head.ncls() || map.codomain() != big_head.ncls() {
        return Err(Error::Shape(format!(
            "map has {} -> {} classes but the heads have {} and {}",
            map.len(),
            map.codomain(),
            sub_head.ncls(),
            big_head.ncls()
        )));
    }
    let primes: Vec<u64> = sub_head
        .powermaps()
        .keys()
        .copied()
        .filter(|&p| big_head.powermap(p).is_some())
        .collect();
    loop {
        let mut changed = false;
        for &p in &primes {
            let sub_pow = sub_head.powermap(p).expect("prime comes from this head");
            let big_pow = big_head.powermap(p).expect("prime was filtered on this head");
            for i in 0..map.len() {
                let ip = sub_pow[i];
                let forward: BTreeSet<usize> =
                    map.entry(i).iter().map(|&j| big_pow[j]).collect();
                let narrowed: BTreeSet<usize> =
                    map.entry(ip).intersection(&forward).copied().collect();
                if narrowed.is_empty() {
                    return Ok(false);
                }
                if narrowed.len() < map.entry(ip).len() {
                    map.set_entry(ip, narrowed)?;
                    changed = true;
                }
                let kept: BTreeSet<usize> = map
                    .entry(i)
                    .iter()
                    .copied()
                    .filter(|&j| map.entry(ip).contains(&big_pow[j]))
                    .collect();
                if kept.is_empty() {
                    return Ok(false);
                }
                if kept.len() < map.entry(i).len() {
                    map.set_entry(i, kept)?;
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(true);
        }
    }
}

/// All fusion maps from the subgroup table into the overgroup table that
/// survive order/centralizer initialisation, power-map consistency, a
/// nonnegative-integral decomposition of every test character's
/// restriction into the subgroup's irreducibles, and integrality and
/// nonnegativity of all pairwise scalar products of the induced
/// irreducibles.  Results are sorted by their image lists.
pub fn possible_class_fusions(
    sub: &CharacterTable,
    big: &CharacterTable,
    test_chars: &[ClassFunction],
) -> Result<Vec<ClassMap>> {
    if !sub.is_complete() {
        return Err(Error::Precondition(
            "fusion search needs the subgroup's complete list of irreducibles".into(),
        ));
    }
    for chi in test_chars {
        if chi.head_id() != big.head().identifier() {
            return Err(Error::HeadMismatch(format!(
                "test character belongs to {} but the overgroup table is {}",
                chi.head_id(),
                big.head().identifier()
            )));
        }
    }
    let mut map = init_fusion(sub.head(), big.head())?;
    if !consistency_refine(sub.head(), &mut map, big.head())? {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    search(sub, big, test_chars, map, &mut found)?;
    found.sort_by_key(|m| m.determined().expect("search emits determined maps"));
    Ok(found)
}

fn search(
    sub: &CharacterTable,
    big: &CharacterTable,
    test_chars: &[ClassFunction],
    map: ClassMap,
    found: &mut Vec<ClassMap>,
) -> Result<()> {
    if map.is_determined() {
        if survives_character_checks(sub, big, test_chars, &map)? {
            found.push(map);
        }
        return Ok(());
    }
    let branch = (0..map.len())
        .find(|&i| map.entry(i).len() > 1)
        .expect("an undetermined map has an ambiguous entry");
    for &candidate in map.entry(branch) {
        let mut child = map.clone();
        child.set_entry(branch, BTreeSet::from([candidate]))?;
        if consistency_refine(sub.head(), &mut child, big.head())? {
            search(sub, big, test_chars, child, found)?;
        }
    }
    Ok(())
}

/// Reduces a list of determined fusion maps modulo a group of table
/// automorphisms of the overgroup, given as generator permutations of
/// its classes (image lists).  Maps f and σ∘f are equivalent for σ in
/// the generated group; each equivalence class keeps its
/// lexicographically least member, in the order those members first
/// appear.  An empty generator list is the trivial group, so the input
/// comes back unchanged apart from duplicate removal.
pub fn representatives_fusions(
    automorphisms: &[Vec<usize>],
    fusions: &[ClassMap],
) -> Result<Vec<ClassMap>> {
    let mut images: Vec<Vec<usize>> = Vec::with_capacity(fusions.len());
    for f in fusions {
        images.push(f.determined().ok_or_else(|| {
            Error::MapUndetermined(
                "automorphism reduction needs determined fusion maps".into(),
            )
        })?);
    }
    if fusions.is_empty() {
        return Ok(Vec::new());
    }
    let codomain = fusions[0].codomain();
    for sigma in automorphisms {
        if sigma.len() != codomain {
            return Err(Error::Arity(format!(
                "automorphism permutes {} classes but the fusions hit {}",
                sigma.len(),
                codomain
            )));
        }
        let mut seen = vec![false; sigma.len()];
        for &v in sigma {
            if v >= sigma.len() || seen[v] {
                return Err(Error::Validation(
                    "automorphism is not a permutation of the classes".into(),
                ));
            }
            seen[v] = true;
        }
    }
    let group = permutation_closure(automorphisms, codomain);
    let mut kept: Vec<ClassMap> = Vec::new();
    let mut least_seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (f, image) in fusions.iter().zip(&images) {
        let orbit_least = group
            .iter()
            .map(|sigma| image.iter().map(|&j| sigma[j]).collect::<Vec<usize>>())
            .min()
            .expect("the closure contains the identity");
        if least_seen.insert(orbit_least.clone()) {
            kept.push(if orbit_least == *image {
                f.clone()
            } else {
                ClassMap::from_images(&orbit_least, codomain)?
            });
        }
    }
    Ok(kept)
}

/// The full (small) permutation group generated by the given image
/// lists, including the identity.
fn permutation_closure(generators: &[Vec<usize>], degree: usize) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![identity];
    while let Some(current) = frontier.pop() {
        if !elements.insert(current.clone()) {
            continue;
        }
        for g in generators {
            let product: Vec<usize> = current.iter().map(|&i| g[i]).collect();
            if !elements.contains(&product) {
                frontier.push(product);
            }
        }
    }
    elements.into_iter().collect()
}

fn is_nonnegative_integer(c: &Cyclotomic) -> bool {
    match c.as_rational() {
        Some(r) => r.is_integer() && !r.is_negative(),
        None => false,
    }
}

fn survives_character_checks(
    sub: &CharacterTable,
    big: &CharacterTable,
    test_chars: &[ClassFunction],
    map: &ClassMap,
) -> Result<bool> {
    let images = map.determined().expect("leaf maps are determined");
    for chi in test_chars {
        let restricted = ClassFunction::new(
            sub.head(),
            images.iter().map(|&j| chi.value(j).clone()).collect(),
        )?;
        for psi in sub.irreducibles() {
            if !is_nonnegative_integer(&scalar_product(sub.head(), &restricted, psi)?) {
                return Ok(false);
            }
        }
    }
    let induced = induced_by_fusion(sub.head(), big.head(), sub.irreducibles(), map)?;
    for (i, a) in induced.iter().enumerate() {
        for b in &induced[..=i] {
            if !is_nonnegative_integer(&scalar_product(big.head(), a, b)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::test_tables;
    use super::*;
    use crate::oracle::{self, PermGroup};

    fn table((head, irr): (TableHead, Vec<ClassFunction>)) -> CharacterTable {
        CharacterTable::new(head, irr).unwrap()
    }

    /// Re-dresses hand-checked character values onto an oracle-computed
    /// head with the same class order.
    fn on_head(head: &TableHead, rows: &[ClassFunction]) -> Vec<ClassFunction> {
        rows.iter()
            .map(|r| ClassFunction::new(head, r.values().to_vec()).unwrap())
            .collect()
    }

    fn a4_inside_a5() -> (PermGroup, PermGroup) {
        (
            oracle::alternating(4).padded_to(5).unwrap(),
            oracle::alternating(5),
        )
    }

    #[test]
    fn init_fusion_of_a_table_into_itself_contains_the_identity() {
        let (h, _) = test_tables::s4();
        let map = init_fusion(&h, &h).unwrap();
        for i in 0..h.ncls() {
            assert!(map.entry(i).contains(&i), "class {i}");
        }
    }

    #[test]
    fn init_fusion_matches_orders_and_divides_centralizers() {
        let (sub, big) = a4_inside_a5();
        let (sub_head, _) = sub.table_head_of().unwrap();
        let (big_head, _) = big.table_head_of().unwrap();
        let map = init_fusion(&sub_head, &big_head).unwrap();
        // Orders and centralizers pin every A4 class down completely:
        // 1a -> 1a, the involutions -> 2a, both order-3 classes -> 3a.
        assert_eq!(map.determined(), Some(vec![0, 1, 2, 2]));
        for i in 0..sub_head.ncls() {
            for &j in map.entry(i) {
                assert_eq!(big_head.order_of(j), sub_head.order_of(i));
            }
        }
    }

    #[test]
    fn init_fusion_fails_when_an_order_is_missing() {
        let (c4_head, _) = test_tables::cyclic(4);
        let (a5_head, _) = oracle::alternating(5).table_head_of().unwrap();
        match init_fusion(&c4_head, &a5_head) {
            Err(Error::ImpossibleFusion(_)) => {}
            other => panic!("expected an impossible-fusion error, got {other:?}"),
        }
    }

    #[test]
    fn refine_keeps_a_true_fusion_fixed() {
        let (sub, big) = a4_inside_a5();
        let (sub_head, _) = sub.table_head_of().unwrap();
        let (big_head, _) = big.table_head_of().unwrap();
        let truth = PermGroup::subgroup_fusion(&sub, &big).unwrap();
        let mut map = truth.clone();
        assert!(consistency_refine(&sub_head, &mut map, &big_head).unwrap());
        assert_eq!(map, truth);
    }

    #[test]
    fn refine_rejects_an_involution_on_an_order_three_image() {
        let (sub_head, _) = oracle::alternating(4).table_head_of().unwrap();
        let (big_head, _) = oracle::alternating(5).table_head_of().unwrap();
        // Class 1 of A4 is the involution class; class 2 of A5 has order
        // 3, so squaring sends it to itself rather than to the identity.
        let mut map = ClassMap::from_images(&[0, 2, 2, 3], big_head.ncls()).unwrap();
        assert!(!consistency_refine(&sub_head, &mut map, &big_head).unwrap());
    }

    #[test]
    fn refining_full_ambiguity_narrows_but_keeps_the_truth() {
        let (sub, big) = a4_inside_a5();
        let (sub_head, _) = sub.table_head_of().unwrap();
        let (big_head, _) = big.table_head_of().unwrap();
        let mut map = ClassMap::full_ambiguity(sub_head.ncls(), big_head.ncls()).unwrap();
        let before = map.candidate_count();
        assert!(consistency_refine(&sub_head, &mut map, &big_head).unwrap());
        assert!(map.candidate_count() < before);
        let truth = PermGroup::subgroup_fusion(&sub, &big).unwrap();
        for (i, img) in truth.determined().unwrap().iter().enumerate() {
            assert!(map.entry(i).contains(img), "class {i}");
        }
        // The refinement is a fixpoint: running it again changes nothing.
        let settled = map.clone();
        assert!(consistency_refine(&sub_head, &mut map, &big_head).unwrap());
        assert_eq!(map, settled);
    }

    #[test]
    fn self_fusion_of_s4_contains_the_identity_map() {
        let sub = table(test_tables::s4());
        let big = table(test_tables::s4());
        let test_chars = big.irreducibles().to_vec();
        let result = possible_class_fusions(&sub, &big, &test_chars).unwrap();
        let identity: Vec<usize> = (0..sub.head().ncls()).collect();
        assert!(result.iter().any(|m| m.determined() == Some(identity.clone())));
    }

    #[test]
    fn fusions_of_a4_into_a5_contain_the_permutation_fusion() {
        let (sub, big) = a4_inside_a5();
        let (sub_head, _) = sub.table_head_of().unwrap();
        let (big_head, _) = big.table_head_of().unwrap();
        let (_, a4_rows) = test_tables::a4();
        let (_, a5_rows) = test_tables::a5();
        let big_irr = on_head(&big_head, &a5_rows);
        let sub_irr = on_head(&sub_head, &a4_rows);
        let sub_table = CharacterTable::new(sub_head, sub_irr).unwrap();
        let big_table = CharacterTable::new(big_head, big_irr.clone()).unwrap();
        let result = possible_class_fusions(&sub_table, &big_table, &big_irr).unwrap();
        let truth = PermGroup::subgroup_fusion(&sub, &big).unwrap();
        assert!(result.contains(&truth), "{result:?}");
    }

    #[test]
    fn fusions_of_c5_into_a5_form_the_galois_pair() {
        let sub = table(test_tables::cyclic(5));
        let (big_head, _) = oracle::alternating(5).table_head_of().unwrap();
        let (_, a5_rows) = test_tables::a5();
        let big_irr = on_head(&big_head, &a5_rows);
        let big = CharacterTable::new(big_head, big_irr.clone()).unwrap();
        let result = possible_class_fusions(&sub, &big, &big_irr).unwrap();
        let images: Vec<Vec<usize>> =
            result.iter().map(|m| m.determined().unwrap()).collect();
        // Exactly the two choices of which order-5 class receives the
        // generator, linked by squaring: g and g^4 fuse together, as do
        // g^2 and g^3.
        assert_eq!(images, vec![vec![0, 3, 4, 4, 3], vec![0, 4, 3, 3, 4]]);
    }

    #[test]
    fn impossible_fusion_propagates_from_the_search() {
        let sub = table(test_tables::cyclic(4));
        let big = table(test_tables::a5());
        match possible_class_fusions(&sub, &big, &[]) {
            Err(Error::ImpossibleFusion(_)) => {}
            other => panic!("expected an impossible-fusion error, got {other:?}"),
        }
    }

    #[test]
    fn a_trivial_automorphism_group_keeps_every_fusion() {
        let pair = vec![
            ClassMap::from_images(&[0, 3, 4, 4, 3], 5).unwrap(),
            ClassMap::from_images(&[0, 4, 3, 3, 4], 5).unwrap(),
        ];
        let kept = representatives_fusions(&[], &pair).unwrap();
        assert_eq!(kept, pair);
    }

    #[test]
    fn a_class_swapping_automorphism_collapses_the_galois_pair() {
        let pair = vec![
            ClassMap::from_images(&[0, 3, 4, 4, 3], 5).unwrap(),
            ClassMap::from_images(&[0, 4, 3, 3, 4], 5).unwrap(),
        ];
        let swap = vec![0, 1, 2, 4, 3];
        let kept = representatives_fusions(&[swap], &pair).unwrap();
        assert_eq!(kept, vec![pair[0].clone()]);
    }

    #[test]
    fn automorphism_reduction_validates_its_inputs() {
        let fusion = ClassMap::from_images(&[0, 1], 3).unwrap();
        match representatives_fusions(&[vec![0, 1]], &[fusion.clone()]) {
            Err(Error::Arity(_)) => {}
            other => panic!("expected an arity error, got {other:?}"),
        }
        match representatives_fusions(&[vec![0, 0, 1]], &[fusion]) {
            Err(Error::Validation(_)) => {}
            other => panic!("expected a validation error, got {other:?}"),
        }
        let ambiguous =
            ClassMap::new(vec![BTreeSet::from([0, 1])], 2).unwrap();
        match representatives_fusions(&[], &[ambiguous]) {
            Err(Error::MapUndetermined(_)) => {}
            other => panic!("expected a map-undetermined error, got {other:?}"),
        }
    }

    #[test]
    fn fusion_search_requires_a_complete_subgroup_table() {
        let (h, irr) = test_tables::s4();
        let sub = CharacterTable::new(h, irr[..3].to_vec()).unwrap();
        let big = table(test_tables::s4());
        match possible_class_fusions(&sub, &big, &[]) {
            Err(Error::Precondition(_)) => {}
            other => panic!("expected a precondition error, got {other:?}"),
        }
    }
}
