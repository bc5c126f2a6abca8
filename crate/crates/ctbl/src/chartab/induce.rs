//! Induction of class functions: from a subgroup along a determined fusion
//! map, and from the cyclic subgroups generated by class representatives.

use super::func::ClassFunction;
use super::head::TableHead;
use super::map::ClassMap;
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use num::Integer;
use std::collections::BTreeSet;

/// Induces each class function along a determined fusion map:
/// `Ind(χ)(c) = |C_big(c)| · Σ_{j : map(j)=c} χ(j)/|C_sub(j)|`
/// (the subgroup order cancels in the classic double-coset formula).
pub fn induced_by_fusion(
    sub_head: &TableHead,
    big_head: &TableHead,
    chars: &[ClassFunction],
    map: &ClassMap,
) -> Result<Vec<ClassFunction>> {
    let images = map.determined().ok_or_else(|| {
        Error::MapUndetermined("induction needs a determined fusion map".into())
    })?;
    if map.len() != sub_head.ncls() || map.codomain() != big_head.ncls() {
        return Err(Error::Arity(format!(
            "fusion map shape {}→{} does not match heads {}→{}",
            map.len(),
            map.codomain(),
            sub_head.ncls(),
            big_head.ncls()
        )));
    }
    for (j, &c) in images.iter().enumerate() {
        if big_head.order_of(c) != sub_head.order_of(j) {
            return Err(Error::Validation(format!(
                "fusion sends a class of element order {} to one of order {}",
                sub_head.order_of(j),
                big_head.order_of(c)
            )));
        }
    }
    let mut induced = Vec::with_capacity(chars.len());
    for chi in chars {
        if chi.head_id() != sub_head.identifier() {
            return Err(Error::HeadMismatch(format!(
                "character belongs to '{}', not to the subgroup head '{}'",
                chi.head_id(),
                sub_head.identifier()
            )));
        }
        let mut values = vec![Cyclotomic::zero(); big_head.ncls()];
        for (j, &c) in images.iter().enumerate() {
            let ratio = Rational::new(
                big_head.centralizer_of(c).clone(),
                sub_head.centralizer_of(j).clone(),
            );
            values[c] = values[c].add(&chi.value(j).scale(&ratio));
        }
        induced.push(ClassFunction::new(big_head, values)?);
    }
    Ok(induced)
}

/// Which linear characters of each cyclic subgroup to induce.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CyclicInductionMode {
    /// Every nontrivial linear character: exponents 1..n−1.
    All,
    /// Only the faithful linear characters: exponents coprime to n.
    Exponents,
}

/// Induces linear characters of the cyclic groups generated by the listed
/// class representatives.  For a class `i` of element order `n` and an
/// exponent `k`, the induced value at class `c` is
/// `(|C(c)|/n) · Σ_{m : class_of(g^m)=c} E(n)^{km}` over `m` in `0..n`.
/// Duplicate characters (by exact value comparison) are removed; the
/// trivial exponent 0 is never induced.  Requires complete power maps.
pub fn induced_cyclic(
    head: &TableHead,
    classes: &[usize],
    mode: CyclicInductionMode,
) -> Result<Vec<ClassFunction>> {
    let mut result: Vec<ClassFunction> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for &i in classes {
        if i >= head.ncls() {
            return Err(Error::Index(format!(
                "class {} out of range 1..={}",
                i + 1,
                head.ncls()
            )));
        }
        let n = head.order_of(i);
        // The class of g^m for each exponent m, shared by all k.
        let power_classes: Vec<usize> = (0..n)
            .map(|m| head.class_of_power(i, m as i64))
            .collect::<Result<_>>()?;
        for k in 1..n {
            if mode == CyclicInductionMode::Exponents && k.gcd(&n) != 1 {
                continue;
            }
            let mut sums = vec![Cyclotomic::zero(); head.ncls()];
            for (m, &c) in power_classes.iter().enumerate() {
                let root = Cyclotomic::root_of_unity(n, ((k * m as u64) % n) as i64)?;
                sums[c] = sums[c].add(&root);
            }
            let values: Vec<Cyclotomic> = sums
                .iter()
                .enumerate()
                .map(|(c, s)| {
                    s.scale(&Rational::new(
                        head.centralizer_of(c).clone(),
                        n.into(),
                    ))
                })
                .collect();
            let key = values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(";");
            if seen.insert(key) {
                result.push(ClassFunction::new(head, values)?);
            }
        }
    }
    Ok(result)
}
