//! Power-map inference: reconstructing the p-th power map of a table
//! from element orders, centralizer orders, and congruences imposed by
//! known irreducible characters — without consulting any power map
//! already stored on the head.

use std::collections::BTreeSet;

use num::{BigInt, Integer, Zero};

use super::func::{scalar_product, ClassFunction};
use super::head::TableHead;
use super::map::ClassMap;
use crate::arith::is_prime;
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};

/// All maps i ↦ class of g_i^p consistent with the head's arithmetic and
/// the known irreducibles.  Per class, candidates must have element
/// order ord(i)/gcd(ord(i), p) and a centralizer order divisible by the
/// class's own (powering can only grow the centralizer); candidate sets
/// are met with `init` when given, then pruned by the elementwise
/// congruence χ(g)^p ≡ χ(g^p) (mod p) for every integer-valued
/// irreducible.  Each fully determined map f must additionally make
/// (χ^p − χ∘f)/p a virtual character — all its scalar products with the
/// known irreducibles integral — for every known irreducible χ.  An
/// empty result means no map survived; it is not an error.
pub fn possible_power_maps(
    head: &TableHead,
    p: u64,
    init: Option<&ClassMap>,
    irr: &[ClassFunction],
) -> Result<Vec<ClassMap>> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not a prime")));
    }
    for chi in irr {
        if chi.head_id() != head.identifier() || chi.values().len() != head.ncls() {
            return Err(Error::HeadMismatch(format!(
                "character belongs to {} but the head is {}",
                chi.head_id(),
                head.identifier()
            )));
        }
    }
    if let Some(m) = init {
        if m.len() != head.ncls() || m.codomain() != head.ncls() {
            return Err(Error::Shape(format!(
                "initial map has {} -> {} classes but the head has {}",
                m.len(),
                m.codomain(),
                head.ncls()
            )));
        }
    }
    let integer_rows: Vec<Vec<BigInt>> = irr
        .iter()
        .filter_map(|chi| {
            chi.values()
                .iter()
                .map(Cyclotomic::as_integer)
                .collect::<Option<Vec<BigInt>>>()
        })
        .collect();
    let modulus = BigInt::from(p);
    let mut entries = Vec::with_capacity(head.ncls());
    for i in 0..head.ncls() {
        let order = head.order_of(i);
        let target = order / order.gcd(&p);
        let mut candidates: BTreeSet<usize> = (0..head.ncls())
            .filter(|&j| {
                head.order_of(j) == target
                    && (head.centralizer_of(j) % head.centralizer_of(i)).is_zero()
            })
            .collect();
        if let Some(m) = init {
            candidates = candidates.intersection(m.entry(i)).copied().collect();
        }
        for row in &integer_rows {
            let power = row[i].mod_floor(&modulus).modpow(&modulus, &modulus);
            candidates.retain(|&j| (&power - &row[j]).is_multiple_of(&modulus));
        }
        if candidates.is_empty() {
            return Ok(Vec::new());
        }
        entries.push(candidates);
    }
    let mut maps = Vec::new();
    for candidate in ClassMap::new(entries, head.ncls())?.contained_maps()? {
        if layers_are_virtual_characters(head, p, &candidate, irr)? {
            maps.push(candidate);
        }
    }
    Ok(maps)
}

/// Whether (χ^p − χ∘f)/p has integral scalar products with every known
/// irreducible, for every known irreducible χ.  For a genuine power map
/// this quotient is the degree-p Adams layer of χ, a virtual character;
/// a wrong image assignment typically breaks integrality even when the
/// elementwise congruences all hold.
fn layers_are_virtual_characters(
    head: &TableHead,
    p: u64,
    map: &ClassMap,
    irr: &[ClassFunction],
) -> Result<bool> {
    let images = map.determined().expect("contained maps are determined");
    let exponent = i64::try_from(p)
        .map_err(|_| Error::Domain(format!("prime {p} is out of range")))?;
    let inverse_p = Rational::new(BigInt::from(1), BigInt::from(p));
    for chi in irr {
        let values: Vec<Cyclotomic> = (0..head.ncls())
            .map(|i| {
                Ok(chi
                    .value(i)
                    .pow(exponent)?
                    .sub(chi.value(images[i]))
                    .scale(&inverse_p))
            })
            .collect::<Result<_>>()?;
        let layer = ClassFunction::new(head, values)?;
        for psi in irr {
            let product = scalar_product(head, &layer, psi)?;
            match product.as_rational() {
                Some(r) if r.is_integer() => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}
