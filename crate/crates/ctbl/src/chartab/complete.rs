//! Filling in missing integer character values from power-map
//! congruences: χ(g) ≡ χ(g^p) (mod p) for every prime p, so knowing
//! χ on the p-th power classes for several primes pins χ(g) modulo
//! their product, and a norm budget certifies the unique representative.

use num::{BigInt, Integer, One, Zero};

use super::func::ClassFunction;
use super::head::TableHead;
use crate::arith::is_prime;
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};

/// Completes a partially known rational-integer class function, assumed
/// to be a character of norm 1.  Each missing value is the unique
/// integer in the symmetric range certified by `bound` that is
/// congruent to χ(g^p) modulo p for every given prime p (Chinese
/// remainder, folded by "if v > bound then v − Πp").  The bound is
/// certified by the norm budget: if some missing value had absolute
/// value beyond `bound`, the contribution (bound+1)² times the smallest
/// missing class size on top of the known values' Σ |class|·v² would
/// already exceed |G|.  Both a failed budget and a modulus too small to
/// cover the certified range are under-determination, not panics.
pub fn complete_by_congruences(
    head: &TableHead,
    chi: &[Option<BigInt>],
    primes: &[u64],
    bound: i64,
) -> Result<ClassFunction> {
    if chi.len() != head.ncls() {
        return Err(Error::Arity(format!(
            "{} values for a head with {} classes",
            chi.len(),
            head.ncls()
        )));
    }
    if bound < 0 {
        return Err(Error::Domain(format!("negative bound {bound}")));
    }
    let mut distinct: Vec<u64> = primes.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for &p in &distinct {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not a prime")));
        }
    }
    let missing: Vec<usize> = (0..chi.len()).filter(|&i| chi[i].is_none()).collect();
    let mut values = chi.to_vec();
    if !missing.is_empty() {
        certify_budget(head, chi, &missing, bound)?;
        let modulus: BigInt = distinct.iter().map(|&p| BigInt::from(p)).product();
        let span = BigInt::from(2) * BigInt::from(bound) + 1;
        if modulus < span {
            return Err(Error::UnderDetermined(format!(
                "congruences modulo {modulus} cannot separate the {span} \
                 integers the bound {bound} allows"
            )));
        }
        for &i in &missing {
            let mut residue = BigInt::zero();
            let mut partial = BigInt::one();
            for &p in &distinct {
                let map = head.powermap(p).ok_or_else(|| {
                    Error::IncompleteHead(format!(
                        "head {} has no power map for {p}",
                        head.identifier()
                    ))
                })?;
                let known = values[map[i]].as_ref().ok_or_else(|| {
                    Error::Precondition(format!(
                        "class {} needs the value at its {p}-th power class {}, \
                         which is missing too",
                        i + 1,
                        map[i] + 1
                    ))
                })?;
                let p_big = BigInt::from(p);
                let target = known.mod_floor(&p_big);
                let gcd = partial.extended_gcd(&p_big);
                let step = ((&target - &residue) * gcd.x).mod_floor(&p_big);
                residue += &partial * step;
                partial *= &p_big;
                residue = residue.mod_floor(&partial);
            }
            let value = if residue > BigInt::from(bound) {
                residue - &modulus
            } else {
                residue
            };
            values[i] = Some(value);
        }
    }
    ClassFunction::new(
        head,
        values
            .into_iter()
            .map(|v| {
                Cyclotomic::from_rational(Rational::from(
                    v.expect("every class was filled"),
                ))
            })
            .collect(),
    )
}

/// The §-style norm budget: known Σ |class|·v² plus (bound+1)² times the
/// smallest missing class size must exceed |G| (the total for a norm-1
/// character), or some missing value beyond the bound could hide.
fn certify_budget(
    head: &TableHead,
    chi: &[Option<BigInt>],
    missing: &[usize],
    bound: i64,
) -> Result<()> {
    let sizes = head.class_sizes();
    let known: BigInt = chi
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.as_ref().map(|v| &sizes[i] * v * v))
        .sum();
    let smallest = missing
        .iter()
        .map(|&i| &sizes[i])
        .min()
        .expect("missing is nonempty");
    let escape = (BigInt::from(bound) + BigInt::one()).pow(2u32) * smallest;
    if &known + &escape > *head.size() {
        Ok(())
    } else {
        Err(Error::UnderDetermined(format!(
            "norm budget {} + {} does not exceed the group order {}",
            known,
            escape,
            head.size()
        )))
    }
}
