//! Symmetrizations of characters: for each partition λ of n, the class
//! function χ_λ(g) = Σ_{μ ⊢ n} (χ^{Sₙ}_λ(μ)/z_μ)·Π_i χ(g^{μ_i}),
//! computed from frozen symmetric-group character tables.

use super::func::ClassFunction;
use super::head::TableHead;
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use num::BigInt;

/// The character table of Sₙ for the supported n: partitions of n in
/// descending lexicographic order, with `chars[l][m]` the value of the
/// irreducible indexed by partition `l` on the class of cycle type
/// partition `m`.  Verified against a Murnaghan–Nakayama recursion in the
/// tests.
pub(crate) struct SymmetricGroupTable {
    pub partitions: &'static [&'static [u64]],
    pub chars: &'static [&'static [i64]],
}

pub(crate) const S2_TABLE: SymmetricGroupTable = SymmetricGroupTable {
    partitions: &[&[2], &[1, 1]],
    chars: &[&[1, 1], &[-1, 1]],
};

pub(crate) const S3_TABLE: SymmetricGroupTable = SymmetricGroupTable {
    partitions: &[&[3], &[2, 1], &[1, 1, 1]],
    chars: &[&[1, 1, 1], &[-1, 0, 2], &[1, -1, 1]],
};

pub(crate) const S5_TABLE: SymmetricGroupTable = SymmetricGroupTable {
    partitions: &[
        &[5],
        &[4, 1],
        &[3, 2],
        &[3, 1, 1],
        &[2, 2, 1],
        &[2, 1, 1, 1],
        &[1, 1, 1, 1, 1],
    ],
    chars: &[
        &[1, 1, 1, 1, 1, 1, 1],
        &[-1, 0, -1, 1, 0, 2, 4],
        &[0, -1, 1, -1, 1, 1, 5],
        &[1, 0, 0, 0, -2, 0, 6],
        &[0, 1, -1, -1, 1, -1, 5],
        &[-1, 0, 1, 1, 0, -2, 4],
        &[1, -1, -1, 1, 1, -1, 1],
    ],
};

pub(crate) fn table_for(n: u64) -> Result<&'static SymmetricGroupTable> {
    match n {
        2 => Ok(&S2_TABLE),
        3 => Ok(&S3_TABLE),
        5 => Ok(&S5_TABLE),
        _ => Err(Error::Domain(format!(
            "symmetrizations are supported for n in {{2, 3, 5}}, not {n}"
        ))),
    }
}

/// The order of the centralizer of a permutation of cycle type `mu` in Sₙ:
/// z_μ = Π i^{aᵢ}·aᵢ! over the distinct part sizes i with multiplicity aᵢ.
pub(crate) fn cycle_type_centralizer(mu: &[u64]) -> BigInt {
    let mut z = BigInt::from(1);
    let mut i = 0;
    while i < mu.len() {
        let part = mu[i];
        let mut count = 0u64;
        while i < mu.len() && mu[i] == part {
            count += 1;
            i += 1;
        }
        for _ in 0..count {
            z *= BigInt::from(part);
        }
        for f in 1..=count {
            z *= BigInt::from(f);
        }
    }
    z
}

/// All symmetrizations of each character: for every partition λ of n (in
/// the frozen table order), the class function χ_λ.  Requires complete
/// power maps up to n-th powers on the head.
pub fn symmetrizations(
    head: &TableHead,
    chars: &[ClassFunction],
    n: u64,
) -> Result<Vec<ClassFunction>> {
    let table = table_for(n)?;
    // class_of_power for every class and every exponent 1..=n, shared by
    // all (character, partition) pairs.
    let mut power_class = vec![vec![0usize; head.ncls()]; (n + 1) as usize];
    for (e, row) in power_class.iter_mut().enumerate().skip(1) {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = head.class_of_power(c, e as i64)?;
        }
    }
    let weights: Vec<BigInt> = table
        .partitions
        .iter()
        .map(|mu| cycle_type_centralizer(mu))
        .collect();

    let mut out = Vec::with_capacity(chars.len() * table.partitions.len());
    for chi in chars {
        if chi.head_id() != head.identifier() {
            return Err(Error::HeadMismatch(format!(
                "character belongs to '{}', not to '{}'",
                chi.head_id(),
                head.identifier()
            )));
        }
        for row in table.chars {
            let mut values = Vec::with_capacity(head.ncls());
            for c in 0..head.ncls() {
                let mut value = Cyclotomic::zero();
                for (m, mu) in table.partitions.iter().enumerate() {
                    if row[m] == 0 {
                        continue;
                    }
                    let mut product = Cyclotomic::one();
                    for &part in mu.iter() {
                        product = product.mul(chi.value(power_class[part as usize][c]));
                    }
                    let coeff = Rational::new(BigInt::from(row[m]), weights[m].clone());
                    value = value.add(&product.scale(&coeff));
                }
                values.push(value);
            }
            out.push(ClassFunction::new(head, values)?);
        }
    }
    Ok(out)
}

/// Only the fully antisymmetric part (partition 1ⁿ) of each character —
/// for n = 2 the classic (χ(g)² − χ(g²))/2.
pub fn antisymmetric_parts(
    head: &TableHead,
    chars: &[ClassFunction],
    n: u64,
) -> Result<Vec<ClassFunction>> {
    let table = table_for(n)?;
    let rows = table.partitions.len();
    let all = symmetrizations(head, chars, n)?;
    Ok(all
        .into_iter()
        .enumerate()
        .filter(|(i, _)| i % rows == rows - 1)
        .map(|(_, f)| f)
        .collect())
}
