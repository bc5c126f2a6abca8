//! Building the character table of a double cover from the table of the
//! factor group, per-class splitting data, and the values of one
//! faithful character given on factor classes: preimage classes are laid
//! out factor class by factor class, irreducibles are the inflations of
//! the factor's irreducibles together with their (deduplicated) tensor
//! products with the lifted faithful character, and power maps are
//! inferred, seeded through the quotient map.

use std::collections::BTreeSet;

use num::{BigInt, Signed, Zero};

use super::func::ClassFunction;
use super::head::TableHead;
use super::map::ClassMap;
use super::power::possible_power_maps;
use super::table::CharacterTable;
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};

/// Splitting data for one factor class: the element orders of the
/// classes lying over it in the double cover.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PreimageOrders {
    /// The preimage is two classes: the chosen representative's class
    /// (carrying the faithful character value as given) and its
    /// translate by the central involution (carrying the negated value).
    Split(u64, u64),
    /// The representative and its translate are conjugate, so the
    /// preimage is a single class of the given element order; the
    /// faithful character vanishes there.
    Fused(u64),
}

/// Builds the full table of a central extension 1 → C2 → G → F → 1 from
/// F's complete table, per-class splitting/order data, and the values of
/// a faithful irreducible of G on the chosen preimage representatives.
/// The result is certified by class count and degree-square sum, and its
/// power maps are pinned by [`possible_power_maps`] seeded with the
/// factor's maps; any ambiguity is a construction error.
pub fn build_central_extension_table(
    factor: &CharacterTable,
    splitting: &[PreimageOrders],
    faithful: &[Cyclotomic],
) -> Result<CharacterTable> {
    if !factor.is_complete() {
        return Err(Error::Precondition(
            "extension needs the factor group's complete list of irreducibles".into(),
        ));
    }
    let fh = factor.head();
    if splitting.len() != fh.ncls() || faithful.len() != fh.ncls() {
        return Err(Error::Arity(format!(
            "{} splitting entries and {} faithful values for {} factor classes",
            splitting.len(),
            faithful.len(),
            fh.ncls()
        )));
    }
    let mut orders: Vec<u64> = Vec::new();
    let mut cents: Vec<BigInt> = Vec::new();
    let mut factor_of: Vec<usize> = Vec::new();
    let mut signs: Vec<i64> = Vec::new();
    let mut over: Vec<Vec<usize>> = Vec::with_capacity(fh.ncls());
    for i in 0..fh.ncls() {
        let n = fh.order_of(i);
        let doubled = 2 * n;
        let mut lying_over = Vec::new();
        match splitting[i] {
            PreimageOrders::Split(first, second) => {
                for m in [first, second] {
                    if m != n && m != doubled {
                        return Err(Error::Validation(format!(
                            "class {} has factor order {n} but a preimage of order {m}",
                            i + 1
                        )));
                    }
                }
                for sign in [1, -1] {
                    lying_over.push(orders.len());
                    orders.push(if sign == 1 { first } else { second });
                    cents.push(fh.centralizer_of(i) * BigInt::from(2));
                    factor_of.push(i);
                    signs.push(sign);
                }
            }
            PreimageOrders::Fused(m) => {
                if !faithful[i].is_zero() {
                    return Err(Error::Validation(format!(
                        "class {} is fused but the faithful character is {} there",
                        i + 1,
                        faithful[i]
                    )));
                }
                if (m != n && m != doubled) || m % 2 != 0 {
                    return Err(Error::Validation(format!(
                        "class {} has factor order {n} but a fused preimage of order {m}",
                        i + 1
                    )));
                }
                lying_over.push(orders.len());
                orders.push(m);
                cents.push(fh.centralizer_of(i).clone());
                factor_of.push(i);
                signs.push(0);
            }
        }
        over.push(lying_over);
    }
    let size = fh.size() * BigInt::from(2);
    let head = TableHead::new(
        format!("2.{}", fh.identifier()),
        size.clone(),
        orders,
        cents,
    )?;
    let inflate = |row: &ClassFunction| -> Result<ClassFunction> {
        ClassFunction::new(
            &head,
            factor_of.iter().map(|&i| row.value(i).clone()).collect(),
        )
    };
    let lifted = ClassFunction::new(
        &head,
        factor_of
            .iter()
            .zip(&signs)
            .map(|(&i, &sign)| match sign {
                1 => faithful[i].clone(),
                -1 => faithful[i].neg(),
                _ => Cyclotomic::zero(),
            })
            .collect(),
    )?;
    let mut irr: Vec<ClassFunction> = Vec::new();
    for row in factor.irreducibles() {
        irr.push(inflate(row)?);
    }
    for row in factor.irreducibles() {
        let inflated = inflate(row)?;
        let values: Vec<Cyclotomic> = (0..head.ncls())
            .map(|c| lifted.value(c).mul(inflated.value(c)))
            .collect();
        let tensor = ClassFunction::new(&head, values)?;
        if !irr.contains(&tensor) {
            irr.push(tensor);
        }
    }
    if irr.len() != head.ncls() {
        return Err(Error::Construction(format!(
            "{} distinct irreducibles for {} classes",
            irr.len(),
            head.ncls()
        )));
    }
    let mut degree_sum = Rational::zero();
    for chi in &irr {
        match chi.degree().as_rational() {
            Some(d) if d.is_integer() && d.is_positive() => degree_sum += &d * &d,
            _ => {
                return Err(Error::Construction(format!(
                    "a candidate irreducible has degree {}",
                    chi.degree()
                )))
            }
        }
    }
    if degree_sum != Rational::from(size.clone()) {
        return Err(Error::Construction(format!(
            "degree squares sum to {degree_sum} but the extension has order {size}"
        )));
    }
    let mut head = head;
    for p in head.required_primes() {
        let init = match fh.powermap(p) {
            Some(factor_map) => {
                let entries: Vec<BTreeSet<usize>> = factor_of
                    .iter()
                    .map(|&i| over[factor_map[i]].iter().copied().collect())
                    .collect();
                Some(ClassMap::new(entries, head.ncls())?)
            }
            None => None,
        };
        let maps = possible_power_maps(&head, p, init.as_ref(), &irr)?;
        if maps.len() != 1 {
            return Err(Error::Construction(format!(
                "{} candidate {p}-th power maps for {}",
                maps.len(),
                head.identifier()
            )));
        }
        let images = maps[0].determined().expect("inferred maps are determined");
        head = head.with_powermap(p, images)?;
    }
    CharacterTable::new(head, irr)
}

#[cfg(test)]
mod tests {
    use super::super::test_tables;
    use super::*;
    use crate::oracle;

    fn value_key(f: &ClassFunction) -> String {
        f.values()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    #[test]
    fn doubling_the_trivial_group_gives_c2() {
        let (h, irr) = test_tables::cyclic(1);
        let factor = CharacterTable::new(h, irr).unwrap();
        let table = build_central_extension_table(
            &factor,
            &[PreimageOrders::Split(1, 2)],
            &[Cyclotomic::one()],
        )
        .unwrap();
        let (c2_head, c2_irr) = test_tables::c2();
        assert_eq!(table.head().orders(), c2_head.orders());
        assert_eq!(table.head().centralizers(), c2_head.centralizers());
        assert_eq!(table.head().powermap(2), c2_head.powermap(2));
        let got: Vec<String> = table.irreducibles().iter().map(value_key).collect();
        let expected: Vec<String> = c2_irr.iter().map(value_key).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn the_klein_four_group_doubles_to_the_quaternions() {
        let (h, irr) = test_tables::v4();
        let factor = CharacterTable::new(h, irr).unwrap();
        let table = build_central_extension_table(
            &factor,
            &[
                PreimageOrders::Split(1, 2),
                PreimageOrders::Fused(4),
                PreimageOrders::Fused(4),
                PreimageOrders::Fused(4),
            ],
            &[
                Cyclotomic::from_integer(2),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
            ],
        )
        .unwrap();
        assert_eq!(table.head().ncls(), 5);
        let mut degrees: Vec<String> =
            table.irreducibles().iter().map(|c| c.degree().to_string()).collect();
        degrees.sort();
        assert_eq!(degrees, ["1", "1", "1", "1", "2"]);
        // Exact match with the hand-checked quaternion table, which uses
        // the same class order.
        let (q8_head, q8_irr) = test_tables::q8();
        assert_eq!(table.head().orders(), q8_head.orders());
        assert_eq!(table.head().centralizers(), q8_head.centralizers());
        assert_eq!(table.head().powermap(2), q8_head.powermap(2));
        let mut got: Vec<String> = table.irreducibles().iter().map(value_key).collect();
        let mut expected: Vec<String> = q8_irr.iter().map(value_key).collect();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        // And with the brute-force oracle head.
        let (oracle_head, _) = oracle::quaternion().table_head_of().unwrap();
        assert_eq!(table.head().orders(), oracle_head.orders());
        assert_eq!(table.head().centralizers(), oracle_head.centralizers());
        assert_eq!(table.head().powermap(2), oracle_head.powermap(2));
    }

    #[test]
    fn a_nonzero_faithful_value_on_a_fused_class_is_rejected() {
        let (h, irr) = test_tables::v4();
        let factor = CharacterTable::new(h, irr).unwrap();
        let result = build_central_extension_table(
            &factor,
            &[
                PreimageOrders::Split(1, 2),
                PreimageOrders::Fused(4),
                PreimageOrders::Fused(4),
                PreimageOrders::Fused(4),
            ],
            &[
                Cyclotomic::from_integer(2),
                Cyclotomic::one(),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
            ],
        );
        match result {
            Err(Error::Validation(_)) => {}
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn a_wrong_degree_fails_the_square_sum() {
        let (h, irr) = test_tables::v4();
        let factor = CharacterTable::new(h, irr).unwrap();
        let result = build_central_extension_table(
            &factor,
            &[
                PreimageOrders::Split(1, 2),
                PreimageOrders::Fused(4),
                PreimageOrders::Fused(4),
                PreimageOrders::Fused(4),
            ],
            &[
                Cyclotomic::from_integer(3),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
            ],
        );
        match result {
            Err(Error::Construction(_)) => {}
            other => panic!("expected a construction error, got {other:?}"),
        }
    }

    #[test]
    fn preimage_orders_must_divide_out_correctly() {
        let (h, irr) = test_tables::v4();
        let factor = CharacterTable::new(h, irr).unwrap();
        let result = build_central_extension_table(
            &factor,
            &[
                PreimageOrders::Split(1, 2),
                PreimageOrders::Fused(3),
                PreimageOrders::Fused(4),
                PreimageOrders::Fused(4),
            ],
            &[
                Cyclotomic::from_integer(2),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
            ],
        );
        match result {
            Err(Error::Validation(_)) => {}
            other => panic!("expected a validation error, got {other:?}"),
        }
    }
}
