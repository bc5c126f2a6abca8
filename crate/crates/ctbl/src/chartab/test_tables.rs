//! Hand-checked character tables of small groups for use as test
//! fixtures, in the class order the brute-force oracle produces (sorted
//! by element order, then class size).  Where two classes tie in that
//! order (the two order-5 classes of A5, say), the tables are symmetric
//! under the swap, so set-valued comparisons stay label-safe.

use num::BigInt;

use super::func::ClassFunction;
use super::head::TableHead;
use crate::cyclo::Cyclotomic;

fn head(
    id: &str,
    size: i64,
    orders: &[u64],
    cents: &[i64],
    maps: &[(u64, &[usize])],
) -> TableHead {
    let mut h = TableHead::new(
        id,
        BigInt::from(size),
        orders.to_vec(),
        cents.iter().map(|&c| BigInt::from(c)).collect(),
    )
    .unwrap();
    for (p, map) in maps {
        h = h.with_powermap(*p, map.to_vec()).unwrap();
    }
    h
}

fn int_rows(head: &TableHead, rows: &[&[i64]]) -> Vec<ClassFunction> {
    rows.iter()
        .map(|r| ClassFunction::from_integers(head, r).unwrap())
        .collect()
}

pub(crate) fn c2() -> (TableHead, Vec<ClassFunction>) {
    let h = head("c2-hand", 2, &[1, 2], &[2, 2], &[(2, &[0, 0])]);
    let irr = int_rows(&h, &[&[1, 1], &[1, -1]]);
    (h, irr)
}

/// The cyclic group of order `n` with classes in generator-power order
/// e, g, g², …, g^{n−1} and characters λ_k(g^m) = E(n)^{km}.
pub(crate) fn cyclic(n: u64) -> (TableHead, Vec<ClassFunction>) {
    let orders: Vec<u64> = (0..n).map(|m| n / num::Integer::gcd(&n, &m)).collect();
    let cents: Vec<BigInt> = (0..n).map(|_| BigInt::from(n)).collect();
    let mut h = TableHead::new(format!("c{n}-hand"), BigInt::from(n), orders, cents).unwrap();
    for p in h.required_primes() {
        let map: Vec<usize> = (0..n).map(|m| ((p * m) % n) as usize).collect();
        h = h.with_powermap(p, map).unwrap();
    }
    let irr = (0..n)
        .map(|k| {
            let values: Vec<Cyclotomic> = (0..n)
                .map(|m| Cyclotomic::root_of_unity(n, (k * m % n) as i64).unwrap())
                .collect();
            ClassFunction::new(&h, values).unwrap()
        })
        .collect();
    (h, irr)
}

pub(crate) fn v4() -> (TableHead, Vec<ClassFunction>) {
    let h = head(
        "v4-hand",
        4,
        &[1, 2, 2, 2],
        &[4, 4, 4, 4],
        &[(2, &[0, 0, 0, 0])],
    );
    let irr = int_rows(
        &h,
        &[
            &[1, 1, 1, 1],
            &[1, 1, -1, -1],
            &[1, -1, 1, -1],
            &[1, -1, -1, 1],
        ],
    );
    (h, irr)
}

pub(crate) fn a4() -> (TableHead, Vec<ClassFunction>) {
    let h = head(
        "a4-hand",
        12,
        &[1, 2, 3, 3],
        &[12, 4, 3, 3],
        &[(2, &[0, 0, 3, 2]), (3, &[0, 1, 0, 0])],
    );
    let omega = Cyclotomic::root_of_unity(3, 1).unwrap();
    let omega2 = Cyclotomic::root_of_unity(3, 2).unwrap();
    let one = Cyclotomic::one();
    let mut irr = int_rows(&h, &[&[1, 1, 1, 1]]);
    irr.push(
        ClassFunction::new(&h, vec![one.clone(), one.clone(), omega.clone(), omega2.clone()])
            .unwrap(),
    );
    irr.push(ClassFunction::new(&h, vec![one.clone(), one, omega2, omega]).unwrap());
    irr.extend(int_rows(&h, &[&[3, -1, 0, 0]]));
    (h, irr)
}

/// S4 with classes ordered 1a, 2a (double transpositions), 2b
/// (transpositions), 3a, 4a.
pub(crate) fn s4() -> (TableHead, Vec<ClassFunction>) {
    let h = head(
        "s4-hand",
        24,
        &[1, 2, 2, 3, 4],
        &[24, 8, 4, 3, 4],
        &[(2, &[0, 0, 0, 3, 1]), (3, &[0, 1, 2, 0, 4])],
    );
    let irr = int_rows(
        &h,
        &[
            &[1, 1, 1, 1, 1],
            &[1, 1, -1, 1, -1],
            &[2, 2, 0, -1, 0],
            &[3, -1, 1, 0, -1],
            &[3, -1, -1, 0, 1],
        ],
    );
    (h, irr)
}

/// D8 with classes ordered 1a, 2a (the central involution), 2b, 2c (the
/// two reflection classes), 4a.
pub(crate) fn d8() -> (TableHead, Vec<ClassFunction>) {
    let h = head(
        "d8-hand",
        8,
        &[1, 2, 2, 2, 4],
        &[8, 8, 4, 4, 4],
        &[(2, &[0, 0, 0, 0, 1])],
    );
    let irr = int_rows(
        &h,
        &[
            &[1, 1, 1, 1, 1],
            &[1, 1, 1, -1, -1],
            &[1, 1, -1, 1, -1],
            &[1, 1, -1, -1, 1],
            &[2, -2, 0, 0, 0],
        ],
    );
    (h, irr)
}

/// Q8 with classes ordered 1a, 2a (the central involution), 4a, 4b, 4c.
pub(crate) fn q8() -> (TableHead, Vec<ClassFunction>) {
    let h = head(
        "q8-hand",
        8,
        &[1, 2, 4, 4, 4],
        &[8, 8, 4, 4, 4],
        &[(2, &[0, 0, 1, 1, 1])],
    );
    let irr = int_rows(
        &h,
        &[
            &[1, 1, 1, 1, 1],
            &[1, 1, 1, -1, -1],
            &[1, 1, -1, 1, -1],
            &[1, 1, -1, -1, 1],
            &[2, -2, 0, 0, 0],
        ],
    );
    (h, irr)
}

/// The five irreducible value rows of A5 on classes 1a, 2a, 3a, 5a, 5b,
/// with the golden-ratio entries written in roots of unity:
/// (1±√5)/2 = 1 + E(5) + E(5)⁴ and 1 + E(5)² + E(5)³.
pub(crate) fn a5_values() -> Vec<Vec<Cyclotomic>> {
    let int = |v: i64| Cyclotomic::from_integer(v);
    let e5 = |k: i64| Cyclotomic::root_of_unity(5, k).unwrap();
    let phi_plus = int(1).add(&e5(1)).add(&e5(4));
    let phi_minus = int(1).add(&e5(2)).add(&e5(3));
    vec![
        vec![int(1), int(1), int(1), int(1), int(1)],
        vec![int(3), int(-1), int(0), phi_plus.clone(), phi_minus.clone()],
        vec![int(3), int(-1), int(0), phi_minus, phi_plus],
        vec![int(4), int(0), int(1), int(-1), int(-1)],
        vec![int(5), int(1), int(-1), int(0), int(0)],
    ]
}

pub(crate) fn a5() -> (TableHead, Vec<ClassFunction>) {
    let h = head(
        "a5-hand",
        60,
        &[1, 2, 3, 5, 5],
        &[60, 4, 3, 5, 5],
        &[
            (2, &[0, 0, 2, 4, 3]),
            (3, &[0, 1, 0, 4, 3]),
            (5, &[0, 1, 2, 0, 0]),
        ],
    );
    let irr = a5_values()
        .into_iter()
        .map(|row| ClassFunction::new(&h, row).unwrap())
        .collect();
    (h, irr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::func::{norm, scalar_product};
    use crate::cyclo::Rational;
    use num::Zero;

    #[test]
    fn fixture_tables_are_orthonormal_with_matching_degrees() {
        for (h, irr) in [c2(), v4(), a4(), s4(), d8(), q8(), a5(), cyclic(5), cyclic(6)] {
            assert_eq!(irr.len(), h.ncls(), "{}", h.identifier());
            let mut degree_sum = Rational::zero();
            for (i, chi) in irr.iter().enumerate() {
                let d = chi.degree().as_rational().unwrap();
                degree_sum += &d * &d;
                assert_eq!(
                    norm(&h, chi).unwrap(),
                    Cyclotomic::one(),
                    "{} row {}",
                    h.identifier(),
                    i
                );
                for later in &irr[i + 1..] {
                    assert!(
                        scalar_product(&h, chi, later).unwrap().is_zero(),
                        "{} row {}",
                        h.identifier(),
                        i
                    );
                }
            }
            assert_eq!(
                degree_sum,
                Rational::from(BigInt::from(h.size().clone())),
                "{}",
                h.identifier()
            );
        }
    }

    #[test]
    fn second_orthogonality_holds_columnwise() {
        for (h, irr) in [s4(), a5(), q8()] {
            for i in 0..h.ncls() {
                for j in 0..h.ncls() {
                    let mut acc = Cyclotomic::zero();
                    for chi in &irr {
                        acc = acc.add(&chi.value(i).mul(&chi.value(j).conj()));
                    }
                    let expected = if i == j {
                        Cyclotomic::from_rational(Rational::from(h.centralizer_of(i).clone()))
                    } else {
                        Cyclotomic::zero()
                    };
                    assert_eq!(acc, expected, "{} columns {i},{j}", h.identifier());
                }
            }
        }
    }
}
