//! Self-contained certification of a finished character table: row and
//! column orthogonality, degree arithmetic, and class count, reported as
//! a list of violations rather than errors so a caller can inspect
//! everything that is wrong at once.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use super::func::{norm, scalar_product};
use super::table::CharacterTable;
use crate::cyclo::{Cyclotomic, Rational};

/// Outcome of [`verify_orthogonality`]: empty means the table is a
/// certified character table.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    violations: Vec<String>,
}

impl OrthogonalityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }
}

impl fmt::Display for OrthogonalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            write!(f, "orthogonality certified")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Checks everything a complete character table must satisfy: every row
/// has norm 1, distinct rows are orthogonal, the row count equals the
/// class count, degrees are positive rational integers whose squares sum
/// to the group order, and the columns satisfy the second orthogonality
/// relation Σ_χ χ(i)·conj(χ(j)) = δ_ij·|C(i)|.  Every failure becomes
/// one line of the report; nothing is an error.
pub fn verify_orthogonality(table: &CharacterTable) -> OrthogonalityReport {
    let head = table.head();
    let irr = table.irreducibles();
    let mut violations = Vec::new();
    if irr.len() != head.ncls() {
        violations.push(format!(
            "table has {} irreducibles for {} classes",
            irr.len(),
            head.ncls()
        ));
    }
    for (i, chi) in irr.iter().enumerate() {
        let n = norm(head, chi).expect("table rows live on its head");
        if n != Cyclotomic::one() {
            violations.push(format!("row {} has norm {}", i + 1, n));
        }
        for (j, later) in irr.iter().enumerate().skip(i + 1) {
            let s = scalar_product(head, chi, later).expect("table rows live on its head");
            if !s.is_zero() {
                violations.push(format!(
                    "rows {} and {} have scalar product {}",
                    i + 1,
                    j + 1,
                    s
                ));
            }
        }
    }
    let mut degree_sum = Rational::zero();
    for (i, chi) in irr.iter().enumerate() {
        match chi.degree().as_rational() {
            Some(d) if d.is_integer() && d.is_positive() => {
                degree_sum += &d * &d;
            }
            _ => violations.push(format!(
                "row {} has degree {}, not a positive integer",
                i + 1,
                chi.degree()
            )),
        }
    }
    if degree_sum != Rational::from(head.size().clone()) {
        violations.push(format!(
            "degree squares sum to {} but the group order is {}",
            degree_sum,
            head.size()
        ));
    }
    for i in 0..head.ncls() {
        for j in i..head.ncls() {
            let mut sum = Cyclotomic::zero();
            for chi in irr {
                sum = sum.add(&chi.value(i).mul(&chi.value(j).conj()));
            }
            let expected = if i == j {
                Cyclotomic::from_rational(Rational::from(BigInt::from(
                    head.centralizer_of(i).clone(),
                )))
            } else {
                Cyclotomic::zero()
            };
            if sum != expected {
                violations.push(format!(
                    "columns {} and {} have product {} instead of {}",
                    i + 1,
                    j + 1,
                    sum,
                    expected
                ));
            }
        }
    }
    OrthogonalityReport { violations }
}

#[cfg(test)]
mod tests {
    use super::super::test_tables;
    use super::*;
    use crate::chartab::ClassFunction;
    use crate::oracle;

    #[test]
    fn the_alternating_five_table_is_certified() {
        let (head, _) = oracle::alternating(5).table_head_of().unwrap();
        let (_, rows) = test_tables::a5();
        let irr: Vec<ClassFunction> = rows
            .iter()
            .map(|r| ClassFunction::new(&head, r.values().to_vec()).unwrap())
            .collect();
        let table = CharacterTable::new(head, irr).unwrap();
        let report = verify_orthogonality(&table);
        assert!(report.is_clean(), "{report}");
        assert_eq!(report.to_string(), "orthogonality certified");
    }

    #[test]
    fn a_duplicated_row_breaks_row_orthogonality() {
        let (head, mut irr) = test_tables::s4();
        irr[1] = irr[0].clone();
        let table = CharacterTable::new(head, irr).unwrap();
        let report = verify_orthogonality(&table);
        assert!(!report.is_clean());
        assert!(
            report.violations().iter().any(|v| v.contains("scalar product")),
            "{report}"
        );
    }

    #[test]
    fn a_missing_row_breaks_the_degree_sum() {
        let (head, irr) = test_tables::s4();
        let table = CharacterTable::new(head, irr[..4].to_vec()).unwrap();
        let report = verify_orthogonality(&table);
        assert!(!report.is_clean());
        assert!(
            report
                .violations()
                .iter()
                .any(|v| v.contains("degree squares sum")),
            "{report}"
        );
        assert!(
            report.violations().iter().any(|v| v.contains("4 irreducibles")),
            "{report}"
        );
    }

    #[test]
    fn a_non_character_row_is_flagged_for_its_degree() {
        let (head, mut irr) = test_tables::v4();
        irr[3] = irr[3].scale_int(-1);
        let table = CharacterTable::new(head, irr).unwrap();
        let report = verify_orthogonality(&table);
        assert!(
            report
                .violations()
                .iter()
                .any(|v| v.contains("not a positive integer")),
            "{report}"
        );
    }
}
