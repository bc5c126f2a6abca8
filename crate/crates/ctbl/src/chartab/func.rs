//! Class functions: cyclotomic-valued vectors over the classes of a head,
//! with exact scalar products.

use num::{BigInt, One};

use crate::chartab::TableHead;
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};

/// A class function on a specific table head, identified by the head's
/// identifier string.  Values are exact cyclotomic numbers, one per class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    head_id: String,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    /// Builds a class function on `head`; the value count must match the
    /// class count.
    pub fn new(head: &TableHead, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        if values.len() != head.ncls() {
            return Err(Error::HeadMismatch(format!(
                "{} values for {} classes of table {}",
                values.len(),
                head.ncls(),
                head.identifier()
            )));
        }
        Ok(ClassFunction { head_id: head.identifier().to_string(), values })
    }

    /// Builds a class function from plain integer values.
    pub fn from_integers(head: &TableHead, values: &[i64]) -> Result<ClassFunction> {
        ClassFunction::new(head, values.iter().map(|&v| Cyclotomic::from_integer(v)).collect())
    }

    /// The all-ones (trivial) character.
    pub fn trivial(head: &TableHead) -> ClassFunction {
        ClassFunction {
            head_id: head.identifier().to_string(),
            values: vec![Cyclotomic::one(); head.ncls()],
        }
    }

    /// The regular character: `|G|` on the identity, `0` elsewhere.
    pub fn regular(head: &TableHead) -> ClassFunction {
        let mut values = vec![Cyclotomic::zero(); head.ncls()];
        values[0] = Cyclotomic::from_rational(Rational::from(head.size().clone()));
        ClassFunction { head_id: head.identifier().to_string(), values }
    }

    /// Identifier of the head this function lives on.
    pub fn head_id(&self) -> &str {
        &self.head_id
    }

    /// The values, one per class.
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// The value at class `i`.
    pub fn value(&self, i: usize) -> &Cyclotomic {
        &self.values[i]
    }

    /// The degree: the value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.head_id != other.head_id || self.values.len() != other.values.len() {
            return Err(Error::HeadMismatch(format!(
                "class functions on different tables ({} vs {})",
                self.head_id, other.head_id
            )));
        }
        Ok(())
    }

    /// Pointwise sum.
    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            head_id: self.head_id.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            head_id: self.head_id.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    /// Pointwise negation.
    pub fn neg(&self) -> ClassFunction {
        ClassFunction {
            head_id: self.head_id.clone(),
            values: self.values.iter().map(|a| a.neg()).collect(),
        }
    }

    /// Pointwise (tensor) product.
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            head_id: self.head_id.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    /// Scalar multiple by a cyclotomic factor.
    pub fn scale(&self, factor: &Cyclotomic) -> ClassFunction {
        ClassFunction {
            head_id: self.head_id.clone(),
            values: self.values.iter().map(|a| a.mul(factor)).collect(),
        }
    }

    /// Integer scalar multiple.
    pub fn scale_int(&self, factor: i64) -> ClassFunction {
        self.scale(&Cyclotomic::from_integer(factor))
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            head_id: self.head_id.clone(),
            values: self.values.iter().map(|a| a.conj()).collect(),
        }
    }

    /// True iff all values are zero.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

fn check_on_head(head: &TableHead, x: &ClassFunction) -> Result<()> {
    if x.head_id() != head.identifier() || x.values().len() != head.ncls() {
        return Err(Error::HeadMismatch(format!(
            "class function on table {} used with table {}",
            x.head_id(),
            head.identifier()
        )));
    }
    Ok(())
}

/// The exact scalar product `Σᵢ x(i)·conj(y(i)) / |C(i)|`.
pub fn scalar_product(head: &TableHead, x: &ClassFunction, y: &ClassFunction) -> Result<Cyclotomic> {
    check_on_head(head, x)?;
    check_on_head(head, y)?;
    let mut acc = Cyclotomic::zero();
    for ((xv, yv), c) in x.values().iter().zip(y.values()).zip(head.centralizers()) {
        let term = xv.mul(&yv.conj());
        acc = acc.add(&term.scale(&Rational::new(BigInt::one(), c.clone())));
    }
    Ok(acc)
}

/// The norm `⟨x, x⟩`.
pub fn norm(head: &TableHead, x: &ClassFunction) -> Result<Cyclotomic> {
    scalar_product(head, x, x)
}
