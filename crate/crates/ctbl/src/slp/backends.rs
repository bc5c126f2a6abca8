//! Group-element backends for straight-line program evaluation.

use crate::ff::FFMatrix;
use crate::slp::{GroupElement, OrderedElement};
use crate::{Error, Result};

/// Order searches on matrices are cut off at this bound; it comfortably
/// covers element orders in the groups handled here while keeping the
/// baby-step table of the order computation small.
pub const MATRIX_ORDER_CAP: u64 = 100_000_000;

impl GroupElement for FFMatrix {
    fn identity_like(&self) -> FFMatrix {
        assert!(self.is_square(), "group elements are square matrices");
        FFMatrix::identity(self.field(), self.nrows())
    }

    fn mul(&self, rhs: &FFMatrix) -> Result<FFMatrix> {
        self.multiply(rhs)
    }

    fn inverse(&self) -> Result<FFMatrix> {
        FFMatrix::inverse(self)
    }
}

impl OrderedElement for FFMatrix {
    fn order(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::Shape(format!("order of a {}x{} matrix", self.nrows(), self.ncols())));
        }
        self.element_order(MATRIX_ORDER_CAP)
    }
}
