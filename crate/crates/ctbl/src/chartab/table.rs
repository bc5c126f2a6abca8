//! A character table: a head together with (some of) its irreducible
//! characters.  Structural consistency is validated here; the mathematical
//! certificate (orthogonality, degrees, column relations) is the job of
//! [`verify_orthogonality`](super::verify_orthogonality).

use super::func::ClassFunction;
use super::head::TableHead;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterTable {
    head: TableHead,
    irr: Vec<ClassFunction>,
}

impl CharacterTable {
    /// Bundles a head with irreducibles living on it.  The list may be
    /// partial (fewer rows than classes) but never longer than the class
    /// count, and every row must be a class function of this head.
    pub fn new(head: TableHead, irr: Vec<ClassFunction>) -> Result<CharacterTable> {
        if irr.len() > head.ncls() {
            return Err(Error::Shape(format!(
                "{} irreducibles for {} classes",
                irr.len(),
                head.ncls()
            )));
        }
        for (i, chi) in irr.iter().enumerate() {
            if chi.head_id() != head.identifier() || chi.values().len() != head.ncls() {
                return Err(Error::HeadMismatch(format!(
                    "row {} belongs to table '{}', not '{}'",
                    i + 1,
                    chi.head_id(),
                    head.identifier()
                )));
            }
        }
        Ok(CharacterTable { head, irr })
    }

    pub fn head(&self) -> &TableHead {
        &self.head
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irr
    }

    /// Whether the table carries one irreducible per class.
    pub fn is_complete(&self) -> bool {
        self.irr.len() == self.head.ncls()
    }
}
