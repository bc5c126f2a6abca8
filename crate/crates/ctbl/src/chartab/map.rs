//! Parametrized class maps: per-class candidate sets with the composition,
//! inversion, meet, and refinement-enumeration algebra used by fusion and
//! power-map inference.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A map from the classes of one table to candidate classes of another:
/// entry `i` is the set of possible image classes of class `i`.
///
/// A map is *determined* when every entry is a single class.  Proper maps
/// have nonempty entries; only [`ClassMap::inverse`] can produce empty
/// entries (preimages of classes that are never hit), and the algebra
/// reports an inconsistency as soon as an empty entry would propagate into
/// a result.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ClassMap {
    entries: Vec<BTreeSet<usize>>,
    codomain: usize,
}

impl ClassMap {
    /// Builds a map from candidate sets; every entry must be nonempty and
    /// within the codomain.
    pub fn new(entries: Vec<BTreeSet<usize>>, codomain: usize) -> Result<ClassMap> {
        for (i, entry) in entries.iter().enumerate() {
            if entry.is_empty() {
                return Err(Error::Validation(format!(
                    "class {} has an empty candidate set",
                    i + 1
                )));
            }
            if let Some(&max) = entry.iter().next_back() {
                if max >= codomain {
                    return Err(Error::Validation(format!(
                        "class {} has candidate {} outside the codomain of {} classes",
                        i + 1,
                        max + 1,
                        codomain
                    )));
                }
            }
        }
        Ok(ClassMap { entries, codomain })
    }

    /// Builds a determined map from an image list.
    pub fn from_images(images: &[usize], codomain: usize) -> Result<ClassMap> {
        ClassMap::new(
            images.iter().map(|&j| BTreeSet::from([j])).collect(),
            codomain,
        )
    }

    /// The fully ambiguous map: every class may map anywhere.
    pub fn full_ambiguity(domain: usize, codomain: usize) -> Result<ClassMap> {
        if codomain == 0 {
            return Err(Error::Validation("empty codomain".into()));
        }
        let all: BTreeSet<usize> = (0..codomain).collect();
        Ok(ClassMap { entries: vec![all; domain], codomain })
    }

    /// Number of domain classes.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of codomain classes.
    pub fn codomain(&self) -> usize {
        self.codomain
    }

    /// The candidate set of class `i`.
    pub fn entry(&self, i: usize) -> &BTreeSet<usize> {
        &self.entries[i]
    }

    /// All candidate sets.
    pub fn entries(&self) -> &[BTreeSet<usize>] {
        &self.entries
    }

    /// Replaces the candidate set of class `i` (used by refinement loops).
    pub fn set_entry(&mut self, i: usize, entry: BTreeSet<usize>) -> Result<()> {
        if let Some(&max) = entry.iter().next_back() {
            if max >= self.codomain {
                return Err(Error::Validation(format!(
                    "candidate {} outside the codomain of {} classes",
                    max + 1,
                    self.codomain
                )));
            }
        }
        self.entries[i] = entry;
        Ok(())
    }

    /// True iff every entry is a single class.
    pub fn is_determined(&self) -> bool {
        self.entries.iter().all(|e| e.len() == 1)
    }

    /// True iff every entry is nonempty.
    pub fn is_consistent(&self) -> bool {
        self.entries.iter().all(|e| !e.is_empty())
    }

    /// The image list, when determined.
    pub fn determined(&self) -> Option<Vec<usize>> {
        self.entries
            .iter()
            .map(|e| if e.len() == 1 { e.iter().next().copied() } else { None })
            .collect()
    }

    /// Total candidate count `Σᵢ |entry(i)|` — the measure refinements
    /// strictly decrease.
    pub fn candidate_count(&self) -> usize {
        self.entries.iter().map(|e| e.len()).sum()
    }

    /// Set-valued composition: applies `self` first, then `after`;
    /// `(after ∘ self)(i) = ⋃_{j ∈ self(i)} after(j)`.
    pub fn compose(&self, after: &ClassMap) -> Result<ClassMap> {
        if self.codomain != after.len() {
            return Err(Error::Arity(format!(
                "cannot compose: codomain of {} classes feeds a map on {} classes",
                self.codomain,
                after.len()
            )));
        }
        let entries: Vec<BTreeSet<usize>> = self
            .entries
            .iter()
            .map(|set| set.iter().flat_map(|&j| after.entries[j].iter().copied()).collect())
            .collect();
        for (i, e) in entries.iter().enumerate() {
            if e.is_empty() && !self.entries[i].is_empty() {
                return Err(Error::Inconsistency(format!(
                    "composition empties the candidate set of class {}",
                    i + 1
                )));
            }
        }
        Ok(ClassMap { entries, codomain: after.codomain })
    }

    /// Set-valued inverse: entry `j` of the result is the set of classes
    /// mapping to `j`.  Entries for classes never hit are empty; such a map
    /// is only meaningful as an operand of `compose` or `meet`.
    pub fn inverse(&self) -> ClassMap {
        let mut entries = vec![BTreeSet::new(); self.codomain];
        for (i, set) in self.entries.iter().enumerate() {
            for &j in set {
                entries[j].insert(i);
            }
        }
        ClassMap { entries, codomain: self.len() }
    }

    /// Entrywise intersection; an empty intersection is an inconsistency.
    pub fn meet(&self, other: &ClassMap) -> Result<ClassMap> {
        if self.len() != other.len() || self.codomain != other.codomain {
            return Err(Error::Arity(format!(
                "cannot meet maps of shapes {}→{} and {}→{}",
                self.len(),
                self.codomain,
                other.len(),
                other.codomain
            )));
        }
        let entries: Vec<BTreeSet<usize>> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.intersection(b).copied().collect())
            .collect();
        if let Some(i) = entries.iter().position(|e| e.is_empty()) {
            return Err(Error::Inconsistency(format!(
                "meet empties the candidate set of class {}",
                i + 1
            )));
        }
        Ok(ClassMap { entries, codomain: self.codomain })
    }

    /// All determined refinements, in lexicographic order of their image
    /// lists (the last entry varies fastest).
    pub fn contained_maps(&self) -> Result<Vec<ClassMap>> {
        if !self.is_consistent() {
            return Err(Error::Inconsistency(
                "cannot refine a map with an empty candidate set".into(),
            ));
        }
        let choices: Vec<Vec<usize>> = self
            .entries
            .iter()
            .map(|e| e.iter().copied().collect())
            .collect();
        let mut out = Vec::new();
        let mut current = vec![0usize; choices.len()];
        loop {
            let images: Vec<usize> = current
                .iter()
                .zip(&choices)
                .map(|(&pick, opts)| opts[pick])
                .collect();
            out.push(ClassMap::from_images(&images, self.codomain)?);
            // Odometer increment, last position fastest.
            let mut pos = choices.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                current[pos] += 1;
                if current[pos] < choices[pos].len() {
                    break;
                }
                current[pos] = 0;
            }
        }
    }
}

impl fmt::Display for ClassMap {
    /// 1-based entries: determined entries plain, ambiguous in braces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, set) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if set.len() == 1 {
                write!(f, "{}", set.iter().next().unwrap() + 1)?;
            } else {
                write!(f, "{{")?;
                for (k, j) in set.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", j + 1)?;
                }
                write!(f, "}}")?;
            }
        }
        write!(f, "]")
    }
}
