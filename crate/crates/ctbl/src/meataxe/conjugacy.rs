//! Certification of simultaneous conjugacy of two generator tuples by
//! rebasing both modules to a canonically seeded standard basis.

use super::module::{rebase, standard_basis, GModule};
use crate::error::{Error, Result};
use crate::ff::FFMatrix;
use crate::slp::Slp;

/// Evaluates a program on the module generators and sums its output
/// matrices.  A multi-output program thereby denotes an element of the
/// enveloping matrix algebra — a sum of group words — which, unlike any
/// product of invertible generators, can be singular; a single-output
/// program contributes just its product.
pub fn evaluate_algebra_sum(word: &Slp, module: &GModule) -> Result<FFMatrix> {
    let outputs = word.evaluate(module.generators())?;
    let mut sum = FFMatrix::zero(module.field(), module.dim(), module.dim());
    for m in &outputs {
        sum = sum.add(m)?;
    }
    Ok(sum)
}

/// The classical seed element `1 + ba + ab + b` of the enveloping algebra
/// of a 2-generator module, as a multi-output program.  On many modules of
/// interest its left nullspace is 1-dimensional, which makes it a usable
/// canonical seed for [`certify_conjugacy`].
pub fn classic_seed_word() -> Slp {
    // Slots: 1 = a, 2 = b, 3 = b·a, 4 = a·b.
    Slp::new(
        2,
        vec![vec![(2, 1), (1, 1)], vec![(1, 1), (2, 1)]],
        vec![vec![(1, 0)], vec![(3, 1)], vec![(4, 1)], vec![(2, 1)]],
    )
    .expect("fixed program is valid")
}

/// Rebases the module to the standard basis spun up from the unique normed
/// left-nullspace vector of the word's evaluation.  Errors with a
/// non-canonical-seed condition unless that nullspace is exactly
/// 1-dimensional and its vector spins up the full space.
fn canonical_rebase(module: &GModule, word: &Slp) -> Result<GModule> {
    let w = evaluate_algebra_sum(word, module)?;
    let nullspace = w.left_nullspace();
    if nullspace.len() != 1 {
        return Err(Error::NonCanonicalSeed(format!(
            "the seed word has nullity {} (need exactly 1)",
            nullspace.len()
        )));
    }
    let basis = standard_basis(module, &nullspace[0])?;
    if basis.len() != module.dim() {
        return Err(Error::NonCanonicalSeed(format!(
            "the seed vector spins up a proper submodule of dimension {} < {}",
            basis.len(),
            module.dim()
        )));
    }
    rebase(module, &basis)
}

/// Certifies that two generator tuples are simultaneously conjugate: both
/// modules are rebased to the standard basis seeded by the word's unique
/// nullspace vector, and the rebased tuples are compared.  `true` proves
/// conjugacy (the two basis matrices exhibit a conjugator); `false` only
/// reports that this particular certificate failed.
pub fn certify_conjugacy(mod_a: &GModule, mod_b: &GModule, word: &Slp) -> Result<bool> {
    if mod_a.field() != mod_b.field() {
        return Err(Error::Shape(format!(
            "modules over different fields GF({}) and GF({})",
            mod_a.field().order(),
            mod_b.field().order()
        )));
    }
    if mod_a.ngens() != mod_b.ngens() {
        return Err(Error::Arity(format!(
            "generator tuples of lengths {} and {} cannot be compared",
            mod_a.ngens(),
            mod_b.ngens()
        )));
    }
    if mod_a.dim() != mod_b.dim() {
        return Ok(false);
    }
    let std_a = canonical_rebase(mod_a, word)?;
    let std_b = canonical_rebase(mod_b, word)?;
    Ok(std_a.generators() == std_b.generators())
}
