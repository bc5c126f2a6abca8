//! Splitting a module into irreducible composition factors with random
//! enveloping-algebra elements and Norton's irreducibility criterion.

use super::module::{factor_action, standard_basis, submodule_action, GModule};
use crate::error::{Error, Result};
use crate::ff::{FFMatrix, FFVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Split attempts are only made for words whose nullity is small; larger
/// nullspaces rarely certify anything and waste spinning time.
const MAX_SPLIT_NULLITY: usize = 8;

/// A random element of the enveloping algebra: a scalar plus 2–4 terms,
/// each a short product of generators with a nonzero coefficient.
fn random_algebra_element(module: &GModule, rng: &mut ChaCha8Rng) -> Result<FFMatrix> {
    let q = module.field().order();
    let identity = FFMatrix::identity(module.field(), module.dim());
    let mut w = identity.scalar_mul(rng.gen_range(0..q))?;
    let terms = rng.gen_range(2..=4);
    for _ in 0..terms {
        let len = rng.gen_range(1..=4);
        let mut product = identity.clone();
        for _ in 0..len {
            let g = &module.generators()[rng.gen_range(0..module.ngens())];
            product = product.multiply(g)?;
        }
        w = w.add(&product.scalar_mul(rng.gen_range(1..q))?)?;
    }
    Ok(w)
}

/// Recurses on an invariant subspace and the corresponding quotient.
fn split(
    module: &GModule,
    basis: &[FFVector],
    budget: &mut usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<GModule>> {
    let sub = submodule_action(module, basis)?;
    let quotient = factor_action(module, basis)?;
    let mut factors = chop(&sub, budget, rng)?;
    factors.extend(chop(&quotient, budget, rng)?);
    Ok(factors)
}

fn chop(module: &GModule, budget: &mut usize, rng: &mut ChaCha8Rng) -> Result<Vec<GModule>> {
    if module.dim() <= 1 {
        return Ok(vec![module.clone()]);
    }
    loop {
        if *budget == 0 {
            return Err(Error::Budget(format!(
                "word attempts exhausted while a {}-dimensional module is uncertified",
                module.dim()
            )));
        }
        *budget -= 1;
        let w = random_algebra_element(module, rng)?;
        let nullspace = w.left_nullspace();
        if nullspace.is_empty() || nullspace.len() > MAX_SPLIT_NULLITY {
            continue;
        }
        let basis = standard_basis(module, &nullspace[0])?;
        if basis.len() < module.dim() {
            return split(module, &basis, budget, rng);
        }
        // The nullspace vector spins up everything.  Norton's criterion:
        // with nullity 1, the module is irreducible iff one dual-nullspace
        // vector also spins up the transposed module; a proper dual spin
        // exhibits an invariant subspace as its perp.
        if nullspace.len() != 1 {
            continue;
        }
        let transposed = module.transposed();
        let dual_nullspace = w.transpose().left_nullspace();
        let dual_basis = standard_basis(&transposed, &dual_nullspace[0])?;
        if dual_basis.len() == module.dim() {
            return Ok(vec![module.clone()]);
        }
        let perp = FFMatrix::from_rows(&dual_basis)?.transpose().left_nullspace();
        return split(module, &perp, budget, rng);
    }
}

/// Decomposes the module into a list of irreducible composition factors,
/// sorted by dimension.  The factor dimensions always sum to the module
/// dimension.  `budget` bounds the total number of random word attempts
/// across the whole recursion; `seed` fixes the random stream, making the
/// result deterministic.
pub fn composition_factors(module: &GModule, budget: usize, seed: u64) -> Result<Vec<GModule>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut remaining = budget;
    let mut factors = chop(module, &mut remaining, &mut rng)?;
    factors.sort_by_key(GModule::dim);
    Ok(factors)
}
