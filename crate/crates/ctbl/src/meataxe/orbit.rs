//! Vector orbits under a matrix group, and the permutations the generators
//! induce on a sorted orbit.

use super::module::GModule;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::ff::FFVector;
use std::collections::{BTreeSet, HashMap, VecDeque};

/// Closes the orbit of `seed` under right multiplication by the module
/// generators, sorts it lexicographically on the canonical integer entry
/// lifts, and expresses each generator as the permutation it induces on
/// the sorted orbit (1-based positions).
pub fn orbit_and_permutation(
    module: &GModule,
    seed: &FFVector,
    cap: usize,
) -> Result<(Vec<FFVector>, Vec<Permutation>)> {
    if seed.len() != module.dim() {
        return Err(Error::Shape(format!(
            "seed has length {} in a {}-dimensional module",
            seed.len(),
            module.dim()
        )));
    }
    if seed.is_zero() {
        return Err(Error::Seed("the orbit seed must be nonzero".into()));
    }
    let mut seen: BTreeSet<FFVector> = BTreeSet::new();
    seen.insert(seed.clone());
    let mut queue: VecDeque<FFVector> = VecDeque::from([seed.clone()]);
    while let Some(v) = queue.pop_front() {
        for g in module.generators() {
            let image = v.mul_matrix(g)?;
            if !seen.contains(&image) {
                if seen.len() == cap {
                    return Err(Error::CapExceeded(format!(
                        "orbit exceeds the cap of {cap} vectors"
                    )));
                }
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    let orbit: Vec<FFVector> = seen.into_iter().collect();
    let position: HashMap<&FFVector, usize> =
        orbit.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut permutations = Vec::with_capacity(module.ngens());
    for g in module.generators() {
        let mut images = Vec::with_capacity(orbit.len());
        for v in &orbit {
            let image = v.mul_matrix(g)?;
            images.push(position[&image]);
        }
        permutations.push(Permutation::from_images(images)?);
    }
    Ok((orbit, permutations))
}
