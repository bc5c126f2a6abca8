//! Finding generators of an elementary abelian kernel of a homomorphism
//! given only corresponding generator lists, by comparing element orders.

use crate::error::{Error, Result};
use crate::slp::{element_power, FreeWord, GroupElement, OrderedElement};

/// Desk-scale bound on explicit subgroup enumeration for the membership
/// test; kernels larger than this are refused rather than mis-handled.
const MEMBERSHIP_CAP: usize = 1 << 16;

/// The subgroup generated by `gens`, enumerated explicitly (BFS closure
/// under right multiplication).  Refuses once the closure exceeds the
/// desk-scale membership cap.
fn closure<G: GroupElement>(gens: &[G], identity: &G) -> Result<Vec<G>> {
    let mut elements = vec![identity.clone()];
    let mut frontier = vec![identity.clone()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g)?;
            if !elements.contains(&y) {
                if elements.len() == MEMBERSHIP_CAP {
                    return Err(Error::CapExceeded(format!(
                        "kernel membership enumeration exceeds {MEMBERSHIP_CAP} elements"
                    )));
                }
                elements.push(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(elements)
}

/// Searches positive products of the generators, shortest first and in
/// generator order within each length, for elements whose order in `big`
/// exceeds their order in `small` under the correspondence
/// `big[i] ↔ small[i]`.  Each mismatch witnesses the kernel element
/// `w^(small order)`; it is kept iff it enlarges the kernel subgroup
/// generated so far.  Stops once `target_rank` independent generators are
/// found; returns the witnessing words alongside the elements.
///
/// The kernel must be elementary abelian of exponent `p` (so every found
/// element has order exactly `p`); `max_len` bounds the explored word
/// length.
pub fn kernel_generators_by_order_mismatch<G, H>(
    big: &[G],
    small: &[H],
    p: u64,
    target_rank: usize,
    max_len: usize,
) -> Result<Vec<(FreeWord, G)>>
where
    G: OrderedElement,
    H: OrderedElement,
{
    if big.is_empty() || big.len() != small.len() {
        return Err(Error::Arity(format!(
            "generator lists of lengths {} and {} do not correspond",
            big.len(),
            small.len()
        )));
    }
    if target_rank == 0 {
        return Ok(Vec::new());
    }
    let identity = big[0].identity_like();
    let mut found: Vec<(FreeWord, G)> = Vec::new();

    // Depth-first over positive words as index stacks, shortest lengths
    // first; partial products are kept on parallel stacks so each step
    // costs one multiplication per side.
    for len in 1..=max_len {
        let mut indices = vec![0usize];
        let mut prods_big = vec![big[0].clone()];
        let mut prods_small = vec![small[0].clone()];
        loop {
            if indices.len() == len {
                let gb = prods_big.last().expect("nonempty stack");
                let gs = prods_small.last().expect("nonempty stack");
                let ord_big = gb.order()?;
                let ord_small = gs.order()?;
                if ord_big > ord_small {
                    if ord_big != p * ord_small {
                        return Err(Error::Domain(format!(
                            "order mismatch {ord_big} vs {ord_small} is not a factor of {p}: \
                             the kernel is not elementary abelian of exponent {p}"
                        )));
                    }
                    let candidate = element_power(gb, ord_small as i64)?;
                    let kernel_gens: Vec<G> =
                        found.iter().map(|(_, g)| g.clone()).collect();
                    if !closure(&kernel_gens, &identity)?.contains(&candidate) {
                        let word = FreeWord::from_syllables(
                            indices.iter().map(|&i| (i, 1i64)),
                        )
                        .pow(ord_small as i64);
                        found.push((word, candidate));
                        if found.len() == target_rank {
                            return Ok(found);
                        }
                    }
                }
            } else {
                // Descend: append generator 0.
                indices.push(0);
                let prev_b = prods_big.last().expect("nonempty").clone();
                let prev_s = prods_small.last().expect("nonempty").clone();
                prods_big.push(prev_b.mul(&big[0])?);
                prods_small.push(prev_s.mul(&small[0])?);
                continue;
            }
            // Advance: increment the deepest index that can move.
            loop {
                let i = match indices.pop() {
                    Some(i) => i,
                    None => break,
                };
                prods_big.pop();
                prods_small.pop();
                if i + 1 < big.len() {
                    indices.push(i + 1);
                    let (pb, ps) = match (prods_big.last(), prods_small.last()) {
                        (Some(b), Some(s)) => (b.mul(&big[i + 1])?, s.mul(&small[i + 1])?),
                        _ => (big[i + 1].clone(), small[i + 1].clone()),
                    };
                    prods_big.push(pb);
                    prods_small.push(ps);
                    break;
                }
            }
            if indices.is_empty() {
                break;
            }
        }
    }
    Err(Error::NotFound(format!(
        "only {} of {} kernel generators found among words of length at most {}",
        found.len(),
        target_rank,
        max_len
    )))
}
