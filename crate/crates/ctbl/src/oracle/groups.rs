//! The fixture zoo: small named groups used as ground truth throughout the
//! test suite, plus a regular-action constructor for matrix groups.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ff::{FFMatrix, FieldSpec};
use crate::meataxe::Permutation;
use crate::oracle::PermGroup;

fn cycles(degree: usize, spec: &[&[usize]]) -> Permutation {
    let cycles: Vec<Vec<usize>> = spec.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &cycles).expect("valid fixture cycles")
}

/// The cyclic group C_n on n points (C_1 is the trivial group on 1 point).
pub fn cyclic(n: u64) -> PermGroup {
    let n = n as usize;
    if n <= 1 {
        return PermGroup::new("C1", 1, vec![]).expect("trivial group");
    }
    let gen = cycles(n, &[&(1..=n).collect::<Vec<_>>()]);
    PermGroup::new(format!("C{n}"), n, vec![gen]).expect("valid cyclic group")
}

/// The Klein four-group as double transpositions on 4 points.
pub fn klein_four() -> PermGroup {
    PermGroup::new(
        "V4",
        4,
        vec![cycles(4, &[&[1, 2], &[3, 4]]), cycles(4, &[&[1, 3], &[2, 4]])],
    )
    .expect("valid V4")
}

/// The dihedral group of order 8 acting on the square.
pub fn dihedral_8() -> PermGroup {
    PermGroup::new(
        "D8",
        4,
        vec![cycles(4, &[&[1, 2, 3, 4]]), cycles(4, &[&[1, 3]])],
    )
    .expect("valid D8")
}

/// The symmetric group S_n (n ≥ 2) with its standard generators.
pub fn symmetric(n: u64) -> PermGroup {
    let n = n as usize;
    assert!(n >= 2, "symmetric group fixture needs n >= 2");
    let transposition = cycles(n, &[&[1, 2]]);
    let long = cycles(n, &[&(1..=n).collect::<Vec<_>>()]);
    PermGroup::new(format!("S{n}"), n, vec![transposition, long]).expect("valid Sn")
}

/// The alternating group A_n for n ∈ {4, 5}.
pub fn alternating(n: u64) -> PermGroup {
    match n {
        4 => PermGroup::new(
            "A4",
            4,
            vec![cycles(4, &[&[1, 2, 3]]), cycles(4, &[&[2, 3, 4]])],
        )
        .expect("valid A4"),
        5 => PermGroup::new(
            "A5",
            5,
            vec![cycles(5, &[&[1, 2, 3, 4, 5]]), cycles(5, &[&[3, 4, 5]])],
        )
        .expect("valid A5"),
        other => panic!("alternating group fixture not provided for n = {other}"),
    }
}

/// The quaternion group Q8 in its regular representation, realized over
/// GF(3) by i = [[0,−1],[1,0]] and j = [[1,1],[1,−1]] — two anticommuting
/// elements of order 4 with equal squares −I.
pub fn quaternion() -> PermGroup {
    let spec = FieldSpec::new(3, 1).expect("GF(3)");
    let i = FFMatrix::from_integers(spec, 2, 2, &[0, -1, 1, 0]).expect("i");
    let j = FFMatrix::from_integers(spec, 2, 2, &[1, 1, 1, -1]).expect("j");
    from_matrix_group("Q8", &[i, j], 8).expect("valid Q8")
}

/// SL(2,3) in its regular representation from the standard generators of
/// order 4 and 3 over GF(3).
pub fn special_linear_2_3() -> PermGroup {
    let spec = FieldSpec::new(3, 1).expect("GF(3)");
    let s = FFMatrix::from_integers(spec, 2, 2, &[0, -1, 1, 0]).expect("s");
    let t = FFMatrix::from_integers(spec, 2, 2, &[1, 1, 0, 1]).expect("t");
    from_matrix_group("SL(2,3)", &[s, t], 24).expect("valid SL(2,3)")
}

/// The groups exercised by the cross-checking invariant tests.
pub fn fixture_zoo() -> Vec<PermGroup> {
    let mut zoo: Vec<PermGroup> = (2..=15).map(cyclic).collect();
    zoo.extend([
        klein_four(),
        dihedral_8(),
        quaternion(),
        alternating(4),
        symmetric(3),
        symmetric(4),
        alternating(5),
        symmetric(5),
        special_linear_2_3(),
    ]);
    zoo
}

/// Converts a finite matrix group to a permutation group via its regular
/// action: elements are enumerated by closure, sorted canonically, and each
/// generator becomes the permutation induced by right multiplication.
pub fn from_matrix_group(
    name: impl Into<String>,
    generators: &[FFMatrix],
    cap: usize,
) -> Result<PermGroup> {
    if generators.is_empty() {
        return Err(Error::Arity("a matrix group needs at least one generator".into()));
    }
    let identity = FFMatrix::identity(generators[0].field(), generators[0].nrows());
    let mut elements = vec![identity.clone()];
    let mut seen: BTreeMap<FFMatrix, ()> = BTreeMap::new();
    seen.insert(identity, ());
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        next += 1;
        for g in generators {
            let product = current.multiply(g)?;
            if !seen.contains_key(&product) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded(format!(
                        "matrix group exceeds the cap {cap}"
                    )));
                }
                seen.insert(product.clone(), ());
                elements.push(product);
            }
        }
    }
    elements.sort();
    let index: BTreeMap<&FFMatrix, usize> =
        elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let perms: Vec<Permutation> = generators
        .iter()
        .map(|g| {
            let images: Vec<usize> = elements
                .iter()
                .map(|x| index[&x.multiply(g).expect("closed")])
                .collect();
            Permutation::from_images(images).expect("right multiplication is a bijection")
        })
        .collect::<Vec<_>>();
    PermGroup::new(name, elements.len(), perms)
}
