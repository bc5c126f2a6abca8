//! Shipped program and word data for the verification pipeline.
//!
//! The fixtures cover two computations:
//!
//! * **Presentation checking for the Baby Monster.**  A presentation of
//!   `2 × B` on eleven involutions arranged in a Y₄₃₃-shaped Coxeter
//!   diagram together with one long "spider" relator.
//!   [`presentation_generator_program`] expresses the eleven presentation
//!   generators as words in two standard generators,
//!   [`presentation_relators`] lists the relators to check on them, and
//!   [`generator_recovery_program`] recovers a conjugate pair of the
//!   standard generators from the eleven, establishing that both
//!   generating sets span the same group.
//!
//! * **Standard generators inside `2^(1+22).Co₂`.**
//!   [`co2_standard_generators_program`] produces standard generators of
//!   the Conway group Co₂ from the generators of a 23-dimensional
//!   composition factor, and [`co2_kernel_words_program`] computes the 22
//!   words whose images span the elementary abelian kernel of a
//!   `2^22.Co₂` quotient.
//!
//! All programs are stored in the straight-line program text format of
//! [`Slp::from_text`] and embedded in the library, so no runtime file
//! access is needed.

use crate::slp::{parse_word_program, Slp};

/// Program computing standard generators of Co₂ from the two generators of
/// the 23-dimensional composition factor (2 inputs, 2 outputs).
///
/// On free generators `x, y` the outputs are `y^12` and
/// `c^-1 (y^4 x)^4 c` with `c = y (y x)^3`.
pub fn co2_standard_generators_program() -> Slp {
    Slp::from_text(include_str!("../fixtures/co2_standard_generators.slp"))
        .expect("embedded program data is valid")
}

/// Program computing the 22 kernel-basis words of the `2^22.Co₂` quotient
/// from standard generators (2 inputs, 22 outputs).
///
/// On free generators `a, b` the outputs print as `(b^2*a)^9`, `(b*a*b)^9`,
/// …, `((b^2*a)^2*b*a*b*a)^12`.
pub fn co2_kernel_words_program() -> Slp {
    Slp::from_text(include_str!("../fixtures/co2_kernel_words.slp"))
        .expect("embedded program data is valid")
}

/// Program computing the eleven presentation generators `t1, …, t11` from
/// two standard generators (2 inputs, 11 outputs).
pub fn presentation_generator_program() -> Slp {
    Slp::from_text(include_str!("../fixtures/bm_presentation_generators.slp"))
        .expect("embedded program data is valid")
}

/// Program recovering a simultaneously conjugate copy of the two standard
/// generators from the eleven presentation generators (11 inputs,
/// 2 outputs): `a' = (r^7 s)^15` and `b' = (t1 t2)^((s r)^10)` where
/// `r = t1⋯t8` and `s = t5 t9 t10 t11`.
pub fn generator_recovery_program() -> Slp {
    Slp::from_text(include_str!("../fixtures/bm_generator_recovery.slp"))
        .expect("embedded program data is valid")
}

/// The presentation relators as single-output programs on eleven
/// generators, together with the generator names.
///
/// The list contains the squares of the eleven generators, an order-3
/// relator for each edge of the Y₄₃₃ diagram, an order-2 relator for every
/// remaining pair, and the long spider relator — 67 relators in all.  A
/// generating pair satisfies the presentation exactly when every relator
/// program evaluates to the identity on its presentation generators.
pub fn presentation_relators() -> (Vec<&'static str>, Vec<Slp>) {
    let text = include_str!("../fixtures/bm_relators.txt");
    let mut lines = text.lines();
    let names: Vec<&'static str> = lines
        .next()
        .expect("relator data has a name line")
        .split_whitespace()
        .collect();
    let relators = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_word_program(l, &names).expect("embedded relator data is valid"))
        .collect();
    (names, relators)
}
