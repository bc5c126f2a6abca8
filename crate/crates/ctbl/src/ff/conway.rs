//! Conway polynomials for the supported fields GF(p^k), p ∈ {2,3,5,7}, k ≤ 12.
//!
//! The table pins down one defining polynomial per field, which fixes the
//! polynomial basis, the meaning of packed element codes, and — through the
//! standard compatibility condition between a field and its subfields — the
//! root-of-unity embedding that makes Brauer character values reproducible
//! across systems (GAP and MAGMA use the same convention).
//!
//! C(p,n) is the lexicographically least "word" (c_{n−1}, …, c_0) such that
//! f = x^n + Σᵢ (−1)^{n−i} cᵢ xⁱ is primitive over GF(p) and compatible with
//! C(p,m) for every proper divisor m of n, i.e. C(p,m)(x^{(pⁿ−1)/(pᵐ−1)}) ≡ 0
//! mod f.  The table below was computed from that definition; the ignored
//! test `regenerate_table_from_definition` reruns the search and asserts
//! equality, and the fast test `table_entries_are_primitive_and_compatible`
//! re-verifies every entry's defining properties on every test run.

/// Coefficients (ascending, including the leading 1) of C(p, n).
const TABLE: &[(u64, u32, &[u64])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (3, 9, &[1, 1, 2, 2, 0, 0, 0, 0, 0, 1]),
    (3, 10, &[2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1]),
    (3, 11, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 12, &[2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (5, 5, &[3, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 0, 1, 4, 1, 0, 1]),
    (5, 7, &[3, 3, 0, 0, 0, 0, 0, 1]),
    (5, 8, &[2, 4, 3, 0, 1, 0, 0, 0, 1]),
    (5, 9, &[3, 1, 0, 2, 0, 0, 0, 0, 0, 1]),
    (5, 10, &[2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1]),
    (5, 11, &[3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 12, &[2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (7, 4, &[3, 4, 5, 0, 1]),
    (7, 5, &[4, 1, 0, 0, 0, 1]),
    (7, 6, &[3, 6, 4, 5, 1, 0, 1]),
    (7, 7, &[4, 6, 0, 0, 0, 0, 0, 1]),
    (7, 8, &[3, 2, 6, 4, 0, 0, 0, 0, 1]),
    (7, 9, &[4, 6, 0, 1, 6, 0, 0, 0, 0, 1]),
    (7, 10, &[3, 3, 2, 1, 4, 1, 1, 0, 0, 0, 1]),
    (7, 11, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 12, &[3, 0, 5, 0, 4, 2, 3, 5, 2, 0, 0, 0, 1]),
];

pub const SUPPORTED_PRIMES: &[u64] = &[2, 3, 5, 7];
pub const MAX_EXTENSION_DEGREE: u32 = 12;

/// Ascending coefficients (length k+1, leading 1) of the defining polynomial
/// of GF(p^k), or None for unsupported (p, k).
pub fn conway_polynomial(p: u64, k: u32) -> Option<&'static [u64]> {
    TABLE
        .iter()
        .find(|&&(tp, tk, _)| tp == p && tk == k)
        .map(|&(_, _, coeffs)| coeffs)
}
