//! Brauer character values: lifting eigenvalues of a p-regular matrix to
//! complex roots of unity through the Conway-polynomial embedding.

use super::{conway::conway_polynomial, field::Fq, FFMatrix, FieldSpec};
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use num::{BigInt, FromPrimitive};

/// Default bound on the element order (the paper-scale values never exceed
/// two-digit orders; the bound guards against runaway BSGS work).
pub const DEFAULT_ORDER_BOUND: u64 = 120;

/// The Brauer character value Σᵢ mᵢ·E(n)^i of a p-regular matrix m of order
/// n, where mᵢ is the geometric multiplicity of ωⁱ as an eigenvalue over
/// GF(p^d), d = ord_n(p), and ω = x^((p^d−1)/n) is the Conway-standard
/// primitive n-th root.  Uses the default order bound.
pub fn brauer_character_value(m: &FFMatrix) -> Result<Cyclotomic> {
    brauer_character_value_bounded(m, DEFAULT_ORDER_BOUND)
}

/// As [`brauer_character_value`], with an explicit bound on the element order.
pub fn brauer_character_value_bounded(m: &FFMatrix, order_bound: u64) -> Result<Cyclotomic> {
    let spec = m.field();
    if spec.k() != 1 {
        return Err(Error::UnsupportedField(
            "Brauer values are computed from prime-field matrices".into(),
        ));
    }
    let p = spec.p();
    let n = m.element_order(order_bound)?;
    if n % p == 0 {
        return Err(Error::PSingular(format!(
            "element order {n} is divisible by the characteristic {p}"
        )));
    }
    let dim = m.nrows();
    if n == 1 {
        return Ok(Cyclotomic::from_integer(dim as i64));
    }
    // d = multiplicative order of p mod n: the splitting field degree.
    let mut d = 1u32;
    let mut pw = p % n;
    while pw != 1 {
        pw = pw * (p % n) % n;
        d += 1;
    }
    let big = FieldSpec::new(p, d).map_err(|_| {
        Error::UnsupportedField(format!(
            "splitting field GF({p}^{d}) for order {n} exceeds the supported degrees"
        ))
    })?;
    let fq = Fq::new(big);
    // The Conway generator of GF(p^d)*: x itself for d > 1; for d = 1 the
    // distinguished primitive root −c₀ of the degree-1 Conway polynomial.
    let generator = if d == 1 {
        let c = conway_polynomial(p, 1).expect("supported prime")[0];
        (p - c) % p
    } else {
        p
    };
    let omega = fq.pow(generator, (big.order() - 1) / n);
    let lifted = m.embed(big)?;
    let mut value = Cyclotomic::zero();
    let mut total = 0usize;
    for i in 0..n {
        let lam = fq.pow(omega, i);
        let mut shifted = lifted.clone();
        for r in 0..dim {
            let cur = shifted.get(r, r);
            shifted.set(r, r, fq.sub(cur, lam)).expect("valid code");
        }
        let mult = dim - shifted.rank();
        total += mult;
        if mult > 0 {
            let root = Cyclotomic::root_of_unity(n, i as i64)?;
            let coeff = Rational::from_integer(BigInt::from_usize(mult).expect("small"));
            value = value.add(&root.scale(&coeff));
        }
    }
    debug_assert_eq!(total, dim, "p-regular matrices are diagonalizable over the splitting field");
    Ok(value)
}
