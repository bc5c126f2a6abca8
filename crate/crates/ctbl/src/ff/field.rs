//! Scalar arithmetic in GF(p^k) on packed element codes.
//!
//! An element Σ aᵢ·xⁱ (aᵢ ∈ [0,p), x the Conway-polynomial root) is coded as
//! the base-p integer Σ aᵢ·pⁱ.  Code p is therefore x itself, and codes < p
//! are exactly the prime subfield, with the code equal to the residue — so
//! prime fields (k = 1) need no packing at all, and lifting GF(p) into an
//! extension is the identity on codes.

use super::conway::conway_polynomial;
use super::FieldSpec;
use crate::error::{Error, Result};

/// Arithmetic context for one field; cheap to construct and copy.
#[derive(Clone, Copy)]
pub struct Fq {
    pub p: u64,
    pub k: u32,
    /// Ascending coefficients of the defining polynomial (len k+1); None for k = 1.
    conway: Option<&'static [u64]>,
}

impl Fq {
    pub fn new(spec: FieldSpec) -> Fq {
        let conway = if spec.k == 1 {
            None
        } else {
            Some(conway_polynomial(spec.p, spec.k).expect("validated FieldSpec"))
        };
        Fq { p: spec.p, k: spec.k, conway }
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// Checks that a code is in range (any integer < p^k is a valid base-p
    /// packing).
    pub fn valid_code(&self, code: u64) -> bool {
        code < self.order()
    }

    /// Embeds a signed integer into the prime subfield.
    pub fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn unpack(&self, code: u64) -> Vec<u64> {
        let mut digits = vec![0u64; self.k as usize];
        let mut c = code;
        for d in digits.iter_mut() {
            *d = c % self.p;
            c /= self.p;
        }
        digits
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        let mut code = 0u64;
        for &d in digits.iter().rev() {
            code = code * self.p + d % self.p;
        }
        code
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.unpack(a), self.unpack(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let digits: Vec<u64> = self.unpack(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack(&digits)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return a * b % self.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let (da, db) = (self.unpack(a), self.unpack(b));
        let kk = self.k as usize;
        // Schoolbook product, then reduction by the monic defining polynomial.
        let mut prod = vec![0u64; 2 * kk - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let f = self.conway.expect("k > 1 has a defining polynomial");
        for i in (kk..prod.len()).rev() {
            let lead = prod[i];
            if lead != 0 {
                prod[i] = 0;
                for j in 0..kk {
                    prod[i - kk + j] = (prod[i - kk + j] + (self.p - f[j]) * lead) % self.p;
                }
            }
        }
        self.pack(&prod[..kk])
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut sq = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(sq, sq);
            }
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero("inverse of 0 in a finite field".into()));
        }
        Ok(self.pow(a, self.order() - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fq(p: u64, k: u32) -> Fq {
        Fq::new(FieldSpec::new(p, k).unwrap())
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = fq(5, 1);
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.inv(3).unwrap(), 2);
        assert_eq!(f.from_int(-1), 4);
    }

    #[test]
    fn gf4_is_the_field_with_four_elements() {
        // GF(4) with x² = x + 1: codes 0,1,2,3 = 0,1,x,x+1.
        let f = fq(2, 2);
        assert_eq!(f.mul(2, 2), 3); // x² = x+1
        assert_eq!(f.mul(2, 3), 1); // x(x+1) = x²+x = 1
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.inv(2).unwrap(), 3);
        // x is primitive: powers cycle through all nonzero elements.
        assert_eq!(f.pow(2, 3), 1);
        assert_ne!(f.pow(2, 1), 1);
    }

    #[test]
    fn every_field_has_working_inverses() {
        for &(p, k) in &[(2u64, 1u32), (2, 4), (3, 2), (5, 2), (7, 3), (3, 5)] {
            let f = fq(p, k);
            let q = f.order();
            // The Conway generator (x for k > 1, the distinguished primitive
            // root for k = 1) must have multiplicative order q−1.
            let gen = if k == 1 {
                (p - crate::ff::conway_polynomial(p, 1).unwrap()[0]) % p
            } else {
                p
            };
            assert_eq!(f.pow(gen, q - 1), 1, "GF({p}^{k})");
            let mut seen = std::collections::HashSet::new();
            let mut v = 1u64;
            for _ in 0..q - 1 {
                seen.insert(v);
                v = f.mul(v, gen);
            }
            assert_eq!(seen.len() as u64, q - 1, "generator spans GF({p}^{k})*");
            for a in 1..q.min(200) {
                if !f.valid_code(a) {
                    continue;
                }
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "a={a} in GF({p}^{k})");
            }
        }
    }
}
