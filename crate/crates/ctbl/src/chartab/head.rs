//! Character-table heads: the class-level data of a finite group (orders,
//! centralizer orders, power maps) without any characters.

use std::collections::BTreeMap;

use num::{BigInt, Zero};

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

/// The class data of a group: element orders, centralizer orders, and power
/// maps per prime, with class 0 the identity class.
///
/// Validated invariants:
/// * `orders[0] == 1` and `centralizers[0] == size`;
/// * every centralizer order divides the group order and the class sizes
///   `size / centralizers[i]` sum to the group order (class equation);
/// * each stored power map for a prime `p` sends class `i` to a class of
///   order `orders[i] / gcd(orders[i], p)`, and `centralizers[i]` divides
///   the centralizer order of the image class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableHead {
    identifier: String,
    size: BigInt,
    orders: Vec<u64>,
    centralizers: Vec<BigInt>,
    powermaps: BTreeMap<u64, Vec<usize>>,
    names: Option<Vec<String>>,
}

impl TableHead {
    /// Builds and validates a head. Power maps and names may be added later
    /// with [`TableHead::with_powermap`] / [`TableHead::with_names`].
    pub fn new(
        identifier: impl Into<String>,
        size: BigInt,
        orders: Vec<u64>,
        centralizers: Vec<BigInt>,
    ) -> Result<TableHead> {
        let head = TableHead {
            identifier: identifier.into(),
            size,
            orders,
            centralizers,
            powermaps: BTreeMap::new(),
            names: None,
        };
        head.validate_classes()?;
        Ok(head)
    }

    fn validate_classes(&self) -> Result<()> {
        let ncls = self.orders.len();
        if ncls == 0 {
            return Err(Error::Validation("a table head needs at least one class".into()));
        }
        if self.centralizers.len() != ncls {
            return Err(Error::Validation(format!(
                "{} orders but {} centralizer orders",
                ncls,
                self.centralizers.len()
            )));
        }
        if self.orders[0] != 1 {
            return Err(Error::Validation(format!(
                "class 1 must be the identity class (got element order {})",
                self.orders[0]
            )));
        }
        if self.centralizers[0] != self.size {
            return Err(Error::Validation(
                "the identity class centralizer must be the whole group".into(),
            ));
        }
        if let Some(o) = self.orders.iter().find(|&&o| o == 0) {
            return Err(Error::Validation(format!("element order {o} is not positive")));
        }
        let mut class_sum = BigInt::zero();
        for (i, c) in self.centralizers.iter().enumerate() {
            if c.sign() != num::bigint::Sign::Plus {
                return Err(Error::Validation(format!(
                    "centralizer order of class {} is not positive",
                    i + 1
                )));
            }
            if (&self.size % c) != BigInt::zero() {
                return Err(Error::Validation(format!(
                    "centralizer order of class {} does not divide the group order",
                    i + 1
                )));
            }
            class_sum += &self.size / c;
        }
        if class_sum != self.size {
            return Err(Error::Validation(format!(
                "class sizes sum to {class_sum}, not the group order {}",
                self.size
            )));
        }
        if let Some(names) = &self.names {
            if names.len() != ncls {
                return Err(Error::Validation(format!(
                    "{} class names for {} classes",
                    names.len(),
                    ncls
                )));
            }
        }
        Ok(())
    }

    fn validate_powermap(&self, p: u64, map: &[usize]) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::Validation(format!("power-map key {p} is not prime")));
        }
        if map.len() != self.ncls() {
            return Err(Error::Validation(format!(
                "power map for {p} has {} entries for {} classes",
                map.len(),
                self.ncls()
            )));
        }
        for (i, &j) in map.iter().enumerate() {
            if j >= self.ncls() {
                return Err(Error::Validation(format!(
                    "power map for {p} sends class {} to out-of-range class {}",
                    i + 1,
                    j + 1
                )));
            }
            let expected = self.orders[i] / num::integer::gcd(self.orders[i], p);
            if self.orders[j] != expected {
                return Err(Error::Validation(format!(
                    "power map for {p} sends class {} (order {}) to class {} (order {}), expected order {}",
                    i + 1,
                    self.orders[i],
                    j + 1,
                    self.orders[j],
                    expected
                )));
            }
            if (&self.centralizers[j] % &self.centralizers[i]) != BigInt::zero() {
                return Err(Error::Validation(format!(
                    "centralizer of class {} does not divide that of its {p}-th power class {}",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// Adds (or replaces) the power map for the prime `p`, validated.
    pub fn with_powermap(mut self, p: u64, map: Vec<usize>) -> Result<TableHead> {
        self.validate_powermap(p, &map)?;
        self.powermaps.insert(p, map);
        Ok(self)
    }

    /// Attaches class names (one per class).
    pub fn with_names(mut self, names: Vec<String>) -> Result<TableHead> {
        self.names = Some(names);
        self.validate_classes()?;
        Ok(self)
    }

    pub fn identifier(&self) -> &str {
        &self.identifier
    }

    /// The group order.
    pub fn size(&self) -> &BigInt {
        &self.size
    }

    /// Number of conjugacy classes.
    pub fn ncls(&self) -> usize {
        self.orders.len()
    }

    /// Element orders per class.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Element order of class `i`.
    pub fn order_of(&self, i: usize) -> u64 {
        self.orders[i]
    }

    /// Centralizer orders per class.
    pub fn centralizers(&self) -> &[BigInt] {
        &self.centralizers
    }

    /// Centralizer order of class `i`.
    pub fn centralizer_of(&self, i: usize) -> &BigInt {
        &self.centralizers[i]
    }

    /// Class sizes `size / centralizers[i]`.
    pub fn class_sizes(&self) -> Vec<BigInt> {
        self.centralizers.iter().map(|c| &self.size / c).collect()
    }

    /// All stored power maps, keyed by prime.
    pub fn powermaps(&self) -> &BTreeMap<u64, Vec<usize>> {
        &self.powermaps
    }

    /// The power map for the prime `p`, if stored.
    pub fn powermap(&self, p: u64) -> Option<&[usize]> {
        self.powermaps.get(&p).map(|m| m.as_slice())
    }

    /// Class names, if attached.
    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// The name of class `i`: the attached name, or `"<i+1>"`.
    pub fn name_of(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => format!("{}", i + 1),
        }
    }

    /// Largest element order.
    pub fn max_order(&self) -> u64 {
        *self.orders.iter().max().expect("nonempty")
    }

    /// The primes for which a finalized head must carry power maps: all
    /// primes up to the maximal element order.
    pub fn required_primes(&self) -> Vec<u64> {
        (2..=self.max_order()).filter(|&p| is_prime(p)).collect()
    }

    /// True iff power maps are present for every prime up to the maximal
    /// element order.
    pub fn has_complete_powermaps(&self) -> bool {
        self.required_primes().iter().all(|p| self.powermaps.contains_key(p))
    }

    /// Conventional class names in table order: element order plus a letter
    /// (`1a`, `2a`, `2b`, …), letters advancing within equal orders.
    pub fn standard_names(&self) -> Vec<String> {
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        self.orders
            .iter()
            .map(|&o| {
                let n = counts.entry(o).or_insert(0);
                let label = letter_label(*n);
                *n += 1;
                format!("{o}{label}")
            })
            .collect()
    }

    /// The class of `g^m` for `g` in class `i`, computed from `m` reduced
    /// modulo the element order, its prime factorization, and the stored
    /// power maps.
    pub fn class_of_power(&self, i: usize, m: i64) -> Result<usize> {
        if i >= self.ncls() {
            return Err(Error::Index(format!(
                "class {} out of range ({} classes)",
                i + 1,
                self.ncls()
            )));
        }
        let n = self.orders[i];
        let r = m.rem_euclid(n as i64) as u64;
        if r == 0 {
            return Ok(0);
        }
        let mut class = i;
        for (p, e) in factorize(r) {
            let map = self.powermap(p).ok_or_else(|| {
                Error::IncompleteHead(format!(
                    "power map for prime {p} is missing (needed for exponent {m} on class {})",
                    i + 1
                ))
            })?;
            for _ in 0..e {
                class = map[class];
            }
        }
        Ok(class)
    }
}

/// 0 → "a", 1 → "b", …, 25 → "z", 26 → "aa", …
fn letter_label(mut n: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (n % 26) as u8);
        n /= 26;
        if n == 0 {
            break;
        }
        n -= 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}
