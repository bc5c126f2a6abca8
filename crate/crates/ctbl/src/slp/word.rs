//! Freely reduced words in a free group, with canonical printing.
//!
//! A [`FreeWord`] stores an alternating syllable list `(generator, exponent)`
//! with nonzero exponents and distinct adjacent generators.  Words support
//! the full group-element contract, so straight-line programs can be
//! evaluated symbolically; this is how programs are checked against word
//! lists and how relators are expanded.
//!
//! The printer produces a compact expression using `*` and `^`, detecting
//! repeated blocks such as `(b^2*a)^9`.  Parsing such expressions back is
//! handled by [`crate::slp::parse_word_program`]; printing followed by
//! parsing is the identity on reduced words.

use crate::slp::GroupElement;
use crate::{Error, Result};

/// A freely reduced word in the free group on generators `0, 1, 2, …`.
///
/// The identity is the empty word.  Equality, hashing and ordering are
/// structural on the reduced syllable list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    /// Reduced syllables: no zero exponents, adjacent generators distinct.
    syllables: Vec<(usize, i64)>,
}

impl FreeWord {
    /// The empty word.
    pub fn identity() -> FreeWord {
        FreeWord { syllables: Vec::new() }
    }

    /// The single generator `gen` (0-based).
    pub fn generator(gen: usize) -> FreeWord {
        FreeWord { syllables: vec![(gen, 1)] }
    }

    /// Builds a word from an arbitrary syllable list, reducing it.
    pub fn from_syllables(syllables: impl IntoIterator<Item = (usize, i64)>) -> FreeWord {
        let mut w = FreeWord::identity();
        for (g, e) in syllables {
            w.push_syllable(g, e);
        }
        w
    }

    /// The reduced syllable list.
    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    /// True for the empty word.
    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters (sum of |exponent| over syllables).
    pub fn letter_len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Largest generator index mentioned, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    fn push_syllable(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(&mut (lg, ref mut le)) if lg == g => {
                *le += e;
                if *le == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    /// Group product `self · rhs` (concatenate and reduce).
    pub fn mul_word(&self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &(g, e) in &rhs.syllables {
            out.push_syllable(g, e);
        }
        out
    }

    /// The inverse word.
    pub fn inverse_word(&self) -> FreeWord {
        FreeWord {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// The power `self^e` (negative exponents allowed).
    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse_word() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul_word(&base);
        }
        out
    }

    /// Substitutes group elements for the generators: the image of the word
    /// under `generator i ↦ gens[i]`.
    ///
    /// All elements must belong to the same group; `gens` must cover every
    /// generator mentioned.  For the empty word the identity of the ambient
    /// group is returned, which requires at least one element in `gens`.
    pub fn apply<G: GroupElement>(&self, gens: &[G]) -> Result<G> {
        let first = gens.first().ok_or_else(|| {
            Error::Arity("word substitution needs at least one generator image".into())
        })?;
        let mut acc = first.identity_like();
        for &(g, e) in &self.syllables {
            let gen = gens.get(g).ok_or_else(|| Error::Index(format!("word mentions generator {} but only {} given", g + 1, gens.len())))?;
            acc = acc.mul(&crate::slp::element_power(gen, e)?)?;
        }
        Ok(acc)
    }

    /// Renders the word over the given generator names.
    ///
    /// The empty word prints as `1`.  Maximal repeated blocks are shown as
    /// parenthesised powers, e.g. `(b^2*a)^9` or `b*(b*a)^2*b^2*a`.
    pub fn word_string(&self, names: &[impl AsRef<str>]) -> Result<String> {
        if let Some(max) = self.max_generator() {
            if max >= names.len() {
                return Err(Error::Index(format!(
                        "word mentions generator {} but only {} names given",
                        max + 1,
                        names.len()
                    )));
            }
        }
        let letters = self.letters();
        Ok(render_letters(&letters, names))
    }

    /// Expands to one signed letter per group element: `(gen, +1)` or
    /// `(gen, -1)`.
    fn letters(&self) -> Vec<(usize, i8)> {
        let mut out = Vec::with_capacity(self.letter_len());
        for &(g, e) in &self.syllables {
            let sign = if e < 0 { -1 } else { 1 };
            for _ in 0..e.unsigned_abs() {
                out.push((g, sign));
            }
        }
        out
    }
}

impl std::fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // Debug output uses x1, x2, … so words are readable without names.
        let n = self.max_generator().map_or(0, |m| m + 1);
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        match self.word_string(&names) {
            Ok(s) => write!(f, "{s}"),
            Err(_) => write!(f, "FreeWord({:?})", self.syllables),
        }
    }
}

impl GroupElement for FreeWord {
    fn identity_like(&self) -> FreeWord {
        FreeWord::identity()
    }

    fn mul(&self, rhs: &FreeWord) -> Result<FreeWord> {
        Ok(self.mul_word(rhs))
    }

    fn inverse(&self) -> Result<FreeWord> {
        Ok(self.inverse_word())
    }
}

/// Renders a letter sequence, bracketing the best repeated block.
///
/// The block maximises covered letters (`unit length × repeat count`), with
/// ties broken towards the leftmost start and then the shortest unit.  Units
/// consisting of a single repeated letter are left to plain syllable powers.
/// Only the unit itself is rendered recursively; the flanks are printed as
/// plain syllables.
fn render_letters(letters: &[(usize, i8)], names: &[impl AsRef<str>]) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    let Some((pos, ulen, k)) = best_repeat(letters) else {
        return render_plain(letters, names);
    };
    let mut parts = Vec::new();
    if pos > 0 {
        parts.push(render_plain(&letters[..pos], names));
    }
    let unit = render_letters(&letters[pos..pos + ulen], names);
    parts.push(format!("({unit})^{k}"));
    let end = pos + ulen * k;
    if end < letters.len() {
        parts.push(render_plain(&letters[end..], names));
    }
    parts.join("*")
}

/// Finds the repeated block `(start, unit length, count)` covering the most
/// letters, requiring `count ≥ 2` and at least two distinct letters in the
/// unit.  Returns `None` when no such block exists.
fn best_repeat(letters: &[(usize, i8)]) -> Option<(usize, usize, usize)> {
    let n = letters.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for ulen in 2..=n / 2 {
        for pos in 0..=n - 2 * ulen {
            let unit = &letters[pos..pos + ulen];
            if unit.iter().all(|&l| l == unit[0]) {
                continue;
            }
            let mut k = 1;
            while pos + (k + 1) * ulen <= n
                && letters[pos + k * ulen..pos + (k + 1) * ulen] == *unit
            {
                k += 1;
            }
            if k < 2 {
                continue;
            }
            let cover = ulen * k;
            let better = match best {
                None => true,
                Some((bpos, bulen, bk)) => {
                    let bcover = bulen * bk;
                    cover > bcover || (cover == bcover && (pos, ulen) < (bpos, bulen))
                }
            };
            if better {
                best = Some((pos, ulen, k));
            }
        }
    }
    best
}

/// Renders letters as plain syllables joined by `*`, e.g. `b^2*a*b^-1`.
fn render_plain(letters: &[(usize, i8)], names: &[impl AsRef<str>]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let (g, s) = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == (g, s) {
            run += 1;
        }
        let name = names[g].as_ref();
        let exp = s as i64 * run as i64;
        if exp == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{exp}"));
        }
        i += run;
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(sylls: &[(usize, i64)]) -> FreeWord {
        FreeWord::from_syllables(sylls.iter().copied())
    }

    #[test]
    fn reduction_and_group_laws() {
        let a = FreeWord::generator(0);
        let b = FreeWord::generator(1);
        // a · a⁻¹ = 1
        assert!(a.mul_word(&a.inverse_word()).is_identity());
        // (ab)⁻¹ = b⁻¹a⁻¹
        let ab = a.mul_word(&b);
        assert_eq!(ab.inverse_word(), b.inverse_word().mul_word(&a.inverse_word()));
        // b a⁻¹ · a b = b²
        let left = b.mul_word(&a.inverse_word());
        let prod = left.mul_word(&ab);
        assert_eq!(prod, w(&[(1, 2)]));
        // Syllable merging across several ops.
        assert_eq!(a.pow(3).mul_word(&a.pow(-5)), w(&[(0, -2)]));
        assert!(w(&[(0, 2), (0, -2)]).is_identity());
    }

    #[test]
    fn printing_plain_words() {
        let names = ["a", "b"];
        assert_eq!(FreeWord::identity().word_string(&names).unwrap(), "1");
        assert_eq!(w(&[(0, 1)]).word_string(&names).unwrap(), "a");
        assert_eq!(w(&[(0, -1)]).word_string(&names).unwrap(), "a^-1");
        assert_eq!(w(&[(1, 12)]).word_string(&names).unwrap(), "b^12");
        assert_eq!(w(&[(0, 2), (1, -3)]).word_string(&names).unwrap(), "a^2*b^-3");
        assert_eq!(
            w(&[(1, 2), (0, 1), (1, 3), (0, 1)]).word_string(&names).unwrap(),
            "b^2*a*b^3*a"
        );
    }

    #[test]
    fn printing_detects_repeated_blocks() {
        let names = ["a", "b"];
        let a = FreeWord::generator(0);
        let b = FreeWord::generator(1);
        let ba = b.mul_word(&a);
        // (b²a)⁹
        let b2a = b.pow(2).mul_word(&a);
        assert_eq!(b2a.pow(9).word_string(&names).unwrap(), "(b^2*a)^9");
        // (bab)⁹
        let bab = ba.mul_word(&b);
        assert_eq!(bab.pow(9).word_string(&names).unwrap(), "(b*a*b)^9");
        // b(ba)²b²a — repeat flanked on both sides
        let word = b.mul_word(&ba.pow(2)).mul_word(&b.pow(2)).mul_word(&a);
        assert_eq!(word.word_string(&names).unwrap(), "b*(b*a)^2*b^2*a");
        // ((b²a)²baba)¹² — flank after the block stays plain
        let unit = b2a.pow(2).mul_word(&ba.pow(2));
        assert_eq!(
            unit.pow(12).word_string(&names).unwrap(),
            "((b^2*a)^2*b*a*b*a)^12"
        );
    }

    #[test]
    fn printing_rejects_missing_names() {
        let word = FreeWord::generator(2);
        assert!(matches!(
            word.word_string(&["a", "b"]),
            Err(Error::Index(_))
        ));
    }

    #[test]
    fn apply_substitutes_generators() {
        use crate::ff::{FFMatrix, FieldSpec};
        let spec = FieldSpec::prime(5).unwrap();
        let m1 = FFMatrix::from_integers(spec, 2, 2, &[1, 1, 0, 1]).unwrap();
        let m2 = FFMatrix::from_integers(spec, 2, 2, &[1, 0, 1, 1]).unwrap();
        // word = x1 x2 x1⁻¹
        let word = w(&[(0, 1), (1, 1), (0, -1)]);
        let img = word.apply(&[m1.clone(), m2.clone()]).unwrap();
        let expect = m1
            .multiply(&m2)
            .unwrap()
            .multiply(&m1.inverse().unwrap())
            .unwrap();
        assert_eq!(img, expect);
        // Empty word → identity matrix.
        let e = FreeWord::identity().apply(&[m1]).unwrap();
        assert!(e.is_identity());
    }
}
