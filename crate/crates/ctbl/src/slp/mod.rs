//! Straight-line programs over arbitrary group-element backends.
//!
//! A straight-line program ([`Slp`]) is a compact recipe for computing words
//! in given generators: each line defines one new slot as a product of
//! powers of earlier slots, and a final list of product expressions selects
//! the outputs.  The same program can be evaluated on matrices over
//! different finite fields, on permutations, or symbolically on
//! [`FreeWord`]s — anything implementing [`GroupElement`].
//!
//! Programs support output restriction and composition, words can be parsed
//! into single-output programs ([`parse_word_program`]), and
//! [`word_search`] enumerates positive words in length-then-lexicographic
//! order to find elements with a desired property.
//!
//! Only the append form of program lines is supported: every line creates a
//! new slot, and slots are never overwritten.  Program files that need an
//! overwrite semantics must be rewritten in append form first.

mod backends;
mod word;

pub use word::FreeWord;

use crate::{Error, Result};

/// What a backend must provide so straight-line programs can run on it.
///
/// Implementations must satisfy the group axioms; `identity_like` returns
/// the identity of the group the element belongs to (same degree, field and
/// dimension for matrices).
pub trait GroupElement: Clone + PartialEq {
    /// The identity element of the same group as `self`.
    fn identity_like(&self) -> Self;

    /// Group product `self · rhs`.
    fn mul(&self, rhs: &Self) -> Result<Self>;

    /// Group inverse.
    fn inverse(&self) -> Result<Self>;
}

/// A group element whose multiplicative order can be computed.
pub trait OrderedElement: GroupElement {
    /// The multiplicative order of the element.
    fn order(&self) -> Result<u64>;
}

/// Raises a group element to an integer power (binary powering; negative
/// exponents invert first, exponent zero yields the identity).
pub fn element_power<G: GroupElement>(g: &G, e: i64) -> Result<G> {
    if e == 0 {
        return Ok(g.identity_like());
    }
    let mut base = if e < 0 { g.inverse()? } else { g.clone() };
    let mut n = e.unsigned_abs();
    let mut acc: Option<G> = None;
    while n > 0 {
        if n & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => a.mul(&base)?,
            });
        }
        n >>= 1;
        if n > 0 {
            base = base.mul(&base)?;
        }
    }
    Ok(acc.expect("nonzero exponent"))
}

/// A product expression: factors `(slot, exponent)` multiplied left to
/// right.  Slots are 1-based; slots `1..=inputs` are the program inputs.
pub type ProductExpr = Vec<(usize, i64)>;

/// A straight-line program.
///
/// Line `j` (1-based) defines slot `inputs + j` as the product of earlier
/// slots raised to integer exponents.  The outputs are separate product
/// expressions over all defined slots.  Programs are immutable; evaluation
/// is pure and only computes slots in the dependency cone of the outputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Slp {
    inputs: usize,
    lines: Vec<ProductExpr>,
    outputs: Vec<ProductExpr>,
}

impl Slp {
    /// Builds and validates a program.
    ///
    /// Every line must be a nonempty product whose slot references lie in
    /// `[1, inputs + line_index − 1]`; every output must be a nonempty
    /// product over defined slots.  Exponent zero is allowed and denotes an
    /// identity factor.
    pub fn new(
        inputs: usize,
        lines: Vec<ProductExpr>,
        outputs: Vec<ProductExpr>,
    ) -> Result<Slp> {
        for (j, line) in lines.iter().enumerate() {
            if line.is_empty() {
                return Err(Error::Validation(format!("program line {} is an empty product", j + 1)));
            }
            for &(slot, _) in line {
                if slot == 0 || slot > inputs + j {
                    return Err(Error::Validation(format!(
                            "program line {} references slot {slot}, but only slots 1..={} are defined there",
                            j + 1,
                            inputs + j
                        )));
                }
            }
        }
        let nslots = inputs + lines.len();
        for (j, out) in outputs.iter().enumerate() {
            if out.is_empty() {
                return Err(Error::Validation(format!("output {} is an empty product", j + 1)));
            }
            for &(slot, _) in out {
                if slot == 0 || slot > nslots {
                    return Err(Error::Validation(format!(
                            "output {} references slot {slot}, but only slots 1..={nslots} are defined",
                            j + 1
                        )));
                }
            }
        }
        Ok(Slp { inputs, lines, outputs })
    }

    /// Number of input slots.
    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// The program lines.
    pub fn lines(&self) -> &[ProductExpr] {
        &self.lines
    }

    /// The output expressions.
    pub fn outputs(&self) -> &[ProductExpr] {
        &self.outputs
    }

    /// Marks the slots needed to compute the outputs (dependency cone).
    fn needed_slots(&self) -> Vec<bool> {
        let nslots = self.inputs + self.lines.len();
        let mut needed = vec![false; nslots + 1];
        let mut stack: Vec<usize> = Vec::new();
        for out in &self.outputs {
            for &(slot, _) in out {
                if !needed[slot] {
                    needed[slot] = true;
                    stack.push(slot);
                }
            }
        }
        while let Some(slot) = stack.pop() {
            if slot > self.inputs {
                for &(dep, _) in &self.lines[slot - self.inputs - 1] {
                    if !needed[dep] {
                        needed[dep] = true;
                        stack.push(dep);
                    }
                }
            }
        }
        needed
    }

    /// Evaluates the program on the given generators.
    ///
    /// Slots outside the dependency cone of the outputs are never computed,
    /// so restricted programs do no superfluous work.
    pub fn evaluate<G: GroupElement>(&self, gens: &[G]) -> Result<Vec<G>> {
        if gens.len() != self.inputs {
            return Err(Error::Arity(format!(
                "program expects {} generators, found {}",
                self.inputs,
                gens.len()
            )));
        }
        let needed = self.needed_slots();
        let nslots = self.inputs + self.lines.len();
        let mut slots: Vec<Option<G>> = vec![None; nslots + 1];
        for (i, g) in gens.iter().enumerate() {
            if needed[i + 1] {
                slots[i + 1] = Some(g.clone());
            }
        }
        for (j, line) in self.lines.iter().enumerate() {
            let slot = self.inputs + j + 1;
            if needed[slot] {
                slots[slot] = Some(eval_product(line, &slots)?);
            }
        }
        self.outputs.iter().map(|out| eval_product(out, &slots)).collect()
    }

    /// Returns a program computing only the outputs at the given 1-based
    /// positions, in the order listed.
    ///
    /// The result evaluates to exactly the selected positions of the full
    /// program's output.
    pub fn restrict_outputs(&self, positions: &[usize]) -> Result<Slp> {
        let mut outputs = Vec::with_capacity(positions.len());
        for &pos in positions {
            if pos == 0 || pos > self.outputs.len() {
                return Err(Error::Index(format!(
                        "output position {pos} out of range 1..={}",
                        self.outputs.len()
                    )));
            }
            outputs.push(self.outputs[pos - 1].clone());
        }
        Ok(Slp { inputs: self.inputs, lines: self.lines.clone(), outputs })
    }

    /// Composition: the returned program first runs `inner`, then feeds its
    /// outputs to `outer` as inputs.
    ///
    /// For all generator lists `g`: `compose(outer, inner).evaluate(g) =
    /// outer.evaluate(inner.evaluate(g))`.  Requires `outer.inputs()` to
    /// equal the number of outputs of `inner`.
    pub fn compose(outer: &Slp, inner: &Slp) -> Result<Slp> {
        if outer.inputs != inner.outputs.len() {
            return Err(Error::Arity(format!(
                "outer program expects {} inputs, inner program has {} outputs",
                outer.inputs,
                inner.outputs.len()
            )));
        }
        let mut lines = inner.lines.clone();
        // Materialise each inner output as a slot of its own.
        let first_out_slot = inner.inputs + inner.lines.len() + 1;
        for out in &inner.outputs {
            lines.push(out.clone());
        }
        // Outer slots: input s ↦ materialised output s; line k ↦ appended line k.
        let outer_base = inner.inputs + lines.len();
        let remap = |slot: usize| -> usize {
            if slot <= outer.inputs {
                first_out_slot + slot - 1
            } else {
                outer_base + (slot - outer.inputs)
            }
        };
        for line in &outer.lines {
            lines.push(line.iter().map(|&(s, e)| (remap(s), e)).collect());
        }
        let outputs = outer
            .outputs
            .iter()
            .map(|out| out.iter().map(|&(s, e)| (remap(s), e)).collect())
            .collect();
        Slp::new(inner.inputs, lines, outputs)
    }

    /// Serialises the program in the text format accepted by
    /// [`Slp::from_text`].  Reading the result back yields an identical
    /// program, and the encoding of a parsed file is byte-identical to a
    /// canonically formatted original.
    pub fn to_text(&self) -> String {
        let mut s = format!("inputs {}\n", self.inputs);
        for line in &self.lines {
            s.push_str("line");
            for &(slot, e) in line {
                s.push_str(&format!(" {slot} {e}"));
            }
            s.push('\n');
        }
        s.push_str("outputs");
        let rendered: Vec<String> = self
            .outputs
            .iter()
            .map(|out| {
                out.iter()
                    .map(|&(slot, e)| format!("{slot} {e}"))
                    .collect::<Vec<_>>()
                    .join(" , ")
            })
            .collect();
        if !rendered.is_empty() {
            s.push(' ');
            s.push_str(&rendered.join(" ; "));
        }
        s.push('\n');
        s
    }

    /// Parses the program text format:
    ///
    /// ```text
    /// inputs <k>
    /// line <slot> <exp> [<slot> <exp> …]
    /// …
    /// outputs <slot> <exp> [, <slot> <exp> …] ; <…> ; …
    /// ```
    ///
    /// `;` separates output expressions, `,` separates factors within one.
    /// Parse errors carry 1-based line numbers.
    pub fn from_text(text: &str) -> Result<Slp> {
        let mut inputs: Option<usize> = None;
        let mut lines: Vec<ProductExpr> = Vec::new();
        let mut outputs: Option<Vec<ProductExpr>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let err = |msg: String| Error::Parse { line: lineno, msg };
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let keyword = tokens.next().expect("nonempty line");
            let rest: Vec<&str> = tokens.collect();
            match keyword {
                "inputs" => {
                    if inputs.is_some() {
                        return Err(err("duplicate 'inputs' line".into()));
                    }
                    if rest.len() != 1 {
                        return Err(err("expected 'inputs <count>'".into()));
                    }
                    let k = rest[0]
                        .parse::<usize>()
                        .map_err(|_| err(format!("invalid input count '{}'", rest[0])))?;
                    inputs = Some(k);
                }
                "line" => {
                    if inputs.is_none() {
                        return Err(err("'line' before 'inputs'".into()));
                    }
                    if outputs.is_some() {
                        return Err(err("'line' after 'outputs'".into()));
                    }
                    lines.push(parse_pairs(&rest, lineno)?);
                }
                "outputs" => {
                    if inputs.is_none() {
                        return Err(err("'outputs' before 'inputs'".into()));
                    }
                    if outputs.is_some() {
                        return Err(err("duplicate 'outputs' line".into()));
                    }
                    let mut outs = Vec::new();
                    for group in split_on(&rest, ";") {
                        if group.is_empty() {
                            return Err(err("empty output expression".into()));
                        }
                        let mut expr = Vec::new();
                        for pair in split_on(&group, ",") {
                            expr.extend(parse_pairs(&pair, lineno)?);
                        }
                        outs.push(expr);
                    }
                    outputs = Some(outs);
                }
                other => {
                    return Err(err(format!(
                        "expected 'inputs', 'line' or 'outputs', found '{other}'"
                    )));
                }
            }
        }
        let nlines = text.lines().count().max(1);
        let inputs = inputs.ok_or(Error::Parse {
            line: nlines,
            msg: "missing 'inputs' line".into(),
        })?;
        let outputs = outputs.ok_or(Error::Parse {
            line: nlines,
            msg: "missing 'outputs' line".into(),
        })?;
        Slp::new(inputs, lines, outputs)
    }
}

/// Splits a token list on a separator token, keeping the groups.
fn split_on<'a>(tokens: &[&'a str], sep: &str) -> Vec<Vec<&'a str>> {
    let mut groups = vec![Vec::new()];
    for &t in tokens {
        if t == sep {
            groups.push(Vec::new());
        } else {
            groups.last_mut().expect("nonempty").push(t);
        }
    }
    groups
}

/// Parses an even-length token list of alternating slots and exponents.
fn parse_pairs(tokens: &[&str], lineno: usize) -> Result<ProductExpr> {
    let err = |msg: String| Error::Parse { line: lineno, msg };
    if tokens.is_empty() || tokens.len() % 2 != 0 {
        return Err(err(format!(
            "expected an even number of integers (slot/exponent pairs), found {}",
            tokens.len()
        )));
    }
    let mut expr = Vec::with_capacity(tokens.len() / 2);
    for chunk in tokens.chunks(2) {
        let slot = chunk[0]
            .parse::<usize>()
            .map_err(|_| err(format!("invalid slot '{}'", chunk[0])))?;
        let e = chunk[1]
            .parse::<i64>()
            .map_err(|_| err(format!("invalid exponent '{}'", chunk[1])))?;
        expr.push((slot, e));
    }
    Ok(expr)
}

/// Evaluates one product expression over the computed slots.
fn eval_product<G: GroupElement>(expr: &[(usize, i64)], slots: &[Option<G>]) -> Result<G> {
    let mut acc: Option<G> = None;
    for &(slot, e) in expr {
        let g = slots[slot].as_ref().expect("dependency cone covers expression");
        let factor = element_power(g, e)?;
        acc = Some(match acc {
            None => factor,
            Some(a) => a.mul(&factor)?,
        });
    }
    Ok(acc.expect("validated expressions are nonempty"))
}

/// Parses a word expression into a single-output program.
///
/// Grammar: generator names, `*` for products, `^` with (possibly negative)
/// integer exponents, parentheses, and the atom `1` for the empty word.
/// Names must be prefix-free — no name may be a prefix of another — and may
/// not contain whitespace, digits as first character, or the characters
/// `*^()`.
pub fn parse_word_program(expr: &str, gen_names: &[impl AsRef<str>]) -> Result<Slp> {
    let names: Vec<&str> = gen_names.iter().map(|n| n.as_ref()).collect();
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(Error::Name(format!("generator {} has an empty name", i + 1)));
        }
        if name.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-') {
            return Err(Error::Name(format!("generator name '{name}' may not start with a digit or '-'")));
        }
        if name.chars().any(|c| c.is_whitespace() || "*^()".contains(c)) {
            return Err(Error::Name(format!("generator name '{name}' contains reserved characters")));
        }
        for other in &names[..i] {
            if name.starts_with(other) || other.starts_with(name) {
                return Err(Error::Name(format!("generator names '{other}' and '{name}' are not prefix-free")));
            }
        }
    }
    let mut parser = WordParser { text: expr.as_bytes(), pos: 0, names: &names, lines: Vec::new() };
    parser.skip_ws();
    let top = parser.parse_expr()?;
    parser.skip_ws();
    if parser.pos < parser.text.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Slp::new(names.len(), parser.lines, vec![top])
}

/// Recursive-descent parser for word expressions, emitting program lines
/// for nested parenthesised products.
struct WordParser<'a> {
    text: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
    lines: Vec<ProductExpr>,
}

impl<'a> WordParser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { line: 1, msg: format!("col {}: {msg}", self.pos + 1) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    /// expr := factor ('*' factor)*
    fn parse_expr(&mut self) -> Result<ProductExpr> {
        let mut product = self.parse_factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                product.extend(self.parse_factor()?);
            } else {
                return Ok(product);
            }
        }
    }

    /// factor := atom ('^' integer)?
    fn parse_factor(&mut self) -> Result<ProductExpr> {
        let atom = self.parse_atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.parse_integer()?;
            Ok(self.raise(atom, e))
        } else {
            Ok(atom)
        }
    }

    /// Raises a product expression to a power, combining exponents when the
    /// expression is a single factor and otherwise materialising a slot.
    fn raise(&mut self, expr: ProductExpr, e: i64) -> ProductExpr {
        if let [(slot, inner)] = expr[..] {
            return vec![(slot, inner.saturating_mul(e))];
        }
        self.lines.push(expr);
        let slot = self.names.len() + self.lines.len();
        vec![(slot, e)]
    }

    /// atom := name | '(' expr ')' | '1'
    fn parse_atom(&mut self) -> Result<ProductExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.parse_expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(self.raise(inner, 1))
            }
            Some(b'1') => {
                self.pos += 1;
                // The empty word: an identity factor on slot 1.
                if self.names.is_empty() {
                    return Err(self.error("the empty word needs at least one generator"));
                }
                Ok(vec![(1, 0)])
            }
            Some(_) => {
                let rest = &self.text[self.pos..];
                for (i, name) in self.names.iter().enumerate() {
                    if rest.starts_with(name.as_bytes()) {
                        self.pos += name.len();
                        return Ok(vec![(i + 1, 1)]);
                    }
                }
                Err(self.error("expected a generator name, '(' or '1'"))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn parse_integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error("expected an integer exponent"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .expect("ascii")
            .parse::<i64>()
            .map_err(|_| self.error("exponent out of range"))
    }
}

/// Enumerates nonempty positive words in the generators in
/// length-then-lexicographic order and returns the first word (with its
/// evaluation) satisfying the predicate.
///
/// The enumeration is deterministic; `Err(NotFound)` is returned when all
/// words up to `max_length` fail the predicate.
pub fn word_search<G: GroupElement>(
    gens: &[G],
    predicate: impl Fn(&G) -> bool,
    max_length: usize,
) -> Result<(FreeWord, G)> {
    fn dfs<G: GroupElement>(
        gens: &[G],
        current: &G,
        prefix: &mut Vec<usize>,
        remaining: usize,
        predicate: &impl Fn(&G) -> bool,
    ) -> Result<Option<(FreeWord, G)>> {
        if remaining == 0 {
            if predicate(current) {
                let word = FreeWord::from_syllables(prefix.iter().map(|&g| (g, 1)));
                return Ok(Some((word, current.clone())));
            }
            return Ok(None);
        }
        for (i, g) in gens.iter().enumerate() {
            let next = if prefix.is_empty() { g.clone() } else { current.mul(g)? };
            prefix.push(i);
            if let Some(hit) = dfs(gens, &next, prefix, remaining - 1, predicate)? {
                return Ok(Some(hit));
            }
            prefix.pop();
        }
        Ok(None)
    }

    if !gens.is_empty() {
        let seed = gens[0].identity_like();
        for len in 1..=max_length {
            let mut prefix = Vec::with_capacity(len);
            if let Some(hit) = dfs(gens, &seed, &mut prefix, len, &predicate)? {
                return Ok(hit);
            }
        }
    }
    Err(Error::NotFound(format!("no word of length at most {max_length} satisfies the predicate")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::Cell;
    use std::rc::Rc;

    fn free_gens(n: usize) -> Vec<FreeWord> {
        (0..n).map(FreeWord::generator).collect()
    }

    #[test]
    fn identity_program_returns_input() {
        let slp = Slp::new(1, vec![], vec![vec![(1, 1)]]).unwrap();
        let g = FreeWord::generator(0);
        assert_eq!(slp.evaluate(&[g.clone()]).unwrap(), vec![g]);
    }

    #[test]
    fn validation_rejects_bad_references() {
        // Line 1 may only reference slot 1.
        assert!(matches!(
            Slp::new(1, vec![vec![(2, 1)]], vec![vec![(1, 1)]]),
            Err(Error::Validation(_))
        ));
        // Slot 0 is never valid.
        assert!(matches!(
            Slp::new(1, vec![vec![(0, 1)]], vec![vec![(1, 1)]]),
            Err(Error::Validation(_))
        ));
        // Output past the last defined slot.
        assert!(matches!(
            Slp::new(2, vec![vec![(1, 1), (2, 1)]], vec![vec![(4, 1)]]),
            Err(Error::Validation(_))
        ));
        // Empty products are rejected.
        assert!(matches!(
            Slp::new(1, vec![vec![]], vec![vec![(1, 1)]]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            Slp::new(1, vec![], vec![vec![]]),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn evaluate_checks_arity() {
        let slp = Slp::new(2, vec![], vec![vec![(1, 1)]]).unwrap();
        assert!(matches!(
            slp.evaluate(&free_gens(1)),
            Err(Error::Arity(_))
        ));
    }

    /// A free word that counts every multiplication through a shared cell,
    /// for observing exactly which slots evaluation touches.
    #[derive(Clone)]
    struct CountingWord {
        word: FreeWord,
        muls: Rc<Cell<usize>>,
    }

    impl PartialEq for CountingWord {
        fn eq(&self, other: &Self) -> bool {
            self.word == other.word
        }
    }

    impl GroupElement for CountingWord {
        fn identity_like(&self) -> Self {
            CountingWord { word: FreeWord::identity(), muls: Rc::clone(&self.muls) }
        }
        fn mul(&self, rhs: &Self) -> Result<Self> {
            self.muls.set(self.muls.get() + 1);
            Ok(CountingWord { word: self.word.mul_word(&rhs.word), muls: Rc::clone(&self.muls) })
        }
        fn inverse(&self) -> Result<Self> {
            Ok(CountingWord { word: self.word.inverse_word(), muls: Rc::clone(&self.muls) })
        }
    }

    #[test]
    fn evaluation_is_lazy_outside_the_dependency_cone() {
        // Slot 3 = g1·g2 (1 multiplication); slot 4 = slot3^8 (3 squarings);
        // output uses only slot 3, so slot 4 must never be computed.
        let slp = Slp::new(
            2,
            vec![vec![(1, 1), (2, 1)], vec![(3, 8)]],
            vec![vec![(3, 1)]],
        )
        .unwrap();
        let muls = Rc::new(Cell::new(0));
        let gens: Vec<CountingWord> = free_gens(2)
            .into_iter()
            .map(|word| CountingWord { word, muls: Rc::clone(&muls) })
            .collect();
        let out = slp.evaluate(&gens).unwrap();
        assert_eq!(out[0].word, FreeWord::from_syllables([(0, 1), (1, 1)]));
        assert_eq!(muls.get(), 1, "only the used line may be evaluated");
    }

    #[test]
    fn restriction_matches_full_evaluation() {
        // A 3-output program with some shared structure.
        let slp = Slp::new(
            2,
            vec![
                vec![(1, 1), (2, 1)],  // 3: ab
                vec![(3, 2)],          // 4: (ab)²
                vec![(2, -1), (4, 1)], // 5: b⁻¹(ab)²
            ],
            vec![vec![(3, 1)], vec![(4, 1), (1, 1)], vec![(5, 3)]],
        )
        .unwrap();
        let gens = free_gens(2);
        let full = slp.evaluate(&gens).unwrap();
        // Restricting to all positions is evaluation-equivalent.
        let all = slp.restrict_outputs(&[1, 2, 3]).unwrap();
        assert_eq!(all.evaluate(&gens).unwrap(), full);
        // Restriction to {2} yields exactly output 2.
        let second = slp.restrict_outputs(&[2]).unwrap();
        assert_eq!(second.evaluate(&gens).unwrap(), vec![full[1].clone()]);
        // Order and repetition follow the positions list.
        let swapped = slp.restrict_outputs(&[3, 1, 3]).unwrap();
        assert_eq!(
            swapped.evaluate(&gens).unwrap(),
            vec![full[2].clone(), full[0].clone(), full[2].clone()]
        );
        // Out-of-range position.
        assert!(matches!(slp.restrict_outputs(&[4]), Err(Error::Index(_))));
        assert!(matches!(slp.restrict_outputs(&[0]), Err(Error::Index(_))));
    }

    #[test]
    fn restriction_of_many_output_programs() {
        // A 60-output program in the style of a class-representative list:
        // output i is (ab)^i.
        let mut lines = vec![vec![(1, 1), (2, 1)]];
        let outputs: Vec<ProductExpr> = (1..=60).map(|i| vec![(3, i as i64)]).collect();
        let slp = Slp::new(2, lines.drain(..).collect(), outputs).unwrap();
        let first = slp.restrict_outputs(&[1]).unwrap();
        let gens = free_gens(2);
        let out = first.evaluate(&gens).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0], FreeWord::from_syllables([(0, 1), (1, 1)]));
    }

    #[test]
    fn composition_equals_sequential_evaluation() {
        // inner: two outputs (ab, b⁻¹a) over 2 inputs.
        let inner = Slp::new(
            2,
            vec![vec![(1, 1), (2, 1)], vec![(2, -1), (1, 1)]],
            vec![vec![(3, 1)], vec![(4, 1)]],
        )
        .unwrap();
        // outer: two inputs u,v; outputs (u v², v⁻¹ u v).
        let outer = Slp::new(
            2,
            vec![vec![(1, 1), (2, 2)], vec![(2, -1), (1, 1), (2, 1)]],
            vec![vec![(3, 1)], vec![(4, 1)]],
        )
        .unwrap();
        let composed = Slp::compose(&outer, &inner).unwrap();
        let gens = free_gens(2);
        let sequential = outer.evaluate(&inner.evaluate(&gens).unwrap()).unwrap();
        assert_eq!(composed.evaluate(&gens).unwrap(), sequential);
    }

    #[test]
    fn composition_with_identity_program() {
        let ident = Slp::new(2, vec![], vec![vec![(1, 1)], vec![(2, 1)]]).unwrap();
        let s = Slp::new(
            2,
            vec![vec![(1, 2), (2, 1)]],
            vec![vec![(3, 1)], vec![(3, -1), (1, 1)]],
        )
        .unwrap();
        let gens = free_gens(2);
        let expect = s.evaluate(&gens).unwrap();
        assert_eq!(
            Slp::compose(&s, &ident).unwrap().evaluate(&gens).unwrap(),
            expect
        );
        let ident1 = Slp::new(2, vec![], vec![vec![(1, 1)], vec![(2, 1)]]).unwrap();
        assert_eq!(
            Slp::compose(&ident1, &s).unwrap().evaluate(&gens).unwrap(),
            expect
        );
    }

    #[test]
    fn composition_with_power_program_squares_outputs() {
        // One-input program raising its input to the square, composed with a
        // single-output program: the representative gets squared.
        let squarer = Slp::new(1, vec![], vec![vec![(1, 2)]]).unwrap();
        let rep = Slp::new(2, vec![vec![(2, 2), (1, 1)]], vec![vec![(3, 5)]]).unwrap();
        let composed = Slp::compose(&squarer, &rep).unwrap();
        let gens = free_gens(2);
        let rep_out = &rep.evaluate(&gens).unwrap()[0];
        assert_eq!(
            composed.evaluate(&gens).unwrap(),
            vec![rep_out.mul_word(rep_out)]
        );
    }

    #[test]
    fn composition_checks_arity() {
        let one_out = Slp::new(1, vec![], vec![vec![(1, 1)]]).unwrap();
        let two_in = Slp::new(2, vec![], vec![vec![(1, 1), (2, 1)]]).unwrap();
        assert!(matches!(
            Slp::compose(&two_in, &one_out),
            Err(Error::Arity(_))
        ));
    }

    #[test]
    fn parse_single_generator() {
        let slp = parse_word_program("a", &["a", "b"]).unwrap();
        let out = slp.evaluate(&free_gens(2)).unwrap();
        assert_eq!(out, vec![FreeWord::generator(0)]);
    }

    #[test]
    fn parse_expands_powers_of_products() {
        let slp = parse_word_program("(a*b)^3", &["a", "b"]).unwrap();
        let out = slp.evaluate(&free_gens(2)).unwrap();
        let ab = FreeWord::from_syllables([(0, 1), (1, 1)]);
        assert_eq!(out, vec![ab.pow(3)]);
    }

    #[test]
    fn parse_handles_nesting_negatives_and_identity() {
        let gens = free_gens(2);
        let a = &gens[0];
        let b = &gens[1];
        let cases: Vec<(&str, FreeWord)> = vec![
            ("1", FreeWord::identity()),
            ("a^-1", a.inverse_word()),
            ("a^0", FreeWord::identity()),
            ("b^2*a", b.pow(2).mul_word(a)),
            ("(b^2*a)^9", b.pow(2).mul_word(a).pow(9)),
            ("((a*b)^2*a)^-2", a.mul_word(b).pow(2).mul_word(a).pow(-2)),
            (" a * b ^ 2 ", a.mul_word(&b.pow(2))),
            ("(a)^5", a.pow(5)),
            ("1*a*1", a.clone()),
        ];
        for (expr, expect) in cases {
            let slp = parse_word_program(expr, &["a", "b"]).unwrap();
            let out = slp.evaluate(&gens).unwrap();
            assert_eq!(out, vec![expect], "expression {expr:?}");
        }
    }

    #[test]
    fn parse_rejects_prefix_violating_names() {
        assert!(matches!(
            parse_word_program("a", &["a", "ab"]),
            Err(Error::Name(_))
        ));
        assert!(matches!(
            parse_word_program("t1", &["t1", "t11"]),
            Err(Error::Name(_))
        ));
        assert!(matches!(
            parse_word_program("a", &["a", ""]),
            Err(Error::Name(_))
        ));
        assert!(matches!(
            parse_word_program("a", &["a", "2b"]),
            Err(Error::Name(_))
        ));
    }

    #[test]
    fn parse_reports_error_positions() {
        for (expr, col) in [("a**b", 3), ("(a*b", 5), ("a^", 3), ("c", 1), ("a*b)", 4)] {
            match parse_word_program(expr, &["a", "b"]) {
                Err(Error::Parse { line: 1, msg }) => {
                    assert!(
                        msg.starts_with(&format!("col {col}:")),
                        "expression {expr:?} reported {msg:?}, expected col {col}"
                    );
                }
                other => panic!("expression {expr:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn word_search_finds_identity_immediately() {
        let gens = vec![FreeWord::identity(), FreeWord::generator(1)];
        let (word, element) = word_search(&gens, |g| g.is_identity(), 3).unwrap();
        assert_eq!(word, FreeWord::generator(0));
        assert!(element.is_identity());
    }

    #[test]
    fn word_search_is_length_then_lex() {
        // Over free words nothing short satisfies "is b²a-like", so the
        // first hit is at length 3 and lexicographically least: the search
        // must see aab before aba before baa, etc.
        let gens = free_gens(2);
        let target = FreeWord::from_syllables([(0, 2), (1, 1)]);
        let (word, element) = word_search(&gens, |g| *g == target, 4).unwrap();
        assert_eq!(element, target);
        assert_eq!(word, target);
        // Deterministic across runs.
        let again = word_search(&gens, |g| *g == target, 4).unwrap();
        assert_eq!(again.0, word);
    }

    #[test]
    fn word_search_exhaustion_is_an_error() {
        let gens = free_gens(2);
        assert!(matches!(
            word_search(&gens, |_| false, 3),
            Err(Error::NotFound(_))
        ));
    }

    #[test]
    fn text_round_trip_is_bit_exact() {
        let slp = Slp::new(
            2,
            vec![vec![(1, 1), (2, 1)], vec![(3, -5)]],
            vec![vec![(3, 1), (4, 2)], vec![(4, 1)]],
        )
        .unwrap();
        let text = slp.to_text();
        let parsed = Slp::from_text(&text).unwrap();
        assert_eq!(parsed, slp);
        assert_eq!(parsed.to_text(), text);
        assert_eq!(
            text,
            "inputs 2\nline 1 1 2 1\nline 3 -5\noutputs 3 1 , 4 2 ; 4 1\n"
        );
    }

    #[test]
    fn text_parse_errors_carry_line_numbers() {
        let cases = [
            ("inputs 2\nline 1 1\nline x 1\noutputs 3 1\n", 3),
            ("line 1 1\n", 1),
            ("inputs 2\noutputs 1\n", 2),
            ("inputs 2\n", 1),
        ];
        for (text, line) in cases {
            match Slp::from_text(text) {
                Err(Error::Parse { line: l, .. }) => {
                    assert_eq!(l, line, "text {text:?}")
                }
                other => panic!("text {text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn homomorphism_property_words_then_matrices() {
        use crate::ff::{FFMatrix, FieldSpec};
        // Evaluating on free words and substituting matrices must equal
        // evaluating on the matrices directly.
        let spec = FieldSpec::prime(5).unwrap();
        let m1 = FFMatrix::from_integers(spec, 2, 2, &[1, 1, 0, 1]).unwrap();
        let m2 = FFMatrix::from_integers(spec, 2, 2, &[1, 0, 1, 1]).unwrap();
        let mats = vec![m1, m2];
        let slp = Slp::new(
            2,
            vec![
                vec![(1, 1), (2, 1)],
                vec![(3, 4)],
                vec![(4, -1), (1, 1), (4, 1)],
            ],
            vec![vec![(5, 1)], vec![(3, 2), (2, -3)]],
        )
        .unwrap();
        let words = slp.evaluate(&free_gens(2)).unwrap();
        let direct = slp.evaluate(&mats).unwrap();
        for (word, mat) in words.iter().zip(&direct) {
            assert_eq!(&word.apply(&mats).unwrap(), mat);
        }
    }
}
