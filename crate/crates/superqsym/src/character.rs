//! Exact characters: sparse multivariate polynomials with integer
//! coefficients, one variable per letter (keyed by letter display so that
//! reorderings of an alphabet share variables), hook Schur polynomials,
//! the cancellation substitution, quasi-symmetric membership, and
//! expansion in the kite character basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::alphabet::{GradedAlphabet, Letter};
use crate::error::{Error, Result};
use crate::shape::{Composition, KiteShape, Partition};
use crate::tableau::{enumerate_kite, enumerate_qr, enumerate_ssyt, qr_highest};
use crate::weight::{weight_order_geq, Weight};
use crate::word::Word;

/// A monomial: variable display -> positive exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_weight(w: &Weight, alphabet: &GradedAlphabet) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (l, c) in w.iter() {
            if c < 0 {
                return Err(Error::BadInput(format!(
                    "weight has a negative coefficient at {}",
                    alphabet.display(l)
                )));
            }
            map.insert(alphabet.display(l).to_string(), c as u32);
        }
        Ok(Monomial(map))
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = (&str, u32)> + '_ {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (k, v) in &other.0 {
            *out.entry(k.clone()).or_insert(0) += v;
        }
        Monomial(out)
    }

    fn without(&self, vars: [&str; 2]) -> Monomial {
        let mut out = self.0.clone();
        out.remove(vars[0]);
        out.remove(vars[1]);
        Monomial(out)
    }

    fn rename(&self, a: &str, b: &str) -> Monomial {
        let mut out = self.0.clone();
        let ea = out.remove(a);
        let eb = out.remove(b);
        if let Some(e) = ea {
            out.insert(b.to_string(), e);
        }
        if let Some(e) = eb {
            out.insert(a.to_string(), e);
        }
        Monomial(out)
    }

    /// Interprets the monomial as a weight over an alphabet.
    pub fn to_weight(&self, alphabet: &GradedAlphabet) -> Result<Weight> {
        let mut w = Weight::zero();
        for (var, e) in &self.0 {
            w.add_letter(alphabet.parse_letter(var)?, *e as i64);
        }
        Ok(w)
    }

    pub fn display(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    format!("z[{v}]")
                } else {
                    format!("z[{v}]^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A sparse polynomial with exact integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CharacterPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl CharacterPoly {
    pub fn zero() -> Self {
        CharacterPoly::default()
    }

    pub fn one() -> Self {
        CharacterPoly::from_term(Monomial::one(), BigInt::from(1))
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if c != BigInt::from(0) {
            terms.insert(m, c);
        }
        CharacterPoly { terms }
    }

    pub fn variable(display: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(display.to_string(), 1);
        CharacterPoly::from_term(Monomial(m), BigInt::from(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c == &BigInt::from(0) {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if *entry == BigInt::from(0) {
            let keys: Vec<Monomial> = self
                .terms
                .iter()
                .filter(|(_, v)| **v == BigInt::from(0))
                .map(|(k, _)| k.clone())
                .collect();
            for k in keys {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &CharacterPoly) -> CharacterPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &CharacterPoly) -> CharacterPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &(-c));
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> CharacterPoly {
        let mut out = CharacterPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(v * c));
        }
        out
    }

    pub fn mul(&self, other: &CharacterPoly) -> CharacterPoly {
        let mut out = CharacterPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    /// Swaps two variables.
    pub fn swap_vars(&self, a: &str, b: &str) -> CharacterPoly {
        let mut out = CharacterPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(a, b), c);
        }
        out
    }

    /// Renames variables through a map; unmapped variables keep their
    /// names. The map must be injective on the variables present.
    pub fn relabel_vars(&self, map: &BTreeMap<String, String>) -> CharacterPoly {
        let mut out = CharacterPoly::zero();
        for (m, c) in &self.terms {
            let renamed: BTreeMap<String, u32> =
                m.0.iter()
                    .map(|(v, &e)| (map.get(v).cloned().unwrap_or_else(|| v.clone()), e))
                    .collect();
            out.add_term(Monomial(renamed), c);
        }
        out
    }

    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.vars().map(|(v, _)| v.to_string()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Canonical text form: terms in monomial order, `3*z[1/2]^2*z[-1]`.
    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::from(0);
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.0.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs == BigInt::from(1) {
                out.push_str(&m.display());
            } else {
                out.push_str(&format!("{}*{}", abs, m.display()));
            }
        }
        out
    }

    /// Parses the text form produced by [`CharacterPoly::display`].
    pub fn parse(s: &str) -> Result<CharacterPoly> {
        let bad = |msg: &str| Error::BadInput(format!("polynomial: {msg}"));
        let mut out = CharacterPoly::zero();
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(out);
        }
        // Split into signed terms; signs inside variable brackets and
        // directly after `*` (negative coefficients) do not split.
        let mut terms: Vec<(i32, String)> = Vec::new();
        let mut sign = 1;
        let mut cur = String::new();
        let mut depth = 0usize;
        for ch in s.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    cur.push(ch);
                }
                ']' => {
                    depth = depth.saturating_sub(1);
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if cur.trim().is_empty() && terms.is_empty() {
                        // Leading sign.
                        if ch == '-' {
                            sign = -sign;
                        }
                    } else {
                        terms.push((sign, cur.trim().to_string()));
                        cur.clear();
                        sign = if ch == '-' { -1 } else { 1 };
                    }
                }
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            terms.push((sign, cur.trim().to_string()));
        }
        for (sign, term) in terms {
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = BigInt::from(sign);
            let mut mono = BTreeMap::new();
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if let Some(rest) = factor.strip_prefix("z[") {
                    let (var, tail) = rest
                        .split_once(']')
                        .ok_or_else(|| bad("unterminated variable"))?;
                    let exp: u32 = match tail.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| bad("bad exponent"))?,
                        None if tail.is_empty() => 1,
                        _ => return Err(bad("unexpected text after variable")),
                    };
                    if exp == 0 {
                        return Err(bad("zero exponent"));
                    }
                    *mono.entry(var.to_string()).or_insert(0) += exp;
                } else {
                    let c: BigInt = factor.parse().map_err(|_| bad("bad coefficient"))?;
                    coeff *= c;
                }
            }
            out.add_term(Monomial(mono), &coeff);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "terms": self
                .terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "coeff": c.to_string(),
                        "monomial": m.0,
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// The character of a finite set of weights.
pub fn character<I: IntoIterator<Item = Weight>>(
    weights: I,
    alphabet: &GradedAlphabet,
) -> Result<CharacterPoly> {
    let mut out = CharacterPoly::zero();
    let one = BigInt::from(1);
    for w in weights {
        out.add_term(Monomial::from_weight(&w, alphabet)?, &one);
    }
    Ok(out)
}

/// Character of the quasi-ribbon crystal of a composition.
pub fn ch_qr(shape: &Composition, alphabet: &GradedAlphabet) -> Result<CharacterPoly> {
    character(
        enumerate_qr(shape, alphabet).iter().map(|t| t.weight()),
        alphabet,
    )
}

/// Character of the semistandard crystal of a partition.
pub fn ch_ssyt(shape: &Partition, alphabet: &GradedAlphabet) -> Result<CharacterPoly> {
    character(
        enumerate_ssyt(shape, alphabet).iter().map(|t| t.weight()),
        alphabet,
    )
}

/// Character of the kite crystal of a shape.
pub fn ch_kite(shape: &KiteShape, alphabet: &GradedAlphabet) -> Result<CharacterPoly> {
    character(
        enumerate_kite(shape, alphabet).iter().map(|t| t.weight()),
        alphabet,
    )
}

/// The hook Schur polynomial: the character of the semistandard tableaux
/// of the shape over `[m|n]`. Zero when the shape is not an (m,n)-hook.
pub fn hook_schur(shape: &Partition, m: usize, n: usize) -> Result<CharacterPoly> {
    let alphabet = GradedAlphabet::parse(&format!("mn:{m},{n}"))?;
    ch_ssyt(shape, &alphabet)
}

/// A polynomial in one formal parameter `t` with polynomial coefficients,
/// the result of the cancellation substitution.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TPoly(BTreeMap<u32, CharacterPoly>);

impl TPoly {
    pub fn coefficient(&self, degree: u32) -> CharacterPoly {
        self.0.get(&degree).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.keys().copied()
    }

    /// True when every positive-degree coefficient vanishes.
    pub fn is_t_independent(&self) -> bool {
        self.0.keys().all(|&d| d == 0)
    }

    pub fn constant_part(&self) -> CharacterPoly {
        self.coefficient(0)
    }
}

/// Substitutes `z_r = t`, `z_s = -t` and collects by powers of `t`.
pub fn cancel_substitute(f: &CharacterPoly, r: &str, s: &str) -> TPoly {
    let mut out: BTreeMap<u32, CharacterPoly> = BTreeMap::new();
    for (m, c) in f.terms() {
        let a = m.exponent(r);
        let b = m.exponent(s);
        let rest = m.without([r, s]);
        let signed = if b % 2 == 0 { c.clone() } else { -c };
        out.entry(a + b).or_default().add_term(rest, &signed);
    }
    out.retain(|_, p| !p.is_zero());
    TPoly(out)
}

/// Whether a polynomial is symmetric under every adjacent transposition
/// of the given variables.
pub fn symmetric_in(f: &CharacterPoly, vars: &[String]) -> bool {
    vars.windows(2).all(|w| &f.swap_vars(&w[0], &w[1]) == f)
}

/// A membership verdict with a witness for failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<String>,
}

impl Membership {
    fn ok() -> Self {
        Membership {
            member: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Membership {
            member: false,
            witness: Some(witness),
        }
    }
}

/// The characterization of characters over a mixed truncation: symmetry
/// in the negative variables, and t-independence under the cancellation
/// substitution for the seam pair (-1, 1/2) and every positive
/// consecutive pair.
pub fn qsym_membership(f: &CharacterPoly, m: usize, bound2: i64) -> Result<Membership> {
    let alphabet = GradedAlphabet::build(&crate::alphabet::AlphabetSpec::MixedTrunc(m, bound2))?;
    let known: Vec<String> = alphabet
        .letters()
        .map(|l| alphabet.display(l).to_string())
        .collect();
    for v in f.variables() {
        if !known.contains(&v) {
            return Ok(Membership::fail(format!("unknown variable z[{v}]")));
        }
    }
    let negatives: Vec<String> = known[..m].to_vec();
    for w in negatives.windows(2) {
        if f.swap_vars(&w[0], &w[1]) != *f {
            return Ok(Membership::fail(format!(
                "not symmetric under z[{}] <-> z[{}]",
                w[0], w[1]
            )));
        }
    }
    // Consecutive pairs from the seam onward: (-1, 1/2), then every
    // (r, r + 1/2) inside the truncation.
    let start = m.saturating_sub(1);
    for i in start..alphabet.len() - 1 {
        let r = known[i].clone();
        let s = known[i + 1].clone();
        let sub = cancel_substitute(f, &r, &s);
        if !sub.is_t_independent() {
            return Ok(Membership::fail(format!(
                "depends on t under z[{r}] = -z[{s}] = t"
            )));
        }
    }
    Ok(Membership::ok())
}

/// One identity of the factorization of small-tail kite characters:
/// `ch B(lambda,alpha) = hs_lambda(z_{-p..-1}; z_{1/2}) ch B(alpha)` and
/// its fully factored form through the zigzag shape `(2^{q-1}, 1)`.
pub fn factorization_check(
    lambda: &Partition,
    alpha: &Composition,
    p: usize,
    q: usize,
) -> Result<bool> {
    if q == 0 {
        return Err(Error::BadInput("q must be positive".into()));
    }
    let corners = alpha.corners();
    if corners != 2 * q - 1 && corners != 2 * q {
        return Err(Error::BadInput(format!(
            "{alpha} has {corners} corners, need {} or {}",
            2 * q - 1,
            2 * q
        )));
    }
    let kite = KiteShape::new(p, lambda.clone(), alpha.clone())?;
    let mixed = GradedAlphabet::build(&crate::alphabet::AlphabetSpec::MixedTrunc(p, 2 * q as i64))?;
    let lhs = ch_kite(&kite, &mixed)?;

    // hs_lambda in the negative variables and the single odd variable
    // z[1/2].
    let tiny = GradedAlphabet::build(&crate::alphabet::AlphabetSpec::MixedTrunc(p, 1))?;
    let hs = ch_ssyt(lambda, &tiny)?;

    let half = GradedAlphabet::parse(&format!("half:{q}"))?;
    let ch_alpha = ch_qr(alpha, &half)?;
    let first = hs.mul(&ch_alpha) == lhs;

    // Zigzag form: z^mu hs prod (z_i + z_{i+1/2}).
    let mut zig_parts = vec![2usize; q - 1];
    zig_parts.push(1);
    let zigzag = Composition::new(zig_parts)?;
    let mu = &qr_highest(alpha, &half)?.weight() - &qr_highest(&zigzag, &half)?.weight();
    let z_mu = CharacterPoly::from_term(Monomial::from_weight(&mu, &half)?, BigInt::from(1));
    let mut prod = CharacterPoly::one();
    for i in 0..half.len() - 1 {
        let lo = half.display(Letter(i as u32)).to_string();
        let hi = half.display(Letter(i as u32 + 1)).to_string();
        prod = prod.mul(&CharacterPoly::variable(&lo).add(&CharacterPoly::variable(&hi)));
    }
    let second = z_mu.mul(&hs).mul(&prod) == lhs;
    Ok(first && second)
}

/// An expansion in the kite character basis at a truncation.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub coefficients: Vec<(KiteShape, BigInt)>,
    /// Set when a leading term used the largest letter of the truncation;
    /// coefficients near the boundary may differ at larger truncations.
    pub boundary_contact: bool,
}

impl Expansion {
    pub fn coefficient(&self, shape: &KiteShape) -> BigInt {
        self.coefficients
            .iter()
            .find(|(s, _)| s == shape)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }
}

/// Expands a polynomial in the basis of kite characters over
/// `N(m)` truncated at `bound2`, by repeatedly eliminating a maximal
/// monomial under the dominance order (ties broken lexicographically by
/// exponent vector).
pub fn expand_in_basis(f: &CharacterPoly, m: usize, bound2: i64) -> Result<Expansion> {
    let alphabet = GradedAlphabet::build(&crate::alphabet::AlphabetSpec::MixedTrunc(m, bound2))?;
    let mut rest = f.clone();
    let mut coeffs: BTreeMap<KiteShape, BigInt> = BTreeMap::new();
    let mut cache: BTreeMap<KiteShape, CharacterPoly> = BTreeMap::new();
    let mut boundary = false;
    let last = alphabet.display(alphabet.last_letter()).to_string();

    let mut rounds = 0usize;
    while !rest.is_zero() {
        rounds += 1;
        if rounds > 100_000 {
            return Err(Error::BadInput("expansion did not terminate".into()));
        }
        let lead = leading_monomial(&rest, &alphabet)?;
        if lead.exponent(&last) > 0 {
            boundary = true;
        }
        let w = lead.to_weight(&alphabet)?;
        let shape = decode(&w, &alphabet).ok_or_else(|| Error::NotInSpan(lead.display()))?;
        let c = rest.coeff(&lead);
        let basis = match cache.get(&shape) {
            Some(b) => b.clone(),
            None => {
                let b = ch_kite(&shape, &alphabet)?;
                cache.insert(shape.clone(), b.clone());
                b
            }
        };
        debug_assert_eq!(basis.coeff(&lead), BigInt::from(1));
        rest = rest.sub(&basis.scale(&c));
        let entry = coeffs.entry(shape).or_default();
        *entry += c;
    }
    coeffs.retain(|_, c| c != &BigInt::from(0));
    Ok(Expansion {
        coefficients: coeffs.into_iter().collect(),
        boundary_contact: boundary,
    })
}

fn decode(w: &Weight, alphabet: &GradedAlphabet) -> Option<KiteShape> {
    crate::ppartition::decode_kite_weight(w, alphabet)
}

/// A monomial of `f` maximal under the dominance order; among the maximal
/// ones the lexicographically largest exponent vector in alphabet order.
fn leading_monomial(f: &CharacterPoly, alphabet: &GradedAlphabet) -> Result<Monomial> {
    let items: Vec<(Monomial, Weight)> = f
        .terms()
        .map(|(m, _)| m.to_weight(alphabet).map(|w| (m.clone(), w)))
        .collect::<Result<_>>()?;
    let mut best: Option<(Monomial, Weight)> = None;
    'outer: for (m, w) in &items {
        for (m2, w2) in &items {
            if m2 != m && weight_order_geq(w2, w, alphabet) && w2 != w {
                continue 'outer;
            }
        }
        let vec_of = |w: &Weight| -> Vec<i64> { alphabet.letters().map(|l| w.coeff(l)).collect() };
        match &best {
            None => best = Some((m.clone(), w.clone())),
            Some((_, bw)) => {
                if vec_of(w) > vec_of(bw) {
                    best = Some((m.clone(), w.clone()));
                }
            }
        }
    }
    best.map(|(m, _)| m)
        .ok_or_else(|| Error::BadInput("no monomial to eliminate".into()))
}

/// Convenience: the word-set character used by tests and the CLI.
pub fn ch_words(words: &[Word], alphabet: &GradedAlphabet) -> Result<CharacterPoly> {
    character(words.iter().map(|w| w.weight()), alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::AlphabetSpec;

    fn alpha(spec: &str) -> GradedAlphabet {
        GradedAlphabet::parse(spec).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(s: &str) -> CharacterPoly {
        CharacterPoly::parse(s).unwrap()
    }

    #[test]
    fn arithmetic_and_text_round_trip() {
        let f = poly("3*z[1/2]^2*z[-1] - 2*z[1] + 7");
        assert_eq!(CharacterPoly::parse(&f.display()).unwrap(), f);
        assert_eq!(poly("0"), CharacterPoly::zero());
        assert!(f.sub(&f).is_zero());
        let g = poly("z[1/2] + z[1]");
        let h = g.mul(&g);
        assert_eq!(h, poly("z[1/2]^2 + 2*z[1/2]*z[1] + z[1]^2"));
        assert!(CharacterPoly::parse("z[").is_err());
        assert!(CharacterPoly::parse("q*z[1]").is_err());
    }

    #[test]
    fn small_characters() {
        let a = alpha("half:1");
        assert_eq!(ch_qr(&comp(&[1]), &a).unwrap(), poly("z[1/2] + z[1]"));
        assert_eq!(
            ch_qr(&comp(&[2]), &a).unwrap(),
            poly("z[1/2]*z[1] + z[1]^2")
        );
        assert_eq!(
            character(std::iter::empty::<Weight>(), &a).unwrap(),
            CharacterPoly::zero()
        );
    }

    #[test]
    fn hook_schur_small() {
        assert_eq!(hook_schur(&part(&[1]), 1, 1).unwrap(), poly("z[-1] + z[1]"));
        assert_eq!(
            hook_schur(&part(&[2]), 1, 1).unwrap(),
            poly("z[-1]^2 + z[-1]*z[1]")
        );
        assert_eq!(
            hook_schur(&part(&[2, 2]), 1, 1).unwrap(),
            CharacterPoly::zero()
        );
    }

    #[test]
    fn characters_are_constant_on_components() {
        use crate::crystal::decompose;
        use crate::word::words_of_length;
        // Group small words by their quasi P-tableau; each class carries
        // the character of its shape.
        let a = alpha("half:1");
        let words = words_of_length(&a, 3);
        let comps = decompose(&a, &words).unwrap();
        for c in comps {
            let hw = c.highest_weights();
            assert_eq!(hw.len(), 1);
            let shape = crate::ppartition::decode_kite_weight(&hw[0], &a).unwrap();
            let expected = ch_qr(shape.tail(), &a).unwrap();
            let got = ch_words(&c.elements, &a).unwrap();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn cancellation_substitution() {
        // z_r + z_s collapses to zero in positive t-degrees.
        let f = poly("z[1] + z[3/2]");
        let sub = cancel_substitute(&f, "1", "3/2");
        assert!(sub.is_t_independent());
        assert!(sub.constant_part().is_zero());

        // A bare variable depends on t.
        let f = poly("z[1]");
        assert!(!cancel_substitute(&f, "1", "3/2").is_t_independent());
    }

    #[test]
    fn cancellation_collapses_to_the_smaller_alphabet() {
        // ch B_{N<=2}((2,1)) at z_1 = -z_{3/2} = t equals the character of
        // the same shape over the alphabet without the two letters. The
        // surviving alphabet {1/2, 2, 5/2, ...} truncated to two letters is
        // order-isomorphic to {1/2, 1}; compare through the relabeling.
        let a2 = alpha("half:2");
        let f = ch_qr(&comp(&[2, 1]), &a2).unwrap();
        let sub = cancel_substitute(&f, "1", "3/2");
        assert!(sub.is_t_independent());
        let small = GradedAlphabet::build(&AlphabetSpec::Custom(vec![
            ("1/2".into(), crate::alphabet::Parity::Odd),
            ("2".into(), crate::alphabet::Parity::Even),
        ]))
        .unwrap();
        let expected = ch_qr(&comp(&[2, 1]), &small).unwrap();
        assert_eq!(sub.constant_part(), expected);
    }

    #[test]
    fn membership_checks() {
        // Basis characters are members.
        let a = alpha("mixed:1,1");
        let kite = KiteShape::new(1, part(&[1]), comp(&[1])).unwrap();
        let f = ch_kite(&kite, &a).unwrap();
        assert!(qsym_membership(&f, 1, 2).unwrap().member);

        // A bare odd variable fails at the pair (1/2, 1).
        let f = poly("z[1/2]");
        let verdict = qsym_membership(&f, 0, 2).unwrap();
        assert!(!verdict.member);
        assert!(verdict.witness.unwrap().contains("z[1/2] = -z[1]"));

        // Zero is a member; unknown variables are reported.
        assert!(
            qsym_membership(&CharacterPoly::zero(), 0, 1)
                .unwrap()
                .member
        );
        let verdict = qsym_membership(&poly("z[7]"), 0, 1).unwrap();
        assert!(!verdict.member);

        // Symmetry in the negative block is required.
        let f = poly("z[-2]");
        let verdict = qsym_membership(&f, 2, 1).unwrap();
        assert!(!verdict.member);
        assert!(verdict.witness.unwrap().contains("symmetric"));
    }

    #[test]
    fn factorization_examples() {
        // p = 0, q = 1, alpha = (2): ch = z_1 (z_{1/2} + z_1).
        assert!(factorization_check(&Partition::empty(), &comp(&[2]), 0, 1).unwrap());
        let lhs = ch_qr(&comp(&[2]), &alpha("half:1")).unwrap();
        assert_eq!(lhs, poly("z[1]*z[1/2] + z[1]^2"));

        // alpha = (1) is the zigzag itself: mu = 0.
        assert!(factorization_check(&Partition::empty(), &comp(&[1]), 0, 1).unwrap());

        // p = q = 1 with a body.
        assert!(factorization_check(&part(&[1]), &comp(&[1]), 1, 1).unwrap());

        // Preconditions.
        assert!(factorization_check(&Partition::empty(), &comp(&[1]), 0, 2).is_err());
    }

    #[test]
    fn expansion_in_the_basis() {
        // A basis character expands to itself.
        let a = alpha("half:2");
        let f = ch_qr(&comp(&[2]), &a).unwrap();
        let exp = expand_in_basis(&f, 0, 4).unwrap();
        let expected = KiteShape::new(0, Partition::empty(), comp(&[2])).unwrap();
        assert_eq!(exp.coefficients.len(), 1);
        assert_eq!(exp.coefficient(&expected), BigInt::from(1));

        // ch B((1))^2 = ch B((2)) + ch B((1,1)).
        let one = ch_qr(&comp(&[1]), &a).unwrap();
        let sq = one.mul(&one);
        let exp = expand_in_basis(&sq, 0, 4).unwrap();
        assert_eq!(exp.coefficients.len(), 2);
        assert_eq!(
            exp.coefficient(&KiteShape::new(0, Partition::empty(), comp(&[2])).unwrap()),
            BigInt::from(1)
        );
        assert_eq!(
            exp.coefficient(&KiteShape::new(0, Partition::empty(), comp(&[1, 1])).unwrap()),
            BigInt::from(1)
        );

        // A bare odd variable is not in the span.
        assert!(matches!(
            expand_in_basis(&poly("z[1/2]"), 1, 2),
            Err(Error::NotInSpan(_))
        ));
        assert!(matches!(
            expand_in_basis(&poly("z[1]"), 0, 2),
            Err(Error::NotInSpan(_))
        ));
    }

    #[test]
    fn expansion_reports_boundary_contact() {
        let a = alpha("half:1");
        let f = ch_qr(&comp(&[2]), &a).unwrap();
        // Over the two-letter truncation the leading weight touches the
        // last letter.
        let exp = expand_in_basis(&f, 0, 2).unwrap();
        assert!(exp.boundary_contact);
        // Over a bigger truncation the same polynomial is not a basis
        // character (its tail is cropped), so expansion fails; this is the
        // boundary effect the flag warns about.
        assert!(expand_in_basis(&f, 0, 4).is_err());
    }

    #[test]
    fn super_symmetric_subring_characterization() {
        // Over N^{<=2}: symmetry in the even variables and in the odd
        // variables separately holds exactly for integer combinations of
        // the partition characters.
        let a = alpha("half:2");
        let evens = vec!["1".to_string(), "2".to_string()];
        let odds = vec!["1/2".to_string(), "3/2".to_string()];
        let super_symmetric = |f: &CharacterPoly| symmetric_in(f, &evens) && symmetric_in(f, &odds);

        // Partition characters and their sums pass.
        let mut pool = Vec::new();
        for lam in Partition::all_up_to(4) {
            if lam.is_empty() {
                continue;
            }
            pool.push(ch_ssyt(&lam, &a).unwrap());
        }
        for f in &pool {
            assert!(super_symmetric(f), "partition character fails symmetry");
        }
        let mixed = pool[0].add(&pool[1]).add(&pool[2].scale(&BigInt::from(3)));
        assert!(super_symmetric(&mixed));

        // Membership in the span of partition characters, checked by
        // exact elimination over the quasi-ribbon basis.
        let expands_in_partitions = |f: &CharacterPoly| -> bool {
            // Coefficients in the quasi-ribbon basis.
            let exp = match expand_in_basis(f, 0, 4) {
                Ok(e) => e,
                Err(_) => return false,
            };
            // Solve sum_lambda c_lambda [B(lambda) : B(alpha)] = coeff_alpha
            // by eliminating the partition-indexed unknowns greedily: the
            // row-reading standard tableau shows [B(lambda) : B(lambda)]
            // >= 1 and every other alpha(T) is lexicographically earlier
            // as a partition key, so scanning partitions in decreasing
            // order works on these small cases.
            let mut residual: BTreeMap<Composition, BigInt> = exp
                .coefficients
                .iter()
                .map(|(k, c)| (k.tail().clone(), c.clone()))
                .collect();
            let mut lams: Vec<Partition> = Partition::all_up_to(6);
            lams.retain(|l| !l.is_empty());
            lams.sort();
            lams.reverse();
            for lam in lams {
                let key = Composition::new(lam.parts().to_vec()).unwrap();
                let c = residual.get(&key).cloned().unwrap_or_default();
                if c == BigInt::from(0) {
                    continue;
                }
                for t in crate::tableau::standard_tableaux(&crate::shape::SkewShape::straight(
                    lam.clone(),
                )) {
                    let alpha_t = t.descent_composition();
                    if alpha_t.corners() > 4 {
                        continue;
                    }
                    let entry = residual.entry(alpha_t).or_default();
                    *entry -= &c;
                }
                residual.retain(|_, v| v != &BigInt::from(0));
            }
            residual.is_empty()
        };

        for f in &pool {
            assert!(expands_in_partitions(f), "partition character not in span");
        }
        assert!(expands_in_partitions(&mixed));

        // A single quasi-ribbon character of non-partition shape fails
        // both sides.
        let f = ch_qr(&comp(&[1, 2]), &a).unwrap();
        assert!(!super_symmetric(&f));
        assert!(!expands_in_partitions(&f));
    }
}
