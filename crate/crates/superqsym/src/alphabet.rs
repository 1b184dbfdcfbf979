//! Linearly ordered Z2-graded alphabets, their simple roots, and the
//! standard families: `[m|n]`, half-integer truncations of N, mixed
//! truncations of N(m), and permuted reorderings.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Parity (Z2-degree) of a letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Sign of the bilinear form on the corresponding epsilon: `(-1)^parity`.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// A letter of a graded alphabet, identified by its position in the
/// alphabet's linear order. Comparing letters compares positions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub(crate) u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct LetterEntry {
    display: String,
    parity: Parity,
}

/// Which construction produced an alphabet. Several operations are only
/// defined over particular families (insertion needs a truncation of N,
/// kite tableaux need a truncation of N(m), ...).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    /// `[m|n]`: -m, ..., -1 (even) then 1, ..., n (odd).
    Mn { m: usize, n: usize },
    /// Truncation of N = {1/2, 1, 3/2, ...} at a half-integer bound.
    /// `bound2` is the doubled bound (so N^{<= 3/2} has `bound2 = 3`).
    Half { bound2: i64 },
    /// Truncation of N(m) = {-m, ..., -1} followed by N.
    Mixed { m: usize, bound2: i64 },
    /// A reordering of some base alphabet.
    Permuted,
    /// Explicitly listed letters.
    Custom,
}

/// A finite linearly ordered Z2-graded set. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedAlphabet {
    name: String,
    family: Family,
    entries: Vec<LetterEntry>,
    by_display: HashMap<String, u32>,
}

/// A simple root `eps_lo - eps_hi` for a successive pair `lo < hi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleRoot {
    pub index: usize,
    pub lo: Letter,
    pub hi: Letter,
    pub isotropic: bool,
    /// `(-1)^{parity(lo)}`.
    pub ell: i64,
    alphabet_name: String,
}

impl SimpleRoot {
    pub fn same_alphabet(&self, alphabet: &GradedAlphabet) -> bool {
        self.alphabet_name == alphabet.name
    }
}

/// Specification of an alphabet, as accepted by [`GradedAlphabet::build`].
#[derive(Clone, Debug)]
pub enum AlphabetSpec {
    Mn(usize, usize),
    /// Bound given as a doubled half-integer (`3` means 3/2).
    HalfTrunc(i64),
    MixedTrunc(usize, i64),
    /// Reorder the base by mapping the letter at position `k` to
    /// `sigma[k]`; the new order lists `sigma(old order)`.
    Permuted(Box<AlphabetSpec>, PermSpec),
    /// Letters given as (display, parity), in order.
    Custom(Vec<(String, Parity)>),
}

#[derive(Clone, Debug)]
pub enum PermSpec {
    /// The unique shuffle of `[m|n]` (m >= n >= 1) whose reordering is
    /// order-isomorphic to the mixed truncation N(m-n)^{<= n}: the first
    /// m-n negative letters, then 1, -n, 2, -(n-1), ..., n, -1.
    Omega,
    /// Explicit image displays: position k of the new order holds the
    /// letter displayed `displays[k]`.
    Explicit(Vec<String>),
}

fn display_of_val2(v: i64) -> String {
    if v % 2 == 0 {
        format!("{}", v / 2)
    } else {
        format!("{}/2", v)
    }
}

/// Parses the letter display grammar: `-?[0-9]+` or `[0-9]+/2` with an odd
/// numerator. Returns the doubled value.
pub fn parse_letter_value2(s: &str) -> Result<i64> {
    let bad = || Error::BadLetter(s.to_string());
    if let Some(num) = s.strip_suffix("/2") {
        let p: i64 = num.parse().map_err(|_| bad())?;
        if p <= 0 || p % 2 == 0 {
            return Err(bad());
        }
        Ok(p)
    } else {
        let k: i64 = s.parse().map_err(|_| bad())?;
        Ok(2 * k)
    }
}

impl GradedAlphabet {
    pub fn build(spec: &AlphabetSpec) -> Result<GradedAlphabet> {
        match spec {
            AlphabetSpec::Mn(m, n) => {
                let mut entries = Vec::new();
                for k in 0..*m {
                    entries.push(LetterEntry {
                        display: format!("{}", -(*m as i64) + k as i64),
                        parity: Parity::Even,
                    });
                }
                for k in 1..=*n {
                    entries.push(LetterEntry {
                        display: format!("{k}"),
                        parity: Parity::Odd,
                    });
                }
                Self::from_entries(format!("mn:{m},{n}"), Family::Mn { m: *m, n: *n }, entries)
            }
            AlphabetSpec::HalfTrunc(bound2) => {
                let entries = half_entries(*bound2)?;
                Self::from_entries(
                    format!("half:{}", display_of_val2(*bound2)),
                    Family::Half { bound2: *bound2 },
                    entries,
                )
            }
            AlphabetSpec::MixedTrunc(m, bound2) => {
                let mut entries = Vec::new();
                for k in 0..*m {
                    entries.push(LetterEntry {
                        display: format!("{}", -(*m as i64) + k as i64),
                        parity: Parity::Even,
                    });
                }
                entries.extend(half_entries(*bound2)?);
                Self::from_entries(
                    format!("mixed:{m},{}", display_of_val2(*bound2)),
                    Family::Mixed {
                        m: *m,
                        bound2: *bound2,
                    },
                    entries,
                )
            }
            AlphabetSpec::Permuted(base, perm) => {
                let base = Self::build(base)?;
                let displays = match perm {
                    PermSpec::Omega => omega_order(&base)?,
                    PermSpec::Explicit(d) => d.clone(),
                };
                base.permuted(&displays)
            }
            AlphabetSpec::Custom(list) => {
                let entries = list
                    .iter()
                    .map(|(d, p)| LetterEntry {
                        display: d.clone(),
                        parity: *p,
                    })
                    .collect::<Vec<_>>();
                let name = format!(
                    "custom:{}",
                    list.iter()
                        .map(|(d, _)| d.as_str())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                Self::from_entries(name, Family::Custom, entries)
            }
        }
    }

    /// Parses the CLI grammar: `mn:4,2`, `half:2`, `mixed:1,2`,
    /// `perm:<base>:omega`.
    pub fn parse(spec: &str) -> Result<GradedAlphabet> {
        let bad = || Error::BadAlphabetSpec(spec.to_string());
        if let Some(rest) = spec.strip_prefix("perm:") {
            let (base, perm) = rest.rsplit_once(':').ok_or_else(bad)?;
            if perm != "omega" {
                return Err(bad());
            }
            let base = Self::parse(base)?;
            let displays = omega_order(&base)?;
            return base.permuted(&displays);
        }
        let (kind, args) = spec.split_once(':').ok_or_else(bad)?;
        match kind {
            "mn" => {
                let (m, n) = args.split_once(',').ok_or_else(bad)?;
                let m = m.parse().map_err(|_| bad())?;
                let n = n.parse().map_err(|_| bad())?;
                Self::build(&AlphabetSpec::Mn(m, n))
            }
            "half" => {
                let b = parse_letter_value2(args).map_err(|_| bad())?;
                Self::build(&AlphabetSpec::HalfTrunc(b))
            }
            "mixed" => {
                let (m, n) = args.split_once(',').ok_or_else(bad)?;
                let m = m.parse().map_err(|_| bad())?;
                let b = parse_letter_value2(n).map_err(|_| bad())?;
                Self::build(&AlphabetSpec::MixedTrunc(m, b))
            }
            _ => Err(bad()),
        }
    }

    fn from_entries(name: String, family: Family, entries: Vec<LetterEntry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut by_display = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if e.display.is_empty() || e.display.chars().any(char::is_whitespace) {
                return Err(Error::BadLetter(e.display.clone()));
            }
            if by_display.insert(e.display.clone(), i as u32).is_some() {
                return Err(Error::BadLetter(format!("duplicate `{}`", e.display)));
            }
        }
        Ok(GradedAlphabet {
            name,
            family,
            entries,
            by_display,
        })
    }

    /// Same letters reordered so that position k holds `displays[k]`.
    pub fn permuted(&self, displays: &[String]) -> Result<GradedAlphabet> {
        if displays.len() != self.entries.len() {
            return Err(Error::NotAPermutation(format!(
                "{} letters given, alphabet has {}",
                displays.len(),
                self.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(displays.len());
        for d in displays {
            let idx = self
                .by_display
                .get(d)
                .ok_or_else(|| Error::NotAPermutation(format!("`{d}` is not a base letter")))?;
            entries.push(self.entries[*idx as usize].clone());
        }
        Self::from_entries(
            format!("perm:{}:[{}]", self.name, displays.join(",")),
            Family::Permuted,
            entries,
        )
        .map_err(|e| match e {
            Error::BadLetter(d) => Error::NotAPermutation(d),
            other => other,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.entries.len() as u32).map(Letter)
    }

    pub fn first_letter(&self) -> Letter {
        Letter(0)
    }

    pub fn last_letter(&self) -> Letter {
        Letter(self.entries.len() as u32 - 1)
    }

    pub fn contains(&self, l: Letter) -> bool {
        l.index() < self.entries.len()
    }

    pub fn display(&self, l: Letter) -> &str {
        &self.entries[l.index()].display
    }

    pub fn parity(&self, l: Letter) -> Parity {
        self.entries[l.index()].parity
    }

    pub fn sign(&self, l: Letter) -> i64 {
        self.parity(l).sign()
    }

    pub fn parse_letter(&self, s: &str) -> Result<Letter> {
        self.by_display
            .get(s)
            .map(|i| Letter(*i))
            .ok_or_else(|| Error::LetterNotInAlphabet(s.to_string(), self.name.clone()))
    }

    pub fn check_letter(&self, l: Letter) -> Result<()> {
        if self.contains(l) {
            Ok(())
        } else {
            Err(Error::LetterNotInAlphabet(
                format!("#{}", l.index()),
                self.name.clone(),
            ))
        }
    }

    pub fn num_roots(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn root(&self, index: usize) -> SimpleRoot {
        assert!(index + 1 < self.entries.len(), "root index out of range");
        let lo = Letter(index as u32);
        let hi = Letter(index as u32 + 1);
        SimpleRoot {
            index,
            lo,
            hi,
            isotropic: self.parity(lo) != self.parity(hi),
            ell: self.parity(lo).sign(),
            alphabet_name: self.name.clone(),
        }
    }

    /// All simple roots in alphabet order.
    pub fn simple_roots(&self) -> Vec<SimpleRoot> {
        (0..self.num_roots()).map(|i| self.root(i)).collect()
    }

    pub fn check_root(&self, r: &SimpleRoot) -> Result<()> {
        if r.same_alphabet(self) && r.index + 1 < self.entries.len() {
            Ok(())
        } else {
            Err(Error::RootAlphabetMismatch(
                r.alphabet_name.clone(),
                self.name.clone(),
            ))
        }
    }

    /// Display of a root, used as a DOT edge label.
    pub fn root_display(&self, r: &SimpleRoot) -> String {
        format!("a[{}]", self.display(r.lo))
    }

    /// True for truncations of N (every root isotropic, letters
    /// 1/2, 1, 3/2, ...).
    pub fn is_half_family(&self) -> bool {
        matches!(self.family, Family::Half { .. })
    }

    pub fn is_mixed_family(&self) -> bool {
        matches!(self.family, Family::Mixed { .. } | Family::Half { .. })
    }

    /// For `Mixed { m, .. }` returns m, for `Half` returns 0.
    pub fn mixed_m(&self) -> Option<usize> {
        match self.family {
            Family::Half { .. } => Some(0),
            Family::Mixed { m, .. } => Some(m),
            _ => None,
        }
    }
}

fn half_entries(bound2: i64) -> Result<Vec<LetterEntry>> {
    if bound2 < 1 {
        return Err(Error::EmptyAlphabet);
    }
    Ok((1..=bound2)
        .map(|v| LetterEntry {
            display: display_of_val2(v),
            parity: if v % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            },
        })
        .collect())
}

/// The canonical maximal-isotropic shuffle of `[m|n]` for m >= n >= 1:
/// -m, ..., -(n+1), then 1, -n, 2, -(n-1), ..., n, -1.
fn omega_order(base: &GradedAlphabet) -> Result<Vec<String>> {
    let (m, n) = match base.family {
        Family::Mn { m, n } => (m, n),
        _ => {
            return Err(Error::BadAlphabetSpec(format!(
                "omega is only defined on mn alphabets, got `{}`",
                base.name
            )))
        }
    };
    if n < 1 || m < n {
        return Err(Error::BadAlphabetSpec(format!(
            "omega needs m >= n >= 1, got [{m}|{n}]"
        )));
    }
    let mut order = Vec::with_capacity(m + n);
    for k in 0..(m - n) {
        order.push(format!("{}", -(m as i64) + k as i64));
    }
    for j in 1..=n {
        order.push(format!("{j}"));
        order.push(format!("{}", -(n as i64) + j as i64 - 1));
    }
    Ok(order)
}
