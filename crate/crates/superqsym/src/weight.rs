//! Elements of the weight lattice: finitely supported integer combinations
//! of the epsilons, one per letter.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use crate::alphabet::{GradedAlphabet, Letter, SimpleRoot};

/// A weight, stored sparsely; zero coefficients are never kept.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Weight {
    coeffs: BTreeMap<Letter, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    pub fn epsilon(l: Letter) -> Self {
        let mut w = Weight::zero();
        w.add_letter(l, 1);
        w
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, l: Letter) -> i64 {
        self.coeffs.get(&l).copied().unwrap_or(0)
    }

    pub fn add_letter(&mut self, l: Letter, c: i64) {
        let v = self.coeffs.entry(l).or_insert(0);
        *v += c;
        if *v == 0 {
            self.coeffs.remove(&l);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Letter, i64)> + '_ {
        self.coeffs.iter().map(|(l, c)| (*l, *c))
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Weight::zero();
        for l in letters {
            w.add_letter(l, 1);
        }
        w
    }

    /// The signed form `(w, eps_lo - eps_hi)`:
    /// `coeff(lo)*(-1)^{|lo|} - coeff(hi)*(-1)^{|hi|}`.
    pub fn pairing(&self, root: &SimpleRoot, alphabet: &GradedAlphabet) -> i64 {
        self.coeff(root.lo) * alphabet.sign(root.lo) - self.coeff(root.hi) * alphabet.sign(root.hi)
    }

    pub fn display(&self, alphabet: &GradedAlphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (l, c) in self.iter() {
            let name = format!("e[{}]", alphabet.display(l));
            if c == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{c}{name}"));
            }
        }
        parts.join("+")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        for (l, c) in rhs.iter() {
            out.add_letter(l, c);
        }
        out
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        for (l, c) in rhs.iter() {
            out.add_letter(l, -c);
        }
        out
    }
}

/// The dominance order on weights with respect to the simple roots:
/// `a >= b` iff `a - b` is a nonnegative integer combination of the
/// `eps_lo - eps_hi`. Equivalently, every prefix sum of `a - b` in
/// alphabet order is nonnegative and the total is zero.
pub fn weight_order_geq(a: &Weight, b: &Weight, alphabet: &GradedAlphabet) -> bool {
    let diff = a - b;
    let mut run = 0i64;
    for l in alphabet.letters() {
        run += diff.coeff(l);
        if run < 0 {
            return false;
        }
    }
    run == 0
}
