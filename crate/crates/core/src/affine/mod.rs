//! The affine Brauer algebra `A(n,N)`: `B(n,N)` together with commuting
//! `y_1..y_n` and central `w_1, w_2, …`, computed in the basis of regular
//! monomials `y^a · γ · y^b · w_2^{h_2} w_4^{h_4} ⋯`.

mod commpoly;
mod engine;
mod hecke;
mod pi;

pub use commpoly::{w_series, CommPoly};
pub use hecke::{hecke_quotient, hecke_word, HeckeElement};
pub use pi::{is_zero_via_faithfulness, pi_m, pi_word};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::coeffs::{NPoly, Rational, Ring};
use crate::diagrams::{BrauerDiagram, Generator};
use crate::error::{Error, Result};

/// A letter of a word in `A(n,N)`; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineLetter {
    S(usize),
    SBar(usize),
    Y(usize),
    W(u32),
}

impl From<Generator> for AffineLetter {
    fn from(g: Generator) -> Self {
        match g {
            Generator::S(k) => AffineLetter::S(k),
            Generator::SBar(k) => AffineLetter::SBar(k),
        }
    }
}

impl fmt::Display for AffineLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineLetter::S(k) => write!(f, "s{k}"),
            AffineLetter::SBar(k) => write!(f, "sbar{k}"),
            AffineLetter::Y(k) => write!(f, "y{k}"),
            AffineLetter::W(i) => write!(f, "w{i}"),
        }
    }
}

impl FromStr for AffineLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown letter {s:?}"));
        let (ctor, rest): (fn(usize) -> AffineLetter, &str) = if let Some(r) = s.strip_prefix("sbar") {
            (AffineLetter::SBar, r)
        } else if let Some(r) = s.strip_prefix('s') {
            (AffineLetter::S, r)
        } else if let Some(r) = s.strip_prefix('y') {
            (AffineLetter::Y, r)
        } else if let Some(r) = s.strip_prefix('w') {
            return r.parse().map(AffineLetter::W).map_err(|_| bad());
        } else {
            return Err(bad());
        };
        rest.parse().map(ctor).map_err(|_| bad())
    }
}

/// Parses a whitespace-separated word such as `"s1 y1^2 sbar1 w2"` and
/// checks the indices against `n`. `^p` repeats a letter.
pub fn parse_word(n: usize, s: &str) -> Result<Vec<AffineLetter>> {
    let mut word = Vec::new();
    for tok in s.split_whitespace() {
        let (l, p) = match tok.split_once('^') {
            Some((l, p)) => (l, p.parse().map_err(|_| Error::Parse(format!("bad power in {tok:?}")))?),
            None => (tok, 1usize),
        };
        let l: AffineLetter = l.parse()?;
        word.extend(std::iter::repeat(l).take(p));
    }
    for l in &word {
        let ok = match *l {
            AffineLetter::S(k) | AffineLetter::SBar(k) => k >= 1 && k < n,
            AffineLetter::Y(k) => k >= 1 && k <= n,
            AffineLetter::W(_) => true,
        };
        if !ok {
            return Err(Error::OutOfRange(format!("{l} in A({n},N)")));
        }
    }
    Ok(word)
}

/// `y^left · γ · y^right · ∏ w_{2i}^{w[i-1]}`.
///
/// Regularity: `left[k] = 0` when `k` is the right end of a top horizontal
/// edge of `γ`, and `right[k] ≠ 0` only when `k̄` is the right end of a
/// bottom horizontal edge.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularMonomial {
    pub left: Vec<u32>,
    pub diagram: BrauerDiagram,
    pub right: Vec<u32>,
    pub w: Vec<u32>,
}

impl RegularMonomial {
    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    pub fn identity(n: usize) -> Self {
        RegularMonomial { left: vec![0; n], diagram: BrauerDiagram::identity(n), right: vec![0; n], w: Vec::new() }
    }

    pub fn is_regular(&self) -> bool {
        let d = &self.diagram;
        let n = d.n();
        (0..n).all(|k| self.left[k] == 0 || left_ok(d, k)) && (0..n).all(|k| self.right[k] == 0 || right_ok(d, k))
    }

    /// Total `y`-degree.
    pub fn y_degree(&self) -> u32 {
        self.left.iter().chain(&self.right).sum()
    }

    /// `Σ i_k + Σ j_k + Σ 2i·h_{2i}`, the filtration weight used by the
    /// faithfulness test.
    pub fn weight(&self) -> u32 {
        self.y_degree() + self.w.iter().enumerate().map(|(i, h)| 2 * (i as u32 + 1) * h).sum::<u32>()
    }

    /// The word `y^left · (factorization of γ) · y^right · w's`.
    pub fn word(&self) -> Vec<AffineLetter> {
        let mut out = Vec::new();
        for (k, &e) in self.left.iter().enumerate() {
            out.extend(std::iter::repeat(AffineLetter::Y(k + 1)).take(e as usize));
        }
        out.extend(self.diagram.factorize().word().into_iter().map(AffineLetter::from));
        for (k, &e) in self.right.iter().enumerate() {
            out.extend(std::iter::repeat(AffineLetter::Y(k + 1)).take(e as usize));
        }
        for (i, &e) in self.w.iter().enumerate() {
            out.extend(std::iter::repeat(AffineLetter::W(2 * (i as u32 + 1))).take(e as usize));
        }
        out
    }
}

/// `k` (0-based) may carry a left `y`: a through strand or the left end of a top edge.
pub(crate) fn left_ok(d: &BrauerDiagram, k: usize) -> bool {
    let p = d.partner(k);
    p >= d.n() || p > k
}

/// `k̄` (0-based) may carry a right `y`: the right end of a bottom edge.
pub(crate) fn right_ok(d: &BrauerDiagram, k: usize) -> bool {
    let n = d.n();
    let p = d.partner(n + k);
    p >= n && p - n < k
}

fn fmt_exps(f: &mut fmt::Formatter<'_>, e: &[u32], name: &str, index: impl Fn(usize) -> usize) -> fmt::Result {
    for (i, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => write!(f, "{name}{} ", index(i))?,
            _ => write!(f, "{name}{}^{x} ", index(i))?,
        }
    }
    Ok(())
}

impl fmt::Display for RegularMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_exps(f, &self.left, "y", |i| i + 1)?;
        write!(f, "{} ", self.diagram)?;
        fmt_exps(f, &self.right, "y", |i| i + 1)?;
        fmt_exps(f, &self.w, "w", |i| 2 * (i + 1))
    }
}

impl fmt::Debug for RegularMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string().trim_end())
    }
}

impl Serialize for RegularMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RegularMonomial", 4)?;
        st.serialize_field("left", &self.left)?;
        st.serialize_field("diagram", &self.diagram)?;
        st.serialize_field("right", &self.right)?;
        let w: BTreeMap<String, u32> = self
            .w
            .iter()
            .enumerate()
            .filter(|(_, &h)| h > 0)
            .map(|(i, &h)| ((2 * (i + 1)).to_string(), h))
            .collect();
        st.serialize_field("w", &w)?;
        st.end()
    }
}

/// Element of `A(n,N)` in the regular-monomial basis.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineElement {
    n: usize,
    terms: BTreeMap<RegularMonomial, NPoly>,
}

impl AffineElement {
    pub fn zero(n: usize) -> Self {
        AffineElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::monomial(RegularMonomial::identity(n), NPoly::one_value())
    }

    /// A single regular monomial; panics if it is not regular.
    pub fn monomial(m: RegularMonomial, c: NPoly) -> Self {
        assert!(m.is_regular(), "monomial {m} is not regular");
        let mut e = Self::zero(m.n());
        e.add_term(m, c);
        e
    }

    /// The normal form of a word.
    pub fn from_word(n: usize, word: &[AffineLetter]) -> Self {
        word.iter().fold(Self::identity(n), |acc, &l| engine::mul_letter(&acc, l))
    }

    /// Parses and normalizes a word like `"s1 y1 sbar1"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        Ok(Self::from_word(n, &parse_word(n, s)?))
    }

    pub fn generator(n: usize, l: AffineLetter) -> Self {
        Self::from_word(n, &[l])
    }

    /// Embeds a commutative polynomial in the `y`'s and `w`'s.
    pub fn from_comm(n: usize, p: &CommPoly) -> Self {
        let mut out = Self::zero(n);
        for ((y, w), c) in p.terms() {
            let mut left = y.clone();
            assert!(left.len() <= n, "y index beyond n");
            left.resize(n, 0);
            let m = RegularMonomial { left, diagram: BrauerDiagram::identity(n), right: vec![0; n], w: w.clone() };
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RegularMonomial, &NPoly)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, m: RegularMonomial, c: NPoly) {
        if c.is_zero_value() {
            return;
        }
        debug_assert!(m.is_regular(), "irregular monomial {m}");
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = e.add_ref(&c);
                if e.is_zero_value() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&NPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &NPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul_ref(c));
        }
        out
    }

    /// Product in `A(n,N)`, rewritten into regular monomials.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(engine::multiply(self, other))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        (self * other).sub(&(other * self))
    }

    /// Highest total `y`-degree of a term.
    pub fn y_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.y_degree()).max().unwrap_or(0)
    }

    /// Highest filtration weight of a term.
    pub fn weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    /// Evaluates coefficients at a value of `N`, for display.
    pub fn specialize(&self, at: &Rational) -> Vec<(RegularMonomial, Rational)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), c.eval(at)))
            .filter(|(_, c)| *c != Rational::from_integer(0.into()))
            .collect()
    }
}

impl<'a> std::ops::Mul<&'a AffineElement> for &'a AffineElement {
    type Output = AffineElement;

    /// Panics on size mismatch; use [`AffineElement::multiply`] for a checked product.
    fn mul(self, other: &AffineElement) -> AffineElement {
        self.multiply(other).expect("size mismatch in product")
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c}) {}", m.to_string().trim_end())).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({}): {self}", self.n)
    }
}

impl Serialize for AffineElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            monomial: &'a RegularMonomial,
        }
        let v: Vec<Term> = self.terms.iter().map(|(m, c)| Term { coeff: c.to_string(), monomial: m }).collect();
        v.serialize(s)
    }
}

/// The defining relations of `A(n,N)` beyond those of `B(n,N)`, each as a
/// list of `(coefficient, word)` summing to zero; `(4.45)`-type relations
/// `s̄_1 y_1^i s̄_1 = w_i s̄_1` are included for `i ≤ max_i`.
pub fn affine_relations(n: usize, max_i: u32) -> Vec<(String, Vec<(i64, Vec<AffineLetter>)>)> {
    use AffineLetter::*;
    let mut out = Vec::new();
    for k in 1..n {
        for l in (1..=n).filter(|&l| l != k && l != k + 1) {
            out.push((format!("s{k} y{l} = y{l} s{k}"), vec![(1, vec![S(k), Y(l)]), (-1, vec![Y(l), S(k)])]));
            out.push((format!("sbar{k} y{l} = y{l} sbar{k}"), vec![(1, vec![SBar(k), Y(l)]), (-1, vec![Y(l), SBar(k)])]));
        }
        let k1 = k + 1;
        out.push((
            format!("s{k} y{k} - y{k1} s{k} = sbar{k} - 1"),
            vec![(1, vec![S(k), Y(k)]), (-1, vec![Y(k1), S(k)]), (-1, vec![SBar(k)]), (1, vec![])],
        ));
        out.push((
            format!("s{k} y{k1} - y{k} s{k} = 1 - sbar{k}"),
            vec![(1, vec![S(k), Y(k1)]), (-1, vec![Y(k), S(k)]), (-1, vec![]), (1, vec![SBar(k)])],
        ));
        out.push((format!("sbar{k} (y{k} + y{k1}) = 0"), vec![(1, vec![SBar(k), Y(k)]), (1, vec![SBar(k), Y(k1)])]));
        out.push((format!("(y{k} + y{k1}) sbar{k} = 0"), vec![(1, vec![Y(k), SBar(k)]), (1, vec![Y(k1), SBar(k)])]));
    }
    for k in 1..=n {
        for l in k + 1..=n {
            out.push((format!("y{k} y{l} = y{l} y{k}"), vec![(1, vec![Y(k), Y(l)]), (-1, vec![Y(l), Y(k)])]));
        }
    }
    if n >= 2 {
        for i in 0..=max_i {
            let mut lhs = vec![SBar(1)];
            lhs.extend(std::iter::repeat(Y(1)).take(i as usize));
            lhs.push(SBar(1));
            out.push((format!("sbar1 y1^{i} sbar1 = w{i} sbar1"), vec![(1, lhs), (-1, vec![W(i), SBar(1)])]));
        }
    }
    out
}

/// All regular monomials of `A(n,N)` with filtration weight at most `max_weight`.
pub fn regular_monomials(n: usize, max_weight: u32) -> Vec<RegularMonomial> {
    fn exps(slots: &[usize], n: usize, budget: u32, out: &mut Vec<(Vec<u32>, u32)>) {
        fn rec(slots: &[usize], cur: &mut Vec<u32>, left: u32, out: &mut Vec<(Vec<u32>, u32)>, used: u32) {
            match slots.split_first() {
                None => out.push((cur.clone(), used)),
                Some((&s, rest)) => {
                    for e in 0..=left {
                        cur[s] = e;
                        rec(rest, cur, left - e, out, used + e);
                    }
                    cur[s] = 0;
                }
            }
        }
        rec(slots, &mut vec![0; n], budget, out, 0);
    }
    fn w_vectors(i: u32, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, u32)>, used: u32) {
        if 2 * i > budget {
            out.push((commpoly::trim(cur.clone()), used));
            return;
        }
        for h in 0..=budget / (2 * i) {
            cur.push(h);
            w_vectors(i + 1, budget - 2 * i * h, cur, out, used + 2 * i * h);
            cur.pop();
        }
    }
    let mut ws = Vec::new();
    w_vectors(1, max_weight, &mut Vec::new(), &mut ws, 0);
    let mut out = Vec::new();
    for d in BrauerDiagram::all(n) {
        let ls: Vec<usize> = (0..n).filter(|&k| left_ok(&d, k)).collect();
        let rs: Vec<usize> = (0..n).filter(|&k| right_ok(&d, k)).collect();
        for (w, wc) in &ws {
            let budget = max_weight - wc;
            let mut lefts = Vec::new();
            exps(&ls, n, budget, &mut lefts);
            for (left, lu) in lefts {
                let mut rights = Vec::new();
                exps(&rs, n, budget - lu, &mut rights);
                for (right, _) in rights {
                    out.push(RegularMonomial { left: left.clone(), diagram: d.clone(), right, w: w.clone() });
                }
            }
        }
    }
    out.sort();
    out
}

/// Rank of the `π_m` images of the given monomials, at a value of `N`.
pub fn pi_rank(monos: &[RegularMonomial], m: usize, at: &Rational) -> Result<usize> {
    let n = monos.first().map_or(0, |x| x.n());
    let basis = BrauerDiagram::all(m + n);
    let mut rows = Vec::new();
    for x in monos {
        let img = pi_m(&AffineElement::monomial(x.clone(), NPoly::one_value()), m)?;
        let vals: BTreeMap<BrauerDiagram, Rational> = img.specialize(at).into_iter().collect();
        rows.push(basis.iter().map(|d| vals.get(d).cloned().unwrap_or_default()).collect());
    }
    Ok(crate::tensor::rank(rows))
}

/// Normal form of a signed combination of words.
pub fn combination(n: usize, terms: &[(i64, Vec<AffineLetter>)]) -> AffineElement {
    terms.iter().fold(AffineElement::zero(n), |acc, (c, w)| {
        acc.add(&AffineElement::from_word(n, w).scale(&NPoly::from_int(*c)))
    })
}

#[cfg(test)]
mod tests;
