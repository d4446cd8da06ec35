use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::BrauerDiagram;
use crate::coeffs::{NPoly, One, Rational, Ring, Zero};
use crate::error::{Error, Result};

/// Element of `B(n,N)`: a finite combination of diagrams with coefficients
/// polynomial in `N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<BrauerDiagram, NPoly>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(BrauerDiagram::identity(n))
    }

    pub fn from_diagram(d: BrauerDiagram) -> Self {
        Self::term(d, NPoly::one())
    }

    pub fn term(d: BrauerDiagram, c: NPoly) -> Self {
        let mut e = Self::zero(d.n());
        e.add_term(d, c);
        e
    }

    pub fn scalar(n: usize, c: NPoly) -> Self {
        Self::term(BrauerDiagram::identity(n), c)
    }

    pub fn s(k: usize, n: usize) -> Result<Self> {
        Ok(Self::from_diagram(BrauerDiagram::s(k, n)?))
    }

    pub fn sbar(k: usize, n: usize) -> Result<Self> {
        Ok(Self::from_diagram(BrauerDiagram::sbar(k, n)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &NPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> NPoly {
        self.terms.get(d).cloned().unwrap_or_else(NPoly::zero)
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: NPoly) {
        assert_eq!(d.n(), self.n, "diagram size differs from element size");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "size mismatch in addition");
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&NPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &NPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x.mul_ref(c));
        }
        out
    }

    /// Bilinear extension of diagram composition; each loop contributes `N`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(self.multiply_with(other, |a, b| a.compose(b).expect("sizes checked")))
    }

    /// Multiplication with a caller-supplied diagram product rule.
    pub fn multiply_with(
        &self,
        other: &Self,
        rule: impl Fn(&BrauerDiagram, &BrauerDiagram) -> (BrauerDiagram, usize),
    ) -> Self {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (d, loops) = rule(a, b);
                out.add_term(d, ca.mul_ref(cb).mul_ref(&NPoly::n_pow(loops)));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        (self * other).sub(&(other * self))
    }

    pub fn embed(&self, m: usize) -> Self {
        self.map_diagrams(m, |d| d.embed(m))
    }

    pub fn shift(&self, m: usize) -> Self {
        self.map_diagrams(self.n + m, |d| d.shift(m))
    }

    /// Image under the anti-involution exchanging the rows.
    pub fn flip(&self) -> Self {
        self.map_diagrams(self.n, |d| d.flip())
    }

    /// Rewrites an element supported on `B(k) ⊂ B(n)` as an element of `B(k)`.
    pub fn restrict(&self, k: usize) -> Result<Self> {
        let mut out = Self::zero(k);
        for (d, c) in &self.terms {
            let r = d.restrict(k).ok_or(Error::NotInSubalgebra(k))?;
            out.add_term(r, c.clone());
        }
        Ok(out)
    }

    fn map_diagrams(&self, m: usize, f: impl Fn(&BrauerDiagram) -> BrauerDiagram) -> Self {
        let mut out = Self::zero(m);
        for (d, c) in &self.terms {
            out.add_term(f(d), c.clone());
        }
        out
    }

    /// Closes the last strand: returns `b′ ∈ B(n-1)` with
    /// `s̄_n b s̄_n = b′ s̄_n` in `B(n+1)`.
    pub fn partial_closure(&self) -> Result<Self> {
        let n = self.n;
        if n == 0 {
            return Err(Error::NotInSubalgebra(0));
        }
        let mut out = Self::zero(n - 1);
        for (d, c) in &self.terms {
            let (closed, loop_factor) = close_last_strand(d);
            out.add_term(closed, c.mul_ref(&NPoly::n_pow(loop_factor)));
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `N = at`.
    pub fn specialize(&self, at: &Rational) -> Vec<(BrauerDiagram, Rational)> {
        self.terms
            .iter()
            .map(|(d, c)| (d.clone(), c.eval(at)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

fn close_last_strand(d: &BrauerDiagram) -> (BrauerDiagram, usize) {
    let n = d.n();
    let top = n - 1;
    let bottom = 2 * n - 1;
    if d.partner(top) == bottom {
        return (d.restrict(n - 1).expect("vertical last strand"), 1);
    }
    let p = d.partner(top);
    let q = d.partner(bottom);
    let m = n - 1;
    let map = |v: usize| if v < n { v } else { v - n + m };
    let mut pairing = vec![0; 2 * m];
    for v in (0..m).chain(n..n + m) {
        let w = if v == p {
            q
        } else if v == q {
            p
        } else {
            d.partner(v)
        };
        pairing[map(v)] = map(w);
    }
    (BrauerDiagram::from_pairing(m, pairing).expect("closure is a matching"), 0)
}

impl<'a> std::ops::Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;

    /// Panics on size mismatch; use [`AlgebraElement::multiply`] for a checked product.
    fn mul(self, other: &AlgebraElement) -> AlgebraElement {
        self.multiply(other).expect("size mismatch in product")
    }
}

/// The Jucys-Murphy element `x_k = (N-1)/2 + Σ_{l<k} ((k,l) - bar(k,l))` in `B(n)`.
pub fn jucys_murphy(k: usize, n: usize) -> Result<AlgebraElement> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("x_{k} in B({n})")));
    }
    let mut x = AlgebraElement::scalar(n, NPoly::half_n_minus_one());
    for l in 1..k {
        x.add_term(BrauerDiagram::transposition(l, k, n)?, NPoly::one());
        x.add_term(BrauerDiagram::bar_transposition(l, k, n)?, NPoly::from_int(-1));
    }
    Ok(x)
}

/// The central element `z_k^{(i)} ∈ B(k-1)` obtained by closing `x_k^i`.
pub fn z_element(k: usize, i: u32) -> Result<AlgebraElement> {
    jucys_murphy(k, k)?.pow(i).partial_closure()
}

/// Power sum `x_1^i + … + x_n^i`.
pub fn power_sum(i: u32, n: usize) -> Result<AlgebraElement> {
    let mut acc = AlgebraElement::zero(n);
    for k in 1..=n {
        acc = acc.add(&jucys_murphy(k, n)?.pow(i));
    }
    Ok(acc)
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c})*{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}): {self}", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    diagram: BrauerDiagram,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(d, c)| TermJson { coeff: c.to_string(), diagram: d.clone() })
            .collect();
        v.serialize(s)
    }
}

impl AlgebraElement {
    /// Parses the JSON term list; the size must be given since the list may be empty.
    pub fn from_json(n: usize, v: &serde_json::Value) -> Result<Self> {
        let terms: Vec<TermJson> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(n);
        for t in terms {
            if t.diagram.n() != n {
                return Err(Error::SizeMismatch(t.diagram.n(), n));
            }
            out.add_term(t.diagram, t.coeff.parse()?);
        }
        Ok(out)
    }
}

impl BrauerDiagram {
    /// Reads either an edge list `"1-2 1b-2b 3-3b"` (brackets optional) or a
    /// generator word `"s1 sbar2"`, read left to right; the empty word is the identity.
    pub fn parse_spec(n: usize, s: &str) -> Result<AlgebraElement> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.contains('-') {
            let mut edges = Vec::new();
            for e in s.split_whitespace() {
                let (a, b) = e.split_once('-').ok_or_else(|| Error::Parse(format!("bad edge {e:?}")))?;
                edges.push((super::parse_vertex_label(a, n)?, super::parse_vertex_label(b, n)?));
            }
            return Ok(AlgebraElement::from_diagram(BrauerDiagram::from_edges(n, &edges)?));
        }
        let mut acc = AlgebraElement::identity(n);
        for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("bad generator {tok:?}"));
            let g = if let Some(k) = tok.strip_prefix("sbar") {
                AlgebraElement::sbar(k.parse().map_err(|_| bad())?, n)?
            } else if let Some(k) = tok.strip_prefix('s') {
                AlgebraElement::s(k.parse().map_err(|_| bad())?, n)?
            } else {
                return Err(bad());
            };
            acc = acc.multiply(&g)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;

    fn n_poly() -> NPoly {
        NPoly::n()
    }

    #[test]
    fn parse_spec_forms() {
        let a = BrauerDiagram::parse_spec(3, "s1 sbar2").unwrap();
        let b = BrauerDiagram::parse_spec(3, "[1-3 2-1b 2b-3b]").unwrap();
        assert_eq!(a, &AlgebraElement::s(1, 3).unwrap() * &AlgebraElement::sbar(2, 3).unwrap());
        assert_eq!(a, b);
        assert_eq!(BrauerDiagram::parse_spec(2, "").unwrap(), AlgebraElement::identity(2));
        assert!(BrauerDiagram::parse_spec(2, "t1").is_err());
        assert!(BrauerDiagram::parse_spec(2, "1-3").is_err());
    }

    #[test]
    fn generator_squares() {
        let s = AlgebraElement::s(1, 2).unwrap();
        assert_eq!(&s * &s, AlgebraElement::identity(2));
        let e = AlgebraElement::sbar(1, 2).unwrap();
        assert_eq!(&e * &e, e.scale(&n_poly()));
    }

    #[test]
    fn jucys_murphy_small_cases() {
        let x1 = jucys_murphy(1, 3).unwrap();
        assert_eq!(x1, AlgebraElement::scalar(3, NPoly::half_n_minus_one()));
        let x2 = jucys_murphy(2, 2).unwrap();
        assert_eq!(x2.len(), 3);
        assert_eq!(x2.coeff(&BrauerDiagram::s(1, 2).unwrap()), NPoly::one());
        assert_eq!(x2.coeff(&BrauerDiagram::sbar(1, 2).unwrap()), NPoly::from_int(-1));
        let x3 = jucys_murphy(3, 3).unwrap();
        assert!(x2.embed(3).commutator(&x3).is_zero());
        assert!(x3.commutator(&AlgebraElement::sbar(1, 3).unwrap()).is_zero());
        assert!(jucys_murphy(4, 3).is_err());
    }

    #[test]
    fn closures() {
        let one = AlgebraElement::identity(1).partial_closure().unwrap();
        assert_eq!(one, AlgebraElement::scalar(0, n_poly()));

        let x1 = jucys_murphy(1, 1).unwrap().partial_closure().unwrap();
        assert_eq!(x1, AlgebraElement::scalar(0, n_poly().mul_ref(&NPoly::half_n_minus_one())));

        let e = AlgebraElement::sbar(1, 2).unwrap().partial_closure().unwrap();
        assert_eq!(e, AlgebraElement::identity(1));
    }

    #[test]
    fn closure_matches_defining_identity() {
        // s̄_k b s̄_k = b′ s̄_k in B(k+1) for every diagram b of B(k).
        for k in 1..=3 {
            let sb = AlgebraElement::sbar(k, k + 1).unwrap();
            for d in BrauerDiagram::all(k) {
                let b = AlgebraElement::from_diagram(d);
                let lhs = &(&sb * &b.embed(k + 1)) * &sb;
                let rhs = &b.partial_closure().unwrap().embed(k + 1) * &sb;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn z_elements() {
        let half = NPoly::half_n_minus_one();
        for i in 0..4 {
            let z = z_element(1, i).unwrap();
            assert_eq!(z, AlgebraElement::scalar(0, n_poly().mul_ref(&half.pow(i))));
        }
        for k in 1..4 {
            assert_eq!(z_element(k, 0).unwrap(), AlgebraElement::scalar(k - 1, n_poly()));
        }
        let z21 = z_element(2, 1).unwrap();
        assert_eq!(z21, AlgebraElement::scalar(1, n_poly().mul_ref(&half)));
    }

    #[test]
    fn specialization_drops_vanishing_terms() {
        let x2 = jucys_murphy(2, 2).unwrap();
        let sp = x2.specialize(&rat(1, 1));
        assert_eq!(sp.len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let x = jucys_murphy(3, 3).unwrap();
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(AlgebraElement::from_json(3, &v).unwrap(), x);
    }
}
