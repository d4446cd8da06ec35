use std::collections::BTreeMap;
use std::fmt;

use super::commpoly::CommPoly;
use super::{AffineElement, AffineLetter};
use crate::coeffs::{NPoly, Rational, Ring};
use crate::diagrams::permutation_word;

type HKey = (Vec<u32>, Vec<usize>);

/// Element of the degenerate affine Hecke algebra in the basis `v^a · p`,
/// `p` a permutation given by 0-based images.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<HKey, NPoly>,
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn swap(n: usize, j: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(j - 1, j);
    p
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term((vec![0; n], (0..n).collect()), NPoly::one_value());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HKey, &NPoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, k: HKey, c: NPoly) {
        if c.is_zero_value() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(NPoly::zero_value);
        *e = e.add_ref(&c);
        if e.is_zero_value() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &NPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul_ref(c));
        }
        out
    }

    fn mul_s(&self, j: usize) -> Self {
        let s = swap(self.n, j);
        let mut out = Self::zero(self.n);
        for ((v, p), c) in &self.terms {
            out.add_term((v.clone(), compose(p, &s)), c.clone());
        }
        out
    }

    /// Right multiplication by `v_k`, 0-based, moved left through `p`.
    fn mul_v(&self, k: usize) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for ((v, p), c) in &self.terms {
            let word = permutation_word(p);
            let mut l = k;
            for i in (0..word.len()).rev() {
                let j = word[i];
                let sign = if l == j - 1 {
                    l = j;
                    -1
                } else if l == j {
                    l = j - 1;
                    1
                } else {
                    continue;
                };
                let q = word
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i)
                    .fold((0..n).collect::<Vec<_>>(), |acc, (_, &s)| compose(&acc, &swap(n, s)));
                out.add_term((v.clone(), q), c.mul_ref(&NPoly::from_int(sign)));
            }
            let mut v2 = v.clone();
            v2[l] += 1;
            out.add_term((v2, p.clone()), c.clone());
        }
        out
    }

    fn mul_letter(&self, l: AffineLetter, f: &dyn Fn(u32) -> Rational) -> Self {
        match l {
            AffineLetter::S(j) => self.mul_s(j),
            AffineLetter::SBar(_) => Self::zero(self.n),
            AffineLetter::Y(k) => self.mul_v(k - 1),
            AffineLetter::W(i) => self.scale(&w_image(&CommPoly::w(i), f)),
        }
    }
}

/// Value of a polynomial in the `w`'s with `w_{2i} ↦ f(2i)`; `N` stays symbolic.
fn w_image(p: &CommPoly, f: &dyn Fn(u32) -> Rational) -> NPoly {
    p.eval(|_| panic!("y in a central factor"), |i| NPoly::constant(f(i)), |c| c.clone())
}

/// The quotient map onto the degenerate affine Hecke algebra: `s̄_k ↦ 0`,
/// `y_k ↦ v_k` and `w_{2i} ↦ f(2i)`.
pub fn hecke_quotient(x: &AffineElement, f: &dyn Fn(u32) -> Rational) -> HeckeElement {
    let n = x.n();
    let mut out = HeckeElement::zero(n);
    for (m, c) in x.terms() {
        let Some(p) = m.diagram.as_permutation() else { continue };
        let mut e = HeckeElement::zero(n);
        e.add_term((m.left.clone(), p), c.clone());
        for (k, &r) in m.right.iter().enumerate() {
            for _ in 0..r {
                e = e.mul_v(k);
            }
        }
        let w = CommPoly::monomial(Vec::new(), m.w.clone(), NPoly::one_value());
        out = out.add(&e.scale(&w_image(&w, f)));
    }
    out
}

/// Image of a word, computed letter by letter in the quotient.
pub fn hecke_word(n: usize, word: &[AffineLetter], f: &dyn Fn(u32) -> Rational) -> HeckeElement {
    word.iter().fold(HeckeElement::identity(n), |acc, &l| acc.mul_letter(l, f))
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((v, p), c)| {
                let perm: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
                format!("({c}) v{v:?} [{}]", perm.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use AffineLetter::*;

    use crate::coeffs::rat;

    fn f(i: u32) -> Rational {
        rat(i as i64 + 1, 3)
    }

    #[test]
    fn defining_relation() {
        // s_1 v_1 = v_2 s_1 - 1
        let lhs = hecke_word(2, &[S(1), Y(1)], &f);
        let rhs = hecke_word(2, &[Y(2), S(1)], &f).add(&HeckeElement::identity(2).scale(&NPoly::from_int(-1)));
        assert_eq!(lhs, rhs);
        let q = hecke_quotient(&AffineElement::parse(2, "s1 y1").unwrap(), &f);
        assert_eq!(q, rhs);
    }

    #[test]
    fn bar_is_killed() {
        assert!(hecke_word(3, &[Y(1), SBar(2), S(1)], &f).is_zero());
        assert!(hecke_quotient(&AffineElement::parse(2, "sbar1").unwrap(), &f).is_zero());
    }

    #[test]
    fn sum_of_v_is_central() {
        let s = hecke_word(2, &[S(1)], &f);
        let v = hecke_word(2, &[Y(1)], &f).add(&hecke_word(2, &[Y(2)], &f));
        let sv = hecke_word(2, &[S(1), Y(1)], &f).add(&hecke_word(2, &[S(1), Y(2)], &f));
        let vs = hecke_word(2, &[Y(1), S(1)], &f).add(&hecke_word(2, &[Y(2), S(1)], &f));
        assert_eq!(sv, vs);
        assert!(!s.is_zero() && !v.is_zero());
    }

    #[test]
    fn w_goes_to_scalars() {
        let x = hecke_word(1, &[W(2), Y(1)], &f);
        assert_eq!(x, hecke_word(1, &[Y(1)], &f).scale(&NPoly::constant(rat(1, 1))));
        // w_1 = N(N-1)/2 whatever f is
        let w1 = hecke_word(1, &[W(1)], &f);
        let c = NPoly::from_coeffs(vec![rat(0, 1), rat(-1, 2), rat(1, 2)]);
        assert_eq!(w1, HeckeElement::identity(1).scale(&c));
    }
}
