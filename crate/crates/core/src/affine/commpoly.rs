use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coeffs::{NPoly, Rational, Ring, USeries};
use crate::repform::box_factor;

/// Exponent vectors `(y_1.., w_2, w_4, ..)` of a commutative monomial; both
/// are kept without trailing zeros.
pub type CommKey = (Vec<u32>, Vec<u32>);

/// Polynomial in commuting `y_k` and the even central elements
/// `w_2, w_4, …` with coefficients in `ℚ[N]`.
///
/// Odd `w_i` are never stored: [`CommPoly::w`] expresses them through the
/// even ones, with `w_0 = N`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CommPoly {
    terms: BTreeMap<CommKey, NPoly>,
}

pub(crate) fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

thread_local! {
    static W_CACHE: RefCell<HashMap<u32, CommPoly>> = RefCell::new(HashMap::new());
}

impl CommPoly {
    pub(crate) fn zero_value() -> Self {
        CommPoly::default()
    }

    pub(crate) fn one_value() -> Self {
        Self::constant(NPoly::one_value())
    }

    pub(crate) fn is_zero_value(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(c: NPoly) -> Self {
        Self::monomial(Vec::new(), Vec::new(), c)
    }

    pub fn monomial(y: Vec<u32>, w: Vec<u32>, c: NPoly) -> Self {
        let mut p = CommPoly::default();
        p.add_term((trim(y), trim(w)), c);
        p
    }

    /// `y_k`, 1-based.
    pub fn y(k: usize) -> Self {
        let mut e = vec![0; k];
        e[k - 1] = 1;
        Self::monomial(e, Vec::new(), NPoly::one_value())
    }

    /// The central element `w_i`: `N` for `i = 0`, a variable for even
    /// `i`, and for odd `i` the polynomial given by
    /// `-2 w_i = w_{i-1} + Σ_{j=1}^{i} (-1)^j w_{i-j} w_{j-1}`.
    pub fn w(i: u32) -> Self {
        if i == 0 {
            return Self::constant(NPoly::n());
        }
        if i % 2 == 0 {
            let mut e = vec![0; (i / 2) as usize];
            e[(i / 2 - 1) as usize] = 1;
            return Self::monomial(Vec::new(), e, NPoly::one_value());
        }
        if let Some(p) = W_CACHE.with(|c| c.borrow().get(&i).cloned()) {
            return p;
        }
        let mut rhs = Self::w(i - 1);
        for j in 1..=i {
            let t = Self::w(i - j).mul_ref(&Self::w(j - 1));
            rhs = if j % 2 == 0 { rhs.add_ref(&t) } else { rhs.sub_ref(&t) };
        }
        let p = rhs.scale(&NPoly::constant(Rational::new((-1).into(), 2.into())));
        W_CACHE.with(|c| c.borrow_mut().insert(i, p.clone()));
        p
    }

    pub(crate) fn add_term(&mut self, key: CommKey, c: NPoly) {
        if c.is_zero_value() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(NPoly::zero_value);
        *e = e.add_ref(&c);
        if e.is_zero_value() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CommKey, &NPoly)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &NPoly) -> Self {
        let mut out = CommPoly::default();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul_ref(c));
        }
        out
    }

    /// Highest `y`-degree among the terms.
    pub fn y_degree(&self) -> u32 {
        self.terms.keys().map(|(y, _)| y.iter().sum()).max().unwrap_or(0)
    }

    /// Evaluates every `w_{2i}` through `f` and every `y_k` through `y`.
    pub fn eval<T: Ring>(&self, y: impl Fn(usize) -> T, f: impl Fn(u32) -> T, coeff: impl Fn(&NPoly) -> T) -> T {
        let mut acc = T::zero();
        for ((ye, we), c) in &self.terms {
            let mut t = coeff(c);
            for (k, &e) in ye.iter().enumerate() {
                t = t.mul_ref(&y(k + 1).pow(e));
            }
            for (i, &e) in we.iter().enumerate() {
                t = t.mul_ref(&f(2 * (i as u32 + 1)).pow(e));
            }
            acc = acc.add_ref(&t);
        }
        acc
    }
}

crate::coeffs::ring_ops!(CommPoly);

impl Ring for CommPoly {
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = CommPoly::default();
        for ((ya, wa), ca) in &self.terms {
            for ((yb, wb), cb) in &other.terms {
                out.add_term((add_exps(ya, yb), add_exps(wa, wb)), ca.mul_ref(cb));
            }
        }
        out
    }

    fn neg_ref(&self) -> Self {
        self.scale(&NPoly::from_int(-1))
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(NPoly::constant(q.clone()))
    }
}

fn fmt_vars(f: &mut fmt::Formatter<'_>, name: &str, exps: &[u32], index: impl Fn(usize) -> usize) -> fmt::Result {
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => write!(f, " {name}{}", index(i))?,
            _ => write!(f, " {name}{}^{e}", index(i))?,
        }
    }
    Ok(())
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((y, w), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            fmt_vars(f, "y", y, |i| i + 1)?;
            fmt_vars(f, "w", w, |i| 2 * (i + 1))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `W_k(u) = Σ_i w_k^{(i)} u^{-i}` to order `order`, from `W_1(u) = Σ w_i u^{-i}`
/// and `W_{l+1}(u) + u - 1/2 = (W_l(u) + u - 1/2)·F(y_l)` with
/// `F(y) = ((u+y)²-1)/((u-y)²-1) · (u-y)²/(u+y)²`.
pub fn w_series(k: usize, order: usize) -> USeries<CommPoly> {
    assert!(k >= 1, "W_k is defined for k ≥ 1");
    let top = order + k;
    let mut w = USeries::from_coeffs((0..=top as u32).map(CommPoly::w).collect());
    let half = CommPoly::from_rational(&Rational::new(1.into(), 2.into()));
    for l in 1..k {
        let shifted = w.add(&USeries::u_plus(half.neg_ref(), w.order()));
        let f = box_factor(&CommPoly::y(l), w.order());
        let prod = shifted.mul(&f);
        w = prod.sub(&USeries::u_plus(half.neg_ref(), prod.order()));
    }
    w.truncate(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;

    #[test]
    fn first_odd_w() {
        let w1 = CommPoly::w(1);
        let expect = NPoly::from_coeffs(vec![rat(0, 1), rat(-1, 2), rat(1, 2)]);
        assert_eq!(w1, CommPoly::constant(expect));
        // -2 w_3 = w_2 - 2N w_2 + w_1²
        let w3 = CommPoly::w(3);
        let rhs = CommPoly::w(2)
            .sub_ref(&CommPoly::w(2).scale(&NPoly::n().scale(&rat(2, 1))))
            .add_ref(&w1.mul_ref(&w1));
        assert_eq!(w3.scale(&NPoly::from_int(-2)), rhs);
    }

    #[test]
    fn first_series_is_w() {
        let s = w_series(1, 4);
        for i in 0..=4 {
            assert_eq!(s.coeff(i as usize), &CommPoly::w(i));
        }
        let s2 = w_series(2, 3);
        assert_eq!(s2.coeff(0), &CommPoly::constant(NPoly::n()));
        assert_eq!(s2.order(), 3);
    }
}
