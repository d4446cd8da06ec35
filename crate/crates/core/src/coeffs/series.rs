use std::fmt;

use super::{Rational, Ring};

/// Truncated series `a·u + Σ_{i≤K} c_i u^{-i}` with an optional single
/// positive power of `u`.
///
/// Products with a `u` term consume one order of the other factor, so the
/// result order is the smallest order the inputs can determine.
#[derive(Clone, PartialEq)]
pub struct USeries<S: Ring> {
    lead: Option<S>,
    coeffs: Vec<S>,
}

/// Expansion of `(u+b)/(u-b) = 1 + 2·Σ_{i≥1} b^i u^{-i}` up to order `k`.
pub fn series_from_fraction<S: Ring>(b: &S, k: usize) -> USeries<S> {
    let two = S::from_int(2);
    let mut coeffs = Vec::with_capacity(k + 1);
    coeffs.push(S::one());
    let mut pow = S::one();
    for _ in 1..=k {
        pow = pow.mul_ref(b);
        coeffs.push(two.mul_ref(&pow));
    }
    USeries { lead: None, coeffs }
}

impl<S: Ring> USeries<S> {
    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        USeries { lead: None, coeffs }
    }

    pub fn constant(c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[0] = c;
        USeries { lead: None, coeffs }
    }

    pub fn one(k: usize) -> Self {
        Self::constant(S::one(), k)
    }

    /// `u + c`, with every negative power zero up to order `k`.
    pub fn u_plus(c: S, k: usize) -> Self {
        let mut s = Self::constant(c, k);
        s.lead = Some(S::one());
        s
    }

    /// `1 + c·u^{-1}`.
    pub fn linear(c: &S, k: usize) -> Self {
        let mut s = Self::one(k);
        if k >= 1 {
            s.coeffs[1] = c.clone();
        }
        s
    }

    /// `(1 - d·u^{-1})^{-1} = Σ d^i u^{-i}`.
    pub fn inv_linear(d: &S, k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut pow = S::one();
        coeffs.push(pow.clone());
        for _ in 1..=k {
            pow = pow.mul_ref(d);
            coeffs.push(pow.clone());
        }
        USeries { lead: None, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn lead(&self) -> Option<&S> {
        self.lead.as_ref()
    }

    /// Coefficient of `u^{-i}`.
    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn truncate(&self, k: usize) -> Self {
        assert!(k <= self.order(), "cannot extend a truncated series");
        USeries {
            lead: self.lead.clone(),
            coeffs: self.coeffs[..=k].to_vec(),
        }
    }

    fn lead_or_zero(&self) -> S {
        self.lead.clone().unwrap_or_else(S::zero)
    }

    fn normalize_lead(lead: S) -> Option<S> {
        if lead.is_zero() {
            None
        } else {
            Some(lead)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        USeries {
            lead: Self::normalize_lead(self.lead_or_zero().add_ref(&other.lead_or_zero())),
            coeffs: (0..=k).map(|i| self.coeffs[i].add_ref(&other.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        USeries {
            lead: self.lead.as_ref().map(|l| l.neg_ref()),
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        USeries {
            lead: self.lead.as_ref().map(|l| l.mul_ref(c)).and_then(Self::normalize_lead),
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    /// Product truncated to the largest order both factors determine.
    ///
    /// Panics if both factors carry a `u` term, since `u²` is not representable.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            self.lead.is_none() || other.lead.is_none(),
            "product would contain u^2"
        );
        let mut k = self.order().min(other.order());
        if self.lead.is_some() {
            k = k.min(other.order().saturating_sub(1));
        }
        if other.lead.is_some() {
            k = k.min(self.order().saturating_sub(1));
        }
        let mut coeffs = vec![S::zero(); k + 1];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let mut acc = S::zero();
            for j in 0..=i {
                acc = acc.add_ref(&self.coeffs[j].mul_ref(&other.coeffs[i - j]));
            }
            if let Some(l) = &self.lead {
                acc = acc.add_ref(&l.mul_ref(&other.coeffs[i + 1]));
            }
            if let Some(l) = &other.lead {
                acc = acc.add_ref(&l.mul_ref(&self.coeffs[i + 1]));
            }
            *slot = acc;
        }
        let lead = match (&self.lead, &other.lead) {
            (Some(l), None) => Self::normalize_lead(l.mul_ref(&other.coeffs[0])),
            (None, Some(l)) => Self::normalize_lead(l.mul_ref(&self.coeffs[0])),
            _ => None,
        };
        USeries { lead, coeffs }
    }

    /// Inverse of a series without `u` term whose constant coefficient is 1.
    pub fn inverse_unit(&self) -> Self {
        assert!(self.lead.is_none(), "cannot invert a series with a u term");
        assert!(self.coeffs[0] == S::one(), "constant term must be 1");
        let k = self.order();
        let mut inv = vec![S::zero(); k + 1];
        inv[0] = S::one();
        for i in 1..=k {
            let mut acc = S::zero();
            for j in 1..=i {
                acc = acc.add_ref(&self.coeffs[j].mul_ref(&inv[i - j]));
            }
            inv[i] = acc.neg_ref();
        }
        USeries { lead: None, coeffs: inv }
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> USeries<T> {
        USeries {
            lead: self.lead.as_ref().map(&f).filter(|l| !l.is_zero()),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl USeries<super::NPoly> {
    /// Substitutes `N = at` in every coefficient.
    pub fn eval(&self, at: &Rational) -> USeries<Rational> {
        self.map(|c| c.eval(at))
    }
}

impl<S: Ring + fmt::Display> fmt::Display for USeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(l) = &self.lead {
            parts.push(format!("({l})*u"));
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format!("({c})"),
                _ => format!("({c})*u^-{i}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(u^-{})", parts.join(" + "), self.order() + 1)
    }
}

impl<S: Ring> fmt::Debug for USeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("USeries")
            .field("lead", &self.lead)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, NPoly};
    use proptest::prelude::*;

    #[test]
    fn fraction_expansion() {
        let s = series_from_fraction(&rat(0, 1), 5);
        assert_eq!(s, USeries::one(5));

        let b = NPoly::half_n_minus_one();
        let s = series_from_fraction(&b, 2);
        assert_eq!(s.coeff(1).to_string(), "N - 1");
        assert_eq!(s.coeff(2).to_string(), "1/2*N^2 - N + 1/2");

        let p = series_from_fraction(&rat(1, 1), 4).mul(&series_from_fraction(&rat(-1, 1), 4));
        assert_eq!(p, USeries::one(4));
    }

    #[test]
    fn u_term_consumes_one_order() {
        // (u + 1/2)·(1 + 2u^{-1} + 3u^{-2}) = u + (2 + 1/2) + (3 + 1)u^{-1}
        let q = USeries::from_coeffs(vec![rat(1, 1), rat(2, 1), rat(3, 1)]);
        let p = USeries::u_plus(rat(1, 2), 2).mul(&q);
        assert_eq!(p.order(), 1);
        assert_eq!(p.lead(), Some(&rat(1, 1)));
        assert_eq!(p.coeffs(), &[rat(5, 2), rat(4, 1)]);
    }

    #[test]
    fn inverse_of_linear_factor() {
        let d = rat(3, 2);
        let a = USeries::linear(&-d.clone(), 6).inverse_unit();
        assert_eq!(a, USeries::inv_linear(&d, 6));
    }

    fn arb_series() -> impl Strategy<Value = USeries<Rational>> {
        prop::collection::vec((-9i64..10, 1i64..4), 6).prop_map(|v| {
            USeries::from_coeffs(v.into_iter().map(|(a, b)| rat(a, b)).collect())
        })
    }

    proptest! {
        #[test]
        fn multiplication_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        }
    }
}
