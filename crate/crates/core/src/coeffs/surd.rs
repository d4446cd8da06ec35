use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{format_rational, Rational, Ring};
use crate::error::Error;

/// Exact real number `Σ c_r·√r` over squarefree radicands `r ≥ 1`.
///
/// Square roots of distinct squarefree integers are linearly independent
/// over the rationals, so equal values have equal maps.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SurdSum {
    terms: BTreeMap<u64, Rational>,
}

/// Splits `r = m²·s` with `s` squarefree, by trial division.
pub fn squarefree_decompose(r: u64) -> (u64, u64) {
    let mut m = 1u64;
    let mut s = 1u64;
    let mut rest = r;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    (m, s * rest)
}

/// Non-negative square root of `q ≥ 0`: `√(a/b) = √(ab)/b`.
pub fn sqrt_of_rational(q: &Rational) -> Result<SurdSum, Error> {
    if q.is_negative() {
        return Err(Error::NegativeRadicand(format_rational(q)));
    }
    if q.is_zero() {
        return Ok(SurdSum::zero());
    }
    let ab: BigInt = q.numer() * q.denom();
    let den = Rational::from_integer(q.denom().clone());
    match ab.to_u64() {
        Some(ab) => {
            let (m, s) = squarefree_decompose(ab);
            let c = Rational::from_integer(BigInt::from(m)) / den;
            Ok(SurdSum::term(s, c))
        }
        None => {
            // Radicand too large for trial division; only exact squares are supported.
            let root = ab.sqrt();
            if &root * &root == ab {
                Ok(SurdSum::rational(Rational::from_integer(root) / den))
            } else {
                Err(Error::Overflow(format!("radicand {ab} exceeds u64")))
            }
        }
    }
}

impl SurdSum {
    pub fn rational(c: Rational) -> Self {
        Self::term(1, c)
    }

    /// `c·√r` for any positive `r`; `r` need not be squarefree.
    pub fn term(r: u64, c: Rational) -> Self {
        assert!(r > 0, "radicand must be positive");
        let mut out = SurdSum::default();
        let (m, s) = squarefree_decompose(r);
        out.add_term(s, c * Rational::from_integer(m.into()));
        out
    }

    fn add_term(&mut self, r: u64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(r).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(r, c)| (*r, c))
    }

    /// The value as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// Sign of the real value: -1, 0 or 1.
    ///
    /// Exact: picks the largest prime `p` occurring in a radicand, writes the
    /// value as `a + b·√p` with `a`, `b` free of `√p`, and recurses on `a`,
    /// `b` and `a² - p·b²`.
    pub fn signum(&self) -> i32 {
        if let Some(q) = self.as_rational() {
            return if q.is_positive() {
                1
            } else if q.is_negative() {
                -1
            } else {
                0
            };
        }
        let p = self
            .terms
            .keys()
            .map(|&r| largest_prime_factor(r))
            .max()
            .expect("non-rational sum has a radicand > 1");
        let mut a = SurdSum::default();
        let mut b = SurdSum::default();
        for (r, c) in &self.terms {
            if r % p == 0 {
                b.add_term(r / p, c.clone());
            } else {
                a.add_term(*r, c.clone());
            }
        }
        let sa = a.signum();
        let sb = b.signum();
        if sb == 0 || sa == sb {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        let pb2 = b.mul_ref(&b).mul_ref(&SurdSum::rational(Rational::from_integer(p.into())));
        let diff = a.mul_ref(&a).sub_ref(&pb2).signum();
        // |a| vs |b|√p decides which summand wins.
        if diff > 0 {
            sa
        } else if diff < 0 {
            sb
        } else {
            0
        }
    }

    /// Floating-point approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, c)| c.to_f64().unwrap_or(f64::NAN) * (*r as f64).sqrt())
            .sum()
    }

    pub(crate) fn zero_value() -> Self {
        SurdSum::default()
    }
    pub(crate) fn one_value() -> Self {
        Self::rational(Rational::one())
    }
    pub(crate) fn is_zero_value(&self) -> bool {
        self.terms.is_empty()
    }
}

fn largest_prime_factor(mut r: u64) -> u64 {
    let mut best = 1;
    let mut p = 2;
    while p * p <= r {
        while r % p == 0 {
            best = p;
            r /= p;
        }
        p += 1;
    }
    if r > 1 {
        best = best.max(r);
    }
    best
}

super::ring_ops!(SurdSum);

impl Ring for SurdSum {
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(*r, c.clone());
        }
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(*r, -c.clone());
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = SurdSum::default();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &other.terms {
                let (g, a, b) = {
                    let g = num_integer::gcd(*r1, *r2);
                    (g, r1 / g, r2 / g)
                };
                // √r1·√r2 = g·√(a·b) and a·b is squarefree since r1, r2 are.
                let c = c1 * c2 * Rational::from_integer(g.into());
                out.add_term(a * b, c);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        SurdSum {
            terms: self.terms.iter().map(|(r, c)| (*r, -c)).collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }
}

/// `[[radicand, "p/q"], …]`.
impl serde::Serialize for SurdSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (r, c) in &self.terms {
            seq.serialize_element(&(r, format_rational(c)))?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for SurdSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<(u64, String)> = serde::Deserialize::deserialize(d)?;
        let mut out = SurdSum::default();
        for (r, c) in v {
            if r == 0 {
                return Err(serde::de::Error::custom("radicand must be positive"));
            }
            let c = super::parse_rational(&c).map_err(serde::de::Error::custom)?;
            out = out.add_ref(&SurdSum::term(r, c));
        }
        Ok(out)
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, c)| {
                if *r == 1 {
                    format_rational(c)
                } else if c.is_one() {
                    format!("√{r}")
                } else {
                    format!("{}√{r}", format_rational(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurdSum({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;
    use proptest::prelude::*;

    fn sqrt_int(r: u64) -> SurdSum {
        SurdSum::term(r, Rational::one())
    }

    #[test]
    fn products_reduce_radicands() {
        assert_eq!(sqrt_int(2).mul_ref(&sqrt_int(2)), SurdSum::rational(rat(2, 1)));
        assert_eq!(sqrt_int(6).mul_ref(&sqrt_int(10)), SurdSum::term(15, rat(2, 1)));
        let x = SurdSum::term(7, rat(3, 5)).add_ref(&SurdSum::rational(rat(1, 3)));
        assert_eq!(SurdSum::one().mul_ref(&x), x);
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_of_rational(&rat(9, 4)).unwrap(), SurdSum::rational(rat(3, 2)));
        assert!(sqrt_of_rational(&rat(0, 1)).unwrap().is_zero());
        assert_eq!(sqrt_of_rational(&rat(3, 4)).unwrap(), SurdSum::term(3, rat(1, 2)));
        assert!(sqrt_of_rational(&rat(-1, 4)).is_err());
    }

    #[test]
    fn decomposition() {
        assert_eq!(squarefree_decompose(60), (2, 15));
        assert_eq!(squarefree_decompose(72), (6, 2));
        assert_eq!(squarefree_decompose(1), (1, 1));
        assert_eq!(squarefree_decompose(97), (1, 97));
    }

    #[test]
    fn sign_of_mixed_sums() {
        // √2 + √3 - √10 < 0 since 3.146 < 3.162.
        let x = sqrt_int(2).add_ref(&sqrt_int(3)).sub_ref(&sqrt_int(10));
        assert_eq!(x.signum(), -1);
        let y = sqrt_int(3).sub_ref(&SurdSum::rational(rat(17, 10)));
        assert_eq!(y.signum(), 1);
    }

    fn arb_surd() -> impl Strategy<Value = SurdSum> {
        prop::collection::vec((1u64..30, -9i64..10, 1i64..5), 0..4).prop_map(|v| {
            v.into_iter()
                .fold(SurdSum::zero(), |acc, (r, a, b)| acc.add_ref(&SurdSum::term(r, rat(a, b))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn sqrt_squares_back(p in 0i64..5000, q in 1i64..5000) {
            let x = rat(p, q);
            let s = sqrt_of_rational(&x).unwrap();
            prop_assert_eq!(s.mul_ref(&s), SurdSum::rational(x));
            prop_assert!(s.signum() >= 0);
        }
    }

    proptest! {
        #[test]
        fn signum_matches_float(a in arb_surd()) {
            let f = a.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(a.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn json_round_trip(a in arb_surd()) {
            let text = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<SurdSum>(&text).unwrap(), a);
        }

        #[test]
        fn ring_axioms(a in arb_surd(), b in arb_surd(), c in arb_surd()) {
            prop_assert_eq!(a.add_ref(&b).mul_ref(&c), a.mul_ref(&c).add_ref(&b.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
            prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        }

    }
}
