use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{format_rational, parse_rational, Rational, Ring};
use crate::error::Error;

/// Polynomial in the formal loop parameter `N` with rational coefficients.
///
/// Stored densely in ascending degree; the coefficient vector never ends
/// in a zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NPoly {
    coeffs: Vec<Rational>,
}

impl NPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `N`.
    pub fn n() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `N^e`.
    pub fn n_pow(e: usize) -> Self {
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        NPoly { coeffs: c }
    }

    /// `(N-1)/2`, the constant term of every Jucys-Murphy element.
    pub fn half_n_minus_one() -> Self {
        let h = Rational::new(1.into(), 2.into());
        Self::from_coeffs(vec![-h.clone(), h])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Returns the constant if this polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Substitutes `N = at` (Horner).
    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub(crate) fn zero_value() -> Self {
        NPoly { coeffs: Vec::new() }
    }
    pub(crate) fn one_value() -> Self {
        Self::constant(Rational::one())
    }
    pub(crate) fn is_zero_value(&self) -> bool {
        self.coeffs.is_empty()
    }
}

super::ring_ops!(NPoly);

impl Ring for NPoly {
    fn add_ref(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(c)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::from_coeffs(c)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }
    fn neg_ref(&self) -> Self {
        NPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

impl fmt::Display for NPoly {
    /// Highest degree first, e.g. `1/2*N^2 - 1/2*N + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => "N".to_string(),
                _ => format!("N^{e}"),
            };
            if e == 0 {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NPoly({self})")
    }
}

impl FromStr for NPoly {
    type Err = Error;

    /// Parses the output of `Display`: a sum of terms `c`, `c*N`, `c*N^e`,
    /// `N^e`, separated by `+` or `-`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'/' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = NPoly::zero();
        for t in terms {
            let (neg, body) = match t.as_bytes().first() {
                Some(b'-') => (true, &t[1..]),
                Some(b'+') => (false, &t[1..]),
                _ => (false, t),
            };
            let (coef, exp) = match body.find('N') {
                None => (parse_rational(body)?, 0usize),
                Some(pos) => {
                    let c = if pos == 0 {
                        Rational::one()
                    } else {
                        let cs = body[..pos]
                            .strip_suffix('*')
                            .ok_or_else(|| Error::Parse(format!("bad term {t:?}")))?;
                        parse_rational(cs)?
                    };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|x| x.parse().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in {t:?}")))?
                    };
                    (c, e)
                }
            };
            let coef = if neg { -coef } else { coef };
            acc = acc.add_ref(&NPoly::n_pow(exp).scale(&coef));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;
    use proptest::prelude::*;

    fn poly(v: &[(i64, i64)]) -> NPoly {
        NPoly::from_coeffs(v.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn display_round_trip() {
        let p = poly(&[(3, 1), (-1, 2), (1, 2)]);
        assert_eq!(p.to_string(), "1/2*N^2 - 1/2*N + 3");
        assert_eq!(p.to_string().parse::<NPoly>().unwrap(), p);
        assert_eq!(NPoly::zero().to_string(), "0");
        assert_eq!("0".parse::<NPoly>().unwrap(), NPoly::zero());
        assert_eq!("-N".parse::<NPoly>().unwrap(), NPoly::n().neg_ref());
        assert_eq!(NPoly::half_n_minus_one().to_string(), "1/2*N - 1/2");
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = poly(&[(1, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        let q = NPoly::n().sub_ref(&NPoly::n());
        assert!(q.is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = NPoly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..5).prop_map(|v| poly(&v))
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_map(a in arb_poly(), b in arb_poly(), x in -10i64..10, d in 1i64..5) {
            let at = rat(x, d);
            prop_assert_eq!(a.add_ref(&b).eval(&at), a.eval(&at) + b.eval(&at));
            prop_assert_eq!(a.mul_ref(&b).eval(&at), a.eval(&at) * b.eval(&at));
        }

        #[test]
        fn parse_inverts_display(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<NPoly>().unwrap(), a);
        }
    }
}
