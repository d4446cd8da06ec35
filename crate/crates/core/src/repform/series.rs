use crate::coeffs::{series_from_fraction, Rational, Ring, USeries};
use crate::shapes::{b_list, YoungDiagram};

/// `Q(μ,u) = ∏_j (u+b_j)/(u-b_j)` to order `k`, with `half = (N-1)/2`.
pub fn q_series<S: Ring>(mu: &YoungDiagram, half: &S, k: usize) -> USeries<S> {
    b_list(mu, half)
        .iter()
        .fold(USeries::one(k), |acc, b| acc.mul(&series_from_fraction(b, k)))
}

/// `Z(μ,u) = (u + 1/2)·Q(μ,u) - u + 1/2` to order `k`.
pub fn z_series<S: Ring>(mu: &YoungDiagram, half: &S, k: usize) -> USeries<S> {
    let one_half = S::from_rational(&Rational::new(1.into(), 2.into()));
    let q = q_series(mu, half, k + 1);
    let z = USeries::u_plus(one_half.clone(), k + 1)
        .mul(&q)
        .sub(&USeries::u_plus(one_half.neg_ref(), k));
    debug_assert!(z.lead().is_none());
    z
}

/// `((u+a)²-1)/((u-a)²-1) · (u-a)²/(u+a)²` expanded in `u^{-1}`.
pub(crate) fn box_factor<S: Ring>(a: &S, k: usize) -> USeries<S> {
    let one = S::one();
    let ap = a.add_ref(&one);
    let am = a.sub_ref(&one);
    let na = a.neg_ref();
    USeries::linear(&ap, k)
        .mul(&USeries::linear(&am, k))
        .mul(&USeries::inv_linear(&ap, k))
        .mul(&USeries::inv_linear(&am, k))
        .mul(&USeries::linear(&na, k))
        .mul(&USeries::linear(&na, k))
        .mul(&USeries::inv_linear(&na, k))
        .mul(&USeries::inv_linear(&na, k))
}

/// Box-product form of `Q(μ,u)` over the contents of all boxes of `μ`.
pub fn q_series_alt<S: Ring>(mu: &YoungDiagram, half: &S, k: usize) -> USeries<S> {
    mu.contents().iter().fold(series_from_fraction(half, k), |acc, &e| {
        acc.mul(&box_factor(&half.add_ref(&S::from_int(e)), k))
    })
}

/// `Q_k(u)` evaluated at the Jucys-Murphy eigenvalues `x_1, …, x_{k-1}` of a path.
///
/// A zero eigenvalue contributes the factor 1.
pub fn q_k_series<S: Ring>(jm_values: &[S], half: &S, k: usize) -> USeries<S> {
    jm_values.iter().fold(series_from_fraction(half, k), |acc, x| {
        if x.is_zero() {
            acc
        } else {
            acc.mul(&box_factor(x, k))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, NPoly};
    use crate::repform::half;

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn empty_diagram_series() {
        let h = NPoly::half_n_minus_one();
        let z = z_series(&YoungDiagram::empty(), &h, 5);
        for i in 0..=5u32 {
            assert_eq!(z.coeff(i as usize), &NPoly::n().mul_ref(&h.pow(i)));
        }
        assert_eq!(q_series_alt(&YoungDiagram::empty(), &h, 5), q_series(&YoungDiagram::empty(), &h, 5));
    }

    #[test]
    fn box_product_form_agrees() {
        for (mu, n) in [(yd(&[1]), 3), (yd(&[2, 1]), 5)] {
            let k = if n == 3 { 6 } else { 8 };
            let h = half(&rat(n, 1));
            assert_eq!(q_series_alt(&mu, &h, k), q_series(&mu, &h, k));
        }
        let h = NPoly::half_n_minus_one();
        let mu = yd(&[3, 1, 1]);
        assert_eq!(q_series_alt(&mu, &h, 7), q_series(&mu, &h, 7));
    }

    #[test]
    fn first_q_k_is_single_fraction() {
        let h = half(&rat(5, 1));
        assert_eq!(q_k_series(&[], &h, 6), series_from_fraction(&h, 6));
        // Path ∅, (1), (2) at N = 3 has eigenvalues 1, 2.
        let h3 = half(&rat(3, 1));
        assert_eq!(q_k_series(&[rat(1, 1), rat(2, 1)], &h3, 8), q_series(&yd(&[2]), &h3, 8));
        // Path ∅, (1), ∅ has eigenvalues 1, -1 at N = 3.
        assert_eq!(q_k_series(&[rat(1, 1), rat(-1, 1)], &h3, 8), q_series(&YoungDiagram::empty(), &h3, 8));
    }

    #[test]
    fn zero_constant_is_n() {
        let h = NPoly::half_n_minus_one();
        for mu in [yd(&[1]), yd(&[2, 1]), yd(&[2, 2])] {
            assert_eq!(z_series(&mu, &h, 2).coeff(0), &NPoly::n());
        }
    }
}
