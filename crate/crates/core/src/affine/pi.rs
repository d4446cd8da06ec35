use super::{AffineElement, AffineLetter};
use crate::diagrams::{jucys_murphy, z_element, AlgebraElement};
use crate::coeffs::{NPoly, Ring};
use crate::error::Result;

fn y_image(k: usize, m: usize, n: usize) -> Result<AlgebraElement> {
    jucys_murphy(m + k, m + n)
}

fn w_image(i: u32, m: usize, n: usize) -> Result<AlgebraElement> {
    if m == 0 {
        // closing the single strand of x_1^i
        let c = NPoly::n().mul_ref(&NPoly::half_n_minus_one().pow(i));
        return Ok(AlgebraElement::scalar(n, c));
    }
    Ok(z_element(m + 1, i)?.embed(m + n))
}

/// The homomorphism `π_m: A(n,N) → B(m+n,N)` with `y_k ↦ x_{m+k}`,
/// `γ ↦ γ` on the last `n` strands and `w_i ↦ z_{m+1}^{(i)}`.
pub fn pi_m(x: &AffineElement, m: usize) -> Result<AlgebraElement> {
    let n = x.n();
    let mut out = AlgebraElement::zero(m + n);
    for (mono, c) in x.terms() {
        let img = pi_word(n, &mono.word(), m)?;
        out = out.add(&img.scale(c));
    }
    Ok(out)
}

/// `π_m` of the product of a word, letter by letter.
pub fn pi_word(n: usize, word: &[AffineLetter], m: usize) -> Result<AlgebraElement> {
    let size = m + n;
    let mut acc = AlgebraElement::identity(size);
    for &l in word {
        let img = match l {
            AffineLetter::S(k) => AlgebraElement::s(m + k, size)?,
            AffineLetter::SBar(k) => AlgebraElement::sbar(m + k, size)?,
            AffineLetter::Y(k) => y_image(k, m, n)?,
            AffineLetter::W(i) => w_image(i, m, n)?,
        };
        acc = &acc * &img;
    }
    Ok(acc)
}

/// Tests `x = 0` through `π_m` with `m` the filtration weight of `x`,
/// where `π_m` is injective on that filtered piece.
pub fn is_zero_via_faithfulness(x: &AffineElement) -> Result<bool> {
    let m = x.weight() as usize;
    Ok(pi_m(x, m)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_zero_is_n() {
        let img = w_image(0, 1, 1).unwrap();
        assert_eq!(img, AlgebraElement::scalar(2, NPoly::n()));
    }

    #[test]
    fn closure_at_m_zero() {
        let x = AffineElement::parse(1, "w2").unwrap();
        let h = NPoly::half_n_minus_one();
        assert_eq!(pi_m(&x, 0).unwrap(), AlgebraElement::scalar(1, NPoly::n().mul_ref(&h.mul_ref(&h))));
        assert_eq!(pi_m(&AffineElement::parse(1, "y1").unwrap(), 0).unwrap(), AlgebraElement::scalar(1, h));
    }

    #[test]
    fn y_maps_to_jucys_murphy() {
        let x = AffineElement::parse(2, "y2").unwrap();
        assert_eq!(pi_m(&x, 1).unwrap(), jucys_murphy(3, 3).unwrap());
    }
}
