//! Rewriting into regular monomials.
//!
//! Everything works on `w`-free monomials `y^a γ y^b`; the central `w`'s are
//! reattached by the callers. Results are memoized per thread.

use std::cell::RefCell;
use std::collections::HashMap;

use super::commpoly::CommPoly;
use super::{left_ok, right_ok, AffineElement, AffineLetter, RegularMonomial};
use crate::coeffs::{NPoly, Ring};
use crate::diagrams::{AlgebraElement, BrauerDiagram, Generator};

type Key = (Vec<u32>, BrauerDiagram, Vec<u32>);

thread_local! {
    static NORMAL: RefCell<HashMap<Key, AffineElement>> = RefCell::new(HashMap::new());
    static RIGHT: RefCell<HashMap<(Key, AffineLetter), AffineElement>> = RefCell::new(HashMap::new());
    static KAPPA: RefCell<HashMap<(Vec<u32>, BrauerDiagram, u32, usize), AffineElement>> = RefCell::new(HashMap::new());
}

fn gen_elem(g: Generator, n: usize) -> AlgebraElement {
    AlgebraElement::from_diagram(g.diagram(n).expect("generator index"))
}

fn word_products(word: &[Generator], n: usize) -> (Vec<AlgebraElement>, Vec<AlgebraElement>) {
    let mut pre = vec![AlgebraElement::identity(n)];
    for &g in word {
        let next = pre.last().unwrap() * &gen_elem(g, n);
        pre.push(next);
    }
    let mut suf = vec![AlgebraElement::identity(n)];
    for &g in word.iter().rev() {
        let next = &gen_elem(g, n) * suf.last().unwrap();
        suf.push(next);
    }
    suf.reverse();
    (pre, suf)
}

/// `s̄_j - 1` for `sign = 1`, `1 - s̄_j` for `sign = -1`.
fn bar_minus_one(j: usize, n: usize, sign: i64) -> AlgebraElement {
    let sb = AlgebraElement::sbar(j, n).expect("generator index");
    sb.sub(&AlgebraElement::identity(n)).scale(&NPoly::from_int(sign))
}

/// Moves `y_l` (0-based) through `word` in either direction.
/// Leftwards: `word·y_l = y_{l'}·word + corr`. Rightwards: `y_l·word = word·y_{l'} + corr`.
fn move_y(word: &[Generator], n: usize, mut l: usize, leftwards: bool) -> (usize, AlgebraElement) {
    let (pre, suf) = word_products(word, n);
    let mut corr = AlgebraElement::zero(n);
    let order: Vec<usize> = if leftwards { (0..word.len()).rev().collect() } else { (0..word.len()).collect() };
    for i in order {
        match word[i] {
            Generator::S(j) => {
                let sign = if l == j - 1 {
                    l = j;
                    1
                } else if l == j {
                    l = j - 1;
                    -1
                } else {
                    continue;
                };
                corr = corr.add(&(&(&pre[i] * &bar_minus_one(j, n, sign)) * &suf[i + 1]));
            }
            Generator::SBar(j) => assert!(l + 1 != j && l != j, "y stuck at a horizontal edge"),
        }
    }
    (l, corr)
}

/// `γ y_k = y_t γ + corr` for `k̄` on a through strand.
fn through(g: &BrauerDiagram, k: usize) -> (usize, AlgebraElement) {
    let (t, corr) = move_y(&g.factorize().word(), g.n(), k, true);
    debug_assert_eq!(t, g.partner(g.n() + k));
    (t, corr)
}

/// `γ y_from = -γ y_to + corr` for a bottom edge `{from̄, tō}`.
fn cup_move(g: &BrauerDiagram, from: usize, to: usize) -> AlgebraElement {
    let n = g.n();
    let f = g.factorize();
    let word = f.word();
    let split = word.len() - crate::diagrams::permutation_word(&f.tau).len();
    let (p_word, t_word) = word.split_at(split);
    let (a, c1) = move_y(t_word, n, from, true);
    debug_assert!(a < 2 * f.r);
    let (c, c2) = move_y(t_word, n, a ^ 1, false);
    debug_assert_eq!(c, to);
    let p = p_word.iter().fold(AlgebraElement::identity(n), |acc, &l| &acc * &gen_elem(l, n));
    &p * &c1.sub(&c2)
}

/// `y_q γ = -y_p γ + corr` for a top edge `{p, q}`.
fn cap_move(g: &BrauerDiagram, q: usize, p: usize) -> AlgebraElement {
    cup_move(&g.flip(), q, p).flip()
}

fn bump(v: &[u32], k: usize, by: i64) -> Vec<u32> {
    let mut out = v.to_vec();
    out[k] = (out[k] as i64 + by) as u32;
    out
}

fn minus_one() -> NPoly {
    NPoly::from_int(-1)
}

fn add_scaled(out: &mut AffineElement, x: &AffineElement, c: &NPoly) {
    for (m, v) in &x.terms {
        out.add_term(m.clone(), v.mul_ref(c));
    }
}

/// Normal form of `y^a γ y^b` with arbitrary exponents.
pub(super) fn normalize_raw(a: &[u32], g: &BrauerDiagram, b: &[u32]) -> AffineElement {
    let key = (a.to_vec(), g.clone(), b.to_vec());
    if let Some(r) = NORMAL.with(|c| c.borrow().get(&key).cloned()) {
        return r;
    }
    let n = g.n();
    let mut out = AffineElement::zero(n);
    if let Some(k) = (0..n).find(|&k| b[k] > 0 && !right_ok(g, k)) {
        let b1 = bump(b, k, -1);
        let p = g.partner(n + k);
        let corr = if p < n {
            let (t, corr) = through(g, k);
            out = normalize_raw(&bump(a, t, 1), g, &b1);
            corr
        } else {
            let l = p - n;
            out = normalize_raw(a, g, &bump(&b1, l, 1)).scale(&minus_one());
            cup_move(g, k, l)
        };
        for (d, c) in corr.terms() {
            add_scaled(&mut out, &normalize_raw(a, d, &b1), c);
        }
    } else if let Some(k) = (0..n).find(|&k| a[k] > 0 && !left_ok(g, k)) {
        let p = g.partner(k);
        let a1 = bump(a, k, -1);
        out = normalize_raw(&bump(&a1, p, 1), g, b).scale(&minus_one());
        for (d, c) in cap_move(g, k, p).terms() {
            add_scaled(&mut out, &normalize_raw(&a1, d, b), c);
        }
    } else {
        let m = RegularMonomial { left: a.to_vec(), diagram: g.clone(), right: b.to_vec(), w: Vec::new() };
        out.add_term(m, NPoly::one_value());
    }
    NORMAL.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// Multiplies every term by a polynomial in the `w`'s.
pub(super) fn times_central(x: &AffineElement, p: &CommPoly) -> AffineElement {
    let mut out = AffineElement::zero(x.n);
    for (m, c) in &x.terms {
        for ((y, w), d) in p.terms() {
            assert!(y.is_empty(), "central factor contains y");
            let mut m2 = m.clone();
            if m2.w.len() < w.len() {
                m2.w.resize(w.len(), 0);
            }
            for (i, e) in w.iter().enumerate() {
                m2.w[i] += e;
            }
            out.add_term(m2, c.mul_ref(d));
        }
    }
    out
}

fn w_monomial(w: &[u32]) -> CommPoly {
    CommPoly::monomial(Vec::new(), w.to_vec(), NPoly::one_value())
}

/// Right multiplication of an element by one letter.
pub(super) fn mul_letter(x: &AffineElement, l: AffineLetter) -> AffineElement {
    if let AffineLetter::W(i) = l {
        return times_central(x, &CommPoly::w(i));
    }
    let mut out = AffineElement::zero(x.n);
    for (m, c) in &x.terms {
        let r = right_mul(&m.left, &m.diagram, &m.right, l);
        let r = if m.w.is_empty() { r } else { times_central(&r, &w_monomial(&m.w)) };
        add_scaled(&mut out, &r, c);
    }
    out
}

/// `y^a γ y^b · letter` for a regular `w`-free monomial and a non-central letter.
fn right_mul(a: &[u32], g: &BrauerDiagram, b: &[u32], l: AffineLetter) -> AffineElement {
    let key = ((a.to_vec(), g.clone(), b.to_vec()), l);
    if let Some(r) = RIGHT.with(|c| c.borrow().get(&key).cloned()) {
        return r;
    }
    let n = g.n();
    let out = match l {
        AffineLetter::Y(j) => normalize_raw(a, g, &bump(b, j - 1, 1)),
        AffineLetter::S(j) => match (0..n).rev().find(|&k| b[k] > 0) {
            None => {
                let (g2, _) = g.compose(&BrauerDiagram::s(j, n).expect("generator index")).expect("size");
                normalize_raw(a, &g2, b)
            }
            Some(k) => {
                let b0 = bump(b, k, -1);
                let x = mul_letter(&right_mul(a, g, &b0, l), AffineLetter::Y(if k + 1 == j {
                    j + 1
                } else if k == j {
                    j
                } else {
                    k + 1
                }));
                if k + 1 == j || k == j {
                    let sign = NPoly::from_int(if k + 1 == j { 1 } else { -1 });
                    let diff = right_mul(a, g, &b0, AffineLetter::SBar(j)).sub(&normalize_raw(a, g, &b0));
                    x.add(&diff.scale(&sign))
                } else {
                    x
                }
            }
        },
        AffineLetter::SBar(j) => match (0..n).rev().find(|&k| b[k] > 0 && k + 1 != j && k != j) {
            Some(k) => {
                let b0 = bump(b, k, -1);
                mul_letter(&right_mul(a, g, &b0, l), AffineLetter::Y(k + 1))
            }
            None => {
                let p = b[j - 1] + b[j];
                let x = kappa(a, g, p, j);
                if b[j] % 2 == 1 {
                    x.scale(&minus_one())
                } else {
                    x
                }
            }
        },
        AffineLetter::W(_) => unreachable!("central letters are handled by mul_letter"),
    };
    RIGHT.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// `y^a γ y_j^p s̄_j` (1-based `j`).
fn kappa(a: &[u32], g: &BrauerDiagram, p: u32, j: usize) -> AffineElement {
    let key = (a.to_vec(), g.clone(), p, j);
    if let Some(r) = KAPPA.with(|c| c.borrow().get(&key).cloned()) {
        return r;
    }
    let n = g.n();
    let j0 = j - 1;
    let zeros = vec![0; n];
    let out = if p == 0 {
        let (g2, loops) = g.compose(&BrauerDiagram::sbar(j, n).expect("generator index")).expect("size");
        normalize_raw(a, &g2, &zeros).scale(&NPoly::n().pow(loops as u32))
    } else {
        let q = g.partner(n + j0);
        if q == n + j {
            if j == 1 {
                // γ = γ' s̄_1 and s̄_1 y_1^p s̄_1 = w_p s̄_1
                times_central(&normalize_raw(a, g, &zeros), &CommPoly::w(p))
            } else {
                // s̄_j = s_{j-1} s_j s̄_{j-1} s_j s_{j-1}
                use AffineLetter::{SBar, S};
                let x = normalize_raw(a, g, &bump(&zeros, j0, p as i64));
                [S(j - 1), S(j), SBar(j - 1), S(j), S(j - 1)].iter().fold(x, |acc, &l| mul_letter(&acc, l))
            }
        } else if q < n {
            let (t, corr) = through(g, j0);
            let mut out = kappa(&bump(a, t, 1), g, p - 1, j);
            for (d, c) in corr.terms() {
                add_scaled(&mut out, &kappa(a, d, p - 1, j), c);
            }
            out
        } else {
            let l = q - n;
            let mut out = mul_letter(&kappa(a, g, p - 1, j), AffineLetter::Y(l + 1)).scale(&minus_one());
            for (d, c) in cup_move(g, j0, l).terms() {
                add_scaled(&mut out, &kappa(a, d, p - 1, j), c);
            }
            out
        }
    };
    KAPPA.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

pub(super) fn multiply(x: &AffineElement, y: &AffineElement) -> AffineElement {
    let mut out = AffineElement::zero(x.n);
    for (m, c) in &y.terms {
        let mut acc = x.clone();
        for l in m.word() {
            acc = mul_letter(&acc, l);
        }
        add_scaled(&mut out, &acc, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::permutation_word;

    #[test]
    fn conjugated_bar() {
        for n in 3..6 {
            for j in 2..n {
                let w = [Generator::S(j - 1), Generator::S(j), Generator::SBar(j - 1), Generator::S(j), Generator::S(j - 1)];
                let (pre, _) = word_products(&w, n);
                assert_eq!(pre[5], AlgebraElement::sbar(j, n).unwrap());
            }
        }
    }

    #[test]
    fn through_moves_follow_strands() {
        for g in BrauerDiagram::all(3) {
            for k in 0..3 {
                if g.partner(3 + k) < 3 {
                    let (t, _) = through(&g, k);
                    assert_eq!(t, g.partner(3 + k));
                }
            }
        }
        assert!(!permutation_word(&[1, 0, 2]).is_empty());
    }
}
