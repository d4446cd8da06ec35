use serde::Serialize;

use super::{AlgebraElement, BrauerDiagram};
use crate::coeffs::NPoly;

/// Outcome of one relation instance.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instance: String,
    pub passed: bool,
}

/// The relation instances of the Coxeter-type presentation of `B(n,N)`,
/// as pairs of generator words with an optional factor `N` on the right.
///
/// Quadratic relations: `s_k² = 1`, `s̄_k² = N s̄_k`, `s_k s̄_k = s̄_k`,
/// `s̄_k s_k = s̄_k`, `s_k s̄_k = s̄_k s_k`. Braid-type relations for
/// neighbouring indices, and commutation for `|k-l| > 1`.
pub fn relation_instances(n: usize) -> Vec<(String, String, Word, Word, usize)> {
    use Letter::*;
    let mut out = Vec::new();
    let mut push = |rel: &str, inst: String, lhs: Word, rhs: Word, pow_n: usize| {
        out.push((rel.to_string(), inst, lhs, rhs, pow_n));
    };
    for k in 1..n {
        push("quadratic", format!("s{k}^2 = 1"), vec![S(k), S(k)], vec![], 0);
        push("quadratic", format!("sbar{k}^2 = N sbar{k}"), vec![B(k), B(k)], vec![B(k)], 1);
        push("quadratic", format!("s{k} sbar{k} = sbar{k}"), vec![S(k), B(k)], vec![B(k)], 0);
        push("quadratic", format!("sbar{k} s{k} = sbar{k}"), vec![B(k), S(k)], vec![B(k)], 0);
        push("quadratic", format!("s{k} sbar{k} = sbar{k} s{k}"), vec![S(k), B(k)], vec![B(k), S(k)], 0);
    }
    for k in 1..n.saturating_sub(1) {
        let l = k + 1;
        push("braid", format!("s{k} s{l} s{k} = s{l} s{k} s{l}"), vec![S(k), S(l), S(k)], vec![S(l), S(k), S(l)], 0);
        push("braid", format!("sbar{k} sbar{l} sbar{k} = sbar{k}"), vec![B(k), B(l), B(k)], vec![B(k)], 0);
        push("braid", format!("sbar{l} sbar{k} sbar{l} = sbar{l}"), vec![B(l), B(k), B(l)], vec![B(l)], 0);
    }
    for k in 1..n.saturating_sub(1) {
        let l = k + 1;
        push("mixed", format!("s{k} sbar{l} sbar{k} = s{l} sbar{k}"), vec![S(k), B(l), B(k)], vec![S(l), B(k)], 0);
        push("mixed", format!("sbar{l} sbar{k} s{l} = sbar{l} s{k}"), vec![B(l), B(k), S(l)], vec![B(l), S(k)], 0);
    }
    for k in 1..n {
        for l in k + 2..n {
            push("distant", format!("s{k} s{l} = s{l} s{k}"), vec![S(k), S(l)], vec![S(l), S(k)], 0);
            push("distant", format!("sbar{k} s{l} = s{l} sbar{k}"), vec![B(k), S(l)], vec![S(l), B(k)], 0);
            push("distant", format!("sbar{l} s{k} = s{k} sbar{l}"), vec![B(l), S(k)], vec![S(k), B(l)], 0);
            push("distant", format!("sbar{k} sbar{l} = sbar{l} sbar{k}"), vec![B(k), B(l)], vec![B(l), B(k)], 0);
        }
    }
    out
}

/// A generator letter `s_k` or `s̄_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    S(usize),
    B(usize),
}

pub type Word = Vec<Letter>;

fn word_product(
    w: &[Letter],
    n: usize,
    rule: &dyn Fn(&BrauerDiagram, &BrauerDiagram) -> (BrauerDiagram, usize),
) -> AlgebraElement {
    let mut acc = AlgebraElement::identity(n);
    for l in w {
        let g = match *l {
            Letter::S(k) => BrauerDiagram::s(k, n),
            Letter::B(k) => BrauerDiagram::sbar(k, n),
        }
        .expect("letters in range");
        acc = acc.multiply_with(&AlgebraElement::from_diagram(g), rule);
    }
    acc
}

/// Checks every relation instance in `B(n,N)` with symbolic `N`.
pub fn verify_presentation(n: usize) -> Vec<RelationCheck> {
    verify_presentation_with(n, &|a, b| a.compose(b).expect("equal sizes"))
}

/// As [`verify_presentation`], but multiplying diagrams with `rule`;
/// used to confirm that a faulty product rule is detected.
pub fn verify_presentation_with(
    n: usize,
    rule: &dyn Fn(&BrauerDiagram, &BrauerDiagram) -> (BrauerDiagram, usize),
) -> Vec<RelationCheck> {
    relation_instances(n)
        .into_iter()
        .map(|(relation, instance, lhs, rhs, pow_n)| {
            let l = word_product(&lhs, n, rule);
            let r = word_product(&rhs, n, rule).scale(&NPoly::n_pow(pow_n));
            RelationCheck { relation, instance, passed: l == r }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(relation_instances(2).len(), 5);
        assert_eq!(relation_instances(3).len(), 15);
        assert_eq!(relation_instances(4).len(), 15 + 6 + 4 + 4);
    }

    #[test]
    fn all_pass_for_small_n() {
        for n in 2..=4 {
            assert!(verify_presentation(n).iter().all(|c| c.passed), "n={n}");
        }
    }

    #[test]
    fn forgetting_loops_is_detected() {
        let bad = |a: &BrauerDiagram, b: &BrauerDiagram| (a.compose(b).unwrap().0, 0);
        let report = verify_presentation_with(3, &bad);
        assert!(report.iter().any(|c| !c.passed));
    }
}
