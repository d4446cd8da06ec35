use super::*;
use crate::coeffs::rat;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use AffineLetter::*;

fn nf(n: usize, s: &str) -> AffineElement {
    AffineElement::parse(n, s).unwrap()
}

fn random_word(rng: &mut StdRng, n: usize, len: usize) -> Vec<AffineLetter> {
    (0..len)
        .map(|_| match rng.gen_range(0..4) {
            0 if n > 1 => S(rng.gen_range(1..n)),
            1 if n > 1 => SBar(rng.gen_range(1..n)),
            3 if rng.gen_bool(0.2) => W(rng.gen_range(0..4)),
            _ => Y(rng.gen_range(1..=n)),
        })
        .collect()
}

#[test]
fn parse_letters() {
    assert_eq!(parse_word(3, "s1 sbar2 y3 w4").unwrap(), vec![S(1), SBar(2), Y(3), W(4)]);
    assert!(parse_word(2, "s2").is_err());
    assert!(parse_word(2, "q1").is_err());
    assert_eq!(parse_word(2, "y1^3 s1^0").unwrap(), vec![Y(1), Y(1), Y(1)]);
    assert!(parse_word(2, "y1^x").is_err());
}

#[test]
fn exchange_example() {
    let lhs = nf(2, "s1 y1");
    let rhs = nf(2, "y2 s1").add(&nf(2, "sbar1")).sub(&AffineElement::identity(2));
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.len(), 3);
}

#[test]
fn closed_loop_with_one_y() {
    let x = nf(2, "sbar1 y1 sbar1");
    let c = NPoly::from_coeffs(vec![rat(0, 1), rat(-1, 2), rat(1, 2)]);
    assert_eq!(x, nf(2, "sbar1").scale(&c));
}

#[test]
fn relations_hold() {
    for n in 1..=4 {
        for (name, terms) in affine_relations(n, 4) {
            assert!(combination(n, &terms).is_zero(), "{name} in A({n})");
        }
    }
}

#[test]
fn hecke_kills_relations() {
    let f = |i: u32| rat(2 - i as i64, 7);
    for n in 1..=3 {
        for (name, terms) in affine_relations(n, 4) {
            let sum = terms.iter().fold(HeckeElement::zero(n), |acc, (c, w)| {
                acc.add(&hecke_word(n, w, &f).scale(&NPoly::from_int(*c)))
            });
            assert!(sum.is_zero(), "{name}");
        }
    }
}

#[test]
fn regular_output() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let w = random_word(&mut rng, 3, 6);
        for (m, _) in AffineElement::from_word(3, &w).terms() {
            assert!(m.is_regular());
        }
    }
}

#[test]
fn associativity() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(2..=3);
        let [a, b, c] = [0, 1, 2].map(|_| {
            let len = rng.gen_range(1..5);
            AffineElement::from_word(n, &random_word(&mut rng, n, len))
        });
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}

#[test]
fn word_product_matches_normal_form() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..40 {
        let w = random_word(&mut rng, 3, 6);
        let (l, r) = w.split_at(3);
        let prod = &AffineElement::from_word(3, l) * &AffineElement::from_word(3, r);
        assert_eq!(prod, AffineElement::from_word(3, &w), "{w:?}");
    }
}

#[test]
fn pi_consistency() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..15 {
        let w = random_word(&mut rng, 2, 4);
        let x = AffineElement::from_word(2, &w);
        for m in 1..=2 {
            assert_eq!(pi_m(&x, m).unwrap(), pi_word(2, &w, m).unwrap(), "{w:?}");
        }
    }
}

#[test]
fn hecke_consistency() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..40 {
        let n = rng.gen_range(2..=3);
        let w = random_word(&mut rng, n, 6);
        let f = |i: u32| rat(i as i64, 5);
        assert_eq!(hecke_quotient(&AffineElement::from_word(n, &w), &f), hecke_word(n, &w, &f), "{w:?}");
    }
}

#[test]
fn shifted_loops_give_shifted_w() {
    // s̄_2 y_2^i s̄_2 agrees with the series coefficient w_2^{(i)} times s̄_2
    let series = w_series(2, 3);
    for i in 0..=3u32 {
        let mut w = vec![SBar(2)];
        w.extend(std::iter::repeat(Y(2)).take(i as usize));
        w.push(SBar(2));
        let lhs = AffineElement::from_word(3, &w);
        let rhs = &AffineElement::from_comm(3, series.coeff(i as usize)) * &nf(3, "sbar2");
        assert_eq!(lhs, rhs, "i = {i}");
    }
}

#[test]
fn central_elements() {
    for n in 2..=3 {
        let gens: Vec<AffineElement> = (1..n)
            .flat_map(|k| [S(k), SBar(k)])
            .chain((1..=n).map(Y))
            .map(|l| AffineElement::generator(n, l))
            .collect();
        for i in [1u32, 3] {
            let p = (1..=n).fold(CommPoly::zero_value(), |acc, k| acc.add_ref(&CommPoly::y(k).pow(i)));
            let z = AffineElement::from_comm(n, &p);
            for g in &gens {
                assert!(z.commutator(g).is_zero(), "odd power sum {i}");
            }
        }
        let w2 = AffineElement::generator(n, W(2));
        for g in &gens {
            assert!(w2.commutator(g).is_zero());
        }
    }
}

#[test]
fn even_power_sum_is_not_central() {
    let p = CommPoly::y(1).pow(2).add_ref(&CommPoly::y(2).pow(2));
    let z = AffineElement::from_comm(2, &p);
    assert!(!z.commutator(&nf(2, "s1")).is_zero());
}

#[test]
fn degree_filtration() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..30 {
        let w = random_word(&mut rng, 3, 6);
        let deg = w.iter().filter(|l| matches!(l, Y(_))).count() as u32;
        let x = AffineElement::from_word(3, &w);
        assert!(x.y_degree() <= deg, "{w:?}");
    }
}

#[test]
fn faithful_on_small_weights() {
    let x = nf(2, "y1 y2").sub(&nf(2, "y2 y1"));
    assert!(is_zero_via_faithfulness(&x).unwrap());
    let y = nf(2, "y1 s1");
    assert!(!is_zero_via_faithfulness(&y).unwrap());
}

#[test]
fn monomial_counts() {
    assert_eq!(regular_monomials(1, 0).len(), 1);
    assert_eq!(regular_monomials(2, 0).len(), 3);
    // n = 1: y^a w_2^h with a + 2h ≤ 3
    assert_eq!(regular_monomials(1, 3).len(), 6);
    assert!(regular_monomials(2, 3).iter().all(|m| m.is_regular() && m.weight() <= 3));
}

#[test]
fn images_are_independent() {
    let monos = regular_monomials(2, 2);
    assert_eq!(pi_rank(&monos, 2, &rat(13, 2)).unwrap(), monos.len());
}

#[test]
fn weight_three_faithful() {
    let monos = regular_monomials(2, 3);
    assert_eq!(monos.len(), 39);
    assert_eq!(pi_rank(&monos, 3, &rat(13, 2)).unwrap(), 39);
}

#[test]
fn maximal_commutativity_witness() {
    let ys: Vec<AffineElement> = (1..=2).map(|k| AffineElement::generator(2, Y(k))).collect();
    for m in regular_monomials(2, 1) {
        if m.diagram == BrauerDiagram::identity(2) {
            continue;
        }
        let x = AffineElement::monomial(m.clone(), NPoly::one_value());
        assert!(ys.iter().any(|y| !x.commutator(y).is_zero()), "{m}");
    }
}
