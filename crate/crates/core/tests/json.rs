use brauer::coeffs::{NPoly, Rational};
use brauer::diagrams::{AlgebraElement, BrauerDiagram};
use brauer::shapes::{enumerate_paths, UpDownPath, YoungDiagram};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn diagram(n: usize, seed: u64) -> BrauerDiagram {
    BrauerDiagram::random(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[test]
fn diagram_format() {
    let d = BrauerDiagram::parse_spec(2, "sbar1").unwrap();
    let (d, _) = d.terms().next().unwrap();
    let v = serde_json::to_value(d).unwrap();
    assert_eq!(v, serde_json::json!({"n": 2, "edges": [["1", "2"], ["1b", "2b"]]}));
}

#[test]
fn bad_diagram_json_is_rejected() {
    for s in [
        r#"{"n": 2, "edges": [["1", "2"]]}"#,
        r#"{"n": 2, "edges": [["1", "2"], ["1", "2b"]]}"#,
        r#"{"n": 2, "edges": [["1", "3"], ["1b", "2b"]]}"#,
        r#"{"n": 2, "edges": [["x", "2"], ["1b", "2b"]]}"#,
    ] {
        assert!(serde_json::from_str::<BrauerDiagram>(s).is_err(), "{s}");
    }
}

#[test]
fn paths_round_trip() {
    let lambda = YoungDiagram::new(vec![1]).unwrap();
    for p in enumerate_paths(&lambda, 5, 3).unwrap() {
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<UpDownPath>(&s).unwrap(), p);
    }
}

#[test]
fn partition_json_is_validated() {
    assert_eq!(serde_json::from_str::<YoungDiagram>("[2,1]").unwrap(), YoungDiagram::new(vec![2, 1]).unwrap());
    assert!(serde_json::from_str::<YoungDiagram>("[1,2]").is_err());
}

proptest! {
    #[test]
    fn diagrams_round_trip(n in 1usize..9, seed: u64) {
        let d = diagram(n, seed);
        let s = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<BrauerDiagram>(&s).unwrap(), d);
    }

    #[test]
    fn elements_round_trip(n in 1usize..6, seeds in proptest::collection::vec(any::<u64>(), 0..5), cs in proptest::collection::vec((-9i64..9, 1i64..5, 0usize..3), 5)) {
        let mut e = AlgebraElement::zero(n);
        for (s, (p, q, deg)) in seeds.iter().zip(cs) {
            let mut c = vec![Rational::from_integer(0.into()); deg + 1];
            c[deg] = Rational::new(p.into(), q.into());
            e.add_term(diagram(n, *s), NPoly::from_coeffs(c));
        }
        let v = serde_json::to_value(&e).unwrap();
        prop_assert_eq!(AlgebraElement::from_json(n, &v).unwrap(), e);
    }
}
