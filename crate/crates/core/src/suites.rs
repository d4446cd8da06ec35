//! The full verification sweep, one report per acceptance criterion. Shared
//! by the `verify-all` command and the acceptance test.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::affine::{
    affine_relations, combination, hecke_quotient, hecke_word, pi_m, pi_rank, pi_word, regular_monomials,
    w_series, AffineElement, AffineLetter, CommPoly, HeckeElement,
};
use crate::coeffs::{format_rational, rat, NPoly, Rational, Ring, SurdSum};
use crate::diagrams::{jucys_murphy, verify_presentation, z_element, AlgebraElement};
use crate::repform::{
    half, q_k_series, q_series, q_series_alt, spectral_collision, z_series, PathBasis, Representation,
};
use crate::shapes::{enumerate_o, YoungDiagram};
use crate::tensor::{casimir_check, centralizer_rank, predicted_rank, verify_factorizations, verify_homomorphism};

/// One aggregated check inside a criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub seconds: f64,
    pub checks: Vec<Check>,
}

impl CriterionReport {
    /// `criterion 3 PASS representation suite (1.2 s)`.
    pub fn line(&self) -> String {
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        let mut s = format!(
            "criterion {} {} {} ({} checks, {:.1} s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.checks.len(),
            self.seconds
        );
        if !failed.is_empty() {
            s.push_str(&format!(" failing: {}", failed.join(", ")));
        }
        s
    }
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "presentation"),
    (2, "jucys-murphy"),
    (3, "representations"),
    (4, "rank-one fibers"),
    (5, "central series"),
    (6, "tensor oracle"),
    (7, "spectral separation"),
    (8, "affine"),
];

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

/// Runs criterion `id` (1..=8) with the given seed.
pub fn run_criterion(id: u8, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(id as u64));
    let checks = match id {
        1 => presentation(),
        2 => jucys_murphy_suite(),
        3 => representations(),
        4 => rank_one_fibers(),
        5 => central_series(),
        6 => tensor_oracle(&mut rng),
        7 => spectral_separation(),
        8 => affine_suite(&mut rng),
        _ => vec![check("unknown criterion", false, format!("no criterion {id}"))],
    };
    let title = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown", |c| c.1).to_string();
    CriterionReport {
        id,
        title,
        passed: !checks.is_empty() && checks.iter().all(|c| c.passed),
        seconds: start.elapsed().as_secs_f64(),
        checks,
    }
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|&(id, _)| run_criterion(id, seed)).collect()
}

fn presentation() -> Vec<Check> {
    (2..=6)
        .map(|n| {
            let r = verify_presentation(n);
            let bad: Vec<String> = r.iter().filter(|c| !c.passed).map(|c| c.instance.clone()).collect();
            check(format!("presentation n={n}"), bad.is_empty(), format!("{} instances, failing {bad:?}", r.len()))
        })
        .collect()
}

fn jucys_murphy_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let one = AlgebraElement::identity;
    for n in 1..=4usize {
        let x: Vec<AlgebraElement> = (1..=n).map(|k| jucys_murphy(k, n).unwrap()).collect();
        let s: Vec<AlgebraElement> = (1..n).map(|k| AlgebraElement::s(k, n).unwrap()).collect();
        let sb: Vec<AlgebraElement> = (1..n).map(|k| AlgebraElement::sbar(k, n).unwrap()).collect();

        let commute = (0..n).all(|k| (k + 1..n).all(|l| x[k].commutator(&x[l]).is_zero()));
        out.push(check(format!("x commute n={n}"), commute, ""));

        let mut far = true;
        let mut exchange = true;
        let mut annihilate = true;
        for k in 0..n.saturating_sub(1) {
            for l in (0..n).filter(|&l| l != k && l != k + 1) {
                far &= s[k].commutator(&x[l]).is_zero() && sb[k].commutator(&x[l]).is_zero();
            }
            exchange &= (&s[k] * &x[k]).sub(&(&x[k + 1] * &s[k])) == sb[k].sub(&one(n));
            exchange &= (&s[k] * &x[k + 1]).sub(&(&x[k] * &s[k])) == one(n).sub(&sb[k]);
            let sum = x[k].add(&x[k + 1]);
            annihilate &= (&sb[k] * &sum).is_zero() && (&sum * &sb[k]).is_zero();
        }
        out.push(check(format!("s, sbar commute with distant x n={n}"), far, ""));
        out.push(check(format!("exchange relations n={n}"), exchange, ""));
        out.push(check(format!("sbar kills x_k + x_(k+1) n={n}"), annihilate, ""));

        let gens: Vec<&AlgebraElement> = s.iter().chain(&sb).collect();
        let mut central = true;
        for i in [1u32, 3, 5] {
            let p = x.iter().fold(AlgebraElement::zero(n), |acc, xk| acc.add(&xk.pow(i)));
            central &= gens.iter().all(|g| p.commutator(g).is_zero());
        }
        out.push(check(format!("odd power sums central n={n}"), central, "i = 1, 3, 5"));
        // even power sums are not central
        // B(2,N) is commutative
        if n >= 3 {
            let p2 = x.iter().fold(AlgebraElement::zero(n), |acc, xk| acc.add(&xk.pow(2)));
            out.push(check(
                format!("x_1^2 + ... not central n={n}"),
                gens.iter().any(|g| !p2.commutator(g).is_zero()),
                "control",
            ));
        }
    }
    // odd z's through the even ones
    for k in 2..=4usize {
        let z: Vec<AlgebraElement> = (0..=5).map(|i| z_element(k, i).unwrap()).collect();
        let mut ok = z[0] == AlgebraElement::scalar(k - 1, NPoly::n());
        for i in [1usize, 3, 5] {
            let mut rhs = z[i - 1].clone();
            for j in 1..=i {
                let t = &z[i - j] * &z[j - 1];
                rhs = if j % 2 == 0 { rhs.add(&t) } else { rhs.sub(&t) };
            }
            ok &= z[i].scale(&NPoly::from_int(-2)) == rhs;
        }
        out.push(check(format!("odd z recurrence k={k}"), ok, "i = 1, 3, 5"));
    }
    out
}

const REP_N: [i64; 6] = [2, 3, 4, 5, 7, 9];

fn representations() -> Vec<Check> {
    let mut out = Vec::new();
    for big_n in REP_N {
        for n in 1..=5usize {
            let mut count = 0;
            let mut bad = Vec::new();
            for lambda in enumerate_o(n, big_n as u64) {
                let r = match Representation::construct(&lambda, n, &rat(big_n, 1)) {
                    Ok(r) => r,
                    Err(e) => {
                        bad.push(format!("{lambda}: {e}"));
                        continue;
                    }
                };
                for c in r.verify_relations() {
                    count += 1;
                    if !c.passed {
                        bad.push(format!("{lambda}: {}", c.instance));
                    }
                }
            }
            out.push(check(
                format!("representations n={n} N={big_n}"),
                bad.is_empty(),
                format!("{count} relation checks, failing {bad:?}"),
            ));
        }
    }
    out
}

fn rank_one_fibers() -> Vec<Check> {
    let mut out = Vec::new();
    for big_n in REP_N {
        for n in 2..=5usize {
            let mut count = 0;
            let mut bad = Vec::new();
            for lambda in enumerate_o(n, big_n as u64) {
                let r = Representation::construct(&lambda, n, &rat(big_n, 1)).expect("construct");
                for c in r.fiber_checks() {
                    count += 1;
                    if !c.passed() {
                        bad.push(format!("{lambda} k={} paths {:?}", c.k, c.paths));
                    }
                }
            }
            out.push(check(
                format!("fibers n={n} N={big_n}"),
                bad.is_empty() && count > 0,
                format!("{count} blocks, failing {bad:?}"),
            ));
        }
    }
    out
}

fn all_partitions(max: usize) -> Vec<YoungDiagram> {
    let mut v: Vec<YoungDiagram> = (max.saturating_sub(1)..=max).flat_map(|n| enumerate_o(n, 2 * max as u64 + 2)).collect();
    v.sort_by(|a, b| a.cmp_padded(b));
    v.dedup();
    v
}

fn central_series() -> Vec<Check> {
    let mut out = Vec::new();
    for big_n in [3i64, 5] {
        let h = half(&rat(big_n, 1));
        for k in 1..=4usize {
            let mut bad = Vec::new();
            let mut count = 0;
            for mu in enumerate_o(k - 1, big_n as u64) {
                let z = z_series(&mu, &h, 6);
                if k == 1 {
                    // z_1^{(i)} closes the single strand of x_1^i
                    for i in 0..=6u32 {
                        count += 1;
                        if *z.coeff(i as usize) != rat(big_n, 1) * Ring::pow(&h, i) {
                            bad.push(format!("i={i}"));
                        }
                    }
                    continue;
                }
                let r = Representation::construct(&mu, k - 1, &rat(big_n, 1)).expect("construct");
                for i in 0..=6u32 {
                    count += 1;
                    let m = r.rho_element(&z_element(k, i).expect("z"));
                    if m.as_scalar() != Some(SurdSum::rational(z.coeff(i as usize).clone())) {
                        bad.push(format!("mu={mu} i={i}"));
                    }
                }
            }
            out.push(check(
                format!("z eigenvalues k={k} N={big_n}"),
                bad.is_empty(),
                format!("{count} coefficients, failing {bad:?}"),
            ));
        }
    }
    let values = [rat(3, 1), rat(5, 1), rat(7, 2), rat(13, 3), rat(11, 5)];
    for at in &values {
        let h = half(at);
        let parts = all_partitions(5);
        let bad: Vec<String> = parts
            .iter()
            .filter(|mu| q_series(mu, &h, 10) != q_series_alt(mu, &h, 10))
            .map(|mu| mu.to_string())
            .collect();
        out.push(check(
            format!("box product form N={}", format_rational(at)),
            bad.is_empty(),
            format!("{} diagrams to order 10, failing {bad:?}", parts.len()),
        ));
        let mut count = 0;
        let mut bad = Vec::new();
        for k in 1..=5usize {
            for mu in all_partitions(k - 1).into_iter().filter(|m| m.size() <= k - 1 && (k - 1 - m.size()) % 2 == 0) {
                let Ok(basis) = PathBasis::new(&mu, k - 1, at) else { continue };
                let target = q_series(&mu, &h, 10);
                for i in 0..basis.dim() {
                    count += 1;
                    let xs: Vec<Rational> = (1..k).map(|l| basis.jm(i, l)).collect();
                    if q_k_series(&xs, &h, 10) != target {
                        bad.push(format!("k={k} mu={mu} path {i}"));
                    }
                }
            }
        }
        out.push(check(
            format!("Q_k on paths N={}", format_rational(at)),
            bad.is_empty() && count > 0,
            format!("{count} paths to order 10, failing {bad:?}"),
        ));
    }
    out
}

fn tensor_oracle(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    for big_n in 2usize..=4096 {
        let mut n = 1;
        while big_n.pow(n as u32) <= 4096 {
            pairs.push((n, big_n));
            n += 1;
        }
    }
    let jobs: Vec<(usize, usize, u64)> = pairs.iter().map(|&(n, big_n)| (n, big_n, rng.gen())).collect();
    let workers = std::thread::available_parallelism().map_or(4, |w| w.get());
    let mut bad: Vec<String> = std::thread::scope(|sc| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let jobs = &jobs;
                sc.spawn(move || {
                    let mut bad = Vec::new();
                    for &(n, big_n, seed) in jobs.iter().skip(w).step_by(workers) {
                        let c = verify_homomorphism(n, big_n, 100, &mut ChaCha8Rng::seed_from_u64(seed));
                        if !c.passed {
                            bad.push(c.detail);
                        }
                    }
                    bad
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker")).collect()
    });
    bad.sort();
    out.push(check("homomorphism", bad.is_empty(), format!("{} (n,N) pairs with N^n ≤ 4096, failing {bad:?}", pairs.len())));
    for big_n in [2usize, 3] {
        let c = verify_factorizations(3, big_n, rng);
        out.push(check(format!("factorizations n=3 N={big_n}"), c.passed, c.detail));
    }
    for n in 1..=3usize {
        for big_n in 2..=4usize {
            let got = centralizer_rank(n, big_n);
            let want = predicted_rank(n, big_n);
            out.push(check(format!("centralizer rank n={n} N={big_n}"), got == want, format!("rank {got}, path count {want}")));
        }
    }
    // rank drops below (2n-1)!! exactly when N < n
    let r32 = centralizer_rank(3, 2);
    out.push(check("rank n=3 N=2 below 15", r32 < 15, format!("rank {r32}")));
    for n in 1..=3usize {
        for big_n in 2..=3usize {
            let c = casimir_check(n, big_n, rng);
            out.push(check(format!("casimir n={n} N={big_n}"), c.passed, c.detail));
        }
    }
    out
}

fn spectral_separation() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=5usize {
        let mut count = 0;
        let mut bad = Vec::new();
        for big_n in (1..=2 * n as i64 + 1).filter(|&m| m % 2 == 1 || m >= 2 * n as i64 - 1) {
            for lambda in enumerate_o(n, big_n as u64) {
                let basis = PathBasis::new(&lambda, n, &rat(big_n, 1)).expect("basis");
                count += 1;
                if let Some((i, j)) = spectral_collision(&basis) {
                    bad.push(format!("N={big_n} {lambda} paths {i},{j}"));
                }
            }
        }
        out.push(check(format!("distinct spectra n={n}"), bad.is_empty(), format!("{count} modules, failing {bad:?}")));
    }
    let mut witness = None;
    'search: for n in 2..=5usize {
        for big_n in (2..=2 * n as i64 - 2).step_by(2) {
            for lambda in enumerate_o(n, big_n as u64) {
                let basis = PathBasis::new(&lambda, n, &rat(big_n, 1)).expect("basis");
                if let Some((i, j)) = spectral_collision(&basis) {
                    let show = |p: usize| {
                        basis.paths[p].steps().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
                    };
                    witness = Some(format!("n={n} N={big_n} λ={lambda}: {} and {}", show(i), show(j)));
                    break 'search;
                }
            }
        }
    }
    out.push(check(
        "even N counterexample",
        witness.is_some(),
        witness.unwrap_or_else(|| "no collision found".into()),
    ));
    out
}

fn random_small_word(rng: &mut ChaCha8Rng, n: usize) -> Vec<AffineLetter> {
    let mut w = Vec::new();
    let ys = rng.gen_range(0..=2);
    for _ in 0..ys {
        w.push(AffineLetter::Y(rng.gen_range(1..=n)));
    }
    for _ in 0..rng.gen_range(0..=3) {
        let k = rng.gen_range(1..n);
        w.push(if rng.gen_bool(0.5) { AffineLetter::S(k) } else { AffineLetter::SBar(k) });
    }
    // interleave the letters so y's sit anywhere
    let len = w.len();
    for i in (1..len).rev() {
        let j = rng.gen_range(0..=i);
        w.swap(i, j);
    }
    w
}

pub const AFFINE_SUITES: [&str; 5] = ["assoc", "pi", "faithful", "hecke", "w"];

/// One named part of the affine suite, or all of them for `"all"`.
pub fn affine_checks(suite: &str, seed: u64) -> Option<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(8));
    if suite == "all" {
        return Some(affine_suite(&mut rng));
    }
    let c = match suite {
        "assoc" => affine_assoc(&mut rng),
        "pi" => affine_pi(&mut rng),
        "faithful" => affine_faithful(),
        "hecke" => affine_hecke(&mut rng),
        "w" => affine_w(),
        _ => return None,
    };
    Some(vec![c])
}

fn affine_suite(rng: &mut ChaCha8Rng) -> Vec<Check> {
    vec![affine_assoc(rng), affine_pi(rng), affine_faithful(), affine_hecke(rng), affine_w()]
}

fn affine_assoc(rng: &mut ChaCha8Rng) -> Check {
    let mut bad = 0;
    for t in 0..200 {
        let n = 2 + t % 2;
        let [a, b, c] = [(); 3].map(|_| AffineElement::from_word(n, &random_small_word(rng, n)));
        if &(&a * &b) * &c != &a * &(&b * &c) {
            bad += 1;
        }
    }
    check("associativity", bad == 0, format!("200 random triples, {bad} failures"))
}

fn affine_pi(rng: &mut ChaCha8Rng) -> Check {
    let mut bad = Vec::new();
    for t in 0..30 {
        let n = 1 + t % 3;
        let w: Vec<AffineLetter> = if n == 1 {
            (0..rng.gen_range(1..4)).map(|_| AffineLetter::Y(1)).collect()
        } else {
            random_small_word(rng, n)
        };
        let x = AffineElement::from_word(n, &w);
        for m in 0..=2 {
            if pi_m(&x, m).expect("pi") != pi_word(n, &w, m).expect("pi") {
                bad.push(format!("{w:?} m={m}"));
            }
        }
    }
    check("pi_m consistency", bad.is_empty(), format!("30 random words, m ≤ 2, failing {bad:?}"))
}

fn affine_faithful() -> Check {
    let monos = regular_monomials(2, 3);
    let r = pi_rank(&monos, 3, &rat(13, 2)).expect("rank");
    check(
        "faithfulness weight ≤ 3",
        r == monos.len(),
        format!("{} regular monomials, rank of pi_3 images {r} at N = 13/2", monos.len()),
    )
}

fn affine_hecke(rng: &mut ChaCha8Rng) -> Check {
    let f = |i: u32| rat(i as i64 + 1, 2);
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for (name, terms) in affine_relations(n, 4) {
            count += 1;
            let sum = terms.iter().fold(HeckeElement::zero(n), |acc, (c, w)| {
                acc.add(&hecke_word(n, w, &f).scale(&NPoly::from_int(*c)))
            });
            if !sum.is_zero() || !combination(n, &terms).is_zero() {
                bad.push(format!("n={n} {name}"));
            }
        }
        for _ in 0..10 {
            let w = random_small_word(rng, n.max(2));
            if n >= 2 && hecke_quotient(&AffineElement::from_word(n, &w), &f) != hecke_word(n, &w, &f) {
                bad.push(format!("n={n} quotient of {w:?}"));
            }
        }
    }
    check("Hecke quotient", bad.is_empty(), format!("{count} relations, failing {bad:?}"))
}

fn affine_w() -> Check {
    let mut bad = Vec::new();
    for k in 1..=2usize {
        let n = k + 1;
        let series = w_series(k, 3);
        let sbar = AffineElement::generator(n, AffineLetter::SBar(k));
        for i in 0..=3usize {
            let mut w = vec![AffineLetter::SBar(k)];
            w.extend(std::iter::repeat(AffineLetter::Y(k)).take(i));
            w.push(AffineLetter::SBar(k));
            let lhs = AffineElement::from_word(n, &w);
            let rhs = &AffineElement::from_comm(n, series.coeff(i)) * &sbar;
            if lhs != rhs {
                bad.push(format!("k={k} i={i}"));
            }
        }
    }
    let w1 = CommPoly::w(1);
    let w1_ok = w1 == CommPoly::constant(NPoly::n().mul_ref(&NPoly::half_n_minus_one()));
    check("W_k series", bad.is_empty() && w1_ok, format!("k ≤ 2, i ≤ 3, failing {bad:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_criteria() {
        for id in [1, 7] {
            let r = run_criterion(id, 0);
            assert!(r.passed, "{}", r.line());
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(9, 0).passed);
    }
}
