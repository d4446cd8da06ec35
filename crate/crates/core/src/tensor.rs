//! The action of `B(n,N)` on `(ℂ^N)^{⊗n}` for integer `N`, used as an
//! independent oracle for the diagram algebra and its representations.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::coeffs::{format_rational, rat, Rational};
use crate::diagrams::{jucys_murphy, AlgebraElement, BrauerDiagram, Generator};
use crate::error::{Error, Result};
use crate::repform::jm_eigenvalue;
use crate::shapes::{enumerate_o, enumerate_paths};

/// Dense vector in `(ℂ^N)^{⊗n}`, indexed in mixed radix `N` with the first
/// tensor factor most significant. Amplitudes are integer numerators over
/// one shared positive denominator, which keeps zero entries allocation-free.
#[derive(Clone)]
pub struct TensorVector {
    n: usize,
    big_n: usize,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for TensorVector {
    fn eq(&self, other: &Self) -> bool {
        if (self.n, self.big_n) != (other.n, other.big_n) {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.iter().zip(&other.num).all(|(a, b)| a * &other.den == b * &self.den)
    }
}

impl Eq for TensorVector {}

impl TensorVector {
    pub fn zero(n: usize, big_n: usize) -> Self {
        Self::zero_over(n, big_n, BigInt::one())
    }

    fn zero_over(n: usize, big_n: usize, den: BigInt) -> Self {
        TensorVector { n, big_n, num: vec![BigInt::zero(); big_n.pow(n as u32)], den }
    }

    /// `u(i_1, …, i_n)` with 1-based indices.
    pub fn basis(big_n: usize, indices: &[usize]) -> Result<Self> {
        if indices.iter().any(|&i| i == 0 || i > big_n) {
            return Err(Error::OutOfRange(format!("index tuple {indices:?} for N={big_n}")));
        }
        let digits: Vec<usize> = indices.iter().map(|i| i - 1).collect();
        let mut v = Self::zero(indices.len(), big_n);
        let idx = v.index_of(&digits);
        v.num[idx] = BigInt::one();
        Ok(v)
    }

    fn unit(n: usize, big_n: usize, idx: usize) -> Self {
        let mut v = Self::zero(n, big_n);
        v.num[idx] = BigInt::one();
        v
    }

    /// Small random integer entries.
    pub fn random(n: usize, big_n: usize, rng: &mut impl Rng) -> Self {
        let mut v = Self::zero(n, big_n);
        for a in &mut v.num {
            *a = rng.gen_range(-5i64..=5).into();
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn amplitudes(&self) -> Vec<Rational> {
        (0..self.len()).map(|i| self.entry(i)).collect()
    }

    fn entry(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    /// Amplitude of `u(i_1, …, i_n)`, 1-based.
    pub fn get(&self, indices: &[usize]) -> Rational {
        let digits: Vec<usize> = indices.iter().map(|i| i - 1).collect();
        self.entry(self.index_of(&digits))
    }

    fn index_of(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.big_n + d)
    }

    fn digits(&self, idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.n];
        self.fill_digits(idx, &mut d);
        d
    }

    fn fill_digits(&self, mut idx: usize, d: &mut [usize]) {
        for slot in d.iter_mut().rev() {
            *slot = idx % self.big_n;
            idx /= self.big_n;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|a| a.is_zero())
    }

    fn combine(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| f(a, b)).collect();
            return TensorVector { num, den: self.den.clone(), ..*self };
        }
        let num = self.num.iter().zip(&other.num).map(|(a, b)| f(&(a * &other.den), &(b * &self.den))).collect();
        TensorVector { num, den: &self.den * &other.den, ..*self }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let (p, q) = (c.numer(), c.denom());
        let num = self.num.iter().map(|a| if a.is_zero() { BigInt::zero() } else { a * p }).collect();
        TensorVector { num, den: &self.den * q, ..*self }
    }

    /// Nonzero numerators; divide by `self.den` for the amplitude.
    fn nonzero(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.num.iter().enumerate().filter(|(_, a)| !a.is_zero())
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .nonzero()
            .map(|(i, a)| {
                let d: Vec<String> = self.digits(i).iter().map(|x| (x + 1).to_string()).collect();
                format!("{}*u({})", format_rational(&Rational::new(a.clone(), self.den.clone())), d.join(","))
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

type ApplyFn = dyn Fn(&TensorVector) -> TensorVector + Send + Sync;

/// A linear map on `(ℂ^N)^{⊗n}`, applied functionally.
#[derive(Clone)]
pub struct TensorOperator {
    pub n: usize,
    pub big_n: usize,
    pub description: String,
    f: Arc<ApplyFn>,
}

impl TensorOperator {
    pub fn new(
        n: usize,
        big_n: usize,
        description: impl Into<String>,
        f: impl Fn(&TensorVector) -> TensorVector + Send + Sync + 'static,
    ) -> Self {
        TensorOperator { n, big_n, description: description.into(), f: Arc::new(f) }
    }

    pub fn identity(n: usize, big_n: usize) -> Self {
        Self::new(n, big_n, "1", |v| v.clone())
    }

    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        assert_eq!((v.n, v.big_n), (self.n, self.big_n), "tensor shape mismatch");
        (self.f)(v)
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (self.f.clone(), other.f.clone());
        Self::new(self.n, self.big_n, format!("{}·{}", self.description, other.description), move |v| a(&b(v)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (self.f.clone(), other.f.clone());
        Self::new(self.n, self.big_n, format!("{} + {}", self.description, other.description), move |v| {
            a(v).add(&b(v))
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let (a, c) = (self.f.clone(), c.clone());
        Self::new(self.n, self.big_n, format!("{}*{}", format_rational(&c), self.description), move |v| {
            a(v).scale(&c)
        })
    }

    /// Dense matrix, column `j` being the image of the `j`-th basis vector.
    pub fn materialize(&self) -> Vec<Vec<Rational>> {
        let dim = self.big_n.pow(self.n as u32);
        let cols: Vec<TensorVector> = (0..dim).map(|j| self.apply(&TensorVector::unit(self.n, self.big_n, j))).collect();
        (0..dim).map(|i| cols.iter().map(|c| c.entry(i)).collect()).collect()
    }
}

impl fmt::Debug for TensorOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorOperator(n={}, N={}, {})", self.n, self.big_n, self.description)
    }
}

fn check_pair(k: usize, l: usize, n: usize) -> Result<()> {
    if k == 0 || k >= l || l > n {
        return Err(Error::OutOfRange(format!("pair ({k},{l}) for n={n}")));
    }
    Ok(())
}

/// Swaps tensor factors `k` and `l`.
pub fn act_transposition(k: usize, l: usize, n: usize, big_n: usize) -> Result<TensorOperator> {
    check_pair(k, l, n)?;
    Ok(act_diagram(&BrauerDiagram::transposition(k, l, n)?, big_n))
}

/// `u(…i_k…i_l…) ↦ δ(i_k,i_l)·Σ_i u(…i…i…)`.
pub fn act_bar(k: usize, l: usize, n: usize, big_n: usize) -> Result<TensorOperator> {
    check_pair(k, l, n)?;
    Ok(act_diagram(&BrauerDiagram::bar_transposition(k, l, n)?, big_n))
}

/// The operator of a diagram: the matrix entry between `u(i)` (top) and
/// `u(i′)` (bottom) is the product over edges of the Kronecker delta of the
/// two endpoint indices.
pub fn act_diagram(g: &BrauerDiagram, big_n: usize) -> TensorOperator {
    let n = g.n();
    let mut through = Vec::new(); // (top, bottom strand)
    let mut caps = Vec::new(); // top-top
    let mut cups = Vec::new(); // bottom-bottom
    for (a, b) in g.edges() {
        match (a < n, b < n) {
            (true, true) => caps.push((a, b)),
            (false, false) => cups.push((a - n, b - n)),
            (true, false) => through.push((a, b - n)),
            (false, true) => through.push((b, a - n)),
        }
    }
    let desc = g.to_string();
    TensorOperator::new(n, big_n, desc, move |v| {
        let mut out = TensorVector::zero_over(n, big_n, v.den.clone());
        let mut top = vec![0usize; n];
        let mut d = vec![0usize; n];
        for (j, a) in v.nonzero() {
            v.fill_digits(j, &mut d);
            if cups.iter().any(|&(p, q)| d[p] != d[q]) {
                continue;
            }
            for &(t, b) in &through {
                top[t] = d[b];
            }
            let free = big_n.pow(caps.len() as u32);
            for mut c in 0..free {
                for &(p, q) in &caps {
                    top[p] = c % big_n;
                    top[q] = c % big_n;
                    c /= big_n;
                }
                let i = out.index_of(&top);
                out.num[i] += a;
            }
        }
        out
    })
}

/// `Σ c(N)·act(d)` with coefficients evaluated at this `N`.
pub fn act_element(a: &AlgebraElement, big_n: usize) -> TensorOperator {
    let terms: Vec<(TensorOperator, Rational)> = a
        .specialize(&rat(big_n as i64, 1))
        .into_iter()
        .map(|(d, c)| (act_diagram(&d, big_n), c))
        .collect();
    let n = a.n();
    TensorOperator::new(n, big_n, a.to_string(), move |v| {
        terms
            .iter()
            .fold(TensorVector::zero(n, big_n), |acc, (op, c)| acc.add(&op.apply(v).scale(c)))
    })
}

/// Outcome of one oracle check.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub detail: String,
    pub passed: bool,
    pub seconds: f64,
}

impl OracleCheck {
    fn new(name: &str, detail: String, passed: bool) -> Self {
        OracleCheck { name: name.into(), detail, passed, seconds: 0.0 }
    }
}

/// Basis vectors when `N^n ≤ 1024`, otherwise four random vectors.
pub fn test_vectors(n: usize, big_n: usize, rng: &mut impl Rng) -> Vec<TensorVector> {
    let dim = big_n.pow(n as u32);
    if dim <= 1024 {
        (0..dim).map(|j| TensorVector::unit(n, big_n, j)).collect()
    } else {
        (0..4).map(|_| TensorVector::random(n, big_n, rng)).collect()
    }
}

fn agree(a: &TensorOperator, b: &TensorOperator, vectors: &[TensorVector]) -> bool {
    vectors.iter().all(|v| a.apply(v) == b.apply(v))
}

/// `act(g)∘act(g′) = N^q·act(g∘g′)` on all generator pairs and `trials`
/// random diagram pairs.
pub fn verify_homomorphism(n: usize, big_n: usize, trials: usize, rng: &mut impl Rng) -> OracleCheck {
    let vectors = test_vectors(n, big_n, rng);
    let mut gens: Vec<BrauerDiagram> = vec![BrauerDiagram::identity(n)];
    for k in 1..n {
        gens.push(BrauerDiagram::s(k, n).expect("k < n"));
        gens.push(BrauerDiagram::sbar(k, n).expect("k < n"));
    }
    // repeated pairs are common for small n and checked once
    let mut pairs: BTreeSet<(BrauerDiagram, BrauerDiagram)> = BTreeSet::new();
    for a in &gens {
        for b in &gens {
            pairs.insert((a.clone(), b.clone()));
        }
    }
    for _ in 0..trials {
        let a = BrauerDiagram::random(n, rng);
        let b = BrauerDiagram::random(n, rng);
        pairs.insert((a, b));
    }
    let mut failures = Vec::new();
    for (a, b) in &pairs {
        let (c, q) = a.compose(b).expect("same size");
        let lhs = act_diagram(a, big_n).compose(&act_diagram(b, big_n));
        let rhs = act_diagram(&c, big_n).scale(&rat(big_n.pow(q as u32) as i64, 1));
        if !agree(&lhs, &rhs, &vectors) {
            failures.push(format!("{a} * {b}"));
        }
    }
    OracleCheck::new(
        "homomorphism",
        format!("n={n} N={big_n}: {} pairs, {} failures {:?}", pairs.len(), failures.len(), failures),
        failures.is_empty(),
    )
}

/// The operator of every diagram equals the product of generator operators
/// along its factorization.
pub fn verify_factorizations(n: usize, big_n: usize, rng: &mut impl Rng) -> OracleCheck {
    let vectors = test_vectors(n, big_n, rng);
    let mut bad = Vec::new();
    let all = BrauerDiagram::all(n);
    for d in &all {
        let word = d.factorize().word();
        let op = word.iter().fold(TensorOperator::identity(n, big_n), |acc, g| {
            let gd = match g {
                Generator::S(k) => BrauerDiagram::s(*k, n),
                Generator::SBar(k) => BrauerDiagram::sbar(*k, n),
            }
            .expect("generator in range");
            acc.compose(&act_diagram(&gd, big_n))
        });
        if !agree(&op, &act_diagram(d, big_n), &vectors) {
            bad.push(d.to_string());
        }
    }
    OracleCheck::new(
        "factorization",
        format!("n={n} N={big_n}: {} diagrams, failures {bad:?}", all.len()),
        bad.is_empty(),
    )
}

/// Rank over ℚ of the operators of all diagrams in `B(n)`.
pub fn centralizer_rank(n: usize, big_n: usize) -> usize {
    let rows: Vec<Vec<Rational>> = BrauerDiagram::all(n)
        .iter()
        .map(|d| act_diagram(d, big_n).materialize().into_iter().flatten().collect())
        .collect();
    rank(rows)
}

/// Row rank by exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let prow: Vec<Rational> = rows[r].iter().map(|x| x / &pivot).collect();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for (x, y) in rows[i].iter_mut().zip(&prow).skip(c) {
                *x -= &f * y;
            }
        }
        rows[r] = prow;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// `Σ_λ (#paths to λ)²` over `λ ∈ O(n,N)`.
pub fn predicted_rank(n: usize, big_n: usize) -> usize {
    enumerate_o(n, big_n as u64)
        .iter()
        .map(|l| enumerate_paths(l, n, big_n as u64).map_or(0, |p| p.len().pow(2)))
        .sum()
}

/// `F_ij = E_ij - E_ji` acting on tensor factor `pos`; indices 0-based.
fn apply_f(v: &TensorVector, i: usize, j: usize, pos: usize) -> TensorVector {
    let mut out = TensorVector::zero_over(v.n, v.big_n, v.den.clone());
    for (idx, a) in v.nonzero() {
        let mut d = v.digits(idx);
        // E_ij u(j) = u(i), E_ji u(i) = u(j)
        if d[pos] == j {
            d[pos] = i;
            let t = out.index_of(&d);
            out.num[t] += a;
        } else if d[pos] == i {
            d[pos] = j;
            let t = out.index_of(&d);
            out.num[t] -= a;
        }
    }
    out
}

/// `-(1/4) Σ_{i,j} F_ij²` with each `F_ij` acting as a derivation on the
/// tensor product.
pub fn casimir_operator(n: usize, big_n: usize) -> TensorOperator {
    TensorOperator::new(n, big_n, "casimir", move |v| {
        let mut acc = TensorVector::zero(n, big_n);
        for i in 0..big_n {
            for j in 0..big_n {
                if i == j {
                    continue;
                }
                let f = |w: &TensorVector| {
                    (0..n).fold(TensorVector::zero(n, big_n), |s, p| s.add(&apply_f(w, i, j, p)))
                };
                acc = acc.add(&f(&f(v)));
            }
        }
        acc.scale(&rat(-1, 4))
    })
}

/// `x_1 + … + x_n` through diagrams against the Casimir operator.
pub fn casimir_check(n: usize, big_n: usize, rng: &mut impl Rng) -> OracleCheck {
    let mut total = AlgebraElement::zero(n);
    for k in 1..=n {
        total = total.add(&jucys_murphy(k, n).expect("k in range"));
    }
    let lhs = act_element(&total, big_n);
    let rhs = casimir_operator(n, big_n);
    let vectors: Vec<TensorVector> = (0..3).map(|_| TensorVector::random(n, big_n, rng)).collect();
    OracleCheck::new("casimir", format!("n={n} N={big_n}: 3 random vectors"), agree(&lhs, &rhs, &vectors))
}

/// The eigenvalues of `x_k` allowed at level `k`: `x_k` along every path
/// of length `k` in the branching graph.
pub fn predicted_spectrum(k: usize, big_n: usize) -> Vec<Rational> {
    let bn = rat(big_n as i64, 1);
    let mut out: Vec<Rational> = Vec::new();
    for l in enumerate_o(k, big_n as u64) {
        for p in enumerate_paths(&l, k, big_n as u64).unwrap_or_default() {
            let e = jm_eigenvalue(&p, k, &bn);
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out.sort();
    out
}

/// `∏_e (x_k - e) = 0` over the predicted spectrum.
pub fn spectrum_check(n: usize, big_n: usize, k: usize, rng: &mut impl Rng) -> OracleCheck {
    let spectrum = predicted_spectrum(k, big_n);
    let xk = act_element(&jucys_murphy(k, n).expect("k in range"), big_n);
    let vectors = test_vectors(n, big_n, rng);
    let passed = vectors.iter().all(|v| {
        spectrum
            .iter()
            .fold(v.clone(), |w, e| xk.apply(&w).sub(&w.scale(e)))
            .is_zero()
    });
    let s: Vec<String> = spectrum.iter().map(format_rational).collect();
    OracleCheck::new("spectrum", format!("n={n} N={big_n} x{k}: {{{}}}", s.join(", ")), passed)
}

/// `g^{⊗n}` for the signed permutation `u(i) ↦ sign[i]·u(perm[i])`.
fn signed_permutation(n: usize, big_n: usize, perm: Vec<usize>, sign: Vec<i64>) -> TensorOperator {
    TensorOperator::new(n, big_n, "signed permutation", move |v| {
        let mut out = TensorVector::zero_over(n, big_n, v.den.clone());
        for (idx, a) in v.nonzero() {
            let d = v.digits(idx);
            let s: i64 = d.iter().map(|&x| sign[x]).product();
            let t: Vec<usize> = d.iter().map(|&x| perm[x]).collect();
            let t = out.index_of(&t);
            out.num[t] += a * BigInt::from(s);
        }
        out
    })
}

/// Every diagram operator commutes with the diagonal action of adjacent
/// coordinate swaps and of the sign change of the first coordinate.
pub fn orthogonal_commutation(n: usize, big_n: usize, rng: &mut impl Rng) -> OracleCheck {
    let mut group = Vec::new();
    for i in 0..big_n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..big_n).collect();
        perm.swap(i, i + 1);
        group.push(signed_permutation(n, big_n, perm, vec![1; big_n]));
    }
    let mut sign = vec![1; big_n];
    sign[0] = -1;
    group.push(signed_permutation(n, big_n, (0..big_n).collect(), sign));
    let vectors = test_vectors(n, big_n, rng);
    let mut bad = Vec::new();
    for d in BrauerDiagram::all(n) {
        let a = act_diagram(&d, big_n);
        if !group.iter().all(|g| agree(&a.compose(g), &g.compose(&a), &vectors)) {
            bad.push(d.to_string());
        }
    }
    OracleCheck::new("orthogonal", format!("n={n} N={big_n}: failures {bad:?}"), bad.is_empty())
}

/// `act(g)(a v + b w) = a act(g)v + b act(g)w` on random data.
pub fn linearity_check(n: usize, big_n: usize, rng: &mut impl Rng) -> OracleCheck {
    let all = BrauerDiagram::all(n);
    let passed = (0..5).all(|_| {
        let g = act_diagram(all.choose(rng).expect("nonempty"), big_n);
        let v = TensorVector::random(n, big_n, rng);
        let w = TensorVector::random(n, big_n, rng);
        let (a, b) = (rat(rng.gen_range(-4..=4), 1), rat(rng.gen_range(1..=4), 3));
        g.apply(&v.scale(&a).add(&w.scale(&b))) == g.apply(&v).scale(&a).add(&g.apply(&w).scale(&b))
    });
    OracleCheck::new("linearity", format!("n={n} N={big_n}: 5 random triples"), passed)
}

fn timed(f: impl FnOnce() -> OracleCheck) -> OracleCheck {
    let start = std::time::Instant::now();
    let mut c = f();
    c.seconds = start.elapsed().as_secs_f64();
    c
}

/// The full oracle suite at one `(n, N)`.
pub const ORACLE_CHECKS: [&str; 7] =
    ["linearity", "factorization", "homomorphism", "centralizer-rank", "casimir", "spectrum", "orthogonal"];

/// All oracle checks at `(n, N)`.
pub fn oracle_suite(n: usize, big_n: usize, rng: &mut impl Rng) -> Vec<OracleCheck> {
    ORACLE_CHECKS.iter().flat_map(|name| oracle_check(name, n, big_n, rng).expect("known name")).collect()
}

/// One named oracle check; `spectrum` yields one result per `x_k`. The
/// centralizer rank is only computed for `n ≤ 3` and the Casimir check
/// needs `N ≥ 2`, otherwise the list is empty.
pub fn oracle_check(name: &str, n: usize, big_n: usize, rng: &mut impl Rng) -> Option<Vec<OracleCheck>> {
    let out = match name {
        "linearity" => vec![timed(|| linearity_check(n, big_n, rng))],
        "factorization" => vec![timed(|| verify_factorizations(n, big_n, rng))],
        "homomorphism" => vec![timed(|| verify_homomorphism(n, big_n, 100, rng))],
        "centralizer-rank" if n <= 3 => vec![timed(|| {
            let r = centralizer_rank(n, big_n);
            let p = predicted_rank(n, big_n);
            OracleCheck::new("centralizer-rank", format!("n={n} N={big_n}: rank {r}, predicted {p}"), r == p)
        })],
        "casimir" if big_n >= 2 => vec![timed(|| casimir_check(n, big_n, rng))],
        "spectrum" => (1..=n).map(|k| timed(|| spectrum_check(n, big_n, k, rng))).collect(),
        "orthogonal" => vec![timed(|| orthogonal_commutation(n, big_n, rng))],
        "centralizer-rank" | "casimir" => vec![],
        _ => return None,
    };
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn u(big_n: usize, i: &[usize]) -> TensorVector {
        TensorVector::basis(big_n, i).unwrap()
    }

    #[test]
    fn generator_actions() {
        let bar = act_bar(1, 2, 2, 2).unwrap();
        assert_eq!(bar.apply(&u(2, &[1, 1])), u(2, &[1, 1]).add(&u(2, &[2, 2])));
        assert!(bar.apply(&u(2, &[1, 2])).is_zero());
        let sw = act_transposition(1, 2, 2, 3).unwrap();
        assert_eq!(sw.apply(&u(3, &[1, 2])), u(3, &[2, 1]));
        assert!(act_bar(2, 2, 2, 2).is_err());
        let id = act_diagram(&BrauerDiagram::identity(3), 2);
        assert_eq!(id.apply(&u(2, &[1, 2, 2])), u(2, &[1, 2, 2]));
    }

    #[test]
    fn bar_has_trace_n() {
        for big_n in 1..=4 {
            let m = act_diagram(&BrauerDiagram::sbar(1, 2).unwrap(), big_n).materialize();
            let tr: Rational = (0..m.len()).map(|i| m[i][i].clone()).sum();
            assert_eq!(tr, rat(big_n as i64, 1));
        }
    }

    #[test]
    fn permutation_operator() {
        // Factor i moves to position p(i).
        let d = BrauerDiagram::from_permutation(&[1, 2, 0]).unwrap();
        assert_eq!(act_diagram(&d, 3).apply(&u(3, &[1, 2, 3])), u(3, &[3, 1, 2]));
    }

    #[test]
    fn centralizer_ranks() {
        assert_eq!(centralizer_rank(2, 2), 3);
        assert_eq!(centralizer_rank(2, 3), 3);
        assert_eq!(centralizer_rank(3, 2), 10);
        assert_eq!(centralizer_rank(3, 3), 15);
        for big_n in 2..=4 {
            for n in 1..=3 {
                assert_eq!(centralizer_rank(n, big_n), predicted_rank(n, big_n), "n={n} N={big_n}");
            }
        }
    }

    #[test]
    fn casimir_on_invariant() {
        let v = u(2, &[1, 1]).add(&u(2, &[2, 2]));
        assert!(casimir_operator(2, 2).apply(&v).is_zero());
        let c1 = casimir_operator(1, 3).apply(&u(3, &[2]));
        assert_eq!(c1, u(3, &[2]));
    }

    #[test]
    fn small_suites_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, big_n) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)] {
            for c in oracle_suite(n, big_n, &mut rng) {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }
}
