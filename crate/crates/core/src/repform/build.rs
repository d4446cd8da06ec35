use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{central_content_eigenvalue, PathBasis, RepMatrix};
use crate::coeffs::{format_rational, sqrt_of_rational, Rational, Ring, SurdSum};
use crate::diagrams::{jucys_murphy, relation_instances, AlgebraElement, BrauerDiagram, Letter, RelationCheck};
use crate::error::{Error, Result};
use crate::shapes::{b_list_at, YoungDiagram};

/// Matrices of `s_k`, `s̄_k` and `x_k` on `V(λ,n)` at a specialized `N`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub basis: PathBasis,
    /// `s[k-1]` is `ρ(s_k)`.
    pub s: Vec<RepMatrix>,
    /// `sbar[k-1]` is `ρ(s̄_k)`.
    pub sbar: Vec<RepMatrix>,
    /// `x[k-1]` holds the diagonal of `ρ(x_k)`.
    pub x: Vec<Vec<Rational>>,
}

/// Result of the rank-one / trace-`N` check on one `s̄_k` fiber block.
#[derive(Clone, Debug, Serialize)]
pub struct FiberCheck {
    pub k: usize,
    pub paths: Vec<usize>,
    pub symmetric: bool,
    pub trace_is_n: bool,
    pub rank_one: bool,
    pub nonnegative_diagonal: bool,
}

impl FiberCheck {
    pub fn passed(&self) -> bool {
        self.symmetric && self.trace_is_n && self.rank_one && self.nonnegative_diagonal
    }
}

/// Builds all generator matrices and runs the full relation check; any
/// failing relation is returned as an error naming it.
pub fn build_representation(lambda: &YoungDiagram, n: usize, big_n: &Rational) -> Result<Representation> {
    let rep = Representation::construct(lambda, n, big_n)?;
    if let Some(bad) = rep.verify_relations().into_iter().find(|c| !c.passed) {
        return Err(Error::RelationFailed(format!(
            "{} ({}) on V({lambda},{n}) at N={}",
            bad.instance,
            bad.relation,
            format_rational(big_n)
        )));
    }
    Ok(rep)
}

impl Representation {
    /// Builds the matrices without verifying relations.
    pub fn construct(lambda: &YoungDiagram, n: usize, big_n: &Rational) -> Result<Self> {
        let basis = PathBasis::new(lambda, n, big_n)?;
        let x: Vec<Vec<Rational>> = (1..=n)
            .map(|k| (0..basis.dim()).map(|i| basis.jm(i, k)).collect())
            .collect();
        let mut rep = Representation { basis, s: Vec::new(), sbar: Vec::new(), x };
        for k in 1..n {
            let (s, sbar) = rep.generator_matrices(k)?;
            rep.s.push(s);
            rep.sbar.push(sbar);
        }
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn n(&self) -> usize {
        self.basis.n
    }

    pub fn big_n(&self) -> &Rational {
        &self.basis.big_n
    }

    pub fn x_matrix(&self, k: usize) -> RepMatrix {
        RepMatrix::diagonal(&self.x[k - 1])
    }

    fn xk(&self, i: usize, k: usize) -> &Rational {
        &self.x[k - 1][i]
    }

    /// Groups basis indices by the path with step `k` forgotten.
    pub fn fibers(&self, k: usize) -> Vec<Vec<usize>> {
        let mut map: HashMap<Vec<&YoungDiagram>, usize> = HashMap::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (i, p) in self.basis.paths.iter().enumerate() {
            let key: Vec<&YoungDiagram> =
                p.steps().iter().enumerate().filter(|(l, _)| *l != k).map(|(_, d)| d).collect();
            match map.get(&key) {
                Some(&f) => out[f].push(i),
                None => {
                    map.insert(key, out.len());
                    out.push(vec![i]);
                }
            }
        }
        out
    }

    /// Diagonal value of `s̄_k` on a path with `Λ(k-1) = Λ(k+1) = μ` and `x_k = b`.
    fn sbar_diagonal(&self, mu: &YoungDiagram, b: &Rational) -> Result<Rational> {
        let minus_half = Rational::new((-1).into(), 2.into());
        let mut prod = Rational::one();
        for bj in b_list_at(mu, self.big_n()) {
            if &bj == b {
                continue;
            }
            prod *= (b + &bj) / (b - &bj);
        }
        if b == &minus_half {
            Ok(-prod)
        } else {
            Ok((b * Rational::from_integer(2.into()) + Rational::one()) * prod)
        }
    }

    fn generator_matrices(&self, k: usize) -> Result<(RepMatrix, RepMatrix)> {
        let dim = self.dim();
        let mut s = RepMatrix::zero(dim);
        let mut sbar = RepMatrix::zero(dim);
        let odd_n = self.big_n().denom().is_one() && self.big_n().numer() % 2 != Zero::zero();
        let ctx = |what: &str| format!("{what} for k={k} on V({},{}) at N={}", self.basis.lambda, self.n(), format_rational(self.big_n()));

        for fiber in self.fibers(k) {
            let p0 = &self.basis.paths[fiber[0]];
            let before = p0.at(k - 1);
            let after = p0.at(k + 1);
            if before != after {
                if fiber.len() > 2 {
                    return Err(Error::InvalidShape(ctx("fiber with more than two paths")));
                }
                for &i in &fiber {
                    let d = self.xk(i, k + 1) - self.xk(i, k);
                    if d.is_zero() {
                        return Err(Error::DivisionByZero(ctx("x_{k+1} = x_k")));
                    }
                    s.set(i, i, SurdSum::rational(d.recip()));
                }
                if let [i, j] = fiber[..] {
                    let d = self.xk(i, k + 1) - self.xk(i, k);
                    let off = sqrt_of_rational(&(Rational::one() - (&d * &d).recip()))?;
                    s.set(i, j, off.clone());
                    s.set(j, i, off);
                }
                continue;
            }

            let mu = before;
            let diag: Vec<Rational> = fiber
                .iter()
                .map(|&i| self.sbar_diagonal(mu, self.xk(i, k)))
                .collect::<Result<_>>()?;
            for (a, &i) in fiber.iter().enumerate() {
                for (b, &j) in fiber.iter().enumerate() {
                    let v = if a == b {
                        SurdSum::rational(diag[a].clone())
                    } else {
                        sqrt_of_rational(&(&diag[a] * &diag[b]))?
                    };
                    sbar.set(i, j, v);
                }
            }
            for &i in &fiber {
                for &j in &fiber {
                    let denom = self.xk(i, k) + self.xk(j, k);
                    let delta = if i == j { SurdSum::one() } else { SurdSum::zero() };
                    let v = if denom.is_zero() {
                        if i == j && odd_n {
                            // Read off the diagonal of s_k s̄_k = s̄_k, using s̄_k(Λ,Λ) = 1.
                            let mut t = Rational::one();
                            for (c, &l) in fiber.iter().enumerate() {
                                if l != i {
                                    t -= &diag[c] / self.xk(l, k);
                                }
                            }
                            SurdSum::rational(t)
                        } else {
                            return Err(Error::DivisionByZero(ctx("x_k(Λ) + x_k(Λ′) = 0")));
                        }
                    } else {
                        sbar.get(i, j).sub_ref(&delta).mul_ref(&SurdSum::rational(denom.recip()))
                    };
                    s.set(i, j, v);
                }
            }
        }
        Ok((s, sbar))
    }

    fn letter(&self, l: Letter) -> &RepMatrix {
        match l {
            Letter::S(k) => &self.s[k - 1],
            Letter::B(k) => &self.sbar[k - 1],
        }
    }

    fn word(&self, w: &[Letter]) -> RepMatrix {
        w.iter()
            .fold(RepMatrix::identity(self.dim()), |acc, &l| acc.mul(self.letter(l)))
    }

    /// `ρ(γ)` for any diagram, through its factorization into generators.
    pub fn rho_diagram(&self, d: &BrauerDiagram) -> RepMatrix {
        assert_eq!(d.n(), self.n(), "diagram size differs from representation");
        let word: Vec<Letter> = d
            .factorize()
            .word()
            .into_iter()
            .map(|g| match g {
                crate::diagrams::Generator::S(k) => Letter::S(k),
                crate::diagrams::Generator::SBar(k) => Letter::B(k),
            })
            .collect();
        self.word(&word)
    }

    /// `ρ(a)` with the coefficients of `a` evaluated at this `N`.
    pub fn rho_element(&self, a: &AlgebraElement) -> RepMatrix {
        let mut out = RepMatrix::zero(self.dim());
        for (d, c) in a.specialize(self.big_n()) {
            out = out.add(&self.rho_diagram(&d).scale(&c));
        }
        out
    }

    /// Checks the presentation relations and the Jucys-Murphy relations on
    /// the matrices, plus the diagonal action of `x_k` and of their sum.
    pub fn verify_relations(&self) -> Vec<RelationCheck> {
        let n = self.n();
        let big_n = self.big_n().clone();
        let mut out = Vec::new();
        let mut push = |relation: &str, instance: String, passed: bool| {
            out.push(RelationCheck { relation: relation.into(), instance, passed });
        };
        for (relation, instance, lhs, rhs, pow_n) in relation_instances(n) {
            let mut r = self.word(&rhs);
            for _ in 0..pow_n {
                r = r.scale(&big_n);
            }
            push(&relation, instance, self.word(&lhs) == r);
        }

        let id = RepMatrix::identity(self.dim());
        for k in 1..n {
            let s = &self.s[k - 1];
            let sb = &self.sbar[k - 1];
            for l in (1..=n).filter(|&l| l != k && l != k + 1) {
                let x = self.x_matrix(l);
                push("jm-commute", format!("s{k} x{l} = x{l} s{k}"), s.mul(&x) == x.mul(s));
                push("jm-commute", format!("sbar{k} x{l} = x{l} sbar{k}"), sb.mul(&x) == x.mul(sb));
            }
            let xk = self.x_matrix(k);
            let xk1 = self.x_matrix(k + 1);
            push(
                "jm-exchange",
                format!("s{k} x{k} - x{} s{k} = sbar{k} - 1", k + 1),
                s.mul(&xk).sub(&xk1.mul(s)) == sb.sub(&id),
            );
            push(
                "jm-exchange",
                format!("s{k} x{} - x{k} s{k} = 1 - sbar{k}", k + 1),
                s.mul(&xk1).sub(&xk.mul(s)) == id.sub(sb),
            );
            let sum = xk.add(&xk1);
            push("jm-annihilate", format!("sbar{k} (x{k} + x{}) = 0", k + 1), sb.mul(&sum).is_zero());
            push("jm-annihilate", format!("(x{k} + x{}) sbar{k} = 0", k + 1), sum.mul(sb).is_zero());
        }

        // ρ(x_k) from the algebra element must be the diagonal of eigenvalues.
        let mut total = RepMatrix::zero(self.dim());
        for k in 1..=n {
            let xk = jucys_murphy(k, n).expect("k in range");
            let m = self.rho_element(&xk);
            push("jm-diagonal", format!("rho(x{k}) = diag"), m == self.x_matrix(k));
            total = total.add(&m);
        }
        let c = central_content_eigenvalue(&self.basis.lambda, &big_n);
        push("jm-central", "rho(x1 + ... + xn) = c(lambda,N)".into(), total == id.scale(&c));
        push(
            "symmetric",
            "s_k and sbar_k symmetric".into(),
            self.s.iter().chain(&self.sbar).all(|m| m.is_symmetric()),
        );
        out
    }

    /// Rank-one, trace-`N`, positive semidefinite check on every `s̄_k`
    /// block over a fiber with `Λ(k-1) = Λ(k+1)`.
    pub fn fiber_checks(&self) -> Vec<FiberCheck> {
        let big_n = SurdSum::rational(self.big_n().clone());
        let mut out = Vec::new();
        for k in 1..self.n() {
            for fiber in self.fibers(k) {
                let p = &self.basis.paths[fiber[0]];
                if p.at(k - 1) != p.at(k + 1) {
                    continue;
                }
                let b = self.sbar[k - 1].block(&fiber);
                let m = b.dim();
                let mut rank_one = !b.is_zero();
                for i in 0..m {
                    for j in 0..m {
                        for i2 in i + 1..m {
                            for j2 in j + 1..m {
                                let minor = b.get(i, j).mul_ref(&b.get(i2, j2)).sub_ref(&b.get(i, j2).mul_ref(&b.get(i2, j)));
                                rank_one &= minor.is_zero();
                            }
                        }
                    }
                }
                let nonnegative_diagonal = (0..m).all(|i| {
                    b.get(i, i).as_rational().map(|q| !q.is_negative()).unwrap_or(false)
                });
                out.push(FiberCheck {
                    k,
                    paths: fiber.clone(),
                    symmetric: b.is_symmetric(),
                    trace_is_n: b.trace() == big_n,
                    rank_one,
                    nonnegative_diagonal,
                });
            }
        }
        out
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    fn scalar(m: &RepMatrix) -> Rational {
        m.as_scalar().unwrap().as_rational().unwrap()
    }

    #[test]
    fn one_dimensional_cases() {
        let r = build_representation(&yd(&[]), 2, &rat(5, 1)).unwrap();
        assert_eq!(scalar(&r.sbar[0]), rat(5, 1));
        let r = build_representation(&yd(&[2]), 2, &rat(4, 1)).unwrap();
        assert_eq!(scalar(&r.s[0]), rat(1, 1));
        let r = build_representation(&yd(&[1, 1]), 2, &rat(4, 1)).unwrap();
        assert_eq!(scalar(&r.s[0]), rat(-1, 1));
        let r = build_representation(&yd(&[]), 2, &rat(3, 1)).unwrap();
        assert_eq!(scalar(&r.s[0]), rat(1, 1));
        let r = build_representation(&yd(&[]), 2, &rat(2, 1)).unwrap();
        assert_eq!(scalar(&r.sbar[0]), rat(2, 1));
        assert_eq!(scalar(&r.s[0]), rat(1, 1));
    }

    #[test]
    fn trivial_symmetric_group_rep() {
        for big_n in 1..=4 {
            let r = build_representation(&yd(&[3]), 3, &rat(big_n + 1, 1)).unwrap();
            assert_eq!(r.dim(), 1);
            for k in 0..2 {
                assert_eq!(scalar(&r.s[k]), rat(1, 1));
                assert!(r.sbar[k].is_zero());
            }
        }
    }

    #[test]
    fn three_path_module() {
        let r = build_representation(&yd(&[1]), 3, &rat(3, 1)).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.x[1], vec![rat(2, 1), rat(0, 1), rat(-1, 1)]);
        let checks = r.fiber_checks();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c.passed()));
        assert_eq!(r.sbar[1].trace(), SurdSum::rational(rat(3, 1)));
    }

    #[test]
    fn relations_hold_at_small_sizes() {
        for big_n in [2, 3, 4, 5] {
            for n in 1..=4 {
                for lam in crate::shapes::enumerate_o(n, big_n) {
                    let r = Representation::construct(&lam, n, &rat(big_n as i64, 1)).unwrap();
                    for c in r.verify_relations() {
                        assert!(c.passed, "{} on {lam}, n={n}, N={big_n}", c.instance);
                    }
                    assert!(r.fiber_checks().iter().all(|c| c.passed()));
                }
            }
        }
    }

    #[test]
    fn associated_diagonal_entry() {
        let r = build_representation(&yd(&[1]), 3, &rat(3, 1)).unwrap();
        // Middle path passes through (1,1), associated with (1) at N = 3.
        assert_eq!(r.x[1][1], rat(0, 1));
        assert_eq!(r.s[1].get(1, 1), SurdSum::rational(rat(1, 2)));
    }

    #[test]
    fn central_elements_act_by_series_coefficients() {
        use crate::diagrams::z_element;
        use crate::repform::{half, z_series};
        for big_n in [3i64, 4, 5] {
            let h = half(&rat(big_n, 1));
            for k in 1..=3usize {
                for mu in crate::shapes::enumerate_o(k - 1, big_n as u64) {
                    let r = Representation::construct(&mu, k - 1, &rat(big_n, 1)).unwrap();
                    let z = z_series(&mu, &h, 4);
                    for i in 0..=4u32 {
                        let m = r.rho_element(&z_element(k, i).unwrap());
                        assert_eq!(m.as_scalar().unwrap(), SurdSum::rational(z.coeff(i as usize).clone()), "k={k} mu={mu} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_integer_dimension() {
        let r = build_representation(&yd(&[1]), 3, &rat(7, 2)).unwrap();
        assert_eq!(r.dim(), 3);
        assert!(r.fiber_checks().iter().all(|c| c.passed()));
    }
}
