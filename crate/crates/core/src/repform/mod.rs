//! Irreducible representations `V(λ,n)` of `B(n,N)` in Young's orthogonal
//! form, and the generating series of the central elements `z_k^{(i)}`.

mod build;
mod matrix;
mod series;

pub use build::{build_representation, FiberCheck, Representation};
pub use matrix::RepMatrix;
pub use series::{q_k_series, q_series, q_series_alt, z_series};
pub(crate) use series::box_factor;

use num_traits::{One, Signed};

use crate::coeffs::Rational;
use crate::error::{Error, Result};
use crate::shapes::{enumerate_paths, UpDownPath, YoungDiagram};

/// The column bound used for the label sets at a specialized `N`: `N`
/// itself for positive integers, no bound for other positive rationals.
pub fn label_bound(big_n: &Rational) -> Result<u64> {
    if !big_n.is_positive() {
        return Err(Error::InvalidShape(format!("N must be positive, got {big_n}")));
    }
    if big_n.denom().is_one() {
        Ok(big_n.numer().try_into().unwrap_or(u64::MAX))
    } else {
        Ok(u64::MAX)
    }
}

/// `(N-1)/2`.
pub fn half(big_n: &Rational) -> Rational {
    (big_n - Rational::one()) / Rational::from_integer(2.into())
}

/// The ordered up-down paths indexing the canonical basis of `V(λ,n)`.
#[derive(Clone, Debug)]
pub struct PathBasis {
    pub lambda: YoungDiagram,
    pub n: usize,
    pub big_n: Rational,
    pub paths: Vec<UpDownPath>,
}

impl PathBasis {
    pub fn new(lambda: &YoungDiagram, n: usize, big_n: &Rational) -> Result<Self> {
        let bound = label_bound(big_n)?;
        let paths = enumerate_paths(lambda, n, bound)?;
        Ok(PathBasis { lambda: lambda.clone(), n, big_n: big_n.clone(), paths })
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    /// Eigenvalue of `x_k` on `v(Λ)` for the `i`-th path.
    pub fn jm(&self, i: usize, k: usize) -> Rational {
        jm_eigenvalue(&self.paths[i], k, &self.big_n)
    }
}

/// `±((N-1)/2 + c)` where `c` is the content of the box added (`+`) or
/// removed (`-`) at step `k` of the path.
pub fn jm_eigenvalue(path: &UpDownPath, k: usize, big_n: &Rational) -> Rational {
    let v = half(big_n) + Rational::from_integer(path.content_at(k).into());
    if path.adds_at(k) {
        v
    } else {
        -v
    }
}

/// Eigenvalue of `x_1 + … + x_n` on `V(λ,n)`: `(N-1)/2·|λ| + Σ contents`.
pub fn central_content_eigenvalue(lambda: &YoungDiagram, big_n: &Rational) -> Rational {
    half(big_n) * Rational::from_integer(lambda.size().into())
        + Rational::from_integer(lambda.content_sum().into())
}

/// Whether the joint spectra `(x_1(Λ), …, x_n(Λ))` are pairwise distinct
/// across the paths of the basis; returns a colliding pair otherwise.
pub fn spectral_collision(basis: &PathBasis) -> Option<(usize, usize)> {
    let tuples: Vec<Vec<Rational>> = (0..basis.dim())
        .map(|i| (1..=basis.n).map(|k| basis.jm(i, k)).collect())
        .collect();
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            if tuples[i] == tuples[j] {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    fn path(steps: &[&[u32]]) -> UpDownPath {
        UpDownPath::new(steps.iter().map(|s| yd(s)).collect(), 100).unwrap()
    }

    #[test]
    fn eigenvalues_along_paths() {
        assert_eq!(jm_eigenvalue(&path(&[&[], &[1]]), 1, &rat(3, 1)), rat(1, 1));
        assert_eq!(jm_eigenvalue(&path(&[&[], &[1], &[2]]), 2, &rat(3, 1)), rat(2, 1));
        assert_eq!(jm_eigenvalue(&path(&[&[], &[1], &[]]), 2, &rat(3, 1)), rat(-1, 1));
    }

    #[test]
    fn central_eigenvalue_is_sum_along_any_path() {
        assert_eq!(central_content_eigenvalue(&yd(&[1]), &rat(5, 1)), rat(2, 1));
        assert_eq!(central_content_eigenvalue(&yd(&[2]), &rat(3, 1)), rat(3, 1));
        assert_eq!(central_content_eigenvalue(&yd(&[]), &rat(3, 1)), rat(0, 1));
        for (lam, n) in [(yd(&[2, 1]), 5), (yd(&[1]), 3), (yd(&[]), 4)] {
            let b = PathBasis::new(&lam, n, &rat(4, 1)).unwrap();
            for i in 0..b.dim() {
                let s: Rational = (1..=n).map(|k| b.jm(i, k)).sum();
                assert_eq!(s, central_content_eigenvalue(&lam, &rat(4, 1)));
            }
        }
    }

    #[test]
    fn label_bounds() {
        assert_eq!(label_bound(&rat(3, 1)).unwrap(), 3);
        assert_eq!(label_bound(&rat(7, 2)).unwrap(), u64::MAX);
        assert!(label_bound(&rat(-1, 1)).is_err());
    }
}
