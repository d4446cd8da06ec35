use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A perfect matching on `2n` vertices.
///
/// Vertices `0..n` are the top row `1..n` and `n..2n` the bottom row
/// `1̄..n̄`; `pairing[v]` is the partner of `v`. The derived order compares
/// the pairing arrays and fixes the term order of every printed element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    pairing: Vec<usize>,
}

impl BrauerDiagram {
    pub fn identity(n: usize) -> Self {
        let pairing = (0..2 * n).map(|v| if v < n { v + n } else { v - n }).collect();
        BrauerDiagram { n, pairing }
    }

    pub fn from_pairing(n: usize, pairing: Vec<usize>) -> Result<Self> {
        if pairing.len() != 2 * n {
            return Err(Error::SizeMismatch(pairing.len(), 2 * n));
        }
        for (v, &w) in pairing.iter().enumerate() {
            if w >= 2 * n || w == v || pairing[w] != v {
                return Err(Error::InvalidShape(format!(
                    "pairing is not a perfect matching at vertex {v}"
                )));
            }
        }
        Ok(BrauerDiagram { n, pairing })
    }

    /// Builds a diagram from its edge list in vertex indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut pairing = vec![usize::MAX; 2 * n];
        for &(a, b) in edges {
            if a >= 2 * n || b >= 2 * n {
                return Err(Error::OutOfRange(format!("vertex {} in B({n})", a.max(b))));
            }
            if pairing[a] != usize::MAX || pairing[b] != usize::MAX {
                return Err(Error::InvalidShape("vertex used twice".into()));
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        Self::from_pairing(n, pairing)
    }

    /// The diagram with edges `{p(i), ī}`, for `p` given by its 0-based images.
    pub fn from_permutation(p: &[usize]) -> Result<Self> {
        let n = p.len();
        let mut pairing = vec![usize::MAX; 2 * n];
        for (i, &pi) in p.iter().enumerate() {
            if pi >= n || pairing[pi] != usize::MAX {
                return Err(Error::InvalidShape("not a permutation".into()));
            }
            pairing[pi] = n + i;
            pairing[n + i] = pi;
        }
        Ok(BrauerDiagram { n, pairing })
    }

    /// The transposition `(k,l)`, 1-based.
    pub fn transposition(k: usize, l: usize, n: usize) -> Result<Self> {
        check_pair(k, l, n)?;
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(k - 1, l - 1);
        Self::from_permutation(&p)
    }

    /// The diagram whose only non-vertical edges are `{k,l}` and `{k̄,l̄}`.
    pub fn bar_transposition(k: usize, l: usize, n: usize) -> Result<Self> {
        check_pair(k, l, n)?;
        let mut d = Self::identity(n);
        let (a, b) = (k - 1, l - 1);
        d.pairing[a] = b;
        d.pairing[b] = a;
        d.pairing[n + a] = n + b;
        d.pairing[n + b] = n + a;
        Ok(d)
    }

    /// `s_k = (k, k+1)`.
    pub fn s(k: usize, n: usize) -> Result<Self> {
        Self::transposition(k, k + 1, n)
    }

    /// `s̄_k`.
    pub fn sbar(k: usize, n: usize) -> Result<Self> {
        Self::bar_transposition(k, k + 1, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn partner(&self, v: usize) -> usize {
        self.pairing[v]
    }

    pub fn is_top(&self, v: usize) -> bool {
        v < self.n
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n)
            .filter(|&v| v < self.pairing[v])
            .map(|v| (v, self.pairing[v]))
            .collect()
    }

    /// Number of horizontal edges in the top row.
    pub fn rank_deficit(&self) -> usize {
        (0..self.n).filter(|&v| self.pairing[v] < self.n).count() / 2
    }

    pub fn is_permutation(&self) -> bool {
        self.rank_deficit() == 0
    }

    /// For a permutation diagram, the 0-based images `p` with edges `{p(i), ī}`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_permutation() {
            return None;
        }
        Some((0..self.n).map(|i| self.pairing[self.n + i]).collect())
    }

    /// Adds vertical strands so that the result lives in `B(m)`, `m ≥ n`.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n, "cannot embed B({}) into B({m})", self.n);
        let n = self.n;
        let map = |v: usize| if v < n { v } else { v - n + m };
        let mut pairing = vec![0; 2 * m];
        for v in 0..2 * n {
            pairing[map(v)] = map(self.pairing[v]);
        }
        for k in n..m {
            pairing[k] = k + m;
            pairing[k + m] = k;
        }
        BrauerDiagram { n: m, pairing }
    }

    /// Shifts all strands right by `m`, filling strands `1..m` vertically.
    pub fn shift(&self, m: usize) -> Self {
        let n = self.n;
        let size = n + m;
        let map = |v: usize| if v < n { v + m } else { v - n + size + m };
        let mut pairing = vec![0; 2 * size];
        for v in 0..2 * n {
            pairing[map(v)] = map(self.pairing[v]);
        }
        for k in 0..m {
            pairing[k] = k + size;
            pairing[k + size] = k;
        }
        BrauerDiagram { n: size, pairing }
    }

    /// Inverse of `embed`: drops trailing vertical strands down to size `k`.
    pub fn restrict(&self, k: usize) -> Option<Self> {
        let n = self.n;
        if k > n || (k..n).any(|v| self.pairing[v] != v + n) {
            return None;
        }
        let map = |v: usize| if v < n { v } else { v - n + k };
        let mut pairing = vec![0; 2 * k];
        for v in (0..k).chain(n..n + k) {
            pairing[map(v)] = map(self.pairing[v]);
        }
        Some(BrauerDiagram { n: k, pairing })
    }

    /// The anti-involution exchanging the two rows.
    pub fn flip(&self) -> Self {
        let n = self.n;
        let swap = |v: usize| if v < n { v + n } else { v - n };
        let mut pairing = vec![0; 2 * n];
        for v in 0..2 * n {
            pairing[swap(v)] = swap(self.pairing[v]);
        }
        BrauerDiagram { n, pairing }
    }

    /// Stacks `self` on top of `other` and returns the resulting diagram
    /// together with the number of closed loops.
    pub fn compose(&self, other: &Self) -> Result<(Self, usize)> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Self) -> (Self, usize) {
        let n = self.n;
        let mut pairing = vec![usize::MAX; 2 * n];
        let mut seen_middle = vec![false; n];

        // Outer vertices: 0..n are the top of `self`, n..2n the bottom of `other`.
        // Walk alternately through `self` (entering from below at middle m as
        // vertex n+m) and `other` (entering from above at middle m as vertex m).
        for start in 0..2 * n {
            if pairing[start] != usize::MAX {
                continue;
            }
            let (mut in_self, mut v) = if start < n { (true, start) } else { (false, start) };
            let end = loop {
                if in_self {
                    let w = self.pairing[v];
                    if w < n {
                        break w;
                    }
                    let m = w - n;
                    seen_middle[m] = true;
                    in_self = false;
                    v = m;
                } else {
                    let w = other.pairing[v];
                    if w >= n {
                        break w;
                    }
                    seen_middle[w] = true;
                    in_self = true;
                    v = w + n;
                }
            };
            pairing[start] = end;
            pairing[end] = start;
        }

        let mut loops = 0;
        for m0 in 0..n {
            if seen_middle[m0] {
                continue;
            }
            loops += 1;
            let mut m = m0;
            loop {
                seen_middle[m] = true;
                let a = other.pairing[m];
                seen_middle[a] = true;
                m = self.pairing[a + n] - n;
                if m == m0 {
                    break;
                }
            }
        }
        (BrauerDiagram { n, pairing }, loops)
    }

    /// A uniformly random diagram: shuffle the vertices and pair neighbours.
    pub fn random(n: usize, rng: &mut impl rand::Rng) -> Self {
        use rand::seq::SliceRandom;
        let mut v: Vec<usize> = (0..2 * n).collect();
        v.shuffle(rng);
        let mut pairing = vec![0; 2 * n];
        for p in v.chunks(2) {
            pairing[p[0]] = p[1];
            pairing[p[1]] = p[0];
        }
        BrauerDiagram { n, pairing }
    }

    /// All `(2n-1)!!` diagrams of size `n`, in increasing order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut pairing = vec![usize::MAX; 2 * n];
        fn rec(n: usize, pairing: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
            let Some(v) = pairing.iter().position(|&p| p == usize::MAX) else {
                out.push(BrauerDiagram { n, pairing: pairing.clone() });
                return;
            };
            for w in v + 1..2 * n {
                if pairing[w] == usize::MAX {
                    pairing[v] = w;
                    pairing[w] = v;
                    rec(n, pairing, out);
                    pairing[v] = usize::MAX;
                    pairing[w] = usize::MAX;
                }
            }
        }
        rec(n, &mut pairing, &mut out);
        out.sort();
        out
    }

    /// Factorization `γ = σ·E·τ` with `σ, τ` permutation diagrams and
    /// `E = s̄_1 s̄_3 ⋯ s̄_{2r-1}`, `r` the number of top horizontal edges.
    pub fn factorize(&self) -> Factorization {
        let n = self.n;
        let mut top_h = Vec::new();
        let mut bottom_h = Vec::new();
        let mut vertical = Vec::new();
        for (a, b) in self.edges() {
            if b < n {
                top_h.push((a, b));
            } else if a >= n {
                bottom_h.push((a - n, b - n));
            } else {
                vertical.push((a, b - n));
            }
        }
        let r = top_h.len();
        let mut sigma = vec![0; n];
        let mut tau_inv = vec![0; n];
        for (i, (&(a, b), &(c, d))) in top_h.iter().zip(&bottom_h).enumerate() {
            sigma[2 * i] = a;
            sigma[2 * i + 1] = b;
            tau_inv[2 * i] = c;
            tau_inv[2 * i + 1] = d;
        }
        for (j, &(t, u)) in vertical.iter().enumerate() {
            sigma[2 * r + j] = t;
            tau_inv[2 * r + j] = u;
        }
        let mut tau = vec![0; n];
        for (i, &t) in tau_inv.iter().enumerate() {
            tau[t] = i;
        }
        Factorization { sigma, r, tau }
    }
}

/// Output of [`BrauerDiagram::factorize`]; permutations are 0-based images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sigma: Vec<usize>,
    pub r: usize,
    pub tau: Vec<usize>,
}

impl Factorization {
    /// Generator word (1-based indices) whose product is the diagram.
    pub fn word(&self) -> Vec<Generator> {
        let mut w: Vec<Generator> = permutation_word(&self.sigma).into_iter().map(Generator::S).collect();
        w.extend((0..self.r).map(|i| Generator::SBar(2 * i + 1)));
        w.extend(permutation_word(&self.tau).into_iter().map(Generator::S));
        w
    }
}

/// A Coxeter-type generator `s_k` or `s̄_k` (1-based `k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    S(usize),
    SBar(usize),
}

impl Generator {
    pub fn diagram(&self, n: usize) -> Result<BrauerDiagram> {
        match *self {
            Generator::S(k) => BrauerDiagram::s(k, n),
            Generator::SBar(k) => BrauerDiagram::sbar(k, n),
        }
    }
}

/// Indices `k_1..k_m` with `p = s_{k_1} ∘ ⋯ ∘ s_{k_m}`, found by bubble sort.
pub fn permutation_word(p: &[usize]) -> Vec<usize> {
    let mut q = p.to_vec();
    let mut rev = Vec::new();
    // q ∘ s_i swaps the entries at positions i, i+1; sorting q to the identity
    // by such swaps gives p = s_{i_m} ∘ ... reversed.
    loop {
        let Some(i) = (0..q.len().saturating_sub(1)).find(|&i| q[i] > q[i + 1]) else {
            break;
        };
        q.swap(i, i + 1);
        rev.push(i + 1);
    }
    rev.reverse();
    rev
}

fn check_pair(k: usize, l: usize, n: usize) -> Result<()> {
    if k == 0 || k >= l || l > n {
        return Err(Error::OutOfRange(format!("pair ({k},{l}) in B({n})")));
    }
    Ok(())
}

/// Vertex label: `"3"` for top vertex 3, `"3b"` for bottom vertex 3̄.
pub fn vertex_label(v: usize, n: usize) -> String {
    if v < n {
        format!("{}", v + 1)
    } else {
        format!("{}b", v - n + 1)
    }
}

pub fn parse_vertex_label(s: &str, n: usize) -> Result<usize> {
    let bad = || Error::Parse(format!("bad vertex label {s:?}"));
    let (num, bottom) = match s.strip_suffix('b') {
        Some(x) => (x, true),
        None => (s, false),
    };
    let k: usize = num.parse().map_err(|_| bad())?;
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("vertex {s} in B({n})")));
    }
    Ok(if bottom { n + k - 1 } else { k - 1 })
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", vertex_label(a, self.n), vertex_label(b, self.n)))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    edges: Vec<[String; 2]>,
}

impl Serialize for BrauerDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            n: self.n,
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b)| [vertex_label(a, self.n), vertex_label(b, self.n)])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        let mut edges = Vec::new();
        for [a, b] in &j.edges {
            let a = parse_vertex_label(a, j.n).map_err(serde::de::Error::custom)?;
            let b = parse_vertex_label(b, j.n).map_err(serde::de::Error::custom)?;
            edges.push((a, b));
        }
        BrauerDiagram::from_edges(j.n, &edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sbar_squared_closes_one_loop() {
        let e = BrauerDiagram::sbar(1, 2).unwrap();
        let (d, q) = e.compose(&e).unwrap();
        assert_eq!(d, e);
        assert_eq!(q, 1);
    }

    #[test]
    fn sbar_chain_has_no_loops() {
        let a = BrauerDiagram::sbar(1, 3).unwrap();
        let b = BrauerDiagram::sbar(2, 3).unwrap();
        let (ab, q1) = a.compose(&b).unwrap();
        let (aba, q2) = ab.compose(&a).unwrap();
        assert_eq!(aba, a);
        assert_eq!(q1 + q2, 0);
    }

    #[test]
    fn identity_is_neutral() {
        for g in BrauerDiagram::all(3) {
            let id = BrauerDiagram::identity(3);
            assert_eq!(id.compose(&g).unwrap(), (g.clone(), 0));
            assert_eq!(g.compose(&id).unwrap(), (g.clone(), 0));
        }
    }

    #[test]
    fn diagram_counts_are_double_factorials() {
        let expected = [1, 1, 3, 15, 105, 945];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(BrauerDiagram::all(n).len(), e);
        }
    }

    #[test]
    fn constructors() {
        let id = BrauerDiagram::from_permutation(&[0, 1, 2]).unwrap();
        assert_eq!(id, BrauerDiagram::identity(3));
        assert_eq!(
            BrauerDiagram::transposition(1, 2, 2).unwrap(),
            BrauerDiagram::from_permutation(&[1, 0]).unwrap()
        );
        let b = BrauerDiagram::bar_transposition(1, 3, 3).unwrap();
        assert_eq!(b.edges(), vec![(0, 2), (1, 4), (3, 5)]);
        assert!(BrauerDiagram::transposition(2, 2, 3).is_err());
        assert!(BrauerDiagram::bar_transposition(1, 4, 3).is_err());
    }

    #[test]
    fn permutation_product_is_composition() {
        // s·t has edges {s(t(i)), ī}.
        let s = [1, 2, 0];
        let t = [0, 2, 1];
        let st: Vec<usize> = (0..3).map(|i| s[t[i]]).collect();
        let (d, q) = BrauerDiagram::from_permutation(&s)
            .unwrap()
            .compose(&BrauerDiagram::from_permutation(&t).unwrap())
            .unwrap();
        assert_eq!(q, 0);
        assert_eq!(d.as_permutation().unwrap(), st);
    }

    #[test]
    fn factorization_reproduces_every_diagram() {
        for n in 0..=4 {
            for g in BrauerDiagram::all(n) {
                let mut acc = BrauerDiagram::identity(n);
                let mut loops = 0;
                for gen in g.factorize().word() {
                    let (d, q) = acc.compose(&gen.diagram(n).unwrap()).unwrap();
                    acc = d;
                    loops += q;
                }
                assert_eq!(acc, g);
                assert_eq!(loops, 0);
            }
        }
    }

    #[test]
    fn embed_restrict_shift() {
        let g = BrauerDiagram::sbar(1, 2).unwrap();
        let e = g.embed(4);
        assert_eq!(e, BrauerDiagram::sbar(1, 4).unwrap());
        assert_eq!(e.restrict(2).unwrap(), g);
        assert!(e.restrict(1).is_none());
        assert_eq!(g.shift(2), BrauerDiagram::sbar(3, 4).unwrap());
        assert_eq!(g.flip(), g);
    }

    #[test]
    fn json_round_trip() {
        for g in BrauerDiagram::all(3) {
            let s = serde_json::to_string(&g).unwrap();
            let back: BrauerDiagram = serde_json::from_str(&s).unwrap();
            assert_eq!(back, g);
        }
        let s = serde_json::to_string(&BrauerDiagram::sbar(1, 2).unwrap()).unwrap();
        assert_eq!(s, r#"{"n":2,"edges":[["1","2"],["1b","2b"]]}"#);
    }
}
