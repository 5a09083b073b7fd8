//! Monomials and binomials in the edge indeterminates `y_e`, plus the
//! certificates that witness a binomial as a combination of generators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Cycle, EdgeId, TilingGraph};
use crate::tiling::{CoverCycle, Color, Tiling};

pub mod certificate;
pub mod decompose;

pub use certificate::{
    verify_certificate, CertificateMismatch, DecompositionCertificate, GeneratorKind, Sign, Term,
};
pub use decompose::{cycle_decomposition, flip_path, quadratic_decomposition, DecompositionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid monomial `{0}`")]
pub struct MonomialParseError(pub String);

/// How variables are spelled when printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarStyle {
    /// `y3`
    Compact,
    /// `y_3`
    Subscript,
}

/// `y^u` for a sparse exponent vector `u`, stored as sorted (edge, exponent)
/// pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(EdgeId, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    /// The squarefree monomial `y^E` of an edge set.
    pub fn from_edges(edges: impl IntoIterator<Item = EdgeId>) -> Monomial {
        Monomial::from_exponents(edges.into_iter().map(|e| (e, 1)))
    }

    /// Collects (edge, exponent) pairs, summing repeats and dropping zeros.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (EdgeId, u32)>) -> Monomial {
        let mut map: BTreeMap<EdgeId, u32> = BTreeMap::new();
        for (e, k) in pairs {
            *map.entry(e).or_default() += k;
        }
        Monomial(map.into_iter().filter(|&(_, k)| k > 0).collect())
    }

    /// Dense exponent vector of length `n`.
    pub fn from_dense(exponents: &[u32]) -> Monomial {
        Monomial(
            exponents
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(e, &k)| (EdgeId(e), k))
                .collect(),
        )
    }

    pub fn to_dense(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0; n];
        for &(e, k) in &self.0 {
            out[e.0] = k;
        }
        out
    }

    pub fn exponents(&self) -> &[(EdgeId, u32)] {
        &self.0
    }

    pub fn exponent(&self, e: EdgeId) -> u32 {
        self.0
            .binary_search_by_key(&e, |&(x, _)| x)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, k)| k == 1)
    }

    /// Variables appearing in the monomial.
    pub fn support(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().map(|&(e, _)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.0.iter().chain(&other.0).copied())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(e, k)| other.exponent(e) >= k)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0
                .iter()
                .map(|&(e, k)| (e, k - other.exponent(e)))
                .filter(|&(_, k)| k > 0)
                .collect(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&(e, k)| (e, k.min(other.exponent(e))))
                .filter(|&(_, k)| k > 0)
                .collect(),
        )
    }

    pub fn display(&self, style: VarStyle) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let factors: Vec<String> = self
            .0
            .iter()
            .map(|&(e, k)| {
                let var = match style {
                    VarStyle::Compact => format!("y{}", e.label()),
                    VarStyle::Subscript => format!("y_{}", e.label()),
                };
                if k == 1 {
                    var
                } else {
                    format!("{var}^{k}")
                }
            })
            .collect();
        factors.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(VarStyle::Compact))
    }
}

impl FromStr for Monomial {
    type Err = MonomialParseError;

    /// Accepts `1`, `y3*y5`, `y_3*y_5^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MonomialParseError(s.to_string());
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, power) = match factor.split_once('^') {
                Some((v, p)) => (v, p.parse::<u32>().map_err(|_| err())?),
                None => (factor, 1),
            };
            let digits = var
                .strip_prefix("y_")
                .or_else(|| var.strip_prefix('y'))
                .ok_or_else(err)?;
            let label: usize = digits.parse().map_err(|_| err())?;
            let e = EdgeId::from_label(label).ok_or_else(err)?;
            pairs.push((e, power));
        }
        Ok(Monomial::from_exponents(pairs))
    }
}

/// `y^u - y^v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub u: Monomial,
    pub v: Monomial,
}

impl Binomial {
    pub fn new(u: Monomial, v: Monomial) -> Binomial {
        Binomial { u, v }
    }

    pub fn zero() -> Binomial {
        Binomial::new(Monomial::one(), Monomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.u == self.v
    }

    /// `v - u`.
    pub fn negated(&self) -> Binomial {
        Binomial::new(self.v.clone(), self.u.clone())
    }

    /// Total degree of the leading monomial.
    pub fn degree(&self) -> u32 {
        self.u.degree()
    }

    /// Splits off the common factor: `self = m * (u' - v')` with `gcd(u', v') = 1`.
    pub fn factor(&self) -> (Monomial, Binomial) {
        let m = self.u.gcd(&self.v);
        let u = self.u.checked_div(&m).expect("gcd divides");
        let v = self.v.checked_div(&m).expect("gcd divides");
        (m, Binomial::new(u, v))
    }

    /// Degree of the coprime part; 0 for the zero binomial.
    pub fn binomial_degree(&self) -> u32 {
        self.factor().1.degree()
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Binomial {
        Binomial::new(self.u.mul(m), self.v.mul(m))
    }

    /// `A u = A v`: both monomials have the same degree sequence in `graph`.
    pub fn is_homogeneous(&self, graph: &TilingGraph) -> bool {
        if self.u.support().chain(self.v.support()).any(|e| e.0 >= graph.num_edges()) {
            return false;
        }
        graph.degree_vector(self.u.exponents().iter().copied())
            == graph.degree_vector(self.v.exponents().iter().copied())
    }

    /// Orientation with the smallest variable in the first monomial.
    pub fn canonical(&self) -> Binomial {
        let min_u = self.u.support().next();
        let min_v = self.v.support().next();
        match (min_u, min_v) {
            (Some(a), Some(b)) if b < a => self.negated(),
            (None, Some(_)) => self.negated(),
            _ => self.clone(),
        }
    }

    /// Whether `self` and `other` agree up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || *self == other.negated()
    }

    pub fn display(&self, style: VarStyle) -> String {
        format!("{} - {}", self.u.display(style), self.v.display(style))
    }

    /// If `u ∪ v` is a single even cycle of `graph` alternating between the
    /// two monomials, its length.
    pub fn cycle_length(&self, graph: &TilingGraph) -> Option<usize> {
        if !self.u.is_squarefree() || !self.v.is_squarefree() || self.u.degree() != self.v.degree() {
            return None;
        }
        let mut seen_u = vec![0u8; graph.num_vertices()];
        let mut seen_v = vec![0u8; graph.num_vertices()];
        for (mono, seen) in [(&self.u, &mut seen_u), (&self.v, &mut seen_v)] {
            for e in mono.support() {
                if e.0 >= graph.num_edges() {
                    return None;
                }
                let (a, b) = graph.endpoints(e);
                seen[a] += 1;
                seen[b] += 1;
            }
        }
        let touched: Vec<usize> = (0..graph.num_vertices()).filter(|&x| seen_u[x] + seen_v[x] > 0).collect();
        if touched.iter().any(|&x| seen_u[x] != 1 || seen_v[x] != 1) || touched.len() < 4 {
            return None;
        }
        // A 2-regular alternating subgraph; check it is one cycle.
        let edges: Vec<EdgeId> = self.u.support().chain(self.v.support()).collect();
        let mut reached = vec![false; graph.num_vertices()];
        let mut stack = vec![touched[0]];
        reached[touched[0]] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &e in &edges {
                let (a, b) = graph.endpoints(e);
                let other = if a == x { b } else if b == x { a } else { continue };
                if !reached[other] {
                    reached[other] = true;
                    count += 1;
                    stack.push(other);
                }
            }
        }
        (count == touched.len()).then_some(touched.len())
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(VarStyle::Compact))
    }
}

impl FromStr for Binomial {
    type Err = MonomialParseError;

    /// `<monomial> - <monomial>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (u, v) = s.split_once('-').ok_or_else(|| MonomialParseError(s.to_string()))?;
        Ok(Binomial::new(u.parse()?, v.parse()?))
    }
}

/// `y^{T1} - y^{T2}`.
pub fn binomial_of_tilings(t1: &Tiling, t2: &Tiling) -> Binomial {
    Binomial::new(
        Monomial::from_edges(t1.edges().iter().copied()),
        Monomial::from_edges(t2.edges().iter().copied()),
    )
}

/// Product of even-position edges minus product of odd-position edges.
pub fn binomial_of_cycle(cycle: &Cycle) -> Binomial {
    Binomial::new(
        Monomial::from_edges(cycle.even_edges()),
        Monomial::from_edges(cycle.odd_edges()),
    )
}

/// First-tiling edges minus second-tiling edges of a cover cycle. A doubled
/// edge gives `y_j - y_j = 0`.
pub fn binomial_of_cover_cycle(cycle: &CoverCycle) -> Binomial {
    Binomial::new(
        Monomial::from_edges(cycle.edges_of(Color::First)),
        Monomial::from_edges(cycle.edges_of(Color::Second)),
    )
}

/// A polynomial with integer coefficients, used to expand certificates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial(BTreeMap<Monomial, i64>);

impl Polynomial {
    pub fn add_term(&mut self, coefficient: i64, m: Monomial) {
        let c = self.coefficient(&m) + coefficient;
        if c == 0 {
            self.0.remove(&m);
        } else {
            self.0.insert(m, c);
        }
    }

    pub fn add_binomial(&mut self, coefficient: i64, b: &Binomial) {
        self.add_term(coefficient, b.u.clone());
        self.add_term(-coefficient, b.v.clone());
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.0.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.0.iter().map(|(m, &c)| (m, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::Region;
    use crate::tiling::{cycle_cover, enumerate_tilings};

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_arithmetic() {
        let a = mono("y1*y3^2");
        let b = mono("y_3*y4");
        assert_eq!(a.mul(&b), mono("y1*y3^3*y4"));
        assert_eq!(a.gcd(&b), mono("y3"));
        assert_eq!(a.checked_div(&mono("y3")), Some(mono("y1*y3")));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.to_string(), "y1*y3^2");
        assert_eq!(b.display(VarStyle::Subscript), "y_3*y_4");
        assert_eq!(Monomial::one().to_string(), "1");
        assert!("x1".parse::<Monomial>().is_err());
        assert!("y0".parse::<Monomial>().is_err());
    }

    #[test]
    fn factor_and_degree() {
        let b: Binomial = "y2*y6*y12*y13*y14 - y3*y9*y8*y13*y14".parse().unwrap();
        let (m, core) = b.factor();
        assert_eq!(m, mono("y13*y14"));
        assert_eq!(core, "y2*y6*y12 - y3*y8*y9".parse().unwrap());
        assert_eq!(b.binomial_degree(), 3);
        assert_eq!(Binomial::zero().binomial_degree(), 0);
    }

    #[test]
    fn tiling_binomials_are_homogeneous() {
        let g = TilingGraph::new(&Region::rectangle(2, 2));
        let ts = enumerate_tilings(&g);
        let b = binomial_of_tilings(&ts[0], &ts[1]);
        assert!(b.is_homogeneous(&g));
        assert_eq!(b.degree(), 2);
        assert!(binomial_of_tilings(&ts[0], &ts[0]).is_zero());
        assert_eq!(b.cycle_length(&g), Some(4));
        // A binomial whose monomials cover different vertices.
        let bad = Binomial::new(mono("y1"), mono("y2"));
        assert!(!bad.is_homogeneous(&g));
    }

    #[test]
    fn cover_cycle_binomials() {
        let g = TilingGraph::new(&Region::rectangle(2, 3));
        let ts = enumerate_tilings(&g);
        let same = cycle_cover(&g, &ts[1], &ts[1]).unwrap();
        assert!(binomial_of_cover_cycle(&same.cycles[0]).is_zero());
        let cover = cycle_cover(&g, &ts[0], &ts[2]).unwrap();
        for c in cover.nontrivial() {
            let b = binomial_of_cover_cycle(c);
            assert!(b.is_homogeneous(&g));
            assert_eq!(b.cycle_length(&g), Some(c.len()));
            assert!(binomial_of_cycle(&c.cycle).same_up_to_sign(&b));
        }
    }

    #[test]
    fn polynomial_cancellation() {
        let mut p = Polynomial::default();
        let b: Binomial = "y1*y2 - y3*y4".parse().unwrap();
        p.add_binomial(1, &b);
        p.add_binomial(-1, &b);
        assert!(p.is_zero());
    }
}
