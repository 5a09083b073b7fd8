//! Generating sets of the toric, tiling and flip ideals of a region, binomial
//! ideal membership by walking fibers, and export to computer algebra systems.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::binomial::{
    binomial_of_cycle, binomial_of_tilings, Binomial, DecompositionCertificate, GeneratorKind, Monomial, Sign,
    VarStyle,
};
use crate::graph::TilingGraph;
use crate::moves::{is_connected_by, MoveError, MoveKind};
use crate::tiling::{enumerate_tilings, Tiling};

/// Default cap on states explored by a membership search.
pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("binomial {0} is not homogeneous: its monomials have different degree sequences")]
    Inhomogeneous(Binomial),
    #[error("region has no tiling")]
    Untileable,
    #[error("membership search for {0} exceeded its budget of {1} states")]
    Inconclusive(Binomial, usize),
    #[error("ideal containment and fiber connectivity disagree ({ideal} vs {fiber})")]
    Disagreement { ideal: bool, fiber: bool },
    #[error(transparent)]
    Moves(#[from] MoveError),
    #[error("unknown {what} `{value}`")]
    Unknown { what: &'static str, value: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Toric,
    Tiling,
    Flip,
}

impl FromStr for IdealKind {
    type Err = IdealError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "toric" => Ok(IdealKind::Toric),
            "tiling" => Ok(IdealKind::Tiling),
            "flip" => Ok(IdealKind::Flip),
            _ => Err(IdealError::Unknown {
                what: "ideal",
                value: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::Toric => "toric",
            IdealKind::Tiling => "tiling",
            IdealKind::Flip => "flip",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CasStyle {
    Macaulay2,
    Singular,
}

impl FromStr for CasStyle {
    type Err = IdealError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "macaulay2" | "m2" => Ok(CasStyle::Macaulay2),
            "singular" => Ok(CasStyle::Singular),
            _ => Err(IdealError::Unknown {
                what: "CAS style",
                value: s.to_string(),
            }),
        }
    }
}

/// A binomial ideal given by generators in `y_1, ..., y_E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub kind: IdealKind,
    pub generators: Vec<Binomial>,
    pub num_vars: usize,
}

impl IdealPresentation {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sorted binomial degrees of the generators.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.generators.iter().map(Binomial::binomial_degree).collect();
        d.sort_unstable();
        d
    }

    /// One generator per line, `y_i*y_j - y_k*y_l`.
    pub fn to_plain(&self) -> String {
        self.generators
            .iter()
            .map(|g| format!("{}\n", g.display(VarStyle::Subscript)))
            .collect()
    }

    /// Ring and ideal definitions for the given system.
    pub fn export(&self, style: CasStyle) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| format!("{}-{}", g.u.display(VarStyle::Subscript), g.v.display(VarStyle::Subscript)))
            .collect();
        match style {
            CasStyle::Macaulay2 => {
                let ring = if self.num_vars == 0 {
                    "R = QQ[];".to_string()
                } else {
                    format!("R = QQ[y_1..y_{}];", self.num_vars)
                };
                let ideal = if gens.is_empty() {
                    "I = ideal(0_R);".to_string()
                } else {
                    format!("I = ideal({});", gens.join(", "))
                };
                format!("{ring}\n{ideal}\n")
            }
            CasStyle::Singular => {
                // Singular rings need at least one variable.
                let vars: Vec<String> = (1..=self.num_vars.max(1)).map(|i| format!("y_{i}")).collect();
                let ideal = if gens.is_empty() {
                    "ideal I = 0;".to_string()
                } else {
                    format!("ideal I = {};", gens.join(",\n  "))
                };
                format!("ring r = 0,({}),dp;\n{ideal}\n", vars.join(","))
            }
        }
    }
}

/// `export` as a free function.
pub fn export_cas(pres: &IdealPresentation, style: CasStyle) -> String {
    pres.export(style)
}

fn cycle_presentation(graph: &TilingGraph, kind: IdealKind, max_length: Option<usize>) -> IdealPresentation {
    IdealPresentation {
        kind,
        generators: graph
            .chordless_cycles(max_length)
            .iter()
            .map(|c| binomial_of_cycle(c).canonical())
            .collect(),
        num_vars: graph.num_edges(),
    }
}

/// One binomial per chordless cycle of `G_R`.
pub fn toric_generators(graph: &TilingGraph) -> IdealPresentation {
    cycle_presentation(graph, IdealKind::Toric, None)
}

/// One quadratic per 4-cycle of `G_R`.
pub fn flip_ideal_generators(graph: &TilingGraph) -> IdealPresentation {
    cycle_presentation(graph, IdealKind::Flip, Some(4))
}

/// `y^{T_1} - y^{T_i}` for `i >= 2`, against the first tiling given.
pub fn tiling_ideal_generators(graph: &TilingGraph, tilings: &[Tiling]) -> Result<IdealPresentation, IdealError> {
    let (first, rest) = tilings.split_first().ok_or(IdealError::Untileable)?;
    Ok(IdealPresentation {
        kind: IdealKind::Tiling,
        generators: rest.iter().map(|t| binomial_of_tilings(first, t)).collect(),
        num_vars: graph.num_edges(),
    })
}

/// Generators of the requested ideal of `graph`.
pub fn presentation(graph: &TilingGraph, kind: IdealKind) -> Result<IdealPresentation, IdealError> {
    match kind {
        IdealKind::Toric => Ok(toric_generators(graph)),
        IdealKind::Flip => Ok(flip_ideal_generators(graph)),
        IdealKind::Tiling => tiling_ideal_generators(graph, &enumerate_tilings(graph)),
    }
}

/// Outcome of a membership search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// With a telescoping certificate over the generators.
    Member(DecompositionCertificate),
    NotMember,
    /// The budget ran out after exploring this many states.
    Inconclusive(usize),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// Decides whether `y^u - y^v` lies in the ideal generated by `gens`.
///
/// The pure difference is in the ideal exactly when `u` and `v` are joined
/// by steps `x -> x - a + b` (or `x - b + a`) for generators `y^a - y^b`,
/// staying nonnegative; such steps preserve `A x`, so the search stays in
/// the finite fiber of `u`.
pub fn binomial_in_binomial_ideal(
    graph: &TilingGraph,
    b: &Binomial,
    gens: &IdealPresentation,
    budget: usize,
) -> Result<Membership, IdealError> {
    if !b.is_homogeneous(graph) {
        return Err(IdealError::Inhomogeneous(b.clone()));
    }
    Ok(fiber_search(b, &gens.generators, budget))
}

fn fiber_search(b: &Binomial, gens: &[Binomial], budget: usize) -> Membership {
    let mut cert = DecompositionCertificate::new(b.clone());
    if b.is_zero() {
        return Membership::Member(cert);
    }
    // parent[x] = (previous state, generator index, applied forward)
    let mut parent: HashMap<Monomial, Option<(Monomial, usize, bool)>> = HashMap::from([(b.u.clone(), None)]);
    let mut queue = VecDeque::from([b.u.clone()]);
    while let Some(x) = queue.pop_front() {
        for (i, g) in gens.iter().enumerate() {
            for (forward, from, to) in [(true, &g.u, &g.v), (false, &g.v, &g.u)] {
                let Some(rest) = x.checked_div(from) else {
                    continue;
                };
                let y = rest.mul(to);
                if parent.contains_key(&y) {
                    continue;
                }
                parent.insert(y.clone(), Some((x.clone(), i, forward)));
                if y == b.v {
                    let mut steps = Vec::new();
                    let mut cur = y;
                    while let Some(Some((prev, i, forward))) = parent.get(&cur) {
                        steps.push((prev.clone(), *i, *forward));
                        cur = prev.clone();
                    }
                    for (prev, i, forward) in steps.into_iter().rev() {
                        let g = &gens[i];
                        let (sign, divisor) = if forward { (Sign::Plus, &g.u) } else { (Sign::Minus, &g.v) };
                        let m = prev.checked_div(divisor).expect("step was applicable");
                        cert.push(sign, m, g.clone(), GeneratorKind::infer(g));
                    }
                    return Membership::Member(cert);
                }
                if parent.len() >= budget {
                    return Membership::Inconclusive(parent.len());
                }
                queue.push_back(y);
            }
        }
    }
    Membership::NotMember
}

/// Verdict on `I_tiling ⊆ I_flip`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    pub contained: bool,
    /// A tiling-ideal generator outside the flip ideal, when not contained.
    pub witness: Option<Binomial>,
    /// Membership certificates for the tiling-ideal generators, in order,
    /// when contained.
    pub certificates: Vec<DecompositionCertificate>,
}

/// Decides `I_tiling ⊆ I_flip` by membership of each tiling-ideal
/// generator, and checks the verdict against flip connectivity of the
/// fiber graph.
pub fn tiling_subset_flip(graph: &TilingGraph, budget: usize) -> Result<Containment, IdealError> {
    let tilings = enumerate_tilings(graph);
    if tilings.is_empty() {
        return Err(IdealError::Untileable);
    }
    let tiling = tiling_ideal_generators(graph, &tilings)?;
    let flip = flip_ideal_generators(graph);
    let results: Vec<Membership> = tiling
        .generators
        .par_iter()
        .map(|b| fiber_search(b, &flip.generators, budget))
        .collect();

    let mut certificates = Vec::new();
    let mut witness = None;
    for (b, r) in tiling.generators.iter().zip(results) {
        match r {
            Membership::Member(c) => certificates.push(c),
            Membership::NotMember => {
                witness = Some(b.clone());
                break;
            }
            Membership::Inconclusive(_) => return Err(IdealError::Inconclusive(b.clone(), budget)),
        }
    }
    let contained = witness.is_none();
    let fiber = is_connected_by(graph, MoveKind::Flip)?.connected;
    if contained != fiber {
        return Err(IdealError::Disagreement {
            ideal: contained,
            fiber,
        });
    }
    if !contained {
        certificates.clear();
    }
    Ok(Containment {
        contained,
        witness,
        certificates,
    })
}

/// Whether every generator of `a` lies in the ideal of `b` and vice versa.
pub fn ideals_equal(
    graph: &TilingGraph,
    a: &IdealPresentation,
    b: &IdealPresentation,
    budget: usize,
) -> Result<bool, IdealError> {
    Ok(contains_all(graph, b, a, budget)? && contains_all(graph, a, b, budget)?)
}

/// Whether every generator of `inner` lies in the ideal generated by `outer`.
pub fn contains_all(
    graph: &TilingGraph,
    outer: &IdealPresentation,
    inner: &IdealPresentation,
    budget: usize,
) -> Result<bool, IdealError> {
    for g in &inner.generators {
        match binomial_in_binomial_ideal(graph, g, outer, budget)? {
            Membership::Member(_) => {}
            Membership::NotMember => return Ok(false),
            Membership::Inconclusive(_) => return Err(IdealError::Inconclusive(g.clone(), budget)),
        }
    }
    Ok(true)
}

/// For each toric generator, whether the others fail to connect its two
/// monomials. A flagged generator cannot be dropped from this generating
/// set; this is a diagnostic, not a proof of indispensability in every
/// minimal generating set.
pub fn indispensable_generators(graph: &TilingGraph, budget: usize) -> Result<Vec<(Binomial, bool)>, IdealError> {
    let toric = toric_generators(graph);
    let flags: Vec<Membership> = (0..toric.len())
        .into_par_iter()
        .map(|i| {
            let others: Vec<Binomial> = toric
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            fiber_search(&toric.generators[i], &others, budget)
        })
        .collect();
    toric
        .generators
        .into_iter()
        .zip(flags)
        .map(|(g, m)| match m {
            Membership::Member(_) => Ok((g, false)),
            Membership::NotMember => Ok((g, true)),
            Membership::Inconclusive(_) => Err(IdealError::Inconclusive(g, budget)),
        })
        .collect()
}
