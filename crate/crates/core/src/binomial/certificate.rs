use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Binomial, Monomial, Polynomial};
use crate::graph::TilingGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// What a term's generator claims to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// The binomial of a 4-cycle.
    Flip,
    /// The binomial of a longer even cycle.
    Cycle,
    Other,
}

impl GeneratorKind {
    /// Guess from the shape alone: squarefree coprime sides of equal degree
    /// are read as cycles, and as flips in degree 2.
    pub fn infer(g: &Binomial) -> GeneratorKind {
        let coprime = g.u.gcd(&g.v).is_one();
        let shaped = coprime
            && g.u.is_squarefree()
            && g.v.is_squarefree()
            && g.u.degree() == g.v.degree()
            && g.u.degree() >= 2;
        match (shaped, g.u.degree()) {
            (true, 2) => GeneratorKind::Flip,
            (true, _) => GeneratorKind::Cycle,
            _ => GeneratorKind::Other,
        }
    }
}

/// `sign * monomial * generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub sign: Sign,
    pub monomial: Monomial,
    pub generator: Binomial,
    pub kind: GeneratorKind,
}

/// A claimed identity `target = sum of terms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub target: Binomial,
    pub terms: Vec<Term>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateMismatch {
    #[error("coefficient of {monomial} is {found} in the expansion but {expected} in the target")]
    Coefficient {
        monomial: Monomial,
        expected: i64,
        found: i64,
    },
    #[error("term {index}: generator {generator} is not a 4-cycle binomial of the graph")]
    NotAFlip { index: usize, generator: Binomial },
    #[error("term {index}: generator {generator} is not a cycle binomial of the graph")]
    NotACycle { index: usize, generator: Binomial },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("certificate line {line}: {message}")]
pub struct CertificateParseError {
    pub line: usize,
    pub message: String,
}

impl DecompositionCertificate {
    pub fn new(target: Binomial) -> DecompositionCertificate {
        DecompositionCertificate {
            target,
            terms: Vec::new(),
        }
    }

    pub fn push(&mut self, sign: Sign, monomial: Monomial, generator: Binomial, kind: GeneratorKind) {
        self.terms.push(Term {
            sign,
            monomial,
            generator,
            kind,
        });
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum(terms) - target`, which is zero for a valid certificate.
    pub fn residual(&self) -> Polynomial {
        let mut p = Polynomial::default();
        for t in &self.terms {
            p.add_binomial(t.sign.value(), &t.generator.mul_monomial(&t.monomial));
        }
        p.add_binomial(-1, &self.target);
        p
    }

    /// Whether every generator is quadratic.
    pub fn is_quadratic(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.generator.u.degree() == 2 && t.generator.v.degree() == 2)
    }

    pub fn count_kind(&self, kind: GeneratorKind) -> usize {
        self.terms.iter().filter(|t| t.kind == kind).count()
    }

    /// Largest generator degree, 0 for an empty certificate.
    pub fn max_generator_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.generator.u.degree().max(t.generator.v.degree()))
            .max()
            .unwrap_or(0)
    }

    /// Text form: a `target:` line, then one `<sign> m * ( u - v )` line per term.
    pub fn to_text(&self) -> String {
        let mut out = format!("target: {}\n", self.target);
        for t in &self.terms {
            out.push_str(&format!(
                "{} {} * ( {} - {} )\n",
                t.sign.symbol(),
                t.monomial,
                t.generator.u,
                t.generator.v
            ));
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Blank lines and `#` comments
    /// are skipped; generator kinds are inferred from their shape.
    pub fn parse(text: &str) -> Result<DecompositionCertificate, CertificateParseError> {
        let mut target = None;
        let mut terms = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |message: String| CertificateParseError {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("target:") {
                if target.is_some() {
                    return Err(err("duplicate target line".into()));
                }
                target = Some(rest.trim().parse::<Binomial>().map_err(|e| err(e.to_string()))?);
                continue;
            }
            if target.is_none() {
                return Err(err("expected `target:` before terms".into()));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let shape_ok = tokens.len() == 8
                && tokens[2] == "*"
                && tokens[3] == "("
                && tokens[5] == "-"
                && tokens[7] == ")";
            if !shape_ok {
                return Err(err(format!("expected `<+|-> m * ( u - v )`, got `{line}`")));
            }
            let sign = match tokens[0] {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                other => return Err(err(format!("bad sign `{other}`"))),
            };
            let mono = |s: &str| s.parse::<Monomial>().map_err(|e| err(e.to_string()));
            let generator = Binomial::new(mono(tokens[4])?, mono(tokens[6])?);
            terms.push(Term {
                sign,
                monomial: mono(tokens[1])?,
                kind: GeneratorKind::infer(&generator),
                generator,
            });
        }
        let target = target.ok_or(CertificateParseError {
            line: 0,
            message: "missing `target:` line".into(),
        })?;
        Ok(DecompositionCertificate { target, terms })
    }
}

impl fmt::Display for DecompositionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for DecompositionCertificate {
    type Err = CertificateParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DecompositionCertificate::parse(s)
    }
}

/// Expands the certificate and compares it with its target. With a graph,
/// also checks that every term claimed as a flip (or cycle) really is the
/// binomial of a 4-cycle (or of an even cycle) there.
pub fn verify_certificate(
    cert: &DecompositionCertificate,
    graph: Option<&TilingGraph>,
) -> Result<(), CertificateMismatch> {
    if let Some(g) = graph {
        for (index, t) in cert.terms.iter().enumerate() {
            let len = t.generator.cycle_length(g);
            match t.kind {
                GeneratorKind::Flip if len != Some(4) => {
                    return Err(CertificateMismatch::NotAFlip {
                        index: index + 1,
                        generator: t.generator.clone(),
                    })
                }
                GeneratorKind::Cycle if len.is_none() => {
                    return Err(CertificateMismatch::NotACycle {
                        index: index + 1,
                        generator: t.generator.clone(),
                    })
                }
                _ => {}
            }
        }
    }
    let residual = cert.residual();
    let first = residual.terms().next().map(|(m, c)| (m.clone(), c));
    match first {
        None => Ok(()),
        Some((m, c)) => {
            let expected = target_coefficient(&cert.target, &m);
            Err(CertificateMismatch::Coefficient {
                monomial: m,
                expected,
                found: expected + c,
            })
        }
    }
}

fn target_coefficient(target: &Binomial, m: &Monomial) -> i64 {
    let mut p = Polynomial::default();
    p.add_binomial(1, target);
    p.coefficient(m)
}
