//! Example families of Fano manifolds: complete intersections, Grassmannians
//! and their hyperplane sections, isotropic Grassmannians, the horospherical
//! `G_2`-variety and products of projective spaces.
//!
//! For each family this module computes `ch_k(X)` in the ambient ring,
//! turns the signs of its basis coefficients into a verdict, reads the
//! closed-form thresholds, and looks up the polarized minimal pair
//! `(H_x, L_x)` of lines through a general point.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bundles::{chern_to_character, CharacterVector};
use crate::catalog::{Factor, PolarizedPair, Positivity, RayData};
use crate::checks::VerificationReport;
use crate::error::{Error, Result};
use crate::minimalfamily::{ci_family_dimension, ci_tangent_character};
use crate::numeric::{int, pow_int, Rational};
use crate::rings::{product_ring, projective_space_ring_named, GradedClass, Label};
use crate::schubert::{grassmannian_ring, tautological_chern, Partition, Tautological};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// Complete intersection of type `degrees` in `P^n`.
    CompleteIntersection { n: u32, degrees: Vec<u32> },
    Grassmannian { k: u32, n: u32 },
    /// General hyperplane section of `G(k, n)` in the Plucker embedding.
    GrassmannianHyperplane { k: u32, n: u32 },
    /// Orthogonal Grassmannian `OG(k, n)`.
    Orthogonal { k: u32, n: u32 },
    /// Symplectic Grassmannian `SG(k, n)`, `n` even.
    Symplectic { k: u32, n: u32 },
    /// `k`-subspaces isotropic for a degenerate form of corank one, `n` odd.
    SymplecticDegenerate { k: u32, n: u32 },
    /// Horospherical `G_2`-variety of Picard number one.
    G2P,
    /// `P^a x P^b`.
    ProductPP { a: u32, b: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    CompleteIntersection,
    Grassmannian,
    GrassmannianHyperplane,
    Orthogonal,
    Symplectic,
    SymplecticDegenerate,
    G2P,
    ProductPP,
}

impl FamilyKind {
    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::CompleteIntersection => "CI",
            FamilyKind::Grassmannian => "G",
            FamilyKind::GrassmannianHyperplane => "GH",
            FamilyKind::Orthogonal => "OG",
            FamilyKind::Symplectic => "SG",
            FamilyKind::SymplecticDegenerate => "SGdeg",
            FamilyKind::G2P => "G2P",
            FamilyKind::ProductPP => "PP",
        }
    }

    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::CompleteIntersection,
        FamilyKind::Grassmannian,
        FamilyKind::GrassmannianHyperplane,
        FamilyKind::Orthogonal,
        FamilyKind::Symplectic,
        FamilyKind::SymplecticDegenerate,
        FamilyKind::G2P,
        FamilyKind::ProductPP,
    ];
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family kind `{s}`")))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::CompleteIntersection { n, degrees } if degrees.is_empty() => write!(f, "CI[{n}]"),
            FamilySpec::CompleteIntersection { n, degrees } => {
                let ds: Vec<String> = degrees.iter().map(u32::to_string).collect();
                write!(f, "CI[{n};{}]", ds.join(","))
            }
            FamilySpec::G2P => write!(f, "G2P"),
            FamilySpec::ProductPP { a, b } => write!(f, "PP[{a},{b}]"),
            other => {
                let (k, n) = other.k_n().expect("two-parameter family");
                write!(f, "{}[{k},{n}]", other.kind())
            }
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("`{x}` is not a non-negative integer"))))
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the canonical text form and validates the parameters.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "G2P" {
            return Ok(FamilySpec::G2P);
        }
        let (tag, rest) = s.split_once('[').ok_or_else(|| Error::Parse(format!("expected KIND[...], got `{s}`")))?;
        let body = rest.strip_suffix(']').ok_or_else(|| Error::Parse(format!("missing `]` in `{s}`")))?;
        let kind: FamilyKind = tag.parse()?;
        let spec = if kind == FamilyKind::CompleteIntersection {
            let (n, ds) = body.split_once(';').unwrap_or((body, ""));
            let n = n.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad ambient dimension in `{s}`")))?;
            FamilySpec::complete_intersection(n, &parse_list(ds)?)
        } else {
            let params = parse_list(body)?;
            let [x, y] = params[..] else {
                return Err(Error::Parse(format!("`{s}` needs exactly two parameters")));
            };
            FamilySpec::two_parameter(kind, x, y)
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FamilySpec {
    /// Degrees are stored in non-increasing order.
    pub fn complete_intersection(n: u32, degrees: &[u32]) -> Self {
        let mut ds: Vec<u32> = degrees.to_vec();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        FamilySpec::CompleteIntersection { n, degrees: ds }
    }

    pub fn two_parameter(kind: FamilyKind, x: u32, y: u32) -> Self {
        match kind {
            FamilyKind::CompleteIntersection => FamilySpec::complete_intersection(y, &[x]),
            FamilyKind::Grassmannian => FamilySpec::Grassmannian { k: x, n: y },
            FamilyKind::GrassmannianHyperplane => FamilySpec::GrassmannianHyperplane { k: x, n: y },
            FamilyKind::Orthogonal => FamilySpec::Orthogonal { k: x, n: y },
            FamilyKind::Symplectic => FamilySpec::Symplectic { k: x, n: y },
            FamilyKind::SymplecticDegenerate => FamilySpec::SymplecticDegenerate { k: x, n: y },
            FamilyKind::G2P => FamilySpec::G2P,
            FamilyKind::ProductPP => FamilySpec::ProductPP { a: x, b: y },
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::CompleteIntersection { .. } => FamilyKind::CompleteIntersection,
            FamilySpec::Grassmannian { .. } => FamilyKind::Grassmannian,
            FamilySpec::GrassmannianHyperplane { .. } => FamilyKind::GrassmannianHyperplane,
            FamilySpec::Orthogonal { .. } => FamilyKind::Orthogonal,
            FamilySpec::Symplectic { .. } => FamilyKind::Symplectic,
            FamilySpec::SymplecticDegenerate { .. } => FamilyKind::SymplecticDegenerate,
            FamilySpec::G2P => FamilyKind::G2P,
            FamilySpec::ProductPP { .. } => FamilyKind::ProductPP,
        }
    }

    /// `(k, n)` for the Grassmannian-type families.
    pub fn k_n(&self) -> Option<(u32, u32)> {
        match *self {
            FamilySpec::Grassmannian { k, n }
            | FamilySpec::GrassmannianHyperplane { k, n }
            | FamilySpec::Orthogonal { k, n }
            | FamilySpec::Symplectic { k, n }
            | FamilySpec::SymplecticDegenerate { k, n } => Some((k, n)),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidParameter(format!("{self}: {why}")));
        match self {
            FamilySpec::CompleteIntersection { n, degrees } => {
                if *n < 1 {
                    return bad("needs n >= 1");
                }
                if degrees.iter().any(|&d| d < 2) {
                    return bad("degrees must be at least 2");
                }
                if degrees.iter().sum::<u32>() > *n {
                    return bad("not Fano (sum of degrees exceeds n)");
                }
                Ok(())
            }
            FamilySpec::Grassmannian { k, n } | FamilySpec::GrassmannianHyperplane { k, n } => {
                if *k < 2 || 2 * k > *n {
                    return bad("needs 2 <= k <= n/2");
                }
                Ok(())
            }
            FamilySpec::Orthogonal { k, n } => {
                if *k < 2 || 2 * k + 2 >= *n {
                    return bad("needs 2 <= k < n/2 - 1");
                }
                Ok(())
            }
            FamilySpec::Symplectic { k, n } => {
                if n % 2 != 0 {
                    return bad("needs n even (use SGdeg for odd n)");
                }
                if *k < 2 || 2 * k > *n {
                    return bad("needs 2 <= k <= n/2");
                }
                Ok(())
            }
            FamilySpec::SymplecticDegenerate { k, n } => {
                if n % 2 == 0 {
                    return bad("needs n odd");
                }
                if *k < 2 || 2 * k >= *n {
                    return bad("needs 2 <= k < n/2");
                }
                Ok(())
            }
            FamilySpec::G2P => Ok(()),
            FamilySpec::ProductPP { a, b } => {
                if *a < 1 || *b < 1 {
                    return bad("needs a, b >= 1");
                }
                Ok(())
            }
        }
    }

    /// `dim X` from the closed formulas.
    pub fn dimension(&self) -> u32 {
        match *self {
            FamilySpec::CompleteIntersection { n, ref degrees } => n - degrees.len() as u32,
            FamilySpec::Grassmannian { k, n } => k * (n - k),
            FamilySpec::GrassmannianHyperplane { k, n } => k * (n - k) - 1,
            FamilySpec::Orthogonal { k, n } => k * (2 * n - 3 * k - 1) / 2,
            FamilySpec::Symplectic { k, n } | FamilySpec::SymplecticDegenerate { k, n } => k * (2 * n - 3 * k + 1) / 2,
            FamilySpec::G2P => 5,
            FamilySpec::ProductPP { a, b } => a + b,
        }
    }
}

/// `ch(T_X)` in the ambient ring, up to degree `truncation`. Zero-locus
/// families use `ch(T_G) - ch(N)`; complete intersections use the Euler
/// sequence in `P^n`.
pub fn tangent_character(spec: &FamilySpec, truncation: u32) -> Result<CharacterVector> {
    spec.validate()?;
    match spec {
        FamilySpec::CompleteIntersection { n, degrees } => ci_tangent_character(*n, degrees, truncation),
        FamilySpec::G2P => Err(Error::InvalidParameter("G2P is recorded as facts only; it has no ring model".into())),
        FamilySpec::ProductPP { a, b } => {
            let pa = projective_space_ring_named(*a, "h1");
            let pb = projective_space_ring_named(*b, "h2");
            let ring = product_ring(&pa, &pb);
            let factor = |base: &crate::rings::Ring, n: u32, left: bool| -> Result<CharacterVector> {
                let h = GradedClass::generator(base)?;
                let line = CharacterVector::line_bundle(&h, truncation)?;
                let components = (1..=truncation)
                    .map(|j| {
                        let c = line.component(j).scale(&int(n as i64 + 1));
                        if left {
                            GradedClass::embed_left(&ring, &c)
                        } else {
                            GradedClass::embed_right(&ring, &c)
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                CharacterVector::new(&ring, int(n as i64), components)
            };
            factor(&pa, *a, true)?.add(&factor(&pb, *b, false)?)
        }
        _ => {
            let (k, n) = spec.k_n().expect("Grassmannian-type family");
            let g = grassmannian_ring(k, n)?;
            let sub_dual = chern_to_character(&tautological_chern(&g, Tautological::SubDual)?, int(k as i64), &g, truncation)?;
            let quotient = chern_to_character(&tautological_chern(&g, Tautological::Quotient)?, int((n - k) as i64), &g, truncation)?;
            let tangent = sub_dual.multiply(&quotient)?;
            let normal = match spec.kind() {
                FamilyKind::Grassmannian => return Ok(tangent),
                FamilyKind::GrassmannianHyperplane => {
                    CharacterVector::line_bundle(&GradedClass::from_label(&g, Label::Schubert(Partition::row(1)))?, truncation)?
                }
                FamilyKind::Orthogonal => sub_dual.sym2()?,
                _ => sub_dual.wedge2()?,
            };
            tangent.sub(&normal)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Positive,
    NefOnly,
    Neither,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Positive => "POSITIVE",
            Status::NefOnly => "NEF_ONLY",
            Status::Neither => "NEITHER",
        })
    }
}

impl From<Positivity> for Status {
    fn from(p: Positivity) -> Self {
        match p {
            Positivity::Ample => Status::Positive,
            Positivity::NefOnly => Status::NefOnly,
            Positivity::Neither => Status::Neither,
        }
    }
}

/// All `> 0`: positive; all `>= 0`: nef only; otherwise neither.
pub fn status_from_pairings<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Status {
    let mut status = Status::Positive;
    for v in values {
        if v.is_negative() {
            return Status::Neither;
        }
        if v.is_zero() {
            status = Status::NefOnly;
        }
    }
    status
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub k: u32,
    /// `ch_k(X)` in the ambient basis; absent for fact records.
    pub class: Option<GradedClass>,
    pub status: Status,
    /// Basis label and coefficient, in basis order.
    pub witnesses: Vec<(String, Rational)>,
    pub note: Option<String>,
}

const ZERO_LOCUS_NOTE: &str = "ambient Schubert expression; restricted dual Schubert cycles assumed to generate the effective cone";
const NO_CLOSED_FORM_NOTE: &str = "computed, no closed form";

/// Verdict for `ch_k(X)`, read off the coefficients of `ch_k` in the
/// basis dual to the generators of the effective cone.
pub fn chk_verdict(spec: &FamilySpec, k: u32) -> Result<Verdict> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    spec.validate()?;
    if *spec == FamilySpec::G2P {
        if k != 2 {
            return Err(Error::NoClosedForm { spec: spec.to_string(), k });
        }
        return Ok(Verdict {
            k,
            class: None,
            status: Status::Positive,
            witnesses: Vec::new(),
            note: Some("fact record: b_4 = 1 and ch_2 > 0".into()),
        });
    }
    let ch = tangent_character(spec, k)?;
    let class = ch.component(k);
    let basis = ch.ring().basis_in_degree(k);
    if basis.is_empty() {
        return Err(Error::InvalidParameter(format!("{spec}: degree {k} exceeds the ambient dimension")));
    }
    let witnesses: Vec<(String, Rational)> = basis.iter().map(|l| (l.to_string(), class.coefficient(l))).collect();
    let mut note = match spec.kind() {
        FamilyKind::GrassmannianHyperplane | FamilyKind::Orthogonal | FamilyKind::Symplectic | FamilyKind::SymplecticDegenerate => {
            Some(ZERO_LOCUS_NOTE.to_string())
        }
        _ => None,
    };
    if k != 2 && spec.kind() != FamilyKind::CompleteIntersection && spec.kind() != FamilyKind::ProductPP {
        note = Some(NO_CLOSED_FORM_NOTE.to_string());
    }
    let status = match spec {
        // On the Lagrangian Grassmannian Q = S^dual, so sigma_2 and
        // sigma_{1,1} restrict to the same generator of H^4 (b_4 = 1).
        FamilySpec::Symplectic { k: kk, n } if *n == 2 * kk && k == 2 => {
            note = Some("b_4(X) = 1: sigma[2] and sigma[1,1] restrict to the same effective generator".into());
            let sum: Rational = witnesses.iter().map(|(_, c)| c.clone()).sum();
            status_from_pairings([&sum])
        }
        _ => status_from_pairings(witnesses.iter().map(|(_, c)| c)),
    };
    Ok(Verdict { k, class: Some(class), status, witnesses, note })
}

/// Closed-form thresholds; no ring computation.
pub fn threshold_oracle(spec: &FamilySpec, k: u32) -> Result<Status> {
    spec.validate()?;
    let refuse = || Err(Error::NoClosedForm { spec: spec.to_string(), k });
    let ranges = |pos: bool, nef: bool| {
        if pos {
            Status::Positive
        } else if nef {
            Status::NefOnly
        } else {
            Status::Neither
        }
    };
    if let FamilySpec::CompleteIntersection { n, degrees } = spec {
        if k < 1 {
            return refuse();
        }
        let s: Rational = degrees.iter().map(|&d| pow_int(d as i64, k)).sum();
        let n = int(*n as i64);
        return Ok(ranges(s <= n, s <= n + int(1)));
    }
    if k != 2 {
        return refuse();
    }
    let status = match *spec {
        FamilySpec::Grassmannian { k, n } => ranges(n <= 2 * k + 1, n <= 2 * k + 2),
        FamilySpec::GrassmannianHyperplane { k, n } => ranges(n == 2 * k, n <= 2 * k + 1),
        FamilySpec::Orthogonal { k, n } => ranges(n == 3 * k + 2, 3 * k < n && n <= 3 * k + 3),
        FamilySpec::Symplectic { k, n } => {
            ranges(n == 2 * k || n + 2 == 3 * k, n == 2 * k || (n + 3 >= 3 * k && n < 3 * k))
        }
        FamilySpec::SymplecticDegenerate { k, n } => ranges(n + 2 == 3 * k, n + 3 >= 3 * k && n < 3 * k),
        FamilySpec::G2P => Status::Positive,
        _ => return refuse(),
    };
    Ok(status)
}

/// `(H_x, L_x)` for lines on a complete intersection: a complete
/// intersection of type `(1..d_1, ..., 1..d_c)` in `P^{n-1}` with `O(1)`,
/// recorded as a formal Picard-rank-one pair.
pub fn ci_lines_pair(n: u32, degrees: &[u32]) -> Result<PolarizedPair> {
    let d = ci_family_dimension(n, degrees);
    if d < 0 {
        return Err(Error::NoMinimalPair(format!("no lines through a general point of CI[{n};{degrees:?}]")));
    }
    let k_coeff = n as i64 - degrees.iter().map(|&e| (e * (e + 1) / 2) as i64).sum::<i64>();
    let types: Vec<String> = degrees.iter().map(|e| format!("1..{e}")).collect();
    Ok(PolarizedPair {
        label: format!("(CI({}) in P^{}, O(1))", types.join(","), n - 1),
        dim: d as u32,
        divisor_basis: vec!["h".into()],
        curve_basis: vec!["line".into()],
        nef_generators: vec![vec![1]],
        mori_generators: vec![vec![1]],
        pairing: vec![vec![1]],
        canonical: vec![-k_coeff],
        polarization: vec![1],
        pseudoindex: k_coeff,
        rays: vec![RayData { fiber_dim: d as u32, exceptional_dim: d as u32 }],
    })
}

fn relabel(mut pair: PolarizedPair, label: String) -> PolarizedPair {
    pair.label = label;
    pair
}

/// The polarized minimal family of lines through a general point.
pub fn minimal_pair(spec: &FamilySpec) -> Result<PolarizedPair> {
    spec.validate()?;
    match *spec {
        FamilySpec::CompleteIntersection { n, ref degrees } => ci_lines_pair(n, degrees),
        FamilySpec::Grassmannian { k, n } => PolarizedPair::product(&[Factor::projective(k - 1), Factor::projective(n - k - 1)]),
        FamilySpec::GrassmannianHyperplane { k, n } => {
            let (a, b) = (k - 1, n - k - 1);
            if a + b < 3 {
                // (1,1)-divisor in P^1 x P^1: the diagonal conic.
                Ok(relabel(PolarizedPair::projective_space(1, 2)?, "((1,1)-divisor in P^1xP^1, O(1,1))".into()))
            } else {
                PolarizedPair::divisor_11(a, b)
            }
        }
        FamilySpec::Orthogonal { k, n } => {
            let j = n - 2 * k - 2;
            let label = format!("(P^{}xQ^{j}, O(1,1))", k - 1);
            let pair = match j {
                2 => PolarizedPair::product(&[Factor::projective(k - 1), Factor::projective(1), Factor::projective(1)])?,
                j => PolarizedPair::product(&[Factor::projective(k - 1), Factor::quadric(j)?])?,
            };
            Ok(relabel(pair, label))
        }
        FamilySpec::Symplectic { k, n } | FamilySpec::SymplecticDegenerate { k, n } => {
            if n == 2 * k {
                PolarizedPair::projective_space(k - 1, 2)
            } else {
                let pair = PolarizedPair::linear_blowup(n - k - 1, n - 2 * k - 1)?;
                Ok(relabel(pair, format!("(P_(P^{})(O(2)+O(1)^{}), O_P(1))", k - 1, n - 2 * k)))
            }
        }
        FamilySpec::G2P => PolarizedPair::projective_space(1, 3),
        FamilySpec::ProductPP { .. } => Err(Error::NoMinimalPair(spec.to_string())),
    }
}

/// `-K_X . line`, from the coefficient of the divisor generator in `ch_1`.
pub fn line_degree(spec: &FamilySpec) -> Result<i64> {
    match spec {
        FamilySpec::G2P => Ok(3),
        FamilySpec::ProductPP { .. } => Err(Error::InvalidParameter(format!("{spec} has Picard rank two"))),
        _ => {
            let ch = tangent_character(spec, 1)?;
            let c1 = ch.component(1);
            let basis = ch.ring().basis_in_degree(1);
            let c = c1.coefficient(&basis[0]);
            if !c.is_integer() {
                return Err(Error::InvalidParameter(format!("{spec}: non-integral c_1 = {c1}")));
            }
            Ok(c.to_integer().try_into().expect("small index"))
        }
    }
}

/// One full evaluation of `ch_k(X)`: ring verdict, closed form and the
/// minimal pair, with the agreement checks between them.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub spec: FamilySpec,
    pub verdict: Verdict,
    pub oracle: Option<Status>,
    pub pair: Option<PolarizedPair>,
    pub twist: Option<Positivity>,
    pub checks: VerificationReport,
}

impl Evaluation {
    pub fn agree(&self) -> bool {
        self.checks.all_hold()
    }
}

pub fn evaluate(spec: &FamilySpec, k: u32) -> Result<Evaluation> {
    let verdict = chk_verdict(spec, k)?;
    let oracle = match threshold_oracle(spec, k) {
        Ok(s) => Some(s),
        Err(Error::NoClosedForm { .. }) => None,
        Err(e) => return Err(e),
    };
    let pair = minimal_pair(spec).ok();
    let twist = pair.as_ref().map(PolarizedPair::positivity_of_twist);
    let at = format!("{spec} k={k}");
    let mut checks = VerificationReport::new();
    if let Some(o) = oracle {
        checks.check("ring verdict = closed form", at.clone(), &verdict.status, &o);
    }
    if k == 2 {
        if let Some(t) = twist {
            checks.check("ring verdict = twist positivity", at.clone(), &verdict.status, &Status::from(t));
        }
    }
    if let Some(p) = &pair {
        if spec.kind() != FamilyKind::ProductPP {
            let expected = line_degree(spec)? - 2;
            checks.check("dim H_x = -K_X.line - 2", at.clone(), &(p.dim as i64), &expected);
        }
    }
    Ok(Evaluation { spec: spec.clone(), verdict, oracle, pair, twist, checks })
}

/// Three-way agreement at `k = 2` and the dimension checks.
pub fn consistency_check(spec: &FamilySpec) -> Result<VerificationReport> {
    if spec.kind() == FamilyKind::ProductPP {
        return Err(Error::NoMinimalPair(spec.to_string()));
    }
    let eval = evaluate(spec, 2)?;
    let mut report = eval.checks;
    let at = spec.to_string();
    if eval.pair.is_none() {
        report.check_bool("minimal pair exists", at.clone(), "none", spec.kind() == FamilyKind::CompleteIntersection);
    }
    if *spec != FamilySpec::G2P {
        let ch = tangent_character(spec, 1)?;
        report.check("dim X = rank T_X", at.clone(), &int(spec.dimension() as i64), ch.rank());
    }
    Ok(report)
}

/// Every valid spec of `kind` with first parameter in `ks` and `n` in `ns`
/// (`a` and `b` for products), sorted.
pub fn enumerate(kind: FamilyKind, ks: std::ops::RangeInclusive<u32>, ns: std::ops::RangeInclusive<u32>) -> Vec<FamilySpec> {
    let mut out: Vec<FamilySpec> = match kind {
        FamilyKind::G2P => vec![FamilySpec::G2P],
        FamilyKind::CompleteIntersection => ns.flat_map(|n| enumerate_ci(n, u32::MAX)).collect(),
        _ => ks
            .flat_map(|k| ns.clone().map(move |n| FamilySpec::two_parameter(kind, k, n)))
            .filter(|s| s.validate().is_ok())
            .collect(),
    };
    out.sort();
    out
}

/// Fano complete intersections in `P^n` with at most `max_c` equations of
/// degree at least two, including `P^n` itself.
pub fn enumerate_ci(n: u32, max_c: u32) -> Vec<FamilySpec> {
    fn rec(n: u32, remaining: u32, max_deg: u32, c_left: u32, cur: &mut Vec<u32>, out: &mut Vec<FamilySpec>) {
        out.push(FamilySpec::complete_intersection(n, cur));
        if c_left == 0 {
            return;
        }
        for d in (2..=max_deg.min(remaining)).rev() {
            cur.push(d);
            rec(n, remaining - d, d, c_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        rec(n, n, n, max_c.min(n), &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// `ch_2(P^a x P^b)` paired with the surface `P^i x P^{2-i}`.
pub fn product_surface_pairing(a: u32, b: u32, i: u32) -> Result<Rational> {
    if i > 2 || i > a || 2 - i > b {
        return Err(Error::InvalidParameter(format!("P^{i}xP^{} is not a surface in P^{a}xP^{b}", 2 - i)));
    }
    let spec = FamilySpec::ProductPP { a, b };
    let ch2 = tangent_character(&spec, 2)?.component(2);
    let ring = ch2.ring().clone();
    let left = GradedClass::generator(&projective_space_ring_named(a, "h1"))?.pow(a - i);
    let right = GradedClass::generator(&projective_space_ring_named(b, "h2"))?.pow(b - (2 - i));
    let cycle = GradedClass::embed_left(&ring, &left)?.multiply(&GradedClass::embed_right(&ring, &right)?)?;
    Ok(ch2.multiply(&cycle)?.integrate())
}

/// `ch_2(P^a x P^b) . [P^1 x P^1]`, which vanishes.
pub fn product_nonexample(a: u32, b: u32) -> Result<Rational> {
    product_surface_pairing(a, b, 1)
}
