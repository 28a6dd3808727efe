//! Explicit polarized pairs `(Y, L)` with their divisor and curve lattices.
//!
//! Every pair stores a divisor basis, a curve basis, the intersection
//! matrix between them, and simplicial nef and Mori cones given by
//! generators. Ampleness is decided by the coordinates of a divisor in the
//! nef generators. Each Mori generator also carries the fiber dimension and
//! exceptional-locus dimension of its contraction, which is what separates
//! pairs that look alike numerically.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::checks::VerificationReport;
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, Rational};

pub const CATALOG_VERSION: &str = "1.0.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Positivity {
    Ample,
    NefOnly,
    Neither,
}

impl fmt::Display for Positivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Positivity::Ample => "AMPLE",
            Positivity::NefOnly => "NEF_ONLY",
            Positivity::Neither => "NEITHER",
        })
    }
}

/// Contraction data of one extremal ray.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RayData {
    /// Dimension of a general nontrivial fiber.
    pub fiber_dim: u32,
    /// Dimension of the exceptional locus (`dim Y` for fiber-type rays).
    pub exceptional_dim: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedPair {
    pub label: String,
    pub dim: u32,
    pub divisor_basis: Vec<String>,
    pub curve_basis: Vec<String>,
    pub nef_generators: Vec<Vec<i64>>,
    /// Mori generators in curve coordinates.
    pub mori_generators: Vec<Vec<i64>>,
    /// `pairing[i][j] = D_i . C_j`.
    pub pairing: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub polarization: Vec<i64>,
    pub pseudoindex: i64,
    /// Parallel to `mori_generators`.
    pub rays: Vec<RayData>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExceptionalCase {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for ExceptionalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            ExceptionalCase::A => 'a',
            ExceptionalCase::B => 'b',
            ExceptionalCase::C => 'c',
            ExceptionalCase::D => 'd',
            ExceptionalCase::E => 'e',
        };
        write!(f, "({c})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub case: ExceptionalCase,
    pub m: u32,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={}", self.case, self.m)
    }
}

/// A Picard-rank-one factor of a product pair.
#[derive(Clone, Debug)]
pub struct Factor {
    pub name: String,
    pub dim: u32,
    /// Fano index: `-K = index * generator`.
    pub index: i64,
    /// Degree of the polarization on the generator.
    pub l_degree: i64,
}

impl Factor {
    pub fn projective(a: u32) -> Self {
        Factor { name: format!("P^{a}"), dim: a, index: a as i64 + 1, l_degree: 1 }
    }

    /// `Q^b` with `O(1)`; `b = 1` is a conic, that is `(P^1, O(2))`.
    pub fn quadric(b: u32) -> Result<Self> {
        match b {
            0 => Err(Error::InvalidParameter("Q^0 is not connected".into())),
            1 => Ok(Factor { name: "Q^1".into(), dim: 1, index: 2, l_degree: 2 }),
            2 => Err(Error::InvalidParameter("Q^2 = P^1xP^1 has Picard rank 2; use two P^1 factors".into())),
            b => Ok(Factor { name: format!("Q^{b}"), dim: b, index: b as i64, l_degree: 1 }),
        }
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl PolarizedPair {
    fn finish(mut self) -> Self {
        let anti: Vec<i64> = self.canonical.iter().map(|x| -x).collect();
        self.pseudoindex = self.mori_generators.iter().map(|r| self.intersect(&anti, r)).min().unwrap_or(0);
        self
    }

    pub fn picard_rank(&self) -> usize {
        self.divisor_basis.len()
    }

    /// `D . C` for divisor and curve coordinate vectors.
    pub fn intersect(&self, divisor: &[i64], curve: &[i64]) -> i64 {
        let row: Vec<i64> = (0..self.curve_basis.len())
            .map(|j| divisor.iter().enumerate().map(|(i, d)| d * self.pairing[i][j]).sum())
            .collect();
        dot(&row, curve)
    }

    pub fn mori_pairings(&self, divisor: &[i64]) -> Vec<i64> {
        self.mori_generators.iter().map(|r| self.intersect(divisor, r)).collect()
    }

    /// Coordinates of `divisor` in the nef generators, which form a basis.
    pub fn nef_coordinates(&self, divisor: &[i64]) -> Result<Vec<Rational>> {
        let rho = self.picard_rank();
        if self.nef_generators.len() != rho || divisor.len() != rho {
            return Err(Error::InvalidParameter(format!("{}: nef cone is not simplicial", self.label)));
        }
        // Augmented system: columns are nef generators.
        let mut m: Vec<Vec<Rational>> = (0..rho)
            .map(|i| {
                let mut row: Vec<Rational> = self.nef_generators.iter().map(|g| int(g[i])).collect();
                row.push(int(divisor[i]));
                row
            })
            .collect();
        for col in 0..rho {
            let pivot = (col..rho)
                .find(|&r| !m[r][col].is_zero())
                .ok_or_else(|| Error::InvalidParameter(format!("{}: nef generators are dependent", self.label)))?;
            m.swap(col, pivot);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..rho {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=rho {
                        let v = &m[col][c] * &f;
                        m[r][c] -= v;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|row| row[rho].clone()).collect())
    }

    pub fn positivity(&self, divisor: &[i64]) -> Result<Positivity> {
        let coords = self.nef_coordinates(divisor)?;
        Ok(if coords.iter().all(Signed::is_positive) {
            Positivity::Ample
        } else if coords.iter().all(|c| !c.is_negative()) {
            Positivity::NefOnly
        } else {
            Positivity::Neither
        })
    }

    pub fn anticanonical(&self) -> Vec<i64> {
        self.canonical.iter().map(|x| -x).collect()
    }

    // -- builders ----------------------------------------------------------

    /// `(P^d, O(a))`.
    pub fn projective_space(d: u32, a: i64) -> Result<Self> {
        if d < 1 || a < 1 {
            return Err(Error::InvalidParameter(format!("(P^{d}, O({a})) needs d >= 1, a >= 1")));
        }
        Ok(PolarizedPair {
            label: format!("(P^{d}, O({a}))"),
            dim: d,
            divisor_basis: vec!["h".into()],
            curve_basis: vec!["line".into()],
            nef_generators: vec![vec![1]],
            mori_generators: vec![vec![1]],
            pairing: vec![vec![1]],
            canonical: vec![-(d as i64 + 1)],
            polarization: vec![a],
            pseudoindex: 0,
            rays: vec![RayData { fiber_dim: d, exceptional_dim: d }],
        }
        .finish())
    }

    /// `(Q^d, O(1))` for `d >= 3`.
    pub fn quadric(d: u32) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidParameter(format!("Q^{d} needs d >= 3 for Picard rank one")));
        }
        Ok(PolarizedPair {
            label: format!("(Q^{d}, O(1))"),
            dim: d,
            divisor_basis: vec!["h".into()],
            curve_basis: vec!["line".into()],
            nef_generators: vec![vec![1]],
            mori_generators: vec![vec![1]],
            pairing: vec![vec![1]],
            canonical: vec![-(d as i64)],
            polarization: vec![1],
            pseudoindex: 0,
            rays: vec![RayData { fiber_dim: d, exceptional_dim: d }],
        }
        .finish())
    }

    /// Product of Picard-rank-one factors with the exterior product of
    /// their polarizations.
    pub fn product(factors: &[Factor]) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::InvalidParameter("a product needs at least two factors".into()));
        }
        let rho = factors.len();
        let dim: u32 = factors.iter().map(|f| f.dim).sum();
        let names: Vec<&str> = factors.iter().map(|f| f.name.as_str()).collect();
        let degrees: Vec<String> = factors.iter().map(|f| f.l_degree.to_string()).collect();
        Ok(PolarizedPair {
            label: format!("({}, O({}))", names.join("x"), degrees.join(",")),
            dim,
            divisor_basis: (1..=rho).map(|i| format!("h{i}")).collect(),
            curve_basis: (1..=rho).map(|i| format!("line{i}")).collect(),
            nef_generators: identity(rho),
            mori_generators: identity(rho),
            pairing: identity(rho),
            canonical: factors.iter().map(|f| -f.index).collect(),
            polarization: factors.iter().map(|f| f.l_degree).collect(),
            pseudoindex: 0,
            rays: factors.iter().map(|f| RayData { fiber_dim: f.dim, exceptional_dim: dim }).collect(),
        }
        .finish())
    }

    /// Smooth `(1,1)`-divisor in `P^a x P^b` with `O(1,1)`, `a + b >= 3`.
    pub fn divisor_11(a: u32, b: u32) -> Result<Self> {
        if a < 1 || b < 1 || a + b < 3 {
            return Err(Error::InvalidParameter(format!("(1,1)-divisor in P^{a}xP^{b} needs a,b >= 1 and a+b >= 3")));
        }
        let dim = a + b - 1;
        // Curves in fibers of the second projection are contracted by it;
        // that projection is birational (a blowup of P^b) exactly when a = 1.
        let ray = |own: u32, other: u32| {
            if own >= 2 {
                RayData { fiber_dim: own - 1, exceptional_dim: dim }
            } else {
                RayData { fiber_dim: 1, exceptional_dim: other - 1 }
            }
        };
        Ok(PolarizedPair {
            label: format!("((1,1)-divisor in P^{a}xP^{b}, O(1,1))"),
            dim,
            divisor_basis: vec!["h1".into(), "h2".into()],
            curve_basis: vec!["line1".into(), "line2".into()],
            nef_generators: identity(2),
            mori_generators: identity(2),
            pairing: identity(2),
            canonical: vec![-(a as i64), -(b as i64)],
            polarization: vec![1, 1],
            pseudoindex: 0,
            rays: vec![ray(a, b), ray(b, a)],
        }
        .finish())
    }

    /// Blowup of `P^n` along a linear `P^s` (`0 <= s <= n-2`) with `2H - E`.
    pub fn linear_blowup(n: u32, s: u32) -> Result<Self> {
        if n < 2 || s + 2 > n {
            return Err(Error::InvalidParameter(format!("blowup of P^{n} along P^{s} needs 0 <= s <= n-2")));
        }
        let (n_i, s_i) = (n as i64, s as i64);
        Ok(PolarizedPair {
            label: format!("(Bl_(P^{s}) P^{n}, 2H-E)"),
            dim: n,
            divisor_basis: vec!["H".into(), "E".into()],
            curve_basis: vec!["line".into(), "e".into()],
            nef_generators: vec![vec![1, 0], vec![1, -1]],
            mori_generators: vec![vec![0, 1], vec![1, -1]],
            pairing: vec![vec![1, 0], vec![0, -1]],
            canonical: vec![-(n_i + 1), n_i - s_i - 1],
            polarization: vec![2, -1],
            pseudoindex: 0,
            rays: vec![
                RayData { fiber_dim: n - s - 1, exceptional_dim: n - 1 },
                RayData { fiber_dim: s + 1, exceptional_dim: n },
            ],
        }
        .finish())
    }

    /// `(P^m x P^m, O(1,1))`.
    pub fn case_a(m: u32) -> Result<Self> {
        check_m(m)?;
        Self::product(&[Factor::projective(m), Factor::projective(m)])
    }

    /// `(P^{m+1} x P^m, O(1,1))`.
    pub fn case_b(m: u32) -> Result<Self> {
        check_m(m)?;
        Self::product(&[Factor::projective(m + 1), Factor::projective(m)])
    }

    /// `P(O(2) + O(1)^m)` over `P^{m+1}`, as the blowup of `P^{2m+1}`
    /// along `P^{m-1}`.
    pub fn case_c(m: u32) -> Result<Self> {
        check_m(m)?;
        Self::linear_blowup(2 * m + 1, m - 1)
    }

    /// `(P^m x Q^{m+1}, O(1,1))`; for `m = 1`, `Q^2 = P^1 x P^1`.
    pub fn case_d(m: u32) -> Result<Self> {
        check_m(m)?;
        if m == 1 {
            let mut p = Self::product(&[Factor::projective(1), Factor::projective(1), Factor::projective(1)])?;
            p.label = "(P^1xQ^2, O(1,1))".into();
            return Ok(p);
        }
        Self::product(&[Factor::projective(m), Factor::quadric(m + 1)?])
    }

    /// `P(T_{P^{m+1}})`, as a `(1,1)`-divisor in `P^{m+1} x P^{m+1}`.
    pub fn case_e(m: u32) -> Result<Self> {
        check_m(m)?;
        Self::divisor_11(m + 1, m + 1)
    }

    pub fn case(case: ExceptionalCase, m: u32) -> Result<Self> {
        match case {
            ExceptionalCase::A => Self::case_a(m),
            ExceptionalCase::B => Self::case_b(m),
            ExceptionalCase::C => Self::case_c(m),
            ExceptionalCase::D => Self::case_d(m),
            ExceptionalCase::E => Self::case_e(m),
        }
    }

    // -- operations --------------------------------------------------------

    /// `-2K - dL`.
    pub fn twist_class(&self) -> Vec<i64> {
        let d = self.dim as i64;
        self.canonical.iter().zip(&self.polarization).map(|(k, l)| -2 * k - d * l).collect()
    }

    pub fn positivity_of_twist(&self) -> Positivity {
        self.positivity(&self.twist_class()).expect("catalog pairs have simplicial nef cones")
    }

    /// `L . R` for each Mori generator.
    pub fn extremal_l_degrees(&self) -> Vec<Rational> {
        self.mori_pairings(&self.polarization).into_iter().map(int).collect()
    }

    /// Matches the pair against (a)-(e) in its dimension.
    pub fn classify(&self) -> Result<Classification> {
        if self.picard_rank() < 2 {
            return Err(Error::InvalidParameter(format!("{} has Picard rank one", self.label)));
        }
        if self.positivity_of_twist() != Positivity::Ample {
            return Err(Error::InvalidParameter(format!("{}: -2K - dL is not ample", self.label)));
        }
        let candidates: Vec<(ExceptionalCase, u32)> = if self.dim.is_multiple_of(2) {
            vec![(ExceptionalCase::A, self.dim / 2)]
        } else {
            let m = (self.dim - 1) / 2;
            [ExceptionalCase::B, ExceptionalCase::C, ExceptionalCase::D, ExceptionalCase::E]
                .into_iter()
                .map(|c| (c, m))
                .collect()
        };
        for (case, m) in candidates {
            if let Ok(model) = Self::case(case, m) {
                if same_invariants(self, &model) {
                    return Ok(Classification { case, m });
                }
            }
        }
        Err(Error::NoMatch(self.label.clone()))
    }

    /// Structural invariants and the facts the theory predicts for the pair.
    pub fn validate(&self) -> VerificationReport {
        let mut r = VerificationReport::new();
        let at = self.label.clone();
        let rho = self.picard_rank();
        let shapes_ok = self.curve_basis.len() == rho
            && self.pairing.len() == rho
            && self.pairing.iter().all(|row| row.len() == rho)
            && self.nef_generators.iter().all(|g| g.len() == rho)
            && self.mori_generators.iter().all(|g| g.len() == rho)
            && self.rays.len() == self.mori_generators.len()
            && self.canonical.len() == rho
            && self.polarization.len() == rho;
        r.check_bool("lattice shapes agree", at.clone(), format!("rho={rho}"), shapes_ok);
        if !shapes_ok {
            return r;
        }
        let nef_mori_ok = self.nef_generators.iter().all(|g| self.mori_pairings(g).iter().all(|&x| x >= 0));
        r.check_bool("nef . mori >= 0", at.clone(), "", nef_mori_ok);
        let l = self.positivity(&self.polarization).ok();
        r.check_bool("L ample", at.clone(), format!("{l:?}"), l == Some(Positivity::Ample));
        let fano = self.positivity(&self.anticanonical()).ok();
        r.check_bool("-K ample", at.clone(), format!("{fano:?}"), fano == Some(Positivity::Ample));
        let mori_ample = |v: &[i64]| self.mori_pairings(v).iter().all(|&x| x > 0);
        r.check_bool(
            "nef-cone and Mori-cone ampleness agree on the twist",
            at.clone(),
            self.positivity_of_twist().to_string(),
            (self.positivity_of_twist() == Positivity::Ample) == mori_ample(&self.twist_class()),
        );
        let min_len = self.mori_pairings(&self.anticanonical()).into_iter().min().unwrap_or(0);
        r.check("pseudoindex = min -K.R", at.clone(), &self.pseudoindex, &min_len);
        r.check_bool("pseudoindex >= 1", at.clone(), self.pseudoindex.to_string(), self.pseudoindex >= 1);
        if rho >= 2 {
            r.check_bool(
                "pseudoindex <= d/2 + 1",
                at.clone(),
                format!("i={} d={}", self.pseudoindex, self.dim),
                2 * self.pseudoindex <= self.dim as i64 + 2,
            );
            for (ray, len) in self.rays.iter().zip(self.mori_pairings(&self.anticanonical())) {
                r.check_bool(
                    "i + l(R) <= dim E(R) + 2",
                    at.clone(),
                    format!("i={} l={len} E={}", self.pseudoindex, ray.exceptional_dim),
                    self.pseudoindex + len <= ray.exceptional_dim as i64 + 2,
                );
            }
        }
        r
    }

    pub fn document(&self) -> PairDocument {
        let strs = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>();
        PairDocument {
            label: self.label.clone(),
            dim: self.dim,
            picard_rank: self.picard_rank(),
            divisor_basis: self.divisor_basis.clone(),
            curve_basis: self.curve_basis.clone(),
            nef_generators: self.nef_generators.iter().map(|g| strs(g)).collect(),
            mori_generators: self.mori_generators.iter().map(|g| strs(g)).collect(),
            pairing: self.pairing.iter().map(|g| strs(g)).collect(),
            canonical: strs(&self.canonical),
            polarization: strs(&self.polarization),
            pseudoindex: self.pseudoindex.to_string(),
            rays: self.rays.clone(),
            twist: strs(&self.twist_class()),
            twist_positivity: self.positivity_of_twist(),
            extremal_l_degrees: self.extremal_l_degrees().iter().map(format_rational).collect(),
        }
    }
}

fn check_m(m: u32) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidParameter("cases (a)-(e) need m >= 1".into()));
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Equality of the intrinsic data up to relabeling the cone generators:
/// nef-versus-Mori intersection matrix, `K` and `L` on the rays, and the
/// contraction data of each ray.
fn same_invariants(p: &PolarizedPair, q: &PolarizedPair) -> bool {
    if p.dim != q.dim || p.picard_rank() != q.picard_rank() || p.mori_generators.len() != q.mori_generators.len() {
        return false;
    }
    if p.nef_generators.len() != q.nef_generators.len() {
        return false;
    }
    let ray_data = |x: &PolarizedPair| -> Vec<(i64, i64, RayData)> {
        let k = x.mori_pairings(&x.canonical);
        let l = x.mori_pairings(&x.polarization);
        (0..x.rays.len()).map(|j| (k[j], l[j], x.rays[j])).collect()
    };
    let matrix = |x: &PolarizedPair| -> Vec<Vec<i64>> { x.nef_generators.iter().map(|g| x.mori_pairings(g)).collect() };
    let (rp, rq) = (ray_data(p), ray_data(q));
    let (mp, mq) = (matrix(p), matrix(q));
    let rays = permutations(rp.len());
    let nefs = permutations(mp.len());
    rays.iter().any(|s| {
        (0..rq.len()).all(|j| rp[s[j]] == rq[j])
            && nefs.iter().any(|t| (0..mq.len()).all(|i| (0..rq.len()).all(|j| mp[t[i]][s[j]] == mq[i][j])))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PairDocument {
    pub label: String,
    pub dim: u32,
    pub picard_rank: usize,
    pub divisor_basis: Vec<String>,
    pub curve_basis: Vec<String>,
    pub nef_generators: Vec<Vec<String>>,
    pub mori_generators: Vec<Vec<String>>,
    pub pairing: Vec<Vec<String>>,
    pub canonical: Vec<String>,
    pub polarization: Vec<String>,
    pub pseudoindex: String,
    pub rays: Vec<RayData>,
    pub twist: Vec<String>,
    pub twist_positivity: Positivity,
    pub extremal_l_degrees: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogDocument {
    pub catalog_version: &'static str,
    pub pairs: Vec<PairDocument>,
}

/// The standard list: `(P^d, O(1))`, `(P^d, O(2))`, `(P^1, O(3))`,
/// `(Q^d, O(1))` and (a)-(e) for `1 <= m <= m_max`.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub pairs: Vec<PolarizedPair>,
}

impl Catalog {
    pub fn standard(m_max: u32, d_max: u32) -> Result<Self> {
        let mut pairs = Vec::new();
        for d in 1..=d_max {
            pairs.push(PolarizedPair::projective_space(d, 1)?);
            pairs.push(PolarizedPair::projective_space(d, 2)?);
        }
        pairs.push(PolarizedPair::projective_space(1, 3)?);
        for d in 3..=d_max {
            pairs.push(PolarizedPair::quadric(d)?);
        }
        for m in 1..=m_max {
            for case in [ExceptionalCase::A, ExceptionalCase::B, ExceptionalCase::C, ExceptionalCase::D, ExceptionalCase::E] {
                pairs.push(PolarizedPair::case(case, m)?);
            }
        }
        Ok(Catalog { pairs })
    }

    /// Pairs exempt from `L . R = 1`.
    pub fn is_lr_exception(pair: &PolarizedPair) -> bool {
        pair.picard_rank() == 1
            && pair.divisor_basis == ["h"]
            && pair.canonical[0] == -(pair.dim as i64 + 1)
            && (pair.polarization[0] == 2 || (pair.dim == 1 && pair.polarization[0] == 3))
    }

    pub fn validate(&self) -> VerificationReport {
        let mut r = VerificationReport::new();
        for p in &self.pairs {
            r.extend(p.validate());
            if !Self::is_lr_exception(p) {
                let degrees = p.extremal_l_degrees();
                r.check_bool(
                    "L . R = 1 on every Mori generator",
                    p.label.clone(),
                    degrees.iter().map(format_rational).collect::<Vec<_>>().join(","),
                    degrees.iter().all(One::is_one),
                );
            }
        }
        r
    }

    pub fn document(&self) -> CatalogDocument {
        CatalogDocument { catalog_version: CATALOG_VERSION, pairs: self.pairs.iter().map(PolarizedPair::document).collect() }
    }
}
