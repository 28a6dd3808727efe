//! Schubert calculus on `G(k, n)`: partitions in the `k x (n-k)` box, the
//! Pieri rule, products through the Giambelli determinant, and the Chern
//! classes of the tautological bundles.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::rings::{GradedClass, Label, Ring, RingKind, RingModel};

/// A weakly decreasing sequence of positive integers (trailing zeros are
/// stripped on construction).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(i)`, the index of the special class `sigma_i`.
    pub fn row(i: u32) -> Self {
        if i == 0 {
            Self::empty()
        } else {
            Partition(vec![i])
        }
    }

    /// `(1^i)`.
    pub fn column(i: u32) -> Self {
        Partition(vec![1; i as usize])
    }

    pub fn full_box(k: u32, m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition(vec![m; k as usize])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_in_box(&self, k: u32, m: u32) -> bool {
        self.0.len() <= k as usize && self.part(0) <= m
    }

    /// Complement in the `k x m` box, read backwards.
    pub fn complement(&self, k: u32, m: u32) -> Option<Self> {
        if !self.fits_in_box(k, m) {
            return None;
        }
        let parts = (0..k as usize).map(|i| m - self.part(k as usize - 1 - i)).collect();
        Partition::new(parts).ok()
    }

    /// Text form `[2,1]`; the empty partition is `[]`.
    pub fn bracket(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ{}", self.bracket())
    }
}

/// All partitions of `size` fitting in the `k x m` box.
pub fn partitions_in_box(k: u32, m: u32, size: u32) -> Vec<Partition> {
    fn rec(rows_left: u32, max_part: u32, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows_left == 0 || remaining > rows_left * max_part {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            cur.push(p);
            rec(rows_left - 1, p, remaining - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, m, size, &mut Vec::new(), &mut out);
    out
}

/// Shapes `mu` obtained from `lambda` by adding `i` boxes, no two in the
/// same column, staying inside the `k x m` box.
pub fn pieri_shapes(k: u32, m: u32, lambda: &Partition, i: u32) -> Vec<Partition> {
    fn rec(k: usize, m: u32, lambda: &Partition, row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == k {
            if left == 0 {
                if let Ok(p) = Partition::new(cur.clone()) {
                    out.push(p);
                }
            }
            return;
        }
        let lo = lambda.part(row);
        let hi = if row == 0 { m } else { lambda.part(row - 1) };
        if hi < lo {
            return;
        }
        for v in lo..=hi.min(lo + left) {
            cur.push(v);
            rec(k, m, lambda, row + 1, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    if !lambda.fits_in_box(k, m) {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(k as usize, m, lambda, 0, i, &mut Vec::new(), &mut out);
    out
}

type PartitionMap = BTreeMap<Partition, Rational>;

fn add_to(map: &mut PartitionMap, p: Partition, c: Rational) {
    let entry = map.entry(p.clone()).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&p);
    }
}

fn pieri_map(k: u32, m: u32, input: &PartitionMap, i: u32) -> PartitionMap {
    if i == 0 {
        return input.clone();
    }
    let mut out = PartitionMap::new();
    for (lambda, c) in input {
        for mu in pieri_shapes(k, m, lambda, i) {
            add_to(&mut out, mu, c.clone());
        }
    }
    out
}

/// `input * sigma_mu` via the Giambelli determinant
/// `sigma_mu = det(sigma_{mu_r + c - r})`, expanded along rows and applied
/// to `input` one special class at a time.
fn giambelli_apply(k: u32, m: u32, input: &PartitionMap, mu: &Partition) -> PartitionMap {
    fn rec(k: u32, m: u32, mu: &Partition, row: usize, used: u64, current: PartitionMap) -> PartitionMap {
        let len = mu.len();
        if row == len || current.is_empty() {
            return current;
        }
        let mut out = PartitionMap::new();
        let mut position = 0;
        for col in 0..len {
            if used & (1 << col) != 0 {
                continue;
            }
            let sign_negative = position % 2 == 1;
            position += 1;
            let index = mu.part(row) as i64 + col as i64 - row as i64;
            if index < 0 || index > m as i64 {
                continue;
            }
            let next = pieri_map(k, m, &current, index as u32);
            for (p, c) in rec(k, m, mu, row + 1, used | (1 << col), next) {
                add_to(&mut out, p, if sign_negative { -c } else { c });
            }
        }
        out
    }
    rec(k, m, mu, 0, 0, input.clone())
}

/// Structure constants of `sigma_lambda * sigma_mu` in `G(k, n)`.
pub(crate) fn multiply_partitions(k: u32, n: u32, lambda: &Partition, mu: &Partition) -> PartitionMap {
    let m = n - k;
    let (base, det) = if lambda.len() >= mu.len() { (lambda, mu) } else { (mu, lambda) };
    let mut input = PartitionMap::new();
    input.insert(base.clone(), Rational::one());
    if det.len() == 1 {
        return pieri_map(k, m, &input, det.part(0));
    }
    giambelli_apply(k, m, &input, det)
}

/// Chow ring of `G(k, n)` in the Schubert basis.
pub fn grassmannian_ring(k: u32, n: u32) -> Result<Ring> {
    if k < 1 || k + 1 > n {
        return Err(Error::InvalidParameter(format!("G({k},{n}) needs 1 <= k <= n-1")));
    }
    Ok(RingModel::build(format!("G({k},{n})"), k * (n - k), RingKind::Grassmannian { k, n }))
}

fn params(ring: &Ring) -> Result<(u32, u32)> {
    ring.grassmannian_params()
        .ok_or_else(|| Error::InvalidParameter(format!("`{}` is not a Grassmannian ring", ring.name())))
}

pub fn sigma(ring: &Ring, parts: &[u32]) -> Result<GradedClass> {
    let p = Partition::new(parts.to_vec())?;
    GradedClass::from_label(ring, Label::Schubert(p))
}

/// `sigma_lambda * sigma_i` by the Pieri rule.
pub fn pieri(ring: &Ring, lambda: &Partition, i: u32) -> Result<GradedClass> {
    let (k, n) = params(ring)?;
    if i < 1 || i > n - k {
        return Err(Error::InvalidParameter(format!("Pieri index {i} outside 1..={}", n - k)));
    }
    if !lambda.fits_in_box(k, n - k) {
        return Err(Error::NotInBasis { label: lambda.to_string(), ring: ring.name().to_string() });
    }
    let terms = pieri_shapes(k, n - k, lambda, i).into_iter().map(|p| (Label::Schubert(p), Rational::one()));
    GradedClass::from_terms(ring, terms)
}

pub fn schubert_multiply(x: &GradedClass, y: &GradedClass) -> Result<GradedClass> {
    params(x.ring())?;
    x.multiply(y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tautological {
    /// Dual of the tautological subbundle `S`, rank `k`: `c_i = sigma_{1^i}`.
    SubDual,
    /// Universal quotient bundle `Q`, rank `n-k`: `c_i = sigma_i`.
    Quotient,
}

/// `c_1, ..., c_r` of the chosen tautological bundle.
pub fn tautological_chern(ring: &Ring, which: Tautological) -> Result<Vec<GradedClass>> {
    let (k, n) = params(ring)?;
    match which {
        Tautological::SubDual => (1..=k).map(|i| GradedClass::from_label(ring, Label::Schubert(Partition::column(i)))).collect(),
        Tautological::Quotient => (1..=n - k).map(|i| GradedClass::from_label(ring, Label::Schubert(Partition::row(i)))).collect(),
    }
}

/// `integrate(x * sigma_mu)` for `x` of complementary codimension.
pub fn dual_pairing(x: &GradedClass, mu: &Partition) -> Result<Rational> {
    let (k, n) = params(x.ring())?;
    let dim = k * (n - k);
    if mu.size() > dim {
        return Err(Error::DegreeMismatch { expected: dim, found: mu.to_string() });
    }
    let codim = dim - mu.size();
    if !x.is_homogeneous(codim) {
        return Err(Error::DegreeMismatch { expected: codim, found: x.to_string() });
    }
    let s = GradedClass::from_label(x.ring(), Label::Schubert(mu.clone()))?;
    Ok((x * &s).integrate())
}
