//! Truncated graded-commutative rings modelling numerical Chow rings.
//!
//! A [`RingModel`] is immutable once built and is shared behind an [`Arc`].
//! Elements are [`GradedClass`] values: finite maps from basis labels to
//! rationals. Everything above the ring dimension is dropped on
//! multiplication.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{format_rational, Rational};
use crate::schubert::{self, Partition};

pub type Ring = Arc<RingModel>;

/// Canonical basis label. The text form (via `Display`) is stable and is
/// what reports use as keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// `var^exp` in a truncated polynomial ring.
    Power { var: String, exp: u32 },
    /// Kunneth basis element of a product ring.
    Pair(Box<Label>, Box<Label>),
    /// Base label times `xi^exp` in a projective bundle.
    Bundle(Box<Label>, u32),
    /// Schubert class in a Grassmannian.
    Schubert(Partition),
}

impl Label {
    pub fn degree(&self) -> u32 {
        match self {
            Label::Power { exp, .. } => *exp,
            Label::Pair(a, b) => a.degree() + b.degree(),
            Label::Bundle(b, e) => b.degree() + e,
            Label::Schubert(p) => p.size(),
        }
    }

    fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    fn variant_index(&self) -> u8 {
        match self {
            Label::Power { .. } => 0,
            Label::Pair(..) => 1,
            Label::Bundle(..) => 2,
            Label::Schubert(_) => 3,
        }
    }

    fn structural_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Label::Power { var: v1, exp: e1 }, Label::Power { var: v2, exp: e2 }) => (v1, e1).cmp(&(v2, e2)),
            (Label::Pair(a1, b1), Label::Pair(a2, b2)) => a1.cmp(a2).then_with(|| b1.cmp(b2)),
            (Label::Bundle(x, e), Label::Bundle(y, f)) => x.cmp(y).then_with(|| e.cmp(f)),
            // Larger first row first, so sigma[2] precedes sigma[1,1].
            (Label::Schubert(p), Label::Schubert(q)) => q.cmp(p),
            _ => self.variant_index().cmp(&other.variant_index()),
        }
    }
}

/// Degree first, then structure.
impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.structural_cmp(other))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Power { var, exp } => match exp {
                0 => write!(f, "1"),
                1 => write!(f, "{var}"),
                e => write!(f, "{var}^{e}"),
            },
            Label::Pair(a, b) => match (a.is_unit(), b.is_unit()) {
                (true, true) => write!(f, "1"),
                (true, false) => write!(f, "{b}"),
                (false, true) => write!(f, "{a}"),
                (false, false) => write!(f, "{a}*{b}"),
            },
            Label::Bundle(b, e) => {
                let xi = match e {
                    0 => String::new(),
                    1 => "xi".to_string(),
                    e => format!("xi^{e}"),
                };
                match (b.is_unit(), xi.is_empty()) {
                    (true, true) => write!(f, "1"),
                    (true, false) => write!(f, "{xi}"),
                    (false, true) => write!(f, "{b}"),
                    (false, false) => write!(f, "{b}*{xi}"),
                }
            }
            Label::Schubert(p) => write!(f, "σ{}", p.bracket()),
        }
    }
}

#[derive(Debug)]
pub(crate) enum RingKind {
    Truncated { var: String },
    Product(Ring, Ring),
    ProjBundle { base: Ring, rank: u32, chern: Vec<GradedClass> },
    Grassmannian { k: u32, n: u32 },
}

#[derive(Debug)]
pub struct RingModel {
    name: String,
    dim: u32,
    pub(crate) kind: RingKind,
}

impl RingModel {
    pub(crate) fn build(name: String, dim: u32, kind: RingKind) -> Ring {
        Arc::new(RingModel { name, dim, kind })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> u32 {
        self.dim
    }

    /// Grassmannian parameters `(k, n)` when this is a Schubert-basis ring.
    pub fn grassmannian_params(&self) -> Option<(u32, u32)> {
        match self.kind {
            RingKind::Grassmannian { k, n } => Some((k, n)),
            _ => None,
        }
    }

    pub fn basis_in_degree(&self, deg: u32) -> Vec<Label> {
        if deg > self.dim {
            return Vec::new();
        }
        let mut out = match &self.kind {
            RingKind::Truncated { var } => vec![Label::Power { var: var.clone(), exp: deg }],
            RingKind::Product(a, b) => {
                let mut v = Vec::new();
                for i in 0..=deg {
                    let left = a.basis_in_degree(i);
                    let right = b.basis_in_degree(deg - i);
                    for x in &left {
                        for y in &right {
                            v.push(Label::Pair(Box::new(x.clone()), Box::new(y.clone())));
                        }
                    }
                }
                v
            }
            RingKind::ProjBundle { base, rank, .. } => {
                let mut v = Vec::new();
                for e in 0..(*rank).min(deg + 1) {
                    for b in base.basis_in_degree(deg - e) {
                        v.push(Label::Bundle(Box::new(b), e));
                    }
                }
                v
            }
            RingKind::Grassmannian { k, n } => schubert::partitions_in_box(*k, n - k, deg)
                .into_iter()
                .map(Label::Schubert)
                .collect(),
        };
        out.sort();
        out
    }

    pub fn basis(&self) -> Vec<Label> {
        (0..=self.dim).flat_map(|d| self.basis_in_degree(d)).collect()
    }

    pub fn contains(&self, label: &Label) -> bool {
        match (&self.kind, label) {
            (RingKind::Truncated { var }, Label::Power { var: v, exp }) => v == var && *exp <= self.dim,
            (RingKind::Product(a, b), Label::Pair(x, y)) => a.contains(x) && b.contains(y),
            (RingKind::ProjBundle { base, rank, .. }, Label::Bundle(x, e)) => *e < *rank && base.contains(x),
            (RingKind::Grassmannian { k, n }, Label::Schubert(p)) => p.fits_in_box(*k, n - k),
            _ => false,
        }
    }

    pub fn unit_label(&self) -> Label {
        match &self.kind {
            RingKind::Truncated { var } => Label::Power { var: var.clone(), exp: 0 },
            RingKind::Product(a, b) => Label::Pair(Box::new(a.unit_label()), Box::new(b.unit_label())),
            RingKind::ProjBundle { base, .. } => Label::Bundle(Box::new(base.unit_label()), 0),
            RingKind::Grassmannian { .. } => Label::Schubert(Partition::empty()),
        }
    }

    /// The unique top-degree basis label; it integrates to 1.
    pub fn point_label(&self) -> Label {
        match &self.kind {
            RingKind::Truncated { var } => Label::Power { var: var.clone(), exp: self.dim },
            RingKind::Product(a, b) => Label::Pair(Box::new(a.point_label()), Box::new(b.point_label())),
            RingKind::ProjBundle { base, rank, .. } => Label::Bundle(Box::new(base.point_label()), rank - 1),
            RingKind::Grassmannian { k, n } => Label::Schubert(Partition::full_box(*k, n - k)),
        }
    }

    /// Product of two basis labels, expanded in the basis.
    pub(crate) fn mul_labels(&self, x: &Label, y: &Label) -> BTreeMap<Label, Rational> {
        let mut out = BTreeMap::new();
        if x.degree() + y.degree() > self.dim {
            return out;
        }
        match (&self.kind, x, y) {
            (RingKind::Truncated { var }, Label::Power { exp: i, .. }, Label::Power { exp: j, .. }) => {
                out.insert(Label::Power { var: var.clone(), exp: i + j }, Rational::one());
            }
            (RingKind::Product(a, b), Label::Pair(x1, x2), Label::Pair(y1, y2)) => {
                let left = a.mul_labels(x1, y1);
                let right = b.mul_labels(x2, y2);
                for (l, cl) in &left {
                    for (r, cr) in &right {
                        add_term(&mut out, Label::Pair(Box::new(l.clone()), Box::new(r.clone())), cl * cr);
                    }
                }
            }
            (RingKind::ProjBundle { base, .. }, Label::Bundle(x1, e1), Label::Bundle(y1, e2)) => {
                let prod = GradedClass { ring: base.clone(), terms: base.mul_labels(x1, y1) };
                out = self.reduce_bundle(&prod, e1 + e2);
            }
            (RingKind::Grassmannian { k, n }, Label::Schubert(l), Label::Schubert(m)) => {
                for (p, c) in schubert::multiply_partitions(*k, *n, l, m) {
                    out.insert(Label::Schubert(p), c);
                }
            }
            _ => panic!("labels `{x}`, `{y}` do not belong to ring `{}`", self.name),
        }
        out
    }

    /// Normal form of `base_class * xi^e`, rewriting `xi^r` with
    /// `xi^r = sum_{i>=1} (-1)^{i+1} c_i(E) xi^{r-i}`.
    fn reduce_bundle(&self, base_class: &GradedClass, e: u32) -> BTreeMap<Label, Rational> {
        let RingKind::ProjBundle { rank, chern, .. } = &self.kind else {
            unreachable!("reduce_bundle on a non-bundle ring");
        };
        let mut out = BTreeMap::new();
        if base_class.is_zero() {
            return out;
        }
        if e < *rank {
            for (l, c) in &base_class.terms {
                add_term(&mut out, Label::Bundle(Box::new(l.clone()), e), c.clone());
            }
            return out;
        }
        for (i, ci) in chern.iter().enumerate() {
            let i = i as u32 + 1;
            let mut next = base_class * ci;
            if i.is_multiple_of(2) {
                next = -&next;
            }
            for (l, c) in self.reduce_bundle(&next, e - i) {
                add_term(&mut out, l, c);
            }
        }
        out
    }
}

fn add_term(map: &mut BTreeMap<Label, Rational>, label: Label, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(label) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `Q[var]/(var^{n+1})`, the Chow ring of `P^n`.
pub fn projective_space_ring_named(n: u32, var: &str) -> Ring {
    let name = if var == "h" { format!("P^{n}") } else { format!("P^{n}[{var}]") };
    RingModel::build(name, n, RingKind::Truncated { var: var.to_string() })
}

pub fn projective_space_ring(n: u32) -> Ring {
    projective_space_ring_named(n, "h")
}

pub fn product_ring(a: &Ring, b: &Ring) -> Ring {
    RingModel::build(
        format!("{}x{}", a.name, b.name),
        a.dim + b.dim,
        RingKind::Product(a.clone(), b.clone()),
    )
}

/// Chow ring of `P(E) = Proj Sym(E)` over `base`, where `chern[i-1] = c_i(E)`.
///
/// The tautological class `xi = c_1(O_P(1))` satisfies
/// `sum_{i=0}^{r} (-1)^i c_i(E) xi^{r-i} = 0`, so for `E = O + O(-1)` over
/// `P^k` the relation reads `xi^2 = -xi*h`.
pub fn projbundle_ring(base: &Ring, chern: &[GradedClass], rank: u32) -> Result<Ring> {
    if rank < 2 {
        return Err(Error::InvalidParameter(format!("bundle rank must be at least 2, got {rank}")));
    }
    if chern.len() > rank as usize {
        return Err(Error::InvalidParameter(format!(
            "{} Chern classes given for a rank-{rank} bundle",
            chern.len()
        )));
    }
    for (i, c) in chern.iter().enumerate() {
        if !same_ring(&c.ring, base) {
            return Err(Error::RingMismatch { left: c.ring.name.clone(), right: base.name.clone() });
        }
        let deg = i as u32 + 1;
        if !c.is_homogeneous(deg) {
            return Err(Error::DegreeMismatch { expected: deg, found: c.to_string() });
        }
    }
    let cs: Vec<String> = chern.iter().map(|c| format!("({c})")).collect();
    let name = format!("P_{{{}}}(r={rank};c={})", base.name, cs.join(","));
    Ok(RingModel::build(
        name,
        base.dim + rank - 1,
        RingKind::ProjBundle { base: base.clone(), rank, chern: chern.to_vec() },
    ))
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a.name == b.name
}

/// An element of a [`RingModel`]; zero coefficients are never stored.
#[derive(Clone)]
pub struct GradedClass {
    ring: Ring,
    terms: BTreeMap<Label, Rational>,
}

impl GradedClass {
    pub fn zero(ring: &Ring) -> Self {
        GradedClass { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(ring: &Ring, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ring.unit_label(), c);
        }
        GradedClass { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::scalar(ring, Rational::one())
    }

    pub fn from_label(ring: &Ring, label: Label) -> Result<Self> {
        if !ring.contains(&label) {
            return Err(Error::NotInBasis { label: label.to_string(), ring: ring.name.clone() });
        }
        let mut terms = BTreeMap::new();
        terms.insert(label, Rational::one());
        Ok(GradedClass { ring: ring.clone(), terms })
    }

    pub fn from_terms<I: IntoIterator<Item = (Label, Rational)>>(ring: &Ring, terms: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (l, c) in terms {
            if !ring.contains(&l) {
                return Err(Error::NotInBasis { label: l.to_string(), ring: ring.name.clone() });
            }
            add_term(&mut map, l, c);
        }
        Ok(GradedClass { ring: ring.clone(), terms: map })
    }

    /// The degree-1 generator of a truncated polynomial ring.
    pub fn generator(ring: &Ring) -> Result<Self> {
        match &ring.kind {
            RingKind::Truncated { var } if ring.dim >= 1 => {
                Self::from_label(ring, Label::Power { var: var.clone(), exp: 1 })
            }
            _ => Err(Error::InvalidParameter(format!("`{}` has no single generator", ring.name))),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, label: &Label) -> Rational {
        self.terms.get(label).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn homogeneous_part(&self, deg: u32) -> Self {
        let terms = self.terms.iter().filter(|(l, _)| l.degree() == deg).map(|(l, c)| (l.clone(), c.clone()));
        GradedClass { ring: self.ring.clone(), terms: terms.collect() }
    }

    /// Drops every term of degree above `deg`.
    pub fn truncate(&self, deg: u32) -> Self {
        let terms = self.terms.iter().filter(|(l, _)| l.degree() <= deg).map(|(l, c)| (l.clone(), c.clone()));
        GradedClass { ring: self.ring.clone(), terms: terms.collect() }
    }

    /// True when every term has degree `deg` (the zero class qualifies).
    pub fn is_homogeneous(&self, deg: u32) -> bool {
        self.terms.keys().all(|l| l.degree() == deg)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect();
        GradedClass { ring: self.ring.clone(), terms }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring.name.clone(), right: other.ring.name.clone() })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (l, c) in &other.terms {
            add_term(&mut terms, l.clone(), c.clone());
        }
        Ok(GradedClass { ring: self.ring.clone(), terms })
    }

    /// Graded product, truncated above the ring dimension.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut terms = BTreeMap::new();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let c = cx * cy;
                for (l, s) in self.ring.mul_labels(x, y) {
                    add_term(&mut terms, l, &c * s);
                }
            }
        }
        Ok(GradedClass { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of the point class.
    pub fn integrate(&self) -> Rational {
        self.coefficient(&self.ring.point_label())
    }

    /// Pullback along a product projection: `x` lives in the left factor.
    pub fn embed_left(product: &Ring, x: &GradedClass) -> Result<Self> {
        let RingKind::Product(a, b) = &product.kind else {
            return Err(Error::InvalidParameter(format!("`{}` is not a product ring", product.name)));
        };
        if !same_ring(a, &x.ring) {
            return Err(Error::RingMismatch { left: x.ring.name.clone(), right: a.name.clone() });
        }
        let u = b.unit_label();
        let terms = x.terms.iter().map(|(l, c)| (Label::Pair(Box::new(l.clone()), Box::new(u.clone())), c.clone()));
        Ok(GradedClass { ring: product.clone(), terms: terms.collect() })
    }

    pub fn embed_right(product: &Ring, y: &GradedClass) -> Result<Self> {
        let RingKind::Product(a, b) = &product.kind else {
            return Err(Error::InvalidParameter(format!("`{}` is not a product ring", product.name)));
        };
        if !same_ring(b, &y.ring) {
            return Err(Error::RingMismatch { left: y.ring.name.clone(), right: b.name.clone() });
        }
        let u = a.unit_label();
        let terms = y.terms.iter().map(|(l, c)| (Label::Pair(Box::new(u.clone()), Box::new(l.clone())), c.clone()));
        Ok(GradedClass { ring: product.clone(), terms: terms.collect() })
    }

    /// Pullback of a base class to a projective bundle.
    pub fn pullback_to_bundle(bundle: &Ring, x: &GradedClass) -> Result<Self> {
        let RingKind::ProjBundle { base, .. } = &bundle.kind else {
            return Err(Error::InvalidParameter(format!("`{}` is not a projective bundle", bundle.name)));
        };
        if !same_ring(base, &x.ring) {
            return Err(Error::RingMismatch { left: x.ring.name.clone(), right: base.name.clone() });
        }
        let terms = x.terms.iter().map(|(l, c)| (Label::Bundle(Box::new(l.clone()), 0), c.clone()));
        Ok(GradedClass { ring: bundle.clone(), terms: terms.collect() })
    }

    /// The tautological class `xi` of a projective bundle.
    pub fn tautological(bundle: &Ring) -> Result<Self> {
        let RingKind::ProjBundle { base, .. } = &bundle.kind else {
            return Err(Error::InvalidParameter(format!("`{}` is not a projective bundle", bundle.name)));
        };
        Self::from_label(bundle, Label::Bundle(Box::new(base.unit_label()), 1))
    }

    /// Fiber integration `p_*` from a projective bundle to its base.
    pub fn push_to_base(&self) -> Result<Self> {
        let RingKind::ProjBundle { base, rank, .. } = &self.ring.kind else {
            return Err(Error::InvalidParameter(format!("`{}` is not a projective bundle", self.ring.name)));
        };
        let mut terms = BTreeMap::new();
        for (l, c) in &self.terms {
            if let Label::Bundle(b, e) = l {
                if *e == rank - 1 {
                    add_term(&mut terms, (**b).clone(), c.clone());
                }
            }
        }
        Ok(GradedClass { ring: base.clone(), terms })
    }

    /// Lowest degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Label::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Label::degree).max()
    }
}

impl PartialEq for GradedClass {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.terms {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if l.is_unit() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "{}*{l}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ring.name, self)
    }
}

// Operator forms panic on ring mismatch; use `try_add` / `multiply` for the
// checked versions.

impl Add for &GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: &GradedClass) -> GradedClass {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: &GradedClass) -> GradedClass {
        self.try_add(&-rhs).expect("ring mismatch in subtraction")
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        let terms = self.terms.iter().map(|(l, c)| (l.clone(), -c.clone())).collect();
        GradedClass { ring: self.ring.clone(), terms }
    }
}

impl Mul for &GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        self.multiply(rhs).expect("ring mismatch in multiplication")
    }
}

impl Add for GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: GradedClass) -> GradedClass {
        &self + &rhs
    }
}

impl Sub for GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: GradedClass) -> GradedClass {
        &self - &rhs
    }
}

impl Mul for GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: GradedClass) -> GradedClass {
        &self * &rhs
    }
}

impl Neg for GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        -&self
    }
}
