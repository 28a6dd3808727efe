//! Chern characters of a polarized minimal family `(H_x, L_x)` of rational
//! curves through a general point `x` of a uniruled manifold `X`.
//!
//! For `k >= 1`,
//!
//! ```text
//! ch_k(H_x) = sum_{j=0}^{k} A_j l^j t_{k+1-j} - l^k / k!
//! ```
//!
//! where `l = c_1(L_x)`, `A_j` are the Todd coefficients and
//! `t_j = pi_* ev^* ch_j(X)` is the image of `ch_j(X)` under the operator
//! `T^j`. On powers of a divisor `A` with `deg f^*A = a` on the curves,
//! `T^k(A^k) = a^k l^{k-1}`; that is the only case computed here.
//!
//! The second half of the module is a symbolic model of the Chow ring of
//! the universal family `U_x = P(E_x)`, used to re-derive the formula from
//! Grothendieck-Riemann-Roch one degree at a time.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::bundles::CharacterVector;
use crate::checks::VerificationReport;
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, inv_factorial, power_sum, rat, todd_coeff, Rational};
use crate::rings::{projbundle_ring, projective_space_ring, projective_space_ring_named, GradedClass, Ring};

/// Formal target ring `Q[l]/(l^{N+1})` for classes on `H_x`.
pub fn hx_ring(truncation: u32) -> Ring {
    projective_space_ring_named(truncation, "l")
}

/// `T^k(A^k) = a^k l^{k-1}`.
pub fn t_power(a: &Rational, k: u32, ell: &GradedClass) -> Result<GradedClass> {
    if k < 1 {
        return Err(Error::InvalidParameter("T^k needs k >= 1".into()));
    }
    let mut ak = Rational::one();
    for _ in 0..k {
        ak *= a;
    }
    Ok(ell.pow(k - 1).scale(&ak))
}

/// `T^k` applied to a class `c * A^k` on `X`, where `a = deg f^*A`.
/// Anything not proportional to a power of `divisor` is rejected.
pub fn t_image(class: &GradedClass, divisor: &GradedClass, a: &Rational, ell: &GradedClass) -> Result<GradedClass> {
    let Some(k) = class.max_degree() else {
        return Ok(GradedClass::zero(ell.ring()));
    };
    if k < 1 || !class.is_homogeneous(k) {
        return Err(Error::NotDivisorPower { k });
    }
    let power = divisor.pow(k);
    let Some((label, c0)) = power.terms().next() else {
        return Err(Error::NotDivisorPower { k });
    };
    let factor = class.coefficient(label) / c0;
    if *class != power.scale(&factor) {
        return Err(Error::NotDivisorPower { k });
    }
    Ok(t_power(a, k, ell)?.scale(&factor))
}

/// The data the character formula needs: `d = dim H_x`, the polarization
/// `l` and the images `t_1, t_2, ...` (with `t_j` of degree `j - 1`).
#[derive(Clone, Debug)]
pub struct MinimalFamilyInput {
    d: i64,
    ell: GradedClass,
    images: Vec<GradedClass>,
}

impl MinimalFamilyInput {
    /// Requires `t_1 = d + 2`.
    pub fn new(d: i64, ell: GradedClass, images: Vec<GradedClass>) -> Result<Self> {
        if !ell.is_homogeneous(1) {
            return Err(Error::DegreeMismatch { expected: 1, found: ell.to_string() });
        }
        for (i, t) in images.iter().enumerate() {
            if !t.is_homogeneous(i as u32) {
                return Err(Error::DegreeMismatch { expected: i as u32, found: t.to_string() });
            }
        }
        if let Some(t1) = images.first() {
            if *t1 != GradedClass::scalar(ell.ring(), int(d + 2)) {
                return Err(Error::InvalidParameter(format!("t_1 = {t1} but d + 2 = {}", d + 2)));
            }
        }
        Ok(MinimalFamilyInput { d, ell, images })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn ell(&self) -> &GradedClass {
        &self.ell
    }

    pub fn image(&self, j: u32) -> Option<&GradedClass> {
        j.checked_sub(1).and_then(|i| self.images.get(i as usize))
    }
}

/// `ch_k(H_x)` from the `t_j`.
pub fn ch_hx(input: &MinimalFamilyInput, k: u32) -> Result<GradedClass> {
    if k < 1 {
        return Err(Error::InvalidParameter("ch_k(H_x) is computed for k >= 1".into()));
    }
    let ell = input.ell();
    let mut acc = GradedClass::zero(ell.ring());
    for j in 0..=k {
        let t = input.image(k + 1 - j).ok_or(Error::MissingImage(k + 1 - j))?;
        let a = todd_coeff(j);
        if !a.is_zero() {
            acc = &acc + &(&ell.pow(j) * t).scale(&a);
        }
    }
    Ok(&acc - &ell.pow(k).scale(&inv_factorial(k)))
}

fn validate_ci(n: u32, degrees: &[u32]) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter("ambient P^n needs n >= 1".into()));
    }
    if degrees.iter().any(|&d| d < 1) {
        return Err(Error::InvalidParameter(format!("degrees {degrees:?} must be positive")));
    }
    let total: u32 = degrees.iter().sum();
    if total > n || degrees.len() as u32 > n {
        return Err(Error::InvalidParameter(format!(
            "complete intersection of type {degrees:?} in P^{n} is not Fano"
        )));
    }
    Ok(())
}

/// `ch(T_X)` for a complete intersection of type `degrees` in `P^n`, as
/// `(n+1) e^h - 1 - sum_i e^{d_i h}` in the formal ring `Q[h]/(h^{N+1})`
/// with `N = max(n, truncation)`. Coefficients of `h^k` are those of the
/// restriction to `X`.
pub fn ci_tangent_character(n: u32, degrees: &[u32], truncation: u32) -> Result<CharacterVector> {
    validate_ci(n, degrees)?;
    let ring = projective_space_ring(n.max(truncation));
    let h = GradedClass::generator(&ring)?;
    let o1 = CharacterVector::line_bundle(&h, truncation)?;
    let mut ch = CharacterVector::trivial(&ring, int(-1), truncation);
    for _ in 0..=n {
        ch = ch.add(&o1)?;
    }
    for &d in degrees {
        let normal = CharacterVector::line_bundle(&h.scale(&int(d as i64)), truncation)?;
        ch = ch.sub(&normal)?;
    }
    Ok(ch)
}

/// `dim H_x = n - 1 - sum d_i` for lines through a general point.
pub fn ci_family_dimension(n: u32, degrees: &[u32]) -> i64 {
    n as i64 - 1 - degrees.iter().map(|&d| d as i64).sum::<i64>()
}

/// Family input for lines on a complete intersection: `t_j` computed as
/// `T^j(ch_j(X))` with `A = h`, `a = 1`.
pub fn ci_t_images(n: u32, degrees: &[u32], k_max: u32) -> Result<MinimalFamilyInput> {
    validate_ci(n, degrees)?;
    let d = ci_family_dimension(n, degrees);
    if d < 0 {
        return Err(Error::InvalidParameter(format!(
            "no lines through a general point of CI {degrees:?} in P^{n} (dim H_x = {d})"
        )));
    }
    let ch = ci_tangent_character(n, degrees, k_max + 1)?;
    let h = GradedClass::generator(ch.ring())?;
    let ell = GradedClass::generator(&hx_ring(k_max))?;
    let images = (1..=k_max + 1)
        .map(|j| t_image(&ch.component(j), &h, &Rational::one(), &ell))
        .collect::<Result<Vec<_>>>()?;
    MinimalFamilyInput::new(d, ell, images)
}

/// Direct value for lines: `H_x` is a complete intersection of type
/// `(1..d_1, ..., 1..d_c)` in `P^{n-1}` with `L_x = O(1)`, so
/// `ch_k(H_x) = (n - sum_i sum_{e<=d_i} e^k) l^k / k!`.
pub fn ci_character_direct(n: u32, degrees: &[u32], k: u32, ell: &GradedClass) -> Result<GradedClass> {
    validate_ci(n, degrees)?;
    if ci_family_dimension(n, degrees) < 0 {
        return Err(Error::InvalidParameter(format!("dim H_x < 0 for CI {degrees:?} in P^{n}")));
    }
    let mut coeff = int(n as i64);
    for &d in degrees {
        coeff -= power_sum(d, k);
    }
    Ok(ell.pow(k).scale(&(coeff * inv_factorial(k))))
}

/// Formula versus direct computation for `k = 1..=k_max`.
pub fn verify_ci_character_formula(n: u32, degrees: &[u32], k_max: u32) -> Result<VerificationReport> {
    let input = ci_t_images(n, degrees, k_max)?;
    let mut report = VerificationReport::new();
    for k in 1..=k_max {
        let formula = ch_hx(&input, k)?;
        let direct = ci_character_direct(n, degrees, k, input.ell())?;
        report.check("ch_k(H_x) formula = direct CI value", format!("n={n} degrees={degrees:?} k={k}"), &formula, &direct);
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Universal family model
// ---------------------------------------------------------------------------

/// Monomial in the formal symbols `e_j = ev^* ch_j(X)`, as sorted indices.
pub type EMonomial = Vec<u32>;

/// An element `p(l, e) + q(l) * sigma` of the model ring for `A(U_x)`.
///
/// Relations: `sigma * e_j = 0` and `sigma^2 = -sigma * l`. Everything of
/// degree above the truncation is dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelClass {
    truncation: u32,
    /// `(l exponent, e monomial) -> coefficient`.
    pullback: BTreeMap<(u32, EMonomial), Rational>,
    /// `l exponent -> coefficient` of `l^a * sigma`.
    sigma: BTreeMap<u32, Rational>,
}

fn bump<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn mono_degree(a: u32, m: &EMonomial) -> u32 {
    a + m.iter().sum::<u32>()
}

impl ModelClass {
    fn empty(truncation: u32) -> Self {
        ModelClass { truncation, pullback: BTreeMap::new(), sigma: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.pullback.is_empty() && self.sigma.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.pullback {
            bump(&mut out.pullback, k.clone(), c.clone());
        }
        for (k, c) in &other.sigma {
            bump(&mut out.sigma, *k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::empty(self.truncation);
        for (k, v) in &self.pullback {
            bump(&mut out.pullback, k.clone(), v * c);
        }
        for (k, v) in &self.sigma {
            bump(&mut out.sigma, *k, v * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = self.truncation.min(other.truncation);
        let mut out = Self::empty(t);
        for ((a1, m1), c1) in &self.pullback {
            for ((a2, m2), c2) in &other.pullback {
                let mut m: EMonomial = m1.iter().chain(m2.iter()).copied().collect();
                m.sort_unstable();
                let a = a1 + a2;
                if mono_degree(a, &m) <= t {
                    bump(&mut out.pullback, (a, m), c1 * c2);
                }
            }
        }
        // pullback * sigma: vanishes as soon as an e_j is present.
        let mut cross = |p: &BTreeMap<(u32, EMonomial), Rational>, s: &BTreeMap<u32, Rational>| {
            for ((a1, m1), c1) in p {
                if !m1.is_empty() {
                    continue;
                }
                for (a2, c2) in s {
                    let a = a1 + a2;
                    if a < t {
                        bump(&mut out.sigma, a, c1 * c2);
                    }
                }
            }
        };
        cross(&self.pullback, &other.sigma);
        cross(&other.pullback, &self.sigma);
        // l^a sigma * l^b sigma = -l^{a+b+1} sigma
        for (a1, c1) in &self.sigma {
            for (a2, c2) in &other.sigma {
                let a = a1 + a2 + 1;
                if a < t {
                    bump(&mut out.sigma, a, -(c1 * c2));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ModelRing::unit(self.truncation);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn homogeneous_part(&self, deg: u32) -> Self {
        let mut out = Self::empty(self.truncation);
        for ((a, m), c) in &self.pullback {
            if mono_degree(*a, m) == deg {
                out.pullback.insert((*a, m.clone()), c.clone());
            }
        }
        for (a, c) in &self.sigma {
            if a + 1 == deg {
                out.sigma.insert(*a, c.clone());
            }
        }
        out
    }

    /// `pi_*`: kills pure pullbacks from `H_x`, sends `q(l) sigma` to `q(l)`
    /// and `l^a e^m` to `l^a t[m]` (projection formula).
    pub fn push_pi(&self) -> HxClass {
        let mut out = HxClass::default();
        for ((a, m), c) in &self.pullback {
            if !m.is_empty() {
                bump(&mut out.terms, (*a, m.clone()), c.clone());
            }
        }
        for (a, c) in &self.sigma {
            bump(&mut out.terms, (*a, Vec::new()), c.clone());
        }
        out
    }
}

fn write_terms<K>(f: &mut fmt::Formatter<'_>, terms: &[(K, &Rational)], render: impl Fn(&K) -> String) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (k, c)) in terms.iter().enumerate() {
        let neg = **c < Rational::zero();
        let abs = if neg { -(*c).clone() } else { (*c).clone() };
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        let body = render(k);
        if body.is_empty() {
            write!(f, "{}", format_rational(&abs))?;
        } else if abs.is_one() {
            write!(f, "{body}")?;
        } else {
            write!(f, "{}*{body}", format_rational(&abs))?;
        }
    }
    Ok(())
}

fn l_power(a: u32) -> Option<String> {
    match a {
        0 => None,
        1 => Some("l".into()),
        a => Some(format!("l^{a}")),
    }
}

impl fmt::Display for ModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<((u32, EMonomial, bool), &Rational)> = Vec::new();
        for ((a, m), c) in &self.pullback {
            terms.push(((*a, m.clone(), false), c));
        }
        for (a, c) in &self.sigma {
            terms.push(((*a, Vec::new(), true), c));
        }
        terms.sort_by_key(|((a, m, s), _)| (mono_degree(*a, m) + *s as u32, *s, m.clone(), *a));
        write_terms(f, &terms, |(a, m, s)| {
            let mut parts: Vec<String> = l_power(*a).into_iter().collect();
            parts.extend(m.iter().map(|j| format!("e{j}")));
            if *s {
                parts.push("sigma".into());
            }
            parts.join("*")
        })
    }
}

/// A class on `H_x`: polynomial in `l` and the formal images
/// `t[m] = pi_*(e^m)`; `t[j]` is the usual `t_j`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HxClass {
    terms: BTreeMap<(u32, EMonomial), Rational>,
}

impl HxClass {
    /// `c * l^a * t[m]` (`m` empty means no symbol).
    pub fn term(a: u32, m: EMonomial, c: Rational) -> Self {
        let mut out = HxClass::default();
        bump(&mut out.terms, (a, m), c);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            bump(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn coefficient(&self, a: u32, m: &EMonomial) -> Rational {
        self.terms.get(&(a, m.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Replace `t[1]` by the scalar `value`.
    pub fn substitute_t1(&self, value: &Rational) -> Self {
        let mut out = HxClass::default();
        for ((a, m), c) in &self.terms {
            if m.as_slice() == [1] {
                bump(&mut out.terms, (*a, Vec::new()), c * value);
            } else {
                bump(&mut out.terms, (*a, m.clone()), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for HxClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(&(u32, EMonomial), &Rational)> = self.terms.iter().collect();
        write_terms(f, &terms, |(a, m)| {
            let mut parts: Vec<String> = l_power(*a).into_iter().collect();
            if !m.is_empty() {
                let idx: Vec<String> = m.iter().map(u32::to_string).collect();
                parts.push(format!("t{}", idx.join(".")));
            }
            parts.join("*")
        })
    }
}

/// Parameters of the universal-family model: `n = dim X`, `d = dim H_x`,
/// and the truncation degree `k_max + 1`.
#[derive(Clone, Copy, Debug)]
pub struct ModelRing {
    n: i64,
    d: i64,
    truncation: u32,
}

impl ModelRing {
    pub fn new(n: i64, d: i64, k_max: u32) -> Result<Self> {
        if n < 1 || d < 0 || d > n - 1 {
            return Err(Error::InvalidParameter(format!("model ring needs 0 <= d <= n-1, got n={n} d={d}")));
        }
        Ok(ModelRing { n, d, truncation: k_max + 1 })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    fn unit(truncation: u32) -> ModelClass {
        let mut out = ModelClass::empty(truncation);
        out.pullback.insert((0, Vec::new()), Rational::one());
        out
    }

    pub fn scalar(&self, c: Rational) -> ModelClass {
        Self::unit(self.truncation).scale(&c)
    }

    pub fn zero(&self) -> ModelClass {
        ModelClass::empty(self.truncation)
    }

    /// `pi^* c_1(L_x)`.
    pub fn ell(&self) -> ModelClass {
        let mut out = ModelClass::empty(self.truncation);
        if self.truncation >= 1 {
            out.pullback.insert((1, Vec::new()), Rational::one());
        }
        out
    }

    /// The section class `sigma_x`.
    pub fn sigma(&self) -> ModelClass {
        let mut out = ModelClass::empty(self.truncation);
        if self.truncation >= 1 {
            out.sigma.insert(0, Rational::one());
        }
        out
    }

    /// `e_j = ev^* ch_j(X)`.
    pub fn e(&self, j: u32) -> ModelClass {
        let mut out = ModelClass::empty(self.truncation);
        if j >= 1 && j <= self.truncation {
            out.pullback.insert((0, vec![j]), Rational::one());
        }
        out
    }

    /// `c_1(T_pi) = 2 sigma + l`.
    pub fn c1_relative_tangent(&self) -> ModelClass {
        self.sigma().scale(&int(2)).add(&self.ell())
    }

    /// `sum_j x^j / j!` up to the truncation.
    pub fn exp(&self, x: &ModelClass) -> ModelClass {
        let mut acc = self.scalar(Rational::one());
        let mut power = self.scalar(Rational::one());
        for j in 1..=self.truncation {
            power = power.mul(x);
            acc = acc.add(&power.scale(&inv_factorial(j)));
        }
        acc
    }

    /// `td(T_pi) = sum_j A_j c_1(T_pi)^j`.
    pub fn todd_relative(&self) -> ModelClass {
        let c1 = self.c1_relative_tangent();
        let mut acc = self.scalar(Rational::one());
        let mut power = self.scalar(Rational::one());
        for j in 1..=self.truncation {
            power = power.mul(&c1);
            acc = acc.add(&power.scale(&todd_coeff(j)));
        }
        acc
    }

    /// `ev^* ch(T_X) = n + e_1 + e_2 + ...`, optionally with `e_1` replaced
    /// by `(d+2)(sigma + l)`.
    pub fn pulled_back_tangent(&self, substitute_e1: bool) -> ModelClass {
        let mut acc = self.scalar(int(self.n));
        for j in 1..=self.truncation {
            let term = if j == 1 && substitute_e1 {
                self.sigma().add(&self.ell()).scale(&int(self.d + 2))
            } else {
                self.e(j)
            };
            acc = acc.add(&term);
        }
        acc
    }

    /// `(ev^* ch(T_X) - ch(T_pi)) * ch(O(-sigma))`; its degree-`k` part is `Z_k`.
    pub fn z_total(&self, substitute_e1: bool) -> ModelClass {
        let ch_tpi = self.exp(&self.c1_relative_tangent());
        let ch_minus_sigma = self.exp(&self.sigma().scale(&int(-1)));
        self.pulled_back_tangent(substitute_e1).sub(&ch_tpi).mul(&ch_minus_sigma)
    }

    /// `W = Z * td(T_pi)`; `ch_k(H_x) = pi_* W_{k+1}`.
    pub fn w_total(&self, substitute_e1: bool) -> ModelClass {
        self.z_total(substitute_e1).mul(&self.todd_relative())
    }
}

/// `sum_{j=1}^{k+1} A_{k+1-j} / j! == 1/k!`.
pub fn todd_sum_identity(k: u32) -> (Rational, Rational) {
    let lhs = (1..=k + 1).fold(Rational::zero(), |acc, j| acc + todd_coeff(k + 1 - j) * inv_factorial(j));
    (lhs, inv_factorial(k))
}

pub fn verify_todd_identity(k_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new();
    for k in 1..=k_max {
        let (lhs, rhs) = todd_sum_identity(k);
        report.check("sum_j A_{k+1-j}/j! = 1/k!", format!("k={k}"), &lhs, &rhs);
    }
    report
}

/// Checks the closed forms of `Z_k`, `Z_k sigma` and their pushforwards,
/// together with the reduction rules for powers of `sigma` and `c_1(T_pi)`,
/// in the model ring at the sample point `(n, d)`.
pub fn verify_universal_family_identities(n: i64, d: i64, k_max: u32) -> Result<VerificationReport> {
    let ring = ModelRing::new(n, d, k_max)?;
    let trunc = ring.truncation();
    let at = |k: u32| format!("n={n} d={d} k={k}");
    let mut report = VerificationReport::new();
    let ell = ring.ell();
    let sigma = ring.sigma();
    let c1 = ring.c1_relative_tangent();
    let z = ring.z_total(false);
    let np1 = int(n + 1);

    report.check("Z_0 = n - 1", at(0), &z.homogeneous_part(0), &ring.scalar(int(n - 1)));

    for k in 1..=trunc {
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let zk = z.homogeneous_part(k);
        let zk_expected = ring
            .e(k)
            .add(&sigma.pow(k).scale(&(&np1 * &sign * inv_factorial(k))))
            .sub(&ell.pow(k).scale(&inv_factorial(k)));
        report.check("Z_k = e_k + (n+1)(-1)^k/k! sigma^k - l^k/k!", at(k), &zk, &zk_expected);

        let zk_sigma = zk.mul(&sigma);
        if k < trunc {
            let expected = sigma
                .pow(k + 1)
                .scale(&(&np1 * &sign * inv_factorial(k)))
                .sub(&sigma.mul(&ell.pow(k)).scale(&inv_factorial(k)));
            report.check("Z_k*sigma = (n+1)(-1)^k/k! sigma^{k+1} - sigma*l^k/k!", at(k), &zk_sigma, &expected);
            let pushed = zk_sigma.push_pi();
            let expected = HxClass::term(k, Vec::new(), int(n) * inv_factorial(k));
            report.check("pi_*(Z_k*sigma) = n/k! l^k", at(k), &pushed, &expected);
        }

        let pushed = zk.push_pi();
        let expected = HxClass::term(0, vec![k], int(1)).add(&HxClass::term(k - 1, Vec::new(), -(&np1 * inv_factorial(k))));
        report.check("pi_*Z_k = t_k - (n+1)/k! l^{k-1}", at(k), &pushed, &expected);

        report.check(
            "pi_*sigma^k = (-1)^{k-1} l^{k-1}",
            at(k),
            &sigma.pow(k).push_pi(),
            &HxClass::term(k - 1, Vec::new(), -sign.clone()),
        );
        report.check("pi_*pi^*l^k = 0", at(k), &ell.pow(k).push_pi(), &HxClass::default());

        let parity = if k % 2 == 0 { ell.pow(k) } else { sigma.pow(k).scale(&int(2)).add(&ell.pow(k)) };
        report.check("c1(T_pi)^k by parity", at(k), &c1.pow(k), &parity);

        for i in 0..k {
            let j = k - i;
            let lhs = ell.pow(i).mul(&sigma.pow(j));
            let rhs = sigma.pow(k).scale(&if i % 2 == 0 { int(1) } else { int(-1) });
            report.check("l^i*sigma^j = (-1)^i sigma^{i+j}", format!("n={n} d={d} i={i} j={j}"), &lhs, &rhs);
            report.check(
                "c1(T_pi)^i*sigma^j = sigma^{i+j}",
                format!("n={n} d={d} i={i} j={j}"),
                &c1.pow(i).mul(&sigma.pow(j)),
                &sigma.pow(k),
            );
        }
        report.check(
            "sigma^k = (-l)^{k-1} sigma",
            at(k),
            &sigma.pow(k),
            &ell.pow(k - 1).mul(&sigma).scale(&if k % 2 == 1 { int(1) } else { int(-1) }),
        );
    }

    // The substituted ev^*c_1(X) must also be killed by sigma.
    let ev_c1 = sigma.add(&ell).scale(&int(d + 2));
    report.check("sigma * (d+2)(sigma + l) = 0", at(1), &sigma.mul(&ev_c1), &ring.zero());

    report.extend(verify_bundle_model(k_max)?);
    Ok(report)
}

/// Cross-checks the model relations against the projective bundle
/// `U = P(E)` with `0 -> O -> E -> L^{-1} -> 0`, built with the generic
/// Grothendieck relation over the formal base `Q[l]/(l^{K+1})`.
fn verify_bundle_model(k_max: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let base = hx_ring(k_max + 1);
    let ell = GradedClass::generator(&base)?;
    let c1_e = -&ell;
    let bundle = projbundle_ring(&base, std::slice::from_ref(&c1_e), 2)?;
    let xi = GradedClass::tautological(&bundle)?;
    let ell_up = GradedClass::pullback_to_bundle(&bundle, &ell)?;
    let at = format!("k_max={k_max}");
    report.check("xi^2 = -xi*l in P(E)", at.clone(), &(&xi * &xi), &-&(&xi * &ell_up));
    // Relative Euler sequence: c_1(T_pi) = 2 xi - pi^* c_1(E).
    let c1_tpi = &xi.scale(&int(2)) - &GradedClass::pullback_to_bundle(&bundle, &c1_e)?;
    report.check("c1(T_pi) = 2 sigma + l", at.clone(), &c1_tpi, &(&xi.scale(&int(2)) + &ell_up));
    for k in 1..=k_max + 1 {
        let pushed = xi.pow(k).push_to_base()?;
        let expected = if k == 0 { GradedClass::zero(&base) } else { ell.pow(k - 1).scale(&if k % 2 == 1 { int(1) } else { int(-1) }) };
        report.check("p_*xi^k = (-1)^{k-1} l^{k-1} in P(E)", format!("k={k}"), &pushed, &expected);
    }
    Ok(report)
}

/// Re-derives the character formula from `pi_* W_{k+1}` in the model ring
/// for `k = 1..=k_max`, and its specializations once `e_1` is replaced by
/// `(d+2)(sigma + l)`.
pub fn verify_character_formula_symbolic(n: i64, d: i64, k_max: u32) -> Result<VerificationReport> {
    let ring = ModelRing::new(n, d, k_max)?;
    let mut report = VerificationReport::new();
    let w = ring.w_total(false);
    let w_sub = ring.w_total(true);
    let dd = int(d);
    for k in 1..=k_max {
        let at = format!("n={n} d={d} k={k}");
        let pushed = w.homogeneous_part(k + 1).push_pi();
        let mut formula = HxClass::term(k, Vec::new(), -inv_factorial(k));
        for j in 0..=k {
            formula = formula.add(&HxClass::term(j, vec![k + 1 - j], todd_coeff(j)));
        }
        report.check("pi_*W_{k+1} = sum_j A_j l^j t_{k+1-j} - l^k/k!", at.clone(), &pushed, &formula);
        let standalone = pushed.substitute_t1(&Rational::zero()).coefficient(k, &Vec::new());
        report.check("standalone l^k coefficient = -1/k!", at.clone(), &standalone, &-inv_factorial(k));

        let pushed_sub = w_sub.homogeneous_part(k + 1).push_pi();
        let formula_sub = formula.substitute_t1(&int(d + 2));
        report.check("substituted pi_*W_{k+1} = formula with t_1 = d+2", at.clone(), &pushed_sub, &formula_sub);
        if k == 1 {
            let expected = HxClass::term(0, vec![2], int(1)).add(&HxClass::term(1, Vec::new(), &dd * rat(1, 2)));
            report.check("c_1(H_x) = t_2 + d/2 l", at.clone(), &pushed_sub, &expected);
        }
        if k == 2 {
            let expected = HxClass::term(0, vec![3], int(1))
                .add(&HxClass::term(1, vec![2], rat(1, 2)))
                .add(&HxClass::term(2, Vec::new(), (&dd - int(4)) * rat(1, 12)));
            report.check("ch_2(H_x) = t_3 + 1/2 l t_2 + (d-4)/12 l^2", at.clone(), &pushed_sub, &expected);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ell(k: u32) -> GradedClass {
        GradedClass::generator(&hx_ring(k)).unwrap()
    }

    #[test]
    fn t_power_examples() {
        let l = ell(4);
        assert_eq!(t_power(&int(1), 1, &l).unwrap(), GradedClass::one(l.ring()));
        assert_eq!(t_power(&int(2), 3, &l).unwrap(), l.pow(2).scale(&int(8)));
        assert!(t_power(&int(0), 3, &l).unwrap().is_zero());
        assert!(t_power(&int(1), 0, &l).is_err());
    }

    #[test]
    fn t_image_rejects_non_powers() {
        let g = crate::schubert::grassmannian_ring(2, 4).unwrap();
        let s1 = crate::schubert::sigma(&g, &[1]).unwrap();
        let s2 = crate::schubert::sigma(&g, &[2]).unwrap();
        let l = ell(3);
        assert_eq!(t_image(&s1.pow(2).scale(&int(3)), &s1, &int(1), &l).unwrap(), l.scale(&int(3)));
        assert!(matches!(t_image(&s2, &s1, &int(1), &l), Err(Error::NotDivisorPower { k: 2 })));
    }

    #[test]
    fn cubic_in_p9() {
        let input = ci_t_images(9, &[3], 3).unwrap();
        let l = input.ell().clone();
        assert_eq!(input.d(), 5);
        assert_eq!(*input.image(2).unwrap(), l.scale(&rat(1, 2)));
        let c1 = ch_hx(&input, 1).unwrap();
        assert_eq!(c1, l.scale(&int(3)));
        assert_eq!(ci_character_direct(9, &[3], 1, &l).unwrap(), l.scale(&int(3)));
    }

    #[test]
    fn projective_space_images() {
        let input = ci_t_images(5, &[], 2).unwrap();
        assert_eq!(*input.image(2).unwrap(), input.ell().scale(&int(3)));
        let quadric = ci_t_images(4, &[2], 2).unwrap();
        assert_eq!(quadric.d(), 1);
        assert_eq!(*quadric.image(1).unwrap(), GradedClass::scalar(quadric.ell().ring(), int(3)));
    }

    #[test]
    fn direct_ci_values() {
        let l = ell(3);
        assert_eq!(ci_character_direct(7, &[2, 2], 2, &l).unwrap(), l.pow(2).scale(&rat(-3, 2)));
        assert!(ci_character_direct(5, &[3, 3], 1, &l).is_err());
        assert!(ci_t_images(4, &[2, 2], 2).is_err());
    }

    #[test]
    fn formula_matches_direct_ci() {
        assert!(verify_ci_character_formula(9, &[3], 4).unwrap().all_hold());
        assert!(verify_ci_character_formula(10, &[2, 3], 4).unwrap().all_hold());
        for n in 1..=10 {
            assert!(verify_ci_character_formula(n, &[], n).unwrap().all_hold());
        }
    }

    #[test]
    fn missing_images_are_reported() {
        let input = ci_t_images(9, &[3], 2).unwrap();
        assert!(matches!(ch_hx(&input, 3), Err(Error::MissingImage(4))));
    }

    #[test]
    fn input_requires_t1_equal_d_plus_2() {
        let l = ell(2);
        let bad = MinimalFamilyInput::new(3, l.clone(), vec![GradedClass::scalar(l.ring(), int(4))]);
        assert!(bad.is_err());
    }

    #[test]
    fn pushforward_examples() {
        let r = ModelRing::new(5, 2, 3).unwrap();
        assert_eq!(r.sigma().push_pi(), HxClass::term(0, Vec::new(), int(1)));
        assert_eq!(r.sigma().pow(3).push_pi(), HxClass::term(2, Vec::new(), int(1)));
        assert_eq!(r.ell().pow(2).push_pi(), HxClass::default());
        assert!(r.sigma().mul(&r.e(1)).is_zero());
    }

    #[test]
    fn z0_and_sigma_pushforward() {
        let r = ModelRing::new(5, 2, 4).unwrap();
        let z = r.z_total(false);
        assert_eq!(z.homogeneous_part(0), r.scalar(int(4)));
        let z3s = z.homogeneous_part(3).mul(&r.sigma()).push_pi();
        assert_eq!(z3s, HxClass::term(3, Vec::new(), rat(5, 6)));
    }

    #[test]
    fn identity_suites_hold() {
        assert!(verify_universal_family_identities(5, 2, 4).unwrap().all_hold());
        let r = verify_character_formula_symbolic(6, 3, 3).unwrap();
        for c in r.failures() {
            eprintln!("{c:?}");
        }
        assert!(r.all_hold());
        assert!(verify_todd_identity(20).all_hold());
    }

    #[test]
    fn display_forms() {
        let r = ModelRing::new(4, 1, 2).unwrap();
        let x = r.ell().mul(&r.e(1)).add(&r.sigma().scale(&rat(1, 2)));
        assert_eq!(x.to_string(), "1/2*sigma + l*e1");
        let h = HxClass::term(1, vec![2], rat(1, 2)).add(&HxClass::term(2, Vec::new(), int(-1)));
        assert_eq!(h.to_string(), "1/2*l*t2 - l^2");
    }
}
