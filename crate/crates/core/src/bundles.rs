//! Chern classes and Chern characters of (virtual) vector bundles.
//!
//! A [`CharacterVector`] stores `ch_0` (the rank, possibly a virtual
//! rational rank) and the homogeneous components `ch_1..ch_N` in a shared
//! ring. Plethysms (`Sym^2`, `Lambda^2`) go through Adams operations, so no
//! Chern roots are ever introduced.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{inv_factorial, int, pow_int, todd_coeff, Rational};
use crate::rings::{same_ring, GradedClass, Ring};

#[derive(Clone, Debug)]
pub struct CharacterVector {
    ring: Ring,
    rank: Rational,
    /// `components[k-1] = ch_k`.
    components: Vec<GradedClass>,
}

impl PartialEq for CharacterVector {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.rank == other.rank && self.components == other.components
    }
}

fn check_homogeneous(classes: &[GradedClass], ring: &Ring) -> Result<()> {
    for (i, c) in classes.iter().enumerate() {
        if !same_ring(c.ring(), ring) {
            return Err(Error::RingMismatch { left: c.ring().name().to_string(), right: ring.name().to_string() });
        }
        let deg = i as u32 + 1;
        if !c.is_homogeneous(deg) {
            return Err(Error::DegreeMismatch { expected: deg, found: c.to_string() });
        }
    }
    Ok(())
}

impl CharacterVector {
    /// `components[k-1]` must be homogeneous of degree `k`.
    pub fn new(ring: &Ring, rank: Rational, components: Vec<GradedClass>) -> Result<Self> {
        check_homogeneous(&components, ring)?;
        Ok(CharacterVector { ring: ring.clone(), rank, components })
    }

    /// Character of a trivial bundle of the given (virtual) rank.
    pub fn trivial(ring: &Ring, rank: Rational, truncation: u32) -> Self {
        let components = (0..truncation).map(|_| GradedClass::zero(ring)).collect();
        CharacterVector { ring: ring.clone(), rank, components }
    }

    /// `exp(D)` for a divisor class `D`.
    pub fn line_bundle(divisor: &GradedClass, truncation: u32) -> Result<Self> {
        if !divisor.is_homogeneous(1) {
            return Err(Error::DegreeMismatch { expected: 1, found: divisor.to_string() });
        }
        let mut components = Vec::with_capacity(truncation as usize);
        let mut power = GradedClass::one(divisor.ring());
        for k in 1..=truncation {
            power = &power * divisor;
            components.push(power.scale(&inv_factorial(k)));
        }
        Ok(CharacterVector { ring: divisor.ring().clone(), rank: Rational::one(), components })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> &Rational {
        &self.rank
    }

    /// Highest stored degree `N`.
    pub fn truncation(&self) -> u32 {
        self.components.len() as u32
    }

    /// `ch_k`; `ch_0` is the rank times the unit class. Zero past the truncation.
    pub fn component(&self, k: u32) -> GradedClass {
        if k == 0 {
            return GradedClass::scalar(&self.ring, self.rank.clone());
        }
        self.components.get(k as usize - 1).cloned().unwrap_or_else(|| GradedClass::zero(&self.ring))
    }

    pub fn total(&self) -> GradedClass {
        self.components.iter().fold(self.component(0), |acc, c| &acc + c)
    }

    fn compatible(&self, other: &Self) -> Result<u32> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch {
                left: self.ring.name().to_string(),
                right: other.ring.name().to_string(),
            });
        }
        Ok(self.truncation().min(other.truncation()))
    }

    /// Whitney sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.compatible(other)?;
        let components = (1..=n).map(|k| &self.component(k) + &other.component(k)).collect();
        Ok(CharacterVector { ring: self.ring.clone(), rank: &self.rank + &other.rank, components })
    }

    /// Virtual difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        let n = self.compatible(other)?;
        let components = (1..=n).map(|k| &self.component(k) - &other.component(k)).collect();
        Ok(CharacterVector { ring: self.ring.clone(), rank: &self.rank - &other.rank, components })
    }

    /// Tensor product: `ch` is multiplicative.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let n = self.compatible(other)?;
        let components = (1..=n)
            .map(|k| {
                (0..=k).fold(GradedClass::zero(&self.ring), |acc, i| {
                    &acc + &(&self.component(i) * &other.component(k - i))
                })
            })
            .collect();
        Ok(CharacterVector { ring: self.ring.clone(), rank: &self.rank * &other.rank, components })
    }

    /// `psi^t`: scales `ch_k` by `t^k`.
    pub fn adams(&self, t: i64) -> Self {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&pow_int(t, i as u32 + 1)))
            .collect();
        CharacterVector { ring: self.ring.clone(), rank: self.rank.clone(), components }
    }

    /// `ch(E^dual)`: negates odd components.
    pub fn dual(&self) -> Self {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
            .collect();
        CharacterVector { ring: self.ring.clone(), rank: self.rank.clone(), components }
    }

    /// `ch(E (x) O(D))`.
    pub fn tensor_line(&self, divisor: &GradedClass) -> Result<Self> {
        self.multiply(&Self::line_bundle(divisor, self.truncation())?)
    }

    fn actual_rank(&self) -> Result<()> {
        if !self.rank.is_integer() || self.rank.is_negative() {
            return Err(Error::InvalidParameter(format!(
                "Sym^2 / Lambda^2 need a bundle of non-negative integral rank, got {}",
                self.rank
            )));
        }
        Ok(())
    }

    /// `(x^2 + psi^2 x) / 2`.
    pub fn sym2(&self) -> Result<Self> {
        self.actual_rank()?;
        let sq = self.multiply(self)?;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let sum = sq.add(&self.adams(2))?;
        Ok(sum.scale(&half))
    }

    /// `(x^2 - psi^2 x) / 2`.
    pub fn wedge2(&self) -> Result<Self> {
        self.actual_rank()?;
        let sq = self.multiply(self)?;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let diff = sq.sub(&self.adams(2))?;
        Ok(diff.scale(&half))
    }

    fn scale(&self, c: &Rational) -> Self {
        CharacterVector {
            ring: self.ring.clone(),
            rank: &self.rank * c,
            components: self.components.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Inverse Newton recursion: total Chern class components `c_1..c_N`.
    ///
    /// `k c_k = sum_{i=1}^{k} (-1)^{i-1} c_{k-i} p_i` with `p_i = i! ch_i`.
    pub fn to_chern(&self) -> Vec<GradedClass> {
        let n = self.truncation();
        let power_sums: Vec<GradedClass> = (1..=n)
            .map(|i| self.component(i).scale(&Rational::from_integer(crate::numeric::factorial(i))))
            .collect();
        let mut chern: Vec<GradedClass> = vec![GradedClass::one(&self.ring)];
        for k in 1..=n {
            let mut acc = GradedClass::zero(&self.ring);
            for i in 1..=k {
                let term = &chern[(k - i) as usize] * &power_sums[(i - 1) as usize];
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            chern.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
        }
        chern.remove(0);
        chern
    }
}

/// Chern character from Chern classes `c_1..c_r` through Newton's identities
/// `p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k`,
/// `ch_k = p_k / k!`, computed up to degree `truncation`.
pub fn chern_to_character(chern: &[GradedClass], rank: Rational, ring: &Ring, truncation: u32) -> Result<CharacterVector> {
    check_homogeneous(chern, ring)?;
    let c = |i: u32| -> GradedClass {
        chern.get(i as usize - 1).cloned().unwrap_or_else(|| GradedClass::zero(ring))
    };
    let mut p: Vec<GradedClass> = Vec::with_capacity(truncation as usize);
    for k in 1..=truncation {
        let mut acc = c(k).scale(&int(k as i64));
        if k % 2 == 0 {
            acc = -&acc;
        }
        for i in 1..k {
            let term = &c(i) * &p[(k - i - 1) as usize];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        p.push(acc);
    }
    let components = p.iter().enumerate().map(|(i, pk)| pk.scale(&inv_factorial(i as u32 + 1))).collect();
    CharacterVector::new(ring, rank, components)
}

/// Todd class of a line bundle with first Chern class `D`:
/// `sum_{j=0}^{N} A_j D^j`.
pub fn todd_line(divisor: &GradedClass, truncation: u32) -> Result<GradedClass> {
    if !divisor.is_homogeneous(1) {
        return Err(Error::DegreeMismatch { expected: 1, found: divisor.to_string() });
    }
    let mut acc = GradedClass::one(divisor.ring());
    let mut power = GradedClass::one(divisor.ring());
    for j in 1..=truncation {
        power = &power * divisor;
        let a = todd_coeff(j);
        if !a.is_zero() {
            acc = &acc + &power.scale(&a);
        }
    }
    Ok(acc)
}

/// Total Chern class `1 + c_1 + ... + c_r` as a single class.
pub fn total_chern(chern: &[GradedClass], ring: &Ring) -> GradedClass {
    chern.iter().fold(GradedClass::one(ring), |acc, c| &acc + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::rings::projective_space_ring;
    use crate::schubert::{grassmannian_ring, sigma, tautological_chern, Tautological};

    fn h(ring: &Ring) -> GradedClass {
        GradedClass::generator(ring).unwrap()
    }

    #[test]
    fn line_bundle_character() {
        let p3 = projective_space_ring(3);
        let x = h(&p3);
        let ch = chern_to_character(std::slice::from_ref(&x), int(1), &p3, 3).unwrap();
        assert_eq!(ch.component(1), x);
        assert_eq!(ch.component(2), x.pow(2).scale(&rat(1, 2)));
        assert_eq!(ch.component(3), x.pow(3).scale(&rat(1, 6)));
        assert_eq!(ch, CharacterVector::line_bundle(&x, 3).unwrap());
    }

    #[test]
    fn tangent_of_projective_space() {
        for n in 1..=8u32 {
            let p = projective_space_ring(n);
            let x = h(&p);
            let total = (&GradedClass::one(&p) + &x).pow(n + 1);
            let chern: Vec<_> = (1..=n).map(|i| total.homogeneous_part(i)).collect();
            let ch = chern_to_character(&chern, int(n as i64), &p, n).unwrap();
            for k in 1..=n {
                assert_eq!(ch.component(k), x.pow(k).scale(&(int(n as i64 + 1) * inv_factorial(k))));
            }
        }
    }

    #[test]
    fn quotient_bundle_on_g24() {
        let g = grassmannian_ring(2, 4).unwrap();
        let q = tautological_chern(&g, Tautological::Quotient).unwrap();
        let ch = chern_to_character(&q, int(2), &g, 2).unwrap();
        assert_eq!(ch.component(1), sigma(&g, &[1]).unwrap());
        let expected = (&sigma(&g, &[1, 1]).unwrap() - &sigma(&g, &[2]).unwrap()).scale(&rat(1, 2));
        assert_eq!(ch.component(2), expected);
    }

    #[test]
    fn adams_operations() {
        let p3 = projective_space_ring(3);
        let x = h(&p3);
        let e = CharacterVector::line_bundle(&x, 3).unwrap();
        assert_eq!(e.adams(1), e);
        assert_eq!(e.adams(2), CharacterVector::line_bundle(&x.scale(&int(2)), 3).unwrap());
        // psi^{-1} against the dual computed from c_i(E^dual) = (-1)^i c_i(E).
        let total = &(&GradedClass::one(&p3) + &x.scale(&int(2))) * &(&GradedClass::one(&p3) + &x.pow(2));
        let chern: Vec<_> = (1..=3).map(|i| total.homogeneous_part(i)).collect();
        let dual_chern: Vec<_> = chern.iter().enumerate().map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() }).collect();
        let ch = chern_to_character(&chern, int(2), &p3, 3).unwrap();
        let ch_dual = chern_to_character(&dual_chern, int(2), &p3, 3).unwrap();
        assert_eq!(ch.adams(-1), ch_dual);
        assert_eq!(ch.dual(), ch_dual);
        assert_eq!(ch.dual().dual(), ch);
    }

    #[test]
    fn sym2_and_wedge2() {
        let p3 = projective_space_ring(3);
        let x = h(&p3);
        let e = CharacterVector::line_bundle(&x, 3).unwrap();
        assert_eq!(e.sym2().unwrap(), CharacterVector::line_bundle(&x.scale(&int(2)), 3).unwrap());
        assert_eq!(e.wedge2().unwrap(), CharacterVector::trivial(&p3, int(0), 3));
        let two = CharacterVector::trivial(&p3, int(2), 3);
        assert_eq!(*two.sym2().unwrap().rank(), int(3));
        assert_eq!(*two.wedge2().unwrap().rank(), int(1));
        let virt = CharacterVector::trivial(&p3, rat(1, 2), 3);
        assert!(virt.sym2().is_err());
    }

    #[test]
    fn wedge2_of_sub_dual_is_determinant() {
        let g = grassmannian_ring(2, 5).unwrap();
        let s = tautological_chern(&g, Tautological::SubDual).unwrap();
        let ch = chern_to_character(&s, int(2), &g, 3).unwrap();
        let w = ch.wedge2().unwrap();
        assert_eq!(*w.rank(), int(1));
        assert_eq!(w.component(1), sigma(&g, &[1]).unwrap());
        assert_eq!(w, CharacterVector::line_bundle(&sigma(&g, &[1]).unwrap(), 3).unwrap());
    }

    #[test]
    fn tangent_of_g24() {
        let g = grassmannian_ring(2, 4).unwrap();
        let s = chern_to_character(&tautological_chern(&g, Tautological::SubDual).unwrap(), int(2), &g, 2).unwrap();
        let q = chern_to_character(&tautological_chern(&g, Tautological::Quotient).unwrap(), int(2), &g, 2).unwrap();
        let t = s.multiply(&q).unwrap();
        assert_eq!(t.component(1), sigma(&g, &[1]).unwrap().scale(&int(4)));
        let zero = CharacterVector::trivial(&g, int(0), 2);
        assert_eq!(t.multiply(&zero).unwrap(), zero);
    }

    #[test]
    fn todd_of_a_line_bundle() {
        let p = projective_space_ring(4);
        let x = h(&p);
        let td = todd_line(&x, 4).unwrap();
        assert_eq!(td.coefficient(&x.pow(2).terms().next().unwrap().0.clone()), rat(1, 12));
        assert_eq!(td.homogeneous_part(3), GradedClass::zero(&p));
        assert_eq!(td.homogeneous_part(4), x.pow(4).scale(&rat(-1, 720)));
        assert_eq!(todd_line(&GradedClass::zero(&p), 4).unwrap(), GradedClass::one(&p));
    }

    #[test]
    fn tensor_line_matches_chern_of_twist() {
        let p = projective_space_ring(3);
        let x = h(&p);
        let o1 = CharacterVector::line_bundle(&x, 3).unwrap();
        let twisted = o1.tensor_line(&x.scale(&int(2))).unwrap();
        assert_eq!(twisted, CharacterVector::line_bundle(&x.scale(&int(3)), 3).unwrap());
    }
}
