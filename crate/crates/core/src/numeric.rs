//! Exact rational arithmetic helpers, Bernoulli numbers and Todd coefficients.
//!
//! Bernoulli numbers follow the generating function `x/(e^x - 1) = sum B_j x^j / j!`,
//! so `B_1 = -1/2`. The other common convention (`B_1 = +1/2`) is *not* used
//! anywhere in this crate; the Todd coefficients `A_j = (-1)^j B_j / j!` absorb
//! the sign so that `A_1 = +1/2`.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` reduced to lowest terms. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `1/n!` as a rational.
pub fn inv_factorial(n: u32) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// Canonical text form: `p/q`, or `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses the canonical text form produced by [`format_rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// `B_j` under the `x/(e^x - 1)` convention (`B_1 = -1/2`).
///
/// The table is shared between threads and grows on demand using
/// `sum_{l=0}^{m} C(m+1, l) B_l = 0`.
pub fn bernoulli(j: u32) -> Rational {
    let j = j as usize;
    if let Some(b) = BERNOULLI.read().expect("bernoulli table poisoned").get(j) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().expect("bernoulli table poisoned");
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= j {
        let m = table.len() as u32;
        let mut acc = Rational::zero();
        for (l, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += b * Rational::from_integer(binomial(m + 1, l as u32));
            }
        }
        let next = -acc / Rational::from_integer(BigInt::from(m + 1));
        table.push(next);
    }
    table[j].clone()
}

/// Coefficient `A_j` of `D^j` in the Todd class of a line bundle with first
/// Chern class `D`: `A_j = (-1)^j B_j / j!`.
pub fn todd_coeff(j: u32) -> Rational {
    let b = bernoulli(j) * inv_factorial(j);
    if j % 2 == 1 {
        -b
    } else {
        b
    }
}

/// `sum_{e=1}^{d} e^k`.
pub fn power_sum(d: u32, k: u32) -> Rational {
    let total = (1..=d).fold(BigInt::zero(), |acc, e| acc + BigInt::from(e).pow(k));
    Rational::from_integer(total)
}

/// Integer power of a rational with a signed integer exponent base.
pub fn pow_int(base: i64, exp: u32) -> Rational {
    Rational::from_integer(BigInt::from(base).pow(exp))
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
