use fano_chern::bundles::{chern_to_character, total_chern, CharacterVector};
use fano_chern::numeric::{bernoulli, binomial, factorial, int, todd_coeff, Rational};
use fano_chern::rings::{product_ring, projbundle_ring, projective_space_ring, projective_space_ring_named, GradedClass, Ring};
use fano_chern::schubert::{grassmannian_ring, partitions_in_box, sigma, tautological_chern, Partition, Tautological};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_rings() -> Vec<Ring> {
    let mut rings: Vec<Ring> = (1..=6).map(projective_space_ring).collect();
    for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 5), (1, 7)] {
        rings.push(grassmannian_ring(k, n).unwrap());
    }
    let p1 = projective_space_ring_named(1, "a");
    let p2 = projective_space_ring_named(2, "b");
    let p3 = projective_space_ring_named(3, "c");
    rings.push(product_ring(&p1, &p2));
    rings.push(product_ring(&p2, &p3));
    let h = GradedClass::generator(&p3).unwrap();
    rings.push(projbundle_ring(&p3, &[h.scale(&int(-1))], 2).unwrap());
    rings.push(projbundle_ring(&p2, &[h_of(&p2).scale(&int(3)), h_of(&p2).pow(2).scale(&int(2))], 3).unwrap());
    rings
}

fn h_of(ring: &Ring) -> GradedClass {
    GradedClass::generator(ring).unwrap()
}

fn basis_classes(ring: &Ring) -> Vec<GradedClass> {
    ring.basis().into_iter().map(|l| GradedClass::from_label(ring, l).unwrap()).collect()
}

#[test]
fn multiplication_is_associative_and_commutative() {
    for ring in small_rings() {
        assert!(ring.dimension() <= 6);
        let b = basis_classes(&ring);
        for x in &b {
            for y in &b {
                assert_eq!(x * y, y * x, "{} {x} {y}", ring.name());
                for z in &b {
                    assert_eq!(&(x * y) * z, x * &(y * z), "{} {x} {y} {z}", ring.name());
                }
            }
        }
    }
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let v = &m[col][c] * &f;
                m[r][c] -= v;
            }
        }
    }
    det
}

#[test]
fn poincare_pairing_is_unimodular() {
    for ring in small_rings() {
        let b = basis_classes(&ring);
        let m: Vec<Vec<Rational>> = b.iter().map(|x| b.iter().map(|y| (x * y).integrate()).collect()).collect();
        let det = determinant(m);
        assert_eq!(det.abs(), int(1), "{}", ring.name());
    }
}

/// `1 / c(E^dual)` by series inversion.
fn inverse_series(c: &GradedClass, upto: u32) -> GradedClass {
    let ring = c.ring().clone();
    let x = &GradedClass::one(&ring) - c;
    let mut acc = GradedClass::one(&ring);
    let mut power = GradedClass::one(&ring);
    for _ in 0..upto {
        power = &power * &x;
        acc = &acc + &power;
    }
    acc
}

#[test]
fn fiber_integrals_are_segre_classes() {
    let base = projective_space_ring(4);
    let h = h_of(&base);
    let cases: Vec<Vec<i64>> = vec![vec![-1], vec![2, 1], vec![3, -2, 1], vec![0, 0], vec![1, 5, -3]];
    for coeffs in cases {
        let rank = (coeffs.len() as u32).max(2);
        let chern: Vec<GradedClass> = coeffs.iter().enumerate().map(|(i, &a)| h.pow(i as u32 + 1).scale(&int(a))).collect();
        let bundle = projbundle_ring(&base, &chern, rank).unwrap();
        let xi = GradedClass::tautological(&bundle).unwrap();
        let dual: Vec<GradedClass> =
            chern.iter().enumerate().map(|(i, c)| if i % 2 == 0 { c.scale(&int(-1)) } else { c.clone() }).collect();
        let segre = inverse_series(&total_chern(&dual, &base), 4);
        for t in 0..=4 {
            let pushed = xi.pow(rank - 1 + t).push_to_base().unwrap();
            assert_eq!(pushed, segre.homogeneous_part(t), "c={coeffs:?} t={t}");
        }
    }
}

#[test]
fn whitney_sum_of_tautological_bundles() {
    for n in 2..=9 {
        for k in 1..=4.min(n - 1) {
            let g = grassmannian_ring(k, n).unwrap();
            let s_dual = tautological_chern(&g, Tautological::SubDual).unwrap();
            let s: Vec<GradedClass> = s_dual.iter().enumerate().map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() }).collect();
            let q = tautological_chern(&g, Tautological::Quotient).unwrap();
            let product = &total_chern(&s, &g) * &total_chern(&q, &g);
            assert_eq!(product, GradedClass::one(&g), "G({k},{n})");
        }
    }
}

#[test]
fn littlewood_richardson_coefficients_are_nonnegative_integers() {
    for n in 2..=8 {
        for k in 1..=3.min(n - 1) {
            let g = grassmannian_ring(k, n).unwrap();
            let b = basis_classes(&g);
            for x in &b {
                for y in &b {
                    for (_, c) in (x * y).terms() {
                        assert!(c.is_integer() && !c.is_negative(), "G({k},{n}) {x}*{y}");
                    }
                }
            }
        }
    }
}

/// Standard Young tableaux of the `k x m` rectangle, by the hook length formula.
fn hook_degree(k: u32, m: u32) -> BigInt {
    let mut hooks = BigInt::one();
    for i in 0..k {
        for j in 0..m {
            hooks *= BigInt::from((k - i) + (m - j) - 1);
        }
    }
    factorial(k * m) / hooks
}

#[test]
fn plucker_degree_matches_hook_formula() {
    for n in 2..=8 {
        for k in 1..=3.min(n - 1) {
            let g = grassmannian_ring(k, n).unwrap();
            let s1 = sigma(&g, &[1]).unwrap();
            let deg = s1.pow(k * (n - k)).integrate();
            assert_eq!(deg, Rational::from_integer(hook_degree(k, n - k)), "G({k},{n})");
        }
    }
}

#[test]
fn dual_schubert_classes_pair_to_delta() {
    for (k, n) in [(2, 4), (2, 5), (3, 6), (2, 6)] {
        let m = n - k;
        let g = grassmannian_ring(k, n).unwrap();
        for size in 0..=k * m {
            for lambda in partitions_in_box(k, m, size) {
                for mu in partitions_in_box(k, m, k * m - size) {
                    let x = sigma(&g, lambda.parts()).unwrap();
                    let y = sigma(&g, mu.parts()).unwrap();
                    let expected = if lambda.complement(k, m) == Some(mu.clone()) { int(1) } else { int(0) };
                    assert_eq!((&x * &y).integrate(), expected, "{lambda} {mu}");
                }
            }
        }
    }
    assert_eq!(Partition::new(vec![2, 1]).unwrap().complement(2, 3), Some(Partition::new(vec![2, 1]).unwrap()));
}

#[test]
fn grassmannian_ch2_formula() {
    for n in 4..=12 {
        for k in 2..=n / 2 {
            let g = grassmannian_ring(k, n).unwrap();
            let s = chern_to_character(&tautological_chern(&g, Tautological::SubDual).unwrap(), int(k as i64), &g, 2).unwrap();
            let q = chern_to_character(&tautological_chern(&g, Tautological::Quotient).unwrap(), int((n - k) as i64), &g, 2).unwrap();
            let ch2 = s.multiply(&q).unwrap().component(2);
            let (n_i, k_i) = (n as i64, k as i64);
            let expected = &sigma(&g, &[2]).unwrap().scale(&Rational::new((n_i + 2 - 2 * k_i).into(), 2.into()))
                - &sigma(&g, &[1, 1]).unwrap().scale(&Rational::new((n_i - 2 - 2 * k_i).into(), 2.into()));
            assert_eq!(ch2, expected, "G({k},{n})");
        }
    }
}

#[test]
fn projective_space_tangent_character() {
    for n in 1..=8 {
        let p = projective_space_ring(n);
        let h = h_of(&p);
        let chern: Vec<GradedClass> =
            (1..=n).map(|i| h.pow(i).scale(&Rational::from_integer(binomial(n + 1, i)))).collect();
        let ch = chern_to_character(&chern, int(n as i64), &p, n).unwrap();
        for k in 1..=n {
            let expected = h.pow(k).scale(&(int(n as i64 + 1) / Rational::from_integer(factorial(k))));
            assert_eq!(ch.component(k), expected, "P^{n} k={k}");
        }
    }
}

#[test]
fn bernoulli_recurrence_and_todd_coefficients() {
    for m in 1..=40u32 {
        let s: Rational = (0..=m).map(|l| bernoulli(l) * Rational::from_integer(binomial(m + 1, l))).sum();
        assert!(s.is_zero(), "m={m}");
    }
    for j in 0..=30u32 {
        let sign = if j % 2 == 0 { int(1) } else { int(-1) };
        assert_eq!(todd_coeff(j) * Rational::from_integer(factorial(j)), sign * bernoulli(j), "j={j}");
    }
}

proptest! {
    #[test]
    fn newton_round_trip(n in 1u32..=6, coeffs in prop::collection::vec(-20i64..=20, 1..=6)) {
        let p = projective_space_ring(n);
        let h = h_of(&p);
        let chern: Vec<GradedClass> = coeffs.iter().take(n as usize).enumerate()
            .map(|(i, &a)| h.pow(i as u32 + 1).scale(&int(a))).collect();
        let mut padded = chern.clone();
        while padded.len() < n as usize {
            padded.push(GradedClass::zero(&p));
        }
        let ch = chern_to_character(&chern, int(coeffs.len() as i64), &p, n).unwrap();
        prop_assert_eq!(ch.to_chern(), padded);
    }

    #[test]
    fn sym2_plus_wedge2_is_square(n in 1u32..=5, rank in 0i64..=5, coeffs in prop::collection::vec(-6i64..=6, 5)) {
        let p = projective_space_ring(n);
        let h = h_of(&p);
        let chern: Vec<GradedClass> = coeffs.iter().take(n as usize).enumerate()
            .map(|(i, &a)| h.pow(i as u32 + 1).scale(&int(a))).collect();
        let x = chern_to_character(&chern, int(rank), &p, n).unwrap();
        let sym = x.sym2().unwrap();
        let wedge = x.wedge2().unwrap();
        prop_assert_eq!(sym.rank() + wedge.rank(), int(rank * rank));
        prop_assert_eq!(sym.add(&wedge).unwrap(), x.multiply(&x).unwrap());
        prop_assert_eq!(sym.rank(), &int(rank * (rank + 1) / 2));
    }

    #[test]
    fn adams_operations_compose(n in 1u32..=5, a in -4i64..=4, s in 1i64..=3, t in 1i64..=3) {
        let p = projective_space_ring(n);
        let line = CharacterVector::line_bundle(&h_of(&p).scale(&int(a)), n).unwrap();
        prop_assert_eq!(line.adams(s).adams(t), line.adams(s * t));
    }
}
