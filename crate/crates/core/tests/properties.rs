mod common;

use std::collections::BTreeSet;

use common::{field_of, valid_polys};
use minbin_core::codes::monic_divisors;
use minbin_core::oracle::oracle_binomial_divisors;
use minbin_core::*;
use proptest::prelude::*;
use rayon::prelude::*;

/// Every monic polynomial of degree `1..=max_degree`, zero constant allowed.
fn all_monic(field: &Field, max_degree: usize) -> Vec<Poly> {
    let q = field.q() as u64;
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for code in 0..q.pow(d as u32) {
            let mut c = code;
            let mut coeffs: Vec<u32> = (0..d)
                .map(|_| {
                    let x = (c % q) as u32;
                    c /= q;
                    x
                })
                .collect();
            coeffs.push(1);
            out.push(Poly::new(field, coeffs));
        }
    }
    out
}

#[test]
fn factorization_multiplies_back_and_radical_is_squarefree() {
    for q in [2, 3, 4, 5] {
        let field = field_of(q);
        all_monic(&field, 6).par_iter().for_each(|f| {
            let fact = factorize(f).unwrap();
            assert_eq!(fact.expand(), *f);
            let distinct: BTreeSet<_> = fact.factors.iter().map(|(g, _)| g.clone()).collect();
            assert_eq!(distinct.len(), fact.factors.len());
            assert!(fact.factors.windows(2).all(|w| w[0].0 < w[1].0));
            if !f.is_constant() {
                let rad = radical(f).unwrap();
                assert_eq!(rad, fact.radical());
                assert!(rad.is_squarefree());
            }
        });
    }
}

#[test]
fn poly_order_matches_brute_force_and_detects_repeated_roots() {
    for q in [2, 3, 5] {
        let field = field_of(q);
        valid_polys(&field, 5).par_iter().for_each(|f| {
            let m = poly_order(f).unwrap();
            assert_eq!(oracle_poly_order(f, m).unwrap(), m, "{f}");
            let coprime = arith::gcd(m, field.p() as u64) == 1;
            assert_eq!(coprime, f.is_squarefree(), "{f}");
        });
    }
}

#[test]
fn cosets_partition_residues() {
    for q in [2u64, 3, 4, 5] {
        for n in (1..=64u64).filter(|&n| arith::gcd(n, q) == 1) {
            let cosets = cyclotomic_cosets(n, q).unwrap();
            let mut all: Vec<u64> = cosets.iter().flat_map(|c| c.members.clone()).collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
            for c in &cosets {
                assert_eq!(c.representative, c.members[0]);
                let tau = c.size() as u32;
                assert_eq!(arith::mul_mod(c.representative, arith::pow_mod(q, tau as u64, n), n), c.representative);
            }
        }
    }
}

#[test]
fn divisibility_is_containment_of_embedded_defining_sets() {
    for q in [2, 3] {
        let field = field_of(q);
        let polys: Vec<(Poly, u64)> = valid_polys(&field, 4)
            .into_iter()
            .filter(|f| f.is_squarefree())
            .map(|f| {
                let m = poly_order(&f).unwrap();
                (f, m)
            })
            .collect();
        polys.par_iter().for_each(|(f, n)| {
            for (g, m) in &polys {
                let l = arith::lcm(*n, *m).unwrap();
                let ctx = splitting_context(&field, l).unwrap();
                let tf = defining_set_in(f, &ctx).unwrap();
                let tg = defining_set_in(g, &ctx).unwrap();
                let ef: BTreeSet<u64> = embed(&tf.elements(), *n, l).unwrap().into_iter().collect();
                let eg: BTreeSet<u64> = embed(&tg.elements(), *m, l).unwrap().into_iter().collect();
                assert_eq!(f.divides(g), ef.is_subset(&eg), "{f} | {g}");
            }
        });
    }
}

#[test]
fn equal_difference_is_preserved_by_embedding() {
    for m in 1..=36u64 {
        for n in arith::divisors(m).into_iter().filter(|&n| n <= 12) {
            for mask in 1u64..(1 << n) {
                let s: Vec<u64> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let small = is_equal_difference(&s, n).unwrap().is_some();
                let big = is_equal_difference(&embed(&s, n, m).unwrap(), m).unwrap().is_some();
                assert_eq!(small, big, "{s:?} mod {n} into {m}");
            }
        }
    }
}

#[test]
fn minimal_cover_is_maximal() {
    for q in [2u64, 3, 4, 5] {
        let field = field_of(q);
        valid_polys(&field, 4)
            .par_iter()
            .filter(|f| f.is_squarefree())
            .for_each(|f| {
                let t = defining_set(f).unwrap();
                let m = t.modulus;
                let e = minimal_equal_difference_cover(&t, q).unwrap();
                assert!(t.elements().iter().all(|&x| e.contains(x)));
                assert!(is_defined_over_base(&e, q).unwrap());
                for d in arith::divisors(m).into_iter().filter(|&d| d > e.difference) {
                    for gamma in 0..d {
                        let cand = EqualDifferenceSet::new(m, gamma, d).unwrap();
                        let covers = t.elements().iter().all(|&x| cand.contains(x));
                        assert!(!(covers && is_defined_over_base(&cand, q).unwrap()), "{f}: {cand}");
                    }
                }
            });
    }
}

#[test]
fn minimal_binomial_constant_is_unique_and_matches_root_formula() {
    for q in [2, 3, 4, 5] {
        let field = field_of(q);
        valid_polys(&field, 4).par_iter().for_each(|f| {
            let r = min_binomial(f).unwrap();
            let hits = field
                .units()
                .filter(|&l| f.divides(&Poly::binomial(&field, r.n as usize, l)))
                .count();
            assert_eq!(hits, 1, "{f}");
            if f.is_squarefree() {
                let ctx = splitting_context(&field, r.m).unwrap();
                let gamma = defining_set(f).unwrap().representatives()[0];
                let c = ctx.zeta_pow((gamma * (r.m / r.d_f)) as i64);
                assert_eq!(ctx.in_base_field(&c), Some(r.lambda), "{f}");
            }
        });
    }
}

#[test]
fn freeness_means_minimal_binomial_order_equals_order() {
    for q in [2, 3, 4, 5] {
        let field = field_of(q);
        valid_polys(&field, 5).par_iter().for_each(|f| {
            let (free, d_f) = is_free_of_binomials(f).unwrap();
            let n = min_binomial(f).unwrap().n;
            assert_eq!(free, n == poly_order(f).unwrap(), "{f}");
            assert_eq!(free, d_f == 1, "{f}");
        });
    }
}

#[test]
fn binomial_detection_matches_coefficient_shape() {
    for q in [2, 3, 4] {
        let field = field_of(q);
        valid_polys(&field, 5).par_iter().for_each(|f| {
            let got = is_binomial(f).unwrap();
            assert_eq!(got.is_some(), f.weight() == 2, "{f}");
            if let Some((v, e)) = got {
                let p = field.p() as u64;
                let rad = radical(f).unwrap();
                assert_eq!(rad.pow(p.pow(v)), f.monic());
                assert_eq!(e.len() as usize, rad.degree().unwrap());
            }
        });
    }
}

#[test]
fn binomial_factors_are_irreducible_of_coset_size() {
    for q in [2u64, 3, 4, 5] {
        let field = field_of(q);
        for n in 1..=24u64 {
            for lambda in field.units() {
                let shape = depolarize(&field, n, lambda).unwrap();
                let t = binomial_defining_set(&shape).unwrap();
                let fact = factor_binomial(&field, n, lambda).unwrap();
                let mut sizes: Vec<usize> = t.cosets.iter().map(|c| c.size()).collect();
                let mut degrees: Vec<usize> =
                    fact.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
                sizes.sort_unstable();
                degrees.sort_unstable();
                assert_eq!(sizes, degrees);
                assert!(fact.factors.iter().all(|(g, _)| factor::is_irreducible(g)));
                assert_eq!(t.len() as u64, shape.n);
            }
        }
    }
}

#[test]
fn proper_binomial_factors_are_complete() {
    for q in [2, 3, 4, 5] {
        let field = field_of(q);
        for n in 1..=24u64 {
            for lambda in field.units() {
                let fast = proper_binomial_factors(&field, n, lambda).unwrap();
                let brute = oracle_binomial_divisors(&field, n, lambda).unwrap();
                assert_eq!(fast, brute, "X^{n} - {lambda} over {field}");
            }
        }
    }
}

/// Distance-2 codes are exactly the proper divisors of proper binomial
/// factors.
#[test]
fn distance_two_codes_are_covered_by_binomial_factors() {
    for q in [2, 3, 5] {
        let field = field_of(q);
        for n in 1..=16u64 {
            for lambda in field.units() {
                let codes: BTreeSet<Poly> = enumerate_distance_two_codes(&field, n, lambda)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.generator)
                    .collect();
                let mut covered = BTreeSet::new();
                for b in proper_binomial_factors(&field, n, lambda).unwrap() {
                    for (g, _) in monic_divisors(&factorize(&b).unwrap()) {
                        if !g.is_constant() {
                            covered.insert(g);
                        }
                    }
                }
                assert_eq!(codes, covered, "N={n} lambda={lambda} over {field}");
            }
        }
    }
}

#[test]
fn zeta_family_is_compatible_in_one_ambient_field() {
    for q in [2u64, 3, 4, 5] {
        let field = field_of(q);
        for big in (1..=40u64).filter(|&m| arith::gcd(m, q) == 1) {
            let Ok(ctx) = splitting_context(&field, big) else {
                continue;
            };
            for m in arith::divisors(big) {
                let z = ctx.root_of_unity(m).unwrap();
                assert_eq!(ctx.ext().elem_order(&z).unwrap(), m);
                assert_eq!(z, ctx.zeta_pow((big / m) as i64));
            }
        }
    }
}

#[test]
fn base_field_membership_is_frobenius_stability() {
    for (q, k) in [(2u64, 4usize), (3, 3), (4, 2)] {
        let field = field_of(q);
        let ext = ExtField::new(&field, k).unwrap();
        for code in 0..ext.order() {
            let x = ext.from_code(code);
            let fixed = ext.pow(&x, q) == x;
            let down = in_base_field(&ext, &x);
            assert_eq!(down.is_some(), fixed);
            if let Some(c) = down {
                assert_eq!(ext.from_base(c), x);
            }
        }
    }
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]).prop_map(field_of)
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    field_strategy().prop_flat_map(|field| {
        let q = field.q();
        prop::collection::vec(0..q, 1..8).prop_map(move |c| Poly::new(&field, c))
    })
}

proptest! {
    #[test]
    fn poly_text_round_trips(f in poly_strategy()) {
        let back = Poly::parse(f.field(), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn factorization_text_round_trips(f in poly_strategy()) {
        prop_assume!(!f.is_zero());
        let fact = factorize(&f).unwrap();
        prop_assert_eq!(Factorization::parse(f.field(), &fact.to_string()).unwrap(), fact);
    }

    #[test]
    fn min_binomial_divides_and_round_trips(f in poly_strategy()) {
        prop_assume!(!f.is_constant() && f.constant_term() != 0);
        let r = min_binomial(&f).unwrap();
        prop_assert!(f.divides(&r.binomial(f.field())));
        prop_assert_eq!(r.to_string().parse::<MinBinResult>().unwrap(), r);
    }

    #[test]
    fn equal_difference_text_round_trips(m in 1u64..200, d_idx in 0usize..16, g in 0u64..200) {
        let divs = arith::divisors(m);
        let d = divs[d_idx % divs.len()];
        let e = EqualDifferenceSet::new(m, g, d).unwrap();
        prop_assert_eq!(e.to_string().parse::<EqualDifferenceSet>().unwrap(), e);
        prop_assert_eq!(is_equal_difference(&e.elements(), m).unwrap(), Some(e));
    }

    #[test]
    fn random_subsets_survive_embedding(n in 1u64..=18, k in 1u64..=2, mask in 1u64..(1 << 18)) {
        let m = n * k;
        let s: Vec<u64> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        prop_assume!(!s.is_empty());
        let small = is_equal_difference(&s, n).unwrap().is_some();
        let big = is_equal_difference(&embed(&s, n, m).unwrap(), m).unwrap().is_some();
        prop_assert_eq!(small, big);
    }
}
