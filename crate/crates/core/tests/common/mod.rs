#![allow(dead_code)]

use minbin_core::{make_field, Field, Poly};

/// Monic polynomials of exactly `degree` with nonzero constant term.
pub fn monic_with_unit_constant(field: &Field, degree: usize) -> Vec<Poly> {
    let q = field.q();
    let tail = (q as u64).pow(degree.saturating_sub(1) as u32);
    let mut out = Vec::new();
    for c0 in 1..q {
        for code in 0..tail {
            let mut coeffs = vec![c0];
            let mut c = code;
            for _ in 1..degree {
                coeffs.push((c % q as u64) as u32);
                c /= q as u64;
            }
            coeffs.push(1);
            out.push(Poly::new(field, coeffs));
        }
    }
    out
}

/// All monic polynomials of degree `1..=max_degree` with nonzero constant term.
pub fn valid_polys(field: &Field, max_degree: usize) -> Vec<Poly> {
    (1..=max_degree)
        .flat_map(|d| monic_with_unit_constant(field, d))
        .collect()
}

pub fn field_of(q: u64) -> Field {
    let (p, e) = minbin_core::arith::prime_power(q).expect("prime power");
    make_field(p, e).unwrap()
}
