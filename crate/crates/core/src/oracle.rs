//! Brute-force reference implementations. These use only field and
//! polynomial arithmetic, never the coset machinery.

use crate::cosets::EqualDifferenceSet;
use crate::error::{Error, Result};
use crate::ext::{ExtElem, SplittingContext};
use crate::field::Field;
use crate::poly::Poly;

fn check(f: &Poly) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if f.is_constant() {
        Err(Error::ConstantPolynomial)
    } else if f.constant_term() == 0 {
        Err(Error::ZeroConstantTerm)
    } else {
        Ok(())
    }
}

/// Walks `X^n mod f` for `n = 1, 2, ...` and stops at the first nonzero
/// constant accepted by `accept`.
fn first_constant_power(f: &Poly, bound: u64, accept: impl Fn(u32) -> bool) -> Result<(u64, u32)> {
    check(f)?;
    let x = Poly::x(f.field());
    let mut cur = Poly::one(f.field());
    for n in 1..=bound {
        cur = (&cur * &x).rem(f)?;
        if cur.degree() == Some(0) && accept(cur.constant_term()) {
            return Ok((n, cur.constant_term()));
        }
    }
    Err(Error::BoundExceeded(bound))
}

/// Smallest `(n, lambda)` with `f | X^n - lambda`, `n <= bound`.
pub fn oracle_min_binomial(f: &Poly, bound: u64) -> Result<(u64, u32)> {
    first_constant_power(f, bound, |_| true)
}

/// Smallest `n <= bound` with `f | X^n - 1`.
pub fn oracle_poly_order(f: &Poly, bound: u64) -> Result<u64> {
    first_constant_power(f, bound, |c| c == 1).map(|(n, _)| n)
}

/// Whether `(f)` in `GF(q)[X]/(X^N - lambda)` holds a word of weight two,
/// by testing `f | X^k - alpha` for every `0 < k < N` and `alpha != 0`.
pub fn oracle_distance_two(f: &Poly, length: u64, lambda: u32) -> Result<bool> {
    let field = f.field();
    let big = Poly::binomial(field, length as usize, lambda);
    if lambda == 0 || f.is_zero() || !big.rem(f)?.is_zero() {
        return Err(Error::NotAGenerator { length, lambda });
    }
    let degree = f.degree().unwrap_or(0);
    if degree == 0 || degree as u64 >= length {
        return Err(Error::TrivialCode { degree, length });
    }
    for k in 1..length {
        for alpha in field.units() {
            if Poly::binomial(field, k as usize, alpha).rem(f)?.is_zero() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All `X^k - mu` with `0 < k < N` dividing `X^N - lambda`, by trial
/// division.
pub fn oracle_binomial_divisors(field: &Field, length: u64, lambda: u32) -> Result<Vec<Poly>> {
    let big = Poly::binomial(field, length as usize, lambda);
    let mut out = Vec::new();
    for k in 1..length {
        for mu in field.units() {
            let b = Poly::binomial(field, k as usize, mu);
            if big.rem(&b)?.is_zero() {
                out.push(b);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Coefficients (ascending) of `prod_{x in E} (X - zeta_m^x)` in the
/// extension field of `ctx`.
pub fn oracle_expand_equal_difference(
    e: &EqualDifferenceSet,
    ctx: &SplittingContext,
) -> Result<Vec<ExtElem>> {
    let ext = ctx.ext();
    let zeta = ctx.root_of_unity(e.modulus)?;
    let mut coeffs = vec![ext.one()];
    for x in e.elements() {
        let root = ext.pow(&zeta, x);
        let mut next = vec![ext.zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = ext.add(&next[i + 1], c);
            next[i] = ext.sub(&next[i], &ext.mul(c, &root));
        }
        coeffs = next;
    }
    Ok(coeffs)
}
