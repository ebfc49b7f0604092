//! Minimal binomial multiples and freeness of binomials.

use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::cosets::{self, defining_set_from, EqualDifferenceSet};
use crate::error::{Error, Result};
use crate::ext::{splitting_context, SplittingContext};
use crate::factor::{self, Factorization};
use crate::field::Field;
use crate::poly::Poly;

/// The minimal binomial multiple `X^n - lambda` of a polynomial together
/// with the data that determines it: `n = p^u * m / d_f` where `m` is the
/// order of the radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinBinResult {
    pub n: u64,
    pub lambda: u32,
    pub m: u64,
    pub d_f: u64,
    pub u: u32,
    pub free: bool,
}

impl MinBinResult {
    pub fn binomial(&self, field: &Field) -> Poly {
        Poly::binomial(field, self.n as usize, self.lambda)
    }
}

impl fmt::Display for MinBinResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ord_b={} lambda={} m={} d_f={} u={} free={}",
            self.n, self.lambda, self.m, self.d_f, self.u, self.free
        )
    }
}

impl FromStr for MinBinResult {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const KEYS: [&str; 6] = ["ord_b", "lambda", "m", "d_f", "u", "free"];
        let bad = || Error::Parse(format!("malformed result line {s:?}"));
        let fields: Vec<&str> = s.split_whitespace().collect();
        if fields.len() != KEYS.len() {
            return Err(bad());
        }
        let mut vals = [""; 6];
        for (i, (field, key)) in fields.iter().zip(KEYS).enumerate() {
            let (k, v) = field.split_once('=').ok_or_else(bad)?;
            if k != key {
                return Err(bad());
            }
            vals[i] = v;
        }
        let num = |v: &str| v.parse::<u64>().map_err(|_| bad());
        Ok(MinBinResult {
            n: num(vals[0])?,
            lambda: vals[1].parse().map_err(|_| bad())?,
            m: num(vals[2])?,
            d_f: num(vals[3])?,
            u: vals[4].parse().map_err(|_| bad())?,
            free: vals[5].parse().map_err(|_| bad())?,
        })
    }
}

pub(crate) fn check_input(f: &Poly) -> Result<()> {
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

/// Squarefree case: `n = m / d_f`, `lambda = X^n mod f`.
pub fn min_binomial_squarefree(f: &Poly) -> Result<MinBinResult> {
    check_input(f)?;
    let fact = factor::factorize(f)?;
    if !fact.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    squarefree_from(f, &fact)
}

fn squarefree_from(f: &Poly, fact: &Factorization) -> Result<MinBinResult> {
    let q = f.field().q() as u64;
    let m = factor::order_from_factorization(fact)?;
    let ctx = splitting_context(f.field(), m)?;
    let t = defining_set_from(fact, &ctx)?;
    let cover = cosets::minimal_equal_difference_cover(&t, q)?;
    let n = m / cover.difference;
    let lambda = constant_residue(f, n)?;
    Ok(MinBinResult {
        n,
        lambda,
        m,
        d_f: cover.difference,
        u: 0,
        free: cover.difference == 1,
    })
}

/// `X^n mod f`, which must be a nonzero constant.
fn constant_residue(f: &Poly, n: u64) -> Result<u32> {
    let r = Poly::x_pow_mod(n as u128, f)?;
    match r.degree() {
        Some(0) => Ok(r.constant_term()),
        _ => Err(Error::Inconsistent(format!(
            "X^{n} mod {f} is not a nonzero constant"
        ))),
    }
}

/// General case via the radical: `ord_b(f) = p^u ord_b(rad f)` with
/// `p^u >= ` the largest multiplicity.
pub fn min_binomial(f: &Poly) -> Result<MinBinResult> {
    check_input(f)?;
    min_binomial_of(&factor::factorize(f)?)
}

/// [`min_binomial`] for a polynomial given by its factorization.
pub fn min_binomial_of(fact: &Factorization) -> Result<MinBinResult> {
    let field = fact.field();
    if fact.factors.is_empty() {
        return Err(Error::ConstantPolynomial);
    }
    let rad_fact = Factorization::new(
        field,
        1,
        fact.factors.iter().map(|(g, _)| (g.clone(), 1)).collect(),
    );
    let rad = rad_fact.expand();
    check_input(&rad)?;
    let base = squarefree_from(&rad, &rad_fact)?;
    let p = field.p() as u64;
    let u = arith::ceil_log(p, fact.max_multiplicity());
    let lift = arith::checked_pow(p, u)?;
    let n = base
        .n
        .checked_mul(lift)
        .ok_or(Error::Overflow("minimal binomial order"))?;
    Ok(MinBinResult {
        n,
        lambda: field.pow(base.lambda, lift),
        u,
        ..base
    })
}

/// Freeness verdict with the certificate `d_f`.
pub fn is_free_of_binomials(f: &Poly) -> Result<(bool, u64)> {
    let r = min_binomial(f)?;
    Ok((r.free, r.d_f))
}

/// Minimal binomial multiple of `lcm(f1, f2)` assembled from the data of
/// the two factors in a common splitting context.
pub fn min_binomial_lcm(f1: &Poly, f2: &Poly) -> Result<MinBinResult> {
    check_input(f1)?;
    check_input(f2)?;
    if f1.field() != f2.field() {
        return Err(Error::FieldMismatch);
    }
    let (fact1, fact2) = (factor::factorize(f1)?, factor::factorize(f2)?);
    if !fact1.is_squarefree() || !fact2.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let field = f1.field();
    let q = field.q() as u64;
    let m1 = factor::order_from_factorization(&fact1)?;
    let m2 = factor::order_from_factorization(&fact2)?;
    let m = arith::lcm(m1, m2)?;
    let ctx = splitting_context(field, m)?;
    let t1 = defining_set_from(&fact1, &ctx)?;
    let t2 = defining_set_from(&fact2, &ctx)?;
    let n1 = m1 / cosets::minimal_equal_difference_cover(&t1, q)?.difference;
    let n2 = m2 / cosets::minimal_equal_difference_cover(&t2, q)?.difference;
    let gamma = t1.representatives()[0];
    let eta = t2.representatives()[0];
    let (a, b) = (m / m2 * eta, m / m1 * gamma);
    let d = arith::gcd_all([a.abs_diff(b), m / n1, m / n2]);
    let exponent = arith::mul_mod(b % m, m / d, m);
    let lambda = ctx.in_base_field(&ctx.zeta_pow(exponent as i64)).ok_or_else(|| {
        Error::Inconsistent(format!("zeta_{m}^{exponent} does not lie in the base field"))
    })?;
    Ok(MinBinResult {
        n: m / d,
        lambda,
        m,
        d_f: d,
        u: 0,
        free: d == 1,
    })
}

/// `X^(m/d) - zeta_m^(gamma m/d)` for the equal-difference set `e`, when
/// the constant lies in the base field.
pub fn equal_difference_binomial(e: &EqualDifferenceSet, ctx: &SplittingContext) -> Result<Option<Poly>> {
    let zeta = ctx.root_of_unity(e.modulus)?;
    let len = e.len();
    let c = ctx.ext().pow(&zeta, e.offset * len % e.modulus);
    Ok(ctx
        .in_base_field(&c)
        .map(|lambda| Poly::binomial(ctx.base(), len as usize, lambda)))
}

/// Detects scalar multiples of binomials. Returns `v` with
/// `f = a rad(f)^(p^v)` and the equal-difference defining set of `rad(f)`.
///
/// The answer is derived from the factorization and compared with the
/// coefficient pattern of `f`.
pub fn is_binomial(f: &Poly) -> Result<Option<(u32, EqualDifferenceSet)>> {
    check_input(f)?;
    let syntactic = f.weight() == 2;
    let fact = factor::factorize(f)?;
    let structural = structural_binomial(f, &fact)?;
    if syntactic != structural.is_some() {
        return Err(Error::Inconsistent(format!(
            "coefficient pattern of {f} disagrees with its defining set"
        )));
    }
    Ok(structural)
}

fn structural_binomial(f: &Poly, fact: &Factorization) -> Result<Option<(u32, EqualDifferenceSet)>> {
    let field = f.field();
    let p = field.p() as u64;
    let h = fact.factors[0].1;
    let v = arith::valuation(h, p);
    if fact.factors.iter().any(|&(_, e)| e != h) || arith::checked_pow(p, v)? != h {
        return Ok(None);
    }
    let rad = Factorization::new(
        field,
        1,
        fact.factors.iter().map(|(g, _)| (g.clone(), 1)).collect(),
    );
    let m = factor::order_from_factorization(&rad)?;
    let ctx = splitting_context(field, m)?;
    let t = defining_set_from(&rad, &ctx)?;
    let Some(e) = cosets::is_equal_difference(&t.elements(), m)? else {
        return Ok(None);
    };
    if !cosets::is_defined_over_base(&e, field.q() as u64)? {
        return Err(Error::Inconsistent(format!(
            "defining set of a polynomial over {field} is not stable under q"
        )));
    }
    Ok(Some((v, e)))
}
