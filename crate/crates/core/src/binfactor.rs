//! Irreducible factorization of binomials `X^N - lambda` through the
//! defining set `delta + rZ mod nr`.

use crate::arith;
use crate::cosets::{cyclotomic_coset, DefiningSet};
use crate::error::{Error, Result};
use crate::ext::splitting_context;
use crate::factor::Factorization;
use crate::field::Field;

/// `X^N - lambda = (X^n - lambda')^(p^v)` with `n` prime to `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialShape {
    pub field: Field,
    /// `N`.
    pub degree: u64,
    pub v: u32,
    pub n: u64,
    /// Multiplicative order of `lambda`.
    pub r: u64,
    /// `t p^v = 1 (mod r)`.
    pub t: u64,
    pub lambda: u32,
    pub lambda_prime: u32,
    /// Smallest exponent prime to `nr` with `zeta_nr^(delta n) = lambda'`;
    /// zero when `lambda = 1`.
    pub delta: u64,
}

impl BinomialShape {
    pub fn modulus(&self) -> u64 {
        self.n * self.r
    }

    pub fn multiplicity(&self) -> u64 {
        (self.field.p() as u64).pow(self.v)
    }
}

pub fn depolarize(field: &Field, degree: u64, lambda: u32) -> Result<BinomialShape> {
    if degree == 0 {
        return Err(Error::ZeroLength);
    }
    let lambda = field.element(lambda as u64)?.code();
    let r = field.elem_order(lambda)?;
    let p = field.p() as u64;
    let v = arith::valuation(degree, p);
    let pv = p.pow(v);
    let n = degree / pv;
    let t = if r == 1 {
        1
    } else {
        arith::inv_mod(pv % r, r).ok_or(Error::NotCoprime { n: r, q: p })?
    };
    let lambda_prime = field.pow(lambda, t);
    let nr = n * r;
    if r == 1 {
        // the progression is all of Z/nZ
        return Ok(BinomialShape {
            field: field.clone(),
            degree,
            v,
            n,
            r,
            t,
            lambda,
            lambda_prime,
            delta: 0,
        });
    }
    let ctx = splitting_context(field, nr)?;
    let ext = ctx.ext();
    let target = ext.from_base(lambda_prime);
    let step = ctx.zeta_pow(n as i64);
    let mut cur = ext.one();
    let mut delta = None;
    for d in 0..nr {
        if arith::gcd(d, nr) == 1 && cur == target {
            delta = Some(d);
            break;
        }
        cur = ext.mul(&cur, &step);
    }
    let delta = delta.ok_or_else(|| {
        Error::Inconsistent(format!("no primitive {nr}-th root maps to {lambda_prime}"))
    })?;
    Ok(BinomialShape {
        field: field.clone(),
        degree,
        v,
        n,
        r,
        t,
        lambda,
        lambda_prime,
        delta,
    })
}

/// `delta + rZ mod nr` split into q-cyclotomic cosets.
pub fn binomial_defining_set(shape: &BinomialShape) -> Result<DefiningSet> {
    let (n, r, delta) = (shape.n, shape.r, shape.delta);
    let nr = shape.modulus();
    let q = shape.field.q() as u64;
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    for j in 0..n {
        if seen[j as usize] {
            continue;
        }
        let c = cyclotomic_coset(nr, q, delta + r * j)?;
        for &x in &c.members {
            if x % r != delta % r {
                return Err(Error::Inconsistent(format!(
                    "coset of {} mod {nr} leaves the progression",
                    delta + r * j
                )));
            }
            seen[((x + nr - delta) % nr / r) as usize] = true;
        }
        cosets.push(c);
    }
    DefiningSet::from_cosets(nr, cosets)
}

/// One irreducible `prod_{j in c} (X - zeta_nr^j)` per coset, each with
/// multiplicity `p^v`.
pub fn factor_binomial(field: &Field, degree: u64, lambda: u32) -> Result<Factorization> {
    let shape = depolarize(field, degree, lambda)?;
    let t = binomial_defining_set(&shape)?;
    let ctx = splitting_context(field, shape.modulus())?;
    let ext = ctx.ext();
    let mult = shape.multiplicity();
    let mut factors = Vec::with_capacity(t.cosets.len());
    for c in &t.cosets {
        let roots: Vec<_> = c.members.iter().map(|&j| ctx.zeta_pow(j as i64)).collect();
        let g = ext.descend(&ext.poly_from_roots(&roots)).ok_or_else(|| {
            Error::Inconsistent(format!("coset {c} does not descend to {field}"))
        })?;
        factors.push((g, mult));
    }
    Ok(Factorization::new(field, 1, factors))
}

/// The part of `n` supported on the primes dividing `gcd(n, r)`.
pub fn shared_part(n: u64, r: u64) -> u64 {
    arith::prime_divisors(arith::gcd(n, r))
        .into_iter()
        .map(|l| l.pow(arith::valuation(n, l)))
        .product()
}

fn check_size_setup(n: u64, r: u64, q: u64) -> Result<()> {
    if n == 0 || r == 0 || arith::prime_power(q).is_none() || !(q - 1).is_multiple_of(r) {
        return Err(Error::Precondition(format!(
            "need n, r >= 1, q a prime power and r | q - 1 (n={n}, r={r}, q={q})"
        )));
    }
    Ok(())
}

/// Per shared prime `l` with `a = v_l(r)`, `b = v_l(n)`: the exponent of
/// `l` in the common coset size and in the number of cosets.
fn size_and_count_exponents(n: u64, r: u64, q: u64) -> Vec<(u64, u32, u32)> {
    let primes = arith::prime_divisors(arith::gcd(n, r));
    primes
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let (a, b) = (arith::valuation(r, l) as i64, arith::valuation(n, l) as i64);
            let (size, count) = if i == 0 && l == 2 && q % 4 == 3 {
                let w = arith::valuation(q + 1, 2) as i64;
                ((a + b - w).max(1), (b - 1).min(w - a))
            } else {
                let w = arith::valuation(q - 1, l) as i64;
                ((a + b - w).max(0), b.min(w - a))
            };
            (l, size as u32, count.max(0) as u32)
        })
        .collect()
}

/// Common size of the q-cyclotomic cosets mod `n_1 r` inside the preimage
/// of a class mod `r`, by the closed formula.
pub fn predicted_coset_size(n: u64, r: u64, q: u64) -> Result<u64> {
    check_size_setup(n, r, q)?;
    Ok(size_and_count_exponents(n, r, q)
        .into_iter()
        .map(|(l, s, _)| l.pow(s))
        .product())
}

/// Number of such cosets, by the closed formula.
pub fn predicted_coset_count(n: u64, r: u64, q: u64) -> Result<u64> {
    check_size_setup(n, r, q)?;
    Ok(size_and_count_exponents(n, r, q)
        .into_iter()
        .map(|(l, _, c)| l.pow(c))
        .product())
}

/// Enumerates the cosets mod `n_1 r` inside `delta + rZ` and compares
/// their sizes and number with the closed formulas.
pub fn coset_size_check(n: u64, r: u64, delta: u64, q: u64) -> Result<bool> {
    check_size_setup(n, r, q)?;
    let n1 = shared_part(n, r);
    let modulus = n1 * r;
    if arith::gcd(delta, modulus) != 1 {
        return Err(Error::Precondition(format!(
            "delta={delta} must be prime to {modulus}"
        )));
    }
    let size = predicted_coset_size(n, r, q)?;
    let count = predicted_coset_count(n, r, q)?;
    let mut seen = vec![false; n1 as usize];
    let mut found = 0u64;
    for j in 0..n1 {
        if seen[j as usize] {
            continue;
        }
        let c = cyclotomic_coset(modulus, q, delta + r * j)?;
        if c.size() as u64 != size {
            return Ok(false);
        }
        for &x in &c.members {
            seen[((x + modulus - delta % modulus) % modulus / r) as usize] = true;
        }
        found += 1;
    }
    Ok(found == count)
}
