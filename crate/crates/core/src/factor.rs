//! Irreducible factorization, radicals and polynomial orders.
//!
//! Factorization runs the classical pipeline: squarefree decomposition,
//! distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
//! driven by a fixed-seed generator so results are reproducible.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

const SPLIT_SEED: u64 = 0x6d69_6e62_696e;

/// `unit * prod factor^mult`, factors monic, irreducible, pairwise distinct
/// and sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    field: Field,
    pub unit: u32,
    pub factors: Vec<(Poly, u64)>,
}

impl Factorization {
    pub fn new(field: &Field, unit: u32, mut factors: Vec<(Poly, u64)>) -> Factorization {
        factors.sort();
        Factorization {
            field: field.clone(),
            unit,
            factors,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Multiplies everything back together.
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(&self.field, self.unit), |acc, (g, k)| {
                &acc * &g.pow(*k)
            })
    }

    pub fn radical(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(&self.field), |acc, (g, _)| &acc * g)
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.factors.iter().map(|&(_, k)| k).max().unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// Parses the `unit * (c0,c1,...)^mult * ...` text form.
    pub fn parse(field: &Field, s: &str) -> Result<Factorization> {
        let mut parts = s.trim().split(" * ");
        let bad = || Error::Parse(format!("malformed factorization {s:?}"));
        let unit: u64 = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let unit = field.element(unit).map_err(|e| Error::Parse(e.to_string()))?.code();
        let mut factors = Vec::new();
        for part in parts {
            let (poly, mult) = part
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.split_once(")^"))
                .ok_or_else(bad)?;
            let mult: u64 = mult.parse().map_err(|_| bad())?;
            factors.push((Poly::parse(field, poly)?, mult));
        }
        Ok(Factorization::new(field, unit, factors))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (g, k) in &self.factors {
            write!(f, " * ({g})^{k}")?;
        }
        Ok(())
    }
}

/// Complete factorization of a nonzero polynomial.
pub fn factorize(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field().clone();
    let unit = f.leading();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut acc: BTreeMap<Poly, u64> = BTreeMap::new();
    for (part, mult) in squarefree_decomposition(&monic)? {
        for (block, d) in distinct_degree(&part)? {
            for g in equal_degree(&block, d, &mut rng)? {
                *acc.entry(g).or_insert(0) += mult;
            }
        }
    }
    Ok(Factorization::new(&field, unit, acc.into_iter().collect()))
}

/// Monic product of the distinct irreducible factors of a nonconstant `f`.
pub fn radical(f: &Poly) -> Result<Poly> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(factorize(f)?.radical())
}

/// Squarefree decomposition of a monic polynomial into coprime squarefree
/// parts with multiplicities.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u64)>> {
    let field = f.field();
    let p = field.p() as u64;
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let d = f.derivative();
    let mut c = if d.is_zero() { f.clone() } else { f.gcd(&d)? };
    let mut w = f.exact_div(&c)?;
    let mut i = 1u64;
    while !w.is_constant() {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y)?;
        if !z.is_constant() {
            out.push((z, i));
        }
        c = c.exact_div(&y)?;
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        let root = pth_root(&c);
        for (g, k) in squarefree_decomposition(&root)? {
            out.push((g, k * p));
        }
    }
    Ok(out)
}

/// For `c` with zero derivative, the polynomial `r` with `r^p = c`.
fn pth_root(c: &Poly) -> Poly {
    let field = c.field();
    let p = field.p() as usize;
    let coeffs = c
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&a| field.pth_root(a))
        .collect();
    Poly::new(field, coeffs)
}

/// `h^q mod f`.
fn frobenius(h: &Poly, f: &Poly) -> Result<Poly> {
    h.powmod(f.field().q() as u128, f)
}

/// Splits a squarefree monic polynomial into `(product of all irreducible
/// factors of degree d, d)` blocks.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field();
    let x = Poly::x(field);
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = frobenius(&h, &rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if !g.is_constant() {
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct monic irreducibles
/// all of degree `d`.
pub fn equal_degree(f: &Poly, d: usize, rng: &mut impl Rng) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field();
    let q = field.q();
    loop {
        let a = Poly::new(field, (0..n).map(|_| rng.gen_range(0..q)).collect());
        if a.is_constant() {
            continue;
        }
        let b = if field.p() == 2 {
            // absolute trace from GF(q^d) down to GF(2)
            let mut t = a.clone();
            let mut sum = a.clone();
            for _ in 1..(field.e() as usize * d) {
                t = (&t * &t).rem(f)?;
                sum = &sum + &t;
            }
            sum
        } else {
            // a^((q^d - 1)/2) computed as (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
            let mut t = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                t = frobenius(&t, f)?;
                norm = (&norm * &t).rem(f)?;
            }
            &norm.powmod(((q - 1) / 2) as u128, f)? - &Poly::one(field)
        };
        let g = b.gcd(f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&f.exact_div(&g)?, d, rng)?);
            return Ok(out);
        }
    }
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree().filter(|&n| n > 0) else {
        return false;
    };
    let f = f.monic();
    let x = Poly::x(f.field());
    let frob_iter = |k: usize| -> Poly {
        let mut h = x.rem(&f).expect("nonzero modulus");
        for _ in 0..k {
            h = frobenius(&h, &f).expect("nonzero modulus");
        }
        h
    };
    if (&frob_iter(n) - &x).rem(&f).map(|r| !r.is_zero()).unwrap_or(true) {
        return false;
    }
    arith::prime_divisors(n as u64).into_iter().all(|l| {
        let h = frob_iter(n / l as usize);
        (&h - &x).gcd(&f).map(|g| g.is_constant()).unwrap_or(false)
    })
}

fn check_order_input(f: &Poly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if f.constant_term() == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

/// Order of an irreducible `g` with `g(0) != 0`: divides `q^deg g - 1`.
fn irreducible_order(g: &Poly) -> Result<u64> {
    let q = g.field().q() as u64;
    let k = g.degree().unwrap_or(0) as u32;
    let big = arith::checked_pow(q, k)? - 1;
    let mut ord = big;
    for (l, _) in arith::factorize(big) {
        while ord % l == 0 && Poly::x_pow_mod((ord / l) as u128, g)? == Poly::one(g.field()) {
            ord /= l;
        }
    }
    Ok(ord)
}

/// Order of `f` computed from an already known factorization.
pub fn order_from_factorization(fact: &Factorization) -> Result<u64> {
    let p = fact.field().p() as u64;
    let mut m = 1u64;
    for (g, _) in &fact.factors {
        if g.constant_term() == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        m = arith::lcm(m, irreducible_order(g)?)?;
    }
    let u = arith::ceil_log(p, fact.max_multiplicity());
    m.checked_mul(arith::checked_pow(p, u)?)
        .ok_or(Error::Overflow("polynomial order"))
}

/// `ord(f)`: the least `n >= 1` with `f | X^n - 1`.
pub fn poly_order(f: &Poly) -> Result<u64> {
    check_order_input(f)?;
    order_from_factorization(&factorize(f)?)
}
