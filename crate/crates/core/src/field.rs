//! Finite fields GF(p^e) with table-driven arithmetic.
//!
//! An element of GF(p^e) = GF(p)[t]/(g(t)) is stored as its integer code
//! `a_0 + a_1 p + ... + a_{e-1} p^{e-1}`, where `a_i` are the coefficients of
//! its representative polynomial in `t`. The modulus `g` is the monic
//! irreducible of degree `e` whose coefficient vector has the smallest such
//! code, so every field is reproducible without external tables.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith;
use crate::error::{Error, Result};
use crate::factor;
use crate::poly::Poly;

/// Largest field cardinality accepted by [`make_field`].
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

const ADD_TABLE_LIMIT: u32 = 256;

struct FieldData {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    // exp has length 2(q-1) so that exp[log a + log b] needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A finite field GF(p^e). Cheap to clone; all clones share one table set.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.e == other.0.e)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.e)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.0.p, self.0.e)
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parses the `p^e` text form, e.g. `3^2`.
    fn from_str(s: &str) -> Result<Self> {
        let (p, e) = s
            .trim()
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("field must look like p^e, got {s:?}")))?;
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic {p:?}")))?;
        let e: u32 = e
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad extension degree {e:?}")))?;
        make_field(p, e)
    }
}

fn cache() -> &'static Mutex<HashMap<(u64, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds (or fetches from the process-wide cache) the canonical GF(p^e).
pub fn make_field(p: u64, e: u32) -> Result<Field> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = p
        .checked_pow(e)
        .filter(|&q| q <= MAX_FIELD_SIZE)
        .ok_or_else(|| Error::FieldTooLarge(format!("{p}^{e}")))?;
    if let Some(f) = cache().lock().unwrap().get(&(p, e)) {
        return Ok(f.clone());
    }
    let field = if e == 1 {
        build_prime_field(p as u32)
    } else {
        let base = make_field(p, 1)?;
        let modulus = canonical_irreducible(&base, e as usize)?;
        build_extension(p as u32, e, q as u32, modulus)
    };
    let mut guard = cache().lock().unwrap();
    Ok(guard.entry((p, e)).or_insert(field).clone())
}

/// The monic irreducible of degree `degree` over `base` with the smallest
/// coefficient code `c_0 + c_1 q + ...`.
pub fn canonical_irreducible(base: &Field, degree: usize) -> Result<Poly> {
    let q = base.q() as u64;
    let count = arith::checked_pow(q, degree as u32)?;
    for code in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut c = code;
        for _ in 0..degree {
            coeffs.push((c % q) as u32);
            c /= q;
        }
        coeffs.push(1);
        if degree > 1 && coeffs[0] == 0 {
            continue;
        }
        let f = Poly::new(base, coeffs);
        if factor::is_irreducible(&f) {
            return Ok(f);
        }
    }
    Err(Error::Inconsistent(format!(
        "no irreducible of degree {degree} over {base:?}"
    )))
}

fn build_prime_field(p: u32) -> Field {
    let q = p;
    let mul = |a: u32, b: u32| ((a as u64 * b as u64) % p as u64) as u32;
    let generator = smallest_generator(q, mul);
    finish(p, 1, q, vec![0, 1], generator, mul)
}

fn build_extension(p: u32, e: u32, q: u32, modulus: Poly) -> Field {
    let g: Vec<u32> = modulus.coeffs().to_vec();
    let digits = |mut c: u32| -> Vec<u32> {
        (0..e)
            .map(|_| {
                let d = c % p;
                c /= p;
                d
            })
            .collect()
    };
    let mul = |a: u32, b: u32| -> u32 {
        let (da, db) = (digits(a), digits(b));
        let e = e as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for i in 0..e {
            for j in 0..e {
                prod[i + j] += da[i] as u64 * db[j] as u64;
            }
        }
        let mut prod: Vec<u32> = prod.into_iter().map(|x| (x % p as u64) as u32).collect();
        // g is monic of degree e
        for k in (e..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..e {
                let sub = (c as u64 * g[i] as u64 % p as u64) as u32;
                prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
            }
            prod[k] = 0;
        }
        prod[..e].iter().rev().fold(0, |acc, &d| acc * p + d)
    };
    let generator = smallest_generator(q, mul);
    finish(p, e, q, g.clone(), generator, mul)
}

fn smallest_generator(q: u32, mul: impl Fn(u32, u32) -> u32) -> u32 {
    if q == 2 {
        return 1;
    }
    let n = (q - 1) as u64;
    let primes = arith::prime_divisors(n);
    let pow = |mut b: u32, mut k: u64| {
        let mut acc = 1u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            k >>= 1;
        }
        acc
    };
    (1..q)
        .find(|&c| primes.iter().all(|&l| pow(c, n / l) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

fn finish(
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    mul: impl Fn(u32, u32) -> u32,
) -> Field {
    let n = (q - 1) as usize;
    let mut exp = vec![0u32; 2 * n.max(1)];
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..n {
        exp[i] = x;
        exp[i + n] = x;
        log[x as usize] = i as u32;
        x = mul(x, generator);
    }
    debug_assert_eq!(x, 1);
    let add = (e > 1 && q <= ADD_TABLE_LIMIT).then(|| {
        let mut t = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                t[(a * q + b) as usize] = digit_add(p, a, b);
            }
        }
        t
    });
    Field(Arc::new(FieldData {
        p,
        e,
        q,
        modulus,
        generator,
        exp,
        log,
        add,
    }))
}

fn digit_add(p: u32, mut a: u32, mut b: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn digit_neg(p: u32, mut a: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

impl Field {
    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the defining modulus over GF(p), ascending.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The canonical primitive element (smallest code of order q - 1).
    pub fn generator(&self) -> u32 {
        self.0.generator
    }

    pub fn contains(&self, code: u64) -> bool {
        code < self.0.q as u64
    }

    pub fn element(&self, code: u64) -> Result<FieldElement> {
        if !self.contains(code) {
            return Err(Error::ElementOutOfRange {
                code,
                q: self.0.q as u64,
            });
        }
        Ok(FieldElement {
            field: self.clone(),
            code: code as u32,
        })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let d = &*self.0;
        if d.e == 1 {
            let s = a + b;
            if s >= d.p {
                s - d.p
            } else {
                s
            }
        } else if d.p == 2 {
            a ^ b
        } else if let Some(t) = &d.add {
            t[(a * d.q + b) as usize]
        } else {
            digit_add(d.p, a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let d = &*self.0;
        if d.p == 2 {
            a
        } else if d.e == 1 {
            if a == 0 {
                0
            } else {
                d.p - a
            }
        } else {
            digit_neg(d.p, a)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &*self.0;
        d.exp[(d.log[a as usize] + d.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let d = &*self.0;
        let n = d.q - 1;
        d.exp[((n - d.log[a as usize]) % n.max(1)) as usize]
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let d = &*self.0;
        let n = (d.q - 1) as u64;
        d.exp[((d.log[a as usize] as u64 * (k % n)) % n) as usize]
    }

    /// Discrete logarithm to the canonical generator.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    /// The `p`-th root, i.e. the inverse of the Frobenius `x -> x^p`.
    pub fn pth_root(&self, a: u32) -> u32 {
        self.pow(a, (self.0.q / self.0.p) as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a as usize] as u64;
        Ok(n / arith::gcd(l, n))
    }

    /// Iterator over the nonzero element codes.
    pub fn units(&self) -> impl Iterator<Item = u32> {
        1..self.0.q
    }
}

/// An element of a [`Field`], carrying its owner.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    code: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.code, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElement {
            field: self.field.clone(),
            code: self.field.mul(self.code, other.code),
        })
    }

    pub fn pow(&self, k: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            code: self.field.pow(self.code, k),
        }
    }
}

/// `ord(x)`, the smallest positive `k` with `x^k = 1`.
pub fn elem_order(x: &FieldElement) -> Result<u64> {
    x.field.elem_order(x.code)
}

/// The primitive element of smallest code.
pub fn primitive_element(field: &Field) -> FieldElement {
    FieldElement {
        field: field.clone(),
        code: field.generator(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_field_examples() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!((f2.p(), f2.e(), f2.q()), (2, 1, 2));
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(3, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(make_field(2, 40), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn canonical_modulus_is_first_irreducible_by_brute_force() {
        // Degree 2 and 3 irreducibility is equivalent to having no root.
        for (p, e) in [(2u64, 2u32), (3, 2), (5, 2), (2, 3), (3, 3), (7, 2)] {
            let f = make_field(p, e).unwrap();
            let p32 = p as u32;
            let first = (0..p.pow(e))
                .map(|code| {
                    let mut c = code;
                    let mut v: Vec<u32> = (0..e)
                        .map(|_| {
                            let d = (c % p) as u32;
                            c /= p;
                            d
                        })
                        .collect();
                    v.push(1);
                    v
                })
                .find(|v| {
                    (0..p32).all(|x| {
                        v.iter()
                            .rev()
                            .fold(0u32, |acc, &c| (acc * x + c) % p32)
                            != 0
                    })
                })
                .unwrap();
            assert_eq!(f.modulus(), first.as_slice(), "GF({p}^{e})");
        }
    }

    #[test]
    fn elem_order_examples() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(elem_order(&f5.element(1).unwrap()).unwrap(), 1);
        assert_eq!(elem_order(&f5.element(2).unwrap()).unwrap(), 4);
        assert_eq!(elem_order(&f5.element(4).unwrap()).unwrap(), 2);
        assert_eq!(
            elem_order(&f5.element(0).unwrap()).unwrap_err(),
            Error::ZeroElement
        );
    }

    #[test]
    fn primitive_element_examples() {
        assert_eq!(primitive_element(&make_field(2, 1).unwrap()).code(), 1);
        assert_eq!(primitive_element(&make_field(5, 1).unwrap()).code(), 2);
        assert_eq!(primitive_element(&make_field(7, 1).unwrap()).code(), 3);
        // t^2 = -1 in GF(9): t has order 4, 1 + t has order 8.
        assert_eq!(primitive_element(&make_field(3, 2).unwrap()).code(), 4);
    }

    #[test]
    fn group_laws_exhaustive() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (2, 6)] {
            let f = make_field(p, e).unwrap();
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.pow(a, (q - 1) as u64), 1);
                    let ord = f.elem_order(a).unwrap();
                    assert_eq!((q - 1) as u64 % ord, 0);
                    let brute = (1..q as u64).find(|&k| f.pow(a, k) == 1).unwrap();
                    assert_eq!(ord, brute);
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [0, 1, q - 1] {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
                assert_eq!(f.pow(f.pth_root(a), p), a);
            }
        }
    }

    #[test]
    fn text_form() {
        let f: Field = "3^2".parse().unwrap();
        assert_eq!(f.to_string(), "3^2");
        assert!(matches!("3".parse::<Field>(), Err(Error::Parse(_))));
        assert_eq!("6^1".parse::<Field>().unwrap_err(), Error::NotPrime(6));
    }
}
