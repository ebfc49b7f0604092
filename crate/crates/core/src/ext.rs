//! Extensions GF(q^k) of a base field and canonical roots of unity.
//!
//! GF(q^k) is realized as the tower GF(q)[s]/(h(s)) where `h` is the
//! canonical (smallest code) monic irreducible of degree `k` over the base.
//! Base elements embed as constants, so the Frobenius-fixed elements are
//! exactly the constant residues.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{canonical_irreducible, Field};
use crate::poly::Poly;

/// Element of an [`ExtField`]: `k` base-field codes, ascending in `s`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElem(Vec<u32>);

impl ExtElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The field GF(q^k) over a fixed base GF(q).
pub struct ExtField {
    base: Field,
    degree: usize,
    modulus: Vec<u32>,
    order: u64,
    generator: ExtElem,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(({})^{})", self.base, self.degree)
    }
}

type ExtCache = Mutex<HashMap<(u32, u32, usize), Arc<ExtField>>>;

fn cache() -> &'static ExtCache {
    static CACHE: OnceLock<ExtCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl ExtField {
    /// Builds (or fetches) the canonical degree-`k` extension of `base`.
    pub fn new(base: &Field, k: usize) -> Result<Arc<ExtField>> {
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let key = (base.p(), base.e(), k);
        if let Some(ext) = cache().lock().unwrap().get(&key) {
            return Ok(ext.clone());
        }
        let order = u32::try_from(k)
            .ok()
            .and_then(|k| (base.q() as u64).checked_pow(k))
            .filter(|&n| n < 1 << 62)
            .ok_or_else(|| Error::FieldTooLarge(format!("({base})^{k}")))?;
        let modulus = canonical_irreducible(base, k)?.into_coeffs();
        let mut ext = ExtField {
            base: base.clone(),
            degree: k,
            modulus,
            order,
            generator: ExtElem(vec![0; k]),
        };
        ext.generator = ext.find_generator();
        let ext = Arc::new(ext);
        let mut guard = cache().lock().unwrap();
        Ok(guard.entry(key).or_insert(ext).clone())
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// Extension degree `k` over the base.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Cardinality `q^k`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients of the defining polynomial over the base.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The canonical primitive element: smallest code of order `q^k - 1`.
    pub fn generator(&self) -> &ExtElem {
        &self.generator
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem(vec![0; self.degree])
    }

    pub fn one(&self) -> ExtElem {
        self.from_base(1)
    }

    pub fn from_base(&self, c: u32) -> ExtElem {
        let mut v = vec![0; self.degree];
        v[0] = c;
        ExtElem(v)
    }

    /// Element with integer code `sum c_i q^i`.
    pub fn from_code(&self, mut code: u64) -> ExtElem {
        let q = self.base.q() as u64;
        ExtElem(
            (0..self.degree)
                .map(|_| {
                    let c = (code % q) as u32;
                    code /= q;
                    c
                })
                .collect(),
        )
    }

    pub fn code(&self, x: &ExtElem) -> u64 {
        let q = self.base.q() as u64;
        x.0.iter().rev().fold(0, |acc, &c| acc * q + c as u64)
    }

    /// The base code of `x` if it is a constant residue.
    pub fn as_base(&self, x: &ExtElem) -> Option<u32> {
        x.0[1..].iter().all(|&c| c == 0).then_some(x.0[0])
    }

    pub fn is_zero(&self, x: &ExtElem) -> bool {
        x.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = &self.base;
        ExtElem(a.0.iter().zip(&b.0).map(|(&x, &y)| f.add(x, y)).collect())
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = &self.base;
        ExtElem(a.0.iter().zip(&b.0).map(|(&x, &y)| f.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        let f = &self.base;
        ExtElem(a.0.iter().map(|&x| f.neg(x)).collect())
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = &self.base;
        let k = self.degree;
        let mut prod = vec![0u32; 2 * k - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = f.add(prod[i + j], f.mul(x, y));
                }
            }
        }
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for i in 0..k {
                let idx = top - k + i;
                prod[idx] = f.sub(prod[idx], f.mul(c, self.modulus[i]));
            }
        }
        prod.truncate(k);
        ExtElem(prod)
    }

    pub fn scale(&self, a: &ExtElem, c: u32) -> ExtElem {
        let f = &self.base;
        ExtElem(a.0.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn pow(&self, a: &ExtElem, mut n: u64) -> ExtElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn inv(&self, a: &ExtElem) -> Option<ExtElem> {
        (!self.is_zero(a)).then(|| self.pow(a, self.order - 2))
    }

    /// The Frobenius image `a^q`.
    pub fn frobenius(&self, a: &ExtElem) -> ExtElem {
        self.pow(a, self.base.q() as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: &ExtElem) -> Result<u64> {
        if self.is_zero(a) {
            return Err(Error::ZeroElement);
        }
        let n = self.order - 1;
        let mut ord = n;
        for (l, _) in arith::factorize(n) {
            while ord.is_multiple_of(l) && self.pow(a, ord / l) == self.one() {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// Evaluates a base-field polynomial at an extension element.
    pub fn eval(&self, f: &Poly, x: &ExtElem) -> ExtElem {
        debug_assert_eq!(f.field(), &self.base);
        f.coeffs().iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, x), &self.from_base(c))
        })
    }

    /// Coefficients (ascending) of `prod (X - r)` over the roots given.
    pub fn poly_from_roots<'a, I>(&self, roots: I) -> Vec<ExtElem>
    where
        I: IntoIterator<Item = &'a ExtElem>,
    {
        let mut acc = vec![self.one()];
        for r in roots {
            let neg_r = self.neg(r);
            let mut next = vec![self.zero(); acc.len() + 1];
            for (i, c) in acc.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], c);
                next[i] = self.add(&next[i], &self.mul(c, &neg_r));
            }
            acc = next;
        }
        acc
    }

    /// Maps extension coefficients down to a base polynomial, failing if
    /// any coefficient lies outside the base field.
    pub fn descend(&self, coeffs: &[ExtElem]) -> Option<Poly> {
        let v = coeffs
            .iter()
            .map(|c| self.as_base(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::new(&self.base, v))
    }

    fn find_generator(&self) -> ExtElem {
        let n = self.order - 1;
        if n == 1 {
            return self.one();
        }
        let primes = arith::prime_divisors(n);
        (1..self.order)
            .map(|c| self.from_code(c))
            .find(|g| primes.iter().all(|&l| self.pow(g, n / l) != self.one()))
            .expect("multiplicative group of a finite field is cyclic")
    }
}

/// A splitting field for `X^m - 1` over the base, with the canonical
/// primitive `m`-th root of unity `zeta_m = g^((q^k - 1)/m)`.
#[derive(Clone)]
pub struct SplittingContext {
    ext: Arc<ExtField>,
    m: u64,
    zeta: ExtElem,
}

impl fmt::Debug for SplittingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SplittingContext(m={}, {:?})", self.m, self.ext)
    }
}

impl SplittingContext {
    pub fn ext(&self) -> &ExtField {
        &self.ext
    }

    pub fn base(&self) -> &Field {
        self.ext.base()
    }

    /// The root-of-unity order `m`.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// `k = ord_m(q)`.
    pub fn degree(&self) -> usize {
        self.ext.degree()
    }

    pub fn zeta(&self) -> &ExtElem {
        &self.zeta
    }

    /// `zeta_m^j` for any integer exponent `j`, reduced mod `m`.
    pub fn zeta_pow(&self, j: i64) -> ExtElem {
        self.ext.pow(&self.zeta, j.rem_euclid(self.m as i64) as u64)
    }

    /// The compatible `zeta_d = zeta_m^(m/d)` for `d | m`.
    pub fn root_of_unity(&self, d: u64) -> Result<ExtElem> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(Error::NotDivisor { n: d, big: self.m });
        }
        Ok(self.ext.pow(&self.zeta, self.m / d))
    }

    /// Base-field value of `x` when `x^q = x`.
    pub fn in_base_field(&self, x: &ExtElem) -> Option<u32> {
        in_base_field(&self.ext, x)
    }
}

/// Builds GF(q^k), `k = ord_m(q)`, and its canonical `zeta_m`.
pub fn splitting_context(field: &Field, m: u64) -> Result<SplittingContext> {
    if m == 0 || m.is_multiple_of(field.p() as u64) {
        return Err(Error::NotCoprime {
            n: m,
            q: field.q() as u64,
        });
    }
    let k = arith::multiplicative_order(field.q() as u64, m)?;
    let ext = ExtField::new(field, k as usize)?;
    let zeta = ext.pow(ext.generator(), (ext.order() - 1) / m);
    Ok(SplittingContext { ext, m, zeta })
}

/// Returns the base element equal to `x` when `x` is fixed by Frobenius.
pub fn in_base_field(ext: &ExtField, x: &ExtElem) -> Option<u32> {
    if ext.frobenius(x) != *x {
        return None;
    }
    let c = ext.as_base(x);
    debug_assert!(c.is_some(), "Frobenius-fixed element is not a constant");
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn splitting_context_examples() {
        let f3 = make_field(3, 1).unwrap();
        let c1 = splitting_context(&f3, 1).unwrap();
        assert_eq!(c1.degree(), 1);
        assert_eq!(c1.zeta(), &c1.ext().one());

        let c4 = splitting_context(&f3, 4).unwrap();
        assert_eq!(c4.degree(), 2);
        assert_eq!(c4.ext().elem_order(c4.zeta()).unwrap(), 4);

        let f2 = make_field(2, 1).unwrap();
        assert_eq!(splitting_context(&f2, 15).unwrap().degree(), 4);
        assert!(matches!(
            splitting_context(&f3, 6),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn in_base_field_examples() {
        let f3 = make_field(3, 1).unwrap();
        let c4 = splitting_context(&f3, 4).unwrap();
        assert_eq!(c4.in_base_field(&c4.ext().one()), Some(1));
        assert_eq!(c4.in_base_field(c4.zeta()), None);
        assert_eq!(c4.in_base_field(&c4.zeta_pow(2)), Some(2));
    }

    #[test]
    fn zeta_has_exact_order() {
        for (p, e) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = make_field(p, e).unwrap();
            for m in 1..=40u64 {
                if m % p == 0 {
                    continue;
                }
                let ctx = match splitting_context(&f, m) {
                    Ok(ctx) => ctx,
                    Err(Error::FieldTooLarge(_)) => continue,
                    Err(e) => panic!("{e}"),
                };
                assert_eq!(ctx.ext().elem_order(ctx.zeta()).unwrap(), m, "m={m}");
                for d in arith::divisors(m) {
                    if d < m {
                        assert_ne!(ctx.zeta_pow(d as i64), ctx.ext().one());
                    }
                }
            }
        }
    }

    #[test]
    fn compatible_family_in_common_ambient_field() {
        let f2 = make_field(2, 1).unwrap();
        // ord_15(2) = ord_5(2) = 4, so both contexts share GF(16)
        let big = splitting_context(&f2, 15).unwrap();
        let small = splitting_context(&f2, 5).unwrap();
        assert_eq!(big.degree(), small.degree());
        assert_eq!(&big.root_of_unity(5).unwrap(), small.zeta());
        // zeta_3 lives in GF(4), a different tower; inside GF(16) the
        // compatible choice is zeta_15^5.
        let z3 = big.root_of_unity(3).unwrap();
        assert_eq!(z3, big.zeta_pow(5));
        assert_eq!(big.ext().elem_order(&z3).unwrap(), 3);
        assert!(big.root_of_unity(4).is_err());
    }

    #[test]
    fn field_axioms_in_small_towers() {
        let f3 = make_field(3, 1).unwrap();
        let ext = ExtField::new(&f3, 3).unwrap();
        assert_eq!(ext.order(), 27);
        assert_eq!(ext.elem_order(ext.generator()).unwrap(), 26);
        for a in 0..27 {
            let x = ext.from_code(a);
            assert_eq!(ext.code(&x), a);
            if a != 0 {
                assert_eq!(ext.mul(&x, &ext.inv(&x).unwrap()), ext.one());
            }
            let fixed = ext.frobenius(&x) == x;
            assert_eq!(fixed, a < 3);
            assert_eq!(in_base_field(&ext, &x).is_some(), a < 3);
        }
    }

    #[test]
    fn largest_sweep_extension_builds() {
        let f5 = make_field(5, 1).unwrap();
        let ctx = splitting_context(&f5, 46).unwrap();
        assert_eq!(ctx.degree(), 22);
        assert_eq!(ctx.ext().elem_order(ctx.zeta()).unwrap(), 46);
    }
}
