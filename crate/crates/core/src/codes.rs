//! Constacyclic codes of minimum distance 2.

use std::fmt;

use crate::arith;
use crate::binfactor::{depolarize, factor_binomial};
use crate::error::{Error, Result};
use crate::ext::splitting_context;
use crate::factor::Factorization;
use crate::field::Field;
use crate::minbin::{min_binomial, min_binomial_of};
use crate::poly::Poly;

/// The ideal generated by a monic divisor of `X^N - lambda` in
/// `GF(q)[X]/(X^N - lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstacyclicCode {
    pub length: u64,
    pub lambda: u32,
    pub generator: Poly,
    pub dimension: u64,
}

impl ConstacyclicCode {
    pub fn new(generator: Poly, length: u64, lambda: u32) -> Result<ConstacyclicCode> {
        check_divisor(&generator, length, lambda)?;
        let generator = generator.monic();
        let degree = generator.degree().unwrap_or(0) as u64;
        Ok(ConstacyclicCode {
            length,
            lambda,
            dimension: length - degree,
            generator,
        })
    }

    /// Parses `N=<N> lambda=<code> g=<coeffs> k=<dim>`.
    pub fn parse(field: &Field, s: &str) -> Result<ConstacyclicCode> {
        let bad = || Error::Parse(format!("malformed code line {s:?}"));
        let parts: Vec<&str> = s.split_whitespace().collect();
        let [n, lambda, g, k] = parts.as_slice() else {
            return Err(bad());
        };
        let value = |part: &str, key: &str| -> Result<String> {
            part.strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .map(str::to_owned)
                .ok_or_else(bad)
        };
        let length: u64 = value(n, "N")?.parse().map_err(|_| bad())?;
        let lambda: u32 = value(lambda, "lambda")?.parse().map_err(|_| bad())?;
        let generator = Poly::parse(field, &value(g, "g")?)?;
        let dimension: u64 = value(k, "k")?.parse().map_err(|_| bad())?;
        let code = ConstacyclicCode::new(generator, length, lambda)?;
        if code.dimension != dimension {
            return Err(bad());
        }
        Ok(code)
    }
}

impl fmt::Display for ConstacyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N={} lambda={} g={} k={}",
            self.length, self.lambda, self.generator, self.dimension
        )
    }
}

fn check_divisor(f: &Poly, length: u64, lambda: u32) -> Result<()> {
    let field = f.field();
    if field.element(lambda as u64)?.is_zero() {
        return Err(Error::ZeroElement);
    }
    if length == 0 {
        return Err(Error::ZeroLength);
    }
    let big = Poly::binomial(field, length as usize, lambda);
    if f.is_zero() || !f.divides(&big) {
        return Err(Error::NotAGenerator { length, lambda });
    }
    Ok(())
}

/// Binomials of degree below `N` dividing `X^N - lambda`, deduplicated and
/// sorted.
pub fn proper_binomial_factors(field: &Field, length: u64, lambda: u32) -> Result<Vec<Poly>> {
    let shape = depolarize(field, length, lambda)?;
    let (n, r, delta, v) = (shape.n, shape.r, shape.delta, shape.v);
    let p = field.p() as u64;
    let q = field.q() as u64;
    let mut out = Vec::new();
    for u in 0..v {
        let pu = p.pow(u);
        out.push(Poly::binomial(
            field,
            (n * pu) as usize,
            field.pow(shape.lambda_prime, pu),
        ));
    }
    let ctx = splitting_context(field, shape.modulus())?;
    for d in arith::divisors(n).into_iter().filter(|&d| d > 1) {
        let step = d / arith::gcd(d, (q - 1) / r);
        if arith::gcd(step, r) != 1 {
            continue;
        }
        for j in (0..d).filter(|j| (r * j + delta) % step == 0) {
            let c = ctx.zeta_pow(((delta + r * j) * (n / d)) as i64);
            let mu = ctx.in_base_field(&c).ok_or_else(|| {
                Error::Inconsistent(format!("constant for d={d}, j={j} is not in {field}"))
            })?;
            for w in 0..=v {
                let pw = p.pow(w);
                out.push(Poly::binomial(field, (n / d * pw) as usize, field.pow(mu, pw)));
            }
        }
    }
    out.sort();
    out.dedup();
    let big = Poly::binomial(field, length as usize, lambda);
    if let Some(bad) = out.iter().find(|b| !b.divides(&big)) {
        return Err(Error::Inconsistent(format!("{bad} does not divide X^{length} - {lambda}")));
    }
    Ok(out)
}

/// The code `(f)` has minimum distance 2 iff the minimal binomial multiple
/// of `f` has degree below `N`.
pub fn has_min_distance_two(f: &Poly, length: u64, lambda: u32) -> Result<bool> {
    check_divisor(f, length, lambda)?;
    let degree = f.degree().unwrap_or(0);
    if degree == 0 || degree as u64 >= length {
        return Err(Error::TrivialCode { degree, length });
    }
    Ok(min_binomial(f)?.n < length)
}

/// Every monic divisor of the polynomial factored as `fact`, with its
/// multiplicity vector.
pub fn monic_divisors(fact: &Factorization) -> Vec<(Poly, Vec<u64>)> {
    let field = fact.field();
    let mut out = vec![(Poly::one(field), Vec::new())];
    for (g, h) in &fact.factors {
        let mut next = Vec::with_capacity(out.len() * (*h as usize + 1));
        for (d, exps) in &out {
            let mut acc = d.clone();
            for e in 0..=*h {
                if e > 0 {
                    acc = &acc * g;
                }
                let mut exps = exps.clone();
                exps.push(e);
                next.push((acc.clone(), exps));
            }
        }
        out = next;
    }
    out
}

/// All distance-2 codes of length `N`, sorted by generator.
pub fn enumerate_distance_two_codes(
    field: &Field,
    length: u64,
    lambda: u32,
) -> Result<Vec<ConstacyclicCode>> {
    let fact = factor_binomial(field, length, lambda)?;
    let mut codes = Vec::new();
    for (g, exps) in monic_divisors(&fact) {
        let degree = g.degree().unwrap_or(0) as u64;
        if degree == 0 || degree >= length {
            continue;
        }
        let sub = Factorization::new(
            field,
            1,
            fact.factors
                .iter()
                .zip(&exps)
                .filter(|(_, &e)| e > 0)
                .map(|((h, _), &e)| (h.clone(), e))
                .collect(),
        );
        if min_binomial_of(&sub)?.n < length {
            codes.push(ConstacyclicCode {
                length,
                lambda,
                dimension: length - degree,
                generator: g,
            });
        }
    }
    codes.sort_by(|a, b| a.generator.cmp(&b.generator));
    Ok(codes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn strings(v: &[Poly]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn proper_binomial_factor_examples() {
        let f3 = make_field(3, 1).unwrap();
        assert!(proper_binomial_factors(&f3, 2, 2).unwrap().is_empty());
        assert_eq!(
            strings(&proper_binomial_factors(&f3, 4, 1).unwrap()),
            ["1,1", "2,1", "1,0,1", "2,0,1"]
        );
        for p in [2, 3, 5, 7] {
            let field = make_field(p, 1).unwrap();
            let got = proper_binomial_factors(&field, p, 1).unwrap();
            assert_eq!(got, vec![Poly::binomial(&field, 1, 1)]);
        }
    }

    #[test]
    fn distance_two_examples() {
        let f3 = make_field(3, 1).unwrap();
        assert!(has_min_distance_two(&Poly::parse(&f3, "2,1").unwrap(), 4, 1).unwrap());
        let f2 = make_field(2, 1).unwrap();
        assert!(!has_min_distance_two(&Poly::parse(&f2, "1,1,1").unwrap(), 3, 1).unwrap());
        assert!(matches!(
            has_min_distance_two(&Poly::parse(&f3, "1,0,1").unwrap(), 2, 2),
            Err(Error::TrivialCode { .. })
        ));
        assert!(matches!(
            has_min_distance_two(&Poly::parse(&f3, "1,1,1").unwrap(), 4, 1),
            Err(Error::NotAGenerator { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let f3 = make_field(3, 1).unwrap();
        assert!(enumerate_distance_two_codes(&f3, 2, 2).unwrap().is_empty());
        let codes = enumerate_distance_two_codes(&f3, 4, 1).unwrap();
        let gens: Vec<String> = codes.iter().map(|c| c.generator.to_string()).collect();
        assert!(gens.contains(&"2,1".to_string()));
        assert!(gens.contains(&"1,1".to_string()));
        assert!(gens.contains(&"1,0,1".to_string()));
        let f2 = make_field(2, 1).unwrap();
        let codes = enumerate_distance_two_codes(&f2, 3, 1).unwrap();
        assert_eq!(codes.len(), 1);
        assert_eq!(codes[0].to_string(), "N=3 lambda=1 g=1,1 k=2");
    }

    #[test]
    fn divisor_count() {
        let f2 = make_field(2, 1).unwrap();
        let fact = factor_binomial(&f2, 6, 1).unwrap();
        // (X+1)^2 (X^2+X+1)^2
        assert_eq!(monic_divisors(&fact).len(), 9);
    }

    #[test]
    fn text_round_trip() {
        let f5 = make_field(5, 1).unwrap();
        for code in enumerate_distance_two_codes(&f5, 8, 2).unwrap() {
            let line = code.to_string();
            assert_eq!(ConstacyclicCode::parse(&f5, &line).unwrap(), code);
        }
        assert!(ConstacyclicCode::parse(&f5, "N=8 lambda=2 g=1,1 k=7").is_err());
    }
}
