//! Residue-class machinery on Z/nZ: cyclotomic cosets, defining sets,
//! the embeddings Z/nZ -> Z/NZ and equal-difference subsets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};
use crate::ext::{splitting_context, SplittingContext};
use crate::factor::{self, Factorization};
use crate::poly::Poly;

/// The orbit `{g, gq, gq^2, ...}` of `g` in Z/nZ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclotomicCoset {
    pub modulus: u64,
    pub q: u64,
    /// Smallest member.
    pub representative: u64,
    /// Sorted members.
    pub members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl fmt::Display for CyclotomicCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.members, self.modulus)
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, elems: &[u64], modulus: u64) -> fmt::Result {
    write!(f, "{{")?;
    for (i, x) in elems.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "}} mod {modulus}")
}

/// Parses `{a,b,c} mod n` into sorted elements and the modulus.
pub fn parse_set(s: &str) -> Result<(Vec<u64>, u64)> {
    let bad = || Error::Parse(format!("set must look like {{a,b}} mod n, got {s:?}"));
    let (body, modulus) = s.trim().split_once(" mod ").ok_or_else(bad)?;
    let modulus: u64 = modulus.trim().parse().map_err(|_| bad())?;
    let inner = body
        .trim()
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(bad)?;
    let mut elems = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?
    };
    elems.sort_unstable();
    Ok((elems, modulus))
}

fn check_coprime(n: u64, q: u64) -> Result<()> {
    if n == 0 || arith::gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(())
}

/// `c_{n/q}(gamma)`.
pub fn cyclotomic_coset(n: u64, q: u64, gamma: u64) -> Result<CyclotomicCoset> {
    check_coprime(n, q)?;
    let start = gamma % n;
    let mut members = vec![start];
    let mut x = arith::mul_mod(start, q, n);
    while x != start {
        members.push(x);
        x = arith::mul_mod(x, q, n);
    }
    members.sort_unstable();
    Ok(CyclotomicCoset {
        modulus: n,
        q,
        representative: members[0],
        members,
    })
}

/// All q-cyclotomic cosets modulo `n`, ordered by representative.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    check_coprime(n, q)?;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for g in 0..n {
        if seen[g as usize] {
            continue;
        }
        let c = cyclotomic_coset(n, q, g)?;
        for &x in &c.members {
            seen[x as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Image of `t` under `a -> a * big / n`, sorted.
pub fn embed(t: &[u64], n: u64, big: u64) -> Result<Vec<u64>> {
    if n == 0 || !big.is_multiple_of(n) {
        return Err(Error::NotDivisor { n, big });
    }
    let s = big / n;
    let mut out: Vec<u64> = t.iter().map(|&a| (a % n) * s).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A subset of Z/mZ given as a disjoint union of q-cyclotomic cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    pub modulus: u64,
    /// Sorted by representative.
    pub cosets: Vec<CyclotomicCoset>,
}

impl DefiningSet {
    /// Sorts the cosets and checks that they are pairwise disjoint.
    pub fn from_cosets(modulus: u64, mut cosets: Vec<CyclotomicCoset>) -> Result<DefiningSet> {
        cosets.sort_by_key(|c| c.representative);
        cosets.dedup();
        let total: usize = cosets.iter().map(|c| c.size()).sum();
        let distinct: BTreeSet<u64> = cosets.iter().flat_map(|c| c.members.iter().copied()).collect();
        if distinct.len() != total || cosets.iter().any(|c| c.modulus != modulus) {
            return Err(Error::Inconsistent("cosets overlap".into()));
        }
        Ok(DefiningSet { modulus, cosets })
    }

    pub fn representatives(&self) -> Vec<u64> {
        self.cosets.iter().map(|c| c.representative).collect()
    }

    pub fn elements(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .cosets
            .iter()
            .flat_map(|c| c.members.iter().copied())
            .collect();
        v.sort_unstable();
        v
    }

    pub fn len(&self) -> usize {
        self.cosets.iter().map(|c| c.size()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

impl fmt::Display for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.elements(), self.modulus)
    }
}

/// Primitive defining set of a squarefree `f` with `f(0) != 0`; the modulus
/// is `ord(f)`.
pub fn defining_set(f: &Poly) -> Result<DefiningSet> {
    let fact = squarefree_factorization(f)?;
    let m = factor::order_from_factorization(&fact)?;
    let ctx = splitting_context(f.field(), m)?;
    defining_set_from(&fact, &ctx)
}

/// Like [`defining_set`], but relative to the compatible root of unity
/// `zeta_m = zeta_M^(M/m)` of an ambient context with `m | M`.
pub fn defining_set_in(f: &Poly, ctx: &SplittingContext) -> Result<DefiningSet> {
    defining_set_from(&squarefree_factorization(f)?, ctx)
}

fn squarefree_factorization(f: &Poly) -> Result<Factorization> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if f.constant_term() == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    let fact = factor::factorize(f)?;
    if !fact.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(fact)
}

pub(crate) fn defining_set_from(fact: &Factorization, ctx: &SplittingContext) -> Result<DefiningSet> {
    let field = fact.field();
    let q = field.q() as u64;
    let ext = ctx.ext();
    let m = factor::order_from_factorization(fact)?;
    if !ctx.m().is_multiple_of(m) {
        return Err(Error::NotDivisor { n: m, big: ctx.m() });
    }
    let mut cosets = Vec::with_capacity(fact.factors.len());
    for (g, _) in &fact.factors {
        let single = Factorization::new(field, 1, vec![(g.clone(), 1)]);
        let mg = factor::order_from_factorization(&single)?;
        // roots of g are the primitive mg-th roots zeta_mg^j, gcd(j, mg) = 1
        let step = ctx.root_of_unity(mg)?;
        let mut cur = ext.one();
        let mut found = None;
        for j in 0..mg {
            if arith::gcd(j, mg) == 1 && ext.is_zero(&ext.eval(g, &cur)) {
                found = Some(j);
                break;
            }
            cur = ext.mul(&cur, &step);
        }
        let j = found.ok_or_else(|| {
            Error::Inconsistent(format!("no root of {g} among the {mg}-th roots of unity"))
        })?;
        let coset = cyclotomic_coset(m, q, j * (m / mg))?;
        if coset.size() != g.degree().unwrap_or(0) {
            return Err(Error::Inconsistent(format!(
                "coset size {} differs from degree of {g}",
                coset.size()
            )));
        }
        cosets.push(coset);
    }
    DefiningSet::from_cosets(m, cosets)
}

/// `{offset + j * difference : 0 <= j < modulus / difference}` in Z/mZ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EqualDifferenceSet {
    pub modulus: u64,
    pub offset: u64,
    pub difference: u64,
}

impl EqualDifferenceSet {
    pub fn new(modulus: u64, offset: u64, difference: u64) -> Result<EqualDifferenceSet> {
        if difference == 0 || !modulus.is_multiple_of(difference) {
            return Err(Error::NotDivisor {
                n: difference,
                big: modulus,
            });
        }
        Ok(EqualDifferenceSet {
            modulus,
            offset: offset % difference,
            difference,
        })
    }

    pub fn len(&self) -> u64 {
        self.modulus / self.difference
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u64) -> bool {
        (x % self.modulus) % self.difference == self.offset
    }

    pub fn elements(&self) -> Vec<u64> {
        (0..self.len())
            .map(|j| self.offset + j * self.difference)
            .collect()
    }
}

/// `offset + d·Z mod m`
impl fmt::Display for EqualDifferenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}·Z mod {}",
            self.offset, self.difference, self.modulus
        )
    }
}

impl FromStr for EqualDifferenceSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `g + d·Z mod m`, got {s:?}"));
        let (lhs, m) = s.trim().split_once(" mod ").ok_or_else(bad)?;
        let (g, d) = lhs.split_once(" + ").ok_or_else(bad)?;
        let d = d.trim().strip_suffix("·Z").ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        EqualDifferenceSet::new(num(m)?, num(g)?, num(d)?).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Recognizes an arithmetic progression `{g, g+d, ...}` with `d = m/|S|`.
pub fn is_equal_difference(s: &[u64], m: u64) -> Result<Option<EqualDifferenceSet>> {
    if m == 0 {
        return Err(Error::NotDivisor { n: 0, big: 0 });
    }
    let set: BTreeSet<u64> = s.iter().map(|&x| x % m).collect();
    let Some(&first) = set.iter().next() else {
        return Err(Error::EmptySet);
    };
    let size = set.len() as u64;
    if !m.is_multiple_of(size) {
        return Ok(None);
    }
    let d = m / size;
    if set.iter().all(|&x| x % d == first % d) {
        Ok(Some(EqualDifferenceSet::new(m, first, d)?))
    } else {
        Ok(None)
    }
}

/// Whether the binomial induced by `e` has coefficients in GF(q), i.e.
/// `gamma * q == gamma (mod d)`.
pub fn is_defined_over_base(e: &EqualDifferenceSet, q: u64) -> Result<bool> {
    check_coprime(e.modulus, q)?;
    Ok(arith::mul_mod(e.offset, q - 1, e.difference) == 0)
}

/// The equal-difference superset of `t` over GF(q) with the largest common
/// difference `d_f = gcd(g_2 - g_1, ..., g_t - g_{t-1}, m, q - 1)`.
pub fn minimal_equal_difference_cover(t: &DefiningSet, q: u64) -> Result<EqualDifferenceSet> {
    let reps = t.representatives();
    let first = *reps.first().ok_or(Error::EmptySet)?;
    let diffs = reps.windows(2).map(|w| w[1] - w[0]);
    let d = arith::gcd_all(diffs.chain([t.modulus, q - 1]));
    EqualDifferenceSet::new(t.modulus, first, d)
}
