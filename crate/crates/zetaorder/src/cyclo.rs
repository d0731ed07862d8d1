//! Exact arithmetic in cyclotomic fields Q(ζ_m), the value domain for all
//! characters and local-factor coefficients.
//!
//! Elements are stored on the Zumbroich basis of Q(ζ_m): exponents whose
//! residue modulo each maximal prime power q = p^a ∥ m avoids a fixed window
//! of size q/p. Representation on the basis is unique, so equality at a
//! common conductor is coefficient equality. Conductors are lcm-merged
//! eagerly on every binary operation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: BTreeMap<u32, Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.merged(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic {
            conductor: 1,
            coeffs,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// ζ_m^e.
    pub fn root_of_unity(m: u32, e: i64) -> Self {
        assert!(m >= 1);
        let e = e.rem_euclid(m as i64) as u32;
        Cyclotomic {
            conductor: m,
            coeffs: reduce(m, vec![(e, Rational::one())]),
        }
    }

    /// Σ c_e ζ_m^e from raw terms.
    pub fn from_terms(m: u32, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let raw: Vec<(u32, Rational)> = terms
            .into_iter()
            .map(|(e, c)| (e.rem_euclid(m as i64) as u32, c))
            .collect();
        Cyclotomic {
            conductor: m,
            coeffs: reduce(m, raw),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Basis terms (exponent, coefficient), sorted by exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Rewrites the element at conductor `target` (a multiple of the current
    /// conductor).
    pub fn raise_conductor(&self, target: u32) -> Cyclotomic {
        assert_eq!(target % self.conductor, 0);
        if target == self.conductor {
            return self.clone();
        }
        let scale = target / self.conductor;
        let raw: Vec<(u32, Rational)> = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e * scale, c.clone()))
            .collect();
        Cyclotomic {
            conductor: target,
            coeffs: reduce(target, raw),
        }
    }

    fn merged(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = num_integer::lcm(self.conductor, other.conductor);
        (self.raise_conductor(m), other.raise_conductor(m))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.merged(other);
        let mut coeffs = a.coeffs;
        for (e, c) in b.coeffs {
            let entry = coeffs.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        Cyclotomic {
            conductor: a.conductor,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        let (a, b) = self.merged(other);
        let m = a.conductor;
        let mut raw: Vec<(u32, Rational)> = Vec::with_capacity(a.coeffs.len() * b.coeffs.len());
        for (&e1, c1) in &a.coeffs {
            for (&e2, c2) in &b.coeffs {
                raw.push(((e1 + e2) % m, c1 * c2));
            }
        }
        Cyclotomic {
            conductor: m,
            coeffs: reduce(m, raw),
        }
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }

    /// Galois automorphism ζ_m ↦ ζ_m^k, gcd(k, m) = 1.
    pub fn galois(&self, k: u32) -> Cyclotomic {
        let m = self.conductor;
        assert_eq!(num_integer::gcd(k, m), 1, "k must be invertible mod m");
        let raw: Vec<(u32, Rational)> = self
            .coeffs
            .iter()
            .map(|(&e, c)| ((e as u64 * k as u64 % m as u64) as u32, c.clone()))
            .collect();
        Cyclotomic {
            conductor: m,
            coeffs: reduce(m, raw),
        }
    }

    /// Complex conjugation ζ^e ↦ ζ^{−e}.
    pub fn conj(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// The rational number this element equals, if any.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs.is_empty() {
            return Some(Rational::zero());
        }
        let one = Cyclotomic::from_rational(Rational::one()).raise_conductor(self.conductor);
        let (&e0, c0) = one.coeffs.iter().next().unwrap();
        let candidate = self.coeffs.get(&e0)? / c0;
        if *self == one.scale(&candidate) {
            Some(candidate)
        } else {
            None
        }
    }

    /// The rational integer this element equals, if any.
    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().map(|r| r.is_one()).unwrap_or(false)
    }

    /// Total order for deterministic sorting: by merged-conductor basis
    /// representation.
    pub fn cmp_key(&self, other: &Cyclotomic) -> Ordering {
        let (a, b) = self.merged(other);
        let av: Vec<_> = a.coeffs.into_iter().collect();
        let bv: Vec<_> = b.coeffs.into_iter().collect();
        av.cmp(&bv)
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<(u32, String)> = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e, format!("{}/{}", c.numer(), c.denom())))
            .collect();
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("m", &self.conductor)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            m: u32,
            terms: Vec<(u32, String)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (e, c) in raw.terms {
            let (num, den) = c.split_once('/').ok_or_else(|| {
                serde::de::Error::custom("coefficient must be written num/den")
            })?;
            let num: BigInt = num.parse().map_err(serde::de::Error::custom)?;
            let den: BigInt = den.parse().map_err(serde::de::Error::custom)?;
            if den.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            terms.push((e as i64, Rational::new(num, den)));
        }
        Ok(Cyclotomic::from_terms(raw.m.max(1), terms))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // Rational values print as plain rationals regardless of the
        // stored conductor.
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", r);
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "z{}^{}", self.conductor, e)?;
            } else {
                write!(f, "{}*z{}^{}", c, self.conductor, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Reduces raw (exponent, coefficient) terms at conductor m onto the
/// Zumbroich basis.
fn reduce(m: u32, raw: Vec<(u32, Rational)>) -> BTreeMap<u32, Rational> {
    let factors = prime_powers(m);
    let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
    let mut work = raw;
    while let Some((e, c)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        match first_bad_prime(m, e, &factors) {
            None => {
                let entry = out.entry(e).or_insert_with(Rational::zero);
                *entry += c;
                if entry.is_zero() {
                    out.remove(&e);
                }
            }
            Some(&(p, _q)) => {
                // ζ^e = −Σ_{k=1}^{p−1} ζ^{e + k·(m/p)}; for p = 2 this is
                // ζ^e = −ζ^{e + m/2}.
                let step = m / p;
                let neg = -c;
                for k in 1..p {
                    work.push((((e as u64 + (k as u64 * step as u64)) % m as u64) as u32, neg.clone()));
                }
            }
        }
    }
    out
}

/// Maximal prime powers (p, p^a) of m.
fn prime_powers(m: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut q = 1;
            while rest % p == 0 {
                rest /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if rest > 1 {
        out.push((rest, rest));
    }
    out
}

fn first_bad_prime<'a>(m: u32, e: u32, factors: &'a [(u32, u32)]) -> Option<&'a (u32, u32)> {
    factors.iter().find(|&&(p, q)| !good_at(m, e, p, q))
}

/// Zumbroich basis condition at one maximal prime power q = p^a ∥ m: with
/// t = e·(m/q)^{-1} mod q, odd p excludes |t| ≤ (q/p − 1)/2 and p = 2
/// excludes t ≥ q/2.
fn good_at(m: u32, e: u32, p: u32, q: u32) -> bool {
    let mq = m / q;
    let t = (e as u64 * mod_inverse(mq % q, q) as u64 % q as u64) as u32;
    if p == 2 {
        t < q / 2
    } else {
        let h = (q / p - 1) / 2;
        !(t <= h || t >= q - h)
    }
}

fn mod_inverse(a: u32, modulus: u32) -> u32 {
    if modulus == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (modulus as i64, (a % modulus) as i64);
    while new_r != 0 {
        let quotient = r / new_r;
        (t, new_t) = (new_t, t - quotient * new_t);
        (r, new_r) = (new_r, r - quotient * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(modulus as i64) as u32
}

/// Basis terms of an integer-coefficient element as (exponent, i64), or
/// None if some coefficient is not a small integer.
pub fn int_terms(x: &Cyclotomic) -> Option<Vec<(u32, i64)>> {
    x.coeffs
        .iter()
        .map(|(&e, c)| {
            if !c.denom().is_one() {
                return None;
            }
            i64::try_from(c.numer()).ok().map(|n| (e, n))
        })
        .collect()
}

/// In-place Zumbroich reduction of a dense integer coefficient vector
/// indexed by exponent mod m. One pass per prime suffices: rewriting a bad
/// exponent at p lands on exponents good at p and leaves residues at every
/// other prime untouched.
pub fn reduce_dense_i64(m: u32, acc: &mut [i64]) {
    assert_eq!(acc.len(), m as usize);
    for &(p, q) in &prime_powers(m) {
        let step = (m / p) as usize;
        for e in 0..m as usize {
            if acc[e] == 0 || good_at(m, e as u32, p, q) {
                continue;
            }
            let c = acc[e];
            acc[e] = 0;
            let mut slot = e;
            for _ in 1..p {
                slot = (slot + step) % m as usize;
                acc[slot] -= c;
            }
        }
    }
}

/// Builds a Cyclotomic from an already-reduced dense integer vector.
pub fn from_reduced_dense(m: u32, acc: &[i64]) -> Cyclotomic {
    let coeffs = acc
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| (e as u32, rat_int(c)))
        .collect();
    Cyclotomic {
        conductor: m,
        coeffs,
    }
}

pub(crate) fn euler_phi(m: u32) -> u32 {
    prime_powers(m)
        .into_iter()
        .map(|(p, q)| q - q / p)
        .product::<u32>()
        .max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(m: u32, e: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(m, e)
    }

    #[test]
    fn basis_size_is_phi() {
        for m in 1..=36u32 {
            let factors = prime_powers(m);
            let count = (0..m)
                .filter(|&e| first_bad_prime(m, e, &factors).is_none())
                .count() as u32;
            assert_eq!(count.max(1), euler_phi(m), "m = {m}");
        }
    }

    #[test]
    fn sum_of_primitive_cube_roots() {
        let s = zeta(3, 1).add(&zeta(3, 2));
        assert_eq!(s.to_rational(), Some(rat_int(-1)));
        assert_eq!(s, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn i_squared() {
        let s = zeta(4, 1).mul(&zeta(4, 1));
        assert_eq!(s.to_rational(), Some(rat_int(-1)));
    }

    #[test]
    fn golden_product_in_fifth_roots() {
        // (ζ₅ + ζ₅⁴)(ζ₅² + ζ₅³) expands to ζ₅³ + ζ₅⁴ + ζ₅ + ζ₅² = −1.
        let a = zeta(5, 1).add(&zeta(5, 4));
        let b = zeta(5, 2).add(&zeta(5, 3));
        assert_eq!(a.mul(&b).to_rational(), Some(rat_int(-1)));
    }

    #[test]
    fn conjugate_of_eighth_root() {
        assert_eq!(zeta(8, 1).conj(), zeta(8, 7));
        assert_eq!(Cyclotomic::from_integer(-1).conj(), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn reduction_is_idempotent() {
        for m in [6u32, 8, 9, 12, 20, 24] {
            for e in 0..m {
                let x = zeta(m, e as i64);
                let again = Cyclotomic::from_terms(
                    m,
                    x.terms().map(|(e, c)| (e as i64, c.clone())),
                );
                assert_eq!(x, again, "m = {m}, e = {e}");
            }
        }
    }

    #[test]
    fn cross_conductor_equality() {
        assert_eq!(zeta(6, 2), zeta(3, 1));
        assert_eq!(zeta(4, 2), Cyclotomic::from_integer(-1));
        assert_eq!(zeta(12, 3).mul(&zeta(12, 3)), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn rational_extraction() {
        assert_eq!(Cyclotomic::zero().to_rational(), Some(rat_int(0)));
        assert_eq!(zeta(7, 1).to_rational(), None);
        let half = Cyclotomic::from_rational(rat(1, 2)).raise_conductor(12);
        assert_eq!(half.to_rational(), Some(rat(1, 2)));
    }

    #[test]
    fn power_sums_of_roots() {
        // Σ_{e=0}^{m−1} ζ_m^e = 0 for m > 1.
        for m in [2u32, 3, 4, 6, 8, 9, 12, 15] {
            let mut s = Cyclotomic::zero();
            for e in 0..m {
                s = s.add(&zeta(m, e as i64));
            }
            assert!(s.is_zero(), "m = {m}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_cyclo() -> impl Strategy<Value = Cyclotomic> {
            let conductors = prop_oneof![
                Just(1u32),
                Just(2),
                Just(3),
                Just(4),
                Just(5),
                Just(6),
                Just(8),
                Just(9),
                Just(12),
                Just(15)
            ];
            (conductors, proptest::collection::vec((0i64..30, -5i64..=5), 0..4)).prop_map(
                |(m, terms)| {
                    Cyclotomic::from_terms(
                        m,
                        terms.into_iter().map(|(e, n)| (e, rat_int(n))),
                    )
                },
            )
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn ring_axioms((a, b, c) in (arb_cyclo(), arb_cyclo(), arb_cyclo())) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            }

            #[test]
            fn conjugation_is_involutive(a in arb_cyclo()) {
                prop_assert_eq!(a.conj().conj(), a);
            }

            #[test]
            fn norm_term_is_self_conjugate(a in arb_cyclo()) {
                // a·ā is fixed by conjugation, hence totally real.
                let n = a.mul(&a.conj());
                prop_assert_eq!(n.conj(), n);
            }
        }
    }
}
