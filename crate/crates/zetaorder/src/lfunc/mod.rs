//! Exact Euler-factor layer: prime splitting in the built-in Galois number
//! fields, per-prime local factors from character power sums, local
//! polynomial identities, and Dirichlet series coefficients.
//!
//! Local factors are stored as the reciprocal polynomial
//! det(I − N(𝔭)^{−s} ρ(Frob)) in T = p^{−s}, with constant term 1. At
//! ramified primes the determinant is restricted to the inertia-invariant
//! subspace, computed at the character level through the averaging
//! projector over the stored inertia subgroup.

pub mod fields;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::chartab::{CharacterTable, ChartabError, ClassFunction, SubgroupView};
use crate::cyclo::{rat_int, Cyclotomic, Rational};
use crate::groups::Group;
use crate::modp::{poly_gcd, poly_powmod, poly_trim, Fp};

pub use fields::{builtin_field, builtin_view, view_names, FieldViewSpec, GaloisNumberField};

#[derive(Debug, Error)]
pub enum LfuncError {
    #[error("prime {0} is ramified here and no built-in data applies")]
    RamifiedPrime(u64),
    #[error("class function does not belong to this field's Galois group")]
    FieldMismatch,
    #[error("unknown built-in field `{0}`")]
    UnknownField(String),
    #[error("cycle-type map is not injective: classes {0} and {1} share a pattern")]
    AmbiguousCycleType(usize, usize),
    #[error("missing ramified local data for prime {0}")]
    MissingRamifiedData(u64),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
}

// ---------------------------------------------------------------------------
// Polynomials with exact cyclotomic coefficients
// ---------------------------------------------------------------------------

/// Dense polynomial in T with Cyclotomic coefficients, low-to-high.
#[derive(Clone, Debug, PartialEq)]
pub struct CycPoly {
    pub coeffs: Vec<Cyclotomic>,
}

impl CycPoly {
    pub fn one() -> CycPoly {
        CycPoly {
            coeffs: vec![Cyclotomic::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Cyclotomic>) -> CycPoly {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Cyclotomic::zero());
        }
        CycPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &CycPoly) -> CycPoly {
        let mut out = vec![Cyclotomic::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        CycPoly::from_coeffs(out)
    }

    pub fn pow(&self, e: u64) -> CycPoly {
        let mut acc = CycPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; panics if the divisor does not divide exactly (the
    /// callers use it only where divisibility is a theorem being checked,
    /// and check the returned remainder flag instead).
    pub fn div_exact(&self, other: &CycPoly) -> Option<CycPoly> {
        let mut rem = self.coeffs.clone();
        let d = other.degree();
        let lead = other.coeffs[d].clone();
        let lead_inv_rational = lead.to_rational()?;
        if lead_inv_rational.is_zero() {
            return None;
        }
        // Divisors here are monic up to a rational constant.
        let inv = Rational::one() / lead_inv_rational;
        if rem.len() <= d {
            return if rem.iter().all(|c| c.is_zero()) {
                Some(CycPoly::one())
            } else {
                None
            };
        }
        let mut quot = vec![Cyclotomic::zero(); rem.len() - d];
        for shift in (0..rem.len() - d).rev() {
            let c = rem[shift + d].scale(&inv);
            quot[shift] = c.clone();
            if c.is_zero() {
                continue;
            }
            for (i, oc) in other.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].sub(&oc.mul(&c));
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(CycPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// First `len` coefficients of the power-series inverse (constant term
    /// must be 1).
    pub fn series_inverse(&self, len: usize) -> Vec<Cyclotomic> {
        assert!(self.coeffs[0].is_one(), "constant term must be 1");
        let mut inv = Vec::with_capacity(len);
        inv.push(Cyclotomic::one());
        for n in 1..len {
            let mut acc = Cyclotomic::zero();
            for k in 1..=n.min(self.degree()) {
                acc = acc.add(&self.coeffs[k].mul(&inv[n - k]));
            }
            inv.push(acc.scale(&rat_int(-1)));
        }
        inv
    }
}

impl std::fmt::Display for CycPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && !(i == 0 && self.coeffs.len() == 1) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*T")?,
                _ => write!(f, "({c})*T^{i}")?,
            }
        }
        Ok(())
    }
}

/// A local Euler factor at p, stored as the reciprocal polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalFactor {
    pub prime: u64,
    pub poly: CycPoly,
}

// ---------------------------------------------------------------------------
// Splitting patterns
// ---------------------------------------------------------------------------

/// Multiset of irreducible-factor degrees of a monic integer polynomial
/// mod p, by distinct-degree splitting; the factors themselves are never
/// materialized. The polynomial must be squarefree mod p.
pub fn factor_pattern_mod_p(poly: &[i64], p: u64) -> Vec<usize> {
    let f = Fp::new(p);
    let mut reduced: Vec<u64> = poly
        .iter()
        .map(|&c| c.rem_euclid(p as i64) as u64)
        .collect();
    poly_trim(&mut reduced);
    assert!(reduced.len() >= 2, "constant polynomial");
    let mut degrees = Vec::new();
    let mut h = vec![0u64, 1]; // x
    let mut current = reduced.clone();
    let mut d = 0;
    while current.len() > 1 {
        d += 1;
        // h = x^(p^d) mod current, maintained as h_prev^p mod current.
        h = poly_powmod(&f, &h, p, &current);
        let mut h_minus_x = h.clone();
        while h_minus_x.len() < 2 {
            h_minus_x.push(0);
        }
        h_minus_x[1] = f.sub(h_minus_x[1], 1);
        poly_trim(&mut h_minus_x);
        let g = if h_minus_x.is_empty() {
            current.clone()
        } else {
            poly_gcd(&f, &current, &h_minus_x)
        };
        if g.len() > 1 {
            let factors_of_degree_d = (g.len() - 1) / d;
            for _ in 0..factors_of_degree_d {
                degrees.push(d);
            }
            current = poly_div_mod_p(&f, &current, &g);
            h = crate::modp::poly_rem(&f, &h, &current);
        }
        if d > reduced.len() {
            break;
        }
    }
    degrees.sort_unstable();
    degrees
}

fn poly_div_mod_p(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = f.inv(b[db]);
    let mut q = vec![0u64; rem.len().saturating_sub(db)];
    while rem.len() > db {
        let coef = f.mul(*rem.last().unwrap(), lead_inv);
        let shift = rem.len() - 1 - db;
        q[shift] = coef;
        for (i, &c) in b.iter().enumerate() {
            let t = f.mul(coef, c);
            rem[shift + i] = f.sub(rem[shift + i], t);
        }
        rem.pop();
        poly_trim(&mut rem);
    }
    poly_trim(&mut q);
    q
}

// ---------------------------------------------------------------------------
// Local factors
// ---------------------------------------------------------------------------

impl GaloisNumberField {
    /// Conjugacy class of the Frobenius element at an unramified prime.
    pub fn frobenius_class(&self, p: u64) -> Result<usize, LfuncError> {
        if self.ramified.contains(&p) {
            return Err(LfuncError::RamifiedPrime(p));
        }
        self.frobenius_class_unchecked(p)
    }

    /// Reciprocal local factor of a genuine character at p, exact.
    pub fn local_factor(&self, chi: &ClassFunction, p: u64) -> Result<LocalFactor, LfuncError> {
        if !std::sync::Arc::ptr_eq(chi.group(), &self.group) {
            return Err(LfuncError::FieldMismatch);
        }
        let poly = if self.ramified.contains(&p) {
            self.ramified_factor(chi, p)?
        } else {
            let class = self.frobenius_class(p)?;
            let dim = chi.degree_u64() as usize;
            let power_sums: Vec<Cyclotomic> = (1..=dim)
                .map(|k| chi.value(self.group.power_class(class, k as i64)).clone())
                .collect();
            newton_reciprocal(&power_sums)
        };
        Ok(LocalFactor { prime: p, poly })
    }

    /// Ramified factor det(I − ρ(Frob) T | V^{inertia}), from the stored
    /// inertia subgroup and Frobenius coset through the averaging
    /// projector: s_k = |I|⁻¹ Σ_{i∈I} χ(d^k i).
    fn ramified_factor(&self, chi: &ClassFunction, p: u64) -> Result<CycPoly, LfuncError> {
        let data = self
            .ramified_data
            .get(&p)
            .ok_or(LfuncError::MissingRamifiedData(p))?;
        let g = &self.group;
        let inertia_size = rat_int(data.inertia.len() as i64);
        let avg = |k: i64| -> Cyclotomic {
            let dk = g.pow(data.frobenius, k);
            let mut acc = Cyclotomic::zero();
            for &i in &data.inertia {
                let x = g.mul(dk, i as usize);
                acc = acc.add(chi.value(g.class_of(x)));
            }
            acc.scale(&(Rational::one() / inertia_size.clone()))
        };
        let s0 = avg(0)
            .to_rational()
            .expect("invariant dimension is rational");
        assert!(s0.denom().is_one() && !s0.numer().is_negative());
        let dim = s0.numer().to_usize().expect("small dimension");
        let power_sums: Vec<Cyclotomic> = (1..=dim as i64).map(avg).collect();
        Ok(newton_reciprocal(&power_sums))
    }
}

/// det(I − MT) = Σ (−1)^k e_k T^k from the power sums s_k = Tr(M^k) via
/// Newton's identities.
pub fn newton_reciprocal(power_sums: &[Cyclotomic]) -> CycPoly {
    let dim = power_sums.len();
    let mut elementary = vec![Cyclotomic::one()];
    for k in 1..=dim {
        let mut acc = Cyclotomic::zero();
        for j in 1..=k {
            let term = elementary[k - j].mul(&power_sums[j - 1]);
            if j % 2 == 1 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        elementary.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
    }
    let coeffs = elementary
        .into_iter()
        .enumerate()
        .map(|(k, e)| if k % 2 == 1 { e.scale(&rat_int(-1)) } else { e })
        .collect();
    CycPoly::from_coeffs(coeffs)
}

// ---------------------------------------------------------------------------
// Local identities
// ---------------------------------------------------------------------------

pub enum LocalIdentity<'a> {
    /// L(χ₁ + χ₂) = L(χ₁)·L(χ₂) at the factor level.
    Additivity(&'a ClassFunction, &'a ClassFunction),
    /// L(Ind ψ, L/Q) equals the subfield factor built from the coset
    /// splitting data of p in L^H.
    Induction {
        view: &'a SubgroupView,
        psi: &'a ClassFunction,
    },
    /// ζ_L factor = Π over all irreducibles of L(χ)^{dim χ}.
    Factorization,
    /// ζ_L factor = Π over primes of L above p of (1 − T^{f(𝔭)}).
    Regular,
    /// ζ_L factor = Π_n (Π_{dim χ = n} L(χ))^n.
    Grouped,
}

pub struct IdentityCheck {
    pub pass: bool,
    pub lhs: CycPoly,
    pub rhs: CycPoly,
}

impl GaloisNumberField {
    pub fn check_local_identity(
        &self,
        p: u64,
        identity: &LocalIdentity<'_>,
    ) -> Result<IdentityCheck, LfuncError> {
        if self.ramified.contains(&p) {
            return Err(LfuncError::RamifiedPrime(p));
        }
        let (lhs, rhs) = match identity {
            LocalIdentity::Additivity(a, b) => {
                let sum = a.add(b).map_err(LfuncError::Chartab)?;
                let lhs = self.local_factor(&sum, p)?.poly;
                let rhs = self
                    .local_factor(a, p)?
                    .poly
                    .mul(&self.local_factor(b, p)?.poly);
                (lhs, rhs)
            }
            LocalIdentity::Induction { view, psi } => {
                if !std::sync::Arc::ptr_eq(view.parent(), &self.group) {
                    return Err(LfuncError::FieldMismatch);
                }
                let ind = crate::chartab::induce(view, psi)?;
                let lhs = self.local_factor(&ind, p)?.poly;
                let rhs = self.subfield_factor(view, psi, p)?;
                (lhs, rhs)
            }
            LocalIdentity::Factorization => {
                let lhs = self.local_factor(&ClassFunction::regular(&self.group), p)?.poly;
                let mut rhs = CycPoly::one();
                for chi in self.table.irreducibles() {
                    rhs = rhs.mul(&self.local_factor(chi, p)?.poly.pow(chi.degree_u64()));
                }
                (lhs, rhs)
            }
            LocalIdentity::Regular => {
                let lhs = self.local_factor(&ClassFunction::regular(&self.group), p)?.poly;
                // Right multiplication by Frobenius on G itself: |G|/f
                // orbits of length f = ord(Frob).
                let class = self.frobenius_class(p)?;
                let f = self
                    .group
                    .element_order(self.group.conjugacy_classes()[class].rep as usize);
                let mut cyc = vec![Cyclotomic::zero(); f as usize + 1];
                cyc[0] = Cyclotomic::one();
                cyc[f as usize] = Cyclotomic::from_integer(-1);
                let rhs = CycPoly::from_coeffs(cyc).pow(self.group.order() as u64 / f);
                (lhs, rhs)
            }
            LocalIdentity::Grouped => {
                let lhs = self.local_factor(&ClassFunction::regular(&self.group), p)?.poly;
                let mut by_degree: BTreeMap<u64, CycPoly> = BTreeMap::new();
                for chi in self.table.irreducibles() {
                    let factor = self.local_factor(chi, p)?.poly;
                    by_degree
                        .entry(chi.degree_u64())
                        .and_modify(|acc| *acc = acc.mul(&factor))
                        .or_insert(factor);
                }
                let mut rhs = CycPoly::one();
                for (n, ln) in by_degree {
                    rhs = rhs.mul(&ln.pow(n));
                }
                (lhs, rhs)
            }
        };
        Ok(IdentityCheck {
            pass: lhs == rhs,
            lhs,
            rhs,
        })
    }

    /// The Artin factor of Ind_H^G ψ computed from the subfield side: right
    /// cosets Hx orbit under right multiplication by Frobenius; an orbit of
    /// length f is a prime of L^H with residue degree f and Frobenius
    /// x σ^f x⁻¹ ∈ H.
    fn subfield_factor(
        &self,
        view: &SubgroupView,
        psi: &ClassFunction,
        p: u64,
    ) -> Result<CycPoly, LfuncError> {
        let g = &self.group;
        let class = self.frobenius_class(p)?;
        let sigma = g.conjugacy_classes()[class].rep as usize;
        let h = &view.sub;
        // Canonical right-coset labels: minimal member of Hx.
        let coset_of = |x: usize| -> u32 {
            h.members()
                .iter()
                .map(|&m| g.mul(m as usize, x) as u32)
                .min()
                .unwrap()
        };
        let mut seen: BTreeMap<u32, ()> = BTreeMap::new();
        let mut factor = CycPoly::one();
        for x in 0..g.order() {
            let label = coset_of(x);
            if seen.contains_key(&label) {
                continue;
            }
            // Orbit of this coset under right multiplication by σ.
            let mut len = 0usize;
            let mut current = x;
            loop {
                seen.insert(coset_of(current), ());
                current = g.mul(current, sigma);
                len += 1;
                if coset_of(current) == label {
                    break;
                }
            }
            // Frobenius of the subfield prime: x σ^len x⁻¹ ∈ H.
            let frob_h = g.mul(g.mul(x, g.pow(sigma, len as i64)), g.inv(x) as usize);
            let h_index = view
                .embed
                .iter()
                .position(|&e| e as usize == frob_h)
                .expect("coset-orbit Frobenius lands in H");
            let value = psi.value(view.group.class_of(h_index)).clone();
            // 1 − ψ(Frob_𝔮) T^len
            let mut coeffs = vec![Cyclotomic::zero(); len + 1];
            coeffs[0] = Cyclotomic::one();
            coeffs[len] = value.scale(&rat_int(-1));
            factor = factor.mul(&CycPoly::from_coeffs(coeffs));
        }
        Ok(factor)
    }
}

// ---------------------------------------------------------------------------
// Dirichlet series
// ---------------------------------------------------------------------------

/// Exact truncated Dirichlet series: `coefficients[n-1]` is a_n.
#[derive(Clone, Debug)]
pub struct DirichletSeries {
    pub coefficients: Vec<Cyclotomic>,
}

impl DirichletSeries {
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coefficients.iter().map(|c| c.to_integer()).collect()
    }
}

/// What to expand: the zeta of L, the zeta of the fixed field L^H, or a
/// single Artin L-function.
pub enum ZetaSelector<'a> {
    FieldZeta,
    SubfieldZeta(&'a SubgroupView),
    Character(&'a ClassFunction),
}

impl GaloisNumberField {
    /// Multiplicative assembly of a_1..a_N from the local factors,
    /// including ramified primes through the built-in data.
    pub fn dirichlet_coefficients(
        &self,
        selector: &ZetaSelector<'_>,
        n: usize,
    ) -> Result<DirichletSeries, LfuncError> {
        let chi_owned;
        let chi: &ClassFunction = match selector {
            ZetaSelector::FieldZeta => {
                chi_owned = ClassFunction::regular(&self.group);
                &chi_owned
            }
            ZetaSelector::SubfieldZeta(view) => {
                chi_owned = crate::chartab::induce(view, &ClassFunction::trivial(&view.group))?;
                &chi_owned
            }
            ZetaSelector::Character(c) => c,
        };
        if !std::sync::Arc::ptr_eq(chi.group(), &self.group) {
            return Err(LfuncError::FieldMismatch);
        }

        // Smallest prime factor sieve.
        let mut spf: Vec<usize> = (0..=n).collect();
        let mut i = 2;
        while i * i <= n {
            if spf[i] == i {
                let mut j = i * i;
                while j <= n {
                    if spf[j] == j {
                        spf[j] = i;
                    }
                    j += i;
                }
            }
            i += 1;
        }

        // Local inverse series per prime, to the needed p-power precision.
        let mut local: BTreeMap<usize, Vec<Cyclotomic>> = BTreeMap::new();
        for p in 2..=n {
            if spf[p] != p {
                continue;
            }
            let mut len = 1;
            let mut pk = p;
            while pk <= n {
                len += 1;
                pk = pk.saturating_mul(p);
            }
            let factor = self.local_factor(chi, p as u64)?;
            local.insert(p, factor.poly.series_inverse(len));
        }

        let mut coeffs = Vec::with_capacity(n);
        for m in 1..=n {
            let mut acc = Cyclotomic::one();
            let mut rest = m;
            while rest > 1 {
                let p = spf[rest];
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                acc = acc.mul(&local[&p][e]);
            }
            coeffs.push(acc);
        }
        Ok(DirichletSeries {
            coefficients: coeffs,
        })
    }
}

pub(crate) fn legendre_symbol(a: i64, p: u64) -> i32 {
    let f = Fp::new(p);
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if f.pow(a, (p - 1) / 2) == 1 {
        1
    } else {
        -1
    }
}

#[allow(unused)]
fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
