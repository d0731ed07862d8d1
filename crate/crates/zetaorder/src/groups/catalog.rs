//! The catalog of named groups: cyclic, dihedral, symmetric, alternating,
//! AGL₁(q) and its square-multiplier subgroup, PSL₂(q), PSL₃(3), Sz(8),
//! SL₂(3) and Q₈, each realized as a concrete permutation group.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, Group, GroupError};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupTag {
    Cyclic(u32),
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Agl1(u32),
    Agl1Prime(u32),
    Psl2(u32),
    Psl3_3,
    Sz8,
    Sl2_3,
    Q8,
    Custom,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Cyclic(n) => write!(f, "Cyclic({n})"),
            GroupTag::Dihedral(n) => write!(f, "Dihedral({n})"),
            GroupTag::Symmetric(n) => write!(f, "Symmetric({n})"),
            GroupTag::Alternating(n) => write!(f, "Alternating({n})"),
            GroupTag::Agl1(q) => write!(f, "AGL1({q})"),
            GroupTag::Agl1Prime(q) => write!(f, "AGL1Prime({q})"),
            GroupTag::Psl2(q) => write!(f, "PSL2({q})"),
            GroupTag::Psl3_3 => write!(f, "PSL3(3)"),
            GroupTag::Sz8 => write!(f, "Sz(8)"),
            GroupTag::Sl2_3 => write!(f, "SL2(3)"),
            GroupTag::Q8 => write!(f, "Q8"),
            GroupTag::Custom => write!(f, "Custom"),
        }
    }
}

/// Constructs a catalog group from its tag.
pub fn make_catalog(tag: GroupTag) -> Result<Group, GroupError> {
    let gens = match tag {
        GroupTag::Cyclic(n) => cyclic_gens(n as usize)?,
        GroupTag::Dihedral(n) => dihedral_gens(n as usize)?,
        GroupTag::Symmetric(n) => symmetric_gens(n as usize)?,
        GroupTag::Alternating(n) => alternating_gens(n as usize)?,
        GroupTag::Agl1(q) => agl1_gens(q, false)?,
        GroupTag::Agl1Prime(q) => agl1_gens(q, true)?,
        GroupTag::Psl2(q) => psl2_gens(q)?,
        GroupTag::Psl3_3 => psl3_3_gens(),
        GroupTag::Sz8 => sz8_gens(),
        GroupTag::Sl2_3 => sl2_3_gens(),
        GroupTag::Q8 => q8_gens(),
        GroupTag::Custom => {
            return Err(GroupError::UnsupportedParameter(
                "Custom has no catalog constructor".into(),
            ))
        }
    };
    FiniteGroup::from_generators_tagged(gens, tag)
}

fn cyclic_gens(n: usize) -> Result<Vec<Permutation>, GroupError> {
    if n == 0 {
        return Err(GroupError::UnsupportedParameter("Cyclic(0)".into()));
    }
    if n == 1 {
        return Ok(vec![Permutation::identity(1)]);
    }
    Ok(vec![Permutation::from_cycles(n, &[(0..n).collect()])?])
}

fn dihedral_gens(n: usize) -> Result<Vec<Permutation>, GroupError> {
    if n < 3 {
        return Err(GroupError::UnsupportedParameter(format!(
            "Dihedral({n}) needs n >= 3"
        )));
    }
    let rotation = Permutation::from_cycles(n, &[(0..n).collect()])?;
    let mut images: Vec<u16> = (0..n as u16).collect();
    for i in 0..n {
        images[i] = ((n - i) % n) as u16;
    }
    let reflection = Permutation::from_images(images)?;
    Ok(vec![rotation, reflection])
}

fn symmetric_gens(n: usize) -> Result<Vec<Permutation>, GroupError> {
    if n == 0 {
        return Err(GroupError::UnsupportedParameter("Symmetric(0)".into()));
    }
    if n == 1 {
        return Ok(vec![Permutation::identity(1)]);
    }
    let transposition = Permutation::from_cycles(n, &[vec![0, 1]])?;
    let cycle = Permutation::from_cycles(n, &[(0..n).collect()])?;
    Ok(vec![transposition, cycle])
}

fn alternating_gens(n: usize) -> Result<Vec<Permutation>, GroupError> {
    if n < 3 {
        return Err(GroupError::UnsupportedParameter(format!(
            "Alternating({n}) needs n >= 3"
        )));
    }
    let three_cycle = Permutation::from_cycles(n, &[vec![0, 1, 2]])?;
    let long = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(0..n).collect()])?
    } else {
        Permutation::from_cycles(n, &[(1..n).collect()])?
    };
    Ok(vec![three_cycle, long])
}

/// x ↦ ax + b on F_q, with a ranging over all of F_q^× (or only the squares
/// for the prime variant).
fn agl1_gens(q: u32, squares_only: bool) -> Result<Vec<Permutation>, GroupError> {
    let field = Fq::new(q)?;
    if squares_only && field.p == 2 {
        return Err(GroupError::UnsupportedParameter(format!(
            "AGL1Prime({q}) needs q odd"
        )));
    }
    let n = q as usize;
    let translation =
        Permutation::from_images((0..n).map(|x| field.add(x, 1) as u16).collect())?;
    let mult = if squares_only {
        field.mul(field.generator, field.generator)
    } else {
        field.generator
    };
    let scaling = Permutation::from_images((0..n).map(|x| field.mul(mult, x) as u16).collect())?;
    Ok(vec![translation, scaling])
}

/// PSL₂(q) on the projective line: points ∞, 0, 1, …, q−1.
fn psl2_gens(q: u32) -> Result<Vec<Permutation>, GroupError> {
    let field = Fq::new(q)?;
    let mats: Vec<[usize; 4]> = vec![
        [1, 1, 0, 1],                        // transvection
        [0, 1, field.neg(1), 0],             // Weyl element
        [field.generator, 0, 0, field.inv(field.generator)], // torus
    ];
    mats.into_iter()
        .map(|m| projective_line_action(&field, m))
        .collect()
}

fn projective_line_action(field: &Fq, m: [usize; 4]) -> Result<Permutation, GroupError> {
    let q = field.q as usize;
    // Point 0 is ∞ = (1 : 0); point 1 + x is (x : 1).
    let [a, b, c, d] = m;
    let project = |num: usize, den: usize| -> u16 {
        if den == 0 {
            0
        } else {
            (1 + field.mul(num, field.inv(den))) as u16
        }
    };
    let mut images = vec![0u16; q + 1];
    images[0] = project(a, c);
    for x in 0..q {
        images[1 + x] = project(
            field.add(field.mul(a, x), b),
            field.add(field.mul(c, x), d),
        );
    }
    Ok(Permutation::from_images(images)?)
}

/// SL₃(3) = PSL₃(3) acting on the 13 points of the projective plane over F₃.
fn psl3_3_gens() -> Vec<Permutation> {
    let pts = projective_points_3();
    let transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
    let cycle = [[0, 0, 1], [1, 0, 0], [0, 1, 0]];
    [transvection, cycle]
        .iter()
        .map(|m| {
            let images: Vec<u16> = pts
                .iter()
                .map(|&v| {
                    let w = mat3_apply_f3(m, v);
                    pts.iter().position(|&u| u == w).unwrap() as u16
                })
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

fn projective_points_3() -> Vec<[u8; 3]> {
    // Normalized representatives: first nonzero coordinate equals 1.
    let mut pts = Vec::new();
    for x in 0..3u8 {
        for y in 0..3u8 {
            for z in 0..3u8 {
                let v = [x, y, z];
                if v == [0, 0, 0] {
                    continue;
                }
                let lead = v.iter().find(|&&c| c != 0).unwrap();
                if *lead == 1 {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

fn mat3_apply_f3(m: &[[u8; 3]; 3], v: [u8; 3]) -> [u8; 3] {
    let mut w = [0u8; 3];
    for i in 0..3 {
        let mut acc = 0u16;
        for j in 0..3 {
            acc += (m[i][j] as u16) * (v[j] as u16);
        }
        w[i] = (acc % 3) as u8;
    }
    // Normalize: first nonzero coordinate scaled to 1 (×2 ≡ ÷2 mod 3).
    let lead = *w.iter().find(|&&c| c != 0).unwrap();
    if lead == 2 {
        for c in w.iter_mut() {
            *c = (*c * 2) % 3;
        }
    }
    w
}

/// Sz(8) from its standard 4×4 generator matrices over F₈, acting on the
/// 65-point Suzuki–Tits ovoid (the orbit of (0:0:0:1)).
///
/// With θ the field automorphism x ↦ x⁴ (so x^{θ²} = x² on F₈), the
/// generators are the lower unitriangular S(a, b), the torus element
/// M(λ) = diag(λ³, λ², λ⁻², λ⁻³) for a generator λ, and the antidiagonal
/// involution. M is pinned down by M S(a,b) M⁻¹ = S(λa, λ^{1+θ}b).
fn sz8_gens() -> Vec<Permutation> {
    let field = Fq::new(8).unwrap();
    let theta = |x: usize| field.pow(x, 4); // x^θ, θ = 2^{m+1} with m = 1
    let s = |a: usize, b: usize| -> [[usize; 4]; 4] {
        let a_th = theta(a);
        let row3_0 = field.add(field.mul(a, a_th), b); // a^{1+θ} + b
        let row4_0 = field.add(
            field.add(field.mul(field.mul(a, a), a_th), field.mul(a, b)),
            theta(b),
        ); // a^{2+θ} + ab + b^θ
        [
            [1, 0, 0, 0],
            [a, 1, 0, 0],
            [row3_0, a_th, 1, 0],
            [row4_0, b, a, 1],
        ]
    };
    let lam = field.generator;
    let m = [
        [field.pow(lam, 3), 0, 0, 0],
        [0, field.pow(lam, 2), 0, 0],
        [0, 0, field.inv(field.pow(lam, 2)), 0],
        [0, 0, 0, field.inv(field.pow(lam, 3))],
    ];
    let tau = [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
    ];

    let ovoid = suzuki_ovoid(&field, &[s(1, 0), s(0, 1), m, tau]);
    [s(1, 0), s(0, 1), m, tau]
        .iter()
        .map(|mat| {
            let images: Vec<u16> = ovoid
                .iter()
                .map(|v| {
                    let w = mat4_apply(&field, mat, v);
                    ovoid.iter().position(|u| *u == w).unwrap() as u16
                })
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

/// Orbit of (0:0:0:1) under the given matrices, as normalized projective
/// points. For the Suzuki generators this is the 65-point ovoid.
fn suzuki_ovoid(field: &Fq, mats: &[[[usize; 4]; 4]]) -> Vec<[usize; 4]> {
    let start = normalize4(field, [0, 0, 0, 1]);
    let mut orbit = vec![start];
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for m in mats {
            let w = mat4_apply(field, m, &v);
            if !orbit.contains(&w) {
                orbit.push(w);
                frontier.push(w);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

fn mat4_apply(field: &Fq, m: &[[usize; 4]; 4], v: &[usize; 4]) -> [usize; 4] {
    let mut w = [0usize; 4];
    for i in 0..4 {
        let mut acc = 0;
        for j in 0..4 {
            acc = field.add(acc, field.mul(m[i][j], v[j]));
        }
        w[i] = acc;
    }
    normalize4(field, w)
}

fn normalize4(field: &Fq, mut v: [usize; 4]) -> [usize; 4] {
    let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
    if lead != 1 {
        let s = field.inv(lead);
        for c in v.iter_mut() {
            *c = field.mul(s, *c);
        }
    }
    v
}

/// SL₂(3) acting faithfully on the 8 nonzero vectors of F₃².
fn sl2_3_gens() -> Vec<Permutation> {
    let vectors: Vec<[u8; 2]> = (0..3u8)
        .flat_map(|x| (0..3u8).map(move |y| [x, y]))
        .filter(|v| *v != [0, 0])
        .collect();
    let mats = [[[1u8, 1], [0, 1]], [[0, 2], [1, 0]]]; // transvection, [[0,-1],[1,0]]
    mats.iter()
        .map(|m| {
            let images: Vec<u16> = vectors
                .iter()
                .map(|v| {
                    let w = [
                        (m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                        (m[1][0] * v[0] + m[1][1] * v[1]) % 3,
                    ];
                    vectors.iter().position(|u| *u == w).unwrap() as u16
                })
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

/// Q₈ in its regular action on {1, i, −1, −i, j, ij, −j, −ij}.
fn q8_gens() -> Vec<Permutation> {
    // Points: 0:1, 1:i, 2:-1, 3:-i, 4:j, 5:ij, 6:-j, 7:-ij.
    // Left multiplication by i and by j.
    let i = Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 7, 6, 5]]).unwrap();
    let j = Permutation::from_cycles(8, &[vec![0, 4, 2, 6], vec![1, 5, 3, 7]]).unwrap();
    vec![i, j]
}

/// A small finite field F_q, q = p^n, with table-based arithmetic.
/// Elements are indices 0..q; the reduction polynomial is the
/// lexicographically least irreducible monic polynomial of degree n, and
/// `generator` is the least primitive element, so everything is
/// reproducible.
pub struct Fq {
    pub q: u32,
    pub p: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    pub generator: usize,
}

impl Fq {
    pub fn new(q: u32) -> Result<Fq, GroupError> {
        let (p, n) = prime_power(q)
            .ok_or_else(|| GroupError::UnsupportedParameter(format!("{q} is not a prime power")))?;
        // Element index = Σ digit_i p^i encodes the polynomial Σ digit_i x^i.
        let to_digits = |mut v: u32| -> Vec<u32> {
            let mut d = vec![0u32; n as usize];
            for item in d.iter_mut() {
                *item = v % p;
                v /= p;
            }
            d
        };
        let from_digits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let reduction = find_irreducible(p, n);

        let poly_add = |a: u32, b: u32| -> u32 {
            let (da, db) = (to_digits(a), to_digits(b));
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            from_digits(&sum)
        };
        let poly_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (to_digits(a), to_digits(b));
            let mut prod = vec![0u32; 2 * n as usize];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // Reduce modulo the reduction polynomial (monic of degree n).
            for i in (n as usize..prod.len()).rev() {
                let c = prod[i];
                if c == 0 {
                    continue;
                }
                prod[i] = 0;
                for (j, &r) in reduction.iter().enumerate().take(n as usize) {
                    let idx = i - n as usize + j;
                    prod[idx] = (prod[idx] + c * (p - r) % p * 1) % p;
                }
            }
            from_digits(&prod[..n as usize])
        };

        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..q {
            for b in 0..q {
                add[(a * q + b) as usize] = poly_add(a, b);
                mul[(a * q + b) as usize] = poly_mul(a, b);
            }
        }
        let mut inv = vec![0u32; qs];
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b;
                    break;
                }
            }
        }
        // Least primitive element.
        let mut generator = 0;
        for g in 1..q {
            let mut x = g;
            let mut ord = 1;
            while x != 1 {
                x = mul[(x * q + g) as usize];
                ord += 1;
            }
            if ord == q - 1 {
                generator = g as usize;
                break;
            }
        }
        assert!(generator != 0 || q == 2, "no primitive element found");
        if q == 2 {
            generator = 1;
        }
        Ok(Fq {
            q,
            p,
            add,
            mul,
            inv,
            generator,
        })
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q as usize + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q as usize + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        // -a: solve a + x = 0.
        (0..self.q as usize).find(|&x| self.add(a, x) == 0).unwrap()
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "inverse of zero");
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, mut e: u32) -> usize {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let factors = super::factorize(q as u64);
    if factors.len() != 1 {
        return None;
    }
    Some((factors[0].0 as u32, factors[0].1))
}

/// Lexicographically least monic irreducible polynomial of degree n over
/// F_p, returned as its low coefficients [c_0, …, c_{n-1}] (leading 1
/// implicit).
fn find_irreducible(p: u32, n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0];
    }
    let total = p.pow(n);
    'candidates: for idx in 0..total {
        let mut coeffs = Vec::with_capacity(n as usize);
        let mut v = idx;
        for _ in 0..n {
            coeffs.push(v % p);
            v /= p;
        }
        // Irreducibility over F_p by trial division with all monic
        // polynomials of degree ≤ n/2 (p and n are tiny here).
        if is_irreducible(p, &coeffs) {
            return coeffs;
        }
        continue 'candidates;
    }
    unreachable!("irreducible polynomial exists for every p, n");
}

fn is_irreducible(p: u32, low_coeffs: &[u32]) -> bool {
    let n = low_coeffs.len();
    let mut full: Vec<u32> = low_coeffs.to_vec();
    full.push(1);
    for deg in 1..=n / 2 {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(deg + 1);
            let mut v = idx;
            for _ in 0..deg {
                divisor.push(v % p);
                v /= p;
            }
            divisor.push(1);
            if poly_divides(p, &divisor, &full) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(p: u32, divisor: &[u32], dividend: &[u32]) -> bool {
    let mut rem: Vec<u32> = dividend.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for (i, &c) in divisor.iter().enumerate() {
                let idx = shift + i;
                rem[idx] = (rem[idx] + (p - c % p) * lead) % p;
            }
        }
        rem.pop();
        while rem.len() > d && *rem.last().unwrap() == 0 {
            rem.pop();
        }
    }
    rem.iter().all(|&c| c == 0)
}
