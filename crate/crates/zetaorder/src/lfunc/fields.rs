//! The built-in catalog of Galois number fields over Q, each with a
//! defining polynomial, its Galois group as root permutations, a Frobenius
//! rule for unramified primes, and inertia data for the ramified ones.

use std::collections::BTreeMap;

use crate::chartab::{CharacterTable, SubgroupView};
use crate::groups::{make_catalog, FiniteGroup, Group, GroupTag, Subgroup};
use crate::modp::Fp;
use crate::perm::Permutation;

use super::{factor_pattern_mod_p, legendre_symbol, LfuncError};

/// How to read Frobenius classes at unramified primes.
enum FrobeniusRule {
    /// Cycle type of the defining polynomial mod p determines the class.
    CycleType,
    /// Frobenius is σ_{p mod m} (cyclotomic fields).
    ResidueClassMod(u32),
    /// Frobenius is pinned down by the Legendre symbols of two integers
    /// (biquadratic fields, where cycle types are ambiguous).
    QuadraticSymbols(i64, i64),
}

/// Inertia data for one ramified prime: the inertia subgroup members and a
/// representative of the Frobenius coset in the decomposition group.
pub(crate) struct RamifiedData {
    pub inertia: Vec<u32>,
    pub frobenius: usize,
}

pub struct GaloisNumberField {
    pub name: String,
    /// Monic integer polynomial, low-to-high coefficients.
    pub defining_poly: Vec<i64>,
    pub group: Group,
    pub table: CharacterTable,
    pub ramified: Vec<u64>,
    pub(crate) ramified_data: BTreeMap<u64, RamifiedData>,
    rule: FrobeniusRule,
    cycle_class: BTreeMap<Vec<usize>, usize>,
    residue_class: BTreeMap<u32, usize>,
    symbol_class: BTreeMap<(i32, i32), usize>,
}

impl GaloisNumberField {
    pub(crate) fn frobenius_class_unchecked(&self, p: u64) -> Result<usize, LfuncError> {
        match &self.rule {
            FrobeniusRule::CycleType => {
                let pattern = factor_pattern_mod_p(&self.defining_poly, p);
                self.cycle_class
                    .get(&pattern)
                    .copied()
                    .ok_or(LfuncError::RamifiedPrime(p))
            }
            FrobeniusRule::ResidueClassMod(m) => {
                let a = (p % *m as u64) as u32;
                self.residue_class
                    .get(&a)
                    .copied()
                    .ok_or(LfuncError::RamifiedPrime(p))
            }
            FrobeniusRule::QuadraticSymbols(d1, d2) => {
                let key = (legendre_symbol(*d1, p), legendre_symbol(*d2, p));
                self.symbol_class
                    .get(&key)
                    .copied()
                    .ok_or(LfuncError::RamifiedPrime(p))
            }
        }
    }

    /// The ramified local reciprocal factors, one per table irreducible.
    pub fn ramified_local_factors(&self, p: u64) -> Result<Vec<super::CycPoly>, LfuncError> {
        if !self.ramified.contains(&p) {
            return Err(LfuncError::MissingRamifiedData(p));
        }
        self.table
            .irreducibles()
            .iter()
            .map(|chi| self.local_factor(chi, p).map(|f| f.poly))
            .collect()
    }
}

/// Builds a cycle-type class map, rejecting fields where two classes share
/// a cycle type.
fn cycle_type_map(group: &Group) -> Result<BTreeMap<Vec<usize>, usize>, LfuncError> {
    let mut map: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (idx, class) in group.conjugacy_classes().iter().enumerate() {
        let t = group.element(class.rep as usize).cycle_lengths();
        if let Some(&other) = map.get(&t) {
            if other != idx {
                return Err(LfuncError::AmbiguousCycleType(other, idx));
            }
        }
        map.insert(t, idx);
    }
    Ok(map)
}

fn x3m2split() -> Result<GaloisNumberField, LfuncError> {
    let group = make_catalog(GroupTag::Symmetric(3)).expect("S3");
    let table = CharacterTable::new(&group)?;
    let cycle_class = cycle_type_map(&group)?;
    let mut ramified_data = BTreeMap::new();
    // 2 = 𝔭³ with residue degree 2: inertia is the 3-cycle subgroup, the
    // Frobenius coset is the transpositions.
    let inertia_2: Vec<u32> = (0..group.order() as u32)
        .filter(|&i| group.element_order(i as usize) != 2)
        .collect();
    let frob_2 = (0..group.order())
        .find(|&i| group.element_order(i) == 2)
        .unwrap();
    ramified_data.insert(
        2,
        RamifiedData {
            inertia: inertia_2,
            frobenius: frob_2,
        },
    );
    // 3 is totally (and wildly) ramified in L: inertia is all of S3.
    ramified_data.insert(
        3,
        RamifiedData {
            inertia: (0..group.order() as u32).collect(),
            frobenius: 0,
        },
    );
    Ok(GaloisNumberField {
        name: "x3m2split".into(),
        defining_poly: vec![-2, 0, 0, 1],
        group,
        table,
        ramified: vec![2, 3],
        ramified_data,
        rule: FrobeniusRule::CycleType,
        cycle_class,
        residue_class: BTreeMap::new(),
        symbol_class: BTreeMap::new(),
    })
}

/// Q(ζ_m) for small m with (Z/m)^× cyclic: the group permutes the
/// primitive exponents, Frobenius at p is σ_{p mod m}, and m is the only
/// ramified prime (m prime here).
fn cyclotomic_field(name: &str, m: u32) -> Result<GaloisNumberField, LfuncError> {
    let units: Vec<u32> = (1..m).filter(|&a| num_integer::gcd(a, m) == 1).collect();
    let sigma = |k: u32| -> Permutation {
        let images: Vec<u16> = units
            .iter()
            .map(|&a| {
                let target = (a as u64 * k as u64 % m as u64) as u32;
                units.iter().position(|&u| u == target).unwrap() as u16
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let generator = crate::modp::primitive_root(m as u64) as u32;
    let group = FiniteGroup::from_generators(vec![sigma(generator)]).expect("cyclic group");
    let table = CharacterTable::new(&group)?;
    let mut residue_class = BTreeMap::new();
    for &a in &units {
        let perm = sigma(a);
        let idx = group.index_of(&perm).expect("unit acts as a group element");
        residue_class.insert(a, group.class_of(idx));
    }
    // Defining polynomial: the m-th cyclotomic polynomial (m prime here).
    assert!(crate::groups::is_prime(m as u64), "only prime cyclotomic conductors are built in");
    let defining_poly: Vec<i64> = vec![1; m as usize];
    let mut ramified_data = BTreeMap::new();
    ramified_data.insert(
        m as u64,
        RamifiedData {
            inertia: (0..group.order() as u32).collect(),
            frobenius: 0,
        },
    );
    Ok(GaloisNumberField {
        name: name.into(),
        defining_poly,
        group,
        table,
        ramified: vec![m as u64],
        ramified_data,
        rule: FrobeniusRule::ResidueClassMod(m),
        cycle_class: BTreeMap::new(),
        residue_class,
        symbol_class: BTreeMap::new(),
    })
}

fn q_i() -> Result<GaloisNumberField, LfuncError> {
    let group = FiniteGroup::from_generators(vec![Permutation::from_cycles(2, &[vec![0, 1]])
        .unwrap()])
    .expect("C2");
    let table = CharacterTable::new(&group)?;
    let mut residue_class = BTreeMap::new();
    residue_class.insert(1, group.class_of(0));
    let swap = group
        .index_of(&Permutation::from_cycles(2, &[vec![0, 1]]).unwrap())
        .unwrap();
    residue_class.insert(3, group.class_of(swap));
    let mut ramified_data = BTreeMap::new();
    ramified_data.insert(
        2,
        RamifiedData {
            inertia: vec![0, 1],
            frobenius: 0,
        },
    );
    Ok(GaloisNumberField {
        name: "q_i".into(),
        defining_poly: vec![1, 0, 1],
        group,
        table,
        ramified: vec![2],
        ramified_data,
        rule: FrobeniusRule::ResidueClassMod(4),
        cycle_class: BTreeMap::new(),
        residue_class,
        symbol_class: BTreeMap::new(),
    })
}

/// Q(√2, √3), with roots ±√2 ± √3 of x⁴ − 10x² + 1 ordered
/// (√2+√3, √2−√3, −√2+√3, −√2−√3). Cycle types cannot separate the three
/// involutions, so Frobenius is read from the Legendre symbols of 2 and 3.
fn biquadratic() -> Result<GaloisNumberField, LfuncError> {
    let flip_sqrt3 = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
    let flip_sqrt2 = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
    let group =
        FiniteGroup::from_generators(vec![flip_sqrt3.clone(), flip_sqrt2.clone()]).expect("V4");
    let table = CharacterTable::new(&group)?;
    let mut symbol_class = BTreeMap::new();
    let class_of_perm = |p: &Permutation| group.class_of(group.index_of(p).unwrap());
    symbol_class.insert((1, 1), group.class_of(0));
    // Frobenius fixes √2 iff (2|p) = 1 and fixes √3 iff (3|p) = 1.
    symbol_class.insert((1, -1), class_of_perm(&flip_sqrt3));
    symbol_class.insert((-1, 1), class_of_perm(&flip_sqrt2));
    symbol_class.insert(
        (-1, -1),
        class_of_perm(&flip_sqrt3.compose(&flip_sqrt2)),
    );
    let mut ramified_data = BTreeMap::new();
    // All three quadratic subfields ramify at 2: inertia is everything.
    ramified_data.insert(
        2,
        RamifiedData {
            inertia: (0..4).collect(),
            frobenius: 0,
        },
    );
    // At 3 only Q(√2) is unramified; 3 is inert there, so the Frobenius
    // coset moves √2.
    let inertia_3 = vec![0, group.index_of(&flip_sqrt3).unwrap() as u32];
    ramified_data.insert(
        3,
        RamifiedData {
            inertia: {
                let mut v = inertia_3;
                v.sort_unstable();
                v
            },
            frobenius: group.index_of(&flip_sqrt2).unwrap(),
        },
    );
    Ok(GaloisNumberField {
        name: "biquadratic".into(),
        defining_poly: vec![1, 0, -10, 0, 1],
        group,
        table,
        ramified: vec![2, 3],
        ramified_data,
        rule: FrobeniusRule::QuadraticSymbols(2, 3),
        cycle_class: BTreeMap::new(),
        residue_class: BTreeMap::new(),
        symbol_class,
    })
}

/// Constructs a built-in Galois base field by name.
pub fn builtin_field(name: &str) -> Result<GaloisNumberField, LfuncError> {
    match name {
        "x3m2split" => x3m2split(),
        "q_i" => q_i(),
        "q_zeta3" => cyclotomic_field("q_zeta3", 3),
        "q_zeta5" => cyclotomic_field("q_zeta5", 5),
        "q_zeta7" => cyclotomic_field("q_zeta7", 7),
        "q_zeta11" => cyclotomic_field("q_zeta11", 11),
        "q_zeta13" => cyclotomic_field("q_zeta13", 13),
        "biquadratic" => biquadratic(),
        _ => Err(LfuncError::UnknownField(name.into())),
    }
}

/// A named zeta view: either a built-in Galois field's own zeta or the
/// zeta of a fixed field L^H, together with the completed-zeta data
/// (degree, discriminant, signature) derived offline.
pub struct FieldViewSpec {
    pub name: &'static str,
    pub base: &'static str,
    /// Order of the subgroup H cutting out the view; None for ζ_L itself.
    pub subgroup_order: Option<usize>,
    pub degree: u32,
    pub disc: i64,
    pub r1: u32,
    pub r2: u32,
}

pub const FIELD_VIEWS: &[FieldViewSpec] = &[
    FieldViewSpec {
        name: "x3m2split",
        base: "x3m2split",
        subgroup_order: None,
        degree: 6,
        disc: -34992,
        r1: 0,
        r2: 3,
    },
    FieldViewSpec {
        name: "q_cbrt2",
        base: "x3m2split",
        subgroup_order: Some(2),
        degree: 3,
        disc: -108,
        r1: 1,
        r2: 1,
    },
    FieldViewSpec {
        name: "q_sqrt_m3",
        base: "x3m2split",
        subgroup_order: Some(3),
        degree: 2,
        disc: -3,
        r1: 0,
        r2: 1,
    },
    FieldViewSpec {
        name: "q_i",
        base: "q_i",
        subgroup_order: None,
        degree: 2,
        disc: -4,
        r1: 0,
        r2: 1,
    },
    FieldViewSpec {
        name: "q_zeta3",
        base: "q_zeta3",
        subgroup_order: None,
        degree: 2,
        disc: -3,
        r1: 0,
        r2: 1,
    },
    FieldViewSpec {
        name: "biquadratic",
        base: "biquadratic",
        subgroup_order: None,
        degree: 4,
        disc: 2304,
        r1: 4,
        r2: 0,
    },
    FieldViewSpec {
        name: "q_zeta5",
        base: "q_zeta5",
        subgroup_order: None,
        degree: 4,
        disc: 125,
        r1: 0,
        r2: 2,
    },
    FieldViewSpec {
        name: "q_zeta7",
        base: "q_zeta7",
        subgroup_order: None,
        degree: 6,
        disc: -16807,
        r1: 0,
        r2: 3,
    },
    FieldViewSpec {
        name: "q_zeta11",
        base: "q_zeta11",
        subgroup_order: None,
        degree: 10,
        disc: -2357947691,
        r1: 0,
        r2: 5,
    },
    FieldViewSpec {
        name: "q_zeta13",
        base: "q_zeta13",
        subgroup_order: None,
        degree: 12,
        disc: 1792160394037,
        r1: 0,
        r2: 6,
    },
];

pub fn view_names() -> Vec<&'static str> {
    FIELD_VIEWS.iter().map(|v| v.name).collect()
}

/// Resolves a named view into its base field, the optional subgroup view
/// cutting out the fixed field, and the analytic data.
pub fn builtin_view(
    name: &str,
) -> Result<(GaloisNumberField, Option<SubgroupView>, &'static FieldViewSpec), LfuncError> {
    let spec = FIELD_VIEWS
        .iter()
        .find(|v| v.name == name)
        .ok_or_else(|| LfuncError::UnknownField(name.into()))?;
    let field = builtin_field(spec.base)?;
    let view = match spec.subgroup_order {
        None => None,
        Some(k) => {
            // First subgroup of order k in the deterministic class list.
            let subs = field.group.subgroups_up_to_conjugacy()?;
            let sub: Subgroup = subs
                .into_iter()
                .find(|s| s.order() == k)
                .expect("built-in subgroup order exists");
            Some(SubgroupView::new(sub))
        }
    };
    Ok((field, view, spec))
}
