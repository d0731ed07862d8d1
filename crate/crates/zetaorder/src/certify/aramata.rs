//! Exact Aramata–Brauer decompositions: r_G − 1 as a nonnegative rational
//! combination of characters induced from linear characters of cyclic
//! subgroups, solved as a rational feasibility program in irreducible
//! coordinates.

use num_traits::{One, Signed, Zero};

use super::simplex::{self, LpOutcome};
use super::CertifyError;
use crate::chartab::{
    decompose, induce, CharacterTable, ClassFunction, SubgroupView,
};
use crate::cyclo::{Cyclotomic, Rational};
use crate::groups::{Group, Subgroup};

/// One induction column: a linear character ψ of a cyclic subgroup C.
pub struct CyclicInduction {
    pub subgroup_members: Vec<u32>,
    pub linear_values: Vec<Cyclotomic>,
    pub induced: ClassFunction,
    /// ⟨Ind ψ, χ_i⟩ over the parent's irreducibles.
    pub coordinates: Vec<Rational>,
}

pub struct AramataTerm {
    pub induction: usize,
    pub coefficient: Rational,
}

pub struct AramataDecomposition {
    pub inductions: Vec<CyclicInduction>,
    pub terms: Vec<AramataTerm>,
    /// r_G − 1 − Σ λ·Ind ψ, recomputed directly from class-function values;
    /// identically zero for a valid decomposition.
    pub residual: ClassFunction,
}

impl AramataDecomposition {
    pub fn residual_is_zero(&self) -> bool {
        self.residual.is_zero()
    }
}

/// All cyclic subgroups up to conjugacy, ascending by (order, members).
pub fn cyclic_subgroups_up_to_conjugacy(g: &Group) -> Vec<Subgroup> {
    let mut reps: Vec<Vec<u32>> = Vec::new();
    let mut claimed: Vec<Vec<u32>> = Vec::new();
    let mut cyclics: Vec<Vec<u32>> = (0..g.order() as u32)
        .map(|i| g.subgroup_from_indices(&[i]).members().to_vec())
        .collect();
    cyclics.sort_unstable_by_key(|s| (s.len(), s.clone()));
    cyclics.dedup();
    for members in cyclics {
        if claimed.binary_search(&members).is_ok() {
            continue;
        }
        let sub = Subgroup::from_members(g, members).expect("cyclic subgroups are closed");
        let conjugates = sub.conjugates();
        reps.push(conjugates[0].members().to_vec());
        for c in conjugates {
            let m = c.members().to_vec();
            if let Err(pos) = claimed.binary_search(&m) {
                claimed.insert(pos, m);
            }
        }
    }
    reps.sort_unstable_by_key(|s| (s.len(), s.clone()));
    reps.into_iter()
        .map(|m| Subgroup::from_members(g, m).unwrap())
        .collect()
}

/// Builds every induction column Ind_C^G ψ over the cyclic subgroups up to
/// conjugacy, in deterministic order.
pub fn cyclic_induction_columns(
    g: &Group,
    table: &CharacterTable,
) -> Result<Vec<CyclicInduction>, CertifyError> {
    let mut columns = Vec::new();
    for sub in cyclic_subgroups_up_to_conjugacy(g) {
        let view = SubgroupView::new(sub);
        let h_table = CharacterTable::new(&view.group)?;
        for psi in h_table.irreducibles() {
            debug_assert_eq!(psi.degree_u64(), 1);
            let induced = induce(&view, psi)?;
            let dec = decompose(table, &induced)?;
            columns.push(CyclicInduction {
                subgroup_members: view.sub.members().to_vec(),
                linear_values: psi.values().to_vec(),
                induced,
                coordinates: dec.multiplicities,
            });
        }
    }
    Ok(columns)
}

/// Solves r_G − 1 = Σ λ_i Ind_{C_i} ψ_i with λ_i ≥ 0 exactly, and
/// re-verifies the residual from raw class-function values.
pub fn aramata_brauer_decompose(
    g: &Group,
    table: &CharacterTable,
) -> Result<AramataDecomposition, CertifyError> {
    let inductions = cyclic_induction_columns(g, table)?;
    let r = table.irreducibles().len();
    let trivial = table.trivial_index();
    let a: Vec<Vec<Rational>> = (0..r)
        .map(|i| inductions.iter().map(|c| c.coordinates[i].clone()).collect())
        .collect();
    let b: Vec<Rational> = (0..r)
        .map(|i| {
            let d = table.irreducibles()[i].degree();
            if i == trivial {
                d - Rational::one()
            } else {
                d
            }
        })
        .collect();
    let point = simplex::feasible_point(&a, &b).ok_or(CertifyError::AramataInfeasible)?;

    let terms: Vec<AramataTerm> = point
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_positive())
        .map(|(i, v)| AramataTerm {
            induction: i,
            coefficient: v.clone(),
        })
        .collect();

    // Independent residual: subtract the weighted inductions from r_G − 1
    // as class functions, not in LP coordinates.
    let mut residual = ClassFunction::regular(g).sub(&ClassFunction::trivial(g))?;
    for term in &terms {
        residual = residual.sub(&inductions[term.induction].induced.scale(&term.coefficient))?;
    }
    Ok(AramataDecomposition {
        inductions,
        terms,
        residual,
    })
}

pub struct RemarkProbe {
    /// Exact maximum, over feasible decompositions, of the largest grouped
    /// coefficient.
    pub optimum: Rational,
    /// Index (into the grouped columns) achieving the optimum.
    pub achieved_by: usize,
    /// Grouped distinct induced characters.
    pub grouped: Vec<CyclicInduction>,
    /// A feasible point achieving the optimum, in grouped coordinates.
    pub witness: Vec<Rational>,
}

impl RemarkProbe {
    /// Whether the optimum reaches 1 + ε.
    pub fn exceeds(&self, epsilon: &Rational) -> bool {
        self.optimum >= Rational::one() + epsilon.clone()
    }
}

/// Groups identical induced characters, then maximizes each grouped
/// coefficient in turn subject to the decomposition constraints, keeping
/// the exact overall maximum. Every optimum is confirmed by its dual
/// certificate.
pub fn remark_probe(g: &Group, table: &CharacterTable) -> Result<RemarkProbe, CertifyError> {
    let all = cyclic_induction_columns(g, table)?;
    // Group columns with identical coordinate vectors.
    let mut grouped: Vec<CyclicInduction> = Vec::new();
    for col in all {
        if !grouped.iter().any(|c| c.coordinates == col.coordinates) {
            grouped.push(col);
        }
    }
    let r = table.irreducibles().len();
    let trivial = table.trivial_index();
    let a: Vec<Vec<Rational>> = (0..r)
        .map(|i| grouped.iter().map(|c| c.coordinates[i].clone()).collect())
        .collect();
    let b: Vec<Rational> = (0..r)
        .map(|i| {
            let d = table.irreducibles()[i].degree();
            if i == trivial {
                d - Rational::one()
            } else {
                d
            }
        })
        .collect();

    let mut best: Option<(Rational, usize, Vec<Rational>)> = None;
    for target in 0..grouped.len() {
        let mut c = vec![Rational::zero(); grouped.len()];
        c[target] = Rational::one();
        match simplex::maximize(&a, &b, &c) {
            LpOutcome::Infeasible => return Err(CertifyError::AramataInfeasible),
            LpOutcome::Optimal { point, value, dual } => {
                // Exact optimality certificate: yᵀA_j ≥ c_j and yᵀb = value.
                for (j, col) in grouped.iter().enumerate() {
                    let yaj: Rational = col
                        .coordinates
                        .iter()
                        .zip(&dual)
                        .map(|(aij, yi)| aij.clone() * yi.clone())
                        .sum();
                    if yaj < c[j] {
                        return Err(CertifyError::Internal(
                            "dual certificate violates feasibility".into(),
                        ));
                    }
                }
                let yb: Rational = b
                    .iter()
                    .zip(&dual)
                    .map(|(bi, yi)| bi.clone() * yi.clone())
                    .sum();
                if yb != value {
                    return Err(CertifyError::Internal(
                        "dual certificate does not match the optimum".into(),
                    ));
                }
                if best.as_ref().map(|(v, _, _)| value > *v).unwrap_or(true) {
                    best = Some((value, target, point));
                }
            }
        }
    }
    let (optimum, achieved_by, witness) = best.ok_or(CertifyError::AramataInfeasible)?;
    Ok(RemarkProbe {
        optimum,
        achieved_by,
        grouped,
        witness,
    })
}
