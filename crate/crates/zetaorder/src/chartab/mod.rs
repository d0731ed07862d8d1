//! Exact character theory: tables, induction and restriction, inner
//! products, monomiality testing, Clifford splitting, and the virtual
//! character probes.

mod dixon;

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cyclo::{rat_int, Cyclotomic, Rational};
use crate::groups::{Group, Subgroup, DEFAULT_SUBGROUP_BOUND};

#[derive(Debug, Error)]
pub enum ChartabError {
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("not a subgroup of this group")]
    NotASubgroup,
    #[error("bound exceeded: {context} needs order <= {bound}")]
    BoundExceeded { bound: usize, context: &'static str },
    #[error("group has {classes} conjugacy classes; the table computation is capped at {max}")]
    TooManyClasses { classes: usize, max: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("Clifford restriction has constituents of unequal degree: {0}")]
    CliffordViolation(String),
    #[error("class function has a non-rational multiplicity against an irreducible")]
    NonRationalMultiplicity,
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
}

/// An exact cyclotomic-valued function on the conjugacy classes of a fixed
/// group. Class index 0 is the identity class.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Group,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(group: &Group, values: Vec<Cyclotomic>) -> ClassFunction {
        assert_eq!(values.len(), group.class_count());
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn trivial(group: &Group) -> ClassFunction {
        ClassFunction {
            group: group.clone(),
            values: vec![Cyclotomic::one(); group.class_count()],
        }
    }

    /// The character of the regular representation: |G| at the identity,
    /// zero elsewhere.
    pub fn regular(group: &Group) -> ClassFunction {
        let mut values = vec![Cyclotomic::zero(); group.class_count()];
        values[0] = Cyclotomic::from_integer(group.order() as i64);
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity class, as an exact rational.
    pub fn degree(&self) -> Rational {
        self.values[0]
            .to_rational()
            .expect("degree of a class function is rational")
    }

    pub fn degree_u64(&self) -> u64 {
        let d = self.degree();
        assert!(d.denom().is_one());
        u64::try_from(d.numer().clone()).expect("nonnegative degree")
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, ChartabError> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(ChartabError::GroupMismatch);
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale(&self, r: &Rational) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction, ChartabError> {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// ⟨a, b⟩ = |G|⁻¹ Σ_g a(g)·conj(b(g)), exactly.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic, ChartabError> {
    if !Arc::ptr_eq(&a.group, &b.group) {
        return Err(ChartabError::GroupMismatch);
    }
    let g = &a.group;
    let mut acc = Cyclotomic::zero();
    for (j, class) in g.conjugacy_classes().iter().enumerate() {
        let term = a.values[j].mul(&b.values[j].conj());
        acc = acc.add(&term.scale(&rat_int(class.size() as i64)));
    }
    Ok(acc.scale(&Rational::new(BigInt::one(), BigInt::from(g.order()))))
}

/// The exact character table of a finite group, with deterministic row
/// ordering (degree, then canonical value key). Row and column
/// orthogonality are verified exactly before the table is returned.
pub struct CharacterTable {
    group: Group,
    irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn new(group: &Group) -> Result<CharacterTable, ChartabError> {
        let rows = dixon::character_values(group)?;
        let irreducibles: Vec<ClassFunction> = rows
            .into_iter()
            .map(|values| ClassFunction {
                group: group.clone(),
                values,
            })
            .collect();
        let table = CharacterTable {
            group: group.clone(),
            irreducibles,
        };
        table.verify()?;
        Ok(table)
    }

    /// Exact orthogonality verification. Character values are integer
    /// combinations of roots of unity at conductor exp(G), so all sums run
    /// in dense i64 vectors indexed by exponent, reduced once at the end.
    fn verify(&self) -> Result<(), ChartabError> {
        let g = &self.group;
        let r = g.class_count();
        if self.irreducibles.len() != r {
            return Err(ChartabError::InternalInconsistency(format!(
                "{} irreducibles for {} classes",
                self.irreducibles.len(),
                r
            )));
        }
        let degree_sq: u64 = self.irreducibles.iter().map(|c| c.degree_u64().pow(2)).sum();
        if degree_sq != g.order() as u64 {
            return Err(ChartabError::InternalInconsistency(format!(
                "sum of squared degrees {} != group order {}",
                degree_sq,
                g.order()
            )));
        }

        let m = g.exponent() as u32;
        let order = g.order() as i64;
        let sizes: Vec<i64> = g.conjugacy_classes().iter().map(|c| c.size() as i64).collect();
        // terms[i][j] = integer basis terms of χ_i(g_j).
        let terms: Vec<Vec<Vec<(u32, i64)>>> = self
            .irreducibles
            .iter()
            .map(|chi| {
                chi.values
                    .iter()
                    .map(|v| {
                        crate::cyclo::int_terms(&v.raise_conductor(m)).ok_or_else(|| {
                            ChartabError::InternalInconsistency(
                                "character value with non-integer coefficients".into(),
                            )
                        })
                    })
                    .collect::<Result<_, _>>()
            })
            .collect::<Result<_, _>>()?;
        let mut expected_delta = vec![0i64; m as usize];
        expected_delta[0] = order;
        crate::cyclo::reduce_dense_i64(m, &mut expected_delta);

        let mut acc = vec![0i64; m as usize];
        // Row orthogonality: Σ_j h_j χ_i(g_j) conj(χ_k(g_j)) = δ_ik |G|.
        for i in 0..r {
            for k in i..r {
                acc.iter_mut().for_each(|c| *c = 0);
                for j in 0..r {
                    for &(e1, c1) in &terms[i][j] {
                        for &(e2, c2) in &terms[k][j] {
                            let e = (e1 + (m - e2) % m) % m;
                            acc[e as usize] += c1 * c2 * sizes[j];
                        }
                    }
                }
                crate::cyclo::reduce_dense_i64(m, &mut acc);
                let ok = if i == k {
                    acc == expected_delta
                } else {
                    acc.iter().all(|&c| c == 0)
                };
                if !ok {
                    return Err(ChartabError::InternalInconsistency(format!(
                        "row orthogonality fails at ({i}, {k})"
                    )));
                }
            }
        }
        // Column orthogonality: h_j Σ_χ χ(g_j) conj(χ(g_k)) = δ_jk |G|.
        for j in 0..r {
            for k in j..r {
                acc.iter_mut().for_each(|c| *c = 0);
                for row in &terms {
                    for &(e1, c1) in &row[j] {
                        for &(e2, c2) in &row[k] {
                            let e = (e1 + (m - e2) % m) % m;
                            acc[e as usize] += c1 * c2 * sizes[j];
                        }
                    }
                }
                crate::cyclo::reduce_dense_i64(m, &mut acc);
                let ok = if j == k {
                    acc == expected_delta
                } else {
                    acc.iter().all(|&c| c == 0)
                };
                if !ok {
                    return Err(ChartabError::InternalInconsistency(format!(
                        "column orthogonality fails at ({j}, {k})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree_u64()).collect()
    }

    pub fn max_degree(&self) -> u64 {
        self.degrees().into_iter().max().unwrap_or(1)
    }

    /// Index of the trivial character.
    pub fn trivial_index(&self) -> usize {
        self.irreducibles
            .iter()
            .position(|c| c.values.iter().all(|v| v.is_one()))
            .expect("trivial character present")
    }

    /// Index of an irreducible equal to the given class function, if any.
    pub fn index_of(&self, f: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|c| c == f)
    }
}

/// A subgroup together with its standalone group and the index maps both
/// ways, the working view for induction and restriction.
pub struct SubgroupView {
    pub sub: Subgroup,
    pub group: Group,
    pub embed: Vec<u32>,
    parent_to_sub: HashMap<u32, u32>,
}

impl SubgroupView {
    pub fn new(sub: Subgroup) -> SubgroupView {
        let (group, embed) = sub.to_group();
        let parent_to_sub = embed
            .iter()
            .enumerate()
            .map(|(h, &p)| (p, h as u32))
            .collect();
        SubgroupView {
            sub,
            group,
            embed,
            parent_to_sub,
        }
    }

    pub fn parent(&self) -> &Group {
        self.sub.parent()
    }

    fn sub_index(&self, parent_index: usize) -> Option<usize> {
        self.parent_to_sub.get(&(parent_index as u32)).map(|&h| h as usize)
    }
}

/// The induced class function Ind_H^G ψ, by the standard formula
/// Ind ψ(g) = |H|⁻¹ Σ_{x ∈ G, x⁻¹gx ∈ H} ψ(x⁻¹gx).
pub fn induce(view: &SubgroupView, psi: &ClassFunction) -> Result<ClassFunction, ChartabError> {
    if !Arc::ptr_eq(&psi.group, &view.group) {
        return Err(ChartabError::GroupMismatch);
    }
    let g = view.parent();
    let mut values = Vec::with_capacity(g.class_count());
    for class in g.conjugacy_classes() {
        let rep = class.rep as usize;
        let mut acc = Cyclotomic::zero();
        for x in 0..g.order() {
            let t = g.mul(g.mul(g.inv(x) as usize, rep), x);
            if let Some(h) = view.sub_index(t) {
                acc = acc.add(&psi.values[view.group.class_of(h)]);
            }
        }
        values.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(view.group.order()))));
    }
    Ok(ClassFunction {
        group: g.clone(),
        values,
    })
}

/// The restriction Res_H χ as a class function on the subgroup view.
pub fn restrict(chi: &ClassFunction, view: &SubgroupView) -> Result<ClassFunction, ChartabError> {
    if !Arc::ptr_eq(&chi.group, view.parent()) {
        return Err(ChartabError::GroupMismatch);
    }
    let values = view
        .group
        .conjugacy_classes()
        .iter()
        .map(|class| {
            let parent_index = view.embed[class.rep as usize] as usize;
            chi.values[chi.group.class_of(parent_index)].clone()
        })
        .collect();
    Ok(ClassFunction {
        group: view.group.clone(),
        values,
    })
}

/// Multiplicities of a class function against the irreducibles.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub multiplicities: Vec<Rational>,
    /// True iff all multiplicities are nonnegative integers.
    pub genuine: bool,
}

pub fn decompose(table: &CharacterTable, f: &ClassFunction) -> Result<Decomposition, ChartabError> {
    let mut multiplicities = Vec::with_capacity(table.irreducibles.len());
    for chi in &table.irreducibles {
        let ip = inner_product(f, chi)?;
        let m = ip.to_rational().ok_or(ChartabError::NonRationalMultiplicity)?;
        multiplicities.push(m);
    }
    let genuine = multiplicities
        .iter()
        .all(|m| m.denom().is_one() && !m.numer().is_negative());
    Ok(Decomposition {
        multiplicities,
        genuine,
    })
}

/// A monomial source: Ind_H^G ψ = χ with ψ linear.
#[derive(Clone, Debug)]
pub struct MonomialWitness {
    pub irreducible: usize,
    /// Member indices of H in the parent group.
    pub subgroup_members: Vec<u32>,
    /// Values of the linear character ψ over H's conjugacy classes.
    pub linear_values: Vec<Cyclotomic>,
}

#[derive(Debug)]
pub enum MonomialResult {
    Monomial { witnesses: Vec<MonomialWitness> },
    NotMonomial { offending_irreducible: usize },
}

impl MonomialResult {
    pub fn is_monomial(&self) -> bool {
        matches!(self, MonomialResult::Monomial { .. })
    }
}

/// Exhaustive monomiality test: every irreducible must be induced from a
/// linear character of some subgroup. Searches subgroups descending by
/// order and linear characters in table order; the first witness wins.
pub fn is_monomial(g: &Group, table: &CharacterTable) -> Result<MonomialResult, ChartabError> {
    if g.order() > DEFAULT_SUBGROUP_BOUND {
        return Err(ChartabError::BoundExceeded {
            bound: DEFAULT_SUBGROUP_BOUND,
            context: "exhaustive monomiality",
        });
    }
    let mut subgroup_classes = g.subgroups_up_to_conjugacy()?;
    subgroup_classes.reverse();

    // Cache (H, table, linear characters) per useful index.
    let mut witnesses = Vec::new();
    for (idx, chi) in table.irreducibles.iter().enumerate() {
        let dim = chi.degree_u64();
        if dim == 1 {
            witnesses.push(MonomialWitness {
                irreducible: idx,
                subgroup_members: (0..g.order() as u32).collect(),
                linear_values: chi.values.clone(),
            });
            continue;
        }
        let mut found = None;
        'subgroups: for sub in &subgroup_classes {
            if sub.order() as u64 * dim != g.order() as u64 {
                continue;
            }
            let view = SubgroupView::new(sub.clone());
            let h_table = CharacterTable::new(&view.group)?;
            for psi in h_table.irreducibles() {
                if psi.degree_u64() != 1 {
                    continue;
                }
                let ind = induce(&view, psi)?;
                if &ind == chi {
                    found = Some(MonomialWitness {
                        irreducible: idx,
                        subgroup_members: sub.members().to_vec(),
                        linear_values: psi.values.clone(),
                    });
                    break 'subgroups;
                }
            }
        }
        match found {
            Some(w) => witnesses.push(w),
            None => {
                return Ok(MonomialResult::NotMonomial {
                    offending_irreducible: idx,
                })
            }
        }
    }
    Ok(MonomialResult::Monomial { witnesses })
}

/// Huppert's criterion: a proper normal subgroup N with N solvable, G/N
/// supersolvable, and all Sylow subgroups of N abelian certifies that G is
/// monomial. Nontrivial candidates are tried ascending by order; the
/// trivial subgroup (G itself supersolvable) is tried last. `None` is
/// inconclusive, not a disproof.
pub fn huppert_criterion(g: &Group) -> Option<Subgroup> {
    let mut candidates = g.normal_subgroups();
    candidates.retain(|n| n.order() < g.order());
    candidates.sort_by_key(|n| if n.order() == 1 { usize::MAX } else { n.order() });
    for n in candidates {
        if huppert_conditions_hold(g, &n) {
            return Some(n);
        }
    }
    None
}

fn huppert_conditions_hold(g: &Group, n: &Subgroup) -> bool {
    let (n_group, _) = n.to_group();
    if !n_group.is_solvable() {
        return false;
    }
    // All Sylow subgroups of N abelian.
    let n_order = n_group.order() as u64;
    let sylows_abelian = crate::groups::factorize(n_order)
        .into_iter()
        .all(|(p, _)| match n_group.sylow_subgroup(p) {
            Ok(s) => s.to_group().0.is_abelian(),
            Err(_) => false,
        });
    if !sylows_abelian {
        return false;
    }
    match g.quotient(n) {
        Ok(q) => q.is_supersolvable(),
        Err(_) => false,
    }
}

/// Restriction of an irreducible to a normal subgroup, decomposed into
/// N-irreducibles. Clifford theory forces all constituents to share one
/// degree; unequal degrees are an implementation-bug signal.
pub struct CliffordSplit {
    pub n_table: CharacterTable,
    /// (N-irreducible index, multiplicity) for each constituent.
    pub constituents: Vec<(usize, u64)>,
    pub common_degree: u64,
}

pub fn clifford_split(
    chi: &ClassFunction,
    n: &Subgroup,
) -> Result<CliffordSplit, ChartabError> {
    if !n.is_normal() {
        return Err(ChartabError::NotASubgroup);
    }
    let view = SubgroupView::new(n.clone());
    let n_table = CharacterTable::new(&view.group)?;
    let res = restrict(chi, &view)?;
    let dec = decompose(&n_table, &res)?;
    if !dec.genuine {
        return Err(ChartabError::InternalInconsistency(
            "restriction of a character is not a genuine character".into(),
        ));
    }
    let mut constituents = Vec::new();
    let mut degrees = Vec::new();
    for (i, m) in dec.multiplicities.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        let mult = u64::try_from(m.numer().clone()).expect("genuine multiplicity");
        constituents.push((i, mult));
        degrees.push(n_table.irreducibles[i].degree_u64());
    }
    let common_degree = degrees[0];
    if degrees.iter().any(|&d| d != common_degree) {
        return Err(ChartabError::CliffordViolation(format!("degrees {degrees:?}")));
    }
    // dim χ = (constituent count summed with multiplicity) · common degree.
    let total: u64 = constituents.iter().map(|(_, m)| m).sum::<u64>() * common_degree;
    if total != chi.degree_u64() {
        return Err(ChartabError::CliffordViolation(format!(
            "constituents sum to {total}, expected {}",
            chi.degree_u64()
        )));
    }
    Ok(CliffordSplit {
        n_table,
        constituents,
        common_degree,
    })
}

#[derive(Debug, PartialEq, Eq)]
pub enum ThetaResult {
    Genuine,
    NotGenuine { witness_irreducible: usize },
}

/// Builds θ = Σ_χ orders[χ]·χ and re-checks genuineness through inner
/// products with every irreducible.
pub fn theta_is_character(
    table: &CharacterTable,
    orders: &[i64],
) -> Result<ThetaResult, ChartabError> {
    assert_eq!(orders.len(), table.irreducibles.len());
    let g = &table.group;
    let mut theta = ClassFunction {
        group: g.clone(),
        values: vec![Cyclotomic::zero(); g.class_count()],
    };
    for (chi, &n) in table.irreducibles.iter().zip(orders) {
        theta = theta.add(&chi.scale(&rat_int(n)))?;
    }
    for (i, chi) in table.irreducibles.iter().enumerate() {
        let ip = inner_product(&theta, chi)?;
        let m = ip.to_rational().ok_or(ChartabError::NonRationalMultiplicity)?;
        if !m.denom().is_one() || m.numer().is_negative() {
            return Ok(ThetaResult::NotGenuine {
                witness_irreducible: i,
            });
        }
    }
    Ok(ThetaResult::Genuine)
}

/// Decomposition of the permutation character Ind_H^G(1_H), plus whether
/// any irreducible appears with multiplicity ≥ 2.
pub fn permutation_character_probe(
    table: &CharacterTable,
    h: &Subgroup,
) -> Result<(Decomposition, bool), ChartabError> {
    let view = SubgroupView::new(h.clone());
    let ind = induce(&view, &ClassFunction::trivial(&view.group))?;
    let dec = decompose(table, &ind)?;
    let two = rat_int(2);
    let flag = dec.multiplicities.iter().any(|m| *m >= two);
    Ok((dec, flag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_catalog, GroupTag};

    fn table(tag: GroupTag) -> (Group, CharacterTable) {
        let g = make_catalog(tag).unwrap();
        let t = CharacterTable::new(&g).unwrap();
        (g, t)
    }

    #[test]
    fn s3_degrees() {
        let (_, t) = table(GroupTag::Symmetric(3));
        assert_eq!(t.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn agl1_has_unique_nonlinear_of_degree_q_minus_1() {
        for q in [4u32, 5, 7, 8, 9, 11] {
            let (_, t) = table(GroupTag::Agl1(q));
            let nonlinear: Vec<u64> = t.degrees().into_iter().filter(|&d| d > 1).collect();
            assert_eq!(nonlinear, vec![(q - 1) as u64], "q = {q}");
        }
    }

    #[test]
    fn agl1_prime_7_degrees() {
        let (_, t) = table(GroupTag::Agl1Prime(7));
        assert_eq!(t.degrees(), vec![1, 1, 1, 3, 3]);
    }

    #[test]
    fn inner_product_examples() {
        let (g, t) = table(GroupTag::Symmetric(3));
        let triv = ClassFunction::trivial(&g);
        assert!(inner_product(&triv, &triv).unwrap().is_one());

        let reg = ClassFunction::regular(&g);
        for chi in t.irreducibles() {
            let ip = inner_product(&reg, chi).unwrap();
            assert_eq!(ip.to_rational().unwrap(), Rational::from(BigInt::from(chi.degree_u64())));
        }

        let chi2 = &t.irreducibles()[2];
        assert_eq!(chi2.degree_u64(), 2);
        assert!(inner_product(chi2, chi2).unwrap().is_one());
    }

    #[test]
    fn induction_examples() {
        let (g, t) = table(GroupTag::Symmetric(3));
        let c3 = g
            .normal_subgroups()
            .into_iter()
            .find(|n| n.order() == 3)
            .unwrap();
        let view = SubgroupView::new(c3);
        let h_table = CharacterTable::new(&view.group).unwrap();
        let nontrivial_linear = h_table
            .irreducibles()
            .iter()
            .find(|c| c.degree_u64() == 1 && !c.values().iter().all(|v| v.is_one()))
            .unwrap();
        let ind = induce(&view, nontrivial_linear).unwrap();
        assert_eq!(&ind, &t.irreducibles()[2]);

        // Induction from the trivial subgroup is the regular character.
        let triv_view = SubgroupView::new(Subgroup::trivial(&g));
        let ind = induce(&triv_view, &ClassFunction::trivial(&triv_view.group)).unwrap();
        assert_eq!(&ind, &ClassFunction::regular(&g));
    }

    #[test]
    fn frobenius_reciprocity_on_s3_c2() {
        let (g, t) = table(GroupTag::Symmetric(3));
        let subs = g.subgroups_up_to_conjugacy().unwrap();
        let c2 = subs.iter().find(|s| s.order() == 2).unwrap().clone();
        let view = SubgroupView::new(c2);
        let h_table = CharacterTable::new(&view.group).unwrap();
        for psi in h_table.irreducibles() {
            let ind = induce(&view, psi).unwrap();
            for chi in t.irreducibles() {
                let lhs = inner_product(&ind, chi).unwrap();
                let rhs = inner_product(&restrict(chi, &view).unwrap(), psi)
                    .unwrap()
                    .conj();
                // ⟨Ind ψ, χ⟩_G = ⟨Res χ, ψ⟩_H; both sides are rational here.
                assert_eq!(lhs.to_rational().unwrap(), rhs.to_rational().unwrap());
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let (g, t) = table(GroupTag::Symmetric(3));
        let dec = decompose(&t, &ClassFunction::regular(&g)).unwrap();
        let mults: Vec<i64> = dec
            .multiplicities
            .iter()
            .map(|m| i64::try_from(m.numer().clone()).unwrap())
            .collect();
        assert_eq!(mults, vec![1, 1, 2]);
        assert!(dec.genuine);

        let (a5, a5t) = table(GroupTag::Alternating(5));
        let a4 = make_catalog(GroupTag::Alternating(4)).unwrap();
        let emb = a5.find_subgroup_isomorphic(&a4, 0).unwrap();
        let (dec, flag) = permutation_character_probe(&a5t, &emb).unwrap();
        let mults: Vec<i64> = dec
            .multiplicities
            .iter()
            .map(|m| i64::try_from(m.numer().clone()).unwrap())
            .collect();
        assert_eq!(mults, vec![1, 0, 0, 1, 0]);
        assert!(!flag);
    }

    #[test]
    fn monomial_examples() {
        let (g, t) = table(GroupTag::Sl2_3);
        match is_monomial(&g, &t).unwrap() {
            MonomialResult::NotMonomial {
                offending_irreducible,
            } => {
                assert_eq!(t.irreducibles()[offending_irreducible].degree_u64(), 2);
            }
            MonomialResult::Monomial { .. } => panic!("SL2(3) is not monomial"),
        }

        let (g, t) = table(GroupTag::Agl1(7));
        assert!(is_monomial(&g, &t).unwrap().is_monomial());

        let (g, t) = table(GroupTag::Cyclic(6));
        match is_monomial(&g, &t).unwrap() {
            MonomialResult::Monomial { witnesses } => {
                assert!(witnesses
                    .iter()
                    .all(|w| w.subgroup_members.len() == g.order()));
            }
            _ => panic!("abelian groups are monomial"),
        }
    }

    #[test]
    fn monomial_witnesses_reinduce() {
        let (g, t) = table(GroupTag::Agl1(8));
        let MonomialResult::Monomial { witnesses } = is_monomial(&g, &t).unwrap() else {
            panic!("AGL1(8) is monomial");
        };
        for w in witnesses {
            let sub = Subgroup::from_members(&g, w.subgroup_members).unwrap();
            let view = SubgroupView::new(sub);
            let psi = ClassFunction::new(&view.group, w.linear_values);
            let ind = induce(&view, &psi).unwrap();
            assert_eq!(&ind, &t.irreducibles()[w.irreducible]);
        }
    }

    #[test]
    fn huppert_examples() {
        let g = make_catalog(GroupTag::Agl1(8)).unwrap();
        let witness = huppert_criterion(&g).unwrap();
        assert_eq!(witness.order(), 8); // the translation subgroup

        let g = make_catalog(GroupTag::Agl1Prime(9)).unwrap();
        let witness = huppert_criterion(&g).unwrap();
        assert_eq!(witness.order(), 9); // translations; quotient cyclic

        let g = make_catalog(GroupTag::Alternating(5)).unwrap();
        assert!(huppert_criterion(&g).is_none());
    }

    #[test]
    fn clifford_examples() {
        // Degree-6 character of AGL1(7) restricted to the index-2 subgroup
        // splits into two constituents of degree 3.
        let (g, t) = table(GroupTag::Agl1(7));
        let n = g
            .normal_subgroups()
            .into_iter()
            .find(|n| n.order() == 21)
            .unwrap();
        let chi6 = t.irreducibles().iter().find(|c| c.degree_u64() == 6).unwrap();
        let split = clifford_split(chi6, &n).unwrap();
        assert_eq!(split.common_degree, 3);
        let count: u64 = split.constituents.iter().map(|(_, m)| m).sum();
        assert_eq!(count, 2);

        // Degree-2 character of S_3 restricted to C_3: two linear pieces.
        let (g, t) = table(GroupTag::Symmetric(3));
        let c3 = g
            .normal_subgroups()
            .into_iter()
            .find(|n| n.order() == 3)
            .unwrap();
        let split = clifford_split(&t.irreducibles()[2], &c3).unwrap();
        assert_eq!(split.common_degree, 1);
        assert_eq!(split.constituents.len(), 2);

        // Restriction to the whole group is the character itself.
        let full = Subgroup::full(&g);
        let split = clifford_split(&t.irreducibles()[2], &full).unwrap();
        assert_eq!(split.common_degree, 2);
        assert_eq!(split.constituents.iter().map(|(_, m)| m).sum::<u64>(), 1);
    }

    #[test]
    fn theta_examples() {
        let (_, t) = table(GroupTag::Symmetric(3));
        // Orders equal to the degrees: θ = r_G, genuine.
        let dims: Vec<i64> = t.degrees().iter().map(|&d| d as i64).collect();
        assert_eq!(theta_is_character(&t, &dims).unwrap(), ThetaResult::Genuine);
        // All zero: the zero character is vacuously genuine.
        assert_eq!(
            theta_is_character(&t, &[0, 0, 0]).unwrap(),
            ThetaResult::Genuine
        );
        // A negative coefficient on the sign character is caught.
        let res = theta_is_character(&t, &[1, -1, 0]).unwrap();
        assert_eq!(
            res,
            ThetaResult::NotGenuine {
                witness_irreducible: 1
            }
        );
    }

    #[test]
    fn probe_examples() {
        let (g, t) = table(GroupTag::Symmetric(3));
        let (_, flag) = permutation_character_probe(&t, &Subgroup::trivial(&g)).unwrap();
        assert!(flag);
        let (dec, flag) = permutation_character_probe(&t, &Subgroup::full(&g)).unwrap();
        assert!(!flag);
        assert!(dec.multiplicities[t.trivial_index()].is_one());
    }

    #[test]
    fn induced_linear_characters_are_genuine() {
        for tag in [GroupTag::Symmetric(4), GroupTag::Agl1(5), GroupTag::Q8] {
            let g = make_catalog(tag).unwrap();
            let t = CharacterTable::new(&g).unwrap();
            for sub in g.subgroups_up_to_conjugacy().unwrap() {
                let view = SubgroupView::new(sub);
                let h_table = CharacterTable::new(&view.group).unwrap();
                for psi in h_table.irreducibles() {
                    if psi.degree_u64() != 1 {
                        continue;
                    }
                    let dec = decompose(&t, &induce(&view, psi).unwrap()).unwrap();
                    assert!(dec.genuine, "{tag}");
                }
            }
        }
    }
}
