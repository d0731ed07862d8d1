//! Machine-checkable certificates that a finite group G lies in the class
//! 𝒮₂ or 𝒮₃ (every Dedekind zeta of a Galois extension with group G has
//! infinitely many zeros of multiplicity ≥ n). Certificates are data: every
//! node stores enough to re-verify it from scratch, and the verifier shares
//! no state with the generator.

pub mod aramata;
pub mod simplex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chartab::{
    huppert_criterion, induce, is_monomial, CharacterTable, ChartabError, ClassFunction,
    MonomialResult, SubgroupView,
};
use crate::cyclo::Cyclotomic;
use crate::groups::{
    is_prime, make_catalog, Group, GroupError, GroupTag, Subgroup, DEFAULT_SUBGROUP_BOUND,
    ISO_BOUND,
};
use crate::perm::Permutation;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("abelian groups have no multiple-zero certificate")]
    AbelianInput,
    #[error("no irreducible of degree >= 3")]
    NoDeg3Irreducible,
    #[error("every certification strategy was exhausted: {trace:?}")]
    CertificationFailed { trace: Vec<String> },
    #[error("Aramata-Brauer system infeasible (this contradicts the theorem)")]
    AramataInfeasible,
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StoredMonomialWitness {
    pub irreducible_index: usize,
    pub subgroup_members: Vec<u32>,
    pub linear_values: Vec<Cyclotomic>,
}

/// One node of a multiplicity certificate. Leaves carry enough data to
/// re-derive their claimed multiplicity from the leaf group alone.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum CertificateNode {
    /// G is monomial (all witnesses stored) with an irreducible of the
    /// claimed degree.
    MonomialBase {
        irreducible_index: usize,
        degree: u64,
        witnesses: Vec<StoredMonomialWitness>,
    },
    /// A normal subgroup satisfying Huppert's criterion certifies
    /// monomiality without exhaustion.
    HuppertBase {
        normal_members: Vec<u32>,
        irreducible_index: usize,
        degree: u64,
    },
    /// Membership is inherited from a subgroup.
    SubgroupStep {
        generators: Vec<Vec<u16>>,
        order: usize,
        child: Box<CertificateNode>,
    },
    /// Membership is inherited from a quotient by a normal subgroup.
    QuotientStep {
        normal_members: Vec<u32>,
        child: Box<CertificateNode>,
    },
    /// The leaf group is AGL₁(q), which carries multiplicity q − 1.
    AglBase { q: u32, multiplicity: u64 },
    /// The leaf group is AGL₁′(q), which carries multiplicity (q − 1)/2.
    AglPrimeBase { q: u32, multiplicity: u64 },
    /// A normal subgroup of prime index, monomial with all degrees ≤ 2,
    /// while G itself has an irreducible of degree ≥ 3: the grouped
    /// auxiliary-product argument applies.
    AuxiliaryProduct {
        normal_members: Vec<u32>,
        prime_index: u64,
        irreducible_index: usize,
        degree: u64,
    },
    /// A minimal simple group referenced through Thompson's classification,
    /// with its designated witness subgroup certified concretely.
    ClassificationLookup {
        family: ThompsonInstance,
        witness: GroupTag,
        child: Box<CertificateNode>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub target: u32,
    pub root: CertificateNode,
    /// Which generation strategy fired at each level, outermost first.
    pub strategy_log: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Accept,
    Reject { reason: String },
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    fn reject(reason: impl Into<String>) -> Verdict {
        Verdict::Reject {
            reason: reason.into(),
        }
    }
}

/// An instance from Thompson's list of minimal simple groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThompsonInstance {
    /// PSL₂(q) for q = 2^p (p prime), q = 3^p (p odd prime), or q = p > 3
    /// prime with p ≡ ±2 mod 5.
    Psl2(u32),
    Psl3_3,
    /// Sz(2^p) for an odd prime p.
    Sz(u32),
}

impl std::fmt::Display for ThompsonInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThompsonInstance::Psl2(q) => write!(f, "PSL2({q})"),
            ThompsonInstance::Psl3_3 => write!(f, "PSL3(3)"),
            ThompsonInstance::Sz(q) => write!(f, "Sz({q})"),
        }
    }
}

impl ThompsonInstance {
    pub fn order(&self) -> u64 {
        match *self {
            ThompsonInstance::Psl2(q) => {
                let q = q as u64;
                q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 }
            }
            ThompsonInstance::Psl3_3 => 5616,
            ThompsonInstance::Sz(q) => {
                let q = q as u64;
                q * q * (q * q + 1) * (q - 1)
            }
        }
    }

    /// Whether the parameter fits Thompson's five families.
    pub fn in_thompson_list(&self) -> bool {
        match *self {
            ThompsonInstance::Psl2(q) => {
                if let Some(p) = perfect_prime_power_exponent(q, 2) {
                    return is_prime(p);
                }
                if let Some(p) = perfect_prime_power_exponent(q, 3) {
                    return is_prime(p) && p > 2;
                }
                let q = q as u64;
                is_prime(q) && q > 3 && (q % 5 == 2 || q % 5 == 3)
            }
            ThompsonInstance::Psl3_3 => true,
            ThompsonInstance::Sz(q) => {
                matches!(perfect_prime_power_exponent(q, 2), Some(p) if is_prime(p) && p > 2)
            }
        }
    }

    /// The designated witness subgroup used in the minimal-simple argument.
    pub fn witness_tag(&self) -> GroupTag {
        match *self {
            ThompsonInstance::Psl2(q) => {
                if perfect_prime_power_exponent(q, 2).is_some() {
                    GroupTag::Agl1(q)
                } else {
                    GroupTag::Agl1Prime(q)
                }
            }
            ThompsonInstance::Psl3_3 => GroupTag::Agl1(4),
            ThompsonInstance::Sz(_) => GroupTag::Agl1(5),
        }
    }

    /// A catalog tag constructing this instance, when one exists.
    pub fn catalog_tag(&self) -> Option<GroupTag> {
        match *self {
            ThompsonInstance::Psl2(q) if q <= 32 => Some(GroupTag::Psl2(q)),
            ThompsonInstance::Psl3_3 => Some(GroupTag::Psl3_3),
            ThompsonInstance::Sz(8) => Some(GroupTag::Sz8),
            _ => None,
        }
    }
}

fn perfect_prime_power_exponent(q: u32, base: u32) -> Option<u64> {
    let mut n = q;
    let mut e = 0;
    while n % base == 0 {
        n /= base;
        e += 1;
    }
    if n == 1 && e > 0 {
        Some(e)
    } else {
        None
    }
}

/// Whether G is simple, nonabelian, and has only solvable proper
/// subgroups. Requires exhaustive subgroup enumeration.
pub fn is_minimal_simple(g: &Group, bound: usize) -> Result<bool, CertifyError> {
    if g.is_abelian() || !g.is_simple() {
        return Ok(false);
    }
    let subs = g.subgroups_up_to_conjugacy_bounded(bound)?;
    for s in subs {
        if s.order() == g.order() {
            continue;
        }
        if !s.to_group().0.is_solvable() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Matches G against Thompson's five families by order and identity check
/// (tag comparison, bounded isomorphism, or class/order fingerprint for
/// groups too big to brute-force).
pub fn thompson_match(g: &Group) -> Option<ThompsonInstance> {
    let order = g.order() as u64;
    let mut candidates: Vec<ThompsonInstance> = Vec::new();
    for p in [2u32, 3, 5, 7, 11, 13] {
        if let Some(q) = 2u32.checked_pow(p) {
            candidates.push(ThompsonInstance::Psl2(q));
        }
        if p > 2 {
            if let Some(q) = 3u32.checked_pow(p) {
                candidates.push(ThompsonInstance::Psl2(q));
            }
            if let Some(q) = 2u32.checked_pow(p) {
                candidates.push(ThompsonInstance::Sz(q));
            }
        }
    }
    // PSL2(p) for primes p ≡ ±2 mod 5: p(p²−1)/2 = order gives p ~ cbrt.
    let mut p = 5u64;
    while p * (p * p - 1) / 2 <= order {
        if is_prime(p) && (p % 5 == 2 || p % 5 == 3) && p * (p * p - 1) / 2 == order {
            candidates.push(ThompsonInstance::Psl2(p as u32));
        }
        p += 2;
    }
    candidates.push(ThompsonInstance::Psl3_3);

    for instance in candidates {
        if !instance.in_thompson_list() || instance.order() != order {
            continue;
        }
        let Some(tag) = instance.catalog_tag() else {
            continue; // not materializable; cannot be an enumerated input
        };
        if g.tag() == Some(&tag) {
            return Some(instance);
        }
        let Ok(reference) = make_catalog(tag) else {
            continue;
        };
        let same = if g.order() <= ISO_BOUND {
            g.is_isomorphic(&reference)
        } else {
            fingerprint(g) == fingerprint(&reference)
        };
        if same {
            return Some(instance);
        }
    }
    None
}

fn fingerprint(g: &Group) -> (usize, Vec<usize>, Vec<(u64, usize)>) {
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
    class_sizes.sort_unstable();
    let mut order_counts: std::collections::BTreeMap<u64, usize> = Default::default();
    for c in g.conjugacy_classes() {
        *order_counts
            .entry(g.element_order(c.rep as usize))
            .or_default() += c.size();
    }
    (
        g.order(),
        class_sizes,
        order_counts.into_iter().collect(),
    )
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

pub fn certify_s2(g: &Group) -> Result<Certificate, CertifyError> {
    if g.is_abelian() {
        return Err(CertifyError::AbelianInput);
    }
    let mut log = Vec::new();
    let root = certify_node(g, 2, &mut log)?;
    Ok(Certificate {
        target: 2,
        root,
        strategy_log: log,
    })
}

/// `Ok(None)` when G has no irreducible of degree ≥ 3.
pub fn certify_s3(g: &Group) -> Result<Option<Certificate>, CertifyError> {
    let table = CharacterTable::new(g)?;
    if table.max_degree() < 3 {
        return Ok(None);
    }
    let mut log = Vec::new();
    let root = certify_node(g, 3, &mut log)?;
    Ok(Some(Certificate {
        target: 3,
        root,
        strategy_log: log,
    }))
}

/// Certificate for a Thompson-list instance that may not be materializable
/// in the catalog; the classification is the axiom, the witness subgroup is
/// certified concretely.
pub fn certify_s3_classification(
    instance: ThompsonInstance,
) -> Result<Certificate, CertifyError> {
    if !instance.in_thompson_list() {
        return Err(CertifyError::Internal(format!(
            "{instance} is not in Thompson's list"
        )));
    }
    let witness_tag = instance.witness_tag();
    let witness = make_catalog(witness_tag)?;
    let mut log = vec![format!(
        "classification lookup: {instance} with witness {witness_tag}"
    )];
    let child = certify_node(&witness, 3, &mut log)?;
    Ok(Certificate {
        target: 3,
        root: CertificateNode::ClassificationLookup {
            family: instance,
            witness: witness_tag,
            child: Box::new(child),
        },
        strategy_log: log,
    })
}

fn first_irreducible_of_degree(table: &CharacterTable, n: u64) -> Option<(usize, u64)> {
    table
        .degrees()
        .into_iter()
        .enumerate()
        .find(|&(_, d)| d >= n)
        .map(|(i, d)| (i, d))
}

fn certify_node(
    g: &Group,
    target: u64,
    log: &mut Vec<String>,
) -> Result<CertificateNode, CertifyError> {
    let mut trace = Vec::new();

    // Strategy 1: a monomial base, through Huppert's criterion first and
    // exhaustion second.
    if let Some(n) = huppert_criterion(g) {
        let table = CharacterTable::new(g)?;
        if let Some((idx, degree)) = first_irreducible_of_degree(&table, target) {
            log.push(format!(
                "huppert base on order {} (N of order {})",
                g.order(),
                n.order()
            ));
            return Ok(CertificateNode::HuppertBase {
                normal_members: n.members().to_vec(),
                irreducible_index: idx,
                degree,
            });
        }
        trace.push("huppert witness found but no irreducible of target degree".into());
    } else {
        trace.push("no huppert witness".into());
    }
    if g.order() <= DEFAULT_SUBGROUP_BOUND {
        let table = CharacterTable::new(g)?;
        if let Some((idx, degree)) = first_irreducible_of_degree(&table, target) {
            if let MonomialResult::Monomial { witnesses } = is_monomial(g, &table)? {
                log.push(format!("monomial base on order {}", g.order()));
                return Ok(CertificateNode::MonomialBase {
                    irreducible_index: idx,
                    degree,
                    witnesses: witnesses
                        .into_iter()
                        .map(|w| StoredMonomialWitness {
                            irreducible_index: w.irreducible,
                            subgroup_members: w.subgroup_members,
                            linear_values: w.linear_values,
                        })
                        .collect(),
                });
            }
            trace.push("not monomial by exhaustion".into());
        } else {
            trace.push("no irreducible of target degree".into());
        }
    }

    // Strategy 2: recurse into a nonabelian normal subgroup or a proper
    // quotient whose table supports the target.
    let normals = g.normal_subgroups();
    for n in normals.iter().rev() {
        if n.order() >= g.order() || n.order() == 1 {
            continue;
        }
        let (ng, _) = n.to_group();
        if ng.is_abelian() {
            continue;
        }
        if target >= 3 && CharacterTable::new(&ng)?.max_degree() < target {
            continue;
        }
        log.push(format!(
            "subgroup step into normal subgroup of order {}",
            ng.order()
        ));
        let child = certify_node(&ng, target, log)?;
        return Ok(subgroup_step(&ng, child));
    }
    for n in normals.iter() {
        if n.order() >= g.order() || n.order() == 1 {
            continue;
        }
        let q = g.quotient(n)?;
        if q.is_abelian() {
            continue;
        }
        if target >= 3 && CharacterTable::new(&q)?.max_degree() < target {
            continue;
        }
        log.push(format!(
            "quotient step by normal subgroup of order {}",
            n.order()
        ));
        let child = certify_node(&q, target, log)?;
        return Ok(CertificateNode::QuotientStep {
            normal_members: n.members().to_vec(),
            child: Box::new(child),
        });
    }
    trace.push("no usable normal subgroup or quotient".into());

    // Strategy 3: the Thompson-designated AGL witness for minimal simple
    // groups, then a generic ascending AGL search.
    let mut agl_targets: Vec<GroupTag> = Vec::new();
    if let Some(instance) = thompson_match(g) {
        agl_targets.push(instance.witness_tag());
    }
    for q in [4u32, 5, 7, 8, 9, 11, 13, 16] {
        let agl_order = (q * (q - 1)) as usize;
        if q >= 4 && g.order() % agl_order == 0 {
            agl_targets.push(GroupTag::Agl1(q));
        }
        if q % 2 == 1 && q >= 7 && g.order() % (agl_order / 2) == 0 {
            agl_targets.push(GroupTag::Agl1Prime(q));
        }
    }
    for tag in agl_targets {
        let (q, prime_variant, multiplicity) = match tag {
            GroupTag::Agl1(q) => (q, false, (q - 1) as u64),
            GroupTag::Agl1Prime(q) => (q, true, ((q - 1) / 2) as u64),
            _ => continue,
        };
        if multiplicity < target {
            continue;
        }
        let Ok(target_group) = make_catalog(tag) else {
            continue;
        };
        if let Some(sub) = g.find_subgroup_isomorphic(&target_group, 0) {
            log.push(format!("embedded {tag} as multiplicity witness"));
            let (hg, _) = sub.to_group();
            let leaf = if prime_variant {
                CertificateNode::AglPrimeBase { q, multiplicity }
            } else {
                CertificateNode::AglBase { q, multiplicity }
            };
            return Ok(subgroup_step(&hg, leaf));
        }
        trace.push(format!("no embedded copy of {tag} found"));
    }

    // Strategy 4: auxiliary-product node for a prime-index monomial normal
    // subgroup with small degrees.
    if target >= 3 {
        let table = CharacterTable::new(g)?;
        if let Some((idx, degree)) = first_irreducible_of_degree(&table, 3) {
            for n in normals.iter().rev() {
                if n.order() >= g.order() || n.order() == 1 {
                    continue;
                }
                let index = (g.order() / n.order()) as u64;
                if !is_prime(index) {
                    continue;
                }
                let (ng, _) = n.to_group();
                let n_table = CharacterTable::new(&ng)?;
                if n_table.max_degree() > 2 {
                    continue;
                }
                let n_monomial = huppert_criterion(&ng).is_some()
                    || (ng.order() <= DEFAULT_SUBGROUP_BOUND
                        && is_monomial(&ng, &n_table)?.is_monomial());
                if !n_monomial {
                    continue;
                }
                log.push(format!(
                    "auxiliary product with normal subgroup of order {}",
                    ng.order()
                ));
                return Ok(CertificateNode::AuxiliaryProduct {
                    normal_members: n.members().to_vec(),
                    prime_index: index,
                    irreducible_index: idx,
                    degree,
                });
            }
        }
        trace.push("no auxiliary-product witness".into());
    }

    // Strategy 5 (S2 only): any nonabelian proper subgroup works; search
    // exhaustively within the bound, or through small catalog targets.
    if target == 2 {
        if g.order() <= DEFAULT_SUBGROUP_BOUND {
            let subs = g.subgroups_up_to_conjugacy()?;
            for sub in subs.iter().rev() {
                if sub.order() >= g.order() || sub.order() == 1 {
                    continue;
                }
                let (hg, _) = sub.to_group();
                if hg.is_abelian() {
                    continue;
                }
                log.push(format!(
                    "subgroup step into nonabelian subgroup of order {}",
                    hg.order()
                ));
                let child = certify_node(&hg, target, log)?;
                return Ok(subgroup_step(&hg, child));
            }
        } else {
            let mut small_targets = vec![GroupTag::Symmetric(3)];
            for p in [3u32, 5, 7, 11, 13] {
                small_targets.push(GroupTag::Dihedral(p));
            }
            for tag in small_targets {
                let Ok(t) = make_catalog(tag) else { continue };
                if g.order() % t.order() != 0 {
                    continue;
                }
                if let Some(sub) = g.find_subgroup_isomorphic(&t, 0) {
                    log.push(format!("embedded {tag} as nonabelian subgroup"));
                    let (hg, _) = sub.to_group();
                    let child = certify_node(&hg, target, log)?;
                    return Ok(subgroup_step(&hg, child));
                }
            }
        }
        trace.push("no nonabelian proper subgroup located".into());
    }

    Err(CertifyError::CertificationFailed { trace })
}

fn subgroup_step(h: &Group, child: CertificateNode) -> CertificateNode {
    CertificateNode::SubgroupStep {
        generators: h
            .generators()
            .iter()
            .map(|p| p.images().to_vec())
            .collect(),
        order: h.order(),
        child: Box::new(child),
    }
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Independently re-checks a certificate against the group it claims to
/// certify. Every base is re-proved by fresh table and witness
/// computations; rejection is a value, never an error.
pub fn verify_certificate(g: &Group, cert: &Certificate) -> Result<Verdict, CertifyError> {
    if cert.target < 2 || cert.target > 3 {
        return Ok(Verdict::reject(format!("unsupported target {}", cert.target)));
    }
    verify_node(g, &cert.root, cert.target as u64)
}

fn verify_node(
    g: &Group,
    node: &CertificateNode,
    target: u64,
) -> Result<Verdict, CertifyError> {
    match node {
        CertificateNode::HuppertBase {
            normal_members,
            irreducible_index,
            degree,
        } => {
            let Ok(n) = Subgroup::from_members(g, normal_members.clone()) else {
                return Ok(Verdict::reject("claimed normal member set is not a subgroup"));
            };
            if n.order() >= g.order() {
                return Ok(Verdict::reject("huppert witness must be proper"));
            }
            if !n.is_normal() {
                return Ok(Verdict::reject("huppert witness is not normal"));
            }
            if !huppert_conditions(g, &n) {
                return Ok(Verdict::reject(
                    "huppert conditions fail (solvable N, abelian Sylows, supersolvable quotient)",
                ));
            }
            verify_degree_claim(g, *irreducible_index, *degree, target)
        }
        CertificateNode::MonomialBase {
            irreducible_index,
            degree,
            witnesses,
        } => {
            let table = CharacterTable::new(g)?;
            match verify_degree_claim_with(&table, *irreducible_index, *degree, target) {
                Verdict::Accept => {}
                reject => return Ok(reject),
            }
            let r = table.irreducibles().len();
            let mut seen = vec![false; r];
            for w in witnesses {
                if w.irreducible_index >= r || seen[w.irreducible_index] {
                    return Ok(Verdict::reject("bad or duplicate witness index"));
                }
                seen[w.irreducible_index] = true;
                let Ok(sub) = Subgroup::from_members(g, w.subgroup_members.clone()) else {
                    return Ok(Verdict::reject("witness member set is not a subgroup"));
                };
                let view = SubgroupView::new(sub);
                if w.linear_values.len() != view.group.class_count() {
                    return Ok(Verdict::reject("witness character has wrong class count"));
                }
                let psi = ClassFunction::new(&view.group, w.linear_values.clone());
                if psi.degree() != crate::cyclo::rat_int(1) {
                    return Ok(Verdict::reject("witness character is not linear"));
                }
                let ind = induce(&view, &psi)?;
                if &ind != &table.irreducibles()[w.irreducible_index] {
                    return Ok(Verdict::reject(format!(
                        "witness induction does not match irreducible {}",
                        w.irreducible_index
                    )));
                }
            }
            if !seen.iter().all(|&s| s) {
                return Ok(Verdict::reject("some irreducible has no monomial witness"));
            }
            Ok(Verdict::Accept)
        }
        CertificateNode::SubgroupStep {
            generators,
            order,
            child,
        } => {
            let mut indices = Vec::new();
            for imgs in generators {
                let Ok(p) = Permutation::from_images(imgs.clone()) else {
                    return Ok(Verdict::reject("subgroup generator is not a permutation"));
                };
                let Some(i) = g.index_of(&p) else {
                    return Ok(Verdict::reject("subgroup generator is not a group element"));
                };
                indices.push(i as u32);
            }
            let sub = g.subgroup_from_indices(&indices);
            if sub.order() != *order {
                return Ok(Verdict::reject(format!(
                    "claimed subgroup order {} but closure has {}",
                    order,
                    sub.order()
                )));
            }
            if sub.order() == 1 {
                return Ok(Verdict::reject("trivial subgroup certifies nothing"));
            }
            let (hg, _) = sub.to_group();
            verify_node(&hg, child, target)
        }
        CertificateNode::QuotientStep {
            normal_members,
            child,
        } => {
            let Ok(n) = Subgroup::from_members(g, normal_members.clone()) else {
                return Ok(Verdict::reject("claimed normal member set is not a subgroup"));
            };
            if n.order() >= g.order() {
                return Ok(Verdict::reject("quotient not proper"));
            }
            if n.order() == 1 {
                return Ok(Verdict::reject("quotient by the trivial subgroup"));
            }
            if !n.is_normal() {
                return Ok(Verdict::reject("quotient step by a non-normal subgroup"));
            }
            let q = g.quotient(&n)?;
            verify_node(&q, child, target)
        }
        CertificateNode::AglBase { q, multiplicity } => {
            if *multiplicity != (*q as u64).saturating_sub(1) || *multiplicity < target {
                return Ok(Verdict::reject(format!(
                    "AGL base multiplicity {multiplicity} does not support target {target}"
                )));
            }
            let Ok(reference) = make_catalog(GroupTag::Agl1(*q)) else {
                return Ok(Verdict::reject(format!("AGL1({q}) is not constructible")));
            };
            if g.order() != reference.order() {
                return Ok(Verdict::reject(format!(
                    "order mismatch: group has {}, AGL1({q}) has {}",
                    g.order(),
                    reference.order()
                )));
            }
            if g.order() > ISO_BOUND || !g.is_isomorphic(&reference) {
                return Ok(Verdict::reject(format!("group is not isomorphic to AGL1({q})")));
            }
            // Re-derive the degree-(q−1) irreducible and its monomial
            // source rather than trusting the citation.
            let table = CharacterTable::new(g)?;
            let nonlinear: Vec<u64> = table.degrees().into_iter().filter(|&d| d > 1).collect();
            if nonlinear != vec![(*q - 1) as u64] {
                return Ok(Verdict::reject(
                    "table does not have a unique nonlinear irreducible of degree q-1",
                ));
            }
            match is_monomial(g, &table)? {
                MonomialResult::Monomial { .. } => Ok(Verdict::Accept),
                MonomialResult::NotMonomial { .. } => {
                    Ok(Verdict::reject("AGL1(q) leaf failed the monomiality re-check"))
                }
            }
        }
        CertificateNode::AglPrimeBase { q, multiplicity } => {
            if *multiplicity != ((*q as u64).saturating_sub(1)) / 2 || *multiplicity < target {
                return Ok(Verdict::reject(format!(
                    "AGL' base multiplicity {multiplicity} does not support target {target}"
                )));
            }
            let Ok(reference) = make_catalog(GroupTag::Agl1Prime(*q)) else {
                return Ok(Verdict::reject(format!("AGL1Prime({q}) is not constructible")));
            };
            if g.order() != reference.order() {
                return Ok(Verdict::reject(format!(
                    "order mismatch: group has {}, AGL1Prime({q}) has {}",
                    g.order(),
                    reference.order()
                )));
            }
            if g.order() > ISO_BOUND || !g.is_isomorphic(&reference) {
                return Ok(Verdict::reject(format!(
                    "group is not isomorphic to AGL1Prime({q})"
                )));
            }
            let table = CharacterTable::new(g)?;
            if !table
                .degrees()
                .iter()
                .all(|&d| d == 1 || d >= *multiplicity)
            {
                return Ok(Verdict::reject(
                    "nonlinear degree below (q-1)/2 contradicts the Clifford bound",
                ));
            }
            if !table.degrees().iter().any(|&d| d >= *multiplicity && d > 1) {
                return Ok(Verdict::reject("no nonlinear irreducible at the claimed degree"));
            }
            let monomial = huppert_criterion(g).is_some()
                || matches!(is_monomial(g, &table)?, MonomialResult::Monomial { .. });
            if !monomial {
                return Ok(Verdict::reject("AGL1'(q) leaf failed the monomiality re-check"));
            }
            Ok(Verdict::Accept)
        }
        CertificateNode::AuxiliaryProduct {
            normal_members,
            prime_index,
            irreducible_index,
            degree,
        } => {
            let Ok(n) = Subgroup::from_members(g, normal_members.clone()) else {
                return Ok(Verdict::reject("claimed normal member set is not a subgroup"));
            };
            if !n.is_normal() || n.order() >= g.order() {
                return Ok(Verdict::reject("auxiliary product needs a proper normal subgroup"));
            }
            let index = (g.order() / n.order()) as u64;
            if index != *prime_index || !is_prime(index) {
                return Ok(Verdict::reject("index is not the claimed prime"));
            }
            let (ng, _) = n.to_group();
            let n_table = CharacterTable::new(&ng)?;
            if n_table.max_degree() > 2 {
                return Ok(Verdict::reject("normal subgroup has an irreducible of degree > 2"));
            }
            let n_monomial = huppert_criterion(&ng).is_some()
                || (ng.order() <= DEFAULT_SUBGROUP_BOUND
                    && is_monomial(&ng, &n_table)?.is_monomial());
            if !n_monomial {
                return Ok(Verdict::reject("normal subgroup monomiality could not be re-derived"));
            }
            if *degree < 3 || *degree < target {
                return Ok(Verdict::reject("auxiliary product needs degree >= 3"));
            }
            verify_degree_claim(g, *irreducible_index, *degree, target)
        }
        CertificateNode::ClassificationLookup {
            family,
            witness,
            child,
        } => {
            if !family.in_thompson_list() {
                return Ok(Verdict::reject(format!("{family} is not in Thompson's list")));
            }
            if family.witness_tag() != *witness {
                return Ok(Verdict::reject(format!(
                    "witness {witness} is not the designated subgroup for {family}"
                )));
            }
            let Ok(witness_group) = make_catalog(*witness) else {
                return Ok(Verdict::reject(format!("witness {witness} is not constructible")));
            };
            verify_node(&witness_group, child, target)
        }
    }
}

fn verify_degree_claim(
    g: &Group,
    index: usize,
    degree: u64,
    target: u64,
) -> Result<Verdict, CertifyError> {
    let table = CharacterTable::new(g)?;
    Ok(verify_degree_claim_with(&table, index, degree, target))
}

fn verify_degree_claim_with(
    table: &CharacterTable,
    index: usize,
    degree: u64,
    target: u64,
) -> Verdict {
    if index >= table.irreducibles().len() {
        return Verdict::reject("irreducible index out of range");
    }
    let actual = table.irreducibles()[index].degree_u64();
    if actual != degree {
        return Verdict::reject(format!(
            "claimed degree {degree} but irreducible {index} has degree {actual}"
        ));
    }
    if degree < target {
        return Verdict::reject(format!("degree {degree} below target {target}"));
    }
    Verdict::Accept
}

fn huppert_conditions(g: &Group, n: &Subgroup) -> bool {
    let (ng, _) = n.to_group();
    if !ng.is_solvable() {
        return false;
    }
    let sylows_abelian = crate::groups::factorize(ng.order() as u64)
        .into_iter()
        .all(|(p, _)| match ng.sylow_subgroup(p) {
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
