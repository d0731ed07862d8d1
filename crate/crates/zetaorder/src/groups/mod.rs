//! Finite permutation-group engine: construction, conjugacy, subgroups,
//! quotients, and structural predicates.
//!
//! Groups are fully enumerated. Element indices refer to the lexicographic
//! ordering of image arrays, so index 0 is always the identity and every
//! derived ordering (conjugacy classes, subgroup lists) is reproducible
//! byte-for-byte across runs.

mod enumerate;
pub mod catalog;

pub use catalog::{make_catalog, GroupTag};

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Closure bound for `from_generators`.
pub const DEFAULT_ELEMENT_BOUND: usize = 1_000_000;
/// Groups up to this order get a dense product table; larger ones multiply
/// through composition and hash lookup.
pub const PRODUCT_TABLE_BOUND: usize = 4096;
/// Exhaustive subgroup enumeration is allowed up to this order.
pub const DEFAULT_SUBGROUP_BOUND: usize = 500;
/// Brute-force isomorphism testing is allowed up to this order.
pub const ISO_BOUND: usize = 256;

pub type Group = Arc<FiniteGroup>;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("closure exceeds the element bound {bound} ({context})")]
    BoundExceeded { bound: usize, context: &'static str },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(#[from] PermError),
    #[error("generators have mismatched degrees")]
    DegreeMismatch,
    #[error("empty generator list (degree unknown)")]
    EmptyGeneratorList,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup of this group")]
    NotASubgroup,
    #[error("prime {0} does not divide the group order")]
    PrimeDoesNotDivide(u64),
    #[error("unsupported catalog parameter: {0}")]
    UnsupportedParameter(String),
}

/// One conjugacy class: representative (minimal member), size, and the full
/// member list in ascending index order.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub rep: u32,
    pub members: Vec<u32>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructuralPredicates {
    pub is_abelian: bool,
    pub is_solvable: bool,
    pub is_supersolvable: bool,
    pub is_simple: bool,
    pub is_nilpotent: bool,
}

/// A finite permutation group with full element enumeration and conjugacy
/// classes. Immutable after construction.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inverse: Vec<u32>,
    product_table: Option<Vec<u32>>,
    class_of: Vec<u32>,
    classes: Vec<ConjugacyClass>,
    tag: Option<GroupTag>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("classes", &self.classes.len())
            .field("tag", &self.tag)
            .finish()
    }
}

impl FiniteGroup {
    pub fn from_generators(gens: Vec<Permutation>) -> Result<Group, GroupError> {
        Self::from_generators_bounded(gens, DEFAULT_ELEMENT_BOUND, None)
    }

    pub fn from_generators_tagged(
        gens: Vec<Permutation>,
        tag: GroupTag,
    ) -> Result<Group, GroupError> {
        Self::from_generators_bounded(gens, DEFAULT_ELEMENT_BOUND, Some(tag))
    }

    pub fn from_generators_bounded(
        gens: Vec<Permutation>,
        bound: usize,
        tag: Option<GroupTag>,
    ) -> Result<Group, GroupError> {
        if gens.is_empty() {
            return Err(GroupError::EmptyGeneratorList);
        }
        let degree = gens[0].degree();
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }

        // Breadth-first closure under the generators.
        let mut seen: HashMap<Permutation, u32> = HashMap::new();
        let identity = Permutation::identity(degree);
        seen.insert(identity.clone(), 0);
        let mut frontier = vec![identity];
        let mut all = frontier.clone();
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = g.compose(&p);
                if !seen.contains_key(&q) {
                    if all.len() >= bound {
                        return Err(GroupError::BoundExceeded {
                            bound,
                            context: "group closure",
                        });
                    }
                    seen.insert(q.clone(), 0);
                    all.push(q.clone());
                    frontier.push(q);
                }
            }
        }

        let mut elements = all;
        elements.sort_unstable();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let n = elements.len();
        debug_assert!(elements[0].is_identity());

        let inverse: Vec<u32> = elements.iter().map(|p| index[&p.inverse()]).collect();

        let product_table = if n <= PRODUCT_TABLE_BOUND {
            let mut table = vec![0u32; n * n];
            for (i, p) in elements.iter().enumerate() {
                for (j, q) in elements.iter().enumerate() {
                    table[i * n + j] = index[&p.compose(q)];
                }
            }
            Some(table)
        } else {
            None
        };

        let mut group = FiniteGroup {
            degree,
            generators: gens,
            elements,
            index,
            inverse,
            product_table,
            class_of: Vec::new(),
            classes: Vec::new(),
            tag,
        };
        group.compute_classes();
        Ok(Arc::new(group))
    }

    /// Conjugation orbits under the generators, then a stable (size,
    /// minimal-member) ordering.
    fn compute_classes(&mut self) {
        let n = self.order();
        let gen_indices: Vec<u32> = self.generators.iter().map(|g| self.index[g]).collect();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let label = classes.len() as u32;
            class_of[start as usize] = label;
            let mut members = vec![start];
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for &a in &gen_indices {
                    let y = self.mul(self.mul(a as usize, x as usize), self.inv(a as usize) as usize)
                        as u32;
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = label;
                        members.push(y);
                        frontier.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { rep: start, members });
        }
        // Sort by (size, minimal member); repair the class_of labels after.
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&c| (classes[c].members.len(), classes[c].rep));
        let mut relabel = vec![0u32; classes.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }
        let mut sorted = Vec::with_capacity(classes.len());
        for &old in &order {
            sorted.push(classes[old].clone());
        }
        self.classes = sorted;
        self.class_of = class_of;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn tag(&self) -> Option<&GroupTag> {
        self.tag.as_ref()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.product_table {
            Some(t) => t[i * self.order() + j] as usize,
            None => {
                let p = self.elements[i].compose(&self.elements[j]);
                self.index[&p] as usize
            }
        }
    }

    #[inline]
    pub fn inv(&self, i: usize) -> u32 {
        self.inverse[i]
    }

    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(by, g), self.inv(by) as usize)
    }

    pub fn pow(&self, i: usize, k: i64) -> usize {
        let p = self.elements[i].pow(k);
        self.index[&p] as usize
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.elements[i].order()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .map(|c| self.element_order(c.rep as usize))
            .fold(1, num_integer::lcm)
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    /// Class of `rep(class)^k`.
    pub fn power_class(&self, class: usize, k: i64) -> usize {
        let rep = self.classes[class].rep as usize;
        self.class_of(self.pow(rep, k))
    }

    /// Class of the inverses of a class.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.class_of(self.inv(self.classes[class].rep as usize) as usize)
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index[g] as usize)
            .collect();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_perfect(self: &Group) -> bool {
        self.derived_subgroup().order() == self.order()
    }
}

impl FiniteGroup {
    /// Subgroup generated by the given element indices.
    pub fn subgroup_from_indices(self: &Group, gens: &[u32]) -> Subgroup {
        let members = self.closure_of(gens);
        Subgroup {
            parent: self.clone(),
            members,
        }
    }

    /// Closure of the given generators under products, as sorted indices.
    /// Cost is |result| · |gens| group multiplications, so callers keep
    /// generating sets small.
    fn closure_of(&self, gens: &[u32]) -> Vec<u32> {
        let mut members: Vec<bool> = vec![false; self.order()];
        members[0] = true;
        let mut list: Vec<u32> = vec![0];
        let mut gens: Vec<u32> = gens.to_vec();
        gens.retain(|&g| g != 0);
        gens.sort_unstable();
        gens.dedup();
        for &g in &gens {
            if !members[g as usize] {
                members[g as usize] = true;
                list.push(g);
            }
        }
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x as usize, g as usize) as u32;
                if !members[y as usize] {
                    members[y as usize] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Greedy small generating set for an already-closed member list.
    fn small_generating_set(&self, members: &[u32]) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut closed: Vec<u32> = vec![0];
        for &m in members {
            if closed.binary_search(&m).is_err() {
                gens.push(m);
                closed = self.closure_of(&gens);
                if closed.len() == members.len() {
                    break;
                }
            }
        }
        gens
    }

    /// Closure with an early exit once the size passes `cap`. Returns None if
    /// the cap is exceeded.
    fn closure_capped(&self, gens: &[u32], cap: usize) -> Option<Vec<u32>> {
        let mut members: Vec<bool> = vec![false; self.order()];
        members[0] = true;
        let mut list: Vec<u32> = vec![0];
        for &g in gens {
            if !members[g as usize] {
                members[g as usize] = true;
                list.push(g);
            }
        }
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x as usize, g as usize) as u32;
                if !members[y as usize] {
                    if list.len() >= cap {
                        return None;
                    }
                    members[y as usize] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        Some(list)
    }

    /// The commutator subgroup, as the normal closure of generator
    /// commutators.
    pub fn derived_subgroup(self: &Group) -> Subgroup {
        let gens: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index[g] as usize)
            .collect();
        let mut comms: Vec<u32> = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let c = self.mul(
                    self.mul(self.inv(a) as usize, self.inv(b) as usize),
                    self.mul(a, b),
                );
                if c != 0 {
                    comms.push(c as u32);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Smallest normal subgroup containing the given elements. Each added
    /// conjugate at least doubles the subgroup, so at most log₂|G| closure
    /// passes happen, each over a small generating set.
    pub fn normal_closure(self: &Group, seed: &[u32]) -> Subgroup {
        let group_gens: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index[g] as usize)
            .collect();
        let mut closure_gens: Vec<u32> = seed.to_vec();
        closure_gens.sort_unstable();
        closure_gens.dedup();
        'grow: loop {
            let members = self.closure_of(&closure_gens);
            for &m in &members {
                for &a in &group_gens {
                    let c = self.conjugate(m as usize, a) as u32;
                    if members.binary_search(&c).is_err() {
                        closure_gens.push(c);
                        continue 'grow;
                    }
                }
            }
            return Subgroup {
                parent: self.clone(),
                members,
            };
        }
    }

    /// Derived series stabilizing at the trivial group.
    pub fn is_solvable(self: &Group) -> bool {
        let mut current: Group = self.clone();
        loop {
            let derived = current.derived_subgroup();
            if derived.order() == 1 {
                return true;
            }
            if derived.order() == current.order() {
                return false;
            }
            current = derived.to_group().0;
        }
    }

    /// All normal subgroups, as joins of normal closures of conjugacy
    /// classes. Sorted ascending by (order, members).
    pub fn normal_subgroups(self: &Group) -> Vec<Subgroup> {
        // (members, small generating set) per class closure.
        let mut closures: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
        for class in &self.classes {
            if class.rep == 0 {
                continue;
            }
            let n = self.normal_closure(&[class.rep]);
            let gens = self.small_generating_set(&n.members);
            if !closures.iter().any(|(m, _)| *m == n.members) {
                closures.push((n.members, gens));
            }
        }
        let mut sets: Vec<(Vec<u32>, Vec<u32>)> = vec![(vec![0], Vec::new())];
        for c in &closures {
            if !sets.iter().any(|(m, _)| m == &c.0) {
                sets.push(c.clone());
            }
        }
        // Join-closure: the product of two normal subgroups is normal, and
        // every normal subgroup is the join of the class closures inside it.
        loop {
            let mut added = false;
            let snapshot = sets.clone();
            for (_, gens_a) in &snapshot {
                for (_, gens_b) in &closures {
                    let mut joined_gens = gens_a.clone();
                    joined_gens.extend_from_slice(gens_b);
                    let join = self.closure_of(&joined_gens);
                    if !sets.iter().any(|(m, _)| *m == join) {
                        let gens = self.small_generating_set(&join);
                        sets.push((join, gens));
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        sets.sort_unstable_by_key(|(m, _)| (m.len(), m.clone()));
        sets.into_iter()
            .map(|(members, _)| Subgroup {
                parent: self.clone(),
                members,
            })
            .collect()
    }

    pub fn is_simple(self: &Group) -> bool {
        self.order() > 1 && self.normal_subgroups().len() == 2
    }

    /// Quotient by a normal subgroup, as the left-multiplication action on
    /// cosets.
    pub fn quotient(self: &Group, n: &Subgroup) -> Result<Group, GroupError> {
        if !Arc::ptr_eq(&n.parent, self) {
            return Err(GroupError::NotASubgroup);
        }
        if !n.is_normal() {
            return Err(GroupError::NotNormal);
        }
        let order = self.order();
        // Name each coset gN by its minimal member.
        let mut coset_key = vec![u32::MAX; order];
        let mut keys: Vec<u32> = Vec::new();
        for g in 0..order {
            if coset_key[g] != u32::MAX {
                continue;
            }
            let mut min = u32::MAX;
            let coset: Vec<u32> = n
                .members
                .iter()
                .map(|&m| self.mul(g, m as usize) as u32)
                .collect();
            for &c in &coset {
                min = min.min(c);
            }
            for &c in &coset {
                coset_key[c as usize] = min;
            }
            keys.push(min);
        }
        keys.sort_unstable();
        let point_of: HashMap<u32, u16> = keys
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i as u16))
            .collect();
        let mut quotient_gens = Vec::new();
        for g in &self.generators {
            let gi = self.index[g] as usize;
            let images: Vec<u16> = keys
                .iter()
                .map(|&k| point_of[&coset_key[self.mul(gi, k as usize)]])
                .collect();
            quotient_gens.push(Permutation::from_images(images)?);
        }
        FiniteGroup::from_generators_bounded(quotient_gens, DEFAULT_ELEMENT_BOUND, None)
    }

    /// A Sylow p-subgroup, grown through normalizers.
    pub fn sylow_subgroup(self: &Group, p: u64) -> Result<Subgroup, GroupError> {
        let order = self.order() as u64;
        if order % p != 0 {
            return Err(GroupError::PrimeDoesNotDivide(p));
        }
        let mut target = 1u64;
        let mut rest = order;
        while rest % p == 0 {
            rest /= p;
            target *= p;
        }
        // p-part of the first element whose order is divisible by p.
        let mut gens: Vec<u32> = Vec::new();
        let mut current: Vec<u32> = Vec::new();
        for i in 0..self.order() {
            let o = self.element_order(i);
            if o % p == 0 {
                let mut m = o;
                while m % p == 0 {
                    m /= p;
                }
                gens.push(self.pow(i, m as i64) as u32);
                current = self.closure_of(&gens);
                break;
            }
        }
        assert!(!current.is_empty(), "no p-element found");
        while (current.len() as u64) < target {
            let mut extended = false;
            for y in 0..self.order() {
                if current.binary_search(&(y as u32)).is_ok() {
                    continue;
                }
                // y must normalize the current p-group.
                if !current
                    .iter()
                    .all(|&m| current.binary_search(&(self.conjugate(m as usize, y) as u32)).is_ok())
                {
                    continue;
                }
                let o = self.element_order(y);
                let mut m = o;
                while m % p == 0 {
                    m /= p;
                }
                let z = self.pow(y, m as i64);
                if z == 0 || current.binary_search(&(z as u32)).is_ok() {
                    continue;
                }
                gens.push(z as u32);
                let bigger = self.closure_of(&gens);
                debug_assert!(is_prime_power(bigger.len() as u64, p));
                current = bigger;
                extended = true;
                break;
            }
            assert!(extended, "Sylow subgroup growth stalled");
        }
        Ok(Subgroup {
            parent: self.clone(),
            members: current,
        })
    }

    pub fn is_nilpotent(self: &Group) -> bool {
        let order = self.order() as u64;
        let mut primes = Vec::new();
        let mut rest = order;
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                primes.push(p);
                while rest % p == 0 {
                    rest /= p;
                }
            }
            p += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        primes.iter().all(|&p| {
            self.sylow_subgroup(p)
                .map(|s| s.is_normal())
                .unwrap_or(false)
        })
    }

    /// Supersolvability. Within the exhaustive bound this is the
    /// maximal-subgroup prime-index criterion; above it, the normal-series
    /// characterization (a prime-order normal subgroup with supersolvable
    /// quotient) is used instead.
    pub fn is_supersolvable(self: &Group) -> bool {
        if self.order() == 1 {
            return true;
        }
        if self.is_abelian() {
            return true;
        }
        if self.order() <= DEFAULT_SUBGROUP_BOUND {
            let subgroups = self
                .subgroups_up_to_conjugacy()
                .expect("within exhaustive bound");
            return self
                .maximal_subgroups(&subgroups)
                .iter()
                .all(|m| is_prime(self.order() as u64 / m.order() as u64));
        }
        for n in self.normal_subgroups() {
            if is_prime(n.order() as u64) {
                let q = self.quotient(&n).expect("normal");
                if q.is_supersolvable() {
                    return true;
                }
            }
        }
        false
    }

    pub fn structural_predicates(self: &Group) -> StructuralPredicates {
        StructuralPredicates {
            is_abelian: self.is_abelian(),
            is_solvable: self.is_solvable(),
            is_supersolvable: self.is_supersolvable(),
            is_simple: self.is_simple(),
            is_nilpotent: self.is_nilpotent(),
        }
    }

    pub fn center(self: &Group) -> Subgroup {
        let members: Vec<u32> = (0..self.order())
            .filter(|&i| {
                self.generators
                    .iter()
                    .all(|g| {
                        let gi = self.index[g] as usize;
                        self.mul(i, gi) == self.mul(gi, i)
                    })
            })
            .map(|i| i as u32)
            .collect();
        Subgroup {
            parent: self.clone(),
            members,
        }
    }

    /// Maximal members of a full subgroup-class list (excluding the group
    /// itself): those not properly contained in any other proper subgroup,
    /// up to conjugacy.
    fn maximal_subgroups(self: &Group, classes: &[Subgroup]) -> Vec<Subgroup> {
        // Containment up to conjugacy needs all conjugates of each class rep.
        let mut all: Vec<Vec<u32>> = Vec::new();
        for s in classes {
            for c in s.conjugates() {
                all.push(c.members);
            }
        }
        let mut result = Vec::new();
        for s in classes {
            if s.order() == self.order() {
                continue;
            }
            let contained = all.iter().any(|k| {
                k.len() > s.members.len()
                    && k.len() < self.order()
                    && s.members.iter().all(|m| k.binary_search(m).is_ok())
            });
            if !contained {
                result.push(s.clone());
            }
        }
        result
    }
}

/// A subgroup, stored as the sorted member indices within its parent group.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    members: Vec<u32>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {} of {:?})", self.members.len(), self.parent)
    }
}

impl Subgroup {
    pub fn trivial(parent: &Group) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            members: vec![0],
        }
    }

    pub fn full(parent: &Group) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            members: (0..parent.order() as u32).collect(),
        }
    }

    /// Wraps an already-closed member set (checked).
    pub fn from_members(parent: &Group, mut members: Vec<u32>) -> Result<Subgroup, GroupError> {
        members.sort_unstable();
        members.dedup();
        let gens = parent.small_generating_set(&members);
        let closed = parent.closure_of(&gens);
        if closed != members {
            return Err(GroupError::NotASubgroup);
        }
        Ok(Subgroup {
            parent: parent.clone(),
            members,
        })
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&(index as u32)).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        self.parent
            .generators
            .iter()
            .map(|g| self.parent.index[g] as usize)
            .all(|a| {
                self.members
                    .iter()
                    .all(|&m| self.contains(self.parent.conjugate(m as usize, a)))
            })
    }

    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut members: Vec<u32> = self
            .members
            .iter()
            .map(|&m| self.parent.conjugate(m as usize, g) as u32)
            .collect();
        members.sort_unstable();
        Subgroup {
            parent: self.parent.clone(),
            members,
        }
    }

    /// All distinct conjugates of this subgroup.
    pub fn conjugates(&self) -> Vec<Subgroup> {
        let gens: Vec<usize> = self
            .parent
            .generators
            .iter()
            .map(|g| self.parent.index[g] as usize)
            .collect();
        let mut seen: Vec<Vec<u32>> = vec![self.members.clone()];
        let mut frontier = vec![self.members.clone()];
        while let Some(s) = frontier.pop() {
            for &a in &gens {
                let mut c: Vec<u32> = s
                    .iter()
                    .map(|&m| self.parent.conjugate(m as usize, a) as u32)
                    .collect();
                c.sort_unstable();
                if !seen.contains(&c) {
                    seen.push(c.clone());
                    frontier.push(c);
                }
            }
        }
        seen.sort_unstable();
        seen.into_iter()
            .map(|members| Subgroup {
                parent: self.parent.clone(),
                members,
            })
            .collect()
    }

    /// Materializes the subgroup as a standalone group, plus the embedding
    /// from its element indices to parent element indices.
    pub fn to_group(&self) -> (Group, Vec<u32>) {
        if self.order() == self.parent.order() {
            let embed = (0..self.parent.order() as u32).collect();
            return (self.parent.clone(), embed);
        }
        let gens = self.parent.small_generating_set(&self.members);
        let perm_gens: Vec<Permutation> = if gens.is_empty() {
            vec![Permutation::identity(self.parent.degree())]
        } else {
            gens.iter()
                .map(|&g| self.parent.elements[g as usize].clone())
                .collect()
        };
        let group = FiniteGroup::from_generators_bounded(perm_gens, self.members.len() + 1, None)
            .expect("subgroup closure is bounded by its own order");
        let embed: Vec<u32> = group
            .elements
            .iter()
            .map(|p| self.parent.index[p])
            .collect();
        (group, embed)
    }

    /// Parent element index -> subgroup element index, for restriction maps.
    pub fn index_in_subgroup(&self, sub: &Group, parent_index: usize) -> Option<usize> {
        sub.index_of(&self.parent.elements[parent_index])
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn is_prime_power(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Prime factorization as (prime, exponent) pairs.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(degree: usize, cycles: &[Vec<usize>]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn s3() -> Group {
        make_catalog(GroupTag::Symmetric(3)).unwrap()
    }

    #[test]
    fn closure_of_single_three_cycle() {
        let g = FiniteGroup::from_generators(vec![perm(3, &[vec![0, 1, 2]])]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.class_count(), 3);
    }

    #[test]
    fn closure_of_transposition_and_three_cycle() {
        let g =
            FiniteGroup::from_generators(vec![perm(3, &[vec![0, 1]]), perm(3, &[vec![0, 1, 2]])])
                .unwrap();
        assert_eq!(g.order(), 6);
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        // Independent check: exhaustive conjugation partitions.
        for class in g.conjugacy_classes() {
            for &m in &class.members {
                for x in 0..g.order() {
                    assert!(class.members.binary_search(&(g.conjugate(m as usize, x) as u32)).is_ok());
                }
            }
        }
    }

    #[test]
    fn trivial_group_from_identity() {
        let g = FiniteGroup::from_generators(vec![Permutation::identity(4)]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_bound_is_enforced() {
        let gens = vec![perm(6, &[vec![0, 1]]), perm(6, &[(0..6).collect()])];
        match FiniteGroup::from_generators_bounded(gens, 100, None) {
            Err(GroupError::BoundExceeded { .. }) => {}
            other => panic!("expected BoundExceeded, got {other:?}"),
        }
    }

    #[test]
    fn agl1_catalog_orders() {
        assert_eq!(make_catalog(GroupTag::Agl1(4)).unwrap().order(), 12);
        assert_eq!(make_catalog(GroupTag::Agl1(5)).unwrap().order(), 20);
        assert_eq!(make_catalog(GroupTag::Agl1Prime(7)).unwrap().order(), 21);
        assert!(make_catalog(GroupTag::Agl1Prime(8)).is_err());
        assert!(make_catalog(GroupTag::Agl1(6)).is_err());
    }

    #[test]
    fn agl1_4_is_psl2_3() {
        let a = make_catalog(GroupTag::Agl1(4)).unwrap();
        let b = make_catalog(GroupTag::Psl2(3)).unwrap();
        assert!(a.is_isomorphic(&b));
    }

    #[test]
    fn agl1_5_is_sz2() {
        // Sz(2) is the Frobenius group of order 20: C5 ⋊ C4 with a faithful
        // order-4 action, i.e. ⟨a, b | a^5, b^4, b a b⁻¹ = a²⟩.
        let f20 = FiniteGroup::from_generators(vec![
            perm(5, &[vec![0, 1, 2, 3, 4]]),
            perm(5, &[vec![1, 2, 4, 3]]),
        ])
        .unwrap();
        assert_eq!(f20.order(), 20);
        let agl = make_catalog(GroupTag::Agl1(5)).unwrap();
        assert!(agl.is_isomorphic(&f20));
    }

    #[test]
    fn conjugacy_class_counts_for_catalog_examples() {
        assert_eq!(make_catalog(GroupTag::Cyclic(3)).unwrap().class_count(), 3);
        assert_eq!(make_catalog(GroupTag::Agl1(5)).unwrap().class_count(), 5);
    }

    #[test]
    fn subgroup_classes_of_s3() {
        let g = s3();
        let subs = g.subgroups_up_to_conjugacy().unwrap();
        assert_eq!(subs.len(), 4);
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        let total: usize = subs.iter().map(|s| s.conjugates().len()).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn subgroup_lattice_of_c4() {
        let g = make_catalog(GroupTag::Cyclic(4)).unwrap();
        let subs = g.subgroups_up_to_conjugacy().unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn subgroups_of_a4_have_v4_and_c3_but_no_c6() {
        let g = make_catalog(GroupTag::Alternating(4)).unwrap();
        let subs = g.subgroups_up_to_conjugacy().unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert!(orders.contains(&4));
        assert!(orders.contains(&3));
        assert!(!orders.contains(&6));
    }

    #[test]
    fn quotient_of_s3_by_c3() {
        let g = s3();
        let c3 = g
            .normal_subgroups()
            .into_iter()
            .find(|n| n.order() == 3)
            .unwrap();
        let q = g.quotient(&c3).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn a5_is_simple() {
        let g = make_catalog(GroupTag::Alternating(5)).unwrap();
        let normals = g.normal_subgroups();
        assert_eq!(normals.len(), 2);
        assert!(g.is_simple());
    }

    #[test]
    fn q8_mod_center_is_klein_four() {
        let g = make_catalog(GroupTag::Q8).unwrap();
        let center = g.center();
        assert_eq!(center.order(), 2);
        let q = g.quotient(&center).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        assert!(q.elements().iter().all(|p| p.order() <= 2));
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = s3();
        let c2 = g.subgroup_from_indices(&[g
            .elements()
            .iter()
            .position(|p| p.order() == 2)
            .unwrap() as u32]);
        assert!(matches!(g.quotient(&c2), Err(GroupError::NotNormal)));
    }

    #[test]
    fn structural_predicates_examples() {
        let a5 = make_catalog(GroupTag::Alternating(5)).unwrap();
        let p = a5.structural_predicates();
        assert!(p.is_simple && !p.is_solvable && !p.is_abelian);

        let agl8 = make_catalog(GroupTag::Agl1(8)).unwrap();
        let p = agl8.structural_predicates();
        assert!(p.is_solvable && !p.is_nilpotent);

        let c12 = make_catalog(GroupTag::Cyclic(12)).unwrap();
        let p = c12.structural_predicates();
        assert!(p.is_abelian && p.is_solvable && p.is_supersolvable && p.is_nilpotent);
        assert!(!p.is_simple);
    }

    #[test]
    fn supersolvable_implies_solvable_on_small_catalog() {
        for tag in [
            GroupTag::Symmetric(3),
            GroupTag::Symmetric(4),
            GroupTag::Alternating(4),
            GroupTag::Dihedral(6),
            GroupTag::Q8,
            GroupTag::Sl2_3,
            GroupTag::Agl1(5),
            GroupTag::Agl1(8),
            GroupTag::Cyclic(12),
        ] {
            let g = make_catalog(tag).unwrap();
            let p = g.structural_predicates();
            if p.is_supersolvable {
                assert!(p.is_solvable, "{tag}");
            }
            if p.is_nilpotent {
                assert!(p.is_supersolvable, "{tag}");
            }
        }
    }

    #[test]
    fn embedding_search_examples() {
        let a5 = make_catalog(GroupTag::Psl2(4)).unwrap();
        assert_eq!(a5.order(), 60);
        let a4 = make_catalog(GroupTag::Agl1(4)).unwrap();
        let emb = a5.find_subgroup_isomorphic(&a4, 0).unwrap();
        assert_eq!(emb.order(), 12);

        let psl27 = make_catalog(GroupTag::Psl2(7)).unwrap();
        let agl7p = make_catalog(GroupTag::Agl1Prime(7)).unwrap();
        let emb = psl27.find_subgroup_isomorphic(&agl7p, 0).unwrap();
        assert_eq!(emb.order(), 21);

        let c6 = make_catalog(GroupTag::Cyclic(6)).unwrap();
        let s3 = s3();
        assert!(c6.find_subgroup_isomorphic(&s3, 0).is_none());
    }

    #[test]
    fn embedding_search_is_deterministic() {
        let psl27 = make_catalog(GroupTag::Psl2(7)).unwrap();
        let agl7p = make_catalog(GroupTag::Agl1Prime(7)).unwrap();
        let a = psl27.find_subgroup_isomorphic(&agl7p, 7).unwrap();
        let b = psl27.find_subgroup_isomorphic(&agl7p, 7).unwrap();
        assert_eq!(a.members(), b.members());
    }

    #[test]
    fn sylow_subgroup_examples() {
        let g = s3();
        let syl = g.sylow_subgroup(3).unwrap();
        assert_eq!(syl.order(), 3);
        assert!(matches!(
            g.sylow_subgroup(5),
            Err(GroupError::PrimeDoesNotDivide(5))
        ));

        let agl8 = make_catalog(GroupTag::Agl1(8)).unwrap();
        let syl = agl8.sylow_subgroup(2).unwrap();
        assert_eq!(syl.order(), 8);
        let (as_group, _) = syl.to_group();
        assert!(as_group.is_abelian());
        assert!(as_group.elements().iter().all(|p| p.order() <= 2));

        let sl23 = make_catalog(GroupTag::Sl2_3).unwrap();
        let syl = sl23.sylow_subgroup(2).unwrap();
        assert_eq!(syl.order(), 8);
        let q8 = make_catalog(GroupTag::Q8).unwrap();
        assert!(syl.to_group().0.is_isomorphic(&q8));
    }

    #[test]
    fn class_sizes_sum_to_order_across_catalog() {
        for tag in [
            GroupTag::Cyclic(7),
            GroupTag::Dihedral(5),
            GroupTag::Symmetric(4),
            GroupTag::Alternating(5),
            GroupTag::Agl1(8),
            GroupTag::Agl1Prime(9),
            GroupTag::Psl2(8),
            GroupTag::Sz8,
        ] {
            let g = make_catalog(tag).unwrap();
            let total: usize = g.conjugacy_classes().iter().map(|c| c.size()).sum();
            assert_eq!(total, g.order(), "{tag}");
        }
    }

    #[test]
    fn quotient_surjection_commutes_with_products() {
        // Checked on all pairs for small groups.
        for tag in [GroupTag::Symmetric(4), GroupTag::Q8, GroupTag::Dihedral(6)] {
            let g = make_catalog(tag).unwrap();
            for n in g.normal_subgroups() {
                if n.order() == g.order() {
                    continue;
                }
                let q = g.quotient(&n).unwrap();
                // The projection maps g to the coset-permutation it induces.
                let project = |i: usize| -> usize {
                    let mut images = vec![0u16; q.degree()];
                    let keys = coset_keys(&g, &n);
                    for (pt, &k) in keys.iter().enumerate() {
                        let moved = g.mul(i, k as usize);
                        let target = coset_key_of(&g, &n, moved);
                        images[pt] = keys.binary_search(&target).unwrap() as u16;
                    }
                    q.index_of(&Permutation::from_images(images).unwrap()).unwrap()
                };
                for a in 0..g.order().min(40) {
                    for b in 0..g.order().min(40) {
                        assert_eq!(
                            project(g.mul(a, b)),
                            q.mul(project(a), project(b)),
                            "{tag}"
                        );
                    }
                }
            }
        }
    }

    fn coset_key_of(g: &Group, n: &Subgroup, i: usize) -> u32 {
        n.members()
            .iter()
            .map(|&m| g.mul(i, m as usize) as u32)
            .min()
            .unwrap()
    }

    fn coset_keys(g: &Group, n: &Subgroup) -> Vec<u32> {
        let mut keys: Vec<u32> = (0..g.order())
            .map(|i| coset_key_of(g, n, i))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys
    }

    #[test]
    fn nonabelian_simple_groups_have_nonabelian_proper_subgroups() {
        for tag in [GroupTag::Alternating(5), GroupTag::Psl2(7)] {
            let g = make_catalog(tag).unwrap();
            let subs = g.subgroups_up_to_conjugacy().unwrap();
            assert!(
                subs.iter().any(|s| {
                    s.order() < g.order() && s.order() > 1 && !s.to_group().0.is_abelian()
                }),
                "{tag}"
            );
        }
    }
}
