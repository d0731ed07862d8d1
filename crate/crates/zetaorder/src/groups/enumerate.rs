//! Exhaustive subgroup enumeration, bounded isomorphism testing, and
//! presentation-guided embedding search.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Group, GroupError, Subgroup, DEFAULT_SUBGROUP_BOUND, ISO_BOUND};

/// Attempt budget for the embedding search (closure computations).
const EMBED_SEARCH_BUDGET: usize = 2_000_000;

impl super::FiniteGroup {
    /// One representative per conjugacy class of subgroups, including the
    /// trivial and full subgroup. Exhaustive; bounded by
    /// [`DEFAULT_SUBGROUP_BOUND`].
    pub fn subgroups_up_to_conjugacy(self: &Group) -> Result<Vec<Subgroup>, GroupError> {
        self.subgroups_up_to_conjugacy_bounded(DEFAULT_SUBGROUP_BOUND)
    }

    pub fn subgroups_up_to_conjugacy_bounded(
        self: &Group,
        bound: usize,
    ) -> Result<Vec<Subgroup>, GroupError> {
        if self.order() > bound {
            return Err(GroupError::BoundExceeded {
                bound,
                context: "exhaustive subgroup enumeration",
            });
        }
        let n = self.order();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        // Queue of (members, small generating set).
        let mut queue: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();

        seen.insert(vec![0]);
        queue.push((vec![0], Vec::new()));
        // Layer 0: cyclic subgroups.
        for i in 1..n as u32 {
            let cyc = self.closure_of(&[i]);
            if seen.insert(cyc.clone()) {
                queue.push((cyc, vec![i]));
            }
        }
        // Extend each known subgroup by one element; every subgroup arises
        // along some chain of such one-element extensions.
        let mut head = 0;
        while head < queue.len() {
            let (h, h_gens) = queue[head].clone();
            head += 1;
            if h.len() == n {
                continue;
            }
            let mut coset_seen: Vec<bool> = vec![false; n];
            for &m in &h {
                coset_seen[m as usize] = true;
            }
            for g in 1..n as u32 {
                if coset_seen[g as usize] {
                    continue;
                }
                // Mark the whole coset Hg; any member extends H identically.
                for &m in &h {
                    coset_seen[self.mul(m as usize, g as usize)] = true;
                }
                let mut k_gens = h_gens.clone();
                k_gens.push(g);
                let k = self.closure_of(&k_gens);
                if seen.insert(k.clone()) {
                    queue.push((k, k_gens));
                }
            }
        }

        // Collapse to conjugacy classes, keeping the lexicographically least
        // member set as the representative.
        let mut reps: Vec<Vec<u32>> = Vec::new();
        let mut claimed: HashSet<Vec<u32>> = HashSet::new();
        let mut queue: Vec<Vec<u32>> = queue.into_iter().map(|(m, _)| m).collect();
        queue.sort_unstable_by_key(|s| (s.len(), s.clone()));
        for s in queue {
            if claimed.contains(&s) {
                continue;
            }
            let sub = Subgroup {
                parent: self.clone(),
                members: s,
            };
            let conjugates = sub.conjugates();
            let rep = conjugates[0].members.clone();
            for c in conjugates {
                claimed.insert(c.members);
            }
            reps.push(rep);
        }
        reps.sort_unstable_by_key(|s| (s.len(), s.clone()));
        Ok(reps
            .into_iter()
            .map(|members| Subgroup {
                parent: self.clone(),
                members,
            })
            .collect())
    }

    /// Bounded brute-force isomorphism test (both orders ≤ [`ISO_BOUND`]).
    /// Backtracks over generator images, propagating the multiplication
    /// table.
    pub fn is_isomorphic(self: &Group, other: &Group) -> bool {
        if self.order() != other.order() {
            return false;
        }
        assert!(
            self.order() <= ISO_BOUND,
            "brute-force isomorphism testing is bounded at order {ISO_BOUND}"
        );
        if self.order() == 1 {
            return true;
        }
        // Cheap invariants first.
        let fingerprint = |g: &Group| {
            let mut orders: Vec<u64> = (0..g.order()).map(|i| g.element_order(i)).collect();
            orders.sort_unstable();
            let mut class_sizes: Vec<usize> =
                g.conjugacy_classes().iter().map(|c| c.size()).collect();
            class_sizes.sort_unstable();
            (orders, class_sizes)
        };
        if fingerprint(self) != fingerprint(other) {
            return false;
        }

        // Small generating sequence for self.
        let mut gens: Vec<u32> = Vec::new();
        let mut closed: Vec<u32> = vec![0];
        for i in 1..self.order() as u32 {
            if closed.binary_search(&i).is_err() {
                gens.push(i);
                closed = self.closure_of(&gens);
                if closed.len() == self.order() {
                    break;
                }
            }
        }

        let mut images: Vec<u32> = Vec::new();
        self.extend_isomorphism(other, &gens, &mut images)
    }

    fn extend_isomorphism(
        self: &Group,
        other: &Group,
        gens: &[u32],
        images: &mut Vec<u32>,
    ) -> bool {
        if images.len() == gens.len() {
            return self.check_generator_map(other, gens, images);
        }
        let g = gens[images.len()] as usize;
        let want_order = self.element_order(g);
        let want_class_size = self.conjugacy_classes()[self.class_of(g)].size();
        for cand in 0..other.order() {
            if other.element_order(cand) != want_order {
                continue;
            }
            if other.conjugacy_classes()[other.class_of(cand)].size() != want_class_size {
                continue;
            }
            images.push(cand as u32);
            if self.extend_isomorphism(other, gens, images) {
                return true;
            }
            images.pop();
        }
        false
    }

    /// Checks whether gens → images extends to an isomorphism, by building
    /// the image of every element as a word in the generators.
    fn check_generator_map(self: &Group, other: &Group, gens: &[u32], images: &[u32]) -> bool {
        let n = self.order();
        let mut map: Vec<u32> = vec![u32::MAX; n];
        map[0] = 0;
        let mut frontier: Vec<u32> = vec![0];
        let mut reached = 1usize;
        while let Some(x) = frontier.pop() {
            for (k, &g) in gens.iter().enumerate() {
                let y = self.mul(x as usize, g as usize);
                let img = other.mul(map[x as usize] as usize, images[k] as usize) as u32;
                if map[y] == u32::MAX {
                    map[y] = img;
                    reached += 1;
                    frontier.push(y as u32);
                } else if map[y] != img {
                    return false;
                }
            }
        }
        if reached != n {
            return false;
        }
        // Injectivity, then full homomorphism check against the generators.
        let mut hit = vec![false; n];
        for &m in &map {
            if hit[m as usize] {
                return false;
            }
            hit[m as usize] = true;
        }
        for x in 0..n {
            for (k, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g as usize);
                if other.mul(map[x] as usize, images[k] as usize) != map[y] as usize {
                    return false;
                }
            }
        }
        true
    }

    /// Searches for a subgroup isomorphic to `target`, mapping target
    /// generators onto elements of matching invariants. The first generator
    /// ranges over class representatives only (conjugating the image is
    /// free), the rest over whole order-matched candidate lists, sampled
    /// with the given seed when the budget is tight. `None` is advisory, not
    /// a proof of absence.
    pub fn find_subgroup_isomorphic(
        self: &Group,
        target: &Group,
        seed: u64,
    ) -> Option<Subgroup> {
        let t_order = target.order();
        if t_order > self.order() || self.order() % t_order != 0 {
            return None;
        }
        if t_order == 1 {
            return Some(Subgroup::trivial(self));
        }
        if t_order == self.order() {
            return if self.is_isomorphic(target) {
                Some(Subgroup::full(self))
            } else {
                None
            };
        }

        // Generating pair (or single generator) of the target.
        let mut tgens: Vec<u32> = Vec::new();
        let mut closed: Vec<u32> = vec![0];
        for i in 1..t_order as u32 {
            if closed.binary_search(&i).is_err() {
                tgens.push(i);
                closed = target.closure_of(&tgens);
                if closed.len() == t_order {
                    break;
                }
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut budget = EMBED_SEARCH_BUDGET;
        let found = self.embed_search(target, &tgens, &mut Vec::new(), &mut budget, &mut rng);
        found.map(|gens| self.subgroup_from_indices(&gens))
    }

    fn embed_search(
        self: &Group,
        target: &Group,
        tgens: &[u32],
        chosen: &mut Vec<u32>,
        budget: &mut usize,
        rng: &mut ChaCha8Rng,
    ) -> Option<Vec<u32>> {
        let depth = chosen.len();
        if depth == tgens.len() {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let closure = self.closure_capped(chosen, target.order() + 1)?;
            if closure.len() != target.order() {
                return None;
            }
            let sub = Subgroup {
                parent: self.clone(),
                members: closure,
            };
            let (as_group, _) = sub.to_group();
            if as_group.is_isomorphic(target) {
                return Some(chosen.clone());
            }
            return None;
        }

        let want_order = target.element_order(tgens[depth] as usize);
        let mut candidates: Vec<u32> = if depth == 0 {
            self.conjugacy_classes()
                .iter()
                .filter(|c| self.element_order(c.rep as usize) == want_order)
                .map(|c| c.rep)
                .collect()
        } else {
            (0..self.order() as u32)
                .filter(|&i| self.element_order(i as usize) == want_order)
                .collect()
        };
        // Keep the scan deterministic; shuffle only when it cannot finish
        // within budget anyway.
        if candidates.len() > *budget {
            candidates.shuffle(rng);
        }
        for cand in candidates {
            if *budget == 0 {
                return None;
            }
            if depth + 1 == tgens.len() && tgens.len() == 2 {
                // ord(ab) must match before paying for a closure.
                let prod_order = self
                    .element(self.mul(chosen[0] as usize, cand as usize))
                    .order();
                let target_prod = target
                    .element(target.mul(tgens[0] as usize, tgens[1] as usize) as usize)
                    .order();
                if prod_order != target_prod {
                    continue;
                }
            }
            chosen.push(cand);
            if let Some(found) = self.embed_search(target, tgens, chosen, budget, rng) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
}
