//! Permutation groups stored as the full set of their elements.
//!
//! Every element is kept, so only groups of modest order are practical; a
//! configurable limit ([`DEFAULT_MAX_ORDER`] by default) makes closure fail
//! with [`Error::GroupTooLarge`] instead of exhausting memory.
//!
//! Elements are kept in canonical key order, so iteration is deterministic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::{Perm, Point};

pub const DEFAULT_MAX_ORDER: usize = 100_000;

#[derive(Clone, Debug)]
pub struct Group {
    elements: BTreeSet<Perm>,
    max_order: usize,
}

/// Points reachable from a seed point under a group action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    points: BTreeSet<Point>,
}

impl Orbit {
    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: Point) -> bool {
        self.points.contains(&x)
    }

    /// Smallest point of the orbit.
    pub fn min(&self) -> Point {
        *self.points.first().expect("orbits are nonempty")
    }

    pub fn to_vec(&self) -> Vec<Point> {
        self.points.iter().copied().collect()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Group {}

impl Default for Group {
    fn default() -> Self {
        Self::trivial()
    }
}

impl Group {
    /// The group containing only the identity.
    pub fn trivial() -> Self {
        Self::with_max_order(DEFAULT_MAX_ORDER)
    }

    /// The trivial group with a custom element limit for later closures.
    pub fn with_max_order(max_order: usize) -> Self {
        Group {
            elements: BTreeSet::from([Perm::identity()]),
            max_order: max_order.max(1),
        }
    }

    /// Closure of `generators` with the default limit.
    pub fn generated_by<'a, I>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Perm>,
    {
        let mut g = Group::trivial();
        g.extend(generators)?;
        Ok(g)
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Inserts each perm in turn.
    pub fn extend<'a, I>(&mut self, perms: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a Perm>,
    {
        for p in perms {
            self.insert(p)?;
        }
        Ok(())
    }

    /// Replaces the group by the closure of its elements together with `p`.
    ///
    /// Returns whether the group grew. On error the group is left unchanged.
    pub fn insert(&mut self, p: &Perm) -> Result<bool> {
        if self.contains(p) {
            return Ok(false);
        }
        // The old group G is closed, so the new group H is a union of right
        // cosets G*r. Coset representatives are found by multiplying known
        // representatives by the generators G + {p} on the right.
        let old: Vec<Perm> = self.elements.iter().cloned().collect();
        let mut all = self.elements.clone();
        let mut reps = vec![Perm::identity()];
        let mut next = 0;
        while next < reps.len() {
            let r = reps[next].clone();
            next += 1;
            for s in old.iter().chain(std::iter::once(p)) {
                let t = r.compose(s);
                if all.contains(&t) {
                    continue;
                }
                if all.len() + old.len() > self.max_order {
                    return Err(Error::GroupTooLarge {
                        limit: self.max_order,
                        reached: all.len(),
                    });
                }
                all.extend(old.iter().map(|g| g.compose(&t)));
                reps.push(t);
            }
        }
        self.elements = all;
        Ok(true)
    }

    /// A subgroup of `self` given by a set already known to be closed.
    fn closed_subset<F>(&self, mut keep: F) -> Group
    where
        F: FnMut(&Perm) -> bool,
    {
        Group {
            elements: self.elements.iter().filter(|g| keep(g)).cloned().collect(),
            max_order: self.max_order,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    /// Elements in canonical key order; the identity comes first.
    pub fn iter(&self) -> impl Iterator<Item = &Perm> + '_ {
        self.elements.iter()
    }

    pub fn is_abelian(&self) -> bool {
        let elems: Vec<&Perm> = self.iter().collect();
        elems
            .iter()
            .enumerate()
            .all(|(i, a)| elems[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// True if every element of `self` lies in `other`.
    pub fn is_subgroup(&self, other: &Group) -> bool {
        if other.order() % self.order() != 0 {
            return false;
        }
        self.iter().all(|p| other.contains(p))
    }

    /// True if `g * h * g^-1` lies in `self` for every `h` in `self` and `g`
    /// in `other`.
    pub fn is_normal(&self, other: &Group) -> bool {
        self.iter()
            .all(|h| other.iter().all(|g| self.contains(&g.conjugate(h))))
    }

    /// The subgroup generated by the elements satisfying `prop`.
    ///
    /// When `prop` does not select a subgroup the result is the closure of
    /// the selected elements, which may contain elements failing `prop`.
    pub fn subgroup_search<F>(&self, prop: F) -> Group
    where
        F: Fn(&Perm) -> bool,
    {
        let mut sub = Group::with_max_order(self.max_order);
        for p in self.iter().filter(|p| prop(p)) {
            sub.insert(p)
                .expect("a subgroup of a group within the limit is within the limit");
        }
        sub
    }

    /// Elements `g` of `self` with `g * h * g^-1` in `h_group` for all of its
    /// elements.
    pub fn normalizer(&self, h_group: &Group) -> Group {
        self.closed_subset(|g| h_group.iter().all(|h| h_group.contains(&g.conjugate(h))))
    }

    /// Elements of `self` commuting with every element of `h_group`.
    pub fn centralizer(&self, h_group: &Group) -> Group {
        if h_group.is_trivial() || self.is_trivial() {
            return self.clone();
        }
        self.closed_subset(|g| h_group.iter().all(|h| g.commutes_with(h)))
    }

    pub fn center(&self) -> Group {
        self.centralizer(self)
    }

    /// The group generated by all commutators `[h, k]` with `h` in `self`
    /// and `k` in `other`.
    pub fn commutator_subgroup(&self, other: &Group) -> Result<Group> {
        let commutators: BTreeSet<Perm> = self
            .iter()
            .flat_map(|h| other.iter().map(move |k| h.commutator(k)))
            .collect();
        let mut out = Group::with_max_order(self.max_order);
        out.extend(&commutators)?;
        Ok(out)
    }

    /// `G, [G,G], [[G,G],[G,G]], ...`, ending at the first term equal to its
    /// predecessor (which is not repeated).
    pub fn derived_series(&self) -> Result<Vec<Group>> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = last.commutator_subgroup(last)?;
            if next.order() == last.order() {
                return Ok(series);
            }
            series.push(next);
        }
    }

    /// True if `[G,G] = G`.
    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.commutator_subgroup(self)?.order() == self.order())
    }

    /// `{g[x] : g in G}`.
    pub fn orbit(&self, x: Point) -> Orbit {
        Orbit { points: self.iter().map(|g| g.apply(x)).collect() }
    }

    /// Orbits of the given points, in order of each orbit's first point in
    /// `points`. Each orbit is complete, so it may include points not listed
    /// in `points`; when `points` is closed under the group the orbits
    /// partition it.
    pub fn orbits(&self, points: &[Point]) -> Vec<Orbit> {
        let mut used = BTreeSet::new();
        let mut out = Vec::new();
        for &x in points {
            if used.contains(&x) {
                continue;
            }
            let orbit = self.orbit(x);
            used.extend(orbit.points.iter().copied());
            out.push(orbit);
        }
        out
    }

    /// Strict: the points form a single orbit. Lax: exactly one orbit has
    /// more than one point, fixed points being ignored.
    pub fn is_transitive(&self, points: &[Point], strict: bool) -> bool {
        let orbits = self.orbits(points);
        if strict {
            orbits.len() == 1
        } else {
            orbits.iter().filter(|o| o.len() > 1).count() == 1
        }
    }

    /// Elements fixing `point`.
    pub fn stabilizer(&self, point: Point) -> Group {
        self.closed_subset(|g| g.apply(point) == point)
    }
}

impl<'a> IntoIterator for &'a Group {
    type Item = &'a Perm;
    type IntoIter = std::collections::btree_set::Iter<'a, Perm>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
