//! Classical generalized topologies on a finite universe.
//!
//! A generalized topology is a family of subsets containing the empty set
//! and closed under arbitrary unions; no intersection axiom. Closedness uses
//! the complement in the universe. Compactness-style questions degenerate at
//! finite scale, so the informative outputs are exact minimal subcover sizes.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::search;
use crate::soft::{PointSet, Universe};

/// Limit on generated open families; beyond it generation aborts with an
/// explicit error rather than thrashing.
pub const MAX_OPENS: usize = 1 << 20;

/// Indexed finite family of subsets of the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    members: Vec<PointSet>,
}

impl SetFamily {
    pub fn new(members: Vec<PointSet>) -> Self {
        Self { members }
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl From<Vec<PointSet>> for SetFamily {
    fn from(members: Vec<PointSet>) -> Self {
        Self::new(members)
    }
}

/// A generalized topological space on a finite universe.
#[derive(Debug, Clone)]
pub struct GtSpace {
    universe: Arc<Universe>,
    /// Canonically sorted, deduplicated; `opens[0]` is the empty set.
    opens: Vec<PointSet>,
    mu_space: bool,
}

impl GtSpace {
    /// Smallest generalized topology containing `base`: all unions of
    /// subfamilies, including the empty union.
    pub fn generate(universe: Arc<Universe>, base: &SetFamily) -> Result<Self> {
        let n = universe.len();
        let empty = PointSet::empty(n);
        let mut seen: HashSet<PointSet> = HashSet::new();
        seen.insert(empty.clone());
        let mut frontier = vec![empty];
        while let Some(u) = frontier.pop() {
            for b in base.members() {
                let v = u.union(b);
                if !seen.contains(&v) {
                    if seen.len() >= MAX_OPENS {
                        return Err(Error::TooLarge { limit: MAX_OPENS });
                    }
                    seen.insert(v.clone());
                    frontier.push(v);
                }
            }
        }
        let mut opens: Vec<PointSet> = seen.into_iter().collect();
        opens.sort();
        Ok(Self::from_sorted(universe, opens))
    }

    /// Wrap an explicit family, verifying the generalized-topology axioms.
    pub fn from_opens(universe: Arc<Universe>, opens: Vec<PointSet>) -> Result<Self> {
        let n = universe.len();
        let mut all = opens;
        all.push(PointSet::empty(n));
        all.sort();
        all.dedup();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let u = all[i].union(&all[j]);
                if all.binary_search(&u).is_err() {
                    return Err(Error::NotUnionClosed { left: i, right: j });
                }
            }
        }
        Ok(Self::from_sorted(universe, all))
    }

    /// Internal constructor for families known to be union-closed
    /// (projections, traces). `opens` must be sorted and deduplicated.
    pub(crate) fn from_sorted(universe: Arc<Universe>, opens: Vec<PointSet>) -> Self {
        let full = PointSet::full(universe.len());
        let mu_space = opens.binary_search(&full).is_ok();
        Self {
            universe,
            opens,
            mu_space,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_mu_space(&self) -> bool {
        self.mu_space
    }

    fn check_within(&self, a: &PointSet) -> Result<()> {
        if a.words().len() == PointSet::words_for(self.universe.len())
            && a.is_subset(&PointSet::full(self.universe.len()))
        {
            Ok(())
        } else {
            Err(Error::NotWithinCarrier {
                what: a.display(&self.universe),
            })
        }
    }

    pub fn is_open(&self, a: &PointSet) -> Result<bool> {
        self.check_within(a)?;
        Ok(self.opens.binary_search(a).is_ok())
    }

    pub fn is_closed(&self, a: &PointSet) -> Result<bool> {
        self.check_within(a)?;
        let c = a.complement(self.universe.len());
        Ok(self.opens.binary_search(&c).is_ok())
    }

    /// Union of all opens contained in `a`.
    pub fn interior(&self, a: &PointSet) -> Result<PointSet> {
        self.check_within(a)?;
        Ok(self.interior_unchecked(a))
    }

    fn interior_unchecked(&self, a: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.universe.len());
        for o in &self.opens {
            if o.is_subset(a) {
                out = out.union(o);
            }
        }
        out
    }

    /// Intersection of all closed supersets of `a`; the universe itself is
    /// always closed, so the intersection is never vacuous.
    pub fn closure(&self, a: &PointSet) -> Result<PointSet> {
        self.check_within(a)?;
        Ok(self.closure_unchecked(a))
    }

    fn closure_unchecked(&self, a: &PointSet) -> PointSet {
        let n = self.universe.len();
        self.interior_unchecked(&a.complement(n)).complement(n)
    }

    fn regularization(&self, a: &PointSet) -> PointSet {
        self.interior_unchecked(&self.closure_unchecked(a))
    }

    /// `a = i(c(a))`.
    pub fn is_regular_open(&self, a: &PointSet) -> Result<bool> {
        self.check_within(a)?;
        Ok(self.regularization(a) == *a)
    }

    /// `a = c(i(a))`.
    pub fn is_regular_closed(&self, a: &PointSet) -> Result<bool> {
        self.check_within(a)?;
        Ok(self.closure_unchecked(&self.interior_unchecked(a)) == *a)
    }

    /// The opens passing `is_regular_open`, in canonical order.
    pub fn regular_opens(&self) -> Vec<PointSet> {
        self.opens
            .iter()
            .filter(|o| self.regularization(o) == **o)
            .cloned()
            .collect()
    }

    /// Diagnostic for the quasi-topology axiom: pairwise intersections of
    /// opens stay open.
    pub fn is_quasi_topology(&self) -> bool {
        for i in 0..self.opens.len() {
            for j in i + 1..self.opens.len() {
                let v = self.opens[i].intersection(&self.opens[j]);
                if self.opens.binary_search(&v).is_err() {
                    return false;
                }
            }
        }
        true
    }

    /// Local finiteness. At finite scale the "finitely many members"
    /// clause is vacuous, so this reduces to every point having an open
    /// neighborhood; a point no open contains fails the witness quantifier.
    pub fn is_mu_locally_finite(&self, _family: &SetFamily) -> bool {
        let mut covered = PointSet::empty(self.universe.len());
        for o in &self.opens {
            covered = covered.union(o);
        }
        covered == PointSet::full(self.universe.len())
    }

    /// `refinement` is an open cover of the universe and each of its
    /// members fits inside some member of `cover`.
    pub fn is_mu_open_refinement(&self, refinement: &SetFamily, cover: &SetFamily) -> bool {
        let full = PointSet::full(self.universe.len());
        let mut union = PointSet::empty(self.universe.len());
        for m in refinement.members() {
            if self.opens.binary_search(m).is_err() {
                return false;
            }
            union = union.union(m);
        }
        if union != full {
            return false;
        }
        refinement
            .members()
            .iter()
            .all(|u| cover.members().iter().any(|v| u.is_subset(v)))
    }

    fn check_cover(&self, cover: &SetFamily) -> Result<()> {
        if !self.mu_space {
            return Err(Error::NotMuSpace);
        }
        for (i, m) in cover.members().iter().enumerate() {
            if self.opens.binary_search(m).is_err() {
                return Err(Error::NonOpenMember { index: i });
            }
        }
        let mut union = PointSet::empty(self.universe.len());
        for m in cover.members() {
            union = union.union(m);
        }
        let full = PointSet::full(self.universe.len());
        if union != full {
            let missing = full.difference(&union);
            let point = missing.iter_indices().next().expect("nonempty difference");
            return Err(Error::GroundUncovered(
                self.universe.point_name(point).to_string(),
            ));
        }
        Ok(())
    }

    /// Exact smallest subfamily of `cover` that still covers the universe.
    pub fn minimal_subcover(&self, cover: &SetFamily) -> Result<(usize, Vec<usize>)> {
        self.check_cover(cover)?;
        let target = PointSet::full(self.universe.len());
        let sets: Vec<Vec<u64>> = cover.members().iter().map(|m| m.words().to_vec()).collect();
        let found = search::minimal_cover(target.words(), &sets)?;
        Ok(found.expect("validated cover"))
    }

    /// Exact smallest subfamily whose regularizations `i(c(V))` cover the
    /// universe. Never larger than the plain minimal subcover.
    pub fn minimal_near_subcover(&self, cover: &SetFamily) -> Result<(usize, Vec<usize>)> {
        self.check_cover(cover)?;
        let target = PointSet::full(self.universe.len());
        let sets: Vec<Vec<u64>> = cover
            .members()
            .iter()
            .map(|m| self.regularization(m).words().to_vec())
            .collect();
        let found = search::minimal_cover(target.words(), &sets)?;
        Ok(found.expect("regularization inflates opens, so the cover still covers"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(n: u32) -> Arc<Universe> {
        Arc::new(Universe::numeric(n))
    }

    fn ps(u: &Universe, pts: &[u32]) -> PointSet {
        PointSet::from_indices(u.len(), pts.iter().map(|&p| (p - 1) as usize))
    }

    /// X = {1,2,3,4} with base {{1,2},{2,3},{3,4}}.
    fn pair_space() -> (Arc<Universe>, GtSpace) {
        let u = uni(4);
        let base = SetFamily::new(vec![
            ps(&u, &[1, 2]),
            ps(&u, &[2, 3]),
            ps(&u, &[3, 4]),
        ]);
        let g = GtSpace::generate(u.clone(), &base).unwrap();
        (u, g)
    }

    #[test]
    fn generation_examples() {
        let (u, g) = pair_space();
        let expected: Vec<PointSet> = {
            let mut v = vec![
                ps(&u, &[]),
                ps(&u, &[1, 2]),
                ps(&u, &[2, 3]),
                ps(&u, &[3, 4]),
                ps(&u, &[1, 2, 3]),
                ps(&u, &[2, 3, 4]),
                ps(&u, &[1, 2, 3, 4]),
            ];
            v.sort();
            v
        };
        assert_eq!(g.opens(), expected.as_slice());
        assert!(g.is_mu_space());

        let empty = GtSpace::generate(u.clone(), &SetFamily::new(vec![])).unwrap();
        assert_eq!(empty.opens(), &[ps(&u, &[])]);
        assert!(!empty.is_mu_space());

        let u3 = uni(3);
        let singletons =
            SetFamily::new(vec![ps(&u3, &[1]), ps(&u3, &[2]), ps(&u3, &[3])]);
        let discrete = GtSpace::generate(u3.clone(), &singletons).unwrap();
        assert_eq!(discrete.opens().len(), 8);
    }

    #[test]
    fn interior_closure_examples() {
        let (u, g) = pair_space();
        assert_eq!(g.closure(&ps(&u, &[1, 2])).unwrap(), ps(&u, &[1, 2]));
        assert_eq!(g.closure(&ps(&u, &[2, 3])).unwrap(), ps(&u, &[1, 2, 3, 4]));
        assert_eq!(g.interior(&ps(&u, &[])).unwrap(), ps(&u, &[]));
    }

    #[test]
    fn regular_open_examples() {
        let (u, g) = pair_space();
        assert!(g.is_regular_open(&ps(&u, &[1, 2])).unwrap());
        assert!(!g.is_regular_open(&ps(&u, &[2, 3])).unwrap());
        assert!(g.is_regular_open(&ps(&u, &[])).unwrap());
    }

    #[test]
    fn local_finiteness_examples() {
        let (u, g) = pair_space();
        let odd = SetFamily::new(vec![ps(&u, &[1, 2]), ps(&u, &[3, 4])]);
        assert!(g.is_mu_locally_finite(&odd));
        assert!(g.is_mu_locally_finite(&SetFamily::new(vec![])));

        // Point 2 lies in no open: the witness quantifier fails.
        let u2 = uni(2);
        let sparse =
            GtSpace::generate(u2.clone(), &SetFamily::new(vec![ps(&u2, &[1])])).unwrap();
        assert!(!sparse.is_mu_locally_finite(&SetFamily::new(vec![])));
    }

    #[test]
    fn refinement_examples() {
        let (u, g) = pair_space();
        let base = SetFamily::new(vec![ps(&u, &[1, 2]), ps(&u, &[2, 3]), ps(&u, &[3, 4])]);
        let odd = SetFamily::new(vec![ps(&u, &[1, 2]), ps(&u, &[3, 4])]);
        let coarse = SetFamily::new(vec![ps(&u, &[1, 2, 3]), ps(&u, &[3, 4])]);
        assert!(g.is_mu_open_refinement(&base, &base));
        assert!(!g.is_mu_open_refinement(&base, &odd));
        assert!(g.is_mu_open_refinement(&odd, &coarse));
    }

    #[test]
    fn minimal_subcover_examples() {
        let (u, g) = pair_space();
        let odd = SetFamily::new(vec![ps(&u, &[1, 2]), ps(&u, &[3, 4])]);
        assert_eq!(g.minimal_subcover(&odd).unwrap().0, 2);
        assert_eq!(g.minimal_near_subcover(&odd).unwrap().0, 2);

        let with_x = SetFamily::new(vec![ps(&u, &[2, 3]), ps(&u, &[1, 2, 3, 4])]);
        assert_eq!(g.minimal_subcover(&with_x).unwrap(), (1, vec![1]));

        let u6 = uni(6);
        let base = SetFamily::new(
            (1..=5).map(|k| ps(&u6, &[k, k + 1])).collect::<Vec<_>>(),
        );
        let g6 = GtSpace::generate(u6.clone(), &base).unwrap();
        let full_base = SetFamily::new(
            (1..=5).map(|k| ps(&u6, &[k, k + 1])).collect::<Vec<_>>(),
        );
        let (size, witness) = g6.minimal_subcover(&full_base).unwrap();
        assert_eq!(size, 3);
        assert_eq!(witness, vec![0, 2, 4]); // {1,2},{3,4},{5,6}
    }

    #[test]
    fn cover_preconditions() {
        let (u, g) = pair_space();
        let not_cover = SetFamily::new(vec![ps(&u, &[1, 2])]);
        assert!(matches!(
            g.minimal_subcover(&not_cover),
            Err(Error::GroundUncovered(p)) if p == "3"
        ));
        let not_open = SetFamily::new(vec![ps(&u, &[1]), ps(&u, &[1, 2, 3, 4])]);
        assert!(matches!(
            g.minimal_subcover(&not_open),
            Err(Error::NonOpenMember { index: 0 })
        ));

        let u2 = uni(2);
        let non_mu =
            GtSpace::generate(u2.clone(), &SetFamily::new(vec![ps(&u2, &[1])])).unwrap();
        assert!(matches!(
            non_mu.minimal_subcover(&SetFamily::new(vec![ps(&u2, &[1])])),
            Err(Error::NotMuSpace)
        ));
    }

    #[test]
    fn quasi_topology_flag() {
        let (_, g) = pair_space();
        assert!(!g.is_quasi_topology()); // {1,2} n {2,3} = {2} is not open

        let u3 = uni(3);
        let singletons =
            SetFamily::new(vec![ps(&u3, &[1]), ps(&u3, &[2]), ps(&u3, &[3])]);
        let discrete = GtSpace::generate(u3, &singletons).unwrap();
        assert!(discrete.is_quasi_topology());
    }

    #[test]
    fn explicit_opens_are_validated() {
        let u = uni(3);
        let res = GtSpace::from_opens(u.clone(), vec![ps(&u, &[1]), ps(&u, &[2])]);
        assert!(matches!(res, Err(Error::NotUnionClosed { .. })));
        let ok = GtSpace::from_opens(
            u.clone(),
            vec![ps(&u, &[1]), ps(&u, &[2]), ps(&u, &[1, 2])],
        )
        .unwrap();
        assert_eq!(ok.opens().len(), 4);
    }
}
