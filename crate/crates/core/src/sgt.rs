//! Soft generalized topologies: generation, openness, interior and closure
//! operators, regular sets, subspaces and per-parameter projection.
//!
//! Closedness uses the complement RELATIVE to the carrier. The absolute soft
//! complement of an open set can escape the carrier whenever the carrier is
//! not universal, leaving no closed sets at all; the relative complement
//! coincides with the absolute one on universal carriers and reproduces the
//! worked examples exactly.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gt::{GtSpace, MAX_OPENS};
use crate::soft::{Frame, PointSet, SoftSet};

/// A family of prospective generators for a soft generalized topology.
#[derive(Debug, Clone)]
pub struct SoftBasis {
    members: Vec<SoftSet>,
}

impl SoftBasis {
    pub fn new(members: Vec<SoftSet>) -> Self {
        Self { members }
    }

    pub fn members(&self) -> &[SoftSet] {
        &self.members
    }
}

impl From<Vec<SoftSet>> for SoftBasis {
    fn from(members: Vec<SoftSet>) -> Self {
        Self::new(members)
    }
}

/// A soft generalized topological space: a carrier soft set together with a
/// union-closed family of soft subsets containing the empty soft set.
#[derive(Debug, Clone)]
pub struct SoftSpace {
    carrier: SoftSet,
    /// Canonically sorted by cell mask; `opens[0]` is the empty soft set.
    opens: Vec<SoftSet>,
    /// Cell masks aligned with `opens`, for binary-search membership.
    keys: Vec<Vec<u64>>,
    strong: bool,
}

impl SoftSpace {
    /// Smallest soft generalized topology containing the basis: all unions
    /// of subfamilies, including the empty union.
    pub fn generate(carrier: SoftSet, basis: &SoftBasis) -> Result<Self> {
        for (i, b) in basis.members().iter().enumerate() {
            if !b.is_subset_of(&carrier)? {
                return Err(Error::BasisEscapesCarrier { index: i });
            }
        }
        let empty = SoftSet::empty(carrier.frame().clone());
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        seen.insert(empty.cells());
        let mut all = vec![empty.clone()];
        let mut frontier = vec![empty];
        while let Some(u) = frontier.pop() {
            for b in basis.members() {
                let v = u.union(b)?;
                let key = v.cells();
                if !seen.contains(&key) {
                    if all.len() >= MAX_OPENS {
                        return Err(Error::TooLarge { limit: MAX_OPENS });
                    }
                    seen.insert(key);
                    all.push(v.clone());
                    frontier.push(v);
                }
            }
        }
        Ok(Self::from_parts(carrier, all))
    }

    /// Wrap an explicitly given family, verifying every axiom: members stay
    /// inside the carrier, the empty soft set is present (it is added when
    /// missing) and the family is union-closed.
    pub fn from_opens(carrier: SoftSet, opens: Vec<SoftSet>) -> Result<Self> {
        for (i, o) in opens.iter().enumerate() {
            if !o.is_subset_of(&carrier)? {
                return Err(Error::BasisEscapesCarrier { index: i });
            }
        }
        let mut all = opens;
        all.push(SoftSet::empty(carrier.frame().clone()));
        let space = Self::from_parts(carrier, all);
        for i in 0..space.opens.len() {
            for j in i + 1..space.opens.len() {
                let u = space.opens[i].union(&space.opens[j])?;
                if space.keys.binary_search(&u.cells()).is_err() {
                    return Err(Error::NotUnionClosed { left: i, right: j });
                }
            }
        }
        Ok(space)
    }

    /// Sort, deduplicate and index a family already known to be union-closed
    /// and to contain the empty soft set.
    fn from_parts(carrier: SoftSet, mut opens: Vec<SoftSet>) -> Self {
        opens.sort_by_key(|o| o.cells());
        opens.dedup_by(|a, b| a.cells() == b.cells());
        let keys: Vec<Vec<u64>> = opens.iter().map(SoftSet::cells).collect();
        let strong = keys.binary_search(&carrier.cells()).is_ok();
        Self {
            carrier,
            opens,
            keys,
            strong,
        }
    }

    pub fn carrier(&self) -> &SoftSet {
        &self.carrier
    }

    pub fn frame(&self) -> &Arc<Frame> {
        self.carrier.frame()
    }

    pub fn opens(&self) -> &[SoftSet] {
        &self.opens
    }

    pub fn is_strong(&self) -> bool {
        self.strong
    }

    fn check_within(&self, s: &SoftSet) -> Result<()> {
        if s.is_subset_of(&self.carrier)? {
            Ok(())
        } else {
            Err(Error::NotWithinCarrier {
                what: s.to_string(),
            })
        }
    }

    pub fn is_open(&self, s: &SoftSet) -> Result<bool> {
        self.check_within(s)?;
        Ok(self.keys.binary_search(&s.cells()).is_ok())
    }

    /// Closed relative to the carrier: `carrier \ s` is open.
    pub fn is_closed(&self, s: &SoftSet) -> Result<bool> {
        self.check_within(s)?;
        let c = self.carrier.difference(s)?;
        Ok(self.keys.binary_search(&c.cells()).is_ok())
    }

    pub fn is_clopen(&self, s: &SoftSet) -> Result<bool> {
        Ok(self.is_open(s)? && self.is_closed(s)?)
    }

    /// Union of all opens contained in `s`: the largest open inside it.
    pub fn interior(&self, s: &SoftSet) -> Result<SoftSet> {
        self.check_within(s)?;
        Ok(self.interior_unchecked(s))
    }

    fn interior_unchecked(&self, s: &SoftSet) -> SoftSet {
        let mut out = SoftSet::empty(self.frame().clone());
        for o in &self.opens {
            if o.is_subset_of(s).expect("shared frame") {
                out = out.union(o).expect("shared frame");
            }
        }
        out
    }

    /// Intersection of all closed supersets of `s`: the smallest closed set
    /// containing it. The carrier is always closed, so this is never vacuous.
    pub fn closure(&self, s: &SoftSet) -> Result<SoftSet> {
        self.check_within(s)?;
        Ok(self.closure_unchecked(s))
    }

    fn closure_unchecked(&self, s: &SoftSet) -> SoftSet {
        let complement = self.carrier.difference(s).expect("shared frame");
        self.carrier
            .difference(&self.interior_unchecked(&complement))
            .expect("shared frame")
    }

    pub(crate) fn regularization(&self, s: &SoftSet) -> SoftSet {
        self.interior_unchecked(&self.closure_unchecked(s))
    }

    /// `s = (c(s))ᵒ`.
    pub fn is_regular_open(&self, s: &SoftSet) -> Result<bool> {
        self.check_within(s)?;
        Ok(self.regularization(s) == *s)
    }

    /// `s = c(sᵒ)`.
    pub fn is_regular_closed(&self, s: &SoftSet) -> Result<bool> {
        self.check_within(s)?;
        Ok(self.closure_unchecked(&self.interior_unchecked(s)) == *s)
    }

    /// The opens passing `is_regular_open`, in canonical order.
    pub fn regular_opens(&self) -> Vec<SoftSet> {
        self.opens
            .iter()
            .filter(|o| self.regularization(o) == **o)
            .cloned()
            .collect()
    }

    /// Trace space on `b`: opens are `{v n b : v open}`. The trace family is
    /// automatically union-closed, and the strong flag is recomputed.
    pub fn subspace(&self, b: &SoftSet) -> Result<SoftSpace> {
        self.check_within(b)?;
        let traces: Vec<SoftSet> = self
            .opens
            .iter()
            .map(|o| o.intersection(b).expect("shared frame"))
            .collect();
        Ok(Self::from_parts(b.clone(), traces))
    }

    /// Read the given parameter's coordinate of every open: a generalized
    /// topology on the universe. Deduplicates repeats; the empty set comes
    /// from the empty soft set.
    pub fn project(&self, param: &str) -> Result<GtSpace> {
        let r = self.frame().params().param_index(param)?;
        let universe = Arc::new(self.frame().universe().clone());
        let mut slices: Vec<PointSet> =
            self.opens.iter().map(|o| o.row(r).clone()).collect();
        slices.sort();
        slices.dedup();
        Ok(GtSpace::from_sorted(universe, slices))
    }

    /// Axiom re-check for explicitly constructed spaces; used by tests.
    pub fn validate(&self) -> Result<()> {
        for (i, o) in self.opens.iter().enumerate() {
            if !o.is_subset_of(&self.carrier)? {
                return Err(Error::BasisEscapesCarrier { index: i });
            }
        }
        if self.keys.binary_search(&SoftSet::empty(self.frame().clone()).cells()).is_err() {
            return Err(Error::Invalid("empty soft set missing".into()));
        }
        for i in 0..self.opens.len() {
            for j in i + 1..self.opens.len() {
                let u = self.opens[i].union(&self.opens[j])?;
                if self.keys.binary_search(&u.cells()).is_err() {
                    return Err(Error::NotUnionClosed { left: i, right: j });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::soft::{ParamSet, Universe};

    pub(crate) fn example_frame() -> Arc<Frame> {
        Frame::new(
            Universe::new(["a", "b", "c"]).unwrap(),
            ParamSet::new(["r1", "r2", "r3"]).unwrap(),
        )
    }

    fn entry(frame: &Arc<Frame>, entries: &[(&str, &[&str])]) -> SoftSet {
        SoftSet::from_entries(frame.clone(), entries.iter().map(|&(p, xs)| (p, xs))).unwrap()
    }

    /// The worked five-open example space.
    pub(crate) fn example_space() -> SoftSpace {
        let f = example_frame();
        let carrier = entry(&f, &[("r1", &["a", "b", "c"]), ("r2", &["b", "c"])]);
        let opens = vec![
            entry(&f, &[("r1", &["b"]), ("r2", &["b", "c"])]),
            entry(&f, &[("r1", &["a", "c"]), ("r2", &["c"])]),
            entry(&f, &[("r1", &["a", "b"]), ("r2", &["b", "c"])]),
            carrier.clone(),
        ];
        SoftSpace::from_opens(carrier, opens).unwrap()
    }

    fn sa1() -> SoftSet {
        entry(&example_frame(), &[("r1", &["b"]), ("r2", &["b", "c"])])
    }

    fn sa2() -> SoftSet {
        entry(&example_frame(), &[("r1", &["a", "c"]), ("r2", &["c"])])
    }

    fn sa3() -> SoftSet {
        entry(&example_frame(), &[("r1", &["a", "b"]), ("r2", &["b", "c"])])
    }

    /// Truncation of the pair-basis space: X = {1..n}, one basis member per
    /// x >= 2 assigning {1,x} at every parameter.
    pub(crate) fn ones_space(n: u32, params: u32) -> (SoftSpace, Vec<SoftSet>) {
        let f = Frame::numeric(n, params);
        let carrier = SoftSet::universal(f.clone());
        let basis: Vec<SoftSet> = (2..=n)
            .map(|x| {
                let row = PointSet::from_indices(n as usize, [0, (x - 1) as usize]);
                SoftSet::from_rows(f.clone(), vec![row; params as usize])
            })
            .collect();
        let space = SoftSpace::generate(carrier, &SoftBasis::new(basis.clone())).unwrap();
        (space, basis)
    }

    #[test]
    fn generation_keeps_already_closed_family() {
        let g = example_space();
        let regenerated = SoftSpace::generate(
            g.carrier().clone(),
            &SoftBasis::new(g.opens().to_vec()),
        )
        .unwrap();
        assert_eq!(regenerated.opens(), g.opens());
        assert_eq!(g.opens().len(), 5);
        assert!(g.is_strong());
    }

    #[test]
    fn empty_basis_gives_the_indiscrete_family() {
        let f = example_frame();
        let carrier = SoftSet::universal(f.clone());
        let g = SoftSpace::generate(carrier, &SoftBasis::new(vec![])).unwrap();
        assert_eq!(g.opens().len(), 1);
        assert!(g.opens()[0].is_empty());
        assert!(!g.is_strong());
    }

    #[test]
    fn ones_truncation_at_three_points() {
        let (g, basis) = ones_space(3, 2);
        g.validate().unwrap();
        assert_eq!(g.opens().len(), 4); // empty, B2, B3, carrier
        assert!(g.is_strong());
        for b in &basis {
            assert!(g.is_open(b).unwrap());
        }
    }

    #[test]
    fn openness_and_closedness() {
        let g = example_space();
        assert!(g.is_open(&sa1()).unwrap());
        assert!(!g.is_closed(&sa1()).unwrap());
        let empty = SoftSet::empty(example_frame());
        assert!(g.is_clopen(&empty).unwrap());
    }

    #[test]
    fn every_subset_of_a_discrete_space_is_clopen() {
        // Atom basis: one generator per (parameter, point) cell.
        let f = Frame::numeric(2, 2);
        let carrier = SoftSet::universal(f.clone());
        let mut atoms = Vec::new();
        for r in 0..2 {
            for x in 0..2 {
                let mut rows = vec![PointSet::empty(2); 2];
                rows[r] = PointSet::from_indices(2, [x]);
                atoms.push(SoftSet::from_rows(f.clone(), rows));
            }
        }
        let g = SoftSpace::generate(carrier, &SoftBasis::new(atoms)).unwrap();
        assert_eq!(g.opens().len(), 16);
        for o in g.opens() {
            assert!(g.is_clopen(o).unwrap());
            assert!(g.is_regular_open(o).unwrap());
        }
    }

    #[test]
    fn interior_examples() {
        let g = example_space();
        let f = example_frame();
        let s = SoftSet::from_entries(f.clone(), [("r1", ["a", "c"].as_slice())]).unwrap();
        assert!(g.interior(&s).unwrap().is_empty());
        assert_eq!(g.interior(&sa2()).unwrap(), sa2());
        assert_eq!(g.interior(g.carrier()).unwrap(), *g.carrier());
    }

    #[test]
    fn closure_examples() {
        let g = example_space();
        assert_eq!(g.closure(&sa1()).unwrap(), *g.carrier());
        assert_eq!(g.closure(g.carrier()).unwrap(), *g.carrier());
        let empty = SoftSet::empty(example_frame());
        assert_eq!(g.closure(&empty).unwrap(), empty);
    }

    #[test]
    fn regular_open_examples() {
        let g = example_space();
        for s in [sa1(), sa2(), sa3()] {
            assert!(g.is_open(&s).unwrap());
            assert!(!g.is_regular_open(&s).unwrap());
        }
        assert!(g.is_regular_open(&SoftSet::empty(example_frame())).unwrap());
        assert!(g.is_regular_open(g.carrier()).unwrap());

        let (ones, basis) = ones_space(3, 2);
        assert!(!ones.is_regular_open(&basis[0]).unwrap());
    }

    #[test]
    fn regular_open_enumeration() {
        let g = example_space();
        let reg = g.regular_opens();
        assert_eq!(reg.len(), 2);
        assert!(reg[0].is_empty());
        assert_eq!(reg[1], *g.carrier());

        for n in 2..=5 {
            let (ones, _) = ones_space(n, 2);
            let reg = ones.regular_opens();
            assert_eq!(reg.len(), 2, "n = {n}");
            assert!(reg[0].is_empty());
            assert_eq!(reg[1], *ones.carrier());
        }
    }

    #[test]
    fn subspace_examples() {
        let g = example_space();
        let sub = g.subspace(&sa1()).unwrap();
        sub.validate().unwrap();
        let f = example_frame();
        let tiny = SoftSet::from_entries(f.clone(), [("r2", ["c"].as_slice())]).unwrap();
        assert_eq!(sub.opens().len(), 3);
        assert!(sub.is_open(&tiny).unwrap());
        assert!(sub.is_open(&sa1()).unwrap());
        assert!(sub.is_strong());

        let empty = SoftSet::empty(f.clone());
        let esub = g.subspace(&empty).unwrap();
        assert_eq!(esub.opens().len(), 1);
        assert!(esub.is_strong());

        let full = g.subspace(g.carrier()).unwrap();
        assert_eq!(full.opens(), g.opens());
    }

    #[test]
    fn projection_examples() {
        let g = example_space();
        let p1 = g.project("r1").unwrap();
        assert_eq!(p1.opens().len(), 5);
        assert!(p1.is_mu_space());

        let p2 = g.project("r2").unwrap();
        assert_eq!(p2.opens().len(), 3);
        assert!(!p2.is_mu_space());

        let f = example_frame();
        let trivial =
            SoftSpace::generate(SoftSet::universal(f.clone()), &SoftBasis::new(vec![]))
                .unwrap();
        let p = trivial.project("r1").unwrap();
        assert_eq!(p.opens().len(), 1);

        assert!(matches!(
            g.project("r9"),
            Err(Error::UnknownParameter(_))
        ));
    }

    #[test]
    fn escaping_sets_are_rejected() {
        let g = example_space();
        let f = example_frame();
        let escaping =
            SoftSet::from_entries(f.clone(), [("r3", ["a"].as_slice())]).unwrap();
        assert!(matches!(
            g.interior(&escaping),
            Err(Error::NotWithinCarrier { .. })
        ));
        assert!(matches!(
            SoftSpace::generate(g.carrier().clone(), &SoftBasis::new(vec![escaping])),
            Err(Error::BasisEscapesCarrier { index: 0 })
        ));
    }

    #[test]
    fn explicit_opens_must_be_union_closed() {
        let f = example_frame();
        let carrier = SoftSet::universal(f.clone());
        let a = SoftSet::from_entries(f.clone(), [("r1", ["a"].as_slice())]).unwrap();
        let b = SoftSet::from_entries(f.clone(), [("r2", ["b"].as_slice())]).unwrap();
        assert!(matches!(
            SoftSpace::from_opens(carrier, vec![a, b]),
            Err(Error::NotUnionClosed { .. })
        ));
    }
}
