//! Exact finite soft-set algebra.
//!
//! A soft set assigns to every parameter of a fixed parameter list a subset
//! of a fixed finite universe. Assignments are total: parameters outside the
//! support simply carry the empty subset. Subsets are stored as fixed-width
//! bit vectors indexed by the universe ordering, so equality is bitwise and
//! all operations are exact.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered finite collection of distinct point identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    points: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<S: Into<String>>(points: impl IntoIterator<Item = S>) -> Result<Self> {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        if points.is_empty() {
            return Err(Error::Invalid("universe must be non-empty".into()));
        }
        let mut index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::DuplicateName(p.clone()));
            }
        }
        Ok(Self { points, index })
    }

    /// Universe `{1, 2, ..., n}` used by the truncation families.
    pub fn numeric(n: u32) -> Self {
        Self::new((1..=n).map(|i| i.to_string())).expect("n >= 1")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point_name(&self, idx: usize) -> &str {
        &self.points[idx]
    }

    pub fn point_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }
}

/// Ordered finite collection of distinct parameter identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSet {
    params: Vec<String>,
    index: HashMap<String, usize>,
}

impl ParamSet {
    pub fn new<S: Into<String>>(params: impl IntoIterator<Item = S>) -> Result<Self> {
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        if params.is_empty() {
            return Err(Error::Invalid("parameter set must be non-empty".into()));
        }
        let mut index = HashMap::new();
        for (i, p) in params.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::DuplicateName(p.clone()));
            }
        }
        Ok(Self { params, index })
    }

    /// Parameters `r1, ..., rp`.
    pub fn numeric(p: u32) -> Self {
        Self::new((1..=p).map(|i| format!("r{i}"))).expect("p >= 1")
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn param_name(&self, idx: usize) -> &str {
        &self.params[idx]
    }

    pub fn param_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }
}

/// The `(universe, parameter set)` pair every soft set lives over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    universe: Universe,
    params: ParamSet,
}

impl Frame {
    pub fn new(universe: Universe, params: ParamSet) -> Arc<Self> {
        Arc::new(Self { universe, params })
    }

    pub fn numeric(points: u32, params: u32) -> Arc<Self> {
        Self::new(Universe::numeric(points), ParamSet::numeric(params))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    fn words(&self) -> usize {
        PointSet::words_for(self.universe.len())
    }
}

/// Subset of a universe as a fixed-width bit vector.
///
/// The width is the owning universe's point count; bits above it stay zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    words: Vec<u64>,
}

impl PointSet {
    pub fn words_for(n: usize) -> usize {
        n.div_ceil(64)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            words: vec![0; Self::words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for i in indices {
            debug_assert!(i < n);
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// Complement within a universe of `n` points.
    pub fn complement(&self, n: usize) -> Self {
        PointSet::full(n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.words.len() * 64;
        (0..n).filter(move |&i| self.contains(i))
    }

    /// Render as `{a,c}` using the universe's point names, in universe order.
    pub fn display(&self, universe: &Universe) -> String {
        let names: Vec<&str> = (0..universe.len())
            .filter(|&i| self.contains(i))
            .map(|i| universe.point_name(i))
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A soft set: one subset of the universe per parameter.
#[derive(Debug, Clone)]
pub struct SoftSet {
    frame: Arc<Frame>,
    rows: Vec<PointSet>,
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.frame, &other.frame) || self.frame == other.frame)
            && self.rows == other.rows
    }
}

impl Eq for SoftSet {}

impl SoftSet {
    /// The empty soft set: every parameter carries the empty subset.
    pub fn empty(frame: Arc<Frame>) -> Self {
        let n = frame.universe().len();
        let rows = vec![PointSet::empty(n); frame.params().len()];
        Self { frame, rows }
    }

    /// The universal soft set: every parameter carries the whole universe.
    pub fn universal(frame: Arc<Frame>) -> Self {
        let n = frame.universe().len();
        let rows = vec![PointSet::full(n); frame.params().len()];
        Self { frame, rows }
    }

    /// A-universal soft set: the whole universe on the given parameters,
    /// empty elsewhere.
    pub fn a_universal(frame: Arc<Frame>, support: &[usize]) -> Self {
        let n = frame.universe().len();
        let mut rows = vec![PointSet::empty(n); frame.params().len()];
        for &r in support {
            rows[r] = PointSet::full(n);
        }
        Self { frame, rows }
    }

    pub fn from_rows(frame: Arc<Frame>, rows: Vec<PointSet>) -> Self {
        debug_assert_eq!(rows.len(), frame.params().len());
        debug_assert!(rows.iter().all(|r| r.words().len() == frame.words()));
        Self { frame, rows }
    }

    /// Build from `(parameter name, point names)` entries; unnamed
    /// parameters carry the empty subset.
    pub fn from_entries<'a>(
        frame: Arc<Frame>,
        entries: impl IntoIterator<Item = (&'a str, &'a [&'a str])>,
    ) -> Result<Self> {
        let mut s = Self::empty(frame.clone());
        for (param, points) in entries {
            let r = frame.params().param_index(param)?;
            for p in points {
                let i = frame.universe().point_index(p)?;
                s.rows[r].insert(i);
            }
        }
        Ok(s)
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    pub fn row(&self, param_idx: usize) -> &PointSet {
        &self.rows[param_idx]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(PointSet::is_empty)
    }

    fn check_same_frame(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.frame, &other.frame) || self.frame == other.frame {
            Ok(())
        } else {
            Err(Error::FrameMismatch(
                "operands live over different universes or parameter sets".into(),
            ))
        }
    }

    fn zip_rows(&self, other: &Self, f: impl Fn(&PointSet, &PointSet) -> PointSet) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| f(a, b))
            .collect();
        Self {
            frame: self.frame.clone(),
            rows,
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same_frame(other)?;
        Ok(self.zip_rows(other, PointSet::union))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same_frame(other)?;
        Ok(self.zip_rows(other, PointSet::intersection))
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check_same_frame(other)?;
        Ok(self.zip_rows(other, PointSet::difference))
    }

    /// Soft complement relative to the whole universe at every parameter.
    pub fn absolute_complement(&self) -> Self {
        let n = self.frame.universe().len();
        let rows = self.rows.iter().map(|r| r.complement(n)).collect();
        Self {
            frame: self.frame.clone(),
            rows,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_same_frame(other)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b)))
    }

    /// A point is a soft point of `self` when it belongs to the assignment
    /// of every parameter.
    pub fn contains_soft_point(&self, point: &str) -> Result<bool> {
        let i = self.frame.universe().point_index(point)?;
        Ok(self.rows.iter().all(|r| r.contains(i)))
    }

    /// Flattened cell mask (rows concatenated in parameter order); the
    /// canonical key used for ordering, hashing and cover searches.
    pub fn cells(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.rows.len() * self.frame.words());
        for r in &self.rows {
            out.extend_from_slice(r.words());
        }
        out
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(PointSet::count).sum()
    }
}

impl fmt::Display for SoftSet {
    /// Parameters with an empty assignment are suppressed, so the empty
    /// soft set prints as `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let uni = self.frame.universe();
        let parts: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_empty())
            .map(|(i, r)| {
                format!(
                    "({},{})",
                    self.frame.params().param_name(i),
                    r.display(uni)
                )
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The worked three-point example space: X = {a,b,c}, R = {r1,r2,r3},
    /// carrier {(r1,X),(r2,{b,c})}.
    pub(crate) fn example_frame() -> Arc<Frame> {
        Frame::new(
            Universe::new(["a", "b", "c"]).unwrap(),
            ParamSet::new(["r1", "r2", "r3"]).unwrap(),
        )
    }

    fn sa(frame: &Arc<Frame>) -> SoftSet {
        SoftSet::from_entries(
            frame.clone(),
            [("r1", ["a", "b", "c"].as_slice()), ("r2", ["b", "c"].as_slice())],
        )
        .unwrap()
    }

    fn sa1(frame: &Arc<Frame>) -> SoftSet {
        SoftSet::from_entries(
            frame.clone(),
            [("r1", ["b"].as_slice()), ("r2", ["b", "c"].as_slice())],
        )
        .unwrap()
    }

    fn sa2(frame: &Arc<Frame>) -> SoftSet {
        SoftSet::from_entries(
            frame.clone(),
            [("r1", ["a", "c"].as_slice()), ("r2", ["c"].as_slice())],
        )
        .unwrap()
    }

    fn sa3(frame: &Arc<Frame>) -> SoftSet {
        SoftSet::from_entries(
            frame.clone(),
            [("r1", ["a", "b"].as_slice()), ("r2", ["b", "c"].as_slice())],
        )
        .unwrap()
    }

    #[test]
    fn union_of_first_two_opens_is_the_carrier() {
        let f = example_frame();
        assert_eq!(sa1(&f).union(&sa2(&f)).unwrap(), sa(&f));
        let s = sa3(&f);
        assert_eq!(s.union(&SoftSet::empty(f.clone())).unwrap(), s);
        assert_eq!(s.union(&s).unwrap(), s);
    }

    #[test]
    fn intersection_examples() {
        let f = example_frame();
        let expected =
            SoftSet::from_entries(f.clone(), [("r2", ["c"].as_slice())]).unwrap();
        assert_eq!(sa1(&f).intersection(&sa2(&f)).unwrap(), expected);
        let s = sa1(&f);
        let empty = SoftSet::empty(f.clone());
        assert_eq!(s.intersection(&empty).unwrap(), empty);
        assert_eq!(s.intersection(&s).unwrap(), s);
    }

    #[test]
    fn difference_examples() {
        let f = example_frame();
        let expected =
            SoftSet::from_entries(f.clone(), [("r1", ["a", "c"].as_slice())]).unwrap();
        assert_eq!(sa(&f).difference(&sa1(&f)).unwrap(), expected);
        let s = sa2(&f);
        let empty = SoftSet::empty(f.clone());
        assert_eq!(s.difference(&empty).unwrap(), s);
        assert_eq!(s.difference(&s).unwrap(), empty);
    }

    #[test]
    fn absolute_complement_examples() {
        let f = example_frame();
        let empty = SoftSet::empty(f.clone());
        let universal = SoftSet::universal(f.clone());
        assert_eq!(empty.absolute_complement(), universal);
        let s = sa2(&f);
        assert_eq!(s.absolute_complement().absolute_complement(), s);
        let expected = SoftSet::from_entries(
            f.clone(),
            [
                ("r1", ["a", "c"].as_slice()),
                ("r2", ["a"].as_slice()),
                ("r3", ["a", "b", "c"].as_slice()),
            ],
        )
        .unwrap();
        assert_eq!(sa1(&f).absolute_complement(), expected);
    }

    #[test]
    fn subset_examples() {
        let f = example_frame();
        assert!(sa1(&f).is_subset_of(&sa(&f)).unwrap());
        assert!(SoftSet::empty(f.clone()).is_subset_of(&sa2(&f)).unwrap());
        assert!(!sa(&f).is_subset_of(&sa1(&f)).unwrap());
    }

    #[test]
    fn soft_point_examples() {
        // Restricted to R = {r1, r2} so the empty r3 row does not interfere.
        let f = Frame::new(
            Universe::new(["a", "b", "c"]).unwrap(),
            ParamSet::new(["r1", "r2"]).unwrap(),
        );
        let s1 = SoftSet::from_entries(
            f.clone(),
            [("r1", ["b"].as_slice()), ("r2", ["b", "c"].as_slice())],
        )
        .unwrap();
        assert!(s1.contains_soft_point("b").unwrap());
        assert!(!SoftSet::empty(f.clone()).contains_soft_point("a").unwrap());
        let s = SoftSet::from_entries(
            f.clone(),
            [("r1", ["a", "b", "c"].as_slice()), ("r2", ["b", "c"].as_slice())],
        )
        .unwrap();
        assert!(!s.contains_soft_point("a").unwrap());
        assert!(s.contains_soft_point("b").unwrap());
    }

    #[test]
    fn mismatched_frames_error() {
        let f = example_frame();
        let g = Frame::new(
            Universe::new(["a", "b"]).unwrap(),
            ParamSet::new(["r1"]).unwrap(),
        );
        let res = SoftSet::empty(f).union(&SoftSet::empty(g));
        assert!(matches!(res, Err(Error::FrameMismatch(_))));
    }

    #[test]
    fn display_suppresses_empty_parameters() {
        let f = example_frame();
        assert_eq!(sa1(&f).to_string(), "{(r1,{b}),(r2,{b,c})}");
        assert_eq!(SoftSet::empty(f).to_string(), "{}");
    }
}
