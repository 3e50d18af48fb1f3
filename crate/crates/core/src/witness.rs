//! Truncation families: size-indexed finite spaces with a distinguished
//! cover and an expected minimal-subcover growth law, certified by exact
//! search. Unbounded growth of exact minimal sizes over truncations is the
//! finite rendition of an infinite non-compactness argument; the artifact
//! never claims to decide the infinite case, only to certify the growth
//! pattern.
//!
//! Families implement [`GrowthFamily`] and are looked up by name, so the
//! command line can select one at runtime.

use serde::Serialize;

use crate::cover::validate_cover;
use crate::error::{Error, Result};
use crate::gt::{GtSpace, SetFamily};
use crate::search;
use crate::sgt::{SoftBasis, SoftSpace};
use crate::soft::{Frame, PointSet, SoftSet, Universe};
use std::sync::Arc;

/// One concrete truncation: a space plus its distinguished cover.
#[derive(Debug)]
pub enum FamilyInstance {
    Soft {
        space: SoftSpace,
        cover: Vec<SoftSet>,
        labels: Vec<String>,
    },
    Ground {
        space: GtSpace,
        cover: SetFamily,
        labels: Vec<String>,
    },
}

/// A size-indexed family of finite spaces with an expected growth law.
pub trait GrowthFamily {
    fn name(&self) -> &'static str;
    fn describe(&self) -> String;
    /// Smallest supported size index.
    fn min_index(&self) -> u32;
    fn build(&self, n: u32) -> Result<FamilyInstance>;
    fn expected_plain(&self, n: u32) -> u64;
    fn expected_near(&self, n: u32) -> u64;
}

/// Per-size certificate entry: computed exact sizes next to the expected law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthEntry {
    pub n: u32,
    pub plain: u64,
    pub near: u64,
    pub expected_plain: u64,
    pub expected_near: u64,
}

/// Machine-readable growth certificate over a sampled range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthCertificate {
    pub family: String,
    pub n_min: u32,
    pub n_max: u32,
    pub entries: Vec<GrowthEntry>,
    /// Every computed size matched the expected law (a mismatch aborts the
    /// certificate instead).
    pub expected_match: bool,
    /// Plain sizes are non-decreasing and strictly grow over the sampled
    /// range; a finite-scale proxy only, as sampled.
    pub unbounded_monotone: bool,
}

/// Compute exact plain and near minimal subcover sizes for one instance.
pub fn exact_sizes(instance: &FamilyInstance) -> Result<(u64, u64)> {
    match instance {
        FamilyInstance::Soft { space, cover, .. } => {
            let cover = validate_cover(space, cover.clone())?;
            let plain = cover.minimal_subcover()?.0 as u64;
            let near = cover.minimal_near_subcover()?.0 as u64;
            Ok((plain, near))
        }
        FamilyInstance::Ground { space, cover, .. } => {
            let plain = space.minimal_subcover(cover)?.0 as u64;
            let near = space.minimal_near_subcover(cover)?.0 as u64;
            Ok((plain, near))
        }
    }
}

/// Certify a family over `min_index..=n_max`: exact sizes per truncation,
/// checked against the expected law. Same inputs yield byte-identical
/// serialized certificates.
pub fn growth_certificate(
    family: &dyn GrowthFamily,
    n_max: u32,
) -> Result<GrowthCertificate> {
    let n_min = family.min_index();
    if n_max < n_min {
        return Err(Error::OutOfRange { n: n_max, min: n_min });
    }
    let mut entries = Vec::new();
    for n in n_min..=n_max {
        let instance = family.build(n)?;
        let (plain, near) = exact_sizes(&instance)?;
        let expected_plain = family.expected_plain(n);
        let expected_near = family.expected_near(n);
        if plain != expected_plain {
            return Err(Error::Certification {
                n,
                detail: format!("plain minimal subcover {plain} != expected {expected_plain}"),
            });
        }
        if near != expected_near {
            return Err(Error::Certification {
                n,
                detail: format!("near minimal subcover {near} != expected {expected_near}"),
            });
        }
        entries.push(GrowthEntry {
            n,
            plain,
            near,
            expected_plain,
            expected_near,
        });
    }
    let plains: Vec<u64> = entries.iter().map(|e| e.plain).collect();
    let non_decreasing = plains.windows(2).all(|w| w[0] <= w[1]);
    let unbounded_monotone = entries.len() >= 2
        && non_decreasing
        && plains.last().unwrap() > plains.first().unwrap();
    Ok(GrowthCertificate {
        family: family.name().to_string(),
        n_min,
        n_max,
        entries,
        expected_match: true,
        unbounded_monotone,
    })
}

/// Minimal covering subfamily of `members` over the carrier, ignoring any
/// openness requirement. Used for auxiliary cover patterns that are not
/// open in their space.
pub fn raw_cover_size(
    carrier: &SoftSet,
    members: &[SoftSet],
) -> Result<Option<(usize, Vec<usize>)>> {
    let sets: Vec<Vec<u64>> = members.iter().map(SoftSet::cells).collect();
    search::minimal_cover(&carrier.cells(), &sets)
}

/// X = {1..n} with one basis member per x >= 2 assigning {1,x} at every
/// parameter: the basis cover needs all n-1 members, yet one
/// regularization already swallows the carrier.
#[derive(Debug, Clone)]
pub struct OnesFamily {
    pub params: u32,
}

impl Default for OnesFamily {
    fn default() -> Self {
        Self { params: 2 }
    }
}

impl OnesFamily {
    fn frame(&self, n: u32) -> Arc<Frame> {
        Frame::numeric(n, self.params)
    }

    fn basis(&self, n: u32) -> Vec<SoftSet> {
        let frame = self.frame(n);
        (2..=n)
            .map(|x| {
                let row = PointSet::from_indices(n as usize, [0, (x - 1) as usize]);
                SoftSet::from_rows(frame.clone(), vec![row; self.params as usize])
            })
            .collect()
    }

    /// The displayed row pattern of the source construction: row i assigns
    /// {1..j} u {i+j} at the j-th parameter, clipped to {1..n}. The rows are
    /// not open in the generated space (their coordinates differ across
    /// parameters), so they are reported as a raw cover pattern with
    /// computed values only.
    pub fn alternate_rows(&self, n: u32) -> Vec<SoftSet> {
        let frame = self.frame(n);
        (1..n)
            .map(|i| {
                let rows: Vec<PointSet> = (1..=self.params)
                    .map(|j| {
                        let mut s = PointSet::empty(n as usize);
                        for k in 1..=j.min(n) {
                            s.insert((k - 1) as usize);
                        }
                        if i + j <= n {
                            s.insert((i + j - 1) as usize);
                        }
                        s
                    })
                    .collect();
                SoftSet::from_rows(frame.clone(), rows)
            })
            .collect()
    }
}

impl GrowthFamily for OnesFamily {
    fn name(&self) -> &'static str {
        "family_example_ones"
    }

    fn describe(&self) -> String {
        format!(
            "pair basis {{1,x}} on X = {{1..n}} over {} parameter(s): plain n-1, near 1",
            self.params
        )
    }

    fn min_index(&self) -> u32 {
        2
    }

    fn build(&self, n: u32) -> Result<FamilyInstance> {
        if n < self.min_index() {
            return Err(Error::OutOfRange { n, min: self.min_index() });
        }
        let frame = self.frame(n);
        let carrier = SoftSet::universal(frame);
        let basis = self.basis(n);
        let space = SoftSpace::generate(carrier, &SoftBasis::new(basis.clone()))?;
        let labels = (2..=n).map(|x| format!("B_{x}")).collect();
        Ok(FamilyInstance::Soft {
            space,
            cover: basis,
            labels,
        })
    }

    fn expected_plain(&self, n: u32) -> u64 {
        (n - 1) as u64
    }

    fn expected_near(&self, _n: u32) -> u64 {
        1
    }
}

/// X = {1..2m} with base {{k,k+1}}: the disjoint odd pairs form a
/// regular-open cover forcing all m members.
#[derive(Debug, Clone, Default)]
pub struct PairsFamily;

impl GrowthFamily for PairsFamily {
    fn name(&self) -> &'static str {
        "family_pairs"
    }

    fn describe(&self) -> String {
        "adjacent-pair base on X = {1..2m}; odd-pair regular-open cover needs all m members"
            .to_string()
    }

    fn min_index(&self) -> u32 {
        1
    }

    fn build(&self, m: u32) -> Result<FamilyInstance> {
        if m < self.min_index() {
            return Err(Error::OutOfRange { n: m, min: self.min_index() });
        }
        let n = 2 * m;
        let universe = Arc::new(Universe::numeric(n));
        let base = SetFamily::new(
            (1..n)
                .map(|k| PointSet::from_indices(n as usize, [(k - 1) as usize, k as usize]))
                .collect(),
        );
        let space = GtSpace::generate(universe, &base)?;
        let cover = SetFamily::new(
            (1..=m)
                .map(|j| {
                    PointSet::from_indices(n as usize, [(2 * j - 2) as usize, (2 * j - 1) as usize])
                })
                .collect(),
        );
        let labels = (1..=m).map(|j| format!("{{{},{}}}", 2 * j - 1, 2 * j)).collect();
        Ok(FamilyInstance::Ground {
            space,
            cover,
            labels,
        })
    }

    fn expected_plain(&self, m: u32) -> u64 {
        m as u64
    }

    fn expected_near(&self, m: u32) -> u64 {
        m as u64
    }
}

/// Discrete truncation of the closed subspace counterexample: the space
/// generated by one singleton atom per (parameter, point) cell, covered by
/// the clipped row pattern. Every soft subset is clopen, so regularization
/// buys nothing and the plain and near sizes agree at n.
#[derive(Debug, Clone)]
pub struct DiscreteSubspaceFamily {
    pub params: u32,
}

impl Default for DiscreteSubspaceFamily {
    fn default() -> Self {
        Self { params: 1 }
    }
}

impl DiscreteSubspaceFamily {
    /// Row i assigns {i} at the first parameter and {1..j-1} u {i+j-1} at
    /// the j-th, clipped to {1..n}.
    fn rows(&self, n: u32) -> Vec<SoftSet> {
        let frame = Frame::numeric(n, self.params);
        (1..=n)
            .map(|i| {
                let rows: Vec<PointSet> = (1..=self.params)
                    .map(|j| {
                        let mut s = PointSet::empty(n as usize);
                        for k in 1..j.min(n + 1) {
                            s.insert((k - 1) as usize);
                        }
                        if i + j - 1 <= n {
                            s.insert((i + j - 2) as usize);
                        }
                        s
                    })
                    .collect();
                SoftSet::from_rows(frame.clone(), rows)
            })
            .collect()
    }
}

impl GrowthFamily for DiscreteSubspaceFamily {
    fn name(&self) -> &'static str {
        "family_discrete_subspace"
    }

    fn describe(&self) -> String {
        format!(
            "discrete singleton-generated space on X = {{1..n}} over {} parameter(s); clipped row cover needs all n members",
            self.params
        )
    }

    fn min_index(&self) -> u32 {
        1
    }

    fn build(&self, n: u32) -> Result<FamilyInstance> {
        if n < self.min_index() {
            return Err(Error::OutOfRange { n, min: self.min_index() });
        }
        let frame = Frame::numeric(n, self.params);
        let carrier = SoftSet::universal(frame.clone());
        let mut atoms = Vec::new();
        for r in 0..self.params as usize {
            for x in 0..n as usize {
                let mut rows = vec![PointSet::empty(n as usize); self.params as usize];
                rows[r] = PointSet::from_indices(n as usize, [x]);
                atoms.push(SoftSet::from_rows(frame.clone(), rows));
            }
        }
        let space = SoftSpace::generate(carrier, &SoftBasis::new(atoms))?;
        let labels = (1..=n).map(|i| format!("F_{i}")).collect();
        Ok(FamilyInstance::Soft {
            space,
            cover: self.rows(n),
            labels,
        })
    }

    fn expected_plain(&self, n: u32) -> u64 {
        n as u64
    }

    fn expected_near(&self, n: u32) -> u64 {
        n as u64
    }
}

/// The built-in families under their registry names, with default
/// parameter counts.
pub fn builtin_families() -> Vec<Box<dyn GrowthFamily>> {
    vec![
        Box::new(OnesFamily::default()),
        Box::new(PairsFamily),
        Box::new(DiscreteSubspaceFamily::default()),
    ]
}

/// Look a family up by registry name; `params` overrides the parameter
/// count where the family has one.
pub fn lookup_family(name: &str, params: Option<u32>) -> Option<Box<dyn GrowthFamily>> {
    match name {
        "family_example_ones" => Some(Box::new(OnesFamily {
            params: params.unwrap_or(2),
        })),
        "family_pairs" => Some(Box::new(PairsFamily)),
        "family_discrete_subspace" => Some(Box::new(DiscreteSubspaceFamily {
            params: params.unwrap_or(1),
        })),
        _ => None,
    }
}
