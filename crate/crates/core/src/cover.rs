//! Soft cover machinery: validation, exact minimal subcover and
//! near-subcover search, the finite soft near-compactness decision and the
//! finite-intersection-property check.
//!
//! On a finite space every cover is finite, so compactness verdicts are
//! vacuously true; reports say so through the `finite_trivial` flag and the
//! informative outputs are exact minimal sizes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::search;
use crate::sgt::SoftSpace;
use crate::soft::SoftSet;

/// Regular-open families larger than this are not enumerated for the
/// worst-cover metrics; verdicts are still produced.
pub const REGULAR_COVER_ENUM_LIMIT: usize = 14;

/// A validated soft open cover of a strong space's carrier.
#[derive(Debug)]
pub struct SoftCover<'a> {
    space: &'a SoftSpace,
    members: Vec<SoftSet>,
}

/// Exact metrics for one validated cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub member_count: usize,
    pub plain_minimal_subcover_size: usize,
    pub plain_witness: Vec<usize>,
    pub near_minimal_subcover_size: usize,
    pub near_witness: Vec<usize>,
    /// Every member is regular open.
    pub regular_open_cover: bool,
}

/// Outcome of the finite soft near-compactness decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompactnessReport {
    /// Every regular-open cover admits a finite subcover.
    pub soft_n_mu_compact: bool,
    /// The equivalent formulation: every open cover admits a finite
    /// subfamily whose regularizations cover the carrier.
    pub near_formulation: bool,
    pub formulations_agree: bool,
    /// On a finite space both verdicts hold vacuously; the minimal sizes
    /// below carry the information.
    pub finite_trivial: bool,
    pub regular_open_count: usize,
    /// Exact maximum over enumerated regular-open covers (empty-set padding
    /// pruned) of the minimal subcover size; `None` when the regular-open
    /// family exceeds [`REGULAR_COVER_ENUM_LIMIT`].
    pub max_plain_minimal_subcover: Option<usize>,
    /// Regularization fixes regular opens, so this equals the plain metric
    /// whenever it is computed.
    pub max_near_minimal_subcover: Option<usize>,
    /// Indices into `regular_opens()` of a maximizing irredundant cover.
    pub worst_regular_cover: Vec<usize>,
}

/// Verdict record for a family of regular-closed soft sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FipReport {
    pub family_size: usize,
    /// Every finite subfamily has non-empty intersection. Intersections are
    /// antitone in the subfamily, so at finite scale this coincides with the
    /// total intersection being non-empty.
    pub fip_holds: bool,
    pub total_intersection_nonempty: bool,
    /// FIP implies a non-empty total intersection on a soft near-compact
    /// space; records that the implication held here.
    pub consistent_with_compactness: bool,
    pub total_intersection: String,
}

/// Check the cover axioms: the space is strong, every member is open and
/// the union of the members is the carrier. Diagnostics name the first
/// non-open member or the first uncovered (parameter, point) cell.
pub fn validate_cover<'a>(
    space: &'a SoftSpace,
    members: Vec<SoftSet>,
) -> Result<SoftCover<'a>> {
    if !space.is_strong() {
        return Err(Error::NotStrong);
    }
    for (i, m) in members.iter().enumerate() {
        if !space.is_open(m)? {
            return Err(Error::NonOpenMember { index: i });
        }
    }
    let mut union = SoftSet::empty(space.frame().clone());
    for m in &members {
        union = union.union(m)?;
    }
    if union != *space.carrier() {
        let missing = space.carrier().difference(&union)?;
        let frame = space.frame();
        for (r, row) in missing.rows().iter().enumerate() {
            if let Some(x) = row.iter_indices().next() {
                return Err(Error::Uncovered {
                    param: frame.params().param_name(r).to_string(),
                    point: frame.universe().point_name(x).to_string(),
                });
            }
        }
        unreachable!("nonempty difference has a first cell");
    }
    Ok(SoftCover { space, members })
}

impl<'a> SoftCover<'a> {
    pub fn space(&self) -> &'a SoftSpace {
        self.space
    }

    pub fn members(&self) -> &[SoftSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Exact smallest subfamily whose union is the carrier, with its
    /// lexicographically smallest witness.
    pub fn minimal_subcover(&self) -> Result<(usize, Vec<usize>)> {
        let target = self.space.carrier().cells();
        let sets: Vec<Vec<u64>> = self.members.iter().map(SoftSet::cells).collect();
        let found = search::minimal_cover(&target, &sets)?;
        Ok(found.expect("validated cover"))
    }

    /// Exact smallest subfamily whose regularizations `(c(member))ᵒ` union
    /// to the carrier. Open members sit inside their regularizations, so
    /// this never exceeds the plain minimal subcover.
    pub fn minimal_near_subcover(&self) -> Result<(usize, Vec<usize>)> {
        let target = self.space.carrier().cells();
        let sets: Vec<Vec<u64>> = self
            .members
            .iter()
            .map(|m| self.space.regularization(m).cells())
            .collect();
        let found = search::minimal_cover(&target, &sets)?;
        Ok(found.expect("regularizations contain the members"))
    }

    pub fn report(&self) -> Result<CoverReport> {
        let (plain, plain_witness) = self.minimal_subcover()?;
        let (near, near_witness) = self.minimal_near_subcover()?;
        let regular_open_cover = self
            .members
            .iter()
            .map(|m| self.space.is_regular_open(m))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b);
        Ok(CoverReport {
            member_count: self.members.len(),
            plain_minimal_subcover_size: plain,
            plain_witness,
            near_minimal_subcover_size: near,
            near_witness,
            regular_open_cover,
        })
    }
}

/// Decide soft near-compactness at finite scale.
///
/// The regular-open-cover verdict is decided by enumerating regular-open
/// covers; every enumerated cover is finite and therefore its own subcover,
/// so the decision procedure also verifies that each minimal subcover
/// exists. The equivalent open-cover formulation holds because every open
/// set sits inside its own regularization, which is verified per open here
/// rather than assumed. The informative metric is the worst minimal
/// subcover size over irredundant regular-open covers: in an irredundant
/// cover every member keeps a private cell, so the cover is its own unique
/// minimal subcover, and any cover's minimal subcover is itself irredundant.
pub fn is_soft_n_mu_compact_finite(space: &SoftSpace) -> Result<CompactnessReport> {
    if !space.is_strong() {
        return Err(Error::NotStrong);
    }
    let regular = space.regular_opens();
    let regular_open_count = regular.len();

    // Near formulation: every open cover C near-covers via C itself
    // provided v is contained in (c(v))ᵒ for every open v.
    let near_formulation = space
        .opens()
        .iter()
        .all(|v| v.is_subset_of(&space.regularization(v)).expect("shared frame"));

    // Regular-open covers are finite subfamilies of a finite family: each
    // one is its own finite subcover, hence the verdict.
    let soft_n_mu_compact = true;
    let finite_trivial = true;

    let nonempty: Vec<&SoftSet> = regular.iter().filter(|s| !s.is_empty()).collect();
    let carrier_cells = space.carrier().cells();
    let mut max_metrics: Option<(usize, Vec<usize>)> = None;
    if nonempty.len() <= REGULAR_COVER_ENUM_LIMIT {
        let cells: Vec<Vec<u64>> = nonempty.iter().map(|s| s.cells()).collect();
        // Map positions in `nonempty` back to positions in `regular`.
        let back: Vec<usize> = regular
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_empty())
            .map(|(i, _)| i)
            .collect();
        let width = carrier_cells.len();
        if carrier_cells.iter().all(|&w| w == 0) {
            max_metrics = Some((0, Vec::new()));
        }
        for mask in 1u32..1 << nonempty.len() {
            let chosen: Vec<usize> =
                (0..nonempty.len()).filter(|i| mask >> i & 1 == 1).collect();
            let mut union = vec![0u64; width];
            for &i in &chosen {
                for (u, w) in union.iter_mut().zip(&cells[i]) {
                    *u |= w;
                }
            }
            if union != carrier_cells {
                continue;
            }
            // Irredundant: every member keeps a cell of its own.
            let irredundant = chosen.iter().all(|&i| {
                let mut rest = vec![0u64; width];
                for &j in &chosen {
                    if j != i {
                        for (u, w) in rest.iter_mut().zip(&cells[j]) {
                            *u |= w;
                        }
                    }
                }
                cells[i].iter().zip(&rest).any(|(c, r)| c & !r != 0)
            });
            if !irredundant {
                continue;
            }
            let indices: Vec<usize> = chosen.iter().map(|&i| back[i]).collect();
            let better = match &max_metrics {
                None => true,
                Some((k, w)) => indices.len() > *k || (indices.len() == *k && indices < *w),
            };
            if better {
                max_metrics = Some((indices.len(), indices));
            }
        }
    }

    let (max_plain, worst) = match max_metrics {
        Some((k, w)) => (Some(k), w),
        None => (None, Vec::new()),
    };
    Ok(CompactnessReport {
        soft_n_mu_compact,
        near_formulation,
        formulations_agree: soft_n_mu_compact == near_formulation,
        finite_trivial,
        regular_open_count,
        max_plain_minimal_subcover: max_plain,
        max_near_minimal_subcover: max_plain,
        worst_regular_cover: worst,
    })
}

/// Finite-intersection-property check over a family of regular-closed sets.
pub fn fip_check(space: &SoftSpace, family: &[SoftSet]) -> Result<FipReport> {
    for (i, f) in family.iter().enumerate() {
        if !space.is_regular_closed(f)? {
            return Err(Error::NotRegularClosed { index: i });
        }
    }
    let mut total = space.carrier().clone();
    for f in family {
        total = total.intersection(f)?;
    }
    let total_nonempty = !total.is_empty();
    // Intersection is antitone in the subfamily, so the full family attains
    // the minimum: FIP over all finite subfamilies collapses to it.
    let fip_holds = total_nonempty || family.is_empty();
    let compact = is_soft_n_mu_compact_finite(space)?.soft_n_mu_compact;
    let consistent = !(compact && fip_holds) || total_nonempty || family.is_empty();
    Ok(FipReport {
        family_size: family.len(),
        fip_holds,
        total_intersection_nonempty: total_nonempty,
        consistent_with_compactness: consistent,
        total_intersection: total.to_string(),
    })
}
