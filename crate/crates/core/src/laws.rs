//! Seeded law suites over randomly generated finite instances.
//!
//! Every suite draws its instances from a deterministic ChaCha stream, so a
//! fixed seed reproduces the run bit for bit. Suites return a report with
//! the number of instances and individual checks run plus a sample of any
//! failures; an empty failure list is the pass condition.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cover::{fip_check, is_soft_n_mu_compact_finite};
use crate::gt::{GtSpace, SetFamily};
use crate::sgt::{SoftBasis, SoftSpace};
use crate::soft::{Frame, PointSet, SoftSet, Universe};

/// Default seed for reproducible suite runs.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub instances: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            instances: 500,
        }
    }
}

/// Outcome of one law suite.
#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instances: usize,
    pub checks: usize,
    pub failure_count: usize,
    /// At most eight sample messages.
    pub failures: Vec<String>,
}

impl LawReport {
    fn new(law: &str) -> Self {
        Self {
            law: law.to_string(),
            instances: 0,
            checks: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < 8 {
                self.failures.push(msg());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

/// Random instance generators shared by the suites and the test targets.
pub mod gen {
    use super::*;

    #[derive(Debug, Clone, Copy)]
    pub struct Limits {
        pub max_points: u32,
        pub max_params: u32,
        pub max_basis: u32,
    }

    impl Default for Limits {
        fn default() -> Self {
            Self {
                max_points: 5,
                max_params: 3,
                max_basis: 5,
            }
        }
    }

    pub fn frame(rng: &mut ChaCha8Rng, limits: Limits) -> Arc<Frame> {
        Frame::numeric(
            rng.gen_range(1..=limits.max_points),
            rng.gen_range(1..=limits.max_params),
        )
    }

    pub fn soft_set(rng: &mut ChaCha8Rng, frame: &Arc<Frame>, density: f64) -> SoftSet {
        let n = frame.universe().len();
        let rows = (0..frame.params().len())
            .map(|_| {
                PointSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(density)))
            })
            .collect();
        SoftSet::from_rows(frame.clone(), rows)
    }

    pub fn soft_subset(rng: &mut ChaCha8Rng, of: &SoftSet, density: f64) -> SoftSet {
        let n = of.frame().universe().len();
        let rows = of
            .rows()
            .iter()
            .map(|row| {
                PointSet::from_indices(
                    n,
                    row.iter_indices().filter(|_| rng.gen_bool(density)),
                )
            })
            .collect();
        SoftSet::from_rows(of.frame().clone(), rows)
    }

    /// Strong space: random carrier, random open generators plus the carrier.
    pub fn strong_space(rng: &mut ChaCha8Rng, limits: Limits) -> SoftSpace {
        let frame = frame(rng, limits);
        let carrier = soft_set(rng, &frame, 0.8);
        let mut basis: Vec<SoftSet> = (0..rng.gen_range(0..=limits.max_basis))
            .map(|_| soft_subset(rng, &carrier, 0.5))
            .collect();
        basis.push(carrier.clone());
        SoftSpace::generate(carrier, &SoftBasis::new(basis)).expect("basis within carrier")
    }

    /// Strong space whose carrier is small enough to enumerate every soft
    /// subset (at most `max_cells` cells).
    pub fn small_strong_space(
        rng: &mut ChaCha8Rng,
        limits: Limits,
        max_cells: usize,
    ) -> SoftSpace {
        loop {
            let space = strong_space(rng, limits);
            if space.carrier().cell_count() <= max_cells {
                return space;
            }
        }
    }

    /// Strong space closed under intersections as well as unions: the
    /// distributive closure of the generators. Subspace trace arguments
    /// need the intersection axiom.
    pub fn qt_strong_space(rng: &mut ChaCha8Rng, limits: Limits) -> SoftSpace {
        'outer: loop {
            let frame = frame(rng, limits);
            let carrier = soft_set(rng, &frame, 0.8);
            let mut gens: Vec<SoftSet> = (0..rng.gen_range(0..=limits.max_basis))
                .map(|_| soft_subset(rng, &carrier, 0.5))
                .collect();
            gens.push(carrier.clone());
            // All intersections of nonempty generator subfamilies; their
            // unions then form an intersection-closed family.
            let mut meets: Vec<SoftSet> = Vec::new();
            let mut seen = BTreeSet::new();
            for mask in 1u32..1 << gens.len() {
                let mut acc: Option<SoftSet> = None;
                for (i, g) in gens.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc = Some(match acc {
                            None => g.clone(),
                            Some(a) => a.intersection(g).expect("shared frame"),
                        });
                    }
                }
                let acc = acc.expect("nonempty mask");
                if seen.insert(acc.cells()) {
                    meets.push(acc);
                }
            }
            let space = SoftSpace::generate(carrier, &SoftBasis::new(meets))
                .expect("meets within carrier");
            if space.opens().len() <= 64 {
                break 'outer space;
            }
        }
    }

    /// Strong space over an A-universal carrier generated by per-parameter
    /// uniform soft sets, the shape of every A-universal construction in
    /// scope. Returns the space and the support A.
    pub fn uniform_a_universal(
        rng: &mut ChaCha8Rng,
        limits: Limits,
    ) -> (SoftSpace, Vec<usize>) {
        let frame = frame(rng, limits);
        let np = frame.params().len();
        let mut support: Vec<usize> = (0..np).filter(|_| rng.gen_bool(0.7)).collect();
        if support.is_empty() {
            support.push(rng.gen_range(0..np));
        }
        let carrier = SoftSet::a_universal(frame.clone(), &support);
        let n = frame.universe().len();
        let mut basis: Vec<SoftSet> = (0..rng.gen_range(0..=limits.max_basis))
            .map(|_| {
                let t = PointSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
                let mut rows = vec![PointSet::empty(n); np];
                for &r in &support {
                    rows[r] = t.clone();
                }
                SoftSet::from_rows(frame.clone(), rows)
            })
            .collect();
        basis.push(carrier.clone());
        let space =
            SoftSpace::generate(carrier, &SoftBasis::new(basis)).expect("within carrier");
        (space, support)
    }

    pub fn ground_space(
        rng: &mut ChaCha8Rng,
        max_points: u32,
        max_base: u32,
        force_mu: bool,
    ) -> GtSpace {
        let universe = Arc::new(Universe::numeric(rng.gen_range(1..=max_points)));
        let n = universe.len();
        let mut base: Vec<PointSet> = (0..rng.gen_range(0..=max_base))
            .map(|_| PointSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))))
            .collect();
        if force_mu {
            base.push(PointSet::full(n));
        }
        GtSpace::generate(universe, &SetFamily::new(base)).expect("generation fits")
    }

    /// Every soft subset of the carrier, by cell mask.
    pub fn all_soft_subsets(carrier: &SoftSet) -> Vec<SoftSet> {
        let cells: Vec<(usize, usize)> = carrier
            .rows()
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter_indices().map(move |x| (r, x)))
            .collect();
        let n = carrier.frame().universe().len();
        let np = carrier.frame().params().len();
        (0u32..1 << cells.len())
            .map(|mask| {
                let mut rows = vec![PointSet::empty(n); np];
                for (bit, &(r, x)) in cells.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        rows[r].insert(x);
                    }
                }
                SoftSet::from_rows(carrier.frame().clone(), rows)
            })
            .collect()
    }
}

fn rng_for(cfg: &SuiteConfig, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ tag)
}

/// Lattice laws of the soft algebra: associativity, commutativity,
/// idempotence, De Morgan under the absolute complement, difference via
/// complement, and the subset partial order.
pub fn suite_soft_algebra(cfg: &SuiteConfig) -> LawReport {
    let mut rep = LawReport::new("soft_algebra");
    let mut rng = rng_for(cfg, 1);
    for i in 0..cfg.instances {
        rep.instances += 1;
        let frame = gen::frame(&mut rng, gen::Limits::default());
        let s = gen::soft_set(&mut rng, &frame, 0.5);
        let t = gen::soft_set(&mut rng, &frame, 0.5);
        let u = gen::soft_set(&mut rng, &frame, 0.5);

        let assoc_u = s.union(&t).unwrap().union(&u).unwrap()
            == s.union(&t.union(&u).unwrap()).unwrap();
        rep.check(assoc_u, || format!("#{i}: union associativity"));
        let assoc_i = s.intersection(&t).unwrap().intersection(&u).unwrap()
            == s.intersection(&t.intersection(&u).unwrap()).unwrap();
        rep.check(assoc_i, || format!("#{i}: intersection associativity"));
        rep.check(s.union(&t).unwrap() == t.union(&s).unwrap(), || {
            format!("#{i}: union commutativity")
        });
        rep.check(
            s.intersection(&t).unwrap() == t.intersection(&s).unwrap(),
            || format!("#{i}: intersection commutativity"),
        );
        rep.check(s.union(&s).unwrap() == s, || format!("#{i}: union idempotence"));
        rep.check(s.intersection(&s).unwrap() == s, || {
            format!("#{i}: intersection idempotence")
        });

        let de_morgan_u = s.union(&t).unwrap().absolute_complement()
            == s.absolute_complement()
                .intersection(&t.absolute_complement())
                .unwrap();
        rep.check(de_morgan_u, || format!("#{i}: De Morgan over union"));
        let de_morgan_i = s.intersection(&t).unwrap().absolute_complement()
            == s.absolute_complement()
                .union(&t.absolute_complement())
                .unwrap();
        rep.check(de_morgan_i, || format!("#{i}: De Morgan over intersection"));

        let diff = s.difference(&t).unwrap()
            == s.intersection(&t.absolute_complement()).unwrap();
        rep.check(diff, || format!("#{i}: difference via complement"));

        rep.check(s.is_subset_of(&s).unwrap(), || {
            format!("#{i}: subset reflexivity")
        });
        if s.is_subset_of(&t).unwrap() && t.is_subset_of(&s).unwrap() {
            rep.check(s == t, || format!("#{i}: subset antisymmetry"));
        }
        let st = s.union(&t).unwrap();
        let stu = st.union(&u).unwrap();
        rep.check(
            s.is_subset_of(&st).unwrap() && st.is_subset_of(&stu).unwrap()
                && s.is_subset_of(&stu).unwrap(),
            || format!("#{i}: subset transitivity along unions"),
        );
    }
    rep
}

/// Interior and closure are monotone, idempotent, deflationary resp.
/// inflationary, and the composite interior-of-closure is idempotent on
/// every soft subset; same for the ground variant.
pub fn suite_operator_laws(cfg: &SuiteConfig) -> LawReport {
    let mut rep = LawReport::new("operator_laws");
    let mut rng = rng_for(cfg, 2);
    let limits = gen::Limits {
        max_points: 4,
        max_params: 3,
        max_basis: 4,
    };
    for i in 0..cfg.instances {
        rep.instances += 1;
        let space = gen::small_strong_space(&mut rng, limits, 10);
        let subsets = gen::all_soft_subsets(space.carrier());
        for s in &subsets {
            let int = space.interior(s).unwrap();
            let cl = space.closure(s).unwrap();
            rep.check(
                int.is_subset_of(s).unwrap() && s.is_subset_of(&cl).unwrap(),
                || format!("#{i}: interior deflationary / closure inflationary on {s}"),
            );
            rep.check(
                space.interior(&int).unwrap() == int && space.closure(&cl).unwrap() == cl,
                || format!("#{i}: operator idempotence on {s}"),
            );
            rep.check(
                space.is_open(&int).unwrap() && space.is_closed(&cl).unwrap(),
                || format!("#{i}: interior open / closure closed on {s}"),
            );
            let reg = space.interior(&cl).unwrap();
            let reg2 = space
                .interior(&space.closure(&reg).unwrap())
                .unwrap();
            rep.check(reg == reg2, || {
                format!("#{i}: interior-closure idempotence on {s}")
            });
        }
        // Monotonicity along a random inclusion chain.
        let lo = gen::soft_subset(&mut rng, space.carrier(), 0.4);
        let hi = lo
            .union(&gen::soft_subset(&mut rng, space.carrier(), 0.4))
            .unwrap();
        let mono = space
            .interior(&lo)
            .unwrap()
            .is_subset_of(&space.interior(&hi).unwrap())
            .unwrap()
            && space
                .closure(&lo)
                .unwrap()
                .is_subset_of(&space.closure(&hi).unwrap())
                .unwrap();
        rep.check(mono, || format!("#{i}: operator monotonicity"));

        // Ground variant, exhaustively over subsets of the universe.
        let force_mu = rng.gen_bool(0.5);
        let ground = gen::ground_space(&mut rng, 6, 5, force_mu);
        let n = ground.universe().len();
        for mask in 0u32..1 << n {
            let a = PointSet::from_indices(n, (0..n).filter(|b| mask >> b & 1 == 1));
            let reg = ground.interior(&ground.closure(&a).unwrap()).unwrap();
            let reg2 = ground.interior(&ground.closure(&reg).unwrap()).unwrap();
            rep.check(reg == reg2, || {
                format!("#{i}: ground interior-closure idempotence")
            });
        }
    }
    rep
}

/// Interiors of closed sets are regular open; closures of open sets are
/// regular closed; regular sets are open resp. closed.
pub fn suite_regularity_theorems(cfg: &SuiteConfig) -> LawReport {
    let mut rep = LawReport::new("regularity_theorems");
    let mut rng = rng_for(cfg, 3);
    let limits = gen::Limits {
        max_points: 5,
        max_params: 3,
        max_basis: 5,
    };
    for i in 0..cfg.instances {
        rep.instances += 1;
        let space = gen::strong_space(&mut rng, limits);
        for v in space.opens() {
            let closed = space.carrier().difference(v).unwrap();
            let int = space.interior(&closed).unwrap();
            rep.check(space.is_regular_open(&int).unwrap(), || {
                format!("#{i}: interior of closed {closed} not regular open")
            });
            let cl = space.closure(v).unwrap();
            rep.check(space.is_regular_closed(&cl).unwrap(), || {
                format!("#{i}: closure of open {v} not regular closed")
            });
        }
        for r in space.regular_opens() {
            rep.check(space.is_open(&r).unwrap(), || {
                format!("#{i}: regular open {r} not open")
            });
        }
        for _ in 0..8 {
            let s = gen::soft_subset(&mut rng, space.carrier(), 0.5);
            if space.is_regular_open(&s).unwrap() {
                rep.check(space.is_open(&s).unwrap(), || {
                    format!("#{i}: regular open {s} not open")
                });
            }
            if space.is_regular_closed(&s).unwrap() {
                rep.check(space.is_closed(&s).unwrap(), || {
                    format!("#{i}: regular closed {s} not closed")
                });
            }
        }
    }
    rep
}

/// On intersection-closed parents, the regular sets of a trace space on an
/// open set are exactly the traces of the parent's regular sets.
pub fn suite_subspace_trace(cfg: &SuiteConfig) -> LawReport {
    let mut rep = LawReport::new("subspace_trace");
    let mut rng = rng_for(cfg, 4);
    for i in 0..cfg.instances {
        rep.instances += 1;
        let space = gen::qt_strong_space(&mut rng, gen::Limits::default());
        let reg_open: Vec<SoftSet> = space.regular_opens();
        let reg_closed: Vec<SoftSet> = space
            .opens()
            .iter()
            .map(|v| space.carrier().difference(v).unwrap())
            .filter(|c| space.is_regular_closed(c).unwrap())
            .collect();
        for b in space.opens() {
            let sub = space.subspace(b).unwrap();
            let got: BTreeSet<Vec<u64>> = sub
                .regular_opens()
                .into_iter()
                .map(|s| s.cells())
                .collect();
            let want: BTreeSet<Vec<u64>> = reg_open
                .iter()
                .map(|u| u.intersection(b).unwrap().cells())
                .collect();
            rep.check(got == want, || {
                format!("#{i}: regular-open trace mismatch on b = {b}")
            });

            let got_closed: BTreeSet<Vec<u64>> = sub
                .opens()
                .iter()
                .map(|v| b.difference(v).unwrap())
                .filter(|c| sub.is_regular_closed(c).unwrap())
                .map(|c| c.cells())
                .collect();
            let want_closed: BTreeSet<Vec<u64>> = reg_closed
                .iter()
                .map(|u| u.intersection(b).unwrap().cells())
                .collect();
            rep.check(got_closed == want_closed, || {
                format!("#{i}: regular-closed trace mismatch on b = {b}")
            });
        }
    }
    rep
}

/// Over A-universal carriers with per-parameter uniform generators: a
/// subfamily covers the carrier exactly when each projection covers the
/// universe, and a uniform soft set is regular exactly when its coordinate
/// is regular in every projection over the support.
pub fn suite_a_universal(cfg: &SuiteConfig) -> LawReport {
    let mut rep = LawReport::new("a_universal_correspondence");
    let mut rng = rng_for(cfg, 5);
    for i in 0..cfg.instances {
        rep.instances += 1;
        let (space, support) = gen::uniform_a_universal(&mut rng, gen::Limits::default());
        let frame = space.frame().clone();
        let n = frame.universe().len();
        let projections: Vec<GtSpace> = (0..frame.params().len())
            .map(|r| space.project(frame.params().param_name(r)).unwrap())
            .collect();

        for (r, proj) in projections.iter().enumerate() {
            let union_closed = {
                let opens = proj.opens();
                let mut ok = true;
                'check: for a in 0..opens.len() {
                    for b in a + 1..opens.len() {
                        let u = opens[a].union(&opens[b]);
                        if opens.binary_search(&u).is_err() {
                            ok = false;
                            break 'check;
                        }
                    }
                }
                ok
            };
            rep.check(union_closed, || {
                format!("#{i}: projection at parameter {r} not union closed")
            });
            if support.contains(&r) {
                rep.check(proj.is_mu_space(), || {
                    format!("#{i}: projection at supported parameter {r} not a mu-space")
                });
            }
        }

        // Cover correspondence over random subfamilies of the opens.
        for _ in 0..10 {
            let members: Vec<SoftSet> = space
                .opens()
                .iter()
                .filter(|_| rng.gen_bool(0.5))
                .cloned()
                .collect();
            let mut union = SoftSet::empty(frame.clone());
            for m in &members {
                union = union.union(m).unwrap();
            }
            let soft_covers = union == *space.carrier();
            let projected_cover = (0..frame.params().len()).all(|r| {
                let mut u = PointSet::empty(n);
                for m in &members {
                    u = u.union(m.row(r));
                }
                u == *space.carrier().row(r)
            });
            rep.check(soft_covers == projected_cover, || {
                format!("#{i}: cover correspondence mismatch")
            });
        }

        // Regularity correspondence for uniform-on-A soft sets, exhaustively.
        for mask in 0u32..1 << n {
            let t = PointSet::from_indices(n, (0..n).filter(|b| mask >> b & 1 == 1));
            let mut rows = vec![PointSet::empty(n); frame.params().len()];
            for &r in &support {
                rows[r] = t.clone();
            }
            let s = SoftSet::from_rows(frame.clone(), rows);
            let soft_reg = space.is_regular_open(&s).unwrap();
            let projected_reg = support
                .iter()
                .all(|&r| projections[r].is_regular_open(&t).unwrap());
            rep.check(soft_reg == projected_reg, || {
                format!("#{i}: regular-open correspondence mismatch on coordinate {}",
                    t.display(frame.universe()))
            });
            let soft_rc = space.is_regular_closed(&s).unwrap();
            let projected_rc = support
                .iter()
                .all(|&r| projections[r].is_regular_closed(&t).unwrap());
            rep.check(soft_rc == projected_rc, || {
                format!("#{i}: regular-closed correspondence mismatch")
            });
        }
    }
    rep
}

/// The regular-open-cover verdict and the near-subcover verdict of the
/// near-compactness decision agree on every finite strong space, and the
/// worst enumerated cover's witness re-validates.
pub fn suite_formulation_equivalence(cfg: &SuiteConfig) -> LawReport {
    let mut rep = LawReport::new("formulation_equivalence");
    let mut rng = rng_for(cfg, 6);
    for i in 0..cfg.instances {
        rep.instances += 1;
        let space = gen::strong_space(&mut rng, gen::Limits::default());
        let report = is_soft_n_mu_compact_finite(&space).unwrap();
        rep.check(report.formulations_agree, || {
            format!("#{i}: formulations disagree")
        });
        rep.check(
            report.soft_n_mu_compact && report.near_formulation && report.finite_trivial,
            || format!("#{i}: finite verdicts not trivially true"),
        );
        if let Some(k) = report.max_plain_minimal_subcover {
            rep.check(
                report.max_near_minimal_subcover == Some(k),
                || format!("#{i}: near metric differs on regular-open covers"),
            );
            let regular = space.regular_opens();
            let mut union = SoftSet::empty(space.frame().clone());
            for &idx in &report.worst_regular_cover {
                union = union.union(&regular[idx]).unwrap();
            }
            rep.check(
                union == *space.carrier() && report.worst_regular_cover.len() == k,
                || format!("#{i}: worst-cover witness fails to re-validate"),
            );
        }
    }
    rep
}

/// Complements of a regular-open cover are regular closed with empty total
/// intersection, and dropping coverage flips the verdict symmetrically.
pub fn suite_fip_duality(cfg: &SuiteConfig) -> LawReport {
    let mut rep = LawReport::new("fip_duality");
    let mut rng = rng_for(cfg, 7);
    for i in 0..cfg.instances {
        rep.instances += 1;
        let space = loop {
            let s = gen::strong_space(&mut rng, gen::Limits::default());
            let nonempty = s.regular_opens().iter().filter(|o| !o.is_empty()).count();
            if nonempty <= 8 {
                break s;
            }
        };
        let regular: Vec<SoftSet> = space
            .regular_opens()
            .into_iter()
            .filter(|o| !o.is_empty())
            .collect();
        for mask in 1u32..1 << regular.len() {
            let members: Vec<&SoftSet> = regular
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, s)| s)
                .collect();
            let mut union = SoftSet::empty(space.frame().clone());
            for m in &members {
                union = union.union(m).unwrap();
            }
            if union != *space.carrier() {
                continue;
            }
            let complements: Vec<SoftSet> = members
                .iter()
                .map(|m| space.carrier().difference(m).unwrap())
                .collect();
            match fip_check(&space, &complements) {
                Ok(fip) => {
                    rep.check(
                        !fip.total_intersection_nonempty && !fip.fip_holds,
                        || format!("#{i}: cover complements do not intersect to empty"),
                    );
                    rep.check(fip.consistent_with_compactness, || {
                        format!("#{i}: FIP consistency flag failed")
                    });
                }
                Err(e) => rep.check(false, || {
                    format!("#{i}: complement family rejected: {e}")
                }),
            }
            // Dropping one member breaks coverage exactly when the reduced
            // complement family regains a non-empty intersection.
            for drop in 0..members.len() {
                let mut union = SoftSet::empty(space.frame().clone());
                for (j, m) in members.iter().enumerate() {
                    if j != drop {
                        union = union.union(m).unwrap();
                    }
                }
                let still_covers = union == *space.carrier();
                let mut total = space.carrier().clone();
                for (j, c) in complements.iter().enumerate() {
                    if j != drop {
                        total = total.intersection(c).unwrap();
                    }
                }
                rep.check(still_covers == total.is_empty(), || {
                    format!("#{i}: duality not symmetric when dropping a member")
                });
            }
        }
    }
    rep
}

/// Ground cover laws: near never exceeds plain, a cover refines itself,
/// witnesses re-validate, local finiteness holds in mu-spaces, and soft
/// covers project to ground covers parameterwise.
pub fn suite_gt_covers(cfg: &SuiteConfig) -> LawReport {
    let mut rep = LawReport::new("gt_covers");
    let mut rng = rng_for(cfg, 8);
    for i in 0..cfg.instances {
        rep.instances += 1;
        let ground = gen::ground_space(&mut rng, 6, 5, true);
        let n = ground.universe().len();
        let members: Vec<PointSet> = ground
            .opens()
            .iter()
            .filter(|_| rng.gen_bool(0.6))
            .cloned()
            .collect();
        let family = SetFamily::new(members.clone());
        let covers = {
            let mut u = PointSet::empty(n);
            for m in &members {
                u = u.union(m);
            }
            u == PointSet::full(n)
        };
        match ground.minimal_subcover(&family) {
            Ok((plain, witness)) => {
                rep.check(covers, || {
                    format!("#{i}: subcover search accepted a non-cover")
                });
                let (near, _) = ground.minimal_near_subcover(&family).unwrap();
                rep.check(near <= plain, || {
                    format!("#{i}: near size {near} exceeds plain {plain}")
                });
                let mut u = PointSet::empty(n);
                for &w in &witness {
                    u = u.union(&members[w]);
                }
                rep.check(u == PointSet::full(n) && witness.len() == plain, || {
                    format!("#{i}: witness fails to re-validate")
                });
                rep.check(ground.is_mu_open_refinement(&family, &family), || {
                    format!("#{i}: cover does not refine itself")
                });
                rep.check(ground.is_mu_locally_finite(&family), || {
                    format!("#{i}: finite family not locally finite in a mu-space")
                });
            }
            Err(_) => {
                rep.check(!covers, || {
                    format!("#{i}: subcover search rejected a valid cover")
                });
            }
        }

        // Parameterwise projection of soft covers (general carriers).
        let space = gen::strong_space(&mut rng, gen::Limits::default());
        let frame = space.frame().clone();
        let members: Vec<SoftSet> = space
            .opens()
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect();
        let mut union = SoftSet::empty(frame.clone());
        for m in &members {
            union = union.union(m).unwrap();
        }
        let soft_covers = union == *space.carrier();
        let projected = (0..frame.params().len()).all(|r| {
            let mut u = PointSet::empty(frame.universe().len());
            for m in &members {
                u = u.union(m.row(r));
            }
            u == *space.carrier().row(r)
        });
        rep.check(soft_covers == projected, || {
            format!("#{i}: soft cover does not project parameterwise")
        });
    }
    rep
}

/// Run every suite under one configuration.
pub fn run_all(cfg: &SuiteConfig) -> Vec<LawReport> {
    vec![
        suite_soft_algebra(cfg),
        suite_operator_laws(cfg),
        suite_regularity_theorems(cfg),
        suite_subspace_trace(cfg),
        suite_a_universal(cfg),
        suite_formulation_equivalence(cfg),
        suite_fip_duality(cfg),
        suite_gt_covers(cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(instances: usize) -> SuiteConfig {
        SuiteConfig {
            seed: DEFAULT_SEED,
            instances,
        }
    }

    #[test]
    fn all_suites_pass_on_a_quick_run() {
        for report in run_all(&quick(40)) {
            assert!(
                report.passed(),
                "{} failed: {:?}",
                report.law,
                report.failures
            );
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn suites_are_deterministic_in_the_seed() {
        let a = suite_regularity_theorems(&quick(25));
        let b = suite_regularity_theorems(&quick(25));
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.instances, b.instances);
    }
}
