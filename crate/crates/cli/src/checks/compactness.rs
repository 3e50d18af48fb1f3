//! `compactness`: the finite near-compactness decision plus exact
//! plain/near minimal subcover metrics for every named cover.

use serde_json::json;

use softgt_core::{is_soft_n_mu_compact_finite, validate_cover, SetFamily, SoftSet};

use super::{Check, CheckContext};
use crate::document::BuiltSpace;
use crate::report::CheckReport;
use crate::CliError;

pub struct Compactness;

impl Check for Compactness {
    fn name(&self) -> &'static str {
        "compactness"
    }

    fn summary(&self) -> &'static str {
        "near-compactness decision and minimal subcover metrics per cover"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckReport, CliError> {
        let mut rep = CheckReport::new("compactness");
        let only: Option<&String> = ctx.args.first();
        match ctx.built {
            Some(BuiltSpace::Soft(built)) => {
                let space = &built.space;
                let decision = is_soft_n_mu_compact_finite(space)?;
                rep.line(format!(
                    "soft n-mu-compact: {} (finite scale, trivially so)",
                    decision.soft_n_mu_compact
                ));
                rep.line(format!(
                    "regular-open family size: {}",
                    decision.regular_open_count
                ));
                match decision.max_plain_minimal_subcover {
                    Some(k) => rep.line(format!(
                        "worst regular-open cover needs {k} member(s)"
                    )),
                    None => rep.line(
                        "regular-open family too large to enumerate covers".to_string(),
                    ),
                }
                rep.assert(decision.formulations_agree, "both formulations agree");

                let mut covers_out = Vec::new();
                for (name, members) in &built.covers {
                    if only.is_some_and(|o| o != name) {
                        continue;
                    }
                    let sets: Vec<SoftSet> = members
                        .iter()
                        .map(|m| built.lookup(m).cloned())
                        .collect::<Result<_, _>>()?;
                    let cover = validate_cover(space, sets)?;
                    let cr = cover.report()?;
                    rep.line(format!(
                        "cover {name}: plain minimal subcover {}, near {}, regular-open cover: {}",
                        cr.plain_minimal_subcover_size,
                        cr.near_minimal_subcover_size,
                        cr.regular_open_cover
                    ));
                    rep.assert(
                        cr.near_minimal_subcover_size <= cr.plain_minimal_subcover_size,
                        &format!("cover {name}: near size bounded by plain size"),
                    );
                    let mut union = SoftSet::empty(space.frame().clone());
                    for &w in &cr.plain_witness {
                        union = union.union(&cover.members()[w])?;
                    }
                    rep.assert(
                        union == *space.carrier(),
                        &format!("cover {name}: plain witness re-validates"),
                    );
                    covers_out.push(json!({ "name": name, "report": cr }));
                }
                if let Some(name) = only {
                    if !built.covers.iter().any(|(n, _)| n == name) {
                        return Err(CliError::Input(format!(
                            "no cover named '{name}' in the document"
                        )));
                    }
                }
                rep.payload = json!({
                    "decision": decision,
                    "covers": covers_out,
                });
            }
            Some(BuiltSpace::Ground(built)) => {
                let space = &built.space;
                rep.line(format!("mu-space: {}", space.is_mu_space()));
                rep.line(format!("quasi-topology: {}", space.is_quasi_topology()));
                let mut covers_out = Vec::new();
                for (name, members) in &built.covers {
                    if only.is_some_and(|o| o != name) {
                        continue;
                    }
                    let sets = members
                        .iter()
                        .map(|m| built.lookup(m).cloned())
                        .collect::<Result<Vec<_>, _>>()?;
                    let family = SetFamily::new(sets);
                    let (plain, plain_witness) = space.minimal_subcover(&family)?;
                    let (near, _) = space.minimal_near_subcover(&family)?;
                    let regular = family
                        .members()
                        .iter()
                        .map(|m| space.is_regular_open(m))
                        .collect::<Result<Vec<_>, _>>()?
                        .into_iter()
                        .all(|b| b);
                    rep.line(format!(
                        "cover {name}: plain minimal subcover {plain}, near {near}, regular-open cover: {regular}"
                    ));
                    rep.assert(near <= plain, &format!("cover {name}: near bounded by plain"));
                    covers_out.push(json!({
                        "name": name,
                        "plain": plain,
                        "plain_witness": plain_witness,
                        "near": near,
                        "regular_open_cover": regular,
                    }));
                }
                rep.payload = json!({ "covers": covers_out });
            }
            None => return Err(CliError::Input("compactness needs a document".to_string())),
        }
        Ok(rep)
    }
}
