//! `regular`: enumerate regular-open sets, flag opens that fail
//! regularity, and tabulate interior/closure of every named set.

use serde_json::json;

use super::{Check, CheckContext};
use crate::document::BuiltSpace;
use crate::report::CheckReport;
use crate::CliError;

pub struct Regular;

impl Check for Regular {
    fn name(&self) -> &'static str {
        "regular"
    }

    fn summary(&self) -> &'static str {
        "regular-open sets, non-regular opens, interior/closure of named sets"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckReport, CliError> {
        let mut rep = CheckReport::new("regular");
        match ctx.built {
            Some(BuiltSpace::Soft(built)) => {
                let space = &built.space;
                let regular = space.regular_opens();
                let mut regular_out = Vec::new();
                for r in &regular {
                    rep.line(format!("regular open: {}", built.describe(r)));
                    regular_out.push(built.describe(r));
                }
                let mut non_regular = Vec::new();
                for o in space.opens() {
                    if !space.is_regular_open(o)? {
                        rep.line(format!("open but not regular open: {}", built.describe(o)));
                        non_regular.push(built.describe(o));
                    }
                }
                let mut operators = serde_json::Map::new();
                for (name, s) in &built.named {
                    if !s.is_subset_of(space.carrier())? {
                        rep.line(format!("{name}: not within the carrier, skipped"));
                        continue;
                    }
                    let int = space.interior(s)?;
                    let cl = space.closure(s)?;
                    rep.line(format!(
                        "{name}: interior = {}, closure = {}",
                        built.describe(&int),
                        built.describe(&cl)
                    ));
                    operators.insert(
                        name.clone(),
                        json!({
                            "interior": built.describe(&int),
                            "closure": built.describe(&cl),
                        }),
                    );
                }
                rep.payload = json!({
                    "regular_open": regular_out,
                    "open_not_regular_open": non_regular,
                    "operators": operators,
                    "strong": space.is_strong(),
                    "open_count": space.opens().len(),
                });
            }
            Some(BuiltSpace::Ground(built)) => {
                let space = &built.space;
                let uni = space.universe();
                let regular: Vec<String> = space
                    .regular_opens()
                    .iter()
                    .map(|s| s.display(uni))
                    .collect();
                for r in &regular {
                    rep.line(format!("regular open: {r}"));
                }
                let mut non_regular = Vec::new();
                for o in space.opens() {
                    if !space.is_regular_open(o)? {
                        let d = o.display(uni);
                        rep.line(format!("open but not regular open: {d}"));
                        non_regular.push(d);
                    }
                }
                rep.payload = json!({
                    "regular_open": regular,
                    "open_not_regular_open": non_regular,
                    "mu_space": space.is_mu_space(),
                    "quasi_topology": space.is_quasi_topology(),
                    "open_count": space.opens().len(),
                });
            }
            None => return Err(CliError::Input("regular needs a document".to_string())),
        }
        Ok(rep)
    }
}
