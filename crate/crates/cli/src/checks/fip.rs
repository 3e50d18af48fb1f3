//! `fip`: finite-intersection-property verdict for a family of named
//! regular-closed sets.

use serde_json::json;

use softgt_core::fip_check;

use super::{Check, CheckContext};
use crate::report::CheckReport;
use crate::CliError;

pub struct Fip;

impl Check for Fip {
    fn name(&self) -> &'static str {
        "fip"
    }

    fn summary(&self) -> &'static str {
        "finite intersection property over named regular-closed sets"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckReport, CliError> {
        let built = ctx.soft()?;
        let space = &built.space;
        let mut members = Vec::new();
        for name in ctx.args {
            let s = built.lookup(name)?.clone();
            if !space.is_regular_closed(&s)? {
                return Err(CliError::Input(format!(
                    "family member '{name}' is not regular closed"
                )));
            }
            members.push(s);
        }
        let fip = fip_check(space, &members)?;
        let mut rep = CheckReport::new("fip");
        rep.line(format!("family size: {}", fip.family_size));
        rep.line(format!("finite intersection property: {}", fip.fip_holds));
        rep.line(format!(
            "total intersection: {} (nonempty: {})",
            fip.total_intersection, fip.total_intersection_nonempty
        ));
        rep.assert(
            fip.consistent_with_compactness,
            "FIP forces a nonempty intersection on this near-compact space",
        );
        rep.payload = json!({ "fip": fip, "members": ctx.args });
        Ok(rep)
    }
}
