//! `subspace`: build the trace space on a named set and, when the set is
//! open, check that the subspace's regular opens are exactly the traces of
//! the parent's regular opens.

use std::collections::BTreeSet;

use serde_json::json;

use super::{Check, CheckContext};
use crate::report::CheckReport;
use crate::CliError;

pub struct Subspace;

impl Check for Subspace {
    fn name(&self) -> &'static str {
        "subspace"
    }

    fn summary(&self) -> &'static str {
        "trace space on a named set, with the regular-trace comparison"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckReport, CliError> {
        let built = ctx.soft()?;
        let space = &built.space;
        let name = ctx
            .args
            .first()
            .ok_or_else(|| CliError::Input("subspace needs a named set argument".to_string()))?;
        let b = built.lookup(name)?.clone();
        let sub = space.subspace(&b)?;

        let mut rep = CheckReport::new("subspace");
        rep.line(format!("subspace carrier: {name} = {b}"));
        rep.line(format!(
            "opens: {} (parent has {}), strong: {}",
            sub.opens().len(),
            space.opens().len(),
            sub.is_strong()
        ));
        let sub_regular = sub.regular_opens();
        for r in &sub_regular {
            rep.line(format!("subspace regular open: {r}"));
        }

        let b_open = space.is_open(&b)?;
        let mut trace_status = "skipped (set is not open)".to_string();
        if b_open {
            let got: BTreeSet<Vec<u64>> = sub_regular.iter().map(|s| s.cells()).collect();
            let want: BTreeSet<Vec<u64>> = space
                .regular_opens()
                .iter()
                .map(|u| u.intersection(&b).expect("shared frame").cells())
                .collect();
            let ok = got == want;
            rep.assert(
                ok,
                "subspace regular opens are the traces of parent regular opens",
            );
            trace_status = if ok { "holds".to_string() } else { "violated".to_string() };
            if !ok {
                rep.line(
                    "note: the trace identity can fail when the parent opens are not \
                     intersection-closed"
                        .to_string(),
                );
            }
        } else {
            rep.line("trace comparison skipped: the set is not open".to_string());
        }

        rep.payload = json!({
            "set": name,
            "opens": sub.opens().iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            "strong": sub.is_strong(),
            "regular_open": sub_regular.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            "trace_theorem": trace_status,
        });
        Ok(rep)
    }
}
