//! `project`: per-parameter classical generalized topologies read off a
//! soft space.

use serde_json::json;

use super::{Check, CheckContext};
use crate::report::CheckReport;
use crate::CliError;

pub struct Project;

impl Check for Project {
    fn name(&self) -> &'static str {
        "project"
    }

    fn summary(&self) -> &'static str {
        "per-parameter projections to classical generalized topologies"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckReport, CliError> {
        let built = ctx.soft()?;
        let space = &built.space;
        let params: Vec<String> = if ctx.args.is_empty() {
            space.frame().params().params().to_vec()
        } else {
            ctx.args.to_vec()
        };

        let mut rep = CheckReport::new("project");
        let mut out = Vec::new();
        for param in &params {
            let proj = space.project(param)?;
            let uni = proj.universe();
            let sets: Vec<String> = proj.opens().iter().map(|s| s.display(uni)).collect();
            rep.line(format!(
                "mu_{param} = {{{}}}, mu-space: {}",
                sets.join(", "),
                proj.is_mu_space()
            ));
            // Projections of union-closed families stay union-closed; verify
            // outright at desk scale.
            if proj.opens().len() <= 256 {
                let opens = proj.opens();
                let mut closed = true;
                'scan: for i in 0..opens.len() {
                    for j in i + 1..opens.len() {
                        if opens.binary_search(&opens[i].union(&opens[j])).is_err() {
                            closed = false;
                            break 'scan;
                        }
                    }
                }
                rep.assert(closed, &format!("mu_{param} is union closed"));
            }
            out.push(json!({
                "parameter": param,
                "sets": sets,
                "mu_space": proj.is_mu_space(),
            }));
        }
        rep.payload = json!({ "projections": out });
        Ok(rep)
    }
}
