//! `lawsuite`: run the seeded random-instance law suites.

use serde_json::json;

use softgt_core::laws::{run_all, SuiteConfig};

use super::{Check, CheckContext};
use crate::report::CheckReport;
use crate::CliError;

const DEFAULT_CASES: usize = 200;

pub struct LawSuite;

impl Check for LawSuite {
    fn name(&self) -> &'static str {
        "lawsuite"
    }

    fn summary(&self) -> &'static str {
        "property suites over seeded random instances"
    }

    fn needs_document(&self) -> bool {
        false
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckReport, CliError> {
        let cfg = SuiteConfig {
            seed: ctx.seed,
            instances: ctx.cases.unwrap_or(DEFAULT_CASES),
        };
        let mut rep = CheckReport::new("lawsuite");
        rep.line(format!(
            "seed: {}, instances per suite: {}",
            cfg.seed, cfg.instances
        ));
        let reports = run_all(&cfg);
        for suite in &reports {
            rep.assert(
                suite.passed(),
                &format!(
                    "{}: {} instances, {} checks, {} failures",
                    suite.law, suite.instances, suite.checks, suite.failure_count
                ),
            );
            for msg in &suite.failures {
                rep.line(format!("  counterexample: {msg}"));
            }
        }
        rep.payload = json!({
            "seed": cfg.seed,
            "instances": cfg.instances,
            "suites": reports,
        });
        Ok(rep)
    }
}
