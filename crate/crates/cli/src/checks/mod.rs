//! The check registry: every analysis the workbench can run sits behind
//! [`Check`], registered by name and selected on the command line.

use crate::document::{BuiltGround, BuiltSoft, BuiltSpace};
use crate::report::CheckReport;
use crate::CliError;

mod compactness;
mod fip;
mod lawsuite;
mod project;
mod regular;
mod subspace;
mod witness;

pub struct CheckContext<'a> {
    pub built: Option<&'a BuiltSpace>,
    pub args: &'a [String],
    pub seed: u64,
    pub n_max: Option<u32>,
    pub family_params: Option<u32>,
    pub cases: Option<usize>,
}

impl<'a> CheckContext<'a> {
    pub fn soft(&self) -> Result<&'a BuiltSoft, CliError> {
        match self.built {
            Some(BuiltSpace::Soft(s)) => Ok(s),
            Some(BuiltSpace::Ground(_)) => Err(CliError::Input(
                "this check needs a soft document".to_string(),
            )),
            None => Err(CliError::Input("this check needs a document".to_string())),
        }
    }

    pub fn ground(&self) -> Result<&'a BuiltGround, CliError> {
        match self.built {
            Some(BuiltSpace::Ground(g)) => Ok(g),
            _ => Err(CliError::Input(
                "this check needs a ground document".to_string(),
            )),
        }
    }
}

pub trait Check {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn needs_document(&self) -> bool {
        true
    }
    fn run(&self, ctx: &CheckContext) -> Result<CheckReport, CliError>;
}

/// All built-in checks, in presentation order.
pub fn registry() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(regular::Regular),
        Box::new(compactness::Compactness),
        Box::new(fip::Fip),
        Box::new(subspace::Subspace),
        Box::new(project::Project),
        Box::new(witness::Witness),
        Box::new(lawsuite::LawSuite),
    ]
}

pub fn find(name: &str) -> Result<Box<dyn Check>, CliError> {
    registry()
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| {
            let known: Vec<&str> = registry().iter().map(|c| c.name()).collect();
            CliError::Input(format!(
                "unknown check '{name}'; available: {}",
                known.join(", ")
            ))
        })
}
