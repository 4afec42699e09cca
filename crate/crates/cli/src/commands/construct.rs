use magma_forge_core::construct::{build_regular, regular_pointing};
use magma_forge_core::io::{write_magma, write_pointing};

use crate::args::ConstructArgs;
use crate::error::CliResult;
use crate::specs::{resolve_lambda, GroupSpec};

pub fn run(args: &ConstructArgs) -> CliResult<String> {
    let spec = GroupSpec::parse(&args.group)?;
    let group = spec.build()?;
    let lambda = resolve_lambda(&args.lambda, &spec, &group, args.arity)?;
    if args.emit_pointing {
        Ok(write_pointing(&regular_pointing(&group, args.arity, &lambda)))
    } else {
        Ok(write_magma(&build_regular(&group, args.arity, &lambda)?))
    }
}
