use clap::{Args, Parser, Subcommand, ValueEnum};
use endograph::graph::{auto_digraph_from, compress_from, endo_digraph_from};
use endograph::group::{build_group, GroupSpec};
use endograph::hom::{automorphism_orbits_with, endo_reachability_with, EnumLimits};
use endograph::power::power_digraph;
use endograph_cli::catalog::catalog;
use endograph_cli::checks::{run_all, run_check, CheckConfig, CheckResult, CheckStatus};
use endograph_cli::export;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "endograph",
    about = "Finite groups, their endomorphism monoids, and the graphs defined on them",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and print structural information
    Group(GroupArgs),
    /// Emit an endomorphism/automorphism/power digraph as DOT or JSON
    Digraph(DigraphArgs),
    /// Run the verification suite
    Verify(VerifyArgs),
    /// List the groups the verification suite runs over
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// Group spec, e.g. cyclic:12, abelian:2,4, dihedral:6, product:(A)x(B)
    #[arg(long)]
    spec: String,
    /// Print order, abelianness, center, and element-order histogram
    #[arg(long)]
    info: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    Endo,
    Auto,
    Power,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Args)]
struct DigraphArgs {
    #[arg(long)]
    spec: String,
    #[arg(long, value_enum, default_value = "endo")]
    kind: Kind,
    /// Delete the identity and contract automorphism classes (endo only)
    #[arg(long)]
    compressed: bool,
    /// Delete the identity vertex
    #[arg(long)]
    identity_deleted: bool,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    /// Output path; stdout when absent
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every check (the default when --check is absent)
    #[arg(long)]
    all: bool,
    /// Run a single check, e.g. T3
    #[arg(long)]
    check: Option<String>,
    /// Catalog order cutoff (defaults to ENDOGRAPH_MAX_ORDER or 64)
    #[arg(long)]
    max_order: Option<usize>,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long, default_value_t = 64)]
    max_order: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Group(args) => group_command(args),
        Command::Digraph(args) => digraph_command(args),
        Command::Verify(args) => verify_command(args),
        Command::Catalog(args) => catalog_command(args),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_spec(text: &str) -> Result<GroupSpec, ExitCode> {
    text.parse::<GroupSpec>()
        .map_err(|e| usage_error(&e.to_string()))
}

fn group_command(args: GroupArgs) -> ExitCode {
    let spec = match parse_spec(&args.spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let g = match build_group(&spec) {
        Ok(g) => g,
        Err(e) => return usage_error(&e.to_string()),
    };
    println!("group {}", g.label());
    println!("order {}", g.order());
    if args.info {
        println!("abelian {}", g.is_abelian());
        println!("generators {:?}", g.generators());
        println!("center_size {}", g.center().len());
        let mut histogram: Vec<(usize, usize)> = Vec::new();
        for x in 0..g.order() {
            let o = g.element_order(x);
            match histogram.iter_mut().find(|(ord, _)| *ord == o) {
                Some((_, count)) => *count += 1,
                None => histogram.push((o, 1)),
            }
        }
        histogram.sort_unstable();
        for (order, count) in histogram {
            println!("elements_of_order {order} {count}");
        }
    }
    ExitCode::SUCCESS
}

fn digraph_command(args: DigraphArgs) -> ExitCode {
    let spec = match parse_spec(&args.spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if args.compressed && args.kind != Kind::Endo {
        return usage_error("--compressed applies to --kind endo only");
    }
    if args.compressed && args.identity_deleted {
        return usage_error("--compressed already deletes the identity");
    }
    let g = match build_group(&spec) {
        Ok(g) => g,
        Err(e) => return usage_error(&e.to_string()),
    };
    let limits = EnumLimits::generous();
    let name_suffix = match args.kind {
        Kind::Endo => "endo",
        Kind::Auto => "auto",
        Kind::Power => "power",
    };
    let (text, _) = if args.compressed {
        let rel = match endo_reachability_with(&g, &limits) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        };
        let orbits = match automorphism_orbits_with(&g, &limits) {
            Ok(o) => o,
            Err(e) => return usage_error(&e.to_string()),
        };
        let c = match compress_from(&rel, &orbits) {
            Ok(c) => c,
            Err(e) => return usage_error(&e.to_string()),
        };
        let name = format!("EG-({})", g.label());
        let text = match args.format {
            Format::Dot => export::condensed_dot(&name, &c),
            Format::Json => export::GraphDoc::from_condensed(g.label(), &c).to_json(),
        };
        (text, name)
    } else {
        let d = match args.kind {
            Kind::Endo => match endo_reachability_with(&g, &limits) {
                Ok(rel) => endo_digraph_from(&rel),
                Err(e) => return usage_error(&e.to_string()),
            },
            Kind::Auto => match automorphism_orbits_with(&g, &limits) {
                Ok(orbits) => auto_digraph_from(&orbits),
                Err(e) => return usage_error(&e.to_string()),
            },
            Kind::Power => power_digraph(&g),
        };
        let d = if args.identity_deleted {
            d.delete_identity()
        } else {
            d
        };
        let name = format!("{}({})", name_suffix, g.label());
        let text = match args.format {
            Format::Dot => export::digraph_dot(&name, &d),
            Format::Json => export::GraphDoc::from_digraph(g.label(), name_suffix, &d).to_json(),
        };
        (text, name)
    };
    match args.out {
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Some(path) => {
            match std::fs::File::create(&path).and_then(|mut f| f.write_all(text.as_bytes())) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => usage_error(&format!("cannot write {}: {e}", path.display())),
            }
        }
    }
}

fn effective_max_order(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("ENDOGRAPH_MAX_ORDER")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(64)
}

fn print_result(r: &CheckResult) {
    println!(
        "{:<4} {:<7} ({:.3}s) {}",
        r.id,
        r.status.to_string(),
        r.duration.as_secs_f64(),
        r.detail
    );
}

fn verify_command(args: VerifyArgs) -> ExitCode {
    let config = CheckConfig {
        max_order: effective_max_order(args.max_order),
    };
    let results = match (&args.check, args.all) {
        (Some(_), true) => return usage_error("--all and --check are mutually exclusive"),
        (Some(id), false) => match run_check(id, &config) {
            Ok(r) => vec![r],
            Err(e) => return usage_error(&e.to_string()),
        },
        (None, _) => run_all(&config),
    };
    let mut failed = 0;
    let mut skipped = 0;
    for r in &results {
        print_result(r);
        match r.status {
            CheckStatus::Fail => failed += 1,
            CheckStatus::Skipped => skipped += 1,
            CheckStatus::Pass => {}
        }
    }
    println!(
        "{} checks: {} passed, {failed} failed, {skipped} skipped",
        results.len(),
        results.len() - failed - skipped
    );
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn catalog_command(args: CatalogArgs) -> ExitCode {
    for entry in catalog(args.max_order) {
        let mut flags = Vec::new();
        if entry.abelian {
            flags.push("abelian".to_string());
        }
        if let Some(p) = entry.p_group {
            flags.push(format!("{p}-group"));
        }
        if !entry.enumerable {
            flags.push("no-enumeration".to_string());
        }
        println!("{}\t{}\t{}", entry.spec, entry.order, flags.join(","));
    }
    ExitCode::SUCCESS
}
