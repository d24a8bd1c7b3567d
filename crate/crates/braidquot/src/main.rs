//! Command-line surface: scan order ranges, search single groups, verify
//! and construct structure files, count orbits, and evaluate invariants.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use braidquot::braid::check_structure;
use braidquot::db::{load_group_db, resolve_db_path, GroupDb};
use braidquot::families::{self, FamilyVariant, FormSpec};
use braidquot::invariants::{self, display_mixed};
use braidquot::io::{
    read_structure_file, write_scan_report, write_structure_file, FamilyMeta, StructureFile,
};
use braidquot::search::{
    orbit_count, scan, search, SearchConfig, SearchMode, StructureList, ZFilter,
};
use braidquot::{Error, GroupLabel, Result};

#[derive(Parser)]
#[command(
    name = "braidquot",
    about = "Diagonal double Kodaira structures on finite groups",
    disable_help_subcommand = true
)]
struct Cli {
    /// Group database path (defaults to $BRAIDQUOT_DB)
    #[arg(long, global = true)]
    db: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify and search every catalogue group in an order range
    Scan {
        /// Inclusive order range, e.g. 1..31
        #[arg(long)]
        orders: String,
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Count structures exactly instead of stopping at the first
        #[arg(long)]
        count: bool,
        /// Write the machine-readable report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search one group for structures
    Search {
        /// Group label, e.g. 32,49 or 32/49
        #[arg(long)]
        group: String,
        #[arg(long)]
        genus: usize,
        /// Restrict to structures with o(z) = N
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_parser = ["exists", "count", "enumerate"])]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Existence-only symmetry reduction over z inversion
        #[arg(long)]
        symmetry: bool,
    },
    /// Re-verify every structure in a file
    Verify {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Construct a witness structure in an extra-special family
    Construct {
        #[arg(long)]
        theorem: u8,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        prime: u32,
        #[arg(long)]
        variant: String,
        /// Scalars for the 4b x 4b form (theorem 1), comma separated
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count Aut-orbits of the structures in a file
    Orbits {
        #[arg(long)]
        group: String,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        aut_cap: Option<usize>,
    },
    /// Evaluate the fibration invariants for given covering data
    Invariants {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        order: u128,
        #[arg(long)]
        m1: u128,
        #[arg(long)]
        m2: u128,
    },
    /// Slope and signature table for the genus-2 family
    SlopeTable {
        /// Prime range, e.g. 5..97
        #[arg(long)]
        primes: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::InvalidInput(format!("bad range `{s}`, expected A..B")))?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad range `{s}`")))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad range `{s}`")))?;
    if lo > hi {
        return Err(Error::InvalidInput(format!("empty range `{s}`")));
    }
    Ok((lo, hi))
}

fn open_db(flag: Option<&PathBuf>) -> Result<GroupDb> {
    let path = resolve_db_path(flag.map(|p| p.as_path()))?;
    load_group_db(path)
}

fn write_out(path: &Option<PathBuf>, render: impl Fn(&mut dyn std::io::Write) -> Result<()>) -> Result<()> {
    match path {
        Some(p) => {
            let mut f = std::io::BufWriter::new(std::fs::File::create(p)?);
            render(&mut f)?;
            std::io::Write::flush(&mut f)?;
            Ok(())
        }
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Scan {
            orders,
            genus,
            jobs,
            count,
            out,
        } => {
            let (lo, hi) = parse_range(&orders)?;
            let db = open_db(cli.db.as_ref())?;
            let report = scan(&db, lo, hi, genus, count, jobs)?;
            let mut found = 0usize;
            for row in &report.rows {
                if row.found_structures() {
                    found += 1;
                    println!("{}: structures found", row.label);
                }
            }
            let searched = report
                .rows
                .iter()
                .filter(|r| r.outcome != braidquot::search::ScanSearchOutcome::NotSearched)
                .count();
            println!(
                "scanned orders {lo}..{hi} at genus {genus}: {} groups, {searched} searched, {found} with structures",
                report.rows.len()
            );
            write_out(&out, |w| write_scan_report(w, &report))?;
            Ok(())
        }
        Cmd::Search {
            group,
            genus,
            n,
            mode,
            out,
            jobs,
            symmetry,
        } => {
            let label = GroupLabel::from_str(&group)?;
            let db = open_db(cli.db.as_ref())?;
            let g = db
                .get(label)
                .ok_or_else(|| Error::IncompleteDatabase(format!("no group {label}")))?;
            let mode = match mode.as_str() {
                "exists" => SearchMode::Exists,
                "count" => SearchMode::Count,
                _ => SearchMode::Enumerate,
            };
            let mut cfg = SearchConfig::new(
                genus,
                n.map_or(ZFilter::AnyOrder, ZFilter::Exact),
                mode,
            );
            cfg.jobs = jobs;
            cfg.symmetry_reduction = symmetry;
            let outcome = search(g, &cfg)?;
            match mode {
                SearchMode::Count => println!("{}", outcome.count),
                SearchMode::Exists => println!(
                    "{}",
                    if outcome.count > 0 { "structures exist" } else { "no structures" }
                ),
                SearchMode::Enumerate => {
                    println!("{} structures", outcome.exemplars.len())
                }
            }
            write_out(&out, |w| {
                braidquot::io::write_structure_header(w, None)?;
                for i in 0..outcome.exemplars.len() {
                    braidquot::io::write_structure_record(w, &outcome.exemplars.to_structure(i, g))?;
                }
                Ok(())
            })?;
            Ok(())
        }
        Cmd::Verify { input } => {
            let file = read_structure_file(&input)?;
            let family_group = match &file.family {
                Some(meta) => Some(meta.build_group()?),
                None => None,
            };
            let db = if file.records.iter().any(|r| r.label.is_some()) {
                Some(open_db(cli.db.as_ref())?)
            } else {
                None
            };
            let mut all_ok = true;
            for (i, s) in file.records.iter().enumerate() {
                let g = match s.label {
                    Some(label) => db
                        .as_ref()
                        .and_then(|d| d.get(label))
                        .ok_or_else(|| Error::IncompleteDatabase(format!("no group {label}")))?,
                    None => family_group.as_ref().ok_or_else(|| {
                        Error::InvalidInput("family record without family header".into())
                    })?,
                };
                let v = check_structure(g, s).map_err(|e| Error::Verification(e.to_string()))?;
                let status = if v.is_structure { "valid" } else { "INVALID" };
                let strong = if v.is_structure {
                    if v.is_strong { ", strong" } else { ", non-strong" }
                } else {
                    ""
                };
                println!(
                    "structure {i}: {status}{strong} (m1={}, m2={}, o(z)={})",
                    v.m1, v.m2, v.z_order
                );
                all_ok &= v.is_structure;
            }
            if !all_ok {
                return Err(Error::Verification("some structures failed verification".into()));
            }
            println!("{} structures valid", file.records.len());
            Ok(())
        }
        Cmd::Construct {
            theorem,
            genus,
            prime,
            variant,
            lambda,
            mu,
            out,
        } => {
            let variant = FamilyVariant::from_str(&variant)?;
            let parse_scalars = |s: &Option<String>| -> Result<Option<Vec<u32>>> {
                match s {
                    None => Ok(None),
                    Some(t) => Ok(Some(
                        t.split(',')
                            .map(|v| {
                                v.trim().parse::<u32>().map_err(|_| {
                                    Error::InvalidInput(format!("bad scalar `{v}`"))
                                })
                            })
                            .collect::<Result<_>>()?,
                    )),
                }
            };
            let lambda = parse_scalars(&lambda)?;
            let mu = parse_scalars(&mu)?;
            let (group, structure, meta) = match theorem {
                1 => {
                    let spec = match (&lambda, &mu) {
                        (Some(l), Some(m)) => Some(FormSpec {
                            b: genus,
                            p: prime,
                            lambda: l.clone(),
                            mu: m.clone(),
                        }),
                        (None, None) => None,
                        _ => {
                            return Err(Error::InvalidInput(
                                "lambda and mu must be given together".into(),
                            ))
                        }
                    };
                    let (g, s) = families::theorem1_structure(genus, prime, variant, spec.clone())?;
                    let used = spec.unwrap_or(FormSpec::default_for(genus, prime)?);
                    (
                        g,
                        s,
                        FamilyMeta {
                            theorem: 1,
                            variant,
                            p: prime,
                            b: genus,
                            lambda: Some(used.lambda),
                            mu: Some(used.mu),
                        },
                    )
                }
                2 => {
                    let (g, s) = families::theorem2_structure(genus, prime, variant)?;
                    (
                        g,
                        s,
                        FamilyMeta {
                            theorem: 2,
                            variant,
                            p: prime,
                            b: genus,
                            lambda: None,
                            mu: None,
                        },
                    )
                }
                t => return Err(Error::InvalidInput(format!("unknown theorem {t}"))),
            };
            let v = check_structure(&group, &structure)?;
            println!(
                "constructed structure on {} (order {}): type ({}, {}), m1={}, m2={}, {}",
                group.name(),
                group.order(),
                genus,
                prime,
                v.m1,
                v.m2,
                if v.is_strong { "strong" } else { "non-strong" }
            );
            write_out(&out, |w| {
                write_structure_file(
                    w,
                    &StructureFile {
                        family: Some(meta.clone()),
                        records: vec![structure.clone()],
                    },
                )
            })?;
            Ok(())
        }
        Cmd::Orbits {
            group,
            input,
            aut_cap,
        } => {
            let label = GroupLabel::from_str(&group)?;
            let db = open_db(cli.db.as_ref())?;
            let g = db
                .get(label)
                .ok_or_else(|| Error::IncompleteDatabase(format!("no group {label}")))?;
            let file = read_structure_file(&input)?;
            if file.records.is_empty() {
                return Err(Error::InvalidInput("no structures in file".into()));
            }
            let b = file.records[0].b;
            let mut list = StructureList::new(b);
            for s in &file.records {
                if s.label != Some(label) {
                    return Err(Error::InvalidInput(format!(
                        "structure is not on group {label}"
                    )));
                }
                if s.b != b {
                    return Err(Error::InvalidInput("mixed genera in structure file".into()));
                }
                if s.tuple.iter().any(|&x| x >= g.order()) {
                    return Err(Error::InvalidInput("element id out of range".into()));
                }
                if g.element_order(s.tuple[4 * b]) != s.n {
                    return Err(Error::InvalidInput(format!(
                        "record declares n = {} but o(z) differs",
                        s.n
                    )));
                }
                let tuple: Vec<u32> = s.tuple.iter().map(|&x| x as u32).collect();
                list.push(&tuple);
            }
            let report = orbit_count(g, &list, aut_cap)?;
            println!(
                "{} structures, |Aut| = {}, {} orbits (sizes {}..{})",
                list.len(),
                report.aut_order,
                report.orbits,
                report.min_orbit_size,
                report.max_orbit_size
            );
            Ok(())
        }
        Cmd::Invariants {
            genus,
            n,
            order,
            m1,
            m2,
        } => {
            let inv = invariants::covering_data(genus, n, order, m1, m2)?;
            println!("b1 = {}, b2 = {}", inv.b1, inv.b2);
            println!("g1 = {}, g2 = {}", display_mixed(&inv.g1), display_mixed(&inv.g2));
            println!("c1^2 = {}", display_mixed(&inv.c1_sq));
            println!("c2 = {}", display_mixed(&inv.c2));
            println!("nu = {}", display_mixed(&inv.nu));
            println!("sigma = {}", display_mixed(&inv.sigma));
            Ok(())
        }
        Cmd::SlopeTable { primes, out } => {
            let (lo, hi) = parse_range(&primes)?;
            let list: Vec<u64> = (lo as u64..=hi as u64)
                .filter(|&p| braidquot::zmod::is_prime(p))
                .collect();
            let report = invariants::slope_series(&list)?;
            println!("{:>6}  {:<16} signature", "p", "slope");
            for (p, nu, sigma) in &report.points {
                println!("{p:>6}  {:<16} {}", display_mixed(nu), display_mixed(sigma));
            }
            println!(
                "maximum at 5 and 7: {}; strictly decreasing from 7: {}; all above 2 + 1/3: {}; all in diagonal range: {}",
                report.max_attained_at_5_and_7,
                report.strictly_decreasing_from_7,
                report.all_above_2_plus_1_3,
                report.all_in_diagonal_range
            );
            write_out(&out, |w| {
                writeln!(w, "slopetable 1")?;
                for (p, nu, sigma) in &report.points {
                    writeln!(w, "p={p} nu={nu} sigma={sigma}")?;
                }
                Ok(())
            })?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own message; exit 1 for usage problems
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
