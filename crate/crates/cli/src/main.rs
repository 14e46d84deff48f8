use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ffdyn::algebra::{enumerate_monic_irreducibles, PrimeField};
use ffdyn::dynamics::{parse_map, HomogMap};
use ffdyn::funcfield::{eta_bound, Place, RatFunc, Valuation};
use ffdyn::geometry::{log_distance, ProjPoint};
use ffdyn::harness::{
    emit_report, run_bound_campaign, run_property_campaign, write_report, CampaignConfig, CampaignReport, Checker,
    ReportFormat,
};
use ffdyn::orbits::{default_max_height, default_max_steps, find_periodic_points_capped, iterate_orbit};

/// Exact arithmetic dynamics on P¹ over F_p(t).
///
/// Maps are given either as JSON documents `{"p":..,"d":..,"F":[..],"G":[..]}`
/// (inline or as a file path) or in the affine shorthand such as
/// `(x^2+t)/x`, which needs `-p`.
#[derive(Parser)]
#[command(name = "ffdyn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the finite places (monic irreducibles) of a given degree.
    Places {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        d: usize,
        /// Include every degree from 1 to d.
        #[arg(long)]
        up_to: bool,
    },
    /// Valuation of a rational function at a place (`inf` for ∞).
    Val {
        ratfunc: String,
        place: String,
        #[arg(short)]
        p: u64,
    },
    /// Logarithmic distance between two points at a place.
    Dist {
        a: String,
        b: String,
        place: String,
        #[arg(short)]
        p: u64,
    },
    /// Resultant of the normalized model of a map.
    Resultant(MapArg),
    /// Places of bad reduction of a map.
    Badplaces(MapArg),
    /// Reduction of a map modulo a finite place.
    Reduce {
        #[command(flatten)]
        map: MapArg,
        place: String,
    },
    /// Forward orbit of a point.
    Orbit {
        #[command(flatten)]
        map: MapArg,
        point: String,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long)]
        max_height: Option<usize>,
    },
    /// Periodic points of height at most B.
    Periodic {
        #[command(flatten)]
        map: MapArg,
        #[arg(long)]
        height: usize,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long)]
        max_height: Option<usize>,
    },
    /// Campaign comparing periods and orbit sizes with the thresholds.
    VerifyBounds(CampaignArgs),
    /// Campaign running the distance and period checkers.
    VerifyProps {
        #[command(flatten)]
        campaign: CampaignArgs,
        /// Random instances per distance checker.
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        /// Comma-separated subset of ultrametric,contraction,cycle_shift,period_decomposition,tail_distances,equal_distances.
        #[arg(long, value_delimiter = ',')]
        checkers: Option<Vec<String>>,
        /// Largest place degree for the period decomposition.
        #[arg(long, default_value_t = 3)]
        mst_degree: usize,
        /// Largest place degree for the distance checkers.
        #[arg(long, default_value_t = 2)]
        distance_degree: usize,
    },
    /// The effective bound η(p, D, |S|); p = 0 gives the characteristic-0 value.
    Eta {
        #[arg(short)]
        p: u64,
        #[arg(short = 'D', default_value_t = 1)]
        d: u32,
        #[arg(short, default_value_t = 1)]
        s: u32,
    },
}

#[derive(Args)]
struct MapArg {
    /// JSON document, path to one, or affine shorthand.
    map: String,
    #[arg(short)]
    p: Option<u64>,
}

#[derive(Args)]
struct CampaignArgs {
    #[arg(short)]
    p: u64,
    /// Monic maps; conjugates and rejection samples are added on top.
    #[arg(long, default_value_t = 500)]
    maps: usize,
    #[arg(long, default_value_t = 3)]
    height: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// json or csv; defaults from the output extension.
    #[arg(long)]
    format: Option<String>,
    /// Run on one thread.
    #[arg(long)]
    serial: bool,
    #[arg(long)]
    max_steps: Option<usize>,
    #[arg(long)]
    max_height: Option<usize>,
    /// Override the period threshold.
    #[arg(long)]
    period_threshold: Option<u64>,
    /// Override the orbit-size threshold.
    #[arg(long)]
    orbit_threshold: Option<u64>,
}

impl CampaignArgs {
    fn config(&self) -> ffdyn::Result<CampaignConfig> {
        let mut cfg = CampaignConfig::standard(self.p, self.maps, self.height, self.seed)?;
        cfg.parallel = !self.serial;
        if let Some(s) = self.max_steps {
            cfg.max_steps = s;
        }
        if let Some(h) = self.max_height {
            cfg.max_height = h;
        }
        if let Some(t) = self.period_threshold {
            cfg.period_threshold = t;
        }
        if let Some(t) = self.orbit_threshold {
            cfg.orbit_threshold = t;
        }
        Ok(cfg)
    }

    fn format(&self) -> ffdyn::Result<ReportFormat> {
        match (&self.format, &self.out) {
            (Some(f), _) => f.parse(),
            (None, Some(path)) => Ok(ReportFormat::from_path(path)),
            (None, None) => Ok(ReportFormat::Json),
        }
    }

    fn finish(&self, report: &CampaignReport) -> ffdyn::Result<Outcome> {
        let format = self.format()?;
        match &self.out {
            Some(path) => {
                write_report(report, format, path)?;
                print_summary(report);
            }
            None => print!("{}", emit_report(report, format)?),
        }
        Ok(if report.is_clean() {
            Outcome::Ok
        } else {
            Outcome::Violation
        })
    }
}

enum Outcome {
    Ok,
    Violation,
}

fn field(p: u64) -> ffdyn::Result<PrimeField> {
    PrimeField::new(p)
}

fn load_map(arg: &MapArg) -> ffdyn::Result<HomogMap> {
    let path = std::path::Path::new(&arg.map);
    let text = if !arg.map.trim_start().starts_with('{') && path.is_file() {
        std::fs::read_to_string(path)?
    } else {
        arg.map.clone()
    };
    parse_map(&text, arg.p)
}

fn print_summary(report: &CampaignReport) {
    eprintln!(
        "maps {} | points {} | periodic {} | max period {} (threshold {}) | max orbit {} (threshold {}) | violations {}",
        report.maps_tested,
        report.points_examined,
        report.periodic_points_found,
        report.max_period,
        report.config.period_threshold,
        report.max_orbit_size,
        report.config.orbit_threshold,
        report.violations.len()
    );
    for (name, t) in &report.checkers {
        eprintln!("  {name}: pass {} fail {} skipped {}", t.pass, t.fail, t.skipped);
    }
}

fn run(cli: Cli) -> ffdyn::Result<Outcome> {
    match cli.command {
        Command::Places { p, d, up_to } => {
            let f = field(p)?;
            let degrees = if up_to { 1..=d } else { d..=d };
            for k in degrees {
                for pi in enumerate_monic_irreducibles(f, k) {
                    println!("{pi}");
                }
            }
        }
        Command::Val { ratfunc, place, p } => {
            let f = field(p)?;
            let x = RatFunc::parse(&ratfunc, f)?;
            match x.valuation(&Place::parse(&place, f)?) {
                Valuation::Finite(v) => println!("{v}"),
                Valuation::PosInfinity => println!("+inf"),
            }
        }
        Command::Dist { a, b, place, p } => {
            let f = field(p)?;
            let d = log_distance(
                &ProjPoint::parse(&a, f)?,
                &ProjPoint::parse(&b, f)?,
                &Place::parse(&place, f)?,
            )?;
            println!("{d}");
        }
        Command::Resultant(arg) => {
            let map = load_map(&arg)?;
            println!("{}", map.resultant());
        }
        Command::Badplaces(arg) => {
            let map = load_map(&arg)?;
            println!("{}", map.bad_places());
        }
        Command::Reduce { map, place } => {
            let map = load_map(&map)?;
            let place = Place::parse(&place, map.field())?;
            let red = map.reduce_map(&place)?;
            println!("{red}");
            println!("degree {} of {}", red.degree(), map.degree());
            println!("good reduction: {}", map.has_good_reduction(&place));
        }
        Command::Orbit {
            map,
            point,
            max_steps,
            max_height,
        } => {
            let map = load_map(&map)?;
            let start = ProjPoint::parse(&point, map.field())?;
            let steps = max_steps.unwrap_or_else(|| default_max_steps(map.field().p()));
            let height = max_height.unwrap_or_else(|| default_max_height(start.height().0));
            let r = iterate_orbit(&map, &start, steps, height);
            println!("status: {:?}", r.status);
            if let (Some(t), Some(c)) = (r.tail, r.cycle) {
                println!("tail {t}, cycle {c}, orbit size {}", t + c);
            }
            for (i, q) in r.points.iter().enumerate() {
                println!("{i}: {q}");
            }
        }
        Command::Periodic {
            map,
            height,
            max_steps,
            max_height,
        } => {
            let map = load_map(&map)?;
            let steps = max_steps.unwrap_or_else(|| default_max_steps(map.field().p()));
            let cap = max_height.unwrap_or_else(|| default_max_height(height));
            for (q, n) in find_periodic_points_capped(&map, height, steps, cap) {
                println!("{q}\t{n}");
            }
        }
        Command::VerifyBounds(args) => {
            let report = run_bound_campaign(&args.config()?)?;
            return args.finish(&report);
        }
        Command::VerifyProps {
            campaign,
            instances,
            checkers,
            mst_degree,
            distance_degree,
        } => {
            let mut cfg = campaign.config()?;
            cfg.random_instances = instances;
            cfg.mst_place_degree = mst_degree;
            cfg.distance_place_degree = distance_degree;
            if let Some(list) = checkers {
                cfg.checkers = list
                    .iter()
                    .map(|s| s.parse::<Checker>())
                    .collect::<ffdyn::Result<_>>()?;
            }
            let report = run_property_campaign(&cfg)?;
            return campaign.finish(&report);
        }
        Command::Eta { p, d, s } => {
            println!("{}", eta_bound(p, d, s)?);
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
