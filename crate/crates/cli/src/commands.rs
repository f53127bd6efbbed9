//! Argument definitions and dispatch.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lensgeom::jacobi::{blowup_verdict, BlowupCandidate, BlowupVerdict};
use lensgeom::lawson::{self, LawsonSurface};
use lensgeom::lens::{self, CoveringData, LensSpace};
use lensgeom::orbits;
use lensgeom::period::{self, PeriodParams, Route};
use lensgeom::s3geom::{self, Geodesic, PointS2};
use lensgeom::Result;
use num_integer::gcd;

use crate::report::{Fields, Output};
use crate::suite;

#[derive(Debug, Parser)]
#[command(name = "lensgeom", version, about = "Lens-space geometry, Lawson areas and invariant-curve periods")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Tolerance for geometric equality tests.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = positive)]
    pub tol: f64,
    /// Absolute error target for quadratures.
    #[arg(long, global = true, default_value_t = 1e-10, value_parser = positive)]
    pub quad_target: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Include wall-clock time in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
}

impl RunConfig {
    pub fn fields(&self) -> Fields {
        Fields::new()
            .exact("tol", self.tol)
            .exact("quad_target", self.quad_target)
            .text("format", if self.format == Format::Json { "json" } else { "csv" })
            .exact("seed", self.seed)
    }
}

fn positive(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{v} is not a positive number"))
    }
}

fn point_s2(s: &str) -> std::result::Result<PointS2, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    if parts.len() != 3 {
        return Err(format!("expected x,y,z, got {s:?}"));
    }
    let norm = (parts[0] * parts[0] + parts[1] * parts[1] + parts[2] * parts[2]).sqrt();
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(format!("{s:?} is not a nonzero vector"));
    }
    Ok(PointS2::normalized(parts[0], parts[1], parts[2]))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Great circles of S³ as points of S² × S².
    #[command(subcommand)]
    Geo(GeoCmd),
    #[command(subcommand)]
    Lens(LensCmd),
    /// Orbits of the cyclic action on the flat Clifford torus.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    #[command(subcommand)]
    Lawson(LawsonCmd),
    #[command(subcommand)]
    Period(PeriodCmd),
    #[command(subcommand)]
    Jacobi(JacobiCmd),
    #[command(subcommand)]
    Genus(GenusCmd),
    #[command(subcommand)]
    Suite(SuiteCmd),
}

/// A great circle given by its two S² coordinates.
#[derive(Debug, Clone, Args)]
pub struct CirclePair {
    /// First circle, first factor (x,y,z).
    #[arg(value_parser = point_s2, allow_hyphen_values = true)]
    a1: PointS2,
    #[arg(value_parser = point_s2, allow_hyphen_values = true)]
    a2: PointS2,
    /// Second circle, first factor.
    #[arg(value_parser = point_s2, allow_hyphen_values = true)]
    b1: PointS2,
    #[arg(value_parser = point_s2, allow_hyphen_values = true)]
    b2: PointS2,
}

impl CirclePair {
    fn geodesics(&self) -> (Geodesic, Geodesic) {
        (Geodesic::new(self.a1, self.a2), Geodesic::new(self.b1, self.b2))
    }

    fn fields(&self) -> Fields {
        let mut f = Fields::new();
        for (name, p) in [("a1", self.a1), ("a2", self.a2), ("b1", self.b1), ("b2", self.b2)] {
            f = f.nested(name, point_fields(p.x, p.y, p.z));
        }
        f
    }
}

fn point_fields(x: f64, y: f64, z: f64) -> Fields {
    Fields::new().computed("x", x).computed("y", y).computed("z", z)
}

#[derive(Debug, Subcommand)]
pub enum GeoCmd {
    /// Whether two great circles meet.
    Intersect(CirclePair),
    /// First internal tangency of cmc tori about two nearby circles.
    Tangency {
        #[command(flatten)]
        circles: CirclePair,
        /// Radius of the outer torus, in (0, π/4].
        #[arg(long, default_value_t = PI / 4.0)]
        rho: f64,
        /// Points reported along a contact circle.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum LensCmd {
    /// Minimal tori and Klein bottles of L(p, q).
    Classify { p: u64, q: u64 },
    /// Number of isometry classes of lens spaces with fundamental group Z_p.
    Count { p: u64 },
    /// Whether L(p, q1) and L(p, q2) are isometric.
    Isometric { p: u64, q1: u64, q2: u64 },
}

#[derive(Debug, Subcommand)]
pub enum OrbitCmd {
    /// Orbit of the origin on the flat torus.
    Points { p: u64, q: u64 },
    /// Number of parallel (n, m)-curves containing the orbit.
    K {
        p: u64,
        q: u64,
        n: u64,
        m: u64,
        /// Also report the best configurations up to this complexity.
        #[arg(long)]
        frontier: Option<u64>,
    },
    /// A lens space of order p whose orbit lies on k parallel (n, m)-curves.
    Realize { n: u64, m: u64, k: u64, p: u64 },
}

#[derive(Debug, Subcommand)]
pub enum LawsonCmd {
    /// Area of the Lawson surface; with --max, a table over coprime pairs.
    Area {
        #[arg(required_unless_present = "max")]
        n: Option<u64>,
        #[arg(required_unless_present = "max")]
        m: Option<u64>,
        #[arg(long, conflicts_with_all = ["n", "m"])]
        max: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Original,
    Substituted,
}

#[derive(Debug, Subcommand)]
pub enum PeriodCmd {
    /// Period and its derivative at one angle.
    Eval {
        n: u64,
        m: u64,
        #[arg(allow_hyphen_values = true)]
        a: f64,
        #[arg(long, value_enum, default_value_t = RouteArg::Substituted)]
        route: RouteArg,
    },
    /// Period, derivative and monotonicity check on a uniform grid.
    Scan {
        n: u64,
        m: u64,
        #[arg(long, default_value_t = 100)]
        grid: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum JacobiCmd {
    /// Verdict for one candidate, or a table when no candidate is given.
    Verdict {
        n: Option<u64>,
        #[arg(requires = "n")]
        m: Option<u64>,
        #[arg(requires = "m")]
        k: Option<u64>,
        #[arg(long, default_value_t = 25)]
        max_norm: u64,
        #[arg(long, default_value_t = 4)]
        max_k: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenusCmd {
    /// Genus of the lift of a genus-g surface to a p-fold cover.
    Lift {
        g: u64,
        p: u64,
        /// Number of components of the quotient surface, for the
        /// boundary-aware formula.
        #[arg(long, requires = "w1")]
        components: Option<i64>,
        #[arg(long, requires = "components")]
        w1: Option<i64>,
        #[arg(long, default_value_t = 0)]
        w0: i64,
        /// Also report the genus after this many double covers of a genus-2 surface.
        #[arg(long)]
        doublings: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SuiteCmd {
    /// Run the acceptance criteria.
    Run {
        /// Run only these criteria (1-12).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Geo(GeoCmd::Intersect(_)) => "geo intersect",
            Command::Geo(GeoCmd::Tangency { .. }) => "geo tangency",
            Command::Lens(LensCmd::Classify { .. }) => "lens classify",
            Command::Lens(LensCmd::Count { .. }) => "lens count",
            Command::Lens(LensCmd::Isometric { .. }) => "lens isometric",
            Command::Orbit(OrbitCmd::Points { .. }) => "orbit points",
            Command::Orbit(OrbitCmd::K { .. }) => "orbit k",
            Command::Orbit(OrbitCmd::Realize { .. }) => "orbit realize",
            Command::Lawson(LawsonCmd::Area { .. }) => "lawson area",
            Command::Period(PeriodCmd::Eval { .. }) => "period eval",
            Command::Period(PeriodCmd::Scan { .. }) => "period scan",
            Command::Jacobi(JacobiCmd::Verdict { .. }) => "jacobi verdict",
            Command::Genus(GenusCmd::Lift { .. }) => "genus lift",
            Command::Suite(SuiteCmd::Run { .. }) => "suite run",
        }
    }
}

/// Runs a parsed command, returning its inputs and outputs.
pub fn execute(cmd: &Command, cfg: &RunConfig) -> Result<(Fields, Output)> {
    match cmd {
        Command::Geo(GeoCmd::Intersect(c)) => geo_intersect(c, cfg),
        Command::Geo(GeoCmd::Tangency { circles, rho, samples }) => geo_tangency(circles, *rho, *samples, cfg),
        Command::Lens(LensCmd::Classify { p, q }) => lens_classify(*p, *q),
        Command::Lens(LensCmd::Count { p }) => lens_count(*p),
        Command::Lens(LensCmd::Isometric { p, q1, q2 }) => lens_isometric(*p, *q1, *q2),
        Command::Orbit(OrbitCmd::Points { p, q }) => orbit_points(*p, *q),
        Command::Orbit(OrbitCmd::K { p, q, n, m, frontier }) => orbit_k(*p, *q, *n, *m, *frontier),
        Command::Orbit(OrbitCmd::Realize { n, m, k, p }) => orbit_realize(*n, *m, *k, *p),
        Command::Lawson(LawsonCmd::Area { n, m, max }) => lawson_area(*n, *m, *max, cfg),
        Command::Period(PeriodCmd::Eval { n, m, a, route }) => period_eval(*n, *m, *a, *route, cfg),
        Command::Period(PeriodCmd::Scan { n, m, grid }) => period_scan(*n, *m, *grid),
        Command::Jacobi(JacobiCmd::Verdict { n, m, k, max_norm, max_k }) => jacobi(*n, *m, *k, *max_norm, *max_k),
        Command::Genus(GenusCmd::Lift { g, p, components, w1, w0, doublings }) => {
            genus_lift(*g, *p, *components, *w1, *w0, *doublings)
        }
        Command::Suite(SuiteCmd::Run { only }) => suite_run(only, cfg),
    }
}

fn geo_intersect(c: &CirclePair, cfg: &RunConfig) -> Result<(Fields, Output)> {
    let (g1, g2) = c.geodesics();
    let (g1c, g2c) = (g1.canonical(), g2.canonical());
    let da = g1c.first.distance(g2c.first);
    let db = g1c.second.distance(g2c.second);
    let fields = Fields::new()
        .flag("intersect", s3geom::geodesics_intersect(g1, g2, cfg.tol))
        .computed("dist_first", da)
        .computed("dist_second", db)
        .computed("distance", s3geom::geodesic_distance(g1c, g2c));
    Ok((c.fields(), Output { method: "S2xS2 distance criterion", fields, rows: None }))
}

fn geo_tangency(c: &CirclePair, rho: f64, samples: usize, cfg: &RunConfig) -> Result<(Fields, Output)> {
    let (g1, g2) = c.geodesics();
    let t = s3geom::cmc_tangency(g1, g2, rho, cfg.tol)?;
    let locus = s3geom::tangency_locus(g1, g2, rho, samples, cfg.tol)?;
    let kind = match t.kind {
        s3geom::TangencyKind::Coincide => "Coincide",
        s3geom::TangencyKind::OneGeodesic => "OneGeodesic",
        s3geom::TangencyKind::TwoAntipodalPoints => "TwoAntipodalPoints",
    };
    let fields = Fields::new()
        .computed("t0", t.t0)
        .text("kind", kind)
        .computed("dist_first", t.dist_first)
        .computed("dist_second", t.dist_second)
        .computed("unhalved_t0", t.unhalved_t0)
        .exact("contact_points", locus.len() as u64);
    let rows = locus
        .iter()
        .enumerate()
        .map(|(i, x)| {
            Fields::new()
                .exact("index", i as u64)
                .approx("a", x.a, 1e-12)
                .approx("b", x.b, 1e-12)
                .approx("c", x.c, 1e-12)
                .approx("d", x.d, 1e-12)
        })
        .collect();
    let inputs = c.fields().computed("rho", rho).exact("samples", samples as u64);
    Ok((inputs, Output { method: "principal angles from S2 distances", fields, rows: Some(rows) }))
}

fn lens_classify(p: u64, q: u64) -> Result<(Fields, Output)> {
    let l = LensSpace::new(p, q)?;
    let c = lens::classify_invariant_tori(l);
    let (k1, k2) = lens::seifert_order(l);
    let fields = Fields::new()
        .text("space", l.to_string())
        .text("tori", format!("{:?}", c.tori))
        .text("klein", format!("{:?}", c.klein))
        .flag("admits_klein_bottle", lens::admits_klein_bottle(l))
        .flag("flippable", lens::is_flippable(l))
        .computed("clifford_area", l.clifford_area())
        .exact("seifert_order_first", k1)
        .exact("seifert_order_second", k2);
    let inputs = Fields::new().exact("p", p).exact("q", q);
    Ok((inputs, Output { method: "case split on p and q", fields, rows: None }))
}

fn lens_count(p: u64) -> Result<(Fields, Output)> {
    let c = lens::count_isometry_classes(p)?;
    let b = c.burnside();
    let fields = Fields::new()
        .exact("classes", c.n_exact)
        .exact("phi", c.phi)
        .exact("fixed_identity", c.fixed_counts[0])
        .exact("fixed_negation", c.fixed_counts[1])
        .exact("fixed_inversion", c.fixed_counts[2])
        .exact("fixed_negated_inversion", c.fixed_counts[3])
        .exact("burnside_numer", *b.numer())
        .exact("burnside_denom", *b.denom());
    Ok((Fields::new().exact("p", p), Output { method: "orbit enumeration and Burnside count", fields, rows: None }))
}

fn lens_isometric(p: u64, q1: u64, q2: u64) -> Result<(Fields, Output)> {
    let (l1, l2) = (LensSpace::new(p, q1)?, LensSpace::new(p, q2)?);
    let iso = lens::are_isometric(l1, l2)?;
    let mut fields = Fields::new().flag("isometric", iso);
    if q1 % p != q2 % p {
        let cert = s3geom::distinctness_certificate(p, q1, q2)?;
        fields = match cert {
            s3geom::Certificate::Valid => fields.text("certificate", "Valid"),
            s3geom::Certificate::Invalid(g) => fields.text("certificate", format!("Invalid({})", g.name())),
        };
    }
    let inputs = Fields::new().exact("p", p).exact("q1", q1).exact("q2", q2);
    Ok((inputs, Output { method: "congruence test", fields, rows: None }))
}

fn orbit_points(p: u64, q: u64) -> Result<(Fields, Output)> {
    let l = LensSpace::new(p, q)?;
    let lattice = orbits::orbit_lattice(l);
    let flat = orbits::orbit_points(l);
    let rows = lattice
        .iter()
        .zip(&flat)
        .enumerate()
        .map(|(j, (&(i, k), f))| {
            Fields::new()
                .exact("j", j as u64)
                .exact("lattice_x", i)
                .exact("lattice_y", k)
                .computed("x", f.x)
                .computed("y", f.y)
        })
        .collect();
    let inputs = Fields::new().exact("p", p).exact("q", q);
    let fields = Fields::new().exact("count", lattice.len() as u64);
    Ok((inputs, Output { method: "orbit of the origin", fields, rows: Some(rows) }))
}

fn orbit_k(p: u64, q: u64, n: u64, m: u64, frontier: Option<u64>) -> Result<(Fields, Output)> {
    let l = LensSpace::new(p, q)?;
    let k = orbits::curves_containing_orbit(l, n, m)?;
    let fields = Fields::new().exact("k", k);
    let rows = match frontier {
        Some(bound) => Some(
            orbits::classify_orbit(l, bound)?
                .into_iter()
                .map(|e| {
                    Fields::new()
                        .exact("n", e.config.n)
                        .exact("m", e.config.m)
                        .exact("k", e.config.k)
                        .exact("complexity", e.complexity)
                })
                .collect(),
        ),
        None => None,
    };
    let mut inputs = Fields::new().exact("p", p).exact("q", q).exact("n", n).exact("m", m);
    if let Some(b) = frontier {
        inputs = inputs.exact("frontier", b);
    }
    Ok((inputs, Output { method: "gcd formula", fields, rows }))
}

fn orbit_realize(n: u64, m: u64, k: u64, p: u64) -> Result<(Fields, Output)> {
    let realized = orbits::realize_configuration(n, m, k, p)?;
    let fields = match realized {
        Some(l) => Fields::new()
            .flag("found", true)
            .text("space", l.to_string())
            .exact("space_p", l.p())
            .exact("space_q", l.q())
            .exact("k", orbits::curves_containing_orbit(l, n, m)?),
        None => Fields::new().flag("found", false),
    };
    let inputs = Fields::new().exact("n", n).exact("m", m).exact("k", k).exact("p", p);
    Ok((inputs, Output { method: "explicit family", fields, rows: None }))
}

fn area_fields(n: u64, m: u64, target: f64) -> Result<Fields> {
    let s = LawsonSurface::new(n, m)?;
    let a = lawson::lawson_area_with_target(s, target)?;
    let f = Fields::new().exact("n", n).exact("m", m).approx("area", a.value, a.abs_err);
    let f = match lawson::area_exceeds_double_clifford(a) {
        Ok(b) => f.text("exceeds_4pi2", b.to_string()),
        Err(lensgeom::Error::Indeterminate { .. }) => f.text("exceeds_4pi2", "indeterminate"),
        Err(e) => return Err(e),
    };
    Ok(f.text("topology", format!("{:?}", s.topology())))
}

fn lawson_area(n: Option<u64>, m: Option<u64>, max: Option<u64>, cfg: &RunConfig) -> Result<(Fields, Output)> {
    let method = "Gauss-Kronrod on the reduced area integral";
    if let Some(max) = max {
        let mut rows = Vec::new();
        for n in 1..=max {
            for m in n..=max {
                if gcd(n, m) == 1 {
                    rows.push(area_fields(n, m, cfg.quad_target)?);
                }
            }
        }
        let fields = Fields::new().exact("surfaces", rows.len() as u64);
        return Ok((Fields::new().exact("max", max), Output { method, fields, rows: Some(rows) }));
    }
    let (n, m) = (n.expect("required by clap"), m.expect("required by clap"));
    let fields = area_fields(n, m, cfg.quad_target)?;
    if fields.map().get("exceeds_4pi2").and_then(|v| v.as_str()) == Some("indeterminate") {
        let s = LawsonSurface::new(n, m)?;
        lawson::area_exceeds_double_clifford(lawson::lawson_area_with_target(s, cfg.quad_target)?)?;
    }
    Ok((Fields::new().exact("n", n).exact("m", m), Output { method, fields, rows: None }))
}

fn period_eval(n: u64, m: u64, a: f64, route: RouteArg, cfg: &RunConfig) -> Result<(Fields, Output)> {
    let params = PeriodParams::new(n, m, a)?;
    let p = match route {
        RouteArg::Substituted => period::period_with_target(params, cfg.quad_target)?,
        RouteArg::Original => period::period_original(params, cfg.quad_target)?,
    };
    let d = period::period_derivative_with_target(params, cfg.quad_target)?;
    let limit = period::period_limit(n, m)?;
    let method = match p.route {
        Route::Substituted => "Gauss-Kronrod after the sine substitution",
        Route::Original => "tanh-sinh on the endpoint-singular integrand",
    };
    let fields = Fields::new()
        .approx("value", p.value, p.abs_err)
        .approx("derivative", d.value, d.abs_err)
        .computed("lower_bound", period::PERIOD_LOWER_BOUND)
        .computed("limit", limit);
    let inputs = Fields::new().exact("n", n).exact("m", m).exact("a", a);
    Ok((inputs, Output { method, fields, rows: None }))
}

fn period_scan(n: u64, m: u64, grid: usize) -> Result<(Fields, Output)> {
    let r = period::monotonicity_scan(n, m, grid)?;
    let rows = r
        .points
        .iter()
        .map(|pt| {
            Fields::new()
                .computed("a", pt.a)
                .approx("period", pt.value, pt.abs_err)
                .approx("derivative", pt.derivative, pt.derivative_err)
        })
        .collect();
    let fields = Fields::new()
        .exact("points", r.points.len() as u64)
        .exact("violations", r.violations.len() as u64)
        .computed("limit", period::period_limit(n, m)?);
    let inputs = Fields::new().exact("n", n).exact("m", m).exact("grid", grid as u64);
    Ok((inputs, Output { method: "uniform grid with error-aware comparison", fields, rows: Some(rows) }))
}

fn verdict_fields(v: &BlowupVerdict, n: u64, m: u64, k: u64) -> Fields {
    Fields::new()
        .exact("n", n)
        .exact("m", m)
        .exact("k", k)
        .computed("omega", v.omega)
        .computed("spacing", v.spacing)
        .computed("ratio", v.ratio)
        .text("verdict", format!("{:?}", v.verdict))
        .flag("derived_extension", v.derived_extension)
}

fn jacobi(n: Option<u64>, m: Option<u64>, k: Option<u64>, max_norm: u64, max_k: u64) -> Result<(Fields, Output)> {
    let method = "exact integer comparison of frequency and spacing";
    if let (Some(n), Some(m), Some(k)) = (n, m, k) {
        let v = blowup_verdict(BlowupCandidate::new(n, m, k)?);
        let inputs = Fields::new().exact("n", n).exact("m", m).exact("k", k);
        return Ok((inputs, Output { method, fields: verdict_fields(&v, n, m, k), rows: None }));
    }
    if n.is_some() {
        return Err(lensgeom::Error::Precondition("give all of n, m, k or none".into()));
    }
    let mut rows = Vec::new();
    let mut n = 1;
    while n * n <= max_norm {
        let mut m = n;
        while n * n + m * m <= max_norm {
            if gcd(n, m) == 1 {
                for k in 1..=max_k {
                    let v = blowup_verdict(BlowupCandidate::new(n, m, k)?);
                    rows.push(verdict_fields(&v, n, m, k));
                }
            }
            m += 1;
        }
        n += 1;
    }
    let fields = Fields::new().exact("candidates", rows.len() as u64);
    let inputs = Fields::new().exact("max_norm", max_norm).exact("max_k", max_k);
    Ok((inputs, Output { method, fields, rows: Some(rows) }))
}

fn genus_lift(
    g: u64,
    p: u64,
    components: Option<i64>,
    w1: Option<i64>,
    w0: i64,
    doublings: Option<u32>,
) -> Result<(Fields, Output)> {
    let mut fields = Fields::new().exact("lifted_genus", lens::lift_genus(g, p)?);
    let q = lens::quotient_genus(g, p)?;
    fields = fields
        .exact("quotient_numer", q.numer)
        .exact("quotient_denom", q.denom)
        .flag("quotient_integral", q.integral);
    let mut inputs = Fields::new().exact("g", g).exact("p", p);
    if let (Some(c), Some(w1)) = (components, w1) {
        let p_signed = i64::try_from(p).map_err(|_| lensgeom::Error::Overflow("genus lift"))?;
        let g_signed = i64::try_from(g).map_err(|_| lensgeom::Error::Overflow("genus lift"))?;
        let data = CoveringData { p: p_signed, components: c, genus_quotient: g_signed, w1, w0 };
        fields = fields.exact("covering_genus", lens::covering_genus(data)?);
        inputs = inputs.exact("components", c).exact("w1", w1).exact("w0", w0);
    }
    if let Some(d) = doublings {
        fields = fields.exact("iterated_double_cover_genus", lens::iterated_double_cover_genus(d)?);
        inputs = inputs.exact("doublings", d);
    }
    Ok((inputs, Output { method: "Euler characteristic of covers", fields, rows: None }))
}

fn suite_run(only: &[u32], cfg: &RunConfig) -> Result<(Fields, Output)> {
    let results = suite::run(cfg.seed, only);
    let passed = results.iter().filter(|r| r.passed).count() as u64;
    let rows = results
        .iter()
        .map(|r| {
            let mut f = Fields::new()
                .exact("id", r.id)
                .text("name", r.name)
                .flag("passed", r.passed)
                .text("detail", r.detail.clone());
            if cfg.timing {
                f = f.approx("elapsed_s", r.elapsed.as_secs_f64(), 1e-6);
            }
            f
        })
        .collect();
    let fields = Fields::new()
        .exact("criteria", results.len() as u64)
        .exact("passed", passed)
        .flag("all_passed", passed == results.len() as u64);
    let selected = if only.is_empty() {
        "all".to_string()
    } else {
        only.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    };
    let inputs = Fields::new().text("only", selected);
    Ok((inputs, Output { method: "independent oracles", fields, rows: Some(rows) }))
}
