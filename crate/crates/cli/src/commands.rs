use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use hypergeo::construct::{recipes, run, ConstructError, ConstructionState, Report, Script};
use hypergeo::planner::{self, PlanError};
use hypergeo::trig::{self, GeneralGivens, RightGivens, SectorExtent};
use hypergeo::{Angle, Curvature, GeometryError, Length};

use crate::expr;
use crate::report::{num, sci, Record, Table};
use crate::svg;

/// How a command failed; each maps to an exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    /// Bad flags, arguments, or input outside an operation's domain.
    Usage(String),
    /// A numeric argument past the overflow guard or non-finite.
    Range(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Range(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Range(m) => m,
        }
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::OutOfRange { .. } | GeometryError::NonFinite(_) => Failure::Range(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<expr::ExprError> for Failure {
    fn from(e: expr::ExprError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// A printed result; `passed == false` exits with the verification code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub record: Record,
    pub passed: bool,
}

impl Outcome {
    fn ok(record: Record) -> Self {
        Self { record, passed: true }
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub k: Curvature,
    pub tol: Option<f64>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

/// Splits `key=value` arguments, refusing repeats and unknown keys.
fn keyed<'a>(args: &'a [String], allowed: &[&str]) -> Result<BTreeMap<&'a str, &'a str>, Failure> {
    let mut map = BTreeMap::new();
    for arg in args {
        let (k, v) = arg
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected key=value, got '{arg}'")))?;
        if !allowed.contains(&k) {
            return Err(Failure::Usage(format!("unknown key '{k}'; expected one of {}", allowed.join(", "))));
        }
        if map.insert(k, v).is_some() {
            return Err(Failure::Usage(format!("'{k}' given twice")));
        }
    }
    Ok(map)
}

fn length(s: &str) -> Result<Length, Failure> {
    Ok(Length::new(expr::number(s)?)?)
}

fn angle(s: &str) -> Result<Angle, Failure> {
    Ok(Angle::new(expr::angle(s)?)?)
}

pub fn solve(right: bool, givens: &[String], cfg: &Config) -> Result<Outcome, Failure> {
    let mut r = Record::new();
    if right {
        let m = keyed(givens, &["a", "b", "c", "alpha", "beta"])?;
        let g = RightGivens {
            a: m.get("a").map(|s| length(s)).transpose()?,
            b: m.get("b").map(|s| length(s)).transpose()?,
            c: m.get("c").map(|s| length(s)).transpose()?,
            alpha: m.get("alpha").map(|s| angle(s)).transpose()?,
            beta: m.get("beta").map(|s| angle(s)).transpose()?,
        };
        let t = trig::solve_right_triangle(g, cfg.k)?;
        r.number("a", t.a.value()).number("b", t.b.value()).number("c", t.c.value());
        r.angle("alpha", t.alpha.radians()).angle("beta", t.beta.radians()).angle("gamma", std::f64::consts::FRAC_PI_2);
        r.number("defect", t.defect()).number("area", t.area());
        r.text("residual", sci(t.residuals().max()));
    } else {
        let m = keyed(givens, &["a", "b", "c", "alpha", "beta", "gamma"])?;
        let g = GeneralGivens {
            a: m.get("a").map(|s| length(s)).transpose()?,
            b: m.get("b").map(|s| length(s)).transpose()?,
            c: m.get("c").map(|s| length(s)).transpose()?,
            alpha: m.get("alpha").map(|s| angle(s)).transpose()?,
            beta: m.get("beta").map(|s| angle(s)).transpose()?,
            gamma: m.get("gamma").map(|s| angle(s)).transpose()?,
        };
        let t = trig::solve_general_triangle(g, cfg.k)?;
        r.number("a", t.a.value()).number("b", t.b.value()).number("c", t.c.value());
        r.angle("alpha", t.alpha.radians()).angle("beta", t.beta.radians()).angle("gamma", t.gamma.radians());
        r.number("defect", t.defect()).number("area", t.area());
        r.text("residual", sci(t.residual()));
    }
    r.number("k", cfg.k.k());
    Ok(Outcome::ok(r))
}

type Evaluator = fn(&BTreeMap<&str, &str>, Curvature, &mut Record) -> Result<(), Failure>;

/// One entry of the formula catalog.
struct Quantity {
    name: &'static str,
    params: &'static [&'static str],
    formula: &'static str,
    eval: Evaluator,
}

fn need<'a>(m: &BTreeMap<&str, &'a str>, key: &str) -> Result<&'a str, Failure> {
    m.get(key).copied().ok_or_else(|| Failure::Usage(format!("missing '{key}='")))
}

const CATALOG: &[Quantity] = &[
    Quantity {
        name: "arc-ratio",
        params: &["x"],
        formula: "X = e^(x/k)",
        eval: |m, k, r| {
            r.number("value", trig::arc_ratio(length(need(m, "x")?)?, k)?.ratio());
            Ok(())
        },
    },
    Quantity {
        name: "parallelism",
        params: &["y"],
        formula: "cot(u/2) = e^(y/k)",
        eval: |m, k, r| {
            r.angle("value", trig::angle_of_parallelism(length(need(m, "y")?)?, k)?.radians());
            Ok(())
        },
    },
    Quantity {
        name: "parallelism-segment",
        params: &["u"],
        formula: "y = k ln cot(u/2)",
        eval: |m, k, r| {
            r.number("value", trig::parallelism_segment(angle(need(m, "u")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "circumference",
        params: &["r"],
        formula: "2 pi k sinh(r/k)",
        eval: |m, k, r| {
            r.number("value", trig::circle_circumference(length(need(m, "r")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "circle-area",
        params: &["r"],
        formula: "4 pi k^2 sinh^2(r/2k)",
        eval: |m, k, r| {
            r.number("value", trig::circle_area(length(need(m, "r")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "quadrature-circle",
        params: &["z"],
        formula: "pi k^2 tan^2 z",
        eval: |m, k, r| {
            r.number("value", trig::circle_area_from_quadrature_angle(angle(need(m, "z")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "equidistant-arc",
        params: &["a", "b"],
        formula: "a cosh(b/k)",
        eval: |m, k, r| {
            r.number("value", trig::equidistant_arc_length(length(need(m, "a")?)?, length(need(m, "b")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "horocycle-arc",
        params: &["y"],
        formula: "k sinh(y/k)",
        eval: |m, k, r| {
            r.number("value", trig::horocycle_arc_length(length(need(m, "y")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "semichord",
        params: &["s"],
        formula: "sinh(y/k) = 2 sinh(s/2k)",
        eval: |m, k, r| {
            r.number("value", trig::chord_to_semichord(length(need(m, "s")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "lcurve-point",
        params: &["x"],
        formula: "Y = X + sqrt(X^2 - 1), X = e^(x/k), Y = e^(y/k)",
        eval: |m, k, r| {
            r.number("value", trig::lcurve_point(length(need(m, "x")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "lcurve-arc",
        params: &["x"],
        formula: "k sqrt(e^(2x/k) - 1)",
        eval: |m, k, r| {
            r.number("value", trig::lcurve_arc_length(length(need(m, "x")?)?, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "horocycle-sector",
        params: &["r", "x"],
        formula: "r k (1 - e^(-x/k)); without x the strip is unbounded",
        eval: |m, k, r| {
            let extent = match m.get("x") {
                Some(x) => SectorExtent::Finite(length(x)?),
                None => SectorExtent::Infinite,
            };
            r.number("value", trig::horocycle_sector_area(length(need(m, "r")?)?, extent, k)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "axial-volume",
        params: &["p"],
        formula: "p k / 2",
        eval: |m, k, r| {
            let p = trig::Area::new(expr::number(need(m, "p")?)?)?;
            r.number("value", trig::axial_volume(p, k).value());
            Ok(())
        },
    },
    Quantity {
        name: "equidistant-region",
        params: &["p", "q"],
        formula: "area p k sinh(q/k); surface pi k p sinh(2q/k); see the library docs for the volumes",
        eval: |m, k, r| {
            let e = trig::equidistant_region_measures(length(need(m, "p")?)?, length(need(m, "q")?)?, k)?;
            r.number("area", e.area.value())
                .number("prism_volume", e.prism_volume.value())
                .number("revolution_surface", e.revolution_surface.value())
                .number("revolution_volume", e.revolution_volume.value());
            Ok(())
        },
    },
    Quantity {
        name: "sphere",
        params: &["x"],
        formula: "great circle 2 pi k sinh(x/k); surface 4 pi k^2 sinh^2(x/k); volume pi k^3 (sinh(2x/k) - 2x/k)",
        eval: |m, k, r| {
            let s = trig::sphere_measures(length(need(m, "x")?)?, k)?;
            r.number("great_circle", s.great_circle.value())
                .number("surface", s.surface.value())
                .number("volume", s.volume.value());
            Ok(())
        },
    },
    Quantity {
        name: "spherical-cap",
        params: &["p", "u"],
        formula: "(1 - cos u) p^2 / 2pi",
        eval: |m, _, r| {
            r.number("value", trig::spherical_cap_area(length(need(m, "p")?)?, angle(need(m, "u")?)?)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "spherical-triangle",
        params: &["excess", "p"],
        formula: "excess p^2 / 4pi^2",
        eval: |m, _, r| {
            let excess = expr::angle(need(m, "excess")?)?;
            r.number("value", trig::spherical_triangle_area(excess, length(need(m, "p")?)?)?.value());
            Ok(())
        },
    },
    Quantity {
        name: "spherical-right-sine",
        params: &["a", "b"],
        formula: "sin A = sin a / sin b",
        eval: |m, _, r| {
            r.angle("value", trig::spherical_right_sine(angle(need(m, "a")?)?, angle(need(m, "b")?)?)?.radians());
            Ok(())
        },
    },
    Quantity {
        name: "polygon-area",
        params: &["angles"],
        formula: "k^2 ((n - 2) pi - sum of angles)",
        eval: |m, k, r| {
            let angles = need(m, "angles")?.split(',').map(angle).collect::<Result<Vec<_>, _>>()?;
            r.number("value", trig::polygon_area_from_angles(&angles, k)?.value());
            Ok(())
        },
    },
];

pub fn quantity_names() -> Vec<&'static str> {
    CATALOG.iter().map(|q| q.name).collect()
}

pub fn eval(quantity: &str, args: &[String], cfg: &Config) -> Result<Outcome, Failure> {
    let q = CATALOG.iter().find(|q| q.name == quantity).ok_or_else(|| {
        Failure::Usage(format!("unknown quantity '{quantity}'; known: {}", quantity_names().join(", ")))
    })?;
    let m = keyed(args, q.params)?;
    let mut r = Record::new();
    r.text("quantity", q.name);
    (q.eval)(&m, cfg.k, &mut r)?;
    r.text("formula", q.formula).number("k", cfg.k.k());
    Ok(Outcome::ok(r))
}

fn assertion_table(report: &Report) -> Table {
    let mut t = Table::new("assert", &["#", "predicate", "args", "expected", "measured", "residual", "tol", "status"]);
    for (i, a) in report.results.iter().enumerate() {
        t.row(vec![
            i.to_string(),
            a.predicate.name().into(),
            a.args.clone(),
            num(a.expected),
            num(a.measured),
            sci(a.residual),
            sci(a.tol),
            if a.pass { "pass" } else { "FAIL" }.into(),
        ]);
    }
    t
}

fn with_tolerance(mut script: Script, tol: Option<f64>) -> Script {
    if let Some(tol) = tol {
        for a in &mut script.asserts {
            a.tol = tol;
        }
    }
    script
}

fn unit_disk_only(cfg: &Config) -> Result<(), Failure> {
    if cfg.k.k() != 1.0 {
        return Err(Failure::Usage("constructions run in the disk with k = 1; drop --k".into()));
    }
    Ok(())
}

/// Runs a script and writes its scene; reports every assertion.
fn execute(script: &Script, cfg: &Config, svg_path: Option<&Path>, r: &mut Record) -> Result<bool, Failure> {
    let script = with_tolerance(script.clone(), cfg.tol);
    let out = run(&script, ConstructionState::new())?;
    if let Some(path) = svg_path {
        std::fs::write(path, svg::render(&out.state))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
        r.text("svg", path.display().to_string());
    }
    let passed = out.report.all_passed();
    r.text("script", if script.name.is_empty() { "(empty)".to_string() } else { script.name.clone() });
    r.number("objects", out.state.len() as f64).number("steps", script.steps.len() as f64);
    r.number("assertions", out.report.results.len() as f64);
    r.text("status", if passed { "pass" } else { "FAIL" });
    for (name, cert) in &out.report.certificates {
        r.text(&format!("certificate.{name}"), cert.clone());
    }
    r.table(assertion_table(&out.report));
    Ok(passed)
}

pub fn construct(path: &Path, cfg: &Config) -> Result<Outcome, Failure> {
    unit_disk_only(cfg)?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let script = Script::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let svg_path = cfg.out.clone().unwrap_or_else(|| {
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "scene".into());
        PathBuf::from(format!("{stem}.svg"))
    });
    let mut r = Record::new();
    let passed = execute(&script, cfg, Some(&svg_path), &mut r)?;
    Ok(Outcome { record: r, passed })
}

pub fn quadrature(tan2z: &str, build: bool, cfg: &Config) -> Result<Outcome, Failure> {
    let q = planner::parse_rational(tan2z)
        .ok_or_else(|| Failure::Usage(format!("'{tan2z}' is not a rational number such as 3, 1/4 or 0.5")))?;
    let mut r = Record::new();
    r.text("tan2z", q.to_string());
    let plan = match planner::plan(q) {
        Ok(p) => p,
        Err(e @ PlanError::NonPositive(_)) => return Err(Failure::Usage(e.to_string())),
        Err(e) => {
            // a well-formed request whose answer is no
            r.text("admissible", "no").text("reason", e.to_string());
            return Ok(Outcome { record: r, passed: false });
        }
    };
    let k = cfg.k;
    let v = plan.v::<f64>()?;
    let n = u32::try_from(plan.n).map_err(|_| Failure::Range("side count overflows".into()))?;
    let s = planner::quadrature_radius(q, k)?;
    let dims = planner::polygon_dimensions(n, v, k)?;
    r.text("admissible", "yes");
    r.number("n", plan.n as f64);
    r.angle("v", v.radians());
    r.text("v_over_pi", plan.v_over_pi.to_string());
    r.text("certificate", plan.certificate.clone());
    r.angle("z", (*q.numer() as f64 / *q.denom() as f64).sqrt().atan());
    r.number("s", s.value());
    r.number("area", plan.target_area_over_k2() * k.k() * k.k());
    r.number("circumradius", dims.circumradius.value());
    r.number("apothem", dims.apothem.value());
    r.number("side", dims.side.value());
    r.number("k", k.k());
    if !build {
        return Ok(Outcome::ok(r));
    }
    unit_disk_only(cfg)?;
    let script = recipes::quadrature_script(q)?;
    let passed = execute(&script, cfg, cfg.out.as_deref(), &mut r)?;
    Ok(Outcome { record: r, passed })
}
