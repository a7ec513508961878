//! Property suites run by `hypergeo verify`. Each property samples seeded
//! instances, records the largest residual and compares it with a fixed
//! threshold; the same seed always prints the same table.

use std::f64::consts::{FRAC_PI_2, PI};

use hypergeo::construct::recipes;
use hypergeo::disk::{self, angle_of_parallelism_numeric, measure_angle, perpendicular};
use hypergeo::planner::{quadrature_radius, Rational};
use hypergeo::trig::{self, GeneralGivens, RightGivens};
use hypergeo::{Angle, Curvature, DiskPoint, Geodesic, IdealPoint, Length, RightTriangle};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{sci, Record, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    Oracle,
    Limits,
    Constructions,
    All,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Property {
    pub suite: &'static str,
    pub name: String,
    pub samples: usize,
    pub max: f64,
    pub threshold: f64,
}

impl Property {
    pub fn pass(&self) -> bool {
        self.max <= self.threshold
    }
}

/// Collects the worst residual of one property.
struct Tally {
    suite: &'static str,
    name: String,
    samples: usize,
    max: f64,
    threshold: f64,
}

impl Tally {
    fn new(suite: &'static str, name: &str, threshold: f64) -> Self {
        Self { suite, name: name.into(), samples: 0, max: 0.0, threshold }
    }

    fn add(&mut self, residual: f64) {
        self.samples += 1;
        // NaN counts as a failure
        self.max = if residual.is_nan() { f64::INFINITY } else { self.max.max(residual) };
    }

    fn done(self) -> Property {
        Property { suite: self.suite, name: self.name, samples: self.samples, max: self.max, threshold: self.threshold }
    }
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn len(x: f64) -> Length {
    Length::new(x).expect("non-negative sample")
}

fn ang(x: f64) -> Angle {
    Angle::new(x).expect("sample in [0, pi]")
}

fn unit() -> Curvature {
    Curvature::unit()
}

fn identities(rng: &mut ChaCha8Rng) -> Vec<Property> {
    const S: &str = "identities";
    const N: usize = 10_000;
    let k = unit();
    let pi_of = |y: f64| trig::angle_of_parallelism(len(y), k).unwrap().radians();
    let mut half_tan = Tally::new(S, "tan(u/2) e^y = 1", 1e-12);
    let mut sin_cosh = Tally::new(S, "sin(u) cosh(y) = 1", 1e-12);
    let mut cos_tanh = Tally::new(S, "cos(u) = tanh(y)", 1e-12);
    let mut inverse = Tally::new(S, "segment(parallelism(y)) = y", 1e-12);
    let mut ratio = Tally::new(S, "X(x+y) = X(x) X(y)", 1e-12);
    let mut lcurve = Tally::new(S, "horocycle ordinate two ways", 1e-9);
    let mut equi = Tally::new(S, "equidistant arc two ways", 1e-12);
    for _ in 0..N {
        let y: f64 = rng.gen_range(0.0..20.0);
        let u = pi_of(y);
        half_tan.add(((u / 2.0).tan() * y.exp() - 1.0).abs());
        sin_cosh.add((u.sin() * y.cosh() - 1.0).abs());
        cos_tanh.add((u.cos() - y.tanh()).abs());
        let z: f64 = rng.gen_range(0.0..100.0);
        inverse.add((trig::parallelism_segment(ang(pi_of(z)), k).unwrap().value() - z).abs());
        let (a, b): (f64, f64) = (rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0));
        let x = |t: f64| trig::arc_ratio(len(t), k).unwrap().ratio();
        ratio.add(rel(x(a) * x(b), x(a + b)));
        let h: f64 = rng.gen_range(0.01..10.0);
        lcurve.add(rel(
            trig::lcurve_point_via_parallelism(len(h), k).unwrap().value(),
            trig::lcurve_point(len(h), k).unwrap().value(),
        ));
        equi.add(rel(
            trig::equidistant_arc_length_via_parallelism(len(a), len(h), k).unwrap().value(),
            trig::equidistant_arc_length(len(a), len(h), k).unwrap().value(),
        ));
    }

    let mut right = Tally::new(S, "right-triangle relations", 1e-10);
    let mut general = Tally::new(S, "law of cosines and sines", 1e-9);
    for _ in 0..N / 10 {
        let kk = Curvature::new(rng.gen_range(0.5..3.0)).unwrap();
        let (a, b) = (rng.gen_range(0.05..4.0), rng.gen_range(0.05..4.0));
        right.add(trig::solve_right_triangle(RightGivens::legs(len(a), len(b)), kk).unwrap().residuals().max());
        let c = rng.gen_range(0.05..4.0);
        let alpha = rng.gen_range(0.1..3.0);
        general.add(trig::solve_general_triangle(GeneralGivens::sas(len(b), ang(alpha), len(c)), kk).unwrap().residual());
    }

    // central differences with h = 1e-6 k
    let mut d_area = Tally::new(S, "d area/dr = circumference", 1e-6);
    let mut d_strip = Tally::new(S, "d strip area/dq = equidistant arc", 1e-6);
    let mut d_ball = Tally::new(S, "d volume/dx = sphere surface", 1e-6);
    for _ in 0..100 {
        let kk = Curvature::new(rng.gen_range(0.5..4.0)).unwrap();
        let h = 1e-6 * kk.k();
        let r: f64 = rng.gen_range(0.1..5.0) * kk.k();
        let diff = |f: &dyn Fn(f64) -> f64| (f(r + h) - f(r - h)) / (2.0 * h);
        let area = |t: f64| trig::circle_area(len(t), kk).unwrap().value();
        d_area.add(rel(diff(&area), trig::circle_circumference(len(r), kk).unwrap().value()));
        let p = rng.gen_range(0.1..3.0);
        let strip = |q: f64| trig::equidistant_region_measures(len(p), len(q), kk).unwrap().area.value();
        d_strip.add(rel(diff(&strip), trig::equidistant_arc_length(len(p), len(r), kk).unwrap().value()));
        let vol = |x: f64| trig::sphere_measures(len(x), kk).unwrap().volume.value();
        d_ball.add(rel(diff(&vol), trig::sphere_measures(len(r), kk).unwrap().surface.value()));
    }
    [half_tan, sin_cosh, cos_tanh, inverse, ratio, lcurve, equi, right, general, d_area, d_strip, d_ball]
        .into_iter()
        .map(Tally::done)
        .collect()
}

fn random_point(rng: &mut ChaCha8Rng, max_radius: f64) -> DiskPoint {
    DiskPoint::polar(rng.gen_range(0.0..max_radius), rng.gen_range(0.0..2.0 * PI)).unwrap()
}

fn random_line(rng: &mut ChaCha8Rng) -> Geodesic {
    loop {
        let a = IdealPoint::new(rng.gen_range(0.0..2.0 * PI)).unwrap();
        let b = IdealPoint::new(rng.gen_range(0.0..2.0 * PI)).unwrap();
        if a.separation(&b) > 0.1 {
            return Geodesic::from_ideal(a, b).unwrap();
        }
    }
}

/// The point at signed distance `t` along `g` from its point nearest the centre.
fn along(g: &Geodesic, t: f64) -> DiskPoint {
    DiskPoint::from_complex(g.frame().inverse().apply(Complex64::new((t / 2.0).tanh(), 0.0))).unwrap()
}

fn angle_at(p: &DiskPoint, q: &DiskPoint, r: &DiskPoint) -> f64 {
    measure_angle(p, &(*q).into(), &(*r).into()).unwrap()
}

fn oracle(rng: &mut ChaCha8Rng) -> Vec<Property> {
    const S: &str = "oracle";
    let k = unit();
    let mut bond = Tally::new(S, "disk right triangle vs solver", 1e-9);
    let mut measured = Tally::new(S, "relations on measured triangle", 1e-10);
    let mut done = 0;
    while done < 1000 {
        let g = random_line(rng);
        let a = along(&g, rng.gen_range(-2.0..2.0));
        let q = random_point(rng, 2.5);
        let foot = perpendicular(&q, &g).foot;
        let (leg_a, leg_b) = (disk::dist(&foot, &q).unwrap(), disk::dist(&foot, &a).unwrap());
        if leg_a < 0.05 || leg_b < 0.05 {
            continue;
        }
        let c = disk::dist(&a, &q).unwrap();
        let (alpha, beta) = (angle_at(&a, &foot, &q), angle_at(&q, &foot, &a));
        let solved = trig::solve_right_triangle(RightGivens::legs(len(leg_a), len(leg_b)), k).unwrap();
        bond.add(
            [(solved.c.value(), c), (solved.alpha.radians(), alpha), (solved.beta.radians(), beta)]
                .iter()
                .map(|(s, m)| (s - m).abs())
                .fold(0.0, f64::max),
        );
        let m = RightTriangle { a: len(leg_a), b: len(leg_b), c: len(c), alpha: ang(alpha), beta: ang(beta), k };
        measured.add(m.residuals().max());
        done += 1;
    }

    let mut additive = Tally::new(S, "distance adds along a line", 1e-12);
    let mut diameter = Tally::new(S, "dist(0, t) = ln((1+t)/(1-t))", 1e-12);
    let mut parallel = Tally::new(S, "measured vs closed-form parallel angle", 1e-9);
    let mut sss = Tally::new(S, "SSS solution vs measured angles", 1e-9);
    let mut cevian = Tally::new(S, "defect adds under a cevian", 1e-10);
    for _ in 0..1000 {
        let g = random_line(rng);
        let mut ts = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
        ts.sort_by(f64::total_cmp);
        let [p, q, r] = ts.map(|t| along(&g, t));
        additive.add((disk::dist(&p, &r).unwrap() - disk::dist(&p, &q).unwrap() - disk::dist(&q, &r).unwrap()).abs());

        let t: f64 = rng.gen_range(0.0..0.99);
        let d = disk::dist(&DiskPoint::origin(), &DiskPoint::new(t, 0.0).unwrap()).unwrap();
        diameter.add((d - ((1.0 + t) / (1.0 - t)).ln()).abs());

        let off = random_point(rng, 3.0);
        let h = g.signed_distance(&off).abs();
        if h > 1e-3 {
            let closed = trig::angle_of_parallelism(len(h), k).unwrap().radians();
            parallel.add((angle_of_parallelism_numeric(&off, &g).unwrap() - closed).abs());
        }

        let (a, b, c) = (random_point(rng, 2.0), random_point(rng, 2.0), random_point(rng, 2.0));
        let sides = [disk::dist(&b, &c).unwrap(), disk::dist(&c, &a).unwrap(), disk::dist(&a, &b).unwrap()];
        let angles = [angle_at(&a, &b, &c), angle_at(&b, &c, &a), angle_at(&c, &a, &b)];
        if sides.iter().any(|&s| s < 0.05) || angles.iter().any(|x| !(1e-3..=PI - 1e-3).contains(x)) {
            continue;
        }
        let solved = trig::solve_general_triangle(GeneralGivens::sss(len(sides[0]), len(sides[1]), len(sides[2])), k).unwrap();
        let got = [solved.alpha.radians(), solved.beta.radians(), solved.gamma.radians()];
        sss.add(got.iter().zip(&angles).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max));

        let bc = Geodesic::through(b.into(), c.into()).unwrap();
        let f = bc.frame();
        let (tb, tc) = (f.apply(b.z()).re, f.apply(c.z()).re);
        let s: f64 = rng.gen_range(0.1..0.9);
        let dpt = DiskPoint::from_complex(f.inverse().apply(Complex64::new(tb + s * (tc - tb), 0.0))).unwrap();
        let defect = |p: &DiskPoint, q: &DiskPoint, r: &DiskPoint| PI - angle_at(p, q, r) - angle_at(q, r, p) - angle_at(r, p, q);
        cevian.add((defect(&a, &b, &dpt) + defect(&a, &dpt, &c) - defect(&a, &b, &c)).abs());
    }
    [bond, measured, additive, diameter, parallel, sss, cevian].into_iter().map(Tally::done).collect()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fitted_order(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

/// Departures from the Euclidean formulas at `r = 1` for `k = ratio * r`.
pub fn euclidean_departures(ratio: f64) -> [f64; 5] {
    let r = 1.0;
    let k = Curvature::new(ratio * r).unwrap();
    let circ = trig::circle_circumference(len(r), k).unwrap().value() / (2.0 * PI * r) - 1.0;
    let area = trig::circle_area(len(r), k).unwrap().value() / (PI * r * r) - 1.0;
    let vol = trig::sphere_measures(len(r), k).unwrap().volume.value() / (4.0 / 3.0 * PI * r.powi(3)) - 1.0;
    let t = trig::solve_right_triangle(RightGivens::legs(len(r), len(r)), k).unwrap();
    let sum = t.alpha.radians() + t.beta.radians() - FRAC_PI_2;
    let pyth = (t.c.value().powi(2) - 2.0 * r * r) / t.c.value().powi(2);
    [circ.abs(), area.abs(), vol.abs(), sum.abs(), pyth.abs()]
}

const RATIOS: [f64; 3] = [1e2, 1e3, 1e4];
const LIMIT_NAMES: [&str; 5] =
    ["circumference / 2pi r", "area / pi r^2", "volume / (4/3) pi r^3", "alpha + beta - pi/2", "c^2 vs a^2 + b^2"];

fn limits() -> (Vec<Property>, Table) {
    let rows: Vec<[f64; 5]> = RATIOS.iter().map(|&q| euclidean_departures(q)).collect();
    let mut table = Table::new("limit", &["k/r", "circumference", "area", "volume", "angle_sum", "pythagoras"]);
    for (q, row) in RATIOS.iter().zip(&rows) {
        let mut cells = vec![format!("{q:e}")];
        cells.extend(row.iter().map(|&x| sci(x)));
        table.row(cells);
    }
    let small: Vec<f64> = RATIOS.iter().map(|q| 1.0 / q).collect();
    let props = LIMIT_NAMES
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let ys: Vec<f64> = rows.iter().map(|r| r[i]).collect();
            let order = fitted_order(&small, &ys);
            Property { suite: "limits", name: format!("order of {name} (2 expected)"), samples: RATIOS.len(), max: (order - 2.0).abs(), threshold: 0.1 }
        })
        .collect();
    (props, table)
}

fn constructions(rng: &mut ChaCha8Rng) -> Vec<Property> {
    const S: &str = "constructions";
    let k = unit();
    let mut end = Tally::new(S, "parallel meets the line at infinity", 1e-9);
    let mut angle = Tally::new(S, "parallel makes the angle of parallelism", 1e-9);
    let mut failed = Tally::new(S, "failed script assertions", 0.0);
    let mut done = 0;
    while done < 100 {
        let g = random_line(rng);
        let d = random_point(rng, 2.5);
        if g.signed_distance(&d).abs() < 0.05 {
            continue;
        }
        let built = recipes::construct_parallel(g.start(), g.end(), d).unwrap();
        end.add(built.value.end().separation(&g.end()));
        let st = &built.run.state;
        let b = st.point("B").unwrap();
        let m = st.ideal("M").unwrap();
        let bdm = measure_angle(&d, &b.into(), &m.into()).unwrap();
        angle.add((bdm - trig::angle_of_parallelism(len(disk::dist(&d, &b).unwrap()), k).unwrap().radians()).abs());
        failed.add(built.run.report.results.iter().filter(|r| !r.pass).count() as f64);
        done += 1;
    }
    let mut segment = Tally::new(S, "parallelism segment vs closed form", 1e-9);
    for phi in [0.2, 0.5, PI / 4.0, 1.0, PI / 3.0, 1.4] {
        let built = recipes::construct_parallelism_segment(phi).unwrap();
        segment.add((built.value - trig::parallelism_segment(ang(phi), k).unwrap().value()).abs());
        failed.add(built.run.report.results.iter().filter(|r| !r.pass).count() as f64);
    }
    let mut ln2 = Tally::new(S, "ratio distance for 2 is ln 2", 1e-9);
    let built = recipes::construct_ratio_distance().unwrap();
    ln2.add((built.value - 2f64.ln()).abs());
    let mut quad = Tally::new(S, "tan z = 2 sinh(s/2)", 1e-9);
    for _ in 0..10 {
        let s: f64 = rng.gen_range(0.1..4.0);
        let z = recipes::construct_quadrature_angle(s).unwrap().value;
        quad.add((z - (2.0 * (s / 2.0).sinh()).atan()).abs());
    }
    let mut area = Tally::new(S, "built polygon area equals circle area", 1e-8);
    for (n, v, q) in [(4, Rational::new(1, 4), 1), (6, Rational::new(1, 6), 3), (5, Rational::new(1, 5), 2)] {
        let built = recipes::construct_regular_polygon(n, v).unwrap();
        let vs = &built.value;
        let sum: f64 = (0..vs.len()).map(|j| angle_at(&vs[j], &vs[(j + vs.len() - 1) % vs.len()], &vs[(j + 1) % vs.len()])).sum();
        let defect = (n as f64 - 2.0) * PI - sum;
        let circle = trig::circle_area(quadrature_radius::<f64>(Rational::from_integer(q), k).unwrap(), k).unwrap().value();
        area.add((defect - circle).abs());
        failed.add(built.run.report.results.iter().filter(|r| !r.pass).count() as f64);
    }
    [end, angle, segment, ln2, quad, area, failed].into_iter().map(Tally::done).collect()
}

/// Runs the chosen suites with seeds derived from `seed`.
pub fn run(suite: Suite, seed: u64) -> (Vec<Property>, Option<Table>) {
    let rng = |salt: u64| ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt));
    let mut props = Vec::new();
    let mut table = None;
    if matches!(suite, Suite::Identities | Suite::All) {
        props.extend(identities(&mut rng(1)));
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        props.extend(oracle(&mut rng(2)));
    }
    if matches!(suite, Suite::Limits | Suite::All) {
        let (p, t) = limits();
        props.extend(p);
        table = Some(t);
    }
    if matches!(suite, Suite::Constructions | Suite::All) {
        props.extend(constructions(&mut rng(4)));
    }
    (props, table)
}

pub fn record(props: &[Property], limits: Option<Table>, seed: u64) -> Record {
    let failed = props.iter().filter(|p| !p.pass()).count();
    let mut r = Record::new();
    r.number("seed", seed as f64).number("properties", props.len() as f64).number("failed", failed as f64);
    r.text("status", if failed == 0 { "pass" } else { "FAIL" });
    let mut t = Table::new("property", &["suite", "property", "samples", "max_residual", "threshold", "status"]);
    for p in props {
        t.row(vec![
            p.suite.into(),
            p.name.clone(),
            p.samples.to_string(),
            sci(p.max),
            sci(p.threshold),
            if p.pass() { "pass" } else { "FAIL" }.into(),
        ]);
    }
    r.table(t);
    if let Some(l) = limits {
        r.table(l);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_a_power_law() {
        let xs = [1e-2, 1e-3, 1e-4];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x * x).collect();
        assert!((fitted_order(&xs, &ys) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn departures_shrink_quadratically() {
        let a = euclidean_departures(1e2);
        let b = euclidean_departures(1e3);
        for (x, y) in a.iter().zip(&b) {
            assert!((x / y - 100.0).abs() < 1.0, "{x} {y}");
        }
        // leading terms: t^2/6 and t^2/12
        assert!((a[0] / 1e-4 - 1.0 / 6.0).abs() < 1e-3);
        assert!((a[1] / 1e-4 - 1.0 / 12.0).abs() < 1e-3);
    }
}
