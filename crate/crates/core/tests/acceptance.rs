//! Acceptance run: one line per criterion, each against a fixed tolerance.
//! Runs as a plain binary (`harness = false`) and exits non-zero on any failure.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::time::Instant;

use hypergeo::construct::{recipes, run, ConstructionState};
use hypergeo::disk::{dist, measure_angle, perpendicular};
use hypergeo::planner::{self, quadrature_radius, Rational};
use hypergeo::trig::{self, RightGivens};
use hypergeo::{Angle, Curvature, DiskPoint, Geodesic, IdealPoint, Length, RightTriangle};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn len(x: f64) -> Length {
    Length::new(x).unwrap()
}

fn ang(x: f64) -> Angle {
    Angle::new(x).unwrap()
}

fn unit() -> Curvature {
    Curvature::unit()
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + salt)
}

fn angle_at(p: &DiskPoint, q: &DiskPoint, r: &DiskPoint) -> f64 {
    measure_angle(p, &(*q).into(), &(*r).into()).unwrap()
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

fn parallelism_identities() -> Outcome {
    let mut rng = rng(1);
    let (mut half, mut sine) = (0f64, 0f64);
    for _ in 0..10_000 {
        let k = Curvature::new(rng.gen_range(0.5..3.0)).unwrap();
        let y = rng.gen_range(0.0..20.0) * k.k();
        if y == 0.0 {
            continue;
        }
        let u = trig::angle_of_parallelism(len(y), k).unwrap().radians();
        half = half.max(((u / 2.0).tan() * (y / k.k()).exp() - 1.0).abs());
        sine = sine.max((u.sin() * (y / k.k()).cosh() - 1.0).abs());
    }
    outcome(half < 1e-12 && sine < 1e-12, format!("tan(u/2) e^(y/k) max err {half:.2e}, sin u cosh(y/k) max err {sine:.2e} (tol 1e-12, 10^4 samples)"))
}

fn disk_right_triangles() -> Outcome {
    let mut rng = rng(2);
    let (mut bond, mut residual) = (0f64, 0f64);
    let mut done = 0;
    while done < 1000 {
        let g = random_line(&mut rng);
        let a = along(&g, rng.gen_range(-2.0..2.0));
        let q = DiskPoint::polar(rng.gen_range(0.0..2.5), rng.gen_range(0.0..2.0 * PI)).unwrap();
        let foot = perpendicular(&q, &g).foot;
        let (leg_a, leg_b) = (dist(&foot, &q).unwrap(), dist(&foot, &a).unwrap());
        if leg_a < 0.05 || leg_b < 0.05 {
            continue;
        }
        let c = dist(&a, &q).unwrap();
        let (alpha, beta) = (angle_at(&a, &foot, &q), angle_at(&q, &foot, &a));
        let solved = trig::solve_right_triangle(RightGivens::legs(len(leg_a), len(leg_b)), unit()).unwrap();
        for (s, m) in [(solved.c.value(), c), (solved.alpha.radians(), alpha), (solved.beta.radians(), beta)] {
            bond = bond.max((s - m).abs());
        }
        let measured = RightTriangle { a: len(leg_a), b: len(leg_b), c: len(c), alpha: ang(alpha), beta: ang(beta), k: unit() };
        residual = residual.max(measured.residuals().max());
        done += 1;
    }
    outcome(bond < 1e-9 && residual < 1e-10, format!("solver vs measured max err {bond:.2e} (tol 1e-9), relations on measured {residual:.2e} (tol 1e-10), 10^3 triangles"))
}

fn metric_sanity() -> Outcome {
    let mut rng = rng(3);
    let (mut additive, mut diameter) = (0f64, 0f64);
    for _ in 0..1000 {
        let g = random_line(&mut rng);
        let mut ts = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
        ts.sort_by(f64::total_cmp);
        let [p, q, r] = ts.map(|t| along(&g, t));
        additive = additive.max((dist(&p, &r).unwrap() - dist(&p, &q).unwrap() - dist(&q, &r).unwrap()).abs());
        let t: f64 = rng.gen_range(0.0..0.99);
        let d = dist(&DiskPoint::origin(), &DiskPoint::new(t, 0.0).unwrap()).unwrap();
        diameter = diameter.max((d - ((1.0 + t) / (1.0 - t)).ln()).abs());
    }
    outcome(additive < 1e-12 && diameter < 1e-12, format!("additivity max err {additive:.2e}, diameter formula max err {diameter:.2e} (tol 1e-12)"))
}

/// `∮ 2 Im(conj(z) dz) / (1 - |z|^2)` along the Euclidean path from `a` to `b`
/// on the circle orthogonal to the boundary; its exterior derivative is the
/// area element `4 dx dy / (1 - |z|^2)^2`, so summing it round a triangle
/// integrates that element over the enclosed region.
fn edge_integral(a: Complex64, b: Complex64) -> f64 {
    const PANELS: usize = 2000;
    let form = |z: Complex64, dz: Complex64| 2.0 * (z.conj() * dz).im / (1.0 - z.norm_sqr());
    // centre c of the orthogonal circle: 2 Re(conj(c) p) = 1 + |p|^2 for p = a, b
    let det = a.re * b.im - a.im * b.re;
    let path: Box<dyn Fn(f64) -> (Complex64, Complex64)> = if det.abs() < 1e-12 {
        Box::new(move |t| (a + (b - a) * t, b - a))
    } else {
        let (ra, rb) = ((1.0 + a.norm_sqr()) / 2.0, (1.0 + b.norm_sqr()) / 2.0);
        let c = Complex64::new((ra * b.im - rb * a.im) / det, (a.re * rb - b.re * ra) / det);
        let radius = (c.norm_sqr() - 1.0).sqrt();
        let (pa, pb) = ((a - c).arg(), (b - c).arg());
        let mut sweep = pb - pa;
        if sweep > PI {
            sweep -= 2.0 * PI;
        } else if sweep < -PI {
            sweep += 2.0 * PI;
        }
        Box::new(move |t| {
            let e = Complex64::from_polar(radius, pa + sweep * t);
            (c + e, Complex64::i() * e * sweep)
        })
    };
    // composite Simpson on [0, 1]
    let h = 1.0 / PANELS as f64;
    let mut sum = 0.0;
    for i in 0..=PANELS {
        let w = if i == 0 || i == PANELS { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
        let (z, dz) = path(i as f64 * h);
        sum += w * form(z, dz);
    }
    sum * h / 3.0
}

fn integrated_area(vs: [DiskPoint; 3]) -> f64 {
    let z = vs.map(|v| v.z());
    (edge_integral(z[0], z[1]) + edge_integral(z[1], z[2]) + edge_integral(z[2], z[0])).abs()
}

fn defect(vs: &[DiskPoint; 3]) -> f64 {
    PI - angle_at(&vs[0], &vs[1], &vs[2]) - angle_at(&vs[1], &vs[2], &vs[0]) - angle_at(&vs[2], &vs[0], &vs[1])
}

fn defect_is_area() -> Outcome {
    let mut rng = rng(4);
    let mut worst = 0f64;
    let mut done = 0;
    while done < 200 {
        let vs = [(); 3].map(|_| DiskPoint::polar(rng.gen_range(0.0..2.5), rng.gen_range(0.0..2.0 * PI)).unwrap());
        let d = defect(&vs);
        if d < 1e-3 {
            continue;
        }
        worst = worst.max(rel(integrated_area(vs), d));
        done += 1;
    }
    // equilateral triangles whose vertices run off to the boundary
    let mut last = 0.0;
    let mut monotone = true;
    let mut ideal_gap = f64::INFINITY;
    for radius in [2.0, 4.0, 8.0, 12.0, 16.0] {
        let vs = [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0].map(|t| DiskPoint::polar(radius, t).unwrap());
        let area = defect(&vs);
        monotone &= area > last;
        last = area;
        ideal_gap = (PI - area).abs();
    }
    outcome(
        worst < 1e-6 && monotone && ideal_gap < 1e-4,
        format!("defect vs integrated area max rel err {worst:.2e} (tol 1e-6, 200 triangles); near-ideal area within {ideal_gap:.2e} of pi (tol 1e-4)"),
    )
}

fn fitted_order(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

fn euclidean_limits() -> Outcome {
    let r = 1.0;
    let ratios = [1e2, 1e3, 1e4];
    let departures: Vec<[f64; 4]> = ratios
        .iter()
        .map(|&q| {
            let k = Curvature::new(q * r).unwrap();
            let circ = trig::circle_circumference(len(r), k).unwrap().value() / (2.0 * PI * r) - 1.0;
            let area = trig::circle_area(len(r), k).unwrap().value() / (PI * r * r) - 1.0;
            let vol = trig::sphere_measures(len(r), k).unwrap().volume.value() / (4.0 / 3.0 * PI * r.powi(3)) - 1.0;
            let t = trig::solve_right_triangle(RightGivens::legs(len(r), len(r)), k).unwrap();
            let sum = t.alpha.radians() + t.beta.radians() - FRAC_PI_2;
            [circ.abs(), area.abs(), vol.abs(), sum.abs()]
        })
        .collect();
    let xs: Vec<f64> = ratios.iter().map(|q| 1.0 / q).collect();
    let orders: Vec<f64> = (0..4).map(|i| fitted_order(&xs, &departures.iter().map(|d| d[i]).collect::<Vec<_>>())).collect();
    let pass = orders.iter().all(|o| (o - 2.0).abs() <= 0.1);
    outcome(
        pass,
        format!(
            "fitted orders circumference {:.4}, area {:.4}, volume {:.4}, angle sum {:.4} (want 2 +- 0.1)",
            orders[0], orders[1], orders[2], orders[3]
        ),
    )
}

fn parallel_construction() -> Outcome {
    let mut rng = rng(6);
    let (mut end_err, mut angle_err) = (0f64, 0f64);
    let mut all_passed = true;
    let mut done = 0;
    while done < 100 {
        let start = IdealPoint::new(rng.gen_range(0.0..2.0 * PI)).unwrap();
        let end = IdealPoint::new(rng.gen_range(0.0..2.0 * PI)).unwrap();
        if start.separation(&end) < 0.2 {
            continue;
        }
        let d = DiskPoint::polar(rng.gen_range(0.05..2.5), rng.gen_range(0.0..2.0 * PI)).unwrap();
        if Geodesic::from_ideal(start, end).unwrap().signed_distance(&d).abs() < 0.05 {
            continue;
        }
        let built = recipes::construct_parallel(start, end, d).unwrap();
        all_passed &= built.run.report.all_passed();
        end_err = end_err.max(built.value.end().separation(&end));
        let st = &built.run.state;
        let (b, m) = (st.point("B").unwrap(), st.ideal("M").unwrap());
        let bdm = measure_angle(&d, &b.into(), &m.into()).unwrap();
        let want = trig::angle_of_parallelism(len(dist(&d, &b).unwrap()), unit()).unwrap().radians();
        angle_err = angle_err.max((bdm - want).abs());
        done += 1;
    }
    outcome(
        all_passed && end_err < 1e-9 && angle_err < 1e-9,
        format!("ray end vs target max err {end_err:.2e}, angle BDM vs parallel angle max err {angle_err:.2e} (tol 1e-9, 100 instances)"),
    )
}

fn ratio_distance() -> Outcome {
    let built = recipes::construct_ratio_distance().unwrap();
    let err = (built.value - 2f64.ln()).abs();
    outcome(built.run.report.all_passed() && err < 1e-9, format!("measured {} vs ln 2, err {err:.2e} (tol 1e-9)", built.value))
}

fn polygon_angles_and_defect(state: &ConstructionState, n: usize) -> (Vec<f64>, f64) {
    let mut names = vec!["P0".to_string(), "V".to_string()];
    names.extend((2..n).map(|j| format!("P{j}")));
    let vs: Vec<DiskPoint> = names.iter().map(|s| state.point(s).unwrap()).collect();
    let angles: Vec<f64> = (0..n).map(|j| angle_at(&vs[j], &vs[(j + n - 1) % n], &vs[(j + 1) % n])).collect();
    let defect = (n as f64 - 2.0) * PI - angles.iter().sum::<f64>();
    (angles, defect)
}

fn quadrature_end_to_end() -> Outcome {
    let s = quadrature_radius::<f64>(Rational::from_integer(1), unit()).unwrap().value();
    let s_err = (s - 2.0 * 0.5f64.asinh()).abs();
    let circle = trig::circle_area(len(s), unit()).unwrap().value();

    let square = run(&recipes::quadrature_script(Rational::from_integer(1)).unwrap(), ConstructionState::new()).unwrap();
    let (angles, area) = polygon_angles_and_defect(&square.state, 4);
    let angle_err = angles.iter().map(|a| (a - FRAC_PI_4).abs()).fold(0.0, f64::max);
    let (area_err, circle_err) = ((area - PI).abs(), (area - circle).abs());

    let hexagon = run(&recipes::quadrature_script(Rational::from_integer(3)).unwrap(), ConstructionState::new()).unwrap();
    let (hex_angles, hex_area) = polygon_angles_and_defect(&hexagon.state, 6);
    let hex_angle_err = hex_angles.iter().map(|a| (a - PI / 6.0).abs()).fold(0.0, f64::max);
    let hex_err = (hex_area - 3.0 * PI).abs();

    let scripts_ok = square.report.all_passed() && hexagon.report.all_passed();
    outcome(
        scripts_ok && s_err < 1e-15 && angle_err < 1e-9 && area_err < 1e-8 && circle_err < 1e-8 && hex_angle_err < 1e-9 && hex_err < 1e-8,
        format!(
            "square angles err {angle_err:.2e} (tol 1e-9), area - pi {area_err:.2e}, area - circle(s) {circle_err:.2e}, hexagon area - 3pi {hex_err:.2e} (tol 1e-8)"
        ),
    )
}

/// Euler's totient by trial division.
fn totient(mut n: i64) -> i64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

fn planner_targets() -> Outcome {
    let mut failures = Vec::new();
    for (q, n, v) in [(1, 4, Rational::new(1, 4)), (3, 6, Rational::new(1, 6)), (2, 5, Rational::new(1, 5))] {
        match planner::plan(Rational::from_integer(q)) {
            Ok(p) if p.n == n && p.v_over_pi == v => {}
            other => failures.push(format!("plan({q}) = {other:?}")),
        }
    }
    if planner::admissible_tan2z(Rational::new(1, 7)) != Ok(false) {
        failures.push("1/7 admissible".into());
    }
    // Fermat primes found by primality testing 2^(2^m) + 1, then every
    // power of two times a product of distinct ones
    let fermat: Vec<i64> = (0..6).map(|m| (1i64 << (1 << m)) + 1).filter(|&f| is_prime(f)).collect();
    let mut known = Vec::new();
    for mask in 0..(1u32 << fermat.len()) {
        let odd: i64 = fermat.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, f)| f).product();
        let mut m = odd;
        while m <= 100 {
            known.push(m);
            m *= 2;
        }
    }
    known.sort_unstable();
    for n in 1..=100i64 {
        let by_subsets = known.binary_search(&n).is_ok();
        let by_totient = totient(n).count_ones() == 1;
        if planner::gauss_constructible(n) != by_subsets || by_subsets != by_totient {
            failures.push(format!("n = {n}"));
        }
    }
    let polygons = known.iter().filter(|&&n| n >= 3).count();
    if known.len() != 26 || polygons != 24 {
        failures.push(format!("{} constructible n <= 100 ({polygons} polygons)", known.len()));
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("plans (4, pi/4), (6, pi/6), (5, pi/5); 1/7 inadmissible; constructibility agrees for n <= 100 ({} values, {polygons} with n >= 3)", known.len())
        } else {
            failures.join("; ")
        },
    )
}

fn derivative_links() -> Outcome {
    let mut rng = rng(10);
    let mut worst = [0f64; 4];
    for _ in 0..100 {
        let k = Curvature::new(rng.gen_range(0.5..4.0)).unwrap();
        let h = 1e-6 * k.k();
        let x: f64 = rng.gen_range(0.1..5.0) * k.k();
        let p: f64 = rng.gen_range(0.1..3.0);
        let diff = |f: &dyn Fn(f64) -> f64| (f(x + h) - f(x - h)) / (2.0 * h);
        let region = |q: f64| trig::equidistant_region_measures(len(p), len(q), k).unwrap();
        let pairs = [
            (diff(&|r| trig::circle_area(len(r), k).unwrap().value()), trig::circle_circumference(len(x), k).unwrap().value()),
            (diff(&|q| region(q).area.value()), trig::equidistant_arc_length(len(p), len(x), k).unwrap().value()),
            (diff(&|q| region(q).revolution_volume.value()), region(x).revolution_surface.value()),
            (diff(&|r| trig::sphere_measures(len(r), k).unwrap().volume.value()), trig::sphere_measures(len(x), k).unwrap().surface.value()),
        ];
        for (w, (fd, exact)) in worst.iter_mut().zip(pairs) {
            *w = w.max(rel(fd, exact));
        }
    }
    outcome(
        worst.iter().all(|&w| w < 1e-6),
        format!(
            "max rel err: area/circumference {:.2e}, strip/equidistant arc {:.2e}, revolution volume/surface {:.2e}, ball/sphere {:.2e} (tol 1e-6, 100 points)",
            worst[0], worst[1], worst[2], worst[3]
        ),
    )
}

type Check = fn() -> Outcome;

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("angle-of-parallelism identities", parallelism_identities),
        ("disk right triangles vs solver", disk_right_triangles),
        ("cross-ratio metric sanity", metric_sanity),
        ("area equals defect", defect_is_area),
        ("Euclidean limits", euclidean_limits),
        ("parallel construction", parallel_construction),
        ("ratio-distance construction", ratio_distance),
        ("quadrature end to end", quadrature_end_to_end),
        ("quadrature planner", planner_targets),
        ("derivative links", derivative_links),
    ];
    let clock = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.pass);
        println!("criterion {:>2} {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    let secs = clock.elapsed().as_secs_f64();
    println!("{} of {} criteria passed in {secs:.1}s", criteria.len() - failed, criteria.len());
    if failed > 0 || secs > 60.0 {
        std::process::exit(1);
    }
}
