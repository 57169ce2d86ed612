//! Acceptance run: one [PASS]/[FAIL] line per criterion, then the
//! dominance-conjecture harness. Exits non-zero if any criterion fails.

use gaugediag::completion::{is_complete, outer_symmetric_support, supercompletion};
use gaugediag::convex2d::{GaugeEvaluator, Point2, Polygon};
use gaugediag::diagrams::{
    anchor_records, boundary_curves, dominance_conjecture, output, sample_diagram, sample_with_reports,
    verify_inequalities, GaugeClass,
};
use gaugediag::diameters::diameter;
use gaugediag::families::{self, min_equality_pair, random_hull, reuleaux, s_lambda, substream, t_alpha, z_lambda, Normalization};
use gaugediag::lp::{LinearProgram, LpStatus};
use gaugediag::radii::{circumradius, inradius};
use gaugediag::symmetry::{difference_body, symmetrize};
use gaugediag::{GaugeContext, Mode};
use rand::Rng;
use std::time::Instant;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass_if(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Collects the worst absolute error against a tolerance.
struct Worst {
    tol: f64,
    err: f64,
    at: String,
}

impl Worst {
    fn new(tol: f64) -> Self {
        Worst {
            tol,
            err: 0.0,
            at: String::new(),
        }
    }

    fn check(&mut self, what: impl std::fmt::Display, got: f64, want: f64) {
        let e = (got - want).abs();
        if !(e <= self.err) {
            self.err = e;
            self.at = format!("{what}: got {got:.12} want {want:.12}");
        }
    }

    fn ok(&self) -> bool {
        self.err <= self.tol
    }

    fn outcome(&self, extra: &str) -> Outcome {
        pass_if(self.ok(), format!("max err {:.2e} (tol {:.0e}){extra}; worst {}", self.err, self.tol, self.at))
    }
}

fn tri_ctx() -> GaugeContext {
    GaugeContext::new(&families::triangle()).expect("triangle gauge")
}

fn c1_family_values() -> Outcome {
    let ctx = tri_ctx();
    let mut w = Worst::new(1e-7);
    w.check("s(T)", ctx.asymmetry, 2.0);
    w.check("rho_MAX", ctx.factors(Mode::Max).rho, 0.75);
    w.check("delta_MAX", ctx.factors(Mode::Max).delta, 1.0);
    w.check("rho_HM", ctx.factors(Mode::Hm).rho, 1.125);
    w.check("delta_HM", ctx.factors(Mode::Hm).delta, 1.5);
    w.check("delta_MIN", ctx.factors(Mode::Min).delta, 1.5);
    w.outcome("")
}

fn c2_t_alpha() -> Outcome {
    let ctx = tri_ctx();
    let mut w = Worst::new(1e-7);
    for a in [1.0 / 3.0, 0.4, 0.5, 0.6, 2.0 / 3.0] {
        let k = t_alpha(a).unwrap();
        w.check(format!("R(T_{a:.3})"), circumradius(&k, &ctx.gauge).unwrap().rho, 1.0);
        w.check(format!("D_MAX(T_{a:.3})"), diameter(&k, &ctx, Mode::Max).unwrap().value, 1.0);
        w.check(format!("r(T_{a:.3})"), inradius(&k, &ctx.gauge).unwrap().rho, 1.0 - 3.0 * a + 3.0 * a * a);
    }
    w.outcome("")
}

fn c3_s_lambda() -> Outcome {
    let ctx = tri_ctx();
    let mut w = Worst::new(1e-7);
    for i in 0..=5 {
        let l = 0.5 + 0.1 * i as f64;
        let k = s_lambda(l).unwrap();
        w.check(format!("D_MAX(S_{l:.1})"), diameter(&k, &ctx, Mode::Max).unwrap().value, l + 0.5);
        w.check(format!("r(S_{l:.1})"), inradius(&k, &ctx.gauge).unwrap().rho, l * (1.0 - l));
        let rep = verify_inequalities(&k, &ctx, Mode::Max).unwrap();
        let q = rep.get("(D/R-1/2)(3/2-D/R) <= r/R").expect("triangle quadratic present");
        w.check(format!("quadratic margin S_{l:.1}"), q.margin, 0.0);
    }
    w.outcome("")
}

fn c4_symmetrizations() -> Outcome {
    let t = families::triangle();
    let s = |m| symmetrize(&t, m).unwrap();
    let hm = s(Mode::Hm).hausdorff(&s(Mode::Max).scale_by(2.0 / 3.0));
    let min = s(Mode::Min).hausdorff(&s(Mode::Am).scale_by(2.0 / 3.0));
    pass_if(
        hm <= 1e-7 && min <= 1e-7,
        format!("d_H(T_HM, 2/3 T_MAX) = {hm:.2e}, d_H(T_MIN, 2/3 T_AM) = {min:.2e} (tol 1e-7)"),
    )
}

fn c5_reuleaux() -> Outcome {
    let ctx = GaugeContext::new(&reuleaux(256).unwrap()).unwrap();
    let s = ctx.asymmetry;
    let f = ctx.factors(Mode::Hm);
    let mut w = Worst::new(2e-3);
    w.check("s(RT)", s, 1.36603);
    w.check("delta_HM(RT)", f.delta, 1.0930);
    w.check("rho_HM(RT)", f.rho, 1.0245);
    let strict = f.delta < (s + 1.0) / 2.0;
    let mut o = w.outcome(&format!("; delta_HM {:.6} < (s+1)/2 {:.6}: {strict}", f.delta, (s + 1.0) / 2.0));
    o.ok &= strict;
    o
}

fn c6_completion() -> Outcome {
    let ctx = tri_ctx();
    let tmax = ctx.sym(Mode::Max).clone();
    let a = is_complete(&tmax, &ctx, Mode::Max).complete;
    let b = !is_complete(&ctx.gauge, &ctx, Mode::Max).complete;
    let sup = supercompletion(&ctx.gauge, &ctx, Mode::Hm).unwrap();
    let d_sup = sup.hausdorff(&tmax);
    let z = GaugeContext::new(&z_lambda(0.5).unwrap()).unwrap();
    let (_, cout) = outer_symmetric_support(&z.gauge).unwrap();
    let zmax = z.sym(Mode::Max);
    let contains = cout.contains(zmax, 1e-7);
    let gap = cout.hausdorff(zmax);
    pass_if(
        a && b && d_sup <= 1e-7 && contains && gap >= 1e-3,
        format!(
            "T_MAX complete: {a}; T not complete: {b}; d_H(T^sup_HM, T_MAX) = {d_sup:.2e}; \
             Z_1/2: C_MAX in C_out: {contains}, d_H = {gap:.4}"
        ),
    )
}

/// Random (K, C) pair `i`: a centred gauge and a body in general position.
fn random_pair(seed: u64, i: u64) -> (Polygon, GaugeContext) {
    let mut rng = substream(seed, i);
    let nc = rng.gen_range(3..=10);
    let nk = rng.gen_range(3..=12);
    let c = random_hull(rng.gen(), nc, Normalization::None).unwrap();
    let k = random_hull(rng.gen(), nk, Normalization::None).unwrap();
    (k, GaugeContext::new(&c).unwrap())
}

fn c7_oracle() -> Outcome {
    let n = 10_000u64;
    let mut err: f64 = 0.0;
    let mut chain: f64 = f64::INFINITY;
    for i in 0..n {
        let (k, ctx) = random_pair(0xacc7, i);
        let mut d = [0.0; 4];
        for m in Mode::ALL {
            let sym = ctx.sym(m);
            let ev = GaugeEvaluator::new(sym).unwrap();
            let v = k.vertices();
            let mut pairs: f64 = 0.0;
            for a in v {
                for b in v {
                    pairs = pairs.max(ev.norm(*b - *a));
                }
            }
            let lp = 2.0 * circumradius(&difference_body(&k), sym).unwrap().rho;
            err = err.max((lp - pairs).abs());
            d[m.index()] = pairs;
        }
        // MIN, HM, AM, MAX order
        chain = chain.min(d[0] - d[1]).min(d[1] - d[2]).min(d[2] - d[3]);
    }
    pass_if(
        err <= 1e-7 && chain >= -1e-9,
        format!("{n} pairs x 4 modes: max |LP - pairs| = {err:.2e} (tol 1e-7); min chain slack = {chain:.2e} (tol -1e-9)"),
    )
}

fn c8_jung() -> Outcome {
    let n = 10_000u64;
    let mut worst = [f64::INFINITY; 4];
    for i in 0..n {
        let (k, ctx) = random_pair(0x10ee, i);
        let rr = circumradius(&k, &ctx.gauge).unwrap().rho;
        let d = |c: &GaugeContext, m| diameter(&k, c, m).unwrap().value;
        worst[0] = worst[0].min((d(&ctx, Mode::Max) - rr) / rr);
        worst[2] = worst[2].min((d(&ctx, Mode::Hm) - 9.0 / 8.0 * rr) / rr);
        worst[3] = worst[3].min((d(&ctx, Mode::Min) - 1.5 * rr) / rr);
        // move the origin to a random interior point
        let mut rng = substream(0x10ef, i);
        let v = ctx.gauge.vertices();
        let wts: Vec<f64> = v.iter().map(|_| rng.gen::<f64>()).collect();
        let tot: f64 = wts.iter().sum();
        let p = v.iter().zip(&wts).fold(Point2::ORIGIN, |acc, (q, w)| acc + *q * (0.98 * w / tot));
        let un = GaugeContext::uncentered(&ctx.gauge.translate(-p)).unwrap();
        let ru = circumradius(&k, &un.gauge).unwrap().rho;
        worst[1] = worst[1].min((d(&un, Mode::Max) - 2.0 / 3.0 * ru) / ru);
    }
    let mut w = Worst::new(1e-7);
    for s in [1.0, 1.25, 1.5, 1.75, 2.0] {
        let (k, c) = min_equality_pair(s).unwrap();
        let ctx = GaugeContext::uncentered(&c).unwrap();
        let rr = circumradius(&k, &ctx.gauge).unwrap().rho;
        w.check(format!("D_MIN/2R at s={s}"), diameter(&k, &ctx, Mode::Min).unwrap().value / (2.0 * rr), 0.75);
    }
    let bounds_ok = worst.iter().all(|m| *m >= -1e-7);
    let mut o = w.outcome(&format!(
        "; {n} pairs, min normalised slack: D_MAX>=R {:.2e}, D_MAX>=2R/3 (uncentred) {:.2e}, D_HM>=9R/8 {:.2e}, D_MIN>=3R/2 {:.2e}",
        worst[0], worst[1], worst[2], worst[3]
    ));
    o.ok &= bounds_ok;
    o
}

fn figure_anchors(mode: Mode) -> Vec<(&'static str, f64, f64)> {
    match mode {
        Mode::Am => vec![("S", 1.0, 1.0), ("-S", 0.25, 0.5), ("L_D", 0.0, 1.0), ("L_w", 0.0, 1.0)],
        Mode::Max => vec![
            ("S", 1.0, 1.0),
            ("-S", 0.25, 0.5),
            ("S_m", 0.5, 0.5),
            ("L_D", 0.0, 1.0),
            ("L_w", 0.0, 0.75),
        ],
        Mode::Hm => vec![
            ("S", 1.0, 1.5),
            ("-S", 0.25, 0.75),
            ("S_m", 0.5, 0.75),
            ("L_D", 0.0, 1.5),
            ("L_w", 0.0, 1.125),
        ],
        Mode::Min => vec![("S", 1.0, 1.5), ("-S", 0.25, 0.75), ("L_D", 0.0, 1.5), ("L_w", 0.0, 1.5)],
    }
}

fn c9_diagrams() -> Outcome {
    let ctx = tri_ctx();
    let mut w = Worst::new(1e-7);
    let mut violations = 0usize;
    let mut samples = 0usize;
    let mut deterministic = true;
    for m in Mode::ALL {
        let recs = anchor_records(m).unwrap();
        for (name, x, y) in figure_anchors(m) {
            let r = recs.iter().find(|r| r.body_id == name).expect("anchor present");
            w.check(format!("{m} {name} x"), r.x, x);
            w.check(format!("{m} {name} y"), r.y, y);
        }
        let all = sample_with_reports(&ctx, m, 10_000, 9).unwrap();
        samples += all.len();
        violations += all.iter().filter(|s| !s.report.all_satisfied()).count();
        let a = sample_diagram(&ctx, m, 500, 42).unwrap();
        let b = sample_diagram(&ctx, m, 500, 42).unwrap();
        let curves = boundary_curves(m, GaugeClass::Triangle);
        deterministic &= output::to_csv(&a) == output::to_csv(&b);
        deterministic &= output::to_svg(&a, &curves, m.as_str()) == output::to_svg(&b, &curves, m.as_str());
    }
    let mut o = w.outcome(&format!(
        "; {violations} violations in {samples} samples; CSV/SVG byte-identical: {deterministic}"
    ));
    o.ok &= violations == 0 && deterministic;
    o
}

/// Minimum of `c.x` over `a x <= b` by enumerating every vertex.
fn lp_oracle(c: [f64; 3], rows: &[([f64; 3], f64)]) -> Option<f64> {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let mut best: Option<f64> = None;
    let n = rows.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let m = [rows[i].0, rows[j].0, rows[k].0];
                let b = [rows[i].1, rows[j].1, rows[k].1];
                let d = det(m);
                if d.abs() < 1e-12 {
                    continue;
                }
                let mut x = [0.0; 3];
                for (col, xc) in x.iter_mut().enumerate() {
                    let mut mc = m;
                    for r in 0..3 {
                        mc[r][col] = b[r];
                    }
                    *xc = det(mc) / d;
                }
                let feasible = rows
                    .iter()
                    .all(|(a, rhs)| a[0] * x[0] + a[1] * x[1] + a[2] * x[2] <= rhs + 1e-9 * (1.0 + rhs.abs()));
                if feasible {
                    let v = c[0] * x[0] + c[1] * x[1] + c[2] * x[2];
                    best = Some(best.map_or(v, |b: f64| b.min(v)));
                }
            }
        }
    }
    best
}

fn c10_lp() -> Outcome {
    let mut w = Worst::new(1e-8);
    let mut status_errors = 0;
    for i in 0..1000u64 {
        let mut rng = substream(0x1b, i);
        let c = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let mut rows: Vec<([f64; 3], f64)> = Vec::new();
        for d in 0..3 {
            let mut e = [0.0; 3];
            e[d] = 1.0;
            rows.push((e, rng.gen_range(1.0..10.0)));
            e[d] = -1.0;
            rows.push((e, rng.gen_range(1.0..10.0)));
        }
        for _ in 0..rng.gen_range(3..=12) {
            let a = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
            rows.push((a, rng.gen_range(-0.5..2.0)));
        }
        let mut lp = LinearProgram::new(&c).unwrap();
        for (a, b) in &rows {
            lp.add_constraint(a, *b).unwrap();
        }
        let sol = lp.solve(i).unwrap();
        match (lp_oracle(c, &rows), sol.status) {
            (Some(v), LpStatus::Optimal) => w.check(format!("lp {i}"), sol.value, v),
            (None, LpStatus::Infeasible) => {}
            _ => status_errors += 1,
        }
    }
    let mut o = w.outcome(&format!("; 1000 LPs, status mismatches {status_errors}"));
    o.ok &= status_errors == 0;
    o
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("exact triangle values", c1_family_values),
        ("T_alpha sweep", c2_t_alpha),
        ("S_lambda sweep", c3_s_lambda),
        ("symmetrization identities", c4_symmetrizations),
        ("Reuleaux approximation", c5_reuleaux),
        ("completion suite", c6_completion),
        ("diameter oracle equivalence", c7_oracle),
        ("Jung bounds", c8_jung),
        ("diagram regeneration", c9_diagrams),
        ("LP engine", c10_lp),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        if !o.ok {
            failed += 1;
        }
        println!("[{tag}] {} {name} ({:.1?}): {}", i + 1, t.elapsed(), o.detail);
    }
    let t = Instant::now();
    match dominance_conjecture(200, 200, 1, 1e-7) {
        Ok(c) => {
            let tag = if c.counterexamples.is_empty() { "PASS" } else { "FAIL" };
            println!(
                "[{tag}] {} triangle dominance ({:.1?}): {} gauges x {} bodies, min margin {:.2e}, {} counterexamples",
                c.label,
                t.elapsed(),
                c.gauges,
                c.bodies_per_gauge,
                c.min_margin,
                c.counterexamples.len()
            );
            if let Some(x) = c.counterexamples.first() {
                println!("{}", serde_json::to_string(x).expect("serialisable"));
                failed += 1;
            }
        }
        Err(e) => {
            println!("[FAIL] CONJECTURED triangle dominance: harness error {e}");
            failed += 1;
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
