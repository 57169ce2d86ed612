mod common;

use common::{close, pts};
use gaugediag::families::triangle;
use gaugediag::radii::{circumradius, inradius};
use gaugediag::symmetry::{factors, symmetrize, verify_firey_chain};
use gaugediag::{GaugeContext, GeomError, Mode, Point2, Polygon};
use proptest::prelude::*;

#[test]
fn triangle_symmetrizations() {
    let t = triangle();
    let tmax = symmetrize(&t, Mode::Max).unwrap();
    assert_eq!(tmax.len(), 6);
    for v in tmax.vertices() {
        assert!(close(v.norm(), 1.0, 1e-12));
    }
    assert!(symmetrize(&t, Mode::Hm).unwrap().approx_eq(&tmax.scale_by(2.0 / 3.0), 1e-9));
    let f = factors(&t, Mode::Max).unwrap();
    assert!(close(f.rho, 0.75, 1e-12) && close(f.delta, 1.0, 1e-12));
    let f = factors(&t, Mode::Hm).unwrap();
    assert!(close(f.rho, 1.125, 1e-12) && close(f.delta, 1.5, 1e-12));
    assert!(close(factors(&t, Mode::Min).unwrap().delta, 1.5, 1e-12));
}

#[test]
fn square_is_fixed_by_every_mode() {
    let sq = Polygon::from_points(&pts(&[(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)])).unwrap();
    let ctx = GaugeContext::new(&sq).unwrap();
    for m in Mode::ALL {
        assert!(ctx.sym(m).approx_eq(&sq, 1e-12), "{m}");
        let f = ctx.factors(m);
        assert!(close(f.rho, 1.0, 1e-12) && close(f.delta, 1.0, 1e-12));
    }
    let rep = verify_firey_chain(&Mode::ALL.map(|m| ctx.sym(m).clone())).unwrap();
    assert!(rep.holds && close(rep.r_min_hm, 1.0, 1e-12) && close(rep.r_am_max, 1.0, 1e-12));
}

#[test]
fn firey_chain_for_triangle() {
    let ctx = GaugeContext::new(&triangle()).unwrap();
    assert!(ctx.firey.holds);
    assert!(close(ctx.firey.r_min_hm, 1.0, 1e-9) && close(ctx.firey.r_am_max, 1.0, 1e-9));
}

#[test]
fn origin_must_be_interior() {
    let off = triangle().translate(Point2::new(2.0, 0.0));
    assert_eq!(symmetrize(&off, Mode::Min).unwrap_err(), GeomError::OriginNotInterior);
    assert_eq!(symmetrize(&off, Mode::Hm).unwrap_err(), GeomError::OriginNotInterior);
}

#[test]
fn mode_order_and_names() {
    assert!(Mode::Min < Mode::Hm && Mode::Hm < Mode::Am && Mode::Am < Mode::Max);
    for m in Mode::ALL {
        assert_eq!(m.as_str().parse::<Mode>().unwrap(), m);
    }
    assert!("geo".parse::<Mode>().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symmetrizations_are_symmetric(ctx in common::gauge(10)) {
        for m in Mode::ALL {
            let s = ctx.sym(m);
            prop_assert!(s.approx_eq(&s.negate(), 1e-7));
        }
    }

    #[test]
    fn firey_chain_holds(ctx in common::gauge(10)) {
        prop_assert!(ctx.firey.holds);
        prop_assert!(close(ctx.firey.r_min_hm, 1.0, 1e-7));
        prop_assert!(close(ctx.firey.r_am_max, 1.0, 1e-7));
    }

    #[test]
    fn symmetrizations_commute_with_linear_maps(ctx in common::gauge(10), m in common::matrix()) {
        let lc = ctx.gauge.linear_map(m).unwrap();
        for mode in Mode::ALL {
            let a = symmetrize(&lc, mode).unwrap();
            let b = ctx.sym(mode).linear_map(m).unwrap();
            prop_assert!(a.approx_eq(&b, 1e-7 * (1.0 + b.scale())), "{}", mode);
        }
    }

    #[test]
    fn factor_bounds(ctx in common::gauge(10)) {
        let s = ctx.asymmetry;
        let tol = 1e-7;
        let f = ctx.factors(Mode::Max);
        prop_assert!(close(f.rho, (s + 1.0) / (2.0 * s), tol) && close(f.delta, 1.0, tol));
        let f = ctx.factors(Mode::Hm);
        let q = (s + 1.0) * (s + 1.0) / (4.0 * s);
        prop_assert!(1.0 - tol <= f.rho && f.rho <= q + tol && q <= f.delta + tol && f.delta <= (s + 1.0) / 2.0 + tol);
        let f = ctx.factors(Mode::Min);
        prop_assert!(1.0 - tol <= f.rho && f.rho <= (s + 1.0) / 2.0 + tol && close(f.delta, (s + 1.0) / 2.0, tol));
    }

    #[test]
    fn factors_are_radii_between_sym_and_am(ctx in common::gauge(10)) {
        let am = ctx.sym(Mode::Am);
        for m in Mode::ALL {
            let f = ctx.factors(m);
            prop_assert!(f.rho <= f.delta + 1e-12);
            prop_assert!(close(f.rho, inradius(am, ctx.sym(m)).unwrap().rho, 1e-9));
            prop_assert!(close(f.delta, circumradius(am, ctx.sym(m)).unwrap().rho, 1e-9));
        }
    }
}
