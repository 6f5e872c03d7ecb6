//! Cross-module consistency tests: scaling-series identities, coarse
//! determinant-vs-limit bounds, derivative cross-oracles and the
//! histogram-adjustment Taylor check.

use num_rational::BigRational;
use softedge::checks::tracy_widom;
use softedge::expansion::{
    eval_expansion, histogram_adjust, make_scaling, EnsembleKind,
};
use softedge::fredholm::{det_airy, det_finite, FiniteKernel};
use softedge::painleve::Beta;
use softedge::polyalg::{rat, RatPoly};

fn brat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Substitute `x -> 2 h s` (Hermite) or `x -> 4 a h s` (Laguerre) into a
/// truncated turning-point series and divide by the stretching factor.
fn stretch(series: &[(RatPoly, u32)], step: &RatPoly) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (coeff, k) in series {
        acc = acc.add(&coeff.mul(&step.pow(*k)));
    }
    acc
}

#[test]
fn hermite_scaling_series_identity() {
    // The quartic truncation of the Hermite turning-point series,
    // 2^{-1/3} zeta = x + x^2/10 - 2 x^3/175 + 37 x^4/15750 (x = t - 1),
    // stretched with x = 2 h s and divided by 2h, must reproduce
    // s + (s^2/5) h - (8 s^3/175) h^2 + (148 s^4/7875) h^3 exactly.
    let h = RatPoly::var("h");
    let s = RatPoly::var("s");
    let step = h.mul(&s).scale(&rat(2, 1));
    let series = vec![
        (RatPoly::one(), 1u32),
        (RatPoly::from_rat(1, 10), 2),
        (RatPoly::from_rat(-2, 175), 3),
        (RatPoly::from_rat(37, 15750), 4),
    ];
    let lhs = stretch(&series, &step)
        .div_exact(&h.scale(&rat(2, 1)))
        .expect("divisible by 2h");
    let rhs = s
        .clone()
        .add(&s.pow(2).mul(&h).scale(&rat(1, 5)))
        .add(&s.pow(3).mul(&h.pow(2)).scale(&rat(-8, 175)))
        .add(&s.pow(4).mul(&h.pow(3)).scale(&rat(148, 7875)));
    assert_eq!(lhs, rhs);
}

#[test]
fn laguerre_scaling_series_identity_at_rational_parameters() {
    // Laguerre analogue with exact rational a: the stretched quartic
    // truncation must reproduce the tau-polynomial display
    // s - ((2tau-1)/5) s^2 h + ((43tau^2-18tau-8)/175) s^3 h^2
    //   - ((1384tau^3-551tau^2-212tau-148)/7875) s^4 h^3
    // with tau = 4a/(a+1)^2, verified exactly at five distinct tau.
    let h = RatPoly::var("h");
    let s = RatPoly::var("s");
    for a_pair in [(2i64, 1i64), (3, 1), (4, 1), (5, 1), (6, 1)] {
        let a = brat(a_pair.0, a_pair.1);
        let one = BigRational::from_integer(1.into());
        let ap1 = a.clone() + one.clone();
        // Series coefficients of ((a+1)^{4/3}/a^{1/3}) zeta in x = t - t_1.
        let c2 = (one.clone() - brat(6, 1) * a.clone() + a.clone() * a.clone())
            / (brat(20, 1) * a.clone() * ap1.clone() * ap1.clone());
        let a2 = a.clone() * a.clone();
        let a3 = a2.clone() * a.clone();
        let a4 = a3.clone() * a.clone();
        let a5 = a4.clone() * a.clone();
        let a6 = a5.clone() * a.clone();
        let ap1_2 = ap1.clone() * ap1.clone();
        let ap1_4 = ap1_2.clone() * ap1_2.clone();
        let ap1_6 = ap1_4.clone() * ap1_2.clone();
        let c3 = -(one.clone() + brat(13, 1) * a.clone() - brat(62, 1) * a2.clone()
            + brat(13, 1) * a3.clone()
            + a4.clone())
            / (brat(350, 1) * a2.clone() * ap1_4.clone());
        let c4 = (brat(37, 1)
            + brat(434, 1) * a.clone()
            + brat(3607, 1) * a2.clone()
            - brat(15724, 1) * a3.clone()
            + brat(3607, 1) * a4.clone()
            + brat(434, 1) * a5.clone()
            + brat(37, 1) * a6.clone())
            / (brat(126000, 1) * a3.clone() * ap1_6);
        // Stretch x = 4 a h s, divide by 4 a h.
        let step = h.mul(&s).scale(&(brat(4, 1) * a.clone()));
        let series = vec![
            (RatPoly::one(), 1u32),
            (RatPoly::constant(c2), 2),
            (RatPoly::constant(c3), 3),
            (RatPoly::constant(c4), 4),
        ];
        let lhs = stretch(&series, &step)
            .div_exact(&h.scale(&(brat(4, 1) * a.clone())))
            .expect("divisible by 4ah");
        // tau = 4a/(a+1)^2, exact.
        let tau = brat(4, 1) * a.clone() / (ap1.clone() * ap1.clone());
        let t2 = tau.clone() * tau.clone();
        let t3 = t2.clone() * tau.clone();
        let k1 = -(brat(2, 1) * tau.clone() - one.clone()) / brat(5, 1);
        let k2 = (brat(43, 1) * t2.clone() - brat(18, 1) * tau.clone() - brat(8, 1))
            / brat(175, 1);
        let k3 = -(brat(1384, 1) * t3 - brat(551, 1) * t2 - brat(212, 1) * tau.clone()
            - brat(148, 1))
            / brat(7875, 1);
        let rhs = s
            .clone()
            .add(&s.pow(2).mul(&h).scale(&k1))
            .add(&s.pow(3).mul(&h.pow(2)).scale(&k2))
            .add(&s.pow(4).mul(&h.pow(3)).scale(&k3));
        assert_eq!(lhs, rhs, "a = {}/{}", a_pair.0, a_pair.1);
    }
}

#[test]
fn coarse_determinant_limit_bound() {
    // |E_2(n; mu + sigma t) - F_2(t)| <= 0.5 h_n on t in [-4, 3], n >= 10.
    // The constant covers sup |E_{2,1}| ~ 0.36 on this window (the
    // deviation is h E_{2,1}(t) to leading order) plus margin for the
    // next order.
    let tw = tracy_widom();
    for n in [10u32, 20, 50] {
        let scaling = make_scaling(EnsembleKind::Gaussian, Beta::Two, n as f64, None).unwrap();
        let mut worst = 0.0f64;
        let mut t = -4.0;
        while t <= 3.0 {
            let det = det_finite(FiniteKernel::HermiteN(n), scaling.to_unscaled(t))
                .unwrap()
                .value;
            worst = f64::max(worst, (det - tw.f2(t).unwrap()).abs());
            t += 0.25;
        }
        assert!(worst <= 0.5 * scaling.h, "n = {n}: {worst} vs {}", 0.5 * scaling.h);
    }
}

#[test]
fn richardson_derivative_of_airy_determinant() {
    // d/dt det_airy at t = -1 agrees with F_2' from the Painlevé side.
    let tw = tracy_widom();
    let delta = 1e-2;
    let e = |t: f64| det_airy(t).unwrap().value;
    let deriv = (e(-1.0 - 2.0 * delta) - 8.0 * e(-1.0 - delta) + 8.0 * e(-1.0 + delta)
        - e(-1.0 + 2.0 * delta))
        / (12.0 * delta);
    let reference = tw.eval(Beta::Two, 1, -1.0).unwrap();
    assert!(
        (deriv - reference).abs() < 1e-6,
        "{deriv} vs {reference}"
    );
}

#[test]
fn central_difference_matches_adjusted_density_expansion() {
    // (F(t + H/2) - F(t - H/2))/H of the m = 3 CDF expansion equals the
    // histogram-adjusted density expansion up to O(h^4): the deviation
    // must shrink like h^4 between two matrix dimensions.
    let tw = tracy_widom();
    let eta = 3.0;
    let deviation = |n: f64| -> f64 {
        let scaling = make_scaling(EnsembleKind::Gaussian, Beta::Two, n, None).unwrap();
        let h = scaling.h;
        let width = eta * h;
        let adjusted = histogram_adjust(EnsembleKind::Gaussian, Beta::Two, eta);
        let mut worst = 0.0f64;
        for i in 0..=20 {
            let t = -3.0 + 0.2 * i as f64;
            let cdf = |tt: f64| {
                eval_expansion(EnsembleKind::Gaussian, Beta::Two, n, None, 3, tt, false, tw)
                    .unwrap()
            };
            let central = (cdf(t + 0.5 * width) - cdf(t - 0.5 * width)) / width;
            let model = tw.eval(Beta::Two, 1, t).unwrap()
                + h * adjusted.eval(1, tw, t, 0.0, true).unwrap()
                + h * h * adjusted.eval(2, tw, t, 0.0, true).unwrap()
                + h * h * h * adjusted.eval(3, tw, t, 0.0, true).unwrap();
            worst = f64::max(worst, (central - model).abs());
        }
        worst
    };
    let dev_small = deviation(20.0);
    let dev_large = deviation(80.0);
    let h_small = make_scaling(EnsembleKind::Gaussian, Beta::Two, 20.0, None).unwrap().h;
    let h_large = make_scaling(EnsembleKind::Gaussian, Beta::Two, 80.0, None).unwrap().h;
    let predicted = (h_large / h_small).powi(4);
    let ratio = dev_large / dev_small;
    assert!(
        ratio / predicted < 3.0 && predicted / ratio < 3.0,
        "deviations {dev_small:.3e} -> {dev_large:.3e}, ratio {ratio:.3e} vs {predicted:.3e}"
    );
}

#[test]
fn tilde_corrections_match_their_displayed_closed_forms() {
    // The full transformed-GUE coefficient set must reproduce the displayed
    // closed forms: F_2 d_1 = -(3/10) F_2'',
    // F_2 d_2 = -(141/350) F_2' + (39/175) t F_2'' + (9/200) F_2^(4),
    // F_2 d_3 = (2216/7875) t F_2' - (568/2625) t^2 F_2''
    //           + (10403/31500) F_2''' - (117/1750) t F_2^(4)
    //           - (9/2000) F_2^(6).
    use softedge::fredholm::{finite_rank_correction, CorrectionCoeffs, ResolventTable};
    let tw = tracy_widom();
    let coeffs = CorrectionCoeffs::gue_tilde();
    for &t in &[-2.0f64, -0.5, 1.0] {
        let table = ResolventTable::build(t).unwrap();
        let (d1, d2, d3) = finite_rank_correction(&coeffs, &table);
        let f = |k: usize| tw.eval(Beta::Two, k, t).unwrap();
        let e1 = -3.0 / 10.0 * f(2);
        let e2 = -141.0 / 350.0 * f(1) + 39.0 / 175.0 * t * f(2) + 9.0 / 200.0 * f(4);
        let e3 = 2216.0 / 7875.0 * t * f(1) - 568.0 / 2625.0 * t * t * f(2)
            + 10403.0 / 31500.0 * f(3)
            - 117.0 / 1750.0 * t * f(4)
            - 9.0 / 2000.0 * f(6);
        let f2 = f(0);
        assert!((f2 * d1 - e1).abs() < 1e-6, "d1 at t = {t}");
        assert!((f2 * d2 - e2).abs() < 1e-6, "d2 at t = {t}");
        assert!((f2 * d3 - e3).abs() < 1e-6, "d3 at t = {t}");
    }
}

#[test]
fn eta_to_zero_recovers_unadjusted_terms() {
    let tw = tracy_widom();
    let adjusted = histogram_adjust(EnsembleKind::Laguerre, Beta::One, 1e-9);
    for j in 1..=3usize {
        for &t in &[-2.0, 0.5] {
            let adj = adjusted.eval(j, tw, t, 0.6, false).unwrap();
            let base = adjusted.base[j - 1].eval(tw, t, 0.6, false).unwrap();
            assert!((adj - base).abs() < 1e-16, "j = {j}, t = {t}");
        }
    }
    // And the adjustment on E_2 is exactly (eta^2/24) F''.
    let eta = 2.5f64;
    let adjusted = histogram_adjust(EnsembleKind::Gaussian, Beta::Two, eta);
    for &t in &[-2.0, 0.0, 1.0] {
        let delta = adjusted.eval(2, tw, t, 0.0, false).unwrap()
            - adjusted.base[1].eval(tw, t, 0.0, false).unwrap();
        let expect = eta * eta / 24.0 * tw.eval(Beta::Two, 2, t).unwrap();
        assert!((delta - expect).abs() < 1e-12, "t = {t}");
    }
}
