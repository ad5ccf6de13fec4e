//! Special functions and constants.
//!
//! `pi`, `euler_gamma`, `zeta`, `erf`, `erfc`, `dawson` and `poly_eval` follow the
//! rounding contract of the elementary functions. The others are computed with guard
//! digits and rounded to nearest, without a directed-rounding guarantee.

mod bernoulli;
mod bessel;
mod cheb;
mod constants;
mod ei;
mod erf;
mod gamma;

pub use bernoulli::{bernoulli, zeta, BernoulliTable, PrecisionProfile};
pub use bessel::bessel_j;
pub use cheb::{cheb_eval, cheb_transform, poly_eval, ChebCoeffs, Parity};
pub use constants::{euler_gamma, pi, pi_gauss_legendre};
pub use ei::{ei, li};
pub use erf::{dawson, erf, erfc};
pub use gamma::{gamma, gamma_rational, ln_gamma};

use crate::context::Context;
use crate::elem::working_digits;

/// `ln B` as a float, for sizing series and thresholds.
pub(crate) fn ln_base(ctx: &Context) -> f64 {
    (ctx.base() as f64).ln()
}

/// A working context with room for an error budget of `budget` ulps.
pub(crate) fn work_for(ctx: &Context, budget: u128) -> Context {
    ctx.work(working_digits(ctx, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;
    use crate::error::MpError;
    use crate::repr::MpFloat;
    use crate::testing::{check, num};

    #[test]
    fn constants() {
        check("pi", pi, "3.14159265358979323846264338327950288419716939937510582097494", 0.6, true);
        check("pi gl", pi_gauss_legendre, "3.14159265358979323846264338327950288419716939937510582097494", 1.0, false);
        check("euler", euler_gamma, "0.577215664901532860606512090082402431042159335939923598805767", 0.6, true);
    }

    #[test]
    fn gamma_family() {
        check("gamma 1/3", |c| gamma_rational(c, 1, 3), "2.67893853470774763365569294097467764412868937795730110095043", 1.0, false);
        check("gamma 2.5", |c| gamma(c, &num(c, "2.5")), "1.32934038817913702047362561250585888709816209209179034616036", 1.0, false);
        check("gamma -1.25", |c| gamma(c, &num(c, "-1.25")), "3.92133344788856846441311457076124968592396559394582595593638", 1.0, false);
        check("gamma x", |c| gamma(c, &num(c, "0.703125")), "1.29313367549060578913410801397238883295200733625721985486651", 1.0, false);
        check("gamma 30", |c| gamma(c, &num(c, "30")), "8841761993739701954543616000000", 0.5, true);
        check("ln_gamma", |c| ln_gamma(c, &num(c, "100")), "359.134205369575398776044010460286909612621718085629728775613", 1.0, false);
        let c = Context::new(10, 20, 100).unwrap();
        assert!(matches!(gamma(&c, &num(&c, "-3")), Err(MpError::Pole)));
        assert!(matches!(gamma_rational(&c, 0, 5), Err(MpError::Pole)));
    }

    #[test]
    fn error_functions() {
        check("erf", |c| erf(c, &num(c, "0.703125")), "0.679956702139343225336676439318975815887175702071341097108148", 0.6, true);
        check("erf neg", |c| erf(c, &num(c, "-1.25")), "-0.922900128256458230136523481197281140423601438702228329793668", 0.6, true);
        check("erfc", |c| erfc(c, &num(c, "2.5")), "0.000406952017444958939564215739974912720348677403713420139120779", 0.6, true);
        check("erfc 10", |c| erfc(c, &num(c, "10")), "2.08848758376254475700078629495778861156081811932116372701221E-45", 0.6, true);
        check("dawson", |c| dawson(c, &num(c, "0.703125")), "0.511388671001350189774251804262252864994355438044486420748941", 0.6, true);
        check("dawson 2.5", |c| dawson(c, &num(c, "2.5")), "0.22308372216743548112691731825103054876746787965152249763289", 0.6, true);
    }

    #[test]
    fn exponential_integral() {
        check("ei", |c| ei(c, &num(c, "0.703125")), "1.07389117445265089832100109889189834879326071100347120741263", 1.0, false);
        check("ei neg", |c| ei(c, &num(c, "-1.25")), "-0.146413372525910176693258502290393223574770116080392853997755", 1.0, false);
        check("ei 30", |c| ei(c, &num(c, "30")), "368973209407.274197064006328910845746996836126897272511838344", 1.0, false);
        check("li", |c| li(c, &num(c, "2.5")), "1.66729466750632395135968597094453798725715704864805020986878", 1.0, false);
    }

    #[test]
    fn bessel() {
        check("j0", |c| bessel_j(c, 0, &num(c, "2.5")), "-0.0483837764681979963272877788512034336318110200697737609317815", 1.0, false);
        check("j3", |c| bessel_j(c, 3, &num(c, "0.703125")), "0.00702094134000761683425056779553082069465038818437355069891436", 1.0, false);
        check("j1 neg", |c| bessel_j(c, 1, &num(c, "-1.25")), "-0.510623260319880467069474837274910375352924050139633057168856", 1.0, false);
        check("j10 30", |c| bessel_j(c, 10, &num(c, "30")), "-0.129876893998588768185947434764953430519569798326075137800818", 1.0, false);
    }

    #[test]
    fn zeta_and_bernoulli() {
        check("zeta 2", |c| zeta(c, 2), "1.64493406684822643647241516664602518921894990120679843773556", 0.6, true);
        check("zeta 3", |c| zeta(c, 3), "1.20205690315959428539973816151144999076498629234049888179227", 0.6, true);
        check("zeta 11", |c| zeta(c, 11), "1.00049418860411946455870228252646993646860643575820861711914", 0.6, true);
        check("B12", |c| bernoulli(c, 6)?.get(c, 6), "-0.253113553113553113553113553113553113553113553113553113553114", 1.0, false);
        check("B30", |c| bernoulli(c, 15)?.get(c, 15), "601580873.900642368384303868174835916771400642368384303868175", 1.0, false);
    }

    #[test]
    fn chebyshev_round_trip() {
        let c = Context::new(10, 30, 100).unwrap();
        let coeffs = [3i64, 0, -5, 1, 4, 0, 2];
        let power = ChebCoeffs { c: coeffs.iter().map(|&k| arith::from_i64(&c, k).unwrap()).collect(), parity: Parity::Full };
        let cheb = cheb_transform(&c, &power).unwrap();
        for s in ["-0.9", "-0.25", "0", "0.5", "1"] {
            let x = num(&c, s);
            let p = poly_eval(&c, &x, &coeffs).unwrap();
            let q = cheb_eval(&c, &cheb, &x).unwrap();
            assert!(crate::programs::ulps_apart(&c, &q, &p) <= 4.0, "{s}");
        }
        assert!(poly_eval(&c, &MpFloat::zero(), &coeffs).unwrap() == arith::from_i64(&c, 3).unwrap());
    }
}
