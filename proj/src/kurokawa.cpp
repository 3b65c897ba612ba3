#include "multisine/kurokawa.hpp"

#include "multisine/constants.hpp"
#include "multisine/errors.hpp"
#include "multisine/polylog.hpp"

namespace multisine {

namespace {

HPReal pow10(long e, Precision p) {
    HPReal r(p);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

HPReal log1p(const HPReal& x, Precision p) {
    HPReal r(p);
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r.checked("log1p");
}

void check_order(int r) {
    if (r < 1 || r > 6) throw domain_error("s_r: order must satisfy 1 <= r <= 6");
}

}  // namespace

HPReal weierstrass_p(int r, const HPReal& z, Precision prec) {
    if (r < 1) throw domain_error("weierstrass_p: requires r >= 1");
    if (z.equals_long(1))
        throw domain_error("weierstrass_p: zero of P_r at z = 1 (log undefined)");
    const Precision wp = prec.with_extra_guard(5);
    HPReal zz = z.rounded_to(wp);
    HPReal expo(wp);
    HPReal zp(1L, wp);
    for (int i = 1; i <= r; ++i) {
        zp = zp * zz;
        expo = expo + zp / static_cast<long>(i);
    }
    return ((1L - zz) * exp(expo)).rounded_to(prec).checked("weierstrass_p");
}

namespace detail {

HPReal log_s_r_series(int r, const HPReal& z, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    const int pw = prec.working_digits();
    HPReal zz = z.rounded_to(wp);
    HPReal z2 = zz * zz;
    HPReal acc = pow(zz, r - 1) / static_cast<long>(r - 1);
    HPReal zpow = pow(zz, r + 1);  // z^(r-1+2m) at m=1
    const HPReal tol = pow10(-(pw + 4), wp);
    const HPReal one_minus = 1L - z2;
    for (long m = 1; m < 2000000; ++m) {
        const long j = r - 1 + 2 * m;
        acc = acc - 2L * zeta_int(2 * m, wp) * zpow / j;
        // zeta(2m) < 2, so the tail is under 4 |z|^(j+2) / ((j+2)(1 - z^2))
        HPReal bound = 4L * abs(zpow) * z2 / ((j + 2) * one_minus);
        if (bound < tol) break;
        zpow = zpow * z2;
    }
    return acc;
}

HPReal log_s_r_product(int r, const HPReal& z, long N, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    HPReal zz = z.rounded_to(wp);
    const int sign_flip = (r - 1) % 2;  // P_{r-1}(-z/n)^((-1)^(r-1))
    HPReal acc = pow(zz, r - 1) / static_cast<long>(r - 1);
    for (long n = 1; n <= N; ++n) {
        HPReal w = zz / n;
        // log P_{r-1}(w) = log(1-w) + sum_{i<r} w^i/i
        HPReal lp = log1p(-w, wp);
        HPReal lm = log1p(w, wp);  // log P at -w
        HPReal wp_pow(1L, wp), wm_pow(1L, wp);
        for (int i = 1; i <= r - 1; ++i) {
            wp_pow = wp_pow * w;
            wm_pow = wm_pow * (-w);
            lp = lp + wp_pow / static_cast<long>(i);
            lm = lm + wm_pow / static_cast<long>(i);
        }
        HPReal pair = sign_flip ? lp - lm : lp + lm;
        acc = acc + pow(HPReal(n, wp), r - 1) * pair;
    }
    // tail over n > N from the 1/n expansion, zeta tails by Euler-Maclaurin
    const HPReal tol = pow10(-(prec.working_digits() + 4), wp);
    HPReal z2 = zz * zz;
    HPReal zpow = pow(zz, r + 1);
    for (long m = 1; m < 100000; ++m) {
        const long j = r - 1 + 2 * m;
        HPReal term = 2L * zeta_tail(HPReal(2 * m, wp), N, wp) * zpow / j;
        acc = acc - term;
        if (abs(term) < tol) break;
        zpow = zpow * z2;
    }
    return acc;
}

HPReal log_s2(const HPReal& z, Precision prec) {
    const Precision wp = prec.with_extra_guard(5);
    HPReal half("0.5", wp);
    if (z.sign() <= 0 || z >= HPReal(1L, wp)) throw domain_error("log_s2: requires 0 < z < 1");
    if (z < half) return log_s_r_series(2, z, prec);
    HPReal pi_v = constant("pi", wp);
    HPReal zz = z.rounded_to(wp);
    return zz * log(2L * sin(pi_v * zz)) + cl2(2L * pi_v * zz, wp) / (2L * pi_v);
}

HPReal s2_extended(const HPReal& z, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    if (z.is_zero()) return HPReal(1L, prec);
    if (z.sign() < 0) return 1L / s2_extended(-z, wp).rounded_to(prec);
    if (z.equals_long(1) || abs(z) >= HPReal(2L, wp))
        throw domain_error("s2_extended: requires |z| < 2, z != 1");
    if (z < HPReal(1L, wp)) return s_r(2, z, prec);

    // z in (1, 2): first J factors directly (n=1 is negative), tail as series
    const long J = 12;
    HPReal zz = z.rounded_to(wp);
    HPReal acc = zz;  // e^z prefactor
    int sign = -1;    // ((1-z)/(1+z))^1 < 0, factors n >= 2 positive
    for (long n = 1; n <= J; ++n) {
        HPReal num = 1L - zz / n;
        if (num.sign() < 0) num = -num;
        acc = acc + n * (log(num) - log1p(zz / n, wp)) + 2L * zz;
    }
    const HPReal tol = pow10(-(prec.working_digits() + 4), wp);
    HPReal z2 = zz * zz;
    HPReal zpow = zz * z2;  // z^3
    for (long m = 3; m < 100000; m += 2) {
        HPReal term = 2L * detail::zeta_tail(HPReal(m - 1, wp), J, wp) * zpow / m;
        acc = acc - term;
        if (abs(term) < tol) break;
        zpow = zpow * z2;
    }
    return (sign * exp(acc)).rounded_to(prec).checked("s2_extended");
}

HPReal log_c3_series(const HPReal& x, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    HPReal xx = x.rounded_to(wp);
    HPReal w = 4L * xx * xx;
    HPReal acc(wp);
    HPReal wpow = w * w;  // w^k at k=2
    const HPReal tol = pow10(-(prec.working_digits() + 4), wp);
    const HPReal one_minus = 1L - w;
    for (long k = 2; k < 2000000; ++k) {
        acc = acc - wpow * lambda_odd_int(2 * k - 2, wp) / (4 * k);
        // lambda < 2: tail under w^(k+1) / (2 (k+1) (1-w))
        HPReal bound = wpow * w / (2 * (k + 1) * one_minus);
        if (bound < tol) break;
        wpow = wpow * w;
    }
    return acc;
}

HPReal log_c3_product(const HPReal& x, long odd_cutoff, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    if (odd_cutoff % 2 == 0) ++odd_cutoff;
    HPReal xx = x.rounded_to(wp);
    HPReal x2 = xx * xx;
    HPReal acc(wp);
    for (long q = 1; q <= odd_cutoff; q += 2) {
        HPReal qq(q, wp);
        HPReal f = log1p(-4L * x2 / (qq * qq), wp);
        acc = acc + x2 + qq * qq * f / 4L;
    }
    const HPReal tol = pow10(-(prec.working_digits() + 4), wp);
    HPReal w = 4L * x2;
    HPReal wpow = w * w;
    for (long k = 2; k < 100000; ++k) {
        HPReal term = wpow * detail::odd_tail(HPReal(2 * k - 2, wp), odd_cutoff, wp) / (4 * k);
        acc = acc - term;
        if (abs(term) < tol) break;
        wpow = wpow * w;
    }
    return acc;
}

}  // namespace detail

HPReal s_r(int r, const HPReal& z, Precision prec, Route route) {
    check_order(r);
    const Precision wp = prec.with_extra_guard(5);
    if (r == 1) {
        HPReal pi_v = constant("pi", wp);
        return (2L * sin(pi_v * z.rounded_to(wp))).rounded_to(prec).checked("s_r");
    }
    if (z.is_zero()) return HPReal(1L, prec);
    if (z.equals_long(1)) return HPReal(prec);  // vanishing n=1 factor, exact 0
    if (z.equals_long(-1)) {
        if (r % 2 == 1) return HPReal(prec);  // even function of z
        throw domain_error("s_r: pole at z = -1 for even r (reciprocal of a zero)");
    }
    if (abs(z) > HPReal(1L, wp))
        throw domain_error("s_r: argument outside the implemented domain |z| <= 1");
    if (z.sign() < 0) {
        HPReal pos = s_r(r, -z, prec, route);
        return r % 2 == 1 ? pos : (1L / pos).rounded_to(prec);
    }

    switch (route) {
        case Route::log_series:
            return exp(detail::log_s_r_series(r, z, prec)).rounded_to(prec).checked("s_r");
        case Route::product:
            return exp(detail::log_s_r_product(r, z, 10000, prec)).rounded_to(prec).checked("s_r");
        case Route::closed_form:
            if (r != 2) throw domain_error("s_r: closed-form route exists only for r = 2");
            return s2_closed_form(z, prec);
        case Route::automatic:
            break;
    }

    HPReal half("0.5", wp);
    if (r == 2 && z >= half) return s2_closed_form(z, prec);
    if (r == 3 && z >= half) {
        // duplication S3(z) = S3(z/2)^4 C3(z/2)^4
        HPReal h = z.rounded_to(wp) / 2L;
        HPReal v = pow(s_r(3, h, wp), 4L) * pow(c3(h, wp), 4L);
        return v.rounded_to(prec).checked("s_r");
    }
    return exp(detail::log_s_r_series(r, z, prec)).rounded_to(prec).checked("s_r");
}

HPReal s2_closed_form(const HPReal& z, Precision prec) {
    const Precision wp = prec.with_extra_guard(8);
    if (z.sign() <= 0 || z >= HPReal(1L, wp))
        throw domain_error("s2_closed_form: requires 0 < z < 1");
    HPReal pi_v = constant("pi", wp);
    HPReal zz = z.rounded_to(wp);
    HPReal lg = zz * log(2L * sin(pi_v * zz)) + cl2(2L * pi_v * zz, wp) / (2L * pi_v);
    return exp(lg).rounded_to(prec).checked("s2_closed_form");
}

HPReal c3(const HPReal& x, Precision prec, Route route) {
    const Precision wp = prec.with_extra_guard(5);
    if (x.is_zero()) return HPReal(1L, prec);
    if (x.sign() < 0) return c3(-x, prec, route);  // even
    HPReal half("0.5", wp);
    if (x == half) return HPReal(prec);  // first factor vanishes, exact 0
    if (x > half) throw domain_error("c3: requires |x| <= 1/2");
    switch (route) {
        case Route::product:
            return exp(detail::log_c3_product(x, 19999, prec)).rounded_to(prec).checked("c3");
        case Route::closed_form:
            throw domain_error("c3: no closed-form route");
        case Route::automatic:
        case Route::log_series:
            break;
    }
    return exp(detail::log_c3_series(x, prec)).rounded_to(prec).checked("c3");
}

HPReal holcombe_product(Precision prec) {
    const Precision wp = prec.with_extra_guard(8);
    const int pw = prec.working_digits();
    HPReal acc(wp);
    const HPReal tol = pow10(-(pw + 4), wp);
    for (long k = 2; k < 100000; ++k) {
        // (zeta(2k-2) - 1)/k; absolute accuracy is what matters here
        HPReal term = (zeta_int(2 * k - 2, wp) - 1L) / k;
        acc = acc - term;
        // zeta(s)-1 <= 2^(1-s): analytic stop independent of the computed term
        if (3 - 2 * k < static_cast<long>(-3.33 * (pw + 5))) break;
    }
    return exp(acc).rounded_to(prec).checked("holcombe_product");
}

HPReal s3_derivative_at_1(Precision prec) {
    const Precision wp = prec.with_extra_guard(5);
    HPReal h = holcombe_product(wp);
    HPReal v = -2L * exp(HPReal(3L, wp) / 2L) * h;
    return v.rounded_to(prec).checked("s3_derivative_at_1");
}

}  // namespace multisine
