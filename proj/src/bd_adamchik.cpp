#include "multisine/bd_adamchik.hpp"

#include <vector>

#include "multisine/constants.hpp"
#include "multisine/errors.hpp"
#include "multisine/kurokawa.hpp"
#include "multisine/series.hpp"

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

// log D(x) on (-1, 1) via the eta-coefficient series.
HPReal log_d_series(const HPReal& x, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    HPReal xx = x.rounded_to(wp);
    HPReal acc = xx;
    HPReal xpow = xx * xx;  // x^m at m=2
    const HPReal ax = abs(xx);
    const HPReal tol = pow10(-(prec.working_digits() + 4), wp);
    for (long m = 2; m < 2000000; ++m) {
        HPReal term = eta_int(m - 1, wp) * xpow / m;
        acc = (m % 2 == 1) ? acc + term : acc - term;  // (-1)^(m+1)
        // eta <= 1: tail bounded by |x|^(m+1) / ((m+1)(1-|x|))
        HPReal bound = abs(xpow) * ax / ((m + 1) * (1L - ax));
        if (bound < tol) break;
        xpow = xpow * xx;
    }
    return acc;
}

// log |D(x)| on (-2, -1): the first J factors directly, the rest as an
// eta-tail series (the tails are evaluated by Euler-Maclaurin, so no
// cancellation gets amplified by the growing |x|^m).
HPReal log_abs_d_split(const HPReal& x, Precision prec) {
    const long J = 12;
    const Precision wp = prec.with_extra_guard(10);
    HPReal xx = x.rounded_to(wp);
    HPReal acc = xx;
    for (long k = 1; k <= J; ++k) {
        HPReal f = 1L + xx / k;
        if (f.sign() < 0) f = -f;
        HPReal b = k * log(f) - xx;
        acc = (k % 2 == 1) ? acc + b : acc - b;
    }
    const HPReal tol = pow10(-(prec.working_digits() + 4), wp);
    HPReal xpow = xx * xx;
    for (long m = 2; m < 100000; ++m) {
        HPReal term = detail::eta_tail(HPReal(m - 1, wp), J, wp) * xpow / m;
        acc = (m % 2 == 1) ? acc + term : acc - term;
        if (abs(term) < tol) break;
        xpow = xpow * xx;
    }
    return acc;
}

}  // namespace

HPReal d_func(const HPReal& x, Precision prec) {
    const Precision wp = prec.with_extra_guard(8);
    if (x <= HPReal(-2L, wp))
        throw domain_error(x.equals_long(-2) ? "d_func: pole at x = -2"
                                             : "d_func: implemented only for x > -2");
    if (x.is_zero()) return HPReal(1L, prec);
    if (x.equals_long(-1)) return HPReal(prec);  // k=1 factor vanishes, exact 0

    if (x < HPReal(-1L, wp))  // (-2, -1): single negative factor, so D < 0
        return (-exp(log_abs_d_split(x, prec))).rounded_to(prec).checked("d_func");
    if (abs(x) < HPReal(1L, wp))
        return exp(log_d_series(x, prec)).rounded_to(prec).checked("d_func");

    // x >= 1: accelerated alternating sum over b_k = k log(1+x/k) - x
    HPReal xx = x.rounded_to(wp);
    HPReal s = sum_alternating(
        [&](long k) { return k * log1p(xx / k, wp) - xx; }, 1, wp);
    return exp(xx + s).rounded_to(prec).checked("d_func");
}

HPReal d_ratio(const HPReal& x, Precision prec) {
    const Precision wp = prec.with_extra_guard(8);
    if (abs(x) >= HPReal(2L, wp)) throw domain_error("d_ratio: requires |x| < 2");
    if (x.is_zero()) return HPReal(1L, prec);
    if (x.equals_long(1) || x.equals_long(-1))
        throw domain_error("d_ratio: pole/zero pair at |x| = 1 (S2(1) = 0)");
    HPReal xx = x.rounded_to(wp);
    HPReal s2_half = s_r(2, xx / 2L, wp);
    HPReal s2_full = abs(xx) < HPReal(1L, wp) ? s_r(2, xx, wp) : detail::s2_extended(xx, wp);
    HPReal v = exp(xx) * pow(s2_half, 4L) / s2_full;
    return v.rounded_to(prec).checked("d_ratio");
}

HPReal kachi_tzermias_catalan(Parity parity, Precision prec) {
    const Precision wp = prec.with_extra_guard(5);
    HPReal odd = d_ratio(HPReal(1L, wp) / 2L, wp);
    if (parity == Parity::odd) return odd.rounded_to(prec);
    // (1 - 2/(4n+3))^-(2n+1) -> e bridges the even truncation to the odd one
    return (odd / constant("e", wp)).rounded_to(prec).checked("kachi_tzermias_catalan");
}

RegularizedProductValue kachi_tzermias_zeta3(Precision prec, long max_n) {
    if (max_n < 64) throw domain_error("kachi_tzermias_zeta3: max_n too small");
    const Precision wp = prec.with_extra_guard(8);
    const int order = 4;

    // cumulative log sums at the odd truncations 2n+1, captured at max_n/2^j;
    // each (even, odd) pair of terms decays like 1/k while single terms grow
    std::vector<long> nodes;
    for (int j = order; j >= 0; --j) nodes.push_back(max_n >> j);

    std::vector<HPReal> hs, ys;
    HPReal acc(wp);
    long k = 0;
    HPReal quarter = HPReal(1L, wp) / 4L;
    for (long n : nodes) {
        while (k < 2 * n + 1) {
            ++k;
            // -1/4 + (-1)^(k+1) (k(k+1)/2) log(1 + 1/k)
            HPReal t = HPReal(k * (k + 1) / 2, wp) * log1p(1L / HPReal(k, wp), wp);
            acc = acc - quarter + ((k % 2 == 1) ? t : -t);
        }
        hs.push_back(1L / HPReal(n, wp));
        ys.push_back(acc);
    }
    std::vector<HPReal> diag = detail::neville_diagonal(hs, ys);
    HPReal lim = diag.back();
    int achieved = agree_digits(exp(lim), exp(diag[diag.size() - 2]));
    return {exp(lim).rounded_to(prec).checked("kachi_tzermias_zeta3"), achieved,
            RegularizedProductValue::Method::accelerated_product};
}

HPReal e_func(const HPReal& x, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    if (x.is_zero()) return HPReal(1L, prec);
    HPReal ax = abs(x);
    HPReal half("0.5", wp);
    if (ax == half) return HPReal(prec);  // k=1 factor vanishes, exact 0
    if (ax > half) throw domain_error("e_func: requires |x| <= 1/2");

    HPReal w = 4L * ax.rounded_to(wp) * ax.rounded_to(wp);
    HPReal acc(wp);
    HPReal wpow = w * w;  // w^m at m=2
    const HPReal tol = pow10(-(prec.working_digits() + 4), wp);
    for (long m = 2; m < 2000000; ++m) {
        acc = acc - wpow * eta_int(2 * m - 2, wp) / m;
        HPReal bound = wpow * w / ((m + 1) * (1L - w));
        if (bound < tol) break;
        wpow = wpow * w;
    }
    return exp(acc).rounded_to(prec).checked("e_func");
}

HPReal adamchik_shifted_product(Precision prec) {
    const Precision wp = prec.with_extra_guard(8);
    // log = 1 + sum_{k>=2} (-1)^(k+1) [k^2 log(1-1/k^2) + 1]
    HPReal s = sum_alternating(
        [&](long k) {
            HPReal kk(k, wp);
            return kk * kk * log1p(-1L / (kk * kk), wp) + 1L;
        },
        2, wp);
    return exp(1L + s).rounded_to(prec).checked("adamchik_shifted_product");
}

HPReal gamma_alpha(const HPReal& alpha, const HPReal& z, Precision prec) {
    const Precision wp = prec.with_extra_guard(8);
    if (alpha <= HPReal(-1L, wp)) throw domain_error("gamma_alpha: requires alpha > -1");
    if (abs(z) >= HPReal(1L, wp)) throw domain_error("gamma_alpha: requires |z| < 1");
    if (alpha.is_zero()) return HPReal(prec);  // every term vanishes

    HPReal a = alpha.rounded_to(wp);
    HPReal zz = z.rounded_to(wp);
    if (zz.is_zero()) return (a - log1p(a, wp)).rounded_to(prec).checked("gamma_alpha");

    // |alpha - n log(1+alpha/n)| <= C / n with C = alpha^2/2 * max(1, 1/(1+alpha))
    HPReal C = a * a / 2L;
    if (a.sign() < 0) C = C / (1L + a);
    HPReal az = abs(zz);

    SeriesSpec spec;
    spec.term = [a, zz, wp](long n) {
        return pow(zz, n - 1) * (a - n * log1p(a / n, wp));
    };
    spec.tail_bound = [C, az, wp](long N) { return C * pow(az, N) / (1L - az); };
    spec.n0 = 1;
    HPReal v = sum_series(spec, wp);
    return v.rounded_to(prec).checked("gamma_alpha");
}

}  // namespace multisine
