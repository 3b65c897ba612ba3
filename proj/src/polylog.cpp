#include "multisine/polylog.hpp"

#include <map>
#include <mutex>
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

// Cumulative log-factorial table, one per quantized precision.
class LogFactorialCache {
  public:
    HPReal log_factorial(long m, Precision prec) {
        const int qd = ((prec.working_digits() + 49) / 50) * 50;
        std::lock_guard<std::mutex> lock(mu_);
        auto& tab = tables_[qd];
        const Precision cp(qd, 10);
        if (tab.empty()) tab.push_back(HPReal(cp));  // log 0! = 0
        while (static_cast<long>(tab.size()) <= m) {
            long j = static_cast<long>(tab.size());
            tab.push_back(tab.back() + log(HPReal(j, cp)));
        }
        return tab[static_cast<size_t>(m)].rounded_to(prec);
    }

  private:
    std::mutex mu_;
    std::map<int, std::vector<HPReal>> tables_;
};

LogFactorialCache& lf_cache() {
    static LogFactorialCache c;
    return c;
}

}  // namespace

HPReal log_gamma_half_integer(long k, Precision prec) {
    if (k < 1) throw domain_error("log_gamma_half_integer: requires k >= 1");
    const Precision wp = prec.with_extra_guard(5);
    if (k % 2 == 0) return lf_cache().log_factorial(k / 2, wp).rounded_to(prec);
    const long m = (k - 1) / 2;
    HPReal r = lf_cache().log_factorial(2 * m + 2, wp) -
               (m + 1) * log(HPReal(4L, wp)) - lf_cache().log_factorial(m + 1, wp) +
               log(constant("pi", wp)) / 2L;
    return r.rounded_to(prec);
}

HPReal cl2(const HPReal& theta, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    const HPReal pi_v = constant("pi", wp);
    const HPReal two_pi = 2L * pi_v;

    // periodic reduction into [0, 2 pi), then oddness into [0, pi]
    HPReal t = theta.rounded_to(wp);
    HPReal k = floor(t / two_pi);
    t = t - k * two_pi;
    int sign = 1;
    if (t > pi_v) {
        t = two_pi - t;
        sign = -1;
    }
    if (t.is_zero()) return HPReal(prec);

    // Cl2(t) = t - t log t + sum_{k>=1} zeta(2k) t^(2k+1) / (k(2k+1)(2pi)^(2k))
    HPReal acc = t - t * log(t);
    const HPReal u = (t / two_pi) * (t / two_pi);
    HPReal upow = u;
    const HPReal tol = pow10(-(wp.working_digits()), wp);
    for (long m = 1; m < 100000; ++m) {
        HPReal term = zeta_int(2 * m, wp) * t * upow / (m * (2 * m + 1L));
        acc = acc + term;
        if (term < tol) break;
        upow = upow * u;
    }
    if (sign < 0) acc = -acc;
    return acc.rounded_to(prec).checked("cl2");
}

namespace {

// Power series sum_{n>=1} z^n / n^s for |z| bounded away from 1.
HPReal li_series(const HPReal& z, int s, Precision wp) {
    HPReal acc(wp);
    HPReal zp = z;
    const HPReal azp = abs(z);
    const HPReal tol = pow10(-(wp.working_digits()), wp) * (1L - azp);
    for (long n = 1; n < 1000000; ++n) {
        HPReal np(n, wp);
        HPReal term = zp / (s == 2 ? np * np : np * np * np);
        acc = acc + term;
        if (abs(term) < tol) break;  // geometric tail: |rest| <= |term| |z|/(1-|z|)
        zp = zp * z;
    }
    return acc;
}

HPReal li2_impl(const HPReal& z, Precision wp);

// z in (0.7, 1): Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
HPReal li2_reflect(const HPReal& z, Precision wp) {
    HPReal pi_v = constant("pi", wp);
    return pi_v * pi_v / 6L - log(z) * log(1L - z) - li2_impl(1L - z, wp);
}

HPReal li2_impl(const HPReal& z, Precision wp) {
    HPReal az = abs(z);
    HPReal cut("0.7", wp);
    if (az <= cut) return li_series(z, 2, wp);
    if (z.sign() > 0) return li2_reflect(z, wp);
    // z in [-1, -0.7): duplication Li2(z) = Li2(z^2)/2 - Li2(-z)
    return li2_impl(z * z, wp) / 2L - li2_impl(-z, wp);
}

HPReal li3_impl(const HPReal& z, Precision wp);

// z in (0.7, 1): Landen-type triple identity
// Li3(z) + Li3(1-z) + Li3(1-1/z)
//   = zeta(3) + log^3 z / 6 + (pi^2/6) log z - log^2 z log(1-z)/2
HPReal li3_reflect(const HPReal& z, Precision wp) {
    HPReal pi_v = constant("pi", wp);
    HPReal lz = log(z);
    HPReal l1z = log(1L - z);
    HPReal rhs = constant("zeta3", wp) + lz * lz * lz / 6L + pi_v * pi_v * lz / 6L -
                 lz * lz * l1z / 2L;
    return rhs - li3_impl(1L - z, wp) - li3_impl(1L - 1L / z, wp);
}

HPReal li3_impl(const HPReal& z, Precision wp) {
    HPReal az = abs(z);
    HPReal cut("0.7", wp);
    if (az <= cut) return li_series(z, 3, wp);
    if (z.sign() > 0) return li3_reflect(z, wp);
    // z in [-1, -0.7): Li3(z) = Li3(z^2)/4 - Li3(-z)
    return li3_impl(z * z, wp) / 4L - li3_impl(-z, wp);
}

}  // namespace

HPReal li2(const HPReal& z, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    if (abs(z) > HPReal(1L, wp)) throw domain_error("li2: requires |z| <= 1");
    if (z.equals_long(1)) return zeta_int(2, prec);
    if (z.equals_long(-1)) return (-eta_int(2, prec)).rounded_to(prec);
    if (z.is_zero()) return HPReal(prec);
    return li2_impl(z.rounded_to(wp), wp).rounded_to(prec).checked("li2");
}

HPReal li3(const HPReal& z, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    if (abs(z) > HPReal(1L, wp)) throw domain_error("li3: requires |z| <= 1");
    if (z.equals_long(1)) return zeta_int(3, prec);
    if (z.equals_long(-1)) return (-eta_int(3, prec)).rounded_to(prec);
    if (z.is_zero()) return HPReal(prec);
    return li3_impl(z.rounded_to(wp), wp).rounded_to(prec).checked("li3");
}

HPReal ti2(const HPReal& y, Precision prec) {
    const Precision wp = prec.with_extra_guard(5);
    if (abs(y) > HPReal(1L, wp)) throw domain_error("ti2: requires |y| <= 1");
    if (y.is_zero()) return HPReal(prec);
    if (y.sign() < 0) return -ti2(-y, prec);  // odd
    HPReal r = sum_alternating(
        [&](long j) {
            HPReal q(2 * j - 1, wp);
            return pow(y.rounded_to(wp), 2 * j - 1) / (q * q);
        },
        1, wp);
    return r.rounded_to(prec).checked("ti2");
}

HPReal chi2(const HPReal& y, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    if (abs(y) > HPReal(1L, wp)) throw domain_error("chi2: requires |y| <= 1");
    if (y.is_zero()) return HPReal(prec);
    HPReal ay = abs(y);
    HPReal cut("0.875", wp);
    if (ay <= cut) {
        // direct odd-power series, all terms one sign
        HPReal yw = y.rounded_to(wp);
        HPReal y2 = yw * yw;
        HPReal acc(wp);
        HPReal zp = yw;
        const HPReal tol = pow10(-(wp.working_digits()), wp) * (1L - y2);
        for (long k = 0; k < 1000000; ++k) {
            HPReal q(2 * k + 1, wp);
            HPReal term = zp / (q * q);
            acc = acc + term;
            if (abs(term) < tol) break;
            zp = zp * y2;
        }
        return acc.rounded_to(prec).checked("chi2");
    }
    // near the endpoints: odd part of the dilogarithm
    return ((li2(y, wp) - li2(-y, wp)) / 2L).rounded_to(prec).checked("chi2");
}

HPReal barnes_g_ratio(const HPReal& t, Precision prec) {
    const Precision wp = prec.with_extra_guard(10);
    if (abs(t) >= HPReal(1L, wp)) throw domain_error("barnes_g_ratio: requires |t| < 1");
    if (t.is_zero()) return HPReal(1L, prec);
    if (t.sign() < 0) return (1L / barnes_g_ratio(-t, wp)).rounded_to(prec);
    HPReal log_ratio = t.rounded_to(wp) * log(2L * constant("pi", wp)) -
                       detail::log_s2(t.rounded_to(wp), wp);
    return exp(log_ratio).rounded_to(prec).checked("barnes_g_ratio");
}

}  // namespace multisine
