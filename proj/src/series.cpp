#include "multisine/series.hpp"

#include <cmath>

#include "multisine/errors.hpp"

namespace multisine {

namespace {

HPReal pow10(long e, Precision p) {
    HPReal r(p);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

HPReal sum_series_to_tolerance(const SeriesSpec& spec, const HPReal& abs_tol, Precision prec) {
    HPReal acc(prec);
    long n = spec.n0;
    long used = 0;
    while (true) {
        if (used >= spec.budget)
            throw budget_error("sum_series: budget of " + std::to_string(spec.budget) +
                               " terms exhausted before the tail bound reached tolerance");
        HPReal t = spec.term(n);
        mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
        ++used;
        HPReal bound = spec.tail_bound(n);
        if (bound <= abs_tol) break;
        ++n;
    }
    return acc.checked("sum_series");
}

HPReal sum_series(const SeriesSpec& spec, Precision prec) {
    return sum_series_to_tolerance(spec, pow10(-prec.working_digits(), prec), prec);
}

namespace {

// One CVZ pass of depth n over pre-evaluated magnitudes a[0..n-1];
// approximates sum_{j>=0} (-1)^j a_j.
HPReal cvz_pass(const std::vector<HPReal>& a, long n, Precision wp) {
    HPReal d(wp);
    mpfr_sqrt_ui(d.raw(), 8, MPFR_RNDN);
    mpfr_add_ui(d.raw(), d.raw(), 3, MPFR_RNDN);
    mpfr_pow_ui(d.raw(), d.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
    {
        HPReal inv(wp);
        mpfr_si_div(inv.raw(), 1, d.raw(), MPFR_RNDN);
        mpfr_add(d.raw(), d.raw(), inv.raw(), MPFR_RNDN);
        mpfr_div_ui(d.raw(), d.raw(), 2, MPFR_RNDN);
    }
    HPReal b(-1L, wp), c(wp), s(wp), t(wp);
    mpfr_neg(c.raw(), d.raw(), MPFR_RNDN);
    for (long k = 0; k < n; ++k) {
        mpfr_sub(c.raw(), b.raw(), c.raw(), MPFR_RNDN);           // c = b - c
        mpfr_mul(t.raw(), c.raw(), a[static_cast<size_t>(k)].raw(), MPFR_RNDN);
        mpfr_add(s.raw(), s.raw(), t.raw(), MPFR_RNDN);           // s += c * a_k
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        mpfr_mul_si(b.raw(), b.raw(), k + n, MPFR_RNDN);
        mpfr_mul_si(b.raw(), b.raw(), k - n, MPFR_RNDN);
        mpfr_mul_ui(b.raw(), b.raw(), 2, MPFR_RNDN);
        mpfr_div_si(b.raw(), b.raw(), 2 * k + 1, MPFR_RNDN);
        mpfr_div_si(b.raw(), b.raw(), k + 1, MPFR_RNDN);
    }
    mpfr_div(s.raw(), s.raw(), d.raw(), MPFR_RNDN);
    return s;
}

}  // namespace

HPReal sum_alternating(const std::function<HPReal(long)>& b, long n0, Precision prec) {
    const int target = prec.working_digits() + 6;
    const long n1 = static_cast<long>(std::ceil(target / 0.7656)) + 6;
    const long n2 = n1 + 12;
    Precision wp = prec.with_extra_guard(12);

    std::vector<HPReal> a;
    a.reserve(static_cast<size_t>(n2));
    for (long j = 0; j < n2; ++j) a.push_back(b(n0 + j));

    HPReal e1 = cvz_pass(a, n1, wp);
    HPReal e2 = cvz_pass(a, n2, wp);

    HPReal scale = abs(e2);
    if (scale < HPReal(1L, wp)) scale = HPReal(1L, wp);
    HPReal tol = pow10(-prec.working_digits(), wp) * scale;
    if (abs(e1 - e2) > tol)
        throw convergence_error(
            "sum_alternating: accelerated estimates of depth " + std::to_string(n1) + " and " +
            std::to_string(n2) + " disagree; the terms are not acceleration-friendly");

    if (n0 % 2 == 0) e2 = -e2;  // sum starts with (-1)^(n0+1) b(n0)
    return e2.rounded_to(prec).checked("sum_alternating");
}

namespace detail {

std::vector<HPReal> neville_diagonal(const std::vector<HPReal>& hs, const std::vector<HPReal>& ys) {
    const size_t m = hs.size();
    std::vector<std::vector<HPReal>> P(m);
    for (size_t j = 0; j < m; ++j) {
        P[j].resize(j + 1);
        P[j][0] = ys[j];
    }
    for (size_t i = 1; i < m; ++i)
        for (size_t j = i; j < m; ++j)
            P[j][i] = (hs[j] * P[j - 1][i - 1] - hs[j - i] * P[j][i - 1]) / (hs[j] - hs[j - i]);
    std::vector<HPReal> diag(m);
    for (size_t j = 0; j < m; ++j) diag[j] = P[j][j];
    return diag;
}

}  // namespace detail

ExtrapolationResult richardson_limit(const std::function<HPReal(long)>& seq, int order,
                                     long max_n, Precision prec) {
    if (order < 0) throw domain_error("richardson_limit: order must be >= 0");
    if (max_n < (1L << order))
        throw domain_error("richardson_limit: max_n too small for the requested order");
    if (order == 0) {
        HPReal v = seq(max_n).rounded_to(prec);
        return {v, prec.working_digits()};
    }

    std::vector<HPReal> hs, ys;
    for (int j = order; j >= 0; --j) {
        long n = max_n >> j;
        hs.push_back(1L / HPReal(n, prec));
        ys.push_back(seq(n));
    }
    std::vector<HPReal> diag = detail::neville_diagonal(hs, ys);

    // Divergence diagnostic: convergent tables shrink geometrically along the
    // diagonal; anything that fails to shrink by 4x across the whole table
    // (log-like growth gives constant differences) is reported.
    const size_t m = diag.size();
    HPReal d_first = abs(diag[1] - diag[0]);
    HPReal d_last = abs(diag[m - 1] - diag[m - 2]);
    HPReal scale = abs(diag[m - 1]);
    if (scale < HPReal(1L, prec)) scale = HPReal(1L, prec);
    HPReal noise = pow10(-prec.working_digits() + 2, prec) * scale;
    if (d_last > noise && 4L * d_last > d_first)
        throw convergence_error("richardson_limit: extrapolants do not settle (divergent sequence?)");

    int achieved = agree_digits(diag[m - 1], diag[m - 2]);
    return {diag[m - 1].rounded_to(prec), achieved};
}

}  // namespace multisine
