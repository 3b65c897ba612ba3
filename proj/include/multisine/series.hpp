#ifndef MULTISINE_SERIES_HPP
#define MULTISINE_SERIES_HPP

#include <functional>
#include <vector>

#include "multisine/hpreal.hpp"
#include "multisine/precision.hpp"

namespace multisine {

/// A series sum_{n>=n0} term(n) together with a caller-supplied bound on the
/// absolute tail |sum_{n>N} term(n)|. tail_bound must be non-increasing for
/// large N.
struct SeriesSpec {
    std::function<HPReal(long)> term;
    std::function<HPReal(long)> tail_bound;
    long n0 = 1;
    long budget = 10'000'000;  // maximum number of terms
};

/// Plain summation until tail_bound drops below 10^-(working digits).
/// Absolute error <= 10^-(working digits - 2). Throws budget_error when the
/// bound cannot be met within spec.budget terms.
HPReal sum_series(const SeriesSpec& spec, Precision prec);

/// Same engine with an explicit absolute tolerance.
HPReal sum_series_to_tolerance(const SeriesSpec& spec, const HPReal& abs_tol, Precision prec);

/// Accelerated sum_{k>=n0} (-1)^(k+1) b(k) for b(k) -> 0 smoothly.
///
/// Uses the Cohen-Rodriguez Villegas-Zagier scheme (Chebyshev-weighted
/// partial sums, about 0.77 correct digits per term). Two runs of different
/// depth are compared; disagreement raises convergence_error.
HPReal sum_alternating(const std::function<HPReal(long)>& b, long n0, Precision prec);

struct ExtrapolationResult {
    HPReal value;
    int achieved_digits;  // self-estimate from successive extrapolation orders
};

/// Limit of seq(n) as n -> infinity, assuming an asymptotic expansion in
/// powers of 1/n. Samples at max_n/2^j for j=0..order and extrapolates by
/// Neville's scheme at h=0. Oscillating extrapolants raise convergence_error.
ExtrapolationResult richardson_limit(const std::function<HPReal(long)>& seq, int order,
                                     long max_n, Precision prec);

namespace detail {

/// Polynomial extrapolation to h=0 through (h_j, y_j); returns the full
/// diagonal (last entry is the highest-order extrapolant).
std::vector<HPReal> neville_diagonal(const std::vector<HPReal>& hs, const std::vector<HPReal>& ys);

}  // namespace detail

}  // namespace multisine

#endif
