#ifndef MULTISINE_CONSTANTS_HPP
#define MULTISINE_CONSTANTS_HPP

#include <string_view>

#include "multisine/hpreal.hpp"
#include "multisine/precision.hpp"

namespace multisine {

/// Named constant, correct to prec.digits() and cached (cache entries are
/// quantized to 50-digit steps, so nearby requests share one computation).
///
/// Names: pi, e, log2, catalan, zeta3, euler_gamma, glaisher, zeta_prime_neg1.
/// Unknown names raise domain_error.
HPReal constant(std::string_view name, Precision prec);

/// Riemann zeta for real s > 1 (Euler-Maclaurin; direct summation when the
/// exponent makes it cheap). Integer s >= 2 hits a cache.
HPReal zeta(const HPReal& s, Precision prec);
HPReal zeta_int(long s, Precision prec);

/// Dirichlet eta: (1 - 2^(1-s)) zeta(s) for s > 1, log 2 at s = 1.
HPReal eta(const HPReal& s, Precision prec);
HPReal eta_int(long s, Precision prec);

/// Odd-index zeta lambda(s) = (1 - 2^-s) zeta(s), integer s >= 2, cached.
HPReal lambda_odd_int(long s, Precision prec);

/// zeta'(2), or zeta'(-1) through the Glaisher-Kinkelin route
/// log A = (gamma + log 2 pi)/12 - zeta'(2)/(2 pi^2),  zeta'(-1) = 1/12 - log A.
HPReal zeta_prime(int point, Precision prec);  // point in {2, -1}

namespace detail {

/// sum_{m >= M} (a m + c)^(-s) by Euler-Maclaurin with adaptive correction
/// depth; M is raised internally if needed for the target accuracy.
HPReal power_tail_sum(const HPReal& s, long a, long c, long M, Precision prec);

/// zeta(s) - sum_{n<=J} n^(-s)  (tail over n > J), computed without
/// subtractive cancellation for large s.
HPReal zeta_tail(const HPReal& s, long J, Precision prec);

/// eta tail sum_{k>J} (-1)^(k+1) k^(-s), same accuracy discipline.
HPReal eta_tail(const HPReal& s, long J, Precision prec);

/// sum over odd q > Q of q^(-s); Q odd.
HPReal odd_tail(const HPReal& s, long Q, Precision prec);

}  // namespace detail

}  // namespace multisine

#endif
