#ifndef MULTISINE_BD_ADAMCHIK_HPP
#define MULTISINE_BD_ADAMCHIK_HPP

#include "multisine/hpreal.hpp"
#include "multisine/precision.hpp"

namespace multisine {

enum class Parity { odd, even };

/// Value of a regularized / extrapolated infinite product together with an
/// honest self-estimate of how many digits were actually achieved.
struct RegularizedProductValue {
    enum class Method { log_series, accelerated_product };
    HPReal value;
    int achieved_digits = 0;
    Method method = Method::log_series;
};

/// Borwein-Dykshoorn function
///   D(x) = lim_n prod_{k=1}^{2n+1} (1 + x/k)^(k (-1)^(k+1)),
/// implemented for x > -2 (first pole at -2). D(-1) = 0 exactly; D < 0 on
/// (-2,-1). |x| < 1 uses the log series
///   log D(x) = x + sum_{m>=2} (-1)^(m+1) eta(m-1) x^m / m,
/// x >= 1 the accelerated alternating sum over k log(1+x/k) - x.
HPReal d_func(const HPReal& x, Precision prec);

/// Closed form of D(x)/D(-x): e^x S2(x/2)^4 / S2(x), |x| < 2. The ratio has
/// a pole/zero pair at |x| = 1 (S2(1) = 0, D(-1) = 0), reported as a
/// domain_error.
HPReal d_ratio(const HPReal& x, Precision prec);

/// Kachi-Tzermias limits of prod (1 - 2/(2k+1))^(k (-1)^k) over 2n+1 (odd)
/// or 2n (even) factors: exp(2G/pi + 1/2) and exp(2G/pi - 1/2). Computed from
/// d_ratio(1/2); the odd/even quotient is the factor-e bridge.
HPReal kachi_tzermias_catalan(Parity parity, Precision prec);

/// The alternating product with quadratically growing exponents
///   lim prod_{k=1}^{2n+1} e^(-1/4) (1 - 1/(k+1))^(k(k+1)/2 (-1)^k)
///   = exp(7 zeta(3)/(4 pi^2) + 1/4).
/// Individual log terms grow linearly; odd truncations pair them into decaying
/// groups, and the partial-sum sequence is Richardson-extrapolated. The
/// achieved digit count is reported, never assumed.
RegularizedProductValue kachi_tzermias_zeta3(Precision prec, long max_n = 10000);

/// Adamchik function E(x) = lim prod_{k=1}^{2N} (1 - 4x^2/k^2)^(k^2 (-1)^(k+1)),
/// |x| <= 1/2 (exact 0 at the endpoints):
///   log E(x) = -sum_{m>=2} (4x^2)^m eta(2m-2) / m.
HPReal e_func(const HPReal& x, Precision prec);

/// lim prod_{k=2}^{2N} (1 - 1/k^2)^(k^2 (-1)^(k+1))
///   = (pi/4) exp(1/2 + 7 zeta(3)/pi^2).
/// This is the k >= 2 cousin of E(1/2) -- which itself is 0 from the k=1
/// factor, so the shifted product needs its own regularized sum
///   log = 1 + sum_{k>=2} (-1)^(k+1) [k^2 log(1 - 1/k^2) + 1].
HPReal adamchik_shifted_product(Precision prec);

/// gamma_alpha(z) = sum_{n>=1} z^(n-1) (alpha - n log(1 + alpha/n)),
/// alpha > -1, |z| < 1.
HPReal gamma_alpha(const HPReal& alpha, const HPReal& z, Precision prec);

}  // namespace multisine

#endif
