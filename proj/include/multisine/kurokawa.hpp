#ifndef MULTISINE_KUROKAWA_HPP
#define MULTISINE_KUROKAWA_HPP

#include "multisine/hpreal.hpp"
#include "multisine/precision.hpp"

namespace multisine {

/// How to evaluate a multiple sine / triple cosine value.
/// All routes agree on the overlap of their domains.
enum class Route {
    automatic,   // pick per argument (series / duplication / closed form)
    log_series,  // zeta-coefficient expansion of the log, |z| < 1
    product,     // truncated regularized product plus Euler-Maclaurin tail
    closed_form  // S2 only: (2 sin pi z)^z exp(Cl2(2 pi z)/(2 pi))
};

/// Weierstrass-type factor P_r(z) = (1-z) exp(z + z^2/2 + ... + z^r/r).
/// Satisfies P_r(z) = P_{r-1}(z) e^{z^r/r}. The zero at z=1 (log undefined)
/// is reported as a domain_error.
HPReal weierstrass_p(int r, const HPReal& z, Precision prec);

/// Kurokawa multiple sine S_r(z), 1 <= r <= 6.
///
/// S_1(z) = 2 sin(pi z); for r >= 2 the log expands as
///   log S_r(z) = z^(r-1)/(r-1) - 2 sum_{m>=1} zeta(2m) z^(r-1+2m)/(r-1+2m)
/// for |z| < 1. S_3 on [1/2, 1) goes through the duplication formula, S_2
/// through the closed form. S_r(1) = 0 exactly for r >= 2 (vanishing factor);
/// odd r are even functions, even r satisfy S_r(-z) = 1/S_r(z).
HPReal s_r(int r, const HPReal& z, Precision prec, Route route = Route::automatic);

/// S2 closed form (2 sin pi z)^z exp(Cl2(2 pi z)/(2 pi)) on (0, 1).
HPReal s2_closed_form(const HPReal& z, Precision prec);

/// Triple cosine C3(x), |x| <= 1/2 (exact 0 at the endpoints):
///   log C3(x) = -(1/4) sum_{k>=2} (4 x^2)^k lambda(2k-2)/k,
/// lambda(s) = (1-2^-s) zeta(s). Even in x; linked to S3 by
/// S3(2x) = S3(x)^4 C3(x)^4.
HPReal c3(const HPReal& x, Precision prec, Route route = Route::automatic);

/// S3'(1) = -2 e^(3/2) H with H the Holcombe product; equals -2 pi.
HPReal s3_derivative_at_1(Precision prec);

/// H = prod_{n>=2} e (1 - 1/n^2)^(n^2), via
/// log H = sum_{n>=2} [1 + n^2 log(1 - 1/n^2)] = -sum_{k>=2} (zeta(2k-2)-1)/k.
HPReal holcombe_product(Precision prec);

namespace detail {

/// log S2 on (0, 1); series below 1/2, closed form above.
HPReal log_s2(const HPReal& z, Precision prec);

/// S2 extended to |z| < 2 (z not in {-1, 0, 1}): the n <= J leading factors
/// evaluated directly, the rest as a zeta-tail series. Negative on (1, 2).
HPReal s2_extended(const HPReal& z, Precision prec);

/// log-series for S_r, |z| < 1, z != 0.
HPReal log_s_r_series(int r, const HPReal& z, Precision prec);

/// truncated product (N factors) plus Euler-Maclaurin tail, |z| < 1.
HPReal log_s_r_product(int r, const HPReal& z, long N, Precision prec);

HPReal log_c3_series(const HPReal& x, Precision prec);
HPReal log_c3_product(const HPReal& x, long odd_cutoff, Precision prec);

}  // namespace detail

}  // namespace multisine

#endif
