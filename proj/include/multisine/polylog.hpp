#ifndef MULTISINE_POLYLOG_HPP
#define MULTISINE_POLYLOG_HPP

#include "multisine/hpreal.hpp"
#include "multisine/precision.hpp"

namespace multisine {

/// Clausen function Cl2(theta) = sum_{n>=1} sin(n theta)/n^2.
///
/// theta is reduced (periodicity and oddness) into [0, pi]; there the value
/// comes from the integrated log-sine expansion
///   Cl2(t) = t - t log t + sum_{k>=1} zeta(2k) t^(2k+1) / (k (2k+1) (2 pi)^(2k)).
HPReal cl2(const HPReal& theta, Precision prec);

/// Dilogarithm / trilogarithm on [-1, 1]; |z| > 1 raises domain_error.
HPReal li2(const HPReal& z, Precision prec);
HPReal li3(const HPReal& z, Precision prec);

/// Inverse tangent integral Ti2(y) = sum_{j>=1} (-1)^(j+1) y^(2j-1)/(2j-1)^2,
/// |y| <= 1.
HPReal ti2(const HPReal& y, Precision prec);

/// Legendre chi function chi2(y) = sum_{k>=0} y^(2k+1)/(2k+1)^2, |y| <= 1.
HPReal chi2(const HPReal& y, Precision prec);

/// Barnes G ratio G(1+t)/G(1-t) = exp(t log(2 pi) - log S2(t)) for |t| < 1.
HPReal barnes_g_ratio(const HPReal& t, Precision prec);

/// log Gamma(1 + k/2) exactly through factorials:
///   k = 2m   -> log(m!)
///   k = 2m+1 -> log((2m+2)!) - (m+1) log 4 - log((m+1)!) + (1/2) log pi.
HPReal log_gamma_half_integer(long k, Precision prec);

}  // namespace multisine

#endif
