#ifndef MULTISINE_SRC_BERNOULLI_HPP
#define MULTISINE_SRC_BERNOULLI_HPP

#include <gmp.h>

#include "multisine/hpreal.hpp"
#include "multisine/precision.hpp"

namespace multisine::detail {

/// B_{2k} / (2k)! as an HPReal at precision p. Exact rational Bernoulli
/// numbers are cached globally (thread-safe, grow-only).
HPReal bernoulli_over_factorial(long k, Precision p);

}  // namespace multisine::detail

#endif
