#pragma once

#include <random>

#include "groupdet/group_algebra.hpp"

namespace groupdet {

using Rng = std::mt19937_64;

// Integer coefficients drawn uniformly from [lo, hi] on every element of `support`.
AlgebraElement random_numeric_element(const SubgroupHandle& support, Rng& rng, long lo = -3, long hi = 3);
AlgebraMatrix random_numeric_matrix(const SubgroupHandle& support, std::size_t m, Rng& rng, long lo = -3, long hi = 3);

}  // namespace groupdet
