#pragma once

#include "gnum/chain.hpp"
#include "gnum/rational.hpp"

namespace gnum {

/// Rank over the rationals, by sparse exact column elimination.
long long exact_rank(const SparseIntMat& m);

} // namespace gnum
