#pragma once

#include "binetkit/number.hpp"

namespace binetkit {

/// C(i, j) = i!/(j!(i-j)!) for i >= j, and 0 when i < j.
/// Negative arguments throw std::domain_error.
Integer binomial(long i, long j);

/// C(2j, j).
Integer central_binomial(long j);

}  // namespace binetkit
