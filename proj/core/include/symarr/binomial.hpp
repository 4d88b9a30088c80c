#pragma once

#include <cstdint>

namespace symarr {

/// Binomial coefficient with the total convention C(a, b) = 0 whenever
/// b < 0, b > a or a < 0. Throws std::overflow_error if the value does not
/// fit in 64 bits.
std::int64_t binomial(std::int64_t a, std::int64_t b);

} // namespace symarr
