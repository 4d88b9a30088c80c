#include "symarr/binomial.hpp"

#include <stdexcept>

namespace symarr {

std::int64_t binomial(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    // C(a, i) = C(a, i - 1) * (a - i + 1) / i stays integral at each step.
    std::int64_t value = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        std::int64_t product = 0;
        if (__builtin_mul_overflow(value, a - i + 1, &product))
            throw std::overflow_error("binomial coefficient overflows int64");
        value = product / i;
    }
    return value;
}

} // namespace symarr
