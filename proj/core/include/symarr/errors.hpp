#pragma once

#include <stdexcept>
#include <string>

namespace symarr {

/// Malformed input: bad generator, negative multiplicity, invalid parameter.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands living over different point sets or with incompatible shapes.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested computation has no formula for this ambient space.
class UnsupportedSpaceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input exceeds a hard enumeration cap.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace symarr
