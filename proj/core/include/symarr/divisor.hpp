#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symarr/space.hpp"

namespace symarr {

using BigInt = boost::multiprecision::cpp_int;

/// Ordered set of distinct point labels x_1, ..., x_k in X.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<std::string> labels);

    /// Points named x1, ..., xk.
    static PointSet numbered(std::size_t k);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& operator[](std::size_t i) const { return labels_.at(i); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<std::string> labels_;
};

/// Effective divisor sum_i a_i x_i, stored as its multiplicity vector.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(std::vector<std::uint32_t> multiplicities)
        : mult_(std::move(multiplicities)) {}

    static Divisor zero(std::size_t points) { return Divisor(std::vector<std::uint32_t>(points, 0)); }
    /// The divisor a * x_i.
    static Divisor point(std::size_t points, std::size_t i, std::uint32_t a = 1);

    std::size_t size() const noexcept { return mult_.size(); }
    std::uint32_t operator[](std::size_t i) const { return mult_.at(i); }
    const std::vector<std::uint32_t>& multiplicities() const noexcept { return mult_; }

    /// |D|, the total multiplicity.
    std::uint64_t order() const noexcept;

    std::string to_string(const PointSet& points) const;

    friend bool operator==(const Divisor&, const Divisor&) = default;
    /// Lexicographic on multiplicity vectors; a total order used only for
    /// canonical sorting.
    friend auto operator<=>(const Divisor&, const Divisor&) = default;

private:
    std::vector<std::uint32_t> mult_;
};

std::uint64_t divisor_order(const Divisor& d) noexcept;

/// Pointwise comparison. Throws DimensionError on mismatched lengths.
bool divisor_leq(const Divisor& lhs, const Divisor& rhs);

/// Pointwise maximum, the least upper bound under divisor_leq.
Divisor divisor_join(const Divisor& lhs, const Divisor& rhs);

/// prod_i primes[i]^{a_i}. Sends join to lcm and divisor_leq to divisibility.
/// Throws ValidationError unless primes are distinct primes, one per point.
BigInt encode_integer(const Divisor& d, std::span<const std::uint64_t> primes);

/// First k primes, handy for encode_integer.
std::vector<std::uint64_t> first_primes(std::size_t k);

/// A family of subspaces D_i + SP^{n-|D_i|}(X) of SP^n(X).
class Arrangement {
public:
    /// Validates and deduplicates the generators (first occurrence kept).
    /// Throws ValidationError if a generator has the wrong length, order 0,
    /// or order above n, or if n < 1.
    Arrangement(SpaceModel space, int n, PointSet points, std::vector<Divisor> generators);

    /// Generators x_1, ..., x_k, the divisors of single distinct points.
    static Arrangement distinct_points(SpaceModel space, int n, std::size_t k);

    const SpaceModel& space() const noexcept { return space_; }
    int n() const noexcept { return n_; }
    const PointSet& points() const noexcept { return points_; }
    const std::vector<Divisor>& generators() const noexcept { return generators_; }
    /// Number of repeated generators dropped by the constructor.
    std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

private:
    SpaceModel space_;
    int n_;
    PointSet points_;
    std::vector<Divisor> generators_;
    std::size_t duplicates_removed_ = 0;
};

} // namespace symarr
