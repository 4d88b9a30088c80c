#include "symarr/divisor.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "symarr/errors.hpp"

namespace symarr {

namespace {

void require_same_points(const Divisor& lhs, const Divisor& rhs)
{
    if (lhs.size() != rhs.size())
        throw DimensionError("divisors over different point sets (" + std::to_string(lhs.size()) + " vs "
                             + std::to_string(rhs.size()) + " points)");
}

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t f = 2; f <= p / f; ++f)
        if (p % f == 0)
            return false;
    return true;
}

} // namespace

PointSet::PointSet(std::vector<std::string> labels) : labels_(std::move(labels))
{
    std::unordered_set<std::string> seen;
    for (const auto& label : labels_) {
        if (!seen.insert(label).second)
            throw ValidationError("duplicate point label '" + label + "'");
    }
}

PointSet PointSet::numbered(std::size_t k)
{
    std::vector<std::string> labels;
    labels.reserve(k);
    for (std::size_t i = 1; i <= k; ++i)
        labels.push_back("x" + std::to_string(i));
    return PointSet(std::move(labels));
}

Divisor Divisor::point(std::size_t points, std::size_t i, std::uint32_t a)
{
    if (i >= points)
        throw DimensionError("point index out of range");
    std::vector<std::uint32_t> m(points, 0);
    m[i] = a;
    return Divisor(std::move(m));
}

std::uint64_t Divisor::order() const noexcept
{
    return std::accumulate(mult_.begin(), mult_.end(), std::uint64_t{0});
}

std::string Divisor::to_string(const PointSet& points) const
{
    std::string out;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (mult_[i] != 1)
            out += std::to_string(mult_[i]) + "*";
        out += i < points.size() ? points[i] : "?" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::uint64_t divisor_order(const Divisor& d) noexcept { return d.order(); }

bool divisor_leq(const Divisor& lhs, const Divisor& rhs)
{
    require_same_points(lhs, rhs);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] > rhs[i])
            return false;
    return true;
}

Divisor divisor_join(const Divisor& lhs, const Divisor& rhs)
{
    require_same_points(lhs, rhs);
    std::vector<std::uint32_t> m(lhs.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = std::max(lhs[i], rhs[i]);
    return Divisor(std::move(m));
}

BigInt encode_integer(const Divisor& d, std::span<const std::uint64_t> primes)
{
    if (primes.size() != d.size())
        throw ValidationError("encode_integer: need exactly one prime per point");
    std::unordered_set<std::uint64_t> seen;
    for (auto p : primes) {
        if (!is_prime(p))
            throw ValidationError("encode_integer: " + std::to_string(p) + " is not prime");
        if (!seen.insert(p).second)
            throw ValidationError("encode_integer: repeated prime " + std::to_string(p));
    }
    BigInt value = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
        value *= boost::multiprecision::pow(BigInt(primes[i]), d[i]);
    return value;
}

std::vector<std::uint64_t> first_primes(std::size_t k)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 2; out.size() < k; ++c)
        if (is_prime(c))
            out.push_back(c);
    return out;
}

Arrangement::Arrangement(SpaceModel space, int n, PointSet points, std::vector<Divisor> generators)
    : space_(space), n_(n), points_(std::move(points))
{
    if (n_ < 1)
        throw ValidationError("arrangement: n must be positive, got " + std::to_string(n_));
    generators_.reserve(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const Divisor& d = generators[i];
        const std::string where = "generator " + std::to_string(i);
        if (d.size() != points_.size())
            throw ValidationError(where + " has " + std::to_string(d.size()) + " multiplicities, expected "
                                  + std::to_string(points_.size()));
        const auto order = d.order();
        if (order == 0)
            throw ValidationError(where + " has order 0");
        if (order > static_cast<std::uint64_t>(n_))
            throw ValidationError(where + " has order " + std::to_string(order) + " > n = " + std::to_string(n_));
        if (std::find(generators_.begin(), generators_.end(), d) != generators_.end()) {
            ++duplicates_removed_;
            continue;
        }
        generators_.push_back(d);
    }
}

Arrangement Arrangement::distinct_points(SpaceModel space, int n, std::size_t k)
{
    std::vector<Divisor> gens;
    gens.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        gens.push_back(Divisor::point(k, i));
    return Arrangement(space, n, PointSet::numbered(k), std::move(gens));
}

} // namespace symarr
