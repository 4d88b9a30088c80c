#include "symarr/sp_tables.hpp"

#include <algorithm>

#include "symarr/binomial.hpp"
#include "symarr/errors.hpp"

namespace symarr {

namespace {

void require_punctured_params(int g, int k, int n, const char* what)
{
    if (g < 0 || k < 1 || n < 1)
        throw ValidationError(std::string(what) + ": need g >= 0, k >= 1, n >= 1");
}

std::uint64_t as_rank(std::int64_t v) { return static_cast<std::uint64_t>(v); }

} // namespace

std::vector<BasisElement> sp_basis(const SpaceModel& space, int j)
{
    std::vector<BasisElement> out;
    if (j < 0)
        return out;
    const int gens = space.exterior_generators();
    if (gens >= 31)
        throw SizeError("sp_basis: too many exterior generators to enumerate");
    for (std::uint32_t mask = 0; mask < (1u << gens); ++mask) {
        BasisElement e;
        for (int i = 0; i < gens; ++i)
            if (mask & (1u << i))
                e.exterior.push_back(i);
        const int max_power = space.has_polynomial_class() ? j - static_cast<int>(e.exterior.size()) : 0;
        for (int q = 0; q <= max_power; ++q) {
            e.power = q;
            if (e.filtration() <= j)
                out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end(), [](const BasisElement& a, const BasisElement& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        if (a.power != b.power)
            return a.power < b.power;
        return a.exterior < b.exterior;
    });
    return out;
}

BettiTable sp_betti(const SpaceModel& space, int j)
{
    BettiTable table;
    if (j < 0)
        return table;
    const int gens = space.exterior_generators();
    if (space.has_polynomial_class()) {
        // Classes e_I gamma^q with |I| + 2q = d and |I| + q <= j.
        for (int d = 0; d <= 2 * j; ++d) {
            std::int64_t rank = 0;
            for (int q = std::max(0, d - j); q <= d / 2; ++q)
                rank += binomial(gens, d - 2 * q);
            table.set(d, as_rank(rank));
        }
    } else {
        for (int d = 0; d <= j; ++d)
            table.set(d, as_rank(binomial(gens, d)));
    }
    return table;
}

BettiTable sp_relative_betti(const SpaceModel& space, int j)
{
    BettiTable table;
    if (j < 0)
        return table;
    const int gens = space.exterior_generators();
    if (space.has_polynomial_class()) {
        for (int d = j; d <= 2 * j; ++d)
            table.set(d, as_rank(binomial(gens, 2 * j - d)));
    } else {
        table.set(j, as_rank(binomial(gens, j)));
    }
    return table;
}

std::pair<std::int64_t, std::int64_t> ker_im_beta(int g, int k, int n, int d)
{
    require_punctured_params(g, k, n, "ker_im_beta");
    if (d > n)
        return {0, 0};
    return {binomial(2 * g + k - 1, d) - binomial(2 * g, d), binomial(2 * g, d)};
}

std::int64_t im_cap(int g, int k, int n, int p)
{
    require_punctured_params(g, k, n, "im_cap");
    return p <= n - 1 ? binomial(2 * g, p) : 0;
}

std::int64_t phi(int g, int k, int n, int d)
{
    require_punctured_params(g, k, n, "phi");
    return n <= d ? binomial(2 * g + k - 1, 2 * n - d) : 0;
}

std::int64_t sp_euler(const SpaceModel& space, int j)
{
    return sp_betti(space, j).euler_characteristic();
}

} // namespace symarr
