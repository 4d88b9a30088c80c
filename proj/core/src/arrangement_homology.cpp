#include "symarr/arrangement_homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "symarr/binomial.hpp"
#include "symarr/errors.hpp"
#include "symarr/sp_tables.hpp"

namespace symarr {

std::vector<BettiTable> ideal_betti_numbers(const IntersectionPoset& poset)
{
    if (poset.empty())
        return {};
    const int top = poset.max_mu();
    std::vector<BettiTable> out(static_cast<std::size_t>(top) + 1);
    // P_j = P_{c} for the smallest rank value c >= j.
    std::map<int, BettiTable> by_rank;
    for (std::size_t i = 0; i < poset.size(); ++i)
        by_rank.emplace(poset.mu(i), BettiTable{});
    for (auto& [c, table] : by_rank)
        table = betti(order_complex(ideal(poset, c)));
    for (int j = 0; j <= top; ++j)
        out[static_cast<std::size_t>(j)] = by_rank.lower_bound(j)->second;
    return out;
}

std::vector<DecompositionTerm> union_decomposition(const Arrangement& arrangement)
{
    const IntersectionPoset poset = intersection_poset(arrangement);
    const auto complexes = ideal_betti_numbers(poset);
    std::vector<DecompositionTerm> terms;
    for (int j = 0; j < static_cast<int>(complexes.size()); ++j) {
        const BettiTable rel = sp_relative_betti(arrangement.space(), j);
        const BettiTable& delta = complexes[static_cast<std::size_t>(j)];
        for (int p = 0; p <= rel.top_degree(); ++p)
            for (int q = 0; q <= delta.top_degree(); ++q)
                if (rel[p] * delta[q] != 0)
                    terms.push_back({j, p, q, rel[p] * delta[q]});
    }
    return terms;
}

BettiTable union_betti_two_part(const Arrangement& arrangement)
{
    const IntersectionPoset poset = intersection_poset(arrangement);
    if (poset.empty())
        return {};
    const int low = poset.min_mu();
    const auto complexes = ideal_betti_numbers(poset);
    BettiTable out = tensor(sp_betti(arrangement.space(), low), complexes[static_cast<std::size_t>(low)]);
    for (int j = low + 1; j < static_cast<int>(complexes.size()); ++j)
        out += tensor(sp_relative_betti(arrangement.space(), j), complexes[static_cast<std::size_t>(j)]);
    return out;
}

BettiTable union_betti(const Arrangement& arrangement)
{
    BettiTable single;
    for (const auto& t : union_decomposition(arrangement))
        single.add(t.total_degree(), t.multiplicity);
    const BettiTable two_part = union_betti_two_part(arrangement);
    if (single != two_part)
        throw std::logic_error("union_betti: decompositions disagree: " + single.to_string() + " vs "
                               + two_part.to_string());
    return single;
}

BettiTable simplex_skeleton_betti(int k, int p)
{
    if (k < 1 || p < 0)
        return {};
    if (p >= k - 1)
        return BettiTable{1};
    if (p == 0)
        return BettiTable{static_cast<std::uint64_t>(k)};
    BettiTable table{1};
    table.set(p, static_cast<std::uint64_t>(binomial(k - 1, p + 1)));
    return table;
}

BettiTable points_case_betti(const SpaceModel& space, int n, int k)
{
    if (n < 1 || k < 1)
        throw ValidationError("points_case_betti: need n >= 1 and k >= 1");
    const int m = std::min(n, k);
    BettiTable out = tensor(sp_betti(space, n - m), simplex_skeleton_betti(k, m - 1));
    for (int p = 0; p <= m - 2; ++p)
        out += tensor(sp_relative_betti(space, n - p - 1), simplex_skeleton_betti(k, p));
    return out;
}

ComplementTable complement_tables(const Arrangement& arrangement)
{
    if (arrangement.space().kind() != SpaceKind::closed_surface)
        throw UnsupportedSpaceError("complement: requires a closed surface so that Poincare duality applies; got "
                                    + arrangement.space().to_string());
    const IntersectionPoset poset = intersection_poset(arrangement);
    if (poset.empty())
        throw ValidationError("complement: empty arrangement; the complement is SP^n itself, use sp_betti");

    const int n = arrangement.n();
    const int top = poset.max_mu();
    const auto size = static_cast<std::size_t>(2 * n + 1);
    ComplementTable table{n, std::vector<std::uint64_t>(size, 0), std::vector<std::uint64_t>(size, 0),
                          std::vector<std::uint64_t>(size, 0)};
    const auto complexes = ideal_betti_numbers(poset);

    // Kernel: reduced homology of each Delta(P_j) tensored with the relative piece.
    for (int j = 0; j <= top; ++j) {
        const BettiTable rel = sp_relative_betti(arrangement.space(), j);
        const BettiTable& delta = complexes[static_cast<std::size_t>(j)];
        const std::uint64_t reduced0 = delta[0] > 0 ? delta[0] - 1 : 0;
        for (int d = 0; d <= 2 * n; ++d) {
            std::uint64_t rank = rel[d] * reduced0;
            for (int q = 1; q <= std::min(d, delta.top_degree()); ++q)
                rank += rel[d - q] * delta[q];
            table.kernel[static_cast<std::size_t>(d)] += rank;
        }
    }
    // Cokernel: relative pieces no element of the poset reaches.
    for (int j = top + 1; j <= n; ++j) {
        const BettiTable rel = sp_relative_betti(arrangement.space(), j);
        for (int d = 0; d <= 2 * n; ++d)
            table.cokernel[static_cast<std::size_t>(d)] += rel[d];
    }
    for (int t = 0; t <= 2 * n; ++t) {
        const int a = 2 * n - t - 1;
        const std::uint64_t kernel = a >= 0 ? table.kernel[static_cast<std::size_t>(a)] : 0;
        table.cohomology[static_cast<std::size_t>(t)] = kernel + table.cokernel[static_cast<std::size_t>(2 * n - t)];
    }
    return table;
}

} // namespace symarr
