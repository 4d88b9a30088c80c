#include "symarr/oracle.hpp"

#include <sstream>

#include "symarr/arrangement_homology.hpp"
#include "symarr/binomial.hpp"
#include "symarr/endspace.hpp"
#include "symarr/errors.hpp"
#include "symarr/sp_tables.hpp"

namespace symarr {

namespace {

std::string describe(const Arrangement& arrangement)
{
    std::ostringstream os;
    os << arrangement.space().to_string() << ", n=" << arrangement.n() << ", generators {";
    for (std::size_t i = 0; i < arrangement.generators().size(); ++i)
        os << (i ? ", " : "") << arrangement.generators()[i].to_string(arrangement.points());
    os << "}";
    return os.str();
}

VerificationReport compare(std::string name, std::string inputs, const std::string& expected, const std::string& actual)
{
    return {std::move(name), std::move(inputs), expected, actual, expected == actual};
}

std::string list(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace

std::int64_t euler_inclusion_exclusion(const Arrangement& arrangement)
{
    const auto& gens = arrangement.generators();
    if (gens.size() > kMaxInclusionExclusionGenerators)
        throw SizeError("euler_inclusion_exclusion: " + std::to_string(gens.size()) + " generators exceeds the cap of "
                        + std::to_string(kMaxInclusionExclusionGenerators));
    const auto n = static_cast<std::uint64_t>(arrangement.n());
    std::int64_t chi = 0;
    const std::uint32_t subsets = 1u << gens.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        Divisor join = Divisor::zero(arrangement.points().size());
        int size = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (mask & (1u << i)) {
                join = divisor_join(join, gens[i]);
                ++size;
            }
        }
        if (join.order() > n)
            continue;
        const std::int64_t term = sp_euler(arrangement.space(), static_cast<int>(n - join.order()));
        chi += size % 2 == 1 ? term : -term;
    }
    return chi;
}

BettiTable mayer_vietoris_pair_betti(const Arrangement& arrangement)
{
    const auto& gens = arrangement.generators();
    if (gens.size() != 2)
        throw ValidationError("mayer_vietoris_pair_betti: expects exactly 2 generators, got " + std::to_string(gens.size()));
    const int n = arrangement.n();
    const auto& space = arrangement.space();
    const BettiTable first = sp_betti(space, n - static_cast<int>(gens[0].order()));
    const BettiTable second = sp_betti(space, n - static_cast<int>(gens[1].order()));
    const Divisor join = divisor_join(gens[0], gens[1]);
    const BettiTable both = join.order() <= static_cast<std::uint64_t>(n)
        ? sp_betti(space, n - static_cast<int>(join.order()))
        : BettiTable{};

    BettiTable out;
    const int top = std::max(first.top_degree(), second.top_degree());
    for (int d = 0; d <= top; ++d) {
        const auto sum = first[d] + second[d];
        if (both[d] > sum)
            throw std::logic_error("mayer_vietoris_pair_betti: negative rank");
        out.set(d, sum - both[d]);
    }
    return out;
}

VerificationReport kernel_sum_identity_check(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionError("kernel_sum_identity_check: codomains differ (" + std::to_string(a.rows()) + " vs "
                             + std::to_string(b.rows()) + " rows)");
    const std::size_t kernel_sum = hcat(a, b).nullspace().cols();
    const std::size_t kernel_a = a.nullspace().cols();
    const std::size_t kernel_b = b.nullspace().cols();

    // (x, y) with a x = b y; the vectors a x span Im a n Im b.
    const RationalMatrix pairs = hcat(a, -b).nullspace();
    RationalMatrix x_part(a.cols(), pairs.cols());
    for (std::size_t r = 0; r < a.cols(); ++r)
        for (const auto& [c, v] : pairs.row(r))
            x_part.set(r, c, v);
    const std::size_t intersection = (a * x_part).rank();

    std::ostringstream inputs;
    inputs << a.rows() << "x" << a.cols() << " and " << b.rows() << "x" << b.cols();
    return compare("kernel_sum_identity", inputs.str(), std::to_string(kernel_sum),
                   std::to_string(kernel_a + kernel_b + intersection));
}

VerificationReport steenrod_sum_check(const SpaceModel& space, int n)
{
    BettiTable summed;
    for (int j = 0; j <= n; ++j)
        summed += sp_relative_betti(space, j);
    const auto degrees = static_cast<std::size_t>(2 * std::max(n, 0) + 1);
    const auto total = sp_betti(space, n).to_vector(degrees);
    const auto pieces = summed.to_vector(degrees);
    // Nothing may live above degree 2n on either side.
    const bool bounded = summed.top_degree() <= 2 * n && sp_betti(space, n).top_degree() <= 2 * n;
    auto report = compare("steenrod_sum", space.to_string() + ", n=" + std::to_string(n),
                          BettiTable(total).to_string(), BettiTable(pieces).to_string());
    report.pass = report.pass && bounded;
    return report;
}

Arrangement random_arrangement(std::mt19937_64& rng, const SpaceModel& space, int max_generators, int max_points,
                               int max_mult, int max_n)
{
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::uniform_int_distribution<int> pick_points(1, max_points);
    std::uniform_int_distribution<int> pick_count(1, max_generators);
    std::uniform_int_distribution<int> pick_mult(0, max_mult);
    const int n = pick_n(rng);
    const int k = pick_points(rng);
    const int r = pick_count(rng);
    std::vector<Divisor> gens;
    while (static_cast<int>(gens.size()) < r) {
        std::vector<std::uint32_t> m(static_cast<std::size_t>(k));
        for (auto& a : m)
            a = static_cast<std::uint32_t>(pick_mult(rng));
        Divisor d(std::move(m));
        if (d.order() >= 1 && d.order() <= static_cast<std::uint64_t>(n))
            gens.push_back(std::move(d));
    }
    return Arrangement(space, n, PointSet::numbered(static_cast<std::size_t>(k)), std::move(gens));
}

RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> entry(-bound, bound);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, entry(rng));
    return m;
}

std::vector<VerificationReport> run_selftest(std::uint64_t seed)
{
    std::vector<VerificationReport> reports;
    const std::string seed_note = "seed=" + std::to_string(seed);

    for (int g = 0; g <= 3; ++g)
        for (int n = 0; n <= 6; ++n)
            reports.push_back(steenrod_sum_check(SpaceModel::closed_surface(g), n));
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            reports.push_back(steenrod_sum_check(SpaceModel::wedge_of_circles(m), n));

    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 8; ++n) {
                const std::string in = "g=" + std::to_string(g) + ", k=" + std::to_string(k) + ", n=" + std::to_string(n);
                reports.push_back(compare("end_cohomology_closed_vs_pipeline", in,
                                          list(end_cohomology_closed(g, k, n).ranks),
                                          list(end_cohomology_pipeline(g, k, n).ranks)));
            }

    for (int g = 0; g <= 2; ++g)
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 4; ++n) {
                const auto space = SpaceModel::closed_surface(g);
                const auto arrangement = Arrangement::distinct_points(space, n, static_cast<std::size_t>(k));
                const std::string in = describe(arrangement);
                reports.push_back(compare("points_case_vs_union", in, points_case_betti(space, n, k).to_string(),
                                          union_betti(arrangement).to_string()));
                std::vector<std::int64_t> expected, actual;
                const auto table = complement_tables(arrangement);
                for (int t = 0; t <= 2 * n; ++t) {
                    expected.push_back(phi(g, k, n, 2 * n - t));
                    actual.push_back(static_cast<std::int64_t>(table.cohomology[static_cast<std::size_t>(t)]));
                }
                reports.push_back(compare("complement_vs_phi", in, list(expected), list(actual)));
            }

    std::mt19937_64 rng(seed);
    const SpaceModel spaces[] = {SpaceModel::closed_surface(0), SpaceModel::closed_surface(1),
                                 SpaceModel::closed_surface(2), SpaceModel::punctured_surface(1, 2),
                                 SpaceModel::wedge_of_circles(3)};
    for (int trial = 0; trial < 50; ++trial) {
        const auto& space = spaces[static_cast<std::size_t>(trial) % std::size(spaces)];
        const auto arrangement = random_arrangement(rng, space, 4, 3, 2, 5);
        const std::string in = describe(arrangement) + ", " + seed_note;
        const BettiTable b = union_betti(arrangement);
        reports.push_back(compare("euler_inclusion_exclusion", in, std::to_string(euler_inclusion_exclusion(arrangement)),
                                  std::to_string(b.euler_characteristic())));
        if (arrangement.generators().size() == 2)
            reports.push_back(
                compare("mayer_vietoris_pair", in, mayer_vietoris_pair_betti(arrangement).to_string(), b.to_string()));
    }

    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_integer_matrix(rng, 5, 7, 2);
        const auto b = random_integer_matrix(rng, 5, 7, 2);
        auto report = kernel_sum_identity_check(a, b);
        report.inputs += ", " + seed_note;
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace symarr
