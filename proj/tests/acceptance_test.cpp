// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact integer comparisons; the only thresholds are the runtime bounds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symarr/arrangement_homology.hpp"
#include "symarr/binomial.hpp"
#include "symarr/endspace.hpp"
#include "symarr/oracle.hpp"
#include "symarr/poset.hpp"
#include "symarr/simplicial.hpp"
#include "symarr/sp_tables.hpp"
#include "test_oracles.hpp"

namespace {

using namespace symarr;

constexpr std::uint64_t kSeed = 20240601;
constexpr double kEndspaceBudgetSeconds = 1.0;
constexpr double kPointsCaseBudgetSeconds = 30.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string ranks(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// Spaces sampled for the randomized arrangement grid of criteria 6 and 7.
SpaceModel random_space(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> kind(0, 2), genus(0, 2), punctures(1, 3), circles(0, 4);
    switch (kind(rng)) {
    case 0: return SpaceModel::closed_surface(genus(rng));
    case 1: return SpaceModel::punctured_surface(genus(rng), punctures(rng));
    default: return SpaceModel::wedge_of_circles(circles(rng));
    }
}

std::vector<Arrangement> randomized_grid()
{
    std::mt19937_64 rng(kSeed);
    std::vector<Arrangement> out;
    for (int i = 0; i < 100; ++i) {
        const SpaceModel space = random_space(rng);
        out.push_back(random_arrangement(rng, space, 4, 3, 2, 5));
    }
    return out;
}

Outcome criterion_1()
{
    Outcome o;
    const auto start = Clock::now();
    int compared = 0;
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 8; ++n) {
                const auto closed = end_cohomology_closed(g, k, n);
                const auto pipeline = end_cohomology_pipeline(g, k, n);
                for (int p = 0; p <= 2 * n; ++p, ++compared)
                    if (closed[p] != pipeline[p])
                        o.fail("g=" + std::to_string(g) + " k=" + std::to_string(k) + " n=" + std::to_string(n) + " p="
                               + std::to_string(p));
            }
    const double elapsed = seconds_since(start);
    if (elapsed >= kEndspaceBudgetSeconds)
        o.fail("runtime " + std::to_string(elapsed) + " s");
    if (o.pass)
        o.detail = std::to_string(compared) + " entries equal in " + std::to_string(elapsed) + " s";
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    const std::vector<std::pair<std::array<int, 3>, std::vector<std::int64_t>>> spots{
        {{1, 3, 2}, {1, 9, 9, 1, 0}}, {{2, 1, 2}, {1, 4, 4, 1, 0}}, {{1, 1, 2}, {1, 2, 2, 1, 0}}};
    for (const auto& [gkn, expected] : spots) {
        const auto t = end_cohomology_closed(gkn[0], gkn[1], gkn[2]);
        if (t.ranks != expected)
            o.fail("(" + std::to_string(gkn[0]) + "," + std::to_string(gkn[1]) + "," + std::to_string(gkn[2]) + ") -> "
                   + ranks(t.ranks));
    }
    const auto r = distinguish(1, 3, 2, 1, 2);
    if (!r.homotopy_equivalent || !r.distinguishable)
        o.fail("M_{1,3} vs M_{2,1}: homotopy_equivalent=" + std::to_string(r.homotopy_equivalent)
               + " distinguishable=" + std::to_string(r.distinguishable));
    if (o.pass)
        o.detail = "spot tables match; M_{1,3} vs M_{2,1} homotopy equivalent and distinguishable";
    return o;
}

Outcome criterion_3()
{
    Outcome o;
    const auto start = Clock::now();
    int cases = 0;
    for (int g = 0; g <= 3; ++g)
        for (int k = 1; k <= 5; ++k)
            for (int n = 1; n <= 6; ++n, ++cases) {
                const auto space = SpaceModel::closed_surface(g);
                const auto closed = points_case_betti(space, n, k);
                const auto general = union_betti(Arrangement::distinct_points(space, n, static_cast<std::size_t>(k)));
                if (closed != general)
                    o.fail("g=" + std::to_string(g) + " k=" + std::to_string(k) + " n=" + std::to_string(n) + ": "
                           + closed.to_string() + " vs " + general.to_string());
            }
    const double elapsed = seconds_since(start);
    if (elapsed >= kPointsCaseBudgetSeconds)
        o.fail("runtime " + std::to_string(elapsed) + " s");
    if (o.pass)
        o.detail = std::to_string(cases) + " arrangements agree in " + std::to_string(elapsed) + " s";
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    const auto torus = SpaceModel::closed_surface(1);
    const auto two = Arrangement::distinct_points(torus, 2, 2);
    if (union_betti(two) != BettiTable({1, 4, 2}))
        o.fail("T^2 wedge T^2: " + union_betti(two).to_string());
    const auto lines = Arrangement::distinct_points(SpaceModel::closed_surface(0), 2, 2);
    if (union_betti(lines) != BettiTable({1, 0, 2}))
        o.fail("S^2 wedge S^2: " + union_betti(lines).to_string());

    int singles = 0;
    const std::vector<SpaceModel> spaces{SpaceModel::closed_surface(0), SpaceModel::closed_surface(1),
                                         SpaceModel::closed_surface(3), SpaceModel::punctured_surface(1, 2),
                                         SpaceModel::wedge_of_circles(3)};
    for (const auto& space : spaces)
        for (int n = 1; n <= 5; ++n)
            for (std::uint32_t a = 0; a <= 3; ++a)
                for (std::uint32_t b = 0; b <= 3; ++b) {
                    const Divisor d({a, b});
                    if (d.order() < 1 || d.order() > static_cast<std::uint64_t>(n))
                        continue;
                    ++singles;
                    const Arrangement arr(space, n, PointSet::numbered(2), {d});
                    const auto expected = sp_betti(space, n - static_cast<int>(d.order()));
                    if (union_betti(arr) != expected)
                        o.fail("single generator " + d.to_string(arr.points()) + " in SP^" + std::to_string(n) + " of "
                               + space.to_string());
                }
    if (o.pass)
        o.detail = "(1,4,2), (1,0,2) and " + std::to_string(singles) + " single-generator arrangements";
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    int cases = 0;
    for (int g = 0; g <= 3; ++g)
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 5; ++n, ++cases) {
                const auto t = complement_tables(
                    Arrangement::distinct_points(SpaceModel::closed_surface(g), n, static_cast<std::size_t>(k)));
                for (int s = 0; s <= 2 * n; ++s) {
                    const auto got = static_cast<std::int64_t>(t.cohomology[static_cast<std::size_t>(s)]);
                    const std::int64_t expected = s <= n ? binomial(2 * g + k - 1, s) : 0;
                    if (got != expected || got != phi(g, k, n, 2 * n - s))
                        o.fail("g=" + std::to_string(g) + " k=" + std::to_string(k) + " n=" + std::to_string(n) + " t="
                               + std::to_string(s) + ": " + std::to_string(got));
                }
            }
    if (o.pass)
        o.detail = std::to_string(cases) + " arrangements match C(2g+k-1, t) and phi";
    return o;
}

Outcome criterion_6(const std::vector<Arrangement>& grid)
{
    Outcome o;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto chi = union_betti(grid[i]).euler_characteristic();
        const auto ie = euler_inclusion_exclusion(grid[i]);
        if (chi != ie)
            o.fail("arrangement #" + std::to_string(i) + ": " + std::to_string(chi) + " vs " + std::to_string(ie));
    }
    if (o.pass)
        o.detail = std::to_string(grid.size()) + " random arrangements, seed " + std::to_string(kSeed);
    return o;
}

Outcome criterion_7(const std::vector<Arrangement>& grid)
{
    Outcome o;
    int pairs = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].generators().size() != 2)
            continue;
        ++pairs;
        const auto u = union_betti(grid[i]);
        const auto mv = mayer_vietoris_pair_betti(grid[i]);
        if (u != mv)
            o.fail("arrangement #" + std::to_string(i) + ": " + u.to_string() + " vs " + mv.to_string());
    }
    if (pairs == 0)
        o.fail("grid contains no two-generator arrangement");
    if (o.pass)
        o.detail = std::to_string(pairs) + " two-generator arrangements";
    return o;
}

Outcome criterion_8()
{
    Outcome o;
    std::vector<SpaceModel> spaces;
    for (int g = 0; g <= 4; ++g)
        spaces.push_back(SpaceModel::closed_surface(g));
    for (int m = 0; m <= 8; ++m)
        spaces.push_back(SpaceModel::wedge_of_circles(m));
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; 2 * g + k - 1 <= 8; ++k)
            spaces.push_back(SpaceModel::punctured_surface(g, k));
    int checks = 0;
    for (const auto& space : spaces)
        for (int n = 0; n <= 8; ++n, ++checks) {
            const auto r = steenrod_sum_check(space, n);
            if (!r.pass)
                o.fail(r.inputs + ": " + r.expected + " vs " + r.actual);
        }
    if (o.pass)
        o.detail = std::to_string(checks) + " (space, n) pairs";
    return o;
}

Outcome criterion_9(const std::vector<Arrangement>& grid)
{
    Outcome o;
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 100; ++trial) {
        const auto k = testing::random_complex(rng, 8, 6, 5);
        for (int d = 2; d <= k.dimension(); ++d)
            if (!(boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero())
                o.fail("boundary squared non-zero, trial " + std::to_string(trial));
        const auto b = betti(k);
        if (b[0] != testing::component_count(k))
            o.fail("b_0 != components, trial " + std::to_string(trial));
        if (b.euler_characteristic() != k.euler_characteristic())
            o.fail("Euler identity, random trial " + std::to_string(trial));
    }

    std::vector<Simplex> edges;
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t c = a + 1; c < 4; ++c)
            edges.push_back({a, c});
    const auto k4 = SimplicialComplex::from_facets(4, edges);
    if (betti(k4) != BettiTable({1, 3}))
        o.fail("1-skeleton of the 3-simplex: " + betti(k4).to_string());

    int complexes = 0;
    auto check_poset = [&](const IntersectionPoset& p) {
        for (int j = 0; j <= p.max_mu(); ++j) {
            const auto k = order_complex(ideal(p, j));
            ++complexes;
            if (betti(k).euler_characteristic() != k.euler_characteristic())
                o.fail("Euler identity on an order complex");
        }
    };
    for (const auto& a : grid)
        check_poset(intersection_poset(a));
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 6; ++n)
            check_poset(intersection_poset(
                Arrangement::distinct_points(SpaceModel::closed_surface(0), n, static_cast<std::size_t>(k))));
    if (o.pass)
        o.detail = "100 random complexes, K_4 = (1,3), " + std::to_string(complexes) + " order complexes";
    return o;
}

Outcome criterion_10()
{
    Outcome o;
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_integer_matrix(rng, 5, 7, 2);
        const auto b = random_integer_matrix(rng, 5, 7, 2);
        const auto r = kernel_sum_identity_check(a, b);
        if (!r.pass)
            o.fail("pair #" + std::to_string(trial) + ": " + r.expected + " vs " + r.actual);
    }
    if (o.pass)
        o.detail = "200 random 5x7 pairs, seed " + std::to_string(kSeed);
    return o;
}

} // namespace

int main()
{
    const auto grid = randomized_grid();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 end cohomology closed form = pipeline", criterion_1},
        {"2 end cohomology spot values + distinguishability", criterion_2},
        {"3 points case = general union decomposition", criterion_3},
        {"4 union desk checks", criterion_4},
        {"5 complement desk checks", criterion_5},
        {"6 Euler characteristic = inclusion-exclusion", [&] { return criterion_6(grid); }},
        {"7 union = Mayer-Vietoris on pairs", [&] { return criterion_7(grid); }},
        {"8 Steenrod summation", criterion_8},
        {"9 simplicial engine", [&] { return criterion_9(grid); }},
        {"10 kernel-sum identity", criterion_10},
    };

    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %s -- %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
