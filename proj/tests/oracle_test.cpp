#include <gtest/gtest.h>

#include <random>

#include "symarr/errors.hpp"
#include "symarr/oracle.hpp"
#include "symarr/sp_tables.hpp"

namespace symarr {
namespace {

Divisor D(std::vector<std::uint32_t> m) { return Divisor(std::move(m)); }

TEST(EulerInclusionExclusion, Examples)
{
    const auto torus = SpaceModel::closed_surface(1);
    EXPECT_EQ(euler_inclusion_exclusion(Arrangement(torus, 2, PointSet::numbered(2), {D({1, 0}), D({0, 1})})), -1);
    EXPECT_EQ(euler_inclusion_exclusion(Arrangement(torus, 2, PointSet::numbered(2), {})), 0);
    const auto sphere = SpaceModel::closed_surface(0);
    EXPECT_EQ(euler_inclusion_exclusion(Arrangement(sphere, 4, PointSet::numbered(2), {D({1, 1})})),
              sp_euler(sphere, 2));
}

TEST(EulerInclusionExclusion, SizeCap)
{
    std::vector<Divisor> gens;
    for (std::size_t i = 0; i < 17; ++i)
        gens.push_back(Divisor::point(17, i));
    EXPECT_THROW(euler_inclusion_exclusion(Arrangement(SpaceModel::closed_surface(1), 2, PointSet::numbered(17), gens)),
                 SizeError);
}

TEST(MayerVietoris, Examples)
{
    const auto torus = SpaceModel::closed_surface(1);
    EXPECT_EQ(mayer_vietoris_pair_betti(Arrangement(torus, 2, PointSet::numbered(2), {D({1, 0}), D({0, 1})})),
              BettiTable({1, 4, 2}));
    // Disjoint: 2 x1 and 2 x2 in SP^3 meet only in order 4.
    EXPECT_EQ(mayer_vietoris_pair_betti(Arrangement(torus, 3, PointSet::numbered(2), {D({2, 0}), D({0, 2})})),
              sp_betti(torus, 1) + sp_betti(torus, 1));
    // Nested: 2 x1 + SP^1 lies inside x1 + SP^2.
    EXPECT_EQ(mayer_vietoris_pair_betti(Arrangement(torus, 3, PointSet::numbered(1), {D({1}), D({2})})),
              sp_betti(torus, 2));
    EXPECT_THROW(mayer_vietoris_pair_betti(Arrangement(torus, 3, PointSet::numbered(1), {D({1})})), ValidationError);
}

TEST(KernelSumIdentity, Examples)
{
    const auto id = RationalMatrix::identity(2);
    const auto r = kernel_sum_identity_check(id, id);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.expected, "2");

    const auto a = RationalMatrix::from_rows(std::vector<std::vector<long long>>{{1, 2, 0}, {0, 0, 1}, {1, 2, 1}});
    const RationalMatrix zero(3, 4);
    const auto z = kernel_sum_identity_check(a, zero);
    EXPECT_TRUE(z.pass);
    EXPECT_EQ(z.expected, std::to_string(3 - a.rank() + 4));

    EXPECT_THROW(kernel_sum_identity_check(RationalMatrix(2, 2), RationalMatrix(3, 2)), DimensionError);
}

TEST(KernelSumIdentity, RandomMatrices)
{
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_integer_matrix(rng, 5, 7, 2);
        auto b = random_integer_matrix(rng, 5, 7, 2);
        if (trial % 2 == 0) {
            // Low-rank factors make the intersection term non-trivial.
            a = random_integer_matrix(rng, 5, 2, 2) * random_integer_matrix(rng, 2, 7, 2);
            b = random_integer_matrix(rng, 5, 3, 2) * random_integer_matrix(rng, 3, 7, 2);
        }
        const auto r = kernel_sum_identity_check(a, b);
        EXPECT_TRUE(r.pass) << r.expected << " vs " << r.actual;
    }
}

TEST(SteenrodSum, Examples)
{
    EXPECT_TRUE(steenrod_sum_check(SpaceModel::closed_surface(1), 2).pass);
    EXPECT_TRUE(steenrod_sum_check(SpaceModel::wedge_of_circles(4), 3).pass);
    EXPECT_TRUE(steenrod_sum_check(SpaceModel::punctured_surface(2, 2), 0).pass);
    EXPECT_EQ(steenrod_sum_check(SpaceModel::closed_surface(1), 2).expected, "(1, 2, 2, 2, 1)");
}

TEST(Selftest, PassesAndIsDeterministic)
{
    const auto a = run_selftest(42);
    const auto b = run_selftest(42);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE(a[i].pass) << a[i].name << " " << a[i].inputs;
        EXPECT_EQ(a[i].inputs, b[i].inputs);
        EXPECT_EQ(a[i].actual, b[i].actual);
    }
}

} // namespace
} // namespace symarr
