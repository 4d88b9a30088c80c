#include <gtest/gtest.h>

#include <random>

#include "symarr/errors.hpp"
#include "symarr/simplicial.hpp"
#include "test_oracles.hpp"

namespace symarr {
namespace {

using testing::component_count;
using testing::random_complex;
using testing::rank_mod_p;

std::vector<std::vector<std::int64_t>> to_dense(const RationalMatrix& m)
{
    std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, x] : m.row(r))
            out[r][c] = static_cast<std::int64_t>(boost::multiprecision::numerator(x));
    return out;
}

SimplicialComplex complete_graph(std::uint32_t v)
{
    std::vector<Simplex> edges;
    for (std::uint32_t a = 0; a < v; ++a)
        for (std::uint32_t b = a + 1; b < v; ++b)
            edges.push_back({a, b});
    return SimplicialComplex::from_facets(v, edges);
}

TEST(RationalMatrix, RankOfSmallMatrices)
{
    EXPECT_EQ(RationalMatrix::identity(4).rank(), 4u);
    EXPECT_EQ(RationalMatrix(3, 5).rank(), 0u);
    EXPECT_EQ(RationalMatrix::from_rows(std::vector<std::vector<long long>>{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}).rank(), 2u);

    // Rational entries: row 2 = (1/3) row 1.
    std::vector<std::vector<Rational>> q{{Rational(3, 2), Rational(3)}, {Rational(1, 2), Rational(1)}};
    EXPECT_EQ(RationalMatrix::from_rows(q).rank(), 1u);
}

TEST(RationalMatrix, NullspaceIsKernel)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMatrix m(4, 6);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 6; ++c)
                m.set(r, c, trial % 3 == 0 && r == 3 ? 0 : e(rng));
        const auto basis = m.nullspace();
        EXPECT_EQ(basis.cols(), m.cols() - m.rank());
        EXPECT_TRUE((m * basis).is_zero());
        EXPECT_EQ(basis.rank(), basis.cols());
    }
}

TEST(RationalMatrix, HcatShapeMismatch)
{
    EXPECT_THROW(hcat(RationalMatrix(2, 2), RationalMatrix(3, 1)), DimensionError);
}

TEST(Boundary, EdgeColumn)
{
    const Simplex edge{0, 1};
    const auto k = SimplicialComplex::from_facets(2, std::span(&edge, 1));
    const auto m = boundary_matrix(k, 1);
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 1u);
    EXPECT_EQ(m.at(0, 0), -1);
    EXPECT_EQ(m.at(1, 0), 1);
    EXPECT_THROW(boundary_matrix(k, 0), std::invalid_argument);
}

TEST(Boundary, TriangleBoundaryHasRankTwo)
{
    const auto k = complete_graph(3);
    const auto m = boundary_matrix(k, 1);
    EXPECT_EQ(m.rows(), 3u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m.rank(), 2u);
}

TEST(Boundary, SquaresToZeroOnFullSimplex)
{
    const Simplex tri{0, 1, 2};
    const auto k = SimplicialComplex::from_facets(3, std::span(&tri, 1));
    EXPECT_TRUE((boundary_matrix(k, 1) * boundary_matrix(k, 2)).is_zero());
}

TEST(Betti, Examples)
{
    EXPECT_EQ(betti(complete_graph(3)), BettiTable({1, 1}));
    EXPECT_EQ(betti(complete_graph(4)), BettiTable({1, 3}));
    const Simplex v{0};
    EXPECT_EQ(betti(SimplicialComplex::from_facets(1, std::span(&v, 1))), BettiTable({1}));
    EXPECT_TRUE(betti(SimplicialComplex{}).is_zero());

    // Boundary of the tetrahedron is a 2-sphere.
    std::vector<Simplex> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    EXPECT_EQ(betti(SimplicialComplex::from_facets(4, faces)), BettiTable({1, 0, 1}));
}

TEST(Betti, Reduced)
{
    std::vector<Simplex> two_points{{0}, {1}};
    EXPECT_EQ(reduced_betti(SimplicialComplex::from_facets(2, two_points)), BettiTable({1}));
    std::vector<Simplex> cone{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}};
    EXPECT_TRUE(reduced_betti(SimplicialComplex::from_facets(5, cone)).is_zero());
    EXPECT_TRUE(reduced_betti(SimplicialComplex{}).is_zero());
}

TEST(SimplicialComplex, RejectsNonClosedInput)
{
    EXPECT_THROW(SimplicialComplex::from_simplices(3, {{0}, {1}, {0, 1, 2}}), ValidationError);
    EXPECT_THROW(SimplicialComplex::from_simplices(2, {{0}, {5}}), ValidationError);
    const auto k = SimplicialComplex::from_simplices(2, {{0}, {1}, {0, 1}, {1, 0}, {0}});
    EXPECT_EQ(k.count(0), 2u);
    EXPECT_EQ(k.count(1), 1u);
}

TEST(SimplicialProperty, RandomComplexes)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const auto k = random_complex(rng, 7, 5, 4);
        for (int d = 2; d <= k.dimension(); ++d)
            EXPECT_TRUE((boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero());

        const BettiTable b = betti(k);
        EXPECT_EQ(b.euler_characteristic(), k.euler_characteristic());
        EXPECT_EQ(b[0], component_count(k));

        // Independent rank route: dense elimination mod a large prime.
        for (int d = 1; d <= k.dimension(); ++d) {
            const auto m = boundary_matrix(k, d);
            EXPECT_EQ(m.rank(), rank_mod_p(to_dense(m)));
        }
        EXPECT_EQ(betti(k), b);
    }
}

} // namespace
} // namespace symarr
