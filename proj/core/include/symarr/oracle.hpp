#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symarr/betti.hpp"
#include "symarr/divisor.hpp"
#include "symarr/rational_matrix.hpp"

namespace symarr {

/// Outcome of one exact comparison. pass holds iff expected == actual.
struct VerificationReport {
    std::string name;
    std::string inputs;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Largest generator count accepted by euler_inclusion_exclusion.
inline constexpr std::size_t kMaxInclusionExclusionGenerators = 16;

/// chi(union) by inclusion-exclusion over generator subsets; the
/// intersection over S is D_S + SP^{n-|D_S|}(X) with D_S the join, or empty.
/// Throws SizeError for more than 16 generators.
std::int64_t euler_inclusion_exclusion(const Arrangement& arrangement);

/// b(F1 u F2) = b(F1) + b(F2) - b(F1 n F2), valid because over Q the
/// inclusions of symmetric products are injective in homology.
/// Throws ValidationError unless there are exactly two generators.
BettiTable mayer_vietoris_pair_betti(const Arrangement& arrangement);

/// dim Ker(a + b) = dim Ker a + dim Ker b + dim(Im a n Im b) for a, b with
/// a common codomain. Left side from an explicit null-space basis of [a|b];
/// the intersection from images of a null-space basis of [a|-b].
VerificationReport kernel_sum_identity_check(const RationalMatrix& a, const RationalMatrix& b);

/// sum_{j=0}^{n} H_d(SP^j, SP^{j-1}) = H_d(SP^n) for all d <= 2n.
VerificationReport steenrod_sum_check(const SpaceModel& space, int n);

/// Random arrangement: up to max_generators generators over up to
/// max_points points, multiplicities <= max_mult, n in [1, max_n].
Arrangement random_arrangement(std::mt19937_64& rng, const SpaceModel& space, int max_generators, int max_points,
                               int max_mult, int max_n);

/// Random dense integer matrix with entries in [-bound, bound].
RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound);

/// The built-in battery behind the CLI selftest command.
std::vector<VerificationReport> run_selftest(std::uint64_t seed);

} // namespace symarr
