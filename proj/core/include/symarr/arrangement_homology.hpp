#pragma once

#include <cstdint>
#include <vector>

#include "symarr/betti.hpp"
#include "symarr/divisor.hpp"
#include "symarr/poset.hpp"

namespace symarr {

/// One summand H_p(SP^j, SP^{j-1}) (x) H_q(Delta(P_j)) of the union homology.
struct DecompositionTerm {
    int j = 0;
    int p = 0;
    int q = 0;
    std::uint64_t multiplicity = 0;

    int total_degree() const noexcept { return p + q; }
    friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Kernel/cokernel ranks of H_*(union) -> H_*(SP^n(M_g)) and the resulting
/// rational cohomology of the complement SP^n(M_g) minus the union.
struct ComplementTable {
    int n = 0;
    std::vector<std::uint64_t> kernel;      ///< A_d, d = 0..2n
    std::vector<std::uint64_t> cokernel;    ///< B_d, d = 0..2n
    std::vector<std::uint64_t> cohomology;  ///< rank H^t, t = 0..2n
};

/// Betti numbers of Delta(P_j) for j = 0..max_mu. P_j only changes where j
/// crosses a rank value, so each distinct ideal is computed once.
std::vector<BettiTable> ideal_betti_numbers(const IntersectionPoset& poset);

/// Summands of the filtration-indexed decomposition, sorted by (j, p, q).
std::vector<DecompositionTerm> union_decomposition(const Arrangement& arrangement);

/// Ranks of H_*(union of the arrangement; Q).
///
/// Evaluates both the single sum over j and the two-part form (Kuenneth of
/// SP^{min mu}(X) x Delta(P) plus relative terms above min mu) and throws
/// std::logic_error if they disagree.
BettiTable union_betti(const Arrangement& arrangement);

/// Two-part form only: H_*(SP^m x Delta(P)) + sum_{j=m+1}^{M} rel(j) (x) Delta(P_j).
BettiTable union_betti_two_part(const Arrangement& arrangement);

/// Closed form for the arrangement of k distinct points x_i + SP^{n-1}(X).
BettiTable points_case_betti(const SpaceModel& space, int n, int k);

/// Betti numbers of the p-skeleton of the simplex on k vertices.
BettiTable simplex_skeleton_betti(int k, int p);

/// Requires a closed surface (Poincare duality) and a non-empty poset.
/// Throws UnsupportedSpaceError or ValidationError otherwise.
ComplementTable complement_tables(const Arrangement& arrangement);

} // namespace symarr
