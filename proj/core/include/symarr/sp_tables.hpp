#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symarr/betti.hpp"
#include "symarr/space.hpp"

namespace symarr {

/// Additive basis class e_I * gamma^q of H_*(SP^infinity(X); Q).
struct BasisElement {
    std::vector<int> exterior;  ///< sorted subset I of generator indices
    int power = 0;              ///< q, zero unless X is a closed surface

    int degree() const noexcept { return static_cast<int>(exterior.size()) + 2 * power; }
    /// |I| + q: the class first appears in SP^{filtration}(X).
    int filtration() const noexcept { return static_cast<int>(exterior.size()) + power; }

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// All basis classes with filtration <= j, which span H_*(SP^j(X); Q).
/// Enumerates 2^(exterior generators) subsets; meant for small spaces.
std::vector<BasisElement> sp_basis(const SpaceModel& space, int j);

/// Rational Betti numbers of SP^j(X).
BettiTable sp_betti(const SpaceModel& space, int j);

/// Ranks of H_*(SP^j(X), SP^{j-1}(X); Q), with SP^{-1}(X) empty.
BettiTable sp_relative_betti(const SpaceModel& space, int j);

/// Kernel and image ranks of beta_d : H_d(SP^n(M_{g,k})) -> H_d(SP^n(M_g)).
std::pair<std::int64_t, std::int64_t> ker_im_beta(int g, int k, int n, int d);

/// Rank of Im(alpha_p) cap Im(beta_p) inside H_p(SP^n(M_g)).
std::int64_t im_cap(int g, int k, int n, int p);

/// Phi_d^{n,g,k} = rank H^{2n-d} of the complement of the k-point arrangement.
std::int64_t phi(int g, int k, int n, int d);

/// chi(SP^j(X)) as the alternating sum of sp_betti.
std::int64_t sp_euler(const SpaceModel& space, int j);

} // namespace symarr
