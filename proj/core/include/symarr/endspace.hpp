#pragma once

#include <cstdint>
#include <vector>

namespace symarr {

/// Ranks of the end cohomology E^p(SP^n(M_{g,k})) for p = 0..2n.
struct EndCohomologyTable {
    int g = 0;
    int k = 0;
    int n = 0;
    std::vector<std::int64_t> ranks;

    std::int64_t operator[](int p) const noexcept
    {
        return p < 0 || p >= static_cast<int>(ranks.size()) ? 0 : ranks[static_cast<std::size_t>(p)];
    }
    friend bool operator==(const EndCohomologyTable&, const EndCohomologyTable&) = default;
};

/// Closed binomial form. The degree p = n + 1, which the three-branch
/// formula leaves open, takes the value of the p >= n + 2 branch extended
/// one step down; see end_cohomology_pipeline for the independent route.
/// Throws ValidationError unless g >= 0, k >= 1, n >= 1.
EndCohomologyTable end_cohomology_closed(int g, int k, int n);

/// rank H_d(SP^n(M_g); F_n u K) assembled from the exact-sequence pieces:
/// Phi_d + Ker beta_{d-1} + Cap_{d-1} - Im beta_d + Cap_d.
std::int64_t delta_pipeline(int g, int k, int n, int d);

/// The same rank in closed form, branch by branch over d.
std::int64_t delta_closed(int g, int k, int n, int d);

/// E^p = Delta_{2n-p}, every entry from delta_pipeline.
EndCohomologyTable end_cohomology_pipeline(int g, int k, int n);

struct DistinguishReport {
    int g = 0;
    int k = 0;
    int g2 = 0;
    int k2 = 0;
    int n = 0;
    bool homotopy_equivalent = false;  ///< 2g + k == 2g2 + k2
    EndCohomologyTable first;
    EndCohomologyTable second;
    bool distinguishable = false;      ///< the end tables differ somewhere
    std::vector<int> differing_degrees;
};

/// Compares SP^n(M_{g,k}) and SP^n(M_{g2,k2}) by their end cohomology.
DistinguishReport distinguish(int g, int k, int g2, int k2, int n);

} // namespace symarr
