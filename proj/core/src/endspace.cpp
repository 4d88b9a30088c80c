#include "symarr/endspace.hpp"

#include "symarr/binomial.hpp"
#include "symarr/errors.hpp"
#include "symarr/sp_tables.hpp"

namespace symarr {

namespace {

void validate(int g, int k, int n)
{
    if (g < 0)
        throw ValidationError("end cohomology: genus must be non-negative");
    if (k < 1)
        throw ValidationError("end cohomology: at least one puncture required (k >= 1)");
    if (n < 1)
        throw ValidationError("end cohomology: power must be positive");
}

} // namespace

EndCohomologyTable end_cohomology_closed(int g, int k, int n)
{
    validate(g, k, n);
    EndCohomologyTable table{g, k, n, std::vector<std::int64_t>(static_cast<std::size_t>(2 * n + 1), 0)};
    const int open = 2 * g + k - 1;
    for (int p = 0; p <= 2 * n; ++p) {
        std::int64_t rank = 0;
        if (p <= n - 2)
            rank = binomial(open, p);
        else if (p == n - 1 || p == n)
            rank = binomial(2 * g + k, n) - binomial(2 * g, n);
        else
            rank = binomial(open, 2 * n - 1 - p);
        table.ranks[static_cast<std::size_t>(p)] = rank;
    }
    return table;
}

std::int64_t delta_pipeline(int g, int k, int n, int d)
{
    validate(g, k, n);
    const std::int64_t ker_prev = ker_im_beta(g, k, n, d - 1).first;
    const std::int64_t im_here = ker_im_beta(g, k, n, d).second;
    return phi(g, k, n, d) + ker_prev + im_cap(g, k, n, d - 1) - im_here + im_cap(g, k, n, d);
}

std::int64_t delta_closed(int g, int k, int n, int d)
{
    validate(g, k, n);
    if (d <= n - 1)
        return binomial(2 * g + k - 1, d - 1);
    if (d == n || d == n + 1)
        return binomial(2 * g + k, n) - binomial(2 * g, n);
    return binomial(2 * g + k - 1, 2 * n - d);
}

EndCohomologyTable end_cohomology_pipeline(int g, int k, int n)
{
    validate(g, k, n);
    EndCohomologyTable table{g, k, n, std::vector<std::int64_t>(static_cast<std::size_t>(2 * n + 1), 0)};
    for (int p = 0; p <= 2 * n; ++p)
        table.ranks[static_cast<std::size_t>(p)] = delta_pipeline(g, k, n, 2 * n - p);
    return table;
}

DistinguishReport distinguish(int g, int k, int g2, int k2, int n)
{
    DistinguishReport report;
    report.g = g;
    report.k = k;
    report.g2 = g2;
    report.k2 = k2;
    report.n = n;
    report.homotopy_equivalent = 2 * g + k == 2 * g2 + k2;
    report.first = end_cohomology_closed(g, k, n);
    report.second = end_cohomology_closed(g2, k2, n);
    for (int p = 0; p <= 2 * n; ++p)
        if (report.first[p] != report.second[p])
            report.differing_degrees.push_back(p);
    report.distinguishable = !report.differing_degrees.empty();
    return report;
}

} // namespace symarr
