#pragma once

#include <cstdint>
#include <vector>

#include "symarr/divisor.hpp"
#include "symarr/simplicial.hpp"

namespace symarr {

/// Intersection poset of an arrangement: joins of generator subsets with
/// order at most n, ordered by divisibility, with rank mu(I) = n - |I|.
///
/// Elements are stored sorted by (order, multiplicity vector). Since I < J
/// forces |I| < |J|, element indices form a linear extension of the order.
class IntersectionPoset {
public:
    IntersectionPoset() = default;

    /// Builds the poset from an explicit element list; the list is sorted
    /// and deduplicated. Throws ValidationError on elements of order > n.
    IntersectionPoset(int n, std::vector<Divisor> elements);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const std::vector<Divisor>& elements() const noexcept { return elements_; }
    const Divisor& operator[](std::size_t i) const { return elements_.at(i); }

    /// mu(I) = n - |I|.
    int mu(std::size_t i) const;
    /// Smallest and largest rank; both 0 for the empty poset.
    int min_mu() const noexcept;
    int max_mu() const noexcept;

    /// elements_[i] <= elements_[j].
    bool leq(std::size_t i, std::size_t j) const;

    /// Strict relations i < j as index pairs, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> relations() const;

    /// Index of d, or -1.
    std::ptrdiff_t find(const Divisor& d) const;

private:
    int n_ = 0;
    std::vector<Divisor> elements_;
};

/// Closure of the generators under binary join, keeping order <= n.
IntersectionPoset intersection_poset(const Arrangement& arrangement);

/// P_j = { I : mu(I) >= j } with the induced order.
IntersectionPoset ideal(const IntersectionPoset& poset, int j);

/// Order complex: vertices are elements, simplices are strict chains.
SimplicialComplex order_complex(const IntersectionPoset& poset);

} // namespace symarr
