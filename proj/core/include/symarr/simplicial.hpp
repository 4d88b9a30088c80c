#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symarr/betti.hpp"
#include "symarr/rational_matrix.hpp"

namespace symarr {

using Simplex = std::vector<std::uint32_t>;

/// Finite abstract simplicial complex on vertices 0..V-1.
///
/// Simplices of each dimension are kept sorted lexicographically (each
/// simplex itself is a strictly increasing vertex list), which fixes the
/// canonical basis order used by boundary_matrix.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Explicit simplex list; every face must be present. Throws
    /// ValidationError if the list is not downward closed or a simplex
    /// references a vertex >= vertex_count.
    static SimplicialComplex from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices);

    /// Downward closure of the given facets.
    static SimplicialComplex from_facets(std::size_t vertex_count, std::span<const Simplex> facets);

    std::size_t vertex_count() const noexcept { return count(0); }
    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const noexcept { return by_dim_.empty(); }

    std::size_t count(int d) const noexcept;
    const std::vector<Simplex>& simplices(int d) const;
    /// Position of s among the simplices of its dimension, or -1.
    std::ptrdiff_t index_of(const Simplex& s) const;

    /// sum_d (-1)^d #(d-simplices).
    std::int64_t euler_characteristic() const noexcept;

private:
    explicit SimplicialComplex(std::vector<std::vector<Simplex>> by_dim) : by_dim_(std::move(by_dim)) {}

    std::vector<std::vector<Simplex>> by_dim_;
};

/// Matrix of the boundary map C_d -> C_{d-1}, rows indexed by (d-1)-simplices
/// and columns by d-simplices. Requires d >= 1.
RationalMatrix boundary_matrix(const SimplicialComplex& complex, int d);

/// Rational Betti numbers b_d = dim C_d - rank d_d - rank d_{d+1}.
BettiTable betti(const SimplicialComplex& complex);

/// Reduced Betti numbers; the empty complex has all ranks zero.
BettiTable reduced_betti(const SimplicialComplex& complex);

} // namespace symarr
