#include "symarr/simplicial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "symarr/errors.hpp"

namespace symarr {

namespace {

void canonicalize(std::vector<std::vector<Simplex>>& by_dim)
{
    for (auto& level : by_dim) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    while (!by_dim.empty() && by_dim.back().empty())
        by_dim.pop_back();
}

Simplex drop_vertex(const Simplex& s, std::size_t i)
{
    Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t v = 0; v < s.size(); ++v)
        if (v != i)
            face.push_back(s[v]);
    return face;
}

} // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices)
{
    std::vector<std::vector<Simplex>> by_dim;
    for (auto& s : simplices) {
        if (s.empty())
            throw ValidationError("simplicial complex: empty simplex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ValidationError("simplicial complex: repeated vertex in simplex");
        if (s.back() >= vertex_count)
            throw ValidationError("simplicial complex: vertex id out of range");
        if (by_dim.size() < s.size())
            by_dim.resize(s.size());
        by_dim[s.size() - 1].push_back(std::move(s));
    }
    canonicalize(by_dim);
    SimplicialComplex complex(std::move(by_dim));
    for (int d = 1; d <= complex.dimension(); ++d) {
        for (const auto& s : complex.simplices(d)) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (complex.index_of(drop_vertex(s, i)) < 0)
                    throw ValidationError("simplicial complex: not closed under taking faces");
            }
        }
    }
    return complex;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, std::span<const Simplex> facets)
{
    std::vector<Simplex> all;
    for (Simplex facet : facets) {
        std::sort(facet.begin(), facet.end());
        facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
        if (facet.empty())
            continue;
        if (facet.size() >= 32)
            throw SizeError("simplicial complex: facet too large to close");
        const std::uint32_t subsets = 1u << facet.size();
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < facet.size(); ++i)
                if (mask & (1u << i))
                    face.push_back(facet[i]);
            all.push_back(std::move(face));
        }
    }
    return from_simplices(vertex_count, std::move(all));
}

std::size_t SimplicialComplex::count(int d) const noexcept
{
    if (d < 0 || d > dimension())
        return 0;
    return by_dim_[static_cast<std::size_t>(d)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const
{
    static const std::vector<Simplex> none;
    if (d < 0 || d > dimension())
        return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::ptrdiff_t SimplicialComplex::index_of(const Simplex& s) const
{
    if (s.empty())
        return -1;
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s)
        return -1;
    return it - level.begin();
}

std::int64_t SimplicialComplex::euler_characteristic() const noexcept
{
    std::int64_t chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count(d));
    return chi;
}

RationalMatrix boundary_matrix(const SimplicialComplex& complex, int d)
{
    if (d < 1)
        throw std::invalid_argument("boundary_matrix: degree must be positive");
    const auto& cols = complex.simplices(d);
    RationalMatrix m(complex.count(d - 1), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Simplex& s = cols[c];
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto row = complex.index_of(drop_vertex(s, i));
            assert(row >= 0);
            m.set(static_cast<std::size_t>(row), c, i % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

BettiTable betti(const SimplicialComplex& complex)
{
    BettiTable table;
    const int top = complex.dimension();
    if (top < 0)
        return table;
    // rank[d] = rank of the boundary map out of degree d; rank[0] = 0.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d)
        rank[static_cast<std::size_t>(d)] = boundary_matrix(complex, d).rank();
    for (int d = 0; d <= top; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        table.set(d, complex.count(d) - rank[ud] - rank[ud + 1]);
    }
    return table;
}

BettiTable reduced_betti(const SimplicialComplex& complex)
{
    BettiTable table = betti(complex);
    if (!complex.empty())
        table.set(0, table[0] > 0 ? table[0] - 1 : 0);
    return table;
}

} // namespace symarr
