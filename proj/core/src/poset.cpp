#include "symarr/poset.hpp"

#include <algorithm>
#include <set>

#include "symarr/errors.hpp"

namespace symarr {

namespace {

bool canonical_less(const Divisor& a, const Divisor& b)
{
    const auto oa = a.order(), ob = b.order();
    return oa != ob ? oa < ob : a < b;
}

} // namespace

IntersectionPoset::IntersectionPoset(int n, std::vector<Divisor> elements) : n_(n), elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end(), canonical_less);
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (const auto& d : elements_) {
        if (d.order() > static_cast<std::uint64_t>(n_))
            throw ValidationError("intersection poset: element of order " + std::to_string(d.order()) + " exceeds n = "
                                  + std::to_string(n_));
        if (!elements_.empty() && d.size() != elements_.front().size())
            throw DimensionError("intersection poset: elements over different point sets");
    }
}

int IntersectionPoset::mu(std::size_t i) const
{
    return n_ - static_cast<int>(elements_.at(i).order());
}

int IntersectionPoset::min_mu() const noexcept
{
    return elements_.empty() ? 0 : n_ - static_cast<int>(elements_.back().order());
}

int IntersectionPoset::max_mu() const noexcept
{
    return elements_.empty() ? 0 : n_ - static_cast<int>(elements_.front().order());
}

bool IntersectionPoset::leq(std::size_t i, std::size_t j) const
{
    return divisor_leq(elements_.at(i), elements_.at(j));
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionPoset::relations() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (leq(i, j))
                out.emplace_back(i, j);
    return out;
}

std::ptrdiff_t IntersectionPoset::find(const Divisor& d) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), d, canonical_less);
    if (it == elements_.end() || *it != d)
        return -1;
    return it - elements_.begin();
}

IntersectionPoset intersection_poset(const Arrangement& arrangement)
{
    const auto bound = static_cast<std::uint64_t>(arrangement.n());
    std::set<Divisor> closed(arrangement.generators().begin(), arrangement.generators().end());
    std::vector<Divisor> frontier(closed.begin(), closed.end());
    // Joining each new element with the generators reaches every subset join.
    while (!frontier.empty()) {
        std::vector<Divisor> next;
        for (const auto& d : frontier) {
            for (const auto& g : arrangement.generators()) {
                Divisor j = divisor_join(d, g);
                if (j.order() <= bound && closed.insert(j).second)
                    next.push_back(std::move(j));
            }
        }
        frontier = std::move(next);
    }
    return IntersectionPoset(arrangement.n(), std::vector<Divisor>(closed.begin(), closed.end()));
}

IntersectionPoset ideal(const IntersectionPoset& poset, int j)
{
    std::vector<Divisor> kept;
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (poset.mu(i) >= j)
            kept.push_back(poset[i]);
    return IntersectionPoset(poset.n(), std::move(kept));
}

SimplicialComplex order_complex(const IntersectionPoset& poset)
{
    const std::size_t n = poset.size();
    std::vector<std::vector<std::uint32_t>> above(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (poset.leq(i, j))
                above[i].push_back(static_cast<std::uint32_t>(j));

    // Chains listed with increasing indices, which is increasing in the order.
    std::vector<Simplex> chains;
    Simplex chain;
    auto extend = [&](auto&& self, std::uint32_t v) -> void {
        chain.push_back(v);
        chains.push_back(chain);
        for (auto w : above[v])
            self(self, w);
        chain.pop_back();
    };
    for (std::size_t v = 0; v < n; ++v)
        extend(extend, static_cast<std::uint32_t>(v));
    return SimplicialComplex::from_simplices(n, std::move(chains));
}

} // namespace symarr
