#include "symarr/betti.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace symarr {

BettiTable::BettiTable(std::initializer_list<std::uint64_t> ranks) : ranks_(ranks) { trim(); }

BettiTable::BettiTable(std::vector<std::uint64_t> ranks) : ranks_(std::move(ranks)) { trim(); }

std::uint64_t BettiTable::operator[](int degree) const noexcept
{
    if (degree < 0 || degree > top_degree())
        return 0;
    return ranks_[static_cast<std::size_t>(degree)];
}

void BettiTable::set(int degree, std::uint64_t rank)
{
    if (degree < 0)
        throw std::out_of_range("BettiTable: negative degree");
    const auto d = static_cast<std::size_t>(degree);
    if (d >= ranks_.size()) {
        if (rank == 0)
            return;
        ranks_.resize(d + 1, 0);
    }
    ranks_[d] = rank;
    trim();
}

void BettiTable::add(int degree, std::uint64_t rank) { set(degree, (*this)[degree] + rank); }

std::vector<std::uint64_t> BettiTable::to_vector(std::size_t size) const
{
    std::vector<std::uint64_t> out(size, 0);
    for (std::size_t d = 0; d < size && d < ranks_.size(); ++d)
        out[d] = ranks_[d];
    return out;
}

std::int64_t BettiTable::euler_characteristic() const noexcept
{
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < ranks_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(ranks_[d]);
    return chi;
}

std::uint64_t BettiTable::total_rank() const noexcept
{
    return std::accumulate(ranks_.begin(), ranks_.end(), std::uint64_t{0});
}

BettiTable& BettiTable::operator+=(const BettiTable& other)
{
    if (other.ranks_.size() > ranks_.size())
        ranks_.resize(other.ranks_.size(), 0);
    for (std::size_t d = 0; d < other.ranks_.size(); ++d)
        ranks_[d] += other.ranks_[d];
    trim();
    return *this;
}

std::string BettiTable::to_string() const
{
    std::string out = "(";
    if (ranks_.empty())
        out += "0";
    for (std::size_t d = 0; d < ranks_.size(); ++d) {
        if (d)
            out += ", ";
        out += std::to_string(ranks_[d]);
    }
    return out + ")";
}

void BettiTable::trim()
{
    while (!ranks_.empty() && ranks_.back() == 0)
        ranks_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const BettiTable& table) { return os << table.to_string(); }

BettiTable tensor(const BettiTable& a, const BettiTable& b)
{
    BettiTable out;
    for (int p = 0; p <= a.top_degree(); ++p) {
        if (a[p] == 0)
            continue;
        for (int q = 0; q <= b.top_degree(); ++q)
            if (b[q] != 0)
                out.add(p + q, a[p] * b[q]);
    }
    return out;
}

} // namespace symarr
