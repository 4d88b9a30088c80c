#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace symarr {

/// Graded rational ranks with finite support. Degrees not stored have rank 0,
/// so two tables compare equal iff they agree in every degree.
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(std::initializer_list<std::uint64_t> ranks);
    explicit BettiTable(std::vector<std::uint64_t> ranks);

    std::uint64_t operator[](int degree) const noexcept;
    void set(int degree, std::uint64_t rank);
    void add(int degree, std::uint64_t rank);

    /// Highest degree with non-zero rank, or -1 if all ranks vanish.
    int top_degree() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
    bool is_zero() const noexcept { return ranks_.empty(); }

    /// Ranks in degrees 0..size-1.
    std::vector<std::uint64_t> to_vector(std::size_t size) const;
    std::vector<std::uint64_t> to_vector() const { return ranks_; }

    std::int64_t euler_characteristic() const noexcept;
    std::uint64_t total_rank() const noexcept;

    BettiTable& operator+=(const BettiTable& other);
    friend BettiTable operator+(BettiTable lhs, const BettiTable& rhs) { return lhs += rhs; }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

    /// "(1, 4, 2)".
    std::string to_string() const;

private:
    void trim();

    std::vector<std::uint64_t> ranks_;
};

std::ostream& operator<<(std::ostream& os, const BettiTable& table);

/// Kuenneth product over a field: (a (x) b)_d = sum_{p+q=d} a_p b_q.
BettiTable tensor(const BettiTable& a, const BettiTable& b);

} // namespace symarr
