#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symarr {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse matrix over Q with exact arbitrary-precision entries.
///
/// Rows are stored as column-sorted lists of non-zero entries. No floating
/// point is involved anywhere.
class RationalMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    /// Dense row-major construction; all rows must have equal length.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept;

    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);
    const std::vector<Entry>& row(std::size_t r) const { return data_.at(r); }

    bool is_zero() const noexcept;
    RationalMatrix transpose() const;
    RationalMatrix operator-() const;

    /// Rank over Q by fraction-free elimination: each column is scaled to a
    /// primitive integer vector and combined with integer multipliers only.
    std::size_t rank() const;

    /// Basis of the right null space, one column per basis vector, from the
    /// reduced row echelon form.
    RationalMatrix nullspace() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> data_;
};

/// Block matrix [a | b]. Throws DimensionError on row mismatch.
RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);

} // namespace symarr
