#include "symarr/rational_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "symarr/errors.hpp"

namespace symarr {

namespace {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntVector& v)
{
    if (v.empty())
        return;
    Integer g = 0;
    for (const auto& [i, x] : v) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1)
            break;
    }
    if (v.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto& entry : v)
            entry.second /= g;
}

// a * u - b * w, dropping zeros. Both inputs sorted by index.
IntVector combine(const Integer& a, const IntVector& u, const Integer& b, const IntVector& w)
{
    IntVector out;
    out.reserve(u.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < u.size() || j < w.size()) {
        if (j == w.size() || (i < u.size() && u[i].first < w[j].first)) {
            out.emplace_back(u[i].first, a * u[i].second);
            ++i;
        } else if (i == u.size() || w[j].first < u[i].first) {
            out.emplace_back(w[j].first, -b * w[j].second);
            ++j;
        } else {
            Integer x = a * u[i].second - b * w[j].second;
            if (x != 0)
                out.emplace_back(u[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionError("RationalMatrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0)
                m.data_[r].emplace_back(c, rows[r][c]);
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long long>>& rows)
{
    std::vector<std::vector<Rational>> q;
    q.reserve(rows.size());
    for (const auto& row : rows)
        q.emplace_back(row.begin(), row.end());
    return from_rows(q);
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i].emplace_back(i, 1);
    return m;
}

std::size_t RationalMatrix::nonzeros() const noexcept
{
    std::size_t n = 0;
    for (const auto& row : data_)
        n += row.size();
    return n;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("RationalMatrix::at");
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? it->second : Rational(0);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value)
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("RationalMatrix::set");
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (value == 0)
            row.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        row.insert(it, Entry(c, value));
    }
}

bool RationalMatrix::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](const auto& row) { return row.empty(); });
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[r])
            t.data_[c].emplace_back(r, x);
    return t;
}

RationalMatrix RationalMatrix::operator-() const
{
    RationalMatrix m = *this;
    for (auto& row : m.data_)
        for (auto& entry : row)
            entry.second = -entry.second;
    return m;
}

std::size_t RationalMatrix::rank() const
{
    // Column vectors, scaled to primitive integer vectors.
    std::vector<IntVector> columns(cols_);
    {
        std::vector<std::vector<std::pair<std::size_t, Rational>>> raw(cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, x] : data_[r])
                raw[c].emplace_back(r, x);
        for (std::size_t c = 0; c < cols_; ++c) {
            Integer lcm = 1;
            for (const auto& [r, x] : raw[c])
                lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
            columns[c].reserve(raw[c].size());
            for (const auto& [r, x] : raw[c])
                columns[c].emplace_back(r, boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
            make_primitive(columns[c]);
        }
    }

    // Echelon basis keyed by leading (smallest) row index.
    std::unordered_map<std::size_t, IntVector> pivots;
    for (auto& v : columns) {
        while (!v.empty()) {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end())
                break;
            const IntVector& p = it->second;
            const Integer g = boost::multiprecision::gcd(p.front().second, v.front().second);
            v = combine(p.front().second / g, v, v.front().second / g, p);
            make_primitive(v);
        }
        if (!v.empty()) {
            const auto lead = v.front().first;
            pivots.emplace(lead, std::move(v));
        }
    }
    return pivots.size();
}

RationalMatrix RationalMatrix::nullspace() const
{
    // Dense reduced row echelon form.
    std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_, Rational(0)));
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[r])
            a[r][c] = x;

    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
        std::size_t r = pivot_row;
        while (r < rows_ && a[r][c] == 0)
            ++r;
        if (r == rows_)
            continue;
        std::swap(a[r], a[pivot_row]);
        const Rational inv = 1 / a[pivot_row][c];
        for (std::size_t k = c; k < cols_; ++k)
            a[pivot_row][k] *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < cols_; ++k)
                a[i][k] -= f * a[pivot_row][k];
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    RationalMatrix basis(cols_, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const auto f = free_cols[j];
        basis.set(f, j, 1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            if (a[i][f] != 0)
                basis.set(pivot_cols[i], j, -a[i][f]);
    }
    return basis;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionError("RationalMatrix: product shape mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    std::vector<Rational> acc(b.cols_);
    std::vector<bool> touched(b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        std::fill(touched.begin(), touched.end(), false);
        for (const auto& [k, x] : a.data_[r])
            for (const auto& [c, y] : b.data_[k]) {
                acc[c] += x * y;
                touched[c] = true;
            }
        for (std::size_t c = 0; c < b.cols_; ++c)
            if (touched[c] && acc[c] != 0)
                out.data_[r].emplace_back(c, acc[c]);
    }
    return out;
}

std::string RationalMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << at(r, c);
        os << "]\n";
    }
    return os.str();
}

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionError("hcat: row counts differ (" + std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
    RationalMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (const auto& [c, x] : a.row(r))
            out.set(r, c, x);
        for (const auto& [c, x] : b.row(r))
            out.set(r, a.cols() + c, x);
    }
    return out;
}

} // namespace symarr
