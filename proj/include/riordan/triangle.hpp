#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

/// Lower-triangular array; row n stores entries (n,0) .. (n,n).
class LowerTriangle {
public:
    LowerTriangle() = default;

    explicit LowerTriangle(std::size_t nrows) {
        rows_.reserve(nrows);
        for (std::size_t n = 0; n < nrows; ++n) rows_.emplace_back(n + 1);
    }

    /// Builds from displayed rows; entries beyond the diagonal must be zero.
    static LowerTriangle from_rows(const std::vector<std::vector<Rational>>& rows) {
        LowerTriangle t(rows.size());
        for (std::size_t n = 0; n < rows.size(); ++n) {
            for (std::size_t k = 0; k < rows[n].size(); ++k) {
                if (k <= n)
                    t.rows_[n][k] = rows[n][k];
                else if (sgn(rows[n][k]) != 0)
                    throw Error("entry above the diagonal at (" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
        }
        return t;
    }

    std::size_t nrows() const noexcept { return rows_.size(); }
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
    const std::vector<Rational>& row(std::size_t n) const { return rows_[n]; }

    Rational& operator()(std::size_t n, std::size_t k) { return rows_[n][k]; }
    const Rational& operator()(std::size_t n, std::size_t k) const { return rows_[n][k]; }

    /// Entry (n,k) with zero outside 0 <= k <= n; n must be below nrows().
    Rational at(long n, long k) const {
        if (n < 0 || k < 0 || k > n) return 0;
        if (static_cast<std::size_t>(n) >= rows_.size())
            throw InsufficientOrder("row " + std::to_string(n) + " beyond the " + std::to_string(rows_.size()) +
                                    " computed rows");
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    LowerTriangle leading(std::size_t nrows) const {
        LowerTriangle t;
        t.rows_.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(std::min(nrows, rows_.size())));
        return t;
    }

    friend bool operator==(const LowerTriangle&, const LowerTriangle&) = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

/// Dense row-major matrix; used for production matrices, which are not triangular.
struct DenseMatrix {
    std::vector<std::vector<Rational>> rows;

    static DenseMatrix zero(std::size_t nrows, std::size_t ncols) {
        return DenseMatrix{std::vector<std::vector<Rational>>(nrows, std::vector<Rational>(ncols))};
    }
    std::size_t nrows() const noexcept { return rows.size(); }
    std::size_t ncols() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
    Rational& operator()(std::size_t i, std::size_t j) { return rows[i][j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

}  // namespace riordan
