#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace lpcalc {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over Z with unbounded entries.
class IMat {
public:
    IMat() : rows_(0), cols_(0) {}
    IMat(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    template <class T>
    static IMat from_rows(const std::vector<std::vector<T>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        IMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    bool operator==(const IMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IMat operator*(const IMat& o) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;
    bool is_zero() const;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

struct SmithForm {
    IMat d;                   // diagonal, d_1 | d_2 | ..., entries >= 0
    IMat u, v;                // unimodular, u * m * v = d
    int rank = 0;             // number of nonzero diagonal entries
    std::vector<Int> torsion; // diagonal entries > 1
};

SmithForm smith_normal_form(const IMat& m);

// Basis of the integer kernel, one column vector per basis element.
std::vector<std::vector<Int>> kernel_basis(const IMat& m);

// Exact solution of m x = b over Z, if one exists.
std::optional<std::vector<Int>> solve(const IMat& m, const std::vector<Int>& b);

}  // namespace lpcalc
