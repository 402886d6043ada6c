#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "unitc/rational.hpp"

namespace unitc {

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string str() const;

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> mat_vec(const RatMatrix& a, const std::vector<Rational>& x);
RatMatrix transposed(const RatMatrix& a);

// Determinant of a 3x3 matrix by direct expansion.
Rational det3(const RatMatrix& m);

// Solves a x = b for square a by Gaussian elimination with exact arithmetic.
// Pivot choice is the first row with a nonzero entry; magnitudes never matter.
std::vector<Rational> solve_linear(const RatMatrix& a, const std::vector<Rational>& b);

// Reduced row echelon form; second member lists the pivot column of each
// pivot row, in order.
std::pair<RatMatrix, std::vector<std::size_t>> rref(RatMatrix a);

std::size_t rank(const RatMatrix& a);

// Basis of the kernel of a, one vector per free column in ascending column
// order, each scaled so its first nonzero entry is exactly 1. Empty when the
// kernel is trivial.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& a);

}  // namespace unitc
