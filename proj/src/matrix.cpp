#include "unitc/matrix.hpp"

#include <sstream>

#include "unitc/errors.hpp"

namespace unitc {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeMismatch("expected " + std::to_string(rows_ * cols_) + " entries, got " +
                            std::to_string(data_.size()));
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::size_t RatMatrix::index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw InvariantViolation("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") out of range for " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_));
    }
    return i * cols_ + j;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << (*this)(i, j).str();
        }
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
    }
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

std::vector<Rational> mat_vec(const RatMatrix& a, const std::vector<Rational>& x) {
    if (x.size() != a.cols()) {
        throw ShapeMismatch("matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                            std::to_string(x.size()) + " entries");
    }
    std::vector<Rational> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            y[i] += a(i, j) * x[j];
        }
    }
    return y;
}

RatMatrix transposed(const RatMatrix& a) {
    RatMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t(j, i) = a(i, j);
        }
    }
    return t;
}

Rational det3(const RatMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) {
        throw ShapeMismatch("det3 needs a 3x3 matrix, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
    }
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::vector<Rational> solve_linear(const RatMatrix& a, const std::vector<Rational>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw ShapeMismatch("solve_linear needs a square matrix, got " + std::to_string(n) + "x" +
                            std::to_string(a.cols()));
    }
    if (b.size() != n) {
        throw ShapeMismatch("right-hand side has " + std::to_string(b.size()) +
                            " entries, expected " + std::to_string(n));
    }

    RatMatrix work = a;
    std::vector<Rational> rhs = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work(col, j), work(pivot, j));
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (work(row, col).is_zero()) continue;
            Rational factor = work(row, col) / work(col, col);
            for (std::size_t j = col; j < n; ++j) {
                work(row, j) -= factor * work(col, j);
            }
            rhs[row] -= factor * rhs[col];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= work(i, j) * x[j];
        }
        x[i] = acc / work(i, i);
    }
    return x;
}

std::pair<RatMatrix, std::vector<std::size_t>> rref(RatMatrix a) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(pivot, j));
        }
        Rational lead = a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) /= lead;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Rational factor = a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                a(r, j) -= factor * a(row, j);
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivot_cols)};
}

std::size_t rank(const RatMatrix& a) {
    return rref(a).second.size();
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& a) {
    auto [r, pivot_cols] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols());
        v[free] = 1;
        for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
            v[pivot_cols[p]] = -r(p, free);
        }
        // Scale so the first nonzero entry is 1; with ascending free columns
        // this makes the basis canonical.
        for (const Rational& entry : v) {
            if (!entry.is_zero()) {
                Rational lead = entry;
                for (Rational& e : v) e /= lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace unitc
