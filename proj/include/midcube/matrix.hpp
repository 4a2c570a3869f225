#pragma once

// Dense exact rational matrices and the fraction-free elimination kernels
// behind rank, nullity and nullspace bases. Elimination runs on integer
// rows (denominators cleared per row) in Bareiss form so intermediate
// entries stay minors of the input instead of blowing up.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "midcube/polynomial.hpp"
#include "midcube/rational.hpp"

namespace midcube {

class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RationalMatrix ones(std::size_t rows, std::size_t cols) {
        RationalMatrix m(rows, cols);
        for (auto& e : m.data_) e = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
        a.require_same_shape(b);
        RationalMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
        return out;
    }

    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
        a.require_same_shape(b);
        RationalMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
        return out;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        RationalMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Rational& ail = a(i, l);
                if (ail == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += ail * b(l, j);
            }
        return out;
    }

    friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
        RationalMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
        return out;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<Rational> out(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

  private:
    void require_same_shape(const RationalMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> data_;  // row-major
};

// Horner evaluation of p(A).
inline RationalMatrix matrix_poly_eval(const Polynomial& p, const RationalMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("matrix_poly_eval needs a square matrix");
    const std::size_t n = a.rows();
    RationalMatrix acc(n, n);
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * a;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += c[i];
    }
    return acc;
}

namespace detail {

struct EchelonForm {
    std::vector<std::vector<Integer>> rows;  // upper-trapezoidal after elimination
    std::vector<std::size_t> pivot_cols;     // one per pivot row, ascending
    std::size_t cols = 0;
    std::size_t rank() const { return pivot_cols.size(); }
};

// Bareiss fraction-free elimination with implicit column pivoting, exact on
// integer rows. Divisions are checked: a nonzero remainder signals a broken
// invariant rather than silently corrupting the result.
inline EchelonForm fraction_free_echelon(std::vector<std::vector<Integer>> m, std::size_t cols) {
    EchelonForm ef;
    ef.cols = cols;
    const std::size_t nrows = m.size();
    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        // Smallest nonzero magnitude as pivot keeps the minors modest.
        std::size_t piv = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (m[i][c] == 0) continue;
            if (piv == nrows || abs(m[i][c]) < abs(m[piv][c])) piv = i;
        }
        if (piv == nrows) continue;  // free column
        std::swap(m[r], m[piv]);
        const Integer pivot = m[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            // Bareiss row update; rows with a zero factor still rescale by
            // pivot/prev so later divisions stay exact.
            const Integer factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                Integer num = pivot * m[i][j];
                if (factor != 0) num -= factor * m[r][j];
                Integer q, rem;
                divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("fraction-free elimination: inexact division");
                m[i][j] = std::move(q);
            }
        }
        prev = pivot;
        ef.pivot_cols.push_back(c);
        ++r;
    }
    m.resize(ef.pivot_cols.size());  // zero rows below carry no information
    ef.rows = std::move(m);
    return ef;
}

// Clear denominators row by row; row scaling preserves rank and nullspace.
inline std::vector<std::vector<Integer>> integerize_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer den(1);
        for (std::size_t j = 0; j < m.cols(); ++j) den = lcm(den, denominator(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = numerator(m(i, j)) * (den / denominator(m(i, j)));
    }
    return out;
}

}  // namespace detail

inline std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::fraction_free_echelon(detail::integerize_rows(m), m.cols()).rank();
}

// Kernel dimension of a square matrix, via the same elimination as rank.
inline std::size_t nullity(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("nullity needs a square matrix");
    return m.rows() - rank(m);
}

struct NullspaceResult {
    std::size_t dimension = 0;
    std::vector<std::vector<Rational>> basis;  // each normalized: first nonzero entry is 1
};

// Exact kernel basis: one vector per free column, pivot variables
// back-substituted over the rationals from the integer echelon form.
// Every returned vector satisfies M*b = 0 exactly (verified).
inline NullspaceResult nullspace(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("nullspace needs a square matrix");
    const std::size_t n = m.cols();
    NullspaceResult out;
    if (n == 0) return out;

    const auto ef = detail::fraction_free_echelon(detail::integerize_rows(m), n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : ef.pivot_cols) is_pivot[c] = true;

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[f] = 1;
        for (std::size_t r = ef.rank(); r-- > 0;) {
            const std::size_t pc = ef.pivot_cols[r];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < n; ++j)
                if (ef.rows[r][j] != 0 && v[j] != 0) acc += Rational(ef.rows[r][j]) * v[j];
            v[pc] = -acc / Rational(ef.rows[r][pc]);
        }
        for (const auto& e : v) {
            if (e == 0) continue;
            if (e != 1) {
                const Rational lead = e;
                for (auto& x : v) x /= lead;
            }
            break;
        }
        out.basis.push_back(std::move(v));
    }
    out.dimension = out.basis.size();

    for (const auto& b : out.basis)
        for (const auto& e : m.apply(b))
            if (e != 0) throw std::logic_error("nullspace basis vector fails M*b = 0");
    return out;
}

}  // namespace midcube
