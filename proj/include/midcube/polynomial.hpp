#pragma once

// Dense univariate polynomials over the rationals, always in canonical
// form: coefficients lowest degree first, no trailing zero, and the zero
// polynomial is the empty coefficient sequence.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "midcube/rational.hpp"

namespace midcube {

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs_low_first)
        : coeffs_(coeffs_low_first) {
        trim();
    }

    static Polynomial from_coefficients(std::vector<Rational> coeffs_low_first) {
        Polynomial p;
        p.coeffs_ = std::move(coeffs_low_first);
        p.trim();
        return p;
    }

    static Polynomial constant(Rational c) { return Polynomial{std::move(c)}; }
    static Polynomial x() { return Polynomial{Rational(0), Rational(1)}; }

    static Polynomial monomial(Rational c, std::size_t deg) {
        std::vector<Rational> v(deg + 1, Rational(0));
        v[deg] = std::move(c);
        return from_coefficients(std::move(v));
    }

    // Product of (x - r) over the given roots, with multiplicities.
    static Polynomial from_integer_roots(const std::vector<std::pair<Integer, int>>& roots) {
        Polynomial p = constant(Rational(1));
        for (const auto& [root, mult] : roots)
            for (int j = 0; j < mult; ++j)
                p = p * Polynomial{Rational(-root), Rational(1)};
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational leading_coefficient() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
        for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
        return from_coefficients(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
        for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] -= q.coeffs_[i];
        return from_coefficients(std::move(out));
    }

    Polynomial operator-() const {
        std::vector<Rational> out(coeffs_);
        for (auto& c : out) c = -c;
        return from_coefficients(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return Polynomial();
        std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
                out[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return from_coefficients(std::move(out));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        if (s == 0) return Polynomial();
        std::vector<Rational> out(p.coeffs_);
        for (auto& c : out) c *= s;
        return from_coefficients(std::move(out));
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.coeffs_ == q.coeffs_;
    }

    // Exact Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // p(-x): odd-degree coefficients negated.
    Polynomial reflected() const {
        std::vector<Rational> out(coeffs_);
        for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
        return from_coefficients(std::move(out));
    }

    // p(a*x + b) via Horner over the polynomial ring.
    Polynomial composed_with_linear(const Rational& a, const Rational& b) const {
        const Polynomial inner{b, a};
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + constant(*it);
        return acc;
    }

    // Quotient of division by (x - r); remainder must be zero.
    Polynomial divided_by_root(const Rational& r) const {
        if (is_zero()) throw std::domain_error("dividing zero polynomial by a root");
        std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
        Rational carry(0);
        for (std::size_t i = coeffs_.size(); i-- > 1;) {
            carry = coeffs_[i] + carry * r;
            q[i - 1] = carry;
        }
        if (coeffs_[0] + carry * r != 0)
            throw std::domain_error("not a root: remainder nonzero");
        return from_coefficients(std::move(q));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            const bool unit = mag == 1 && i > 0;
            if (!unit) s += midcube::to_string(mag);
            if (i > 0) {
                if (!unit) s += "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;  // lowest degree first, no trailing zero
};

struct IntegerRootFactorization {
    std::vector<std::pair<Integer, int>> roots;  // (root, multiplicity), roots descending
    Polynomial residual;                         // no integer roots in [-bound, bound]
};

// Peel integer roots off p: p = residual * prod (x - r)^m exactly. Candidate
// roots are the integers in [-bound, bound] dividing the constant term of the
// denominator-cleared polynomial (after stripping any roots at zero).
inline IntegerRootFactorization factor_integer_roots(const Polynomial& p, const Integer& bound) {
    if (p.is_zero()) throw std::domain_error("factoring the zero polynomial");

    IntegerRootFactorization out;
    Polynomial rem = p;

    int zero_mult = 0;
    while (!rem.is_zero() && rem.degree() >= 1 && rem.coefficient(0) == 0) {
        rem = rem.divided_by_root(Rational(0));
        ++zero_mult;
    }

    // Integer roots of rem divide the constant term once denominators are
    // cleared; scaling by a positive integer does not change the root set.
    Integer scaled_c0 = numerator(rem.coefficient(0));
    {
        Integer den(1);
        for (const auto& c : rem.coefficients()) den = lcm(den, denominator(c));
        scaled_c0 = numerator(rem.coefficient(0)) * (den / denominator(rem.coefficient(0)));
    }

    const Integer B = bound < 0 ? Integer(0) : bound;
    for (Integer r = B; r >= -B; --r) {
        if (r == 0) {
            if (zero_mult > 0) out.roots.emplace_back(Integer(0), zero_mult);
            continue;
        }
        if (rem.degree() < 1) continue;
        if (scaled_c0 % r != 0) continue;
        int mult = 0;
        while (rem.degree() >= 1 && rem(Rational(r)) == 0) {
            rem = rem.divided_by_root(Rational(r));
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
    }
    out.residual = rem;
    return out;
}

}  // namespace midcube
