#pragma once

// Exact spectra. Two independent routes realize every spectrum: the
// characteristic polynomial (division-checked Faddeev-LeVerrier, small
// orders) and per-eigenvalue nullities of A - lambda*I (any order); closed
// forms for the hypercube, odd graph and middle cube families; the
// doubling spectrum maps; and eigenvector lifting onto the doubles.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "midcube/doubles.hpp"
#include "midcube/graph.hpp"
#include "midcube/matrix.hpp"
#include "midcube/polynomial.hpp"

namespace midcube {

// Exact characteristic polynomials cost ~n^4 big-integer work; above this
// order the nullity route covers every integer eigenvalue anyway.
inline constexpr std::size_t kCharPolyMaxOrder = 128;

struct Spectrum {
    // (eigenvalue, multiplicity), eigenvalues descending.
    std::vector<std::pair<Rational, int>> pairs;
    // Unfactored part of the characteristic polynomial: a degree-0
    // polynomial when the spectrum is fully rational, absent when the
    // factorization is unknown (nullity route above the char-poly cap).
    std::optional<Polynomial> residual;

    int total_multiplicity() const {
        int t = 0;
        for (const auto& [v, m] : pairs) t += m;
        return t;
    }

    void add(const Rational& value, int multiplicity) {
        for (auto& [v, m] : pairs)
            if (v == value) {
                m += multiplicity;
                return;
            }
        pairs.emplace_back(value, multiplicity);
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
    }

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.pairs == b.pairs && a.residual == b.residual;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i) s += ", ";
            s += midcube::to_string(pairs[i].first);
            if (pairs[i].second != 1) s += "^" + std::to_string(pairs[i].second);
        }
        s += "}";
        if (residual && residual->degree() > 0) s += " residual " + residual->to_string();
        return s;
    }
};

// Monic exact characteristic polynomial of the adjacency matrix, by the
// Faddeev-LeVerrier recurrence over the integers. Every division is exact
// and checked, and the final Cayley-Hamilton identity B_n = 0 is asserted.
inline Polynomial char_poly(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kCharPolyMaxOrder)
        throw std::invalid_argument("char_poly: order above cap, use integer_spectrum instead");
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    std::vector<Integer> b(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) b[i * n + i] = 1;
    std::vector<Integer> c(n * n, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        // c = A * b, using the 0/1 structure of the adjacency matrix.
        for (auto& e : c) e = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (int l : g.neighbors(static_cast<int>(i)))
                for (std::size_t j = 0; j < n; ++j) c[i * n + j] += b[l * n + j];
        Integer tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += c[i * n + i];
        Integer ck, rem;
        divide_qr(-tr, Integer(k), ck, rem);
        if (rem != 0) throw std::logic_error("char_poly: inexact trace division");
        coeffs[n - k] = Rational(ck);
        b = c;
        for (std::size_t i = 0; i < n; ++i) b[i * n + i] += ck;
    }
    for (const auto& e : b)
        if (e != 0) throw std::logic_error("char_poly: Cayley-Hamilton check failed");
    return Polynomial::from_coefficients(std::move(coeffs));
}

// Spectrum over the integer candidates in [-bound, bound] (default: max
// degree, which bounds every adjacency eigenvalue), with multiplicities as
// nullities of A - lambda*I via fraction-free elimination. The residual is
// reconstructed from the characteristic polynomial when the order permits.
inline Spectrum integer_spectrum(const Graph& g, std::optional<int> candidate_bound = {}) {
    const std::size_t n = g.order();
    const int bound = candidate_bound.value_or(g.max_degree());
    Spectrum sp;
    for (int lambda = bound; lambda >= -bound; --lambda) {
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (int j : g.neighbors(static_cast<int>(i))) m[i][j] = 1;
            m[i][i] -= lambda;
        }
        const std::size_t mult = n - detail::fraction_free_echelon(std::move(m), n).rank();
        if (mult > 0) sp.pairs.emplace_back(Rational(lambda), static_cast<int>(mult));
    }
    const int found = sp.total_multiplicity();
    if (static_cast<std::size_t>(found) == n) {
        sp.residual = Polynomial::constant(Rational(1));
    } else if (n <= kCharPolyMaxOrder) {
        Polynomial rem = char_poly(g);
        for (const auto& [v, m] : sp.pairs)
            for (int i = 0; i < m; ++i) rem = rem.divided_by_root(v);
        sp.residual = std::move(rem);
    }
    return sp;
}

// Spectrum of the odd graph: distinct eigenvalues (-1)^i (k-i) for
// 0 <= i <= k-1, with multiplicity C(2k-1,i) - C(2k-1,i-1); the equivalent
// closed form (k-i)/k * C(2k,i) is asserted to agree.
inline Spectrum odd_spectrum(int k) {
    if (k < 2) throw std::invalid_argument("odd spectrum needs k >= 2");
    Spectrum sp;
    for (int i = 0; i < k; ++i) {
        const Integer m = binomial(2 * k - 1, i) - (i > 0 ? binomial(2 * k - 1, i - 1) : Integer(0));
        const Integer alt = Integer(k - i) * binomial(2 * k, i) / k;
        if (m != alt) throw std::logic_error("odd spectrum: multiplicity forms disagree");
        const int value = (i % 2 == 0) ? (k - i) : -(k - i);
        sp.add(Rational(value), static_cast<int>(m.convert_to<long>()));
    }
    sp.residual = Polynomial::constant(Rational(1));
    return sp;
}

// Spectrum of the middle cube graph: +-(k-i) with multiplicity
// (k-i)/k * C(2k,i) on each sign, 0 <= i <= k-1.
inline Spectrum mqk_spectrum(int k) {
    if (k < 2) throw std::invalid_argument("middle cube spectrum needs k >= 2");
    Spectrum sp;
    Integer total(0);
    for (int i = 0; i < k; ++i) {
        const Integer m = Integer(k - i) * binomial(2 * k, i) / k;
        sp.add(Rational(k - i), static_cast<int>(m.convert_to<long>()));
        sp.add(Rational(-(k - i)), static_cast<int>(m.convert_to<long>()));
        total += 2 * m;
    }
    if (total != 2 * binomial(2 * k - 1, k))
        throw std::logic_error("middle cube spectrum: multiplicities do not sum to the order");
    sp.residual = Polynomial::constant(Rational(1));
    return sp;
}

// Hypercube spectrum: n - 2i with multiplicity C(n, i).
inline Spectrum hypercube_spectrum(int n) {
    if (n < 1) throw std::invalid_argument("hypercube spectrum needs n >= 1");
    Spectrum sp;
    for (int i = 0; i <= n; ++i)
        sp.add(Rational(n - 2 * i), static_cast<int>(binomial(n, i).convert_to<long>()));
    sp.residual = Polynomial::constant(Rational(1));
    return sp;
}

namespace detail {

// Residuals pass through the doubling maps only when reflection-symmetric
// (or constant); the monic reflection of r is (-1)^deg r * r(-x).
inline Polynomial monic_reflection(const Polynomial& r) {
    Polynomial out = r.reflected();
    if (r.degree() % 2 == 1) out = -out;
    return out;
}

inline const Polynomial& require_symmetric_residual(const Spectrum& sp) {
    if (!sp.residual)
        throw std::invalid_argument("doubling spectrum: residual polynomial unknown");
    const Polynomial& r = *sp.residual;
    if (r.degree() > 0 && monic_reflection(r) != r)
        throw std::invalid_argument("doubling spectrum: residual asymmetric under reflection");
    return r;
}

}  // namespace detail

// Spectrum of the bipartite double: each (lambda, m) contributes
// (+-lambda, m), merged at lambda = 0.
inline Spectrum double_spectrum(const Spectrum& sp) {
    const Polynomial& r = detail::require_symmetric_residual(sp);
    Spectrum out;
    for (const auto& [v, m] : sp.pairs) {
        out.add(v, m);
        out.add(-v, m);
    }
    out.residual = r * detail::monic_reflection(r);
    return out;
}

// Spectrum of the extended bipartite double: (lambda, m) contributes
// (+-(1 + lambda), m).
inline Spectrum extended_double_spectrum(const Spectrum& sp) {
    const Polynomial& r = detail::require_symmetric_residual(sp);
    Spectrum out;
    for (const auto& [v, m] : sp.pairs) {
        out.add(1 + v, m);
        out.add(-1 - v, m);
    }
    Polynomial shifted = r.composed_with_linear(Rational(1), Rational(-1));     // r(x-1)
    Polynomial reflshift = r.composed_with_linear(Rational(-1), Rational(-1));  // r(-x-1)
    if (r.degree() % 2 == 1) reflshift = -reflshift;
    out.residual = shifted * reflshift;
    return out;
}

struct EigenvectorCharge {
    Rational eigenvalue;
    std::vector<Rational> charges;  // one per vertex
};

// Exact check of A*v = lambda*v through the adjacency lists: the charges of
// the neighbors of every vertex must sum to lambda times its own charge.
inline bool is_eigenpair(const Graph& g, const EigenvectorCharge& v) {
    if (v.charges.size() != g.order()) return false;
    bool nonzero = false;
    for (std::size_t i = 0; i < g.order(); ++i) {
        Rational acc(0);
        for (int j : g.neighbors(static_cast<int>(i))) acc += v.charges[j];
        if (acc != v.eigenvalue * v.charges[i]) return false;
        nonzero = nonzero || v.charges[i] != 0;
    }
    return nonzero;
}

// Exact basis of the lambda-eigenspace: nullspace of A - lambda*I, each
// vector normalized so its first nonzero charge is 1.
inline std::vector<EigenvectorCharge> eigenspace_basis(const Graph& g, const Rational& lambda) {
    const std::size_t n = g.order();
    RationalMatrix m = g.adjacency_matrix();
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= lambda;
    std::vector<EigenvectorCharge> out;
    for (auto& b : nullspace(m).basis) out.push_back({lambda, std::move(b)});
    return out;
}

enum class LiftSign { plus, minus };

struct LiftedCharge {
    std::vector<Rational> charges;  // on the doubled vertex set
    Rational double_eigenvalue;    // +-lambda
    Rational extended_eigenvalue;  // +-(1 + lambda)
};

// Lifts an exact eigenpair of G onto its doubles: the plus lift copies the
// charges onto the primed vertices, the minus lift negates them. Both the
// double and the extended double eigen-identities are verified by exact
// multiplication; a failing input eigenpair is rejected up front.
inline LiftedCharge lift_eigenvector(const Graph& g, const EigenvectorCharge& v, LiftSign sign) {
    if (!is_eigenpair(g, v)) throw std::invalid_argument("lift: stale eigenpair");
    const std::size_t n = g.order();
    LiftedCharge lift;
    lift.charges.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        lift.charges[i] = v.charges[i];
        lift.charges[i + n] = sign == LiftSign::plus ? v.charges[i] : -v.charges[i];
    }
    lift.double_eigenvalue = sign == LiftSign::plus ? v.eigenvalue : Rational(-v.eigenvalue);
    lift.extended_eigenvalue = sign == LiftSign::plus ? Rational(1 + v.eigenvalue)
                                                      : Rational(-1 - v.eigenvalue);
    if (!is_eigenpair(bipartite_double(g).graph, {lift.double_eigenvalue, lift.charges}))
        throw std::logic_error("lift: double eigen-identity failed");
    if (!is_eigenpair(extended_bipartite_double(g).graph,
                      {lift.extended_eigenvalue, lift.charges}))
        throw std::logic_error("lift: extended double eigen-identity failed");
    return lift;
}

// Moment identities every adjacency spectrum of a simple graph satisfies:
// sum m = n, sum m*lambda = 0, sum m*lambda^2 = 2|E|. Requires a fully
// rational spectrum.
inline bool spectrum_moments_hold(const Spectrum& sp, const Graph& g) {
    if (!sp.residual || sp.residual->degree() != 0) return false;
    Rational m0(0), m1(0), m2(0);
    for (const auto& [v, m] : sp.pairs) {
        m0 += m;
        m1 += Rational(m) * v;
        m2 += Rational(m) * v * v;
    }
    return m0 == g.order() && m1 == 0 && m2 == Rational(2 * g.size());
}

}  // namespace midcube
