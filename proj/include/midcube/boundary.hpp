#pragma once

// Boundary-graph machinery: signed and absolute eigenvalue-gap products,
// the boundary sum in both summation conventions, the alternating
// polynomial, and the closed forms for middle cube graphs together with
// the two binomial identities behind them.

#include <stdexcept>
#include <vector>

#include "midcube/polynomial.hpp"
#include "midcube/rational.hpp"
#include "midcube/spectral.hpp"

namespace midcube {

struct EigenvalueProducts {
    std::vector<Rational> phi;  // signed: prod_{j != i} (lambda_i - lambda_j)
    std::vector<Rational> pi;   // absolute values of phi
};

// Exact gap products over distinct eigenvalues, descending. The signs of
// phi alternate: sign(phi_i) = (-1)^i.
inline EigenvalueProducts products(const std::vector<Rational>& eigenvalues) {
    const std::size_t d = eigenvalues.size();
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (eigenvalues[i] <= eigenvalues[i + 1])
            throw std::invalid_argument("eigenvalues must be distinct and descending");
    EigenvalueProducts out;
    out.phi.assign(d, Rational(1));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) out.phi[i] *= eigenvalues[i] - eigenvalues[j];
    for (const auto& f : out.phi) out.pi.push_back(abs(f));
    return out;
}

struct BoundarySum {
    Rational with_largest;     // sum_{i=0}^{d} pi_0 / pi_i (includes the i = 0 term, = 1)
    Rational without_largest;  // sum_{i=1}^{d} pi_0 / pi_i
};

// Both summation conventions are exposed; they differ exactly by the i = 0
// term, so with_largest = without_largest + 1 always.
inline BoundarySum boundary_sum(const std::vector<Rational>& eigenvalues) {
    const auto prod = products(eigenvalues);
    BoundarySum s{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < prod.pi.size(); ++i) {
        const Rational term = prod.pi[0] / prod.pi[i];
        s.with_largest += term;
        if (i > 0) s.without_largest += term;
    }
    return s;
}

struct BoundaryReport {
    std::vector<Rational> distinct_eigenvalues;
    EigenvalueProducts products;
    Rational sum;           // the convention including the largest eigenvalue's term
    Rational tail_sum;      // without it
    std::size_t order = 0;
    bool is_boundary = false;  // sum == order
};

// Boundary test on an actual graph: the distinct eigenvalues come from the
// exact integer spectrum, which must be fully rational.
inline BoundaryReport boundary_report(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("boundary test needs a connected graph");
    const Spectrum sp = integer_spectrum(g);
    if (!sp.residual || sp.residual->degree() != 0)
        throw std::invalid_argument("boundary test: residual spectrum nonzero");
    BoundaryReport rep;
    for (const auto& [v, m] : sp.pairs) rep.distinct_eigenvalues.push_back(v);
    rep.products = products(rep.distinct_eigenvalues);
    const auto s = boundary_sum(rep.distinct_eigenvalues);
    rep.sum = s.with_largest;
    rep.tail_sum = s.without_largest;
    rep.order = g.order();
    rep.is_boundary = rep.sum == Rational(rep.order);
    return rep;
}

inline bool is_boundary(const Graph& g) { return boundary_report(g).is_boundary; }

// Closed form for the absolute gap products of the middle cube graph:
// pi_i = i! (2k-i)! / (k-i) for 0 <= i < k, mirrored as
// pi_i = pi_{2k-1-i} for the lower half. The formula is never evaluated at
// i = k; the mirror identity covers that range.
inline Integer mqk_pi_closed_form(int k, int i) {
    if (k < 2) throw std::invalid_argument("pi closed form needs k >= 2");
    if (i < 0 || i > 2 * k - 1) throw std::invalid_argument("pi closed form: index out of range");
    if (i >= k) i = 2 * k - 1 - i;
    return factorial(i) * factorial(2 * k - i) / (k - i);
}

// Unique interpolant of degree d-1 through (lambda_i, (-1)^{i+1}) for
// i = 1..d (the largest eigenvalue excluded), by exact Lagrange
// interpolation. Its value at lambda_0 equals sum_{i=1}^{d} pi_0/pi_i;
// that identity is verified before returning.
inline Polynomial alternating_polynomial(const std::vector<Rational>& eigenvalues) {
    if (eigenvalues.size() < 2)
        throw std::invalid_argument("alternating polynomial needs at least two eigenvalues");
    const std::size_t d = eigenvalues.size() - 1;
    const std::vector<Rational> nodes(eigenvalues.begin() + 1, eigenvalues.end());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (nodes[i] <= nodes[i + 1]) throw std::invalid_argument("duplicate interpolation nodes");

    Polynomial p;
    for (std::size_t i = 0; i < d; ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            basis = basis * Polynomial{-nodes[j], Rational(1)};
            denom *= nodes[i] - nodes[j];
        }
        const Rational value = i % 2 == 0 ? Rational(1) : Rational(-1);  // (-1)^{i+1}, i here 0-based
        p = p + (value / denom) * basis;
    }

    const auto s = boundary_sum(eigenvalues);
    if (p(eigenvalues[0]) != s.without_largest)
        throw std::logic_error("alternating polynomial: value at largest eigenvalue mismatch");
    return p;
}

// The two exact binomial identities behind the middle-cube boundary sum;
// each returns both sides so callers can display them.
struct IdentitySides {
    Integer lhs, rhs;
    bool holds() const { return lhs == rhs; }
};

// sum_{i=0}^{k-1} C(2k,i) = 2^{2k-1} - C(2k-1,k)
inline IdentitySides partial_binomial_row_sum(int k) {
    IdentitySides s{Integer(0), Integer(0)};
    for (int i = 0; i < k; ++i) s.lhs += binomial(2 * k, i);
    s.rhs = pow(Integer(2), 2 * k - 1) - binomial(2 * k - 1, k);
    return s;
}

// sum_{i=1}^{k-1} (i/k) C(2k,i) = 2^{2k-1} - 2 C(2k-1,k-1)
inline IdentitySides weighted_binomial_row_sum(int k) {
    IdentitySides s{Integer(0), Integer(0)};
    Rational lhs(0);
    for (int i = 1; i < k; ++i) lhs += make_rational(i, k) * Rational(binomial(2 * k, i));
    s.lhs = to_integer(lhs);
    s.rhs = pow(Integer(2), 2 * k - 1) - 2 * binomial(2 * k - 1, k - 1);
    return s;
}

}  // namespace midcube
