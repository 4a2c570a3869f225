#pragma once

// Distance-regularity certification: intersection arrays from pairwise
// level counts, closed-form arrays for the odd graphs, distance polynomials
// via the three-term recurrence, the Hoffman polynomial identity, and the
// multiplicity-from-highest-polynomial formula.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "midcube/metric.hpp"
#include "midcube/polynomial.hpp"
#include "midcube/spectral.hpp"

namespace midcube {

struct IntersectionArray {
    int diameter = 0;     // D
    std::vector<int> b;   // b_0 .. b_{D-1}
    std::vector<int> c;   // c_1 .. c_D (c_i at index i-1)

    // a_0 .. a_D with a_i = b_0 - b_i - c_i (b_D = c_0 = 0).
    std::vector<int> a() const {
        std::vector<int> out(diameter + 1);
        for (int i = 0; i <= diameter; ++i) {
            const int bi = i < diameter ? b[i] : 0;
            const int ci = i > 0 ? c[i - 1] : 0;
            out[i] = b[0] - bi - ci;
        }
        return out;
    }

    friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
        return x.diameter == y.diameter && x.b == y.b && x.c == y.c;
    }

    // Conventional brace notation "{b_0,...,b_{D-1}; c_1,...,c_D}".
    std::string brace_notation() const {
        std::ostringstream os;
        os << '{';
        for (int i = 0; i < diameter; ++i) os << (i ? "," : "") << b[i];
        os << "; ";
        for (int i = 0; i < diameter; ++i) os << (i ? "," : "") << c[i];
        os << '}';
        return os.str();
    }
};

struct DrgWitness {
    int u = 0, v = 0;        // offending ordered pair
    int level = 0;           // their distance h
    std::string detail;      // which count conflicted, and how
};

struct DrgCertificate {
    bool is_drg = false;
    std::optional<IntersectionArray> array;  // present when is_drg
    std::optional<DrgWitness> witness;       // present when not
};

// Distance-regularity by direct counting: for every ordered pair (u, v) at
// distance h, the number of neighbors of u at distance h-1 / h / h+1 from v
// must not depend on the pair. Checking these (1, h+-1, h) triples is
// equivalent to full distance-regularity.
inline DrgCertificate check_distance_regular(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("distance-regularity needs a connected graph");
    const int n = static_cast<int>(g.order());
    const DistanceTable dist = all_pairs_distances(g);
    int dia = 0;
    for (int i = 0; i < n; ++i) dia = std::max(dia, dist.eccentricity(i));

    DrgCertificate cert;
    std::vector<int> b(dia + 1, -1), c(dia + 1, -1), a(dia + 1, -1);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            const int h = dist.at(u, v);
            int below = 0, level = 0, above = 0;
            for (int w : g.neighbors(u)) {
                const int dw = dist.at(w, v);
                if (dw == h - 1) ++below;
                else if (dw == h) ++level;
                else if (dw == h + 1) ++above;
            }
            const auto record = [&](std::vector<int>& slot, int value, const char* name) {
                if (slot[h] == -1) slot[h] = value;
                if (slot[h] != value) {
                    cert.witness = {u, v, h,
                                    std::string(name) + " = " + std::to_string(value) +
                                        " conflicts with " + std::to_string(slot[h])};
                    return false;
                }
                return true;
            };
            if (!record(c, below, "c") || !record(a, level, "a") || !record(b, above, "b"))
                return cert;
        }
    }
    IntersectionArray arr;
    arr.diameter = dia;
    arr.b.assign(b.begin(), b.end() - 1);          // b_0 .. b_{D-1}
    arr.c.assign(c.begin() + 1, c.end());          // c_1 .. c_D
    cert.is_drg = true;
    cert.array = std::move(arr);
    return cert;
}

// Closed-form intersection array of the odd graph: b_j = k - floor((j+1)/2),
// c_j = floor((j+1)/2), diameter k-1. b is stored through b_{D-1} only.
inline IntersectionArray odd_intersection_array(int k) {
    if (k < 2) throw std::invalid_argument("odd intersection array needs k >= 2");
    IntersectionArray arr;
    arr.diameter = k - 1;
    for (int j = 0; j < arr.diameter; ++j) arr.b.push_back(k - (j + 1) / 2);
    for (int j = 1; j <= arr.diameter; ++j) arr.c.push_back((j + 1) / 2);
    return arr;
}

// Distance polynomials p_0 .. p_D from the array, via
// c_{i+1} p_{i+1} = (x - a_i) p_i - b_{i-1} p_{i-1}, p_0 = 1, p_1 = x.
// Then p_i(A) is the distance-i adjacency matrix and deg p_i = i.
inline std::vector<Polynomial> distance_polynomials(const IntersectionArray& arr) {
    for (int ci : arr.c)
        if (ci <= 0) throw std::invalid_argument("malformed array: nonpositive c entry");
    const auto a = arr.a();
    std::vector<Polynomial> p;
    p.push_back(Polynomial::constant(Rational(1)));
    if (arr.diameter == 0) return p;
    p.push_back(Polynomial::x());
    for (int i = 1; i < arr.diameter; ++i) {
        Polynomial next = (Polynomial::x() - Polynomial::constant(Rational(a[i]))) * p[i] -
                          Rational(arr.b[i - 1]) * p[i - 1];
        p.push_back(make_rational(1, arr.c[i]) * next);
    }
    return p;
}

struct HoffmanCheck {
    Polynomial hoffman;        // H = sum of the distance polynomials
    bool matrix_identity = false;  // H(A) = J
    bool scalar_identity = false;  // H(degree) = order
    Rational value_at_degree;
};

inline constexpr std::size_t kMatrixIdentityMaxOrder = 256;

// For a connected regular graph with the given distance polynomials, their
// sum H must satisfy H(A) = J exactly and H(degree) = order.
inline HoffmanCheck hoffman_check(const Graph& g, const std::vector<Polynomial>& polys) {
    if (g.order() > kMatrixIdentityMaxOrder)
        throw std::invalid_argument("hoffman check: order above matrix cap");
    const auto deg = g.regular_degree();
    if (!deg || !is_connected(g))
        throw std::invalid_argument("hoffman check needs a connected regular graph");
    HoffmanCheck out;
    for (const auto& p : polys) out.hoffman = out.hoffman + p;
    out.value_at_degree = out.hoffman(Rational(*deg));
    out.scalar_identity = out.value_at_degree == Rational(g.order());
    out.matrix_identity = matrix_poly_eval(out.hoffman, g.adjacency_matrix()) ==
                          RationalMatrix::ones(g.order(), g.order());
    return out;
}

// The defining property of the distance polynomials: p_i(A) equals the 0/1
// adjacency matrix of the distance-i graph, for every i up to the diameter.
inline bool distance_matrix_identity(const Graph& g, const std::vector<Polynomial>& polys) {
    if (g.order() > kMatrixIdentityMaxOrder)
        throw std::invalid_argument("distance matrix identity: order above matrix cap");
    const RationalMatrix a = g.adjacency_matrix();
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Graph gi = distance_l_graph(g, static_cast<int>(i));
        RationalMatrix expect = gi.adjacency_matrix();
        if (i == 0) expect = RationalMatrix::identity(g.order());
        if (matrix_poly_eval(polys[i], a) != expect) return false;
    }
    return true;
}

// Multiplicities from the highest-degree distance polynomial:
// m(lambda_i) = phi_0 p_D(lambda_0) / (phi_i p_D(lambda_i)) with
// phi_i = prod_{j != i} (lambda_i - lambda_j). Non-integer or non-positive
// results signal inconsistent input.
inline std::vector<Integer> multiplicities_from_highest(const std::vector<Rational>& eigenvalues,
                                                        const Polynomial& p_highest) {
    const std::size_t d = eigenvalues.size();
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (eigenvalues[i] <= eigenvalues[i + 1])
            throw std::invalid_argument("eigenvalues must be distinct and descending");
    std::vector<Rational> phi(d, Rational(1));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) phi[i] *= eigenvalues[i] - eigenvalues[j];
    const Rational top = phi[0] * p_highest(eigenvalues[0]);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < d; ++i) {
        const Rational m = top / (phi[i] * p_highest(eigenvalues[i]));
        if (!is_integral(m) || m <= 0)
            throw std::invalid_argument("multiplicity formula produced a non-positive-integer");
        out.push_back(to_integer(m));
    }
    return out;
}

}  // namespace midcube
