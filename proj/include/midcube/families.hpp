#pragma once

// Constructors for the graph families under study, with canonical vertex
// labelings: hypercubes, odd graphs, middle cube graphs, and the small
// standard fixtures (cycles, paths, complete graphs, Petersen). Also the
// explicit double-of-odd-graph isomorphism onto the middle cube graph,
// with its verifier.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "midcube/doubles.hpp"
#include "midcube/graph.hpp"

namespace midcube {

// Masks of the given popcount over {0,..,ground-1}, ascending.
inline std::vector<std::uint64_t> masks_of_weight(int ground, int weight) {
    std::vector<std::uint64_t> out;
    if (weight < 0 || weight > ground) return out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ground); ++m)
        if (__builtin_popcountll(m) == weight) out.push_back(m);
    return out;
}

// Vertices are all n-bit masks (vertex index = mask), adjacent when they
// differ in exactly one coordinate; n-regular and bipartite by weight
// parity.
inline Graph hypercube(int n) {
    if (n < 1) throw std::invalid_argument("hypercube needs n >= 1");
    if (n > 20) throw std::invalid_argument("hypercube dimension too large for desk scale");
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::pair<int, int>> es;
    VertexLabels labels{n, {}};
    for (std::uint64_t v = 0; v < size; ++v) {
        labels.masks.push_back(v);
        for (int b = 0; b < n; ++b) {
            const std::uint64_t w = v ^ (std::uint64_t{1} << b);
            if (v < w) es.emplace_back(static_cast<int>(v), static_cast<int>(w));
        }
    }
    return Graph(size, es, std::move(labels));
}

// Vertices are the (k-1)-subsets of a (2k-1)-set, as bitmasks ascending;
// adjacent when disjoint. k-regular on C(2k-1, k-1) vertices.
inline Graph odd_graph(int k) {
    if (k < 2) throw std::invalid_argument("odd graph needs k >= 2");
    const int ground = 2 * k - 1;
    const auto masks = masks_of_weight(ground, k - 1);
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if ((masks[i] & masks[j]) == 0)
                es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(masks.size(), es, VertexLabels{ground, masks});
}

// Subgraph of the (2k-1)-cube induced by the two middle layers: masks of
// weight k-1 (ascending) first, then masks of weight k (ascending);
// adjacent when one mask is the other plus one bit.
inline Graph middle_cube(int k) {
    if (k < 1) throw std::invalid_argument("middle cube needs k >= 1");
    const int ground = 2 * k - 1;
    auto lower = masks_of_weight(ground, k - 1);
    const auto upper = masks_of_weight(ground, k);
    const std::size_t half = lower.size();
    VertexLabels labels{ground, std::move(lower)};
    labels.masks.insert(labels.masks.end(), upper.begin(), upper.end());
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = 0; j < upper.size(); ++j) {
            const std::uint64_t diff = labels.masks[i] ^ upper[j];
            if ((labels.masks[i] & upper[j]) == labels.masks[i] && __builtin_popcountll(diff) == 1)
                es.emplace_back(static_cast<int>(i), static_cast<int>(half + j));
        }
    const std::size_t order = labels.masks.size();
    return Graph(order, es, std::move(labels));
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

inline Graph petersen() { return odd_graph(3); }

struct FamilySpec {
    enum class Family { hypercube, odd, middle_cube, cycle, complete, path, petersen };
    Family family;
    int parameter = 0;

    std::string to_string() const {
        switch (family) {
            case Family::hypercube: return "hypercube:" + std::to_string(parameter);
            case Family::odd: return "odd:" + std::to_string(parameter);
            case Family::middle_cube: return "middle-cube:" + std::to_string(parameter);
            case Family::cycle: return "cycle:" + std::to_string(parameter);
            case Family::complete: return "complete:" + std::to_string(parameter);
            case Family::path: return "path:" + std::to_string(parameter);
            case Family::petersen: return "petersen";
        }
        return "?";
    }
};

// Parses "middle-cube:3", "odd:4", "hypercube:5", ..., "petersen".
inline FamilySpec parse_family_spec(std::string_view s) {
    using Family = FamilySpec::Family;
    const auto colon = s.find(':');
    const std::string_view name = s.substr(0, colon);
    Family family;
    if (name == "hypercube") family = Family::hypercube;
    else if (name == "odd") family = Family::odd;
    else if (name == "middle-cube") family = Family::middle_cube;
    else if (name == "cycle") family = Family::cycle;
    else if (name == "complete") family = Family::complete;
    else if (name == "path") family = Family::path;
    else if (name == "petersen") family = Family::petersen;
    else throw std::invalid_argument("unknown family: " + std::string(s));

    if (family == Family::petersen) {
        if (colon != std::string_view::npos)
            throw std::invalid_argument("petersen takes no parameter");
        return {family, 0};
    }
    if (colon == std::string_view::npos)
        throw std::invalid_argument("family spec needs a parameter: " + std::string(s));
    const std::string param(s.substr(colon + 1));
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(param, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad family parameter: " + std::string(s));
    }
    if (used != param.size()) throw std::invalid_argument("bad family parameter: " + std::string(s));
    return {family, value};
}

inline Graph standard_graph(const FamilySpec& spec) {
    using Family = FamilySpec::Family;
    switch (spec.family) {
        case Family::hypercube: return hypercube(spec.parameter);
        case Family::odd: return odd_graph(spec.parameter);
        case Family::middle_cube: return middle_cube(spec.parameter);
        case Family::cycle: return cycle(spec.parameter);
        case Family::complete: return complete(spec.parameter);
        case Family::path: return path(spec.parameter);
        case Family::petersen: return petersen();
    }
    throw std::invalid_argument("unhandled family");
}

struct IsomorphismCheck {
    bool ok = false;
    std::vector<int> map;  // vertex of double(O_k) -> vertex of MQ_k
    // First edge of either graph whose image (or preimage) is missing.
    std::optional<std::pair<int, int>> first_violation;
};

// The explicit isomorphism from the bipartite double of the odd graph onto
// the middle cube graph: an unprimed vertex keeps its (k-1)-subset mask, a
// primed vertex goes to the complement mask. Verified edge-by-edge in both
// directions; a violation reports the offending edge.
inline IsomorphismCheck mqk_isomorphism(int k) {
    if (k < 2) throw std::invalid_argument("isomorphism check needs k >= 2");
    const Graph okg = odd_graph(k);
    const Graph dbl = bipartite_double(okg).graph;
    const Graph mq = middle_cube(k);
    const int n = static_cast<int>(okg.order());
    const std::uint64_t full = (std::uint64_t{1} << (2 * k - 1)) - 1;

    // Vertex of MQ_k holding a given mask, by layer-respecting rank.
    std::vector<int> mq_index_of;
    {
        std::vector<int> where(full + 1, -1);
        const auto& mlabels = mq.labels()->masks;
        for (std::size_t v = 0; v < mlabels.size(); ++v) where[mlabels[v]] = static_cast<int>(v);
        mq_index_of = std::move(where);
    }

    IsomorphismCheck chk;
    chk.map.resize(2 * n);
    const auto& omasks = okg.labels()->masks;
    for (int i = 0; i < n; ++i) {
        chk.map[i] = mq_index_of[omasks[i]];
        chk.map[i + n] = mq_index_of[full ^ omasks[i]];
        if (chk.map[i] < 0 || chk.map[i + n] < 0) {
            chk.first_violation = {i, i + n};
            return chk;
        }
    }

    if (dbl.size() != mq.size()) {
        chk.first_violation = {0, 0};
        return chk;
    }
    for (auto [u, v] : dbl.edges())
        if (!mq.adjacent(chk.map[u], chk.map[v])) {
            chk.first_violation = {u, v};
            return chk;
        }
    // Same edge count plus injectivity makes the edge map onto; check the
    // reverse direction anyway so a violation reports a middle-cube edge.
    std::vector<int> inv(2 * n, -1);
    for (int i = 0; i < 2 * n; ++i) inv[chk.map[i]] = i;
    for (auto [u, v] : mq.edges())
        if (!dbl.adjacent(inv[u], inv[v])) {
            chk.first_violation = {u, v};
            return chk;
        }
    chk.ok = true;
    return chk;
}

}  // namespace midcube
