#pragma once

// Metric machinery on graphs: BFS distance tables, even/odd (parity)
// distances, eccentricity and diameter, distance-l graphs, antipodality
// with folding, bipartitions and induced balls.

#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "midcube/graph.hpp"

namespace midcube {

// Unreachable pairs carry this sentinel, never a large fake distance.
inline constexpr int kUnreachable = -1;

class DistanceTable {
  public:
    explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

    std::size_t order() const { return n_; }
    int& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
    int at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    bool reachable(std::size_t i, std::size_t j) const { return at(i, j) != kUnreachable; }

    // Max finite distance from i; unreachable pairs poison it to the sentinel.
    int eccentricity(std::size_t i) const {
        int e = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (!reachable(i, j)) return kUnreachable;
            e = std::max(e, at(i, j));
        }
        return e;
    }

  private:
    std::size_t n_;
    std::vector<int> d_;
};

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), kUnreachable);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline DistanceTable all_pairs_distances(const Graph& g) {
    DistanceTable t(g.order());
    for (std::size_t s = 0; s < g.order(); ++s) {
        const auto row = bfs_distances(g, static_cast<int>(s));
        for (std::size_t j = 0; j < g.order(); ++j) t.at(s, j) = row[j];
    }
    return t;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto d = bfs_distances(g, 0);
    for (int x : d)
        if (x == kUnreachable) return false;
    return true;
}

inline int eccentricity(const Graph& g, int i) {
    const auto d = bfs_distances(g, i);
    int e = 0;
    for (int x : d) {
        if (x == kUnreachable) throw std::invalid_argument("eccentricity of a disconnected graph");
        e = std::max(e, x);
    }
    return e;
}

inline int diameter(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("diameter of the empty graph");
    int d = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
        d = std::max(d, eccentricity(g, static_cast<int>(i)));
    return d;
}

// Shortest even- and odd-length walks from one source, via BFS on the
// doubled state space (vertex, parity). An entry is kUnreachable when no
// walk of that parity exists (same-side odd / cross-side even walks in a
// bipartite component). The odd distance to the vertex itself is positive
// whenever it is finite.
struct ParityRow {
    std::vector<int> even, odd;
};

inline ParityRow parity_distances(const Graph& g, int source) {
    const std::size_t n = g.order();
    std::vector<std::array<int, 2>> dist(n, {kUnreachable, kUnreachable});
    std::deque<std::pair<int, int>> queue{{source, 0}};
    dist[source][0] = 0;
    while (!queue.empty()) {
        const auto [u, p] = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (dist[w][1 - p] == kUnreachable) {
                dist[w][1 - p] = dist[u][p] + 1;
                queue.emplace_back(w, 1 - p);
            }
    }
    ParityRow row;
    row.even.resize(n);
    row.odd.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        row.even[v] = dist[v][0];
        row.odd[v] = dist[v][1];
    }
    return row;
}

inline Graph distance_l_graph(const Graph& g, int ell) {
    if (ell < 0) throw std::invalid_argument("distance-l graph: negative l");
    const auto table = all_pairs_distances(g);
    int max_finite = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j)
            if (table.reachable(i, j)) max_finite = std::max(max_finite, table.at(i, j));
    if (ell > max_finite) throw std::invalid_argument("distance-l graph: l exceeds diameter");
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j)
            if (table.at(i, j) == ell) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(g.order(), es, g.labels());
}

// Two-coloring (0/1 per vertex) when one exists, colored per component
// starting from its lowest-index vertex.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{static_cast<int>(s)};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Induced subgraph on the given vertices (ascending original indices);
// labels carry over.
inline Graph induced_subgraph(const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && index[v] != -1) es.emplace_back(index[u], index[v]);
    std::optional<VertexLabels> labels;
    if (g.labels()) {
        labels = VertexLabels{g.labels()->ground_size, {}};
        for (int u : verts) labels->masks.push_back(g.labels()->masks[u]);
    }
    return Graph(verts.size(), es, std::move(labels));
}

inline Graph induced_ball(const Graph& g, int center, int radius) {
    const auto dist = bfs_distances(g, center);
    std::vector<int> verts;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (dist[v] != kUnreachable && dist[v] <= radius) verts.push_back(static_cast<int>(v));
    return induced_subgraph(g, verts);
}

struct AntipodalCertificate {
    bool is_antipodal = false;
    int diameter = 0;
    // Partition of the vertices into the components of the distance-D graph;
    // meaningful as a clique partition only when is_antipodal.
    std::vector<std::vector<int>> cliques;
    std::optional<int> uniform_size;  // common clique size r, when uniform
};

// A connected graph is antipodal when its distance-D graph is a disjoint
// union of cliques: every component with s vertices must carry s(s-1)/2
// edges.
inline AntipodalCertificate antipodal_certificate(const Graph& g) {
    AntipodalCertificate cert;
    cert.diameter = diameter(g);  // throws on disconnected input
    const Graph gd = distance_l_graph(g, cert.diameter);

    std::vector<int> comp(gd.order(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < gd.order(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::deque<int> queue{static_cast<int>(s)};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : gd.neighbors(u))
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    queue.push_back(w);
                }
        }
        ++ncomp;
    }
    cert.cliques.assign(ncomp, {});
    for (std::size_t v = 0; v < gd.order(); ++v) cert.cliques[comp[v]].push_back(static_cast<int>(v));

    std::vector<std::size_t> comp_edges(ncomp, 0);
    for (auto [u, v] : gd.edges()) ++comp_edges[comp[u]];

    cert.is_antipodal = true;
    for (int c = 0; c < ncomp; ++c) {
        const std::size_t s = cert.cliques[c].size();
        if (comp_edges[c] != s * (s - 1) / 2) cert.is_antipodal = false;
    }
    if (cert.is_antipodal && ncomp > 0) {
        const std::size_t s0 = cert.cliques[0].size();
        bool uniform = true;
        for (const auto& c : cert.cliques) uniform = uniform && c.size() == s0;
        if (uniform) cert.uniform_size = static_cast<int>(s0);
    }
    return cert;
}

// Quotient by the antipodal partition: one vertex per clique (ordered by
// smallest member), two folded vertices adjacent when an edge of G joins
// their cliques.
inline Graph fold(const Graph& g, const AntipodalCertificate& cert) {
    if (!cert.is_antipodal) throw std::invalid_argument("fold needs an antipodal certificate");
    std::vector<std::vector<int>> cliques = cert.cliques;
    std::sort(cliques.begin(), cliques.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<int> of(g.order(), -1);
    for (std::size_t c = 0; c < cliques.size(); ++c)
        for (int v : cliques[c]) of[v] = static_cast<int>(c);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (of[u] != of[v]) es.emplace_back(of[u], of[v]);
    return Graph(cliques.size(), es);
}

}  // namespace midcube
