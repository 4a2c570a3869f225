#pragma once

// Immutable simple undirected graphs with canonical vertex indices and
// optional combinatorial labels (bitmasks over a declared ground set).

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "midcube/matrix.hpp"

namespace midcube {

// Per-vertex subset labels; element j of the ground set is bit j-1.
struct VertexLabels {
    int ground_size = 0;
    std::vector<std::uint64_t> masks;
};

class Graph {
  public:
    Graph(std::size_t order, const std::vector<std::pair<int, int>>& edge_list,
          std::optional<VertexLabels> labels = std::nullopt)
        : adj_(order), labels_(std::move(labels)) {
        std::set<std::pair<int, int>> edges;
        for (auto [u, v] : edge_list) {
            if (u == v) throw std::invalid_argument("self-loop rejected");
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= order ||
                static_cast<std::size_t>(v) >= order)
                throw std::invalid_argument("edge endpoint out of range");
            if (u > v) std::swap(u, v);
            edges.emplace(u, v);
        }
        for (auto [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
        size_ = edges.size();
        if (labels_) {
            if (labels_->masks.size() != order)
                throw std::invalid_argument("label array length must equal order");
            std::set<std::uint64_t> distinct(labels_->masks.begin(), labels_->masks.end());
            if (distinct.size() != order)
                throw std::invalid_argument("vertex labels must be pairwise distinct");
        }
    }

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return size_; }  // number of edges

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
        return d;
    }

    // Common degree when regular.
    std::optional<int> regular_degree() const {
        if (order() == 0) return 0;
        const int d = degree(0);
        for (std::size_t v = 1; v < order(); ++v)
            if (degree(static_cast<int>(v)) != d) return std::nullopt;
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(size_);
        for (std::size_t u = 0; u < adj_.size(); ++u)
            for (int v : adj_[u])
                if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
        return out;
    }

    const std::optional<VertexLabels>& labels() const { return labels_; }

    // Binary string for a vertex label, coordinate 1 (least significant bit)
    // first, most significant coordinate last.
    std::string label_string(int v) const {
        if (!labels_) throw std::logic_error("graph carries no labels");
        std::string s(static_cast<std::size_t>(labels_->ground_size), '0');
        for (int b = 0; b < labels_->ground_size; ++b)
            if (labels_->masks[v] >> b & 1u) s[b] = '1';
        return s;
    }

    RationalMatrix adjacency_matrix() const {
        RationalMatrix a(order(), order());
        for (std::size_t u = 0; u < adj_.size(); ++u)
            for (int v : adj_[u]) a(u, v) = 1;
        return a;
    }

    // Edge-list text format: "n m" header, then one "u v" per line, u < v.
    std::string to_edge_list() const {
        std::ostringstream os;
        os << order() << ' ' << size() << '\n';
        for (auto [u, v] : edges()) os << u << ' ' << v << '\n';
        return os.str();
    }

    static Graph from_edge_list(std::istream& in) {
        std::size_t n = 0, m = 0;
        if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
        std::vector<std::pair<int, int>> es;
        es.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            int u, v;
            if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
            es.emplace_back(u, v);
        }
        return Graph(n, es);
    }

    static Graph from_edge_list(const std::string& text) {
        std::istringstream is(text);
        return from_edge_list(is);
    }

    std::string to_dot(const std::string& name = "G") const {
        std::ostringstream os;
        os << "graph \"" << name << "\" {\n";
        if (labels_)
            for (std::size_t v = 0; v < order(); ++v)
                os << "  " << v << " [label=\"" << label_string(static_cast<int>(v)) << "\"];\n";
        for (auto [u, v] : edges()) os << "  " << u << " -- " << v << ";\n";
        os << "}\n";
        return os.str();
    }

  private:
    std::vector<std::vector<int>> adj_;
    std::size_t size_ = 0;
    std::optional<VertexLabels> labels_;
};

}  // namespace midcube
