#pragma once

// Deterministic backtracking search for Hamilton cycles, with a node-
// expansion budget instead of wall time so results are machine-independent.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "midcube/graph.hpp"
#include "midcube/metric.hpp"

namespace midcube {

enum class HamiltonStatus { found, not_found_within_budget, proven_none };

inline std::string to_string(HamiltonStatus s) {
    switch (s) {
        case HamiltonStatus::found: return "found";
        case HamiltonStatus::not_found_within_budget: return "not-found-within-budget";
        case HamiltonStatus::proven_none: return "proven-none";
    }
    return "?";
}

struct HamiltonResult {
    HamiltonStatus status = HamiltonStatus::proven_none;
    std::vector<int> cycle;  // vertex sequence when found; closes back to front
    std::uint64_t nodes_expanded = 0;
};

// Independent validity check: every vertex exactly once, consecutive pairs
// (cyclically) adjacent.
inline bool validate_hamilton_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() != g.order() || cycle.size() < 3) return false;
    std::vector<bool> seen(g.order(), false);
    for (int v : cycle) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.order() || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

namespace detail {

// Depth-first extension of a path rooted at vertex 0, pruning only branches
// that provably contain no Hamilton cycle, so full exhaustion proves none.
struct HamiltonSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t expanded = 0;
    bool exhausted_budget = false;
    std::vector<int> path;
    std::vector<bool> used;
    std::vector<int> free_degree;  // unvisited neighbors per vertex
    std::vector<int> seen_stamp;
    std::vector<int> stack;
    int stamp = 0;

    explicit HamiltonSearch(const Graph& graph, std::uint64_t node_budget)
        : g(graph), budget(node_budget), used(graph.order(), false),
          free_degree(graph.order(), 0), seen_stamp(graph.order(), 0) {
        for (std::size_t v = 0; v < g.order(); ++v)
            free_degree[v] = g.degree(static_cast<int>(v));
    }

    // Every unvisited vertex still needs two usable connections: unvisited
    // neighbors, or the tip (to be entered from) or the start (to close).
    bool degrees_viable(int tip) const {
        const int n = static_cast<int>(g.order());
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int c = free_degree[v];
            if (c >= 2) continue;
            if (g.adjacent(v, tip)) ++c;
            if (c < 2 && g.adjacent(v, 0)) ++c;
            if (c < 2) return false;
        }
        return true;
    }

    // Every unvisited vertex must be reachable from the tip through
    // unvisited vertices, and some unvisited vertex must neighbor the start.
    bool remainder_connected(int tip) {
        const int unvisited = static_cast<int>(g.order()) - static_cast<int>(path.size());
        if (unvisited == 0) return true;
        if (free_degree[0] == 0) return false;  // nothing left to close the cycle
        ++stamp;
        stack.clear();
        stack.push_back(tip);
        seen_stamp[tip] = stamp;
        int reached = 0;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (used[w] || seen_stamp[w] == stamp) continue;
                seen_stamp[w] = stamp;
                ++reached;
                stack.push_back(w);
            }
        }
        return reached == unvisited;
    }

    bool extend() {
        const int n = static_cast<int>(g.order());
        const int tip = path.back();
        if (static_cast<int>(path.size()) == n)
            return g.adjacent(tip, path.front());

        if (expanded >= budget) {
            exhausted_budget = true;
            return false;
        }
        if (!degrees_viable(tip) || !remainder_connected(tip)) return false;

        // Fewest-onward-options first, vertex index as the tie break.
        std::vector<std::pair<int, int>> candidates;
        for (int w : g.neighbors(tip))
            if (!used[w]) candidates.emplace_back(free_degree[w], w);
        std::sort(candidates.begin(), candidates.end());

        for (auto [fd, w] : candidates) {
            ++expanded;
            used[w] = true;
            path.push_back(w);
            for (int x : g.neighbors(w)) --free_degree[x];
            if (extend()) return true;
            for (int x : g.neighbors(w)) ++free_degree[x];
            path.pop_back();
            used[w] = false;
            if (exhausted_budget) return false;
        }
        return false;
    }
};

}  // namespace detail

// Backtracking from vertex 0, branching into the unvisited neighbor with the
// fewest remaining free neighbors (ascending index on ties). The budget
// counts node expansions; exhausting it is a status, not an error, and a
// fully exhausted search space proves no cycle exists.
inline HamiltonResult find_hamilton_cycle(const Graph& g,
                                          std::uint64_t node_budget = 100'000'000) {
    HamiltonResult result;
    if (g.order() < 3 || !is_connected(g)) {
        result.status = HamiltonStatus::proven_none;
        return result;
    }
    detail::HamiltonSearch search(g, node_budget);
    search.used[0] = true;
    search.path.push_back(0);
    for (int x : g.neighbors(0)) --search.free_degree[x];
    const bool ok = search.extend();
    result.nodes_expanded = search.expanded;
    if (ok) {
        result.status = HamiltonStatus::found;
        result.cycle = search.path;
    } else {
        result.status = search.exhausted_budget ? HamiltonStatus::not_found_within_budget
                                                : HamiltonStatus::proven_none;
    }
    return result;
}

}  // namespace midcube
