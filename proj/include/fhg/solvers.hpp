#pragma once

// Constructive core-stable partitions for sparse and structured graphs.

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhg/game.hpp"
#include "fhg/model.hpp"

namespace fhg {

// The input is outside the class a solver handles.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Bipartite input without a perfect matching.
class NoPerfectMatching : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_class(const Game& game, const char* solver)
{
    if (!game.is_simple_symmetric()) {
        throw PreconditionError(std::string(solver) + ": game must be simple and symmetric");
    }
}

}  // namespace detail

// Triangles first, then edges, both in ascending id order.
inline Partition solve_degree2(const Game& game)
{
    detail::require_class(game, "degree2");
    if (game.max_degree() > 2) {
        throw PreconditionError("degree2: maximum degree is " + std::to_string(game.max_degree()));
    }
    const int n = game.size();
    std::vector<char> used(n, 0);
    std::vector<Coalition> out;

    for (Player i = 0; i < n; ++i) {
        for (Player j : game.neighbors(i)) {
            for (Player k : game.neighbors(i)) {
                if (i < j && j < k && !used[i] && !used[j] && !used[k] && game.adjacent(j, k)) {
                    used[i] = used[j] = used[k] = 1;
                    out.push_back({i, j, k});
                }
            }
        }
    }
    for (Player i = 0; i < n; ++i) {
        for (Player j : game.neighbors(i)) {
            if (i < j && !used[i] && !used[j]) {
                used[i] = used[j] = 1;
                out.push_back({i, j});
            }
        }
    }
    for (Player i = 0; i < n; ++i) {
        if (!used[i]) {
            out.push_back({i});
        }
    }
    return Partition(n, std::move(out));
}

struct ForestLayers {
    std::vector<int> depth;
    std::vector<Player> parent;
    std::vector<std::vector<Player>> children;
};

// BFS tree of a forest from the smallest id of each component.
inline ForestLayers bfs_layers(const Game& game)
{
    const int n = game.size();
    ForestLayers f{std::vector<int>(n, -1), std::vector<Player>(n, -1), std::vector<std::vector<Player>>(n)};
    for (Player root = 0; root < n; ++root) {
        if (f.depth[root] != -1) {
            continue;
        }
        f.depth[root] = 0;
        std::queue<Player> q;
        q.push(root);
        while (!q.empty()) {
            Player u = q.front();
            q.pop();
            for (Player w : game.neighbors(u)) {
                if (f.depth[w] == -1) {
                    f.depth[w] = f.depth[u] + 1;
                    f.parent[w] = u;
                    f.children[u].push_back(w);
                    q.push(w);
                }
            }
        }
    }
    return f;
}

namespace detail {

// Groups each second-to-last-layer vertex with its last-layer children and
// strips them, until every vertex is grouped or left alone. Returns group ids
// per vertex (-1 for a lone root).
inline std::vector<int> layer_grouping(const ForestLayers& f, std::vector<std::vector<Player>>& groups)
{
    const int n = static_cast<int>(f.depth.size());
    std::vector<int> group(n, -1);
    int max_depth = 0;
    for (int d : f.depth) {
        max_depth = std::max(max_depth, d);
    }
    for (int d = max_depth; d >= 1; --d) {
        for (Player v = 0; v < n; ++v) {
            if (f.depth[v] != d - 1 || group[v] != -1) {
                continue;
            }
            std::vector<Player> g{v};
            for (Player c : f.children[v]) {
                if (group[c] == -1) {
                    g.push_back(c);
                }
            }
            if (g.size() < 2) {
                continue;
            }
            for (Player p : g) {
                group[p] = static_cast<int>(groups.size());
            }
            groups.push_back(std::move(g));
        }
    }
    return group;
}

}  // namespace detail

inline Partition solve_forest(const Game& game)
{
    detail::require_class(game, "forest");
    if (girth(game).has_value()) {
        throw PreconditionError("forest: graph contains a cycle");
    }
    const int n = game.size();
    const ForestLayers f = bfs_layers(game);
    std::vector<std::vector<Player>> groups;
    std::vector<int> group = detail::layer_grouping(f, groups);

    // A lone vertex joins the smallest coalition of a neighbour, lowest neighbour id on ties.
    for (Player v = 0; v < n; ++v) {
        if (group[v] != -1 || game.degree(v) == 0) {
            continue;
        }
        int target = -1;
        for (Player w : game.neighbors(v)) {
            const int g = group[w];
            if (g != -1 && (target == -1 || groups[g].size() < groups[target].size())) {
                target = g;
            }
        }
        groups[target].push_back(v);
        group[v] = target;
    }

    std::vector<Coalition> out(groups.begin(), groups.end());
    for (Player v = 0; v < n; ++v) {
        if (group[v] == -1) {
            out.push_back({v});
        }
    }
    return Partition(n, std::move(out));
}

// gcd-of-type-sizes many coalitions, each holding |theta_i|/d players of
// every type, filled in ascending id order.
inline Partition solve_bakers_millers_finest(const TypeSpace& types)
{
    const int d = types.gcd();
    std::vector<Coalition> out(d);
    std::vector<int> seen(types.type_count(), 0);
    for (Player i = 0; i < types.player_count(); ++i) {
        const int t = types.type_of(i);
        const int per = types.sizes()[t] / d;
        out[seen[t]++ / per].push_back(i);
    }
    return Partition(types.player_count(), std::move(out));
}

// True iff every type occupies the same fraction of every coalition.
inline bool check_bakers_millers_strict_core(const TypeSpace& types, const Partition& partition)
{
    if (types.player_count() != partition.player_count()) {
        throw std::invalid_argument("type space does not match the partition");
    }
    const auto& cs = partition.coalitions();
    std::vector<std::vector<long>> counts(cs.size(), std::vector<long>(types.type_count(), 0));
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (Player p : cs[k]) {
            ++counts[k][types.type_of(p)];
        }
    }
    for (std::size_t k = 1; k < cs.size(); ++k) {
        for (int t = 0; t < types.type_count(); ++t) {
            if (counts[k][t] * static_cast<long>(cs[0].size()) != counts[0][t] * static_cast<long>(cs[k].size())) {
                return false;
            }
        }
    }
    return true;
}

// Common degree of a regular graph.
inline std::optional<int> regular_degree(const Game& game)
{
    const int d = game.degree(0);
    for (Player i = 1; i < game.size(); ++i) {
        if (game.degree(i) != d) {
            return std::nullopt;
        }
    }
    return d;
}

// Maximum matching by augmenting paths from each side-0 vertex in ascending
// order, neighbours tried in ascending order.
inline std::vector<Edge> maximum_bipartite_matching(const Game& game, const std::vector<int>& side)
{
    const int n = game.size();
    std::vector<Player> owner(n, -1);  // side-1 vertex -> matched side-0 vertex
    std::vector<int> visited(n, -1);
    int stamp = 0;

    auto augment = [&](auto&& self, Player u) -> bool {
        for (Player w : game.neighbors(u)) {
            if (visited[w] == stamp) {
                continue;
            }
            visited[w] = stamp;
            if (owner[w] == -1 || self(self, owner[w])) {
                owner[w] = u;
                return true;
            }
        }
        return false;
    };

    for (Player u = 0; u < n; ++u) {
        if (side[u] == 0) {
            augment(augment, u);
            ++stamp;
        }
    }
    std::vector<Edge> out;
    for (Player w = 0; w < n; ++w) {
        if (owner[w] != -1) {
            out.push_back({std::min(w, owner[w]), std::max(w, owner[w])});
        }
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.u < b.u; });
    return out;
}

inline Partition solve_bipartite_matching(const Game& game)
{
    detail::require_class(game, "matching");
    const auto side = bipartition(game);
    if (!side) {
        throw PreconditionError("matching: graph is not bipartite");
    }
    const auto matching = maximum_bipartite_matching(game, *side);
    if (2 * matching.size() != static_cast<std::size_t>(game.size())) {
        throw NoPerfectMatching("matching: maximum matching covers " + std::to_string(2 * matching.size()) + " of " +
                                std::to_string(game.size()) + " players");
    }
    std::vector<Coalition> out;
    for (const Edge& e : matching) {
        out.push_back({e.u, e.v});
    }
    return Partition(game.size(), std::move(out));
}

}  // namespace fhg
