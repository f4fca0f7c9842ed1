#pragma once

// Average-valuation utilities, preference comparison, and the graph
// measures the solvers depend on.

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhg/game.hpp"

namespace fhg {

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline bool contains(std::span<const Player> s, Player i)
{
    return std::find(s.begin(), s.end(), i) != s.end();
}

inline void require_member(std::span<const Player> s, Player i)
{
    if (!contains(s, i)) {
        throw ContractViolation("player " + std::to_string(i + 1) + " is not a member of the coalition");
    }
}

inline void require_simple_symmetric(const Game& game, const char* what)
{
    if (!game.is_simple_symmetric()) {
        throw std::invalid_argument(std::string(what) + " requires a simple symmetric game");
    }
}

}  // namespace detail

// v_i(S) = sum_{j in S} v_i(j) / |S|
inline Rational utility(const Game& game, Player i, std::span<const Player> coalition)
{
    detail::require_member(coalition, i);
    Rational sum = 0;
    for (Player j : coalition) {
        sum += game.value(i, j);
    }
    return sum / Rational(static_cast<std::int64_t>(coalition.size()));
}

// Supported players are paid their subsidy in the singleton coalition.
inline Rational utility(const SupportedGame& sg, Player i, std::span<const Player> coalition)
{
    if (coalition.size() == 1) {
        detail::require_member(coalition, i);
        return sg.singleton_value(i);
    }
    return utility(sg.game, i, coalition);
}

template <typename G>
Rational utility(const G& game, Player i, const Partition& partition)
{
    return utility(game, i, std::span<const Player>(partition.coalition_of(i)));
}

enum class Preference { strictly, indifferent, worse };

inline const char* to_string(Preference p)
{
    switch (p) {
    case Preference::strictly:
        return "strictly";
    case Preference::indifferent:
        return "indifferent";
    case Preference::worse:
        return "worse";
    }
    return "?";
}

// How player i ranks S against T.
template <typename G>
Preference prefers(const G& game, Player i, std::span<const Player> s, std::span<const Player> t)
{
    const Rational us = utility(game, i, s);
    const Rational ut = utility(game, i, t);
    if (us > ut) {
        return Preference::strictly;
    }
    return us == ut ? Preference::indifferent : Preference::worse;
}

template <typename G>
bool is_individually_rational(const G& game, const Partition& partition)
{
    for (Player i = 0; i < partition.player_count(); ++i) {
        const Player alone[] = {i};
        if (utility(game, i, partition) < utility(game, i, std::span<const Player>(alone))) {
            return false;
        }
    }
    return true;
}

// Components of the friendship graph, each sorted, ordered by smallest member.
inline std::vector<Coalition> connected_components(const Game& game)
{
    if (!game.is_symmetric()) {
        throw std::invalid_argument("connected components require a symmetric game");
    }
    const int n = game.size();
    std::vector<int> seen(n, 0);
    std::vector<Coalition> out;
    for (Player s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        Coalition comp;
        std::vector<Player> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Player u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Player w : game.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Length of the shortest cycle, or nullopt for a forest. BFS from every
// vertex; a non-tree edge (u, w) closes a cycle of length dist[u]+dist[w]+1,
// and the minimum over all roots is exact.
inline std::optional<int> girth(const Game& game)
{
    detail::require_simple_symmetric(game, "girth");
    const int n = game.size();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    std::vector<int> parent(n);
    for (Player root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Player> q;
        dist[root] = 0;
        parent[root] = -1;
        q.push(root);
        while (!q.empty()) {
            Player u = q.front();
            q.pop();
            if (2 * dist[u] >= best) {
                break;
            }
            for (Player w : game.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) {
        return std::nullopt;
    }
    return best;
}

// Two-coloring of a simple symmetric game, or nullopt if an odd cycle exists.
inline std::optional<std::vector<int>> bipartition(const Game& game)
{
    detail::require_simple_symmetric(game, "bipartition");
    const int n = game.size();
    std::vector<int> side(n, -1);
    for (Player s = 0; s < n; ++s) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        std::queue<Player> q;
        q.push(s);
        while (!q.empty()) {
            Player u = q.front();
            q.pop();
            for (Player w : game.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

}  // namespace fhg
