#pragma once

// Game, partition, and type-space values.
//
// Players are dense 0-based ids. A Game holds the full valuation matrix, where
// entry (i, j) is player i's value for player j and every diagonal entry is 0.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fhg/rational.hpp"

namespace fhg {

using Player = int;
using Coalition = std::vector<Player>;  // sorted ascending, no duplicates

struct Edge {
    Player u;
    Player v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class Game {
public:
    // Row-major n*n valuation matrix. The diagonal must be zero.
    Game(int n, std::vector<Rational> valuations) : n_(n), values_(std::move(valuations))
    {
        if (n_ <= 0) {
            throw std::invalid_argument("a game needs at least one player");
        }
        if (values_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
            throw std::invalid_argument("valuation matrix must be n*n");
        }
        for (int i = 0; i < n_; ++i) {
            if (!value(i, i).is_zero()) {
                throw std::invalid_argument("self valuation of player " + std::to_string(i + 1) + " must be 0");
            }
        }
        classify();
    }

    // Simple symmetric game of an undirected graph.
    static Game from_edges(int n, std::span<const Edge> edges)
    {
        if (n <= 0) {
            throw std::invalid_argument("a game needs at least one player");
        }
        std::vector<Rational> vals(static_cast<std::size_t>(n) * n);
        for (const Edge& e : edges) {
            check_edge(n, e);
            vals[static_cast<std::size_t>(e.u) * n + e.v] = 1;
            vals[static_cast<std::size_t>(e.v) * n + e.u] = 1;
        }
        return Game(n, std::move(vals));
    }

    static Game from_edges(int n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int size() const noexcept { return n_; }
    const Rational& value(Player i, Player j) const
    {
        return values_[static_cast<std::size_t>(i) * n_ + j];
    }
    bool is_simple() const noexcept { return simple_; }
    bool is_symmetric() const noexcept { return symmetric_; }
    bool is_simple_symmetric() const noexcept { return simple_ && symmetric_; }
    bool is_nonnegative() const noexcept { return nonnegative_; }

    // Players j with v_i(j) != 0; for simple games these are exactly the friends of i.
    const std::vector<Player>& neighbors(Player i) const { return adjacency_[i]; }
    int degree(Player i) const { return static_cast<int>(adjacency_[i].size()); }
    bool adjacent(Player i, Player j) const { return !value(i, j).is_zero(); }

    int max_degree() const
    {
        int best = 0;
        for (int i = 0; i < n_; ++i) {
            best = std::max(best, degree(i));
        }
        return best;
    }

    // Undirected edge list {u < v}; requires a symmetric game.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u) {
            for (Player v : adjacency_[u]) {
                if (u < v) {
                    out.push_back({u, v});
                }
            }
        }
        return out;
    }

    friend bool operator==(const Game& a, const Game& b) { return a.n_ == b.n_ && a.values_ == b.values_; }

private:
    static void check_edge(int n, const Edge& e)
    {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw std::out_of_range("edge endpoint outside the player set");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on player " + std::to_string(e.u + 1));
        }
    }

    void classify()
    {
        simple_ = true;
        symmetric_ = true;
        nonnegative_ = true;
        adjacency_.assign(n_, {});
        const Rational one(1);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                const Rational& v = value(i, j);
                if (i != j && !v.is_zero() && v != one) {
                    simple_ = false;
                }
                if (v.sign() < 0) {
                    nonnegative_ = false;
                }
                if (v != value(j, i)) {
                    symmetric_ = false;
                }
                if (!v.is_zero()) {
                    adjacency_[i].push_back(j);
                }
            }
        }
    }

    int n_;
    std::vector<Rational> values_;
    bool simple_ = true;
    bool symmetric_ = true;
    bool nonnegative_ = true;
    std::vector<std::vector<Player>> adjacency_;
};

// A disjoint cover of {0..n-1} by nonempty coalitions. Coalitions are kept in
// canonical order: members ascending, coalitions ordered by smallest member.
class Partition {
public:
    Partition() = default;

    Partition(int n, std::vector<Coalition> coalitions) : coalitions_(std::move(coalitions)), owner_(n, -1)
    {
        if (n <= 0) {
            throw std::invalid_argument("partition of an empty player set");
        }
        for (auto& c : coalitions_) {
            if (c.empty()) {
                throw std::invalid_argument("empty coalition in partition");
            }
            std::sort(c.begin(), c.end());
        }
        std::sort(coalitions_.begin(), coalitions_.end(),
                  [](const Coalition& a, const Coalition& b) { return a.front() < b.front(); });
        for (std::size_t k = 0; k < coalitions_.size(); ++k) {
            for (Player p : coalitions_[k]) {
                if (p < 0 || p >= n) {
                    throw std::out_of_range("player " + std::to_string(p + 1) + " outside the game");
                }
                if (owner_[p] != -1) {
                    throw std::invalid_argument("player " + std::to_string(p + 1) + " appears twice");
                }
                owner_[p] = static_cast<int>(k);
            }
        }
        for (int p = 0; p < n; ++p) {
            if (owner_[p] == -1) {
                throw std::invalid_argument("player " + std::to_string(p + 1) + " is not covered");
            }
        }
    }

    static Partition singletons(int n)
    {
        std::vector<Coalition> cs;
        for (int i = 0; i < n; ++i) {
            cs.push_back({i});
        }
        return Partition(n, std::move(cs));
    }

    static Partition grand(int n)
    {
        Coalition all(n);
        std::iota(all.begin(), all.end(), 0);
        return Partition(n, {all});
    }

    // labels[i] is an arbitrary coalition label for player i.
    static Partition from_labels(std::span<const int> labels)
    {
        std::map<int, Coalition> groups;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            groups[labels[i]].push_back(static_cast<Player>(i));
        }
        std::vector<Coalition> cs;
        for (auto& [label, c] : groups) {
            cs.push_back(std::move(c));
        }
        return Partition(static_cast<int>(labels.size()), std::move(cs));
    }

    int player_count() const noexcept { return static_cast<int>(owner_.size()); }
    const std::vector<Coalition>& coalitions() const noexcept { return coalitions_; }
    std::size_t size() const noexcept { return coalitions_.size(); }

    // pi(i)
    const Coalition& coalition_of(Player i) const { return coalitions_[owner_.at(i)]; }
    int index_of(Player i) const { return owner_.at(i); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.coalitions_ == b.coalitions_; }

private:
    std::vector<Coalition> coalitions_;
    std::vector<int> owner_;
};

// Player types for Bakers and Millers games.
class TypeSpace {
public:
    explicit TypeSpace(std::vector<int> assignment) : assignment_(std::move(assignment))
    {
        if (assignment_.empty()) {
            throw std::invalid_argument("type space over an empty player set");
        }
        int types = 0;
        for (int t : assignment_) {
            if (t < 0) {
                throw std::invalid_argument("negative type index");
            }
            types = std::max(types, t + 1);
        }
        sizes_.assign(types, 0);
        for (int t : assignment_) {
            ++sizes_[t];
        }
        for (std::size_t t = 0; t < sizes_.size(); ++t) {
            if (sizes_[t] == 0) {
                throw std::invalid_argument("type " + std::to_string(t + 1) + " is empty");
            }
        }
        gcd_ = 0;
        for (int s : sizes_) {
            gcd_ = std::gcd(gcd_, s);
        }
    }

    // Consecutive blocks: sizes (2, 4) gives players 0-1 type 0 and 2-5 type 1.
    static TypeSpace from_sizes(std::span<const int> sizes)
    {
        std::vector<int> assignment;
        for (std::size_t t = 0; t < sizes.size(); ++t) {
            if (sizes[t] <= 0) {
                throw std::invalid_argument("type " + std::to_string(t + 1) + " is empty");
            }
            assignment.insert(assignment.end(), sizes[t], static_cast<int>(t));
        }
        return TypeSpace(std::move(assignment));
    }

    static TypeSpace from_sizes(std::initializer_list<int> sizes)
    {
        return from_sizes(std::span<const int>(sizes.begin(), sizes.size()));
    }

    int player_count() const noexcept { return static_cast<int>(assignment_.size()); }
    int type_count() const noexcept { return static_cast<int>(sizes_.size()); }
    int type_of(Player i) const { return assignment_.at(i); }
    const std::vector<int>& sizes() const noexcept { return sizes_; }
    const std::vector<int>& assignment() const noexcept { return assignment_; }
    int gcd() const noexcept { return gcd_; }

private:
    std::vector<int> assignment_;
    std::vector<int> sizes_;
    int gcd_ = 0;
};

// A game in which some players receive a subsidy (l-1)/l when alone.
struct SupportedGame {
    Game game;
    std::map<Player, int> subsidies;  // player -> l

    explicit SupportedGame(Game g, std::map<Player, int> subs = {}) : game(std::move(g)), subsidies(std::move(subs))
    {
        for (const auto& [p, l] : subsidies) {
            if (p < 0 || p >= game.size()) {
                throw std::out_of_range("subsidy for player outside the game");
            }
            if (l < 2) {
                throw std::invalid_argument("subsidy parameter l must be at least 2");
            }
        }
    }

    // Utility of player i in the singleton {i}.
    Rational singleton_value(Player i) const
    {
        auto it = subsidies.find(i);
        return it == subsidies.end() ? Rational(0) : Rational(it->second - 1, it->second);
    }
};

}  // namespace fhg
