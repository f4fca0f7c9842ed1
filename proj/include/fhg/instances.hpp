#pragma once

// Named gadget games and instance transformers.
//
// Player numbering of the larger gadgets:
//   empty-core-40   A1..A5 (three players each) = 0..14, B1..B5 (two each)
//                   = 15..24, C1..C5 (three each) = 25..39. Ak.r is player
//                   3(k-1)+r-1, Bk.r is 15+2(k-1)+r-1, Ck.r is 25+3(k-1)+r-1.
//   stable-39       empty-core-40 without B2.2 (player 18); later ids shift down.
//   social-15       a1..a5 = 0..4, b1..b5 = 5..9, c1..c5 = 10..14.
//   k4-10           a, b, c, d = 0..3, leaves 0..9 = players 4..13.
//   star-packing-11 c1, c2, c3 = 0..2, l1..l8 = 3..10.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhg/game.hpp"
#include "fhg/star_packing.hpp"

namespace fhg {

struct GadgetInstance {
    std::string name;
    Game game;
    std::string description;
    // A partition that ships with the gadget, if any.
    std::optional<Partition> partition;
    std::optional<StarPacking> packing;
};

namespace gadgets {

// Helpers for the 40-player layout; k in 1..5, r within the clique.
inline Player A(int k, int r) { return 3 * (k - 1) + r - 1; }
inline Player B(int k, int r) { return 15 + 2 * (k - 1) + r - 1; }
inline Player C(int k, int r) { return 25 + 3 * (k - 1) + r - 1; }

inline constexpr Player removed_b2 = 15 + 2 + 1;  // B2.2

// Id of a 40-gadget player once B2.2 is deleted.
inline Player in39(Player p)
{
    if (p == removed_b2) {
        throw std::invalid_argument("B2.2 is not part of the 39-player game");
    }
    return p > removed_b2 ? p - 1 : p;
}

namespace detail {

inline int wrap(int k) { return ((k - 1) % 5 + 5) % 5 + 1; }

inline std::vector<Player> members(char group, int k)
{
    std::vector<Player> out;
    const int width = group == 'B' ? 2 : 3;
    for (int r = 1; r <= width; ++r) {
        out.push_back(group == 'A' ? A(k, r) : group == 'B' ? B(k, r) : C(k, r));
    }
    return out;
}

inline void join(std::vector<Edge>& edges, const std::vector<Player>& s, const std::vector<Player>& t)
{
    for (Player u : s) {
        for (Player v : t) {
            edges.push_back({u, v});
        }
    }
}

inline void clique(std::vector<Edge>& edges, const std::vector<Player>& s)
{
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            edges.push_back({s[a], s[b]});
        }
    }
}

inline Game weighted(int n, const std::vector<std::pair<Edge, Rational>>& arcs, Rational fill, bool symmetric)
{
    std::vector<Rational> vals(static_cast<std::size_t>(n) * n, fill);
    for (int i = 0; i < n; ++i) {
        vals[static_cast<std::size_t>(i) * n + i] = 0;
    }
    for (const auto& [e, w] : arcs) {
        vals[static_cast<std::size_t>(e.u) * n + e.v] = w;
        if (symmetric) {
            vals[static_cast<std::size_t>(e.v) * n + e.u] = w;
        }
    }
    return Game(n, std::move(vals));
}

}  // namespace detail

inline std::vector<Edge> empty_core_40_edges()
{
    using detail::members;
    std::vector<Edge> e;
    for (int k = 1; k <= 5; ++k) {
        detail::clique(e, members('A', k));
        detail::clique(e, members('B', k));
        detail::clique(e, members('C', k));
    }
    for (int k = 1; k <= 5; ++k) {
        detail::join(e, members('A', k), members('C', k));
        detail::join(e, members('A', k), members('B', k));
        detail::join(e, members('A', k), members('B', detail::wrap(k - 1)));
        detail::join(e, members('C', k), members('B', detail::wrap(k - 2)));
    }
    return e;
}

inline Game empty_core_40() { return Game::from_edges(40, empty_core_40_edges()); }

inline Game stable_39()
{
    std::vector<Edge> e;
    for (const Edge& x : empty_core_40_edges()) {
        if (x.u != removed_b2 && x.v != removed_b2) {
            e.push_back({in39(x.u), in39(x.v)});
        }
    }
    return Game::from_edges(39, e);
}

// {A1+B1+B5, A2+C2, A3+C3, A4+C4, A5+C5, B4+C1, B2, B3}
inline Partition stable_39_partition()
{
    using detail::members;
    auto cat = [](std::initializer_list<std::vector<Player>> parts) {
        Coalition c;
        for (const auto& p : parts) {
            for (Player x : p) {
                if (x != removed_b2) {
                    c.push_back(in39(x));
                }
            }
        }
        return c;
    };
    std::vector<Coalition> cs{
        cat({members('A', 1), members('B', 1), members('B', 5)}),
        cat({members('A', 2), members('C', 2)}),
        cat({members('A', 3), members('C', 3)}),
        cat({members('A', 4), members('C', 4)}),
        cat({members('A', 5), members('C', 5)}),
        cat({members('B', 4), members('C', 1)}),
        cat({members('B', 2)}),
        cat({members('B', 3)}),
    };
    return Partition(39, std::move(cs));
}

inline Game example_6()
{
    return Game::from_edges(6, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {3, 4}, {5, 4}, {5, 2}, {2, 0}, {3, 5}});
}

// Arc (i, j) with weight w means v_i(j) = w.
inline Game digraph_5()
{
    std::vector<std::pair<Edge, Rational>> arcs;
    for (int i = 0; i < 5; ++i) {
        const int next = (i + 1) % 5;
        arcs.push_back({{i, next}, Rational(2)});
        arcs.push_back({{next, i}, Rational(1)});
    }
    return detail::weighted(5, arcs, Rational(-10), false);
}

inline Game symmetric_6()
{
    const std::vector<std::pair<Edge, Rational>> w{
        {{0, 1}, 7}, {{0, 2}, 5}, {{1, 2}, 6}, {{2, 3}, 7}, {{2, 4}, 5},
        {{3, 4}, 6}, {{4, 5}, 7}, {{4, 0}, 5}, {{5, 0}, 6},
    };
    return detail::weighted(6, w, Rational(-24), true);
}

inline Game cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
    }
    return Game::from_edges(n, e);
}

inline Game social_15()
{
    auto a = [](int k) { return k - 1; };
    auto b = [](int k) { return 5 + k - 1; };
    auto c = [](int k) { return 10 + k - 1; };
    std::vector<std::pair<Edge, Rational>> w;
    for (int k = 1; k <= 5; ++k) {
        w.push_back({{a(k), b(k)}, 4});
        w.push_back({{b(k), a(detail::wrap(k + 1))}, 4});
        w.push_back({{a(k), c(k)}, 5});
        w.push_back({{b(k), c(detail::wrap(k + 2))}, 4});
    }
    return detail::weighted(15, w, Rational(0), true);
}

inline Game petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Game::from_edges(10, e);
}

inline Game star_packing_11()
{
    const Player c1 = 0, c2 = 1, c3 = 2;
    auto l = [](int k) { return 2 + k; };
    return Game::from_edges(11, {{c1, l(1)}, {c1, l(2)}, {c2, l(3)}, {c2, l(4)}, {c2, l(5)}, {c3, l(6)}, {c3, l(7)},
                                 {c3, l(8)}, {l(2), c2}, {l(4), c3}, {c3, c1}, {l(3), l(8)}});
}

inline StarPacking star_packing_11_start()
{
    auto l = [](int k) { return 2 + k; };
    return StarPacking(11, {{{0}, {l(1), l(2)}}, {{1}, {l(3), l(4), l(5)}}, {{2}, {l(6), l(7), l(8)}}});
}

inline StarPacking k4_10_packing()
{
    auto leaf = [](int k) { return 4 + k; };
    return StarPacking(14, {{{0}, {leaf(0), leaf(1)}},
                            {{1}, {leaf(2), leaf(3)}},
                            {{2}, {leaf(4), leaf(5), leaf(6)}},
                            {{3}, {leaf(7), leaf(8), leaf(9)}}});
}

}  // namespace gadgets

// Complete multipartite graph: players are friends iff their types differ.
inline Game bakers_millers_graph(const TypeSpace& types)
{
    std::vector<Edge> e;
    for (Player i = 0; i < types.player_count(); ++i) {
        for (Player j = i + 1; j < types.player_count(); ++j) {
            if (types.type_of(i) != types.type_of(j)) {
                e.push_back({i, j});
            }
        }
    }
    return Game::from_edges(types.player_count(), e);
}

inline std::vector<std::string> gadget_names()
{
    return {"cycle-5",  "digraph-5", "empty-core-40",   "example-6", "k4-10",
            "petersen", "social-15", "stable-39", "star-packing-11", "symmetric-6"};
}

inline GadgetInstance gadget(const std::string& name)
{
    if (name == "example-6") {
        return {name, gadgets::example_6(), "six-player graph with the unique stable partition {1,2,3},{4,5,6}", {}, {}};
    }
    if (name == "digraph-5") {
        return {name, gadgets::digraph_5(), "weighted digraph, v_i(i+1)=2, v_{i+1}(i)=1, other arcs -10", {}, {}};
    }
    if (name == "symmetric-6") {
        return {name, gadgets::symmetric_6(), "symmetric weights 7/6/5 around two triangles, other pairs -24", {},
                {}};
    }
    if (name == "cycle-5") {
        return {name, gadgets::cycle(5), "cycle on five players", {}, {}};
    }
    if (name == "social-15") {
        return {name, gadgets::social_15(), "non-negative symmetric 15-player game on a,b,c players", {}, {}};
    }
    if (name == "empty-core-40") {
        return {name, gadgets::empty_core_40(), "40-player simple symmetric game built from cliques A,B,C", {}, {}};
    }
    if (name == "stable-39") {
        return {name, gadgets::stable_39(), "empty-core-40 without one B2 player, with a stable partition",
                gadgets::stable_39_partition(), {}};
    }
    if (name == "k4-10") {
        auto p = gadgets::k4_10_packing();
        return {name, bakers_millers_graph(TypeSpace::from_sizes({4, 10})), "complete bipartite K4,10",
                Partition::grand(14), p};
    }
    if (name == "star-packing-11") {
        auto p = gadgets::star_packing_11_start();
        return {name, gadgets::star_packing_11(), "girth-5 graph with an improvable star packing",
                p.to_partition(), p};
    }
    if (name == "petersen") {
        return {name, gadgets::petersen(), "Petersen graph", {}, {}};
    }
    std::string list;
    for (const auto& n : gadget_names()) {
        list += (list.empty() ? "" : ", ") + n;
    }
    throw std::invalid_argument("unknown gadget '" + name + "'; available: " + list);
}

// A supported game reduced to a plain one: each supported player i gets
// l_i - 1 new friends that form a clique with i. New players follow the
// originals, grouped by supported player in ascending order.
struct SupportedReduction {
    Game game;
    int original = 0;
    std::map<Player, std::vector<Player>> helpers;  // supported player -> C_i

    // {i} becomes C_i + {i}; any other coalition keeps i and leaves C_i on its own.
    Partition to_reduced(const Partition& p) const
    {
        std::vector<Coalition> cs;
        for (const auto& c : p.coalitions()) {
            Coalition x = c;
            if (c.size() == 1 && helpers.count(c.front())) {
                const auto& h = helpers.at(c.front());
                x.insert(x.end(), h.begin(), h.end());
            }
            cs.push_back(std::move(x));
        }
        for (const auto& [i, h] : helpers) {
            if (p.coalition_of(i).size() != 1) {
                cs.push_back(h);
            }
        }
        return Partition(game.size(), std::move(cs));
    }

    // Restricts every coalition to the original players.
    Partition to_supported(const Partition& p) const
    {
        std::vector<Coalition> cs;
        for (const auto& c : p.coalitions()) {
            Coalition x;
            for (Player q : c) {
                if (q < original) {
                    x.push_back(q);
                }
            }
            if (!x.empty()) {
                cs.push_back(std::move(x));
            }
        }
        return Partition(original, std::move(cs));
    }
};

inline SupportedReduction reduce_supported(const SupportedGame& sg)
{
    if (!sg.game.is_simple_symmetric()) {
        throw std::invalid_argument("reduce_supported needs a simple symmetric game");
    }
    int n = sg.game.size();
    SupportedReduction out{sg.game, n, {}};
    std::vector<Edge> e = sg.game.edges();
    for (const auto& [i, l] : sg.subsidies) {
        if (l < 4) {
            throw std::invalid_argument("subsidy of player " + std::to_string(i + 1) + " has l = " +
                                        std::to_string(l) + "; the reduction needs l >= 4");
        }
        std::vector<Player> h;
        for (int k = 0; k < l - 1; ++k) {
            h.push_back(n++);
        }
        std::vector<Player> all = h;
        all.push_back(i);
        gadgets::detail::clique(e, all);
        out.helpers[i] = std::move(h);
    }
    out.game = Game::from_edges(n, e);
    return out;
}

// Graph whose vertices form an n-by-2 grid of cells with m vertices each.
// Vertex (i, j, r) with row i < n, column j < 2, r < m has id (2i + j)m + r.
struct GridCliqueInstance {
    Game graph;
    int rows = 0;
    int cell = 0;

    GridCliqueInstance(Game g, int n, int m) : graph(std::move(g)), rows(n), cell(m)
    {
        if (n <= 0 || m <= 0) {
            throw std::invalid_argument("grid needs positive rows and cell size");
        }
        if ((n * m) % 2 != 0) {
            throw std::invalid_argument("n*m must be even");
        }
        if (graph.size() != 2 * n * m || !graph.is_simple_symmetric()) {
            throw std::invalid_argument("grid graph must be simple symmetric on 2nm vertices");
        }
    }

    int target() const { return rows + rows * cell / 2; }
    Player vertex(int i, int j, int r) const { return (2 * i + j) * cell + r; }
};

// Where each group of players sits in the reduced game.
struct MaxminLayout {
    int rows = 0;
    int cell = 0;
    int big_m = 0;
    int k = 0;
    Player z0 = 0;       // z_i = z0 + i
    Player x0 = 0;       // X_{i,j} = x0 + (2i + j)M + t
    Player v0 = 0;       // original vertex v at v0 + v
    Player mate0 = 0;    // mate of v at mate0 + v
    Player c0 = 0;       // C_v = c0 + v(k-3) + t
    Player o0 = 0;       // copies: z_i first, then the mates; 39 players each
    int total = 0;

    Player z(int i) const { return z0 + i; }
    Player x(int i, int j, int t) const { return x0 + (2 * i + j) * big_m + t; }
    Player v(Player orig) const { return v0 + orig; }
    Player mate(Player orig) const { return mate0 + orig; }
    Player c(Player orig, int t) const { return c0 + orig * (k - 3) + t; }
    Player copy(int index, int t) const { return o0 + 39 * index + t; }
};

struct MaxminReduction {
    SupportedGame game;
    MaxminLayout layout;
};

inline MaxminReduction reduce_maxmin_clique(const GridCliqueInstance& inst)
{
    const int n = inst.rows;
    const int m = inst.cell;
    const int k = inst.target();
    if (k < 4) {
        throw std::invalid_argument("target clique size " + std::to_string(k) + " is below 4");
    }
    const int vcount = 2 * n * m;
    MaxminLayout L;
    L.rows = n;
    L.cell = m;
    L.big_m = 20 * m * m * n;
    L.k = k;
    L.z0 = 0;
    L.x0 = n;
    L.v0 = L.x0 + 2 * n * L.big_m;
    L.mate0 = L.v0 + vcount;
    L.c0 = L.mate0 + vcount;
    L.o0 = L.c0 + vcount * (k - 3);
    L.total = L.o0 + 39 * (n + vcount);

    std::vector<Edge> e;
    for (const Edge& x : inst.graph.edges()) {
        e.push_back({L.v(x.u), L.v(x.v)});
    }
    std::map<Player, int> subsidies;
    for (Player v = 0; v < vcount; ++v) {
        std::vector<Player> cl{L.v(v), L.mate(v)};
        for (int t = 0; t < k - 3; ++t) {
            cl.push_back(L.c(v, t));
            subsidies[L.c(v, t)] = k - 1;
        }
        gadgets::detail::clique(e, cl);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < 2; ++j) {
            std::vector<Player> cl{L.z(i)};
            for (int t = 0; t < L.big_m; ++t) {
                cl.push_back(L.x(i, j, t));
                subsidies[L.x(i, j, t)] = L.big_m + 2 * m + 1;
            }
            gadgets::detail::clique(e, cl);
            for (int r = 0; r < m; ++r) {
                const Player v = inst.vertex(i, j, r);
                for (int t = 0; t < L.big_m; ++t) {
                    e.push_back({L.v(v), L.x(i, j, t)});
                    e.push_back({L.mate(v), L.x(i, j, t)});
                }
            }
        }
    }
    // Copy of the 39-player game with the distinguished player in B2.2's seat.
    auto attach = [&](int index, Player distinguished) {
        auto id = [&](Player p) { return p == gadgets::removed_b2 ? distinguished : L.copy(index, gadgets::in39(p)); };
        for (const Edge& x : gadgets::empty_core_40_edges()) {
            e.push_back({id(x.u), id(x.v)});
        }
    };
    for (int i = 0; i < n; ++i) {
        attach(i, L.z(i));
    }
    for (Player v = 0; v < vcount; ++v) {
        attach(n + v, L.mate(v));
    }
    return {SupportedGame(Game::from_edges(L.total, e), std::move(subsidies)), L};
}

struct CliqueVerification {
    SupportedGame game;
    Partition candidate;
};

// Every vertex is supported with l = k - 1; the candidate is all singletons.
inline CliqueVerification clique_verification_gadget(const Game& graph, int k)
{
    if (!graph.is_simple_symmetric()) {
        throw std::invalid_argument("clique gadget needs a simple symmetric graph");
    }
    if (k < 3) {
        throw std::invalid_argument("clique size must be at least 3");
    }
    std::map<Player, int> subsidies;
    for (Player v = 0; v < graph.size(); ++v) {
        subsidies[v] = k - 1;
    }
    return {SupportedGame(graph, std::move(subsidies)), Partition::singletons(graph.size())};
}

}  // namespace fhg
