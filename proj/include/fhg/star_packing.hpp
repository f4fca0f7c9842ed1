#pragma once

// Leximin local search over star packings for graphs of girth at least five.
//
// A packing assigns each non-isolated vertex to a star. A star on two
// vertices has two centers and no leaves; larger stars have one center
// adjacent to every leaf. Improvement moves are
//   (a) two adjacent leaves of different stars leave and form a new pair;
//   (b) a leaf moves to another star whose center it is adjacent to;
// and a move is taken only when it raises the sorted utility vector
// lexicographically. The potential
//   Phi = sum over centers of n + sum over leaves of (n - |star|)
// lies in [0, n^2] and never drops under an accepted move. It stays level
// when a leaf of a four-vertex star joins a pair: the pair member that turns
// into a leaf loses 3, the other two leaves and the mover gain 3 together.

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhg/game.hpp"
#include "fhg/model.hpp"
#include "fhg/solvers.hpp"

namespace fhg {

struct Star {
    std::vector<Player> centers;  // two for a pair, one otherwise
    std::vector<Player> leaves;   // sorted

    std::size_t size() const { return centers.size() + leaves.size(); }
    Player smallest() const
    {
        Player m = centers.front();
        for (Player p : centers) {
            m = std::min(m, p);
        }
        for (Player p : leaves) {
            m = std::min(m, p);
        }
        return m;
    }
    Coalition members() const
    {
        Coalition c = centers;
        c.insert(c.end(), leaves.begin(), leaves.end());
        std::sort(c.begin(), c.end());
        return c;
    }

    friend bool operator==(const Star&, const Star&) = default;
};

class StarPacking {
public:
    StarPacking(int n, std::vector<Star> stars) : n_(n), stars_(std::move(stars)) { normalize(); }

    int player_count() const { return n_; }
    const std::vector<Star>& stars() const { return stars_; }

    // Vertices in no star, ascending.
    std::vector<Player> unpacked() const
    {
        std::vector<char> covered(n_, 0);
        for (const auto& s : stars_) {
            for (Player p : s.members()) {
                covered[p] = 1;
            }
        }
        std::vector<Player> out;
        for (Player p = 0; p < n_; ++p) {
            if (!covered[p]) {
                out.push_back(p);
            }
        }
        return out;
    }

    Partition to_partition() const
    {
        std::vector<Coalition> cs;
        for (const auto& s : stars_) {
            cs.push_back(s.members());
        }
        for (Player p : unpacked()) {
            cs.push_back({p});
        }
        return Partition(n_, std::move(cs));
    }

    // Throws unless this is a vertex-disjoint star packing of `game`.
    void validate(const Game& game) const
    {
        if (game.size() != n_) {
            throw std::invalid_argument("star packing does not match the game");
        }
        std::vector<char> seen(n_, 0);
        for (const auto& s : stars_) {
            for (Player p : s.members()) {
                if (p < 0 || p >= n_ || seen[p]) {
                    throw std::invalid_argument("stars overlap or leave the player set");
                }
                seen[p] = 1;
            }
            if (s.centers.size() == 2) {
                if (!s.leaves.empty() || !game.adjacent(s.centers[0], s.centers[1])) {
                    throw std::invalid_argument("a pair must be an edge with no leaves");
                }
            } else if (s.centers.size() == 1) {
                if (s.leaves.size() < 2) {
                    throw std::invalid_argument("a single-center star needs at least two leaves");
                }
                for (Player l : s.leaves) {
                    if (!game.adjacent(s.centers[0], l)) {
                        throw std::invalid_argument("leaf not adjacent to its center");
                    }
                }
            } else {
                throw std::invalid_argument("a star has one or two centers");
            }
        }
    }

    bool covers_non_isolated(const Game& game) const
    {
        for (Player p : unpacked()) {
            if (game.degree(p) > 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const StarPacking&, const StarPacking&) = default;

private:
    void normalize()
    {
        for (auto& s : stars_) {
            std::sort(s.centers.begin(), s.centers.end());
            std::sort(s.leaves.begin(), s.leaves.end());
        }
        std::sort(stars_.begin(), stars_.end(), [](const Star& a, const Star& b) { return a.smallest() < b.smallest(); });
    }

    int n_;
    std::vector<Star> stars_;
};

// Player utilities sorted ascending.
struct ObjectiveVector {
    std::vector<Rational> values;
    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

enum class LeximinOrder { greater, equal, less };

inline const char* to_string(LeximinOrder o)
{
    return o == LeximinOrder::greater ? "greater" : o == LeximinOrder::equal ? "equal" : "less";
}

inline ObjectiveVector make_objective(std::vector<Rational> values)
{
    std::sort(values.begin(), values.end());
    return {std::move(values)};
}

inline LeximinOrder leximin_compare(const ObjectiveVector& a, const ObjectiveVector& b)
{
    if (a.values.size() != b.values.size()) {
        throw std::invalid_argument("objective vectors differ in length");
    }
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        if (a.values[k] != b.values[k]) {
            return a.values[k] > b.values[k] ? LeximinOrder::greater : LeximinOrder::less;
        }
    }
    return LeximinOrder::equal;
}

// Utilities in a star: a center of an s-star gets (s-1)/s, a leaf 1/s, a pair member 1/2.
inline ObjectiveVector objective(const StarPacking& packing)
{
    std::vector<Rational> vals;
    vals.reserve(packing.player_count());
    for (const auto& s : packing.stars()) {
        const auto size = static_cast<std::int64_t>(s.size());
        for (std::size_t k = 0; k < s.centers.size(); ++k) {
            vals.push_back(s.centers.size() == 2 ? Rational(1, 2) : Rational(size - 1, size));
        }
        for (std::size_t k = 0; k < s.leaves.size(); ++k) {
            vals.push_back(Rational(1, size));
        }
    }
    vals.resize(packing.player_count(), Rational(0));
    return make_objective(std::move(vals));
}

inline long phi_potential(const StarPacking& packing, int n)
{
    long phi = 0;
    for (const auto& s : packing.stars()) {
        phi += static_cast<long>(s.centers.size()) * n;
        phi += static_cast<long>(s.leaves.size()) * (n - static_cast<long>(s.size()));
    }
    return phi;
}

enum class StarMoveKind { pair_leaves, move_leaf };

struct StarMove {
    StarMoveKind kind;
    Player leaf;
    Player other;  // partner leaf for (a); new center for (b)
    long phi_before;
    long phi_after;
    ObjectiveVector before;
    ObjectiveVector after;
};

struct StarPackingRun {
    StarPacking packing;
    std::vector<StarMove> moves;
    Partition partition() const { return packing.to_partition(); }
};

namespace detail {

// Removes leaf l from s; a three-vertex star falls back to a pair.
inline void drop_leaf(Star& s, Player l)
{
    s.leaves.erase(std::find(s.leaves.begin(), s.leaves.end(), l));
    if (s.leaves.size() == 1) {
        s.centers.push_back(s.leaves.front());
        s.leaves.clear();
    }
}

inline int star_index_of(const std::vector<Star>& stars, Player p)
{
    for (std::size_t k = 0; k < stars.size(); ++k) {
        const auto& s = stars[k];
        if (std::find(s.centers.begin(), s.centers.end(), p) != s.centers.end() ||
            std::find(s.leaves.begin(), s.leaves.end(), p) != s.leaves.end()) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

inline bool is_leaf(const Star& s, Player p) { return std::find(s.leaves.begin(), s.leaves.end(), p) != s.leaves.end(); }

}  // namespace detail

// Forest grouping over a BFS spanning forest. A lone root becomes a leaf of
// the lowest adjacent center, or pairs with the lowest adjacent leaf.
inline StarPacking initial_star_packing(const Game& game)
{
    detail::require_class(game, "star-packing");
    const int n = game.size();
    const ForestLayers f = bfs_layers(game);
    std::vector<std::vector<Player>> groups;
    std::vector<int> group = detail::layer_grouping(f, groups);

    std::vector<Star> stars;
    for (const auto& g : groups) {
        if (g.size() == 2) {
            stars.push_back({{g[0], g[1]}, {}});
        } else {
            stars.push_back({{g[0]}, {g.begin() + 1, g.end()}});
        }
    }
    for (Player v = 0; v < n; ++v) {
        if (group[v] != -1 || game.degree(v) == 0) {
            continue;
        }
        bool placed = false;
        for (Player w : game.neighbors(v)) {
            const int k = detail::star_index_of(stars, w);
            if (k != -1 && !detail::is_leaf(stars[k], w)) {
                Star& s = stars[k];
                if (s.centers.size() == 2) {
                    const Player other = s.centers[0] == w ? s.centers[1] : s.centers[0];
                    s.centers = {w};
                    s.leaves = {other};
                }
                s.leaves.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            for (Player w : game.neighbors(v)) {
                const int k = detail::star_index_of(stars, w);
                if (k != -1) {
                    detail::drop_leaf(stars[k], w);
                    stars.push_back({{v, w}, {}});
                    placed = true;
                    break;
                }
            }
        }
        if (!placed) {
            throw std::logic_error("initial star packing left a non-isolated vertex uncovered");
        }
    }
    return StarPacking(n, std::move(stars));
}

struct StarSearchOptions {
    // Run even when the girth is below five; the result then carries no stability guarantee.
    bool force = false;
};

// Applies the first leximin-improving move until none exists. Moves are
// scanned as: (a) leaf pairs in ascending order, then (b) leaves ascending
// with target stars in ascending order of their smallest member.
inline StarPackingRun improve_star_packing(const Game& game, StarPacking start, StarSearchOptions opts = {})
{
    detail::require_class(game, "star-packing");
    const auto g = girth(game);
    const bool guaranteed = !g || *g >= 5;
    if (!guaranteed && !opts.force) {
        throw PreconditionError("star-packing: girth is " + std::to_string(*g) + ", below 5");
    }
    start.validate(game);
    const int n = game.size();
    StarPackingRun run{std::move(start), {}};

    for (;;) {
        const auto& stars = run.packing.stars();
        const ObjectiveVector current = objective(run.packing);
        const long phi = phi_potential(run.packing, n);
        std::vector<int> star_of(n, -1);
        for (std::size_t k = 0; k < stars.size(); ++k) {
            for (Player p : stars[k].members()) {
                star_of[p] = static_cast<int>(k);
            }
        }
        auto leaf = [&](Player p) { return star_of[p] != -1 && detail::is_leaf(stars[star_of[p]], p); };

        std::optional<StarMove> taken;
        std::optional<StarPacking> next;
        auto consider = [&](StarMoveKind kind, Player l, Player other, std::vector<Star> candidate) {
            StarPacking cand(n, std::move(candidate));
            ObjectiveVector obj = objective(cand);
            if (leximin_compare(obj, current) == LeximinOrder::greater) {
                taken = StarMove{kind, l, other, phi, phi_potential(cand, n), current, std::move(obj)};
                next = std::move(cand);
                return true;
            }
            return false;
        };

        for (Player l = 0; l < n && !taken; ++l) {
            if (!leaf(l)) {
                continue;
            }
            for (Player m : game.neighbors(l)) {
                if (m <= l || !leaf(m) || star_of[m] == star_of[l]) {
                    continue;
                }
                std::vector<Star> cand = stars;
                detail::drop_leaf(cand[star_of[l]], l);
                detail::drop_leaf(cand[star_of[m]], m);
                cand.push_back({{l, m}, {}});
                if (consider(StarMoveKind::pair_leaves, l, m, std::move(cand))) {
                    break;
                }
            }
        }
        for (Player l = 0; l < n && !taken; ++l) {
            if (!leaf(l)) {
                continue;
            }
            for (std::size_t k = 0; k < stars.size(); ++k) {
                if (static_cast<int>(k) == star_of[l]) {
                    continue;
                }
                Player center = -1;
                for (Player c : stars[k].centers) {
                    if (game.adjacent(l, c)) {
                        center = c;
                        break;
                    }
                }
                if (center == -1) {
                    continue;
                }
                std::vector<Star> cand = stars;
                detail::drop_leaf(cand[star_of[l]], l);
                Star& t = cand[k];
                if (t.centers.size() == 2) {
                    const Player other = t.centers[0] == center ? t.centers[1] : t.centers[0];
                    t.centers = {center};
                    t.leaves = {other};
                }
                t.leaves.push_back(l);
                if (consider(StarMoveKind::move_leaf, l, center, std::move(cand))) {
                    break;
                }
            }
        }

        if (!taken) {
            return run;
        }
        if (guaranteed && taken->phi_after < taken->phi_before) {
            throw std::logic_error("star-packing: potential dropped");
        }
        run.packing = std::move(*next);
        run.moves.push_back(std::move(*taken));
    }
}

inline StarPackingRun solve_star_packing(const Game& game, StarSearchOptions opts = {})
{
    detail::require_class(game, "star-packing");
    const auto g = girth(game);
    if (g && *g < 5 && !opts.force) {
        throw PreconditionError("star-packing: girth is " + std::to_string(*g) + ", below 5");
    }
    return improve_star_packing(game, initial_star_packing(game), opts);
}

}  // namespace fhg
