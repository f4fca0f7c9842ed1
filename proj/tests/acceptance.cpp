// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fhg/instances.hpp"
#include "fhg/partitions.hpp"
#include "fhg/solvers.hpp"
#include "fhg/stability.hpp"
#include "fhg/star_packing.hpp"
#include "generators.hpp"

using namespace fhg;

namespace {

// Pinned limits.
constexpr double one_second = 1.0;
constexpr double ten_seconds = 10.0;
constexpr double ten_minutes = 600.0;
constexpr int walk_starts = 100;
constexpr std::size_t walk_steps = 10000;
constexpr int size_bound_39 = 17;
constexpr int type_spaces_6 = 200;
constexpr int type_spaces_7 = 100;
constexpr int per_class_9 = 500;
constexpr int max_n_9 = 12;
constexpr int games_11 = 300;
constexpr std::uint64_t seed = 20260101;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = limit <= 0 || secs < limit;
    const bool ok = o.pass && in_time;
    failures += !ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << secs << " s";
    if (limit > 0) {
        line << ", limit " << limit << " s";
    }
    line << ")";
    if (!o.detail.empty()) {
        line << ": " << o.detail;
    }
    if (!in_time) {
        line << " [over time]";
    }
    std::puts(line.str().c_str());
    std::fflush(stdout);
}

Partition random_partition(int n, std::mt19937_64& rng)
{
    std::vector<int> lab(n);
    for (int& x : lab) {
        x = gen::pick(rng, 0, n - 1);
    }
    return Partition::from_labels(lab);
}

TypeSpace random_types(int n, std::mt19937_64& rng)
{
    std::vector<int> a;
    const auto sizes = gen::type_sizes(n, rng);
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        a.insert(a.end(), sizes[t], static_cast<int>(t));
    }
    std::shuffle(a.begin(), a.end(), rng);
    return TypeSpace(a);
}

bool exhaustive_stable(const Game& g, const Partition& p)
{
    return is_core_stable(g, p, SearchBudget::exhaustive()).verdict == Verdict::stable;
}

// Counts partitions by verdict under exhaustive search.
template <typename G>
std::pair<int, std::vector<Partition>> stable_partitions(const G& g, BlockKind kind)
{
    int total = 0;
    std::vector<Partition> stable;
    for_each_partition(g.size(), [&](const Partition& p) {
        ++total;
        if (find_blocking(g, p, kind).status == SearchStatus::none_found) {
            stable.push_back(p);
        }
        return true;
    });
    return {total, stable};
}

struct SolverInstance {
    std::string family;
    Game game;
};

// The instance sweep shared by criteria 9, 10 and 13.
std::vector<SolverInstance> sweep_instances()
{
    std::mt19937_64 rng(seed + 9);
    std::vector<SolverInstance> out;
    for (int k = 0; k < per_class_9; ++k) {
        out.push_back({"degree2", gen::degree2(gen::pick(rng, 1, max_n_9), rng)});
        out.push_back({"forest", gen::forest(gen::pick(rng, 1, max_n_9), rng)});
        out.push_back({"matching", gen::bipartite_with_matching(2 * gen::pick(rng, 1, max_n_9 / 2), rng)});
        out.push_back({"girth5", gen::girth5(gen::pick(rng, 1, max_n_9), rng)});
    }
    return out;
}

Partition solve(const SolverInstance& s)
{
    if (s.family == "degree2") {
        return solve_degree2(s.game);
    }
    if (s.family == "forest") {
        return solve_forest(s.game);
    }
    if (s.family == "matching") {
        return solve_bipartite_matching(s.game);
    }
    return solve_star_packing(s.game).partition();
}

}  // namespace

int main()
{
    const auto sweep = sweep_instances();

    run(1, "six-player example has exactly one core-stable partition", one_second, [] {
        const auto [total, stable] = stable_partitions(gadgets::example_6(), BlockKind::strong);
        const bool ok = total == 203 && stable.size() == 1 && stable[0] == Partition(6, {{0, 1, 2}, {3, 4, 5}});
        return Outcome{ok, std::to_string(total) + " partitions, " + std::to_string(stable.size()) + " stable"};
    });

    run(2, "five-player digraph game has an empty core", one_second, [] {
        const auto [total, stable] = stable_partitions(gadgets::digraph_5(), BlockKind::strong);
        return Outcome{total == 52 && stable.empty(),
                       std::to_string(total) + " partitions, " + std::to_string(stable.size()) + " stable"};
    });

    run(3, "six-player symmetric weighted game has an empty core", one_second, [] {
        const auto [total, stable] = stable_partitions(gadgets::symmetric_6(), BlockKind::strong);
        return Outcome{total == 203 && stable.empty(),
                       std::to_string(total) + " partitions, " + std::to_string(stable.size()) + " stable"};
    });

    run(4, "five-cycle has an empty strict core; degree-2 solver output is core stable", one_second, [] {
        const Game c5 = gadgets::cycle(5);
        const auto [total, stable] = stable_partitions(c5, BlockKind::weak);
        const bool solver_ok = exhaustive_stable(c5, solve_degree2(c5));
        return Outcome{total == 52 && stable.empty() && solver_ok,
                       std::to_string(stable.size()) + " of " + std::to_string(total) +
                           " strict-core stable; solver output " + (solver_ok ? "stable" : "blocked")};
    });

    run(5, "39-player partition proved stable; 40-player walks never converge", ten_minutes, [] {
        const auto proof = is_core_stable(gadgets::stable_39(), gadgets::stable_39_partition(),
                                          SearchBudget::connected(size_bound_39));
        const Game g40 = gadgets::empty_core_40();
        std::mt19937_64 rng(seed + 5);
        int converged = 0, cycled = 0, exhausted = 0, other = 0;
        for (int k = 0; k < walk_starts; ++k) {
            const auto w = deviation_walk(g40, random_partition(40, rng), walk_steps);
            converged += w.outcome == WalkOutcome::converged;
            cycled += w.outcome == WalkOutcome::cycled;
            exhausted += w.outcome == WalkOutcome::exhausted;
            other += w.outcome == WalkOutcome::unknown;
        }
        std::ostringstream d;
        d << "39-player verdict " << to_string(proof.verdict) << " after " << proof.nodes << " nodes; walks: "
          << cycled << " cycled, " << exhausted << " exhausted, " << converged << " converged, " << other
          << " unknown";
        return Outcome{proof.verdict == Verdict::stable && converged == 0 && other == 0, d.str()};
    });

    run(6, "type-space ratio equality matches strict-core stability", 0, [] {
        std::mt19937_64 rng(seed + 6);
        long checked = 0, disagree = 0;
        for (int k = 0; k < type_spaces_6; ++k) {
            const TypeSpace t = random_types(gen::pick(rng, 2, 9), rng);
            const Game g = bakers_millers_graph(t);
            for_each_partition(t.player_count(), [&](const Partition& p) {
                ++checked;
                const bool ratio = check_bakers_millers_strict_core(t, p);
                const bool none = find_blocking(g, p, BlockKind::weak).status == SearchStatus::none_found;
                disagree += ratio != none;
                return true;
            });
        }
        return Outcome{disagree == 0,
                       std::to_string(checked) + " partitions, " + std::to_string(disagree) + " disagreements"};
    });

    run(7, "finest proportional partition has gcd many coalitions and is strict-core stable", 0, [] {
        std::mt19937_64 rng(seed + 7);
        int bad = 0, verified = 0;
        for (int k = 0; k < type_spaces_7; ++k) {
            const TypeSpace t = random_types(gen::pick(rng, 2, 16), rng);
            const Partition p = solve_bakers_millers_finest(t);
            const int d = t.gcd();
            bool ok = static_cast<int>(p.coalitions().size()) == d;
            for (const auto& c : p.coalitions()) {
                std::vector<int> count(t.type_count(), 0);
                for (Player x : c) {
                    ++count[t.type_of(x)];
                }
                for (int ty = 0; ty < t.type_count(); ++ty) {
                    ok = ok && count[ty] == t.sizes()[ty] / d;
                }
            }
            if (t.player_count() <= 9) {
                ++verified;
                ok = ok && is_strict_core_stable(bakers_millers_graph(t), p).verdict == Verdict::stable;
            }
            bad += !ok;
        }
        return Outcome{bad == 0, std::to_string(bad) + " failures; " + std::to_string(verified) +
                                     " checked exhaustively for strict-core stability"};
    });

    run(8, "K4,10: grand coalition stable, star packing blocked", ten_seconds, [] {
        const auto k = gadget("k4-10");
        const auto grand = is_core_stable(k.game, Partition::grand(14), SearchBudget::connected());
        const auto cert =
            check_certificate(k.game, k.packing->to_partition(), Coalition{0, 1, 8, 9, 10, 11, 12}, BlockKind::strong);
        return Outcome{grand.verdict == Verdict::stable && cert.has_value(),
                       std::string("grand coalition ") + to_string(grand.verdict) + "; {a,b,4,5,6,7,8} " +
                           (cert ? "blocks" : "does not block")};
    });

    run(9, "solver outputs pass exhaustive core verification", ten_minutes, [&] {
        int fail = 0;
        for (const auto& s : sweep) {
            fail += !exhaustive_stable(s.game, solve(s));
        }
        return Outcome{fail == 0, std::to_string(sweep.size()) + " instances, " + std::to_string(fail) + " failures"};
    });

    run(10, "star-packing potential, move bound, coverage and leximin consistency", 0, [&] {
        long runs = 0, moves = 0, level = 0, dropped = 0, over_bound = 0, not_leximin = 0, bad_packing = 0;
        for (const auto& s : sweep) {
            if (s.family != "girth5") {
                continue;
            }
            ++runs;
            const int n = s.game.size();
            const auto r = solve_star_packing(s.game);
            moves += static_cast<long>(r.moves.size());
            over_bound += r.moves.size() > static_cast<std::size_t>(n) * n;
            for (const auto& m : r.moves) {
                level += m.phi_after == m.phi_before;
                dropped += m.phi_after < m.phi_before;
                not_leximin += leximin_compare(m.after, m.before) != LeximinOrder::greater;
            }
            try {
                r.packing.validate(s.game);
                bad_packing += !r.packing.covers_non_isolated(s.game);
            } catch (const std::exception&) {
                ++bad_packing;
            }
        }
        std::ostringstream d;
        d << runs << " runs, " << moves << " moves; potential level on " << level << ", dropped on " << dropped
          << "; " << over_bound << " runs over n^2 moves; " << not_leximin << " non-improving moves; " << bad_packing
          << " invalid packings";
        const bool ok = level == 0 && dropped == 0 && over_bound == 0 && not_leximin == 0 && bad_packing == 0;
        return Outcome{ok, d.str()};
    });

    run(11, "connected-only and all-subsets searches agree", 0, [] {
        std::mt19937_64 rng(seed + 11);
        int disagree = 0;
        for (int k = 0; k < games_11; ++k) {
            const int n = gen::pick(rng, 1, 9);
            std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.2, 0.9)(rng));
            std::vector<Edge> e;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (coin(rng)) {
                        e.push_back({i, j});
                    }
                }
            }
            const Game g = Game::from_edges(n, e);
            const Partition p = random_partition(n, rng);
            for (BlockKind kind : {BlockKind::strong, BlockKind::weak}) {
                const auto a = find_blocking(g, p, kind).status;
                const auto c = find_blocking(g, p, kind, SearchBudget::connected()).status;
                disagree += a != c;
            }
        }
        return Outcome{disagree == 0, std::to_string(games_11) + " games, core and strict core, " +
                                          std::to_string(disagree) + " disagreements"};
    });

    run(12, "supported reduction preserves core non-emptiness; maxmin reduction identities", 0, [] {
        // Relabeling moves the subsidized player to 0 without changing core non-emptiness.
        long games = 0, disagree = 0;
        for (int n = 1; n <= 5; ++n) {
            std::vector<Edge> all;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    all.push_back({i, j});
                }
            }
            for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
                std::vector<Edge> e;
                for (std::size_t k = 0; k < all.size(); ++k) {
                    if (mask >> k & 1u) {
                        e.push_back(all[k]);
                    }
                }
                for (int l : {4, 5}) {
                    const SupportedGame sg(Game::from_edges(n, e), {{0, l}});
                    const auto red = reduce_supported(sg);
                    ++games;
                    disagree += core_nonempty_exhaustive(sg).nonempty != core_nonempty_exhaustive(red.game).nonempty;
                }
            }
        }

        std::mt19937_64 rng(seed + 12);
        const int rows = 2, cell = 2;
        std::vector<Edge> ge;
        for (int i = 0; i < 2 * rows * cell; ++i) {
            for (int j = i + 1; j < 2 * rows * cell; ++j) {
                if (rng() % 2) {
                    ge.push_back({i, j});
                }
            }
        }
        const GridCliqueInstance inst(Game::from_edges(2 * rows * cell, ge), rows, cell);
        const auto mm = reduce_maxmin_clique(inst);
        const auto& L = mm.layout;
        const Game& h = mm.game.game;
        const int big_m = L.big_m, k = L.k, vcount = 2 * rows * cell;
        const Game g40 = gadgets::empty_core_40();
        int bad = 0;
        bad += h.size() != 1056;
        for (int i = 0; i < rows; ++i) {
            bad += h.degree(L.z(i)) != 2 * big_m + g40.degree(gadgets::removed_b2);
            for (int j = 0; j < 2; ++j) {
                for (int t = 0; t < big_m; ++t) {
                    bad += h.degree(L.x(i, j, t)) != big_m + 2 * cell;
                    bad += mm.game.subsidies.at(L.x(i, j, t)) != big_m + 2 * cell + 1;
                }
            }
        }
        for (Player v = 0; v < vcount; ++v) {
            bad += h.degree(L.v(v)) != (k - 2) + big_m + inst.graph.degree(v);
            bad += h.degree(L.mate(v)) != (k - 2) + big_m + g40.degree(gadgets::removed_b2);
            for (int t = 0; t < k - 3; ++t) {
                bad += h.degree(L.c(v, t)) != k - 2;
                bad += mm.game.subsidies.at(L.c(v, t)) != k - 1;
            }
        }
        for (int idx = 0; idx < rows + vcount; ++idx) {
            for (Player p = 0; p < 40; ++p) {
                if (p != gadgets::removed_b2) {
                    bad += h.degree(L.copy(idx, gadgets::in39(p))) != g40.degree(p);
                }
            }
        }
        const long edges = static_cast<long>(inst.graph.edges().size()) + vcount * (k - 1) * (k - 2) / 2 +
                           2L * rows * (big_m + 1) * big_m / 2 + 2L * rows * cell * 2 * big_m + (rows + vcount) * 170L;
        bad += static_cast<long>(h.edges().size()) != edges;
        bad += static_cast<int>(mm.game.subsidies.size()) != 2 * rows * big_m + vcount * (k - 3);

        std::ostringstream d;
        d << games << " supported games, " << disagree << " disagreements; maxmin reduction " << h.size()
          << " players, " << bad << " identity failures";
        return Outcome{disagree == 0 && bad == 0, d.str()};
    });

    run(13, "perfect-matching partitions give every player exactly 1/2", 0, [&] {
        long players = 0, off = 0;
        for (const auto& s : sweep) {
            if (s.family != "matching") {
                continue;
            }
            const Partition p = solve_bipartite_matching(s.game);
            for (Player i = 0; i < s.game.size(); ++i) {
                ++players;
                off += utility(s.game, i, p) != Rational(1, 2);
            }
        }
        return Outcome{off == 0, std::to_string(players) + " players, " + std::to_string(off) + " not equal to 1/2"};
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
