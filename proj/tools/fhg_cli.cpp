// fhg: solve, verify, and generate fractional hedonic games.
//
// Exit codes: 0 success or stable, 1 unstable, 2 unknown, 3 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fhg/instances.hpp"
#include "fhg/io.hpp"
#include "fhg/partitions.hpp"
#include "fhg/solvers.hpp"
#include "fhg/stability.hpp"
#include "fhg/star_packing.hpp"

namespace {

using namespace fhg;

constexpr int exit_ok = 0;
constexpr int exit_unstable = 1;
constexpr int exit_unknown = 2;
constexpr int exit_usage = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << text;
}

Partition load_partition(const std::string& spec, int n)
{
    if (spec == "grand") {
        return Partition::grand(n);
    }
    if (spec == "singletons") {
        return Partition::singletons(n);
    }
    return parse_partition(slurp(spec), n);
}

std::uint64_t env_or(const char* name, std::uint64_t fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v) {
        return fallback;
    }
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw UsageError(std::string("malformed ") + name + " '" + v + "'");
    }
}

struct BudgetFlags {
    bool connected = false;
    int max_size = -1;
    long long max_nodes = -1;
    int threads = 1;

    void attach(CLI::App* app)
    {
        app->add_flag("--connected", connected, "search connected coalitions only (simple symmetric games)");
        app->add_option("--max-size", max_size, "largest coalition to try (0 = unlimited)");
        app->add_option("--max-nodes", max_nodes, "search node limit (0 = unlimited)");
        app->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    }

    SearchBudget budget() const
    {
        SearchBudget b;
        b.connected_only = connected;
        b.max_coalition_size = max_size >= 0 ? max_size : static_cast<int>(env_or("FHG_BUDGET_SIZE", 0));
        b.max_nodes = max_nodes >= 0 ? static_cast<std::uint64_t>(max_nodes) : env_or("FHG_BUDGET_NODES", 0);
        b.threads = threads;
        return b;
    }
};

std::string describe(const SearchBudget& b)
{
    std::string s = b.connected_only ? "connected search" : "all-subsets search";
    if (b.max_coalition_size > 0) {
        s += ", size <= " + std::to_string(b.max_coalition_size);
    }
    if (b.max_nodes > 0) {
        s += ", nodes <= " + std::to_string(b.max_nodes);
    }
    return s;
}

int verdict_code(Verdict v)
{
    return v == Verdict::stable ? exit_ok : v == Verdict::unstable ? exit_unstable : exit_unknown;
}

// Connected search when it is sound, otherwise all subsets.
SearchBudget default_verification(const Game& g)
{
    SearchBudget b;
    b.connected_only = g.is_simple_symmetric();
    return b;
}

int cmd_solve(const std::string& cls, const std::string& path, bool force, bool no_verify)
{
    const GameFile gf = parse_game(slurp(path));
    const Game& g = gf.game;
    Partition p;
    std::optional<StarPackingRun> run;
    if (cls == "degree2") {
        p = solve_degree2(g);
    } else if (cls == "forest") {
        p = solve_forest(g);
    } else if (cls == "bakers-millers") {
        // Types are the classes of the complement graph's components.
        std::vector<int> type(g.size(), -1);
        int t = 0;
        for (Player i = 0; i < g.size(); ++i) {
            if (type[i] != -1) {
                continue;
            }
            for (Player j = i; j < g.size(); ++j) {
                if (j == i || (type[j] == -1 && !g.adjacent(i, j))) {
                    type[j] = t;
                }
            }
            ++t;
        }
        TypeSpace types(type);
        if (!(bakers_millers_graph(types) == g)) {
            throw PreconditionError("bakers-millers: graph is not complete multipartite");
        }
        p = solve_bakers_millers_finest(types);
    } else if (cls == "matching") {
        p = solve_bipartite_matching(g);
    } else if (cls == "star-packing") {
        run = solve_star_packing(g, {force});
        p = run->partition();
    } else {
        throw UsageError("unknown class '" + cls + "'");
    }
    std::cout << serialize_partition(p);
    if (run) {
        std::cout << "# moves: " << run->moves.size() << "\n";
    }
    if (!no_verify) {
        const auto rep = is_core_stable(g, p, default_verification(g));
        std::cout << "# core: " << to_string(rep.verdict) << "\n";
        if (cls == "bakers-millers") {
            std::cout << "# strict-core: " << to_string(is_strict_core_stable(g, p).verdict) << "\n";
        }
        return verdict_code(rep.verdict);
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string game = "-";
    std::string partition;
    std::string notion = "core";
    std::string expect;
    std::string check;
    BudgetFlags budget;
};

int cmd_verify(const VerifyArgs& a)
{
    const GameFile gf = parse_game(slurp(a.game));
    const SupportedGame sg = gf.supported();
    const int n = gf.game.size();
    const Partition p = load_partition(a.partition, n);
    const BlockKind kind = a.notion == "core" ? BlockKind::strong : BlockKind::weak;
    Report r;
    r.add("concept", a.notion);

    if (!a.check.empty()) {
        const Coalition c = parse_coalition(a.check, n);
        const auto cert = check_certificate(sg, p, c, kind);
        r.add("certificate", format_coalition(c));
        r.add("certificate.valid", cert ? "yes" : "no");
        if (cert) {
            add_certificate(r, *cert);
        }
        std::cout << r.str();
        return cert ? exit_ok : exit_unstable;
    }

    const SearchBudget b = a.budget.budget();
    const auto res = find_blocking(sg, p, kind, b);
    const auto rep = detail::to_report(res);
    r.add("verdict", to_string(rep.verdict));
    r.add("search", describe(b));
    r.add("nodes", rep.nodes);
    if (rep.certificate) {
        add_certificate(r, *rep.certificate);
    }
    std::cout << r.str();
    if (a.expect.empty()) {
        return verdict_code(rep.verdict);
    }
    if (a.expect == to_string(rep.verdict)) {
        return exit_ok;
    }
    return rep.verdict == Verdict::unknown ? exit_unknown : exit_unstable;
}

int cmd_gadget(const std::string& name, const std::string& partition_out, bool list)
{
    if (list) {
        for (const auto& n : gadget_names()) {
            std::cout << n << "\n";
        }
        return exit_ok;
    }
    const auto g = gadget(name);
    std::cout << "# " << g.name << ": " << g.description << "\n" << serialize_game(g.game);
    if (!partition_out.empty()) {
        if (!g.partition) {
            throw UsageError("gadget '" + name + "' has no partition");
        }
        spit(partition_out, serialize_partition(*g.partition));
    }
    return exit_ok;
}

struct ReduceArgs {
    std::string kind;
    std::string game = "-";
    int rows = 0;
    int cell = 0;
    int k = 0;
    std::string partition_out;
    std::string partition_in;
};

int cmd_reduce(const ReduceArgs& a)
{
    const GameFile gf = parse_game(slurp(a.game));
    if (a.kind == "supported") {
        const auto red = reduce_supported(gf.supported());
        std::cout << serialize_game(red.game);
        if (!a.partition_in.empty() && !a.partition_out.empty()) {
            spit(a.partition_out, serialize_partition(red.to_reduced(load_partition(a.partition_in, gf.game.size()))));
        }
        return exit_ok;
    }
    if (a.kind == "maxmin-clique") {
        const auto red = reduce_maxmin_clique(GridCliqueInstance(gf.game, a.rows, a.cell));
        std::cout << serialize_game(red.game);
        return exit_ok;
    }
    if (a.kind == "clique") {
        const auto cv = clique_verification_gadget(gf.game, a.k);
        std::cout << serialize_game(cv.game);
        if (!a.partition_out.empty()) {
            spit(a.partition_out, serialize_partition(cv.candidate));
        }
        return exit_ok;
    }
    throw UsageError("unknown reduction '" + a.kind + "'");
}

int cmd_walk(const std::string& path, const std::string& start, long seed, std::size_t max_steps,
             const BudgetFlags& flags)
{
    const GameFile gf = parse_game(slurp(path));
    const SupportedGame sg = gf.supported();
    const int n = gf.game.size();
    Partition p;
    if (!start.empty()) {
        p = load_partition(start, n);
    } else {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<int> labels(n);
        for (int& l : labels) {
            l = pick(rng);
        }
        p = Partition::from_labels(labels);
    }
    const auto res = deviation_walk(sg, p, max_steps, flags.budget());
    Report r;
    r.add("outcome", to_string(res.outcome));
    r.add("steps", res.steps);
    if (res.outcome == WalkOutcome::cycled) {
        r.add("cycle.start", res.cycle_start);
        r.add("cycle.length", res.steps - res.cycle_start);
    }
    for (std::size_t k = 0; k < res.trace.size(); ++k) {
        r.add("step." + std::to_string(k + 1), format_coalition(res.trace[k].formed) + " (gain " +
                                                    res.trace[k].min_gain.str() + ")");
    }
    std::cout << r.str() << "# final partition\n" << serialize_partition(res.final_partition);
    return res.outcome == WalkOutcome::converged ? exit_ok
           : res.outcome == WalkOutcome::unknown ? exit_unknown
                                                 : exit_unstable;
}

int cmd_enumerate(const std::string& path, const std::string& notion, int bound, bool all)
{
    const GameFile gf = parse_game(slurp(path));
    const SupportedGame sg = gf.supported();
    const BlockKind kind = notion == "core" ? BlockKind::strong : BlockKind::weak;
    Report r;
    r.add("concept", notion);
    if (all) {
        std::uint64_t examined = 0;
        std::vector<Partition> stable;
        for_each_partition(
            gf.game.size(),
            [&](const Partition& p) {
                ++examined;
                if (find_blocking(sg, p, kind).status == SearchStatus::none_found) {
                    stable.push_back(p);
                }
                return true;
            },
            bound);
        r.add("partitions", examined);
        r.add("stable", stable.size());
        for (std::size_t k = 0; k < stable.size(); ++k) {
            std::string line;
            for (const auto& c : stable[k].coalitions()) {
                line += (line.empty() ? "" : " | ") + format_coalition(c);
            }
            r.add("stable." + std::to_string(k + 1), line);
        }
        std::cout << r.str();
        return stable.empty() ? exit_unstable : exit_ok;
    }
    const auto out = core_nonempty_exhaustive(sg, bound, kind);
    r.add("result", out.nonempty ? "nonempty" : "empty");
    r.add("partitions", out.partitions_examined);
    std::cout << r.str();
    if (out.witness) {
        std::cout << "# witness\n" << serialize_partition(*out.witness);
    }
    return out.nonempty ? exit_ok : exit_unstable;
}

int cmd_stats(const std::string& path)
{
    const GameFile gf = parse_game(slurp(path));
    const Game& g = gf.game;
    Report r;
    r.add("players", g.size());
    r.add("simple", g.is_simple() ? "yes" : "no");
    r.add("symmetric", g.is_symmetric() ? "yes" : "no");
    r.add("subsidies", gf.subsidies.size());
    if (g.is_symmetric()) {
        r.add("edges", g.edges().size());
        r.add("components", connected_components(g).size());
    }
    r.add("max_degree", g.max_degree());
    if (g.is_simple_symmetric()) {
        const auto gi = girth(g);
        r.add("girth", gi ? std::to_string(*gi) : "infinite");
        r.add("bipartite", bipartition(g) ? "yes" : "no");
        const auto d = regular_degree(g);
        r.add("regular", d ? std::to_string(*d) : "no");
    }
    std::cout << r.str();
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fractional hedonic games: solvers, stability checks, gadgets"};
    app.require_subcommand(1);

    std::string solve_class;
    std::string solve_game = "-";
    bool solve_force = false;
    bool solve_no_verify = false;
    auto* solve = app.add_subcommand("solve", "build a stable partition for a tractable graph class");
    solve->add_option("--class", solve_class, "graph class")
        ->required()
        ->check(CLI::IsMember({"degree2", "forest", "bakers-millers", "matching", "star-packing"}));
    solve->add_option("game", solve_game, "game file, '-' for stdin");
    solve->add_flag("--force", solve_force, "run star-packing even below girth 5");
    solve->add_flag("--no-verify", solve_no_verify, "skip the core check of the output");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check core or strict-core stability of a partition");
    verify->add_option("game", va.game, "game file, '-' for stdin");
    verify->add_option("--partition", va.partition, "partition file, 'grand', or 'singletons'")->required();
    verify->add_option("--concept", va.notion)->check(CLI::IsMember({"core", "strict-core"}));
    verify->add_option("--expect", va.expect)->check(CLI::IsMember({"stable", "unstable", "unknown"}));
    verify->add_option("--check-certificate", va.check, "coalition to re-verify, e.g. \"1 2 3\"");
    va.budget.attach(verify);

    std::string gadget_name;
    std::string gadget_part;
    bool gadget_list = false;
    auto* gad = app.add_subcommand("gadget", "emit a named gadget game");
    gad->add_option("name", gadget_name);
    gad->add_option("--partition-out", gadget_part, "write the gadget's partition here");
    gad->add_flag("--list", gadget_list, "list gadget names");

    ReduceArgs ra;
    auto* red = app.add_subcommand("reduce", "transform an instance");
    red->add_option("kind", ra.kind)->required()->check(CLI::IsMember({"supported", "maxmin-clique", "clique"}));
    red->add_option("game", ra.game, "game file, '-' for stdin");
    red->add_option("--rows", ra.rows, "grid rows (maxmin-clique)");
    red->add_option("--cell", ra.cell, "cell size (maxmin-clique)");
    red->add_option("-k", ra.k, "clique size (clique)");
    red->add_option("--partition", ra.partition_in, "partition to carry over (supported)");
    red->add_option("--partition-out", ra.partition_out, "write the mapped or candidate partition here");

    std::string walk_game = "-";
    std::string walk_start;
    long walk_seed = 1;
    std::size_t walk_steps = 10000;
    BudgetFlags walk_budget;
    auto* walk = app.add_subcommand("walk", "follow blocking coalitions from a start partition");
    walk->add_option("game", walk_game, "game file, '-' for stdin");
    walk->add_option("--start", walk_start, "start partition (default: random from --seed)");
    walk->add_option("--seed", walk_seed);
    walk->add_option("--max-steps", walk_steps);
    walk_budget.attach(walk);

    std::string en_game = "-";
    std::string en_concept = "core";
    int en_bound = default_enumeration_bound;
    bool en_all = false;
    auto* en = app.add_subcommand("enumerate", "decide core non-emptiness over all partitions");
    en->add_option("game", en_game, "game file, '-' for stdin");
    en->add_option("--concept", en_concept)->check(CLI::IsMember({"core", "strict-core"}));
    en->add_option("--bound", en_bound, "largest player count to enumerate");
    en->add_flag("--all", en_all, "list every stable partition");

    std::string st_game = "-";
    auto* stats = app.add_subcommand("stats", "graph statistics");
    stats->add_option("game", st_game, "game file, '-' for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve) {
            return cmd_solve(solve_class, solve_game, solve_force, solve_no_verify);
        }
        if (*verify) {
            return cmd_verify(va);
        }
        if (*gad) {
            if (gadget_name.empty() && !gadget_list) {
                throw UsageError("gadget name required");
            }
            return cmd_gadget(gadget_name, gadget_part, gadget_list);
        }
        if (*red) {
            return cmd_reduce(ra);
        }
        if (*walk) {
            return cmd_walk(walk_game, walk_start, walk_seed, walk_steps, walk_budget);
        }
        if (*en) {
            return cmd_enumerate(en_game, en_concept, en_bound, en_all);
        }
        if (*stats) {
            return cmd_stats(st_game);
        }
    } catch (const std::exception& e) {
        std::cerr << "fhg: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
