#pragma once

// Core and strict-core verification by blocking-coalition search.
//
// Two search routes share one driver:
//   * all-subsets: every coalition, as an ascending sequence grown from each
//     seed (its smallest member);
//   * connected: only coalitions that are connected in the friendship graph,
//     grown from each seed over larger ids. For simple symmetric games with
//     non-negative values this loses nothing: a component of a blocking
//     coalition that holds an improving member blocks as well.
//
// For simple games both routes prune with exact bounds. A member i with
// current utility u_i and d_i eligible friends can only sit in coalitions of
// size below d_i / u_i, and a member that cannot reach u_i even after adding
// every still-available friend kills the branch. A coalition-size or node
// budget that cuts a branch the bounds would have kept makes the search
// incomplete, and an incomplete search never reports "none found".

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fhg/game.hpp"
#include "fhg/model.hpp"
#include "fhg/partitions.hpp"

namespace fhg {

enum class BlockKind { strong, weak };

inline const char* to_string(BlockKind k) { return k == BlockKind::strong ? "strong" : "weak"; }

struct MemberDelta {
    Player player;
    Rational before;  // utility in the partition
    Rational after;   // utility in the blocking coalition
};

struct BlockingCertificate {
    Coalition coalition;
    BlockKind kind = BlockKind::strong;
    std::vector<MemberDelta> deltas;

    Rational min_delta() const
    {
        Rational best = deltas.front().after - deltas.front().before;
        for (const auto& d : deltas) {
            best = std::min(best, d.after - d.before);
        }
        return best;
    }
};

struct SearchBudget {
    static constexpr int unlimited_size = 0;
    static constexpr std::uint64_t unlimited_nodes = 0;

    int max_coalition_size = unlimited_size;
    std::uint64_t max_nodes = unlimited_nodes;
    bool connected_only = false;
    // Worker threads over seeds. Only used when max_nodes is unlimited, so the
    // verdict and certificate never depend on the worker count.
    int threads = 1;

    static SearchBudget exhaustive() { return {}; }
    static SearchBudget connected(int max_size = unlimited_size)
    {
        SearchBudget b;
        b.connected_only = true;
        b.max_coalition_size = max_size;
        return b;
    }
};

enum class SearchStatus { found, none_found, budget_exhausted };

inline const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::none_found:
        return "none-found";
    case SearchStatus::budget_exhausted:
        return "budget-exhausted";
    }
    return "?";
}

struct SearchResult {
    SearchStatus status = SearchStatus::none_found;
    std::optional<BlockingCertificate> certificate;
    std::uint64_t nodes = 0;
};

enum class Verdict { stable, unstable, unknown };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::stable:
        return "stable";
    case Verdict::unstable:
        return "unstable";
    case Verdict::unknown:
        return "unknown";
    }
    return "?";
}

struct StabilityReport {
    Verdict verdict = Verdict::unknown;
    std::optional<BlockingCertificate> certificate;
    std::uint64_t nodes = 0;
};

namespace detail {

// A game together with the value each player receives when alone.
struct HedonicView {
    const Game& game;
    std::vector<Rational> singleton;

    explicit HedonicView(const Game& g) : game(g), singleton(g.size(), Rational(0)) {}
    explicit HedonicView(const SupportedGame& sg) : game(sg.game), singleton(sg.game.size())
    {
        for (Player i = 0; i < sg.game.size(); ++i) {
            singleton[i] = sg.singleton_value(i);
        }
    }

    int size() const { return game.size(); }

    Rational utility(Player i, std::span<const Player> s) const
    {
        if (s.size() == 1) {
            require_member(s, i);
            return singleton[i];
        }
        return fhg::utility(game, i, s);
    }

    // Simple games with non-negative singleton values admit the degree bounds.
    bool prunable() const
    {
        if (!game.is_simple()) {
            return false;
        }
        return std::all_of(singleton.begin(), singleton.end(), [](const Rational& r) { return r.sign() >= 0; });
    }
};

inline std::vector<Rational> current_utilities(const HedonicView& view, const Partition& partition)
{
    if (partition.player_count() != view.size()) {
        throw std::invalid_argument("partition does not match the game's player count");
    }
    std::vector<Rational> u(view.size());
    for (Player i = 0; i < view.size(); ++i) {
        u[i] = view.utility(i, partition.coalition_of(i));
    }
    return u;
}

inline bool satisfies(BlockKind kind, std::span<const Rational> before, std::span<const Rational> after)
{
    bool some_strict = false;
    for (std::size_t k = 0; k < before.size(); ++k) {
        if (after[k] > before[k]) {
            some_strict = true;
        } else if (kind == BlockKind::strong || after[k] < before[k]) {
            return false;
        }
    }
    return some_strict;
}

// Recomputes every utility from scratch.
inline std::optional<BlockingCertificate> make_certificate(const HedonicView& view, std::span<const Rational> utils,
                                                           Coalition coalition, BlockKind kind)
{
    std::sort(coalition.begin(), coalition.end());
    if (coalition.empty() || std::adjacent_find(coalition.begin(), coalition.end()) != coalition.end()) {
        return std::nullopt;
    }
    BlockingCertificate cert{coalition, kind, {}};
    std::vector<Rational> before;
    std::vector<Rational> after;
    for (Player i : coalition) {
        if (i < 0 || i >= view.size()) {
            return std::nullopt;
        }
        cert.deltas.push_back({i, utils[i], view.utility(i, coalition)});
        before.push_back(cert.deltas.back().before);
        after.push_back(cert.deltas.back().after);
    }
    if (!satisfies(kind, before, after)) {
        return std::nullopt;
    }
    return cert;
}

// Per-seed search state. One instance per worker.
class BlockingSearch {
public:
    BlockingSearch(const HedonicView& view, const std::vector<Rational>& utils, BlockKind kind,
                   const SearchBudget& budget)
        : view_(view), game_(view.game), utils_(utils), kind_(kind), budget_(budget), n_(view.size()),
          prunable_(view.prunable()), in_set_(n_, 0), in_nbhd_(n_, 0), in_ext_(n_, 0), deg_(n_, 0),
          sum_(n_), eligible_(n_, 1), size_cap_(n_, std::numeric_limits<int>::max())
    {
        if (budget.connected_only && !(game_.is_simple_symmetric() && prunable_)) {
            throw std::invalid_argument("connected-only search requires a simple symmetric game");
        }
        if (prunable_) {
            compute_bounds();
        }
    }

    std::uint64_t nodes() const { return nodes_; }
    bool complete() const { return complete_; }
    bool out_of_nodes() const { return out_of_nodes_; }

    // Sets of size >= 2 whose smallest member is `seed`, plus the singleton {seed}.
    std::optional<BlockingCertificate> run_seed(Player seed)
    {
        found_.reset();
        seed_ = seed;
        if (out_of_nodes_ || !count_node()) {
            return std::nullopt;
        }
        {
            const Rational alone = view_.singleton[seed];
            if (alone > utils_[seed]) {
                return make_certificate(view_, utils_, {seed}, kind_);
            }
        }
        if (!eligible_[seed]) {
            return std::nullopt;
        }
        add(seed);
        std::vector<Player> ext;
        if (budget_.connected_only) {
            for (Player w : game_.neighbors(seed)) {
                if (w > seed && eligible_[w]) {
                    ext.push_back(w);
                }
            }
            std::sort(ext.begin(), ext.end());
            connected_extend(ext);
        } else {
            subset_extend(seed + 1);
        }
        remove(seed);
        return found_;
    }

private:
    void compute_bounds()
    {
        // Best reachable utility in a coalition of size >= 2 is d/(d+1).
        for (Player i = 0; i < n_; ++i) {
            const int d = game_.degree(i);
            const Rational best(d, d + 1);
            eligible_[i] = kind_ == BlockKind::strong ? utils_[i] < best : utils_[i] <= best;
        }
        for (Player i = 0; i < n_; ++i) {
            if (!eligible_[i]) {
                continue;
            }
            std::int64_t d = 0;
            for (Player j : game_.neighbors(i)) {
                d += eligible_[j];
            }
            const std::int64_t p = utils_[i].num();
            const std::int64_t q = utils_[i].den();
            if (p <= 0) {
                continue;
            }
            // strong: s*p < d*q; weak: s*p <= d*q
            const std::int64_t cap = kind_ == BlockKind::strong ? (d * q - 1) / p : (d * q) / p;
            size_cap_[i] = static_cast<int>(std::min<std::int64_t>(cap, n_));
        }
        eligible_count_ = static_cast<int>(std::count(eligible_.begin(), eligible_.end(), 1));
    }

    bool count_node()
    {
        ++nodes_;
        if (budget_.max_nodes != SearchBudget::unlimited_nodes && nodes_ > budget_.max_nodes) {
            out_of_nodes_ = true;
            complete_ = false;
            return false;
        }
        return true;
    }

    void add(Player w)
    {
        in_set_[w] = 1;
        members_.push_back(w);
        if (prunable_) {
            int dw = 0;
            for (Player x : members_) {
                if (x != w) {
                    deg_[x] += game_.adjacent(x, w) ? 1 : 0;
                    dw += game_.adjacent(w, x) ? 1 : 0;
                }
            }
            deg_[w] = dw;
            if (budget_.connected_only) {
                ++in_nbhd_[w];
                for (Player x : game_.neighbors(w)) {
                    ++in_nbhd_[x];
                }
            }
        } else {
            Rational sw = 0;
            for (Player x : members_) {
                if (x != w) {
                    sum_[x] += game_.value(x, w);
                    sw += game_.value(w, x);
                }
            }
            sum_[w] = sw;
        }
    }

    void remove(Player w)
    {
        members_.pop_back();
        in_set_[w] = 0;
        if (prunable_) {
            for (Player x : members_) {
                deg_[x] -= game_.adjacent(x, w) ? 1 : 0;
            }
            deg_[w] = 0;
            if (budget_.connected_only) {
                --in_nbhd_[w];
                for (Player x : game_.neighbors(w)) {
                    --in_nbhd_[x];
                }
            }
        } else {
            for (Player x : members_) {
                sum_[x] -= game_.value(x, w);
            }
            sum_[w] = 0;
        }
    }

    bool current_blocks() const
    {
        const std::int64_t s = static_cast<std::int64_t>(members_.size());
        if (s < 2) {
            return false;
        }
        bool some_strict = false;
        for (Player i : members_) {
            int cmp;
            if (prunable_) {
                const wide lhs = static_cast<wide>(deg_[i]) * utils_[i].den();
                const wide rhs = static_cast<wide>(utils_[i].num()) * s;
                cmp = (lhs > rhs) - (lhs < rhs);
            } else {
                const Rational after = sum_[i] / Rational(s);
                cmp = (after > utils_[i]) - (after < utils_[i]);
            }
            if (cmp > 0) {
                some_strict = true;
            } else if (cmp < 0 || kind_ == BlockKind::strong) {
                return false;
            }
        }
        return some_strict;
    }

    int intrinsic_cap() const
    {
        int cap = eligible_count_;
        for (Player i : members_) {
            cap = std::min(cap, size_cap_[i]);
        }
        return cap;
    }

    // Can every member still reach its target with at most cap - |S| more
    // members, drawing friends from the `avail` pool?
    template <typename PoolCount>
    bool viable(int cap, PoolCount&& pool) const
    {
        const std::int64_t s = static_cast<std::int64_t>(members_.size());
        for (Player i : members_) {
            const std::int64_t a = std::min<std::int64_t>(pool(i), cap - s);
            const std::int64_t top = deg_[i] + std::max<std::int64_t>(a, 0);
            const std::int64_t bottom = s + std::max<std::int64_t>(a, 0);
            const wide lhs = static_cast<wide>(top) * utils_[i].den();
            const wide rhs = static_cast<wide>(utils_[i].num()) * bottom;
            if (kind_ == BlockKind::strong ? lhs <= rhs : lhs < rhs) {
                return false;
            }
        }
        return true;
    }

    // Decides whether to descend; flags incompleteness when only the budget cap stops a live branch.
    template <typename PoolCount>
    bool may_extend(bool has_candidates, PoolCount&& pool)
    {
        if (!has_candidates) {
            return false;
        }
        const int s = static_cast<int>(members_.size());
        if (!prunable_) {
            if (budget_.max_coalition_size != SearchBudget::unlimited_size && s >= budget_.max_coalition_size) {
                complete_ = false;
                return false;
            }
            return true;
        }
        const int natural = intrinsic_cap();
        int cap = natural;
        if (budget_.max_coalition_size != SearchBudget::unlimited_size) {
            cap = std::min(cap, budget_.max_coalition_size);
        }
        if (s < cap && viable(cap, pool)) {
            return true;
        }
        if (cap < natural && s < natural && viable(natural, pool)) {
            complete_ = false;
        }
        return false;
    }

    // Ascending sequences: each child appends a larger id.
    void subset_extend(Player next)
    {
        if (found_ || out_of_nodes_) {
            return;
        }
        if (members_.size() >= 2) {
            if (!count_node()) {
                return;
            }
            if (current_blocks()) {
                found_ = make_certificate(view_, utils_, members_, kind_);
                return;
            }
        }
        auto pool = [&](Player i) {
            int c = 0;
            for (Player j : game_.neighbors(i)) {
                c += (j >= next && eligible_[j]) ? 1 : 0;
            }
            return c;
        };
        bool any = false;
        for (Player w = next; w < n_ && !any; ++w) {
            any = eligible_[w] != 0;
        }
        if (!may_extend(any, pool)) {
            return;
        }
        for (Player w = next; w < n_; ++w) {
            if (!eligible_[w]) {
                continue;
            }
            add(w);
            subset_extend(w + 1);
            remove(w);
            if (found_ || out_of_nodes_) {
                return;
            }
        }
    }

    // Connected sets with smallest member seed_, enumerated once each: a
    // child takes ext[k] and inherits ext[k+1..] plus the new vertex's
    // neighbours that are not yet adjacent to the set.
    void connected_extend(std::span<const Player> ext)
    {
        if (found_ || out_of_nodes_) {
            return;
        }
        if (members_.size() >= 2) {
            if (!count_node()) {
                return;
            }
            if (current_blocks()) {
                found_ = make_certificate(view_, utils_, members_, kind_);
                return;
            }
        }
        for (Player w : ext) {
            in_ext_[w] = 1;
        }
        auto pool = [&](Player i) {
            int c = 0;
            for (Player j : game_.neighbors(i)) {
                c += in_ext_[j];
            }
            return c;
        };
        const bool go = may_extend(!ext.empty(), pool);
        for (Player w : ext) {
            in_ext_[w] = 0;
        }
        if (!go) {
            return;
        }
        std::vector<Player> child;
        for (std::size_t k = 0; k < ext.size(); ++k) {
            const Player w = ext[k];
            child.assign(ext.begin() + static_cast<std::ptrdiff_t>(k) + 1, ext.end());
            for (Player x : game_.neighbors(w)) {
                if (x > seed_ && eligible_[x] && !in_set_[x] && in_nbhd_[x] == 0) {
                    child.push_back(x);
                }
            }
            std::sort(child.begin() + static_cast<std::ptrdiff_t>(ext.size() - k - 1), child.end());
            std::inplace_merge(child.begin(), child.begin() + static_cast<std::ptrdiff_t>(ext.size() - k - 1),
                               child.end());
            add(w);
            connected_extend(child);
            remove(w);
            if (found_ || out_of_nodes_) {
                return;
            }
        }
    }

    const HedonicView& view_;
    const Game& game_;
    const std::vector<Rational>& utils_;
    BlockKind kind_;
    SearchBudget budget_;
    int n_;
    bool prunable_;

    std::vector<char> in_set_;
    std::vector<int> in_nbhd_;
    std::vector<char> in_ext_;
    std::vector<int> deg_;
    std::vector<Rational> sum_;
    std::vector<char> eligible_;
    std::vector<int> size_cap_;
    int eligible_count_ = 0;

    std::vector<Player> members_;
    Player seed_ = 0;
    std::optional<BlockingCertificate> found_;
    std::uint64_t nodes_ = 0;
    bool complete_ = true;
    bool out_of_nodes_ = false;
};

inline SearchResult find_blocking_view(const HedonicView& view, const Partition& partition, BlockKind kind,
                                       const SearchBudget& budget)
{
    const auto utils = current_utilities(view, partition);
    const int n = view.size();
    SearchResult result;

    const bool parallel = budget.threads > 1 && budget.max_nodes == SearchBudget::unlimited_nodes && n > 1;
    if (!parallel) {
        BlockingSearch search(view, utils, kind, budget);
        for (Player seed = 0; seed < n; ++seed) {
            if (auto cert = search.run_seed(seed)) {
                result.status = SearchStatus::found;
                result.certificate = std::move(cert);
                result.nodes = search.nodes();
                return result;
            }
            if (search.out_of_nodes()) {
                break;
            }
        }
        result.nodes = search.nodes();
        result.status = search.complete() ? SearchStatus::none_found : SearchStatus::budget_exhausted;
        return result;
    }

    // Seeds are claimed in ascending order; the lowest seed that yields a
    // certificate wins, which is what the sequential scan would return.
    std::atomic<int> next_seed{0};
    std::atomic<int> best_seed{n};
    std::atomic<bool> complete{true};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex mu;
    std::vector<std::optional<BlockingCertificate>> per_seed(n);
    BlockingSearch probe(view, utils, kind, budget);  // validates the budget before spawning
    auto worker = [&] {
        BlockingSearch search(view, utils, kind, budget);
        for (;;) {
            const int seed = next_seed.fetch_add(1);
            if (seed >= n || seed > best_seed.load()) {
                break;
            }
            auto cert = search.run_seed(seed);
            if (cert) {
                std::lock_guard lock(mu);
                per_seed[seed] = std::move(cert);
                if (seed < best_seed.load()) {
                    best_seed.store(seed);
                }
            }
        }
        nodes += search.nodes();
        if (!search.complete()) {
            complete = false;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < budget.threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
    result.nodes = nodes.load();
    if (best_seed.load() < n) {
        result.status = SearchStatus::found;
        result.certificate = std::move(per_seed[best_seed.load()]);
    } else {
        result.status = complete.load() ? SearchStatus::none_found : SearchStatus::budget_exhausted;
    }
    return result;
}

inline StabilityReport to_report(SearchResult r)
{
    StabilityReport rep;
    rep.nodes = r.nodes;
    switch (r.status) {
    case SearchStatus::found:
        rep.verdict = Verdict::unstable;
        rep.certificate = std::move(r.certificate);
        break;
    case SearchStatus::none_found:
        rep.verdict = Verdict::stable;
        break;
    case SearchStatus::budget_exhausted:
        rep.verdict = Verdict::unknown;
        break;
    }
    return rep;
}

}  // namespace detail

// G is Game or SupportedGame.
template <typename G>
SearchResult find_blocking(const G& game, const Partition& partition, BlockKind kind,
                           const SearchBudget& budget = {})
{
    return detail::find_blocking_view(detail::HedonicView(game), partition, kind, budget);
}

template <typename G>
StabilityReport is_core_stable(const G& game, const Partition& partition, const SearchBudget& budget = {})
{
    return detail::to_report(find_blocking(game, partition, BlockKind::strong, budget));
}

template <typename G>
StabilityReport is_strict_core_stable(const G& game, const Partition& partition, const SearchBudget& budget = {})
{
    return detail::to_report(find_blocking(game, partition, BlockKind::weak, budget));
}

// Rebuilds the certificate for `coalition` from scratch, or nullopt if it does not block.
template <typename G>
std::optional<BlockingCertificate> check_certificate(const G& game, const Partition& partition,
                                                     const Coalition& coalition, BlockKind kind)
{
    const detail::HedonicView view(game);
    const auto utils = detail::current_utilities(view, partition);
    return detail::make_certificate(view, utils, coalition, kind);
}

template <typename G>
bool verify_certificate(const G& game, const Partition& partition, const BlockingCertificate& cert)
{
    auto fresh = check_certificate(game, partition, cert.coalition, cert.kind);
    if (!fresh || fresh->deltas.size() != cert.deltas.size()) {
        return false;
    }
    for (std::size_t k = 0; k < cert.deltas.size(); ++k) {
        const auto& a = fresh->deltas[k];
        const auto& b = cert.deltas[k];
        if (a.player != b.player || a.before != b.before || a.after != b.after) {
            return false;
        }
    }
    return true;
}

struct CoreSearchOutcome {
    bool nonempty = false;
    std::optional<Partition> witness;
    std::uint64_t partitions_examined = 0;
};

// Exact decision by enumerating every partition; the first core-stable one
// in restricted-growth order is returned.
template <typename G>
CoreSearchOutcome core_nonempty_exhaustive(const G& game, int bound = default_enumeration_bound,
                                           BlockKind kind = BlockKind::strong)
{
    const detail::HedonicView view(game);
    CoreSearchOutcome out;
    for_each_partition(
        view.size(),
        [&](const Partition& p) {
            ++out.partitions_examined;
            auto r = detail::find_blocking_view(view, p, kind, SearchBudget::exhaustive());
            if (r.status == SearchStatus::none_found) {
                out.nonempty = true;
                out.witness = p;
                return false;
            }
            return true;
        },
        bound);
    return out;
}

// Replaces the members of `coalition` in their old coalitions; each residue stays together.
inline Partition apply_deviation(const Partition& partition, const Coalition& coalition)
{
    std::vector<char> moving(partition.player_count(), 0);
    for (Player p : coalition) {
        moving[p] = 1;
    }
    std::vector<Coalition> out{coalition};
    for (const auto& c : partition.coalitions()) {
        Coalition rest;
        for (Player p : c) {
            if (!moving[p]) {
                rest.push_back(p);
            }
        }
        if (!rest.empty()) {
            out.push_back(std::move(rest));
        }
    }
    return Partition(partition.player_count(), std::move(out));
}

// First strongly blocking coalition found from each seed, in seed order.
template <typename G>
std::vector<BlockingCertificate> collect_blocking(const G& game, const Partition& partition, BlockKind kind,
                                                  const SearchBudget& budget, bool* complete = nullptr)
{
    const detail::HedonicView view(game);
    const auto utils = detail::current_utilities(view, partition);
    detail::BlockingSearch search(view, utils, kind, budget);
    std::vector<BlockingCertificate> out;
    for (Player seed = 0; seed < view.size(); ++seed) {
        if (auto cert = search.run_seed(seed)) {
            out.push_back(std::move(*cert));
        }
        if (search.out_of_nodes()) {
            break;
        }
    }
    if (complete) {
        *complete = search.complete();
    }
    return out;
}

// Greatest minimum gain, then fewer members, then lexicographically smaller.
inline const BlockingCertificate& select_deviation(const std::vector<BlockingCertificate>& certs)
{
    const BlockingCertificate* best = &certs.front();
    Rational best_gain = best->min_delta();
    for (const auto& c : certs) {
        const Rational gain = c.min_delta();
        if (gain > best_gain ||
            (gain == best_gain && (c.coalition.size() < best->coalition.size() ||
                                   (c.coalition.size() == best->coalition.size() && c.coalition < best->coalition)))) {
            best = &c;
            best_gain = gain;
        }
    }
    return *best;
}

enum class WalkOutcome { converged, cycled, exhausted, unknown };

inline const char* to_string(WalkOutcome w)
{
    switch (w) {
    case WalkOutcome::converged:
        return "converged";
    case WalkOutcome::cycled:
        return "cycled";
    case WalkOutcome::exhausted:
        return "exhausted";
    case WalkOutcome::unknown:
        return "unknown";
    }
    return "?";
}

struct WalkStep {
    Coalition formed;
    Rational min_gain;
};

struct WalkResult {
    WalkOutcome outcome = WalkOutcome::exhausted;
    Partition final_partition;
    std::size_t steps = 0;
    std::vector<WalkStep> trace;
    // For cycled walks, the step index at which the repeated partition first appeared.
    std::size_t cycle_start = 0;
};

// Myopic coalitional deviations until no strongly blocking coalition is
// found. The walk is deterministic, so a repeated partition proves that it
// would cycle forever.
template <typename G>
WalkResult deviation_walk(const G& game, const Partition& start, std::size_t max_steps,
                          const SearchBudget& budget = {})
{
    WalkResult res;
    Partition current = start;
    std::map<std::vector<Coalition>, std::size_t> seen;
    seen.emplace(current.coalitions(), 0);
    for (std::size_t step = 0;; ++step) {
        bool complete = true;
        auto certs = collect_blocking(game, current, BlockKind::strong, budget, &complete);
        if (certs.empty()) {
            res.outcome = complete ? WalkOutcome::converged : WalkOutcome::unknown;
            res.final_partition = current;
            res.steps = step;
            return res;
        }
        if (step == max_steps) {
            res.outcome = WalkOutcome::exhausted;
            res.final_partition = current;
            res.steps = step;
            return res;
        }
        const auto& pick = select_deviation(certs);
        res.trace.push_back({pick.coalition, pick.min_delta()});
        current = apply_deviation(current, pick.coalition);
        auto [it, inserted] = seen.emplace(current.coalitions(), step + 1);
        if (!inserted) {
            res.outcome = WalkOutcome::cycled;
            res.final_partition = current;
            res.steps = step + 1;
            res.cycle_start = it->second;
            return res;
        }
    }
}

}  // namespace fhg
