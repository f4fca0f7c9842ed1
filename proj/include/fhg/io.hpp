#pragma once

// Text formats. Player labels are 1-based on disk and 0-based in memory.
//
// Game file:
//   # comment
//   fhg <n> <directed|undirected> <simple|weighted>
//   default <w>          weighted only; value of every unlisted pair (else 0)
//   <u> <v> [w]          edge (or arc u -> v, meaning v_u(v) = w)
//   subsidy <p> <l>      p is paid (l-1)/l when alone
// Without a header line the file is read as a plain undirected edge list.
//
// Partition file: one coalition per line, labels separated by spaces.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fhg/game.hpp"
#include "fhg/stability.hpp"

namespace fhg {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

struct GameFile {
    Game game;
    std::map<Player, int> subsidies;
    bool directed = false;
    bool weighted = false;

    SupportedGame supported() const { return SupportedGame(game, subsidies); }
};

namespace detail {

inline std::vector<std::string> tokens(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string t;
    while (in >> t) {
        out.push_back(t);
    }
    return out;
}

inline std::string decomma(std::string_view text)
{
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    return s;
}

inline std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        out.push_back(std::move(line));
        start = end + 1;
    }
    return out;
}

inline long parse_long(const std::string& s, int line, const char* what)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("malformed ") + what + " '" + s + "'");
    }
    if (used != s.size()) {
        throw ParseError(line, std::string("malformed ") + what + " '" + s + "'");
    }
    return v;
}

inline Player parse_label(const std::string& s, int n, int line)
{
    const long v = parse_long(s, line, "player label");
    if (v < 1 || (n > 0 && v > n)) {
        throw ParseError(line, "player " + s + " outside 1.." + std::to_string(n));
    }
    return static_cast<Player>(v - 1);
}

inline Rational parse_weight(const std::string& s, int line)
{
    try {
        return Rational::parse(s);
    } catch (const std::exception& e) {
        throw ParseError(line, e.what());
    }
}

struct RawEdge {
    Player u;
    Player v;
    std::optional<Rational> w;
    int line;
};

inline GameFile edge_list_fallback(const std::vector<std::string>& lines)
{
    std::vector<RawEdge> raw;
    int n = 0;
    bool weighted = false;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const int ln = static_cast<int>(k + 1);
        auto t = tokens(lines[k]);
        if (t.empty()) {
            continue;
        }
        if (t.size() != 2 && t.size() != 3) {
            throw ParseError(ln, "expected 'u v [w]'");
        }
        RawEdge e{parse_label(t[0], 0, ln), parse_label(t[1], 0, ln), std::nullopt, ln};
        if (t.size() == 3) {
            e.w = parse_weight(t[2], ln);
            weighted = true;
        }
        n = std::max({n, e.u + 1, e.v + 1});
        raw.push_back(e);
    }
    if (n == 0) {
        throw ParseError(0, "empty game file");
    }
    std::vector<Rational> vals(static_cast<std::size_t>(n) * n);
    std::set<std::pair<Player, Player>> seen;
    for (const auto& e : raw) {
        if (e.u == e.v) {
            throw ParseError(e.line, "self-loop on player " + std::to_string(e.u + 1));
        }
        if (weighted && !e.w) {
            throw ParseError(e.line, "missing weight in a weighted edge list");
        }
        if (!seen.insert(std::minmax(e.u, e.v)).second) {
            throw ParseError(e.line, "duplicate edge");
        }
        const Rational w = e.w.value_or(Rational(1));
        vals[static_cast<std::size_t>(e.u) * n + e.v] = w;
        vals[static_cast<std::size_t>(e.v) * n + e.u] = w;
    }
    return GameFile{Game(n, std::move(vals)), {}, false, weighted};
}

}  // namespace detail

inline GameFile parse_game(std::string_view text)
{
    const auto lines = detail::split_lines(text);
    std::size_t k = 0;
    std::vector<std::string> head;
    for (; k < lines.size(); ++k) {
        head = detail::tokens(lines[k]);
        if (!head.empty()) {
            break;
        }
    }
    if (head.empty()) {
        throw ParseError(0, "empty game file");
    }
    if (head[0] != "fhg") {
        return detail::edge_list_fallback(lines);
    }
    const int hl = static_cast<int>(k + 1);
    if (head.size() != 4) {
        throw ParseError(hl, "header must be 'fhg <n> <directed|undirected> <simple|weighted>'");
    }
    const long n = detail::parse_long(head[1], hl, "player count");
    if (n <= 0) {
        throw ParseError(hl, "player count must be positive");
    }
    if (n > 20000) {
        throw ParseError(hl, "player count " + head[1] + " is too large");
    }
    if (head[2] != "directed" && head[2] != "undirected") {
        throw ParseError(hl, "expected 'directed' or 'undirected', got '" + head[2] + "'");
    }
    if (head[3] != "simple" && head[3] != "weighted") {
        throw ParseError(hl, "expected 'simple' or 'weighted', got '" + head[3] + "'");
    }
    const bool directed = head[2] == "directed";
    const bool weighted = head[3] == "weighted";
    const int ni = static_cast<int>(n);

    Rational fill = 0;
    bool saw_default = false;
    bool saw_edge = false;
    std::vector<detail::RawEdge> raw;
    std::map<Player, int> subsidies;
    for (++k; k < lines.size(); ++k) {
        const int ln = static_cast<int>(k + 1);
        auto t = detail::tokens(detail::decomma(lines[k]));
        if (t.empty()) {
            continue;
        }
        if (t[0] == "default") {
            if (!weighted) {
                throw ParseError(ln, "'default' is only allowed in weighted games");
            }
            if (t.size() != 2) {
                throw ParseError(ln, "expected 'default <w>'");
            }
            if (saw_default || saw_edge) {
                throw ParseError(ln, "'default' must appear once, before the edges");
            }
            fill = detail::parse_weight(t[1], ln);
            saw_default = true;
            continue;
        }
        if (t[0] == "subsidy") {
            if (t.size() != 3) {
                throw ParseError(ln, "expected 'subsidy <player> <l>'");
            }
            const Player p = detail::parse_label(t[1], ni, ln);
            const long l = detail::parse_long(t[2], ln, "subsidy");
            if (l < 2) {
                throw ParseError(ln, "subsidy l must be at least 2");
            }
            if (!subsidies.emplace(p, static_cast<int>(l)).second) {
                throw ParseError(ln, "duplicate subsidy for player " + t[1]);
            }
            continue;
        }
        if (t.size() != 2 && t.size() != 3) {
            throw ParseError(ln, "expected 'u v" + std::string(weighted ? " w'" : "'"));
        }
        detail::RawEdge e{detail::parse_label(t[0], ni, ln), detail::parse_label(t[1], ni, ln), std::nullopt, ln};
        if (t.size() == 3) {
            if (!weighted) {
                throw ParseError(ln, "weight given in a simple game");
            }
            e.w = detail::parse_weight(t[2], ln);
        } else if (weighted) {
            throw ParseError(ln, "missing weight in a weighted game");
        }
        if (e.u == e.v) {
            throw ParseError(ln, "self-loop on player " + t[0]);
        }
        saw_edge = true;
        raw.push_back(e);
    }

    std::vector<Rational> vals(static_cast<std::size_t>(n) * n, fill);
    for (int i = 0; i < ni; ++i) {
        vals[static_cast<std::size_t>(i) * n + i] = 0;
    }
    std::set<std::pair<Player, Player>> seen;
    for (const auto& e : raw) {
        const auto key = directed ? std::make_pair(e.u, e.v) : std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (!seen.insert(key).second) {
            throw ParseError(e.line, "duplicate edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1));
        }
        const Rational w = e.w.value_or(Rational(1));
        vals[static_cast<std::size_t>(e.u) * n + e.v] = w;
        if (!directed) {
            vals[static_cast<std::size_t>(e.v) * n + e.u] = w;
        }
    }
    return GameFile{Game(ni, std::move(vals)), std::move(subsidies), directed, weighted};
}

// The most frequent off-diagonal value becomes the default; ties go to the smaller value.
inline std::string serialize_game(const Game& game, const std::map<Player, int>& subsidies = {})
{
    const int n = game.size();
    const bool directed = !game.is_symmetric();
    const bool weighted = !game.is_simple();
    Rational fill = 0;
    if (weighted) {
        std::map<Rational, long> freq;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) {
                    ++freq[game.value(i, j)];
                }
            }
        }
        long best = -1;
        for (const auto& [v, c] : freq) {
            if (c > best) {
                best = c;
                fill = v;
            }
        }
    }
    std::ostringstream out;
    out << "fhg " << n << (directed ? " directed" : " undirected") << (weighted ? " weighted" : " simple") << "\n";
    if (!fill.is_zero()) {
        out << "default " << fill.str() << "\n";
    }
    for (int i = 0; i < n; ++i) {
        for (int j = directed ? 0 : i + 1; j < n; ++j) {
            if (i == j || game.value(i, j) == fill) {
                continue;
            }
            out << i + 1 << " " << j + 1;
            if (weighted) {
                out << " " << game.value(i, j).str();
            }
            out << "\n";
        }
    }
    for (const auto& [p, l] : subsidies) {
        out << "subsidy " << p + 1 << " " << l << "\n";
    }
    return out.str();
}

inline std::string serialize_game(const SupportedGame& sg) { return serialize_game(sg.game, sg.subsidies); }

inline std::string format_coalition(const Coalition& c)
{
    std::string s;
    for (Player p : c) {
        s += (s.empty() ? "" : " ") + std::to_string(p + 1);
    }
    return s;
}

// Space- or comma-separated labels, e.g. "1 2 3" or "1,2,3".
inline Coalition parse_coalition(std::string_view text, int n)
{
    Coalition out;
    for (const auto& t : detail::tokens(detail::decomma(text))) {
        out.push_back(detail::parse_label(t, n, 0));
    }
    if (out.empty()) {
        throw ParseError(0, "empty coalition");
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw ParseError(0, "coalition repeats a player");
    }
    return out;
}

inline std::string serialize_partition(const Partition& p)
{
    std::string out;
    for (const auto& c : p.coalitions()) {
        out += format_coalition(c) + "\n";
    }
    return out;
}

inline Partition parse_partition(std::string_view text, int n)
{
    const auto lines = detail::split_lines(text);
    std::vector<Coalition> cs;
    std::vector<int> line_of(n, 0);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const int ln = static_cast<int>(k + 1);
        auto t = detail::tokens(detail::decomma(lines[k]));
        if (t.empty()) {
            continue;
        }
        Coalition c;
        for (const auto& s : t) {
            const Player p = detail::parse_label(s, n, ln);
            if (line_of[p] != 0) {
                throw ParseError(ln, "player " + s + " already listed on line " + std::to_string(line_of[p]));
            }
            line_of[p] = ln;
            c.push_back(p);
        }
        cs.push_back(std::move(c));
    }
    for (Player p = 0; p < n; ++p) {
        if (line_of[p] == 0) {
            throw ParseError(0, "player " + std::to_string(p + 1) + " is missing from the partition");
        }
    }
    return Partition(n, std::move(cs));
}

// Ordered key: value lines.
class Report {
public:
    Report& add(std::string key, std::string value)
    {
        rows_.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    template <typename T>
    Report& add(std::string key, const T& value)
    {
        std::ostringstream s;
        s << value;
        return add(std::move(key), s.str());
    }

    std::string str() const
    {
        std::string out;
        for (const auto& [k, v] : rows_) {
            out += k + ": " + v + "\n";
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

inline void add_certificate(Report& r, const BlockingCertificate& cert)
{
    r.add("certificate", format_coalition(cert.coalition));
    r.add("certificate.kind", to_string(cert.kind));
    for (const auto& d : cert.deltas) {
        r.add("delta." + std::to_string(d.player + 1), d.before.str() + " -> " + d.after.str());
    }
}

}  // namespace fhg
