#include "printing.hpp"

#include <random>

#include "fhg/instances.hpp"
#include "fhg/io.hpp"
#include "oracle.hpp"

using namespace fhg;

namespace {

int error_line(const std::string& text)
{
    try {
        parse_game(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("parse a simple undirected game")
{
    const auto f = parse_game("# triangle plus a pendant\nfhg 4 undirected simple\n1 2\n2 3\n3 1\n3 4  # tail\n");
    CHECK_FALSE(f.directed);
    CHECK_FALSE(f.weighted);
    CHECK(f.game.size() == 4);
    CHECK(f.game.adjacent(0, 1));
    CHECK(f.game.adjacent(3, 2));
    CHECK_FALSE(f.game.adjacent(0, 3));
    CHECK(f.subsidies.empty());
}

TEST_CASE("parse a weighted directed game with a default and subsidies")
{
    const auto f = parse_game("fhg 3 directed weighted\ndefault -10\nsubsidy 2 4\n1 2 2\n2 1 1/2\n3 1 0.25\n");
    CHECK(f.directed);
    CHECK(f.game.value(0, 1) == Rational(2));
    CHECK(f.game.value(1, 0) == Rational(1, 2));
    CHECK(f.game.value(2, 0) == Rational(1, 4));
    CHECK(f.game.value(0, 2) == Rational(-10));
    CHECK(f.game.value(1, 1) == Rational(0));
    CHECK(f.subsidies.at(1) == 4);
    CHECK(f.supported().subsidies.size() == 1);
}

TEST_CASE("parse errors carry the line number")
{
    CHECK(error_line("fhg 3 undirected simple\n1 2\n1 2\n") == 3);
    CHECK(error_line("fhg 3 undirected simple\n1 2\n2 1\n") == 3);
    CHECK(error_line("fhg 3 directed simple\n1 2\n2 1\n") == -1);
    CHECK(error_line("fhg 3 undirected simple\n\n1 4\n") == 3);
    CHECK(error_line("fhg 3 undirected simple\n1 1\n") == 2);
    CHECK(error_line("fhg 3 undirected simple\n1 2 5\n") == 2);
    CHECK(error_line("fhg 3 undirected weighted\n1 2\n") == 2);
    CHECK(error_line("fhg 3 undirected weighted\n1 2 x\n") == 2);
    CHECK(error_line("fhg 3 undirected simple\ndefault 1\n") == 2);
    CHECK(error_line("fhg 3 undirected weighted\n1 2 1\ndefault 1\n") == 3);
    CHECK(error_line("fhg 3 undirected simple\nsubsidy 1 1\n") == 2);
    CHECK(error_line("fhg 3 undirected simple\nsubsidy 1 3\nsubsidy 1 4\n") == 3);
    CHECK(error_line("# c\nfhg 0 undirected simple\n") == 2);
    CHECK(error_line("fhg 3 sideways simple\n") == 1);
    CHECK(error_line("fhg 3 undirected fancy\n") == 1);
    CHECK(error_line("fhg 30000 undirected simple\n") == 1);
    CHECK_THROWS_WITH(parse_game("fhg 3 undirected simple\n1 2\n1 2\n"),
                      Catch::Matchers::StartsWith("line 3: duplicate edge"));
    CHECK_THROWS_AS(parse_game("  \n# only comments\n"), ParseError);
}

TEST_CASE("headerless edge lists")
{
    const auto f = parse_game("1 2\n2 3\n# comment\n3 1\n");
    CHECK(f.game.size() == 3);
    CHECK(f.game.is_simple_symmetric());
    CHECK(f.game.edges().size() == 3);

    const auto w = parse_game("1 2 3\n2 4 -1\n");
    CHECK(w.weighted);
    CHECK(w.game.size() == 4);
    CHECK(w.game.value(1, 3) == Rational(-1));
    CHECK(w.game.value(3, 1) == Rational(-1));

    CHECK_THROWS_AS(parse_game("1 2\n2 3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_game("1 1\n"), ParseError);
}

TEST_CASE("games round-trip through text")
{
    for (const auto& name : gadget_names()) {
        const Game g = gadget(name).game;
        CHECK(parse_game(serialize_game(g)).game == g);
    }
    const SupportedGame sg(gadgets::cycle(5), {{0, 4}, {3, 2}});
    const auto back = parse_game(serialize_game(sg));
    CHECK(back.game == sg.game);
    CHECK(back.subsidies == sg.subsidies);

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> w(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<Rational> vals(n * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) {
                    vals[i * n + j] = Rational(w(rng), 1 + static_cast<int>(rng() % 3));
                }
            }
        }
        const Game g(n, vals);
        CHECK(parse_game(serialize_game(g)).game == g);
    }
}

TEST_CASE("coalitions and partitions")
{
    CHECK(parse_coalition("3 1, 2", 4) == Coalition{0, 1, 2});
    CHECK(format_coalition({0, 1, 2}) == "1 2 3");
    CHECK_THROWS_AS(parse_coalition("1 1", 4), ParseError);
    CHECK_THROWS_AS(parse_coalition("", 4), ParseError);
    CHECK_THROWS_AS(parse_coalition("5", 4), ParseError);

    const Partition p = parse_partition("1 2 3\n# second\n4,5\n6\n", 6);
    CHECK(p == Partition(6, {{0, 1, 2}, {3, 4}, {5}}));
    CHECK_THROWS_WITH(parse_partition("1 2\n2 3\n", 3), Catch::Matchers::ContainsSubstring("already listed on line 1"));
    CHECK_THROWS_WITH(parse_partition("1 2\n", 3), Catch::Matchers::ContainsSubstring("player 3 is missing"));

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Partition q = Partition::from_labels(oracle::random_labels(n, rng));
        CHECK(parse_partition(serialize_partition(q), n) == q);
    }
}

TEST_CASE("report lines")
{
    Report r;
    r.add("verdict", "unstable");
    r.add("nodes", 12);
    const auto cert = check_certificate(gadgets::cycle(5), Partition::singletons(5), Coalition{0, 1}, BlockKind::strong);
    REQUIRE(cert);
    add_certificate(r, *cert);
    const std::string s = r.str();
    CHECK(s.find("verdict: unstable\nnodes: 12\n") == 0);
    CHECK(s.find("certificate: 1 2") != std::string::npos);
    CHECK(s.find("certificate.kind: strong") != std::string::npos);
    CHECK(s.find("delta.1: 0 -> 1/2") != std::string::npos);
}
