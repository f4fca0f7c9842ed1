#include "printing.hpp"

#include "fhg/instances.hpp"
#include "fhg/stability.hpp"
#include "fhg/star_packing.hpp"
#include "oracle.hpp"

using namespace fhg;

namespace {

ObjectiveVector vec(std::vector<Rational> v) { return make_objective(std::move(v)); }

}  // namespace

TEST_CASE("leximin comparison")
{
    const Rational h(1, 2), t(1, 3), q(1, 4);
    CHECK(leximin_compare(vec({h, h}), vec({t, Rational(2, 3)})) == LeximinOrder::greater);
    CHECK(leximin_compare(vec({q, Rational(1)}), vec({t, t})) == LeximinOrder::less);
    CHECK(leximin_compare(vec({t, h}), vec({h, t})) == LeximinOrder::equal);
    CHECK(leximin_compare(vec({t, t, Rational(2, 3)}), vec({t, t, h})) == LeximinOrder::greater);
    CHECK_THROWS(leximin_compare(vec({h}), vec({h, h})));
    CHECK(std::string(to_string(LeximinOrder::less)) == "less");
}

TEST_CASE("objective and potential of small packings")
{
    const StarPacking none(3, {});
    CHECK(phi_potential(none, 3) == 0);
    CHECK(objective(none).values == std::vector<Rational>(3, Rational(0)));

    const StarPacking pair(2, {{{0, 1}, {}}});
    CHECK(phi_potential(pair, 2) == 4);
    CHECK(objective(pair).values == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    // Center counts n, each leaf n - |star| = 0.
    const StarPacking three(3, {{{1}, {0, 2}}});
    CHECK(phi_potential(three, 3) == 3);
    CHECK(objective(three).values == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(2, 3)});
}

TEST_CASE("packing validation")
{
    const Game g = gadgets::star_packing_11();
    CHECK_NOTHROW(gadgets::star_packing_11_start().validate(g));
    CHECK_THROWS(StarPacking(11, {{{0}, {3}}}).validate(g));
    CHECK_THROWS(StarPacking(11, {{{0}, {3, 5}}}).validate(g));
    CHECK_THROWS(StarPacking(11, {{{0, 3}, {}}, {{0, 4}, {}}}).validate(g));
    CHECK_THROWS(StarPacking(11, {{{0, 5}, {}}}).validate(g));
    CHECK(gadgets::star_packing_11_start().covers_non_isolated(g));
    CHECK_FALSE(StarPacking(11, {{{0, 3}, {}}}).covers_non_isolated(g));
}

TEST_CASE("first move on the eleven-vertex example pairs l3 with l8")
{
    const Game g = gadgets::star_packing_11();
    REQUIRE(girth(g) == 5);
    const auto run = improve_star_packing(g, gadgets::star_packing_11_start());
    REQUIRE_FALSE(run.moves.empty());
    const StarMove& m = run.moves.front();
    CHECK(m.kind == StarMoveKind::pair_leaves);
    CHECK(m.leaf == 5);
    CHECK(m.other == 10);
    CHECK(m.phi_before == 91);
    CHECK(m.phi_after == 103);
    CHECK(leximin_compare(m.after, m.before) == LeximinOrder::greater);

    run.packing.validate(g);
    CHECK(run.packing.covers_non_isolated(g));
    CHECK(oracle::stable(oracle::from(g), oracle::labels_of(run.partition())));
}

TEST_CASE("a star with three leaves drops to a pair")
{
    Star s{{0}, {1, 2}};
    detail::drop_leaf(s, 2);
    CHECK(s.centers == std::vector<Player>{0, 1});
    CHECK(s.leaves.empty());
}

TEST_CASE("Petersen graph packing is core stable")
{
    const Game g = gadgets::petersen();
    const auto run = solve_star_packing(g);
    run.packing.validate(g);
    CHECK(run.packing.covers_non_isolated(g));
    CHECK(oracle::stable(oracle::from(g), oracle::labels_of(run.partition())));
    CHECK(is_core_stable(g, run.partition()).verdict == Verdict::stable);
}

TEST_CASE("short girth needs force")
{
    const Game c4 = gadgets::cycle(4);
    CHECK_THROWS_AS(solve_star_packing(c4), PreconditionError);
    const auto run = solve_star_packing(c4, {.force = true});
    run.packing.validate(c4);
    CHECK_THROWS_AS(solve_star_packing(gadgets::digraph_5()), PreconditionError);
}

TEST_CASE("isolated vertices stay unpacked")
{
    const Game g = Game::from_edges(4, {{0, 1}});
    const auto run = solve_star_packing(g);
    CHECK(run.packing.unpacked() == std::vector<Player>{2, 3});
    CHECK(run.partition() == Partition(4, {{0, 1}, {2}, {3}}));
}

TEST_CASE("a leaf of a four-vertex star joining a pair leaves the potential level")
{
    const Game g = Game::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {1, 4}});
    const StarPacking start(6, {{{0}, {1, 2, 3}}, {{4, 5}, {}}});
    const auto run = improve_star_packing(g, start);
    REQUIRE(run.moves.size() == 1);
    const StarMove& m = run.moves.front();
    CHECK(m.kind == StarMoveKind::move_leaf);
    CHECK(m.leaf == 1);
    CHECK(m.other == 4);
    CHECK(leximin_compare(m.after, m.before) == LeximinOrder::greater);
    CHECK(m.phi_before == 24);
    CHECK(m.phi_after == 24);
    CHECK(run.packing == StarPacking(6, {{{0}, {2, 3}}, {{4}, {1, 5}}}));
}

TEST_CASE("potential of a star with three leaves")
{
    const StarPacking s(4, {{{0}, {1, 2, 3}}});
    CHECK(phi_potential(s, 4) == 4);
}
