#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zrk/builtins.hpp"
#include "zrk/conditions.hpp"
#include "zrk/errors.hpp"

using namespace zrk;

namespace {

Cell c(int i, int j) { return Cell{i - 1, j - 1}; }

const ConditionOptions kLiteral{Condition2Reading::Literal, {}};
const ConditionOptions kOccupancy{Condition2Reading::Occupancy, {}};

std::vector<Cell> k4_incidence() { return builtin_graph(BuiltinId::G64).one_edges(); }

}  // namespace

TEST_CASE("C4-freeness") {
    CHECK(is_c4_free(5, 3, builtin_graph(BuiltinId::G53).one_edges()).passed);
    CHECK(is_c4_free(6, 4, k4_incidence()).passed);
    CHECK(k4_incidence().size() == 12);

    auto rep = is_c4_free(2, 2, {c(1, 1), c(1, 2), c(2, 1), c(2, 2)});
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.witness);
    CHECK(rep.witness->rows == std::vector<int>{0, 1});
    CHECK(rep.witness->cols == std::vector<int>{0, 1});
    AugmentedGraph g(2, 2, {c(1, 1), c(1, 2), c(2, 1), c(2, 2)});
    CHECK(replay_witness(g, rep));
}

TEST_CASE("2-edge restriction") {
    SUBCASE("5x3 construction: one opposite cell occupied") {
        auto g = builtin_graph(BuiltinId::G53);
        for (const auto& o : {kLiteral, kOccupancy}) CHECK(check_2edge(g, Edge2(c(1, 3), c(4, 2)), o).passed);
    }
    SUBCASE("6x4 construction, rows 12 and 13") {
        auto g = builtin_graph(BuiltinId::G64);
        // (12,3;13,4) is (1,3;2,4); its opposite (12,4) is a half of the second 3-edge.
        auto rep = check_2edge(g, Edge2(c(1, 3), c(2, 4)), kLiteral);
        CHECK(rep.passed);
        // (13,3) is an endpoint incidence, so the occupancy reading counts both cells.
        CHECK_FALSE(check_2edge(g, Edge2(c(1, 3), c(2, 4)), kOccupancy).passed);
    }
    SUBCASE("both opposite cells in E1") {
        AugmentedGraph g(2, 2, {c(1, 2), c(2, 1)}, {Edge2(c(1, 1), c(2, 2))});
        auto rep = check_2edge(g, Edge2(c(1, 1), c(2, 2)));
        CHECK_FALSE(rep.passed);
        CHECK(replay_witness(g, rep));
    }
    SUBCASE("opposite cells are halves of one 3-edge") {
        AugmentedGraph g(3, 3, {}, {Edge2(c(1, 1), c(2, 2))}, {Edge3(c(1, 2), c(2, 1), c(3, 3))});
        auto rep = check_2edge(g, Edge2(c(1, 1), c(2, 2)));
        CHECK_FALSE(rep.passed);
        CHECK(replay_witness(g, rep));
    }
    SUBCASE("readings differ on 3-edge halves") {
        AugmentedGraph g(3, 3, {c(1, 2)}, {Edge2(c(1, 1), c(2, 2))}, {Edge3(c(2, 1), c(1, 3), c(3, 2))});
        CHECK(check_2edge(g, Edge2(c(1, 1), c(2, 2)), kLiteral).passed);
        auto rep = check_2edge(g, Edge2(c(1, 1), c(2, 2)), kOccupancy);
        CHECK_FALSE(rep.passed);
        CHECK(replay_witness(g, rep, kOccupancy));
        CHECK_FALSE(replay_witness(g, rep, kLiteral));
    }
    SUBCASE("degenerate 2-edges pass vacuously") {
        AugmentedGraph g(2, 2, {c(2, 1), c(2, 2)}, {Edge2(c(1, 1), c(1, 2))});
        auto rep = check_2edge(g, Edge2(c(1, 1), c(1, 2)));
        CHECK(rep.passed);
        CHECK(rep.vacuous);
    }
    SUBCASE("edge not in graph") {
        CHECK_THROWS_AS(check_2edge(AugmentedGraph(2, 2), Edge2(c(1, 1), c(2, 2))), EdgeNotInGraphError);
    }
}

TEST_CASE("3-edge saturation") {
    SUBCASE("5x3 construction: five of six occupied, (5,1) free") {
        auto g = builtin_graph(BuiltinId::G53);
        auto rep = check_3edge_saturation(g, Edge3(c(2, 2), c(3, 1), c(5, 3)));
        CHECK(rep.passed);
        CHECK(rep.detail.find("5 of 6") != std::string::npos);
        CHECK(rep.detail.find("(5,1)") != std::string::npos);
    }
    SUBCASE("6x4 construction, first 3-edge: O is fully occupied") {
        // The published check calls (13,3) and (24,2) free, but both are
        // endpoint incidences of K4 and hence 1-edges.
        auto g = builtin_graph(BuiltinId::G64);
        Edge3 t(c(2, 2), c(5, 3), c(6, 1));  // (13,2;24,3;34,1)
        CHECK(std::binary_search(g.one_edges().begin(), g.one_edges().end(), c(2, 3)));
        CHECK(std::binary_search(g.one_edges().begin(), g.one_edges().end(), c(5, 2)));
        auto rep = check_3edge_saturation(g, t);
        CHECK_FALSE(rep.passed);
        CHECK(replay_witness(g, rep));
    }
    SUBCASE("O covered by six 1-edges") {
        AugmentedGraph g(3, 3, {c(1, 2), c(1, 3), c(2, 1), c(2, 3), c(3, 1), c(3, 2)}, {},
                         {Edge3(c(1, 1), c(2, 2), c(3, 3))});
        auto rep = check_3edge_saturation(g, Edge3(c(1, 1), c(2, 2), c(3, 3)));
        CHECK_FALSE(rep.passed);
        CHECK(rep.witness->cells.size() == 6);
        CHECK(replay_witness(g, rep));
    }
}

TEST_CASE("3-edge extension") {
    SUBCASE("5x5 construction: (5,4) free makes it vacuous") {
        auto g = builtin_graph(BuiltinId::G55);
        auto rep = check_3edge_extension(g, Edge3(c(2, 2), c(4, 4), c(5, 3)));
        CHECK(rep.passed);
        CHECK(rep.vacuous);
        CHECK(rep.detail.find("(5,4)") != std::string::npos);
    }
    SUBCASE("5x3 construction: vacuous") {
        auto rep = check_3edge_extension(builtin_graph(BuiltinId::G53), Edge3(c(2, 2), c(3, 1), c(5, 3)));
        CHECK(rep.passed);
        CHECK(rep.vacuous);
    }
    SUBCASE("full O plus an outside occupied cell") {
        AugmentedGraph g(4, 3, {c(1, 2), c(1, 3), c(2, 1), c(2, 3), c(3, 1), c(3, 2), c(4, 1)}, {},
                         {Edge3(c(1, 1), c(2, 2), c(3, 3))});
        auto rep = check_3edge_extension(g, Edge3(c(1, 1), c(2, 2), c(3, 3)));
        CHECK_FALSE(rep.passed);
        CHECK_FALSE(rep.vacuous);
        CHECK(rep.witness->cells.back() == c(4, 1));
        CHECK(replay_witness(g, rep));
    }
    SUBCASE("full O and nothing outside") {
        AugmentedGraph g(3, 3, {c(1, 2), c(1, 3), c(2, 1), c(2, 3), c(3, 1), c(3, 2)}, {},
                         {Edge3(c(1, 1), c(2, 2), c(3, 3))});
        CHECK(check_3edge_extension(g, Edge3(c(1, 1), c(2, 2), c(3, 3))).passed);
    }
    CHECK_THROWS_AS(check_3edge_extension(AugmentedGraph(3, 3), Edge3(c(1, 1), c(2, 2), c(3, 3))),
                    EdgeNotInGraphError);
}

TEST_CASE("composed check on the builtins") {
    CHECK(all_passed(is_generalized_cycle_free(builtin_graph(BuiltinId::G53), kLiteral)));
    CHECK(all_passed(is_generalized_cycle_free(builtin_graph(BuiltinId::G53), kOccupancy)));
    CHECK(all_passed(is_generalized_cycle_free(builtin_graph(BuiltinId::G55), kLiteral)));
    // Under the occupancy reading (2,3;4,2) sees (2,2), a 3-edge half, and (4,3) in E1.
    CHECK_FALSE(all_passed(is_generalized_cycle_free(builtin_graph(BuiltinId::G55), kOccupancy)));
    CHECK_FALSE(all_passed(is_generalized_cycle_free(builtin_graph(BuiltinId::G64), kLiteral)));

    auto reports = is_generalized_cycle_free(builtin_graph(BuiltinId::G53));
    // simplicity, nondegeneracy, C4, one 2-edge, saturation + extension
    CHECK(reports.size() == 6);
}

TEST_CASE("with E2 and E3 empty the check reduces to C4-freeness") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        auto g = oracle::random_simple_graph(rng, 5);
        AugmentedGraph plain(g.rows(), g.cols(), g.one_edges());
        CHECK(all_passed(is_generalized_cycle_free(plain)) == is_c4_free(g.rows(), g.cols(), g.one_edges()).passed);
    }
}

TEST_CASE("composed check agrees with the reference checker") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1500; ++t) {
        auto g = oracle::random_simple_graph(rng, 5);
        for (bool literal : {true, false}) {
            auto reports = is_generalized_cycle_free(g, literal ? kLiteral : kOccupancy);
            CHECK(all_passed(reports) == oracle::cycle_free(g, literal));
            for (const auto& r : reports)
                if (!r.passed) CHECK(replay_witness(g, r, literal ? kLiteral : kOccupancy));
        }
    }
}

TEST_CASE("conditions are monotone under edge deletion") {
    std::mt19937_64 rng(3);
    std::vector<AugmentedGraph> passing = {builtin_graph(BuiltinId::G53), builtin_graph(BuiltinId::G55)};
    for (int t = 0; t < 3000 && passing.size() < 200; ++t) {
        auto g = oracle::random_simple_graph(rng, 5);
        if (all_passed(is_generalized_cycle_free(g))) passing.push_back(g);
    }
    for (const auto& g : passing) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Cell> e1;
            std::vector<Edge2> e2;
            std::vector<Edge3> e3;
            std::bernoulli_distribution keep(0.6);
            for (const auto& x : g.one_edges())
                if (keep(rng)) e1.push_back(x);
            for (const auto& x : g.two_edges())
                if (keep(rng)) e2.push_back(x);
            for (const auto& x : g.three_edges())
                if (keep(rng)) e3.push_back(x);
            CHECK(all_passed(is_generalized_cycle_free(AugmentedGraph(g.rows(), g.cols(), e1, e2, e3))));
        }
    }
}

TEST_CASE("pair constraint hook") {
    ConditionOptions opts;
    opts.pair_constraints.push_back([](const AugmentedGraph&, const Edge2&, const Edge2&) { return false; });
    AugmentedGraph g(3, 3, {}, {Edge2(c(1, 1), c(2, 2)), Edge2(c(1, 3), c(3, 1))});
    auto reports = is_generalized_cycle_free(g, opts);
    CHECK_FALSE(all_passed(reports));
    CHECK(reports.back().condition == Condition::PairConstraint);
    CHECK(replay_witness(g, reports.back(), opts));
    CHECK(all_passed(is_generalized_cycle_free(g)));
}
