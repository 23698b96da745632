#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zrk/builtins.hpp"
#include "zrk/certificates.hpp"
#include "zrk/errors.hpp"
#include "zrk/io.hpp"

using namespace zrk;

namespace {

Cell c(int i, int j) { return Cell{i - 1, j - 1}; }

BilinearForm form(int m, int n, std::vector<Cell> cells) { return BilinearForm::indicator(m, n, cells); }

}  // namespace

TEST_CASE("vector assignment") {
    auto g = builtin_graph(BuiltinId::G53);
    VectorAssignment v(canonical_decomposition(g));
    CHECK(v.dimension() == 10);
    CHECK(v.matrix().rows() == 15);
    CHECK(v.dot(c(1, 1), c(1, 1)) == 1);
    CHECK(v.dot(c(1, 3), c(4, 2)) == 1);  // halves of the 2-edge share a vector
    CHECK(v.vector(c(1, 3)) == v.vector(c(4, 2)));
    CHECK(v.dot(c(4, 3), c(4, 3)) == 0);  // free cell
    CHECK(v.dot(c(1, 1), c(1, 2)) == 0);
    CHECK_THROWS_AS(v.vector(c(6, 1)), RangeError);
}

TEST_CASE("canonical decompositions have the strict Gram pattern") {
    for (auto id : {BuiltinId::G53, BuiltinId::G55, BuiltinId::G64}) {
        auto g = builtin_graph(id);
        auto rep = check_gram_pattern(g, canonical_decomposition(g));
        CHECK(rep.strict_pattern);
        CHECK(rep.sum_relations);
        CHECK(rep.violations.empty());
        const auto occ = occupied_cells(g).size();
        CHECK(rep.pairs_checked == occ * (occ + 1) / 2);
    }
}

TEST_CASE("sign flips keep the strict pattern") {
    auto g = builtin_graph(BuiltinId::G55);
    auto d = canonical_decomposition(g);
    SosDecomposition flipped(5, 5);
    for (std::size_t t = 0; t < d.size(); ++t)
        flipped.push_back(t % 2 ? BilinearForm(BilinearForm::Matrix(-d.forms()[t].matrix())) : d.forms()[t]);
    auto rep = check_gram_pattern(g, flipped);
    CHECK(rep.strict_pattern);
    CHECK(rep.sum_relations);
}

TEST_CASE("a decomposition can satisfy the sums but not the strict pattern") {
    // Both opposite cells of the 2-edge are 1-edges, so the cross term of the
    // 2-edge can be absorbed by a different third square.
    AugmentedGraph g(2, 2, {c(1, 2), c(2, 1)}, {Edge2(c(1, 1), c(2, 2))});
    CHECK_FALSE(all_passed(is_generalized_cycle_free(g)));
    SosDecomposition d(2, 2, {form(2, 2, {c(1, 1)}), form(2, 2, {c(2, 2)}), form(2, 2, {c(1, 2), c(2, 1)})});
    REQUIRE(expand(d) == build_form(g));
    auto rep = check_gram_pattern(g, d);
    CHECK(rep.sum_relations);
    CHECK_FALSE(rep.strict_pattern);
    CHECK_FALSE(rep.violations.empty());
    // and one square fewer than the number of edges
    CHECK(oracle::rational_rank(d) == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("gram check rejects a decomposition of another form") {
    auto g = builtin_graph(BuiltinId::G53);
    auto d = canonical_decomposition(g);
    SosDecomposition shorter(5, 3, {d.forms().begin(), d.forms().end() - 1});
    CHECK_THROWS_AS(check_gram_pattern(g, shorter), ExpansionMismatchError);
    CHECK_THROWS_AS(check_gram_pattern(g, SosDecomposition(5, 4)), DimensionMismatchError);
}

TEST_CASE("rank certificates") {
    SUBCASE("5x3 construction") {
        auto cert = certify_sos_rank(builtin_graph(BuiltinId::G53));
        CHECK(cert.valid);
        REQUIRE(cert.claimed_rank);
        CHECK(*cert.claimed_rank == 10);
        CHECK(cert.expansion_verified);
        CHECK(cert.strict_gram_pattern);
        CHECK(cert.hash.size() == 64);
    }
    SUBCASE("5x5 construction") {
        auto cert = certify_sos_rank(builtin_graph(BuiltinId::G55));
        CHECK(cert.valid);
        CHECK(cert.claimed_rank.value_or(0) == 16);
    }
    SUBCASE("6x4 construction fails the 3-edge saturation check") {
        auto g = builtin_graph(BuiltinId::G64);
        auto cert = certify_sos_rank(g);
        CHECK_FALSE(cert.valid);
        CHECK_FALSE(cert.claimed_rank);
        CHECK(cert.decomposition_rank == 16);
        bool saturation_failed = false;
        for (const auto& r : cert.reports)
            if (!r.passed && r.condition == Condition::ThreeEdgeSaturation) {
                saturation_failed = true;
                CHECK(replay_witness(g, r));
            }
        CHECK(saturation_failed);
    }
    SUBCASE("synthetic 3-edge failure") {
        AugmentedGraph g(3, 3, {c(1, 2), c(1, 3), c(2, 1), c(2, 3), c(3, 1), c(3, 2)}, {},
                         {Edge3(c(1, 1), c(2, 2), c(3, 3))});
        auto cert = certify_sos_rank(g);
        CHECK_FALSE(cert.valid);
        CHECK_FALSE(cert.claimed_rank);
    }
    SUBCASE("degenerate 2-edges carry a note") {
        AugmentedGraph g(2, 2, {c(2, 1)}, {Edge2(c(1, 1), c(1, 2))});
        auto cert = certify_sos_rank(g);
        bool noted = false;
        for (const auto& n : cert.notes) noted = noted || n.find("degenerate") != std::string::npos;
        CHECK(noted);
    }
    SUBCASE("equal graphs have equal hashes") {
        CHECK(certify_sos_rank(builtin_graph(BuiltinId::G53)).hash ==
              sha256_hex(serialize_graph(builtin_graph(BuiltinId::G53))));
        CHECK(certify_sos_rank(builtin_graph(BuiltinId::G53)).hash !=
              certify_sos_rank(builtin_graph(BuiltinId::G55)).hash);
    }
}

TEST_CASE("valid certificates match the exact rank on random graphs") {
    std::mt19937_64 rng(41);
    int valid = 0;
    for (int t = 0; t < 600; ++t) {
        auto g = oracle::random_simple_graph(rng, 5);
        auto cert = certify_sos_rank(g);
        CHECK(cert.valid == (oracle::cycle_free(g, true) && !g.empty()));
        if (!cert.valid) continue;
        ++valid;
        CHECK(*cert.claimed_rank == oracle::rational_rank(canonical_decomposition(g)));
    }
    CHECK(valid > 20);
}

TEST_CASE("the 5x5 form Q") {
    auto r = verify_q55();
    CHECK(r.expansion_equal);
    CHECK(r.independent_rank == 15);
    CHECK(r.base_dimension == 14);
    CHECK(r.forced_equalities);
    CHECK(r.triple_unit);
    CHECK(r.orthogonal_to_base);
    CHECK(r.outside_base);
    CHECK(r.base_certified);
    CHECK(r.base_certified_rank == 14);
    CHECK(r.passed());

    // independent recomputation of the rank claims
    auto data = q55_data();
    CHECK(oracle::rational_rank(data.decomposition) == 15);
    CHECK(oracle::rational_rank(canonical_decomposition(data.base)) == 14);
}

TEST_CASE("orthogonality replay on the 6x4 construction") {
    auto g = builtin_graph(BuiltinId::G64);
    auto rep = replay_three_edge_orthogonality(g, canonical_decomposition(g));
    CHECK(rep.passed());
    REQUIRE(rep.triples.size() == 2);
    for (const auto& t : rep.triples) {
        CHECK(t.halves_equal);
        CHECK(t.norm_squared == 1);
    }
    CHECK(rep.cross_dots == std::vector<Integer>{0});
    CHECK(rep.orthogonal_to_base);
    CHECK(rep.base_cells == 12 + 4);
    CHECK(rep.base_rank == 14);
}

TEST_CASE("orthogonality replay detects unequal halves") {
    // Saturated 3-edge: the off-diagonal cells of O let the cross terms be
    // regrouped so that (2,2) no longer shares the vector of (1,1).
    AugmentedGraph g(3, 3, {c(1, 2), c(1, 3), c(2, 1), c(2, 3), c(3, 1), c(3, 2)}, {},
                     {Edge3(c(1, 1), c(2, 2), c(3, 3))});
    SosDecomposition d(3, 3,
                       {form(3, 3, {c(1, 1), c(3, 3)}), form(3, 3, {c(2, 2)}), form(3, 3, {c(1, 2), c(2, 1)}),
                        form(3, 3, {c(2, 3), c(3, 2)}), form(3, 3, {c(1, 3)}), form(3, 3, {c(3, 1)})});
    REQUIRE(expand(d) == build_form(g));
    auto rep = replay_three_edge_orthogonality(g, d);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.triples[0].halves_equal);
    CHECK(oracle::rational_rank(d) == 6);
    CHECK(g.edge_count() == 7);
    CHECK_THROWS_AS(replay_three_edge_orthogonality(g, canonical_decomposition(AugmentedGraph(3, 3, {c(1, 1)}))),
                    ExpansionMismatchError);
}

TEST_CASE("sha256 known vector") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
