#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zrk/builtins.hpp"
#include "zrk/errors.hpp"
#include "zrk/forms.hpp"

using namespace zrk;

namespace {

Cell c(int i, int j) { return Cell{i - 1, j - 1}; }

// Coefficient of x_i x_k y_j y_l, 1-based.
Integer coef(const BiquadraticForm& f, int i, int j, int k, int l) { return f.coefficient(i - 1, j - 1, k - 1, l - 1); }

}  // namespace

TEST_CASE("form of a single 1-edge") {
    auto f = build_form(AugmentedGraph(3, 3, {c(1, 1)}));
    CHECK(f.size() == 1);
    CHECK(coef(f, 1, 1, 1, 1) == 1);
    CHECK(to_text(f) == "x1^2 y1^2");
}

TEST_CASE("form of a 2-edge is the square of its sum") {
    auto f = build_form(AugmentedGraph(2, 2, {}, {Edge2(c(1, 1), c(2, 2))}));
    CHECK(to_text(f) == "x1^2 y1^2 + 2 x1 x2 y1 y2 + x2^2 y2^2");
    // the same monomial is reached through the opposite cells
    CHECK(coef(f, 1, 2, 2, 1) == 2);
    CHECK(coef(f, 2, 2, 1, 1) == 2);
}

TEST_CASE("hand-checked coefficients of the 5x3 construction") {
    auto f = build_form(builtin_graph(BuiltinId::G53));
    CHECK(coef(f, 1, 1, 1, 1) == 1);
    CHECK(coef(f, 4, 3, 4, 3) == 0);       // free cell
    CHECK(coef(f, 1, 3, 4, 2) == 2);       // 2-edge cross term x1 x4 y2 y3
    CHECK(coef(f, 2, 2, 3, 1) == 2);       // 3-edge cross term x2 x3 y1 y2
    CHECK(coef(f, 3, 1, 5, 3) == 2);       // x3 x5 y1 y3
    CHECK(coef(f, 1, 1, 1, 2) == 0);       // two 1-edges never interact
    CHECK(coef(f, 1, 1, 2, 2) == 0);
    // 8 squares of 1-edges, 2 + 3 from the larger edges, 1 + 3 cross terms
    CHECK(f.size() == 8 + 2 + 3 + 1 + 3);
}

TEST_CASE("the extra square of Q expands to six terms") {
    auto data = q55_data();
    auto from_graph = build_form(AugmentedGraph(5, 5, {}, {}, {Edge3(c(2, 2), c(4, 4), c(5, 3))}));
    CHECK(data.extra == from_graph);
    CHECK(data.extra.size() == 6);
    CHECK(coef(data.extra, 2, 2, 4, 4) == 2);
    CHECK(coef(data.extra, 2, 2, 5, 3) == 2);
    CHECK(coef(data.extra, 4, 4, 5, 3) == 2);
    CHECK(expand(data.decomposition) == data.q);
    CHECK(data.decomposition.size() == 15);
}

TEST_CASE("canonical decompositions") {
    CHECK(canonical_decomposition(builtin_graph(BuiltinId::G53)).size() == 10);
    CHECK(canonical_decomposition(builtin_graph(BuiltinId::G55)).size() == 16);
    CHECK(canonical_decomposition(builtin_graph(BuiltinId::G64)).size() == 16);
    for (auto id : {BuiltinId::G53, BuiltinId::G55, BuiltinId::G64}) {
        auto g = builtin_graph(id);
        auto d = canonical_decomposition(g);
        CHECK(expand(d) == build_form(g));
        CHECK(static_cast<std::size_t>(independent_rank(d)) == oracle::rational_rank(d));
        CHECK(static_cast<std::size_t>(independent_rank(d)) == g.edge_count());
    }
    CHECK_THROWS_AS(canonical_decomposition(AugmentedGraph(2, 2)), Error);
    CHECK(canonical_decomposition(AugmentedGraph(2, 2), true).empty());
    CHECK_THROWS_AS(build_form(AugmentedGraph(2, 2, {c(1, 1)}, {Edge2(c(1, 1), c(2, 2))})), SimplicityError);
}

TEST_CASE("independent rank") {
    auto data = q55_data();
    CHECK(independent_rank(data.decomposition) == 15);
    CHECK(oracle::rational_rank(data.decomposition) == 15);

    SosDecomposition dup(2, 2);
    auto f = BilinearForm::indicator(2, 2, std::vector<Cell>{c(1, 1), c(2, 2)});
    dup.push_back(f);
    dup.push_back(f);
    CHECK(independent_rank(dup) == 1);
    CHECK(independent_rank(SosDecomposition(2, 2)) == 0);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 6);
    for (int t = 0; t < 300; ++t) {
        const int r = dim(rng), cols = dim(rng);
        Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> a(r, cols);
        std::vector<std::vector<oracle::Rational>> b(static_cast<std::size_t>(r));
        // low-rank products show up often enough to exercise the degenerate paths
        const bool low = t % 3 == 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < cols; ++j) a(i, j) = entry(rng);
        if (low && r > 1) a.row(r - 1) = a.row(0) * Integer(2) - a.row(r - 2);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < cols; ++j) b[static_cast<std::size_t>(i)].emplace_back(a(i, j));
        CHECK(static_cast<std::size_t>(bareiss_rank(a)) == oracle::rational_rank(b));
    }
}

TEST_CASE("form coefficients are symmetric and range-checked") {
    auto f = build_form(builtin_graph(BuiltinId::G55));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k)
                for (int l = 0; l < 5; ++l) {
                    auto v = f.coefficient(i, j, k, l);
                    CHECK(v == f.coefficient(k, l, i, j));
                    CHECK(v == f.coefficient(i, l, k, j));
                }
    CHECK_THROWS_AS(f.coefficient(5, 0, 0, 0), RangeError);
    CHECK_THROWS_AS(f.coefficient(0, 0, 0, -1), RangeError);
    BiquadraticForm other(5, 4);
    CHECK_THROWS_AS(f += other, DimensionMismatchError);
    CHECK_THROWS_AS(SosDecomposition(5, 5, {BilinearForm(5, 4)}), DimensionMismatchError);
}

TEST_CASE("random graphs: coefficients, expansion and evaluation") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int t = 0; t < 400; ++t) {
        auto g = oracle::random_simple_graph(rng, 5);
        if (g.empty()) continue;
        auto f = build_form(g);
        auto d = canonical_decomposition(g);
        CHECK(expand(d) == f);

        // Squares carry 1 on occupied cells; every other coefficient is
        // 2 per same-edge pair naming that monomial.
        auto occ = occupied_cells(g);
        for (const auto& [key, v] : f.terms()) {
            if (key.is_square())
                CHECK(v == 1);
            else
                CHECK(v == 2 * oracle::pairs_on_key(g, key));
        }
        for (const auto& x : occ) CHECK(f.coefficient(MonomialKey::of(x, x)) == 1);

        std::vector<long> xs(static_cast<std::size_t>(g.rows())), ys(static_cast<std::size_t>(g.cols()));
        for (auto& v : xs) v = val(rng);
        for (auto& v : ys) v = val(rng);
        CHECK(f.evaluate(xs, ys) == oracle::evaluate_squares(d, xs, ys));
        CHECK(static_cast<std::size_t>(independent_rank(d)) == oracle::rational_rank(d));
    }
}

TEST_CASE("coefficients add when two edges name one monomial") {
    // (1,1;2,2) and (1,2;2,1) both produce x1 x2 y1 y2
    AugmentedGraph g(2, 2, {}, {Edge2(c(1, 1), c(2, 2)), Edge2(c(1, 2), c(2, 1))});
    auto f = build_form(g);
    CHECK(coef(f, 1, 1, 2, 2) == 4);
    CHECK(oracle::pairs_on_key(g, MonomialKey::of(c(1, 1), c(2, 2))) == 2);
}
