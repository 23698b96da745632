#include "zrk/builtins.hpp"

#include "zrk/errors.hpp"

namespace zrk {

namespace {

// 1-based helpers so the data below reads like the published constructions.
Cell c(int i, int j) { return Cell{i - 1, j - 1}; }

std::vector<Cell> e1_55() {
    return {c(1, 1), c(1, 2), c(1, 3), c(2, 1), c(2, 4), c(3, 2),
            c(3, 4), c(3, 5), c(4, 3), c(4, 5), c(5, 1), c(5, 5)};
}

std::vector<Edge2> e2_55() { return {Edge2(c(1, 4), c(5, 2)), Edge2(c(2, 3), c(4, 2))}; }

AugmentedGraph g53() {
    return AugmentedGraph(5, 3, {c(1, 1), c(1, 2), c(2, 1), c(2, 3), c(3, 2), c(3, 3), c(4, 1), c(5, 2)},
                          {Edge2(c(1, 3), c(4, 2))}, {Edge3(c(2, 2), c(3, 1), c(5, 3))});
}

AugmentedGraph g55() {
    return AugmentedGraph(5, 5, e1_55(), e2_55(),
                          {Edge3(c(2, 2), c(4, 4), c(5, 3)), Edge3(c(2, 5), c(3, 3), c(4, 1))});
}

// Rows are the K4 edges 12,13,14,23,24,34 in that order.
AugmentedGraph g64() {
    const int ends[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    std::vector<Cell> e1;
    for (int r = 0; r < 6; ++r)
        for (int v : ends[r]) e1.push_back(c(r + 1, v));
    enum { R12 = 1, R13, R14, R23, R24, R34 };
    return AugmentedGraph(6, 4, e1, {Edge2(c(R12, 3), c(R13, 4)), Edge2(c(R24, 1), c(R34, 2))},
                          {Edge3(c(R13, 2), c(R24, 3), c(R34, 1)), Edge3(c(R12, 4), c(R14, 2), c(R23, 1))});
}

}  // namespace

std::string to_string(BuiltinId id) {
    switch (id) {
        case BuiltinId::G53: return "g53";
        case BuiltinId::G55: return "g55";
        case BuiltinId::G64: return "g64";
        case BuiltinId::Q55: return "q55";
    }
    return "?";
}

std::optional<BuiltinId> parse_builtin(std::string_view name) {
    for (auto id : all_builtins())
        if (name == to_string(id)) return id;
    return std::nullopt;
}

const std::vector<BuiltinId>& all_builtins() {
    static const std::vector<BuiltinId> ids = {BuiltinId::G53, BuiltinId::G55, BuiltinId::G64, BuiltinId::Q55};
    return ids;
}

AugmentedGraph builtin_graph(BuiltinId id) {
    switch (id) {
        case BuiltinId::G53: return g53();
        case BuiltinId::G55: return g55();
        case BuiltinId::G64: return g64();
        case BuiltinId::Q55: return AugmentedGraph(5, 5, e1_55(), e2_55());
    }
    throw Error("unknown builtin");
}

std::size_t expected_rank(BuiltinId id) {
    switch (id) {
        case BuiltinId::G53: return 10;
        case BuiltinId::G55: return 16;
        case BuiltinId::G64: return 16;
        case BuiltinId::Q55: return 15;
    }
    throw Error("unknown builtin");
}

std::vector<std::string> row_labels(BuiltinId id) {
    if (id == BuiltinId::G64) return {"12", "13", "14", "23", "24", "34"};
    std::vector<std::string> out;
    for (int i = 1; i <= builtin_graph(id).rows(); ++i) out.push_back(std::to_string(i));
    return out;
}

Q55Data q55_data() {
    AugmentedGraph base = builtin_graph(BuiltinId::Q55);
    std::array<Cell, 3> triple = {c(2, 2), c(4, 4), c(5, 3)};

    BiquadraticForm extra(5, 5);
    for (const Cell& x : triple) extra.add(MonomialKey::of(x, x), 1);
    extra.add(MonomialKey::of(c(2, 2), c(4, 4)), 2);
    extra.add(MonomialKey::of(c(2, 2), c(5, 3)), 2);
    extra.add(MonomialKey::of(c(4, 4), c(5, 3)), 2);

    SosDecomposition d = canonical_decomposition(base);
    d.push_back(BilinearForm::indicator(5, 5, triple));

    BiquadraticForm q = build_form(base) + extra;
    return Q55Data{std::move(base), triple, std::move(extra), std::move(d), std::move(q)};
}

}  // namespace zrk
