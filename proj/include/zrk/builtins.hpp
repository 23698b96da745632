#pragma once

// The explicit constructions shipped with the tool: the 5x3, 5x5 and 6x4
// graphs and the 5x5 form Q with its fifteen-square decomposition.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zrk/forms.hpp"
#include "zrk/graph.hpp"

namespace zrk {

enum class BuiltinId { G53, G55, G64, Q55 };

std::string to_string(BuiltinId id);
std::optional<BuiltinId> parse_builtin(std::string_view name);
const std::vector<BuiltinId>& all_builtins();

/// The graph of a builtin. For Q55 this is the base graph (E1 and E2 only).
AugmentedGraph builtin_graph(BuiltinId id);

/// The rank the construction is known to attain.
std::size_t expected_rank(BuiltinId id);

/// Row names: K4 edge labels 12,13,14,23,24,34 for G64, "1".."m" otherwise.
std::vector<std::string> row_labels(BuiltinId id);

struct Q55Data {
    AugmentedGraph base;           // 12 one-edges, two 2-edges
    std::array<Cell, 3> triple;    // cells of the extra square
    BiquadraticForm extra;         // (x2 y2 + x4 y4 + x5 y3)^2, entered term by term
    SosDecomposition decomposition;  // 12 + 2 + 1 forms
    BiquadraticForm q;             // P_base + extra
};

Q55Data q55_data();

}  // namespace zrk
