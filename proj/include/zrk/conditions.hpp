#pragma once

// Generalized cycle-freeness: C4-freeness of E1, the 2-edge restriction,
// and the 3-edge saturation and extension conditions, each with a witness
// that can be replayed against the graph.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zrk/graph.hpp"

namespace zrk {

enum class Condition {
    Simplicity,
    NonDegeneracy,
    C4Free,
    TwoEdgeRestriction,
    ThreeEdgeSaturation,
    ThreeEdgeExtension,
    PairConstraint,
};

std::string to_string(Condition c);

struct Witness {
    std::vector<Cell> cells;
    std::vector<int> rows;
    std::vector<int> cols;
    std::string description;
};

struct ConditionReport {
    Condition condition;
    bool passed = true;
    bool vacuous = false;
    std::vector<Cell> subject;  // cells of the edge the check is about; empty for global checks
    std::optional<Witness> witness;
    std::string detail;
};

/// Which cells count against the first clause of the 2-edge restriction.
enum class Condition2Reading {
    Literal,    // opposite cells in E1 or a half of a 2-edge
    Occupancy,  // any occupied opposite cell, 3-edge halves included
};

/// User-supplied rule for pairs of 2-edges; returns true when the pair is allowed.
using PairConstraint =
    std::function<bool(const AugmentedGraph&, const Edge2&, const Edge2&)>;

struct ConditionOptions {
    Condition2Reading reading = Condition2Reading::Literal;
    std::vector<PairConstraint> pair_constraints;
};

/// Passes iff no two rows share two or more columns.
ConditionReport is_c4_free(int m, int n, const std::vector<Cell>& e1);

/// Throws EdgeNotInGraphError when e is not a 2-edge of g.
ConditionReport check_2edge(const AugmentedGraph& g, const Edge2& e,
                            const ConditionOptions& opts = {});

ConditionReport check_3edge_saturation(const AugmentedGraph& g, const Edge3& e);
ConditionReport check_3edge_extension(const AugmentedGraph& g, const Edge3& e);

ConditionReport check_simplicity(const AugmentedGraph& g);
ConditionReport check_nondegeneracy(const AugmentedGraph& g);

/// Every check in order: simplicity, 3-edge non-degeneracy, C4 on E1,
/// the restriction on each 2-edge, saturation and extension on each 3-edge,
/// and any configured pair constraints.
std::vector<ConditionReport> is_generalized_cycle_free(const AugmentedGraph& g,
                                                       const ConditionOptions& opts = {});

bool all_passed(const std::vector<ConditionReport>& reports);

/// Re-evaluates a failing report's witness against g; true iff the
/// violation is reproduced.
bool replay_witness(const AugmentedGraph& g, const ConditionReport& report,
                    const ConditionOptions& opts = {});

}  // namespace zrk
