#pragma once

// Exhaustive branch-and-bound for the classical, limited augmented, limited
// 3-augmented and full 3-augmented Zarankiewicz numbers.
//
// Pruning is strict (a branch is cut only when its bound is below the best
// value found so far), so every optimal graph of the search space is reached
// whatever the schedule. Witnesses are the smallest canonical codes among
// them, which makes value, exhaustiveness and witness set independent of the
// number of threads.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zrk/conditions.hpp"
#include "zrk/graph.hpp"

namespace zrk {

enum class Statistic { Z, ZL, Z3L, Z3A };

std::string to_string(Statistic s);
std::optional<Statistic> parse_statistic(std::string_view s);

struct SearchConfig {
    Condition2Reading reading = Condition2Reading::Literal;
    bool symmetry = true;
    bool allow_degenerate_two_edges = false;
    std::uint64_t budget_nodes = 0;  // 0: unlimited
    double budget_seconds = 0;       // 0: unlimited
    unsigned threads = 1;
    int max_dimension = 8;   // guard on m and n for z, zl, z3l
    int max_cells_full = 25; // guard on m * n for z3a
    std::size_t max_witnesses = 8;
    std::uint64_t seed = 0;  // recorded only; the search itself is deterministic
    std::vector<PairConstraint> pair_constraints;
};

struct SearchResult {
    Statistic statistic = Statistic::Z;
    int m = 0;
    int n = 0;
    int value = 0;
    int augmentation = 0;  // best |E2| + |E3| on top of E1
    std::vector<AugmentedGraph> witnesses;  // ordered by canonical code
    bool exhaustive = true;
    std::uint64_t nodes_explored = 0;
    std::uint64_t one_edge_classes = 0;  // E1 graphs the augmentation layer ran on
    double seconds = 0;
    SearchConfig config;
    std::optional<int> published_value;
    bool published_is_lower_bound = false;
    std::vector<std::string> flags;
};

/// Largest |E1| of a C4-free m x n bipartite graph.
SearchResult zarankiewicz(int m, int n, const SearchConfig& cfg = {});

/// All maximum C4-free edge sets, one per isomorphism class when symmetry
/// is on (ordered by canonical code), every labelled one otherwise.
std::vector<std::vector<Cell>> enumerate_extremal_c4free(int m, int n, const SearchConfig& cfg = {});

/// Best number of 2-edges (and 3-edges when allow_e3) that can be added to
/// E1 on free cells keeping the graph simple and generalized cycle-free.
SearchResult max_augmentation(int m, int n, const std::vector<Cell>& e1, bool allow_e3,
                              const SearchConfig& cfg = {});

SearchResult z_limited(int m, int n, const SearchConfig& cfg = {});
SearchResult z3_limited(int m, int n, const SearchConfig& cfg = {});

/// Budgeted; may return exhaustive = false with the best value found.
SearchResult z3_full(int m, int n, const SearchConfig& cfg = {});

SearchResult compute(Statistic s, int m, int n, const SearchConfig& cfg = {});

/// Applies the ZRK_THREADS cap (when set) to a requested thread count.
unsigned effective_threads(unsigned requested);

/// Threads a search with cfg actually uses: one under a node budget.
unsigned effective_threads(const SearchConfig& cfg);

}  // namespace zrk
