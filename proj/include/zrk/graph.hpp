#pragma once

// Augmented bipartite graphs with 1-, 2- and 3-edges over an m x n grid of cells.
//
// Indices are 0-based in this API. File formats and reports use 1-based
// indices; the conversion happens in io.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace zrk {

struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Renders a cell as "(i,j)" with 1-based indices.
std::string to_string(const Cell& c);

enum class Degeneracy { None, Row, Column };

/// Unordered pair of distinct cells, stored with the smaller cell first.
class Edge2 {
public:
    Edge2(Cell a, Cell b);

    const Cell& first() const { return cells_[0]; }
    const Cell& second() const { return cells_[1]; }
    const std::array<Cell, 2>& cells() const { return cells_; }

    Degeneracy degeneracy() const;
    bool contains(const Cell& c) const { return c == cells_[0] || c == cells_[1]; }

    /// Opposite cells (i,l) and (k,j) of a nondegenerate 2-edge (i,j;k,l).
    std::optional<std::array<Cell, 2>> opposite_cells() const;

    friend auto operator<=>(const Edge2&, const Edge2&) = default;

private:
    std::array<Cell, 2> cells_;
};

/// Unordered triple of cells with three distinct rows and three distinct columns.
class Edge3 {
public:
    /// Throws DegenerateEdgeError when a row or column repeats.
    Edge3(Cell a, Cell b, Cell c);

    const std::array<Cell, 3>& cells() const { return cells_; }
    bool contains(const Cell& c) const;

    std::array<int, 3> rows() const;  // sorted
    std::array<int, 3> cols() const;  // sorted

    /// The six cells of rows() x cols() other than the three halves.
    std::array<Cell, 6> saturation_set() const;

    bool spans(const Cell& c) const;  // c lies in rows() x cols()

    friend auto operator<=>(const Edge3&, const Edge3&) = default;

private:
    std::array<Cell, 3> cells_;
};

std::string to_string(const Edge2& e);
std::string to_string(const Edge3& e);

class AugmentedGraph {
public:
    AugmentedGraph(int m, int n, std::vector<Cell> e1 = {}, std::vector<Edge2> e2 = {},
                   std::vector<Edge3> e3 = {});

    int rows() const { return m_; }
    int cols() const { return n_; }

    // Sorted and free of duplicates.
    const std::vector<Cell>& one_edges() const { return e1_; }
    const std::vector<Edge2>& two_edges() const { return e2_; }
    const std::vector<Edge3>& three_edges() const { return e3_; }

    std::size_t edge_count() const { return e1_.size() + e2_.size() + e3_.size(); }
    bool empty() const { return edge_count() == 0; }

    bool in_grid(const Cell& c) const {
        return c.row >= 0 && c.row < m_ && c.col >= 0 && c.col < n_;
    }

    bool has_two_edge(const Edge2& e) const;
    bool has_three_edge(const Edge3& e) const;

    /// E1 followed by the halves of E2 and E3, duplicates kept.
    std::vector<Cell> cell_list() const;

    AugmentedGraph with_two_edge(const Edge2& e) const;
    AugmentedGraph with_three_edge(const Edge3& e) const;

    friend bool operator==(const AugmentedGraph&, const AugmentedGraph&) = default;

private:
    int m_;
    int n_;
    std::vector<Cell> e1_;
    std::vector<Edge2> e2_;
    std::vector<Edge3> e3_;
};

/// E1 together with all halves of 2- and 3-edges, as a sorted set.
std::vector<Cell> occupied_cells(const AugmentedGraph& g);

/// No cell appears in more than one edge.
bool is_simple(const AugmentedGraph& g);

/// Cells that appear more than once in cell_list(g), sorted.
std::vector<Cell> repeated_cells(const AugmentedGraph& g);

/// Per-cell ownership of a simple graph.
class OccupancyGrid {
public:
    enum class Status { Free, One, TwoHalf, ThreeHalf };

    struct Entry {
        Status status = Status::Free;
        std::size_t edge = 0;  // index into two_edges()/three_edges() for halves
    };

    /// Throws SimplicityError when g is not simple.
    explicit OccupancyGrid(const AugmentedGraph& g);

    int rows() const { return m_; }
    int cols() const { return n_; }

    const Entry& at(const Cell& c) const { return cells_[index(c)]; }
    bool occupied(const Cell& c) const { return at(c).status != Status::Free; }

    /// Rebuilds the graph the grid was made from.
    AugmentedGraph to_graph() const;

private:
    std::size_t index(const Cell& c) const {
        return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(c.col);
    }

    int m_;
    int n_;
    std::vector<Entry> cells_;
    std::vector<Edge2> e2_;
    std::vector<Edge3> e3_;
};

inline constexpr int kDefaultCanonicalGuard = 49;

/// Byte string invariant under every pair (row permutation, column
/// permutation); equal codes iff the graphs are related by such a pair.
/// Throws GuardError when m * n exceeds max_cells.
std::string canonical_code(const AugmentedGraph& g, int max_cells = kDefaultCanonicalGuard);

}  // namespace zrk
