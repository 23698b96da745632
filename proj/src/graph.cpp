#include "zrk/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

#include "zrk/errors.hpp"

namespace zrk {

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")";
}

Edge2::Edge2(Cell a, Cell b) : cells_{a, b} {
    if (a == b) throw EdgeError("2-edge with repeated cell " + to_string(a));
    if (cells_[1] < cells_[0]) std::swap(cells_[0], cells_[1]);
}

Degeneracy Edge2::degeneracy() const {
    if (cells_[0].row == cells_[1].row) return Degeneracy::Row;
    if (cells_[0].col == cells_[1].col) return Degeneracy::Column;
    return Degeneracy::None;
}

std::optional<std::array<Cell, 2>> Edge2::opposite_cells() const {
    if (degeneracy() != Degeneracy::None) return std::nullopt;
    const auto& [a, b] = cells_;
    return std::array<Cell, 2>{Cell{a.row, b.col}, Cell{b.row, a.col}};
}

Edge3::Edge3(Cell a, Cell b, Cell c) : cells_{a, b, c} {
    std::sort(cells_.begin(), cells_.end());
    if (cells_[0] == cells_[1] || cells_[1] == cells_[2])
        throw EdgeError("3-edge with repeated cell");
    auto r = rows();
    auto k = cols();
    if (r[0] == r[1] || r[1] == r[2] || k[0] == k[1] || k[1] == k[2])
        throw DegenerateEdgeError("degenerate 3-edge " + to_string(*this) +
                                  ": rows and columns must be pairwise distinct");
}

bool Edge3::contains(const Cell& c) const {
    return std::find(cells_.begin(), cells_.end(), c) != cells_.end();
}

std::array<int, 3> Edge3::rows() const {
    std::array<int, 3> r{cells_[0].row, cells_[1].row, cells_[2].row};
    std::sort(r.begin(), r.end());
    return r;
}

std::array<int, 3> Edge3::cols() const {
    std::array<int, 3> k{cells_[0].col, cells_[1].col, cells_[2].col};
    std::sort(k.begin(), k.end());
    return k;
}

std::array<Cell, 6> Edge3::saturation_set() const {
    std::array<Cell, 6> out;
    std::size_t at = 0;
    for (int r : rows())
        for (int k : cols())
            if (!contains(Cell{r, k})) out[at++] = Cell{r, k};
    return out;
}

bool Edge3::spans(const Cell& c) const {
    auto r = rows();
    auto k = cols();
    return std::find(r.begin(), r.end(), c.row) != r.end() &&
           std::find(k.begin(), k.end(), c.col) != k.end();
}

std::string to_string(const Edge2& e) {
    const auto& [a, b] = e.cells();
    return "(" + std::to_string(a.row + 1) + "," + std::to_string(a.col + 1) + ";" +
           std::to_string(b.row + 1) + "," + std::to_string(b.col + 1) + ")";
}

std::string to_string(const Edge3& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& c = e.cells()[i];
        if (i) s += ";";
        s += std::to_string(c.row + 1) + "," + std::to_string(c.col + 1);
    }
    return s + ")";
}

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

AugmentedGraph::AugmentedGraph(int m, int n, std::vector<Cell> e1, std::vector<Edge2> e2,
                               std::vector<Edge3> e3)
    : m_(m), n_(n), e1_(std::move(e1)), e2_(std::move(e2)), e3_(std::move(e3)) {
    if (m < 1 || n < 1)
        throw RangeError("grid dimensions must be positive, got " + std::to_string(m) + "x" +
                         std::to_string(n));
    sort_unique(e1_);
    sort_unique(e2_);
    sort_unique(e3_);
    for (const auto& c : cell_list())
        if (!in_grid(c))
            throw RangeError("cell " + to_string(c) + " outside the " + std::to_string(m) + "x" +
                             std::to_string(n) + " grid");
}

bool AugmentedGraph::has_two_edge(const Edge2& e) const {
    return std::binary_search(e2_.begin(), e2_.end(), e);
}

bool AugmentedGraph::has_three_edge(const Edge3& e) const {
    return std::binary_search(e3_.begin(), e3_.end(), e);
}

std::vector<Cell> AugmentedGraph::cell_list() const {
    std::vector<Cell> out(e1_);
    out.reserve(e1_.size() + 2 * e2_.size() + 3 * e3_.size());
    for (const auto& e : e2_) out.insert(out.end(), e.cells().begin(), e.cells().end());
    for (const auto& e : e3_) out.insert(out.end(), e.cells().begin(), e.cells().end());
    return out;
}

AugmentedGraph AugmentedGraph::with_two_edge(const Edge2& e) const {
    auto e2 = e2_;
    e2.push_back(e);
    return AugmentedGraph(m_, n_, e1_, std::move(e2), e3_);
}

AugmentedGraph AugmentedGraph::with_three_edge(const Edge3& e) const {
    auto e3 = e3_;
    e3.push_back(e);
    return AugmentedGraph(m_, n_, e1_, e2_, std::move(e3));
}

std::vector<Cell> occupied_cells(const AugmentedGraph& g) {
    auto cells = g.cell_list();
    sort_unique(cells);
    return cells;
}

std::vector<Cell> repeated_cells(const AugmentedGraph& g) {
    auto cells = g.cell_list();
    std::sort(cells.begin(), cells.end());
    std::vector<Cell> out;
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i] == cells[i - 1] && (out.empty() || out.back() != cells[i]))
            out.push_back(cells[i]);
    return out;
}

bool is_simple(const AugmentedGraph& g) { return repeated_cells(g).empty(); }

OccupancyGrid::OccupancyGrid(const AugmentedGraph& g)
    : m_(g.rows()), n_(g.cols()), cells_(static_cast<std::size_t>(m_ * n_)) {
    auto claim = [&](const Cell& c, Status s, std::size_t edge) {
        auto& entry = cells_[index(c)];
        if (entry.status != Status::Free)
            throw SimplicityError("cell " + to_string(c) + " appears in more than one edge");
        entry = Entry{s, edge};
    };
    for (const auto& c : g.one_edges()) claim(c, Status::One, 0);
    for (std::size_t i = 0; i < g.two_edges().size(); ++i)
        for (const auto& c : g.two_edges()[i].cells()) claim(c, Status::TwoHalf, i);
    for (std::size_t i = 0; i < g.three_edges().size(); ++i)
        for (const auto& c : g.three_edges()[i].cells()) claim(c, Status::ThreeHalf, i);
}

AugmentedGraph OccupancyGrid::to_graph() const {
    std::vector<Cell> e1;
    std::map<std::size_t, std::vector<Cell>> twos;
    std::map<std::size_t, std::vector<Cell>> threes;
    for (int r = 0; r < m_; ++r) {
        for (int k = 0; k < n_; ++k) {
            Cell c{r, k};
            const auto& e = at(c);
            switch (e.status) {
                case Status::Free: break;
                case Status::One: e1.push_back(c); break;
                case Status::TwoHalf: twos[e.edge].push_back(c); break;
                case Status::ThreeHalf: threes[e.edge].push_back(c); break;
            }
        }
    }
    std::vector<Edge2> e2;
    for (const auto& [_, cells] : twos) e2.emplace_back(cells.at(0), cells.at(1));
    std::vector<Edge3> e3;
    for (const auto& [_, cells] : threes) e3.emplace_back(cells.at(0), cells.at(1), cells.at(2));
    return AugmentedGraph(m_, n_, std::move(e1), std::move(e2), std::move(e3));
}

// ---------------------------------------------------------------------------
// Canonical codes
//
// Columns are permuted exhaustively (the smaller side, after an optional
// transpose). For a fixed column order the row-major label matrix is
// lexicographically minimal exactly when rows are sorted by their label
// signature, so only permutations inside groups of equal signatures need to
// be tried, and only for groups whose rows hold halves of multi-cell edges.
// ---------------------------------------------------------------------------

namespace {

enum Label : std::uint8_t { kFree = 0, kOne = 1, kTwo = 2, kThree = 3 };

AugmentedGraph transposed(const AugmentedGraph& g) {
    auto t = [](const Cell& c) { return Cell{c.col, c.row}; };
    std::vector<Cell> e1;
    for (const auto& c : g.one_edges()) e1.push_back(t(c));
    std::vector<Edge2> e2;
    for (const auto& e : g.two_edges()) e2.emplace_back(t(e.first()), t(e.second()));
    std::vector<Edge3> e3;
    for (const auto& e : g.three_edges())
        e3.emplace_back(t(e.cells()[0]), t(e.cells()[1]), t(e.cells()[2]));
    return AugmentedGraph(g.cols(), g.rows(), std::move(e1), std::move(e2), std::move(e3));
}

class Canonicalizer {
public:
    explicit Canonicalizer(const AugmentedGraph& g)
        : g_(g), m_(g.rows()), n_(g.cols()), labels_(static_cast<std::size_t>(m_ * n_), kFree) {
        for (const auto& c : g.one_edges()) label(c) = kOne;
        for (const auto& e : g.two_edges())
            for (const auto& c : e.cells()) label(c) = kTwo;
        for (const auto& e : g.three_edges())
            for (const auto& c : e.cells()) label(c) = kThree;
        multi_ = !g.two_edges().empty() || !g.three_edges().empty();
    }

    std::string run(std::string header) {
        header_ = std::move(header);
        std::vector<int> col_order(static_cast<std::size_t>(n_));
        std::iota(col_order.begin(), col_order.end(), 0);
        do {
            visit_column_order(col_order);
        } while (std::next_permutation(col_order.begin(), col_order.end()));
        return best_;
    }

private:
    std::uint8_t& label(const Cell& c) { return labels_[static_cast<std::size_t>(c.row * n_ + c.col)]; }
    std::uint8_t label_at(int r, int k) const { return labels_[static_cast<std::size_t>(r * n_ + k)]; }

    // col_order[new] = old
    void visit_column_order(const std::vector<int>& col_order) {
        new_col_.assign(static_cast<std::size_t>(n_), 0);
        for (int k = 0; k < n_; ++k) new_col_[static_cast<std::size_t>(col_order[static_cast<std::size_t>(k)])] = k;

        std::vector<std::string> sig(static_cast<std::size_t>(m_));
        for (int r = 0; r < m_; ++r) {
            auto& s = sig[static_cast<std::size_t>(r)];
            s.resize(static_cast<std::size_t>(n_));
            for (int k = 0; k < n_; ++k)
                s[static_cast<std::size_t>(k)] = static_cast<char>(label_at(r, col_order[static_cast<std::size_t>(k)]));
        }
        std::vector<int> row_order(static_cast<std::size_t>(m_));
        std::iota(row_order.begin(), row_order.end(), 0);
        std::stable_sort(row_order.begin(), row_order.end(), [&](int a, int b) {
            return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
        });

        std::string matrix = header_;
        for (int r : row_order) matrix += sig[static_cast<std::size_t>(r)];
        if (!best_.empty() && matrix.compare(0, matrix.size(), best_, 0, matrix.size()) > 0) return;

        if (!multi_) {
            consider(std::move(matrix));
            return;
        }

        // Groups of equal signatures that contain halves of multi-cell edges.
        groups_.clear();
        for (std::size_t i = 0; i < row_order.size();) {
            std::size_t j = i + 1;
            while (j < row_order.size() &&
                   sig[static_cast<std::size_t>(row_order[j])] == sig[static_cast<std::size_t>(row_order[i])])
                ++j;
            const auto& s = sig[static_cast<std::size_t>(row_order[i])];
            bool has_half = s.find(static_cast<char>(kTwo)) != std::string::npos ||
                            s.find(static_cast<char>(kThree)) != std::string::npos;
            if (j - i > 1 && has_half) groups_.push_back({i, j});
            i = j;
        }
        row_order_ = row_order;
        matrix_ = std::move(matrix);
        permute_groups(0);
    }

    void permute_groups(std::size_t gi) {
        if (gi == groups_.size()) {
            emit_edges();
            return;
        }
        auto [lo, hi] = groups_[gi];
        auto first = row_order_.begin() + static_cast<std::ptrdiff_t>(lo);
        auto last = row_order_.begin() + static_cast<std::ptrdiff_t>(hi);
        std::sort(first, last);
        do {
            permute_groups(gi + 1);
        } while (std::next_permutation(first, last));
    }

    void emit_edges() {
        std::vector<int> new_row(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) new_row[static_cast<std::size_t>(row_order_[static_cast<std::size_t>(i)])] = i;
        auto code = [&](const Cell& c) {
            return static_cast<char>(new_row[static_cast<std::size_t>(c.row)] * n_ +
                                     new_col_[static_cast<std::size_t>(c.col)]);
        };
        std::vector<std::string> twos;
        for (const auto& e : g_.two_edges()) {
            std::string s{code(e.first()), code(e.second())};
            std::sort(s.begin(), s.end());
            twos.push_back(std::move(s));
        }
        std::vector<std::string> threes;
        for (const auto& e : g_.three_edges()) {
            std::string s{code(e.cells()[0]), code(e.cells()[1]), code(e.cells()[2])};
            std::sort(s.begin(), s.end());
            threes.push_back(std::move(s));
        }
        std::sort(twos.begin(), twos.end());
        std::sort(threes.begin(), threes.end());
        std::string out = matrix_;
        for (const auto& s : twos) out += s;
        for (const auto& s : threes) out += s;
        consider(std::move(out));
    }

    void consider(std::string candidate) {
        if (best_.empty() || candidate < best_) best_ = std::move(candidate);
    }

    const AugmentedGraph& g_;
    int m_;
    int n_;
    std::vector<std::uint8_t> labels_;
    bool multi_ = false;
    std::string header_;
    std::string best_;
    std::vector<int> new_col_;
    std::vector<int> row_order_;
    std::string matrix_;
    std::vector<std::pair<std::size_t, std::size_t>> groups_;
};

}  // namespace

std::string canonical_code(const AugmentedGraph& g, int max_cells) {
    if (g.rows() * g.cols() > max_cells)
        throw GuardError("canonical code guard: " + std::to_string(g.rows()) + "x" +
                         std::to_string(g.cols()) + " exceeds " + std::to_string(max_cells) +
                         " cells");
    if (!is_simple(g)) throw SimplicityError("canonical code requires a simple graph");

    std::string header;
    header += static_cast<char>(g.rows());
    header += static_cast<char>(g.cols());
    header += static_cast<char>(g.one_edges().size());
    header += static_cast<char>(g.two_edges().size());
    header += static_cast<char>(g.three_edges().size());

    if (g.cols() <= g.rows()) return Canonicalizer(g).run(header);
    auto t = transposed(g);
    return Canonicalizer(t).run(header);
}

}  // namespace zrk
