#include "zrk/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "zrk/errors.hpp"

namespace zrk {

std::string to_string(Statistic s) {
    switch (s) {
        case Statistic::Z: return "z";
        case Statistic::ZL: return "zl";
        case Statistic::Z3L: return "z3l";
        case Statistic::Z3A: return "z3a";
    }
    return "?";
}

std::optional<Statistic> parse_statistic(std::string_view s) {
    if (s == "z") return Statistic::Z;
    if (s == "zl") return Statistic::ZL;
    if (s == "z3l") return Statistic::Z3L;
    if (s == "z3a") return Statistic::Z3A;
    return std::nullopt;
}

unsigned effective_threads(unsigned requested) {
    unsigned t = std::max(1u, requested);
    if (const char* env = std::getenv("ZRK_THREADS")) {
        char* end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap >= 1) t = std::min<unsigned>(t, static_cast<unsigned>(cap));
    }
    return t;
}

// A shared node counter cut off by concurrent workers stops at a
// schedule-dependent point, so node-budgeted searches run serially.
unsigned effective_threads(const SearchConfig& cfg) {
    return cfg.budget_nodes > 0 ? 1u : effective_threads(cfg.threads);
}

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
public:
    explicit Budget(const SearchConfig& cfg)
        : max_nodes_(cfg.budget_nodes), start_(Clock::now()), seconds_(cfg.budget_seconds) {}

    /// Counts one node; false once the budget is exhausted.
    bool tick() {
        if (stop_.load(std::memory_order_relaxed)) return false;
        auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (max_nodes_ && n > max_nodes_) {
            stop_ = true;
            return false;
        }
        if (seconds_ > 0 && (n & 1023) == 0 && elapsed() > seconds_) {
            stop_ = true;
            return false;
        }
        return true;
    }

    bool stopped() const { return stop_.load(); }
    std::uint64_t nodes() const { return nodes_.load(); }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
    std::uint64_t max_nodes_;
    Clock::time_point start_;
    double seconds_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
};

/// Keeps the optimal graphs with the smallest canonical codes.
class WitnessSet {
public:
    WitnessSet(std::size_t cap, int initial_best) : cap_(cap), best_(initial_best) {}

    int best() const { return best_.load(std::memory_order_relaxed); }

    void offer(int value, const AugmentedGraph& g) {
        if (value < best()) return;
        auto code = canonical_code(g);
        std::lock_guard lock(mu_);
        int b = best_.load();
        if (value < b) return;
        if (value > b) {
            best_ = value;
            graphs_.clear();
        }
        // Among labellings of one class keep the smallest, so the stored
        // graph does not depend on arrival order.
        auto [it, inserted] = graphs_.try_emplace(std::move(code), g);
        if (!inserted && less(g, it->second)) it->second = g;
        if (graphs_.size() > cap_) graphs_.erase(std::prev(graphs_.end()));
    }

    std::vector<AugmentedGraph> graphs() const {
        std::vector<AugmentedGraph> out;
        for (const auto& [_, g] : graphs_) out.push_back(g);
        return out;
    }

private:
    static bool less(const AugmentedGraph& a, const AugmentedGraph& b) {
        return std::tie(a.one_edges(), a.two_edges(), a.three_edges()) <
               std::tie(b.one_edges(), b.two_edges(), b.three_edges());
    }

    std::size_t cap_;
    std::atomic<int> best_;
    std::mutex mu_;
    std::map<std::string, AugmentedGraph> graphs_;
};

/// Runs fn(i) for i in [0, count) on a shared frontier of tasks.
template <typename Fn>
void run_tasks(std::size_t count, unsigned threads, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

void check_dimensions(int m, int n, int guard, const char* what) {
    if (m < 1 || n < 1) throw GuardError(std::string(what) + ": dimensions must be positive");
    if (m > guard || n > guard)
        throw GuardError(std::string(what) + ": " + std::to_string(m) + "x" + std::to_string(n) +
                         " exceeds the dimension guard " + std::to_string(guard));
}

// ---------------------------------------------------------------------------
// C4-free layer: rows are column bitmasks, chosen top to bottom. Two rows may
// share at most one column. With symmetry on, masks are non-increasing down
// the rows, which keeps one row ordering of every graph.
// ---------------------------------------------------------------------------

class C4Search {
public:
    enum class Mode { Maximum, All };

    C4Search(int m, int n, bool symmetry, Mode mode, Budget& budget)
        : m_(m), n_(n), symmetry_(symmetry), mode_(mode), budget_(budget) {
        const int pairs = n * (n - 1) / 2;
        bound_.assign(static_cast<std::size_t>(m + 1), std::vector<int>(static_cast<std::size_t>(pairs + 1), 0));
        for (int r = 1; r <= m; ++r) {
            for (int p = 0; p <= pairs; ++p) {
                int best = 0;
                for (int d = 0; d <= n && d * (d - 1) / 2 <= p; ++d)
                    best = std::max(best, d + bound_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(p - d * (d - 1) / 2)]);
                bound_[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] = best;
            }
        }
        total_pairs_ = pairs;
    }

    /// First-row masks, each an independent task.
    std::vector<std::uint32_t> first_rows() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t mask = (1u << n_); mask-- > 0;) out.push_back(mask);
        return out;
    }

    /// Explores every graph whose first row is first_mask. Calls
    /// sink(masks, edges) at each leaf that survives pruning against best().
    template <typename Best, typename Sink>
    void run(std::uint32_t first_mask, Best&& best, Sink&& sink) {
        rows_.assign(static_cast<std::size_t>(m_), 0);
        rows_[0] = first_mask;
        int d = std::popcount(first_mask);
        dfs(1, d, d * (d - 1) / 2, best, sink);
    }

    bool completed() const { return !budget_.stopped(); }

private:
    template <typename Best, typename Sink>
    void dfs(int r, int count, int used_pairs, Best& best, Sink& sink) {
        if (!budget_.tick()) return;
        if (mode_ == Mode::Maximum &&
            count + bound_[static_cast<std::size_t>(m_ - r)][static_cast<std::size_t>(total_pairs_ - used_pairs)] < best())
            return;
        if (r == m_) {
            sink(rows_, count);
            return;
        }
        std::uint32_t top = symmetry_ ? rows_[static_cast<std::size_t>(r - 1)] : (1u << n_) - 1;
        for (std::uint32_t mask = top + 1; mask-- > 0;) {
            bool ok = true;
            for (int p = 0; p < r && ok; ++p) ok = std::popcount(mask & rows_[static_cast<std::size_t>(p)]) <= 1;
            if (!ok) continue;
            rows_[static_cast<std::size_t>(r)] = mask;
            int d = std::popcount(mask);
            dfs(r + 1, count + d, used_pairs + d * (d - 1) / 2, best, sink);
            if (budget_.stopped()) return;
        }
    }

    int m_;
    int n_;
    bool symmetry_;
    Mode mode_;
    Budget& budget_;
    int total_pairs_ = 0;
    std::vector<std::vector<int>> bound_;
    std::vector<std::uint32_t> rows_;
};

std::vector<Cell> cells_of_rows(const std::vector<std::uint32_t>& rows, int n) {
    std::vector<Cell> out;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int k = 0; k < n; ++k)
            if (rows[r] >> k & 1u) out.push_back(Cell{static_cast<int>(r), k});
    return out;
}

struct C4Collection {
    int best = 0;
    std::map<std::string, std::vector<Cell>> classes;  // by canonical code (symmetry) or serialized cells
    bool exhaustive = true;
};

std::string cells_key(const std::vector<Cell>& cells) {
    std::string s;
    for (const auto& c : cells) {
        s += static_cast<char>(c.row);
        s += static_cast<char>(c.col);
    }
    return s;
}

/// Collects C4-free graphs: every maximum one (Mode::Maximum) or all of them.
C4Collection collect_c4free(int m, int n, const SearchConfig& cfg, C4Search::Mode mode, Budget& budget,
                            std::size_t cap = SIZE_MAX) {
    C4Search proto(m, n, cfg.symmetry, mode, budget);
    auto firsts = proto.first_rows();
    std::atomic<int> best{0};
    std::mutex mu;
    C4Collection out;
    auto consider = [&](std::vector<Cell> cells, int count) {
        std::string key = cfg.symmetry ? canonical_code(AugmentedGraph(m, n, cells)) : cells_key(cells);
        std::lock_guard lock(mu);
        if (mode == C4Search::Mode::Maximum) {
            if (count < out.best) return;
            if (count > out.best) {
                out.best = count;
                out.classes.clear();
            }
            best = out.best;
        } else {
            out.best = std::max(out.best, count);
        }
        auto [it, inserted] = out.classes.try_emplace(std::move(key), cells);
        if (!inserted && cells < it->second) it->second = std::move(cells);
        if (out.classes.size() > cap) out.classes.erase(std::prev(out.classes.end()));
    };
    run_tasks(firsts.size(), effective_threads(cfg), [&](std::size_t i) {
        C4Search search(m, n, cfg.symmetry, mode, budget);
        search.run(
            firsts[i], [&] { return best.load(std::memory_order_relaxed); },
            [&](const std::vector<std::uint32_t>& rows, int count) { consider(cells_of_rows(rows, n), count); });
    });
    out.exhaustive = !budget.stopped();
    return out;
}

// ---------------------------------------------------------------------------
// Augmentation layer: free cells are visited in row-major order; each is
// paired into a 2-edge with a later free cell, grouped into a 3-edge with two
// later free cells, or left free. Condition violations are permanent once
// cells are added, so an invalid partial graph is cut immediately.
// ---------------------------------------------------------------------------

struct Placed {
    bool three = false;
    bool nondegenerate = true;
    std::array<int, 3> cells{};  // bit indices
    std::uint64_t mask = 0;
    std::uint64_t guard = 0;  // opposite cells (2-edge) or saturation set (3-edge)
};

struct Partial {
    std::size_t pos = 0;
    std::vector<Placed> placed;
};

class AugmentSearch {
public:
    AugmentSearch(int m, int n, const std::vector<Cell>& e1, bool allow_e3, const SearchConfig& cfg,
                  Budget& budget, WitnessSet& witnesses)
        : m_(m), n_(n), e1_(e1), allow_e3_(allow_e3), cfg_(cfg), budget_(budget), witnesses_(witnesses) {
        if (m * n > 64) throw GuardError("augmentation search supports at most 64 cells");
        for (const auto& c : e1) e1_mask_ |= bit(c);
        for (int i = 0; i < m * n; ++i)
            if (!(e1_mask_ >> i & 1u)) free_.push_back(i);
        suffix_.assign(free_.size() + 1, 0);
        for (std::size_t p = free_.size(); p-- > 0;) suffix_[p] = suffix_[p + 1] | (std::uint64_t{1} << free_[p]);
        literal_ = cfg.reading == Condition2Reading::Literal;
    }

    /// Partial states after `depth` branching decisions; shallower leaves are included.
    std::vector<Partial> frontier(int depth) {
        reset();
        std::vector<Partial> out;
        frontier_ = &out;
        frontier_depth_ = depth;
        dfs(0, 0);
        frontier_ = nullptr;
        return out;
    }

    void run(const Partial& start) {
        reset();
        for (const auto& p : start.placed) apply(p);
        dfs(start.pos, 0);
    }

private:
    std::uint64_t bit(const Cell& c) const { return std::uint64_t{1} << (c.row * n_ + c.col); }
    std::uint64_t bit(int row, int col) const { return std::uint64_t{1} << (row * n_ + col); }
    Cell cell(int index) const { return Cell{index / n_, index % n_}; }

    void reset() {
        occ_ = e1_mask_;
        counted_ = e1_mask_;
        placed_.clear();
    }

    void apply(const Placed& p) {
        occ_ |= p.mask;
        if (!p.three) counted_ |= p.mask;
        placed_.push_back(p);
    }

    void undo() {
        const auto& p = placed_.back();
        occ_ &= ~p.mask;
        if (!p.three) counted_ &= ~p.mask;
        placed_.pop_back();
    }

    bool two_edge_ok(const Placed& t) const {
        if (!t.nondegenerate) return true;
        std::uint64_t counted = literal_ ? counted_ : occ_;
        if ((counted & t.guard) == t.guard) return false;
        for (const auto& s : placed_)
            if (s.three && (s.mask & t.guard) == t.guard) return false;
        return true;
    }

    // A fully occupied saturation set already fails; the extension
    // condition can only fail when it is full, so this covers both.
    bool three_edge_ok(const Placed& s) const { return (occ_ & s.guard) != s.guard; }

    bool valid_after(const Placed& added) const {
        for (const auto& t : placed_) {
            bool touched = (t.guard & added.mask) != 0 || &t == &placed_.back();
            if (!touched) continue;
            if (t.three ? !three_edge_ok(t) : !two_edge_ok(t)) return false;
        }
        if (!added.three && !cfg_.pair_constraints.empty()) {
            auto g = graph();
            Edge2 e(cell(added.cells[0]), cell(added.cells[1]));
            for (const auto& t : placed_) {
                if (t.three || &t == &placed_.back()) continue;
                Edge2 other(cell(t.cells[0]), cell(t.cells[1]));
                for (const auto& rule : cfg_.pair_constraints)
                    if (!rule(g, other, e)) return false;
            }
        }
        return true;
    }

    Placed make_two(int a, int b) const {
        Placed p;
        p.cells = {a, b, -1};
        p.mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        Cell ca = cell(a), cb = cell(b);
        p.nondegenerate = ca.row != cb.row && ca.col != cb.col;
        if (p.nondegenerate) p.guard = bit(ca.row, cb.col) | bit(cb.row, ca.col);
        return p;
    }

    Placed make_three(int a, int b, int c) const {
        Placed p;
        p.three = true;
        p.cells = {a, b, c};
        p.mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c);
        std::uint64_t span = 0;
        for (int x : p.cells)
            for (int y : p.cells) span |= bit(cell(x).row, cell(y).col);
        p.guard = span & ~p.mask;
        return p;
    }

    AugmentedGraph graph() const {
        std::vector<Edge2> e2;
        std::vector<Edge3> e3;
        for (const auto& p : placed_) {
            if (p.three)
                e3.emplace_back(cell(p.cells[0]), cell(p.cells[1]), cell(p.cells[2]));
            else
                e2.emplace_back(cell(p.cells[0]), cell(p.cells[1]));
        }
        return AugmentedGraph(m_, n_, e1_, std::move(e2), std::move(e3));
    }

    bool try_branch(const Placed& p, std::size_t next, int depth) {
        apply(p);
        if (valid_after(p)) dfs(next, depth + 1);
        undo();
        return !budget_.stopped();
    }

    void dfs(std::size_t pos, int depth) {
        if (!budget_.tick()) return;
        while (pos < free_.size() && (occ_ >> free_[pos] & 1u)) ++pos;
        const int base = static_cast<int>(e1_.size() + placed_.size());
        const int undecided = std::popcount(suffix_[pos] & ~occ_);
        if (base + undecided / 2 < witnesses_.best()) return;
        if (frontier_ && depth == frontier_depth_) {
            frontier_->push_back(Partial{pos, placed_});
            return;
        }
        if (pos == free_.size()) {
            if (frontier_)
                frontier_->push_back(Partial{pos, placed_});
            else
                witnesses_.offer(base, graph());
            return;
        }

        const int a = free_[pos];
        const Cell ca = cell(a);
        for (std::size_t q = pos + 1; q < free_.size(); ++q) {
            const int b = free_[q];
            if (occ_ >> b & 1u) continue;
            const Cell cb = cell(b);
            if (!cfg_.allow_degenerate_two_edges && (ca.row == cb.row || ca.col == cb.col)) continue;
            if (!try_branch(make_two(a, b), pos + 1, depth)) return;
        }
        if (allow_e3_) {
            for (std::size_t q = pos + 1; q < free_.size(); ++q) {
                const int b = free_[q];
                const Cell cb = cell(b);
                if ((occ_ >> b & 1u) || cb.row == ca.row || cb.col == ca.col) continue;
                for (std::size_t s = q + 1; s < free_.size(); ++s) {
                    const int c = free_[s];
                    const Cell cc = cell(c);
                    if ((occ_ >> c & 1u) || cc.row == ca.row || cc.row == cb.row || cc.col == ca.col ||
                        cc.col == cb.col)
                        continue;
                    if (!try_branch(make_three(a, b, c), pos + 1, depth)) return;
                }
            }
        }
        dfs(pos + 1, depth + 1);
    }

    int m_;
    int n_;
    std::vector<Cell> e1_;
    bool allow_e3_;
    const SearchConfig& cfg_;
    Budget& budget_;
    WitnessSet& witnesses_;
    bool literal_ = true;

    std::uint64_t e1_mask_ = 0;
    std::vector<int> free_;
    std::vector<std::uint64_t> suffix_;

    std::uint64_t occ_ = 0;
    std::uint64_t counted_ = 0;  // E1 and 2-edge halves
    std::vector<Placed> placed_;

    std::vector<Partial>* frontier_ = nullptr;
    int frontier_depth_ = 0;
};

constexpr int kFrontierDepth = 3;

struct AugmentOutcome {
    int best = 0;
    std::vector<AugmentedGraph> witnesses;
    bool exhaustive = true;
};

/// Maximizes |E1| + |E2| + |E3| over the given E1 graphs; graphs whose best
/// possible total is below floor_value are skipped.
AugmentOutcome augment_all(int m, int n, const std::vector<std::vector<Cell>>& e1s, bool allow_e3,
                           const SearchConfig& cfg, Budget& budget, int floor_value = 0) {
    WitnessSet witnesses(cfg.max_witnesses, floor_value);
    std::vector<std::pair<std::size_t, Partial>> tasks;
    for (std::size_t i = 0; i < e1s.size(); ++i) {
        AugmentSearch s(m, n, e1s[i], allow_e3, cfg, budget, witnesses);
        for (auto& p : s.frontier(kFrontierDepth)) tasks.emplace_back(i, std::move(p));
    }
    run_tasks(tasks.size(), effective_threads(cfg), [&](std::size_t t) {
        const auto& [i, partial] = tasks[t];
        AugmentSearch s(m, n, e1s[i], allow_e3, cfg, budget, witnesses);
        s.run(partial);
    });

    AugmentOutcome out;
    out.exhaustive = !budget.stopped();
    out.witnesses = witnesses.graphs();
    out.best = out.witnesses.empty() ? 0 : static_cast<int>(out.witnesses.front().edge_count());

    ConditionOptions opts{cfg.reading, cfg.pair_constraints};
    for (const auto& w : out.witnesses)
        if (!all_passed(is_generalized_cycle_free(w, opts)))
            throw std::logic_error("search produced a witness that fails revalidation");
    return out;
}

struct Published {
    int value;
    bool lower_bound;
};

std::optional<Published> published(Statistic s, int m, int n) {
    static const std::map<std::tuple<Statistic, int, int>, Published> table = {
        {{Statistic::Z, 5, 3}, {8, false}},     {{Statistic::Z, 5, 5}, {12, false}},
        {{Statistic::ZL, 5, 3}, {9, false}},    {{Statistic::ZL, 5, 5}, {14, false}},
        {{Statistic::ZL, 6, 4}, {14, false}},   {{Statistic::Z3L, 5, 3}, {10, false}},
        {{Statistic::Z3L, 5, 5}, {16, true}},   {{Statistic::Z3L, 6, 4}, {16, true}},
    };
    auto it = table.find({s, m, n});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

void annotate(SearchResult& r) {
    if (r.statistic == Statistic::ZL) r.flags.push_back("five-cell-condition-not-enforced");
    if (!r.config.allow_degenerate_two_edges && r.statistic != Statistic::Z)
        r.flags.push_back("nondegenerate-two-edges-only");
    auto ref = published(r.statistic, r.m, r.n);
    if (!ref) return;
    r.published_value = ref->value;
    r.published_is_lower_bound = ref->lower_bound;
    if (ref->lower_bound) {
        r.flags.push_back(r.value >= ref->value ? "meets-published-lower-bound" : "below-published-lower-bound");
    } else if (r.value > ref->value) {
        r.flags.push_back("exceeds-paper-value");
    } else if (r.value == ref->value) {
        r.flags.push_back("matches-published-value");
    } else {
        r.flags.push_back("below-published-value");
    }
}

SearchResult limited(Statistic stat, int m, int n, bool allow_e3, const SearchConfig& cfg) {
    check_dimensions(m, n, cfg.max_dimension, to_string(stat).c_str());
    Budget budget(cfg);
    auto c4 = collect_c4free(m, n, cfg, C4Search::Mode::Maximum, budget);
    std::vector<std::vector<Cell>> e1s;
    for (auto& [_, cells] : c4.classes) e1s.push_back(std::move(cells));

    SearchResult r;
    r.statistic = stat;
    r.m = m;
    r.n = n;
    r.config = cfg;
    r.one_edge_classes = e1s.size();
    auto out = augment_all(m, n, e1s, allow_e3, cfg, budget, c4.best);
    r.value = out.best;
    r.augmentation = out.best - c4.best;
    r.witnesses = std::move(out.witnesses);
    r.exhaustive = c4.exhaustive && out.exhaustive;
    r.nodes_explored = budget.nodes();
    r.seconds = budget.elapsed();
    annotate(r);
    return r;
}

}  // namespace

SearchResult zarankiewicz(int m, int n, const SearchConfig& cfg) {
    check_dimensions(m, n, cfg.max_dimension, "z");
    Budget budget(cfg);
    auto c4 = collect_c4free(m, n, cfg, C4Search::Mode::Maximum, budget, cfg.max_witnesses);
    SearchResult r;
    r.statistic = Statistic::Z;
    r.m = m;
    r.n = n;
    r.config = cfg;
    r.value = c4.best;
    for (auto& [_, cells] : c4.classes) r.witnesses.emplace_back(m, n, std::move(cells));
    if (!cfg.symmetry) {
        // Labelled enumeration; report one graph per class like the symmetric run.
        std::map<std::string, AugmentedGraph> by_code;
        for (const auto& g : r.witnesses) by_code.try_emplace(canonical_code(g), g);
        r.witnesses.clear();
        for (auto& [_, g] : by_code) r.witnesses.push_back(std::move(g));
    }
    r.exhaustive = c4.exhaustive;
    r.nodes_explored = budget.nodes();
    r.seconds = budget.elapsed();
    annotate(r);
    return r;
}

std::vector<std::vector<Cell>> enumerate_extremal_c4free(int m, int n, const SearchConfig& cfg) {
    check_dimensions(m, n, cfg.max_dimension, "extremal enumeration");
    Budget budget(cfg);
    auto c4 = collect_c4free(m, n, cfg, C4Search::Mode::Maximum, budget);
    if (!c4.exhaustive) throw GuardError("extremal enumeration ran out of budget");
    std::vector<std::vector<Cell>> out;
    for (auto& [_, cells] : c4.classes) out.push_back(std::move(cells));
    return out;
}

SearchResult max_augmentation(int m, int n, const std::vector<Cell>& e1, bool allow_e3, const SearchConfig& cfg) {
    if (m < 1 || n < 1 || m * n > 64) throw GuardError("augmentation search supports 1..64 cells");
    if (!is_c4_free(m, n, e1).passed) throw Error("E1 is not C4-free");
    AugmentedGraph base(m, n, e1);
    Budget budget(cfg);
    auto out = augment_all(m, n, {base.one_edges()}, allow_e3, cfg, budget, static_cast<int>(base.one_edges().size()));
    SearchResult r;
    r.statistic = allow_e3 ? Statistic::Z3L : Statistic::ZL;
    r.m = m;
    r.n = n;
    r.config = cfg;
    r.one_edge_classes = 1;
    r.value = out.best;
    r.augmentation = out.best - static_cast<int>(base.one_edges().size());
    r.witnesses = std::move(out.witnesses);
    r.exhaustive = out.exhaustive;
    r.nodes_explored = budget.nodes();
    r.seconds = budget.elapsed();
    return r;
}

SearchResult z_limited(int m, int n, const SearchConfig& cfg) { return limited(Statistic::ZL, m, n, false, cfg); }

SearchResult z3_limited(int m, int n, const SearchConfig& cfg) { return limited(Statistic::Z3L, m, n, true, cfg); }

SearchResult z3_full(int m, int n, const SearchConfig& cfg) {
    if (m < 1 || n < 1 || m * n > cfg.max_cells_full)
        throw GuardError("z3a: " + std::to_string(m) + "x" + std::to_string(n) + " exceeds the guard of " +
                         std::to_string(cfg.max_cells_full) + " cells");
    Budget budget(cfg);
    auto c4 = collect_c4free(m, n, cfg, C4Search::Mode::All, budget);

    std::vector<std::vector<Cell>> e1s;
    for (auto& [_, cells] : c4.classes) e1s.push_back(std::move(cells));
    // Dense E1 first: they tend to set a high bound early.
    std::stable_sort(e1s.begin(), e1s.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

    SearchResult r;
    r.statistic = Statistic::Z3A;
    r.m = m;
    r.n = n;
    r.config = cfg;
    r.one_edge_classes = e1s.size();

    WitnessSet witnesses(cfg.max_witnesses, 0);
    std::vector<std::pair<std::size_t, Partial>> tasks;
    for (std::size_t i = 0; i < e1s.size(); ++i) {
        AugmentSearch s(m, n, e1s[i], true, cfg, budget, witnesses);
        tasks.emplace_back(i, Partial{});
    }
    run_tasks(tasks.size(), effective_threads(cfg), [&](std::size_t t) {
        const auto& e1 = e1s[tasks[t].first];
        const int free_cells = m * n - static_cast<int>(e1.size());
        if (static_cast<int>(e1.size()) + free_cells / 2 < witnesses.best()) return;
        AugmentSearch s(m, n, e1, true, cfg, budget, witnesses);
        s.run(tasks[t].second);
    });

    r.witnesses = witnesses.graphs();
    r.value = r.witnesses.empty() ? 0 : static_cast<int>(r.witnesses.front().edge_count());
    r.augmentation = r.witnesses.empty()
                         ? 0
                         : static_cast<int>(r.witnesses.front().two_edges().size() + r.witnesses.front().three_edges().size());
    r.exhaustive = c4.exhaustive && !budget.stopped();
    r.nodes_explored = budget.nodes();
    r.seconds = budget.elapsed();
    ConditionOptions opts{cfg.reading, cfg.pair_constraints};
    for (const auto& w : r.witnesses)
        if (!all_passed(is_generalized_cycle_free(w, opts)))
            throw std::logic_error("search produced a witness that fails revalidation");
    annotate(r);
    return r;
}

SearchResult compute(Statistic s, int m, int n, const SearchConfig& cfg) {
    switch (s) {
        case Statistic::Z: return zarankiewicz(m, n, cfg);
        case Statistic::ZL: return z_limited(m, n, cfg);
        case Statistic::Z3L: return z3_limited(m, n, cfg);
        case Statistic::Z3A: return z3_full(m, n, cfg);
    }
    throw Error("unknown statistic");
}

}  // namespace zrk
