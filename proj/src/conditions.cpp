#include "zrk/conditions.hpp"

#include <algorithm>

#include "zrk/errors.hpp"

namespace zrk {

std::string to_string(Condition c) {
    switch (c) {
        case Condition::Simplicity: return "Simplicity";
        case Condition::NonDegeneracy: return "NonDegeneracy";
        case Condition::C4Free: return "C4Free";
        case Condition::TwoEdgeRestriction: return "TwoEdgeRestriction";
        case Condition::ThreeEdgeSaturation: return "ThreeEdgeSaturation";
        case Condition::ThreeEdgeExtension: return "ThreeEdgeExtension";
        case Condition::PairConstraint: return "PairConstraint";
    }
    return "?";
}

namespace {

bool contains(const std::vector<Cell>& sorted, const Cell& c) {
    return std::binary_search(sorted.begin(), sorted.end(), c);
}

// Cells counted by the first clause of the 2-edge restriction.
std::vector<Cell> restriction_cells(const AugmentedGraph& g, Condition2Reading reading) {
    if (reading == Condition2Reading::Occupancy) return occupied_cells(g);
    std::vector<Cell> cells = g.one_edges();
    for (const auto& e : g.two_edges()) cells.insert(cells.end(), e.cells().begin(), e.cells().end());
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

const Edge3* common_three_edge(const AugmentedGraph& g, const Cell& a, const Cell& b) {
    for (const auto& t : g.three_edges())
        if (t.contains(a) && t.contains(b)) return &t;
    return nullptr;
}

std::vector<Cell> cells_of(const Edge3& e) { return {e.cells().begin(), e.cells().end()}; }

void require_member(const AugmentedGraph& g, const Edge3& e) {
    if (!g.has_three_edge(e)) throw EdgeNotInGraphError("3-edge " + to_string(e) + " is not in the graph");
}

}  // namespace

ConditionReport is_c4_free(int m, int n, const std::vector<Cell>& e1) {
    ConditionReport rep{Condition::C4Free};
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(n)));
    for (const auto& c : e1) {
        if (c.row < 0 || c.row >= m || c.col < 0 || c.col >= n)
            throw RangeError("cell " + to_string(c) + " outside the grid");
        adj[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = true;
    }
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            std::vector<int> shared;
            for (int k = 0; k < n; ++k)
                if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] &&
                    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)])
                    shared.push_back(k);
            if (shared.size() >= 2) {
                Witness w;
                w.rows = {a, b};
                w.cols = {shared[0], shared[1]};
                w.cells = {{a, shared[0]}, {a, shared[1]}, {b, shared[0]}, {b, shared[1]}};
                w.description = "rows " + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                " share columns " + std::to_string(shared[0] + 1) + "," +
                                std::to_string(shared[1] + 1);
                rep.passed = false;
                rep.witness = std::move(w);
                rep.detail = rep.witness->description;
                return rep;
            }
        }
    }
    rep.detail = "no two rows share two columns";
    return rep;
}

ConditionReport check_2edge(const AugmentedGraph& g, const Edge2& e, const ConditionOptions& opts) {
    if (!g.has_two_edge(e)) throw EdgeNotInGraphError("2-edge " + to_string(e) + " is not in the graph");
    ConditionReport rep{Condition::TwoEdgeRestriction};
    rep.subject = {e.first(), e.second()};
    auto opp = e.opposite_cells();
    if (!opp) {
        rep.vacuous = true;
        rep.detail = "degenerate 2-edge; the restriction applies to nondegenerate 2-edges only";
        return rep;
    }
    const auto [p, q] = *opp;
    auto counted = restriction_cells(g, opts.reading);
    if (contains(counted, p) && contains(counted, q)) {
        rep.passed = false;
        rep.witness = Witness{{p, q}, {}, {}, "both opposite cells are occupied"};
        rep.detail = "opposite cells " + to_string(p) + " and " + to_string(q) + " are both " +
                     (opts.reading == Condition2Reading::Literal ? "in E1 or halves of 2-edges"
                                                                  : "occupied");
        return rep;
    }
    if (const auto* t = common_three_edge(g, p, q)) {
        rep.passed = false;
        rep.witness = Witness{{p, q}, {}, {}, "opposite cells are halves of the same 3-edge"};
        rep.detail = "opposite cells " + to_string(p) + " and " + to_string(q) +
                     " are halves of 3-edge " + to_string(*t);
        return rep;
    }
    rep.detail = "opposite cells " + to_string(p) + ", " + to_string(q) + ": at most one counted";
    return rep;
}

ConditionReport check_3edge_saturation(const AugmentedGraph& g, const Edge3& e) {
    require_member(g, e);
    ConditionReport rep{Condition::ThreeEdgeSaturation};
    rep.subject = cells_of(e);
    auto occ = occupied_cells(g);
    auto sat = e.saturation_set();
    std::vector<Cell> free;
    for (const auto& c : sat)
        if (!contains(occ, c)) free.push_back(c);
    if (free.empty()) {
        rep.passed = false;
        rep.witness = Witness{{sat.begin(), sat.end()}, {}, {}, "all six cells of O are occupied"};
        rep.detail = "all six cells of O are occupied";
        return rep;
    }
    rep.detail = std::to_string(6 - free.size()) + " of 6 cells of O occupied; " + to_string(free.front()) +
                 " is free";
    return rep;
}

ConditionReport check_3edge_extension(const AugmentedGraph& g, const Edge3& e) {
    require_member(g, e);
    ConditionReport rep{Condition::ThreeEdgeExtension};
    rep.subject = cells_of(e);
    auto occ = occupied_cells(g);
    auto sat = e.saturation_set();
    auto free_it = std::find_if(sat.begin(), sat.end(), [&](const Cell& c) { return !contains(occ, c); });
    if (free_it != sat.end()) {
        rep.vacuous = true;
        rep.detail = "vacuous: " + to_string(*free_it) + " in O is unoccupied";
        return rep;
    }
    for (const auto& c : occ) {
        if (e.spans(c)) continue;
        rep.passed = false;
        Witness w{{sat.begin(), sat.end()}, {}, {}, "O and an outside cell are all occupied"};
        w.cells.push_back(c);
        rep.witness = std::move(w);
        rep.detail = "O is fully occupied and so is " + to_string(c) + " outside R x C";
        return rep;
    }
    rep.detail = "O is fully occupied but no occupied cell lies outside R x C";
    return rep;
}

ConditionReport check_simplicity(const AugmentedGraph& g) {
    ConditionReport rep{Condition::Simplicity};
    auto rep_cells = repeated_cells(g);
    if (!rep_cells.empty()) {
        rep.passed = false;
        rep.witness = Witness{rep_cells, {}, {}, "cells appearing in more than one edge"};
        rep.detail = to_string(rep_cells.front()) + " appears in more than one edge";
        return rep;
    }
    rep.detail = "no cell appears in more than one edge";
    return rep;
}

ConditionReport check_nondegeneracy(const AugmentedGraph& g) {
    // Edge3 rejects repeated rows or columns at construction; this re-checks
    // the invariant on the stored edges.
    ConditionReport rep{Condition::NonDegeneracy};
    for (const auto& e : g.three_edges()) {
        auto r = e.rows();
        auto k = e.cols();
        if (r[0] == r[1] || r[1] == r[2] || k[0] == k[1] || k[1] == k[2]) {
            rep.passed = false;
            rep.subject = cells_of(e);
            rep.witness = Witness{cells_of(e), {}, {}, "repeated row or column"};
            return rep;
        }
    }
    rep.detail = std::to_string(g.three_edges().size()) + " 3-edges, each with six distinct indices";
    return rep;
}

std::vector<ConditionReport> is_generalized_cycle_free(const AugmentedGraph& g, const ConditionOptions& opts) {
    std::vector<ConditionReport> out;
    out.push_back(check_simplicity(g));
    out.push_back(check_nondegeneracy(g));
    out.push_back(is_c4_free(g.rows(), g.cols(), g.one_edges()));
    for (const auto& e : g.two_edges()) out.push_back(check_2edge(g, e, opts));
    for (const auto& e : g.three_edges()) {
        out.push_back(check_3edge_saturation(g, e));
        out.push_back(check_3edge_extension(g, e));
    }
    if (!opts.pair_constraints.empty()) {
        const auto& e2 = g.two_edges();
        for (std::size_t i = 0; i < e2.size(); ++i) {
            for (std::size_t j = i + 1; j < e2.size(); ++j) {
                ConditionReport rep{Condition::PairConstraint};
                rep.subject = {e2[i].first(), e2[i].second(), e2[j].first(), e2[j].second()};
                for (const auto& rule : opts.pair_constraints) {
                    if (!rule(g, e2[i], e2[j])) {
                        rep.passed = false;
                        rep.witness = Witness{rep.subject, {}, {}, "pair constraint rejected"};
                        rep.detail = to_string(e2[i]) + " and " + to_string(e2[j]) + " rejected by a pair constraint";
                        break;
                    }
                }
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

bool all_passed(const std::vector<ConditionReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

bool replay_witness(const AugmentedGraph& g, const ConditionReport& report, const ConditionOptions& opts) {
    if (report.passed || !report.witness) return false;
    const auto& w = *report.witness;
    auto occ = occupied_cells(g);
    auto all_occupied = [&](auto first, auto last) {
        return std::all_of(first, last, [&](const Cell& c) { return contains(occ, c); });
    };
    switch (report.condition) {
        case Condition::Simplicity: {
            auto list = g.cell_list();
            return !w.cells.empty() && std::all_of(w.cells.begin(), w.cells.end(), [&](const Cell& c) {
                return std::count(list.begin(), list.end(), c) >= 2;
            });
        }
        case Condition::NonDegeneracy:
            return w.cells.size() == 3;
        case Condition::C4Free: {
            if (w.rows.size() != 2 || w.cols.size() != 2 || w.rows[0] == w.rows[1] || w.cols[0] == w.cols[1])
                return false;
            const auto& e1 = g.one_edges();
            for (int r : w.rows)
                for (int k : w.cols)
                    if (!contains(e1, Cell{r, k})) return false;
            return true;
        }
        case Condition::TwoEdgeRestriction: {
            if (report.subject.size() != 2 || w.cells.size() != 2) return false;
            Edge2 e(report.subject[0], report.subject[1]);
            if (!g.has_two_edge(e)) return false;
            auto opp = e.opposite_cells();
            if (!opp) return false;
            std::vector<Cell> expect{(*opp)[0], (*opp)[1]};
            std::vector<Cell> got = w.cells;
            std::sort(expect.begin(), expect.end());
            std::sort(got.begin(), got.end());
            if (expect != got) return false;
            auto counted = restriction_cells(g, opts.reading);
            bool both = contains(counted, got[0]) && contains(counted, got[1]);
            return both || common_three_edge(g, got[0], got[1]) != nullptr;
        }
        case Condition::ThreeEdgeSaturation:
        case Condition::ThreeEdgeExtension: {
            if (report.subject.size() != 3) return false;
            Edge3 e(report.subject[0], report.subject[1], report.subject[2]);
            if (!g.has_three_edge(e)) return false;
            auto sat = e.saturation_set();
            bool extension = report.condition == Condition::ThreeEdgeExtension;
            if (w.cells.size() != (extension ? 7u : 6u)) return false;
            if (!std::is_permutation(sat.begin(), sat.end(), w.cells.begin())) return false;
            if (!all_occupied(w.cells.begin(), w.cells.end())) return false;
            return !extension || !e.spans(w.cells.back());
        }
        case Condition::PairConstraint: {
            if (report.subject.size() != 4) return false;
            Edge2 a(report.subject[0], report.subject[1]);
            Edge2 b(report.subject[2], report.subject[3]);
            return std::any_of(opts.pair_constraints.begin(), opts.pair_constraints.end(),
                               [&](const auto& rule) { return !rule(g, a, b); });
        }
    }
    return false;
}

}  // namespace zrk
