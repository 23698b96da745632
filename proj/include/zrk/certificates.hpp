#pragma once

// Rank certificates for triply simple forms, exact Gram-pattern checks on
// vector assignments, and the finite checks behind the 5x5 form Q and the
// 6x4 orthogonality replay.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "zrk/builtins.hpp"
#include "zrk/conditions.hpp"
#include "zrk/forms.hpp"
#include "zrk/graph.hpp"

namespace zrk {

/// v_ij = (c_ij^(1), ..., c_ij^(r)): row i*n + j of an (m n) x r matrix.
/// Cells absent from every form get the zero vector.
template <typename Scalar>
class BasicVectorAssignment {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

    explicit BasicVectorAssignment(const BasicSosDecomposition<Scalar>& d)
        : m_(d.rows()), n_(d.cols()), columns_(d.stacked().transpose()) {}

    int rows() const { return m_; }
    int cols() const { return n_; }
    Eigen::Index dimension() const { return columns_.cols(); }
    const Matrix& matrix() const { return columns_; }

    RowVector vector(const Cell& c) const { return columns_.row(index(c)); }

    Scalar dot(const Cell& a, const Cell& b) const {
        Scalar s(0);
        for (Eigen::Index t = 0; t < columns_.cols(); ++t) s += columns_(index(a), t) * columns_(index(b), t);
        return s;
    }

private:
    Eigen::Index index(const Cell& c) const {
        if (c.row < 0 || c.row >= m_ || c.col < 0 || c.col >= n_)
            throw RangeError("cell " + to_string(c) + " outside the vector assignment");
        return static_cast<Eigen::Index>(c.row) * n_ + c.col;
    }

    int m_;
    int n_;
    Matrix columns_;
};

using VectorAssignment = BasicVectorAssignment<Integer>;

struct GramViolation {
    Cell a;
    Cell b;
    Integer expected;
    Integer actual;
};

struct GramReport {
    /// Norm 1 on occupied cells, 1 between cells of one edge, 0 between all
    /// other occupied pairs.
    bool strict_pattern = true;
    /// Coefficient identities: |v_ij|^2, 2 v_ij.v_il, 2 v_ij.v_kj and
    /// 2 (v_ij.v_kl + v_il.v_kj) match the coefficients of P_G.
    bool sum_relations = true;
    std::size_t pairs_checked = 0;
    std::vector<GramViolation> violations;      // strict pattern
    std::vector<MonomialKey> relation_failures;  // sum relations
};

/// Throws ExpansionMismatchError unless expand(d) == build_form(g).
GramReport check_gram_pattern(const AugmentedGraph& g, const SosDecomposition& d);

struct RankCertificate {
    AugmentedGraph graph;
    Condition2Reading reading = Condition2Reading::Literal;
    bool valid = false;
    std::optional<std::size_t> claimed_rank;  // absent unless valid
    std::vector<ConditionReport> reports;
    std::size_t edge_count = 0;
    std::size_t decomposition_rank = 0;
    bool expansion_verified = false;
    bool strict_gram_pattern = false;
    std::string hash;  // SHA-256 of the canonical graph serialization
    std::vector<std::string> notes;
};

RankCertificate certify_sos_rank(const AugmentedGraph& g, const ConditionOptions& opts = {});

struct Q55Report {
    bool expansion_equal = false;
    std::size_t independent_rank = 0;
    std::size_t base_dimension = 0;    // rank of the forms of the base graph
    bool forced_equalities = false;    // w22 = w44 = w53 in the exhibited decomposition
    bool triple_unit = false;          // |u| = 1
    bool orthogonal_to_base = false;   // u . v = 0 for every occupied base cell
    bool outside_base = false;         // base forms plus u have rank base_dimension + 1
    bool base_certified = false;       // the base graph passes the rank certificate
    std::size_t base_certified_rank = 0;

    bool passed() const {
        return expansion_equal && independent_rank == 15 && base_dimension == 14 && forced_equalities &&
               triple_unit && orthogonal_to_base && outside_base && base_certified;
    }
};

Q55Report verify_q55();

/// Per 3-edge: the shared vector u of its halves.
struct ThreeEdgeVector {
    Edge3 edge;
    bool halves_equal = false;
    Integer norm_squared;
    std::vector<Integer> u;
};

struct OrthogonalityReplay {
    std::vector<ThreeEdgeVector> triples;
    std::vector<Integer> cross_dots;  // u_a . u_b over pairs a < b
    std::size_t base_cells = 0;       // E1 cells and 2-edge halves
    std::size_t base_vectors = 0;     // distinct base vectors
    std::size_t base_rank = 0;
    bool orthogonal_to_base = false;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Replays, on the vector assignment of d, the facts used for graphs with
/// 3-edges: equal unit vectors on the halves of each 3-edge, mutual
/// orthogonality, and orthogonality to every base vector.
OrthogonalityReplay replay_three_edge_orthogonality(const AugmentedGraph& g, const SosDecomposition& d);

}  // namespace zrk
