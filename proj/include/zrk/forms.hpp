#pragma once

// Exact biquadratic forms  P(x,y) = sum a x_i x_k y_j y_l  and their sums of
// squares of bilinear forms. Types are templated on the scalar; the default
// aliases use arbitrary-precision integers.

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zrk/errors.hpp"
#include "zrk/exact_rank.hpp"
#include "zrk/graph.hpp"
#include "zrk/integer.hpp"

namespace zrk {

/// The monomial x_{row_lo} x_{row_hi} y_{col_lo} y_{col_hi}. Every index
/// tuple (i,j,k,l) naming the same monomial maps to the same key; in
/// particular the cell pairs {(i,j),(k,l)} and {(i,l),(k,j)} coincide.
struct MonomialKey {
    int row_lo = 0;
    int row_hi = 0;
    int col_lo = 0;
    int col_hi = 0;

    static MonomialKey of(const Cell& a, const Cell& b) {
        return {std::min(a.row, b.row), std::max(a.row, b.row), std::min(a.col, b.col),
                std::max(a.col, b.col)};
    }

    bool is_square() const { return row_lo == row_hi && col_lo == col_hi; }

    /// {(row_lo,col_lo),(row_hi,col_hi)}; the other pair is {(row_lo,col_hi),(row_hi,col_lo)}.
    std::array<Cell, 2> representative() const { return {Cell{row_lo, col_lo}, Cell{row_hi, col_hi}}; }

    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

template <typename Scalar>
class BasicBiquadraticForm {
public:
    using Terms = std::map<MonomialKey, Scalar>;

    BasicBiquadraticForm(int m, int n) : m_(m), n_(n) {
        if (m < 1 || n < 1) throw RangeError("form dimensions must be positive");
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Adds value to the coefficient of key; zero coefficients are erased.
    void add(const MonomialKey& key, const Scalar& value) {
        if (key.row_lo < 0 || key.row_hi >= m_ || key.col_lo < 0 || key.col_hi >= n_)
            throw RangeError("monomial outside the form's dimensions");
        if (value == Scalar(0)) return;
        auto [it, inserted] = terms_.try_emplace(key, value);
        if (!inserted) {
            it->second += value;
            if (it->second == Scalar(0)) terms_.erase(it);
        }
    }

    Scalar coefficient(const MonomialKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Coefficient of x_i x_k y_j y_l.
    Scalar coefficient(int i, int j, int k, int l) const {
        if (i < 0 || k < 0 || i >= m_ || k >= m_ || j < 0 || l < 0 || j >= n_ || l >= n_)
            throw RangeError("index out of range");
        return coefficient(MonomialKey::of(Cell{i, j}, Cell{k, l}));
    }

    template <typename X, typename Y>
    Scalar evaluate(const X& x, const Y& y) const {
        Scalar total(0);
        for (const auto& [k, v] : terms_)
            total += v * Scalar(x[k.row_lo]) * Scalar(x[k.row_hi]) * Scalar(y[k.col_lo]) * Scalar(y[k.col_hi]);
        return total;
    }

    BasicBiquadraticForm& operator+=(const BasicBiquadraticForm& other) {
        if (other.m_ != m_ || other.n_ != n_) throw DimensionMismatchError("adding forms of different dimensions");
        for (const auto& [k, v] : other.terms_) add(k, v);
        return *this;
    }

    friend BasicBiquadraticForm operator+(BasicBiquadraticForm a, const BasicBiquadraticForm& b) {
        a += b;
        return a;
    }

    friend bool operator==(const BasicBiquadraticForm&, const BasicBiquadraticForm&) = default;

private:
    int m_;
    int n_;
    Terms terms_;
};

/// g(x,y) = sum_{ij} c_ij x_i y_j as a dense m x n coefficient matrix.
template <typename Scalar>
class BasicBilinearForm {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

    BasicBilinearForm(int m, int n) : coeffs_(Matrix::Zero(m, n)) {
        if (m < 1 || n < 1) throw RangeError("form dimensions must be positive");
    }
    explicit BasicBilinearForm(Matrix coeffs) : coeffs_(std::move(coeffs)) {}

    /// Sum of x_i y_j over the given cells, each with coefficient 1.
    template <typename Cells>
    static BasicBilinearForm indicator(int m, int n, const Cells& cells) {
        BasicBilinearForm f(m, n);
        for (const Cell& c : cells) f.set(c, Scalar(1));
        return f;
    }

    int rows() const { return static_cast<int>(coeffs_.rows()); }
    int cols() const { return static_cast<int>(coeffs_.cols()); }

    const Scalar& at(const Cell& c) const { return coeffs_(c.row, c.col); }
    void set(const Cell& c, const Scalar& v) {
        if (c.row < 0 || c.row >= rows() || c.col < 0 || c.col >= cols())
            throw RangeError("cell " + to_string(c) + " outside the bilinear form");
        coeffs_(c.row, c.col) = v;
    }

    const Matrix& matrix() const { return coeffs_; }

    /// Row-major flattening (cell (i,j) at index i*n + j).
    RowVector flattened() const {
        RowVector v(coeffs_.size());
        for (Eigen::Index i = 0; i < coeffs_.rows(); ++i)
            for (Eigen::Index j = 0; j < coeffs_.cols(); ++j) v(i * coeffs_.cols() + j) = coeffs_(i, j);
        return v;
    }

    std::vector<std::pair<Cell, Scalar>> nonzeros() const {
        std::vector<std::pair<Cell, Scalar>> out;
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j)
                if (coeffs_(i, j) != Scalar(0)) out.emplace_back(Cell{i, j}, coeffs_(i, j));
        return out;
    }

    bool is_zero() const { return nonzeros().empty(); }

    friend bool operator==(const BasicBilinearForm& a, const BasicBilinearForm& b) {
        return a.coeffs_.rows() == b.coeffs_.rows() && a.coeffs_.cols() == b.coeffs_.cols() &&
               a.coeffs_ == b.coeffs_;
    }

private:
    Matrix coeffs_;
};

template <typename Scalar>
class BasicSosDecomposition {
public:
    using Form = BasicBilinearForm<Scalar>;

    BasicSosDecomposition(int m, int n, std::vector<Form> forms = {}) : m_(m), n_(n), forms_(std::move(forms)) {
        for (const auto& f : forms_) check(f);
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    const std::vector<Form>& forms() const { return forms_; }
    std::size_t size() const { return forms_.size(); }
    bool empty() const { return forms_.empty(); }

    void push_back(Form f) {
        check(f);
        forms_.push_back(std::move(f));
    }

    /// One row per form: the r x (m n) matrix of flattened coefficients.
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> stacked() const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s(static_cast<Eigen::Index>(forms_.size()),
                                                                 static_cast<Eigen::Index>(m_) * n_);
        for (std::size_t t = 0; t < forms_.size(); ++t) s.row(static_cast<Eigen::Index>(t)) = forms_[t].flattened();
        return s;
    }

private:
    void check(const Form& f) const {
        if (f.rows() != m_ || f.cols() != n_)
            throw DimensionMismatchError("bilinear form is " + std::to_string(f.rows()) + "x" +
                                         std::to_string(f.cols()) + ", decomposition is " + std::to_string(m_) +
                                         "x" + std::to_string(n_));
    }

    int m_;
    int n_;
    std::vector<Form> forms_;
};

using BiquadraticForm = BasicBiquadraticForm<Integer>;
using BilinearForm = BasicBilinearForm<Integer>;
using SosDecomposition = BasicSosDecomposition<Integer>;

/// Sum of squares, expanded exactly.
template <typename Scalar>
BasicBiquadraticForm<Scalar> expand(const BasicSosDecomposition<Scalar>& d) {
    BasicBiquadraticForm<Scalar> out(d.rows(), d.cols());
    for (const auto& f : d.forms()) {
        auto nz = f.nonzeros();
        for (std::size_t p = 0; p < nz.size(); ++p) {
            out.add(MonomialKey::of(nz[p].first, nz[p].first), nz[p].second * nz[p].second);
            for (std::size_t q = p + 1; q < nz.size(); ++q)
                out.add(MonomialKey::of(nz[p].first, nz[q].first), Scalar(2) * nz[p].second * nz[q].second);
        }
    }
    return out;
}

namespace detail {

inline void require_simple(const AugmentedGraph& g) {
    if (!is_simple(g))
        throw SimplicityError("graph is not simple: " + to_string(repeated_cells(g).front()) +
                              " appears in more than one edge");
}

template <typename Scalar, typename Cells>
void add_square_of_sum(BasicBiquadraticForm<Scalar>& f, const Cells& cells) {
    for (std::size_t p = 0; p < cells.size(); ++p) {
        f.add(MonomialKey::of(cells[p], cells[p]), Scalar(1));
        for (std::size_t q = p + 1; q < cells.size(); ++q) f.add(MonomialKey::of(cells[p], cells[q]), Scalar(2));
    }
}

}  // namespace detail

/// P_G: x_i^2 y_j^2 for each 1-edge plus the square of the sum over each 2- and 3-edge.
template <typename Scalar = Integer>
BasicBiquadraticForm<Scalar> build_form(const AugmentedGraph& g) {
    detail::require_simple(g);
    BasicBiquadraticForm<Scalar> f(g.rows(), g.cols());
    for (const auto& c : g.one_edges()) f.add(MonomialKey::of(c, c), Scalar(1));
    for (const auto& e : g.two_edges()) detail::add_square_of_sum(f, e.cells());
    for (const auto& e : g.three_edges()) detail::add_square_of_sum(f, e.cells());
    return f;
}

/// One bilinear form per edge: 1-edges, then 2-edges, then 3-edges, each in sorted order.
template <typename Scalar = Integer>
BasicSosDecomposition<Scalar> canonical_decomposition(const AugmentedGraph& g, bool allow_empty = false) {
    detail::require_simple(g);
    if (g.empty() && !allow_empty) throw Error("canonical decomposition of an empty graph");
    using Form = BasicBilinearForm<Scalar>;
    BasicSosDecomposition<Scalar> d(g.rows(), g.cols());
    for (const auto& c : g.one_edges()) d.push_back(Form::indicator(g.rows(), g.cols(), std::array<Cell, 1>{c}));
    for (const auto& e : g.two_edges()) d.push_back(Form::indicator(g.rows(), g.cols(), e.cells()));
    for (const auto& e : g.three_edges()) d.push_back(Form::indicator(g.rows(), g.cols(), e.cells()));
    return d;
}

/// Rank over Q of the flattened bilinear forms.
template <typename Scalar>
Eigen::Index independent_rank(const BasicSosDecomposition<Scalar>& d) {
    if (d.empty()) return 0;
    return bareiss_rank(d.stacked());
}

/// Plain-text rendering, e.g. "x1^2 y1^2 + 2 x1 x2 y1 y2" (1-based indices).
template <typename Scalar>
std::string to_text(const BasicBiquadraticForm<Scalar>& f) {
    if (f.terms().empty()) return "0";
    auto pair = [](char var, int lo, int hi) {
        std::string a = std::string(1, var) + std::to_string(lo + 1);
        if (lo == hi) return a + "^2";
        return a + " " + var + std::to_string(hi + 1);
    };
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : f.terms()) {
        Scalar mag = v < Scalar(0) ? Scalar(-v) : v;
        if (first)
            out << (v < Scalar(0) ? "-" : "");
        else
            out << (v < Scalar(0) ? " - " : " + ");
        if (mag != Scalar(1)) out << mag << " ";
        out << pair('x', k.row_lo, k.row_hi) << " " << pair('y', k.col_lo, k.col_hi);
        first = false;
    }
    return out.str();
}

}  // namespace zrk
