#pragma once

// Fraction-free (Bareiss) elimination for exact rank over the rationals.
//
// Every intermediate entry is a minor of the input, so the division by the
// previous pivot is exact and no fractions appear. Pivot choice is
// deterministic: leftmost column with a nonzero entry at or below the
// current row, topmost such row.

#include <Eigen/Core>
#include <utility>

namespace zrk {

template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();

    Scalar prev(1);
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = rank;
        while (pivot < rows && a(pivot, c) == Scalar(0)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) a.row(pivot).swap(a.row(rank));

        const Scalar p = a(rank, c);
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            const Scalar lead = a(i, c);
            for (Eigen::Index j = c + 1; j < cols; ++j)
                a(i, j) = (p * a(i, j) - lead * a(rank, j)) / prev;
            a(i, c) = Scalar(0);
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace zrk
