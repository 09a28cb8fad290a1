#pragma once

#include <optional>
#include <vector>

#include "grat.hpp"

namespace psell {

using Vec = std::vector<GRat>;
using Mat = std::vector<std::vector<GRat>>;

// Incremental row space with exact Gaussian elimination. Rows are kept in
// echelon form keyed by leading column.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    // Reduces `row` against the current basis; if a nonzero remainder is
    // left it joins the basis. Returns true when the row was new.
    bool add(Vec row);
    // True iff the row reduces to zero against the basis.
    bool contains(Vec row) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(Vec& row) const;

    std::size_t cols_;
    // parallel arrays: rows_[k] has leading 1 at lead_[k]
    std::vector<Vec> rows_;
    std::vector<std::size_t> lead_;
};

// Pivot row indices (into the original matrix) of a maximal independent
// row set, in increasing order.
std::vector<int> independent_rows(const Mat& m);

int rank(const Mat& m);

// Coordinates of `target` in the span of `rows`, if it lies there.
std::optional<Vec> express_in_span(const Mat& rows, const Vec& target);

// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> mat_inverse(const Mat& a);

// Basis of the right null space {x : m x = 0}.
std::vector<Vec> null_space(const Mat& m);

GRat dot_conj(const Vec& a, const Vec& b);  // sum a_j conj(b_j)

}  // namespace psell
