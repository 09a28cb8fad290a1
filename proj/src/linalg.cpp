#include "linalg.hpp"

#include <algorithm>

namespace psell {

void RowSpace::reduce(Vec& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const GRat& c = row[lead_[k]];
        if (c.is_zero()) continue;
        GRat f = c;  // basis rows have leading coefficient 1
        for (std::size_t j = lead_[k]; j < cols_; ++j) row[j] -= f * rows_[k][j];
    }
}

bool RowSpace::add(Vec row) {
    if (row.size() != cols_) throw Error("row space: wrong arity");
    reduce(row);
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!row[j].is_zero()) {
            lead = j;
            break;
        }
    }
    if (lead == cols_) return false;
    GRat inv = row[lead].inverse();
    for (std::size_t j = lead; j < cols_; ++j) row[j] *= inv;
    // keep echelon rows sorted by leading column
    std::size_t pos = 0;
    while (pos < lead_.size() && lead_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(row));
    lead_.insert(lead_.begin() + static_cast<long>(pos), lead);
    // re-reduce earlier rows against the new one for full echelon
    for (std::size_t k = 0; k < pos; ++k) {
        GRat f = rows_[k][lead];
        if (f.is_zero()) continue;
        for (std::size_t j = lead; j < cols_; ++j) rows_[k][j] -= f * rows_[pos][j];
    }
    return true;
}

bool RowSpace::contains(Vec row) const {
    if (row.size() != cols_) throw Error("row space: wrong arity");
    reduce(row);
    return std::all_of(row.begin(), row.end(), [](const GRat& c) { return c.is_zero(); });
}

std::vector<int> independent_rows(const Mat& m) {
    std::vector<int> out;
    if (m.empty()) return out;
    RowSpace space(m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        if (space.add(m[i])) out.push_back(static_cast<int>(i));
    return out;
}

int rank(const Mat& m) { return static_cast<int>(independent_rows(m).size()); }

std::optional<Vec> express_in_span(const Mat& rows, const Vec& target) {
    if (rows.empty()) {
        for (const GRat& c : target)
            if (!c.is_zero()) return std::nullopt;
        return Vec{};
    }
    std::size_t cols = rows[0].size();
    Mat sys;  // unknowns x_i with sum_i x_i rows[i] = target
    for (std::size_t j = 0; j < cols; ++j) {
        Vec eq(rows.size() + 1, GRat(0));
        for (std::size_t i = 0; i < rows.size(); ++i) eq[i] = rows[i][j];
        eq[rows.size()] = target[j];
        sys.push_back(std::move(eq));
    }
    // Gaussian elimination on sys (unknowns = coefficients).
    std::size_t nvar = rows.size();
    std::size_t row_at = 0;
    std::vector<int> pivot_of_var(nvar, -1);
    for (std::size_t v = 0; v < nvar && row_at < sys.size(); ++v) {
        std::size_t p = row_at;
        while (p < sys.size() && sys[p][v].is_zero()) ++p;
        if (p == sys.size()) continue;
        std::swap(sys[p], sys[row_at]);
        GRat inv = sys[row_at][v].inverse();
        for (std::size_t j = v; j <= nvar; ++j) sys[row_at][j] *= inv;
        for (std::size_t i = 0; i < sys.size(); ++i) {
            if (i == row_at || sys[i][v].is_zero()) continue;
            GRat f = sys[i][v];
            for (std::size_t j = v; j <= nvar; ++j) sys[i][j] -= f * sys[row_at][j];
        }
        pivot_of_var[v] = static_cast<int>(row_at);
        ++row_at;
    }
    for (std::size_t i = row_at; i < sys.size(); ++i)
        if (!sys[i][nvar].is_zero()) return std::nullopt;
    Vec coeffs(nvar, GRat(0));
    for (std::size_t v = 0; v < nvar; ++v)
        if (pivot_of_var[v] >= 0) coeffs[v] = sys[pivot_of_var[v]][nvar];
    return coeffs;
}

std::optional<Mat> mat_inverse(const Mat& a) {
    std::size_t n = a.size();
    Mat work = a;
    Mat inv(n, Vec(n, GRat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error("mat_inverse: not square");
        inv[i][i] = GRat(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && work[p][col].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(work[p], work[col]);
        std::swap(inv[p], inv[col]);
        GRat f = work[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work[col][j] *= f;
            inv[col][j] *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col].is_zero()) continue;
            GRat g = work[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                work[i][j] -= g * work[col][j];
                inv[i][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<Vec> null_space(const Mat& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    Mat work = m;
    std::vector<int> pivot_col;
    std::size_t row_at = 0;
    for (std::size_t col = 0; col < cols && row_at < work.size(); ++col) {
        std::size_t p = row_at;
        while (p < work.size() && work[p][col].is_zero()) ++p;
        if (p == work.size()) continue;
        std::swap(work[p], work[row_at]);
        GRat f = work[row_at][col].inverse();
        for (std::size_t j = col; j < cols; ++j) work[row_at][j] *= f;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == row_at || work[i][col].is_zero()) continue;
            GRat g = work[i][col];
            for (std::size_t j = col; j < cols; ++j) work[i][j] -= g * work[row_at][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row_at;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, GRat(0));
        v[free_col] = GRat(1);
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -work[k][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

GRat dot_conj(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("dot_conj: arity mismatch");
    GRat acc(0);
    for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j].conj();
    return acc;
}

}  // namespace psell
