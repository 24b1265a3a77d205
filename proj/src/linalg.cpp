#include "hq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hq::linalg {

std::vector<int> rref(const gf::Field& f, Matrix& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());

    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int pivot = -1;
        for (int r = row; r < nrows; ++r) {
            if (!f.is_zero(m[r][col])) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);

        gf::Element scale = f.inv(m[row][col]);
        for (int c = col; c < ncols; ++c) m[row][c] = f.mul(m[row][c], scale);

        for (int r = 0; r < nrows; ++r) {
            if (r == row || f.is_zero(m[r][col])) continue;
            gf::Element factor = m[r][col];
            for (int c = col; c < ncols; ++c)
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

int rank(const gf::Field& f, Matrix m) { return static_cast<int>(rref(f, m).size()); }

std::vector<Row> nullspace(const gf::Field& f, Matrix m, int ncols) {
    for (const auto& r : m)
        if (static_cast<int>(r.size()) != ncols)
            throw std::invalid_argument("row width does not match ncols");

    std::vector<int> pivot_cols = rref(f, m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_cols) is_pivot[c] = true;

    std::vector<Row> basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Row v(ncols, f.zero());
        v[free_col] = f.one();
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = f.neg(m[r][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hq::linalg
