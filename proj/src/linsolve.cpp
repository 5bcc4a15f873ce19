#include "liouville/linsolve.hpp"

namespace liouville {

std::optional<std::vector<SurdSum>> solve_linear(std::vector<std::vector<SurdSum>> a,
                                                 std::vector<SurdSum> b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t rank = 0;

    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        SurdSum inv = a[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (size_t row = 0; row < rows; ++row) {
            if (row == rank || a[row][col].is_zero()) continue;
            SurdSum f = a[row][col];
            for (size_t j = col; j < cols; ++j) a[row][j] -= f * a[rank][j];
            b[row] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t row = rank; row < rows; ++row)
        if (!b[row].is_zero()) return std::nullopt;

    std::vector<SurdSum> x(cols);
    for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace liouville
