#include "gqs/linalg.hpp"

#include <cstddef>

namespace gqs {

std::optional<RatVector> solve_linear(RatMatrix a, RatVector b)
{
    const std::size_t m = a.size();
    if (m == 0 || m != b.size())
        return std::nullopt;
    const std::size_t n = a[0].size();

    std::vector<int> pivot_row_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col] == Rat(0))
            ++piv;
        if (piv == m)
            continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        const Rat inv = Rat(1) / a[row][col];
        for (std::size_t j = col; j < n; ++j)
            a[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == Rat(0))
                continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j < n; ++j)
                a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_row_of_col[col] = static_cast<int>(row);
        ++row;
    }

    // Consistency: zero rows must have zero rhs.
    for (std::size_t i = row; i < m; ++i)
        if (b[i] != Rat(0))
            return std::nullopt;
    // Uniqueness: every column must have a pivot.
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] < 0)
            return std::nullopt;

    RatVector x(n);
    for (std::size_t col = 0; col < n; ++col)
        x[col] = b[static_cast<std::size_t>(pivot_row_of_col[col])];
    return x;
}

int matrix_rank(RatMatrix a)
{
    const std::size_t m = a.size();
    if (m == 0)
        return 0;
    const std::size_t n = a[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col] == Rat(0))
            ++piv;
        if (piv == m)
            continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < m; ++i) {
            if (a[i][col] == Rat(0))
                continue;
            const Rat f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < n; ++j)
                a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int int_rank(const std::vector<std::vector<int>>& rows)
{
    RatMatrix a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        RatVector v;
        v.reserve(r.size());
        for (int x : r)
            v.emplace_back(x);
        a.push_back(std::move(v));
    }
    return matrix_rank(std::move(a));
}

} // namespace gqs
