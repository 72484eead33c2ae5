#ifndef LEXIDEAL_LINALG_HPP
#define LEXIDEAL_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"

namespace lexideal {

// Solve the square system M c = rhs by exact Gaussian elimination, pivoting
// on the first nonzero entry of each column. Throws on singular systems.
template <class K>
std::vector<K> solve_square(std::vector<std::vector<K>> M, std::vector<K> rhs) {
    const std::size_t k = M.size();
    if (k == 0)
        return {};
    if (rhs.size() != k)
        throw ValidationError("system dimensions disagree");
    for (const auto& row : M)
        if (row.size() != k)
            throw ValidationError("system matrix is not square");

    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = k;
        for (std::size_t r = col; r < k; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == k)
            throw InternalError("singular interpolation system");
        std::swap(M[col], M[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || M[r][col].is_zero())
                continue;
            const K f = M[r][col] / M[col][col];
            for (std::size_t c = col; c < k; ++c)
                M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<K> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(rhs[i] / M[i][i]);
    return out;
}

} // namespace lexideal

#endif // LEXIDEAL_LINALG_HPP
