#ifndef CFIRE_LINALG_HPP
#define CFIRE_LINALG_HPP

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cfire {

using Rational = boost::rational<std::int64_t>;
using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace linalg {

// Compare against these, not int literals: boost::rational<int64_t> == int recurses.
inline const Rational kZero(0);
inline const Rational kOne(1);

inline RMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m) {
    RMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].assign(m[i].begin(), m[i].end());
    }
    return out;
}

/// Reduced row-echelon form of the given rows, zero rows dropped.
/// The result is canonical: two row sets span the same subspace iff their
/// reduced forms compare equal.
inline RMatrix rref(RMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols && lead_row < rows.size(); ++c) {
        std::size_t pivot = lead_row;
        while (pivot < rows.size() && rows[pivot][c] == kZero) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[lead_row]);
        const Rational inv = Rational(1) / rows[lead_row][c];
        for (auto& x : rows[lead_row]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead_row || rows[r][c] == kZero) continue;
            const Rational f = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[lead_row][k];
        }
        ++lead_row;
    }
    rows.resize(lead_row);
    return rows;
}

inline std::size_t rank(const RMatrix& rows) { return rref(rows).size(); }

inline Rational determinant(RMatrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == kZero) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == kZero) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

inline RMatrix inverse(const RMatrix& m) {
    const std::size_t n = m.size();
    RMatrix aug(n, RVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    aug = rref(std::move(aug));
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i][i] != kOne) throw InvalidArgument("matrix is singular");
    }
    RMatrix inv(n, RVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    }
    return inv;
}

} // namespace linalg
} // namespace cfire

#endif // CFIRE_LINALG_HPP
