#include "hcara/linalg.hpp"

#include "hcara/errors.hpp"

#include <utility>

namespace hcara {
namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Clears denominators row by row so Bareiss runs over the integers.
IntMatrix integer_rows(std::span<const RVector> vectors) {
    IntMatrix out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) {
        Integer scale = 1;
        for (const auto& c : v) scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(c)));
        std::vector<Integer> row;
        row.reserve(v.dim());
        for (const auto& c : v) {
            row.push_back(boost::multiprecision::numerator(c) * (scale / boost::multiprecision::denominator(c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// Solves a square nonsingular system by Gauss-Jordan elimination.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw InternalError("Gram matrix of independent rows is singular");
        std::swap(a[p], a[col]);
        std::swap(b[p], b[col]);
        const Rational inv = 1 / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

}  // namespace

std::size_t rank(std::span<const RVector> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t cols = vectors.front().dim();
    for (const auto& v : vectors) {
        if (v.dim() != cols) throw InputError("rank: vectors of different dimensions");
    }
    IntMatrix m = integer_rows(vectors);
    const std::size_t rows = m.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                if (t % prev != 0) throw InternalError("Bareiss step produced an inexact division");
                m[i][j] = t / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::optional<RVector> solve_linear(std::span<const RVector> rows, std::span<const Rational> rhs) {
    if (rows.size() != rhs.size()) throw InputError("solve_linear: row count differs from rhs length");
    if (rows.empty()) throw InputError("solve_linear: empty system has no dimension");
    const std::size_t dim = rows.front().dim();
    for (const auto& row : rows) {
        if (row.dim() != dim) throw InputError("solve_linear: rows of different dimensions");
    }

    std::vector<RVector> basis;
    std::vector<Rational> basis_rhs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        basis.push_back(rows[i]);
        if (rank(basis) < basis.size()) {
            basis.pop_back();
        } else {
            basis_rhs.push_back(rhs[i]);
        }
    }

    RVector x(dim);
    if (!basis.empty()) {
        std::vector<std::vector<Rational>> gram(basis.size(), std::vector<Rational>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i; j < basis.size(); ++j) {
                gram[i][j] = gram[j][i] = dot(basis[i], basis[j]);
            }
        }
        const auto y = solve_square(std::move(gram), basis_rhs);
        for (std::size_t i = 0; i < basis.size(); ++i) x += y[i] * basis[i];
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (dot(rows[i], x) != rhs[i]) return std::nullopt;
    }
    return x;
}

bool affinely_independent(std::span<const RVector> points) {
    if (points.size() <= 1) return true;
    std::vector<RVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    return rank(diffs) == diffs.size();
}

}  // namespace hcara
