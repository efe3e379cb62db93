#include "gkm/linalg.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <utility>

namespace gkm::linalg {

namespace {

void check_width(const auto& m, std::size_t cols) {
    for (const auto& row : m) {
        if (row.size() != cols) throw DimensionMismatch("matrix row has wrong length");
    }
}

std::size_t leading_column(const IntVector& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) return j;
    }
    return row.size();
}

// q = floor(a / b) for b > 0 or b < 0.
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix clear_denominators(const RatMatrix& m) {
    IntMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Integer l = common_denominator(row);
        IntVector scaled;
        scaled.reserve(row.size());
        for (const auto& q : row) {
            Rational s = q * l;
            scaled.push_back(s.get_num());
        }
        out.push_back(std::move(scaled));
    }
    return out;
}

Echelon bareiss_echelon(IntMatrix m, std::size_t cols) {
    check_width(m, cols);
    Echelon out;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

ReducedEchelon reduced_row_echelon(const RatMatrix& m, std::size_t cols) {
    check_width(m, cols);
    Echelon ech = bareiss_echelon(clear_denominators(m), cols);
    ReducedEchelon out;
    out.pivots = ech.pivots;
    out.rows.reserve(ech.rows.size());
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        const Integer& piv = ech.rows[i][ech.pivots[i]];
        RatVector row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = make_rational(ech.rows[i][j], piv);
        out.rows.push_back(std::move(row));
    }
    for (std::size_t i = out.rows.size(); i-- > 0;) {
        const std::size_t pc = out.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = out.rows[k][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < cols; ++j) out.rows[k][j] -= f * out.rows[i][j];
        }
    }
    return out;
}

std::size_t rank(const RatMatrix& m, std::size_t cols) {
    return bareiss_echelon(clear_denominators(m), cols).rows.size();
}

RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
    ReducedEchelon rref = reduced_row_echelon(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : rref.pivots) is_pivot[p] = true;

    RatMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rref.rows.size(); ++i) v[rref.pivots[i]] = -rref.rows[i][f];
        basis.push_back(std::move(v));
    }
    return reduced_row_echelon(basis, cols).rows;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs, std::size_t cols) {
    if (rhs.size() != m.size()) throw DimensionMismatch("right-hand side length differs from row count");
    RatMatrix augmented = m;
    for (std::size_t i = 0; i < m.size(); ++i) augmented[i].push_back(rhs[i]);
    ReducedEchelon rref = reduced_row_echelon(augmented, cols + 1);
    RatVector x(cols);
    for (std::size_t i = 0; i < rref.rows.size(); ++i) {
        if (rref.pivots[i] == cols) return std::nullopt;
        x[rref.pivots[i]] = rref.rows[i][cols];
    }
    return x;
}

IntMatrix integer_kernel(const IntMatrix& m, std::size_t cols) {
    check_width(m, cols);
    IntMatrix a = m;
    // u holds the accumulated unimodular column operations, stored by column.
    IntMatrix u(cols, IntVector(cols));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (auto& row : a) std::swap(row[x], row[y]);
        std::swap(u[x], u[y]);
    };
    auto sub_col = [&](std::size_t target, std::size_t source, const Integer& q) {
        for (auto& row : a) row[target] -= q * row[source];
        for (std::size_t k = 0; k < cols; ++k) u[target][k] -= q * u[source][k];
    };

    std::size_t p = 0;
    for (std::size_t r = 0; r < a.size() && p < cols; ++r) {
        while (true) {
            // Smallest nonzero magnitude in row r among columns p.. becomes the pivot.
            std::size_t best = cols;
            for (std::size_t j = p; j < cols; ++j) {
                if (a[r][j] != 0 && (best == cols || abs(a[r][j]) < abs(a[r][best]))) best = j;
            }
            if (best == cols) break;
            swap_cols(p, best);
            bool reduced = true;
            for (std::size_t j = p + 1; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                sub_col(j, p, floor_div(a[r][j], a[r][p]));
                if (a[r][j] != 0) reduced = false;
            }
            if (reduced) {
                ++p;
                break;
            }
        }
    }
    IntMatrix kernel(u.begin() + static_cast<std::ptrdiff_t>(p), u.end());
    return kernel;
}

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t cols) {
    check_width(rows, cols);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool reduced = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q = floor_div(rows[i][c], rows[r][c]);
                for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) reduced = false;
            }
            if (!reduced) continue;
            if (rows[r][c] < 0) {
                for (std::size_t j = c; j < cols; ++j) rows[r][j] = -rows[r][j];
            }
            for (std::size_t i = 0; i < r; ++i) {
                Integer q = floor_div(rows[i][c], rows[r][c]);
                if (q == 0) continue;
                for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
            }
            ++r;
            break;
        }
    }
    rows.resize(r);
    return rows;
}

bool in_row_lattice(const IntMatrix& hnf, IntVector v) {
    for (const auto& row : hnf) {
        if (row.size() != v.size()) throw DimensionMismatch("vector length differs from lattice dimension");
        const std::size_t c = leading_column(row);
        if (c == row.size()) continue;
        for (std::size_t j = 0; j < c; ++j) {
            if (v[j] != 0) return false;
        }
        if (v[c] % row[c] != 0) return false;
        Integer q = v[c] / row[c];
        for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

}  // namespace gkm::linalg
