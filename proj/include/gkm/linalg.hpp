#pragma once

#include "gkm/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

/// Exact dense linear algebra over Q and Z. Matrices are row-major vectors of
/// rows; the column count is passed explicitly so that matrices with no rows
/// are well formed.
namespace gkm::linalg {

using RatMatrix = std::vector<RatVector>;
using IntMatrix = std::vector<IntVector>;

/// Multiplies each row by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m);

struct Echelon {
    IntMatrix rows;                   // nonzero rows only, fraction-free
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Fraction-free (Bareiss) forward elimination. The first nonzero entry in
/// each column is taken as pivot, so the result depends only on the input.
Echelon bareiss_echelon(IntMatrix m, std::size_t cols);

struct ReducedEchelon {
    RatMatrix rows;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q (unique for the row space).
ReducedEchelon reduced_row_echelon(const RatMatrix& m, std::size_t cols);

std::size_t rank(const RatMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, returned in reduced row echelon form.
RatMatrix nullspace(const RatMatrix& m, std::size_t cols);

/// A solution of m x = rhs with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs, std::size_t cols);

/// Z-basis of the lattice {x in Z^cols : m x = 0}, from unimodular column
/// reduction. Not normalized; pass through `hermite_normal_form` for that.
IntMatrix integer_kernel(const IntMatrix& m, std::size_t cols);

/// Row Hermite normal form of the lattice spanned by the rows: echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t cols);

/// Membership of v in the row lattice of a matrix in Hermite normal form.
bool in_row_lattice(const IntMatrix& hnf, IntVector v);

}  // namespace gkm::linalg
