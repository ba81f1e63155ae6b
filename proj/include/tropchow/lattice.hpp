#pragma once

// Integer lattices given by spanning rows: Hermite normal forms, integer
// kernels, saturation and group indices. These back the Minkowski-weight
// formula (weights are indices of sums of cone lattices in the saturated
// lattice of the sum) and the balancing condition.

#include <optional>

#include "tropchow/rational.hpp"

namespace tropchow {

// Row-style Hermite normal form of the lattice spanned by the rows of `rows`.
// Result has one row per rank, pivots positive and strictly right-moving,
// entries above a pivot reduced into [0, pivot). Canonical for the row
// lattice, hence idempotent.
IntMat hermite_normal_form(const IntMat& rows);

// Rank of the row lattice (== number of rows of the HNF).
Index lattice_rank(const IntMat& rows);

// Basis (as rows, in HNF) of {x in Z^cols : rows * x = 0}. Kernel lattices
// are saturated by construction. `cols` disambiguates an empty matrix.
IntMat integer_kernel(const IntMat& rows, Index cols);

// Basis of span_Q(rows) intersected with Z^cols, i.e. the saturation.
IntMat saturate(const IntMat& rows, Index cols);

// Group index [L_super : L_sub] of the row lattices. Requirements: equal
// ambient width, rows of sub contained in the Q-span of super (else throws),
// and sub an actual sublattice of super when ranks agree (else throws).
// nullopt encodes an infinite index (rank of sub drops below rank of super).
std::optional<Integer> lattice_index(const IntMat& sub, const IntMat& super);

inline IntMat rows_from(const std::vector<IntVec>& rows, Index cols) {
  IntMat m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) {
    if (rows[static_cast<size_t>(i)].size() != cols)
      throw std::invalid_argument("row width mismatch");
    m.row(i) = rows[static_cast<size_t>(i)].transpose();
  }
  return m;
}

// Exact reduced row echelon form over Q, in place. Returns pivot columns.
// Pivot choice: first nonzero entry scanning down each column, so the result
// is deterministic.
std::vector<Index> reduced_row_echelon(RatMat& m);

// Solves rows^T * x = rhs exactly; nullopt when inconsistent.
std::optional<RatVec> solve_linear(const RatMat& lhs, const RatVec& rhs);

}  // namespace tropchow
