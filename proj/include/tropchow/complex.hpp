#pragma once

// Weighted polyhedral complexes as formal Q-linear combinations of weighted
// cells. Inputs may be arbitrary finite unions of cells; a structuring pass
// (refinement by the full arrangement of every facet and affine-hull plane,
// then weight aggregation on relative-interior sample points) upgrades them
// to genuine complexes. Equality is up to refinement, exactly the
// identification used for tropical cycles.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropchow/cell.hpp"
#include "tropchow/quotient.hpp"

namespace tropchow {

// Which quotient space a complex lives in: R^{n+1}/R, or the Plucker space
// R^N/R of TrGr(k, n). Chart dimension is n resp. N-1.
struct Ambient {
  enum class Kind { quotient, pluecker };
  Kind kind = Kind::quotient;
  int n = 0;
  int k = 0;  // meaningful for pluecker only

  static Ambient quotient_space(int n) { return {Kind::quotient, n, 0}; }
  static Ambient pluecker_space(int k, int n);

  Index chart_dim() const;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

struct WeightedCell {
  Cell cell;
  Rational weight;
};

class WeightedComplex {
 public:
  WeightedComplex(Ambient amb, int dim) : amb_(amb), dim_(dim) {}

  const Ambient& ambient() const { return amb_; }
  int dim() const { return dim_; }
  const std::vector<WeightedCell>& cells() const { return cells_; }
  bool is_zero() const;

  // Adds a cell to the formal sum. Cells of dimension dim() carry weight;
  // lower-dimensional cells are structure only and get weight 0.
  void add_cell(Cell c, Rational weight);

  static WeightedComplex zero(Ambient amb, int dim) { return WeightedComplex(amb, dim); }

 private:
  Ambient amb_;
  int dim_;
  std::vector<WeightedCell> cells_;
};

// Common refinement of several complexes over one arrangement. cells[i] are
// canonical, pairwise relint-disjoint, of the pure dimension; weights(i, s)
// is the aggregated weight of source s on cells[i].
struct Refinement {
  std::vector<Cell> cells;
  std::vector<RatVec> interior_points;
  RatMat weights;
};

Refinement refine_common(const std::vector<const WeightedComplex*>& sources);

// Structuring pass: same support and weights, but a genuine polyhedral
// complex with aggregated weights and zero-weight cells dropped.
WeightedComplex normalize(const WeightedComplex& w);

// Maximal cells of nonzero weight, after normalization.
std::vector<Cell> support_cells(const WeightedComplex& w);

struct BalancingReport {
  bool balanced = true;
  // (d-1)-faces where the weighted primitive normals do not sum into the
  // span of the face.
  std::vector<Cell> violations;
};

// The balancing condition of tropical geometry, checked on the structured
// complex at every codimension-one face.
BalancingReport balancing_check(const WeightedComplex& w);

enum class EqualityMode { weighted, support_only };

struct EqualityReport {
  bool equal = true;
  std::optional<RatVec> witness;  // a point separating the two, chart coords
};

EqualityReport complex_equal(const WeightedComplex& a, const WeightedComplex& b,
                             EqualityMode mode);

// Formal sum with scalar coefficients; exact-duplicate cells are merged and
// zero weights dropped, full refinement is deferred to the consumers.
WeightedComplex linear_combination(
    const std::vector<std::pair<Rational, const WeightedComplex*>>& terms);

WeightedComplex negate_complex(const WeightedComplex& w);
WeightedComplex translate_complex(const WeightedComplex& w, const RatVec& t);

// Set-level support comparison of two families of cells (possibly of mixed
// dimension): is the union of as contained in the union of bs? On failure
// returns a witness point in the difference.
std::optional<RatVec> support_difference_witness(const std::vector<Cell>& as,
                                                 const std::vector<Cell>& bs);

// Membership of a class in a cell, in quotient terms.
bool cell_contains(const Cell& c, const QuotientVector& p, bool relative_interior = false);

}  // namespace tropchow
