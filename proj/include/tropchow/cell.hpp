#pragma once

// Rational polyhedra in chart coordinates, held by generators (V-form):
// conv(vertices) + cone(rays) + span(lineality). The H-form (affine-hull
// equations plus an irredundant facet list) is derived lazily and cached.
// Cells compare through a canonical minimal V-form, which also pins the
// deterministic relative-interior sample point used all over the refinement
// machinery.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tropchow/lattice.hpp"
#include "tropchow/linear_system.hpp"

namespace tropchow {

struct HRep {
  // eq * x == eq_rhs cut out the affine hull; ineq * x >= ineq_rhs are the
  // facets, reduced modulo the equations, integer-primitive and sorted.
  RatMat eq;
  RatVec eq_rhs;
  RatMat ineq;
  RatVec ineq_rhs;
  Index dim = -1;

  bool contains(const RatVec& x, bool relative_interior = false) const;
};

// a . x == b with (a, b) integer, content 1, first nonzero entry of a
// positive. The canonical carrier of "one hyperplane of the arrangement".
struct Hyperplane {
  IntVec a;
  Integer b;

  std::string key() const;
};

class Cell {
 public:
  Cell(std::vector<RatVec> vertices, std::vector<IntVec> rays,
       std::vector<IntVec> lineality, Index ambient);

  static Cell point(const RatVec& v);
  static Cell cone(std::vector<IntVec> rays, Index ambient);

  Index ambient() const { return ambient_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }

  Index dim() const;
  const HRep& hrep() const;

  bool contains(const RatVec& x, bool relative_interior = false) const {
    return hrep().contains(x, relative_interior);
  }

  // Canonical minimal form: hidden lineality pulled out of the rays, rays and
  // vertices reduced modulo the lineality and pruned to the extreme ones,
  // everything sorted. Idempotent; equal cells get equal forms.
  Cell canonical() const;

  // Serialized canonical triple; valid dedupe key only on canonical cells.
  std::string key() const;

  // avg(vertices) + sum(rays), a relative-interior point when the cell is in
  // canonical form.
  RatVec interior_point() const;

  // Integer rows spanning the direction space (vertex differences, rays,
  // lineality).
  IntMat direction_rows() const;

  // N_sigma: the saturated direction lattice.
  IntMat lattice_basis() const { return saturate(direction_rows(), ambient_); }

  // Codimension-one faces: for each facet, the generators lying on it.
  std::vector<Cell> facet_cells() const;

 private:
  Index ambient_;
  std::vector<RatVec> vertices_;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  mutable std::shared_ptr<const HRep> hrep_;
  mutable std::optional<Index> dim_;
};

// Spec-facing conversion; throws on an empty generator set.
HRep vrep_to_hrep(const std::vector<RatVec>& vertices, const std::vector<IntVec>& rays,
                  const std::vector<IntVec>& lineality, Index ambient);

// Hyperplanes supporting the cell: affine-hull equations and facet planes.
std::vector<Hyperplane> cell_hyperplanes(const Cell& c);

// Generator-sign classification of a cell against a hyperplane:
//  0 cell inside the plane, +1 / -1 weakly on one side, 2 properly cut.
int side_of(const Cell& c, const Hyperplane& h);

// Both closed halves of a properly cut cell (call only when side_of == 2).
// Pieces are not canonicalized but their generator lists are kept minimal
// enough for further splitting.
std::pair<Cell, Cell> split(const Cell& c, const Hyperplane& h);

// c intersected with the plane; nullopt when the intersection is empty.
std::optional<Cell> intersect_hyperplane(const Cell& c, const Hyperplane& h);

Cell minkowski_cell(const Cell& a, const Cell& b);
Cell translate(const Cell& c, const RatVec& t);
Cell negate(const Cell& c);

// x -> M x on generators. Out-ambient is M.rows().
Cell map_linear(const Cell& c, const IntMat& m);

}  // namespace tropchow
