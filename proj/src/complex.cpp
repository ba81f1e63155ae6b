#include "tropchow/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropchow {

namespace {

Integer binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace

Ambient Ambient::pluecker_space(int k, int n) {
  Ambient a;
  a.kind = Kind::pluecker;
  a.k = k;
  a.n = n;
  return a;
}

Index Ambient::chart_dim() const {
  if (kind == Kind::quotient) return n;
  Integer N = binomial(n + 1, k + 1);
  return static_cast<Index>(N.get_si()) - 1;
}

bool WeightedComplex::is_zero() const {
  for (const auto& wc : cells_)
    if (wc.weight != 0) return false;
  return true;
}

void WeightedComplex::add_cell(Cell c, Rational weight) {
  if (c.ambient() != amb_.chart_dim())
    throw std::invalid_argument("add_cell: ambient mismatch");
  Index d = c.dim();
  if (d > dim_) throw std::invalid_argument("add_cell: cell dimension exceeds complex dimension");
  if (d < dim_) weight = 0;
  cells_.push_back({std::move(c), std::move(weight)});
}

namespace {

// Recursively split `c` by hyperplanes[from..]; canonical leaves are handed
// to `sink`. Only properly cutting planes split, and planes already decided
// for an ancestor stay decided for the descendants.
void refine_cell(const Cell& c, const std::vector<Hyperplane>& planes, size_t from,
                 const std::function<void(Cell)>& sink) {
  for (size_t i = from; i < planes.size(); ++i) {
    if (side_of(c, planes[i]) == 2) {
      auto [up, dn] = split(c, planes[i]);
      refine_cell(up, planes, i + 1, sink);
      refine_cell(dn, planes, i + 1, sink);
      return;
    }
  }
  sink(c.canonical());
}

}  // namespace

Refinement refine_common(const std::vector<const WeightedComplex*>& sources) {
  if (sources.empty()) throw std::invalid_argument("refine_common: no sources");
  const Ambient amb = sources[0]->ambient();
  int d = sources[0]->dim();
  for (const auto* s : sources)
    if (!s->is_zero()) {
      d = s->dim();
      break;
    }
  for (const auto* s : sources) {
    if (!(s->ambient() == amb)) throw std::invalid_argument("refine_common: ambient mismatch");
    if (s->dim() != d && !s->is_zero())
      throw std::invalid_argument("refine_common: dimension mismatch");
  }

  // carriers: the maximal cells with nonzero weight, per source
  struct Carrier {
    const Cell* cell;
    size_t source;
    Rational weight;
  };
  std::vector<Carrier> carriers;
  for (size_t s = 0; s < sources.size(); ++s)
    for (const auto& wc : sources[s]->cells())
      if (wc.weight != 0 && wc.cell.dim() == d) carriers.push_back({&wc.cell, s, wc.weight});

  Refinement out;
  out.weights.resize(0, static_cast<Index>(sources.size()));
  if (carriers.empty()) return out;

  // the arrangement: every facet plane and affine-hull plane of every carrier
  std::vector<Hyperplane> planes;
  {
    std::map<std::string, Hyperplane> uniq;
    for (const auto& c : carriers)
      for (auto& h : cell_hyperplanes(*c.cell)) uniq.emplace(h.key(), std::move(h));
    for (auto& [k, h] : uniq) planes.push_back(std::move(h));
  }

  // refine every carrier, dedupe pieces by canonical key
  std::map<std::string, size_t> piece_index;
  std::vector<Cell> pieces;
  for (const auto& c : carriers) {
    refine_cell(*c.cell, planes, 0, [&](Cell leaf) {
      std::string key = leaf.key();
      if (piece_index.emplace(key, pieces.size()).second) pieces.push_back(std::move(leaf));
    });
  }

  // aggregate weights at relative-interior sample points
  out.cells = std::move(pieces);
  out.interior_points.reserve(out.cells.size());
  for (const auto& p : out.cells) out.interior_points.push_back(p.interior_point());
  out.weights = RatMat::Zero(static_cast<Index>(out.cells.size()),
                             static_cast<Index>(sources.size()));
  for (const auto& c : carriers) {
    const HRep& h = c.cell->hrep();
    for (size_t i = 0; i < out.cells.size(); ++i)
      if (h.contains(out.interior_points[i], true))
        out.weights(static_cast<Index>(i), static_cast<Index>(c.source)) += c.weight;
  }
  return out;
}

WeightedComplex normalize(const WeightedComplex& w) {
  WeightedComplex out(w.ambient(), w.dim());
  Refinement r = refine_common({&w});
  for (size_t i = 0; i < r.cells.size(); ++i)
    if (r.weights(static_cast<Index>(i), 0) != 0)
      out.add_cell(r.cells[i], r.weights(static_cast<Index>(i), 0));
  return out;
}

std::vector<Cell> support_cells(const WeightedComplex& w) {
  std::vector<Cell> out;
  for (const auto& wc : normalize(w).cells())
    if (wc.weight != 0) out.push_back(wc.cell);
  return out;
}

namespace {

// Coordinates of the rows of sub in the row basis `basis`; throws when a row
// falls outside the span.
RatMat coordinates_in(const IntMat& basis, const IntMat& sub) {
  RatMat lhs(basis.cols(), basis.rows());
  for (Index i = 0; i < basis.rows(); ++i)
    for (Index j = 0; j < basis.cols(); ++j) lhs(j, i) = Rational(basis(i, j));
  RatMat out(sub.rows(), basis.rows());
  for (Index i = 0; i < sub.rows(); ++i) {
    RatVec rhs(sub.cols());
    for (Index j = 0; j < sub.cols(); ++j) rhs(j) = Rational(sub(i, j));
    auto x = solve_linear(lhs, rhs);
    if (!x) throw std::logic_error("coordinates_in: row outside span");
    out.row(i) = x->transpose();
  }
  return out;
}

// Primitive normal vector of sigma modulo tau: a generator of
// N_sigma / N_tau (both saturated), oriented toward sigma.
IntVec lattice_normal(const Cell& sigma, const Cell& tau) {
  IntMat nsig = sigma.lattice_basis();
  IntMat ntau = tau.lattice_basis();
  RatMat tc = coordinates_in(nsig, ntau);  // integer entries by saturation
  IntMat tci(tc.rows(), tc.cols());
  for (Index i = 0; i < tc.rows(); ++i)
    for (Index j = 0; j < tc.cols(); ++j) tci(i, j) = to_integer(tc(i, j));
  IntMat f = integer_kernel(tci, nsig.rows());  // functionals killing N_tau
  if (f.rows() != 1) throw std::logic_error("lattice_normal: face corank != 1");
  IntVec fun = f.row(0).transpose();
  // u in N_sigma coords with fun . u = 1 (extended gcd over the entries)
  IntVec u = IntVec::Zero(nsig.rows());
  {
    Integer g = 0;
    IntVec coef = IntVec::Zero(nsig.rows());
    for (Index i = 0; i < fun.size(); ++i) {
      Integer gg, s, t;
      mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                 fun(i).get_mpz_t());
      for (Index j = 0; j < i; ++j) coef(j) *= s;
      coef(i) = t;
      g = gg;
    }
    if (g < 0) {
      coef = -coef;
      g = -g;
    }
    if (g != 1) throw std::logic_error("lattice_normal: functional not primitive");
    u = coef;
  }
  // orientation: toward sigma
  RatVec delta = sigma.interior_point() - tau.interior_point();
  IntMat drow(1, delta.size());
  Integer l = denominator_lcm(delta);
  for (Index j = 0; j < delta.size(); ++j) drow(0, j) = Rational(delta(j) * l).get_num();
  RatMat dc = coordinates_in(nsig, drow);
  Rational s = 0;
  for (Index j = 0; j < fun.size(); ++j) s += Rational(fun(j)) * dc(0, j);
  if (s == 0) throw std::logic_error("lattice_normal: ambiguous orientation");
  if (s < 0) u = -u;
  // back to ambient coordinates
  IntVec amb = IntVec::Zero(nsig.cols());
  for (Index i = 0; i < nsig.rows(); ++i)
    for (Index j = 0; j < nsig.cols(); ++j) amb(j) += u(i) * nsig(i, j);
  return amb;
}

}  // namespace

BalancingReport balancing_check(const WeightedComplex& w) {
  BalancingReport report;
  Refinement r = refine_common({&w});

  // group codim-1 faces of the maximal cells
  struct FaceData {
    Cell face;
    std::vector<size_t> adjacent;  // indices into r.cells
  };
  std::map<std::string, FaceData> faces;
  for (size_t i = 0; i < r.cells.size(); ++i) {
    if (r.weights(static_cast<Index>(i), 0) == 0) continue;
    for (auto& f : r.cells[i].facet_cells()) {
      std::string key = f.key();
      auto it = faces.find(key);
      if (it == faces.end())
        it = faces.emplace(key, FaceData{std::move(f), {}}).first;
      it->second.adjacent.push_back(i);
    }
  }

  for (auto& [key, fd] : faces) {
    RatVec sum = RatVec::Zero(fd.face.ambient());
    for (size_t i : fd.adjacent) {
      IntVec u = lattice_normal(r.cells[i], fd.face);
      sum += r.weights(static_cast<Index>(i), 0) * to_rational(u);
    }
    // balanced at tau iff the weighted normal sum lies in span(tau)
    IntMat dir = fd.face.direction_rows();
    RatMat lhs(dir.cols(), dir.rows());
    for (Index i = 0; i < dir.rows(); ++i)
      for (Index j = 0; j < dir.cols(); ++j) lhs(j, i) = Rational(dir(i, j));
    if (!solve_linear(lhs, sum)) {
      report.balanced = false;
      report.violations.push_back(fd.face);
    }
  }
  return report;
}

EqualityReport complex_equal(const WeightedComplex& a, const WeightedComplex& b,
                             EqualityMode mode) {
  if (!(a.ambient() == b.ambient()))
    throw std::invalid_argument("complex_equal: ambient mismatch");
  if (a.dim() != b.dim() && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("complex_equal: dimension mismatch");
  EqualityReport rep;
  if (a.is_zero() && b.is_zero()) return rep;
  Refinement r = refine_common({&a, &b});
  for (size_t i = 0; i < r.cells.size(); ++i) {
    const Rational& wa = r.weights(static_cast<Index>(i), 0);
    const Rational& wb = r.weights(static_cast<Index>(i), 1);
    bool ok = mode == EqualityMode::weighted ? wa == wb : (wa != 0) == (wb != 0);
    if (!ok) {
      rep.equal = false;
      rep.witness = r.interior_points[i];
      return rep;
    }
  }
  return rep;
}

WeightedComplex linear_combination(
    const std::vector<std::pair<Rational, const WeightedComplex*>>& terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combination: no terms");
  Ambient amb = terms[0].second->ambient();
  int d = terms[0].second->dim();
  for (const auto& [s, w] : terms) {
    if (!(w->ambient() == amb)) throw std::invalid_argument("linear_combination: ambient mismatch");
    if (w->dim() != d && !w->is_zero())
      throw std::invalid_argument("linear_combination: dimension mismatch");
  }
  // merge exact-duplicate canonical cells; full refinement is not needed for
  // the formal sum semantics
  std::map<std::string, std::pair<Cell, Rational>> acc;
  for (const auto& [s, w] : terms) {
    if (s == 0) continue;
    for (const auto& wc : w->cells()) {
      if (wc.weight == 0) continue;
      Cell c = wc.cell.canonical();
      std::string key = c.key();
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, std::make_pair(std::move(c), s * wc.weight));
      else
        it->second.second += s * wc.weight;
    }
  }
  WeightedComplex out(amb, d);
  for (auto& [key, cw] : acc)
    if (cw.second != 0) out.add_cell(std::move(cw.first), std::move(cw.second));
  return out;
}

WeightedComplex negate_complex(const WeightedComplex& w) {
  WeightedComplex out(w.ambient(), w.dim());
  for (const auto& wc : w.cells()) out.add_cell(negate(wc.cell), wc.weight);
  return out;
}

WeightedComplex translate_complex(const WeightedComplex& w, const RatVec& t) {
  WeightedComplex out(w.ambient(), w.dim());
  for (const auto& wc : w.cells()) out.add_cell(translate(wc.cell, t), wc.weight);
  return out;
}

std::optional<RatVec> support_difference_witness(const std::vector<Cell>& as,
                                                 const std::vector<Cell>& bs) {
  if (as.empty()) return std::nullopt;
  std::vector<Hyperplane> planes;
  {
    std::map<std::string, Hyperplane> uniq;
    for (const auto& c : as)
      for (auto& h : cell_hyperplanes(c)) uniq.emplace(h.key(), std::move(h));
    for (const auto& c : bs)
      for (auto& h : cell_hyperplanes(c)) uniq.emplace(h.key(), std::move(h));
    for (auto& [k, h] : uniq) planes.push_back(std::move(h));
  }
  std::optional<RatVec> witness;
  for (const auto& c : as) {
    if (witness) break;
    refine_cell(c, planes, 0, [&](Cell leaf) {
      if (witness) return;
      RatVec p = leaf.interior_point();
      for (const auto& b : bs)
        if (b.contains(p)) return;
      witness = p;
    });
  }
  return witness;
}

bool cell_contains(const Cell& c, const QuotientVector& p, bool relative_interior) {
  if (c.ambient() != p.ambient_n())
    throw std::invalid_argument("cell_contains: ambient mismatch");
  return c.contains(p.chart(), relative_interior);
}

}  // namespace tropchow
