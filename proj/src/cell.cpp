#include "tropchow/cell.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tropchow {

namespace {

int sign_of(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }
int sign_of(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

// Homogenization: vertex v -> primitive (l, l*v); direction r -> (0, r).
IntVec homog_vertex(const RatVec& v) {
  Integer l = denominator_lcm(v);
  IntVec g(v.size() + 1);
  g(0) = l;
  for (Index i = 0; i < v.size(); ++i) g(i + 1) = Rational(v(i) * l).get_num();
  return primitive(g);
}

IntVec homog_dir(const IntVec& r) {
  IntVec g(r.size() + 1);
  g(0) = 0;
  g.tail(r.size()) = r;
  return g;
}

std::string vec_key(const IntVec& v) {
  std::string k;
  for (Index i = 0; i < v.size(); ++i) {
    k += v(i).get_str();
    k += ',';
  }
  return k;
}

std::vector<IntVec> homogenize(const Cell& c) {
  std::vector<IntVec> gens;
  std::set<std::string> seen;
  auto push = [&](IntVec g) {
    if (seen.insert(vec_key(g)).second) gens.push_back(std::move(g));
  };
  for (const auto& v : c.vertices()) push(homog_vertex(v));
  for (const auto& r : c.rays()) push(homog_dir(r));
  for (const auto& l : c.lineality()) {
    push(homog_dir(l));
    push(homog_dir(IntVec(-l)));
  }
  return gens;
}

// Enumerate subsets of size k of {0,..,n-1} in lexicographic order.
template <class F>
void for_each_subset(Index n, Index k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<Index> idx(static_cast<size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    f(idx);
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

// H-form of the homogeneous cone spanned by gens, dehomogenized. Facets are
// found as kernels of rank-(d-1) generator subsets, oriented and validated.
HRep hrep_from_homog(const std::vector<IntVec>& gens, Index m) {
  if (gens.empty()) throw std::invalid_argument("vrep_to_hrep: empty generator set");
  IntMat g = rows_from(gens, m + 1);
  IntMat span_orth = integer_kernel(g, m + 1);
  Index d = (m + 1) - span_orth.rows();

  std::map<std::string, IntVec> facets;
  const Index ng = static_cast<Index>(gens.size());
  for_each_subset(ng, d - 1, [&](const std::vector<Index>& idx) {
    IntMat sub(static_cast<Index>(idx.size()) + span_orth.rows(), m + 1);
    for (size_t i = 0; i < idx.size(); ++i)
      sub.row(static_cast<Index>(i)) = g.row(idx[i]);
    sub.bottomRows(span_orth.rows()) = span_orth;
    IntMat ker = integer_kernel(sub, m + 1);
    if (ker.rows() != 1) return;
    IntVec a = ker.row(0).transpose();
    bool pos = false, neg = false;
    std::vector<Index> onset;
    for (Index i = 0; i < ng; ++i) {
      Integer s = a.dot(g.row(i).transpose());
      if (s > 0) pos = true;
      else if (s < 0) neg = true;
      else onset.push_back(i);
    }
    if (pos && neg) return;
    if (neg) a = -a;
    IntMat on(static_cast<Index>(onset.size()), m + 1);
    for (size_t i = 0; i < onset.size(); ++i) on.row(static_cast<Index>(i)) = g.row(onset[i]);
    if (lattice_rank(on) != d - 1) return;
    facets.emplace(vec_key(a), std::move(a));
  });

  // Dehomogenize and canonicalize.
  HRep h;
  h.dim = d - 1;
  RatMat eq(span_orth.rows(), m + 1);  // coefficients | rhs
  Index neq = 0;
  for (Index i = 0; i < span_orth.rows(); ++i) {
    bool zero = true;
    for (Index j = 1; j <= m; ++j)
      if (span_orth(i, j) != 0) zero = false;
    if (zero) continue;
    for (Index j = 0; j < m; ++j) eq(neq, j) = Rational(span_orth(i, j + 1));
    eq(neq, m) = Rational(-span_orth(i, 0));
    ++neq;
  }
  RatMat eqm = eq.topRows(neq);
  reduced_row_echelon(eqm);
  // drop zero rows (dependent equations)
  Index keep = 0;
  for (Index i = 0; i < eqm.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j <= m; ++j)
      if (eqm(i, j) != 0) zero = false;
    if (!zero) ++keep;
  }
  h.eq.resize(keep, m);
  h.eq_rhs.resize(keep);
  for (Index i = 0; i < keep; ++i) {
    h.eq.row(i) = eqm.row(i).head(m);
    h.eq_rhs(i) = eqm(i, m);
  }

  std::vector<std::pair<std::string, std::pair<RatVec, Rational>>> rows;
  for (const auto& [unused, a] : facets) {
    RatVec row(m);
    for (Index j = 0; j < m; ++j) row(j) = Rational(a(j + 1));
    Rational rhs = Rational(-a(0));
    // reduce modulo the affine-hull equations
    for (Index e = 0; e < h.eq.rows(); ++e) {
      Index p = -1;
      for (Index j = 0; j < m; ++j)
        if (h.eq(e, j) != 0) {
          p = j;
          break;
        }
      if (p < 0) continue;
      Rational f = row(p) / h.eq(e, p);
      if (f != 0) {
        row -= f * h.eq.row(e).transpose();
        rhs -= f * h.eq_rhs(e);
      }
    }
    bool zero = true;
    for (Index j = 0; j < m; ++j)
      if (row(j) != 0) zero = false;
    if (zero) continue;  // implied by the equations
    // integer-primitive positive scaling
    RatVec full(m + 1);
    full.head(m) = row;
    full(m) = rhs;
    IntVec scaled = primitive(full);
    // primitive() keeps orientation only up to content sign; restore it
    Index lead = -1;
    for (Index j = 0; j < m; ++j)
      if (row(j) != 0) {
        lead = j;
        break;
      }
    if (sign_of(scaled(lead)) != sign_of(row(lead))) scaled = -scaled;
    RatVec outrow(m);
    for (Index j = 0; j < m; ++j) outrow(j) = Rational(scaled(j));
    rows.push_back({vec_key(scaled), {outrow, Rational(scaled(m))}});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const auto& x, const auto& y) { return x.first == y.first; }),
             rows.end());
  h.ineq.resize(static_cast<Index>(rows.size()), m);
  h.ineq_rhs.resize(static_cast<Index>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    h.ineq.row(static_cast<Index>(i)) = rows[i].second.first.transpose();
    h.ineq_rhs(static_cast<Index>(i)) = rows[i].second.second;
  }
  return h;
}

// Separation certificate: is `target` outside cone(rays) + span(lin)?
// Works in chart space; small LP in the m dual variables.
bool outside_cone(const IntVec& target, const std::vector<IntVec>& rays,
                  const std::vector<IntVec>& lin, Index m,
                  const IntVec* skip = nullptr) {
  LinearSystem sys(m);
  RatVec t = to_rational(target);
  sys.add_ge(t, Rational(1));
  for (const auto& r : rays) {
    if (skip && &r == skip) continue;
    sys.add_le(to_rational(r), Rational(0));
  }
  for (const auto& l : lin) sys.add_eq(to_rational(l), Rational(0));
  return lp_feasible(sys).has_value();
}

// Is vertex v outside conv(others) + cone(rays) + span(lin)?
bool outside_polyhedron(const RatVec& v, const std::vector<RatVec>& others,
                        const std::vector<IntVec>& rays, const std::vector<IntVec>& lin,
                        Index m) {
  LinearSystem sys(m + 1);  // (y, y0): y.v - y0 >= 1 separates
  {
    RatVec a(m + 1);
    a.head(m) = v;
    a(m) = -1;
    sys.add_ge(a, Rational(1));
  }
  for (const auto& w : others) {
    RatVec a(m + 1);
    a.head(m) = w;
    a(m) = -1;
    sys.add_le(a, Rational(0));
  }
  for (const auto& r : rays) {
    RatVec a(m + 1);
    a.head(m) = to_rational(r);
    a(m) = 0;
    sys.add_le(a, Rational(0));
  }
  for (const auto& l : lin) {
    RatVec a(m + 1);
    a.head(m) = to_rational(l);
    a(m) = 0;
    sys.add_eq(a, Rational(0));
  }
  return lp_feasible(sys).has_value();
}

Cell dehomogenize(const std::vector<IntVec>& gens, Index m) {
  std::vector<RatVec> vertices;
  std::vector<IntVec> rays;
  for (const auto& g : gens) {
    if (g(0) > 0) {
      RatVec v(m);
      for (Index i = 0; i < m; ++i) v(i) = make_rational(g(i + 1), g(0));
      vertices.push_back(std::move(v));
    } else {
      rays.push_back(primitive(IntVec(g.tail(m))));
    }
  }
  if (vertices.empty()) throw std::logic_error("dehomogenize: piece without vertices");
  return Cell(std::move(vertices), std::move(rays), {}, m);
}

IntVec hyperplane_homog(const Hyperplane& h) {
  IntVec hv(h.a.size() + 1);
  hv(0) = -h.b;
  hv.tail(h.a.size()) = h.a;
  return hv;
}

// DD cut step: generators of cone(gens) intersected with {hv . x >= 0},
// redundant combination rays pruned.
std::vector<IntVec> cut_homog(const std::vector<IntVec>& gens, const IntVec& hv, Index m) {
  std::vector<IntVec> keep, strictly_pos, strictly_neg;
  std::vector<Integer> vals_pos, vals_neg;
  for (const auto& g : gens) {
    Integer s = hv.dot(g);
    if (s >= 0) keep.push_back(g);
    if (s > 0) {
      strictly_pos.push_back(g);
      vals_pos.push_back(s);
    } else if (s < 0) {
      strictly_neg.push_back(g);
      vals_neg.push_back(-s);
    }
  }
  std::set<std::string> seen;
  for (const auto& g : keep) seen.insert(vec_key(g));
  std::vector<IntVec> combos;
  for (size_t i = 0; i < strictly_pos.size(); ++i)
    for (size_t j = 0; j < strictly_neg.size(); ++j) {
      IntVec w = vals_pos[i] * strictly_neg[j] + vals_neg[j] * strictly_pos[i];
      w = primitive(w);
      if (seen.insert(vec_key(w)).second) combos.push_back(std::move(w));
    }
  // prune redundant combos against everything else kept
  std::vector<IntVec> pruned;
  for (size_t i = 0; i < combos.size(); ++i) {
    std::vector<IntVec> others = keep;
    for (size_t j = 0; j < combos.size(); ++j)
      if (j != i && combos[j].size() != 0) others.push_back(combos[j]);
    // homogeneous redundancy: combo in cone(others)?
    if (outside_cone(combos[i], others, {}, m + 1)) pruned.push_back(combos[i]);
    else {
      // drop it also from future "others" sets by erasing lazily
      combos[i] = IntVec();
    }
  }
  std::vector<IntVec> out = keep;
  for (auto& w : combos)
    if (w.size() != 0) out.push_back(std::move(w));
  return out;
}

}  // namespace

bool HRep::contains(const RatVec& x, bool relative_interior) const {
  for (Index i = 0; i < eq.rows(); ++i)
    if (eq.row(i).dot(x) != eq_rhs(i)) return false;
  for (Index i = 0; i < ineq.rows(); ++i) {
    Rational v = ineq.row(i).dot(x);
    if (relative_interior ? !(v > ineq_rhs(i)) : !(v >= ineq_rhs(i))) return false;
  }
  return true;
}

std::string Hyperplane::key() const {
  std::string k = b.get_str();
  k += ';';
  for (Index i = 0; i < a.size(); ++i) {
    k += a(i).get_str();
    k += ',';
  }
  return k;
}

Cell::Cell(std::vector<RatVec> vertices, std::vector<IntVec> rays,
           std::vector<IntVec> lineality, Index ambient)
    : ambient_(ambient) {
  if (vertices.empty()) throw std::invalid_argument("cell needs at least one vertex");
  for (const auto& v : vertices)
    if (v.size() != ambient) throw std::invalid_argument("vertex width mismatch");
  vertices_ = std::move(vertices);
  for (auto& r : rays) {
    if (r.size() != ambient) throw std::invalid_argument("ray width mismatch");
    rays_.push_back(primitive(r));
  }
  for (auto& l : lineality) {
    if (l.size() != ambient) throw std::invalid_argument("lineality width mismatch");
    lineality_.push_back(primitive(l));
  }
}

Cell Cell::point(const RatVec& v) { return Cell({v}, {}, {}, v.size()); }

Cell Cell::cone(std::vector<IntVec> rays, Index ambient) {
  return Cell({RatVec::Zero(ambient)}, std::move(rays), {}, ambient);
}

Index Cell::dim() const {
  if (!dim_) {
    IntMat d = direction_rows();
    dim_ = lattice_rank(d);
  }
  return *dim_;
}

const HRep& Cell::hrep() const {
  if (!hrep_) hrep_ = std::make_shared<const HRep>(hrep_from_homog(homogenize(*this), ambient_));
  return *hrep_;
}

IntMat Cell::direction_rows() const {
  std::vector<IntVec> rows;
  for (size_t i = 1; i < vertices_.size(); ++i) {
    RatVec d = vertices_[i] - vertices_[0];
    bool zero = true;
    for (Index j = 0; j < d.size(); ++j)
      if (d(j) != 0) zero = false;
    if (!zero) rows.push_back(primitive(d));
  }
  for (const auto& r : rays_) rows.push_back(r);
  for (const auto& l : lineality_) rows.push_back(l);
  return rows_from(rows, ambient_);
}

Cell Cell::canonical() const {
  const Index m = ambient_;
  // 1. hidden lineality: rays whose negative stays inside the recession cone
  std::vector<IntVec> lin = lineality_;
  for (const auto& r : rays_) {
    if (!outside_cone(IntVec(-r), rays_, lineality_, m)) lin.push_back(r);
  }
  IntMat lin_basis = lin.empty() ? IntMat(0, m) : saturate(rows_from(lin, m), m);
  std::vector<IntVec> lin_rows;
  for (Index i = 0; i < lin_basis.rows(); ++i) lin_rows.push_back(lin_basis.row(i).transpose());

  // projector off the lineality space
  RatMat gram(lin_basis.rows(), lin_basis.rows());
  for (Index i = 0; i < lin_basis.rows(); ++i)
    for (Index j = 0; j < lin_basis.rows(); ++j) {
      Rational s = 0;
      for (Index t = 0; t < m; ++t) s += Rational(lin_basis(i, t)) * Rational(lin_basis(j, t));
      gram(i, j) = s;
    }
  auto project = [&](const RatVec& x) -> RatVec {
    if (lin_basis.rows() == 0) return x;
    RatVec bx(lin_basis.rows());
    for (Index i = 0; i < lin_basis.rows(); ++i) {
      Rational s = 0;
      for (Index t = 0; t < m; ++t) s += Rational(lin_basis(i, t)) * x(t);
      bx(i) = s;
    }
    RatVec c = *solve_linear(gram, bx);
    RatVec out = x;
    for (Index i = 0; i < lin_basis.rows(); ++i)
      for (Index t = 0; t < m; ++t) out(t) -= c(i) * Rational(lin_basis(i, t));
    return out;
  };

  // 2. rays modulo lineality, extreme ones only
  std::vector<IntVec> rays;
  {
    std::set<std::string> seen;
    for (const auto& r : rays_) {
      RatVec p = project(to_rational(r));
      bool zero = true;
      for (Index j = 0; j < m; ++j)
        if (p(j) != 0) zero = false;
      if (zero) continue;
      IntVec q = primitive(p);
      if (seen.insert(vec_key(q)).second) rays.push_back(std::move(q));
    }
    std::sort(rays.begin(), rays.end(), IntVecLess{});
    std::vector<IntVec> kept;
    std::vector<bool> removed(rays.size(), false);
    for (size_t i = 0; i < rays.size(); ++i) {
      std::vector<IntVec> others;
      for (size_t j = 0; j < rays.size(); ++j)
        if (j != i && !removed[j]) others.push_back(rays[j]);
      if (!outside_cone(rays[i], others, lin_rows, m)) removed[i] = true;
    }
    std::vector<IntVec> final_rays;
    for (size_t i = 0; i < rays.size(); ++i)
      if (!removed[i]) final_rays.push_back(rays[i]);
    rays = std::move(final_rays);
  }

  // 3. vertices modulo lineality, extreme ones only
  std::vector<RatVec> verts;
  {
    std::set<std::string> seen;
    for (const auto& v : vertices_) {
      RatVec p = project(v);
      IntVec k = homog_vertex(p);
      if (seen.insert(vec_key(k)).second) verts.push_back(std::move(p));
    }
    std::sort(verts.begin(), verts.end(), RatVecLess{});
    std::vector<bool> removed(verts.size(), false);
    for (size_t i = 0; i < verts.size(); ++i) {
      std::vector<RatVec> others;
      for (size_t j = 0; j < verts.size(); ++j)
        if (j != i && !removed[j]) others.push_back(verts[j]);
      if (others.empty()) continue;  // last vertex always stays
      if (!outside_polyhedron(verts[i], others, rays, lin_rows, m)) removed[i] = true;
    }
    std::vector<RatVec> final_verts;
    for (size_t i = 0; i < verts.size(); ++i)
      if (!removed[i]) final_verts.push_back(verts[i]);
    verts = std::move(final_verts);
  }

  return Cell(std::move(verts), std::move(rays), std::move(lin_rows), m);
}

std::string Cell::key() const {
  std::ostringstream os;
  os << "V";
  for (const auto& v : vertices_) {
    os << '|';
    for (Index i = 0; i < v.size(); ++i) os << v(i).get_str() << ',';
  }
  os << "R";
  for (const auto& r : rays_) os << '|' << vec_key(r);
  os << "L";
  for (const auto& l : lineality_) os << '|' << vec_key(l);
  return os.str();
}

RatVec Cell::interior_point() const {
  RatVec p = RatVec::Zero(ambient_);
  for (const auto& v : vertices_) p += v;
  p /= Rational(static_cast<long>(vertices_.size()));
  for (const auto& r : rays_) p += to_rational(r);
  return p;
}

std::vector<Cell> Cell::facet_cells() const {
  const HRep& h = hrep();
  std::vector<Cell> out;
  for (Index i = 0; i < h.ineq.rows(); ++i) {
    std::vector<RatVec> fv;
    std::vector<IntVec> fr;
    for (const auto& v : vertices_)
      if (h.ineq.row(i).dot(v) == h.ineq_rhs(i)) fv.push_back(v);
    for (const auto& r : rays_) {
      Rational s = 0;
      for (Index j = 0; j < ambient_; ++j) s += h.ineq(i, j) * Rational(r(j));
      if (s == 0) fr.push_back(r);
    }
    if (fv.empty()) throw std::logic_error("facet without vertices; cell not canonical?");
    out.push_back(Cell(std::move(fv), std::move(fr), lineality_, ambient_).canonical());
  }
  return out;
}

HRep vrep_to_hrep(const std::vector<RatVec>& vertices, const std::vector<IntVec>& rays,
                  const std::vector<IntVec>& lineality, Index ambient) {
  if (vertices.empty() && rays.empty() && lineality.empty())
    throw std::invalid_argument("vrep_to_hrep: empty generator set");
  if (vertices.empty())
    throw std::invalid_argument("vrep_to_hrep: a polyhedron needs at least one vertex generator");
  return Cell(vertices, rays, lineality, ambient).hrep();
}

std::vector<Hyperplane> cell_hyperplanes(const Cell& c) {
  const HRep& h = c.hrep();
  std::vector<Hyperplane> out;
  auto push = [&](const RatVec& a, const Rational& b) {
    RatVec full(a.size() + 1);
    full.head(a.size()) = a;
    full(a.size()) = b;
    IntVec p = primitive(full);
    Index lead = -1;
    for (Index i = 0; i < a.size(); ++i)
      if (p(i) != 0) {
        lead = i;
        break;
      }
    if (lead < 0) return;
    if (p(lead) < 0) p = -p;
    Hyperplane hp;
    hp.a = p.head(a.size());
    hp.b = p(a.size());
    out.push_back(std::move(hp));
  };
  for (Index i = 0; i < h.eq.rows(); ++i) push(h.eq.row(i).transpose(), h.eq_rhs(i));
  for (Index i = 0; i < h.ineq.rows(); ++i) push(h.ineq.row(i).transpose(), h.ineq_rhs(i));
  return out;
}

int side_of(const Cell& c, const Hyperplane& h) {
  bool pos = false, neg = false;
  for (const auto& v : c.vertices()) {
    Rational s = -Rational(h.b);
    for (Index j = 0; j < c.ambient(); ++j) s += Rational(h.a(j)) * v(j);
    if (s > 0) pos = true;
    else if (s < 0) neg = true;
  }
  for (const auto& r : c.rays()) {
    Integer s = h.a.dot(r);
    if (s > 0) pos = true;
    else if (s < 0) neg = true;
  }
  for (const auto& l : c.lineality()) {
    if (h.a.dot(l) != 0) {
      pos = neg = true;
    }
  }
  if (pos && neg) return 2;
  if (pos) return 1;
  if (neg) return -1;
  return 0;
}

std::pair<Cell, Cell> split(const Cell& c, const Hyperplane& h) {
  IntVec hv = hyperplane_homog(h);
  std::vector<IntVec> gens = homogenize(c);
  std::vector<IntVec> up = cut_homog(gens, hv, c.ambient());
  std::vector<IntVec> dn = cut_homog(gens, IntVec(-hv), c.ambient());
  return {dehomogenize(up, c.ambient()), dehomogenize(dn, c.ambient())};
}

std::optional<Cell> intersect_hyperplane(const Cell& c, const Hyperplane& h) {
  IntVec hv = hyperplane_homog(h);
  std::vector<IntVec> up = cut_homog(homogenize(c), hv, c.ambient());
  std::vector<IntVec> flat = cut_homog(up, IntVec(-hv), c.ambient());
  bool has_vertex = false;
  for (const auto& g : flat)
    if (g(0) > 0) has_vertex = true;
  if (!has_vertex) return std::nullopt;
  return dehomogenize(flat, c.ambient());
}

Cell minkowski_cell(const Cell& a, const Cell& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("minkowski_cell: ambient mismatch");
  std::vector<RatVec> verts;
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) verts.push_back(u + v);
  std::vector<IntVec> rays = a.rays();
  rays.insert(rays.end(), b.rays().begin(), b.rays().end());
  std::vector<IntVec> lin = a.lineality();
  lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
  return Cell(std::move(verts), std::move(rays), std::move(lin), a.ambient());
}

Cell translate(const Cell& c, const RatVec& t) {
  std::vector<RatVec> verts;
  for (const auto& v : c.vertices()) verts.push_back(v + t);
  return Cell(std::move(verts), c.rays(), c.lineality(), c.ambient());
}

Cell negate(const Cell& c) {
  std::vector<RatVec> verts;
  for (const auto& v : c.vertices()) verts.push_back(-v);
  std::vector<IntVec> rays;
  for (const auto& r : c.rays()) rays.push_back(-r);
  return Cell(std::move(verts), std::move(rays), c.lineality(), c.ambient());
}

Cell map_linear(const Cell& c, const IntMat& m) {
  if (m.cols() != c.ambient()) throw std::invalid_argument("map_linear: width mismatch");
  RatMat mq(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) mq(i, j) = Rational(m(i, j));
  std::vector<RatVec> verts;
  for (const auto& v : c.vertices()) verts.push_back(mq * v);
  auto map_dirs = [&](const std::vector<IntVec>& dirs) {
    std::vector<IntVec> out;
    for (const auto& r : dirs) {
      IntVec w = m * r;
      bool zero = true;
      for (Index i = 0; i < w.size(); ++i)
        if (w(i) != 0) zero = false;
      if (!zero) out.push_back(primitive(w));
    }
    return out;
  };
  return Cell(std::move(verts), map_dirs(c.rays()), map_dirs(c.lineality()), m.rows());
}

}  // namespace tropchow
