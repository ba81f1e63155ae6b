#include "tropchow/linear_system.hpp"

#include <algorithm>
#include <map>

#include "tropchow/lattice.hpp"

namespace tropchow {

bool satisfies(const RatVec& a, const Rational& b, Rel rel, const RatVec& x) {
  Rational lhs = a.dot(x);
  switch (rel) {
    case Rel::eq: return lhs == b;
    case Rel::ge: return lhs >= b;
    case Rel::gt: return lhs > b;
  }
  return false;
}

namespace {

// One inequality c . y >= rhs (or > when strict) over the FM working space.
struct Ineq {
  RatVec c;
  Rational rhs;
  bool strict;
};

// Canonical scaling: multiply by the positive rational that makes
// (c, rhs) integer with content 1. Key on the coefficient vector so parallel
// constraints collapse to the tightest one.
void normalize(Ineq& q) {
  Integer l = denominator_lcm(q.c);
  l = lcm(l, q.rhs.get_den());
  IntVec w(q.c.size() + 1);
  for (Index i = 0; i < q.c.size(); ++i) w(i) = Rational(q.c(i) * l).get_num();
  w(q.c.size()) = Rational(q.rhs * l).get_num();
  Integer g = gcd_of(w);
  if (g == 0) return;  // 0 >= 0; caller handles constant rows
  Rational scale = make_rational(l, g);
  q.c *= scale;
  q.rhs *= scale;
}

struct EliminationStep {
  Index var;
  // Normalized bounds: lower means y_var >= rhs - c . y (c has 0 at var),
  // upper means y_var <= rhs - c . y. Stored as (c, rhs, strict).
  std::vector<Ineq> lowers, uppers;
};

// Dedupe parallel constraints, detect trivially false constant rows.
// Returns false when a constant row is violated.
bool compact(std::vector<Ineq>& cons) {
  std::map<std::string, size_t> seen;
  std::vector<Ineq> out;
  for (auto& q : cons) {
    bool zero = true;
    for (Index i = 0; i < q.c.size(); ++i)
      if (q.c(i) != 0) {
        zero = false;
        break;
      }
    if (zero) {
      if (q.strict ? !(0 > q.rhs) : !(0 >= q.rhs)) return false;
      continue;
    }
    normalize(q);
    std::string key;
    for (Index i = 0; i < q.c.size(); ++i) {
      key += q.c(i).get_str();
      key += ',';
    }
    auto [it, fresh] = seen.emplace(key, out.size());
    if (fresh) {
      out.push_back(std::move(q));
    } else {
      Ineq& kept = out[it->second];
      int c = cmp(q.rhs, kept.rhs);
      if (c > 0 || (c == 0 && q.strict && !kept.strict)) kept = std::move(q);
    }
  }
  cons = std::move(out);
  return true;
}

}  // namespace

std::optional<RatVec> lp_feasible(const LinearSystem& sys) {
  const Index n = sys.vars();

  // Phase 1: solve the equalities, reparametrize by the null space.
  RatMat eq(0, n + 1);
  {
    std::vector<const LinCon*> eqs;
    for (const auto& c : sys.constraints())
      if (c.rel == Rel::eq) eqs.push_back(&c);
    eq.resize(static_cast<Index>(eqs.size()), n + 1);
    for (Index i = 0; i < eq.rows(); ++i) {
      eq.row(i).head(n) = eqs[static_cast<size_t>(i)]->a.transpose();
      eq(i, n) = eqs[static_cast<size_t>(i)]->b;
    }
  }
  std::vector<Index> pivots = reduced_row_echelon(eq);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1

  // particular solution: pivot vars take the rhs, free vars 0
  RatVec part = RatVec::Zero(n);
  for (size_t i = 0; i < pivots.size(); ++i) part(pivots[i]) = eq(static_cast<Index>(i), n);
  std::vector<Index> free_vars;
  {
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (Index j = 0; j < n; ++j)
      if (!is_pivot[static_cast<size_t>(j)]) free_vars.push_back(j);
  }
  const Index m = static_cast<Index>(free_vars.size());
  // null basis: column per free var
  RatMat null_basis = RatMat::Zero(n, m);
  for (Index j = 0; j < m; ++j) {
    null_basis(free_vars[static_cast<size_t>(j)], j) = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      null_basis(pivots[i], j) = -eq(static_cast<Index>(i), free_vars[static_cast<size_t>(j)]);
  }

  // Inequalities in the free-variable space.
  std::vector<Ineq> cons;
  for (const auto& c : sys.constraints()) {
    if (c.rel == Rel::eq) continue;
    Ineq q;
    q.c = null_basis.transpose() * c.a;
    q.rhs = c.b - c.a.dot(part);
    q.strict = c.rel == Rel::gt;
    cons.push_back(std::move(q));
  }
  if (!compact(cons)) return std::nullopt;

  // Phase 2: eliminate free variables.
  std::vector<bool> eliminated(static_cast<size_t>(m), false);
  std::vector<EliminationStep> steps;
  for (Index round = 0; round < m; ++round) {
    // var with the fewest lower*upper pairings
    Index best = -1;
    long best_score = 0;
    for (Index j = 0; j < m; ++j) {
      if (eliminated[static_cast<size_t>(j)]) continue;
      long lo = 0, hi = 0;
      for (const auto& q : cons) {
        if (q.c(j) > 0) ++lo;
        else if (q.c(j) < 0) ++hi;
      }
      long score = lo * hi - (lo + hi);
      if (best < 0 || score < best_score) {
        best = j;
        best_score = score;
      }
    }
    EliminationStep step;
    step.var = best;
    eliminated[static_cast<size_t>(best)] = true;

    std::vector<Ineq> next;
    for (auto& q : cons) {
      const Rational& coef = q.c(best);
      if (coef == 0) {
        next.push_back(std::move(q));
      } else if (coef > 0) {
        Ineq b{q.c / coef, q.rhs / coef, q.strict};
        b.c(best) = 0;
        step.lowers.push_back(std::move(b));
      } else {
        Ineq b{q.c / coef, q.rhs / coef, q.strict};
        b.c(best) = 0;
        step.uppers.push_back(std::move(b));
      }
    }
    for (const auto& lo : step.lowers)
      for (const auto& hi : step.uppers) {
        // rhs_lo - c_lo . y  <=  y_var  <=  rhs_hi - c_hi . y
        Ineq q{hi.c - lo.c, lo.rhs - hi.rhs, lo.strict || hi.strict};
        next.push_back(std::move(q));
      }
    if (!compact(next)) return std::nullopt;
    cons = std::move(next);
    steps.push_back(std::move(step));
  }

  // Anything left is constant and was validated by compact().

  // Phase 3: back-substitution.
  RatVec y = RatVec::Zero(m);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rational lo, hi;
    for (const auto& q : it->lowers) {
      Rational v = q.rhs - q.c.dot(y);
      if (!has_lo || v > lo || (v == lo && q.strict)) {
        if (!has_lo || v > lo) lo_strict = q.strict;
        else lo_strict = lo_strict || q.strict;
        lo = v;
        has_lo = true;
      }
    }
    for (const auto& q : it->uppers) {
      Rational v = q.rhs - q.c.dot(y);
      if (!has_hi || v < hi || (v == hi && q.strict)) {
        if (!has_hi || v < hi) hi_strict = q.strict;
        else hi_strict = hi_strict || q.strict;
        hi = v;
        has_hi = true;
      }
    }
    Rational val;
    if (has_lo && has_hi) {
      val = (lo + hi) / 2;
    } else if (has_lo) {
      val = lo + 1;
    } else if (has_hi) {
      val = hi - 1;
    } else {
      val = 0;
    }
    y(it->var) = val;
  }

  RatVec x = part + null_basis * y;
  for (const auto& c : sys.constraints())
    if (!satisfies(c.a, c.b, c.rel, x))
      throw std::logic_error("lp_feasible: witness verification failed");
  return x;
}

}  // namespace tropchow
