#pragma once

// Exact linear feasibility over Q with mixed strict/non-strict constraints.
// The engine is Fourier-Motzkin elimination with redundancy pruning;
// strictness is tracked natively through eliminations, never by epsilon
// tricks, so relative-interior queries are first-class. Witnesses come from
// deterministic back-substitution: the average of the tightest bounds, or
// bound +/- 1 when one side is unbounded.

#include <optional>
#include <vector>

#include "tropchow/rational.hpp"

namespace tropchow {

enum class Rel { eq, ge, gt };

struct LinCon {
  RatVec a;
  Rational b;
  Rel rel;  // a . x  REL  b
};

class LinearSystem {
 public:
  explicit LinearSystem(Index vars) : vars_(vars) {}

  Index vars() const { return vars_; }
  const std::vector<LinCon>& constraints() const { return cons_; }

  void add(RatVec a, Rational b, Rel rel) {
    if (a.size() != vars_) throw std::invalid_argument("constraint width mismatch");
    cons_.push_back({std::move(a), std::move(b), rel});
  }
  void add_eq(RatVec a, Rational b) { add(std::move(a), std::move(b), Rel::eq); }
  void add_ge(RatVec a, Rational b) { add(std::move(a), std::move(b), Rel::ge); }
  void add_gt(RatVec a, Rational b) { add(std::move(a), std::move(b), Rel::gt); }

  // a . x <= b and a . x < b, stored negated.
  void add_le(const RatVec& a, const Rational& b) { add(-a, -b, Rel::ge); }
  void add_lt(const RatVec& a, const Rational& b) { add(-a, -b, Rel::gt); }

  void append(const LinearSystem& other) {
    if (other.vars_ != vars_) throw std::invalid_argument("system width mismatch");
    cons_.insert(cons_.end(), other.cons_.begin(), other.cons_.end());
  }

 private:
  Index vars_;
  std::vector<LinCon> cons_;
};

// Exact feasibility; on success a rational point satisfying every constraint.
// The empty system is feasible with witness 0. Deterministic.
std::optional<RatVec> lp_feasible(const LinearSystem& sys);

// True iff the constraint (a, b, rel) is satisfied at x.
bool satisfies(const RatVec& a, const Rational& b, Rel rel, const RatVec& x);

}  // namespace tropchow
