#pragma once

// Points and directions of the tropical projective torus R^{n+1}/R. A class
// is stored through its canonical representative, the one with first entry
// zero; the remaining n entries are the "chart" coordinates in which all
// lattice and polyhedral computations happen. The chart identifies the
// quotient lattice Z^{n+1}/Z(1,...,1) with Z^n via a_i - a_0.

#include "tropchow/rational.hpp"

namespace tropchow {

class QuotientVector {
 public:
  QuotientVector() = default;

  // Any representative; canonicalized by subtracting the first entry.
  explicit QuotientVector(RatVec representative) {
    if (representative.size() < 2)
      throw std::invalid_argument("quotient vector needs at least 2 entries");
    Rational head = representative(0);
    for (Index i = 0; i < representative.size(); ++i) representative(i) -= head;
    rep_ = std::move(representative);
  }

  static QuotientVector from_chart(const RatVec& chart) {
    RatVec rep(chart.size() + 1);
    rep(0) = 0;
    rep.tail(chart.size()) = chart;
    QuotientVector q;
    q.rep_ = std::move(rep);
    return q;
  }

  static QuotientVector zero(Index ambient_n) {
    return from_chart(RatVec::Zero(ambient_n));
  }

  // The space is R^{n+1}/R; ambient_n() is n.
  Index ambient_n() const { return rep_.size() - 1; }

  // Canonical representative, first entry 0.
  const RatVec& rep() const { return rep_; }

  RatVec chart() const { return rep_.tail(rep_.size() - 1); }

  bool is_zero() const {
    for (Index i = 1; i < rep_.size(); ++i)
      if (rep_(i) != 0) return false;
    return true;
  }

  bool is_integral() const { return tropchow::is_integral(rep_); }

  friend bool operator==(const QuotientVector& a, const QuotientVector& b) {
    return a.rep_.size() == b.rep_.size() && compare(a.rep_, b.rep_) == 0;
  }
  friend bool operator!=(const QuotientVector& a, const QuotientVector& b) { return !(a == b); }

  friend QuotientVector operator+(const QuotientVector& a, const QuotientVector& b) {
    return QuotientVector(RatVec(a.rep_ + b.rep_));
  }
  friend QuotientVector operator-(const QuotientVector& a, const QuotientVector& b) {
    return QuotientVector(RatVec(a.rep_ - b.rep_));
  }
  friend QuotientVector operator-(const QuotientVector& a) {
    return QuotientVector(RatVec(-a.rep_));
  }
  friend QuotientVector operator*(const Rational& s, const QuotientVector& a) {
    return QuotientVector(RatVec(s * a.rep_));
  }

 private:
  RatVec rep_;
};

inline QuotientVector canonicalize(const RatVec& representative) {
  return QuotientVector(representative);
}

// Unique primitive generator of the ray through v in Z^{n+1}/Z(1,...,1).
// v must be an integer class distinct from zero.
inline QuotientVector primitive_vector(const QuotientVector& v) {
  if (!v.is_integral()) throw std::invalid_argument("primitive_vector: non-integer class");
  if (v.is_zero()) throw std::domain_error("primitive_vector: zero class");
  IntVec c = to_integer(v.chart());
  return QuotientVector::from_chart(to_rational(primitive(c)));
}

}  // namespace tropchow
