#pragma once

// Exact scalar types for the whole library: arbitrary-precision integers and
// rationals from GMP, plugged into Eigen dense containers. Every computation
// downstream is exact; nothing here ever rounds.

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace Eigen {

// mpq_class/mpz_class as Eigen scalars. Costs are rough relative weights so
// Eigen's lazy-evaluation heuristics do something sensible.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 60,
    MulCost = 60
  };
};

template <>
struct ScalarBinaryOpTraits<mpq_class, mpz_class,
                            internal::scalar_product_op<mpq_class, mpz_class>> {
  typedef mpq_class ReturnType;
};
template <>
struct ScalarBinaryOpTraits<mpz_class, mpq_class,
                            internal::scalar_product_op<mpz_class, mpq_class>> {
  typedef mpq_class ReturnType;
};

}  // namespace Eigen

namespace tropchow {

using Integer = mpz_class;
using Rational = mpq_class;

using Index = Eigen::Index;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

// mpq_class(n, d) does not canonicalize on its own; this does.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer to_integer(const Rational& r) {
  if (!is_integral(r)) throw std::domain_error("rational is not an integer");
  return r.get_num();
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

inline bool is_integral(const RatVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_integral(v(i))) return false;
  return true;
}

inline IntVec to_integer(const RatVec& v) {
  IntVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = to_integer(v(i));
  return r;
}

// Smallest positive scale t with t*v integral, i.e. the lcm of denominators.
inline Integer denominator_lcm(const RatVec& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, v(i).get_den());
  return l;
}

inline Integer gcd_of(const IntVec& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

// The primitive integer vector spanning the same ray as v (v != 0).
inline IntVec primitive(const IntVec& v) {
  Integer g = gcd_of(v);
  if (g == 0) throw std::domain_error("primitive of zero vector");
  IntVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = v(i) / g;
  return r;
}

// Clears denominators and divides out content: the primitive integer vector
// on the ray of a nonzero rational vector.
inline IntVec primitive(const RatVec& v) {
  Integer l = denominator_lcm(v);
  IntVec w(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    Rational s = v(i) * Rational(l);
    w(i) = s.get_num();
  }
  return primitive(w);
}

// Total order on vectors (entrywise), used wherever a deterministic ordering
// of generators or constraint rows is needed.
inline int compare(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c;
  }
  return 0;
}

inline int compare(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c;
  }
  return 0;
}

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return compare(a, b) < 0; }
};
struct IntVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return compare(a, b) < 0; }
};

// "p/q" or "p"; used by the file format and the CLI.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const RatVec& v);

}  // namespace tropchow
