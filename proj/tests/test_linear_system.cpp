#include <doctest.h>

#include <random>

#include "tropchow/linear_system.hpp"

using namespace tropchow;

namespace {

RatVec qvec(std::initializer_list<long> entries) {
  RatVec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = Rational(e);
  return v;
}

// Test-only oracle: plain elimination that only answers empty/nonempty,
// sharing no code with the witness path.
bool eliminate_nonempty(std::vector<std::pair<RatVec, std::pair<Rational, bool>>> cons, Index n) {
  for (Index var = 0; var < n; ++var) {
    std::vector<std::pair<RatVec, std::pair<Rational, bool>>> lows, ups, rest;
    for (auto& c : cons) {
      if (c.first(var) > 0) lows.push_back(c);
      else if (c.first(var) < 0) ups.push_back(c);
      else rest.push_back(c);
    }
    for (const auto& lo : lows)
      for (const auto& up : ups) {
        Rational a = lo.first(var), b = -up.first(var);
        RatVec row = lo.first / a + up.first / b;
        Rational rhs = lo.second.first / a + up.second.first / b;
        rest.push_back({row, {rhs, lo.second.second || up.second.second}});
      }
    cons = std::move(rest);
  }
  for (const auto& c : cons) {
    if (c.second.second ? !(0 > c.second.first) : !(0 >= c.second.first)) return false;
  }
  return true;
}

bool oracle_feasible(const LinearSystem& sys) {
  std::vector<std::pair<RatVec, std::pair<Rational, bool>>> cons;
  for (const auto& c : sys.constraints()) {
    if (c.rel == Rel::eq) {
      cons.push_back({c.a, {c.b, false}});
      cons.push_back({-c.a, {-c.b, false}});
    } else {
      cons.push_back({c.a, {c.b, c.rel == Rel::gt}});
    }
  }
  return eliminate_nonempty(std::move(cons), sys.vars());
}

}  // namespace

TEST_CASE("pinned variable") {
  LinearSystem sys(1);
  sys.add_ge(qvec({1}), Rational(1));
  sys.add_ge(qvec({-1}), Rational(-1));
  auto w = lp_feasible(sys);
  REQUIRE(w.has_value());
  CHECK((*w)(0) == 1);
}

TEST_CASE("strict conflict") {
  LinearSystem sys(1);
  sys.add_ge(qvec({1}), Rational(1));
  sys.add_gt(qvec({1}), Rational(1));
  sys.add_ge(qvec({-1}), Rational(-1));
  CHECK(!lp_feasible(sys).has_value());
  CHECK(!oracle_feasible(sys));
}

TEST_CASE("cone membership with witness coefficients") {
  // (0,2,0,5,2) in pos((0,0,0,1,0), (0,1,0,1,1)) as classes of R^5/R:
  // chart equations a*(0,0,1,0) + b*(1,0,1,1) = (2,0,5,2)
  LinearSystem sys(2);
  RatVec g1 = qvec({0, 0, 1, 0});
  RatVec g2 = qvec({1, 0, 1, 1});
  RatVec target = qvec({2, 0, 5, 2});
  for (Index i = 0; i < 4; ++i) {
    RatVec row(2);
    row(0) = g1(i);
    row(1) = g2(i);
    sys.add_eq(row, target(i));
  }
  sys.add_ge(qvec({1, 0}), Rational(0));
  sys.add_ge(qvec({0, 1}), Rational(0));
  auto w = lp_feasible(sys);
  REQUIRE(w.has_value());
  CHECK((*w)(0) == 3);
  CHECK((*w)(1) == 2);
}

TEST_CASE("empty system is feasible at zero") {
  LinearSystem sys(3);
  auto w = lp_feasible(sys);
  REQUIRE(w.has_value());
  CHECK(*w == RatVec::Zero(3));
}

TEST_CASE("random systems: witnesses verify, infeasibility agrees with the elimination oracle") {
  std::mt19937 rng(123456);
  std::uniform_int_distribution<long> entry(-3, 3);
  int feas = 0, infeas = 0;
  for (int t = 0; t < 300; ++t) {
    Index n = 2 + static_cast<Index>(rng() % 3);
    LinearSystem sys(n);
    int m = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i < m; ++i) {
      RatVec a(n);
      for (Index j = 0; j < n; ++j) a(j) = Rational(entry(rng));
      Rational b(entry(rng));
      int kind = static_cast<int>(rng() % 5);
      if (kind == 0) sys.add_eq(a, b);
      else if (kind <= 3) sys.add_ge(a, b);
      else sys.add_gt(a, b);
    }
    auto w = lp_feasible(sys);
    if (w) {
      ++feas;
      for (const auto& c : sys.constraints()) CHECK(satisfies(c.a, c.b, c.rel, *w));
      CHECK(oracle_feasible(sys));
    } else {
      ++infeas;
      CHECK(!oracle_feasible(sys));
    }
  }
  CHECK(feas > 20);
  CHECK(infeas > 20);
}

TEST_CASE("deterministic witness") {
  LinearSystem sys(2);
  sys.add_ge(qvec({1, 0}), Rational(0));
  sys.add_ge(qvec({0, 1}), Rational(2));
  auto w1 = lp_feasible(sys);
  auto w2 = lp_feasible(sys);
  REQUIRE(w1.has_value());
  CHECK(*w1 == *w2);
}
