#include <doctest.h>

#include <random>

#include "tropchow/lattice.hpp"
#include "tropchow/quotient.hpp"

using namespace tropchow;

namespace {

IntMat mat(std::initializer_list<std::initializer_list<long>> rows, Index cols) {
  IntMat m(static_cast<Index>(rows.size()), cols);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

RatVec qvec(std::initializer_list<long> entries) {
  RatVec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = Rational(e);
  return v;
}

// Oracle: count cosets of the row lattice of `sub` in Z^r by enumerating a
// box; only usable for small finite indices.
long coset_count(const IntMat& sub, long box) {
  // points of Z^r modulo the lattice, enumerated in [0, box)^r with
  // membership tested by exact solve
  Index r = sub.cols();
  RatMat lhs(r, sub.rows());
  for (Index i = 0; i < sub.rows(); ++i)
    for (Index j = 0; j < r; ++j) lhs(j, i) = Rational(sub(i, j));
  std::vector<IntVec> reps;
  std::vector<long> idx(static_cast<size_t>(r), 0);
  while (true) {
    IntVec p(r);
    for (Index j = 0; j < r; ++j) p(j) = idx[static_cast<size_t>(j)];
    bool fresh = true;
    for (const auto& q : reps) {
      RatVec rhs(r);
      for (Index j = 0; j < r; ++j) rhs(j) = Rational(p(j) - q(j));
      auto x = solve_linear(lhs, rhs);
      if (x && is_integral(*x)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(p);
    Index c = 0;
    while (c < r && ++idx[static_cast<size_t>(c)] == box) idx[static_cast<size_t>(c++)] = 0;
    if (c == r) break;
  }
  return static_cast<long>(reps.size());
}

}  // namespace

TEST_CASE("hermite normal form is idempotent and canonical") {
  IntMat m = mat({{2, 4, 6}, {3, 5, 7}, {1, 1, 1}}, 3);
  IntMat h = hermite_normal_form(m);
  CHECK(compare(IntVec(hermite_normal_form(h).reshaped()), IntVec(h.reshaped())) == 0);
  CHECK(lattice_rank(m) == 3);
}

TEST_CASE("lattice_index basics") {
  IntMat z2 = mat({{1, 0}, {0, 1}}, 2);
  SUBCASE("det oracle") {
    IntMat sub = mat({{1, 1}, {1, -1}}, 2);
    auto idx = lattice_index(sub, z2);
    REQUIRE(idx.has_value());
    CHECK(*idx == 2);
    CHECK(coset_count(sub, 4) == 2);
  }
  SUBCASE("identity") {
    IntMat id3 = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    auto idx = lattice_index(id3, id3);
    REQUIRE(idx.has_value());
    CHECK(*idx == 1);
  }
  SUBCASE("rank drop is infinite") {
    IntMat sub = mat({{2, 0}}, 2);
    CHECK(!lattice_index(sub, z2).has_value());
  }
  SUBCASE("not in span") {
    IntMat sub = mat({{0, 1}}, 2);
    IntMat super = mat({{1, 0}}, 2);
    CHECK_THROWS_AS(lattice_index(sub, super), std::invalid_argument);
  }
}

TEST_CASE("lattice_index equals |det| for random full-rank bases, coset oracle cross-check") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> entry(-4, 4);
  int done = 0;
  while (done < 25) {
    Index r = 2 + static_cast<Index>(rng() % 2);
    IntMat sub(r, r);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j) sub(i, j) = entry(rng);
    if (lattice_rank(sub) < r) continue;
    IntMat zr = IntMat::Identity(r, r);
    auto idx = lattice_index(sub, zr);
    REQUIRE(idx.has_value());
    IntMat h = hermite_normal_form(sub);
    Integer det = 1;
    for (Index i = 0; i < r; ++i) det *= h(i, i);
    CHECK(*idx == det);
    if (*idx <= 50 && r == 2) CHECK(coset_count(sub, 12) == idx->get_si());
    ++done;
  }
}

TEST_CASE("saturate") {
  SUBCASE("single even ray") {
    IntMat b = mat({{2, 0}}, 2);
    IntMat s = saturate(b, 2);
    REQUIRE(s.rows() == 1);
    CHECK(s(0, 0) == 1);
    CHECK(s(0, 1) == 0);
  }
  SUBCASE("index two sublattice saturates to Z^2") {
    IntMat b = mat({{1, 1}, {1, -1}}, 2);
    IntMat s = saturate(b, 2);
    auto idx = lattice_index(s, IntMat(IntMat::Identity(2, 2)));
    REQUIRE(idx.has_value());
    CHECK(*idx == 1);
  }
  SUBCASE("empty basis") {
    IntMat b(0, 3);
    CHECK(saturate(b, 3).rows() == 0);
  }
  SUBCASE("idempotent and index-divisibility") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int t = 0; t < 25; ++t) {
      IntMat b(2, 3);
      for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 3; ++j) b(i, j) = entry(rng);
      IntMat s = saturate(b, 3);
      IntMat ss = saturate(s, 3);
      CHECK(compare(IntVec(s.reshaped()), IntVec(ss.reshaped())) == 0);
      if (lattice_rank(b) == 2) {
        auto i1 = lattice_index(b, s);
        REQUIRE(i1.has_value());
        CHECK(*i1 >= 1);
      }
    }
  }
}

TEST_CASE("primitive_vector in the quotient lattice") {
  SUBCASE("paper-style example") {
    QuotientVector v(qvec({2, 4, 6, 0}));
    QuotientVector p = primitive_vector(v);
    CHECK(p == QuotientVector(qvec({0, 1, 2, -1})));
  }
  SUBCASE("already primitive") {
    QuotientVector e0(qvec({1, 0, 0, 0}));
    CHECK(primitive_vector(e0) == e0);
  }
  SUBCASE("zero class") {
    QuotientVector ones(qvec({3, 3, 3, 3}));
    CHECK(ones.is_zero());
    CHECK_THROWS_AS(primitive_vector(ones), std::domain_error);
  }
}

TEST_CASE("canonicalize quotient vectors") {
  CHECK(QuotientVector(qvec({6, 8, 6, 11, 8})).rep() == qvec({0, 2, 0, 5, 2}));
  CHECK(QuotientVector(qvec({1, 1, 1, 1})).is_zero());
  CHECK(QuotientVector(qvec({0, 2, 0, 5, 2})).rep() == qvec({0, 2, 0, 5, 2}));
}
