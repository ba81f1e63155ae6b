#include "tropchow/lattice.hpp"

namespace tropchow {

namespace {

// Reduces rows [r, rows) of m against each other in column c until at most a
// single nonzero entry remains, which is swapped into row r. Companion is
// subjected to the same row operations (used to carry a transformation
// matrix). Returns true if a pivot was produced.
bool gcd_reduce_column(IntMat& m, IntMat* companion, Index r, Index c) {
  while (true) {
    Index best = -1;
    for (Index i = r; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      if (best < 0 || cmp(abs(m(i, c)), abs(m(best, c))) < 0) best = i;
    }
    if (best < 0) return false;
    if (best != r) {
      m.row(r).swap(m.row(best));
      if (companion) companion->row(r).swap(companion->row(best));
    }
    bool others = false;
    for (Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      others = true;
      Integer q;
      // round-to-nearest quotient keeps entries small
      Integer num = m(i, c), den = m(r, c);
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      Integer rem = num - q * den;
      if (2 * rem > abs(den)) q += den > 0 ? 1 : -1;
      if (q != 0) {
        m.row(i) -= q * m.row(r);
        if (companion) companion->row(i) -= q * companion->row(r);
      }
    }
    if (!others) break;
    // loop again: remainders may still be nonzero
    bool leftover = false;
    for (Index i = r + 1; i < m.rows(); ++i)
      if (m(i, c) != 0) leftover = true;
    if (!leftover) break;
  }
  if (m(r, c) < 0) {
    m.row(r) = -m.row(r);
    if (companion) companion->row(r) = -companion->row(r);
  }
  return true;
}

// Row HNF with optional transformation carrier. m is reduced in place.
// Returns the rank; the first `rank` rows of m are the HNF rows.
Index hnf_in_place(IntMat& m, IntMat* companion) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!gcd_reduce_column(m, companion, r, c)) continue;
    for (Index i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (q != 0) {
        m.row(i) -= q * m.row(r);
        if (companion) companion->row(i) -= q * companion->row(r);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMat hermite_normal_form(const IntMat& rows) {
  IntMat m = rows;
  Index rank = hnf_in_place(m, nullptr);
  return m.topRows(rank);
}

Index lattice_rank(const IntMat& rows) {
  IntMat m = rows;
  return hnf_in_place(m, nullptr);
}

IntMat integer_kernel(const IntMat& rows, Index cols) {
  if (rows.size() != 0 && rows.cols() != cols)
    throw std::invalid_argument("integer_kernel: width mismatch");
  // Kernel of x |-> rows * x: run HNF on rows^T carrying the transform U;
  // rows of U belonging to zero rows of the echelon form span the kernel.
  IntMat t = rows.size() == 0 ? IntMat(cols, 0) : IntMat(rows.transpose());
  IntMat u = IntMat::Identity(cols, cols);
  Index rank = hnf_in_place(t, &u);
  IntMat kernel = u.bottomRows(cols - rank);
  return hermite_normal_form(kernel);
}

IntMat saturate(const IntMat& rows, Index cols) {
  if (rows.size() != 0 && rows.cols() != cols)
    throw std::invalid_argument("saturate: width mismatch");
  IntMat orth = integer_kernel(rows, cols);
  return integer_kernel(orth, cols);
}

std::vector<Index> reduced_row_echelon(RatMat& m) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = -1;
    for (Index i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.row(r).swap(m.row(p));
    m.row(r) /= m(r, c);
    for (Index i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<RatVec> solve_linear(const RatMat& lhs, const RatVec& rhs) {
  if (lhs.rows() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
  RatMat aug(lhs.rows(), lhs.cols() + 1);
  aug.leftCols(lhs.cols()) = lhs;
  aug.col(lhs.cols()) = rhs;
  std::vector<Index> pivots = reduced_row_echelon(aug);
  if (!pivots.empty() && pivots.back() == lhs.cols()) return std::nullopt;
  RatVec x = RatVec::Zero(lhs.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Index>(i), lhs.cols());
  return x;
}

std::optional<Integer> lattice_index(const IntMat& sub, const IntMat& super) {
  if (sub.size() != 0 && super.size() != 0 && sub.cols() != super.cols())
    throw std::invalid_argument("lattice_index: ambient dimension mismatch");
  IntMat basis = hermite_normal_form(super);
  Index r = basis.rows();
  if (r == 0) {
    if (lattice_rank(sub) > 0) throw std::invalid_argument("lattice_index: sub not in span of super");
    return Integer(1);
  }
  // Coordinates of each sub row in the super basis.
  RatMat lhs(basis.cols(), r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < basis.cols(); ++j) lhs(j, i) = Rational(basis(i, j));
  RatMat coords(sub.rows(), r);
  for (Index i = 0; i < sub.rows(); ++i) {
    RatVec rhs(sub.cols());
    for (Index j = 0; j < sub.cols(); ++j) rhs(j) = Rational(sub(i, j));
    auto x = solve_linear(lhs, rhs);
    if (!x) throw std::invalid_argument("lattice_index: sub not in span of super");
    coords.row(i) = x->transpose();
  }
  // Scale coordinates to integers, take HNF, divide covolumes.
  Integer den = 1;
  for (Index i = 0; i < coords.rows(); ++i)
    for (Index j = 0; j < r; ++j)
      lcm(den.get_mpz_t(), den.get_mpz_t(), coords(i, j).get_den().get_mpz_t());
  IntMat scaled(coords.rows(), r);
  for (Index i = 0; i < coords.rows(); ++i)
    for (Index j = 0; j < r; ++j) {
      Rational s = coords(i, j) * Rational(den);
      scaled(i, j) = s.get_num();
    }
  IntMat h = hermite_normal_form(scaled);
  if (h.rows() < r) return std::nullopt;  // rank drop: infinite index
  Integer det = 1;
  for (Index i = 0; i < r; ++i) det *= h(i, i);
  Integer denr = 1;
  for (Index i = 0; i < r; ++i) denr *= den;
  Rational index = make_rational(det, denr);
  if (!is_integral(index))
    throw std::domain_error("lattice_index: sub is not a sublattice of super");
  return index.get_num();
}

}  // namespace tropchow
