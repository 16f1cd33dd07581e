#include "tukey/lp.hpp"

#include <vector>

namespace tukey::lp {
namespace {

class Tableau {
 public:
  Tableau(const MatrixQ& a, const VectorQ& b)
      : rows_(a.rows()), cols_(a.cols()), t_(MatrixQ::Zero(a.rows() + 1, a.cols() + a.rows() + 1)),
        basis_(static_cast<std::size_t>(a.rows())) {
    if (b.size() != rows_) throw PreconditionError("lp: rhs size mismatch");
    for (Index i = 0; i < rows_; ++i) {
      const Rational s = b[i] < 0 ? Rational(-1) : Rational(1);
      t_.row(i).head(cols_) = s * a.row(i);
      t_(i, cols_ + i) = 1;
      t_(i, rhs()) = s * b[i];
      basis_[static_cast<std::size_t>(i)] = cols_ + i;
    }
    // phase one: minimize the sum of artificials
    for (Index i = 0; i < rows_; ++i) {
      t_.row(rows_).head(cols_) -= t_.row(i).head(cols_);
      t_(rows_, rhs()) -= t_(i, rhs());
    }
  }

  // Returns false when the objective is unbounded below.
  bool run(Index allowed_cols) {
    while (true) {
      Index entering = -1;
      for (Index j = 0; j < allowed_cols; ++j)
        if (t_(rows_, j) < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return true;

      Index leaving = -1;
      Rational best;
      for (Index i = 0; i < rows_; ++i) {
        if (t_(i, entering) <= 0) continue;
        const Rational ratio = t_(i, rhs()) / t_(i, entering);
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  Rational objective() const { return -t_(rows_, rhs()); }

  void drive_out_artificials() {
    for (Index i = 0; i < rows_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < cols_) continue;
      for (Index j = 0; j < cols_; ++j)
        if (t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
      // A row left with an artificial basic is redundant; its entries in the
      // structural columns are all zero so it never blocks a pivot.
    }
  }

  void set_costs(const VectorQ& c) {
    t_.row(rows_).setZero();
    for (Index j = 0; j < cols_; ++j) t_(rows_, j) = c[j];
    for (Index i = 0; i < rows_; ++i) {
      const Index b = basis_[static_cast<std::size_t>(i)];
      if (b >= cols_ || c[b] == 0) continue;
      const Rational cb = c[b];
      t_.row(rows_) -= cb * t_.row(i);
    }
  }

  VectorQ solution() const {
    VectorQ y = VectorQ::Zero(cols_);
    for (Index i = 0; i < rows_; ++i) {
      const Index b = basis_[static_cast<std::size_t>(i)];
      if (b < cols_) y[b] = t_(i, rhs());
    }
    return y;
  }

  Index cols() const { return cols_; }

 private:
  Index rhs() const { return cols_ + rows_; }

  void pivot(Index row, Index col) {
    const Rational inv = Rational(1) / t_(row, col);
    t_.row(row) *= inv;
    for (Index i = 0; i <= rows_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Rational f = t_(i, col);
      t_.row(i) -= f * t_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  Index rows_;
  Index cols_;
  MatrixQ t_;
  std::vector<Index> basis_;
};

}  // namespace

Result minimize(const MatrixQ& a, const VectorQ& b, const VectorQ& c) {
  if (c.size() != a.cols()) throw PreconditionError("lp: cost size mismatch");
  Tableau t(a, b);
  t.run(t.cols() + a.rows());
  if (t.objective() != 0) return {Status::infeasible, {}, {}};
  t.drive_out_artificials();
  t.set_costs(c);
  if (!t.run(t.cols())) return {Status::unbounded, {}, {}};
  Result r{Status::optimal, t.solution(), 0};
  r.objective = c.dot(r.solution);
  return r;
}

bool feasible(const MatrixQ& a, const VectorQ& b) {
  Tableau t(a, b);
  t.run(t.cols() + a.rows());
  return t.objective() == 0;
}

}  // namespace tukey::lp
