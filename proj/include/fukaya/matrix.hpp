#pragma once

#include "fukaya/field.hpp"

#include <optional>
#include <vector>

namespace fukaya {

// Dense matrix over a runtime-selected exact field.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}
  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Rat& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Mat mul(const Field& k, const Mat& o) const {
    if (c_ != o.r_) throw Error("matrix: dimension mismatch in product");
    Mat res(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t l = 0; l < c_; ++l) {
        if ((*this)(i, l) == 0) continue;
        for (size_t j = 0; j < o.c_; ++j)
          res(i, j) = k.add(res(i, j), k.mul((*this)(i, l), o(l, j)));
      }
    return res;
  }

  Mat add(const Field& k, const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error("matrix: dimension mismatch in sum");
    Mat res(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) res.a_[i] = k.add(a_[i], o.a_[i]);
    return res;
  }

  Mat scale(const Field& k, const Rat& s) const {
    Mat res(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) res.a_[i] = k.mul(a_[i], s);
    return res;
  }

  Mat transpose() const {
    Mat res(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) res(j, i) = (*this)(i, j);
    return res;
  }

  // Row echelon reduction in place; returns pivot columns.
  std::vector<size_t> rref(const Field& k) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
      size_t sel = row;
      while (sel < r_ && k.is_zero((*this)(sel, col))) ++sel;
      if (sel == r_) continue;
      swap_rows(sel, row);
      Rat piv = k.inv((*this)(row, col));
      for (size_t j = col; j < c_; ++j) (*this)(row, j) = k.mul((*this)(row, j), piv);
      for (size_t i = 0; i < r_; ++i) {
        if (i == row) continue;
        Rat f = (*this)(i, col);
        if (k.is_zero(f)) continue;
        for (size_t j = col; j < c_; ++j)
          (*this)(i, j) = k.sub((*this)(i, j), k.mul(f, (*this)(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank(const Field& k) const {
    Mat copy = *this;
    return copy.rref(k).size();
  }

  // Basis of the right kernel, as columns of the returned matrix.
  Mat kernel(const Field& k) const {
    Mat red = *this;
    std::vector<size_t> pivots = red.rref(k);
    std::vector<bool> is_pivot(c_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    size_t nfree = c_ - pivots.size();
    Mat ker(c_, nfree);
    size_t idx = 0;
    for (size_t col = 0; col < c_; ++col) {
      if (is_pivot[col]) continue;
      ker(col, idx) = 1;
      for (size_t pr = 0; pr < pivots.size(); ++pr)
        ker(pivots[pr], idx) = k.neg(red(pr, col));
      ++idx;
    }
    return ker;
  }

  // Solve A x = b; returns one solution if consistent.
  std::optional<Mat> solve(const Field& k, const Mat& b) const {
    if (b.rows() != r_) throw Error("matrix: rhs dimension mismatch");
    Mat aug(r_, c_ + b.cols());
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      for (size_t j = 0; j < b.cols(); ++j) aug(i, c_ + j) = b(i, j);
    }
    std::vector<size_t> pivots = aug.rref(k);
    for (size_t p : pivots)
      if (p >= c_) return std::nullopt;
    Mat x(c_, b.cols());
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      for (size_t j = 0; j < b.cols(); ++j) x(pivots[pr], j) = aug(pr, c_ + j);
    return x;
  }

  std::optional<Mat> inverse(const Field& k) const {
    if (r_ != c_) return std::nullopt;
    std::optional<Mat> inv = solve(k, identity(r_));
    if (!inv) return std::nullopt;
    if (!(mul(k, *inv) == identity(r_))) return std::nullopt;
    return inv;
  }

  bool is_invertible(const Field& k) const { return r_ == c_ && rank(k) == r_; }

  bool is_zero(const Field& k) const {
    for (const Rat& x : a_)
      if (!k.is_zero(x)) return false;
    return true;
  }

 private:
  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < c_; ++c) std::swap(a_[i * c_ + c], a_[j * c_ + c]);
  }

  size_t r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

// Integer matrices: Hermite/Smith normal forms for lattice work.
class IntMat {
 public:
  IntMat() = default;
  IntMat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Int(0)) {}

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Int& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Int& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  // Rank over Q.
  size_t rank() const {
    Field q = Field::rationals();
    Mat m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = Rat((*this)(i, j));
    return m.rank(q);
  }

  // Smith normal form: returns the diagonal invariant factors (nonzero ones).
  std::vector<Int> smith_invariants() const {
    IntMat m = *this;
    size_t n = std::min(m.r_, m.c_);
    std::vector<Int> diag;
    size_t t = 0;
    while (t < n) {
      // find a nonzero entry in the submatrix starting at (t,t)
      size_t pi = t, pj = t;
      bool found = false;
      for (size_t i = t; i < m.r_ && !found; ++i)
        for (size_t j = t; j < m.c_ && !found; ++j)
          if (m(i, j) != 0) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) break;
      m.swap_rows(pi, t);
      m.swap_cols(pj, t);
      // clear row and column t by Euclidean steps
      bool again = true;
      while (again) {
        again = false;
        for (size_t i = t + 1; i < m.r_; ++i) {
          if (m(i, t) == 0) continue;
          if (m(i, t) % m(t, t) != 0) {
            // bring smaller remainder to pivot
            Int q = m(i, t) / m(t, t);
            m.row_axpy(i, t, -q);
            m.swap_rows(i, t);
            again = true;
          } else {
            Int q = m(i, t) / m(t, t);
            m.row_axpy(i, t, -q);
          }
        }
        for (size_t j = t + 1; j < m.c_; ++j) {
          if (m(t, j) == 0) continue;
          if (m(t, j) % m(t, t) != 0) {
            Int q = m(t, j) / m(t, t);
            m.col_axpy(j, t, -q);
            m.swap_cols(j, t);
            again = true;
          } else {
            Int q = m(t, j) / m(t, t);
            m.col_axpy(j, t, -q);
          }
        }
      }
      diag.push_back(boost::multiprecision::abs(m(t, t)));
      ++t;
    }
    // enforce divisibility chain
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j) {
        Int g = boost::multiprecision::gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    return diag;
  }

 private:
  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < c_; ++c) std::swap(a_[i * c_ + c], a_[j * c_ + c]);
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < r_; ++r) std::swap(a_[r * c_ + i], a_[r * c_ + j]);
  }
  void row_axpy(size_t dst, size_t src, const Int& f) {
    for (size_t c = 0; c < c_; ++c) a_[dst * c_ + c] += f * a_[src * c_ + c];
  }
  void col_axpy(size_t dst, size_t src, const Int& f) {
    for (size_t r = 0; r < r_; ++r) a_[r * c_ + dst] += f * a_[r * c_ + src];
  }

  size_t r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

}  // namespace fukaya
