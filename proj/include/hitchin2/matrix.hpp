#pragma once

#include <optional>
#include <vector>

#include "hitchin2/sqrtext.hpp"

namespace hitchin2 {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational invert(const Rational& q) {
  if (q == 0) throw division_error("inverse of zero");
  return Rational(1) / q;
}

inline RatExpr zero_like(const RatExpr& x) { return RatExpr::zero(x.universe()); }
inline RatExpr one_like(const RatExpr& x) {
  return RatExpr::constant(x.universe(), Rational(1));
}
inline RatExpr invert(const RatExpr& x) {
  return one_like(x) / x;
}

inline SqrtExtElem zero_like(const SqrtExtElem& x) { return SqrtExtElem::zero(x.ring()); }
inline SqrtExtElem one_like(const SqrtExtElem& x) { return SqrtExtElem::one(x.ring()); }
inline SqrtExtElem invert(const SqrtExtElem& x) { return x.inverse(); }

inline bool is_zero_value(const Rational& q) { return q == 0; }
inline bool is_zero_value(const RatExpr& x) { return x.is_zero(); }
inline bool is_zero_value(const SqrtExtElem& x) { return x.is_zero(); }

// Small dense matrix over an exact ring (2x2 and 4x4 in practice).
template <class T>
class Mat {
 public:
  Mat(size_t rows, size_t cols, const T& fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Mat identity(size_t n, const T& exemplar) {
    Mat m(n, n, zero_like(exemplar));
    for (size_t i = 0; i < n; ++i) m(i, i) = one_like(exemplar);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return a_.at(i * cols_ + j); }
  const T& operator()(size_t i, size_t j) const { return a_.at(i * cols_ + j); }

  Mat operator+(const Mat& rhs) const {
    check_same_shape(rhs);
    Mat out(*this);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = out.a_[k] + rhs.a_[k];
    return out;
  }

  Mat operator-(const Mat& rhs) const {
    check_same_shape(rhs);
    Mat out(*this);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = out.a_[k] - rhs.a_[k];
    return out;
  }

  Mat operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw argument_error("matrix dimension mismatch");
    Mat out(rows_, rhs.cols_, zero_like(a_[0]));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k)
        for (size_t j = 0; j < rhs.cols_; ++j)
          out(i, j) = out(i, j) + (*this)(i, k) * rhs(k, j);
    return out;
  }

  Mat scaled(const T& c) const {
    Mat out(*this);
    for (auto& e : out.a_) e = e * c;
    return out;
  }

  Mat transposed() const {
    Mat out(cols_, rows_, a_[0]);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  T trace() const {
    require_square();
    T acc = zero_like(a_[0]);
    for (size_t i = 0; i < rows_; ++i) acc = acc + (*this)(i, i);
    return acc;
  }

  T det() const {
    require_square();
    if (rows_ == 1) return (*this)(0, 0);
    if (rows_ == 2)
      return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
    T acc = zero_like(a_[0]);
    for (size_t j = 0; j < cols_; ++j) {
      if (is_zero_value((*this)(0, j))) continue;
      T term = (*this)(0, j) * minor_at(0, j).det();
      acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  }

  Mat minor_at(size_t row, size_t col) const {
    Mat out(rows_ - 1, cols_ - 1, a_[0]);
    for (size_t i = 0, io = 0; i < rows_; ++i) {
      if (i == row) continue;
      for (size_t j = 0, jo = 0; j < cols_; ++j) {
        if (j == col) continue;
        out(io, jo) = (*this)(i, j);
        ++jo;
      }
      ++io;
    }
    return out;
  }

  Mat adjugate() const {
    require_square();
    Mat out(rows_, cols_, zero_like(a_[0]));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        T c = minor_at(i, j).det();
        if ((i + j) % 2 == 1) c = zero_like(c) - c;
        out(j, i) = c;
      }
    return out;
  }

  // inverse via adjugate; throws division_error if det is not invertible
  Mat inverse() const {
    T d = det();
    if (is_zero_value(d)) throw division_error("singular matrix");
    return adjugate().scaled(invert(d));
  }

  // returns lambda when the matrix equals lambda * Identity
  std::optional<T> scalar_value() const {
    require_square();
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (i != j && !is_zero_value((*this)(i, j))) return std::nullopt;
    const T& d = (*this)(0, 0);
    for (size_t i = 1; i < rows_; ++i)
      if (!is_zero_value((*this)(i, i) - d)) return std::nullopt;
    return d;
  }

  bool operator==(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
      if (!(a_[k] == rhs.a_[k])) return false;
    return true;
  }
  bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

  // first nonzero entry in row-major order
  std::optional<std::pair<size_t, size_t>> first_nonzero() const {
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!is_zero_value((*this)(i, j))) return std::make_pair(i, j);
    return std::nullopt;
  }

 private:
  void require_square() const {
    if (rows_ != cols_) throw argument_error("square matrix required");
  }
  void check_same_shape(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw argument_error("matrix shape mismatch");
  }

  size_t rows_, cols_;
  std::vector<T> a_;
};

using MatRat = Mat<RatExpr>;
using MatExt = Mat<SqrtExtElem>;

// projective equality by cross-multiplication, no divisions
template <class T>
bool projectively_equal(const Mat<T>& A, const Mat<T>& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  auto pivB = B.first_nonzero();
  auto pivA = A.first_nonzero();
  if (!pivA && !pivB) return true;
  if (!pivA || !pivB) return false;
  const T& bp = B(pivB->first, pivB->second);
  const T& ap = A(pivB->first, pivB->second);
  if (is_zero_value(ap)) return false;
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j)
      if (!(A(i, j) * bp == B(i, j) * ap)) return false;
  return true;
}

}  // namespace hitchin2
