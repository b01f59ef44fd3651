#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "ratlinalg/rat.hpp"

namespace ratlinalg {

// Dense row-major matrix of exact rationals. Immutable by convention:
// every operation returns a fresh value, so Mat is safe to share across
// threads. Zero-row and zero-column shapes are legal values.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(check_shape(rows, cols)) {}
  Mat(int rows, int cols, Vec entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0 || e_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("Mat: entry count does not match rows*cols");
  }
  Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw std::invalid_argument("Mat: ragged initializer");
      for (const auto& x : r) e_.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

  const Rat& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  Rat& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  static Vec check_shape(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    return Vec(static_cast<std::size_t>(rows) * cols, Rat(0));
  }

  int rows_ = 0;
  int cols_ = 0;
  Vec e_;
};

inline Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Mat*: inner dimensions differ");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline Vec operator*(const Mat& a, const Vec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw std::invalid_argument("Mat*Vec: dimensions differ");
  Vec y(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

inline Mat operator*(const Rat& s, const Mat& a) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Mat+: shapes differ");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Mat-: shapes differ");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

/// Columns of b appended to the right of a.
inline Mat hcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row counts differ");
  Mat c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

/// Rows of b appended below a.
inline Mat vcat(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column counts differ");
  Mat c(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

inline Mat submatrix(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat c(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) c(static_cast<int>(i), static_cast<int>(j)) = a(rows[i], cols[j]);
  return c;
}

inline Mat select_rows(const Mat& a, const std::vector<int>& rows) {
  Mat c(static_cast<int>(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(static_cast<int>(i), j) = a(rows[i], j);
  return c;
}

inline Mat select_cols(const Mat& a, const std::vector<int>& cols) {
  Mat c(a.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) c(i, static_cast<int>(j)) = a(i, cols[j]);
  return c;
}

inline Mat erase_col(const Mat& a, int j) {
  std::vector<int> keep;
  keep.reserve(a.cols() - 1);
  for (int k = 0; k < a.cols(); ++k)
    if (k != j) keep.push_back(k);
  return select_cols(a, keep);
}

inline Mat append_col(const Mat& a, const Vec& v) {
  if (a.rows() != static_cast<int>(v.size()))
    throw std::invalid_argument("append_col: length differs from row count");
  Mat c(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    c(i, a.cols()) = v[i];
  }
  return c;
}

inline Mat from_col(const Vec& v) {
  Mat c(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c(static_cast<int>(i), 0) = v[i];
  return c;
}

inline bool is_zero(const Mat& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Number of nonzero entries.
inline long long nnz(const Mat& a) {
  long long n = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) ++n;
  return n;
}

inline long long l0(const Vec& v) {
  long long n = 0;
  for (const auto& x : v)
    if (x != 0) ++n;
  return n;
}

inline std::vector<int> support(const Vec& v) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec-: lengths differ");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec+: lengths differ");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec operator*(const Rat& s, const Vec& v) {
  Vec c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
  return c;
}

}  // namespace ratlinalg
