#pragma once

#include <stdexcept>
#include <string>

#include "ratlinalg/linalg.hpp"

namespace problems {

using ratlinalg::Mat;
using ratlinalg::Rat;
using ratlinalg::Vec;
using ratlinalg::operator+;
using ratlinalg::operator-;
using ratlinalg::operator*;

/// Sparsest exact representation of s in the column span of the dictionary:
/// minimize ||v||_0 subject to D v = s.
struct EdrInstance {
  Mat d;
  Vec s;

  EdrInstance(Mat d_, Vec s_) : d(std::move(d_)), s(std::move(s_)) {
    if (d.rows() != static_cast<int>(s.size()))
      throw std::invalid_argument("EdrInstance: target length differs from dictionary rows");
    if (!ratlinalg::particular_solution(d, s).has_value())
      throw std::invalid_argument("EdrInstance: target is outside the dictionary span");
  }
};

/// minimize ||y - A x||_0 over x.
struct MuInstance {
  Mat a;
  Vec y;

  MuInstance(Mat a_, Vec y_) : a(std::move(a_)), y(std::move(y_)) {
    if (a.rows() != static_cast<int>(y.size()))
      throw std::invalid_argument("MuInstance: rhs length differs from matrix rows");
  }
};

/// Find a full null matrix for A with as few nonzeros as possible.
struct SnsInstance {
  Mat a;

  explicit SnsInstance(Mat a_) : a(std::move(a_)) {}
};

/// Find N = B X, X invertible, with as few nonzeros as possible.
struct MsInstance {
  Mat b;

  explicit MsInstance(Mat b_) : b(std::move(b_)) {
    if (ratlinalg::rank(b) != b.cols())
      throw std::invalid_argument("MsInstance: matrix does not have full column rank");
  }
};

/// Sparsest vector in col(A) outside col(B), where B is the suffix of A's
/// columns: A = (C | B) with C non-empty. B may have zero columns.
struct SivInstance {
  Mat a;
  Mat b;

  SivInstance(Mat a_, Mat b_) : a(std::move(a_)), b(std::move(b_)) {
    if (b.cols() >= a.cols())
      throw std::invalid_argument("SivInstance: no columns left of the suffix");
    if (b.cols() > 0 && b.rows() != a.rows())
      throw std::invalid_argument("SivInstance: row counts differ");
    if (ratlinalg::rank(a) != a.cols())
      throw std::invalid_argument("SivInstance: matrix does not have full column rank");
    const int off = a.cols() - b.cols();
    for (int j = 0; j < b.cols(); ++j)
      if (a.col(off + j) != b.col(j))
        throw std::invalid_argument("SivInstance: B is not the rightmost column block of A");
  }

  int suffix_cols() const { return b.cols(); }
  int candidate_cols() const { return a.cols() - b.cols(); }
};

// Relaxed variants: data model only. The relaxation norm is carried as an
// uninterpreted tag; no solver semantics are attached.
struct RelaxedParams {
  Rat delta;
  std::string norm_tag;

  RelaxedParams(Rat delta_, std::string norm_tag_)
      : delta(std::move(delta_)), norm_tag(std::move(norm_tag_)) {
    if (delta < 0) throw std::invalid_argument("RelaxedParams: delta must be nonnegative");
  }
};

struct RdrInstance {
  Mat d;
  Vec s;
  RelaxedParams relax;
};

struct RmuInstance {
  Mat a;
  Vec y;
  RelaxedParams relax;
};

struct RsnsInstance {
  Mat a;
  RelaxedParams relax;
};

struct RmsInstance {
  Mat b;
  RelaxedParams relax;
};

}  // namespace problems
