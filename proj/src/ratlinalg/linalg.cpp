#include "ratlinalg/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace ratlinalg {

RrefResult rref(const Mat& a) {
  RrefResult res;
  res.r = a;
  Mat& r = res.r;
  const int m = r.rows(), n = r.cols();
  int lead = 0;
  for (int col = 0; col < n && lead < m; ++col) {
    int piv = -1;
    for (int i = lead; i < m; ++i)
      if (r(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < n; ++j) std::swap(r(piv, j), r(lead, j));
    const Rat inv = Rat(1) / r(lead, col);
    for (int j = col; j < n; ++j) r(lead, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == lead || r(i, col) == 0) continue;
      const Rat f = r(i, col);
      for (int j = col; j < n; ++j) r(i, j) -= f * r(lead, j);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivot_cols.size());
  return res;
}

int rank(const Mat& a) { return rref(a).rank; }

int corank(const Mat& a) { return a.cols() - rank(a); }

Mat null_basis(const Mat& a) {
  const auto rr = rref(a);
  const int n = a.cols();
  std::vector<int> free_cols;
  {
    std::size_t p = 0;
    for (int j = 0; j < n; ++j) {
      if (p < rr.pivot_cols.size() && rr.pivot_cols[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  Mat nb(n, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int f = free_cols[k];
    nb(f, static_cast<int>(k)) = 1;
    for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
      nb(rr.pivot_cols[p], static_cast<int>(k)) = -rr.r(static_cast<int>(p), f);
  }
  return nb;
}

std::optional<Vec> particular_solution(const Mat& a, const Vec& b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("particular_solution: rhs length differs from row count");
  Mat aug = append_col(a, b);
  const auto rr = rref(aug);
  // A pivot in the appended column means b is outside col(a).
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), Rat(0));
  for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
    x[rr.pivot_cols[p]] = rr.r(static_cast<int>(p), a.cols());
  return x;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          c(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return c;
}

Rat det(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
  const int n = a.rows();
  if (n == 0) return Rat(1);
  // Clear denominators row by row, then run integer Bareiss; divide the
  // integer determinant by the product of the row scales at the end.
  std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
  Int scale = 1;
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, denominator(a(i, j)));
    for (int j = 0; j < n; ++j) w[i][j] = numerator(a(i, j)) * (l / denominator(a(i, j)));
    scale *= l;
  }
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Rat(0);
      std::swap(w[k], w[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  return Rat(sign * w[n - 1][n - 1], scale);
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = a.rows();
  const auto rr = rref(hcat(a, Mat::identity(n)));
  int pivots_in_left = 0;
  for (int p : rr.pivot_cols)
    if (p < n) ++pivots_in_left;
  if (pivots_in_left < n) throw std::invalid_argument("inverse: matrix is singular");
  std::vector<int> right(n);
  std::iota(right.begin(), right.end(), n);
  std::vector<int> all_rows(n);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  return submatrix(rr.r, all_rows, right);
}

Mat pseudoinverse(const Mat& a) {
  if (rank(a) != a.cols())
    throw std::invalid_argument("pseudoinverse: matrix does not have full column rank");
  const Mat at = transpose(a);
  return inverse(at * a) * at;
}

VecNorms norms(const Vec& v) {
  VecNorms r;
  for (const auto& x : v) {
    if (x != 0) ++r.l0;
    r.l1 += abs_of(x);
    if (abs_of(x) > r.linf) r.linf = abs_of(x);
  }
  return r;
}

MatNorms norms(const Mat& a) {
  MatNorms r;
  r.l0 = nnz(a);
  for (int j = 0; j < a.cols(); ++j) {
    Rat colsum;
    for (int i = 0; i < a.rows(); ++i) {
      const Rat ax = abs_of(a(i, j));
      r.l1 += ax;
      if (ax > r.linf) r.linf = ax;
      colsum += ax;
    }
    if (colsum > r.induced_11) r.induced_11 = colsum;
  }
  return r;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[i] < n - (r - i)) {
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> complement(const std::vector<int>& subset, int n) {
  std::vector<int> out;
  out.reserve(n - subset.size());
  std::size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < subset.size() && subset[p] == i)
      ++p;
    else
      out.push_back(i);
  }
  return out;
}

SubsquareScan all_subsquares_nonsingular(const Mat& a, int max_order) {
  SubsquareScan scan;
  const int kmax = std::min(max_order, std::min(a.rows(), a.cols()));
  for (int k = 1; k <= kmax; ++k) {
    std::vector<int> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::vector<int> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        if (det(submatrix(a, rows, cols)) == 0) {
          scan.all_nonsingular = false;
          scan.violation = {rows, cols};
          return scan;
        }
      } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
  }
  return scan;
}

Vec canonicalize_direction(const Vec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  std::vector<Int> w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, w[i]);
  }
  if (g == 0) return Vec(v.size(), Rat(0));
  int flip = 1;
  for (const auto& x : w)
    if (x != 0) {
      flip = x < 0 ? -1 : 1;
      break;
    }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(flip * w[i] / g);
  return out;
}

}  // namespace ratlinalg
