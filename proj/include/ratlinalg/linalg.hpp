#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ratlinalg/mat.hpp"

namespace ratlinalg {

struct RrefResult {
  Mat r;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row-echelon form under exact rational elimination.
RrefResult rref(const Mat& a);

int rank(const Mat& a);
int corank(const Mat& a);

/// Full null matrix: columns form a basis of null(a). Shape cols(a) x corank(a);
/// zero columns when the kernel is trivial.
Mat null_basis(const Mat& a);

/// Some x with a*x = b, free variables pinned to zero; absent when b is not
/// in the column span.
std::optional<Vec> particular_solution(const Mat& a, const Vec& b);

/// Kronecker product: block (i,j) is a(i,j) * b.
Mat kron(const Mat& a, const Mat& b);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Throws on non-square input.
Rat det(const Mat& a);

/// Inverse of a square nonsingular matrix; throws when singular.
Mat inverse(const Mat& a);

/// (A^T A)^-1 A^T; requires full column rank (throws otherwise).
/// pseudoinverse(a) * a = identity.
Mat pseudoinverse(const Mat& a);

struct VecNorms {
  long long l0 = 0;
  Rat l1;
  Rat linf;
};

struct MatNorms {
  long long l0 = 0;  // nnz
  Rat l1;            // entrywise sum of absolute values
  Rat linf;          // max absolute entry
  Rat induced_11;    // operator norm l1 -> l1: maximum column absolute sum
};

VecNorms norms(const Vec& v);
MatNorms norms(const Mat& a);

struct SubsquareScan {
  bool all_nonsingular = true;
  // First violating submatrix (row set, column set) in order of increasing
  // size, then lexicographic rows, then lexicographic columns.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> violation;
};

/// Exhaustively checks every k x k submatrix for k = 1..max_order.
SubsquareScan all_subsquares_nonsingular(const Mat& a, int max_order);

/// Scales a rational direction vector to the canonical representative:
/// integer entries with content 1, first nonzero entry positive.
Vec canonicalize_direction(const Vec& v);

/// Enumerates r-subsets of {0..n-1} in lexicographic order. Returns false
/// when idx was the last subset.
bool next_combination(std::vector<int>& idx, int n);

/// Complement of a sorted index subset within {0..n-1}.
std::vector<int> complement(const std::vector<int>& subset, int n);

inline bool in_span(const Mat& a, const Vec& v) {
  return particular_solution(a, v).has_value();
}

inline Vec select_entries(const Vec& v, const std::vector<int>& idx) {
  Vec out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
  return out;
}

}  // namespace ratlinalg
