#pragma once

#include <optional>

#include "problems/instances.hpp"

namespace problems {

/// EDR -> MU: pick any y0 with D y0 = s and a full null matrix A for D;
/// every v with D v = s is y0 - A x for exactly one x, so min-unsatisfy on
/// (A, y0) minimizes ||v||_0 directly.
struct EdrToMu {
  MuInstance target;
  Vec particular;  // y0

  /// v = y0 - A x; D v = s holds for every x and ||v||_0 is the MU metric.
  Vec back_map(const Vec& x) const { return particular - target.a * x; }
};
EdrToMu edr_to_mu(const EdrInstance& inst);

/// MU -> EDR: D is a matrix with A as a full null matrix (found through
/// null space of A^T), s = D y. A rank-deficient A is replaced by its
/// pivot-column basis first; the back-map lifts through that basis.
struct MuToEdr {
  EdrInstance target;
  Mat column_basis;             // A restricted to its pivot columns
  std::vector<int> basis_cols;  // pivot column indices into the original A
  int orig_cols = 0;
  Vec y;

  /// x with A x = y - v, zero on non-basis coordinates.
  Vec back_map(const Vec& v) const;
};
MuToEdr mu_to_edr(const MuInstance& inst);

/// SNS -> MS: sparsify a full null matrix of A. The solution maps back as
/// itself. Absent target when corank(A) = 0: the unique full null matrix
/// is the n x 0 empty matrix and nothing needs solving.
struct SnsToMs {
  std::optional<MsInstance> target;
  Mat degenerate_solution;  // cols(A) x 0 when target is absent
};
SnsToMs sns_to_ms(const SnsInstance& inst);

/// MS -> SNS: build A with B a full null matrix for A (transpose route).
/// The solution maps back as itself. A has zero rows when B is square.
struct MsToSns {
  SnsInstance target;
};
MsToSns ms_to_sns(const MsInstance& inst);

struct TriviallySatisfiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// MU -> SIV: A' = (y | basis(A)) with B' = basis(A) as the suffix, which
/// forces any independent vector to use y. Throws TriviallySatisfiable
/// when y is already in col(A) (the MU optimum is 0 there).
SivInstance mu_to_siv(const MuInstance& inst);

}  // namespace problems
