#pragma once

#include <vector>

#include "solvers/mu.hpp"

namespace solvers {

struct SivResult {
  Vec c;
  int replaced_col;  // index into the instance's A; always a non-suffix column
  long long found_l0;
};

/// One oracle query per column outside col(B): x = MU(A \ a_j, a_j),
/// candidate c' = (A \ a_j) x - a_j. Keeps the sparsest candidate, ties
/// broken by the lowest column index. With an exact oracle the result is a
/// sparsest vector in col(A) \ col(B).
SivResult siv(const SivInstance& inst, const MuOracle& oracle);

/// Direct search, independent of the MU reduction: for k = 1..m and each
/// row support S of size k in lexicographic order, decide by rank whether
/// col(A) \ col(B) meets the vectors supported inside S; returns the first
/// witness. Its support size is exactly the SIV optimum.
Vec siv_bruteforce(const SivInstance& inst, int max_rows = kDefaultExactGuardrail);

struct TraceStep {
  int replaced_col;
  long long found_l0;
  Vec found;
  SivInstance instance;  // snapshot of the query, for auditing oracle quality
};

struct SolveTrace {
  std::vector<TraceStep> steps;
};

struct MsResult {
  Mat b;
  SolveTrace trace;
};

/// Greedy matrix sparsification: n iterations, each swapping the column
/// returned by siv into the working matrix and growing the solved suffix.
/// Output columns are ordered sparsest-last. With a lambda-approximate
/// oracle the result is a lambda-approximation of the sparsest
/// column-equivalent matrix.
MsResult ms_greedy(const MsInstance& inst, const MuOracle& oracle);

/// X with inst.b * X = b_out (unique for full-column-rank inputs).
Mat ms_recover_transform(const MsInstance& inst, const Mat& b_out);

/// Sparse null basis through the MS reduction; returns the cols(A) x 0
/// matrix when the kernel is trivial.
Mat sns_solve(const SnsInstance& inst, const MuOracle& oracle);

/// Sparsest exact dictionary representation through the MU reduction.
Vec edr_solve(const EdrInstance& inst, const MuOracle& oracle);

// Independent optimum oracles for cross-validation and benchmarks. These
// search supports directly and never go through the reductions they are
// used to check.

/// Sparsest v with D v = s by support enumeration.
Vec edr_bruteforce(const EdrInstance& inst, int max_cols = kDefaultExactGuardrail);

/// Minimum nnz over all column-equivalent matrices, via the greedy loop
/// driven by siv_bruteforce.
long long ms_optimum_bruteforce(const MsInstance& inst, int max_rows = kDefaultExactGuardrail);

/// Minimum nnz over all full null matrices, via the sparsest-basis greedy
/// run directly on the kernel.
long long sns_optimum_bruteforce(const SnsInstance& inst, int max_dim = kDefaultExactGuardrail);

}  // namespace solvers
