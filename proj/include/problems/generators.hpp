#pragma once

#include "problems/instances.hpp"

namespace problems {

/// Integer-power Vandermonde: entry (i, j) = i^j for i = 1..m, j = 0..n-1.
/// Every square submatrix is nonsingular, which makes the matrix
/// completely unsparsifiable and stack(I, .) optimally sparse.
/// Requires m >= n >= 1.
Mat gen_unsparsifiable(int m, int n);

/// Hardness-reduction block matrix
///   M = ( I_p (x) y        0      )
///       ( X   (x) y    I_q (x) A  )
/// where X is the bottom q x p block of gen_unsparsifiable(p+q, p).
/// Shape: (p+q)m x (p + q n). Requires q >= p >= 1.
Mat gen_hardness_instance(const MuInstance& inst, int p, int q);

/// Same with the paper's default choice p = q = n^2 (n = cols of A).
Mat gen_hardness_instance(const MuInstance& inst);

}  // namespace problems
