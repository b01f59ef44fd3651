#include "problems/generators.hpp"

namespace problems {

Mat gen_unsparsifiable(int m, int n) {
  if (n < 1 || m < n) throw std::invalid_argument("gen_unsparsifiable: need m >= n >= 1");
  Mat v(m, n);
  for (int i = 0; i < m; ++i) {
    ratlinalg::Int p = 1;
    for (int j = 0; j < n; ++j) {
      v(i, j) = Rat(p);
      p *= i + 1;
    }
  }
  return v;
}

Mat gen_hardness_instance(const MuInstance& inst, int p, int q) {
  if (p < 1 || q < p) throw std::invalid_argument("gen_hardness_instance: need q >= p >= 1");
  const int m = inst.a.rows(), n = inst.a.cols();
  const Mat y = ratlinalg::from_col(inst.y);
  const Mat stacked = gen_unsparsifiable(p + q, p);
  std::vector<int> bottom(q);
  for (int i = 0; i < q; ++i) bottom[i] = p + i;
  const Mat x = ratlinalg::select_rows(stacked, bottom);

  const Mat top = ratlinalg::hcat(ratlinalg::kron(Mat::identity(p), y), Mat(p * m, q * n));
  const Mat bot = ratlinalg::hcat(ratlinalg::kron(x, y), ratlinalg::kron(Mat::identity(q), inst.a));
  return ratlinalg::vcat(top, bot);
}

Mat gen_hardness_instance(const MuInstance& inst) {
  const int p = inst.a.cols() * inst.a.cols();
  return gen_hardness_instance(inst, p, p);
}

}  // namespace problems
