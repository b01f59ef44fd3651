#include "problems/reductions.hpp"

namespace problems {

EdrToMu edr_to_mu(const EdrInstance& inst) {
  // s in col(D) is an EdrInstance invariant, so a solution always exists.
  Vec y0 = *ratlinalg::particular_solution(inst.d, inst.s);
  Mat a = ratlinalg::null_basis(inst.d);
  return EdrToMu{MuInstance(std::move(a), y0), y0};
}

Vec MuToEdr::back_map(const Vec& v) const {
  auto xb = ratlinalg::particular_solution(column_basis, y - v);
  if (!xb) throw std::invalid_argument("MuToEdr::back_map: v is not a feasible EDR solution");
  Vec x(orig_cols, Rat(0));
  for (std::size_t k = 0; k < basis_cols.size(); ++k) x[basis_cols[k]] = (*xb)[k];
  return x;
}

MuToEdr mu_to_edr(const MuInstance& inst) {
  const auto rr = ratlinalg::rref(inst.a);
  const Mat basis = ratlinalg::select_cols(inst.a, rr.pivot_cols);
  const Mat d = ratlinalg::transpose(ratlinalg::null_basis(ratlinalg::transpose(basis)));
  Vec s = d * inst.y;
  return MuToEdr{EdrInstance(d, std::move(s)), basis, rr.pivot_cols, inst.a.cols(), inst.y};
}

SnsToMs sns_to_ms(const SnsInstance& inst) {
  Mat b = ratlinalg::null_basis(inst.a);
  if (b.cols() == 0) return SnsToMs{std::nullopt, Mat(inst.a.cols(), 0)};
  return SnsToMs{MsInstance(std::move(b)), Mat()};
}

MsToSns ms_to_sns(const MsInstance& inst) {
  Mat a = ratlinalg::transpose(ratlinalg::null_basis(ratlinalg::transpose(inst.b)));
  return MsToSns{SnsInstance(std::move(a))};
}

SivInstance mu_to_siv(const MuInstance& inst) {
  if (ratlinalg::particular_solution(inst.a, inst.y).has_value())
    throw TriviallySatisfiable("mu_to_siv: y lies in col(A), the MU optimum is 0");
  const auto rr = ratlinalg::rref(inst.a);
  const Mat basis = ratlinalg::select_cols(inst.a, rr.pivot_cols);
  Mat aprime = ratlinalg::hcat(ratlinalg::from_col(inst.y), basis);
  return SivInstance(std::move(aprime), basis);
}

}  // namespace problems
