#include "solvers/greedy.hpp"

#include <numeric>
#include <optional>

#include "problems/reductions.hpp"

namespace solvers {

namespace {

Mat suffix_cols(const Mat& a, int count) {
  std::vector<int> idx(count);
  std::iota(idx.begin(), idx.end(), a.cols() - count);
  return ratlinalg::select_cols(a, idx);
}

Mat reverse_cols(const Mat& a) {
  std::vector<int> idx(a.cols());
  for (int j = 0; j < a.cols(); ++j) idx[j] = a.cols() - 1 - j;
  return ratlinalg::select_cols(a, idx);
}

}  // namespace

SivResult siv(const SivInstance& inst, const MuOracle& oracle) {
  std::optional<SivResult> best;
  for (int j = 0; j < inst.a.cols(); ++j) {
    const Vec aj = inst.a.col(j);
    if (ratlinalg::in_span(inst.b, aj)) continue;
    const Mat rest = ratlinalg::erase_col(inst.a, j);
    const Vec x = oracle.solve(MuInstance(rest, aj));
    Vec c = rest * x - aj;
    const long long l = ratlinalg::l0(c);
    if (!best || l < best->found_l0) best = SivResult{std::move(c), j, l};
  }
  if (!best) throw std::logic_error("siv: no candidate column, instance invariant violated");
  return *best;
}

Vec siv_bruteforce(const SivInstance& inst, int max_rows) {
  const int m = inst.a.rows();
  if (m > max_rows)
    throw GuardrailExceeded("siv_bruteforce: instance has " + std::to_string(m) +
                            " rows, guardrail is " + std::to_string(max_rows));
  for (int k = 1; k <= m; ++k) {
    std::vector<int> sup(k);
    std::iota(sup.begin(), sup.end(), 0);
    do {
      const Mat a_out = ratlinalg::select_rows(inst.a, ratlinalg::complement(sup, m));
      const Mat coeffs = ratlinalg::null_basis(a_out);
      if (coeffs.cols() > 0) {
        const Mat cands = inst.a * coeffs;
        for (int c = 0; c < cands.cols(); ++c) {
          Vec v = cands.col(c);
          if (!ratlinalg::in_span(inst.b, v)) return v;
        }
      }
    } while (ratlinalg::next_combination(sup, m));
  }
  throw std::logic_error("siv_bruteforce: unreachable for a valid instance");
}

MsResult ms_greedy(const MsInstance& inst, const MuOracle& oracle) {
  const int n = inst.b.cols();
  Mat work = inst.b;
  SolveTrace trace;
  trace.steps.reserve(n);
  for (int it = 0; it < n; ++it) {
    SivInstance query(work, suffix_cols(work, it));
    SivResult r = siv(query, oracle);
    work = ratlinalg::append_col(ratlinalg::erase_col(work, r.replaced_col), r.c);
    trace.steps.push_back({r.replaced_col, r.found_l0, std::move(r.c), std::move(query)});
  }
  Mat out = reverse_cols(work);
  if (ratlinalg::rank(out) != n || ratlinalg::rank(ratlinalg::hcat(inst.b, out)) != n)
    throw std::logic_error("ms_greedy: output is not column-equivalent to the input");
  return {std::move(out), std::move(trace)};
}

Mat ms_recover_transform(const MsInstance& inst, const Mat& b_out) {
  Mat x(inst.b.cols(), b_out.cols());
  for (int j = 0; j < b_out.cols(); ++j) {
    const auto w = ratlinalg::particular_solution(inst.b, b_out.col(j));
    if (!w) throw std::invalid_argument("ms_recover_transform: column outside col(B)");
    for (int i = 0; i < inst.b.cols(); ++i) x(i, j) = (*w)[i];
  }
  return x;
}

Mat sns_solve(const SnsInstance& inst, const MuOracle& oracle) {
  const problems::SnsToMs red = problems::sns_to_ms(inst);
  if (!red.target) return red.degenerate_solution;
  return ms_greedy(*red.target, oracle).b;
}

Vec edr_solve(const EdrInstance& inst, const MuOracle& oracle) {
  const problems::EdrToMu red = problems::edr_to_mu(inst);
  return red.back_map(oracle.solve(red.target));
}

Vec edr_bruteforce(const EdrInstance& inst, int max_cols) {
  const int n = inst.d.cols();
  if (n > max_cols)
    throw GuardrailExceeded("edr_bruteforce: instance has " + std::to_string(n) +
                            " columns, guardrail is " + std::to_string(max_cols));
  for (int k = 0; k <= n; ++k) {
    std::vector<int> sup(k);
    std::iota(sup.begin(), sup.end(), 0);
    do {
      const auto w =
          ratlinalg::particular_solution(ratlinalg::select_cols(inst.d, sup), inst.s);
      if (w) {
        Vec v(n, Rat(0));
        for (int i = 0; i < k; ++i) v[sup[i]] = (*w)[i];
        return v;
      }
    } while (ratlinalg::next_combination(sup, n));
  }
  throw std::logic_error("edr_bruteforce: unreachable, s is in col(D) by the type invariant");
}

long long ms_optimum_bruteforce(const MsInstance& inst, int max_rows) {
  const int n = inst.b.cols();
  Mat work = inst.b;
  long long total = 0;
  for (int it = 0; it < n; ++it) {
    SivInstance query(work, suffix_cols(work, it));
    const Vec v = siv_bruteforce(query, max_rows);
    total += ratlinalg::l0(v);
    // Swap v for a candidate column it depends on; this keeps the span.
    const Vec w = *ratlinalg::particular_solution(work, v);
    int swap_col = -1;
    for (int j = 0; j < query.candidate_cols(); ++j)
      if (w[j] != 0) {
        swap_col = j;
        break;
      }
    work = ratlinalg::append_col(ratlinalg::erase_col(work, swap_col), v);
  }
  return total;
}

long long sns_optimum_bruteforce(const SnsInstance& inst, int max_dim) {
  const Mat nb = ratlinalg::null_basis(inst.a);
  const int n = nb.rows(), c = nb.cols();
  if (c == 0) return 0;
  if (n > max_dim)
    throw GuardrailExceeded("sns_optimum_bruteforce: vectors have " + std::to_string(n) +
                            " coordinates, guardrail is " + std::to_string(max_dim));
  Mat chosen(n, 0);
  long long total = 0;
  for (int pick = 0; pick < c; ++pick) {
    bool found = false;
    for (int k = 1; k <= n && !found; ++k) {
      std::vector<int> sup(k);
      std::iota(sup.begin(), sup.end(), 0);
      do {
        const Mat nb_out = ratlinalg::select_rows(nb, ratlinalg::complement(sup, n));
        const Mat coeffs = ratlinalg::null_basis(nb_out);
        if (coeffs.cols() == 0) continue;
        const Mat cands = nb * coeffs;
        for (int j = 0; j < cands.cols(); ++j) {
          Vec v = cands.col(j);
          if (!ratlinalg::in_span(chosen, v)) {
            chosen = ratlinalg::append_col(chosen, v);
            total += ratlinalg::l0(v);
            found = true;
            break;
          }
        }
      } while (!found && ratlinalg::next_combination(sup, n));
    }
  }
  return total;
}

}  // namespace solvers
