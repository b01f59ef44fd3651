#include "solvers/mu.hpp"

#include <numeric>

#include "lp/simplex.hpp"
#include "problems/reductions.hpp"

namespace solvers {

Vec mu_bruteforce(const MuInstance& inst, int max_rows) {
  const int m = inst.a.rows();
  if (m > max_rows)
    throw GuardrailExceeded("mu_bruteforce: instance has " + std::to_string(m) +
                            " rows, guardrail is " + std::to_string(max_rows));
  for (int k = 0; k <= m; ++k) {
    std::vector<int> rows(m - k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      const auto x = ratlinalg::particular_solution(ratlinalg::select_rows(inst.a, rows),
                                                    ratlinalg::select_entries(inst.y, rows));
      if (x) return *x;
    } while (ratlinalg::next_combination(rows, m));
  }
  throw std::logic_error("mu_bruteforce: unreachable, the empty subsystem is consistent");
}

Vec mu_l1(const MuInstance& inst) {
  const problems::MuToEdr red = problems::mu_to_edr(inst);
  const auto v = lp::l1_min_equality(red.target.d, red.target.s);
  // s = D y by construction, so the program is always feasible.
  return red.back_map(*v);
}

long long mu_objective(const MuInstance& inst, const Vec& x) {
  return ratlinalg::l0(inst.y - inst.a * x);
}

Vec MuOracle::solve(const MuInstance& inst) const {
  switch (kind) {
    case Kind::exact_bruteforce:
      return mu_bruteforce(inst, max_rows);
    case Kind::l1_relaxation:
      return mu_l1(inst);
    case Kind::external:
      return external_fn(inst);
  }
  throw std::logic_error("MuOracle::solve: bad kind");
}

std::string MuOracle::name() const {
  switch (kind) {
    case Kind::exact_bruteforce:
      return "exact";
    case Kind::l1_relaxation:
      return "l1";
    case Kind::external:
      return "external";
  }
  return "?";
}

}  // namespace solvers
