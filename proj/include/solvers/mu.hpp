#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "problems/instances.hpp"

namespace solvers {

using problems::EdrInstance;
using problems::MsInstance;
using problems::MuInstance;
using problems::SivInstance;
using problems::SnsInstance;
using ratlinalg::Mat;
using ratlinalg::Rat;
using ratlinalg::Vec;
using ratlinalg::operator+;
using ratlinalg::operator-;
using ratlinalg::operator*;

struct GuardrailExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultExactGuardrail = 18;

/// Exact min-unsatisfy: for k = 0, 1, ... enumerate all row subsets of
/// size m-k in lexicographic order and return the solution of the first
/// consistent subsystem. The residual of the returned x has exactly the
/// optimal number of nonzeros.
Vec mu_bruteforce(const MuInstance& inst, int max_rows = kDefaultExactGuardrail);

/// l1 relaxation: reduce to EDR, minimize ||v||_1 subject to D v = s, and
/// map the minimizer back. No optimality promise without a certificate.
Vec mu_l1(const MuInstance& inst);

/// ||y - A x||_0 for a candidate x.
long long mu_objective(const MuInstance& inst, const Vec& x);

/// Pluggable min-unsatisfy solver. The exact kind is a true optimum within
/// its row guardrail; l1 is the relaxation; external wraps a caller-supplied
/// solver.
struct MuOracle {
  enum class Kind { exact_bruteforce, l1_relaxation, external };

  Kind kind = Kind::exact_bruteforce;
  int max_rows = kDefaultExactGuardrail;
  std::function<Vec(const MuInstance&)> external_fn;

  Vec solve(const MuInstance& inst) const;
  std::string name() const;

  static MuOracle exact(int max_rows = kDefaultExactGuardrail) {
    return MuOracle{Kind::exact_bruteforce, max_rows, nullptr};
  }
  static MuOracle l1() { return MuOracle{Kind::l1_relaxation, 0, nullptr}; }
  static MuOracle external(std::function<Vec(const MuInstance&)> fn) {
    return MuOracle{Kind::external, 0, std::move(fn)};
  }
};

}  // namespace solvers
