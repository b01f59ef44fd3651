#pragma once

#include <optional>
#include <vector>

#include "ratlinalg/linalg.hpp"

namespace lp {

using ratlinalg::Mat;
using ratlinalg::Rat;
using ratlinalg::Vec;
using ratlinalg::operator+;
using ratlinalg::operator-;
using ratlinalg::operator*;

enum class LpStatus { optimal, infeasible, unbounded };

/// minimize objective . z  subject to  constraints * z = rhs  and
/// z_i >= lower_bounds[i] where a bound is present (free otherwise).
struct LpProblem {
  Vec objective;
  Mat constraints;
  Vec rhs;
  // Empty vector means every variable is free.
  std::vector<std::optional<Rat>> lower_bounds;
};

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  std::optional<Vec> solution;
  std::optional<Rat> objective_value;
};

/// Two-phase primal simplex over Q with Bland's smallest-index rule.
/// Exact and deterministic; infeasible/unbounded are statuses, not errors.
LpOutcome simplex_solve(const LpProblem& p);

/// min ||v||_1 subject to D v = s, via the split v = v+ - v-.
/// Absent when s is outside col(D).
std::optional<Vec> l1_min_equality(const Mat& d, const Vec& s);

/// Finds h with E^T h = g and ||F^T h||_inf < 1, as the LP
///   min t  s.t.  E^T h = g,  -t <= (F^T h)_i <= t,
/// accepting the witness iff the exact optimum satisfies t* < 1.
/// F may have zero columns, in which case only E^T h = g is solved.
std::optional<Vec> linf_feasible_below_one(const Mat& e, const Mat& f, const Vec& g);

}  // namespace lp
