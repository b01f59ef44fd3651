#include "lp/simplex.hpp"

#include <stdexcept>

namespace lp {
namespace {

// Standard-form program: min c.x s.t. A x = b, x >= 0, plus the mapping
// back to the caller's variables (shifted or split into x+ - x-).
struct StandardForm {
  Mat a;
  Vec b;
  Vec c;
  // orig var i -> (first std index, second std index or -1, shift)
  struct VarMap {
    int pos;
    int neg;  // -1 when the variable was only shifted
    Rat shift;
  };
  std::vector<VarMap> vars;
};

StandardForm to_standard(const LpProblem& p) {
  const int n = static_cast<int>(p.objective.size());
  const int m = p.constraints.rows();
  if (p.constraints.cols() != n)
    throw std::invalid_argument("simplex_solve: constraint width differs from objective length");
  if (static_cast<int>(p.rhs.size()) != m)
    throw std::invalid_argument("simplex_solve: rhs length differs from constraint rows");
  if (!p.lower_bounds.empty() && static_cast<int>(p.lower_bounds.size()) != n)
    throw std::invalid_argument("simplex_solve: bound list length differs from variable count");

  StandardForm sf;
  sf.vars.resize(n);
  int width = 0;
  for (int j = 0; j < n; ++j) {
    const bool bounded = !p.lower_bounds.empty() && p.lower_bounds[j].has_value();
    if (bounded) {
      sf.vars[j] = {width, -1, *p.lower_bounds[j]};
      width += 1;
    } else {
      sf.vars[j] = {width, width + 1, Rat(0)};
      width += 2;
    }
  }
  sf.a = Mat(m, width);
  sf.b = p.rhs;
  sf.c = Vec(width, Rat(0));
  for (int j = 0; j < n; ++j) {
    const auto& vm = sf.vars[j];
    sf.c[vm.pos] = p.objective[j];
    if (vm.neg >= 0) sf.c[vm.neg] = -p.objective[j];
    for (int i = 0; i < m; ++i) {
      const Rat& aij = p.constraints(i, j);
      if (aij == 0) continue;
      sf.a(i, vm.pos) = aij;
      if (vm.neg >= 0) sf.a(i, vm.neg) = -aij;
      if (vm.neg < 0 && vm.shift != 0) sf.b[i] -= aij * vm.shift;
    }
  }
  return sf;
}

// Dense tableau with explicit basis bookkeeping. Column layout:
// structural variables then artificials; rhs kept separately.
struct Tableau {
  Mat t;                  // m x ncols
  Vec rhs;                // length m
  Vec cost;               // reduced costs, length ncols
  std::vector<int> basis; // basis[r] = variable index of row r

  void pivot(int row, int col) {
    const int m = t.rows(), w = t.cols();
    const Rat inv = Rat(1) / t(row, col);
    for (int j = 0; j < w; ++j) t(row, j) *= inv;
    rhs[row] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || t(i, col) == 0) continue;
      const Rat f = t(i, col);
      for (int j = 0; j < w; ++j) t(i, j) -= f * t(row, j);
      rhs[i] -= f * rhs[row];
    }
    if (cost[col] != 0) {
      const Rat f = cost[col];
      for (int j = 0; j < w; ++j) cost[j] -= f * t(row, j);
    }
    basis[row] = col;
  }

  // Bland's rule: entering = smallest index with negative reduced cost;
  // leaving = minimum ratio, ties by smallest basis variable index.
  // Returns optimal / unbounded.
  bool optimize() {
    const int w = t.cols();
    for (;;) {
      int enter = -1;
      for (int j = 0; j < w; ++j)
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < t.rows(); ++i) {
        if (t(i, enter) <= 0) continue;
        const Rat ratio = rhs[i] / t(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpOutcome simplex_solve(const LpProblem& p) {
  StandardForm sf = to_standard(p);
  const int m = sf.a.rows();
  const int n = sf.a.cols();

  // Phase 1: nonnegative rhs, one artificial per row, minimize their sum.
  for (int i = 0; i < m; ++i) {
    if (sf.b[i] < 0) {
      for (int j = 0; j < n; ++j) sf.a(i, j) = -sf.a(i, j);
      sf.b[i] = -sf.b[i];
    }
  }
  Tableau tab;
  tab.t = hcat(sf.a, Mat::identity(m));
  tab.rhs = sf.b;
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) tab.basis[i] = n + i;
  tab.cost = Vec(n + m, Rat(0));
  for (int j = 0; j < n; ++j) {
    Rat s;
    for (int i = 0; i < m; ++i) s += tab.t(i, j);
    tab.cost[j] = -s;
  }
  Rat phase1_value;
  for (int i = 0; i < m; ++i) phase1_value += tab.rhs[i];

  tab.optimize();  // bounded below by 0, cannot be unbounded
  Rat resid;
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n) resid += tab.rhs[i];
  if (resid != 0) return {LpStatus::infeasible, std::nullopt, std::nullopt};

  // Drive leftover zero-level artificials out of the basis; a row with no
  // structural pivot available is a redundant constraint and is dropped.
  std::vector<int> keep_rows;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) {
      keep_rows.push_back(i);
      continue;
    }
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (tab.t(i, j) != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      tab.pivot(i, col);
      keep_rows.push_back(i);
    }
  }
  Tableau ph2;
  ph2.t = Mat(static_cast<int>(keep_rows.size()), n);
  ph2.rhs = Vec(keep_rows.size());
  ph2.basis.resize(keep_rows.size());
  for (std::size_t r = 0; r < keep_rows.size(); ++r) {
    for (int j = 0; j < n; ++j) ph2.t(static_cast<int>(r), j) = tab.t(keep_rows[r], j);
    ph2.rhs[r] = tab.rhs[keep_rows[r]];
    ph2.basis[r] = tab.basis[keep_rows[r]];
  }
  ph2.cost = sf.c;
  for (std::size_t r = 0; r < keep_rows.size(); ++r) {
    const Rat f = ph2.cost[ph2.basis[r]];
    if (f == 0) continue;
    for (int j = 0; j < n; ++j) ph2.cost[j] -= f * ph2.t(static_cast<int>(r), j);
  }

  if (!ph2.optimize()) return {LpStatus::unbounded, std::nullopt, std::nullopt};

  Vec std_x(n, Rat(0));
  for (std::size_t r = 0; r < ph2.basis.size(); ++r) std_x[ph2.basis[r]] = ph2.rhs[r];
  Vec x(sf.vars.size());
  Rat value;
  for (std::size_t j = 0; j < sf.vars.size(); ++j) {
    const auto& vm = sf.vars[j];
    x[j] = vm.neg >= 0 ? Rat(std_x[vm.pos] - std_x[vm.neg]) : Rat(std_x[vm.pos] + vm.shift);
    value += p.objective[j] * x[j];
  }
  return {LpStatus::optimal, std::move(x), std::move(value)};
}

std::optional<Vec> l1_min_equality(const Mat& d, const Vec& s) {
  const int n = d.cols();
  LpProblem p;
  p.objective = Vec(2 * n, Rat(1));
  p.constraints = hcat(d, Rat(-1) * d);
  p.rhs = s;
  p.lower_bounds.assign(2 * n, Rat(0));
  const LpOutcome out = simplex_solve(p);
  if (out.status != LpStatus::optimal) return std::nullopt;
  Vec v(n);
  for (int j = 0; j < n; ++j) v[j] = (*out.solution)[j] - (*out.solution)[n + j];
  return v;
}

std::optional<Vec> linf_feasible_below_one(const Mat& e, const Mat& f, const Vec& g) {
  if (f.cols() > 0 && f.rows() != e.rows())
    throw std::invalid_argument("linf_feasible_below_one: E and F row counts differ");
  const int m = e.rows();        // length of h
  const int k = e.cols();        // number of equations
  const int fc = f.cols();       // number of bounded functionals
  if (static_cast<int>(g.size()) != k)
    throw std::invalid_argument("linf_feasible_below_one: g length differs from E columns");

  // Variables: h (free, m), t (>= 0), slacks s+ and s- (>= 0, fc each).
  const int nvars = m + 1 + 2 * fc;
  LpProblem p;
  p.objective = Vec(nvars, Rat(0));
  p.objective[m] = 1;
  p.constraints = Mat(k + 2 * fc, nvars);
  p.rhs = Vec(k + 2 * fc, Rat(0));
  for (int r = 0; r < k; ++r) {
    for (int i = 0; i < m; ++i) p.constraints(r, i) = e(i, r);  // (E^T h)_r
    p.rhs[r] = g[r];
  }
  for (int c = 0; c < fc; ++c) {
    const int up = k + 2 * c, down = k + 2 * c + 1;
    for (int i = 0; i < m; ++i) {
      p.constraints(up, i) = f(i, c);       //  (F^T h)_c - t + s+ = 0
      p.constraints(down, i) = -f(i, c);    // -(F^T h)_c - t + s- = 0
    }
    p.constraints(up, m) = -1;
    p.constraints(down, m) = -1;
    p.constraints(up, m + 1 + 2 * c) = 1;
    p.constraints(down, m + 1 + 2 * c + 1) = 1;
  }
  p.lower_bounds.assign(nvars, std::nullopt);
  for (int j = m; j < nvars; ++j) p.lower_bounds[j] = Rat(0);

  const LpOutcome out = simplex_solve(p);
  if (out.status != LpStatus::optimal) return std::nullopt;
  if (*out.objective_value >= 1) return std::nullopt;  // strictness decided exactly
  Vec h(out.solution->begin(), out.solution->begin() + m);
  return h;
}

}  // namespace lp
