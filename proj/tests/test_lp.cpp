#include "doctest.h"

#include <numeric>

#include "lp/simplex.hpp"
#include "test_util.hpp"

using namespace lp;
using namespace ratlinalg;

TEST_SUITE("lp") {

TEST_CASE("simplex trivial equality") {
  LpProblem p;
  p.objective = {Rat(1)};
  p.constraints = Mat{{1}};
  p.rhs = {Rat(3)};
  p.lower_bounds = {Rat(0)};
  const auto out = simplex_solve(p);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(*out.solution == Vec{Rat(3)});
  CHECK(*out.objective_value == 3);
}

TEST_CASE("simplex unbounded") {
  LpProblem p;
  p.objective = {Rat(-1)};
  p.constraints = Mat(0, 1);
  p.rhs = {};
  p.lower_bounds = {Rat(0)};
  CHECK(simplex_solve(p).status == LpStatus::unbounded);
}

TEST_CASE("simplex forced objective") {
  LpProblem p;
  p.objective = {Rat(1), Rat(1)};
  p.constraints = Mat{{1, 1}};
  p.rhs = {Rat(1)};
  p.lower_bounds = {Rat(0), Rat(0)};
  const auto out = simplex_solve(p);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(*out.objective_value == 1);
}

TEST_CASE("simplex infeasible") {
  LpProblem p;
  p.objective = {Rat(0)};
  p.constraints = Mat{{1}, {1}};
  p.rhs = {Rat(1), Rat(2)};
  p.lower_bounds = {std::nullopt};
  CHECK(simplex_solve(p).status == LpStatus::infeasible);
}

TEST_CASE("optimal solutions satisfy constraints exactly") {
  std::mt19937_64 rng(21);
  int optimal_seen = 0;
  for (int t = 0; t < 40; ++t) {
    const int m = testutil::rand_int(rng, 1, 3), n = testutil::rand_int(rng, 2, 5);
    LpProblem p;
    p.constraints = testutil::rand_mat(rng, m, n, 3);
    p.rhs = testutil::rand_vec(rng, m, 3);
    p.objective = Vec(n, Rat(1));
    p.lower_bounds.assign(n, Rat(0));
    const auto out = simplex_solve(p);
    if (out.status != LpStatus::optimal) continue;
    ++optimal_seen;
    CHECK(p.constraints * *out.solution == p.rhs);
    Rat v;
    for (int j = 0; j < n; ++j) {
      CHECK((*out.solution)[j] >= 0);
      v += p.objective[j] * (*out.solution)[j];
    }
    CHECK(v == *out.objective_value);
  }
  CHECK(optimal_seen > 5);
}

TEST_CASE("duality spot-check on instances with certified optima") {
  // Build (A, b, c) so that x* is primal feasible, y* dual feasible and
  // complementary slackness holds; then min c.x = c.x* = b.y*.
  std::mt19937_64 rng(22);
  for (int t = 0; t < 25; ++t) {
    const int k = testutil::rand_int(rng, 1, 3);
    const int n = testutil::rand_int(rng, k + 1, k + 3);
    Mat cons = testutil::rand_mat(rng, k, n, 3);
    Vec xstar(n, Rat(0));
    for (int i = 0; i < k; ++i) xstar[i] = Rat(testutil::rand_int(rng, 0, 4));
    const Vec b = cons * xstar;
    Vec ystar = testutil::rand_vec(rng, k, 2);
    Vec c(n);
    const Mat ct = ratlinalg::transpose(cons);
    const Vec aty = ct * ystar;
    for (int j = 0; j < n; ++j)
      c[j] = aty[j] + (xstar[j] != 0 ? Rat(0) : Rat(testutil::rand_int(rng, 1, 3)));
    LpProblem p{c, cons, b, {}};
    p.lower_bounds.assign(n, Rat(0));
    const auto out = simplex_solve(p);
    REQUIRE(out.status == LpStatus::optimal);
    Rat expect;
    for (int j = 0; j < n; ++j) expect += c[j] * xstar[j];
    Rat dual;
    for (int i = 0; i < k; ++i) dual += b[i] * ystar[i];
    CHECK(expect == dual);
    CHECK(*out.objective_value == expect);
  }
}

TEST_CASE("Bland's rule terminates on Beale's cycling instance") {
  // min -3/4 x4 + 150 x5 - 1/50 x6 + 6 x7 over Beale's classic tableau.
  LpProblem p;
  p.objective = {Rat(0), Rat(0), Rat(0), Rat(-3, 4), Rat(150), Rat(-1, 50), Rat(6)};
  p.constraints = Mat{
      {1, 0, 0, Rat(1, 4), -60, Rat(-1, 25), 9},
      {0, 1, 0, Rat(1, 2), -90, Rat(-1, 50), 3},
      {0, 0, 1, 0, 0, 1, 0},
  };
  p.rhs = {Rat(0), Rat(0), Rat(1)};
  p.lower_bounds.assign(7, Rat(0));
  const auto out = simplex_solve(p);
  REQUIRE(out.status == LpStatus::optimal);

  // Independent oracle: enumerate all basic solutions of the 3x7 system.
  Rat best;
  bool found = false;
  std::vector<int> cols{0, 1, 2};
  do {
    const Mat basis = ratlinalg::select_cols(p.constraints, cols);
    if (ratlinalg::det(basis) == 0) continue;
    const auto xb = ratlinalg::particular_solution(basis, p.rhs);
    bool feas = true;
    Rat val;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if ((*xb)[i] < 0) feas = false;
      val += p.objective[cols[i]] * (*xb)[i];
    }
    if (feas && (!found || val < best)) {
      best = val;
      found = true;
    }
  } while (ratlinalg::next_combination(cols, 7));
  REQUIRE(found);
  CHECK(*out.objective_value == best);
  CHECK(best == Rat(-1, 20));
}

TEST_CASE("l1_min_equality identity") {
  const Vec s{Rat(2), Rat(-3)};
  const auto v = l1_min_equality(Mat::identity(2), s);
  REQUIRE(v.has_value());
  CHECK(*v == s);
}

TEST_CASE("l1_min_equality picks the sparse vertex") {
  // Vertices of {v : v1 + 2 v2 = 2} with minimal support: (2,0) and (0,1);
  // the l1 optimum among them is (0,1) with norm 1.
  const auto v = l1_min_equality(Mat{{1, 2}}, {Rat(2)});
  REQUIRE(v.has_value());
  CHECK(*v == Vec{Rat(0), Rat(1)});
}

TEST_CASE("l1_min_equality inconsistent") {
  CHECK_FALSE(l1_min_equality(Mat{{1}, {0}}, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("l1_min_equality dominates random feasible points") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    const int m = testutil::rand_int(rng, 1, 3), n = testutil::rand_int(rng, m, 5);
    const Mat d = testutil::rand_mat(rng, m, n, 3);
    const Vec w0 = testutil::rand_vec(rng, n, 3);
    const Vec s = d * w0;
    const auto v = l1_min_equality(d, s);
    REQUIRE(v.has_value());
    CHECK(d * *v == s);
    const Mat nb = null_basis(d);
    for (int k = 0; k < 1000; ++k) {
      Vec w = w0;
      if (nb.cols() > 0) w = w + nb * testutil::rand_vec(rng, nb.cols(), 3);
      CHECK(norms(*v).l1 <= norms(w).l1);
    }
  }
}

TEST_CASE("linf_feasible_below_one no bound block") {
  const Vec g{Rat(1), Rat(-1)};
  const auto h = linf_feasible_below_one(Mat::identity(2), Mat(2, 0), g);
  REQUIRE(h.has_value());
  CHECK(*h == g);
}

TEST_CASE("linf_feasible_below_one forced to one") {
  CHECK_FALSE(linf_feasible_below_one(Mat{{1}}, Mat{{2}}, {Rat(1)}).has_value());
}

TEST_CASE("linf_feasible_below_one finds a strict witness") {
  const auto h = linf_feasible_below_one(Mat{{1}, {0}}, Mat{{0}, {1}}, {Rat(1)});
  REQUIRE(h.has_value());
  CHECK(*h == Vec{Rat(1), Rat(0)});
}

}  // TEST_SUITE
